//! `scatterkit` command-line front end.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use scatterkit::classify::{class_profile, classify, compactify, derived_order_type, homeomorphic, point_rank};
use scatterkit::finite::{verify_normal_subgroups, FiniteSpace, PermutationGroup, PointSet};
use scatterkit::flows::{check_simply_transitive, lo_space, product_flow_check};
use scatterkit::graph::Graph;
use scatterkit::invariants::{
    descriptor_of, groups_isomorphic, invariants, umf_of_ordinal, umf_of_space, UmfDescriptor, THEOREM_29,
};
use scatterkit::ordinal::Ordinal;
use scatterkit::verify::{Suite, DEFAULT_SEED};
use scatterkit::Limits;

use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(name = "scatterkit", version, about = "Scattered spaces and their homeomorphism groups")]
struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Point bound for brute-force searches (overrides SCATTERKIT_MAX_POINTS).
    #[arg(long, global = true)]
    max_points: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify the ordinal space of an ordinal up to homeomorphism.
    Classify { ordinal: String },
    /// Decide whether two ordinal spaces are homeomorphic.
    Homeomorphic { first: String, second: String },
    /// Cantor-Bendixson rank of a point of an ordinal space.
    Rank {
        point: String,
        #[arg(long)]
        space: String,
    },
    /// Order type of a derived set of an ordinal space.
    Derive {
        ordinal: String,
        #[arg(long)]
        level: String,
    },
    /// Cardinalities of the rank levels of an ordinal space.
    Profile { ordinal: String },
    /// Homeomorphism group descriptor, invariants and universal minimal flow.
    Group { ordinal: String },
    /// Decide whether the homeomorphism groups of two ordinal spaces are isomorphic.
    GroupsIso { first: String, second: String },
    /// Analyse a finite space given as `name: members...` lines.
    Fspace(FspaceArgs),
    /// Encode a graph as a finite space.
    EncodeGraph {
        file: PathBuf,
        /// Check that the homeomorphism group matches the automorphism group.
        #[arg(long)]
        verify: bool,
    },
    /// Linear orders and the action of permutations on them.
    Flows(FlowsArgs),
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct FspaceArgs {
    file: PathBuf,
    /// Print the homeomorphism group.
    #[arg(long)]
    group: bool,
    /// Enumerate normal subgroups and compare with the class-wise candidates.
    #[arg(long)]
    normal: bool,
    /// Check full transitivity and report the universal minimal flow.
    #[arg(long)]
    full_transitivity: bool,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct FlowsArgs {
    /// Check the action of Sym(n) on the orders of n points.
    #[arg(long)]
    n: Option<usize>,
    /// Check the action of Homeo(X) on the product flow of a finite space.
    #[arg(long)]
    fspace: Option<PathBuf>,
}

/// A failed command and the exit code it maps to.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<scatterkit::Error> for Failure {
    fn from(e: scatterkit::Error) -> Self {
        if e.is_syntax() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = Result<(Report, bool), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut limits = Limits::from_env();
    if let Some(n) = cli.max_points {
        limits = limits.with_max_points(n);
    }
    match run(cli.command, &limits) {
        Ok((report, ok)) => {
            print!("{}", report.render(cli.format));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn ordinal(text: &str) -> Result<Ordinal, Failure> {
    text.parse::<Ordinal>()
        .map_err(|e| Failure::from(scatterkit::Error::from(e)))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command, limits: &Limits) -> Outcome {
    let mut r = Report::default();
    let mut ok = true;
    match command {
        Command::Classify { ordinal: text } => {
            let gamma = ordinal(&text)?;
            let class = classify(&gamma);
            r.line("input", &gamma)
                .line("family", class.family())
                .line("class", &class)
                .line("canonical", class.representative())
                .line("compact", class.is_compact());
            if !class.is_compact() {
                r.line("compactification", compactify(&gamma));
            }
        }
        Command::Homeomorphic { first, second } => {
            let (a, b) = (ordinal(&first)?, ordinal(&second)?);
            r.line("first", classify(&a))
                .line("second", classify(&b))
                .line("homeomorphic", homeomorphic(&a, &b));
        }
        Command::Rank { point, space } => {
            let (x, gamma) = (ordinal(&point)?, ordinal(&space)?);
            r.line("point", &x).line("space", &gamma).line("rank", point_rank(&x, &gamma)?);
        }
        Command::Derive { ordinal: text, level } => {
            let (gamma, beta) = (ordinal(&text)?, ordinal(&level)?);
            r.line("space", &gamma)
                .line("level", &beta)
                .line("order_type", derived_order_type(&gamma, &beta));
        }
        Command::Profile { ordinal: text } => {
            let gamma = ordinal(&text)?;
            let profile = class_profile(&gamma);
            r.line("space", &gamma)
                .line("cb_rank", profile.cb_rank())
                .line("profile", &profile);
        }
        Command::Group { ordinal: text } => {
            let gamma = ordinal(&text)?;
            let d = descriptor_of(&gamma);
            let inv = invariants(&d);
            r.line("space", &gamma)
                .line("descriptor", &d)
                .fact("invariants", &inv, if d.is_finite() { "" } else { THEOREM_29 });
            umf_lines(&mut r, &umf_of_ordinal(&gamma));
        }
        Command::GroupsIso { first, second } => {
            let (a, b) = (descriptor_of(&ordinal(&first)?), descriptor_of(&ordinal(&second)?));
            let decision = groups_isomorphic(&a, &b);
            r.line("first", &a)
                .line("second", &b)
                .line("first.invariants", invariants(&a))
                .line("second.invariants", invariants(&b))
                .fact("answer", decision.answer, decision.citation.unwrap_or(""))
                .line("justification", &decision.justification);
        }
        Command::Fspace(args) => {
            let space = FiniteSpace::parse(&read(&args.file)?)?;
            ok = fspace(&mut r, &space, &args, limits)?;
        }
        Command::EncodeGraph { file, verify } => {
            let graph = Graph::parse(&read(&file)?)?;
            let space = graph.encode();
            r.line("vertices", graph.vertex_count())
                .line("edges", graph.edges().len())
                .line("points", space.len());
            for x in 0..space.len() {
                r.line(format!("min_open.{}", space.name(x)), set(&space, space.min_open(x)));
            }
            if verify {
                let rep = graph.verify_realization(limits)?;
                r.line("t0", rep.t0)
                    .line("scattered", rep.scattered)
                    .line("homeo_order", rep.homeo_order)
                    .line("aut_order", rep.aut_order)
                    .fact("realisation", pass(rep.passed()), "Proposition 24");
                for (i, f) in rep.failures.iter().enumerate() {
                    r.line(format!("failure.{}", i + 1), f);
                }
                ok = rep.passed();
            }
        }
        Command::Flows(args) => {
            if let Some(n) = args.n {
                let orders = lo_space(n, limits)?;
                let simple = check_simply_transitive(n, limits)?;
                r.line("n", n)
                    .line("orders", orders.len())
                    .line("sym_order", orders.len())
                    .fact("simply_transitive", simple, "Theorem 15");
                ok = simple;
            } else if let Some(path) = args.fspace {
                let space = FiniteSpace::parse(&read(&path)?)?;
                let rep = product_flow_check(&space, limits)?;
                let sizes: Vec<String> = rep.factor_sizes.iter().map(|s| format!("LO({s})")).collect();
                r.line("flow", sizes.join(" x "))
                    .line("flow_size", rep.flow_size)
                    .line("homeo_order", rep.group_order)
                    .fact("simply_transitive", rep.simply_transitive, "Theorem 15")
                    .fact("minimal", rep.minimal, "Theorem 15");
                ok = rep.passed();
            }
        }
        Command::Verify { suite, seed } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse::<Suite>().map_err(Failure::Usage)?]
            };
            r.line("seed", seed);
            for s in suites {
                let rep = s.run(seed, limits)?;
                let good = rep.passed() && rep.within_budget();
                ok &= good;
                let key = format!("criterion.{}.{}", s.criterion(), s.name());
                r.line(&key, pass(good))
                    .line(format!("{key}.checks"), rep.checks)
                    .line(format!("{key}.failed"), rep.failed)
                    .line(format!("{key}.elapsed_ms"), rep.elapsed.as_millis())
                    .line(format!("{key}.budget_ms"), s.budget().as_millis());
                for (i, note) in rep.notes.iter().enumerate() {
                    r.line(format!("{key}.note.{}", i + 1), note);
                }
                for (i, f) in rep.failures.iter().enumerate() {
                    r.line(format!("{key}.failure.{}", i + 1), f);
                }
            }
        }
    }
    Ok((r, ok))
}

fn fspace(r: &mut Report, space: &FiniteSpace, args: &FspaceArgs, limits: &Limits) -> Result<bool, Failure> {
    let sep = space.separation_report();
    let cb = space.cb_data();
    r.line("points", space.len())
        .line("t0", sep.t0)
        .line("t1", sep.t1)
        .line("scattered", sep.scattered)
        .line("cb_rank", cb.cb_rank);
    for x in 0..space.len() {
        let rank = cb.ranks[x].map_or("kernel".to_string(), |k| k.to_string());
        r.line(format!("rank.{}", space.name(x)), rank);
    }
    let partition = space.similarity_partition();
    let classes: Vec<String> = partition.blocks.iter().map(|&b| set(space, b)).collect();
    r.line("similarity_classes", classes.join(" "));

    if args.group {
        let group = space.homeo_group(limits)?;
        r.line("homeo_order", group.order())
            .line("generators", generators(&group, space));
    }
    let mut ok = true;
    if args.full_transitivity {
        let ft = space.is_fully_transitive(limits)?;
        r.line("homeo_order", ft.homeo_order)
            .line("class_factorial_product", ft.class_factorial_product)
            .line("direct_check", ft.direct)
            .line("order_test", ft.order_test)
            .fact("fully_transitive", ft.fully_transitive, "Definition 12");
        if let Some((a, b)) = &ft.counterexample {
            let names = |t: &[usize]| t.iter().map(|&x| space.name(x)).collect::<Vec<_>>().join(",");
            r.line("counterexample", format!("({}) -> ({})", names(a), names(b)));
        }
        if ft.fully_transitive {
            umf_lines(r, &umf_of_space(space, limits)?);
        }
    }
    if args.normal {
        let rep = verify_normal_subgroups(space, limits)?;
        r.line("normal_subgroups", rep.normal.len());
        for (i, n) in rep.normal.iter().enumerate() {
            r.line(format!("normal.{}", i + 1), format!("order {} generated by {}", n.order(), generators(n, space)));
        }
        r.line("candidates", rep.candidates.len());
        for (i, c) in rep.candidates.iter().enumerate() {
            r.line(
                format!("candidate.{}", i + 1),
                format!("{} (order {})", c.describe(space, &rep.blocks), c.subgroup.order()),
            );
        }
        r.line("non_normal_candidates", rep.non_normal_candidates.len())
            .line("off_list", rep.off_list.len());
        for (i, g) in rep.off_list.iter().enumerate() {
            r.line(format!("off_list.{}", i + 1), format!("order {} generated by {}", g.order(), generators(g, space)));
        }
        r.fact("candidates_exact", rep.exact_match(), "Remark 19");
        ok = rep.non_normal_candidates.is_empty();
    }
    Ok(ok)
}

fn umf_lines(r: &mut Report, umf: &UmfDescriptor) {
    r.fact("umf", umf.shape(), umf.citation("universal minimal flow"))
        .line("umf.factors", umf.factor_count());
    for (i, f) in umf.factors.iter().enumerate() {
        r.line(
            format!("umf.factor.{}", i + 1),
            format!("{}, size {}, multiplicity {}", f.label, f.cardinality, f.multiplicity),
        );
    }
    r.fact("metrisable", umf.metrisable, umf.citation("metrisable"))
        .fact("amenable", umf.amenable, umf.citation("amenable"))
        .fact("roelcke_precompact", umf.roelcke_precompact, umf.citation("Roelcke-precompact"));
}

fn set(space: &FiniteSpace, s: PointSet) -> String {
    format!("{{{}}}", space.set_names(s).join(","))
}

fn generators(group: &PermutationGroup, space: &FiniteSpace) -> String {
    let gens: Vec<String> = group.generators().iter().map(|g| g.cycle_string(space.names())).collect();
    if gens.is_empty() {
        "()".to_string()
    } else {
        gens.join(" ")
    }
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
