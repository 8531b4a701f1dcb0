//! Seeded verification suites, each checking one family of results against
//! an independent reference computation.

pub mod oracles;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{self, SpaceClass};
use crate::finite::{normal_subgroups, verify_normal_subgroups, FiniteSpace, PointSet};
use crate::flows;
use crate::graph::Graph;
use crate::invariants::{self, Answer, GroupDescriptor};
use crate::ordinal::Ordinal;
use crate::{Error, Limits, Result};

pub const DEFAULT_SEED: u64 = 20_201_027;

const MAX_REPORTED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Arith,
    Classifier,
    Cb,
    Prop24,
    Transitivity,
    Flows,
    Oracle,
    Remark19,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Arith,
        Suite::Classifier,
        Suite::Cb,
        Suite::Prop24,
        Suite::Transitivity,
        Suite::Flows,
        Suite::Oracle,
        Suite::Remark19,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Classifier => "classifier",
            Suite::Cb => "cb",
            Suite::Prop24 => "prop24",
            Suite::Transitivity => "transitivity",
            Suite::Flows => "flows",
            Suite::Oracle => "oracle",
            Suite::Remark19 => "remark19",
        }
    }

    /// Acceptance criterion number.
    pub fn criterion(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") + 1
    }

    /// Wall-clock budget.
    pub fn budget(self) -> Duration {
        Duration::from_secs(match self {
            Suite::Arith | Suite::Oracle => 5,
            Suite::Classifier | Suite::Cb => 10,
            Suite::Prop24 | Suite::Transitivity => 120,
            Suite::Flows | Suite::Remark19 => 60,
        })
    }

    pub fn run(self, seed: u64, limits: &Limits) -> Result<SuiteReport> {
        let mut report = SuiteReport::new(self);
        let start = Instant::now();
        match self {
            Suite::Arith => arith(&mut report, seed),
            Suite::Classifier => classifier(&mut report, seed),
            Suite::Cb => cb(&mut report),
            Suite::Prop24 => prop24(&mut report, seed, limits)?,
            Suite::Transitivity => transitivity(&mut report, limits)?,
            Suite::Flows => flows_suite(&mut report, limits)?,
            Suite::Oracle => oracle(&mut report),
            Suite::Remark19 => remark19(&mut report, limits)?,
        }
        report.elapsed = start.elapsed();
        Ok(report)
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: u64,
    pub failed: u64,
    /// The first few failures.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.suite.budget()
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn omega_pow(e: &Ordinal) -> Ordinal {
    Ordinal::omega_pow(e.clone())
}

fn arith(report: &mut SuiteReport, seed: u64) {
    let pool = oracles::exponent_pool();
    let mut exps = pool.clone();
    exps.insert(0, Ordinal::zero());
    let mut r = rng(seed, 1);
    for _ in 0..10_000 {
        let a = oracles::random_any(&mut r, &pool);
        let b = oracles::random_any(&mut r, &pool);
        let c = oracles::random_any(&mut r, &pool);

        let ab = &a + &b;
        report.check(ab == oracles::add(&a, &b), || format!("{a} + {b} = {ab} disagrees with rewriting"));
        let left = &ab + &c;
        let right = &a + &(&b + &c);
        report.check(left == right, || format!("({a} + {b}) + {c} = {left} but {a} + ({b} + {c}) = {right}"));
        report.check(&a + &Ordinal::zero() == a && &Ordinal::zero() + &a == a, || {
            format!("0 is not neutral for {a}")
        });

        // left absorption: the part of a below w^e disappears in front of w^e
        let e = &exps[r.gen_range(0..exps.len())];
        let power = omega_pow(e);
        let small = Ordinal::from_terms(
            a.terms()
                .iter()
                .filter(|t| t.exponent() < e)
                .map(|t| (t.exponent().clone(), t.coefficient().clone())),
        )
        .expect("subsequence of a normal form");
        report.check(small < power && &small + &power == power, || {
            format!("{small} + w^({e}) is not w^({e})")
        });

        // division round trip
        let beta = &exps[r.gen_range(0..exps.len())];
        let (q, rem) = a.divide_by_power(beta);
        let back = &Ordinal::mul_power(beta, &q) + &rem;
        report.check(back == a && rem < omega_pow(beta), || {
            format!("{a} = w^({beta})*{q} + {rem} fails")
        });

        // strict monotonicity in the right argument
        if b != c {
            let (lo, hi) = if b < c { (&b, &c) } else { (&c, &b) };
            report.check(&a + lo < &a + hi, || format!("{a} + {lo} is not below {a} + {hi}"));
        }
    }
}

fn classifier(report: &mut SuiteReport, seed: u64) {
    let pool = oracles::exponent_pool();
    let mut r = rng(seed, 2);
    for _ in 0..1_000 {
        let g = oracles::random_any(&mut r, &pool);
        let canon = classify::canonical(&g);
        report.check(classify::classify(&canon) == classify::classify(&g), || {
            format!("classify(canonical({g})) differs from classify({g})")
        });
        report.check(classify::canonical(&canon) == canon, || format!("canonical not idempotent at {g}"));
        report.check(canon == oracles::canonical(&g), || {
            format!("canonical({g}) = {canon}, rewriting gives {}", oracles::canonical(&g))
        });
    }
    for _ in 0..500 {
        let a = oracles::random_ordinal(&mut r, &pool);
        let b = oracles::random_ordinal(&mut r, &pool);
        let one = Ordinal::one();
        let lhs = &(&a + &b) + &one;
        let rhs = &(&b + &a) + &one;
        report.check(classify::homeomorphic(&lhs, &rhs), || {
            format!("{a} + {b} + 1 and {b} + {a} + 1 classify differently")
        });
        let c = oracles::random_any(&mut r, &pool);
        if !c.is_zero() {
            let lhs = &(&a + &b) + &c;
            let rhs = &(&b + &a) + &c;
            report.check(classify::homeomorphic(&lhs, &rhs), || {
                format!("{a} + {b} + {c} and {b} + {a} + {c} classify differently")
            });
        }
    }

    let classes = canonical_grid(&pool);
    let reps: Vec<Ordinal> = classes.iter().map(SpaceClass::representative).collect();
    for (i, class) in classes.iter().enumerate() {
        report.check(&classify::classify(&reps[i]) == class, || format!("{class} does not round-trip"));
        for j in 0..i {
            report.check(!classify::homeomorphic(&reps[i], &reps[j]), || {
                format!("{} and {} classified as homeomorphic", reps[i], reps[j])
            });
        }
    }
    report.notes.push(format!("{} canonical classes compared pairwise", classes.len()));

    for class in &classes {
        if let SpaceClass::LimitPure { alpha, k } | SpaceClass::LimitMixed { alpha, k, .. } = class {
            let compact = classify::compactify(&class.representative());
            let expect = SpaceClass::CompactInfinite { alpha: alpha.clone(), k: k.clone() };
            report.check(classify::classify(&compact) == expect, || {
                format!("compactification of {class} is not {expect}")
            });
        }
    }
}

fn canonical_grid(pool: &[Ordinal]) -> Vec<SpaceClass> {
    let mut out: Vec<SpaceClass> = (0..=4u32).map(|k| SpaceClass::Finite(BigUint::from(k))).collect();
    for alpha in pool {
        for k in 1..=4u32 {
            let k = BigUint::from(k);
            out.push(SpaceClass::CompactInfinite { alpha: alpha.clone(), k: k.clone() });
            out.push(SpaceClass::LimitPure { alpha: alpha.clone(), k: k.clone() });
            for beta in pool.iter().filter(|b| *b < alpha) {
                out.push(SpaceClass::LimitMixed {
                    alpha: alpha.clone(),
                    k: k.clone(),
                    beta: beta.clone(),
                });
            }
        }
    }
    out
}

fn cb(report: &mut SuiteReport) {
    const MAX_RANK: usize = 3;
    for a in 0..=4 {
        for b in 0..=4 {
            for c in 0..=4 {
                let gamma = oracles::TripleSet::value(a, b, c);
                let mut level = oracles::TripleSet::interval(a, b, c);
                for beta in 0..=MAX_RANK {
                    let got = classify::derived_order_type(&gamma, &Ordinal::nat(beta as u64));
                    let want = level.order_type();
                    report.check(got == want, || {
                        format!("derived_order_type({gamma}, {beta}) = {got}, iteration gives {want}")
                    });
                    level = level.derived();
                }

                let space = oracles::TripleSet::interval(a, b, c);
                // values 0..=5 cover every distinct case, 9 stands for a large digit
                for x in 0..=a {
                    for y in [0, 1, 2, 3, 4, 5, 9] {
                        for z in [0, 1, 2, 3, 4, 5, 9] {
                            let Some(rank) = space.rank_of(x, y, z, MAX_RANK) else {
                                continue;
                            };
                            let point = oracles::TripleSet::value(x, y, z);
                            let got = classify::point_rank(&point, &gamma);
                            report.check(
                                matches!(&got, Ok(r) if *r == Ordinal::nat(rank as u64)),
                                || format!("point_rank({point}, {gamma}) = {got:?}, iteration gives {rank}"),
                            );
                        }
                    }
                }
                report.check(
                    matches!(classify::point_rank(&gamma, &gamma), Err(Error::OutOfSpace { .. })),
                    || format!("point_rank({gamma}, {gamma}) accepted"),
                );
            }
        }
    }
}

fn prop24(report: &mut SuiteReport, seed: u64, limits: &Limits) -> Result<()> {
    let mut graphs: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    for n in 2..=5 {
        graphs.extend(oracles::graphs_up_to_isomorphism(n).into_iter().map(|e| (n, e)));
    }
    let exhaustive = graphs.len();
    let mut r = rng(seed, 4);
    while graphs.len() < exhaustive + 100 {
        let edges: Vec<(usize, usize)> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
            .filter(|_| r.gen_bool(0.5))
            .collect();
        if !edges.is_empty() {
            graphs.push((6, edges));
        }
    }
    for (n, edges) in &graphs {
        let g = Graph::numbered(*n, edges.iter().copied())?;
        let rep = g.verify_realization(limits)?;
        report.check(rep.passed(), || format!("graph {edges:?} on {n} vertices: {:?}", rep.failures));
        let brute = oracles::graph_automorphism_count(*n, edges);
        report.check(rep.aut_order == brute && rep.homeo_order == brute, || {
            format!(
                "graph {edges:?}: |Aut| = {}, |Homeo| = {}, brute force {brute}",
                rep.aut_order, rep.homeo_order
            )
        });
        report.check(rep.t0 && rep.scattered, || format!("graph {edges:?}: encoding not T0 and scattered"));
    }
    report.notes.push(format!(
        "{exhaustive} graphs up to isomorphism on at most 5 vertices, 100 random on 6"
    ));
    Ok(())
}

fn transitivity(report: &mut SuiteReport, limits: &Limits) -> Result<()> {
    let mut t0_count = 0;
    for n in 0..=4 {
        for space in oracles::all_topologies(n) {
            let sep = space.separation_report();
            let t0 = oracles::is_t0(&space);
            let scattered = oracles::is_scattered(&space);
            report.check(t0 == scattered, || format!("T0 and scattered differ on\n{space}"));
            report.check(sep.t0 == t0 && sep.scattered == scattered, || {
                format!("separation report {sep:?} wrong on\n{space}")
            });
            if !t0 {
                continue;
            }
            t0_count += 1;

            let brute_group = oracles::homeomorphisms(&space);
            let group = space.homeo_group(limits)?;
            report.check(group.order() == brute_group.len(), || {
                format!("|Homeo| = {} but brute force finds {} on\n{space}", group.order(), brute_group.len())
            });

            let sim: Vec<Vec<bool>> = (0..n)
                .map(|x| (0..n).map(|y| space.similar_exhaustive(x, y).expect("small space")).collect())
                .collect();
            let similar = |x: usize, y: usize| sim[x][y];
            let partition = space.similarity_partition();
            for x in 0..n {
                for y in 0..n {
                    let same_block = partition.block_of[x] == partition.block_of[y];
                    report.check(similar(x, y) == same_block, || {
                        format!("similarity of {x} and {y} wrong on\n{space}")
                    });
                }
            }
            for g in &brute_group {
                report.check(partition.blocks.iter().all(|&b| g.image_of(b) == b), || {
                    format!("a homeomorphism moves a similarity class on\n{space}")
                });
            }
            let sizes: Vec<u64> = partition.blocks.iter().map(|b| b.len() as u64).collect();
            let order_formula = brute_group.len() as u64 == sizes.iter().map(|&s| oracles::factorial(s)).product::<u64>();
            let direct = oracles::fully_transitive(n, &brute_group, &similar);
            report.check(direct == order_formula, || {
                format!("direct check {direct} but order formula {order_formula} on\n{space}")
            });
            match space.is_fully_transitive(limits) {
                Ok(ft) => report.check(ft.fully_transitive == direct && ft.order_test == order_formula, || {
                    format!("library reports {ft:?}, brute force {direct} on\n{space}")
                }),
                Err(e) => report.check(false, || format!("library failed with {e} on\n{space}")),
            }
        }
    }
    report.notes.push(format!("{t0_count} labeled T0 topologies on at most 4 points"));
    Ok(())
}

fn flows_suite(report: &mut SuiteReport, limits: &Limits) -> Result<()> {
    for n in 0..=5 {
        let orders = flows::lo_space(n, limits)?;
        report.check(orders.len() as u64 == oracles::factorial(n as u64), || {
            format!("|LO({n})| = {}", orders.len())
        });
        report.check(flows::check_simply_transitive(n, limits)?, || {
            format!("Sym({n}) is not simply transitive on LO({n})")
        });
        let perms = crate::finite::all_perms(n);
        let id = crate::finite::Perm::identity(n);
        for ord in &orders {
            report.check(&flows::act(&id, ord)? == ord, || format!("identity moves {ord}"));
        }
        for ord in &orders {
            for g in &perms {
                let gord = flows::act(g, ord)?;
                for h in &perms {
                    let lhs = flows::act(h, &gord)?;
                    let rhs = flows::act(&h.compose(g), ord)?;
                    report.check(lhs == rhs, || format!("action law fails at {ord}"));
                }
            }
        }
    }
    let mut spaces = 0;
    for n in 0..=4 {
        for space in oracles::all_topologies(n) {
            if !oracles::is_t0(&space) || !space.is_fully_transitive(limits)?.fully_transitive {
                continue;
            }
            spaces += 1;
            let rep = flows::product_flow_check(&space, limits)?;
            report.check(rep.passed(), || format!("product flow check fails on\n{space}"));
        }
    }
    report.notes.push(format!("{spaces} fully transitive T0 spaces checked"));
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Shape {
    family: char,
    alpha: Ordinal,
    k: u64,
    beta: Ordinal,
}

fn shape(d: &GroupDescriptor) -> Shape {
    let small = |k: &BigUint| u64::try_from(k).expect("small coefficient");
    match d {
        GroupDescriptor::G { alpha, k } => Shape { family: 'G', alpha: alpha.clone(), k: small(k), beta: Ordinal::zero() },
        GroupDescriptor::H { alpha, k } => Shape { family: 'H', alpha: alpha.clone(), k: small(k), beta: Ordinal::zero() },
        GroupDescriptor::I { alpha, k, beta } => Shape { family: 'I', alpha: alpha.clone(), k: small(k), beta: beta.clone() },
        GroupDescriptor::SymFinite(k) => Shape { family: 'S', alpha: Ordinal::zero(), k: small(k), beta: Ordinal::zero() },
    }
}

/// Expected invariants `(quotient, epsilon)` read off the table.
fn table_invariants(s: &Shape) -> (u64, Ordinal) {
    match s.family {
        'H' => (oracles::factorial(s.k - 1), s.alpha.clone()),
        'S' => (oracles::factorial(s.k), Ordinal::zero()),
        _ => (oracles::factorial(s.k), s.alpha.clone()),
    }
}

/// The open question a pair falls under, if any.
fn question(a: &Shape, b: &Shape) -> Option<&'static str> {
    let same_alpha = a.alpha == b.alpha;
    let hit = |x: &Shape, y: &Shape| -> Option<&'static str> {
        match (x.family, y.family) {
            ('H', 'H') if same_alpha && x.k == 1 && y.k == 2 => Some("Question 31"),
            ('G', 'H') if same_alpha && y.k == x.k + 1 => Some("Question 32"),
            ('I', 'I') if same_alpha && x.k == y.k && x.beta != y.beta => Some("Question 33"),
            ('I', 'G') if same_alpha && x.k == y.k => Some("Question 33"),
            ('I', 'H') if same_alpha && y.k == x.k + 1 => Some("Question 33"),
            _ => None,
        }
    };
    hit(a, b).or_else(|| hit(b, a))
}

fn descriptor_grid(pool: &[Ordinal]) -> Vec<GroupDescriptor> {
    let mut out: Vec<GroupDescriptor> = (0..=3u32).map(|k| GroupDescriptor::SymFinite(BigUint::from(k))).collect();
    for alpha in pool {
        for k in 1..=3u32 {
            let k = BigUint::from(k);
            out.push(GroupDescriptor::G { alpha: alpha.clone(), k: k.clone() });
            out.push(GroupDescriptor::H { alpha: alpha.clone(), k: k.clone() });
            for beta in pool.iter().filter(|b| *b < alpha) {
                out.push(GroupDescriptor::I { alpha: alpha.clone(), k: k.clone(), beta: beta.clone() });
            }
        }
    }
    out
}

fn oracle(report: &mut SuiteReport) {
    let pool = oracles::exponent_pool();
    let grid = descriptor_grid(&pool);
    let mut unknown = 0;
    for d in &grid {
        let s = shape(d);
        let inv = invariants::invariants(d);
        let (q, eps) = table_invariants(&s);
        report.check(inv.max_finite_quotient == BigUint::from(q) && inv.epsilon == eps, || {
            format!("invariants of {d} are {inv}, table says {{{q}, {eps}}}")
        });
        report.check(invariants::descriptor_of(&d.space()) == *d, || format!("{d} does not round-trip"));
    }
    for d1 in &grid {
        for d2 in &grid {
            let dec = invariants::groups_isomorphic(d1, d2);
            let back = invariants::groups_isomorphic(d2, d1);
            let (s1, s2) = (shape(d1), shape(d2));
            report.check(dec.answer == back.answer, || format!("{d1} vs {d2} is not symmetric"));

            let (i1, i2) = (table_invariants(&s1), table_invariants(&s2));
            let finite_mismatch = (s1.family == 'S') != (s2.family == 'S');
            let compact_pair = s1.family == 'G' && s2.family == 'G';
            let known_yes = d1 == d2
                || (s1.alpha == s2.alpha
                    && s1.k == 1
                    && s2.k == 1
                    && matches!((s1.family, s2.family), ('G', 'H') | ('H', 'G')))
                || (s1.family == 'S' && s2.family == 'S' && i1.0 == i2.0);
            let expected = if known_yes {
                Answer::Yes
            } else if finite_mismatch || i1 != i2 || compact_pair {
                Answer::No
            } else {
                Answer::Unknown
            };
            report.check(dec.answer == expected, || {
                format!("{d1} vs {d2}: answered {}, expected {expected}", dec.answer)
            });
            if compact_pair {
                report.check((dec.answer == Answer::Yes) == (s1.alpha == s2.alpha && s1.k == s2.k), || {
                    format!("{d1} vs {d2} contradicts the compact classification")
                });
            }
            if dec.answer == Answer::Yes {
                report.check(i1 == i2, || format!("{d1} and {d2} isomorphic with different invariants"));
            }
            if dec.answer == Answer::No {
                report.check(!dec.justification.is_empty(), || format!("{d1} vs {d2}: No without reason"));
            }
            if dec.answer == Answer::Unknown {
                unknown += 1;
                let q = question(&s1, &s2);
                report.check(dec.citation == q, || {
                    format!("{d1} vs {d2}: cited {:?}, expected {q:?}", dec.citation)
                });
            }
            if let Some(q) = question(&s1, &s2) {
                report.check(dec.answer == Answer::Unknown, || format!("{d1} vs {d2} ({q}) was decided"));
            }
        }
    }
    report.notes.push(format!("{} descriptors, {unknown} ordered pairs Unknown", grid.len()));
}

/// Points `c1..cm` sitting over a common base, a tower over `m` isolated
/// points, or a discrete space; each has one class of size `m` and
/// otherwise singleton classes.
fn remark19_spaces() -> Vec<(String, FiniteSpace)> {
    let mut out = Vec::new();
    for m in [1usize, 3, 4, 5] {
        out.push((format!("discrete {m}"), FiniteSpace::discrete(m)));
        for height in 1..=2 {
            let mut lines: Vec<String> = (1..=m).map(|i| format!("p{i}: p{i}")).collect();
            let base: Vec<String> = (1..=m).map(|i| format!("p{i}")).collect();
            let mut below = base.join(" ");
            for h in 1..=height {
                below = format!("{below} t{h}");
                lines.push(format!("t{h}: {below}"));
            }
            out.push((format!("tower {m}/{height}"), FiniteSpace::parse(&lines.join("\n")).expect("valid")));
        }
        for top in [false, true] {
            let mut lines = vec!["b: b".to_string()];
            lines.extend((1..=m).map(|i| format!("c{i}: c{i} b")));
            if top {
                let all: Vec<String> = (1..=m).map(|i| format!("c{i}")).collect();
                lines.push(format!("t: t b {}", all.join(" ")));
            }
            out.push((format!("fan {m}{}", if top { " capped" } else { "" }), FiniteSpace::parse(&lines.join("\n")).expect("valid")));
        }
    }
    out
}

fn remark19(report: &mut SuiteReport, limits: &Limits) -> Result<()> {
    let spaces = remark19_spaces();
    for (label, space) in &spaces {
        let sizes = space.similarity_partition().sizes();
        report.check(sizes.iter().filter(|&&s| s >= 2).count() <= 1, || format!("{label}: more than one large class"));
        report.check(space.is_fully_transitive(limits)?.fully_transitive, || format!("{label}: not fully transitive"));
        let rep = verify_normal_subgroups(space, limits)?;
        report.check(rep.non_normal_candidates.is_empty(), || format!("{label}: a candidate is not normal"));
        report.check(rep.off_list.is_empty(), || format!("{label}: {} normal subgroups off the list", rep.off_list.len()));
        let listed: Vec<_> = rep.candidates.iter().map(|c| &c.subgroup).collect();
        report.check(rep.normal.iter().all(|n| listed.contains(&n)) && listed.iter().all(|c| rep.normal.contains(c)), || {
            format!("{label}: candidates and normal subgroups differ")
        });
    }

    let two_pairs = FiniteSpace::parse("a1: a1\na2: a2\nc1: c1 a1 a2\nc2: c2 a1 a2")?;
    let rep = verify_normal_subgroups(&two_pairs, limits)?;
    let group = two_pairs.homeo_group(limits)?;
    let normal = normal_subgroups(&group, limits)?;
    report.check(normal.len() == 5 && rep.candidates.len() == 4, || {
        format!("two pairs: {} normal subgroups, {} candidates", normal.len(), rep.candidates.len())
    });
    let diagonal = rep.off_list.first().map(|g| {
        g.elements()
            .iter()
            .map(|p| p.cycle_string(two_pairs.names()))
            .collect::<Vec<_>>()
    });
    report.check(
        rep.off_list.len() == 1
            && diagonal == Some(vec!["()".to_string(), "(a1 a2)(c1 c2)".to_string()]),
        || format!("two pairs: off-list subgroups {diagonal:?}"),
    );
    let moved: PointSet = rep.off_list.iter().flat_map(|g| g.elements().iter().map(|p| p.support())).fold(PointSet::empty(), PointSet::union);
    report.notes.push(format!(
        "{} spaces with one large class; off-list subgroup in the two-pair space moves {:?}",
        spaces.len(),
        two_pairs.set_names(moved)
    ));
    Ok(())
}

/// Runs every suite in order.
pub fn run_all(seed: u64, limits: &Limits) -> Result<Vec<SuiteReport>> {
    Suite::ALL.iter().map(|s| s.run(seed, limits)).collect()
}
