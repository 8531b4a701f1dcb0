//! Graphs realised as homeomorphism groups of scattered spaces.
//!
//! The space on `V ∪ E` declares a set open when, containing an edge point,
//! it also contains both endpoints. Minimal open sets are `{v}` for vertices
//! and `{e, u, v}` for an edge `e = uv`; vertices are the isolated points and
//! the homeomorphisms restricted to `V` are exactly the graph automorphisms.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::finite::{FiniteSpace, Perm, PermutationGroup, PointSet};
use crate::{Error, Limits, Result};

/// A finite simple graph with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    /// Sorted pairs `(a, b)` with `a < b`.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: Vec<String>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut names = HashSet::new();
        for v in &vertices {
            if v.is_empty() || v.contains(char::is_whitespace) || v.contains("--") {
                return Err(Error::InvalidGraph(format!("bad vertex name {v:?}")));
            }
            if !names.insert(v) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v:?}")));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::InvalidGraph("edge endpoint out of range".into()));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at {}", vertices[a])));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} -- {}",
                    vertices[a], vertices[b]
                )));
            }
        }
        if set.is_empty() {
            return Err(Error::InvalidGraph("graph has no edges".into()));
        }
        Ok(Graph {
            vertices,
            edges: set.into_iter().collect(),
        })
    }

    /// Vertices named `1..=n`.
    pub fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Graph::new((1..=n).map(|i| i.to_string()).collect(), edges)
    }

    /// One edge per line as `u v` or `u -- v`, plus `vertex u` lines for
    /// isolated vertices. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        let intern = |name: &str, vertices: &mut Vec<String>| {
            vertices.iter().position(|v| v == name).unwrap_or_else(|| {
                vertices.push(name.to_string());
                vertices.len() - 1
            })
        };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = line.split_whitespace().filter(|t| *t != "--").collect();
            match tokens.as_slice() {
                [] => {}
                ["vertex", v] => {
                    intern(v, &mut vertices);
                }
                [u, v] => {
                    let a = intern(u, &mut vertices);
                    let b = intern(v, &mut vertices);
                    edges.push((a, b));
                }
                _ => {
                    return Err(Error::Syntax {
                        line: lineno + 1,
                        message: "expected 'u v', 'u -- v' or 'vertex u'".into(),
                    })
                }
            }
        }
        Graph::new(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Name of the point encoding an edge: endpoint names sorted, joined by `--`.
    pub fn edge_name(&self, (a, b): (usize, usize)) -> String {
        let (x, y) = (&self.vertices[a], &self.vertices[b]);
        if x <= y {
            format!("{x}--{y}")
        } else {
            format!("{y}--{x}")
        }
    }

    /// The scattered space on `V ∪ E`. Vertices come first, in vertex order,
    /// followed by edge points in edge order.
    pub fn encode(&self) -> FiniteSpace {
        let n = self.vertices.len();
        let mut names = self.vertices.clone();
        let mut min_open: Vec<PointSet> = (0..n).map(PointSet::singleton).collect();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            names.push(self.edge_name((a, b)));
            min_open.push([n + i, a, b].into_iter().collect());
        }
        FiniteSpace::from_sets(names, min_open).expect("graph encodings are valid spaces")
    }

    /// Vertex permutations preserving adjacency, found by backtracking on
    /// the adjacency relation alone.
    pub fn automorphisms(&self, limits: &Limits) -> Result<PermutationGroup> {
        let n = self.vertices.len();
        limits.check("vertices for the automorphism search", limits.homeo_points, n)?;
        let degree: Vec<usize> = (0..n)
            .map(|v| self.edges.iter().filter(|&&(a, b)| a == v || b == v).count())
            .collect();
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut found = Vec::new();
        let mut overflow = false;
        self.extend_automorphism(0, &degree, &mut images, &mut used, &mut found, limits.group_order, &mut overflow);
        if overflow {
            return Err(Error::SizeBound {
                what: "automorphism group order",
                limit: limits.group_order,
                actual: limits.group_order + 1,
            });
        }
        Ok(PermutationGroup::from_elements(self.vertices.clone(), found)
            .expect("automorphisms form a group"))
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_automorphism(
        &self,
        v: usize,
        degree: &[usize],
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Perm>,
        cap: usize,
        overflow: &mut bool,
    ) {
        let n = images.len();
        if v == n {
            if found.len() == cap {
                *overflow = true;
            } else {
                found.push(Perm::from_images(images.clone()).unwrap());
            }
            return;
        }
        for w in 0..n {
            if *overflow {
                return;
            }
            if used[w] || degree[w] != degree[v] {
                continue;
            }
            if (0..v).any(|u| self.adjacent(u, v) != self.adjacent(images[u], w)) {
                continue;
            }
            images[v] = w;
            used[w] = true;
            self.extend_automorphism(v + 1, degree, images, used, found, cap, overflow);
            used[w] = false;
            images[v] = usize::MAX;
        }
    }

    /// Checks that the encoding realises the automorphism group:
    ///
    /// 1. restriction to `V` is an injective homomorphism from the
    ///    homeomorphism group onto the automorphism group;
    /// 2. `X' = E` and `X'' = ∅`;
    /// 3. the closure of `{v}` is `v` with its incident edges, so vertices
    ///    are adjacent iff their closures meet;
    /// 4. the isolated points are exactly the vertices.
    pub fn verify_realization(&self, limits: &Limits) -> Result<RealizationReport> {
        let n = self.vertices.len();
        limits.check("vertices for the realisation check", limits.homeo_points, n)?;
        let space = self.encode();
        let search_limits = limits.with_max_points(limits.homeo_points.max(space.len()));
        let homeo = space.homeo_group(&search_limits)?;
        let aut = self.automorphisms(limits)?;
        let vertex_set = PointSet::full(n);
        let edge_set = space.points().difference(vertex_set);
        let mut failures = Vec::new();

        // 1. restriction map
        let mut restrictions: Vec<Perm> = Vec::with_capacity(homeo.order());
        for h in homeo.elements() {
            if h.image_of(vertex_set) != vertex_set {
                failures.push(format!(
                    "restriction: {} does not preserve the vertex set",
                    h.cycle_string(space.names())
                ));
                continue;
            }
            restrictions.push(restrict(h, n));
        }
        let distinct: HashSet<&Perm> = restrictions.iter().collect();
        if distinct.len() != restrictions.len() {
            failures.push("restriction: map to Sym(V) is not injective".into());
        }
        if let Some(p) = restrictions.iter().find(|p| !aut.contains(p)) {
            failures.push(format!("restriction: {} is not an automorphism", p.cycle_string(&self.vertices)));
        }
        if let Some(a) = aut.elements().iter().find(|a| !distinct.contains(a)) {
            failures.push(format!(
                "restriction: automorphism {} is not the restriction of a homeomorphism",
                a.cycle_string(&self.vertices)
            ));
        }
        'hom: for g in homeo.elements() {
            for s in homeo.generators() {
                let lhs = restrict(&g.compose(s), n);
                let rhs = restrict(g, n).compose(&restrict(s, n));
                if lhs != rhs {
                    failures.push(format!(
                        "restriction: not multiplicative at {}",
                        g.cycle_string(space.names())
                    ));
                    break 'hom;
                }
            }
        }

        // 2. derived sets
        let cb = space.cb_data();
        let expected = vec![space.points(), edge_set, PointSet::empty()];
        if cb.levels != expected {
            failures.push(format!("derived sets: got {:?}", cb.levels));
        }

        // 3. closures of vertices
        for v in 0..n {
            let mut expect = PointSet::singleton(v);
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if a == v || b == v {
                    expect.insert(n + i);
                }
            }
            let got = space.closure(PointSet::singleton(v));
            if got != expect {
                failures.push(format!(
                    "closure of {}: got {:?}",
                    self.vertices[v],
                    space.set_names(got)
                ));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                let meet = !space
                    .closure(PointSet::singleton(a))
                    .is_disjoint(space.closure(PointSet::singleton(b)));
                if meet != self.adjacent(a, b) {
                    failures.push(format!(
                        "closures of {} and {} disagree with adjacency",
                        self.vertices[a], self.vertices[b]
                    ));
                }
            }
        }
        let separation = space.separation_report();
        if separation.t1 {
            failures.push("encoding is T1 although the graph has an edge".into());
        }

        // 4. isolated points
        let isolated: PointSet = (0..space.len())
            .filter(|&x| space.min_open(x) == PointSet::singleton(x))
            .collect();
        if isolated != vertex_set {
            failures.push(format!("isolated points: got {:?}", space.set_names(isolated)));
        }

        Ok(RealizationReport {
            vertices: n,
            points: space.len(),
            homeo_order: homeo.order(),
            aut_order: aut.order(),
            t0: separation.t0,
            scattered: separation.scattered,
            failures,
        })
    }
}

fn restrict(h: &Perm, n: usize) -> Perm {
    Perm::from_images(h.images().take(n).collect()).expect("vertex set is invariant")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    pub vertices: usize,
    pub points: usize,
    pub homeo_order: usize,
    pub aut_order: usize,
    pub t0: bool,
    pub scattered: bool,
    /// Each failed assertion with a counterexample.
    pub failures: Vec<String>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.vertices.len() {
            if !self.edges.iter().any(|&(a, b)| a == v || b == v) {
                writeln!(f, "vertex {}", self.vertices[v])?;
            }
        }
        for &(a, b) in &self.edges {
            writeln!(f, "{} -- {}", self.vertices[a], self.vertices[b])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::numbered(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn parse_formats() {
        let g = Graph::parse("# path\n1 -- 2\n2 3\nvertex 4\n").unwrap();
        assert_eq!(g.vertices(), ["1", "2", "3", "4"]);
        assert_eq!(g.edges(), [(0, 1), (1, 2)]);
        assert!(Graph::parse("vertex a\nvertex b").is_err());
        assert!(Graph::parse("a a").is_err());
        assert!(Graph::parse("a b\nb a").is_err());
        assert!(Graph::parse("a b c").unwrap_err().is_syntax());
        assert!(Graph::parse("a--b c").is_err());
    }

    #[test]
    fn encode_examples() {
        let edge = Graph::parse("u v").unwrap().encode();
        assert_eq!(edge.len(), 3);
        assert_eq!(edge.min_open(edge.index_of("u--v").unwrap()), PointSet::full(3));

        let p3 = Graph::parse("1 2\n2 3").unwrap().encode();
        assert_eq!(p3.len(), 5);
        let cb = p3.cb_data();
        assert_eq!(cb.levels[1].len(), 2);

        let k3 = Graph::parse("a b\nb c\na c").unwrap().encode();
        assert_eq!(k3.len(), 6);
        assert_eq!(k3.set_names(k3.cb_data().levels[1]), ["a--b", "a--c", "b--c"]);
    }

    #[test]
    fn edge_names_are_sorted() {
        let g = Graph::parse("z a").unwrap();
        assert_eq!(g.encode().name(2), "a--z");
    }

    #[test]
    fn automorphism_examples() {
        let limits = Limits::default();
        assert_eq!(Graph::parse("1 2\n2 3").unwrap().automorphisms(&limits).unwrap().order(), 2);
        assert_eq!(cycle(4).automorphisms(&limits).unwrap().order(), 8);
        assert_eq!(Graph::parse("1 2").unwrap().automorphisms(&limits).unwrap().order(), 2);
    }

    #[test]
    fn automorphisms_match_brute_force() {
        let g = Graph::parse("1 2\n2 3\n3 4\n4 1\n1 3\nvertex 5").unwrap();
        let found = g.automorphisms(&Limits::default()).unwrap();
        let brute = crate::finite::all_perms(5)
            .into_iter()
            .filter(|p| g.edges().iter().all(|&(a, b)| g.adjacent(p.apply(a), p.apply(b))))
            .count();
        assert_eq!(found.order(), brute);
    }

    #[test]
    fn realization_examples() {
        let limits = Limits::default();
        for (g, order) in [(Graph::parse("1 2").unwrap(), 2), (cycle(4), 8), (cycle(5), 10)] {
            let r = g.verify_realization(&limits).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
            assert_eq!(r.homeo_order, order);
            assert_eq!(r.aut_order, order);
            assert!(r.t0 && r.scattered);
        }
    }

    #[test]
    fn realization_with_isolated_vertices() {
        let g = Graph::parse("1 2\nvertex 3\nvertex 4").unwrap();
        let r = g.verify_realization(&Limits::default()).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.homeo_order, 4);
    }

    #[test]
    fn isomorphic_graphs_give_homeomorphic_spaces() {
        let a = Graph::parse("1 2\n2 3\n3 4").unwrap().encode();
        let b = Graph::parse("x y\nw x\nz w").unwrap().encode();
        let c = Graph::parse("1 2\n1 3\n1 4").unwrap().encode();
        assert!(a.homeomorphism_to(&b).is_some());
        assert!(a.homeomorphism_to(&c).is_none());
    }
}
