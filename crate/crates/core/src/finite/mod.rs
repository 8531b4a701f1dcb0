//! Finite topological spaces in Alexandrov presentation.
//!
//! A finite topology is determined by the minimal open set `U_x` of each
//! point `x`. A set is open iff it contains `U_y` for each of its points `y`,
//! and a permutation is a homeomorphism iff it carries every `U_x` onto
//! `U_{h(x)}`.

mod group;
mod normal;
mod pointset;
mod search;
mod similarity;
mod transitivity;

use std::collections::HashMap;
use std::fmt;

pub use group::{Perm, PermutationGroup};
pub(crate) use group::all_perms;
pub use normal::{
    conjugacy_classes, is_normal, normal_subgroups, verify_normal_subgroups, Candidate, ClassAction,
    NormalSubgroupReport,
};
pub use pointset::PointSet;
pub use similarity::SimilarityPartition;
pub use transitivity::{FullTransitivity, SwapFailure, SwapOutcome};

use crate::{Error, Limits, Result};

/// Largest point count a [`FiniteSpace`] can hold.
pub const MAX_SPACE_POINTS: usize = PointSet::CAPACITY;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    min_open: Vec<PointSet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub t0: bool,
    pub t1: bool,
    pub scattered: bool,
}

/// Cantor-Bendixson data of a finite space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbData {
    /// `X^(0) ⊋ X^(1) ⊋ ...` ending with the first repeated set, which is
    /// empty exactly when the space is scattered.
    pub levels: Vec<PointSet>,
    /// Rank of each point; `None` for points of the perfect kernel.
    pub ranks: Vec<Option<usize>>,
    /// Index at which the sequence stabilises.
    pub cb_rank: usize,
}

impl CbData {
    pub fn kernel(&self) -> PointSet {
        *self.levels.last().expect("at least X^(0)")
    }

    pub fn is_scattered(&self) -> bool {
        self.kernel().is_empty()
    }
}

impl FiniteSpace {
    /// Validates raw `(name, minimal open members)` data.
    pub fn new<N, M, I>(raw: I) -> Result<Self>
    where
        N: Into<String>,
        M: AsRef<str>,
        I: IntoIterator<Item = (N, Vec<M>)>,
    {
        let raw: Vec<(String, Vec<M>)> = raw.into_iter().map(|(n, m)| (n.into(), m)).collect();
        if raw.len() > MAX_SPACE_POINTS {
            return Err(Error::SizeBound {
                what: "points in a finite space",
                limit: MAX_SPACE_POINTS,
                actual: raw.len(),
            });
        }
        let mut index = HashMap::new();
        for (i, (name, _)) in raw.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicatePoint(name.clone()));
            }
        }
        let mut min_open = Vec::with_capacity(raw.len());
        for (_, members) in &raw {
            let mut set = PointSet::empty();
            for m in members {
                let m = m.as_ref();
                let &j = index.get(m).ok_or_else(|| Error::UnknownPoint(m.to_string()))?;
                set.insert(j);
            }
            min_open.push(set);
        }
        let names = raw.into_iter().map(|(n, _)| n).collect();
        Self::from_sets(names, min_open)
    }

    /// Validates minimal open sets given by point index.
    pub fn from_sets(names: Vec<String>, min_open: Vec<PointSet>) -> Result<Self> {
        assert_eq!(names.len(), min_open.len());
        let n = names.len();
        if n > MAX_SPACE_POINTS {
            return Err(Error::SizeBound {
                what: "points in a finite space",
                limit: MAX_SPACE_POINTS,
                actual: n,
            });
        }
        let full = PointSet::full(n);
        for (x, u) in min_open.iter().enumerate() {
            if !u.is_subset(full) {
                return Err(Error::UnknownPoint(format!("#{}", u.difference(full).first().unwrap())));
            }
            if !u.contains(x) {
                return Err(Error::Reflexivity(names[x].clone()));
            }
        }
        for (x, u) in min_open.iter().enumerate() {
            if let Some(y) = u.iter().find(|&y| !min_open[y].is_subset(*u)) {
                return Err(Error::Transitivity {
                    point: names[x].clone(),
                    member: names[y].clone(),
                });
            }
        }
        Ok(FiniteSpace { names, min_open })
    }

    pub fn discrete(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("p{i}")).collect();
        let min_open = (0..n).map(PointSet::singleton).collect();
        FiniteSpace::from_sets(names, min_open).expect("discrete spaces are valid")
    }

    /// Parses the line format `name: m1 m2 ...`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw: Vec<(String, Vec<String>)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (name, rest) = line.split_once(':').ok_or_else(|| Error::Syntax {
                line: lineno + 1,
                message: "expected 'name: members...'".to_string(),
            })?;
            let name = name.trim();
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::Syntax {
                    line: lineno + 1,
                    message: format!("bad point name {name:?}"),
                });
            }
            let members = rest.split_whitespace().map(str::to_string).collect();
            raw.push((name.to_string(), members));
        }
        FiniteSpace::new(raw)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<PointSet>>()
    }

    pub fn set_names(&self, set: PointSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    pub fn points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn min_open(&self, x: usize) -> PointSet {
        self.min_open[x]
    }

    pub fn min_opens(&self) -> &[PointSet] {
        &self.min_open
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        set.iter().all(|y| self.min_open[y].is_subset(set))
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.is_open(self.points().difference(set))
    }

    /// Smallest closed set containing `set`: all `y` whose `U_y` meets it.
    pub fn closure(&self, set: PointSet) -> PointSet {
        (0..self.len())
            .filter(|&y| !self.min_open[y].intersection(set).is_empty())
            .collect()
    }

    /// Derived set of `a` inside `a`: points `x` with `U_x ∩ a ≠ {x}`.
    pub fn derived(&self, a: PointSet) -> PointSet {
        a.iter()
            .filter(|&x| self.min_open[x].intersection(a) != PointSet::singleton(x))
            .collect()
    }

    pub fn cb_data(&self) -> CbData {
        let mut levels = vec![self.points()];
        let mut ranks = vec![None; self.len()];
        loop {
            let current = *levels.last().unwrap();
            let next = self.derived(current);
            let depth = levels.len() - 1;
            for x in current.difference(next).iter() {
                ranks[x] = Some(depth);
            }
            if next == current {
                break;
            }
            levels.push(next);
            if next.is_empty() {
                break;
            }
        }
        let cb_rank = levels.len() - 1;
        CbData {
            levels,
            ranks,
            cb_rank,
        }
    }

    pub fn separation_report(&self) -> SeparationReport {
        let t0 = (0..self.len())
            .all(|x| (0..x).all(|y| self.min_open[x] != self.min_open[y]));
        let t1 = (0..self.len()).all(|x| self.min_open[x] == PointSet::singleton(x));
        SeparationReport {
            t0,
            t1,
            scattered: self.cb_data().is_scattered(),
        }
    }

    /// Connected components, in order of their smallest point.
    pub fn components(&self) -> Vec<PointSet> {
        let mut seen = PointSet::empty();
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = PointSet::singleton(start);
            loop {
                let grown: PointSet = comp
                    .iter()
                    .fold(comp, |acc, x| acc.union(self.min_open[x]))
                    .union(self.closure(comp));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// The subspace on `set`, keeping point order.
    pub fn subspace(&self, set: PointSet) -> FiniteSpace {
        let ids: Vec<usize> = set.iter().collect();
        let local = |g: usize| ids.iter().position(|&i| i == g).unwrap();
        let names = ids.iter().map(|&i| self.names[i].clone()).collect();
        let min_open = ids
            .iter()
            .map(|&i| self.min_open[i].intersection(set).iter().map(local).collect())
            .collect();
        FiniteSpace { names, min_open }
    }

    /// A homeomorphism onto `other`, if one exists.
    pub fn homeomorphism_to(&self, other: &FiniteSpace) -> Option<Vec<usize>> {
        search::first_isomorphism(self, other, None)
    }

    /// The full homeomorphism group, found by backtracking over invariant
    /// classes.
    pub fn homeo_group(&self, limits: &Limits) -> Result<PermutationGroup> {
        limits.check("points for the homeomorphism search", limits.homeo_points, self.len())?;
        let mut elements = Vec::new();
        let mut overflow = false;
        search::for_each_isomorphism(self, self, None, |images| {
            if elements.len() == limits.group_order {
                overflow = true;
                return false;
            }
            elements.push(Perm::from_indices(images));
            true
        });
        if overflow {
            return Err(Error::SizeBound {
                what: "homeomorphism group order",
                limit: limits.group_order,
                actual: limits.group_order + 1,
            });
        }
        Ok(PermutationGroup::from_elements_unchecked(
            self.names.clone(),
            elements,
        ))
    }

    /// True iff `perm` carries every minimal open set onto the minimal open
    /// set of the image point.
    pub fn is_homeomorphism(&self, perm: &Perm) -> bool {
        perm.len() == self.len()
            && (0..self.len()).all(|x| perm.image_of(self.min_open[x]) == self.min_open[perm.apply(x)])
    }
}

impl fmt::Display for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (x, name) in self.names.iter().enumerate() {
            write!(f, "{name}:")?;
            for y in self.min_open[x].iter() {
                write!(f, " {}", self.names[y])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// `{a:{a}, b:{b}, c:{a,b,c}}`
    pub(crate) fn vee() -> FiniteSpace {
        FiniteSpace::parse("a: a\nb: b\nc: a b c\n").unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(FiniteSpace::parse("a: a\nb: b\nc: a b c").is_ok());
        let err = FiniteSpace::parse("a: a b\nb: b c\nc: c").unwrap_err();
        assert!(matches!(err, Error::Transitivity { ref point, ref member } if point == "a" && member == "b"));
        assert_eq!(FiniteSpace::discrete(4).len(), 4);
        assert!(matches!(
            FiniteSpace::parse("a: b\nb: b").unwrap_err(),
            Error::Reflexivity(ref p) if p == "a"
        ));
        assert!(matches!(
            FiniteSpace::parse("a: a\na: a").unwrap_err(),
            Error::DuplicatePoint(_)
        ));
        assert!(matches!(
            FiniteSpace::parse("a: a z").unwrap_err(),
            Error::UnknownPoint(ref p) if p == "z"
        ));
        assert!(FiniteSpace::parse("a a a").unwrap_err().is_syntax());
    }

    #[test]
    fn parse_ignores_comments() {
        let s = FiniteSpace::parse("# header\n a: a # isolated\n\nb: a b\n").unwrap();
        assert_eq!(s.names(), ["a", "b"]);
        assert_eq!(s.to_string(), "a: a\nb: a b\n");
    }

    #[test]
    fn separation_examples() {
        let r = vee().separation_report();
        assert_eq!(r, SeparationReport { t0: true, t1: false, scattered: true });
        let indiscrete = FiniteSpace::parse("a: a b\nb: a b").unwrap();
        let r = indiscrete.separation_report();
        assert!(!r.t0 && !r.scattered && !r.t1);
        let r = FiniteSpace::discrete(4).separation_report();
        assert!(r.t0 && r.t1 && r.scattered);
    }

    #[test]
    fn cb_examples() {
        let cb = vee().cb_data();
        assert_eq!(cb.levels, vec![PointSet::full(3), PointSet::singleton(2), PointSet::empty()]);
        assert_eq!(cb.ranks, vec![Some(0), Some(0), Some(1)]);
        assert_eq!(cb.cb_rank, 2);

        let cb = FiniteSpace::discrete(3).cb_data();
        assert_eq!(cb.levels[1], PointSet::empty());
        assert_eq!(cb.ranks, vec![Some(0); 3]);

        let chain = FiniteSpace::parse("a: a\nb: a b\nc: a b c").unwrap();
        assert_eq!(chain.cb_data().ranks, vec![Some(0), Some(1), Some(2)]);

        let indiscrete = FiniteSpace::parse("a: a b\nb: a b").unwrap();
        let cb = indiscrete.cb_data();
        assert_eq!(cb.ranks, vec![None, None]);
        assert_eq!(cb.cb_rank, 0);
        assert!(!cb.is_scattered());
    }

    #[test]
    fn empty_space() {
        let e = FiniteSpace::parse("").unwrap();
        assert!(e.is_empty());
        let r = e.separation_report();
        assert!(r.t0 && r.scattered);
        assert_eq!(e.homeo_group(&Limits::default()).unwrap().order(), 1);
    }

    #[test]
    fn closure_and_components() {
        let s = vee();
        assert_eq!(s.closure(PointSet::singleton(0)), s.set_of(&["a", "c"]).unwrap());
        assert!(!s.is_closed(PointSet::singleton(0)));
        assert!(s.is_closed(PointSet::singleton(2)));
        assert_eq!(s.components(), vec![PointSet::full(3)]);
        assert_eq!(FiniteSpace::discrete(3).components().len(), 3);
    }

    #[test]
    fn homeo_group_examples() {
        let limits = Limits::default();
        assert_eq!(vee().homeo_group(&limits).unwrap().order(), 2);
        assert_eq!(FiniteSpace::discrete(4).homeo_group(&limits).unwrap().order(), 24);
        let fans = FiniteSpace::parse(
            "a1: a1\na2: a2\nc1: c1 a1 a2\nb1: b1\nb2: b2\nb3: b3\nc2: c2 b1 b2 b3",
        )
        .unwrap();
        assert_eq!(fans.homeo_group(&limits).unwrap().order(), 12);
    }

    #[test]
    fn homeo_group_respects_bounds() {
        let limits = Limits { homeo_points: 3, ..Limits::default() };
        assert!(matches!(
            FiniteSpace::discrete(4).homeo_group(&limits),
            Err(Error::SizeBound { .. })
        ));
        let limits = Limits { group_order: 100, ..Limits::default() };
        assert!(matches!(
            FiniteSpace::discrete(5).homeo_group(&limits),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn homeo_group_matches_brute_force() {
        let s = FiniteSpace::parse("a: a\nb: b\nc: c\nd: a b d\ne: b c e\nf: a b c d e f").unwrap();
        let g = s.homeo_group(&Limits::default()).unwrap();
        let brute = group::all_perms(s.len())
            .into_iter()
            .filter(|p| s.is_homeomorphism(p))
            .count();
        assert_eq!(g.order(), brute);
        assert!(g.elements().iter().all(|p| s.is_homeomorphism(p)));
    }
}
