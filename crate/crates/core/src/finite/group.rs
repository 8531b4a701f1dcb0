use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use super::PointSet;
use crate::{Error, Result};

/// A permutation of `0..n`, stored as its image list.
///
/// Composition follows function notation: `g.compose(&h)` is `x -> g(h(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// `None` unless `images` is a permutation of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        if n > 256 {
            return None;
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm(images.into_iter().map(|i| i as u8).collect()))
    }

    pub(crate) fn from_indices(images: &[usize]) -> Self {
        Perm(images.iter().map(|&i| i as u8).collect())
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Perm::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn image_of(&self, set: PointSet) -> PointSet {
        set.iter().map(|x| self.apply(x)).collect()
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.apply(x) == x
    }

    pub fn support(&self) -> PointSet {
        (0..self.len()).filter(|&x| !self.fixes(x)).collect()
    }

    /// Sign of the permutation restricted to an invariant set.
    pub fn is_even_on(&self, set: PointSet) -> bool {
        let mut seen = PointSet::empty();
        let mut transpositions = 0;
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen.contains(x) {
                seen.insert(x);
                x = self.apply(x);
                len += 1;
            }
            transpositions += len - 1;
        }
        transpositions % 2 == 0
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation using the given point names, `()` for the identity.
    pub fn cycle_string<S: AsRef<str>>(&self, names: &[S]) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<&str> = c.iter().map(|&x| names[x].as_ref()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

/// A permutation group on a named finite ground set, held element by element.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    ground: Vec<String>,
    elements: Vec<Perm>,
    generators: OnceLock<Vec<Perm>>,
}

impl PartialEq for PermutationGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.elements == other.elements
    }
}

impl Eq for PermutationGroup {}

impl PermutationGroup {
    /// Elements must already form a group; they are sorted here.
    pub(crate) fn from_elements_unchecked(ground: Vec<String>, mut elements: Vec<Perm>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        PermutationGroup {
            ground,
            elements,
            generators: OnceLock::new(),
        }
    }

    pub fn trivial(ground: Vec<String>) -> Self {
        let n = ground.len();
        Self::from_elements_unchecked(ground, vec![Perm::identity(n)])
    }

    /// The group generated by `generators`, failing past `max_order` elements.
    pub fn generate(ground: Vec<String>, generators: &[Perm], max_order: usize) -> Result<Self> {
        let n = ground.len();
        if generators.iter().any(|g| g.len() != n) {
            return Err(Error::GroundMismatch);
        }
        let mut seen: HashSet<Perm> = HashSet::from([Perm::identity(n)]);
        let mut queue = vec![Perm::identity(n)];
        while let Some(x) = queue.pop() {
            for g in generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > max_order {
                        return Err(Error::SizeBound {
                            what: "group order",
                            limit: max_order,
                            actual: seen.len(),
                        });
                    }
                    queue.push(y);
                }
            }
        }
        let group = Self::from_elements_unchecked(ground, seen.into_iter().collect());
        let _ = group.generators.set(generators.to_vec());
        Ok(group)
    }

    /// Checks that `elements` contain the identity and are closed under
    /// composition (hence under inverses, being finite).
    pub fn from_elements(ground: Vec<String>, elements: Vec<Perm>) -> Result<Self> {
        let n = ground.len();
        if elements.iter().any(|g| g.len() != n) {
            return Err(Error::GroundMismatch);
        }
        let group = Self::from_elements_unchecked(ground, elements);
        if !group.contains(&Perm::identity(n)) {
            return Err(Error::Precondition("element set lacks the identity".into()));
        }
        for g in &group.elements {
            for h in &group.elements {
                if !group.contains(&g.compose(h)) {
                    return Err(Error::Precondition("element set is not closed".into()));
                }
            }
        }
        Ok(group)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn degree(&self) -> usize {
        self.ground.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in sorted order; the identity comes first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// A generating set: stored generators if the group was built from them,
    /// otherwise a greedy choice from the element list.
    pub fn generators(&self) -> &[Perm] {
        self.generators.get_or_init(|| {
            let n = self.degree();
            let mut gens: Vec<Perm> = Vec::new();
            let mut span: HashSet<Perm> = HashSet::from([Perm::identity(n)]);
            for g in &self.elements {
                if span.contains(g) {
                    continue;
                }
                gens.push(g.clone());
                let mut queue: Vec<Perm> = span.iter().cloned().collect();
                while let Some(x) = queue.pop() {
                    for s in &gens {
                        let y = s.compose(&x);
                        if span.insert(y.clone()) {
                            queue.push(y);
                        }
                    }
                }
            }
            gens
        })
    }

    /// Subgroup of elements satisfying `keep`; the caller guarantees closure.
    pub(crate) fn filter_subgroup(&self, keep: impl Fn(&Perm) -> bool) -> PermutationGroup {
        let elements = self.elements.iter().filter(|g| keep(g)).cloned().collect();
        Self::from_elements_unchecked(self.ground.clone(), elements)
    }

    /// Elements fixing every point of `set`.
    pub fn fixator(&self, set: PointSet) -> PermutationGroup {
        self.filter_subgroup(|g| set.iter().all(|x| g.fixes(x)))
    }

    pub fn fixator_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<PermutationGroup> {
        let mut set = PointSet::empty();
        for n in names {
            let n = n.as_ref();
            let i = self
                .ground
                .iter()
                .position(|g| g == n)
                .ok_or_else(|| Error::UnknownPoint(n.to_string()))?;
            set.insert(i);
        }
        Ok(self.fixator(set))
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.ground == other.ground && self.elements.iter().all(|g| other.contains(g))
    }

    /// Orbit of a point.
    pub fn orbit(&self, x: usize) -> PointSet {
        self.elements.iter().map(|g| g.apply(x)).collect()
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(Perm::from_indices(&current));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn perm_basics() {
        let g = Perm::from_images(vec![1, 2, 0]).unwrap();
        let h = Perm::transposition(3, 0, 1);
        assert_eq!(g.compose(&h).images().collect::<Vec<_>>(), vec![2, 1, 0]);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.is_even_on(PointSet::full(3)));
        assert!(!h.is_even_on(PointSet::full(3)));
        assert_eq!(g.cycle_string(&names(3)), "(1 2 3)");
        assert_eq!(Perm::identity(2).cycle_string(&names(2)), "()");
        assert!(Perm::from_images(vec![0, 0]).is_none());
        assert!(Perm::from_images(vec![2, 0]).is_none());
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(all_perms(0).len(), 1);
        assert_eq!(all_perms(4).len(), 24);
        let set: HashSet<_> = all_perms(5).into_iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn generate_symmetric_group() {
        let gens = [Perm::transposition(4, 0, 1), Perm::from_images(vec![1, 2, 3, 0]).unwrap()];
        let g = PermutationGroup::generate(names(4), &gens, 1000).unwrap();
        assert_eq!(g.order(), 24);
        assert!(PermutationGroup::generate(names(4), &gens, 10).is_err());
        assert_eq!(g.generators().len(), 2);
    }

    #[test]
    fn greedy_generators_span() {
        let g = PermutationGroup::from_elements(names(4), all_perms(4)).unwrap();
        let regenerated = PermutationGroup::generate(names(4), g.generators(), 100).unwrap();
        assert_eq!(regenerated, g);
    }

    #[test]
    fn from_elements_checks_closure() {
        let bad = vec![Perm::identity(3), Perm::from_images(vec![1, 2, 0]).unwrap()];
        assert!(PermutationGroup::from_elements(names(3), bad).is_err());
        let no_id = vec![Perm::transposition(2, 0, 1)];
        assert!(PermutationGroup::from_elements(names(2), no_id).is_err());
    }

    #[test]
    fn fixators() {
        let g = PermutationGroup::from_elements(names(3), all_perms(3)).unwrap();
        assert_eq!(g.fixator(PointSet::empty()), g);
        assert!(g.fixator(PointSet::full(3)).is_trivial());
        assert_eq!(g.fixator(PointSet::singleton(0)).order(), 2);
        assert_eq!(g.fixator_of_names(&["1", "2"]).unwrap().order(), 1);
        assert!(g.fixator_of_names(&["9"]).is_err());
    }
}
