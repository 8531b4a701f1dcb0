//! Normal subgroups of small permutation groups.
//!
//! A normal subgroup is a union of conjugacy classes and is generated by the
//! classes it contains, so the normal subgroups are exactly the joins of
//! normal closures of single classes. Both steps work on element indices.

use std::collections::{HashMap, HashSet};

use super::{FiniteSpace, Perm, PermutationGroup, PointSet};
use crate::{Error, Limits, Result};

type ElemSet = Vec<u64>;

struct Indexed<'g> {
    elements: &'g [Perm],
    index: HashMap<&'g Perm, usize>,
}

impl<'g> Indexed<'g> {
    fn new(group: &'g PermutationGroup) -> Self {
        let elements = group.elements();
        let index = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        Indexed { elements, index }
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.of(&self.elements[a].compose(&self.elements[b]))
    }

    fn empty_set(&self) -> ElemSet {
        vec![0; self.len().div_ceil(64)]
    }

    /// Subgroup generated by `gens`, with the generators actually needed.
    fn generated(&self, gens: impl IntoIterator<Item = usize>) -> (ElemSet, Vec<usize>) {
        let identity = self.of(&Perm::identity(self.elements[0].len()));
        let mut set = self.empty_set();
        set_insert(&mut set, identity);
        let mut members = vec![identity];
        let mut active: Vec<usize> = Vec::new();
        for g in gens {
            if set_contains(&set, g) {
                continue;
            }
            active.push(g);
            let mut i = 0;
            // members grows while we scan it; every member is multiplied by every active generator
            let mut queue = members.clone();
            while i < queue.len() {
                let x = queue[i];
                i += 1;
                for &s in &active {
                    let y = self.mul(x, s);
                    if !set_contains(&set, y) {
                        set_insert(&mut set, y);
                        members.push(y);
                        queue.push(y);
                    }
                }
            }
        }
        (set, active)
    }

    fn to_group(&self, ground: &[String], set: &ElemSet) -> PermutationGroup {
        let elements = (0..self.len())
            .filter(|&i| set_contains(set, i))
            .map(|i| self.elements[i].clone())
            .collect();
        PermutationGroup::from_elements_unchecked(ground.to_vec(), elements)
    }
}

fn set_insert(set: &mut ElemSet, i: usize) {
    set[i / 64] |= 1 << (i % 64);
}

fn set_contains(set: &ElemSet, i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

/// Conjugacy classes, each sorted, in order of their smallest element.
pub fn conjugacy_classes(group: &PermutationGroup) -> Vec<Vec<Perm>> {
    let gens = group.generators();
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut classes = Vec::new();
    for x in group.elements() {
        if seen.contains(x) {
            continue;
        }
        let mut class: HashSet<Perm> = HashSet::from([x.clone()]);
        let mut queue = vec![x.clone()];
        while let Some(y) = queue.pop() {
            for g in gens {
                let z = y.conjugate_by(g);
                if class.insert(z.clone()) {
                    queue.push(z);
                }
            }
        }
        let mut class: Vec<Perm> = class.into_iter().collect();
        class.sort_unstable();
        seen.extend(class.iter().cloned());
        classes.push(class);
    }
    classes
}

pub fn is_normal(sub: &PermutationGroup, group: &PermutationGroup) -> bool {
    sub.is_subgroup_of(group)
        && group.generators().iter().all(|g| {
            sub.generators()
                .iter()
                .all(|h| sub.contains(&h.conjugate_by(g)))
        })
}

/// All normal subgroups, ordered by size and then by element list.
pub fn normal_subgroups(group: &PermutationGroup, limits: &Limits) -> Result<Vec<PermutationGroup>> {
    limits.check("points for normal subgroup enumeration", limits.normal_points, group.degree())?;
    let idx = Indexed::new(group);
    let mut found: Vec<(ElemSet, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<ElemSet> = HashSet::new();

    let trivial = idx.generated(std::iter::empty());
    seen.insert(trivial.0.clone());
    found.push(trivial);
    for class in conjugacy_classes(group) {
        let closure = idx.generated(class.iter().map(|p| idx.of(p)));
        if seen.insert(closure.0.clone()) {
            found.push(closure);
        }
    }
    // close under joins
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let gens: Vec<usize> = found[i].1.iter().chain(&found[j].1).copied().collect();
            let join = idx.generated(gens);
            if seen.insert(join.0.clone()) {
                found.push(join);
            }
        }
        i += 1;
    }
    let mut groups: Vec<PermutationGroup> = found
        .iter()
        .map(|(set, _)| idx.to_group(group.ground(), set))
        .collect();
    groups.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    Ok(groups)
}

/// How a candidate subgroup acts on one similarity class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassAction {
    Any,
    Trivial,
    Even,
    KleinFour,
}

/// A subgroup prescribed class by class: trivial on some classes, even on
/// some classes of size at least 3, and the identity or a fixed-point-free
/// involution on some classes of size 4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub actions: Vec<ClassAction>,
    pub subgroup: PermutationGroup,
}

impl Candidate {
    pub fn describe(&self, space: &FiniteSpace, blocks: &[PointSet]) -> String {
        let mut parts = Vec::new();
        for (action, block) in self.actions.iter().zip(blocks) {
            let label = format!("{{{}}}", space.set_names(*block).join(","));
            match action {
                ClassAction::Any => {}
                ClassAction::Trivial => parts.push(format!("trivial on {label}")),
                ClassAction::Even => parts.push(format!("even on {label}")),
                ClassAction::KleinFour => parts.push(format!("Klein four on {label}")),
            }
        }
        if parts.is_empty() {
            "whole group".to_string()
        } else {
            parts.join("; ")
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormalSubgroupReport {
    pub blocks: Vec<PointSet>,
    /// Distinct class-wise candidates, first description kept.
    pub candidates: Vec<Candidate>,
    pub normal: Vec<PermutationGroup>,
    /// Indices into `candidates` of candidates that are not normal.
    pub non_normal_candidates: Vec<usize>,
    /// Normal subgroups not of the class-wise form.
    pub off_list: Vec<PermutationGroup>,
}

impl NormalSubgroupReport {
    /// Candidates and normal subgroups coincide.
    pub fn exact_match(&self) -> bool {
        self.non_normal_candidates.is_empty() && self.off_list.is_empty()
    }
}

fn acts_as(action: ClassAction, g: &Perm, block: PointSet) -> bool {
    match action {
        ClassAction::Any => true,
        ClassAction::Trivial => block.iter().all(|x| g.fixes(x)),
        ClassAction::Even => g.is_even_on(block),
        ClassAction::KleinFour => {
            block.iter().all(|x| g.fixes(x))
                || block.iter().all(|x| !g.fixes(x) && g.apply(g.apply(x)) == x)
        }
    }
}

/// Enumerates the class-wise candidate subgroups of `Homeo(space)`, checks
/// that each is normal and lists normal subgroups outside the candidate list.
pub fn verify_normal_subgroups(space: &FiniteSpace, limits: &Limits) -> Result<NormalSubgroupReport> {
    limits.check("points for normal subgroup enumeration", limits.normal_points, space.len())?;
    let group = space.homeo_group(limits)?;
    let partition = space.similarity_partition();
    let ft = space.full_transitivity_with(&group, &partition)?;
    if !ft.fully_transitive {
        return Err(Error::Precondition("space is not fully transitive".into()));
    }
    let blocks = partition.blocks.clone();

    let options: Vec<Vec<ClassAction>> = blocks
        .iter()
        .map(|b| {
            let mut o = vec![ClassAction::Any, ClassAction::Trivial];
            if b.len() >= 3 {
                o.push(ClassAction::Even);
            }
            if b.len() == 4 {
                o.push(ClassAction::KleinFour);
            }
            o
        })
        .collect();

    let mut candidates: Vec<Candidate> = Vec::new();
    let mut choice = vec![0usize; blocks.len()];
    loop {
        let actions: Vec<ClassAction> = choice.iter().zip(&options).map(|(&c, o)| o[c]).collect();
        let subgroup = group.filter_subgroup(|g| {
            actions.iter().zip(&blocks).all(|(&a, &b)| acts_as(a, g, b))
        });
        if !candidates.iter().any(|c| c.subgroup == subgroup) {
            candidates.push(Candidate { actions, subgroup });
        }
        // odometer over the per-class options
        let mut i = 0;
        loop {
            if i == choice.len() {
                break;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }

    let normal = normal_subgroups(&group, limits)?;
    let non_normal_candidates = candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| !is_normal(&c.subgroup, &group))
        .map(|(i, _)| i)
        .collect();
    let off_list = normal
        .iter()
        .filter(|n| !candidates.iter().any(|c| &c.subgroup == *n))
        .cloned()
        .collect();
    Ok(NormalSubgroupReport {
        blocks,
        candidates,
        normal,
        non_normal_candidates,
        off_list,
    })
}

#[cfg(test)]
mod tests {
    use super::super::group::all_perms;
    use super::*;

    fn sym(n: usize) -> PermutationGroup {
        let ground = (1..=n).map(|i| i.to_string()).collect();
        PermutationGroup::from_elements(ground, all_perms(n)).unwrap()
    }

    fn orders(groups: &[PermutationGroup]) -> Vec<usize> {
        groups.iter().map(|g| g.order()).collect()
    }

    /// Every subgroup of a small group, by closing all subsets of elements.
    fn all_subgroups(group: &PermutationGroup) -> Vec<PermutationGroup> {
        let els = group.elements();
        let mut out: Vec<PermutationGroup> = Vec::new();
        for mask in 0u32..1 << els.len() {
            let gens: Vec<Perm> = (0..els.len()).filter(|i| mask >> i & 1 == 1).map(|i| els[i].clone()).collect();
            let g = PermutationGroup::generate(group.ground().to_vec(), &gens, 1000).unwrap();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        out
    }

    #[test]
    fn symmetric_groups() {
        let limits = Limits::default();
        assert_eq!(orders(&normal_subgroups(&sym(1), &limits).unwrap()), vec![1]);
        assert_eq!(orders(&normal_subgroups(&sym(3), &limits).unwrap()), vec![1, 3, 6]);
        assert_eq!(orders(&normal_subgroups(&sym(4), &limits).unwrap()), vec![1, 4, 12, 24]);
        assert_eq!(orders(&normal_subgroups(&sym(5), &limits).unwrap()), vec![1, 60, 120]);
    }

    #[test]
    fn class_counts() {
        assert_eq!(conjugacy_classes(&sym(4)).len(), 5);
        assert_eq!(conjugacy_classes(&sym(5)).len(), 7);
    }

    #[test]
    fn matches_subgroup_brute_force_on_order_eight() {
        // dihedral group of the square
        let ground: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let r = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        let s = Perm::from_images(vec![0, 3, 2, 1]).unwrap();
        let d4 = PermutationGroup::generate(ground, &[r, s], 100).unwrap();
        let brute: Vec<PermutationGroup> = all_subgroups(&d4)
            .into_iter()
            .filter(|h| d4.elements().iter().all(|g| h.elements().iter().all(|x| h.contains(&x.conjugate_by(g)))))
            .collect();
        let found = normal_subgroups(&d4, &Limits::default()).unwrap();
        assert_eq!(found.len(), brute.len());
        assert_eq!(found.len(), 6);
        assert!(brute.iter().all(|b| found.contains(b)));
    }

    #[test]
    fn one_block_of_three() {
        let report = verify_normal_subgroups(&FiniteSpace::discrete(3), &Limits::default()).unwrap();
        assert_eq!(orders(&report.normal), vec![1, 3, 6]);
        assert!(report.exact_match());
    }

    #[test]
    fn two_blocks_of_two_have_a_diagonal() {
        let s = FiniteSpace::parse("a1: a1\na2: a2\nc1: c1 a1 a2\nc2: c2 a1 a2").unwrap();
        let report = verify_normal_subgroups(&s, &Limits::default()).unwrap();
        assert_eq!(report.normal.len(), 5);
        assert_eq!(report.candidates.len(), 4);
        assert!(report.non_normal_candidates.is_empty());
        assert_eq!(report.off_list.len(), 1);
        let diagonal = &report.off_list[0];
        assert_eq!(diagonal.order(), 2);
        let g = &diagonal.elements()[1];
        assert_eq!(g.cycle_string(s.names()), "(a1 a2)(c1 c2)");
    }

    #[test]
    fn requires_full_transitivity() {
        let p3 = crate::graph::Graph::parse("1 2\n2 3").unwrap().encode();
        assert!(matches!(
            verify_normal_subgroups(&p3, &Limits::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn trivial_group() {
        let g = PermutationGroup::trivial(vec!["x".into()]);
        let n = normal_subgroups(&g, &Limits::default()).unwrap();
        assert_eq!(n.len(), 1);
        assert!(is_normal(&n[0], &g));
    }
}
