//! Similarity of points.
//!
//! Two points are similar when some open neighbourhoods of them are
//! homeomorphic by a map sending one point to the other. In an Alexandrov
//! space it is enough to look at the minimal open sets: a witness `h: U -> V`
//! restricts to `U_x -> U_y`, because minimal open sets of an open subspace
//! are the minimal open sets of the whole space. [`FiniteSpace::similar`]
//! uses that criterion and [`FiniteSpace::similar_exhaustive`] searches all
//! pairs of open neighbourhoods instead.

use super::{search, FiniteSpace, PointSet};
use crate::{Error, Result};

/// Partition of the points into similarity classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityPartition {
    pub blocks: Vec<PointSet>,
    /// Common rank of each block (`None` inside the perfect kernel).
    pub ranks: Vec<Option<usize>>,
    pub block_of: Vec<usize>,
}

impl SimilarityPartition {
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// `∏ |block|!`, saturating at `u128::MAX`.
    pub fn factorial_product(&self) -> u128 {
        self.blocks
            .iter()
            .map(|b| (1..=b.len() as u128).product::<u128>())
            .fold(1u128, |acc, f| acc.saturating_mul(f))
    }
}

impl FiniteSpace {
    /// A witness for the similarity of `x` and `y`: an isomorphism of the
    /// minimal open sets sending `x` to `y`, as `(point, image)` pairs.
    pub fn similarity_witness(&self, x: usize, y: usize) -> Option<Vec<(usize, usize)>> {
        let (ux, uy) = (self.min_open(x), self.min_open(y));
        if ux.len() != uy.len() {
            return None;
        }
        self.subspace_isomorphism(ux, uy, x, y)
    }

    pub fn similar(&self, x: usize, y: usize) -> bool {
        self.similarity_witness(x, y).is_some()
    }

    pub fn similar_by_name(&self, x: &str, y: &str) -> Result<Option<Vec<(usize, usize)>>> {
        Ok(self.similarity_witness(self.index_of(x)?, self.index_of(y)?))
    }

    /// Similarity decided by trying every pair of open sets `U ∋ x`, `V ∋ y`.
    pub fn similar_exhaustive(&self, x: usize, y: usize) -> Result<bool> {
        const LIMIT: usize = 16;
        if self.len() > LIMIT {
            return Err(Error::SizeBound {
                what: "points for exhaustive similarity",
                limit: LIMIT,
                actual: self.len(),
            });
        }
        let opens_x = self.open_sets_containing(x);
        let opens_y = self.open_sets_containing(y);
        Ok(opens_x.iter().any(|&u| {
            opens_y
                .iter()
                .any(|&v| u.len() == v.len() && self.subspace_isomorphism(u, v, x, y).is_some())
        }))
    }

    fn open_sets_containing(&self, x: usize) -> Vec<PointSet> {
        let others: Vec<usize> = (0..self.len()).filter(|&i| i != x).collect();
        (0u64..1 << others.len())
            .map(|mask| {
                let mut s = PointSet::singleton(x);
                for (bit, &p) in others.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        s.insert(p);
                    }
                }
                s
            })
            .filter(|&s| self.is_open(s))
            .collect()
    }

    pub(crate) fn subspace_isomorphism(
        &self,
        u: PointSet,
        v: PointSet,
        x: usize,
        y: usize,
    ) -> Option<Vec<(usize, usize)>> {
        let (su, sv) = (self.subspace(u), self.subspace(v));
        let iu: Vec<usize> = u.iter().collect();
        let iv: Vec<usize> = v.iter().collect();
        let lx = iu.iter().position(|&p| p == x)?;
        let ly = iv.iter().position(|&p| p == y)?;
        let local = search::first_isomorphism(&su, &sv, Some((lx, ly)))?;
        Some(local.iter().enumerate().map(|(i, &j)| (iu[i], iv[j])).collect())
    }

    pub fn similarity_partition(&self) -> SimilarityPartition {
        let ranks = self.cb_data().ranks;
        let mut blocks: Vec<PointSet> = Vec::new();
        let mut block_of = vec![0; self.len()];
        for x in 0..self.len() {
            match blocks
                .iter()
                .position(|b| self.similar(b.first().unwrap(), x))
            {
                Some(i) => {
                    blocks[i].insert(x);
                    block_of[x] = i;
                }
                None => {
                    block_of[x] = blocks.len();
                    blocks.push(PointSet::singleton(x));
                }
            }
        }
        let block_ranks = blocks.iter().map(|b| ranks[b.first().unwrap()]).collect();
        SimilarityPartition {
            blocks,
            ranks: block_ranks,
            block_of,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::vee;
    use super::*;

    fn fans() -> FiniteSpace {
        FiniteSpace::parse("a1: a1\na2: a2\nc1: c1 a1 a2\nb1: b1\nb2: b2\nb3: b3\nc2: c2 b1 b2 b3")
            .unwrap()
    }

    #[test]
    fn isolated_points_are_similar() {
        let s = fans();
        for x in ["a1", "b3", "a2"] {
            for y in ["b1", "a1"] {
                assert!(s.similar_by_name(x, y).unwrap().is_some());
            }
        }
    }

    #[test]
    fn fan_centres_are_not_similar() {
        let s = fans();
        let (c1, c2) = (s.index_of("c1").unwrap(), s.index_of("c2").unwrap());
        assert!(!s.similar(c1, c2));
        assert!(!s.similar_exhaustive(c1, c2).unwrap());
    }

    #[test]
    fn reflexive_witness_is_identity_on_the_point() {
        let s = vee();
        let w = s.similarity_witness(2, 2).unwrap();
        assert!(w.contains(&(2, 2)));
        assert!(s.similar_by_name("a", "zz").is_err());
    }

    #[test]
    fn partition_examples() {
        let p = vee().similarity_partition();
        assert_eq!(p.blocks, vec![PointSet::from_bits(0b011), PointSet::from_bits(0b100)]);
        assert_eq!(p.ranks, vec![Some(0), Some(1)]);
        assert_eq!(FiniteSpace::discrete(5).similarity_partition().blocks.len(), 1);
        let s = fans();
        let p = s.similarity_partition();
        let mut sizes = p.sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 5]);
    }

    #[test]
    fn criterion_needs_more_than_sizes() {
        // c and d both have three-point minimal opens, but shaped differently
        let s = FiniteSpace::parse("a: a\nb: a b\nc: a b c\nx: x\ny: y\nd: x y d").unwrap();
        let (c, d) = (s.index_of("c").unwrap(), s.index_of("d").unwrap());
        assert!(!s.similar(c, d));
        assert!(!s.similar_exhaustive(c, d).unwrap());
    }
}
