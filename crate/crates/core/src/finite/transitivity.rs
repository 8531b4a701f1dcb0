//! Full transitivity and swap homeomorphisms.

use std::collections::HashSet;

use super::{FiniteSpace, Perm, PermutationGroup, PointSet, SimilarityPartition};
use crate::{Error, Limits, Result};

/// Outcome of the two full-transitivity tests, which must agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullTransitivity {
    pub fully_transitive: bool,
    /// Tuple-by-tuple check: every pair of distinct-entry tuples with
    /// similar coordinates is matched by some homeomorphism.
    pub direct: bool,
    /// `|Homeo(X)| = ∏ |X_i|!` over similarity classes.
    pub order_test: bool,
    pub homeo_order: usize,
    pub class_factorial_product: u128,
    /// Longest tuple length examined by the direct check.
    pub tuple_lengths_checked: usize,
    /// A pair of tuples no homeomorphism matches, when the direct check fails.
    pub counterexample: Option<(Vec<usize>, Vec<usize>)>,
}

impl FiniteSpace {
    pub fn is_fully_transitive(&self, limits: &Limits) -> Result<FullTransitivity> {
        limits.check("points for the full transitivity check", limits.normal_points, self.len())?;
        let group = self.homeo_group(limits)?;
        let partition = self.similarity_partition();
        self.full_transitivity_with(&group, &partition)
    }

    pub(crate) fn full_transitivity_with(
        &self,
        group: &PermutationGroup,
        partition: &SimilarityPartition,
    ) -> Result<FullTransitivity> {
        let product = partition.factorial_product();
        let order_test = group.order() as u128 == product;

        let (direct, lengths, counterexample) = direct_check(self.len(), group, partition)?;
        if direct != order_test {
            return Err(Error::Internal(format!(
                "full transitivity tests disagree: direct={direct}, order test={order_test}"
            )));
        }
        Ok(FullTransitivity {
            fully_transitive: direct,
            direct,
            order_test,
            homeo_order: group.order(),
            class_factorial_product: product,
            tuple_lengths_checked: lengths,
            counterexample,
        })
    }
}

/// For each tuple length, partitions the distinct-entry tuples into group
/// orbits and compares every orbit with the set of tuples whose coordinates
/// are similar to it. Pairs `(x, y)` are matched by the group exactly when
/// `y` lies in the orbit of `x`, so this decides the definition pair by pair
/// while visiting each tuple once.
fn direct_check(
    n: usize,
    group: &PermutationGroup,
    partition: &SimilarityPartition,
) -> Result<(bool, usize, Option<(Vec<usize>, Vec<usize>)>)> {
    let block_sizes = partition.sizes();
    for k in 1..=n {
        let mut covered: HashSet<Vec<u8>> = HashSet::new();
        let mut failure = None;
        for_each_tuple(n, k, &mut |x: &[usize]| {
            let key: Vec<u8> = x.iter().map(|&i| i as u8).collect();
            if covered.contains(&key) {
                return true;
            }
            let orbit: HashSet<Vec<u8>> = group
                .elements()
                .iter()
                .map(|g| x.iter().map(|&i| g.apply(i) as u8).collect())
                .collect();
            let mut used = vec![0usize; block_sizes.len()];
            let mut compatible: u128 = 1;
            for &i in x {
                let b = partition.block_of[i];
                compatible *= (block_sizes[b] - used[b]) as u128;
                used[b] += 1;
            }
            let in_orbit_compatible = orbit
                .iter()
                .filter(|y| {
                    y.iter()
                        .zip(x)
                        .all(|(&yi, &xi)| partition.block_of[yi as usize] == partition.block_of[xi])
                })
                .count() as u128;
            if in_orbit_compatible != orbit.len() as u128 {
                failure = Some(Err(Error::Internal(
                    "a homeomorphism moved a point out of its similarity class".into(),
                )));
                return false;
            }
            if in_orbit_compatible < compatible {
                let y = find_unmatched(n, x, partition, &orbit);
                failure = Some(Ok((x.to_vec(), y)));
                return false;
            }
            covered.extend(orbit);
            true
        });
        match failure {
            Some(Err(e)) => return Err(e),
            Some(Ok(pair)) => return Ok((false, k, Some(pair))),
            None => {}
        }
    }
    Ok((true, n, None))
}

fn find_unmatched(
    n: usize,
    x: &[usize],
    partition: &SimilarityPartition,
    orbit: &HashSet<Vec<u8>>,
) -> Vec<usize> {
    let mut found = None;
    for_each_tuple(n, x.len(), &mut |y: &[usize]| {
        let compatible = y
            .iter()
            .zip(x)
            .all(|(&yi, &xi)| partition.block_of[yi] == partition.block_of[xi]);
        let key: Vec<u8> = y.iter().map(|&i| i as u8).collect();
        if compatible && !orbit.contains(&key) {
            found = Some(y.to_vec());
            return false;
        }
        true
    });
    found.expect("orbit smaller than the compatible set")
}

/// Visits all `k`-tuples of distinct points of `0..n` in lexicographic order
/// until `visit` returns `false`.
fn for_each_tuple(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(n: usize, k: usize, used: &mut PointSet, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in 0..n {
            if used.contains(i) {
                continue;
            }
            used.insert(i);
            cur.push(i);
            let go_on = go(n, k, used, cur, visit);
            cur.pop();
            used.remove(i);
            if !go_on {
                return false;
            }
        }
        true
    }
    go(n, k, &mut PointSet::empty(), &mut Vec::with_capacity(k), visit);
}

/// Why no swap homeomorphism could be built from clopen neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwapFailure {
    /// Every clopen set containing one point contains the other.
    SameComponent,
    /// The smallest clopen neighbourhood of `point` contains the fixed point `fixed`.
    NeighbourhoodMeetsFixedSet { point: usize, fixed: usize },
    /// The smallest clopen neighbourhoods are not isomorphic by a map
    /// carrying one point to the other.
    NoIsomorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SwapOutcome {
    Swap(Perm),
    Failed(SwapFailure),
}

impl FiniteSpace {
    /// A homeomorphism exchanging `x` and `y` and fixing `fixed`, built from
    /// disjoint clopen neighbourhoods `U ∋ x`, `V ∋ y` avoiding `fixed` and an
    /// isomorphism `h: U -> V`: it is `h` on `U`, `h⁻¹` on `V` and the
    /// identity elsewhere.
    ///
    /// Clopen sets of a finite space are unions of connected components, and
    /// any such `h` carries the component of `x` onto the component of `y`,
    /// so the components are the only neighbourhoods worth trying.
    pub fn swap_homeo(&self, x: usize, y: usize, fixed: PointSet) -> Result<SwapOutcome> {
        if x == y {
            return Err(Error::Precondition("swap needs two distinct points".into()));
        }
        if fixed.contains(x) || fixed.contains(y) {
            return Err(Error::Precondition("swapped points must lie outside the fixed set".into()));
        }
        if !self.similar(x, y) {
            return Err(Error::Precondition(format!(
                "{} and {} are not similar",
                self.name(x),
                self.name(y)
            )));
        }
        let components = self.components();
        let cx = *components.iter().find(|c| c.contains(x)).unwrap();
        let cy = *components.iter().find(|c| c.contains(y)).unwrap();
        if cx == cy {
            return Ok(SwapOutcome::Failed(SwapFailure::SameComponent));
        }
        for (point, comp) in [(x, cx), (y, cy)] {
            if let Some(f) = comp.intersection(fixed).first() {
                return Ok(SwapOutcome::Failed(SwapFailure::NeighbourhoodMeetsFixedSet {
                    point,
                    fixed: f,
                }));
            }
        }
        let Some(h) = self.subspace_isomorphism(cx, cy, x, y) else {
            return Ok(SwapOutcome::Failed(SwapFailure::NoIsomorphism));
        };
        let mut images: Vec<usize> = (0..self.len()).collect();
        for (p, q) in h {
            images[p] = q;
            images[q] = p;
        }
        let g = Perm::from_images(images).expect("disjoint swap is a bijection");
        if !self.is_homeomorphism(&g) {
            return Err(Error::Internal("swap map is not a homeomorphism".into()));
        }
        Ok(SwapOutcome::Swap(g))
    }

    pub fn swap_homeo_by_name<S: AsRef<str>>(&self, x: &str, y: &str, fixed: &[S]) -> Result<SwapOutcome> {
        let fixed = self.set_of(fixed)?;
        self.swap_homeo(self.index_of(x)?, self.index_of(y)?, fixed)
    }
}
