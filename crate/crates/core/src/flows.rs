//! Linear orders on finite sets and the action of permutations on them.
//!
//! A permutation `g` moves an order `<` to `g<`, where `x (g<) y` iff
//! `g⁻¹x < g⁻¹y`. On a ranked sequence this relabels every entry by `g`.

use std::collections::HashMap;
use std::fmt;

use crate::finite::{all_perms, FiniteSpace, Perm, PointSet};
use crate::{Error, Limits, Result};

/// A total order on `0..n`, listed from least to greatest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder(Vec<usize>);

impl LinearOrder {
    /// The order listing `seq` from least to greatest; `None` unless `seq`
    /// is a permutation of `0..seq.len()`.
    pub fn from_sequence(seq: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; seq.len()];
        for &x in &seq {
            if x >= seq.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(LinearOrder(seq))
    }

    pub fn natural(n: usize) -> Self {
        LinearOrder((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.0
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        let pos = |p| self.0.iter().position(|&z| z == p);
        pos(x) < pos(y)
    }
}

/// Prints `1<2<3`, numbering points from 1.
impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        f.write_str(&parts.join("<"))
    }
}

/// All `n!` linear orders on `0..n`.
pub fn lo_space(n: usize, limits: &Limits) -> Result<Vec<LinearOrder>> {
    limits.check("points for linear order enumeration", limits.lo_points, n)?;
    Ok(all_perms(n)
        .into_iter()
        .map(|p| LinearOrder(p.images().collect()))
        .collect())
}

pub fn act(g: &Perm, ord: &LinearOrder) -> Result<LinearOrder> {
    if g.len() != ord.len() {
        return Err(Error::GroundMismatch);
    }
    Ok(LinearOrder(ord.0.iter().map(|&x| g.apply(x)).collect()))
}

/// Whether every ordered pair of orders on `n` points is related by exactly
/// one permutation.
pub fn check_simply_transitive(n: usize, limits: &Limits) -> Result<bool> {
    limits.check("points for the simple transitivity check", limits.transitivity_points, n)?;
    let orders = lo_space(n, limits)?;
    let index: HashMap<&LinearOrder, usize> = orders.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let perms = all_perms(n);
    for start in &orders {
        let mut hits = vec![0u32; orders.len()];
        for g in &perms {
            hits[index[&act(g, start)?]] += 1;
        }
        if hits.iter().any(|&h| h != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of letting `Homeo(X)` act on `∏ LO(X_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowReport {
    pub factor_sizes: Vec<usize>,
    pub flow_size: usize,
    pub group_order: usize,
    /// Each point of the flow has trivial stabiliser and the orbit map is onto.
    pub simply_transitive: bool,
    /// Every orbit is the whole flow.
    pub minimal: bool,
}

impl FlowReport {
    pub fn passed(&self) -> bool {
        self.simply_transitive && self.minimal
    }
}

type FlowPoint = Vec<Vec<usize>>;

fn orders_of(block: PointSet) -> Vec<Vec<usize>> {
    let members: Vec<usize> = block.iter().collect();
    all_perms(members.len())
        .into_iter()
        .map(|p| p.images().map(|i| members[i]).collect())
        .collect()
}

/// Builds `∏ LO(X_i)` over the similarity classes of a fully transitive
/// space and checks that `Homeo(X)` acts on it simply transitively.
pub fn product_flow_check(space: &FiniteSpace, limits: &Limits) -> Result<FlowReport> {
    let ft = space.is_fully_transitive(limits)?;
    if !ft.fully_transitive {
        return Err(Error::Precondition(
            "the homeomorphism group is not fully transitive".into(),
        ));
    }
    let group = space.homeo_group(limits)?;
    let blocks = space.similarity_partition().blocks;
    let factor_sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
    let flow_size = factor_sizes
        .iter()
        .map(|&s| (1..=s).product::<usize>())
        .product::<usize>();
    limits.check("points of the product flow", limits.group_order, flow_size)?;

    for g in group.elements() {
        if let Some(b) = blocks.iter().find(|&&b| g.image_of(b) != b) {
            return Err(Error::Internal(format!(
                "homeomorphism {} does not preserve the class {:?}",
                g.cycle_string(space.names()),
                space.set_names(*b)
            )));
        }
    }

    let mut flow: Vec<FlowPoint> = vec![Vec::new()];
    for &b in &blocks {
        let choices = orders_of(b);
        flow = flow
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    let index: HashMap<&FlowPoint, usize> = flow.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let translate = |g: &Perm, p: &FlowPoint| -> usize {
        let moved: FlowPoint = p
            .iter()
            .map(|seq| seq.iter().map(|&x| g.apply(x)).collect())
            .collect();
        index[&moved]
    };

    let mut simply_transitive = true;
    let mut minimal = true;
    for p in &flow {
        let mut hits = vec![0u32; flow.len()];
        for g in group.elements() {
            hits[translate(g, p)] += 1;
        }
        minimal &= hits.iter().all(|&h| h > 0);
        simply_transitive &= hits.iter().all(|&h| h == 1);
    }
    Ok(FlowReport {
        factor_sizes,
        flow_size,
        group_order: group.order(),
        simply_transitive,
        minimal,
    })
}
