//! Backtracking search for isomorphisms between finite spaces.
//!
//! Points are first coloured by homeomorphism invariants (Cantor-Bendixson
//! rank, size of the minimal open set, size of the closure of the point),
//! then the colouring is refined on the disjoint union of both spaces until
//! stable. A point may only map to a point of the same colour.

use std::collections::BTreeMap;

use super::FiniteSpace;

type Key = (Option<usize>, usize, usize, bool);

fn base_keys(space: &FiniteSpace, pinned: Option<usize>) -> Vec<Key> {
    let ranks = space.cb_data().ranks;
    (0..space.len())
        .map(|x| {
            let up = (0..space.len())
                .filter(|&y| space.min_open(y).contains(x))
                .count();
            (ranks[x], space.min_open(x).len(), up, pinned == Some(x))
        })
        .collect()
}

/// Joint colouring of `a` and `b`; colours are comparable across the two.
fn refine(a: &FiniteSpace, b: &FiniteSpace, pin: Option<(usize, usize)>) -> (Vec<usize>, Vec<usize>) {
    let ka = base_keys(a, pin.map(|p| p.0));
    let kb = base_keys(b, pin.map(|p| p.1));
    let mut colours = relabel(ka.iter().chain(kb.iter()));
    let n = a.len();
    let spaces = [a, b];
    loop {
        let classes = colours.iter().collect::<std::collections::BTreeSet<_>>().len();
        let signatures: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..2 * n)
            .map(|g| {
                let (s, x, off) = if g < n { (0, g, 0) } else { (1, g - n, n) };
                let space = spaces[s];
                let mut down: Vec<usize> = space
                    .min_open(x)
                    .iter()
                    .filter(|&y| y != x)
                    .map(|y| colours[off + y])
                    .collect();
                let mut up: Vec<usize> = (0..n)
                    .filter(|&y| y != x && space.min_open(y).contains(x))
                    .map(|y| colours[off + y])
                    .collect();
                down.sort_unstable();
                up.sort_unstable();
                (colours[g], down, up)
            })
            .collect();
        let next = relabel(signatures.iter());
        let next_classes = next.iter().collect::<std::collections::BTreeSet<_>>().len();
        colours = next;
        if next_classes == classes {
            break;
        }
    }
    let cb = colours.split_off(n);
    (colours, cb)
}

fn relabel<'a, T: Ord + 'a>(keys: impl Iterator<Item = &'a T>) -> Vec<usize> {
    let keys: Vec<&T> = keys.collect();
    let mut table: BTreeMap<&T, usize> = BTreeMap::new();
    for k in &keys {
        let next = table.len();
        table.entry(k).or_insert(next);
    }
    // renumber in key order so that labels do not depend on point order
    for (i, v) in table.values_mut().enumerate() {
        *v = i;
    }
    keys.iter().map(|k| table[k]).collect()
}

/// Calls `visit` with the image vector of every isomorphism `a -> b`
/// (optionally sending `pin.0` to `pin.1`) until it returns `false`.
pub(crate) fn for_each_isomorphism<F>(
    a: &FiniteSpace,
    b: &FiniteSpace,
    pin: Option<(usize, usize)>,
    mut visit: F,
) where
    F: FnMut(&[usize]) -> bool,
{
    let n = a.len();
    if b.len() != n {
        return;
    }
    let (ca, cb) = refine(a, b, pin);
    let mut count_a = BTreeMap::new();
    let mut count_b = BTreeMap::new();
    for &c in &ca {
        *count_a.entry(c).or_insert(0usize) += 1;
    }
    for &c in &cb {
        *count_b.entry(c).or_insert(0usize) += 1;
    }
    if count_a != count_b {
        return;
    }

    let keys = base_keys(a, pin.map(|p| p.0));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (!keys[x].3, keys[x].0, keys[x].1, keys[x].2, x));

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).filter(|&y| cb[y] == ca[x]).collect())
        .collect();

    let mut search = Search {
        a,
        b,
        order,
        candidates,
        images: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search.run(0, &mut visit);
}

struct Search<'s> {
    a: &'s FiniteSpace,
    b: &'s FiniteSpace,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    /// Returns `false` once the visitor asks to stop.
    fn run<F: FnMut(&[usize]) -> bool>(&mut self, depth: usize, visit: &mut F) -> bool {
        if depth == self.order.len() {
            return visit(&self.images);
        }
        let x = self.order[depth];
        for ci in 0..self.candidates[x].len() {
            let y = self.candidates[x][ci];
            if self.used[y] || !self.consistent(depth, x, y) {
                continue;
            }
            self.images[x] = y;
            self.used[y] = true;
            let go_on = self.run(depth + 1, visit);
            self.used[y] = false;
            self.images[x] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }

    fn consistent(&self, depth: usize, x: usize, y: usize) -> bool {
        let (ux, uy) = (self.a.min_open(x), self.b.min_open(y));
        self.order[..depth].iter().all(|&p| {
            let fp = self.images[p];
            ux.contains(p) == uy.contains(fp)
                && self.a.min_open(p).contains(x) == self.b.min_open(fp).contains(y)
        })
    }
}

pub(crate) fn first_isomorphism(
    a: &FiniteSpace,
    b: &FiniteSpace,
    pin: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_isomorphism(a, b, pin, |images| {
        found = Some(images.to_vec());
        false
    });
    found
}
