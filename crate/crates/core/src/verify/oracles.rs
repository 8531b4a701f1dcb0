//! Reference computations that share no code with the main algorithms.

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

use crate::finite::{all_perms, FiniteSpace, Perm, PointSet};
use crate::ordinal::Ordinal;

/// Exponents drawn by the random generators.
pub fn exponent_pool() -> Vec<Ordinal> {
    ["1", "2", "3", "w", "w + 1", "w^2", "w^w"]
        .iter()
        .map(|s| s.parse().expect("pool entries parse"))
        .collect()
}

/// A random ordinal built from up to three pool exponents, with an optional
/// finite tail, coefficients in `1..=4`.
pub fn random_ordinal<R: Rng>(rng: &mut R, pool: &[Ordinal]) -> Ordinal {
    let count = rng.gen_range(1..=3);
    let mut exps: Vec<&Ordinal> = Vec::new();
    while exps.len() < count {
        let e = &pool[rng.gen_range(0..pool.len())];
        if !exps.contains(&e) {
            exps.push(e);
        }
    }
    exps.sort_by(|a, b| b.cmp(a));
    let mut terms: Vec<(Ordinal, u64)> = exps
        .into_iter()
        .map(|e| (e.clone(), rng.gen_range(1..=4)))
        .collect();
    if rng.gen_bool(0.5) {
        terms.push((Ordinal::zero(), rng.gen_range(1..=4)));
    }
    Ordinal::from_terms(terms).expect("decreasing exponents")
}

/// Like [`random_ordinal`], but occasionally zero or finite.
pub fn random_any<R: Rng>(rng: &mut R, pool: &[Ordinal]) -> Ordinal {
    match rng.gen_range(0..20) {
        0 => Ordinal::zero(),
        1 => Ordinal::nat(rng.gen_range(1..=4u32)),
        _ => random_ordinal(rng, pool),
    }
}

fn terms_of(o: &Ordinal) -> Vec<(Ordinal, BigUint)> {
    o.terms()
        .iter()
        .map(|t| (t.exponent().clone(), t.coefficient().clone()))
        .collect()
}

fn from_pairs(terms: Vec<(Ordinal, BigUint)>) -> Ordinal {
    Ordinal::from_terms(terms).expect("rewriting keeps exponents decreasing")
}

/// Ordinal sum by rewriting the concatenated term list: a term followed by
/// a larger power vanishes, and neighbours with equal exponents merge.
pub fn add(a: &Ordinal, b: &Ordinal) -> Ordinal {
    let mut terms = terms_of(a);
    terms.extend(terms_of(b));
    loop {
        let Some(i) = (0..terms.len().saturating_sub(1)).find(|&i| terms[i].0 <= terms[i + 1].0) else {
            break;
        };
        let (e, c) = terms.remove(i);
        if e == terms[i].0 {
            terms[i].1 += c;
        }
    }
    from_pairs(terms)
}

/// Canonical representative by rewriting. Middle terms are swapped past
/// the leading term and absorbed. A last term `w^b*c` splits as
/// `w^b*(c-1) + w^b`, whose middle part is absorbed the same way.
pub fn canonical(gamma: &Ordinal) -> Ordinal {
    let mut terms = terms_of(gamma);
    while terms.len() >= 3 {
        terms.remove(1);
    }
    if terms.len() == 2 {
        terms[1].1 = BigUint::from(1u32);
    }
    from_pairs(terms)
}

/// Largest index used for the second and third digit of `w^2*a + w*b + c`;
/// `GENERIC` stands for every value from there on.
const GENERIC: usize = 8;

/// A subset of `w^3`, stored as membership of `w^2*a + w*b + c` for
/// `a <= top`, with `b` and `c` at `GENERIC` standing for all larger values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSet {
    rows: Vec<[[bool; GENERIC + 1]; GENERIC + 1]>,
}

impl TripleSet {
    /// The interval `[0, w^2*a + w*b + c)` with `a, b, c < GENERIC`.
    pub fn interval(a: usize, b: usize, c: usize) -> Self {
        let rows = (0..=a)
            .map(|x| {
                let mut grid = [[false; GENERIC + 1]; GENERIC + 1];
                for (y, row) in grid.iter_mut().enumerate() {
                    for (z, cell) in row.iter_mut().enumerate() {
                        *cell = (x, y, z) < (a, b, c);
                    }
                }
                grid
            })
            .collect();
        TripleSet { rows }
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.rows
            .get(a)
            .is_some_and(|g| g[b.min(GENERIC)][c.min(GENERIC)])
    }

    /// Points of the set that are limits of other points of the set.
    pub fn derived(&self) -> Self {
        let mut rows = vec![[[false; GENERIC + 1]; GENERIC + 1]; self.rows.len()];
        for (a, grid) in rows.iter_mut().enumerate() {
            for b in 0..=GENERIC {
                let x_in = self.contains(a, b, 0);
                grid[b][0] = x_in
                    && if b > 0 {
                        // w^2*a + w*b is the limit of w^2*a + w*(b-1) + c
                        let prev = if b == GENERIC { GENERIC } else { b - 1 };
                        self.contains(a, prev, GENERIC)
                    } else if a > 0 {
                        // w^2*a is the limit of w^2*(a-1) + w*b' + c for large b'
                        (0..=GENERIC).any(|c| self.contains(a - 1, GENERIC, c))
                    } else {
                        false
                    };
            }
        }
        TripleSet { rows }
    }

    /// Order type, summing rows `c`, then slices `b`, then `a`.
    pub fn order_type(&self) -> Ordinal {
        let omega = Ordinal::omega();
        let mut total = Ordinal::zero();
        for grid in &self.rows {
            let row_type = |b: usize| -> Ordinal {
                if grid[b][GENERIC] {
                    omega.clone()
                } else {
                    Ordinal::nat(grid[b][..GENERIC].iter().filter(|&&m| m).count() as u64)
                }
            };
            let mut slice = Ordinal::zero();
            for b in 0..GENERIC {
                slice = add(&slice, &row_type(b));
            }
            // the generic row repeated w times
            let generic = row_type(GENERIC);
            let tail = match generic.as_natural() {
                Some(n) if n.is_zero() => Ordinal::zero(),
                Some(_) => omega.clone(),
                None => Ordinal::omega_pow(Ordinal::nat(2u32)),
            };
            slice = add(&slice, &tail);
            total = add(&total, &slice);
        }
        total
    }

    /// Rank of a point: the number of derivatives it survives, up to `max`.
    pub fn rank_of(&self, a: usize, b: usize, c: usize, max: usize) -> Option<usize> {
        if !self.contains(a, b, c) {
            return None;
        }
        let mut set = self.clone();
        let mut rank = 0;
        while rank < max {
            set = set.derived();
            if !set.contains(a, b, c) {
                break;
            }
            rank += 1;
        }
        Some(rank)
    }

    pub fn value(a: usize, b: usize, c: usize) -> Ordinal {
        let mut terms = Vec::new();
        for (e, coef) in [(2u64, a), (1, b), (0, c)] {
            if coef > 0 {
                terms.push((Ordinal::nat(e), coef as u64));
            }
        }
        Ordinal::from_terms(terms).expect("decreasing exponents")
    }
}

/// Every reflexive, transitive relation on `n` points, as minimal open sets.
pub fn all_topologies(n: usize) -> Vec<FiniteSpace> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let names: Vec<String> = (1..=n).map(|i| format!("p{i}")).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut rel = vec![vec![false; n]; n];
        for (x, row) in rel.iter_mut().enumerate() {
            row[x] = true;
        }
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            rel[x][y] = mask >> bit & 1 == 1;
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !rel[x][y] || (0..n).all(|z| !rel[y][z] || rel[x][z]))
        });
        if !transitive {
            continue;
        }
        let sets = rel
            .iter()
            .map(|row| (0..n).filter(|&y| row[y]).collect::<PointSet>())
            .collect();
        out.push(FiniteSpace::from_sets(names.clone(), sets).expect("preorders are valid"));
    }
    out
}

pub fn is_t0(space: &FiniteSpace) -> bool {
    let n = space.len();
    (0..n).all(|x| {
        (0..n).all(|y| x == y || !(space.min_open(x).contains(y) && space.min_open(y).contains(x)))
    })
}

/// Every nonempty subset has a point isolated in it.
pub fn is_scattered(space: &FiniteSpace) -> bool {
    let n = space.len();
    (1u64..1 << n).all(|bits| {
        let a = PointSet::from_bits(bits);
        a.iter().any(|x| space.min_open(x).intersection(a) == PointSet::singleton(x))
    })
}

/// All homeomorphisms, by trying every permutation.
pub fn homeomorphisms(space: &FiniteSpace) -> Vec<Perm> {
    all_perms(space.len())
        .into_iter()
        .filter(|p| (0..space.len()).all(|x| p.image_of(space.min_open(x)) == space.min_open(p.apply(x))))
        .collect()
}

/// Tuple-by-tuple full transitivity over a given group and similarity
/// relation.
pub fn fully_transitive(n: usize, group: &[Perm], similar: &dyn Fn(usize, usize) -> bool) -> bool {
    fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        tuples(n, k - 1)
            .into_iter()
            .flat_map(|t| {
                (0..n).filter(|x| !t.contains(x)).map(|x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                }).collect::<Vec<_>>()
            })
            .collect()
    }
    (1..=n).all(|k| {
        let all = tuples(n, k);
        all.iter().all(|s| {
            all.iter().all(|t| {
                !s.iter().zip(t).all(|(&x, &y)| similar(x, y))
                    || group.iter().any(|g| s.iter().zip(t).all(|(&x, &y)| g.apply(x) == y))
            })
        })
    })
}

/// Graphs on `n` vertices with at least one edge, one per isomorphism class,
/// as edge lists.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = all_perms(n);
    let relabel = |mask: u32, p: &Perm| -> u32 {
        pairs.iter().enumerate().fold(0, |acc, (bit, &(a, b))| {
            if mask >> bit & 1 == 0 {
                return acc;
            }
            let (x, y) = (p.apply(a), p.apply(b));
            let (x, y) = (x.min(y), x.max(y));
            acc | 1 << pairs.iter().position(|&q| q == (x, y)).expect("pair")
        })
    };
    (1u32..1 << pairs.len())
        .filter(|&mask| perms.iter().all(|p| relabel(mask, p) >= mask))
        .map(|mask| {
            pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &e)| e)
                .collect()
        })
        .collect()
}

/// Permutations of the vertices preserving the edge set.
pub fn graph_automorphism_count(n: usize, edges: &[(usize, usize)]) -> usize {
    let has = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    all_perms(n)
        .iter()
        .filter(|p| edges.iter().all(|&(a, b)| has(p.apply(a), p.apply(b))))
        .count()
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn rewriting_add() {
        assert_eq!(add(&o("w^2*3 + w"), &o("w*5 + 1")), o("w^2*3 + w*6 + 1"));
        assert_eq!(add(&o("w + 3"), &o("w^2")), o("w^2"));
        assert_eq!(add(&o("0"), &o("w")), o("w"));
    }

    #[test]
    fn rewriting_canonical() {
        assert_eq!(canonical(&o("w^3 + w^2*4 + w")), o("w^3 + w"));
        assert_eq!(canonical(&o("w^2*3 + w*2 + 5")), o("w^2*3 + 1"));
    }

    #[test]
    fn triple_set_derivative() {
        // [0, w^2] has derivative {w*m : 1 <= m <= w} of type w + 1
        let x = TripleSet::interval(1, 0, 1);
        assert_eq!(x.order_type(), o("w^2 + 1"));
        assert_eq!(x.derived().order_type(), o("w + 1"));
        assert_eq!(x.derived().derived().order_type(), o("1"));
        assert_eq!(TripleSet::interval(3, 0, 1).derived().derived().order_type(), o("3"));
        assert_eq!(x.rank_of(1, 0, 0, 3), Some(2));
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_topologies(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 4, 29, 355]);
        let t0: Vec<usize> = (0..=4).map(|n| all_topologies(n).iter().filter(|s| is_t0(s)).count()).collect();
        assert_eq!(t0, vec![1, 1, 3, 19, 219]);
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (2..=5).map(|n| graphs_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 10, 33]);
    }
}
