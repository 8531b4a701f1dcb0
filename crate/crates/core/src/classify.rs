//! Ordinal spaces up to homeomorphism, and their Cantor-Bendixson data.
//!
//! Every ordinal space falls in exactly one of four families:
//!
//! | family            | representative     |
//! |-------------------|--------------------|
//! | `Finite(k)`       | `k`                |
//! | `CompactInfinite` | `w^a*k + 1`        |
//! | `LimitPure`       | `w^a*k`            |
//! | `LimitMixed`      | `w^a*k + w^b`      |
//!
//! with `k >= 1`, `a > 0` and `0 < b < a`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ordinal::{Kind, Ordinal};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceClass {
    Finite(BigUint),
    CompactInfinite { alpha: Ordinal, k: BigUint },
    LimitPure { alpha: Ordinal, k: BigUint },
    LimitMixed { alpha: Ordinal, k: BigUint, beta: Ordinal },
}

impl SpaceClass {
    /// Canonical ordinal of the family.
    pub fn representative(&self) -> Ordinal {
        match self {
            SpaceClass::Finite(k) => Ordinal::nat(k.clone()),
            SpaceClass::CompactInfinite { alpha, k } => {
                &Ordinal::term(alpha.clone(), k.clone()) + &Ordinal::one()
            }
            SpaceClass::LimitPure { alpha, k } => Ordinal::term(alpha.clone(), k.clone()),
            SpaceClass::LimitMixed { alpha, k, beta } => {
                &Ordinal::term(alpha.clone(), k.clone()) + &Ordinal::omega_pow(beta.clone())
            }
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            SpaceClass::Finite(_) => "Finite",
            SpaceClass::CompactInfinite { .. } => "CompactInfinite",
            SpaceClass::LimitPure { .. } => "LimitPure",
            SpaceClass::LimitMixed { .. } => "LimitMixed",
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!(self, SpaceClass::Finite(_) | SpaceClass::CompactInfinite { .. })
    }
}

impl fmt::Display for SpaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceClass::Finite(k) => write!(f, "Finite({k})"),
            SpaceClass::CompactInfinite { alpha, k } => write!(f, "CompactInfinite({alpha}, {k})"),
            SpaceClass::LimitPure { alpha, k } => write!(f, "LimitPure({alpha}, {k})"),
            SpaceClass::LimitMixed { alpha, k, beta } => {
                write!(f, "LimitMixed({alpha}, {k}, {beta})")
            }
        }
    }
}

pub fn classify(gamma: &Ordinal) -> SpaceClass {
    if let Some(n) = gamma.as_natural() {
        return SpaceClass::Finite(n);
    }
    let (alpha, k) = gamma.leading().expect("infinite ordinals are nonzero");
    let (alpha, k) = (alpha.clone(), k.clone());
    match gamma.kind() {
        Kind::Successor => SpaceClass::CompactInfinite { alpha, k },
        _ if gamma.terms().len() == 1 => SpaceClass::LimitPure { alpha, k },
        _ => SpaceClass::LimitMixed {
            alpha,
            k,
            beta: gamma.trailing_exponent().cloned().unwrap_or_default(),
        },
    }
}

pub fn canonical(gamma: &Ordinal) -> Ordinal {
    classify(gamma).representative()
}

pub fn homeomorphic(a: &Ordinal, b: &Ordinal) -> bool {
    classify(a) == classify(b)
}

/// One-point compactification: `gamma + 1` for limits, `gamma` otherwise.
pub fn compactify(gamma: &Ordinal) -> Ordinal {
    if gamma.is_limit() {
        gamma.succ()
    } else {
        gamma.clone()
    }
}

/// Cantor-Bendixson rank of the point `x` of the space `gamma`: zero for `0`,
/// otherwise the smallest exponent of `x`.
pub fn point_rank(x: &Ordinal, gamma: &Ordinal) -> Result<Ordinal> {
    if x >= gamma {
        return Err(Error::OutOfSpace {
            point: x.clone(),
            space: gamma.clone(),
        });
    }
    Ok(x.trailing_exponent().cloned().unwrap_or_default())
}

/// Order type of the `beta`-th derived subspace of `gamma`.
///
/// Points of rank at least `beta > 0` are the nonzero multiples `w^beta * m`
/// below `gamma`, so with `gamma = w^beta * q + r` the multiplier `m` ranges
/// over `[1, q]` when `r > 0` and over `[1, q)` when `r = 0`.
pub fn derived_order_type(gamma: &Ordinal, beta: &Ordinal) -> Ordinal {
    if beta.is_zero() {
        return gamma.clone();
    }
    let (q, r) = gamma.divide_by_power(beta);
    if q.is_zero() {
        return Ordinal::zero();
    }
    match (q.as_natural(), r.is_zero()) {
        (Some(n), false) => Ordinal::nat(n),
        (Some(n), true) => Ordinal::nat(n - 1u32),
        (None, false) => q.succ(),
        (None, true) => q,
    }
}

/// Cardinality of a similarity class. Every representable ordinal is
/// countable, so there are only two cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(BigUint),
    Aleph0,
}

impl Cardinality {
    pub fn finite(n: impl Into<BigUint>) -> Self {
        Cardinality::Finite(n.into())
    }

    pub fn is_singleton(&self) -> bool {
        matches!(self, Cardinality::Finite(n) if n.is_one())
    }
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "FINITE({n})"),
            Cardinality::Aleph0 => f.write_str("ALEPH0"),
        }
    }
}

/// Sizes of the rank levels of an ordinal space.
///
/// Every level below the leading exponent of `gamma` is countably infinite;
/// only the top level can be finite. The profile is stored in that shape so
/// spaces of infinite Cantor-Bendixson rank stay representable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassProfile {
    aleph0_levels: Ordinal,
    top: Option<(Ordinal, BigUint)>,
}

impl ClassProfile {
    /// Number of leading levels (ranks `0..n`) that are countably infinite.
    pub fn aleph0_levels(&self) -> &Ordinal {
        &self.aleph0_levels
    }

    /// The finite top level, if any, as `(rank, size)`.
    pub fn top(&self) -> Option<(&Ordinal, &BigUint)> {
        self.top.as_ref().map(|(r, n)| (r, n))
    }

    /// Cantor-Bendixson rank of the space: the number of nonempty levels.
    pub fn cb_rank(&self) -> Ordinal {
        if self.top.is_some() {
            self.aleph0_levels.succ()
        } else {
            self.aleph0_levels.clone()
        }
    }

    pub fn level(&self, rank: &Ordinal) -> Option<Cardinality> {
        if rank < &self.aleph0_levels {
            return Some(Cardinality::Aleph0);
        }
        match &self.top {
            Some((r, n)) if r == rank => Some(Cardinality::Finite(n.clone())),
            _ => None,
        }
    }

    /// All levels in rank order, or `None` if there are infinitely many.
    pub fn levels(&self) -> Option<Vec<(Ordinal, Cardinality)>> {
        let n = self.aleph0_levels.to_u64()?;
        let mut out: Vec<_> = (0..n)
            .map(|i| (Ordinal::nat(i), Cardinality::Aleph0))
            .collect();
        if let Some((r, k)) = &self.top {
            out.push((r.clone(), Cardinality::Finite(k.clone())));
        }
        Some(out)
    }
}

impl fmt::Display for ClassProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.levels() {
            Some(levels) => {
                f.write_str("[")?;
                for (i, (r, c)) in levels.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "({r}, {c})")?;
                }
                f.write_str("]")
            }
            None => {
                write!(f, "[(rank < {}, ALEPH0)", self.aleph0_levels)?;
                if let Some((r, k)) = &self.top {
                    write!(f, ", ({r}, FINITE({k}))")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub fn class_profile(gamma: &Ordinal) -> ClassProfile {
    let Some((lead, k)) = gamma.leading() else {
        return ClassProfile {
            aleph0_levels: Ordinal::zero(),
            top: None,
        };
    };
    if lead.is_zero() {
        return ClassProfile {
            aleph0_levels: Ordinal::zero(),
            top: Some((Ordinal::zero(), k.clone())),
        };
    }
    // top-level points are w^lead * m for successor m in [1, k] or [1, k)
    let top_count = if gamma.terms().len() > 1 {
        k.clone()
    } else {
        k - 1u32
    };
    ClassProfile {
        aleph0_levels: lead.clone(),
        top: (!top_count.is_zero()).then(|| (lead.clone(), top_count)),
    }
}
