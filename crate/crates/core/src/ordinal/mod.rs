//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing list of terms `w^e * k`, where the
//! exponent `e` is itself an [`Ordinal`] and `k` is a positive natural number.
//! The empty list is zero. Because exponents nest finitely, every value is
//! below epsilon-zero.
//!
//! Only the arithmetic needed for ordinal spaces is provided: addition,
//! left multiplication by a power of omega and the matching left division.

mod parse;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

pub use parse::{parse, parse_with_depth, ParseError, ParseErrorKind, DEFAULT_MAX_DEPTH};

/// A single Cantor normal form term `w^exponent * coefficient`.
///
/// Field order matters: the derived ordering compares exponents first and
/// coefficients second, which is the ordinal order on single terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

/// An ordinal below epsilon-zero.
///
/// The derived `Ord` is the lexicographic order on term lists, which agrees
/// with the ordinal order because exponents strictly decrease.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ordinal {
    terms: Vec<Term>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Successor,
    Limit,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::nat(1u32)
    }

    /// `w`.
    pub fn omega() -> Self {
        Self::omega_pow(Ordinal::one())
    }

    pub fn nat<N: Into<BigUint>>(n: N) -> Self {
        Self::term(Ordinal::zero(), n)
    }

    /// `w^exponent`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Self::term(exponent, 1u32)
    }

    /// `w^exponent * coefficient`; zero when the coefficient is zero.
    pub fn term<N: Into<BigUint>>(exponent: Ordinal, coefficient: N) -> Self {
        let coefficient = coefficient.into();
        if coefficient.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from `(exponent, coefficient)` pairs, checking the
    /// normal-form invariants. Returns `None` if exponents do not strictly
    /// decrease or a coefficient is zero.
    pub fn from_terms<I, N>(terms: I) -> Option<Self>
    where
        I: IntoIterator<Item = (Ordinal, N)>,
        N: Into<BigUint>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (exponent, coefficient) in terms {
            let coefficient = coefficient.into();
            if coefficient.is_zero() {
                return None;
            }
            if let Some(last) = out.last() {
                if last.exponent <= exponent {
                    return None;
                }
            }
            out.push(Term {
                exponent,
                coefficient,
            });
        }
        Some(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_natural(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    /// The value as a `u64`, if finite and small enough.
    pub fn to_u64(&self) -> Option<u64> {
        self.as_natural().and_then(|n| n.to_u64())
    }

    pub fn kind(&self) -> Kind {
        match self.terms.last() {
            None => Kind::Zero,
            Some(t) if t.exponent.is_zero() => Kind::Successor,
            Some(_) => Kind::Limit,
        }
    }

    pub fn is_limit(&self) -> bool {
        self.kind() == Kind::Limit
    }

    /// Leading term as `(exponent, coefficient)`.
    pub fn leading(&self) -> Option<(&Ordinal, &BigUint)> {
        self.terms.first().map(|t| (&t.exponent, &t.coefficient))
    }

    /// Exponent of the last (smallest) term.
    pub fn trailing_exponent(&self) -> Option<&Ordinal> {
        self.terms.last().map(|t| &t.exponent)
    }

    pub fn succ(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// Nesting depth of exponents: 0 for zero, 1 for nonzero naturals.
    pub fn depth(&self) -> usize {
        self.terms
            .iter()
            .map(|t| 1 + t.exponent.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn compare(&self, other: &Ordinal) -> Ordering {
        self.cmp(other)
    }

    /// `w^beta * q`, distributing over the terms of `q`.
    pub fn mul_power(beta: &Ordinal, q: &Ordinal) -> Ordinal {
        Ordinal {
            terms: q
                .terms
                .iter()
                .map(|t| Term {
                    exponent: beta + &t.exponent,
                    coefficient: t.coefficient.clone(),
                })
                .collect(),
        }
    }

    /// Left division by `w^beta`: the unique `(q, r)` with
    /// `self = w^beta * q + r` and `r < w^beta`.
    pub fn divide_by_power(&self, beta: &Ordinal) -> (Ordinal, Ordinal) {
        let split = self
            .terms
            .iter()
            .position(|t| t.exponent < *beta)
            .unwrap_or(self.terms.len());
        let (high, low) = self.terms.split_at(split);
        let q = Ordinal {
            terms: high
                .iter()
                .map(|t| Term {
                    exponent: t
                        .exponent
                        .left_subtract(beta)
                        .expect("high exponents are at least beta"),
                    coefficient: t.coefficient.clone(),
                })
                .collect(),
        };
        let r = Ordinal {
            terms: low.to_vec(),
        };
        (q, r)
    }

    /// The unique `x` with `beta + x = self`, or `None` when `self < beta`.
    pub fn left_subtract(&self, beta: &Ordinal) -> Option<Ordinal> {
        for (i, b) in beta.terms.iter().enumerate() {
            let Some(a) = self.terms.get(i) else {
                return None;
            };
            match a.exponent.cmp(&b.exponent) {
                Ordering::Greater => {
                    return Some(Ordinal {
                        terms: self.terms[i..].to_vec(),
                    })
                }
                Ordering::Less => return None,
                Ordering::Equal => match a.coefficient.cmp(&b.coefficient) {
                    Ordering::Greater => {
                        let mut terms = Vec::with_capacity(self.terms.len() - i);
                        terms.push(Term {
                            exponent: a.exponent.clone(),
                            coefficient: &a.coefficient - &b.coefficient,
                        });
                        terms.extend_from_slice(&self.terms[i + 1..]);
                        return Some(Ordinal { terms });
                    }
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                },
            }
        }
        Some(Ordinal {
            terms: self.terms[beta.terms.len()..].to_vec(),
        })
    }
}

impl<'a> Add<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &'a Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        let mut rest = rhs.terms.iter();
        match terms.last_mut() {
            Some(last) if last.exponent == head.exponent => {
                last.coefficient += &head.coefficient;
                rest.next();
            }
            _ => {}
        }
        terms.extend(rest.cloned());
        Ordinal { terms }
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        &self + &rhs
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::nat(n)
    }
}

impl std::str::FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                match t.exponent.as_natural() {
                    Some(n) => write!(f, "^{n}")?,
                    None => write!(f, "^({})", t.exponent)?,
                }
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn compare_examples() {
        assert_eq!(o("w").compare(&o("w")), Ordering::Equal);
        assert_eq!(o("w*2 + 1").compare(&o("w^2")), Ordering::Less);
        assert_eq!(o("w^w").compare(&o("w^3*9")), Ordering::Greater);
    }

    #[test]
    fn add_examples() {
        assert_eq!(&o("w") + &o("w^2"), o("w^2"));
        assert_eq!(&o("w^2") + &o("w"), o("w^2 + w"));
        assert_eq!(&o("w^2*3 + w") + &o("w*5 + 1"), o("w^2*3 + w*6 + 1"));
        assert_eq!(&o("3") + &o("4"), o("7"));
        assert_eq!(&o("w + 5") + &Ordinal::zero(), o("w + 5"));
    }

    #[test]
    fn mul_power_examples() {
        assert_eq!(Ordinal::mul_power(&o("1"), &o("w*3 + 2")), o("w^2*3 + w*2"));
        assert_eq!(Ordinal::mul_power(&o("0"), &o("w^w + 7")), o("w^w + 7"));
        assert_eq!(Ordinal::mul_power(&o("2"), &o("3")), o("w^2*3"));
        assert_eq!(Ordinal::mul_power(&o("w"), &o("w + 1")), o("w^(w + 1) + w^w"));
    }

    #[test]
    fn divide_examples() {
        let g = o("w^2*3 + w*2 + 5");
        assert_eq!(g.divide_by_power(&o("1")), (o("w*3 + 2"), o("5")));
        assert_eq!(g.divide_by_power(&o("0")), (g.clone(), Ordinal::zero()));
        assert_eq!(o("5").divide_by_power(&o("1")), (Ordinal::zero(), o("5")));
        // exponent w + 1 split by w leaves exponent 1 in the quotient
        assert_eq!(
            o("w^(w + 1)*2 + w^w + w").divide_by_power(&o("w")),
            (o("w*2 + 1"), o("w"))
        );
    }

    #[test]
    fn left_subtract_cases() {
        assert_eq!(o("w*3").left_subtract(&o("w*2")), Some(o("w")));
        assert_eq!(o("w^2").left_subtract(&o("w + 4")), Some(o("w^2")));
        assert_eq!(o("w + 4").left_subtract(&o("w + 4")), Some(Ordinal::zero()));
        assert_eq!(o("w").left_subtract(&o("w + 1")), None);
        assert_eq!(o("5").left_subtract(&o("w")), None);
    }

    #[test]
    fn kinds() {
        assert_eq!(Ordinal::zero().kind(), Kind::Zero);
        assert_eq!(o("w^2*3 + 1").kind(), Kind::Successor);
        assert_eq!(o("w^w + w").kind(), Kind::Limit);
    }

    #[test]
    fn display_examples() {
        assert_eq!(Ordinal::zero().to_string(), "0");
        assert_eq!(o("w^2*3 + w*2 + 5").to_string(), "w^2*3 + w*2 + 5");
        assert_eq!(o("w^w").to_string(), "w^(w)");
        assert_eq!(o("w^(w^2)*3").to_string(), "w^(w^2)*3");
        assert_eq!(o("w^1*1 + w^0*4").to_string(), "w + 4");
    }

    #[test]
    fn from_terms_checks_invariants() {
        assert!(Ordinal::from_terms([(o("1"), 2u32), (o("1"), 1u32)]).is_none());
        assert!(Ordinal::from_terms([(o("1"), 0u32)]).is_none());
        assert_eq!(
            Ordinal::from_terms([(o("2"), 1u32), (o("0"), 3u32)]),
            Some(o("w^2 + 3"))
        );
    }
}
