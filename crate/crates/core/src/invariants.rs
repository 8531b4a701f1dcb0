//! Homeomorphism groups of ordinal spaces as symbolic descriptors.
//!
//! `G(a, k)` is the group of `[0, w^a*k]`, `H(a, k)` that of `w^a*k`,
//! `I(a, k, b)` that of `w^a*k + w^b`, and `Sym(k)` that of a `k`-point
//! discrete space. Isomorphism between them is only partly decided; the
//! oracle answers `Unknown` wherever the question is open.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::classify::{class_profile, classify, Cardinality, SpaceClass};
use crate::finite::FiniteSpace;
use crate::ordinal::Ordinal;
use crate::{Error, Limits, Result};

pub const THEOREM_29: &str = "Theorem 29";
pub const QUESTION_31: &str = "Question 31";
pub const QUESTION_32: &str = "Question 32";
pub const QUESTION_33: &str = "Question 33";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupDescriptor {
    G { alpha: Ordinal, k: BigUint },
    H { alpha: Ordinal, k: BigUint },
    I { alpha: Ordinal, k: BigUint, beta: Ordinal },
    SymFinite(BigUint),
}

impl GroupDescriptor {
    pub fn is_finite(&self) -> bool {
        matches!(self, GroupDescriptor::SymFinite(_))
    }

    /// The ordinal space whose homeomorphism group this is.
    pub fn space(&self) -> Ordinal {
        match self {
            GroupDescriptor::G { alpha, k } => {
                SpaceClass::CompactInfinite { alpha: alpha.clone(), k: k.clone() }.representative()
            }
            GroupDescriptor::H { alpha, k } => {
                SpaceClass::LimitPure { alpha: alpha.clone(), k: k.clone() }.representative()
            }
            GroupDescriptor::I { alpha, k, beta } => SpaceClass::LimitMixed {
                alpha: alpha.clone(),
                k: k.clone(),
                beta: beta.clone(),
            }
            .representative(),
            GroupDescriptor::SymFinite(k) => Ordinal::nat(k.clone()),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDescriptor::G { alpha, k } => write!(f, "G({alpha}, {k})"),
            GroupDescriptor::H { alpha, k } => write!(f, "H({alpha}, {k})"),
            GroupDescriptor::I { alpha, k, beta } => write!(f, "I({alpha}, {k}, {beta})"),
            GroupDescriptor::SymFinite(k) => write!(f, "Sym({k})"),
        }
    }
}

pub fn descriptor_of(gamma: &Ordinal) -> GroupDescriptor {
    match classify(gamma) {
        SpaceClass::Finite(k) => GroupDescriptor::SymFinite(k),
        SpaceClass::CompactInfinite { alpha, k } => GroupDescriptor::G { alpha, k },
        SpaceClass::LimitPure { alpha, k } => GroupDescriptor::H { alpha, k },
        SpaceClass::LimitMixed { alpha, k, beta } => GroupDescriptor::I { alpha, k, beta },
    }
}

/// Largest finite discrete quotient and the length `epsilon` of the chains
/// of infinite-index closed normal subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub max_finite_quotient: BigUint,
    pub epsilon: Ordinal,
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.max_finite_quotient, self.epsilon)
    }
}

fn factorial(n: &BigUint) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = BigUint::one();
    while &i <= n {
        acc *= &i;
        i += 1u32;
    }
    acc
}

/// For `Sym(k)` the whole group is its own largest finite quotient, so the
/// quotient entry is `k!` and `epsilon` is `0`.
pub fn invariants(d: &GroupDescriptor) -> Invariants {
    let (q, epsilon) = match d {
        GroupDescriptor::G { alpha, k } | GroupDescriptor::I { alpha, k, .. } => {
            (factorial(k), alpha.clone())
        }
        GroupDescriptor::H { alpha, k } => (factorial(&(k - 1u32)), alpha.clone()),
        GroupDescriptor::SymFinite(k) => (factorial(k), Ordinal::zero()),
    };
    Invariants {
        max_finite_quotient: q,
        epsilon,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "Yes",
            Answer::No => "No",
            Answer::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: Answer,
    /// Theorem or question the answer rests on, if any.
    pub citation: Option<&'static str>,
    pub justification: String,
}

impl Decision {
    fn new(answer: Answer, citation: Option<&'static str>, mut justification: String) -> Self {
        if let Some(c) = citation.filter(|c| !justification.contains(c)) {
            justification = format!("{justification} ({c})");
        }
        Decision {
            answer,
            citation,
            justification,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.answer, self.justification)
    }
}

/// Isomorphism of topological groups, as far as it is known.
pub fn groups_isomorphic(d1: &GroupDescriptor, d2: &GroupDescriptor) -> Decision {
    use GroupDescriptor::*;

    if d1 == d2 {
        return Decision::new(Answer::Yes, None, "identical descriptors".into());
    }
    if let Some(d) = known_isomorphism(d1, d2).or_else(|| known_isomorphism(d2, d1)) {
        return d;
    }
    if d1.is_finite() != d2.is_finite() {
        let (fin, inf) = if d1.is_finite() { (d1, d2) } else { (d2, d1) };
        return Decision::new(
            Answer::No,
            None,
            format!("{fin} is finite while {inf} is an infinite group"),
        );
    }
    if let (SymFinite(a), SymFinite(b)) = (d1, d2) {
        let (oa, ob) = (factorial(a), factorial(b));
        return if oa == ob {
            Decision::new(Answer::Yes, None, format!("both groups are trivial (order {oa})"))
        } else {
            Decision::new(Answer::No, None, format!("group orders differ: {oa} vs {ob}"))
        };
    }

    let (i1, i2) = (invariants(d1), invariants(d2));
    if i1 != i2 {
        let witness = if i1.max_finite_quotient != i2.max_finite_quotient {
            format!(
                "largest finite discrete quotients differ: {} vs {}",
                i1.max_finite_quotient, i2.max_finite_quotient
            )
        } else {
            format!("epsilon invariants differ: {} vs {}", i1.epsilon, i2.epsilon)
        };
        return Decision::new(Answer::No, Some(THEOREM_29), witness);
    }

    match open_question(d1, d2).or_else(|| open_question(d2, d1)) {
        Some((q, text)) => Decision::new(Answer::Unknown, Some(q), text),
        None => Decision::new(
            Answer::Unknown,
            None,
            format!("equal invariants {i1}; not decided by the known results"),
        ),
    }
}

fn known_isomorphism(a: &GroupDescriptor, b: &GroupDescriptor) -> Option<Decision> {
    match (a, b) {
        (GroupDescriptor::H { alpha, k }, GroupDescriptor::G { alpha: a2, k: k2 })
            if alpha == a2 && k.is_one() && k2.is_one() =>
        {
            Some(Decision::new(
                Answer::Yes,
                Some(THEOREM_29),
                format!(
                    "H({alpha}, 1) is the fixator of the top point of G({alpha}, 1), which is the whole group"
                ),
            ))
        }
        _ => None,
    }
}

fn open_question(a: &GroupDescriptor, b: &GroupDescriptor) -> Option<(&'static str, String)> {
    use GroupDescriptor::*;
    match (a, b) {
        (H { alpha, k }, H { alpha: a2, k: k2 })
            if alpha == a2 && k.is_one() && *k2 == BigUint::from(2u32) =>
        {
            Some((QUESTION_31, format!("isomorphism between H({alpha}, 1) and H({alpha}, 2) is open")))
        }
        (G { alpha, k }, H { alpha: a2, k: k2 }) if alpha == a2 && *k2 == k + 1u32 => Some((
            QUESTION_32,
            format!("isomorphism between G({alpha}, {k}) and H({alpha}, {k2}) is open"),
        )),
        (I { alpha, k, beta }, I { alpha: a2, k: k2, beta: b2 })
            if alpha == a2 && k == k2 && beta != b2 =>
        {
            Some((
                QUESTION_33,
                format!("the parameter beta of I({alpha}, {k}, -) is not known to be an invariant ({beta} vs {b2})"),
            ))
        }
        (I { alpha, k, .. }, G { alpha: a2, k: k2 }) if alpha == a2 && k == k2 => Some((
            QUESTION_33,
            format!("isomorphism between {a} and G({alpha}, {k}) is open"),
        )),
        (I { alpha, k, .. }, H { alpha: a2, k: k2 }) if alpha == a2 && *k2 == k + 1u32 => Some((
            QUESTION_33,
            format!("isomorphism between {a} and H({alpha}, {k2}) is open"),
        )),
        _ => None,
    }
}

/// One `LO(X_i)` factor of a universal minimal flow, repeated
/// `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmfFactor {
    pub label: String,
    pub cardinality: Cardinality,
    pub multiplicity: Ordinal,
}

/// Symbolic description of the universal minimal flow `∏ LO(X_i)` of a
/// homeomorphism group, with the dynamical facts that come with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmfDescriptor {
    pub factors: Vec<UmfFactor>,
    pub metrisable: bool,
    pub amenable: bool,
    pub roelcke_precompact: bool,
    /// `(fact, citation)` pairs.
    pub citations: Vec<(&'static str, &'static str)>,
}

impl UmfDescriptor {
    fn from_factors(factors: Vec<UmfFactor>, compact_group: bool) -> Self {
        // every class is countable, and so is the set of classes
        let metrisable = true;
        let basis = if compact_group { "Theorem 14" } else { "Corollary 23" };
        let mut citations = vec![
            ("amenable", basis),
            ("Roelcke-precompact", basis),
            ("universal minimal flow", if compact_group { "Theorem 15" } else { "Corollary 23" }),
            ("metrisable", "Remark 16"),
        ];
        if compact_group {
            // a finite group is compact and is its own universal minimal flow
            citations.push(("universal minimal flow", "Proposition 7"));
        }
        UmfDescriptor {
            factors,
            metrisable,
            amenable: true,
            roelcke_precompact: true,
            citations,
        }
    }

    /// Citations backing `fact`, joined by commas.
    pub fn citation(&self, fact: &str) -> String {
        self.citations
            .iter()
            .filter(|(f, _)| *f == fact)
            .map(|(_, c)| *c)
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Number of `LO` factors, counted with multiplicity.
    pub fn factor_count(&self) -> Ordinal {
        self.factors
            .iter()
            .fold(Ordinal::zero(), |acc, f| &acc + &f.multiplicity)
    }

    /// Rendering such as `LO(ALEPH0) x LO(ALEPH0) x LO(3)`.
    pub fn shape(&self) -> String {
        if self.factors.is_empty() {
            return "point".to_string();
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .flat_map(|f| {
                let token = match &f.cardinality {
                    Cardinality::Finite(n) => n.to_string(),
                    Cardinality::Aleph0 => "ALEPH0".to_string(),
                };
                match f.multiplicity.to_u64() {
                    Some(m) if m <= 8 => vec![format!("LO({token})"); m as usize],
                    _ => vec![format!("LO({token})^({})", f.multiplicity)],
                }
            })
            .collect();
        parts.join(" x ")
    }
}

/// Flow of `Homeo(gamma)`: one factor per rank level.
pub fn umf_of_ordinal(gamma: &Ordinal) -> UmfDescriptor {
    let profile = class_profile(gamma);
    let mut factors = Vec::new();
    match profile.levels() {
        Some(levels) => {
            for (rank, card) in levels {
                factors.push(UmfFactor {
                    label: format!("rank {rank}"),
                    cardinality: card,
                    multiplicity: Ordinal::one(),
                });
            }
        }
        None => {
            let n = profile.aleph0_levels().clone();
            factors.push(UmfFactor {
                label: format!("rank < {n}"),
                cardinality: Cardinality::Aleph0,
                multiplicity: n,
            });
            if let Some((rank, k)) = profile.top() {
                factors.push(UmfFactor {
                    label: format!("rank {rank}"),
                    cardinality: Cardinality::Finite(k.clone()),
                    multiplicity: Ordinal::one(),
                });
            }
        }
    }
    UmfDescriptor::from_factors(factors, gamma.is_finite())
}

/// Flow of `Homeo(space)`: one factor per similarity class. The space must
/// be fully transitive.
pub fn umf_of_space(space: &FiniteSpace, limits: &Limits) -> Result<UmfDescriptor> {
    let report = space.is_fully_transitive(limits)?;
    if !report.fully_transitive {
        return Err(Error::Precondition(
            "the homeomorphism group is not fully transitive".into(),
        ));
    }
    let partition = space.similarity_partition();
    let factors = partition
        .blocks
        .iter()
        .map(|&b| UmfFactor {
            label: format!("{{{}}}", space.set_names(b).join(",")),
            cardinality: Cardinality::finite(b.len() as u64),
            multiplicity: Ordinal::one(),
        })
        .collect();
    Ok(UmfDescriptor::from_factors(factors, true))
}

/// Input to [`umf_descriptor`].
pub enum UmfInput<'a> {
    Ordinal(&'a Ordinal),
    Space(&'a FiniteSpace),
}

pub fn umf_descriptor(input: UmfInput<'_>, limits: &Limits) -> Result<UmfDescriptor> {
    match input {
        UmfInput::Ordinal(gamma) => Ok(umf_of_ordinal(gamma)),
        UmfInput::Space(space) => umf_of_space(space, limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::canonical;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn n(k: u32) -> BigUint {
        BigUint::from(k)
    }

    fn g(a: &str, k: u32) -> GroupDescriptor {
        GroupDescriptor::G { alpha: o(a), k: n(k) }
    }

    fn h(a: &str, k: u32) -> GroupDescriptor {
        GroupDescriptor::H { alpha: o(a), k: n(k) }
    }

    fn i(a: &str, k: u32, b: &str) -> GroupDescriptor {
        GroupDescriptor::I { alpha: o(a), k: n(k), beta: o(b) }
    }

    #[test]
    fn descriptor_examples() {
        assert_eq!(descriptor_of(&o("w^2*3 + 1")), g("2", 3));
        assert_eq!(descriptor_of(&o("w*2")), h("1", 2));
        assert_eq!(descriptor_of(&o("w^3 + w")), i("3", 1, "1"));
        assert_eq!(descriptor_of(&o("4")), GroupDescriptor::SymFinite(n(4)));
        let gamma = o("w + w^2*2 + w^2 + 7");
        assert_eq!(descriptor_of(&canonical(&gamma)), descriptor_of(&gamma));
        assert_eq!(descriptor_of(&g("w", 2).space()), g("w", 2));
    }

    #[test]
    fn invariant_examples() {
        let inv = |d| {
            let v = invariants(&d);
            (v.max_finite_quotient, v.epsilon)
        };
        assert_eq!(inv(g("w", 3)), (n(6), o("w")));
        assert_eq!(inv(h("2", 1)), (n(1), o("2")));
        assert_eq!(inv(i("3", 2, "1")), (n(2), o("3")));
        assert_eq!(inv(GroupDescriptor::SymFinite(n(4))), (n(24), o("0")));
    }

    #[test]
    fn oracle_examples() {
        let d = groups_isomorphic(&g("w", 2), &g("w", 3));
        assert_eq!((d.answer, d.citation), (Answer::No, Some(THEOREM_29)));
        assert_eq!(groups_isomorphic(&h("w", 1), &g("w", 1)).answer, Answer::Yes);
        assert_eq!(groups_isomorphic(&g("w", 1), &h("w", 1)).answer, Answer::Yes);
        let d = groups_isomorphic(&g("2", 2), &h("2", 3));
        assert_eq!((d.answer, d.citation), (Answer::Unknown, Some(QUESTION_32)));
        let d = groups_isomorphic(&i("3", 1, "1"), &i("3", 1, "2"));
        assert_eq!((d.answer, d.citation), (Answer::Unknown, Some(QUESTION_33)));
        let d = groups_isomorphic(&h("2", 2), &h("2", 1));
        assert_eq!((d.answer, d.citation), (Answer::Unknown, Some(QUESTION_31)));
        assert_eq!(groups_isomorphic(&h("2", 2), &h("2", 3)).answer, Answer::No);
        assert_eq!(
            groups_isomorphic(&GroupDescriptor::SymFinite(n(3)), &g("1", 1)).answer,
            Answer::No
        );
    }

    #[test]
    fn unknown_without_question() {
        let d = groups_isomorphic(&i("2", 1, "1"), &h("2", 1));
        assert_eq!((d.answer, d.citation), (Answer::Unknown, None));
    }

    #[test]
    fn umf_examples() {
        let u = umf_of_ordinal(&o("w^2*3 + 1"));
        assert_eq!(u.shape(), "LO(ALEPH0) x LO(ALEPH0) x LO(3)");
        assert!(u.metrisable && u.amenable && u.roelcke_precompact);
        assert_eq!(umf_of_ordinal(&o("w + 1")).shape(), "LO(ALEPH0) x LO(1)");
        assert_eq!(umf_of_ordinal(&o("w^w + 1")).factor_count(), o("w + 1"));
        let limits = Limits::default();
        let u = umf_of_space(&FiniteSpace::discrete(4), &limits).unwrap();
        assert_eq!(u.shape(), "LO(4)");
        let bad = FiniteSpace::parse("a: a\nb: a b\nc: c").unwrap();
        assert!(matches!(umf_of_space(&bad, &limits), Err(Error::Precondition(_))));
    }
}
