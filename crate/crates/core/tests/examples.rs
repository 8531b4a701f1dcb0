//! Worked examples across the public API.

use num_bigint::BigUint;
use scatterkit::classify::{class_profile, classify, point_rank, SpaceClass};
use scatterkit::finite::{normal_subgroups, verify_normal_subgroups, FiniteSpace, PermutationGroup, PointSet, SwapFailure, SwapOutcome};
use scatterkit::flows::{act, check_simply_transitive, lo_space, LinearOrder};
use scatterkit::graph::Graph;
use scatterkit::invariants::{descriptor_of, groups_isomorphic, invariants, umf_of_ordinal, umf_of_space, Answer};
use scatterkit::ordinal::Ordinal;
use scatterkit::{Error, Limits};

fn o(s: &str) -> Ordinal {
    s.parse().unwrap()
}

fn space(text: &str) -> FiniteSpace {
    FiniteSpace::parse(text).unwrap()
}

const VEE: &str = "a: a\nb: b\nc: a b c";
const FANS: &str = "a1: a1\na2: a2\nc1: c1 a1 a2\nb1: b1\nb2: b2\nb3: b3\nc2: c2 b1 b2 b3";

#[test]
fn ordinal_parsing_and_printing() {
    assert_eq!(o("w + w^2"), o("w^2"));
    assert_eq!(o("w^(w^2)*3 + w*2 + 5").to_string(), "w^(w^2)*3 + w*2 + 5");
    assert_eq!(o("w^w").to_string(), "w^(w)");
    assert_eq!(o("w^2*3 + w*2 + 5").to_string(), "w^2*3 + w*2 + 5");
    assert_eq!(o("0").to_string(), "0");
    assert!(o("w*2 + 1") < o("w^2"));
    assert!(o("w^w") > o("w^3*9"));
    let err = "w^ + 1".parse::<Ordinal>().unwrap_err();
    assert!(err.to_string().contains('3'), "{err}");
}

#[test]
fn division_examples() {
    assert_eq!(o("w^2*3 + w*2 + 5").divide_by_power(&o("1")), (o("w*3 + 2"), o("5")));
    assert_eq!(o("5").divide_by_power(&o("1")), (o("0"), o("5")));
    assert_eq!(Ordinal::mul_power(&o("1"), &o("w*3 + 2")), o("w^2*3 + w*2"));
    assert_eq!(Ordinal::mul_power(&o("2"), &o("3")), o("w^2*3"));
}

#[test]
fn ranks_and_profiles() {
    assert_eq!(point_rank(&o("0"), &o("w")).unwrap(), o("0"));
    assert_eq!(point_rank(&o("w^2*3"), &o("w^2*3 + 1")).unwrap(), o("2"));
    assert_eq!(point_rank(&o("w^w"), &o("w^w + 1")).unwrap(), o("w"));
    assert!(matches!(point_rank(&o("w"), &o("w")), Err(Error::OutOfSpace { .. })));
    assert_eq!(class_profile(&o("3")).to_string(), "[(0, FINITE(3))]");
    assert_eq!(class_profile(&o("w^2*3 + 1")).to_string(), "[(0, ALEPH0), (1, ALEPH0), (2, FINITE(3))]");
    assert_eq!(class_profile(&o("w + 1")).to_string(), "[(0, ALEPH0), (1, FINITE(1))]");
    assert_eq!(classify(&o("w^2*2 + w + 1")), SpaceClass::CompactInfinite { alpha: o("2"), k: BigUint::from(2u32) });
}

#[test]
fn separation_and_cb_data() {
    let vee = space(VEE);
    let sep = vee.separation_report();
    assert!(sep.t0 && !sep.t1 && sep.scattered);
    let indiscrete = space("a: a b\nb: a b");
    let sep = indiscrete.separation_report();
    assert!(!sep.t0 && !sep.scattered);
    assert!(FiniteSpace::discrete(4).separation_report().t1);

    let cb = vee.cb_data();
    assert_eq!(cb.levels, vec![PointSet::from_bits(0b111), PointSet::from_bits(0b100), PointSet::empty()]);
    assert_eq!(cb.ranks, vec![Some(0), Some(0), Some(1)]);
    assert_eq!(cb.cb_rank, 2);
    let chain = space("a: a\nb: a b\nc: a b c").cb_data();
    assert_eq!(chain.ranks, vec![Some(0), Some(1), Some(2)]);
}

#[test]
fn validation_errors() {
    assert!(matches!(FiniteSpace::parse("a: a b\nb: b c\nc: c"), Err(Error::Transitivity { .. })));
    assert!(matches!(FiniteSpace::parse("a: b\nb: b"), Err(Error::Reflexivity(_))));
    assert!(matches!(FiniteSpace::parse("a: a\na: a"), Err(Error::DuplicatePoint(_))));
    assert!(matches!(FiniteSpace::parse("a: a z"), Err(Error::UnknownPoint(_))));
    assert!(FiniteSpace::parse("").unwrap().is_empty());
}

#[test]
fn groups_and_fixators() {
    let limits = Limits::default();
    let vee = space(VEE);
    let g = vee.homeo_group(&limits).unwrap();
    assert_eq!(g.order(), 2);
    assert_eq!(g.fixator(PointSet::empty()), g);
    assert!(g.fixator(vee.points()).is_trivial());
    assert!(g.fixator_of_names(&["a"]).unwrap().is_trivial());
    assert_eq!(FiniteSpace::discrete(4).homeo_group(&limits).unwrap().order(), 24);
    assert_eq!(space(FANS).homeo_group(&limits).unwrap().order(), 12);
    let too_big = FiniteSpace::discrete(13);
    assert!(matches!(too_big.homeo_group(&limits), Err(Error::SizeBound { .. })));
}

#[test]
fn full_transitivity_examples() {
    let limits = Limits::default();
    let r = space(VEE).is_fully_transitive(&limits).unwrap();
    assert!(r.fully_transitive);
    assert_eq!(r.homeo_order, 2);
    let p3 = Graph::parse("1 2\n2 3").unwrap().encode();
    let r = p3.is_fully_transitive(&limits).unwrap();
    assert!(!r.fully_transitive && !r.direct && !r.order_test);
    assert!(FiniteSpace::discrete(1).is_fully_transitive(&limits).unwrap().fully_transitive);
    assert!(FiniteSpace::discrete(0).is_fully_transitive(&limits).unwrap().fully_transitive);
}

#[test]
fn swap_examples() {
    let d = FiniteSpace::discrete(4);
    match d.swap_homeo_by_name("p1", "p3", &["p2"]).unwrap() {
        SwapOutcome::Swap(g) => assert_eq!(g.cycle_string(d.names()), "(p1 p3)"),
        other => panic!("{other:?}"),
    }
    // {a} is open but not closed, so a and b share their only clopen neighbourhood
    let vee = space(VEE);
    assert_eq!(
        vee.swap_homeo_by_name("a", "b", &["c"]).unwrap(),
        SwapOutcome::Failed(SwapFailure::SameComponent)
    );
    let edge = Graph::parse("u v").unwrap().encode();
    assert!(matches!(
        edge.swap_homeo_by_name::<&str>("u", "v", &[]).unwrap(),
        SwapOutcome::Failed(_)
    ));
    let two = space("a: a\nb: a b\nx: x\ny: x y");
    assert!(matches!(two.swap_homeo_by_name::<&str>("b", "y", &[]).unwrap(), SwapOutcome::Swap(_)));
    assert!(matches!(
        two.swap_homeo_by_name("b", "y", &["a"]).unwrap(),
        SwapOutcome::Failed(SwapFailure::NeighbourhoodMeetsFixedSet { .. })
    ));
}

#[test]
fn normal_subgroup_examples() {
    let limits = Limits::default();
    let sym3 = FiniteSpace::discrete(3);
    let orders: Vec<usize> = normal_subgroups(&sym3.homeo_group(&limits).unwrap(), &limits)
        .unwrap()
        .iter()
        .map(PermutationGroup::order)
        .collect();
    assert_eq!(orders, vec![1, 3, 6]);
    assert!(verify_normal_subgroups(&sym3, &limits).unwrap().exact_match());

    let two_pairs = space("a1: a1\na2: a2\nc1: c1 a1 a2\nc2: c2 a1 a2");
    let rep = verify_normal_subgroups(&two_pairs, &limits).unwrap();
    assert_eq!((rep.normal.len(), rep.candidates.len(), rep.off_list.len()), (5, 4, 1));

    let trivial = PermutationGroup::trivial(vec!["a".into()]);
    assert_eq!(normal_subgroups(&trivial, &limits).unwrap().len(), 1);
}

#[test]
fn graph_examples() {
    let edge = Graph::parse("u v").unwrap();
    let s = edge.encode();
    assert_eq!(s.len(), 3);
    assert_eq!(s.set_names(s.min_open(s.index_of("u--v").unwrap())), vec!["u", "v", "u--v"]);
    let p3 = Graph::parse("1 2\n2 3").unwrap().encode();
    assert_eq!(p3.len(), 5);
    assert_eq!(p3.cb_data().ranks.iter().filter(|r| **r == Some(1)).count(), 2);
    let k3 = Graph::parse("1 2\n2 3\n1 3").unwrap().encode();
    assert_eq!(k3.cb_data().levels[1].len(), 3);
    assert!(matches!(Graph::parse("vertex a\nvertex b"), Err(Error::InvalidGraph(_))));
    assert!(matches!(Graph::parse("a a"), Err(Error::InvalidGraph(_))));
}

#[test]
fn oracle_examples() {
    let iso = |a: &str, b: &str| groups_isomorphic(&descriptor_of(&o(a)), &descriptor_of(&o(b)));
    let d = iso("w^2*2 + 1", "w^2*3 + 1");
    assert_eq!(d.answer, Answer::No);
    assert_eq!(d.citation, Some("Theorem 29"));
    assert_eq!(iso("w^w", "w^w + 1").answer, Answer::Yes);
    assert_eq!(iso("w^2*2 + 1", "w^2*3").citation, Some("Question 32"));
    assert_eq!(iso("w^3 + w", "w^3 + w^2").citation, Some("Question 33"));
    let inv = invariants(&descriptor_of(&o("w^w*3 + 1")));
    assert_eq!((inv.max_finite_quotient, inv.epsilon), (BigUint::from(6u32), o("w")));
}

#[test]
fn flow_examples() {
    let limits = Limits::default();
    assert_eq!(lo_space(3, &limits).unwrap().len(), 6);
    let base = LinearOrder::natural(3);
    let swap = scatterkit::finite::Perm::from_images(vec![1, 0, 2]).unwrap();
    assert_eq!(act(&swap, &base).unwrap().to_string(), "2<1<3");
    assert!(check_simply_transitive(5, &limits).unwrap());
    assert_eq!(umf_of_ordinal(&o("w^2*3 + 1")).shape(), "LO(ALEPH0) x LO(ALEPH0) x LO(3)");
    assert_eq!(umf_of_space(&space(VEE), &limits).unwrap().shape(), "LO(2) x LO(1)");
}
