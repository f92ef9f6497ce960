use std::sync::OnceLock;

use jacobi_core::cabling::{torus_knot_integral, TorusKnot};
use jacobi_core::diagram::{ChordDiagram, RoundDiagram};
use jacobi_core::element::{GradedElement, TensorElement};
use jacobi_core::rational::{q, qi};
use jacobi_core::vogel::round_wheel;
use jacobi_core::{Engine, EngineConfig, Error};
use proptest::prelude::*;

fn engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(EngineConfig::in_memory()))
}

fn tree3() -> RoundDiagram {
    RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap()
}

#[test]
fn unit_and_theta_squared() {
    let e = engine();
    let x = e.element_of_round(&round_wheel(4), true, 5).unwrap();
    assert_eq!(e.connect_sum(&e.unit(5, true).unwrap(), &x).unwrap(), x);
    let theta = e.theta(3).unwrap();
    let parallel = e.element_of_chord(&ChordDiagram::from_word("AABB").unwrap(), true, 3).unwrap();
    assert_eq!(e.connect_sum(&theta, &theta).unwrap(), parallel);
}

#[test]
fn coproduct_examples() {
    let e = engine();
    let one = e.unit(3, true).unwrap();
    assert_eq!(e.coproduct(&one).unwrap(), TensorElement::tensor(&one, &one));
    // a tripod next to an isolated chord: two components
    let d = tree3().connect_sum(&ChordDiagram::theta().to_round());
    let x = e.element_of_round(&d, true, 3).unwrap();
    let t = e.element_of_round(&tree3(), true, 3).unwrap();
    let theta = e.theta(3).unwrap();
    let want = TensorElement::tensor(&x, &one)
        .add(&TensorElement::tensor(&t, &theta))
        .add(&TensorElement::tensor(&theta, &t))
        .add(&TensorElement::tensor(&one, &x));
    assert_eq!(e.coproduct(&x).unwrap(), want);
    let w2 = e.element_of_round(&round_wheel(2), true, 4).unwrap();
    assert!(e.is_primitive(&w2).unwrap());
    assert!(!e.is_group_like(&w2).unwrap());
}

#[test]
fn group_like_and_primitive_predicates() {
    let e = engine();
    assert!(e.is_group_like(&e.unit(4, false).unwrap()).unwrap());
    let w2 = e.element_of_round(&round_wheel(2), false, 5).unwrap();
    assert!(e.is_primitive(&w2).unwrap());
    assert!(e.is_group_like(&e.exp_connect(&w2).unwrap()).unwrap());
    for n in 2..=5 {
        for (label, x) in e.pinned_basis_diagrams(n, false).unwrap() {
            let connected = !label.contains("w2w2");
            assert_eq!(e.is_primitive(&x).unwrap(), connected, "{label}");
        }
    }
}

#[test]
fn trefoil_log_in_low_degree() {
    let e = engine();
    let z = torus_knot_integral(e, TorusKnot::new(2, -3).unwrap(), 3).unwrap().z;
    let log = e.log_connect(&z).unwrap();
    let want = e
        .basis_element(2, "w2", false, 3)
        .unwrap()
        .scale(&q(-1, 2))
        .add(&e.basis_element(3, "tw2", false, 3).unwrap().scale(&q(-1, 2)))
        .unwrap();
    assert_eq!(log, want);
}

#[test]
fn series_arguments_are_checked() {
    let e = engine();
    let one = e.unit(3, true).unwrap();
    assert!(matches!(e.exp_connect(&one), Err(Error::DegreeZero { .. })));
    assert!(matches!(e.log_connect(&e.zero(3, true).unwrap()), Err(Error::DegreeZero { .. })));
    assert!(matches!(e.connect_sum(&one, &e.unit(3, false).unwrap()), Err(Error::FramingMismatch)));
    let mixed = e.connect_sum(&e.unit(2, true).unwrap(), &e.theta(4).unwrap()).unwrap();
    assert_eq!(mixed.max_degree(), 2);
}

fn element(framed: bool, coeffs: &[i64]) -> GradedElement {
    let e = engine();
    let mut x = e.zero(4, framed).unwrap();
    let mut it = coeffs.iter();
    for n in 0..=4 {
        for c in x.part_mut(n).iter_mut() {
            *c = qi(*it.next().unwrap());
        }
    }
    x
}

fn primitive(coeffs: &[i64]) -> GradedElement {
    let e = engine();
    let mut x = e.zero(4, false).unwrap();
    let gens = [(2, "w2"), (3, "tw2"), (4, "t2w2"), (4, "w4")];
    for (&(n, label), c) in gens.iter().zip(coeffs) {
        x = x.add(&e.basis_element(n, label, false, 4).unwrap().scale(&qi(*c))).unwrap();
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(3), ..ProptestConfig::default() })]

    #[test]
    fn bialgebra_law(framed in any::<bool>(), a in prop::collection::vec(-2i64..=2, 13), b in prop::collection::vec(-2i64..=2, 13)) {
        let e = engine();
        let (x, y) = (element(framed, &a), element(framed, &b));
        let lhs = e.coproduct(&e.connect_sum(&x, &y).unwrap()).unwrap();
        let rhs = e.tensor_connect_sum(framed, &e.coproduct(&x).unwrap(), &e.coproduct(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn connect_sum_commutes(framed in any::<bool>(), a in prop::collection::vec(-3i64..=3, 13), b in prop::collection::vec(-3i64..=3, 13)) {
        let e = engine();
        let (x, y) = (element(framed, &a), element(framed, &b));
        prop_assert_eq!(e.connect_sum(&x, &y).unwrap(), e.connect_sum(&y, &x).unwrap());
    }

    #[test]
    fn log_is_additive(a in prop::collection::vec(-3i64..=3, 4), b in prop::collection::vec(-3i64..=3, 4)) {
        let e = engine();
        let (x, y) = (primitive(&a), primitive(&b));
        let prod = e.connect_sum(&e.exp_connect(&x).unwrap(), &e.exp_connect(&y).unwrap()).unwrap();
        prop_assert_eq!(e.log_connect(&prod).unwrap(), x.add(&y).unwrap());
    }

    #[test]
    fn inverse_of_exp(a in prop::collection::vec(-3i64..=3, 4)) {
        let e = engine();
        let x = primitive(&a);
        let g = e.exp_connect(&x).unwrap();
        prop_assert_eq!(e.inverse_connect(&g).unwrap(), e.exp_connect(&x.scale(&qi(-1))).unwrap());
        prop_assert_eq!(e.log_connect(&g).unwrap(), x);
    }
}
