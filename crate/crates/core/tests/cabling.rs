use std::sync::OnceLock;

use jacobi_core::cabling::{le_cable, torus_knot_integral, TorusKnot};
use jacobi_core::rational::{qi, Q};
use jacobi_core::{Engine, EngineConfig};
use num_bigint::BigInt;

fn engine() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::new(EngineConfig::in_memory()))
}

fn z(m: i64, p: i64, n: usize) -> jacobi_core::cabling::TorusKnotIntegral {
    torus_knot_integral(engine(), TorusKnot::new(m, p).unwrap(), n).unwrap()
}

#[test]
fn unknots_are_trivial() {
    let e = engine();
    for m in 2..=5 {
        for p in [-1, 1] {
            let k = z(m, p, 4);
            assert!(k.knot.is_unknot());
            assert_eq!(k.z, e.unit(4, false).unwrap(), "({m}, {p})");
            assert!(k.log.is_zero());
        }
    }
}

#[test]
fn trefoil_w2_coefficient() {
    let e = engine();
    let i = e.basis(2, false).unwrap().label_index("w2").unwrap();
    assert_eq!(z(2, -3, 2).log.part(2)[i], Q::new((-1).into(), 2.into()));
    assert_eq!(z(2, 3, 2).log.part(2)[i], Q::new((-1).into(), 2.into()));
}

#[test]
fn degree_two_log_matches_the_conway_coefficient() {
    // the w2 coefficient is -a2/2 with a2 = (m^2 - 1)(p^2 - 1)/24
    let e = engine();
    let i = e.basis(2, false).unwrap().label_index("w2").unwrap();
    for m in 2..=5i64 {
        for p in -6..=6i64 {
            let Ok(k) = TorusKnot::new(m, p) else { continue };
            let want = Q::new(BigInt::from(-(m * m - 1) * (p * p - 1)), BigInt::from(48));
            assert_eq!(torus_knot_integral(e, k, 2).unwrap().log.part(2)[i], want, "({m}, {p})");
        }
    }
}

#[test]
fn mirror_and_swap() {
    let a = z(2, 3, 5);
    let b = z(2, -3, 5);
    for n in 0..=5 {
        let sign = if n % 2 == 0 { qi(1) } else { qi(-1) };
        let flipped: Vec<Q> = b.z.part(n).iter().map(|x| x * &sign).collect();
        assert_eq!(a.z.part(n), &flipped[..], "degree {n}");
    }
    assert_eq!(z(3, 2, 5).z, a.z);
    assert_eq!(z(-2, -3, 5).z, a.z);
}

#[test]
fn framing_projection() {
    let e = engine();
    assert!(e.project_unframed(&e.theta(3).unwrap()).unwrap().is_zero());
    assert_eq!(e.project_unframed(&e.unit(3, true).unwrap()).unwrap(), e.unit(3, false).unwrap());
    let k = z(2, 5, 4);
    assert_eq!(e.project_unframed(&k.framed).unwrap(), k.z);
    assert_eq!(le_cable(e, 2, 5, &e.unit(4, true).unwrap()).unwrap(), k.framed);
}

#[test]
fn invalid_parameters() {
    let e = engine();
    assert!(TorusKnot::new(2, 4).is_err());
    assert!(TorusKnot::new(0, 3).is_err());
    assert!(TorusKnot::new(3, 0).is_err());
    let one = e.unit(2, true).unwrap();
    assert!(le_cable(e, 1, 3, &one).is_err());
    assert!(le_cable(e, 4, 6, &one).is_err());
    assert!(le_cable(e, 2, 3, &e.unit(2, false).unwrap()).is_err());
}
