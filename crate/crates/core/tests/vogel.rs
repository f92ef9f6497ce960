use jacobi_core::diagram::{ChordDiagram, Diagram, RoundDiagram};
use jacobi_core::rational::Span;
use jacobi_core::symmetric::connected_classes;
use jacobi_core::vogel::{insert_round, round_wheel, t_power_round, VogelDiagram};
use jacobi_core::{Engine, EngineConfig};

fn engine() -> Engine {
    Engine::new(EngineConfig::in_memory())
}

#[test]
fn triangle_at_either_vertex_of_w2() {
    let e = engine();
    let t = VogelDiagram::triangle();
    assert_eq!(t.degree(), 1);
    for framed in [false, true] {
        let a = e.insert(&t, &round_wheel(2), 0, framed, 3).unwrap();
        let b = e.insert(&t, &round_wheel(2), 1, framed, 3).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}

#[test]
fn insertion_does_not_depend_on_the_vertex() {
    let e = engine();
    let t = VogelDiagram::triangle();
    for n in 2..=4 {
        for s in connected_classes(n, n) {
            if s.diagram().vertices() == 0 {
                continue;
            }
            let d = s.attach(&(0..s.legs()).collect::<Vec<_>>());
            let first = e.insert(&t, &d, 0, true, n + 1).unwrap();
            for v in 1..d.diagram().vertices() {
                assert_eq!(e.insert(&t, &d, v, true, n + 1).unwrap(), first, "degree {n} vertex {v}");
            }
        }
    }
}

#[test]
fn insertion_adds_degrees() {
    let t = VogelDiagram::triangle();
    for k in [2, 3, 4] {
        let w = round_wheel(k);
        assert_eq!(insert_round(&t, &w, 0).unwrap().degree(), k + 1);
        assert_eq!(t_power_round(3, &w).degree(), k + 3);
    }
}

#[test]
fn pinned_degree_five_set_is_independent() {
    let e = engine();
    for framed in [false, true] {
        let basis = e.pinned_basis_diagrams(5, framed).unwrap();
        let mut span = Span::new();
        for (_, x) in &basis {
            assert!(span.insert(x.part(5)));
        }
        assert_eq!(span.rank(), e.basis(5, framed).unwrap().dim());
    }
}

#[test]
fn x3w2_is_primitive() {
    let e = engine();
    let x = e.basis_element(5, "x3w2", false, 5).unwrap();
    assert!(e.is_primitive(&x).unwrap());
}

#[test]
fn invalid_insertions() {
    let t = VogelDiagram::triangle();
    let chord = ChordDiagram::from_word("ABAB").unwrap().to_round();
    assert!(insert_round(&t, &chord, 0).is_err());
    assert!(insert_round(&t, &round_wheel(2), 2).is_err());
    // a single edge between two free legs
    assert!(VogelDiagram::new(Diagram::new(0, 2, 0, vec![1, 0]).unwrap()).is_err());
    let tree = RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
    let tripod = Diagram::new(0, 3, 1, tree.diagram().pairing().to_vec()).unwrap();
    // a lone vertex is the degree-zero Vogel diagram and inserts as the identity
    let id = VogelDiagram::new(tripod).unwrap();
    assert_eq!(id.degree(), 0);
    let e = engine();
    let w = round_wheel(3);
    assert_eq!(e.insert(&id, &w, 1, true, 3).unwrap(), e.element_of_round(&w, true, 3).unwrap());
}
