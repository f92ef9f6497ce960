//! Wheels, the triangle `t`, and insertion of Vogel diagrams at internal
//! vertices.

use crate::diagram::{Diagram, HalfEdge, RoundDiagram, SymmetrizedDiagram};
use crate::error::{Error, Result};

/// A unitrivalent graph with three legs labelled 1, 2, 3 (free legs 0, 1, 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VogelDiagram(Diagram);

impl VogelDiagram {
    pub fn new(d: Diagram) -> Result<Self> {
        if d.loop_legs() != 0 || d.free_legs() != 3 {
            return Err(Error::Structure("a Vogel diagram has exactly three free legs".into()));
        }
        if (0..3).any(|k| d.partner(k) < 3) {
            return Err(Error::Structure("Vogel legs must end at internal vertices".into()));
        }
        if d.vertices() % 2 == 0 {
            return Err(Error::Structure("a Vogel diagram has an odd number of vertices".into()));
        }
        Ok(VogelDiagram(d))
    }

    /// The triangle: three vertices pairwise joined, leg `k` on vertex `k`.
    pub fn triangle() -> Self {
        VogelDiagram(wheel_graph(3))
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn degree(&self) -> usize {
        (self.0.vertices() - 1) / 2
    }
}

/// Cycle of `k` vertices each carrying one free leg. Vertex `i` lists its
/// slots as (spoke, next, previous); the rim joins `next` of `i` to
/// `previous` of `i + 1`.
pub(crate) fn wheel_graph(k: usize) -> Diagram {
    assert!(k >= 2, "wheels need at least two spokes");
    let slot = |v: usize, s: usize| k + 3 * v + s;
    let mut pair = vec![0u16; 4 * k];
    for i in 0..k {
        pair[i] = slot(i, 0) as u16;
        pair[slot(i, 0)] = i as u16;
        let j = (i + 1) % k;
        pair[slot(i, 1)] = slot(j, 2) as u16;
        pair[slot(j, 2)] = slot(i, 1) as u16;
    }
    Diagram::from_parts_unchecked(0, k, k, pair)
}

/// The symmetrized wheel with `k` legs.
pub fn wheel(k: usize) -> SymmetrizedDiagram {
    SymmetrizedDiagram::from_diagram(wheel_graph(k)).expect("wheels are valid")
}

/// The wheel with its spokes attached to the Wilson loop in rim order.
pub fn round_wheel(k: usize) -> RoundDiagram {
    wheel(k).attach(&(0..k).collect::<Vec<_>>())
}

/// Replaces internal vertex `vertex` of `d` by `v`, joining leg `k + 1` of
/// `v` to the edge at slot `k`. Works for round and symmetrized diagrams.
pub fn insert_diagram(v: &VogelDiagram, d: &Diagram, vertex: usize) -> Result<Diagram> {
    if vertex >= d.vertices() {
        return Err(Error::InvalidArgument(format!(
            "vertex {vertex} out of range (diagram has {})",
            d.vertices()
        )));
    }
    let g = &v.0;
    let legs = d.loop_legs() + d.free_legs();
    let nv = d.vertices() - 1 + g.vertices();
    let mut pair = vec![0u16; legs + 3 * nv];
    // old half-edges: slots of `vertex` become the Vogel legs' far ends
    let old = |h: usize| -> Option<usize> {
        match d.kind(h) {
            HalfEdge::LoopLeg(_) | HalfEdge::FreeLeg(_) => Some(h),
            HalfEdge::Slot { vertex: w, slot } if w != vertex => {
                let w = if w > vertex { w - 1 } else { w };
                Some(legs + 3 * w + slot)
            }
            HalfEdge::Slot { .. } => None,
        }
    };
    let base = legs + 3 * (d.vertices() - 1);
    let new_of_g = |h: usize| base + (h - 3);
    // where the edge at slot k of `vertex` continues inside `g`
    let leg_inner = |k: usize| new_of_g(g.partner(k));
    let resolve_old = |h: usize| -> usize {
        match old(h) {
            Some(x) => x,
            None => {
                let HalfEdge::Slot { slot, .. } = d.kind(h) else { unreachable!() };
                leg_inner(slot)
            }
        }
    };
    for h in 0..d.half_edges() {
        if let Some(x) = old(h) {
            pair[x] = resolve_old(d.partner(h)) as u16;
        }
    }
    for k in 0..3 {
        // the Vogel vertex adjacent to leg k connects to slot k's partner
        let inner = leg_inner(k);
        pair[inner] = resolve_old(d.partner(d.slot(vertex, k))) as u16;
    }
    for h in 3..g.half_edges() {
        let p = g.partner(h);
        if p >= 3 {
            pair[new_of_g(h)] = new_of_g(p) as u16;
        }
    }
    Diagram::new(d.loop_legs(), d.free_legs(), nv, pair)
}

pub fn insert_round(v: &VogelDiagram, d: &RoundDiagram, vertex: usize) -> Result<RoundDiagram> {
    if d.diagram().vertices() == 0 {
        return Err(Error::InvalidArgument("chord diagrams have no internal vertex".into()));
    }
    RoundDiagram::from_diagram(insert_diagram(v, d.diagram(), vertex)?)
}

pub fn insert_symmetrized(
    v: &VogelDiagram,
    d: &SymmetrizedDiagram,
    vertex: usize,
) -> Result<SymmetrizedDiagram> {
    SymmetrizedDiagram::from_diagram(insert_diagram(v, d.diagram(), vertex)?)
}

/// `t^k` inserted repeatedly at vertex 0.
pub fn t_power_round(k: usize, d: &RoundDiagram) -> RoundDiagram {
    let t = VogelDiagram::triangle();
    (0..k).fold(d.clone(), |acc, _| insert_round(&t, &acc, 0).expect("has vertices"))
}

pub fn t_power_symmetrized(k: usize, d: &SymmetrizedDiagram) -> SymmetrizedDiagram {
    let t = VogelDiagram::triangle();
    (0..k).fold(d.clone(), |acc, _| insert_symmetrized(&t, &acc, 0).expect("has vertices"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_shapes() {
        let w = wheel(2);
        assert_eq!(w.legs(), 2);
        assert_eq!(w.degree(), 2);
        assert!(w.is_connected());
        assert_eq!(round_wheel(4).degree(), 4);
    }

    #[test]
    fn triangle_insertion_adds_degree() {
        let t = VogelDiagram::triangle();
        assert_eq!(t.degree(), 1);
        let w2 = round_wheel(2);
        let tw2 = insert_round(&t, &w2, 0).unwrap();
        assert_eq!(tw2.degree(), 3);
        assert_eq!(tw2.legs(), 2);
        assert!(insert_round(&t, &crate::diagram::ChordDiagram::theta().to_round(), 0).is_err());
    }
}
