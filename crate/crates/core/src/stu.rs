//! Reduction of round diagrams to chord diagrams by the STU relation.

use std::collections::{BTreeMap, HashMap};

use crate::canon::canonical_round;
use crate::diagram::{ChordKey, Diagram, HalfEdge, RoundDiagram};

/// Integer combination of canonical chord diagrams, sorted by key.
pub type ChordCombo = Vec<(ChordKey, i64)>;

/// Adds `coeff * src` into `acc`.
pub fn add_scaled(acc: &mut BTreeMap<ChordKey, i64>, src: &[(ChordKey, i64)], coeff: i64) {
    for (k, c) in src {
        let e = acc.entry(k.clone()).or_insert(0);
        *e += coeff * c;
    }
}

pub fn finish(acc: BTreeMap<ChordKey, i64>) -> ChordCombo {
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Splits the vertex adjacent to loop leg `i` by STU.
///
/// With the vertex triple rotated to `(e, x, y)`, `e` joined to leg `i`,
/// returns `(T, U)` where `S = T - U`: in `T` the new loop legs at positions
/// `i, i+1` attach to the far ends of `y, x`; in `U` to those of `x, y`.
pub fn stu_split(d: &Diagram, i: usize) -> (Diagram, Diagram) {
    let e = d.partner(i);
    let HalfEdge::Slot { vertex: v, slot: k } = d.kind(e) else {
        panic!("leg {i} is not attached to a vertex");
    };
    let x = d.slot(v, (k + 1) % 3);
    let y = d.slot(v, (k + 2) % 3);
    (resolve(d, i, v, y, x), resolve(d, i, v, x, y))
}

/// Removes vertex `v` and leg `i`, inserting legs at `i` and `i + 1` joined
/// to the far ends of `first` and `second`.
fn resolve(d: &Diagram, i: usize, v: usize, first: usize, second: usize) -> Diagram {
    let l = d.loop_legs();
    let nl = l + 1;
    let nv = d.vertices() - 1;
    let map = |h: usize| -> usize {
        match d.kind(h) {
            HalfEdge::LoopLeg(j) => {
                if j < i {
                    j
                } else {
                    j + 1
                }
            }
            HalfEdge::Slot { vertex: w, slot } => {
                let w = if w > v { w - 1 } else { w };
                nl + 3 * w + slot
            }
            HalfEdge::FreeLeg(_) => unreachable!("round diagram with free legs"),
        }
    };
    let mut pair = vec![0u16; nl + 3 * nv];
    let fa = d.partner(first);
    let fb = d.partner(second);
    let (a, b) = (i, i + 1);
    for h in 0..d.half_edges() {
        if h == i {
            continue;
        }
        if let HalfEdge::Slot { vertex, .. } = d.kind(h) {
            if vertex == v {
                continue;
            }
        }
        let p = d.partner(h);
        let target = if p == first {
            a
        } else if p == second {
            b
        } else {
            map(p)
        };
        pair[map(h)] = target as u16;
    }
    // a self-loop at v joins first and second directly
    let ta = if fa == second { b } else { map(fa) };
    let tb = if fb == first { a } else { map(fb) };
    pair[a] = ta as u16;
    pair[b] = tb as u16;
    Diagram::from_parts_unchecked(nl, 0, nv, pair)
}

/// Memoizing STU reducer.
#[derive(Default)]
pub struct Reducer {
    memo: HashMap<Box<[u8]>, ChordCombo>,
}

impl Reducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn reduce(&mut self, d: &RoundDiagram) -> ChordCombo {
        self.reduce_diagram(d.diagram())
    }

    pub(crate) fn reduce_diagram(&mut self, d: &Diagram) -> ChordCombo {
        if d.vertices() == 0 {
            let inv: Vec<u8> = d.pairing().iter().map(|&p| p as u8).collect();
            return vec![(crate::diagram::canonical_chord_key(&inv), 1)];
        }
        let cf = canonical_round(d);
        if cf.sign == 0 {
            return Vec::new();
        }
        let sign = cf.sign as i64;
        if let Some(r) = self.memo.get(&cf.encoding) {
            return r.iter().map(|(k, c)| (k.clone(), sign * c)).collect();
        }
        let i = (0..d.loop_legs())
            .find(|&i| matches!(d.kind(d.partner(i)), HalfEdge::Slot { .. }))
            .expect("a vertex touches the loop");
        let (t, u) = stu_split(d, i);
        let mut acc = BTreeMap::new();
        add_scaled(&mut acc, &self.reduce_diagram(&t), 1);
        add_scaled(&mut acc, &self.reduce_diagram(&u), -1);
        let r = finish(acc);
        let stored: ChordCombo = r.iter().map(|(k, c)| (k.clone(), sign * c)).collect();
        self.memo.insert(cf.encoding, stored);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ChordDiagram;

    fn key(w: &str) -> ChordKey {
        ChordDiagram::from_word(w).unwrap().canonical_key()
    }

    #[test]
    fn tree3_is_parallel_minus_crossed() {
        // tripod on legs 0,1,2 plus a chord? degree 2 needs 3 legs + 1 vertex
        let d = RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
        let r = Reducer::new().reduce(&d);
        let mut expect = vec![(key("AABB"), 1), (key("ABAB"), -1)];
        expect.sort();
        assert_eq!(r, expect);
    }

    #[test]
    fn flipped_tripod_negates() {
        let d = RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
        let f = RoundDiagram::from_diagram(d.diagram().flip_vertex(0)).unwrap();
        let mut red = Reducer::new();
        let a = red.reduce(&d);
        let b = red.reduce(&f);
        let neg: ChordCombo = a.iter().map(|(k, c)| (k.clone(), -c)).collect();
        assert_eq!(b, neg);
    }
}
