//! Canonical forms of round and symmetrized diagrams up to isomorphism.
//!
//! A labeling visits half-edges in discovery order: nodes (legs and
//! vertices) get consecutive positions when first reached, a vertex reached
//! through one of its slots puts that slot first. Each position emits the
//! token `2 * partner_position + partner_is_vertex`. The canonical encoding is
//! the lexicographically smallest token string over all labelings (loop
//! rotations or starting legs, plus the order of the two trailing slots at
//! each vertex). The sign records the vertex-orientation parity of the
//! minimizing labeling; if two minimizing labelings disagree the diagram is
//! zero by antisymmetry.

use std::cmp::Ordering;

use crate::diagram::{canonical_chord_key, ChordDiagram, Diagram, HalfEdge};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub encoding: Box<[u8]>,
    /// `+1` or `-1` relating the diagram to the canonical representative,
    /// `0` if the diagram vanishes by antisymmetry.
    pub sign: i8,
}

const NONE8: u8 = u8::MAX;
const NONE16: u16 = u16::MAX;

#[derive(Clone)]
struct State {
    pos_of: Vec<u8>,
    at_pos: Vec<u16>,
    base: Vec<u8>,
    next_free: usize,
    cur: usize,
    tokens: Vec<u8>,
    ord: Ordering,
}

struct Search<'a> {
    d: &'a Diagram,
    best: Option<Vec<u8>>,
    plus: bool,
    minus: bool,
}

impl<'a> Search<'a> {
    fn new(d: &'a Diagram) -> Self {
        Search { d, best: None, plus: false, minus: false }
    }

    fn empty_state(&self) -> State {
        let n = self.d.half_edges();
        State {
            pos_of: vec![NONE8; n],
            at_pos: vec![NONE16; n],
            base: vec![NONE8; self.d.vertices()],
            next_free: 0,
            cur: 0,
            tokens: Vec::with_capacity(n),
            ord: Ordering::Less,
        }
    }

    fn is_vertex_slot(&self, h: usize) -> bool {
        matches!(self.d.kind(h), HalfEdge::Slot { .. })
    }

    fn place(st: &mut State, h: usize, pos: usize) {
        st.pos_of[h] = pos as u8;
        st.at_pos[pos] = h as u16;
    }

    fn refresh_ord(&self, st: &mut State) -> bool {
        st.ord = match &self.best {
            None => Ordering::Less,
            Some(b) => st.tokens.as_slice().cmp(&b[..st.tokens.len()]),
        };
        st.ord != Ordering::Greater
    }

    /// Runs the labeling of `st` to completion, branching where the slot
    /// order at a vertex is not forced. `limit` is the number of positions
    /// to fill.
    fn run(&mut self, mut st: State, limit: usize) {
        let d = self.d;
        while st.cur < limit {
            let h = st.at_pos[st.cur];
            if h == NONE16 {
                // second slot of a vertex whose trailing slots are both unplaced
                let first = st.at_pos[st.cur - 1] as usize;
                let HalfEdge::Slot { vertex, slot } = d.kind(first) else {
                    unreachable!("unplaced position after a leg")
                };
                let a = d.slot(vertex, (slot + 1) % 3);
                let b = d.slot(vertex, (slot + 2) % 3);
                for (x, y) in [(a, b), (b, a)] {
                    let mut s = st.clone();
                    let c = s.cur;
                    Self::place(&mut s, x, c);
                    Self::place(&mut s, y, c + 1);
                    if self.refresh_ord(&mut s) {
                        self.run(s, limit);
                    }
                }
                return;
            }
            let p = d.partner(h as usize);
            if st.pos_of[p] == NONE8 {
                match d.kind(p) {
                    HalfEdge::LoopLeg(_) | HalfEdge::FreeLeg(_) => {
                        let pos = st.next_free;
                        Self::place(&mut st, p, pos);
                        st.next_free += 1;
                    }
                    HalfEdge::Slot { vertex, .. } => {
                        let b = st.base[vertex];
                        if b == NONE8 {
                            let pos = st.next_free;
                            st.base[vertex] = pos as u8;
                            Self::place(&mut st, p, pos);
                            st.next_free += 3;
                        } else {
                            // reached through a trailing slot: both trailing
                            // positions are now forced
                            let b = b as usize;
                            let first = st.at_pos[b] as usize;
                            let rest = (0..3).map(|s| d.slot(vertex, s)).find(|&x| x != p && x != first);
                            Self::place(&mut st, p, b + 1);
                            Self::place(&mut st, rest.expect("three slots"), b + 2);
                        }
                    }
                }
            }
            let tok = 2 * st.pos_of[p] + self.is_vertex_slot(p) as u8;
            if st.ord == Ordering::Equal {
                let b = self.best.as_ref().expect("equal requires a best")[st.tokens.len()];
                match tok.cmp(&b) {
                    Ordering::Greater => return,
                    Ordering::Less => st.ord = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            st.tokens.push(tok);
            st.cur += 1;
        }
        let sign = self.parity(&st);
        if st.ord == Ordering::Less {
            self.best = Some(st.tokens);
            self.plus = sign > 0;
            self.minus = sign < 0;
        } else if sign > 0 {
            self.plus = true;
        } else {
            self.minus = true;
        }
    }

    fn parity(&self, st: &State) -> i8 {
        let mut sign = 1i8;
        for v in 0..self.d.vertices() {
            let b = st.base[v];
            if b == NONE8 {
                continue;
            }
            let n0 = st.pos_of[self.d.slot(v, 0)] as i32 - b as i32;
            let n1 = st.pos_of[self.d.slot(v, 1)] as i32 - b as i32;
            if (n1 - n0).rem_euclid(3) != 1 {
                sign = -sign;
            }
        }
        sign
    }

    fn result(self, header: &[u8]) -> CanonicalForm {
        let mut encoding = header.to_vec();
        encoding.extend(self.best.unwrap_or_default());
        let sign = match (self.plus, self.minus) {
            (true, true) => 0,
            (false, true) => -1,
            _ => 1,
        };
        CanonicalForm { encoding: encoding.into_boxed_slice(), sign }
    }
}

/// Canonical form of a diagram on the Wilson loop (no free legs).
pub fn canonical_round(d: &Diagram) -> CanonicalForm {
    assert_eq!(d.free_legs(), 0, "round canonicalization needs attached legs");
    let l = d.loop_legs();
    if d.vertices() == 0 {
        let inv: Vec<u8> = d.pairing().iter().map(|&p| p as u8).collect();
        let mut encoding = vec![0u8, l as u8];
        encoding.extend_from_slice(&canonical_chord_key(&inv));
        return CanonicalForm { encoding: encoding.into_boxed_slice(), sign: 1 };
    }
    let mut search = Search::new(d);
    for r in 0..l {
        let mut st = search.empty_state();
        for h in 0..l {
            Search::place(&mut st, h, (h + l - r) % l);
        }
        st.next_free = l;
        if search.refresh_ord(&mut st) {
            search.run(st, d.half_edges());
        }
    }
    search.result(&[d.vertices() as u8, l as u8])
}

/// The chord diagram behind a round canonical encoding with no vertices.
pub fn chord_from_encoding(encoding: &[u8]) -> Option<ChordDiagram> {
    if encoding.len() >= 2 && encoding[0] == 0 {
        Some(ChordDiagram::from_key(&encoding[2..]))
    } else {
        None
    }
}

fn canonical_connected_free(d: &Diagram) -> CanonicalForm {
    let mut search = Search::new(d);
    for start in 0..d.free_legs() {
        let mut st = search.empty_state();
        Search::place(&mut st, start, 0);
        st.next_free = 1;
        if search.refresh_ord(&mut st) {
            search.run(st, d.half_edges());
        }
    }
    search.result(&[])
}

/// Canonical form of a symmetrized diagram: connected components are
/// canonicalized separately and sorted.
pub fn canonical_symmetrized(d: &Diagram) -> CanonicalForm {
    assert_eq!(d.loop_legs(), 0, "symmetrized canonicalization needs free legs only");
    let sym = crate::diagram::SymmetrizedDiagram::from_diagram(d.clone())
        .expect("symmetrized diagram components need legs");
    let mut parts = Vec::new();
    let mut sign = 1i8;
    for c in sym.split_components() {
        let f = canonical_connected_free(c.diagram());
        sign *= f.sign;
        let mut bytes = vec![f.encoding.len() as u8];
        bytes.extend_from_slice(&f.encoding);
        parts.push(bytes);
    }
    parts.sort();
    let encoding: Vec<u8> = parts.concat();
    CanonicalForm { encoding: encoding.into_boxed_slice(), sign }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::RoundDiagram;

    #[test]
    fn chord_forms_ignore_rotation() {
        let a = ChordDiagram::from_word("AABB").unwrap().to_round();
        let b = ChordDiagram::from_word("ABBA").unwrap().to_round();
        assert_eq!(canonical_round(a.diagram()), canonical_round(b.diagram()));
        let x = ChordDiagram::from_word("ABAB").unwrap().to_round();
        assert_ne!(canonical_round(a.diagram()).encoding, canonical_round(x.diagram()).encoding);
    }

    #[test]
    fn vertex_flip_changes_sign() {
        let d = RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
        let c = canonical_round(d.diagram());
        let f = canonical_round(&d.diagram().flip_vertex(0));
        assert_eq!(c.encoding, f.encoding);
        assert_eq!(c.sign, -f.sign);
        assert_ne!(c.sign, 0);
    }

    #[test]
    fn symmetric_tripod_vanishes() {
        // three legs on one vertex, unordered: reflection is an automorphism
        let d = Diagram::new(0, 3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
        assert_eq!(canonical_symmetrized(&d).sign, 0);
    }

    #[test]
    fn relabeling_invariance() {
        // two vertices joined by an edge, two legs each
        let d = Diagram::new(4, 0, 2, vec![4, 5, 7, 8, 0, 1, 9, 2, 3, 6]).unwrap();
        let c = canonical_round(&d);
        let r = canonical_round(&d.relabel(&[1, 0], &[1, 2]));
        assert_eq!(c, r);
        let rot = canonical_round(&d.rotate_loop(1));
        assert_eq!(c, rot);
    }
}
