//! Round, chord and symmetrized diagrams.
//!
//! All three are stored as one half-edge structure ([`Diagram`]). Half-edges
//! are laid out as
//!
//! * `[0, L)`: legs attached to the Wilson loop, in loop orientation order,
//! * `[L, L + F)`: free (unattached) legs,
//! * then three slots per trivalent vertex, in the vertex's cyclic order.
//!
//! `pair` is a fixed-point-free involution on half-edges (the edges).
//! Round diagrams have `F = 0`; symmetrized diagrams have `L = 0`. Mixed
//! diagrams only occur as intermediate states while averaging leg attachments.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfEdge {
    LoopLeg(usize),
    FreeLeg(usize),
    Slot { vertex: usize, slot: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    loop_legs: usize,
    free_legs: usize,
    vertices: usize,
    pair: Vec<u16>,
}

impl Diagram {
    pub fn new(loop_legs: usize, free_legs: usize, vertices: usize, pair: Vec<u16>) -> Result<Self> {
        let n = loop_legs + free_legs + 3 * vertices;
        if pair.len() != n {
            return Err(Error::Structure(format!("expected {n} half-edges, got {}", pair.len())));
        }
        for (h, &p) in pair.iter().enumerate() {
            let p = p as usize;
            if p >= n {
                return Err(Error::Structure(format!("half-edge {h} paired with out-of-range {p}")));
            }
            if p == h {
                return Err(Error::Structure(format!("half-edge {h} is dangling")));
            }
            if pair[p] as usize != h {
                return Err(Error::Structure(format!("pairing is not an involution at {h}")));
            }
        }
        if (loop_legs + free_legs + vertices) % 2 != 0 {
            return Err(Error::Structure("odd total vertex count".into()));
        }
        Ok(Diagram { loop_legs, free_legs, vertices, pair })
    }

    pub(crate) fn from_parts_unchecked(
        loop_legs: usize,
        free_legs: usize,
        vertices: usize,
        pair: Vec<u16>,
    ) -> Self {
        debug_assert!(Self::new(loop_legs, free_legs, vertices, pair.clone()).is_ok());
        Diagram { loop_legs, free_legs, vertices, pair }
    }

    pub fn empty() -> Self {
        Diagram { loop_legs: 0, free_legs: 0, vertices: 0, pair: Vec::new() }
    }

    pub fn loop_legs(&self) -> usize {
        self.loop_legs
    }

    pub fn free_legs(&self) -> usize {
        self.free_legs
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn half_edges(&self) -> usize {
        self.pair.len()
    }

    pub fn pairing(&self) -> &[u16] {
        &self.pair
    }

    pub fn degree(&self) -> usize {
        (self.loop_legs + self.free_legs + self.vertices) / 2
    }

    pub fn partner(&self, h: usize) -> usize {
        self.pair[h] as usize
    }

    pub fn slot(&self, vertex: usize, slot: usize) -> usize {
        self.loop_legs + self.free_legs + 3 * vertex + slot
    }

    pub fn kind(&self, h: usize) -> HalfEdge {
        if h < self.loop_legs {
            HalfEdge::LoopLeg(h)
        } else if h < self.loop_legs + self.free_legs {
            HalfEdge::FreeLeg(h - self.loop_legs)
        } else {
            let s = h - self.loop_legs - self.free_legs;
            HalfEdge::Slot { vertex: s / 3, slot: s % 3 }
        }
    }

    /// Node index of a half-edge: legs are their own nodes, vertex slots map
    /// to `legs + vertex`.
    pub(crate) fn node_of(&self, h: usize) -> usize {
        let legs = self.loop_legs + self.free_legs;
        if h < legs {
            h
        } else {
            legs + (h - legs) / 3
        }
    }

    pub(crate) fn node_count(&self) -> usize {
        self.loop_legs + self.free_legs + self.vertices
    }

    /// Connected components of the graph formed by nodes and edges, ignoring
    /// the Wilson loop. Returns a component id per node.
    pub(crate) fn components(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for h in 0..self.pair.len() {
            let a = find(&mut parent, self.node_of(h));
            let b = find(&mut parent, self.node_of(self.partner(h)));
            if a != b {
                parent[a] = b;
            }
        }
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        let mut out = vec![0; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if id[r] == usize::MAX {
                id[r] = count;
                count += 1;
            }
            out[x] = id[r];
        }
        (out, count)
    }

    /// Every component of the internal graph reaches the loop (round) or has
    /// at least one leg (symmetrized).
    fn check_components(&self) -> Result<()> {
        let (comp, count) = self.components();
        let mut ok = vec![false; count];
        for leg in 0..self.loop_legs + self.free_legs {
            ok[comp[leg]] = true;
        }
        if ok.iter().all(|&b| b) {
            Ok(())
        } else {
            Err(Error::Structure("a component has no leg".into()))
        }
    }

    /// Relabels vertices by `perm` (new index of old vertex `j` is `perm[j]`)
    /// and rotates each vertex's slots by `rot[j]` positions.
    pub fn relabel(&self, perm: &[usize], rot: &[usize]) -> Diagram {
        let legs = self.loop_legs + self.free_legs;
        let map = |h: usize| -> usize {
            if h < legs {
                h
            } else {
                let s = h - legs;
                let (v, k) = (s / 3, s % 3);
                legs + 3 * perm[v] + (k + 3 - rot[v] % 3) % 3
            }
        };
        let mut pair = vec![0u16; self.pair.len()];
        for h in 0..self.pair.len() {
            pair[map(h)] = map(self.partner(h)) as u16;
        }
        Diagram { pair, ..*self }
    }

    /// Swaps slots 1 and 2 of `vertex` (reverses its cyclic orientation).
    pub fn flip_vertex(&self, vertex: usize) -> Diagram {
        let a = self.slot(vertex, 1);
        let b = self.slot(vertex, 2);
        let map = |h: usize| if h == a { b } else if h == b { a } else { h };
        let mut pair = vec![0u16; self.pair.len()];
        for h in 0..self.pair.len() {
            pair[map(h)] = map(self.partner(h)) as u16;
        }
        Diagram { pair, ..*self }
    }

    /// Rotates the Wilson loop so that leg `r` becomes leg 0.
    pub fn rotate_loop(&self, r: usize) -> Diagram {
        let l = self.loop_legs;
        if l == 0 {
            return self.clone();
        }
        let map = |h: usize| if h < l { (h + l - r % l) % l } else { h };
        let mut pair = vec![0u16; self.pair.len()];
        for h in 0..self.pair.len() {
            pair[map(h)] = map(self.partner(h)) as u16;
        }
        Diagram { pair, ..*self }
    }

    /// Disjoint union on the free-leg/vertex level; loop legs of `self` are
    /// kept, `other` must have none.
    pub(crate) fn disjoint_union(&self, other: &Diagram) -> Diagram {
        assert_eq!(other.loop_legs, 0);
        let (l, f1, v1) = (self.loop_legs, self.free_legs, self.vertices);
        let (f2, v2) = (other.free_legs, other.vertices);
        let legs = l + f1 + f2;
        let map1 = |h: usize| if h < l + f1 { h } else { h + f2 };
        let map2 = |h: usize| if h < f2 { l + f1 + h } else { legs + 3 * v1 + (h - f2) };
        let mut pair = vec![0u16; legs + 3 * (v1 + v2)];
        for h in 0..self.pair.len() {
            pair[map1(h)] = map1(self.partner(h)) as u16;
        }
        for h in 0..other.pair.len() {
            pair[map2(h)] = map2(other.partner(h)) as u16;
        }
        Diagram { loop_legs: l, free_legs: f1 + f2, vertices: v1 + v2, pair }
    }

    /// Attaches free legs to the Wilson loop: free leg `i` goes to loop
    /// position `positions[i]` among `loop_legs + free_legs` positions. The
    /// existing loop legs fill the remaining positions in order.
    pub(crate) fn attach_free_legs(&self, positions: &[usize]) -> Diagram {
        let (l, f) = (self.loop_legs, self.free_legs);
        assert_eq!(positions.len(), f);
        let total = l + f;
        let mut taken = vec![false; total];
        for &p in positions {
            taken[p] = true;
        }
        let mut old_loop = Vec::with_capacity(l);
        for (p, t) in taken.iter().enumerate() {
            if !t {
                old_loop.push(p);
            }
        }
        let map = |h: usize| -> usize {
            if h < l {
                old_loop[h]
            } else if h < total {
                positions[h - l]
            } else {
                h
            }
        };
        let mut pair = vec![0u16; self.pair.len()];
        for h in 0..self.pair.len() {
            pair[map(h)] = map(self.partner(h)) as u16;
        }
        Diagram { loop_legs: total, free_legs: 0, vertices: self.vertices, pair }
    }
}

/// A Jacobi diagram on an oriented Wilson loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RoundDiagram(Diagram);

impl RoundDiagram {
    pub fn new(legs: usize, vertices: usize, pair: Vec<u16>) -> Result<Self> {
        let d = Diagram::new(legs, 0, vertices, pair)?;
        d.check_components()?;
        Ok(RoundDiagram(d))
    }

    pub(crate) fn from_diagram(d: Diagram) -> Result<Self> {
        if d.free_legs != 0 {
            return Err(Error::Structure("round diagram with free legs".into()));
        }
        d.check_components()?;
        Ok(RoundDiagram(d))
    }

    pub fn unit() -> Self {
        RoundDiagram(Diagram::empty())
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn legs(&self) -> usize {
        self.0.loop_legs
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.0.vertices == 0
    }

    pub fn to_chord(&self) -> Option<ChordDiagram> {
        self.is_chord_diagram()
            .then(|| ChordDiagram(self.0.pair.iter().map(|&p| p as u8).collect()))
    }

    /// Internal graph has a single component (the empty diagram is not
    /// connected).
    pub fn is_connected(&self) -> bool {
        let (_, count) = self.0.components();
        count == 1
    }

    /// The same diagram with leg `r` moved to position 0.
    pub fn rotate(&self, r: usize) -> RoundDiagram {
        RoundDiagram(self.0.rotate_loop(r))
    }

    /// Legs re-listed in reversed loop order; internal graph unchanged.
    pub fn reverse_wilson(&self) -> RoundDiagram {
        let l = self.0.loop_legs;
        let map = |h: usize| if h < l { l - 1 - h } else { h };
        let mut pair = vec![0u16; self.0.pair.len()];
        for h in 0..self.0.pair.len() {
            pair[map(h)] = map(self.0.partner(h)) as u16;
        }
        RoundDiagram(Diagram { pair, ..self.0 })
    }

    /// Connect sum: cut both loops just before leg 0 and concatenate.
    pub fn connect_sum(&self, other: &RoundDiagram) -> RoundDiagram {
        let (a, b) = (&self.0, &other.0);
        let (la, lb) = (a.loop_legs, b.loop_legs);
        let l = la + lb;
        let map_a = |h: usize| if h < la { h } else { l + (h - la) };
        let map_b = |h: usize| if h < lb { la + h } else { l + 3 * a.vertices + (h - lb) };
        let mut pair = vec![0u16; a.pair.len() + b.pair.len()];
        for h in 0..a.pair.len() {
            pair[map_a(h)] = map_a(a.partner(h)) as u16;
        }
        for h in 0..b.pair.len() {
            pair[map_b(h)] = map_b(b.partner(h)) as u16;
        }
        RoundDiagram(Diagram { loop_legs: l, free_legs: 0, vertices: a.vertices + b.vertices, pair })
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson::from_diagram(&self.0)
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        Self::from_diagram(j.to_diagram()?)
    }
}

/// A unitrivalent graph with unordered legs, every component having a leg.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetrizedDiagram(Diagram);

impl SymmetrizedDiagram {
    pub fn new(legs: usize, vertices: usize, pair: Vec<u16>) -> Result<Self> {
        let d = Diagram::new(0, legs, vertices, pair)?;
        d.check_components()?;
        Ok(SymmetrizedDiagram(d))
    }

    pub(crate) fn from_diagram(d: Diagram) -> Result<Self> {
        if d.loop_legs != 0 {
            return Err(Error::Structure("symmetrized diagram with loop legs".into()));
        }
        d.check_components()?;
        Ok(SymmetrizedDiagram(d))
    }

    pub fn empty() -> Self {
        SymmetrizedDiagram(Diagram::empty())
    }

    /// The single edge joining two legs (degree 1).
    pub fn strut() -> Self {
        SymmetrizedDiagram(Diagram::from_parts_unchecked(0, 2, 0, vec![1, 0]))
    }

    pub fn diagram(&self) -> &Diagram {
        &self.0
    }

    pub fn legs(&self) -> usize {
        self.0.free_legs
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn component_count(&self) -> usize {
        self.0.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn disjoint_union(&self, other: &SymmetrizedDiagram) -> SymmetrizedDiagram {
        SymmetrizedDiagram(self.0.disjoint_union(&other.0))
    }

    /// Splits into connected components (each a symmetrized diagram).
    pub fn split_components(&self) -> Vec<SymmetrizedDiagram> {
        let d = &self.0;
        let (comp, count) = d.components();
        let legs = d.free_legs;
        (0..count)
            .map(|c| {
                let leg_ids: Vec<usize> = (0..legs).filter(|&i| comp[i] == c).collect();
                let vtx_ids: Vec<usize> = (0..d.vertices).filter(|&j| comp[legs + j] == c).collect();
                let mut new_index = vec![usize::MAX; d.half_edges()];
                for (i, &leg) in leg_ids.iter().enumerate() {
                    new_index[leg] = i;
                }
                for (i, &v) in vtx_ids.iter().enumerate() {
                    for k in 0..3 {
                        new_index[d.slot(v, k)] = leg_ids.len() + 3 * i + k;
                    }
                }
                let n = leg_ids.len() + 3 * vtx_ids.len();
                let mut pair = vec![0u16; n];
                for h in 0..d.half_edges() {
                    if new_index[h] != usize::MAX {
                        pair[new_index[h]] = new_index[d.partner(h)] as u16;
                    }
                }
                SymmetrizedDiagram(Diagram::from_parts_unchecked(0, leg_ids.len(), vtx_ids.len(), pair))
            })
            .collect()
    }

    /// The round diagram obtained by attaching leg `i` at loop position
    /// `order[i]`.
    pub fn attach(&self, order: &[usize]) -> RoundDiagram {
        RoundDiagram(self.0.attach_free_legs(order))
    }

    pub fn to_json(&self) -> DiagramJson {
        DiagramJson::from_diagram(&self.0)
    }

    pub fn from_json(j: &DiagramJson) -> Result<Self> {
        let d = j.to_diagram()?;
        let d = Diagram { free_legs: d.loop_legs, loop_legs: 0, ..d };
        Self::from_diagram(d)
    }
}

/// A chord diagram: a fixed-point-free involution on `2n` cyclically ordered
/// loop points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram(Vec<u8>);

pub type ChordKey = Box<[u8]>;

impl ChordDiagram {
    pub fn new(involution: Vec<u8>) -> Result<Self> {
        let n = involution.len();
        for (i, &p) in involution.iter().enumerate() {
            let p = p as usize;
            if p >= n || p == i || involution[p] as usize != i {
                return Err(Error::Structure(format!("not a fixed-point-free involution at {i}")));
            }
        }
        Ok(ChordDiagram(involution))
    }

    pub(crate) fn from_key(key: &[u8]) -> Self {
        ChordDiagram(key.to_vec())
    }

    pub fn empty() -> Self {
        ChordDiagram(Vec::new())
    }

    /// The one-chord diagram.
    pub fn theta() -> Self {
        ChordDiagram(vec![1, 0])
    }

    /// Parses a balanced-pairs word such as `"ABAB"`: equal letters are the
    /// two ends of one chord.
    pub fn from_word(word: &str) -> Result<Self> {
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        let mut inv = vec![u8::MAX; chars.len()];
        for i in 0..chars.len() {
            if inv[i] != u8::MAX {
                continue;
            }
            let js: Vec<usize> = (i + 1..chars.len()).filter(|&j| chars[j] == chars[i]).collect();
            if js.len() != 1 {
                return Err(Error::Parse(format!("letter {:?} must occur exactly twice", chars[i])));
            }
            inv[i] = js[0] as u8;
            inv[js[0]] = i as u8;
        }
        if chars.len() > 250 {
            return Err(Error::Parse("word too long".into()));
        }
        Self::new(inv)
    }

    /// Balanced-pairs word with letters assigned in order of first
    /// occurrence.
    pub fn to_word(&self) -> String {
        let mut letter = vec![' '; self.0.len()];
        let mut next = 0u8;
        for i in 0..self.0.len() {
            if letter[i] == ' ' {
                let c = if next < 26 { (b'A' + next) as char } else { (b'a' + next - 26) as char };
                letter[i] = c;
                letter[self.0[i] as usize] = c;
                next += 1;
            }
        }
        letter.into_iter().collect()
    }

    pub fn involution(&self) -> &[u8] {
        &self.0
    }

    pub fn points(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.len() / 2
    }

    /// Lexicographically minimal involution over loop rotations.
    pub fn canonical_key(&self) -> ChordKey {
        canonical_chord_key(&self.0)
    }

    pub fn canonical(&self) -> ChordDiagram {
        ChordDiagram(self.canonical_key().into_vec())
    }

    pub fn to_round(&self) -> RoundDiagram {
        RoundDiagram(Diagram {
            loop_legs: self.0.len(),
            free_legs: 0,
            vertices: 0,
            pair: self.0.iter().map(|&p| p as u16).collect(),
        })
    }

    pub fn rotate(&self, r: usize) -> ChordDiagram {
        let n = self.0.len();
        if n == 0 {
            return self.clone();
        }
        let mut out = vec![0u8; n];
        for i in 0..n {
            let src = (i + r) % n;
            out[i] = ((self.0[src] as usize + n - r % n) % n) as u8;
        }
        ChordDiagram(out)
    }

    pub fn reverse(&self) -> ChordDiagram {
        let n = self.0.len();
        let mut out = vec![0u8; n];
        for i in 0..n {
            out[n - 1 - i] = (n - 1 - self.0[i] as usize) as u8;
        }
        ChordDiagram(out)
    }

    pub fn concat(&self, other: &ChordDiagram) -> ChordDiagram {
        let n = self.0.len() as u8;
        let mut out = self.0.clone();
        out.extend(other.0.iter().map(|&p| p + n));
        ChordDiagram(out)
    }

    /// Chords as `(a, b)` with `a < b`, ordered by `a`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        (0..self.0.len())
            .filter(|&i| (self.0[i] as usize) > i)
            .map(|i| (i, self.0[i] as usize))
            .collect()
    }

    /// Keeps only the chords whose index (in [`Self::chords`] order) is in
    /// `mask`.
    pub fn restrict(&self, mask: u32) -> ChordDiagram {
        let chords = self.chords();
        let mut keep = vec![false; self.0.len()];
        for (k, &(a, b)) in chords.iter().enumerate() {
            if mask >> k & 1 == 1 {
                keep[a] = true;
                keep[b] = true;
            }
        }
        let mut index = vec![0u8; self.0.len()];
        let mut n = 0u8;
        for i in 0..self.0.len() {
            if keep[i] {
                index[i] = n;
                n += 1;
            }
        }
        let mut out = vec![0u8; n as usize];
        for i in 0..self.0.len() {
            if keep[i] {
                out[index[i] as usize] = index[self.0[i] as usize];
            }
        }
        ChordDiagram(out)
    }

    /// True if some chord is crossed by no other chord.
    pub fn has_isolated_chord(&self) -> bool {
        let chords = self.chords();
        chords.iter().any(|&(a, b)| {
            !chords.iter().any(|&(c, d)| (a < c && c < b) != (a < d && d < b))
        })
    }
}

pub(crate) fn canonical_chord_key(inv: &[u8]) -> ChordKey {
    let n = inv.len();
    if n == 0 {
        return Box::new([]);
    }
    let mut best: Vec<u8> = inv.to_vec();
    let mut cur = vec![0u8; n];
    for r in 1..n {
        // early-exit comparison while building the rotation
        let mut ord = std::cmp::Ordering::Equal;
        for i in 0..n {
            let v = ((inv[(i + r) % n] as usize + n - r) % n) as u8;
            cur[i] = v;
            if ord == std::cmp::Ordering::Equal {
                ord = v.cmp(&best[i]);
                if ord == std::cmp::Ordering::Greater {
                    break;
                }
            }
        }
        if ord == std::cmp::Ordering::Less {
            best.copy_from_slice(&cur);
        }
    }
    best.into_boxed_slice()
}

/// JSON form `{legs, vertices: [[h,h,h],...], edges: [[h,h],...]}` with
/// half-edge ids `"L<i>"` and `"V<j>.<k>"`. Each vertex entry lists its three
/// slots in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub legs: usize,
    pub vertices: Vec<[String; 3]>,
    pub edges: Vec<[String; 2]>,
}

impl DiagramJson {
    /// Loop legs and free legs are both written as `L<i>`.
    fn from_diagram(d: &Diagram) -> Self {
        let legs = d.loop_legs + d.free_legs;
        let name = |h: usize| -> String {
            if h < legs {
                format!("L{h}")
            } else {
                let s = h - legs;
                format!("V{}.{}", s / 3, s % 3)
            }
        };
        let vertices = (0..d.vertices)
            .map(|j| [name(d.slot(j, 0)), name(d.slot(j, 1)), name(d.slot(j, 2))])
            .collect();
        let edges = (0..d.half_edges())
            .filter(|&h| d.partner(h) > h)
            .map(|h| [name(h), name(d.partner(h))])
            .collect();
        DiagramJson { legs, vertices, edges }
    }

    /// Builds a diagram with `legs` loop legs.
    fn to_diagram(&self) -> Result<Diagram> {
        let legs = self.legs;
        let nv = self.vertices.len();
        let parse = |s: &str| -> Result<usize> {
            let bad = || Error::Parse(format!("bad half-edge id {s:?}"));
            if let Some(i) = s.strip_prefix('L') {
                let i: usize = i.parse().map_err(|_| bad())?;
                if i >= legs {
                    return Err(bad());
                }
                Ok(i)
            } else if let Some(rest) = s.strip_prefix('V') {
                let (j, k) = rest.split_once('.').ok_or_else(bad)?;
                let j: usize = j.parse().map_err(|_| bad())?;
                let k: usize = k.parse().map_err(|_| bad())?;
                if j >= nv || k > 2 {
                    return Err(bad());
                }
                Ok(legs + 3 * j + k)
            } else {
                Err(bad())
            }
        };
        // vertex entries give the cyclic order of the named slots
        let mut position = vec![usize::MAX; legs + 3 * nv];
        for h in 0..legs {
            position[h] = h;
        }
        for (j, triple) in self.vertices.iter().enumerate() {
            let mut seen = [false; 3];
            for (k, s) in triple.iter().enumerate() {
                let h = parse(s)?;
                if h < legs || (h - legs) / 3 != j {
                    return Err(Error::Structure(format!("vertex {j} lists foreign half-edge {s}")));
                }
                let orig = (h - legs) % 3;
                if seen[orig] {
                    return Err(Error::Structure(format!("vertex {j} repeats {s}")));
                }
                seen[orig] = true;
                position[h] = legs + 3 * j + k;
            }
        }
        let n = legs + 3 * nv;
        let mut pair = vec![u16::MAX; n];
        for [a, b] in &self.edges {
            let (a, b) = (position[parse(a)?], position[parse(b)?]);
            if pair[a] != u16::MAX || pair[b] != u16::MAX || a == b {
                return Err(Error::Structure(format!("half-edge used twice in edge {a}-{b}")));
            }
            pair[a] = b as u16;
            pair[b] = a as u16;
        }
        if let Some(h) = pair.iter().position(|&p| p == u16::MAX) {
            return Err(Error::Structure(format!("half-edge {h} is dangling")));
        }
        Diagram::new(legs, 0, nv, pair)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_roundtrip() {
        let x = ChordDiagram::from_word("ABAB").unwrap();
        assert_eq!(x.involution(), &[2, 3, 0, 1]);
        assert_eq!(x.to_word(), "ABAB");
        assert!(ChordDiagram::from_word("ABA").is_err());
        assert!(ChordDiagram::from_word("AAAB").is_err());
    }

    #[test]
    fn isolated_chords() {
        assert!(ChordDiagram::theta().has_isolated_chord());
        assert!(ChordDiagram::from_word("AABB").unwrap().has_isolated_chord());
        assert!(!ChordDiagram::from_word("ABAB").unwrap().has_isolated_chord());
        assert!(ChordDiagram::from_word("ABACBC").unwrap().has_isolated_chord() == false);
        assert!(ChordDiagram::from_word("ABABCC").unwrap().has_isolated_chord());
    }

    #[test]
    fn malformed_diagrams_rejected() {
        // dangling: half-edge paired with itself
        assert!(Diagram::new(2, 0, 0, vec![0, 1]).is_err());
        // not an involution
        assert!(Diagram::new(0, 1, 1, vec![1, 2, 3, 0]).is_err());
        // component with no leg: a theta graph floating next to a chord
        let pair = vec![1, 0, 5, 6, 7, 2, 3, 4];
        assert!(RoundDiagram::new(2, 2, pair).is_err());
    }

    #[test]
    fn json_roundtrip_with_orientation() {
        // tripod on three loop legs
        let d = RoundDiagram::new(3, 1, vec![3, 4, 5, 0, 1, 2]).unwrap();
        let j = d.to_json();
        assert_eq!(RoundDiagram::from_json(&j).unwrap(), d);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains("\"V0.2\""));
        // listing the vertex slots in another order reorients the vertex
        let mut j2 = j.clone();
        j2.vertices[0] = ["V0.0".into(), "V0.2".into(), "V0.1".into()];
        let d2 = RoundDiagram::from_json(&j2).unwrap();
        assert_eq!(d2.diagram(), &d.diagram().flip_vertex(0));
    }

    #[test]
    fn concat_and_restrict() {
        let t = ChordDiagram::theta();
        assert_eq!(t.concat(&t).involution(), &[1, 0, 3, 2]);
        let x = ChordDiagram::from_word("ABAB").unwrap();
        assert_eq!(x.restrict(0b01), t);
        assert_eq!(x.restrict(0), ChordDiagram::empty());
        assert_eq!(x.reverse().canonical(), x.canonical());
    }
}
