//! Symmetrization (attaching free legs to the Wilson loop in all orders) and
//! generation of symmetrized diagrams.

use std::collections::{BTreeMap, BTreeSet};

use crate::canon::canonical_symmetrized;
use crate::diagram::{ChordKey, Diagram, SymmetrizedDiagram};
use crate::enumerate::for_each_matching;
use crate::stu::Reducer;

/// Calls `f` on every distinct leg attachment of `s` and returns how many
/// there were. The average over all `u!` orderings of the legs equals the
/// average over these attachments.
///
/// Strut components only contribute chords, so they are placed by
/// matchings; the remaining legs are placed by injections with the first
/// leg fixed at position 0, which is enough because round diagrams are
/// invariant under loop rotation.
pub fn for_each_attachment(s: &SymmetrizedDiagram, mut f: impl FnMut(&Diagram)) -> u64 {
    let comps = s.split_components();
    let is_strut = |c: &SymmetrizedDiagram| c.legs() == 2 && c.diagram().vertices() == 0;
    let struts = comps.iter().filter(|c| is_strut(c)).count();
    let rest = comps.iter().filter(|c| !is_strut(c)).fold(SymmetrizedDiagram::empty(), |a, c| a.disjoint_union(c));
    let x = rest.diagram();
    let u = x.free_legs();
    let total = u + 2 * struts;
    if total == 0 {
        f(&Diagram::empty());
        return 1;
    }
    let mut count = 0u64;
    if u == 0 {
        for_each_matching(total, |m| {
            let pair = m.iter().map(|&p| p as u16).collect();
            f(&Diagram::from_parts_unchecked(total, 0, 0, pair));
            count += 1;
        });
        return count;
    }
    let mut pos = vec![usize::MAX; u];
    pos[0] = 0;
    let mut used = vec![false; total];
    used[0] = true;
    place(x, 1, &mut pos, &mut used, &mut |pos, used| {
        let free: Vec<usize> = (0..total).filter(|&i| !used[i]).collect();
        let attach = |m: &[u8]| -> Diagram {
            let nv = x.vertices();
            let mut pair = vec![0u16; total + 3 * nv];
            let map = |h: usize| if h < u { pos[h] } else { total + (h - u) };
            for h in 0..x.half_edges() {
                pair[map(h)] = map(x.partner(h)) as u16;
            }
            for (i, &j) in m.iter().enumerate() {
                pair[free[i]] = free[j as usize] as u16;
            }
            Diagram::from_parts_unchecked(total, 0, nv, pair)
        };
        if free.is_empty() {
            f(&attach(&[]));
            count += 1;
        } else {
            for_each_matching(free.len(), |m| {
                f(&attach(m));
                count += 1;
            });
        }
    });
    count
}

/// Sum over the distinct leg attachments of `s` of the STU-reduced round
/// diagrams, with the number of attachments summed (see
/// [`for_each_attachment`]).
pub fn chi_sum(s: &SymmetrizedDiagram, reducer: &mut Reducer) -> (BTreeMap<ChordKey, i64>, u64) {
    let mut acc: BTreeMap<ChordKey, i64> = BTreeMap::new();
    let count = for_each_attachment(s, |d| {
        for (k, c) in reducer.reduce_diagram(d) {
            *acc.entry(k).or_insert(0) += c;
        }
    });
    acc.retain(|_, c| *c != 0);
    (acc, count)
}

fn place(
    x: &Diagram,
    i: usize,
    pos: &mut Vec<usize>,
    used: &mut Vec<bool>,
    f: &mut impl FnMut(&[usize], &[bool]),
) {
    if i == x.free_legs() {
        f(pos, used);
        return;
    }
    for p in 1..used.len() {
        if !used[p] {
            used[p] = true;
            pos[i] = p;
            place(x, i + 1, pos, used, f);
            used[p] = false;
        }
    }
}

/// Edges as `(h, partner)` with `h < partner`.
fn edges(d: &Diagram) -> Vec<(usize, usize)> {
    (0..d.half_edges()).filter(|&h| d.partner(h) > h).map(|h| (h, d.partner(h))).collect()
}

/// Rebuilds `d` with `extra_legs` more free legs and `extra_vertices` more
/// vertices; returns the new pairing (old edges copied) and the index map
/// for old half-edges.
fn widen(d: &Diagram, extra_legs: usize, extra_vertices: usize) -> (Vec<u16>, impl Fn(usize) -> usize) {
    let f = d.free_legs();
    let n = f + extra_legs + 3 * (d.vertices() + extra_vertices);
    let map = move |h: usize| if h < f { h } else { h + extra_legs };
    let mut pair = vec![0u16; n];
    for h in 0..d.half_edges() {
        pair[map(h)] = map(d.partner(h)) as u16;
    }
    (pair, map)
}

fn join(pair: &mut [u16], a: usize, b: usize) {
    pair[a] = b as u16;
    pair[b] = a as u16;
}

/// Subdivides edge `e` with a new vertex carrying a new leg.
pub fn add_leg(d: &Diagram, e: (usize, usize)) -> Diagram {
    let (mut pair, map) = widen(d, 1, 1);
    let leg = d.free_legs();
    let v = d.free_legs() + 1 + 3 * d.vertices();
    join(&mut pair, leg, v);
    join(&mut pair, map(e.0), v + 1);
    join(&mut pair, map(e.1), v + 2);
    Diagram::from_parts_unchecked(0, d.free_legs() + 1, d.vertices() + 1, pair)
}

/// Subdivides edges `e1` and `e2` (possibly the same edge twice) and joins
/// the two new vertices.
pub fn add_bridge(d: &Diagram, e1: (usize, usize), e2: (usize, usize)) -> Diagram {
    let (mut pair, map) = widen(d, 0, 2);
    let u = d.free_legs() + 3 * d.vertices();
    let w = u + 3;
    join(&mut pair, u, w);
    if e1 == e2 {
        join(&mut pair, map(e1.0), u + 1);
        join(&mut pair, u + 2, w + 1);
        join(&mut pair, w + 2, map(e1.1));
    } else {
        join(&mut pair, map(e1.0), u + 1);
        join(&mut pair, map(e1.1), u + 2);
        join(&mut pair, map(e2.0), w + 1);
        join(&mut pair, map(e2.1), w + 2);
    }
    Diagram::from_parts_unchecked(0, d.free_legs(), d.vertices() + 2, pair)
}

/// All diagrams one degree up obtained from `d` by a new leg on an edge or
/// a new edge between two edges.
pub fn grow_connected(d: &Diagram) -> Vec<Diagram> {
    let es = edges(d);
    let mut out = Vec::new();
    for &e in &es {
        out.push(add_leg(d, e));
    }
    for i in 0..es.len() {
        for j in i..es.len() {
            out.push(add_bridge(d, es[i], es[j]));
        }
    }
    out
}

/// Canonical representatives of all symmetrized diagrams of degree `n` with
/// at most `max_legs` legs, each component having a leg, dropping classes
/// that vanish by antisymmetry.
///
/// Diagrams are grown degree by degree from the empty diagram by adding a
/// strut, a leg on an edge, or an edge between two edges; vanishing classes
/// are kept while growing because their extensions need not vanish.
pub fn enumerate_symmetrized(n: usize, max_legs: usize) -> Vec<SymmetrizedDiagram> {
    let mut level: BTreeMap<Box<[u8]>, Diagram> = BTreeMap::new();
    level.insert(Box::new([]), Diagram::empty());
    let strut = SymmetrizedDiagram::strut();
    for _ in 0..n {
        let mut next: BTreeMap<Box<[u8]>, Diagram> = BTreeMap::new();
        for d in level.values() {
            let mut cands = grow_connected(d);
            if d.free_legs() + 2 <= max_legs {
                cands.push(d.disjoint_union(strut.diagram()));
            }
            for c in cands {
                if c.free_legs() > max_legs {
                    continue;
                }
                let key = canonical_symmetrized(&c).encoding;
                next.entry(key).or_insert(c);
            }
        }
        level = next;
    }
    level
        .into_values()
        .filter(|d| canonical_symmetrized(d).sign != 0)
        .map(|d| SymmetrizedDiagram::from_diagram(d).expect("grown diagrams are valid"))
        .collect()
}

/// Connected diagrams among [`enumerate_symmetrized`], distinct classes only.
pub fn connected_classes(n: usize, max_legs: usize) -> Vec<SymmetrizedDiagram> {
    let mut seen = BTreeSet::new();
    enumerate_symmetrized(n, max_legs)
        .into_iter()
        .filter(|d| d.is_connected())
        .filter(|d| seen.insert(canonical_symmetrized(d.diagram()).encoding))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vogel::wheel;

    #[test]
    fn strut_and_wheel_chi() {
        let mut r = Reducer::new();
        let (acc, count) = chi_sum(&SymmetrizedDiagram::strut(), &mut r);
        assert_eq!(count, 1);
        assert_eq!(acc.len(), 1);
        let (acc, count) = chi_sum(&wheel(2), &mut r);
        assert_eq!(count, 1);
        assert_eq!(acc.values().copied().collect::<Vec<_>>().len(), 2);
    }

    #[test]
    fn small_enumeration() {
        let d1 = enumerate_symmetrized(1, 10);
        assert_eq!(d1.len(), 1);
        assert_eq!(d1[0].legs(), 2);
        let d2 = connected_classes(2, 10);
        // only the two-leg wheel survives among connected degree-2 diagrams
        assert!(d2.iter().all(|d| d.legs() <= 2));
        assert!(d2.iter().any(|d| d.legs() == 2 && d.diagram().vertices() == 2));
    }
}
