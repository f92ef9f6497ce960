//! Enumeration of chord diagrams and symmetrized diagrams.

use std::collections::BTreeSet;

use crate::diagram::{canonical_chord_key, ChordDiagram, ChordKey};

/// Calls `f` on every perfect matching of `0..2n` (as an involution).
pub fn for_each_matching(points: usize, mut f: impl FnMut(&[u8])) {
    fn rec(inv: &mut Vec<u8>, f: &mut impl FnMut(&[u8])) {
        let Some(i) = inv.iter().position(|&p| p == u8::MAX) else {
            f(inv);
            return;
        };
        for j in i + 1..inv.len() {
            if inv[j] == u8::MAX {
                inv[i] = j as u8;
                inv[j] = i as u8;
                rec(inv, f);
                inv[i] = u8::MAX;
                inv[j] = u8::MAX;
            }
        }
    }
    assert!(points % 2 == 0);
    let mut inv = vec![u8::MAX; points];
    rec(&mut inv, &mut f);
}

/// Canonical keys of all degree-`n` chord diagrams up to rotation, sorted.
pub fn chord_keys(n: usize) -> Vec<ChordKey> {
    let mut set = BTreeSet::new();
    for_each_matching(2 * n, |inv| {
        set.insert(canonical_chord_key(inv));
    });
    set.into_iter().collect()
}

/// One representative per rotation class of `n`-chord diagrams.
pub fn enumerate_chord_diagrams(n: usize) -> Vec<ChordDiagram> {
    chord_keys(n).iter().map(|k| ChordDiagram::from_key(k)).collect()
}
