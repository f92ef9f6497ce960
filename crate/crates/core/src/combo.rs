//! Rational linear combinations of canonical chord diagrams.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::diagram::{ChordDiagram, ChordKey};
use crate::rational::Q;

pub type Combo = BTreeMap<ChordKey, Q>;

pub fn single(key: ChordKey) -> Combo {
    let mut c = Combo::new();
    c.insert(key, Q::one());
    c
}

pub fn from_int(terms: impl IntoIterator<Item = (ChordKey, i64)>) -> Combo {
    let mut c = Combo::new();
    for (k, a) in terms {
        add_term(&mut c, k, &Q::from_integer(a.into()));
    }
    c
}

pub fn add_term(c: &mut Combo, k: ChordKey, a: &Q) {
    if a.is_zero() {
        return;
    }
    let e = c.entry(k).or_insert_with(Q::zero);
    *e += a;
    if e.is_zero() {
        // keep the map free of zero coefficients
        let k = c.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
        if let Some(k) = k {
            c.remove(&k);
        }
    }
}

pub fn add_scaled(acc: &mut Combo, src: &Combo, a: &Q) {
    for (k, v) in src {
        add_term(acc, k.clone(), &(v * a));
    }
}

/// Linear combination `sum a_i c_i`.
pub fn linear(parts: &[(&Combo, Q)]) -> Combo {
    let mut acc = Combo::new();
    for (c, a) in parts {
        add_scaled(&mut acc, c, a);
    }
    acc
}

/// Connect sum of combinations: cut each chord diagram before point 0 and
/// concatenate.
pub fn concat(a: &Combo, b: &Combo) -> Combo {
    let mut out = Combo::new();
    for (ka, va) in a {
        let da = ChordDiagram::from_key(ka);
        for (kb, vb) in b {
            let d = da.concat(&ChordDiagram::from_key(kb));
            add_term(&mut out, d.canonical_key(), &(va * vb));
        }
    }
    out
}

/// Mirror of the Wilson loop orientation, applied termwise.
pub fn reverse(a: &Combo) -> Combo {
    let mut out = Combo::new();
    for (k, v) in a {
        add_term(&mut out, ChordDiagram::from_key(k).reverse().canonical_key(), v);
    }
    out
}

pub fn theta_power(k: usize) -> Combo {
    single((0..k).fold(ChordDiagram::empty(), |d, _| d.concat(&ChordDiagram::theta())).canonical_key())
}

pub fn degree(c: &Combo) -> Option<usize> {
    c.keys().next().map(|k| k.len() / 2)
}
