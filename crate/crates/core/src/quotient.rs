//! Quotients of the chord-diagram span by STU-induced four-term relations
//! (and the one-term relation in the unframed theory).
//!
//! Columns are the canonical chord diagrams of one degree in lexicographic
//! order. Elimination walks the columns in ascending order modulo a large
//! prime, keeping every processed column expanded densely over the columns
//! that are still free. A column becomes dependent when some relation has it
//! as its largest column, so the surviving free columns are the
//! lexicographically smallest basis. The modular expansions are lifted to
//! rationals and every relation is then checked exactly, which certifies the
//! result: the modular rank never exceeds the rational rank, and an exact
//! expansion killing all relations bounds the rational rank from above.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::diagram::{ChordDiagram, ChordKey, Diagram};
use crate::enumerate::{chord_keys, for_each_matching};
use crate::error::{Error, Result};
use crate::modp::{crt, reconstruct, reconstruct_small, Field, PRIMES};
use crate::rational::{format_q, parse_q, Q};
use crate::stu::stu_split;

/// Largest degree attempted by default.
pub const DEFAULT_DEGREE_LIMIT: usize = 8;

type Row = Vec<(u32, i64)>;

/// The degree-`n` diagrams with a single internal vertex, as round diagrams:
/// a tripod with one leg at loop position 0 and `n - 2` chords.
pub fn tripod_diagrams(n: usize, mut f: impl FnMut(&Diagram)) {
    if n < 2 {
        return;
    }
    let l = 2 * n - 1;
    for b in 1..l {
        for c in b + 1..l {
            let rest: Vec<usize> = (1..l).filter(|&x| x != b && x != c).collect();
            for_each_matching(rest.len(), |m| {
                let mut pair = vec![0u16; l + 3];
                for (i, &j) in m.iter().enumerate() {
                    pair[rest[i]] = rest[j as usize] as u16;
                }
                for (k, leg) in [0, b, c].into_iter().enumerate() {
                    pair[leg] = (l + k) as u16;
                    pair[l + k] = leg as u16;
                }
                f(&Diagram::from_parts_unchecked(l, 0, 1, pair));
            });
        }
    }
}

/// The chord combination `T - U` obtained by resolving a one-vertex diagram
/// at loop leg `i`.
fn resolution(d: &Diagram, i: usize) -> [(ChordKey, i64); 2] {
    let (t, u) = stu_split(d, i);
    let key = |x: &Diagram| {
        let inv: Vec<u8> = x.pairing().iter().map(|&p| p as u8).collect();
        crate::diagram::canonical_chord_key(&inv)
    };
    [(key(&t), 1), (key(&u), -1)]
}

/// Relations among degree-`n` chord diagrams: differences of the three STU
/// resolutions of every one-vertex diagram, plus (unframed) every chord
/// diagram with an isolated chord.
pub fn relation_set(n: usize, framed: bool) -> Vec<Vec<(ChordKey, i64)>> {
    let mut out = Vec::new();
    tripod_diagrams(n, |d| {
        let legs: Vec<usize> = (0..d.loop_legs()).filter(|&i| d.partner(i) >= d.loop_legs()).collect();
        let rs: Vec<_> = legs.iter().map(|&i| resolution(d, i)).collect();
        for k in 1..3 {
            let mut row: HashMap<ChordKey, i64> = HashMap::new();
            for (key, c) in rs[0].iter() {
                *row.entry(key.clone()).or_default() += c;
            }
            for (key, c) in rs[k].iter() {
                *row.entry(key.clone()).or_default() -= c;
            }
            let mut row: Vec<_> = row.into_iter().filter(|(_, c)| *c != 0).collect();
            if !row.is_empty() {
                row.sort();
                out.push(row);
            }
        }
    });
    if !framed {
        for k in chord_keys(n) {
            if ChordDiagram::from_key(&k).has_isolated_chord() {
                out.push(vec![(k, 1)]);
            }
        }
    }
    out
}

fn normalize(mut row: Row) -> Option<Row> {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut merged: Row = Vec::with_capacity(row.len());
    for (c, a) in row {
        match merged.last_mut() {
            Some((lc, la)) if *lc == c => *la += a,
            _ => merged.push((c, a)),
        }
    }
    merged.retain(|&(_, a)| a != 0);
    let g = merged.iter().fold(0i64, |g, &(_, a)| g.gcd(&a));
    if g == 0 {
        return None;
    }
    let s = if merged.last().unwrap().1 < 0 { -g } else { g };
    for t in merged.iter_mut() {
        t.1 /= s;
    }
    Some(merged)
}

/// Relation rows over column indices, deduplicated and bucketed by their
/// largest column.
fn relation_rows(n: usize, framed: bool, index: &HashMap<ChordKey, u32>) -> Vec<Vec<Row>> {
    let mut seen: HashSet<Row> = HashSet::new();
    let mut buckets: Vec<Vec<Row>> = vec![Vec::new(); index.len()];
    let mut push = |row: Row, buckets: &mut Vec<Vec<Row>>| {
        if let Some(r) = normalize(row) {
            if seen.insert(r.clone()) {
                let top = r.last().unwrap().0 as usize;
                buckets[top].push(r);
            }
        }
    };
    tripod_diagrams(n, |d| {
        let l = d.loop_legs();
        let legs: Vec<usize> = (0..l).filter(|&i| d.partner(i) >= l).collect();
        let rs: Vec<Row> = legs
            .iter()
            .map(|&i| resolution(d, i).iter().map(|(k, c)| (index[k], *c)).collect())
            .collect();
        for k in 1..3 {
            let mut row = rs[0].clone();
            row.extend(rs[k].iter().map(|&(c, a)| (c, -a)));
            push(row, &mut buckets);
        }
    });
    if !framed {
        for (k, &i) in index.iter() {
            if ChordDiagram::from_key(k).has_isolated_chord() {
                push(vec![(i, 1)], &mut buckets);
            }
        }
    }
    buckets
}

/// Modular elimination result: free columns and, for every column, its
/// expansion over them.
struct ModularQuotient {
    columns: usize,
    free: Vec<u32>,
    /// Row-major `columns x free.len()`.
    expansion: Vec<u64>,
}

fn eliminate_mod(degree: usize, buckets: &[Vec<Row>], f: Field, work_limit: u64) -> Result<ModularQuotient> {
    let n = buckets.len();
    // expansions over slots; slot s holds tentative free column slot_col[s]
    let mut exp: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut slot_col: Vec<u32> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut work: u64 = 0;
    let mut dead = 0usize;
    let mut acc: Vec<u64> = Vec::new();

    let accumulate = |acc: &mut Vec<u64>, v: &[u64], a: u64| {
        if acc.len() < v.len() {
            acc.resize(v.len(), 0);
        }
        for (x, &y) in acc.iter_mut().zip(v) {
            if y != 0 {
                *x = f.add(*x, f.mul(a, y));
            }
        }
    };

    for c in 0..n {
        let rows = &buckets[c];
        if rows.is_empty() {
            let s = slot_col.len();
            slot_col.push(c as u32);
            alive.push(true);
            let mut v = vec![0u64; s + 1];
            v[s] = 1;
            exp.push(v);
            continue;
        }
        let mut defined = false;
        for row in rows {
            acc.clear();
            let mut own = 0u64;
            for &(col, a) in row {
                if col as usize == c && !defined {
                    own = f.from_i64(a);
                } else {
                    accumulate(&mut acc, &exp[col as usize], f.from_i64(a));
                }
            }
            work += (row.len() * acc.len()) as u64;
            if !defined {
                // e_c = -acc / own
                let k = f.neg(f.inv(own));
                let v: Vec<u64> = acc.iter().map(|&x| f.mul(k, x)).collect();
                exp.push(v);
                defined = true;
                continue;
            }
            // a relation among the free slots
            let Some(top) = acc.iter().rposition(|&x| x != 0) else {
                continue;
            };
            let k = f.neg(f.inv(acc[top]));
            let mut sub: Vec<u64> = acc.iter().map(|&x| f.mul(k, x)).collect();
            sub[top] = 0;
            alive[top] = false;
            for e in exp.iter_mut() {
                if top < e.len() && e[top] != 0 {
                    let a = e[top];
                    e[top] = 0;
                    accumulate(e, &sub, a);
                }
            }
            work += (exp.len() * sub.len()) as u64;
            dead += 1;
        }
        if dead > 64 && dead * 2 > slot_col.len() {
            // drop dead slots from every expansion
            let keep: Vec<usize> = (0..slot_col.len()).filter(|&s| alive[s]).collect();
            for e in exp.iter_mut() {
                *e = keep.iter().map(|&s| e.get(s).copied().unwrap_or(0)).collect();
            }
            slot_col = keep.iter().map(|&s| slot_col[s]).collect();
            alive = vec![true; keep.len()];
            dead = 0;
        }
        if work > work_limit {
            return Err(Error::ResourceLimit(format!("degree {degree} elimination exceeded {work_limit} steps")));
        }
    }
    let live: Vec<usize> = (0..slot_col.len()).filter(|&s| alive[s]).collect();
    let d = live.len();
    let mut expansion = vec![0u64; n * d];
    for (c, e) in exp.iter().enumerate() {
        for (j, &s) in live.iter().enumerate() {
            if s < e.len() {
                expansion[c * d + j] = e[s];
            }
        }
    }
    Ok(ModularQuotient { columns: n, free: live.iter().map(|&s| slot_col[s]).collect(), expansion })
}

/// Exact expansions, one row of `dim` entries per column, stored as `i64`
/// numerators over a per-column denominator when they fit.
#[derive(Clone, Debug)]
pub(crate) enum Expansions {
    Small { num: Vec<i64>, den: Vec<i64> },
    Big(Vec<Q>),
}

/// The quotient of degree-`n` chord diagrams.
#[derive(Clone, Debug)]
pub struct ChordQuotient {
    degree: usize,
    framed: bool,
    columns: Vec<ChordKey>,
    index: HashMap<ChordKey, u32>,
    free: Vec<u32>,
    expansions: Expansions,
}

impl ChordQuotient {
    /// Builds the quotient by modular elimination, lifting and verifying the
    /// expansions exactly. `work_limit` bounds the elimination effort.
    pub fn compute(n: usize, framed: bool, work_limit: u64) -> Result<Self> {
        let columns = chord_keys(n);
        let index: HashMap<ChordKey, u32> =
            columns.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
        let buckets = relation_rows(n, framed, &index);
        let mut residues: Vec<ModularQuotient> = Vec::new();
        for (attempt, &p) in PRIMES.iter().enumerate() {
            let mq = eliminate_mod(n, &buckets, Field::new(p), work_limit)?;
            if let Some(prev) = residues.first() {
                if prev.free != mq.free {
                    // an unlucky prime dropped rank; keep the larger free set
                    if mq.free.len() > prev.free.len() {
                        residues.clear();
                    } else {
                        continue;
                    }
                }
            }
            residues.push(mq);
            let lifted = if attempt == 0 { lift_small(&residues[0]) } else { None };
            let expansions = match lifted {
                Some(e) => e,
                None => match lift_crt(&residues) {
                    Some(e) => e,
                    None => continue,
                },
            };
            let q = ChordQuotient {
                degree: n,
                framed,
                columns: columns.clone(),
                index: index.clone(),
                free: residues[0].free.clone(),
                expansions,
            };
            if q.verify_rows(&buckets) {
                log::debug!("degree {n} framed={framed}: dim {} after {} prime(s)", q.dim(), residues.len());
                return Ok(q);
            }
        }
        Err(Error::Consistency(format!(
            "degree {n} quotient could not be lifted to exact rationals"
        )))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn framed(&self) -> bool {
        self.framed
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[ChordKey] {
        &self.columns
    }

    /// Free chord diagrams: the internal coordinate basis.
    pub fn free_keys(&self) -> Vec<ChordKey> {
        self.free.iter().map(|&c| self.columns[c as usize].clone()).collect()
    }

    pub fn column_of(&self, key: &ChordKey) -> Option<usize> {
        self.index.get(key).map(|&i| i as usize)
    }

    /// Internal coordinates of one column.
    pub fn expansion(&self, col: usize) -> Vec<Q> {
        let d = self.dim();
        match &self.expansions {
            Expansions::Small { num, den } => num[col * d..(col + 1) * d]
                .iter()
                .map(|&x| Q::new(x.into(), den[col].into()))
                .collect(),
            Expansions::Big(v) => v[col * d..(col + 1) * d].to_vec(),
        }
    }

    /// Internal coordinates of an integer chord combination.
    pub fn coordinates_int(&self, combo: &[(ChordKey, i64)]) -> Result<Vec<Q>> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (k, c) in combo {
            let col = self.column_of(k).ok_or_else(|| {
                Error::DegreeMismatch { expected: self.degree, actual: k.len() / 2 }
            })?;
            if *c == 0 {
                continue;
            }
            let e = self.expansion(col);
            for (o, x) in out.iter_mut().zip(e) {
                if !x.is_zero() {
                    *o += x * Q::from_integer((*c).into());
                }
            }
        }
        Ok(out)
    }

    /// Internal coordinates of a rational chord combination.
    pub fn coordinates(&self, combo: &[(ChordKey, Q)]) -> Result<Vec<Q>> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (k, c) in combo {
            let col = self.column_of(k).ok_or_else(|| {
                Error::DegreeMismatch { expected: self.degree, actual: k.len() / 2 }
            })?;
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.expansion(col)) {
                if !x.is_zero() {
                    *o += x * c;
                }
            }
        }
        Ok(out)
    }

    /// Exact check that every relation row maps to zero.
    fn verify_rows(&self, buckets: &[Vec<Row>]) -> bool {
        let d = self.dim();
        for row in buckets.iter().flatten() {
            let ok = match &self.expansions {
                Expansions::Small { num, den } => {
                    let l = row.iter().fold(1i128, |l, &(c, _)| l.lcm(&(den[c as usize] as i128)));
                    (0..d).all(|j| {
                        let fast = row.iter().try_fold(0i128, |acc, &(c, a)| {
                            let c = c as usize;
                            let t = (a as i128)
                                .checked_mul(num[c * d + j] as i128)?
                                .checked_mul(l / den[c] as i128)?;
                            acc.checked_add(t)
                        });
                        match fast {
                            Some(f) => f == 0,
                            None => row
                                .iter()
                                .map(|&(c, a)| {
                                    let c = c as usize;
                                    BigInt::from(a) * num[c * d + j] * BigInt::from(l / den[c] as i128)
                                })
                                .sum::<BigInt>()
                                .is_zero(),
                        }
                    })
                }
                Expansions::Big(v) => (0..d).all(|j| {
                    let mut s = Q::zero();
                    for &(c, a) in row {
                        s += &v[c as usize * d + j] * Q::from_integer(a.into());
                    }
                    s.is_zero()
                }),
            };
            if !ok {
                return false;
            }
        }
        // free columns expand to unit vectors
        self.free.iter().enumerate().all(|(j, &c)| {
            let e = self.expansion(c as usize);
            e.iter().enumerate().all(|(k, x)| *x == Q::from_integer((j == k).into()))
        })
    }
}

fn lift_small(mq: &ModularQuotient) -> Option<Expansions> {
    let d = mq.free.len();
    let p = PRIMES[0];
    let mut num = vec![0i64; mq.expansion.len()];
    let mut den = vec![1i64; mq.columns];
    for c in 0..den.len() {
        let mut parts = Vec::with_capacity(d);
        let mut l: i64 = 1;
        for j in 0..d {
            let (a, b) = reconstruct_small(mq.expansion[c * d + j], p)?;
            l = l.checked_mul(b / l.gcd(&b))?;
            parts.push((a, b));
        }
        for (j, (a, b)) in parts.into_iter().enumerate() {
            num[c * d + j] = a.checked_mul(l / b)?;
        }
        den[c] = l;
    }
    Some(Expansions::Small { num, den })
}

fn lift_crt(residues: &[ModularQuotient]) -> Option<Expansions> {
    let len = residues[0].expansion.len();
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let rs: Vec<u64> = residues.iter().map(|r| r.expansion[i]).collect();
        let (x, m) = crt(&rs);
        out.push(reconstruct(&x, &m)?);
    }
    Some(compress(out, residues[0].free.len(), residues[0].columns))
}

/// Version of the on-disk quotient format.
pub const CACHE_SCHEMA: u32 = 1;

/// On-disk form of a [`ChordQuotient`]. Expansions are sparse rows of
/// `(coordinate, "p/q")` pairs, one per column.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuotientFile {
    pub schema: u32,
    pub generator: String,
    pub degree: usize,
    pub framed: bool,
    pub column_count: usize,
    pub free: Vec<String>,
    pub expansions: Vec<Vec<(u32, String)>>,
}

/// Hash identifying the column set and relation generator for a degree and
/// framing; a cache file with a different hash is stale.
pub fn generator_hash(n: usize, framed: bool, columns: &[ChordKey]) -> String {
    let mut h = Sha256::new();
    h.update(format!("jacobi-quotient/{CACHE_SCHEMA}/stu-tripod/{n}/{framed}/").as_bytes());
    for c in columns {
        h.update([c.len() as u8]);
        h.update(c);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl ChordQuotient {
    pub fn to_file(&self) -> QuotientFile {
        let expansions = (0..self.columns.len())
            .map(|c| {
                self.expansion(c)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j as u32, format_q(x)))
                    .collect()
            })
            .collect();
        QuotientFile {
            schema: CACHE_SCHEMA,
            generator: generator_hash(self.degree, self.framed, &self.columns),
            degree: self.degree,
            framed: self.framed,
            column_count: self.columns.len(),
            free: self.free_keys().iter().map(|k| ChordDiagram::from_key(k).to_word()).collect(),
            expansions,
        }
    }

    /// Rebuilds a quotient from its file form, checking the schema, the
    /// generator hash and that free columns expand to unit vectors.
    pub fn from_file(f: &QuotientFile) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("quotient file for degree {}: {m}", f.degree));
        if f.schema != CACHE_SCHEMA {
            return Err(bad("schema version differs"));
        }
        let columns = chord_keys(f.degree);
        if f.column_count != columns.len() || f.expansions.len() != columns.len() {
            return Err(bad("column count differs"));
        }
        if f.generator != generator_hash(f.degree, f.framed, &columns) {
            return Err(bad("generator hash differs"));
        }
        let index: HashMap<ChordKey, u32> =
            columns.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect();
        let mut free = Vec::with_capacity(f.free.len());
        for w in &f.free {
            let key = ChordDiagram::from_word(w)?.canonical_key();
            free.push(*index.get(&key).ok_or_else(|| bad("unknown free column"))?);
        }
        let d = free.len();
        let mut dense = vec![Q::zero(); columns.len() * d];
        for (c, row) in f.expansions.iter().enumerate() {
            for (j, x) in row {
                let j = *j as usize;
                if j >= d {
                    return Err(bad("coordinate out of range"));
                }
                dense[c * d + j] = parse_q(x)?;
            }
        }
        for (j, &c) in free.iter().enumerate() {
            let row = &dense[c as usize * d..(c as usize + 1) * d];
            if row.iter().enumerate().any(|(i, x)| if i == j { !x.is_one() } else { !x.is_zero() }) {
                return Err(bad("free column does not expand to itself"));
            }
        }
        Ok(ChordQuotient {
            degree: f.degree,
            framed: f.framed,
            columns,
            index,
            free,
            expansions: compress(dense, d, f.column_count),
        })
    }
}

/// Stores dense rational rows as `i64` numerators over a per-row common
/// denominator when everything fits.
fn compress(dense: Vec<Q>, d: usize, rows: usize) -> Expansions {
    let mut num = Vec::with_capacity(dense.len());
    let mut den = Vec::with_capacity(rows);
    for r in 0..rows {
        let row = &dense[r * d..(r + 1) * d];
        let l: BigInt = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let Some(l64) = l.to_i64() else { return Expansions::Big(dense) };
        den.push(l64);
        for x in row {
            match (x.numer() * (&l / x.denom())).to_i64() {
                Some(v) => num.push(v),
                None => return Expansions::Big(dense),
            }
        }
    }
    Expansions::Small { num, den }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions() {
        let unframed: Vec<usize> =
            (0..6).map(|n| ChordQuotient::compute(n, false, u64::MAX).unwrap().dim()).collect();
        assert_eq!(unframed, vec![1, 0, 1, 1, 3, 4]);
        let framed: Vec<usize> =
            (0..6).map(|n| ChordQuotient::compute(n, true, u64::MAX).unwrap().dim()).collect();
        assert_eq!(framed, vec![1, 1, 2, 3, 6, 10]);
    }

    #[test]
    fn theta_dies_without_framing() {
        let q = ChordQuotient::compute(1, false, u64::MAX).unwrap();
        let th = ChordDiagram::theta().canonical_key();
        assert!(q.coordinates_int(&[(th, 1)]).unwrap().is_empty());
        assert_eq!(relation_set(1, false).len(), 1);
        assert!(relation_set(1, true).is_empty());
    }
}
