//! Exact rationals and the small dense linear algebra used on quotient
//! coordinates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Canonical `p/q` text form: `q > 0`, reduced, and integers printed bare.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Row-major dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.data[i * cols..(i + 1) * cols].clone_from_slice(r);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self * v`
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        s += a * x;
                    }
                }
                s
            })
            .collect()
    }

    /// `v^T * self`
    pub fn apply_left(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.rows, v.len());
        let mut out = vec![Q::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            axpy(&mut out, x, self.row(i));
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(col, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(col, j);
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }
}

/// Incremental row-echelon span used for greedy independence tests.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: Vec<(usize, Vec<Q>)>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the span; returns the residual.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (p, r) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, y) in v.iter_mut().zip(r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        v
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v))
    }
}

/// Solves `sum_i c_i * vectors[i] = target` exactly; `None` if `target` is
/// outside the span or the vectors are dependent.
pub fn solve_combination(vectors: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    let k = vectors.len();
    let n = target.len();
    // augmented system, columns = vectors
    let mut rows: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut r: Vec<Q> = vectors.iter().map(|v| v[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..k {
        let Some(p) = (r0..n).find(|&r| !rows[r][c].is_zero()) else {
            return None;
        };
        rows.swap(r0, p);
        let inv = rows[r0][c].recip();
        for x in rows[r0].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != r0 && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let (src, dst) = if r < r0 {
                    let (a, b) = rows.split_at_mut(r0);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = rows.split_at_mut(r);
                    (&a[r0], &mut b[0])
                };
                for (x, y) in dst.iter_mut().zip(src.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r0 += 1;
    }
    if rows[r0..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| rows[i][k].clone()).collect())
}

pub fn abs_max_bits(v: &[Q]) -> u64 {
    v.iter().map(|x| x.numer().abs().bits().max(x.denom().bits())).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format_q(&q(-6, 4)), "-3/2");
        assert_eq!(format_q(&q(4, -2)), "-2");
        assert_eq!(parse_q("10/-4").unwrap(), q(-5, 2));
        assert_eq!(parse_q(" 7 ").unwrap(), qi(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_rows(&[
            vec![qi(1), qi(0), qi(0)],
            vec![q(1, 3), qi(1), qi(0)],
            vec![qi(0), q(1, 2), qi(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        let singular = Matrix::from_rows(&[vec![qi(1), qi(2)], vec![qi(2), qi(4)]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn span_and_solve() {
        let mut s = Span::new();
        assert!(s.insert(&[qi(1), qi(1), qi(0)]));
        assert!(s.insert(&[qi(0), qi(1), qi(1)]));
        assert!(!s.insert(&[qi(1), qi(2), qi(1)]));
        assert_eq!(s.rank(), 2);
        let c = solve_combination(
            &[vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(1)]],
            &[qi(2), qi(5), qi(3)],
        )
        .unwrap();
        assert_eq!(c, vec![qi(2), qi(3)]);
        assert!(solve_combination(&[vec![qi(1), qi(0)]], &[qi(0), qi(1)]).is_none());
    }
}
