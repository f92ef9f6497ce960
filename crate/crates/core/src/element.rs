//! Truncated graded elements in quotient coordinates, and truncated
//! exponential, logarithm and inverse for any graded product.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{is_zero_vec, qi, Matrix, Q};

/// A truncated element of the graded diagram space: `parts[n]` holds the
/// degree-`n` coordinates over that degree's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    framed: bool,
    parts: Vec<Vec<Q>>,
}

impl GradedElement {
    /// Zero element with the given per-degree dimensions (`dims.len() - 1`
    /// is the truncation degree).
    pub fn zero(framed: bool, dims: &[usize]) -> Self {
        GradedElement { framed, parts: dims.iter().map(|&d| vec![Q::zero(); d]).collect() }
    }

    pub fn unit(framed: bool, dims: &[usize]) -> Self {
        let mut e = Self::zero(framed, dims);
        e.parts[0][0] = Q::one();
        e
    }

    pub fn from_parts(framed: bool, parts: Vec<Vec<Q>>) -> Self {
        assert!(!parts.is_empty(), "an element has at least a degree-0 part");
        GradedElement { framed, parts }
    }

    pub fn framed(&self) -> bool {
        self.framed
    }

    pub fn max_degree(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn part(&self, n: usize) -> &[Q] {
        &self.parts[n]
    }

    pub fn part_mut(&mut self, n: usize) -> &mut Vec<Q> {
        &mut self.parts[n]
    }

    pub fn parts(&self) -> &[Vec<Q>] {
        &self.parts
    }

    pub fn set_part(&mut self, n: usize, v: Vec<Q>) {
        assert_eq!(v.len(), self.parts[n].len(), "dimension mismatch in degree {n}");
        self.parts[n] = v;
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        GradedElement { framed: self.framed, parts: self.parts[..=max_degree.min(self.max_degree())].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| is_zero_vec(p))
    }

    /// Only the degree-`n` part kept.
    pub fn homogeneous(&self, n: usize) -> Self {
        let mut e = Self::zero(self.framed, &self.dims());
        e.parts[n] = self.parts[n].clone();
        e
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.framed != other.framed {
            return Err(Error::FramingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.max_degree().min(other.max_degree());
        let parts = (0..=n)
            .map(|d| self.parts[d].iter().zip(&other.parts[d]).map(|(a, b)| a + b).collect())
            .collect();
        Ok(GradedElement { framed: self.framed, parts })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        GradedElement {
            framed: self.framed,
            parts: self.parts.iter().map(|p| p.iter().map(|x| x * c).collect()).collect(),
        }
    }

    /// Coefficient of the degree-0 basis element.
    pub fn constant(&self) -> Q {
        self.parts[0].first().cloned().unwrap_or_else(Q::zero)
    }
}

/// A graded product on truncated elements.
pub trait GradedProduct {
    fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement>;
}

impl<F> GradedProduct for F
where
    F: Fn(&GradedElement, &GradedElement) -> Result<GradedElement>,
{
    fn mul(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        self(a, b)
    }
}

/// `sum_k a^k / k!` truncated; `a` must have zero constant term.
pub fn exp_product(a: &GradedElement, product: &impl GradedProduct) -> Result<GradedElement> {
    if !a.constant().is_zero() {
        return Err(Error::DegreeZero { expected: "zero" });
    }
    let dims = a.dims();
    let mut result = GradedElement::unit(a.framed, &dims);
    let mut term = result.clone();
    for k in 1..=a.max_degree() {
        term = product.mul(&term, a)?.scale(&Q::new(1.into(), (k as i64).into()));
        result = result.add(&term)?;
    }
    Ok(result)
}

/// `sum_k (-1)^{k+1} u^k / k` with `u = a - 1`; `a` must have constant
/// term 1.
pub fn log_product(a: &GradedElement, product: &impl GradedProduct) -> Result<GradedElement> {
    if !a.constant().is_one() {
        return Err(Error::DegreeZero { expected: "one" });
    }
    let dims = a.dims();
    let u = a.sub(&GradedElement::unit(a.framed, &dims))?;
    let mut result = GradedElement::zero(a.framed, &dims);
    let mut power = u.clone();
    for k in 1..=a.max_degree() {
        let c = Q::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
        result = result.add(&power.scale(&c))?;
        power = product.mul(&power, &u)?;
    }
    Ok(result)
}

/// `sum_k (-u)^k` with `u = a - 1`; `a` must have constant term 1.
pub fn series_inverse(a: &GradedElement, product: &impl GradedProduct) -> Result<GradedElement> {
    if !a.constant().is_one() {
        return Err(Error::DegreeZero { expected: "one" });
    }
    let dims = a.dims();
    let one = GradedElement::unit(a.framed, &dims);
    let neg_u = one.sub(a)?;
    let mut result = one.clone();
    let mut power = one;
    for _ in 1..=a.max_degree() {
        power = product.mul(&power, &neg_u)?;
        result = result.add(&power)?;
    }
    Ok(result)
}

/// Truncated `x^k` under `product`.
pub fn power(x: &GradedElement, k: usize, product: &impl GradedProduct) -> Result<GradedElement> {
    let mut r = GradedElement::unit(x.framed, &x.dims());
    for _ in 0..k {
        r = product.mul(&r, x)?;
    }
    Ok(r)
}

/// An element of the truncated tensor square: one coordinate matrix per
/// bidegree `(a, b)` with `a + b <= max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    pub max_degree: usize,
    pub blocks: BTreeMap<(usize, usize), Matrix>,
}

impl TensorElement {
    pub fn zero(dims: &[usize]) -> Self {
        let n = dims.len() - 1;
        let mut blocks = BTreeMap::new();
        for a in 0..=n {
            for b in 0..=n - a {
                blocks.insert((a, b), Matrix::zeros(dims[a], dims[b]));
            }
        }
        TensorElement { max_degree: n, blocks }
    }

    /// `x ⊗ y` truncated.
    pub fn tensor(x: &GradedElement, y: &GradedElement) -> Self {
        let n = x.max_degree().min(y.max_degree());
        let mut t = Self::zero(&x.dims()[..=n]);
        for a in 0..=n {
            for b in 0..=n - a {
                let m = t.blocks.get_mut(&(a, b)).unwrap();
                for (i, xi) in x.part(a).iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.part(b).iter().enumerate() {
                        if !yj.is_zero() {
                            m.set(i, j, xi * yj);
                        }
                    }
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.max_degree.min(other.max_degree);
        let mut blocks = BTreeMap::new();
        for (k, m) in &self.blocks {
            if k.0 + k.1 <= n {
                let o = &other.blocks[k];
                let mut s = m.clone();
                for i in 0..m.rows {
                    for j in 0..m.cols {
                        s.set(i, j, m.get(i, j) + o.get(i, j));
                    }
                }
                blocks.insert(*k, s);
            }
        }
        TensorElement { max_degree: n, blocks }
    }

    pub fn block(&self, a: usize, b: usize) -> &Matrix {
        &self.blocks[&(a, b)]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub degree: usize,
    pub basis_label: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub framed: bool,
    pub max_degree: usize,
    pub terms: Vec<TermJson>,
}

/// `1 / k!` as a rational.
pub fn inv_factorial(k: usize) -> Q {
    let mut f = Q::one();
    for i in 1..=k {
        f *= qi(i as i64);
    }
    f.recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    /// Polynomial ring in one variable of degree 1: dims all 1.
    fn poly_mul(a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        let n = a.max_degree().min(b.max_degree());
        let mut c = GradedElement::zero(a.framed(), &vec![1; n + 1]);
        for i in 0..=n {
            for j in 0..=n - i {
                let v = &a.part(i)[0] * &b.part(j)[0] + &c.part(i + j)[0];
                c.part_mut(i + j)[0] = v;
            }
        }
        Ok(c)
    }

    #[test]
    fn exp_log_roundtrip_on_polynomials() {
        let a = GradedElement::from_parts(true, vec![vec![q(0, 1)], vec![q(2, 3)], vec![q(-1, 5)], vec![q(7, 2)]]);
        let e = exp_product(&a, &poly_mul).unwrap();
        assert_eq!(e.part(2)[0], q(2, 9) - q(1, 5));
        assert_eq!(log_product(&e, &poly_mul).unwrap(), a);
        let inv = series_inverse(&e, &poly_mul).unwrap();
        assert_eq!(poly_mul(&e, &inv).unwrap(), GradedElement::unit(true, &[1, 1, 1, 1]));
        assert!(exp_product(&e, &poly_mul).is_err());
    }
}
