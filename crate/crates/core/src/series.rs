//! Truncated power series in one variable with exact rational coefficients.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, qi, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    variable: String,
    /// Coefficients of `x^0 ..= x^order`.
    coeffs: Vec<Q>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries { variable: "h".into(), coeffs: vec![Q::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Q::one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<Q>, order: usize) -> Self {
        coeffs.resize(order + 1, Q::zero());
        RationalSeries { variable: "h".into(), coeffs }
    }

    pub fn with_variable(mut self, name: &str) -> Self {
        self.variable = name.into();
        self
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let c = (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Self::from_coeffs(c, n)
    }

    pub fn scale(&self, a: &Q) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * a).collect(), self.order())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut c = vec![Q::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                c[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Self::from_coeffs(c, n)
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("series with zero constant term is not invertible".into()));
        }
        let inv0 = self.coeffs[0].recip();
        let mut c = vec![Q::zero(); n + 1];
        c[0] = inv0.clone();
        for k in 1..=n {
            let mut s = Q::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &c[k - j];
            }
            c[k] = -s * &inv0;
        }
        Ok(Self::from_coeffs(c, n))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let c = (1..=n).map(|k| &self.coeffs[k] * qi(k as i64)).collect();
        Self::from_coeffs(c, n.saturating_sub(1))
    }

    /// Antiderivative with zero constant term, keeping the order of `self`
    /// plus one.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut c = vec![Q::zero()];
        c.extend((0..=n).map(|k| &self.coeffs[k] / qi(k as i64 + 1)));
        Self::from_coeffs(c, n + 1)
    }

    /// Logarithm of a series with constant term 1, via `(f'/f)` integrated.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidArgument("log needs constant term 1".into()));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let q = self.derivative().div(&self.truncate(n - 1))?;
        Ok(q.integral())
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument("exp needs zero constant term".into()));
        }
        let n = self.order();
        // e' = f' e, solved coefficient by coefficient
        let mut e = vec![Q::zero(); n + 1];
        e[0] = Q::one();
        for k in 1..=n {
            let mut s = Q::zero();
            for j in 1..=k {
                s += qi(j as i64) * &self.coeffs[j] * &e[k - j];
            }
            e[k] = s / qi(k as i64);
        }
        Ok(Self::from_coeffs(e, n))
    }

    /// `sinh(a x / 2) / (a x / 2)`.
    pub fn sinh_ratio(a: &Q, order: usize) -> Self {
        let mut c = vec![Q::zero(); order + 1];
        let half = a / qi(2);
        let mut fact = Q::one();
        let mut pow = Q::one();
        for k in 0..=order / 2 {
            if k > 0 {
                fact *= qi((2 * k) as i64) * qi((2 * k + 1) as i64);
                pow *= &half * &half;
            }
            c[2 * k] = &pow / &fact;
        }
        Self::from_coeffs(c, order)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            variable: self.variable.clone(),
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_q).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<Self> {
        let c = j.coeffs.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(c, j.order).with_variable(&j.variable))
    }
}

impl std::fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", format_q(c))?,
                1 => write!(f, "({}){}", format_q(c), self.variable)?,
                _ => write!(f, "({}){}^{}", format_q(c), self.variable, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.variable, self.order() + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub variable: String,
    pub order: usize,
    pub coeffs: Vec<String>,
}

/// Modified Bernoulli numbers `b_{2n}`, defined by
/// `sum b_{2n} x^{2n} = (1/2) ln(sinh(x/2) / (x/2))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Q>,
}

impl BernoulliTable {
    /// Table through `x^max_order`.
    pub fn new(max_order: usize) -> Self {
        let s = RationalSeries::sinh_ratio(&Q::one(), max_order);
        let l = s.log().expect("constant term is one").scale(&Q::new(1.into(), 2.into()));
        BernoulliTable { values: l.coeffs }
    }

    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    /// `b_k`; zero for odd `k`.
    pub fn get(&self, k: usize) -> Option<&Q> {
        self.values.get(k)
    }

    pub fn b(&self, k: usize) -> Q {
        self.values.get(k).cloned().expect("order within table")
    }
}

/// The `(m, p)` torus knot's Alexander polynomial at `t = e^h`:
/// `S(mp) S(1) / (S(m) S(p))` with `S(a) = sinh(a h / 2) / (a h / 2)`.
pub fn alexander_torus(m: i64, p: i64, order: usize) -> Result<RationalSeries> {
    use num_integer::Integer;
    if m == 0 || p == 0 || m.gcd(&p) != 1 {
        return Err(Error::InvalidArgument(format!("torus knot parameters ({m}, {p}) must be coprime")));
    }
    let s = |a: i64| RationalSeries::sinh_ratio(&qi(a), order);
    let num = s(m * p).mul(&s(1));
    let den = s(m).mul(&s(p));
    num.div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn bernoulli_values() {
        let b = BernoulliTable::new(6);
        assert_eq!(b.b(2), q(1, 48));
        assert_eq!(b.b(4), q(-1, 5760));
        assert_eq!(b.b(6), q(1, 362880));
        assert_eq!(b.b(3), q(0, 1));
    }

    #[test]
    fn exp_log_inverse() {
        let f = RationalSeries::from_coeffs(vec![q(0, 1), q(1, 2), q(-3, 7), q(2, 5)], 3);
        let e = f.exp().unwrap();
        assert_eq!(e.log().unwrap(), f);
        assert_eq!(e.mul(&e.inverse().unwrap()), RationalSeries::one(3));
    }

    #[test]
    fn trefoil_alexander() {
        // t - 1 + 1/t at t = e^h is 1 + h^2 + h^4/12 + ...
        let a = alexander_torus(2, 3, 4).unwrap();
        assert_eq!(a.coeffs(), &[q(1, 1), q(0, 1), q(1, 1), q(0, 1), q(1, 12)]);
        assert_eq!(alexander_torus(5, 1, 6).unwrap(), RationalSeries::one(6));
        assert!(alexander_torus(2, 4, 4).is_err());
    }
}
