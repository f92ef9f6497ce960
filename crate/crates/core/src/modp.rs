//! Arithmetic modulo word-sized primes, with rational reconstruction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Q;

/// Primes below `2^61` used for modular elimination, largest first.
pub const PRIMES: [u64; 4] = [
    2_305_843_009_213_693_951, // 2^61 - 1
    2_305_843_009_213_693_921,
    2_305_843_009_213_693_907,
    2_305_843_009_213_693_723,
];

#[derive(Clone, Copy, Debug)]
pub struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        let r = (a as i128).rem_euclid(self.p as i128);
        r as u64
    }

    /// Image of a rational, `None` if the denominator vanishes.
    pub fn from_q(self, q: &Q) -> Option<u64> {
        let p = BigInt::from(self.p);
        let n = q.numer().mod_floor(&p);
        let d = q.denom().mod_floor(&p);
        if d.is_zero() {
            return None;
        }
        let n: u64 = n.try_into().expect("reduced below p");
        let d: u64 = d.try_into().expect("reduced below p");
        Some(self.mul(n, self.inv(d)))
    }
}

/// Smallest rational `n/d` with `|n|, d <= sqrt(m/2)` congruent to `a`
/// modulo `m`.
pub fn reconstruct(a: &BigInt, m: &BigInt) -> Option<Q> {
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if !(&r1 - a * &t1).mod_floor(m).is_zero() {
        return None;
    }
    Some(Q::new(r1, t1))
}

/// Word-sized variant of [`reconstruct`] for a single prime: returns
/// `(numerator, denominator)` with a positive denominator.
pub fn reconstruct_small(a: u64, p: u64) -> Option<(i64, i64)> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound || r1.gcd(&t1.abs()) != 1 {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some((n as i64, d as i64))
}

/// Chinese remaindering of residues `rs[i]` modulo `PRIMES[i]`.
pub fn crt(rs: &[u64]) -> (BigInt, BigInt) {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (i, &r) in rs.iter().enumerate() {
        let p = BigInt::from(PRIMES[i]);
        // x + m * k = r (mod p)
        let f = Field::new(PRIMES[i]);
        let xm: u64 = x.mod_floor(&p).try_into().unwrap();
        let mm: u64 = m.mod_floor(&p).try_into().unwrap();
        let k = f.mul(f.sub(r, xm), f.inv(mm));
        x += &m * BigInt::from(k);
        m *= p;
    }
    (x, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn field_ops() {
        let f = Field::new(PRIMES[0]);
        let a = f.from_i64(-3);
        assert_eq!(f.add(a, 3), 0);
        assert_eq!(f.mul(a, f.inv(a)), 1);
    }

    #[test]
    fn reconstruction_roundtrip() {
        let f = Field::new(PRIMES[0]);
        let m = BigInt::from(PRIMES[0]);
        for x in [q(-31, 48), q(1, 4608), q(5, 24), q(0, 1), q(-123456, 7)] {
            let r = BigInt::from(f.from_q(&x).unwrap());
            assert_eq!(reconstruct(&r, &m), Some(x));
        }
    }

    #[test]
    fn small_reconstruction() {
        let f = Field::new(PRIMES[0]);
        for (n, d) in [(-31i64, 48i64), (1, 4608), (0, 1), (7, 1)] {
            let a = f.mul(f.from_i64(n), f.inv(f.from_i64(d)));
            assert_eq!(reconstruct_small(a, f.p), Some((n, d)));
        }
    }

    #[test]
    fn crt_combines() {
        let x = q(-987654321987654321, 1234567);
        let rs: Vec<u64> = PRIMES[..2].iter().map(|&p| Field::new(p).from_q(&x).unwrap()).collect();
        let (a, m) = crt(&rs);
        assert_eq!(reconstruct(&a, &m), Some(x));
    }
}
