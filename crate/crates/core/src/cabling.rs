//! Le's cabling formula and the Kontsevich integral of torus knots.
//!
//! For a framed knot invariant `x`, the `(m, p)` cable satisfies
//! `fZ(K^(m,p)) Ω = ψ^m(x Ω exp(p θ / 2m))`, all products connect sums.
//! Torus knots are cables of the zero-framed unknot, whose invariant is
//! the unit; the result carries framing `mp`, removed by `exp(-mp θ / 2)`.

use num_integer::Integer;

use crate::element::GradedElement;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Coprime torus knot parameters with `m > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    m: i64,
    p: i64,
}

impl TorusKnot {
    /// Normalizes `T(-m, -p) = T(m, p)`.
    pub fn new(m: i64, p: i64) -> Result<Self> {
        if m == 0 || p == 0 || m.gcd(&p) != 1 {
            return Err(Error::InvalidArgument(format!("torus knot parameters ({m}, {p}) must be coprime")));
        }
        Ok(if m < 0 { TorusKnot { m: -m, p: -p } } else { TorusKnot { m, p } })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn is_unknot(&self) -> bool {
        self.m == 1 || self.p.abs() == 1
    }
}

fn cable_formula(e: &Engine, m: i64, p: i64, x: &GradedElement) -> Result<GradedElement> {
    if !x.framed() {
        return Err(Error::FramingMismatch);
    }
    let n = x.max_degree();
    let omega = e.omega(n)?;
    let twist = e.exp_theta(&Q::new(p.into(), (2 * m).into()), n)?;
    let inner = e.connect_sum(&e.connect_sum(x, &omega)?, &twist)?;
    let lifted = e.adams(m, &inner)?;
    e.connect_sum(&e.inverse_connect(&omega)?, &lifted)
}

/// `Ω^{-1} ψ^m(x Ω exp_#((p/m) θ/2))` for framed `x`, `m >= 2`.
pub fn le_cable(e: &Engine, m: i64, p: i64, x: &GradedElement) -> Result<GradedElement> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("cabling needs m >= 2, got {m}")));
    }
    if m.gcd(&p) != 1 {
        return Err(Error::InvalidArgument(format!("cable parameters ({m}, {p}) must be coprime")));
    }
    cable_formula(e, m, p, x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusKnotIntegral {
    pub knot: TorusKnot,
    /// Framed invariant, framing `mp`.
    pub framed: GradedElement,
    /// Framed invariant with the framing removed, still in framed
    /// coordinates.
    pub deframed: GradedElement,
    /// The unframed invariant `Z`.
    pub z: GradedElement,
    /// `log_# Z`.
    pub log: GradedElement,
}

pub fn torus_knot_integral(e: &Engine, knot: TorusKnot, max_degree: usize) -> Result<TorusKnotIntegral> {
    let (m, p) = (knot.m, knot.p);
    let unit = e.unit(max_degree, true)?;
    let framed = cable_formula(e, m, p, &unit)?;
    let deframed = e.connect_sum(&framed, &e.exp_theta(&Q::new((-m * p).into(), 2.into()), max_degree)?)?;
    let z = e.project_unframed(&deframed)?;
    let log = e.log_connect(&z)?;
    Ok(TorusKnotIntegral { knot, framed, deframed, z, log })
}
