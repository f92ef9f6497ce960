//! The weight system `W_AC` and wheel coefficients.
//!
//! `W_AC` sends the wheel `w_2n` to `-2 h^2n` and every other connected
//! diagram (all of which have fewer legs than their degree) to zero, and
//! is extended multiplicatively. It is evaluated on `log_# x` written in
//! connected symmetrized generators.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::element::GradedElement;
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::rational::{qi, solve_combination, Q};
use crate::series::RationalSeries;

/// Coefficients of the connected generators of each degree whose averages,
/// taken in the unframed quotient, sum to the given primitive element.
/// The strut is left out since it dies without framing.
pub fn connected_coordinates(e: &Engine, primitive: &GradedElement) -> Result<Vec<Vec<Q>>> {
    if primitive.framed() {
        return Err(Error::FramingMismatch);
    }
    let mut out = vec![Vec::new()];
    for n in 1..=primitive.max_degree() {
        let gens = e.generators(n)?;
        let proj = e.projection_matrix(n)?;
        let mut rows = Vec::new();
        for g in gens.iter().filter(|g| g.name != "strut") {
            rows.push(proj.apply_left(&e.chi_terms(n, &g.terms)?));
        }
        let target = primitive.part(n);
        let c = solve_combination(&rows, target).ok_or_else(|| {
            Error::Consistency(format!("degree-{n} part is not a combination of connected generators"))
        })?;
        let mut full = Vec::with_capacity(gens.len());
        let mut it = c.into_iter();
        for g in gens.iter() {
            full.push(if g.name == "strut" { Q::zero() } else { it.next().expect("one per generator") });
        }
        out.push(full);
    }
    Ok(out)
}

fn log_form(e: &Engine, x: &GradedElement, is_log: bool) -> Result<GradedElement> {
    if is_log {
        return Ok(x.clone());
    }
    if !e.is_group_like(x)? {
        return Err(Error::NotGroupLike(x.max_degree()));
    }
    e.log_connect(x)
}

/// Coefficient of `w_2n` in `log_# x`, for each even degree `2n >= 2`.
pub fn wheel_coefficients(e: &Engine, x: &GradedElement, is_log: bool) -> Result<BTreeMap<usize, Q>> {
    let l = log_form(e, x, is_log)?;
    let coords = connected_coordinates(e, &l)?;
    let mut out = BTreeMap::new();
    for k in 1..=l.max_degree() {
        if let Some(g) = e.generators(k)?.iter().find(|g| !g.is_wheel() && g.name != "strut" && g.legs >= k) {
            return Err(Error::Consistency(format!("connected generator {} has {} legs in degree {k}", g.name, g.legs)));
        }
    }
    for k in (2..=l.max_degree()).step_by(2) {
        let gens = e.generators(k)?;
        let i = gens.iter().position(|g| g.is_wheel()).expect("even degrees have a wheel");
        out.insert(k, coords[k][i].clone());
    }
    Ok(out)
}

/// `W_AC(x)` as a series in `h` truncated at `x`'s degree.
pub fn w_ac(e: &Engine, x: &GradedElement, is_log: bool) -> Result<RationalSeries> {
    let n = x.max_degree();
    let mut w = vec![Q::zero(); n + 1];
    for (k, c) in wheel_coefficients(e, x, is_log)? {
        w[k] = c * qi(-2);
    }
    RationalSeries::from_coeffs(w, n).exp()
}

/// `W_AC` through the `⊔` product: each symmetrized monomial made only of
/// wheels maps to the product of `-2 h^2n`, anything with a strut or
/// another generator to zero. Takes a framed element.
pub fn w_ac_disjoint(e: &Engine, x: &GradedElement) -> Result<RationalSeries> {
    let s = e.to_symmetrized(x)?;
    let mut w = vec![Q::zero(); x.max_degree() + 1];
    for (n, part) in s.iter().enumerate() {
        let b = e.symmetrized_basis(n)?;
        for (c, m) in part.iter().zip(b.monomials()) {
            if c.is_zero() {
                continue;
            }
            let mut value = c.clone();
            for &(k, i) in m {
                if !e.generators(k)?[i].is_wheel() {
                    value = Q::zero();
                    break;
                }
                value *= qi(-2);
            }
            w[n] += value;
        }
    }
    Ok(RationalSeries::from_coeffs(w, x.max_degree()))
}
