//! The named bases of degrees up to five: wheels, their triangle
//! insertions, `x3w2`, and products of these; framed bases add powers of
//! `θ` in front.

use crate::combo::{self, Combo};
use crate::diagram::RoundDiagram;
use crate::engine::Engine;
use crate::rational::qi;
use crate::vogel::{round_wheel, t_power_round};

pub const MAX_PINNED_DEGREE: usize = 5;

fn t_wheel(e: &Engine, t: usize, k: usize) -> Combo {
    e.reduce(&t_power_round(t, &round_wheel(k)))
}

/// `x3·w2`, realized through the five-wheel relation
/// `w5 = (3/2) tw4 - (1/6) t³w2 - (1/12) x3w2`.
pub(crate) fn x3w2(e: &Engine) -> Combo {
    let tw4 = t_wheel(e, 1, 4);
    let t3w2 = t_wheel(e, 3, 2);
    let w5 = e.reduce(&round_wheel(5));
    combo::linear(&[(&tw4, qi(18)), (&t3w2, qi(-2)), (&w5, qi(-12))])
}

/// Labels and chord representatives of the unframed named basis.
pub(crate) fn unframed_reps(e: &Engine, n: usize) -> Option<Vec<(String, Combo)>> {
    let named = |pairs: Vec<(&str, Combo)>| Some(pairs.into_iter().map(|(l, c)| (l.to_string(), c)).collect());
    match n {
        0 => named(vec![("1", e.reduce(&RoundDiagram::unit()))]),
        1 => named(vec![]),
        2 => named(vec![("w2", t_wheel(e, 0, 2))]),
        3 => named(vec![("tw2", t_wheel(e, 1, 2))]),
        4 => {
            let w2 = t_wheel(e, 0, 2);
            named(vec![("t2w2", t_wheel(e, 2, 2)), ("w4", t_wheel(e, 0, 4)), ("w2w2", combo::concat(&w2, &w2))])
        }
        5 => {
            let w2 = t_wheel(e, 0, 2);
            let tw2 = t_wheel(e, 1, 2);
            named(vec![
                ("t3w2", t_wheel(e, 3, 2)),
                ("x3w2", x3w2(e)),
                ("tw4", t_wheel(e, 1, 4)),
                ("tw2w2", combo::concat(&tw2, &w2)),
            ])
        }
        _ => None,
    }
}

/// `θ^k` times the unframed named basis of degree `n - k`, for `k = 0..=n`.
pub(crate) fn framed_reps(e: &Engine, n: usize) -> Option<Vec<(String, Combo)>> {
    if n > MAX_PINNED_DEGREE {
        return None;
    }
    let mut out = Vec::new();
    for k in 0..=n {
        let theta = combo::theta_power(k);
        for (label, rep) in unframed_reps(e, n - k)? {
            let name = match (k, label.as_str()) {
                (0, _) => label,
                (1, "1") => "I".to_string(),
                (_, "1") => format!("I^{k}"),
                (1, _) => format!("I {label}"),
                _ => format!("I^{k} {label}"),
            };
            out.push((name, combo::concat(&theta, &rep)));
        }
    }
    Some(out)
}
