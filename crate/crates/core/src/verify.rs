//! The acceptance suite: one check per criterion, each with its expected
//! and actual values and its runtime.

use std::fmt;
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::alexander::{w_ac, w_ac_disjoint, wheel_coefficients};
use crate::cabling::{torus_knot_integral, TorusKnot};
use crate::diagram::{ChordDiagram, RoundDiagram};
use crate::element::GradedElement;
use crate::engine::Engine;
use crate::enumerate::enumerate_chord_diagrams;
use crate::error::{Error, Result};
use crate::rational::{format_q, parse_q, q, qi, solve_combination, Span, Q};
use crate::series::{alexander_torus, BernoulliTable};
use crate::stu::stu_split;
use crate::symmetric::enumerate_symmetrized;

/// Seed for the randomized law suites.
pub const LAW_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ReportOnly => "REPORT",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(serialize_with = "millis")]
    pub runtime: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    /// No required check failed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {:>2} {} ({:.1}s)", c.status, c.criterion, c.name, c.runtime.as_secs_f64())?;
            writeln!(f, "     expected: {}", c.expected)?;
            writeln!(f, "     actual:   {}", c.actual)?;
        }
        Ok(())
    }
}

/// Suite names in criterion order.
pub const SUITES: [&str; 12] = [
    "dims",
    "framed-dims",
    "omega",
    "appendix-a",
    "trefoil",
    "torus-formula",
    "self-tests",
    "adams",
    "melvin-morton",
    "polynomiality",
    "laws",
    "report",
];

struct Outcome {
    ok: bool,
    expected: String,
    actual: String,
}

impl Outcome {
    fn new(ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Outcome { ok, expected: expected.into(), actual: actual.into() }
    }
}

/// Runs the named suites (all of them if `selected` is empty).
pub fn run(e: &Engine, selected: &[&str]) -> Result<VerificationReport> {
    for s in selected {
        if !SUITES.contains(s) {
            return Err(Error::InvalidArgument(format!("unknown suite {s:?}, expected one of {}", SUITES.join(", "))));
        }
    }
    let mut report = VerificationReport::default();
    for (i, &name) in SUITES.iter().enumerate() {
        if !selected.is_empty() && !selected.contains(&name) {
            continue;
        }
        let start = Instant::now();
        let result = match name {
            "dims" => check_dims(e),
            "framed-dims" => check_framed_dims(e),
            "omega" => check_omega(e),
            "appendix-a" => check_appendix_a(e),
            "trefoil" => check_trefoil(e),
            "torus-formula" => check_torus_formula(e),
            "self-tests" => check_self_tests(e),
            "adams" => check_adams(e),
            "melvin-morton" => check_melvin_morton(e),
            "polynomiality" => check_polynomiality(e),
            "laws" => check_laws(e, LAW_SEED),
            _ => check_report(e),
        };
        let runtime = start.elapsed();
        let report_only = name == "report";
        let (status, expected, actual) = match result {
            Ok(o) if report_only => (Status::ReportOnly, o.expected, o.actual),
            Ok(o) => (if o.ok { Status::Pass } else { Status::Fail }, o.expected, o.actual),
            Err(err) if report_only => (Status::ReportOnly, String::new(), format!("error: {err}")),
            Err(Error::ResourceLimit(msg)) => (Status::Fail, String::new(), format!("resource limit: {msg}")),
            Err(err) => (Status::Fail, String::new(), format!("error: {err}")),
        };
        report.checks.push(Check { criterion: i as u8 + 1, name: name.to_string(), status, expected, actual, runtime });
    }
    Ok(report)
}

fn list<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn qlist(v: &[Q]) -> String {
    v.iter().map(format_q).collect::<Vec<_>>().join(", ")
}

fn check_dims(e: &Engine) -> Result<Outcome> {
    let table = [1usize, 0, 1, 1, 3, 4, 9];
    let dims = e.dims(6, false)?;
    let mut actual = list(&dims);
    // degree 7 is a stretch goal and does not decide the check
    match e.dims(7, false) {
        Ok(d7) => actual.push_str(&format!("; n=7: {} (table: 14)", d7[7])),
        Err(err) => actual.push_str(&format!("; n=7: {err}")),
    }
    Ok(Outcome::new(dims == table, format!("{} for n=0..6", list(&table)), actual))
}

fn check_framed_dims(e: &Engine) -> Result<Outcome> {
    let u = e.dims(6, false)?;
    let f = e.dims(6, true)?;
    let mut want = vec![1usize];
    for n in 1..=6 {
        want.push(u[n] + want[n - 1]);
    }
    Ok(Outcome::new(f == want, list(&want), list(&f)))
}

fn sym_coeff(e: &Engine, s: &[Vec<Q>], n: usize, label: &str) -> Result<Q> {
    let b = e.symmetrized_basis(n)?;
    let i = b
        .labels()
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| Error::Consistency(format!("no symmetrized label {label} in degree {n}")))?;
    Ok(s[n][i].clone())
}

fn check_omega(e: &Engine) -> Result<Outcome> {
    let s = e.to_symmetrized(&e.omega(4)?)?;
    let got = [sym_coeff(e, &s, 2, "w2B")?, sym_coeff(e, &s, 4, "w4B")?, sym_coeff(e, &s, 4, "w2B^2")?];
    let want = [q(1, 48), q(-1, 5760), q(1, 4608)];
    Ok(Outcome::new(got == want, format!("w2B {}", qlist(&want)), format!("w2B {}", qlist(&got))))
}

/// Reference change-of-basis matrices: rows are round labels, columns
/// symmetrized labels.
const CHANGE_OF_BASIS: [&[&[&str]]; 6] = [
    &[&["1"]],
    &[&["1"]],
    &[&["1", "0"], &["1/6", "1"]],
    &[&["1", "0", "0"], &["1/3", "1", "0"], &["0", "1/2", "1"]],
    &[
        &["1", "0", "0", "0", "0", "0"],
        &["1/3", "1", "0", "0", "0", "0"],
        &["2/3", "0", "1", "0", "0", "0"],
        &["1/3", "0", "0", "1", "0", "0"],
        &["0", "0", "1/6", "2/3", "1", "0"],
        &["0", "-1/15", "1/12", "0", "1", "1"],
    ],
    &[
        &["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
        &["0", "1", "0", "0", "0", "0", "0", "0", "0", "0"],
        &["1/3", "0", "1", "0", "0", "0", "0", "0", "0", "0"],
        &["2/3", "0", "0", "1", "0", "0", "0", "0", "0", "0"],
        &["1/3", "0", "0", "0", "1", "0", "0", "0", "0", "0"],
        &["2/15", "-1/30", "2/3", "0", "1/3", "1", "0", "0", "0", "0"],
        &["0", "0", "0", "2/3", "2/3", "0", "1", "0", "0", "0"],
        &["0", "0", "0", "1/6", "2/3", "0", "0", "1", "0", "0"],
        &["0", "0", "-2/15", "1/6", "0", "0", "1/2", "1", "1", "0"],
        &["0", "0", "0", "0", "0", "-1/3", "5/12", "0", "5/3", "1"],
    ],
];

/// The reference matrix of degree `n` as rationals.
pub fn appendix_a_expected(n: usize) -> Option<Vec<Vec<Q>>> {
    CHANGE_OF_BASIS
        .get(n)
        .map(|rows| rows.iter().map(|r| r.iter().map(|s| parse_q(s).expect("valid table entry")).collect()).collect())
}

fn check_appendix_a(e: &Engine) -> Result<Outcome> {
    let mut deviations = Vec::new();
    let mut entries = 0;
    for n in 0..=5 {
        let want = appendix_a_expected(n).expect("degrees 0..5 are tabulated");
        let got = e.appendix_matrix(n)?;
        if got.matrix.rows != want.len() || got.matrix.cols != want.len() {
            deviations.push(format!("degree {n}: shape {}x{}", got.matrix.rows, got.matrix.cols));
            continue;
        }
        for (i, row) in want.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                entries += 1;
                let g = got.matrix.get(i, j);
                if g != w {
                    deviations.push(format!(
                        "degree {n} [{} -> {}]: {} instead of {}",
                        got.round_labels[i],
                        got.symmetrized_labels[j],
                        format_q(g),
                        format_q(w)
                    ));
                }
            }
        }
    }
    let actual = if deviations.is_empty() {
        format!("all {entries} entries match")
    } else {
        deviations.join("; ")
    };
    Ok(Outcome::new(deviations.is_empty(), "degrees 0-5 entry-for-entry", actual))
}

fn label_coeff(e: &Engine, x: &GradedElement, n: usize, label: &str) -> Result<Q> {
    let b = e.basis(n, x.framed())?;
    let i = b
        .label_index(label)
        .ok_or_else(|| Error::Consistency(format!("no basis label {label} in degree {n}")))?;
    Ok(x.part(n)[i].clone())
}

fn check_trefoil(e: &Engine) -> Result<Outcome> {
    let z = torus_knot_integral(e, TorusKnot::new(2, -3)?, 4)?.z;
    let labels = [(2, "w2"), (3, "tw2"), (4, "t2w2"), (4, "w4"), (4, "w2w2")];
    let got = labels.iter().map(|&(n, l)| label_coeff(e, &z, n, l)).collect::<Result<Vec<_>>>()?;
    let want = [q(-1, 2), q(-1, 2), q(-31, 48), q(5, 24), q(1, 8)];
    Ok(Outcome::new(got == want, qlist(&want), qlist(&got)))
}

/// The degree-five closed forms for `log_# Z(T(m, p))`, by label.
pub fn torus_log_formula(m: i64, p: i64) -> Vec<(usize, &'static str, Q)> {
    let (m, p) = (Q::from_integer(m.into()), Q::from_integer(p.into()));
    let one = Q::one();
    let (m2, p2) = (&m * &m, &p * &p);
    let k = (&m2 - &one) * (&p2 - &one);
    let mp = &m * &p;
    let sq = (&m2 + &one) * (&p2 + &one);
    vec![
        (2, "w2", -&k / qi(48)),
        (3, "tw2", &k * &mp / qi(288)),
        (4, "t2w2", -&k * (qi(9) * &m2 * &p2 - &m2 - &p2 - &one) / qi(11520)),
        (4, "w4", &k * &sq / qi(5760)),
        (5, "t3w2", &k * &mp * (qi(71) * &m2 * &p2 - qi(19) * &m2 - qi(19) * &p2 - qi(9)) / qi(345600)),
        (5, "x3w2", &k * &mp * &sq / qi(345600)),
        (5, "tw4", -&k * &mp * (qi(2) * &m2 * &p2 + &m2 + &p2) / qi(17280)),
    ]
}

fn check_torus_formula(e: &Engine) -> Result<Outcome> {
    let mut ok = true;
    let mut actual = Vec::new();
    for (m, p) in [(2, 3), (2, 5), (3, 4), (2, -3)] {
        let start = Instant::now();
        let log = torus_knot_integral(e, TorusKnot::new(m, p)?, 5)?.log;
        let formula = torus_log_formula(m, p);
        let mut bad = Vec::new();
        for n in 0..=5 {
            for (i, label) in e.basis(n, false)?.labels().iter().enumerate() {
                let want = formula
                    .iter()
                    .find(|(d, l, _)| *d == n && l == label)
                    .map(|t| t.2.clone())
                    .unwrap_or_else(Q::zero);
                if log.part(n)[i] != want {
                    bad.push(format!("{label} {} vs {}", format_q(&log.part(n)[i]), format_q(&want)));
                }
            }
        }
        let secs = start.elapsed().as_secs_f64();
        ok &= bad.is_empty() && secs <= 120.0;
        actual.push(if bad.is_empty() {
            format!("({m},{p}) match in {secs:.2}s")
        } else {
            format!("({m},{p}) {}", bad.join(", "))
        });
    }
    Ok(Outcome::new(
        ok,
        "seven closed-form coefficients, all other log coordinates zero, <= 120s per knot",
        actual.join("; "),
    ))
}

fn check_self_tests(e: &Engine) -> Result<Outcome> {
    let z = |m: i64, p: i64| -> Result<GradedElement> { Ok(torus_knot_integral(e, TorusKnot::new(m, p)?, 5)?.z) };
    let z23 = z(2, 3)?;
    let symmetric = z23 == z(3, 2)?;
    let unknots = (2..=5).map(|m| Ok(z(m, 1)? == e.unit(5, false)?)).collect::<Result<Vec<bool>>>()?;
    let group_like = e.is_group_like(&z23)?;
    let mirror = z(2, -3)?;
    let parity = (0..=5).all(|n| {
        let sign = if n % 2 == 0 { Q::one() } else { -Q::one() };
        z23.part(n).iter().zip(mirror.part(n)).all(|(a, b)| a * &sign == *b)
    });
    let ok = symmetric && unknots.iter().all(|&b| b) && group_like && parity;
    Ok(Outcome::new(
        ok,
        "T(2,3)=T(3,2), T(m,1)=1 for m=2..5, group-like, mirror parity",
        format!(
            "T(2,3)=T(3,2): {symmetric}, unknots: {}, group-like: {group_like}, mirror parity: {parity}",
            list(&unknots)
        ),
    ))
}

fn check_adams(e: &Engine) -> Result<Outcome> {
    let chord = |w: &str| -> Result<GradedElement> { e.element_of_chord(&ChordDiagram::from_word(w)?, true, 2) };
    let x = chord("ABAB")?;
    let want = x.scale(&qi(33)).add(&chord("AABB")?.scale(&qi(48)))?;
    let psi3 = e.adams(3, &x)? == want;
    let direct3 = e.adams_direct(3, &ChordDiagram::from_word("ABAB")?)? == want;
    let mut composition = 0;
    let mut composition_bad = Vec::new();
    let mut direct = 0;
    let mut direct_bad = Vec::new();
    for n in 0..=3 {
        for d in enumerate_chord_diagrams(n) {
            let el = e.element_of_chord(&d, true, n)?;
            for (a, b) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
                composition += 1;
                if e.adams(a, &e.adams(b, &el)?)? != e.adams(a * b, &el)? {
                    composition_bad.push(format!("{} ({a},{b})", d.to_word()));
                }
            }
            for m in [2usize, 3] {
                direct += 1;
                if e.adams_direct(m, &d)? != e.adams(m as i64, &el)? {
                    direct_bad.push(format!("{} m={m}", d.to_word()));
                }
            }
        }
    }
    let ok = psi3 && direct3 && composition_bad.is_empty() && direct_bad.is_empty();
    Ok(Outcome::new(
        ok,
        "psi^3(X) = 33X + 48I^2 (both routes), psi^a psi^b = psi^ab, lifting agrees, degree <= 3",
        format!(
            "psi^3(X): {psi3}, by lifting: {direct3}, composition {}/{composition}{}, lifting {}/{direct}{}",
            composition - composition_bad.len(),
            if composition_bad.is_empty() { String::new() } else { format!(" failing {}", composition_bad.join(" ")) },
            direct - direct_bad.len(),
            if direct_bad.is_empty() { String::new() } else { format!(" failing {}", direct_bad.join(" ")) },
        ),
    ))
}

fn check_melvin_morton(e: &Engine) -> Result<Outcome> {
    let order = e.degree_limit().min(8);
    let b = BernoulliTable::new(order);
    let mut ok = order == 8;
    let mut actual = Vec::new();
    for (m, p) in [(2, 3), (2, 5), (3, 4), (2, -3), (3, 5)] {
        let k = torus_knot_integral(e, TorusKnot::new(m, p)?, order)?;
        let w = w_ac(e, &k.z, false)?;
        let a = alexander_torus(m, p, order)?;
        let by_union = w_ac_disjoint(e, &k.deframed)?;
        let wheels = wheel_coefficients(e, &k.z, false)?;
        let mut wheel_ok = true;
        for (&n2, c) in &wheels {
            let n2 = n2 as u32;
            let want = -Q::from_integer(((m.pow(n2) - 1) * (p.pow(n2) - 1)).into()) * b.b(n2 as usize);
            wheel_ok &= *c == want;
        }
        let series_ok = w == a && by_union == a;
        ok &= series_ok && wheel_ok;
        actual.push(format!(
            "({m},{p}) W_AC=A: {}, by disjoint union: {}, wheels {}: {wheel_ok}",
            w == a,
            by_union == a,
            wheels.iter().map(|(n, c)| format!("w{n}={}", format_q(c))).collect::<Vec<_>>().join(" ")
        ));
    }
    Ok(Outcome::new(
        ok,
        "W_AC(Z) = A(e^h) to h^8 and w_2n coefficient -(m^2n-1)(p^2n-1)b_2n for five knots",
        format!("order h^{order}; {}", actual.join("; ")),
    ))
}

/// Symmetric monomials `m^i p^j + m^j p^i` with `i <= j <= n`.
fn symmetric_monomials(n: u32) -> Vec<(u32, u32)> {
    (0..=n).flat_map(|j| (0..=j).map(move |i| (i, j))).collect()
}

fn eval_monomial((i, j): (u32, u32), m: i64, p: i64) -> Q {
    let v = if i == j {
        m.pow(i) * p.pow(j)
    } else {
        m.pow(i) * p.pow(j) + m.pow(j) * p.pow(i)
    };
    Q::from_integer(v.into())
}

/// Coprime torus-knot parameters used for the polynomiality fit.
pub fn coprime_grid() -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for m in 2..=7i64 {
        for p in -7..=7i64 {
            if p != 0 && m.gcd(&p) == 1 {
                out.push((m, p));
            }
        }
    }
    out
}

fn check_polynomiality(e: &Engine) -> Result<Outcome> {
    let grid = coprime_grid();
    let zs = grid
        .iter()
        .map(|&(m, p)| Ok(torus_knot_integral(e, TorusKnot::new(m, p)?, 4)?.z))
        .collect::<Result<Vec<_>>>()?;
    // every third knot is held out
    let (fit, held): (Vec<usize>, Vec<usize>) = (0..grid.len()).partition(|k| k % 3 != 2);
    let mut ok = true;
    let mut failures = Vec::new();
    let mut fitted = 0;
    for n in 1..=4 {
        let monos = symmetric_monomials(n as u32);
        let cols: Vec<Vec<Q>> = monos
            .iter()
            .map(|&mo| fit.iter().map(|&k| eval_monomial(mo, grid[k].0, grid[k].1)).collect())
            .collect();
        let mut span = Span::new();
        let independent = cols.iter().all(|c| span.insert(c));
        for (i, label) in e.basis(n, false)?.labels().iter().enumerate() {
            fitted += 1;
            let values: Vec<Q> = fit.iter().map(|&k| zs[k].part(n)[i].clone()).collect();
            let Some(coeffs) = solve_combination(&cols, &values).filter(|_| independent) else {
                ok = false;
                failures.push(format!("{label}: no symmetric fit"));
                continue;
            };
            for &k in &held {
                let (m, p) = grid[k];
                let predicted: Q = monos.iter().zip(&coeffs).map(|(&mo, c)| c * eval_monomial(mo, m, p)).sum();
                if predicted != zs[k].part(n)[i] {
                    ok = false;
                    failures.push(format!("{label} at ({m},{p})"));
                }
            }
        }
    }
    Ok(Outcome::new(
        ok,
        format!("{fitted} coefficients fit on {} knots, exact on {} held out", fit.len(), held.len()),
        if failures.is_empty() {
            format!("all {fitted} coefficients exact on held-out knots")
        } else {
            failures.join("; ")
        },
    ))
}

/// Connected round diagrams of degree `1..=max` with internal vertices,
/// from randomly attached connected symmetrized diagrams.
fn random_round(rng: &mut ChaCha8Rng, pool: &[Vec<crate::diagram::SymmetrizedDiagram>], max: usize) -> RoundDiagram {
    let n = rng.gen_range(2..=max);
    let s = pool[n].choose(rng).expect("nonempty pool");
    let mut order: Vec<usize> = (0..s.legs()).collect();
    order.shuffle(rng);
    s.attach(&order)
}

fn random_element(e: &Engine, rng: &mut ChaCha8Rng, max: usize, framed: bool) -> Result<GradedElement> {
    let mut x = e.zero(max, framed)?;
    for n in 0..=max {
        for c in x.part_mut(n).iter_mut() {
            *c = qi(rng.gen_range(-2..=2));
        }
    }
    Ok(x)
}

/// The law suites at degree `<= 4`; cases are drawn from `seed`.
fn check_laws(e: &Engine, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const MAX: usize = 4;
    const CASES: usize = 12;
    let pool: Vec<Vec<_>> = (0..=MAX)
        .map(|n| {
            if n < 2 {
                Vec::new()
            } else {
                enumerate_symmetrized(n, n).into_iter().filter(|s| s.is_connected() && s.diagram().vertices() > 0).collect()
            }
        })
        .collect();
    let mut results: Vec<(&str, usize, usize)> = Vec::new();

    let mut pass = 0;
    for i in 0..CASES {
        let framed = i % 2 == 0;
        let x = random_element(e, &mut rng, MAX, framed)?;
        let y = random_element(e, &mut rng, MAX, framed)?;
        let lhs = e.coproduct(&e.connect_sum(&x, &y)?)?;
        let rhs = e.tensor_connect_sum(framed, &e.coproduct(&x)?, &e.coproduct(&y)?)?;
        pass += (lhs == rhs) as usize;
    }
    results.push(("bialgebra", pass, CASES));

    let mut pass = 0;
    for _ in 0..CASES {
        let a = random_round(&mut rng, &pool, 2);
        let b = random_round(&mut rng, &pool, 2);
        let n = a.degree() + b.degree();
        let reference = e.element_of_round(&a.connect_sum(&b), true, n)?;
        let mut same = true;
        for r in 0..a.legs() {
            for s in 0..b.legs() {
                same &= e.element_of_round(&a.rotate(r).connect_sum(&b.rotate(s)), true, n)? == reference;
            }
        }
        pass += same as usize;
    }
    results.push(("cut choice", pass, CASES));

    let mut pass = 0;
    for _ in 0..CASES {
        let d = random_round(&mut rng, &pool, MAX);
        let n = d.degree();
        let x = e.element_of_round(&d, true, n)?;
        let v = rng.gen_range(0..d.diagram().vertices());
        let flipped = RoundDiagram::new(d.legs(), d.diagram().vertices(), d.diagram().flip_vertex(v).pairing().to_vec())?;
        let as_ok = e.element_of_round(&flipped, true, n)? == x.scale(&qi(-1));
        let legs: Vec<usize> = (0..d.legs())
            .filter(|&i| d.diagram().partner(i) >= d.legs())
            .collect();
        let i = *legs.choose(&mut rng).expect("a vertex touches the loop");
        let (t, u) = stu_split(d.diagram(), i);
        let round = |g: &crate::diagram::Diagram| RoundDiagram::new(g.loop_legs(), g.vertices(), g.pairing().to_vec());
        let stu = e.element_of_round(&round(&t)?, true, n)?.sub(&e.element_of_round(&round(&u)?, true, n)?)? == x;
        pass += (as_ok && stu) as usize;
    }
    results.push(("AS and STU", pass, CASES));

    let connected: Vec<(usize, Vec<Q>)> = (1..=MAX)
        .map(|n| Ok(e.generators(n)?.iter().map(|g| Ok((n, e.chi_terms(n, &g.terms)?))).collect::<Result<Vec<_>>>()?))
        .collect::<Result<Vec<_>>>()?
        .concat();
    let mut pass = 0;
    for _ in 0..CASES {
        let mut a = e.zero(MAX, true)?;
        for (n, v) in &connected {
            let c = q(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            for (t, x) in a.part_mut(*n).iter_mut().zip(v) {
                *t += &c * x;
            }
        }
        let g = e.exp_connect(&a)?;
        let ok = e.is_primitive(&a)?
            && e.is_group_like(&g)?
            && e.log_connect(&g)? == a
            && e.inverse_connect(&g)? == e.exp_connect(&a.scale(&qi(-1)))?;
        pass += ok as usize;
    }
    results.push(("exp/log", pass, CASES));

    let mut pass = 0;
    for _ in 0..CASES {
        let x = random_element(e, &mut rng, MAX, true)?;
        let s = e.to_symmetrized(&x)?;
        let mut ok = e.from_symmetrized(&s)? == x;
        for (n, part) in s.iter().enumerate() {
            let b = e.symmetrized_basis(n)?;
            ok &= b.round_to_symmetrized().apply_left(&b.chi_matrix().apply_left(part)) == *part;
        }
        pass += ok as usize;
    }
    results.push(("chi round trip", pass, CASES));

    let ok = results.iter().all(|&(_, p, t)| p == t);
    let total: usize = results.iter().map(|r| r.2).sum();
    Ok(Outcome::new(
        ok,
        format!("{total}/{total} randomized cases, seed {seed:#x}"),
        results.iter().map(|(name, p, t)| format!("{name} {p}/{t}")).collect::<Vec<_>>().join(", "),
    ))
}

fn check_report(e: &Engine) -> Result<Outcome> {
    let mut reversal = Vec::new();
    for n in 0..=e.degree_limit() {
        let m = e.reversal_matrix(n, true)?;
        let identity = (0..m.rows).all(|i| (0..m.cols).all(|j| *m.get(i, j) == if i == j { Q::one() } else { Q::zero() }));
        reversal.push(format!("{n}:{}", if identity { "identity" } else { "not identity" }));
    }
    let n = 5;
    let lhs = e.exp_theta(&q(1, 2), n)?;
    let half_strut = e.theta(n)?.scale(&q(1, 2));
    let rhs = e.disjoint_union(&e.omega(n)?, &e.exp_disjoint(&half_strut)?)?;
    let mut theta = Vec::new();
    for d in 0..=n {
        theta.push(if lhs.part(d) == rhs.part(d) { format!("{d}:equal") } else { format!("{d}:differs") });
    }
    Ok(Outcome::new(
        true,
        "reversal per degree (framed); exp(theta/2) = Omega u exp_u(strut/2) per degree",
        format!("reversal {}; exp(theta/2) {}", reversal.join(" "), theta.join(" ")),
    ))
}
