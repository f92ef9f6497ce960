use std::fmt::Write as _;
use std::path::Path;

use jacobi_core::cabling::{torus_knot_integral, TorusKnot};
use jacobi_core::cache::Cache;
use jacobi_core::diagram::ChordDiagram;
use jacobi_core::element::{ElementJson, TermJson};
use jacobi_core::rational::format_q;
use jacobi_core::series::{alexander_torus, SeriesJson};
use jacobi_core::{verify as suite, Engine, Error, Result};
use serde::Serialize;

use crate::Output;

fn output<T: Serialize>(value: &T, text: String, code: u8) -> Result<Output> {
    Ok(Output { json: serde_json::to_string_pretty(value)?, text, code })
}

fn terms_text(terms: &[TermJson]) -> String {
    let mut s = String::new();
    if terms.is_empty() {
        s.push_str("0\n");
    }
    for t in terms {
        writeln!(s, "[{}] {} {}", t.degree, t.coeff, t.basis_label).unwrap();
    }
    s
}

#[derive(Serialize)]
struct DimsJson {
    framed: bool,
    dims: Vec<usize>,
    /// First degree that could not be computed within the work limit.
    cutoff: Option<usize>,
}

pub fn dims(e: &Engine, max_degree: usize, framed: bool) -> Result<Output> {
    let mut dims = Vec::new();
    let mut cutoff = None;
    for n in 0..=max_degree {
        match e.basis(n, framed) {
            Ok(b) => dims.push(b.dim()),
            Err(Error::ResourceLimit(_)) => {
                cutoff = Some(n);
                break;
            }
            Err(err) => return Err(err),
        }
    }
    let mut text = String::new();
    for (n, d) in dims.iter().enumerate() {
        writeln!(text, "{n}\t{d}").unwrap();
    }
    if let Some(n) = cutoff {
        writeln!(text, "{n}\tcutoff: resource limit reached").unwrap();
    }
    let code = if cutoff.is_some() { 3 } else { 0 };
    output(&DimsJson { framed, dims, cutoff }, text, code)
}

#[derive(Serialize)]
struct TorusJson {
    m: i64,
    p: i64,
    log: bool,
    element: ElementJson,
}

pub fn torus(e: &Engine, m: i64, p: i64, max_degree: usize, log: bool, framed: bool) -> Result<Output> {
    let knot = TorusKnot::new(m, p)?;
    let k = torus_knot_integral(e, knot, max_degree)?;
    let x = match (framed, log) {
        (false, false) => k.z,
        (false, true) => k.log,
        (true, false) => k.framed,
        (true, true) => e.log_connect(&k.framed)?,
    };
    let element = e.to_json(&x)?;
    let text = terms_text(&element.terms);
    output(&TorusJson { m: knot.m(), p: knot.p(), log, element }, text, 0)
}

pub fn verify(e: &Engine, suites: &[String]) -> Result<Output> {
    let selected: Vec<&str> = suites.iter().map(String::as_str).collect();
    let report = suite::run(e, &selected)?;
    let code = if report.passed() { 0 } else { 1 };
    output(&report, report.to_string(), code)
}

#[derive(Serialize)]
struct SymmetrizedJson {
    coordinates: &'static str,
    max_degree: usize,
    terms: Vec<TermJson>,
}

pub fn omega(e: &Engine, max_degree: usize) -> Result<Output> {
    let s = e.to_symmetrized(&e.omega(max_degree)?)?;
    let mut terms = Vec::new();
    for (n, part) in s.iter().enumerate() {
        let b = e.symmetrized_basis(n)?;
        for (c, label) in part.iter().zip(b.labels()) {
            if !num_traits::Zero::is_zero(c) {
                terms.push(TermJson { degree: n, basis_label: label.clone(), coeff: format_q(c) });
            }
        }
    }
    let text = terms_text(&terms);
    output(&SymmetrizedJson { coordinates: "symmetrized", max_degree, terms }, text, 0)
}

#[derive(Serialize)]
struct ChordTerm {
    word: String,
    coeff: String,
}

#[derive(Serialize)]
struct BasisVector {
    label: String,
    chords: Vec<ChordTerm>,
}

#[derive(Serialize)]
struct BasisJson {
    degree: usize,
    framed: bool,
    dim: usize,
    basis: Vec<BasisVector>,
}

pub fn basis(e: &Engine, degree: usize, framed: bool) -> Result<Output> {
    let b = e.basis(degree, framed)?;
    let mut basis = Vec::new();
    let mut text = String::new();
    for (label, rep) in b.labels().iter().zip(b.reps()) {
        let chords = rep
            .iter()
            .map(|(k, c)| Ok(ChordTerm { word: ChordDiagram::new(k.to_vec())?.to_word(), coeff: format_q(c) }))
            .collect::<Result<Vec<_>>>()?;
        let sum: Vec<String> = chords.iter().map(|t| format!("{} {}", t.coeff, t.word)).collect();
        writeln!(text, "{label}\t{}", sum.join(" + ")).unwrap();
        basis.push(BasisVector { label: label.clone(), chords });
    }
    output(&BasisJson { degree, framed, dim: b.dim(), basis }, text, 0)
}

#[derive(Serialize)]
struct MatrixJson {
    degree: usize,
    rows: Vec<String>,
    columns: Vec<String>,
    matrix: Vec<Vec<String>>,
}

pub fn appendix_a(e: &Engine, degree: usize) -> Result<Output> {
    let c = e.appendix_matrix(degree)?;
    let matrix: Vec<Vec<String>> = c.matrix.to_rows().iter().map(|r| r.iter().map(format_q).collect()).collect();
    let mut text = String::new();
    writeln!(text, "\t{}", c.symmetrized_labels.join("\t")).unwrap();
    for (label, row) in c.round_labels.iter().zip(&matrix) {
        writeln!(text, "{label}\t{}", row.join("\t")).unwrap();
    }
    output(&MatrixJson { degree, rows: c.round_labels, columns: c.symmetrized_labels, matrix }, text, 0)
}

pub fn adams(e: &Engine, m: i64, input: &Path) -> Result<Output> {
    let j: ElementJson = serde_json::from_str(&std::fs::read_to_string(input)?)?;
    let x = e.from_json(&j)?;
    let out = e.to_json(&e.adams(m, &x)?)?;
    let text = terms_text(&out.terms);
    output(&out, text, 0)
}

#[derive(Serialize)]
struct AlexanderJson {
    m: i64,
    p: i64,
    series: SeriesJson,
}

pub fn alexander(m: i64, p: i64, order: usize) -> Result<Output> {
    let knot = TorusKnot::new(m, p)?;
    let s = alexander_torus(knot.m(), knot.p(), order)?;
    let text = format!("{s}\n");
    output(&AlexanderJson { m: knot.m(), p: knot.p(), series: s.to_json() }, text, 0)
}

#[derive(Serialize)]
struct CacheFileJson {
    degree: usize,
    framed: bool,
    bytes: u64,
    path: String,
}

#[derive(Serialize)]
struct CacheJson {
    dir: Option<String>,
    files: Vec<CacheFileJson>,
    removed: Option<usize>,
}

pub fn cache(cache: Option<&Cache>, clear: bool) -> Result<Output> {
    let Some(cache) = cache else {
        return output(&CacheJson { dir: None, files: Vec::new(), removed: None }, "no cache directory\n".into(), 0);
    };
    let removed = if clear { Some(cache.clear()?) } else { None };
    let files: Vec<CacheFileJson> = cache
        .entries()
        .into_iter()
        .map(|e| CacheFileJson { degree: e.degree, framed: e.framed, bytes: e.bytes, path: e.path.display().to_string() })
        .collect();
    let mut text = format!("{}\n", cache.dir().display());
    if let Some(n) = removed {
        writeln!(text, "removed {n} files").unwrap();
    }
    for f in &files {
        let kind = if f.framed { "framed" } else { "unframed" };
        writeln!(text, "{}\t{kind}\t{} bytes", f.degree, f.bytes).unwrap();
    }
    output(&CacheJson { dir: Some(cache.dir().display().to_string()), files, removed }, text, 0)
}
