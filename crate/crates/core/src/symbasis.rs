//! Symmetrized coordinates.
//!
//! The framed diagram space is a polynomial algebra under `⊔` on connected
//! symmetrized diagrams, so a basis of degree `n` is given by `⊔`-monomials
//! in connected generators. Generators up to degree five are the named
//! ones (strut, wheels and their triangle insertions, `x3w2B`); above that
//! they are chosen greedily. [`SymmetrizedBasis`] holds the averaging
//! matrix `χ` from monomials to round coordinates and its inverse.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::canon::canonical_symmetrized;
use crate::diagram::{ChordDiagram, SymmetrizedDiagram};
use crate::element::{exp_product, GradedElement};
use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::rational::{solve_combination, Matrix, Span, Q};
use crate::series::BernoulliTable;
use crate::symmetric::{for_each_attachment, connected_classes, grow_connected};
use crate::vogel::{t_power_symmetrized, wheel};

/// A connected, leg-homogeneous generator: a rational combination of
/// connected symmetrized diagrams with the same number of legs.
#[derive(Clone, Debug)]
pub struct Generator {
    pub degree: usize,
    pub name: String,
    pub legs: usize,
    pub terms: Vec<(SymmetrizedDiagram, Q)>,
}

impl Generator {
    fn single(name: impl Into<String>, d: SymmetrizedDiagram) -> Self {
        Generator { degree: d.degree(), name: name.into(), legs: d.legs(), terms: vec![(d, Q::one())] }
    }

    pub fn is_wheel(&self) -> bool {
        self.name == format!("w{}B", self.degree)
    }

    /// Inserts the triangle at vertex 0 of every term.
    fn t_insert(&self) -> Option<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(d, c)| (d.diagram().vertices() > 0).then(|| (t_power_symmetrized(1, d), c.clone())))
            .collect::<Option<Vec<_>>>()?;
        Some(Generator { degree: self.degree + 1, name: t_name(&self.name), legs: self.legs, terms })
    }
}

/// `w2B -> tw2B -> t2w2B -> t3w2B`, `x3w2B -> tx3w2B`.
fn t_name(name: &str) -> String {
    let Some(rest) = name.strip_prefix('t') else { return format!("t{name}") };
    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
    let tail = &rest[digits.len()..];
    let k: usize = if digits.is_empty() { 1 } else { digits.parse().expect("digits") };
    format!("t{}{tail}", k + 1)
}

/// Factors as `(degree, index)`, sorted by descending degree then index.
pub type Monomial = Vec<(usize, usize)>;

#[derive(Debug)]
pub struct SymmetrizedBasis {
    degree: usize,
    labels: Vec<String>,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    legs: Vec<usize>,
    chi: Matrix,
    to_sym: Matrix,
}

impl SymmetrizedBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Leg count of each label.
    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    /// Row `j`: framed round coordinates of `χ` of label `j`.
    pub fn chi_matrix(&self) -> &Matrix {
        &self.chi
    }

    /// Row `i`: round label `i` in symmetrized coordinates.
    pub fn round_to_symmetrized(&self) -> &Matrix {
        &self.to_sym
    }
}

/// A change-of-basis matrix with its row and column labels: row `i`
/// expresses round label `i` over the symmetrized labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    pub degree: usize,
    pub round_labels: Vec<String>,
    pub symmetrized_labels: Vec<String>,
    pub matrix: Matrix,
}

#[derive(Default)]
pub(crate) struct SymState {
    generators: Mutex<BTreeMap<usize, Arc<Vec<Generator>>>>,
    bases: Mutex<HashMap<usize, Arc<SymmetrizedBasis>>>,
    chi_memo: Mutex<HashMap<Box<[u8]>, Arc<Vec<Q>>>>,
    omega: Mutex<Option<GradedElement>>,
}

/// Numbers `p_k` of degree-`k` generators of a polynomial algebra with
/// Hilbert series `sum dims[n] x^n = prod (1 - x^k)^(-p_k)`.
pub fn generator_counts(dims: &[usize]) -> Result<Vec<usize>> {
    let n = dims.len().saturating_sub(1);
    let mut series = vec![0i128; n + 1];
    series[0] = 1;
    let mut p = vec![0usize; n + 1];
    for k in 1..=n {
        let c = dims[k] as i128 - series[k];
        if c < 0 {
            return Err(Error::Consistency(format!("dimensions {dims:?} are not those of a polynomial algebra")));
        }
        p[k] = c as usize;
        for _ in 0..p[k] {
            for i in k..=n {
                series[i] += series[i - k];
            }
        }
    }
    Ok(p)
}

fn monomial_label(m: &Monomial, gens: &dyn Fn(usize, usize) -> String) -> String {
    if m.is_empty() {
        return "1".into();
    }
    let mut groups: Vec<(String, usize)> = Vec::new();
    for &(k, i) in m {
        let name = gens(k, i);
        match groups.last_mut() {
            Some((g, c)) if *g == name => *c += 1,
            _ => groups.push((name, 1)),
        }
    }
    // struts lead, as in the usual notation
    groups.sort_by_key(|(g, _)| g != "strut");
    groups
        .into_iter()
        .map(|(g, c)| if c == 1 { g } else { format!("{g}^{c}") })
        .collect::<Vec<_>>()
        .join("⊔")
}

/// All monomials of total degree `n` in generators with the given counts
/// per degree.
fn monomials(n: usize, counts: &[usize]) -> Vec<Monomial> {
    let ids: Vec<(usize, usize)> =
        (1..=n).rev().flat_map(|k| (0..counts.get(k).copied().unwrap_or(0)).map(move |i| (k, i))).collect();
    let mut out = Vec::new();
    fn rec(ids: &[(usize, usize)], start: usize, left: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..ids.len() {
            let (k, _) = ids[s];
            if k <= left {
                cur.push(ids[s]);
                rec(ids, s, left - k, cur, out);
                cur.pop();
            }
        }
    }
    rec(&ids, 0, n, &mut Vec::new(), &mut out);
    let struts = |m: &Monomial| m.iter().filter(|f| f.0 == 1).count();
    out.sort_by(|a, b| {
        let key = |m: &Monomial| {
            let rest: Vec<(Reverse<usize>, usize)> = m.iter().filter(|f| f.0 > 1).map(|&(k, i)| (Reverse(k), i)).collect();
            (struts(m), rest.len(), rest)
        };
        key(a).cmp(&key(b))
    });
    out
}

impl Engine {
    /// `χ` of one symmetrized diagram in framed label coordinates.
    pub fn chi_diagram(&self, d: &SymmetrizedDiagram) -> Result<Vec<Q>> {
        let n = d.degree();
        let basis = self.basis(n, true)?;
        let cf = canonical_symmetrized(d.diagram());
        if cf.sign == 0 {
            return Ok(vec![Q::zero(); basis.dim()]);
        }
        let signed = |v: &[Q]| -> Vec<Q> { v.iter().map(|x| if cf.sign > 0 { x.clone() } else { -x }).collect() };
        if let Some(c) = self.sym.chi_memo.lock().unwrap().get(&cf.encoding) {
            return Ok(signed(c));
        }
        let mut count = 0u64;
        let sum = self.round_coordinates_sum(n, |f| count = for_each_attachment(d, f))?;
        let scale = Q::new(1.into(), (count as i64).into());
        let avg: Vec<Q> = basis.from_internal(sum).into_iter().map(|x| x * &scale).collect();
        // stored for the canonical representative
        self.sym.chi_memo.lock().unwrap().insert(cf.encoding, Arc::new(signed(&avg)));
        Ok(avg)
    }

    /// `χ` of a combination of degree-`n` symmetrized diagrams.
    pub fn chi_terms(&self, n: usize, terms: &[(SymmetrizedDiagram, Q)]) -> Result<Vec<Q>> {
        let mut acc = vec![Q::zero(); self.basis(n, true)?.dim()];
        for (d, c) in terms {
            for (a, x) in acc.iter_mut().zip(self.chi_diagram(d)?) {
                *a += x * c;
            }
        }
        Ok(acc)
    }

    /// `χ(s)` as a framed element.
    pub fn chi(&self, s: &SymmetrizedDiagram, max_degree: usize) -> Result<GradedElement> {
        let mut x = self.zero(max_degree, true)?;
        if s.degree() <= max_degree {
            *x.part_mut(s.degree()) = self.chi_diagram(s)?;
        }
        Ok(x)
    }

    fn monomial_terms(&self, m: &Monomial) -> Result<Vec<(SymmetrizedDiagram, Q)>> {
        let mut cur = vec![(SymmetrizedDiagram::empty(), Q::one())];
        for &(k, i) in m {
            let gens = self.generators(k)?;
            let g = &gens[i];
            cur = cur
                .iter()
                .flat_map(|(d, c)| g.terms.iter().map(move |(t, a)| (d.disjoint_union(t), c * a)))
                .collect();
        }
        Ok(cur)
    }

    fn chi_row(&self, m: &Monomial, n: usize) -> Result<Vec<Q>> {
        let terms = self.monomial_terms(m)?;
        self.chi_terms(n, &terms)
    }

    /// Connected generators of degree `k`.
    pub fn generators(&self, k: usize) -> Result<Arc<Vec<Generator>>> {
        self.check_degree(k)?;
        if let Some(g) = self.sym.generators.lock().unwrap().get(&k) {
            return Ok(g.clone());
        }
        let w = |k: usize| Generator::single(format!("w{k}B"), wheel(k));
        let tw = |t: usize, k: usize| {
            let name = match t {
                1 => format!("tw{k}B"),
                _ => format!("t{t}w{k}B"),
            };
            Generator::single(name, t_power_symmetrized(t, &wheel(k)))
        };
        let gens = match k {
            0 => Vec::new(),
            1 => vec![Generator::single("strut", SymmetrizedDiagram::strut())],
            2 => vec![w(2)],
            3 => vec![tw(1, 2)],
            4 => vec![tw(2, 2), w(4)],
            5 => vec![tw(3, 2), self.x3w2_generator()?, tw(1, 4)],
            _ => self.greedy_generators(k)?,
        };
        for g in &gens {
            if !g.is_wheel() && g.legs >= g.degree && g.degree > 1 {
                return Err(Error::Consistency(format!(
                    "connected generator {} has {} legs in degree {}",
                    g.name, g.legs, g.degree
                )));
            }
        }
        let g = Arc::new(gens);
        Ok(self.sym.generators.lock().unwrap().entry(k).or_insert(g).clone())
    }

    /// The two-leg combination whose average is the round `x3w2`; its
    /// existence shows the round element has no part with more legs.
    fn x3w2_generator(&self) -> Result<Generator> {
        let basis = self.basis(5, true)?;
        let target = basis.coordinates(&crate::pinned::x3w2(self))?;
        let cands = connected_classes(5, 2);
        let mut span = Span::new();
        let mut chosen = Vec::new();
        let mut rows = Vec::new();
        for c in cands {
            let row = self.chi_diagram(&c)?;
            if span.insert(&row) {
                rows.push(row);
                chosen.push(c);
            }
        }
        let coeffs = solve_combination(&rows, &target).ok_or_else(|| Error::DegenerateBasis {
            degree: 5,
            detail: "x3w2 is not an average of two-leg connected diagrams".into(),
        })?;
        let terms: Vec<(SymmetrizedDiagram, Q)> =
            chosen.into_iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).collect();
        Ok(Generator { degree: 5, name: "x3w2B".into(), legs: 2, terms })
    }

    /// Degree `k >= 6`: the wheel (for even `k`), triangle insertions into
    /// lower generators, then diagrams grown from lower generators, each
    /// kept if its average is independent of everything chosen so far.
    fn greedy_generators(&self, k: usize) -> Result<Vec<Generator>> {
        let dims = self.dims(k, true)?;
        let want = generator_counts(&dims)?[k];
        let mut span = Span::new();
        for m in monomials(k, &self.lower_counts(k)?) {
            if m.len() > 1 {
                span.insert(&self.chi_row(&m, k)?);
            }
        }
        let lower = self.generators(k - 1)?;
        let mut gens: Vec<Generator> = Vec::new();
        let mut consider = |g: Generator, gens: &mut Vec<Generator>| -> Result<()> {
            if gens.len() < want && span.insert(&self.chi_terms(k, &g.terms)?) {
                gens.push(g);
            }
            Ok(())
        };
        if k % 2 == 0 {
            consider(Generator::single(format!("w{k}B"), wheel(k)), &mut gens)?;
        }
        for g in lower.iter() {
            if let Some(t) = g.t_insert() {
                consider(t, &mut gens)?;
            }
        }
        // grown diagrams: one step from degree k - 1, then two from k - 2
        let mut seeds: Vec<&SymmetrizedDiagram> = lower.iter().flat_map(|g| g.terms.iter().map(|t| &t.0)).collect();
        seeds.sort_by_key(|d| Reverse(d.legs()));
        let mut grown: Vec<crate::diagram::Diagram> =
            seeds.iter().flat_map(|d| grow_connected(d.diagram())).collect();
        let two_down = self.generators(k - 2)?;
        let mut seeds2: Vec<&SymmetrizedDiagram> =
            two_down.iter().flat_map(|g| g.terms.iter().map(|t| &t.0)).collect();
        seeds2.sort_by_key(|d| Reverse(d.legs()));
        let mut seen = HashSet::new();
        let mut idx = 0;
        let mut second_round = false;
        while gens.len() < want {
            if idx == grown.len() {
                if second_round {
                    break;
                }
                second_round = true;
                grown = seeds2
                    .iter()
                    .flat_map(|d| grow_connected(d.diagram()))
                    .flat_map(|d| grow_connected(&d))
                    .collect();
                idx = 0;
                continue;
            }
            let d = grown[idx].clone();
            idx += 1;
            let cf = canonical_symmetrized(&d);
            if cf.sign == 0 || !seen.insert(cf.encoding) {
                continue;
            }
            let s = SymmetrizedDiagram::from_diagram(d)?;
            let name = format!("g{k}_{}B", gens.len());
            consider(Generator::single(name, s), &mut gens)?;
        }
        if gens.len() < want {
            return Err(Error::DegenerateBasis {
                degree: k,
                detail: format!("found {} of {want} connected generators", gens.len()),
            });
        }
        Ok(gens)
    }

    fn lower_counts(&self, n: usize) -> Result<Vec<usize>> {
        (0..n).map(|k| Ok(self.generators(k)?.len())).collect()
    }

    pub fn symmetrized_basis(&self, n: usize) -> Result<Arc<SymmetrizedBasis>> {
        if let Some(b) = self.sym.bases.lock().unwrap().get(&n) {
            return Ok(b.clone());
        }
        let mut counts = self.lower_counts(n)?;
        counts.push(self.generators(n)?.len());
        let monos = monomials(n, &counts);
        let mut names: HashMap<(usize, usize), String> = HashMap::new();
        let mut legs = Vec::new();
        for m in &monos {
            let mut l = 0;
            for &(k, i) in m {
                let g = &self.generators(k)?[i];
                names.insert((k, i), g.name.clone());
                l += g.legs;
            }
            legs.push(l);
        }
        let labels: Vec<String> = monos.iter().map(|m| monomial_label(m, &|k, i| names[&(k, i)].clone())).collect();
        let rows = monos.iter().map(|m| self.chi_row(m, n)).collect::<Result<Vec<_>>>()?;
        let chi = Matrix::from_rows(&rows);
        let to_sym = chi.inverse().ok_or_else(|| Error::DegenerateBasis {
            degree: n,
            detail: "symmetrized labels have dependent averages".into(),
        })?;
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let b = Arc::new(SymmetrizedBasis { degree: n, labels, monomials: monos, index, legs, chi, to_sym });
        Ok(self.sym.bases.lock().unwrap().entry(n).or_insert(b).clone())
    }

    /// Round labels to symmetrized labels in degree `n`.
    pub fn appendix_matrix(&self, n: usize) -> Result<BasisChange> {
        let s = self.symmetrized_basis(n)?;
        Ok(BasisChange {
            degree: n,
            round_labels: self.basis(n, true)?.labels().to_vec(),
            symmetrized_labels: s.labels().to_vec(),
            matrix: s.round_to_symmetrized().clone(),
        })
    }

    /// Symmetrized coordinates of a framed element, per degree.
    pub fn to_symmetrized(&self, x: &GradedElement) -> Result<Vec<Vec<Q>>> {
        if !x.framed() {
            return Err(Error::FramingMismatch);
        }
        (0..=x.max_degree())
            .map(|n| Ok(self.symmetrized_basis(n)?.round_to_symmetrized().apply_left(x.part(n))))
            .collect()
    }

    pub fn from_symmetrized(&self, s: &[Vec<Q>]) -> Result<GradedElement> {
        let parts = s
            .iter()
            .enumerate()
            .map(|(n, v)| {
                let b = self.symmetrized_basis(n)?;
                if v.len() != b.dim() {
                    return Err(Error::DegreeMismatch { expected: b.dim(), actual: v.len() });
                }
                Ok(b.chi_matrix().apply_left(v))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedElement::from_parts(true, parts))
    }

    /// `⊔` in symmetrized coordinates (elements carried as framed
    /// [`GradedElement`]s over the symmetrized labels).
    fn sym_product(&self, a: &GradedElement, b: &GradedElement) -> Result<GradedElement> {
        let n = a.max_degree().min(b.max_degree());
        let bases = (0..=n).map(|k| self.symmetrized_basis(k)).collect::<Result<Vec<_>>>()?;
        let mut out = GradedElement::zero(true, &bases.iter().map(|b| b.dim()).collect::<Vec<_>>());
        for da in 0..=n {
            for (i, x) in a.part(da).iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for db in 0..=n - da {
                    for (j, y) in b.part(db).iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let mut m = bases[da].monomials[i].clone();
                        m.extend_from_slice(&bases[db].monomials[j]);
                        m.sort_by_key(|&(k, idx)| (Reverse(k), idx));
                        let target = bases[da + db].monomial_index(&m).expect("product of monomials is a monomial");
                        out.part_mut(da + db)[target] += x * y;
                    }
                }
            }
        }
        Ok(out)
    }

    fn sym_element(&self, x: &GradedElement) -> Result<GradedElement> {
        Ok(GradedElement::from_parts(true, self.to_symmetrized(x)?))
    }

    pub fn disjoint_union(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
        let p = self.sym_product(&self.sym_element(x)?, &self.sym_element(y)?)?;
        self.from_symmetrized(p.parts())
    }

    pub fn exp_disjoint(&self, x: &GradedElement) -> Result<GradedElement> {
        let e = exp_product(&self.sym_element(x)?, &|a: &GradedElement, b: &GradedElement| self.sym_product(a, b))?;
        self.from_symmetrized(e.parts())
    }

    /// `ψ^m`: each symmetrized label with `u` legs scales by `m^u`; negative
    /// `m` reverses the Wilson loop first.
    pub fn adams(&self, m: i64, x: &GradedElement) -> Result<GradedElement> {
        if m == 0 {
            return Err(Error::InvalidArgument("Adams operation needs m != 0".into()));
        }
        let x = if m < 0 { self.reverse(x)? } else { x.clone() };
        let m = m.unsigned_abs() as i64;
        let mut s = self.to_symmetrized(&x)?;
        for (n, part) in s.iter_mut().enumerate() {
            let b = self.symmetrized_basis(n)?;
            for (c, &u) in part.iter_mut().zip(b.legs()) {
                *c *= Q::from_integer(num_bigint::BigInt::from(m).pow(u as u32));
            }
        }
        self.from_symmetrized(&s)
    }

    /// `ψ^m` of a chord diagram by summing over every way of lifting its
    /// points to the `m` sheets of the connected cover.
    pub fn adams_direct(&self, m: usize, d: &ChordDiagram) -> Result<GradedElement> {
        if m == 0 {
            return Err(Error::InvalidArgument("Adams operation needs m >= 1".into()));
        }
        let pts = d.points();
        let inv = d.involution();
        let mut acc: BTreeMap<Box<[u8]>, i64> = BTreeMap::new();
        let mut sheet = vec![0usize; pts];
        loop {
            let mut order: Vec<usize> = (0..pts).collect();
            order.sort_by_key(|&q| sheet[q] * pts + q);
            let mut at = vec![0u8; pts];
            for (i, &q) in order.iter().enumerate() {
                at[q] = i as u8;
            }
            let mut lifted = vec![0u8; pts];
            for q in 0..pts {
                lifted[at[q] as usize] = at[inv[q] as usize];
            }
            *acc.entry(ChordDiagram::new(lifted)?.canonical_key()).or_insert(0) += 1;
            // next assignment in base m
            let mut i = 0;
            while i < pts && sheet[i] + 1 == m {
                sheet[i] = 0;
                i += 1;
            }
            if i == pts {
                break;
            }
            sheet[i] += 1;
        }
        self.element_of_combo(&crate::combo::from_int(acc), true, d.degree())
    }

    /// `Ω = exp_⊔(sum b_{2n} w_{2n}B)`.
    pub fn omega(&self, max_degree: usize) -> Result<GradedElement> {
        if let Some(o) = self.sym.omega.lock().unwrap().as_ref() {
            if o.max_degree() >= max_degree {
                return Ok(o.truncate(max_degree));
            }
        }
        let b = BernoulliTable::new(max_degree);
        let bases = (0..=max_degree).map(|k| self.symmetrized_basis(k)).collect::<Result<Vec<_>>>()?;
        let mut s = GradedElement::zero(true, &bases.iter().map(|b| b.dim()).collect::<Vec<_>>());
        for k in (2..=max_degree).step_by(2) {
            let i = self.wheel_label(k)?;
            s.part_mut(k)[i] = b.b(k);
        }
        let e = exp_product(&s, &|a: &GradedElement, b: &GradedElement| self.sym_product(a, b))?;
        let o = self.from_symmetrized(e.parts())?;
        *self.sym.omega.lock().unwrap() = Some(o.clone());
        Ok(o)
    }

    /// Index of the wheel `w_kB` among the degree-`k` symmetrized labels.
    pub fn wheel_label(&self, k: usize) -> Result<usize> {
        let gens = self.generators(k)?;
        let i = gens
            .iter()
            .position(Generator::is_wheel)
            .ok_or_else(|| Error::Consistency(format!("no wheel among degree-{k} generators")))?;
        Ok(self.symmetrized_basis(k)?.monomial_index(&vec![(k, i)]).expect("generator is a monomial"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_counts() {
        assert_eq!(t_name("w2B"), "tw2B");
        assert_eq!(t_name("tw2B"), "t2w2B");
        assert_eq!(t_name("t3w2B"), "t4w2B");
        assert_eq!(t_name("x3w2B"), "tx3w2B");
        assert_eq!(generator_counts(&[1, 1, 2, 3, 6, 10, 19, 33, 60]).unwrap(), vec![0, 1, 1, 1, 2, 3, 5, 8, 12]);
    }

    #[test]
    fn monomial_order_in_degree_four() {
        let labels: Vec<String> = monomials(4, &[0, 1, 1, 1, 2])
            .iter()
            .map(|m| {
                monomial_label(m, &|k, i| ["", "strut", "w2B", "tw2B", ["t2w2B", "w4B"][i]][k].to_string())
            })
            .collect();
        assert_eq!(labels, ["t2w2B", "w4B", "w2B^2", "strut⊔tw2B", "strut^2⊔w2B", "strut^4"]);
    }
}
