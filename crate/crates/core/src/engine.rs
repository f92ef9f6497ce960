//! Quotient bases with named labels, and the connect-sum Hopf structure in
//! basis coordinates.
//!
//! An [`Engine`] owns every cache: quotients (optionally backed by a disk
//! [`Cache`]), labelled bases, product tables, coproducts and the
//! symmetrized bases. All caches are filled lazily and never invalidated,
//! so shared references to published data stay valid.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::cache::Cache;
use crate::combo::{self, Combo};
use crate::canon::canonical_round;
use crate::diagram::{ChordDiagram, ChordKey, Diagram, HalfEdge, RoundDiagram};
use crate::element::{
    exp_product, log_product, series_inverse, ElementJson, GradedElement, TensorElement, TermJson,
};
use crate::error::{Error, Result};
use crate::pinned;
use crate::quotient::{ChordQuotient, DEFAULT_DEGREE_LIMIT};
use crate::rational::{format_q, parse_q, Matrix, Q};
use crate::stu::{stu_split, Reducer};
use crate::symbasis::SymState;
use crate::vogel::{insert_round, VogelDiagram};

/// Default bound on elimination effort, far above what degree 8 needs.
pub const DEFAULT_WORK_LIMIT: u64 = 10_000_000_000_000;

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub degree_limit: usize,
    pub work_limit: u64,
    pub cache: Option<Cache>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { degree_limit: DEFAULT_DEGREE_LIMIT, work_limit: DEFAULT_WORK_LIMIT, cache: Cache::from_env() }
    }
}

impl EngineConfig {
    /// No disk cache.
    pub fn in_memory() -> Self {
        EngineConfig { cache: None, ..Self::default() }
    }
}

/// A labelled basis of one graded piece. `reps[i]` is a chord combination
/// representing `labels[i]`.
#[derive(Debug)]
pub struct QuotientBasis {
    degree: usize,
    framed: bool,
    labels: Vec<String>,
    reps: Vec<Combo>,
    quotient: Arc<ChordQuotient>,
    /// Internal quotient coordinates to label coordinates (right action);
    /// `None` when the labels are the free chord columns themselves.
    to_label: Option<Matrix>,
}

impl QuotientBasis {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn framed(&self) -> bool {
        self.framed
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn reps(&self) -> &[Combo] {
        &self.reps
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn quotient(&self) -> &ChordQuotient {
        &self.quotient
    }

    /// Label coordinates of a chord combination of this degree.
    pub fn coordinates(&self, c: &Combo) -> Result<Vec<Q>> {
        let pairs: Vec<(ChordKey, Q)> = c.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        Ok(self.from_internal(self.quotient.coordinates(&pairs)?))
    }

    /// Label coordinates from internal (free chord) coordinates.
    pub fn from_internal(&self, v: Vec<Q>) -> Vec<Q> {
        match &self.to_label {
            Some(m) => m.apply_left(&v),
            None => v,
        }
    }
}

type ProductKey = (bool, usize, usize, usize, usize);

pub struct Engine {
    config: EngineConfig,
    reducer: Mutex<Reducer>,
    round_memo: Mutex<HashMap<Box<[u8]>, Vec<Q>>>,
    quotients: Mutex<HashMap<(usize, bool), Arc<ChordQuotient>>>,
    bases: Mutex<HashMap<(usize, bool), Arc<QuotientBasis>>>,
    products: Mutex<HashMap<ProductKey, Arc<Vec<Q>>>>,
    coproducts: Mutex<HashMap<(bool, usize, usize), Arc<Vec<Matrix>>>>,
    reversals: Mutex<HashMap<(bool, usize), Arc<Matrix>>>,
    projections: Mutex<HashMap<usize, Arc<Matrix>>>,
    pub(crate) sym: SymState,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(EngineConfig::default())
    }
}

impl Engine {
    pub fn new(config: EngineConfig) -> Self {
        Engine {
            config,
            reducer: Mutex::new(Reducer::new()),
            round_memo: Mutex::default(),
            quotients: Mutex::default(),
            bases: Mutex::default(),
            products: Mutex::default(),
            coproducts: Mutex::default(),
            reversals: Mutex::default(),
            projections: Mutex::default(),
            sym: SymState::default(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn degree_limit(&self) -> usize {
        self.config.degree_limit
    }

    pub(crate) fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.config.degree_limit {
            return Err(Error::DegreeTooLarge { degree: n, limit: self.config.degree_limit });
        }
        Ok(())
    }

    /// STU reduction to a chord combination.
    pub fn reduce(&self, d: &RoundDiagram) -> Combo {
        let r = self.reducer.lock().unwrap().reduce(d);
        combo::from_int(r)
    }

    /// Sum of the framed internal coordinates of the given round diagrams,
    /// all of degree `n`. Diagrams are first counted per chord column or
    /// canonical class; STU reduction then goes straight to quotient
    /// coordinates, memoized per canonical diagram.
    pub(crate) fn round_coordinates_sum(
        &self,
        n: usize,
        each: impl FnOnce(&mut dyn FnMut(&Diagram)),
    ) -> Result<Vec<Q>> {
        let q = self.quotient(n, true)?;
        let mut columns: HashMap<ChordKey, i64> = HashMap::new();
        let mut classes: HashMap<Box<[u8]>, (Diagram, i8, i64)> = HashMap::new();
        each(&mut |d: &Diagram| {
            if d.vertices() == 0 {
                let inv: Vec<u8> = d.pairing().iter().map(|&p| p as u8).collect();
                *columns.entry(crate::diagram::canonical_chord_key(&inv)).or_insert(0) += 1;
                return;
            }
            let cf = canonical_round(d);
            if cf.sign == 0 {
                return;
            }
            let e = classes.entry(cf.encoding).or_insert_with(|| (d.clone(), cf.sign, 0));
            e.2 += (cf.sign * e.1) as i64;
        });
        let pairs: Vec<(ChordKey, i64)> = columns.into_iter().collect();
        let mut acc = q.coordinates_int(&pairs)?;
        let mut memo = self.round_memo.lock().unwrap();
        for (d, _, count) in classes.into_values() {
            if count != 0 {
                let v = round_coordinates(&d, &q, &mut memo)?;
                let c = Q::from_integer(count.into());
                for (a, x) in acc.iter_mut().zip(v) {
                    if !x.is_zero() {
                        *a += x * &c;
                    }
                }
            }
        }
        Ok(acc)
    }

    pub fn quotient(&self, n: usize, framed: bool) -> Result<Arc<ChordQuotient>> {
        self.check_degree(n)?;
        if let Some(q) = self.quotients.lock().unwrap().get(&(n, framed)) {
            return Ok(q.clone());
        }
        let cached = self.config.cache.as_ref().and_then(|c| c.load(n, framed));
        let q = match cached {
            Some(q) => q,
            None => {
                let q = ChordQuotient::compute(n, framed, self.config.work_limit)?;
                if let Some(c) = &self.config.cache {
                    if let Err(e) = c.store(&q) {
                        log::warn!("could not write cache: {e}");
                    }
                }
                q
            }
        };
        let q = Arc::new(q);
        Ok(self.quotients.lock().unwrap().entry((n, framed)).or_insert(q).clone())
    }

    pub fn basis(&self, n: usize, framed: bool) -> Result<Arc<QuotientBasis>> {
        if let Some(b) = self.bases.lock().unwrap().get(&(n, framed)) {
            return Ok(b.clone());
        }
        let quotient = self.quotient(n, framed)?;
        let pinned = if framed { pinned::framed_reps(self, n) } else { pinned::unframed_reps(self, n) };
        let basis = match pinned {
            Some(named) => {
                let (labels, reps): (Vec<String>, Vec<Combo>) = named.into_iter().unzip();
                if labels.len() != quotient.dim() {
                    return Err(Error::DegenerateBasis {
                        degree: n,
                        detail: format!("{} pinned labels for dimension {}", labels.len(), quotient.dim()),
                    });
                }
                let rows = reps
                    .iter()
                    .map(|r| {
                        let pairs: Vec<(ChordKey, Q)> = r.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
                        quotient.coordinates(&pairs)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let r = Matrix::from_rows(&rows);
                let to_label = if rows.is_empty() { Matrix::zeros(0, 0) } else {
                    r.inverse().ok_or_else(|| Error::DegenerateBasis {
                        degree: n,
                        detail: format!("pinned labels {labels:?} are linearly dependent"),
                    })?
                };
                QuotientBasis { degree: n, framed, labels, reps, quotient, to_label: Some(to_label) }
            }
            None => {
                let keys = quotient.free_keys();
                QuotientBasis {
                    degree: n,
                    framed,
                    labels: keys.iter().map(|k| ChordDiagram::from_key(k).to_word()).collect(),
                    reps: keys.into_iter().map(combo::single).collect(),
                    quotient,
                    to_label: None,
                }
            }
        };
        let b = Arc::new(basis);
        Ok(self.bases.lock().unwrap().entry((n, framed)).or_insert(b).clone())
    }

    pub fn dims(&self, max_degree: usize, framed: bool) -> Result<Vec<usize>> {
        (0..=max_degree).map(|n| Ok(self.quotient(n, framed)?.dim())).collect()
    }

    pub fn zero(&self, max_degree: usize, framed: bool) -> Result<GradedElement> {
        Ok(GradedElement::zero(framed, &self.dims(max_degree, framed)?))
    }

    pub fn unit(&self, max_degree: usize, framed: bool) -> Result<GradedElement> {
        Ok(GradedElement::unit(framed, &self.dims(max_degree, framed)?))
    }

    /// The homogeneous element represented by a chord combination.
    pub fn element_of_combo(&self, c: &Combo, framed: bool, max_degree: usize) -> Result<GradedElement> {
        let mut e = self.zero(max_degree, framed)?;
        let Some(n) = combo::degree(c) else { return Ok(e) };
        if n <= max_degree {
            e.set_part(n, self.basis(n, framed)?.coordinates(c)?);
        }
        Ok(e)
    }

    pub fn element_of_round(&self, d: &RoundDiagram, framed: bool, max_degree: usize) -> Result<GradedElement> {
        self.element_of_combo(&self.reduce(d), framed, max_degree)
    }

    pub fn element_of_chord(&self, d: &ChordDiagram, framed: bool, max_degree: usize) -> Result<GradedElement> {
        self.element_of_combo(&combo::single(d.canonical_key()), framed, max_degree)
    }

    /// Basis element `label` in degree `n`.
    pub fn basis_element(&self, n: usize, label: &str, framed: bool, max_degree: usize) -> Result<GradedElement> {
        let b = self.basis(n, framed)?;
        let i = b
            .label_index(label)
            .ok_or_else(|| Error::InvalidArgument(format!("no basis label {label:?} in degree {n}")))?;
        let mut e = self.zero(max_degree, framed)?;
        e.part_mut(n)[i] = Q::one();
        Ok(e)
    }

    /// The single chord `θ` in the framed theory.
    pub fn theta(&self, max_degree: usize) -> Result<GradedElement> {
        self.element_of_chord(&ChordDiagram::theta(), true, max_degree)
    }

    /// Coordinates of the connect sum of basis elements `(a, i)` and
    /// `(b, j)`.
    fn product_entry(&self, framed: bool, a: usize, i: usize, b: usize, j: usize) -> Result<Arc<Vec<Q>>> {
        let key = (framed, a, i, b, j);
        if let Some(v) = self.products.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let ba = self.basis(a, framed)?;
        let bb = self.basis(b, framed)?;
        let c = combo::concat(&ba.reps()[i], &bb.reps()[j]);
        let v = Arc::new(self.basis(a + b, framed)?.coordinates(&c)?);
        self.products.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn connect_sum(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
        if x.framed() != y.framed() {
            return Err(Error::FramingMismatch);
        }
        let framed = x.framed();
        let n = x.max_degree().min(y.max_degree());
        let mut out = self.zero(n, framed)?;
        for a in 0..=n {
            for (i, xi) in x.part(a).iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                for b in 0..=n - a {
                    for (j, yj) in y.part(b).iter().enumerate() {
                        if yj.is_zero() {
                            continue;
                        }
                        let p = self.product_entry(framed, a, i, b, j)?;
                        let c = xi * yj;
                        for (o, v) in out.part_mut(a + b).iter_mut().zip(p.iter()) {
                            if !v.is_zero() {
                                *o += &c * v;
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn exp_connect(&self, x: &GradedElement) -> Result<GradedElement> {
        exp_product(x, &|a: &GradedElement, b: &GradedElement| self.connect_sum(a, b))
    }

    pub fn log_connect(&self, x: &GradedElement) -> Result<GradedElement> {
        log_product(x, &|a: &GradedElement, b: &GradedElement| self.connect_sum(a, b))
    }

    pub fn inverse_connect(&self, x: &GradedElement) -> Result<GradedElement> {
        series_inverse(x, &|a: &GradedElement, b: &GradedElement| self.connect_sum(a, b))
    }

    /// `exp_#(c θ)`.
    pub fn exp_theta(&self, c: &Q, max_degree: usize) -> Result<GradedElement> {
        self.exp_connect(&self.theta(max_degree)?.scale(c))
    }

    /// Coproduct of basis element `i` of degree `n`, one block per split
    /// `(a, n - a)`.
    fn coproduct_label(&self, framed: bool, n: usize, i: usize) -> Result<Arc<Vec<Matrix>>> {
        if let Some(v) = self.coproducts.lock().unwrap().get(&(framed, n, i)) {
            return Ok(v.clone());
        }
        let basis = self.basis(n, framed)?;
        let mut splits: BTreeMap<(ChordKey, ChordKey), Q> = BTreeMap::new();
        for (k, c) in &basis.reps()[i] {
            let d = ChordDiagram::from_key(k);
            let full = (1u32 << n) - 1;
            for mask in 0..=full {
                let left = d.restrict(mask).canonical_key();
                let right = d.restrict(full ^ mask).canonical_key();
                *splits.entry((left, right)).or_insert_with(Q::zero) += c;
            }
        }
        let dims = self.dims(n, framed)?;
        let mut blocks: Vec<Matrix> = (0..=n).map(|a| Matrix::zeros(dims[a], dims[n - a])).collect();
        let mut coords: HashMap<ChordKey, Vec<Q>> = HashMap::new();
        let mut coord = |k: &ChordKey| -> Result<Vec<Q>> {
            if let Some(v) = coords.get(k) {
                return Ok(v.clone());
            }
            let v = self.basis(k.len() / 2, framed)?.coordinates(&combo::single(k.clone()))?;
            coords.insert(k.clone(), v.clone());
            Ok(v)
        };
        for ((l, r), c) in splits {
            if c.is_zero() {
                continue;
            }
            let a = l.len() / 2;
            let u = coord(&l)?;
            let v = coord(&r)?;
            let m = &mut blocks[a];
            for (p, up) in u.iter().enumerate() {
                if up.is_zero() {
                    continue;
                }
                let cu = &c * up;
                for (q, vq) in v.iter().enumerate() {
                    if !vq.is_zero() {
                        let x = m.get(p, q) + &cu * vq;
                        m.set(p, q, x);
                    }
                }
            }
        }
        let v = Arc::new(blocks);
        self.coproducts.lock().unwrap().insert((framed, n, i), v.clone());
        Ok(v)
    }

    pub fn coproduct(&self, x: &GradedElement) -> Result<TensorElement> {
        let mut t = TensorElement::zero(&x.dims());
        for n in 0..=x.max_degree() {
            for (i, c) in x.part(n).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let blocks = self.coproduct_label(x.framed(), n, i)?;
                for (a, m) in blocks.iter().enumerate() {
                    let target = t.blocks.get_mut(&(a, n - a)).expect("block present");
                    for p in 0..m.rows {
                        for q in 0..m.cols {
                            let v = m.get(p, q);
                            if !v.is_zero() {
                                let s = target.get(p, q) + c * v;
                                target.set(p, q, s);
                            }
                        }
                    }
                }
            }
        }
        Ok(t)
    }

    /// Product of tensor elements, factorwise connect sum.
    pub fn tensor_connect_sum(&self, framed: bool, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        let n = s.max_degree.min(t.max_degree);
        let mut out = TensorElement::zero(&self.dims(n, framed)?);
        for (&(a, b), ms) in &s.blocks {
            for (&(c, d), mt) in &t.blocks {
                if a + b + c + d > n {
                    continue;
                }
                for i in 0..ms.rows {
                    for j in 0..ms.cols {
                        let x = ms.get(i, j);
                        if x.is_zero() {
                            continue;
                        }
                        for k in 0..mt.rows {
                            for l in 0..mt.cols {
                                let y = mt.get(k, l);
                                if y.is_zero() {
                                    continue;
                                }
                                let left = self.product_entry(framed, a, i, c, k)?;
                                let right = self.product_entry(framed, b, j, d, l)?;
                                let xy = x * y;
                                let target = out.blocks.get_mut(&(a + c, b + d)).expect("block present");
                                for (p, u) in left.iter().enumerate() {
                                    if u.is_zero() {
                                        continue;
                                    }
                                    for (q, v) in right.iter().enumerate() {
                                        if !v.is_zero() {
                                            let z = target.get(p, q) + &xy * u * v;
                                            target.set(p, q, z);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_group_like(&self, x: &GradedElement) -> Result<bool> {
        Ok(self.coproduct(x)? == TensorElement::tensor(x, x))
    }

    pub fn is_primitive(&self, x: &GradedElement) -> Result<bool> {
        let one = self.unit(x.max_degree(), x.framed())?;
        let rhs = TensorElement::tensor(x, &one).add(&TensorElement::tensor(&one, x));
        Ok(self.coproduct(x)? == rhs)
    }

    /// Matrix of Wilson-loop reversal in degree `n` (rows act on label
    /// coordinates from the right).
    pub fn reversal_matrix(&self, n: usize, framed: bool) -> Result<Arc<Matrix>> {
        if let Some(m) = self.reversals.lock().unwrap().get(&(framed, n)) {
            return Ok(m.clone());
        }
        let b = self.basis(n, framed)?;
        let rows = b.reps().iter().map(|r| b.coordinates(&combo::reverse(r))).collect::<Result<Vec<_>>>()?;
        let m = Arc::new(if rows.is_empty() { Matrix::zeros(0, 0) } else { Matrix::from_rows(&rows) });
        self.reversals.lock().unwrap().insert((framed, n), m.clone());
        Ok(m)
    }

    pub fn reverse(&self, x: &GradedElement) -> Result<GradedElement> {
        let mut out = x.clone();
        for n in 0..=x.max_degree() {
            out.set_part(n, self.reversal_matrix(n, x.framed())?.apply_left(x.part(n)));
        }
        Ok(out)
    }

    /// Framed-to-unframed map in degree `n`.
    pub fn projection_matrix(&self, n: usize) -> Result<Arc<Matrix>> {
        if let Some(m) = self.projections.lock().unwrap().get(&n) {
            return Ok(m.clone());
        }
        let fb = self.basis(n, true)?;
        let ub = self.basis(n, false)?;
        let rows = fb.reps().iter().map(|r| ub.coordinates(r)).collect::<Result<Vec<_>>>()?;
        let m = Arc::new(Matrix { rows: rows.len(), cols: ub.dim(), data: rows.concat() });
        self.projections.lock().unwrap().insert(n, m.clone());
        Ok(m)
    }

    pub fn project_unframed(&self, x: &GradedElement) -> Result<GradedElement> {
        if !x.framed() {
            return Err(Error::FramingMismatch);
        }
        let parts = (0..=x.max_degree())
            .map(|n| Ok(self.projection_matrix(n)?.apply_left(x.part(n))))
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedElement::from_parts(false, parts))
    }

    /// Inserts `v` at internal vertex `vertex` of `d` and returns the result's
    /// coordinates.
    pub fn insert(
        &self,
        v: &VogelDiagram,
        d: &RoundDiagram,
        vertex: usize,
        framed: bool,
        max_degree: usize,
    ) -> Result<GradedElement> {
        self.element_of_round(&insert_round(v, d, vertex)?, framed, max_degree)
    }

    /// The named basis diagrams of degree `n <= 5` as elements.
    pub fn pinned_basis_diagrams(&self, n: usize, framed: bool) -> Result<Vec<(String, GradedElement)>> {
        let b = self.basis(n, framed)?;
        if n > pinned::MAX_PINNED_DEGREE {
            return Err(Error::InvalidArgument(format!("no named basis in degree {n}")));
        }
        b.labels()
            .iter()
            .map(|l| Ok((l.clone(), self.basis_element(n, l, framed, n)?)))
            .collect()
    }

    pub fn to_json(&self, x: &GradedElement) -> Result<ElementJson> {
        let mut terms = Vec::new();
        for n in 0..=x.max_degree() {
            let b = self.basis(n, x.framed())?;
            for (i, c) in x.part(n).iter().enumerate() {
                if !c.is_zero() {
                    terms.push(TermJson { degree: n, basis_label: b.labels()[i].clone(), coeff: format_q(c) });
                }
            }
        }
        Ok(ElementJson { framed: x.framed(), max_degree: x.max_degree(), terms })
    }

    pub fn from_json(&self, j: &ElementJson) -> Result<GradedElement> {
        let mut e = self.zero(j.max_degree, j.framed)?;
        for t in &j.terms {
            if t.degree > j.max_degree {
                return Err(Error::Parse(format!("term of degree {} beyond max_degree", t.degree)));
            }
            let b = self.basis(t.degree, j.framed)?;
            let i = b
                .label_index(&t.basis_label)
                .ok_or_else(|| Error::Parse(format!("unknown basis label {:?}", t.basis_label)))?;
            e.part_mut(t.degree)[i] += parse_q(&t.coeff)?;
        }
        Ok(e)
    }
}


fn round_coordinates(d: &Diagram, q: &ChordQuotient, memo: &mut HashMap<Box<[u8]>, Vec<Q>>) -> Result<Vec<Q>> {
    if d.vertices() == 0 {
        let inv: Vec<u8> = d.pairing().iter().map(|&p| p as u8).collect();
        let key = crate::diagram::canonical_chord_key(&inv);
        let col = q
            .column_of(&key)
            .ok_or(Error::DegreeMismatch { expected: q.degree(), actual: key.len() / 2 })?;
        return Ok(q.expansion(col));
    }
    let cf = canonical_round(d);
    if cf.sign == 0 {
        return Ok(vec![Q::zero(); q.dim()]);
    }
    if let Some(r) = memo.get(&cf.encoding) {
        return Ok(if cf.sign > 0 { r.clone() } else { r.iter().map(|x| -x).collect() });
    }
    let i = (0..d.loop_legs())
        .find(|&i| matches!(d.kind(d.partner(i)), HalfEdge::Slot { .. }))
        .expect("a vertex touches the loop");
    let (t, u) = stu_split(d, i);
    let mut r = round_coordinates(&t, q, memo)?;
    for (a, x) in r.iter_mut().zip(round_coordinates(&u, q, memo)?) {
        if !x.is_zero() {
            *a -= x;
        }
    }
    let stored = if cf.sign > 0 { r.clone() } else { r.iter().map(|x| -x).collect() };
    memo.insert(cf.encoding, stored);
    Ok(r)
}
