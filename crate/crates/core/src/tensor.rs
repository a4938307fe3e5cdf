//! Ground truth for module dimensions: relation spans inside the tensor
//! power, computed by exact elimination.
//!
//! Coordinates are column-canonical fillings. The quotient of the tensor
//! power by the alternating relations is the tensor product of exterior
//! powers of the columns, whose basis is exactly the canonical fillings;
//! the alternating part of the relation rank is therefore known in closed
//! form and only exchange and group relations are eliminated.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::alphabet::{Alphabet, Symbol};
use crate::echelon::{EchelonSpan, SparseVec};
use crate::enumerate::{canonical_fillings, enumerate_basis_with, for_each_completion, half_states, FamilyOptions};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::formal::{rat, FormalSum, Rational};
use crate::group::Group;
use crate::relations::{
    box_pairs, exchange_swaps, for_each_relation, orthogonal_raw, PairPolicy, RawRelation, RelationConfig,
};
use crate::shape::{BoxPos, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OracleConfig {
    /// Largest admissible number of canonical coordinates.
    pub max_dim: u64,
    pub relations: RelationConfig,
    pub family: FamilyOptions,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_dim: 200_000, relations: RelationConfig::default(), family: FamilyOptions::default() }
    }
}

/// The tensor power `T^r E`, tensored with the spin column for spin shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorSpace {
    pub shape: Arc<Shape>,
    pub group: Group,
    pub alphabet: Alphabet,
}

impl TensorSpace {
    pub fn new(shape: Arc<Shape>, group: Group) -> Result<Self> {
        if shape.is_spin() != group.is_spin() {
            return Err(Error::Mismatch(format!("group {group} vs shape {shape}")));
        }
        let alphabet = group.alphabet(shape.rank());
        Ok(TensorSpace { shape, group, alphabet })
    }

    fn spin_factor(&self) -> u128 {
        1u128 << self.shape.half_len()
    }

    /// `N^r · 2^h`.
    pub fn dimension(&self) -> u128 {
        (self.alphabet.size() as u128).pow(self.shape.size() as u32) * self.spin_factor()
    }

    /// `Π_j C(N, c_j) · 2^h`, the number of column-canonical fillings.
    pub fn canonical_dimension(&self) -> u128 {
        let n = self.alphabet.size() as u128;
        self.shape.col_lens().iter().map(|&c| binomial(n, c as u128)).product::<u128>() * self.spin_factor()
    }

    /// Index of the decomposable tensor of `f`: the half-column state is the
    /// most significant digit, then full boxes in column-major order.
    pub fn embed(&self, f: &Filling) -> Result<u128> {
        f.check_alphabet(&self.alphabet)?;
        let n = self.alphabet.size() as u128;
        let mut idx = 0u128;
        for h in f.halves() {
            idx = idx * 2 + u128::from(h.is_barred());
        }
        for b in self.shape.boxes() {
            idx = idx * n + self.alphabet.position(f.entry(b)).expect("checked") as u128;
        }
        Ok(idx)
    }
}

/// Span of all relations of a module, in canonical coordinates.
///
/// Columns are numbered with the non-basis fillings first and the basis
/// tableaux last, both in filling order. Elimination therefore pivots on
/// non-basis columns whenever it can, and fully reducing a vector leaves
/// its coordinates in the basis.
pub struct RelationSpan {
    pub space: TensorSpace,
    coords: Vec<Filling>,
    index: HashMap<Box<[Symbol]>, u32>,
    basis: Vec<Filling>,
    basis_start: u32,
    echelon: EchelonSpan,
    /// Relation instances fed to the elimination.
    pub generated: usize,
    /// Instances whose canonical vector vanished.
    pub collapsed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SpanReport {
    pub shape: Vec<usize>,
    pub spin: bool,
    pub rank: usize,
    pub group: String,
    pub tensor_dim: String,
    pub relation_rank: String,
    pub quotient_dim: u64,
    pub basis_count: usize,
    pub independent: bool,
}

impl RelationSpan {
    pub fn build(shape: &Arc<Shape>, group: Group, cfg: &OracleConfig) -> Result<RelationSpan> {
        let space = TensorSpace::new(shape.clone(), group)?;
        let needed = space.canonical_dimension();
        if needed > cfg.max_dim as u128 {
            return Err(Error::DimensionBound { needed: needed.min(u64::MAX as u128) as u64, bound: cfg.max_dim });
        }
        let basis = if shape.num_rows() <= shape.rank() {
            enumerate_basis_with(shape, group.family(), &cfg.family)?
        } else {
            Vec::new()
        };
        let all = canonical_fillings(shape, &space.alphabet);
        let in_basis: std::collections::HashSet<&Filling> = basis.iter().collect();
        let mut coords: Vec<Filling> = all.iter().filter(|f| !in_basis.contains(f)).cloned().collect();
        let basis_start = coords.len() as u32;
        coords.extend(basis.iter().cloned());
        if coords.len() != all.len() {
            return Err(Error::Internal("basis tableau outside the canonical coordinates".into()));
        }
        let index = coords.iter().enumerate().map(|(i, f)| (f.word().into(), i as u32)).collect();
        let mut span = RelationSpan {
            space,
            coords,
            index,
            basis,
            basis_start,
            echelon: EchelonSpan::new(),
            generated: 0,
            collapsed: 0,
        };
        let mut echelon = EchelonSpan::new();
        let (mut generated, mut collapsed) = (0, 0);
        for_each_relation(shape, group, &cfg.relations, &mut |raw, _| {
            generated += 1;
            let v = span.raw_to_sparse(&raw)?;
            if v.is_empty() {
                collapsed += 1;
            } else {
                echelon.insert(v);
            }
            Ok(())
        })?;
        span.echelon = echelon;
        span.generated = generated;
        span.collapsed = collapsed;
        Ok(span)
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.space.shape
    }

    pub fn group(&self) -> Group {
        self.space.group
    }

    pub fn basis(&self) -> &[Filling] {
        &self.basis
    }

    pub fn coordinates(&self) -> &[Filling] {
        &self.coords
    }

    pub fn echelon(&self) -> &EchelonSpan {
        &self.echelon
    }

    pub fn tensor_dim(&self) -> u128 {
        self.space.dimension()
    }

    pub fn canonical_dim(&self) -> u128 {
        self.coords.len() as u128
    }

    /// Rank of the full relation span inside the tensor power.
    pub fn relation_rank(&self) -> u128 {
        self.tensor_dim() - self.canonical_dim() + self.echelon.rank() as u128
    }

    pub fn quotient_dim(&self) -> u64 {
        (self.canonical_dim() - self.echelon.rank() as u128) as u64
    }

    /// True iff no basis tableau is a pivot, i.e. the basis images are
    /// independent in the quotient.
    pub fn basis_independent(&self) -> bool {
        self.echelon.pivots().iter().all(|&p| p < self.basis_start)
    }

    pub fn index_of(&self, f: &Filling) -> Result<u32> {
        if **f.shape() != **self.shape() {
            return Err(Error::Mismatch(format!("filling of shape {} in span of {}", f.shape(), self.shape())));
        }
        self.index
            .get(f.word())
            .copied()
            .ok_or_else(|| Error::Mismatch(format!("{f} is not a canonical filling over {}", self.space.alphabet)))
    }

    pub fn to_sparse(&self, x: &FormalSum) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (f, c) in x {
            v.insert(self.index_of(f)?, c.clone());
        }
        Ok(v)
    }

    fn raw_to_sparse(&self, raw: &RawRelation) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (f, c) in &raw.terms {
            if let Some((g, sign)) = f.canonicalize() {
                let k = self.index_of(&g)?;
                let e = v.entry(k).or_insert_with(Rational::zero);
                *e += rat(*c * i64::from(sign));
                if e.is_zero() {
                    v.remove(&k);
                }
            }
        }
        Ok(v)
    }

    pub fn from_sparse(&self, v: &SparseVec) -> FormalSum {
        let mut out = FormalSum::new();
        for (k, c) in v {
            out.add_canonical(self.coords[*k as usize].clone(), c);
        }
        out
    }

    /// Whether `x` lies in the relation span.
    pub fn contains(&self, x: &FormalSum) -> Result<bool> {
        Ok(self.echelon.contains(&self.to_sparse(x)?))
    }

    pub fn contains_raw(&self, raw: &RawRelation) -> Result<bool> {
        Ok(self.echelon.contains(&self.raw_to_sparse(raw)?))
    }

    /// Whether the images of `candidates` in the quotient are linearly
    /// independent. Fillings need not be canonical.
    pub fn check_independent(&self, candidates: &[Filling]) -> Result<bool> {
        let mut local = EchelonSpan::new();
        for f in candidates {
            let v = self.echelon.reduce(self.to_sparse(&FormalSum::from_filling(f))?);
            if v.is_empty() || !local.insert(v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `x` in the basis modulo the relations.
    pub fn express(&self, x: &FormalSum) -> Result<FormalSum> {
        let r = self.echelon.reduce(self.to_sparse(x)?);
        if let Some((&k, _)) = r.iter().find(|(&k, _)| k < self.basis_start) {
            return Err(Error::Inconsistent(format!(
                "{} survives reduction for {} {}",
                self.coords[k as usize],
                self.group(),
                self.shape()
            )));
        }
        Ok(self.from_sparse(&r))
    }

    /// Echelon rows as formal sums.
    pub fn rows(&self) -> Vec<FormalSum> {
        self.echelon.rows().iter().map(|v| self.from_sparse(v)).collect()
    }

    pub fn report(&self) -> SpanReport {
        let sh = self.shape();
        SpanReport {
            shape: sh.partition().parts().to_vec(),
            spin: sh.is_spin(),
            rank: sh.rank(),
            group: self.group().name().into(),
            tensor_dim: self.tensor_dim().to_string(),
            relation_rank: self.relation_rank().to_string(),
            quotient_dim: self.quotient_dim(),
            basis_count: self.basis.len(),
            independent: self.basis_independent(),
        }
    }
}

/// Read-only spans shared between threads, built at most once per
/// `(shape, group)` for a fixed configuration.
pub struct SpanCache {
    cfg: OracleConfig,
    spans: Mutex<HashMap<(Shape, Group), Arc<RelationSpan>>>,
}

impl SpanCache {
    pub fn new(cfg: OracleConfig) -> Self {
        SpanCache { cfg, spans: Mutex::new(HashMap::new()) }
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    pub fn get(&self, shape: &Arc<Shape>, group: Group) -> Result<Arc<RelationSpan>> {
        let key = ((**shape).clone(), group);
        if let Some(s) = self.spans.lock().expect("poisoned").get(&key) {
            return Ok(s.clone());
        }
        let built = Arc::new(RelationSpan::build(shape, group, &self.cfg)?);
        Ok(self.spans.lock().expect("poisoned").entry(key).or_insert(built).clone())
    }
}

pub fn quotient_dimension(shape: &Arc<Shape>, group: Group, cfg: &OracleConfig) -> Result<u64> {
    Ok(RelationSpan::build(shape, group, cfg)?.quotient_dim())
}

// ---------------------------------------------------------------------------
// Group action

/// An exact matrix acting on the ambient space; entry `[t][s]` is the
/// coefficient of basis vector `t` in the image of basis vector `s`, with
/// basis vectors in alphabet order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub name: String,
    pub matrix: Vec<Vec<Rational>>,
}

impl GroupElement {
    pub fn identity(name: &str, size: usize) -> Self {
        let mut m = vec![vec![Rational::zero(); size]; size];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        GroupElement { name: name.into(), matrix: m }
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.matrix.iter().enumerate().all(|(t, row)| row.iter().enumerate().all(|(s, c)| s == t || c.is_zero()))
    }

    fn set(&mut self, a: &Alphabet, target: Symbol, source: Symbol, c: Rational) {
        let (t, s) = (a.position(target).expect("symbol"), a.position(source).expect("symbol"));
        self.matrix[t][s] = c;
    }

    pub fn scaled_center(size: usize) -> Self {
        let mut g = GroupElement::identity("center", size);
        for (i, row) in g.matrix.iter_mut().enumerate() {
            row[i] = -Rational::one();
        }
        g
    }
}

/// Gram matrix of the invariant form, if the group has one.
pub fn gram(group: Group, rank: usize) -> Option<Vec<Vec<Rational>>> {
    let a = group.alphabet(rank);
    let size = a.size();
    let mut g = vec![vec![Rational::zero(); size]; size];
    let pos = |s: Symbol| a.position(s).expect("symbol");
    match group {
        Group::Gl => return None,
        Group::Sp => {
            for i in 1..=rank {
                g[pos(Symbol::plain(i))][pos(Symbol::barred(i))] = Rational::one();
                g[pos(Symbol::barred(i))][pos(Symbol::plain(i))] = -Rational::one();
            }
        }
        _ => {
            for i in 1..=rank {
                g[pos(Symbol::plain(i))][pos(Symbol::barred(i))] = Rational::one();
                g[pos(Symbol::barred(i))][pos(Symbol::plain(i))] = Rational::one();
            }
            if a.has_zero() {
                g[pos(Symbol::ZERO)][pos(Symbol::ZERO)] = Rational::one();
            }
        }
    }
    Some(g)
}

/// Checks `gᵀ·G·g = G` for the group's form, and the torus-only restriction
/// for spin shapes.
pub fn check_group_element(g: &GroupElement, group: Group, rank: usize) -> Result<()> {
    let a = group.alphabet(rank);
    if g.size() != a.size() || g.matrix.iter().any(|r| r.len() != a.size()) {
        return Err(Error::GroupElement(format!("{} is not a {}x{} matrix", g.name, a.size(), a.size())));
    }
    if let Some(gm) = gram(group, rank) {
        let n = a.size();
        #[allow(clippy::needless_range_loop)]
        for x in 0..n {
            for y in 0..n {
                let mut acc = Rational::zero();
                for t in 0..n {
                    if g.matrix[t][x].is_zero() {
                        continue;
                    }
                    for u in 0..n {
                        if !gm[t][u].is_zero() && !g.matrix[u][y].is_zero() {
                            acc += &g.matrix[t][x] * &gm[t][u] * &g.matrix[u][y];
                        }
                    }
                }
                if acc != gm[x][y] {
                    return Err(Error::GroupElement(format!("{} does not preserve the form of {group}", g.name)));
                }
            }
        }
    } else {
        // invertibility is all that is needed for GL; a zero column is the cheap failure
        if (0..a.size()).any(|s| g.matrix.iter().all(|row| row[s].is_zero())) {
            return Err(Error::GroupElement(format!("{} is singular", g.name)));
        }
    }
    if group.is_spin() {
        spin_scalars(g, &a)?;
    }
    Ok(())
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// For a torus element acting on a spin shape: `sqrt(t_i)` for each `i`.
fn spin_scalars(g: &GroupElement, a: &Alphabet) -> Result<Vec<Rational>> {
    if !g.is_diagonal() {
        return Err(Error::Unsupported(format!("{}: only torus elements act on spin shapes here", g.name)));
    }
    if a.has_zero() && !g.matrix[a.position(Symbol::ZERO).unwrap()][a.position(Symbol::ZERO).unwrap()].is_one() {
        return Err(Error::Unsupported(format!("{}: only torus elements act on spin shapes here", g.name)));
    }
    (1..=a.rank)
        .map(|i| {
            let p = a.position(Symbol::plain(i)).unwrap();
            rational_sqrt(&g.matrix[p][p]).ok_or_else(|| {
                Error::Unsupported(format!("{}: torus entry {} has no rational square root", g.name, g.matrix[p][p]))
            })
        })
        .collect()
}

/// `g·x` in canonical coordinates, acting diagonally on tensor factors
/// (and through the torus on the half column).
pub fn act(g: &GroupElement, x: &FormalSum, group: Group, rank: usize) -> Result<FormalSum> {
    check_group_element(g, group, rank)?;
    let a = group.alphabet(rank);
    let symbols = a.symbols();
    let roots = if group.is_spin() { Some(spin_scalars(g, &a)?) } else { None };
    let mut out = FormalSum::new();
    for (f, c) in x {
        let mut coeff = c.clone();
        if let Some(roots) = &roots {
            for (i, h) in f.halves().iter().enumerate() {
                coeff = if h.is_barred() { coeff / &roots[i] } else { coeff * &roots[i] };
            }
        }
        let mut partial: Vec<(Filling, Rational)> = vec![(f.clone(), coeff)];
        for b in f.shape().boxes() {
            let s = a.position(f.entry(b)).expect("checked alphabet");
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (h, k) in &partial {
                for (t, sym) in symbols.iter().enumerate() {
                    let m = &g.matrix[t][s];
                    if !m.is_zero() {
                        next.push((h.with_entry(b, *sym), k * m));
                    }
                }
            }
            partial = next;
        }
        for (h, k) in partial {
            out.add_raw(&h, &k);
        }
    }
    Ok(out)
}

/// `g·x` re-expressed in the family basis.
pub fn group_act(g: &GroupElement, x: &FormalSum, span: &RelationSpan) -> Result<FormalSum> {
    let y = act(g, x, span.group(), span.shape().rank())?;
    span.express(&y)
}

fn torus(a: &Alphabet, rank: usize) -> GroupElement {
    let mut g = GroupElement::identity("torus", a.size());
    for i in 1..=rank {
        let t = rat(((i + 1) * (i + 1)) as i64);
        g.set(a, Symbol::plain(i), Symbol::plain(i), t.clone());
        g.set(a, Symbol::barred(i), Symbol::barred(i), t.recip());
    }
    g
}

/// The documented generator list for `(group, rank)`.
///
/// * symplectic: the signed swaps `e_i ↦ e_ī, e_ī ↦ −e_i`, the adjacent
///   permutations `(i i+1)(ī i+1̄)`, the transvection `e_1̄ ↦ e_1̄ + e_1`,
///   for rank ≥ 2 the transvection `e_2̄ ↦ e_2̄ + e_1, e_1̄ ↦ e_1̄ + e_2`, and
///   the torus element `t_i = (i+1)²`;
/// * orthogonal: the swaps `e_i ↔ e_ī`, the adjacent permutations, for
///   rank ≥ 2 the Eichler transvection `e_1̄ ↦ e_1̄ + e_2, e_2̄ ↦ e_2̄ − e_1`,
///   the torus element, and in odd dimension also
///   `e_1̄ ↦ e_1̄ + e_0 − ½e_1, e_0 ↦ e_0 − e_1` and `e_0 ↦ −e_0`;
/// * general linear: adjacent permutations, `e_2 ↦ e_2 + e_1`, the torus;
/// * Pin: the torus element only.
pub fn generators(group: Group, rank: usize) -> Vec<GroupElement> {
    let a = group.alphabet(rank);
    let size = a.size();
    let mut out = Vec::new();
    let perm = |i: usize, bars: bool| {
        let mut g = GroupElement::identity(&format!("perm-{i}-{}", i + 1), size);
        let mut pairs = vec![(Symbol::plain(i), Symbol::plain(i + 1))];
        if bars {
            pairs.push((Symbol::barred(i), Symbol::barred(i + 1)));
        }
        for (x, y) in pairs {
            g.set(&a, x, x, Rational::zero());
            g.set(&a, y, y, Rational::zero());
            g.set(&a, y, x, Rational::one());
            g.set(&a, x, y, Rational::one());
        }
        g
    };
    match group {
        Group::Gl => {
            for i in 1..rank {
                out.push(perm(i, false));
            }
            if rank >= 2 {
                let mut g = GroupElement::identity("elementary-2-1", size);
                g.set(&a, Symbol::plain(1), Symbol::plain(2), Rational::one());
                out.push(g);
            }
            let mut t = GroupElement::identity("torus", size);
            for i in 1..=rank {
                t.set(&a, Symbol::plain(i), Symbol::plain(i), rat(i as i64 + 1));
            }
            out.push(t);
        }
        Group::Sp => {
            for i in 1..=rank {
                let mut g = GroupElement::identity(&format!("signed-swap-{i}"), size);
                let (p, q) = (Symbol::plain(i), Symbol::barred(i));
                g.set(&a, p, p, Rational::zero());
                g.set(&a, q, q, Rational::zero());
                g.set(&a, q, p, Rational::one());
                g.set(&a, p, q, -Rational::one());
                out.push(g);
            }
            for i in 1..rank {
                out.push(perm(i, true));
            }
            let mut g = GroupElement::identity("transvection-1", size);
            g.set(&a, Symbol::plain(1), Symbol::barred(1), Rational::one());
            out.push(g);
            if rank >= 2 {
                let mut g = GroupElement::identity("transvection-1-2", size);
                g.set(&a, Symbol::plain(1), Symbol::barred(2), Rational::one());
                g.set(&a, Symbol::plain(2), Symbol::barred(1), Rational::one());
                out.push(g);
            }
            out.push(torus(&a, rank));
        }
        Group::OOdd | Group::OEven => {
            for i in 1..=rank {
                let mut g = GroupElement::identity(&format!("swap-{i}"), size);
                let (p, q) = (Symbol::plain(i), Symbol::barred(i));
                g.set(&a, p, p, Rational::zero());
                g.set(&a, q, q, Rational::zero());
                g.set(&a, q, p, Rational::one());
                g.set(&a, p, q, Rational::one());
                out.push(g);
            }
            for i in 1..rank {
                out.push(perm(i, true));
            }
            if rank >= 2 {
                let mut g = GroupElement::identity("eichler-1-2", size);
                g.set(&a, Symbol::plain(2), Symbol::barred(1), Rational::one());
                g.set(&a, Symbol::plain(1), Symbol::barred(2), -Rational::one());
                out.push(g);
            }
            out.push(torus(&a, rank));
            if group == Group::OOdd && rank >= 1 {
                let mut g = GroupElement::identity("eichler-0-1", size);
                g.set(&a, Symbol::ZERO, Symbol::barred(1), Rational::one());
                g.set(&a, Symbol::plain(1), Symbol::barred(1), -(rat(1) / rat(2)));
                g.set(&a, Symbol::plain(1), Symbol::ZERO, -Rational::one());
                out.push(g);
                let mut g = GroupElement::identity("reflect-0", size);
                g.set(&a, Symbol::ZERO, Symbol::ZERO, -Rational::one());
                out.push(g);
            }
        }
        Group::PinOdd | Group::PinEven => out.push(torus(&a, rank)),
    }
    out
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvarianceReport {
    pub generators: Vec<String>,
    pub rows_checked: usize,
    pub failures: Vec<String>,
}

/// Applies every generator to every echelon row and checks the image stays
/// in the span.
pub fn check_invariance(span: &RelationSpan) -> Result<InvarianceReport> {
    let rank = span.shape().rank();
    let gens = generators(span.group(), rank);
    let rows = span.rows();
    let mut failures = Vec::new();
    for g in &gens {
        for (i, row) in rows.iter().enumerate() {
            let image = act(g, row, span.group(), rank)?;
            if !span.contains(&image)? {
                failures.push(format!("{} moves echelon row {i} out of the span", g.name));
            }
        }
    }
    Ok(InvarianceReport { generators: gens.into_iter().map(|g| g.name).collect(), rows_checked: rows.len(), failures })
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CenterReport {
    pub size: usize,
    /// Scalar by which `−I` acts on the quotient, `None` for a zero module.
    pub observed: Option<i32>,
    pub expected: i32,
    /// The module is the primed representation (odd size).
    pub primed: bool,
}

/// Action of `−I` on an orthogonal module: expected `(−1)^{|λ|}`.
pub fn check_center(span: &RelationSpan) -> Result<CenterReport> {
    let rank = span.shape().rank();
    let size = span.shape().size();
    let expected = if size % 2 == 1 { -1 } else { 1 };
    let minus = GroupElement::scaled_center(span.space.alphabet.size());
    let mut observed = None;
    if let Some(t) = span.basis().last() {
        let x = FormalSum::from_filling(t);
        if !span.contains(&x)? {
            let image = act(&minus, &x, span.group(), rank)?;
            for s in [1, -1] {
                if span.contains(&image.sub(&x.scaled(&rat(s))))? {
                    observed = Some(s as i32);
                }
            }
        }
    }
    Ok(CenterReport { size, observed, expected, primed: size % 2 == 1 })
}

// ---------------------------------------------------------------------------
// Closure

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClosureReport {
    pub shape: Vec<usize>,
    pub spin: bool,
    pub rank: usize,
    pub group: String,
    /// Substituted group relations checked for membership.
    pub substituted_checked: usize,
    pub substituted_failed: usize,
    /// Orthogonal relations checked against a Pin span, in the form
    /// obtained by applying the Pin relation at both boxes in either order:
    /// `2 F_0 + Σ_i (F_i + F_i′)`.
    pub orthogonal_checked: usize,
    pub orthogonal_failed: usize,
    /// The same relations with `F_0` weighted one, as in the orthogonal
    /// module itself. Differs from the derived form only when odd;
    /// informational.
    pub unit_zero_failed: usize,
    /// Relation ranks of the group relations under each pair policy.
    pub policy_ranks: Vec<(String, String)>,
    pub examples: Vec<String>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.substituted_failed == 0 && self.orthogonal_failed == 0
    }
}

/// Every single alternating or exchange substitution, as word-position
/// swaps.
fn substitutions(shape: &Shape) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for c in 0..shape.num_cols() {
        for r1 in 0..shape.col_len(c) {
            for r2 in r1 + 1..shape.col_len(c) {
                out.push(vec![(shape.word_index(BoxPos::new(r1, c)), shape.word_index(BoxPos::new(r2, c)))]);
            }
        }
    }
    for right in 1..shape.num_cols() {
        for left in 0..right {
            for k in 1..=shape.col_len(right) {
                for swaps in exchange_swaps(shape, left, right, k).expect("valid site") {
                    out.push(swaps.into_iter().map(|(a, b)| (shape.word_index(a), shape.word_index(b))).collect());
                }
            }
        }
    }
    out
}

/// Closure of the relation span: (a) each group relation stays in the span
/// after any single alternating or exchange substitution; (b) for Pin
/// modules every orthogonal relation (with any fixed half column) lies in
/// the span.
pub fn check_closure(shape: &Arc<Shape>, group: Group, cfg: &OracleConfig) -> Result<ClosureReport> {
    let span = RelationSpan::build(shape, group, cfg)?;
    let mut report = ClosureReport {
        shape: shape.partition().parts().to_vec(),
        spin: shape.is_spin(),
        rank: shape.rank(),
        group: group.name().into(),
        substituted_checked: 0,
        substituted_failed: 0,
        orthogonal_checked: 0,
        orthogonal_failed: 0,
        unit_zero_failed: 0,
        policy_ranks: Vec::new(),
        examples: Vec::new(),
    };
    if group == Group::Gl {
        return Ok(report);
    }
    let subs = substitutions(shape);
    let mut first_err = Ok(());
    let mut gen_cfg = cfg.relations;
    gen_cfg.include_alternating = false;
    for_each_relation(shape, group, &gen_cfg, &mut |raw, src| {
        if raw.kind == crate::relations::RelationKind::Exchange {
            return Ok(());
        }
        for s in &subs {
            report.substituted_checked += 1;
            if !span.contains_raw(&raw.permuted(s))? {
                report.substituted_failed += 1;
                if report.examples.len() < 5 {
                    report.examples.push(format!("{:?} at {} from {src} moved by {s:?}", raw.kind, raw.site));
                }
            }
        }
        Ok(())
    })
    .or_else(|e| {
        first_err = Err(e);
        Ok::<(), Error>(())
    })?;
    first_err?;

    if group.is_spin() {
        let alphabet = group.alphabet(shape.rank());
        let mut err = Ok(());
        for (b1, b2) in box_pairs(shape, PairPolicy::All) {
            for_each_completion(shape, &alphabet, &[b1, b2], &mut |rest| {
                if err.is_err() {
                    return;
                }
                report.orthogonal_checked += 1;
                let odd = group == Group::PinOdd;
                let res = orthogonal_raw(rest, b1, b2, shape.rank(), odd).and_then(|mut raw| {
                    let unit = span.contains_raw(&raw)?;
                    if odd {
                        // The F_0 term comes first.
                        raw.terms[0].1 = 2;
                        Ok((unit, span.contains_raw(&raw)?))
                    } else {
                        Ok((unit, unit))
                    }
                });
                match res {
                    Ok((unit, derived)) => {
                        if !unit {
                            report.unit_zero_failed += 1;
                        }
                        if derived {
                            return;
                        }
                        report.orthogonal_failed += 1;
                        if report.examples.len() < 5 {
                            report.examples.push(format!("orthogonal relation at {b1},{b2} from {rest}"));
                        }
                    }
                    Err(e) => err = Err(e),
                }
            });
        }
        err?;
    } else {
        for policy in [PairPolicy::SameRow, PairPolicy::SameColumn, PairPolicy::All] {
            let mut c = *cfg;
            c.relations.symplectic_pairs = policy;
            c.relations.orthogonal_pairs = policy;
            let s = RelationSpan::build(shape, group, &c)?;
            report.policy_ranks.push((format!("{policy:?}"), s.relation_rank().to_string()));
        }
    }
    Ok(report)
}

/// Number of half-column states times full-box completions; exposed for
/// progress messages.
pub fn completion_count(shape: &Shape, alphabet: &Alphabet) -> u128 {
    (alphabet.size() as u128).pow(shape.size() as u32) * half_states(shape.half_len()).len() as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_basis;

    fn plain(parts: &[usize], rank: usize) -> Arc<Shape> {
        Arc::new(Shape::plain(parts, rank).unwrap())
    }

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn exterior_square() {
        let s = RelationSpan::build(&plain(&[1, 1], 2), Group::Gl, &cfg()).unwrap();
        assert_eq!(s.relation_rank(), 3);
        assert_eq!(s.quotient_dim(), 1);
    }

    #[test]
    fn small_quotients() {
        assert_eq!(quotient_dimension(&plain(&[1, 1], 1), Group::Sp, &cfg()).unwrap(), 0);
        assert_eq!(quotient_dimension(&plain(&[1, 1], 2), Group::Sp, &cfg()).unwrap(), 5);
        assert_eq!(quotient_dimension(&plain(&[1], 1), Group::OOdd, &cfg()).unwrap(), 3);
        assert_eq!(quotient_dimension(&plain(&[2], 1), Group::OEven, &cfg()).unwrap(), 2);
        let sp = Arc::new(Shape::spin(&[1], 1).unwrap());
        assert_eq!(quotient_dimension(&sp, Group::PinEven, &cfg()).unwrap(), 2);
    }

    #[test]
    fn independence_examples() {
        let sh = plain(&[1, 1], 2);
        let s = RelationSpan::build(&sh, Group::Sp, &cfg()).unwrap();
        assert!(s.check_independent(&enumerate_basis(&sh, crate::BasisFamily::Symplectic).unwrap()).unwrap());
        assert!(s.check_independent(&[]).unwrap());
        let sh1 = plain(&[1, 1], 1);
        let s1 = RelationSpan::build(&sh1, Group::Sp, &cfg()).unwrap();
        let f = Filling::from_signed(sh1, &[vec![1], vec![-1]], None).unwrap();
        assert!(!s1.check_independent(&[f]).unwrap());
    }

    #[test]
    fn embed_indices() {
        let sp = TensorSpace::new(plain(&[1, 1], 1), Group::Sp).unwrap();
        let f = Filling::from_signed(sp.shape.clone(), &[vec![1], vec![-1]], None).unwrap();
        assert_eq!(sp.embed(&f).unwrap(), 1);
        assert_eq!(sp.dimension(), 4);
        let pin = TensorSpace::new(Arc::new(Shape::spin(&[1], 1).unwrap()), Group::PinEven).unwrap();
        let g = Filling::from_signed(pin.shape.clone(), &[vec![1]], Some(&[1])).unwrap();
        assert_eq!(pin.embed(&g).unwrap(), 0);
        assert_eq!(pin.dimension(), 4);
    }

    #[test]
    fn bound_is_enforced() {
        let c = OracleConfig { max_dim: 3, ..cfg() };
        assert!(matches!(RelationSpan::build(&plain(&[1, 1], 2), Group::Sp, &c), Err(Error::DimensionBound { .. })));
    }

    #[test]
    fn generators_preserve_forms() {
        for group in Group::ALL {
            for rank in 1..=3 {
                for g in generators(group, rank) {
                    check_group_element(&g, group, rank).unwrap();
                }
            }
        }
        let mut bad = GroupElement::identity("bad", 2);
        bad.matrix[0][0] = rat(2);
        assert!(check_group_element(&bad, Group::Sp, 1).is_err());
        let swap = generators(Group::OEven, 1).remove(0);
        assert!(matches!(check_group_element(&swap, Group::PinEven, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn transvection_acts_on_one_box() {
        let sh = plain(&[1], 1);
        let a = Group::Sp.alphabet(1);
        let mut g = GroupElement::identity("t", 2);
        g.set(&a, Symbol::plain(1), Symbol::barred(1), rat(1));
        let x = FormalSum::from_filling(&Filling::from_signed(sh.clone(), &[vec![-1]], None).unwrap());
        let y = act(&g, &x, Group::Sp, 1).unwrap();
        let mut expected = x.clone();
        expected.add_raw(&Filling::from_signed(sh, &[vec![1]], None).unwrap(), &rat(1));
        assert_eq!(y, expected);
        assert_eq!(act(&GroupElement::identity("id", 2), &x, Group::Sp, 1).unwrap(), x);
    }

    #[test]
    fn torus_scales_by_weight() {
        let sh = plain(&[2, 1], 2);
        let a = Group::Sp.alphabet(2);
        let t = torus(&a, 2);
        for b in enumerate_basis(&sh, crate::BasisFamily::Symplectic).unwrap() {
            let x = FormalSum::from_filling(&b);
            let w = b.weight().0;
            let scale = rat(4).pow(w[0] / 2) * rat(9).pow(w[1] / 2);
            assert_eq!(act(&t, &x, Group::Sp, 2).unwrap(), x.scaled(&scale));
        }
    }
}
