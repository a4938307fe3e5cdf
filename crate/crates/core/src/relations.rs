//! Relation vectors: alternating, exchange, and the symplectic,
//! orthogonal and Pin relations obtained by inserting paired entries into
//! erased boxes.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::alphabet::Symbol;
use crate::enumerate::{canonical_fillings, for_each_completion};
use crate::error::{Error, Result};
use crate::filling::{Filling, FillingJson};
use crate::formal::{rat, FormalSum, FormalSumJson, Rational};
use crate::group::Group;
use crate::shape::{BoxPos, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RelationKind {
    Alternating,
    Exchange,
    Symplectic,
    Orthogonal,
    Pin,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum Site {
    /// Two rows of one column.
    Transposition { col: usize, rows: (usize, usize) },
    /// Top `k` entries of `right` against `k`-subsets of `left`.
    Exchange { left: usize, right: usize, k: usize },
    /// Two erased boxes receiving a paired insertion.
    BoxPair { first: (usize, usize), second: (usize, usize) },
    /// One erased full box.
    Box { pos: (usize, usize) },
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Site::Transposition { col, rows } => write!(f, "col {col} rows {}/{}", rows.0, rows.1),
            Site::Exchange { left, right, k } => write!(f, "cols {left}<{right} k={k}"),
            Site::BoxPair { first, second } => write!(f, "boxes {first:?},{second:?}"),
            Site::Box { pos } => write!(f, "box {pos:?}"),
        }
    }
}

/// A relation before canonicalization: raw fillings with integer
/// coefficients.
#[derive(Clone, Debug)]
pub struct RawRelation {
    pub kind: RelationKind,
    pub site: Site,
    pub terms: Vec<(Filling, i64)>,
}

impl RawRelation {
    pub fn canonical(&self) -> FormalSum {
        let mut out = FormalSum::new();
        for (f, c) in &self.terms {
            out.add_raw(f, &rat(*c));
        }
        out
    }

    /// Applies a position permutation of the word to every term.
    pub fn permuted(&self, swaps: &[(usize, usize)]) -> RawRelation {
        let terms = self
            .terms
            .iter()
            .map(|(f, c)| {
                let mut g = f.clone();
                for &(a, b) in swaps {
                    g.word_mut().swap(a, b);
                }
                (g, *c)
            })
            .collect();
        RawRelation { kind: self.kind, site: self.site.clone(), terms }
    }

    pub fn into_instance(self, source: Filling) -> RelationInstance {
        let vector = self.canonical();
        RelationInstance { kind: self.kind, site: self.site, collapsed: vector.is_zero(), source, vector }
    }
}

#[derive(Clone, Debug)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub site: Site,
    /// The filling (or partial filling, erased boxes holding placeholders)
    /// the relation was generated from.
    pub source: Filling,
    pub vector: FormalSum,
    /// The canonical vector is zero.
    pub collapsed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationInstanceJson {
    pub kind: RelationKind,
    pub site: Site,
    pub collapsed: bool,
    pub terms: Vec<crate::formal::TermJson>,
}

impl RelationInstance {
    pub fn to_json(&self) -> RelationInstanceJson {
        let FormalSumJson { terms } = self.vector.to_json();
        RelationInstanceJson { kind: self.kind, site: self.site.clone(), collapsed: self.collapsed, terms }
    }

    pub fn source_json(&self) -> FillingJson {
        FillingJson::from(&self.source)
    }
}

fn check_box(shape: &Shape, b: BoxPos) -> Result<()> {
    if shape.contains(b) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("box {b} is not a full box of {shape}")))
    }
}

/// Swaps two entries of one column: `f + f'` with `f'` the swapped filling.
pub fn alternating_relation(f: &Filling, col: usize, r1: usize, r2: usize) -> Result<RelationInstance> {
    let sh = f.shape();
    let (a, b) = (BoxPos::new(r1, col), BoxPos::new(r2, col));
    check_box(sh, a)?;
    check_box(sh, b)?;
    if r1 == r2 {
        return Err(Error::InvalidArgument("transposition needs two distinct rows".into()));
    }
    let raw = RawRelation {
        kind: RelationKind::Alternating,
        site: Site::Transposition { col, rows: (r1, r2) },
        terms: vec![(f.clone(), 1), (swap_boxes(f, &[(a, b)]), 1)],
    };
    Ok(raw.into_instance(f.clone()))
}

fn swap_boxes(f: &Filling, pairs: &[(BoxPos, BoxPos)]) -> Filling {
    let mut g = f.clone();
    let sh = f.shape().clone();
    for &(a, b) in pairs {
        g.word_mut().swap(sh.word_index(a), sh.word_index(b));
    }
    g
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The position swaps of every exchange substitution between columns
/// `left < right` with parameter `k`.
pub fn exchange_swaps(shape: &Shape, left: usize, right: usize, k: usize) -> Result<Vec<Vec<(BoxPos, BoxPos)>>> {
    if left >= right || right >= shape.num_cols() {
        return Err(Error::InvalidArgument(format!("bad column pair {left},{right} for {shape}")));
    }
    if k == 0 || k > shape.col_len(right) {
        return Err(Error::InvalidArgument(format!("k = {k} out of range for column {right}")));
    }
    Ok(subsets(shape.col_len(left), k)
        .into_iter()
        .map(|s| s.into_iter().enumerate().map(|(t, r)| (BoxPos::new(r, left), BoxPos::new(t, right))).collect())
        .collect())
}

pub fn exchange_raw(f: &Filling, left: usize, right: usize, k: usize) -> Result<RawRelation> {
    let mut terms = vec![(f.clone(), 1)];
    for swaps in exchange_swaps(f.shape(), left, right, k)? {
        terms.push((swap_boxes(f, &swaps), -1));
    }
    Ok(RawRelation { kind: RelationKind::Exchange, site: Site::Exchange { left, right, k }, terms })
}

/// `f − Σ f_S`, the sum over `k`-subsets `S` of the left column exchanged
/// with the top `k` entries of the right column, vertical order kept.
pub fn exchange_relation(f: &Filling, left: usize, right: usize, k: usize) -> Result<RelationInstance> {
    Ok(exchange_raw(f, left, right, k)?.into_instance(f.clone()))
}

fn check_pair(rest: &Filling, b1: BoxPos, b2: BoxPos) -> Result<()> {
    check_box(rest.shape(), b1)?;
    check_box(rest.shape(), b2)?;
    if b1 == b2 {
        return Err(Error::InvalidArgument(format!("boxes overlap at {b1}")));
    }
    Ok(())
}

pub fn symplectic_raw(rest: &Filling, b1: BoxPos, b2: BoxPos, n: usize) -> Result<RawRelation> {
    check_pair(rest, b1, b2)?;
    let mut terms = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let (p, q) = (Symbol::plain(i), Symbol::barred(i));
        terms.push((rest.with_entry(b1, p).with_entry(b2, q), 1));
        terms.push((rest.with_entry(b1, q).with_entry(b2, p), -1));
    }
    Ok(RawRelation {
        kind: RelationKind::Symplectic,
        site: Site::BoxPair { first: (b1.row, b1.col), second: (b2.row, b2.col) },
        terms,
    })
}

/// `Σ_i (F_i − F_i′)` where `F_i` puts `i` in `b1` and `ī` in `b2`, and
/// `F_i′` the reverse.
pub fn symplectic_relation(rest: &Filling, b1: BoxPos, b2: BoxPos, n: usize) -> Result<RelationInstance> {
    Ok(symplectic_raw(rest, b1, b2, n)?.into_instance(rest.clone()))
}

pub fn orthogonal_raw(rest: &Filling, b1: BoxPos, b2: BoxPos, n: usize, odd: bool) -> Result<RawRelation> {
    check_pair(rest, b1, b2)?;
    let mut terms = Vec::with_capacity(2 * n + 1);
    if odd {
        terms.push((rest.with_entry(b1, Symbol::ZERO).with_entry(b2, Symbol::ZERO), 1));
    }
    for i in 1..=n {
        let (p, q) = (Symbol::plain(i), Symbol::barred(i));
        terms.push((rest.with_entry(b1, p).with_entry(b2, q), 1));
        terms.push((rest.with_entry(b1, q).with_entry(b2, p), 1));
    }
    Ok(RawRelation {
        kind: RelationKind::Orthogonal,
        site: Site::BoxPair { first: (b1.row, b1.col), second: (b2.row, b2.col) },
        terms,
    })
}

/// `F_0 + Σ_i (F_i + F_i′)`, the `F_0` term (both boxes `0`) only when odd.
pub fn orthogonal_relation(rest: &Filling, b1: BoxPos, b2: BoxPos, n: usize, odd: bool) -> Result<RelationInstance> {
    Ok(orthogonal_raw(rest, b1, b2, n, odd)?.into_instance(rest.clone()))
}

/// Coefficients of the Pin relation terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PinSigns {
    /// Every term with coefficient one. Consistent only for small shapes.
    Literal,
    /// `F_i` carries `(−1)^{#barred half entries above row i}` and `F_0`
    /// carries `(−1)^{#barred half entries}`, the signs of Clifford
    /// multiplication on the spin column.
    #[default]
    Clifford,
}

pub fn pin_raw(rest: &Filling, b: BoxPos, odd: bool) -> Result<RawRelation> {
    pin_raw_signed(rest, b, odd, PinSigns::default())
}

pub fn pin_raw_signed(rest: &Filling, b: BoxPos, odd: bool, signs: PinSigns) -> Result<RawRelation> {
    let sh = rest.shape();
    if !sh.is_spin() {
        return Err(Error::Mismatch(format!("Pin relations need a spin shape, got {sh}")));
    }
    check_box(sh, b)?;
    let n = sh.rank();
    let mut terms = Vec::with_capacity(n + 1);
    let sign = |bars: usize| if signs == PinSigns::Clifford && bars % 2 == 1 { -1 } else { 1 };
    let bars_above = |i: usize| rest.halves()[..i].iter().filter(|h| h.is_barred()).count();
    if odd {
        terms.push((rest.with_entry(b, Symbol::ZERO), sign(bars_above(n))));
    }
    for i in 0..n {
        terms.push((rest.with_entry(b, rest.half(i)).with_half_flipped(i), sign(bars_above(i))));
    }
    Ok(RawRelation { kind: RelationKind::Pin, site: Site::Box { pos: (b.row, b.col) }, terms })
}

/// `Σ_i F_i` (plus `F_0` when odd), where `F_i` inserts the half entry
/// `a_i` into `b` and flips `a_i` to its bar.
pub fn pin_relation(rest: &Filling, b: BoxPos, odd: bool) -> Result<RelationInstance> {
    Ok(pin_raw(rest, b, odd)?.into_instance(rest.clone()))
}

/// Shuffle relation for a row descent `a_k > b_k` between column `col` and
/// `col + 1` of a canonical filling: with `A` the entries of `col` from row
/// `row` down and `B` the entries of `col + 1` down to row `row`,
/// `Σ_{X⊆A, Y⊆B, |X|=|Y|} (−1)^{|X|} T_{X,Y} = 0`, where `T_{X,Y}`
/// exchanges `X` with `Y`. Every term other than `T` itself is strictly
/// higher than `T`.
pub fn garnir_relation(f: &Filling, col: usize, row: usize) -> Result<FormalSum> {
    let sh = f.shape();
    if col + 1 >= sh.num_cols() || row >= sh.col_len(col + 1) {
        return Err(Error::InvalidArgument(format!("no shuffle site at column {col}, row {row} of {sh}")));
    }
    let a_rows: Vec<usize> = (row..sh.col_len(col)).collect();
    let b_rows: Vec<usize> = (0..=row).collect();
    let mut out = FormalSum::new();
    for m in 0..=a_rows.len().min(b_rows.len()) {
        let sign = if m % 2 == 0 { Rational::one() } else { -Rational::one() };
        for xs in subsets(a_rows.len(), m) {
            for ys in subsets(b_rows.len(), m) {
                let pairs: Vec<(BoxPos, BoxPos)> = xs
                    .iter()
                    .zip(&ys)
                    .map(|(&x, &y)| (BoxPos::new(a_rows[x], col), BoxPos::new(b_rows[y], col + 1)))
                    .collect();
                out.add_raw(&swap_boxes(f, &pairs), &sign);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairPolicy {
    All,
    SameRow,
    SameColumn,
}

impl PairPolicy {
    pub fn admits(self, a: BoxPos, b: BoxPos) -> bool {
        match self {
            PairPolicy::All => true,
            PairPolicy::SameRow => a.row == b.row,
            PairPolicy::SameColumn => a.col == b.col,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RelationConfig {
    pub symplectic_pairs: PairPolicy,
    pub orthogonal_pairs: PairPolicy,
    pub pin_signs: PinSigns,
    /// Emit alternating instances. They always collapse in canonical
    /// coordinates, so the tensor oracle accounts for them analytically.
    pub include_alternating: bool,
}

impl Default for RelationConfig {
    fn default() -> Self {
        RelationConfig {
            symplectic_pairs: PairPolicy::All,
            orthogonal_pairs: PairPolicy::SameRow,
            pin_signs: PinSigns::default(),
            include_alternating: false,
        }
    }
}

impl RelationConfig {
    pub fn pair_policy(&self, group: Group) -> Option<PairPolicy> {
        match group {
            Group::Sp => Some(self.symplectic_pairs),
            Group::OOdd | Group::OEven => Some(self.orthogonal_pairs),
            _ => None,
        }
    }
}

/// Box pairs admitted by `policy`, each unordered pair once.
pub fn box_pairs(shape: &Shape, policy: PairPolicy) -> Vec<(BoxPos, BoxPos)> {
    let boxes: Vec<BoxPos> = shape.boxes().collect();
    let mut out = Vec::new();
    for (i, &a) in boxes.iter().enumerate() {
        for &b in &boxes[i + 1..] {
            if policy.admits(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Streams every relation for `(shape, group)` as a raw relation together
/// with its source filling.
pub fn for_each_relation(
    shape: &Arc<Shape>,
    group: Group,
    cfg: &RelationConfig,
    emit: &mut dyn FnMut(RawRelation, &Filling) -> Result<()>,
) -> Result<()> {
    if shape.is_spin() != group.is_spin() {
        return Err(Error::Mismatch(format!("group {group} vs shape {shape}")));
    }
    let alphabet = group.alphabet(shape.rank());
    let canon = canonical_fillings(shape, &alphabet);

    if cfg.include_alternating {
        let mut err = Ok(());
        for_each_completion(shape, &alphabet, &[], &mut |f| {
            for c in 0..shape.num_cols() {
                for r1 in 0..shape.col_len(c) {
                    for r2 in r1 + 1..shape.col_len(c) {
                        let raw = RawRelation {
                            kind: RelationKind::Alternating,
                            site: Site::Transposition { col: c, rows: (r1, r2) },
                            terms: vec![
                                (f.clone(), 1),
                                (swap_boxes(f, &[(BoxPos::new(r1, c), BoxPos::new(r2, c))]), 1),
                            ],
                        };
                        if err.is_ok() {
                            err = emit(raw, f);
                        }
                    }
                }
            }
        });
        err?;
    }

    for f in &canon {
        for right in 1..shape.num_cols() {
            for left in 0..right {
                for k in 1..=shape.col_len(right) {
                    emit(exchange_raw(f, left, right, k)?, f)?;
                }
            }
        }
    }

    let n = shape.rank();
    match group {
        Group::Gl => {}
        Group::Sp | Group::OOdd | Group::OEven => {
            let policy = cfg.pair_policy(group).unwrap_or(PairPolicy::All);
            for (b1, b2) in box_pairs(shape, policy) {
                let mut err = Ok(());
                for_each_completion(shape, &alphabet, &[b1, b2], &mut |rest| {
                    if err.is_err() {
                        return;
                    }
                    let raw = if group == Group::Sp {
                        symplectic_raw(rest, b1, b2, n)
                    } else {
                        orthogonal_raw(rest, b1, b2, n, group == Group::OOdd)
                    };
                    err = raw.and_then(|r| emit(r, rest));
                });
                err?;
            }
        }
        Group::PinOdd | Group::PinEven => {
            for b in shape.boxes() {
                let mut err = Ok(());
                for_each_completion(shape, &alphabet, &[b], &mut |rest| {
                    if err.is_err() {
                        return;
                    }
                    err = pin_raw_signed(rest, b, group == Group::PinOdd, cfg.pin_signs).and_then(|r| emit(r, rest));
                });
                err?;
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, Default)]
pub struct RelationSet {
    pub instances: Vec<RelationInstance>,
    /// Instances generated before deduplication.
    pub generated: usize,
    /// Instances whose canonical vector is zero (kept in `instances`).
    pub collapsed: usize,
    pub duplicates: usize,
}

/// All relation instances for `(shape, group)`, deduplicated by their
/// normalized canonical vector. Collapsed instances are kept once per
/// kind and site with their flag set.
pub fn all_relations(shape: &Arc<Shape>, group: Group, cfg: &RelationConfig) -> Result<RelationSet> {
    let mut set = RelationSet::default();
    let mut seen: HashSet<FormalSum> = HashSet::new();
    let mut seen_collapsed: HashSet<(RelationKind, Site)> = HashSet::new();
    for_each_relation(shape, group, cfg, &mut |raw, src| {
        set.generated += 1;
        let inst = raw.into_instance(src.clone());
        if inst.collapsed {
            set.collapsed += 1;
            if seen_collapsed.insert((inst.kind, inst.site.clone())) {
                set.instances.push(inst);
            }
            return Ok(());
        }
        if seen.insert(normalized(&inst.vector)) {
            set.instances.push(inst);
        } else {
            set.duplicates += 1;
        }
        Ok(())
    })?;
    Ok(set)
}

/// Scales a nonzero sum so its first coefficient is `1`.
pub fn normalized(v: &FormalSum) -> FormalSum {
    match v.iter().next() {
        None => v.clone(),
        Some((_, c)) => {
            let inv = c.recip();
            let out = v.scaled(&inv);
            debug_assert!(out.iter().next().is_none_or(|(_, c)| c.is_positive()));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(parts: &[usize], rank: usize) -> Arc<Shape> {
        Arc::new(Shape::plain(parts, rank).unwrap())
    }

    fn fill(sh: &Arc<Shape>, rows: &[Vec<i32>]) -> Filling {
        Filling::from_signed(sh.clone(), rows, None).unwrap()
    }

    fn sum(terms: &[(&Filling, i64)]) -> FormalSum {
        let mut s = FormalSum::new();
        for (f, c) in terms {
            s.add_raw(f, &rat(*c));
        }
        s
    }

    fn erased(sh: &Arc<Shape>) -> Filling {
        let zeros: Vec<Vec<i32>> = sh.partition().parts().iter().map(|&p| vec![1; p]).collect();
        fill(sh, &zeros)
    }

    #[test]
    fn exchange_examples() {
        let sh = plain(&[2], 2);
        let f = fill(&sh, &[vec![2, 1]]);
        let inst = exchange_relation(&f, 0, 1, 1).unwrap();
        assert_eq!(inst.vector, sum(&[(&f, 1), (&fill(&sh, &[vec![1, 2]]), -1)]));

        let sh = plain(&[2, 2], 2);
        let f = fill(&sh, &[vec![1, 1], vec![2, 2]]);
        assert!(exchange_relation(&f, 0, 1, 2).unwrap().collapsed);

        let sh = plain(&[2, 1], 2);
        let f = fill(&sh, &[vec![-1, 1], vec![2]]);
        let inst = exchange_relation(&f, 0, 1, 1).unwrap();
        let expected =
            sum(&[(&f, 1), (&fill(&sh, &[vec![1, -1], vec![2]]), -1), (&fill(&sh, &[vec![-1, 2], vec![1]]), -1)]);
        assert_eq!(inst.vector, expected);
        assert!(exchange_relation(&f, 1, 0, 1).is_err());
        assert!(exchange_relation(&f, 0, 1, 2).is_err());
    }

    #[test]
    fn symplectic_examples() {
        let (b1, b2) = (BoxPos::new(0, 0), BoxPos::new(1, 0));
        let sh = plain(&[1, 1], 1);
        let v = symplectic_relation(&erased(&sh), b1, b2, 1).unwrap().vector;
        assert_eq!(v, sum(&[(&fill(&sh, &[vec![1], vec![-1]]), 2)]));

        let sh = plain(&[1, 1], 2);
        let v = symplectic_relation(&erased(&sh), b1, b2, 2).unwrap().vector;
        let expected = sum(&[(&fill(&sh, &[vec![1], vec![-1]]), 2), (&fill(&sh, &[vec![2], vec![-2]]), 2)]);
        assert_eq!(v, expected);

        let sh = plain(&[2], 1);
        let v = symplectic_relation(&erased(&sh), BoxPos::new(0, 0), BoxPos::new(0, 1), 1).unwrap().vector;
        assert_eq!(v, sum(&[(&fill(&sh, &[vec![1, -1]]), 1), (&fill(&sh, &[vec![-1, 1]]), -1)]));
        assert!(symplectic_relation(&erased(&sh), b1, b1, 1).is_err());
    }

    #[test]
    fn orthogonal_examples() {
        let sh = plain(&[2], 1);
        let (b1, b2) = (BoxPos::new(0, 0), BoxPos::new(0, 1));
        let v = orthogonal_relation(&erased(&sh), b1, b2, 1, true).unwrap().vector;
        let expected =
            sum(&[(&fill(&sh, &[vec![0, 0]]), 1), (&fill(&sh, &[vec![1, -1]]), 1), (&fill(&sh, &[vec![-1, 1]]), 1)]);
        assert_eq!(v, expected);
        let v = orthogonal_relation(&erased(&sh), b1, b2, 1, false).unwrap().vector;
        assert_eq!(v, sum(&[(&fill(&sh, &[vec![1, -1]]), 1), (&fill(&sh, &[vec![-1, 1]]), 1)]));

        let sh = plain(&[1, 1], 1);
        let inst = orthogonal_relation(&erased(&sh), BoxPos::new(0, 0), BoxPos::new(1, 0), 1, true).unwrap();
        assert!(inst.collapsed);
    }

    #[test]
    fn pin_examples() {
        let b = BoxPos::new(0, 0);
        let sh = Arc::new(Shape::spin(&[1], 1).unwrap());
        let rest = Filling::from_signed(sh.clone(), &[vec![1]], Some(&[1])).unwrap();
        let v = pin_relation(&rest, b, false).unwrap().vector;
        let t = Filling::from_signed(sh.clone(), &[vec![1]], Some(&[-1])).unwrap();
        assert_eq!(v, sum(&[(&t, 1)]));
        let v = pin_relation(&rest, b, true).unwrap().vector;
        let z = Filling::from_signed(sh.clone(), &[vec![0]], Some(&[1])).unwrap();
        assert_eq!(v, sum(&[(&z, 1), (&t, 1)]));

        let sh = Arc::new(Shape::spin(&[1], 2).unwrap());
        let rest = Filling::from_signed(sh.clone(), &[vec![1]], Some(&[1, 2])).unwrap();
        let v = pin_relation(&rest, b, false).unwrap().vector;
        let t1 = Filling::from_signed(sh.clone(), &[vec![1]], Some(&[-1, 2])).unwrap();
        let t2 = Filling::from_signed(sh.clone(), &[vec![2]], Some(&[1, -2])).unwrap();
        assert_eq!(v, sum(&[(&t1, 1), (&t2, 1)]));
        let rest = Filling::from_signed(sh.clone(), &[vec![1]], Some(&[-1, 2])).unwrap();
        let u1 = Filling::from_signed(sh.clone(), &[vec![-1]], Some(&[1, 2])).unwrap();
        let u2 = Filling::from_signed(sh.clone(), &[vec![2]], Some(&[-1, -2])).unwrap();
        let clifford = pin_raw_signed(&rest, b, false, PinSigns::Clifford).unwrap().canonical();
        assert_eq!(clifford, sum(&[(&u1, 1), (&u2, -1)]));
        let literal = pin_raw_signed(&rest, b, false, PinSigns::Literal).unwrap().canonical();
        assert_eq!(literal, sum(&[(&u1, 1), (&u2, 1)]));
        let plain_rest = erased(&plain(&[1], 1));
        assert!(pin_relation(&plain_rest, b, false).is_err());
    }

    #[test]
    fn all_relations_examples() {
        let sh = plain(&[1, 1], 2);
        let set =
            all_relations(&sh, Group::Gl, &RelationConfig { include_alternating: true, ..Default::default() }).unwrap();
        assert!(set.instances.iter().all(|i| matches!(i.kind, RelationKind::Alternating | RelationKind::Exchange)));

        let sh = plain(&[1, 1], 1);
        let set = all_relations(&sh, Group::Sp, &RelationConfig::default()).unwrap();
        let target = normalized(&sum(&[(&fill(&sh, &[vec![1], vec![-1]]), 2)]));
        assert!(set.instances.iter().any(|i| normalized(&i.vector) == target));

        let sh = plain(&[2], 1);
        let set = all_relations(&sh, Group::OOdd, &RelationConfig::default()).unwrap();
        let target = normalized(&sum(&[
            (&fill(&sh, &[vec![0, 0]]), 1),
            (&fill(&sh, &[vec![1, -1]]), 1),
            (&fill(&sh, &[vec![-1, 1]]), 1),
        ]));
        assert!(set.instances.iter().any(|i| normalized(&i.vector) == target));
    }

    #[test]
    fn garnir_two_box_row_is_the_exchange() {
        let sh = plain(&[2], 2);
        let f = fill(&sh, &[vec![2, 1]]);
        let g = garnir_relation(&f, 0, 0).unwrap();
        assert_eq!(g, exchange_relation(&f, 0, 1, 1).unwrap().vector);
    }
}
