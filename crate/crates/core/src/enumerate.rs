//! Semistandard fillings and the basis predicates of each family.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, AlphabetKind, Symbol};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::laurent::LaurentPoly;
use crate::shape::{BoxPos, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisFamily {
    GlSemistandard,
    Symplectic,
    OrthogonalOdd,
    OrthogonalEven,
    SundaramOdd,
    PinOdd,
    PinEven,
}

impl BasisFamily {
    pub const ALL: [BasisFamily; 7] = [
        BasisFamily::GlSemistandard,
        BasisFamily::Symplectic,
        BasisFamily::OrthogonalOdd,
        BasisFamily::OrthogonalEven,
        BasisFamily::SundaramOdd,
        BasisFamily::PinOdd,
        BasisFamily::PinEven,
    ];

    pub fn alphabet_kind(self) -> AlphabetKind {
        match self {
            BasisFamily::GlSemistandard => AlphabetKind::Gl,
            BasisFamily::Symplectic => AlphabetKind::Symplectic,
            BasisFamily::OrthogonalOdd | BasisFamily::SundaramOdd | BasisFamily::PinOdd => AlphabetKind::OddOrthogonal,
            BasisFamily::OrthogonalEven | BasisFamily::PinEven => AlphabetKind::EvenOrthogonal,
        }
    }

    pub fn alphabet(self, rank: usize) -> Alphabet {
        Alphabet::new(self.alphabet_kind(), rank)
    }

    pub fn needs_spin(self) -> bool {
        matches!(self, BasisFamily::PinOdd | BasisFamily::PinEven)
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisFamily::GlSemistandard => "gl",
            BasisFamily::Symplectic => "sp",
            BasisFamily::OrthogonalOdd => "o-odd",
            BasisFamily::OrthogonalEven => "o-even",
            BasisFamily::SundaramOdd => "sundaram",
            BasisFamily::PinOdd => "pin-odd",
            BasisFamily::PinEven => "pin-even",
        }
    }

    pub fn check_shape(self, shape: &Shape) -> Result<()> {
        if shape.is_spin() != self.needs_spin() {
            return Err(Error::Mismatch(format!(
                "family {} {} a spin shape, got {shape}",
                self.name(),
                if self.needs_spin() { "needs" } else { "does not take" }
            )));
        }
        if shape.num_rows() > shape.rank() {
            return Err(Error::InvalidShape(format!("shape {shape} has more than rank {} parts", shape.rank())));
        }
        Ok(())
    }
}

impl fmt::Display for BasisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyOptions {
    /// Adds the symplectic condition to the Sundaram predicate.
    pub sundaram_require_symplectic: bool,
    /// Test hook: rejects every tableau whose first box holds `1`, which
    /// must make dimension and independence checks fail.
    pub corrupt_for_testing: bool,
}

impl Default for FamilyOptions {
    fn default() -> Self {
        FamilyOptions { sundaram_require_symplectic: true, corrupt_for_testing: false }
    }
}

fn full_boxes_row_weak(f: &Filling) -> bool {
    let sh = f.shape();
    (0..sh.num_rows()).all(|r| (1..sh.row_len(r)).all(|c| f.entry(BoxPos::new(r, c - 1)) <= f.entry(BoxPos::new(r, c))))
}

/// Rows weakly increase and columns strictly increase; half-box entries are
/// exempt from the row condition.
pub fn is_semistandard(f: &Filling) -> bool {
    f.is_column_canonical() && full_boxes_row_weak(f)
}

fn satisfies_row_bound(b: BoxPos, s: Symbol) -> bool {
    s >= Symbol::plain(b.row + 1)
}

/// Every entry of row `i` is at least `i`.
pub fn is_symplectic(f: &Filling) -> bool {
    f.shape().boxes().all(|b| satisfies_row_bound(b, f.entry(b)))
}

/// If row `i` holds both `i` and `ī`, every `ī` in that row has `i`
/// directly above it.
pub fn is_parity(f: &Filling) -> bool {
    let sh = f.shape();
    for r in 0..sh.num_rows() {
        let i = r + 1;
        if i > Symbol::MAX_INDEX {
            break;
        }
        let row = f.row(r);
        if !(row.contains(&Symbol::plain(i)) && row.contains(&Symbol::barred(i))) {
            continue;
        }
        for (c, &s) in row.iter().enumerate() {
            if s == Symbol::barred(i) && (r == 0 || f.entry(BoxPos::new(r - 1, c)) != Symbol::plain(i)) {
                return false;
            }
        }
    }
    true
}

/// The symplectic condition, or the relaxation that admits one extra
/// first-column pair `i, ī` in rows `i, i+1`.
///
/// For the pair at rows `i, i+1` the removal set is the pair together with
/// every box whose entry exceeds `ī`. The retained boxes must form a Young
/// diagram in place, no retained box may sit immediately right of a removed
/// one, and the retained boxes must satisfy the symplectic condition. The
/// definition also lets the added set contain any subset of the boxes above
/// `ī`; since those boxes are removed in any case and the symplectic test on
/// what remains only gets easier, trying the full subset decides every
/// choice.
pub fn is_quasi_symplectic(f: &Filling) -> bool {
    if is_symplectic(f) {
        return true;
    }
    let sh = f.shape();
    let rows = sh.num_rows();
    for i in 1..rows {
        let (upper, lower) = (BoxPos::new(i - 1, 0), BoxPos::new(i, 0));
        if f.entry(upper) != Symbol::plain(i) || f.entry(lower) != Symbol::barred(i) {
            continue;
        }
        let bound = Symbol::barred(i);
        let removed = |b: BoxPos| b == upper || b == lower || f.entry(b) > bound;
        let retained = |b: BoxPos| sh.contains(b) && !removed(b);
        let ok = sh.boxes().filter(|&b| retained(b)).all(|b| {
            let young = (b.row == 0 || retained(BoxPos::new(b.row - 1, b.col)))
                && (b.col == 0 || retained(BoxPos::new(b.row, b.col - 1)));
            young && satisfies_row_bound(b, f.entry(b))
        });
        if ok {
            return true;
        }
    }
    false
}

/// Half-column coupling: with half entry `ī` in row `i`, an entry `i` of
/// that row needs `ī` directly above it (never possible in a semistandard
/// filling); with half entry `i`, an entry `ī` of that row needs `i`
/// directly above it.
pub fn is_spin_parity(f: &Filling) -> bool {
    let sh = f.shape();
    if !sh.is_spin() {
        return true;
    }
    sh.boxes().all(|b| spin_parity_ok_at(f, b))
}

pub(crate) fn spin_parity_ok_at(f: &Filling, b: BoxPos) -> bool {
    let a = f.half(b.row);
    let s = f.entry(b);
    if s != a.bar() {
        return true;
    }
    b.row > 0 && f.entry(BoxPos::new(b.row - 1, b.col)) == a
}

/// Rows weakly increase without repeating `0`; columns strictly increase
/// except that `0` may repeat.
pub fn is_sundaram(f: &Filling, require_symplectic: bool) -> bool {
    let sh = f.shape();
    for b in sh.boxes() {
        let s = f.entry(b);
        if b.col > 0 {
            let l = f.entry(BoxPos::new(b.row, b.col - 1));
            if l > s || (l.is_zero() && s.is_zero()) {
                return false;
            }
        }
        if b.row > 0 {
            let u = f.entry(BoxPos::new(b.row - 1, b.col));
            if u > s || (u == s && !s.is_zero()) {
                return false;
            }
        }
    }
    !require_symplectic || is_symplectic(f)
}

pub fn is_basis_member(f: &Filling, family: BasisFamily) -> Result<bool> {
    is_basis_member_with(f, family, &FamilyOptions::default())
}

pub fn is_basis_member_with(f: &Filling, family: BasisFamily, opts: &FamilyOptions) -> Result<bool> {
    if f.shape().is_spin() != family.needs_spin() {
        return Err(Error::Mismatch(format!("family {family} vs shape {}", f.shape())));
    }
    f.check_alphabet(&family.alphabet(f.shape().rank()))?;
    Ok(member_unchecked(f, family, opts))
}

fn member_unchecked(f: &Filling, family: BasisFamily, opts: &FamilyOptions) -> bool {
    if opts.corrupt_for_testing && f.shape().size() > 0 && f.entry(BoxPos::new(0, 0)) == Symbol::plain(1) {
        return false;
    }
    match family {
        BasisFamily::GlSemistandard => is_semistandard(f),
        BasisFamily::Symplectic => is_semistandard(f) && is_symplectic(f),
        BasisFamily::OrthogonalOdd | BasisFamily::OrthogonalEven => {
            is_semistandard(f) && is_quasi_symplectic(f) && is_parity(f)
        }
        BasisFamily::SundaramOdd => is_sundaram(f, opts.sundaram_require_symplectic),
        BasisFamily::PinOdd | BasisFamily::PinEven => is_semistandard(f) && is_symplectic(f) && is_spin_parity(f),
    }
}

/// All half-column states `(a_1, …, a_n)` in increasing word order.
pub fn half_states(rank: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for i in 1..=rank {
        out = out
            .into_iter()
            .flat_map(|h| {
                [Symbol::plain(i), Symbol::barred(i)].into_iter().map(move |s| {
                    let mut h = h.clone();
                    h.push(s);
                    h
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Basis tableaux of `shape` for `family`, sorted by the filling order.
pub fn enumerate_basis(shape: &Arc<Shape>, family: BasisFamily) -> Result<Vec<Filling>> {
    enumerate_basis_with(shape, family, &FamilyOptions::default())
}

pub fn enumerate_basis_with(shape: &Arc<Shape>, family: BasisFamily, opts: &FamilyOptions) -> Result<Vec<Filling>> {
    family.check_shape(shape)?;
    let alphabet = family.alphabet(shape.rank());
    let symbols = alphabet.symbols();
    let boxes: Vec<BoxPos> = shape.boxes().collect();
    let sundaram = family == BasisFamily::SundaramOdd;
    let halves = if shape.is_spin() { half_states(shape.rank()) } else { vec![Vec::new()] };

    let mut out = Vec::new();
    for half in &halves {
        let mut word = vec![Symbol::ZERO; shape.word_len()].into_boxed_slice();
        for (i, &s) in half.iter().enumerate() {
            word[shape.half_index(i)] = s;
        }
        let mut cur = Filling::from_word(shape.clone(), word);
        fill_boxes(&mut cur, &boxes, 0, &symbols, sundaram, &mut |f| {
            if member_unchecked(f, family, opts) {
                out.push(f.clone());
            }
        });
    }
    out.sort();
    Ok(out)
}

fn fill_boxes(
    cur: &mut Filling,
    boxes: &[BoxPos],
    k: usize,
    symbols: &[Symbol],
    sundaram: bool,
    emit: &mut dyn FnMut(&Filling),
) {
    if k == boxes.len() {
        emit(cur);
        return;
    }
    let b = boxes[k];
    let left = (b.col > 0).then(|| cur.entry(BoxPos::new(b.row, b.col - 1)));
    let above = (b.row > 0).then(|| cur.entry(BoxPos::new(b.row - 1, b.col)));
    let idx = cur.shape().word_index(b);
    for &s in symbols {
        if let Some(l) = left {
            if l > s || (sundaram && l.is_zero() && s.is_zero()) {
                continue;
            }
        }
        if let Some(u) = above {
            let strict_ok = u < s || (sundaram && u.is_zero() && s.is_zero());
            if !strict_ok {
                continue;
            }
        }
        cur.word_mut()[idx] = s;
        fill_boxes(cur, boxes, k + 1, symbols, sundaram, emit);
    }
}

/// Calls `emit` for every filling of `shape` over `alphabet` whose boxes
/// outside `skip` range over all symbols (no ordering constraints). Skipped
/// boxes hold a placeholder. For spin shapes every half-column state is
/// visited.
pub fn for_each_completion(shape: &Arc<Shape>, alphabet: &Alphabet, skip: &[BoxPos], emit: &mut dyn FnMut(&Filling)) {
    let symbols = alphabet.symbols();
    let free: Vec<usize> = shape.boxes().filter(|b| !skip.contains(b)).map(|b| shape.word_index(b)).collect();
    let halves = if shape.is_spin() { half_states(shape.rank()) } else { vec![Vec::new()] };
    for half in &halves {
        let mut word = vec![Symbol::ZERO; shape.word_len()].into_boxed_slice();
        for (k, b) in skip.iter().enumerate() {
            word[shape.word_index(*b)] = Symbol::marker(k as u8);
        }
        for (i, &s) in half.iter().enumerate() {
            word[shape.half_index(i)] = s;
        }
        if symbols.is_empty() && !free.is_empty() {
            continue;
        }
        let mut digits = vec![0usize; free.len()];
        for &w in &free {
            word[w] = symbols[0];
        }
        let mut cur = Filling::from_word(shape.clone(), word);
        loop {
            emit(&cur);
            let mut k = 0;
            loop {
                if k == free.len() {
                    break;
                }
                digits[k] += 1;
                if digits[k] < symbols.len() {
                    cur.word_mut()[free[k]] = symbols[digits[k]];
                    break;
                }
                digits[k] = 0;
                cur.word_mut()[free[k]] = symbols[0];
                k += 1;
            }
            if k == free.len() {
                break;
            }
        }
    }
}

/// All column-canonical fillings (every column strictly increasing), with
/// every half-column state for spin shapes, in increasing filling order.
pub fn canonical_fillings(shape: &Arc<Shape>, alphabet: &Alphabet) -> Vec<Filling> {
    let symbols = alphabet.symbols();
    let mut cols: Vec<Vec<Vec<Symbol>>> = Vec::new();
    for c in 0..shape.num_cols() {
        let mut subsets = Vec::new();
        choose(&symbols, shape.col_len(c), 0, &mut Vec::new(), &mut subsets);
        cols.push(subsets);
    }
    let halves = if shape.is_spin() { half_states(shape.rank()) } else { vec![Vec::new()] };
    let mut out = Vec::new();
    let mut digits = vec![0usize; cols.len()];
    if cols.iter().any(|c| c.is_empty()) {
        return out;
    }
    loop {
        let mut word = Vec::with_capacity(shape.word_len());
        for c in (0..cols.len()).rev() {
            word.extend_from_slice(&cols[c][digits[c]]);
        }
        for half in &halves {
            let mut w = word.clone();
            w.extend_from_slice(half);
            out.push(Filling::from_word(shape.clone(), w.into_boxed_slice()));
        }
        let mut k = 0;
        while k < digits.len() {
            digits[k] += 1;
            if digits[k] < cols[k].len() {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k == digits.len() {
            break;
        }
    }
    out.sort();
    out
}

fn choose(symbols: &[Symbol], k: usize, start: usize, cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..symbols.len() {
        cur.push(symbols[i]);
        choose(symbols, k, i + 1, cur, out);
        cur.pop();
    }
}

/// Generating function `Σ x^{w(T)}` of the basis, exponents doubled.
pub fn weight_polynomial(shape: &Arc<Shape>, family: BasisFamily) -> Result<LaurentPoly> {
    weight_polynomial_with(shape, family, &FamilyOptions::default())
}

pub fn weight_polynomial_with(shape: &Arc<Shape>, family: BasisFamily, opts: &FamilyOptions) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero(shape.rank());
    for t in enumerate_basis_with(shape, family, opts)? {
        p.add_term(t.weight().0, 1);
    }
    Ok(p)
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

    fn spin_fill(sh: &Arc<Shape>, rows: &[Vec<i32>], half: &[i32]) -> Filling {
        Filling::from_signed(sh.clone(), rows, Some(half)).unwrap()
    }

    #[test]
    fn semistandard_examples() {
        let sh = plain(&[2, 1], 2);
        assert!(is_semistandard(&fill(&sh, &[vec![1, -1], vec![2]])));
        let sh = plain(&[2], 1);
        assert!(!is_semistandard(&fill(&sh, &[vec![-1, 1]])));
        let sp = Arc::new(Shape::spin(&[1], 1).unwrap());
        assert!(is_semistandard(&spin_fill(&sp, &[vec![1]], &[-1])));
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic(&fill(&plain(&[1, 1], 2), &[vec![1], vec![2]])));
        assert!(!is_symplectic(&fill(&plain(&[1, 1], 1), &[vec![1], vec![-1]])));
        assert!(is_symplectic(&fill(&plain(&[2], 1), &[vec![1, -1]])));
    }

    #[test]
    fn parity_examples() {
        let sh = plain(&[2], 1);
        assert!(!is_parity(&fill(&sh, &[vec![1, -1]])));
        assert!(is_parity(&fill(&sh, &[vec![1, 0]])));
        let sh = plain(&[2, 2], 2);
        assert!(!is_parity(&fill(&sh, &[vec![1, 1], vec![2, -2]])));
        assert!(is_parity(&fill(&sh, &[vec![1, 2], vec![2, -2]])));
    }

    #[test]
    fn quasi_symplectic_examples() {
        assert!(!is_quasi_symplectic(&fill(&plain(&[2, 1], 2), &[vec![1, 1], vec![-1]])));
        let sh = plain(&[2, 2, 1], 2);
        assert!(!is_quasi_symplectic(&fill(&sh, &[vec![1, 2], vec![2, -2], vec![-2]])));
        let sh = plain(&[2, 2, 1], 3);
        assert!(is_quasi_symplectic(&fill(&sh, &[vec![1, 3], vec![2, -3], vec![-2]])));
    }

    #[test]
    fn family_member_examples() {
        let sh = plain(&[2], 1);
        assert!(!is_basis_member(&fill(&sh, &[vec![0, 0]]), BasisFamily::SundaramOdd).unwrap());
        assert!(is_basis_member(&fill(&sh, &[vec![1, 1]]), BasisFamily::OrthogonalEven).unwrap());
        assert!(is_basis_member(&fill(&sh, &[vec![-1, -1]]), BasisFamily::OrthogonalEven).unwrap());
        assert!(!is_basis_member(&fill(&sh, &[vec![1, -1]]), BasisFamily::OrthogonalEven).unwrap());
        let sp = Arc::new(Shape::spin(&[1], 1).unwrap());
        assert!(is_basis_member(&spin_fill(&sp, &[vec![1]], &[1]), BasisFamily::PinEven).unwrap());
        assert!(!is_basis_member(&spin_fill(&sp, &[vec![-1]], &[1]), BasisFamily::PinEven).unwrap());
        assert!(is_basis_member(&fill(&sh, &[vec![1, 0]]), BasisFamily::OrthogonalEven).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let sh = plain(&[1, 1], 2);
        let basis = enumerate_basis(&sh, BasisFamily::Symplectic).unwrap();
        let cols: Vec<Vec<i32>> = basis.iter().map(|t| t.column(0).iter().map(|s| s.to_signed()).collect()).collect();
        assert_eq!(cols, vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2], vec![2, -2]]);

        let basis = enumerate_basis(&plain(&[1], 1), BasisFamily::OrthogonalOdd).unwrap();
        let entries: Vec<i32> = basis.iter().map(|t| t.word()[0].to_signed()).collect();
        assert_eq!(entries, vec![1, -1, 0]);

        for fam in BasisFamily::ALL {
            let sh = Arc::new(Shape::new(Default::default(), fam.needs_spin(), 2).unwrap());
            let n = enumerate_basis(&sh, fam).unwrap().len();
            assert_eq!(n, if fam.needs_spin() { 4 } else { 1 }, "{fam}");
        }
        assert!(enumerate_basis(&plain(&[1, 1], 1), BasisFamily::Symplectic).is_err());
    }

    #[test]
    fn weight_polynomial_examples() {
        let p = weight_polynomial(&plain(&[1], 1), BasisFamily::Symplectic).unwrap();
        assert_eq!(p, {
            let mut q = LaurentPoly::monomial(vec![2], 1);
            q.add_term(vec![-2], 1);
            q
        });
        let p = weight_polynomial(&plain(&[1], 1), BasisFamily::OrthogonalOdd).unwrap();
        assert_eq!((p.coeff(&[2]), p.coeff(&[0]), p.coeff(&[-2])), (1, 1, 1));
        let sp = Arc::new(Shape::spin(&[], 2).unwrap());
        let p = weight_polynomial(&sp, BasisFamily::PinEven).unwrap();
        assert_eq!(p.terms().len(), 4);
        for e in p.terms().keys() {
            assert!(e.iter().all(|x| x.abs() == 1));
        }
    }

    #[test]
    fn completions_and_canonical_counts() {
        let sh = plain(&[2, 1], 2);
        let a = Alphabet::new(AlphabetKind::Symplectic, 2);
        let mut n = 0;
        for_each_completion(&sh, &a, &[BoxPos::new(0, 1)], &mut |_| n += 1);
        assert_eq!(n, 16);
        // C(4,2) * C(4,1)
        assert_eq!(canonical_fillings(&sh, &a).len(), 24);
        let sp = Arc::new(Shape::spin(&[1], 2).unwrap());
        let b = Alphabet::new(AlphabetKind::OddOrthogonal, 2);
        assert_eq!(canonical_fillings(&sp, &b).len(), 20);
        let all = canonical_fillings(&sh, &a);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn corrupt_hook_drops_tableaux() {
        let sh = plain(&[1], 2);
        let opts = FamilyOptions { corrupt_for_testing: true, ..Default::default() };
        assert_eq!(enumerate_basis_with(&sh, BasisFamily::Symplectic, &opts).unwrap().len(), 3);
    }
}
