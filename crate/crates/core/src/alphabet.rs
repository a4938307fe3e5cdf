//! Ordered alphabets of tableau entries.
//!
//! Every entry is a [`Symbol`]: an unbarred index `i`, a barred index `ī`,
//! or the distinguished `0`. Symbols are stored by their rank in the
//! universal order `1 < 1̄ < 2 < 2̄ < … < 0`, so the derived `Ord` already is
//! the order used by every alphabet kind, including the plain `1 < 2 < …`
//! of a general linear alphabet (which never contains barred symbols).

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A tableau entry, encoded by its position in the universal order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u8);

impl Symbol {
    pub const ZERO: Symbol = Symbol(u8::MAX);

    /// Largest index representable; alphabets are tiny in practice.
    pub const MAX_INDEX: usize = 100;

    pub fn plain(i: usize) -> Symbol {
        assert!((1..=Self::MAX_INDEX).contains(&i), "symbol index {i} out of range");
        Symbol((2 * (i - 1)) as u8)
    }

    pub fn barred(i: usize) -> Symbol {
        assert!((1..=Self::MAX_INDEX).contains(&i), "symbol index {i} out of range");
        Symbol((2 * (i - 1) + 1) as u8)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn is_barred(self) -> bool {
        !self.is_zero() && self.0 % 2 == 1
    }

    /// The index `i` of `i` or `ī`; `0` for the zero symbol.
    pub fn index(self) -> usize {
        if self.is_zero() {
            0
        } else {
            self.0 as usize / 2 + 1
        }
    }

    /// The bar involution; fixes `0`.
    pub fn bar(self) -> Symbol {
        if self.is_zero() {
            self
        } else {
            Symbol(self.0 ^ 1)
        }
    }

    /// Signed-integer encoding: `i → i`, `ī → -i`, `0 → 0`.
    pub fn to_signed(self) -> i32 {
        match self {
            s if s.is_zero() => 0,
            s if s.is_barred() => -(s.index() as i32),
            s => s.index() as i32,
        }
    }

    pub fn from_signed(v: i32) -> Result<Symbol> {
        let idx = v.unsigned_abs() as usize;
        if idx > Self::MAX_INDEX {
            return Err(Error::UnknownSymbol { symbol: v, alphabet: "any".into() });
        }
        Ok(match v.signum() {
            0 => Symbol::ZERO,
            1 => Symbol::plain(idx),
            _ => Symbol::barred(idx),
        })
    }

    /// Internal placeholder symbols used to track erased boxes. They sort
    /// above every real symbol except `0` and never appear in output.
    pub(crate) fn marker(k: u8) -> Symbol {
        Symbol(250 + k)
    }

    pub(crate) fn is_marker(self) -> bool {
        (250..u8::MAX).contains(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_marker() {
            write!(f, "*{}", self.0 - 250)
        } else if self.is_zero() {
            f.write_str("0")
        } else if self.is_barred() {
            write!(f, "{}\u{304}", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlphabetKind {
    /// `{1 < 2 < … < n}`.
    Gl,
    /// `{1 < 1̄ < … < n < n̄}`.
    Symplectic,
    /// `{1 < 1̄ < … < n < n̄ < 0}`.
    OddOrthogonal,
    /// Same symbols and order as [`AlphabetKind::Symplectic`].
    EvenOrthogonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    pub kind: AlphabetKind,
    pub rank: usize,
}

impl Alphabet {
    pub fn new(kind: AlphabetKind, rank: usize) -> Self {
        assert!(rank <= Symbol::MAX_INDEX);
        Alphabet { kind, rank }
    }

    pub fn has_bars(&self) -> bool {
        self.kind != AlphabetKind::Gl
    }

    pub fn has_zero(&self) -> bool {
        self.kind == AlphabetKind::OddOrthogonal
    }

    pub fn size(&self) -> usize {
        match self.kind {
            AlphabetKind::Gl => self.rank,
            AlphabetKind::Symplectic | AlphabetKind::EvenOrthogonal => 2 * self.rank,
            AlphabetKind::OddOrthogonal => 2 * self.rank + 1,
        }
    }

    /// All symbols in increasing order.
    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.rank {
            out.push(Symbol::plain(i));
            if self.has_bars() {
                out.push(Symbol::barred(i));
            }
        }
        if self.has_zero() {
            out.push(Symbol::ZERO);
        }
        out
    }

    pub fn contains(&self, s: Symbol) -> bool {
        if s.is_marker() {
            return false;
        }
        if s.is_zero() {
            return self.has_zero();
        }
        if s.is_barred() && !self.has_bars() {
            return false;
        }
        s.index() <= self.rank
    }

    /// Position of `s` in [`Alphabet::symbols`].
    pub fn position(&self, s: Symbol) -> Option<usize> {
        if !self.contains(s) {
            return None;
        }
        Some(match (self.has_bars(), s.is_zero()) {
            (_, true) => 2 * self.rank,
            (true, false) => s.0 as usize,
            (false, false) => s.index() - 1,
        })
    }

    pub fn check(&self, s: Symbol) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::UnknownSymbol { symbol: s.to_signed(), alphabet: self.to_string() })
        }
    }

    pub fn compare(&self, a: Symbol, b: Symbol) -> Result<Ordering> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.cmp(&b))
    }

    pub fn bar(&self, s: Symbol) -> Result<Symbol> {
        self.check(s)?;
        if !self.has_bars() || s.is_zero() {
            return Err(Error::InvalidArgument(format!("bar is undefined on {s} in {self}")));
        }
        Ok(s.bar())
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            AlphabetKind::Gl => "GL",
            AlphabetKind::Symplectic => "SYMPLECTIC",
            AlphabetKind::OddOrthogonal => "ODD_ORTHOGONAL",
            AlphabetKind::EvenOrthogonal => "EVEN_ORTHOGONAL",
        };
        write!(f, "{name}({})", self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symplectic_order() {
        let a = Alphabet::new(AlphabetKind::Symplectic, 2);
        assert_eq!(a.compare(Symbol::barred(1), Symbol::plain(2)).unwrap(), Ordering::Less);
        assert_eq!(a.symbols(), vec![Symbol::plain(1), Symbol::barred(1), Symbol::plain(2), Symbol::barred(2)]);
    }

    #[test]
    fn zero_is_largest_in_odd_orthogonal() {
        let a = Alphabet::new(AlphabetKind::OddOrthogonal, 1);
        assert_eq!(a.compare(Symbol::barred(1), Symbol::ZERO).unwrap(), Ordering::Less);
        assert_eq!(*a.symbols().last().unwrap(), Symbol::ZERO);
    }

    #[test]
    fn reflexive_and_unknown() {
        let a = Alphabet::new(AlphabetKind::EvenOrthogonal, 2);
        for s in a.symbols() {
            assert_eq!(a.compare(s, s).unwrap(), Ordering::Equal);
        }
        assert!(a.compare(Symbol::ZERO, Symbol::plain(1)).is_err());
        assert!(a.compare(Symbol::plain(3), Symbol::plain(1)).is_err());
        let gl = Alphabet::new(AlphabetKind::Gl, 3);
        assert!(gl.check(Symbol::barred(1)).is_err());
        assert_eq!(gl.position(Symbol::plain(3)), Some(2));
    }

    #[test]
    fn bar_is_an_involution() {
        let a = Alphabet::new(AlphabetKind::OddOrthogonal, 3);
        for s in a.symbols().into_iter().filter(|s| !s.is_zero()) {
            assert_eq!(a.bar(a.bar(s).unwrap()).unwrap(), s);
            assert_eq!(Symbol::from_signed(s.to_signed()).unwrap(), s);
        }
        assert_eq!(Symbol::barred(2).to_signed(), -2);
        assert_eq!(Symbol::ZERO.to_signed(), 0);
    }
}
