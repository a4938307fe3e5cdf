use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::{Filling, FillingJson};
use crate::shape::Shape;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `"p/q"`, or just `"p"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    BigRational::from_str(s.trim()).map_err(|_| Error::InvalidArgument(format!("bad rational {s:?}")))
}

/// A finite linear combination of column-canonical fillings with exact
/// rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct FormalSum {
    terms: BTreeMap<Filling, Rational>,
}

impl FormalSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// The canonical form of a single (possibly unsorted) filling.
    pub fn from_filling(f: &Filling) -> Self {
        let mut s = Self::new();
        s.add_raw(f, &Rational::one());
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Filling, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Filling> {
        self.terms.keys()
    }

    pub fn coeff(&self, f: &Filling) -> Rational {
        self.terms.get(f).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn shape(&self) -> Option<&Arc<Shape>> {
        self.terms.keys().next().map(|f| f.shape())
    }

    /// Adds `c·f` where `f` is already column-canonical.
    pub fn add_canonical(&mut self, f: Filling, c: &Rational) {
        debug_assert!(f.is_column_canonical(), "non-canonical key {f}");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c·f` for an arbitrary filling, canonicalizing it first.
    pub fn add_raw(&mut self, f: &Filling, c: &Rational) {
        if let Some((g, sign)) = f.canonicalize() {
            if sign < 0 {
                self.add_canonical(g, &-c);
            } else {
                self.add_canonical(g, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FormalSum, c: &Rational) {
        for (f, a) in &other.terms {
            self.add_canonical(f.clone(), &(a * c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> FormalSum {
        let mut out = FormalSum::new();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &FormalSum) -> FormalSum {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn remove(&mut self, f: &Filling) -> Option<Rational> {
        self.terms.remove(f)
    }

    pub fn pop_first(&mut self) -> Option<(Filling, Rational)> {
        self.terms.pop_first()
    }

    pub fn to_json(&self) -> FormalSumJson {
        FormalSumJson {
            terms: self
                .terms
                .iter()
                .map(|(f, c)| TermJson { filling: FillingJson::from(f), coeff: format_rational(c) })
                .collect(),
        }
    }

    /// Decodes terms against `shape`; non-canonical fillings are sorted.
    pub fn from_json(j: &FormalSumJson, shape: &Arc<Shape>) -> Result<FormalSum> {
        let mut out = FormalSum::new();
        for t in &j.terms {
            let f = t.filling.to_filling(shape)?;
            out.add_raw(&f, &parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

impl FromIterator<(Filling, Rational)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (Filling, Rational)>>(iter: I) -> Self {
        let mut out = FormalSum::new();
        for (f, c) in iter {
            out.add_raw(&f, &c);
        }
        out
    }
}

impl<'a> IntoIterator for &'a FormalSum {
    type Item = (&'a Filling, &'a Rational);
    type IntoIter = btree_map::Iter<'a, Filling, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub filling: FillingJson,
    pub coeff: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalSumJson {
    pub terms: Vec<TermJson>,
}

/// Input accepted wherever a formal sum is expected: either a bare filling
/// or `{"terms": [...]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum SumInput {
    Sum(FormalSumJson),
    Filling(FillingJson),
}

impl SumInput {
    pub fn shape(&self) -> Result<Shape> {
        match self {
            SumInput::Filling(f) => f.shape(),
            SumInput::Sum(s) => {
                s.terms.first().ok_or_else(|| Error::InvalidArgument("empty sum has no shape".into()))?.filling.shape()
            }
        }
    }

    pub fn decode(&self, shape: &Arc<Shape>) -> Result<FormalSum> {
        match self {
            SumInput::Filling(f) => Ok(FormalSum::from_filling(&f.to_filling(shape)?)),
            SumInput::Sum(s) => FormalSum::from_json(s, shape),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raw_terms_cancel_by_alternation() {
        let sh = Arc::new(Shape::plain(&[1, 1], 2).unwrap());
        let a = Filling::from_signed(sh.clone(), &[vec![1], vec![2]], None).unwrap();
        let b = Filling::from_signed(sh.clone(), &[vec![2], vec![1]], None).unwrap();
        let mut s = FormalSum::new();
        s.add_raw(&a, &rat(1));
        s.add_raw(&b, &rat(1));
        assert!(s.is_zero());
        s.add_raw(&b, &rat(3));
        assert_eq!(s.coeff(&a), rat(-3));
    }

    #[test]
    fn json_coefficients() {
        let sh = Arc::new(Shape::plain(&[1], 1).unwrap());
        let a = Filling::from_signed(sh.clone(), &[vec![1]], None).unwrap();
        let mut s = FormalSum::new();
        s.add_canonical(a, &(rat(-1) / rat(2)));
        let j = serde_json::to_string(&s.to_json()).unwrap();
        assert!(j.contains(r#""coeff":"-1/2""#), "{j}");
        let back: SumInput = serde_json::from_str(&j).unwrap();
        assert_eq!(back.decode(&sh).unwrap(), s);
        assert_eq!(format_rational(&rat(-1)), "-1");
    }
}
