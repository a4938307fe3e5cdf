use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::shape::{BoxPos, Partition, Shape};

/// Torus weight, stored doubled so spin weights stay integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn doubled(&self) -> &[i32] {
        &self.0
    }
}

/// An assignment of symbols to the boxes of a [`Shape`].
///
/// Entries live in a single word: full-box columns from right to left, each
/// top to bottom, followed by the half-box entries. With this layout the
/// derived lexicographic comparison of words is the straightening order:
/// the rightmost column decides first and a larger word is a higher filling.
#[derive(Clone)]
pub struct Filling {
    shape: Arc<Shape>,
    word: Box<[Symbol]>,
}

impl Filling {
    pub(crate) fn from_word(shape: Arc<Shape>, word: Box<[Symbol]>) -> Filling {
        debug_assert_eq!(word.len(), shape.word_len());
        Filling { shape, word }
    }

    /// Builds a filling from rows of full-box entries and, for spin shapes,
    /// the half-column entries `a_1..a_n`.
    pub fn from_rows(shape: Arc<Shape>, rows: &[Vec<Symbol>], half: Option<&[Symbol]>) -> Result<Filling> {
        if rows.len() != shape.num_rows() {
            return Err(Error::MalformedFilling(format!(
                "expected {} rows for shape {shape}, got {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        let mut word = vec![Symbol::ZERO; shape.word_len()].into_boxed_slice();
        for (r, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(r) {
                return Err(Error::MalformedFilling(format!(
                    "row {r} has {} entries, shape {shape} needs {}",
                    row.len(),
                    shape.row_len(r)
                )));
            }
            for (c, &s) in row.iter().enumerate() {
                if s.is_marker() {
                    return Err(Error::MalformedFilling("placeholder symbol in input".into()));
                }
                word[shape.word_index(BoxPos::new(r, c))] = s;
            }
        }
        match (shape.is_spin(), half) {
            (true, Some(h)) => {
                if h.len() != shape.rank() {
                    return Err(Error::MalformedFilling(format!(
                        "half column needs {} entries, got {}",
                        shape.rank(),
                        h.len()
                    )));
                }
                for (i, &s) in h.iter().enumerate() {
                    if s.is_zero() || s.index() != i + 1 {
                        return Err(Error::MalformedFilling(format!(
                            "half entry {} must be {} or its bar, got {s}",
                            i + 1,
                            i + 1
                        )));
                    }
                    word[shape.half_index(i)] = s;
                }
            }
            (true, None) => return Err(Error::MalformedFilling("spin shape needs half entries".into())),
            (false, Some(h)) if !h.is_empty() => {
                return Err(Error::MalformedFilling("half entries given for a non-spin shape".into()))
            }
            _ => {}
        }
        Ok(Filling { shape, word })
    }

    /// Convenience constructor from signed integers.
    pub fn from_signed(shape: Arc<Shape>, rows: &[Vec<i32>], half: Option<&[i32]>) -> Result<Filling> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| Symbol::from_signed(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let half = half.map(|h| h.iter().map(|&v| Symbol::from_signed(v)).collect::<Result<Vec<_>>>()).transpose()?;
        Filling::from_rows(shape, &rows, half.as_deref())
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    pub(crate) fn word_mut(&mut self) -> &mut [Symbol] {
        &mut self.word
    }

    pub fn entry(&self, b: BoxPos) -> Symbol {
        self.word[self.shape.word_index(b)]
    }

    pub fn with_entry(&self, b: BoxPos, s: Symbol) -> Filling {
        let mut f = self.clone();
        f.word[self.shape.word_index(b)] = s;
        f
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> &[Symbol] {
        &self.word[self.shape.col_range(c)]
    }

    pub fn half(&self, i: usize) -> Symbol {
        self.word[self.shape.half_index(i)]
    }

    pub fn halves(&self) -> &[Symbol] {
        &self.word[self.shape.size()..]
    }

    pub fn with_half_flipped(&self, i: usize) -> Filling {
        let mut f = self.clone();
        let k = self.shape.half_index(i);
        f.word[k] = f.word[k].bar();
        f
    }

    pub fn row(&self, r: usize) -> Vec<Symbol> {
        (0..self.shape.row_len(r)).map(|c| self.entry(BoxPos::new(r, c))).collect()
    }

    pub fn rows(&self) -> Vec<Vec<Symbol>> {
        (0..self.shape.num_rows()).map(|r| self.row(r)).collect()
    }

    /// True when every column is strictly increasing.
    pub fn is_column_canonical(&self) -> bool {
        (0..self.shape.num_cols()).all(|c| self.column(c).windows(2).all(|w| w[0] < w[1]))
    }

    /// Sorts every column ascending. Returns the sorted filling and the sign
    /// of the sorting permutation, or `None` when a column repeats a symbol
    /// (the alternating relations then force the filling to zero).
    pub fn canonicalize(&self) -> Option<(Filling, i8)> {
        let mut out = self.clone();
        let mut sign = 1i8;
        for c in 0..self.shape.num_cols() {
            let col = &mut out.word[self.shape.col_range(c)];
            // insertion sort, counting transpositions
            for i in 1..col.len() {
                let mut j = i;
                while j > 0 && col[j - 1] >= col[j] {
                    if col[j - 1] == col[j] {
                        return None;
                    }
                    col.swap(j - 1, j);
                    sign = -sign;
                    j -= 1;
                }
            }
        }
        Some((out, sign))
    }

    /// Doubled torus weight: `2(#i − #ī)` over full boxes plus `±1` from the
    /// half entry of row `i`; zeros contribute nothing.
    pub fn weight(&self) -> Weight {
        let n = self.shape.rank();
        let mut w = vec![0i32; n];
        for &s in &self.word[..self.shape.size()] {
            if s.is_zero() || s.index() > n {
                continue;
            }
            w[s.index() - 1] += if s.is_barred() { -2 } else { 2 };
        }
        for &s in self.halves() {
            w[s.index() - 1] += if s.is_barred() { -1 } else { 1 };
        }
        Weight(w)
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        for &s in &self.word[..self.shape.size()] {
            alphabet.check(s)?;
        }
        if self.shape.is_spin() && !alphabet.has_bars() {
            return Err(Error::Mismatch("spin shapes need a barred alphabet".into()));
        }
        if self.shape.rank() != alphabet.rank {
            return Err(Error::Mismatch(format!(
                "shape rank {} differs from alphabet rank {}",
                self.shape.rank(),
                alphabet.rank
            )));
        }
        Ok(())
    }

    /// Total order used by straightening; see the type-level docs.
    pub fn filling_order(&self, other: &Filling) -> Result<Ordering> {
        if self.shape != other.shape {
            return Err(Error::Mismatch(format!("shapes {} and {}", self.shape, other.shape)));
        }
        Ok(self.word.cmp(&other.word))
    }
}

impl PartialEq for Filling {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word && (Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape)
    }
}

impl Eq for Filling {}

impl Hash for Filling {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl PartialOrd for Filling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Filling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word).then_with(|| {
            if Arc::ptr_eq(&self.shape, &other.shape) {
                Ordering::Equal
            } else {
                self.shape.cmp(&other.shape)
            }
        })
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.is_spin() {
            write!(f, "h(")?;
            for (i, s) in self.halves().iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "[")?;
        for (r, row) in self.rows().iter().enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, s) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Wire format of a filling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingJson {
    pub shape: Vec<usize>,
    #[serde(default)]
    pub spin: bool,
    pub rank: usize,
    pub rows: Vec<Vec<i32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub half: Option<Vec<i32>>,
}

impl From<&Filling> for FillingJson {
    fn from(f: &Filling) -> Self {
        FillingJson {
            shape: f.shape.partition().parts().to_vec(),
            spin: f.shape.is_spin(),
            rank: f.shape.rank(),
            rows: f.rows().iter().map(|r| r.iter().map(|s| s.to_signed()).collect()).collect(),
            half: f.shape.is_spin().then(|| f.halves().iter().map(|s| s.to_signed()).collect()),
        }
    }
}

impl FillingJson {
    pub fn shape(&self) -> Result<Shape> {
        Shape::new(Partition::new(self.shape.clone())?, self.spin, self.rank)
    }

    /// Decodes against an existing shape, reusing its allocation.
    pub fn to_filling(&self, shape: &Arc<Shape>) -> Result<Filling> {
        if self.shape()? != **shape {
            return Err(Error::Mismatch(format!("filling shape {:?} vs {shape}", self.shape)));
        }
        Filling::from_signed(shape.clone(), &self.rows, self.half.as_deref())
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FillingJson::deserialize(d)?;
        let shape = Arc::new(j.shape().map_err(serde::de::Error::custom)?);
        j.to_filling(&shape).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize], rank: usize) -> Arc<Shape> {
        Arc::new(Shape::plain(parts, rank).unwrap())
    }

    fn fill(sh: &Arc<Shape>, rows: &[Vec<i32>]) -> Filling {
        Filling::from_signed(sh.clone(), rows, None).unwrap()
    }

    #[test]
    fn canonicalize_sorts_with_sign() {
        let sh = shape(&[1, 1], 2);
        let (f, sign) = fill(&sh, &[vec![2], vec![1]]).canonicalize().unwrap();
        assert_eq!(sign, -1);
        assert_eq!(f, fill(&sh, &[vec![1], vec![2]]));
        assert!(fill(&sh, &[vec![1], vec![1]]).canonicalize().is_none());
        let g = fill(&sh, &[vec![1], vec![-1]]);
        assert_eq!(g.canonicalize().unwrap(), (g.clone(), 1));
    }

    #[test]
    fn weights() {
        let sh = shape(&[2, 1], 2);
        assert_eq!(fill(&sh, &[vec![1, -1], vec![2]]).weight(), Weight(vec![0, 2]));
        let sh = shape(&[2], 1);
        assert_eq!(fill(&sh, &[vec![1, 0]]).weight(), Weight(vec![2]));
        let sp = Arc::new(Shape::spin(&[1], 1).unwrap());
        let f = Filling::from_signed(sp, &[vec![1]], Some(&[1])).unwrap();
        assert_eq!(f.weight(), Weight(vec![3]));
    }

    #[test]
    fn order_examples() {
        let sh = shape(&[2], 2);
        let a = fill(&sh, &[vec![1, 2]]);
        let b = fill(&sh, &[vec![2, 2]]);
        assert_eq!(a.filling_order(&b).unwrap(), Ordering::Less);
        assert_eq!(a.filling_order(&a).unwrap(), Ordering::Equal);
        let sh = shape(&[1, 1], 2);
        let c = fill(&sh, &[vec![1], vec![-1]]);
        let d = fill(&sh, &[vec![2], vec![-2]]);
        assert_eq!(c.filling_order(&d).unwrap(), Ordering::Less);
        assert!(a.filling_order(&c).is_err());
    }

    #[test]
    fn malformed_inputs() {
        let sh = shape(&[2, 1], 2);
        assert!(Filling::from_signed(sh.clone(), &[vec![1]], None).is_err());
        assert!(Filling::from_signed(sh, &[vec![1, 1], vec![]], None).is_err());
        let sp = Arc::new(Shape::spin(&[1], 2).unwrap());
        assert!(Filling::from_signed(sp.clone(), &[vec![1]], None).is_err());
        assert!(Filling::from_signed(sp, &[vec![1]], Some(&[2, 1])).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sp = Arc::new(Shape::spin(&[2], 2).unwrap());
        let f = Filling::from_signed(sp, &[vec![1, -2]], Some(&[-1, 2])).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"shape":[2],"spin":true,"rank":2,"rows":[[1,-2]],"half":[-1,2]}"#);
        let g: Filling = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }
}
