use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts (trailing zeros dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        (0..n.max(self.len())).map(|i| self.part(i)).collect()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((0..width).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// All partitions of `size` with at most `max_parts` parts, in reverse
    /// lexicographic order.
    pub fn all_of_size(size: usize, max_parts: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_parts, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|λ| ≤ max_size` and at most `max_parts` parts,
    /// ordered by size and then reverse lexicographically.
    pub fn up_to_size(max_size: usize, max_parts: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|r| Self::all_of_size(r, max_parts)).collect()
    }

    /// Parses `"3,1"` (empty string or `"0"` for the empty partition).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A box of a Young diagram, 0-indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxPos {
    pub row: usize,
    pub col: usize,
}

impl BoxPos {
    pub fn new(row: usize, col: usize) -> Self {
        BoxPos { row, col }
    }
}

impl fmt::Display for BoxPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A Young diagram, optionally preceded by a column of `rank` half-boxes.
///
/// Fillings store their entries as one word laid out so that comparing
/// words lexicographically compares the rightmost column first; see
/// [`Shape::word_index`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    partition: Partition,
    spin: bool,
    rank: usize,
    col_lens: Vec<usize>,
    col_start: Vec<usize>,
}

impl Shape {
    pub fn new(partition: Partition, spin: bool, rank: usize) -> Result<Self> {
        if spin && partition.len() > rank {
            return Err(Error::InvalidShape(format!("spin shape {partition} has more than rank {rank} rows")));
        }
        if spin && rank == 0 {
            return Err(Error::InvalidShape("spin shape needs rank ≥ 1".into()));
        }
        let col_lens = partition.conjugate().0;
        let mut col_start = vec![0; col_lens.len()];
        let mut offset = 0;
        for c in (0..col_lens.len()).rev() {
            col_start[c] = offset;
            offset += col_lens[c];
        }
        Ok(Shape { partition, spin, rank, col_lens, col_start })
    }

    pub fn plain(parts: &[usize], rank: usize) -> Result<Self> {
        Shape::new(Partition::new(parts.to_vec())?, false, rank)
    }

    pub fn spin(parts: &[usize], rank: usize) -> Result<Self> {
        Shape::new(Partition::new(parts.to_vec())?, true, rank)
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn is_spin(&self) -> bool {
        self.spin
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of full boxes `r = |λ|`.
    pub fn size(&self) -> usize {
        self.partition.size()
    }

    pub fn half_len(&self) -> usize {
        if self.spin {
            self.rank
        } else {
            0
        }
    }

    pub fn word_len(&self) -> usize {
        self.size() + self.half_len()
    }

    pub fn num_cols(&self) -> usize {
        self.col_lens.len()
    }

    pub fn num_rows(&self) -> usize {
        self.partition.len()
    }

    pub fn col_len(&self, c: usize) -> usize {
        self.col_lens.get(c).copied().unwrap_or(0)
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.partition.part(r)
    }

    pub fn col_lens(&self) -> &[usize] {
        &self.col_lens
    }

    pub fn contains(&self, b: BoxPos) -> bool {
        b.col < self.row_len(b.row)
    }

    /// Full boxes in column-major order: columns left to right, each top to
    /// bottom.
    pub fn boxes(&self) -> impl Iterator<Item = BoxPos> + '_ {
        self.col_lens.iter().enumerate().flat_map(|(c, &len)| (0..len).map(move |r| BoxPos::new(r, c)))
    }

    /// Position of a full box inside a filling's word. Columns are stored
    /// right to left, each top to bottom; half-box entries follow them.
    pub fn word_index(&self, b: BoxPos) -> usize {
        debug_assert!(self.contains(b), "box {b} outside {self}");
        self.col_start[b.col] + b.row
    }

    pub(crate) fn col_range(&self, c: usize) -> std::ops::Range<usize> {
        self.col_start[c]..self.col_start[c] + self.col_lens[c]
    }

    pub fn half_index(&self, i: usize) -> usize {
        debug_assert!(self.spin && i < self.rank);
        self.size() + i
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)?;
        if self.spin {
            write!(f, "+spin")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_validate_and_conjugate() {
        assert!(Partition::new(vec![1, 2]).is_err());
        let p = Partition::new(vec![3, 1, 0]).unwrap();
        assert_eq!(p.parts(), &[3, 1]);
        assert_eq!(p.size(), 4);
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(Partition::parse("2,2").unwrap().parts(), &[2, 2]);
        assert!(Partition::parse("2,x").is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(Partition::all_of_size(4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(Partition::up_to_size(4, 2).len(), 9);
        assert_eq!(Partition::all_of_size(0, 0), vec![Partition::empty()]);
    }

    #[test]
    fn word_layout_puts_rightmost_column_first() {
        let s = Shape::plain(&[2, 1], 2).unwrap();
        assert_eq!(s.word_index(BoxPos::new(0, 1)), 0);
        assert_eq!(s.word_index(BoxPos::new(0, 0)), 1);
        assert_eq!(s.word_index(BoxPos::new(1, 0)), 2);
        let boxes: Vec<_> = s.boxes().collect();
        assert_eq!(boxes, vec![BoxPos::new(0, 0), BoxPos::new(1, 0), BoxPos::new(0, 1)]);
        let sp = Shape::spin(&[1], 2).unwrap();
        assert_eq!(sp.word_len(), 3);
        assert_eq!(sp.half_index(1), 2);
        assert!(Shape::spin(&[1, 1, 1], 2).is_err());
    }
}
