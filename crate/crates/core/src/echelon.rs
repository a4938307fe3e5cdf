//! Exact sparse semi-echelon form over the rationals.
//!
//! Every stored row has a distinct pivot equal to its smallest column, with
//! pivot coefficient one. Incoming vectors are reduced against existing rows
//! in increasing column order, so callers control pivot priority through the
//! numbering of columns: low columns are eliminated first.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::formal::Rational;

pub type SparseVec = BTreeMap<u32, Rational>;

#[derive(Clone, Debug, Default)]
pub struct EchelonSpan {
    rows: HashMap<u32, Vec<(u32, Rational)>>,
}

impl EchelonSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.rows.contains_key(&col)
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.rows.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Stored rows as full vectors, ordered by pivot.
    pub fn rows(&self) -> Vec<SparseVec> {
        self.pivots()
            .into_iter()
            .map(|p| {
                let mut v: SparseVec = self.rows[&p].iter().cloned().collect();
                v.insert(p, Rational::one());
                v
            })
            .collect()
    }

    fn eliminate(&self, v: &mut SparseVec, stop_at_free: bool) -> Option<u32> {
        let mut cursor = 0u32;
        loop {
            let c = match v.range(cursor..).next() {
                Some((&c, _)) => c,
                None => return None,
            };
            if let Some(row) = self.rows.get(&c) {
                let a = v.remove(&c).expect("present");
                for (k, x) in row {
                    let e = v.entry(*k).or_insert_with(Rational::zero);
                    *e -= &a * x;
                    if e.is_zero() {
                        v.remove(k);
                    }
                }
            } else if stop_at_free {
                return Some(c);
            }
            cursor = c.checked_add(1)?;
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        v.retain(|_, c| !c.is_zero());
        match self.eliminate(&mut v, true) {
            None => false,
            Some(p) => {
                let inv = v.remove(&p).expect("pivot present").recip();
                let row = v.into_iter().map(|(k, c)| (k, c * &inv)).collect();
                self.rows.insert(p, row);
                true
            }
        }
    }

    /// Full reduction: the result has no entry on a pivot column and differs
    /// from `v` by an element of the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        v.retain(|_, c| !c.is_zero());
        self.eliminate(&mut v, false);
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Rank of `vectors` modulo the prime `p`, or `None` if some denominator
/// vanishes mod `p`. Used to cross-check exact ranks.
pub fn modular_rank(vectors: &[SparseVec], p: u64) -> Option<usize> {
    let pb = BigInt::from(p);
    let to_mod = |q: &Rational| -> Option<u64> {
        let n = q.numer().mod_floor(&pb).to_u64()?;
        let d = q.denom().mod_floor(&pb).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(mulmod(n, powmod(d, p - 2, p), p))
    };
    let mut rows: HashMap<u32, BTreeMap<u32, u64>> = HashMap::new();
    for v in vectors {
        let mut w: BTreeMap<u32, u64> = BTreeMap::new();
        for (k, q) in v {
            let x = to_mod(q)?;
            if x != 0 {
                w.insert(*k, x);
            }
        }
        while let Some((&c, &a)) = w.iter().next() {
            match rows.get(&c) {
                Some(row) => {
                    for (k, x) in row {
                        let e = w.entry(*k).or_insert(0);
                        *e = (*e + p - mulmod(a, *x, p)) % p;
                        if *e == 0 {
                            w.remove(k);
                        }
                    }
                }
                None => {
                    let inv = powmod(a, p - 2, p);
                    let row = w.iter().map(|(k, x)| (*k, mulmod(*x, inv, p))).collect();
                    rows.insert(c, row);
                    break;
                }
            }
        }
    }
    Some(rows.len())
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Primes used for modular rank cross-checks.
pub const CHECK_PRIMES: [u64; 3] = [1_000_000_007, 998_244_353, 2_147_483_647];

/// Largest absolute numerator or denominator among the stored rows; a cheap
/// gauge of coefficient growth.
pub fn max_height(span: &EchelonSpan) -> BigInt {
    let mut h = BigInt::zero();
    for row in span.rows.values() {
        for (_, c) in row {
            h = h.max(c.numer().abs()).max(c.denom().clone());
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::rat;
    use proptest::prelude::*;

    fn vec_of(entries: &[(u32, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, rat(c))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = EchelonSpan::new();
        assert!(s.insert(vec_of(&[(0, 1), (1, 1)])));
        assert!(s.insert(vec_of(&[(1, 1), (2, 1)])));
        assert!(!s.insert(vec_of(&[(0, 1), (2, -1)])));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&vec_of(&[(0, 2), (2, -2)])));
        assert!(!s.contains(&vec_of(&[(2, 1)])));
        let r = s.reduce(vec_of(&[(0, 1)]));
        assert_eq!(r, vec_of(&[(2, 1)]));
    }

    fn small_vecs() -> impl Strategy<Value = Vec<Vec<(u32, i64)>>> {
        prop::collection::vec(prop::collection::vec((0u32..8, -3i64..4), 0..5), 0..10)
    }

    proptest! {
        #[test]
        fn exact_rank_matches_modular(vs in small_vecs()) {
            let vs: Vec<SparseVec> = vs.iter().map(|v| {
                let mut m = SparseVec::new();
                for &(k, c) in v { *m.entry(k).or_insert_with(Rational::zero) += rat(c); }
                m.retain(|_, c| !c.is_zero());
                m
            }).collect();
            let mut s = EchelonSpan::new();
            for v in &vs { s.insert(v.clone()); }
            for v in &vs { prop_assert!(s.contains(v)); }
            prop_assert_eq!(Some(s.rank()), modular_rank(&vs, CHECK_PRIMES[0]));
            let rows = s.rows();
            let mut again = EchelonSpan::new();
            for v in &vs { again.insert(v.clone()); }
            prop_assert_eq!(rows, again.rows());
        }
    }
}
