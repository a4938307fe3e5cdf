use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multivariate Laurent polynomial with integer coefficients. Exponent
/// vectors are whatever unit the caller uses; weights here are doubled.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], 1)
    }

    pub fn monomial(exp: Vec<i32>, coeff: i64) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, i64> {
        &self.terms
    }

    pub fn coeff(&self, exp: &[i32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Vec<i32>, coeff: i64) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LaurentPoly, c: i64) {
        for (e, &a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Term with the lexicographically largest exponent.
    pub fn leading(&self) -> Option<(&Vec<i32>, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        let (dexp, dc) = divisor
            .leading()
            .map(|(e, c)| (e.clone(), c))
            .ok_or_else(|| Error::Internal("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.nvars);
        // Every quotient term is bounded below by lexmin(self) − lexmin(divisor);
        // anything past that bound means the division is not exact.
        let floor: Option<Vec<i32>> = match (self.terms.keys().next(), divisor.terms.keys().next()) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| x - y).collect()),
            _ => None,
        };
        while let Some((rexp, rc)) = rem.leading().map(|(e, c)| (e.clone(), c)) {
            if rc % dc != 0 {
                return Err(Error::Internal(format!("inexact coefficient division {rc}/{dc}")));
            }
            let qexp: Vec<i32> = rexp.iter().zip(&dexp).map(|(a, b)| a - b).collect();
            if let Some(fl) = &floor {
                if qexp < *fl {
                    return Err(Error::Internal("Laurent division leaves a remainder".into()));
                }
            }
            let t = LaurentPoly::monomial(qexp, rc / dc);
            rem.add_scaled(&t.mul(divisor), -1);
            quot.add_scaled(&t, 1);
        }
        Ok(quot)
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn eval_at_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitutes `x_n := 1`, leaving a polynomial in the first `n − 1`
    /// variables.
    pub fn drop_last_var(&self) -> LaurentPoly {
        assert!(self.nvars > 0);
        let mut out = LaurentPoly::zero(self.nvars - 1);
        for (e, &c) in &self.terms {
            out.add_term(e[..e.len() - 1].to_vec(), c);
        }
        out
    }

    /// Applies a signed permutation to exponents: new exponent `i` is
    /// `signs[i] * old[perm[i]]`.
    pub fn permute(&self, perm: &[usize], signs: &[i32]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            out.add_term((0..self.nvars).map(|i| signs[i] * e[perm[i]]).collect(), c);
        }
        out
    }

    pub fn to_json(&self) -> Vec<TermExp> {
        self.terms.iter().map(|(e, &c)| TermExp { exp: e.clone(), coeff: c }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermExp {
    pub exp: Vec<i32>,
    pub coeff: i64,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}x^{e:?}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
