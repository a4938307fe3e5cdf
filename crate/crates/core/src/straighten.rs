//! Rewriting fillings into combinations of basis tableaux.
//!
//! Combinatorial straighteners pop the smallest pending filling, and either
//! keep it (a basis tableau) or replace it by the other terms of a relation
//! in which it occurs. Replacement terms are expected to be strictly higher
//! in the filling order; any that are not are recorded as order violations.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{is_basis_member_with, is_semistandard, spin_parity_ok_at, BasisFamily, FamilyOptions};
use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::formal::{FormalSum, FormalSumJson, Rational};
use crate::group::Group;
use crate::relations::{garnir_relation, pin_raw_signed, symplectic_raw, PinSigns};
use crate::shape::BoxPos;
use crate::tensor::{OracleConfig, SpanCache};

/// Default cap on rewrite steps per input term.
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;

const TRACE_LEN: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Combinatorial,
    LinearSolve,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Combinatorial => "combinatorial",
            Method::LinearSolve => "linear-solve",
        })
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "combinatorial" => Ok(Method::Combinatorial),
            "linear-solve" => Ok(Method::LinearSolve),
            _ => Err(Error::InvalidArgument(format!("unknown method {s:?} (combinatorial, linear-solve)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StraightenReport {
    pub input: FormalSum,
    pub output: FormalSum,
    pub steps: u64,
    pub method: Method,
    /// Rewrite steps that produced a term not above the term replaced.
    pub order_violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StraightenReportJson {
    pub input: FormalSumJson,
    pub output: FormalSumJson,
    pub steps: u64,
    pub method: Method,
    pub order_violations: usize,
}

impl StraightenReport {
    pub fn to_json(&self) -> StraightenReportJson {
        StraightenReportJson {
            input: self.input.to_json(),
            output: self.output.to_json(),
            steps: self.steps,
            method: self.method,
            order_violations: self.order_violations.len(),
        }
    }
}

/// `Some(v)` means the filling equals `v`; `None` means it is terminal.
type Step<'a> = dyn Fn(&Filling) -> Result<Option<FormalSum>> + 'a;

fn rewrite(x: &FormalSum, cap: u64, step: &Step<'_>) -> Result<StraightenReport> {
    let mut pending = x.clone();
    let mut output = FormalSum::new();
    let mut steps = 0u64;
    let budget = cap.saturating_mul(x.len().max(1) as u64);
    let mut trace: VecDeque<String> = VecDeque::with_capacity(TRACE_LEN);
    let mut violations = Vec::new();
    while let Some((t, c)) = pending.pop_first() {
        match step(&t)? {
            None => output.add_canonical(t, &c),
            Some(v) => {
                steps += 1;
                if trace.len() == TRACE_LEN {
                    trace.pop_front();
                }
                trace.push_back(t.to_string());
                if steps > budget {
                    return Err(Error::IterationCap { cap, trace: trace.into() });
                }
                for (u, a) in &v {
                    if u <= &t {
                        violations.push(format!("{t} -> {u}"));
                    }
                    pending.add_canonical(u.clone(), &(a * &c));
                }
            }
        }
    }
    Ok(StraightenReport {
        input: x.clone(),
        output,
        steps,
        method: Method::Combinatorial,
        order_violations: violations,
    })
}

/// `t = −(v − c·t)/c` for a relation `v` with `t`-coefficient `c`.
fn solve_for(t: &Filling, v: FormalSum) -> Result<FormalSum> {
    let c = v.coeff(t);
    if c.is_zero() {
        return Err(Error::Internal(format!("relation used to rewrite {t} does not contain it")));
    }
    let mut rest = v;
    rest.remove(t);
    Ok(rest.scaled(&(-Rational::one() / c)))
}

/// First row descent between adjacent columns: leftmost column, then
/// topmost row.
fn descent(t: &Filling) -> Option<(usize, usize)> {
    let sh = t.shape();
    for c in 0..sh.num_cols().saturating_sub(1) {
        for r in 0..sh.col_len(c + 1) {
            if t.entry(BoxPos::new(r, c)) > t.entry(BoxPos::new(r, c + 1)) {
                return Some((c, r));
            }
        }
    }
    None
}

fn gl_step(t: &Filling) -> Result<Option<FormalSum>> {
    match descent(t) {
        None => Ok(None),
        Some((c, r)) => solve_for(t, garnir_relation(t, c, r)?).map(Some),
    }
}

/// Straightens into semistandard tableaux using exchange relations only.
pub fn gl_straighten(x: &FormalSum, cap: u64) -> Result<StraightenReport> {
    rewrite(x, cap, &gl_step)
}

/// Leftmost column, then topmost box, whose entry is below its row index.
fn symplectic_violation(t: &Filling) -> Option<BoxPos> {
    t.shape().boxes().find(|b| t.entry(*b) < crate::alphabet::Symbol::plain(b.row + 1))
}

fn symplectic_step(t: &Filling, n: usize) -> Result<Option<FormalSum>> {
    if !is_semistandard(t) {
        return gl_step(t);
    }
    let Some(b) = symplectic_violation(t) else { return Ok(None) };
    let r = b.row;
    let expected = r >= 1
        && t.entry(b) == crate::alphabet::Symbol::barred(r)
        && t.entry(BoxPos::new(r - 1, b.col)) == crate::alphabet::Symbol::plain(r);
    if !expected {
        return Err(Error::RewritePattern(format!(
            "symplectic violation at {b} of {t} is not a pair {r}, {r}\u{304} in consecutive rows"
        )));
    }
    let v = symplectic_raw(t, BoxPos::new(r - 1, b.col), b, n)?.canonical();
    solve_for(t, v).map(Some)
}

/// Straightens into symplectic tableaux over the alphabet of rank `n`.
pub fn symplectic_straighten(x: &FormalSum, n: usize, cap: u64) -> Result<StraightenReport> {
    rewrite(x, cap, &|t| symplectic_step(t, n))
}

fn pin_step(t: &Filling, odd: bool, signs: PinSigns) -> Result<Option<FormalSum>> {
    if !is_semistandard(t) {
        return gl_step(t);
    }
    let sh = t.shape();
    let bad = sh.boxes().find(|&b| t.entry(b) < crate::alphabet::Symbol::plain(b.row + 1) || !spin_parity_ok_at(t, b));
    let Some(b) = bad else { return Ok(None) };
    let s = t.entry(b);
    // the box whose entry is the bar of the half entry of its index
    let chosen = if spin_parity_ok_at(t, b) {
        let r = b.row;
        let upper = BoxPos::new(r.wrapping_sub(1), b.col);
        let pattern =
            r >= 1 && s == crate::alphabet::Symbol::barred(r) && t.entry(upper) == crate::alphabet::Symbol::plain(r);
        if !pattern {
            return Err(Error::RewritePattern(format!(
                "symplectic violation at {b} of {t} is not a pair {r}, {r}\u{304} in consecutive rows"
            )));
        }
        if t.half(r - 1) == crate::alphabet::Symbol::plain(r) {
            b
        } else {
            upper
        }
    } else {
        b
    };
    let x = t.entry(chosen);
    let l = x.index();
    if x.is_zero() || l == 0 || l > sh.rank() || t.half(l - 1) != x.bar() {
        return Err(Error::RewritePattern(format!("no Pin relation isolates {t} at {chosen}")));
    }
    let flipped = t.with_half_flipped(l - 1);
    let v = pin_raw_signed(&flipped, chosen, odd, signs)?.canonical();
    solve_for(t, v).map(Some)
}

/// Straightens into Pin tableaux of a spin shape.
pub fn pin_straighten(x: &FormalSum, odd: bool, cap: u64) -> Result<StraightenReport> {
    pin_straighten_with(x, odd, PinSigns::default(), cap)
}

pub fn pin_straighten_with(x: &FormalSum, odd: bool, signs: PinSigns, cap: u64) -> Result<StraightenReport> {
    if x.shape().is_some_and(|s| !s.is_spin()) {
        return Err(Error::Mismatch("Pin straightening needs a spin shape".into()));
    }
    rewrite(x, cap, &|t| pin_step(t, odd, signs))
}

/// Straightening front end for one basis family and rank.
#[derive(Clone)]
pub struct Straightener {
    family: BasisFamily,
    rank: usize,
    cap: u64,
    cache: Arc<SpanCache>,
}

impl Straightener {
    pub fn new(family: BasisFamily, rank: usize) -> Self {
        Straightener { family, rank, cap: DEFAULT_STEP_CAP, cache: Arc::new(SpanCache::new(OracleConfig::default())) }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }

    /// Shares elimination results for the linear-solve path.
    pub fn with_cache(mut self, cache: Arc<SpanCache>) -> Self {
        self.cache = cache;
        self
    }

    pub fn family(&self) -> BasisFamily {
        self.family
    }

    pub fn options(&self) -> &FamilyOptions {
        &self.cache.config().family
    }

    fn signs(&self) -> PinSigns {
        self.cache.config().relations.pin_signs
    }

    pub fn default_method(&self) -> Method {
        match self.family {
            BasisFamily::GlSemistandard | BasisFamily::Symplectic | BasisFamily::PinOdd | BasisFamily::PinEven => {
                Method::Combinatorial
            }
            _ => Method::LinearSolve,
        }
    }

    fn check_input(&self, x: &FormalSum) -> Result<()> {
        let alphabet = self.family.alphabet(self.rank);
        for f in x.keys() {
            if f.shape().rank() != self.rank {
                return Err(Error::Mismatch(format!("{f} has rank {} not {}", f.shape().rank(), self.rank)));
            }
            self.family.check_shape(f.shape())?;
            f.check_alphabet(&alphabet)?;
        }
        Ok(())
    }

    pub fn straighten(&self, x: &FormalSum) -> Result<StraightenReport> {
        self.straighten_with(x, self.default_method())
    }

    pub fn straighten_with(&self, x: &FormalSum, method: Method) -> Result<StraightenReport> {
        self.check_input(x)?;
        if self.family == BasisFamily::SundaramOdd {
            return Err(Error::Unsupported("Sundaram tableaux carry no relation system to straighten with".into()));
        }
        match method {
            Method::Combinatorial => match self.family {
                BasisFamily::GlSemistandard => gl_straighten(x, self.cap),
                BasisFamily::Symplectic => symplectic_straighten(x, self.rank, self.cap),
                BasisFamily::PinOdd => pin_straighten_with(x, true, self.signs(), self.cap),
                BasisFamily::PinEven => pin_straighten_with(x, false, self.signs(), self.cap),
                f => Err(Error::Unsupported(format!("no combinatorial straightener for {f}"))),
            },
            Method::LinearSolve => {
                let Some(shape) = x.shape() else {
                    return Ok(StraightenReport {
                        input: x.clone(),
                        output: FormalSum::new(),
                        steps: 0,
                        method,
                        order_violations: Vec::new(),
                    });
                };
                let span = self.cache.get(shape, Group::of_family(self.family))?;
                let output = span.express(x)?;
                Ok(StraightenReport { input: x.clone(), output, steps: 0, method, order_violations: Vec::new() })
            }
        }
    }

    /// True if every output key is a basis tableau.
    pub fn supported_on_basis(&self, x: &FormalSum) -> Result<bool> {
        for f in x.keys() {
            if !is_basis_member_with(f, self.family, self.options())? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
