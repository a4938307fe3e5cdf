//! Weyl dimensions, Weyl characters and branching multiplicities for the
//! classical root systems. All weights are doubled so that spin weights stay
//! integral.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::enumerate::BasisFamily;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::shape::Shape;

/// Largest rank for which characters (Weyl group sums) are computed.
pub const MAX_CHARACTER_RANK: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

/// A root system of rank `n` in the standard coordinates `e_1, …, e_n`;
/// type `A` stands for `gl(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootSystem {
    pub family: RootFamily,
    pub rank: usize,
}

impl RootSystem {
    pub fn new(family: RootFamily, rank: usize) -> Self {
        RootSystem { family, rank }
    }

    /// Positive roots as integer vectors.
    pub fn positive_roots(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let unit = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut minus = unit(i);
                minus[j] = -1;
                out.push(minus);
                if self.family != RootFamily::A {
                    let mut plus = unit(i);
                    plus[j] = 1;
                    out.push(plus);
                }
            }
            match self.family {
                RootFamily::B => out.push(unit(i)),
                RootFamily::C => out.push(unit(i).into_iter().map(|x| 2 * x).collect()),
                _ => {}
            }
        }
        out
    }

    /// Doubled half-sum of positive roots.
    pub fn rho_doubled(&self) -> Vec<i32> {
        let n = self.rank as i32;
        (0..n)
            .map(|i| match self.family {
                RootFamily::A | RootFamily::D => 2 * (n - 1 - i),
                RootFamily::B => 2 * (n - i) - 1,
                RootFamily::C => 2 * (n - i),
            })
            .collect()
    }

    /// Weyl group elements as `(perm, signs, det)`, acting by
    /// `(w·v)_i = signs[i] · v[perm[i]]`.
    pub fn weyl_group(&self) -> Vec<(Vec<usize>, Vec<i32>, i32)> {
        let n = self.rank;
        let mut perms = vec![(Vec::new(), 1)];
        for k in 0..n {
            let mut next = Vec::new();
            for (p, s) in &perms {
                for pos in 0..=k {
                    let mut q: Vec<usize> = p.clone();
                    q.insert(pos, k);
                    // inserting k at `pos` passes k − pos larger-indexed slots
                    let sign = if (k - pos) % 2 == 0 { *s } else { -*s };
                    next.push((q, sign));
                }
            }
            perms = next;
        }
        let mut out = Vec::new();
        for (p, s) in perms {
            if self.family == RootFamily::A {
                out.push((p, vec![1; n], s));
                continue;
            }
            for mask in 0u32..(1 << n) {
                let flips = mask.count_ones();
                if self.family == RootFamily::D && flips % 2 == 1 {
                    continue;
                }
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                let det = if flips % 2 == 0 { s } else { -s };
                out.push((p.clone(), signs, det));
            }
        }
        out
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A doubled highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HighestWeight {
    pub doubled: Vec<i32>,
}

impl HighestWeight {
    pub fn new(doubled: Vec<i32>) -> Self {
        HighestWeight { doubled }
    }

    /// `λ` padded to `n` coordinates.
    pub fn from_partition(parts: &[usize], n: usize) -> Result<Self> {
        if parts.iter().filter(|&&p| p > 0).count() > n {
            return Err(Error::InvalidArgument(format!("{parts:?} has more than {n} parts")));
        }
        Ok(HighestWeight { doubled: (0..n).map(|i| 2 * parts.get(i).copied().unwrap_or(0) as i32).collect() })
    }

    /// `λ + (½, …, ½)`.
    pub fn spin(parts: &[usize], n: usize) -> Result<Self> {
        let mut hw = Self::from_partition(parts, n)?;
        hw.doubled.iter_mut().for_each(|x| *x += 1);
        Ok(hw)
    }

    /// The weight with its last coordinate negated (`λ⁻`).
    pub fn minus(&self) -> Self {
        let mut d = self.doubled.clone();
        if let Some(l) = d.last_mut() {
            *l = -*l;
        }
        HighestWeight { doubled: d }
    }

    pub fn check_dominant(&self, rs: &RootSystem) -> Result<()> {
        let d = &self.doubled;
        if d.len() != rs.rank {
            return Err(Error::InvalidArgument(format!("weight {d:?} has the wrong length for {rs}")));
        }
        let n = d.len();
        let mut ok = d.windows(2).take(n.saturating_sub(2)).all(|w| w[0] >= w[1]);
        if n >= 2 {
            ok &= match rs.family {
                RootFamily::D => d[n - 2] >= d[n - 1].abs(),
                _ => d[n - 2] >= d[n - 1],
            };
        }
        if n >= 1 && matches!(rs.family, RootFamily::B | RootFamily::C) {
            ok &= d[n - 1] >= 0;
        }
        // integrality: all coordinates share the parity of a spin or a plain weight
        if matches!(rs.family, RootFamily::A | RootFamily::C) {
            ok &= d.iter().all(|x| x % 2 == 0);
        } else if n >= 1 {
            ok &= d.iter().all(|x| (x - d[0]) % 2 == 0);
        }
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("weight {d:?} (doubled) is not dominant for {rs}")))
        }
    }
}

/// `Π_α ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dim(rs: &RootSystem, hw: &HighestWeight) -> Result<u64> {
    hw.check_dominant(rs)?;
    let rho = rs.rho_doubled();
    let mut q = BigRational::one();
    for a in rs.positive_roots() {
        let dot = |v: &[i32]| -> i64 { v.iter().zip(&a).map(|(x, y)| i64::from(*x) * i64::from(*y)).sum() };
        let shifted: Vec<i32> = hw.doubled.iter().zip(&rho).map(|(x, r)| x + r).collect();
        q *= BigRational::new(BigInt::from(dot(&shifted)), BigInt::from(dot(&rho)));
    }
    if !q.is_integer() {
        return Err(Error::Internal(format!("non-integral Weyl dimension {q}")));
    }
    q.to_integer().to_u64().ok_or_else(|| Error::Internal("dimension overflow".into()))
}

fn alternant(rs: &RootSystem, v: &[i32], group: &[(Vec<usize>, Vec<i32>, i32)]) -> LaurentPoly {
    let mut p = LaurentPoly::zero(rs.rank);
    for (perm, signs, det) in group {
        p.add_term((0..rs.rank).map(|i| signs[i] * v[perm[i]]).collect(), i64::from(*det));
    }
    p
}

/// Weyl character with doubled exponents.
pub fn character(rs: &RootSystem, hw: &HighestWeight) -> Result<LaurentPoly> {
    hw.check_dominant(rs)?;
    if rs.rank > MAX_CHARACTER_RANK {
        return Err(Error::Unsupported(format!("characters above rank {MAX_CHARACTER_RANK}")));
    }
    if rs.rank == 0 {
        return Ok(LaurentPoly::one(0));
    }
    let group = rs.weyl_group();
    let rho = rs.rho_doubled();
    let shifted: Vec<i32> = hw.doubled.iter().zip(&rho).map(|(x, r)| x + r).collect();
    alternant(rs, &shifted, &group).div_exact(&alternant(rs, &rho, &group))
}

/// Dimension of the orthogonal group representation labelled by `λ`; the
/// primed label exists only for odd dimension or `λ_n = 0`.
pub fn o_group_dim(odd: bool, parts: &[usize], n: usize, primed: bool) -> Result<u64> {
    let hw = HighestWeight::from_partition(parts, n)?;
    if odd {
        return weyl_dim(&RootSystem::new(RootFamily::B, n), &hw);
    }
    let d = RootSystem::new(RootFamily::D, n);
    let last = hw.doubled.last().copied().unwrap_or(0);
    if last > 0 {
        if primed {
            return Err(Error::InvalidArgument(format!("no primed label for {parts:?} with last part nonzero")));
        }
        Ok(weyl_dim(&d, &hw)? + weyl_dim(&d, &hw.minus())?)
    } else {
        weyl_dim(&d, &hw)
    }
}

/// Character of `W_λ` restricted to the torus: `D(λ) + D(λ⁻)` when the last
/// coordinate is nonzero, else `D(λ)`.
pub fn even_orthogonal_character(hw: &HighestWeight) -> Result<LaurentPoly> {
    let d = RootSystem::new(RootFamily::D, hw.doubled.len());
    let mut ch = character(&d, hw)?;
    if hw.doubled.last().is_some_and(|&x| x != 0) {
        ch.add_scaled(&character(&d, &hw.minus())?, 1);
    }
    Ok(ch)
}

/// The character the weight polynomial of a basis family should equal.
pub fn family_character(family: BasisFamily, shape: &Shape) -> Result<LaurentPoly> {
    let n = shape.rank();
    let parts = shape.partition().parts();
    let sys = |f| RootSystem::new(f, n);
    match family {
        BasisFamily::GlSemistandard => character(&sys(RootFamily::A), &HighestWeight::from_partition(parts, n)?),
        BasisFamily::Symplectic => character(&sys(RootFamily::C), &HighestWeight::from_partition(parts, n)?),
        BasisFamily::OrthogonalOdd | BasisFamily::SundaramOdd => {
            character(&sys(RootFamily::B), &HighestWeight::from_partition(parts, n)?)
        }
        BasisFamily::OrthogonalEven => even_orthogonal_character(&HighestWeight::from_partition(parts, n)?),
        BasisFamily::PinOdd => character(&sys(RootFamily::B), &HighestWeight::spin(parts, n)?),
        BasisFamily::PinEven => even_orthogonal_character(&HighestWeight::spin(parts, n)?),
    }
}

/// Dimension predicted for a family's module.
pub fn family_dim(family: BasisFamily, shape: &Shape) -> Result<u64> {
    let n = shape.rank();
    let parts = shape.partition().parts();
    let sys = |f| RootSystem::new(f, n);
    match family {
        BasisFamily::GlSemistandard => weyl_dim(&sys(RootFamily::A), &HighestWeight::from_partition(parts, n)?),
        BasisFamily::Symplectic => weyl_dim(&sys(RootFamily::C), &HighestWeight::from_partition(parts, n)?),
        BasisFamily::OrthogonalOdd | BasisFamily::SundaramOdd => o_group_dim(true, parts, n, false),
        BasisFamily::OrthogonalEven => o_group_dim(false, parts, n, false),
        BasisFamily::PinOdd => weyl_dim(&sys(RootFamily::B), &HighestWeight::spin(parts, n)?),
        BasisFamily::PinEven => {
            let hw = HighestWeight::spin(parts, n)?;
            let d = sys(RootFamily::D);
            Ok(weyl_dim(&d, &hw)? + weyl_dim(&d, &hw.minus())?)
        }
    }
}

// ---------------------------------------------------------------------------
// Branching

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BranchRule {
    /// `Sp(2n) → Sp(2n−2)`.
    CToC,
    /// `O(2n+1) → O(2n)`.
    BToD,
    /// `O(2n) → O(2n−1)`.
    DToB,
    /// `O(2n) → O(2n−2)`.
    DToD,
}

impl BranchRule {
    pub const ALL: [BranchRule; 4] = [BranchRule::CToC, BranchRule::BToD, BranchRule::DToB, BranchRule::DToD];

    pub fn name(self) -> &'static str {
        match self {
            BranchRule::CToC => "c-to-c",
            BranchRule::BToD => "b-to-d",
            BranchRule::DToB => "d-to-b",
            BranchRule::DToD => "d-to-d",
        }
    }

    pub fn target_rank(self, n: usize) -> usize {
        match self {
            BranchRule::BToD => n,
            _ => n - 1,
        }
    }
}

impl FromStr for BranchRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BranchRule::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown branching rule {s:?}")))
    }
}

/// One constituent of a restriction. Labels are partitions padded to the
/// target rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BranchTerm {
    pub mu: Vec<usize>,
    pub mult: u64,
    /// The torus cannot tell `W_μ` from `W_μ'` for this label.
    pub unresolved_prime: bool,
}

/// Canonical form for comparison: sorted, merged, zero multiplicities
/// dropped.
pub fn normalize_terms(mut terms: Vec<BranchTerm>) -> Vec<BranchTerm> {
    terms.sort();
    let mut out: Vec<BranchTerm> = Vec::new();
    for t in terms {
        match out.last_mut() {
            Some(l) if l.mu == t.mu && l.unresolved_prime == t.unresolved_prime => l.mult += t.mult,
            _ => out.push(t),
        }
    }
    out.retain(|t| t.mult > 0);
    out
}

fn source_character(rule: BranchRule, hw: &HighestWeight) -> Result<LaurentPoly> {
    let n = hw.doubled.len();
    match rule {
        BranchRule::CToC => character(&RootSystem::new(RootFamily::C, n), hw),
        BranchRule::BToD => character(&RootSystem::new(RootFamily::B, n), hw),
        BranchRule::DToB | BranchRule::DToD => even_orthogonal_character(hw),
    }
}

fn undouble(doubled: &[i32]) -> Result<Vec<usize>> {
    doubled
        .iter()
        .map(|&x| {
            if x < 0 || x % 2 != 0 {
                Err(Error::Internal(format!("unexpected constituent weight {doubled:?}")))
            } else {
                Ok((x / 2) as usize)
            }
        })
        .collect()
}

/// Restriction multiplicities by character specialization and greedy
/// peeling of lexicographically largest dominant weights.
pub fn branch_by_character(rule: BranchRule, parts: &[usize], n: usize) -> Result<Vec<BranchTerm>> {
    if n == 0 || (rule == BranchRule::DToD && n < 2) {
        return Err(Error::InvalidArgument(format!("{} needs a larger rank than {n}", rule.name())));
    }
    let hw = HighestWeight::from_partition(parts, n)?;
    let mut rest = source_character(rule, &hw)?;
    if rule != BranchRule::BToD {
        rest = rest.drop_last_var();
    }
    let m = rule.target_rank(n);
    let mut out = Vec::new();
    while let Some((exp, c)) = rest.leading().map(|(e, c)| (e.clone(), c)) {
        if c < 0 {
            return Err(Error::Internal(format!("negative multiplicity {c} at {exp:?} while peeling")));
        }
        let top = HighestWeight::new(exp.clone());
        let (target, unresolved) = match rule {
            BranchRule::CToC => (character(&RootSystem::new(RootFamily::C, m), &top)?, false),
            BranchRule::DToB => (character(&RootSystem::new(RootFamily::B, m), &top)?, false),
            BranchRule::BToD | BranchRule::DToD => {
                top.check_dominant(&RootSystem::new(RootFamily::D, m))?;
                if exp.last().is_some_and(|&x| x < 0) {
                    return Err(Error::Internal(format!("unpaired weight {exp:?} while peeling")));
                }
                (even_orthogonal_character(&top)?, m == 0 || exp[m - 1] == 0)
            }
        };
        rest.add_scaled(&target, -c);
        out.push(BranchTerm { mu: undouble(&exp)?, mult: c as u64, unresolved_prime: unresolved });
    }
    Ok(normalize_terms(out))
}

/// Dimension of a constituent of `rule` labelled `mu`.
pub fn target_dim(rule: BranchRule, mu: &[usize]) -> Result<u64> {
    let m = mu.len();
    match rule {
        BranchRule::CToC => weyl_dim(&RootSystem::new(RootFamily::C, m), &HighestWeight::from_partition(mu, m)?),
        BranchRule::DToB => o_group_dim(true, mu, m, false),
        BranchRule::BToD | BranchRule::DToD => o_group_dim(false, mu, m, false),
    }
}

pub fn source_dim(rule: BranchRule, parts: &[usize], n: usize) -> Result<u64> {
    match rule {
        BranchRule::CToC => weyl_dim(&RootSystem::new(RootFamily::C, n), &HighestWeight::from_partition(parts, n)?),
        BranchRule::BToD => o_group_dim(true, parts, n, false),
        BranchRule::DToB | BranchRule::DToD => o_group_dim(false, parts, n, false),
    }
}

// ---------------------------------------------------------------------------
// Closed-form branching formulas

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BranchFormula {
    /// Symplectic rule as a double interlacing count.
    SymplecticReference,
    /// Symplectic rule with the printed chain and product read literally.
    SymplecticLiteral,
    /// Odd to even orthogonal: single interlacing, multiplicity one.
    OddToEven,
    /// Even to odd orthogonal: single interlacing, each label twice unless
    /// the last part of `λ` is zero.
    EvenToOdd,
    /// Even to even orthogonal: symplectic literal rule with the last
    /// factor capped at two.
    MinRule,
    /// As `MinRule` with `W_μ + W_μ'` counted twice when `μ` ends in zero.
    MinRuleSplit,
}

impl BranchFormula {
    pub const ALL: [BranchFormula; 6] = [
        BranchFormula::SymplecticReference,
        BranchFormula::SymplecticLiteral,
        BranchFormula::OddToEven,
        BranchFormula::EvenToOdd,
        BranchFormula::MinRule,
        BranchFormula::MinRuleSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BranchFormula::SymplecticReference => "symplectic-reference",
            BranchFormula::SymplecticLiteral => "symplectic-literal",
            BranchFormula::OddToEven => "odd-to-even",
            BranchFormula::EvenToOdd => "even-to-odd",
            BranchFormula::MinRule => "min-rule",
            BranchFormula::MinRuleSplit => "min-rule-split",
        }
    }

    pub fn oracle_rule(self) -> BranchRule {
        match self {
            BranchFormula::SymplecticReference | BranchFormula::SymplecticLiteral => BranchRule::CToC,
            BranchFormula::OddToEven => BranchRule::BToD,
            BranchFormula::EvenToOdd => BranchRule::DToB,
            BranchFormula::MinRule | BranchFormula::MinRuleSplit => BranchRule::DToD,
        }
    }
}

impl FromStr for BranchFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BranchFormula::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown branching formula {s:?}")))
    }
}

/// All `μ` with `len` parts bounded by `bound`.
fn candidates(len: usize, bound: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..=max {
            cur.push(x);
            rec(len, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, bound, &mut Vec::new(), &mut out);
    out
}

/// `hi_1 ≥ lo_1 ≥ hi_2 ≥ lo_2 ≥ …` over the common indices.
fn interlaces(hi: &[usize], lo: &[usize]) -> bool {
    lo.iter().enumerate().all(|(i, &m)| hi[i] >= m && hi.get(i + 1).is_none_or(|&h| m >= h))
}

fn symplectic_literal_mult(lam: &[usize], mu: &[usize], min_rule: bool) -> u64 {
    let n = lam.len();
    let l = |j: usize| -> i64 {
        if j >= 1 && j <= n {
            lam[j - 1] as i64
        } else {
            0
        }
    };
    let m = |j: usize| -> i64 { mu[j - 1] as i64 };
    let mut total = 0u64;
    for i in 1..=n {
        let mut ok = (1..i).all(|j| l(j) >= m(j) && m(j) >= l(j + 1));
        if i < n {
            ok &= l(i + 1) > m(i) && m(i) >= l(i + 2);
        }
        ok &= (i + 1..n).all(|j| l(j + 1) >= m(j) && m(j) >= l(j + 2));
        if !ok {
            continue;
        }
        let mut prod: i64 = (1..i).map(|j| l(j) - m(j) + 1).product();
        prod *= l(i) - l(i + 1) + 1;
        for j in i + 1..=n {
            let mut f = m(j - 1) - l(j + 1) + 1;
            if min_rule && j == n {
                f = f.min(2);
            }
            prod *= f;
        }
        if prod > 0 {
            total += prod as u64;
        }
    }
    total
}

/// Evaluates a closed-form branching rule for `λ` at rank `n`.
pub fn closed_form_branching(rule: BranchFormula, parts: &[usize], n: usize) -> Result<Vec<BranchTerm>> {
    let lam = HighestWeight::from_partition(parts, n)?;
    let lam: Vec<usize> = lam.doubled.iter().map(|x| (*x / 2) as usize).collect();
    let target = rule.oracle_rule().target_rank(n);
    if n == 0 || (rule.oracle_rule() == BranchRule::DToD && n < 2) {
        return Err(Error::InvalidArgument(format!("{} needs a larger rank than {n}", rule.name())));
    }
    let bound = lam.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    for mu in candidates(target, bound) {
        let last_zero = target == 0 || mu[target - 1] == 0;
        let (mult, unresolved) = match rule {
            BranchFormula::SymplecticReference => {
                let count = candidates(n, bound)
                    .into_iter()
                    .filter(|nu| interlaces(&lam, nu) && nu[n - 1] <= lam[n - 1] && interlaces(nu, &mu))
                    .filter(|nu| target == 0 || nu[n - 1] <= mu[target - 1])
                    .count();
                (count as u64, false)
            }
            BranchFormula::SymplecticLiteral => (symplectic_literal_mult(&lam, &mu, false), false),
            BranchFormula::OddToEven => (u64::from(interlaces(&lam, &mu)), last_zero),
            BranchFormula::EvenToOdd => {
                let ok = interlaces(&lam, &mu) && (target == 0 || mu[target - 1] >= lam[n - 1]);
                (
                    if !ok {
                        0
                    } else if lam[n - 1] != 0 {
                        2
                    } else {
                        1
                    },
                    false,
                )
            }
            BranchFormula::MinRule => (symplectic_literal_mult(&lam, &mu, true), last_zero),
            BranchFormula::MinRuleSplit => {
                let m = symplectic_literal_mult(&lam, &mu, true);
                (if last_zero { 2 * m } else { m }, last_zero)
            }
        };
        if mult > 0 {
            out.push(BranchTerm { mu, mult, unresolved_prime: unresolved });
        }
    }
    Ok(normalize_terms(out))
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct BranchReport {
    pub rule: String,
    pub lambda: Vec<usize>,
    pub rank: usize,
    pub oracle: Vec<BranchTerm>,
    /// The closed form, under the key `paperFormula`.
    #[serde(rename = "paperFormula")]
    pub formula: Vec<BranchTerm>,
    pub agree: bool,
    /// `Σ mult · dim(target) = dim(source)` for the oracle side.
    pub conserves_dimension: bool,
}

pub fn compare_branching(rule: BranchFormula, parts: &[usize], n: usize) -> Result<BranchReport> {
    let oracle = branch_by_character(rule.oracle_rule(), parts, n)?;
    let formula = closed_form_branching(rule, parts, n)?;
    let mut total = 0u64;
    for t in &oracle {
        total += t.mult * target_dim(rule.oracle_rule(), &t.mu)?;
    }
    let conserves = total == source_dim(rule.oracle_rule(), parts, n)?;
    Ok(BranchReport {
        rule: rule.name().into(),
        lambda: parts.to_vec(),
        rank: n,
        agree: oracle == formula,
        oracle,
        formula,
        conserves_dimension: conserves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hw(p: &[usize], n: usize) -> HighestWeight {
        HighestWeight::from_partition(p, n).unwrap()
    }

    #[test]
    fn root_counts() {
        for n in 1..=4 {
            let count = |f| RootSystem::new(f, n).positive_roots().len();
            assert_eq!(count(RootFamily::B), n * n);
            assert_eq!(count(RootFamily::C), n * n);
            assert_eq!(count(RootFamily::D), n * n - n);
        }
    }

    #[test]
    fn weyl_dims() {
        let c1 = RootSystem::new(RootFamily::C, 1);
        for m in 0..6 {
            assert_eq!(weyl_dim(&c1, &hw(&[m], 1)).unwrap(), m as u64 + 1);
        }
        assert_eq!(weyl_dim(&RootSystem::new(RootFamily::C, 2), &hw(&[1, 1], 2)).unwrap(), 5);
        let b2 = RootSystem::new(RootFamily::B, 2);
        assert_eq!(weyl_dim(&b2, &HighestWeight::new(vec![1, 1])).unwrap(), 4);
        assert_eq!(o_group_dim(true, &[2], 1, false).unwrap(), 5);
        assert_eq!(o_group_dim(false, &[3], 1, false).unwrap(), 2);
        assert_eq!(o_group_dim(false, &[1, 1], 2, false).unwrap(), 6);
        assert!(o_group_dim(false, &[1, 1], 2, true).is_err());
        assert!(weyl_dim(&b2, &HighestWeight::new(vec![0, 2])).is_err());
    }

    #[test]
    fn small_characters() {
        let c1 = character(&RootSystem::new(RootFamily::C, 1), &hw(&[1], 1)).unwrap();
        let mut e = LaurentPoly::zero(1);
        e.add_term(vec![2], 1);
        e.add_term(vec![-2], 1);
        assert_eq!(c1, e);
        let b1 = character(&RootSystem::new(RootFamily::B, 1), &hw(&[1], 1)).unwrap();
        e.add_term(vec![0], 1);
        assert_eq!(b1, e);
    }

    #[test]
    fn branching_examples() {
        let t = |mu: &[usize], mult, u| BranchTerm { mu: mu.to_vec(), mult, unresolved_prime: u };
        assert_eq!(
            branch_by_character(BranchRule::CToC, &[1, 1], 2).unwrap(),
            vec![t(&[0], 1, false), t(&[1], 2, false)]
        );
        assert_eq!(
            branch_by_character(BranchRule::BToD, &[2], 1).unwrap(),
            vec![t(&[0], 1, true), t(&[1], 1, false), t(&[2], 1, false)]
        );
        for m in 0..5 {
            assert_eq!(branch_by_character(BranchRule::CToC, &[m], 1).unwrap(), vec![t(&[], m as u64 + 1, false)]);
        }
        assert_eq!(
            closed_form_branching(BranchFormula::SymplecticReference, &[1, 1], 2).unwrap(),
            vec![t(&[0], 1, false), t(&[1], 2, false)]
        );
        assert_eq!(
            closed_form_branching(BranchFormula::OddToEven, &[2], 1).unwrap(),
            vec![t(&[0], 1, true), t(&[1], 1, false), t(&[2], 1, false)]
        );
        // with λ_n = 0 each label appears once
        assert!(closed_form_branching(BranchFormula::EvenToOdd, &[2, 0], 2).unwrap().iter().all(|x| x.mult == 1));
    }

    #[test]
    fn min_rule_disagrees_with_characters() {
        let oracle = branch_by_character(BranchRule::DToD, &[1], 2).unwrap();
        let total: u64 = oracle.iter().map(|t| t.mult * target_dim(BranchRule::DToD, &t.mu).unwrap()).sum();
        assert_eq!(total, 4);
        assert_eq!(closed_form_branching(BranchFormula::MinRule, &[1], 2).unwrap(), oracle);
        // the trivial constituent of the second exterior power is undercounted
        let oracle = branch_by_character(BranchRule::DToD, &[1, 1], 2).unwrap();
        let lit = closed_form_branching(BranchFormula::MinRule, &[1, 1], 2).unwrap();
        assert_eq!((oracle[0].mu.as_slice(), oracle[0].mult), (&[0][..], 2));
        assert_eq!((lit[0].mu.as_slice(), lit[0].mult), (&[0][..], 1));
    }

    proptest! {
        #[test]
        fn characters_specialize_and_are_symmetric(
            fam in prop::sample::select(vec![RootFamily::A, RootFamily::B, RootFamily::C, RootFamily::D]),
            n in 1usize..=3,
            raw in prop::collection::vec(0usize..4, 3),
            spin in any::<bool>(),
        ) {
            let mut parts = raw.clone();
            parts.truncate(n);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let rs = RootSystem::new(fam, n);
            let mut h = hw(&parts, n);
            if spin && matches!(fam, RootFamily::B | RootFamily::D) {
                h.doubled.iter_mut().for_each(|x| *x += 1);
            }
            let ch = character(&rs, &h).unwrap();
            prop_assert_eq!(ch.eval_at_ones(), weyl_dim(&rs, &h).unwrap() as i64);
            prop_assert!(ch.terms().values().all(|&c| c > 0));
            for (perm, signs, _) in rs.weyl_group() {
                prop_assert_eq!(&ch.permute(&perm, &signs), &ch);
            }
        }

        #[test]
        fn branching_conserves_dimension(
            rule in prop::sample::select(BranchRule::ALL.to_vec()),
            n in 2usize..=3,
            raw in prop::collection::vec(0usize..3, 3),
        ) {
            let mut parts = raw.clone();
            parts.truncate(n);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let terms = branch_by_character(rule, &parts, n).unwrap();
            let total: u64 = terms.iter().map(|t| t.mult * target_dim(rule, &t.mu).unwrap()).sum();
            prop_assert_eq!(total, source_dim(rule, &parts, n).unwrap());
        }
    }
}
