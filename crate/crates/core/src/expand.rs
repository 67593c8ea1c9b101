//! Greedy expansions with exact periodicity certificates.
//!
//! The greedy algorithm sets `r_0 = x`, `e_n = floor(beta_n r_n)` and
//! `r_{n+1} = beta_n r_n - e_n`. Remainders stay in `Q(beta)`, so the
//! remainders `r_0, r_p, r_{2p}, ...` are hashed by their exact coordinates;
//! since `r_{(m+1)p}` is a function of `r_{mp}`, the first repeat
//! `r_{sp} = r_{(s+t)p}` gives the least preperiod `s` and the least period `t`.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::base::AlternateBase;
use crate::error::{Error, Result};
use crate::field::{periodic_series_value, FieldElement};
use crate::Rational;

/// `r_{sp} = r_{(s+t)p}` with `s` and `t` counted in groups of `p` digits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicityCertificate {
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpansionStatus {
    Periodic(PeriodicityCertificate),
    /// No repeat among the remainders of the first `N` groups.
    BudgetExhausted(usize),
}

#[derive(Clone, Debug)]
pub struct Expansion {
    pub base: AlternateBase,
    pub x: FieldElement,
    /// `e_0 ... e_{Np-1}`.
    pub digits: Vec<i64>,
    /// `eta_0 ... eta_{N-1}`.
    pub grouped: Vec<FieldElement>,
    /// `r_0, r_p, ..., r_{Np}`.
    pub remainders: Vec<FieldElement>,
    pub status: ExpansionStatus,
}

impl Expansion {
    pub fn certificate(&self) -> Option<PeriodicityCertificate> {
        match self.status {
            ExpansionStatus::Periodic(c) => Some(c),
            ExpansionStatus::BudgetExhausted(_) => None,
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.certificate().is_some()
    }

    /// Digits before the period (`s p` of them) and one period (`t p`).
    pub fn split_digits(&self) -> Option<(&[i64], &[i64])> {
        let c = self.certificate()?;
        let p = self.base.p();
        Some((&self.digits[..c.s * p], &self.digits[c.s * p..(c.s + c.t) * p]))
    }

    /// `eta_0 ... eta_{n-1}`, continuing through the period when certified.
    pub fn eta_prefix(&self, n: usize) -> Option<Vec<FieldElement>> {
        if n <= self.grouped.len() {
            return Some(self.grouped[..n].to_vec());
        }
        let c = self.certificate()?;
        Some((0..n).map(|m| self.grouped[fold_index(m, c)].clone()).collect())
    }

    /// `e_0 ... e_{n-1}`, continuing through the period when certified.
    pub fn digit_prefix(&self, n: usize) -> Option<Vec<i64>> {
        if n <= self.digits.len() {
            return Some(self.digits[..n].to_vec());
        }
        let c = self.certificate()?;
        let p = self.base.p();
        let scaled = PeriodicityCertificate { s: c.s * p, t: c.t * p };
        Some((0..n).map(|k| self.digits[fold_index(k, scaled)]).collect())
    }
}

/// Index into the first `s + t` letters of an ultimately periodic word.
fn fold_index(n: usize, c: PeriodicityCertificate) -> usize {
    if n < c.s {
        n
    } else {
        c.s + (n - c.s) % c.t
    }
}

/// Whether `word[n] = word[n + t]` for every `n >= s` inside the word.
pub fn prefix_is_periodic<T: PartialEq>(word: &[T], s: usize, t: usize) -> bool {
    t > 0 && (s..word.len().saturating_sub(t)).all(|n| word[n] == word[n + t])
}

fn check_unit_interval(x: &FieldElement) -> Result<()> {
    if x.sign() < 0 || x.add_rational(&-Rational::from_integer(1.into())).sign() >= 0 {
        return Err(Error::OutOfUnitInterval);
    }
    Ok(())
}

/// Run the greedy algorithm on `x in [0, 1)` for at most `max_groups` groups of `p` digits.
pub fn greedy_expand(b: &AlternateBase, x: &FieldElement, max_groups: usize) -> Result<Expansion> {
    if !x.same_field(&b.product()) {
        return Err(Error::FieldMismatch);
    }
    check_unit_interval(x)?;
    if max_groups == 0 {
        return Err(Error::InconsistentInputs("max_groups must be at least 1".into()));
    }
    let p = b.p();
    let mut seen: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut digits = Vec::new();
    let mut grouped = Vec::new();
    let mut remainders = Vec::new();
    let mut r = x.clone();
    let status = loop {
        let m = remainders.len();
        if let Some(&s) = seen.get(r.coords()) {
            remainders.push(r);
            break ExpansionStatus::Periodic(PeriodicityCertificate { s, t: m - s });
        }
        seen.insert(r.coords().to_vec(), m);
        remainders.push(r.clone());
        if m == max_groups {
            break ExpansionStatus::BudgetExhausted(m);
        }
        let start = digits.len();
        for i in 0..p {
            let v = b.beta(i) * &r;
            let e = v.floor();
            r = v.add_rational(&-Rational::from_integer(e.clone()));
            digits.push(e.to_i64().expect("digit below ceil(beta_i)"));
        }
        grouped.push(b.f_beta_any(&digits[start..]));
    };
    Ok(Expansion { base: b.clone(), x: x.clone(), digits, grouped, remainders, status })
}

/// Exact value of the ultimately periodic digit word `prefix (period)^omega`.
pub fn evaluate_expansion(b: &AlternateBase, prefix: &[i64], period: &[i64]) -> Result<FieldElement> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let p = b.p();
    for len in [prefix.len(), period.len()] {
        if len % p != 0 {
            return Err(Error::LengthNotMultiple { len, p });
        }
    }
    let head = b.group_representation(prefix)?;
    let cycle = b.group_representation(period).map_err(|e| match e {
        Error::DigitOutOfRange { position, digit, max } => {
            Error::DigitOutOfRange { position: position + prefix.len(), digit, max }
        }
        other => other,
    })?;
    periodic_series_value(&head, &cycle, &b.product())
}

/// `d(1)`: the digit `floor(beta_0)` followed by the expansion of
/// `beta_0 - floor(beta_0)` in the shifted base.
#[derive(Clone, Debug)]
pub struct ExpansionOfOne {
    pub first_digit: i64,
    pub tail: Expansion,
}

impl ExpansionOfOne {
    pub fn status(&self) -> ExpansionStatus {
        self.tail.status
    }

    pub fn digits(&self) -> Vec<i64> {
        std::iter::once(self.first_digit).chain(self.tail.digits.iter().copied()).collect()
    }
}

/// The greedy expansion of 1 in base `b`.
pub fn expansion_of_one(b: &AlternateBase, max_groups: usize) -> Result<ExpansionOfOne> {
    let (first_digit, frac) = integer_and_fraction(&b.betas()[0]);
    let tail = greedy_expand(&b.shift(1), &frac, max_groups)?;
    Ok(ExpansionOfOne { first_digit, tail })
}

fn integer_and_fraction(x: &FieldElement) -> (i64, FieldElement) {
    let n = x.floor();
    let frac = x.add_rational(&-Rational::from_integer(n.clone()));
    (n.to_i64().expect("base fits a machine digit"), frac)
}

#[derive(Clone, Debug)]
pub enum ParryVerdict {
    Periodic(PeriodicityCertificate),
    Unknown { budget: usize },
}

#[derive(Clone, Debug)]
pub struct ParryReport {
    /// Entry `i` concerns `beta_i - floor(beta_i)` expanded in the base shifted by `i + 1`.
    pub shifts: Vec<(ParryVerdict, Expansion)>,
}

impl ParryReport {
    /// All `p` shifts certified.
    pub fn is_parry(&self) -> bool {
        self.shifts.iter().all(|(v, _)| matches!(v, ParryVerdict::Periodic(_)))
    }
}

/// Parry test: `beta_i - floor(beta_i)` has an ultimately periodic expansion
/// in the base shifted by `i + 1`, for every `i`.
pub fn is_parry(b: &AlternateBase, max_groups: usize) -> Result<ParryReport> {
    let mut shifts = Vec::with_capacity(b.p());
    for i in 0..b.p() {
        let (_, frac) = integer_and_fraction(&b.betas()[i]);
        let e = greedy_expand(&b.shift(i + 1), &frac, max_groups)?;
        let verdict = match e.status {
            ExpansionStatus::Periodic(c) => ParryVerdict::Periodic(c),
            ExpansionStatus::BudgetExhausted(n) => ParryVerdict::Unknown { budget: n },
        };
        shifts.push((verdict, e));
    }
    Ok(ParryReport { shifts })
}
