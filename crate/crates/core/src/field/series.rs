//! Closed form of ultimately periodic series `sum_{m>=0} z_m / b^{m+1}`.
//!
//! With preperiod `z_0..z_{s-1}` and period `z_s..z_{s+t-1}` the value is
//! `sum_{m<s} z_m b^{-m-1} + b^{-s} (sum_{n<t} z_{s+n} b^{-n-1}) b^t / (b^t - 1)`.
//! The formula only uses field operations, so it is written once for any
//! [`SeriesField`] and applies both at `beta` and at a conjugate `gamma`.

use std::cmp::Ordering;

use num_traits::One;

use super::embedding::ConjugateValue;
use super::FieldElement;
use crate::error::{Error, Result};
use crate::Rational;

/// The field operations the closed form needs.
pub trait SeriesField: Clone {
    fn add(&self, o: &Self) -> Result<Self>;
    fn sub(&self, o: &Self) -> Result<Self>;
    fn mul(&self, o: &Self) -> Result<Self>;
    fn inv(&self) -> Result<Self>;
    fn one_like(&self) -> Self;
    fn zero_like(&self) -> Self;
}

impl SeriesField for FieldElement {
    fn add(&self, o: &Self) -> Result<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(o)
    }
    fn inv(&self) -> Result<Self> {
        FieldElement::inv(self)
    }
    fn one_like(&self) -> Self {
        FieldElement::one(self.field())
    }
    fn zero_like(&self) -> Self {
        FieldElement::zero(self.field())
    }
}

impl SeriesField for ConjugateValue {
    fn add(&self, o: &Self) -> Result<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Result<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        self.checked_mul(o)
    }
    fn inv(&self) -> Result<Self> {
        ConjugateValue::inv(self)
    }
    fn one_like(&self) -> Self {
        let one = FieldElement::one(self.element().field());
        super::psi_apply(self.embedding(), &one).expect("same field")
    }
    fn zero_like(&self) -> Self {
        let zero = FieldElement::zero(self.element().field());
        super::psi_apply(self.embedding(), &zero).expect("same field")
    }
}

/// `sum_k terms[k] / b^{k+1}` by Horner in `1/b`.
fn finite_sum<F: SeriesField>(terms: &[F], binv: &F) -> Result<F> {
    let mut acc = binv.zero_like();
    for z in terms.iter().rev() {
        acc = acc.add(z)?.mul(binv)?;
    }
    Ok(acc)
}

/// The closed form, without checking that the series converges.
pub fn periodic_series_closed_form<F: SeriesField>(prefix: &[F], period: &[F], b: &F) -> Result<F> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let binv = b.inv()?;
    let head = finite_sum(prefix, &binv)?;
    let cycle = finite_sum(period, &binv)?;
    let one = b.one_like();
    // b^t / (b^t - 1) = 1 / (1 - b^-t)
    let binv_t = period.iter().try_fold(one.clone(), |acc, _| acc.mul(&binv))?;
    let factor = one.sub(&binv_t)?.inv()?;
    let binv_s = prefix.iter().try_fold(one, |acc, _| acc.mul(&binv))?;
    head.add(&binv_s.mul(&cycle)?.mul(&factor)?)
}

/// Value of the ultimately periodic series at the selected root; requires `b > 1`.
pub fn periodic_series_value(
    prefix: &[FieldElement],
    period: &[FieldElement],
    b: &FieldElement,
) -> Result<FieldElement> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if prefix.iter().chain(period).any(|z| !z.same_field(b)) {
        return Err(Error::FieldMismatch);
    }
    if b.cmp_value(&FieldElement::one(b.field())) != Ordering::Greater {
        return Err(Error::SeriesBaseTooSmall);
    }
    periodic_series_closed_form(prefix, period, b)
}

/// Value of the same series read at a conjugate; requires `|psi(b)| > 1`.
pub fn periodic_series_value_at(
    prefix: &[ConjugateValue],
    period: &[ConjugateValue],
    b: &ConjugateValue,
) -> Result<ConjugateValue> {
    if period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if b.compare_modulus_with_one(1 << 12) != Some(Ordering::Greater) {
        return Err(Error::SeriesBaseTooSmall);
    }
    periodic_series_closed_form(prefix, period, b)
}

/// Geometric tail bound `max|z| / (|b|^N (|b| - 1))` from lower bounds on `|b|`.
pub(crate) fn tail_bound(max_term: &Rational, b_lower: &Rational, n: u32) -> Rational {
    let mut pow = Rational::one();
    for _ in 0..n {
        pow *= b_lower;
    }
    max_term / (pow * (b_lower - Rational::one()))
}
