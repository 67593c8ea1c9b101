//! Alternate bases `(beta_0, ..., beta_{p-1})` inside one field `Q(beta)`,
//! where `beta` is their product.

use std::collections::HashSet;
use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{FieldElement, NumberField};
use crate::Rational;

/// Default cap on the number of digit tuples enumerated by [`AlternateBase::digit_set`].
pub const DIGIT_TUPLE_CAP: u128 = 1 << 22;

#[derive(Clone, Debug)]
pub struct AlternateBase {
    field: Arc<NumberField>,
    betas: Vec<FieldElement>,
    /// Largest admissible digit `ceil(beta_i) - 1` at each position.
    bounds: Vec<i64>,
}

/// Build and validate a base from coordinate vectors over the power basis.
pub fn make_alternate_base(field: &Arc<NumberField>, coords: Vec<Vec<Rational>>) -> Result<AlternateBase> {
    let betas = coords.into_iter().map(|c| FieldElement::from_coords(field, c)).collect::<Result<Vec<_>>>()?;
    AlternateBase::new(field, betas)
}

impl AlternateBase {
    pub fn new(field: &Arc<NumberField>, betas: Vec<FieldElement>) -> Result<Self> {
        if betas.is_empty() {
            return Err(Error::EmptyBase);
        }
        if betas.iter().any(|b| !b.same_field(&FieldElement::one(field))) {
            return Err(Error::FieldMismatch);
        }
        let one = FieldElement::one(field);
        let mut bounds = Vec::with_capacity(betas.len());
        for (i, b) in betas.iter().enumerate() {
            if b.cmp_value(&one).is_le() {
                return Err(Error::BaseNotAboveOne(i));
            }
            let c: num_bigint::BigInt = b.ceil() - 1;
            bounds.push(c.to_i64().ok_or(Error::DigitBoundTooLarge(i))?);
        }
        let product = betas.iter().skip(1).fold(betas[0].clone(), |acc, b| &acc * b);
        if product != FieldElement::generator(field) {
            return Err(Error::ProductMismatch);
        }
        Ok(AlternateBase { field: field.clone(), betas, bounds })
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn p(&self) -> usize {
        self.betas.len()
    }

    pub fn betas(&self) -> &[FieldElement] {
        &self.betas
    }

    /// `beta_n` with the periodic convention `beta_n = beta_{n mod p}`.
    pub fn beta(&self, n: usize) -> &FieldElement {
        &self.betas[n % self.p()]
    }

    /// The product `beta`, i.e. the field generator.
    pub fn product(&self) -> FieldElement {
        FieldElement::generator(&self.field)
    }

    /// Largest admissible digit at position `n` (taken mod `p`).
    pub fn digit_bound(&self, n: usize) -> i64 {
        self.bounds[n % self.p()]
    }

    pub fn digit_bounds(&self) -> &[i64] {
        &self.bounds
    }

    /// The shifted base `(beta_i, ..., beta_{i+p-1})`.
    pub fn shift(&self, i: usize) -> AlternateBase {
        let p = self.p();
        let k = i % p;
        let rot = |v: &[_]| -> Vec<_> { (0..p).map(|n| v[(n + k) % p]).collect() };
        AlternateBase {
            field: self.field.clone(),
            betas: (0..p).map(|n| self.betas[(n + k) % p].clone()).collect(),
            bounds: rot(&self.bounds),
        }
    }

    fn check_digits(&self, digits: &[i64], offset: usize) -> Result<()> {
        for (n, &d) in digits.iter().enumerate() {
            let max = self.digit_bound(offset + n);
            if d < 0 || d > max {
                return Err(Error::DigitOutOfRange { position: offset + n, digit: d, max });
            }
        }
        Ok(())
    }

    /// `f(a) = sum_i a_i beta_{i+1} ... beta_{p-1}` for an admissible tuple.
    pub fn f_beta(&self, tuple: &[i64]) -> Result<FieldElement> {
        if tuple.len() != self.p() {
            return Err(Error::LengthNotMultiple { len: tuple.len(), p: self.p() });
        }
        self.check_digits(tuple, 0)?;
        Ok(self.f_beta_any(tuple))
    }

    /// `f` on an arbitrary integer tuple of length `p`, without digit bounds.
    pub fn f_beta_any(&self, tuple: &[i64]) -> FieldElement {
        let mut acc = FieldElement::zero(&self.field);
        for (i, &a) in tuple.iter().enumerate() {
            if i > 0 {
                acc = &acc * &self.betas[i];
            }
            acc = acc.add_rational(&Rational::from_integer(a.into()));
        }
        acc
    }

    /// The grouped digits `eta_m = f(e_{mp}, ..., e_{mp+p-1})`.
    pub fn group_representation(&self, digits: &[i64]) -> Result<Vec<FieldElement>> {
        self.check_digits(digits, 0)?;
        self.group_any(digits)
    }

    /// Grouping of arbitrary integers; only the length is checked.
    pub fn group_any(&self, digits: &[i64]) -> Result<Vec<FieldElement>> {
        if !digits.len().is_multiple_of(self.p()) {
            return Err(Error::LengthNotMultiple { len: digits.len(), p: self.p() });
        }
        Ok(digits.chunks(self.p()).map(|t| self.f_beta_any(t)).collect())
    }

    /// Number of admissible digit tuples, `prod_i ceil(beta_i)`.
    pub fn tuple_count(&self) -> u128 {
        self.bounds.iter().try_fold(1u128, |acc, &b| acc.checked_mul(b as u128 + 1)).unwrap_or(u128::MAX)
    }

    /// `Dig(beta)`: the image of `f`, distinct values sorted increasingly.
    pub fn digit_set(&self) -> Result<Vec<FieldElement>> {
        let words = self.tuple_count();
        if words > DIGIT_TUPLE_CAP {
            return Err(Error::BruteForceCap { words, cap: DIGIT_TUPLE_CAP });
        }
        // Horner over positions: values of all prefixes of length i
        let mut level = vec![FieldElement::zero(&self.field)];
        for (i, &bound) in self.bounds.iter().enumerate() {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for v in &level {
                let base = if i == 0 { v.clone() } else { v * &self.betas[i] };
                for a in 0..=bound {
                    let w = base.add_rational(&Rational::from_integer(a.into()));
                    if seen.insert(w.coords().to_vec()) {
                        next.push(w);
                    }
                }
            }
            level = next;
        }
        Ok(sort_dedup(level))
    }

    /// `C = f(ceil(beta_0) - 1, ..., ceil(beta_{p-1}) - 1)`, the largest digit.
    pub fn max_digit(&self) -> FieldElement {
        self.f_beta_any(&self.bounds)
    }
}

/// Sort by exact value and drop equal values.
pub(crate) fn sort_dedup(v: Vec<FieldElement>) -> Vec<FieldElement> {
    let mut keyed: Vec<_> = v.into_iter().map(|x| (x.enclosure(64), x)).collect();
    keyed.sort_by(|(ka, a), (kb, b)| ka.compare(kb).unwrap_or_else(|| a.cmp_value(b)));
    let mut out: Vec<FieldElement> = Vec::with_capacity(keyed.len());
    for (_, x) in keyed {
        if !out.last().is_some_and(|l| l.cmp_value(&x).is_eq()) {
            out.push(x);
        }
    }
    out
}
