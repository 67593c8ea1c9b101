//! Conjugate embeddings `psi: Q(beta) -> Q(gamma)` sending `beta` to another
//! root `gamma` of the minimal polynomial.
//!
//! `psi` acts on coordinates as the identity; only evaluation changes. Values
//! at `gamma` are enclosed in complex interval boxes obtained by Horner
//! evaluation over a refined isolating box of `gamma`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use super::{Conjugate, FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::interval::{ComplexInterval, Interval};
use crate::polyq::{has_root_in, isolate_complex_roots, modulus_orderings, refine_to};
use crate::{Rational, RationalRootBox};

fn contains_selected(field: &NumberField, b: &RationalRootBox) -> bool {
    let Some((lo, hi)) = b.real_interval() else {
        return false;
    };
    let (a, c) = field.isolating_interval();
    if lo == hi {
        return (a == c && a == lo) || (a < lo && lo < c);
    }
    if a == c {
        return lo < a && a < hi;
    }
    let l = if lo > a { lo } else { a };
    let h = if hi < c { hi } else { c };
    super::root_in(field.minpoly(), l, h)
}

pub(super) fn compute_conjugates(field: &NumberField) -> Vec<Conjugate> {
    let p = field.minpoly();
    let mut boxes = isolate_complex_roots(p).expect("minimal polynomial is squarefree");
    let orderings = modulus_orderings(p, &mut boxes);
    let me = boxes.iter().position(|b| contains_selected(field, b)).expect("selected root is among the real roots");
    boxes
        .into_iter()
        .zip(orderings)
        .enumerate()
        .filter(|(k, _)| *k != me)
        .map(|(_, (b, modulus))| Conjugate { root: Mutex::new(b), modulus })
        .collect()
}

/// The embedding of `Q(beta)` sending `beta` to the conjugate `gamma`.
#[derive(Clone)]
pub struct ConjugateEmbedding {
    field: Arc<NumberField>,
    index: usize,
    modulus: Ordering,
}

impl fmt::Debug for ConjugateEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConjugateEmbedding")
            .field("index", &self.index)
            .field("gamma", &self.root_box())
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Every embedding other than the identity, optionally only those with `|gamma| > 1`.
pub fn conjugate_embeddings(field: &Arc<NumberField>, modulus_gt_one_only: bool) -> Vec<ConjugateEmbedding> {
    field
        .conjugate_list()
        .iter()
        .enumerate()
        .filter(|(_, c)| !modulus_gt_one_only || c.modulus == Ordering::Greater)
        .map(|(index, c)| ConjugateEmbedding { field: field.clone(), index, modulus: c.modulus })
        .collect()
}

/// `psi(a)`: the same coordinates, read at `gamma`.
pub fn psi_apply(e: &ConjugateEmbedding, a: &FieldElement) -> Result<ConjugateValue> {
    if !Arc::ptr_eq(&e.field, a.field()) && !e.field.same_as(a.field()) {
        return Err(Error::FieldMismatch);
    }
    Ok(ConjugateValue { embedding: e.clone(), element: a.clone() })
}

impl ConjugateEmbedding {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn index(&self) -> usize {
        self.index
    }

    fn conjugate(&self) -> &Conjugate {
        &self.field.conjugate_list()[self.index]
    }

    /// Current isolating box of `gamma`.
    pub fn root_box(&self) -> RationalRootBox {
        self.conjugate().root.lock().unwrap().clone()
    }

    pub fn is_real(&self) -> bool {
        self.root_box().is_real()
    }

    /// `|gamma|` compared with 1 (exact).
    pub fn modulus_vs_one(&self) -> Ordering {
        self.modulus
    }

    /// Box around `gamma` with sides at most `2^-bits`.
    pub fn gamma_enclosure(&self, bits: u32) -> ComplexInterval {
        let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
        let mut b = self.conjugate().root.lock().unwrap();
        refine_to(self.field.minpoly(), &mut b, &eps);
        let ((a, c), (d, e)) = b.ranges();
        ComplexInterval { re: Interval::new(a, c), im: Interval::new(d, e) }
    }

    /// Enclosure of `|gamma|`.
    pub fn modulus_enclosure(&self, bits: u32) -> Interval {
        self.gamma_enclosure(bits).modulus(bits + 2)
    }

    /// Exact test whether `poly(gamma) = 0`.
    pub(crate) fn vanishes(&self, a: &FieldElement) -> bool {
        if a.is_zero() {
            return true;
        }
        if a.as_rational().is_some() {
            return false;
        }
        let g = a.to_poly().gcd(self.field.minpoly());
        !g.is_constant() && has_root_in(&g, &self.root_box())
    }
}

impl ConjugateEmbedding {
    /// Exact test whether `a(beta) = a(gamma)`.
    ///
    /// Both values are roots-of-`m` evaluations of the same polynomial, so
    /// `gamma` qualifies exactly when it is a root of
    /// `G = gcd(m(y), a(y) - a(beta))` over `Q(beta)[y]`. The roots of `G` are
    /// among the isolated roots of `m`; boxes are refined until the ones that
    /// can still hold a root of `G` number exactly `deg G`.
    pub fn agrees(&self, a: &FieldElement) -> bool {
        if a.as_rational().is_some() {
            return true;
        }
        let v = psi_apply(self, a).expect("same field");
        for bits in [64, 160] {
            let at_beta = a.enclosure(bits);
            let at_gamma = v.enclosure(bits);
            if at_gamma.re.compare(&at_beta).is_some_and(|o| o != Ordering::Equal) || !at_gamma.im.contains_zero() {
                return false;
            }
        }
        let field = &self.field;
        let m: Vec<FieldElement> =
            field.minpoly().coeffs().iter().map(|c| FieldElement::from_rational(field, c.clone())).collect();
        let mut d: Vec<FieldElement> =
            a.coords().iter().map(|c| FieldElement::from_rational(field, c.clone())).collect();
        d[0] = &d[0] - a;
        let g = kpoly_gcd(m, d);
        let deg = g.len() - 1;
        if deg <= 1 {
            return false;
        }
        let others = conjugate_embeddings(field, false);
        let mut undecided: Vec<usize> = (0..others.len()).collect();
        let mut bits = 64;
        loop {
            let coeffs: Vec<Interval> = g.iter().map(|c| c.enclosure(bits)).collect();
            undecided.retain(|&k| {
                let z = others[k].gamma_enclosure(bits);
                let val = coeffs.iter().rev().fold(ComplexInterval::real(Interval::zero()), |acc, c| {
                    acc.mul(&z).add(&ComplexInterval::real(c.clone()))
                });
                !val.excludes_zero()
            });
            // beta is one root of G; the rest are conjugates
            if undecided.len() == deg - 1 {
                return undecided.contains(&self.index);
            }
            if !undecided.contains(&self.index) {
                return false;
            }
            bits *= 2;
        }
    }
}

/// Trim leading coefficients whose value at `beta` vanishes.
fn kpoly_trim(mut p: Vec<FieldElement>) -> Vec<FieldElement> {
    while p.last().is_some_and(|c| c.is_zero_value()) {
        p.pop();
    }
    p
}

fn kpoly_rem(mut a: Vec<FieldElement>, b: &[FieldElement]) -> Vec<FieldElement> {
    let lead_inv = b.last().unwrap().inv().expect("nonzero leading coefficient");
    a = kpoly_trim(a);
    while a.len() >= b.len() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() * &lead_inv;
        for (k, c) in b.iter().enumerate() {
            a[shift + k] = &a[shift + k] - &(&f * c);
        }
        a.pop();
        a = kpoly_trim(a);
    }
    a
}

/// Euclidean gcd in `Q(beta)[y]`, up to a unit.
fn kpoly_gcd(a: Vec<FieldElement>, b: Vec<FieldElement>) -> Vec<FieldElement> {
    let (mut a, mut b) = (kpoly_trim(a), kpoly_trim(b));
    while !b.is_empty() {
        let r = kpoly_rem(a, &b);
        a = std::mem::replace(&mut b, r);
    }
    a
}

/// `psi(a)`: an element of `Q(beta)` evaluated at `gamma`.
#[derive(Clone, Debug)]
pub struct ConjugateValue {
    embedding: ConjugateEmbedding,
    element: FieldElement,
}

impl ConjugateValue {
    pub fn embedding(&self) -> &ConjugateEmbedding {
        &self.embedding
    }

    /// The preimage; its coordinates are the coordinates of `psi(a)`.
    pub fn element(&self) -> &FieldElement {
        &self.element
    }

    pub fn coords(&self) -> &[Rational] {
        self.element.coords()
    }

    pub fn enclosure(&self, bits: u32) -> ComplexInterval {
        if let Some(q) = self.element.as_rational() {
            return ComplexInterval::real(Interval::point(q.clone()));
        }
        let g = self.embedding.gamma_enclosure(bits);
        self.element
            .coords()
            .iter()
            .rev()
            .fold(ComplexInterval::real(Interval::zero()), |acc, c| acc.mul(&g).add_real(c))
    }

    /// Exact zero test at `gamma`.
    pub fn is_zero(&self) -> bool {
        self.embedding.vanishes(&self.element)
    }

    /// Exact sign at a real `gamma`; `None` for non-real `gamma`.
    pub fn sign(&self) -> Option<i8> {
        if !self.embedding.is_real() {
            return None;
        }
        if let Some(q) = self.element.as_rational() {
            return Some(super::sign_of(q));
        }
        if self.is_zero() {
            return Some(0);
        }
        let mut bits = 64;
        loop {
            if let Some(s) = self.enclosure(bits).re.sign() {
                return Some(s);
            }
            bits *= 2;
        }
    }

    /// Enclosure of `|psi(a)|` of width roughly `2^-bits`.
    pub fn modulus(&self, bits: u32) -> Interval {
        self.enclosure(bits).modulus(bits)
    }

    /// Exact comparison of `|psi(a)|` with 1, when it differs from 1.
    /// Gives `None` only if `|psi(a)| = 1` up to `2^-max_bits`.
    pub fn compare_modulus_with_one(&self, max_bits: u32) -> Option<Ordering> {
        let one = Interval::point(Rational::one());
        let mut bits = 64;
        while bits <= max_bits {
            let m = self.enclosure(bits).modulus_squared();
            if let Some(o) = m.compare(&one) {
                return Some(o);
            }
            bits *= 2;
        }
        None
    }

    pub fn checked_add(&self, o: &ConjugateValue) -> Result<ConjugateValue> {
        self.same(o)?;
        Ok(self.with(self.element.checked_add(&o.element)?))
    }

    pub fn checked_sub(&self, o: &ConjugateValue) -> Result<ConjugateValue> {
        self.same(o)?;
        Ok(self.with(self.element.checked_sub(&o.element)?))
    }

    pub fn checked_mul(&self, o: &ConjugateValue) -> Result<ConjugateValue> {
        self.same(o)?;
        Ok(self.with(self.element.checked_mul(&o.element)?))
    }

    /// Inverse at `gamma`, itself the image of an element of `Q(beta)` when the
    /// minimal polynomial is irreducible.
    pub fn inv(&self) -> Result<ConjugateValue> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = self.element.to_poly();
        let m = self.embedding.field.minpoly();
        let (g, s, _) = a.ext_gcd(m);
        let s = if g.is_constant() { s } else { a.ext_gcd(&m.exact_div(&g)).1 };
        Ok(self.with(FieldElement::from_poly(&self.embedding.field, &s)))
    }

    fn same(&self, o: &ConjugateValue) -> Result<()> {
        if self.embedding.index == o.embedding.index && Arc::ptr_eq(&self.embedding.field, &o.embedding.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, element: FieldElement) -> ConjugateValue {
        ConjugateValue { embedding: self.embedding.clone(), element }
    }
}

impl PartialEq for ConjugateValue {
    fn eq(&self, o: &Self) -> bool {
        self.embedding.index == o.embedding.index && self.element == o.element
    }
}
