//! Exact arithmetic in a real number field `Q(beta)`.
//!
//! A [`NumberField`] is a monic squarefree integer polynomial together with an
//! isolating interval selecting a real root `beta > 1`. Elements are
//! coordinate vectors over the power basis `1, beta, ..., beta^{d-1}`.
//!
//! Signs are decided with interval enclosures at the selected root, refined
//! with doubling precision, after an exact zero test (a gcd with the minimal
//! polynomial that has a root in the isolating interval). Squarefreeness of
//! the minimal polynomial is enough for every decision to be exact.

mod embedding;
mod series;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use embedding::{conjugate_embeddings, psi_apply, ConjugateEmbedding, ConjugateValue};
pub(crate) use series::tail_bound;
pub use series::{periodic_series_closed_form, periodic_series_value, periodic_series_value_at, SeriesField};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::polyq::{bisect_step, has_root_in, is_monic_integer, isolate_real_roots, Poly, RootBox, SturmSequence};
use crate::{Rational, RationalPoly, RationalRootBox};

/// Selects the real root defining a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootHint {
    /// The unique root in the closed interval `[lo, hi]`.
    Interval(Rational, Rational),
    /// The `k`-th real root in ascending order.
    Index(usize),
}

pub(crate) struct Conjugate {
    pub root: Mutex<RationalRootBox>,
    /// `|gamma|` compared with 1.
    pub modulus: Ordering,
}

pub struct NumberField {
    minpoly: RationalPoly,
    degree: usize,
    /// Validated isolating interval: exact point, or open `(lo, hi)` with `lo >= 1`.
    isolating: (Rational, Rational),
    /// Refinement-monotone dyadic bracket of the root.
    approx: Mutex<Dyadic>,
    conjugates: OnceLock<Vec<Conjugate>>,
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumberField").field("minpoly", &self.minpoly).field("root", &self.isolating).finish()
    }
}

pub(crate) fn sign_of(v: &Rational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// `n / d` in lowest terms. The gcd is taken after one division, which is
/// cheap when `d` is small and `n` is huge.
pub(crate) fn ratio(n: BigInt, d: BigInt) -> Rational {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n, d) };
    if d.is_one() {
        return Rational::from_integer(n);
    }
    let g = d.gcd(&n.mod_floor(&d));
    if g.is_one() {
        Rational::new_raw(n, d)
    } else {
        Rational::new_raw(n / &g, d / g)
    }
}

fn add_rat(a: &Rational, b: &Rational) -> Rational {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return b.clone();
    }
    if a.denom() == b.denom() {
        return ratio(a.numer() + b.numer(), a.denom().clone());
    }
    let l = a.denom().lcm(b.denom());
    ratio(a.numer() * (&l / a.denom()) + b.numer() * (&l / b.denom()), l)
}

fn mul_rat(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() || b.is_zero() {
        return Rational::zero();
    }
    ratio(a.numer() * b.numer(), a.denom() * b.denom())
}

/// Common denominator and integer numerators of a coordinate vector.
fn integer_coords(c: &[Rational]) -> (BigInt, Vec<BigInt>) {
    let den = c.iter().fold(BigInt::one(), |l, x| if x.denom().is_one() { l } else { l.lcm(x.denom()) });
    let nums = c.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    (den, nums)
}

/// Whether the squarefree `p` has a root in `(lo, hi)` (or at the point when `lo == hi`).
fn root_in(p: &RationalPoly, lo: &Rational, hi: &Rational) -> bool {
    match lo.cmp(hi) {
        Ordering::Greater => false,
        Ordering::Equal => p.eval(lo).is_zero(),
        Ordering::Less => {
            let n = SturmSequence::new(p).count_in(lo, hi);
            n > usize::from(p.eval(hi).is_zero())
        }
    }
}

/// Bracket `[l, h] / 2^k` of an irrational root (or both ends equal to a
/// rational root), refined by bisection on integers.
struct Dyadic {
    k: u32,
    l: BigInt,
    h: BigInt,
    /// Sign of the polynomial at `l / 2^k`; 0 marks an exact root.
    sign_l: i8,
    /// Integer coefficients of the monic minimal polynomial.
    coeffs: Vec<BigInt>,
}

impl Dyadic {
    /// A dyadic bracket inside the isolating interval `(lo, hi)` (or the exact point).
    fn inside(p: &RationalPoly, lo: &Rational, hi: &Rational) -> Dyadic {
        let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| c.to_integer()).collect();
        if lo == hi {
            let (n, d) = (lo.numer().clone(), lo.denom().clone());
            let k = d.bits() as u32;
            let l = (n << k) / d;
            return Dyadic { k, l: l.clone(), h: l, sign_l: 0, coeffs };
        }
        let (sl, sh) = (sign_of(&p.eval(lo)), sign_of(&p.eval(hi)));
        let mut k = 8;
        loop {
            let scale = Rational::from_integer(BigInt::one() << k);
            let l = (lo * &scale).ceil().to_integer();
            let h = (hi * &scale).floor().to_integer();
            if l < h {
                let d = Dyadic { k, l, h, sign_l: sl, coeffs: coeffs.clone() };
                if d.sign_at(&d.l, k) == sl && d.sign_at(&d.h, k) == sh {
                    return d;
                }
            }
            k += 8;
        }
    }

    /// Sign of the polynomial at `m / 2^k`.
    fn sign_at(&self, m: &BigInt, k: u32) -> i8 {
        let d = self.coeffs.len() - 1;
        let mut acc = self.coeffs[d].clone();
        for j in (0..d).rev() {
            acc = acc * m + (&self.coeffs[j] << (k as usize * (d - j)));
        }
        match acc.sign() {
            num_bigint::Sign::Plus => 1,
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
        }
    }

    fn refine(&mut self, bits: u32) {
        if self.sign_l == 0 {
            // exact rational root: a point bracket at any scale
            if self.k < bits {
                let s = bits - self.k;
                self.l <<= s;
                self.h <<= s;
                self.k = bits;
            }
            return;
        }
        while self.k < bits || (&self.h - &self.l).bits() as u32 + bits > self.k {
            let m = &self.l + &self.h;
            let k = self.k + 1;
            let sm = self.sign_at(&m, k);
            if sm == self.sign_l {
                self.l = m;
                self.h <<= 1;
            } else {
                self.h = m;
                self.l <<= 1;
            }
            self.k = k;
        }
    }
}

impl NumberField {
    /// Validate `minpoly` (monic, integer, squarefree) and select the real
    /// root `beta > 1` described by `hint`.
    pub fn new(minpoly: RationalPoly, hint: RootHint) -> Result<Arc<Self>> {
        if minpoly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_monic_integer(&minpoly) {
            return Err(Error::NotMonicInteger);
        }
        if minpoly.degree() == Some(0) {
            return Err(Error::NoRootAboveOne);
        }
        if !minpoly.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let (mut lo, mut hi) = match hint {
            RootHint::Index(k) => {
                let roots = isolate_real_roots(&minpoly)?;
                let r = roots.get(k).ok_or(Error::BadRootHint(roots.len()))?;
                let (lo, hi) = r.real_interval().unwrap();
                (lo.clone(), hi.clone())
            }
            RootHint::Interval(lo, hi) => {
                if lo > hi {
                    return Err(Error::BadRootHint(0));
                }
                let at_lo = minpoly.eval(&lo).is_zero();
                let n = if lo == hi {
                    usize::from(at_lo)
                } else {
                    SturmSequence::new(&minpoly).count_in(&lo, &hi) + usize::from(at_lo)
                };
                if n != 1 {
                    return Err(Error::BadRootHint(n));
                }
                if at_lo {
                    (lo.clone(), lo)
                } else if minpoly.eval(&hi).is_zero() {
                    (hi.clone(), hi)
                } else {
                    (lo, hi)
                }
            }
        };
        let one = Rational::one();
        if lo == hi {
            if lo <= one {
                return Err(Error::NoRootAboveOne);
            }
        } else {
            if hi <= one {
                return Err(Error::NoRootAboveOne);
            }
            if lo < one {
                let s1 = sign_of(&minpoly.eval(&one));
                if s1 == 0 || s1 != sign_of(&minpoly.eval(&lo)) {
                    return Err(Error::NoRootAboveOne);
                }
                lo = one.clone();
            }
            // a rational root of a monic integer polynomial is an integer
            while &hi - &lo >= one {
                if bisect_step(&minpoly, &mut lo, &mut hi) {
                    break;
                }
            }
            let n = Rational::from_integer(lo.ceil().to_integer());
            if lo != hi && n < hi && minpoly.eval(&n).is_zero() {
                lo = n.clone();
                hi = n;
            }
        }
        let degree = minpoly.degree().unwrap();
        let approx = Dyadic::inside(&minpoly, &lo, &hi);
        Ok(Arc::new(NumberField {
            minpoly,
            degree,
            isolating: (lo, hi),
            approx: Mutex::new(approx),
            conjugates: OnceLock::new(),
        }))
    }

    pub fn minpoly(&self) -> &RationalPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The validated isolating interval of the selected root.
    pub fn isolating_interval(&self) -> (&Rational, &Rational) {
        (&self.isolating.0, &self.isolating.1)
    }

    pub fn root_box(&self) -> RationalRootBox {
        RootBox::real(self.isolating.0.clone(), self.isolating.1.clone(), 1)
    }

    /// Enclosure of the selected root of width at most `2^-bits`.
    pub fn root_enclosure(&self, bits: u32) -> Interval {
        let (k, l, h) = self.dyadic_root(bits);
        let den = BigInt::one() << k;
        Interval::new(Rational::new(l, den.clone()), Rational::new(h, den))
    }

    /// Integers `(k, l, h)` with `l / 2^k <= beta <= h / 2^k`, `0 < l` and
    /// `(h - l) / 2^k <= 2^-bits`.
    pub(crate) fn dyadic_root(&self, bits: u32) -> (u32, BigInt, BigInt) {
        let mut g = self.approx.lock().unwrap();
        g.refine(bits);
        (g.k, g.l.clone(), g.h.clone())
    }

    /// The selected root when it is rational.
    pub fn exact_root(&self) -> Option<&Rational> {
        (self.isolating.0 == self.isolating.1).then_some(&self.isolating.0)
    }

    /// Same minimal polynomial and same selected root.
    pub fn same_as(&self, other: &NumberField) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        if self.minpoly != other.minpoly {
            return false;
        }
        let (a, b) = &self.isolating;
        let (c, d) = &other.isolating;
        if a == b || c == d {
            let (p, (lo, hi)) = if a == b { (a, (c, d)) } else { (c, (a, b)) };
            return (lo == hi && lo == p) || (lo < p && p < hi);
        }
        let lo = if a > c { a } else { c };
        let hi = if b < d { b } else { d };
        root_in(&self.minpoly, lo, hi)
    }

    /// Exact zero test of `poly(beta)`.
    pub(crate) fn vanishes_at_root(&self, poly: &RationalPoly) -> bool {
        if poly.is_zero() {
            return true;
        }
        let g = poly.gcd(&self.minpoly);
        !g.is_constant() && has_root_in(&g, &self.root_box())
    }

    pub(crate) fn conjugate_list(&self) -> &[Conjugate] {
        self.conjugates.get_or_init(|| embedding::compute_conjugates(self))
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

/// Element of `Q(beta)` as coordinates over the power basis.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn from_coords(field: &Arc<NumberField>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != field.degree {
            return Err(Error::CoordinateLength { expected: field.degree, got: coords.len() });
        }
        Ok(FieldElement { field: field.clone(), coords })
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree];
        coords[0] = q;
        FieldElement { field: field.clone(), coords }
    }

    pub fn from_int(field: &Arc<NumberField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(n.into()))
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, Rational::zero())
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    /// The selected root `beta`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &Poly::x())
    }

    /// `poly(beta)`, reduced.
    pub fn from_poly(field: &Arc<NumberField>, poly: &RationalPoly) -> Self {
        let r = poly.rem(&field.minpoly);
        let mut coords = r.into_coeffs();
        coords.resize(field.degree, Rational::zero());
        FieldElement { field: field.clone(), coords }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_poly(&self) -> RationalPoly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The value as a rational when all higher coordinates vanish.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(|c| c.is_zero()).then(|| &self.coords[0])
    }

    pub fn same_field(&self, other: &FieldElement) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.same_as(&other.field)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| add_rat(a, b)).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| add_rat(a, &-b)).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(q));
        }
        let (da, a) = integer_coords(&self.coords);
        let (db, b) = integer_coords(&other.coords);
        let d = self.field.degree;
        let mut c = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        // reduce modulo the monic integer minimal polynomial
        let m: Vec<BigInt> = self.field.minpoly.coeffs().iter().map(|x| x.to_integer()).collect();
        for top in (d..2 * d - 1).rev() {
            let t = std::mem::take(&mut c[top]);
            if t.is_zero() {
                continue;
            }
            for j in 0..d {
                c[top - d + j] -= &t * &m[j];
            }
        }
        let den = da * db;
        let coords = c.into_iter().take(d).map(|x| ratio(x, den.clone())).collect();
        Ok(FieldElement { field: self.field.clone(), coords })
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| mul_rat(c, q)).collect() }
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        let mut out = self.clone();
        out.coords[0] = add_rat(&out.coords[0], q);
        out
    }

    /// Multiplicative inverse via extended gcd with the minimal polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(&self.field, q.recip()));
        }
        let a = self.to_poly();
        let (g, s, _) = a.ext_gcd(&self.field.minpoly);
        if g.is_constant() {
            return Ok(Self::from_poly(&self.field, &s));
        }
        // reducible minimal polynomial: invert modulo the cofactor that
        // still vanishes at beta
        if has_root_in(&g, &self.field.root_box()) {
            return Err(Error::DivisionByZero);
        }
        let cof = self.field.minpoly.exact_div(&g);
        let (_, s, _) = a.ext_gcd(&cof);
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The exact value when it is rational.
    fn exact_value(&self) -> Option<Rational> {
        if let Some(q) = self.as_rational() {
            return Some(q.clone());
        }
        self.field.exact_root().map(|r| self.to_poly().eval(r))
    }

    /// Integers `(lo, hi, den)` with `lo / den <= value <= hi / den`, the root
    /// enclosed to `2^-bits`. Integer-only Horner evaluation at the dyadic
    /// root bounds, which are positive.
    fn scaled_enclosure(&self, bits: u32) -> (BigInt, BigInt, BigInt) {
        let (den, nums) = integer_coords(&self.coords);
        let (k, l, h) = self.field.dyadic_root(bits);
        let d = nums.len();
        let mut lo = nums[d - 1].clone();
        let mut hi = lo.clone();
        for j in (0..d - 1).rev() {
            lo = if lo.is_negative() { &lo * &h } else { &lo * &l };
            hi = if hi.is_negative() { &hi * &l } else { &hi * &h };
            let add = &nums[j] << (k as usize * (d - 1 - j));
            lo += &add;
            hi += add;
        }
        (lo, hi, den << (k as usize * (d - 1)))
    }

    /// Enclosure of the value with the root refined to `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Interval {
        if let Some(v) = self.exact_value() {
            return Interval::point(v);
        }
        let (lo, hi, den) = self.scaled_enclosure(bits);
        // outward rounding to the grid 2^-(bits + 2) keeps denominators small
        let b = bits as usize + 2;
        let g = BigInt::one() << b;
        let lo = (lo << b).div_floor(&den);
        let hi = -((-hi << b).div_floor(&den));
        Interval::new(Rational::new(lo, g.clone()), Rational::new(hi, g))
    }

    /// Starting precision for refinement: enough to beat coordinate growth.
    fn start_bits(&self) -> u32 {
        let size = self.coords.iter().map(|c| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0);
        (size as u32 + 48).max(64)
    }

    /// Exact sign of the value at the selected root.
    pub fn sign(&self) -> i8 {
        if let Some(v) = self.exact_value() {
            return sign_of(&v);
        }
        let mut bits = self.start_bits();
        let mut zero_tested = false;
        loop {
            let (lo, hi, _) = self.scaled_enclosure(bits);
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            if !zero_tested {
                zero_tested = true;
                if self.field.vanishes_at_root(&self.to_poly()) {
                    return 0;
                }
            }
            bits = bits.saturating_mul(2);
        }
    }

    /// Exact zero test of the value (coordinate test for irreducible fields).
    pub fn is_zero_value(&self) -> bool {
        self.is_zero() || self.sign() == 0
    }

    /// Exact comparison of values.
    pub fn cmp_value(&self, other: &FieldElement) -> Ordering {
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return a.cmp(b);
        }
        (self - other).sign().cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// The unique integer `n` with `n <= value < n + 1`.
    pub fn floor(&self) -> BigInt {
        if let Some(v) = self.exact_value() {
            return v.floor().to_integer();
        }
        let (lo, hi, den) = self.scaled_enclosure(self.start_bits());
        let (lo, hi) = (lo.div_floor(&den), hi.div_floor(&den));
        if lo == hi {
            return lo;
        }
        // largest n in [lo, hi] with value - n >= 0
        let (mut a, mut b) = (lo, hi);
        while a < b {
            let mid: BigInt = (&a + &b + 1) >> 1;
            if self.add_rational(&-Rational::from_integer(mid.clone())).sign() >= 0 {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        a
    }

    /// Smallest integer `>= value`.
    pub fn ceil(&self) -> BigInt {
        let f = self.floor();
        if self.add_rational(&-Rational::from_integer(f.clone())).is_zero_value() {
            f
        } else {
            f + 1
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.enclosure(64).to_f64()
    }
}

/// `a op b` with field checks.
pub fn arith(op: ArithOp, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

macro_rules! field_op {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for &FieldElement {
            type Output = FieldElement;
            /// # Panics
            /// On operands from different fields.
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                FieldElement::$checked(self, rhs).expect("field mismatch")
            }
        }
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                <&FieldElement as $tr>::$m(&self, &rhs)
            }
        }
    };
}
field_op!(Add, add, checked_add);
field_op!(Sub, sub, checked_sub);
field_op!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.same_field(other)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "FieldElement[{}]", c.join(", "))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            return write!(f, "0");
        }
        write!(f, "{}", p.to_string().replace('X', "b"))
    }
}
