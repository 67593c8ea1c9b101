//! Closed rational intervals and complex boxes with exact endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

fn min2(a: Rational, b: Rational) -> Rational {
    if a < b {
        a
    } else {
        b
    }
}

fn max2(a: Rational, b: Rational) -> Rational {
    if a > b {
        a
    } else {
        b
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    /// Sign of every point of the interval, if uniform.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Order of all points against all points of `other`, if uniform.
    pub fn compare(&self, other: &Interval) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if self.lo > other.hi {
            Some(Ordering::Greater)
        } else if self.is_point() && other.is_point() && self.lo == other.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn add(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &Interval) -> Interval {
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn neg(&self) -> Interval {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add_scalar(&self, c: &Rational) -> Interval {
        Interval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    pub fn mul(&self, o: &Interval) -> Interval {
        if o.is_point() {
            return self.scale(&o.lo);
        }
        if self.is_point() {
            return o.scale(&self.lo);
        }
        let a = &self.lo * &o.lo;
        let b = &self.lo * &o.hi;
        let c = &self.hi * &o.lo;
        let d = &self.hi * &o.hi;
        Interval { lo: min2(min2(a.clone(), b.clone()), min2(c.clone(), d.clone())), hi: max2(max2(a, b), max2(c, d)) }
    }

    /// `[min |x|, max |x|]`
    pub fn abs(&self) -> Interval {
        if self.contains_zero() {
            Interval { lo: Rational::zero(), hi: max2(-&self.lo, self.hi.clone()) }
        } else if self.lo.is_positive() {
            self.clone()
        } else {
            self.neg()
        }
    }

    /// `[min x^2, max x^2]`
    pub fn square(&self) -> Interval {
        let a = self.abs();
        Interval { lo: &a.lo * &a.lo, hi: &a.hi * &a.hi }
    }

    /// Interval of `1/x`; `None` if the interval contains zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    /// Interval of `x^n`.
    pub fn powi(&self, n: u32) -> Interval {
        (0..n).fold(Interval::point(Rational::one()), |acc, _| acc.mul(self))
    }

    /// Widen to dyadic endpoints with denominator `2^bits`.
    pub fn round_outward(&self, bits: u32) -> Interval {
        let scale = Rational::from_integer(BigInt::one() << bits);
        let lo = (&self.lo * &scale).floor() / &scale;
        let hi = (&self.hi * &scale).ceil() / &scale;
        Interval { lo, hi }
    }

    /// Enclosure of `sqrt(x)` for `x >= 0`, widened by at most `2^-bits`.
    pub fn sqrt(&self, bits: u32) -> Interval {
        Interval { lo: sqrt_floor(&self.lo, bits), hi: sqrt_ceil(&self.hi, bits) }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

fn sqrt_floor(x: &Rational, bits: u32) -> Rational {
    if !x.is_positive() {
        return Rational::zero();
    }
    let s = BigInt::one() << (2 * bits);
    let n = (x * Rational::from_integer(s)).floor().to_integer();
    Rational::new(n.sqrt(), BigInt::one() << bits)
}

fn sqrt_ceil(x: &Rational, bits: u32) -> Rational {
    if !x.is_positive() {
        return Rational::zero();
    }
    let s = BigInt::one() << (2 * bits);
    let n = (x * Rational::from_integer(s)).ceil().to_integer();
    let r = n.sqrt();
    let r = if &r * &r == n { r } else { r + 1 };
    Rational::new(r, BigInt::one() << bits)
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Rectangle `re + i im` in the complex plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexInterval {
    pub fn real(re: Interval) -> Self {
        ComplexInterval { re, im: Interval::zero() }
    }

    pub fn add(&self, o: &Self) -> Self {
        ComplexInterval { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ComplexInterval { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn add_real(&self, c: &Rational) -> Self {
        ComplexInterval { re: self.re.add_scalar(c), im: self.im.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ComplexInterval {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn excludes_zero(&self) -> bool {
        !self.re.contains_zero() || !self.im.contains_zero()
    }

    pub fn modulus_squared(&self) -> Interval {
        self.re.square().add(&self.im.square())
    }

    pub fn modulus(&self, bits: u32) -> Interval {
        self.modulus_squared().sqrt(bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn multiplication_covers_sign_cases() {
        let a = Interval::new(q(-1, 1), q(2, 1));
        let b = Interval::new(q(-3, 1), q(1, 1));
        assert_eq!(a.mul(&b), Interval::new(q(-6, 1), q(3, 1)));
        assert_eq!(a.square(), Interval::new(q(0, 1), q(4, 1)));
    }

    #[test]
    fn sqrt_brackets() {
        let r = Interval::point(q(2, 1)).sqrt(20);
        assert!(&r.lo * &r.lo <= q(2, 1) && &r.hi * &r.hi >= q(2, 1));
        assert!(r.width() <= q(1, 1 << 19));
        assert_eq!(Interval::point(q(9, 4)).sqrt(4), Interval::point(q(3, 2)));
    }

    #[test]
    fn outward_rounding_contains() {
        let i = Interval::new(q(1, 3), q(2, 3));
        let r = i.round_outward(8);
        assert!(r.lo <= i.lo && r.hi >= i.hi);
        assert_eq!(r.lo.denom() % 2, num_bigint::BigInt::zero());
    }
}
