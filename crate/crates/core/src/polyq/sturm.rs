//! Sturm sequences, Cauchy indices and real root isolation by bisection.

use std::cmp::Ordering;

use super::poly::Poly;
use super::roots::RootBox;
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

pub(crate) fn sign_of<T: ExactScalar>(v: &T) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Signed remainder sequence `s0 = a, s1 = b, s_{k+1} = -rem(s_{k-1}, s_k)`.
#[derive(Clone, Debug)]
pub struct SturmSequence<T> {
    seq: Vec<Poly<T>>,
}

impl<T: ExactScalar> SturmSequence<T> {
    /// The classical sequence of `p` and `p'`.
    pub fn new(p: &Poly<T>) -> Self {
        Self::signed_remainders(p.clone(), p.derivative())
    }

    pub fn signed_remainders(a: Poly<T>, b: Poly<T>) -> Self {
        let mut seq = vec![a];
        let mut next = b;
        while !next.is_zero() {
            let r = -&seq.last().unwrap().rem(&next);
            seq.push(next);
            next = r;
        }
        SturmSequence { seq }
    }

    pub fn variations_at(&self, x: &T) -> usize {
        count_variations(self.seq.iter().map(|p| sign_of(&p.eval(x))))
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`.
    pub fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.seq.iter().map(|p| {
            let d = p.degree().unwrap_or(0);
            let s = sign_of(p.leading().unwrap_or(&T::zero()));
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots of the first polynomial in `(a, b]`.
    pub fn count_in(&self, a: &T, b: &T) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false).saturating_sub(self.variations_at_infinity(true))
    }

    /// Distinct real roots in `(a, +inf)`.
    pub fn count_above(&self, a: &T) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at_infinity(true))
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Cauchy index of `num/den` over `[a, b]`: jumps from `-inf` to `+inf` count
/// `+1`, the reverse `-1`. Requires `den(a) != 0` and `den(b) != 0`.
pub fn cauchy_index<T: ExactScalar>(num: &Poly<T>, den: &Poly<T>, a: &T, b: &T) -> i64 {
    let s = SturmSequence::signed_remainders(den.clone(), num.clone());
    s.variations_at(a) as i64 - s.variations_at(b) as i64
}

/// Strict bound on the modulus of every complex root: `1 + max |c_k / c_d|`.
pub fn cauchy_bound<T: ExactScalar>(p: &Poly<T>) -> T {
    let lc = p.leading().cloned().unwrap_or_else(T::one);
    let m = p.coeffs()[..p.coeffs().len().saturating_sub(1)]
        .iter()
        .map(|c| (c.clone() / lc.clone()).abs())
        .fold(T::zero(), |m, v| if v > m { v } else { m });
    T::one() + m
}

/// Isolate every distinct real root of `p`, sorted ascending, each box
/// carrying its multiplicity.
///
/// Intervals are open with non-root endpoints at which the squarefree part of
/// `p` changes sign, or degenerate `[r, r]` for a rational root `r` hit during
/// bisection.
pub fn isolate_real_roots<T: ExactScalar>(p: &Poly<T>) -> Result<Vec<RootBox<T>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let factors = p.squarefree_decomposition();
    let sqf = p.squarefree_part();
    let intervals = isolate_squarefree(&sqf);
    let out = intervals
        .into_iter()
        .map(|(lo, hi)| {
            let mult =
                factors
                    .iter()
                    .find(|(_, f)| {
                        if lo == hi {
                            f.eval(&lo).is_zero()
                        } else {
                            sign_of(&f.eval(&lo)) * sign_of(&f.eval(&hi)) < 0
                        }
                    })
                    .map(|(i, _)| *i)
                    .unwrap_or(1);
            RootBox::real(lo, hi, mult)
        })
        .collect();
    Ok(out)
}

/// Open isolating intervals (or exact points) for a squarefree polynomial.
pub(crate) fn isolate_squarefree<T: ExactScalar>(sqf: &Poly<T>) -> Vec<(T, T)> {
    let sturm = SturmSequence::new(sqf);
    let b = cauchy_bound(sqf);
    let mut out = Vec::new();
    // half-open (lo, hi] with its root count
    let mut stack = vec![(-b.clone(), b.clone(), sturm.count_in(&-b.clone(), &b))];
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push(tighten_endpoints(sqf, &sturm, lo, hi)),
            _ => {
                let mid = T::midpoint(&lo, &hi);
                let left = sturm.count_in(&lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    out
}

/// Turn a half-open `(lo, hi]` holding one root into an exact point or an open
/// interval whose endpoints are not roots.
fn tighten_endpoints<T: ExactScalar>(sqf: &Poly<T>, sturm: &SturmSequence<T>, mut lo: T, hi: T) -> (T, T) {
    if sqf.eval(&hi).is_zero() {
        return (hi.clone(), hi);
    }
    let mut hi = hi;
    while sqf.eval(&lo).is_zero() {
        let mid = T::midpoint(&lo, &hi);
        if sqf.eval(&mid).is_zero() {
            return (mid.clone(), mid);
        }
        if sturm.count_in(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// One bisection step on an isolating interval of a squarefree polynomial.
/// Returns `true` once the root is known exactly.
pub fn bisect_step<T: ExactScalar>(sqf: &Poly<T>, lo: &mut T, hi: &mut T) -> bool {
    if lo == hi {
        return true;
    }
    let mid = T::midpoint(lo, hi);
    let sm = sign_of(&sqf.eval(&mid));
    if sm == 0 {
        *lo = mid.clone();
        *hi = mid;
        return true;
    }
    if sm == sign_of(&sqf.eval(lo)) {
        *lo = mid;
    } else {
        *hi = mid;
    }
    false
}
