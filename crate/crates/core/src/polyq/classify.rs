//! Pisot / Salem classification of algebraic integers.
//!
//! Roots on the unit circle are certified exactly: they are the roots of
//! `g = gcd(P, X^d P(1/X))` that survive the substitution `Y = X + 1/X` as
//! real roots in `(-2, 2)`, plus any roots at `+-1`. Roots off the circle are
//! separated by refining complex boxes until their modulus bounds exclude 1.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::roots::{isolate_complex_roots, refine_root};
use super::sturm::SturmSequence;
use crate::error::{Error, Result};
use crate::{RationalPoly, RationalRootBox};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseClass {
    Pisot,
    Salem,
    NeitherPisotNorSalem,
    NotAnAlgebraicInteger,
    NoRealRootGreaterThanOne,
}

/// Root counts of a squarefree polynomial relative to the unit circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct UnitCircleCensus {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient.
pub fn primitive_integer_part(p: &RationalPoly) -> RationalPoly {
    if p.is_zero() {
        return Poly::zero();
    }
    let lcm = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> =
        p.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    Poly::new(ints.into_iter().map(|c| BigRational::from_integer(c / &content * &sign)).collect())
}

/// Whether `p` is monic with integer coefficients.
pub fn is_monic_integer(p: &RationalPoly) -> bool {
    p.leading().is_some_and(|l| l.is_one()) && p.coeffs().iter().all(|c| c.is_integer())
}

/// `h` with `g(X) = X^e h(X + 1/X)` for a palindromic `g` of degree `2e`.
pub(crate) fn trace_polynomial(g: &RationalPoly) -> RationalPoly {
    let d = g.degree().unwrap_or(0);
    debug_assert!(d.is_multiple_of(2));
    let e = d / 2;
    // D_0 = 2, D_1 = Y, D_{j+1} = Y D_j - D_{j-1}, with X^j + X^-j = D_j(X + 1/X)
    let y = Poly::x();
    let mut prev = Poly::constant(BigRational::from_integer(2.into()));
    let mut cur = y.clone();
    let mut h = Poly::constant(g.coeff(e));
    for j in 1..=e {
        if j > 1 {
            let next = &(&y * &cur) - &prev;
            prev = std::mem::replace(&mut cur, next);
        }
        h = &h + &cur.scale(&g.coeff(e + j));
    }
    h
}

/// Exact number of roots of a squarefree `p` on the unit circle.
pub fn unit_circle_root_count(p: &RationalPoly) -> usize {
    let mut g = p.gcd(&p.reversed());
    let mut on = 0;
    for s in [1i64, -1] {
        let r = BigRational::from_integer(s.into());
        if !g.is_zero() && g.eval(&r).is_zero() {
            on += 1;
            g = g.exact_div(&Poly::new(vec![-r, BigRational::one()]));
        }
    }
    if g.degree().unwrap_or(0) == 0 {
        return on;
    }
    let h = trace_polynomial(&g);
    let two = BigRational::from_integer(2.into());
    on + 2 * SturmSequence::new(&h.squarefree_part()).count_in(&-two.clone(), &two)
}

/// Compare the modulus of every isolated root of the squarefree `sqf` with 1,
/// refining the boxes in place until only unit-circle roots stay undecided.
pub fn modulus_orderings(sqf: &RationalPoly, boxes: &mut [RationalRootBox]) -> Vec<Ordering> {
    let on = unit_circle_root_count(sqf);
    loop {
        let verdicts: Vec<Option<Ordering>> = boxes.iter().map(|b| b.compare_modulus_with_one()).collect();
        let undecided = verdicts.iter().filter(|v| v.is_none()).count();
        let exact_on = verdicts.iter().filter(|v| **v == Some(Ordering::Equal)).count();
        // unit-circle roots never decide; once only they remain, stop
        if undecided + exact_on == on {
            return verdicts.into_iter().map(|v| v.unwrap_or(Ordering::Equal)).collect();
        }
        for (b, v) in boxes.iter_mut().zip(&verdicts) {
            if v.is_none() {
                refine_root(sqf, b);
            }
        }
    }
}

/// Count roots of a squarefree `p` inside, on and outside the unit circle.
pub fn unit_circle_census(p: &RationalPoly) -> Result<UnitCircleCensus> {
    let sqf = p.monic();
    let mut boxes = isolate_complex_roots(&sqf)?;
    let mut census = UnitCircleCensus::default();
    for o in modulus_orderings(&sqf, &mut boxes) {
        match o {
            Ordering::Less => census.inside += 1,
            Ordering::Equal => census.on += 1,
            Ordering::Greater => census.outside += 1,
        }
    }
    Ok(census)
}

/// Classify the largest real root of an integer polynomial.
///
/// For a reducible input, "conjugates" are all other roots of the supplied
/// polynomial.
pub fn classify_base_product(p: &RationalPoly) -> Result<BaseClass> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let prim = primitive_integer_part(p);
    if !prim.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !prim.leading().is_some_and(|l| l.is_one()) {
        return Ok(BaseClass::NotAnAlgebraicInteger);
    }
    if prim.degree() == Some(0) || SturmSequence::new(&prim).count_above(&BigRational::one()) == 0 {
        return Ok(BaseClass::NoRealRootGreaterThanOne);
    }
    let census = unit_circle_census(&prim)?;
    Ok(match (census.outside, census.on) {
        (1, 0) => BaseClass::Pisot,
        (1, _) => BaseClass::Salem,
        _ => BaseClass::NeitherPisotNorSalem,
    })
}
