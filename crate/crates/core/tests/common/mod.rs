#![allow(dead_code)]

use std::sync::Arc;

use altbase::base::{make_alternate_base, AlternateBase};
use altbase::certify::UPSequenceInput;
use altbase::field::{FieldElement, NumberField, RootHint};
use altbase::{Poly, Rational, RationalPoly};
use rand::Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int_poly(c: &[i64]) -> RationalPoly {
    Poly::new(c.iter().map(|&v| q(v, 1)).collect())
}

pub fn field(c: &[i64], lo: i64, hi: i64) -> Arc<NumberField> {
    NumberField::new(int_poly(c), RootHint::Interval(q(lo, 1), q(hi, 1))).unwrap()
}

/// Integer bases `(b_0, ..., b_{p-1})` over `Q`.
pub fn integer_base(betas: &[i64]) -> AlternateBase {
    let prod: i64 = betas.iter().product();
    let f = field(&[-prod, 1], 1, prod + 1);
    make_alternate_base(&f, betas.iter().map(|&v| vec![q(v, 1)]).collect()).unwrap()
}

/// `(phi)` over `Q(phi)`.
pub fn golden() -> AlternateBase {
    let f = field(&[-1, -1, 1], 1, 2);
    make_alternate_base(&f, vec![vec![q(0, 1), q(1, 1)]]).unwrap()
}

/// `((1 + sqrt 13) / 2)`.
pub fn sqrt13() -> AlternateBase {
    let f = field(&[-3, -1, 1], 2, 3);
    make_alternate_base(&f, vec![vec![q(0, 1), q(1, 1)]]).unwrap()
}

/// `Q(phi^3)` with minimal polynomial `x^2 - 4x - 1`.
pub fn phi_cubed_field() -> Arc<NumberField> {
    field(&[-1, -4, 1], 4, 5)
}

/// `phi = (beta - 1) / 2` inside `Q(phi^3)`.
pub fn phi_in(f: &Arc<NumberField>) -> FieldElement {
    FieldElement::from_coords(f, vec![q(-1, 2), q(1, 2)]).unwrap()
}

/// `(phi^2, phi)` over `Q(phi^3)`.
pub fn phi2_phi() -> AlternateBase {
    let f = phi_cubed_field();
    let phi = phi_in(&f);
    AlternateBase::new(&f, vec![&phi * &phi, phi]).unwrap()
}

/// `(phi, phi, phi)` over `Q(phi^3)`.
pub fn triple_phi() -> AlternateBase {
    let f = phi_cubed_field();
    let phi = phi_in(&f);
    AlternateBase::new(&f, vec![phi.clone(), phi.clone(), phi]).unwrap()
}

/// Rational with numerator and denominator of absolute value at most `h`.
pub fn random_rational<R: Rng>(rng: &mut R, h: i64) -> Rational {
    q(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

/// A uniformly drawn element of `Q(beta) n [0, 1)` with coordinate height `<= h`.
pub fn random_unit_element<R: Rng>(rng: &mut R, f: &Arc<NumberField>, h: i64) -> FieldElement {
    let one = FieldElement::one(f);
    loop {
        let coords = (0..f.degree()).map(|_| random_rational(rng, h)).collect();
        let x = FieldElement::from_coords(f, coords).unwrap();
        if x.sign() >= 0 && x.cmp_value(&one).is_lt() {
            return x;
        }
    }
}

/// Minimal f64 complex arithmetic for floating-point oracles.
#[derive(Clone, Copy, Debug)]
pub struct C(pub f64, pub f64);

impl C {
    pub fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    pub fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    pub fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    pub fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    pub fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
}

/// All complex roots of a monic f64 polynomial (ascending coefficients) by
/// Durand-Kerner iteration.
pub fn durand_kerner(c: &[f64]) -> Vec<C> {
    let n = c.len() - 1;
    let eval = |z: C| c.iter().rev().fold(C(0.0, 0.0), |acc, &a| acc.mul(z).add(C(a, 0.0)));
    let seed = C(0.4, 0.9);
    let mut roots: Vec<C> = (0..n)
        .scan(C(1.0, 0.0), |p, _| {
            *p = p.mul(seed);
            Some(*p)
        })
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let denom = (0..n).filter(|&j| j != i).fold(C(1.0, 0.0), |acc, j| acc.mul(roots[i].sub(roots[j])));
            let step = eval(roots[i]).div(denom);
            roots[i] = roots[i].sub(step);
            delta = delta.max(step.abs());
        }
        if delta < 1e-15 {
            break;
        }
    }
    roots
}

/// Same sequence, with `extra` period letters moved into the preperiod and the
/// period repeated `reps` times.
pub fn reshape(u: &UPSequenceInput, extra: usize, reps: usize) -> UPSequenceInput {
    let pre = u.preperiod.len() + extra;
    let per = u.period.len() * reps;
    UPSequenceInput {
        i: u.i,
        q: u.q,
        preperiod: (0..pre).map(|n| u.term(n)).collect(),
        period: (pre..pre + per).map(|n| u.term(n)).collect(),
    }
}
