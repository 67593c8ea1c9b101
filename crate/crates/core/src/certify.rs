//! Algebraic certification of `beta` from periodic representations of `1/q_i`,
//! and the conjugate-series mismatch probe.
//!
//! Given, for each shift `i`, a nonzero integer `q_i` and an ultimately
//! periodic integer sequence `a_{i,n}` with
//! `sum_n a_{i,n} / (beta_i ... beta_{i+n}) = 1/q_i`, the polynomials
//!
//! ```text
//! g_{i,j} = q_i (X^k - 1) sum_{n<m} a_{i,j+np} X^{m-1-n} + q_i sum_{n<k} a_{i,j+(m+n)p} X^{k-1-n}
//! ```
//!
//! satisfy `beta^m (beta^k - 1) = sum_j g_{i,j}(beta) beta_{i+j+1} ... beta_{i+p-1}`.
//! Read as a linear system in the products `beta_{i+1} ... beta_{i+p-1}`, this
//! makes `beta` a root of `det(M(X) - X^m (X^k - 1) I)`, whose leading
//! coefficient is `(-1)^p`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::base::AlternateBase;
use crate::error::{Error, Result};
use crate::expand::greedy_expand;
use crate::field::tail_bound;
use crate::field::{conjugate_embeddings, periodic_series_value, psi_apply, ConjugateEmbedding, FieldElement};
use crate::interval::ComplexInterval;
use crate::polyq::Poly;
use crate::{Rational, RationalPoly};

/// An ultimately periodic representation of `1/q` in the base shifted by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPSequenceInput {
    pub i: usize,
    pub q: i64,
    pub preperiod: Vec<i64>,
    pub period: Vec<i64>,
}

impl UPSequenceInput {
    /// The `n`-th term of the infinite sequence.
    pub fn term(&self, n: usize) -> i64 {
        if n < self.preperiod.len() {
            self.preperiod[n]
        } else {
            self.period[(n - self.preperiod.len()) % self.period.len()]
        }
    }

    /// The same sequence with preperiod of length `pre` and period of length `per`.
    /// `pre` must be at least the current preperiod length and `per` a multiple
    /// of the current period length.
    fn unrolled(&self, pre: usize, per: usize) -> UPSequenceInput {
        UPSequenceInput {
            i: self.i,
            q: self.q,
            preperiod: (0..pre).map(|n| self.term(n)).collect(),
            period: (pre..pre + per).map(|n| self.term(n)).collect(),
        }
    }
}

/// Inputs brought to a common shape: preperiods of length `m p` and periods of length `k p`.
#[derive(Clone, Debug)]
pub struct NormalizedInputs {
    pub m: usize,
    pub k: usize,
    /// Sorted by shift index.
    pub sequences: Vec<UPSequenceInput>,
}

impl NormalizedInputs {
    /// All `p` shifts present.
    pub fn complete(&self, p: usize) -> bool {
        self.sequences.len() == p
    }
}

/// Unroll every input to a common `(m, k)`: `m = ceil(max preperiod / p)`,
/// `k p = lcm` of all `lcm(period, p)`.
pub fn normalize_inputs(inputs: &[UPSequenceInput], p: usize) -> Result<NormalizedInputs> {
    if inputs.is_empty() {
        return Err(Error::InconsistentInputs("no sequences given".into()));
    }
    let mut seen = BTreeSet::new();
    for u in inputs {
        if u.i >= p {
            return Err(Error::InconsistentInputs(format!("shift index {} is not below p = {p}", u.i)));
        }
        if !seen.insert(u.i) {
            return Err(Error::InconsistentInputs(format!("shift index {} given twice", u.i)));
        }
        if u.q == 0 {
            return Err(Error::InconsistentInputs("q must be nonzero".into()));
        }
        if u.period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
    }
    let max_pre = inputs.iter().map(|u| u.preperiod.len()).max().unwrap();
    let m = max_pre.div_ceil(p);
    let per = inputs.iter().fold(p, |acc, u| acc.lcm(&u.period.len().lcm(&p)));
    let k = per / p;
    let mut sequences: Vec<_> = inputs.iter().map(|u| u.unrolled(m * p, per)).collect();
    sequences.sort_by_key(|u| u.i);
    Ok(NormalizedInputs { m, k, sequences })
}

/// Exact check of `sum_n a_n / (beta_i ... beta_{i+n}) = 1/q`.
/// Block lengths must be multiples of `p`; digits may be any integers.
pub fn verify_value(b: &AlternateBase, u: &UPSequenceInput) -> Result<bool> {
    let p = b.p();
    if u.i >= p {
        return Err(Error::InconsistentInputs(format!("shift index {} is not below p = {p}", u.i)));
    }
    if u.q == 0 {
        return Err(Error::InconsistentInputs("q must be nonzero".into()));
    }
    if u.period.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    let shifted = b.shift(u.i);
    let head = shifted.group_any(&u.preperiod)?;
    let cycle = shifted.group_any(&u.period)?;
    let value = periodic_series_value(&head, &cycle, &b.product())?;
    let target = FieldElement::from_rational(b.field(), Rational::new(BigInt::one(), u.q.into()));
    Ok(value == target || value.checked_sub(&target)?.is_zero_value())
}

/// `p x p` table of the polynomials `g_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GijTable {
    pub g: Vec<Vec<RationalPoly>>,
}

impl GijTable {
    pub fn p(&self) -> usize {
        self.g.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalPoly {
        &self.g[i][j]
    }
}

fn int_poly(c: Vec<i64>) -> RationalPoly {
    Poly::new(c.into_iter().map(|v| Rational::from_integer(v.into())).collect())
}

/// Build the `g_{i,j}` from normalized inputs covering all `p` shifts.
pub fn build_gij(inputs: &NormalizedInputs, p: usize) -> Result<GijTable> {
    let (m, k) = (inputs.m, inputs.k);
    if !inputs.complete(p) {
        return Err(Error::InconsistentInputs(format!(
            "{} of {p} shifts supplied; the matrix needs all of them",
            inputs.sequences.len()
        )));
    }
    let xk_minus_one = &Poly::monomial(Rational::one(), k) - &Poly::one();
    let mut g = Vec::with_capacity(p);
    for u in &inputs.sequences {
        if u.preperiod.len() != m * p || u.period.len() != k * p {
            return Err(Error::InconsistentInputs("sequences do not share (m, k)".into()));
        }
        let q = Rational::from_integer(u.q.into());
        let row = (0..p)
            .map(|j| {
                // coefficient of X^{m-1-n} is a_{j+np}; store ascending
                let head = int_poly((0..m).rev().map(|n| u.preperiod[j + n * p]).collect());
                let tail = int_poly((0..k).rev().map(|n| u.period[j + n * p]).collect());
                (&(&xk_minus_one * &head) + &tail).scale(&q)
            })
            .collect();
        g.push(row);
    }
    Ok(GijTable { g })
}

/// The matrix `M(X)`: row `r` belongs to shift `i = r + 1 mod p`, column `c`
/// to `j = c - i mod p`, and entries right of the diagonal carry a factor `X`.
pub fn assemble_matrix(g: &GijTable) -> Vec<Vec<RationalPoly>> {
    let p = g.p();
    (0..p)
        .map(|r| {
            let i = (r + 1) % p;
            (0..p)
                .map(|c| {
                    let j = (c + p - i) % p;
                    let e = g.get(i, j).clone();
                    if c > r {
                        &e * &Poly::x()
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant over `Q[X]` by fraction-free (Bareiss) elimination.
pub fn determinant(mut a: Vec<Vec<RationalPoly>>) -> RationalPoly {
    let n = a.len();
    if n == 0 {
        return Poly::one();
    }
    let mut sign = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// `det(M(X) - X^m (X^k - 1) I)`.
pub fn annihilating_polynomial(g: &GijTable, m: usize, k: usize) -> RationalPoly {
    let shift = &Poly::monomial(Rational::one(), m + k) - &Poly::monomial(Rational::one(), m);
    let mut a = assemble_matrix(g);
    for (r, row) in a.iter_mut().enumerate() {
        row[r] = &row[r] - &shift;
    }
    determinant(a)
}

/// `beta_{from} ... beta_{to-1}` with indices mod `p` (empty product is 1).
fn beta_product(b: &AlternateBase, from: usize, to: usize) -> FieldElement {
    (from..to).fold(FieldElement::one(b.field()), |acc, n| &acc * b.beta(n))
}

/// Per shift `i`: `beta^m (beta^k - 1) = sum_j g_{i,j}(beta) beta_{i+j+1} ... beta_{i+p-1}`.
pub fn verify_shift_identities(b: &AlternateBase, g: &GijTable, m: usize, k: usize) -> Vec<bool> {
    let p = b.p();
    let beta = b.product();
    let lhs = &beta.pow(m as u32) * &beta.pow(k as u32).add_rational(&-Rational::one());
    (0..p)
        .map(|i| {
            let rhs = (0..p).fold(FieldElement::zero(b.field()), |acc, j| {
                let gij = FieldElement::from_poly(b.field(), g.get(i, j));
                &acc + &(&gij * &beta_product(b, i + j + 1, i + p))
            });
            rhs.checked_sub(&lhs).map(|d| d.is_zero_value()).unwrap_or(false)
        })
        .collect()
}

/// Whether all digits are non-negative and every shift has some `a_{i, n p} >= 1`.
pub fn positivity_hypothesis(inputs: &NormalizedInputs, p: usize) -> bool {
    inputs.sequences.iter().all(|u| {
        let all = || u.preperiod.iter().chain(&u.period);
        all().all(|&a| a >= 0) && all().step_by(p).any(|&a| a >= 1)
    })
}

/// `M(beta)` has non-negative entries and positive entries at `(r, r + 1 mod p)`.
pub fn irreducibility_witness(b: &AlternateBase, g: &GijTable) -> bool {
    let p = g.p();
    let m = assemble_matrix(g);
    (0..p).all(|r| {
        (0..p).all(|c| {
            let s = FieldElement::from_poly(b.field(), &m[r][c]).sign();
            s >= 0 && (c != (r + 1) % p || s > 0)
        })
    })
}

/// Relation between the annihilator and the field's minimal polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilatorRelation {
    /// Monic gcd of the two polynomials.
    pub gcd: RationalPoly,
    pub minpoly_divides: bool,
}

pub fn annihilator_relation(b: &AlternateBase, annihilator: &RationalPoly) -> AnnihilatorRelation {
    let mp = b.field().minpoly();
    let gcd = annihilator.gcd(mp);
    AnnihilatorRelation { minpoly_divides: gcd == *mp, gcd }
}

/// Result of the full certification pipeline.
#[derive(Clone, Debug)]
pub struct CertificationReport {
    pub m: usize,
    pub k: usize,
    /// `(i, q, holds)` for every supplied sequence.
    pub value_checks: Vec<(usize, i64, bool)>,
    /// Present when all `p` shifts were supplied.
    pub gij: Option<GijTable>,
    pub annihilator: Option<RationalPoly>,
    pub vanishes_at_beta: Option<bool>,
    pub shift_identities: Vec<bool>,
    pub relation: Option<AnnihilatorRelation>,
    /// `None` when the positivity hypothesis does not hold.
    pub irreducibility_witness: Option<bool>,
}

impl CertificationReport {
    /// All `p` shifts supplied and every exact check passed.
    pub fn certified(&self) -> bool {
        self.value_checks.iter().all(|v| v.2)
            && self.vanishes_at_beta == Some(true)
            && !self.shift_identities.is_empty()
            && self.shift_identities.iter().all(|&x| x)
    }
}

/// Value checks, then (with all shifts present) `g_{i,j}`, the annihilator,
/// its evaluation at `beta` and the per-shift identity.
pub fn certify(b: &AlternateBase, inputs: &[UPSequenceInput]) -> Result<CertificationReport> {
    let p = b.p();
    let norm = normalize_inputs(inputs, p)?;
    let value_checks =
        norm.sequences.iter().map(|u| Ok((u.i, u.q, verify_value(b, u)?))).collect::<Result<Vec<_>>>()?;
    let mut report = CertificationReport {
        m: norm.m,
        k: norm.k,
        value_checks,
        gij: None,
        annihilator: None,
        vanishes_at_beta: None,
        shift_identities: Vec::new(),
        relation: None,
        irreducibility_witness: None,
    };
    if !norm.complete(p) {
        return Ok(report);
    }
    let g = build_gij(&norm, p)?;
    let ann = annihilating_polynomial(&g, norm.m, norm.k);
    report.vanishes_at_beta = Some(FieldElement::from_poly(b.field(), &ann).is_zero_value() && !ann.is_zero());
    report.shift_identities = verify_shift_identities(b, &g, norm.m, norm.k);
    report.relation = Some(annihilator_relation(b, &ann));
    report.irreducibility_witness = positivity_hypothesis(&norm, p).then(|| irreducibility_witness(b, &g));
    report.annihilator = Some(ann);
    report.gij = Some(g);
    Ok(report)
}

/// Certification inputs for `1/q` read off the greedy expansion of `1/q` in
/// each shifted base (`q = 1` uses the expansion of 1 itself).
pub fn inputs_from_expansions(b: &AlternateBase, q: i64, max_groups: usize) -> Result<Option<Vec<UPSequenceInput>>> {
    let mut out = Vec::with_capacity(b.p());
    for i in 0..b.p() {
        let shifted = b.shift(i);
        let (pre, per) = if q == 1 {
            let one = crate::expand::expansion_of_one(&shifted, max_groups)?;
            let Some((pre, per)) = one.tail.split_digits() else {
                return Ok(None);
            };
            let mut head = vec![one.first_digit];
            head.extend_from_slice(pre);
            (head, per.to_vec())
        } else {
            let x = FieldElement::from_rational(b.field(), Rational::new(BigInt::one(), q.into()));
            let e = greedy_expand(&shifted, &x, max_groups)?;
            let Some((pre, per)) = e.split_digits() else {
                return Ok(None);
            };
            (pre.to_vec(), per.to_vec())
        };
        out.push(UPSequenceInput { i, q, preperiod: pre, period: per });
    }
    Ok(Some(out))
}

/// First index where the partial sums at `beta` and at `gamma` differ.
#[derive(Clone, Debug)]
pub struct MismatchReport {
    pub x: FieldElement,
    pub embedding: ConjugateEmbedding,
    /// Prefix length `N` examined.
    pub checked: usize,
    /// Least `n` in `1..=N` with `S_n(beta) != S_n(gamma)`.
    pub first_index: Option<usize>,
    /// Enclosure of `S_n(beta) - S_n(gamma)` at the reported index.
    pub difference: Option<ComplexInterval>,
    /// Sign of the difference when `gamma` is real.
    pub difference_sign: Option<i8>,
    /// `C = max Dig(beta)`.
    pub c: FieldElement,
    /// Upper bound on `D = max |psi(eta)|` over `Dig(beta)`.
    pub d_upper: Rational,
    /// Upper bound on `C / (beta^N (beta - 1)) + D / (|gamma|^N (|gamma| - 1))`.
    pub bound_upper: Rational,
}

const BOUND_BITS: u32 = 64;

/// The first conjugate with `|gamma| > 1`.
pub fn expanding_conjugate(b: &AlternateBase) -> Result<ConjugateEmbedding> {
    conjugate_embeddings(b.field(), true).into_iter().next().ok_or(Error::NoExpandingConjugate)
}

/// Compare `sum_{m<n} eta_m / beta^{m+1}` with `sum_{m<n} psi(eta_m) / gamma^{m+1}`
/// for `n = 1..=N`, where `eta` are the grouped greedy digits of `x`.
pub fn conjugate_series_mismatch(
    b: &AlternateBase,
    x: &FieldElement,
    e: &ConjugateEmbedding,
    n: usize,
) -> Result<MismatchReport> {
    if e.modulus_vs_one() != std::cmp::Ordering::Greater {
        return Err(Error::ConjugateNotExpanding);
    }
    if !e.field().same_as(b.field()) {
        return Err(Error::FieldMismatch);
    }
    let expansion = greedy_expand(b, x, n.max(1))?;
    let eta = expansion.eta_prefix(n).expect("expansion long enough or periodic");
    let beta_inv = b.product().inv()?;
    let mut sum = FieldElement::zero(b.field());
    let mut pow = FieldElement::one(b.field());
    let mut first_index = None;
    for (m, z) in eta.iter().enumerate() {
        pow = &pow * &beta_inv;
        sum = &sum + &(z * &pow);
        if !e.agrees(&sum) {
            first_index = Some(m + 1);
            break;
        }
    }
    let (difference, difference_sign) = match first_index {
        Some(_) => {
            let at_gamma = psi_apply(e, &sum)?;
            let at_beta = ComplexInterval::real(sum.enclosure(BOUND_BITS));
            let diff = at_beta.sub(&at_gamma.enclosure(BOUND_BITS));
            let sign = e.is_real().then(|| {
                let mut bits = BOUND_BITS;
                loop {
                    let d = ComplexInterval::real(sum.enclosure(bits)).sub(&at_gamma.enclosure(bits));
                    if let Some(s) = d.re.sign().filter(|&s| s != 0) {
                        break s;
                    }
                    bits *= 2;
                }
            });
            (Some(diff), sign)
        }
        None => (None, None),
    };
    let digits = b.digit_set()?;
    let c = b.max_digit();
    let d_upper = digits
        .iter()
        .map(|z| psi_apply(e, z).map(|v| v.modulus(BOUND_BITS).hi))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(Rational::zero(), |a, v| if v > a { v } else { a });
    let beta_lower = b.product().enclosure(BOUND_BITS).lo;
    let gamma_lower = e.modulus_enclosure(BOUND_BITS).lo;
    let c_upper = c.enclosure(BOUND_BITS).hi;
    let mut bound_upper = tail_bound(&c_upper, &beta_lower, n as u32);
    if gamma_lower > Rational::one() {
        bound_upper += tail_bound(&d_upper, &gamma_lower, n as u32);
    }
    let bound_upper = round_up(&bound_upper, 64);
    Ok(MismatchReport {
        x: x.clone(),
        embedding: e.clone(),
        checked: n,
        first_index,
        difference,
        difference_sign,
        c,
        d_upper,
        bound_upper,
    })
}

/// Smallest `v' >= v` with denominator `2^bits` relative to the leading bit of `v`.
fn round_up(v: &Rational, bits: u32) -> Rational {
    if v.is_zero() {
        return v.clone();
    }
    let lead = v.numer().bits() as i64 - v.denom().bits() as i64;
    let shift = (bits as i64 - lead).max(0) as usize;
    let g = BigInt::one() << shift;
    let n = (v * Rational::from_integer(g.clone())).ceil().to_integer();
    Rational::new(n, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::make_alternate_base;
    use crate::field::{NumberField, RootHint};
    use std::sync::Arc;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn field(c: &[i64], lo: i64, hi: i64) -> Arc<NumberField> {
        NumberField::new(int_poly(c.to_vec()), RootHint::Interval(q(lo, 1), q(hi, 1))).unwrap()
    }

    fn integer_base(betas: &[i64]) -> AlternateBase {
        let prod: i64 = betas.iter().product();
        let f = field(&[-prod, 1], 1, prod + 1);
        make_alternate_base(&f, betas.iter().map(|&v| vec![q(v, 1)]).collect()).unwrap()
    }

    fn seq(i: usize, qv: i64, pre: &[i64], per: &[i64]) -> UPSequenceInput {
        UPSequenceInput { i, q: qv, preperiod: pre.to_vec(), period: per.to_vec() }
    }

    #[test]
    fn value_checks() {
        assert!(verify_value(&integer_base(&[2]), &seq(0, 1, &[], &[1])).unwrap());
        assert!(verify_value(&integer_base(&[3]), &seq(0, 2, &[], &[1])).unwrap());
        let b = integer_base(&[2, 3]);
        assert!(verify_value(&b, &seq(0, 1, &[], &[1, 2])).unwrap());
        assert!(!verify_value(&b, &seq(0, 2, &[], &[1, 2])).unwrap());
        assert_eq!(verify_value(&b, &seq(0, 1, &[], &[1])).unwrap_err(), Error::LengthNotMultiple { len: 1, p: 2 });
    }

    #[test]
    fn gij_examples() {
        let n = normalize_inputs(&[seq(0, 1, &[], &[1])], 1).unwrap();
        assert_eq!((n.m, n.k), (0, 1));
        assert_eq!(build_gij(&n, 1).unwrap().get(0, 0), &int_poly(vec![1]));
        let n = normalize_inputs(&[seq(0, 2, &[], &[1])], 1).unwrap();
        assert_eq!(build_gij(&n, 1).unwrap().get(0, 0), &int_poly(vec![2]));
        let n = normalize_inputs(&[seq(0, 1, &[], &[1, 2]), seq(1, 1, &[], &[2, 1])], 2).unwrap();
        let g = build_gij(&n, 2).unwrap();
        assert_eq!(g.g, vec![vec![int_poly(vec![1]), int_poly(vec![2])], vec![int_poly(vec![2]), int_poly(vec![1])]]);
    }

    #[test]
    fn annihilator_examples() {
        let one = |c: i64| GijTable { g: vec![vec![int_poly(vec![c])]] };
        assert_eq!(annihilating_polynomial(&one(1), 0, 1), int_poly(vec![2, -1]));
        assert_eq!(annihilating_polynomial(&one(2), 0, 1), int_poly(vec![3, -1]));
        let g = GijTable {
            g: vec![vec![int_poly(vec![1]), int_poly(vec![2])], vec![int_poly(vec![2]), int_poly(vec![1])]],
        };
        assert_eq!(annihilating_polynomial(&g, 0, 1), int_poly(vec![6, -7, 1]));
    }

    #[test]
    fn shift_identity_examples() {
        let b = integer_base(&[2, 3]);
        let n = normalize_inputs(&[seq(0, 1, &[], &[1, 2]), seq(1, 1, &[], &[2, 1])], 2).unwrap();
        let g = build_gij(&n, 2).unwrap();
        assert_eq!(verify_shift_identities(&b, &g, 0, 1), vec![true, true]);
        let b = integer_base(&[2]);
        let g = GijTable { g: vec![vec![int_poly(vec![1])]] };
        assert_eq!(verify_shift_identities(&b, &g, 0, 1), vec![true]);
    }

    #[test]
    fn normalization_unrolls() {
        let n = normalize_inputs(&[seq(0, 1, &[1], &[2, 3, 4]), seq(1, 1, &[], &[5])], 2).unwrap();
        assert_eq!((n.m, n.k), (1, 3));
        assert_eq!(n.sequences[0].preperiod, vec![1, 2]);
        assert_eq!(n.sequences[0].period, vec![3, 4, 2, 3, 4, 2]);
        assert_eq!(n.sequences[1].period, vec![5; 6]);
        assert!(normalize_inputs(&[seq(2, 1, &[], &[1])], 2).is_err());
        assert!(normalize_inputs(&[seq(0, 0, &[], &[1])], 1).is_err());
    }

    #[test]
    fn determinant_matches_leibniz() {
        let e = |c: &[i64]| int_poly(c.to_vec());
        let a = vec![
            vec![e(&[0]), e(&[1, 1]), e(&[2])],
            vec![e(&[3]), e(&[0, 0, 1]), e(&[1])],
            vec![e(&[1, -1]), e(&[0]), e(&[5])],
        ];
        // Leibniz expansion
        let perms = [([0, 1, 2], 1), ([0, 2, 1], -1), ([1, 0, 2], -1), ([1, 2, 0], 1), ([2, 0, 1], 1), ([2, 1, 0], -1)];
        let mut expected = Poly::zero();
        for (s, sg) in perms {
            let t = &(&a[0][s[0]] * &a[1][s[1]]) * &a[2][s[2]];
            expected = if sg > 0 { &expected + &t } else { &expected - &t };
        }
        assert_eq!(determinant(a), expected);
    }

    #[test]
    fn pipeline_on_two_three() {
        let b = integer_base(&[2, 3]);
        let r = certify(&b, &[seq(0, 1, &[], &[1, 2]), seq(1, 1, &[], &[2, 1])]).unwrap();
        assert!(r.certified());
        assert_eq!(r.irreducibility_witness, Some(true));
        assert!(r.relation.unwrap().minpoly_divides);
        let partial = certify(&b, &[seq(0, 1, &[], &[1, 2])]).unwrap();
        assert!(partial.annihilator.is_none() && !partial.certified());
    }

    #[test]
    fn inputs_from_greedy() {
        let b = integer_base(&[2, 3]);
        for qv in 1..=6 {
            let inputs = inputs_from_expansions(&b, qv, 100).unwrap().unwrap();
            let r = certify(&b, &inputs).unwrap();
            assert!(r.certified(), "q = {qv}");
        }
    }

    #[test]
    fn mismatch_requires_expanding_conjugate() {
        let f = field(&[-1, -1, 1], 1, 2);
        let b = make_alternate_base(&f, vec![vec![q(0, 1), q(1, 1)]]).unwrap();
        assert_eq!(expanding_conjugate(&b).unwrap_err(), Error::NoExpandingConjugate);
    }

    #[test]
    fn mismatch_on_sqrt13() {
        let f = field(&[-3, -1, 1], 2, 3);
        let b = make_alternate_base(&f, vec![vec![q(0, 1), q(1, 1)]]).unwrap();
        let e = expanding_conjugate(&b).unwrap();
        let x = FieldElement::from_rational(&f, q(1, 2));
        let r = conjugate_series_mismatch(&b, &x, &e, 64).unwrap();
        assert_eq!(r.first_index, Some(1));
        assert_eq!(r.difference_sign, Some(1));
        let zero = FieldElement::zero(&f);
        let r = conjugate_series_mismatch(&b, &zero, &e, 64).unwrap();
        assert_eq!(r.first_index, None);
    }
}
