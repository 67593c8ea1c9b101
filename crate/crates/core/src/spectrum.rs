//! The spectrum `X^D(beta) = { sum_{l<m} a_l beta^{m-1-l} : m >= 0, a_l in D }`
//! restricted to a window `[L, U]`, for a finite digit set `D` inside `Q(beta)`.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::base::{sort_dedup, AlternateBase};
use crate::error::{Error, Result};
use crate::expand::greedy_expand;
use crate::field::{FieldElement, NumberField};
use crate::Rational;

/// Default cap on `|D|^depth` for [`spectrum_bruteforce`].
pub const BRUTE_FORCE_CAP: u128 = 1 << 20;

#[derive(Clone, Debug)]
pub struct SpectrumRequest {
    pub field: Arc<NumberField>,
    pub beta: FieldElement,
    pub digits: Vec<FieldElement>,
    /// Largest word length.
    pub depth: usize,
    pub lo: Rational,
    pub hi: Rational,
}

#[derive(Clone, Debug)]
pub struct SpectrumResult {
    pub depth: usize,
    /// Distinct values in the window, strictly increasing.
    pub points: Vec<FieldElement>,
    /// Smallest difference of consecutive points; `None` below two points.
    pub min_gap: Option<FieldElement>,
    /// Whether longer words would still reach values near the window.
    pub truncated_at_depth: bool,
}

impl SpectrumResult {
    fn from_points(depth: usize, points: Vec<FieldElement>, truncated_at_depth: bool) -> Self {
        let min_gap = min_gap(&points);
        SpectrumResult { depth, points, min_gap, truncated_at_depth }
    }

    pub fn count(&self) -> usize {
        self.points.len()
    }

    /// Exact set equality of the point lists.
    pub fn same_points(&self, other: &SpectrumResult) -> bool {
        self.points.len() == other.points.len()
            && self.points.iter().zip(&other.points).all(|(a, b)| a.cmp_value(b).is_eq())
    }
}

/// Minimum of consecutive differences of an increasing list.
pub fn min_gap(points: &[FieldElement]) -> Option<FieldElement> {
    points.windows(2).map(|w| &w[1] - &w[0]).reduce(|a, b| if b.cmp_value(&a).is_lt() { b } else { a })
}

impl SpectrumRequest {
    fn validate(&self) -> Result<()> {
        if self.digits.is_empty() {
            return Err(Error::EmptyDigitSet);
        }
        if self.lo >= self.hi {
            return Err(Error::DegenerateWindow);
        }
        if !self.beta.field().same_as(&self.field) || self.digits.iter().any(|d| !d.field().same_as(&self.field)) {
            return Err(Error::FieldMismatch);
        }
        if self.beta.cmp_value(&FieldElement::one(&self.field)) != Ordering::Greater {
            return Err(Error::SeriesBaseTooSmall);
        }
        Ok(())
    }

    fn in_window(&self, v: &FieldElement) -> bool {
        let lo = FieldElement::from_rational(&self.field, self.lo.clone());
        let hi = FieldElement::from_rational(&self.field, self.hi.clone());
        v.cmp_value(&lo).is_ge() && v.cmp_value(&hi).is_le()
    }

    /// `max(|L|, |U|) + max |a| / (beta - 1)`: values beyond it never return.
    fn hull(&self) -> Result<FieldElement> {
        let reach = FieldElement::from_rational(&self.field, self.lo.abs().max(self.hi.abs()));
        let a = self
            .digits
            .iter()
            .map(|d| d.abs())
            .reduce(|x, y| if y.cmp_value(&x).is_gt() { y } else { x })
            .expect("nonempty digits");
        let slack = a.checked_div(&self.beta.add_rational(&-Rational::one()))?;
        Ok(&reach + &slack)
    }
}

/// Level iteration `X_{m+1} = beta X_m + D` from `X_0 = {0}`, pruned to the
/// hull. Returns the spectrum at every depth `0..=req.depth`.
pub fn spectrum_by_depth(req: &SpectrumRequest) -> Result<Vec<SpectrumResult>> {
    req.validate()?;
    let hull = req.hull()?;
    let neg_hull = -&hull;
    let zero = FieldElement::zero(&req.field);
    let mut level = vec![zero.clone()];
    let mut found: HashSet<Vec<Rational>> = HashSet::new();
    let mut in_window = Vec::new();
    let keep = |v: &FieldElement, found: &mut HashSet<Vec<Rational>>, in_window: &mut Vec<FieldElement>| {
        if req.in_window(v) && found.insert(v.coords().to_vec()) {
            in_window.push(v.clone());
        }
    };
    keep(&zero, &mut found, &mut in_window);
    let mut out = vec![SpectrumResult::from_points(0, sort_dedup(in_window.clone()), true)];
    for m in 1..=req.depth {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for v in &level {
            let scaled = v * &req.beta;
            for a in &req.digits {
                let w = &scaled + a;
                if w.cmp_value(&hull).is_le() && w.cmp_value(&neg_hull).is_ge() && seen.insert(w.coords().to_vec()) {
                    keep(&w, &mut found, &mut in_window);
                    next.push(w);
                }
            }
        }
        level = next;
        out.push(SpectrumResult::from_points(m, sort_dedup(in_window.clone()), !level.is_empty()));
    }
    Ok(out)
}

/// The spectrum from words of length at most `req.depth`.
pub fn spectrum(req: &SpectrumRequest) -> Result<SpectrumResult> {
    Ok(spectrum_by_depth(req)?.pop().expect("depth 0 always present"))
}

/// Enumerate every word of length `<= depth` with `|D|^depth` capped at `cap`.
pub fn spectrum_bruteforce_capped(req: &SpectrumRequest, cap: u128) -> Result<SpectrumResult> {
    req.validate()?;
    let words = (req.digits.len() as u128).checked_pow(req.depth as u32).unwrap_or(u128::MAX);
    if words > cap {
        return Err(Error::BruteForceCap { words, cap });
    }
    let mut values = vec![FieldElement::zero(&req.field)];
    let mut frontier = values.clone();
    for _ in 0..req.depth {
        frontier = frontier
            .iter()
            .flat_map(|v| {
                let scaled = v * &req.beta;
                req.digits.iter().map(move |a| &scaled + a)
            })
            .collect();
        values.extend(frontier.iter().cloned());
    }
    let points = sort_dedup(values.into_iter().filter(|v| req.in_window(v)).collect());
    Ok(SpectrumResult::from_points(req.depth, points, true))
}

pub fn spectrum_bruteforce(req: &SpectrumRequest) -> Result<SpectrumResult> {
    spectrum_bruteforce_capped(req, BRUTE_FORCE_CAP)
}

/// Spectrum over `-Dig(beta) u Dig(beta) u {x}` in `[0, 1]`, the set that
/// contains every grouped remainder `r_{mp}` of the expansion of `x`.
#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub digits: Vec<FieldElement>,
    /// One entry per depth `1..=depth`.
    pub per_depth: Vec<SpectrumResult>,
}

impl ProbeReport {
    pub fn last(&self) -> &SpectrumResult {
        self.per_depth.last().expect("depth >= 1")
    }
}

pub fn remainder_spectrum_request(b: &AlternateBase, x: &FieldElement, depth: usize) -> Result<SpectrumRequest> {
    if !x.field().same_as(b.field()) {
        return Err(Error::FieldMismatch);
    }
    if x.sign() < 0 || x.cmp_value(&FieldElement::one(b.field())).is_ge() {
        return Err(Error::OutOfUnitInterval);
    }
    let dig = b.digit_set()?;
    let mut digits: Vec<FieldElement> = dig.iter().map(|d| -d).chain(dig.iter().cloned()).collect();
    digits.push(x.clone());
    Ok(SpectrumRequest {
        field: b.field().clone(),
        beta: b.product(),
        digits: sort_dedup(digits),
        depth,
        lo: Rational::zero(),
        hi: Rational::one(),
    })
}

pub fn remainder_spectrum_probe(b: &AlternateBase, x: &FieldElement, depth: usize) -> Result<ProbeReport> {
    if depth == 0 {
        return Err(Error::InconsistentInputs("probe depth must be at least 1".into()));
    }
    let req = remainder_spectrum_request(b, x, depth)?;
    let mut per_depth = spectrum_by_depth(&req)?;
    per_depth.remove(0);
    Ok(ProbeReport { digits: req.digits, per_depth })
}

/// The grouped remainders `r_0, r_p, ..., r_{(n-1)p}` of `x`; `r_{mp}` is the
/// value of the word `(x, -eta_0, ..., -eta_{m-1})` of length `m + 1`.
pub fn grouped_remainders(b: &AlternateBase, x: &FieldElement, n: usize) -> Result<Vec<FieldElement>> {
    let e = greedy_expand(b, x, n.max(1))?;
    Ok(e.remainders.into_iter().take(n).collect())
}
