//! Isolating boxes for real and complex roots.
//!
//! Complex roots are counted inside a rectangle with the argument principle:
//! along each edge `P(z(t)) = A(t) + i B(t)` with rational `A`, `B`, and the
//! winding number is half the sum of the Cauchy indices of `A/B`. Everything
//! is exact; no root may lie on a box edge, which subdivision guarantees by
//! testing each new cut segment before using it.

use std::cmp::Ordering;

use super::poly::Poly;
use super::sturm::{bisect_step, cauchy_bound, cauchy_index, isolate_squarefree, SturmSequence};
use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootKind<T> {
    /// Open interval `(lo, hi)` with one root, or the exact root when `lo == hi`.
    Real { lo: T, hi: T },
    /// Closed rectangle with exactly one root in its interior. Never meets the
    /// real axis in its interior.
    Complex { re: (T, T), im: (T, T) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootBox<T> {
    kind: RootKind<T>,
    multiplicity: usize,
}

impl<T: ExactScalar> RootBox<T> {
    pub fn real(lo: T, hi: T, multiplicity: usize) -> Self {
        RootBox { kind: RootKind::Real { lo, hi }, multiplicity }
    }

    pub fn complex(re: (T, T), im: (T, T)) -> Self {
        RootBox { kind: RootKind::Complex { re, im }, multiplicity: 1 }
    }

    pub fn kind(&self) -> &RootKind<T> {
        &self.kind
    }

    pub fn multiplicity(&self) -> usize {
        self.multiplicity
    }

    pub fn is_real(&self) -> bool {
        matches!(self.kind, RootKind::Real { .. })
    }

    pub fn real_interval(&self) -> Option<(&T, &T)> {
        match &self.kind {
            RootKind::Real { lo, hi } => Some((lo, hi)),
            RootKind::Complex { .. } => None,
        }
    }

    /// Exact value when the root is a known rational.
    pub fn exact(&self) -> Option<&T> {
        match &self.kind {
            RootKind::Real { lo, hi } if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// Real and imaginary ranges of the box (imaginary range is `[0, 0]` for real roots).
    pub fn ranges(&self) -> ((T, T), (T, T)) {
        match &self.kind {
            RootKind::Real { lo, hi } => ((lo.clone(), hi.clone()), (T::zero(), T::zero())),
            RootKind::Complex { re, im } => (re.clone(), im.clone()),
        }
    }

    /// Bounds `(min, max)` of `|z|^2` over the closed box.
    pub fn modulus_squared_bounds(&self) -> (T, T) {
        let (re, im) = self.ranges();
        let (a, b) = square_range(&re);
        let (c, d) = square_range(&im);
        (a + c, b + d)
    }

    /// Strict comparison of the root's modulus with 1, when the box decides it.
    pub fn compare_modulus_with_one(&self) -> Option<Ordering> {
        if let Some(r) = self.exact() {
            return r.abs().partial_cmp(&T::one());
        }
        let (lo, hi) = self.modulus_squared_bounds();
        if hi <= T::one() {
            Some(Ordering::Less)
        } else if lo >= T::one() {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Width of the widest side.
    pub fn width(&self) -> T {
        let ((a, b), (c, d)) = self.ranges();
        let w = b - a;
        let h = d - c;
        if w > h {
            w
        } else {
            h
        }
    }
}

fn square_range<T: ExactScalar>((lo, hi): &(T, T)) -> (T, T) {
    let a = lo.clone() * lo.clone();
    let b = hi.clone() * hi.clone();
    let max = if a > b { a.clone() } else { b.clone() };
    let min = if !lo.is_positive() && !hi.is_negative() {
        T::zero()
    } else if a < b {
        a
    } else {
        b
    };
    (min, max)
}

/// Axis-aligned rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Rect<T> {
    pub x0: T,
    pub x1: T,
    pub y0: T,
    pub y1: T,
}

/// `P(za + t (zb - za))` split into real and imaginary parts.
fn edge_polys<T: ExactScalar>(p: &Poly<T>, za: &(T, T), zb: &(T, T)) -> (Poly<T>, Poly<T>) {
    let zr = Poly::new(vec![za.0.clone(), zb.0.clone() - za.0.clone()]);
    let zi = Poly::new(vec![za.1.clone(), zb.1.clone() - za.1.clone()]);
    let mut re = Poly::zero();
    let mut im = Poly::zero();
    for c in p.coeffs().iter().rev() {
        let nr = &(&re * &zr) - &(&im * &zi);
        let ni = &(&re * &zi) + &(&im * &zr);
        re = &nr + &Poly::constant(c.clone());
        im = ni;
    }
    (re, im)
}

fn eval_complex<T: ExactScalar>(p: &Poly<T>, z: &(T, T)) -> (T, T) {
    p.coeffs().iter().rev().fold((T::zero(), T::zero()), |(r, i), c| {
        (r.clone() * z.0.clone() - i.clone() * z.1.clone() + c.clone(), r * z.1.clone() + i * z.0.clone())
    })
}

/// Whether `p` vanishes somewhere on the closed segment `[za, zb]`.
fn segment_has_root<T: ExactScalar>(p: &Poly<T>, za: &(T, T), zb: &(T, T)) -> bool {
    let (a, b) = edge_polys(p, za, zb);
    let g = a.gcd(&b);
    if g.is_constant() {
        return false;
    }
    let zero = T::zero();
    let one = T::one();
    g.eval(&zero).is_zero() || SturmSequence::new(&g).count_in(&zero, &one) > 0
}

fn rotation_candidates<T: ExactScalar>() -> impl Iterator<Item = (T, T)> {
    let int = |k: i64| {
        let mut v = T::zero();
        for _ in 0..k.unsigned_abs() {
            v = v + T::one();
        }
        if k < 0 {
            -v
        } else {
            v
        }
    };
    (0i64..).flat_map(move |n| {
        // pairwise non-parallel directions (1, k) and (k, 1)
        if n == 0 {
            vec![(int(1), int(0)), (int(0), int(1))]
        } else {
            vec![(int(1), int(n)), (int(1), int(-n)), (int(n + 1), int(1)), (int(n + 1), int(-1))]
        }
    })
}

/// Number of roots strictly inside `r`. The boundary must be root-free.
pub(crate) fn count_in_rect<T: ExactScalar>(p: &Poly<T>, r: &Rect<T>) -> usize {
    let corners = [
        (r.x0.clone(), r.y0.clone()),
        (r.x1.clone(), r.y0.clone()),
        (r.x1.clone(), r.y1.clone()),
        (r.x0.clone(), r.y1.clone()),
    ];
    let values: Vec<(T, T)> = corners.iter().map(|z| eval_complex(p, z)).collect();
    // rotate P by a constant so no corner value is real; Cauchy indices then
    // have non-vanishing denominators at every edge endpoint
    let (cr, ci) = rotation_candidates::<T>()
        .find(|(cr, ci)| values.iter().all(|(wr, wi)| !(cr.clone() * wi.clone() + ci.clone() * wr.clone()).is_zero()))
        .expect("a finite set of directions is excluded");
    let zero = T::zero();
    let one = T::one();
    let mut total = 0i64;
    for k in 0..4 {
        let (a, b) = edge_polys(p, &corners[k], &corners[(k + 1) % 4]);
        let ra = &a.scale(&cr) - &b.scale(&ci);
        let rb = &b.scale(&cr) + &a.scale(&ci);
        total += cauchy_index(&ra, &rb, &zero, &one);
    }
    debug_assert!(total >= 0 && total % 2 == 0, "winding sum {total}");
    (total / 2) as usize
}

fn split_fractions<T: ExactScalar>() -> impl Iterator<Item = T> {
    let int = |k: usize| (0..k).fold(T::zero(), |v, _| v + T::one());
    std::iter::once(T::one() / int(2)).chain((3usize..).flat_map(move |n| {
        let d = int(2 * n + 1);
        [int(n) / d.clone(), int(n + 1) / d]
    }))
}

/// Split `r` into four children whose cut segments avoid every root.
fn subdivide<T: ExactScalar>(p: &Poly<T>, r: &Rect<T>) -> [Rect<T>; 4] {
    let w = r.x1.clone() - r.x0.clone();
    let h = r.y1.clone() - r.y0.clone();
    let xm = split_fractions::<T>()
        .map(|f| r.x0.clone() + w.clone() * f)
        .find(|xm| !segment_has_root(p, &(xm.clone(), r.y0.clone()), &(xm.clone(), r.y1.clone())))
        .unwrap();
    let ym = split_fractions::<T>()
        .map(|f| r.y0.clone() + h.clone() * f)
        .find(|ym| !segment_has_root(p, &(r.x0.clone(), ym.clone()), &(r.x1.clone(), ym.clone())))
        .unwrap();
    [
        Rect { x0: r.x0.clone(), x1: xm.clone(), y0: r.y0.clone(), y1: ym.clone() },
        Rect { x0: xm.clone(), x1: r.x1.clone(), y0: r.y0.clone(), y1: ym.clone() },
        Rect { x0: r.x0.clone(), x1: xm.clone(), y0: ym.clone(), y1: r.y1.clone() },
        Rect { x0: xm, x1: r.x1.clone(), y0: ym, y1: r.y1.clone() },
    ]
}

/// Child of `r` holding its single root.
fn shrink<T: ExactScalar>(p: &Poly<T>, r: &Rect<T>) -> Rect<T> {
    let children = subdivide(p, r);
    let n = children.len();
    for (k, c) in children.into_iter().enumerate() {
        if k + 1 == n || count_in_rect(p, &c) == 1 {
            return c;
        }
    }
    unreachable!()
}

fn straddles_axis<T: ExactScalar>(r: &Rect<T>) -> bool {
    r.y0.is_negative() && r.y1.is_positive()
}

/// Disjoint boxes covering every complex root of a squarefree `p` exactly once.
///
/// Real roots come back as Sturm-isolated real intervals; non-real roots as
/// rectangles off the real axis.
pub fn isolate_complex_roots<T: ExactScalar>(p: &Poly<T>) -> Result<Vec<RootBox<T>>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let degree = p.degree().unwrap();
    let sqf = p.monic();
    let mut out: Vec<RootBox<T>> =
        isolate_squarefree(&sqf).into_iter().map(|(lo, hi)| RootBox::real(lo, hi, 1)).collect();
    if out.len() == degree {
        return Ok(out);
    }
    let sturm = SturmSequence::new(&sqf);
    let b = cauchy_bound(&sqf);
    let mut work = vec![(Rect { x0: -b.clone(), x1: b.clone(), y0: -b.clone(), y1: b }, degree)];
    let mut complex = Vec::new();
    while let Some((r, n)) = work.pop() {
        match n {
            0 => {}
            1 => {
                if straddles_axis(&r) && sturm.count_in(&r.x0, &r.x1) == 1 {
                    continue;
                }
                let mut r = r;
                while straddles_axis(&r) {
                    r = shrink(&sqf, &r);
                }
                complex.push(r);
            }
            _ => {
                let children = subdivide(&sqf, &r);
                let mut seen = 0;
                let last = children.len() - 1;
                for (k, c) in children.into_iter().enumerate() {
                    let m = if k == last { n - seen } else { count_in_rect(&sqf, &c) };
                    seen += m;
                    work.push((c, m));
                }
            }
        }
    }
    complex.sort_by(|a, b| {
        a.x0.partial_cmp(&b.x0).unwrap_or(Ordering::Equal).then(a.y0.partial_cmp(&b.y0).unwrap_or(Ordering::Equal))
    });
    out.extend(complex.into_iter().map(|r| RootBox::complex((r.x0, r.x1), (r.y0, r.y1))));
    debug_assert_eq!(out.len(), degree);
    Ok(out)
}

/// Shrink a box returned by isolation for the squarefree polynomial `sqf`.
pub fn refine_root<T: ExactScalar>(sqf: &Poly<T>, b: &mut RootBox<T>) {
    match &mut b.kind {
        RootKind::Real { lo, hi } => {
            bisect_step(sqf, lo, hi);
        }
        RootKind::Complex { re, im } => {
            let r = Rect { x0: re.0.clone(), x1: re.1.clone(), y0: im.0.clone(), y1: im.1.clone() };
            let s = shrink(sqf, &r);
            *re = (s.x0, s.x1);
            *im = (s.y0, s.y1);
        }
    }
}

/// Refine until the box has width at most `eps`.
pub fn refine_to<T: ExactScalar>(sqf: &Poly<T>, b: &mut RootBox<T>, eps: &T) {
    while b.exact().is_none() && b.width() > *eps {
        refine_root(sqf, b);
    }
}

/// Whether `p` has a root inside the box (real boxes test the open interval or
/// exact point; complex boxes the interior). `p` need not be squarefree, but
/// the box must isolate a root of some multiple of `p`, so its edges are
/// root-free.
pub fn has_root_in<T: ExactScalar>(p: &Poly<T>, b: &RootBox<T>) -> bool {
    if p.is_zero() {
        return true;
    }
    match &b.kind {
        RootKind::Real { lo, hi } if lo == hi => p.eval(lo).is_zero(),
        RootKind::Real { lo, hi } => {
            let sqf = p.squarefree_part();
            let s = SturmSequence::new(&sqf);
            let n = s.count_in(lo, hi);
            n > 0 && !(n == 1 && sqf.eval(hi).is_zero())
        }
        RootKind::Complex { re, im } => {
            let sqf = p.squarefree_part();
            let r = Rect { x0: re.0.clone(), x1: re.1.clone(), y0: im.0.clone(), y1: im.1.clone() };
            count_in_rect(&sqf, &r) > 0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Q = BigRational;

    fn p(c: &[i64]) -> Poly<Q> {
        Poly::new(c.iter().map(|&v| Q::from_integer(BigInt::from(v))).collect())
    }

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    #[test]
    fn counts_in_rectangles() {
        let f = p(&[1, 0, 1]); // +-i
        let full = Rect { x0: q(-2, 1), x1: q(2, 1), y0: q(-2, 1), y1: q(2, 1) };
        assert_eq!(count_in_rect(&f, &full), 2);
        let upper = Rect { x0: q(-2, 1), x1: q(2, 1), y0: q(1, 2), y1: q(2, 1) };
        assert_eq!(count_in_rect(&f, &upper), 1);
        let none = Rect { x0: q(1, 2), x1: q(2, 1), y0: q(-2, 1), y1: q(2, 1) };
        assert_eq!(count_in_rect(&f, &none), 0);
    }

    #[test]
    fn imaginary_unit_boxes() {
        let boxes = isolate_complex_roots(&p(&[1, 0, 1])).unwrap();
        assert_eq!(boxes.len(), 2);
        for mut b in boxes {
            assert!(!b.is_real());
            refine_to(&p(&[1, 0, 1]), &mut b, &q(1, 64));
            let (lo, hi) = b.modulus_squared_bounds();
            assert!(lo <= q(1, 1) && hi >= q(1, 1));
        }
    }

    #[test]
    fn golden_has_only_real_boxes() {
        let boxes = isolate_complex_roots(&p(&[-1, -1, 1])).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(|b| b.is_real()));
    }

    #[test]
    fn plastic_number_roots() {
        // x^3 - x - 1: one real root near 1.3247, a conjugate pair inside the disk
        let f = p(&[-1, -1, 0, 1]);
        let mut boxes = isolate_complex_roots(&f).unwrap();
        assert_eq!(boxes.len(), 3);
        let real: Vec<_> = boxes.iter().filter(|b| b.is_real()).collect();
        assert_eq!(real.len(), 1);
        let (lo, hi) = real[0].real_interval().unwrap();
        assert!(*lo < q(13248, 10000) && *hi > q(13247, 10000));
        for b in boxes.iter_mut().filter(|b| !b.is_real()) {
            while b.compare_modulus_with_one().is_none() {
                refine_root(&f, b);
            }
            assert_eq!(b.compare_modulus_with_one(), Some(Ordering::Less));
        }
    }

    #[test]
    fn non_squarefree_rejected() {
        let f = &p(&[1, 1]) * &p(&[1, 1]);
        assert_eq!(isolate_complex_roots(&f), Err(Error::NotSquarefree));
    }

    #[test]
    fn roots_on_initial_cut_lines() {
        // roots at 0, +-i, and real roots on the horizontal mid-line
        let f = &(&p(&[0, 1]) * &p(&[1, 0, 1])) * &p(&[-4, 0, 1]);
        let boxes = isolate_complex_roots(&f).unwrap();
        assert_eq!(boxes.len(), 5);
        assert_eq!(boxes.iter().filter(|b| b.is_real()).count(), 3);
    }

    #[test]
    fn has_root_in_real_and_complex() {
        let (g, h) = (p(&[1, 0, 1]), p(&[-2, 1]));
        let boxes = isolate_complex_roots(&(&g * &h)).unwrap();
        assert_eq!(boxes.len(), 3);
        for b in &boxes {
            assert_eq!(has_root_in(&g, b), !b.is_real());
            assert_eq!(has_root_in(&h, b), b.is_real());
        }
    }
}
