//! Adaptive Simpson quadrature for the smooth compactly supported profiles
//! used by the initial data.

use crate::scalar::{lit, Scalar};

/// Integrates `f` over `[a, b]` with adaptive Simpson refinement until the
/// panel estimate changes by less than `tol` (absolute), with Richardson
/// correction on accepted panels.
pub fn adaptive_simpson<T: Scalar>(f: &dyn Fn(T) -> T, a: T, b: T, tol: T) -> T {
    if a == b {
        return T::zero();
    }
    let two = lit::<T>(2.0);
    let m = (a + b) / two;
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(a, b, fa, fm, fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, MAX_DEPTH)
}

const MAX_DEPTH: u32 = 48;

fn simpson<T: Scalar>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / lit::<T>(6.0) * (fa + lit::<T>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<T: Scalar>(
    f: &dyn Fn(T) -> T,
    a: T,
    b: T,
    fa: T,
    fm: T,
    fb: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let two = lit::<T>(2.0);
    let m = (a + b) / two;
    let lm = (a + m) / two;
    let rm = (m + b) / two;
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= lit::<T>(15.0) * tol {
        return left + right + delta / lit::<T>(15.0);
    }
    let half_tol = tol / two;
    recurse(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + recurse(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        // Simpson is exact on cubics even before refinement.
        let got = adaptive_simpson(&|x: f64| x * x * x, 0.0, 2.0, 1e-12);
        assert!((got - 4.0).abs() < 1e-12);
    }

    #[test]
    fn integrates_transcendental_to_tolerance() {
        let got = adaptive_simpson(&|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-12);
        assert!((got - 2.0).abs() < 1e-11, "got {got}");
    }

    #[test]
    fn zero_width_interval_is_zero() {
        assert_eq!(adaptive_simpson(&|x: f64| x.exp(), 1.0, 1.0, 1e-12), 0.0);
    }

    #[test]
    fn works_in_f32() {
        let got = adaptive_simpson(&|x: f32| x * x, 0.0, 1.0, 1e-5);
        assert!((got - 1.0 / 3.0).abs() < 1e-5);
    }
}
