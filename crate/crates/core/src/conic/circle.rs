//! The circle case `a = 0, p = 1` of the tangency sextic.
//!
//! For `c(z) = z z̄ + b̄ z + b z̄ + q` the sextic splits off the linear factor
//! `2bz + b² + 1`. The remaining quartic, pulled back along `z = s w − b`
//! with `s² = |b|² − q`, is the reflection quartic of the unit circle for
//! the points `(±1 + b) / s`.

#[allow(unused_imports)]
use num_traits::Float;

use super::{f4_coefficients, Conic};
use crate::disk::{pa_quartic, PointPair};
use crate::{Error, Poly, Result, C64};

const CHECK_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CircleCheck {
    /// `‖remainder‖ / ‖F₄‖` after dividing by `2bz + b² + 1`.
    pub remainder: f64,
    /// Relative distance between the quotient and the closed-form quartic.
    pub quotient_error: f64,
    /// Relative distance between the pulled-back quartic and the
    /// reflection quartic, after matching a common scalar.
    pub pullback_error: f64,
    pub passed: bool,
}

/// The closed-form quartic cofactor of `2bz + b² + 1`.
pub fn circle_quartic(b: C64, q: f64) -> Poly {
    let bb = b.conj();
    let (b2, bb2) = (b * b, bb * bb);
    Poly::from_vec(alloc::vec![
        (b2 + 1.0) * q * q - 2.0 * bb * b * q - b2 * b2 + bb2 * b2,
        2.0 * b * q * q + 2.0 * bb * b2 * q - 4.0 * b2 * b,
        6.0 * bb * b * q - 6.0 * b2,
        2.0 * bb * q + (2.0 * bb2 - 4.0) * b,
        bb2 - 1.0,
    ])
}

/// Checks the circle factorisation of the generic sextic for the circle
/// with centre `−b` and radius `sqrt(|b|² − q)`.
pub fn verify_circle_specialization(b: C64, q: f64) -> Result<CircleCheck> {
    let s2 = b.norm_sqr() - q;
    if !(s2 > 0.0) {
        return Err(if s2.is_nan() {
            Error::NonFinite
        } else {
            Error::ImaginaryCircle
        });
    }
    let conic = Conic::new(C64::new(0.0, 0.0), b, 1.0, q)?;
    let f4 = f4_coefficients(&conic)?.poly();
    let linear = Poly::from_vec(alloc::vec![b * b + 1.0, 2.0 * b]);
    let (quotient, rem) = f4.div_rem(&linear)?;
    let remainder = rem.max_abs() / f4.max_abs();

    let expected = circle_quartic(b, q);
    let quotient_error = distance(&quotient, &expected) / expected.max_abs();

    let s = s2.sqrt();
    let pulled = expected.compose_affine(C64::new(s, 0.0), -b);
    let pair = PointPair::new((1.0 + b) / s, (b - 1.0) / s)?;
    let reference = pa_quartic(&pair);
    let pullback_error = proportional_distance(&pulled, &reference);

    Ok(CircleCheck {
        remainder,
        quotient_error,
        pullback_error,
        passed: remainder <= CHECK_TOL
            && quotient_error <= CHECK_TOL
            && pullback_error <= CHECK_TOL,
    })
}

fn distance(x: &Poly, y: &Poly) -> f64 {
    let n = x.coeffs().len().max(y.coeffs().len());
    let at = |p: &Poly, k: usize| p.coeffs().get(k).copied().unwrap_or_default();
    (0..n)
        .map(|k| (at(x, k) - at(y, k)).norm())
        .fold(0.0, f64::max)
}

/// `‖x/λ − y‖ / ‖y‖` for the scalar `λ` matching the largest coefficient
/// of `y`.
pub(crate) fn proportional_distance(x: &Poly, y: &Poly) -> f64 {
    let (k, _) = y
        .coeffs()
        .iter()
        .enumerate()
        .fold((0, -1.0), |best, (i, c)| {
            if c.norm() > best.1 {
                (i, c.norm())
            } else {
                best
            }
        });
    let xk = x.coeffs().get(k).copied().unwrap_or_default();
    if xk.norm() == 0.0 {
        return f64::INFINITY;
    }
    let lambda = xk / y.coeffs()[k];
    distance(&x.scale(lambda.inv()), y) / y.max_abs()
}
