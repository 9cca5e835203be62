//! Reflection points via Apollonius circles.
//!
//! Every reflection point `z` lies on the line through `0` and
//! `v = t z₂ + (1 − t) z₁` for a `t ∈ (0, 1)`, and on the Apollonius circle
//! `(1 − t)|z − z₁| = t|z − z₂|`. Eliminating `z` leaves a real quartic in
//! `t`.

use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{finish, pa_filter, segment_meets_unit_circle, PaSolution, PointPair};
use crate::poly::lex_cmp;
use crate::{Error, Poly, Result, C64};

const COLLINEAR_TOL: f64 = 1e-12;
const REAL_ROOT_TOL: f64 = 1e-6;
const CIRCLE_TOL: f64 = 1e-7;

/// The quartic `T(t)` with `A = |z₁|²`, `B = |z₂|²`, `C = |z₁ − z₂|²`.
pub fn apollonius_quartic(pair: &PointPair) -> Result<Poly> {
    check(pair)?;
    let a = pair.z1().norm_sqr();
    let b = pair.z2().norm_sqr();
    let c = (pair.z1() - pair.z2()).norm_sqr();
    let d = a - b;
    Poly::from_real(&[
        a * (a - 1.0),
        -(a * (4.0 * a - 5.0) + b - c),
        2.0 * a * (3.0 * a - b) - 8.0 * a + 4.0 * b - 5.0 * c,
        -4.0 * (a * d - 2.0 * c - a + b),
        d * d - 4.0 * c,
    ])
}

fn check(pair: &PointPair) -> Result<()> {
    let (z1, z2) = (pair.z1(), pair.z2());
    if z1 == z2 {
        return Err(Error::CoincidentPoints);
    }
    let cross = (z1.conj() * z2).im;
    if cross.abs() <= COLLINEAR_TOL * z1.norm() * z2.norm() {
        return Err(Error::CollinearWithCenter);
    }
    if segment_meets_unit_circle(z1, z2) {
        return Err(Error::SegmentMeetsCircle);
    }
    Ok(())
}

/// Reflection points from the real roots of [`apollonius_quartic`] in
/// `(0, 1)`.
///
/// Requires the sources to be non-collinear with the origin and the segment
/// between them to avoid the unit circle.
pub fn pa_points_apollonius(pair: &PointPair) -> Result<PaSolution> {
    let t_roots = apollonius_quartic(pair)?.roots()?;
    let (z1, z2) = (pair.z1(), pair.z2());
    let scale = 1.0 + z1.norm() + z2.norm();

    let mut points: Vec<C64> = Vec::new();
    for k in t_roots.clusters() {
        let t = k.center;
        if t.im.abs() > REAL_ROOT_TOL * t.norm().max(1.0) {
            continue;
        }
        let t = t.re;
        if !(0.0 < t && t < 1.0) {
            continue;
        }
        let v = z2 * t + z1 * (1.0 - t);
        let w = v / v.norm();
        for z in [w, -w] {
            let gap = ((1.0 - t) * (z - z1).norm() - t * (z - z2).norm()).abs();
            if gap <= CIRCLE_TOL * scale
                && pa_filter(z, pair)
                && !points.iter().any(|&q| (q - z).norm() <= 1e-9)
            {
                points.push(z);
            }
        }
    }
    points.sort_by(|a, b| lex_cmp(*a, *b));
    finish(pair, points, t_roots, false)
}
