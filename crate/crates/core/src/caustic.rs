//! Catacaustic of the unit circle.
//!
//! A ray from the radiant point `z₁` reflected at `u = e^{iφ}` lies on the
//! line `F(z, z̄, u) = (u − z₁) z + u³(z̄₁u − 1) z̄ − u(z̄₁u² − z₁) = 0`. The
//! envelope of these lines as `φ` varies is the catacaustic, which is also
//! the zero set of the reflection discriminant `D(z₁, z)`.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::{is_finite, Error, Result, C64};

/// Accepted distance of `u` from the unit circle in [`reflected_ray`].
pub const UNIT_TOL: f64 = 1e-9;
/// Parametric denominators below this are singular.
pub const SINGULAR_TOL: f64 = 1e-12;
/// Bound on [`caustic_residual`] relative to `(1 + |z₁|)⁶`.
pub const RESIDUAL_TOL: f64 = 1e-6;

/// The real line `α z + β z̄ + γ = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RayLine {
    pub alpha: C64,
    pub beta: C64,
    pub gamma: C64,
}

impl RayLine {
    pub fn eval(&self, z: C64) -> C64 {
        self.alpha * z + self.beta * z.conj() + self.gamma
    }

    /// Rescaled so that `β = ᾱ`, `|α| = 1` and `γ` is real.
    ///
    /// Returns `None` when the coefficients do not describe a real line.
    pub fn normalized(&self) -> Option<RayLine> {
        let (na, nb) = (self.alpha.norm(), self.beta.norm());
        if na == 0.0 || (na - nb).abs() > 1e-10 * na {
            return None;
        }
        // λ = sqrt(β̄/α)/|α| gives λβ = conj(λα) when |α| = |β|.
        let ratio = self.beta.conj() / self.alpha;
        let lambda = ratio.sqrt() / na;
        let line = RayLine {
            alpha: self.alpha * lambda,
            beta: self.beta * lambda,
            gamma: self.gamma * lambda,
        };
        let scale = 1.0 + line.gamma.norm();
        if (line.beta - line.alpha.conj()).norm() > 1e-10 || line.gamma.im.abs() > 1e-10 * scale {
            return None;
        }
        Some(RayLine {
            gamma: C64::new(line.gamma.re, 0.0),
            ..line
        })
    }

    pub fn is_real_line(&self) -> bool {
        self.normalized().is_some()
    }

    /// A unit vector along the line.
    pub fn direction(&self) -> Option<C64> {
        self.normalized()
            .map(|l| C64::new(0.0, 1.0) * l.alpha.conj())
    }

    /// Distance-like test `|F(z)| ≤ tol · |α|`.
    pub fn contains(&self, z: C64, tol: f64) -> bool {
        self.eval(z).norm() <= tol * self.alpha.norm() * (1.0 + z.norm())
    }
}

/// The ray from `z₁` reflected by the unit circle at `u`.
pub fn reflected_ray(z1: C64, u: C64) -> Result<RayLine> {
    if !is_finite(z1) || !is_finite(u) {
        return Err(Error::NonFinite);
    }
    if (u.norm() - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnimodular);
    }
    if (u - z1).norm() <= SINGULAR_TOL {
        return Err(Error::RadiantOnMirror);
    }
    let u2 = u * u;
    Ok(RayLine {
        alpha: u - z1,
        beta: u2 * u * (z1.conj() * u - 1.0),
        gamma: -u * (z1.conj() * u2 - z1),
    })
}

/// `F(z, z̄, u)` and `∂F/∂u` at a point; both vanish on the envelope.
pub fn envelope_system(z1: C64, z: C64, u: C64) -> (C64, C64) {
    let u2 = u * u;
    let f = (u - z1) * z + u2 * u * (z1.conj() * u - 1.0) * z.conj() - u * (z1.conj() * u2 - z1);
    let df = z + (4.0 * z1.conj() * u2 * u - 3.0 * u2) * z.conj() - (3.0 * z1.conj() * u2 - z1);
    (f, df)
}

fn numerator(z1: C64, u: C64) -> C64 {
    z1.conj() * z1.conj() * u * u * u - 3.0 * z1.norm_sqr() * u + 2.0 * z1
}

/// `3 Re(z̄₁u) − (2|z₁|² + 1)`; the full parametric denominator is twice
/// this times `u`.
fn denominator(z1: C64, u: C64) -> f64 {
    3.0 * (z1.conj() * u).re - (2.0 * z1.norm_sqr() + 1.0)
}

/// Point of the catacaustic for the reflection point `e^{iφ}`.
pub fn caustic_point(z1: C64, phi: f64) -> Result<C64> {
    if !is_finite(z1) || !phi.is_finite() {
        return Err(Error::NonFinite);
    }
    let u = C64::from_polar(1.0, phi);
    let d = denominator(z1, u);
    if 2.0 * d.abs() <= SINGULAR_TOL {
        return Err(Error::ParametricSingularity);
    }
    Ok(numerator(z1, u) / (2.0 * d))
}

/// `dz/dφ` along the parametrisation.
pub fn caustic_velocity(z1: C64, phi: f64) -> Result<C64> {
    let u = C64::from_polar(1.0, phi);
    let d = denominator(z1, u);
    if 2.0 * d.abs() <= SINGULAR_TOL {
        return Err(Error::ParametricSingularity);
    }
    let n = numerator(z1, u);
    let dn = C64::new(0.0, 1.0) * u * (3.0 * z1.conj() * z1.conj() * u * u - 3.0 * z1.norm_sqr());
    let dd = -3.0 * (z1.conj() * u).im;
    Ok((dn * d - n * dd) / (2.0 * d * d))
}

/// `4(|z + z₁|² − 4|z₁|²|z|²)³ + 108 Im((z + z₁)² z̄₁ z̄)²`.
pub fn caustic_implicit(z1: C64, z: C64) -> f64 {
    let w = z + z1;
    let x = w.norm_sqr() - 4.0 * z1.norm_sqr() * z.norm_sqr();
    let y = (w * w * z1.conj() * z.conj()).im;
    4.0 * x * x * x + 108.0 * y * y
}

/// `|caustic_implicit(z₁, z)| / (1 + |z|)⁶`.
///
/// The implicit function has degree six in `z`; dividing by `(1 + |z|)⁶`
/// keeps the residual comparable on unbounded branches.
pub fn caustic_residual(z1: C64, z: C64) -> f64 {
    caustic_implicit(z1, z).abs() / (1.0 + z.norm()).powi(6)
}

/// A circle or a line.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum GeneralizedCircle {
    Circle { center: C64, radius: f64 },
    Line { point: C64, direction: C64 },
}

impl GeneralizedCircle {
    pub fn distance(&self, z: C64) -> f64 {
        match *self {
            GeneralizedCircle::Circle { center, radius } => ((z - center).norm() - radius).abs(),
            GeneralizedCircle::Line { point, direction } => {
                ((z - point) * direction.conj()).im.abs() / direction.norm()
            }
        }
    }
}

/// The locus `|z + z₁| = k|z₁||z|`.
fn apollonius_locus(z1: C64, factor: f64) -> GeneralizedCircle {
    let k = factor * z1.norm();
    let denom = 1.0 - k * k;
    if denom.abs() <= 1e-12 {
        let direction = if z1.norm() > 0.0 {
            C64::new(0.0, 1.0) * z1 / z1.norm()
        } else {
            C64::new(0.0, 1.0)
        };
        GeneralizedCircle::Line {
            point: -z1 / 2.0,
            direction,
        }
    } else {
        GeneralizedCircle::Circle {
            center: -z1 / denom,
            radius: k * z1.norm() / denom.abs(),
        }
    }
}

/// `E₁(z₁, z) = 0`.
pub fn e1_circle(z1: C64) -> GeneralizedCircle {
    apollonius_locus(z1, 1.0)
}

/// `E₂(z₁, z) = 0`.
pub fn e2_circle(z1: C64) -> GeneralizedCircle {
    apollonius_locus(z1, 2.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CausticSample {
    pub phi: f64,
    pub point: C64,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CausticCurve {
    pub radiant: C64,
    /// Ordered by `phi`; parametric singularities are left out.
    pub samples: Vec<CausticSample>,
    /// The parametrisation has no singularity, so the curve is bounded
    /// and closed.
    pub closed: bool,
    pub e1_circle: GeneralizedCircle,
    pub e2_circle: GeneralizedCircle,
}

impl CausticCurve {
    pub fn max_residual(&self) -> f64 {
        self.samples
            .iter()
            .map(|s| caustic_residual(self.radiant, s.point))
            .fold(0.0, f64::max)
    }

    /// Bound every sample must meet: `RESIDUAL_TOL · (1 + |z₁|)⁶`.
    pub fn residual_bound(&self) -> f64 {
        RESIDUAL_TOL * (1.0 + self.radiant.norm()).powi(6)
    }
}

/// Whether the parametrisation is free of singularities.
pub fn is_bounded(z1: C64) -> bool {
    let r = z1.norm();
    !(0.5..=1.0).contains(&r)
}

/// `n` samples at `φ = 2πk/n`.
pub fn caustic_sample(z1: C64, n: usize) -> Result<CausticCurve> {
    if n < 8 {
        return Err(Error::InsufficientSamples);
    }
    if !is_finite(z1) {
        return Err(Error::NonFinite);
    }
    let mut samples = Vec::with_capacity(n);
    for k in 0..n {
        let phi = TAU * k as f64 / n as f64;
        match caustic_point(z1, phi) {
            Ok(point) => samples.push(CausticSample { phi, point }),
            Err(Error::ParametricSingularity) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(CausticCurve {
        radiant: z1,
        samples,
        closed: is_bounded(z1),
        e1_circle: e1_circle(z1),
        e2_circle: e2_circle(z1),
    })
}

/// Cusps located as zeros of the parametric speed.
///
/// The speed is scanned on `n` samples and every local minimum is refined
/// by golden-section search; minima where the speed vanishes are kept.
pub fn caustic_cusps(z1: C64, n: usize) -> Result<Vec<CausticSample>> {
    if n < 8 {
        return Err(Error::InsufficientSamples);
    }
    let speed = |phi: f64| {
        caustic_velocity(z1, phi)
            .map(|v| v.norm())
            .unwrap_or(f64::INFINITY)
    };
    let h = TAU / n as f64;
    let values: Vec<f64> = (0..n).map(|k| speed(h * k as f64)).collect();
    let mut cusps: Vec<CausticSample> = Vec::new();
    for k in 0..n {
        let prev = values[(k + n - 1) % n];
        let next = values[(k + 1) % n];
        if !(values[k].is_finite() && values[k] <= prev && values[k] <= next) {
            continue;
        }
        let phi = golden_min(&speed, h * k as f64 - h, h * k as f64 + h);
        let Ok(point) = caustic_point(z1, phi) else {
            continue;
        };
        let threshold = 1e-6 * (1.0 + z1.norm()) * (1.0 + point.norm());
        if speed(phi) <= threshold {
            let phi = phi.rem_euclid(TAU);
            if !cusps.iter().any(|c| angle_gap(c.phi, phi) <= 1e-6) {
                cusps.push(CausticSample { phi, point });
            }
        }
    }
    cusps.sort_by(|a, b| a.phi.total_cmp(&b.phi));
    Ok(cusps)
}

fn angle_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

fn golden_min(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}

/// The caustic point on the real axis opposite a real radiant `c`:
/// `−c / (2c + 1)`, reached at `φ = π`.
pub fn axis_point(c: f64) -> Result<C64> {
    caustic_point(C64::new(c, 0.0), PI)
}
