//! Contours `{ζ : s_G(z₀, ζ) = t}` traced along rays from `z₀`.
//!
//! Each ray is scanned once at a fixed set of radii shared by every level.
//! The first scanned radius where `s` reaches `t` brackets the contour point,
//! which is then refined by a safeguarded false-position iteration.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use super::{smetric_conic, ConicDomain};
use crate::conic::Conic;
use crate::{is_finite, Error, Result, C64};

/// Turning angle (degrees) above which a polyline vertex is an edge.
pub const EDGE_ANGLE_DEG: f64 = 30.0;

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LevelSetOptions {
    /// Radii scanned per ray before refinement.
    pub scan_samples: usize,
    /// Refinement stops once the bracket is narrower than
    /// `bisection_width · max(1, ρ)`.
    pub bisection_width: f64,
    pub max_iterations: usize,
}

impl Default for LevelSetOptions {
    fn default() -> Self {
        LevelSetOptions {
            scan_samples: 64,
            bisection_width: 1e-6,
            max_iterations: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LevelSet {
    pub center: C64,
    pub level: f64,
    /// Contour points, ordered by ray angle.
    pub points: Vec<C64>,
    /// Ray angle of each point.
    pub angles: Vec<f64>,
    /// Rays along which `s` never reached the level.
    pub unresolved_rays: Vec<f64>,
    /// Rays whose scan was not monotone; the first crossing was used.
    pub nonmonotone_rays: usize,
    pub rays: usize,
    pub options: LevelSetOptions,
}

/// Smallest positive `ρ` with `c(z₀ + ρd) = 0`.
fn exit_distance(conic: &Conic, z0: C64, d: C64) -> Option<f64> {
    let a = 2.0 * (conic.a.conj() * d * d).re + conic.p * d.norm_sqr();
    let b = 4.0 * (conic.a.conj() * z0 * d).re
        + 2.0 * conic.p * (z0 * d.conj()).re
        + 2.0 * (conic.b.conj() * d).re;
    let c = conic.eval(z0);
    let scale = a.abs().max(b.abs()).max(c.abs());
    let mut roots: Vec<f64> = Vec::new();
    if a.abs() <= 1e-14 * scale {
        if b != 0.0 {
            roots.push(-c / b);
        }
    } else {
        let disc = b * b - 4.0 * a * c;
        if disc >= 0.0 {
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            roots.push(q / a);
            if q != 0.0 {
                roots.push(c / q);
            }
        }
    }
    roots
        .into_iter()
        .filter(|&r| r > 0.0 && r.is_finite())
        .fold(None, |best: Option<f64>, r| {
            Some(best.map_or(r, |b| b.min(r)))
        })
}

struct RayScan {
    radii: Vec<f64>,
    values: Vec<f64>,
    exit: Option<f64>,
    monotone: bool,
}

fn scan_ray(dom: &ConicDomain, conic: &Conic, z0: C64, d: C64, opts: &LevelSetOptions) -> RayScan {
    let n = opts.scan_samples;
    let exit = exit_distance(conic, z0, d);
    let radii: Vec<f64> = match exit {
        Some(e) => (1..=n).map(|k| e * k as f64 / n as f64).collect(),
        None => {
            let center = (dom.f1 + dom.f2) / 2.0;
            let size = dom
                .r
                .max((dom.f1 - dom.f2).norm())
                .max((z0 - center).norm());
            let (lo, hi) = (1e-3 * size, 1e4 * size);
            (0..n)
                .map(|k| lo * (hi / lo).powf(k as f64 / (n - 1) as f64))
                .collect()
        }
    };
    let mut values: Vec<f64> = radii
        .iter()
        .map(|&r| smetric_conic(z0, z0 + d * r, dom).unwrap_or(f64::NAN))
        .collect();
    if exit.is_some() {
        // the exit point is on the boundary, where s = 1
        values[n - 1] = 1.0;
    }
    let mut monotone = true;
    let mut last = 0.0;
    for &v in &values {
        if v.is_nan() || v < last - 1e-12 {
            monotone = false;
        }
        if !v.is_nan() {
            last = v;
        }
    }
    RayScan {
        radii,
        values,
        exit,
        monotone,
    }
}

fn refine(
    dom: &ConicDomain,
    z0: C64,
    d: C64,
    t: f64,
    (mut lo, mut glo): (f64, f64),
    (mut hi, mut ghi): (f64, f64),
    opts: &LevelSetOptions,
) -> f64 {
    let width = opts.bisection_width * hi.max(1.0);
    let mut side = 0i8;
    for _ in 0..opts.max_iterations {
        if hi - lo <= width {
            break;
        }
        // Illinois false position, with bisection when the step is unusable.
        let mut mid = (lo * ghi - hi * glo) / (ghi - glo);
        if !(mid > lo && mid < hi) {
            mid = 0.5 * (lo + hi);
        }
        let g = match smetric_conic(z0, z0 + d * mid, dom) {
            Ok(s) => s - t,
            Err(_) => {
                mid = 0.5 * (lo + hi);
                match smetric_conic(z0, z0 + d * mid, dom) {
                    Ok(s) => s - t,
                    Err(_) => break,
                }
            }
        };
        if g == 0.0 {
            return mid;
        }
        if g < 0.0 {
            lo = mid;
            glo = g;
            if side == -1 {
                ghi *= 0.5;
            }
            side = -1;
        } else {
            hi = mid;
            ghi = g;
            if side == 1 {
                glo *= 0.5;
            }
            side = 1;
        }
    }
    if glo.abs() <= ghi.abs() {
        lo
    } else {
        hi
    }
}

/// Contours for several levels, sharing one scan per ray.
pub fn levelsets(
    dom: &ConicDomain,
    z0: C64,
    levels: &[f64],
    nrays: usize,
    opts: &LevelSetOptions,
) -> Result<Vec<LevelSet>> {
    if !is_finite(z0) {
        return Err(Error::NonFinite);
    }
    if !dom.contains(z0) {
        return Err(Error::SourceOutsideDomain);
    }
    if levels.iter().any(|&t| !(t > 0.0 && t <= 1.0)) {
        return Err(Error::InvalidLevel);
    }
    if nrays < 4 || opts.scan_samples < 2 {
        return Err(Error::InsufficientSamples);
    }
    let conic = dom.boundary();
    let mut out: Vec<LevelSet> = levels
        .iter()
        .map(|&level| LevelSet {
            center: z0,
            level,
            points: Vec::new(),
            angles: Vec::new(),
            unresolved_rays: Vec::new(),
            nonmonotone_rays: 0,
            rays: nrays,
            options: *opts,
        })
        .collect();
    for j in 0..nrays {
        let theta = TAU * j as f64 / nrays as f64;
        let d = C64::from_polar(1.0, theta);
        let scan = scan_ray(dom, &conic, z0, d, opts);
        let found = trace_levels(dom, z0, d, &scan, levels, opts);
        for (ls, hit) in out.iter_mut().zip(found) {
            if !scan.monotone {
                ls.nonmonotone_rays += 1;
            }
            match hit {
                Some(z) => {
                    ls.points.push(z);
                    ls.angles.push(theta);
                }
                None => ls.unresolved_rays.push(theta),
            }
        }
    }
    Ok(out)
}

fn trace_levels(
    dom: &ConicDomain,
    z0: C64,
    d: C64,
    scan: &RayScan,
    levels: &[f64],
    opts: &LevelSetOptions,
) -> Vec<Option<C64>> {
    let mut found = vec![None; levels.len()];
    for (slot, &t) in found.iter_mut().zip(levels) {
        let mut prev = (0.0, -t);
        for (k, (&r, &v)) in scan.radii.iter().zip(&scan.values).enumerate() {
            if v.is_nan() {
                continue;
            }
            if v >= t {
                let last = k + 1 == scan.radii.len();
                let rho = if last && scan.exit.is_some() && t >= 1.0 {
                    r
                } else {
                    refine(dom, z0, d, t, prev, (r, v - t), opts)
                };
                *slot = Some(z0 + d * rho);
                break;
            }
            prev = (r, v - t);
        }
    }
    found
}

/// The contour of a single level.
pub fn levelset(dom: &ConicDomain, z0: C64, t: f64, nrays: usize) -> Result<LevelSet> {
    let mut all = levelsets(dom, z0, &[t], nrays, &LevelSetOptions::default())?;
    Ok(all.remove(0))
}

/// Edge points of a contour and their distance from the conjectured conic.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EdgeReport {
    pub edges: Vec<C64>,
    /// `|focal(ζ − z₀) − constant|` at each edge.
    pub residuals: Vec<f64>,
    /// `|f₁| + |f₂|` or `||f₁| − |f₂||` after moving `z₀` to the origin.
    pub constant: f64,
    pub max_residual: f64,
}

/// Compares the corners of a contour with the conic through the centre's
/// focal value.
///
/// With `z₀` moved to `0`, the candidate curve is
/// `|z − f₁| + |z − f₂| = |f₁| + |f₂|` for sum domains and
/// `||z − f₁| − |z − f₂|| = ||f₁| − |f₂||` for difference domains. A
/// vertex of the contour polyline whose turning angle exceeds
/// [`EDGE_ANGLE_DEG`] counts as an edge.
pub fn conjecture_edge_residual(dom: &ConicDomain, z0: C64, ls: &LevelSet) -> Result<EdgeReport> {
    if ls.points.len() < 3 {
        return Err(Error::InsufficientSamples);
    }
    let moved = dom.centered_at(z0);
    let zero = C64::new(0.0, 0.0);
    let constant = moved.focal_value(zero);
    let step = TAU / ls.rays as f64;
    let n = ls.points.len();
    let adjacent = |i: usize, j: usize| {
        let gap = (ls.angles[j] - ls.angles[i]).rem_euclid(TAU);
        gap > 0.0 && gap <= 1.5 * step
    };
    let limit = EDGE_ANGLE_DEG.to_radians();
    let mut edges = Vec::new();
    let mut residuals = Vec::new();
    for i in 0..n {
        let (h, j) = ((i + n - 1) % n, (i + 1) % n);
        if !(adjacent(h, i) && adjacent(i, j)) {
            continue;
        }
        let (a, b) = (ls.points[i] - ls.points[h], ls.points[j] - ls.points[i]);
        if a.norm() == 0.0 || b.norm() == 0.0 {
            continue;
        }
        let turn = (b / a).arg().abs();
        if turn > limit {
            let z = ls.points[i];
            edges.push(z);
            residuals.push((moved.focal_value(z - z0) - constant).abs());
        }
    }
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    Ok(EdgeReport {
        edges,
        residuals,
        constant,
        max_residual,
    })
}
