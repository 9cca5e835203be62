//! Reflection on the unit circle.
//!
//! For sources `z₁, z₂` the reflection points `u` on `|u| = 1` are the
//! unimodular roots of
//!
//! ```text
//! P(u) = p̄ u⁴ − s̄ u³ + s u − p,   s = z₁ + z₂,  p = z₁ z₂,
//! ```
//!
//! that also satisfy `Re(p̄ u² − s̄ u) + 1 > 0`. The sign of the discriminant
//! of `P` tells whether there are two or four of them.

mod apollonius;

use alloc::vec::Vec;
use core::cmp::Ordering;

#[allow(unused_imports)]
use num_traits::Float;

pub use apollonius::{apollonius_quartic, pa_points_apollonius};

use crate::poly::{lex_cmp, RootSet};
use crate::{is_finite, Error, Poly, Result, C64};

/// Accepted distance of a root from the unit circle.
pub const UNIMODULAR_TOL: f64 = 1e-7;
/// `|D|` below `CLASSIFY_TOL · (|s|² + |p|²)³` counts as zero.
pub const CLASSIFY_TOL: f64 = 1e-8;

/// Two points in the plane together with their sum and product.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PointPair {
    z1: C64,
    z2: C64,
    s: C64,
    p: C64,
}

impl PointPair {
    pub fn new(z1: C64, z2: C64) -> Result<Self> {
        if !is_finite(z1) || !is_finite(z2) {
            return Err(Error::NonFinite);
        }
        Ok(PointPair {
            z1,
            z2,
            s: z1 + z2,
            p: z1 * z2,
        })
    }

    pub fn z1(&self) -> C64 {
        self.z1
    }

    pub fn z2(&self) -> C64 {
        self.z2
    }

    /// `s = z₁ + z₂`.
    pub fn sum(&self) -> C64 {
        self.s
    }

    /// `p = z₁ z₂`.
    pub fn product(&self) -> C64 {
        self.p
    }

    pub fn swapped(&self) -> PointPair {
        PointPair {
            z1: self.z2,
            z2: self.z1,
            ..*self
        }
    }

    fn require_nonzero(&self) -> Result<()> {
        if self.z1 == C64::new(0.0, 0.0) || self.z2 == C64::new(0.0, 0.0) {
            Err(Error::ZeroPoint)
        } else {
            Ok(())
        }
    }
}

/// Reflection points on the unit circle and the resulting metric value.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PaSolution {
    /// Unit-modulus reflection points, sorted by `(re, im)`.
    pub reflection_points: Vec<C64>,
    /// Every root of the polynomial the points were extracted from.
    pub all_roots: RootSet,
    /// `|z₁ − z₂| / min (|z₁ − u| + |u − z₂|)`, or `1` when blocked.
    pub metric_value: f64,
    /// The segment `[z₁, z₂]` meets the unit circle.
    pub blocked: bool,
    /// Index into `reflection_points` of the point minimising the path length.
    pub minimizer: Option<usize>,
}

/// Coefficients `[−p, s, 0, −s̄, p̄]`, lowest degree first.
pub fn pa_quartic(pair: &PointPair) -> Poly {
    let (s, p) = (pair.s, pair.p);
    Poly::from_vec(alloc::vec![-p, s, C64::new(0.0, 0.0), -s.conj(), p.conj()])
}

/// `Re(p̄ u² − s̄ u) + 1 > 0`: the unimodular root `u` is a genuine
/// reflection point.
pub fn pa_filter(u: C64, pair: &PointPair) -> bool {
    (pair.p.conj() * u * u - pair.s.conj() * u).re + 1.0 > 0.0
}

/// Whether the closed segment `[z₁, z₂]` meets the unit circle.
///
/// An endpoint on either side decides it; two exterior endpoints are
/// blocked when the segment passes within distance 1 of the origin.
pub fn segment_meets_unit_circle(z1: C64, z2: C64) -> bool {
    let (r1, r2) = (z1.norm(), z2.norm());
    if r1 == 1.0 || r2 == 1.0 || (r1 < 1.0) != (r2 < 1.0) {
        return true;
    }
    if r1 < 1.0 {
        return false;
    }
    distance_to_segment(C64::new(0.0, 0.0), z1, z2) <= 1.0
}

pub(crate) fn distance_to_segment(z: C64, a: C64, b: C64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = ((z - a) * d.conj()).re / len2;
    (z - (a + d * t.clamp(0.0, 1.0))).norm()
}

/// Reflection points of `z₁, z₂` on the unit circle from the quartic `P`.
pub fn pa_points_disk(pair: &PointPair) -> Result<PaSolution> {
    if pair.z1 == pair.z2 {
        return Err(Error::CoincidentPoints);
    }
    let blocked = segment_meets_unit_circle(pair.z1, pair.z2);
    let all_roots = pa_quartic(pair).roots()?;

    let zero = C64::new(0.0, 0.0);
    let mut points: Vec<C64> = if pair.z1 == zero || pair.z2 == zero {
        // P degenerates to u(s − s̄u²): the points are ±s/|s|.
        let w = pair.s / pair.s.norm();
        alloc::vec![w, -w]
    } else {
        all_roots
            .clusters()
            .into_iter()
            .map(|k| k.center)
            .filter(|u| (u.norm() - 1.0).abs() <= UNIMODULAR_TOL)
            .map(|u| u / u.norm())
            .filter(|&u| pa_filter(u, pair))
            .collect()
    };
    points.sort_by(|a, b| lex_cmp(*a, *b));
    finish(pair, points, all_roots, blocked)
}

/// Builds the solution record; shared with the Apollonius route.
pub(crate) fn finish(
    pair: &PointPair,
    points: Vec<C64>,
    all_roots: RootSet,
    blocked: bool,
) -> Result<PaSolution> {
    if points.is_empty() && !blocked {
        return Err(Error::NoTangency);
    }
    let minimizer = min_sum_index(&points, pair.z1, pair.z2);
    let metric_value = if blocked {
        1.0
    } else {
        let u = points[minimizer.unwrap_or(0)];
        (pair.z1 - pair.z2).norm() / path_length(u, pair.z1, pair.z2)
    };
    Ok(PaSolution {
        reflection_points: points,
        all_roots,
        metric_value,
        blocked,
        minimizer,
    })
}

fn path_length(u: C64, z1: C64, z2: C64) -> f64 {
    (z1 - u).norm() + (u - z2).norm()
}

/// Index of the point with the smallest `|z₁ − u| + |u − z₂|`; near-ties
/// (relative `1e-12`) go to the lexicographically smallest point.
pub(crate) fn min_sum_index(points: &[C64], z1: C64, z2: C64) -> Option<usize> {
    let sums: Vec<f64> = points.iter().map(|&u| path_length(u, z1, z2)).collect();
    let best = sums.iter().copied().fold(f64::INFINITY, f64::min);
    (0..points.len())
        .filter(|&i| sums[i] <= best * (1.0 + 1e-12))
        .min_by(|&a, &b| lex_cmp(points[a], points[b]).then(Ordering::Equal))
}

/// `D = 4(|s|² − 4|p|²)³ − 27(s² p̄ − s̄² p)²`, a real number.
///
/// The second term equals `108 Im(s² p̄)²` and is evaluated that way.
pub fn discriminant(pair: &PointPair) -> Result<f64> {
    pair.require_nonzero()?;
    let (s, p) = (pair.s, pair.p);
    let x = s.norm_sqr() - 4.0 * p.norm_sqr();
    let y = (s * s * p.conj()).im;
    Ok(4.0 * x * x * x + 108.0 * y * y)
}

/// Root structure of the reflection quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum RootStructure {
    FourSimpleUnimodular,
    TwoUnimodularTwoOff,
    /// A double root and two simple roots, all unimodular.
    MultipleDoublePlusTwoSimple,
    /// A triple root `v` and the simple root `−v`.
    MultipleTriplePlusOpposite,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RootClassification {
    pub variant: RootStructure,
    pub discriminant_value: f64,
    /// The zero band `|D| ≤ tolerance` used for this pair.
    pub tolerance: f64,
}

pub fn classify_roots(pair: &PointPair) -> Result<RootClassification> {
    let d = discriminant(pair)?;
    let scale = pair.s.norm_sqr() + pair.p.norm_sqr();
    let tolerance = CLASSIFY_TOL * scale * scale * scale;
    let variant = if d < -tolerance {
        RootStructure::FourSimpleUnimodular
    } else if d > tolerance {
        RootStructure::TwoUnimodularTwoOff
    } else if pa_quartic(pair).roots()?.max_multiplicity() >= 3 {
        RootStructure::MultipleTriplePlusOpposite
    } else {
        RootStructure::MultipleDoublePlusTwoSimple
    };
    Ok(RootClassification {
        variant,
        discriminant_value: d,
        tolerance,
    })
}

/// Number of distinct roots of the reflection quartic within
/// [`UNIMODULAR_TOL`] of the unit circle.
pub fn unimodular_root_count(pair: &PointPair) -> Result<usize> {
    Ok(pa_quartic(pair)
        .roots()?
        .clusters()
        .iter()
        .filter(|k| (k.center.norm() - 1.0).abs() <= UNIMODULAR_TOL)
        .count())
}

/// `E₁ = |z₁ + z₂| − |z₁ z₂|`.
pub fn e1(pair: &PointPair) -> f64 {
    pair.s.norm() - pair.p.norm()
}

/// `E₂ = |z₁ + z₂| − 2|z₁ z₂|`.
pub fn e2(pair: &PointPair) -> f64 {
    pair.s.norm() - 2.0 * pair.p.norm()
}
