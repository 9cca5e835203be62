use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{f4_coefficients, segment_blocked, Conic};
use crate::poly::lex_cmp;
use crate::{Error, Result, RootSet, C64};

/// Unit normals closer than this (cross product) count as parallel.
pub const PARALLEL_TOL: f64 = 1e-6;

/// Which confocal curve touches the conic at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum TangencyKind {
    Ellipse,
    Hyperbola,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TangencyPoint {
    pub point: C64,
    /// `|c(point)|`.
    pub on_curve_residual: f64,
    /// `|z − 1| + |z + 1|`.
    pub sum: f64,
    pub tangency_kind: TangencyKind,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TangencySolution {
    /// On-curve roots of `F₄`, sorted by `(re, im)`.
    pub points: Vec<TangencyPoint>,
    /// Every root of the trimmed `F₄`.
    pub all_roots: RootSet,
    /// Index of the smallest `sum`; only set when `[−1, 1]` misses the conic.
    pub minimizer_index: Option<usize>,
    pub segment_blocked: bool,
}

impl TangencySolution {
    pub fn minimizer(&self) -> Option<&TangencyPoint> {
        self.minimizer_index.map(|i| &self.points[i])
    }
}

/// Tangency points of the conic with the confocal family of `±1`.
pub fn tangency_points(conic: &Conic) -> Result<TangencySolution> {
    let f4 = f4_coefficients(conic)?;
    let all_roots = f4.poly().roots()?;
    let mut points: Vec<TangencyPoint> = all_roots
        .clusters()
        .into_iter()
        .map(|k| k.center)
        .filter_map(|u| {
            let residual = conic.eval(u).abs();
            (residual <= conic.on_curve_tolerance(u)).then(|| TangencyPoint {
                point: u,
                on_curve_residual: residual,
                sum: (u - 1.0).norm() + (u + 1.0).norm(),
                tangency_kind: tangency_kind(conic, u),
            })
        })
        .collect();
    if points.is_empty() {
        return Err(Error::NoTangency);
    }
    points.sort_by(|a, b| lex_cmp(a.point, b.point));
    let blocked = segment_blocked(conic);
    let minimizer_index = if blocked {
        None
    } else {
        let best = points.iter().map(|t| t.sum).fold(f64::INFINITY, f64::min);
        points.iter().position(|t| t.sum <= best * (1.0 + 1e-12))
    };
    Ok(TangencySolution {
        points,
        all_roots,
        minimizer_index,
        segment_blocked: blocked,
    })
}

/// Compares the conic normal with the normals of the confocal ellipse
/// (gradient of the focal sum) and hyperbola (gradient of the difference).
pub fn tangency_kind(conic: &Conic, z: C64) -> TangencyKind {
    let (d1, d2) = (z - 1.0, z + 1.0);
    let (n1, n2) = (d1.norm(), d2.norm());
    let g = conic.gradient(z);
    if n1 == 0.0 || n2 == 0.0 || g.norm() == 0.0 {
        return TangencyKind::Undetermined;
    }
    let (e1, e2) = (d1 / n1, d2 / n2);
    let cross = |v: C64| {
        let n = v.norm();
        if n == 0.0 {
            f64::INFINITY
        } else {
            (g.conj() * v).im.abs() / (g.norm() * n)
        }
    };
    let (ce, ch) = (cross(e1 + e2), cross(e1 - e2));
    match (ce <= PARALLEL_TOL, ch <= PARALLEL_TOL) {
        (true, false) => TangencyKind::Ellipse,
        (false, true) => TangencyKind::Hyperbola,
        (true, true) if ce <= ch => TangencyKind::Ellipse,
        (true, true) => TangencyKind::Hyperbola,
        (false, false) => TangencyKind::Undetermined,
    }
}
