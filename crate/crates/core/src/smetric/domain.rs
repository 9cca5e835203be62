use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use crate::conic::{conic_from_foci, Conic, Similarity};
use crate::{is_finite, Error, Result, C64};

/// Relative width of the band around the boundary that still counts as the
/// closure of the domain.
pub const CLOSURE_TOL: f64 = 1e-9;

/// Which side of which focal curve the domain is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum DomainKind {
    /// `|z − f₁| + |z − f₂| < r`
    SumLess,
    /// `|z − f₁| + |z − f₂| > r`
    SumGreater,
    /// `||z − f₁| − |z − f₂|| < r`
    DiffLess,
    /// `||z − f₁| − |z − f₂|| > r`
    DiffGreater,
}

impl DomainKind {
    pub fn is_sum(self) -> bool {
        matches!(self, DomainKind::SumLess | DomainKind::SumGreater)
    }

    fn is_less(self) -> bool {
        matches!(self, DomainKind::SumLess | DomainKind::DiffLess)
    }
}

/// A planar domain bounded by an ellipse, a hyperbola or a circle.
///
/// Equal foci with a sum kind describe the disk (or its exterior) of radius
/// `r / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ConicDomain {
    pub f1: C64,
    pub f2: C64,
    pub r: f64,
    pub kind: DomainKind,
}

impl ConicDomain {
    pub fn new(f1: C64, f2: C64, r: f64, kind: DomainKind) -> Result<ConicDomain> {
        if !is_finite(f1) || !is_finite(f2) {
            return Err(Error::NonFinite);
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidRadius);
        }
        let d = (f1 - f2).norm();
        if (r - d).abs() <= 1e-12 * r {
            return Err(Error::DegenerateFoci);
        }
        let valid = if kind.is_sum() { r > d } else { r < d };
        if !valid {
            return Err(Error::InvalidRadius);
        }
        Ok(ConicDomain { f1, f2, r, kind })
    }

    /// The open disk `|z − center| < radius`.
    pub fn disk(center: C64, radius: f64) -> Result<ConicDomain> {
        ConicDomain::new(center, center, 2.0 * radius, DomainKind::SumLess)
    }

    pub fn unit_disk() -> ConicDomain {
        ConicDomain {
            f1: C64::new(0.0, 0.0),
            f2: C64::new(0.0, 0.0),
            r: 2.0,
            kind: DomainKind::SumLess,
        }
    }

    pub fn is_circle(&self) -> bool {
        self.f1 == self.f2
    }

    /// `|z − f₁| + |z − f₂|` or `||z − f₁| − |z − f₂||`.
    pub fn focal_value(&self, z: C64) -> f64 {
        let (d1, d2) = ((z - self.f1).norm(), (z - self.f2).norm());
        if self.kind.is_sum() {
            d1 + d2
        } else {
            (d1 - d2).abs()
        }
    }

    pub fn contains(&self, z: C64) -> bool {
        let v = self.focal_value(z);
        if self.kind.is_less() {
            v < self.r
        } else {
            v > self.r
        }
    }

    /// Inside, or on the boundary up to [`CLOSURE_TOL`].
    pub fn contains_closure(&self, z: C64) -> bool {
        self.contains(z) || self.on_boundary(z)
    }

    pub fn on_boundary(&self, z: C64) -> bool {
        (self.focal_value(z) - self.r).abs() <= CLOSURE_TOL * self.r
    }

    /// The boundary as a conic.
    pub fn boundary(&self) -> Conic {
        if self.is_circle() {
            let f = self.f1;
            let radius = self.r / 2.0;
            Conic {
                a: C64::new(0.0, 0.0),
                b: -f,
                p: 1.0,
                q: f.norm_sqr() - radius * radius,
            }
        } else {
            // validated in `new`
            conic_from_foci(self.f1, self.f2, self.r).expect("valid domain")
        }
    }

    /// The image of the domain under a similarity.
    pub fn transformed(&self, map: &Similarity) -> ConicDomain {
        ConicDomain {
            f1: map.apply(self.f1),
            f2: map.apply(self.f2),
            r: self.r * map.alpha.norm(),
            kind: self.kind,
        }
    }

    /// Translated so that `z0` becomes the origin.
    pub fn centered_at(&self, z0: C64) -> ConicDomain {
        self.transformed(&Similarity {
            alpha: C64::new(1.0, 0.0),
            beta: -z0,
        })
    }

    /// Boundary samples for the brute-force supremum.
    ///
    /// Circles and ellipses use `n` equally spaced values of the angle
    /// parameter. Hyperbolas use `⌈n/2⌉` values of `τ` per branch in
    /// `[−T, T)`, where `cosh T` reaches at least ten times the larger of
    /// the conjugate semi-axis and the distance of `reach` from the centre,
    /// measured in conjugate semi-axes. The sample sets for `n` are contained
    /// in those for `2n` when `n` is even.
    pub fn sample_boundary(&self, n: usize, reach: f64) -> Vec<C64> {
        let center = (self.f1 + self.f2) / 2.0;
        let half = self.r / 2.0;
        let c = (self.f1 - self.f2).norm() / 2.0;
        let rot = if c > 0.0 {
            (self.f1 - self.f2) / (2.0 * c)
        } else {
            C64::new(1.0, 0.0)
        };
        if self.kind.is_sum() {
            let minor = (half * half - c * c).sqrt();
            (0..n)
                .map(|k| {
                    let t = TAU * k as f64 / n as f64;
                    center + rot * C64::new(half * t.cos(), minor * t.sin())
                })
                .collect()
        } else {
            let conj = (c * c - half * half).sqrt();
            let span = (reach / conj.min(half)).max(1.0);
            let tmax = (10.0 * span).acosh();
            let m = n.div_ceil(2);
            let mut out = Vec::with_capacity(2 * m);
            for sign in [1.0, -1.0] {
                for k in 0..m {
                    let t = -tmax + 2.0 * tmax * k as f64 / m as f64;
                    out.push(center + rot * C64::new(sign * half * t.cosh(), conj * t.sinh()));
                }
            }
            out
        }
    }
}
