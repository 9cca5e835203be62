//! Reflection on a conic mirror.
//!
//! A conic is written as the Hermitian form
//!
//! ```text
//! c(z) = ā z² + p z z̄ + a z̄² + b̄ z + b z̄ + q,   p, q real.
//! ```
//!
//! After a similarity moves the two points to `±1`, reflection points are
//! the points where the conic touches a member of the confocal family
//! `|z − 1| ± |z + 1| = r`. They are roots of the sextic built by
//! [`f4_coefficients`].

mod circle;
mod f4;
mod tangency;

#[allow(unused_imports)]
use num_traits::Float;

pub use circle::{verify_circle_specialization, CircleCheck};
pub use f4::{f4_coefficients, SexticF4};
pub use tangency::{tangency_points, TangencyKind, TangencyPoint, TangencySolution, PARALLEL_TOL};

use crate::{is_finite, Error, Poly, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Conic {
    pub a: C64,
    pub b: C64,
    pub p: f64,
    pub q: f64,
}

impl Conic {
    /// Rejects non-finite input and the line case `a = 0, p = 0`.
    pub fn new(a: C64, b: C64, p: f64, q: f64) -> Result<Conic> {
        if !is_finite(a) || !is_finite(b) || !p.is_finite() || !q.is_finite() {
            return Err(Error::NonFinite);
        }
        if a == C64::new(0.0, 0.0) && p == 0.0 {
            return Err(Error::DegenerateConic);
        }
        Ok(Conic { a, b, p, q })
    }

    /// The unit circle `z z̄ − 1`.
    pub fn unit_circle() -> Conic {
        Conic {
            a: C64::new(0.0, 0.0),
            b: C64::new(0.0, 0.0),
            p: 1.0,
            q: -1.0,
        }
    }

    pub fn eval(&self, z: C64) -> f64 {
        2.0 * (self.a.conj() * z * z).re
            + self.p * z.norm_sqr()
            + 2.0 * (self.b.conj() * z).re
            + self.q
    }

    /// Gradient of `c` as a vector in the plane.
    pub fn gradient(&self, z: C64) -> C64 {
        2.0 * (self.p * z + 2.0 * self.a * z.conj() + self.b)
    }

    /// `max(|a|, |p|, |b|, |q|)`.
    pub fn scale(&self) -> f64 {
        self.a
            .norm()
            .max(self.p.abs())
            .max(self.b.norm())
            .max(self.q.abs())
    }

    /// Same conic with every coefficient multiplied by `k`.
    pub fn scaled(&self, k: f64) -> Conic {
        Conic {
            a: self.a * k,
            b: self.b * k,
            p: self.p * k,
            q: self.q * k,
        }
    }

    /// Mirror image under `z ↦ z̄`.
    pub fn conj(&self) -> Conic {
        Conic {
            a: self.a.conj(),
            b: self.b.conj(),
            ..*self
        }
    }

    /// `|c(z)| ≤ 1e-6 · scale · (1 + |z|)²`.
    pub fn on_curve_tolerance(&self, z: C64) -> f64 {
        ON_CURVE_TOL * self.scale() * (1.0 + z.norm()).powi(2)
    }
}

/// Relative tolerance for a point to count as lying on a conic.
pub const ON_CURVE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ConicClass {
    Ellipse,
    Hyperbola,
    Parabola,
    Circle,
    DegenerateOrLine,
}

/// Sign of `p² − 4|a|²`, with zero meaning `|·| ≤ 1e-10 (p² + 4|a|²)`.
pub fn classify_conic(conic: &Conic) -> ConicClass {
    let (a2, p2) = (conic.a.norm_sqr(), conic.p * conic.p);
    if a2 == 0.0 {
        return if p2 == 0.0 {
            ConicClass::DegenerateOrLine
        } else {
            ConicClass::Circle
        };
    }
    let disc = p2 - 4.0 * a2;
    let tol = 1e-10 * (p2 + 4.0 * a2);
    if disc > tol {
        ConicClass::Ellipse
    } else if disc < -tol {
        ConicClass::Hyperbola
    } else {
        ConicClass::Parabola
    }
}

/// `A(z) = α z + β`.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Similarity {
    pub alpha: C64,
    pub beta: C64,
}

impl Similarity {
    pub fn identity() -> Similarity {
        Similarity {
            alpha: C64::new(1.0, 0.0),
            beta: C64::new(0.0, 0.0),
        }
    }

    pub fn apply(&self, z: C64) -> C64 {
        self.alpha * z + self.beta
    }

    pub fn inverse(&self) -> Similarity {
        let inv = self.alpha.inv();
        Similarity {
            alpha: inv,
            beta: -self.beta * inv,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        Similarity {
            alpha: self.alpha * other.alpha,
            beta: self.alpha * other.beta + self.beta,
        }
    }
}

/// The similarity sending `z₁ ↦ 1` and `z₂ ↦ −1`.
pub fn canonical_transform(z1: C64, z2: C64) -> Result<Similarity> {
    if !is_finite(z1) || !is_finite(z2) {
        return Err(Error::NonFinite);
    }
    if z1 == z2 {
        return Err(Error::CoincidentPoints);
    }
    let d = z1 - z2;
    Ok(Similarity {
        alpha: 2.0 / d,
        beta: -(z1 + z2) / d,
    })
}

/// The conic `c′` with `c′(A(z)) = c(z)`.
pub fn transform_conic(conic: &Conic, map: &Similarity) -> Conic {
    let inv = map.inverse();
    let (g, d) = (inv.alpha, inv.beta);
    let gb = g.conj();
    Conic {
        a: conic.a * gb * gb,
        b: 2.0 * conic.a * gb * d.conj() + conic.p * gb * d + conic.b * gb,
        p: conic.p * g.norm_sqr(),
        q: conic.eval(d),
    }
}

/// The quadratic vanishing on `|z − f₁| + |z − f₂| = r` together with
/// `||z − f₁| − |z − f₂|| = r`.
///
/// Squaring twice gives `(d₁ − d₂)² − 2r²(d₁ + d₂) + r⁴ = 0` with
/// `dᵢ = |z − fᵢ|²`. For `r > |f₁ − f₂|` only the ellipse is real, for
/// `r < |f₁ − f₂|` only the hyperbola.
pub fn conic_from_foci(f1: C64, f2: C64, r: f64) -> Result<Conic> {
    if !is_finite(f1) || !is_finite(f2) {
        return Err(Error::NonFinite);
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidRadius);
    }
    if f1 == f2 {
        return Err(Error::CoincidentPoints);
    }
    let w = f1 - f2;
    if (r - w.norm()).abs() <= 1e-12 * r {
        return Err(Error::DegenerateFoci);
    }
    let m = f1 + f2;
    let k = f1.norm_sqr() - f2.norm_sqr();
    let n = f1.norm_sqr() + f2.norm_sqr();
    let r2 = r * r;
    Ok(Conic {
        a: w * w,
        b: -2.0 * k * w + 2.0 * r2 * m,
        p: 2.0 * w.norm_sqr() - 4.0 * r2,
        q: k * k - 2.0 * r2 * n + r2 * r2,
    })
}

/// `F₁ = (p − a − ā)z² + (b − b̄)z − q`. On the imaginary axis
/// `F₁(iy) = −c(iy)`, so its imaginary roots are where the conic meets it.
pub fn factor_f1(conic: &Conic) -> Poly {
    let Conic { a, b, p, q } = *conic;
    Poly::from_vec(alloc::vec![
        C64::new(-q, 0.0),
        b - b.conj(),
        p - a - a.conj(),
    ])
}

/// `F₂ = (p + a + ā)z² + (b + b̄)z + q`, equal to `c(x)` for real `x`.
pub fn factor_f2(conic: &Conic) -> Poly {
    let Conic { a, b, p, q } = *conic;
    Poly::from_vec(alloc::vec![
        C64::new(q, 0.0),
        b + b.conj(),
        p + a + a.conj(),
    ])
}

/// `F₃ = (4a² − 4āa)z⁴ − 4b̄a z³ + (p² − 4aq − 4a²)z² + 2bp z + b²`.
pub fn factor_f3(conic: &Conic) -> Poly {
    let Conic { a, b, p, q } = *conic;
    let a2 = a * a;
    Poly::from_vec(alloc::vec![
        b * b,
        2.0 * b * p,
        p * p - 4.0 * a * q - 4.0 * a2,
        -4.0 * b.conj() * a,
        4.0 * a2 - 4.0 * a.conj() * a,
    ])
}

/// Whether the conic meets the segment `[−1, 1]`.
pub fn segment_blocked(conic: &Conic) -> bool {
    let qa = conic.p + 2.0 * conic.a.re;
    let qb = 2.0 * conic.b.re;
    let qc = conic.q;
    let f = |x: f64| (qa * x + qb) * x + qc;
    let tol = 1e-12 * conic.scale();
    let (lo, hi) = (f(-1.0), f(1.0));
    if lo.abs() <= tol || hi.abs() <= tol || (lo < 0.0) != (hi < 0.0) {
        return true;
    }
    if qa == 0.0 {
        return false;
    }
    let vertex = -qb / (2.0 * qa);
    let fv = f(vertex);
    -1.0 < vertex && vertex < 1.0 && if lo > 0.0 { fv <= tol } else { fv >= -tol }
}

/// The quartic `S(z)` whose double roots mark tangency of the conic with the
/// confocal curve `z² + (2 − 2r₂) z z̄ + z̄² + r₂² − 2r₂ = 0`.
pub fn s_quartic(conic: &Conic, r2: f64) -> Poly {
    let Conic { a, b, p, q } = *conic;
    let (ab, bb) = (a.conj(), b.conj());
    let (r, r2_2, r2_3, r2_4) = (r2, r2 * r2, r2 * r2 * r2, r2 * r2 * r2 * r2);
    let a2 = a * a;
    let z4 = 4.0 * ab * a * r2_2 + 2.0 * ((a + ab) * p - 4.0 * ab * a) * r + (p - a - ab).powu(2);
    let z3 = 4.0 * bb * a * r2_2
        + 2.0 * (bb * p + (b - 4.0 * bb) * a + ab * b) * r
        + 2.0 * (b - bb) * (p - a - ab);
    let z2 = 2.0 * a * p * r2_3
        + (p * p - 6.0 * a * p + 4.0 * a * q + 2.0 * a2 - 2.0 * ab * a) * r2_2
        - 2.0 * (p * p - (q + 2.0 * a) * p + 4.0 * a * q + 2.0 * a2 - 2.0 * ab * a - bb * b) * r
        - 2.0 * q * p
        + (2.0 * a + 2.0 * ab) * q
        + b * b
        - 2.0 * bb * b
        + bb * bb;
    let z1 = 2.0 * b * a * r2_3 + 2.0 * (b * p + (-3.0 * b - bb) * a) * r2_2
        - 2.0 * (2.0 * b * p - b * q + (-2.0 * b - 2.0 * bb) * a) * r
        - 2.0 * (b - bb) * q;
    let z0 = a2 * r2_4 - 4.0 * a2 * r2_3
        + (-2.0 * a * q + 4.0 * a2 + b * b) * r2_2
        + (4.0 * a * q - 2.0 * b * b) * r
        + q * q;
    Poly::from_vec(alloc::vec![z0, z1, z2, z3, z4])
}

/// The conic `z² + (2 − 2r₂) z z̄ + z̄² + r₂² − 2r₂` with foci `±1`; for
/// `r₂ = r²/2` it is `|z − 1| ± |z + 1| = r`.
pub fn confocal_conic(r2: f64) -> Conic {
    Conic {
        a: C64::new(1.0, 0.0),
        b: C64::new(0.0, 0.0),
        p: 2.0 - 2.0 * r2,
        q: r2 * r2 - 2.0 * r2,
    }
}
