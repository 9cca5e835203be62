//! The degree six tangency polynomial in the frame where the two points
//! are `±1`.

#[allow(unused_imports)]
use num_traits::Float;

use super::Conic;
use crate::{Error, Poly, Result, C64};

/// `F₄ = W₆z⁶ + … + W₀`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SexticF4 {
    /// `w[k]` is the coefficient of `zᵏ`.
    pub w: [C64; 7],
    pub source_conic: Conic,
}

impl SexticF4 {
    pub fn poly(&self) -> Poly {
        Poly::from_vec(self.w.to_vec())
    }

    /// Coefficients from `W₆` down to `W₀`.
    pub fn descending(&self) -> [C64; 7] {
        let mut out = self.w;
        out.reverse();
        out
    }
}

/// Builds `F₄` for a conic that is neither a line nor one of the conics
/// with foci `±1`.
pub fn f4_coefficients(conic: &Conic) -> Result<SexticF4> {
    if conic.a == C64::new(0.0, 0.0) && conic.p == 0.0 {
        return Err(Error::DegenerateConic);
    }
    let w = raw_coefficients(conic.a, conic.b, conic.p, conic.q);
    let scale = conic.scale();
    let size = w.iter().map(|x| x.norm()).fold(0.0, f64::max);
    if !(size > 1e-10 * scale.powi(6)) {
        return Err(if size.is_finite() {
            Error::ConfocalDegeneracy
        } else {
            Error::NonFinite
        });
    }
    Ok(SexticF4 {
        w,
        source_conic: *conic,
    })
}

/// `[W₀, …, W₆]` as polynomials in `a, ā, b, b̄, p, q`.
#[rustfmt::skip]
fn raw_coefficients(a: C64, b: C64, p: f64, q: f64) -> [C64; 7] {
    let (ab, bb) = (a.conj(), b.conj());
    let (p, q) = (C64::new(p, 0.0), C64::new(q, 0.0));
    let (a2, ab2, b2, bb2) = (a * a, ab * ab, b * b, bb * bb);
    let (a3, ab3) = (a2 * a, ab2 * ab);
    let (a4, ab4, b4, bb4) = (a2 * a2, ab2 * ab2, b2 * b2, bb2 * bb2);
    let (p2, q2) = (p * p, q * q);
    let (p3, q3) = (p2 * p, q2 * q);
    let (p4, q4) = (p2 * p2, q2 * q2);
    let (p5, p6) = (p4 * p, p4 * p2);

    let w6 = 4.0*ab*(bb*b*p - bb2*a - ab*b2)*(p2 - 4.0*ab*a);
    let w5 = -2.0*(b*p5 - bb*(a + ab)*p4 - b*(4.0*ab*q + 8.0*ab*a + bb2)*p3
        + bb*(8.0*ab*a*q + 8.0*ab*a2 + (8.0*ab2 + bb2)*a - 3.0*ab*b2)*p2
        + 4.0*ab*b*(4.0*ab*a*q + 4.0*ab*a2 + 4.0*bb2*a + ab*b2)*p
        - 4.0*a*ab*bb*(8.0*ab*a*q + 4.0*ab*a2 + (4.0*ab2 + 3.0*bb2)*a + 3.0*ab*b2));
    let w4 = -(p6 - ((4.0*a + 4.0*ab)*q + a2 + 10.0*ab*a - 9.0*b2 + ab2 + bb2)*p4 - 2.0*b*bb*(2.0*q + 11.0*a + ab)*p3
        + (16.0*ab*a*q2 + 4.0*(8.0*ab*a2 + (8.0*ab2 + 2.0*bb2)*a - 5.0*ab*b2)*q
        + 8.0*ab*a3 + (32.0*ab2 + 14.0*bb2)*a2
        + (-42.0*ab*b2 + 8.0*ab3 + 18.0*bb2*ab)*a + (-6.0*ab2 - 5.0*bb2)*b2)*p2
        + 2.0*b*bb*(48.0*ab*a*q + 44.0*ab*a2 + (4.0*ab2 + 7.0*bb2)*a + ab*b2)*p
        - 64.0*ab2*a2*q2 - 16.0*a2*ab*(4.0*ab*a + 4.0*ab2 + 7.0*bb2)*q
        - 16.0*ab2*a4 - (32.0*ab3 + 56.0*bb2*ab)*a3
        + (24.0*ab2*b2 - 16.0*ab4 - 56.0*bb2*ab2 - 9.0*bb4)*a2 + (24.0*ab3 - 6.0*bb2*ab)*b2*a + 3.0*ab2*b4);
    let w3 = -2.0*(2.0*b*p5 - bb*(q + 4.0*a)*p4 - b*((14.0*a + 2.0*ab)*q + 2.0*a2 + 12.0*ab*a - 8.0*b2 + 2.0*ab2 + bb2)*p3
        + bb*(4.0*a*q2 + (20.0*a2 + 20.0*ab*a - 7.0*b2)*q + 4.0*a3 + 24.0*ab*a2 + (-24.0*b2 + 4.0*ab2 + 3.0*bb2)*a - ab*b2)*p2
        + b*(32.0*ab*a*q2 + (56.0*ab*a2 + (8.0*ab2 + 26.0*bb2)*a - 6.0*ab*b2)*q + 8.0*ab*a3
        + (16.0*ab2 + 26.0*bb2)*a2 + (-18.0*ab*b2 + 8.0*ab3 + 2.0*bb2*ab)*a + (-6.0*ab2 - bb2)*b2)*p
        - bb*(80.0*ab*a2*q2 + 4.0*a*(20.0*ab*a2 + (16.0*ab2 + 6.0*bb2)*a - 3.0*ab*b2)*q + 16.0*ab*a4
        + (32.0*ab2 + 12.0*bb2)*a3 + (-28.0*ab*b2 + 16.0*ab3 + 16.0*bb2*ab)*a2
        + (-24.0*ab2 - bb2)*b2*a - ab*b4));
    let w2 = 2.0*(((3.0*a - ab)*q - 3.0*b2)*p4 + b*bb*(3.0*q + 9.0*a + ab)*p3
        + (-2.0*(6.0*a2 + 2.0*ab*a - b2)*q2 - (4.0*a3 + 16.0*ab*a2 + (-27.0*b2 - 4.0*ab2 + 9.0*bb2)*a + 4.0*ab*b2)*q
        + 3.0*(b2 - 3.0*bb2)*a2 + (9.0*ab*b2 - bb2*ab)*a - 7.0*b4 + 2.0*ab2*b2)*p2
        - b*bb*(28.0*a*q2 + (60.0*a2 - 5.0*b2)*q + 8.0*a3 + 20.0*ab*a2 - (19.0*b2 - 12.0*ab2)*a - 5.0*ab*b2)*p
        + 32.0*ab*a2*q3 + 4.0*a*(12.0*ab*a2 + (4.0*ab2 + 11.0*bb2)*a - 3.0*ab*b2)*q2
        + (16.0*ab*a4 + (16.0*ab2 + 44.0*bb2)*a3 + (-32.0*ab*b2 + 40.0*bb2*ab)*a2 - (12.0*ab2 + 9.0*bb2)*b2*a + ab*b4)*q
        + 8.0*bb2*a4 + (-4.0*ab*b2 + 20.0*bb2*ab)*a3
        + (-(4.0*ab2 + 15.0*bb2)*b2 + 12.0*bb2*ab2 + 3.0*bb4)*a2
        + (5.0*ab*b4 - 15.0*bb2*ab*b2)*a + 2.0*ab2*b4);
    let w1 = 2.0*(2.0*b*(q2 + (3.0*a - ab)*q - b2)*p3 - bb*(8.0*a*q2 + (12.0*a2 - 4.0*ab*a + b2)*q - 6.0*b2*a - 2.0*ab*b2)*p2
        - b*(8.0*a*q3 + (32.0*a2 - 8.0*ab*a - 2.0*b2)*q2 + (8.0*a3 + 8.0*ab*a2 + (-20.0*b2 - 2.0*bb2)*a + 2.0*ab*b2)*q
        + (-2.0*b2 + 6.0*bb2)*a2 + (-2.0*ab*b2 + 6.0*bb2*ab)*a + 3.0*b4 - bb2*b2)*p
        + bb*(32.0*a2*q3 + 4.0*a*(12.0*a2 + 4.0*ab*a - 3.0*b2)*q2 + (16.0*a4 + 16.0*ab*a3 + (-32.0*b2 + 8.0*bb2)*a2 - 12.0*ab*b2*a + b4)*q
        + (-4.0*b2 + 4.0*bb2)*a3 + (-4.0*ab*b2 + 4.0*bb2*ab)*a2 + (5.0*b4 - 3.0*bb2*b2)*a + 2.0*ab*b4));
    let w0 = q2*p4 - 2.0*bb*b*q*p3 + (-8.0*a*q3 + (-8.0*a2 + 2.0*b2)*q2 + (6.0*b2 + 2.0*bb2)*a*q - b4 + bb2*b2)*p2
        + 2.0*b*bb*(4.0*a*q2 + (-4.0*a2 - b2)*q + (b2 - bb2)*a)*p + 16.0*a2*q4 + 8.0*a*(4.0*a2 - b2)*q3
        + (16.0*a4 + (-32.0*b2 + 8.0*bb2)*a2 + b4)*q2 - 2.0*a*((4.0*b2 - 4.0*bb2)*a2 - 5.0*b4 + 3.0*bb2*b2)*q
        + (b - bb)*(b + bb)*((b2 - bb2)*a2 - b4);

    [w0, w1, w2, w3, w4, w5, w6]
}
