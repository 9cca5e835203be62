//! The triangular ratio metric
//!
//! ```text
//! s_G(z₁, z₂) = sup_{z ∈ ∂G} |z₁ − z₂| / (|z₁ − z| + |z − z₂|)
//! ```
//!
//! on domains bounded by a conic, its brute-force counterpart and its level
//! sets.

mod domain;
mod levelset;

#[allow(unused_imports)]
use num_traits::Float;

pub use domain::{ConicDomain, DomainKind, CLOSURE_TOL};
pub use levelset::{
    conjecture_edge_residual, levelset, levelsets, EdgeReport, LevelSet, LevelSetOptions,
    EDGE_ANGLE_DEG,
};

use crate::conic::{
    canonical_transform, segment_blocked, tangency_points, transform_conic, Conic, Similarity,
};
use crate::{is_finite, Error, Result, C64};

/// How a metric value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SMetricPath {
    /// `z₁ = z₂`.
    Coincident,
    /// A source lies on the boundary.
    OnBoundary,
    /// The segment between the sources meets the boundary.
    Blocked,
    /// The boundary is confocal with the sources; every boundary point has
    /// the same focal sum.
    Confocal,
    /// Minimum focal sum over the tangency points.
    Tangency,
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SMetric {
    pub value: f64,
    pub path: SMetricPath,
    /// The similarity sending `z₁ ↦ 1`, `z₂ ↦ −1`.
    pub transform: Option<Similarity>,
    /// The boundary in the frame of `transform`.
    pub canonical_conic: Option<Conic>,
    /// Minimising tangency point in the canonical frame.
    pub zeta: Option<C64>,
    /// The same point in the original frame.
    pub boundary_point: Option<C64>,
}

impl SMetric {
    fn trivial(value: f64, path: SMetricPath) -> SMetric {
        SMetric {
            value,
            path,
            transform: None,
            canonical_conic: None,
            zeta: None,
            boundary_point: None,
        }
    }
}

fn check_sources(z1: C64, z2: C64, dom: &ConicDomain) -> Result<()> {
    if !is_finite(z1) || !is_finite(z2) {
        return Err(Error::NonFinite);
    }
    if !dom.contains_closure(z1) || !dom.contains_closure(z2) {
        return Err(Error::SourceOutsideDomain);
    }
    Ok(())
}

/// `s_G(z₁, z₂)` through the tangency sextic.
pub fn smetric_conic(z1: C64, z2: C64, dom: &ConicDomain) -> Result<f64> {
    smetric_conic_detail(z1, z2, dom).map(|s| s.value)
}

/// [`smetric_conic`] with the intermediate objects.
///
/// The sources are moved to `±1`; the value is `2 / (|ζ − 1| + |ζ + 1|)`
/// for the tangency point `ζ` with the smallest focal sum, and `1` when the
/// segment `[z₁, z₂]` meets the boundary.
pub fn smetric_conic_detail(z1: C64, z2: C64, dom: &ConicDomain) -> Result<SMetric> {
    check_sources(z1, z2, dom)?;
    if z1 == z2 {
        return Ok(SMetric::trivial(0.0, SMetricPath::Coincident));
    }
    if dom.on_boundary(z1) || dom.on_boundary(z2) {
        return Ok(SMetric::trivial(1.0, SMetricPath::OnBoundary));
    }
    let map = canonical_transform(z1, z2)?;
    let conic = transform_conic(&dom.boundary(), &map);
    let base = SMetric {
        value: 1.0,
        path: SMetricPath::Blocked,
        transform: Some(map),
        canonical_conic: Some(conic),
        zeta: None,
        boundary_point: None,
    };
    if segment_blocked(&conic) {
        return Ok(base);
    }
    let moved = dom.transformed(&map);
    let one = C64::new(1.0, 0.0);
    let confocal = |a: C64, b: C64| (a - one).norm() <= 1e-12 && (b + one).norm() <= 1e-12;
    if !moved.is_circle() && (confocal(moved.f1, moved.f2) || confocal(moved.f2, moved.f1)) {
        // Sum kinds: every boundary point has focal sum r. Difference kinds
        // cross the segment and were caught above.
        return Ok(SMetric {
            value: 2.0 / moved.r,
            path: SMetricPath::Confocal,
            ..base
        });
    }
    let sol = tangency_points(&conic)?;
    let best = sol.minimizer().ok_or(Error::NoTangency)?;
    Ok(SMetric {
        value: 2.0 / best.sum,
        path: SMetricPath::Tangency,
        zeta: Some(best.point),
        boundary_point: Some(map.inverse().apply(best.point)),
        ..base
    })
}

/// Supremum of the ratio over `n` boundary samples.
pub fn smetric_bruteforce(z1: C64, z2: C64, dom: &ConicDomain, n: usize) -> Result<f64> {
    if n < 100 {
        return Err(Error::InsufficientSamples);
    }
    check_sources(z1, z2, dom)?;
    if z1 == z2 {
        return Ok(0.0);
    }
    let center = (dom.f1 + dom.f2) / 2.0;
    let reach = (z1 - center).norm().max((z2 - center).norm());
    let d = (z1 - z2).norm();
    Ok(dom
        .sample_boundary(n, reach)
        .into_iter()
        .map(|z| d / ((z1 - z).norm() + (z - z2).norm()))
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::disk::{pa_points_disk, PointPair};

    fn ellipse_example() -> ConicDomain {
        ConicDomain::new(
            c(2.0, 0.0),
            c(1.0, 2.0),
            6f64.sqrt(),
            DomainKind::SumGreater,
        )
        .unwrap()
    }

    fn hyperbola_example() -> ConicDomain {
        ConicDomain::new(c(3.0, 0.0), c(1.0, 2.0), 5f64.sqrt(), DomainKind::DiffLess).unwrap()
    }

    #[test]
    fn symmetric_disk_pair() {
        let dom = ConicDomain::unit_disk();
        for k in 1..10 {
            let cc = k as f64 / 10.0;
            let s = smetric_conic(c(cc, 0.0), c(-cc, 0.0), &dom).unwrap();
            assert!((s - cc).abs() < 1e-10, "{cc} {s}");
        }
    }

    #[test]
    fn agrees_with_disk_module() {
        let dom = ConicDomain::unit_disk();
        for (z1, z2) in [
            (c(0.5, 0.1), c(-0.3, 0.6)),
            (c(0.0, 0.0), c(0.6, 0.2)),
            (c(0.9, 0.0), c(0.0, 0.9)),
        ] {
            let s = smetric_conic(z1, z2, &dom).unwrap();
            let d = pa_points_disk(&PointPair::new(z1, z2).unwrap()).unwrap();
            assert!((s - d.metric_value).abs() < 1e-10);
        }
    }

    #[test]
    fn example_domains() {
        let (z1, z2) = (c(1.0, 0.0), c(-1.0, 0.0));
        let s = smetric_conic_detail(z1, z2, &ellipse_example()).unwrap();
        let u3 = c(1.259144, 0.426617);
        assert!((s.zeta.unwrap() - u3).norm() < 1e-5);
        assert!((s.value - 2.0 / ((u3 - 1.0).norm() + (u3 + 1.0).norm())).abs() < 1e-5);
        let s = smetric_conic(z1, z2, &hyperbola_example()).unwrap();
        assert!((s - 2.0 / (2.0 * 3.25f64.sqrt())).abs() < 1e-10);
    }

    #[test]
    fn bruteforce_agrees() {
        let (z1, z2) = (c(1.0, 0.0), c(-1.0, 0.0));
        for dom in [ellipse_example(), hyperbola_example()] {
            let exact = smetric_conic(z1, z2, &dom).unwrap();
            let brute = smetric_bruteforce(z1, z2, &dom, 100_000).unwrap();
            assert!(brute <= exact + 1e-12);
            assert!(exact - brute < 1e-4, "{exact} {brute}");
        }
    }

    #[test]
    fn bruteforce_nested() {
        let (z1, z2) = (c(0.2, 0.3), c(-0.4, 0.1));
        let dom = ConicDomain::unit_disk();
        let a = smetric_bruteforce(z1, z2, &dom, 1000).unwrap();
        let b = smetric_bruteforce(z1, z2, &dom, 2000).unwrap();
        assert!(a <= b);
        let dom = hyperbola_example();
        let (z1, z2) = (c(1.0, 0.0), c(-1.0, 0.0));
        let a = smetric_bruteforce(z1, z2, &dom, 1000).unwrap();
        let b = smetric_bruteforce(z1, z2, &dom, 2000).unwrap();
        assert!(a <= b);
    }

    #[test]
    fn preconditions() {
        let dom = ConicDomain::unit_disk();
        assert_eq!(
            smetric_conic(c(1.5, 0.0), c(0.0, 0.0), &dom),
            Err(Error::SourceOutsideDomain)
        );
        assert_eq!(smetric_conic(c(0.3, 0.0), c(0.3, 0.0), &dom), Ok(0.0));
        assert_eq!(smetric_conic(c(1.0, 0.0), c(0.3, 0.0), &dom), Ok(1.0));
        assert_eq!(
            smetric_bruteforce(c(0.1, 0.0), c(0.3, 0.0), &dom, 10),
            Err(Error::InsufficientSamples)
        );
    }

    #[test]
    fn blocked_in_nonconvex_domain() {
        // exterior of the unit circle, sources on opposite sides
        let dom = ConicDomain::new(c(0.0, 0.0), c(0.0, 0.0), 2.0, DomainKind::SumGreater).unwrap();
        let s = smetric_conic_detail(c(2.0, 0.0), c(-2.0, 0.0), &dom).unwrap();
        assert_eq!(s.path, SMetricPath::Blocked);
        assert_eq!(s.value, 1.0);
    }

    #[test]
    fn confocal_sources() {
        let dom = ConicDomain::new(c(1.0, 0.0), c(-1.0, 0.0), 3.0, DomainKind::SumLess).unwrap();
        let s = smetric_conic_detail(c(1.0, 0.0), c(-1.0, 0.0), &dom).unwrap();
        assert_eq!(s.path, SMetricPath::Confocal);
        assert!((s.value - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn similarity_invariance() {
        let dom = ellipse_example();
        let (z1, z2) = (c(0.7, -0.4), c(-1.2, 0.3));
        let map = Similarity {
            alpha: c(0.3, 1.1),
            beta: c(-2.0, 5.0),
        };
        let a = smetric_conic(z1, z2, &dom).unwrap();
        let b = smetric_conic(map.apply(z1), map.apply(z2), &dom.transformed(&map)).unwrap();
        assert!((a - b).abs() < 1e-10);
        let swapped = smetric_conic(z2, z1, &dom).unwrap();
        assert!((a - swapped).abs() < 1e-10);
    }

    #[test]
    fn membership_matches_conic_sign() {
        let dom = ellipse_example();
        let conic = dom.boundary();
        let inside = conic.eval(c(0.0, 0.0)).signum();
        for k in 0..200 {
            let z = c((k as f64 * 0.37).sin() * 4.0, (k as f64 * 0.91).cos() * 4.0);
            if dom.on_boundary(z) {
                continue;
            }
            assert_eq!(dom.contains(z), conic.eval(z).signum() == inside);
        }
    }
}
