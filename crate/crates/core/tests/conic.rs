use std::f64::consts::TAU;

use alhazen_core::conic::{
    canonical_transform, classify_conic, confocal_conic, conic_from_foci, f4_coefficients,
    factor_f2, s_quartic, segment_blocked, tangency_points, transform_conic, Conic, ConicClass,
    Similarity, TangencyKind,
};
use alhazen_core::smetric::{ConicDomain, DomainKind};
use alhazen_core::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn ellipse_example() -> Conic {
    conic_from_foci(c(2.0, 0.0), c(1.0, 2.0), 6f64.sqrt()).unwrap()
}

fn hyperbola_example() -> Conic {
    conic_from_foci(c(3.0, 0.0), c(1.0, 2.0), 5f64.sqrt()).unwrap()
}

/// Resultant in `w` of `A₁w² + B₁w + C₁` and `A₂w² + B₂w + C₂`.
fn quadratic_resultant(x: [C64; 3], y: [C64; 3]) -> C64 {
    let [a1, b1, c1] = x;
    let [a2, b2, c2] = y;
    let t = a1 * c2 - a2 * c1;
    t * t - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1)
}

/// The conic and the confocal curve as quadratics in an independent
/// variable `w` standing for `z̄`, and their resultant.
fn eliminate(conic: &Conic, r2: f64, z: C64) -> C64 {
    let Conic { a, b, p, q } = *conic;
    let c_w = [a, p * z + b, a.conj() * z * z + b.conj() * z + q];
    let e_w = [
        c(1.0, 0.0),
        (2.0 - 2.0 * r2) * z,
        z * z + r2 * r2 - 2.0 * r2,
    ];
    quadratic_resultant(c_w, e_w)
}

fn random_conic(rng: &mut ChaCha8Rng) -> Conic {
    let g = |rng: &mut ChaCha8Rng| c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
    Conic::new(
        g(rng),
        g(rng),
        rng.gen_range(-3.0..3.0),
        rng.gen_range(-3.0..3.0),
    )
    .unwrap()
}

#[test]
fn s_quartic_is_the_resultant() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut conics = vec![ellipse_example(), hyperbola_example(), Conic::unit_circle()];
    conics.extend((0..10).map(|_| random_conic(&mut rng)));
    for conic in &conics {
        for r2 in [0.3, 2.5, 7.0] {
            let s = s_quartic(conic, r2);
            let mut ratio: Option<C64> = None;
            for _ in 0..8 {
                let z = c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
                let (sv, rv) = (s.eval(z), eliminate(conic, r2, z));
                if rv.norm() < 1e-6 {
                    continue;
                }
                let k = sv / rv;
                match ratio {
                    None => ratio = Some(k),
                    Some(k0) => assert!((k - k0).norm() <= 1e-9 * k0.norm(), "{k} {k0}"),
                }
            }
        }
    }
}

#[test]
fn s_quartic_leading_coefficient() {
    let conic = ellipse_example();
    let Conic { a, p, .. } = conic;
    for r2 in [0.5, 3.0, 10.0] {
        let s = s_quartic(&conic, r2);
        let ab = a.conj();
        let expected = 4.0 * ab * a * r2 * r2
            + 2.0 * ((a + ab) * p - 4.0 * ab * a) * r2
            + (p - a - ab) * (p - a - ab);
        assert!((s.coeffs()[4] - expected).norm() < 1e-9 * expected.norm());
        assert!(expected.norm() > 0.0);
    }
}

/// `r₂` of the confocal curve through `u`.
fn tangency_r2(u: C64, kind: TangencyKind) -> f64 {
    let (d1, d2) = ((u - 1.0).norm(), (u + 1.0).norm());
    let r = if kind == TangencyKind::Hyperbola {
        d1 - d2
    } else {
        d1 + d2
    };
    r * r / 2.0
}

#[test]
fn every_tangency_point_is_a_double_root() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut conics = vec![ellipse_example(), hyperbola_example()];
    conics.extend((0..10).map(|_| random_conic(&mut rng)));
    for conic in &conics {
        let Ok(sol) = tangency_points(conic) else {
            continue;
        };
        for t in &sol.points {
            assert_ne!(t.tangency_kind, TangencyKind::Undetermined);
            let s = s_quartic(conic, tangency_r2(t.point, t.tangency_kind));
            // a double root splits by about the square root of the rounding error
            let near = s
                .roots()
                .unwrap()
                .roots
                .iter()
                .filter(|&&z| (z - t.point).norm() < 1e-4 * (1.0 + t.point.norm()))
                .count();
            assert!(near >= 2, "{t:?}");
        }
    }
}

#[test]
fn s_vanishes_at_printed_root() {
    let conic = ellipse_example();
    let u6 = c(1.235845, 2.067480);
    let s = s_quartic(&conic, tangency_r2(u6, TangencyKind::Ellipse));
    assert!(s.eval(u6).norm() <= 1e-6 * s.max_abs());
    let u = tangency_points(&conic).unwrap().points;
    let simple = u.iter().find(|t| (t.point - u6).norm() < 1e-5).unwrap();
    let f4 = f4_coefficients(&conic).unwrap().poly();
    assert!(f4.derivative().eval(simple.point).norm() > 1e-3 * f4.max_abs());
}

/// Focal sum and difference along a dense parametrisation of the ellipse;
/// their local extrema are the tangency points.
#[test]
fn tangency_points_are_focal_extrema() {
    let dom = ConicDomain::new(
        c(2.0, 0.0),
        c(1.0, 2.0),
        6f64.sqrt(),
        DomainKind::SumGreater,
    )
    .unwrap();
    let n = 200_000;
    let pts = dom.sample_boundary(n, 1.0);
    let sum = |z: C64| (z - 1.0).norm() + (z + 1.0).norm();
    let diff = |z: C64| (z - 1.0).norm() - (z + 1.0).norm();
    let mut extrema = Vec::new();
    for f in [&sum as &dyn Fn(C64) -> f64, &diff] {
        for k in 0..n {
            let (a, b, d) = (f(pts[(k + n - 1) % n]), f(pts[k]), f(pts[(k + 1) % n]));
            // the difference has kinks where the curve crosses the rays x > 1, x < −1
            let kink = (b.abs() - 2.0).abs() < 1e-9;
            if !kink && ((b > a && b >= d) || (b < a && b <= d)) {
                extrema.push(pts[k]);
            }
        }
    }
    let sol = tangency_points(&ellipse_example()).unwrap();
    assert_eq!(extrema.len(), sol.points.len());
    for e in &extrema {
        let d = sol
            .points
            .iter()
            .map(|t| (t.point - e).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(d < 1e-4, "{e} {d}");
    }
    // the minimiser dominates the sampled sums
    let best = sol.minimizer().unwrap().sum;
    assert!(pts.iter().all(|&z| best <= sum(z) + 1e-12));
}

#[test]
fn minimizer_dominates_boundary_samples() {
    let cases = [
        ConicDomain::new(
            c(2.0, 0.0),
            c(1.0, 2.0),
            6f64.sqrt(),
            DomainKind::SumGreater,
        ),
        ConicDomain::new(c(3.0, 0.0), c(1.0, 2.0), 5f64.sqrt(), DomainKind::DiffLess),
        ConicDomain::new(c(0.5, 3.0), c(-1.0, 2.0), 3.0, DomainKind::SumLess),
    ];
    for dom in cases {
        let dom = dom.unwrap();
        let conic = dom.boundary();
        let sol = tangency_points(&conic).unwrap();
        let best = sol.minimizer().unwrap().sum;
        for z in dom.sample_boundary(100_000, 2.0) {
            assert!(best <= (z - 1.0).norm() + (z + 1.0).norm() + 1e-12);
        }
    }
}

#[test]
fn scaling_the_conic_keeps_the_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let conic = random_conic(&mut rng);
        let Ok(f4) = f4_coefficients(&conic) else {
            continue;
        };
        let roots = f4.poly().roots().unwrap().roots;
        for k in [-2.5, 0.01, 40.0] {
            let scaled = f4_coefficients(&conic.scaled(k)).unwrap();
            let other = scaled.poly().roots().unwrap().roots;
            assert_eq!(roots.len(), other.len());
            for (x, y) in roots.iter().zip(&other) {
                assert!((x - y).norm() < 1e-10 * (1.0 + x.norm()), "{x} {y}");
            }
        }
    }
}

#[test]
fn sextic_degree_by_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..20 {
        let conic = random_conic(&mut rng);
        let class = classify_conic(&conic);
        if !matches!(class, ConicClass::Ellipse | ConicClass::Hyperbola) {
            continue;
        }
        let f4 = f4_coefficients(&conic).unwrap().poly();
        assert_eq!(f4.roots().unwrap().roots.len(), 6);
    }
    // p² = 4|a|²
    let parabola = Conic::new(c(0.6, 0.8), c(1.0, -0.5), 2.0, 0.7).unwrap();
    assert_eq!(classify_conic(&parabola), ConicClass::Parabola);
    let f4 = f4_coefficients(&parabola).unwrap().poly();
    assert!(f4.roots().unwrap().roots.len() <= 5);
}

#[test]
fn transformed_conic_vanishes_on_image_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let dom = ConicDomain::new(
        c(2.0, 0.0),
        c(1.0, 2.0),
        6f64.sqrt(),
        DomainKind::SumGreater,
    )
    .unwrap();
    let conic = dom.boundary();
    for _ in 0..10 {
        let map = Similarity {
            alpha: c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            beta: c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
        };
        let moved = transform_conic(&conic, &map);
        for z in dom.sample_boundary(100, 1.0) {
            assert!(
                moved.eval(map.apply(z)).abs() <= 1e-9 * moved.scale() * (1.0 + z.norm()).powi(2)
            );
        }
    }
}

#[test]
fn rotation_of_a_conic() {
    let conic = ellipse_example();
    let w = C64::from_polar(1.0, 0.7);
    let rotated = transform_conic(
        &conic,
        &Similarity {
            alpha: w,
            beta: c(0.0, 0.0),
        },
    );
    assert!((rotated.p - conic.p).abs() < 1e-12);
    assert!((rotated.q - conic.q).abs() < 1e-12);
    assert!((rotated.a - conic.a * w * w).norm() < 1e-12);
    assert!((rotated.b - conic.b * w).norm() < 1e-12);
}

#[test]
fn canonical_transform_preserves_ratios() {
    let map = canonical_transform(c(2.0, 0.0), c(1.0, 2.0)).unwrap();
    assert!((map.alpha - 2.0 / c(1.0, -2.0)).norm() < 1e-15);
    assert!((map.beta + c(3.0, 2.0) / c(1.0, -2.0)).norm() < 1e-15);
    let mut rng = ChaCha8Rng::seed_from_u64(26);
    for _ in 0..50 {
        let mut g = || c(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let (x, y, w) = (g(), g(), g());
        let before = (x - y).norm() / (y - w).norm();
        let after = (map.apply(x) - map.apply(y)).norm() / (map.apply(y) - map.apply(w)).norm();
        assert!((before - after).abs() < 1e-12 * before.max(1.0));
    }
}

#[test]
fn real_axis_factor() {
    let roots = factor_f2(&ellipse_example()).roots().unwrap().roots;
    assert_eq!(roots.len(), 2);
    for r in roots {
        assert!(r.im.abs() < 1e-12);
        assert!(r.re.abs() > 1.0);
    }
    assert!(!segment_blocked(&ellipse_example()));
    assert!(segment_blocked(&Conic::unit_circle()));
    let wide = conic_from_foci(c(3.0, 0.0), c(-3.0, 0.0), 4.0).unwrap();
    assert!(!segment_blocked(&wide));
    let roots = factor_f2(&wide).roots().unwrap().roots;
    for r in roots {
        assert!((r.re.abs() - 2.0).abs() < 1e-12);
    }
}

#[test]
fn confocal_family_touches_the_circle_at_the_axis() {
    // circle of radius 2 centred at 0 touches |z − 1| + |z + 1| = 4 at ±2
    let circle = Conic::new(c(0.0, 0.0), c(0.0, 0.0), 1.0, -4.0).unwrap();
    let s = s_quartic(&circle, 8.0);
    let clusters = s.roots().unwrap().clusters();
    for x in [2.0, -2.0] {
        let k = clusters
            .iter()
            .find(|k| (k.center - c(x, 0.0)).norm() < 1e-6)
            .unwrap();
        assert!(k.multiplicity >= 2);
    }
    let e = confocal_conic(8.0);
    for k in 0..16 {
        let t = TAU * k as f64 / 16.0;
        let z = c(2.0 * t.cos(), 3f64.sqrt() * t.sin());
        assert!(e.eval(z).abs() < 1e-12);
    }
}
