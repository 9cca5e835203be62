use alhazen_core::smetric::{
    conjecture_edge_residual, levelset, smetric_bruteforce, smetric_conic, ConicDomain, DomainKind,
};
use alhazen_core::C64;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[test]
fn bruteforce_on_the_disk() {
    let dom = ConicDomain::unit_disk();
    for cc in [0.2, 0.5, 0.9] {
        let s = smetric_bruteforce(c(cc, 0.0), c(-cc, 0.0), &dom, 1_000_000).unwrap();
        assert!((s - cc).abs() < 1e-6);
    }
}

#[test]
fn bruteforce_refines_monotonically() {
    let dom = ConicDomain::new(c(1.5, 0.0), c(-1.0 / 3.0, -0.5), 2.2, DomainKind::SumLess).unwrap();
    let (z1, z2) = (c(0.2, 0.0), c(0.6, -0.3));
    let exact = smetric_conic(z1, z2, &dom).unwrap();
    let mut prev = 0.0;
    for n in [100, 200, 400, 800, 1600, 102_400] {
        let s = smetric_bruteforce(z1, z2, &dom, n).unwrap();
        assert!(s >= prev && s <= exact + 1e-12);
        prev = s;
    }
    assert!(exact - prev < 1e-4);
}

#[test]
fn disk_contours_from_the_centre() {
    let dom = ConicDomain::unit_disk();
    for t in [0.1, 0.35, 0.8] {
        let ls = levelset(&dom, c(0.0, 0.0), t, 90).unwrap();
        assert_eq!(ls.points.len(), 90);
        let radius = 2.0 * t / (1.0 + t);
        for z in &ls.points {
            assert!((z.norm() - radius).abs() < 1e-5);
        }
        let report = conjecture_edge_residual(&dom, c(0.0, 0.0), &ls).unwrap();
        assert!(report.edges.is_empty());
        assert_eq!(report.max_residual, 0.0);
    }
}

#[test]
fn conjectured_constants() {
    let hyper = ConicDomain::new(c(-0.5, -0.5), c(1.0, -1.0), 0.8, DomainKind::DiffLess).unwrap();
    let ls = levelset(&hyper, c(0.0, 0.0), 0.5, 360).unwrap();
    let report = conjecture_edge_residual(&hyper, c(0.0, 0.0), &ls).unwrap();
    assert!((report.constant - 0.5f64.sqrt()).abs() < 1e-15);

    let ell = ConicDomain::new(c(1.5, 0.0), c(-1.0 / 3.0, -0.5), 2.2, DomainKind::SumLess).unwrap();
    let ls = levelset(&ell, c(0.0, 0.0), 0.5, 360).unwrap();
    let report = conjecture_edge_residual(&ell, c(0.0, 0.0), &ls).unwrap();
    assert!((report.constant - (9.0 + 13f64.sqrt()) / 6.0).abs() < 1e-14);
}

#[test]
fn contour_points_reproduce_their_level() {
    let ell = ConicDomain::new(c(1.5, 0.0), c(-1.0 / 3.0, -0.5), 2.2, DomainKind::SumLess).unwrap();
    let z0 = c(0.2, 0.1);
    for t in [0.05, 0.5, 0.95] {
        let ls = levelset(&ell, z0, t, 120).unwrap();
        assert!(ls.unresolved_rays.is_empty());
        for &z in &ls.points {
            assert!((smetric_conic(z0, z, &ell).unwrap() - t).abs() <= 1e-4);
        }
    }
}
