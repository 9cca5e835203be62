//! CSV and SVG writers for curve-valued results.

use std::f64::consts::TAU;
use std::fmt::Write;

use alhazen_core::caustic::CausticCurve;
use alhazen_core::smetric::LevelSet;
use alhazen_core::C64;

pub fn caustic_csv(curve: &CausticCurve) -> String {
    let mut out = String::from("phi,re,im\n");
    for s in &curve.samples {
        writeln!(out, "{},{},{}", s.phi, s.point.re, s.point.im).unwrap();
    }
    out
}

pub fn levelset_csv(sets: &[LevelSet]) -> String {
    let mut out = String::from("level,re,im\n");
    for ls in sets {
        for z in &ls.points {
            writeln!(out, "{},{},{}", ls.level, z.re, z.im).unwrap();
        }
    }
    out
}

/// Runs of consecutive samples whose parameters differ by at most
/// `1.5 · step`. When the first and last samples are adjacent across `2π`
/// the polyline is closed.
fn runs(params: &[f64], points: &[C64], step: f64) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::new();
    let mut prev: Option<f64> = None;
    for (&t, &z) in params.iter().zip(points) {
        match prev {
            Some(p) if t - p <= 1.5 * step => out.last_mut().unwrap().push(z),
            _ => out.push(vec![z]),
        }
        prev = Some(t);
    }
    if let (Some(&first), Some(&last)) = (params.first(), params.last()) {
        if first + TAU - last <= 1.5 * step {
            if out.len() == 1 {
                out[0].push(points[0]);
            } else {
                let head = out.remove(0);
                out.last_mut().unwrap().extend(head);
            }
        }
    }
    out
}

pub fn caustic_polylines(curve: &CausticCurve, samples: usize) -> Vec<Vec<C64>> {
    let phis: Vec<f64> = curve.samples.iter().map(|s| s.phi).collect();
    let pts: Vec<C64> = curve.samples.iter().map(|s| s.point).collect();
    runs(&phis, &pts, TAU / samples as f64)
}

pub fn levelset_polylines(ls: &LevelSet) -> Vec<Vec<C64>> {
    runs(&ls.angles, &ls.points, TAU / ls.rays as f64)
}

/// SVG y coordinate; adding zero turns `-0` into `0`.
fn flip(im: f64) -> f64 {
    -im + 0.0
}

/// Polylines in an SVG document. The plane is drawn with the imaginary
/// axis pointing up; the view box covers the data with a 5% margin.
pub fn svg(title: &str, lines: &[(String, Vec<C64>)]) -> String {
    let pts = lines.iter().flat_map(|(_, l)| l.iter());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for z in pts {
        x0 = x0.min(z.re);
        x1 = x1.max(z.re);
        y0 = y0.min(flip(z.im));
        y1 = y1.max(flip(z.im));
    }
    if x0 > x1 {
        (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let margin = 0.05 * span;
    let (w, h) = (x1 - x0 + 2.0 * margin, y1 - y0 + 2.0 * margin);
    let stroke = span / 500.0;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        x0 - margin,
        y0 - margin,
        w,
        h
    )
    .unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
    for (label, line) in lines {
        let coords: Vec<String> = line
            .iter()
            .map(|z| format!("{},{}", z.re, flip(z.im)))
            .collect();
        writeln!(
            out,
            r#"<polyline data-label="{label}" fill="none" stroke="black" stroke-width="{stroke}" points="{}"/>"#,
            coords.join(" ")
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
