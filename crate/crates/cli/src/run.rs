use alhazen_core::caustic::{caustic_cusps, caustic_sample, CausticCurve};
use alhazen_core::conic::{
    canonical_transform, classify_conic, f4_coefficients, tangency_points, transform_conic,
    ON_CURVE_TOL, PARALLEL_TOL,
};
use alhazen_core::disk::{
    apollonius_quartic, classify_roots, discriminant, e1, e2, pa_points_apollonius, pa_points_disk,
    pa_quartic, unimodular_root_count, PointPair, CLASSIFY_TOL, UNIMODULAR_TOL,
};
use alhazen_core::poly::{CLUSTER_TOL, DEFAULT_TOL, DEFAULT_TRIM};
use alhazen_core::smetric::{
    conjecture_edge_residual, levelsets, smetric_bruteforce, smetric_conic, smetric_conic_detail,
    ConicDomain, LevelSet, CLOSURE_TOL,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::export;
use crate::request::{Command, Format, RunRequest};

#[derive(Debug, Error)]
pub enum RunError {
    /// The request is malformed; exit status 2.
    #[error("{0}")]
    Usage(String),
    /// A solver rejected the input; exit status 1.
    #[error("{0}")]
    Solver(#[from] alhazen_core::Error),
}

impl RunError {
    pub fn exit_code(&self) -> u8 {
        match self {
            RunError::Usage(_) => 2,
            RunError::Solver(_) => 1,
        }
    }
}

fn versions() -> Value {
    json!({
        "alhazen-core": alhazen_core::VERSION,
        "alhazen-cli": env!("CARGO_PKG_VERSION"),
    })
}

fn tolerances() -> Value {
    json!({
        "poly_trim": DEFAULT_TRIM,
        "poly_residual": DEFAULT_TOL,
        "root_cluster": CLUSTER_TOL,
        "unimodular": UNIMODULAR_TOL,
        "classify": CLASSIFY_TOL,
        "on_curve": ON_CURVE_TOL,
        "parallel_normals": PARALLEL_TOL,
        "domain_closure": CLOSURE_TOL,
    })
}

fn pair(z1: alhazen_core::C64, z2: alhazen_core::C64) -> Result<PointPair, RunError> {
    Ok(PointPair::new(z1, z2)?)
}

/// Runs a request and renders its result in the requested format.
pub fn run(req: &RunRequest) -> Result<String, RunError> {
    if req.format != Format::Json && !req.command.is_curve() {
        return Err(RunError::Usage(format!(
            "`{}` only supports JSON output",
            req.command.name()
        )));
    }
    let result = match &req.command {
        Command::Disk { z1, z2 } => {
            let p = pair(*z1, *z2)?;
            let solution = pa_points_disk(&p)?;
            let classification = classify_roots(&p).ok();
            json!({
                "quartic": pa_quartic(&p),
                "solution": solution,
                "discriminant": discriminant(&p).ok(),
                "classification": classification,
                "smetric": smetric_conic(*z1, *z2, &ConicDomain::unit_disk()).ok(),
            })
        }
        Command::Apollonius { z1, z2 } => {
            let p = pair(*z1, *z2)?;
            json!({
                "quartic": apollonius_quartic(&p)?,
                "solution": pa_points_apollonius(&p)?,
            })
        }
        Command::Classify { z1, z2 } => {
            let p = pair(*z1, *z2)?;
            json!({
                "classification": classify_roots(&p)?,
                "unimodular_root_count": unimodular_root_count(&p)?,
                "e1": e1(&p),
                "e2": e2(&p),
                "roots": pa_quartic(&p).roots()?,
            })
        }
        Command::Caustic { z1, samples, clip } => {
            let mut curve = caustic_sample(*z1, *samples)?;
            if let Some(r) = clip {
                if !(*r > 0.0) || !r.is_finite() {
                    return Err(RunError::Usage(format!("invalid clip radius {r}")));
                }
                curve.samples.retain(|s| s.point.norm() <= *r);
            }
            match req.format {
                Format::Csv => return Ok(export::caustic_csv(&curve)),
                Format::Svg => return Ok(caustic_svg(&curve, *samples)),
                Format::Json => json!({
                    "curve": curve,
                    "cusps": caustic_cusps(*z1, *samples)?,
                }),
            }
        }
        Command::Conic {
            conic,
            z1,
            z2,
            kind,
        } => {
            let original = conic.build()?;
            let map = canonical_transform(*z1, *z2)?;
            let canonical = transform_conic(&original, &map);
            let f4 = f4_coefficients(&canonical)?;
            let tangency = tangency_points(&canonical)?;
            let back = map.inverse();
            let points: Vec<_> = tangency
                .points
                .iter()
                .map(|t| back.apply(t.point))
                .collect();
            let smetric = match (kind, conic) {
                (Some(kind), crate::request::ConicSpec::Foci { f1, f2, r }) => {
                    let dom = ConicDomain::new(*f1, *f2, *r, (*kind).into())?;
                    Some(smetric_conic_detail(*z1, *z2, &dom)?)
                }
                _ => None,
            };
            json!({
                "conic": original,
                "class": classify_conic(&original),
                "transform": map,
                "canonical_conic": canonical,
                "f4": f4,
                "f4_descending": f4.descending(),
                "f4_roots": f4.poly().roots()?,
                "tangency": tangency,
                "points_original_frame": points,
                "minimizer": tangency.minimizer(),
                "smetric": smetric,
            })
        }
        Command::Smetric {
            z1,
            z2,
            domain,
            bruteforce,
        } => {
            let dom = domain.build()?;
            let detail = smetric_conic_detail(*z1, *z2, &dom)?;
            let brute = match bruteforce {
                Some(n) => Some(smetric_bruteforce(*z1, *z2, &dom, *n)?),
                None => None,
            };
            json!({ "smetric": detail, "bruteforce": brute })
        }
        Command::Levelset {
            domain,
            center,
            levels,
            rays,
            ..
        } => {
            let dom = domain.build()?;
            let opts = req.command.levelset_options().unwrap();
            let sets = levelsets(&dom, *center, levels, *rays, &opts)?;
            match req.format {
                Format::Csv => return Ok(export::levelset_csv(&sets)),
                Format::Svg => return Ok(levelset_svg(&sets)),
                Format::Json => {
                    let edges: Vec<_> = sets
                        .iter()
                        .map(|ls| conjecture_edge_residual(&dom, *center, ls).ok())
                        .collect();
                    json!({ "levels": sets, "edges": edges })
                }
            }
        }
    };
    let doc = json!({
        "request": req,
        "versions": versions(),
        "tolerances": tolerances(),
        "result": result,
    });
    Ok(serde_json::to_string_pretty(&doc).expect("serializable document") + "\n")
}

fn caustic_svg(curve: &CausticCurve, samples: usize) -> String {
    let lines: Vec<_> = export::caustic_polylines(curve, samples)
        .into_iter()
        .enumerate()
        .map(|(i, l)| (format!("branch {i}"), l))
        .collect();
    export::svg(&format!("caustic for radiant {}", curve.radiant), &lines)
}

fn levelset_svg(sets: &[LevelSet]) -> String {
    let lines: Vec<_> = sets
        .iter()
        .flat_map(|ls| {
            export::levelset_polylines(ls)
                .into_iter()
                .map(move |l| (format!("t={}", ls.level), l))
        })
        .collect();
    let center = sets.first().map(|ls| ls.center).unwrap_or_default();
    export::svg(&format!("contours around {center}"), &lines)
}
