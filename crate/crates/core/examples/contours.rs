//! Prints contour families of the two example domains as CSV.

use alhazen_core::smetric::{levelsets, ConicDomain, DomainKind, LevelSetOptions};
use alhazen_core::C64;

fn main() {
    let domains = [
        ConicDomain::new(
            C64::new(-0.5, -0.5),
            C64::new(1.0, -1.0),
            0.8,
            DomainKind::DiffLess,
        ),
        ConicDomain::new(
            C64::new(1.5, 0.0),
            C64::new(-1.0 / 3.0, -0.5),
            2.2,
            DomainKind::SumLess,
        ),
    ];
    let levels: Vec<f64> = (1..=20).map(|k| k as f64 * 0.05).collect();
    println!("domain,level,re,im");
    for (i, dom) in domains.iter().enumerate() {
        let dom = dom.as_ref().expect("valid domain");
        let start = std::time::Instant::now();
        let sets = levelsets(
            dom,
            C64::new(0.0, 0.0),
            &levels,
            720,
            &LevelSetOptions::default(),
        )
        .expect("level sets");
        eprintln!("domain {i}: {:?}", start.elapsed());
        for ls in &sets {
            for z in &ls.points {
                println!("{i},{},{},{}", ls.level, z.re, z.im);
            }
        }
    }
}
