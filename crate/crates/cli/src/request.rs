//! Serializable run requests. Every result document echoes its request, and
//! feeding the document back in reruns it.

use alhazen_core::conic::{conic_from_foci, Conic};
use alhazen_core::smetric::{ConicDomain, DomainKind, LevelSetOptions};
use alhazen_core::C64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    SumLess,
    SumGreater,
    DiffLess,
    DiffGreater,
}

impl From<Kind> for DomainKind {
    fn from(k: Kind) -> DomainKind {
        match k {
            Kind::SumLess => DomainKind::SumLess,
            Kind::SumGreater => DomainKind::SumGreater,
            Kind::DiffLess => DomainKind::DiffLess,
            Kind::DiffGreater => DomainKind::DiffGreater,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainSpec {
    pub f1: C64,
    pub f2: C64,
    pub r: f64,
    pub kind: Kind,
}

impl DomainSpec {
    pub fn build(&self) -> alhazen_core::Result<ConicDomain> {
        ConicDomain::new(self.f1, self.f2, self.r, self.kind.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ConicSpec {
    Foci { f1: C64, f2: C64, r: f64 },
    Coefficients { a: C64, b: C64, p: f64, q: f64 },
}

impl ConicSpec {
    pub fn build(&self) -> alhazen_core::Result<Conic> {
        match *self {
            ConicSpec::Foci { f1, f2, r } => conic_from_foci(f1, f2, r),
            ConicSpec::Coefficients { a, b, p, q } => Conic::new(a, b, p, q),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Disk {
        z1: C64,
        z2: C64,
    },
    Apollonius {
        z1: C64,
        z2: C64,
    },
    Classify {
        z1: C64,
        z2: C64,
    },
    Caustic {
        z1: C64,
        samples: usize,
        /// Drop samples farther than this from the origin.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        clip: Option<f64>,
    },
    Conic {
        conic: ConicSpec,
        z1: C64,
        z2: C64,
        kind: Option<Kind>,
    },
    Smetric {
        z1: C64,
        z2: C64,
        domain: DomainSpec,
        bruteforce: Option<usize>,
    },
    Levelset {
        domain: DomainSpec,
        center: C64,
        levels: Vec<f64>,
        rays: usize,
        scan_samples: usize,
        bisection_width: f64,
        max_iterations: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Disk { .. } => "disk",
            Command::Apollonius { .. } => "apollonius",
            Command::Classify { .. } => "classify",
            Command::Caustic { .. } => "caustic",
            Command::Conic { .. } => "conic",
            Command::Smetric { .. } => "smetric",
            Command::Levelset { .. } => "levelset",
        }
    }

    /// Commands whose result is a curve and can be written as CSV or SVG.
    pub fn is_curve(&self) -> bool {
        matches!(self, Command::Caustic { .. } | Command::Levelset { .. })
    }

    pub(crate) fn levelset_options(&self) -> Option<LevelSetOptions> {
        match *self {
            Command::Levelset {
                scan_samples,
                bisection_width,
                max_iterations,
                ..
            } => Some(LevelSetOptions {
                scan_samples,
                bisection_width,
                max_iterations,
            }),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRequest {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub format: Format,
}
