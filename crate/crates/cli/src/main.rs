use std::io::Read;
use std::process::ExitCode;

use alhazen_cli::parse::{
    parse_complex, parse_complex_list, parse_domain, parse_kind, parse_levels, parse_real,
};
use alhazen_cli::request::{Command, ConicSpec, DomainSpec, Format, Kind};
use alhazen_cli::{request_from_json, run, RunRequest};
use alhazen_core::smetric::LevelSetOptions;
use alhazen_core::C64;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "alhazen",
    version,
    about = "Reflection points, catacaustics and the triangular ratio metric",
    args_conflicts_with_subcommands = true
)]
struct Cli {
    /// Output format; csv and svg apply to `caustic` and `levelset` only.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,
    /// Rerun a request read from a JSON file (`-` for stdin). Accepts a bare
    /// request or a previous output document.
    #[arg(long, value_name = "FILE")]
    from_json: Option<String>,
    #[command(subcommand)]
    command: Option<Cmd>,
}

#[derive(Args)]
struct Pair {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z1: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    z2: C64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reflection points on the unit circle from the reflection quartic.
    Disk(Pair),
    /// Reflection points on the unit circle from the Apollonius quartic.
    Apollonius(Pair),
    /// Discriminant classification of the reflection quartic.
    Classify(Pair),
    /// Catacaustic of the unit circle for a radiant point.
    Caustic {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z1: C64,
        #[arg(long, alias = "n", default_value_t = 720)]
        samples: usize,
        /// Drop samples farther than this from the origin.
        #[arg(long, value_parser = parse_real)]
        clip: Option<f64>,
    },
    /// Tangency points of a conic mirror, in the frame where z1, z2 map to 1, -1.
    Conic {
        /// Foci `f1,f2` of the mirror; use with `--r`.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "coeffs")]
        foci: Option<String>,
        /// Focal constant: sum for ellipses, difference for hyperbolas.
        #[arg(long, value_parser = parse_real, requires = "foci")]
        r: Option<f64>,
        /// Coefficients `a,b,p,q` of a z^2 conj + p z zbar + a zbar^2 + conj(b) z + b zbar + q.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "foci")]
        coeffs: Option<String>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
        z1: C64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "-1")]
        z2: C64,
        /// Also evaluate the metric on the domain of this kind (foci only).
        #[arg(long, value_parser = parse_kind, requires = "foci")]
        kind: Option<Kind>,
    },
    /// Triangular ratio metric on a conic domain.
    Smetric {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z1: C64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z2: C64,
        /// `kind:f1,f2,r` or `disk:center,radius`.
        #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
        domain: DomainSpec,
        /// Also report a sampled lower bound with this many boundary points.
        #[arg(long)]
        bruteforce: Option<usize>,
    },
    /// Level sets of the metric around a centre.
    Levelset {
        #[arg(long, value_parser = parse_domain, allow_hyphen_values = true)]
        domain: DomainSpec,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        center: C64,
        /// `start:stop:step` or a comma-separated list.
        #[arg(long, value_parser = parse_levels)]
        levels: std::vec::Vec<f64>,
        #[arg(long, default_value_t = 720)]
        rays: usize,
        #[arg(long, default_value_t = LevelSetOptions::default().scan_samples)]
        scan_samples: usize,
        #[arg(long, default_value_t = LevelSetOptions::default().bisection_width)]
        bisection_width: f64,
        #[arg(long, default_value_t = LevelSetOptions::default().max_iterations)]
        max_iterations: usize,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    match s {
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        "svg" => Ok(Format::Svg),
        _ => Err(format!("unknown format `{s}` (json, csv, svg)")),
    }
}

fn conic_spec(
    foci: Option<String>,
    r: Option<f64>,
    coeffs: Option<String>,
) -> Result<ConicSpec, String> {
    if let Some(foci) = foci {
        let f = parse_complex_list(&foci, 2).map_err(|e| e.to_string())?;
        let r = r.ok_or("`--foci` needs `--r`")?;
        return Ok(ConicSpec::Foci {
            f1: f[0],
            f2: f[1],
            r,
        });
    }
    let coeffs = coeffs.ok_or("one of `--foci` or `--coeffs` is required")?;
    let parts: Vec<&str> = coeffs.split(',').collect();
    let [a, b, p, q] = parts[..] else {
        return Err(format!("expected a,b,p,q in `{coeffs}`"));
    };
    let err = |e: alhazen_cli::parse::ParseError| e.to_string();
    Ok(ConicSpec::Coefficients {
        a: parse_complex(a).map_err(err)?,
        b: parse_complex(b).map_err(err)?,
        p: parse_real(p).map_err(err)?,
        q: parse_real(q).map_err(err)?,
    })
}

fn command(cmd: Cmd) -> Result<Command, String> {
    Ok(match cmd {
        Cmd::Disk(Pair { z1, z2 }) => Command::Disk { z1, z2 },
        Cmd::Apollonius(Pair { z1, z2 }) => Command::Apollonius { z1, z2 },
        Cmd::Classify(Pair { z1, z2 }) => Command::Classify { z1, z2 },
        Cmd::Caustic { z1, samples, clip } => Command::Caustic { z1, samples, clip },
        Cmd::Conic {
            foci,
            r,
            coeffs,
            z1,
            z2,
            kind,
        } => Command::Conic {
            conic: conic_spec(foci, r, coeffs)?,
            z1,
            z2,
            kind,
        },
        Cmd::Smetric {
            z1,
            z2,
            domain,
            bruteforce,
        } => Command::Smetric {
            z1,
            z2,
            domain,
            bruteforce,
        },
        Cmd::Levelset {
            domain,
            center,
            levels,
            rays,
            scan_samples,
            bisection_width,
            max_iterations,
        } => Command::Levelset {
            domain,
            center,
            levels,
            rays,
            scan_samples,
            bisection_width,
            max_iterations,
        },
    })
}

fn read_source(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path)
    }
}

fn fail(code: u8, msg: &str) -> ExitCode {
    eprintln!("alhazen: {msg}");
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut req = match (cli.from_json, cli.command) {
        (Some(path), _) => {
            let text = match read_source(&path) {
                Ok(t) => t,
                Err(e) => return fail(1, &format!("{path}: {e}")),
            };
            match request_from_json(&text) {
                Ok(r) => r,
                Err(e) => return fail(2, &format!("{path}: {e}")),
            }
        }
        (None, Some(cmd)) => match command(cmd) {
            Ok(command) => RunRequest {
                command,
                format: Format::Json,
            },
            Err(e) => return fail(2, &e),
        },
        (None, None) => return fail(2, "a subcommand or `--from-json` is required"),
    };
    if let Some(f) = cli.format {
        req.format = f;
    }
    match run(&req) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(e.exit_code(), &e.to_string()),
    }
}
