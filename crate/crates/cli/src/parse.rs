//! Literal grammars accepted on the command line.
//!
//! ```text
//! complex  := [-]<float>[+|-]<float>i | [-]<float> | [-]<float>i
//! domain   := <kind>:<complex>,<complex>,<float> | disk:<complex>,<float>
//! levels   := <float>:<float>:<float> | <float>[,<float>]*
//! ```

use alhazen_core::C64;
use thiserror::Error;

use crate::request::{DomainSpec, Kind};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("invalid complex literal `{0}`")]
    Complex(String),
    #[error("non-finite value in `{0}`")]
    NonFinite(String),
    #[error("invalid number `{0}`")]
    Number(String),
    #[error("invalid domain `{0}`: {1}")]
    Domain(String, &'static str),
    #[error("invalid level range `{0}`")]
    Levels(String),
    #[error("expected {expected} comma-separated values in `{input}`")]
    Arity { input: String, expected: usize },
}

pub fn parse_real(s: &str) -> Result<f64, ParseError> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| ParseError::Number(s.to_string()))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(ParseError::NonFinite(s.to_string()))
    }
}

/// Index of the sign separating the real and imaginary parts.
fn split_point(s: &str) -> Option<usize> {
    let b = s.as_bytes();
    (1..b.len())
        .rev()
        .find(|&i| (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E'))
}

pub fn parse_complex(input: &str) -> Result<C64, ParseError> {
    let s = input.trim();
    let bad = || ParseError::Complex(input.to_string());
    let finite = |v: f64| {
        if v.is_finite() {
            Ok(v)
        } else {
            Err(ParseError::NonFinite(input.to_string()))
        }
    };
    let float = |t: &str| -> Result<f64, ParseError> {
        // `f64::from_str` also takes "inf" and "nan"; those are rejected by `finite`
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t.parse::<f64>().map_err(|_| bad()).and_then(finite),
        }
    };
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(C64::new(
            s.parse::<f64>().map_err(|_| bad()).and_then(finite)?,
            0.0,
        ));
    };
    // "inf" and "nan" spellings end in letters; catch "-infi" style input
    if body.ends_with(|c: char| c.is_ascii_alphabetic()) {
        return Err(bad());
    }
    match split_point(body) {
        Some(k) => {
            let re = body[..k]
                .parse::<f64>()
                .map_err(|_| bad())
                .and_then(finite)?;
            Ok(C64::new(re, float(&body[k..])?))
        }
        None => Ok(C64::new(0.0, float(body)?)),
    }
}

/// Splits on commas and parses each piece as a complex literal.
pub fn parse_complex_list(input: &str, expected: usize) -> Result<Vec<C64>, ParseError> {
    let parts: Vec<&str> = input.split(',').collect();
    if parts.len() != expected {
        return Err(ParseError::Arity {
            input: input.to_string(),
            expected,
        });
    }
    parts.into_iter().map(parse_complex).collect()
}

pub fn parse_kind(s: &str) -> Result<Kind, ParseError> {
    Ok(match s.trim() {
        "sum-less" | "ellipse" => Kind::SumLess,
        "sum-greater" | "ellipse-exterior" => Kind::SumGreater,
        "diff-less" | "hyperbola" => Kind::DiffLess,
        "diff-greater" | "hyperbola-exterior" => Kind::DiffGreater,
        _ => return Err(ParseError::Domain(s.to_string(), "unknown kind")),
    })
}

/// `ellipse:f1,f2,r`, `hyperbola-exterior:f1,f2,r`, `disk:center,radius`, ...
pub fn parse_domain(input: &str) -> Result<DomainSpec, ParseError> {
    let (kind, rest) = input
        .split_once(':')
        .ok_or(ParseError::Domain(input.to_string(), "missing `kind:`"))?;
    let parts: Vec<&str> = rest.split(',').collect();
    if kind.trim() == "disk" {
        let [center, radius] = parts[..] else {
            return Err(ParseError::Domain(
                input.to_string(),
                "expected center,radius",
            ));
        };
        let center = parse_complex(center)?;
        let radius = parse_real(radius)?;
        return Ok(DomainSpec {
            f1: center,
            f2: center,
            r: 2.0 * radius,
            kind: Kind::SumLess,
        });
    }
    let kind = parse_kind(kind)?;
    let [f1, f2, r] = parts[..] else {
        return Err(ParseError::Domain(input.to_string(), "expected f1,f2,r"));
    };
    Ok(DomainSpec {
        f1: parse_complex(f1)?,
        f2: parse_complex(f2)?,
        r: parse_real(r)?,
        kind,
    })
}

/// Digits after the decimal point of a plain decimal literal.
fn decimals(s: &str) -> Option<usize> {
    let s = s.trim();
    if s.contains(['e', 'E']) {
        return None;
    }
    Some(s.split_once('.').map_or(0, |(_, frac)| frac.len()))
}

/// `start:stop:step` (inclusive) or a comma-separated list. Range values are
/// rounded to the decimal places written in `start` and `step`, so
/// `0.05:1:0.05` yields `0.15` rather than `0.15000000000000002`.
pub fn parse_levels(input: &str) -> Result<Vec<f64>, ParseError> {
    let bad = || ParseError::Levels(input.to_string());
    if !input.contains(':') {
        return input.split(',').map(parse_real).collect();
    }
    let raw: Vec<&str> = input.split(':').collect();
    let parts: Vec<f64> = raw
        .iter()
        .map(|s| parse_real(s))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(step > 0.0) || stop < start {
        return Err(bad());
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    if n > 100_000 {
        return Err(bad());
    }
    let digits = decimals(raw[0])
        .zip(decimals(raw[2]))
        .map(|(a, b)| a.max(b));
    Ok((0..=n)
        .map(|k| {
            let v = start + k as f64 * step;
            if (v - stop).abs() <= 1e-9 * step {
                return stop;
            }
            match digits {
                Some(d) => format!("{v:.d$}").parse().unwrap_or(v),
                None => v,
            }
        })
        .collect())
}
