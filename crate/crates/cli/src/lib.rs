//! Command-line front end for `alhazen-core`.
//!
//! A [`RunRequest`] names one solver and its inputs. [`run`] executes it and
//! renders a JSON document (or CSV/SVG for curve results). The JSON document
//! embeds the request, so it can be fed back with `--from-json`.

pub mod export;
pub mod parse;
pub mod request;
mod run;

pub use request::RunRequest;
pub use run::{run, RunError};

/// Extracts the request from either a bare request or a full output document.
pub fn request_from_json(text: &str) -> Result<RunRequest, serde_json::Error> {
    let mut value: serde_json::Value = serde_json::from_str(text)?;
    if let Some(inner) = value.get_mut("request") {
        value = inner.take();
    }
    serde_json::from_value(value)
}
