//! Output sink: standard output or a file, LF line endings either way.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

pub enum Sink {
    Stdout(std::io::Stdout),
    File(BufWriter<File>),
}

impl Sink {
    pub fn new(path: Option<&Path>) -> std::io::Result<Self> {
        Ok(match path {
            None => Sink::Stdout(std::io::stdout()),
            Some(p) => Sink::File(BufWriter::new(File::create(p)?)),
        })
    }

    pub fn line(&mut self, s: &str) -> Result<(), String> {
        let res = match self {
            Sink::Stdout(out) => writeln!(out, "{s}"),
            Sink::File(f) => writeln!(f, "{s}"),
        };
        res.map_err(|e| format!("write failed: {e}"))
    }

    pub fn finish(&mut self) -> Result<(), String> {
        let res = match self {
            Sink::Stdout(out) => out.flush(),
            Sink::File(f) => f.flush(),
        };
        res.map_err(|e| format!("flush failed: {e}"))
    }
}

/// The JSON envelope every `--format json` result uses.
pub fn json_envelope(inputs: serde_json::Value, results: serde_json::Value) -> String {
    serde_json::json!({
        "inputs": inputs,
        "results": results,
        "meta": { "version": env!("CARGO_PKG_VERSION") },
    })
    .to_string()
}
