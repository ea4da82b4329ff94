use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NOT_JORDAN: u8 = 3;
pub const EXIT_INCONCLUSIVE: u8 = 4;

/// A failed run: message for stderr plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(e: impl fmt::Display) -> Self {
        Self {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }

    pub fn verification(e: impl fmt::Display) -> Self {
        Self {
            code: EXIT_VERIFICATION,
            message: e.to_string(),
        }
    }
}

/// Everything that determines a report.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    /// sha256 of every input file, keyed by the path as given.
    pub inputs: BTreeMap<String, String>,
    pub field: String,
    pub eta: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
    #[serde(skip)]
    started: Option<Instant>,
}

impl RunManifest {
    /// With `timing`, the report records the time from here to [`emit`].
    pub fn new(command: &str, timing: bool) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            field: String::new(),
            eta: String::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION"),
            elapsed_ms: None,
            started: timing.then(Instant::now),
        }
    }

    /// Reads an input file and records its hash.
    pub fn read_input(&mut self, path: &Path) -> Result<String, Failure> {
        let bytes =
            fs::read(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
        self.inputs.insert(
            path.display().to_string(),
            hex::encode(Sha256::digest(&bytes)),
        );
        String::from_utf8(bytes).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    manifest: &'a RunManifest,
    report: &'a T,
}

/// Writes `{manifest, report}` as pretty JSON to `out`, or to stdout.
pub fn emit<T: Serialize>(
    manifest: &RunManifest,
    report: &T,
    out: Option<&PathBuf>,
) -> Result<(), Failure> {
    let mut manifest = manifest.clone();
    manifest.elapsed_ms = manifest.started.map(|t| t.elapsed().as_millis());
    let text = serde_json::to_string_pretty(&Envelope {
        manifest: &manifest,
        report,
    })
    .map_err(Failure::input)?;
    write_text(&text, out)
}

pub fn write_text(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => match writeln!(io::stdout().lock(), "{text}") {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(Failure::input(e)),
            _ => Ok(()),
        },
    }
}
