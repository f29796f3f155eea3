use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use sts_core::format::parse_entries;
use sts_core::{fixtures, StsError, TripleSystem};

use crate::CliError;

/// A system together with where it came from.
pub struct Named {
    pub label: String,
    pub system: TripleSystem,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Input files holding compact codes, `cyclic` lines or `v=N` block lists; `-` or nothing reads standard input.
    pub files: Vec<PathBuf>,
    /// Built-in reference system, by id (repeatable; see `sts fixtures list`).
    #[arg(long = "fixture", value_name = "ID")]
    pub fixtures: Vec<String>,
    /// Order for compact codes whose length does not determine it.
    #[arg(long)]
    pub order: Option<usize>,
}

fn fixture(id: &str) -> Result<Named, CliError> {
    let f = fixtures::get(id).ok_or_else(|| CliError::Input(format!("unknown fixture {id:?}")))?;
    Ok(Named {
        label: f.id.to_string(),
        system: f.system(),
    })
}

fn read_text(path: &PathBuf) -> Result<(String, String), CliError> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(("stdin".into(), text));
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), text))
}

/// Every system in a document, labelled `source:line`.
pub fn parse_document(source: &str, text: &str, order: Option<usize>) -> Result<Vec<Named>, CliError> {
    let entries = parse_entries(text).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    entries
        .iter()
        .map(|e| {
            let system = e.to_system(order).map_err(|err| match err {
                StsError::Parse { .. } => CliError::Input(format!("{source}: {err}")),
                other => CliError::Input(format!("{source}: line {}: {other}", e.line())),
            })?;
            Ok(Named {
                label: format!("{source}:{}", e.line()),
                system,
            })
        })
        .collect()
}

impl InputArgs {
    pub fn load(&self) -> Result<Vec<Named>, CliError> {
        let mut out = self.fixtures.iter().map(|id| fixture(id)).collect::<Result<Vec<_>, _>>()?;
        let mut files = self.files.clone();
        if files.is_empty() && out.is_empty() {
            files.push("-".into());
        }
        for path in &files {
            let (source, text) = read_text(path)?;
            out.extend(parse_document(&source, &text, self.order)?);
        }
        Ok(out)
    }
}

/// A single system named on the command line: a fixture id, a file, or literal text.
pub fn resolve(spec: &str, order: Option<usize>) -> Result<Named, CliError> {
    if fixtures::get(spec).is_some() {
        return fixture(spec);
    }
    let path = PathBuf::from(spec);
    let (source, text) = if path.is_file() {
        read_text(&path)?
    } else {
        ("argument".to_string(), spec.to_string())
    };
    let mut systems = parse_document(&source, &text, order)?;
    match systems.len() {
        1 => Ok(systems.remove(0)),
        n => Err(CliError::Input(format!("{spec:?} describes {n} systems, expected one"))),
    }
}
