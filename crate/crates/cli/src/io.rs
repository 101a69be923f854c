use std::io::{Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use asm_groups::format::parse_matrices;
use asm_groups::IntMatrix;

pub fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("cannot read stdin")?;
            Ok(s)
        }
    }
}

pub fn read_matrices(path: Option<&Path>) -> Result<Vec<IntMatrix>> {
    let text = read_input(path)?;
    let ms = parse_matrices(&text)?;
    anyhow::ensure!(!ms.is_empty(), "no matrix found in input");
    Ok(ms)
}

pub fn read_matrix(path: Option<&Path>) -> Result<IntMatrix> {
    let mut ms = read_matrices(path)?;
    anyhow::ensure!(ms.len() == 1, "expected one matrix, found {}", ms.len());
    Ok(ms.pop().unwrap())
}

/// Runs `body` against stdout, or against a temporary file that replaces
/// `out` only once `body` has succeeded.
pub fn with_output<T>(out: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> Result<T>) -> Result<T> {
    match out {
        None => {
            let stdout = std::io::stdout();
            let mut w = std::io::BufWriter::new(stdout.lock());
            let v = body(&mut w)?;
            w.flush()?;
            Ok(v)
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
            let v = {
                let mut w = std::io::BufWriter::new(tmp.as_file_mut());
                let v = body(&mut w)?;
                w.flush()?;
                v
            };
            tmp.persist(path)
                .with_context(|| format!("cannot write {}", path.display()))?;
            Ok(v)
        }
    }
}
