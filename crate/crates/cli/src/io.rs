use std::fs;
use std::path::Path;

use sosq_core::{Error, Poly, Result};

/// Contents of the file at `arg` when it exists, otherwise `arg` itself.
pub fn text_or_file(arg: &str) -> Result<String> {
    let path = Path::new(arg);
    if path.is_file() {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

pub fn read_file(arg: &str) -> Result<String> {
    fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))
}

/// A form given inline or as a file; `#` comments and line breaks are allowed.
pub fn read_form(arg: &str) -> Result<Poly> {
    let text = text_or_file(arg)?;
    let joined: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    joined.join(" ").parse()
}

/// Forms separated by `;`.
pub fn read_forms(arg: &str) -> Result<Vec<Poly>> {
    let text = text_or_file(arg)?;
    text.split([';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// Pads every form to the largest variable count.
pub fn common_nvars(forms: &mut [Poly]) -> usize {
    let n = forms.iter().map(Poly::nvars).max().unwrap_or(1);
    for f in forms.iter_mut() {
        *f = std::mem::replace(f, Poly::zero(1)).with_nvars(n);
    }
    n
}
