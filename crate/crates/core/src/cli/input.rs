//! Line-oriented input documents.
//!
//! ```text
//! # Kodaira-Thurston
//! dim = 4
//! d = (0,0,0,23)
//! omega = 12+34
//! J = [[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]
//! ```
//!
//! `catalog = name` starts from a built-in entry; later keys override it.
//! Map files list `rows = n`, `cols = m` and then `n` lines of `m` rationals.

use std::collections::BTreeMap;

use crate::catalog;
use crate::cec::LieAlgebra;
use crate::forms::KForm;
use crate::linalg::RationalMatrix;
use crate::parser::{parse_form_of_degree, parse_matrix, parse_rational, parse_salamon};

use super::CliError;

/// A fully parsed but not yet validated input.
#[derive(Debug, Clone)]
pub struct InputDocument {
    pub name: String,
    pub algebra: LieAlgebra,
    pub omega: Option<KForm>,
    pub j: Option<RationalMatrix>,
}

const KEYS: [&str; 5] = ["catalog", "dim", "d", "omega", "J"];

fn key_values(text: &str) -> Result<BTreeMap<String, (usize, String)>, CliError> {
    let mut out = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::syntax(format!(
                "line {line_no}: expected `key = value`"
            )));
        };
        let key = key.trim().to_string();
        if !KEYS.contains(&key.as_str()) {
            return Err(CliError::syntax(format!(
                "line {line_no}: unknown key `{key}`"
            )));
        }
        if out
            .insert(key.clone(), (line_no, value.trim().to_string()))
            .is_some()
        {
            return Err(CliError::syntax(format!(
                "line {line_no}: duplicate key `{key}`"
            )));
        }
    }
    Ok(out)
}

pub fn parse_document(name: &str, text: &str) -> Result<InputDocument, CliError> {
    let kv = key_values(text)?;
    let base = match kv.get("catalog") {
        Some((line, value)) => {
            Some(catalog::get(value).map_err(|e| CliError::semantic(format!("line {line}: {e}")))?)
        }
        None => None,
    };
    let algebra = match kv.get("d") {
        Some((line, value)) => {
            parse_salamon(value).map_err(|e| CliError::syntax(format!("line {line}: d: {e}")))?
        }
        None => match &base {
            Some(b) => b.algebra.clone(),
            None => return Err(CliError::semantic("missing key `d`")),
        },
    };
    let n = algebra.dim();
    if let Some((line, value)) = kv.get("dim") {
        let dim: usize = value
            .parse()
            .map_err(|_| CliError::syntax(format!("line {line}: dim: expected an integer")))?;
        if dim != n {
            return Err(CliError::semantic(format!(
                "line {line}: dim = {dim} but d lists {n} generators"
            )));
        }
    }
    let structures_from_base = !kv.contains_key("d");
    let omega = match kv.get("omega") {
        Some((line, value)) => Some(
            parse_form_of_degree(value, n, 2)
                .map_err(|e| CliError::syntax(format!("line {line}: omega: {e}")))?,
        ),
        None => base
            .as_ref()
            .filter(|_| structures_from_base)
            .and_then(|b| b.default_omega.clone()),
    };
    let j = match kv.get("J") {
        Some((line, value)) => {
            let m = parse_matrix(value)
                .map_err(|e| CliError::syntax(format!("line {line}: J: {e}")))?;
            if m.rows() != n || m.cols() != n {
                return Err(CliError::semantic(format!(
                    "line {line}: J is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
            Some(m)
        }
        None => base
            .as_ref()
            .filter(|_| structures_from_base)
            .and_then(|b| b.default_j.clone()),
    };
    Ok(InputDocument {
        name: name.to_string(),
        algebra,
        omega,
        j,
    })
}

/// Resolves a command-line input: a catalog name or a file path.
pub fn load(spec: &str) -> Result<InputDocument, CliError> {
    let path = std::path::Path::new(spec);
    if !path.exists() {
        if let Ok(entry) = catalog::get(spec) {
            return Ok(InputDocument {
                name: entry.name.to_string(),
                algebra: entry.algebra,
                omega: entry.default_omega,
                j: entry.default_j,
            });
        }
    }
    let text = std::fs::read_to_string(path).map_err(|e| {
        CliError::semantic(format!("{spec}: not a catalog name and unreadable: {e}"))
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| spec.to_string());
    parse_document(&name, &text)
}

pub fn parse_map(text: &str) -> Result<RationalMatrix, CliError> {
    let mut rows_decl = None;
    let mut cols_decl = None;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once('=') {
            let v: usize = value
                .trim()
                .parse()
                .map_err(|_| CliError::syntax(format!("line {line_no}: expected an integer")))?;
            match key.trim() {
                "rows" => rows_decl = Some(v),
                "cols" => cols_decl = Some(v),
                other => {
                    return Err(CliError::syntax(format!(
                        "line {line_no}: unknown key `{other}`"
                    )))
                }
            }
            continue;
        }
        let row = line
            .split([' ', '\t', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                parse_rational(t).map_err(|e| CliError::syntax(format!("line {line_no}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((line_no, row));
    }
    let (Some(n), Some(m)) = (rows_decl, cols_decl) else {
        return Err(CliError::syntax("map file must declare `rows` and `cols`"));
    };
    if rows.len() != n {
        return Err(CliError::syntax(format!(
            "expected {n} matrix rows, found {}",
            rows.len()
        )));
    }
    for (line_no, row) in &rows {
        if row.len() != m {
            return Err(CliError::syntax(format!(
                "line {line_no}: expected {m} entries, found {}",
                row.len()
            )));
        }
    }
    Ok(
        RationalMatrix::from_rows(rows.into_iter().map(|(_, r)| r).collect(), m)
            .expect("row lengths checked"),
    )
}
