//! Deterministic text rendering of reports.

use crate::acx::{PureFull, PureTypeGroup};
use crate::catalog::CatalogEntry;
use crate::morphism::InjectivityReport;
use crate::symplectic::CohomologyReport;

use super::Format;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Aligned columns separated by two spaces, or tab-separated records.
/// Numeric columns are right-aligned, the rest left-aligned.
fn table(header: &[&str], rows: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str(&header.join("\t"));
            out.push('\n');
            for r in rows {
                out.push_str(&r.join("\t"));
                out.push('\n');
            }
        }
        Format::Table => {
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain(std::iter::once(header[c].len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let numeric: Vec<bool> = (0..header.len())
                .map(|c| rows.iter().all(|r| r[c].parse::<i64>().is_ok()))
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .zip(&numeric)
                    .map(|((c, w), &num)| {
                        if num {
                            format!("{c:>w$}")
                        } else {
                            format!("{c:<w$}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            out.push_str(&line(header.to_vec()));
            out.push('\n');
            for r in rows {
                out.push_str(&line(r.iter().map(String::as_str).collect()));
                out.push('\n');
            }
        }
    }
    out
}

/// Footer lines; TSV marks them as comments.
fn footer(lines: &[String], format: Format) -> String {
    lines
        .iter()
        .map(|l| match format {
            Format::Tsv => format!("# {l}\n"),
            Format::Table => format!("{l}\n"),
        })
        .collect()
}

pub fn report(r: &CohomologyReport, format: Format) -> String {
    let rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| {
            vec![
                row.k.to_string(),
                row.b.to_string(),
                row.h_dlambda.to_string(),
                row.h_bc.to_string(),
                row.h_a.to_string(),
                row.delta_tilde.to_string(),
            ]
        })
        .collect();
    let mut out = table(
        &["k", "b", "h_dLambda", "h_BC", "h_A", "delta_tilde"],
        &rows,
        format,
    );
    let mut notes = vec![
        format!("HLC: {}", yes_no(r.hlc)),
        format!("ddLambda-lemma: {}", yes_no(r.ddlambda_lemma)),
        "scope: invariant forms".to_string(),
    ];
    if !r.nilpotent {
        notes.push("non-nilpotent: values are invariant-level only".to_string());
    }
    out.push_str(&footer(&notes, format));
    out
}

pub fn jdecomp(groups: &[PureTypeGroup], b2: usize, verdict: PureFull, format: Format) -> String {
    let rows: Vec<Vec<String>> = groups
        .iter()
        .map(|g| vec![g.p.to_string(), g.q.to_string(), g.dim.to_string()])
        .collect();
    let mut out = table(&["p", "q", "dim"], &rows, format);
    let mut notes = vec![
        format!("b2: {b2}"),
        format!("C-infinity pure: {}", yes_no(verdict.pure)),
        format!("C-infinity full: {}", yes_no(verdict.full)),
    ];
    for g in groups {
        if let Some(reps) = &g.representatives {
            for r in reps {
                notes.push(format!("representative ({},{}): {r}", g.p, g.q));
            }
        }
    }
    out.push_str(&footer(&notes, format));
    out
}

pub fn injectivity(r: &InjectivityReport, format: Format) -> String {
    match format {
        Format::Table => format!("{r}\n"),
        Format::Tsv => table(
            &[
                "theory",
                "k",
                "rank",
                "domain_dim",
                "codomain_dim",
                "injective",
            ],
            &[vec![
                r.theory.to_string(),
                r.degree.to_string(),
                r.rank().to_string(),
                r.domain_dim().to_string(),
                r.codomain_dim().to_string(),
                yes_no(r.injective()).to_string(),
            ]],
            format,
        ),
    }
}

pub fn catalog(entries: &[CatalogEntry], format: Format) -> String {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.name.to_string(),
                e.algebra.dim().to_string(),
                crate::parser::render_salamon(&e.algebra),
                e.default_omega
                    .as_ref()
                    .map_or_else(|| "-".to_string(), |w| w.to_string()),
                yes_no(e.default_j.is_some()).to_string(),
            ]
        })
        .collect();
    table(&["name", "dim", "d", "omega", "J"], &rows, format)
}
