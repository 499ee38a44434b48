//! Built-in Lie algebras with their default symplectic and almost-complex
//! structures, plus the complex-to-real expansion of complex structure
//! equations.

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::acx::standard_j;
use crate::cec::LieAlgebra;
use crate::forms::{Blade, DegreeBasis, KForm};
use crate::linalg::{self, RationalMatrix};
use crate::parser::{parse_form, parse_salamon};
use crate::symplectic::form_matrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("complex equation {equation}: {message}")]
    Complex { equation: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub default_omega: Option<KForm>,
    pub default_j: Option<RationalMatrix>,
    /// `Σ e^{2j-1,2j}`, the fundamental form of the standard metric for `J`.
    /// Equals `default_omega` when that one is closed.
    pub fundamental_form: Option<KForm>,
    pub nilpotent: bool,
    /// Known Hard Lefschetz verdict for every invariant symplectic form.
    pub expects_hlc: Option<bool>,
    pub notes: &'static str,
}

pub const NAMES: [&str; 7] = [
    "kodaira",
    "g1_g34m",
    "g41",
    "torus4",
    "hyperelliptic",
    "torus8",
    "etabeta5",
];

/// Structure equations of ηβ₅: `dφ⁵ = -φ¹φ² - φ³φ⁴`.
pub const ETABETA5_COMPLEX: &str = "(0,0,0,0,-12-34)";

fn entry(
    name: &'static str,
    eqs: &str,
    omega: Option<&str>,
    with_j: bool,
    expects_hlc: Option<bool>,
    notes: &'static str,
) -> CatalogEntry {
    let algebra = parse_salamon(eqs).expect("catalog equations parse");
    let n = algebra.dim();
    let default_omega = omega.map(|w| parse_form(w, n).expect("catalog form parses"));
    CatalogEntry {
        name,
        nilpotent: algebra.is_nilpotent(),
        default_j: with_j.then(|| standard_j(n)),
        fundamental_form: with_j.then(|| standard_fundamental_form(n)),
        algebra,
        default_omega,
        expects_hlc,
        notes,
    }
}

/// `Σ_j e^{2j-1} ∧ e^{2j}` on `Q^n`.
pub fn standard_fundamental_form(n: usize) -> KForm {
    let mut f = KForm::zero(n, 2);
    for j in 0..n / 2 {
        f.add_term(Blade::from_bits(0b11 << (2 * j)), Rational::one());
    }
    f
}

/// J for `ω = e14 + e23`: `J e1 = e4`, `J e4 = -e1`, `J e2 = e3`, `J e3 = -e2`.
fn g41_j() -> RationalMatrix {
    RationalMatrix::from_i64_rows(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]])
}

pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    let e = match name {
        "kodaira" => entry(
            "kodaira",
            "(0,0,0,23)",
            Some("12+34"),
            true,
            Some(false),
            "Kodaira-Thurston nilmanifold, g31 + g1",
        ),
        "g1_g34m" => entry(
            "g1_g34m",
            "(0,0,-23,24)",
            Some("12+34"),
            true,
            Some(true),
            "completely solvable g1 + g3.4^-1",
        ),
        "g41" => {
            let mut e = entry(
                "g41",
                "(0,0,12,13)",
                Some("14+23"),
                false,
                Some(false),
                "filiform nilmanifold g4.1",
            );
            e.default_j = Some(g41_j());
            e.fundamental_form = e.default_omega.clone();
            e
        }
        "torus4" => entry(
            "torus4",
            "(0,0,0,0)",
            Some("12+34"),
            true,
            Some(true),
            "abelian 4-torus",
        ),
        "hyperelliptic" => entry(
            "hyperelliptic",
            "(0,0,-24,23)",
            Some("12+34"),
            true,
            Some(true),
            "hyperelliptic surface, g1 + g3.5^0",
        ),
        "torus8" => entry(
            "torus8",
            "(0,0,0,0,0,0,0,0)",
            Some("12+34+56+78"),
            true,
            Some(true),
            "complex 4-torus with standard J",
        ),
        "etabeta5" => {
            let algebra = complex_to_real(ETABETA5_COMPLEX).expect("catalog equations");
            let n = algebra.dim();
            CatalogEntry {
                name: "etabeta5",
                nilpotent: algebra.is_nilpotent(),
                algebra,
                default_omega: None,
                default_j: Some(standard_j(n)),
                fundamental_form: Some(standard_fundamental_form(n)),
                expects_hlc: None,
                notes: "holomorphically parallelizable nilmanifold; no invariant symplectic form",
            }
        }
        other => return Err(CatalogError::UnknownName(other.to_string())),
    };
    Ok(e)
}

pub fn entries() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| get(n).expect("listed")).collect()
}

/// `(re, im)` pair of rationals.
type Gaussian = (Rational, Rational);

fn parse_gaussian(text: &str, equation: usize) -> Result<Gaussian, CatalogError> {
    let err = |message: String| CatalogError::Complex { equation, message };
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    let mut rest = t;
    while !rest.is_empty() {
        let start = if rest.starts_with(['+', '-']) { 1 } else { 0 };
        let end = rest[start..]
            .find(['+', '-'])
            .map(|i| i + start)
            .unwrap_or(rest.len());
        let (part, tail) = rest.split_at(end);
        rest = tail;
        let (sign, body) = match part.strip_prefix('-') {
            Some(b) => (-Rational::one(), b),
            None => (Rational::one(), part.strip_prefix('+').unwrap_or(part)),
        };
        let (body, imaginary) = match body.strip_suffix('i') {
            Some(b) => (b.trim_end_matches('*'), true),
            None => (body, false),
        };
        let value = if body.is_empty() {
            Rational::one()
        } else {
            crate::parser::parse_rational(body).map_err(|e| err(e.to_string()))?
        };
        if imaginary {
            im += sign * value;
        } else {
            re += sign * value;
        }
    }
    Ok((re, im))
}

/// Expands complex structure equations in `φ^j = e^{2j-1} + i e^{2j}` into
/// real ones. Input is a Salamon-style tuple of `(2,0)`-forms such as
/// `(0,0,-12+i*34)`; coefficients are Gaussian rationals written `2`, `i`,
/// `(1/2-3i)`. A conjugate `φ̄^j` is written `j'` and is rejected.
pub fn complex_to_real(text: &str) -> Result<LieAlgebra, CatalogError> {
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| CatalogError::Complex {
            equation: 0,
            message: "expected a parenthesised tuple".into(),
        })?;
    let equations: Vec<&str> = split_top_level(inner);
    let m = equations.len();
    let mut real = Vec::with_capacity(2 * m);
    for (idx, eq) in equations.iter().enumerate() {
        let equation = idx + 1;
        let (re, im) = expand_complex(eq, m, equation)?;
        real.push(re);
        real.push(im);
    }
    LieAlgebra::new(real).map_err(|e| CatalogError::Complex {
        equation: 0,
        message: e.to_string(),
    })
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Splits a complex equation into its real and imaginary 2-forms.
fn expand_complex(eq: &str, m: usize, equation: usize) -> Result<(KForm, KForm), CatalogError> {
    let err = |message: String| CatalogError::Complex { equation, message };
    let n = 2 * m;
    let mut re = KForm::zero(n, 2);
    let mut im = KForm::zero(n, 2);
    let eq: String = eq.chars().filter(|c| !c.is_whitespace()).collect();
    if eq == "0" {
        return Ok((re, im));
    }
    // split into signed terms outside parentheses
    let mut terms = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in eq.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                terms.push(&eq[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    terms.push(&eq[start..]);
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-Rational::one(), b),
            None => (Rational::one(), term.strip_prefix('+').unwrap_or(term)),
        };
        let (coeff, factors) = match body.rfind('*') {
            Some(i) => (parse_gaussian(&body[..i], equation)?, &body[i + 1..]),
            None => ((Rational::one(), Rational::zero()), body),
        };
        if factors.contains('\'') {
            return Err(err(format!(
                "term `{term}` contains a conjugate; only (2,0) terms are supported"
            )));
        }
        let labels: Vec<usize> = factors
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| err(format!("malformed term `{term}`")))?;
        let [a, b] = labels[..] else {
            return Err(err(format!(
                "term `{term}` is not a product of two generators"
            )));
        };
        if a == 0 || b == 0 || a > m || b > m {
            return Err(err(format!("generator out of range in `{term}`")));
        }
        if a == b {
            continue;
        }
        let (x, y) = (sign.clone() * coeff.0, sign * coeff.1);
        // φ^a φ^b = R + iI
        let r = &KForm::monomial(n, &[2 * a - 1, 2 * b - 1]) - &KForm::monomial(n, &[2 * a, 2 * b]);
        let i = &KForm::monomial(n, &[2 * a - 1, 2 * b]) + &KForm::monomial(n, &[2 * a, 2 * b - 1]);
        re = &re + &(&r.scale(&x) - &i.scale(&y));
        im = &im + &(&i.scale(&x) + &r.scale(&y));
    }
    Ok((re, im))
}

/// Basis of the closed invariant 2-forms.
pub fn closed_two_forms(g: &LieAlgebra) -> Vec<KForm> {
    let n = g.dim();
    let basis = DegreeBasis::new(n, 2);
    linalg::kernel(&g.d_matrix(2))
        .basis()
        .iter()
        .map(|v| KForm::from_vector(n, 2, &basis, v))
        .collect()
}

pub fn is_nondegenerate(omega: &KForm) -> bool {
    omega.dim().is_multiple_of(2) && !linalg::determinant(&form_matrix(omega)).is_zero()
}

/// Draws random rational combinations of closed 2-forms until one is
/// nondegenerate. Coefficients are `a/b` with `|a| ≤ 9`, `1 ≤ b ≤ 5`.
pub fn sample_symplectic<R: Rng + ?Sized>(
    g: &LieAlgebra,
    rng: &mut R,
    attempts: usize,
) -> Option<KForm> {
    let closed = closed_two_forms(g);
    if closed.is_empty() {
        return None;
    }
    let n = g.dim();
    for _ in 0..attempts {
        let mut omega = KForm::zero(n, 2);
        for f in &closed {
            let c = Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=5).into());
            omega = &omega + &f.scale(&c);
        }
        if is_nondegenerate(&omega) {
            return Some(omega);
        }
    }
    None
}
