//! Text grammars for structure equations, forms, rationals and matrices.
//!
//! ```text
//! salamon  := '(' entry (',' entry)* ')'
//! entry    := '0' | term (('+' | '-') term)*
//! term     := ['-'] [rational '*'] indices
//! indices  := digit+                       (only when n <= 9)
//!           | '[' label ('.' label)* ']'
//! rational := integer ['/' integer]
//! ```
//!
//! Whitespace is ignored everywhere. Decimals are rejected.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cec::LieAlgebra;
use crate::forms::{Blade, KForm, MAX_GENERATORS};
use crate::linalg::RationalMatrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    RepeatedIndex(String),
    IndexOutOfRange { label: usize, dim: usize },
    MalformedRational(String),
    MixedDegree { expected: usize, found: usize },
    WrongDegree { expected: usize, found: usize },
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "{m}"),
            ParseErrorKind::RepeatedIndex(t) => write!(f, "repeated index in term {t:?}"),
            ParseErrorKind::IndexOutOfRange { label, dim } => {
                write!(f, "index {label} out of range 1..={dim}")
            }
            ParseErrorKind::MalformedRational(t) => write!(f, "malformed rational {t:?}"),
            ParseErrorKind::MixedDegree { expected, found } => {
                write!(f, "mixed degrees in expression ({expected} and {found})")
            }
            ParseErrorKind::WrongDegree { expected, found } => {
                write!(f, "expected a {expected}-form, found degree {found}")
            }
            ParseErrorKind::DimensionMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
        }
    }
}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(0, |&(o, c)| o + c.len_utf8()),
            |&(o, _)| o,
        )
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::Syntax(match self.peek() {
                Some(found) => format!("expected {c:?}, found {found:?}"),
                None => format!("expected {c:?}, found end of input"),
            })))
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            offset: self.offset(),
            kind,
        }
    }
}

/// Parses one signed term and returns its coefficient, the blade and the
/// raw 1-based labels (before sorting).
fn term(cur: &mut Cursor, n: usize, negate: bool) -> Result<(Rational, Blade), ParseError> {
    let start = cur.offset();
    let mut coeff = Rational::one();
    let labels: Vec<usize>;
    if cur.peek() == Some('[') {
        labels = bracket_labels(cur)?;
    } else {
        let run = cur.digits();
        if run.is_empty() {
            return Err(cur.error(ParseErrorKind::Syntax(match cur.peek() {
                Some(c) => format!("expected a term, found {c:?}"),
                None => "expected a term, found end of input".into(),
            })));
        }
        match cur.peek() {
            Some('.') => {
                return Err(ParseError {
                    offset: start,
                    kind: ParseErrorKind::MalformedRational(format!(
                        "{run}. (decimals are not accepted)"
                    )),
                })
            }
            Some('/') | Some('*') => {
                let mut text = run.clone();
                let mut value = Rational::from_integer(run.parse::<BigInt>().expect("digits"));
                if cur.eat('/') {
                    let den = cur.digits();
                    text.push('/');
                    text.push_str(&den);
                    if den.is_empty() || den.chars().all(|c| c == '0') || cur.peek() == Some('.') {
                        return Err(ParseError {
                            offset: start,
                            kind: ParseErrorKind::MalformedRational(text),
                        });
                    }
                    value /= Rational::from_integer(den.parse::<BigInt>().expect("digits"));
                }
                cur.expect('*')?;
                coeff = value;
                labels = if cur.peek() == Some('[') {
                    bracket_labels(cur)?
                } else {
                    let run = cur.digits();
                    if run.is_empty() {
                        return Err(
                            cur.error(ParseErrorKind::Syntax("expected indices after '*'".into()))
                        );
                    }
                    digit_labels(&run, n, start)?
                };
            }
            _ => labels = digit_labels(&run, n, start)?,
        }
    }
    for &l in &labels {
        if l == 0 || l > n {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::IndexOutOfRange { label: l, dim: n },
            });
        }
    }
    let positions: Vec<usize> = labels.iter().map(|l| l - 1).collect();
    let Some((sign, blade)) = Blade::from_positions(&positions) else {
        let text = labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(".");
        return Err(ParseError {
            offset: start,
            kind: ParseErrorKind::RepeatedIndex(text),
        });
    };
    if sign < 0 {
        coeff = -coeff;
    }
    if negate {
        coeff = -coeff;
    }
    Ok((coeff, blade))
}

fn digit_labels(run: &str, n: usize, offset: usize) -> Result<Vec<usize>, ParseError> {
    if n > 9 {
        return Err(ParseError {
            offset,
            kind: ParseErrorKind::Syntax(format!(
                "digit-run indices {run:?} are ambiguous for dimension {n}; use [i.j] syntax"
            )),
        });
    }
    Ok(run
        .chars()
        .map(|c| c.to_digit(10).expect("digit") as usize)
        .collect())
}

fn bracket_labels(cur: &mut Cursor) -> Result<Vec<usize>, ParseError> {
    cur.expect('[')?;
    let mut labels = Vec::new();
    loop {
        let run = cur.digits();
        if run.is_empty() {
            return Err(cur.error(ParseErrorKind::Syntax("expected an index label".into())));
        }
        let label = run.parse::<usize>().map_err(|_| {
            cur.error(ParseErrorKind::Syntax(format!(
                "index label {run:?} too large"
            )))
        })?;
        labels.push(label);
        if cur.eat(']') {
            return Ok(labels);
        }
        cur.expect('.')?;
    }
}

/// Parses a signed sum of terms up to (not including) `,`, `)` or the end.
fn sum(cur: &mut Cursor, n: usize) -> Result<Vec<(usize, Rational, Blade)>, ParseError> {
    let mut terms = Vec::new();
    let mut negate = cur.eat('-');
    if !negate {
        cur.eat('+');
    }
    loop {
        let offset = cur.offset();
        let (c, b) = term(cur, n, negate)?;
        terms.push((offset, c, b));
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else {
            return Ok(terms);
        }
    }
}

fn collect(
    terms: Vec<(usize, Rational, Blade)>,
    n: usize,
    degree: Option<usize>,
) -> Result<KForm, ParseError> {
    let k = match degree {
        Some(k) => k,
        None => terms.first().map_or(0, |t| t.2.degree()),
    };
    let mut form = KForm::zero(n, k);
    for (offset, c, b) in terms {
        if b.degree() != k {
            let kind = if degree.is_some() {
                ParseErrorKind::WrongDegree {
                    expected: k,
                    found: b.degree(),
                }
            } else {
                ParseErrorKind::MixedDegree {
                    expected: k,
                    found: b.degree(),
                }
            };
            return Err(ParseError { offset, kind });
        }
        form.add_term(b, c);
    }
    Ok(form)
}

/// Splits the entries of a Salamon tuple at top-level commas.
fn salamon_entries(text: &str) -> Result<Vec<(usize, &str)>, ParseError> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or(ParseError {
            offset: lead,
            kind: ParseErrorKind::Syntax(
                "structure equations must be enclosed in '(' ... ')'".into(),
            ),
        })?;
    let mut entries = Vec::new();
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        if c == ',' {
            entries.push((lead + 1 + start, &inner[start..i]));
            start = i + 1;
        }
    }
    entries.push((lead + 1 + start, &inner[start..]));
    Ok(entries)
}

fn shift(mut e: ParseError, by: usize) -> ParseError {
    e.offset += by;
    e
}

/// Parses Salamon notation such as `(0,0,-23,24)` into a Lie algebra.
///
/// The dimension is the number of entries. The result is not checked for
/// the Jacobi identity; see [`LieAlgebra::validate`].
pub fn parse_salamon(text: &str) -> Result<LieAlgebra, ParseError> {
    let entries = salamon_entries(text)?;
    let n = entries.len();
    if n > MAX_GENERATORS {
        return Err(ParseError {
            offset: 0,
            kind: ParseErrorKind::Syntax(format!("at most {MAX_GENERATORS} generators")),
        });
    }
    let mut differentials = Vec::with_capacity(n);
    for (offset, entry) in entries {
        if entry.trim() == "0" {
            differentials.push(KForm::zero(n, 2));
            continue;
        }
        let mut cur = Cursor::new(entry);
        let terms = sum(&mut cur, n).map_err(|e| shift(e, offset))?;
        if !cur.at_end() {
            let e = cur.error(ParseErrorKind::Syntax(format!(
                "unexpected {:?}",
                cur.peek().unwrap_or(' ')
            )));
            return Err(shift(e, offset));
        }
        differentials.push(collect(terms, n, Some(2)).map_err(|e| shift(e, offset))?);
    }
    Ok(LieAlgebra::new(differentials).expect("parsed differentials are 2-forms on Q^n"))
}

/// Canonical Salamon rendering: ascending index pairs, explicit signs.
pub fn render_salamon(g: &LieAlgebra) -> String {
    let entries: Vec<String> = g.differentials().iter().map(|f| f.to_string()).collect();
    format!("({})", entries.join(","))
}

/// Parses a homogeneous form expression such as `2*12-3*14` on `Q^n`.
///
/// A bare `0` has no degree and is rejected; use [`parse_form_of_degree`].
pub fn parse_form(text: &str, n: usize) -> Result<KForm, ParseError> {
    let mut cur = Cursor::new(text);
    let terms = sum(&mut cur, n)?;
    if !cur.at_end() {
        return Err(cur.error(ParseErrorKind::Syntax(format!(
            "unexpected {:?}",
            cur.peek().unwrap_or(' ')
        ))));
    }
    collect(terms, n, None)
}

/// Like [`parse_form`], but requires degree `k` and accepts `0`.
pub fn parse_form_of_degree(text: &str, n: usize, k: usize) -> Result<KForm, ParseError> {
    if text.trim() == "0" {
        return Ok(KForm::zero(n, k));
    }
    let f = parse_form(text, n)?;
    if f.degree() != k {
        return Err(ParseError {
            offset: 0,
            kind: ParseErrorKind::WrongDegree {
                expected: k,
                found: f.degree(),
            },
        });
    }
    Ok(f)
}

/// Parses `p`, `-p`, `p/q`. Decimals are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let t = text.trim();
    let bad = || ParseError {
        offset: 0,
        kind: ParseErrorKind::MalformedRational(t.to_string()),
    };
    let (sign, body) = match t.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, t.strip_prefix('+').unwrap_or(t)),
    };
    let (num, den) = match body.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (body, None),
    };
    let is_int = |s: &str| !s.is_empty() && s.chars().all(|c| c.is_ascii_digit());
    if !is_int(num) || den.is_some_and(|d| !is_int(d)) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num * sign, den))
}

/// Parses a bracketed row-major matrix: `[[0,-1],[1,0]]`.
pub fn parse_matrix(text: &str) -> Result<RationalMatrix, ParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let syntax = |m: &str| ParseError {
        offset: 0,
        kind: ParseErrorKind::Syntax(m.to_string()),
    };
    let inner = compact
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| syntax("matrix must be enclosed in '[' ... ']'"))?;
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| syntax("expected '[' starting a matrix row"))?;
        let end = body
            .find(']')
            .ok_or_else(|| syntax("unterminated matrix row"))?;
        let row = body[..end]
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        rest = &body[end + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    let cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(ParseError {
            offset: 0,
            kind: ParseErrorKind::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            },
        });
    }
    Ok(RationalMatrix::from_rows(rows, cols).expect("rows checked"))
}
