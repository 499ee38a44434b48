//! Exact rational matrices and subspaces.
//!
//! Every dimension reported by the crate bottoms out here. Elimination is
//! fraction-free (Bareiss) over `BigInt`; rationals only appear when a
//! canonical basis has to be materialized.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("containment violated: {0}")]
    NotASubspace(String),
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        Self::from_rows(rows, cols).expect("ragged integer rows")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Rational>], rows: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, j, x.clone());
                }
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    t.set(j, i, x.clone());
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn sub(&self, rhs: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Image (column space) of the matrix.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, self.transpose().row_vectors())
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Scales each rational row to a primitive integer row.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .filter(|x| !x.is_zero())
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        BigInt::zero()
                    } else {
                        x.numer() * (&lcm / x.denom())
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free forward elimination. Returns the echelon rows (only the
/// first `pivots.len()` are nonzero) and the pivot columns.
fn bareiss(mut m: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut x = &pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    x -= &factor * &pivot_row[j];
                }
                if !x.is_zero() && !prev.is_one() {
                    debug_assert!((&x % &prev).is_zero(), "Bareiss division must be exact");
                    x /= &prev;
                }
                row[j] = x;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Reduced row echelon form of the row space: leading entries equal one and
/// pivot columns are cleared above and below. The result is unique for a
/// given row space.
fn rref(rows: &[Vec<Rational>], cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let (mut m, pivots) = bareiss(integer_rows(rows), cols);
    m.truncate(pivots.len());
    // back-substitution, still fraction-free
    for i in (0..pivots.len()).rev() {
        let pc = pivots[i];
        let (above, rest) = m.split_at_mut(i);
        let prow = &rest[0];
        for row in above.iter_mut() {
            let a = std::mem::take(&mut row[pc]);
            if a.is_zero() {
                continue;
            }
            let p = &prow[pc];
            for j in 0..cols {
                if j == pc {
                    continue;
                }
                if !row[j].is_zero() {
                    row[j] *= p;
                }
                if !prow[j].is_zero() {
                    row[j] -= &a * &prow[j];
                }
            }
            // keep rows primitive
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
    }
    let out = m
        .into_iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let lead = row[pc].clone();
            row.into_iter()
                .map(|x| Rational::new(x, lead.clone()))
                .collect()
        })
        .collect();
    (out, pivots)
}

/// Rank over the rationals, by Bareiss elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let (_, pivots) = bareiss(integer_rows(&m.row_vectors()), m.cols);
    pivots.len()
}

/// Null space of `m` as a subspace of the column space dimension.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    let cols = m.cols;
    let (reduced, pivots) = rref(&m.row_vectors(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &pc) in reduced.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[pc] = -row[f].clone();
                }
            }
            v
        })
        .collect::<Vec<_>>();
    Subspace::span(cols, basis)
}

/// A linear subspace of `Q^ambient`, stored as its reduced row echelon basis.
///
/// The basis is canonical, so two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Rational::zero(); ambient];
                    v[i] = Rational::one();
                    v
                })
                .collect(),
        )
    }

    /// Span of arbitrary (possibly dependent) vectors.
    ///
    /// Panics if a vector's length differs from `ambient`.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rational>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "vector length differs from ambient dimension {ambient}"
        );
        let vectors: Vec<_> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        if vectors.is_empty() || ambient == 0 {
            return Self::zero(ambient);
        }
        let (basis, _) = rref(&vectors, ambient);
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        // reduce against the RREF basis
        let mut r = v.to_vec();
        for row in &self.basis {
            let pc = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero basis row");
            if r[pc].is_zero() {
                continue;
            }
            let a = r[pc].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &a * y;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    /// Whether `other` ⊆ `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if other.dim() == 0 {
            return Ok(self.clone());
        }
        if self.dim() == 0 {
            return Ok(other.clone());
        }
        let vectors = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Intersection via the kernel of `[A | -B]`: solutions `(a, b)` with
    /// `A a = B b` parametrize `A ∩ B`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let s = self.dim();
        let columns: Vec<Vec<Rational>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|v| v.iter().map(|x| -x).collect()))
            .collect();
        let stacked = RationalMatrix::from_columns(&columns, self.ambient)?;
        let ker = kernel(&stacked);
        let vectors = ker
            .basis
            .iter()
            .map(|coeffs| combine(&self.basis, &coeffs[..s], self.ambient))
            .collect();
        Ok(Subspace::span(self.ambient, vectors))
    }

    /// Image of the subspace under `f`.
    pub fn map(&self, f: &RationalMatrix) -> Result<Subspace, LinalgError> {
        if f.cols() != self.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                found: f.cols(),
            });
        }
        let vectors = self
            .basis
            .iter()
            .map(|v| f.apply(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::span(f.rows(), vectors))
    }
}

fn combine(basis: &[Vec<Rational>], coeffs: &[Rational], ambient: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ambient];
    for (c, v) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o += c * x;
            }
        }
    }
    out
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    a.intersect(b)
}

pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace, LinalgError> {
    a.sum(b)
}

/// `dim V - dim W`, after checking that `W ⊆ V`.
pub fn quotient_dim(v: &Subspace, w: &Subspace) -> Result<usize, LinalgError> {
    if !v.contains(w)? {
        return Err(LinalgError::NotASubspace(format!(
            "quotient denominator (dim {}) is not contained in numerator (dim {})",
            w.dim(),
            v.dim()
        )));
    }
    Ok(v.dim() - w.dim())
}

/// Rank and injectivity of a map induced on subquotients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InducedRank {
    pub rank: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub injective: bool,
    pub surjective: bool,
}

impl InducedRank {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Rank of the map `V1/W1 -> V2/W2` induced by `f`.
///
/// Both `f(V1) ⊆ V2` and `f(W1) ⊆ W2` are checked.
pub fn induced_map_rank(
    f: &RationalMatrix,
    v1: &Subspace,
    w1: &Subspace,
    v2: &Subspace,
    w2: &Subspace,
) -> Result<InducedRank, LinalgError> {
    let domain_dim = quotient_dim(v1, w1)?;
    let codomain_dim = quotient_dim(v2, w2)?;
    let fv1 = v1.map(f)?;
    if !v2.contains(&fv1)? {
        return Err(LinalgError::NotASubspace(
            "f(V1) is not contained in V2".into(),
        ));
    }
    let fw1 = w1.map(f)?;
    if !w2.contains(&fw1)? {
        return Err(LinalgError::NotASubspace(
            "f(W1) is not contained in W2".into(),
        ));
    }
    let rank = fv1.sum(w2)?.dim() - w2.dim();
    Ok(InducedRank {
        rank,
        domain_dim,
        codomain_dim,
        injective: rank == domain_dim,
        surjective: rank == codomain_dim,
    })
}

/// Determinant by fraction-free elimination. Panics on non-square input.
pub fn determinant(m: &RationalMatrix) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let mut a: Vec<Vec<Rational>> = m.row_vectors();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        let (head, tail) = a.split_at_mut(c + 1);
        let prow = &head[c];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot;
            for j in c..n {
                if !prow[j].is_zero() {
                    row[j] -= &factor * &prow[j];
                }
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &RationalMatrix) -> Option<RationalMatrix> {
    assert_eq!(m.rows, m.cols, "inverse of a non-square matrix");
    let n = m.rows;
    // RREF of [M | I]
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let (red, pivots) = rref(&rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let inv = red.into_iter().map(|r| r[n..].to_vec()).collect();
    Some(RationalMatrix::from_rows(inv, n).expect("square"))
}

/// Whether a symmetric matrix is positive definite (leading principal minors).
pub fn is_positive_definite(m: &RationalMatrix) -> bool {
    let n = m.rows;
    (1..=n).all(|k| {
        let mut minor = RationalMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                minor.set(i, j, m.get(i, j).clone());
            }
        }
        determinant(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn vecq(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rank_trivial_cases() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::zeros(2, 4)), 0);
        assert_eq!(rank(&RationalMatrix::zeros(0, 4)), 0);
    }

    #[test]
    fn rank_with_fractions() {
        let mut m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(rank(&m), 1);
        m.set(1, 1, Rational::new(9.into(), 2.into()));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn kernel_trivial_cases() {
        assert_eq!(kernel(&RationalMatrix::zeros(4, 4)).dim(), 4);
        assert_eq!(kernel(&RationalMatrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_basis_is_normalized() {
        let m = RationalMatrix::from_i64_rows(&[&[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            let lead = v.iter().find(|x| !x.is_zero()).unwrap();
            assert_eq!(lead, &q(1));
            assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn intersect_and_sum_of_lines() {
        let x = Subspace::span(3, vec![vecq(&[1, 0, 0])]);
        let y = Subspace::span(3, vec![vecq(&[0, 1, 0])]);
        assert_eq!(x.intersect(&x).unwrap().dim(), 1);
        assert_eq!(x.intersect(&y).unwrap().dim(), 0);
        assert_eq!(x.sum(&y).unwrap().dim(), 2);
        assert_eq!(x.sum(&Subspace::zero(3)).unwrap(), x);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(
            a.intersect(&b),
            Err(LinalgError::DimensionMismatch { .. })
        ));
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn quotient_requires_containment() {
        let x = Subspace::span(2, vec![vecq(&[1, 0])]);
        let y = Subspace::span(2, vec![vecq(&[0, 1])]);
        assert_eq!(quotient_dim(&Subspace::full(2), &x).unwrap(), 1);
        assert!(matches!(
            quotient_dim(&x, &y),
            Err(LinalgError::NotASubspace(_))
        ));
    }

    #[test]
    fn induced_identity_and_zero() {
        let v = Subspace::full(3);
        let w = Subspace::span(3, vec![vecq(&[1, 1, 0])]);
        let id = RationalMatrix::identity(3);
        let r = induced_map_rank(&id, &v, &w, &v, &w).unwrap();
        assert_eq!(r.rank, 2);
        assert!(r.bijective());
        let zero = RationalMatrix::zeros(3, 3);
        let r = induced_map_rank(&zero, &v, &w, &v, &w).unwrap();
        assert_eq!(r.rank, 0);
        assert!(!r.injective);
    }

    #[test]
    fn induced_checks_containment() {
        let v = Subspace::span(2, vec![vecq(&[1, 0])]);
        let zero = Subspace::zero(2);
        let swap = RationalMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert!(induced_map_rank(&swap, &v, &zero, &v, &zero).is_err());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RationalMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(determinant(&m), q(1));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, RationalMatrix::from_i64_rows(&[&[0, -1], &[1, 0]]));
        assert!(inverse(&RationalMatrix::zeros(2, 2)).is_none());
    }

    #[test]
    fn sylvester_criterion() {
        assert!(is_positive_definite(&RationalMatrix::identity(4)));
        let m = RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 1]]);
        assert!(!is_positive_definite(&m));
    }
}
