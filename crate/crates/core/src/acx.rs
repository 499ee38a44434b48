//! Almost-complex structures: pure-type real subspaces, the groups
//! `H_J^{(p,q),(q,p)}`, C∞-pure/full verdicts and compatibility with `ω`.
//!
//! `J` acts on vectors by its matrix (`J e_k = Σ_i J[i][k] e_i`) and on forms
//! by `Jα(v1,…) = α(Jv1,…)`. For the bigrading we use the derivation `𝒥`
//! extending `J` from 1-forms: it acts as `i(p - q)` on `(p,q)`-forms, so the
//! real `(p,q)+(q,p)` forms of degree `k` are exactly `ker(𝒥² + (p-q)²)`
//! on `Λ^k`, with no complex scalars involved.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cec::{operator_matrix, AlgebraError, LieAlgebra};
use crate::forms::{self, DegreeBasis, KForm};
use crate::linalg::{self, LinalgError, RationalMatrix, Subspace};
use crate::symplectic::{form_matrix, SymplecticStructure};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AcxError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("J must be a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
    #[error("odd dimension {0} admits no almost-complex structure")]
    OddDimension(usize),
    #[error("J^2 != -1: column {column} of J^2 is wrong")]
    NotComplex { column: usize },
    #[error("bidegree ({p},{q}) exceeds complex dimension {half}")]
    Bidegree { p: usize, q: usize, half: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(#[from] LinalgError),
}

/// A Lie algebra with a constant `J`, `J² = -1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostComplexStructure {
    algebra: LieAlgebra,
    j: RationalMatrix,
}

/// Checks that `j` squares to `-1` on `Q^n`, `n` even.
pub fn validate_acs(n: usize, j: &RationalMatrix) -> Result<(), AcxError> {
    if j.rows() != n || j.cols() != n {
        return Err(AcxError::Shape {
            expected: n,
            rows: j.rows(),
            cols: j.cols(),
        });
    }
    if n % 2 == 1 {
        return Err(AcxError::OddDimension(n));
    }
    let square = j.mul(j)?;
    for c in 0..n {
        for r in 0..n {
            let want = if r == c {
                -Rational::one()
            } else {
                Rational::zero()
            };
            if *square.get(r, c) != want {
                return Err(AcxError::NotComplex { column: c + 1 });
            }
        }
    }
    Ok(())
}

/// The standard structure `J e_{2j-1} = e_{2j}`, `J e_{2j} = -e_{2j-1}`.
pub fn standard_j(n: usize) -> RationalMatrix {
    let mut j = RationalMatrix::zeros(n, n);
    for b in 0..n / 2 {
        j.set(2 * b + 1, 2 * b, Rational::one());
        j.set(2 * b, 2 * b + 1, -Rational::one());
    }
    j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compatibility {
    Compatible,
    TamedOnly,
    Neither,
}

impl Compatibility {
    pub fn as_str(self) -> &'static str {
        match self {
            Compatibility::Compatible => "compatible",
            Compatibility::TamedOnly => "tamed only",
            Compatibility::Neither => "neither",
        }
    }
}

/// Pointwise relation between a 2-form and `J`: `ω(J·,J·) = ω` plus
/// positivity of `ω(·, J·)`, or only positivity of its symmetric part.
pub fn form_compatibility(omega: &KForm, j: &RationalMatrix) -> Result<Compatibility, AcxError> {
    let n = omega.dim();
    validate_acs(n, j)?;
    let w = form_matrix(omega);
    let invariant = j.transpose().mul(&w)?.mul(j)? == w;
    let g = w.mul(j)?;
    let half = Rational::new(1.into(), 2.into());
    let mut sym = RationalMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            sym.set(r, c, (g.get(r, c) + g.get(c, r)) * &half);
        }
    }
    let tamed = linalg::is_positive_definite(&sym);
    Ok(match (invariant, tamed) {
        (true, true) => Compatibility::Compatible,
        (false, true) => Compatibility::TamedOnly,
        _ => Compatibility::Neither,
    })
}

pub fn compatibility(
    s: &SymplecticStructure,
    a: &AlmostComplexStructure,
) -> Result<Compatibility, AcxError> {
    if s.dim() != a.dim() {
        return Err(AcxError::Shape {
            expected: s.dim(),
            rows: a.dim(),
            cols: a.dim(),
        });
    }
    form_compatibility(s.omega(), &a.j)
}

/// Dimension of `H_J^{(p,q),(q,p)}` with optional representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureTypeGroup {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    /// Closed pure-type forms whose classes form a basis.
    pub representatives: Option<Vec<KForm>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PureFull {
    pub pure: bool,
    pub full: bool,
}

impl AlmostComplexStructure {
    pub fn new(algebra: LieAlgebra, j: RationalMatrix) -> Result<Self, AcxError> {
        algebra.validate()?;
        validate_acs(algebra.dim(), &j)?;
        Ok(AlmostComplexStructure { algebra, j })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn j(&self) -> &RationalMatrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Complex dimension.
    pub fn half_dim(&self) -> usize {
        self.dim() / 2
    }

    /// Matrix of the derivation `𝒥` on `Λ^k`.
    pub fn derivation_matrix(&self, k: usize) -> RationalMatrix {
        operator_matrix(self.dim(), k, k, |f| {
            forms::derivation_action(&self.j, f).expect("square J")
        })
    }

    /// Matrix of the pullback action `α ↦ Jα` on `Λ^k`.
    pub fn action_matrix(&self, k: usize) -> RationalMatrix {
        operator_matrix(self.dim(), k, k, |f| {
            forms::j_action(&self.j, f).expect("square J")
        })
    }

    /// Real forms of type `(p,q)+(q,p)` inside `Λ^{p+q}`.
    pub fn pure_type_subspace(&self, p: usize, q: usize) -> Result<Subspace, AcxError> {
        let half = self.half_dim();
        if p > half || q > half {
            return Err(AcxError::Bidegree { p, q, half });
        }
        let k = p + q;
        let der = self.derivation_matrix(k);
        let mut m = der.mul(&der)?;
        let shift = Rational::from_integer(((p as i64 - q as i64).pow(2)).into());
        for i in 0..m.rows() {
            let x = m.get(i, i) + &shift;
            m.set(i, i, x);
        }
        Ok(linalg::kernel(&m))
    }

    fn closed_and_exact(&self, k: usize) -> (Subspace, Subspace) {
        let closed = linalg::kernel(&self.algebra.d_matrix(k));
        let exact = if k > 0 {
            self.algebra.d_matrix(k - 1).image()
        } else {
            Subspace::zero(closed.ambient_dim())
        };
        (closed, exact)
    }

    pub fn h_j(&self, p: usize, q: usize) -> Result<PureTypeGroup, AcxError> {
        self.h_j_with(p, q, false)
    }

    pub fn h_j_with(
        &self,
        p: usize,
        q: usize,
        representatives: bool,
    ) -> Result<PureTypeGroup, AcxError> {
        let pure = self.pure_type_subspace(p, q)?;
        let k = p + q;
        let (closed, exact) = self.closed_and_exact(k);
        let closed_pure = closed.intersect(&pure)?;
        let trivial = closed_pure.intersect(&exact)?;
        let dim = linalg::quotient_dim(&closed_pure, &trivial)?;
        let representatives = representatives.then(|| {
            let basis = DegreeBasis::new(self.dim(), k);
            complement_basis(&closed_pure, &trivial)
                .into_iter()
                .map(|v| KForm::from_vector(self.dim(), k, &basis, &v))
                .collect()
        });
        Ok(PureTypeGroup {
            p,
            q,
            dim,
            representatives,
        })
    }

    /// C∞-pure and C∞-full verdicts on `H²`.
    pub fn pure_full_check(&self) -> Result<PureFull, AcxError> {
        let (closed, exact) = self.closed_and_exact(2);
        let plus = closed
            .intersect(&self.pure_type_subspace(1, 1)?)?
            .sum(&exact)?;
        let minus = closed
            .intersect(&self.pure_type_subspace(2, 0)?)?
            .sum(&exact)?;
        Ok(PureFull {
            pure: plus.intersect(&minus)?.dim() == exact.dim(),
            full: plus.sum(&minus)?.dim() == closed.dim(),
        })
    }
}

/// Basis vectors of `v` spanning a complement of `w ⊆ v`.
fn complement_basis(v: &Subspace, w: &Subspace) -> Vec<Vec<Rational>> {
    let mut current = w.clone();
    let mut out = Vec::new();
    for b in v.basis() {
        if current.contains_vector(b) {
            continue;
        }
        out.push(b.clone());
        current = current
            .sum(&Subspace::span(v.ambient_dim(), vec![b.clone()]))
            .expect("same ambient");
    }
    out
}
