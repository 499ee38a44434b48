//! Symplectic operators `L`, `Λ`, `⋆`, `d^Λ` and the cohomologies built from
//! them: `H_{d^Λ}`, Bott-Chern `H_{d+d^Λ}` and Aeppli `H_{dd^Λ}`.
//!
//! Conventions: the Poisson bivector is the matrix inverse of the matrix of
//! `ω`, `Λ = Σ_{i<j} P^{ij} ι_i ι_j`, and `⋆` is defined by
//! `β ∧ ⋆α = det(P restricted to (β, α)) · ωⁿ/n!` on basis forms. With these
//! choices `[Λ, L] = (n - k)`, `⋆⋆ = 1` and `dΛ - Λd = (-1)^{k+1} ⋆d⋆`.

use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::cec::{operator_matrix, AlgebraError, LieAlgebra};
use crate::forms::{self, blades, Bivector, Blade, FormError, KForm};
use crate::linalg::{self, InducedRank, LinalgError, RationalMatrix, Subspace};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymplecticError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("symplectic form must be a 2-form, got degree {0}")]
    WrongDegree(usize),
    #[error("odd-dimensional algebra (dimension {0}) carries no symplectic form")]
    OddDimension(usize),
    #[error("omega is not closed: d(omega) = {0}")]
    NotClosed(String),
    #[error("omega is degenerate (omega^n = 0)")]
    Degenerate,
    #[error("internal consistency failure: {0}")]
    Inconsistent(#[from] LinalgError),
}

/// A closed nondegenerate invariant 2-form on a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticStructure {
    algebra: LieAlgebra,
    omega: KForm,
    half_dim: usize,
    poisson: Bivector,
    volume: Rational,
}

/// Antisymmetric matrix `W[i][j] = ω(e_i, e_j)` of a 2-form.
pub fn form_matrix(omega: &KForm) -> RationalMatrix {
    let n = omega.dim();
    let mut w = RationalMatrix::zeros(n, n);
    for (b, c) in omega.terms() {
        let mut pos = b.positions();
        let (i, j) = (pos.next().unwrap(), pos.next().unwrap());
        w.set(i, j, c.clone());
        w.set(j, i, -c.clone());
    }
    w
}

impl SymplecticStructure {
    pub fn new(algebra: LieAlgebra, omega: KForm) -> Result<Self, SymplecticError> {
        algebra.validate()?;
        let dim = algebra.dim();
        if omega.dim() != dim {
            return Err(FormError::AmbientMismatch(dim, omega.dim()).into());
        }
        if omega.degree() != 2 {
            return Err(SymplecticError::WrongDegree(omega.degree()));
        }
        if dim % 2 == 1 {
            return Err(SymplecticError::OddDimension(dim));
        }
        let d_omega = algebra.differential(&omega)?;
        if !d_omega.is_zero() {
            return Err(SymplecticError::NotClosed(d_omega.to_string()));
        }
        let w = form_matrix(&omega);
        let inverse = linalg::inverse(&w).ok_or(SymplecticError::Degenerate)?;
        let half_dim = dim / 2;
        let top = omega.power(half_dim);
        let factorial: Rational = (1..=half_dim).fold(Rational::one(), |acc, i| {
            acc * Rational::from_integer(i.into())
        });
        let volume = top.coeff(Blade::from_bits((1u64 << dim) - 1)) / factorial;
        debug_assert!(!volume.is_zero());
        Ok(SymplecticStructure {
            algebra,
            omega,
            half_dim,
            poisson: Bivector::from_antisymmetric(&inverse),
            volume,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &KForm {
        &self.omega
    }

    /// `n` where the algebra has dimension `2n`.
    pub fn half_dim(&self) -> usize {
        self.half_dim
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn poisson(&self) -> &Bivector {
        &self.poisson
    }

    /// Coefficient `v` with `ωⁿ/n! = v e^{1…2n}`.
    pub fn volume_coefficient(&self) -> &Rational {
        &self.volume
    }

    pub fn lefschetz(&self, a: &KForm) -> Result<KForm, FormError> {
        forms::wedge(&self.omega, a)
    }

    pub fn lambda(&self, a: &KForm) -> Result<KForm, FormError> {
        forms::contract(&self.poisson, a)
    }

    pub fn differential(&self, a: &KForm) -> Result<KForm, FormError> {
        self.algebra.differential(a)
    }

    /// `d^Λ = dΛ - Λd`.
    pub fn d_lambda(&self, a: &KForm) -> Result<KForm, FormError> {
        let d_lambda = self.differential(&self.lambda(a)?)?;
        let lambda_d = self.lambda(&self.differential(a)?)?;
        if a.degree() == 0 {
            return Ok(KForm::zero(a.dim(), 0));
        }
        Ok(&fix_degree(d_lambda, a.degree() - 1) - &fix_degree(lambda_d, a.degree() - 1))
    }

    /// Poisson pairing of two basis blades of equal degree.
    fn pairing(&self, beta: Blade, alpha: Blade) -> Rational {
        let rows: Vec<usize> = beta.positions().collect();
        let cols: Vec<usize> = alpha.positions().collect();
        let k = rows.len();
        let mut m = RationalMatrix::zeros(k, k);
        for (i, &r) in rows.iter().enumerate() {
            let mut any = false;
            for (j, &c) in cols.iter().enumerate() {
                let x = self.poisson.get(r, c);
                if !x.is_zero() {
                    any = true;
                    m.set(i, j, x);
                }
            }
            if !any {
                return Rational::zero();
            }
        }
        linalg::determinant(&m)
    }

    /// Symplectic Hodge star `Λ^k → Λ^{2n-k}`.
    pub fn star(&self, a: &KForm) -> Result<KForm, FormError> {
        let n = self.dim();
        if a.dim() != n {
            return Err(FormError::AmbientMismatch(n, a.dim()));
        }
        let k = a.degree();
        let mut out = KForm::zero(n, n - k);
        let candidates = blades(n, k);
        for (alpha, c) in a.terms() {
            for &beta in &candidates {
                let g = self.pairing(beta, alpha);
                if g.is_zero() {
                    continue;
                }
                let complement = beta.complement(n);
                let (sign, _) = beta.wedge(complement).expect("disjoint");
                let x = g * c * &self.volume;
                out.add_term(complement, if sign < 0 { -x } else { x });
            }
        }
        Ok(out)
    }

    fn lambda_unchecked(&self, a: &KForm) -> KForm {
        self.lambda(a).expect("same ambient")
    }

    /// Matrix of `d^Λ : Λ^k → Λ^{k-1}` (zero map for `k = 0`).
    pub fn d_lambda_matrix(&self, k: usize) -> RationalMatrix {
        if k == 0 {
            return RationalMatrix::zeros(0, 1);
        }
        operator_matrix(self.dim(), k, k - 1, |f| {
            self.d_lambda(f).expect("same ambient")
        })
    }

    /// Matrix of `L^j : Λ^k → Λ^{k+2j}`.
    pub fn lefschetz_power_matrix(&self, j: usize, k: usize) -> RationalMatrix {
        let power = self.omega.power(j);
        operator_matrix(self.dim(), k, k + 2 * j, |f| {
            forms::wedge(&power, f).expect("same ambient")
        })
    }

    pub fn lambda_matrix(&self, k: usize) -> RationalMatrix {
        operator_matrix(self.dim(), k, k.saturating_sub(2), |f| {
            fix_degree(self.lambda_unchecked(f), k.saturating_sub(2))
        })
    }

    /// Kernels and images of `d`, `d^Λ` and `dd^Λ` in every degree.
    pub fn spaces(&self) -> Result<Vec<DegreeSpaces>, SymplecticError> {
        let top = self.dim();
        let d: Vec<RationalMatrix> = (0..=top)
            .into_par_iter()
            .map(|k| self.algebra.d_matrix(k))
            .collect();
        let dl: Vec<RationalMatrix> = (0..=top)
            .into_par_iter()
            .map(|k| self.d_lambda_matrix(k))
            .collect();
        (0..=top)
            .into_par_iter()
            .map(|k| DegreeSpaces::build(top, k, &d, &dl))
            .collect()
    }

    pub fn degree_spaces(&self, k: usize) -> Result<DegreeSpaces, SymplecticError> {
        let top = self.dim();
        assert!(k <= top, "degree {k} above top degree {top}");
        let lo = k.saturating_sub(1);
        let hi = (k + 1).min(top);
        let mut d = vec![RationalMatrix::zeros(0, 0); top + 1];
        let mut dl = vec![RationalMatrix::zeros(0, 0); top + 1];
        for j in lo..=hi {
            d[j] = self.algebra.d_matrix(j);
            dl[j] = self.d_lambda_matrix(j);
        }
        DegreeSpaces::build(top, k, &d, &dl)
    }

    pub fn h_dlambda(&self, k: usize) -> Result<usize, SymplecticError> {
        self.degree_spaces(k)?.h_dlambda()
    }

    pub fn h_bottchern(&self, k: usize) -> Result<usize, SymplecticError> {
        self.degree_spaces(k)?.h_bottchern()
    }

    pub fn h_aeppli(&self, k: usize) -> Result<usize, SymplecticError> {
        self.degree_spaces(k)?.h_aeppli()
    }

    /// Identity-induced maps `H^k_{BC} → H^k_dR` and `H^k_dR → H^k_A`.
    pub fn natural_map_ranks(&self, k: usize) -> Result<NaturalMaps, SymplecticError> {
        self.degree_spaces(k)?.natural_maps()
    }

    /// Rank of `L^j : H^{n-j}_dR → H^{n+j}_dR` computed on closed forms.
    fn lefschetz_rank(
        &self,
        j: usize,
        spaces: &[DegreeSpaces],
    ) -> Result<InducedRank, SymplecticError> {
        let n = self.half_dim;
        let low = &spaces[n - j];
        let high = &spaces[n + j];
        let m = self.lefschetz_power_matrix(j, n - j);
        Ok(linalg::induced_map_rank(
            &m,
            &low.closed,
            &low.exact,
            &high.closed,
            &high.exact,
        )?)
    }

    pub fn report(&self) -> Result<CohomologyReport, SymplecticError> {
        let spaces = self.spaces()?;
        let betti: Vec<usize> = spaces
            .iter()
            .map(DegreeSpaces::betti)
            .collect::<Result<_, _>>()?;
        let rows = spaces
            .par_iter()
            .zip(betti.par_iter())
            .map(|(s, &b)| {
                let h_bc = s.h_bottchern()?;
                let delta_tilde = h_bc as i64 - b as i64;
                Ok(DegreeRow {
                    k: s.degree,
                    b,
                    h_dlambda: s.h_dlambda()?,
                    h_bc,
                    h_a: s.h_aeppli()?,
                    delta_tilde,
                    delta: 2 * delta_tilde,
                })
            })
            .collect::<Result<Vec<_>, SymplecticError>>()?;
        let natural = spaces
            .par_iter()
            .map(DegreeSpaces::natural_maps)
            .collect::<Result<Vec<_>, _>>()?;
        let lefschetz = (0..=self.half_dim)
            .into_par_iter()
            .map(|j| self.lefschetz_rank(j, &spaces))
            .collect::<Result<Vec<_>, _>>()?;
        let hlc = lefschetz.iter().all(InducedRank::bijective);
        let ddlambda_lemma = rows.iter().all(|r| r.delta_tilde == 0);
        Ok(CohomologyReport {
            dim: self.dim(),
            nilpotent: self.algebra.is_nilpotent(),
            rows,
            hlc,
            ddlambda_lemma,
            lefschetz,
            natural,
        })
    }
}

/// Relabels the zero form produced below degree 0 to the expected degree.
fn fix_degree(f: KForm, k: usize) -> KForm {
    if f.is_zero() && f.degree() != k {
        KForm::zero(f.dim(), k)
    } else {
        f
    }
}

/// Subspaces of `Λ^k` entering the symplectic cohomologies.
#[derive(Debug, Clone)]
pub struct DegreeSpaces {
    pub degree: usize,
    /// `ker d ∩ Λ^k`
    pub closed: Subspace,
    /// `d(Λ^{k-1})`
    pub exact: Subspace,
    /// `ker d^Λ ∩ Λ^k`
    pub dl_closed: Subspace,
    /// `d^Λ(Λ^{k+1})`
    pub dl_exact: Subspace,
    /// `ker dd^Λ ∩ Λ^k`
    pub ddl_closed: Subspace,
    /// `dd^Λ(Λ^k)`
    pub ddl_exact: Subspace,
    /// `ker d ∩ ker d^Λ`
    pub bc_closed: Subspace,
    /// `d(Λ^{k-1}) + d^Λ(Λ^{k+1})`
    pub a_exact: Subspace,
}

impl DegreeSpaces {
    fn build(
        top: usize,
        k: usize,
        d: &[RationalMatrix],
        dl: &[RationalMatrix],
    ) -> Result<Self, SymplecticError> {
        let size = d[k].cols();
        let closed = linalg::kernel(&d[k]);
        let exact = if k > 0 {
            d[k - 1].image()
        } else {
            Subspace::zero(size)
        };
        let dl_closed = if k > 0 {
            linalg::kernel(&dl[k])
        } else {
            Subspace::full(size)
        };
        let dl_exact = if k < top {
            dl[k + 1].image()
        } else {
            Subspace::zero(size)
        };
        let (ddl_closed, ddl_exact) = if k > 0 {
            let ddl = d[k - 1].mul(&dl[k])?;
            (linalg::kernel(&ddl), ddl.image())
        } else {
            (Subspace::full(size), Subspace::zero(size))
        };
        let bc_closed = closed.intersect(&dl_closed)?;
        let a_exact = exact.sum(&dl_exact)?;
        Ok(DegreeSpaces {
            degree: k,
            closed,
            exact,
            dl_closed,
            dl_exact,
            ddl_closed,
            ddl_exact,
            bc_closed,
            a_exact,
        })
    }

    pub fn betti(&self) -> Result<usize, SymplecticError> {
        Ok(linalg::quotient_dim(&self.closed, &self.exact)?)
    }

    pub fn h_dlambda(&self) -> Result<usize, SymplecticError> {
        Ok(linalg::quotient_dim(&self.dl_closed, &self.dl_exact)?)
    }

    pub fn h_bottchern(&self) -> Result<usize, SymplecticError> {
        Ok(linalg::quotient_dim(&self.bc_closed, &self.ddl_exact)?)
    }

    pub fn h_aeppli(&self) -> Result<usize, SymplecticError> {
        Ok(linalg::quotient_dim(&self.ddl_closed, &self.a_exact)?)
    }

    pub fn natural_maps(&self) -> Result<NaturalMaps, SymplecticError> {
        let id = RationalMatrix::identity(self.closed.ambient_dim());
        let bc_to_dr = linalg::induced_map_rank(
            &id,
            &self.bc_closed,
            &self.ddl_exact,
            &self.closed,
            &self.exact,
        )?;
        let dr_to_a = linalg::induced_map_rank(
            &id,
            &self.closed,
            &self.exact,
            &self.ddl_closed,
            &self.a_exact,
        )?;
        Ok(NaturalMaps { bc_to_dr, dr_to_a })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NaturalMaps {
    pub bc_to_dr: InducedRank,
    pub dr_to_a: InducedRank,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub k: usize,
    pub b: usize,
    pub h_dlambda: usize,
    pub h_bc: usize,
    pub h_a: usize,
    /// `Δ^k`, reported as `2 Δ̃^k`.
    pub delta: i64,
    /// `Δ̃^k = h^k_BC - b_k`.
    pub delta_tilde: i64,
}

/// Per-degree table of invariant cohomology dimensions and HLC verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dim: usize,
    pub nilpotent: bool,
    pub rows: Vec<DegreeRow>,
    /// All `L^k : H^{n-k} → H^{n+k}` are bijective.
    pub hlc: bool,
    /// All `Δ̃^k` vanish.
    pub ddlambda_lemma: bool,
    /// Induced ranks of `L^k`, `k = 0..=n`.
    pub lefschetz: Vec<InducedRank>,
    /// Identity-induced maps, one entry per degree.
    pub natural: Vec<NaturalMaps>,
}

impl CohomologyReport {
    pub fn row(&self, k: usize) -> &DegreeRow {
        &self.rows[k]
    }

    pub fn bc_to_dr_injective(&self) -> bool {
        self.natural.iter().all(|m| m.bc_to_dr.injective)
    }

    pub fn bc_to_dr_surjective(&self) -> bool {
        self.natural.iter().all(|m| m.bc_to_dr.surjective)
    }
}
