//! Chevalley–Eilenberg complex of a Lie algebra given by structure equations.
//!
//! All cohomology here is computed on left-invariant forms.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::forms::{Blade, DegreeBasis, FormError, KForm};
use crate::linalg::{self, RationalMatrix, Subspace};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator differential {generator} must be a 2-form on Q^{dim}")]
    BadDifferential { generator: usize, dim: usize },
    #[error("Jacobi identity fails: d(de^{generator}) = {residual} is not zero")]
    Jacobi { generator: usize, residual: String },
}

/// A Lie algebra given by the differentials `de^1, …, de^n` of its coframe.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    differentials: Vec<KForm>,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra{}", crate::parser::render_salamon(self))
    }
}

impl LieAlgebra {
    /// Wraps the structure equations. Only shapes are checked; call
    /// [`validate`](Self::validate) for the Jacobi identity.
    pub fn new(differentials: Vec<KForm>) -> Result<Self, AlgebraError> {
        let dim = differentials.len();
        for (i, f) in differentials.iter().enumerate() {
            if f.dim() != dim || f.degree() != 2 {
                return Err(AlgebraError::BadDifferential {
                    generator: i + 1,
                    dim,
                });
            }
        }
        Ok(LieAlgebra { dim, differentials })
    }

    /// Structure equations that also satisfy the Jacobi identity.
    pub fn validated(differentials: Vec<KForm>) -> Result<Self, AlgebraError> {
        let g = Self::new(differentials)?;
        g.validate()?;
        Ok(g)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            differentials: vec![KForm::zero(dim, 2); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn differentials(&self) -> &[KForm] {
        &self.differentials
    }

    pub fn is_abelian(&self) -> bool {
        self.differentials.iter().all(KForm::is_zero)
    }

    /// Checks `d(de^m) = 0` for every generator and reports the first failure.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        for (m, de) in self.differentials.iter().enumerate() {
            let dde = self.differential_unchecked(de);
            if !dde.is_zero() {
                return Err(AlgebraError::Jacobi {
                    generator: m + 1,
                    residual: dde.to_string(),
                });
            }
        }
        Ok(())
    }

    /// `d` extended from the generators as an anti-derivation.
    pub fn differential(&self, a: &KForm) -> Result<KForm, FormError> {
        if a.dim() != self.dim {
            return Err(FormError::AmbientMismatch(self.dim, a.dim()));
        }
        Ok(self.differential_unchecked(a))
    }

    fn differential_unchecked(&self, a: &KForm) -> KForm {
        let mut out = KForm::zero(self.dim, a.degree() + 1);
        if a.degree() >= self.dim {
            return out;
        }
        for (blade, c) in a.terms() {
            for (slot, p) in blade.positions().enumerate() {
                let below = Blade::from_bits(blade.bits() & ((1u64 << p) - 1));
                let above = Blade::from_bits(blade.bits() & !((1u64 << (p + 1)) - 1));
                for (db, dc) in self.differentials[p].terms() {
                    let Some((s1, left)) = below.wedge(db) else {
                        continue;
                    };
                    let Some((s2, full)) = left.wedge(above) else {
                        continue;
                    };
                    let sign = s1 * s2 * if slot % 2 == 0 { 1 } else { -1 };
                    let x = c * dc;
                    out.add_term(full, if sign < 0 { -x } else { x });
                }
            }
        }
        out
    }

    /// Matrix of `d : Λ^k → Λ^{k+1}` in the lexicographic bases.
    pub fn d_matrix(&self, k: usize) -> RationalMatrix {
        operator_matrix(self.dim, k, k + 1, |f| self.differential_unchecked(f))
    }

    pub fn betti(&self) -> BettiTable {
        let n = self.dim;
        let ranks: Vec<usize> = (0..=n).map(|k| linalg::rank(&self.d_matrix(k))).collect();
        let b = (0..=n)
            .map(|k| {
                let closed = binomial(n, k) - ranks[k];
                closed - if k > 0 { ranks[k - 1] } else { 0 }
            })
            .collect();
        BettiTable { b }
    }

    /// Bracket `[e_i, e_j]` as a vector, with `dα(x, y) = -α([x, y])`.
    fn bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let (sign, pair) = match Blade::from_positions(&[i, j]) {
            Some(x) => x,
            None => return vec![Rational::zero(); self.dim],
        };
        self.differentials
            .iter()
            .map(|de| {
                let c = de.coeff(pair);
                if sign > 0 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    /// Whether the lower central series reaches zero.
    pub fn is_nilpotent(&self) -> bool {
        let n = self.dim;
        let mut current = Subspace::full(n);
        loop {
            let mut vectors = Vec::new();
            for v in current.basis() {
                for i in 0..n {
                    let mut w = vec![Rational::zero(); n];
                    for (j, vj) in v.iter().enumerate() {
                        if vj.is_zero() {
                            continue;
                        }
                        for (wk, bk) in w.iter_mut().zip(self.bracket(i, j)) {
                            *wk += vj * bk;
                        }
                    }
                    vectors.push(w);
                }
            }
            let next = Subspace::span(n, vectors);
            if next.dim() == 0 {
                return true;
            }
            if next.dim() == current.dim() {
                return false;
            }
            current = next;
        }
    }

    /// Whether `tr ad_x = 0` for all `x`.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim)
                .fold(Rational::zero(), |acc, j| acc + &self.bracket(i, j)[j])
                .is_zero()
        })
    }
}

/// Invariant de Rham Betti numbers `b_0 … b_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub b: Vec<usize>,
}

impl BettiTable {
    pub fn get(&self, k: usize) -> usize {
        self.b.get(k).copied().unwrap_or(0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.b
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_poincare_symmetric(&self) -> bool {
        let n = self.b.len() - 1;
        (0..=n).all(|k| self.b[k] == self.b[n - k])
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Matrix of a linear operator `Λ^from → Λ^to`, assembled column by column
/// from its action on basis forms.
pub fn operator_matrix(
    n: usize,
    from: usize,
    to: usize,
    op: impl Fn(&KForm) -> KForm,
) -> RationalMatrix {
    let src = DegreeBasis::new(n, from);
    let dst = DegreeBasis::new(n, to);
    let mut m = RationalMatrix::zeros(dst.len(), src.len());
    for (j, &b) in src.blades().iter().enumerate() {
        let image = op(&KForm::basis(n, b));
        debug_assert!(image.is_zero() || image.degree() == to);
        for (ib, c) in image.terms() {
            let i = dst.position(ib).expect("image lands in target degree");
            m.set(i, j, c.clone());
        }
    }
    m
}
