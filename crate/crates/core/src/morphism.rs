//! Lie algebra morphisms `π : g̃ → g`, pullback of forms and the ranks of
//! induced maps on cohomology.
//!
//! A morphism is stored as the `n x m` matrix of the linear map of Lie
//! algebras (source dimension `m`, target dimension `n`); its pullback sends
//! `e^i ↦ Σ_j M[i][j] ẽ^j`, taking forms on the target to forms on the source.

use std::fmt;

use thiserror::Error;

use crate::acx::{AcxError, AlmostComplexStructure};
use crate::cec::{AlgebraError, LieAlgebra};
use crate::forms::{self, DegreeBasis, FormError, KForm};
use crate::linalg::{self, InducedRank, LinalgError, RationalMatrix, Subspace};
use crate::symplectic::{DegreeSpaces, SymplecticError, SymplecticStructure};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("map matrix must be {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    Shape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error(
        "not a Lie algebra morphism: pullback does not commute with d on generator {generator}"
    )]
    NotAMorphism { generator: usize },
    #[error("{0} structure missing on {1}")]
    MissingStructure(&'static str, &'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error(transparent)]
    Acx(#[from] AcxError),
    #[error("internal consistency failure: {0}")]
    Inconsistent(#[from] LinalgError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieMorphism {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: RationalMatrix,
}

/// Checks `π*(de^i) = d(π* e^i)` for every target generator.
pub fn validate_morphism(
    source: &LieAlgebra,
    target: &LieAlgebra,
    matrix: &RationalMatrix,
) -> Result<(), MorphismError> {
    let (n, m) = (target.dim(), source.dim());
    if matrix.rows() != n || matrix.cols() != m {
        return Err(MorphismError::Shape {
            rows: matrix.rows(),
            cols: matrix.cols(),
            expected_rows: n,
            expected_cols: m,
        });
    }
    for (i, de) in target.differentials().iter().enumerate() {
        let lhs = forms::pullback_linear(matrix, de)?;
        let image =
            forms::pullback_linear(matrix, &KForm::basis(n, forms::Blade::from_bits(1 << i)))?;
        let rhs = source.differential(&image)?;
        if lhs != rhs {
            return Err(MorphismError::NotAMorphism { generator: i + 1 });
        }
    }
    Ok(())
}

impl LieMorphism {
    pub fn new(
        source: LieAlgebra,
        target: LieAlgebra,
        matrix: RationalMatrix,
    ) -> Result<Self, MorphismError> {
        source.validate()?;
        target.validate()?;
        validate_morphism(&source, &target, &matrix)?;
        Ok(LieMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: LieAlgebra) -> Result<Self, MorphismError> {
        let n = g.dim();
        Self::new(g.clone(), g, RationalMatrix::identity(n))
    }

    /// The map `e_i ↦ t_i e_i`, valid when it preserves the bracket.
    pub fn scaling(g: LieAlgebra, factors: &[Rational]) -> Result<Self, MorphismError> {
        let n = g.dim();
        if factors.len() != n {
            return Err(MorphismError::Shape {
                rows: factors.len(),
                cols: factors.len(),
                expected_rows: n,
                expected_cols: n,
            });
        }
        let mut m = RationalMatrix::zeros(n, n);
        for (i, t) in factors.iter().enumerate() {
            m.set(i, i, t.clone());
        }
        Self::new(g.clone(), g, m)
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    /// Equal dimensions and invertible matrix.
    pub fn is_invertible(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && linalg::rank(&self.matrix) == self.matrix.rows()
    }

    pub fn is_surjective(&self) -> bool {
        linalg::rank(&self.matrix) == self.matrix.rows()
    }

    pub fn pullback(&self, a: &KForm) -> Result<KForm, MorphismError> {
        Ok(forms::pullback_linear(&self.matrix, a)?)
    }

    /// Matrix of `π* : Λ^k(target) → Λ^k(source)`.
    pub fn pullback_matrix(&self, k: usize) -> RationalMatrix {
        let (n, m) = (self.target.dim(), self.source.dim());
        let src = DegreeBasis::new(n, k);
        let dst = DegreeBasis::new(m, k);
        let mut out = RationalMatrix::zeros(dst.len(), src.len());
        for (j, &b) in src.blades().iter().enumerate() {
            let image =
                forms::pullback_linear(&self.matrix, &KForm::basis(n, b)).expect("validated shape");
            for (ib, c) in image.terms() {
                out.set(dst.position(ib).expect("degree preserved"), j, c.clone());
            }
        }
        out
    }

    /// `J M = M J̃`.
    pub fn is_pseudo_holomorphic(
        &self,
        target_j: &RationalMatrix,
        source_j: &RationalMatrix,
    ) -> bool {
        match (target_j.mul(&self.matrix), self.matrix.mul(source_j)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    pub fn induced_report(
        &self,
        theory: Theory,
        degree: usize,
        structures: &Structures<'_>,
    ) -> Result<InjectivityReport, MorphismError> {
        let k = theory.degree().unwrap_or(degree);
        let p = self.pullback_matrix(k);
        let rank = match theory {
            Theory::DeRham => {
                let (zt, bt) = closed_exact(&self.target, k);
                let (zs, bs) = closed_exact(&self.source, k);
                linalg::induced_map_rank(&p, &zt, &bt, &zs, &bs)?
            }
            Theory::DLambda | Theory::BottChern | Theory::Aeppli => {
                let (target, source) = self.symplectic_pair(structures)?;
                let t = target.degree_spaces(k)?;
                let s = source.degree_spaces(k)?;
                let pick = |d: DegreeSpaces| match theory {
                    Theory::DLambda => (d.dl_closed, d.dl_exact),
                    Theory::BottChern => (d.bc_closed, d.ddl_exact),
                    _ => (d.ddl_closed, d.a_exact),
                };
                let (vt, wt) = pick(t);
                let (vs, ws) = pick(s);
                linalg::induced_map_rank(&p, &vt, &wt, &vs, &ws)?
            }
            Theory::PureType { p: pp, q } => {
                let (target, source) = match (structures.target_j, structures.source_j) {
                    (Some(t), Some(s)) => (t, s),
                    (None, _) => {
                        return Err(MorphismError::MissingStructure("almost-complex", "target"))
                    }
                    (_, None) => {
                        return Err(MorphismError::MissingStructure("almost-complex", "source"))
                    }
                };
                if target.algebra() != &self.target || source.algebra() != &self.source {
                    return Err(MorphismError::Hypothesis(
                        "almost-complex structures live on different algebras".into(),
                    ));
                }
                if !self.is_pseudo_holomorphic(target.j(), source.j()) {
                    return Err(MorphismError::Hypothesis(
                        "the map is not pseudo-holomorphic".into(),
                    ));
                }
                let (vt, wt) = pure_subquotient(target, pp, q)?;
                let (vs, ws) = pure_subquotient(source, pp, q)?;
                linalg::induced_map_rank(&p, &vt, &wt, &vs, &ws)?
            }
        };
        Ok(InjectivityReport {
            theory,
            degree: k,
            induced: rank,
        })
    }

    fn symplectic_pair<'a>(
        &self,
        structures: &Structures<'a>,
    ) -> Result<(&'a SymplecticStructure, &'a SymplecticStructure), MorphismError> {
        let target = structures
            .target_omega
            .ok_or(MorphismError::MissingStructure("symplectic", "target"))?;
        let source = structures
            .source_omega
            .ok_or(MorphismError::MissingStructure("symplectic", "source"))?;
        if target.algebra() != &self.target || source.algebra() != &self.source {
            return Err(MorphismError::Hypothesis(
                "symplectic structures live on different algebras".into(),
            ));
        }
        if !self.check_pullback_symplectic(target.omega(), source.omega())? {
            return Err(MorphismError::Hypothesis(format!(
                "pullback of omega is {}, not {}",
                self.pullback(target.omega())?,
                source.omega()
            )));
        }
        Ok((target, source))
    }

    /// Whether `π*ω = ω̃` exactly.
    pub fn check_pullback_symplectic(
        &self,
        omega_target: &KForm,
        omega_source: &KForm,
    ) -> Result<bool, MorphismError> {
        Ok(&self.pullback(omega_target)? == omega_source)
    }
}

fn closed_exact(g: &LieAlgebra, k: usize) -> (Subspace, Subspace) {
    let closed = linalg::kernel(&g.d_matrix(k));
    let exact = if k > 0 {
        g.d_matrix(k - 1).image()
    } else {
        Subspace::zero(closed.ambient_dim())
    };
    (closed, exact)
}

fn pure_subquotient(
    a: &AlmostComplexStructure,
    p: usize,
    q: usize,
) -> Result<(Subspace, Subspace), MorphismError> {
    let (closed, exact) = closed_exact(a.algebra(), p + q);
    let v = closed.intersect(&a.pure_type_subspace(p, q)?)?;
    let w = v.intersect(&exact)?;
    Ok((v, w))
}

/// Optional structures on the target (`X`) and source (`X̃`) of a morphism.
#[derive(Debug, Clone, Copy, Default)]
pub struct Structures<'a> {
    pub target_omega: Option<&'a SymplecticStructure>,
    pub source_omega: Option<&'a SymplecticStructure>,
    pub target_j: Option<&'a AlmostComplexStructure>,
    pub source_j: Option<&'a AlmostComplexStructure>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    DeRham,
    DLambda,
    BottChern,
    Aeppli,
    /// `H_J^{(p,q),(q,p)}`, in degree `p + q`.
    PureType {
        p: usize,
        q: usize,
    },
}

impl Theory {
    fn degree(self) -> Option<usize> {
        match self {
            Theory::PureType { p, q } => Some(p + q),
            _ => None,
        }
    }

    pub fn needs_symplectic(self) -> bool {
        matches!(self, Theory::DLambda | Theory::BottChern | Theory::Aeppli)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theory::DeRham => f.write_str("deRham"),
            Theory::DLambda => f.write_str("dLambda"),
            Theory::BottChern => f.write_str("BottChern"),
            Theory::Aeppli => f.write_str("Aeppli"),
            Theory::PureType { p, q } => write!(f, "J({p},{q})"),
        }
    }
}

/// Rank of `π*` between the groups of one theory, target group first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InjectivityReport {
    pub theory: Theory,
    pub degree: usize,
    pub induced: InducedRank,
}

impl InjectivityReport {
    pub fn rank(&self) -> usize {
        self.induced.rank
    }

    /// Dimension of the group on the target, where `π*` starts.
    pub fn domain_dim(&self) -> usize {
        self.induced.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.induced.codomain_dim
    }

    pub fn injective(&self) -> bool {
        self.induced.injective
    }
}

impl fmt::Display for InjectivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} k={}: rank {}/{} {}",
            self.theory,
            self.degree,
            self.rank(),
            self.domain_dim(),
            if self.injective() {
                "injective"
            } else {
                "NOT injective"
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acx::standard_j;
    use crate::catalog;
    use crate::parser::parse_form;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn projection(m: usize, n: usize, skip: &[usize]) -> RationalMatrix {
        let keep: Vec<usize> = (0..m).filter(|i| !skip.contains(i)).collect();
        assert_eq!(keep.len(), n);
        let mut p = RationalMatrix::zeros(n, m);
        for (i, &j) in keep.iter().enumerate() {
            p.set(i, j, q(1));
        }
        p
    }

    #[test]
    fn etabeta5_projections() {
        let eta = catalog::get("etabeta5").unwrap().algebra;
        let torus = LieAlgebra::abelian(8);
        assert!(LieMorphism::new(eta.clone(), torus.clone(), projection(10, 8, &[8, 9])).is_ok());
        assert_eq!(
            LieMorphism::new(eta.clone(), torus, projection(10, 8, &[0, 1])),
            Err(MorphismError::NotAMorphism { generator: 7 })
        );
        assert!(LieMorphism::identity(eta).is_ok());
    }

    #[test]
    fn pullback_examples() {
        let eta = catalog::get("etabeta5").unwrap().algebra;
        let f = LieMorphism::new(eta, LieAlgebra::abelian(8), projection(10, 8, &[8, 9])).unwrap();
        assert_eq!(
            f.pullback(&KForm::monomial(8, &[1])).unwrap(),
            KForm::monomial(10, &[1])
        );
        let a = parse_form("13-24", 8).unwrap();
        assert_eq!(
            f.pullback(&a).unwrap(),
            parse_form("[1.3]-[2.4]", 10).unwrap()
        );
        let omega = catalog::standard_fundamental_form(8);
        let pulled = f.pullback(&omega).unwrap();
        assert!(pulled.power(5).is_zero());
        assert!(!f
            .check_pullback_symplectic(&omega, &catalog::standard_fundamental_form(10))
            .unwrap());
    }

    #[test]
    fn scaling_torus() {
        let f = LieMorphism::scaling(LieAlgebra::abelian(4), &[q(2), q(1), q(1), q(1)]).unwrap();
        let omega = parse_form("12+34", 4).unwrap();
        let tilde = parse_form("2*12+34", 4).unwrap();
        assert!(f.check_pullback_symplectic(&omega, &tilde).unwrap());
        assert!(f.is_invertible());
        let kodaira = catalog::get("kodaira").unwrap().algebra;
        assert!(LieMorphism::scaling(kodaira.clone(), &[q(1), q(2), q(3), q(6)]).is_ok());
        assert!(LieMorphism::scaling(kodaira, &[q(1), q(2), q(3), q(5)]).is_err());
    }

    #[test]
    fn example_injectivity() {
        let eta = catalog::get("etabeta5").unwrap().algebra;
        let torus = LieAlgebra::abelian(8);
        let f = LieMorphism::new(eta.clone(), torus.clone(), projection(10, 8, &[8, 9])).unwrap();
        let jt = AlmostComplexStructure::new(torus, standard_j(8)).unwrap();
        let js = AlmostComplexStructure::new(eta, standard_j(10)).unwrap();
        let s = Structures {
            target_j: Some(&jt),
            source_j: Some(&js),
            ..Default::default()
        };
        let r = f
            .induced_report(Theory::PureType { p: 2, q: 0 }, 2, &s)
            .unwrap();
        assert_eq!((r.rank(), r.domain_dim(), r.injective()), (10, 12, false));
        assert_eq!(r.to_string(), "J(2,0) k=2: rank 10/12 NOT injective");
        let d = f.induced_report(Theory::DeRham, 1, &s).unwrap();
        assert_eq!((d.rank(), d.domain_dim(), d.injective()), (8, 8, true));
        assert!(matches!(
            f.induced_report(Theory::BottChern, 2, &s),
            Err(MorphismError::MissingStructure(..))
        ));
    }

    #[test]
    fn identity_on_kodaira_is_bijective() {
        let e = catalog::get("kodaira").unwrap();
        let s = SymplecticStructure::new(e.algebra.clone(), e.default_omega.unwrap()).unwrap();
        let f = LieMorphism::identity(e.algebra).unwrap();
        let st = Structures {
            target_omega: Some(&s),
            source_omega: Some(&s),
            ..Default::default()
        };
        for k in 0..=4 {
            let r = f.induced_report(Theory::BottChern, k, &st).unwrap();
            assert!(r.induced.bijective());
        }
    }
}
