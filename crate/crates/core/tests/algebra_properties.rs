//! Property tests for exact linear algebra, exterior algebra, the parser and
//! the Chevalley-Eilenberg differential.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sympcoh::catalog;
use sympcoh::cec::LieAlgebra;
use sympcoh::forms::{self, DegreeBasis, KForm};
use sympcoh::linalg::{self, RationalMatrix, Subspace};
use sympcoh::parser::{parse_form, parse_salamon, render_salamon};
use sympcoh::Rational;

use common::{from_lib, o_d, o_rank, o_wedge, q, random_form};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-4i64..=4, rows * cols).prop_map(move |v| {
        let data: Vec<Vec<Rational>> = v
            .chunks(cols)
            .map(|c| c.iter().map(|&x| q(x)).collect())
            .collect();
        RationalMatrix::from_rows(data, cols).unwrap()
    })
}

fn sized_matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

fn vectors(dim: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 0..=count).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().map(q).collect())
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity(m in sized_matrix()) {
        let k = linalg::kernel(&m);
        prop_assert_eq!(linalg::rank(&m) + k.dim(), m.cols());
        prop_assert_eq!(linalg::rank(&m), o_rank(m.row_vectors()));
        for v in k.basis() {
            prop_assert!(m.apply(v).unwrap().iter().all(|x| *x == q(0)));
        }
        prop_assert_eq!(m.image().dim(), linalg::rank(&m));
    }

    #[test]
    fn subspace_dimension_formula(a in vectors(5, 4), b in vectors(5, 4)) {
        let u = Subspace::span(5, a);
        let v = Subspace::span(5, b);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn canonical_bases(a in vectors(4, 4), scale in 1i64..5) {
        let u = Subspace::span(4, a.clone());
        let scaled: Vec<Vec<Rational>> = a.iter().rev().map(|v| v.iter().map(|x| x * q(scale)).collect()).collect();
        prop_assert_eq!(u, Subspace::span(4, scaled));
    }

    #[test]
    fn inverse_round_trip(m in matrix(4, 4)) {
        match linalg::inverse(&m) {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv).unwrap(), RationalMatrix::identity(4));
                prop_assert!(linalg::determinant(&m) != q(0));
            }
            None => prop_assert_eq!(linalg::determinant(&m), q(0)),
        }
    }

    #[test]
    fn wedge_laws(seed in any::<u64>(), k in 0usize..4, l in 0usize..4, m in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 6;
        let a = random_form(&mut rng, n, k, 4);
        let b = random_form(&mut rng, n, l, 4);
        let c = random_form(&mut rng, n, m, 3);
        let ab = forms::wedge(&a, &b).unwrap();
        let ba = forms::wedge(&b, &a).unwrap();
        let sign = if (k * l) % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(&ab, &ba.scale(&sign));
        prop_assert_eq!(
            forms::wedge(&ab, &c).unwrap(),
            forms::wedge(&a, &forms::wedge(&b, &c).unwrap()).unwrap()
        );
        prop_assert_eq!(from_lib(&ab), o_wedge(&from_lib(&a), &from_lib(&b)));
    }

    #[test]
    fn interior_is_an_antiderivation(seed in any::<u64>(), k in 1usize..4, l in 1usize..4, pos in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, 6, k, 3);
        let b = random_form(&mut rng, 6, l, 3);
        let lhs = forms::interior(pos, &forms::wedge(&a, &b).unwrap());
        let left = forms::wedge(&forms::interior(pos, &a), &b).unwrap();
        let right = forms::wedge(&a, &forms::interior(pos, &b)).unwrap();
        let rhs = if k % 2 == 0 { &left + &right } else { &left - &right };
        prop_assert!(lhs == rhs || (lhs.is_zero() && rhs.is_zero()));
    }

    #[test]
    fn vector_round_trip(seed in any::<u64>(), k in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, 5, k, 5);
        let basis = DegreeBasis::new(5, k);
        prop_assert_eq!(KForm::from_vector(5, k, &basis, &a.to_vector(&basis)), a);
    }

    #[test]
    fn display_parses_back(seed in any::<u64>(), k in 1usize..4, wide in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = if wide { 11 } else { 6 };
        let a = random_form(&mut rng, n, k, 5);
        prop_assume!(!a.is_zero());
        prop_assert_eq!(parse_form(&a.to_string(), n).unwrap(), a);
    }

    #[test]
    fn differential_laws(seed in any::<u64>(), idx in 0usize..7, k in 0usize..4, l in 0usize..3) {
        let e = catalog::entries().swap_remove(idx);
        let g = &e.algebra;
        let n = g.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_form(&mut rng, n, k, 4);
        let b = random_form(&mut rng, n, l, 4);
        let da = g.differential(&a).unwrap();
        prop_assert!(g.differential(&da).unwrap().is_zero());
        let eqs: Vec<_> = g.differentials().iter().map(from_lib).collect();
        prop_assert_eq!(from_lib(&da), o_d(&eqs, &from_lib(&a)));
        let lhs = g.differential(&forms::wedge(&a, &b).unwrap()).unwrap();
        let t1 = forms::wedge(&da, &b).unwrap();
        let t2 = forms::wedge(&a, &g.differential(&b).unwrap()).unwrap();
        let rhs = if k % 2 == 0 { &t1 + &t2 } else { &t1 - &t2 };
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn salamon_round_trip() {
    for e in catalog::entries() {
        let text = render_salamon(&e.algebra);
        assert_eq!(parse_salamon(&text).unwrap(), e.algebra, "{}", e.name);
    }
}

#[test]
fn betti_against_oracle() {
    for e in catalog::entries() {
        assert_eq!(
            e.algebra.betti().b,
            common::o_betti(&e.algebra),
            "{}",
            e.name
        );
        let b = e.algebra.betti();
        assert!(b.is_poincare_symmetric(), "{}", e.name);
        assert_eq!(b.euler_characteristic(), 0, "{}", e.name);
    }
    let torus = LieAlgebra::abelian(6).betti();
    assert_eq!(torus.b, vec![1, 6, 15, 20, 15, 6, 1]);
}
