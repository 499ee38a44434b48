//! Independent oracles and random inputs shared by the integration suites.
//!
//! The oracle side never touches the library's blade arithmetic or
//! elimination: forms are maps from sorted label lists to rationals, signs
//! come from bubble sort, and ranks from textbook Gauss-Jordan elimination.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use sympcoh::forms::KForm;
use sympcoh::Rational;

pub fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// Oracle form: sorted 1-based labels ↦ coefficient.
pub type OForm = BTreeMap<Vec<usize>, Rational>;

/// Sorts labels by adjacent swaps; `None` on a repeat.
pub fn sort_sign(labels: &[usize]) -> Option<(i32, Vec<usize>)> {
    let mut v = labels.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

fn add(f: &mut OForm, labels: Vec<usize>, c: Rational) {
    let e = f.entry(labels.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        f.remove(&labels);
    }
}

pub fn o_wedge(a: &OForm, b: &OForm) -> OForm {
    let mut out = OForm::new();
    for (la, ca) in a {
        for (lb, cb) in b {
            let joined: Vec<usize> = la.iter().chain(lb).copied().collect();
            if let Some((s, sorted)) = sort_sign(&joined) {
                let c = ca * cb;
                add(&mut out, sorted, if s < 0 { -c } else { c });
            }
        }
    }
    out
}

pub fn o_monomial(labels: &[usize]) -> OForm {
    let mut f = OForm::new();
    if let Some((s, sorted)) = sort_sign(labels) {
        f.insert(sorted, q(s as i64));
    }
    f
}

/// `d` by the Leibniz rule from generator differentials.
pub fn o_d(eqs: &[OForm], f: &OForm) -> OForm {
    let mut out = OForm::new();
    for (labels, c) in f {
        for (slot, &l) in labels.iter().enumerate() {
            let before = o_monomial(&labels[..slot]);
            let after = o_monomial(&labels[slot + 1..]);
            let mut term = o_wedge(&o_wedge(&before, &eqs[l - 1]), &after);
            let sign = if slot % 2 == 0 { c.clone() } else { -c.clone() };
            for v in term.values_mut() {
                *v *= &sign;
            }
            for (k, v) in term {
                add(&mut out, k, v);
            }
        }
    }
    out
}

pub fn from_lib(f: &KForm) -> OForm {
    let mut out = OForm::new();
    for (b, c) in f.terms() {
        out.insert(b.positions().map(|p| p + 1).collect(), c.clone());
    }
    out
}

pub fn to_lib(f: &OForm, n: usize, k: usize) -> KForm {
    let mut out = KForm::zero(n, k);
    for (labels, c) in f {
        out = &out + &KForm::monomial(n, labels).scale(c);
    }
    out
}

fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Textbook Gauss-Jordan rank.
pub fn o_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for x in rows[rank].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                let pr = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pr) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers from the oracle differential.
pub fn o_betti(g: &sympcoh::cec::LieAlgebra) -> Vec<usize> {
    let n = g.dim();
    let eqs: Vec<OForm> = g.differentials().iter().map(from_lib).collect();
    let ranks: Vec<usize> = (0..=n)
        .map(|k| {
            let target = combos(n, k + 1);
            let rows: Vec<Vec<Rational>> = combos(n, k)
                .iter()
                .map(|src| {
                    let image = o_d(&eqs, &o_monomial(src));
                    target
                        .iter()
                        .map(|t| image.get(t).cloned().unwrap_or_else(Rational::zero))
                        .collect()
                })
                .collect();
            if target.is_empty() {
                0
            } else {
                o_rank(rows)
            }
        })
        .collect();
    (0..=n)
        .map(|k| combos(n, k).len() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect()
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut num: i64 = rng.gen_range(-6..=6);
    if num == 0 {
        num = 1;
    }
    Rational::new(num.into(), rng.gen_range(1..=4i64).into())
}

/// A sparse random homogeneous form with up to `max_terms` terms.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, k: usize, max_terms: usize) -> KForm {
    let mut f = KForm::zero(n, k);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mut labels: Vec<usize> = (1..=n).collect();
        for i in 0..k {
            let j = rng.gen_range(i..n);
            labels.swap(i, j);
        }
        labels.truncate(k);
        f = &f + &KForm::monomial(n, &labels).scale(&random_rational(rng));
    }
    f
}

pub fn one() -> Rational {
    Rational::one()
}
