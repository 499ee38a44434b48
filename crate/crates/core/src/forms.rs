//! Exterior algebra of `(Q^n)*` with exact coefficients.
//!
//! Generators are labelled `1..=n` in user-facing text and stored as bit
//! `label - 1` of a [`Blade`].

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::RationalMatrix;
use crate::Rational;

pub const MAX_GENERATORS: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
}

/// A strictly increasing multi-index `e^{i1...ik}` encoded as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u64);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn from_bits(bits: u64) -> Self {
        Blade(bits)
    }

    /// Builds a blade from 0-based generator positions, returning the sign of
    /// the sorting permutation, or `None` on a repeated index.
    pub fn from_positions(positions: &[usize]) -> Option<(i32, Blade)> {
        let mut bits = 0u64;
        let mut sign = 1;
        for &p in positions {
            let bit = 1u64 << p;
            if bits & bit != 0 {
                return None;
            }
            // moving p left past every larger index already present
            if (bits >> p).count_ones() % 2 == 1 {
                sign = -sign;
            }
            bits |= bit;
        }
        Some((sign, Blade(bits)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, pos: usize) -> bool {
        self.0 & (1 << pos) != 0
    }

    /// 0-based positions in increasing order.
    pub fn positions(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Sign of `e^self ∧ e^other`, or `None` if they share an index.
    pub fn wedge(self, other: Blade) -> Option<(i32, Blade)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for p in other.positions() {
            swaps += (self.0 >> (p + 1)).count_ones();
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Blade(self.0 | other.0)))
    }

    /// Interior product with the dual vector `e_pos`: removes `pos` with sign
    /// `(-1)^(number of indices before it)`.
    pub fn interior(self, pos: usize) -> Option<(i32, Blade)> {
        if !self.contains(pos) {
            return None;
        }
        let before = (self.0 & ((1u64 << pos) - 1)).count_ones();
        let sign = if before.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(self.0 & !(1 << pos))))
    }

    pub fn complement(self, n: usize) -> Blade {
        Blade(!self.0 & full_mask(n))
    }

    /// Renders the 1-based labels: digit run for `n <= 9`, `[i.j]` otherwise.
    pub fn label(self, n: usize) -> String {
        let labels: Vec<String> = self.positions().map(|p| (p + 1).to_string()).collect();
        if n <= 9 {
            labels.concat()
        } else {
            format!("[{}]", labels.join("."))
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Lexicographic order on the sorted index sequences.
impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !((low << 1).wrapping_sub(1));
        if self.0 & low != 0 {
            // other has either a larger next index or ran out
            if other.0 & above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.positions().map(|p| (p + 1).to_string()).collect();
        write!(f, "e[{}]", labels.join(","))
    }
}

/// All degree-`k` blades in `n` generators, in lexicographic order.
pub fn blades(n: usize, k: usize) -> Vec<Blade> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Blade(idx.iter().fold(0, |acc, &p| acc | (1 << p))));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographically ordered basis of `Λ^k` with reverse lookup.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    blades: Vec<Blade>,
    index: HashMap<Blade, usize>,
}

impl DegreeBasis {
    pub fn new(n: usize, k: usize) -> Self {
        let blades = blades(n, k);
        let index = blades.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        DegreeBasis { blades, index }
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn position(&self, blade: Blade) -> Option<usize> {
        self.index.get(&blade).copied()
    }
}

/// A homogeneous form of degree `k` on `Q^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct KForm {
    dim: usize,
    degree: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators");
        KForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        let mut f = Self::zero(dim, 0);
        f.add_term(Blade::EMPTY, c);
        f
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn basis(dim: usize, blade: Blade) -> Self {
        let mut f = Self::zero(dim, blade.degree());
        f.add_term(blade, Rational::one());
        f
    }

    /// `e^{i1...ik}` from 1-based labels, which may be unsorted.
    pub fn monomial(dim: usize, labels: &[usize]) -> Self {
        let positions: Vec<usize> = labels.iter().map(|&l| l - 1).collect();
        assert!(positions.iter().all(|&p| p < dim), "label out of range");
        let mut f = Self::zero(dim, labels.len());
        if let Some((sign, blade)) = Blade::from_positions(&positions) {
            f.add_term(blade, Rational::from_integer(sign.into()));
        }
        f
    }

    /// Adds `c * e^blade`; the blade degree must match.
    pub fn add_term(&mut self, blade: Blade, c: Rational) {
        assert_eq!(blade.degree(), self.degree, "term degree mismatch");
        debug_assert!(blade.bits() & !full_mask(self.dim) == 0);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> KForm {
        let mut out = KForm::zero(self.dim, self.degree);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(b, x)| (*b, x * c)).collect();
        out
    }

    /// Coordinates in the lexicographic basis of this degree.
    pub fn to_vector(&self, basis: &DegreeBasis) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (b, c) in &self.terms {
            v[basis.position(*b).expect("blade outside basis")] = c.clone();
        }
        v
    }

    pub fn from_vector(dim: usize, degree: usize, basis: &DegreeBasis, v: &[Rational]) -> Self {
        let mut f = KForm::zero(dim, degree);
        for (b, c) in basis.blades().iter().zip(v) {
            f.add_term(*b, c.clone());
        }
        f
    }

    pub fn checked_add(&self, other: &KForm) -> Result<KForm, FormError> {
        self.check_same_space(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    fn check_same_space(&self, other: &KForm) -> Result<(), FormError> {
        if self.dim != other.dim {
            return Err(FormError::AmbientMismatch(self.dim, other.dim));
        }
        if self.degree != other.degree {
            return Err(FormError::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    /// `self^p` under the wedge product.
    pub fn power(&self, p: usize) -> KForm {
        let mut acc = KForm::one(self.dim);
        for _ in 0..p {
            acc = wedge(&acc, self).expect("same ambient");
        }
        acc
    }
}

impl fmt::Debug for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KForm(n={}, k={}, {})", self.dim, self.degree, self)
    }
}

/// Renders in the input grammar: `2*12-3*14`, `[1.10]`, `0`.
impl fmt::Display for KForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rational::zero();
            if negative {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let abs = if negative { -c.clone() } else { c.clone() };
            if self.degree == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", b.label(self.dim))?;
            } else {
                write!(f, "{abs}*{}", b.label(self.dim))?;
            }
        }
        Ok(())
    }
}

impl Add for &KForm {
    type Output = KForm;

    /// Panics on ambient or degree mismatch; use [`KForm::checked_add`] otherwise.
    fn add(self, rhs: &KForm) -> KForm {
        self.checked_add(rhs)
            .expect("adding forms from different spaces")
    }
}

impl Sub for &KForm {
    type Output = KForm;

    fn sub(self, rhs: &KForm) -> KForm {
        self + &(-rhs)
    }
}

impl Neg for &KForm {
    type Output = KForm;

    fn neg(self) -> KForm {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }
}

impl Mul<&KForm> for &Rational {
    type Output = KForm;

    fn mul(self, rhs: &KForm) -> KForm {
        rhs.scale(self)
    }
}

/// `a ∧ b`.
pub fn wedge(a: &KForm, b: &KForm) -> Result<KForm, FormError> {
    if a.dim != b.dim {
        return Err(FormError::AmbientMismatch(a.dim, b.dim));
    }
    let mut out = KForm::zero(a.dim, a.degree + b.degree);
    if a.degree + b.degree > a.dim {
        return Ok(out);
    }
    for (ba, ca) in &a.terms {
        for (bb, cb) in &b.terms {
            if let Some((sign, blade)) = ba.wedge(*bb) {
                let c = ca * cb;
                out.add_term(blade, if sign < 0 { -c } else { c });
            }
        }
    }
    Ok(out)
}

/// Interior product with the dual basis vector `e_pos` (0-based).
pub fn interior(pos: usize, a: &KForm) -> KForm {
    if a.degree == 0 {
        return KForm::zero(a.dim, 0);
    }
    let mut out = KForm::zero(a.dim, a.degree - 1);
    for (b, c) in &a.terms {
        if let Some((sign, rest)) = b.interior(pos) {
            out.add_term(rest, if sign < 0 { -c.clone() } else { c.clone() });
        }
    }
    out
}

/// An antisymmetric bivector, stored on pairs `i < j` (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bivector {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl Bivector {
    /// Reads the strictly upper triangle of an antisymmetric matrix.
    pub fn from_antisymmetric(m: &RationalMatrix) -> Self {
        let n = m.rows();
        let mut coeffs = BTreeMap::new();
        for i in 0..n {
            for j in i + 1..n {
                let x = m.get(i, j);
                if !x.is_zero() {
                    coeffs.insert((i, j), x.clone());
                }
            }
        }
        Bivector { dim: n, coeffs }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `P^{ij}` for any ordered pair.
    pub fn get(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            Ordering::Less => self
                .coeffs
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(Rational::zero),
            Ordering::Greater => -self.get(j, i),
            Ordering::Equal => Rational::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> {
        self.coeffs.iter().map(|(k, v)| (*k, v))
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.dim, self.dim);
        for (&(i, j), x) in &self.coeffs {
            m.set(i, j, x.clone());
            m.set(j, i, -x.clone());
        }
        m
    }
}

/// `Σ_{i<j} P^{ij} ι_{e_i} ι_{e_j} a`.
pub fn contract(p: &Bivector, a: &KForm) -> Result<KForm, FormError> {
    if p.dim != a.dim {
        return Err(FormError::AmbientMismatch(p.dim, a.dim));
    }
    if a.degree < 2 {
        return Ok(KForm::zero(a.dim, a.degree.saturating_sub(2)));
    }
    let mut out = KForm::zero(a.dim, a.degree - 2);
    for (b, c) in &a.terms {
        for (&(i, j), pij) in &p.coeffs {
            let Some((s1, b1)) = b.interior(j) else {
                continue;
            };
            let Some((s2, b2)) = b1.interior(i) else {
                continue;
            };
            let x = pij * c;
            out.add_term(b2, if s1 * s2 < 0 { -x } else { x });
        }
    }
    Ok(out)
}

/// Pulls a form on `Q^n` back along the linear map whose matrix `m` is
/// `n x source_dim`: `e^i ↦ Σ_j m[i][j] ẽ^j`, extended multiplicatively.
pub fn pullback_linear(m: &RationalMatrix, a: &KForm) -> Result<KForm, FormError> {
    if m.rows() != a.dim {
        return Err(FormError::MatrixShape {
            rows: m.rows(),
            cols: m.cols(),
            expected_rows: a.dim,
            expected_cols: m.cols(),
        });
    }
    let source_dim = m.cols();
    let images: Vec<KForm> = (0..m.rows())
        .map(|i| {
            let mut f = KForm::zero(source_dim, 1);
            for j in 0..source_dim {
                f.add_term(Blade(1 << j), m.get(i, j).clone());
            }
            f
        })
        .collect();
    let mut out = KForm::zero(source_dim, a.degree);
    for (b, c) in &a.terms {
        let mut prod = KForm::constant(source_dim, c.clone());
        for p in b.positions() {
            prod = wedge(&prod, &images[p])?;
            if prod.is_zero() {
                break;
            }
        }
        out = &out + &prod;
    }
    Ok(out)
}

/// The action `Jα(v1,…,vk) = α(Jv1,…,Jvk)` of an `n x n` matrix on forms.
pub fn j_action(j: &RationalMatrix, a: &KForm) -> Result<KForm, FormError> {
    if j.rows() != a.dim || j.cols() != a.dim {
        return Err(FormError::MatrixShape {
            rows: j.rows(),
            cols: j.cols(),
            expected_rows: a.dim,
            expected_cols: a.dim,
        });
    }
    pullback_linear(j, a)
}

/// Extends a linear map on 1-forms (`e^i ↦ Σ_j m[i][j] e^j`) to all forms as
/// a derivation.
pub fn derivation_action(m: &RationalMatrix, a: &KForm) -> Result<KForm, FormError> {
    if m.rows() != a.dim || m.cols() != a.dim {
        return Err(FormError::MatrixShape {
            rows: m.rows(),
            cols: m.cols(),
            expected_rows: a.dim,
            expected_cols: a.dim,
        });
    }
    let n = a.dim;
    let mut out = KForm::zero(n, a.degree);
    for (b, c) in &a.terms {
        let positions: Vec<usize> = b.positions().collect();
        for (slot, &p) in positions.iter().enumerate() {
            for q in 0..n {
                let mq = m.get(p, q);
                if mq.is_zero() {
                    continue;
                }
                let mut replaced = positions.clone();
                replaced[slot] = q;
                if let Some((sign, blade)) = Blade::from_positions(&replaced) {
                    let x = c * mq;
                    out.add_term(blade, if sign < 0 { -x } else { x });
                }
            }
        }
    }
    Ok(out)
}
