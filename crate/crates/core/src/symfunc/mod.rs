//! Graded sparse linear combinations of basis elements with exact
//! rational coefficients.
//!
//! A [`SymFunc`] carries its basis and a weight-cap marker. Finite inputs
//! are [`Cap::Exact`]; truncated infinite objects (series, the inner unit)
//! carry [`Cap::Capped`] and never hold terms above the cap. Binary
//! operations propagate the smaller cap.

mod tensor;
mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

pub use tensor::TensorExp;
pub use transition::{
    kostka, matrix_count_check, schur_in_basis, to_schur_expansion, transition_matrix, MatrixKind, RatMatrix,
};

pub type Rational = BigRational;

/// Exact rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "s")]
    Schur,
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "p")]
    PowerSum,
}

impl Basis {
    pub const ALL: [Basis; 5] = [
        Basis::Schur,
        Basis::Complete,
        Basis::Elementary,
        Basis::Monomial,
        Basis::PowerSum,
    ];

    pub fn letter(self) -> char {
        match self {
            Basis::Schur => 's',
            Basis::Complete => 'h',
            Basis::Elementary => 'e',
            Basis::Monomial => 'm',
            Basis::PowerSum => 'p',
        }
    }

    pub fn from_letter(s: &str) -> Result<Basis> {
        match s {
            "s" => Ok(Basis::Schur),
            "h" => Ok(Basis::Complete),
            "e" => Ok(Basis::Elementary),
            "m" => Ok(Basis::Monomial),
            "p" => Ok(Basis::PowerSum),
            other => Err(Error::UnknownBasis(other.to_string())),
        }
    }

    /// Bases in which the outer product is concatenation of partitions.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, Basis::Complete | Basis::Elementary | Basis::PowerSum)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Weight-cap marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    Exact,
    Capped(usize),
}

impl Cap {
    pub fn meet(self, other: Cap) -> Cap {
        match (self, other) {
            (Cap::Exact, c) | (c, Cap::Exact) => c,
            (Cap::Capped(a), Cap::Capped(b)) => Cap::Capped(a.min(b)),
        }
    }

    pub fn admits(self, weight: usize) -> bool {
        match self {
            Cap::Exact => true,
            Cap::Capped(n) => weight <= n,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
    cap: Cap,
}

impl PartialEq for SymFunc {
    /// Structural equality in a common basis; the cap marker is ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.terms == other.convert(self.basis).terms
        }
    }
}

impl Eq for SymFunc {}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
            cap: Cap::Exact,
        }
    }

    /// The unit `1 = b[]` (the same element in every basis).
    pub fn one(basis: Basis) -> Self {
        Self::term(basis, Partition::empty(), Rational::one())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, Rational::one())
    }

    pub fn schur(lambda: Partition) -> Self {
        Self::basis_element(Basis::Schur, lambda)
    }

    /// Convenience constructor for tests and examples; panics on
    /// non-canonical parts.
    pub fn s(parts: &[usize]) -> Self {
        Self::schur(Partition::new(parts.to_vec()).expect("canonical partition"))
    }

    pub fn p(parts: &[usize]) -> Self {
        Self::basis_element(
            Basis::PowerSum,
            Partition::new(parts.to_vec()).expect("canonical partition"),
        )
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: Rational) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(lambda, coeff);
        f
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut f = Self::zero(basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn cap(&self) -> Cap {
        self.cap
    }

    /// Marks the function with a cap and drops the terms above it.
    pub fn with_cap(mut self, cap: Cap) -> Self {
        self.cap = cap;
        if let Cap::Capped(n) = cap {
            self.terms.retain(|lambda, _| lambda.weight() <= n);
        }
        self
    }

    /// Drops terms of weight above `n` and marks the result capped at `n`.
    pub fn truncate(&self, n: usize) -> Self {
        self.clone().with_cap(self.cap.meet(Cap::Capped(n)))
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: Rational) {
        if coeff.is_zero() || !self.cap.admits(lambda.weight()) {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// The weight-`n` homogeneous component.
    pub fn component(&self, n: usize) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        out.cap = self.cap;
        for (lambda, c) in &self.terms {
            if lambda.weight() == n {
                out.terms.insert(lambda.clone(), c.clone());
            }
        }
        out
    }

    /// Weights that occur with a nonzero coefficient, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        g.dedup();
        g
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.basis);
        out.cap = self.cap;
        if c.is_zero() {
            return out;
        }
        for (lambda, a) in &self.terms {
            out.terms.insert(lambda.clone(), a * c);
        }
        out
    }

    /// Applies a linear map given on basis elements. The image is
    /// accumulated in `target`.
    pub fn map_linear(&self, target: Basis, mut image: impl FnMut(&Partition) -> SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(target).with_cap(self.cap);
        for (lambda, c) in &self.terms {
            let img = image(lambda);
            let img = if img.basis == target { img } else { img.convert(target) };
            out.cap = out.cap.meet(img.cap);
            for (mu, d) in img.terms {
                out.add_term(mu, c * d);
            }
        }
        let cap = out.cap;
        out.with_cap(cap)
    }

    pub fn convert(&self, target: Basis) -> SymFunc {
        transition::convert(self, target)
    }

    pub fn to_schur(&self) -> SymFunc {
        self.convert(Basis::Schur)
    }

    /// Same abstract symmetric function, possibly in different bases.
    pub fn same_function(&self, other: &SymFunc) -> bool {
        self.to_schur().terms == other.to_schur().terms
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;

    fn add(self, rhs: &SymFunc) -> SymFunc {
        let rhs = if rhs.basis == self.basis {
            rhs.clone()
        } else {
            rhs.convert(self.basis)
        };
        let mut out = self.clone().with_cap(self.cap.meet(rhs.cap));
        for (lambda, c) in rhs.terms {
            out.add_term(lambda, c);
        }
        out
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;

    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self + &(-rhs)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        self.scale(&-Rational::one())
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&Rational> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &Rational) -> SymFunc {
        self.scale(rhs)
    }
}

/// Schur scalar product: `(s_λ|s_μ) = δ_{λμ}`, bilinear.
pub fn schur_scalar(f: &SymFunc, g: &SymFunc) -> Rational {
    if f.basis == Basis::PowerSum && g.basis == Basis::PowerSum {
        // (p_λ|p_μ) = z_λ δ_{λμ}
        return f
            .terms
            .iter()
            .filter_map(|(lambda, a)| {
                g.terms
                    .get(lambda)
                    .map(|b| a * b * Rational::from_integer(lambda.z_value()))
            })
            .fold(Rational::zero(), |acc, x| acc + x);
    }
    let fs = f.to_schur();
    let gs = g.to_schur();
    fs.terms
        .iter()
        .filter_map(|(lambda, a)| gs.terms.get(lambda).map(|b| a * b))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// Convolutive inverse of the Schur scalar product on basis elements:
/// `(s_λ|s_μ)^{-1} = (-1)^{|μ|} δ_{λ,μ'}`.
pub fn schur_scalar_inverse(lambda: &Partition, mu: &Partition) -> i64 {
    if *lambda == mu.conjugate() {
        if mu.weight().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

pub(crate) fn write_coeff_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    body: Option<String>,
) -> fmt::Result {
    let negative = c.is_negative();
    let abs = c.abs();
    match (first, negative) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    match body {
        None => write!(f, "{abs}"),
        Some(b) if abs.is_one() => write!(f, "{b}"),
        Some(b) => write!(f, "{abs}*{b}"),
    }
}

impl fmt::Display for SymFunc {
    /// Text form `s[2,1] + 3*s[1,1,1] - 1/2*s[]`, the unit printed as a
    /// bare coefficient, terms in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let body = if lambda.is_empty() {
                None
            } else {
                Some(format!("{}{}", self.basis.letter(), lambda))
            };
            write_coeff_term(f, i == 0, c, body)?;
        }
        Ok(())
    }
}

pub(crate) use write_coeff_term as fmt_coeff_term;

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conversions_from_examples() {
        let h2 = SymFunc::basis_element(Basis::Complete, part(&[2]));
        assert_eq!(h2.to_schur(), SymFunc::s(&[2]));
        let e2 = SymFunc::basis_element(Basis::Elementary, part(&[2]));
        assert_eq!(e2.to_schur(), SymFunc::s(&[1, 1]));
        let p2 = SymFunc::p(&[2]);
        assert_eq!(p2.to_schur(), &SymFunc::s(&[2]) - &SymFunc::s(&[1, 1]));
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(schur_scalar(&SymFunc::s(&[2, 1]), &SymFunc::s(&[2, 1])), rat(1));
        assert_eq!(schur_scalar(&SymFunc::p(&[2]), &SymFunc::p(&[2])), rat(2));
        assert_eq!(schur_scalar(&SymFunc::s(&[2]), &SymFunc::s(&[1, 1])), rat(0));
        // mixed route agrees with the p-diagonal shortcut
        assert_eq!(
            schur_scalar(&SymFunc::p(&[2, 1]), &SymFunc::p(&[2, 1]).to_schur()),
            rat(2)
        );
    }

    #[test]
    fn scalar_inverse_examples() {
        assert_eq!(schur_scalar_inverse(&part(&[1, 1]), &part(&[2])), 1);
        assert_eq!(schur_scalar_inverse(&part(&[1]), &part(&[1])), -1);
        assert_eq!(schur_scalar_inverse(&part(&[2]), &part(&[2])), 0);
    }

    #[test]
    fn display_and_caps() {
        let f = &(&SymFunc::one(Basis::Schur) - &SymFunc::s(&[1])) + &SymFunc::s(&[1, 1]).scale(&rat(3));
        assert_eq!(f.to_string(), "1 - s[1] + 3*s[1,1]");
        assert_eq!(SymFunc::zero(Basis::Schur).to_string(), "0");
        let half = SymFunc::p(&[2]).scale(&rat_frac(-1, 2));
        assert_eq!(half.to_string(), "-1/2*p[2]");

        let capped = f.truncate(1);
        assert_eq!(capped.cap(), Cap::Capped(1));
        assert_eq!(capped.to_string(), "1 - s[1]");
        let sum = &capped + &SymFunc::s(&[3]);
        assert_eq!(sum.cap(), Cap::Capped(1));
        assert_eq!(sum.to_string(), "1 - s[1]");
    }

    #[test]
    fn no_stored_zeros() {
        let f = &SymFunc::s(&[2]) - &SymFunc::s(&[2]);
        assert!(f.is_zero());
        assert_eq!(f.num_terms(), 0);
    }
}
