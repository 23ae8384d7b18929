//! Basis conversions through per-weight transition matrices.
//!
//! Matrices follow the row convention `u_λ = Σ_μ M(u,v)_{λμ} v_μ`, rows and
//! columns indexed by `partitions_of(n)`. Every basis is linked to the
//! Schur basis in both directions; other pairs compose through it.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{Basis, Rational, SymFunc};
use crate::inner_alg::sn_character;
use crate::memo::Memo;
use crate::outer_hopf::lr_product_terms;
use crate::partition::{partitions_of, Partition};

/// Dense exact matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                let v = a.get(col, j) / &p;
                a.set(col, j, v);
                let w = inv.get(col, j) / &p;
                inv.set(col, j, w);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let v = a.get(r, j) - &factor * a.get(col, j);
                    a.set(r, j, v);
                    let w = inv.get(r, j) - &factor * inv.get(col, j);
                    inv.set(r, j, w);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn index_cache() -> &'static Memo<usize, HashMap<Partition, usize>> {
    static CACHE: OnceLock<Memo<usize, HashMap<Partition, usize>>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// Position of each partition of `n` in canonical order.
pub(crate) fn partition_index(n: usize) -> Arc<HashMap<Partition, usize>> {
    index_cache().get_or_compute(&n, || {
        partitions_of(n).into_iter().enumerate().map(|(i, p)| (p, i)).collect()
    })
}

/// `(basis, toward_schur, weight)`.
type BlockKey = (Basis, bool, usize);

fn block_cache() -> &'static Memo<BlockKey, RatMatrix> {
    static CACHE: OnceLock<Memo<BlockKey, RatMatrix>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// `M(b, s)` at weight `n`: row λ is the Schur expansion of `b_λ`.
fn to_schur_block(basis: Basis, n: usize) -> Arc<RatMatrix> {
    block_cache().get_or_compute(&(basis, true, n), || {
        let parts = partitions_of(n);
        let index = partition_index(n);
        let size = parts.len();
        match basis {
            Basis::Schur => RatMatrix::identity(size),
            Basis::Complete | Basis::Elementary => {
                let mut m = RatMatrix::zeros(size, size);
                for (i, lambda) in parts.iter().enumerate() {
                    let factors: Vec<Partition> = lambda
                        .parts()
                        .iter()
                        .map(|&k| {
                            if basis == Basis::Complete {
                                Partition::row(k)
                            } else {
                                Partition::column(k)
                            }
                        })
                        .collect();
                    for (mu, c) in product_of_schurs(&factors) {
                        m.set(i, index[&mu], Rational::from_integer(BigInt::from(c)));
                    }
                }
                m
            }
            Basis::Monomial => from_schur_block(Basis::Monomial, n)
                .inverse()
                .expect("Kostka matrix is unitriangular"),
            Basis::PowerSum => {
                let mut m = RatMatrix::zeros(size, size);
                for (i, mu) in parts.iter().enumerate() {
                    for (j, lambda) in parts.iter().enumerate() {
                        let chi = sn_character(lambda, mu);
                        if chi != 0 {
                            m.set(i, j, Rational::from_integer(BigInt::from(chi)));
                        }
                    }
                }
                m
            }
        }
    })
}

/// `M(s, b)` at weight `n`: row λ is the `b`-expansion of `s_λ`.
fn from_schur_block(basis: Basis, n: usize) -> Arc<RatMatrix> {
    block_cache().get_or_compute(&(basis, false, n), || {
        let parts = partitions_of(n);
        let index = partition_index(n);
        let size = parts.len();
        match basis {
            Basis::Schur => RatMatrix::identity(size),
            Basis::Complete => {
                let mut m = RatMatrix::zeros(size, size);
                for (i, lambda) in parts.iter().enumerate() {
                    for (mu, c) in jacobi_trudi(lambda) {
                        m.set(i, index[&mu], Rational::from_integer(BigInt::from(c)));
                    }
                }
                m
            }
            Basis::Elementary => {
                let mut m = RatMatrix::zeros(size, size);
                for (i, lambda) in parts.iter().enumerate() {
                    for (mu, c) in jacobi_trudi(&lambda.conjugate()) {
                        m.set(i, index[&mu], Rational::from_integer(BigInt::from(c)));
                    }
                }
                m
            }
            // s_λ = Σ_μ K_{λμ} m_μ and K_{λμ} is the coefficient of s_λ in h_μ.
            Basis::Monomial => to_schur_block(Basis::Complete, n).transpose(),
            Basis::PowerSum => {
                let mut m = RatMatrix::zeros(size, size);
                for (i, lambda) in parts.iter().enumerate() {
                    for (j, mu) in parts.iter().enumerate() {
                        let chi = sn_character(lambda, mu);
                        if chi != 0 {
                            let v = Rational::new(BigInt::from(chi), mu.z_value());
                            m.set(i, j, v);
                        }
                    }
                }
                m
            }
        }
    })
}

/// Schur expansion of `s_{f1} · s_{f2} · …` with integer coefficients.
fn product_of_schurs(factors: &[Partition]) -> BTreeMap<Partition, i64> {
    let mut acc: BTreeMap<Partition, i64> = BTreeMap::new();
    acc.insert(Partition::empty(), 1);
    for factor in factors {
        let mut next = BTreeMap::new();
        for (lambda, c) in &acc {
            for (nu, k) in lr_product_terms(lambda, factor).iter() {
                *next.entry(nu.clone()).or_insert(0) += c * (*k as i64);
            }
        }
        acc = next;
    }
    acc
}

/// Expansion of `det(h_{λ_i - i + j})` as a signed sum of `h_μ`.
fn jacobi_trudi(lambda: &Partition) -> BTreeMap<Partition, i64> {
    fn walk(
        lambda: &[usize],
        row: usize,
        used: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        inversions: usize,
        out: &mut BTreeMap<Partition, i64>,
    ) {
        let l = lambda.len();
        if row == l {
            let (mu, _) = Partition::from_unsorted(chosen.clone());
            let s = if inversions.is_multiple_of(2) { 1 } else { -1 };
            let e = out.entry(mu).or_insert(0);
            *e += s;
            return;
        }
        for col in 0..l {
            if used[col] {
                continue;
            }
            // entry h_{λ_row - row + col}, zero for negative index
            let index = lambda[row] as isize - row as isize + col as isize;
            if index < 0 {
                continue;
            }
            let extra = used[col + 1..].iter().filter(|&&u| u).count();
            used[col] = true;
            chosen.push(index as usize);
            walk(lambda, row + 1, used, chosen, inversions + extra, out);
            chosen.pop();
            used[col] = false;
        }
    }
    let mut out = BTreeMap::new();
    let mut used = vec![false; lambda.len()];
    walk(lambda.parts(), 0, &mut used, &mut Vec::new(), 0, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

/// Transition matrix `M(from, to)` at weight `n`.
pub fn transition_matrix(from: Basis, to: Basis, n: usize) -> RatMatrix {
    if from == to {
        return RatMatrix::identity(partitions_of(n).len());
    }
    if to == Basis::Schur {
        return (*to_schur_block(from, n)).clone();
    }
    if from == Basis::Schur {
        return (*from_schur_block(to, n)).clone();
    }
    to_schur_block(from, n).mul(&from_schur_block(to, n))
}

/// `b`-expansion of the single Schur function `s_λ`.
pub fn schur_in_basis(lambda: &Partition, target: Basis) -> SymFunc {
    let n = lambda.weight();
    let block = from_schur_block(target, n);
    let i = partition_index(n)[lambda];
    row_to_symfunc(&block, i, n, target)
}

/// Schur expansion of the basis element `b_λ`.
pub fn to_schur_expansion(basis: Basis, lambda: &Partition) -> SymFunc {
    let n = lambda.weight();
    let block = to_schur_block(basis, n);
    let i = partition_index(n)[lambda];
    row_to_symfunc(&block, i, n, Basis::Schur)
}

fn row_to_symfunc(m: &RatMatrix, i: usize, n: usize, basis: Basis) -> SymFunc {
    let parts = partitions_of(n);
    SymFunc::from_terms(
        basis,
        parts.into_iter().enumerate().map(|(j, mu)| (mu, m.get(i, j).clone())),
    )
}

pub(super) fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis == target {
        return f.clone();
    }
    let mut by_weight: BTreeMap<usize, Vec<(&Partition, &Rational)>> = BTreeMap::new();
    for (lambda, c) in &f.terms {
        by_weight.entry(lambda.weight()).or_default().push((lambda, c));
    }
    let mut out = SymFunc::zero(target).with_cap(f.cap);
    for (n, terms) in by_weight {
        let index = partition_index(n);
        let size = index.len();
        let mut v = vec![Rational::zero(); size];
        for (lambda, c) in terms {
            v[index[lambda]] = c.clone();
        }
        if f.basis != Basis::Schur {
            v = apply_row(&v, &to_schur_block(f.basis, n));
        }
        if target != Basis::Schur {
            v = apply_row(&v, &from_schur_block(target, n));
        }
        for (mu, c) in partitions_of(n).into_iter().zip(v) {
            out.add_term(mu, c);
        }
    }
    out
}

fn apply_row(v: &[Rational], m: &RatMatrix) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); m.cols()];
    for (i, a) in v.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            let b = m.get(i, j);
            if !b.is_zero() {
                *slot += a * b;
            }
        }
    }
    out
}

/// Kostka number `K_{μλ} = (s_μ | h_λ)`: the coefficient of `s_μ` in `h_λ`.
pub fn kostka(mu: &Partition, lambda: &Partition) -> u64 {
    if mu.weight() != lambda.weight() {
        return 0;
    }
    let n = mu.weight();
    let index = partition_index(n);
    let block = to_schur_block(Basis::Complete, n);
    block
        .get(index[lambda], index[mu])
        .to_integer()
        .to_u64()
        .expect("Kostka numbers are non-negative integers")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    ZeroOne,
    NonNegative,
}

/// Counts matrices with entries in {0,1} (or ℕ) whose row sums are `λ`
/// and column sums are `μ`, by direct enumeration.
pub fn matrix_count_check(kind: MatrixKind, lambda: &Partition, mu: &Partition) -> u64 {
    fn rows(kind: MatrixKind, row_sums: &[usize], cols: &mut Vec<usize>, row: usize) -> u64 {
        if row == row_sums.len() {
            return u64::from(cols.iter().all(|&c| c == 0));
        }
        let mut total = 0;
        fill_row(kind, row_sums, cols, row, 0, row_sums[row], &mut total);
        total
    }
    fn fill_row(
        kind: MatrixKind,
        row_sums: &[usize],
        cols: &mut Vec<usize>,
        row: usize,
        col: usize,
        remaining: usize,
        total: &mut u64,
    ) {
        if col == cols.len() {
            if remaining == 0 {
                *total += rows(kind, row_sums, cols, row + 1);
            }
            return;
        }
        let max = match kind {
            MatrixKind::ZeroOne => 1,
            MatrixKind::NonNegative => remaining,
        }
        .min(cols[col])
        .min(remaining);
        for v in 0..=max {
            cols[col] -= v;
            fill_row(kind, row_sums, cols, row, col + 1, remaining - v, total);
            cols[col] += v;
        }
    }
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let mut cols = mu.parts().to_vec();
    rows(kind, lambda.parts(), &mut cols, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ints(m: &RatMatrix) -> Vec<Vec<i64>> {
        m.to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_integer().to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn weight_two_blocks() {
        // h_2 = s_2, h_11 = s_2 + s_11
        assert_eq!(
            ints(&transition_matrix(Basis::Complete, Basis::Schur, 2)),
            vec![vec![1, 0], vec![1, 1]]
        );
        assert_eq!(
            ints(&transition_matrix(Basis::Schur, Basis::Complete, 2)),
            vec![vec![1, 0], vec![-1, 1]]
        );
        assert_eq!(
            *transition_matrix(Basis::Elementary, Basis::Monomial, 2).get(1, 1),
            rat(2)
        );
        for b in Basis::ALL {
            assert_eq!(transition_matrix(b, b, 4), RatMatrix::identity(5));
        }
    }

    #[test]
    fn composition_through_any_basis() {
        for n in 0..=5 {
            for a in Basis::ALL {
                for c in Basis::ALL {
                    let direct = transition_matrix(a, c, n);
                    for b in Basis::ALL {
                        let via = transition_matrix(a, b, n).mul(&transition_matrix(b, c, n));
                        assert_eq!(direct, via, "{a}->{b}->{c} at {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka(&p(&[3, 2]), &p(&[3, 2])), 1);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])), 0);
        assert_eq!(kostka(&p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn matrix_counts() {
        assert_eq!(matrix_count_check(MatrixKind::ZeroOne, &p(&[1, 1]), &p(&[1, 1])), 2);
        assert_eq!(matrix_count_check(MatrixKind::NonNegative, &p(&[2]), &p(&[2])), 1);
        assert_eq!(matrix_count_check(MatrixKind::ZeroOne, &p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(matrix_count_check(MatrixKind::ZeroOne, &p(&[2]), &p(&[1])), 0);
    }

    #[test]
    fn jacobi_trudi_column() {
        // s_{111} = h_{111} - 2 h_{21} + h_3
        let jt = jacobi_trudi(&p(&[1, 1, 1]));
        assert_eq!(jt[&p(&[1, 1, 1])], 1);
        assert_eq!(jt[&p(&[2, 1])], -2);
        assert_eq!(jt[&p(&[3])], 1);
    }
}
