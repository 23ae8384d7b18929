//! Slow reference computations that share no code path with the kernel's
//! tableau and transition-matrix machinery. Used by the tests and by
//! `selftest`.
//!
//! Symmetric polynomials are recovered from their dominant monomials
//! (exponent vectors that are partitions): if `f = Σ a_κ s_κ` then
//! `[x^ν] f = Σ_κ a_κ K_{κν}`, which is unitriangular in lex order.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use crate::memo::Memo;
use crate::outer_hopf::{outer_product, skew};
use crate::partition::{partitions_of, Partition};
use crate::series::SeriesId;
use crate::symfunc::{Basis, SymFunc};

/// A polynomial `Σ c x^e` keyed by exponent vectors of fixed length.
pub type Poly = HashMap<Vec<u8>, i64>;

/// `p(n)` by Euler's pentagonal-number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let s = if k % 2 == 1 { 1 } else { -1 };
            acc += s * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += s * p[m - g2];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p[n] as u64
}

fn cells(shape: &[usize]) -> Vec<(usize, usize)> {
    shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect()
}

/// Visits every semistandard filling of `shape` with entries `< letters`,
/// in row-major order.
fn for_each_ssyt(shape: &[usize], letters: usize, visit: &mut impl FnMut(&[Vec<usize>])) {
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        letters: usize,
        grid: &mut Vec<Vec<usize>>,
        visit: &mut impl FnMut(&[Vec<usize>]),
    ) {
        if k == cells.len() {
            visit(grid);
            return;
        }
        let (r, c) = cells[k];
        let mut lo = if c > 0 { grid[r][c - 1] } else { 0 };
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..letters {
            grid[r][c] = v;
            go(k + 1, cells, letters, grid, visit);
        }
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    go(0, &cells(shape), letters, &mut grid, visit);
}

/// Number of semistandard tableaux of shape `shape` and content `content`
/// (any composition), by exhaustive filling.
pub fn ssyt_count(shape: &Partition, content: &[usize]) -> u64 {
    if shape.weight() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut count = 0u64;
    for_each_ssyt(shape.parts(), content.len(), &mut |grid| {
        let mut used = vec![0usize; content.len()];
        for row in grid {
            for &v in row {
                used[v] += 1;
            }
        }
        if used == content {
            count += 1;
        }
    });
    count
}

fn ssyt_count_cached(shape: &Partition, content: &Partition) -> u64 {
    static CACHE: OnceLock<Memo<(Partition, Partition), u64>> = OnceLock::new();
    *CACHE
        .get_or_init(Memo::new)
        .get_or_compute(&(shape.clone(), content.clone()), || ssyt_count(shape, content.parts()))
}

fn schur_polynomial_cached(lambda: &Partition, nvars: usize) -> Arc<Poly> {
    static CACHE: OnceLock<Memo<(Partition, usize), Poly>> = OnceLock::new();
    CACHE
        .get_or_init(Memo::new)
        .get_or_compute(&(lambda.clone(), nvars), || schur_polynomial(lambda, nvars))
}

/// `s_λ(x_1, …, x_n)` as an explicit polynomial.
pub fn schur_polynomial(lambda: &Partition, nvars: usize) -> Poly {
    let mut poly = Poly::new();
    for_each_ssyt(lambda.parts(), nvars, &mut |grid| {
        let mut e = vec![0u8; nvars];
        for row in grid {
            for &v in row {
                e[v] += 1;
            }
        }
        *poly.entry(e).or_insert(0) += 1;
    });
    poly
}

pub fn poly_mul(a: &Poly, b: &Poly, max_degree: usize) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        let da: usize = ea.iter().map(|&x| x as usize).sum();
        for (eb, cb) in b {
            let db: usize = eb.iter().map(|&x| x as usize).sum();
            if da + db > max_degree {
                continue;
            }
            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn exponent(nu: &Partition, nvars: usize) -> Vec<u8> {
    let mut e = vec![0u8; nvars];
    for (i, &p) in nu.parts().iter().enumerate() {
        e[i] = p as u8;
    }
    e
}

/// Schur coefficients of a homogeneous symmetric function of degree `n`
/// from its dominant monomial coefficients, assuming at least `n`
/// variables were used.
pub fn decompose_dominant(n: usize, dominant: impl Fn(&Partition) -> i64) -> BTreeMap<Partition, i64> {
    let parts = partitions_of(n); // lex-decreasing
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for nu in &parts {
        let mut c = dominant(nu);
        for (kappa, a) in &out {
            c -= a * ssyt_count_cached(kappa, nu) as i64;
        }
        if c != 0 {
            out.insert(nu.clone(), c);
        }
    }
    out
}

/// Schur expansion of a symmetric polynomial in enough variables.
pub fn decompose_poly(poly: &Poly, nvars: usize, max_degree: usize) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    for n in 0..=max_degree.min(nvars) {
        let part = decompose_dominant(n, |nu| poly.get(&exponent(nu, nvars)).copied().unwrap_or(0));
        out.extend(part);
    }
    out
}

/// `s_λ s_μ = Σ c_ν s_ν` by multiplying Schur polynomials in `|λ|+|μ|`
/// variables.
pub fn lr_oracle(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let n = lambda.weight() + mu.weight();
    let nvars = n.max(1);
    let a = schur_polynomial_cached(lambda, nvars);
    let b = schur_polynomial_cached(mu, nvars);
    decompose_dominant(n, |nu| {
        let target = exponent(nu, nvars);
        a.iter()
            .filter_map(|(ea, ca)| {
                let rest: Option<Vec<u8>> = ea.iter().zip(&target).map(|(x, t)| t.checked_sub(*x)).collect();
                rest.and_then(|r| b.get(&r)).map(|cb| ca * cb)
            })
            .sum()
    })
}

/// Coefficient of `x^ν` in `p_ρ`: ways of sending each part of `ρ` to a
/// variable so that variable `i` receives total `ν_i`.
pub fn power_sum_dominant(rho: &Partition, nu: &Partition) -> i64 {
    fn go(parts: &[usize], room: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), i64>) -> i64 {
        if parts.is_empty() {
            return i64::from(room.iter().all(|&r| r == 0));
        }
        let key = (parts.len(), room.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= parts[0] {
                room[i] -= parts[0];
                total += go(&parts[1..], room, memo);
                room[i] += parts[0];
            }
        }
        memo.insert(key, total);
        total
    }
    let mut room = nu.parts().to_vec();
    go(rho.parts(), &mut room, &mut HashMap::new())
}

/// `χ^λ(ρ)` read off `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
pub fn character_oracle(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.weight() != rho.weight() {
        return 0;
    }
    decompose_dominant(rho.weight(), |nu| power_sum_dominant(rho, nu))
        .get(lambda)
        .copied()
        .unwrap_or(0)
}

/// Kronecker coefficient `g_{λμν} = Σ_ρ χ^λ(ρ) χ^μ(ρ) χ^ν(ρ) / z_ρ`.
pub fn kronecker_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return 0;
    }
    let mut num = num_rational::BigRational::from_integer(0.into());
    for rho in partitions_of(n) {
        let c = character_oracle(lambda, &rho) * character_oracle(mu, &rho) * character_oracle(nu, &rho);
        num += num_rational::BigRational::new(c.into(), rho.z_value());
    }
    assert!(num.is_integer(), "Kronecker coefficient must be integral");
    i64::try_from(num.to_integer()).expect("small")
}

fn geometric(term: Vec<u8>, sign: i64, max_degree: usize) -> Poly {
    // 1/(1 - sign·x^term), truncated
    let deg: usize = term.iter().map(|&x| x as usize).sum();
    let mut out = Poly::new();
    let mut k = 0;
    while k * deg <= max_degree {
        let e: Vec<u8> = term.iter().map(|&x| x * k as u8).collect();
        out.insert(e, sign.pow(k as u32));
        k += 1;
    }
    out
}

fn linear(term: Vec<u8>, sign: i64) -> Poly {
    // 1 + sign·x^term
    let n = term.len();
    let mut out = Poly::new();
    out.insert(vec![0; n], 1);
    out.insert(term, sign);
    out
}

/// Schur expansion of a series through weight `cap`, computed from its
/// generating product in `cap` variables. `None` for the product series.
pub fn series_oracle(id: SeriesId, cap: usize) -> Option<BTreeMap<Partition, i64>> {
    use SeriesId::*;
    let nvars = cap.max(1);
    let unit = |i: usize, j: usize| {
        let mut e = vec![0u8; nvars];
        e[i] += 1;
        e[j] += 1;
        e
    };
    let single = |i: usize, k: u8| {
        let mut e = vec![0u8; nvars];
        e[i] = k;
        e
    };
    let mut factors: Vec<Poly> = Vec::new();
    match id {
        L => (0..nvars).for_each(|i| factors.push(linear(single(i, 1), -1))),
        M => (0..nvars).for_each(|i| factors.push(geometric(single(i, 1), 1, cap))),
        P => (0..nvars).for_each(|i| factors.push(geometric(single(i, 1), -1, cap))),
        Q => (0..nvars).for_each(|i| factors.push(linear(single(i, 1), 1))),
        V => (0..nvars).for_each(|i| factors.push(linear(single(i, 2), -1))),
        W => (0..nvars).for_each(|i| factors.push(geometric(single(i, 2), 1, cap))),
        A | B | C | D => {
            for i in 0..nvars {
                let start = if matches!(id, C | D) { i } else { i + 1 };
                for j in start..nvars {
                    factors.push(if matches!(id, A | C) {
                        linear(unit(i, j), -1)
                    } else {
                        geometric(unit(i, j), 1, cap)
                    });
                }
            }
        }
        E | F | G | H | R | S => return None,
    }
    let mut acc: Poly = Poly::new();
    acc.insert(vec![0; nvars], 1);
    for f in &factors {
        acc = poly_mul(&acc, f, cap);
    }
    Some(decompose_poly(&acc, nvars, cap))
}

/// Antipode by the graded recursion `S(s_λ) = -Σ_{α ⊊ λ} S(s_α)·s_{λ/α}`.
pub fn antipode_recursive(lambda: &Partition, memo: &mut HashMap<Partition, SymFunc>) -> SymFunc {
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let result = if lambda.is_empty() {
        SymFunc::one(Basis::Schur)
    } else {
        let sl = SymFunc::schur(lambda.clone());
        let mut acc = SymFunc::zero(Basis::Schur);
        for n in 0..lambda.weight() {
            for alpha in partitions_of(n) {
                if !lambda.contains(&alpha) {
                    continue;
                }
                let s_alpha = antipode_recursive(&alpha, memo);
                let rest = skew(&sl, &SymFunc::schur(alpha));
                acc = &acc - &outer_product(&s_alpha, &rest);
            }
        }
        acc
    };
    memo.insert(lambda.clone(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn counts() {
        let known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &k) in known.iter().enumerate() {
            assert_eq!(partition_count(n), k);
        }
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[2, 1]), 1);
        assert_eq!(ssyt_count(&p(&[2, 1]), &[1, 2]), 1);
    }

    #[test]
    fn lr_examples() {
        let c = lr_oracle(&p(&[2]), &p(&[1]));
        assert_eq!(c.get(&p(&[2, 1])), Some(&1));
        assert_eq!(c.get(&p(&[3])), Some(&1));
        assert_eq!(lr_oracle(&p(&[2]), &p(&[2])).get(&p(&[3, 1])), Some(&1));
        assert_eq!(lr_oracle(&p(&[2, 1]), &p(&[2, 1])).get(&p(&[3, 2, 1])), Some(&2));
    }

    #[test]
    fn characters() {
        assert_eq!(character_oracle(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(character_oracle(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(character_oracle(&p(&[1, 1]), &p(&[2])), -1);
        assert_eq!(kronecker_oracle(&p(&[2, 1]), &p(&[2, 1]), &p(&[3])), 1);
    }

    #[test]
    fn series_small() {
        let d = series_oracle(SeriesId::D, 2).unwrap();
        assert_eq!(d.get(&p(&[2])), Some(&1));
        assert_eq!(d.get(&p(&[1, 1])), None);
        let a = series_oracle(SeriesId::A, 2).unwrap();
        assert_eq!(a.get(&p(&[1, 1])), Some(&-1));
    }

    #[test]
    fn antipode_matches_closed_form() {
        let mut memo = HashMap::new();
        let s = antipode_recursive(&p(&[2, 1]), &mut memo);
        assert_eq!(s, SymFunc::s(&[2, 1]).scale(&crate::symfunc::rat(-1)));
        assert_eq!(antipode_recursive(&p(&[2]), &mut memo), SymFunc::s(&[1, 1]));
    }
}
