//! Cliffordized products `x ∘_π y = Σ π(x(1) ⊗ y(1)) x(2) y(2)`, their
//! gauge transforms, the Newell-Littlewood product and the eight variants
//! mixing outer and inner structure maps.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::branching::BranchingOperator;
use crate::cohomology::{coboundary, convolve, Cochain};
use crate::error::{Error, Result};
use crate::inner_alg::{inner_coproduct, inner_product};
use crate::outer_hopf::{outer_product, schur_coproduct_terms, skew};
use crate::partition::{partitions_up_to, Partition};
use crate::series::SeriesId;
use crate::symfunc::{Basis, Rational, SymFunc};

fn require_pairing(pi: &Cochain) -> Result<()> {
    if pi.arity() != 2 {
        return Err(Error::ArityMismatch {
            left: 2,
            right: pi.arity(),
        });
    }
    Ok(())
}

/// Groups the outer coproduct of `f` by its first leg: `α ↦ f/α`.
fn split_outer(f: &SymFunc) -> BTreeMap<Partition, SymFunc> {
    let mut out: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    for (lambda, c) in f.to_schur().terms() {
        for (rest, alpha, k) in schur_coproduct_terms(lambda).iter() {
            out.entry(alpha.clone())
                .or_insert_with(|| SymFunc::zero(Basis::Schur))
                .add_term(rest.clone(), c * Rational::from_integer(BigInt::from(*k)));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Groups the inner coproduct of `f` (Schur legs) by its first leg.
fn split_inner(f: &SymFunc) -> BTreeMap<Partition, SymFunc> {
    let mut out: BTreeMap<Partition, SymFunc> = BTreeMap::new();
    for (slots, c) in inner_coproduct(&f.to_schur()).terms() {
        out.entry(slots[0].clone())
            .or_insert_with(|| SymFunc::zero(Basis::Schur))
            .add_term(slots[1].clone(), c.clone());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Σ π(f(1) ⊗ g(1)) · prod(f(2), g(2))` over the outer coproduct.
pub fn cliffordize_with(
    f: &SymFunc,
    g: &SymFunc,
    pi: &Cochain,
    prod: impl Fn(&SymFunc, &SymFunc) -> SymFunc,
) -> Result<SymFunc> {
    require_pairing(pi)?;
    Ok(pair_legs(&split_outer(f), &split_outer(g), pi, prod))
}

fn pair_legs(
    fl: &BTreeMap<Partition, SymFunc>,
    gl: &BTreeMap<Partition, SymFunc>,
    pi: &Cochain,
    prod: impl Fn(&SymFunc, &SymFunc) -> SymFunc,
) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (alpha, fa) in fl {
        for (beta, gb) in gl {
            let v = pi.value(&[alpha.clone(), beta.clone()]);
            if v.is_zero() {
                continue;
            }
            out = &out + &prod(fa, gb).scale(&v);
        }
    }
    out
}

/// The cliffordization of the outer product by a 2-cochain.
pub fn circle_product(f: &SymFunc, g: &SymFunc, pi: &Cochain) -> Result<SymFunc> {
    cliffordize_with(f, g, pi, outer_product)
}

/// Cliffordization by the gauged pairing `π * ∂φ`.
pub fn gauged_circle_product(f: &SymFunc, g: &SymFunc, pi: &Cochain, phi: &Cochain) -> Result<SymFunc> {
    let gauged = convolve(pi, &coboundary(phi)?)?;
    circle_product(f, g, &gauged)
}

/// The same product computed through branching operators:
/// `Φ^{-1}(Φ(f) ∘_π Φ(g))`.
pub fn gauged_via_branching(f: &SymFunc, g: &SymFunc, pi: &Cochain, phi: &Cochain) -> Result<SymFunc> {
    let op = BranchingOperator::new(phi.clone())?;
    let inner = circle_product(&op.apply(f), &op.apply(g), pi)?;
    Ok(op.inverse().apply(&inner))
}

/// Labels used when printing a Newell-Littlewood product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Orthogonal characters `[λ]`.
    O,
    /// Symplectic characters `<λ>`.
    Sp,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Flavor> {
        match s.trim().to_ascii_lowercase().as_str() {
            "o" | "orthogonal" => Ok(Flavor::O),
            "sp" | "symplectic" => Ok(Flavor::Sp),
            other => Err(Error::Domain(format!("unknown flavor `{other}`"))),
        }
    }
}

/// Expansion of a Newell-Littlewood product in group characters.
#[derive(Clone, Debug, PartialEq)]
pub struct NlProduct {
    pub flavor: Flavor,
    pub expansion: SymFunc,
}

impl fmt::Display for NlProduct {
    /// `[3] + [2,1] + [1]`, heaviest terms first; the empty partition is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.expansion.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        terms.sort_by(|(a, _), (b, _)| b.weight().cmp(&a.weight()).then_with(|| a.cmp(b)));
        let (open, close) = match self.flavor {
            Flavor::O => ('[', ']'),
            Flavor::Sp => ('<', '>'),
        };
        for (i, (lambda, c)) in terms.into_iter().enumerate() {
            let parts = if lambda.is_empty() {
                "0".to_string()
            } else {
                lambda
                    .parts()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            };
            let body = format!("{open}{parts}{close}");
            crate::symfunc::fmt_coeff_term(f, i == 0, c, Some(body))?;
        }
        Ok(())
    }
}

/// `Σ_ζ (s_λ/ζ)(s_μ/ζ)`, summed directly.
pub fn nl_direct(lambda: &Partition, mu: &Partition) -> SymFunc {
    let sl = SymFunc::schur(lambda.clone());
    let sm = SymFunc::schur(mu.clone());
    let mut out = SymFunc::zero(Basis::Schur);
    for zeta in partitions_up_to(lambda.weight().min(mu.weight())) {
        if !lambda.contains(&zeta) || !mu.contains(&zeta) {
            continue;
        }
        let z = SymFunc::schur(zeta);
        out = &out + &outer_product(&skew(&sl, &z), &skew(&sm, &z));
    }
    out
}

/// `/X(/X^{-1} s_λ · /X^{-1} s_μ)` for `X ∈ {B, D, F, H}`, the series whose
/// branching obeys the ζ-sum product rule.
pub fn nl_via_gauge(lambda: &Partition, mu: &Partition, id: SeriesId) -> Result<SymFunc> {
    if !matches!(id, SeriesId::B | SeriesId::D | SeriesId::F | SeriesId::H) {
        return Err(Error::Domain(format!(
            "series {id} does not gauge the Newell-Littlewood product"
        )));
    }
    let op = BranchingOperator::series(id);
    let back = BranchingOperator::series(id.inverse());
    Ok(op.apply(&outer_product(
        &back.apply(&SymFunc::schur(lambda.clone())),
        &back.apply(&SymFunc::schur(mu.clone())),
    )))
}

/// The branching route: `/D(/C s_λ · /C s_μ)` for `O`, `/B(/A s_λ · /A s_μ)`
/// for `Sp`.
pub fn nl_via_branching(lambda: &Partition, mu: &Partition, flavor: Flavor) -> SymFunc {
    let id = match flavor {
        Flavor::O => SeriesId::D,
        Flavor::Sp => SeriesId::B,
    };
    nl_via_gauge(lambda, mu, id).expect("D and B gauge")
}

/// The Newell-Littlewood product of two group characters.
pub fn nl_product(lambda: &Partition, mu: &Partition, flavor: Flavor) -> NlProduct {
    NlProduct {
        flavor,
        expansion: nl_direct(lambda, mu),
    }
}

/// How `f[1]` is read when it appears in both the pairing and the product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reading {
    /// The same leg in both places, over Schur Sweedler terms.
    #[default]
    Literal,
    /// The second leg in the product.
    Second,
}

impl FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Reading> {
        match s.trim().to_ascii_lowercase().as_str() {
            "literal" => Ok(Reading::Literal),
            "second" => Ok(Reading::Second),
            other => Err(Error::Domain(format!("unknown reading `{other}`"))),
        }
    }
}

#[derive(Clone, Copy)]
enum Leg {
    Outer,
    Inner,
}

#[derive(Clone, Copy)]
enum Mult {
    Outer,
    Inner,
}

fn variant_shape(k: u8) -> Result<(Leg, Leg, Mult)> {
    use Leg as L;
    Ok(match k {
        1 => (L::Outer, L::Outer, Mult::Outer),
        2 => (L::Outer, L::Outer, Mult::Inner),
        3 => (L::Inner, L::Outer, Mult::Outer),
        4 => (L::Inner, L::Outer, Mult::Inner),
        5 => (L::Outer, L::Inner, Mult::Outer),
        6 => (L::Outer, L::Inner, Mult::Inner),
        7 => (L::Inner, L::Inner, Mult::Outer),
        8 => (L::Inner, L::Inner, Mult::Inner),
        _ => return Err(Error::Domain(format!("variant {k} is not in 1..=8"))),
    })
}

/// The variant `∘k` of the cliffordized product; see [`grade_contract`].
pub fn variant_product(k: u8, f: &SymFunc, g: &SymFunc, pi: &Cochain, reading: Reading) -> Result<SymFunc> {
    require_pairing(pi)?;
    let (lf, lg, mult) = variant_shape(k)?;
    let prod = |a: &SymFunc, b: &SymFunc| match mult {
        Mult::Outer => outer_product(a, b),
        Mult::Inner => inner_product(&a.to_schur(), &b.to_schur()),
    };
    if k >= 7 && reading == Reading::Literal {
        let mut out = SymFunc::zero(Basis::Schur);
        let df = inner_coproduct(&f.to_schur());
        let dg = inner_coproduct(&g.to_schur());
        for (a, c) in df.terms() {
            for (b, d) in dg.terms() {
                let v = pi.value(&[a[0].clone(), b[0].clone()]);
                if v.is_zero() {
                    continue;
                }
                let term = prod(&SymFunc::schur(a[0].clone()), &SymFunc::schur(b[0].clone()));
                out = &out + &term.scale(&(v * c * d));
            }
        }
        return Ok(out);
    }
    let split = |x: &SymFunc, leg: Leg| match leg {
        Leg::Outer => split_outer(x),
        Leg::Inner => split_inner(x),
    };
    Ok(pair_legs(&split(f, lf), &split(g, lg), pi, prod))
}

/// Grades allowed in `s_λ ∘k s_μ` for `|λ| = n`, `|μ| = m` when `π` pairs
/// only equal grades.
pub fn grade_contract(k: u8, n: usize, m: usize) -> Result<Vec<usize>> {
    variant_shape(k)?;
    let v = match k {
        1 => (0..=n.min(m)).map(|r| n + m - 2 * r).collect(),
        2 if n == m => (0..=n).collect(),
        3 if m >= n => vec![m],
        4 if m == 2 * n => vec![n],
        5 if n >= m => vec![n],
        6 if n == 2 * m => vec![m],
        7 if n == m => vec![2 * n],
        8 if n == m => vec![n],
        _ => Vec::new(),
    };
    Ok(v)
}
