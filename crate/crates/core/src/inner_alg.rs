//! The inner (Kronecker) structure: symmetric-group characters, the inner
//! product and coproduct through the power-sum basis, the inner unit and
//! counit, and substitution of `p_n` into power sums.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::memo::Memo;
use crate::partition::Partition;
use crate::symfunc::{Basis, Cap, Rational, SymFunc, TensorExp};

fn character_cache() -> &'static Memo<(Partition, Partition), i64> {
    static CACHE: OnceLock<Memo<(Partition, Partition), i64>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// Irreducible character `χ^λ` on the class of cycle type `μ`, by the
/// Murnaghan-Nakayama rule on beta-sets. Zero when the weights differ.
pub fn sn_character(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    *character_cache().get_or_compute(&(lambda.clone(), mu.clone()), || {
        let k = mu.parts()[0];
        let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
        let l = lambda.len();
        let beta: Vec<usize> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i)).collect();
        let mut total = 0;
        for (i, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let target = b - k;
            // beads jumped over while sliding b down to b - k
            let between = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (l - 1 - j))
                .filter(|&p| p > 0)
                .collect();
            let nu = Partition::new(parts).expect("beta-set yields a partition");
            let s = if between % 2 == 0 { 1 } else { -1 };
            total += s * sn_character(&nu, &rest);
        }
        total
    })
}

/// Kronecker product `p_λ ⋆ p_μ = δ_{λμ} z_λ p_λ`, extended bilinearly.
/// The result is expressed in the basis of `f`.
pub fn inner_product(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let fp = f.convert(Basis::PowerSum);
    let gp = g.convert(Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum).with_cap(f.cap().meet(g.cap()));
    for (lambda, a) in fp.terms() {
        let b = gp.coeff(lambda);
        if !b.is_zero() {
            out.add_term(lambda.clone(), a * b * Rational::from_integer(lambda.z_value()));
        }
    }
    out.convert(f.basis())
}

/// Inner coproduct `δ p_λ = p_λ ⊗ p_λ`, returned in the input basis.
pub fn inner_coproduct(f: &SymFunc) -> TensorExp {
    let fp = f.convert(Basis::PowerSum);
    let mut out = TensorExp::uniform(Basis::PowerSum, 2);
    for (lambda, c) in fp.terms() {
        out.add_term(vec![lambda.clone(), lambda.clone()], c.clone());
    }
    out.convert_slots(&[f.basis(), f.basis()])
}

/// The inner unit `1_m = Σ_n s_(n)`, truncated at `cap`.
pub fn inner_unit(cap: usize) -> SymFunc {
    SymFunc::from_terms(Basis::Schur, (0..=cap).map(|n| (Partition::row(n), Rational::one())))
        .with_cap(Cap::Capped(cap))
}

/// `ε^δ(p_λ) = 1`, extended linearly.
pub fn counit_inner(f: &SymFunc) -> Rational {
    f.convert(Basis::PowerSum)
        .terms()
        .fold(Rational::zero(), |acc, (_, c)| acc + c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `f ∘ p_n` (right) or `p_n ∘ f` (left): every `p_m` becomes `p_{nm}`.
/// Both sides agree; the result is in the power-sum basis.
pub fn plethysm_pn(f: &SymFunc, n: usize, _side: Side) -> SymFunc {
    let fp = f.convert(Basis::PowerSum);
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (lambda, c) in fp.terms() {
        out.add_term(lambda.scale_parts(n), c.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::symfunc::{rat, rat_frac};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_examples() {
        assert_eq!(sn_character(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(sn_character(&p(&[1, 1]), &p(&[2])), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[3])), -1);
        assert_eq!(sn_character(&p(&[2, 1]), &p(&[2])), 0);
        // dimension of the (3,2) irreducible of S_5
        assert_eq!(sn_character(&p(&[3, 2]), &p(&[1, 1, 1, 1, 1])), 5);
    }

    #[test]
    fn character_orthogonality() {
        for n in 0..=6 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let sum = parts.iter().fold(Rational::zero(), |acc, mu| {
                        acc + Rational::new((sn_character(a, mu) * sn_character(b, mu)).into(), mu.z_value())
                    });
                    assert_eq!(sum, if a == b { rat(1) } else { rat(0) });
                }
            }
        }
    }

    #[test]
    fn inner_examples() {
        assert_eq!(
            inner_product(&SymFunc::p(&[2]), &SymFunc::p(&[2])),
            SymFunc::p(&[2]).scale(&rat(2))
        );
        assert_eq!(
            inner_product(&SymFunc::s(&[2]), &SymFunc::s(&[1, 1])),
            SymFunc::s(&[1, 1])
        );
        assert_eq!(
            inner_product(&SymFunc::s(&[1, 1]), &SymFunc::s(&[1, 1])),
            SymFunc::s(&[2])
        );
        assert!(inner_product(&SymFunc::s(&[1]), &SymFunc::s(&[2])).is_zero());
    }

    #[test]
    fn inner_coproduct_examples() {
        assert_eq!(inner_coproduct(&SymFunc::p(&[3])).to_string(), "p[3]⊗p[3]");
        assert_eq!(
            inner_coproduct(&SymFunc::s(&[2])).to_string(),
            "s[2]⊗s[2] + s[1,1]⊗s[1,1]"
        );
        assert_eq!(inner_coproduct(&SymFunc::one(Basis::Schur)).to_string(), "1⊗1");
    }

    #[test]
    fn unit_and_counit() {
        assert_eq!(inner_unit(2).to_string(), "1 + s[1] + s[2]");
        assert_eq!(inner_unit(0).to_string(), "1");
        let f = SymFunc::s(&[2, 1]);
        assert_eq!(inner_product(&inner_unit(4), &f), f);
        assert_eq!(counit_inner(&SymFunc::p(&[2])), rat(1));
        assert_eq!(counit_inner(&SymFunc::s(&[2])), rat(1));
        assert_eq!(counit_inner(&SymFunc::s(&[1, 1])), rat(0));
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(plethysm_pn(&SymFunc::p(&[2]), 3, Side::Right), SymFunc::p(&[6]));
        let f = SymFunc::s(&[2, 1]);
        assert!(plethysm_pn(&f, 1, Side::Left).same_function(&f));
        let expected = &SymFunc::p(&[2, 2]).scale(&rat_frac(1, 2)) - &SymFunc::p(&[4]).scale(&rat_frac(1, 2));
        assert_eq!(plethysm_pn(&SymFunc::s(&[1, 1]), 2, Side::Right), expected);
    }
}
