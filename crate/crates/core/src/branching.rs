//! Branching operators `/Φ = (φ ⊗ Id) ∘ Δ` built from 1-cochains, the
//! deformed product `M_φ`, and the product identities satisfied by the
//! series operators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cohomology::{invert, Cochain};
use crate::error::{Error, Result};
use crate::outer_hopf::{counit_outer, outer_product, schur_coproduct_terms, skew};
use crate::partition::{partitions_up_to, Partition};
use crate::series::SeriesId;
use crate::symfunc::{sign, Basis, Rational, SymFunc};

/// `/Φ(s_λ) = Σ_α φ(s_α) s_{λ/α}`.
#[derive(Clone, Debug)]
pub struct BranchingOperator {
    cochain: Cochain,
}

impl BranchingOperator {
    pub fn new(cochain: Cochain) -> Result<Self> {
        if cochain.arity() != 1 {
            return Err(Error::ArityMismatch {
                left: 1,
                right: cochain.arity(),
            });
        }
        Ok(BranchingOperator { cochain })
    }

    /// Skewing by a series.
    pub fn series(id: SeriesId) -> Self {
        BranchingOperator {
            cochain: Cochain::series(id),
        }
    }

    pub fn identity() -> Self {
        BranchingOperator {
            cochain: Cochain::counit(1),
        }
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        let fs = f.to_schur();
        let mut out = SymFunc::zero(Basis::Schur).with_cap(f.cap());
        for (lambda, c) in fs.terms() {
            for (rest, alpha, k) in schur_coproduct_terms(lambda).iter() {
                let v = self.cochain.value(std::slice::from_ref(alpha));
                if !v.is_zero() {
                    out.add_term(rest.clone(), c * v * Rational::from_integer(BigInt::from(*k)));
                }
            }
        }
        out
    }

    /// The operator built on the convolution inverse `φ^{-1}`.
    pub fn inverse(&self) -> BranchingOperator {
        BranchingOperator {
            cochain: invert(&self.cochain),
        }
    }
}

/// `f ∘_φ g = Φ^{-1}(Φ(f) · Φ(g))`.
pub fn deformed_product(phi: &Cochain, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let op = BranchingOperator::new(phi.clone())?;
    Ok(op.inverse().apply(&outer_product(&op.apply(f), &op.apply(g))))
}

/// `ε(Φ(f))`, which equals `φ(f)`.
pub fn deformed_counit(phi: &Cochain, f: &SymFunc) -> Result<Rational> {
    let op = BranchingOperator::new(phi.clone())?;
    Ok(counit_outer(&op.apply(f)))
}

/// `ε(s_1 ∘_φ s_1) = ε(Φ^{-1}(Φ(s_1) · Φ(s_1)))`, computed from the
/// definition.
pub fn deformed_square_counit(phi: &Cochain) -> Result<Rational> {
    let s1 = SymFunc::s(&[1]);
    Ok(counit_outer(&deformed_product(phi, &s1, &s1)?))
}

/// The product identity satisfied by a series operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductIdentity {
    /// `(s_λ s_μ)/Φ = (s_λ/Φ)(s_μ/Φ)`
    Multiplicative,
    /// `(s_λ s_μ)/Φ = Σ_ζ (s_λ/ζ/Φ)(s_μ/ζ/Φ)`
    ZetaSum,
    /// `(s_λ s_μ)/Φ = Σ_ζ (-1)^{|ζ|} (s_λ/ζ/Φ)(s_μ/ζ'/Φ)`
    SignedZetaSum,
}

impl ProductIdentity {
    pub fn for_series(id: SeriesId) -> ProductIdentity {
        use SeriesId::*;
        match id {
            B | D | F | H => ProductIdentity::ZetaSum,
            A | C | E | G => ProductIdentity::SignedZetaSum,
            _ => ProductIdentity::Multiplicative,
        }
    }
}

impl fmt::Display for ProductIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ProductIdentity::Multiplicative => "(λ·μ)/Φ = λ/Φ · μ/Φ",
            ProductIdentity::ZetaSum => "(λ·μ)/Φ = Σ_ζ λ/(ζΦ) · μ/(ζΦ)",
            ProductIdentity::SignedZetaSum => "(λ·μ)/Φ = Σ_ζ (-1)^|ζ| λ/(ζΦ) · μ/(ζ'Φ)",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct GroupLikeReport {
    pub id: SeriesId,
    pub identity: ProductIdentity,
    pub max_weight: usize,
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<(Partition, Partition)>,
}

impl fmt::Display for GroupLikeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "series {}: {} {} up to weight {} ({} pairs)",
            self.id,
            self.identity,
            if self.holds { "holds" } else { "fails" },
            self.max_weight,
            self.checked
        )?;
        if let Some((a, b)) = &self.witness {
            write!(f, "; first failure at λ={a}, μ={b}")?;
        }
        Ok(())
    }
}

/// Right-hand side of a product identity for the pair `(λ, μ)`.
pub fn identity_rhs(identity: ProductIdentity, op: &BranchingOperator, lambda: &Partition, mu: &Partition) -> SymFunc {
    let sl = SymFunc::schur(lambda.clone());
    let sm = SymFunc::schur(mu.clone());
    match identity {
        ProductIdentity::Multiplicative => outer_product(&op.apply(&sl), &op.apply(&sm)),
        ProductIdentity::ZetaSum | ProductIdentity::SignedZetaSum => {
            let mut out = SymFunc::zero(Basis::Schur);
            for zeta in partitions_up_to(lambda.weight().min(mu.weight())) {
                let (zeta_r, c) = if identity == ProductIdentity::ZetaSum {
                    (zeta.clone(), Rational::from_integer(1.into()))
                } else {
                    (zeta.conjugate(), sign(zeta.weight()))
                };
                let left = op.apply(&skew(&sl, &SymFunc::schur(zeta.clone())));
                let right = op.apply(&skew(&sm, &SymFunc::schur(zeta_r)));
                if left.is_zero() || right.is_zero() {
                    continue;
                }
                out = &out + &outer_product(&left, &right).scale(&c);
            }
            out
        }
    }
}

/// Verifies the product identity of a series on every pair with
/// `|λ| + |μ| ≤ max_weight`.
pub fn check_group_like(id: SeriesId, max_weight: usize) -> GroupLikeReport {
    check_identity(id, ProductIdentity::for_series(id), max_weight)
}

/// Verifies a chosen identity for a series operator.
pub fn check_identity(id: SeriesId, identity: ProductIdentity, max_weight: usize) -> GroupLikeReport {
    let op = BranchingOperator::series(id);
    let mut report = GroupLikeReport {
        id,
        identity,
        max_weight,
        holds: true,
        checked: 0,
        witness: None,
    };
    let parts = partitions_up_to(max_weight);
    for lambda in &parts {
        for mu in &parts {
            if lambda.weight() + mu.weight() > max_weight || lambda > mu {
                continue;
            }
            report.checked += 1;
            let lhs = op.apply(&outer_product(
                &SymFunc::schur(lambda.clone()),
                &SymFunc::schur(mu.clone()),
            ));
            if lhs != identity_rhs(identity, &op, lambda, mu) {
                report.holds = false;
                report.witness = Some((lambda.clone(), mu.clone()));
                return report;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::rat;

    #[test]
    fn branch_examples() {
        let m = BranchingOperator::series(SeriesId::M);
        assert_eq!(
            m.apply(&SymFunc::s(&[2, 1])).to_string(),
            "s[1] + s[2] + s[1,1] + s[2,1]"
        );
        let id = BranchingOperator::identity();
        assert_eq!(id.apply(&SymFunc::s(&[3, 1])), SymFunc::s(&[3, 1]));
        let l = BranchingOperator::series(SeriesId::L);
        assert_eq!(l.apply(&SymFunc::s(&[1])).to_string(), "-1 + s[1]");
    }

    #[test]
    fn inverse_operator() {
        let d = BranchingOperator::series(SeriesId::D);
        let f = SymFunc::s(&[3, 2, 1]);
        assert_eq!(d.inverse().apply(&d.apply(&f)), f);
        let c = BranchingOperator::series(SeriesId::C);
        assert_eq!(c.apply(&d.apply(&f)), f);
    }

    #[test]
    fn deformed_products() {
        let e = Cochain::counit(1);
        let f = SymFunc::s(&[2]);
        let g = SymFunc::s(&[1, 1]);
        assert_eq!(deformed_product(&e, &f, &g).unwrap(), outer_product(&f, &g));
        let one = SymFunc::one(Basis::Schur);
        let d = Cochain::series(SeriesId::D);
        assert_eq!(deformed_product(&d, &one, &f).unwrap(), f);
        assert_eq!(deformed_counit(&d, &f).unwrap(), rat(1));
    }

    #[test]
    fn square_counit_values() {
        // ε∘Φ^{-1}(Φ(s_1)^2) = φ^{-1}(s_2) + φ^{-1}(s_11) - φ(s_1)^2
        assert_eq!(deformed_square_counit(&Cochain::counit(1)).unwrap(), rat(0));
        assert_eq!(deformed_square_counit(&Cochain::series(SeriesId::M)).unwrap(), rat(0));
        assert_eq!(deformed_square_counit(&Cochain::series(SeriesId::D)).unwrap(), rat(-1));
    }

    #[test]
    fn identities_small() {
        assert!(check_group_like(SeriesId::M, 5).holds);
        assert!(check_group_like(SeriesId::D, 4).holds);
        assert!(check_group_like(SeriesId::A, 4).holds);
        assert!(!check_identity(SeriesId::D, ProductIdentity::Multiplicative, 4).holds);
    }
}
