//! Finite tensor-power elements `Σ c · b_{λ1} ⊗ … ⊗ b_{λn}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{fmt_coeff_term, Basis, Rational, SymFunc};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorExp {
    bases: Vec<Basis>,
    terms: BTreeMap<Vec<Partition>, Rational>,
}

impl TensorExp {
    pub fn zero(bases: Vec<Basis>) -> Self {
        TensorExp {
            bases,
            terms: BTreeMap::new(),
        }
    }

    pub fn uniform(basis: Basis, arity: usize) -> Self {
        Self::zero(vec![basis; arity])
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn unit(basis: Basis, arity: usize) -> Self {
        let mut t = Self::uniform(basis, arity);
        t.add_term(vec![Partition::empty(); arity], Rational::one());
        t
    }

    /// `f1 ⊗ … ⊗ fn` expanded over the terms of each factor.
    pub fn pure(factors: &[SymFunc]) -> Self {
        let mut t = Self::zero(factors.iter().map(SymFunc::basis).collect());
        let mut acc: Vec<(Vec<Partition>, Rational)> = vec![(Vec::new(), Rational::one())];
        for f in factors {
            let mut next = Vec::new();
            for (slots, c) in &acc {
                for (lambda, d) in f.terms() {
                    let mut s = slots.clone();
                    s.push(lambda.clone());
                    next.push((s, c * d));
                }
            }
            acc = next;
        }
        for (slots, c) in acc {
            t.add_term(slots, c);
        }
        t
    }

    pub fn arity(&self) -> usize {
        self.bases.len()
    }

    pub fn bases(&self) -> &[Basis] {
        &self.bases
    }

    pub fn add_term(&mut self, slots: Vec<Partition>, coeff: Rational) {
        debug_assert_eq!(slots.len(), self.bases.len());
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(slots) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, slots: &[Partition]) -> Rational {
        self.terms.get(slots).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorExp) -> TensorExp {
        let other = other.convert_slots(&self.bases);
        let mut out = self.clone();
        for (slots, c) in other.terms {
            out.add_term(slots, c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> TensorExp {
        let mut out = TensorExp::zero(self.bases.clone());
        for (slots, a) in &self.terms {
            out.add_term(slots.clone(), a * c);
        }
        out
    }

    /// Re-expresses each slot in the given bases.
    pub fn convert_slots(&self, targets: &[Basis]) -> TensorExp {
        assert_eq!(targets.len(), self.bases.len(), "tensor arity mismatch");
        let mut current = self.clone();
        for (i, &target) in targets.iter().enumerate() {
            if current.bases[i] == target {
                continue;
            }
            let mut next = TensorExp::zero(current.bases.clone());
            next.bases[i] = target;
            for (slots, c) in &current.terms {
                let img = SymFunc::basis_element(current.bases[i], slots[i].clone()).convert(target);
                for (mu, d) in img.terms() {
                    let mut s = slots.clone();
                    s[i] = mu.clone();
                    next.add_term(s, c * d);
                }
            }
            current = next;
        }
        current
    }

    /// Applies a multilinear functional to every term and sums.
    pub fn contract(&self, mut value: impl FnMut(&[Partition]) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (slots, c) in &self.terms {
            let v = value(slots);
            if !v.is_zero() {
                acc += c * v;
            }
        }
        acc
    }
}

impl fmt::Display for TensorExp {
    /// Text form `s[2]⊗1 + s[1]⊗s[1] + 1⊗s[2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let wa: usize = a.iter().map(Partition::weight).sum();
            let wb: usize = b.iter().map(Partition::weight).sum();
            wa.cmp(&wb).then_with(|| {
                a.iter()
                    .zip(b.iter())
                    .map(|(x, y)| y.weight().cmp(&x.weight()).then_with(|| x.cmp(y)))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
        });
        for (i, (slots, c)) in ordered.into_iter().enumerate() {
            let body: Vec<String> = slots
                .iter()
                .zip(&self.bases)
                .map(|(lambda, basis)| {
                    if lambda.is_empty() {
                        "1".to_string()
                    } else {
                        format!("{}{}", basis.letter(), lambda)
                    }
                })
                .collect();
            fmt_coeff_term(f, i == 0, c, Some(body.join("⊗")))?;
        }
        Ok(())
    }
}
