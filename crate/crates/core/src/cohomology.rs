//! Sweedler cochains over the outer Hopf algebra.
//!
//! An `n`-cochain is a normalized scalar functional on `Λ^{⊗n}`, given by
//! its values on tuples of Schur functions. Cochains are lazy: each node
//! knows how to evaluate itself from its definition and memoizes the
//! values it has produced, so convolutions, inverses and coboundaries can
//! be composed freely and only the values actually requested are computed.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::outer_hopf::{lr_product_terms, schur_coproduct_terms};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::{series_coefficient, SeriesId};
use crate::symfunc::{schur_scalar_inverse, Basis, Rational, SymFunc, TensorExp};

enum Def {
    Counit,
    Table(HashMap<Vec<Partition>, Rational>),
    Series {
        id: SeriesId,
        cap: Option<usize>,
    },
    SchurPairing,
    SchurPairingInverse,
    Convolution(Cochain, Cochain),
    Inverse(Cochain),
    /// `∂^i c`, raising the arity by one.
    Face {
        index: usize,
        inner: Cochain,
    },
    Coboundary(Cochain),
}

struct Node {
    arity: usize,
    def: Def,
    memo: Memo<Vec<Partition>, Rational>,
    /// Set for coboundaries: the alternating convolution of face maps.
    expanded: Option<Cochain>,
}

/// A normalized `n`-cochain; cheap to clone.
#[derive(Clone)]
pub struct Cochain(Arc<Node>);

impl Cochain {
    fn build(arity: usize, def: Def) -> Cochain {
        Cochain(Arc::new(Node {
            arity,
            def,
            memo: Memo::new(),
            expanded: None,
        }))
    }

    /// The counit `ε^{⊗n}`, the unit of convolution.
    pub fn counit(arity: usize) -> Cochain {
        Self::build(arity, Def::Counit)
    }

    /// A cochain given by finitely many values on Schur tuples; missing
    /// entries are zero and the all-empty entry defaults to 1.
    pub fn table(arity: usize, values: impl IntoIterator<Item = (Vec<Partition>, Rational)>) -> Result<Cochain> {
        let unit = vec![Partition::empty(); arity];
        let mut map = HashMap::new();
        for (key, v) in values {
            if key.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: key.len(),
                });
            }
            if key == unit && !v.is_one() {
                return Err(Error::NotNormalized(v.to_string()));
            }
            if !v.is_zero() {
                map.insert(key, v);
            }
        }
        map.insert(unit, Rational::one());
        Ok(Self::build(arity, Def::Table(map)))
    }

    /// Characteristic function of a series: the signed coefficient of each
    /// Schur function, with no truncation.
    pub fn series(id: SeriesId) -> Cochain {
        Self::build(1, Def::Series { id, cap: None })
    }

    /// Characteristic function of a series truncated at `cap` (zero above).
    pub fn series_capped(id: SeriesId, cap: usize) -> Cochain {
        Self::build(1, Def::Series { id, cap: Some(cap) })
    }

    /// The Schur scalar product `(s_λ|s_μ) = δ_{λμ}` as a 2-cochain.
    pub fn schur_pairing() -> Cochain {
        Self::build(2, Def::SchurPairing)
    }

    /// Its convolutive inverse `(-1)^{|μ|} δ_{λ,μ'}`.
    pub fn schur_pairing_inverse() -> Cochain {
        Self::build(2, Def::SchurPairingInverse)
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    /// Value on `s_{λ1} ⊗ … ⊗ s_{λn}`.
    pub fn value(&self, slots: &[Partition]) -> Rational {
        assert_eq!(slots.len(), self.arity(), "cochain arity mismatch");
        let node = &self.0;
        // cheap definitions are not worth caching
        match &node.def {
            Def::Counit => return counit_value(slots),
            Def::Table(map) => return map.get(slots).cloned().unwrap_or_else(Rational::zero),
            Def::SchurPairing => {
                return if slots[0] == slots[1] {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            Def::SchurPairingInverse => {
                return Rational::from_integer(BigInt::from(schur_scalar_inverse(&slots[0], &slots[1])))
            }
            _ => {}
        }
        let key = slots.to_vec();
        (*node.memo.get_or_compute(&key, || self.compute(slots))).clone()
    }

    fn compute(&self, slots: &[Partition]) -> Rational {
        match &self.0.def {
            Def::Series { id, cap } => {
                let lambda = &slots[0];
                match cap {
                    Some(n) if lambda.weight() > *n => Rational::zero(),
                    _ => series_coefficient(*id, lambda),
                }
            }
            Def::Convolution(a, b) => {
                let mut acc = Rational::zero();
                for (left, right, c) in split_slots(slots) {
                    let va = a.value(&left);
                    if va.is_zero() {
                        continue;
                    }
                    let vb = b.value(&right);
                    if !vb.is_zero() {
                        acc += va * vb * Rational::from_integer(BigInt::from(c));
                    }
                }
                acc
            }
            Def::Inverse(c) => {
                // c^{-1} * c = ε, solved for the top-weight term
                let mut acc = counit_value(slots);
                for (left, right, k) in split_slots(slots) {
                    if right.iter().all(Partition::is_empty) {
                        continue;
                    }
                    let vc = c.value(&right);
                    if vc.is_zero() {
                        continue;
                    }
                    acc -= self.value(&left) * vc * Rational::from_integer(BigInt::from(k));
                }
                acc
            }
            Def::Face { index, inner } => {
                let n = slots.len();
                if *index == 0 {
                    if slots[0].is_empty() {
                        inner.value(&slots[1..])
                    } else {
                        Rational::zero()
                    }
                } else if *index == n {
                    if slots[n - 1].is_empty() {
                        inner.value(&slots[..n - 1])
                    } else {
                        Rational::zero()
                    }
                } else {
                    let i = index - 1;
                    let mut acc = Rational::zero();
                    for (nu, c) in lr_product_terms(&slots[i], &slots[i + 1]).iter() {
                        let mut merged: Vec<Partition> = slots[..i].to_vec();
                        merged.push(nu.clone());
                        merged.extend_from_slice(&slots[i + 2..]);
                        let v = inner.value(&merged);
                        if !v.is_zero() {
                            acc += v * Rational::from_integer(BigInt::from(*c));
                        }
                    }
                    acc
                }
            }
            Def::Coboundary(_) => self
                .0
                .expanded
                .as_ref()
                .expect("coboundary carries its expansion")
                .value(slots),
            Def::Counit | Def::Table(_) | Def::SchurPairing | Def::SchurPairingInverse => {
                unreachable!("evaluated directly")
            }
        }
    }

    /// Linear extension to `Λ` (arity 1).
    pub fn eval(&self, f: &SymFunc) -> Result<Rational> {
        if self.arity() != 1 {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: 1,
            });
        }
        let fs = f.to_schur();
        Ok(fs.terms().fold(Rational::zero(), |acc, (lambda, c)| {
            acc + c * self.value(std::slice::from_ref(lambda))
        }))
    }

    /// Multilinear extension to `Λ^{⊗n}`.
    pub fn eval_tensor(&self, t: &TensorExp) -> Result<Rational> {
        if self.arity() != t.arity() {
            return Err(Error::ArityMismatch {
                left: self.arity(),
                right: t.arity(),
            });
        }
        let ts = t.convert_slots(&vec![Basis::Schur; t.arity()]);
        Ok(ts.contract(|slots| self.value(slots)))
    }

    /// Face map `∂^i` taking an `n`-cochain to an `(n+1)`-cochain.
    pub fn face(&self, index: usize) -> Cochain {
        assert!(index <= self.arity() + 1, "face index out of range");
        Self::build(
            self.arity() + 1,
            Def::Face {
                index,
                inner: self.clone(),
            },
        )
    }

    fn describe(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.def {
            Def::Counit => write!(f, "counit"),
            Def::Table(map) => {
                let mut entries: Vec<_> = map.iter().collect();
                entries.sort_by(|a, b| a.0.cmp(b.0));
                let body: Vec<String> = entries
                    .into_iter()
                    .filter(|(k, _)| k.iter().any(|p| !p.is_empty()))
                    .map(|(k, v)| {
                        let key: Vec<String> = k.iter().map(|p| p.to_string()).collect();
                        format!("{}:{}", key.join("|"), v)
                    })
                    .collect();
                write!(f, "table:{{{}}}", body.join(","))
            }
            Def::Series { id, cap: None } => write!(f, "series:{id}"),
            Def::Series { id, cap: Some(n) } => write!(f, "series:{id}@{n}"),
            Def::SchurPairing => write!(f, "schur"),
            Def::SchurPairingInverse => write!(f, "schur-inv"),
            Def::Convolution(a, b) => write!(f, "conv({a},{b})"),
            Def::Inverse(c) => write!(f, "inv({c})"),
            Def::Face { index, inner } => write!(f, "face{index}({inner})"),
            Def::Coboundary(c) => write!(f, "d({c})"),
        }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.describe(f)
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain<{}>({})", self.arity(), self)
    }
}

fn counit_value(slots: &[Partition]) -> Rational {
    if slots.iter().all(Partition::is_empty) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Slotwise outer coproduct of `s_{λ1} ⊗ … ⊗ s_{λn}`:
/// `(left legs, right legs, coefficient)`.
fn split_slots(slots: &[Partition]) -> Vec<(Vec<Partition>, Vec<Partition>, u64)> {
    let mut acc: Vec<(Vec<Partition>, Vec<Partition>, u64)> = vec![(Vec::new(), Vec::new(), 1)];
    for lambda in slots {
        let terms = schur_coproduct_terms(lambda);
        let mut next = Vec::with_capacity(acc.len() * terms.len());
        for (l, r, c) in &acc {
            for (a, b, k) in terms.iter() {
                let mut l2 = l.clone();
                l2.push(a.clone());
                let mut r2 = r.clone();
                r2.push(b.clone());
                next.push((l2, r2, c * k));
            }
        }
        acc = next;
    }
    acc
}

/// Convolution `c * c'`.
pub fn convolve(c: &Cochain, d: &Cochain) -> Result<Cochain> {
    if c.arity() != d.arity() {
        return Err(Error::ArityMismatch {
            left: c.arity(),
            right: d.arity(),
        });
    }
    Ok(Cochain::build(c.arity(), Def::Convolution(c.clone(), d.clone())))
}

/// Convolution of a non-empty list, left to right.
pub fn convolve_all(cs: &[Cochain]) -> Result<Cochain> {
    let (first, rest) = cs
        .split_first()
        .ok_or_else(|| Error::Domain("empty convolution".into()))?;
    rest.iter().try_fold(first.clone(), |acc, c| convolve(&acc, c))
}

/// Convolutive inverse, by recursion on total weight.
pub fn invert(c: &Cochain) -> Cochain {
    match &c.0.def {
        Def::Counit => c.clone(),
        Def::Inverse(inner) => inner.clone(),
        Def::SchurPairing => Cochain::schur_pairing_inverse(),
        Def::SchurPairingInverse => Cochain::schur_pairing(),
        _ => Cochain::build(c.arity(), Def::Inverse(c.clone())),
    }
}

/// Coboundary `∂c = ∂^0 c * (∂^1 c)^{-1} * ∂^2 c * …` for arity 1 or 2.
pub fn coboundary(c: &Cochain) -> Result<Cochain> {
    let n = c.arity();
    if !(1..=2).contains(&n) {
        return Err(Error::UnsupportedArity(n));
    }
    let faces: Vec<Cochain> = (0..=n + 1)
        .map(|i| {
            let face = c.face(i);
            if i % 2 == 1 {
                invert(&face)
            } else {
                face
            }
        })
        .collect();
    let expanded = convolve_all(&faces)?;
    Ok(Cochain(Arc::new(Node {
        arity: n + 1,
        def: Def::Coboundary(c.clone()),
        memo: Memo::new(),
        expanded: Some(expanded),
    })))
}

/// All Schur tuples of the given arity and total weight at most `max_weight`.
pub fn tuples_up_to(arity: usize, max_weight: usize) -> Vec<Vec<Partition>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for t in &out {
            let used: usize = t.iter().map(Partition::weight).sum();
            for p in partitions_up_to(max_weight - used) {
                let mut t2 = t.clone();
                t2.push(p);
                next.push(t2);
            }
        }
        out = next;
    }
    out.sort_by_key(|t| t.iter().map(Partition::weight).sum::<usize>());
    out
}

/// Whether two cochains agree on every tuple of total weight `≤ max_weight`;
/// the first disagreement otherwise.
pub fn first_difference(c: &Cochain, d: &Cochain, max_weight: usize) -> Option<Vec<Partition>> {
    assert_eq!(c.arity(), d.arity(), "cochain arity mismatch");
    tuples_up_to(c.arity(), max_weight)
        .into_iter()
        .find(|t| c.value(t) != d.value(t))
}

#[derive(Clone, Debug, PartialEq)]
pub enum Class1 {
    Trivial,
    Cocycle,
    /// `φ(s_λ·s_μ) ≠ φ(s_λ)φ(s_μ)` at this pair.
    Generic {
        lambda: Partition,
        mu: Partition,
        product_value: Rational,
        factor_value: Rational,
    },
}

/// A verdict that holds up to the recorded weight only.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<C> {
    pub class: C,
    pub max_weight: usize,
}

impl fmt::Display for Verdict<Class1> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.class {
            Class1::Trivial => write!(f, "trivial (up to weight {})", self.max_weight),
            Class1::Cocycle => write!(f, "cocycle (up to weight {})", self.max_weight),
            Class1::Generic {
                lambda,
                mu,
                product_value,
                factor_value,
            } => write!(
                f,
                "generic: φ(s{lambda}·s{mu}) = {product_value} but φ(s{lambda})φ(s{mu}) = {factor_value}"
            ),
        }
    }
}

/// Classifies a 1-cochain by checking multiplicativity on all pairs of
/// total weight at most `max_weight`.
pub fn classify1(phi: &Cochain, max_weight: usize) -> Result<Verdict<Class1>> {
    if phi.arity() != 1 {
        return Err(Error::ArityMismatch {
            left: phi.arity(),
            right: 1,
        });
    }
    let trivial = partitions_up_to(max_weight)
        .iter()
        .all(|l| l.is_empty() || phi.value(std::slice::from_ref(l)).is_zero());
    if trivial {
        return Ok(Verdict {
            class: Class1::Trivial,
            max_weight,
        });
    }
    for n in 1..=max_weight {
        for a in 1..n {
            for lambda in partitions_of(a) {
                for mu in partitions_of(n - a) {
                    if lambda < mu {
                        continue;
                    }
                    let prod: Rational =
                        lr_product_terms(&lambda, &mu)
                            .iter()
                            .fold(Rational::zero(), |acc, (nu, c)| {
                                acc + phi.value(std::slice::from_ref(nu)) * Rational::from_integer(BigInt::from(*c))
                            });
                    let factor = phi.value(std::slice::from_ref(&lambda)) * phi.value(std::slice::from_ref(&mu));
                    if prod != factor {
                        return Ok(Verdict {
                            class: Class1::Generic {
                                lambda,
                                mu,
                                product_value: prod,
                                factor_value: factor,
                            },
                            max_weight,
                        });
                    }
                }
            }
        }
    }
    Ok(Verdict {
        class: Class1::Cocycle,
        max_weight,
    })
}

#[derive(Clone, Debug)]
pub enum Class2 {
    Trivial,
    /// `π = ∂φ` with the recovered `φ` (values on weights up to the bound).
    Coboundary {
        preimage: Cochain,
    },
    /// `∂π = ε` but no preimage was found; the first grade where the
    /// linear system is inconsistent is recorded.
    Cocycle {
        obstruction: (Partition, Partition),
    },
    /// `∂π ≠ ε` at this triple.
    Generic {
        witness: Vec<Partition>,
        value: Rational,
    },
}

impl Class2 {
    pub fn is_cocycle(&self) -> bool {
        !matches!(self, Class2::Generic { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Class2::Trivial => "trivial",
            Class2::Coboundary { .. } => "coboundary",
            Class2::Cocycle { .. } => "cocycle",
            Class2::Generic { .. } => "generic",
        }
    }
}

impl fmt::Display for Verdict<Class2> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.max_weight;
        match &self.class {
            Class2::Trivial => write!(f, "trivial (up to weight {w})"),
            Class2::Coboundary { preimage } => {
                write!(f, "coboundary, hence cocycle (up to weight {w}); preimage {preimage}")
            }
            Class2::Cocycle { obstruction: (a, b) } => {
                write!(f, "cocycle (up to weight {w}); no preimage: inconsistent at s{a}⊗s{b}")
            }
            Class2::Generic { witness, value } => {
                let t: Vec<String> = witness.iter().map(|p| format!("s{p}")).collect();
                write!(f, "generic: ∂π({}) = {value} ≠ ε", t.join("⊗"))
            }
        }
    }
}

/// Classifies a 2-cochain up to `max_weight`: trivial, coboundary (with a
/// preimage solved grade by grade), cocycle, or generic.
pub fn classify2(pi: &Cochain, max_weight: usize) -> Result<Verdict<Class2>> {
    if pi.arity() != 2 {
        return Err(Error::ArityMismatch {
            left: pi.arity(),
            right: 2,
        });
    }
    let verdict = |class| Ok(Verdict { class, max_weight });
    let unit = Cochain::counit(2);
    if first_difference(pi, &unit, max_weight).is_none() {
        return verdict(Class2::Trivial);
    }
    let d = coboundary(pi)?;
    let eps3 = Cochain::counit(3);
    if let Some(witness) = first_difference(&d, &eps3, max_weight) {
        let value = d.value(&witness);
        return verdict(Class2::Generic { witness, value });
    }
    match solve_coboundary(pi, max_weight) {
        Ok(preimage) => verdict(Class2::Coboundary { preimage }),
        Err(obstruction) => verdict(Class2::Cocycle { obstruction }),
    }
}

/// Solves `∂φ = π` for a normalized 1-cochain `φ`, grade by grade.
/// Free directions are fixed to zero. On failure returns the first pair
/// whose equation is inconsistent.
pub fn solve_coboundary(pi: &Cochain, max_weight: usize) -> std::result::Result<Cochain, (Partition, Partition)> {
    let empty = Partition::empty();
    // unitality in each slot is forced for coboundaries
    for lambda in partitions_up_to(max_weight).into_iter().skip(1) {
        let e = Rational::zero();
        if pi.value(&[lambda.clone(), empty.clone()]) != e {
            return Err((lambda, empty));
        }
        if pi.value(&[empty.clone(), lambda.clone()]) != e {
            return Err((empty, lambda));
        }
    }
    let mut values: Vec<(Vec<Partition>, Rational)> = Vec::new();
    for n in 1..=max_weight {
        let trial = Cochain::table(1, values.clone()).expect("normalized by construction");
        let d = coboundary(&trial).expect("arity 1");
        let unknowns = partitions_of(n);
        let col: HashMap<&Partition, usize> = unknowns.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut rows: Vec<(Vec<Rational>, Rational, (Partition, Partition))> = Vec::new();
        for a in 1..n {
            for lambda in partitions_of(a) {
                for mu in partitions_of(n - a) {
                    let mut coeffs = vec![Rational::zero(); unknowns.len()];
                    for (nu, c) in lr_product_terms(&lambda, &mu).iter() {
                        coeffs[col[nu]] = Rational::from_integer(BigInt::from(*c));
                    }
                    let pair = [lambda.clone(), mu.clone()];
                    let rhs = d.value(&pair) - pi.value(&pair);
                    rows.push((coeffs, rhs, (lambda.clone(), mu.clone())));
                }
            }
        }
        let solution = solve_linear(&mut rows, unknowns.len())?;
        for (p, v) in unknowns.into_iter().zip(solution) {
            if !v.is_zero() {
                values.push((vec![p], v));
            }
        }
    }
    Ok(Cochain::table(1, values).expect("normalized by construction"))
}

/// Row reduction of an augmented system; free variables are set to zero.
fn solve_linear<T: Clone>(
    rows: &mut [(Vec<Rational>, Rational, T)],
    cols: usize,
) -> std::result::Result<Vec<Rational>, T> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r].0[c].clone();
        for x in rows[r].0.iter_mut() {
            *x /= &pv;
        }
        rows[r].1 /= &pv;
        for i in 0..rows.len() {
            if i == r || rows[i].0[c].is_zero() {
                continue;
            }
            let factor = rows[i].0[c].clone();
            for j in 0..cols {
                let v = &rows[r].0[j] * &factor;
                rows[i].0[j] -= v;
            }
            let v = &rows[r].1 * &factor;
            rows[i].1 -= v;
        }
        pivot_cols.push(c);
        r += 1;
    }
    if let Some(bad) = rows[r..].iter().find(|row| !row.1.is_zero()) {
        return Err(bad.2.clone());
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[i].1.clone();
    }
    Ok(x)
}
