//! The outer Hopf algebra: Littlewood-Richardson products, skew Schur
//! functions, the outer coproduct, counit and antipode, plus the
//! product/coproduct compatibility checks for the four pairings of outer
//! and inner structure maps.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::inner_alg::{inner_coproduct, inner_product};
use crate::memo::Memo;
use crate::partition::{partitions_of, subpartitions, Partition};
use crate::symfunc::{sign, Basis, Rational, SymFunc, TensorExp};

type Expansion = Vec<(Partition, u64)>;

fn product_cache() -> &'static Memo<(Partition, Partition), Expansion> {
    static CACHE: OnceLock<Memo<(Partition, Partition), Expansion>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

fn skew_cache() -> &'static Memo<(Partition, Partition), Expansion> {
    static CACHE: OnceLock<Memo<(Partition, Partition), Expansion>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

type CoproductTerms = Vec<(Partition, Partition, u64)>;

fn coproduct_cache() -> &'static Memo<Partition, CoproductTerms> {
    static CACHE: OnceLock<Memo<Partition, CoproductTerms>> = OnceLock::new();
    CACHE.get_or_init(Memo::new)
}

/// `s_λ · s_μ = Σ_ν C^ν_{λμ} s_ν`, sorted by `ν`.
pub fn lr_product_terms(lambda: &Partition, mu: &Partition) -> Arc<Expansion> {
    // The heavier factor is the base shape; the lighter one is the content.
    let key = if lambda >= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    product_cache().get_or_compute(&key, || lr_expand(&key.0, &key.1))
}

/// Adds the content `μ` to the shape `base` one letter at a time as a
/// horizontal strip, keeping the reading word a lattice word.
fn lr_expand(base: &Partition, content: &Partition) -> Expansion {
    let mut out: HashMap<Vec<usize>, u64> = HashMap::new();
    add_letter(base.parts(), content.parts(), 0, &[], &mut out);
    let mut v: Expansion = out
        .into_iter()
        .map(|(parts, c)| (Partition::from_canonical(parts), c))
        .collect();
    v.sort();
    v
}

fn add_letter(shape: &[usize], content: &[usize], letter: usize, prev: &[usize], out: &mut HashMap<Vec<usize>, u64>) {
    if letter == content.len() {
        *out.entry(shape.to_vec()).or_insert(0) += 1;
        return;
    }
    let mut strip = vec![0; shape.len() + 1];
    place_strip(shape, content, letter, prev, 0, content[letter], 0, 0, &mut strip, out);
}

#[allow(clippy::too_many_arguments)]
fn place_strip(
    shape: &[usize],
    content: &[usize],
    letter: usize,
    prev: &[usize],
    row: usize,
    remaining: usize,
    placed: usize,
    prev_above: usize,
    strip: &mut Vec<usize>,
    out: &mut HashMap<Vec<usize>, u64>,
) {
    if remaining == 0 || row == strip.len() {
        if remaining == 0 {
            for s in strip[row..].iter_mut() {
                *s = 0;
            }
            let mut next: Vec<usize> = (0..strip.len())
                .map(|r| shape.get(r).copied().unwrap_or(0) + strip[r])
                .collect();
            while next.last() == Some(&0) {
                next.pop();
            }
            let counts = strip.clone();
            add_letter(&next, content, letter + 1, &counts, out);
        }
        return;
    }
    let old = shape.get(row).copied().unwrap_or(0);
    let strip_room = if row == 0 { remaining } else { shape[row - 1] - old };
    let lattice_room = if letter == 0 {
        remaining
    } else {
        prev_above.saturating_sub(placed)
    };
    let max = remaining.min(strip_room).min(lattice_room);
    let prev_here = prev.get(row).copied().unwrap_or(0);
    for v in (0..=max).rev() {
        strip[row] = v;
        place_strip(
            shape,
            content,
            letter,
            prev,
            row + 1,
            remaining - v,
            placed + v,
            prev_above + prev_here,
            strip,
            out,
        );
    }
    strip[row] = 0;
}

/// `C^ν_{λμ}`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    let terms = lr_product_terms(lambda, mu);
    terms
        .binary_search_by(|(p, _)| p.cmp(nu))
        .map(|i| terms[i].1)
        .unwrap_or(0)
}

/// `s_{λ/μ} = Σ_ν C^λ_{μν} s_ν`, sorted by `ν`.
pub fn skew_terms(lambda: &Partition, mu: &Partition) -> Arc<Expansion> {
    skew_cache().get_or_compute(&(lambda.clone(), mu.clone()), || {
        if mu.weight() > lambda.weight() || !lambda.contains(mu) {
            return Vec::new();
        }
        let target = lambda.weight() - mu.weight();
        partitions_of(target)
            .into_iter()
            .filter(|nu| lambda.contains(nu))
            .filter_map(|nu| {
                let c = lr_coefficient(mu, &nu, lambda);
                (c > 0).then_some((nu, c))
            })
            .collect()
    })
}

/// `Δ s_λ = Σ_α s_{λ/α} ⊗ s_α` as `(left, right, coefficient)` triples.
pub fn schur_coproduct_terms(lambda: &Partition) -> Arc<Vec<(Partition, Partition, u64)>> {
    coproduct_cache().get_or_compute(lambda, || {
        let mut out = Vec::new();
        for alpha in subpartitions(lambda) {
            for (nu, c) in skew_terms(lambda, &alpha).iter() {
                out.push((nu.clone(), alpha.clone(), *c));
            }
        }
        out
    })
}

fn int(c: u64) -> Rational {
    Rational::from_integer(BigInt::from(c))
}

/// The outer product. Products within one of the multiplicative bases
/// (h, e, p) stay in that basis; everything else is computed in Schur.
pub fn outer_product(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let cap = f.cap().meet(g.cap());
    if f.basis() == g.basis() && f.basis().is_multiplicative() {
        let mut out = SymFunc::zero(f.basis()).with_cap(cap);
        for (a, x) in f.terms() {
            for (b, y) in g.terms() {
                if cap.admits(a.weight() + b.weight()) {
                    out.add_term(a.union(b), x * y);
                }
            }
        }
        return out;
    }
    let fs = f.to_schur();
    let gs = g.to_schur();
    let mut out = SymFunc::zero(Basis::Schur).with_cap(cap);
    for (a, x) in fs.terms() {
        for (b, y) in gs.terms() {
            if !cap.admits(a.weight() + b.weight()) {
                continue;
            }
            let xy = x * y;
            for (nu, c) in lr_product_terms(a, b).iter() {
                out.add_term(nu.clone(), &xy * int(*c));
            }
        }
    }
    out
}

/// Skew `f / g`, bilinear extension of `s_λ / s_μ`; result in Schur.
pub fn skew(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let fs = f.to_schur();
    let gs = g.to_schur();
    let mut out = SymFunc::zero(Basis::Schur).with_cap(f.cap());
    for (a, x) in fs.terms() {
        for (b, y) in gs.terms() {
            let xy = x * y;
            for (nu, c) in skew_terms(a, b).iter() {
                out.add_term(nu.clone(), &xy * int(*c));
            }
        }
    }
    out
}

/// Outer coproduct, returned in the basis of the input in both slots.
pub fn outer_coproduct(f: &SymFunc) -> TensorExp {
    let basis = f.basis();
    let mut out = TensorExp::uniform(basis, 2);
    for (lambda, c) in f.terms() {
        let image = coproduct_of_basis_element(basis, lambda);
        for (slots, d) in image.terms() {
            out.add_term(slots.clone(), c * d);
        }
    }
    out
}

/// `Δ b_λ` for a single basis element.
pub fn coproduct_of_basis_element(basis: Basis, lambda: &Partition) -> TensorExp {
    let mut out = TensorExp::uniform(basis, 2);
    match basis {
        Basis::Schur => {
            for (l, r, c) in schur_coproduct_terms(lambda).iter() {
                out.add_term(vec![l.clone(), r.clone()], int(*c));
            }
        }
        Basis::PowerSum | Basis::Complete | Basis::Elementary => {
            // multiplicative: product of the coproducts of the parts
            let mut acc: BTreeMap<(Partition, Partition), Rational> = BTreeMap::new();
            acc.insert((Partition::empty(), Partition::empty()), Rational::one());
            for &k in lambda.parts() {
                let splits: Vec<(Partition, Partition)> = if basis == Basis::PowerSum {
                    vec![
                        (Partition::row(k), Partition::empty()),
                        (Partition::empty(), Partition::row(k)),
                    ]
                } else {
                    (0..=k).map(|i| (Partition::row(i), Partition::row(k - i))).collect()
                };
                let mut next = BTreeMap::new();
                for ((a, b), c) in &acc {
                    for (x, y) in &splits {
                        *next.entry((a.union(x), b.union(y))).or_insert_with(Rational::zero) += c;
                    }
                }
                acc = next;
            }
            for ((a, b), c) in acc {
                out.add_term(vec![a, b], c);
            }
        }
        Basis::Monomial => {
            // split the multiset of parts
            let mult: Vec<(usize, usize)> = lambda.multiplicities().counts.into_iter().collect();
            let mut stack: Vec<(usize, Vec<usize>, Vec<usize>)> = vec![(0, Vec::new(), Vec::new())];
            while let Some((i, left, right)) = stack.pop() {
                if i == mult.len() {
                    let (a, _) = Partition::from_unsorted(left);
                    let (b, _) = Partition::from_unsorted(right);
                    out.add_term(vec![a, b], Rational::one());
                    continue;
                }
                let (part, r) = mult[i];
                for j in 0..=r {
                    let mut l = left.clone();
                    l.extend(std::iter::repeat_n(part, j));
                    let mut rr = right.clone();
                    rr.extend(std::iter::repeat_n(part, r - j));
                    stack.push((i + 1, l, rr));
                }
            }
        }
    }
    out
}

/// `ε(b_λ) = δ_{λ,0}` in every basis.
pub fn counit_outer(f: &SymFunc) -> Rational {
    f.coeff(&Partition::empty())
}

/// `S(s_λ) = (-1)^{|λ|} s_{λ'}`, `S(p_λ) = (-1)^{ℓ(λ)} p_λ`; other bases
/// go through Schur and come back.
pub fn antipode(f: &SymFunc) -> SymFunc {
    match f.basis() {
        Basis::Schur => f.map_linear(Basis::Schur, |lambda| {
            SymFunc::term(Basis::Schur, lambda.conjugate(), sign(lambda.weight()))
        }),
        Basis::PowerSum => f.map_linear(Basis::PowerSum, |lambda| {
            SymFunc::term(Basis::PowerSum, lambda.clone(), sign(lambda.len()))
        }),
        other => antipode(&f.to_schur()).convert(other),
    }
}

/// Multiplies tensors slot by slot with the outer product.
pub fn tensor_outer_product(a: &TensorExp, b: &TensorExp) -> TensorExp {
    assert_eq!(a.arity(), b.arity(), "tensor arity mismatch");
    let all_p = |t: &TensorExp| t.bases().iter().all(|&x| x == Basis::PowerSum);
    if all_p(a) && all_p(b) {
        let mut out = TensorExp::uniform(Basis::PowerSum, a.arity());
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                let slots = x.iter().zip(y).map(|(p, q)| p.union(q)).collect();
                out.add_term(slots, c * d);
            }
        }
        return out;
    }
    let a = a.convert_slots(&vec![Basis::Schur; a.arity()]);
    let b = b.convert_slots(&vec![Basis::Schur; b.arity()]);
    let mut out = TensorExp::uniform(Basis::Schur, a.arity());
    for (x, c) in a.terms() {
        for (y, d) in b.terms() {
            let cd = c * d;
            let mut acc: Vec<(Vec<Partition>, u64)> = vec![(Vec::new(), 1)];
            for (p, q) in x.iter().zip(y) {
                let terms = lr_product_terms(p, q);
                let mut next = Vec::with_capacity(acc.len() * terms.len());
                for (slots, k) in &acc {
                    for (nu, m) in terms.iter() {
                        let mut s = slots.clone();
                        s.push(nu.clone());
                        next.push((s, k * m));
                    }
                }
                acc = next;
            }
            for (slots, k) in acc {
                out.add_term(slots, &cd * int(k));
            }
        }
    }
    out
}

/// Which pair of product and coproduct is being checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// outer product, outer coproduct
    I,
    /// outer product, inner coproduct
    II,
    /// inner product, outer coproduct
    III,
    /// inner product, inner coproduct
    IV,
}

impl std::str::FromStr for Case {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> crate::error::Result<Case> {
        match s.to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(Case::I),
            "II" | "2" => Ok(Case::II),
            "III" | "3" => Ok(Case::III),
            "IV" | "4" => Ok(Case::IV),
            other => Err(crate::error::Error::Domain(format!("unknown case `{other}`"))),
        }
    }
}

/// Outcome of [`check_case`].
#[derive(Clone, Debug)]
pub struct CaseReport {
    pub case: Case,
    pub max_weight: usize,
    /// Whether the compatibility identity held on every checked input.
    pub holds: bool,
    pub checked: usize,
    /// Human-readable failures or, for Case IV, the mismatch per `n`.
    pub witnesses: Vec<String>,
    /// Case IV only: `(n, b/a)` where a and b are the two sides on `p_n ⊗ p_n`.
    pub ratios: Vec<(usize, Rational)>,
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "case {:?} up to weight {}: compatibility {} ({} checks)",
            self.case,
            self.max_weight,
            if self.holds { "holds" } else { "fails" },
            self.checked
        )?;
        for w in &self.witnesses {
            writeln!(f, "  {w}")?;
        }
        Ok(())
    }
}

fn tensor_inner_product(a: &TensorExp, b: &TensorExp) -> TensorExp {
    let a = a.convert_slots(&[Basis::PowerSum, Basis::PowerSum]);
    let b = b.convert_slots(&[Basis::PowerSum, Basis::PowerSum]);
    let mut out = TensorExp::uniform(Basis::PowerSum, 2);
    for (x, c) in a.terms() {
        for (y, d) in b.terms() {
            let l = inner_product(&SymFunc::p(x[0].parts()), &SymFunc::p(y[0].parts()));
            let r = inner_product(&SymFunc::p(x[1].parts()), &SymFunc::p(y[1].parts()));
            let t = TensorExp::pure(&[l, r]).scale(&(c * d));
            out = out.add(&t);
        }
    }
    out
}

/// Checks product/coproduct compatibility `Δ∘M = (M⊗M)(Id⊗sw⊗Id)(Δ⊗Δ)`
/// for one of the four pairings. Case I additionally checks the antipode
/// identity. Cases II-IV are checked on `p_n ⊗ p_m`, `1 ≤ n, m ≤ max_weight`.
pub fn check_case(case: Case, max_weight: usize) -> CaseReport {
    let mut report = CaseReport {
        case,
        max_weight,
        holds: true,
        checked: 0,
        witnesses: Vec::new(),
        ratios: Vec::new(),
    };
    match case {
        Case::I => {
            let parts: Vec<Partition> = (0..=max_weight).flat_map(partitions_of).collect();
            for a in &parts {
                for b in &parts {
                    if a.weight() + b.weight() > max_weight || a > b {
                        continue;
                    }
                    report.checked += 1;
                    let lhs = outer_coproduct(&outer_product(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone())));
                    let rhs = tensor_outer_product(
                        &outer_coproduct(&SymFunc::schur(a.clone())),
                        &outer_coproduct(&SymFunc::schur(b.clone())),
                    );
                    if lhs != rhs {
                        report.holds = false;
                        report.witnesses.push(format!("Δ(s{a}·s{b}) mismatch"));
                    }
                }
            }
            for lambda in &parts {
                report.checked += 1;
                let v = antipode_identity(lambda);
                let expected = if lambda.is_empty() {
                    SymFunc::one(Basis::Schur)
                } else {
                    SymFunc::zero(Basis::Schur)
                };
                if v != expected {
                    report.holds = false;
                    report.witnesses.push(format!("Σ S(s{lambda}(1))·s{lambda}(2) = {v}"));
                }
            }
        }
        Case::II | Case::III | Case::IV => {
            for n in 1..=max_weight {
                for m in 1..=max_weight {
                    report.checked += 1;
                    let pn = SymFunc::p(&[n]);
                    let pm = SymFunc::p(&[m]);
                    let (a, b) = match case {
                        Case::II => (
                            inner_coproduct(&outer_product(&pn, &pm)),
                            tensor_outer_product(&inner_coproduct(&pn), &inner_coproduct(&pm))
                                .convert_slots(&[Basis::PowerSum, Basis::PowerSum]),
                        ),
                        Case::III => (
                            outer_coproduct(&inner_product(&pn, &pm)),
                            tensor_inner_product(&outer_coproduct(&pn), &outer_coproduct(&pm)),
                        ),
                        _ => (
                            inner_coproduct(&inner_product(&pn, &pm)),
                            tensor_inner_product(&inner_coproduct(&pn), &inner_coproduct(&pm)),
                        ),
                    };
                    let a = a.convert_slots(&[Basis::PowerSum, Basis::PowerSum]);
                    let slots = [Partition::row(n), Partition::row(n)];
                    let ca = a.coeff(&slots);
                    let cb = b.coeff(&slots);
                    if case == Case::IV && n == m {
                        report.ratios.push((n, &cb / &ca));
                    }
                    if a != b {
                        report.holds = false;
                        if n == m && !ca.is_zero() {
                            report.witnesses.push(format!(
                                "p[{n}]⊗p[{m}]: side a) = {ca}·p[{n}]⊗p[{n}], side b) = {cb}·p[{n}]⊗p[{n}], ratio {}",
                                &cb / &ca
                            ));
                        } else {
                            report.witnesses.push(format!("p[{n}]⊗p[{m}]: a) = {a}, b) = {b}"));
                        }
                    }
                }
            }
        }
    }
    report
}

/// `Σ S(s_{λ(1)}) · s_{λ(2)}`.
pub fn antipode_identity(lambda: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    for (l, r, c) in schur_coproduct_terms(lambda).iter() {
        let term = outer_product(&antipode(&SymFunc::schur(l.clone())), &SymFunc::schur(r.clone()));
        out = &out + &term.scale(&int(*c));
    }
    out
}
