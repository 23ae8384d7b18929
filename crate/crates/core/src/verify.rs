//! The acceptance checks, one function per criterion, shared by the test
//! suite and the `selftest` subcommand.
//!
//! Every bound is `min(stated bound, max_weight)`, so `run_all(8)` runs the
//! full suite and smaller values give a quick smoke run.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::branching::{check_group_like, deformed_square_counit, BranchingOperator};
use crate::clifford::{
    circle_product, gauged_circle_product, gauged_via_branching, grade_contract, nl_direct, nl_product,
    nl_via_branching, nl_via_gauge, variant_product, Flavor, Reading,
};
use crate::cohomology::{classify1, coboundary, first_difference, invert, Class1, Cochain};
use crate::inner_alg::inner_product;
use crate::oracle::{antipode_recursive, lr_oracle, partition_count, series_oracle, ssyt_count};
use crate::outer_hopf::{antipode, check_case, lr_product_terms, outer_product, schur_coproduct_terms, skew, Case};
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::series::{series, series_product, SeriesId};
use crate::symfunc::{
    kostka, matrix_count_check, rat, schur_scalar, transition_matrix, Basis, MatrixKind, RatMatrix, Rational, SymFunc,
    TensorExp,
};

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} {} ({} checks, {:.1} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            self.elapsed.as_secs_f64()
        )?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 8 {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(self, id: u8, title: &'static str, start: Instant) -> CriterionReport {
        let passed = self.failures.is_empty();
        let mut notes = self.notes;
        notes.extend(self.failures.into_iter().map(|f| format!("failure: {f}")));
        CriterionReport {
            id,
            title,
            passed,
            checks: self.checks,
            notes,
            elapsed: start.elapsed(),
        }
    }
}

fn int(k: u64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

fn schur(p: &Partition) -> SymFunc {
    SymFunc::schur(p.clone())
}

/// Pairs `(λ, μ)` with `|λ| + |μ| ≤ n`.
fn pairs_up_to(n: usize) -> Vec<(Partition, Partition)> {
    let parts = partitions_up_to(n);
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            if a.weight() + b.weight() <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// 1. Littlewood-Richardson products agree with polynomial multiplication.
pub fn criterion_lr(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let bound = max_weight.min(8);
    let mut t = Tally::new();
    for (a, b) in pairs_up_to(bound) {
        let kernel: BTreeMap<Partition, i64> = lr_product_terms(&a, &b)
            .iter()
            .map(|(nu, c)| (nu.clone(), *c as i64))
            .collect();
        let oracle = lr_oracle(&a, &b);
        t.check(kernel == oracle, || format!("s{a}·s{b}: {kernel:?} vs {oracle:?}"));
    }
    t.note(format!("all pairs with |λ|+|μ| ≤ {bound}"));
    t.finish(1, "Littlewood-Richardson rule vs polynomial expansion", start)
}

fn coproduct_tensor(lambda: &Partition) -> TensorExp {
    let mut t = TensorExp::uniform(Basis::Schur, 2);
    for (l, r, c) in schur_coproduct_terms(lambda).iter() {
        t.add_term(vec![l.clone(), r.clone()], int(*c));
    }
    t
}

/// 2. Outer Hopf algebra axioms.
pub fn criterion_hopf(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let bound = max_weight.min(8);
    let mut t = Tally::new();
    let mut memo = HashMap::new();
    for lambda in partitions_up_to(bound) {
        let delta = coproduct_tensor(&lambda);
        // coassociativity
        let mut left = TensorExp::uniform(Basis::Schur, 3);
        let mut right = TensorExp::uniform(Basis::Schur, 3);
        for (slots, c) in delta.terms() {
            for (a, b, k) in schur_coproduct_terms(&slots[0]).iter() {
                left.add_term(vec![a.clone(), b.clone(), slots[1].clone()], c * int(*k));
            }
            for (a, b, k) in schur_coproduct_terms(&slots[1]).iter() {
                right.add_term(vec![slots[0].clone(), a.clone(), b.clone()], c * int(*k));
            }
        }
        t.check(left == right, || format!("coassociativity at s{lambda}"));
        // counit laws
        let mut eps_left = SymFunc::zero(Basis::Schur);
        let mut eps_right = SymFunc::zero(Basis::Schur);
        for (slots, c) in delta.terms() {
            if slots[0].is_empty() {
                eps_left.add_term(slots[1].clone(), c.clone());
            }
            if slots[1].is_empty() {
                eps_right.add_term(slots[0].clone(), c.clone());
            }
        }
        t.check(eps_left == schur(&lambda) && eps_right == schur(&lambda), || {
            format!("counit law at s{lambda}")
        });
        // antipode on both sides, and against the recursive oracle
        let expected = if lambda.is_empty() {
            SymFunc::one(Basis::Schur)
        } else {
            SymFunc::zero(Basis::Schur)
        };
        let mut sl = SymFunc::zero(Basis::Schur);
        let mut sr = SymFunc::zero(Basis::Schur);
        for (slots, c) in delta.terms() {
            sl = &sl + &outer_product(&antipode(&schur(&slots[0])), &schur(&slots[1])).scale(c);
            sr = &sr + &outer_product(&schur(&slots[0]), &antipode(&schur(&slots[1]))).scale(c);
        }
        t.check(sl == expected && sr == expected, || {
            format!("antipode identity at s{lambda}")
        });
        if lambda.weight() <= 6 {
            let rec = antipode_recursive(&lambda, &mut memo);
            t.check(rec == antipode(&schur(&lambda)), || {
                format!("recursive antipode at s{lambda}")
            });
        }
    }
    let case = check_case(Case::I, bound);
    t.checks += case.checked;
    if !case.holds {
        t.failures.extend(case.witnesses.iter().take(8).cloned());
    }
    t.note(format!(
        "|λ| ≤ {bound}; bialgebra compatibility on pairs of total weight ≤ {bound}"
    ));
    t.finish(2, "Hopf axioms of the outer Hopf algebra", start)
}

/// 3. Cases II and III are compatible, Case IV fails by `z_n`.
pub fn criterion_cases(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let bound = max_weight.min(8);
    let mut t = Tally::new();
    for case in [Case::II, Case::III] {
        let r = check_case(case, bound);
        t.checks += r.checked;
        if !r.holds {
            t.failures.push(format!("case {case:?}: {}", r.witnesses.join("; ")));
        }
    }
    let iv = check_case(Case::IV, bound);
    t.check(!iv.holds, || "case IV unexpectedly compatible".into());
    for n in 1..=bound {
        let z = Rational::from_integer(Partition::row(n).z_value());
        let found = iv.ratios.iter().find(|(k, _)| *k == n).map(|(_, r)| r.clone());
        t.check(found.as_ref() == Some(&z), || {
            format!("case IV ratio at n={n}: {found:?}, expected {z}")
        });
    }
    let shown: Vec<String> = iv.ratios.iter().map(|(n, r)| format!("n={n}: {r}")).collect();
    t.note(format!("case IV side b)/side a) on p_n⊗p_n: {}", shown.join(", ")));
    t.finish(3, "Cases II and III hold, Case IV fails by z_n", start)
}

/// 4. Laplace identities for the scalar product, skew and inner product.
pub fn criterion_laplace(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2, b3) = (max_weight.min(8), max_weight.min(7), max_weight.min(6));
    let mut t = Tally::new();
    // (λ | μ·ν) = Σ (λ(1)|μ)(λ(2)|ν), and the mirrored order
    for (mu, nu) in pairs_up_to(b1) {
        let prod = outer_product(&schur(&mu), &schur(&nu)).convert(Basis::PowerSum);
        for lambda in partitions_of(mu.weight() + nu.weight()) {
            let lhs = schur_scalar(&schur(&lambda).convert(Basis::PowerSum), &prod);
            let lhs_mirror = schur_scalar(&prod, &schur(&lambda).convert(Basis::PowerSum));
            let rhs: Rational = schur_coproduct_terms(&lambda)
                .iter()
                .filter(|(l, r, _)| *l == mu && *r == nu)
                .map(|(_, _, c)| int(*c))
                .sum();
            t.check(lhs == rhs && lhs_mirror == rhs, || format!("(s{lambda}|s{mu}·s{nu})"));
        }
    }
    // (s_λ·s_μ)/s_ν = Σ (s_λ/s_ν(1))·(s_μ/s_ν(2))
    for (lambda, mu) in pairs_up_to(b2) {
        let prod = outer_product(&schur(&lambda), &schur(&mu));
        for nu in partitions_up_to(lambda.weight() + mu.weight()) {
            let lhs = skew(&prod, &schur(&nu));
            let mut rhs = SymFunc::zero(Basis::Schur);
            for (a, b, c) in schur_coproduct_terms(&nu).iter() {
                let l = skew(&schur(&lambda), &schur(a));
                let r = skew(&schur(&mu), &schur(b));
                if !l.is_zero() && !r.is_zero() {
                    rhs = &rhs + &outer_product(&l, &r).scale(&int(*c));
                }
            }
            t.check(lhs == rhs, || format!("(s{lambda}·s{mu})/s{nu}"));
        }
    }
    // s_λ ⋆ (s_μ·s_ν) = Σ (s_λ(1)⋆s_μ)·(s_λ(2)⋆s_ν)
    for (mu, nu) in pairs_up_to(b3) {
        let prod = outer_product(&schur(&mu), &schur(&nu));
        for lambda in partitions_of(mu.weight() + nu.weight()) {
            let lhs = inner_product(&schur(&lambda), &prod);
            let mut rhs = SymFunc::zero(Basis::Schur);
            for (a, b, c) in schur_coproduct_terms(&lambda).iter() {
                if a.weight() != mu.weight() {
                    continue;
                }
                let l = inner_product(&schur(a), &schur(&mu));
                let r = inner_product(&schur(b), &schur(&nu));
                rhs = &rhs + &outer_product(&l, &r).scale(&int(*c));
            }
            t.check(lhs == rhs, || format!("s{lambda}⋆(s{mu}·s{nu})"));
        }
    }
    t.note(format!("scalar ≤ {b1}, skew ≤ {b2}, inner ≤ {b3}"));
    t.finish(4, "Laplace pairing identities", start)
}

/// 5. Kostka numbers and the matrix-count description of `M(e,m)`, `M(h,m)`.
pub fn criterion_kostka(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2) = (max_weight.min(8), max_weight.min(6));
    let mut t = Tally::new();
    for n in 0..=b1 {
        let parts = partitions_of(n);
        t.check(parts.len() as u64 == partition_count(n), || format!("p({n})"));
        for lambda in &parts {
            for mu in &parts {
                // shape μ, content λ
                let k = kostka(mu, lambda);
                let count = ssyt_count(mu, lambda.parts());
                t.check(k == count, || format!("K({mu},{lambda}) = {k}, tableaux {count}"));
            }
        }
    }
    for n in 0..=b2 {
        let parts = partitions_of(n);
        let em = transition_matrix(Basis::Elementary, Basis::Monomial, n);
        let hm = transition_matrix(Basis::Complete, Basis::Monomial, n);
        for (i, lambda) in parts.iter().enumerate() {
            for (j, mu) in parts.iter().enumerate() {
                let e = int(matrix_count_check(MatrixKind::ZeroOne, lambda, mu));
                let h = int(matrix_count_check(MatrixKind::NonNegative, lambda, mu));
                t.check(*em.get(i, j) == e, || format!("M(e,m)[{lambda},{mu}]"));
                t.check(*hm.get(i, j) == h, || format!("M(h,m)[{lambda},{mu}]"));
            }
        }
    }
    t.note(format!("Kostka ≤ {b1}, matrix counts ≤ {b2}"));
    t.finish(5, "Kostka numbers and transition-matrix counts", start)
}

/// 6. Series inverse pairs and closed contents.
pub fn criterion_series(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2) = (max_weight.min(8), max_weight.min(6));
    let mut t = Tally::new();
    use SeriesId::*;
    for (x, y) in [(L, M), (P, Q), (A, B), (C, D), (E, F), (G, H), (R, S), (V, W)] {
        let prod = series_product(&series(x, b1).expansion, &series(y, b1).expansion);
        t.check(prod == SymFunc::one(Basis::Schur), || format!("{x}·{y} = {prod}"));
    }
    for id in [L, M, P, Q, A, B, C, D, V, W] {
        let oracle = series_oracle(id, b2).expect("closed series");
        let closed: BTreeMap<Partition, i64> = series(id, b2)
            .expansion
            .terms()
            .map(|(l, c)| (l.clone(), i64::try_from(c.to_integer()).expect("small")))
            .collect();
        t.check(oracle == closed, || format!("content of {id} at cap {b2}"));
    }
    t.note(format!("inverse pairs at cap {b1}, contents at cap {b2}"));
    t.finish(6, "S-function series", start)
}

/// 7. Classification of the characteristic cochains.
pub fn criterion_cohomology(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2) = (max_weight.min(8), max_weight.min(5));
    let mut t = Tally::new();
    for id in SeriesId::GROUP_LIKE {
        let v = classify1(&Cochain::series(id), b1).expect("arity 1");
        t.check(v.class == Class1::Cocycle, || format!("{id}: {v}"));
    }
    let mut witnesses = Vec::new();
    for id in SeriesId::GENERIC {
        let v = classify1(&Cochain::series(id), b1).expect("arity 1");
        match &v.class {
            Class1::Generic { lambda, mu, .. } => witnesses.push(format!("{id} at (s{lambda}, s{mu})")),
            _ => t.check(false, || format!("{id}: {v}")),
        }
        t.checks += 1;
    }
    t.note(format!("generic witnesses: {}", witnesses.join(", ")));
    let table = Cochain::table(
        1,
        [
            (vec![Partition::row(1)], rat(3)),
            (vec![Partition::row(2)], rat(5)),
            (vec![Partition::column(2)], rat(7)),
        ],
    )
    .expect("normalized");
    for (name, phi) in [
        ("series:D", Cochain::series(SeriesId::D)),
        ("series:M", Cochain::series(SeriesId::M)),
        ("table", table),
    ] {
        let dd = coboundary(&coboundary(&phi).expect("arity 1")).expect("arity 2");
        let diff = first_difference(&dd, &Cochain::counit(3), b2);
        t.check(diff.is_none(), || format!("∂∂({name}) ≠ ε at {diff:?}"));
    }
    t.note(format!("1-cocycles up to weight {b1}; ∂∘∂ = ε up to weight {b2}"));
    t.finish(7, "Cochain classification", start)
}

/// 8. Branching operators.
pub fn criterion_branching(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2) = (max_weight.min(8), max_weight.min(6));
    let mut t = Tally::new();
    for id in SeriesId::PRIMARY {
        let op = BranchingOperator::series(id);
        let inv = op.inverse();
        for lambda in partitions_up_to(b1) {
            let f = schur(&lambda);
            t.check(inv.apply(&op.apply(&f)) == f, || format!("/{id} inverse at s{lambda}"));
        }
    }
    for id in SeriesId::GROUP_LIKE.into_iter().chain(SeriesId::GENERIC) {
        let r = check_group_like(id, b2);
        t.checks += r.checked;
        if !r.holds {
            t.failures.push(r.to_string());
        }
    }
    t.note(format!("inverses on |λ| ≤ {b1}; product identities on |λ|+|μ| ≤ {b2}"));
    t.finish(8, "Branching operators", start)
}

/// A polynomial `a·φ1² + b·φ2 + c·φ11 + …` in the three values of a
/// 1-cochain on `s_1`, `s_2`, `s_11`, with total degree at most two.
#[derive(Clone, Debug, PartialEq)]
pub struct Quadratic {
    /// Coefficients of `1, φ1, φ2, φ11, φ1², φ1φ2, φ1φ11, φ2², φ2φ11, φ11²`.
    pub coeffs: [Rational; 10],
}

fn monomials(x: &[Rational; 3]) -> [Rational; 10] {
    let [a, b, c] = x;
    [
        rat(1),
        a.clone(),
        b.clone(),
        c.clone(),
        a * a,
        a * b,
        a * c,
        b * b,
        b * c,
        c * c,
    ]
}

impl Quadratic {
    /// Interpolates `f` from its values on the degree-two simplex lattice.
    pub fn interpolate(f: impl Fn(&[Rational; 3]) -> Rational) -> Quadratic {
        let mut points = Vec::new();
        for i in 0..=2i64 {
            for j in 0..=2 - i {
                for k in 0..=2 - i - j {
                    points.push([rat(i), rat(j), rat(k)]);
                }
            }
        }
        let mut m = RatMatrix::zeros(10, 10);
        for (r, x) in points.iter().enumerate() {
            for (c, v) in monomials(x).into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        let inv = m.inverse().expect("unisolvent lattice");
        let values: Vec<Rational> = points.iter().map(&f).collect();
        let coeffs = std::array::from_fn(|i| (0..10).map(|j| inv.get(i, j) * &values[j]).sum());
        Quadratic { coeffs }
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        monomials(x).iter().zip(&self.coeffs).map(|(m, c)| m * c).sum()
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 10] = ["", "φ1", "φ2", "φ11", "φ1²", "φ1·φ2", "φ1·φ11", "φ2²", "φ2·φ11", "φ11²"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(NAMES) {
            if c.is_zero() {
                continue;
            }
            let body = (!name.is_empty()).then(|| name.to_string());
            write_term(f, first, c, body)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, body: Option<String>) -> fmt::Result {
    let neg = c < &Rational::zero();
    let abs = if neg { -c } else { c.clone() };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        _ => {}
    }
    match body {
        None => write!(f, "{abs}"),
        Some(b) if abs == rat(1) => write!(f, "{b}"),
        Some(b) => write!(f, "{abs}{b}"),
    }
}

fn table_cochain(x: &[Rational; 3]) -> Cochain {
    Cochain::table(
        1,
        [
            (vec![Partition::row(1)], x[0].clone()),
            (vec![Partition::row(2)], x[1].clone()),
            (vec![Partition::column(2)], x[2].clone()),
        ],
    )
    .expect("normalized")
}

/// `ε∘Φ^{-1}(Φ(s_1)·Φ(s_1))` as a polynomial in the values of `φ`.
pub fn square_counit_polynomial() -> Quadratic {
    Quadratic::interpolate(|x| deformed_square_counit(&table_cochain(x)).expect("arity 1"))
}

/// The closed form `φ^{-1}(s_11) + φ^{-1}(s_2) + φ(s_1)²`, with
/// `φ^{-1}` computed by convolution inversion.
pub fn closed_form_square_counit(phi: &Cochain) -> Rational {
    let inv = invert(phi);
    let v = |p: Partition| inv.value(&[p]);
    let f1 = phi.value(&[Partition::row(1)]);
    v(Partition::column(2)) + v(Partition::row(2)) + &f1 * &f1
}

/// 9. The deformed counit on `s_1 ∘_φ s_1`.
pub fn criterion_deformed_counit(_max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let mut t = Tally::new();
    let computed = square_counit_polynomial();
    let closed = Quadratic::interpolate(|x| closed_form_square_counit(&table_cochain(x)));
    // the interpolant must reproduce the pipeline off the lattice
    for x in [
        [rat(3), rat(5), rat(7)],
        [rat(-2), crate::symfunc::rat_frac(1, 2), rat(4)],
    ] {
        let direct = deformed_square_counit(&table_cochain(&x)).expect("arity 1");
        t.check(computed.eval(&x) == direct, || "interpolation check".into());
    }
    t.check(computed == closed, || {
        format!("symbolic: computed {computed}, closed form {closed}")
    });
    let x = [rat(3), rat(5), rat(7)];
    t.note(format!(
        "table φ(s1)=3, φ(s2)=5, φ(s11)=7: computed {}, closed form {}",
        computed.eval(&x),
        closed.eval(&x)
    ));
    let m = deformed_square_counit(&Cochain::series(SeriesId::M)).expect("arity 1");
    t.check(m == rat(2), || format!("φ_M: computed {m}, expected 2"));
    let d = deformed_square_counit(&Cochain::series(SeriesId::D)).expect("arity 1");
    t.note(format!("φ_M gives {m}; φ_D gives {d} (counit of s1·s1 is 0)"));
    t.finish(9, "Deformed counit on s1∘s1", start)
}

/// Homogeneous triples `(a, b, c)` with `|a|+|b|+|c| ≤ n`.
fn triples_up_to(n: usize) -> Vec<[Partition; 3]> {
    let parts = partitions_up_to(n);
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            for c in &parts {
                if a.weight() + b.weight() + c.weight() <= n {
                    out.push([a.clone(), b.clone(), c.clone()]);
                }
            }
        }
    }
    out
}

/// 10. Cliffordized products.
pub fn criterion_clifford(max_weight: usize) -> CriterionReport {
    let start = Instant::now();
    let (b1, b2, b3) = (max_weight.min(6), max_weight.min(4), max_weight.min(5));
    let mut t = Tally::new();
    for (name, pi) in [
        ("schur", Cochain::schur_pairing()),
        ("schur-inv", Cochain::schur_pairing_inverse()),
    ] {
        let circ = |x: &SymFunc, y: &SymFunc| circle_product(x, y, &pi).expect("arity 2");
        for [a, b, c] in triples_up_to(b1) {
            let (x, y, z) = (schur(&a), schur(&b), schur(&c));
            let left = circ(&circ(&x, &y), &z);
            let right = circ(&x, &circ(&y, &z));
            t.check(left == right, || format!("{name}: associativity at s{a}, s{b}, s{c}"));
        }
    }
    let pi = Cochain::schur_pairing();
    for lambda in partitions_up_to(b2) {
        for mu in partitions_up_to(b2) {
            let direct = nl_direct(&lambda, &mu);
            let circ = circle_product(&schur(&lambda), &schur(&mu), &pi).expect("arity 2");
            let gauge = nl_via_gauge(&lambda, &mu, SeriesId::F).expect("F gauges");
            let o = nl_via_branching(&lambda, &mu, Flavor::O);
            let sp = nl_via_branching(&lambda, &mu, Flavor::Sp);
            t.check(direct == circ && direct == gauge && direct == o && direct == sp, || {
                format!("Newell-Littlewood paths differ at {lambda}, {mu}")
            });
            let weights_ok = direct
                .grades()
                .iter()
                .all(|g| g <= &(lambda.weight() + mu.weight()) && (lambda.weight() + mu.weight() - g) % 2 == 0);
            t.check(weights_ok, || format!("Newell-Littlewood grades at {lambda}, {mu}"));
            if lambda.weight() + mu.weight() <= 4 {
                let phi = Cochain::series(SeriesId::F);
                let (x, y) = (schur(&lambda), schur(&mu));
                let g1 = gauged_circle_product(&x, &y, &pi, &phi).expect("arity");
                let g2 = gauged_via_branching(&x, &y, &pi, &phi).expect("arity");
                t.check(g1 == g2, || format!("gauge paths differ at {lambda}, {mu}"));
            }
        }
    }
    let one = Partition::row(1);
    let shown = nl_product(&one, &one, Flavor::Sp).to_string();
    t.check(shown == "<2> + <1,1> + <0>", || format!("⟨1⟩⊗⟨1⟩ printed as {shown}"));
    let parts = partitions_up_to(b3);
    for k in 1..=8u8 {
        let readings: &[Reading] = if k >= 7 {
            &[Reading::Literal, Reading::Second]
        } else {
            &[Reading::Literal]
        };
        for &reading in readings {
            for a in &parts {
                for b in &parts {
                    let allowed = grade_contract(k, a.weight(), b.weight()).expect("k in range");
                    let v = variant_product(k, &schur(a), &schur(b), &pi, reading).expect("arity 2");
                    t.check(v.grades().iter().all(|g| allowed.contains(g)), || {
                        format!(
                            "∘{k} ({reading:?}) on s{a}, s{b}: grades {:?}, allowed {allowed:?}",
                            v.grades()
                        )
                    });
                }
            }
        }
    }
    t.note(format!(
        "associativity on triples ≤ {b1}, Newell-Littlewood on |λ|,|μ| ≤ {b2}, grade contracts ≤ {b3}"
    ));
    t.finish(10, "Cliffordized products", start)
}

/// Runs one criterion by number.
pub fn run_criterion(id: u8, max_weight: usize) -> Option<CriterionReport> {
    Some(match id {
        1 => criterion_lr(max_weight),
        2 => criterion_hopf(max_weight),
        3 => criterion_cases(max_weight),
        4 => criterion_laplace(max_weight),
        5 => criterion_kostka(max_weight),
        6 => criterion_series(max_weight),
        7 => criterion_cohomology(max_weight),
        8 => criterion_branching(max_weight),
        9 => criterion_deformed_counit(max_weight),
        10 => criterion_clifford(max_weight),
        _ => return None,
    })
}

pub fn run_all(max_weight: usize) -> Vec<CriterionReport> {
    (1..=10).filter_map(|id| run_criterion(id, max_weight)).collect()
}
