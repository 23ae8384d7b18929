//! Randomized checks of the algebraic laws.

use proptest::prelude::*;

use schurkit::branching::BranchingOperator;
use schurkit::clifford::{circle_product, nl_direct};
use schurkit::cohomology::{coboundary, convolve, first_difference, invert, Cochain};
use schurkit::expr::{parse_expression, print_expression};
use schurkit::inner_alg::{inner_product, sn_character};
use schurkit::oracle::{character_oracle, kronecker_oracle};
use schurkit::outer_hopf::{antipode, outer_coproduct, outer_product, skew};
use schurkit::partition::{partitions_of, Partition};
use schurkit::symfunc::{rat, schur_scalar, Basis, SymFunc, TensorExp};

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    (0..=max_weight).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

fn symfunc(max_weight: usize) -> impl Strategy<Value = SymFunc> {
    (basis(), prop::collection::vec((partition(max_weight), -3i64..=3), 0..4))
        .prop_map(|(b, terms)| SymFunc::from_terms(b, terms.into_iter().map(|(p, c)| (p, rat(c)))))
}

fn table_cochain(max_weight: usize) -> impl Strategy<Value = Cochain> {
    prop::collection::vec((partition(max_weight), -2i64..=2), 0..5).prop_map(|entries| {
        let entries = entries
            .into_iter()
            .filter(|(p, _)| !p.is_empty())
            .map(|(p, c)| (vec![p], rat(c)));
        Cochain::table(1, entries).expect("normalized")
    })
}

fn tensor_scalar(t: &TensorExp, g: &SymFunc, h: &SymFunc) -> schurkit::Rational {
    let gs = g.to_schur();
    let hs = h.to_schur();
    let ts = t.convert_slots(&[Basis::Schur, Basis::Schur]);
    ts.contract(|slots| gs.coeff(&slots[0]) * hs.coeff(&slots[1]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
        prop_assert_eq!(p.to_frobenius().to_partition(), p);
    }

    #[test]
    fn conversions_round_trip(f in symfunc(5), b in basis()) {
        let g = f.convert(b);
        prop_assert_eq!(g.basis(), b);
        prop_assert!(g.convert(f.basis()).same_function(&f));
    }

    #[test]
    fn product_is_commutative_and_associative(f in symfunc(3), g in symfunc(3), h in symfunc(2)) {
        prop_assert_eq!(outer_product(&f, &g), outer_product(&g, &f));
        prop_assert_eq!(
            outer_product(&outer_product(&f, &g), &h),
            outer_product(&f, &outer_product(&g, &h))
        );
    }

    #[test]
    fn coproduct_is_dual_to_product(f in symfunc(5), g in symfunc(3), h in symfunc(2)) {
        let lhs = tensor_scalar(&outer_coproduct(&f), &g, &h);
        prop_assert_eq!(lhs, schur_scalar(&f, &outer_product(&g, &h)));
    }

    #[test]
    fn skew_is_adjoint_to_multiplication(f in symfunc(5), g in symfunc(2), h in symfunc(3)) {
        prop_assert_eq!(schur_scalar(&skew(&f, &g), &h), schur_scalar(&f, &outer_product(&g, &h)));
    }

    #[test]
    fn antipode_laws(f in symfunc(4), g in symfunc(3)) {
        prop_assert_eq!(antipode(&antipode(&f)), f.clone());
        prop_assert_eq!(antipode(&outer_product(&f, &g)), outer_product(&antipode(&f), &antipode(&g)));
    }

    #[test]
    fn inner_product_matches_character_triples(a in partition(4), b in partition(4)) {
        let n = a.weight();
        let b = if b.weight() == n { b } else { Partition::row(n) };
        let prod = inner_product(&SymFunc::schur(a.clone()), &SymFunc::schur(b.clone()));
        for c in partitions_of(n) {
            prop_assert_eq!(prod.coeff(&c), rat(kronecker_oracle(&a, &b, &c)));
        }
    }

    #[test]
    fn characters_match_power_sum_expansion(a in partition(6), rho in partition(6)) {
        let rho = if rho.weight() == a.weight() { rho } else { Partition::column(a.weight()) };
        prop_assert_eq!(sn_character(&a, &rho), character_oracle(&a, &rho));
    }

    #[test]
    fn cochain_inverse(phi in table_cochain(4)) {
        let unit = convolve(&phi, &invert(&phi)).unwrap();
        prop_assert_eq!(first_difference(&unit, &Cochain::counit(1), 6), None);
    }

    #[test]
    fn coboundary_is_a_homomorphism(a in table_cochain(2), b in table_cochain(2)) {
        let lhs = coboundary(&convolve(&a, &b).unwrap()).unwrap();
        let rhs = convolve(&coboundary(&a).unwrap(), &coboundary(&b).unwrap()).unwrap();
        prop_assert_eq!(first_difference(&lhs, &rhs, 3), None);
    }

    #[test]
    fn branching_is_invertible(phi in table_cochain(3), f in symfunc(4)) {
        let op = BranchingOperator::new(phi).unwrap();
        prop_assert!(op.inverse().apply(&op.apply(&f)).same_function(&f));
    }

    #[test]
    fn coboundary_gauge_gives_deformed_product(phi in table_cochain(3), f in symfunc(2), g in symfunc(2)) {
        let direct = schurkit::branching::deformed_product(&phi, &f, &g).unwrap();
        let clifford = circle_product(&f, &g, &coboundary(&phi).unwrap()).unwrap();
        prop_assert_eq!(direct, clifford);
    }

    #[test]
    fn schur_circle_is_associative(f in symfunc(2), g in symfunc(2), h in symfunc(2)) {
        let pi = Cochain::schur_pairing();
        let c = |x: &SymFunc, y: &SymFunc| circle_product(x, y, &pi).unwrap();
        prop_assert_eq!(c(&c(&f, &g), &h), c(&f, &c(&g, &h)));
    }

    #[test]
    fn newell_littlewood_is_commutative(a in partition(4), b in partition(4)) {
        prop_assert_eq!(nl_direct(&a, &b), nl_direct(&b, &a));
    }

    #[test]
    fn print_then_parse(f in symfunc(5)) {
        let text = print_expression(&f);
        let back = parse_expression(&text).unwrap();
        prop_assert_eq!(print_expression(&back), text);
        prop_assert_eq!(back, f);
    }
}
