//! Property tests for the algebraic laws the engine relies on.

use cliffordforge::checkerboard::{
    choice_coeff, eval_series, path_count_oracle, path_count_starting, series_psi, Psi, Step,
};
use cliffordforge::dirac::{build_u, build_udag, pythagorean_triple, DiracAlgebra, DiracConfig, EnergyMomentum};
use cliffordforge::text::parse_clifford;
use cliffordforge::{
    brace_mul, brace_to_hat, cd_conj, cd_mul, from_matrix, ga_action, ga_mul, hat_mul, hat_star, iterate_clifford,
    to_matrix, BraceSum, CDElement, CliffordAlgebra, CliffordElement, GaussianRational, GroupAlgebra,
    GroupAlgebraElement, HatElement, InvolutiveAlgebra, Iterant, Rational,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("non-zero", |r| !r.is_zero())
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn iterant(n: usize) -> impl Strategy<Value = Iterant> {
    prop::collection::vec(gaussian(), n).prop_map(Iterant::new)
}

fn real_iterant(n: usize) -> impl Strategy<Value = Iterant> {
    prop::collection::vec(rational(), n).prop_map(|v| Iterant::new(v.into_iter().map(GaussianRational::from).collect()))
}

fn hat<A: InvolutiveAlgebra, S: Strategy<Value = A>>(base: impl Fn() -> S) -> impl Strategy<Value = HatElement<A>> {
    (base(), base()).prop_map(|(a, b)| HatElement::new(a, b))
}

fn group_element(alg: GroupAlgebra) -> impl Strategy<Value = GroupAlgebraElement> {
    let (order, degree) = (alg.group().order(), alg.degree());
    prop::collection::vec(iterant(degree), order).prop_map(move |vs| {
        vs.into_iter().enumerate().fold(alg.zero(), |acc, (g, v)| {
            acc.try_add(&alg.term_index(g, v).unwrap()).unwrap()
        })
    })
}

fn clifford(alg: CliffordAlgebra<Rational>) -> impl Strategy<Value = CliffordElement<Rational>> {
    let keys = alg.basis_keys();
    prop::collection::vec(rational(), keys.len()).prop_map(move |cs| {
        keys.iter()
            .zip(cs)
            .fold(alg.zero(), |acc, (k, c)| acc.add(&alg.word(k, c).unwrap()))
    })
}

fn cd(level: usize) -> impl Strategy<Value = CDElement> {
    prop::collection::vec(rational(), 1 << level).prop_map(|v| CDElement::from_coeffs(v).unwrap())
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn hat_laws<A: InvolutiveAlgebra>(
    x: &HatElement<A>,
    y: &HatElement<A>,
    z: &HatElement<A>,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(hat_mul(&hat_mul(x, y), z), hat_mul(x, &hat_mul(y, z)));
    prop_assert_eq!(hat_star(&hat_star(x)), x.clone());
    prop_assert_eq!(hat_star(&hat_mul(x, y)), hat_mul(&hat_star(x), &hat_star(y)));
    Ok(())
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn rationals_form_a_field(a in rational(), b in rational(), c in rational(), d in nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&d * &d.recip().unwrap(), Rational::one());
        prop_assert_eq!(&a - &a, Rational::zero());
    }

    #[test]
    fn gaussian_conjugation_and_norm(z in gaussian(), w in gaussian()) {
        prop_assert_eq!((&z * &w).conj(), &z.conj() * &w.conj());
        prop_assert_eq!((&z * &w).norm_sqr(), &z.norm_sqr() * &w.norm_sqr());
        if !w.is_zero() {
            prop_assert_eq!(&(&z * &w).checked_div(&w).unwrap(), &z);
        }
    }

    #[test]
    fn hat_over_rationals(x in hat(rational), y in hat(rational), z in hat(rational)) {
        hat_laws(&x, &y, &z)?;
    }

    #[test]
    fn hat_over_complex_with_conjugation(x in hat(gaussian), y in hat(gaussian), z in hat(gaussian)) {
        hat_laws(&x, &y, &z)?;
    }

    #[test]
    fn hat_over_iterants_with_reversal(x in hat(|| real_iterant(2)), y in hat(|| real_iterant(2)), z in hat(|| real_iterant(2))) {
        hat_laws(&x, &y, &z)?;
    }

    #[test]
    fn eta_conjugates_by_star(a in gaussian()) {
        let eta = HatElement::eta(&a);
        prop_assert_eq!(hat_mul(&hat_mul(&eta, &HatElement::base(a.clone())), &eta), HatElement::base(a.star()));
    }

    #[test]
    fn brace_algebra_matches_hat(u in (gaussian(), gaussian()), v in (gaussian(), gaussian()), w in (gaussian(), gaussian())) {
        let (u, v, w) = (BraceSum::new(u.0, u.1), BraceSum::new(v.0, v.1), BraceSum::new(w.0, w.1));
        prop_assert_eq!(brace_mul(&brace_mul(&u, &v), &w), brace_mul(&u, &brace_mul(&v, &w)));
        prop_assert_eq!(brace_to_hat(&brace_mul(&u, &v)), hat_mul(&brace_to_hat(&u), &brace_to_hat(&v)));
    }

    #[test]
    fn clifford_round_trips_through_text(x in clifford(iterate_clifford(Rational::one(), 3))) {
        let alg = x.algebra();
        let printed = x.to_string();
        prop_assert_eq!(parse_clifford(&printed, &alg).unwrap(), x, "printed as {}", printed);
    }

    #[test]
    fn clifford_split_join(x in clifford(iterate_clifford(Rational::one(), 3)), y in clifford(iterate_clifford(Rational::one(), 3))) {
        prop_assert_eq!(CliffordElement::join_top(&x.split_top().unwrap()), x.clone());
        prop_assert_eq!(x.mul(&y).split_top().unwrap(), hat_mul(&x.split_top().unwrap(), &y.split_top().unwrap()));
    }

    #[test]
    fn cayley_dickson_conjugation_reverses(x in cd(3), y in cd(3)) {
        let xy = cd_mul(&x, &y).unwrap();
        prop_assert_eq!(cd_conj(&xy), cd_mul(&cd_conj(&y), &cd_conj(&x)).unwrap());
        prop_assert_eq!(xy.norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn quaternions_associate(x in cd(2), y in cd(2), z in cd(2)) {
        let lhs = cd_mul(&cd_mul(&x, &y).unwrap(), &z).unwrap();
        prop_assert_eq!(lhs, cd_mul(&x, &cd_mul(&y, &z).unwrap()).unwrap());
    }

    #[test]
    fn choice_coefficient_difference(x in rational(), d in nonzero_rational(), k in 1u32..8) {
        let diff = (&choice_coeff(&(&x + &d), &d, k) - &choice_coeff(&x, &d, k)).checked_div(&d).unwrap();
        prop_assert_eq!(diff, choice_coeff(&x, &d, k - 1));
    }

    #[test]
    fn psi_zero_is_symmetric(r in rational(), l in rational()) {
        let s = series_psi(Psi::Zero, 10).unwrap();
        prop_assert_eq!(eval_series(&s, &r, &l), eval_series(&s, &l, &r));
    }

    #[test]
    fn path_counts(r in 0u32..6, l in 0u32..6) {
        let total: u64 = (0..=r + l).map(|c| path_count_oracle(r, l, c)).sum();
        let binomial = (1..=u64::from(l)).fold(1u64, |acc, k| acc * (u64::from(r) + k) / k);
        prop_assert_eq!(total, binomial);
        for c in 0..=r + l {
            prop_assert_eq!(path_count_oracle(r, l, c), path_count_oracle(l, r, c));
            if r + l > 0 {
                let split = path_count_starting(r, l, c, Step::Right) + path_count_starting(r, l, c, Step::Left);
                prop_assert_eq!(path_count_oracle(r, l, c), split);
            }
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn c3_algebra_is_associative(
        x in group_element(GroupAlgebra::cyclic(3).unwrap()),
        y in group_element(GroupAlgebra::cyclic(3).unwrap()),
        z in group_element(GroupAlgebra::cyclic(3).unwrap()),
        w in iterant(3),
    ) {
        let xy = ga_mul(&x, &y).unwrap();
        prop_assert_eq!(ga_mul(&xy, &z).unwrap(), ga_mul(&x, &ga_mul(&y, &z).unwrap()).unwrap());
        prop_assert_eq!(ga_action(&xy, &w).unwrap(), ga_action(&x, &ga_action(&y, &w).unwrap()).unwrap());
    }

    #[test]
    fn matrix_image_is_an_isomorphism(
        x in group_element(GroupAlgebra::cyclic(3).unwrap()),
        y in group_element(GroupAlgebra::cyclic(3).unwrap()),
    ) {
        let (mx, my) = (to_matrix(&x).unwrap(), to_matrix(&y).unwrap());
        prop_assert_eq!(to_matrix(&ga_mul(&x, &y).unwrap()).unwrap(), mx.mul(&my).unwrap());
        prop_assert_eq!(from_matrix(&mx, 3).unwrap(), x);
    }

    #[test]
    fn fermion_relations_for_triples(u in 2i64..12, v in 1i64..11) {
        prop_assume!(v < u);
        let (p, m, e) = pythagorean_triple(u, v);
        let pm = EnergyMomentum::new(e.into(), vec![p.into()], m.into()).unwrap();
        let alg = DiracAlgebra::new();
        let cfg = DiracConfig::OneD;
        let (uu, ud) = (build_u(&alg, cfg, &pm).unwrap(), build_udag(&alg, cfg, &pm).unwrap());
        prop_assert!((&uu * &uu).is_zero());
        prop_assert!((&ud * &ud).is_zero());
        let four_e2 = alg.scalar(GaussianRational::from(4 * e * e));
        prop_assert_eq!(&(&uu * &ud) + &(&ud * &uu), four_e2);
    }
}
