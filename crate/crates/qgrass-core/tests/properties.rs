use proptest::prelude::*;
use qgrass_core::indices::{theta, MultiIndex};
use qgrass_core::qarith::{q_binom, Mode, ScalarQ};
use qgrass_core::superspaces::{Family, SpaceSpec};
use qgrass_core::weyl::smash::{normal_form_op, smash_normal_form, smash_product};
use qgrass_core::weyl::{operators_equal, Atom, OpSum, OperatorWord};

fn key(m: usize, n: usize) -> impl Strategy<Value = MultiIndex> {
    (prop::collection::vec(-3i64..4, m), prop::collection::vec(-2i64..3, n)).prop_map(|(b, f)| MultiIndex::new(b, f))
}

fn basis_key(m: usize, n: usize, bos: i64, fer: i64) -> impl Strategy<Value = MultiIndex> {
    (prop::collection::vec(0..=bos, m), prop::collection::vec(0..=fer, n)).prop_map(|(b, f)| MultiIndex::new(b, f))
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Generic), Just(Mode::root_of_unity(3).unwrap()), Just(Mode::root_of_unity(8).unwrap())]
}

fn mul(sp: &SpaceSpec, a: &MultiIndex, b: &MultiIndex) -> Option<(ScalarQ, MultiIndex)> {
    sp.multiply_monomials(a, b).unwrap()
}

fn triple_product(sp: &SpaceSpec, a: &MultiIndex, b: &MultiIndex, c: &MultiIndex, left: bool) -> Option<(ScalarQ, MultiIndex)> {
    let (first, rest) = if left { (mul(sp, a, b)?, c) } else { (mul(sp, b, c)?, a) };
    let (c1, k1) = first;
    let (c2, k2) = if left { mul(sp, &k1, rest)? } else { mul(sp, rest, &k1)? };
    Some((&c1 * &c2, k2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_a_bicharacter(a in key(2, 2), b in key(2, 2), c in key(2, 2), mode in mode()) {
        let th = |x: &MultiIndex, y: &MultiIndex| theta(x, y, &mode).unwrap();
        prop_assert_eq!(th(&a.add(&b), &c), &th(&a, &c) * &th(&b, &c));
        prop_assert_eq!(th(&a, &b.add(&c)), &th(&a, &b) * &th(&a, &c));
    }

    #[test]
    fn products_are_associative(
        fam in prop_oneof![Just(Family::Omega), Just(Family::Dual), Just(Family::Affine)],
        a in basis_key(2, 1, 2, 1), b in basis_key(2, 1, 2, 1), c in basis_key(2, 1, 2, 1),
        mode in mode(),
    ) {
        let sp = SpaceSpec::new(fam, 2, 1, mode).unwrap();
        prop_assume!(sp.is_valid_key(&a) && sp.is_valid_key(&b) && sp.is_valid_key(&c));
        prop_assert_eq!(triple_product(&sp, &a, &b, &c, true), triple_product(&sp, &a, &b, &c, false));
    }

    #[test]
    fn restricted_products_are_associative(
        fam in prop_oneof![Just(Family::OmegaRestricted), Just(Family::DualRestricted)],
        a in basis_key(1, 2, 2, 1), b in basis_key(1, 2, 2, 1), c in basis_key(1, 2, 2, 1),
    ) {
        let sp = SpaceSpec::new(fam, 1, 2, Mode::root_of_unity(3).unwrap()).unwrap();
        prop_assume!(sp.is_valid_key(&a) && sp.is_valid_key(&b) && sp.is_valid_key(&c));
        prop_assert_eq!(triple_product(&sp, &a, &b, &c, true), triple_product(&sp, &a, &b, &c, false));
    }

    #[test]
    fn q_pascal(s in 1i64..14, r in 0i64..14, mode in mode()) {
        prop_assume!(r >= 1 && r <= s);
        let rhs = &mode.q_pow(s - r) * &q_binom(s - 1, r - 1, &mode) + &mode.q_pow(-r) * &q_binom(s - 1, r, &mode);
        prop_assert_eq!(q_binom(s, r, &mode), rhs);
        prop_assert_eq!(q_binom(s, r, &mode), q_binom(s, s - r, &mode));
    }
}

fn letter() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (1usize..=3).prop_map(Atom::Partial),
        (1usize..=3).prop_map(Atom::MultX),
        ((1usize..=3), -1i64..=1).prop_map(|(i, k)| Atom::Sigma(i, k)),
        Just(Atom::Tau(3)),
        Just(Atom::Parity),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn smash_normal_form_is_faithful_and_associative(
        u in prop::collection::vec(letter(), 1..3),
        v in prop::collection::vec(letter(), 1..3),
        w in prop::collection::vec(letter(), 1..3),
    ) {
        let sp = SpaceSpec::new(Family::Omega, 2, 1, Mode::Generic).unwrap();
        let nf = |atoms: &[Atom]| smash_normal_form(&sp, &OperatorWord::new(sp.mode.one(), atoms.to_vec())).unwrap();
        let (a, b, c) = (nf(&u), nf(&v), nf(&w));
        let left = smash_product(&sp, &smash_product(&sp, &a, &b).unwrap(), &c).unwrap();
        let right = smash_product(&sp, &a, &smash_product(&sp, &b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let word: Vec<Atom> = u.iter().chain(&v).chain(&w).cloned().collect();
        prop_assert_eq!(&nf(&word), &left);
        let op = OpSum::word(&sp.mode, word);
        prop_assert!(operators_equal(&sp, &op, &normal_form_op(&sp, &left), 4).unwrap().equal);
    }
}
