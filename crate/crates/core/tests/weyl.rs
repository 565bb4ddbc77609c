use heiscat::scalar::Int;
use heiscat::weyl::*;
use proptest::prelude::*;

const LATTICES: [Lattice; 2] = [Lattice::Monomials, Lattice::DividedPowers];

#[test]
fn second_derivative_relation_on_polynomials() {
    let lhs = weyl_multiply(&WeylElement::monomial(0, 2), &WeylElement::x());
    let rhs: WeylElement = "x d^2 + 2 d".parse().unwrap();
    assert_eq!(lhs, rhs);
    for n in 0..=10 {
        for lat in LATTICES {
            let v = PolyVector::basis(lat, n);
            let step = weyl_apply(&WeylElement::monomial(0, 2), &weyl_apply(&WeylElement::x(), &v));
            assert_eq!(weyl_apply(&rhs, &v), step);
        }
    }
}

#[test]
fn generators_act_as_documented() {
    for n in 0..=10usize {
        let xm = PolyVector::basis(Lattice::Monomials, n);
        assert_eq!(weyl_apply(&WeylElement::x(), &xm), PolyVector::basis(Lattice::Monomials, n + 1));
        let dm = weyl_apply(&WeylElement::d(), &xm);
        if n == 0 {
            assert!(dm.is_zero());
        } else {
            assert_eq!(dm.coeff(n - 1), Int::from(n));
        }
        let r = PolyVector::basis(Lattice::DividedPowers, n);
        assert_eq!(weyl_apply(&WeylElement::x(), &r).coeff(n + 1), Int::from(n + 1));
        if n > 0 {
            assert_eq!(weyl_apply(&WeylElement::d(), &r), PolyVector::basis(Lattice::DividedPowers, n - 1));
        }
    }
}

#[test]
fn adjointness_up_to_degree_ten() {
    for n in 0..=10 {
        for m in 0..=10 {
            let v = PolyVector::basis(Lattice::Monomials, n);
            let w = PolyVector::basis(Lattice::DividedPowers, m);
            let x = WeylElement::x();
            let d = WeylElement::d();
            assert_eq!(
                weyl_pairing(&weyl_apply(&x, &v), &w).unwrap(),
                weyl_pairing(&v, &weyl_apply(&d, &w)).unwrap()
            );
            assert_eq!(
                weyl_pairing(&weyl_apply(&d, &v), &w).unwrap(),
                weyl_pairing(&v, &weyl_apply(&x, &w)).unwrap()
            );
        }
    }
}

#[test]
fn pairing_is_perfect_on_low_degrees() {
    for n in 0..=8 {
        for m in 0..=8 {
            let got = weyl_pairing(&PolyVector::basis(Lattice::Monomials, n), &PolyVector::basis(Lattice::DividedPowers, m)).unwrap();
            assert_eq!(got, Int::from(u8::from(n == m)));
        }
    }
}

fn arb_weyl() -> impl Strategy<Value = WeylElement> {
    prop::collection::vec(((0usize..=4, 0usize..=4), -5i64..=5), 0..5)
        .prop_map(|terms| WeylElement::from_terms(terms.into_iter().map(|(k, c)| (k, Int::from(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_acts_as_composition(u in arb_weyl(), v in arb_weyl()) {
        let uv = weyl_multiply(&u, &v);
        for n in 0..=12 {
            for lat in LATTICES {
                let e = PolyVector::basis(lat, n);
                prop_assert_eq!(weyl_apply(&uv, &e), weyl_apply(&u, &weyl_apply(&v, &e)));
            }
        }
    }

    #[test]
    fn closed_form_agrees_with_rewriting(u in arb_weyl(), v in arb_weyl()) {
        prop_assert_eq!(weyl_multiply(&u, &v), weyl_multiply_by_rewriting(&u, &v));
    }

    #[test]
    fn multiplication_is_associative(u in arb_weyl(), v in arb_weyl(), w in arb_weyl()) {
        prop_assert_eq!(weyl_multiply(&weyl_multiply(&u, &v), &w), weyl_multiply(&u, &weyl_multiply(&v, &w)));
    }

    #[test]
    fn literal_round_trip(u in arb_weyl()) {
        let back: WeylElement = u.to_string().parse().unwrap();
        prop_assert_eq!(back, u);
    }
}
