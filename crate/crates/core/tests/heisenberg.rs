use std::collections::BTreeMap;

use heiscat::combinatorics::{partitions_of, partitions_up_to, Partition};
use heiscat::heisenberg::*;
use heiscat::scalar::Int;
use heiscat::symfunc::{dual_apply, hall_pairing, lr_coefficients, multiply, BasisTag, SymFunc};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn word(s: &str) -> HeisWord {
    s.parse().unwrap()
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn s(v: &[usize]) -> SymFunc {
    SymFunc::s(v)
}

/// Applies the letters of `w` one at a time, rightmost first.
fn act_letter_by_letter(w: &HeisWord, f: &SymFunc) -> SymFunc {
    w.letters.iter().rev().fold(f.clone(), |acc, l| match *l {
        HeisLetter::E(n) => multiply(&SymFunc::e(&[n]), &acc).to_basis(f.basis()),
        HeisLetter::HStar(n) => dual_apply(&SymFunc::h(&[n]), &acc),
    })
}

/// `mu / lam` is a vertical strip: containment, and each row grows by at most one.
fn is_vertical_strip(mu: &Partition, lam: &Partition) -> bool {
    let rows = mu.len().max(lam.len());
    (0..rows).all(|i| {
        let (a, b) = (mu.part(i), lam.part(i));
        a >= b && a - b <= 1
    })
}

#[test]
fn normalization_matches_documented_examples() {
    assert_eq!(heis_normalize(&word("e2")), HeisNormal::e(2));
    assert_eq!(
        heis_normalize(&word("h1* e1")),
        HeisNormal::term(part(&[1]), part(&[1])).add(&HeisNormal::one())
    );
    assert_eq!(
        heis_normalize(&word("h2* e1")),
        HeisNormal::term(part(&[1]), part(&[2])).add(&HeisNormal::hstar(1))
    );
    // one application of the relation leaves e1 h1* already normal
    let expected = HeisNormal::term(part(&[2]), part(&[2])).add(&HeisNormal::term(part(&[1]), part(&[1])));
    let got = heis_product(&HeisNormal::hstar(2), &HeisNormal::e(2));
    assert_eq!(got, expected);
    for lam in partitions_up_to(6) {
        let f = SymFunc::basis_element(BasisTag::Schur, lam);
        assert_eq!(fock_apply(&got, &f), act_letter_by_letter(&word("h2* e2"), &f));
        assert_ne!(fock_apply(&expected.add(&HeisNormal::one()), &f), fock_apply(&got, &f));
    }
}

#[test]
fn commutator_of_degree_one_generators_is_one() {
    let a = heis_product(&HeisNormal::hstar(1), &HeisNormal::e(1));
    let b = heis_product(&HeisNormal::e(1), &HeisNormal::hstar(1));
    assert_eq!(a.add(&b.scale(&Int::from(-1))), HeisNormal::one());
    let x = heis_normalize(&word("e3 h2* e1"));
    assert_eq!(heis_product(&x, &HeisNormal::one()), x);
    assert_eq!(heis_product(&HeisNormal::one(), &x), x);
}

#[test]
fn normal_form_acts_like_the_word() {
    for w in ["h2* e2", "h1* h1* e1 e2", "e3 h2* e1", "h3* e1 h1* e2", "h2* h2* e2 e2"] {
        let w = word(w);
        let normal = heis_normalize(&w);
        for lam in partitions_up_to(6) {
            let f = SymFunc::basis_element(BasisTag::Schur, lam);
            assert_eq!(fock_apply(&normal, &f), act_letter_by_letter(&w, &f), "{w}");
        }
    }
}

#[test]
fn fock_action_examples() {
    assert_eq!(fock_apply(&HeisNormal::one(), &s(&[2, 1])), s(&[2, 1]));
    assert_eq!(fock_apply(&HeisNormal::hstar(1), &s(&[1])), SymFunc::one(BasisTag::Schur));
    assert_eq!(fock_apply(&HeisNormal::e(1), &SymFunc::one(BasisTag::Elementary)), SymFunc::e(&[1]));
}

#[test]
fn heisenberg_relation_holds() {
    for (m, n, d) in [(1, 1, 6), (3, 2, 8), (2, 3, 6), (1, 4, 6)] {
        let report = verify_heis_relation(m, n, d).unwrap_or_else(|e| panic!("{e}"));
        assert!(report.passed());
        assert_eq!(report.entries.len(), 2);
    }
    assert!(verify_heis_relation(1, 0, 6).is_err());
    assert!(verify_heis_relation(0, 1, 6).is_err());
}

#[test]
fn boson_relation_holds() {
    for (m, n) in [(1, 1), (2, 3), (2, 2), (3, 1), (3, 3)] {
        let report = verify_boson_relation(m, n, 6).unwrap_or_else(|e| panic!("{e}"));
        assert!(report.passed());
    }
    let diag = verify_boson_relation(2, 2, 6).unwrap();
    assert!(diag.entries[0].detail.starts_with("[q2, p2] = 2"));
    assert!(verify_boson_relation(0, 2, 6).is_err());
}

#[test]
fn specht_classes() {
    assert_eq!(specht_to_sym(&part(&[1, 1, 1])), SymFunc::e(&[3]));
    assert_eq!(specht_to_sym(&part(&[3])), SymFunc::h(&[3]));
    assert_eq!(specht_to_sym(&Partition::empty()), SymFunc::one(BasisTag::Schur));
    assert_eq!(specht_to_sym(&part(&[3])).basis(), BasisTag::Schur);
}

#[test]
fn induction_and_restriction_classes() {
    assert_eq!(ind_class(&s(&[1]), &s(&[1])), s(&[2]).add(&s(&[1, 1])));
    assert_eq!(res_class(&s(&[1]), &s(&[2])), s(&[1]));
    assert!(res_class(&s(&[2, 1]), &s(&[2])).is_zero());
    for lam in partitions_up_to(4) {
        for mu in partitions_up_to(3) {
            let induced = ind_class(&specht_to_sym(&mu), &specht_to_sym(&lam));
            assert!(induced.terms().values().all(|c| c > &Zero::zero()));
        }
    }
}

#[test]
fn weak_fock_relations_hold() {
    for (m, n, d) in [(1, 1, 6), (2, 3, 8), (3, 1, 6)] {
        let report = verify_weak_fock(m, n, d).unwrap_or_else(|e| panic!("{e}"));
        assert!(report.passed());
        assert_eq!(report.entries.len(), 4);
    }
    // the same identity under the two pictures
    assert_eq!(verify_weak_fock(2, 2, 6).is_ok(), verify_heis_relation(2, 2, 6).is_ok());
    assert!(verify_weak_fock(0, 1, 4).is_err());
}

#[test]
fn fock_space_spot_check_is_faithful() {
    let report = verify_faithful(4, 8).unwrap_or_else(|e| panic!("{e}"));
    assert!(report.passed());
}

#[test]
fn e_action_matches_pieri_and_littlewood_richardson() {
    for n in 1..=3 {
        for lam in partitions_up_to(6 - n) {
            let got = e_action_in_schur(n, &lam);
            let pieri: BTreeMap<Partition, Int> = partitions_of(lam.size() + n)
                .into_iter()
                .filter(|mu| is_vertical_strip(mu, &lam))
                .map(|mu| (mu, Int::one()))
                .collect();
            assert_eq!(got, pieri, "e{n} s{lam}");
            assert_eq!(got, lr_coefficients(&Partition::column(n), &lam));
        }
    }
}

#[test]
fn specht_classes_are_orthonormal() {
    for lam in partitions_up_to(6) {
        for mu in partitions_up_to(6) {
            let expected = if lam == mu { 1 } else { 0 };
            assert_eq!(
                hall_pairing(&specht_to_sym(&lam), &specht_to_sym(&mu)),
                heiscat::scalar::rat(expected, 1),
                "{lam} {mu}"
            );
        }
    }
}

#[test]
fn words_and_json() {
    assert_eq!(word("e3 h2* e1").to_string(), "e3 h2* e1");
    assert_eq!(word("").to_string(), "1");
    for bad in ["e0", "h2", "h0*", "q1", "e-1"] {
        assert!(bad.parse::<HeisWord>().is_err(), "{bad}");
    }
    let n = heis_normalize(&word("h1* e1"));
    assert_eq!(n.to_string(), "1 + e[1] h*[1]");
    assert_eq!(
        n.to_json(),
        serde_json::json!([
            {"e_partition": [], "hstar_partition": [], "coeff": 1},
            {"e_partition": [1], "hstar_partition": [1], "coeff": 1},
        ])
    );
}

fn arb_letter() -> impl Strategy<Value = HeisLetter> {
    prop_oneof![(1usize..=4).prop_map(HeisLetter::E), (1usize..=4).prop_map(HeisLetter::HStar)]
}

fn arb_word(max: usize) -> impl Strategy<Value = HeisWord> {
    prop::collection::vec(arb_letter(), 0..=max).prop_map(|letters| HeisWord { letters })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn normalization_is_confluent(w in arb_word(6), swaps in prop::collection::vec(0usize..6, 0..6)) {
        let mut other = w.clone();
        for i in swaps {
            if i + 1 < other.letters.len() {
                let same_kind = matches!(
                    (other.letters[i], other.letters[i + 1]),
                    (HeisLetter::E(_), HeisLetter::E(_)) | (HeisLetter::HStar(_), HeisLetter::HStar(_))
                );
                if same_kind {
                    other.letters.swap(i, i + 1);
                }
            }
        }
        prop_assert_eq!(heis_normalize(&w), heis_normalize(&other));
    }

    #[test]
    fn product_is_associative(a in arb_word(3), b in arb_word(3), c in arb_word(3)) {
        let (a, b, c) = (heis_normalize(&a), heis_normalize(&b), heis_normalize(&c));
        prop_assert_eq!(heis_product(&heis_product(&a, &b), &c), heis_product(&a, &heis_product(&b, &c)));
    }

    #[test]
    fn random_words_act_like_their_normal_form(w in arb_word(4)) {
        let normal = heis_normalize(&w);
        for lam in partitions_up_to(4) {
            let f = SymFunc::basis_element(BasisTag::Schur, lam);
            prop_assert_eq!(fock_apply(&normal, &f), act_letter_by_letter(&w, &f));
        }
    }
}
