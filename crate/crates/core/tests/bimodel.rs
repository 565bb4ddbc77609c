mod common;

use std::collections::BTreeMap;

use heiscat::bimodel::*;
use heiscat::combinatorics::{partitions_of, partitions_up_to, Partition, Permutation};
use heiscat::diagcat::{parse_diagram, Diagram, Morphism, Signature};
use heiscat::scalar::{Int, Scalar};
use heiscat::symfunc::{lr_coefficients, multiply, BasisTag, SymFunc};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn map(text: &str, n: usize) -> LinearMapRep {
    diagram_to_map(&Morphism::from(parse_diagram(text).unwrap()), n).unwrap()
}

fn sig(s: &str) -> Signature {
    s.parse().unwrap()
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Product of the tensor factors of a basis vector: for a path of a single
/// orientation the composite bimodule is one group algebra.
fn flatten(factors: &[Permutation], n: usize) -> Permutation {
    factors
        .iter()
        .fold(Permutation::identity(n), |acc, f| acc.compose(&f.extend(n)))
}

#[test]
fn group_algebra_examples() {
    let s1 = GroupAlgElem::simple(1, 2);
    assert_eq!(ga_product(&s1, &s1).unwrap(), GroupAlgElem::one(2));
    let e = GroupAlgElem::symmetrizer(2);
    let half = Scalar::new(Int::one(), Int::from(2));
    let expected = GroupAlgElem::from_terms(
        2,
        [(Permutation::identity(2), half.clone()), (Permutation::transposition(1, 2, 2), half)],
    )
    .unwrap();
    assert_eq!(e, expected);
    assert_eq!(ga_product(&e, &e).unwrap(), e);
    assert!(ga_product(&e, &GroupAlgElem::antisymmetrizer(2)).unwrap().is_zero());
    assert!(matches!(
        ga_product(&s1, &GroupAlgElem::one(3)),
        Err(BimodError::RankMismatch { .. })
    ));
}

#[test]
fn symmetrizers_are_orthogonal_idempotents() {
    for n in 2..=5 {
        let e = GroupAlgElem::symmetrizer(n);
        let ep = GroupAlgElem::antisymmetrizer(n);
        assert_eq!(ga_product(&e, &e).unwrap(), e, "n = {n}");
        assert_eq!(ga_product(&ep, &ep).unwrap(), ep, "n = {n}");
        assert!(ga_product(&e, &ep).unwrap().is_zero(), "n = {n}");
        assert!(ga_product(&ep, &e).unwrap().is_zero(), "n = {n}");
    }
}

#[test]
fn symmetrizers_cut_out_one_dimension() {
    for n in 1..=5 {
        assert_eq!(right_multiplication_rank(&GroupAlgElem::symmetrizer(n)), 1, "n = {n}");
        assert_eq!(right_multiplication_rank(&GroupAlgElem::antisymmetrizer(n)), 1, "n = {n}");
        assert_eq!(right_multiplication_rank(&GroupAlgElem::one(n)), factorial(n));
    }
}

#[test]
fn basis_sizes() {
    for n in 0..=4 {
        let up = BimodulePath::new(vec![n, n + 1]).unwrap();
        assert_eq!(tensor_basis(&up).len(), factorial(n + 1));
        let res_ind = BimodulePath::new(vec![n, n + 1, n]).unwrap();
        assert_eq!(tensor_basis(&res_ind).len(), factorial(n + 1));
        if n >= 1 {
            let ind_res = BimodulePath::new(vec![n, n - 1, n]).unwrap();
            assert_eq!(tensor_basis(&ind_res).len(), factorial(n) * n);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Freeness of `A_{r+1}` over `A_r`: each up step multiplies the size by
    /// the new rank, each down step leaves it unchanged.
    #[test]
    fn basis_size_is_a_product_of_coset_counts(n0 in 0usize..4, steps in prop::collection::vec(any::<bool>(), 0..6)) {
        let mut levels = vec![n0];
        for up in steps {
            let last = *levels.last().unwrap();
            levels.push(if up || last == 0 { last + 1 } else { last - 1 });
        }
        let expected: usize = factorial(n0)
            * levels.windows(2).map(|w| if w[1] > w[0] { w[1] } else { 1 }).product::<usize>();
        let path = BimodulePath::new(levels).unwrap();
        let basis = tensor_basis(&path);
        prop_assert_eq!(basis.len(), expected);
        prop_assert_eq!(BimodulePath::from_signature(&path.signature(), n0).unwrap(), path);
    }

    /// `a_1 ⊗ ⋯ ⊗ g` is unchanged by moving a subalgebra element across `⊗`.
    #[test]
    fn tensor_relations_hold_in_the_basis(n0 in 0usize..3, k in 1usize..4, seed in any::<u64>()) {
        let path = BimodulePath::new((n0..=n0 + k).collect()).unwrap();
        let basis = tensor_basis(&path);
        let i = (seed as usize) % basis.len();
        let factors = basis.element(i);
        let p = factors.len() - 2;
        let rank_below = n0;
        if rank_below >= 2 {
            let s = Permutation::transposition(1, 2, rank_below);
            let mut moved = factors.clone();
            moved[p] = moved[p].compose(&s.extend(moved[p].rank()));
            moved[p + 1] = s.compose(&moved[p + 1]);
            prop_assert_eq!(basis.index_of(&moved), i);
        }
    }
}

#[test]
fn all_up_paths_flatten_bijectively() {
    for (n0, k) in [(0, 3), (1, 2), (2, 2), (1, 3)] {
        let basis = tensor_basis(&BimodulePath::new((n0..=n0 + k).collect()).unwrap());
        let images: std::collections::BTreeSet<Permutation> =
            (0..basis.len()).map(|i| flatten(&basis.element(i), n0 + k)).collect();
        assert_eq!(images.len(), factorial(n0 + k));
    }
}

#[test]
fn generators_map_as_documented() {
    for n in 0..=3 {
        let id = map("sig:U", n);
        assert_eq!(id, LinearMapRep::identity(BimodulePath::new(vec![n, n + 1]).unwrap()));
        assert_eq!(id.rows(), factorial(n + 1));
        let ccw = map("sig:; cup+1; cap+1", n);
        assert_eq!(ccw, LinearMapRep::identity(BimodulePath::new(vec![n]).unwrap()));
        assert!(map("sig:U; cup+1; x2; cap+1", n).is_zero());
        let cw = map("sig:; cup-1; cap-1", n);
        assert_eq!(cw, ccw.scale(&Scalar::from_integer(Int::from(n))));
    }
}

/// Up-up crossings act on the flattened `A_{n0+k}` by right multiplication
/// by the transposition of the two ranks just above the pair's right region.
#[test]
fn up_crossings_are_right_multiplication() {
    for (n0, k) in [(0, 2), (1, 2), (0, 3), (1, 3), (2, 2), (2, 3)] {
        let top = n0 + k;
        let domain = Signature::ups(k);
        let basis = tensor_basis(&BimodulePath::from_signature(&domain, n0).unwrap());
        for i in 1..k {
            let d = Diagram::new(domain.clone(), vec![heiscat::diagcat::Slice::Cross(i)]).unwrap();
            let m = diagram_to_map(&Morphism::from(d), n0).unwrap();
            let r = top - i - 1;
            let t = Permutation::transposition(r + 1, r + 2, top);
            for j in 0..basis.len() {
                let col = m.column(j);
                assert_eq!(col.len(), 1);
                let (row, c) = col.iter().next().unwrap();
                assert!(c.is_one());
                let expected = flatten(&basis.element(j), top).compose(&t);
                assert_eq!(flatten(&basis.element(*row), top), expected);
            }
        }
    }
}

/// Down-down crossings act on the flattened `A_{n0}` by left multiplication.
#[test]
fn down_crossings_are_left_multiplication() {
    for (n0, k) in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let domain = Signature::downs(k);
        let basis = tensor_basis(&BimodulePath::from_signature(&domain, n0).unwrap());
        for i in 1..k {
            let d = Diagram::new(domain.clone(), vec![heiscat::diagcat::Slice::Cross(i)]).unwrap();
            let m = diagram_to_map(&Morphism::from(d), n0).unwrap();
            let l = n0 - k + i - 1;
            let t = Permutation::transposition(l + 1, l + 2, n0);
            for j in 0..basis.len() {
                let (row, c) = m.column(j).iter().next().unwrap();
                assert!(c.is_one());
                let expected = t.compose(&flatten(&basis.element(j), n0));
                assert_eq!(flatten(&basis.element(*row), n0), expected);
            }
        }
    }
}

#[test]
fn local_relations_hold_through_rank_three() {
    for rel in LocalRelation::ALL {
        for n in 0..=3 {
            let report = verify_local_relation(rel, n).unwrap_or_else(|e| panic!("{rel} at {n}: {e}"));
            assert!(report.passed());
        }
    }
}

#[test]
fn documented_relation_sizes() {
    let id = map("sig:UU", 2);
    assert_eq!(id.rows(), 24);
    assert_eq!(map("sig:UU; x1; x1", 2), id);
    assert_eq!(map("sig:UUU; x1; x2; x1", 1), map("sig:UUU; x2; x1; x2", 1));
    let du = map("sig:DU", 2);
    let cap_cup = map("sig:DU; cap+1; cup+1", 2);
    assert_eq!(map("sig:DU; x1; x1", 2), du.sub(&cap_cup).unwrap());
    assert!(!cap_cup.is_zero());
}

#[test]
fn a_wrong_relation_fails_with_entries() {
    let a = map("sig:UU; x1", 1);
    let b = map("sig:UU", 1);
    let diffs = a.differences(&b);
    assert!(!diffs.is_empty());
    assert!(a.to_grid_text().lines().count() == a.rows());
}

#[test]
fn unrealizable_domains() {
    let m = Morphism::from(parse_diagram("sig:UD; x1").unwrap());
    assert!(matches!(diagram_to_map(&m, 0), Err(BimodError::UnrealizableAtRank { .. })));
    assert!(BimodulePath::from_signature(&sig("DD"), 1).is_err());
    assert!(matches!(BimodulePath::new(vec![1, 3]), Err(BimodError::InvalidPath(_))));
}

#[test]
fn mackey_through_rank_four() {
    for k in 1..=4 {
        let report = mackey_check(k).unwrap();
        assert!(report.passed(), "k = {k}");
        assert!(report.entries.len() >= 6);
    }
    let k3 = mackey_check(3).unwrap();
    assert_eq!(k3.entries[0].detail, "24 = 18 + 6");
    assert!(mackey_check(0).is_err());
}

#[test]
fn inclusion_image_is_the_stabilizer() {
    // exhaustive over S_4, independently of the mackey report
    for g in Permutation::all(4) {
        let fixes = g.apply(4) == 4;
        let included = g.restrict(3).is_some_and(|h| h.extend(4) == g);
        assert_eq!(fixes, included);
    }
}

#[test]
fn characters_agree_with_littlewood_richardson() {
    for lam in partitions_up_to(6) {
        for mu in partitions_up_to(6 - lam.size()) {
            let got = induced_character_decomposition(&lam, &mu).unwrap();
            assert_eq!(got, lr_coefficients(&lam, &mu), "{lam} * {mu}");
        }
    }
}

#[test]
fn sign_characters_match_elementary_products() {
    for m in 0..=4 {
        for n in 0..=(6 - m) {
            let got = induced_character_decomposition(&Partition::column(m), &Partition::column(n)).unwrap();
            let prod = multiply(&SymFunc::e(&[m]), &SymFunc::e(&[n])).to_basis(BasisTag::Schur);
            let expected: BTreeMap<Partition, Int> = prod
                .terms()
                .iter()
                .map(|(p, c)| (p.clone(), c.to_integer()))
                .collect();
            assert_eq!(got, expected, "e{m} e{n}");
        }
    }
}

#[test]
fn character_bounds_and_trivial_cases() {
    for mu in partitions_up_to(5) {
        let got = induced_character_decomposition(&Partition::empty(), &mu).unwrap();
        assert_eq!(got, BTreeMap::from([(mu.clone(), Int::one())]));
    }
    assert!(matches!(
        induced_character_decomposition(&part(&[4]), &part(&[2, 2])),
        Err(BimodError::BoundExceeded { size: 8, bound: 7 })
    ));
    assert!(induced_character_decomposition_with_bound(&part(&[4]), &part(&[2, 2]), 8).is_ok());
}

#[test]
fn character_degrees_are_tableau_counts() {
    for n in 1..=6 {
        let id = Partition::from_parts(std::iter::repeat_n(1, n));
        let mut sum_sq = Int::zero();
        for lam in partitions_of(n) {
            let deg = irreducible_character(&lam)[&id].clone();
            assert_eq!(deg, Int::from(lam.num_standard_tableaux()));
            sum_sq += &deg * &deg;
        }
        assert_eq!(sum_sq, Int::from(factorial(n)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_matrix_product(
        domain in common::signature_strategy(3),
        lower in common::choices_strategy(3),
        upper in common::choices_strategy(3),
        n in 0usize..=2,
    ) {
        prop_assume!(BimodulePath::from_signature(&domain, n).is_ok());
        let g = common::diagram_from_choices(&domain, &lower, 4);
        let f = common::diagram_from_choices(&g.codomain(), &upper, 4);
        prop_assume!(BimodulePath::from_signature(&f.codomain(), n).is_ok());
        prop_assume!(BimodulePath::from_signature(&g.codomain(), n).is_ok());
        let (f, g) = (Morphism::from(f), Morphism::from(g));
        let fg = heiscat::diagcat::compose(&f, &g).unwrap();
        let lhs = diagram_to_map(&fg, n).unwrap();
        let rhs = diagram_to_map(&f, n).unwrap().compose(&diagram_to_map(&g, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    /// `B ⊗_{A_{n+1}} A_{n+1} ≅ B`, so a diagram with a through strand on
    /// the right has the rank it has one level up.
    fn tensor_with_identity_on_the_right_keeps_rank(n in 0usize..=2, choices in common::choices_strategy(3)) {
        let f = common::diagram_from_choices(&sig("U"), &choices, 3);
        prop_assume!(BimodulePath::from_signature(&f.codomain(), n + 1).is_ok());
        let shifted = Morphism::from(f.clone()).tensor(&Morphism::identity(sig("U")));
        prop_assert_eq!(
            diagram_to_map(&shifted, n).unwrap().rank(),
            diagram_to_map(&Morphism::from(f), n + 1).unwrap().rank()
        );
    }
}
