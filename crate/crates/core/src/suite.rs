//! The verification matrix run by `verify-all`: one case per invariant,
//! plus the relation checks of each module.
//!
//! `max_degree` (D) scales the symmetric-function and Fock-space bounds and
//! `max_rank` (N) the symmetric-group and diagram bounds. At the defaults
//! D = 6, N = 3 every bound is the documented one.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bimodel::{
    diagram_to_map, ga_product, induced_character_decomposition_with_bound, mackey_check, right_multiplication_rank,
    verify_local_relation, BimodulePath, GroupAlgElem, LinearMapRep, LocalRelation,
};
use crate::combinatorics::{
    coset_decompose, coset_rep, partitions_of, partitions_up_to, perm_length, reduced_word, word_eval, Partition,
    Permutation,
};
use crate::diagcat::{
    compose, evaluate_closed, parse_diagram, simplify, sym_image, verify_k0_relations, ClosedValue, Diagram, Morphism,
    Signature, Slice,
};
use crate::error::Error;
use crate::heisenberg::{
    e_action_in_schur, heis_normalize, specht_to_sym, verify_boson_relation, verify_faithful, verify_heis_relation,
    verify_weak_fock, HeisLetter, HeisWord,
};
use crate::nilcoxeter::{
    ind_k, k_pairing, nc_product, phi_g, phi_k, res_k, verify_bimodule_iso, Flavor, KVector, NilcoxElem,
};
use crate::report::Report;
use crate::scalar::{factorial, falling, Int, Scalar};
use crate::symfunc::{
    antipode, counit, coproduct, dual_apply, hall_pairing, lr_coefficients, monomial_expand, multiply, BasisTag,
    Coproduct, SymFunc,
};
use crate::weyl::{weyl_apply, weyl_multiply, weyl_pairing, Lattice, PolyVector, WeylElement};

pub const DEFAULT_MAX_DEGREE: usize = 6;
pub const DEFAULT_MAX_RANK: usize = 3;
pub const DEFAULT_SEED: u64 = 0;

/// Variables used by the polynomial multiplication oracle.
pub const ORACLE_NVARS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationCase {
    pub id: String,
    pub module: String,
    pub parameters: BTreeMap<String, Value>,
    pub status: CaseStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub max_rank: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: DEFAULT_MAX_DEGREE,
            max_rank: DEFAULT_MAX_RANK,
            seed: DEFAULT_SEED,
        }
    }
}

type Params = BTreeMap<String, Value>;

/// Result of one case: `None` when the bounds leave nothing to check.
type Outcome = crate::Result<Option<(bool, String)>>;

struct CaseDef {
    module: &'static str,
    id: &'static str,
    params: fn(&SuiteConfig) -> Params,
    run: fn(&SuiteConfig) -> Outcome,
}

macro_rules! params {
    ($($k:literal => $v:expr),* $(,)?) => {{
        let mut p = Params::new();
        $(p.insert($k.to_string(), json!($v));)*
        p
    }};
}

fn pass(detail: impl Into<String>) -> Outcome {
    Ok(Some((true, detail.into())))
}

/// Runs `check` on each item and stops at the first failure.
fn first_failure<T>(items: impl IntoIterator<Item = T>, mut check: impl FnMut(&T) -> Option<String>) -> (usize, Option<String>) {
    let mut count = 0;
    for item in items {
        count += 1;
        if let Some(msg) = check(&item) {
            return (count, Some(msg));
        }
    }
    (count, None)
}

fn checked(count: usize, failure: Option<String>, what: &str) -> Outcome {
    match failure {
        None if count == 0 => Ok(None),
        None => pass(format!("{count} {what}")),
        Some(msg) => Ok(Some((false, msg))),
    }
}

/// Merges the reports of several `verify_*` calls.
fn reports(calls: impl IntoIterator<Item = crate::Result<Report>>) -> Outcome {
    let mut total = 0;
    for r in calls {
        match r {
            Ok(report) => total += report.entries.len(),
            Err(Error::Verification(f)) => return Ok(Some((false, f.to_string()))),
            Err(e) => return Err(e),
        }
    }
    if total == 0 {
        return Ok(None);
    }
    pass(format!("{total} checks passed"))
}

fn basis_elements(basis: BasisTag, max_degree: usize) -> Vec<SymFunc> {
    partitions_up_to(max_degree)
        .into_iter()
        .map(|l| SymFunc::basis_element(basis, l))
        .collect()
}

// ---------------------------------------------------------------- combinatorics

fn comb_reduced_words(cfg: &SuiteConfig) -> Outcome {
    let (count, bad) = first_failure((0..=cfg.max_rank + 3).flat_map(Permutation::all), |w| {
        let word = reduced_word(w);
        let ok = word_eval(&word) == *w && word.len() == perm_length(w);
        (!ok).then(|| format!("reduced word of {w} is {word:?}"))
    });
    checked(count, bad, "permutations")
}

fn comb_partition_counts(cfg: &SuiteConfig) -> Outcome {
    // brute force: sort every composition of n
    let (count, bad) = first_failure(0..=cfg.max_degree + 2, |&n| {
        let mut brute: BTreeSet<Vec<usize>> = BTreeSet::new();
        if n == 0 {
            brute.insert(Vec::new());
        }
        for mask in 0..(1u64 << n.saturating_sub(1)) {
            if n == 0 {
                break;
            }
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts.sort_unstable_by(|a, b| b.cmp(a));
            brute.insert(parts);
        }
        let listed = partitions_of(n);
        let ok = listed.len() == brute.len()
            && listed.iter().all(|p| p.size() == n && brute.contains(p.parts()));
        (!ok).then(|| format!("n = {n}: {} listed, {} by brute force", listed.len(), brute.len()))
    });
    checked(count, bad, "sizes")
}

fn comb_coset_bijection(cfg: &SuiteConfig) -> Outcome {
    let (count, bad) = first_failure(0..=cfg.max_rank + 2, |&n| {
        let mut seen = BTreeSet::new();
        for w in Permutation::all(n + 1) {
            let (i, rest) = coset_decompose(&w);
            if !(1..=n + 1).contains(&i) || rest.rank() > n || coset_rep(i, n + 1).compose(&rest) != w {
                return Some(format!("{w} decomposes as ({i}, {rest})"));
            }
            seen.insert((i, rest.extend(n)));
        }
        let expected = (1..=n + 1).product::<usize>();
        (seen.len() != expected).then(|| format!("n = {n}: {} images, expected {expected}", seen.len()))
    });
    checked(count, bad, "ranks")
}

// ---------------------------------------------------------------- symfunc

fn sym_multiply_oracle(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_degree.saturating_sub(1);
    let mut pairs = Vec::new();
    for a_basis in BasisTag::INTEGRAL {
        for b_basis in BasisTag::INTEGRAL {
            for a in basis_elements(a_basis, top) {
                for b in basis_elements(b_basis, top - a.degree()) {
                    pairs.push((a.clone(), b));
                }
            }
        }
    }
    let (count, bad) = first_failure(pairs, |(a, b)| {
        let expand = |f: &SymFunc| monomial_expand(f, ORACLE_NVARS).expect("enough variables");
        let ok = expand(&multiply(a, b)) == expand(a).mul(&expand(b));
        (!ok).then(|| format!("{a} * {b}"))
    });
    checked(count, bad, "products agree in 10 variables")
}

fn sym_duality(cfg: &SuiteConfig) -> Outcome {
    let parts = partitions_up_to(cfg.max_degree);
    let mut pairs = Vec::new();
    for l in &parts {
        for m in &parts {
            pairs.push((l.clone(), m.clone()));
        }
    }
    let (count, bad) = first_failure(pairs, |(l, m)| {
        let delta = if l == m { Scalar::one() } else { Scalar::zero() };
        let mh = hall_pairing(&SymFunc::basis_element(BasisTag::Monomial, l.clone()), &SymFunc::basis_element(BasisTag::Complete, m.clone()));
        let ss = hall_pairing(&SymFunc::basis_element(BasisTag::Schur, l.clone()), &SymFunc::basis_element(BasisTag::Schur, m.clone()));
        (mh != delta || ss != delta).then(|| format!("<m{l}, h{m}> = {mh}, <s{l}, s{m}> = {ss}"))
    });
    checked(count, bad, "pairs")
}

fn sym_round_trip(cfg: &SuiteConfig) -> Outcome {
    let mut items = Vec::new();
    for from in BasisTag::INTEGRAL {
        for to in BasisTag::ALL {
            for f in basis_elements(from, cfg.max_degree) {
                items.push((f, to));
            }
        }
    }
    let (count, bad) = first_failure(items, |(f, to)| match f.to_basis(*to).convert(f.basis()) {
        Ok(back) if back.terms() == f.terms() => None,
        Ok(back) => Some(format!("{f} came back as {back}")),
        Err(e) => Some(format!("{f}: {e}")),
    });
    checked(count, bad, "round trips")
}

/// `Δ(a)·Δ(b)` in the complete basis, where products are unions.
fn coproduct_product(a: &Coproduct, b: &Coproduct) -> Coproduct {
    let (a, b) = (a.to_basis(BasisTag::Complete), b.to_basis(BasisTag::Complete));
    let mut terms: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
    for ((x, y), c) in &a.terms {
        for ((u, v), d) in &b.terms {
            *terms.entry((x.union(u), y.union(v))).or_insert_with(Scalar::zero) += c * d;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Coproduct {
        basis: BasisTag::Complete,
        terms,
    }
}

fn sym_hopf_axioms(cfg: &SuiteConfig) -> Outcome {
    let d = cfg.max_degree;
    let mut count = 0;
    for basis in BasisTag::INTEGRAL {
        let coproducts: BTreeMap<Partition, Coproduct> = partitions_up_to(d)
            .into_iter()
            .map(|c| {
                let delta = coproduct(&SymFunc::basis_element(basis, c.clone()));
                (c, delta)
            })
            .collect();
        for (c, delta) in &coproducts {
            let f = SymFunc::basis_element(basis, c.clone());
            let eps = |x: &SymFunc| SymFunc::scalar(basis, counit(x));
            let left = delta.contract(eps, |x| x.clone()).to_basis(basis);
            let right = delta.contract(|x| x.clone(), eps).to_basis(basis);
            count += 1;
            if left.terms() != f.terms() || right.terms() != f.terms() {
                return Ok(Some((false, format!("counit law fails on {f}"))));
            }
        }
        for a in basis_elements(basis, d) {
            for b in basis_elements(basis, d - a.degree()) {
                let ab = multiply(&a, &b);
                count += 1;
                let product = coproduct_product(&coproducts[&a.terms().keys().next().expect("basis element").clone()], &coproducts[b.terms().keys().next().expect("basis element")]);
                if coproduct(&ab) != product {
                    return Ok(Some((false, format!("Delta({a} {b}) != Delta({a}) Delta({b})"))));
                }
                for c in partitions_of(a.degree() + b.degree()) {
                    let cf = SymFunc::basis_element(basis, c.clone());
                    count += 1;
                    if hall_pairing(&ab, &cf) != coproducts[&c].pair_with(&a, &b) {
                        return Ok(Some((false, format!("<{a} {b}, {cf}> != <{a} (x) {b}, Delta({cf})>"))));
                    }
                }
            }
        }
    }
    checked(count, None, "identities")
}

fn sym_antipode(cfg: &SuiteConfig) -> Outcome {
    let items: Vec<SymFunc> = BasisTag::ALL
        .into_iter()
        .flat_map(|b| basis_elements(b, cfg.max_degree))
        .collect();
    let (count, bad) = first_failure(items, |f| {
        let lhs = coproduct(f).contract(antipode, |x| x.clone());
        (lhs != SymFunc::scalar(f.basis(), counit(f))).then(|| format!("antipode axiom fails on {f}"))
    });
    checked(count, bad, "elements")
}

fn sym_unitriangular(cfg: &SuiteConfig) -> Outcome {
    let (count, bad) = first_failure(0..=cfg.max_degree, |&d| {
        for lam in partitions_of(d) {
            let sm = SymFunc::basis_element(BasisTag::Schur, lam.clone()).to_basis(BasisTag::Monomial);
            for mu in partitions_of(d) {
                let k = sm.coeff(&mu);
                let ok = k >= Scalar::zero()
                    && (lam != mu || k.is_one())
                    && (k.is_zero() || lam.dominates(&mu));
                if !ok {
                    return Some(format!("K[{lam}][{mu}] = {k}"));
                }
            }
        }
        None
    });
    checked(count, bad, "degrees")
}

fn sym_dual_apply(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_degree.saturating_sub(1);
    let mut items = Vec::new();
    for f in basis_elements(BasisTag::Complete, top) {
        for a in basis_elements(BasisTag::Schur, top - f.degree()) {
            for b in partitions_of(f.degree() + a.degree()) {
                items.push((f.clone(), a.clone(), SymFunc::basis_element(BasisTag::Monomial, b)));
            }
        }
    }
    let (count, bad) = first_failure(items, |(f, a, b)| {
        (hall_pairing(a, &dual_apply(f, b)) != hall_pairing(&multiply(f, a), b))
            .then(|| format!("<{a}, {f}* {b}> != <{f} {a}, {b}>"))
    });
    checked(count, bad, "triples")
}

// ---------------------------------------------------------------- weyl

fn random_weyl(rng: &mut StdRng) -> WeylElement {
    let terms = rng.random_range(1..=3);
    WeylElement::from_terms((0..terms).map(|_| {
        let key = (rng.random_range(0..=4), rng.random_range(0..=4));
        (key, Int::from(rng.random_range(-5i64..=5)))
    }))
}

fn weyl_normal_ordering(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let top = 2 * cfg.max_degree;
    let pairs: Vec<(WeylElement, WeylElement)> = (0..40).map(|_| (random_weyl(&mut rng), random_weyl(&mut rng))).collect();
    let (count, bad) = first_failure(pairs, |(u, v)| {
        let uv = weyl_multiply(u, v);
        for lattice in [Lattice::Monomials, Lattice::DividedPowers] {
            for n in 0..=top {
                let e = PolyVector::basis(lattice, n);
                if weyl_apply(&uv, &e) != weyl_apply(u, &weyl_apply(v, &e)) {
                    return Some(format!("({u})({v}) on {e}"));
                }
            }
        }
        None
    });
    checked(count, bad, "random pairs")
}

fn weyl_adjointness(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_degree + 4;
    let mut pairs = Vec::new();
    for n in 0..=top {
        for m in 0..=top {
            pairs.push((n, m));
        }
    }
    let (x, d) = (WeylElement::x(), WeylElement::d());
    let (count, bad) = first_failure(pairs, |&(n, m)| {
        let v = PolyVector::basis(Lattice::Monomials, n);
        let w = PolyVector::basis(Lattice::DividedPowers, m);
        let pair = |a: &PolyVector, b: &PolyVector| weyl_pairing(a, b).expect("R' against R");
        let ok = pair(&weyl_apply(&x, &v), &w) == pair(&v, &weyl_apply(&d, &w))
            && pair(&weyl_apply(&d, &v), &w) == pair(&v, &weyl_apply(&x, &w));
        (!ok).then(|| format!("x^{n} against r_{m}"))
    });
    checked(count, bad, "basis pairs")
}

/// Compares `weyl_apply` with the action on honest polynomials, where
/// `r_n = x^n / n!`, and checks the coordinates come back integral.
fn weyl_integrality(cfg: &SuiteConfig) -> Outcome {
    let top = 2 * cfg.max_degree;
    let mut items = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 {
            for n in 0..=top {
                for lattice in [Lattice::Monomials, Lattice::DividedPowers] {
                    items.push((a, b, n, lattice));
                }
            }
        }
    }
    let (count, bad) = first_failure(items, |&(a, b, n, lattice)| {
        let got = weyl_apply(&WeylElement::monomial(a, b), &PolyVector::basis(lattice, n));
        let scale = |k: usize| match lattice {
            Lattice::Monomials => Scalar::one(),
            Lattice::DividedPowers => Scalar::new(Int::one(), factorial(k)),
        };
        // x^a ∂^b (scale(n) x^n) as a coefficient of x^{n-b+a}
        let expected = if n < b {
            None
        } else {
            let coeff = scale(n) * Scalar::from_integer(falling(n, b));
            let k = n - b + a;
            Some((k, coeff / scale(k)))
        };
        let ok = match &expected {
            None => got.is_zero(),
            Some((k, c)) => c.is_integer() && got.coeffs().len() == 1 && Scalar::from_integer(got.coeff(*k)) == *c,
        };
        (!ok).then(|| format!("x^{a} d^{b} on basis vector {n} of {lattice:?}"))
    });
    checked(count, bad, "actions")
}

// ---------------------------------------------------------------- nilcoxeter

fn nilcox_braid(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_rank + 3;
    let mut items = Vec::new();
    for n in 2..=top {
        for i in 1..n {
            for j in 1..n {
                items.push((n, i, j));
            }
        }
    }
    let (count, bad) = first_failure(items, |&(n, i, j)| {
        let u = |k: usize| NilcoxElem::generator(k, n);
        let p = |a: &NilcoxElem, b: &NilcoxElem| nc_product(a, b).expect("same rank");
        let ok = if i == j {
            p(&u(i), &u(i)).is_zero()
        } else if i.abs_diff(j) == 1 {
            p(&p(&u(i), &u(j)), &u(i)) == p(&p(&u(j), &u(i)), &u(j))
        } else {
            p(&u(i), &u(j)) == p(&u(j), &u(i))
        };
        (!ok).then(|| format!("u{i}, u{j} in N_{n}"))
    });
    checked(count, bad, "generator pairs")
}

fn nilcox_squares(cfg: &SuiteConfig) -> Outcome {
    let (x, d) = (WeylElement::x(), WeylElement::d());
    let (count, bad) = first_failure(0..=cfg.max_degree + 4, |&n| {
        let l = KVector::basis(Flavor::G, n);
        let k = KVector::basis(Flavor::K, n);
        let g = |v: &KVector| phi_g(v).expect("G class");
        let kk = |v: &KVector| phi_k(v).expect("K class");
        let ok = g(&ind_k(&l)) == weyl_apply(&x, &g(&l))
            && g(&res_k(&l)) == weyl_apply(&d, &g(&l))
            && kk(&ind_k(&k)) == weyl_apply(&x, &kk(&k))
            && kk(&res_k(&k)) == weyl_apply(&d, &kk(&k));
        (!ok).then(|| format!("square fails at n = {n}"))
    });
    checked(count, bad, "classes")
}

fn nilcox_weyl_relation(cfg: &SuiteConfig) -> Outcome {
    let mut items = Vec::new();
    for flavor in [Flavor::G, Flavor::K] {
        for n in 0..=cfg.max_degree + 4 {
            items.push(KVector::basis(flavor, n));
        }
    }
    let (count, bad) = first_failure(items, |v| {
        let rhs = ind_k(&res_k(v)).add(v).expect("same flavor");
        (res_k(&ind_k(v)) != rhs).then(|| format!("res ind - ind res != id on {v}"))
    });
    checked(count, bad, "classes")
}

fn nilcox_adjointness(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_degree + 2;
    let mut pairs = Vec::new();
    for a in 0..=top {
        for b in 0..=top {
            pairs.push((a, b));
        }
    }
    let (count, bad) = first_failure(pairs, |&(a, b)| {
        let (na, lb) = (KVector::basis(Flavor::K, a), KVector::basis(Flavor::G, b));
        let lhs = k_pairing(&ind_k(&na), &lb).expect("K against G");
        let rhs = k_pairing(&na, &res_k(&lb)).expect("K against G");
        (lhs != rhs).then(|| format!("<Ind N_{a}, L_{b}> = {lhs}, <N_{a}, Res L_{b}> = {rhs}"))
    });
    checked(count, bad, "pairs")
}

fn nilcox_bimodule_iso(cfg: &SuiteConfig) -> Outcome {
    reports((1..=cfg.max_rank + 2).map(verify_bimodule_iso))
}

// ---------------------------------------------------------------- heisenberg

fn heis_relation(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_rank + 1;
    let d = cfg.max_degree + 2;
    reports((1..=top).flat_map(|m| (1..=top).map(move |n| verify_heis_relation(m, n, d))))
}

fn heis_boson(cfg: &SuiteConfig) -> Outcome {
    let (top, d) = (cfg.max_rank, cfg.max_degree);
    reports((1..=top).flat_map(|m| (1..=top).map(move |n| verify_boson_relation(m, n, d))))
}

fn heis_weak_fock(cfg: &SuiteConfig) -> Outcome {
    let (top, d) = (cfg.max_rank, cfg.max_degree);
    reports((1..=top).flat_map(|m| (1..=top).map(move |n| verify_weak_fock(m, n, d))))
}

fn random_heis_word(rng: &mut StdRng) -> Vec<HeisLetter> {
    let len = rng.random_range(0..=6);
    (0..len)
        .map(|_| {
            let k = rng.random_range(1..=4);
            if rng.random::<bool>() {
                HeisLetter::E(k)
            } else {
                HeisLetter::HStar(k)
            }
        })
        .collect()
}

fn heis_confluence(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x4845_4953);
    let words: Vec<(Vec<HeisLetter>, Vec<HeisLetter>)> = (0..200)
        .map(|_| {
            let w = random_heis_word(&mut rng);
            let mut v = w.clone();
            // swap a few adjacent commuting letters
            for _ in 0..4 {
                if v.len() < 2 {
                    break;
                }
                let i = rng.random_range(0..v.len() - 1);
                let same = matches!((v[i], v[i + 1]), (HeisLetter::E(_), HeisLetter::E(_)) | (HeisLetter::HStar(_), HeisLetter::HStar(_)));
                if same {
                    v.swap(i, i + 1);
                }
            }
            (w, v)
        })
        .collect();
    let (count, bad) = first_failure(words, |(w, v)| {
        let (w, v) = (HeisWord::new(w.clone()).expect("indices >= 1"), HeisWord::new(v.clone()).expect("indices >= 1"));
        (heis_normalize(&w) != heis_normalize(&v)).then(|| format!("{w} and {v} normalize differently"))
    });
    checked(count, bad, "interleavings")
}

fn heis_faithful(cfg: &SuiteConfig) -> Outcome {
    reports([verify_faithful(cfg.max_rank + 1, cfg.max_degree + 2)])
}

fn heis_intertwining(cfg: &SuiteConfig) -> Outcome {
    let mut items = Vec::new();
    for n in 1..=cfg.max_degree {
        for lam in partitions_up_to(cfg.max_degree - n) {
            items.push((n, lam));
        }
    }
    let (count, bad) = first_failure(items, |(n, lam)| {
        (e_action_in_schur(*n, lam) != lr_coefficients(&Partition::column(*n), lam))
            .then(|| format!("e{n} on s{lam}"))
    });
    checked(count, bad, "actions")
}

fn heis_specht_orthonormal(cfg: &SuiteConfig) -> Outcome {
    let parts = partitions_up_to(cfg.max_degree);
    let images: Vec<SymFunc> = parts.iter().map(specht_to_sym).collect();
    let mut pairs = Vec::new();
    for i in 0..parts.len() {
        for j in 0..parts.len() {
            pairs.push((i, j));
        }
    }
    let (count, bad) = first_failure(pairs, |&(i, j)| {
        let expected = if i == j { Scalar::one() } else { Scalar::zero() };
        (hall_pairing(&images[i], &images[j]) != expected).then(|| format!("<[S{}], [S{}]>", parts[i], parts[j]))
    });
    checked(count, bad, "pairs")
}

// ---------------------------------------------------------------- bimodel

fn bimod_local_relations(cfg: &SuiteConfig) -> Outcome {
    reports(
        LocalRelation::ALL
            .into_iter()
            .flat_map(|rel| (0..=cfg.max_rank).map(move |n| verify_local_relation(rel, n))),
    )
}

fn bimod_mackey(cfg: &SuiteConfig) -> Outcome {
    reports((1..=cfg.max_rank + 1).map(mackey_check))
}

fn bimod_characters(cfg: &SuiteConfig) -> Outcome {
    let d = cfg.max_degree;
    let mut items = Vec::new();
    for lam in partitions_up_to(d) {
        for mu in partitions_up_to(d - lam.size()) {
            items.push((lam.clone(), mu));
        }
    }
    let mut failure = None;
    let mut count = 0;
    for (lam, mu) in items {
        count += 1;
        let got = induced_character_decomposition_with_bound(&lam, &mu, d)?;
        if got != lr_coefficients(&lam, &mu) {
            failure = Some(format!("characters and LR coefficients differ on {lam} * {mu}"));
            break;
        }
    }
    checked(count, failure, "pairs")
}

fn bimod_idempotents(cfg: &SuiteConfig) -> Outcome {
    let (count, bad) = first_failure(2..=cfg.max_rank + 2, |&n| {
        let e = GroupAlgElem::symmetrizer(n);
        let ep = GroupAlgElem::antisymmetrizer(n);
        let p = |a: &GroupAlgElem, b: &GroupAlgElem| ga_product(a, b).expect("same rank");
        let ok = p(&e, &e) == e && p(&ep, &ep) == ep && p(&e, &ep).is_zero();
        (!ok).then(|| format!("n = {n}"))
    });
    checked(count, bad, "ranks")
}

fn bimod_symmetrizer_rank(cfg: &SuiteConfig) -> Outcome {
    let (count, bad) = first_failure(1..=cfg.max_rank + 2, |&n| {
        let (a, b) = (
            right_multiplication_rank(&GroupAlgElem::symmetrizer(n)),
            right_multiplication_rank(&GroupAlgElem::antisymmetrizer(n)),
        );
        (a != 1 || b != 1).then(|| format!("n = {n}: ranks {a} and {b}"))
    });
    checked(count, bad, "ranks")
}

// ---------------------------------------------------------------- diagcat

/// A random diagram with at most `max_len` strands at any height.
fn random_diagram(rng: &mut StdRng, max_domain: usize, max_len: usize, max_slices: usize) -> Diagram {
    let len = rng.random_range(0..=max_domain);
    let mut sig: Signature = (0..len)
        .map(|_| if rng.random::<bool>() { 'U' } else { 'D' })
        .collect::<String>()
        .parse()
        .expect("U/D string");
    let domain = sig.clone();
    let mut slices = Vec::new();
    for _ in 0..rng.random_range(0..=max_slices) {
        let options: Vec<Slice> = Slice::applicable(&sig)
            .into_iter()
            .filter(|s| s.apply(&sig).is_some_and(|t| t.len() <= max_len))
            .collect();
        if options.is_empty() {
            break;
        }
        let s = options[rng.random_range(0..options.len())];
        sig = s.apply(&sig).expect("applicable");
        slices.push(s);
    }
    Diagram::new(domain, slices).expect("built from applicable slices")
}

fn measure(m: &Morphism) -> (usize, usize) {
    m.terms()
        .keys()
        .map(|d| (d.crossings(), d.slices().len() - d.crossings()))
        .max()
        .unwrap_or((0, 0))
}

fn diag_closed_values(cfg: &SuiteConfig) -> Outcome {
    let cases = [
        ("sig:; cup+1; cap+1", 1),
        ("sig:; cup+1; cup+2; cap+2; cap+1", 1),
        ("sig:; cup+1; cup+2; x3; cap+2; cap+1", 0),
    ];
    for (text, value) in cases {
        let m = Morphism::from(parse_diagram(text)?);
        let expected = Scalar::from_integer(Int::from(value));
        if evaluate_closed(&m)? != ClosedValue::Scalar(expected.clone()) {
            return Ok(Some((false, format!("{text} does not evaluate to {value}"))));
        }
        for n in 0..=cfg.max_rank {
            let id = LinearMapRep::identity(BimodulePath::new(vec![n])?);
            if diagram_to_map(&m, n)? != id.scale(&expected) {
                return Ok(Some((false, format!("{text} is not {value} over A_{n}"))));
            }
        }
    }
    let curl = Morphism::from(parse_diagram("sig:U; cup+1; x2; cap+1")?);
    if !simplify(&curl).is_zero() {
        return Ok(Some((false, "left curl does not simplify to 0".into())));
    }
    for n in 0..=cfg.max_rank {
        if !diagram_to_map(&curl, n)?.is_zero() {
            return Ok(Some((false, format!("left curl is nonzero over A_{n}"))));
        }
    }
    pass(format!("circle = 1, left curl = 0 diagrammatically and over A_0..A_{}", cfg.max_rank))
}

fn diag_termination(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x5445_524d);
    let items: Vec<Diagram> = (0..300).map(|_| random_diagram(&mut rng, 4, 6, 10)).collect();
    let (count, bad) = first_failure(items, |d| {
        let input = Morphism::from(d.clone());
        let out = simplify(&input);
        let ok = measure(&out).0 <= d.crossings() && simplify(&out) == out;
        (!ok).then(|| format!("simplify misbehaves on {d}"))
    });
    checked(count, bad, "random diagrams")
}

fn diag_soundness(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x534f_554e);
    let top = cfg.max_rank.saturating_sub(1);
    let items: Vec<(Diagram, usize)> = (0..150)
        .map(|_| (random_diagram(&mut rng, 3, 4, 7), rng.random_range(0..=top)))
        .collect();
    let mut count = 0;
    for (d, n) in items {
        let input = Morphism::from(d.clone());
        if BimodulePath::from_signature(input.domain(), n).is_err() || BimodulePath::from_signature(input.codomain(), n).is_err() {
            continue;
        }
        count += 1;
        if diagram_to_map(&input, n)? != diagram_to_map(&simplify(&input), n)? {
            return Ok(Some((false, format!("simplify changes the map of {d} over A_{n}"))));
        }
    }
    checked(count, None, "realizable random diagrams")
}

fn braid_morphism(n: usize, letters: &[usize]) -> crate::Result<Morphism> {
    Ok(Morphism::from(Diagram::new(Signature::ups(n), letters.iter().map(|&i| Slice::Cross(i)).collect())?))
}

fn diag_sym_homomorphism(cfg: &SuiteConfig) -> Outcome {
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x484f_4d4f);
    let mut count = 0;
    for n in 2..=cfg.max_rank + 1 {
        for _ in 0..50 {
            let mut word = || -> Vec<usize> { (0..rng.random_range(0..8)).map(|_| rng.random_range(1..n)).collect() };
            let (lower, upper) = (word(), word());
            let g = braid_morphism(n, &lower)?;
            let f = braid_morphism(n, &upper)?;
            count += 1;
            if sym_image(&compose(&f, &g)?)? != ga_product(&sym_image(&f)?, &sym_image(&g)?)? {
                return Ok(Some((false, format!("words {upper:?} over {lower:?} on {n} strands"))));
            }
        }
    }
    checked(count, None, "random compositions")
}

fn section(sig: &Signature, e: &GroupAlgElem) -> crate::Result<Morphism> {
    let mut out = Morphism::zero(sig.clone(), sig.clone());
    for (sigma, c) in e.terms() {
        out.add_term(Diagram::permutation(sig.clone(), 0, sigma)?, c.clone())?;
    }
    Ok(out)
}

fn diag_symmetrizer_sections(cfg: &SuiteConfig) -> Outcome {
    let mut count = 0;
    for n in 2..=cfg.max_rank + 1 {
        let up = Signature::ups(n);
        let e = section(&up, &GroupAlgElem::symmetrizer(n))?;
        let ep = section(&up, &GroupAlgElem::antisymmetrizer(n))?;
        let img = |m: &Morphism| sym_image(m);
        let ok = img(&compose(&e, &e)?)? == img(&e)?
            && img(&compose(&ep, &ep)?)? == img(&ep)?
            && img(&compose(&e, &ep)?)?.is_zero()
            && img(&compose(&ep, &e)?)?.is_zero();
        count += 1;
        if !ok {
            return Ok(Some((false, format!("n = {n}"))));
        }
    }
    checked(count, None, "ranks")
}

fn diag_k0(cfg: &SuiteConfig) -> Outcome {
    let top = cfg.max_rank + 1;
    reports((1..=top).flat_map(|m| (1..=top).map(move |n| verify_k0_relations(m, n))))
}

// ---------------------------------------------------------------- table

fn deg(cfg: &SuiteConfig, offset: isize) -> Value {
    json!((cfg.max_degree as isize + offset).max(0))
}

fn rank(cfg: &SuiteConfig, offset: isize) -> Value {
    json!((cfg.max_rank as isize + offset).max(0))
}

const CASES: &[CaseDef] = &[
    CaseDef { module: "combinatorics", id: "reduced-words", params: |c| params!("max_n" => rank(c, 3)), run: comb_reduced_words },
    CaseDef { module: "combinatorics", id: "partition-counts", params: |c| params!("max_n" => deg(c, 2)), run: comb_partition_counts },
    CaseDef { module: "combinatorics", id: "coset-bijection", params: |c| params!("max_n" => rank(c, 2)), run: comb_coset_bijection },
    CaseDef { module: "symfunc", id: "multiply-oracle", params: |c| params!("max_degree" => deg(c, -1), "nvars" => ORACLE_NVARS), run: sym_multiply_oracle },
    CaseDef { module: "symfunc", id: "pairing-duality", params: |c| params!("max_degree" => deg(c, 0)), run: sym_duality },
    CaseDef { module: "symfunc", id: "basis-round-trip", params: |c| params!("max_degree" => deg(c, 0)), run: sym_round_trip },
    CaseDef { module: "symfunc", id: "hopf-axioms", params: |c| params!("max_degree" => deg(c, 0)), run: sym_hopf_axioms },
    CaseDef { module: "symfunc", id: "antipode", params: |c| params!("max_degree" => deg(c, 0)), run: sym_antipode },
    CaseDef { module: "symfunc", id: "schur-unitriangular", params: |c| params!("max_degree" => deg(c, 0)), run: sym_unitriangular },
    CaseDef { module: "symfunc", id: "dual-apply-adjoint", params: |c| params!("max_degree" => deg(c, -1)), run: sym_dual_apply },
    CaseDef { module: "weyl", id: "normal-ordering", params: |c| params!("max_n" => 2 * c.max_degree, "seed" => c.seed, "pairs" => 40), run: weyl_normal_ordering },
    CaseDef { module: "weyl", id: "adjointness", params: |c| params!("max_degree" => deg(c, 4)), run: weyl_adjointness },
    CaseDef { module: "weyl", id: "integrality", params: |c| params!("max_n" => 2 * c.max_degree, "max_exponent" => 4), run: weyl_integrality },
    CaseDef { module: "nilcoxeter", id: "braid-relations", params: |c| params!("max_n" => rank(c, 3)), run: nilcox_braid },
    CaseDef { module: "nilcoxeter", id: "commutative-squares", params: |c| params!("max_n" => deg(c, 4)), run: nilcox_squares },
    CaseDef { module: "nilcoxeter", id: "weyl-relation", params: |c| params!("max_n" => deg(c, 4)), run: nilcox_weyl_relation },
    CaseDef { module: "nilcoxeter", id: "k-adjointness", params: |c| params!("max_n" => deg(c, 2)), run: nilcox_adjointness },
    CaseDef { module: "nilcoxeter", id: "bimodule-iso", params: |c| params!("max_n" => rank(c, 2)), run: nilcox_bimodule_iso },
    CaseDef { module: "heisenberg", id: "heisenberg-relation", params: |c| params!("max_m" => rank(c, 1), "max_n" => rank(c, 1), "degree" => deg(c, 2)), run: heis_relation },
    CaseDef { module: "heisenberg", id: "boson-relation", params: |c| params!("max_m" => rank(c, 0), "max_n" => rank(c, 0), "degree" => deg(c, 0)), run: heis_boson },
    CaseDef { module: "heisenberg", id: "weak-fock", params: |c| params!("max_m" => rank(c, 0), "max_n" => rank(c, 0), "degree" => deg(c, 0)), run: heis_weak_fock },
    CaseDef { module: "heisenberg", id: "confluence", params: |c| params!("seed" => c.seed, "words" => 200, "max_length" => 6, "max_index" => 4), run: heis_confluence },
    CaseDef { module: "heisenberg", id: "faithfulness", params: |c| params!("bidegree" => rank(c, 1), "degree" => deg(c, 2)), run: heis_faithful },
    CaseDef { module: "heisenberg", id: "phi-intertwining", params: |c| params!("max_degree" => deg(c, 0)), run: heis_intertwining },
    CaseDef { module: "heisenberg", id: "specht-orthonormal", params: |c| params!("max_degree" => deg(c, 0)), run: heis_specht_orthonormal },
    CaseDef { module: "bimodel", id: "local-relations", params: |c| params!("max_level" => rank(c, 0)), run: bimod_local_relations },
    CaseDef { module: "bimodel", id: "mackey", params: |c| params!("max_k" => rank(c, 1)), run: bimod_mackey },
    CaseDef { module: "bimodel", id: "characters-vs-lr", params: |c| params!("max_size" => deg(c, 0)), run: bimod_characters },
    CaseDef { module: "bimodel", id: "symmetrizer-idempotents", params: |c| params!("max_n" => rank(c, 2)), run: bimod_idempotents },
    CaseDef { module: "bimodel", id: "symmetrizer-rank", params: |c| params!("max_n" => rank(c, 2)), run: bimod_symmetrizer_rank },
    CaseDef { module: "diagcat", id: "closed-values", params: |c| params!("max_level" => rank(c, 0)), run: diag_closed_values },
    CaseDef { module: "diagcat", id: "simplify-terminates", params: |c| params!("seed" => c.seed, "diagrams" => 300), run: diag_termination },
    CaseDef { module: "diagcat", id: "simplify-sound", params: |c| params!("seed" => c.seed, "diagrams" => 150, "max_level" => rank(c, -1)), run: diag_soundness },
    CaseDef { module: "diagcat", id: "sym-image-homomorphism", params: |c| params!("seed" => c.seed, "max_n" => rank(c, 1)), run: diag_sym_homomorphism },
    CaseDef { module: "diagcat", id: "symmetrizer-sections", params: |c| params!("max_n" => rank(c, 1)), run: diag_symmetrizer_sections },
    CaseDef { module: "diagcat", id: "k0-relations", params: |c| params!("max_m" => rank(c, 1), "max_n" => rank(c, 1)), run: diag_k0 },
];

/// `(module, id)` of every case, in report order.
pub fn case_ids() -> Vec<(&'static str, &'static str)> {
    let mut ids: Vec<_> = CASES.iter().map(|c| (c.module, c.id)).collect();
    ids.sort_unstable();
    ids
}

fn execute(def: &CaseDef, cfg: &SuiteConfig) -> VerificationCase {
    let (status, detail) = match (def.run)(cfg) {
        Ok(Some((true, d))) => (CaseStatus::Pass, d),
        Ok(Some((false, d))) => (CaseStatus::Fail, d),
        Ok(None) => (CaseStatus::Skipped, "nothing to check within the bounds".into()),
        Err(e) => (CaseStatus::Fail, format!("error: {e}")),
    };
    VerificationCase {
        id: def.id.to_string(),
        module: def.module.to_string(),
        parameters: (def.params)(cfg),
        status,
        detail,
    }
}

/// Runs one case by id.
pub fn run_case(id: &str, cfg: &SuiteConfig) -> Option<VerificationCase> {
    CASES.iter().find(|c| c.id == id).map(|c| execute(c, cfg))
}

/// Runs every case, concurrently, and returns them ordered by module then id.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<VerificationCase> {
    let mut out: Vec<VerificationCase> = std::thread::scope(|scope| {
        let handles: Vec<_> = CASES.iter().map(|def| scope.spawn(move || execute(def, cfg))).collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|panic| std::panic::resume_unwind(panic)))
            .collect()
    });
    out.sort_by(|a, b| (&a.module, &a.id).cmp(&(&b.module, &b.id)));
    out
}

/// `{version, cases}`.
pub fn suite_json(cases: &[VerificationCase]) -> Value {
    json!({ "version": env!("CARGO_PKG_VERSION"), "cases": cases })
}
