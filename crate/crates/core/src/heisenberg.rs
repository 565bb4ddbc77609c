//! The integral Heisenberg algebra with generators `e_n`, `h_n*`, its Fock
//! space action on Sym, and the symmetric-group K-theory picture of it.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinatorics::{partitions_up_to, Partition};
use crate::error::Error;
use crate::report::Report;
use crate::scalar::{rat, rat_from_int, Int, Scalar};
use crate::symfunc::{dual_apply, multiply, schur, BasisTag, SymFunc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeisError {
    #[error("generator index must be positive")]
    ZeroIndex,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HeisLetter {
    E(usize),
    HStar(usize),
}

impl HeisLetter {
    fn index(self) -> usize {
        match self {
            HeisLetter::E(n) | HeisLetter::HStar(n) => n,
        }
    }
}

impl fmt::Display for HeisLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeisLetter::E(n) => write!(f, "e{n}"),
            HeisLetter::HStar(n) => write!(f, "h{n}*"),
        }
    }
}

/// A product of generators, read left to right. The empty word is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HeisWord {
    pub letters: Vec<HeisLetter>,
}

impl HeisWord {
    pub fn new(letters: Vec<HeisLetter>) -> Result<Self, HeisError> {
        if letters.iter().any(|l| l.index() == 0) {
            return Err(HeisError::ZeroIndex);
        }
        Ok(HeisWord { letters })
    }
}

impl fmt::Display for HeisWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        write!(f, "{}", self.letters.iter().join(" "))
    }
}

impl FromStr for HeisWord {
    type Err = HeisError;

    /// Space-separated letters such as `e3 h2* e1`; `1` or blank is the unit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(HeisWord::default());
        }
        let letters = s
            .split_whitespace()
            .map(|tok| {
                let bad = || HeisError::Parse(format!("bad letter {tok:?}"));
                if let Some(rest) = tok.strip_prefix('e') {
                    rest.parse().map(HeisLetter::E).map_err(|_| bad())
                } else if let Some(rest) = tok.strip_prefix('h') {
                    let rest = rest.strip_suffix('*').ok_or_else(bad)?;
                    rest.parse().map(HeisLetter::HStar).map_err(|_| bad())
                } else {
                    Err(bad())
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        HeisWord::new(letters)
    }
}

/// `Σ c_{λμ} e_λ (h_μ)*`, the normal form with starred factors on the right.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct HeisNormal {
    coeffs: BTreeMap<(Partition, Partition), Int>,
}

impl HeisNormal {
    pub fn zero() -> Self {
        HeisNormal::default()
    }

    pub fn one() -> Self {
        HeisNormal::term(Partition::empty(), Partition::empty())
    }

    /// `e_λ (h_μ)*`.
    pub fn term(lam: Partition, mu: Partition) -> Self {
        HeisNormal {
            coeffs: BTreeMap::from([((lam, mu), Int::one())]),
        }
    }

    pub fn e(n: usize) -> Self {
        HeisNormal::term(Partition::row(n), Partition::empty())
    }

    pub fn hstar(n: usize) -> Self {
        HeisNormal::term(Partition::empty(), Partition::row(n))
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), Int> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, key: (Partition, Partition), c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key.clone()).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &HeisNormal) -> HeisNormal {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Int) -> HeisNormal {
        let mut out = HeisNormal::zero();
        for (key, c) in &self.coeffs {
            out.add_term(key.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &HeisNormal) -> HeisNormal {
        heis_product(self, other)
    }

    /// `[{e_partition, hstar_partition, coeff}]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|((l, m), c)| {
                    json!({
                        "e_partition": l.parts(),
                        "hstar_partition": m.parts(),
                        "coeff": coeff_json(c),
                    })
                })
                .collect(),
        )
    }
}

fn coeff_json(c: &Int) -> Value {
    i64::try_from(c).map(Value::from).unwrap_or_else(|_| Value::from(c.to_string()))
}

impl fmt::Display for HeisNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((l, m), c)) in self.coeffs.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if !l.is_empty() {
                parts.push(format!("e{l}"));
            }
            if !m.is_empty() {
                parts.push(format!("h*{m}"));
            }
            match (abs.is_one(), parts.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&parts.join(" "))?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs} {}", parts.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HeisNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rewrites `h_m* e_n → e_n h_m* + e_{n-1} h_{m-1}*` (with `e_0 = h_0* = 1`)
/// until every starred letter sits to the right of every `e`.
pub fn heis_normalize(w: &HeisWord) -> HeisNormal {
    let mut pending: BTreeMap<Vec<HeisLetter>, Int> = BTreeMap::from([(w.letters.clone(), Int::one())]);
    let mut out = HeisNormal::zero();
    while let Some((word, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        let pos = word
            .windows(2)
            .position(|p| matches!((p[0], p[1]), (HeisLetter::HStar(_), HeisLetter::E(_))));
        match pos {
            None => {
                let mut es = Vec::new();
                let mut hs = Vec::new();
                for l in &word {
                    match *l {
                        HeisLetter::E(n) => es.push(n),
                        HeisLetter::HStar(n) => hs.push(n),
                    }
                }
                out.add_term((Partition::from_parts(es), Partition::from_parts(hs)), c);
            }
            Some(i) => {
                let (HeisLetter::HStar(m), HeisLetter::E(n)) = (word[i], word[i + 1]) else {
                    unreachable!("position matched a starred letter before an e");
                };
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                *pending.entry(swapped).or_insert_with(Int::zero) += &c;
                let mut lowered: Vec<HeisLetter> = word[..i].to_vec();
                if n > 1 {
                    lowered.push(HeisLetter::E(n - 1));
                }
                if m > 1 {
                    lowered.push(HeisLetter::HStar(m - 1));
                }
                lowered.extend_from_slice(&word[i + 2..]);
                *pending.entry(lowered).or_insert_with(Int::zero) += c;
            }
        }
    }
    out
}

fn word_of(lam: &Partition, mu: &Partition) -> Vec<HeisLetter> {
    lam.parts()
        .iter()
        .map(|&n| HeisLetter::E(n))
        .chain(mu.parts().iter().map(|&n| HeisLetter::HStar(n)))
        .collect()
}

/// Product of normal forms, by concatenating generator words and normalizing.
pub fn heis_product(a: &HeisNormal, b: &HeisNormal) -> HeisNormal {
    let mut out = HeisNormal::zero();
    for ((l1, m1), c1) in &a.coeffs {
        for ((l2, m2), c2) in &b.coeffs {
            let mut letters = word_of(l1, m1);
            letters.extend(word_of(l2, m2));
            out = out.add(&heis_normalize(&HeisWord { letters }).scale(&(c1 * c2)));
        }
    }
    out
}

/// The Fock space action: `e_λ` multiplies, `(h_μ)*` is the adjoint of
/// multiplication by `h_μ`; the starred factor acts first. Returned in the
/// basis of `f`.
pub fn fock_apply(a: &HeisNormal, f: &SymFunc) -> SymFunc {
    let mut acc = SymFunc::zero(f.basis());
    for ((lam, mu), c) in &a.coeffs {
        let starred = dual_apply(&SymFunc::basis_element(BasisTag::Complete, mu.clone()), f);
        let moved = multiply(&starred, &SymFunc::basis_element(BasisTag::Elementary, lam.clone()));
        acc = acc.add(&moved.scale(&rat_from_int(c.clone())));
    }
    acc
}

fn require_positive(m: usize, n: usize) -> crate::Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "generator indices must be positive, got m = {m}, n = {n}"
        )));
    }
    Ok(())
}

fn schur_up_to(d: usize) -> Vec<SymFunc> {
    partitions_up_to(d)
        .into_iter()
        .map(|l| SymFunc::basis_element(BasisTag::Schur, l))
        .collect()
}

/// Checks `h_m* e_n = e_n h_m* + e_{n-1} h_{m-1}*` both in the normal form
/// and as operators on every `s_λ` with `|λ| ≤ d`.
pub fn verify_heis_relation(m: usize, n: usize, d: usize) -> crate::Result<Report> {
    require_positive(m, n)?;
    let mut report = Report::new();
    let lhs = heis_product(&HeisNormal::hstar(m), &HeisNormal::e(n));
    let lower = HeisNormal::term(Partition::row(n - 1), Partition::row(m - 1));
    let rhs = heis_product(&HeisNormal::e(n), &HeisNormal::hstar(m)).add(&lower);
    report.expect_eq(format!("normal form of h{m}* e{n}"), n, &lhs, &rhs);
    let mut first_bad = None;
    for s in schur_up_to(d) {
        let left = fock_apply(&HeisNormal::hstar(m), &fock_apply(&HeisNormal::e(n), &s));
        let right = fock_apply(&rhs, &s);
        if left != right {
            first_bad = Some(s);
            break;
        }
    }
    let detail = match &first_bad {
        None => format!("all s_lambda with |lambda| <= {d}"),
        Some(s) => format!("fails on {s}"),
    };
    report.record(format!("h{m}* e{n} on Fock space"), n, first_bad.is_none(), detail);
    Ok(report.into_result()?)
}

/// With `p_n` acting by multiplication and `q_m` by the adjoint of
/// multiplication by `p_m`, checks `q_m p_n - p_n q_m = n δ_{mn}` on every
/// `s_λ` with `|λ| ≤ d`.
pub fn verify_boson_relation(m: usize, n: usize, d: usize) -> crate::Result<Report> {
    require_positive(m, n)?;
    let mut report = Report::new();
    let p_n = SymFunc::p(&[n]);
    let p_m = SymFunc::p(&[m]);
    let scalar = if m == n { rat(n as i64, 1) } else { Scalar::zero() };
    let mut first_bad = None;
    for s in schur_up_to(d) {
        let qp = dual_apply(&p_m, &multiply(&s, &p_n));
        let pq = multiply(&dual_apply(&p_m, &s), &p_n);
        if qp.sub(&pq) != s.scale(&scalar) {
            first_bad = Some(s);
            break;
        }
    }
    let detail = match &first_bad {
        None => format!("[q{m}, p{n}] = {} on |lambda| <= {d}", crate::scalar::fmt_scalar(&scalar)),
        Some(s) => format!("fails on {s}"),
    };
    report.record(format!("[q{m}, p{n}]"), n, first_bad.is_none(), detail);
    Ok(report.into_result()?)
}

/// `[S^λ] ↦ s_λ`, via the Jacobi–Trudi determinant.
pub fn specht_to_sym(lam: &Partition) -> SymFunc {
    schur(lam)
        .convert(BasisTag::Schur)
        .expect("Jacobi–Trudi determinants are integral")
}

/// The class of `Ind(M ⊗ N)`.
pub fn ind_class(m: &SymFunc, n: &SymFunc) -> SymFunc {
    multiply(m, n)
}

/// The class of `Res_M(N)`, i.e. `[M]*` applied to `[N]`.
pub fn res_class(m: &SymFunc, n: &SymFunc) -> SymFunc {
    dual_apply(m, n)
}

/// Checks, on classes `s_λ` with `|λ| ≤ d`:
/// `Res_{L_m} Ind_{E_n} = Ind_{E_n} Res_{L_m} + Ind_{E_{n-1}} Res_{L_{m-1}}`,
/// `Ind_{E_m} Ind_{E_n} = Ind_{E_n} Ind_{E_m}` and
/// `Res_{L_m} Res_{L_n} = Res_{L_n} Res_{L_m}`, plus nonnegativity of the
/// induced multiplicities.
pub fn verify_weak_fock(m: usize, n: usize, d: usize) -> crate::Result<Report> {
    require_positive(m, n)?;
    let e = |k: usize| specht_to_sym(&Partition::column(k));
    let l = |k: usize| specht_to_sym(&Partition::row(k));
    let mut report = Report::new();
    let mut bad: [Option<SymFunc>; 4] = Default::default();
    for s in schur_up_to(d) {
        let lhs = res_class(&l(m), &ind_class(&e(n), &s));
        let rhs = ind_class(&e(n), &res_class(&l(m), &s)).add(&ind_class(&e(n - 1), &res_class(&l(m - 1), &s)));
        if bad[0].is_none() && lhs != rhs {
            bad[0] = Some(s.clone());
        }
        if bad[1].is_none() && ind_class(&e(m), &ind_class(&e(n), &s)) != ind_class(&e(n), &ind_class(&e(m), &s)) {
            bad[1] = Some(s.clone());
        }
        if bad[2].is_none() && res_class(&l(m), &res_class(&l(n), &s)) != res_class(&l(n), &res_class(&l(m), &s)) {
            bad[2] = Some(s.clone());
        }
        let induced = ind_class(&e(n), &s);
        if bad[3].is_none() && induced.terms().values().any(|c| c < &Scalar::zero()) {
            bad[3] = Some(s.clone());
        }
    }
    let names = [
        format!("Res_L{m} Ind_E{n} = Ind_E{n} Res_L{m} + Ind_E{} Res_L{}", n - 1, m - 1),
        format!("Ind_E{m} Ind_E{n} = Ind_E{n} Ind_E{m}"),
        format!("Res_L{m} Res_L{n} = Res_L{n} Res_L{m}"),
        format!("Ind_E{n} multiplicities are nonnegative"),
    ];
    for (name, b) in names.into_iter().zip(bad) {
        let detail = match &b {
            None => format!("all s_lambda with |lambda| <= {d}"),
            Some(s) => format!("fails on {s}"),
        };
        report.record(name, n, b.is_none(), detail);
    }
    Ok(report.into_result()?)
}

/// Spot check of faithfulness: the operators `e_λ (h_μ)*` with
/// `|λ|, |μ| ≤ bidegree` act pairwise differently on `{s_ν : |ν| ≤ d}`.
pub fn verify_faithful(bidegree: usize, d: usize) -> crate::Result<Report> {
    let nus = partitions_up_to(d);
    let elements = partitions_up_to(bidegree);
    // (h_μ)* s_ν, cached and written in the e-basis so e_λ acts by union
    let starred: BTreeMap<(&Partition, &Partition), SymFunc> = elements
        .iter()
        .cartesian_product(nus.iter())
        .map(|(mu, nu)| {
            let img = dual_apply(
                &SymFunc::basis_element(BasisTag::Complete, mu.clone()),
                &SymFunc::basis_element(BasisTag::Schur, nu.clone()),
            );
            ((mu, nu), img.to_basis(BasisTag::Elementary))
        })
        .collect();
    let mut signatures = HashSet::new();
    let mut count = 0usize;
    for lam in &elements {
        for mu in &elements {
            let sig: Vec<BTreeMap<Partition, Scalar>> = nus
                .iter()
                .map(|nu| {
                    starred[&(mu, nu)]
                        .terms()
                        .iter()
                        .map(|(p, c)| (p.union(lam), c.clone()))
                        .collect()
                })
                .collect();
            signatures.insert(sig);
            count += 1;
        }
    }
    let mut report = Report::new();
    report.expect_eq(
        format!("distinct actions of e_lambda h_mu* (bidegree <= {bidegree}) on |nu| <= {d}"),
        bidegree,
        &signatures.len(),
        &count,
    );
    Ok(report.into_result()?)
}

/// Coefficients of `fock_apply(e_n, s_λ)` in the Schur basis.
pub fn e_action_in_schur(n: usize, lam: &Partition) -> BTreeMap<Partition, Int> {
    fock_apply(&HeisNormal::e(n), &SymFunc::basis_element(BasisTag::Schur, lam.clone()))
        .terms()
        .iter()
        .map(|(p, c)| (p.clone(), c.to_integer()))
        .collect()
}

/// All normal-form basis elements of bidegree at most `(a, b)`.
pub fn normal_basis(a: usize, b: usize) -> Vec<HeisNormal> {
    partitions_up_to(a)
        .into_iter()
        .cartesian_product(partitions_up_to(b))
        .map(|(l, m)| HeisNormal::term(l, m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> HeisWord {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(heis_normalize(&word("e2")), HeisNormal::e(2));
        let one = heis_normalize(&word("h1* e1"));
        assert_eq!(one, HeisNormal::term(Partition::row(1), Partition::row(1)).add(&HeisNormal::one()));
        let two = heis_normalize(&word("h2* e1"));
        assert_eq!(
            two,
            HeisNormal::term(Partition::row(1), Partition::row(2)).add(&HeisNormal::hstar(1))
        );
        assert_eq!(heis_normalize(&word("1")), HeisNormal::one());
    }

    #[test]
    fn words_parse_and_reject_zero() {
        assert_eq!(word("e3 h2* e1").to_string(), "e3 h2* e1");
        assert!("e0".parse::<HeisWord>().is_err());
        assert!("h2".parse::<HeisWord>().is_err());
        assert!("x1".parse::<HeisWord>().is_err());
    }

    #[test]
    fn display() {
        let a = heis_normalize(&word("h1* e1"));
        assert_eq!(a.to_string(), "1 + e[1] h*[1]");
    }
}
