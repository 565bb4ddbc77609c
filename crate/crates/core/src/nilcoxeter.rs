//! Nilcoxeter algebras `N_n`, the induction and restriction bimodules, and
//! their Grothendieck groups.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::{coset_decompose, coset_rep, reduced_word, GeneratorWord, Permutation};
use crate::linalg::{hom_dimension, sparse_rank, Representation, SparseMatrix, SparseRow};
use crate::error::Error;
use crate::report::Report;
use crate::scalar::{factorial_usize, rat_from_int, Int};
use crate::weyl::{Lattice, PolyVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NilcoxError {
    #[error("rank mismatch: N_{left} and N_{right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected a class of the other flavour")]
    FlavorMismatch,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type NilcoxResult<T> = Result<T, NilcoxError>;

/// An element `Σ c_σ u_σ` of `N_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NilcoxElem {
    n: usize,
    coeffs: BTreeMap<Permutation, Int>,
}

impl NilcoxElem {
    pub fn zero(n: usize) -> Self {
        NilcoxElem {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        NilcoxElem::basis(Permutation::identity(n))
    }

    /// `u_σ`.
    pub fn basis(sigma: Permutation) -> Self {
        NilcoxElem {
            n: sigma.rank(),
            coeffs: BTreeMap::from([(sigma, Int::one())]),
        }
    }

    /// The generator `u_i` of `N_n`.
    pub fn generator(i: usize, n: usize) -> Self {
        NilcoxElem::basis(Permutation::simple(i, n).expect("generator index in range"))
    }

    /// `u_{i_1} ⋯ u_{i_k}`: `u_σ` for a reduced word, zero otherwise.
    pub fn from_word(word: &GeneratorWord) -> Self {
        if word.is_reduced() {
            NilcoxElem::basis(word.eval())
        } else {
            NilcoxElem::zero(word.n)
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Int)>) -> Self {
        let mut e = NilcoxElem::zero(n);
        for (p, c) in terms {
            assert_eq!(p.rank(), n, "permutation of the wrong rank");
            e.add_term(p, c);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Int> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, p: Permutation, c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(p.clone()).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn add(&self, other: &NilcoxElem) -> NilcoxResult<NilcoxElem> {
        check_rank(self.n, other.n)?;
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Int) -> NilcoxElem {
        NilcoxElem::from_terms(self.n, self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)))
    }

    /// The image under the unit inclusion `N_n ↪ N_m`.
    pub fn extend(&self, m: usize) -> NilcoxElem {
        NilcoxElem::from_terms(m, self.coeffs.iter().map(|(p, c)| (p.extend(m), c.clone())))
    }

    pub fn mul(&self, other: &NilcoxElem) -> NilcoxResult<NilcoxElem> {
        nc_product(self, other)
    }

    /// Parses `u[1,2] + 3 u[]` in `N_n`; each bracket must hold a reduced word.
    pub fn parse(s: &str, n: usize) -> NilcoxResult<NilcoxElem> {
        let mut out = NilcoxElem::zero(n);
        let s = s.trim();
        if s.is_empty() {
            return Err(NilcoxError::Parse("empty literal".into()));
        }
        if s == "0" {
            return Ok(out);
        }
        let mut rest = s;
        let mut first = true;
        while !rest.trim().is_empty() {
            let t = rest.trim_start();
            let (negative, t) = match t.chars().next() {
                Some('+') if !first => (false, &t[1..]),
                Some('-') => (true, &t[1..]),
                _ if first => (false, t),
                _ => return Err(NilcoxError::Parse(format!("expected + or - in {s:?}"))),
            };
            first = false;
            let t = t.trim_start();
            let upos = t
                .find('u')
                .ok_or_else(|| NilcoxError::Parse(format!("missing u[...] in {s:?}")))?;
            let coeff_text = t[..upos].trim().trim_end_matches('*').trim();
            let mut c = if coeff_text.is_empty() {
                Int::one()
            } else {
                coeff_text
                    .parse::<Int>()
                    .map_err(|_| NilcoxError::Parse(format!("bad coefficient {coeff_text:?}")))?
            };
            if negative {
                c = -c;
            }
            let after = t[upos + 1..].trim_start();
            let inner_end = after
                .find(']')
                .ok_or_else(|| NilcoxError::Parse(format!("unclosed bracket in {s:?}")))?;
            let inner = after
                .strip_prefix('[')
                .ok_or_else(|| NilcoxError::Parse(format!("expected '[' after u in {s:?}")))?;
            let letters_text = &inner[..inner_end - 1];
            let letters: Vec<usize> = if letters_text.trim().is_empty() {
                Vec::new()
            } else {
                letters_text
                    .split(',')
                    .map(|x| x.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| NilcoxError::Parse(format!("bad letter in {s:?}: {e}")))?
            };
            let word = GeneratorWord::new(letters.clone(), n).map_err(|e| NilcoxError::Parse(e.to_string()))?;
            if !word.is_reduced() {
                return Err(NilcoxError::NotReduced(letters));
            }
            out.add_term(word.eval(), c);
            rest = &after[inner_end + 1..];
        }
        Ok(out)
    }
}

impl fmt::Display for NilcoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // shortest words first
        let terms = self
            .coeffs
            .iter()
            .map(|(p, c)| (reduced_word(p).letters, c))
            .sorted_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        for (i, (word, c)) in terms.enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "u[{}]", word.iter().join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for NilcoxElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{}: {}", self.n, self)
    }
}

fn check_rank(a: usize, b: usize) -> NilcoxResult<()> {
    if a == b {
        Ok(())
    } else {
        Err(NilcoxError::RankMismatch { left: a, right: b })
    }
}

/// `u_σ u_τ = u_{στ}` when lengths add, `0` otherwise.
pub fn nc_product(a: &NilcoxElem, b: &NilcoxElem) -> NilcoxResult<NilcoxElem> {
    check_rank(a.n, b.n)?;
    let mut out = NilcoxElem::zero(a.n);
    for (s, cs) in &a.coeffs {
        let ls = s.length();
        for (t, ct) in &b.coeffs {
            let st = s.compose(t);
            if st.length() == ls + t.length() {
                out.add_term(st, cs * ct);
            }
        }
    }
    Ok(out)
}

/// Evaluates a product of generators by rewriting alone: explores every word
/// reachable by braid and commutation moves; a repeated adjacent letter means
/// the product vanishes. Otherwise returns the lexicographically least word
/// of the class as a canonical name for the basis element.
pub fn evaluate_word_by_rewriting(letters: &[usize]) -> Option<Vec<usize>> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([letters.to_vec()]);
    seen.insert(letters.to_vec());
    while let Some(w) = queue.pop_front() {
        if w.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        let mut push = |v: Vec<usize>| {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        };
        for i in 0..w.len().saturating_sub(1) {
            if w[i].abs_diff(w[i + 1]) >= 2 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                push(v);
            }
        }
        for i in 0..w.len().saturating_sub(2) {
            if w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1 {
                let mut v = w.clone();
                v[i] = w[i + 1];
                v[i + 1] = w[i];
                v[i + 2] = w[i + 1];
                push(v);
            }
        }
    }
    seen.into_iter().next()
}

/// `1, u_n, u_{n-1}u_n, …, u_1⋯u_n` in `N_{n+1}`: a basis of `N_{n+1}` as a
/// free right `N_n`-module.
pub fn x_right_basis(n: usize) -> Vec<NilcoxElem> {
    (1..=n + 1)
        .rev()
        .map(|i| NilcoxElem::basis(coset_rep(i, n + 1)))
        .collect()
}

/// `1, u_n, u_n u_{n-1}, …, u_n⋯u_1` in `N_{n+1}`: a basis of `N_{n+1}` as a
/// free left `N_n`-module.
pub fn d_left_basis(n: usize) -> Vec<NilcoxElem> {
    (1..=n + 1)
        .rev()
        .map(|i| NilcoxElem::basis(coset_rep(i, n + 1).inverse()))
        .collect()
}

/// Writes `u_σ`, `σ ∈ S_{n+1}`, as `b · u_{σ′}` with `b` the element of
/// [`x_right_basis`] at the returned position.
pub fn factor_right(sigma: &Permutation) -> (usize, Permutation) {
    let np1 = sigma.rank();
    let (i, rest) = coset_decompose(sigma);
    (np1 - i, rest)
}

/// `a ⊗ b` in `N_n ⊗_{N_{n-1}} N_n`, in the basis `c_k ⊗ u_τ` where `c_k`
/// runs over `x_right_basis(n-1)`. Keys are `(k, τ)`.
fn tensor_in_basis(a: &NilcoxElem, b: &NilcoxElem) -> BTreeMap<(usize, Permutation), Int> {
    let n = a.n;
    let mut out: BTreeMap<(usize, Permutation), Int> = BTreeMap::new();
    for (rho, c) in &a.coeffs {
        let (k, rest) = factor_right(rho);
        let moved = nc_product(&NilcoxElem::basis(rest.extend(n)), b).expect("same rank");
        for (tau, d) in moved.coeffs {
            *out.entry((k, tau)).or_insert_with(Int::zero) += c * d;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn to_row(e: &NilcoxElem, index: &HashMap<Permutation, usize>) -> SparseRow {
    e.coeffs
        .iter()
        .map(|(p, c)| (index[p], rat_from_int(c.clone())))
        .collect()
}

/// Checks that `m_1 ⊕ m_2 : N_n ⊕ (N_n ⊗_{N_{n-1}} N_n) → N_{n+1}`, with
/// `m_1` the inclusion and `m_2(a ⊗ b) = a u_n b`, is a bimodule isomorphism.
pub fn verify_bimodule_iso(n: usize) -> crate::Result<Report> {
    if n == 0 {
        return Err(Error::InvalidArgument("the bimodule decomposition needs n >= 1".into()));
    }
    let mut report = Report::new();
    let np1 = n + 1;
    let big: Vec<Permutation> = Permutation::all(np1).collect();
    let index: HashMap<Permutation, usize> = big.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let small: Vec<Permutation> = Permutation::all(n).collect();
    let cosets = x_right_basis(n - 1);
    let u_n = NilcoxElem::generator(n, np1);

    let m1 = |a: &NilcoxElem| a.extend(np1);
    let m2_basis = |k: usize, tau: &Permutation| -> NilcoxElem {
        let left = nc_product(&cosets[k].extend(np1), &u_n).expect("same rank");
        nc_product(&left, &NilcoxElem::basis(tau.extend(np1))).expect("same rank")
    };
    let m2 = |t: &BTreeMap<(usize, Permutation), Int>| -> NilcoxElem {
        t.iter().fold(NilcoxElem::zero(np1), |acc, ((k, tau), c)| {
            acc.add(&m2_basis(*k, tau).scale(c)).expect("same rank")
        })
    };

    let fact = |k: usize| factorial_usize(k);
    report.expect_eq(
        "dimension identity n! + n*n! = (n+1)!",
        n,
        &(fact(n) + n * fact(n)),
        &fact(np1),
    );

    let img1: Vec<NilcoxElem> = small.iter().map(|s| m1(&NilcoxElem::basis(s.clone()))).collect();
    let img2: Vec<NilcoxElem> = (0..cosets.len())
        .cartesian_product(small.iter())
        .map(|(k, tau)| m2_basis(k, tau))
        .collect();
    let rows1: Vec<SparseRow> = img1.iter().map(|e| to_row(e, &index)).collect();
    let rows2: Vec<SparseRow> = img2.iter().map(|e| to_row(e, &index)).collect();
    let r1 = sparse_rank(rows1.clone());
    let r2 = sparse_rank(rows2.clone());
    let r12 = sparse_rank(rows1.into_iter().chain(rows2).collect());
    report.expect_eq("m1 injective", n, &r1, &fact(n));
    report.expect_eq("m2 injective", n, &r2, &(n * fact(n)));
    report.expect_eq("images intersect trivially", n, &r12, &(r1 + r2));
    report.expect_eq("images span N_{n+1}", n, &r12, &fact(np1));

    let fixed: BTreeSet<&Permutation> = big.iter().filter(|s| s.apply(np1) == np1).collect();
    let img1_support: BTreeSet<&Permutation> = img1.iter().flat_map(|e| e.coeffs.keys()).collect();
    report.expect_eq(
        "image of m1 is spanned by u_sigma with sigma(n+1) = n+1",
        n,
        &img1_support,
        &fixed,
    );

    let gens: Vec<NilcoxElem> = (1..n).map(|j| NilcoxElem::generator(j, n)).collect();
    let mut m1_ok = true;
    let mut m2_left_ok = true;
    let mut m2_right_ok = true;
    let mut balanced_ok = true;
    for g in &gens {
        let g_big = g.extend(np1);
        for s in &small {
            let us = NilcoxElem::basis(s.clone());
            m1_ok &= m1(&nc_product(g, &us).unwrap()) == nc_product(&g_big, &m1(&us)).unwrap();
            m1_ok &= m1(&nc_product(&us, g).unwrap()) == nc_product(&m1(&us), &g_big).unwrap();
            for (k, c) in cosets.iter().enumerate() {
                let here = m2_basis(k, s);
                let c_small = c.extend(n);
                let left = tensor_in_basis(&nc_product(g, &c_small).unwrap(), &us);
                m2_left_ok &= m2(&left) == nc_product(&g_big, &here).unwrap();
                let right = tensor_in_basis(&c_small, &nc_product(&us, g).unwrap());
                m2_right_ok &= m2(&right) == nc_product(&here, &g_big).unwrap();
            }
        }
    }
    // N_{n-1} moves across the tensor sign: (a r) u_n b = a u_n (r b)
    for j in 1..n.saturating_sub(1) {
        let r = NilcoxElem::generator(j, np1);
        for c in &cosets {
            for s in &small {
                let a = c.extend(np1);
                let b = NilcoxElem::basis(s.extend(np1));
                let lhs = nc_product(&nc_product(&nc_product(&a, &r).unwrap(), &u_n).unwrap(), &b).unwrap();
                let rhs = nc_product(&nc_product(&a, &u_n).unwrap(), &nc_product(&r, &b).unwrap()).unwrap();
                balanced_ok &= lhs == rhs;
            }
        }
    }
    report.record("m1 commutes with the N_n actions", n, m1_ok, format!("{} generators", gens.len()));
    report.record("m2 commutes with the left N_n action", n, m2_left_ok, format!("{} generators", gens.len()));
    report.record("m2 commutes with the right N_n action", n, m2_right_ok, format!("{} generators", gens.len()));
    report.record("m2 is N_{n-1}-balanced", n, balanced_ok, format!("{} generators", n.saturating_sub(2)));
    Ok(report.into_result()?)
}

/// `N_n` acting on itself by left multiplication, generators `u_1..u_{n-1}`.
pub fn regular_representation(n: usize) -> Representation {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let generators = (1..n)
        .map(|i| {
            let g = NilcoxElem::generator(i, n);
            let mut m = SparseMatrix::new();
            for (col, p) in perms.iter().enumerate() {
                let img = nc_product(&g, &NilcoxElem::basis(p.clone())).expect("same rank");
                for (q, c) in img.coeffs {
                    m.insert((index[&q], col), rat_from_int(c));
                }
            }
            m
        })
        .collect();
    Representation {
        dim: perms.len(),
        generators,
    }
}

/// The one-dimensional module `L_n` on which every generator acts by zero.
pub fn simple_representation(n: usize) -> Representation {
    Representation {
        dim: 1,
        generators: vec![SparseMatrix::new(); n.saturating_sub(1)],
    }
}

/// `dim Hom_{N_n}(N_n, L_n)`, by solving for module maps.
pub fn hom_regular_to_simple(n: usize) -> usize {
    hom_dimension(&regular_representation(n), &simple_representation(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Classes of finite-dimensional modules, basis `[L_n]`.
    G,
    /// Classes of finitely generated projectives, basis `[N_n]`.
    K,
}

/// `Σ c_n [L_n]` or `Σ c_n [N_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KVector {
    pub flavor: Flavor,
    coords: BTreeMap<usize, Int>,
}

impl KVector {
    pub fn zero(flavor: Flavor) -> Self {
        KVector {
            flavor,
            coords: BTreeMap::new(),
        }
    }

    /// `[L_n]` or `[N_n]`.
    pub fn basis(flavor: Flavor, n: usize) -> Self {
        KVector {
            flavor,
            coords: BTreeMap::from([(n, Int::one())]),
        }
    }

    pub fn coords(&self) -> &BTreeMap<usize, Int> {
        &self.coords
    }

    pub fn coeff(&self, n: usize) -> Int {
        self.coords.get(&n).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn add_term(&mut self, n: usize, c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(n).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(&n);
        }
    }

    pub fn add(&self, other: &KVector) -> NilcoxResult<KVector> {
        if self.flavor != other.flavor {
            return Err(NilcoxError::FlavorMismatch);
        }
        let mut out = self.clone();
        for (n, c) in &other.coords {
            out.add_term(*n, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let letter = match self.flavor {
            Flavor::G => 'L',
            Flavor::K => 'N',
        };
        for (i, (n, c)) in self.coords.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "[{letter}_{n}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Class of `Ind(L_n)` or `Ind(N_n)`. Every finite-dimensional module of
/// `N_{n+1}` has all composition factors `L_{n+1}`, so its class is its
/// dimension; projectives are free, so their class is their rank.
fn ind_coefficient(flavor: Flavor, n: usize) -> Int {
    match flavor {
        // N_{n+1} ⊗_{N_n} L_n has dimension = rank of X_n as a right module
        Flavor::G => Int::from(x_right_basis(n).len()),
        // N_{n+1} ⊗_{N_n} N_n = N_{n+1}
        Flavor::K => Int::one(),
    }
}

/// Class of `Res(L_{n+1})` or `Res(N_{n+1})` in degree `n`.
fn res_coefficient(flavor: Flavor, n: usize) -> Int {
    match flavor {
        // L_{n+1} restricts to a one-dimensional N_n-module
        Flavor::G => Int::from(simple_representation(n + 1).dim),
        // N_{n+1} is free over N_n with basis d_left_basis(n)
        Flavor::K => Int::from(d_left_basis(n).len()),
    }
}

pub fn ind_k(v: &KVector) -> KVector {
    let mut out = KVector::zero(v.flavor);
    for (n, c) in &v.coords {
        out.add_term(n + 1, c * ind_coefficient(v.flavor, *n));
    }
    out
}

pub fn res_k(v: &KVector) -> KVector {
    let mut out = KVector::zero(v.flavor);
    for (n, c) in &v.coords {
        if *n > 0 {
            out.add_term(n - 1, c * res_coefficient(v.flavor, n - 1));
        }
    }
    out
}

/// `⟨[P], [M]⟩ = dim Hom(P, M)`, which is `δ_{mn}` on `[N_m]`, `[L_n]`.
pub fn k_pairing(a: &KVector, b: &KVector) -> NilcoxResult<Int> {
    if a.flavor != Flavor::K || b.flavor != Flavor::G {
        return Err(NilcoxError::FlavorMismatch);
    }
    Ok(a.coords.iter().map(|(n, c)| c * b.coeff(*n)).sum())
}

/// `[L_n] ↦ x^n/n!`.
pub fn phi_g(v: &KVector) -> NilcoxResult<PolyVector> {
    if v.flavor != Flavor::G {
        return Err(NilcoxError::FlavorMismatch);
    }
    Ok(to_poly(v, Lattice::DividedPowers))
}

/// `[N_n] ↦ x^n`.
pub fn phi_k(v: &KVector) -> NilcoxResult<PolyVector> {
    if v.flavor != Flavor::K {
        return Err(NilcoxError::FlavorMismatch);
    }
    Ok(to_poly(v, Lattice::Monomials))
}

fn to_poly(v: &KVector, lattice: Lattice) -> PolyVector {
    let top = v.coords.keys().next_back().map_or(0, |&n| n + 1);
    let coords: Vec<Int> = (0..top).map(|n| v.coeff(n)).collect();
    PolyVector::from_coords(lattice, &coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(v: &[usize], n: usize) -> NilcoxElem {
        NilcoxElem::from_word(&GeneratorWord::new(v.to_vec(), n).unwrap())
    }

    #[test]
    fn generator_relations() {
        let u1 = NilcoxElem::generator(1, 3);
        assert!(nc_product(&u1, &u1).unwrap().is_zero());
        let u2 = NilcoxElem::generator(2, 3);
        assert_eq!(nc_product(&u1, &u2).unwrap(), word(&[1, 2], 3));
        assert!(nc_product(&u1, &NilcoxElem::generator(1, 4)).is_err());
    }

    #[test]
    fn bases() {
        assert_eq!(x_right_basis(0), vec![NilcoxElem::one(1)]);
        let b = x_right_basis(2);
        assert_eq!(b, vec![NilcoxElem::one(3), word(&[2], 3), word(&[1, 2], 3)]);
        let d = d_left_basis(2);
        assert_eq!(d, vec![NilcoxElem::one(3), word(&[2], 3), word(&[2, 1], 3)]);
    }

    #[test]
    fn literal() {
        let e = NilcoxElem::parse("u[1,2] + 3 u[]", 3).unwrap();
        assert_eq!(e.to_string(), "3 u[] + u[1,2]");
        assert_eq!(NilcoxElem::parse(&e.to_string(), 3).unwrap(), e);
        assert!(matches!(NilcoxElem::parse("u[1,1]", 3), Err(NilcoxError::NotReduced(_))));
        assert!(NilcoxElem::parse("u[3]", 3).is_err());
        assert_eq!(NilcoxElem::parse("-u[2] + u[2]", 3).unwrap(), NilcoxElem::zero(3));
    }

    #[test]
    fn rewriting_oracle() {
        assert_eq!(evaluate_word_by_rewriting(&[1, 1]), None);
        assert_eq!(evaluate_word_by_rewriting(&[1, 2, 1, 2]), None);
        assert_eq!(evaluate_word_by_rewriting(&[2, 1, 2]), Some(vec![1, 2, 1]));
        assert_eq!(evaluate_word_by_rewriting(&[3, 1]), Some(vec![1, 3]));
    }

    #[test]
    fn k_theory_examples() {
        assert_eq!(ind_k(&KVector::basis(Flavor::G, 2)).to_string(), "3[L_3]");
        assert!(res_k(&KVector::basis(Flavor::G, 0)).is_zero());
        assert_eq!(res_k(&KVector::basis(Flavor::K, 3)).to_string(), "3[N_2]");
        assert_eq!(ind_k(&KVector::basis(Flavor::K, 3)).to_string(), "[N_4]");
    }
}
