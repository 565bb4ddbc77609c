//! The Weyl algebra `Z⟨x, ∂⟩/(∂x - x∂ - 1)` in normal order, acting on the
//! divided-power lattice `R` and the monomial lattice `R′`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::{binomial, falling, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("pairing expects a monomial-lattice vector on the left and a divided-power vector on the right")]
    LatticeMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type WeylResult<T> = Result<T, WeylError>;

/// `Σ c_{a,b} x^a ∂^b`, keyed by `(a, b)`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylElement {
    coeffs: BTreeMap<(usize, usize), Int>,
}

impl WeylElement {
    pub fn zero() -> Self {
        WeylElement::default()
    }

    pub fn one() -> Self {
        WeylElement::monomial(0, 0)
    }

    pub fn x() -> Self {
        WeylElement::monomial(1, 0)
    }

    pub fn d() -> Self {
        WeylElement::monomial(0, 1)
    }

    /// `x^a ∂^b`.
    pub fn monomial(a: usize, b: usize) -> Self {
        WeylElement {
            coeffs: BTreeMap::from([((a, b), Int::one())]),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Int)>) -> Self {
        let mut w = WeylElement::zero();
        for (k, c) in terms {
            w.add_term(k, c);
        }
        w
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Int> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, key: (usize, usize), c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Int) -> WeylElement {
        WeylElement::from_terms(self.coeffs.iter().map(|(key, c)| (*key, c * k)))
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        weyl_multiply(self, other)
    }
}

/// Normal-ordered product, using
/// `∂^b x^c = Σ_k C(b,k) c!/(c-k)! x^{c-k} ∂^{b-k}`.
pub fn weyl_multiply(u: &WeylElement, v: &WeylElement) -> WeylElement {
    let mut out = WeylElement::zero();
    for (&(a, b), cu) in &u.coeffs {
        for (&(c, d), cv) in &v.coeffs {
            let base = cu * cv;
            for k in 0..=b.min(c) {
                let coeff = &base * binomial(b, k) * falling(c, k);
                out.add_term((a + c - k, b + d - k), coeff);
            }
        }
    }
    out
}

/// Normal-ordered product by repeated single rewrites `∂x → x∂ + 1` on
/// words. Slow; kept as an independent check of [`weyl_multiply`].
pub fn weyl_multiply_by_rewriting(u: &WeylElement, v: &WeylElement) -> WeylElement {
    // words over {false = x, true = ∂}
    let word = |a: usize, b: usize| -> Vec<bool> {
        std::iter::repeat_n(false, a).chain(std::iter::repeat_n(true, b)).collect()
    };
    let mut pending: BTreeMap<Vec<bool>, Int> = BTreeMap::new();
    for (&(a, b), cu) in &u.coeffs {
        for (&(c, d), cv) in &v.coeffs {
            let mut w = word(a, b);
            w.extend(word(c, d));
            *pending.entry(w).or_insert_with(Int::zero) += cu * cv;
        }
    }
    let mut out = WeylElement::zero();
    while let Some((w, c)) = pending.pop_first() {
        if c.is_zero() {
            continue;
        }
        match w.windows(2).position(|p| p[0] && !p[1]) {
            None => {
                let a = w.iter().filter(|&&t| !t).count();
                out.add_term((a, w.len() - a), c);
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                *pending.entry(swapped).or_insert_with(Int::zero) += &c;
                let mut dropped = w;
                dropped.drain(i..i + 2);
                *pending.entry(dropped).or_insert_with(Int::zero) += c;
            }
        }
    }
    out
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.coeffs.iter().enumerate() {
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
            write!(f, "x^{a} d^{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WeylElement {
    type Err = WeylError;

    /// Normal-ordered terms like `3 x^2 d^1`, joined by `+`/`-`. Missing
    /// factors have exponent 0, a bare `x` or `d` has exponent 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(WeylError::Parse("empty Weyl literal".into()));
        }
        parse_terms(s)
    }
}

fn parse_terms(s: &str) -> WeylResult<WeylElement> {
    let mut out = WeylElement::zero();
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        if ch == '+' || ch == '-' {
            if !cur.trim().is_empty() {
                chunks.push((neg, std::mem::take(&mut cur)));
            } else if !chunks.is_empty() || neg {
                return Err(WeylError::Parse(format!("dangling sign in {s:?}")));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    if cur.trim().is_empty() {
        return Err(WeylError::Parse(format!("literal ends with a sign: {s:?}")));
    }
    chunks.push((neg, cur));
    for (neg, chunk) in chunks {
        let mut coeff = Int::one();
        let (mut a, mut b) = (0usize, 0usize);
        let mut seen_coeff = false;
        for tok in chunk.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            if let Some(rest) = tok.strip_prefix('x') {
                if b > 0 {
                    return Err(WeylError::Parse(format!("term {chunk:?} is not normal-ordered")));
                }
                a += parse_exponent(rest, tok)?;
            } else if let Some(rest) = tok.strip_prefix('d') {
                b += parse_exponent(rest, tok)?;
            } else if !seen_coeff && a == 0 && b == 0 {
                coeff = Int::from_str(tok).map_err(|_| WeylError::Parse(format!("bad coefficient {tok:?}")))?;
                seen_coeff = true;
            } else {
                return Err(WeylError::Parse(format!("unexpected token {tok:?}")));
            }
        }
        if neg {
            coeff = -coeff;
        }
        out.add_term((a, b), coeff);
    }
    Ok(out)
}

fn parse_exponent(rest: &str, tok: &str) -> WeylResult<usize> {
    if rest.is_empty() {
        return Ok(1);
    }
    rest.strip_prefix('^')
        .and_then(|e| e.parse().ok())
        .ok_or_else(|| WeylError::Parse(format!("bad power {tok:?}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lattice {
    /// Coordinates in `r_n = x^n / n!`.
    #[serde(rename = "R")]
    DividedPowers,
    /// Coordinates in `x^n`.
    #[serde(rename = "R'")]
    Monomials,
}

/// A vector of `R` or `R′` with integer coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyVector {
    pub lattice: Lattice,
    coeffs: BTreeMap<usize, Int>,
}

impl PolyVector {
    pub fn zero(lattice: Lattice) -> Self {
        PolyVector {
            lattice,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector of index `n` (`x^n` or `x^n/n!`).
    pub fn basis(lattice: Lattice, n: usize) -> Self {
        PolyVector {
            lattice,
            coeffs: BTreeMap::from([(n, Int::one())]),
        }
    }

    pub fn from_coords(lattice: Lattice, coords: &[Int]) -> Self {
        let mut v = PolyVector::zero(lattice);
        for (n, c) in coords.iter().enumerate() {
            v.add_term(n, c.clone());
        }
        v
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Int> {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Int {
        self.coeffs.get(&n).cloned().unwrap_or_else(Int::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, n: usize, c: Int) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(n).or_insert_with(Int::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&n);
        }
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.lattice {
            Lattice::DividedPowers => "R",
            Lattice::Monomials => "R'",
        };
        let top = self.coeffs.keys().next_back().map_or(0, |&n| n + 1);
        let coords: Vec<String> = (0..top).map(|n| self.coeff(n).to_string()).collect();
        write!(f, "lattice:{name} [{}]", coords.join(","))
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PolyVector {
    type Err = WeylError;

    /// `lattice:R [c0,c1,...]` or `lattice:R' [...]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WeylError::Parse(format!("expected `lattice:R [c0,c1,...]`, got {s:?}"));
        let rest = s.trim().strip_prefix("lattice:").ok_or_else(bad)?;
        let (name, coords) = rest.split_once('[').ok_or_else(bad)?;
        let lattice = match name.trim() {
            "R" => Lattice::DividedPowers,
            "R'" | "R′" => Lattice::Monomials,
            _ => return Err(bad()),
        };
        let coords = coords.trim().strip_suffix(']').ok_or_else(bad)?;
        let values = if coords.trim().is_empty() {
            Vec::new()
        } else {
            coords
                .split(',')
                .map(|c| Int::from_str(c.trim()).map_err(|_| bad()))
                .collect::<WeylResult<Vec<_>>>()?
        };
        Ok(PolyVector::from_coords(lattice, &values))
    }
}

/// The action of `u` on `v` in the coordinates of `v`'s lattice.
pub fn weyl_apply(u: &WeylElement, v: &PolyVector) -> PolyVector {
    let mut out = PolyVector::zero(v.lattice);
    for (&(a, b), cu) in &u.coeffs {
        for (&n, cv) in &v.coeffs {
            if n < b {
                continue;
            }
            let m = n - b;
            let factor = match v.lattice {
                // ∂^b x^n = n!/(n-b)! x^{n-b}, then x^a shifts
                Lattice::Monomials => falling(n, b),
                // ∂^b r_n = r_{n-b}, x^a r_m = (m+a)!/m! r_{m+a}
                Lattice::DividedPowers => falling(m + a, a),
            };
            out.add_term(m + a, cu * cv * factor);
        }
    }
    out
}

/// `⟨v, w⟩` for `v ∈ R′`, `w ∈ R`, with `⟨x^n, r_m⟩ = δ_{nm}`.
pub fn weyl_pairing(v: &PolyVector, w: &PolyVector) -> WeylResult<Int> {
    if v.lattice != Lattice::Monomials || w.lattice != Lattice::DividedPowers {
        return Err(WeylError::LatticeMismatch);
    }
    Ok(v.coeffs.iter().map(|(n, c)| c * w.coeff(*n)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeylElement {
        s.parse().unwrap()
    }

    #[test]
    fn defining_relation() {
        let dx = weyl_multiply(&WeylElement::d(), &WeylElement::x());
        assert_eq!(dx, w("x d + 1"));
        assert_eq!(weyl_multiply(&WeylElement::x(), &WeylElement::d()), w("x d"));
        let d2x = weyl_multiply(&WeylElement::monomial(0, 2), &WeylElement::x());
        assert_eq!(d2x, w("x^1 d^2 + 2 d^1"));
    }

    #[test]
    fn literals() {
        let u = w("3 x^2 d^1 + d^0");
        assert_eq!(u.terms().len(), 2);
        assert_eq!(u.to_string(), "x^0 d^0 + 3 x^2 d^1");
        assert_eq!(u.to_string().parse::<WeylElement>().unwrap(), u);
        assert_eq!(w("-x + x"), WeylElement::zero());
        assert!("x^a".parse::<WeylElement>().is_err());
        assert!("d x".parse::<WeylElement>().is_err());
        assert!("x +".parse::<WeylElement>().is_err());
        let v: PolyVector = "lattice:R [1,0,2]".parse().unwrap();
        assert_eq!(v.lattice, Lattice::DividedPowers);
        assert_eq!(v.to_string(), "lattice:R [1,0,2]");
        assert!("lattice:Q [1]".parse::<PolyVector>().is_err());
    }

    #[test]
    fn actions() {
        let x3 = PolyVector::basis(Lattice::Monomials, 3);
        assert_eq!(weyl_apply(&WeylElement::d(), &x3), PolyVector::from_coords(Lattice::Monomials, &[0.into(), 0.into(), 3.into()]));
        let r0 = PolyVector::basis(Lattice::DividedPowers, 0);
        assert!(weyl_apply(&WeylElement::d(), &r0).is_zero());
        let r2 = PolyVector::basis(Lattice::DividedPowers, 2);
        // x · x^2/2 = 3 · x^3/3!
        assert_eq!(weyl_apply(&WeylElement::x(), &r2).coeff(3), 3.into());
        for n in 0..8 {
            for lat in [Lattice::Monomials, Lattice::DividedPowers] {
                let v = PolyVector::basis(lat, n);
                let euler = weyl_apply(&w("x d"), &v);
                assert_eq!(euler.coeff(n), Int::from(n));
            }
        }
    }

    #[test]
    fn pairing() {
        let x2 = PolyVector::basis(Lattice::Monomials, 2);
        assert_eq!(weyl_pairing(&x2, &PolyVector::basis(Lattice::DividedPowers, 2)).unwrap(), 1.into());
        assert_eq!(weyl_pairing(&x2, &PolyVector::basis(Lattice::DividedPowers, 3)).unwrap(), 0.into());
        assert_eq!(weyl_pairing(&x2, &x2), Err(WeylError::LatticeMismatch));
    }

    #[test]
    fn closed_form_matches_rewriting() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        let u = WeylElement::monomial(a, b);
                        let v = WeylElement::monomial(c, d);
                        assert_eq!(weyl_multiply(&u, &v), weyl_multiply_by_rewriting(&u, &v));
                    }
                }
            }
        }
    }
}
