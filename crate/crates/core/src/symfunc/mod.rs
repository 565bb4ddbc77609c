//! The ring of symmetric functions in the monomial, elementary, complete,
//! power-sum and Schur bases, with its Hopf structure and Hall inner product.

mod ops;
mod poly;
mod tables;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combinatorics::Partition;
use crate::scalar::{is_integral, Scalar};

pub use ops::{
    antipode, coproduct, counit, dual_apply, hall_pairing, lr_coefficients, multiply, schur,
    Coproduct,
};
pub use poly::{monomial_expand, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("coefficient of {partition} in the {basis} basis is not an integer")]
    NonIntegralResult { basis: BasisTag, partition: Partition },
    #[error("{nvars} variables cannot faithfully represent an element of degree {degree}")]
    InsufficientVariables { nvars: usize, degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type SymResult<T> = Result<T, SymError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTag {
    Monomial,
    Elementary,
    Complete,
    Powersum,
    Schur,
}

impl BasisTag {
    pub const ALL: [BasisTag; 5] = [
        BasisTag::Monomial,
        BasisTag::Elementary,
        BasisTag::Complete,
        BasisTag::Powersum,
        BasisTag::Schur,
    ];

    /// The four bases that span the integral form of Sym.
    pub const INTEGRAL: [BasisTag; 4] = [
        BasisTag::Monomial,
        BasisTag::Elementary,
        BasisTag::Complete,
        BasisTag::Schur,
    ];

    pub(crate) fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            BasisTag::Monomial => 'm',
            BasisTag::Elementary => 'e',
            BasisTag::Complete => 'h',
            BasisTag::Powersum => 'p',
            BasisTag::Schur => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<BasisTag> {
        BasisTag::ALL.into_iter().find(|b| b.letter() == c)
    }

    pub fn is_integral(self) -> bool {
        self != BasisTag::Powersum
    }

    /// Bases in which `b_λ b_μ = b_{λ ∪ μ}`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, BasisTag::Elementary | BasisTag::Complete | BasisTag::Powersum)
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BasisTag::Monomial => "monomial",
            BasisTag::Elementary => "elementary",
            BasisTag::Complete => "complete",
            BasisTag::Powersum => "powersum",
            BasisTag::Schur => "schur",
        };
        f.write_str(name)
    }
}

impl FromStr for BasisTag {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if let Some(b) = BasisTag::from_letter(c) {
                return Ok(b);
            }
        }
        BasisTag::ALL
            .into_iter()
            .find(|b| b.to_string() == s)
            .ok_or_else(|| SymError::Parse(format!("unknown basis {s:?}")))
    }
}

/// A finite linear combination of basis elements of one basis.
///
/// Equality compares the underlying elements of Sym, so `e[2]` equals
/// `m[1,1]`.
#[derive(Clone)]
pub struct SymFunc {
    basis: BasisTag,
    coeffs: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    /// Builds a combination, pruning zeros and enforcing integrality outside
    /// the power-sum basis.
    pub fn new(basis: BasisTag, coeffs: BTreeMap<Partition, Scalar>) -> SymResult<Self> {
        let f = SymFunc::from_rational(basis, coeffs);
        f.check_integral()?;
        Ok(f)
    }

    /// Like [`SymFunc::new`] without the integrality check.
    pub fn from_rational(basis: BasisTag, mut coeffs: BTreeMap<Partition, Scalar>) -> Self {
        coeffs.retain(|_, c| !c.is_zero());
        SymFunc { basis, coeffs }
    }

    pub fn zero(basis: BasisTag) -> Self {
        SymFunc {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(basis: BasisTag) -> Self {
        SymFunc::basis_element(basis, Partition::empty())
    }

    pub fn scalar(basis: BasisTag, c: Scalar) -> Self {
        SymFunc::from_rational(basis, BTreeMap::from([(Partition::empty(), c)]))
    }

    pub fn basis_element(basis: BasisTag, lam: Partition) -> Self {
        SymFunc {
            basis,
            coeffs: BTreeMap::from([(lam, Scalar::one())]),
        }
    }

    /// Shorthand for `basis_element` from a slice of parts (sorted for you).
    pub fn elem(basis: BasisTag, parts: &[usize]) -> Self {
        SymFunc::basis_element(basis, Partition::from_parts(parts.iter().copied()))
    }

    pub fn m(parts: &[usize]) -> Self {
        SymFunc::elem(BasisTag::Monomial, parts)
    }

    pub fn e(parts: &[usize]) -> Self {
        SymFunc::elem(BasisTag::Elementary, parts)
    }

    pub fn h(parts: &[usize]) -> Self {
        SymFunc::elem(BasisTag::Complete, parts)
    }

    pub fn p(parts: &[usize]) -> Self {
        SymFunc::elem(BasisTag::Powersum, parts)
    }

    pub fn s(parts: &[usize]) -> Self {
        SymFunc::elem(BasisTag::Schur, parts)
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, lam: &Partition) -> Scalar {
        self.coeffs.get(lam).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest size of a partition with nonzero coefficient (0 for zero).
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.coeffs.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.size() == d)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees carrying at least one nonzero coefficient.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(is_integral)
    }

    fn check_integral(&self) -> SymResult<()> {
        if !self.basis.is_integral() {
            return Ok(());
        }
        match self.coeffs.iter().find(|(_, c)| !is_integral(c)) {
            Some((p, _)) => Err(SymError::NonIntegralResult {
                basis: self.basis,
                partition: p.clone(),
            }),
            None => Ok(()),
        }
    }

    /// Re-expresses `self` in `target`, failing if `target` is integral and
    /// a resulting coefficient is not an integer.
    pub fn convert(&self, target: BasisTag) -> SymResult<SymFunc> {
        let out = self.to_basis(target);
        out.check_integral()?;
        Ok(out)
    }

    /// Conversion over the rationals, without the integrality check.
    pub fn to_basis(&self, target: BasisTag) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let mut coeffs = BTreeMap::new();
        let mut by_degree: BTreeMap<usize, BTreeMap<&Partition, &Scalar>> = BTreeMap::new();
        for (p, c) in &self.coeffs {
            by_degree.entry(p.size()).or_default().insert(p, c);
        }
        for (d, part) in by_degree {
            let t = tables::tables(d);
            let m = t.transition(self.basis, target);
            coeffs.extend(tables::apply_sparse(&t, m, &part));
        }
        SymFunc {
            basis: target,
            coeffs,
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut coeffs = self.coeffs.clone();
        for (p, c) in other.to_basis(self.basis).coeffs {
            let e = coeffs.entry(p).or_insert_with(Scalar::zero);
            *e += c;
        }
        SymFunc::from_rational(self.basis, coeffs)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> SymFunc {
        SymFunc::from_rational(
            self.basis,
            self.coeffs.iter().map(|(p, c)| (p.clone(), c * k)).collect(),
        )
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Scalar::one())
    }

    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        multiply(self, other)
    }

    /// Sum of scaled basis elements; all terms are converted into `basis`.
    pub fn sum<I: IntoIterator<Item = SymFunc>>(basis: BasisTag, items: I) -> SymFunc {
        items
            .into_iter()
            .fold(SymFunc::zero(basis), |acc, f| acc.add(&f))
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.coeffs == other.coeffs
        } else {
            self.to_basis(BasisTag::Monomial).coeffs == other.to_basis(BasisTag::Monomial).coeffs
        }
    }
}

impl Eq for SymFunc {}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::render(self))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SymFunc {
    type Err = SymError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        text::parse(s)
    }
}

pub use text::{from_json, to_json, to_monomial_text};
