//! Rational group algebras `A_n = Q[S_n]`, the induction and restriction
//! bimodules between them, and the image of diagrams as bimodule maps.

mod characters;
mod maps;
mod tensor;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::Permutation;
use crate::linalg::{sparse_rank, SparseRow};
use crate::scalar::{factorial, fmt_scalar, rat_from_int, Scalar};

pub use characters::{
    induced_character_decomposition, induced_character_decomposition_with_bound, irreducible_character,
    permutation_character, CHARACTER_BOUND,
};
pub use maps::{diagram_to_map, mackey_check, trace, verify_local_relation, LinearMapRep, LocalRelation};
pub use tensor::{tensor_basis, BimoduleElem, BimodulePath, TensorBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BimodError {
    #[error("rank mismatch: A_{left} and A_{right}")]
    RankMismatch { left: usize, right: usize },
    #[error("levels {0:?} do not form a path with unit steps")]
    InvalidPath(Vec<i64>),
    #[error("signature {signature} passes through a negative rank at base rank {rank}")]
    UnrealizableAtRank { signature: String, rank: usize },
    #[error("size {size} exceeds the configured bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("maps do not compose: {0}")]
    DomainMismatch(String),
}

pub type BimodResult<T> = Result<T, BimodError>;

/// An element of `Q[S_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgElem {
    n: usize,
    coeffs: BTreeMap<Permutation, Scalar>,
}

impl GroupAlgElem {
    pub fn zero(n: usize) -> Self {
        GroupAlgElem {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        GroupAlgElem::basis(Permutation::identity(n))
    }

    pub fn basis(sigma: Permutation) -> Self {
        GroupAlgElem {
            n: sigma.rank(),
            coeffs: BTreeMap::from([(sigma, Scalar::one())]),
        }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Permutation, Scalar)>) -> BimodResult<Self> {
        let mut out = GroupAlgElem::zero(n);
        for (sigma, c) in terms {
            if sigma.rank() > n {
                return Err(BimodError::RankMismatch {
                    left: n,
                    right: sigma.rank(),
                });
            }
            out.add_term(sigma.extend(n), c);
        }
        Ok(out)
    }

    /// `s_i`, swapping `i` and `i + 1`.
    pub fn simple(i: usize, n: usize) -> Self {
        GroupAlgElem::basis(Permutation::transposition(i, i + 1, n))
    }

    /// `e(n) = (1/n!) Σ σ`.
    pub fn symmetrizer(n: usize) -> Self {
        let w = rat_from_int(factorial(n)).recip();
        GroupAlgElem {
            n,
            coeffs: Permutation::all(n).map(|s| (s, w.clone())).collect(),
        }
    }

    /// `e′(n) = (1/n!) Σ (−1)^{ℓ(σ)} σ`.
    pub fn antisymmetrizer(n: usize) -> Self {
        let w = rat_from_int(factorial(n)).recip();
        GroupAlgElem {
            n,
            coeffs: Permutation::all(n)
                .map(|s| {
                    let c = if s.sign() < 0 { -w.clone() } else { w.clone() };
                    (s, c)
                })
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Scalar> {
        &self.coeffs
    }

    pub fn coeff(&self, sigma: &Permutation) -> Scalar {
        self.coeffs.get(sigma).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, sigma: Permutation, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(sigma.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&sigma);
        }
    }

    fn check_rank(&self, other: &GroupAlgElem) -> BimodResult<()> {
        if self.n != other.n {
            return Err(BimodError::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupAlgElem) -> BimodResult<GroupAlgElem> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (s, c) in &other.coeffs {
            out.add_term(s.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GroupAlgElem) -> BimodResult<GroupAlgElem> {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> GroupAlgElem {
        let mut out = GroupAlgElem::zero(self.n);
        for (s, c) in &self.coeffs {
            out.add_term(s.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &GroupAlgElem) -> BimodResult<GroupAlgElem> {
        ga_product(self, other)
    }
}

/// Linear extension of `(σ, τ) ↦ σ ∘ τ`.
pub fn ga_product(a: &GroupAlgElem, b: &GroupAlgElem) -> BimodResult<GroupAlgElem> {
    a.check_rank(b)?;
    let mut out = GroupAlgElem::zero(a.n);
    for ((s, c), (t, d)) in a.coeffs.iter().cartesian_product(&b.coeffs) {
        out.add_term(s.compose(t), c * d);
    }
    Ok(out)
}

/// Rank of `x ↦ x·e` on `A_n`, i.e. `dim A_n e`.
pub fn right_multiplication_rank(e: &GroupAlgElem) -> usize {
    let rows: Vec<SparseRow> = Permutation::all(e.n)
        .map(|x| {
            let image = ga_product(&GroupAlgElem::basis(x), e).expect("same rank");
            image
                .coeffs
                .iter()
                .map(|(s, c)| (tensor::perm_rank(s), c.clone()))
                .collect()
        })
        .collect();
    sparse_rank(rows)
}

impl fmt::Display for GroupAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts = self.coeffs.iter().map(|(s, c)| {
            if c.is_one() {
                s.to_string()
            } else {
                format!("{} {s}", fmt_scalar(c))
            }
        });
        write!(f, "{}", parts.format(" + "))
    }
}

impl fmt::Debug for GroupAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A_{}: {self}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn small_products() {
        let s1 = GroupAlgElem::simple(1, 2);
        assert_eq!(ga_product(&s1, &s1).unwrap(), GroupAlgElem::one(2));
        let e = GroupAlgElem::symmetrizer(2);
        let ep = GroupAlgElem::antisymmetrizer(2);
        assert_eq!(ga_product(&e, &e).unwrap(), e);
        assert!(ga_product(&e, &ep).unwrap().is_zero());
        assert_eq!(ep.coeff(&Permutation::identity(2)), rat(1, 2));
        assert!(ga_product(&s1, &GroupAlgElem::one(3)).is_err());
    }
}
