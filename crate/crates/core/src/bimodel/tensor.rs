//! Composite bimodules `B_1 ⊗ ⋯ ⊗ B_k ⊗ A_{n_0}` and their coset bases.
//!
//! Strands are listed left to right as in a signature; the region right of
//! the last strand has rank `n_0`. An up strand between ranks `r + 1` and
//! `r` contributes `A_{r+1}`, a down strand between `r` and `r + 1`
//! contributes `A_{r+1}`. A basis vector is one minimal left coset
//! representative per strand (the identity for down strands) followed by
//! an element of `S_{n_0}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{BimodError, BimodResult};
use crate::combinatorics::{coset_decompose, coset_rep, Permutation};
use crate::diagcat::{Orientation, Signature};
use crate::scalar::{factorial_usize, Scalar};

/// Ranks `n_0, n_1, …, n_k` of the regions, from the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BimodulePath {
    levels: Vec<usize>,
}

impl BimodulePath {
    pub fn new(levels: Vec<usize>) -> BimodResult<Self> {
        let ok = !levels.is_empty() && levels.windows(2).all(|w| w[0].abs_diff(w[1]) == 1);
        if !ok {
            return Err(BimodError::InvalidPath(levels.iter().map(|&l| l as i64).collect()));
        }
        Ok(BimodulePath { levels })
    }

    /// The path of a signature over base rank `n0`.
    pub fn from_signature(sig: &Signature, n0: usize) -> BimodResult<Self> {
        let mut levels = vec![n0];
        let mut r = n0 as i64;
        for o in sig.symbols().iter().rev() {
            r += if *o == Orientation::Up { 1 } else { -1 };
            if r < 0 {
                return Err(BimodError::UnrealizableAtRank {
                    signature: sig.to_string(),
                    rank: n0,
                });
            }
            levels.push(r as usize);
        }
        Ok(BimodulePath { levels })
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn base_rank(&self) -> usize {
        self.levels[0]
    }

    pub fn top_rank(&self) -> usize {
        *self.levels.last().expect("nonempty")
    }

    pub fn signature(&self) -> Signature {
        Signature(
            self.levels
                .windows(2)
                .rev()
                .map(|w| if w[1] > w[0] { Orientation::Up } else { Orientation::Down })
                .collect(),
        )
    }

    /// Region ranks left to right.
    pub(crate) fn regions(&self) -> Vec<usize> {
        self.levels.iter().rev().copied().collect()
    }
}

/// The coset basis of a composite bimodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorBasis {
    path: BimodulePath,
    up: Vec<bool>,
    regions: Vec<usize>,
    radices: Vec<usize>,
    base_size: usize,
}

pub fn tensor_basis(path: &BimodulePath) -> TensorBasis {
    let regions = path.regions();
    let up: Vec<bool> = regions.windows(2).map(|w| w[0] > w[1]).collect();
    let radices = regions
        .windows(2)
        .map(|w| if w[0] > w[1] { w[0] } else { 1 })
        .collect();
    TensorBasis {
        path: path.clone(),
        up,
        base_size: factorial_usize(path.base_rank()),
        regions,
        radices,
    }
}

impl TensorBasis {
    pub fn path(&self) -> &BimodulePath {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.radices.iter().product::<usize>() * self.base_size
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn strands(&self) -> usize {
        self.up.len()
    }

    pub(crate) fn regions(&self) -> &[usize] {
        &self.regions
    }

    pub(crate) fn is_up(&self, p: usize) -> bool {
        self.up[p]
    }

    /// Rank of the symmetric group of tensor factor `p`; the last factor is
    /// `A_{n_0}`.
    pub(crate) fn factor_rank(&self, p: usize) -> usize {
        if p == self.up.len() {
            self.path.base_rank()
        } else {
            self.regions[p].max(self.regions[p + 1])
        }
    }

    /// Group elements, one per tensor factor, of basis vector `index`.
    pub fn element(&self, index: usize) -> Vec<Permutation> {
        let mut rest = index / self.base_size;
        let mut out = vec![perm_unrank(index % self.base_size, self.path.base_rank())];
        for p in (0..self.up.len()).rev() {
            let digit = rest % self.radices[p];
            rest /= self.radices[p];
            out.push(if self.up[p] {
                coset_rep(digit + 1, self.regions[p])
            } else {
                Permutation::identity(self.factor_rank(p))
            });
        }
        out.reverse();
        out
    }

    /// Index of the basis vector equal to the pure tensor `factors`,
    /// pushing subalgebra parts rightwards across each `⊗`.
    pub fn index_of(&self, factors: &[Permutation]) -> usize {
        assert_eq!(factors.len(), self.up.len() + 1, "one group element per tensor factor");
        let mut carry = Permutation::identity(0);
        let mut index = 0;
        for (p, a) in factors[..self.up.len()].iter().enumerate() {
            let a = carry.compose(a).extend(self.factor_rank(p));
            debug_assert_eq!(a.rank(), self.factor_rank(p));
            let digit = if self.up[p] {
                let (i, rest) = coset_decompose(&a);
                carry = rest;
                i - 1
            } else {
                carry = a;
                0
            };
            index = index * self.radices[p] + digit;
        }
        let g = carry.compose(&factors[self.up.len()]).extend(self.path.base_rank());
        debug_assert_eq!(g.rank(), self.path.base_rank());
        index * self.base_size + perm_rank(&g)
    }
}

/// Lexicographic rank of a permutation among all of its rank.
pub(crate) fn perm_rank(p: &Permutation) -> usize {
    let line = p.one_line();
    let n = line.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = line[i + 1..].iter().filter(|&&v| v < line[i]).count();
        rank += smaller * factorial_usize(n - 1 - i);
    }
    rank
}

pub(crate) fn perm_unrank(mut rank: usize, n: usize) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut line = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial_usize(i);
        line.push(pool.remove(rank / f));
        rank %= f;
    }
    Permutation::new(line).expect("unranking yields a permutation")
}

/// An element of a composite bimodule in its coset basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleElem {
    basis: TensorBasis,
    coeffs: BTreeMap<usize, Scalar>,
}

impl BimoduleElem {
    pub fn zero(path: &BimodulePath) -> Self {
        BimoduleElem {
            basis: tensor_basis(path),
            coeffs: BTreeMap::new(),
        }
    }

    /// The pure tensor `a_1 ⊗ ⋯ ⊗ a_k ⊗ g`.
    pub fn pure(path: &BimodulePath, factors: &[Permutation]) -> Self {
        let basis = tensor_basis(path);
        let coeffs = BTreeMap::from([(basis.index_of(factors), Scalar::one())]);
        BimoduleElem { basis, coeffs }
    }

    pub fn basis(&self) -> &TensorBasis {
        &self.basis
    }

    pub fn terms(&self) -> &BTreeMap<usize, Scalar> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &BimoduleElem) -> BimodResult<BimoduleElem> {
        if self.basis != other.basis {
            return Err(BimodError::DomainMismatch("elements of different bimodules".into()));
        }
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            let e = out.coeffs.entry(*i).or_insert_with(Scalar::zero);
            *e += c;
            if e.is_zero() {
                out.coeffs.remove(i);
            }
        }
        Ok(out)
    }

    fn map_pure(&self, f: impl Fn(&mut Vec<Permutation>)) -> BimoduleElem {
        let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, c) in &self.coeffs {
            let mut factors = self.basis.element(*i);
            f(&mut factors);
            *coeffs.entry(self.basis.index_of(&factors)).or_insert_with(Scalar::zero) += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        BimoduleElem {
            basis: self.basis.clone(),
            coeffs,
        }
    }

    /// `g · x` for `g` in the symmetric group of the leftmost region.
    pub fn left_act(&self, g: &Permutation) -> BimodResult<BimoduleElem> {
        let top = self.basis.path.top_rank();
        if g.rank() > top {
            return Err(BimodError::RankMismatch { left: g.rank(), right: top });
        }
        Ok(self.map_pure(|f| f[0] = g.compose(&f[0])))
    }

    /// `x · g` for `g` in `S_{n_0}`.
    pub fn right_act(&self, g: &Permutation) -> BimodResult<BimoduleElem> {
        let base = self.basis.path.base_rank();
        if g.rank() > base {
            return Err(BimodError::RankMismatch { left: g.rank(), right: base });
        }
        Ok(self.map_pure(|f| {
            let last = f.len() - 1;
            f[last] = f[last].compose(g);
        }))
    }
}
