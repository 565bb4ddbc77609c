use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{BasisTag, SymError, SymFunc, SymResult};
use crate::scalar::{fmt_scalar, Scalar};

/// A polynomial in `x_1 .. x_nvars` with exact coefficients, keyed by
/// exponent vectors of length `nvars`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector has the wrong length");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, exponent: &[usize]) -> Scalar {
        self.terms.get(exponent).cloned().unwrap_or_else(Scalar::zero)
    }

    fn add_term(&mut self, e: Vec<usize>, c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Scalar::zero) += c * d;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial {
            nvars: self.nvars,
            terms: acc,
        }
    }

    /// The coefficient of `x^exponent` in `self · other`, without forming
    /// the whole product.
    pub fn product_coeff(&self, other: &Polynomial, exponent: &[usize]) -> Scalar {
        let mut total = Scalar::zero();
        for (a, c) in &self.terms {
            if a.iter().zip(exponent).any(|(x, y)| x > y) {
                continue;
            }
            let b: Vec<usize> = exponent.iter().zip(a).map(|(y, x)| y - x).collect();
            if let Some(d) = other.terms.get(&b) {
                total += c * d;
            }
        }
        total
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{}", fmt_scalar(c))?;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, " x{}", i + 1)?,
                    _ => write!(f, " x{}^{k}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// The image of `f` in `Q[x_1 .. x_nvars]`.
///
/// Fails when some monomial term of `f` has more than `nvars` parts, since
/// that term would vanish. `nvars ≥ deg f` always suffices.
pub fn monomial_expand(f: &SymFunc, nvars: usize) -> SymResult<Polynomial> {
    let fm = f.to_basis(BasisTag::Monomial);
    if fm.terms().keys().any(|lam| lam.len() > nvars) {
        return Err(SymError::InsufficientVariables {
            nvars,
            degree: f.degree(),
        });
    }
    let mut terms = BTreeMap::new();
    for (lam, c) in fm.terms() {
        for e in lam.rearrangements(nvars) {
            terms.insert(e, c.clone());
        }
    }
    Ok(Polynomial { nvars, terms })
}
