//! Irreducible characters of small symmetric groups, built from the
//! permutation modules on tabloids, and induced-character multiplicities.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::{BimodError, BimodResult};
use crate::combinatorics::{partitions_of, Partition, Permutation};
use crate::scalar::{is_integral, Int, Scalar};

/// Default largest `|λ| + |μ|` for induced decompositions.
pub const CHARACTER_BOUND: usize = 7;

type ClassFunction = BTreeMap<Partition, Scalar>;

/// A permutation whose cycles have the lengths of `rho`, on consecutive points.
fn class_representative(rho: &Partition) -> Permutation {
    let mut line = Vec::with_capacity(rho.size());
    let mut start = 1;
    for &len in rho.parts() {
        line.extend(start + 1..start + len);
        line.push(start);
        start += len;
    }
    Permutation::new(line).expect("cycles on consecutive points")
}

/// Row labels of every tabloid of shape `lam`: entry `x` is the row holding `x + 1`.
fn tabloids(lam: &Partition) -> Vec<Vec<usize>> {
    fn go(left: &mut Vec<usize>, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, n: usize) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for row in 0..left.len() {
            if left[row] > 0 {
                left[row] -= 1;
                current.push(row);
                go(left, current, out, n);
                current.pop();
                left[row] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut lam.parts().to_vec(), &mut Vec::new(), &mut out, lam.size());
    out
}

/// Character of the permutation module `M^λ`: the number of tabloids fixed
/// by a permutation of each cycle type.
pub fn permutation_character(lam: &Partition) -> BTreeMap<Partition, Int> {
    let tabs = tabloids(lam);
    partitions_of(lam.size())
        .into_iter()
        .map(|rho| {
            let g = class_representative(&rho);
            let fixed = tabs
                .iter()
                .filter(|t| (0..t.len()).all(|x| t[g.apply(x + 1) - 1] == t[x]))
                .count();
            (rho, Int::from(fixed))
        })
        .collect()
}

fn inner(a: &ClassFunction, b: &ClassFunction) -> Scalar {
    a.iter()
        .map(|(rho, x)| x * &b[rho] / Scalar::from_integer(Int::from(rho.z())))
        .fold(Scalar::zero(), |acc, v| acc + v)
}

type CharacterTable = Arc<Vec<(Partition, ClassFunction)>>;

fn cache() -> &'static Mutex<HashMap<usize, CharacterTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, CharacterTable>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Irreducible characters of `S_n`. `M^λ` contains `χ^λ` once and
/// otherwise only `χ^μ` with `μ` dominating `λ`, so subtracting the
/// projections onto earlier characters (in reverse-lexicographic order)
/// leaves `χ^λ`.
fn irreducible_characters(n: usize) -> CharacterTable {
    if let Some(c) = cache().lock().expect("character cache poisoned").get(&n) {
        return Arc::clone(c);
    }
    let mut chars: Vec<(Partition, ClassFunction)> = Vec::new();
    for lam in partitions_of(n) {
        let mut chi: ClassFunction = permutation_character(&lam)
            .into_iter()
            .map(|(rho, v)| (rho, Scalar::from_integer(v)))
            .collect();
        for (_, earlier) in &chars {
            let k = inner(&chi, earlier);
            for (rho, v) in chi.iter_mut() {
                *v -= &k * &earlier[rho];
            }
        }
        chars.push((lam, chi));
    }
    let chars = Arc::new(chars);
    cache().lock().expect("character cache poisoned").insert(n, Arc::clone(&chars));
    chars
}

/// `χ^λ` on each conjugacy class, indexed by cycle type.
pub fn irreducible_character(lam: &Partition) -> BTreeMap<Partition, Int> {
    irreducible_characters(lam.size())
        .iter()
        .find(|(mu, _)| mu == lam)
        .expect("every partition has a character")
        .1
        .iter()
        .map(|(rho, v)| (rho.clone(), v.to_integer()))
        .collect()
}

/// Multiplicities of the simple modules in `Ind(S^λ ⊗ S^μ)`, with
/// `|λ| + |μ| ≤ 7`.
pub fn induced_character_decomposition(lam: &Partition, mu: &Partition) -> BimodResult<BTreeMap<Partition, Int>> {
    induced_character_decomposition_with_bound(lam, mu, CHARACTER_BOUND)
}

pub fn induced_character_decomposition_with_bound(
    lam: &Partition,
    mu: &Partition,
    bound: usize,
) -> BimodResult<BTreeMap<Partition, Int>> {
    let (m, n) = (lam.size(), mu.size());
    if m + n > bound {
        return Err(BimodError::BoundExceeded { size: m + n, bound });
    }
    let char_of = |p: &Partition| -> ClassFunction {
        irreducible_characters(p.size())
            .iter()
            .find(|(q, _)| q == p)
            .expect("character exists")
            .1
            .clone()
    };
    let (chi_l, chi_m) = (char_of(lam), char_of(mu));
    // Ind(χ)(ν) = Σ_{α ∪ β = ν} z_ν / (z_α z_β) χ^λ(α) χ^μ(β)
    let mut induced: ClassFunction = partitions_of(m + n).into_iter().map(|nu| (nu, Scalar::zero())).collect();
    for (alpha, x) in &chi_l {
        for (beta, y) in &chi_m {
            let nu = alpha.union(beta);
            let w = Scalar::new(Int::from(nu.z()), Int::from(alpha.z()) * Int::from(beta.z()));
            *induced.get_mut(&nu).expect("class of S_{m+n}") += w * x * y;
        }
    }
    let mut out = BTreeMap::new();
    for (nu, chi) in irreducible_characters(m + n).iter() {
        let mult = inner(&induced, chi);
        assert!(is_integral(&mult), "multiplicities are integers");
        if !mult.is_zero() {
            out.insert(nu.clone(), mult.to_integer());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_character_tables() {
        // χ^{(2,1)} = (2, 0, -1) on classes (1,1,1), (2,1), (3)
        let chi = irreducible_character(&p(&[2, 1]));
        assert_eq!(chi[&p(&[1, 1, 1])], Int::from(2));
        assert_eq!(chi[&p(&[2, 1])], Int::zero());
        assert_eq!(chi[&p(&[3])], Int::from(-1));
        let sign = irreducible_character(&p(&[1, 1, 1]));
        assert_eq!(sign[&p(&[2, 1])], Int::from(-1));
    }

    #[test]
    fn orthonormal() {
        for n in 1..=6 {
            let chars = irreducible_characters(n);
            for (a, x) in chars.iter() {
                for (b, y) in chars.iter() {
                    let expected = if a == b { Scalar::one() } else { Scalar::zero() };
                    assert_eq!(inner(x, y), expected);
                }
            }
        }
    }

    #[test]
    fn induced_examples() {
        let got = induced_character_decomposition(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(got, BTreeMap::from([(p(&[2]), Int::one()), (p(&[1, 1]), Int::one())]));
        let got = induced_character_decomposition(&Partition::empty(), &p(&[2, 1])).unwrap();
        assert_eq!(got, BTreeMap::from([(p(&[2, 1]), Int::one())]));
        assert!(induced_character_decomposition(&p(&[4]), &p(&[4])).is_err());
    }
}
