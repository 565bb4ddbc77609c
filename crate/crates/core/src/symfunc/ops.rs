use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::tables::jacobi_trudi;
use super::{BasisTag, SymFunc};
use crate::combinatorics::{partitions_of, Partition};
use crate::scalar::{rat_from_int, Int, Scalar};

/// Product in a multiplicative basis: concatenate partitions.
fn multiply_multiplicative(a: &SymFunc, b: &SymFunc) -> SymFunc {
    debug_assert!(a.basis().is_multiplicative() && a.basis() == b.basis());
    let mut out: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for (p, c) in a.terms() {
        for (q, d) in b.terms() {
            let e = out.entry(p.union(q)).or_insert_with(Scalar::zero);
            *e += c * d;
        }
    }
    SymFunc::from_rational(a.basis(), out)
}

/// `f · g`, returned in the basis of `f`.
pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let work = if f.basis().is_multiplicative() {
        f.basis()
    } else {
        BasisTag::Complete
    };
    let prod = multiply_multiplicative(&f.to_basis(work), &g.to_basis(work));
    prod.to_basis(f.basis())
}

/// An element of `Sym ⊗ Sym`, both legs in the same basis.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub basis: BasisTag,
    pub terms: BTreeMap<(Partition, Partition), Scalar>,
}

impl Coproduct {
    pub fn to_basis(&self, target: BasisTag) -> Coproduct {
        if target == self.basis {
            return self.clone();
        }
        let mut cache: HashMap<Partition, SymFunc> = HashMap::new();
        let mut conv = |p: &Partition| -> SymFunc {
            cache
                .entry(p.clone())
                .or_insert_with(|| SymFunc::basis_element(self.basis, p.clone()).to_basis(target))
                .clone()
        };
        let mut terms: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let (ca, cb) = (conv(a), conv(b));
            for (x, u) in ca.terms() {
                for (y, v) in cb.terms() {
                    let e = terms.entry((x.clone(), y.clone())).or_insert_with(Scalar::zero);
                    *e += c * u * v;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Coproduct {
            basis: target,
            terms,
        }
    }

    /// `⟨a ⊗ b, self⟩ = Σ c ⟨a, x⟩⟨b, y⟩`.
    pub fn pair_with(&self, a: &SymFunc, b: &SymFunc) -> Scalar {
        // pair m-coordinates of self against h-coordinates of a and b
        let m = self.to_basis(BasisTag::Monomial);
        let (ah, bh) = (a.to_basis(BasisTag::Complete), b.to_basis(BasisTag::Complete));
        m.terms
            .iter()
            .map(|((x, y), c)| c * ah.coeff(x) * bh.coeff(y))
            .sum()
    }

    /// Applies `f ⊗ g ↦ φ(f)·ψ(g)` and sums, i.e. `∇ ∘ (φ ⊗ ψ)`.
    pub fn contract(&self, left: impl Fn(&SymFunc) -> SymFunc, right: impl Fn(&SymFunc) -> SymFunc) -> SymFunc {
        let mut acc = SymFunc::zero(self.basis);
        for ((a, b), c) in &self.terms {
            let l = left(&SymFunc::basis_element(self.basis, a.clone()));
            let r = right(&SymFunc::basis_element(self.basis, b.clone()));
            acc = acc.add(&multiply(&l, &r).scale(c));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl PartialEq for Coproduct {
    fn eq(&self, other: &Self) -> bool {
        self.to_basis(BasisTag::Monomial).terms == other.to_basis(BasisTag::Monomial).terms
    }
}

/// `Δ(f)`, computed by writing `f` in the complete basis and using that
/// `Δ` is multiplicative with `Δ(h_n) = Σ h_i ⊗ h_{n-i}`.
pub fn coproduct(f: &SymFunc) -> Coproduct {
    let fh = f.to_basis(BasisTag::Complete);
    let mut terms: BTreeMap<(Partition, Partition), Scalar> = BTreeMap::new();
    for (lam, c) in fh.terms() {
        let mut acc: BTreeMap<(Vec<usize>, Vec<usize>), Int> =
            BTreeMap::from([((Vec::new(), Vec::new()), Int::one())]);
        for &k in lam.parts() {
            let mut next = BTreeMap::new();
            for ((l, r), v) in &acc {
                for i in 0..=k {
                    let mut l2 = l.clone();
                    let mut r2 = r.clone();
                    l2.push(i);
                    r2.push(k - i);
                    let e = next.entry((l2, r2)).or_insert_with(Int::zero);
                    *e += v;
                }
            }
            acc = next;
        }
        for ((l, r), v) in acc {
            let key = (Partition::from_parts(l), Partition::from_parts(r));
            let e = terms.entry(key).or_insert_with(Scalar::zero);
            *e += c * rat_from_int(v);
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Coproduct {
        basis: BasisTag::Complete,
        terms,
    }
    .to_basis(f.basis())
}

/// The degree-zero coefficient.
pub fn counit(f: &SymFunc) -> Scalar {
    f.coeff(&Partition::empty())
}

/// `S(h_n)` for `n = 0..=max`, in the complete basis, by
/// `S(h_n) = -h_n - Σ_{0<i<n} S(h_i) h_{n-i}`.
fn antipode_generators(max: usize) -> Vec<SymFunc> {
    let mut out = vec![SymFunc::one(BasisTag::Complete)];
    for n in 1..=max {
        let mut s = SymFunc::h(&[n]).neg();
        for i in 1..n {
            s = s.sub(&multiply_multiplicative(&out[i], &SymFunc::h(&[n - i])));
        }
        out.push(s);
    }
    out
}

/// The antipode, an algebra map determined by its values on `h_n`.
pub fn antipode(f: &SymFunc) -> SymFunc {
    let fh = f.to_basis(BasisTag::Complete);
    let gens = antipode_generators(fh.degree());
    let mut acc = SymFunc::zero(BasisTag::Complete);
    for (lam, c) in fh.terms() {
        let img = lam
            .parts()
            .iter()
            .fold(SymFunc::one(BasisTag::Complete), |a, &k| multiply_multiplicative(&a, &gens[k]));
        acc = acc.add(&img.scale(c));
    }
    acc.to_basis(f.basis())
}

/// Hall inner product, `⟨m_λ, h_μ⟩ = δ_{λμ}`.
pub fn hall_pairing(f: &SymFunc, g: &SymFunc) -> Scalar {
    let fm = f.to_basis(BasisTag::Monomial);
    let gh = g.to_basis(BasisTag::Complete);
    fm.terms().iter().map(|(p, c)| c * gh.coeff(p)).sum()
}

/// `s_λ` in the complete basis, from the Jacobi–Trudi determinant.
pub fn schur(lam: &Partition) -> SymFunc {
    SymFunc::from_rational(
        BasisTag::Complete,
        jacobi_trudi(lam).into_iter().map(|(p, c)| (p, rat_from_int(c))).collect(),
    )
}

/// Littlewood–Richardson coefficients `c^ν_{λμ}` with nonzero value.
pub fn lr_coefficients(lam: &Partition, mu: &Partition) -> BTreeMap<Partition, Int> {
    let prod = multiply(
        &SymFunc::basis_element(BasisTag::Schur, lam.clone()),
        &SymFunc::basis_element(BasisTag::Schur, mu.clone()),
    );
    prod.terms()
        .iter()
        .map(|(p, c)| {
            debug_assert!(c.is_integer());
            (p.clone(), c.to_integer())
        })
        .collect()
}

/// `f*(g)`, the adjoint of multiplication by `f` under the Hall pairing,
/// returned in the basis of `g`.
///
/// The monomial coefficient of `f*(g)` at `ν` is `⟨f·h_ν, g⟩`.
pub fn dual_apply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let fh = f.to_basis(BasisTag::Complete);
    let gm = g.to_basis(BasisTag::Monomial);
    let mut out: BTreeMap<Partition, Scalar> = BTreeMap::new();
    for d in gm.degrees() {
        for (alpha, c) in fh.terms() {
            let Some(rest) = d.checked_sub(alpha.size()) else {
                continue;
            };
            for nu in partitions_of(rest) {
                let v = gm.coeff(&alpha.union(&nu));
                if v.is_zero() {
                    continue;
                }
                let e = out.entry(nu).or_insert_with(Scalar::zero);
                *e += c * v;
            }
        }
    }
    SymFunc::from_rational(BasisTag::Monomial, out).to_basis(g.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn unit_and_h_products() {
        let f = SymFunc::s(&[2, 1]);
        assert_eq!(multiply(&f, &SymFunc::one(BasisTag::Schur)), f);
        let prod = multiply(&SymFunc::h(&[2]), &SymFunc::h(&[1]));
        assert_eq!(prod.basis(), BasisTag::Complete);
        assert_eq!(prod.terms(), SymFunc::h(&[2, 1]).terms());
    }

    #[test]
    fn coproduct_of_generators() {
        let d = coproduct(&SymFunc::e(&[2]));
        assert_eq!(d.basis, BasisTag::Elementary);
        let want: BTreeMap<_, _> = [(p(&[2]), p(&[])), (p(&[1]), p(&[1])), (p(&[]), p(&[2]))]
            .into_iter()
            .map(|k| (k, rat(1, 1)))
            .collect();
        assert_eq!(d.terms, want);
        let one = coproduct(&SymFunc::one(BasisTag::Schur));
        assert_eq!(one.terms.len(), 1);
    }

    #[test]
    fn antipode_on_generators() {
        assert_eq!(antipode(&SymFunc::e(&[1])), SymFunc::e(&[1]).neg());
        for n in 0..=6usize {
            let want = SymFunc::h(&[n]).scale(&rat(crate::scalar::sign(n), 1));
            assert_eq!(antipode(&SymFunc::e(&[n])), want, "n = {n}");
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur(&p(&[3])).terms(), SymFunc::h(&[3]).terms());
        let s11 = schur(&p(&[1, 1]));
        assert_eq!(s11, SymFunc::h(&[1, 1]).sub(&SymFunc::h(&[2])));
        assert_eq!(s11, SymFunc::e(&[2]));
    }

    #[test]
    fn dual_apply_examples() {
        let g = SymFunc::s(&[2, 1]);
        assert_eq!(dual_apply(&SymFunc::one(BasisTag::Complete), &g), g);
        assert_eq!(dual_apply(&SymFunc::h(&[1]), &SymFunc::s(&[1])), SymFunc::one(BasisTag::Schur));
        assert!(dual_apply(&SymFunc::h(&[4]), &g).is_zero());
    }
}
