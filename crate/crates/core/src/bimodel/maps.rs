//! Bimodule maps assigned to slices, and the local relations checked as
//! matrix identities.
//!
//! | slice | below → above | map |
//! |-------|---------------|-----|
//! | crossing | `UU → UU` | right multiplication by `(r+1, r+2)` |
//! | crossing | `DD → DD` | left multiplication by `(r-1, r)` |
//! | crossing | `UD → DU` | `a ⊗ b ↦ a (r, r+1) b` |
//! | crossing | `DU → UD` | `a (r, r+1) b ↦ a ⊗ b`, and `A_r ↦ 0` |
//! | ccw cup | `∅ → DU` | inclusion `A_q → A_{q+1}` |
//! | ccw cap | `DU → ∅` | `g ↦ g` if `g` fixes `q+1`, else 0 |
//! | cw cup | `∅ → UD` | `a ↦ Σ a t ⊗ t⁻¹` over coset representatives `t` |
//! | cw cap | `UD → ∅` | multiplication |
//!
//! Here `r` is the rank of the region right of the slice and `q` the rank
//! of the region it sits in.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};

use super::tensor::{perm_rank, tensor_basis, BimodulePath, TensorBasis};
use super::{BimodError, BimodResult};
use crate::combinatorics::{coset_decompose, coset_rep, Permutation};
use crate::diagcat::{parse_diagram, Diagram, Morphism, Signature, Slice, Winding};
use crate::error::Error;
use crate::linalg::{sparse_rank, Matrix, SparseRow};
use crate::report::Report;
use crate::scalar::{factorial_usize, fmt_scalar, Scalar};

/// A linear map between composite bimodules, stored by columns: column `j`
/// is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapRep {
    pub domain: BimodulePath,
    pub codomain: BimodulePath,
    rows: usize,
    columns: Vec<BTreeMap<usize, Scalar>>,
}

impl LinearMapRep {
    pub fn zero(domain: BimodulePath, codomain: BimodulePath) -> Self {
        let rows = tensor_basis(&codomain).len();
        let cols = tensor_basis(&domain).len();
        LinearMapRep {
            domain,
            codomain,
            rows,
            columns: vec![BTreeMap::new(); cols],
        }
    }

    pub fn identity(path: BimodulePath) -> Self {
        let n = tensor_basis(&path).len();
        LinearMapRep {
            domain: path.clone(),
            codomain: path,
            rows: n,
            columns: (0..n).map(|j| BTreeMap::from([(j, Scalar::one())])).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(&r).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn column(&self, c: usize) -> &BTreeMap<usize, Scalar> {
        &self.columns[c]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    fn same_shape(&self, other: &LinearMapRep) -> BimodResult<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(BimodError::DomainMismatch("maps between different bimodules".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &LinearMapRep) -> BimodResult<LinearMapRep> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (col, extra) in out.columns.iter_mut().zip(&other.columns) {
            add_into(col, extra, &Scalar::one());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> LinearMapRep {
        let mut out = self.clone();
        for col in &mut out.columns {
            if k.is_zero() {
                col.clear();
            }
            for v in col.values_mut() {
                *v *= k;
            }
        }
        out
    }

    pub fn sub(&self, other: &LinearMapRep) -> BimodResult<LinearMapRep> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMapRep) -> BimodResult<LinearMapRep> {
        if other.codomain != self.domain {
            return Err(BimodError::DomainMismatch("codomain and domain differ".into()));
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut out = BTreeMap::new();
                for (k, c) in col {
                    add_into(&mut out, &self.columns[*k], c);
                }
                out
            })
            .collect();
        Ok(LinearMapRep {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            rows: self.rows,
            columns,
        })
    }

    pub fn trace(&self) -> Scalar {
        self.columns
            .iter()
            .enumerate()
            .filter_map(|(j, col)| col.get(&j))
            .fold(Scalar::zero(), |acc, c| acc + c)
    }

    pub fn rank(&self) -> usize {
        sparse_rank(self.columns.clone())
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    /// Entries `(row, col, self, other)` where the two maps differ.
    pub fn differences(&self, other: &LinearMapRep) -> Vec<(usize, usize, Scalar, Scalar)> {
        let mut out = Vec::new();
        for (c, (a, b)) in self.columns.iter().zip(&other.columns).enumerate() {
            for r in a.keys().chain(b.keys()).sorted().dedup() {
                let (x, y) = (self.get(*r, c), other.get(*r, c));
                if x != y {
                    out.push((*r, c, x, y));
                }
            }
        }
        out
    }

    /// Plain-text grid of `num/den` entries, one row per line.
    pub fn to_grid_text(&self) -> String {
        (0..self.rows)
            .map(|r| (0..self.cols()).map(|c| fmt_scalar(&self.get(r, c))).join(" "))
            .join("\n")
    }
}

fn add_into(acc: &mut BTreeMap<usize, Scalar>, v: &BTreeMap<usize, Scalar>, k: &Scalar) {
    for (i, c) in v {
        let e = acc.entry(*i).or_insert_with(Scalar::zero);
        *e += c * k;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

fn transposition(a: usize, n: usize) -> Permutation {
    Permutation::transposition(a, a + 1, n)
}

/// Image of the pure tensor `factors` under `slice`, as pure tensors with
/// coefficient one.
fn slice_on_pure(slice: Slice, below: &TensorBasis, mut f: Vec<Permutation>) -> Vec<Vec<Permutation>> {
    let p = slice.position() - 1;
    let r = below.regions();
    match slice {
        Slice::Cross(_) => {
            let rr = r[p + 2];
            let (a, b) = (f[p].clone(), f[p + 1].clone());
            match (below.is_up(p), below.is_up(p + 1)) {
                (true, true) => {
                    f[p] = a.compose(&b).compose(&transposition(rr + 1, rr + 2));
                    f[p + 1] = Permutation::identity(rr + 1);
                }
                (false, false) => {
                    f[p] = Permutation::identity(rr - 1);
                    f[p + 1] = transposition(rr - 1, rr).compose(&a).compose(&b);
                }
                (true, false) => {
                    f[p] = Permutation::identity(rr + 1);
                    f[p + 1] = a.compose(&transposition(rr, rr + 1)).compose(&b);
                }
                (false, true) => {
                    let g = a.compose(&b).extend(rr + 1);
                    if g.apply(rr + 1) == rr + 1 {
                        return Vec::new();
                    }
                    let (j, rest) = coset_decompose(&g);
                    f[p] = coset_rep(j, rr);
                    f[p + 1] = rest;
                }
            }
            vec![f]
        }
        Slice::Cup(_, w) => {
            let q = r[p];
            match w {
                Winding::Ccw => {
                    let id = Permutation::identity(q + 1);
                    f.splice(p..p, [id.clone(), id]);
                    vec![f]
                }
                Winding::Cw => (1..=q)
                    .map(|j| {
                        let t = coset_rep(j, q);
                        let mut g = f.clone();
                        g.splice(p..p, [t.clone(), t.inverse()]);
                        g
                    })
                    .collect(),
            }
        }
        Slice::Cap(_, w) => {
            let q = r[p];
            let g = f[p].compose(&f[p + 1]);
            let g = match w {
                Winding::Ccw => {
                    let g = g.extend(q + 1);
                    if g.apply(q + 1) != q + 1 {
                        return Vec::new();
                    }
                    g.restrict(q).expect("fixes the last point")
                }
                Winding::Cw => g,
            };
            f.drain(p..p + 2);
            f[p] = g.compose(&f[p]);
            vec![f]
        }
    }
}

fn slice_on_vector(
    slice: Slice,
    below: &TensorBasis,
    above: &TensorBasis,
    v: &BTreeMap<usize, Scalar>,
) -> BTreeMap<usize, Scalar> {
    let mut out = BTreeMap::new();
    for (i, c) in v {
        for image in slice_on_pure(slice, below, below.element(*i)) {
            let e = out.entry(above.index_of(&image)).or_insert_with(Scalar::zero);
            *e += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Bases of the intermediate spaces; `None` where a signature passes
/// through a negative rank, i.e. the space is zero.
fn diagram_bases(d: &Diagram, n0: usize) -> Vec<Option<TensorBasis>> {
    d.signatures()
        .iter()
        .map(|sig| BimodulePath::from_signature(sig, n0).ok().map(|p| tensor_basis(&p)))
        .collect()
}

fn diagram_columns(d: &Diagram, domain_len: usize, n0: usize) -> Vec<BTreeMap<usize, Scalar>> {
    let bases = diagram_bases(d, n0);
    if bases.iter().any(Option::is_none) {
        return vec![BTreeMap::new(); domain_len];
    }
    let bases: Vec<TensorBasis> = bases.into_iter().flatten().collect();
    (0..domain_len)
        .map(|j| {
            let mut v = BTreeMap::from([(j, Scalar::one())]);
            for (k, s) in d.slices().iter().enumerate() {
                v = slice_on_vector(*s, &bases[k], &bases[k + 1], &v);
            }
            v
        })
        .collect()
}

fn path_of(sig: &Signature, n0: usize, m: &Morphism) -> BimodResult<BimodulePath> {
    BimodulePath::from_signature(sig, n0).map_err(|_| BimodError::UnrealizableAtRank {
        signature: m.to_string(),
        rank: n0,
    })
}

/// The bimodule map of `m` over base rank `n0`.
pub fn diagram_to_map(m: &Morphism, n0: usize) -> BimodResult<LinearMapRep> {
    let mut out = LinearMapRep::zero(path_of(m.domain(), n0, m)?, path_of(m.codomain(), n0, m)?);
    let domain_len = out.columns.len();
    for (d, c) in m.terms() {
        for (col, image) in out.columns.iter_mut().zip(diagram_columns(d, domain_len, n0)) {
            add_into(col, &image, c);
        }
    }
    Ok(out)
}

/// Trace of the endomorphism `m` over base rank `n0`.
pub fn trace(m: &Morphism, n0: usize) -> BimodResult<Scalar> {
    Ok(diagram_to_map(m, n0)?.trace())
}

/// The local relations, each as a pair of morphisms that must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalRelation {
    UpUpDoubleCrossing,
    Braid,
    DownUpDoubleCrossing,
    UpDownDoubleCrossing,
    CcwCircle,
    LeftCurl,
}

impl LocalRelation {
    pub const ALL: [LocalRelation; 6] = [
        LocalRelation::UpUpDoubleCrossing,
        LocalRelation::Braid,
        LocalRelation::DownUpDoubleCrossing,
        LocalRelation::UpDownDoubleCrossing,
        LocalRelation::CcwCircle,
        LocalRelation::LeftCurl,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LocalRelation::UpUpDoubleCrossing => "up-up",
            LocalRelation::Braid => "braid",
            LocalRelation::DownUpDoubleCrossing => "down-up",
            LocalRelation::UpDownDoubleCrossing => "up-down",
            LocalRelation::CcwCircle => "circle",
            LocalRelation::LeftCurl => "left-curl",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            LocalRelation::UpUpDoubleCrossing => "up-up double crossing = identity",
            LocalRelation::Braid => "braid relation on three up strands",
            LocalRelation::DownUpDoubleCrossing => "down-up double crossing = identity - cap-cup",
            LocalRelation::UpDownDoubleCrossing => "up-down double crossing = identity",
            LocalRelation::CcwCircle => "counterclockwise circle = 1",
            LocalRelation::LeftCurl => "left curl = 0",
        }
    }

    /// Both sides of the relation.
    pub fn sides(self) -> (Morphism, Morphism) {
        let d = |t: &str| Morphism::from(parse_diagram(t).expect("built-in diagram"));
        match self {
            LocalRelation::UpUpDoubleCrossing => (d("sig:UU; x1; x1"), d("sig:UU")),
            LocalRelation::Braid => (d("sig:UUU; x1; x2; x1"), d("sig:UUU; x2; x1; x2")),
            LocalRelation::DownUpDoubleCrossing => (
                d("sig:DU; x1; x1"),
                d("sig:DU").sub(&d("sig:DU; cap+1; cup+1")).expect("same boundary"),
            ),
            LocalRelation::UpDownDoubleCrossing => (d("sig:UD; x1; x1"), d("sig:UD")),
            LocalRelation::CcwCircle => (d("sig:; cup+1; cap+1"), d("sig:")),
            LocalRelation::LeftCurl => {
                let lhs = d("sig:U; cup+1; x2; cap+1");
                let zero = Morphism::zero(lhs.domain().clone(), lhs.codomain().clone());
                (lhs, zero)
            }
        }
    }
}

impl fmt::Display for LocalRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LocalRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LocalRelation::ALL
            .into_iter()
            .find(|r| r.id() == s.trim())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown relation {s:?}")))
    }
}

/// Checks `rel` as an equality of bimodule maps over base rank `n`.
pub fn verify_local_relation(rel: LocalRelation, n: usize) -> crate::Result<Report> {
    let (lhs, rhs) = rel.sides();
    let mut report = Report::new();
    if BimodulePath::from_signature(lhs.domain(), n).is_err() {
        report.record(rel.description(), n, true, format!("{} is the zero bimodule over A_{n}", lhs.domain()));
        return Ok(report);
    }
    let a = diagram_to_map(&lhs, n)?;
    let b = diagram_to_map(&rhs, n)?;
    let diffs = a.differences(&b);
    let detail = if diffs.is_empty() {
        format!("equal as {}x{} matrices", a.rows(), a.cols())
    } else {
        diffs
            .iter()
            .take(5)
            .map(|(r, c, x, y)| format!("({r},{c}): {} vs {}", fmt_scalar(x), fmt_scalar(y)))
            .join("; ")
    };
    report.record(rel.description(), n, diffs.is_empty(), detail);
    Ok(report.into_result()?)
}

/// `A_{k+1} ≅ A_k ⊕ (A_k ⊗_{A_{k-1}} A_k)` as `A_k`-bimodules, via the
/// inclusion and `a ⊗ b ↦ a (k, k+1) b`.
pub fn mackey_check(k: usize) -> crate::Result<Report> {
    if k == 0 {
        return Err(Error::InvalidArgument("mackey_check needs k >= 1".into()));
    }
    let mut report = Report::new();
    let (big, small) = (factorial_usize(k + 1), factorial_usize(k));
    report.record(
        "dimension identity (k+1)! = k*k! + k!",
        k,
        big == k * small + small,
        format!("{big} = {} + {small}", k * small),
    );

    let ud = tensor_basis(&BimodulePath::from_signature(&"UD".parse().expect("valid"), k)?);
    let t = transposition(k, k + 1);
    let m1 = |g: &Permutation| perm_rank(&g.extend(k + 1));
    let m2_pure = |f: &[Permutation]| f[0].compose(&t).compose(&f[1]).compose(&f[2]).extend(k + 1);
    let m2 = |i: usize| perm_rank(&m2_pure(&ud.element(i)));

    let unit = |c: usize| SparseRow::from([(c, Scalar::one())]);
    let rows1: Vec<SparseRow> = Permutation::all(k).map(|g| unit(m1(&g))).collect();
    let rows2: Vec<SparseRow> = (0..ud.len()).map(|i| unit(m2(i))).collect();
    let r1 = sparse_rank(rows1.clone());
    let r2 = sparse_rank(rows2.clone());
    let both = sparse_rank(rows1.into_iter().chain(rows2).collect());
    report.expect_eq("inclusion is injective", k, &r1, &small);
    report.expect_eq("a(x)b -> a t b is injective", k, &r2, &(k * small));
    report.expect_eq("images are independent and span A_{k+1}", k, &both, &big);

    let included: std::collections::BTreeSet<Permutation> = Permutation::all(k).map(|g| g.extend(k + 1)).collect();
    let fixing: std::collections::BTreeSet<Permutation> =
        Permutation::all(k + 1).filter(|g| g.apply(k + 1) == k + 1).collect();
    report.record(
        "inclusion image = {g : g(k+1) = k+1}",
        k,
        included == fixing,
        format!("{} elements", fixing.len()),
    );

    let mut linear = true;
    for j in 1..k {
        let s = transposition(j, k);
        for i in 0..ud.len() {
            let f = ud.element(i);
            let image = m2_pure(&f);
            let mut left = f.clone();
            left[0] = s.compose(&left[0]);
            let mut right = f.clone();
            right[2] = right[2].compose(&s);
            let left = ud.element(ud.index_of(&left));
            let right = ud.element(ud.index_of(&right));
            linear &= m2_pure(&left) == s.compose(&image).extend(k + 1);
            linear &= m2_pure(&right) == image.compose(&s).extend(k + 1);
        }
    }
    report.record("a(x)b -> a t b is A_k-bilinear", k, linear, format!("checked on s_1..s_{}", k.saturating_sub(1)));
    Ok(report.into_result()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(text: &str, n: usize) -> LinearMapRep {
        diagram_to_map(&Morphism::from(parse_diagram(text).unwrap()), n).unwrap()
    }

    #[test]
    fn identity_and_circles() {
        for n in 0..=3 {
            let id = map("sig:U", n);
            assert_eq!(id.rows(), factorial_usize(n + 1));
            assert_eq!(id, LinearMapRep::identity(id.domain.clone()));
            assert_eq!(map("sig:; cup+1; cap+1", n), map("sig:", n));
            assert!(map("sig:U; cup+1; x2; cap+1", n).is_zero());
        }
        // the clockwise circle is multiplication by the rank
        let cw = map("sig:; cup-1; cap-1", 3);
        assert_eq!(cw, LinearMapRep::identity(cw.domain.clone()).scale(&Scalar::from_integer(3.into())));
    }

    #[test]
    fn unrealizable() {
        let m = Morphism::from(parse_diagram("sig:D").unwrap());
        assert!(matches!(diagram_to_map(&m, 0), Err(BimodError::UnrealizableAtRank { .. })));
        assert!(map("sig:; cup-1; cap-1", 0).is_zero());
    }

    #[test]
    fn relations_at_small_rank() {
        for rel in LocalRelation::ALL {
            for n in 0..=2 {
                verify_local_relation(rel, n).unwrap_or_else(|e| panic!("{rel} at {n}: {e}"));
            }
        }
    }

    #[test]
    fn mackey_small() {
        for k in 1..=3 {
            assert!(mackey_check(k).unwrap().passed());
        }
    }
}
