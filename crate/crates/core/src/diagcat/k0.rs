//! The objects `S_↓^n` and `Λ_↑^n`, their classes in the Heisenberg
//! algebra, and a dimension check of the decomposition in the bimodule
//! model.

use num_traits::One;

use super::{DiagError, DiagResult, Diagram, Morphism, Signature};
use crate::bimodel::{diagram_to_map, BimodResult, BimodulePath, GroupAlgElem};
use crate::combinatorics::{partitions_of, Partition, Permutation};
use crate::error::Error;
use crate::heisenberg::{heis_product, HeisNormal};
use crate::report::Report;
use crate::scalar::{is_integral, Int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdempotentKind {
    /// `(↓^n, e(n))`.
    SDown,
    /// `(↑^n, e′(n))`.
    LambdaUp,
}

impl IdempotentKind {
    fn signature(self, n: usize) -> Signature {
        match self {
            IdempotentKind::SDown => Signature::downs(n),
            IdempotentKind::LambdaUp => Signature::ups(n),
        }
    }
}

/// The signature and group algebra idempotent defining the object.
pub fn idempotent_object(kind: IdempotentKind, n: usize) -> DiagResult<(Signature, GroupAlgElem)> {
    if n == 0 {
        return Err(DiagError::InvalidArgument("idempotent objects need n >= 1".into()));
    }
    let e = match kind {
        IdempotentKind::SDown => GroupAlgElem::symmetrizer(n),
        IdempotentKind::LambdaUp => GroupAlgElem::antisymmetrizer(n),
    };
    Ok((kind.signature(n), e))
}

/// The Heisenberg element whose image is the class of the tensor product
/// of the listed objects, using `[S_↓^n] = h_n*` and `[Λ_↑^n] = e_n`.
/// Entries with `n = 0` stand for the unit object.
pub fn k0_class(objects: &[(IdempotentKind, usize)]) -> HeisNormal {
    objects.iter().fold(HeisNormal::one(), |acc, &(kind, n)| {
        let g = match kind {
            IdempotentKind::SDown => HeisNormal::hstar(n),
            IdempotentKind::LambdaUp => HeisNormal::e(n),
        };
        heis_product(&acc, &g)
    })
}

/// `Σ ±(1/z_ρ) σ_ρ` over class representatives: the idempotent with each
/// conjugacy class collapsed to one diagram. Traces of tensor products of
/// these agree with traces of the full idempotents, since crossings on one
/// block commute with those on another.
fn class_weighted(kind: IdempotentKind, n: usize) -> Morphism {
    let sig = kind.signature(n);
    let mut m = Morphism::zero(sig.clone(), sig.clone());
    for rho in partitions_of(n) {
        let rep = cycle_representative(&rho);
        let mut w = Scalar::new(Int::one(), Int::from(rho.z()));
        if kind == IdempotentKind::LambdaUp && rep.sign() < 0 {
            w = -w;
        }
        let d = Diagram::permutation(sig.clone(), 0, &rep).expect("crossings on equal orientations");
        m.add_term(d, w).expect("endomorphism of the block");
    }
    m
}

fn cycle_representative(rho: &Partition) -> Permutation {
    let mut line = Vec::new();
    let mut start = 1;
    for &len in rho.parts() {
        line.extend(start + 1..start + len);
        line.push(start);
        start += len;
    }
    Permutation::new(line).expect("cycles on consecutive points")
}

/// Dimension of the image of the tensor product of the listed idempotents
/// in the bimodule model over base rank `n0`; zero when the signature
/// passes through a negative rank.
pub fn idempotent_image_dimension(objects: &[(IdempotentKind, usize)], n0: usize) -> BimodResult<usize> {
    let blocks: Vec<Morphism> = objects
        .iter()
        .filter(|(_, n)| *n > 0)
        .map(|&(kind, n)| class_weighted(kind, n))
        .collect();
    let sig = blocks.iter().fold(Signature::empty(), |s, b| s.concat(b.domain()));
    if BimodulePath::from_signature(&sig, n0).is_err() {
        return Ok(0);
    }
    let m = blocks
        .iter()
        .fold(Morphism::identity(Signature::empty()), |acc, b| acc.tensor(b));
    let tr = diagram_to_map(&m, n0)?.trace();
    assert!(is_integral(&tr), "trace of an idempotent is its rank");
    Ok(usize::try_from(tr.to_integer()).expect("nonnegative rank"))
}

/// The relations among the classes of `S_↓` and `Λ_↑` in the Heisenberg
/// algebra, and the matching dimension identity in the bimodule model at
/// base ranks `0..=3`.
pub fn verify_k0_relations(m: usize, n: usize) -> crate::Result<Report> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("need m, n >= 1, got m = {m}, n = {n}")));
    }
    use IdempotentKind::{LambdaUp as L, SDown as S};
    let mut report = Report::new();
    report.expect_eq(
        format!("[L^{m}][L^{n}] = [L^{n}][L^{m}]"),
        n,
        &k0_class(&[(L, m), (L, n)]),
        &k0_class(&[(L, n), (L, m)]),
    );
    report.expect_eq(
        format!("[S^{m}][S^{n}] = [S^{n}][S^{m}]"),
        n,
        &k0_class(&[(S, m), (S, n)]),
        &k0_class(&[(S, n), (S, m)]),
    );
    let lhs = k0_class(&[(S, n), (L, m)]);
    let rhs = k0_class(&[(L, m), (S, n)]).add(&k0_class(&[(L, m - 1), (S, n - 1)]));
    report.expect_eq(
        format!("[S^{n}][L^{m}] = [L^{m}][S^{n}] + [L^{}][S^{}]", m - 1, n - 1),
        n,
        &lhs,
        &rhs,
    );
    for k in 0..=3 {
        let a = idempotent_image_dimension(&[(S, n), (L, m)], k)?;
        let b = idempotent_image_dimension(&[(L, m), (S, n)], k)?;
        let c = idempotent_image_dimension(&[(L, m - 1), (S, n - 1)], k)?;
        report.record(
            format!("dim S^{n} L^{m} = dim L^{m} S^{n} + dim L^{} S^{} over A_{k}", m - 1, n - 1),
            k,
            a == b + c,
            format!("{a} = {b} + {c}"),
        );
    }
    Ok(report.into_result()?)
}
