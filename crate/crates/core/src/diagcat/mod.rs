//! Planar oriented diagrams encoded as slice sequences, their linear
//! combinations, and the relations of the graphical Heisenberg category.

mod k0;
mod simplify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bimodel::GroupAlgElem;
use crate::combinatorics::Permutation;
use crate::scalar::{fmt_scalar, Scalar};

pub use k0::{idempotent_object, idempotent_image_dimension, k0_class, verify_k0_relations, IdempotentKind};
pub use simplify::{commute_slices, evaluate_closed, simplify, ClosedValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("slice {index} ({slice}) does not apply to signature {below}")]
    IllFormedSlice { index: usize, slice: Slice, below: Signature },
    #[error("signature mismatch: expected {expected}, found {found}")]
    SignatureMismatch { expected: Signature, found: Signature },
    #[error("morphism contains cups or caps, or is not an endomorphism of an all-up signature")]
    NotBraidOnly,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type DiagResult<T> = Result<T, DiagError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    Up,
    Down,
}

impl Orientation {
    pub fn letter(self) -> char {
        match self {
            Orientation::Up => 'U',
            Orientation::Down => 'D',
        }
    }

    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Up => Orientation::Down,
            Orientation::Down => Orientation::Up,
        }
    }
}

/// A word in `U`/`D`, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature(pub Vec<Orientation>);

impl Signature {
    pub fn empty() -> Self {
        Signature(Vec::new())
    }

    pub fn ups(n: usize) -> Self {
        Signature(vec![Orientation::Up; n])
    }

    pub fn downs(n: usize) -> Self {
        Signature(vec![Orientation::Down; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Orientation] {
        &self.0
    }

    pub fn concat(&self, other: &Signature) -> Signature {
        Signature(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn is_all_up(&self) -> bool {
        self.0.iter().all(|&o| o == Orientation::Up)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|o| write!(f, "{}", o.letter()))
    }
}

impl FromStr for Signature {
    type Err = DiagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                'U' => Ok(Orientation::Up),
                'D' => Ok(Orientation::Down),
                _ => Err(DiagError::Parse {
                    pos,
                    msg: format!("expected U or D, found {c:?}"),
                }),
            })
            .collect::<DiagResult<Vec<_>>>()
            .map(Signature)
    }
}

/// `Ccw` cups and caps carry the pair `DU`, `Cw` ones the pair `UD`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Winding {
    Ccw,
    Cw,
}

impl Winding {
    /// Orientations of the two endpoints, left then right.
    pub fn pair(self) -> [Orientation; 2] {
        match self {
            Winding::Ccw => [Orientation::Down, Orientation::Up],
            Winding::Cw => [Orientation::Up, Orientation::Down],
        }
    }

    fn sign(self) -> char {
        match self {
            Winding::Ccw => '+',
            Winding::Cw => '-',
        }
    }
}

/// One generic-position slice at 1-based strand position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slice {
    Cross(usize),
    Cup(usize, Winding),
    Cap(usize, Winding),
}

impl Slice {
    pub fn position(self) -> usize {
        match self {
            Slice::Cross(i) | Slice::Cup(i, _) | Slice::Cap(i, _) => i,
        }
    }

    /// Strands consumed below and produced above.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Slice::Cross(_) => (2, 2),
            Slice::Cup(..) => (0, 2),
            Slice::Cap(..) => (2, 0),
        }
    }

    pub fn with_position(self, i: usize) -> Slice {
        match self {
            Slice::Cross(_) => Slice::Cross(i),
            Slice::Cup(_, w) => Slice::Cup(i, w),
            Slice::Cap(_, w) => Slice::Cap(i, w),
        }
    }

    /// Every slice that applies to `below`, crossings first.
    pub fn applicable(below: &Signature) -> Vec<Slice> {
        let len = below.len();
        let mut all: Vec<Slice> = (1..len).map(Slice::Cross).collect();
        for i in 1..=len + 1 {
            for w in [Winding::Ccw, Winding::Cw] {
                all.push(Slice::Cup(i, w));
                all.push(Slice::Cap(i, w));
            }
        }
        all.retain(|s| s.apply(below).is_some());
        all
    }

    /// The signature above this slice, if it applies to `below`.
    pub fn apply(self, below: &Signature) -> Option<Signature> {
        let s = &below.0;
        let i = self.position();
        if i == 0 {
            return None;
        }
        let mut out = s.clone();
        match self {
            Slice::Cross(_) => {
                if i + 1 > s.len() {
                    return None;
                }
                out.swap(i - 1, i);
            }
            Slice::Cup(_, w) => {
                if i > s.len() + 1 {
                    return None;
                }
                out.splice(i - 1..i - 1, w.pair());
            }
            Slice::Cap(_, w) => {
                if i + 1 > s.len() || s[i - 1..=i] != w.pair() {
                    return None;
                }
                out.drain(i - 1..=i);
            }
        }
        Some(Signature(out))
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Cross(i) => write!(f, "x{i}"),
            Slice::Cup(i, w) => write!(f, "cup{}{i}", w.sign()),
            Slice::Cap(i, w) => write!(f, "cap{}{i}", w.sign()),
        }
    }
}

impl FromStr for Slice {
    type Err = DiagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_slice(s.trim(), 0)
    }
}

fn parse_slice(tok: &str, pos: usize) -> DiagResult<Slice> {
    let err = |msg: String| DiagError::Parse { pos, msg };
    let index = |digits: &str| -> DiagResult<usize> {
        match digits.parse::<usize>() {
            Ok(i) if i >= 1 => Ok(i),
            _ => Err(err(format!("expected a positive position in {tok:?}"))),
        }
    };
    let winding = |rest: &str| -> DiagResult<(Winding, usize)> {
        let (w, digits) = match rest.chars().next() {
            Some('+') => (Winding::Ccw, &rest[1..]),
            Some('-') => (Winding::Cw, &rest[1..]),
            _ => return Err(err(format!("expected + or - in {tok:?}"))),
        };
        Ok((w, index(digits)?))
    };
    if let Some(rest) = tok.strip_prefix("cup") {
        let (w, i) = winding(rest)?;
        Ok(Slice::Cup(i, w))
    } else if let Some(rest) = tok.strip_prefix("cap") {
        let (w, i) = winding(rest)?;
        Ok(Slice::Cap(i, w))
    } else if let Some(rest) = tok.strip_prefix('x') {
        Ok(Slice::Cross(index(rest)?))
    } else {
        Err(err(format!("unknown slice {tok:?}")))
    }
}

/// A single diagram: a domain signature and slices read bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    domain: Signature,
    slices: Vec<Slice>,
}

impl Diagram {
    pub fn new(domain: Signature, slices: Vec<Slice>) -> DiagResult<Self> {
        let mut below = domain.clone();
        for (index, &slice) in slices.iter().enumerate() {
            below = slice.apply(&below).ok_or(DiagError::IllFormedSlice {
                index: index + 1,
                slice,
                below: below.clone(),
            })?;
        }
        Ok(Diagram { domain, slices })
    }

    pub fn identity(sig: Signature) -> Self {
        Diagram {
            domain: sig,
            slices: Vec::new(),
        }
    }

    pub fn domain(&self) -> &Signature {
        &self.domain
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// The signature below each slice, followed by the codomain.
    pub fn signatures(&self) -> Vec<Signature> {
        let mut out = vec![self.domain.clone()];
        for s in &self.slices {
            let next = s.apply(out.last().expect("nonempty")).expect("diagram is well formed");
            out.push(next);
        }
        out
    }

    pub fn codomain(&self) -> Signature {
        self.signatures().pop().expect("nonempty")
    }

    pub fn crossings(&self) -> usize {
        self.slices.iter().filter(|s| matches!(s, Slice::Cross(_))).count()
    }

    /// `self ∘ other`: `other` below, `self` on top.
    pub fn compose(&self, other: &Diagram) -> DiagResult<Diagram> {
        let mid = other.codomain();
        if mid != self.domain {
            return Err(DiagError::SignatureMismatch {
                expected: self.domain.clone(),
                found: mid,
            });
        }
        Ok(Diagram {
            domain: other.domain.clone(),
            slices: other.slices.iter().chain(&self.slices).copied().collect(),
        })
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let shift = self.codomain().len();
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| s.with_position(s.position() + shift)));
        Diagram {
            domain: self.domain.concat(&other.domain),
            slices,
        }
    }

    /// Crossings along a reduced word of `sigma`, acting on strands
    /// `offset + 1 ..= offset + rank` of `sig`.
    pub fn permutation(sig: Signature, offset: usize, sigma: &Permutation) -> DiagResult<Diagram> {
        let word = crate::combinatorics::reduced_word(sigma);
        let slices = word.letters.iter().rev().map(|&i| Slice::Cross(offset + i)).collect();
        Diagram::new(sig, slices)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sig:{}", self.domain)?;
        for s in &self.slices {
            write!(f, "; {s}")?;
        }
        Ok(())
    }
}

impl FromStr for Diagram {
    type Err = DiagError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_diagram(s)
    }
}

/// Parses `sig:UD; x1; cup+1; cap-2`. Slices are separated by `;` or
/// newlines.
pub fn parse_diagram(text: &str) -> DiagResult<Diagram> {
    let mut tokens = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices().chain([(text.len(), ';')]) {
        if c == ';' || c == '\n' {
            let raw = &text[start..i];
            let lead = raw.len() - raw.trim_start().len();
            tokens.push((start + lead, raw.trim()));
            start = i + c.len_utf8();
        }
    }
    let (head_pos, head) = tokens[0];
    let sig_text = head.strip_prefix("sig:").ok_or(DiagError::Parse {
        pos: head_pos,
        msg: "diagram must start with sig:".into(),
    })?;
    let domain: Signature = sig_text.parse().map_err(|e| match e {
        DiagError::Parse { pos, msg } => DiagError::Parse {
            pos: head_pos + 4 + pos,
            msg,
        },
        other => other,
    })?;
    let slices = tokens[1..]
        .iter()
        .filter(|(_, t)| !t.is_empty())
        .map(|&(pos, t)| parse_slice(t, pos))
        .collect::<DiagResult<Vec<_>>>()?;
    Diagram::new(domain, slices)
}

/// A rational linear combination of diagrams with a common boundary.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    domain: Signature,
    codomain: Signature,
    terms: BTreeMap<Diagram, Scalar>,
}

impl Morphism {
    pub fn zero(domain: Signature, codomain: Signature) -> Self {
        Morphism {
            domain,
            codomain,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(sig: Signature) -> Self {
        Morphism::from(Diagram::identity(sig))
    }

    pub fn domain(&self) -> &Signature {
        &self.domain
    }

    pub fn codomain(&self) -> &Signature {
        &self.codomain
    }

    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: Diagram, c: Scalar) -> DiagResult<()> {
        self.check_boundary(&d)?;
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(d.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
        Ok(())
    }

    fn check_boundary(&self, d: &Diagram) -> DiagResult<()> {
        for (expected, found) in [(&self.domain, d.domain().clone()), (&self.codomain, d.codomain())] {
            if *expected != found {
                return Err(DiagError::SignatureMismatch {
                    expected: expected.clone(),
                    found,
                });
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> DiagResult<Morphism> {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Morphism {
        let mut out = Morphism::zero(self.domain.clone(), self.codomain.clone());
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(d, c)| (d.clone(), c * k)).collect();
        }
        out
    }

    pub fn sub(&self, other: &Morphism) -> DiagResult<Morphism> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// `f ∘ g`.
    pub fn compose(&self, g: &Morphism) -> DiagResult<Morphism> {
        compose(self, g)
    }

    pub fn tensor(&self, g: &Morphism) -> Morphism {
        tensor(self, g)
    }
}

impl From<Diagram> for Morphism {
    fn from(d: Diagram) -> Self {
        let codomain = d.codomain();
        Morphism {
            domain: d.domain.clone(),
            codomain,
            terms: BTreeMap::from([(d, Scalar::one())]),
        }
    }
}

/// `f ∘ g`, requiring `codomain(g) = domain(f)`.
pub fn compose(f: &Morphism, g: &Morphism) -> DiagResult<Morphism> {
    if g.codomain != f.domain {
        return Err(DiagError::SignatureMismatch {
            expected: f.domain.clone(),
            found: g.codomain.clone(),
        });
    }
    let mut out = Morphism::zero(g.domain.clone(), f.codomain.clone());
    for ((df, cf), (dg, cg)) in f.terms.iter().cartesian_product(&g.terms) {
        out.add_term(df.compose(dg)?, cf * cg)?;
    }
    Ok(out)
}

/// `f ⊗ g`, with `f` on the left.
pub fn tensor(f: &Morphism, g: &Morphism) -> Morphism {
    let mut out = Morphism::zero(f.domain.concat(&g.domain), f.codomain.concat(&g.codomain));
    for ((df, cf), (dg, cg)) in f.terms.iter().cartesian_product(&g.terms) {
        out.add_term(df.tensor(dg), cf * cg).expect("juxtaposed boundaries agree");
    }
    out
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 : {} -> {}", self.domain, self.codomain);
        }
        let parts = self.terms.iter().map(|(d, c)| {
            if c.is_one() {
                format!("[{d}]")
            } else {
                format!("{} [{d}]", fmt_scalar(c))
            }
        });
        write!(f, "{}", parts.format(" + "))
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The group algebra element of a braid-only endomorphism of `↑^n`. The
/// top slice is the leftmost factor, so composition becomes the product.
pub fn sym_image(m: &Morphism) -> DiagResult<GroupAlgElem> {
    if m.domain != m.codomain || !m.domain.is_all_up() {
        return Err(DiagError::NotBraidOnly);
    }
    let n = m.domain.len();
    let mut out = GroupAlgElem::zero(n);
    for (d, c) in &m.terms {
        let mut sigma = Permutation::identity(n);
        for s in &d.slices {
            let Slice::Cross(i) = *s else {
                return Err(DiagError::NotBraidOnly);
            };
            sigma = Permutation::transposition(i, i + 1, n).compose(&sigma);
        }
        out = out.add(&GroupAlgElem::basis(sigma).scale(c)).expect("equal ranks");
    }
    Ok(out)
}
