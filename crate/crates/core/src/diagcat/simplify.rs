//! Directional rewriting under the local relations, matching modulo
//! exchange of slices that touch disjoint strands.
//!
//! Every rule lowers the number of crossings, or keeps it and lowers the
//! number of cups and caps, except the braid move, which keeps both and
//! lowers the sum of crossing positions. Exchanges are only performed as
//! part of a rule application, so rewriting terminates.

use num_traits::{One, Zero};

use super::{DiagError, DiagResult, Diagram, Morphism, Orientation, Signature, Slice, Winding};
use crate::scalar::Scalar;

use Orientation::{Down as D, Up as U};

/// Swaps two consecutive slices (`lower` first) that act on disjoint
/// strands, returning the new lower and upper slice.
pub fn commute_slices(lower: Slice, upper: Slice) -> Option<(Slice, Slice)> {
    let (cs, ps) = lower.arity();
    let (ct, pt) = upper.arity();
    let i0 = lower.position() - 1;
    let j0 = upper.position() - 1;
    if j0 + ct <= i0 {
        Some((upper, lower.with_position(i0 + pt - ct + 1)))
    } else if j0 >= i0 + ps {
        Some((upper.with_position(j0 - ps + cs + 1), lower))
    } else {
        None
    }
}

/// Moves the slice at `from` down to `to`, if every intermediate exchange
/// is allowed.
fn move_down(slices: &[Slice], from: usize, to: usize) -> Option<Vec<Slice>> {
    let mut seq = slices.to_vec();
    for k in (to..from).rev() {
        let (lo, hi) = commute_slices(seq[k], seq[k + 1])?;
        seq[k] = lo;
        seq[k + 1] = hi;
    }
    Some(seq)
}

fn move_up(slices: &[Slice], from: usize, to: usize) -> Option<Vec<Slice>> {
    let mut seq = slices.to_vec();
    for k in from..to {
        let (lo, hi) = commute_slices(seq[k], seq[k + 1])?;
        seq[k] = lo;
        seq[k + 1] = hi;
    }
    Some(seq)
}

fn signature_below(domain: &Signature, seq: &[Slice], k: usize) -> Signature {
    seq[..k]
        .iter()
        .fold(domain.clone(), |s, sl| sl.apply(&s).expect("exchanges preserve well-formedness"))
}

fn splice(seq: &[Slice], at: usize, len: usize, with: &[Slice]) -> Vec<Slice> {
    let mut out = seq[..at].to_vec();
    out.extend_from_slice(with);
    out.extend_from_slice(&seq[at + len..]);
    out
}

/// Replacements for the adjacent pair at `p`, as `(slices, coefficient)`.
fn pair_rule(domain: &Signature, seq: &[Slice], p: usize) -> Option<Vec<(Vec<Slice>, Scalar)>> {
    let one = Scalar::one;
    let removed = || splice(seq, p, 2, &[]);
    match (seq[p], seq[p + 1]) {
        (Slice::Cross(i), Slice::Cross(j)) if i == j => {
            let below = signature_below(domain, seq, p);
            match (below.0[i - 1], below.0[i]) {
                (U, U) | (U, D) => Some(vec![(removed(), one())]),
                (D, U) => {
                    let cap_cup = [Slice::Cap(i, Winding::Ccw), Slice::Cup(i, Winding::Ccw)];
                    Some(vec![(removed(), one()), (splice(seq, p, 2, &cap_cup), -one())])
                }
                (D, D) => None,
            }
        }
        (Slice::Cup(i, Winding::Ccw), Slice::Cap(j, Winding::Ccw)) if i == j => Some(vec![(removed(), one())]),
        (Slice::Cup(i, _), Slice::Cap(j, _)) if j == i + 1 || i == j + 1 => Some(vec![(removed(), one())]),
        _ => None,
    }
}

/// A counterclockwise cup, the crossing of its right end with the strand
/// to its right, and the cap closing it: the left curl.
fn is_left_curl(seq: &[Slice], p: usize) -> bool {
    match (seq[p], seq[p + 1], seq[p + 2]) {
        (Slice::Cup(i, Winding::Ccw), Slice::Cross(j), Slice::Cap(k, Winding::Ccw)) => j == i + 1 && k == i,
        _ => false,
    }
}

fn braid_rule(domain: &Signature, seq: &[Slice]) -> Option<Vec<Slice>> {
    (0..seq.len().saturating_sub(2)).find_map(|p| match (seq[p], seq[p + 1], seq[p + 2]) {
        (Slice::Cross(a), Slice::Cross(i), Slice::Cross(c)) if a == i + 1 && c == i + 1 => {
            let below = signature_below(domain, seq, p);
            (below.0[i - 1..=i + 1] == [U, U, U])
                .then(|| splice(seq, p, 3, &[Slice::Cross(i), Slice::Cross(i + 1), Slice::Cross(i)]))
        }
        _ => None,
    })
}

fn rewrite_once(d: &Diagram) -> Option<Vec<(Vec<Slice>, Scalar)>> {
    let slices = d.slices();
    let n = slices.len();
    for a in 0..n {
        for b in a + 1..n {
            let candidates = [move_down(slices, b, a + 1).map(|s| (s, a)), move_up(slices, a, b - 1).map(|s| (s, b - 1))];
            for (seq, p) in candidates.into_iter().flatten() {
                if let Some(out) = pair_rule(d.domain(), &seq, p) {
                    return Some(out);
                }
                for c in p + 2..n {
                    if let Some(seq3) = move_down(&seq, c, p + 2) {
                        if is_left_curl(&seq3, p) {
                            return Some(Vec::new());
                        }
                    }
                }
            }
        }
    }
    braid_rule(d.domain(), slices).map(|s| vec![(s, Scalar::one())])
}

/// Applies the local relations until none matches. The result is
/// equivalent to the input but not a canonical form.
pub fn simplify(m: &Morphism) -> Morphism {
    let mut out = Morphism::zero(m.domain().clone(), m.codomain().clone());
    let mut work: Vec<(Diagram, Scalar)> = m.terms().iter().map(|(d, c)| (d.clone(), c.clone())).collect();
    while let Some((d, c)) = work.pop() {
        match rewrite_once(&d) {
            None => out.add_term(d, c).expect("rewriting preserves the boundary"),
            Some(replacements) => {
                for (slices, k) in replacements {
                    let next = Diagram::new(d.domain().clone(), slices).expect("rewriting preserves well-formedness");
                    work.push((next, &c * k));
                }
            }
        }
    }
    out
}

/// Value of a closed diagram after simplification.
#[derive(Debug, Clone, PartialEq)]
pub enum ClosedValue {
    Scalar(Scalar),
    /// Terms the relations cannot remove, such as clockwise circles.
    Irreducible(Morphism),
}

pub fn evaluate_closed(m: &Morphism) -> DiagResult<ClosedValue> {
    for sig in [m.domain(), m.codomain()] {
        if !sig.is_empty() {
            return Err(DiagError::SignatureMismatch {
                expected: Signature::empty(),
                found: sig.clone(),
            });
        }
    }
    let s = simplify(m);
    if s.terms().keys().all(|d| d.slices().is_empty()) {
        let total = s.terms().values().fold(Scalar::zero(), |acc, c| acc + c);
        Ok(ClosedValue::Scalar(total))
    } else {
        Ok(ClosedValue::Irreducible(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagcat::parse_diagram;

    fn simp(text: &str) -> Morphism {
        simplify(&Morphism::from(parse_diagram(text).unwrap()))
    }

    #[test]
    fn exchanges() {
        let x1 = Slice::Cross(1);
        let x3 = Slice::Cross(3);
        assert_eq!(commute_slices(x1, x3), Some((x3, x1)));
        assert_eq!(commute_slices(x1, Slice::Cross(2)), None);
        // a cup to the right of a crossing keeps its place relative to it
        assert_eq!(commute_slices(x1, Slice::Cup(3, Winding::Cw)), Some((Slice::Cup(3, Winding::Cw), x1)));
        // a crossing to the right of a cup moves left by two
        assert_eq!(commute_slices(Slice::Cup(1, Winding::Ccw), Slice::Cross(3)), Some((Slice::Cross(1), Slice::Cup(1, Winding::Ccw))));
    }

    #[test]
    fn basic_rules() {
        assert_eq!(simp("sig:UU; x1; x1"), Morphism::identity("UU".parse().unwrap()));
        assert_eq!(simp("sig:UD; x1; x1"), Morphism::identity("UD".parse().unwrap()));
        assert!(simp("sig:U; cup+1; x2; cap+1").is_zero());
        assert_eq!(simp("sig:; cup+1; cap+1"), Morphism::identity(Signature::empty()));
        let du = simp("sig:DU; x1; x1");
        assert_eq!(du.terms().len(), 2);
    }
}
