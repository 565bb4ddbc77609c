#![allow(dead_code)]

use heiscat::diagcat::{Diagram, Signature, Slice};
use proptest::prelude::*;

/// Every slice applicable to `sig` whose result has at most `max_len` strands.
pub fn applicable_slices(sig: &Signature, max_len: usize) -> Vec<Slice> {
    Slice::applicable(sig)
        .into_iter()
        .filter(|s| s.apply(sig).is_some_and(|t| t.len() <= max_len))
        .collect()
}

/// A diagram on `domain` whose `k`-th slice is picked by `choices[k]`
/// among the applicable ones.
pub fn diagram_from_choices(domain: &Signature, choices: &[usize], max_len: usize) -> Diagram {
    let mut sig = domain.clone();
    let mut slices = Vec::new();
    for &c in choices {
        let options = applicable_slices(&sig, max_len);
        if options.is_empty() {
            break;
        }
        let s = options[c % options.len()];
        sig = s.apply(&sig).unwrap();
        slices.push(s);
    }
    Diagram::new(domain.clone(), slices).unwrap()
}

pub fn signature_strategy(max_len: usize) -> impl Strategy<Value = Signature> {
    prop::collection::vec(any::<bool>(), 0..=max_len).prop_map(|v| {
        v.into_iter()
            .map(|up| if up { "U" } else { "D" })
            .collect::<String>()
            .parse()
            .unwrap()
    })
}

pub fn choices_strategy(max_slices: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..64, 0..=max_slices)
}
