//! Inputs shared by the benchmarks under `benches/`.

use heiscat::diagcat::{parse_diagram, Morphism};
use heiscat::heisenberg::HeisWord;
use heiscat::symfunc::SymFunc;
use heiscat::weyl::WeylElement;

/// The staircase `s[k,...,1]` and `s[2,1]`.
pub fn schur_pair(k: usize) -> (SymFunc, SymFunc) {
    let stair: Vec<usize> = (1..=k).rev().collect();
    (SymFunc::s(&stair), SymFunc::s(&[2, 1]))
}

/// `h_1* e_1 h_2* e_2 ... h_k* e_k`, maximally out of normal order.
pub fn alternating_word(k: usize) -> HeisWord {
    let text: Vec<String> = (1..=k).map(|i| format!("h{i}* e{i}")).collect();
    text.join(" ").parse().expect("well-formed word")
}

/// `(∂ + x)^k`.
pub fn weyl_power_factors(k: usize) -> Vec<WeylElement> {
    vec!["x^1 d^0 + x^0 d^1".parse().expect("Weyl literal"); k]
}

/// The braid relation's left side on three up strands.
pub fn braid_morphism() -> Morphism {
    Morphism::from(parse_diagram("sig:UUU; x1; x2; x1").expect("well-formed diagram"))
}

/// A double crossing of opposite orientations, which simplifies to two terms.
pub fn mixed_double_crossing() -> Morphism {
    Morphism::from(parse_diagram("sig:DU; x1; x1").expect("well-formed diagram"))
}
