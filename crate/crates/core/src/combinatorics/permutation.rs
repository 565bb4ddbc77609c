use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::CombError;

/// A permutation of `{1..n}` in one-line notation.
///
/// Composition follows `(u ∘ v)(i) = u(v(i))` everywhere in the crate;
/// [`Permutation::compose`] and [`word_eval`] both use it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, CombError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(CombError::InvalidPermutation(one_line));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(i: usize, n: usize) -> Result<Self, CombError> {
        if i == 0 || i >= n {
            return Err(CombError::LetterOutOfRange { letter: i, n });
        }
        let mut p = Self::identity(n);
        p.one_line.swap(i - 1, i);
        Ok(p)
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        p.one_line.swap(a - 1, b - 1);
        p
    }

    /// The longest element `i ↦ n - i + 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).rev().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Image of `i` (1-based). Points beyond the rank are fixed.
    pub fn apply(&self, i: usize) -> usize {
        if i > self.rank() {
            i
        } else {
            self.one_line[i - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`. Ranks may differ; the smaller one is padded with fixed points.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.rank().max(other.rank());
        Permutation {
            one_line: (1..=n).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.rank()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    /// Pads with fixed points up to rank `n` (no-op if already that large).
    pub fn extend(&self, n: usize) -> Permutation {
        let mut one_line = self.one_line.clone();
        one_line.extend(self.rank() + 1..=n);
        Permutation { one_line }
    }

    /// Drops trailing fixed points down to rank `n`.
    ///
    /// Returns `None` if some point above `n` is moved.
    pub fn restrict(&self, n: usize) -> Option<Permutation> {
        if (n + 1..=self.rank()).any(|i| self.apply(i) != i) {
            return None;
        }
        Some(Permutation {
            one_line: self.one_line[..n.min(self.rank())].to_vec(),
        })
    }

    /// Number of inversions, which is the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn sign(&self) -> i64 {
        crate::scalar::sign(self.length())
    }

    /// Cycle type as a partition.
    pub fn cycle_type(&self) -> super::Partition {
        let n = self.rank();
        let mut seen = vec![false; n + 1];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
                len += 1;
            }
            lens.push(len);
        }
        super::Partition::from_parts(lens)
    }

    /// Every permutation of rank `n`, in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n)
            .permutations(n)
            .map(|one_line| Permutation { one_line })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_line.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = CombError;

    /// Parses one-line literals such as `(2,3,1)`; `()` is the identity of `S_0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| CombError::Parse(format!("permutation literal must be parenthesised: {t:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Permutation::identity(0));
        }
        let one_line = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CombError::Parse(format!("bad entry in {t:?}: {e}")))?;
        Permutation::new(one_line)
    }
}

/// A word in the simple transpositions `s_1 .. s_{n-1}` (1-based letters).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWord {
    pub letters: Vec<usize>,
    pub n: usize,
}

impl GeneratorWord {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self, CombError> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l >= n) {
            return Err(CombError::LetterOutOfRange { letter: bad, n });
        }
        Ok(GeneratorWord { letters, n })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn eval(&self) -> Permutation {
        let mut w = Permutation::identity(self.n);
        for &i in &self.letters {
            // right-multiply by s_i: swap positions i, i+1 of the one-line form
            w.one_line.swap(i - 1, i);
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        self.eval().length() == self.len()
    }
}

/// Evaluates `s_{i_1} s_{i_2} ⋯ s_{i_k}` in `S_n`.
pub fn word_eval(word: &GeneratorWord) -> Permutation {
    word.eval()
}

pub fn perm_length(w: &Permutation) -> usize {
    w.length()
}

/// A reduced word for `w`, obtained by repeatedly peeling off the leftmost
/// descent `w(i) > w(i+1)` on the right: `w = (w s_i) s_i`.
pub fn reduced_word(w: &Permutation) -> GeneratorWord {
    let n = w.rank();
    let mut cur = w.one_line.clone();
    let mut rev = Vec::new();
    while let Some(i) = (0..n.saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        rev.push(i + 1);
    }
    rev.reverse();
    GeneratorWord { letters: rev, n }
}

/// The minimal coset representative `s_i s_{i+1} ⋯ s_n` in `S_{n+1}`,
/// which sends `n+1` to `i`.
pub fn coset_rep(i: usize, n_plus_1: usize) -> Permutation {
    let letters: Vec<usize> = (i..n_plus_1).collect();
    GeneratorWord { letters, n: n_plus_1 }.eval()
}

/// Splits `w ∈ S_{n+1}` as `(s_i ⋯ s_n) ∘ w′` with `w′ ∈ S_n` and `i = w(n+1)`.
pub fn coset_decompose(w: &Permutation) -> (usize, Permutation) {
    let np1 = w.rank();
    assert!(np1 >= 1, "coset_decompose needs rank at least 1");
    let i = w.apply(np1);
    let rest = coset_rep(i, np1).inverse().compose(w);
    let rest = rest
        .restrict(np1 - 1)
        .expect("coset representative quotient fixes the last point");
    (i, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity(4).length(), 0);
        for n in 0..=7 {
            assert_eq!(Permutation::longest(n).length(), n * n.saturating_sub(1) / 2);
        }
        let w = GeneratorWord::new(vec![1, 2], 3).unwrap().eval();
        assert_eq!(w, perm(&[2, 3, 1]));
        assert_eq!(w.length(), 2);
    }

    #[test]
    fn word_evaluation() {
        assert!(GeneratorWord::new(vec![], 3).unwrap().eval().is_identity());
        assert!(GeneratorWord::new(vec![1, 1], 3).unwrap().eval().is_identity());
        let a = GeneratorWord::new(vec![1, 2, 1], 3).unwrap().eval();
        let b = GeneratorWord::new(vec![2, 1, 2], 3).unwrap().eval();
        assert_eq!(a, b);
        assert!(GeneratorWord::new(vec![3], 3).is_err());
        assert!(GeneratorWord::new(vec![0], 3).is_err());
    }

    #[test]
    fn word_eval_matches_composition() {
        let n = 4;
        let word = GeneratorWord::new(vec![2, 3, 1, 2], n).unwrap();
        let by_compose = word
            .letters
            .iter()
            .fold(Permutation::identity(n), |acc, &i| acc.compose(&Permutation::simple(i, n).unwrap()));
        assert_eq!(word.eval(), by_compose);
    }

    #[test]
    fn reduced_words_round_trip() {
        assert!(reduced_word(&Permutation::identity(3)).is_empty());
        assert_eq!(reduced_word(&Permutation::longest(3)).len(), 3);
        for n in 0..=6 {
            for w in Permutation::all(n) {
                let word = reduced_word(&w);
                assert_eq!(word.eval(), w);
                assert_eq!(word.len(), w.length());
                assert!(word.is_reduced());
            }
        }
    }

    #[test]
    fn coset_decomposition_examples() {
        let (i, rest) = coset_decompose(&Permutation::identity(4));
        assert_eq!((i, rest), (4, Permutation::identity(3)));
        let s3 = Permutation::simple(3, 4).unwrap();
        assert_eq!(coset_decompose(&s3), (3, Permutation::identity(3)));
    }

    #[test]
    fn coset_decomposition_is_a_length_additive_bijection() {
        for n in 0..=5 {
            let mut seen = HashSet::new();
            for w in Permutation::all(n + 1) {
                let (i, rest) = coset_decompose(&w);
                assert_eq!(rest.rank(), n);
                assert_eq!(coset_rep(i, n + 1).compose(&rest), w);
                assert_eq!(w.length(), (n + 1 - i) + rest.length());
                assert!(seen.insert((i, rest)));
            }
            assert_eq!(seen.len(), (1..=n + 1).product::<usize>());
        }
    }

    #[test]
    fn literal_round_trip() {
        let w = perm(&[2, 3, 1]);
        assert_eq!(w.to_string(), "(2,3,1)");
        assert_eq!("(2,3,1)".parse::<Permutation>().unwrap(), w);
        assert!("(1,1)".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(perm(&[2, 3, 1, 4]).cycle_type().parts(), &[3, 1]);
        assert_eq!(Permutation::identity(3).cycle_type().parts(), &[1, 1, 1]);
    }
}
