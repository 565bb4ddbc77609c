use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CombError;

/// An integer partition, stored as weakly decreasing positive parts.
///
/// The total order sorts by size first and then reverse-lexicographically,
/// so that `(3) < (2,1) < (1,1,1)`. Reverse-lex refines dominance, which
/// is what the triangularity checks rely on.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CombError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(CombError::InvalidPartition(parts))
        }
    }

    /// Sorts arbitrary parts into a partition, dropping zeros.
    pub fn from_parts<I: IntoIterator<Item = usize>>(parts: I) -> Self {
        let mut v: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Multiset union of parts; `h_λ h_μ = h_{λ ∪ μ}` in any multiplicative basis.
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_parts(self.0.iter().chain(other.0.iter()).copied())
    }

    /// `λ ⊵ μ` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_i` of each part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, m)| (i as u128).pow(m as u32) * (1..=m as u128).product::<u128>())
            .product()
    }

    /// All distinct rearrangements of the parts padded with zeros to `len`
    /// entries. Empty when the partition has more than `len` parts.
    pub fn rearrangements(&self, len: usize) -> Vec<Vec<usize>> {
        if self.len() > len {
            return Vec::new();
        }
        let mut counts: Vec<(usize, usize)> = self.multiplicities().into_iter().collect();
        if len > self.len() {
            counts.push((0, len - self.len()));
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(len);
        rearrange(&mut counts, len, &mut current, &mut out);
        out
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j - 1 + conj.part(j) - i - 1 + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn num_standard_tableaux(&self) -> u128 {
        let n = self.size() as u128;
        let num: u128 = (1..=n).product();
        let den: u128 = self.hook_lengths().iter().map(|&h| h as u128).product();
        num / den
    }
}

fn rearrange(counts: &mut [(usize, usize)], len: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == len {
        out.push(current.clone());
        return;
    }
    for k in 0..counts.len() {
        if counts[k].1 == 0 {
            continue;
        }
        counts[k].1 -= 1;
        current.push(counts[k].0);
        rearrange(counts, len, current, out);
        current.pop();
        counts[k].1 += 1;
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = CombError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = CombError;

    /// Parses `[3,1,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| CombError::Parse(format!("partition literal must be bracketed: {t:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CombError::Parse(format!("bad part in {t:?}: {e}")))?;
        Partition::new(parts)
    }
}

/// Every partition of `n`, each once, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(n, n, &mut current, &mut out);
    out
}

fn gen_partitions(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        gen_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size at most `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    // Independent count: weakly decreasing sequences by brute force over
    // compositions, filtering the sorted ones.
    fn brute_force_count(n: usize) -> usize {
        fn compositions(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        compositions(n)
            .into_iter()
            .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
            .count()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 0..=8 {
            let ps = partitions_of(n);
            assert_eq!(ps.len(), brute_force_count(n), "n = {n}");
            assert!(ps.iter().all(|q| q.size() == n));
            let mut sorted = ps.clone();
            sorted.sort();
            assert_eq!(sorted, ps, "list is in the documented order");
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn literal_round_trip() {
        for q in partitions_up_to(6) {
            assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert!(!p(&[2, 2, 2]).dominates(&p(&[3, 1, 1, 1])));
    }

    #[test]
    fn reverse_lex_refines_dominance() {
        for n in 0..=7 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    if a.dominates(&b) {
                        assert!(a <= b, "{a} dominates {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn rearrangement_counts() {
        assert_eq!(p(&[2, 1]).rearrangements(2).len(), 2);
        assert_eq!(p(&[1, 1]).rearrangements(3).len(), 3);
        assert!(p(&[1, 1, 1]).rearrangements(2).is_empty());
        assert_eq!(Partition::empty().rearrangements(2), vec![vec![0, 0]]);
    }

    #[test]
    fn centralizer_orders_sum_to_one() {
        // Σ_λ 1/z_λ = 1 over partitions of n.
        for n in 1..=7 {
            let fact: u128 = (1..=n as u128).product();
            let total: u128 = partitions_of(n).iter().map(|l| fact / l.z()).sum();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn hook_length_formula() {
        assert_eq!(p(&[2, 1]).num_standard_tableaux(), 2);
        assert_eq!(p(&[3, 2]).num_standard_tableaux(), 5);
        // Σ (f^λ)^2 = n!
        for n in 1..=7 {
            let fact: u128 = (1..=n as u128).product();
            let s: u128 = partitions_of(n).iter().map(|l| l.num_standard_tableaux().pow(2)).sum();
            assert_eq!(s, fact);
        }
    }
}
