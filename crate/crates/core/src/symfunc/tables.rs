//! Per-degree transition matrices, pivoting through the monomial basis.
//!
//! Row `i` of `to_m[b]` holds the monomial coordinates of the basis element
//! of type `b` indexed by `parts[i]`. Converting a coordinate row vector `c`
//! from basis `a` to basis `b` is `c · to_m[a] · from_m[b]`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::BasisTag;
use crate::combinatorics::{partitions_of, Partition};
use crate::linalg::Matrix;
use crate::scalar::{rat_from_int, Int, Scalar};

pub(crate) struct Tables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    to_m: [OnceLock<Matrix>; 5],
    from_m: [OnceLock<Matrix>; 5],
    pairs: [[OnceLock<Matrix>; 5]; 5],
}

impl Tables {
    fn build(d: usize) -> Tables {
        let parts = partitions_of(d);
        let index = parts.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Tables {
            parts,
            index,
            to_m: Default::default(),
            from_m: Default::default(),
            pairs: Default::default(),
        }
    }

    fn count_matrix(&self, f: impl Fn(&[usize], &[usize]) -> Int) -> Matrix {
        let n = self.parts.len();
        let mut m = Matrix::zeros(n, n);
        for (r, lam) in self.parts.iter().enumerate() {
            for (c, mu) in self.parts.iter().enumerate() {
                let v = f(lam.parts(), mu.parts());
                if !v.is_zero() {
                    m.set(r, c, rat_from_int(v));
                }
            }
        }
        m
    }

    fn to_m(&self, b: BasisTag) -> &Matrix {
        self.to_m[b.index()].get_or_init(|| match b {
            BasisTag::Monomial => Matrix::identity(self.parts.len()),
            BasisTag::Elementary => self.count_matrix(|l, m| count_matrices(l, m, true)),
            BasisTag::Complete => self.count_matrix(|l, m| count_matrices(l, m, false)),
            BasisTag::Powersum => self.count_matrix(count_fibre_maps),
            BasisTag::Schur => jacobi_trudi_matrix(&self.parts).mul(self.to_m(BasisTag::Complete)),
        })
    }

    fn from_m(&self, b: BasisTag) -> &Matrix {
        self.from_m[b.index()].get_or_init(|| {
            self.to_m(b)
                .inverse()
                .expect("transition matrices between bases of Sym are invertible")
        })
    }

    /// Transition matrix taking `a`-coordinates to `b`-coordinates.
    pub fn transition(&self, a: BasisTag, b: BasisTag) -> &Matrix {
        let (i, j) = (a.index(), b.index());
        self.pairs[i][j].get_or_init(|| {
            if i == j {
                Matrix::identity(self.parts.len())
            } else if j == 0 {
                self.to_m(a).clone()
            } else if i == 0 {
                self.from_m(b).clone()
            } else {
                self.to_m(a).mul(self.from_m(b))
            }
        })
    }
}

fn cache() -> &'static RwLock<HashMap<usize, Arc<Tables>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Tables>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Tables for degree `d`, built on first use and shared afterwards.
pub(crate) fn tables(d: usize) -> Arc<Tables> {
    if let Some(t) = cache().read().expect("symfunc cache poisoned").get(&d) {
        return Arc::clone(t);
    }
    let built = Arc::new(Tables::build(d));
    let mut w = cache().write().expect("symfunc cache poisoned");
    Arc::clone(w.entry(d).or_insert(built))
}

/// Number of matrices with row sums `rows` and column sums `cols`,
/// entries nonnegative integers or (if `binary`) zero/one.
pub(crate) fn count_matrices(rows: &[usize], cols: &[usize], binary: bool) -> Int {
    let mut memo = HashMap::new();
    count_rows(rows, cols.to_vec(), binary, &mut memo)
}

fn count_rows(
    rows: &[usize],
    mut cols: Vec<usize>,
    binary: bool,
    memo: &mut HashMap<(usize, Vec<usize>), Int>,
) -> Int {
    cols.retain(|&c| c > 0);
    cols.sort_unstable();
    let Some((&first, rest)) = rows.split_first() else {
        return if cols.is_empty() { Int::one() } else { Int::zero() };
    };
    if rest.is_empty() && binary {
        // last row must take exactly the remaining column sums
        let ok = cols.iter().all(|&c| c == 1) && cols.len() == first;
        return if ok { Int::one() } else { Int::zero() };
    }
    let key = (rows.len(), cols.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = Int::zero();
    let mut entry = vec![0; cols.len()];
    distribute(first, 0, &cols, binary, &mut entry, &mut |taken| {
        let remaining: Vec<usize> = cols.iter().zip(taken).map(|(c, t)| c - t).collect();
        total += count_rows(rest, remaining, binary, memo);
    });
    memo.insert(key, total.clone());
    total
}

fn distribute(
    left: usize,
    pos: usize,
    caps: &[usize],
    binary: bool,
    entry: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if pos == caps.len() {
        if left == 0 {
            visit(entry);
        }
        return;
    }
    let cap_rest: usize = caps[pos + 1..].iter().map(|&c| if binary { c.min(1) } else { c }).sum();
    let max = if binary { caps[pos].min(1) } else { caps[pos] }.min(left);
    for v in 0..=max {
        if left - v > cap_rest {
            continue;
        }
        entry[pos] = v;
        distribute(left - v, pos + 1, caps, binary, entry, visit);
    }
    entry[pos] = 0;
}

/// Number of maps `f` from the parts of `rows` to the positions of `cols`
/// whose fibres sum to the column values.
pub(crate) fn count_fibre_maps(rows: &[usize], cols: &[usize]) -> Int {
    // completions depend only on the multiset of remaining column values
    fn go(rows: &[usize], cols: Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), Int>) -> Int {
        let Some((&first, rest)) = rows.split_first() else {
            return if cols.iter().all(|&c| c == 0) { Int::one() } else { Int::zero() };
        };
        let key = (rows.len(), cols.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = Int::zero();
        for j in 0..cols.len() {
            if cols[j] >= first {
                let mut next = cols.clone();
                next[j] -= first;
                next.sort_unstable();
                total += go(rest, next, memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }
    let mut sorted = cols.to_vec();
    sorted.sort_unstable();
    go(rows, sorted, &mut HashMap::new())
}

/// Rows of the Jacobi–Trudi determinants `s_λ = det(h_{λ_i - i + j})`,
/// expressed in complete-basis coordinates.
fn jacobi_trudi_matrix(parts: &[Partition]) -> Matrix {
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut m = Matrix::zeros(parts.len(), parts.len());
    for (r, lam) in parts.iter().enumerate() {
        for (mu, c) in jacobi_trudi(lam) {
            m.set(r, index[&mu], rat_from_int(c));
        }
    }
    m
}

/// Laplace expansion of the Jacobi–Trudi determinant along rows, memoized
/// on the set of columns already used. Products of `h_k` are recorded as
/// the partition of their indices.
pub(crate) fn jacobi_trudi(lam: &Partition) -> BTreeMap<Partition, Int> {
    let l = lam.len();
    let mut memo: HashMap<(usize, u64), BTreeMap<Partition, Int>> = HashMap::new();
    expand_minor(lam.parts(), 0, 0, l, &mut memo)
}

fn expand_minor(
    lam: &[usize],
    row: usize,
    used: u64,
    l: usize,
    memo: &mut HashMap<(usize, u64), BTreeMap<Partition, Int>>,
) -> BTreeMap<Partition, Int> {
    if row == l {
        return BTreeMap::from([(Partition::empty(), Int::one())]);
    }
    if let Some(v) = memo.get(&(row, used)) {
        return v.clone();
    }
    let mut out: BTreeMap<Partition, Int> = BTreeMap::new();
    let mut free_seen = 0usize;
    for col in 0..l {
        if used & (1 << col) != 0 {
            continue;
        }
        let sign_neg = free_seen % 2 == 1;
        free_seen += 1;
        // entry h_{λ_row - row + col}
        let k = lam[row] as i64 - row as i64 + col as i64;
        if k < 0 {
            continue;
        }
        let minor = expand_minor(lam, row + 1, used | (1 << col), l, memo);
        for (mu, c) in minor {
            let key = Partition::from_parts(mu.parts().iter().copied().chain([k as usize]));
            let e = out.entry(key).or_insert_with(Int::zero);
            if sign_neg {
                *e -= c;
            } else {
                *e += c;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    memo.insert((row, used), out.clone());
    out
}

/// `c · M` for a sparse coordinate map over the partitions of one degree.
pub(crate) fn apply_sparse(
    t: &Tables,
    m: &Matrix,
    coeffs: &BTreeMap<&Partition, &Scalar>,
) -> BTreeMap<Partition, Scalar> {
    let mut v = vec![Scalar::zero(); t.parts.len()];
    for (p, c) in coeffs {
        v[t.index[*p]] = (*c).clone();
    }
    t.parts
        .iter()
        .cloned()
        .zip(m.left_apply(&v))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn matrix_counts() {
        // h_2 = m_2 + m_11 and e_1^2 = m_2 + 2 m_11
        assert_eq!(count_matrices(&[2], &[2], false), Int::from(1));
        assert_eq!(count_matrices(&[2], &[1, 1], false), Int::from(1));
        assert_eq!(count_matrices(&[1, 1], &[1, 1], true), Int::from(2));
        assert_eq!(count_matrices(&[1, 1], &[2], true), Int::from(1));
        assert_eq!(count_matrices(&[2], &[2], true), Int::from(0));
        assert_eq!(count_fibre_maps(&[1, 1], &[1, 1]), Int::from(2));
        assert_eq!(count_fibre_maps(&[2], &[1, 1]), Int::from(0));
    }

    #[test]
    fn jacobi_trudi_small() {
        // s_11 = h_1^2 - h_2
        let s11 = jacobi_trudi(&p(&[1, 1]));
        assert_eq!(s11.get(&p(&[1, 1])), Some(&Int::from(1)));
        assert_eq!(s11.get(&p(&[2])), Some(&Int::from(-1)));
        assert_eq!(jacobi_trudi(&p(&[3])), BTreeMap::from([(p(&[3]), Int::from(1))]));
    }

    #[test]
    fn tables_are_shared() {
        let a = tables(4);
        let b = tables(4);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.parts.len(), 5);
    }
}
