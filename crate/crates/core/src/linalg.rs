//! Exact linear algebra over the rationals.
//!
//! Dense matrices are used for the small transition tables of `symfunc`;
//! the bimodule and nilcoxeter checks work with sparse rows.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{fmt_scalar, Scalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        let idx = r * self.cols + c;
        self.data[idx] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, &(a * b));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix, skipping zero entries of the vector.
    pub fn left_apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Scalar::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, b) in self.row(r).iter().enumerate() {
                if !b.is_zero() {
                    out[c] += a * b;
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).clone();
            if !p.is_one() {
                let pinv = p.recip();
                a.scale_row(col, &pinv);
                inv.scale_row(col, &pinv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Some(inv)
    }

    pub fn rank(&self) -> usize {
        let rows = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c, v.clone()))
                    .collect::<BTreeMap<_, _>>()
            })
            .collect();
        sparse_rank(rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, f: &Scalar) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * f;
            }
        }
    }

    // row[target] -= f * row[source]
    fn axpy_row(&mut self, target: usize, source: usize, f: &Scalar) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let delta = f * s;
            self.data[target * self.cols + c] -= delta;
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fmt_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse row vector.
pub type SparseRow = BTreeMap<usize, Scalar>;

/// Rank of a matrix given by sparse rows, by exact elimination.
pub fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    // pivot column -> reduced row with leading entry 1 at that column
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, lead_val)) = row.iter().next() else {
                break;
            };
            match pivots.get(&lead) {
                Some(prow) => {
                    let f = lead_val.clone();
                    for (c, v) in prow {
                        let e = row.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &f * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = lead_val.recip();
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dimension of the solution space of a homogeneous system in `unknowns`
/// variables whose equations are the given sparse rows.
pub fn nullity(equations: Vec<SparseRow>, unknowns: usize) -> usize {
    unknowns - sparse_rank(equations)
}

/// Sparse square matrix keyed by `(row, col)`.
pub type SparseMatrix = BTreeMap<(usize, usize), Scalar>;

/// A finite-dimensional module given by the matrices of a generating set.
/// Column `j` of each matrix holds the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub dim: usize,
    pub generators: Vec<SparseMatrix>,
}

/// `dim Hom(P, M)` for two representations of the same generating set,
/// as the nullity of `X·ρ_P(g) = ρ_M(g)·X` over all generators `g`.
pub fn hom_dimension(p: &Representation, m: &Representation) -> usize {
    assert_eq!(p.generators.len(), m.generators.len(), "representations of different algebras");
    let unknowns = m.dim * p.dim;
    let var = |r: usize, k: usize| r * p.dim + k;
    let mut equations = Vec::new();
    for (gp, gm) in p.generators.iter().zip(&m.generators) {
        let mut p_by_col: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ((k, c), v) in gp {
            p_by_col.entry(*c).or_default().push((*k, v));
        }
        let mut m_by_row: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ((r, k), v) in gm {
            m_by_row.entry(*r).or_default().push((*k, v));
        }
        for r in 0..m.dim {
            for c in 0..p.dim {
                let mut row = SparseRow::new();
                for (k, v) in p_by_col.get(&c).into_iter().flatten() {
                    *row.entry(var(r, *k)).or_insert_with(Scalar::zero) += *v;
                }
                for (k, v) in m_by_row.get(&r).into_iter().flatten() {
                    *row.entry(var(*k, c)).or_insert_with(Scalar::zero) -= *v;
                }
                row.retain(|_, v| !v.is_zero());
                if !row.is_empty() {
                    equations.push(row);
                }
            }
        }
    }
    nullity(equations, unknowns)
}
