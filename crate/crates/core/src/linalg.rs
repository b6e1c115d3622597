//! Exact linear algebra over `ℚ`.
//!
//! Ranks of boundary blocks use fraction-free (Bareiss) elimination on an
//! integer copy of the matrix; subspace bookkeeping (kernels, row spaces,
//! solving) goes through rational reduced row echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rootsys::Rational;

/// Sparse matrix stored by columns; each column is a list of `(row, value)`.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn new(nrows: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: Vec::new(),
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, Rational)>>) -> Self {
        debug_assert!(cols.iter().flatten().all(|(r, _)| *r < nrows));
        SparseMatrix { nrows, cols }
    }

    pub fn push_column(&mut self, col: Vec<(usize, Rational)>) {
        debug_assert!(col.iter().all(|(r, _)| *r < self.nrows));
        self.cols.push(col);
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec<(usize, Rational)>] {
        &self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().flatten().all(|(_, v)| v.is_zero())
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.nrows, self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.data[*r][c] += v;
            }
        }
        m
    }

    /// Rank by Bareiss elimination. Each column is scaled to integers first,
    /// which leaves the rank unchanged.
    pub fn rank(&self) -> usize {
        if self.nrows == 0 || self.cols.is_empty() {
            return 0;
        }
        // Work on the transpose (columns as rows) so that scaling is per row.
        let width = self.nrows;
        let mut rows: Vec<Vec<BigInt>> = self
            .cols
            .iter()
            .filter(|c| c.iter().any(|(_, v)| !v.is_zero()))
            .map(|col| {
                let lcm = col
                    .iter()
                    .fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
                let mut row = vec![BigInt::zero(); width];
                for (r, v) in col {
                    row[*r] += v.numer() * (&lcm / v.denom());
                }
                row
            })
            .collect();
        bareiss_rank(&mut rows)
    }
}

/// Fraction-free elimination; destroys `rows`.
pub fn bareiss_rank(rows: &mut [Vec<BigInt>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let n = rows[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..n {
                let v = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Dense rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

/// Reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: DenseMatrix,
    pub pivots: Vec<usize>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Rational::one();
        }
        m
    }

    pub fn from_rows(cols: usize, data: Vec<Vec<Rational>>) -> Self {
        debug_assert!(data.iter().all(|r| r.len() == cols));
        DenseMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = DenseMatrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                m.data[r][c] = v.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        self.data.iter().map(|r| r[c].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        DenseMatrix::from_rows(self.cols, data)
    }

    pub fn scale(&self, s: &Rational) -> DenseMatrix {
        let data = self.data.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
        DenseMatrix::from_rows(self.cols, data)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        DenseMatrix::from_rows(self.cols, data)
    }

    pub fn select_rows(&self, idx: &[usize]) -> DenseMatrix {
        DenseMatrix::from_rows(self.cols, idx.iter().map(|&i| self.data[i].clone()).collect())
    }

    pub fn select_columns(&self, idx: &[usize]) -> DenseMatrix {
        let data = self
            .data
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        DenseMatrix::from_rows(idx.len(), data)
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for j in c..self.cols {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &f * &pivot_row[j];
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: DenseMatrix::from_rows(self.cols, m),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Nonzero rows of the RREF: a basis of the row space.
    pub fn row_space(&self) -> DenseMatrix {
        let rref = self.rref();
        let k = rref.pivots.len();
        DenseMatrix::from_rows(self.cols, rref.matrix.data[..k].to_vec())
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &rref.pivots {
                v[p] = true;
            }
            v
        };
        (0..self.cols)
            .filter(|&c| !pivot_set[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (i, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix.data[i][free].clone();
                }
                v
            })
            .collect()
    }

    /// Solves `self · x = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = self.data.clone();
        for (row, v) in aug.iter_mut().zip(b) {
            row.push(v.clone());
        }
        let rref = DenseMatrix::from_rows(self.cols + 1, aug).rref();
        if rref.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in rref.pivots.iter().enumerate() {
            x[p] = rref.matrix.data[i][self.cols].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{int, rat};
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> DenseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        DenseMatrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    fn sparse_of(m: &DenseMatrix) -> SparseMatrix {
        let cols = (0..m.ncols())
            .map(|c| {
                (0..m.nrows())
                    .filter(|&r| !m.get(r, c).is_zero())
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(m.nrows(), cols)
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(sparse_of(&m).rank(), 2);
        assert_eq!(SparseMatrix::new(3).rank(), 0);
        let half = SparseMatrix::from_columns(2, vec![vec![(0, rat(1, 2))], vec![(0, rat(1, 3))]]);
        assert_eq!(half.rank(), 1);
    }

    #[test]
    fn kernel_and_solve() {
        let m = dense(&[&[1, 2, 3], &[0, 1, 1]]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.mul_vec(&ker[0]).iter().all(Zero::is_zero));
        let b = vec![int(6), int(2)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let inconsistent = dense(&[&[1, 1], &[1, 1]]);
        assert!(inconsistent.solve(&[int(1), int(2)]).is_none());
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_rref(entries in proptest::collection::vec(-3i64..=3, 30), rows in 1usize..=5) {
            let cols = 30 / rows.max(1);
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|r| (0..cols).map(|c| rat(entries[r * cols + c], 1 + (c as i64 % 2))).collect())
                .collect();
            let m = DenseMatrix::from_rows(cols, data);
            prop_assert_eq!(m.rank(), sparse_of(&m).rank());
            let ker = m.kernel();
            prop_assert_eq!(ker.len() + m.rank(), cols);
        }
    }
}
