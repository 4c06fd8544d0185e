use alloc::vec::Vec;

use super::{ExactMatrix, Matrix, Subspace};
use crate::scalars::{Field, Gf2};

/// A GF(2) matrix with each row packed into 64-bit words.
///
/// Row operations are word-wise exclusive-or. Semantics match [`Matrix<Gf2>`]; the two
/// convert losslessly.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = cols.div_ceil(64).max(1);
        Self { rows, cols, words_per_row, data: alloc::vec![0; rows * words_per_row] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Square `n x n` matrix from `n * n` bits in row-major order, bit `i * n + j` is entry `(i, j)`.
    /// Requires `n <= 8`.
    pub fn from_index(n: usize, index: u64) -> Self {
        assert!(n * n <= 64, "from_index supports n <= 8");
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * m.words_per_row] = (index >> (i * n)) & ((1u64 << n) - 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "bit matrix index out of range");
        (self.data[i * self.words_per_row + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "bit matrix index out of range");
        let w = &mut self.data[i * self.words_per_row + j / 64];
        if value {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words_per_row;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn from_matrix(m: &Matrix<Gf2>) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn to_matrix(&self) -> Matrix<Gf2> {
        Matrix::from_fn(self.rows, self.cols, |i, j| if self.get(i, j) { Gf2::one() } else { Gf2::zero() })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// # Panics
    ///
    /// Panics if the inner dimensions disagree.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        let w = out.words_per_row;
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    for (o, r) in out.data[i * w..(i + 1) * w].iter_mut().zip(rhs.row_words(k)) {
                        *o ^= r;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a ^ b).collect();
        Self { data, ..*self }
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in 0..m.rows {
                if i != r && m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank via forward elimination only.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in r + 1..m.rows {
                if m.get(i, c) {
                    m.xor_row_into(r, i);
                }
            }
            r += 1;
            if r == m.rows {
                break;
            }
        }
        r
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn mul_vec(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| (0..self.cols).filter(|&j| v[j] && self.get(i, j)).count() % 2 == 1).collect()
    }

    /// Column `j` as a bit mask (requires `rows <= 64`).
    pub fn column_mask(&self, j: usize) -> u64 {
        assert!(self.rows <= 64, "column_mask needs at most 64 rows");
        (0..self.rows).filter(|&i| self.get(i, j)).fold(0, |acc, i| acc | (1 << i))
    }
}

fn bits_to_gf2(bits: impl Iterator<Item = bool>) -> Vec<Gf2> {
    bits.map(|b| if b { Gf2::one() } else { Gf2::zero() }).collect()
}

impl ExactMatrix<Gf2> for BitMatrix {
    fn nrows(&self) -> usize {
        self.rows
    }

    fn ncols(&self) -> usize {
        self.cols
    }

    fn rank(&self) -> usize {
        BitMatrix::rank(self)
    }

    fn kernel_basis(&self) -> Subspace<Gf2> {
        let (e, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = alloc::vec![false; self.cols];
                v[f] = true;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = e.get(i, f);
                }
                bits_to_gf2(v.into_iter())
            })
            .collect::<Vec<_>>();
        Subspace::from_vectors(self.cols, vectors).expect("kernel vectors have the ambient length")
    }

    fn solve(&self, rhs: &[Gf2]) -> Option<Vec<Gf2>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, !r.is_zero());
        }
        let (e, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = alloc::vec![false; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = e.get(i, self.cols);
        }
        Some(bits_to_gf2(x.into_iter()))
    }
}
