use alloc::vec::Vec;

use super::sym2_index;
use crate::error::Error;
use crate::linalg::{unit, Matrix, Subspace};
use crate::scalars::{Field, FiniteField};

/// A quadratic form `Q(v) = sum_{i <= j} C[i][j] v_i v_j` on `F^n`.
///
/// Coefficients are the coordinates of `Q` in the monomial basis of `Sym^2(V*)`. There is no
/// symmetric-matrix representation: in characteristic two it would lose the diagonal terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticForm<F> {
    dim: usize,
    coeffs: Vec<F>,
}

/// The symmetric bilinear form `beta(v, w) = Q(v + w) + Q(v) + Q(w)` as a Gram matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BilinearForm<F> {
    gram: Matrix<F>,
}

/// Result of [`QuadraticForm::direct_sum`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DirectSum<F> {
    pub form: QuadraticForm<F>,
    /// Both summands have odd dimension, so two radical lines meet and the sum cannot be
    /// non-degenerate.
    pub odd_odd: bool,
}

impl<F: Field> QuadraticForm<F> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, coeffs: alloc::vec![F::zero(); dim * (dim + 1) / 2] }
    }

    /// Builds a form from `(i, j, c)` terms with `i <= j` (0-based); repeated terms add up.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let mut q = Self::zero(dim);
        for (i, j, c) in terms {
            q.add_term(i, j, c);
        }
        q
    }

    /// `from_terms` with unit coefficients.
    pub fn from_monomials(dim: usize, monomials: &[(usize, usize)]) -> Self {
        Self::from_terms(dim, monomials.iter().map(|&(i, j)| (i, j, F::one())))
    }

    /// The hyperbolic plane `x_1 x_2`.
    pub fn hyperbolic_plane() -> Self {
        Self::from_monomials(2, &[(0, 1)])
    }

    /// The orthogonal sum of `m` hyperbolic planes, coordinates paired `(2i, 2i+1)`.
    pub fn hyperbolic(m: usize) -> Self {
        let mut q = Self::zero(0);
        for _ in 0..m {
            q = q.direct_sum(&Self::hyperbolic_plane()).form;
        }
        q
    }

    /// The square `l(v)^2 = sum l_i^2 v_i^2` of a linear form.
    pub fn square_of_linear(l: &[F]) -> Self {
        Self::from_terms(l.len(), l.iter().enumerate().map(|(i, c)| (i, i, c.frobenius())))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// # Panics
    ///
    /// Panics unless `i <= j < dim`.
    pub fn coeff(&self, i: usize, j: usize) -> &F {
        assert!(i <= j && j < self.dim, "coefficient index must satisfy i <= j < dim");
        &self.coeffs[sym2_index(self.dim, i, j)]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: F) {
        assert!(i <= j && j < self.dim, "coefficient index must satisfy i <= j < dim");
        let k = sym2_index(self.dim, i, j);
        self.coeffs[k] = c;
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: F) {
        assert!(i <= j && j < self.dim, "coefficient index must satisfy i <= j < dim");
        let k = sym2_index(self.dim, i, j);
        self.coeffs[k] += c;
    }

    /// Coordinates in the monomial basis `x_i x_j`, `i <= j`, lexicographic.
    pub fn coefficients(&self) -> &[F] {
        &self.coeffs
    }

    pub fn from_coefficients(dim: usize, coeffs: Vec<F>) -> Result<Self, Error> {
        let expected = dim * (dim + 1) / 2;
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: coeffs.len() });
        }
        Ok(Self { dim, coeffs })
    }

    /// Nonzero terms `(i, j, c)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i..n).map(move |j| (i, j)))
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    pub fn evaluate(&self, v: &[F]) -> Result<F, Error> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let mut acc = F::zero();
        for (i, j, c) in self.terms() {
            if v[i].is_zero() || v[j].is_zero() {
                continue;
            }
            acc += c.clone() * v[i].clone() * v[j].clone();
        }
        Ok(acc)
    }

    /// The polarization map `Q -> beta`. Off-diagonal Gram entries are the cross coefficients;
    /// the diagonal is zero.
    pub fn polarize(&self) -> BilinearForm<F> {
        let n = self.dim;
        let gram = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            core::cmp::Ordering::Equal => F::zero(),
            core::cmp::Ordering::Less => self.coeff(i, j).clone(),
            core::cmp::Ordering::Greater => self.coeff(j, i).clone(),
        });
        BilinearForm { gram }
    }

    /// The kernel of `v -> beta(v, .)`.
    pub fn radical(&self) -> Subspace<F> {
        self.polarize().gram.kernel_basis()
    }

    /// Even `n`: the radical is zero. Odd `n`: the radical is a line on which `Q` is nonzero.
    pub fn is_nondegenerate(&self) -> bool {
        let rad = self.radical();
        if self.dim.is_multiple_of(2) {
            rad.dim() == 0
        } else {
            rad.dim() == 1 && !self.evaluate(&rad.basis()[0]).expect("radical vector length").is_zero()
        }
    }

    /// `Q` vanishes on `w`: equivalently `Q(b_i) = 0` for a basis and `beta(b_i, b_j) = 0` for `i < j`.
    pub fn is_isotropic_subspace(&self, w: &Subspace<F>) -> Result<bool, Error> {
        if w.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: w.ambient_dim() });
        }
        let beta = self.polarize();
        let basis = w.basis();
        for (i, b) in basis.iter().enumerate() {
            if !self.evaluate(b)?.is_zero() {
                return Ok(false);
            }
            for c in &basis[i + 1..] {
                if !beta.eval(b, c).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Orthogonal sum on the concatenated coordinates (`self` first).
    pub fn direct_sum(&self, other: &Self) -> DirectSum<F> {
        let n = self.dim + other.dim;
        let mut q = Self::zero(n);
        for (i, j, c) in self.terms() {
            q.set_coeff(i, j, c.clone());
        }
        for (i, j, c) in other.terms() {
            q.set_coeff(i + self.dim, j + self.dim, c.clone());
        }
        DirectSum { form: q, odd_odd: self.dim % 2 == 1 && other.dim % 2 == 1 }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { dim: self.dim, coeffs })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self { dim: self.dim, coeffs: self.coeffs.iter().map(|a| c.clone() * a.clone()).collect() }
    }

    /// The form `x -> Q(M x)` on `F^k` for an `n x k` matrix `M`, computed coefficient-wise.
    pub fn pullback(&self, m: &Matrix<F>) -> Result<Self, Error> {
        if m.rows() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: m.rows() });
        }
        let k = m.cols();
        let mut out = Self::zero(k);
        for (i, j, c) in self.terms() {
            // c * (M x)_i (M x)_j = c * sum_{a,b} M_ia M_jb x_a x_b
            for a in 0..k {
                if m[(i, a)].is_zero() {
                    continue;
                }
                for b in 0..k {
                    if m[(j, b)].is_zero() {
                        continue;
                    }
                    let term = c.clone() * m[(i, a)].clone() * m[(j, b)].clone();
                    out.add_term(a.min(b), a.max(b), term);
                }
            }
        }
        Ok(out)
    }

    /// Maps every coefficient through `f`, e.g. to extend scalars.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> QuadraticForm<G> {
        QuadraticForm { dim: self.dim, coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// First monomial (lexicographic) where two forms differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, F, F)> {
        if self.dim != other.dim {
            return None;
        }
        let n = self.dim;
        (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.coeff(i, j) != other.coeff(i, j))
            .map(|(i, j)| (i, j, self.coeff(i, j).clone(), other.coeff(i, j).clone()))
    }
}

impl<F: FiniteField> QuadraticForm<F> {
    /// Largest `log2(|F|) * dim` accepted by [`Self::count_isotropic_vectors`].
    pub const ENUMERATION_BITS: usize = 24;

    /// Number of `v` with `Q(v) = 0` by exhaustive enumeration.
    pub fn count_isotropic_vectors(&self, include_zero: bool) -> Result<u64, Error> {
        let bits_per = F::ORDER.trailing_zeros() as usize;
        let bits = bits_per * self.dim;
        if bits > Self::ENUMERATION_BITS {
            return Err(Error::EnumerationBound { bits, limit: Self::ENUMERATION_BITS });
        }
        let mut count = 0u64;
        let mut v = alloc::vec![F::zero(); self.dim];
        for idx in 0..(1usize << bits) {
            for (c, x) in v.iter_mut().enumerate() {
                *x = F::from_index((idx >> (c * bits_per)) & (F::ORDER - 1));
            }
            if self.evaluate(&v)?.is_zero() {
                count += 1;
            }
        }
        if !include_zero {
            count -= 1;
        }
        Ok(count)
    }
}

impl<F: Field> BilinearForm<F> {
    pub fn from_gram(gram: Matrix<F>) -> Self {
        Self { gram }
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, v: &[F], w: &[F]) -> F {
        let gw = self.gram.mul_vec(w);
        let mut acc = F::zero();
        for (a, b) in v.iter().zip(&gw) {
            acc += a.clone() * b.clone();
        }
        acc
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    /// `beta(v, v) = 0` for all `v`, i.e. symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_symmetric() && (0..self.dim()).all(|i| self.gram[(i, i)].is_zero())
    }

    pub fn radical(&self) -> Subspace<F> {
        self.gram.kernel_basis()
    }

    /// `{v : beta(v, w) = 0 for all w in sub}`.
    pub fn orthogonal_complement(&self, sub: &Subspace<F>) -> Subspace<F> {
        if sub.dim() == 0 {
            return Subspace::full(self.dim());
        }
        sub.basis_matrix().mul(&self.gram).kernel_basis()
    }

    /// `beta(e_i, e_j)` for the standard basis.
    pub fn on_basis(&self, i: usize, j: usize) -> F {
        let n = self.dim();
        self.eval(&unit(n, i), &unit(n, j))
    }
}
