use alloc::vec::Vec;

use super::LieSubalgebra;
use crate::error::Error;
use crate::linalg::{Matrix, QuotientMap, Subspace};
use crate::quadform::BilinearForm;
use crate::scalars::Field;

fn check_isotropic<F: Field>(g: &LieSubalgebra<F>, w: &Subspace<F>) -> Result<(), Error> {
    if !g.form().is_isotropic_subspace(w)? {
        return Err(Error::NotIsotropic);
    }
    Ok(())
}

/// `p = {A in g : A w ⊆ w}` for an isotropic `w`.
pub fn parabolic<F: Field>(g: &LieSubalgebra<F>, w: &Subspace<F>) -> Result<LieSubalgebra<F>, Error> {
    check_isotropic(g, w)?;
    stabilizer(g, w)
}

/// `{A in g : A w ⊆ w}` for any `w`, solved in the coordinates of `g`'s basis.
pub fn stabilizer<F: Field>(g: &LieSubalgebra<F>, w: &Subspace<F>) -> Result<LieSubalgebra<F>, Error> {
    if w.ambient_dim() != g.n() {
        return Err(Error::DimensionMismatch { expected: g.n(), found: w.ambient_dim() });
    }
    let to_quotient = w.quotient_map();
    let basis = g.basis_matrices();
    // one column per basis element of g: the stacked images pi(A b) over a basis b of w
    let columns: Vec<Vec<F>> = basis
        .iter()
        .map(|a| w.basis().iter().flat_map(|b| to_quotient.project(&a.mul_vec(b))).collect())
        .collect();
    let rows = w.dim() * to_quotient.target_dim();
    if rows == 0 {
        return Ok(g.clone());
    }
    let kernel = Matrix::from_columns(rows, &columns).kernel_basis();
    let matrices: Vec<Matrix<F>> = kernel.basis().iter().map(|c| g.element(c)).collect();
    LieSubalgebra::from_matrices(g.form().clone(), &matrices)
}

/// The stabilizer of `w` in all of `gl(n)`, as a subspace of `F^(n*n)`.
pub fn gl_stabilizer<F: Field>(n: usize, w: &Subspace<F>) -> Subspace<F> {
    let to_quotient = w.quotient_map();
    let proj = to_quotient.matrix();
    let mut rows = Vec::new();
    for b in w.basis() {
        for r in 0..to_quotient.target_dim() {
            // sum_{k,j} P_rk A_kj b_j
            let mut row = alloc::vec![F::zero(); n * n];
            for k in 0..n {
                if proj[(r, k)].is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate() {
                    row[k * n + j] += proj[(r, k)].clone() * bj.clone();
                }
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Subspace::full(n * n);
    }
    Matrix::from_rows(rows).kernel_basis()
}

/// Second route to [`parabolic`]: intersect `g` with the `gl(n)` stabilizer of `w`.
pub fn parabolic_by_intersection<F: Field>(g: &LieSubalgebra<F>, w: &Subspace<F>) -> Result<LieSubalgebra<F>, Error> {
    check_isotropic(g, w)?;
    let stab = gl_stabilizer(g.n(), w);
    LieSubalgebra::from_space(g.form().clone(), g.space().intersection(&stab)?)
}

/// Direct test of `A w ⊆ w` on a basis of `w`.
pub fn stabilizes<F: Field>(a: &Matrix<F>, w: &Subspace<F>) -> bool {
    w.basis().iter().all(|b| w.contains(&a.mul_vec(b)))
}

/// The element `e ⊗ f + f ⊗ e` of `W* ⊗ W*` for covectors `e, f` (coordinates in the dual
/// of the chosen basis of `W`), as the Gram matrix `e fᵀ + f eᵀ`.
pub fn symmetric_square_tensor<F: Field>(e: &[F], f: &[F]) -> Matrix<F> {
    let k = e.len();
    Matrix::from_fn(k, k, |i, j| e[i].clone() * f[j].clone() + f[i].clone() * e[j].clone())
}

/// The maps used to split `g/p` along `0 -> Hom(W, W⊥/W) -> g/p -> D -> 0`.
///
/// For `A` in `g`:
/// - `hom_class(A)` is `A|_W mod W`, a `dim(V/W) x dim W` matrix (`Hom(W, V/W)`);
/// - `d_form(A)` is the bilinear form `(w, w') -> beta(A w, w')` on `W`, i.e. the image in
///   `Hom(W, V/W⊥) ≅ W* ⊗ W*`.
#[derive(Clone, Debug)]
pub struct QuotientMaps<F> {
    w: Subspace<F>,
    w_perp: Subspace<F>,
    mod_w: QuotientMap<F>,
    beta: BilinearForm<F>,
    /// `Hom(W, W⊥/W)` inside `Hom(W, V/W)` (flattened row-major).
    hom_perp: Subspace<F>,
}

/// Classification of one element of `g` in `g/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementClass<F> {
    pub in_parabolic: bool,
    /// Flattened `A|_W mod W`.
    pub hom_class: Vec<F>,
    /// The class lies in the `Hom(W, W⊥/W)` layer.
    pub in_hom_layer: bool,
    /// Flattened `d_form(A)`.
    pub d_form: Vec<F>,
}

impl<F: Field> ElementClass<F> {
    pub fn is_zero(&self) -> bool {
        self.hom_class.iter().all(F::is_zero)
    }

    pub fn d_component_is_zero(&self) -> bool {
        self.d_form.iter().all(F::is_zero)
    }
}

impl<F: Field> QuotientMaps<F> {
    pub fn new(beta: BilinearForm<F>, w: &Subspace<F>) -> Self {
        let w_perp = beta.orthogonal_complement(w);
        let mod_w = w.quotient_map();
        let k = w.dim();
        let q = mod_w.target_dim();
        // columns of the Hom matrix must lie in pi(W⊥)
        let perp_image: Vec<Vec<F>> = w_perp.basis().iter().map(|v| mod_w.project(v)).collect();
        let mut gens = Vec::new();
        for col in 0..k {
            for v in &perp_image {
                let mut m = alloc::vec![F::zero(); q * k];
                for (r, x) in v.iter().enumerate() {
                    m[r * k + col] = x.clone();
                }
                gens.push(m);
            }
        }
        let hom_perp = Subspace::from_vectors(q * k, gens).expect("hom length");
        Self { w: w.clone(), w_perp, mod_w, beta, hom_perp }
    }

    pub fn w(&self) -> &Subspace<F> {
        &self.w
    }

    pub fn w_perp(&self) -> &Subspace<F> {
        &self.w_perp
    }

    pub fn hom_layer(&self) -> &Subspace<F> {
        &self.hom_perp
    }

    /// `dim W * dim V/W`.
    pub fn hom_dim(&self) -> usize {
        self.w.dim() * self.mod_w.target_dim()
    }

    pub fn hom_class(&self, a: &Matrix<F>) -> Vec<F> {
        let k = self.w.dim();
        let q = self.mod_w.target_dim();
        let mut out = alloc::vec![F::zero(); q * k];
        for (col, b) in self.w.basis().iter().enumerate() {
            for (r, x) in self.mod_w.project(&a.mul_vec(b)).into_iter().enumerate() {
                out[r * k + col] = x;
            }
        }
        out
    }

    pub fn d_form(&self, a: &Matrix<F>) -> Vec<F> {
        let basis = self.w.basis();
        let images: Vec<Vec<F>> = basis.iter().map(|b| a.mul_vec(b)).collect();
        let mut out = Vec::with_capacity(basis.len() * basis.len());
        for img in &images {
            for b in basis {
                out.push(self.beta.eval(img, b));
            }
        }
        out
    }

    pub fn classify(&self, a: &Matrix<F>) -> ElementClass<F> {
        let hom_class = self.hom_class(a);
        let in_parabolic = hom_class.iter().all(F::is_zero);
        ElementClass {
            in_parabolic,
            in_hom_layer: self.hom_perp.contains(&hom_class),
            hom_class,
            d_form: self.d_form(a),
        }
    }
}

/// Verified data of `0 -> Hom(W, W⊥/W) -> g/p -> D -> 0`.
#[derive(Clone, Debug)]
pub struct QuotientReport<F> {
    pub algebra_dim: usize,
    pub parabolic_dim: usize,
    /// `dim g/p`, measured as the rank of `A -> A|_W mod W` on `g`.
    pub quotient_dim: usize,
    /// `dim Hom(W, W⊥/W)`.
    pub hom_dim: usize,
    /// Dimension of the classes with zero `D`-component.
    pub sub_dim: usize,
    /// Dimension of the image in `W* ⊗ W*`.
    pub d_dim: usize,
    /// The kernel of `A -> A|_W mod W` on `g` is exactly `p`.
    pub kernel_is_parabolic: bool,
    /// Classes with zero `D`-component fill all of `Hom(W, W⊥/W)`.
    pub sub_is_full_hom: bool,
    /// The image in `W* ⊗ W*` is the line spanned by `e ⊗ f + f ⊗ e`.
    pub d_line_matches: bool,
    /// The `D`-line, flattened `dim W x dim W` Gram matrices.
    pub d_line: Subspace<F>,
    pub w_perp: Subspace<F>,
}

impl<F: Field> QuotientReport<F> {
    pub fn passed(&self) -> bool {
        self.kernel_is_parabolic
            && self.sub_is_full_hom
            && self.d_line_matches
            && self.d_dim == 1
            && self.sub_dim + self.d_dim == self.quotient_dim
            && self.algebra_dim - self.parabolic_dim == self.quotient_dim
    }
}

pub fn quotient_sequence_report<F: Field>(
    g: &LieSubalgebra<F>,
    p: &LieSubalgebra<F>,
    w: &Subspace<F>,
) -> Result<QuotientReport<F>, Error> {
    if !p.is_subalgebra_of(g) {
        return Err(Error::NotContained);
    }
    check_isotropic(g, w)?;
    let maps = QuotientMaps::new(g.form().polarize(), w);
    let basis = g.basis_matrices();
    let hom_images: Vec<Vec<F>> = basis.iter().map(|a| maps.hom_class(a)).collect();
    let hom_len = maps.hom_dim();
    let theta = Matrix::from_columns(hom_len, &hom_images);
    let quotient_dim = theta.rank();
    let kernel_in_g: Vec<Matrix<F>> = theta.kernel_basis().basis().iter().map(|c| g.element(c)).collect();
    let kernel_space = Subspace::from_vectors(g.n() * g.n(), kernel_in_g.iter().map(|m| m.entries().to_vec()))?;
    let kernel_is_parabolic = kernel_space == *p.space();

    let k = w.dim();
    let d_images: Vec<Vec<F>> = basis.iter().map(|a| maps.d_form(a)).collect();
    let delta = Matrix::from_columns(k * k, &d_images);
    let d_line = Subspace::from_vectors(k * k, d_images.iter().cloned())?;
    let sub_classes: Vec<Vec<F>> =
        delta.kernel_basis().basis().iter().map(|c| maps.hom_class(&g.element(c))).collect();
    let sub = Subspace::from_vectors(hom_len, sub_classes)?;
    let sub_is_full_hom = sub == *maps.hom_layer();

    let d_line_matches = if k == 2 {
        let e = [F::one(), F::zero()];
        let f = [F::zero(), F::one()];
        let generator = symmetric_square_tensor(&e, &f);
        d_line == Subspace::from_vectors(4, [generator.into_entries()])?
    } else {
        false
    };

    Ok(QuotientReport {
        algebra_dim: g.dim(),
        parabolic_dim: p.dim(),
        quotient_dim,
        hom_dim: maps.hom_layer().dim(),
        sub_dim: sub.dim(),
        d_dim: d_line.dim(),
        kernel_is_parabolic,
        sub_is_full_hom,
        d_line_matches,
        d_line,
        w_perp: maps.w_perp().clone(),
    })
}
