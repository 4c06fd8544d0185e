//! Single-fiber models of the orthogonal bundles `W ⊕ M ⊕ W*` with
//! `Q(x + y + x*) = <x, x*> + Q_M(y)`, plus optional hyperbolic padding.
//!
//! Coordinates are always ordered `W (2) | M | W* (2) | padding (2m)`.

mod phi;
mod twist;

pub use phi::{d_layer_representative, phi_class_in_quotient, realize_phi, PhiClassReport};
pub use twist::{
    descent_obstruction, gs_automorphism, twisted_form, verify_nondegenerate_twist, verify_twist_identity,
    DescentReport, NondegeneracyReport, TwistReport, DESCENT_SCOPE,
};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::linalg::Matrix;
use crate::quadform::{BilinearForm, QuadraticForm};
use crate::scalars::Field;

/// The space of traceless 2x2 matrices `[[a, b], [c, a]]` with the determinant `a^2 + bc`,
/// in coordinates `(a, b, c)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Sl2Fiber;

impl Sl2Fiber {
    pub fn det_form<F: Field>() -> QuadraticForm<F> {
        QuadraticForm::from_monomials(3, &[(0, 0), (1, 2)])
    }

    pub fn to_matrix<F: Field>(v: &[F]) -> Matrix<F> {
        Matrix::from_rows(alloc::vec![
            alloc::vec![v[0].clone(), v[1].clone()],
            alloc::vec![v[2].clone(), v[0].clone()],
        ])
    }

    /// `Tr(v w)`.
    pub fn trace_pairing<F: Field>(v: &[F], w: &[F]) -> F {
        let p = Self::to_matrix(v).mul(&Self::to_matrix(w));
        p[(0, 0)].clone() + p[(1, 1)].clone()
    }

    pub fn identity<F: Field>() -> Vec<F> {
        alloc::vec![F::one(), F::zero(), F::zero()]
    }

    /// The nilpotent `[[0, 1], [0, 0]]`.
    pub fn nilpotent<F: Field>() -> Vec<F> {
        alloc::vec![F::zero(), F::one(), F::zero()]
    }
}

/// `phi : W -> M`, `psi : M -> W*` and `q = Q_M ∘ phi` on `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPair<F> {
    /// `dim M x 2`.
    pub phi: Matrix<F>,
    /// `2 x dim M`.
    pub psi: Matrix<F>,
    pub q: QuadraticForm<F>,
}

impl<F: Field> AdjointPair<F> {
    /// Builds `psi` from `<x, psi y> = c * beta_M(phi x, y)` and `q` as `Q_M ∘ phi`.
    pub fn from_phi(middle: &QuadraticForm<F>, phi: Matrix<F>, scale: &F) -> Self {
        let beta = middle.polarize();
        // <e_i, psi y> = beta(phi e_i, y), so row i of psi is row i of phi^T B
        let psi = phi.transpose().mul(beta.gram()).scale(scale);
        let q = middle.pullback(&phi).expect("phi has dim M rows");
        Self { phi, psi, q }
    }

    /// First `(i, j)` with `beta(phi e_i, e_j) != (psi e_j)_i`, if any.
    pub fn adjoint_defect(&self, middle: &QuadraticForm<F>) -> Option<(usize, usize)> {
        let lhs = self.phi.transpose().mul(middle.polarize().gram());
        (0..2)
            .flat_map(|i| (0..self.psi.cols()).map(move |j| (i, j)))
            .find(|&(i, j)| lhs[(i, j)] != self.psi[(i, j)])
    }

    pub fn image_is_isotropic(&self, middle: &QuadraticForm<F>) -> bool {
        let beta = middle.polarize();
        let restricted = self.phi.transpose().mul(beta.gram()).mul(&self.phi);
        restricted.is_zero()
    }

    /// `q` has zero polarization and is nonzero.
    pub fn q_is_square_of_linear(&self) -> bool {
        !self.q.is_zero() && self.q.polarize().gram().is_zero()
    }

    pub fn psi_after_phi(&self) -> Matrix<F> {
        self.psi.mul(&self.phi)
    }
}

/// `phi(x1, x2) = x1 Id + x2 N` into `(sl2, det)` in coordinates `(a, b, c)`.
pub fn build_adjoint_pair<F: Field>() -> AdjointPair<F> {
    let phi = Matrix::from_columns(3, &[Sl2Fiber::identity(), Sl2Fiber::nilpotent()]);
    AdjointPair::from_phi(&Sl2Fiber::det_form(), phi, &F::one())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// `M = sl2` in coordinates `(b, c, a)`, `Q_M = a^2 + bc`.
    So7,
    /// `M = End(2)` in coordinates `(a, b, d, c)`, `Q_M = ad + bc`.
    So8Hat,
    /// `M = U ⊕ U*` in coordinates `(u1, u2, u1*, u2*)`, `Q_M = u1^2 + u1*^2 + <u, u*>`.
    So8B,
}

impl ModelKind {
    pub const ALL: [ModelKind; 3] = [ModelKind::So7, ModelKind::So8Hat, ModelKind::So8B];

    pub fn middle_dim(self) -> usize {
        match self {
            ModelKind::So7 => 3,
            ModelKind::So8Hat | ModelKind::So8B => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::So7 => "so7",
            ModelKind::So8Hat => "so8-hat",
            ModelKind::So8B => "so8-B",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    fn middle_form<F: Field>(self) -> QuadraticForm<F> {
        match self {
            ModelKind::So7 => QuadraticForm::from_monomials(3, &[(0, 1), (2, 2)]),
            ModelKind::So8Hat => QuadraticForm::from_monomials(4, &[(0, 2), (1, 3)]),
            ModelKind::So8B => QuadraticForm::from_monomials(4, &[(0, 0), (2, 2), (0, 2), (1, 3)]),
        }
    }

    fn phi<F: Field>(self) -> Matrix<F> {
        let (o, z) = (F::one(), F::zero());
        let cols = match self {
            // x1 -> Id (a-slot), x2 -> N (b-slot)
            ModelKind::So7 => [alloc::vec![z.clone(), z.clone(), o.clone()], alloc::vec![o, z.clone(), z]],
            // x1 -> a + d, x2 -> b
            ModelKind::So8Hat => [
                alloc::vec![o.clone(), z.clone(), o.clone(), z.clone()],
                alloc::vec![z.clone(), o, z.clone(), z],
            ],
            // inclusion of U
            ModelKind::So8B => [
                alloc::vec![o.clone(), z.clone(), z.clone(), z.clone()],
                alloc::vec![z.clone(), o, z.clone(), z],
            ],
        };
        Matrix::from_columns(self.middle_dim(), &cols)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fiber model `W ⊕ M ⊕ W* ⊕ H^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberModel<F> {
    kind: ModelKind,
    pad: usize,
    middle: QuadraticForm<F>,
    pair: AdjointPair<F>,
    form: QuadraticForm<F>,
}

impl<F: Field> FiberModel<F> {
    pub fn new(kind: ModelKind, pad: usize) -> Self {
        Self::with_psi_scale(kind, pad, &F::one())
    }

    /// As [`Self::new`], with `psi` multiplied by `scale` (1 gives the adjoint pair).
    pub fn with_psi_scale(kind: ModelKind, pad: usize, scale: &F) -> Self {
        let middle = kind.middle_form::<F>();
        let pair = AdjointPair::from_phi(&middle, kind.phi(), scale);
        let md = kind.middle_dim();
        let n = 4 + md + 2 * pad;
        let mut form = QuadraticForm::zero(n);
        form.add_term(0, 2 + md, F::one());
        form.add_term(1, 3 + md, F::one());
        for (i, j, c) in middle.terms() {
            form.add_term(2 + i, 2 + j, c.clone());
        }
        for h in 0..pad {
            form.add_term(4 + md + 2 * h, 5 + md + 2 * h, F::one());
        }
        Self { kind, pad, middle, pair, form }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn pad(&self) -> usize {
        self.pad
    }

    pub fn n(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &QuadraticForm<F> {
        &self.form
    }

    pub fn middle_form(&self) -> &QuadraticForm<F> {
        &self.middle
    }

    pub fn pair(&self) -> &AdjointPair<F> {
        &self.pair
    }

    pub fn polarization(&self) -> BilinearForm<F> {
        self.form.polarize()
    }

    pub fn w_range(&self) -> Range<usize> {
        0..2
    }

    pub fn middle_range(&self) -> Range<usize> {
        2..2 + self.kind.middle_dim()
    }

    pub fn dual_range(&self) -> Range<usize> {
        let m = self.kind.middle_dim();
        2 + m..4 + m
    }

    /// `q` extended by zero to all coordinates, i.e. `v -> q(x)`.
    pub fn q_on_total(&self) -> QuadraticForm<F> {
        let mut out = QuadraticForm::zero(self.n());
        for (i, j, c) in self.pair.q.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    /// Human-readable description, e.g. `so7+H^1 (n=9)`.
    pub fn label(&self) -> String {
        if self.pad == 0 {
            alloc::format!("{} (n={})", self.kind, self.n())
        } else {
            alloc::format!("{}+H^{} (n={})", self.kind, self.pad, self.n())
        }
    }
}
