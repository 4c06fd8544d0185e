use alloc::vec::Vec;

use super::FiberModel;
use crate::linalg::{Matrix, Subspace};
use crate::quadform::QuadraticForm;
use crate::scalars::Field;

/// `g_s(x, y, x*) = (x, y + s phi(x), x* + s psi(y))`, identity on the padding.
pub fn gs_automorphism<F: Field>(model: &FiberModel<F>, s: &F) -> Matrix<F> {
    let mut g = Matrix::identity(model.n());
    let pair = model.pair();
    let (mid, dual) = (model.middle_range(), model.dual_range());
    for (r, row) in mid.clone().enumerate() {
        for c in 0..2 {
            g[(row, c)] = s.clone() * pair.phi[(r, c)].clone();
        }
    }
    for (r, row) in dual.enumerate() {
        for (c, col) in mid.clone().enumerate() {
            g[(row, col)] = s.clone() * pair.psi[(r, c)].clone();
        }
    }
    g
}

/// `Q + t * q(x)`, with `q` taken from the model unless `q_override` (a form on `W`) is given.
pub fn twisted_form<F: Field>(model: &FiberModel<F>, t: &F, q_override: Option<&QuadraticForm<F>>) -> QuadraticForm<F> {
    let q = q_override.unwrap_or(&model.pair().q);
    let mut out = model.form().clone();
    for (i, j, c) in q.terms() {
        out.add_term(i, j, t.clone() * c.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistReport<F> {
    /// `Q ∘ g_s = Q + s^2 q` coefficientwise.
    pub passed: bool,
    /// First monomial `(i, j)` where the two sides differ, with `(lhs, rhs)`.
    pub first_difference: Option<(usize, usize, F, F)>,
    /// `g_s^2 = Id`.
    pub involution: bool,
}

pub fn verify_twist_identity<F: Field>(model: &FiberModel<F>, s: &F) -> TwistReport<F> {
    let g = gs_automorphism(model, s);
    let lhs = model.form().pullback(&g).expect("square matrix of model size");
    let rhs = twisted_form(model, &(s.clone() * s.clone()), None);
    let first_difference = lhs.first_difference(&rhs);
    TwistReport {
        passed: first_difference.is_none(),
        first_difference,
        involution: g.mul(&g) == Matrix::identity(model.n()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NondegeneracyReport<F> {
    /// The twisted form has the same polarization as `Q`.
    pub polar_equal: bool,
    /// First Gram entry where the polarizations differ.
    pub first_polar_difference: Option<(usize, usize)>,
    pub radical_dim: usize,
    pub radical_generator: Option<Vec<F>>,
    /// The twisted form evaluated at the radical generator.
    pub value_on_radical: Option<F>,
    pub nondegenerate: bool,
}

impl<F> NondegeneracyReport<F> {
    pub fn passed(&self) -> bool {
        self.polar_equal && self.nondegenerate
    }
}

pub fn verify_nondegenerate_twist<F: Field>(
    model: &FiberModel<F>,
    t: &F,
    q_override: Option<&QuadraticForm<F>>,
) -> NondegeneracyReport<F> {
    let twisted = twisted_form(model, t, q_override);
    let (b0, b1) = (model.polarization(), twisted.polarize());
    let n = model.n();
    let first_polar_difference =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| b0.gram()[(i, j)] != b1.gram()[(i, j)]);
    let radical = b1.radical();
    let radical_generator = (radical.dim() == 1).then(|| radical.basis()[0].clone());
    let value_on_radical = radical_generator.as_ref().map(|r| twisted.evaluate(r).expect("model length"));
    NondegeneracyReport {
        polar_equal: first_polar_difference.is_none(),
        first_polar_difference,
        radical_dim: radical.dim(),
        radical_generator,
        value_on_radical,
        nondegenerate: twisted.is_nondegenerate(),
    }
}

/// What the descent check establishes.
pub const DESCENT_SCOPE: &str =
    "graph family S_lambda = {(x, lambda phi(x), 0)} only; rationality of the full reduction is not decided";

/// Isotropy of `S_lambda = {(x, lambda phi(x), 0)}` for `Q + c q(x)`:
/// the restriction is `c0 + lambda c1 + lambda^2 c2` as forms on `W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport<F> {
    pub c0: QuadraticForm<F>,
    pub c1: QuadraticForm<F>,
    pub c2: QuadraticForm<F>,
    /// The unique `mu` with `c0 + mu c2 = 0`, when `c1 = 0` and one exists.
    pub lambda_squared: Option<F>,
    /// A square root of `lambda_squared` in the field, if there is one.
    pub lambda: Option<F>,
    /// Direct isotropy check of `S_lambda` for the recovered `lambda`.
    pub graph_isotropic: Option<bool>,
    /// `S_0 = W` is isotropic for the twisted form (false whenever `c q != 0`).
    pub w_isotropic: bool,
}

impl<F> DescentReport<F> {
    pub fn has_solution(&self) -> bool {
        self.lambda.is_some()
    }
}

fn graph_embedding<F: Field>(model: &FiberModel<F>, lambda: &F) -> Matrix<F> {
    let mut e = Matrix::zeros(model.n(), 2);
    e[(0, 0)] = F::one();
    e[(1, 1)] = F::one();
    for (r, row) in model.middle_range().enumerate() {
        for c in 0..2 {
            e[(row, c)] = lambda.clone() * model.pair().phi[(r, c)].clone();
        }
    }
    e
}

/// The cross term `x -> beta(E0 x, E1 x)` as a quadratic form.
fn cross_form<F: Field>(beta: &Matrix<F>, e0: &Matrix<F>, e1: &Matrix<F>) -> QuadraticForm<F> {
    let m = e0.transpose().mul(beta).mul(e1);
    let k = m.rows();
    let mut out = QuadraticForm::zero(k);
    for i in 0..k {
        out.add_term(i, i, m[(i, i)].clone());
        for j in i + 1..k {
            out.add_term(i, j, m[(i, j)].clone() + m[(j, i)].clone());
        }
    }
    out
}

/// Solves `c0 + mu c2 = 0`.
fn solve_pencil<F: Field>(c0: &QuadraticForm<F>, c2: &QuadraticForm<F>) -> Option<F> {
    let pivot = c2.coefficients().iter().position(|c| !c.is_zero());
    let mu = match pivot {
        Some(k) => c0.coefficients()[k].clone() * c2.coefficients()[k].inv()?,
        None => return c0.is_zero().then(F::zero),
    };
    let ok = c0.coefficients().iter().zip(c2.coefficients()).all(|(a, b)| (a.clone() + mu.clone() * b.clone()).is_zero());
    ok.then_some(mu)
}

/// Looks for `lambda` with `S_lambda` isotropic for `Q + twist * q(x)`.
pub fn descent_obstruction<F: Field>(model: &FiberModel<F>, twist: &F) -> DescentReport<F> {
    let form = twisted_form(model, twist, None);
    let e0 = graph_embedding(model, &F::zero());
    let mut e1 = graph_embedding(model, &F::one());
    e1[(0, 0)] = F::zero();
    e1[(1, 1)] = F::zero();
    let c0 = form.pullback(&e0).expect("model rows");
    let c2 = form.pullback(&e1).expect("model rows");
    let c1 = cross_form(form.polarize().gram(), &e0, &e1);
    let lambda_squared = if c1.is_zero() { solve_pencil(&c0, &c2) } else { None };
    let lambda = lambda_squared.as_ref().and_then(F::sqrt);
    let is_isotropic = |l: &F| {
        let e = graph_embedding(model, l);
        let span = Subspace::from_vectors(model.n(), (0..2).map(|c| e.column(c))).expect("model length");
        form.is_isotropic_subspace(&span).expect("model length")
    };
    DescentReport {
        graph_isotropic: lambda.as_ref().map(is_isotropic),
        w_isotropic: is_isotropic(&F::zero()),
        c0,
        c1,
        c2,
        lambda_squared,
        lambda,
    }
}
