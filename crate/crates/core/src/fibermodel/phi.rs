use alloc::vec::Vec;

use super::FiberModel;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::ortho::{lie_algebra, standard_plane, ElementClass, LieSubalgebra, LieVariant, QuotientMaps};
use crate::scalars::Field;

/// An element `A` of `g` with `A e_j = phi(e_j)` modulo `W` for `j = 1, 2`, where `phi` takes
/// values in the middle summand. `None` when no such element exists.
pub fn realize_phi<F: Field>(model: &FiberModel<F>, g: &LieSubalgebra<F>, phi: &Matrix<F>) -> Option<Matrix<F>> {
    let n = model.n();
    let mid = model.middle_range();
    let basis = g.basis_matrices();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..2 {
        for r in 2..n {
            rows.push(basis.iter().map(|b| b[(r, j)].clone()).collect::<Vec<F>>());
            rhs.push(if mid.contains(&r) { phi[(r - mid.start, j)].clone() } else { F::zero() });
        }
    }
    let coords = Matrix::from_rows(rows).solve(&rhs)?;
    Some(g.element(&coords))
}

/// First basis element of `g` whose image in `W* ⊗ W*` is nonzero.
pub fn d_layer_representative<F: Field>(g: &LieSubalgebra<F>, maps: &QuotientMaps<F>) -> Option<Matrix<F>> {
    g.basis_matrices().into_iter().find(|a| !maps.classify(a).d_component_is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiClassReport<F> {
    pub algebra_dim: usize,
    pub parabolic_dim: usize,
    pub a_phi: Option<Matrix<F>>,
    pub class: Option<ElementClass<F>>,
    /// Class of [`d_layer_representative`], for comparison.
    pub d_layer_class: Option<ElementClass<F>>,
}

impl<F: Field> PhiClassReport<F> {
    /// `A_phi` exists, is outside `p`, has zero `D`-component and lies in `Hom(W, W⊥/W)`.
    pub fn passed(&self) -> bool {
        self.class
            .as_ref()
            .is_some_and(|c| !c.in_parabolic && c.in_hom_layer && c.d_component_is_zero())
    }
}

/// Realizes `phi` (the model's, or `phi_override`) inside the smooth `so(Q)` and classifies it
/// in `so/p` for `p` the stabilizer of `W = span{e1, e2}`.
pub fn phi_class_in_quotient<F: Field>(
    model: &FiberModel<F>,
    phi_override: Option<&Matrix<F>>,
) -> Result<PhiClassReport<F>, Error> {
    let g = lie_algebra(model.form(), LieVariant::Smooth)?;
    let w = standard_plane(model.n());
    let p = crate::ortho::parabolic(&g, &w)?;
    let maps = QuotientMaps::new(model.polarization(), &w);
    let phi = phi_override.unwrap_or(&model.pair().phi);
    let a_phi = realize_phi(model, &g, phi);
    let class = a_phi.as_ref().map(|a| maps.classify(a));
    let d_layer_class = d_layer_representative(&g, &maps).map(|a| maps.classify(&a));
    Ok(PhiClassReport { algebra_dim: g.dim(), parabolic_dim: p.dim(), a_phi, class, d_layer_class })
}
