//! Orthogonal groups and their Lie algebras in characteristic 2.

mod family;
mod group;
mod lie;
mod parabolic;

pub use family::{family_generators, family_matrix, family_span, shape_equivalence, FamilyKind, ShapeReport};
pub use group::{
    dickson, group_census, is_orthogonal, orthogonal_elements, orthogonal_elements_in, GroupCensus,
    OrthogonalElement, MAX_ENUMERATION_DIM,
};
pub use lie::{lie_algebra, lie_constraints, preserves_form, LieSubalgebra, LieVariant};
pub use parabolic::{
    gl_stabilizer, parabolic, parabolic_by_intersection, quotient_sequence_report, stabilizer, stabilizes,
    symmetric_square_tensor, ElementClass, QuotientMaps, QuotientReport,
};

use crate::linalg::Subspace;
use crate::quadform::QuadraticForm;
use crate::scalars::Field;

/// `x1 x7 + x2 x8 + x3 x5 + x4 x6`.
pub fn so8_form<F: Field>() -> QuadraticForm<F> {
    QuadraticForm::from_monomials(8, &[(0, 6), (1, 7), (2, 4), (3, 5)])
}

/// `x1 x6 + x2 x7 + x3 x4 + x5^2`.
pub fn so7_form<F: Field>() -> QuadraticForm<F> {
    QuadraticForm::from_monomials(7, &[(0, 5), (1, 6), (2, 3), (4, 4)])
}

/// The isotropic plane `span{e1, e2}`.
pub fn standard_plane<F: Field>(n: usize) -> Subspace<F> {
    Subspace::coordinate(n, &[0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::linalg::{unit, Matrix};
    use crate::scalars::{FiniteField, Gf2, Gf4, RationalFunction};
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn so8() -> LieSubalgebra<Gf2> {
        lie_algebra(&so8_form(), LieVariant::Smooth).unwrap()
    }

    fn so7() -> LieSubalgebra<Gf2> {
        lie_algebra(&so7_form(), LieVariant::Smooth).unwrap()
    }

    fn elementary<F: Field>(n: usize, i: usize, j: usize) -> Matrix<F> {
        Matrix::from_fn(n, n, |a, b| if (a, b) == (i, j) { F::one() } else { F::zero() })
    }

    #[test]
    fn lie_dimensions() {
        assert_eq!(so8().dim(), 28);
        assert_eq!(so7().dim(), 21);
        let naive = lie_algebra(&so7_form::<Gf2>(), LieVariant::SchemeTangent).unwrap();
        assert_eq!(naive.dim(), 22);
        assert!(so7().is_subalgebra_of(&naive));
        let e55 = elementary::<Gf2>(7, 4, 4);
        assert!(naive.contains(&e55) && !so7().contains(&e55));
        let sum = so7().space().sum(&Subspace::from_vectors(49, [e55.into_entries()]).unwrap()).unwrap();
        assert_eq!(sum, *naive.space());
        let naive8 = lie_algebra(&so8_form::<Gf2>(), LieVariant::SchemeTangent).unwrap();
        assert_eq!(naive8, so8());
        // same answers over other fields
        assert_eq!(lie_algebra(&so7_form::<Gf4>(), LieVariant::Smooth).unwrap().dim(), 21);
        assert_eq!(lie_algebra(&so8_form::<RationalFunction>(), LieVariant::Smooth).unwrap().dim(), 28);
    }

    #[test]
    fn smooth_codimension_follows_parity() {
        for n in 2..=7 {
            let q = if n % 2 == 0 {
                QuadraticForm::<Gf2>::hyperbolic(n / 2)
            } else {
                QuadraticForm::square_of_linear(&unit(1, 0)).direct_sum(&QuadraticForm::hyperbolic(n / 2)).form
            };
            let smooth = lie_algebra(&q, LieVariant::Smooth).unwrap();
            let naive = lie_algebra(&q, LieVariant::SchemeTangent).unwrap();
            assert!(smooth.is_subalgebra_of(&naive));
            assert_eq!(naive.dim() - smooth.dim(), n % 2, "n = {n}");
            assert_eq!(smooth.bracket_failure(), None);
            assert_eq!(naive.bracket_failure(), None);
        }
    }

    #[test]
    fn brackets_close() {
        assert_eq!(so8().bracket_failure(), None);
        assert_eq!(so7().bracket_failure(), None);
    }

    #[test]
    fn degenerate_form_is_rejected() {
        let q = QuadraticForm::<Gf2>::from_monomials(3, &[(0, 1)]);
        assert_eq!(lie_algebra(&q, LieVariant::Smooth), Err(Error::DegenerateForm));
    }

    #[test]
    fn family_examples() {
        for kind in [FamilyKind::So8, FamilyKind::So7] {
            let zero = family_matrix(kind, &alloc::vec![Gf2::zero(); kind.parameter_count()]).unwrap();
            assert!(zero.is_zero());
        }
        let mut p = alloc::vec![Gf2::zero(); 28];
        p[0] = Gf2::one();
        p[3] = Gf2::one();
        let m = family_matrix(FamilyKind::So8, &p).unwrap();
        let expected = Matrix::from_fn(8, 8, |i, j| if i == j && !(2..6).contains(&i) { Gf2::one() } else { Gf2::zero() });
        assert_eq!(m, expected);
        assert!(so8().contains(&m));
        assert_eq!(
            family_matrix(FamilyKind::So7, &[Gf2::one(); 3]),
            Err(Error::ParameterCount { expected: 21, found: 3 })
        );
    }

    #[test]
    fn families_match_computed_algebras() {
        let r = shape_equivalence(FamilyKind::So8, &so8()).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!((r.family_dim, r.algebra_dim, r.first_outside), (28, 28, None));
        let r = shape_equivalence(FamilyKind::So7, &so7()).unwrap();
        assert!(r.equal, "{r:?}");
        assert_eq!((r.family_dim, r.algebra_dim, r.first_not_invariant), (21, 21, None));
        let g4 = lie_algebra(&so7_form::<Gf4>(), LieVariant::Smooth).unwrap();
        assert!(shape_equivalence(FamilyKind::So7, &g4).unwrap().equal);
    }

    #[test]
    fn plain_transpose_so7_family_is_not_invariant() {
        let r = shape_equivalence(FamilyKind::So7PlainTranspose, &so7()).unwrap();
        assert!(!r.equal);
        // X2[0][0] is the first parameter that breaks invariance
        assert_eq!(r.first_outside, Some(4));
        assert_eq!(r.first_not_invariant, Some(4));
        assert_eq!(FamilyKind::So7PlainTranspose.parameter_name(4), "X2[0][0]");
        let m = family_matrix(FamilyKind::So7PlainTranspose, &{
            let mut p = alloc::vec![Gf2::zero(); 21];
            p[4] = Gf2::one();
            p
        })
        .unwrap();
        // beta(v, A v) = v3 v6 + v4 v6, nonzero at e3 + e6
        let v: Vec<Gf2> = (0..7).map(|i| if i == 2 || i == 5 { Gf2::one() } else { Gf2::zero() }).collect();
        assert_eq!(so7_form::<Gf2>().polarize().eval(&v, &m.mul_vec(&v)), Gf2::one());
    }

    #[test]
    fn parabolic_dimensions_and_routes() {
        for (g, kind, dim) in [(so8(), FamilyKind::So8, 19), (so7(), FamilyKind::So7, 14)] {
            let w = standard_plane(g.n());
            let p = parabolic(&g, &w).unwrap();
            assert_eq!(p.dim(), dim);
            assert_eq!(p, parabolic_by_intersection(&g, &w).unwrap());
            assert!(p.is_subalgebra_of(&g));
            assert_eq!(p.bracket_failure(), None);
            assert!(p.basis_matrices().iter().all(|a| stabilizes(a, &w)));
            // filter the family's unit generators: the parabolic conditions are vanishing of parameters
            let kept: Vec<Matrix<Gf2>> = family_generators(kind).into_iter().filter(|a| stabilizes(a, &w)).collect();
            assert_eq!(LieSubalgebra::from_matrices(g.form().clone(), &kept).unwrap(), p);
        }
    }

    #[test]
    fn parabolic_parameter_conditions() {
        // so8: X4 = X6 = 0, D4 = 0; so7: X3 = 0, x1 = 0, D2 = 0
        let w = standard_plane::<Gf2>(8);
        let dropped: Vec<usize> = (0..28).filter(|&i| !stabilizes(&family_generators(FamilyKind::So8)[i], &w)).collect();
        assert_eq!(dropped, [12, 13, 14, 15, 20, 21, 22, 23, 27]);
        let w = standard_plane::<Gf2>(7);
        let dropped: Vec<usize> = (0..21).filter(|&i| !stabilizes(&family_generators(FamilyKind::So7)[i], &w)).collect();
        assert_eq!(dropped, [8, 9, 10, 11, 13, 14, 20]);
    }

    #[test]
    fn parabolic_requires_isotropy() {
        let g = so8();
        let w = Subspace::coordinate(8, &[0, 6]);
        assert_eq!(parabolic(&g, &w), Err(Error::NotIsotropic));
        // without the isotropy check the full space is stabilized by everything
        assert_eq!(stabilizer(&g, &Subspace::full(8)).unwrap(), g);
    }

    #[test]
    fn quotient_sequences() {
        for (g, dims) in [(so8(), (8, 9, 1)), (so7(), (6, 7, 1))] {
            let w = standard_plane(g.n());
            let p = parabolic(&g, &w).unwrap();
            let r = quotient_sequence_report(&g, &p, &w).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!((r.sub_dim, r.quotient_dim, r.d_dim), dims);
            assert_eq!(r.hom_dim, dims.0);
        }
        // W⊥ contains the radical for n = 7
        let g = so7();
        let w = standard_plane(7);
        let r = quotient_sequence_report(&g, &parabolic(&g, &w).unwrap(), &w).unwrap();
        assert!(r.w_perp.contains(&unit(7, 4)));
        assert_eq!(r.w_perp.dim(), 5);
        assert_eq!(quotient_sequence_report(&p_of(&g), &g, &w).unwrap_err(), Error::NotContained);
    }

    fn p_of(g: &LieSubalgebra<Gf2>) -> LieSubalgebra<Gf2> {
        parabolic(g, &standard_plane(g.n())).unwrap()
    }

    #[test]
    fn d_line_is_basis_independent() {
        let e = [Gf4::one(), Gf4::zero()];
        let f = [Gf4::zero(), Gf4::one()];
        let base = symmetric_square_tensor(&e, &f);
        assert_eq!(symmetric_square_tensor(&f, &e), base);
        for idx in 0..Gf4::ORDER.pow(4) {
            let c: Vec<Gf4> = (0..4).map(|k| Gf4::from_index(idx / Gf4::ORDER.pow(k) % Gf4::ORDER)).collect();
            let change = Matrix::from_vec(2, 2, c.clone()).unwrap();
            let Some(det) = change.determinant() else { continue };
            if det.is_zero() {
                continue;
            }
            let e2 = [c[0], c[1]];
            let f2 = [c[2], c[3]];
            assert_eq!(symmetric_square_tensor(&e2, &f2), base.scale(&det));
        }
    }

    #[test]
    fn classify_elements() {
        let g = so7();
        let w = standard_plane(7);
        let maps = QuotientMaps::new(g.form().polarize(), &w);
        let unit_param = |i: usize| family_generators::<Gf2>(FamilyKind::So7).swap_remove(i);
        // X3 entry: in the Hom(W, W⊥/W) layer
        let c = maps.classify(&unit_param(8));
        assert!(!c.in_parabolic && c.in_hom_layer && c.d_component_is_zero());
        // D2: reaches the D-line
        let c = maps.classify(&unit_param(20));
        assert!(!c.in_parabolic && !c.in_hom_layer && !c.d_component_is_zero());
        let c = maps.classify(&Matrix::zeros(7, 7));
        assert!(c.in_parabolic && c.is_zero());
    }

    #[test]
    fn orthogonal_examples() {
        let h = QuadraticForm::<Gf2>::hyperbolic_plane();
        assert!(is_orthogonal(&h, &Matrix::identity(2)).unwrap());
        let swap = Matrix::from_rows(alloc::vec![alloc::vec![Gf2::zero(), Gf2::one()], alloc::vec![Gf2::one(), Gf2::zero()]]);
        assert!(is_orthogonal(&h, &swap).unwrap());
        assert_eq!(dickson(&swap), 1);
        assert_eq!(dickson(&Matrix::<Gf2>::identity(2)), 0);
        let w = Gf4::from_index(2);
        let h4 = QuadraticForm::<Gf4>::hyperbolic_plane();
        let diag = Matrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => w,
            (1, 1) => w.inv().unwrap(),
            _ => Gf4::zero(),
        });
        assert!(is_orthogonal(&h4, &diag).unwrap());
        let scale = Matrix::from_fn(2, 2, |i, j| if i == j { w } else { Gf4::zero() });
        assert!(!is_orthogonal(&h4, &scale).unwrap());
        assert!(!is_orthogonal(&h, &Matrix::zeros(2, 2)).unwrap());
        assert!(is_orthogonal(&h, &Matrix::identity(3)).is_err());
        let el = OrthogonalElement::new(swap.clone(), h.clone()).unwrap();
        assert_eq!(el.compose(&el).unwrap().dickson(), 0);
        assert_eq!(OrthogonalElement::new(Matrix::zeros(2, 2), h), Err(Error::NotOrthogonal));
    }

    #[test]
    fn group_census_hyperbolic() {
        let c = group_census(&QuadraticForm::hyperbolic_plane()).unwrap();
        assert_eq!((c.order, c.dickson_zero_order), (2, 1));
        let c = group_census(&QuadraticForm::hyperbolic(2)).unwrap();
        assert_eq!((c.order, c.dickson_zero_order), (72, 36));
        assert!(c.closed && c.dickson_additive && c.det_one);
    }

    #[test]
    fn group_census_odd() {
        let q = QuadraticForm::square_of_linear(&[Gf2::one()]).direct_sum(&QuadraticForm::hyperbolic_plane()).form;
        let c = group_census(&q).unwrap();
        assert!(c.fixes_radical && c.closed && c.dickson_additive && c.det_one);
        // cross-check the bit-packed filter against the generic one
        let direct = (0u64..512)
            .filter(|&i| is_orthogonal(&q, &crate::linalg::BitMatrix::from_index(3, i).to_matrix()).unwrap())
            .count();
        assert_eq!(c.order, direct);
    }

    #[test]
    fn sharded_enumeration_matches() {
        let q = QuadraticForm::<Gf2>::hyperbolic(2);
        let whole = orthogonal_elements(&q).unwrap();
        let mut parts = Vec::new();
        for k in 0..4u64 {
            parts.extend(orthogonal_elements_in(&q, k * 16384..(k + 1) * 16384).unwrap());
        }
        assert_eq!(whole, parts);
        assert!(matches!(
            orthogonal_elements(&QuadraticForm::<Gf2>::hyperbolic(3)),
            Err(Error::EnumerationBound { .. })
        ));
    }

    proptest! {
        #[test]
        fn random_family_members_lie_in_algebra(bits in proptest::collection::vec(0u16..4, 28)) {
            let p8: Vec<Gf4> = bits.iter().map(|&b| Gf4::from_index(b as usize)).collect();
            let g8 = lie_algebra(&so8_form::<Gf4>(), LieVariant::Smooth).unwrap();
            let a = family_matrix(FamilyKind::So8, &p8).unwrap();
            prop_assert!(g8.contains(&a) && preserves_form(g8.form(), &a));
            let g7 = lie_algebra(&so7_form::<Gf4>(), LieVariant::Smooth).unwrap();
            let b = family_matrix(FamilyKind::So7, &p8[..21]).unwrap();
            prop_assert!(g7.contains(&b));
            let c = family_matrix(FamilyKind::So7, &p8[7..28]).unwrap();
            prop_assert!(g7.contains(&b.bracket(&c)));
        }
    }
}
