use orthochar2::fibermodel::{
    descent_obstruction, phi_class_in_quotient, verify_nondegenerate_twist, verify_twist_identity, FiberModel,
    ModelKind,
};
use orthochar2::linalg::unit;
use orthochar2::ortho::{group_census, lie_algebra, parabolic, so7_form, so8_form, standard_plane, LieVariant};
use orthochar2::quadform::QuadraticForm;
use orthochar2::scalars::{is_square, Gf2, Gf4, RationalFunction, Tower};
use orthochar2::{Error, Field, FiniteField};

#[test]
fn so7_radical_is_e5_over_every_field() {
    let q = so7_form::<RationalFunction>();
    let rad = q.radical();
    assert_eq!(rad.dim(), 1);
    assert!(rad.contains(&unit::<RationalFunction>(7, 4)));
    assert!(q.is_nondegenerate());
    assert!(so7_form::<Gf4>().is_nondegenerate());
}

#[test]
fn lie_dimensions() {
    assert_eq!(lie_algebra(&so8_form::<Gf2>(), LieVariant::Smooth).unwrap().dim(), 28);
    assert_eq!(lie_algebra(&so7_form::<Gf2>(), LieVariant::Smooth).unwrap().dim(), 21);
    assert_eq!(lie_algebra(&so7_form::<Gf4>(), LieVariant::SchemeTangent).unwrap().dim(), 22);
}

#[test]
fn parabolics() {
    let g8 = lie_algebra(&so8_form::<Gf2>(), LieVariant::Smooth).unwrap();
    let g7 = lie_algebra(&so7_form::<Gf2>(), LieVariant::Smooth).unwrap();
    assert_eq!(parabolic(&g8, &standard_plane(8)).unwrap().dim(), 19);
    assert_eq!(parabolic(&g7, &standard_plane(7)).unwrap().dim(), 14);
}

#[test]
fn degenerate_forms_are_rejected_by_lie() {
    let q = QuadraticForm::<Gf2>::from_monomials(3, &[(0, 1)]);
    assert!(matches!(lie_algebra(&q, LieVariant::Smooth), Err(Error::DegenerateForm { .. })));
}

#[test]
fn orthogonal_group_orders() {
    let h = QuadraticForm::<Gf2>::hyperbolic_plane();
    let c = group_census(&h).unwrap();
    assert_eq!((c.order, c.dickson_zero_order), (2, 1));
    let hh = h.direct_sum(&h).form;
    let c = group_census(&hh).unwrap();
    assert_eq!((c.order, c.dickson_zero_order), (72, 36));
    assert!(c.closed && c.dickson_additive && c.det_one);
}

#[test]
fn counterexample_core() {
    assert!(is_square(&RationalFunction::t()).is_none());
    assert_eq!(Tower::t().sqrt(), Some(Tower::s()));
    for kind in ModelKind::ALL {
        let model = FiberModel::<Tower>::new(kind, 0);
        let tw = verify_twist_identity(&model, &Tower::s());
        assert!(tw.passed && tw.involution, "{kind}");
        let k = FiberModel::<RationalFunction>::new(kind, 0);
        assert!(verify_nondegenerate_twist(&k, &RationalFunction::t(), None).passed(), "{kind}");
        assert!(descent_obstruction(&k, &RationalFunction::t()).lambda.is_none());
        let d = descent_obstruction(&model, &Tower::t());
        assert_eq!(d.lambda, Some(Tower::s()));
        assert!(phi_class_in_quotient(&FiberModel::<Gf2>::new(kind, 1), None).unwrap().passed());
    }
}

#[test]
fn field_sanity() {
    let a = Gf4::from_index(2);
    assert_eq!(a * a * a, Gf4::one());
}
