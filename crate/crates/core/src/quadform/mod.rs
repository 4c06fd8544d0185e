//! Quadratic forms in characteristic two and the exact sequences around polarization.

mod form;
mod sequences;

pub use form::{BilinearForm, DirectSum, QuadraticForm};
pub use sequences::{polarization_matrix, polarization_report, sym2_sequence_report, PolarizationReport, Sym2SequenceReport};

/// Position of the monomial `x_i x_j` (`i <= j`) in the lexicographic basis of `Sym^2`.
pub fn sym2_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * i.saturating_sub(1) / 2 - i + j
}

/// Position of `e_i ∧ e_j` (`i < j`) in the lexicographic basis of `Λ^2`.
pub fn lambda2_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

pub fn sym2_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn lambda2_dim(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Monomial pairs `(i, j)`, `i <= j`, in basis order.
pub fn sym2_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i..n).map(move |j| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{unit, Subspace};
    use crate::scalars::{Field, FiniteField, Gf2, Gf4};
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn index_maps_are_bijective() {
        for n in 1..8 {
            let s: Vec<usize> = sym2_pairs(n).map(|(i, j)| sym2_index(n, i, j)).collect();
            assert_eq!(s, (0..sym2_dim(n)).collect::<Vec<_>>());
            let l: Vec<usize> =
                sym2_pairs(n).filter(|(i, j)| i < j).map(|(i, j)| lambda2_index(n, i, j)).collect();
            assert_eq!(l, (0..lambda2_dim(n)).collect::<Vec<_>>());
        }
    }

    fn omega() -> Gf4 {
        Gf4::from_index(2)
    }

    /// x1 x6 + x2 x7 + x3 x4 + x5^2 (0-based coordinates).
    pub(crate) fn so7_form<F: Field>() -> QuadraticForm<F> {
        QuadraticForm::from_monomials(7, &[(0, 5), (1, 6), (2, 3), (4, 4)])
    }

    /// x1 x7 + x2 x8 + x3 x5 + x4 x6 (0-based coordinates).
    pub(crate) fn so8_form<F: Field>() -> QuadraticForm<F> {
        QuadraticForm::from_monomials(8, &[(0, 6), (1, 7), (2, 4), (3, 5)])
    }

    #[test]
    fn evaluate_examples() {
        let h = QuadraticForm::<Gf2>::hyperbolic_plane();
        assert_eq!(h.evaluate(&[Gf2::one(), Gf2::one()]).unwrap(), Gf2::one());
        assert_eq!(so7_form::<Gf2>().evaluate(&unit(7, 4)).unwrap(), Gf2::one());
        // a^2 + bc at (a, b, c) = (w, 1, w): w^2 + w = 1
        let det = QuadraticForm::<Gf4>::from_monomials(3, &[(0, 0), (1, 2)]);
        assert_eq!(det.evaluate(&[omega(), Gf4::one(), omega()]).unwrap(), Gf4::one());
        assert!(h.evaluate(&[Gf2::one()]).is_err());
    }

    #[test]
    fn polarize_examples() {
        let h = QuadraticForm::<Gf2>::hyperbolic_plane().polarize();
        assert_eq!(h.gram().to_string(), "0 1\n1 0");
        let sq = QuadraticForm::<Gf2>::from_monomials(1, &[(0, 0)]);
        assert!(sq.polarize().gram().is_zero());
        let b = so7_form::<Gf2>().polarize();
        let expected = "\
0 0 0 0 0 1 0
0 0 0 0 0 0 1
0 0 0 1 0 0 0
0 0 1 0 0 0 0
0 0 0 0 0 0 0
1 0 0 0 0 0 0
0 1 0 0 0 0 0";
        assert_eq!(b.gram().to_string(), expected);
        assert_eq!(b.gram().rank(), 6);
    }

    #[test]
    fn radical_examples() {
        let q7 = so7_form::<Gf2>();
        assert_eq!(q7.radical(), Subspace::coordinate(7, &[4]));
        assert!(q7.is_nondegenerate());
        let q8 = so8_form::<Gf2>();
        assert_eq!(q8.radical().dim(), 0);
        assert!(q8.is_nondegenerate());
        // x1 x2 + x3^2 plus an unused fourth coordinate
        let deg = QuadraticForm::<Gf2>::from_monomials(4, &[(0, 1), (2, 2)]);
        assert!(deg.radical().contains(&unit(4, 3)));
        assert!(!deg.is_nondegenerate());
    }

    #[test]
    fn isotropy_examples() {
        let q8 = so8_form::<Gf2>();
        assert!(q8.is_isotropic_subspace(&Subspace::coordinate(8, &[0, 1])).unwrap());
        let q7 = so7_form::<Gf2>();
        assert!(!q7.is_isotropic_subspace(&Subspace::coordinate(7, &[4])).unwrap());
        // (sl2, det) with coordinates (a, b, c): Id = (1,0,0), N = (0,1,0)
        let det = QuadraticForm::<Gf2>::from_monomials(3, &[(0, 0), (1, 2)]);
        assert!(!det.is_isotropic_subspace(&Subspace::coordinate(3, &[0, 1])).unwrap());
        assert!(det.is_isotropic_subspace(&Subspace::coordinate(3, &[1])).unwrap());
        assert!(q7.is_isotropic_subspace(&Subspace::coordinate(8, &[0])).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let h = QuadraticForm::<Gf2>::hyperbolic_plane();
        let hh = h.direct_sum(&h);
        assert!(!hh.odd_odd);
        assert_eq!(hh.form.dim(), 4);
        assert!(hh.form.is_nondegenerate());
        assert_eq!(h.direct_sum(&QuadraticForm::zero(0)).form, h);
        let q9 = so7_form::<Gf2>().direct_sum(&h).form;
        assert_eq!(q9.dim(), 9);
        assert_eq!(q9.radical(), Subspace::coordinate(9, &[4]));
        assert!(q9.is_nondegenerate());
        let line = QuadraticForm::<Gf2>::from_monomials(1, &[(0, 0)]);
        let odd_odd = line.direct_sum(&line);
        assert!(odd_odd.odd_odd);
        assert!(!odd_odd.form.is_nondegenerate());
    }

    #[test]
    fn isotropic_counts() {
        let h = QuadraticForm::<Gf2>::hyperbolic_plane();
        assert_eq!(h.count_isotropic_vectors(true).unwrap(), 3);
        assert_eq!(h.count_isotropic_vectors(false).unwrap(), 2);
        for m in 1..=3u32 {
            let q = QuadraticForm::<Gf2>::hyperbolic(m as usize);
            let closed = 2u64.pow(2 * m - 1) + 2u64.pow(m - 1);
            assert_eq!(q.count_isotropic_vectors(true).unwrap(), closed);
        }
        let sq = QuadraticForm::<Gf2>::from_monomials(1, &[(0, 0)]);
        assert_eq!(sq.count_isotropic_vectors(true).unwrap(), 1);
        let big = QuadraticForm::<Gf4>::hyperbolic(7);
        assert!(big.count_isotropic_vectors(true).is_err());
    }

    fn all_vectors<F: FiniteField>(n: usize) -> Vec<Vec<F>> {
        (0..F::ORDER.pow(n as u32))
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let e = F::from_index(idx % F::ORDER);
                        idx /= F::ORDER;
                        e
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn reconstruction_from_diagonal_values_and_beta() {
        // Q(v) = sum v_i^2 Q(e_i) + sum_{i<j} v_i v_j beta(e_i, e_j)
        let mut seed = 0x2545_f491_4f6c_dd1du64;
        for n in 1..=6usize {
            for _ in 0..4 {
                let terms: Vec<(usize, usize, Gf2)> = sym2_pairs(n)
                    .map(|(i, j)| {
                        seed ^= seed << 13;
                        seed ^= seed >> 7;
                        seed ^= seed << 17;
                        (i, j, Gf2::from_index((seed & 1) as usize))
                    })
                    .collect();
                let q = QuadraticForm::from_terms(n, terms);
                let beta = q.polarize();
                for v in all_vectors::<Gf2>(n) {
                    let mut r = Gf2::zero();
                    for i in 0..n {
                        r += v[i] * v[i] * q.evaluate(&unit(n, i)).unwrap();
                        for j in i + 1..n {
                            r += v[i] * v[j] * beta.on_basis(i, j);
                        }
                    }
                    assert_eq!(q.evaluate(&v).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn isotropy_criterion_matches_brute_force() {
        let forms = [
            QuadraticForm::<Gf2>::from_monomials(5, &[(0, 3), (1, 4), (2, 2)]),
            QuadraticForm::<Gf2>::from_monomials(5, &[(0, 1), (2, 3), (4, 4), (0, 0)]),
            QuadraticForm::<Gf2>::from_monomials(4, &[(0, 1), (2, 3)]),
            QuadraticForm::<Gf2>::from_monomials(3, &[(0, 0), (1, 2)]),
        ];
        for q in &forms {
            let n = q.dim();
            let vecs = all_vectors::<Gf2>(n);
            let mut seen = alloc::collections::BTreeSet::new();
            for a in &vecs {
                for b in &vecs {
                    for c in &vecs {
                        let w = Subspace::from_vectors(n, [a.clone(), b.clone(), c.clone()]).unwrap();
                        let key: Vec<Vec<u16>> =
                            w.basis().iter().map(|r| r.iter().map(|x| x.bits()).collect()).collect();
                        if !seen.insert(key) {
                            continue;
                        }
                        let members = all_vectors::<Gf2>(w.dim());
                        let brute = members.iter().all(|coords| q.evaluate(&w.combine(coords)).unwrap().is_zero());
                        assert_eq!(q.is_isotropic_subspace(&w).unwrap(), brute);
                    }
                }
            }
        }
    }

    fn form_strategy<F: FiniteField>(n: usize) -> impl Strategy<Value = QuadraticForm<F>> {
        proptest::collection::vec(0..F::ORDER, sym2_dim(n))
            .prop_map(move |c| QuadraticForm::from_coefficients(n, c.into_iter().map(F::from_index).collect()).unwrap())
    }

    fn vec_strategy<F: FiniteField>(n: usize) -> impl Strategy<Value = Vec<F>> {
        proptest::collection::vec(0..F::ORDER, n).prop_map(|v| v.into_iter().map(F::from_index).collect())
    }

    fn defining_identity<F: FiniteField>(q: &QuadraticForm<F>, v: &[F], w: &[F], a: F, b: F) -> Result<(), TestCaseError> {
        let comb: Vec<F> = v.iter().zip(w).map(|(&x, &y)| a * x + b * y).collect();
        let beta = q.polarize();
        let rhs = a * a * q.evaluate(v).unwrap() + b * b * q.evaluate(w).unwrap() + a * b * beta.eval(v, w);
        prop_assert_eq!(q.evaluate(&comb).unwrap(), rhs);
        prop_assert!(beta.is_alternating());
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn defining_identity_gf4(
            (q, v, w) in (1usize..7).prop_flat_map(|n| (form_strategy::<Gf4>(n), vec_strategy::<Gf4>(n), vec_strategy::<Gf4>(n))),
            a in 0usize..4, b in 0usize..4,
        ) {
            defining_identity(&q, &v, &w, Gf4::from_index(a), Gf4::from_index(b))?;
        }

        #[test]
        fn defining_identity_gf2(
            (q, v, w) in (1usize..7).prop_flat_map(|n| (form_strategy::<Gf2>(n), vec_strategy::<Gf2>(n), vec_strategy::<Gf2>(n))),
            a in 0usize..2, b in 0usize..2,
        ) {
            defining_identity(&q, &v, &w, Gf2::from_index(a), Gf2::from_index(b))?;
        }
    }

    proptest! {
        #[test]
        fn squares_of_linear_forms_polarize_to_zero(l in (1usize..7).prop_flat_map(vec_strategy::<Gf4>)) {
            prop_assert!(QuadraticForm::square_of_linear(&l).polarize().gram().is_zero());
        }

        #[test]
        fn pullback_matches_evaluation(
            q in form_strategy::<Gf4>(4),
            m in proptest::collection::vec(0usize..4, 12),
            x in vec_strategy::<Gf4>(3),
        ) {
            let m = crate::linalg::Matrix::from_vec(4, 3, m.into_iter().map(Gf4::from_index).collect()).unwrap();
            let p = q.pullback(&m).unwrap();
            prop_assert_eq!(p.evaluate(&x).unwrap(), q.evaluate(&m.mul_vec(&x)).unwrap());
        }
    }
}
