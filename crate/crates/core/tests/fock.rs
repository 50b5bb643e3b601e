mod common;

use ccrop_core::fock::{check_covariance, check_weyl_relation, combo_discrepancy, exp_inner, gamma_apply, weyl_apply, ExpCombo};
use ccrop_core::lattice::Window;
use ccrop_core::module::ModuleExpr;
use ccrop_core::sparse::{RepContext, SparseVector};
use common::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn small_vector() -> impl Strategy<Value = SparseVector> {
    vector_where(2, 3, |_| true)
}

fn probe() -> impl Strategy<Value = ExpCombo> {
    prop::collection::vec((coeff(), small_vector()), 1..3).prop_map(ExpCombo::new)
}

fn factorial_series(z: Complex64) -> Complex64 {
    let mut term = Complex64::new(1.0, 0.0);
    let mut acc = term;
    for n in 1..=30 {
        term = term * z / n as f64;
        acc += term;
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exponential_kernel_matches_series(xi in small_vector(), eta in small_vector()) {
        let lhs = exp_inner(&ExpCombo::exponential(xi.clone()), &ExpCombo::exponential(eta.clone())).unwrap();
        let rhs = factorial_series(ccrop_core::sparse::inner(&xi, &eta));
        prop_assert!((lhs - rhs).norm_sqr().sqrt() <= 1e-9 * rhs.norm_sqr().sqrt().max(1.0));
    }

    #[test]
    fn weyl_operators_are_unitary(xi in small_vector(), p in probe()) {
        let w = weyl_apply(&xi, &p).unwrap();
        let before = exp_inner(&p, &p).unwrap();
        let after = exp_inner(&w, &w).unwrap();
        prop_assert!((before - after).norm_sqr().sqrt() <= 1e-9 * before.re.abs().max(1.0));
        let back = weyl_apply(&xi.scale(Complex64::new(-1.0, 0.0)), &w).unwrap();
        prop_assert!(combo_discrepancy(&back, &p).unwrap() <= 1e-9);
    }

    #[test]
    fn weyl_relation(xi in small_vector(), eta in small_vector(), p in probe()) {
        prop_assert!(check_weyl_relation(&xi, &eta, &[p], 1e-9).unwrap().passed());
    }

    #[test]
    fn second_quantization_is_functorial(m in planar_module(), p in probe(), i in 0i64..3, j in 0i64..3) {
        let ctx = RepContext::new(m.clone());
        let p = ExpCombo::new(p.terms().iter().map(|(c, g)| (*c, g.restrict(|y| m.member(y)))));
        let steps = m.cone().lattice_steps();
        let x = steps[0].scale(i);
        let y = steps[steps.len() - 1].scale(j);
        let lhs = gamma_apply(&ctx, &x, &gamma_apply(&ctx, &y, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, gamma_apply(&ctx, &(&x + &y), &p).unwrap());
        let isometric = exp_inner(&gamma_apply(&ctx, &x, &p).unwrap(), &gamma_apply(&ctx, &x, &p).unwrap()).unwrap();
        prop_assert!((isometric - exp_inner(&p, &p).unwrap()).norm_sqr().sqrt() <= 1e-9 * isometric.re.abs().max(1.0));
    }

    #[test]
    fn covariance(c in planar_cone(), xi in small_vector(), p in probe(), k in 0i64..3) {
        let m = ModuleExpr::semigroup(c.clone());
        let ctx = RepContext::new(m.clone());
        let xi = xi.restrict(|y| m.member(y));
        let p = ExpCombo::new(p.terms().iter().map(|(c, g)| (*c, g.restrict(|y| m.member(y)))));
        let x = c.interior_lattice_point().scale(k);
        prop_assert!(check_covariance(&ctx, &x, &xi, &[p], 1e-9).unwrap().passed());
    }
}

#[test]
fn window_exponentials_form_psd_gram() {
    // ⟨e(ξ),e(ξ)⟩ = exp‖ξ‖² grows, but the Gram matrix stays Hermitian.
    let family: Vec<SparseVector> = Window::new(1)
        .unwrap()
        .points(2)
        .map(|y| SparseVector::basis(y).scale(Complex64::new(0.5, 0.25)))
        .collect();
    let g = ccrop_core::fock::gram_matrix(&family).unwrap();
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert!((v - g[j][i].conj()).norm_sqr() < 1e-24);
        }
        assert!(row[i].im.abs() < 1e-15 && row[i].re > 1.0);
    }
}
