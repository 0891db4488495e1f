use std::f64::consts::PI;

use longeq_core::kz::{
    convergence_order, flatness_residuals, integrate_holonomy, max_abs_diff, Center, FlatnessKind, KzSystem,
    LoopKind, LoopSpec, Order,
};
use longeq_core::tensor::{make_pair, make_phi, check_laws, Law};
use longeq_core::linalg::QMatrix;
use nalgebra::{Complex, DMatrix};

type C64 = Complex<f64>;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn base() -> Vec<C64> {
    vec![c(0.7, 0.0), c(0.0, 0.0), c(4.0, 1.0)]
}

fn phi_system() -> KzSystem {
    KzSystem::new(&make_phi(&[0, 0]).unwrap(), 3, c(0.1, 0.0)).unwrap()
}

/// `exp(2πi h R^{ij})`, by nalgebra's Padé exponential.
fn oracle(sys: &KzSystem, i: usize, j: usize) -> DMatrix<C64> {
    (sys.lifted(i, j) * (c(0.0, 2.0 * PI) * sys.h())).exp()
}

#[test]
fn phi_system_is_flat() {
    assert!(flatness_residuals(&make_phi(&[0, 0]).unwrap(), 4).all_vanish());
}

#[test]
fn monodromy_matches_exponential_at_two_radii() {
    let sys = phi_system();
    let expected = oracle(&sys, 0, 1);
    for radius in [0.5, 1.5] {
        let lp = LoopSpec::circle(base(), 0, 1, radius, 4000).unwrap();
        let w = integrate_holonomy(&sys, &lp).unwrap();
        let err = max_abs_diff(&w, &expected);
        assert!(err < 1e-6, "radius {radius}: {err:e}");
    }
}

#[test]
fn contractible_loop_is_trivial() {
    let sys = phi_system();
    let kind = LoopKind::Circle { moving: 0, center: Center::Point(c(1.0, 1.0)), radius: 0.5, turns: 1 };
    let lp = LoopSpec::new(base(), kind, 4000).unwrap();
    let w = integrate_holonomy(&sys, &lp).unwrap();
    let err = max_abs_diff(&w, &DMatrix::identity(8, 8));
    assert!(err < 1e-8, "{err:e}");
}

#[test]
fn loop_then_inverse_is_identity() {
    let sys = phi_system();
    let lp = LoopSpec::circle(base(), 0, 1, 0.9, 2000).unwrap();
    let w = integrate_holonomy(&sys, &lp).unwrap();
    let back = integrate_holonomy(&sys, &lp.reversed()).unwrap();
    assert!(max_abs_diff(&(back * w), &DMatrix::identity(8, 8)) < 1e-8);
}

#[test]
fn polygon_around_a_point_matches_circle() {
    let sys = phi_system();
    let b = base();
    let corner = |re: f64, im: f64| {
        let mut z = b.clone();
        z[0] = c(re, im);
        z
    };
    let kind = LoopKind::Polygon { waypoints: vec![corner(0.7, 0.7), corner(-0.7, 0.7), corner(-0.7, -0.7), corner(0.7, -0.7)] };
    let lp = LoopSpec::new(b, kind, 8000).unwrap();
    let w = integrate_holonomy(&sys, &lp).unwrap();
    assert!(max_abs_diff(&w, &oracle(&sys, 0, 1)) < 1e-6);
}

#[test]
fn rk4_order_is_four() {
    let sys = phi_system();
    let lp = LoopSpec::circle(base(), 0, 1, 0.5, 40).unwrap();
    let conv = convergence_order(&sys, &lp).unwrap();
    let Order::Estimated(p) = conv.order else { panic!("{conv:?}") };
    assert!((3.5..=4.5).contains(&p), "{conv:?}");
}

#[test]
fn coarse_run_still_reports() {
    let sys = phi_system();
    let lp = LoopSpec::circle(base(), 0, 1, 0.5, 8).unwrap();
    let conv = convergence_order(&sys, &lp).unwrap();
    assert!(matches!(conv.order, Order::Estimated(p) if p.is_finite()), "{conv:?}");
}

#[test]
fn non_symmetric_long_solution_keeps_the_displayed_bracket() {
    let f = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
    let g = QMatrix::from_i64(&[&[2, 0], &[0, 2]]);
    let r = make_pair(&f, &g).unwrap();
    assert_eq!(check_laws(&r, &[Law::Long]).get(Law::Long), Some(true));
    assert!(!r.is_symmetric());
    let report = flatness_residuals(&r, 3);
    assert_eq!(report.get(FlatnessKind::BracketSum, &[1, 2, 3]), Some(true));
}
