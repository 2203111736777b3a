mod common;

use common::{random_hypergraph, RANDOM_INSTANCES};
use hyperlap_core::evolve::{evolution_operator, evolve_state, partition_trace, ComplexMatrix, StateVector};
use hyperlap_core::formats::{fig1, fig2};
use hyperlap_core::laplacian::{cw_laplacian, hypergraph_laplacian, susy_laplacian};
use hyperlap_core::{Error, ExactMatrix, Parity};
use num_complex::Complex64;

const THETAS: [f64; 4] = [0.01, 0.1, 1.0, 10.0];

fn fixture_operators() -> Vec<ExactMatrix> {
    let h = fig1();
    let x = fig2();
    vec![
        susy_laplacian(&h).unwrap(),
        hypergraph_laplacian(&h, Parity::Even).unwrap(),
        hypergraph_laplacian(&h, Parity::Odd).unwrap(),
        cw_laplacian(&x, 0, Parity::Even).unwrap(),
        cw_laplacian(&x, 0, Parity::Odd).unwrap(),
        cw_laplacian(&x, 1, Parity::Even).unwrap(),
        cw_laplacian(&x, 1, Parity::Odd).unwrap(),
    ]
}

fn unitarity_defect(u: &ComplexMatrix) -> f64 {
    (&(u * &u.adjoint()) - &ComplexMatrix::identity(u.dim())).max_norm()
}

#[test]
fn unitarity_on_fixtures() {
    for m in fixture_operators() {
        for theta in THETAS {
            let u = evolution_operator(&m, theta).unwrap();
            assert!(unitarity_defect(&u) < 1e-10, "theta {theta}: {}", unitarity_defect(&u));
        }
    }
}

#[test]
fn composition_on_fixtures() {
    let pairs = [(0.01, 0.02), (0.1, 0.3), (1.0, 2.5), (4.0, 6.0), (-1.0, 1.5)];
    for m in fixture_operators() {
        for (a, b) in pairs {
            let whole = evolution_operator(&m, a + b).unwrap();
            let split = &evolution_operator(&m, a).unwrap() * &evolution_operator(&m, b).unwrap();
            assert!((&whole - &split).max_norm() < 1e-9);
        }
    }
}

#[test]
fn series_consistency_for_small_theta() {
    for m in fixture_operators() {
        let n = m.dim();
        let d = ComplexMatrix::from_real_scaled(n, &m.to_f64(), Complex64::new(1.0, 0.0));
        let d2 = &d * &d;
        let norm = d.one_norm();
        for theta in [1e-4, 1e-3, 5e-3, 0.01] {
            let approx = &(&ComplexMatrix::identity(n) - &d.scale(Complex64::new(0.0, theta)))
                - &d2.scale(Complex64::new(theta * theta / 2.0, 0.0));
            let u = evolution_operator(&m, theta).unwrap();
            let bound = norm.powi(3) * theta.powi(3);
            assert!((&u - &approx).max_norm() < bound, "theta {theta}");
        }
    }
}

#[test]
fn inverse_is_adjoint() {
    let m = susy_laplacian(&fig1()).unwrap();
    let u = evolution_operator(&m, 0.7).unwrap();
    let back = evolution_operator(&m, -0.7).unwrap();
    assert!((&back - &u.adjoint()).max_norm() < 1e-10);
}

#[test]
fn basis_states_keep_unit_norm() {
    let m = susy_laplacian(&fig1()).unwrap();
    let u = evolution_operator(&m, 0.1).unwrap();
    for i in 0..m.dim() {
        let out = evolve_state(&u, &StateVector::basis(m.dim(), i)).unwrap();
        assert!((out.norm() - 1.0).abs() < 1e-10);
    }
    let identity = ComplexMatrix::identity(3);
    let psi = StateVector(vec![Complex64::new(0.5, -1.0), Complex64::new(2.0, 0.0), Complex64::new(0.0, 3.0)]);
    assert_eq!(evolve_state(&identity, &psi).unwrap(), psi);
    assert!(matches!(
        evolve_state(&u, &StateVector::basis(4, 0)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn partition_trace_block_additivity() {
    let mut hs = vec![fig1()];
    hs.extend((0..RANDOM_INSTANCES).map(random_hypergraph).take(20));
    for h in &hs {
        let susy = susy_laplacian(h).unwrap();
        for theta in [0.05, 0.5, 3.0] {
            let full = evolution_operator(&susy, theta).unwrap().trace();
            let blocks = partition_trace(h, theta).unwrap();
            assert!((full - blocks).norm() < 1e-10);
        }
    }
}

#[test]
fn partition_trace_at_zero_is_cell_count() {
    let h = fig1();
    assert_eq!(partition_trace(&h, 0.0).unwrap(), Complex64::new(13.0, 0.0));
}

#[test]
fn rejects_asymmetric_input() {
    let m = ExactMatrix::from_rows(&[vec![0, 1], vec![0, 0]]);
    assert!(matches!(evolution_operator(&m, 1.0), Err(Error::NotSymmetric)));
}
