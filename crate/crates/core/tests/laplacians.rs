mod common;

use common::{mul_i64, random_cw, random_hypergraph, transpose_i64, RANDOM_INSTANCES};
use hyperlap_core::formats::{fig1, fig2};
use hyperlap_core::laplacian::{cw_laplacian, d_incidence, hypergraph_laplacian, incidence, susy_laplacian};
use hyperlap_core::{ExactMatrix, Hypergraph, Parity};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn to_i64(m: &ExactMatrix) -> Vec<Vec<i64>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| i64::try_from(m.get(i, j)).unwrap()).collect())
        .collect()
}

/// |e_i ∩ e_j| or #{edges ∋ v_i, v_j}, counted with plain set logic.
fn membership_oracle(h: &Hypergraph, parity: Parity) -> Vec<Vec<i64>> {
    match parity {
        Parity::Even => (0..h.vertex_count())
            .map(|a| {
                (0..h.vertex_count())
                    .map(|b| h.edges().iter().filter(|e| e.contains(&a) && e.contains(&b)).count() as i64)
                    .collect()
            })
            .collect(),
        Parity::Odd => h
            .edges()
            .iter()
            .map(|ea| {
                h.edges()
                    .iter()
                    .map(|eb| ea.iter().filter(|v| eb.contains(v)).count() as i64)
                    .collect()
            })
            .collect(),
    }
}

#[test]
fn fig1_incidence_column_sums() {
    let inc = incidence(&fig1()).unwrap();
    assert_eq!((inc.rows(), inc.cols()), (4, 9));
    assert_eq!(inc.column_sums(), [2, 2, 2, 2, 2, 2, 3, 3, 3]);
}

#[test]
fn fig1_even_laplacian() {
    let h = fig1();
    let even = hypergraph_laplacian(&h, Parity::Even).unwrap();
    let expected = vec![vec![5, 2, 2, 3], vec![2, 5, 2, 3], vec![2, 2, 5, 3], vec![3, 3, 3, 6]];
    assert_eq!(membership_oracle(&h, Parity::Even), expected);
    assert_eq!(to_i64(&even), expected);
}

#[test]
fn fig1_odd_laplacian() {
    let h = fig1();
    let odd = hypergraph_laplacian(&h, Parity::Odd).unwrap();
    assert_eq!(to_i64(&odd), membership_oracle(&h, Parity::Odd));
    let diag: Vec<BigInt> = [2, 2, 2, 2, 2, 2, 3, 3, 3].into_iter().map(BigInt::from).collect();
    assert_eq!(odd.diagonal(), diag);
    assert_eq!(odd.get(6, 8), &BigInt::from(2));
}

#[test]
fn fig1_susy_trace() {
    let h = fig1();
    let s = susy_laplacian(&h).unwrap();
    assert_eq!(s.dim(), 13);
    assert_eq!(s.trace(), BigInt::from(42));
    let total: usize = h.edges().iter().map(Vec::len).sum();
    assert_eq!(total, 21);
    for i in 0..4 {
        for j in 4..13 {
            assert_eq!(s.get(i, j), &BigInt::from(0));
            assert_eq!(s.get(j, i), &BigInt::from(0));
        }
    }
}

#[test]
fn fig2_face_laplacians() {
    let x = fig2();
    let inc = d_incidence(&x, 1).unwrap();
    assert_eq!((inc.rows(), inc.cols()), (6, 3));
    assert_eq!(inc.get(5, 0), -1);

    let odd = cw_laplacian(&x, 1, Parity::Odd).unwrap();
    assert_eq!(odd.diagonal(), vec![BigInt::from(3); 3]);
    let even = cw_laplacian(&x, 1, Parity::Even).unwrap();
    let diag: Vec<BigInt> = [1, 1, 1, 2, 2, 2].into_iter().map(BigInt::from).collect();
    assert_eq!(even.diagonal(), diag);

    // Independent route: multiply the signed incidence rows directly.
    let rows = inc.to_rows();
    let t = transpose_i64(&rows, inc.cols());
    assert_eq!(to_i64(&odd), mul_i64(&t, &rows));
    assert_eq!(to_i64(&even), mul_i64(&rows, &t));
}

#[test]
fn fig2_boundary_squared_is_zero() {
    let x = fig2();
    let report = x.validate();
    assert!(report.ok);
    let i0 = d_incidence(&x, 0).unwrap().to_rows();
    let i1 = d_incidence(&x, 1).unwrap().to_rows();
    let product = mul_i64(&i0, &i1);
    let zero = product.iter().flatten().all(|&v| v == 0);
    assert_eq!(report.boundary_squared_zero.get(&1), Some(&zero));
    assert!(zero);
}

#[test]
fn fig2_projects_to_fig1() {
    let projected = fig2().project_hypergraph().unwrap();
    assert_eq!(projected, fig1());
    assert!(projected.validate().ok);
}

#[test]
fn symmetry_and_trace_identities_on_random_instances() {
    for seed in 0..RANDOM_INSTANCES {
        let h = random_hypergraph(seed);
        let even = hypergraph_laplacian(&h, Parity::Even).unwrap();
        let odd = hypergraph_laplacian(&h, Parity::Odd).unwrap();
        assert!(even.is_symmetric() && odd.is_symmetric());
        let total: usize = h.edges().iter().map(Vec::len).sum();
        assert_eq!(even.trace(), BigInt::from(total));
        assert_eq!(odd.trace(), BigInt::from(total));
        assert_eq!(to_i64(&even), membership_oracle(&h, Parity::Even), "seed {seed}");
        assert_eq!(to_i64(&odd), membership_oracle(&h, Parity::Odd), "seed {seed}");

        let x = random_cw(seed);
        for d in 0..x.levels() {
            let e = cw_laplacian(&x, d, Parity::Even).unwrap();
            let o = cw_laplacian(&x, d, Parity::Odd).unwrap();
            assert!(e.is_symmetric() && o.is_symmetric());
            let triples = BigInt::from(x.incidences(d).len());
            assert_eq!(e.trace(), triples);
            assert_eq!(o.trace(), triples);
        }
    }
}

#[test]
fn positive_semidefinite_witness() {
    let mut rng = common::rng(7);
    let mut families: Vec<ExactMatrix> = vec![
        hypergraph_laplacian(&fig1(), Parity::Even).unwrap(),
        hypergraph_laplacian(&fig1(), Parity::Odd).unwrap(),
        cw_laplacian(&fig2(), 1, Parity::Even).unwrap(),
        cw_laplacian(&fig2(), 1, Parity::Odd).unwrap(),
        cw_laplacian(&fig2(), 0, Parity::Even).unwrap(),
        cw_laplacian(&fig2(), 0, Parity::Odd).unwrap(),
    ];
    for seed in 0..10 {
        families.push(hypergraph_laplacian(&random_hypergraph(seed), Parity::Even).unwrap());
        families.push(cw_laplacian(&random_cw(seed), 1, Parity::Odd).unwrap());
    }
    for m in &families {
        for _ in 0..1000 {
            let x: Vec<i64> = (0..m.dim()).map(|_| rng.gen_range(-50..=50)).collect();
            assert!(m.quadratic_form(&x).unwrap() >= BigInt::from(0));
        }
    }
}

fn permute_edges(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    // New edge j is old edge perm[j].
    let edges = perm.iter().map(|&p| h.edge(p).to_vec()).collect();
    Hypergraph::new(h.vertex_count(), edges).unwrap()
}

fn permute_vertices(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    // Old vertex v becomes perm[v].
    let edges = h
        .edges()
        .iter()
        .map(|e| {
            let mut mapped: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            mapped
        })
        .collect();
    Hypergraph::new(h.vertex_count(), edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn labeling_covariance(seed in 0u64..10_000, shuffle_seed in any::<u64>()) {
        let h = random_hypergraph(seed);
        let mut rng = common::rng(shuffle_seed);
        let mut edge_perm: Vec<usize> = (0..h.edge_count()).collect();
        edge_perm.shuffle(&mut rng);
        let mut vertex_perm: Vec<usize> = (0..h.vertex_count()).collect();
        vertex_perm.shuffle(&mut rng);

        let even = hypergraph_laplacian(&h, Parity::Even).unwrap();
        let odd = hypergraph_laplacian(&h, Parity::Odd).unwrap();

        let he = permute_edges(&h, &edge_perm);
        prop_assert_eq!(&hypergraph_laplacian(&he, Parity::Even).unwrap(), &even);
        let odd_e = hypergraph_laplacian(&he, Parity::Odd).unwrap();
        for i in 0..h.edge_count() {
            for j in 0..h.edge_count() {
                prop_assert_eq!(odd_e.get(i, j), odd.get(edge_perm[i], edge_perm[j]));
            }
        }

        let hv = permute_vertices(&h, &vertex_perm);
        prop_assert_eq!(&hypergraph_laplacian(&hv, Parity::Odd).unwrap(), &odd);
        let even_v = hypergraph_laplacian(&hv, Parity::Even).unwrap();
        for a in 0..h.vertex_count() {
            for b in 0..h.vertex_count() {
                prop_assert_eq!(even_v.get(vertex_perm[a], vertex_perm[b]), even.get(a, b));
            }
        }
    }

    #[test]
    fn projection_validates(seed in 0u64..10_000) {
        let x = random_cw(seed);
        if x.has_skeletons() {
            let h = x.project_hypergraph().unwrap();
            prop_assert!(h.validate().ok);
            prop_assert_eq!(h.edge_count(), x.count(1) + x.count(2));
            prop_assert_eq!(x.project_hypergraph().unwrap(), h);
        } else {
            prop_assert!(x.project_hypergraph().is_err());
        }
    }
}
