#![allow(dead_code)]

use std::collections::BTreeMap;

use hyperlap_core::{CwHypergraph, Hypergraph, Incidence, Sign};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const RANDOM_INSTANCES: u64 = 100;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mask: u32 = rng.gen_range(1..(1u32 << n));
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// n ≤ 5 vertices, m ≤ 6 non-empty edges.
pub fn random_hypergraph(seed: u64) -> Hypergraph {
    let mut rng = rng(seed);
    let n = rng.gen_range(1..=5);
    let m = rng.gen_range(0..=6);
    let edges = (0..m).map(|_| random_subset(&mut rng, n)).collect();
    Hypergraph::new(n, edges).unwrap()
}

fn random_level(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Incidence> {
    let mut level = Vec::new();
    for upper in 0..cols {
        for lower in 0..rows {
            if rng.gen_bool(0.5) {
                let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                level.push(Incidence::new(lower, upper, sign));
            }
        }
    }
    level
}

/// Two incidence levels; level 1 has c₁ ≤ 5 d-cells and c₂ ≤ 4 (d+1)-cells
/// with random incidences and signs.
pub fn random_cw(seed: u64) -> CwHypergraph {
    let mut rng = rng(seed ^ 0x5eed_c0de);
    let c0 = rng.gen_range(1..=3);
    let c1 = rng.gen_range(1..=5);
    let c2 = rng.gen_range(1..=4);
    let level0 = random_level(&mut rng, c0, c1);
    let level1 = random_level(&mut rng, c1, c2);
    let mut skeletons = BTreeMap::new();
    if rng.gen_bool(0.5) {
        for (d, count) in [(1, c1), (2, c2)] {
            for j in 0..count {
                skeletons.insert((d, j), random_subset(&mut rng, c0));
            }
        }
    }
    CwHypergraph::with_skeletons(vec![c0, c1, c2], vec![level0, level1], skeletons).unwrap()
}

/// Plain i64 matrix product, independent of the library's BigInt routines.
pub fn mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let inner = b.len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..inner).map(|l| a[i][l] * b[l][j]).sum()).collect())
        .collect()
}

pub fn transpose_i64(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    (0..cols).map(|j| a.iter().map(|row| row[j]).collect()).collect()
}
