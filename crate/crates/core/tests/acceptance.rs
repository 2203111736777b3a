//! Runs every acceptance criterion and prints one PASS/FAIL line each.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_cw, random_hypergraph, RANDOM_INSTANCES};
use hyperlap_core::enumerate::{
    cross_check, cross_check_level, enum_signed_walks, enum_walks, walk_sign, DEFAULT_BUDGET,
};
use hyperlap_core::evolve::{evolution_operator, partition_trace, ComplexMatrix};
use hyperlap_core::formats::{
    fig1, fig2, fig2_example_lower_walk, fig2_example_upper_walk, parse_cw, parse_hg, serialize_cw, serialize_hg,
};
use hyperlap_core::laplacian::{cw_laplacian, hypergraph_laplacian, susy_laplacian};
use hyperlap_core::walkcount::{count_walks, matrix_power, signed_count};
use hyperlap_core::{Instance, Parity, Sign, WalkKind, WalkQuery};
use num_bigint::BigInt;
use num_complex::Complex64;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(elapsed)
}

fn both_methods(kind: WalkKind, from: usize, to: usize, k: u64, expected: u64) -> Outcome {
    let start = Instant::now();
    let h = fig1();
    let q = WalkQuery { kind, level: 0, from, to, length: k };
    let matrix = count_walks(&h, q).map_err(|e| e.to_string())?.value;
    let walks = enum_walks(&h, kind, from, to, k as usize, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(matrix == BigInt::from(expected), || format!("matrix gave {matrix}"))?;
    ensure(walks.len() as u64 == expected, || format!("enumerator listed {}", walks.len()))?;
    let elapsed = within(Duration::from_secs(5), start)?;
    Ok(format!("matrix {matrix}, enumerated {}, {elapsed:.2?}", walks.len()))
}

fn ac1() -> Outcome {
    both_methods(WalkKind::Vertex, 0, 2, 4, 5886)
}

fn ac2() -> Outcome {
    both_methods(WalkKind::Edge, 6, 8, 3, 384)
}

fn ac3() -> Outcome {
    let x = fig2();
    let incidence = x.sign(1, 5, 0);
    ensure(incidence == Some(Sign::Minus), || format!("sign(e6 in f1) = {incidence:?}"))?;
    let lower = walk_sign(&x, &fig2_example_lower_walk()).map_err(|e| e.to_string())?;
    ensure(lower == Sign::Plus, || format!("lower walk sign {lower}"))?;
    let upper = walk_sign(&x, &fig2_example_upper_walk()).map_err(|e| e.to_string())?;
    ensure(upper == Sign::Minus, || format!("upper walk sign {upper}"))?;
    Ok(format!("incidence -1, lower walk {lower}, upper walk {upper}"))
}

fn ac4() -> Outcome {
    let x = fig2();
    let queries = [
        (WalkQuery::lower(1, 0, 5, 4), 0),
        (WalkQuery::upper(1, 0, 2, 1), 1),
        (WalkQuery::upper(1, 0, 2, 2), 1),
    ];
    let mut notes = Vec::new();
    for (q, reference) in queries {
        let matrix = signed_count(&x, q).map_err(|e| e.to_string())?.value;
        let walks = enum_signed_walks(&x, q.level, q.kind, q.from, q.to, q.length as usize, DEFAULT_BUDGET)
            .map_err(|e| e.to_string())?;
        let oracle: i64 = walks.iter().map(|(_, s)| s.value()).sum();
        ensure(matrix == BigInt::from(oracle), || format!("{q:?}: matrix {matrix} vs oracle {oracle}"))?;
        let agrees = if matrix == BigInt::from(reference) { "matches" } else { "differs from" };
        notes.push(format!(
            "{} k={} sum {matrix} over {} walks ({agrees} reference {reference:+})",
            q.kind,
            q.length,
            walks.len()
        ));
    }
    Ok(notes.join("; "))
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let mut comparisons = 0;
    for seed in 0..RANDOM_INSTANCES {
        let h = random_hypergraph(seed);
        let report = cross_check(&Instance::Hypergraph(h), 4, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("hypergraph seed {seed}: {:?}", report.mismatches.first()))?;
        comparisons += report.entries.len();
        let x = random_cw(seed);
        let report = cross_check_level(&x, 1, 4, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("cw seed {seed}: {:?}", report.mismatches.first()))?;
        comparisons += report.entries.len();
    }
    let elapsed = within(Duration::from_secs(60), start)?;
    Ok(format!("{comparisons} comparisons, 0 mismatches, {elapsed:.2?}"))
}

fn trace_pair(even: &hyperlap_core::ExactMatrix, odd: &hyperlap_core::ExactMatrix) -> Result<(), String> {
    for k in 1..=6 {
        let a = matrix_power(even, k).trace();
        let b = matrix_power(odd, k).trace();
        ensure(a == b, || format!("k={k}: {a} vs {b}"))?;
    }
    Ok(())
}

fn ac6() -> Outcome {
    let mut checked = 0;
    let mut hs = vec![fig1(), fig2().project_hypergraph().map_err(|e| e.to_string())?];
    hs.extend((0..RANDOM_INSTANCES).map(random_hypergraph));
    for h in &hs {
        let even = hypergraph_laplacian(h, Parity::Even).map_err(|e| e.to_string())?;
        let odd = hypergraph_laplacian(h, Parity::Odd).map_err(|e| e.to_string())?;
        trace_pair(&even, &odd)?;
        checked += 1;
    }
    let mut xs = vec![fig2()];
    xs.extend((0..RANDOM_INSTANCES).map(random_cw));
    for x in &xs {
        for d in 0..x.levels() {
            let even = cw_laplacian(x, d, Parity::Even).map_err(|e| e.to_string())?;
            let odd = cw_laplacian(x, d, Parity::Odd).map_err(|e| e.to_string())?;
            trace_pair(&even, &odd)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} Laplacian pairs, k = 1..6"))
}

fn ac7() -> Outcome {
    let h = fig1();
    let m = susy_laplacian(&h).map_err(|e| e.to_string())?;
    let id = ComplexMatrix::identity(m.dim());
    let mut worst_unitary: f64 = 0.0;
    for theta in [0.01, 0.1, 1.0, 10.0] {
        let u = evolution_operator(&m, theta).map_err(|e| e.to_string())?;
        worst_unitary = worst_unitary.max((&(&u * &u.adjoint()) - &id).max_norm());
    }
    ensure(worst_unitary < 1e-10, || format!("unitarity defect {worst_unitary:e}"))?;
    let mut worst_compose: f64 = 0.0;
    for (a, b) in [(0.01, 0.1), (0.1, 1.0), (1.0, 10.0), (0.3, 0.7)] {
        let whole = evolution_operator(&m, a + b).map_err(|e| e.to_string())?;
        let split = &evolution_operator(&m, a).map_err(|e| e.to_string())?
            * &evolution_operator(&m, b).map_err(|e| e.to_string())?;
        worst_compose = worst_compose.max((&whole - &split).max_norm());
    }
    ensure(worst_compose < 1e-9, || format!("composition error {worst_compose:e}"))?;
    let z = partition_trace(&h, 0.0).map_err(|e| e.to_string())?;
    ensure(z == Complex64::new(13.0, 0.0), || format!("trace at zero {z}"))?;
    Ok(format!("unitarity {worst_unitary:.1e}, composition {worst_compose:.1e}, Z(0) = {}", z.re))
}

fn ac8() -> Outcome {
    let h = fig1();
    ensure(parse_hg(&serialize_hg(&h)).ok() == Some(h), || "fig1 round-trip".into())?;
    let x = fig2();
    ensure(parse_cw(&serialize_cw(&x)).ok() == Some(x), || "fig2 round-trip".into())?;
    for seed in 0..RANDOM_INSTANCES {
        let h = random_hypergraph(seed);
        ensure(parse_hg(&serialize_hg(&h)).ok() == Some(h), || format!("hypergraph seed {seed}"))?;
        let x = random_cw(seed);
        ensure(parse_cw(&serialize_cw(&x)).ok() == Some(x), || format!("cw seed {seed}"))?;
    }
    Ok(format!("2 fixtures and {} random instances", 2 * RANDOM_INSTANCES))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1 fig1 vertex walks 1->3, k=4 = 5886", ac1),
        ("AC2 fig1 edge walks 7->9, k=3 = 384", ac2),
        ("AC3 fig2 sign facts", ac3),
        ("AC4 fig2 signed sums, matrix vs oracle", ac4),
        ("AC5 oracle equivalence on random instances", ac5),
        ("AC6 power trace identities", ac6),
        ("AC7 evolution properties", ac7),
        ("AC8 format round-trips", ac8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
