//! Walk counts and signed walk sums read off exact powers of the Laplacians.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laplacian::{cw_laplacian, hypergraph_laplacian, ExactMatrix, Family, Parity, Provenance};
use crate::model::{CwHypergraph, Hypergraph};

/// The four walk families.
///
/// `Vertex` walks alternate vertex, edge, vertex, ...; `Edge` walks alternate
/// edge, vertex, edge, .... `Lower` walks alternate d-cells and (d+1)-cells
/// starting from a d-cell; `Upper` walks start from a (d+1)-cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkKind {
    Vertex,
    Edge,
    Lower,
    Upper,
}

impl WalkKind {
    pub fn name(self) -> &'static str {
        match self {
            WalkKind::Vertex => "vertex",
            WalkKind::Edge => "edge",
            WalkKind::Lower => "lower",
            WalkKind::Upper => "upper",
        }
    }

    pub fn is_signed(self) -> bool {
        matches!(self, WalkKind::Lower | WalkKind::Upper)
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WalkKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "vertex" => Ok(WalkKind::Vertex),
            "edge" => Ok(WalkKind::Edge),
            "lower" => Ok(WalkKind::Lower),
            "upper" => Ok(WalkKind::Upper),
            other => Err(format!(
                "unknown walk kind `{other}` (expected vertex, edge, lower or upper)"
            )),
        }
    }
}

/// A walk-count question. Indices are 0-based; `level` is only read for
/// the signed kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkQuery {
    pub kind: WalkKind,
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub length: u64,
}

impl WalkQuery {
    pub fn vertex(from: usize, to: usize, length: u64) -> Self {
        WalkQuery {
            kind: WalkKind::Vertex,
            level: 0,
            from,
            to,
            length,
        }
    }

    pub fn edge(from: usize, to: usize, length: u64) -> Self {
        WalkQuery {
            kind: WalkKind::Edge,
            ..Self::vertex(from, to, length)
        }
    }

    pub fn lower(level: usize, from: usize, to: usize, length: u64) -> Self {
        WalkQuery {
            kind: WalkKind::Lower,
            level,
            from,
            to,
            length,
        }
    }

    pub fn upper(level: usize, from: usize, to: usize, length: u64) -> Self {
        WalkQuery {
            kind: WalkKind::Upper,
            ..Self::lower(level, from, to, length)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigInt,
    pub query: WalkQuery,
    pub family: Family,
}

/// Mᵏ by binary exponentiation; M⁰ is the identity.
pub fn matrix_power(m: &ExactMatrix, k: u64) -> ExactMatrix {
    let mut result = ExactMatrix::identity(m.dim());
    let mut base = m.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            result = result.multiply(&base).expect("square factors of equal size");
        }
        e >>= 1;
        if e > 0 {
            base = base.multiply(&base).expect("square factors of equal size");
        }
    }
    let p = m.provenance();
    result.with_provenance(Provenance {
        family: p.family,
        exponent: p.exponent * k,
    })
}

/// `[M⁰, M¹, …, Mᵏᵐᵃˣ]` by repeated multiplication.
pub fn power_table(m: &ExactMatrix, kmax: u64) -> Vec<ExactMatrix> {
    let p = m.provenance();
    let mut table = Vec::with_capacity(kmax as usize + 1);
    let mut current = ExactMatrix::identity(m.dim()).with_provenance(Provenance {
        family: p.family,
        exponent: 0,
    });
    for k in 1..=kmax {
        let next = current.multiply(m).expect("square factors of equal size");
        table.push(current);
        current = next.with_provenance(Provenance {
            family: p.family,
            exponent: p.exponent * k,
        });
    }
    table.push(current);
    table
}

fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            what,
            index: index + 1,
            bound,
        })
    }
}

/// Base matrix whose powers answer unsigned queries of `kind` on `h`.
pub fn unsigned_base(h: &Hypergraph, kind: WalkKind) -> Result<ExactMatrix> {
    match kind {
        WalkKind::Vertex => hypergraph_laplacian(h, Parity::Even),
        WalkKind::Edge => hypergraph_laplacian(h, Parity::Odd),
        other => Err(Error::KindMismatch { kind: other.name() }),
    }
}

/// Base matrix whose powers answer signed queries of `kind` at `level`.
pub fn signed_base(x: &CwHypergraph, kind: WalkKind, level: usize) -> Result<ExactMatrix> {
    match kind {
        WalkKind::Lower => cw_laplacian(x, level, Parity::Even),
        WalkKind::Upper => cw_laplacian(x, level, Parity::Odd),
        other => Err(Error::KindMismatch { kind: other.name() }),
    }
}

fn answer(base: &ExactMatrix, q: WalkQuery, what: &'static str) -> Result<CountResult> {
    check_index(what, q.from, base.dim())?;
    check_index(what, q.to, base.dim())?;
    let power = matrix_power(base, q.length);
    Ok(CountResult {
        value: power.get(q.from, q.to).clone(),
        query: q,
        family: base.provenance().family,
    })
}

/// Number of vertex walks ((Δ⁺)ᵏ) or edge walks ((Δ⁻)ᵏ) of length k.
pub fn count_walks(h: &Hypergraph, q: WalkQuery) -> Result<CountResult> {
    let base = unsigned_base(h, q.kind)?;
    let what = if q.kind == WalkKind::Vertex { "vertex" } else { "edge" };
    answer(&base, q, what)
}

/// Signed sum over lower walks ((Δ_d⁺)ᵏ) or upper walks ((Δ_d⁻)ᵏ) of length k.
pub fn signed_count(x: &CwHypergraph, q: WalkQuery) -> Result<CountResult> {
    let base = signed_base(x, q.kind, q.level)?;
    let what = if q.kind == WalkKind::Lower { "lower-cell" } else { "upper-cell" };
    answer(&base, q, what)
}
