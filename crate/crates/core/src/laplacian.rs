//! Incidence matrices and the even/odd Laplacians of hypergraphs and
//! CW-hypergraphs, in exact integer arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::model::{CwHypergraph, Hypergraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl FromStr for Parity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(format!("unknown parity `{other}` (expected even or odd)")),
        }
    }
}

/// Which operator a matrix was derived from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Plain,
    Even,
    Odd,
    Supersymmetric,
    CwEven { level: usize },
    CwOdd { level: usize },
}

impl Family {
    pub fn is_laplacian(self) -> bool {
        self != Family::Plain
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Plain => f.write_str("plain"),
            Family::Even => f.write_str("even"),
            Family::Odd => f.write_str("odd"),
            Family::Supersymmetric => f.write_str("supersymmetric"),
            Family::CwEven { level } => write!(f, "cw-even(d={level})"),
            Family::CwOdd { level } => write!(f, "cw-odd(d={level})"),
        }
    }
}

/// Family plus the power the base matrix was raised to (1 for the base itself).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub family: Family,
    pub exponent: u64,
}

/// 0/1 vertex-by-edge membership matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<u8>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.cols + j]
    }

    pub fn column_sums(&self) -> Vec<usize> {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j) as usize).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as i64).collect())
            .collect()
    }
}

/// Signed {-1, 0, +1} matrix between d-cells (rows) and (d+1)-cells (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedIncidenceMatrix {
    level: usize,
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl SignedIncidenceMatrix {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) as i64).collect())
            .collect()
    }
}

/// Dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<BigInt>,
    provenance: Provenance,
}

impl ExactMatrix {
    pub fn zeros(dim: usize) -> Self {
        ExactMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
            provenance: Provenance {
                family: Family::Plain,
                exponent: 1,
            },
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has the wrong length");
            for (j, &x) in row.iter().enumerate() {
                m.entries[i * dim + j] = BigInt::from(x);
            }
        }
        m
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = Self::zeros(self.dim).with_provenance(self.provenance);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Plain matrix product; the result carries `Family::Plain`.
    pub fn multiply(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let n = self.dim;
        let mut out = vec![BigInt::zero(); n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for (j, slot) in out_row.iter_mut().enumerate() {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        *slot += a * b;
                    }
                }
            }
        }
        Ok(ExactMatrix {
            dim: n,
            entries: out,
            provenance: Provenance {
                family: Family::Plain,
                exponent: 1,
            },
        })
    }

    /// xᵗ·M·x in exact arithmetic.
    pub fn quadratic_form(&self, x: &[i64]) -> Result<BigInt> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut acc = BigInt::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += self.get(i, j) * x[i] * x[j];
            }
        }
        Ok(acc)
    }

    /// Entries as f64, row-major. Values beyond f64 range become ±inf.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries
            .iter()
            .map(|x| {
                x.to_f64().unwrap_or(if x.is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                })
            })
            .collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.dim {
            let row: Vec<String> = cells[i * self.dim..(i + 1) * self.dim]
                .iter()
                .map(|c| format!("{c:>width$}"))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Gram-type product of a dense rows×cols integer matrix `a`:
/// `a·aᵗ` (rows×rows) for `Parity::Even`, `aᵗ·a` (cols×cols) for `Parity::Odd`.
fn gram(rows: usize, cols: usize, a: impl Fn(usize, usize) -> i64, parity: Parity, family: Family) -> ExactMatrix {
    let dim = match parity {
        Parity::Even => rows,
        Parity::Odd => cols,
    };
    let inner = match parity {
        Parity::Even => cols,
        Parity::Odd => rows,
    };
    let at = |outer: usize, q: usize| match parity {
        Parity::Even => a(outer, q),
        Parity::Odd => a(q, outer),
    };
    let mut m = ExactMatrix::zeros(dim).with_provenance(Provenance { family, exponent: 1 });
    for i in 0..dim {
        for j in i..dim {
            let s: i64 = (0..inner).map(|q| at(i, q) * at(j, q)).sum();
            m.set(i, j, BigInt::from(s));
            m.set(j, i, BigInt::from(s));
        }
    }
    m
}

pub fn incidence(h: &Hypergraph) -> Result<IncidenceMatrix> {
    h.ensure_valid()?;
    let (rows, cols) = (h.vertex_count(), h.edge_count());
    let mut entries = vec![0u8; rows * cols];
    for (j, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            entries[v * cols + j] = 1;
        }
    }
    Ok(IncidenceMatrix { rows, cols, entries })
}

/// Even: I·Iᵗ (vertex-indexed). Odd: Iᵗ·I (edge-indexed).
pub fn hypergraph_laplacian(h: &Hypergraph, parity: Parity) -> Result<ExactMatrix> {
    let inc = incidence(h)?;
    let family = match parity {
        Parity::Even => Family::Even,
        Parity::Odd => Family::Odd,
    };
    Ok(gram(inc.rows, inc.cols, |i, j| inc.get(i, j) as i64, parity, family))
}

pub fn d_incidence(x: &CwHypergraph, level: usize) -> Result<SignedIncidenceMatrix> {
    x.check_level(level)?;
    x.ensure_valid()?;
    let (rows, cols) = (x.count(level), x.count(level + 1));
    let mut entries = vec![0i8; rows * cols];
    for inc in x.incidences(level) {
        entries[inc.lower * cols + inc.upper] = inc.sign.value() as i8;
    }
    Ok(SignedIncidenceMatrix {
        level,
        rows,
        cols,
        entries,
    })
}

/// Even: I_d·I_dᵗ on d-cells. Odd: I_dᵗ·I_d on (d+1)-cells.
pub fn cw_laplacian(x: &CwHypergraph, level: usize, parity: Parity) -> Result<ExactMatrix> {
    let inc = d_incidence(x, level)?;
    let family = match parity {
        Parity::Even => Family::CwEven { level },
        Parity::Odd => Family::CwOdd { level },
    };
    Ok(gram(inc.rows, inc.cols, |i, j| inc.get(i, j) as i64, parity, family))
}

/// Block-diagonal Δ⁺ ⊕ Δ⁻ of size (n+m)×(n+m).
pub fn susy_laplacian(h: &Hypergraph) -> Result<ExactMatrix> {
    let even = hypergraph_laplacian(h, Parity::Even)?;
    let odd = hypergraph_laplacian(h, Parity::Odd)?;
    let (n, m) = (even.dim(), odd.dim());
    let mut sum = ExactMatrix::zeros(n + m).with_provenance(Provenance {
        family: Family::Supersymmetric,
        exponent: 1,
    });
    for i in 0..n {
        for j in 0..n {
            sum.set(i, j, even.get(i, j).clone());
        }
    }
    for i in 0..m {
        for j in 0..m {
            sum.set(n + i, n + j, odd.get(i, j).clone());
        }
    }
    Ok(sum)
}
