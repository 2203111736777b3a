//! Evolution operator exp(−iθΔ) for a symmetric integer Laplacian Δ.
//!
//! θ stands for t/ħ. The exponential is computed by scaling and squaring
//! around a Taylor series; for symmetric Δ the result is unitary up to
//! rounding.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::laplacian::{hypergraph_laplacian, ExactMatrix, Parity};
use crate::model::Hypergraph;

/// ‖A/2^s‖₁ is brought below this before the series is summed.
const SCALED_NORM_BOUND: f64 = 0.5;
const MAX_SERIES_TERMS: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Real matrix from row-major entries, each multiplied by `factor`.
    pub fn from_real_scaled(dim: usize, entries: &[f64], factor: Complex64) -> Self {
        assert_eq!(entries.len(), dim * dim);
        ComplexMatrix {
            dim,
            data: entries.iter().map(|&x| factor * x).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[j * self.dim + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn scale(&self, factor: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|&z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl<'a> Mul<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.data[i * n + l];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[l * n + j];
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a ComplexMatrix> for &'a ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &'a ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Amplitudes over the vertex block followed by the edge block.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector(pub Vec<Complex64>);

impl StateVector {
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); dim];
        v[index] = Complex64::new(1.0, 0.0);
        StateVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// exp(A) for a general complex matrix by scaling and squaring.
fn expm(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.dim();
    let norm = a.one_norm();
    let mut squarings = 0u32;
    while norm / 2f64.powi(squarings as i32) > SCALED_NORM_BOUND {
        squarings += 1;
    }
    let scaled = a.scale(Complex64::new(2f64.powi(-(squarings as i32)), 0.0));

    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for j in 1..=MAX_SERIES_TERMS {
        term = (&term * &scaled).scale(Complex64::new(1.0 / j as f64, 0.0));
        sum = &sum + &term;
        // Remaining tail is bounded by the current term since ‖scaled‖ ≤ 1/2.
        if term.one_norm() <= f64::EPSILON * 1e-2 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// exp(−i·θ·M). Rejects non-symmetric `m` and non-finite θ.
pub fn evolution_operator(m: &ExactMatrix, theta: f64) -> Result<ComplexMatrix> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if !theta.is_finite() {
        return Err(Error::Invalid(format!("theta must be finite, got {theta}")));
    }
    if theta == 0.0 {
        return Ok(ComplexMatrix::identity(m.dim()));
    }
    let entries = m.to_f64();
    if entries.iter().any(|x| !x.is_finite()) {
        return Err(Error::Invalid("matrix entries exceed double precision range".into()));
    }
    let a = ComplexMatrix::from_real_scaled(m.dim(), &entries, Complex64::new(0.0, -theta));
    let u = expm(&a);
    if !u.is_finite() {
        return Err(Error::Invalid("evolution operator is not finite".into()));
    }
    Ok(u)
}

pub fn evolve_state(u: &ComplexMatrix, psi: &StateVector) -> Result<StateVector> {
    if psi.dim() != u.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            found: psi.dim(),
        });
    }
    let n = u.dim();
    let out = (0..n)
        .map(|i| (0..n).map(|j| u.get(i, j) * psi.0[j]).sum())
        .collect();
    Ok(StateVector(out))
}

/// trace exp(−iθΔ⁺) + trace exp(−iθΔ⁻), computed block by block.
pub fn partition_trace(h: &Hypergraph, theta: f64) -> Result<Complex64> {
    let even = hypergraph_laplacian(h, Parity::Even)?;
    let odd = hypergraph_laplacian(h, Parity::Odd)?;
    if theta == 0.0 {
        return Ok(Complex64::new((even.dim() + odd.dim()) as f64, 0.0));
    }
    let t_even = evolution_operator(&even, theta)?.trace();
    let t_odd = evolution_operator(&odd, theta)?.trace();
    Ok(t_even + t_odd)
}
