//! Dense complex matrices for one to four qubit-sized spaces.
//!
//! Storage is row-major: entry (r, c) of a matrix of dimension `dim` lives at
//! index `r * dim + c`. Dimensions are restricted to 2, 4, 8 and 16; the
//! 16-dimensional case exists for Choi matrices of two-qubit maps.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 16;

fn valid_dim(dim: usize) -> bool {
    matches!(dim, 2 | 4 | 8 | 16)
}

/// Dense complex square matrix with row-major storage.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given dimension (2, 4, 8 or 16).
    pub fn zeros(dim: usize) -> Result<Self> {
        if !valid_dim(dim) {
            return Err(Error::InvalidDimension(dim));
        }
        Ok(ComplexMatrix {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    /// Identity matrix of the given dimension.
    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        Ok(m)
    }

    /// Builds a matrix from row-major entries; the length must be a
    /// supported dimension squared.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if !valid_dim(dim) {
            return Err(Error::InvalidDimension(dim));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for dim {}, got {}",
                dim * dim,
                dim,
                entries.len()
            )));
        }
        Ok(ComplexMatrix { dim, entries })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::from_entries(
            dim,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, self.get(c, r).conj());
            }
        }
        out
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e = e.conj();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = self.clone();
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(r, c, self.get(c, r));
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            *e *= s;
        }
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex64::new(s, 0.0))
    }

    /// Kronecker product, left factor in the most significant position.
    pub fn kron(&self, other: &ComplexMatrix) -> Result<Self> {
        let dim = self.dim * other.dim;
        if !valid_dim(dim) {
            return Err(Error::InvalidDimension(dim));
        }
        let mut out = Self::zeros(dim)?;
        for r1 in 0..self.dim {
            for c1 in 0..self.dim {
                let a = self.get(r1, c1);
                for r2 in 0..other.dim {
                    for c2 in 0..other.dim {
                        out.set(
                            r1 * other.dim + r2,
                            c1 * other.dim + c2,
                            a * other.get(r2, c2),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// Largest entrywise |self - other|. Panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &ComplexMatrix) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff: dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of |M - M^dagger|.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for c in 0..self.dim {
                worst = worst.max((self.get(r, c) - self.get(c, r).conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling and squaring with a Taylor series.
    ///
    /// Accurate for the small generators used here (norms of order one);
    /// the series is summed until terms fall below 1e-20 relative size.
    pub fn expm(&self) -> Self {
        let norm = self.max_abs_entry() * self.dim as f64;
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale_real(0.5f64.powi(squarings as i32));

        let mut result = ComplexMatrix::identity(self.dim).expect("dim already validated");
        let mut term = result.clone();
        for k in 1..=40 {
            term = &(&term * &scaled) * Complex64::new(1.0 / k as f64, 0.0);
            result = &result + &term;
            if term.max_abs_entry() < 1e-20 {
                break;
            }
        }
        for _ in 0..squarings {
            result = &result * &result;
        }
        result
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "add: dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        ComplexMatrix {
            dim: self.dim,
            entries,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "sub: dimension mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        ComplexMatrix {
            dim: self.dim,
            entries,
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "mul: dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n).expect("dim already validated");
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for c in 0..n {
                    let v = out.get(r, c) + a * rhs.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

impl Mul<Complex64> for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Complex64) -> ComplexMatrix {
        self.scale(rhs)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix dim={}", self.dim)?;
        for r in 0..self.dim {
            for c in 0..self.dim {
                let e = self.get(r, c);
                write!(f, "({:+.4}{:+.4}i) ", e.re, e.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_unsupported_dimensions() {
        for dim in [0, 1, 3, 5, 32] {
            assert!(matches!(
                ComplexMatrix::zeros(dim),
                Err(Error::InvalidDimension(_))
            ));
        }
    }

    #[test]
    fn storage_order_is_row_major() {
        let mut m = ComplexMatrix::zeros(2).unwrap();
        m.set(0, 1, c(3.0, -1.0));
        assert_eq!(m.get(0, 1), c(3.0, -1.0));
        assert_eq!(m.get(1, 0), c(0.0, 0.0));
        assert_eq!(m.entries[1], c(3.0, -1.0));
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let id2 = ComplexMatrix::identity(2).unwrap();
        let id4 = ComplexMatrix::identity(4).unwrap();
        assert_eq!(id2.kron(&id2).unwrap(), id4);
    }

    #[test]
    fn kron_rejects_oversized_result() {
        let id4 = ComplexMatrix::identity(4).unwrap();
        let id8 = ComplexMatrix::identity(8).unwrap();
        assert!(id4.kron(&id8).is_err());
    }

    #[test]
    fn dagger_and_conj_agree_with_hand_values() {
        let m = ComplexMatrix::from_entries(2, vec![c(1.0, 2.0), c(0.0, -1.0), c(3.0, 0.0), c(0.0, 0.0)])
            .unwrap();
        assert_eq!(m.dagger().get(0, 1), c(3.0, 0.0));
        assert_eq!(m.dagger().get(1, 0), c(0.0, 1.0));
        assert_eq!(m.conj().get(0, 0), c(1.0, -2.0));
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let z = ComplexMatrix::zeros(4).unwrap();
        assert!(z.expm().max_abs_diff(&ComplexMatrix::identity(4).unwrap()) < 1e-15);
    }

    #[test]
    fn expm_matches_scalar_exponential_on_diagonal_matrix() {
        // exp(diag(i a, i b)) = diag(e^{ia}, e^{ib})
        let a = 0.7;
        let b = -1.3;
        let m = ComplexMatrix::from_entries(2, vec![c(0.0, a), c(0.0, 0.0), c(0.0, 0.0), c(0.0, b)])
            .unwrap();
        let e = m.expm();
        assert!((e.get(0, 0) - c(a.cos(), a.sin())).norm() < 1e-14);
        assert!((e.get(1, 1) - c(b.cos(), b.sin())).norm() < 1e-14);
        assert!(e.get(0, 1).norm() < 1e-15);
    }

    #[test]
    fn expm_of_pauli_rotation_matches_closed_form() {
        // exp(-i t X) = cos(t) I - i sin(t) X
        let t = 1.1;
        let x = ComplexMatrix::from_entries(
            2,
            vec![c(0.0, 0.0), c(0.0, -t), c(0.0, -t), c(0.0, 0.0)],
        )
        .unwrap();
        let e = x.expm();
        assert!((e.get(0, 0) - c(t.cos(), 0.0)).norm() < 1e-13);
        assert!((e.get(0, 1) - c(0.0, -t.sin())).norm() < 1e-13);
    }
}
