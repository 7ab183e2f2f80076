//! Pauli matrices, Pauli strings, and the real coefficient expansion of a
//! density matrix over them.
//!
//! Index convention: 0 is the identity, 1, 2, 3 are the x, y, z Pauli
//! matrices with the standard signs. A string over n qubits is a sequence of
//! such indices, qubit A first (most significant tensor slot).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::state::DensityMatrix;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn pauli_matrix(index: usize) -> ComplexMatrix {
    let entries = match index {
        0 => vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        1 => vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        2 => vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)],
        3 => vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)],
        _ => unreachable!("pauli_matrix called with validated index"),
    };
    ComplexMatrix::from_entries(2, entries).expect("2x2 is always valid")
}

/// Single-qubit Pauli matrix: identity for 0, x/y/z for 1/2/3.
pub fn pauli(index: usize) -> Result<ComplexMatrix> {
    if index > 3 {
        return Err(Error::PauliIndex(index));
    }
    Ok(pauli_matrix(index))
}

/// Kronecker product of per-qubit Pauli matrices, qubit A first.
pub fn pauli_string(n_qubits: usize, indices: &[usize]) -> Result<ComplexMatrix> {
    if indices.len() != n_qubits {
        return Err(Error::domain(format!(
            "pauli_string: {} indices for {} qubits",
            indices.len(),
            n_qubits
        )));
    }
    if !(1..=3).contains(&n_qubits) {
        return Err(Error::domain(format!(
            "pauli_string: {n_qubits} qubits unsupported"
        )));
    }
    let mut out = pauli(indices[0])?;
    for &i in &indices[1..] {
        out = out.kron(&pauli(i)?)?;
    }
    Ok(out)
}

/// Real coefficients of a state over all n-qubit Pauli strings.
///
/// Coefficient of string s is tr(rho P_s); the all-identity coefficient is 1
/// and the state is recovered as 2^{-n} sum_s c_s P_s.
#[derive(Clone, Debug)]
pub struct PauliDecomposition {
    n_qubits: usize,
    coeffs: Vec<f64>,
}

impl PauliDecomposition {
    /// All-zero coefficients except the identity string, i.e. the maximally
    /// mixed state.
    pub fn identity(n_qubits: usize) -> Result<Self> {
        if !(1..=3).contains(&n_qubits) {
            return Err(Error::domain(format!(
                "PauliDecomposition: {n_qubits} qubits unsupported"
            )));
        }
        let mut coeffs = vec![0.0; 4usize.pow(n_qubits as u32)];
        coeffs[0] = 1.0;
        Ok(PauliDecomposition { n_qubits, coeffs })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Flat index of a string: base-4 digits, qubit A most significant.
    fn flat_index(&self, indices: &[usize]) -> Result<usize> {
        if indices.len() != self.n_qubits {
            return Err(Error::domain(format!(
                "string has {} indices, state has {} qubits",
                indices.len(),
                self.n_qubits
            )));
        }
        let mut flat = 0;
        for &i in indices {
            if i > 3 {
                return Err(Error::PauliIndex(i));
            }
            flat = flat * 4 + i;
        }
        Ok(flat)
    }

    pub fn coeff(&self, indices: &[usize]) -> Result<f64> {
        Ok(self.coeffs[self.flat_index(indices)?])
    }

    pub fn set_coeff(&mut self, indices: &[usize], value: f64) -> Result<()> {
        let flat = self.flat_index(indices)?;
        if flat == 0 && (value - 1.0).abs() > 1e-12 {
            return Err(Error::domain(
                "the all-identity coefficient is fixed at 1",
            ));
        }
        self.coeffs[flat] = value;
        Ok(())
    }

    /// Coefficients in flat order (identity string first).
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    fn indices_of(&self, flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.n_qubits];
        let mut rem = flat;
        for slot in (0..self.n_qubits).rev() {
            out[slot] = rem % 4;
            rem /= 4;
        }
        out
    }
}

/// Expands a state over Pauli strings.
pub fn decompose(rho: &DensityMatrix) -> PauliDecomposition {
    let n = rho.n_qubits();
    let count = 4usize.pow(n as u32);
    let mut d = PauliDecomposition {
        n_qubits: n,
        coeffs: vec![0.0; count],
    };
    for flat in 0..count {
        let indices = d.indices_of(flat);
        let p = pauli_string(n, &indices).expect("indices in range by construction");
        d.coeffs[flat] = trace_product(rho.matrix(), &p).re;
    }
    d.coeffs[0] = 1.0;
    d
}

/// Rebuilds the matrix 2^{-n} sum_s c_s P_s.
///
/// The result is always Hermitian with trace 1, but may fail positivity;
/// callers decide whether to validate it as a state.
pub fn reconstruct(d: &PauliDecomposition) -> Result<ComplexMatrix> {
    if (d.coeffs[0] - 1.0).abs() > 1e-12 {
        return Err(Error::domain(
            "reconstruct: the all-identity coefficient must be 1",
        ));
    }
    let n = d.n_qubits;
    let dim = 2usize.pow(n as u32);
    let mut out = ComplexMatrix::zeros(dim)?;
    let scale = 1.0 / dim as f64;
    for (flat, &coeff) in d.coeffs.iter().enumerate() {
        if coeff == 0.0 {
            continue;
        }
        let p = pauli_string(n, &d.indices_of(flat))?;
        out = &out + &p.scale_real(coeff * scale);
    }
    Ok(out)
}

/// tr(a b) without forming the product matrix.
pub(crate) fn trace_product(a: &ComplexMatrix, b: &ComplexMatrix) -> Complex64 {
    let n = a.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..n {
        for k in 0..n {
            acc += a.get(r, k) * b.get(k, r);
        }
    }
    acc
}

/// Complex Pauli coefficients tr(P_s M) of an arbitrary matrix, flat order.
///
/// Used to extend coefficient-scaling maps from states to the matrix units
/// needed by the Choi construction.
pub(crate) fn complex_coefficients(m: &ComplexMatrix, n_qubits: usize) -> Vec<Complex64> {
    let count = 4usize.pow(n_qubits as u32);
    let probe = PauliDecomposition {
        n_qubits,
        coeffs: vec![0.0; count],
    };
    (0..count)
        .map(|flat| {
            let p = pauli_string(n_qubits, &probe.indices_of(flat)).expect("valid indices");
            trace_product(&p, m)
        })
        .collect()
}

/// Rebuilds 2^{-n} sum_s c_s P_s from complex coefficients.
pub(crate) fn matrix_from_complex_coefficients(
    coeffs: &[Complex64],
    n_qubits: usize,
) -> Result<ComplexMatrix> {
    let dim = 2usize.pow(n_qubits as u32);
    let probe = PauliDecomposition {
        n_qubits,
        coeffs: vec![0.0; coeffs.len()],
    };
    let mut out = ComplexMatrix::zeros(dim)?;
    let scale = Complex64::new(1.0 / dim as f64, 0.0);
    for (flat, &coeff) in coeffs.iter().enumerate() {
        if coeff.norm_sqr() == 0.0 {
            continue;
        }
        let p = pauli_string(n_qubits, &probe.indices_of(flat))?;
        out = &out + &p.scale(coeff * scale);
    }
    Ok(out)
}
