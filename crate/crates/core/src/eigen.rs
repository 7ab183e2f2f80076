//! Cyclic Jacobi eigensolver for small complex Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pivot with a unitary plane rotation
//! carrying the pivot's phase; sweeps repeat until the off-diagonal Frobenius
//! norm drops below [`crate::tol::JACOBI_OFF`]. For the 2..=16 dimensions used
//! here this converges in a handful of sweeps and is deterministic, which
//! keeps every spectrum in the crate reproducible bit for bit.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::tol;

/// Hermiticity slack accepted on input; tighter than this is symmetrized away.
const INPUT_HERMITICITY: f64 = 1e-10;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (descending) and matching orthonormal eigenvectors (columns).
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                sum += a.get(p, q).norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<EigenDecomposition> {
    let defect = m.hermiticity_defect();
    if defect > INPUT_HERMITICITY {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();

    // Symmetrize round-off so the rotation formulas see an exactly
    // Hermitian matrix.
    let mut a = ComplexMatrix::zeros(n)?;
    for r in 0..n {
        a.set(r, r, Complex64::new(m.get(r, r).re, 0.0));
        for c in (r + 1)..n {
            let v = (m.get(r, c) + m.get(c, r).conj()).scale(0.5);
            a.set(r, c, v);
            a.set(c, r, v.conj());
        }
    }

    let mut v = ComplexMatrix::identity(n)?;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= tol::JACOBI_OFF {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > tol::JACOBI_OFF {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let values_raw: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    order.sort_by(|&i, &j| values_raw[j].partial_cmp(&values_raw[i]).unwrap());

    let values = order.iter().map(|&i| values_raw[i]).collect();
    let mut vectors = ComplexMatrix::zeros(n)?;
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors.set(row, col, v.get(row, src));
        }
    }
    Ok(EigenDecomposition { values, vectors })
}

/// Eigenvalues of a Hermitian matrix, in descending order.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    hermitian_eigensystem(m).map(|d| d.values)
}

/// One Jacobi rotation zeroing the (p, q) pivot of `a`, accumulated into `v`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag < 1e-300 {
        return;
    }
    let phase = apq / mag; // e^{i theta} of the pivot
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    // Classic stable tangent choice for the real rotation angle.
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta >= 0.0 {
        1.0 / (theta + (1.0 + theta * theta).sqrt())
    } else {
        -1.0 / (-theta + (1.0 + theta * theta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Unitary R differing from the identity only at:
    //   R[p][p] = c        R[p][q] = -s * phase
    //   R[q][p] = s * conj(phase)   R[q][q] = c
    let n = a.dim();
    let cs = Complex64::new(c, 0.0);
    let rp_q = phase.scale(-s);
    let rq_p = phase.conj().scale(s);

    // A <- A R (columns p, q)
    for i in 0..n {
        let aip = a.get(i, p);
        let aiq = a.get(i, q);
        a.set(i, p, aip * cs + aiq * rq_p);
        a.set(i, q, aip * rp_q + aiq * cs);
    }
    // A <- R^dagger A (rows p, q)
    for j in 0..n {
        let apj = a.get(p, j);
        let aqj = a.get(q, j);
        a.set(p, j, apj * cs + aqj * rq_p.conj());
        a.set(q, j, apj * rp_q.conj() + aqj * cs);
    }
    // Pivot is zero by construction; store it exactly.
    a.set(p, q, Complex64::new(0.0, 0.0));
    a.set(q, p, Complex64::new(0.0, 0.0));
    a.set(p, p, Complex64::new(a.get(p, p).re, 0.0));
    a.set(q, q, Complex64::new(a.get(q, q).re, 0.0));

    // V <- V R
    for i in 0..n {
        let vip = v.get(i, p);
        let viq = v.get(i, q);
        v.set(i, p, vip * cs + viq * rq_p);
        v.set(i, q, vip * rp_q + viq * cs);
    }
}

/// Hermitian square root of a positive-semidefinite matrix.
///
/// Eigenvalues in `[-floor, 0)` are clipped to zero; anything below the
/// floor is rejected as not positive semidefinite.
pub fn sqrt_psd(m: &ComplexMatrix, floor: f64) -> Result<ComplexMatrix> {
    let eig = hermitian_eigensystem(m)?;
    let n = m.dim();
    let mut roots = Vec::with_capacity(n);
    for &l in &eig.values {
        if l < -floor {
            return Err(Error::Numeric(format!(
                "sqrt_psd: eigenvalue {l:.3e} below the PSD floor"
            )));
        }
        roots.push(l.max(0.0).sqrt());
    }
    let mut out = ComplexMatrix::zeros(n)?;
    for r in 0..n {
        for c in 0..n {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, &root) in roots.iter().enumerate() {
                acc += eig.vectors.get(r, k) * root * eig.vectors.get(c, k).conj();
            }
            out.set(r, c, acc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::pauli_string;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_spectrum() {
        let id = ComplexMatrix::identity(4).unwrap();
        let vals = hermitian_eigenvalues(&id).unwrap();
        for v in vals {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn pauli_z_tensor_z_spectrum() {
        let zz = pauli_string(2, &[3, 3]).unwrap();
        let vals = hermitian_eigenvalues(&zz).unwrap();
        let expected = [1.0, 1.0, -1.0, -1.0];
        for (v, e) in vals.iter().zip(expected) {
            assert!((v - e).abs() < 1e-12, "got {vals:?}");
        }
    }

    #[test]
    fn rejects_non_hermitian_input() {
        let mut m = ComplexMatrix::zeros(2).unwrap();
        m.set(0, 1, c(1.0, 0.0));
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn complex_two_by_two_matches_closed_form() {
        // [[a, b e^{i phi}], [b e^{-i phi}, d]] has eigenvalues
        // (a+d)/2 +- sqrt(((a-d)/2)^2 + b^2)
        let (a, d, b, phi) = (0.3, -0.9, 0.7, 1.2f64);
        let m = ComplexMatrix::from_entries(
            2,
            vec![
                c(a, 0.0),
                c(b * phi.cos(), b * phi.sin()),
                c(b * phi.cos(), -b * phi.sin()),
                c(d, 0.0),
            ],
        )
        .unwrap();
        let vals = hermitian_eigenvalues(&m).unwrap();
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + b * b).sqrt();
        assert!((vals[0] - (mid + rad)).abs() < 1e-13);
        assert!((vals[1] - (mid - rad)).abs() < 1e-13);
    }

    /// Moment oracle: tr(H^k) = sum_i lambda_i^k pins the spectrum.
    #[test]
    fn eigenvalues_match_power_traces() {
        use crate::random::{random_density_matrix, seeded_rng};
        let mut rng = seeded_rng(7);
        for n_qubits in 1..=3usize {
            for _ in 0..25 {
                let rho = random_density_matrix(n_qubits, &mut rng);
                let h = rho.matrix();
                let vals = hermitian_eigenvalues(h).unwrap();
                let mut power = ComplexMatrix::identity(h.dim()).unwrap();
                for k in 1..=4 {
                    power = &power * h;
                    let trace = power.trace();
                    let moment: f64 = vals.iter().map(|l| l.powi(k)).sum();
                    assert!(
                        (trace.re - moment).abs() < 1e-10 && trace.im.abs() < 1e-10,
                        "moment {k} mismatch: {} vs {moment}",
                        trace.re
                    );
                }
            }
        }
    }

    #[test]
    fn eigenvectors_diagonalize() {
        use crate::random::{random_density_matrix, seeded_rng};
        let mut rng = seeded_rng(11);
        let rho = random_density_matrix(2, &mut rng);
        let eig = hermitian_eigensystem(rho.matrix()).unwrap();
        // V^dagger V = I
        let gram = &eig.vectors.dagger() * &eig.vectors;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(4).unwrap()) < 1e-12);
        // H V = V diag(lambda)
        let hv = rho.matrix() * &eig.vectors;
        let mut vl = ComplexMatrix::zeros(4).unwrap();
        for r in 0..4 {
            for col in 0..4 {
                vl.set(r, col, eig.vectors.get(r, col).scale(eig.values[col]));
            }
        }
        assert!(hv.max_abs_diff(&vl) < 1e-11);
    }

    #[test]
    fn sqrt_psd_squares_back() {
        use crate::random::{random_density_matrix, seeded_rng};
        let mut rng = seeded_rng(3);
        let rho = random_density_matrix(2, &mut rng);
        let root = sqrt_psd(rho.matrix(), tol::PSD_FLOOR).unwrap();
        let squared = &root * &root;
        assert!(squared.max_abs_diff(rho.matrix()) < 1e-11);
    }
}
