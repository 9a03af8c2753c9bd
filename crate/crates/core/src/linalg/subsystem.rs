//! Partial traces over qubit registers. Qubit 0 is the most significant
//! tensor factor, so basis index `b` has qubit `q` in bit `n - 1 - q`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{QcohError, Result};

fn check_keep(n_qubits: usize, keep: &[usize]) -> Result<()> {
    if keep.is_empty() {
        return Err(QcohError::BadSubsystem("no qubits kept".into()));
    }
    let mut seen = vec![false; n_qubits];
    for &q in keep {
        if q >= n_qubits {
            return Err(QcohError::BadSubsystem(format!(
                "qubit {q} out of range for {n_qubits} qubits"
            )));
        }
        if seen[q] {
            return Err(QcohError::BadSubsystem(format!("qubit {q} listed twice")));
        }
        seen[q] = true;
    }
    Ok(())
}

/// Offsets into the full register: `kept[i]` is the full-basis index with the
/// kept qubits set to the bits of `i` (in `keep` order) and everything else 0;
/// `traced[t]` likewise for the traced-out qubits in ascending order.
fn index_tables(n_qubits: usize, keep: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let traced_qubits: Vec<usize> = (0..n_qubits).filter(|q| !keep.contains(q)).collect();
    let scatter = |qubits: &[usize], idx: usize| -> usize {
        let m = qubits.len();
        qubits.iter().enumerate().fold(0usize, |acc, (pos, &q)| {
            let bit = (idx >> (m - 1 - pos)) & 1;
            acc | (bit << (n_qubits - 1 - q))
        })
    };
    let kept = (0..1usize << keep.len()).map(|i| scatter(keep, i)).collect();
    let traced = (0..1usize << traced_qubits.len())
        .map(|t| scatter(&traced_qubits, t))
        .collect();
    (kept, traced)
}

fn qubit_count(dim: usize) -> Result<usize> {
    if dim == 0 || !dim.is_power_of_two() {
        return Err(QcohError::BadSubsystem(format!(
            "dimension {dim} is not a power of two"
        )));
    }
    Ok(dim.trailing_zeros() as usize)
}

/// Reduced operator on the qubits in `keep`, ordered as listed.
pub fn partial_trace(rho: &ComplexMatrix, keep: &[usize]) -> Result<ComplexMatrix> {
    if !rho.is_square() {
        return Err(QcohError::NonSquare {
            rows: rho.rows(),
            cols: rho.cols(),
        });
    }
    let n = qubit_count(rho.rows())?;
    check_keep(n, keep)?;
    let (kept, traced) = index_tables(n, keep);
    let k = kept.len();
    Ok(ComplexMatrix::from_fn(k, k, |i, j| {
        traced
            .iter()
            .map(|&t| rho[(kept[i] | t, kept[j] | t)])
            .sum()
    }))
}

/// Reduced operator of the pure state `amplitudes` on the qubits in `keep`.
pub fn reduce_pure(amplitudes: &[Complex64], keep: &[usize]) -> Result<ComplexMatrix> {
    let n = qubit_count(amplitudes.len())?;
    check_keep(n, keep)?;
    let (kept, traced) = index_tables(n, keep);
    let k = kept.len();
    let mut out = ComplexMatrix::zeros(k, k);
    for &t in &traced {
        for i in 0..k {
            let a = amplitudes[kept[i] | t];
            if a == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..k {
                out[(i, j)] += a * amplitudes[kept[j] | t].conj();
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{kron, kron_vec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn ket(bits: &str) -> Vec<Complex64> {
        let n = bits.len();
        let idx = usize::from_str_radix(bits, 2).unwrap();
        (0..1 << n).map(|i| c(if i == idx { 1.0 } else { 0.0 })).collect()
    }

    /// Contracts the traced indices one qubit at a time through an explicit
    /// rank-2n tensor view; independent of the bit-scatter tables above.
    fn brute_force_trace_out(rho: &ComplexMatrix, n: usize, q: usize) -> ComplexMatrix {
        let dim = 1 << (n - 1);
        let insert = |idx: usize, bit: usize| -> usize {
            // digits of idx are the remaining qubits in order; put `bit` at position q
            let mut digits: Vec<usize> = (0..n - 1).map(|p| (idx >> (n - 2 - p)) & 1).collect();
            digits.insert(q, bit);
            digits.iter().fold(0, |acc, &d| acc * 2 + d)
        };
        ComplexMatrix::from_fn(dim, dim, |i, j| {
            rho[(insert(i, 0), insert(j, 0))] + rho[(insert(i, 1), insert(j, 1))]
        })
    }

    #[test]
    fn trace_second_qubit_of_product() {
        let psi = ket("00");
        let rho = ComplexMatrix::outer(&psi, &psi);
        let r = partial_trace(&rho, &[0]).unwrap();
        assert_eq!(r, ComplexMatrix::from_real_diagonal(&[1.0, 0.0]));
    }

    #[test]
    fn ghz_two_qubit_marginal() {
        let s = 0.5f64.sqrt();
        let mut psi = vec![c(0.0); 8];
        psi[0] = c(s);
        psi[7] = c(s);
        let rho = ComplexMatrix::outer(&psi, &psi);
        let r = partial_trace(&rho, &[0, 1]).unwrap();
        let expected = brute_force_trace_out(&rho, 3, 2);
        assert!(r.max_abs_diff(&expected) < 1e-15);
        assert!(r.max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.5, 0.0, 0.0, 0.5])) < 1e-15);
    }

    #[test]
    fn keep_order_permutes_factors() {
        let a = ComplexMatrix::from_real_diagonal(&[0.7, 0.3]);
        let b = ComplexMatrix::from_real_diagonal(&[0.1, 0.9]);
        let ab = kron(&a, &b);
        assert!(partial_trace(&ab, &[1, 0]).unwrap().max_abs_diff(&kron(&b, &a)) < 1e-15);
        assert!(partial_trace(&ab, &[0, 1]).unwrap().max_abs_diff(&ab) < 1e-15);
    }

    #[test]
    fn bad_subsystems() {
        let rho = ComplexMatrix::identity(4);
        assert!(matches!(partial_trace(&rho, &[2]), Err(QcohError::BadSubsystem(_))));
        assert!(matches!(partial_trace(&rho, &[0, 0]), Err(QcohError::BadSubsystem(_))));
        assert!(matches!(partial_trace(&rho, &[]), Err(QcohError::BadSubsystem(_))));
        assert!(partial_trace(&ComplexMatrix::identity(3), &[0]).is_err());
    }

    #[test]
    fn random_states_match_brute_force_and_pure_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=4 {
            let psi: Vec<Complex64> = (0..1 << n)
                .map(|_| Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
                .collect();
            let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let psi: Vec<Complex64> = psi.iter().map(|z| z / norm).collect();
            let rho = ComplexMatrix::outer(&psi, &psi);
            for q in 0..n {
                let keep: Vec<usize> = (0..n).filter(|&p| p != q).collect();
                let fast = partial_trace(&rho, &keep).unwrap();
                let slow = brute_force_trace_out(&rho, n, q);
                assert!(fast.max_abs_diff(&slow) < 1e-14);
                assert!(reduce_pure(&psi, &keep).unwrap().max_abs_diff(&fast) < 1e-14);
                assert!((fast.trace().re - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn pure_reduction_of_product_vector() {
        let a = vec![c(0.6), c(0.8)];
        let b = ket("1");
        let psi = kron_vec(&a, &b);
        let r = reduce_pure(&psi, &[0]).unwrap();
        assert!(r.max_abs_diff(&ComplexMatrix::outer(&a, &a)) < 1e-15);
    }
}
