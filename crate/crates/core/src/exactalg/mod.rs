//! Exact scalar and matrix arithmetic over `Q` and cyclotomic fields.

mod cyclotomic;
mod matrix;
mod poly;
mod subspace;

pub use cyclotomic::{
    cyclotomic_polynomial, parse_rational, rational_sign, totient, CyclotomicScalar,
};
pub use matrix::{
    dot, int, is_zero_vector, unit_vector, vec_add, vec_scale, vec_sub, ExactMatrix, Scalar,
    Vector, ZeroPattern,
};
pub use poly::{
    factor_rational_roots, minimal_polynomial, BigRationalString, ExactPolynomial,
    RationalRootFactorization,
};
pub use subspace::Subspace;

use thiserror::Error;

/// Basis of the kernel of `a` (vectors `v` with `a v = 0`).
///
/// The basis is read off the reduced echelon form: one vector per free column, free
/// columns ascending, with a 1 in its own free slot.
pub fn solve_kernel(a: &ExactMatrix) -> Vec<Vector> {
    a.kernel()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternScanError {
    #[error("malformed sequence: pattern of term {k} is not contained in term {}", k + 1)]
    Malformed { k: usize },
    #[error("pattern did not stabilise within {k_max} steps")]
    Unbounded { k_max: usize },
}

/// Least `k >= 1` with `pattern(seq(k)) == pattern(seq(k + 1))`.
///
/// Each term is requested once and in increasing order, so `seq` may keep running
/// state such as the previous power.
pub fn pattern_stabilization_index<F>(mut seq: F, k_max: usize) -> Result<usize, PatternScanError>
where
    F: FnMut(usize) -> ExactMatrix,
{
    let mut prev = seq(1).pattern();
    for k in 1..=k_max {
        let next = seq(k + 1).pattern();
        if !prev.is_subset_of(&next) {
            return Err(PatternScanError::Malformed { k });
        }
        if prev == next {
            return Ok(k);
        }
        prev = next;
    }
    Err(PatternScanError::Unbounded { k_max })
}

/// Whether the symmetric support graph of a square matrix is connected.
pub fn is_indecomposable(a: &ExactMatrix) -> bool {
    assert!(a.is_square(), "indecomposability of a non-square matrix");
    support_components(a).len() <= 1
}

/// Connected components of the symmetric support graph, each sorted, ordered by least vertex.
pub fn support_components(a: &ExactMatrix) -> Vec<Vec<usize>> {
    let n = a.rows();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if comp[v] == usize::MAX && (!a.get(u, v).is_zero() || !a.get(v, u).is_zero()) {
                    comp[v] = id;
                    members.push(v);
                    stack.push(v);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels() {
        assert!(solve_kernel(&ExactMatrix::identity(3)).is_empty());
        let k = solve_kernel(&ExactMatrix::zeros(2, 2));
        assert_eq!(k, vec![unit_vector(2, 0), unit_vector(2, 1)]);
        let a = ExactMatrix::from_i64(&[vec![1, 1, 0], vec![0, 1, 1]]);
        let k = solve_kernel(&a);
        assert_eq!(k.len(), 1);
        assert_eq!(
            k[0],
            ExactMatrix::from_i64(&[vec![1, -1, 1]]).row(0).to_vec()
        );
        assert!(is_zero_vector(&a.apply(&k[0])));
    }

    #[test]
    fn pattern_scan() {
        let b = ExactMatrix::from_i64(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(pattern_stabilization_index(|k| b.pow(k as u32), 2), Ok(1));

        let c = ExactMatrix::from_i64(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert_eq!(pattern_stabilization_index(|k| c.pow(k as u32), 3), Ok(2));

        let shift = ExactMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            pattern_stabilization_index(|k| shift.pow(k as u32), 4),
            Err(PatternScanError::Malformed { k: 1 })
        );

        // 4-cycle path with positive diagonal needs three steps; budget of two is too small
        let path = ExactMatrix::from_i64(&[
            vec![1, 1, 0, 0],
            vec![1, 1, 1, 0],
            vec![0, 1, 1, 1],
            vec![0, 0, 1, 1],
        ]);
        assert_eq!(
            pattern_stabilization_index(|k| path.pow(k as u32), 2),
            Err(PatternScanError::Unbounded { k_max: 2 })
        );
        assert_eq!(
            pattern_stabilization_index(|k| path.pow(k as u32), 4),
            Ok(3)
        );
    }

    #[test]
    fn indecomposability() {
        let c = ExactMatrix::from_i64(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert!(is_indecomposable(&c));
        let d = ExactMatrix::from_i64(&[vec![1, 0], vec![0, 1]]);
        assert!(!is_indecomposable(&d));
        assert!(is_indecomposable(&ExactMatrix::zeros(1, 1)));
    }
}
