//! Kernels, ranks, and exact linear solves (image-membership with witness).

use super::snf::smith_normal_form;
use super::{LinalgError, Ring, Scalar, SparseMatrix};


/// Row echelon form over a field, returning (echelon matrix, pivot columns,
/// transform matrix t with t * m = echelon).
fn row_echelon(m: &SparseMatrix) -> (SparseMatrix, Vec<usize>, SparseMatrix) {
    assert!(m.ring().is_field(), "row echelon requires a field");
    let mut a = m.clone();
    let mut t = SparseMatrix::identity(m.ring(), m.rows());
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..a.cols() {
        // Find a pivot in column c at/below r.
        let Some(pr) = (r..a.rows()).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(r, pr);
        t.swap_rows(r, pr);
        let inv = a.get(r, c).inverse().unwrap();
        a.scale_row(r, &inv);
        t.scale_row(r, &inv);
        for i in 0..a.rows() {
            if i != r {
                let v = a.get(i, c);
                if !v.is_zero() {
                    let coef = -&v;
                    a.add_row_multiple(i, r, &coef);
                    t.add_row_multiple(i, r, &coef);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.rows() {
            break;
        }
    }
    (a, pivots, t)
}

/// Rank over the ring's fraction field (Z matrices count rank over Q).
pub fn rank(m: &SparseMatrix) -> usize {
    match m.ring() {
        Ring::Int => {
            let snf = smith_normal_form(m);
            snf.invariant_factors().len()
        }
        _ => row_echelon(m).1.len(),
    }
}

/// A basis of ker(m) as column vectors. Over `Z` the returned lattice basis
/// is saturated (computed through the Smith form), so quotients by images
/// in these coordinates have correct torsion.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<Vec<Scalar>> {
    match m.ring() {
        Ring::Int => {
            // u m v = d; kernel spanned by v columns where d column is zero.
            let snf = smith_normal_form(m);
            let r = snf.invariant_factors().len();
            (r..m.cols())
                .map(|j| (0..m.cols()).map(|i| snf.v.get(i, j)).collect())
                .collect()
        }
        _ => {
            let (ech, pivots, _) = row_echelon(m);
            let ring = m.ring();
            let mut basis = Vec::new();
            let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
            for free in 0..m.cols() {
                if pivot_set.contains(&free) {
                    continue;
                }
                let mut v = vec![ring.zero(); m.cols()];
                v[free] = ring.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    let coef = ech.get(row, free);
                    if !coef.is_zero() {
                        v[pc] = -&coef;
                    }
                }
                basis.push(v);
            }
            basis
        }
    }
}

/// Solves `m x = v` exactly over the active ring; `None` when `v` is not in
/// the image. Over `Z`, membership is decided through the Smith form.
pub fn solve_for_primitive(m: &SparseMatrix, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
    if v.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "rhs has length {}, matrix has {} rows",
            v.len(),
            m.rows()
        )));
    }
    for s in v {
        if s.ring() != m.ring() {
            return Err(LinalgError::RingMismatch {
                expected: m.ring(),
                got: s.ring(),
            });
        }
    }
    Ok(solve(m, v))
}

/// Implementation of the exact solve; see `solve_for_primitive`.
pub fn solve(m: &SparseMatrix, v: &[Scalar]) -> Option<Vec<Scalar>> {
    match m.ring() {
        Ring::Int => {
            let snf = smith_normal_form(m);
            // u m v_mat = d => m x = v  iff  d y = u v with x = v_mat y.
            let uv = snf.u.mul_vec(v);
            let n = m.cols();
            let mut y = vec![Ring::Int.zero(); n];
            let k = m.rows().min(n);
            for (i, uvi) in uv.iter().enumerate() {
                if i < k {
                    let di = snf.d.get(i, i);
                    if di.is_zero() {
                        if !uvi.is_zero() {
                            return None;
                        }
                    } else {
                        match uvi.divide(&di) {
                            Some(q) => y[i] = q,
                            None => return None,
                        }
                    }
                } else if !uvi.is_zero() {
                    return None;
                }
            }
            Some(snf.v.mul_vec(&y))
        }
        _ => {
            // Gaussian elimination on the augmented matrix.
            let ring = m.ring();
            let mut rhs = SparseMatrix::zero(ring, m.rows(), 1);
            for (i, s) in v.iter().enumerate() {
                rhs.set(i, 0, s.clone());
            }
            let aug = m.hstack(&rhs);
            let (ech, pivots, _) = row_echelon(&aug);
            if pivots.contains(&m.cols()) {
                return None; // pivot in the rhs column: inconsistent
            }
            let mut x = vec![ring.zero(); m.cols()];
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = ech.get(row, m.cols());
            }
            Some(x)
        }
    }
}
