//! Smith normal form of integer matrices.

use super::{Ring, Scalar, SparseMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of `smith_normal_form`: `u * m * v = d` with `u`, `v` unimodular
/// and `d` diagonal with a divisibility chain d_1 | d_2 | ...
pub struct SnfDecomposition {
    pub u: SparseMatrix,
    pub d: SparseMatrix,
    pub v: SparseMatrix,
}

impl SnfDecomposition {
    /// The nonzero diagonal entries, normalized positive.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d.get(i, i).as_bigint().abs())
            .filter(|f| !f.is_zero())
            .collect()
    }
}

fn smallest_nonzero_pivot(m: &SparseMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j, v) in m.iter() {
        if i < from || j < from {
            continue;
        }
        let a = v.as_bigint().abs();
        match &best {
            Some((_, b)) if *b <= a => {}
            _ => best = Some(((i, j), a)),
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smith normal form over `Z` by repeated row/column reduction around a
/// smallest-magnitude pivot. Total on all integer matrices; coefficient
/// growth is accepted, matrices here stay desk-scale.
pub fn smith_normal_form(m: &SparseMatrix) -> SnfDecomposition {
    assert_eq!(m.ring(), Ring::Int, "SNF requires integer entries");
    let mut d = m.clone();
    let mut u = SparseMatrix::identity(Ring::Int, m.rows());
    let mut v = SparseMatrix::identity(Ring::Int, m.cols());

    let n = m.rows().min(m.cols());
    let mut t = 0usize;
    while t < n {
        let Some((pi, pj)) = smallest_nonzero_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Clear row and column t; the pivot may need several passes since
        // remainders can replace it.
        loop {
            let pivot = d.get(t, t);
            let p = pivot.as_bigint().clone();
            debug_assert!(!p.is_zero());
            let mut dirty = false;
            let col_entries: Vec<(usize, Scalar)> = d
                .iter()
                .filter(|(i, j, _)| *j == t && *i > t)
                .map(|(i, _, val)| (i, val.clone()))
                .collect();
            for (i, val) in col_entries {
                let q = val.as_bigint().div_floor(&p);
                if !q.is_zero() {
                    let c = Scalar::Int(-q);
                    d.add_row_multiple(i, t, &c);
                    u.add_row_multiple(i, t, &c);
                }
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            let row_entries: Vec<(usize, Scalar)> = d
                .iter()
                .filter(|(i, j, _)| *i == t && *j > t)
                .map(|(_, j, val)| (j, val.clone()))
                .collect();
            for (j, val) in row_entries {
                let q = val.as_bigint().div_floor(&p);
                if !q.is_zero() {
                    let c = Scalar::Int(-q);
                    d.add_col_multiple(j, t, &c);
                    v.add_col_multiple(j, t, &c);
                }
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // A nonzero remainder is strictly smaller than the pivot; move
            // the smallest remaining entry into pivot position and repeat.
            let Some((pi, pj)) = smallest_nonzero_pivot(&d, t) else {
                break;
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        t += 1;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    let rank = (0..n).take_while(|&i| !d.get(i, i).is_zero()).count();
    let mut i = 0;
    while i + 1 < rank {
        let a = d.get(i, i).as_bigint().clone();
        let b = d.get(i + 1, i + 1).as_bigint().clone();
        if b.mod_floor(&a).is_zero() {
            i += 1;
            continue;
        }
        // Fold entry i+1 into column i and rediagonalize the 2x2 block.
        d.add_col_multiple(i, i + 1, &Scalar::from_i64(Ring::Int, 1));
        v.add_col_multiple(i, i + 1, &Scalar::from_i64(Ring::Int, 1));
        let g = a.gcd(&b);
        // Row reduce [a; b] to [g; 0] with Bezout coefficients, then clear
        // the leftover row entry.
        let egcd = a.extended_gcd(&b);
        let (x, y) = (egcd.x, egcd.y);
        // Build the 2x2 unimodular transform [[x, y], [-b/g, a/g]].
        apply_two_by_two(&mut d, &mut u, i, i + 1, &x, &y, &(-&b / &g), &(&a / &g));
        // Now row i = (g, y*b'), row i+1 = (0, d'): clear (i, i+1) by column op.
        let r = d.get(i, i + 1);
        if !r.is_zero() {
            let q = r.as_bigint().div_floor(&g);
            let c = Scalar::Int(-q);
            d.add_col_multiple(i + 1, i, &c);
            v.add_col_multiple(i + 1, i, &c);
        }
        // Restart the chain check from the previous index.
        i = i.saturating_sub(1);
    }

    // Normalize diagonal signs to positive.
    for i in 0..rank {
        if d.get(i, i).as_bigint().is_negative() {
            let m1 = Scalar::from_i64(Ring::Int, -1);
            d.scale_row(i, &m1);
            u.scale_row(i, &m1);
        }
    }

    SnfDecomposition { u, d, v }
}

/// Left-multiplies rows `r0`, `r1` of `d` (and `u`) by [[a, b], [c, e]].
fn apply_two_by_two(
    d: &mut SparseMatrix,
    u: &mut SparseMatrix,
    r0: usize,
    r1: usize,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    e: &BigInt,
) {
    for m in [d, u] {
        let row0: Vec<(usize, Scalar)> = m
            .iter()
            .filter(|(i, _, _)| *i == r0)
            .map(|(_, j, v)| (j, v.clone()))
            .collect();
        let row1: Vec<(usize, Scalar)> = m
            .iter()
            .filter(|(i, _, _)| *i == r1)
            .map(|(_, j, v)| (j, v.clone()))
            .collect();
        let cols: std::collections::BTreeSet<usize> =
            row0.iter().map(|(j, _)| *j).chain(row1.iter().map(|(j, _)| *j)).collect();
        let get = |row: &[(usize, Scalar)], j: usize| {
            row.iter()
                .find(|(jj, _)| *jj == j)
                .map(|(_, v)| v.as_bigint().clone())
                .unwrap_or_else(BigInt::zero)
        };
        for j in cols {
            let x0 = get(&row0, j);
            let x1 = get(&row1, j);
            m.set(r0, j, Scalar::Int(a * &x0 + b * &x1));
            m.set(r1, j, Scalar::Int(c * &x0 + e * &x1));
        }
    }
}
