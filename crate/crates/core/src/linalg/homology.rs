//! Homology of a two-step complex of finitely generated free modules.

use super::snf::smith_normal_form;
use super::{kernel_basis, LinalgError, Ring, SparseMatrix};
use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

/// Free rank plus sorted torsion invariant factors of one homology block,
/// with representative cycle vectors for each summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologySummary {
    pub free_rank: usize,
    /// Invariant factors d_1 | d_2 | ..., each > 1. Empty over a field.
    pub torsion: Vec<String>,
    /// One cycle per free generator, then one per torsion factor, as
    /// exact-string coordinate vectors in the ambient basis.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub generators: Vec<Vec<String>>,
}

impl HomologySummary {
    pub fn trivial() -> Self {
        HomologySummary {
            free_rank: 0,
            torsion: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

/// Homology `ker(d_out) / im(d_in)` of `C_in --d_in--> C --d_out--> C_out`.
///
/// Returns an error if the maps do not compose to zero: that is treated as
/// a bug in the complex construction, not a data condition.
pub fn homology(d_in: &SparseMatrix, d_out: &SparseMatrix) -> Result<HomologySummary, LinalgError> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::DimensionMismatch(format!(
            "middle dimension: d_in lands in {} but d_out starts from {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    if d_in.ring() != d_out.ring() {
        return Err(LinalgError::RingMismatch {
            expected: d_in.ring(),
            got: d_out.ring(),
        });
    }
    if !d_out.mul(d_in).is_zero_matrix() {
        return Err(LinalgError::NotAComplex);
    }
    let ring = d_in.ring();
    let n = d_in.rows();

    // Cycle space: saturated over Z, plain basis over fields.
    let cycles = kernel_basis(d_out);
    let k = cycles.len();

    // Express im(d_in) in cycle coordinates. Over Z the cycle basis is
    // saturated so coordinates are integral; solve per column.
    let mut cycle_mat = SparseMatrix::zero(ring, n, k);
    for (j, c) in cycles.iter().enumerate() {
        for (i, s) in c.iter().enumerate() {
            cycle_mat.set(i, j, s.clone());
        }
    }
    let mut image_in_cycle_coords = SparseMatrix::zero(ring, k, d_in.cols());
    for col in 0..d_in.cols() {
        let mut v = vec![ring.zero(); n];
        for (i, j, s) in d_in.iter() {
            if j == col {
                v[i] = s.clone();
            }
        }
        let coords = super::solve(&cycle_mat, &v).expect("image must lie in the cycle space");
        for (i, s) in coords.into_iter().enumerate() {
            image_in_cycle_coords.set(i, col, s);
        }
    }

    match ring {
        Ring::Int => {
            let snf = smith_normal_form(&image_in_cycle_coords);
            let factors = snf.invariant_factors();
            let r = factors.len();
            let torsion: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
            let free_rank = k - r;
            // Generators: columns of u^{-1}? We have u * M * v = d, so the
            // quotient decomposes along the basis given by rows of u, i.e.
            // the new basis of the cycle lattice is u^{-1} e_i. Rather than
            // invert, solve u^T-independent route: u is unimodular, so
            // u^{-1} = adj; easier to solve u x = e_i over Z.
            let mut gens = Vec::new();
            let torsion_start = r - torsion.len();
            // free generators: indices r..k; torsion: torsion_start..r.
            for idx in (r..k).chain(torsion_start..r) {
                let mut e = vec![ring.zero(); k];
                e[idx] = ring.one();
                let coords = super::solve(&snf.u, &e).expect("u unimodular");
                let ambient = cycle_mat.mul_vec(&coords);
                gens.push(ambient.iter().map(|s| s.to_exact_string()).collect());
            }
            Ok(HomologySummary {
                free_rank,
                torsion: torsion.iter().map(|t| t.to_string()).collect(),
                generators: gens,
            })
        }
        _ => {
            let r = super::rank(&image_in_cycle_coords);
            // Representatives: cycles independent modulo the image. Row
            // reduce [image | cycles-identity] to pick complement columns.
            let mut aug = image_in_cycle_coords.clone();
            let id = SparseMatrix::identity(ring, k);
            aug = aug.hstack(&id);
            let mut chosen = Vec::new();
            {
                // Columns of the identity part that enlarge the rank beyond r.
                let mut cur = image_in_cycle_coords.clone();
                for j in 0..k {
                    if chosen.len() + r == k {
                        break;
                    }
                    let mut test = cur.clone();
                    let mut col = SparseMatrix::zero(ring, k, 1);
                    col.set(j, 0, ring.one());
                    test = test.hstack(&col);
                    if super::rank(&test) > super::rank(&cur) {
                        chosen.push(j);
                        cur = test;
                    }
                }
            }
            let _ = aug;
            let gens = chosen
                .into_iter()
                .map(|j| {
                    let v = cycle_mat.mul_vec(&{
                        let mut e = vec![ring.zero(); k];
                        e[j] = ring.one();
                        e
                    });
                    v.iter().map(|s| s.to_exact_string()).collect()
                })
                .collect();
            Ok(HomologySummary {
                free_rank: k - r,
                torsion: Vec::new(),
                generators: gens,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_mod_two_from_multiplication_by_two() {
        // Z --x2--> Z --0--> 0
        let d_in = SparseMatrix::from_rows(Ring::Int, &[vec![2]]);
        let d_out = SparseMatrix::zero(Ring::Int, 0, 1);
        let h = homology(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, 0);
        assert_eq!(h.torsion, vec!["2".to_string()]);
    }

    #[test]
    fn fully_zero_complex() {
        let d_in = SparseMatrix::zero(Ring::Int, 3, 0);
        let d_out = SparseMatrix::zero(Ring::Int, 0, 3);
        let h = homology(&d_in, &d_out).unwrap();
        assert_eq!(h.free_rank, 3);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn non_complex_is_reported() {
        let d_in = SparseMatrix::from_rows(Ring::Int, &[vec![1]]);
        let d_out = SparseMatrix::from_rows(Ring::Int, &[vec![1]]);
        assert_eq!(homology(&d_in, &d_out), Err(LinalgError::NotAComplex));
    }
}
