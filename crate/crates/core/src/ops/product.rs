//! The chain-level loop product: the pair-of-pants with the two-output
//! duality element at the top.
//!
//! Planarity of the pants forces every bar letter of the second (inner)
//! input to be eaten by the duality element, while the first (outer) input
//! contributes a consecutive block and keeps its remaining letters on the
//! output circle. The Koszul factor `(-1)^{deg m₁ · deg m₂}` and the
//! letter transports are pinned by the signed product tables of the
//! odd-generator family.

use crate::algebra::{AlgebraSpec, Gen};
use crate::hochschild::{Chain, TwoOut, Word};
use crate::linalg::Scalar;

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

fn diag_exp(g: &Gen) -> i64 {
    match g {
        Gen::T(k) => *k,
        _ => panic!("loop product requires diagonal coefficients"),
    }
}

/// Consecutive index ranges of a word, with the empty range represented
/// once.
pub(crate) fn block_ranges(len: usize) -> Vec<(usize, usize)> {
    let mut v = vec![(0, 0)];
    for i in 0..len {
        for j in (i + 1)..=len {
            v.push((i, j));
        }
    }
    v
}

/// `π(x₁, x₂)`, a chain of degree `deg x₁ + deg x₂ - n`.
pub fn loop_product(spec: &AlgebraSpec, alpha: &TwoOut, x1: &Chain, x2: &Chain) -> Chain {
    let mut out = Chain::zero();
    for ((g1, w1), c1) in &x1.terms {
        for ((g2, w2), c2) in &x2.terms {
            let m1 = diag_exp(g1);
            let m2 = diag_exp(g2);
            let kappa = sgn(spec, g1.degree(spec) * g2.degree(spec));
            let base = &(c1 * c2) * &kappa;
            // An empty block carries no arrows, hence no position: it is
            // one configuration, not one per gap.
            for (i, j) in block_ranges(w1.len()) {
                let block = w1.slice(i, j);
                for (ca, u, v) in alpha.eval(&block, w2) {
                    // module assembly: (m1·u)·(m2·v)
                    let (s1, e1) = spec.mul(m1, u);
                    let (s2, e2) = spec.mul(m2, v);
                    let (s3, e3) = spec.mul(e1, e2);
                    if !Gen::T(e3).in_family(spec) {
                        continue;
                    }
                    let word = Word::concat(&[&w1.0[0..i], &w1.0[j..]]);
                    let coeff = &(&(&base * &ca) * &s1) * &(&s2 * &s3);
                    out.add_term((Gen::T(e3), word), &coeff);
                }
            }
        }
    }
    out
}
