//! The explicit structure data of each family.

use super::{CoevTerm, Coevaluation, PairingVertex, PreCy, Trivialization};
use crate::algebra::{AlgebraSpec, Family, Gen};
use crate::hochschild::{Chain, Tensor2, TwoOut, Word};
use crate::linalg::Scalar;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("alpha requires 2 invertible in the coefficient ring")]
    TwoNotInvertible,
}

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// The coevaluation, pairing vertex and duality element of the family.
pub fn builtin_structure(
    spec: &AlgebraSpec,
) -> Result<(Coevaluation, PairingVertex, PreCy), StructureError> {
    match spec.family {
        Family::Poly { deg_t } if deg_t % 2 == 0 => Ok(odd_sphere(spec)),
        Family::Poly { .. } => Ok(even_sphere(spec)),
        Family::Laurent => circle(spec),
    }
}

fn coev_common(spec: &AlgebraSpec, sign: i64) -> Coevaluation {
    Coevaluation {
        terms: vec![
            CoevTerm {
                coeff: spec.scalar(1),
                a_exp: 0,
                left: Word::empty(),
                x: Gen::R(0, 0),
                right: Word::empty(),
            },
            CoevTerm {
                coeff: spec.scalar(sign),
                a_exp: 0,
                left: Word::of(&[1]),
                x: Gen::Sb(0, 0),
                right: Word::empty(),
            },
            CoevTerm {
                coeff: spec.scalar(sign),
                a_exp: 0,
                left: Word::empty(),
                x: Gen::Sb(0, 0),
                right: Word::of(&[1]),
            },
        ],
    }
}

fn odd_sphere(spec: &AlgebraSpec) -> (Coevaluation, PairingVertex, PreCy) {
    let co = coev_common(spec, -1);
    let sp = spec.clone();
    let eta = PairingVertex::new(spec.clone(), move |corner: &Word, n: i64, x: Gen| {
        match (corner.len(), x) {
            (0, Gen::R(k, l)) => vec![(sp.scalar(1), l, n + k)],
            (1, Gen::Sb(k, l)) => {
                let m = corner.0[0];
                (1..=m).map(|i| (sp.scalar(-1), l + i - 1, k + n + m - i)).collect()
            }
            _ => Vec::new(),
        }
    });
    let sp2 = spec.clone();
    let alpha = TwoOut::from_fn(spec.clone(), spec.cy_dim(), -1, move |first: &Word, second: &Word| {
        // Evaluates nontrivially on exactly one letter; antisymmetric in
        // the angle carrying the input.
        match (first.len(), second.len()) {
            (1, 0) => alpha_sphere_terms(&sp2, first.0[0], -1),
            (0, 1) => alpha_sphere_terms(&sp2, second.0[0], 1),
            _ => Vec::new(),
        }
    });
    let precy = PreCy {
        dim: spec.cy_dim(),
        alpha,
        tau: None,
        omega: Chain::of(spec, Gen::T(0), &[1]),
    };
    (co, eta, precy)
}

fn alpha_sphere_terms(spec: &AlgebraSpec, k: i64, sign: i64) -> Vec<(Scalar, i64, i64)> {
    (0..k).map(|i| (spec.scalar(sign), i, k - 1 - i)).collect()
}

fn even_sphere(spec: &AlgebraSpec) -> (Coevaluation, PairingVertex, PreCy) {
    let co = coev_common(spec, 1);
    let sp = spec.clone();
    let eta = PairingVertex::new(spec.clone(), move |corner: &Word, n: i64, x: Gen| {
        match (corner.len(), x) {
            (0, Gen::R(k, l)) => vec![(sgn(&sp, n * (k + l + 1) + (k + 1) * l), l, n + k)],
            (1, Gen::Sb(k, l)) => {
                let m = corner.0[0];
                let lead = sgn(&sp, (m + n) * (k + l + 1) + k * l + m);
                (1..=m)
                    .map(|i| {
                        let c = &lead * &sgn(&sp, (i - 1) * (k + l + 1));
                        (c, l + i - 1, k + n + m - i)
                    })
                    .collect()
            }
            _ => Vec::new(),
        }
    });
    let sp2 = spec.clone();
    let alpha = TwoOut::from_fn(spec.clone(), spec.cy_dim(), -1, move |first: &Word, second: &Word| {
        match (first.len(), second.len()) {
            (1, 0) => alpha_sphere_terms(&sp2, first.0[0], 1),
            (0, 1) => alpha_sphere_terms(&sp2, second.0[0], 1),
            _ => Vec::new(),
        }
    });
    let precy = PreCy {
        dim: spec.cy_dim(),
        alpha,
        tau: None,
        omega: Chain::of(spec, Gen::T(0), &[1]),
    };
    (co, eta, precy)
}

fn circle(spec: &AlgebraSpec) -> Result<(Coevaluation, PairingVertex, PreCy), StructureError> {
    if !spec.ring.two_invertible() {
        return Err(StructureError::TwoNotInvertible);
    }
    let co = coev_common(spec, -1);
    let sp = spec.clone();
    let eta = PairingVertex::new(spec.clone(), move |corner: &Word, n: i64, x: Gen| {
        match (corner.len(), x) {
            (0, Gen::R(k, l)) => vec![(sp.scalar(1), l, n + k)],
            (1, Gen::Sb(k, l)) => {
                let m = corner.0[0];
                if m >= 1 {
                    (1..=m).map(|i| (sp.scalar(-1), l + i - 1, k + n + m - i)).collect()
                } else {
                    (m + 1..=0).map(|i| (sp.scalar(1), l + i - 1, k + n + m - i)).collect()
                }
            }
            _ => Vec::new(),
        }
    });
    let sp2 = spec.clone();
    let alpha = TwoOut::from_fn(spec.clone(), 1, 0, move |first: &Word, second: &Word| {
        match (first.len(), second.len()) {
            (1, 0) => alpha_circle_terms(&sp2, first.0[0], 1),
            (0, 1) => alpha_circle_terms(&sp2, second.0[0], -1),
            _ => Vec::new(),
        }
    });
    let precy = PreCy {
        dim: 1,
        alpha,
        tau: Some(Scalar::from_ratio(spec.ring, 1, 4)),
        omega: Chain::of(spec, Gen::T(-1), &[1]),
    };
    Ok((co, eta, precy))
}

/// Circle duality element on one input:
/// `∓ sign(k) (½(1⊗t^k + t^k⊗1) + Σ t^i⊗t^{k-i})` with the interior sum
/// over the exponents strictly between 0 and k. The uniform interior sign
/// (rather than the mixed one of the naive table) is forced by the chain
/// map property of the duality map in this crate's sign conventions: the
/// induced derivation coefficients must be additive in the exponent.
fn alpha_circle_terms(spec: &AlgebraSpec, k: i64, angle_sign: i64) -> Vec<(Scalar, i64, i64)> {
    let base = if k >= 1 { -angle_sign } else { angle_sign };
    let half = Scalar::from_ratio(spec.ring, base, 2);
    let mut out = vec![(half.clone(), 0, k), (half, k, 0)];
    if k >= 1 {
        for i in 1..=(k - 1) {
            out.push((spec.scalar(base), i, k - i));
        }
    } else {
        for i in (k + 1)..=(-1) {
            out.push((spec.scalar(base), i, k - i));
        }
    }
    out
}

/// Trivialization for the families whose Chern character vanishes at chain
/// level (odd spheres and the circle with the zero primitive).
pub fn sphere_triv() -> Trivialization {
    Trivialization::zero()
}

/// Even-sphere trivialization: over rings where 2 is not invertible the
/// quotient is by the span of the chain `2·1` and `e0` is the full Chern
/// character; over a field of characteristic 2 the character vanishes and
/// nothing is quotiented.
pub fn even_sphere_triv(spec: &AlgebraSpec) -> Trivialization {
    if spec.ring.characteristic() == 2 {
        return Trivialization::zero();
    }
    let two_one = Chain::single((Gen::T(0), Word::empty()), spec.scalar(2));
    let one = (Gen::T(0), Word::empty());
    let mut e0 = Tensor2::zero();
    e0.add_term((one.clone(), one), &spec.scalar(2));
    Trivialization {
        w_gens: vec![two_one],
        e0,
        h: Tensor2::zero(),
    }
}

/// The two-parameter family of primitives for the 2-sphere:
/// `H = c₊·1⊗t + c₋·t⊗1` on top of the even-sphere quotient data.
pub fn s2_h(spec: &AlgebraSpec, c_plus: i64, c_minus: i64) -> Trivialization {
    let mut t = even_sphere_triv(spec);
    let one = (Gen::T(0), Word::empty());
    let tt = (Gen::T(1), Word::empty());
    let mut h = Tensor2::zero();
    h.add_term((one.clone(), tt.clone()), &spec.scalar(c_plus));
    h.add_term((tt, one), &spec.scalar(c_minus));
    t.h = h;
    t
}

/// Circle trivializations: sparse coefficient maps `a_{p,q}`, `b_{p,q}` for
/// `Σ a_{p,q} t^p ⊗ t^q[t] + b_{p,q} t^p[t] ⊗ t^q`.
pub fn circle_h(spec: &AlgebraSpec, a: &[(i64, i64, i64)], b: &[(i64, i64, i64)]) -> Trivialization {
    let mut h = Tensor2::zero();
    for &(p, q, c) in a {
        h.add_term(((Gen::T(p), Word::empty()), (Gen::T(q), Word::of(&[1]))), &spec.scalar(c));
    }
    for &(p, q, c) in b {
        h.add_term(((Gen::T(p), Word::of(&[1])), (Gen::T(q), Word::empty())), &spec.scalar(c));
    }
    Trivialization {
        w_gens: Vec::new(),
        e0: Tensor2::zero(),
        h,
    }
}
