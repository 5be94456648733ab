//! The loop coproduct `λ_H = λ̃_H ∘ g_α` and the cap actions on tensor
//! factors it is built from.

use super::{g_alpha, map_g};
use crate::algebra::AlgebraSpec;
use crate::hochschild::{cap_left, Chain, CochainRule, Tensor2};
use crate::precy::{Coevaluation, PairingVertex, PreCy, Trivialization};

/// `(φ⌢ ⊗ id)` on a tensor element.
pub fn cap_tensor_left(spec: &AlgebraSpec, phi: &CochainRule, t: &Tensor2) -> Tensor2 {
    t.map_left(|u| cap_left(spec, phi, &Chain::single(u.clone(), spec.scalar(1))))
}

/// `(id ⊗ φ⌢)` on a tensor element, with the Koszul jump over the first
/// factor.
pub fn cap_tensor_right(spec: &AlgebraSpec, phi: &CochainRule, t: &Tensor2) -> Tensor2 {
    t.map_right_signed(spec, phi.deg(), |v| {
        cap_left(spec, phi, &Chain::single(v.clone(), spec.scalar(1)))
    })
}

/// `λ̃_H(φ) = G(φ) - (-1)^{deg φ}((φ⌢⊗id)H - (id⊗φ⌢)H)`, before passing to
/// the quotient by the trivialization subcomplex.
pub fn lambda_tilde(
    spec: &AlgebraSpec,
    co: &Coevaluation,
    eta: &PairingVertex,
    triv: &Trivialization,
    phi: &CochainRule,
) -> Tensor2 {
    let g = map_g(spec, co, eta, phi);
    let hl = cap_tensor_left(spec, phi, &triv.h);
    let hr = cap_tensor_right(spec, phi, &triv.h);
    let sign = spec.scalar(if phi.deg().rem_euclid(2) == 1 { 1 } else { -1 });
    g.add(&hl.sub(&hr).scale(&sign))
}

/// The chain-level loop coproduct of a diagonal chain; the value lives in
/// the tensor square and all comparisons downstream are made modulo the
/// trivialization subcomplex.
pub fn lambda_h(
    spec: &AlgebraSpec,
    co: &Coevaluation,
    eta: &PairingVertex,
    precy: &PreCy,
    triv: &Trivialization,
    x: &Chain,
) -> Tensor2 {
    if x.is_zero() {
        return Tensor2::zero();
    }
    let phi = g_alpha(spec, &precy.alpha, x);
    lambda_tilde(spec, co, eta, triv, &phi)
}
