//! The cone bimodule: the mapping cone of the duality morphism from the
//! shifted linear dual to the diagonal, with its extended product, cup
//! product, kernel subcomplex, and the lifted dual product.
//!
//! A cone chain is an ordinary [`Chain`] whose generators mix the dual
//! family `S(k)` (the shifted summand) and the diagonal family `T(k)`. The
//! cone boundary is the two Hochschild boundaries plus the chain map
//! induced by the duality morphism, which feeds the dual part into the
//! diagonal part.

mod dual;
mod mu;

pub use dual::{
    compatibility_pairing, dual_product, iota_h, k_subcomplex_basis, pair_g_dual, sharp_e0_g,
    CircleH, HRule,
};
pub use mu::{cone_differential, cup_m, f_alpha_left, f_alpha_right, mu2_m, pi_m, psi_defect, set_params, F_alpha};

use crate::algebra::Gen;
use crate::hochschild::Chain;

/// Projection onto the dual part (the image of the connecting map).
pub fn project_dual(x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (t, c) in &x.terms {
        if matches!(t.0, Gen::S(_)) {
            out.add_term(t.clone(), c);
        }
    }
    out
}

/// Projection onto the diagonal part.
pub fn project_diag(x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (t, c) in &x.terms {
        if matches!(t.0, Gen::T(_)) {
            out.add_term(t.clone(), c);
        }
    }
    out
}

#[cfg(test)]
mod tests;
