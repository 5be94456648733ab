//! The string-topology operations: chain-level Chern character, the
//! correction map `G`, the duality map `g_α`, the loop product, the loop
//! coproduct, and the certificate suites built from them.

mod elbow;
mod galpha;
mod lambda;
mod product;

pub use elbow::{chern_character, map_g};
pub use galpha::g_alpha;
pub use lambda::{cap_tensor_left, cap_tensor_right, lambda_h, lambda_tilde};
pub use product::loop_product;
pub(crate) use product::block_ranges;

use crate::algebra::AlgebraSpec;
use crate::hochschild::{CochainRule, Tensor2};
use crate::precy::{Coevaluation, PairingVertex, PreCy, Trivialization};

/// Bundle of the chain-level structure carried around by the suites.
pub struct StringData {
    pub spec: AlgebraSpec,
    pub co: Coevaluation,
    pub eta: PairingVertex,
    pub precy: PreCy,
    pub triv: Trivialization,
}

impl StringData {
    pub fn new(spec: &AlgebraSpec, triv: Trivialization) -> Result<Self, crate::precy::StructureError> {
        let (co, eta, precy) = crate::precy::builtin_structure(spec)?;
        Ok(StringData {
            spec: spec.clone(),
            co,
            eta,
            precy,
            triv,
        })
    }

    pub fn chern(&self) -> Tensor2 {
        chern_character(&self.spec, &self.co, &self.eta)
    }

    pub fn g(&self, phi: &CochainRule) -> Tensor2 {
        map_g(&self.spec, &self.co, &self.eta, phi)
    }
}

#[cfg(test)]
mod tests;
