//! Structure data of the duality package for each family: the coevaluation
//! element, the pairing vertex, the two-output duality element (with its
//! three-output correction for the circle), trivializations of the Chern
//! character, and the validation suite that certifies all of their defining
//! identities on a window.

mod data;
mod validate;

pub use data::{builtin_structure, circle_h, even_sphere_triv, s2_h, sphere_triv, StructureError};
pub use validate::{
    validate_coevaluation, validate_nondegeneracy, validate_precy, CheckReport,
};

use crate::algebra::Gen;
use crate::hochschild::{Chain, Tensor2, TwoOut, Word};
use crate::linalg::Scalar;

/// One term of the coevaluation element: a scalar multiple of
/// `a ⊗ [left word] ⊗ x ⊗ [right word]` with `a` a diagonal monomial and
/// `x` an inverse-dualizing generator.
#[derive(Clone, Debug)]
pub struct CoevTerm {
    pub coeff: Scalar,
    pub a_exp: i64,
    pub left: Word,
    pub x: Gen,
    pub right: Word,
}

/// The coevaluation element.
#[derive(Clone, Debug)]
pub struct Coevaluation {
    pub terms: Vec<CoevTerm>,
}

/// The pairing vertex: a rule with one bar-word slot (the corner adjacent
/// to the first output), a diagonal input, and an inverse-dualizing input,
/// valued in `A ⊗ A` monomial pairs. All other corner slots vanish for the
/// families shipped here; the evaluator still receives them for the
/// closedness check.
#[derive(Clone)]
pub struct PairingVertex {
    spec: crate::algebra::AlgebraSpec,
    eval: std::rc::Rc<dyn Fn(&Word, i64, Gen) -> Vec<(Scalar, i64, i64)>>,
}

impl PairingVertex {
    pub fn new(
        spec: crate::algebra::AlgebraSpec,
        eval: impl Fn(&Word, i64, Gen) -> Vec<(Scalar, i64, i64)> + 'static,
    ) -> Self {
        PairingVertex {
            spec,
            eval: std::rc::Rc::new(eval),
        }
    }

    pub fn spec(&self) -> &crate::algebra::AlgebraSpec {
        &self.spec
    }

    /// Value on (top-left corner word, diagonal input exponent, dual-side
    /// generator); the output pair is (first output, second output).
    pub fn eval(&self, corner: &Word, a_exp: i64, x: Gen) -> Vec<(Scalar, i64, i64)> {
        (self.eval)(corner, a_exp, x)
    }
}

/// Truncated duality data: the dimension, the two-output element, the
/// optional constant three-output correction (as the coefficient of
/// `1 ⊗ 1 ⊗ 1`), and a witness cycle for nondegeneracy.
#[derive(Clone)]
pub struct PreCy {
    pub dim: i64,
    pub alpha: TwoOut,
    pub tau: Option<Scalar>,
    pub omega: Chain,
}

/// A trivialization of the Chern character onto the span of `w_gens`:
/// `d(h) = E - e0` with `e0` supported in the span on both sides.
#[derive(Clone, Debug)]
pub struct Trivialization {
    pub w_gens: Vec<Chain>,
    pub e0: Tensor2,
    pub h: Tensor2,
}

impl Trivialization {
    /// The trivialization with empty quotient and zero primitive, for the
    /// families whose Chern character vanishes on the nose.
    pub fn zero() -> Self {
        Trivialization {
            w_gens: Vec::new(),
            e0: Tensor2::zero(),
            h: Tensor2::zero(),
        }
    }

    /// Quotient relations in a (degree, weight) block of the tensor square:
    /// `w ⊗ v` and `v ⊗ w` for every window term `v` and every generator
    /// `w` of the subcomplex.
    pub fn tensor_relations(
        &self,
        spec: &crate::algebra::AlgebraSpec,
        win: &crate::hochschild::Window,
        degree: i64,
        weight: i64,
    ) -> Vec<Tensor2> {
        let table = crate::hochschild::TermTable::new(spec, win, crate::algebra::BimoduleKind::Diagonal);
        let mut rels = Vec::new();
        for w in &self.w_gens {
            let wd = w.degree(spec).expect("subcomplex generators are homogeneous");
            let ww = w.weight(spec).expect("subcomplex generators are homogeneous");
            for v in table.block(degree - wd, weight - ww) {
                let vchain = Chain::single(v.clone(), spec.scalar(1));
                rels.push(Tensor2::of_chains(w, &vchain));
                rels.push(Tensor2::of_chains(&vchain, w));
            }
        }
        rels
    }
}
