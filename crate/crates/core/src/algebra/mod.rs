//! Monomial graded algebra families, their bimodules, and signed structure
//! maps.
//!
//! Two families are supported: `k[t]` with the generator in positive degree
//! (polynomial family) and `k[t^{±1}]` with the generator in degree zero
//! (Laurent family). The basis is `{t^k}`. Every basis element carries a
//! homological degree and a weight (the exponent), and the weight grading is
//! what makes each (degree, weight) block of every complex in this crate a
//! finite exact linear-algebra problem.
//!
//! Sign conventions: the binary structure map on bar letters is
//! `mul(t^a, t^b) = (-1)^{deg t^a} t^{a+b}`, which is the suspension-signed
//! product. For even `deg t` the sign is trivially `+1`. All other signed
//! action tables (inverse dualizing bimodule, linear dual) are closed forms
//! fixed so that the differentials of the complexes built on them square to
//! zero; each is covered by unit tests asserting exactly that.

mod bimodule;
mod spec;

pub use bimodule::{act_left, act_right, d_internal, ev_pair, BimoduleKind, Gen};
pub use spec::{AlgebraSpec, Family};

use crate::linalg::{Ring, Scalar};

/// A formal linear combination of basis monomials `t^k`.
pub type MonoSum = Vec<(Scalar, i64)>;

impl AlgebraSpec {
    /// Degree of the basis monomial `t^k`.
    pub fn mono_degree(&self, k: i64) -> i64 {
        self.deg_t() * k
    }

    /// Reduced (bar-shifted) degree of the letter `[t^k]`.
    pub fn letter_rdeg(&self, k: i64) -> i64 {
        self.mono_degree(k) + 1
    }

    /// The suspension-signed product of two monomials.
    pub fn mul_sign(&self, a_exp: i64) -> Scalar {
        let s = self.mono_degree(a_exp);
        if s.rem_euclid(2) == 1 {
            Scalar::from_i64(self.ring, -1)
        } else {
            Scalar::from_i64(self.ring, 1)
        }
    }

    /// `mul(t^a, t^b) = (-1)^{deg t^a} t^{a+b}`; `None` when the product
    /// leaves the basis (never happens for these families).
    pub fn mul(&self, a: i64, b: i64) -> (Scalar, i64) {
        match self.family {
            Family::Poly { .. } => {
                debug_assert!(a >= 0 && b >= 0);
            }
            Family::Laurent => {}
        }
        (self.mul_sign(a), a + b)
    }

    /// Koszul-signed product of monomial sums (used by evaluators).
    pub fn mul_sums(&self, lhs: &MonoSum, rhs: &MonoSum) -> MonoSum {
        let mut out = Vec::new();
        for (c1, a) in lhs {
            for (c2, b) in rhs {
                let (s, e) = self.mul(*a, *b);
                out.push((&(c1 * c2) * &s, e));
            }
        }
        out
    }

    pub fn scalar(&self, v: i64) -> Scalar {
        Scalar::from_i64(self.ring, v)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
}
