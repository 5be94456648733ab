//! Differentials of the normalized chain complexes.

use super::chain::{Chain, Tensor2, Tensor3, Term};
use super::cochain::CochainRule;
use super::Word;
use crate::algebra::{act_left, act_right, d_internal, AlgebraSpec};
use crate::linalg::Scalar;

fn parity_sign(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// The Hochschild boundary of one term; includes the internal differential
/// of the coefficient bimodule (the inverse dualizing bimodule and the cone
/// carry one).
pub fn term_differential(spec: &AlgebraSpec, term: &Term) -> Chain {
    let (g, w) = term;
    let k = w.len();
    let mut out = Chain::zero();

    // Internal differential of the coefficient generator.
    for (c, g2) in d_internal(spec, *g) {
        out.add_term((g2, w.clone()), &c);
    }

    if k == 0 {
        return out;
    }

    let deg_m = g.degree(spec);

    // First letter multiplies the module element from the right.
    for (c, g2) in act_right(spec, *g, w.0[0]) {
        out.add_term((g2, w.slice(1, k)), &c);
    }

    // Interior merges, operator inserted past m, the preceding letters,
    // and the output suspension.
    let mut prefix_r = 0i64;
    for i in 0..k.saturating_sub(1) {
        let sign = parity_sign(spec, deg_m + prefix_r + 1);
        let (ms, e) = spec.mul(w.0[i], w.0[i + 1]);
        if spec.letter_in_family(e) {
            let mut letters = w.0.clone();
            letters[i] = e;
            letters.remove(i + 1);
            out.add_term((*g, Word(letters)), &(&sign * &ms));
        }
        prefix_r += spec.letter_rdeg(w.0[i]);
    }

    // Last letter wraps around and multiplies from the left. The transport
    // sign moves it past the module element, the other letters, and the
    // output suspension.
    let last = w.0[k - 1];
    let body = deg_m + w.slice(0, k - 1).rdeg(spec) + 1;
    let wrap = parity_sign(spec, spec.letter_rdeg(last) * body);
    for (c, g2) in act_left(spec, last, *g) {
        out.add_term((g2, w.slice(0, k - 1)), &(&wrap * &c));
    }

    out
}

/// Boundary of a chain.
pub fn chain_differential(spec: &AlgebraSpec, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for (t, c) in &x.terms {
        for (t2, c2) in term_differential(spec, t).terms {
            out.add_term(t2, &(c * &c2));
        }
    }
    out
}

/// Boundary on `C ⊗ C`: `d(u ⊗ v) = du ⊗ v + (-1)^{deg u} u ⊗ dv`.
pub fn tensor2_differential(spec: &AlgebraSpec, x: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((u, v), c) in &x.terms {
        for (du, cu) in term_differential(spec, u).terms {
            out.add_term((du, v.clone()), &(c * &cu));
        }
        let sign = parity_sign(spec, Chain::term_degree(spec, u));
        for (dv, cv) in term_differential(spec, v).terms {
            out.add_term((u.clone(), dv), &(&(c * &cv) * &sign));
        }
    }
    out
}

/// Boundary on `C ⊗ C ⊗ C`.
pub fn tensor3_differential(spec: &AlgebraSpec, x: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((u, v, w), c) in &x.terms {
        for (du, cu) in term_differential(spec, u).terms {
            out.add_term((du, v.clone(), w.clone()), &(c * &cu));
        }
        let s1 = parity_sign(spec, Chain::term_degree(spec, u));
        for (dv, cv) in term_differential(spec, v).terms {
            out.add_term((u.clone(), dv, w.clone()), &(&(c * &cv) * &s1));
        }
        let s2 = parity_sign(spec, Chain::term_degree(spec, u) + Chain::term_degree(spec, v));
        for (dw, cw) in term_differential(spec, w).terms {
            out.add_term((u.clone(), v.clone(), dw), &(&(c * &cw) * &s2));
        }
    }
    out
}

/// The cochain differential `δφ = [μ, φ]` (plus the internal differential
/// of the value bimodule), evaluated lazily.
pub fn cochain_differential(rule: &CochainRule) -> CochainRule {
    let inner = rule.clone();
    let spec = rule.spec().clone();
    CochainRule::from_fn(
        spec.clone(),
        rule.deg() - 1,
        rule.wshift(),
        rule.max_len() + 1,
        move |w: &Word| {
            let mut out = super::cochain::GenSum::zero();
            let q1 = w.len();
            let phi_deg = inner.deg();
            // Internal differential of the output.
            for (g, c) in inner.eval(w).terms() {
                for (c2, g2) in d_internal(&spec, *g) {
                    out.add(g2, &(c * &c2));
                }
            }
            if q1 == 0 {
                return out;
            }
            // First letter acts from the left; the rule jumps over it.
            let jump = parity_sign(&spec, spec.letter_rdeg(w.0[0]) * (phi_deg + 1));
            for (g, c) in inner.eval(&w.slice(1, q1)).terms() {
                for (c2, g2) in act_left(&spec, w.0[0], *g) {
                    out.add(g2, &(&(c * &c2) * &jump));
                }
            }
            // Interior merges.
            let mut prefix_r = 0i64;
            for i in 0..q1 - 1 {
                let sign = parity_sign(&spec, phi_deg + prefix_r);
                let (ms, e) = spec.mul(w.0[i], w.0[i + 1]);
                if spec.letter_in_family(e) {
                    let mut letters = w.0.clone();
                    letters[i] = e;
                    letters.remove(i + 1);
                    for (g, c) in inner.eval(&Word(letters)).terms() {
                        out.add(*g, &(&(c * &ms) * &sign));
                    }
                }
                prefix_r += spec.letter_rdeg(w.0[i]);
            }
            // Last letter acts from the right on the value.
            for (g, c) in inner.eval(&w.slice(0, q1 - 1)).terms() {
                for (c2, g2) in act_right(&spec, *g, w.0[q1 - 1]) {
                    out.add(g2, &(c * &c2));
                }
            }
            out
        },
    )
}
