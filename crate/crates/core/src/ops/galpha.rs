//! The duality map `g_α : C_*(A, M) -> C^*(A, M)[n]`.
//!
//! One disk diagram: the two-output element at the top eats a block of the
//! cochain's input letters in its outer angle and a block of the chain's
//! letters in its inner angle; the leftover letters multiply onto the
//! module line in planar order. The assembly order and its signs are fixed
//! by the golden values of the sphere families and the chain-map identity
//! `δ(g_α(x)) = (-1)^n g_α(∂x)`.

use crate::algebra::{act_left, act_right, AlgebraSpec, Gen};
use crate::hochschild::{Chain, CochainRule, GenSum, TwoOut, Word};
use crate::linalg::Scalar;

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// The value bimodule element with its current degree, to keep Koszul
/// bookkeeping local.
#[derive(Clone)]
struct Accum {
    terms: Vec<(Scalar, Gen)>,
}

impl Accum {
    fn of(g: Gen, c: Scalar) -> Self {
        Accum {
            terms: vec![(c, g)],
        }
    }

    fn act_right_exp(&self, spec: &AlgebraSpec, e: i64) -> Accum {
        let mut out = Vec::new();
        for (c, g) in &self.terms {
            for (s, g2) in act_right(spec, *g, e) {
                out.push((&(c * &s) * &spec.scalar(1), g2));
            }
        }
        Accum { terms: out }
    }

    fn act_left_exp(&self, spec: &AlgebraSpec, e: i64, extra: &Scalar) -> Accum {
        let mut out = Vec::new();
        for (c, g) in &self.terms {
            for (s, g2) in act_left(spec, e, *g) {
                out.push((&(c * &s) * extra, g2));
            }
        }
        Accum { terms: out }
    }
}

/// `g_α(x)` as a lazily evaluated cochain over the coefficient bimodule of
/// `x` (diagonal or dual; cone chains are handled componentwise upstream).
pub fn g_alpha(spec: &AlgebraSpec, alpha: &TwoOut, x: &Chain) -> CochainRule {
    let sp = spec.clone();
    let al = alpha.clone();
    let xx = x.clone();
    let n = alpha.dim;
    let xdeg = x.degree(spec).unwrap_or(0);
    let xw = x.weight(spec).unwrap_or(0);
    CochainRule::from_fn(
        spec.clone(),
        xdeg - n,
        xw + alpha.wshift,
        usize::MAX / 2,
        move |w: &Word| {
            let mut out = GenSum::zero();
            for ((g, xword), coeff) in &xx.terms {
                eval_term(&sp, &al, *g, xword, coeff, w, &mut out);
            }
            out
        },
    )
}

fn eval_term(
    spec: &AlgebraSpec,
    alpha: &TwoOut,
    m: Gen,
    xword: &Word,
    coeff: &Scalar,
    w: &Word,
    out: &mut GenSum,
) {
    // The quiver has exactly two multiplication vertices, one per output of
    // the duality element, so every letter — the whole input word in the
    // outer angle and the whole chain word in the inner angle — is eaten by
    // the element. The value is `(m·v)·u` with the Koszul correction
    // `(-1)^{deg v · deg m}` pinned by the signed tables of the
    // odd-generator family.
    let m_deg = m.degree(spec);
    let rx = xword.rdeg(spec);
    let dt = spec.deg_t();
    for (ca, u, v) in alpha.eval(w, xword) {
        // Koszul correction: the configuration with letters in the inner
        // angle carries the extra transport past the chain's suspensions,
        // visible only for odd generator degree. Pinned jointly by the
        // value tables of both sphere families and the chain-map identity.
        let dv = spec.mono_degree(v);
        let exp = if xword.is_empty() {
            dv * m_deg
        } else {
            dv * m_deg + dt * (dv * (rx + 1) + rx)
        };
        let eps = sgn(spec, exp);
        let mut acc = Accum::of(m, &(coeff * &ca) * &eps);
        acc = acc.act_right_exp(spec, v);
        acc = acc.act_right_exp(spec, u);
        for (c, g) in acc.terms {
            out.add(g, &c);
        }
    }
}
