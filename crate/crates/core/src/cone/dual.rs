//! The kernel subcomplex, homotopies of the connecting map, the lifted
//! dual product, and the compatibility pairing.

use super::mu::pi_m;
use super::project_dual;
use crate::algebra::{AlgebraSpec, BimoduleKind, Gen};
use crate::hochschild::{chain_differential, pair_dual_chain, Chain, TermTable, Window, Word};
use crate::linalg::Scalar;
use crate::ops::g_alpha;
use crate::precy::{PreCy, Trivialization};
use std::rc::Rc;

/// A homotopy of the connecting map: a rule on dual chains valued in
/// diagonal chains, degree `+1` relative to the cone splitting.
#[derive(Clone)]
pub struct HRule {
    eval: Rc<dyn Fn(&AlgebraSpec, &Chain) -> Chain>,
}

impl HRule {
    pub fn zero() -> Self {
        HRule {
            eval: Rc::new(|_, _| Chain::zero()),
        }
    }

    pub fn new(eval: impl Fn(&AlgebraSpec, &Chain) -> Chain + 'static) -> Self {
        HRule {
            eval: Rc::new(eval),
        }
    }

    pub fn apply(&self, spec: &AlgebraSpec, x: &Chain) -> Chain {
        (self.eval)(spec, x)
    }
}

/// The explicit homotopy of the circle family:
/// `h(s_k[w]) = (½δ_k + χ_{1≤k}) t^{-k}[w]`.
pub struct CircleH;

impl CircleH {
    pub fn rule() -> HRule {
        HRule::new(|spec, x| {
            let mut out = Chain::zero();
            for ((g, w), c) in &x.terms {
                if let Gen::S(k) = g {
                    let coeff = if *k == 0 {
                        Scalar::from_ratio(spec.ring, 1, 2)
                    } else if *k >= 1 {
                        spec.scalar(1)
                    } else {
                        spec.scalar(0)
                    };
                    if !coeff.is_zero() {
                        out.add_term((Gen::T(-k), w.clone()), &(c * &coeff));
                    }
                }
            }
            out
        })
    }
}

/// `ι_h(x) = (x, -h(x))`: the lift of a dual chain into the cone.
pub fn iota_h(spec: &AlgebraSpec, h: &HRule, x: &Chain) -> Chain {
    x.add(&h.apply(spec, x).neg())
}

/// Pairing of a dual chain against the duality image of a diagonal chain:
/// `⟨g_α(x), y⟩`-style pairing used by the kernel subcomplex.
pub fn pair_g_dual(spec: &AlgebraSpec, p: &PreCy, x: &Chain, y: &Chain) -> Scalar {
    // g_α over dual coefficients applied to x, evaluated against y's word,
    // paired with y's module element.
    let g = g_alpha(spec, &p.alpha, x);
    let mut total = spec.scalar(0);
    for ((gy, wy), cy) in &y.terms {
        let m = match gy {
            Gen::T(m) => *m,
            _ => panic!("pairing expects a diagonal chain"),
        };
        for (vg, vc) in g.eval(wy).terms() {
            if let Gen::S(k) = vg {
                let ev = crate::algebra::ev_pair(spec, *k, m);
                total = &total + &(&(cy * vc) * &ev);
            }
        }
    }
    total
}

/// `^♯E₀ ∘ g` applied to a dual chain: pair the duality image against the
/// left factors of `e0`, keeping the right factors.
pub fn sharp_e0_g(spec: &AlgebraSpec, p: &PreCy, triv: &Trivialization, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for ((u, v), c) in &triv.e0.terms {
        let uchain = Chain::single(u.clone(), spec.scalar(1));
        let s = pair_g_dual(spec, p, x, &uchain);
        if !s.is_zero() {
            out.add_term(v.clone(), &(c * &s));
        }
    }
    out
}

/// Basis of the kernel subcomplex in one (degree, weight) block: closed
/// dual chains pairing to zero against every closed generator of the
/// quotient subcomplex.
pub fn k_subcomplex_basis(
    spec: &AlgebraSpec,
    win: &Window,
    p: &PreCy,
    triv: &Trivialization,
    degree: i64,
    weight: i64,
) -> Vec<Chain> {
    let table = TermTable::new(spec, win, BimoduleKind::Dual);
    let block = table.block(degree, weight);
    // cycles among the block
    let mut cycles: Vec<Chain> = Vec::new();
    // Solve d x = 0 over the block by brute kernel computation.
    let mut tgt: Vec<crate::hochschild::Term> = Vec::new();
    let mut cols = Vec::new();
    for t in block {
        let d = chain_differential(spec, &Chain::single(t.clone(), spec.scalar(1)));
        for k in d.terms.keys() {
            if !tgt.contains(k) {
                tgt.push(k.clone());
            }
        }
        cols.push(d);
    }
    let mut m = crate::linalg::SparseMatrix::zero(spec.ring(), tgt.len(), block.len());
    for (j, d) in cols.iter().enumerate() {
        for (k, c) in &d.terms {
            let i = tgt.iter().position(|t| t == k).unwrap();
            m.set(i, j, c.clone());
        }
    }
    for v in crate::linalg::kernel_basis(&m) {
        let mut ch = Chain::zero();
        for (j, t) in block.iter().enumerate() {
            ch.add_term(t.clone(), &v[j]);
        }
        if !ch.is_zero() {
            cycles.push(ch);
        }
    }
    // keep those pairing to zero with every closed quotient generator
    cycles
        .into_iter()
        .filter(|x| {
            triv.w_gens.iter().all(|w| {
                chain_differential(spec, w).is_zero() == false
                    || pair_g_dual(spec, p, x, w).is_zero()
            })
        })
        .collect()
}

/// The lifted dual product `π_{h₁,h₂}(x₁,x₂) = p·π_M(ι_{h₁}x₁, ι_{h₂}x₂)`.
pub fn dual_product(
    spec: &AlgebraSpec,
    p: &PreCy,
    h1: &HRule,
    h2: &HRule,
    x1: &Chain,
    x2: &Chain,
) -> Chain {
    project_dual(&pi_m(spec, p, &iota_h(spec, h1, x1), &iota_h(spec, h2, x2)))
}

/// The compatibility pairing check:
/// `⟨π_{h₁,h₂}(x₁,x₂), g_α(y)⟩ = ±⟨x₂⊗x₁, (id⊗g_α)(g_α⊗id) λ_H(y)⟩`,
/// with the sign `(-1)^{deg x₁ · deg x₂}`. Returns the two scalars.
#[allow(clippy::too_many_arguments)]
pub fn compatibility_pairing(
    spec: &AlgebraSpec,
    data: &crate::ops::StringData,
    h1: &HRule,
    h2: &HRule,
    x1: &Chain,
    x2: &Chain,
    y: &Chain,
) -> (Scalar, Scalar) {
    let p = &data.precy;
    let lhs_chain = dual_product(spec, p, h1, h2, x1, x2);
    let gy = g_alpha(spec, &p.alpha, y);
    let mut lhs = spec.scalar(0);
    for ((g, w), c) in &lhs_chain.terms {
        if let Gen::S(k) = g {
            for (vg, vc) in gy.eval(w).terms() {
                if let Gen::T(m) = vg {
                    let ev = crate::algebra::ev_pair(spec, *k, *m);
                    lhs = &lhs + &(&(c * vc) * &ev);
                }
            }
        }
    }
    // right side: pair x2 against the first factor and x1 against the second
    let lam = crate::ops::lambda_h(spec, &data.co, &data.eta, p, &data.triv, y);
    let mut rhs = spec.scalar(0);
    for ((u, v), c) in &lam.terms {
        let a = pair_dual_chain(
            spec,
            x2,
            &g_alpha(spec, &p.alpha, &Chain::single(u.clone(), spec.scalar(1))),
        );
        if a.is_zero() {
            continue;
        }
        let b = pair_dual_chain(
            spec,
            x1,
            &g_alpha(spec, &p.alpha, &Chain::single(v.clone(), spec.scalar(1))),
        );
        rhs = &rhs + &(&(c * &a) * &b);
    }
    let d1 = x1.degree(spec).unwrap_or(0);
    let d2 = x2.degree(spec).unwrap_or(0);
    if (d1 * d2).rem_euclid(2) == 1 {
        rhs = -&rhs;
    }
    (lhs, rhs)
}
