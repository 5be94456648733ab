//! Cap and cup products, the two cap homotopies, the Lie derivative, and
//! the cup-commutator homotopy.

use super::chain::Chain;
use super::cochain::{CochainRule, GenSum};
use super::Word;
use crate::algebra::{act_left, act_right, AlgebraSpec, Gen};
use crate::linalg::Scalar;

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    spec.scalar(if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

fn diag_exp(g: &Gen) -> i64 {
    match g {
        Gen::T(k) => *k,
        _ => panic!("operation requires diagonal coefficients"),
    }
}

/// `φ ⌢ x`: the cochain eats a prefix of the bar word and its value
/// multiplies the module element from the right.
pub fn cap_left(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for ((g, w), c) in &x.terms {
        let m_deg = g.degree(spec);
        let lead = sgn(spec, (phi.deg() + 1) * m_deg);
        for p in 0..=w.len() {
            let vals = phi.eval(&w.slice(0, p));
            for (vg, vc) in vals.terms() {
                for (ac, g2) in act_right(spec, *g, diag_exp(vg)) {
                    let coef = &(&(c * vc) * &ac) * &lead;
                    out.add_term((g2, w.slice(p, w.len())), &coef);
                }
            }
        }
    }
    out
}

/// `x ⌢ φ`: the cochain eats a suffix and its value wraps around to
/// multiply the module element from the left.
pub fn cap_right(spec: &AlgebraSpec, x: &Chain, phi: &CochainRule) -> Chain {
    let mut out = Chain::zero();
    for ((g, w), c) in &x.terms {
        let m_deg = g.degree(spec);
        let k = w.len();
        for p in 0..=k {
            let eaten = w.slice(k - p, k);
            let kept = w.slice(0, k - p);
            let vals = phi.eval(&eaten);
            if vals.is_zero() {
                continue;
            }
            let body = m_deg + kept.rdeg(spec);
            let insert = sgn(spec, (phi.deg() + 1) * body);
            let out_rdeg = phi.deg() + eaten.rdeg(spec) + 1;
            let wrap = sgn(spec, out_rdeg * (1 + body));
            let total = &(&insert * &wrap) * &spec.scalar(-1);
            for (vg, vc) in vals.terms() {
                for (ac, g2) in act_left(spec, diag_exp(vg), *g) {
                    let coef = &(&(c * vc) * &ac) * &total;
                    out.add_term((g2, kept.clone()), &coef);
                }
            }
        }
    }
    out
}

/// Interior-insertion homotopy between the two caps: the cochain value is
/// inserted as a bar letter without touching the module element.
///
/// Normalized so that
/// `d(Γ₃(φ,x)) + Γ₃(δφ,x) + (-1)^{deg φ} Γ₃(φ,dx) = φ⌢x - x⌢φ`
/// holds on the nose. The Lie derivative uses the raw insertion instead,
/// which differs by `(-1)^{deg φ + 1}`; with that normalization the Lie
/// derivative of the multiplication cochain is the Hochschild boundary.
pub fn gamma3(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    let flip = sgn(spec, phi.deg() + 1);
    gamma3_raw(spec, phi, x).scale(&flip)
}

fn gamma3_raw(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for ((g, w), c) in &x.terms {
        let m_deg = g.degree(spec);
        let k = w.len();
        for i in 0..=k {
            for j in i..=k {
                let eaten = w.slice(i, j);
                let vals = phi.eval(&eaten);
                if vals.is_zero() {
                    continue;
                }
                let insert = sgn(spec, (phi.deg() + 1) * (m_deg + w.slice(0, i).rdeg(spec) + 1));
                for (vg, vc) in vals.terms() {
                    let e = diag_exp(vg);
                    if !spec.letter_in_family(e) {
                        continue; // unit letters vanish in the normalized complex
                    }
                    let word = Word::concat(&[&w.0[0..i], &[e], &w.0[j..k]]);
                    out.add_term((*g, word), &(&(c * vc) * &insert));
                }
            }
        }
    }
    out
}

/// Wrap-around homotopy: the cochain eats a suffix, the module element and
/// a prefix, and its value becomes the new module element. Normalized like
/// `gamma3`, with the mirrored identity
/// `d(Γ₄(φ,x)) + Γ₄(δφ,x) + (-1)^{deg φ} Γ₄(φ,dx) = x⌢φ - φ⌢x`.
pub fn gamma4(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    let flip = sgn(spec, phi.deg() + 1);
    gamma4_raw(spec, phi, x).scale(&flip)
}

fn gamma4_raw(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    let mut out = Chain::zero();
    for ((g, w), c) in &x.terms {
        let m_exp = diag_exp(g);
        let m_deg = g.degree(spec);
        let k = w.len();
        // suffix = w[s..k], prefix = w[0..i], remaining word = w[i..s].
        for s in 0..=k {
            for i in 0..=s {
                let arg = Word::concat(&[&w.0[s..k], &[m_exp], &w.0[0..i]]);
                let vals = phi.eval(&arg);
                if vals.is_zero() {
                    continue;
                }
                let suffix_r = w.slice(s, k).rdeg(spec);
                let body = 1 + m_deg + w.slice(0, s).rdeg(spec);
                let wrap = sgn(spec, suffix_r * body);
                for (vg, vc) in vals.terms() {
                    out.add_term((*vg, w.slice(i, s)), &(&(c * vc) * &wrap));
                }
            }
        }
    }
    out
}

/// Both cap homotopies, in the order (interior, wrap).
pub fn cap_homotopies(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> (Chain, Chain) {
    (gamma3(spec, phi, x), gamma4(spec, phi, x))
}

/// The Lie derivative, the raw-normalized sum of the two cap homotopies;
/// for the multiplication cochain this is exactly the Hochschild boundary.
pub fn lie_derivative(spec: &AlgebraSpec, phi: &CochainRule, x: &Chain) -> Chain {
    gamma3_raw(spec, phi, x).add(&gamma4_raw(spec, phi, x))
}

/// Cup product of diagonal-valued cochains.
pub fn cup(spec: &AlgebraSpec, phi: &CochainRule, psi: &CochainRule) -> CochainRule {
    let (f, g) = (phi.clone(), psi.clone());
    let sp = spec.clone();
    CochainRule::from_fn(
        spec.clone(),
        phi.deg() + psi.deg(),
        phi.wshift() + psi.wshift(),
        phi.max_len() + psi.max_len(),
        move |w: &Word| {
            let mut out = GenSum::zero();
            for p in 0..=w.len() {
                let left = f.eval(&w.slice(0, p));
                if left.is_zero() {
                    continue;
                }
                // Plain product of the two values with the second rule
                // jumping the prefix; this is the unique convention that is
                // unital on both sides.
                let jump = sgn(&sp, g.deg() * w.slice(0, p).rdeg(&sp));
                let right = g.eval(&w.slice(p, w.len()));
                for (lg, lc) in left.terms() {
                    for (rg, rc) in right.terms() {
                        let gen = Gen::T(diag_exp(lg) + diag_exp(rg));
                        if gen.in_family(&sp) {
                            out.add(gen, &(&(lc * rc) * &jump));
                        }
                    }
                }
            }
            out
        },
    )
}

/// The cup-commutator homotopy `Q`: the first cochain's value is fed to
/// the second as a bar letter. Normalized (the leading `(-1)^{(deg φ + 1)
/// deg ψ}`) so that
/// `δ(Q(φ,ψ)) + Q(δφ,ψ) + (-1)^{deg φ} Q(φ,δψ) = φ⌣ψ - (-1)^{deg φ deg ψ} ψ⌣φ`
/// holds exactly.
pub fn cup_homotopy_q(spec: &AlgebraSpec, phi: &CochainRule, psi: &CochainRule) -> CochainRule {
    let (f, g) = (phi.clone(), psi.clone());
    let sp = spec.clone();
    let lead = sgn(spec, (phi.deg() + 1) * psi.deg());
    CochainRule::from_fn(
        spec.clone(),
        phi.deg() + psi.deg() + 1,
        phi.wshift() + psi.wshift(),
        phi.max_len() + psi.max_len().max(1),
        move |w: &Word| {
            let mut out = GenSum::zero();
            for i in 0..=w.len() {
                for j in i..=w.len() {
                    let vals = f.eval(&w.slice(i, j));
                    if vals.is_zero() {
                        continue;
                    }
                    let jump = sgn(&sp, (f.deg() + 1) * w.slice(0, i).rdeg(&sp));
                    for (vg, vc) in vals.terms() {
                        let e = diag_exp(vg);
                        if !sp.letter_in_family(e) {
                            continue;
                        }
                        let word = Word::concat(&[&w.0[0..i], &[e], &w.0[j..w.len()]]);
                        for (og, oc) in g.eval(&word).terms() {
                            out.add(*og, &(&(&(vc * oc) * &jump) * &lead));
                        }
                    }
                }
            }
            out
        },
    )
}

/// The suspension-signed multiplication as an (unnormalized) cochain rule;
/// feeding it to the Lie derivative reproduces the Hochschild boundary.
pub fn mu_rule(spec: &AlgebraSpec) -> CochainRule {
    let sp = spec.clone();
    CochainRule::from_fn(spec.clone(), -2, 0, 2, move |w: &Word| {
        if w.len() != 2 {
            return GenSum::zero();
        }
        let (ms, e) = sp.mul(w.0[0], w.0[1]);
        let gen = Gen::T(e);
        if !gen.in_family(&sp) {
            return GenSum::zero();
        }
        GenSum::single(gen, ms)
    })
}

/// Pairing of a dual-coefficient chain against a diagonal-valued cochain:
/// evaluate the cochain on the bar word and pair the functional with the
/// value. Used by the kernel subcomplex and the compatibility relation.
pub fn pair_dual_chain(spec: &AlgebraSpec, x: &Chain, phi: &CochainRule) -> Scalar {
    let mut total = spec.scalar(0);
    for ((g, w), c) in &x.terms {
        let k = match g {
            Gen::S(k) => *k,
            _ => panic!("pair_dual_chain requires dual coefficients"),
        };
        for (vg, vc) in phi.eval(w).terms() {
            let ev = crate::algebra::ev_pair(spec, k, diag_exp(vg));
            total = &total + &(&(c * vc) * &ev);
        }
    }
    total
}

/// Pairing of a diagonal-valued cochain rule against a diagonal chain:
/// evaluate on the bar word and read the coefficient of the module element
/// in the value through the dual basis.
pub fn pair_cochain_chain(spec: &AlgebraSpec, phi: &CochainRule, y: &Chain) -> Scalar {
    let mut total = spec.scalar(0);
    for ((g, w), c) in &y.terms {
        let m = diag_exp(g);
        for (vg, vc) in phi.eval(w).terms() {
            let ev = crate::algebra::ev_pair(spec, diag_exp(vg), m);
            total = &total + &(&(c * vc) * &ev);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochschild::diff::{chain_differential, cochain_differential};
    use crate::hochschild::Window;
    use crate::linalg::Ring;

    fn families() -> Vec<AlgebraSpec> {
        vec![
            AlgebraSpec::poly("S3", 2, Ring::Int),
            AlgebraSpec::poly("S4", 3, Ring::Int),
            AlgebraSpec::poly("S2", 1, Ring::Fp(2)),
            AlgebraSpec::laurent("circle", Ring::Rat),
        ]
    }

    fn sample_cochains(spec: &AlgebraSpec) -> Vec<CochainRule> {
        let mut v = vec![
            CochainRule::unit(spec.clone()),
            CochainRule::const_mono(spec.clone(), 2),
            CochainRule::derivation(spec.clone(), 1, |i| i),
            CochainRule::derivation(spec.clone(), 2, |i| i.rem_euclid(2)),
        ];
        if spec.is_laurent() {
            v.push(CochainRule::const_mono(spec.clone(), -1));
            v.push(CochainRule::derivation(spec.clone(), -1, |i| i));
        }
        v
    }

    #[test]
    fn lie_derivative_of_multiplication_is_the_boundary() {
        for spec in families() {
            let win = Window::new(3, -3, 3, 3);
            let mu = mu_rule(&spec);
            for g in win.gens(&spec, crate::algebra::BimoduleKind::Diagonal) {
                for w in win.words(&spec) {
                    let x = Chain::single((g, w.clone()), spec.scalar(1));
                    let lhs = lie_derivative(&spec, &mu, &x);
                    let rhs = chain_differential(&spec, &x);
                    assert_eq!(lhs, rhs, "L_mu != d at {g:?}{w} over {}", spec.name);
                }
            }
        }
    }

    #[test]
    fn caps_with_the_unit_cochain_are_the_identity() {
        for spec in families() {
            let win = Window::new(3, -3, 3, 3);
            let one = CochainRule::unit(spec.clone());
            for g in win.gens(&spec, crate::algebra::BimoduleKind::Diagonal) {
                for w in win.words(&spec) {
                    let x = Chain::single((g, w.clone()), spec.scalar(1));
                    assert_eq!(cap_left(&spec, &one, &x), x);
                    assert_eq!(cap_right(&spec, &x, &one), x);
                    assert!(gamma3(&spec, &one, &x).is_zero());
                }
            }
        }
    }

    #[test]
    fn cap_homotopy_identities() {
        // d(Γ₃(φ,x)) + Γ₃(δφ,x) + (-1)^{deg φ} Γ₃(φ,dx) = φ⌢x - x⌢φ
        // d(Γ₄(φ,x)) + Γ₄(δφ,x) + (-1)^{deg φ} Γ₄(φ,dx) = x⌢φ - φ⌢x
        for spec in families() {
            let win = Window::new(2, -2, 2, 2);
            for phi in sample_cochains(&spec) {
                let dphi = cochain_differential(&phi);
                let sign = spec.scalar(if phi.deg().rem_euclid(2) == 1 { -1 } else { 1 });
                for g in win.gens(&spec, crate::algebra::BimoduleKind::Diagonal) {
                    for w in win.words(&spec) {
                        let x = Chain::single((g, w.clone()), spec.scalar(1));
                        let dx = chain_differential(&spec, &x);
                        let rhs = cap_left(&spec, &phi, &x).sub(&cap_right(&spec, &x, &phi));
                        let lhs = chain_differential(&spec, &gamma3(&spec, &phi, &x))
                            .add(&gamma3(&spec, &dphi, &x))
                            .add(&gamma3(&spec, &phi, &dx).scale(&sign));
                        assert_eq!(lhs, rhs, "Γ₃ identity fails: {:?} {g:?}{w} {}", phi, spec.name);
                        let lhs4 = chain_differential(&spec, &gamma4(&spec, &phi, &x))
                            .add(&gamma4(&spec, &dphi, &x))
                            .add(&gamma4(&spec, &phi, &dx).scale(&sign));
                        assert_eq!(lhs4, rhs.neg(), "Γ₄ identity fails: {:?} {g:?}{w} {}", phi, spec.name);
                    }
                }
            }
        }
    }

    #[test]
    fn cup_is_unital_and_associative_on_window() {
        for spec in families() {
            let win = Window::new(2, -2, 2, 2);
            let one = CochainRule::unit(spec.clone());
            let cochains = sample_cochains(&spec);
            for phi in &cochains {
                assert!(cup(&spec, &one, phi).eq_on(phi, &win), "1⌣φ = φ over {}", spec.name);
                assert!(cup(&spec, phi, &one).eq_on(phi, &win), "φ⌣1 = φ over {}", spec.name);
            }
            for a in &cochains {
                for b in &cochains {
                    for c in &cochains {
                        let l = cup(&spec, &cup(&spec, a, b), c);
                        let r = cup(&spec, a, &cup(&spec, b, c));
                        assert!(l.eq_on(&r, &win), "cup associativity over {}", spec.name);
                    }
                }
            }
        }
    }

    #[test]
    fn cup_of_powers_matches_monomial_addition() {
        let spec = AlgebraSpec::poly("S3", 2, Ring::Int);
        let win = Window::new(2, 0, 3, 3);
        for k in 0..3 {
            for l in 0..3 {
                let a = CochainRule::const_mono(spec.clone(), k);
                let b = CochainRule::const_mono(spec.clone(), l);
                let expect = CochainRule::const_mono(spec.clone(), k + l);
                assert!(cup(&spec, &a, &b).eq_on(&expect, &win));
            }
        }
    }

    #[test]
    fn q_homotopy_realizes_the_cup_commutator() {
        // δ(Q(φ,ψ)) + Q(δφ,ψ) + (-1)^{deg φ} Q(φ,δψ) = φ⌣ψ - (-1)^{deg φ deg ψ} ψ⌣φ
        for spec in families() {
            let win = Window::new(2, -2, 2, 2);
            for phi in sample_cochains(&spec) {
                for psi in sample_cochains(&spec) {
                    let q = cup_homotopy_q(&spec, &phi, &psi);
                    let dq = cochain_differential(&q);
                    let qd1 = cup_homotopy_q(&spec, &cochain_differential(&phi), &psi);
                    let s1 = spec.scalar(if phi.deg().rem_euclid(2) == 1 { -1 } else { 1 });
                    let qd2 = cup_homotopy_q(&spec, &phi, &cochain_differential(&psi)).scale(&s1);
                    let lhs = dq.add(&qd1).add(&qd2);
                    let s2 = spec.scalar(if (phi.deg() * psi.deg()).rem_euclid(2) == 1 { -1 } else { 1 });
                    let rhs = cup(&spec, &phi, &psi).sub(&cup(&spec, &psi, &phi).scale(&s2));
                    assert!(lhs.eq_on(&rhs, &win), "[d,Q] relation over {}", spec.name);
                }
            }
        }
    }

    #[test]
    fn caps_are_chain_maps() {
        // d(φ⌢x) = δφ⌢x + (-1)^{deg φ} φ⌢dx, and the mirror identity.
        for spec in families() {
            let win = Window::new(2, -2, 2, 2);
            for phi in sample_cochains(&spec) {
                let dphi = cochain_differential(&phi);
                let sign = spec.scalar(if phi.deg().rem_euclid(2) == 1 { -1 } else { 1 });
                for g in win.gens(&spec, crate::algebra::BimoduleKind::Diagonal) {
                    for w in win.words(&spec) {
                        let x = Chain::single((g, w.clone()), spec.scalar(1));
                        let dx = chain_differential(&spec, &x);
                        let lhs = chain_differential(&spec, &cap_left(&spec, &phi, &x));
                        let rhs = cap_left(&spec, &dphi, &x).add(&cap_left(&spec, &phi, &dx).scale(&sign));
                        assert_eq!(lhs, rhs, "cap_left chain map over {}", spec.name);
                        let lhs = chain_differential(&spec, &cap_right(&spec, &x, &phi));
                        let rhs = cap_right(&spec, &dx, &phi)
                            .scale(&sign)
                            .add(&cap_right(&spec, &x, &dphi));
                        assert_eq!(lhs, rhs, "cap_right chain map over {}", spec.name);
                    }
                }
            }
        }
    }
}
