//! Bimodule generators and their signed action tables.

use super::AlgebraSpec;
use crate::linalg::Scalar;
use serde::{Deserialize, Serialize};

/// Which coefficient bimodule a chain lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BimoduleKind {
    /// The algebra itself.
    Diagonal,
    /// The linear dual, spanned (within a window) by the functionals `s_k`.
    Dual,
    /// The inverse dualizing bimodule `A^! = (A^e ⊕ A^e[-deg t - 1])`.
    InverseDualizing,
    /// The cone of `f_α`, represented as Dual ⊕ Diagonal.
    Cone,
}

/// A basis generator of one of the bimodules.
///
/// `T(k)` is the monomial `t^k` of the diagonal bimodule, `S(k)` the dual
/// functional `s_k` (dual to `t^k`), and `R(k,l)`, `Sb(k,l)` the two basis
/// families of the inverse dualizing bimodule, with differential
/// `R(k,l) -> Sb(k+1,l) - Sb(k,l+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gen {
    T(i64),
    S(i64),
    R(i64, i64),
    Sb(i64, i64),
}

impl Gen {
    pub fn degree(&self, spec: &AlgebraSpec) -> i64 {
        let d = spec.deg_t();
        match *self {
            Gen::T(k) => d * k,
            Gen::S(k) => -d * k,
            Gen::R(k, l) => d * (k + l),
            Gen::Sb(k, l) => d * (k + l) - d - 1,
        }
    }

    pub fn weight(&self, spec: &AlgebraSpec) -> i64 {
        let _ = spec;
        match *self {
            Gen::T(k) => k,
            Gen::S(k) => -k,
            Gen::R(k, l) => k + l,
            Gen::Sb(k, l) => k + l - 1,
        }
    }

    pub fn kind(&self) -> BimoduleKind {
        match self {
            Gen::T(_) => BimoduleKind::Diagonal,
            Gen::S(_) => BimoduleKind::Dual,
            Gen::R(..) | Gen::Sb(..) => BimoduleKind::InverseDualizing,
        }
    }

    /// True when the generator exists in the family (polynomial duals `s_j`
    /// with `j < 0` are zero by convention).
    pub fn in_family(&self, spec: &AlgebraSpec) -> bool {
        if spec.is_laurent() {
            return true;
        }
        match *self {
            Gen::T(k) => k >= 0,
            Gen::S(k) => k >= 0,
            Gen::R(k, l) | Gen::Sb(k, l) => k >= 0 && l >= 0,
        }
    }
}

fn sgn(spec: &AlgebraSpec, parity: i64) -> Scalar {
    Scalar::from_i64(spec.ring, if parity.rem_euclid(2) == 1 { -1 } else { 1 })
}

/// Left action `t^e · g` as a signed generator list.
///
/// All tables are instances of the suspension-signed product
/// `mul(x, y) = (-1)^{deg x} x·y`, except the right action on the dual,
/// which carries one extra `(-1)^{deg t^e}`; that twist is what makes the
/// dual-coefficient Hochschild differential square to zero against the
/// signed evaluation pairing.
pub fn act_left(spec: &AlgebraSpec, e: i64, g: Gen) -> Vec<(Scalar, Gen)> {
    let sign = sgn(spec, spec.mono_degree(e));
    let out = match g {
        Gen::T(k) => Some(Gen::T(k + e)),
        Gen::S(k) => Some(Gen::S(k - e)),
        Gen::R(k, l) => Some(Gen::R(k + e, l)),
        Gen::Sb(k, l) => Some(Gen::Sb(k + e, l)),
    };
    collect(spec, sign, out)
}

/// Right action `g · t^e` as a signed generator list.
pub fn act_right(spec: &AlgebraSpec, g: Gen, e: i64) -> Vec<(Scalar, Gen)> {
    let (parity, out) = match g {
        Gen::T(k) => (g.degree(spec), Some(Gen::T(k + e))),
        Gen::S(k) => (g.degree(spec) + spec.mono_degree(e), Some(Gen::S(k - e))),
        Gen::R(k, l) => (g.degree(spec), Some(Gen::R(k, l + e))),
        Gen::Sb(k, l) => (g.degree(spec), Some(Gen::Sb(k, l + e))),
    };
    collect(spec, sgn(spec, parity), out)
}

/// Internal differential of the coefficient bimodule.
pub fn d_internal(spec: &AlgebraSpec, g: Gen) -> Vec<(Scalar, Gen)> {
    match g {
        Gen::R(k, l) => {
            let one = spec.scalar(1);
            let m1 = spec.scalar(-1);
            let mut out = Vec::new();
            if Gen::Sb(k + 1, l).in_family(spec) {
                out.push((one, Gen::Sb(k + 1, l)));
            }
            if Gen::Sb(k, l + 1).in_family(spec) {
                out.push((m1, Gen::Sb(k, l + 1)));
            }
            out
        }
        _ => Vec::new(),
    }
}

/// Evaluation pairing of the dual against the algebra:
/// `ev(s_k, t^l) = (-1)^{deg s_k} δ_{k,l}` (the sign is trivial for even
/// `deg t` and reproduces the signed pairing of the odd-generator family).
pub fn ev_pair(spec: &AlgebraSpec, k: i64, l: i64) -> Scalar {
    if k != l || !Gen::S(k).in_family(spec) {
        return spec.scalar(0);
    }
    sgn(spec, spec.mono_degree(k))
}

fn collect(spec: &AlgebraSpec, sign: Scalar, g: Option<Gen>) -> Vec<(Scalar, Gen)> {
    match g {
        Some(g) if g.in_family(spec) => vec![(sign, g)],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Ring;

    fn odd() -> AlgebraSpec {
        AlgebraSpec::poly("S3", 2, Ring::Int)
    }

    fn even() -> AlgebraSpec {
        AlgebraSpec::poly("S4", 3, Ring::Int)
    }

    #[test]
    fn inverse_dualizing_actions_match_tables() {
        // Odd family: t·Sb(0,0) = Sb(1,0); Sb(k,l)·t = -Sb(k,l+1).
        let s = odd();
        assert_eq!(act_left(&s, 1, Gen::Sb(0, 0)), vec![(s.scalar(1), Gen::Sb(1, 0))]);
        assert_eq!(act_right(&s, Gen::Sb(1, 1), 1), vec![(s.scalar(-1), Gen::Sb(1, 2))]);
        assert_eq!(act_right(&s, Gen::R(1, 1), 2), vec![(s.scalar(1), Gen::R(1, 3))]);
        // Even family: t^i acts with (-1)^i on the left, Sb(k,l)·t^i with (-1)^{k+l}.
        let e = even();
        assert_eq!(act_left(&e, 1, Gen::R(0, 0)), vec![(e.scalar(-1), Gen::R(1, 0))]);
        assert_eq!(act_left(&e, 2, Gen::R(0, 0)), vec![(e.scalar(1), Gen::R(2, 0))]);
        assert_eq!(act_right(&e, Gen::Sb(1, 0), 1), vec![(e.scalar(-1), Gen::Sb(1, 1))]);
        assert_eq!(act_right(&e, Gen::Sb(1, 1), 1), vec![(e.scalar(1), Gen::Sb(1, 2))]);
    }

    #[test]
    fn dual_pairing() {
        let s = odd();
        assert!(ev_pair(&s, 2, 2).is_one());
        assert!(ev_pair(&s, 2, 3).is_zero());
        let e = even();
        assert_eq!(ev_pair(&e, 1, 1), e.scalar(-1));
        assert_eq!(ev_pair(&e, 2, 2), e.scalar(1));
    }

    #[test]
    fn polynomial_duals_vanish_below_zero() {
        let s = odd();
        assert!(act_right(&s, Gen::S(1), 3).is_empty());
        assert_eq!(act_right(&s, Gen::S(3), 1), vec![(s.scalar(1), Gen::S(2))]);
    }

    #[test]
    fn internal_differential_squares_to_zero_and_commutes_with_actions() {
        for spec in [odd(), even()] {
            for k in 0..=4i64 {
                for l in 0..=4i64 {
                    // d² = 0 on R (d of Sb is zero).
                    for (_, g) in d_internal(&spec, Gen::R(k, l)) {
                        assert!(d_internal(&spec, g).is_empty());
                    }
                    // d(t·R) = t·d(R) and d(R·t) = d(R)·t with the action signs.
                    for e in 1..=3i64 {
                        let left_then_d: Vec<_> = act_left(&spec, e, Gen::R(k, l))
                            .into_iter()
                            .flat_map(|(c, g)| {
                                d_internal(&spec, g).into_iter().map(move |(c2, g2)| (&c * &c2, g2))
                            })
                            .collect();
                        let d_then_left: Vec<_> = d_internal(&spec, Gen::R(k, l))
                            .into_iter()
                            .flat_map(|(c, g)| {
                                act_left(&spec, e, g).into_iter().map(move |(c2, g2)| (&c * &c2, g2))
                            })
                            .collect();
                        let norm = |v: Vec<(Scalar, Gen)>| {
                            let mut m = std::collections::BTreeMap::new();
                            for (c, g) in v {
                                let cur = m.remove(&g).unwrap_or_else(|| spec.scalar(0));
                                let s = &cur + &c;
                                if !s.is_zero() {
                                    m.insert(g, s);
                                }
                            }
                            m
                        };
                        assert_eq!(norm(left_then_d), norm(d_then_left), "left action chain rule");
                    }
                }
            }
        }
    }
}
