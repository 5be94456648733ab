//! Chains: finite linear combinations of decorated bar words.

use super::Word;
use crate::algebra::{AlgebraSpec, Gen};
use crate::linalg::Scalar;
use std::collections::BTreeMap;

/// One basis term of a Hochschild chain: a bimodule generator together
/// with a normalized bar word.
pub type Term = (Gen, Word);

/// A finite linear combination of terms, coefficients in the active ring.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain {
    pub terms: BTreeMap<Term, Scalar>,
}

macro_rules! chain_impl {
    ($name:ident, $key:ty) => {
        impl $name {
            pub fn zero() -> Self {
                Self {
                    terms: BTreeMap::new(),
                }
            }

            pub fn is_zero(&self) -> bool {
                self.terms.is_empty()
            }

            pub fn add_term(&mut self, key: $key, c: &Scalar) {
                if c.is_zero() {
                    return;
                }
                let entry = self.terms.remove(&key);
                let v = match entry {
                    Some(old) => &old + c,
                    None => c.clone(),
                };
                if v.is_zero() {
                    self.terms.remove(&key);
                } else {
                    self.terms.insert(key, v);
                }
            }

            pub fn add(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, v) in &other.terms {
                    out.add_term(k.clone(), v);
                }
                out
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, v) in &other.terms {
                    out.add_term(k.clone(), &(-v));
                }
                out
            }

            pub fn scale(&self, c: &Scalar) -> Self {
                let mut out = Self::zero();
                if c.is_zero() {
                    return out;
                }
                for (k, v) in &self.terms {
                    out.add_term(k.clone(), &(c * v));
                }
                out
            }

            pub fn neg(&self) -> Self {
                let mut out = Self::zero();
                for (k, v) in &self.terms {
                    out.add_term(k.clone(), &(-v));
                }
                out
            }

            pub fn single(key: $key, c: Scalar) -> Self {
                let mut out = Self::zero();
                out.add_term(key, &c);
                out
            }
        }
    };
}

chain_impl!(Chain, Term);
chain_impl!(Tensor2, (Term, Term));
chain_impl!(Tensor3, (Term, Term, Term));

impl Chain {
    /// Chain with a single generator and empty word, coefficient 1.
    pub fn of_gen(spec: &AlgebraSpec, g: Gen) -> Chain {
        Chain::single((g, Word::empty()), spec.scalar(1))
    }

    pub fn of(spec: &AlgebraSpec, g: Gen, letters: &[i64]) -> Chain {
        Chain::single((g, Word::of(letters)), spec.scalar(1))
    }

    pub fn term_degree(spec: &AlgebraSpec, t: &Term) -> i64 {
        t.0.degree(spec) + t.1.rdeg(spec)
    }

    pub fn term_weight(spec: &AlgebraSpec, t: &Term) -> i64 {
        t.0.weight(spec) + t.1.weight()
    }

    /// Homogeneous degree if all terms agree, else `None`.
    pub fn degree(&self, spec: &AlgebraSpec) -> Option<i64> {
        let mut d = None;
        for t in self.terms.keys() {
            let td = Self::term_degree(spec, t);
            match d {
                None => d = Some(td),
                Some(x) if x == td => {}
                _ => return None,
            }
        }
        d
    }

    pub fn weight(&self, spec: &AlgebraSpec) -> Option<i64> {
        let mut w = None;
        for t in self.terms.keys() {
            let tw = Self::term_weight(spec, t);
            match w {
                None => w = Some(tw),
                Some(x) if x == tw => {}
                _ => return None,
            }
        }
        w
    }

    /// Splits into (dual-generator part, diagonal part); used by the cone.
    pub fn split_cone(&self) -> (Chain, Chain) {
        let mut dual = Chain::zero();
        let mut diag = Chain::zero();
        for (k, v) in &self.terms {
            match k.0 {
                Gen::S(_) => dual.add_term(k.clone(), v),
                Gen::T(_) => diag.add_term(k.clone(), v),
                _ => panic!("cone chain with non-cone generator"),
            }
        }
        (dual, diag)
    }
}

/// An element of `C ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor2 {
    pub terms: BTreeMap<(Term, Term), Scalar>,
}

/// An element of `C ⊗ C ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor3 {
    pub terms: BTreeMap<(Term, Term, Term), Scalar>,
}

impl Tensor2 {
    pub fn of_chains(a: &Chain, b: &Chain) -> Tensor2 {
        let mut out = Tensor2::zero();
        for (ka, va) in &a.terms {
            for (kb, vb) in &b.terms {
                out.add_term((ka.clone(), kb.clone()), &(va * vb));
            }
        }
        out
    }

    /// Transpose with the Koszul sign `(-1)^{deg u · deg v}`.
    pub fn transpose(&self, spec: &AlgebraSpec) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((u, v), c) in &self.terms {
            let du = Chain::term_degree(spec, u);
            let dv = Chain::term_degree(spec, v);
            let sign = if (du * dv).rem_euclid(2) == 1 {
                -c
            } else {
                c.clone()
            };
            out.add_term((v.clone(), u.clone()), &sign);
        }
        out
    }

    /// Applies `f` to the left factor; `f` must be degree-homogeneous of
    /// degree `fdeg` for the Koszul bookkeeping of the caller.
    pub fn map_left(&self, f: impl Fn(&Term) -> Chain) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((u, v), c) in &self.terms {
            for (ku, cu) in f(u).terms {
                out.add_term((ku, v.clone()), &(c * &cu));
            }
        }
        out
    }

    pub fn map_right_signed(&self, spec: &AlgebraSpec, fparity: i64, f: impl Fn(&Term) -> Chain) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((u, v), c) in &self.terms {
            let du = Chain::term_degree(spec, u);
            let sign = if (du * fparity).rem_euclid(2) == 1 {
                -c
            } else {
                c.clone()
            };
            for (kv, cv) in f(v).terms {
                out.add_term((u.clone(), kv), &(&sign * &cv));
            }
        }
        out
    }
}

impl Tensor3 {
    pub fn from_left(t2: &Tensor2, f: impl Fn(&Term) -> Tensor2) -> Tensor3 {
        // (f ⊗ id): expand the left factor into two.
        let mut out = Tensor3::zero();
        for ((u, v), c) in &t2.terms {
            for ((a, b), cf) in f(u).terms {
                out.add_term((a, b, v.clone()), &(c * &cf));
            }
        }
        out
    }

    pub fn from_right_signed(spec: &AlgebraSpec, t2: &Tensor2, fparity: i64, f: impl Fn(&Term) -> Tensor2) -> Tensor3 {
        // (id ⊗ f) with the Koszul sign (-1)^{deg u · |f|}.
        let mut out = Tensor3::zero();
        for ((u, v), c) in &t2.terms {
            let du = Chain::term_degree(spec, u);
            let sign = if (du * fparity).rem_euclid(2) == 1 {
                -c
            } else {
                c.clone()
            };
            for ((a, b), cf) in f(v).terms {
                out.add_term((u.clone(), a, b), &(&sign * &cf));
            }
        }
        out
    }
}
