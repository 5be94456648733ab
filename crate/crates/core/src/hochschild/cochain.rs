//! Lazily evaluated Hochschild cochains and two-output cochains.

use super::{Window, Word};
use crate::algebra::{AlgebraSpec, Gen};
use crate::linalg::Scalar;
use std::collections::BTreeMap;
use std::rc::Rc;

/// A finite bimodule element: generators with coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenSum {
    terms: BTreeMap<Gen, Scalar>,
}

impl GenSum {
    pub fn zero() -> Self {
        GenSum {
            terms: BTreeMap::new(),
        }
    }

    pub fn of(spec: &AlgebraSpec, g: Gen, c: i64) -> Self {
        let mut s = Self::zero();
        s.add(g, &spec.scalar(c));
        s
    }

    pub fn single(g: Gen, c: Scalar) -> Self {
        let mut s = Self::zero();
        s.add(g, &c);
        s
    }

    pub fn add(&mut self, g: Gen, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&g) {
            Some(old) => &old + c,
            None => c.clone(),
        };
        if v.is_zero() {
            self.terms.remove(&g);
        } else {
            self.terms.insert(g, v);
        }
    }

    pub fn add_sum(&mut self, other: &GenSum) {
        for (g, c) in &other.terms {
            self.add(*g, c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> GenSum {
        let mut out = GenSum::zero();
        for (g, v) in &self.terms {
            out.add(*g, &(c * v));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Gen, &Scalar)> {
        self.terms.iter()
    }

    /// Coefficient of a generator.
    pub fn coeff(&self, g: Gen) -> Option<&Scalar> {
        self.terms.get(&g)
    }
}

type EvalFn = dyn Fn(&Word) -> GenSum;

/// A Hochschild cochain as a rule from bar words to bimodule elements,
/// with homogeneity metadata. Rules are immutable and cheaply clonable.
#[derive(Clone)]
pub struct CochainRule {
    spec: AlgebraSpec,
    deg: i64,
    wshift: i64,
    max_len: usize,
    eval: Rc<EvalFn>,
}

impl std::fmt::Debug for CochainRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CochainRule(deg {}, wshift {})", self.deg, self.wshift)
    }
}

impl CochainRule {
    pub fn from_fn(
        spec: AlgebraSpec,
        deg: i64,
        wshift: i64,
        max_len: usize,
        eval: impl Fn(&Word) -> GenSum + 'static,
    ) -> Self {
        CochainRule {
            spec,
            deg,
            wshift,
            max_len,
            eval: Rc::new(eval),
        }
    }

    /// The zero cochain of the given homogeneity.
    pub fn zero(spec: AlgebraSpec, deg: i64, wshift: i64) -> Self {
        Self::from_fn(spec, deg, wshift, 0, |_| GenSum::zero())
    }

    /// The unit cochain `1 ∈ C^0`: empty word to the unit monomial.
    pub fn unit(spec: AlgebraSpec) -> Self {
        let ring = spec.ring;
        Self::from_fn(spec, 0, 0, 0, move |w| {
            if w.is_empty() {
                GenSum::single(Gen::T(0), Scalar::from_i64(ring, 1))
            } else {
                GenSum::zero()
            }
        })
    }

    /// The length-zero cochain sending the empty word to `t^k`.
    pub fn const_mono(spec: AlgebraSpec, k: i64) -> Self {
        let deg = spec.mono_degree(k);
        let ring = spec.ring;
        Self::from_fn(spec, deg, k, 0, move |w| {
            if w.is_empty() {
                GenSum::single(Gen::T(k), Scalar::from_i64(ring, 1))
            } else {
                GenSum::zero()
            }
        })
    }

    /// The length-one cochain `Σ_i f(i)·s_i ∂^{i+shift}`-style derivation:
    /// sends `[t^i]` to `f(i) · t^{i+shift}` and other words to zero.
    pub fn derivation(spec: AlgebraSpec, shift: i64, f: impl Fn(i64) -> i64 + 'static) -> Self {
        let deg = spec.mono_degree(shift) - 1;
        let sp = spec.clone();
        Self::from_fn(spec, deg, shift, 1, move |w| {
            if w.len() != 1 {
                return GenSum::zero();
            }
            let i = w.0[0];
            let g = Gen::T(i + shift);
            if !g.in_family(&sp) {
                return GenSum::zero();
            }
            GenSum::single(g, sp.scalar(f(i)))
        })
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    pub fn wshift(&self) -> i64 {
        self.wshift
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn eval(&self, w: &Word) -> GenSum {
        if w.len() > self.max_len {
            return GenSum::zero();
        }
        (self.eval)(w)
    }

    pub fn add(&self, other: &CochainRule) -> CochainRule {
        // degree metadata is advisory; identically-zero summands may disagree
        let (a, b) = (self.clone(), other.clone());
        CochainRule::from_fn(
            self.spec.clone(),
            self.deg,
            self.wshift,
            self.max_len.max(other.max_len),
            move |w| {
                let mut s = a.eval(w);
                s.add_sum(&b.eval(w));
                s
            },
        )
    }

    pub fn sub(&self, other: &CochainRule) -> CochainRule {
        self.add(&other.scale(&self.spec.scalar(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> CochainRule {
        let a = self.clone();
        let c = c.clone();
        CochainRule::from_fn(self.spec.clone(), self.deg, self.wshift, self.max_len, move |w| {
            a.eval(w).scale(&c)
        })
    }

    /// Evaluation equality on every window word.
    pub fn eq_on(&self, other: &CochainRule, win: &Window) -> bool {
        for w in win.words(&self.spec) {
            if self.eval(&w) != other.eval(&w) {
                return false;
            }
        }
        true
    }

    pub fn is_zero_on(&self, win: &Window) -> bool {
        win.words(&self.spec).iter().all(|w| self.eval(w).is_zero())
    }

    /// First window word with a nonzero value, for diagnostics.
    pub fn witness_on(&self, win: &Window) -> Option<(Word, GenSum)> {
        win.words(&self.spec).into_iter().find_map(|w| {
            let v = self.eval(&w);
            if v.is_zero() {
                None
            } else {
                Some((w, v))
            }
        })
    }
}

type TwoOutFn = dyn Fn(&Word, &Word) -> Vec<(Scalar, i64, i64)>;

/// A two-output cochain: two angle words in, a sum of `A ⊗ A` monomial
/// pairs out. Houses the duality element of each family.
#[derive(Clone)]
pub struct TwoOut {
    spec: AlgebraSpec,
    /// Dimension of the duality structure this element belongs to.
    pub dim: i64,
    /// Weight shift: weight(outputs) - weight(inputs).
    pub wshift: i64,
    eval: Rc<TwoOutFn>,
}

impl TwoOut {
    pub fn from_fn(
        spec: AlgebraSpec,
        dim: i64,
        wshift: i64,
        eval: impl Fn(&Word, &Word) -> Vec<(Scalar, i64, i64)> + 'static,
    ) -> Self {
        TwoOut {
            spec,
            dim,
            wshift,
            eval: Rc::new(eval),
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    /// Outputs on a pair of angle words. The first word sits in the angle
    /// after the first output, the second word in the other angle.
    pub fn eval(&self, first_angle: &Word, second_angle: &Word) -> Vec<(Scalar, i64, i64)> {
        (self.eval)(first_angle, second_angle)
    }
}
