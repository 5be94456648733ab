//! Finite evaluation windows.
//!
//! The weight (exponent) grading makes every operation in this crate
//! weight-homogeneous, so each (degree, weight) block of each complex is a
//! finite free module once letter exponents and generator indices are
//! bounded. The window carries those bounds. Operations never truncate:
//! they compute exact values, and the window is only consulted when a
//! statement quantifies over a block ("closed", "exact", "equal as
//! cochains"). Enumerations refuse to certify blocks that the bounds do
//! not provably cover.

use super::{Term, Word};
use crate::algebra::{AlgebraSpec, BimoduleKind, Gen};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WindowError {
    #[error("unsafe block (degree {degree}, weight {weight}): {reason}")]
    UnsafeBlock {
        degree: i64,
        weight: i64,
        reason: String,
    },
}

/// Evaluation window: maximum bar-word length, weight range for tabulated
/// blocks, and the exponent bound for letters and generator indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub max_len: usize,
    pub w_min: i64,
    pub w_max: i64,
    pub max_exp: i64,
}

impl Window {
    pub fn new(max_len: usize, w_min: i64, w_max: i64, max_exp: i64) -> Self {
        assert!(max_exp >= 1);
        Window {
            max_len,
            w_min,
            w_max,
            max_exp,
        }
    }

    /// Letter exponents admitted by the window.
    pub fn letter_range(&self, spec: &AlgebraSpec) -> Vec<i64> {
        if spec.is_laurent() {
            (-self.max_exp..=self.max_exp).filter(|&e| e != 0).collect()
        } else {
            (1..=self.max_exp).collect()
        }
    }

    /// All normalized words of length <= `max_len` with letters in range.
    pub fn words(&self, spec: &AlgebraSpec) -> Vec<Word> {
        let letters = self.letter_range(spec);
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Vec::<i64>::new()];
        for _ in 0..self.max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for &e in &letters {
                    let mut v = w.clone();
                    v.push(e);
                    out.push(Word(v.clone()));
                    next.push(v);
                }
            }
            frontier = next;
        }
        out
    }

    /// Words of exactly the given length.
    pub fn words_of_len(&self, spec: &AlgebraSpec, len: usize) -> Vec<Word> {
        self.words(spec).into_iter().filter(|w| w.len() == len).collect()
    }

    /// Module generators of a bimodule admitted by the window.
    pub fn gens(&self, spec: &AlgebraSpec, kind: BimoduleKind) -> Vec<Gen> {
        let b = self.max_exp;
        let idx: Vec<i64> = if spec.is_laurent() {
            (-b..=b).collect()
        } else {
            (0..=b).collect()
        };
        match kind {
            BimoduleKind::Diagonal => idx.iter().map(|&k| Gen::T(k)).collect(),
            BimoduleKind::Dual => idx.iter().map(|&k| Gen::S(k)).collect(),
            BimoduleKind::InverseDualizing => {
                let mut v = Vec::new();
                for &k in &idx {
                    for &l in &idx {
                        v.push(Gen::R(k, l));
                        v.push(Gen::Sb(k, l));
                    }
                }
                v
            }
            BimoduleKind::Cone => {
                let mut v: Vec<Gen> = idx.iter().map(|&k| Gen::S(k)).collect();
                v.extend(idx.iter().map(|&k| Gen::T(k)));
                v
            }
        }
    }

    /// Basis of the (degree, weight) block of the chain complex with the
    /// given coefficients, in deterministic order.
    pub fn block_basis(&self, spec: &AlgebraSpec, kind: BimoduleKind, degree: i64, weight: i64) -> Vec<Term> {
        let mut out = Vec::new();
        for g in self.gens(spec, kind) {
            for w in self.words(spec) {
                let t = (g, w);
                if super::Chain::term_degree(spec, &t) == degree && super::Chain::term_weight(spec, &t) == weight {
                    out.push(t);
                }
            }
        }
        out.sort();
        out
    }

    /// True when the window bounds provably enumerate the whole
    /// (degree, weight) block for diagonal coefficients of a polynomial
    /// family; used before asserting homology tables.
    pub fn complete_diagonal_block(&self, spec: &AlgebraSpec, degree: i64, weight: i64) -> Result<(), WindowError> {
        if spec.is_laurent() {
            // Laurent blocks are infinite in principle; all statements are
            // window-relative there.
            return Err(WindowError::UnsafeBlock {
                degree,
                weight,
                reason: "Laurent blocks are only enumerated within the window".into(),
            });
        }
        let d = spec.deg_t();
        // degree = d*weight + length for diagonal coefficients.
        let len = degree - d * weight;
        if len < 0 || len as usize > self.max_len {
            return Err(WindowError::UnsafeBlock {
                degree,
                weight,
                reason: format!("implied bar length {len} outside window length {}", self.max_len),
            });
        }
        if weight < 0 || weight > self.max_exp {
            return Err(WindowError::UnsafeBlock {
                degree,
                weight,
                reason: format!("weight outside exponent bound {}", self.max_exp),
            });
        }
        Ok(())
    }

    /// Safe input bound: chains whose exponents are below this survive one
    /// application of any window operation without leaving `max_exp`.
    pub fn safe_exp(&self) -> i64 {
        (self.max_exp / (self.max_len.max(1) as i64)).max(1)
    }
}
