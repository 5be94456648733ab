//! Algebra family descriptors.

use crate::linalg::Ring;
use serde::{Deserialize, Serialize};

/// The two supported monomial families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `k[t]`, basis `{t^k : k >= 0}`, generator in degree `deg_t >= 1`.
    Poly { deg_t: u32 },
    /// `k[t^{±1}]`, basis `{t^k : k in Z}`, generator in degree zero.
    Laurent,
}

/// A monomial graded algebra with a chosen coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub family: Family,
    pub ring: Ring,
}

impl AlgebraSpec {
    pub fn poly(name: &str, deg_t: u32, ring: Ring) -> Self {
        assert!(deg_t >= 1, "polynomial generator must have positive degree");
        AlgebraSpec {
            name: name.to_string(),
            family: Family::Poly { deg_t },
            ring,
        }
    }

    pub fn laurent(name: &str, ring: Ring) -> Self {
        AlgebraSpec {
            name: name.to_string(),
            family: Family::Laurent,
            ring,
        }
    }

    pub fn deg_t(&self) -> i64 {
        match self.family {
            Family::Poly { deg_t } => deg_t as i64,
            Family::Laurent => 0,
        }
    }

    pub fn is_laurent(&self) -> bool {
        matches!(self.family, Family::Laurent)
    }

    /// Calabi-Yau dimension carried by the family's duality structure.
    pub fn cy_dim(&self) -> i64 {
        self.deg_t() + 1
    }

    /// Exponents legal for a module monomial `t^k`.
    pub fn exp_in_family(&self, k: i64) -> bool {
        match self.family {
            Family::Poly { .. } => k >= 0,
            Family::Laurent => true,
        }
    }

    /// Exponents legal for a normalized bar letter `[t^k]` (unit excluded).
    pub fn letter_in_family(&self, k: i64) -> bool {
        match self.family {
            Family::Poly { .. } => k >= 1,
            Family::Laurent => k != 0,
        }
    }
}
