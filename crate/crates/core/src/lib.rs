//! Exact-arithmetic computational engine for chain-level algebraic string
//! topology of graded monomial algebras.
//!
//! The crate computes Hochschild homology of the algebras `k[t]` (generator
//! in any positive degree) and `k[t^{±1}]` (generator in degree zero) over
//! `Z`, `Q` and prime fields, together with the chain-level operations built
//! on top of them: cap and cup products, the chain-level Chern character of
//! the diagonal bimodule, the loop product and loop coproduct, the cone
//! bimodule product and its lift to a dual product, and a family of
//! exactness certificates that decide "homologous" claims by solving for an
//! explicit primitive inside a finite (degree, weight) block.
//!
//! Everything is exact: integers are arbitrary precision, rationals are
//! reduced fractions, and prime fields are represented canonically. No
//! floating point is used anywhere.

pub mod algebra;
pub mod cone;
pub mod hochschild;
pub mod linalg;
pub mod ops;
pub mod precy;
pub mod report;

pub use algebra::{AlgebraSpec, Family};
pub use linalg::{HomologySummary, Ring, Scalar, SparseMatrix};
