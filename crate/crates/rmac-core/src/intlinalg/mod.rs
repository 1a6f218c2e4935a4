//! Exact integer linear algebra: matrices, Smith normal form, finitely
//! generated abelian groups, chain-complex homology and characteristic
//! polynomials.
//!
//! Everything here is exact: no floating point, no unchecked machine
//! overflow. Hot paths run on checked `i128` arithmetic and retry with big
//! integers when needed.

pub mod group;
pub mod homology;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use group::FGAbelianGroup;
pub use homology::{chain_homology, complex_homology, induced_map_on_homology};
pub use matrix::IntMatrix;
pub use poly::{charpoly, charpoly_finite_order, cyclotomic, FiniteOrderCharpoly, IntPoly};
pub use snf::{rank, smith_normal_form, SnfResult};
