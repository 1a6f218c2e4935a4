//! Exact integer topology of real moment-angle complexes over polygons.
//!
//! For a simplicial complex `K` on `m` vertices, the real moment-angle
//! complex `R_K` is the subcomplex of the cube `[-1, 1]^m` formed by the
//! cells that are free exactly on a face of `K`. When `K` is the boundary
//! of an `n`-gon, `R_K` is a closed orientable surface of genus
//! `1 + (n-4) * 2^(n-3)` carrying a natural rotation action of the cyclic
//! group `Z/n`.
//!
//! This crate computes, with exact integer arithmetic throughout:
//!
//! * cellular chain complexes of `R_K` and of the cubical cone over `K`,
//!   their homology and orientability ([`cellcomplex`]);
//! * Smith normal forms, homology groups and functorially induced maps
//!   ([`intlinalg`]);
//! * the rotation action on `H_1`, its decomposition into induced and
//!   regular summands indexed by binary Lyndon words ([`words`],
//!   [`modrep`]);
//! * genus and quotient-genus closed forms with a Riemann–Hurwitz audit
//!   ([`polygon`]);
//! * the second page of the homology spectral sequence of the Borel
//!   construction, assembled from cyclic group homology ([`spectral`]);
//! * plain simplicial-complex utilities: subcomplexes, barycentric
//!   subdivision, automorphisms, sphere detection ([`simplicial`]).
//!
//! The crate is the computational core behind the `rmac` command-line
//! tool. All public entry points return [`error::Result`]; internal
//! consistency is re-verified at run time (Smith transforms, boundary
//! squares, independently derived counts) so that a wrong answer is
//! reported as an error instead of being returned.

pub(crate) mod arith;
pub mod cellcomplex;
pub mod error;
pub mod intlinalg;
pub mod modrep;
pub mod polygon;
pub mod simplicial;
pub mod spectral;
pub mod words;

pub use error::{Error, Result};
pub use intlinalg::{FGAbelianGroup, IntMatrix, IntPoly, SnfResult};
