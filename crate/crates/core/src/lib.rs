//! Trigonometric interpolation and cubature on the face-centered cubic lattice.
//!
//! Functions periodic under the lattice `ℤ³ A` (with `A` the fcc generator)
//! are handled in four homogeneous coordinates `t` with `t1 + t2 + t3 + t4 = 0`.
//! A fundamental domain is the rhombic dodecahedron `Ω_H`, and the functions
//! invariant under the 24 coordinate permutations live on a tetrahedron.

pub mod boundary;
pub mod error;
pub mod index_sets;
pub mod interpolation;
pub mod kernels;
pub mod lattice;
pub mod numeric;
pub mod symmetry;
pub mod tetra_coords;
pub mod transforms;
pub mod trig_basis;

pub use error::{Error, Result};
pub use interpolation::{InterpKind, Interpolant};
pub use lattice::{HIndex, HomoPoint, Point3};
pub use num_complex::Complex64;
pub use num_rational::Ratio;
pub use symmetry::Perm4;
pub use transforms::SampleFunction;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/lattice.md")]
mod book_lattice {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/node_sets.md")]
mod book_node_sets {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/symmetric_basis.md")]
mod book_symmetric_basis {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/kernels.md")]
mod book_kernels {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cubature.md")]
mod book_cubature {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/interpolation.md")]
mod book_interpolation {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
