//! Exact constructions and checks for three finite free resolutions with
//! Betti numbers (2,6,5,1) over bigraded polynomial rings.
//!
//! The crate builds each resolution twice — once from printed matrices, once
//! from coordinate-free multilinear-algebra formulas — and verifies that the
//! two routes agree, that every differential squares to zero, that the
//! specialization maps between the three families commute with the
//! differentials, and that the linkage construction recovers the generic
//! resolution from the most specialized one.  All arithmetic is exact:
//! arbitrary-precision integers and rationals, never floating point.
//!
//! Module map:
//! * [`ring`] — sparse multivariate polynomials over ℤ, ℤ[1/2], or ℚ with
//!   bidegree bookkeeping and ring homomorphisms,
//! * [`matrix`] — matrices of polynomials and exact rational linear algebra,
//! * [`exterior`] — exterior algebra of a based free module: wedge,
//!   contraction, canonical elements, exterior powers of maps,
//! * [`complexes`] — finite free complexes, chain maps, duals, cones, tensor
//!   products, split-summand removal with certificates,
//! * [`resolutions`] — the three resolutions Q, M, B plus auxiliary complexes,
//! * [`specializations`] — the maps μ, Φ, Ψ and their verification,
//! * [`linkage`] — Koszul complexes, the comparison map, and the round trip
//!   that links B back to Q,
//! * [`certify`] — graded ideal membership, random-point exactness evidence,
//!   and a small Gröbner-basis engine for codimension certificates,
//! * [`cli`] — the `build` / `verify` / `report` command-line surface.

pub mod certify;
pub mod cli;
pub mod complexes;
pub mod exterior;
pub mod linkage;
pub mod matrix;
pub mod resolutions;
pub mod ring;
pub mod sampling;
pub mod specializations;

pub use ring::{Bidegree, CoefficientDomain, PolyRing, Polynomial, RingMap};
