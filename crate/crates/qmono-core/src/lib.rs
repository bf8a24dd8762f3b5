//! Exact symbolic engine for U(1) monopole bundles over the standard
//! Podles sphere.
//!
//! The crate implements, over the exact coefficient field Q(s) with
//! s = q^{1/2}:
//!
//! * [`scalars`]: Laurent polynomials and rational functions in s,
//!   q-integers, evaluation and classical (q -> 1) limits.
//! * [`algebra`]: the quantum group A(SU_q(2)) in normal form, with star
//!   structure, Hopf structure (coproduct, counit, antipode), the U(1)
//!   coaction, and the Podles sphere subalgebra A(S^2_q).
//! * [`actions`]: the Hopf algebra U_q(su(2)), its left and right module
//!   algebra actions on A(SU_q(2)), and the quadratic Casimir.
//! * [`linalg`]: exact dense linear algebra over the scalar field (rank,
//!   kernels, linear solving) used for independence and derivations.
//! * [`sphere`]: the Peter-Weyl style decomposition of the equivariant
//!   line modules L_n into spin-J blocks.
//! * [`bundles`]: the line-bundle projections p^(n), module frames, and
//!   the section/equivariant-map correspondence.
//! * [`calculus`]: the left covariant 3D calculus on A(SU_q(2)), its
//!   restriction to the 2D calculus on the sphere, the U(1) calculus,
//!   and the Hodge operator.
//! * [`gauge`]: the monopole connection, its curvature, the gauged
//!   Laplacian and its exact spectrum.
//! * [`traces`]: the Haar state, the twisted cyclic 2-cocycle, quantum
//!   traces and winding numbers.
//! * [`fuzz`]: deterministic seeded generators for randomized identity
//!   checking.
//!
//! All identities are verified by exact symbolic computation; nothing is
//! checked numerically or approximately.

pub mod scalars;

pub mod algebra;

pub mod actions;

pub mod linalg;

pub mod sphere;

pub mod bundles;

pub mod calculus;

pub mod gauge;

pub mod traces;

pub mod fuzz;

pub use scalars::{qnum, qnum2, LaurentPoly, NumericError, Scalar};
