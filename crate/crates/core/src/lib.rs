//! Exact Clebsch–Gordan decompositions and Green-ring arithmetic for the
//! tensor categories of locally nilpotent representations of minimal Hopf
//! quivers: the cyclic quiver on `n` vertices and the infinite linear quiver.
//!
//! The crate is organised bottom-up:
//!
//! - [`scalar`]: exact arithmetic over `Q` and cyclotomic fields `Q(ζ_N)`,
//!   q-integers and Gaussian binomials.
//! - [`quiver`]: quiver contexts, the graded Hopf product on paths and the
//!   path coproduct.
//! - [`comodule`]: the indecomposables `V(i,l)`, tensor products as explicit
//!   quiver representations, and the comodule/dual-module structure maps.
//! - [`oracle`]: a brute-force Krull–Schmidt decomposition of any locally
//!   nilpotent representation via exact ranks of path maps.
//! - [`clebsch_gordan`]: closed-form decompositions of `V(i,l) ⊗ V(j,m)`.
//! - [`green`]: Green-ring arithmetic and the polynomial presentations.
//!
//! Everything is exact; there is no floating point anywhere. The crate is
//! `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod clebsch_gordan;
pub mod comodule;
pub mod error;
pub mod green;
pub mod matrix;
pub mod oracle;
pub mod quiver;
pub mod report;
pub mod scalar;

pub use clebsch_gordan::{decompose_closed, normalize_pair, CgCase, NormalizedPair, RootCase};
pub use comodule::{
    comodule_delta, indecomposable_rep, tensor_rep, Indecomposable, QuiverRep, TensorBasisVector,
    TensorProduct,
};
pub use error::{Error, Result};
pub use green::{
    basis_poly, evaluate, fib2, fib2_closed, fib3, fib_identity_check, fib_identity_literal,
    fib_product_identity, from_poly, gr_mul, poly_divides, ring_tag, to_poly, verify_presentation,
    GreenElement, Monomial, MonomialOrder, PresentedPoly, RingTag,
};
pub use matrix::Matrix;
pub use oracle::{decompose_rep, path_rank, Decomposition, RankProfile};
pub use quiver::{
    check_presentation, coproduct, counit, path_mul, PathIndex, QuiverContext, QuiverKind,
    ScaledPath,
};
pub use report::Report;
pub use scalar::{
    q_binomial, q_binomial_vanishes, q_int, CyclotomicField, QSpec, Rational, ScalarField,
    ScalarValue,
};
