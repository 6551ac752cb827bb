//! Exact-arithmetic commuting varieties over classical matrix Lie algebras.
//!
//! The crate builds the classical Lie algebras sl_n, sp_2l, so_2l, so_2l+1 as
//! explicit matrix algebras, models commuting varieties C_r(V) over a choice of
//! locus V as polynomial ideals, and computes their dimensions two independent
//! ways: reduced Groebner bases over a prime field, and point counting over
//! small finite fields. A formula catalog encodes the closed-form dimensions,
//! lower bounds and equidimensionality thresholds these computations are
//! checked against.
//!
//! All core arithmetic is exact. The linear algebra and polynomial layers are
//! generic over a [`scalar::Scalar`] ring, instantiated at rational numbers
//! for the Lie-algebra constructions, at `i64` for ideal generators, and at a
//! prime field for the Groebner and counting engines.

pub mod error;
pub mod lie;
pub mod matrix;
pub mod poly;
pub mod scalar;
// modules below are added in build order
pub mod orbit;
pub mod variety;
pub mod groebner;
pub mod count;
pub mod formulas;
pub mod engine;
pub mod suites;

pub use error::Error;
pub use scalar::{Field, Fp, Scalar};

/// Exact rational scalar used by the Lie-algebra layer.
pub type Rat = num_rational::BigRational;

/// Matrix over the rationals (basis elements, representatives, forms).
pub type QMatrix = matrix::Matrix<Rat>;

/// Matrix over a prime field (point counting, kernels mod p).
pub type FpMatrix = matrix::Matrix<Fp>;

/// Polynomial with integer coefficients (ideal generators before reduction).
pub type IntPoly = poly::Poly<i64>;

/// Polynomial over a prime field (Groebner engine).
pub type FpPoly = poly::Poly<Fp>;

/// Convenience constructor for rational scalars.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(num_bigint::BigInt::from(v))
}
