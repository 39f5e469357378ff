//! Factorization of ideals in the coordinate ring `F_q[x, y]/(F)` of a
//! smooth affine plane curve into products of prime ideals.
//!
//! The pipeline runs in three stages, each exposed on its own:
//! [`factor::radical_decomposition`] splits an ideal by multiplicity,
//! [`factor::distinct_degree`] splits a radical ideal by residual degree,
//! and [`factor::equal_degree`] splits an equal-degree radical ideal into
//! primes with a randomized zero-divisor search. [`factor::factorize`]
//! composes them.
//!
//! Everything rests on Gröbner bases over `F_q` ([`groebner`]): an ideal of
//! the curve ring is stored as the reduced basis of its preimage in
//! `F_q[x, y]`. The [`oracle`] module is an independent brute-force
//! factorizer for small fields, based on enumerating curve points.

pub mod curve;
pub mod error;
pub mod factor;
pub mod field;
pub mod groebner;
pub mod oracle;
pub mod parse;
pub mod poly;

pub use curve::{CurveRing, ResidueRing, RingIdeal, Smoothness};
pub use error::{Error, Result};
pub use factor::{
    distinct_degree, equal_degree, equal_degree_checked, equal_degree_traced, factorize, is_prime,
    radical_decomposition, DistinctDegreeFactorization, EdfEvent, Factorization, PrimeFactor, RadicalDecomposition,
};
pub use field::{Elem, FieldElement, FieldOp, FiniteField};
pub use groebner::{buchberger, PolyIdeal, StandardMonomialBasis};
pub use oracle::{enumerate_primes, oracle_factor, oracle_factor_with, random_product, CurvePoint, FrobeniusOrbit};
pub use parse::parse_poly;
pub use poly::{squarefree_part, univar_gcd, Monomial, MonomialOrder, MultiPoly, OrderKind, PolyOp, PolyRing};
