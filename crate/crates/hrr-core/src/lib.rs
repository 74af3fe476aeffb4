//! Exact computation of graph homology, multiplicative genera and the
//! Chern numbers of generalized Kummer varieties.
//!
//! Everything in this crate works over the rationals with arbitrary
//! precision; there is no floating point anywhere. The main pieces:
//!
//! * [`arith`]: rationals, truncated power series, univariate
//!   polynomials, exact dense linear algebra, and the classical number
//!   sequences (Bernoulli, modified Bernoulli, Chebyshev).
//! * [`multilinear`]: the exterior algebra of a symplectic vector
//!   space and the determinant pairing on it.
//! * [`graphhom`]: Jacobi diagrams, the AS/IHX quotient spaces, the
//!   glueing operators and the eigenvector element built from modified
//!   Bernoulli numbers.
//! * [`charclass`]: the graded Chern-class algebra, Todd-type genera
//!   and their one-parameter deformation, and the chi_y integrand.
//! * [`kummer`]: Euler characteristics of line bundles on generalized
//!   Kummer varieties, the induced linear relations between Chern
//!   numbers, and the exact solver for them.

pub mod arith;
pub mod charclass;
pub mod graphhom;
pub mod kummer;
pub mod multilinear;
