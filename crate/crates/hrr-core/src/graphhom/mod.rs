//! Graph homology of Jacobi diagrams.
//!
//! A Jacobi diagram is a vertex-oriented graph whose vertices are all
//! univalent ("legs") or trivalent; its degree is the number of
//! vertices. The graph homology space is spanned by such diagrams
//! modulo the antisymmetry relation (reversing the cyclic order at one
//! trivalent vertex negates the class) and the IHX relation. This
//! module provides:
//!
//! * exact diagram combinatorics with sign-tracked canonical forms,
//! * the glueing operators: disjoint union, the degree-lowering
//!   operator obtained by glueing leg pairs, its bilinear companion,
//!   and the full leg pairing into trivalent diagrams,
//! * per-bidegree quotient bases computed by exact elimination of the
//!   IHX relations, with an on-disk cache,
//! * the eigenvector element built from modified Bernoulli numbers and
//!   even wheels, and the verification of its eigenvalue equation,
//! * the polynomial image of double wheels in a symmetric cube of
//!   formal variables, together with the Bernoulli identity it
//!   satisfies.

mod canonical;
mod diagram;
mod identities;
mod omega;
mod quotient;
mod vector;
mod wheelpoly;

pub use canonical::{canonicalize, CanonicalDiagram};
pub use diagram::JacobiDiagram;
pub use identities::{
    verify_exp_partial_pairing, verify_strut_pairing_adjunction, verify_wheel_laws, IdentityReport,
};
pub use omega::{omega_component, omega_mu, omega_mu_polynomials, verify_omega_eigen, OmegaDefect};
pub use quotient::{BasisContext, QuotientBasis, DEFAULT_DEGREE_CAP};
pub use vector::GraphVector;
pub use wheelpoly::{lemma_bernoulli_defect, p_map, wheel_expansion_pmap_defect, Sym3Poly};

use std::fmt;

/// Errors arising from diagram combinatorics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// A diagram failed its structural well-formedness checks.
    Malformed(String),
    /// Glueing was asked to act on the two legs of a single strut
    /// component, which is not defined.
    GlueWithinStrut,
    /// Glueing needs two distinct univalent vertices.
    GlueNeedsDistinctLegs(usize, usize),
    /// The operand must not contain a strut (two joined legs)
    /// component.
    StrutComponentPresent,
    /// The leg pairing needs at least one strut-free argument.
    BothArgumentsHaveStruts,
    /// A quotient basis beyond the configured degree cap was requested.
    DegreeCapExceeded { degree: usize, cap: usize },
    /// A diagram did not belong to the bidegree of the basis it was
    /// reduced against.
    BidegreeMismatch,
    /// The basis cache directory could not be read or written.
    Cache(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::Malformed(what) => write!(f, "malformed Jacobi diagram: {what}"),
            GraphError::GlueWithinStrut => {
                write!(f, "cannot glue the two legs of a single strut component")
            }
            GraphError::GlueNeedsDistinctLegs(a, b) => {
                write!(
                    f,
                    "glueing needs two distinct univalent vertices, got {a} and {b}"
                )
            }
            GraphError::StrutComponentPresent => {
                write!(f, "operand contains a strut component")
            }
            GraphError::BothArgumentsHaveStruts => {
                write!(f, "leg pairing needs at least one strut-free argument")
            }
            GraphError::DegreeCapExceeded { degree, cap } => {
                write!(f, "degree {degree} exceeds the configured cap {cap}")
            }
            GraphError::BidegreeMismatch => {
                write!(f, "diagram bidegree does not match the quotient basis")
            }
            GraphError::Cache(what) => write!(f, "basis cache: {what}"),
        }
    }
}

impl std::error::Error for GraphError {}
