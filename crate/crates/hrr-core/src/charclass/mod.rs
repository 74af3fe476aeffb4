//! The graded Chern-class algebra of an irreducible symplectic
//! manifold and the multiplicative-genus machinery on it.
//!
//! On a manifold of complex dimension 2n with vanishing odd Chern
//! data, the even Chern classes c_2, c_4, ..., c_{2n} generate the
//! relevant part of the cohomology ring; everything here works in the
//! polynomial algebra they span, graded by half the cohomological
//! degree and truncated above the top weight. Power sums of Chern
//! roots are converted to Chern classes through Newton's identities
//! with the odd elementary symmetric functions set to zero.

mod chern;
mod genus;

pub use chern::{ChernMonomial, ChernPolynomial, SymFuncContext};
pub use genus::{
    chi_y_integrand, genus_from_series, integrate, sqrt_todd, todd_deformed, todd_series,
    todd_symplectic, LambdaSeries, YPolynomial,
};

use std::fmt;

/// Errors from the Chern-class computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharClassError {
    /// A genus expansion needs a series with constant term one.
    ConstantTermNotOne,
    /// A power sum beyond the truncation weight was requested.
    WeightOverflow { requested: usize, cap: usize },
    /// Integration found a top-weight monomial without an assigned
    /// value.
    MissingMonomialValue(String),
}

impl fmt::Display for CharClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharClassError::ConstantTermNotOne => {
                write!(f, "genus expansion requires constant term one")
            }
            CharClassError::WeightOverflow { requested, cap } => {
                write!(f, "weight {requested} exceeds the truncation weight {cap}")
            }
            CharClassError::MissingMonomialValue(m) => {
                write!(f, "no value assigned to top-weight monomial {m}")
            }
        }
    }
}

impl std::error::Error for CharClassError {}
