//! Monomial ideals, simplicial complexes, and their homological invariants.

pub mod acm_simplicial;
pub mod betti;
pub mod bits;
pub mod error;
pub mod families;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod polymatroidal;
pub mod simplicial;
pub mod text;
pub mod validate;

pub use betti::BettiTable;
pub use error::{Error, Result};
pub use homology::HomologyProfile;
pub use invariants::InvariantReport;
pub use linalg::Field;
pub use monomial::{Monomial, MonomialIdeal, MonomialPrime, Polarization};
pub use simplicial::SimplicialComplex;
