//! Exact-arithmetic tools for subspaces of multipartite systems whose states
//! all have entanglement depth at least `k`.
//!
//! Everything is generic over an exact [`Field`]; the aliases below fix it to
//! arbitrary-precision rationals.

pub mod bounds;
pub mod catalog;
pub mod construction;
pub mod error;
pub mod io;
pub mod linalg;
pub mod product;
pub mod scalar;
pub mod unextendibility;

pub use bounds::{Composition, Scenario};
pub use construction::{build_kces, KcesResult};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use product::{Partition, ProductSet, ProductVector, SubspaceBasis};
pub use scalar::{Field, Rational};
pub use unextendibility::{verify_level, Outcome, Verdict, Witness};

pub type RMatrix = Matrix<Rational>;
pub type RVector = Vec<Rational>;
pub type RProductVector = ProductVector<Rational>;
pub type RProductSet = ProductSet<Rational>;
pub type RSubspaceBasis = SubspaceBasis<Rational>;
pub type RWitness = Witness<Rational>;
pub type RKcesResult = KcesResult<Rational>;
