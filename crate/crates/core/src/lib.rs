//! Exact-arithmetic toolkit for two-strand degenerate cyclotomic BMW
//! algebras: parameter admissibility checks, the universal admissible
//! parameters, Schur q-function identities, structure constants of the
//! algebra on its 3r^2 spanning words, and the r-dimensional module that
//! certifies the equivalences between these conditions.

pub mod admissibility;
pub mod bmw2;
pub mod error;
pub mod linalg;
pub mod params;
pub mod repn;
pub mod report;
pub mod ring;
pub mod symfun;

pub use error::{Error, Result};
pub use params::ParameterSet;
pub use report::{CheckReport, CheckRow};
pub use ring::{Field, MultiPoly, PolyRecord, RatFunc, Rational, Ring};
