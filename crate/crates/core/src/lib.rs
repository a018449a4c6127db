//! Exact q-expansion toolkit for weight-2 modular forms on `Γ0(48)` and the
//! representation numbers of the quaternary forms
//! `a1 x1² + a2 x2² + a3 x3² + a4 x4²`,
//! `b1 (x1² + x1x2 + x2²) + b2 (x3² + x3x4 + x4²)` and
//! `a1 x1² + a2 x2² + b1 (x3² + x3x4 + x4²)`.
//!
//! All arithmetic is over ℚ; nothing is approximated.

pub mod basis;
pub mod characters;
pub mod decompose;
pub mod eisenstein;
pub mod error;
pub mod eta;
pub mod exact_arith;
pub mod formulas;
pub mod linalg;
pub mod oracle;
pub mod qseries;
pub mod report;
pub mod tables;
pub mod theta;

pub use characters::{kronecker_symbol, DirichletCharacter};
pub use decompose::{decompose, decompose_form, Decomposition};
pub use error::{Error, Result};
pub use exact_arith::Rational;
pub use qseries::QSeries;
pub use theta::{QuadForm, Space};
