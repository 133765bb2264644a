//! Exact linear algebra for Hankel matrices of Hilbert-type and
//! harmonic-number moment sequences.
//!
//! The library is organized in two layers. The kernel ([`rational`],
//! [`poly`], [`matrix`], [`combinatorics`], [`elimination`]) is generic
//! exact arithmetic; [`elimination`] in particular provides determinant and
//! inverse oracles that share no code with anything above them. The domain
//! layer ([`moments`], [`stieltjes`], [`closed_forms`], [`harmonic`]) builds
//! the moment sequences, the three-term-recurrence machinery behind the
//! `A D A^T` factorization of their Hankel matrices, and the closed-form
//! determinant and inverse-entry formulas, each of which is tested against
//! the oracles rather than trusted.
//!
//! All arithmetic is exact; nothing in the crate rounds. Apparent-form
//! pitfalls (formulas that look right and fail, like the unsquared variants
//! kept in [`closed_forms`]) are retained as negative controls so the test
//! suite can demonstrate the oracle actually discriminates.

pub mod closed_forms;
pub mod combinatorics;
pub mod elimination;
pub mod error;
pub mod harmonic;
pub mod matrix;
pub mod moments;
pub mod poly;
pub mod rational;
pub mod stieltjes;

pub use error::HankelError;
pub use matrix::Mat;
pub use moments::{MomentFamily, MomentKind};
pub use poly::Poly;
pub use rational::Rational;
