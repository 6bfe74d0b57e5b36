//! Geometric-algebra toolkit for a first-order fermion wave equation in the
//! five-dimensional algebra `Cl(3,2)` (two timelike directions).
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: signature-parameterised Clifford algebra engine.
//! * [`spinor`]: the `(·)±` rejection/projection split, the `Ξ` transform
//!   and the cylinder condition.
//! * [`field`] and [`wave`]: fields over five-dimensional spacetime, the
//!   free and minimally coupled wave-equation residuals, plane waves and the
//!   two admissible choices of `Γ`.
//! * [`coulomb`]: the `ζ/η/S/T` operator algebra, the terminating radial
//!   series and the closed-form hydrogen-like spectrum.
//! * [`beyond`]: what happens without the cylinder condition (induced scalar
//!   potential, self-sourced current).
//! * [`report`] and [`suite`]: machine-readable check reports and the
//!   verification suites driven by the CLI.

pub mod algebra;
pub mod beyond;
pub mod coulomb;
pub mod error;
pub mod field;
pub mod linalg;
pub mod report;
pub mod spinor;
pub mod suite;
pub mod wave;

pub use algebra::{blade_product, BasisBlade, Multivector, Signature, Spinor};
pub use error::{Error, Result};
pub use field::{Field5, FiveVector};
pub use wave::GammaChoice;
