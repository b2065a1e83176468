//! Exact symbolic toolkit for real-analytic Levi-flat hypersurfaces in ℂⁿ.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: polynomials over ℚ(i), exterior forms, gcd.
//! * [`parser`]: text input for holomorphic and real-analytic polynomials.
//! * [`local`]: standard bases for a local order, Milnor numbers and
//!   monomial bases of local algebras.
//! * [`quasihomogeneous`]: Newton supports, weights and the
//!   semiquasihomogeneous split.
//! * [`levi`]: complexification, the Levi 1-form and the flatness test.
//! * [`normal_form`]: jets, determinacy and normal-form templates.

pub mod algebra;
pub mod error;
pub mod levi;
pub mod local;
pub mod normal_form;
pub mod parser;
pub mod quasihomogeneous;

pub use algebra::{BiPoly, ExponentVector, ExteriorForm, GaussRational, Poly};
pub use error::{Error, Result};
pub use levi::{HermitianPoly, LeviCertificate};
pub use local::{Limits, LocalAlgebraBasis, LocalOrder, MilnorNumber, StandardBasis};
pub use normal_form::NormalFormTemplate;
pub use quasihomogeneous::{NewtonSupport, SemiQhDecomposition, WeightSystem};
