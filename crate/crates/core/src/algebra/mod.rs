//! Exact polynomial arithmetic over ℚ(i) and graded exterior forms.

pub mod form;
pub mod gauss;
pub mod gcd;
pub mod json;
pub mod linalg;
pub mod monomial;
pub mod poly;

pub use form::{BiPoly, ExteriorForm, MAX_FORM_DEGREE};
pub use gauss::GaussRational;
pub use monomial::ExponentVector;
pub use poly::Poly;
