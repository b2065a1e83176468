//! Standard bases in the local ring at the origin, Milnor numbers and
//! monomial bases of local algebras.

mod milnor;
mod mora;
mod order;

pub use milnor::{
    is_isolated_singularity, jacobian_standard_basis, local_algebra_basis, milnor_number, quotient_dimension,
    LocalAlgebraBasis, MilnorNumber,
};
pub use mora::{mora_normal_form, standard_basis, weak_normal_form, Limits, StandardBasis};
pub use order::LocalOrder;
