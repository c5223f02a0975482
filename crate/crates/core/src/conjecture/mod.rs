//! Projective degrees of the gradient maps of the secant hypersurfaces
//! `Sec_r C`, via the interpolation algorithm, its closed forms and the
//! surrounding combinatorics.

mod algorithm;
mod closed_form;
mod dyck;
mod generating;
mod properties;

pub use algorithm::{aluffi_c_from_d, aluffi_d_from_c, run_algorithm, InvariantTable};
pub use closed_form::{alt_form_c, closed_form_c, closed_form_d, recursion_d};
pub use dyck::{dyck_t, dyck_table, kl_reversal_check, DyckTable};
pub use generating::{
    central_square_series, f_by_coefficients, f_by_sqrt, g_by_catalan, g_by_sqrt, generating_f, generating_g,
    generating_w, h_closed, narayana, narayana_series, p_series, q_poly,
};
pub use properties::{property_suite, Failure, PropertyReport};

/// Rows from this index on are not backed by a direct computation of the
/// projective degrees.
pub const FIRST_CONJECTURAL_ROW: usize = 6;
