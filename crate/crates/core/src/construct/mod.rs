//! Constructions attached to a sequence `η: κ(A) ↪ F ↠ G` of `Σ`-diagrams and
//! the comparison maps between Ext spaces of the base and of diagrams.

mod extmaps;
mod star;

pub use extmaps::{
    canonical_restriction, duality_matrix, kappa_ses, phi, phi_by_duality, psi, psi_well_defined, xi_theta, ExtMap,
    PhiDualityCheck, XiTheta,
};
pub use star::{
    extend_over_star, star_diagrams, verify_colim_star, z_eta, ColimStarCheck, ConstEta, Extended, ZEtaData,
};
