//! Hom and Ext¹ in categories of representations, split tests for
//! projectivity and injectivity, and duality to the opposite category.

mod dual;
mod ext;
mod hom;

pub use dual::{dual, dual_map, dual_map_over, dual_over, dual_ses, dual_ses_over, is_injective};
pub use ext::{
    equivalence, ext1, ext_map_first, ext_map_second, pullback_ses, pushout_ses, splits, ExtClass, ExtSpace,
};
pub use hom::{
    find_retraction, find_section, free_cover, free_on, from_summands, hom_space, hom_system, is_projective,
    representable, yoneda_map, FreeCover, HomSpace, SplitTest, SplitWitness,
};
