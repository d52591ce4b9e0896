//! Exact linear algebra over the rationals and prime fields.

mod field;
mod mat;

pub use field::{Field, Scalar};
pub use mat::{Echelon, Mat};
