//! Exact arithmetic in cyclotomic fields and the product criterion.

mod field;
mod fourier;
mod poly;
mod theorem1;

pub use field::{CyclotomicElement, CyclotomicField, MAX_FIELD_MODULUS};
pub use fourier::{coefficient_matrix, fourier_inverse, fourier_transform, FourierCoefficients};
pub use poly::cyclotomic_polynomial;
pub use theorem1::{theorem1_decide, theorem1_decide_with, ProductCheck, Theorem1Options, Theorem1Outcome};
