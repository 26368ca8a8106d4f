//! Exact decision of `L(1,f) = 0` for rational periodic `f`.

mod criterion;
mod epsilon;
mod kernel;
mod weights;

pub use criterion::{
    condition_a, condition_b, decide_batch, decide_vanishing, theorem3_log_condition, theorem4_details,
    theorem4_equivalence_check, LogCoefficientCheck, Route, VanishingCertificate,
};
pub use epsilon::{epsilon, lemma1_bruteforce, EpsilonTable};
pub use kernel::{kernel_basis, vanishing_conditions};
pub use weights::{residue_weight_system, ResidueWeightSystem, MAX_WEIGHT_MODULUS};
