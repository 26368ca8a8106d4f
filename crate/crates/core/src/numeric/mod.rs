//! Certified arbitrary-precision numerics.
//!
//! Nothing in this module ever declares a value to be exactly zero: a ball
//! containing zero only says that zero has not been excluded.

pub mod ball;
pub mod bernoulli;
pub mod checks;
pub mod complex;
pub mod digamma;
pub mod elementary;
pub mod gamma;
pub mod hurwitz;
pub mod lvalue;

pub use ball::Ball;
pub use checks::{lemma4_check, lemma4_sweep, murty_g, murty_g_identity, Lemma4Result, MurtyCheck};
pub use complex::ComplexBall;
pub use digamma::{digamma, digamma_by_series, digamma_fractions};
pub use elementary::{ln, ln2, ln_int, ln_rational, pi};
pub use gamma::{euler_gamma, euler_gamma_brent_mcmillan};
pub use hurwitz::{hurwitz_constant_term, hurwitz_zeta};
pub use lvalue::{
    embed, l_one, l_one_cyclotomic, l_one_fourier, l_s, log_one_minus_zeta, log_one_minus_zeta_table,
    EvalReport, Method,
};
