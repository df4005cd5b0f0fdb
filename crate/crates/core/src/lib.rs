//! Exact arithmetic on double indices, single-valued double powers, the
//! gamma function of the complex field, and the model parametrizations of
//! the open SL(2,C) spin chain with one site.
//!
//! A "double index" is a pair (a, abar) of complex exponents whose
//! difference is a half-integer; every power and gamma argument in the
//! model is one of these. The gamma function of the complex field is the
//! ratio `Gamma(a) / Gamma(1 - abar)`, kept in log scale so that products
//! of many factors survive large imaginary parts.

mod double_index;
mod error;
mod gamma;
mod params;
mod power;
mod scaled;

pub use double_index::DoubleIndex;
pub use error::CoreError;
pub use gamma::{gamma_cf, gamma_product, lgamma, minus_one_pow, GammaCf, GammaProduct};
pub use params::{ModelParams, Sigma, SpectralParam};
pub use power::{dpow, dpow_conj, dpow_scaled};
pub use scaled::ScaledComplex;

pub type Complex = num_complex::Complex64;

pub type Result<T> = std::result::Result<T, CoreError>;
