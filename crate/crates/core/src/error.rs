use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// The pair (a, abar) is not on the half-integer lattice a - abar in Z/2.
    #[error("difference a - abar = {diff} is {dist:.3e} away from the nearest half-integer")]
    NotDoubleIndex { diff: f64, dist: f64 },

    /// A double power [z]^a with a - abar not an integer is multivalued.
    #[error("double power requires a - abar in Z, got {diff}")]
    FractionalWinding { diff: f64 },

    /// [0]^a with Re(a + abar) <= 0.
    #[error("double power of zero with non-positive modulus exponent {mod_re}")]
    ZeroBase { mod_re: f64 },

    /// Gamma of the complex field evaluated at a pole.
    #[error("gamma pole of order {order} at {what}")]
    GammaPole { order: u32, what: String },

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),
}
