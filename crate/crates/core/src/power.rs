use crate::{Complex, CoreError, DoubleIndex, Result, ScaledComplex};
use std::f64::consts::PI;

fn principal_arg(z: Complex) -> f64 {
    // arg in (-pi, pi]: the negative real axis gets +pi regardless of the
    // sign of the (zero) imaginary part.
    if z.im == 0.0 && z.re < 0.0 {
        return PI;
    }
    z.arg()
}

/// The double power [z]^a = |z|^(a + abar) exp(i (a - abar) arg z), single
/// valued on the punctured plane because a - abar is an integer.
pub fn dpow(z: Complex, a: DoubleIndex) -> Result<Complex> {
    Ok(dpow_scaled(z, a)?.to_complex())
}

/// Same as [`dpow`] but in log scale, for integrands with many factors.
pub fn dpow_scaled(z: Complex, a: DoubleIndex) -> Result<ScaledComplex> {
    if !a.is_integer_diff() {
        return Err(CoreError::FractionalWinding { diff: a.diff() });
    }
    if z == Complex::new(0.0, 0.0) {
        let mod_re = a.mod_exp().re;
        return if mod_re > 0.0 {
            Ok(ScaledComplex::zero())
        } else {
            Err(CoreError::ZeroBase { mod_re })
        };
    }
    let ln_r = z.norm().ln();
    let theta = principal_arg(z);
    let w = a.mod_exp() * ln_r; // complex log-magnitude contribution
    Ok(ScaledComplex::new(w.re, w.im + a.diff() * theta))
}

/// The complex conjugate of [z]^a, computed as [z]^(abar*, a*).
pub fn dpow_conj(z: Complex, a: DoubleIndex) -> Result<Complex> {
    dpow(z, a.conj_pair())
}
