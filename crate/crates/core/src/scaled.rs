use crate::Complex;
use std::f64::consts::PI;

/// A complex value kept as log-magnitude plus phase, so that products of
/// many gamma factors neither overflow nor lose the phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    pub ln_mag: f64,
    pub phase: f64,
}

impl ScaledComplex {
    pub fn new(ln_mag: f64, phase: f64) -> Self {
        Self { ln_mag, phase }.wrapped()
    }

    pub fn one() -> Self {
        Self { ln_mag: 0.0, phase: 0.0 }
    }

    /// Exact zero: log-magnitude -inf.
    pub fn zero() -> Self {
        Self { ln_mag: f64::NEG_INFINITY, phase: 0.0 }
    }

    pub fn is_zero(&self) -> bool {
        self.ln_mag == f64::NEG_INFINITY
    }

    pub fn from_complex(z: Complex) -> Self {
        if z == Complex::new(0.0, 0.0) {
            return Self::zero();
        }
        Self { ln_mag: z.norm().ln(), phase: z.arg() }
    }

    /// Lossy conversion back to a plain complex number.
    pub fn to_complex(&self) -> Complex {
        if self.is_zero() {
            return Complex::new(0.0, 0.0);
        }
        Complex::from_polar(self.ln_mag.exp(), self.phase)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self { ln_mag: self.ln_mag + rhs.ln_mag, phase: self.phase + rhs.phase }.wrapped()
    }

    pub fn div(&self, rhs: &Self) -> Self {
        Self { ln_mag: self.ln_mag - rhs.ln_mag, phase: self.phase - rhs.phase }.wrapped()
    }

    pub fn recip(&self) -> Self {
        Self { ln_mag: -self.ln_mag, phase: -self.phase }.wrapped()
    }

    pub fn scale(&self, c: Complex) -> Self {
        self.mul(&Self::from_complex(c))
    }

    fn wrapped(self) -> Self {
        if self.is_zero() {
            return Self { ln_mag: f64::NEG_INFINITY, phase: 0.0 };
        }
        let mut p = self.phase % (2.0 * PI);
        if p > PI {
            p -= 2.0 * PI;
        } else if p <= -PI {
            p += 2.0 * PI;
        }
        Self { ln_mag: self.ln_mag, phase: p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_products() {
        let a = ScaledComplex::from_complex(Complex::new(3.0, -4.0));
        assert!((a.to_complex() - Complex::new(3.0, -4.0)).norm() < 1e-14);
        let b = ScaledComplex::from_complex(Complex::new(-1.0, 2.0));
        let prod = a.mul(&b).to_complex();
        assert!((prod - Complex::new(3.0, -4.0) * Complex::new(-1.0, 2.0)).norm() < 1e-13);
        assert!(a.mul(&a.recip()).to_complex().re - 1.0 < 1e-14);
        assert!(ScaledComplex::zero().mul(&a).is_zero());
    }
}
