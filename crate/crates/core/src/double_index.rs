use crate::{Complex, CoreError, Result};
use std::ops::{Add, Neg, Sub};

/// An exponent pair (hol, ahol) with hol - ahol in Z/2, stored as the exact
/// doubled difference plus the common symmetric part. Keeping the difference
/// as an integer makes phase factors like (-1)^(a - abar) exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoubleIndex {
    /// (hol + ahol) / 2
    sym: Complex,
    /// 2 * (hol - ahol), an exact integer
    diff2: i64,
}

/// Snap tolerance for float construction, per the model's conventions.
const SNAP_TOL: f64 = 1e-9;

impl DoubleIndex {
    pub fn new(hol: Complex, ahol: Complex) -> Result<Self> {
        let d = hol - ahol;
        let d2 = 2.0 * d.re;
        let snapped = d2.round();
        let dist = ((d2 - snapped).powi(2) + (2.0 * d.im).powi(2)).sqrt();
        if dist > SNAP_TOL {
            return Err(CoreError::NotDoubleIndex { diff: d.re, dist });
        }
        Ok(Self {
            sym: (hol + ahol) / 2.0,
            diff2: snapped as i64,
        })
    }

    /// Construct from the symmetric part and the exact doubled difference.
    pub fn from_sym_diff2(sym: Complex, diff2: i64) -> Self {
        Self { sym, diff2 }
    }

    /// The pair (r, r).
    pub fn real(r: f64) -> Self {
        Self { sym: Complex::new(r, 0.0), diff2: 0 }
    }

    /// The pair (c, c).
    pub fn symmetric(c: Complex) -> Self {
        Self { sym: c, diff2: 0 }
    }

    pub fn hol(&self) -> Complex {
        self.sym + Complex::new(self.diff2 as f64 / 4.0, 0.0)
    }

    pub fn ahol(&self) -> Complex {
        self.sym - Complex::new(self.diff2 as f64 / 4.0, 0.0)
    }

    pub fn sym(&self) -> Complex {
        self.sym
    }

    /// hol - ahol as a float (exact half-integer).
    pub fn diff(&self) -> f64 {
        self.diff2 as f64 / 2.0
    }

    /// 2 * (hol - ahol), exact.
    pub fn diff2(&self) -> i64 {
        self.diff2
    }

    /// hol + ahol.
    pub fn mod_exp(&self) -> Complex {
        2.0 * self.sym
    }

    pub fn is_integer_diff(&self) -> bool {
        self.diff2 % 2 == 0
    }

    /// (abar, a): the slot swap of the gamma swap rule.
    pub fn swapped(&self) -> Self {
        Self { sym: self.sym, diff2: -self.diff2 }
    }

    /// (abar*, a*): the exponent of the conjugated double power.
    pub fn conj_pair(&self) -> Self {
        Self { sym: self.sym.conj(), diff2: -self.diff2 }
    }

    /// 1 - a, slotwise.
    pub fn one_minus(&self) -> Self {
        Self { sym: Complex::new(1.0, 0.0) - self.sym, diff2: -self.diff2 }
    }

    /// Shift both slots by the same constant.
    pub fn shift(&self, rho: Complex) -> Self {
        Self { sym: self.sym + rho, diff2: self.diff2 }
    }
}

impl Add for DoubleIndex {
    type Output = DoubleIndex;
    fn add(self, rhs: Self) -> Self {
        Self { sym: self.sym + rhs.sym, diff2: self.diff2 + rhs.diff2 }
    }
}

impl Sub for DoubleIndex {
    type Output = DoubleIndex;
    fn sub(self, rhs: Self) -> Self {
        Self { sym: self.sym - rhs.sym, diff2: self.diff2 - rhs.diff2 }
    }
}

impl Neg for DoubleIndex {
    type Output = DoubleIndex;
    fn neg(self) -> Self {
        Self { sym: -self.sym, diff2: -self.diff2 }
    }
}

impl Add<f64> for DoubleIndex {
    type Output = DoubleIndex;
    fn add(self, rho: f64) -> Self {
        self.shift(Complex::new(rho, 0.0))
    }
}

impl std::fmt::Display for DoubleIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.hol(), self.ahol())
    }
}
