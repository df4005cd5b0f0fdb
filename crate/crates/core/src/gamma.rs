use crate::{Complex, CoreError, DoubleIndex, Result, ScaledComplex};
use std::f64::consts::PI;

// Lanczos g = 7, 9 coefficients (GSL set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_P: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// On-lattice detection tolerance for poles of the ordinary gamma.
const POLE_TOL: f64 = 1e-11;

/// Log of the ordinary complex gamma as (log|Gamma|, arg Gamma mod 2pi).
/// Lanczos for Re z >= 1/2, reflection otherwise. Working the reflection in
/// log-magnitude/phase form avoids branch bookkeeping in log sin.
pub fn lgamma(z: Complex) -> ScaledComplex {
    if z.re >= 0.5 {
        lgamma_lanczos(z)
    } else {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        let ls = log_sin_pi(z);
        let lg = lgamma_lanczos(Complex::new(1.0, 0.0) - z);
        ScaledComplex::new(PI.ln() - ls.ln_mag - lg.ln_mag, -ls.phase - lg.phase)
    }
}

fn lgamma_lanczos(z: Complex) -> ScaledComplex {
    let zm1 = z - Complex::new(1.0, 0.0);
    let mut acc = Complex::new(LANCZOS_P[0], 0.0);
    for (i, &p) in LANCZOS_P.iter().enumerate().skip(1) {
        acc += p / (zm1 + Complex::new(i as f64, 0.0));
    }
    let t = zm1 + Complex::new(LANCZOS_G + 0.5, 0.0);
    let w = 0.5 * (2.0 * PI).ln() + (zm1 + Complex::new(0.5, 0.0)) * t.ln() - t + acc.ln();
    ScaledComplex::new(w.re, w.im)
}

/// log sin(pi z) as log-magnitude + phase, stable for large |Im z|.
fn log_sin_pi(z: Complex) -> ScaledComplex {
    let im = z.im;
    if im.abs() < 20.0 {
        return ScaledComplex::from_complex((PI * z).sin());
    }
    // sin(pi z) = e^{\mp i pi z} (e^{\pm 2 i pi z} - 1) / (\pm 2 i), dominant
    // exponential factored out by the sign of Im z.
    if im > 0.0 {
        // dominant e^{-i pi z}
        let rest = (Complex::new(0.0, 2.0 * PI) * z).exp() - 1.0;
        let r = ScaledComplex::from_complex(rest);
        // 1/(-2i) = i/2 = e^{i pi/2}/2
        ScaledComplex::new(PI * im + r.ln_mag - 2f64.ln(), -PI * z.re + r.phase + PI / 2.0)
    } else {
        let rest = (Complex::new(0.0, -2.0 * PI) * z).exp() - 1.0;
        let r = ScaledComplex::from_complex(rest);
        ScaledComplex::new(-PI * im + r.ln_mag - 2f64.ln(), PI * z.re + r.phase - PI / 2.0)
    }
}

/// Gamma of the complex field in scaled form; an exact zero is a legal value,
/// a pole is not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GammaCf {
    Finite(ScaledComplex),
    /// Exact zero (the denominator gamma sits at a pole), with its order.
    Zero(u32),
    /// Pole of the stated order.
    Pole(u32),
}

impl GammaCf {
    pub fn to_scaled(&self) -> Result<ScaledComplex> {
        match self {
            GammaCf::Finite(s) => Ok(*s),
            GammaCf::Zero(_) => Ok(ScaledComplex::zero()),
            GammaCf::Pole(order) => Err(CoreError::GammaPole {
                order: *order,
                what: "gamma_cf".to_string(),
            }),
        }
    }

    pub fn to_complex(&self) -> Result<Complex> {
        Ok(self.to_scaled()?.to_complex())
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, GammaCf::Pole(_))
    }
}

fn nonpositive_int(z: Complex) -> Option<i64> {
    let r = z.re.round();
    if r <= 0.0 && (z.re - r).abs() < POLE_TOL && z.im.abs() < POLE_TOL {
        Some(r as i64)
    } else {
        None
    }
}

/// Gamma(a) / Gamma(1 - abar), the gamma function of the complex field.
///
/// Because a - abar is an exact half-integer, a simultaneous pole of the
/// numerator and the denominator has a well-defined finite limit along the
/// constraint surface, and is returned as such.
pub fn gamma_cf(a: DoubleIndex) -> GammaCf {
    let num = a.hol();
    let den = Complex::new(1.0, 0.0) - a.ahol();
    match (nonpositive_int(num), nonpositive_int(den)) {
        (None, None) => GammaCf::Finite(lgamma(num).div(&lgamma(den))),
        (Some(_), None) => GammaCf::Pole(1),
        (None, Some(_)) => GammaCf::Zero(1),
        (Some(p), Some(q)) => {
            // lim_{t->0} Gamma(-p+t)/Gamma(-q+t) = (-1)^(q-p) q!/p!
            let (p, q) = ((-p) as u32, (-q) as u32);
            let ln = ln_factorial(q) - ln_factorial(p);
            let phase = if (q - p) % 2 == 1 { PI } else { 0.0 };
            GammaCf::Finite(ScaledComplex::new(ln, phase))
        }
    }
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n as u64).map(|k| (k as f64).ln()).sum()
}

/// (-1)^(a - abar): exact phase, in {1, -1} for integer difference and
/// {i, -i} for half-odd difference.
pub fn minus_one_pow(a: DoubleIndex) -> Complex {
    match a.diff2().rem_euclid(4) {
        0 => Complex::new(1.0, 0.0),
        1 => Complex::new(0.0, 1.0),
        2 => Complex::new(-1.0, 0.0),
        _ => Complex::new(0.0, -1.0),
    }
}

/// Product of complex-field gammas with zero/pole order bookkeeping.
#[derive(Debug, Clone, Copy)]
pub struct GammaProduct {
    scaled: ScaledComplex,
    /// zeros minus poles accumulated so far
    net_zero_order: i32,
}

impl Default for GammaProduct {
    fn default() -> Self {
        Self::one()
    }
}

impl GammaProduct {
    pub fn one() -> Self {
        Self { scaled: ScaledComplex::one(), net_zero_order: 0 }
    }

    pub fn mul_gamma(&mut self, g: GammaCf) {
        match g {
            GammaCf::Finite(s) => self.scaled = self.scaled.mul(&s),
            GammaCf::Zero(k) => self.net_zero_order += k as i32,
            GammaCf::Pole(k) => self.net_zero_order -= k as i32,
        }
    }

    pub fn div_gamma(&mut self, g: GammaCf) {
        match g {
            GammaCf::Finite(s) => self.scaled = self.scaled.div(&s),
            GammaCf::Zero(k) => self.net_zero_order -= k as i32,
            GammaCf::Pole(k) => self.net_zero_order += k as i32,
        }
    }

    pub fn mul_scaled(&mut self, s: ScaledComplex) {
        self.scaled = self.scaled.mul(&s);
    }

    pub fn to_scaled(&self) -> Result<ScaledComplex> {
        match self.net_zero_order.cmp(&0) {
            std::cmp::Ordering::Equal => Ok(self.scaled),
            std::cmp::Ordering::Greater => Ok(ScaledComplex::zero()),
            std::cmp::Ordering::Less => Err(CoreError::GammaPole {
                order: (-self.net_zero_order) as u32,
                what: "gamma product".to_string(),
            }),
        }
    }
}

/// Product over plain gamma arguments and over (base +- offset) pairs, in the
/// compact notation Gamma(a +- b, c, d) = Gamma(a+b) Gamma(a-b) Gamma(c) Gamma(d).
pub fn gamma_product(
    terms: &[DoubleIndex],
    pm_pairs: &[(DoubleIndex, DoubleIndex)],
) -> Result<ScaledComplex> {
    let mut prod = GammaProduct::one();
    for (i, t) in terms.iter().enumerate() {
        let g = gamma_cf(*t);
        if g.is_pole() {
            return Err(CoreError::GammaPole { order: 1, what: format!("term {i} = {t}") });
        }
        prod.mul_gamma(g);
    }
    for (i, (base, off)) in pm_pairs.iter().enumerate() {
        for sgn in [1.0, -1.0] {
            let arg = if sgn > 0.0 { *base + *off } else { *base - *off };
            let g = gamma_cf(arg);
            if g.is_pole() {
                return Err(CoreError::GammaPole {
                    order: 1,
                    what: format!("pm pair {i}, argument {arg}"),
                });
            }
            prod.mul_gamma(g);
        }
    }
    prod.to_scaled()
}
