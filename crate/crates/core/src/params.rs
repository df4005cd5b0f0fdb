use crate::{Complex, CoreError, DoubleIndex, Result};

/// Sector selector: all discrete labels of the model live in Z + sigma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sigma {
    Zero,
    Half,
}

impl Sigma {
    /// Doubled offset: 0 or 1.
    pub fn twice(&self) -> i64 {
        match self {
            Sigma::Zero => 0,
            Sigma::Half => 1,
        }
    }

    /// Is the doubled label n2 (meaning n = n2/2) in Z + sigma?
    pub fn admits2(&self, n2: i64) -> bool {
        n2.rem_euclid(2) == self.twice()
    }
}

/// Spins, boundary data and sector of the one-site model. The unitarity
/// relations s* + sbar = 1, alphabar = alpha*, gammabar = gamma* are built
/// in; g - gbar in Z + sigma is checked at construction.
#[derive(Debug, Clone, Copy)]
pub struct ModelParams {
    /// 2 n_s, with n_s in Z + sigma
    pub n_s2: i64,
    pub nu_s: f64,
    pub gamma: Complex,
    pub alpha: Complex,
    pub sigma: Sigma,
    /// 2 n_g, derived from alpha/gamma and checked against sigma
    n_g2: i64,
}

impl ModelParams {
    pub fn new(n_s2: i64, nu_s: f64, gamma: Complex, alpha: Complex, sigma: Sigma) -> Result<Self> {
        if !sigma.admits2(n_s2) {
            return Err(CoreError::InvalidParams(format!(
                "n_s = {}/2 is not in Z + sigma",
                n_s2
            )));
        }
        if gamma.norm() == 0.0 {
            return Err(CoreError::InvalidParams("gamma must be nonzero".into()));
        }
        // g - gbar = -2 Im(alpha/gamma) must be real and in Z + sigma
        let ag = alpha / gamma;
        let n_g = -2.0 * ag.im;
        let n_g2 = (2.0 * n_g).round();
        if (2.0 * n_g - n_g2).abs() > 1e-9 {
            return Err(CoreError::InvalidParams(format!(
                "g - gbar = {n_g} is not a half-integer"
            )));
        }
        let n_g2 = n_g2 as i64;
        if !sigma.admits2(n_g2) {
            return Err(CoreError::InvalidParams(format!(
                "g - gbar = {n_g} is not in Z + sigma"
            )));
        }
        Ok(Self { n_s2, nu_s, gamma, alpha, sigma, n_g2 })
    }

    pub fn alpha_bar(&self) -> Complex {
        self.alpha.conj()
    }

    pub fn gamma_bar(&self) -> Complex {
        self.gamma.conj()
    }

    pub fn s(&self) -> Complex {
        Complex::new((self.n_s2 as f64 / 2.0 + 1.0) / 2.0, self.nu_s)
    }

    pub fn sbar(&self) -> Complex {
        Complex::new((-self.n_s2 as f64 / 2.0 + 1.0) / 2.0, self.nu_s)
    }

    /// The spin pair (s, sbar) as an exact double index.
    pub fn s_pair(&self) -> DoubleIndex {
        DoubleIndex::from_sym_diff2(Complex::new(0.5, self.nu_s), self.n_s2)
    }

    pub fn g(&self) -> Complex {
        Complex::new(0.5, 0.0) + Complex::new(0.0, 1.0) * self.alpha / self.gamma
    }

    pub fn gbar(&self) -> Complex {
        Complex::new(0.5, 0.0) + Complex::new(0.0, 1.0) * self.alpha_bar() / self.gamma_bar()
    }

    /// The boundary pair (g, gbar) as an exact double index.
    pub fn g_pair(&self) -> DoubleIndex {
        let sym = (self.g() + self.gbar()) / 2.0;
        DoubleIndex::from_sym_diff2(sym, self.n_g2)
    }
}

/// Spectral parameter x = (k/2 + i eta, -k/2 + i eta), k in Z + sigma.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralParam {
    /// 2k, exact
    pub k2: i64,
    pub eta: f64,
}

impl SpectralParam {
    pub fn new(k2: i64, eta: f64) -> Self {
        Self { k2, eta }
    }

    pub fn in_sector(&self, sigma: Sigma) -> bool {
        sigma.admits2(self.k2)
    }

    pub fn x(&self) -> Complex {
        Complex::new(self.k2 as f64 / 4.0, self.eta)
    }

    pub fn xbar(&self) -> Complex {
        Complex::new(-self.k2 as f64 / 4.0, self.eta)
    }

    /// (x, xbar) as an exact double index; xbar = -x*.
    pub fn pair(&self) -> DoubleIndex {
        DoubleIndex::from_sym_diff2(Complex::new(0.0, self.eta), self.k2)
    }

    /// x -> -x, i.e. (k, eta) -> (-k, -eta).
    pub fn neg(&self) -> Self {
        Self { k2: -self.k2, eta: -self.eta }
    }
}
