//! Property suites for the gamma function of the complex field and the
//! double power, at the tolerances the verification suites rely on.

use complexfield_core::{dpow, dpow_conj, gamma_cf, minus_one_pow, Complex, DoubleIndex};
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

fn random_index(rng: &mut impl Rng) -> DoubleIndex {
    // |Re|, |Im| <= 5 on both slots, difference a half-integer
    let sym = Complex::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
    let diff2 = rng.gen_range(-10i64..=10);
    DoubleIndex::from_sym_diff2(sym, diff2)
}

fn away_from_poles(a: &DoubleIndex) -> bool {
    let margin = 0.05;
    let near_int = |z: Complex| (z.re - z.re.round()).abs() < margin && z.im.abs() < margin;
    // keep a, a+1, 1-a clear of the integer lattice on both slots
    for sh in [0.0, 1.0] {
        let b = a.shift(Complex::new(sh, 0.0));
        if near_int(b.hol()) || near_int(Complex::new(1.0, 0.0) - b.ahol()) {
            return false;
        }
        let c = b.one_minus();
        if near_int(c.hol()) || near_int(Complex::new(1.0, 0.0) - c.ahol()) {
            return false;
        }
    }
    true
}

#[test]
fn difference_equation_thousand_draws() {
    // Gamma(a+1) = -a abar Gamma(a)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut n = 0;
    while n < 1000 {
        let a = random_index(&mut rng);
        if !away_from_poles(&a) {
            continue;
        }
        n += 1;
        let lhs = gamma_cf(a + 1.0).to_scaled().unwrap();
        let rhs = gamma_cf(a)
            .to_scaled()
            .unwrap()
            .scale(-a.hol() * a.ahol());
        let (l, r) = (lhs.to_complex(), rhs.to_complex());
        assert!(
            (l - r).norm() <= 1e-12 * r.norm(),
            "difference equation failed at a = {a}: {l} vs {r}"
        );
    }
}

#[test]
fn swap_relation() {
    // Gamma(a) = (-1)^(a - abar) Gamma(abar, a)
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut n = 0;
    while n < 1000 {
        let a = random_index(&mut rng);
        if !away_from_poles(&a) || !away_from_poles(&a.swapped()) {
            continue;
        }
        n += 1;
        let lhs = gamma_cf(a).to_complex().unwrap();
        let rhs = minus_one_pow(a) * gamma_cf(a.swapped()).to_complex().unwrap();
        assert!(
            (lhs - rhs).norm() <= 1e-12 * lhs.norm(),
            "swap failed at a = {a}"
        );
    }
}

#[test]
fn reflection_relation() {
    // Gamma(a) Gamma(1-a) = (-1)^(a - abar)
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let mut n = 0;
    while n < 1000 {
        let a = random_index(&mut rng);
        if !away_from_poles(&a) {
            continue;
        }
        n += 1;
        let lhs = gamma_cf(a)
            .to_scaled()
            .unwrap()
            .mul(&gamma_cf(a.one_minus()).to_scaled().unwrap())
            .to_complex();
        let rhs = minus_one_pow(a);
        assert!(
            (lhs - rhs).norm() <= 1e-12,
            "reflection failed at a = {a}: {lhs} vs {rhs}"
        );
    }
}

#[test]
fn mb_conjugation_rule() {
    // For a = (n/2 + i nu, -n/2 + i nu), rho real:
    // Gamma(rho + a)* = (-1)^(a - abar) Gamma(rho - a)
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let mut n = 0;
    while n < 400 {
        let nu = rng.gen_range(-3.0..3.0);
        let k = rng.gen_range(-4i64..=4);
        let a = DoubleIndex::from_sym_diff2(Complex::new(0.0, nu), 2 * k);
        let rho = rng.gen_range(0.2..2.0);
        let arg = a + rho;
        if !away_from_poles(&arg) || !away_from_poles(&(-a + rho)) {
            continue;
        }
        n += 1;
        let lhs = gamma_cf(arg).to_complex().unwrap().conj();
        let rhs = minus_one_pow(a) * gamma_cf(-a + rho).to_complex().unwrap();
        assert!(
            (lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0),
            "conjugation rule failed at nu={nu} k={k} rho={rho}"
        );
    }
}

#[test]
fn dpow_conjugation_definitional() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for _ in 0..500 {
        let z = Complex::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        if z.norm() < 1e-3 {
            continue;
        }
        let a = DoubleIndex::from_sym_diff2(
            Complex::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)),
            2 * rng.gen_range(-3i64..=3),
        );
        let direct = dpow(z, a).unwrap().conj();
        let viapair = dpow_conj(z, a).unwrap();
        assert!((direct - viapair).norm() <= 1e-14 * direct.norm().max(1.0));
    }
}

#[test]
fn lanczos_accuracy_on_strip() {
    // functional-equation residual as a proxy for relative accuracy,
    // across the verification strip |Im| <= 50
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for _ in 0..2000 {
        let z = Complex::new(rng.gen_range(-8.0..8.0), rng.gen_range(-50.0..50.0));
        if (z.re - z.re.round()).abs() < 0.05 && z.im.abs() < 0.5 {
            continue;
        }
        let lhs = complexfield_core::lgamma(z + 1.0);
        let rhs = complexfield_core::lgamma(z).scale(z);
        let (l, r) = (lhs.to_complex(), rhs.to_complex());
        // values may be huge; compare in scaled form
        let dm = (lhs.ln_mag - rhs.ln_mag).abs();
        let mut dp = (lhs.phase - rhs.phase).abs();
        if dp > std::f64::consts::PI {
            dp = 2.0 * std::f64::consts::PI - dp;
        }
        assert!(
            dm < 1e-12 && dp < 1e-12 || (l - r).norm() <= 1e-13 * r.norm(),
            "recurrence failed at z = {z}: dm={dm:.2e} dp={dp:.2e}"
        );
    }
}
