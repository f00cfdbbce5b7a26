//! Riemann ζ for real s > 1, its first two derivatives, and ζ′ at −1 and −3.

use std::sync::OnceLock;

use crate::em::{em_tail, LogPowerSum, TailModel};
use crate::special::constants::constants;
use crate::sum::Accumulator;
use crate::{ApproxValue, Error, Result};

/// Terms summed explicitly before the Euler–Maclaurin tail.
const HEAD: u64 = 16;
const CORRECTIONS: usize = 6;

/// Σ_{n≥2} (−ln n)^k n^(−s), computed as an explicit head plus an exact
/// Euler–Maclaurin tail.
fn dirichlet_from_two(s: f64, k: u32) -> ApproxValue {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let mut acc = Accumulator::new();
    for n in 2..HEAD {
        let nf = n as f64;
        acc.add(sign * nf.ln().powi(k as i32) * nf.powf(-s));
    }
    let model = TailModel::exact(LogPowerSum::single(sign, s, k));
    let tail = em_tail(&model, HEAD, CORRECTIONS).expect("s > 1 keeps the tail integrable");
    ApproxValue::new(acc.value(), 2.0 * f64::EPSILON * acc.abs_sum()) + tail
}

/// ζ(s) − 1, accurate in absolute terms even when ζ(s) − 1 underflows
/// relative to 1.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return Err(Error::domain("zeta", s));
    }
    Ok(dirichlet_from_two(s, 0).value)
}

pub fn zeta(s: f64) -> Result<f64> {
    Ok(1.0 + zeta_minus_one(s)?)
}

/// The k-th derivative of ζ at s > 1, for k ∈ {1, 2}.
pub fn zeta_derivative(s: f64, order: u32) -> Result<ApproxValue> {
    if !(1..=2).contains(&order) {
        return Err(Error::Argument(format!(
            "zeta derivative of order {order} is not supported (1 or 2)"
        )));
    }
    if !(s > 1.0) {
        return Err(Error::domain("zeta_derivative", s));
    }
    Ok(dirichlet_from_two(s, order))
}

/// ζ′(−k) for k ∈ {1, 3}, through the reflection ζ(s) = χ(s) ζ(1−s) with
/// χ(s) = 2^s π^(s−1) sin(πs/2) Γ(1−s).
///
/// At odd negative integers cot(πs/2) vanishes, leaving
/// ζ′(−k) = χ(−k) [ζ(k+1) (ln 2π − ψ(k+1)) − ζ′(k+1)].
pub fn zeta_derivative_neg(k: u32) -> Result<f64> {
    if k != 1 && k != 3 {
        return Err(Error::Argument(format!(
            "zeta'(-{k}) is not supported (k must be 1 or 3)"
        )));
    }
    let gamma = constants().euler_gamma;
    Ok(reflected_zeta_derivative(k, gamma))
}

pub(crate) fn reflected_zeta_derivative(k: u32, euler_gamma: f64) -> f64 {
    use std::f64::consts::PI;
    let kf = k as f64;
    let sin = (-PI * kf / 2.0).sin().round();
    let fact: f64 = (1..=k).map(|j| j as f64).product();
    let chi = 2f64.powf(-kf) * PI.powf(-kf - 1.0) * sin * fact;
    let harmonic: f64 = (1..=k).map(|j| 1.0 / j as f64).sum();
    let psi = harmonic - euler_gamma;
    let s = kf + 1.0;
    let z = zeta(s).expect("k + 1 > 1");
    let dz = zeta_derivative(s, 1).expect("k + 1 > 1").value;
    chi * (z * ((2.0 * PI).ln() - psi) - dz)
}

/// ζ(k) − 1 for k = 0..=ZETA_TABLE_LEN (entries 0 and 1 unused).
pub(crate) const ZETA_TABLE_LEN: usize = 64;

pub(crate) fn zeta_minus_one_table() -> &'static [f64; ZETA_TABLE_LEN] {
    static TABLE: OnceLock<[f64; ZETA_TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [0.0; ZETA_TABLE_LEN];
        for (k, slot) in t.iter_mut().enumerate().skip(2) {
            *slot = zeta_minus_one(k as f64).expect("k >= 2");
        }
        t
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn even_values() {
        assert!((zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
    }

    #[test]
    fn zeta3_against_doubled_head() {
        // Oracle: brute partial sum with the integral tail ∫_N^∞ t^-3 and
        // the trapezoid correction, at two head lengths.
        let brute = |n: u64| {
            let head: f64 = (1..n).rev().map(|k| (k as f64).powi(-3)).sum();
            let nf = n as f64;
            head + 0.5 / (nf * nf) + 0.5 / nf.powi(3) + 0.25 / nf.powi(4)
        };
        let a = brute(20_000);
        let b = brute(40_000);
        assert!((a - b).abs() < 1e-14);
        assert!((zeta(3.0).unwrap() - b).abs() < 1e-14);
        assert!((zeta(3.0).unwrap() - 1.202_056_903_159_594).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(zeta(1.0).is_err());
        assert!(zeta(0.5).is_err());
        assert!(zeta_derivative(2.0, 3).is_err());
        assert!(zeta_derivative_neg(2).is_err());
    }

    /// Brute-force oracle: Σ_{n<N} (−ln n)^k / n^s plus the integral tail
    /// and the first trapezoid correction.
    fn brute_derivative(s: f64, k: u32, n: u64) -> f64 {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let mut acc = Accumulator::new();
        for i in 2..n {
            let x = i as f64;
            acc.add(sign * x.ln().powi(k as i32) * x.powf(-s));
        }
        let f = LogPowerSum::single(sign, s, k);
        let nf = n as f64;
        acc.value() + f.integral_from(nf).unwrap() + 0.5 * f.eval(nf)
            - f.derivative().eval(nf) / 12.0
    }

    #[test]
    fn derivatives_against_brute_force() {
        for (s, k, expected) in [
            (2.0, 1, -0.937_548_254_315_843_8),
            (3.0, 1, -0.198_126_242_885_636_85),
            (2.0, 2, 1.989_280_234_298_901),
        ] {
            let brute = brute_derivative(s, k, 1_000_000);
            let fast = zeta_derivative(s, k).unwrap();
            assert!((brute - expected).abs() < 1e-11, "brute {brute}");
            assert!((fast.value - expected).abs() < 1e-13, "fast {fast:?}");
            assert!(fast.abs_err < 1e-11);
        }
    }

    #[test]
    fn central_difference_matches_first_derivative() {
        let h = 1e-4;
        let fd = (zeta(2.0 + h).unwrap() - zeta(2.0 - h).unwrap()) / (2.0 * h);
        assert!((fd - zeta_derivative(2.0, 1).unwrap().value).abs() < 1e-7);
    }

    #[test]
    fn negative_argument_derivatives() {
        assert!((zeta_derivative_neg(1).unwrap() + 0.165_421_143_700_450_93).abs() < 1e-13);
        // mpmath: zeta(-3, derivative=1)
        assert!((zeta_derivative_neg(3).unwrap() - 0.005_378_576_357_774_301).abs() < 1e-13);
    }
}
