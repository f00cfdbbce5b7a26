//! Real log-gamma.
//!
//! Near 1 and 2 the Taylor series in ζ(k) − 1 keeps full relative accuracy
//! around the zeros; between 2.5 and 12 a downward recurrence feeds the
//! series at 2; above 12 the Stirling series is used.

use crate::special::bernoulli::bernoulli_even;
use crate::special::constants::constants;
use crate::special::zeta::{zeta_minus_one_table, ZETA_TABLE_LEN};
use crate::{Error, Result};

const STIRLING_TERMS: usize = 8;

pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("ln_gamma", x));
    }
    Ok(ln_gamma_pos(x))
}

/// lnΓ(x) for x > 0 (not checked).
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if x < 0.5 {
        ln_gamma_1p(x) - x.ln()
    } else if x < 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x < 2.5 {
        ln_gamma_2p(x - 2.0)
    } else if x < 12.0 {
        let mut y = x;
        let mut prod = 1.0;
        while y >= 2.5 {
            y -= 1.0;
            prod *= y;
        }
        ln_gamma_2p(y - 2.0) + prod.ln()
    } else if x.is_infinite() {
        f64::INFINITY
    } else {
        stirling(x)
    }
}

/// lnΓ(x) given both x and cx = 1 − x; uses cx to stay accurate as x → 1.
pub(crate) fn ln_gamma_with_complement(x: f64, cx: f64) -> f64 {
    if cx > 0.0 && cx < 0.5 {
        ln_gamma_1p(-cx)
    } else {
        ln_gamma_pos(x)
    }
}

/// Σ_{k≥2} (−1)^k (ζ(k) − 1) z^k / k for |z| ≤ 1/2.
fn zeta_tail_series(z: f64) -> f64 {
    let table = zeta_minus_one_table();
    let mut sum = 0.0;
    // Highest order first; the terms shrink roughly like (z/2)^k.
    for k in (2..ZETA_TABLE_LEN).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * table[k] * z.powi(k as i32) / k as f64;
    }
    sum
}

/// lnΓ(1 + z) for |z| ≤ 1/2.
pub(crate) fn ln_gamma_1p(z: f64) -> f64 {
    let gamma = constants().euler_gamma;
    -z.ln_1p() + z * (1.0 - gamma) + zeta_tail_series(z)
}

/// lnΓ(2 + z) for |z| ≤ 1/2.
fn ln_gamma_2p(z: f64) -> f64 {
    let gamma = constants().euler_gamma;
    z * (1.0 - gamma) + zeta_tail_series(z)
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for k in 1..=STIRLING_TERMS {
        let kf = k as f64;
        corr += bernoulli_even(k) / (2.0 * kf * (2.0 * kf - 1.0)) * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * constants().log_2pi + corr
}
