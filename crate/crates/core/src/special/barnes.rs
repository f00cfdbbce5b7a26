//! log G for the Barnes G function, G(z+1) = Γ(z) G(z), G(1) = 1.
//!
//! Below 13 the argument is moved into [1/2, 3/2) with the functional
//! equation and the Taylor series about 1,
//! ln G(1+z) = (z/2) ln 2π − (z + (1+γ)z²)/2 + Σ_{k≥2} (−1)^k ζ(k) z^{k+1}/(k+1),
//! is summed there. From 13 on the argument is moved into [13, 14) and the
//! large-z expansion
//! ln G(1+z) = z²/2 ln z − 3z²/4 + (z/2) ln 2π − (1/12) ln z + ζ′(−1)
//!           + Σ_k B_{2k+2} / (4k(k+1) z^{2k})
//! is applied. Both reductions only add lnΓ terms, so there is no
//! cancellation against a large ln G value.

use crate::special::bernoulli::bernoulli_even;
use crate::special::constants::constants;
use crate::special::gamma::ln_gamma_pos;
use crate::special::zeta::{zeta_minus_one_table, ZETA_TABLE_LEN};
use crate::sum::Accumulator;
use crate::{Error, Result};

const WINDOW_LOW: f64 = 13.0;
const DIRECT_ASYMPTOTIC: f64 = 1000.0;
const ASYMPTOTIC_TERMS: usize = 8;

pub fn ln_barnes_g(x: f64) -> Result<f64> {
    if !(x > 0.0) || x.is_infinite() {
        return Err(Error::domain("ln_barnes_g", x));
    }
    Ok(ln_barnes_g_pos(x))
}

pub(crate) fn ln_barnes_g_pos(x: f64) -> f64 {
    if x >= DIRECT_ASYMPTOTIC {
        return asymptotic(x - 1.0);
    }
    let mut acc = Accumulator::new();
    if x < 0.5 {
        acc.add(-ln_gamma_pos(x));
        acc.add(taylor(x));
    } else if x < WINDOW_LOW {
        let k = (x - 0.5).floor() as u32;
        let y = x - k as f64;
        for j in (0..k).rev() {
            acc.add(ln_gamma_pos(y + j as f64));
        }
        acc.add(taylor(y - 1.0));
    } else {
        let k = (x - WINDOW_LOW).floor() as u32;
        let y = x - k as f64;
        for j in 0..k {
            acc.add(ln_gamma_pos(y + j as f64));
        }
        acc.add(asymptotic(y - 1.0));
    }
    acc.value()
}

/// ln G(1 + z) for |z| ≤ 1/2.
fn taylor(z: f64) -> f64 {
    let c = constants();
    let zm1 = zeta_minus_one_table();
    let mut terms = Vec::with_capacity(ZETA_TABLE_LEN);
    // p = (−1)^k z^(k+1)
    let mut p = -z * z;
    for k in 2..ZETA_TABLE_LEN {
        p *= -z;
        let term = (1.0 + zm1[k]) * p / (k as f64 + 1.0);
        terms.push(term);
        if p.abs() < 1e-19 {
            break;
        }
    }
    let mut acc = Accumulator::new();
    for t in terms.iter().rev() {
        acc.add(*t);
    }
    acc.add(-0.5 * (1.0 + c.euler_gamma) * z * z);
    acc.add(0.5 * z * (c.log_2pi - 1.0));
    acc.value()
}

/// ln G(1 + z) for large z.
fn asymptotic(z: f64) -> f64 {
    let c = constants();
    let lz = z.ln();
    let z2 = z * z;
    let inv2 = 1.0 / z2;
    let mut acc = Accumulator::new();
    acc.add(0.5 * z2 * lz);
    acc.add(-0.75 * z2);
    acc.add(0.5 * z * c.log_2pi);
    acc.add(-lz / 12.0);
    acc.add(c.zeta_p_m1);
    let mut p = inv2;
    for k in 1..=ASYMPTOTIC_TERMS {
        let kf = k as f64;
        acc.add(bernoulli_even(k + 1) / (4.0 * kf * (kf + 1.0)) * p);
        p *= inv2;
    }
    acc.value()
}
