//! Accelerated evaluation of the slowly convergent sums: T_n, the reciprocal
//! quadratic sums, ζ_H, the Z power series, V and a few one-off sums.
//!
//! Every sum is split into an explicit head and an Euler–Maclaurin tail on
//! an asymptotic log-power model of the summand (see [`crate::em`]).

use std::f64::consts::PI;

use crate::em::{em_tail, LogPowerSum, TailModel};
use crate::special::bernoulli::{bernoulli_even, factorial};
use crate::special::constants::constants;
use crate::special::zeta::{zeta_minus_one_table, ZETA_TABLE_LEN};
use crate::sum::Accumulator;
use crate::{ApproxValue, Error, Result};

/// How a sum is split between explicit terms and the Euler–Maclaurin tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailPolicy {
    pub direct_terms: u64,
    /// Number of Euler–Maclaurin derivative corrections, 0..=6.
    pub em_corrections: usize,
}

impl Default for TailPolicy {
    fn default() -> Self {
        Self {
            direct_terms: 100_000,
            em_corrections: 4,
        }
    }
}

impl TailPolicy {
    pub fn new(direct_terms: u64, em_corrections: usize) -> Result<Self> {
        let p = Self {
            direct_terms,
            em_corrections,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.direct_terms < 1 {
            return Err(Error::Argument("direct_terms must be at least 1".into()));
        }
        if self.em_corrections > 6 {
            return Err(Error::Argument(format!(
                "em_corrections = {} is outside 0..=6",
                self.em_corrections
            )));
        }
        Ok(())
    }
}

/// Rounding allowance for a compensated sum whose terms each carry a few
/// ulps of evaluation error.
fn rounding(acc: &Accumulator) -> f64 {
    4.0 * f64::EPSILON * acc.abs_sum()
}

/// Σ_{i ≥ start, i ≠ skip} (ln i)^log / (i^extra (i² − q)).
///
/// The head runs to `last` inclusive; the tail uses
/// 1/(t² − q) = Σ_j q^j t^(−2j−2), truncated once |q|/t² ≤ 1/4 has made the
/// remainder negligible.
fn quadratic_log_sum(
    q: f64,
    skip: Option<u64>,
    start: u64,
    last: u64,
    log: u32,
    extra: f64,
    corrections: usize,
) -> Result<ApproxValue> {
    let mut acc = Accumulator::new();
    for i in start..=last {
        if Some(i) == skip {
            continue;
        }
        let x = i as f64;
        let denom = match skip {
            // (i − n)(i + n) is exact in binary64 for the sizes used here.
            Some(n) => (x - n as f64) * (x + n as f64),
            None => x * x - q,
        };
        let num = if log == 0 { 1.0 } else { x.ln().powi(log as i32) };
        let pow = if extra == 0.0 { 1.0 } else { x.powf(extra) };
        acc.add(num / (pow * denom));
    }
    let head = ApproxValue::new(acc.value(), rounding(&acc));

    let tail_start = last + 1;
    let ratio = q.abs() / (tail_start as f64).powi(2);
    debug_assert!(ratio < 1.0);
    let mut expansion = LogPowerSum::new();
    let mut qj = 1.0;
    let mut j = 0;
    while j < 40 {
        expansion.push(qj, 2.0 * j as f64 + 2.0 + extra, log);
        qj *= q;
        j += 1;
        if ratio.powi(j as i32) < 1e-20 {
            break;
        }
    }
    let omitted = LogPowerSum::single(qj.abs() / (1.0 - ratio), 2.0 * j as f64 + 2.0 + extra, log);
    let tail = em_tail(&TailModel { expansion, omitted }, tail_start, corrections)?;
    Ok(head + tail)
}

/// T_n = Σ_{i≥2, i≠n} ln i / (i² − n²).
pub fn t_n(n: u64, policy: &TailPolicy) -> Result<ApproxValue> {
    if n < 1 {
        return Err(Error::Argument(format!("T_n needs n >= 1, got {n}")));
    }
    policy.validate()?;
    let last = (4 * n).max(policy.direct_terms);
    let nf = n as f64;
    quadratic_log_sum(nf * nf, Some(n), 2, last, 1, 0.0, policy.em_corrections)
}

/// Smallest n for which [`t_n_asymptotic`] is accurate to rounding.
pub const T_ASYMPTOTIC_FROM: u64 = 32;

/// Large-n expansion
/// T_n ≈ π²/(4n) + ln n/(4n²) − (1 + ln 2π)/(2n²)
///       + Σ_{k≥1} (−1)^k (2k)! ζ(2k+1) / (2 (2π)^(2k) n^(2k+2)).
///
/// The series is asymptotic; it is cut before its smallest term, which is
/// also the error estimate.
pub fn t_n_asymptotic(n: u64) -> Result<ApproxValue> {
    if n < 1 {
        return Err(Error::Argument(format!("T_n needs n >= 1, got {n}")));
    }
    let nf = n as f64;
    let n2 = nf * nf;
    let zm1 = zeta_minus_one_table();
    let mut acc = Accumulator::new();
    acc.add(PI * PI / (4.0 * nf));
    acc.add(nf.ln() / (4.0 * n2));
    acc.add(-(1.0 + constants().log_2pi) / (2.0 * n2));
    let mut last = f64::INFINITY;
    let mut k = 1usize;
    let err = loop {
        let z = 1.0 + zm1.get(2 * k + 1).copied().unwrap_or(0.0);
        let term = factorial(2 * k) * z / (2.0 * (2.0 * PI).powi(2 * k as i32) * nf.powi(2 * k as i32 + 2));
        if term >= last || 2 * k + 1 >= ZETA_TABLE_LEN {
            break last;
        }
        if term < 1e-17 * acc.value().abs() {
            break term;
        }
        acc.add(if k % 2 == 1 { -term } else { term });
        last = term;
        k += 1;
    };
    Ok(ApproxValue::new(acc.value(), err + rounding(&acc)))
}

/// Σ_{m≥1, m≠n} 1/(m² − n²); equals 3/(4n²).
pub fn reciprocal_square_diff_sum(n: u64) -> Result<ApproxValue> {
    if n < 1 {
        return Err(Error::Argument(format!("n must be >= 1, got {n}")));
    }
    let nf = n as f64;
    quadratic_log_sum(nf * nf, Some(n), 1, (8 * n).max(1000), 0, 0.0, 6)
}

/// Σ_{m≥1, m≠n} 1/(m (m² − n²)); equals 5/(4n³) − H_n/n².
pub fn reciprocal_cubic_diff_sum(n: u64) -> Result<ApproxValue> {
    if n < 1 {
        return Err(Error::Argument(format!("n must be >= 1, got {n}")));
    }
    let nf = n as f64;
    quadratic_log_sum(nf * nf, Some(n), 1, (8 * n).max(1000), 0, 1.0, 6)
}

/// Model of T_n − π²/(4n) for large n (the expansion of [`t_n_asymptotic`]
/// without its 1/n term), keeping `terms` terms of the ζ(2k+1) series.
pub(crate) fn t_n_rest_model(terms: usize) -> TailModel {
    let zeta_odd = |k: usize| 1.0 + zeta_minus_one_table()[2 * k + 1];
    let coef = |k: usize| factorial(2 * k) * zeta_odd(k) / (2.0 * (2.0 * PI).powi(2 * k as i32));
    let mut expansion = LogPowerSum::single(0.25, 2.0, 1);
    expansion.push(-(1.0 + constants().log_2pi) / 2.0, 2.0, 0);
    for k in 1..=terms {
        let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
        expansion.push(sign * coef(k), 2.0 * k as f64 + 2.0, 0);
    }
    let next = terms + 1;
    let omitted = LogPowerSum::single(2.0 * coef(next), 2.0 * next as f64 + 2.0, 0);
    TailModel { expansion, omitted }
}

/// Asymptotic model of H(t) = ψ(t+1) + γ as a log-power sum, with the next
/// Bernoulli term as the omitted part.
pub(crate) fn harmonic_model() -> TailModel {
    const TERMS: usize = 4;
    let mut expansion = LogPowerSum::single(1.0, 0.0, 1);
    expansion.push(constants().euler_gamma, 0.0, 0);
    expansion.push(0.5, 1.0, 0);
    for k in 1..=TERMS {
        expansion.push(-bernoulli_even(k) / (2.0 * k as f64), 2.0 * k as f64, 0);
    }
    let omitted = LogPowerSum::single(
        bernoulli_even(TERMS + 1).abs() / (2.0 * (TERMS + 1) as f64),
        2.0 * (TERMS + 1) as f64,
        0,
    );
    TailModel { expansion, omitted }
}

/// Σ_{n≥1} H_n (ln n)^log / n^s with the head running to `last`.
fn harmonic_log_sum(s: f64, log: u32, last: u64, corrections: usize) -> Result<ApproxValue> {
    let mut acc = Accumulator::new();
    let mut h = Accumulator::new();
    for n in 1..=last {
        let x = n as f64;
        h.add(1.0 / x);
        let l = if log == 0 { 1.0 } else { x.ln().powi(log as i32) };
        acc.add(h.value() * l * x.powf(-s));
    }
    let head = ApproxValue::new(acc.value(), rounding(&acc));
    let weight = LogPowerSum::single(1.0, s, log);
    let hm = harmonic_model();
    let model = TailModel {
        expansion: hm.expansion.times(&weight),
        omitted: hm.omitted.times(&weight),
    };
    Ok(head + em_tail(&model, last + 1, corrections)?)
}

/// ζ_H(s) = Σ_{n≥1} H_n / n^s for s > 1.
pub fn harmonic_zeta(s: f64, policy: &TailPolicy) -> Result<ApproxValue> {
    if !(s > 1.0) {
        return Err(Error::domain("harmonic_zeta", s));
    }
    policy.validate()?;
    harmonic_log_sum(s, 0, policy.direct_terms, policy.em_corrections)
}

/// ζ_H′(2) in the sign convention Σ_{n≥2} H_n ln n / n².
pub fn harmonic_zeta_prime2(policy: &TailPolicy) -> Result<ApproxValue> {
    policy.validate()?;
    harmonic_log_sum(2.0, 1, policy.direct_terms, policy.em_corrections)
}

/// Z(t) = Σ_{n≥1} ζ(2n+1) t^(2n+2) / (n+1) for |t| < 1.
pub fn z_function(t: f64) -> Result<ApproxValue> {
    if !(t.abs() < 1.0) {
        return Err(Error::domain("z_function", t));
    }
    let t = t.abs();
    Ok(z_with_complement(t, 1.0 - t))
}

/// Z(t) for 0 ≤ t < 1 given c = 1 − t exactly.
///
/// Up to t = 1/2 the defining series is summed directly. Beyond, the
/// ζ(2n+1) = 1 part is summed in closed form, −ln(1 − t²) − t², with
/// 1 − t² = c(1 + t) so that the logarithm stays accurate as t → 1.
pub(crate) fn z_with_complement(t: f64, c: f64) -> ApproxValue {
    let zm1 = zeta_minus_one_table();
    let u = t * t;
    let max_n = (ZETA_TABLE_LEN - 2) / 2;
    let mut terms = Vec::with_capacity(64);
    let peeled = t > 0.5;
    let mut p = u;
    for n in 1..=max_n.max(40) {
        p *= u;
        let zeta_part = zm1.get(2 * n + 1).copied().unwrap_or(0.0);
        let coef = if peeled { zeta_part } else { 1.0 + zeta_part };
        terms.push(coef * p / (n as f64 + 1.0));
        if p < 1e-40 {
            break;
        }
    }
    let mut acc = Accumulator::new();
    for term in terms.iter().rev() {
        acc.add(*term);
    }
    // Dropped terms: ζ(2n+1) − 1 < 2^(−2n) beyond the table, or u^n < 1e−40.
    let truncation = if peeled { 4f64.powi(-(max_n as i32)) } else { 1e-40 };
    if peeled {
        acc.add(-(c * (1.0 + t)).ln());
        acc.add(-u);
    }
    ApproxValue::new(acc.value(), rounding(&acc) + truncation)
}

/// E_m = ∫₀¹ x^m lnΓ(x) dx from the expansion of lnΓ(1 − u) in u = 1 − x:
/// E_m = Σ_{k≥1} ζ(k) (k−1)! m! / (m+k+1)!, with ζ(1) read as γ.
///
/// The k-th term behaves like m!·k^(−m−2), so the tail after k is about
/// k/(m+1) times the last term. Usable from m = 4; fast for large m.
pub fn ln_gamma_moment_series(m: u64) -> Result<ApproxValue> {
    const MAX_TERMS: u64 = 1_000_000;
    if m < 4 {
        return Err(Error::Argument(format!(
            "the u-series for E_m converges too slowly below m = 4 (got {m})"
        )));
    }
    let zm1 = zeta_minus_one_table();
    let mf = m as f64;
    // r_k = (k−1)! m! / (m+k+1)!
    let mut r = 1.0 / ((mf + 1.0) * (mf + 2.0));
    let mut acc = Accumulator::new();
    acc.add(constants().euler_gamma * r);
    let mut k = 1u64;
    loop {
        r *= k as f64 / (mf + k as f64 + 2.0);
        k += 1;
        let z = 1.0 + zm1.get(k as usize).copied().unwrap_or(0.0);
        let term = z * r;
        acc.add(term);
        let rest = 2.0 * term * k as f64 / (mf + 1.0);
        if rest < 1e-18 * acc.value() || k >= MAX_TERMS {
            return Ok(ApproxValue::new(acc.value(), rest + rounding(&acc)));
        }
    }
}

/// V = Σ_{n≥1} ζ(2n+1) E_{2n+2} / (n+1), with E supplied by `e_provider`
/// for the first `head` terms and by [`ln_gamma_moment_series`] after.
pub fn v_sum_with_head(
    e_provider: &(dyn Fn(u64) -> Result<ApproxValue> + Sync),
    head: u64,
) -> Result<ApproxValue> {
    const SERIES_TERMS: u64 = 100_000;
    let zm1 = zeta_minus_one_table();
    let zeta_odd = |n: u64| 1.0 + zm1.get(2 * n as usize + 1).copied().unwrap_or(0.0);
    let mut acc = Accumulator::new();
    let mut err = 0.0;
    for n in 1..=head {
        let e = e_provider(2 * n + 2)?;
        let w = zeta_odd(n) / (n as f64 + 1.0);
        acc.add(w * e.value);
        err += w * e.abs_err;
    }
    for n in head + 1..=head.max(SERIES_TERMS) {
        let e = ln_gamma_moment_series(2 * n + 2)?;
        let w = zeta_odd(n) / (n as f64 + 1.0);
        acc.add(w * e.value);
        err += w * e.abs_err;
    }
    // Beyond N the summand is γ/(4n³) (1 + O(1/n)); the tail is γ/(8N²)
    // with the correction bounded by a few times its 1/N share.
    let big_n = head.max(SERIES_TERMS) as f64 + 0.5;
    let tail = constants().euler_gamma / (8.0 * big_n * big_n);
    acc.add(tail);
    err += tail * 8.0 / big_n;
    Ok(ApproxValue::new(acc.value(), err + rounding(&acc)))
}

/// Number of E_n values taken from the injected provider in [`v_sum`].
pub const V_HEAD_TERMS: u64 = 100;

pub fn v_sum(e_provider: &(dyn Fn(u64) -> Result<ApproxValue> + Sync)) -> Result<ApproxValue> {
    v_sum_with_head(e_provider, V_HEAD_TERMS)
}

/// Σ_{n≥1} ζ(2n+1) / ((n+1)(2n+5)), which equals ∫₀¹ x² Z(x) dx.
///
/// The ζ(2n+1) = 1 part telescopes through ψ(7/2) − ψ(2) to
/// (31/15 − 2 ln 2)/3; the remainder converges geometrically.
pub fn x2z_moment() -> Result<ApproxValue> {
    let zm1 = zeta_minus_one_table();
    let mut acc = Accumulator::new();
    for n in (1..=31usize).rev() {
        let nf = n as f64;
        acc.add(zm1[2 * n + 1] / ((nf + 1.0) * (2.0 * nf + 5.0)));
    }
    acc.add((31.0 / 15.0 - 2.0 * 2f64.ln()) / 3.0);
    Ok(ApproxValue::new(acc.value(), rounding(&acc) + 4f64.powi(-32)))
}

/// Σ_{n≥1} ln n / (1 + 4π²n²).
pub fn log_rational_sum(policy: &TailPolicy) -> Result<ApproxValue> {
    policy.validate()?;
    let four_pi2 = 4.0 * PI * PI;
    let s = quadratic_log_sum(
        -1.0 / four_pi2,
        None,
        2,
        policy.direct_terms.max(2),
        1,
        0.0,
        policy.em_corrections,
    )?;
    Ok(s * (1.0 / four_pi2))
}
