use crate::special::bernoulli::bernoulli_even;
use crate::special::constants::constants;
use crate::sum::Accumulator;
use crate::{Error, Result};

/// Largest n for which H_n is summed term by term.
const DIRECT_LIMIT: u64 = 10_000_000;

pub fn harmonic(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Argument(format!("harmonic number H_{n} needs n >= 1")));
    }
    if n <= DIRECT_LIMIT {
        let acc: Accumulator = (1..=n).rev().map(|k| 1.0 / k as f64).collect();
        Ok(acc.value())
    } else {
        Ok(harmonic_asymptotic(n as f64))
    }
}

/// H_n ≈ ln n + γ + 1/(2n) − Σ B_2k / (2k n^2k).
pub(crate) fn harmonic_asymptotic(n: f64) -> f64 {
    let inv2 = 1.0 / (n * n);
    let mut p = inv2;
    let mut corr = 0.0;
    for k in 1..=4 {
        corr += bernoulli_even(k) / (2.0 * k as f64) * p;
        p *= inv2;
    }
    n.ln() + constants().euler_gamma + 0.5 / n - corr
}

/// [H_0, H_1, …, H_n] with compensated running sums.
pub(crate) fn harmonic_prefix(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = Accumulator::new();
    out.push(0.0);
    for k in 1..=n {
        acc.add(1.0 / k as f64);
        out.push(acc.value());
    }
    out
}
