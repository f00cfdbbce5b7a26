//! Euler–Maclaurin tails for sums of log-power terms.
//!
//! Every tail summed in this crate is (after expanding rational factors in
//! powers of 1/t) a finite combination `Σ c · t^(-a) · (ln t)^k` with `a > 1`.
//! For such functions the integral from N to ∞ and all derivatives have
//! closed forms, so the Euler–Maclaurin formula can be applied exactly.

use crate::special::bernoulli::{bernoulli_even, factorial};
use crate::sum::Accumulator;
use crate::{ApproxValue, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogPowerTerm {
    pub coef: f64,
    /// Exponent `a` in `t^(-a)`.
    pub power: f64,
    /// Exponent `k` in `(ln t)^k`.
    pub log: u32,
}

/// A finite sum `Σ c · t^(-a) · (ln t)^k`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LogPowerSum {
    terms: Vec<LogPowerTerm>,
}

impl LogPowerSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(coef: f64, power: f64, log: u32) -> Self {
        let mut s = Self::new();
        s.push(coef, power, log);
        s
    }

    pub fn push(&mut self, coef: f64, power: f64, log: u32) {
        if coef != 0.0 {
            self.terms.push(LogPowerTerm { coef, power, log });
        }
    }

    pub fn terms(&self) -> &[LogPowerTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, t: f64) -> f64 {
        let l = t.ln();
        let mut acc = Accumulator::new();
        for term in &self.terms {
            acc.add(term.coef * t.powf(-term.power) * l.powi(term.log as i32));
        }
        acc.value()
    }

    /// `Σ |c| · t^(-a) · |ln t|^k`, an upper bound for `|eval(t)|`.
    pub fn majorant(&self, t: f64) -> f64 {
        let l = t.ln().abs();
        self.terms
            .iter()
            .map(|term| term.coef.abs() * t.powf(-term.power) * l.powi(term.log as i32))
            .sum()
    }

    pub fn abs(&self) -> LogPowerSum {
        LogPowerSum {
            terms: self
                .terms
                .iter()
                .map(|t| LogPowerTerm {
                    coef: t.coef.abs(),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: f64) -> LogPowerSum {
        let mut out = LogPowerSum::new();
        for t in &self.terms {
            out.push(t.coef * c, t.power, t.log);
        }
        out
    }

    /// Multiplies every term by `(ln t)^extra`.
    pub fn times_log(&self, extra: u32) -> LogPowerSum {
        LogPowerSum {
            terms: self
                .terms
                .iter()
                .map(|t| LogPowerTerm {
                    log: t.log + extra,
                    ..*t
                })
                .collect(),
        }
    }

    /// Multiplies every term by `t^(-shift)`.
    pub fn shift_power(&self, shift: f64) -> LogPowerSum {
        LogPowerSum {
            terms: self
                .terms
                .iter()
                .map(|t| LogPowerTerm {
                    power: t.power + shift,
                    ..*t
                })
                .collect(),
        }
    }

    pub fn plus(&self, other: &LogPowerSum) -> LogPowerSum {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        canonical(terms)
    }

    /// Product of two sums. The result is canonical and does not depend on
    /// the order of the factors.
    pub fn times(&self, other: &LogPowerSum) -> LogPowerSum {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(LogPowerTerm {
                    coef: a.coef * b.coef,
                    power: a.power + b.power,
                    log: a.log + b.log,
                });
            }
        }
        canonical(terms)
    }

    /// d/dt, using d/dt [t^(-a) L^k] = t^(-a-1) (k L^(k-1) - a L^k).
    pub fn derivative(&self) -> LogPowerSum {
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for t in &self.terms {
            if t.power != 0.0 {
                terms.push(LogPowerTerm {
                    coef: -t.power * t.coef,
                    power: t.power + 1.0,
                    log: t.log,
                });
            }
            if t.log > 0 {
                terms.push(LogPowerTerm {
                    coef: t.log as f64 * t.coef,
                    power: t.power + 1.0,
                    log: t.log - 1,
                });
            }
        }
        canonical(terms)
    }

    /// `∫_N^∞ f(t) dt`; every term must have `a > 1`.
    pub fn integral_from(&self, n: f64) -> Result<f64> {
        let l = n.ln();
        let mut acc = Accumulator::new();
        for t in &self.terms {
            if t.power <= 1.0 {
                return Err(Error::Argument(format!(
                    "tail term t^-{} (ln t)^{} is not integrable at infinity",
                    t.power, t.log
                )));
            }
            let am1 = t.power - 1.0;
            let k = t.log;
            // Σ_j k!/(k-j)! L^(k-j) / (a-1)^(j+1)
            let mut inner = 0.0;
            let mut falling = 1.0;
            let mut inv = 1.0 / am1;
            for j in 0..=k {
                inner += falling * l.powi((k - j) as i32) * inv;
                falling *= (k - j) as f64;
                inv /= am1;
            }
            acc.add(t.coef * n.powf(-am1) * inner);
        }
        Ok(acc.value())
    }
}

fn canonical(mut terms: Vec<LogPowerTerm>) -> LogPowerSum {
    terms.sort_by(|x, y| {
        x.power
            .total_cmp(&y.power)
            .then(x.log.cmp(&y.log))
            .then(x.coef.total_cmp(&y.coef))
    });
    let mut out: Vec<LogPowerTerm> = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        let key = (terms[i].power, terms[i].log);
        let mut acc = Accumulator::new();
        while i < terms.len() && (terms[i].power, terms[i].log) == key {
            acc.add(terms[i].coef);
            i += 1;
        }
        let coef = acc.value();
        if coef != 0.0 {
            out.push(LogPowerTerm {
                coef,
                power: key.0,
                log: key.1,
            });
        }
    }
    LogPowerSum { terms: out }
}

/// An asymptotic model of a summand: the retained expansion plus a bound
/// on what was dropped from it.
#[derive(Debug, Clone, Default)]
pub struct TailModel {
    pub expansion: LogPowerSum,
    /// Majorant of the truncated remainder of the expansion.
    pub omitted: LogPowerSum,
}

impl TailModel {
    pub fn exact(expansion: LogPowerSum) -> Self {
        Self {
            expansion,
            omitted: LogPowerSum::new(),
        }
    }
}

/// `Σ_{n ≥ start} f(n)` for `f` given by `model`, with `corrections`
/// Euler–Maclaurin derivative terms.
///
/// The error estimate is twice the first omitted Euler–Maclaurin term
/// (evaluated on the majorant so it cannot vanish at a sign change) plus the
/// integral of the model's omitted part.
pub fn em_tail(model: &TailModel, start: u64, corrections: usize) -> Result<ApproxValue> {
    let n = start as f64;
    let f = &model.expansion;
    let integral = f.integral_from(n)?;
    let mut acc = Accumulator::new();
    acc.add(integral);
    acc.add(0.5 * f.eval(n));
    let mut deriv = f.derivative();
    for j in 1..=corrections {
        let c = bernoulli_even(j) / factorial(2 * j);
        acc.add(-c * deriv.eval(n));
        deriv = deriv.derivative().derivative();
    }
    let remainder =
        2.0 * (bernoulli_even(corrections + 1) / factorial(2 * corrections + 2)).abs() * deriv.abs().majorant(n);
    let omitted = if model.omitted.is_empty() {
        0.0
    } else {
        let m = model.omitted.abs();
        m.integral_from(n)? + m.majorant(n)
    };
    let value = acc.value();
    let rounding = 4.0 * f64::EPSILON * acc.abs_sum();
    Ok(ApproxValue::new(value, remainder + omitted + rounding))
}
