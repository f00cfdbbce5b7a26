//! Closed-form Fourier coefficients on (0, 1), partial sums and the
//! generalized Parseval pairing.
//!
//! Every series is stored as a_n = 2∫f cos(2nπx), b_n = 2∫f sin(2nπx) with
//! constant term a₀/2. Published coefficient lists use several conventions;
//! [`normalize`] is the only place where they are converted.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::em::{em_tail, LogPowerSum, TailModel};
use crate::quadrature::{trig_xc, IntegrandSpec, TrigKind};
use crate::series::{harmonic_model, t_n, t_n_asymptotic, t_n_rest_model, TailPolicy, T_ASYMPTOTIC_FROM};
use crate::special::barnes::ln_barnes_g_pos;
use crate::special::bernoulli::{bernoulli2, bernoulli_even};
use crate::special::clausen::clausen2;
use crate::special::constants::constants;
use crate::special::gamma::{ln_gamma, ln_gamma_with_complement};
use crate::special::harmonic::harmonic_prefix;
use crate::sum::Accumulator;
use crate::{ApproxValue, Error, Result};

/// Terms of the asymptotic T_n model kept in coefficient tails.
const T_MODEL_TERMS: usize = 3;
const PARSEVAL_CORRECTIONS: usize = 4;

/// How a published list of coefficients relates to the stored convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    /// a₀ = 2∫f, a_n = 2∫f cos, b_n = 2∫f sin.
    Standard,
    /// The printed a₀ is the constant term of the series; a_n, b_n are the
    /// expansion coefficients.
    ConstantTerm,
    /// Every printed value is ∫f·trig, half the stored value.
    HalfScale,
}

/// Maps printed coefficients to (a₀, a_n, b_n) in the stored convention.
pub fn normalize(convention: Convention, a0: f64, a: Vec<f64>, b: Vec<f64>) -> (f64, Vec<f64>, Vec<f64>) {
    match convention {
        Convention::Standard => (a0, a, b),
        Convention::ConstantTerm => (2.0 * a0, a, b),
        Convention::HalfScale => (
            2.0 * a0,
            a.into_iter().map(|x| 2.0 * x).collect(),
            b.into_iter().map(|x| 2.0 * x).collect(),
        ),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FourierSeries {
    pub a0: f64,
    /// a_1, …, a_N.
    pub a: Vec<f64>,
    /// b_1, …, b_N.
    pub b: Vec<f64>,
    pub label: String,
    /// Large-n models of a_n and b_n, used for Parseval tails.
    #[serde(skip)]
    pub tail_a: TailModel,
    #[serde(skip)]
    pub tail_b: TailModel,
}

impl FourierSeries {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn constant_term(&self) -> f64 {
        0.5 * self.a0
    }

    /// a_n, with a_0 the stored a₀.
    pub fn a_n(&self, n: usize) -> f64 {
        if n == 0 {
            self.a0
        } else {
            self.a[n - 1]
        }
    }

    pub fn b_n(&self, n: usize) -> f64 {
        self.b[n - 1]
    }

    /// a₀/2 + Σ_{n≤N} (a_n cos 2nπx + b_n sin 2nπx).
    pub fn partial_sum(&self, x: f64, n_terms: usize) -> Result<f64> {
        if n_terms > self.len() {
            return Err(Error::Argument(format!(
                "series '{}' holds {} terms, {} requested",
                self.label,
                self.len(),
                n_terms
            )));
        }
        let cx = 1.0 - x;
        let mut acc = Accumulator::new();
        acc.add(self.constant_term());
        for n in 1..=n_terms {
            let (a, b) = (self.a[n - 1], self.b[n - 1]);
            if a != 0.0 {
                acc.add(a * trig_xc(TrigKind::Cosine, n as u64, x, cx));
            }
            if b != 0.0 {
                acc.add(b * trig_xc(TrigKind::Sine, n as u64, x, cx));
            }
        }
        Ok(acc.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeriesKind {
    /// lnΓ(x)
    Kummer,
    /// x lnΓ(x)
    Xlgamma,
    /// ln G(x)
    Logbarnes,
    /// ln sin(πx)
    Logsin,
    /// x Cl₂(2πx)
    Xclausen,
    /// B₂(x)
    B2,
    /// Cl₂(2πx)
    Clausen,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 7] = [
        SeriesKind::Kummer,
        SeriesKind::Xlgamma,
        SeriesKind::Logbarnes,
        SeriesKind::Logsin,
        SeriesKind::Xclausen,
        SeriesKind::B2,
        SeriesKind::Clausen,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SeriesKind::Kummer => "kummer",
            SeriesKind::Xlgamma => "xlgamma",
            SeriesKind::Logbarnes => "logbarnes",
            SeriesKind::Logsin => "logsin",
            SeriesKind::Xclausen => "xclausen",
            SeriesKind::B2 => "b2",
            SeriesKind::Clausen => "clausen",
        }
    }

    /// The expanded function, as an integrand for quadrature checks.
    pub fn function(self) -> IntegrandSpec<'static> {
        let spec = IntegrandSpec::new(self.label(), move |x, cx| self.eval_xc(x, cx));
        match self {
            SeriesKind::Kummer | SeriesKind::Xlgamma | SeriesKind::Logbarnes => spec.singular_left(),
            SeriesKind::Logsin | SeriesKind::Xclausen | SeriesKind::Clausen => {
                spec.singular_left().singular_right()
            }
            SeriesKind::B2 => spec,
        }
    }

    /// The expanded function at 0 < x < 1.
    pub fn evaluate(self, x: f64) -> Result<f64> {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::domain("fourier series function", x));
        }
        Ok(self.eval_xc(x, 1.0 - x))
    }

    fn eval_xc(self, x: f64, cx: f64) -> f64 {
        match self {
            SeriesKind::Kummer => ln_gamma_with_complement(x, cx),
            SeriesKind::Xlgamma => x * ln_gamma_with_complement(x, cx),
            SeriesKind::Logbarnes => ln_barnes_g_pos(x),
            SeriesKind::Logsin => (PI * x.min(cx)).sin().ln(),
            SeriesKind::Xclausen => x * clausen_2pi_xc(x, cx),
            SeriesKind::B2 => bernoulli2(x),
            SeriesKind::Clausen => clausen_2pi_xc(x, cx),
        }
    }

    /// Closed-form coefficients up to index `n_terms`.
    pub fn generate(self, n_terms: usize) -> Result<FourierSeries> {
        if n_terms < 1 {
            return Err(Error::Argument("a series needs at least one coefficient".into()));
        }
        match self {
            SeriesKind::Kummer => Ok(kummer_series(n_terms)),
            SeriesKind::Xlgamma => xlgamma_series(n_terms),
            SeriesKind::Logbarnes => logbarnes_series(n_terms),
            SeriesKind::Logsin => Ok(logsin_series(n_terms)),
            SeriesKind::Xclausen => Ok(xclausen_series(n_terms)),
            SeriesKind::B2 => Ok(b2_series(n_terms)),
            SeriesKind::Clausen => Ok(clausen_series(n_terms)),
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::Argument(format!("unknown series '{s}'")))
    }
}

/// Cl₂(2πx), reduced through the complement when x > 1/2.
pub(crate) fn clausen_2pi_xc(x: f64, cx: f64) -> f64 {
    if x <= 0.5 {
        clausen2(2.0 * PI * x)
    } else {
        -clausen2(2.0 * PI * cx)
    }
}

fn build(
    label: &str,
    convention: Convention,
    printed_a0: f64,
    n_terms: usize,
    coeff: impl Fn(usize) -> (f64, f64),
    tail_a: TailModel,
    tail_b: TailModel,
) -> FourierSeries {
    let (a, b): (Vec<f64>, Vec<f64>) = (1..=n_terms).map(coeff).unzip();
    let (a0, a, b) = normalize(convention, printed_a0, a, b);
    FourierSeries {
        a0,
        a,
        b,
        label: label.to_string(),
        tail_a,
        tail_b,
    }
}

/// lnΓ(x) = ½ log 2π + Σ (1/(2n)) cos 2nπx + Σ ((C + log n)/(πn)) sin 2nπx.
pub fn kummer_series(n_terms: usize) -> FourierSeries {
    let c = constants();
    let mut tb = LogPowerSum::single(c.c_const / PI, 1.0, 0);
    tb.push(1.0 / PI, 1.0, 1);
    build(
        "kummer",
        Convention::ConstantTerm,
        0.5 * c.log_2pi,
        n_terms,
        |n| {
            let nf = n as f64;
            (0.5 / nf, (c.c_const + nf.ln()) / (PI * nf))
        },
        TailModel::exact(LogPowerSum::single(0.5, 1.0, 0)),
        TailModel::exact(tb),
    )
}

/// T_1, …, T_{N} using the direct sum below the asymptotic range.
fn t_values(n_terms: usize) -> Result<Vec<f64>> {
    static SMALL: OnceLock<Vec<f64>> = OnceLock::new();
    let small = SMALL.get_or_init(|| {
        let policy = TailPolicy::default();
        (1..T_ASYMPTOTIC_FROM)
            .map(|n| t_n(n, &policy).expect("n >= 1").value)
            .collect()
    });
    (1..=n_terms as u64)
        .map(|n| {
            if n < T_ASYMPTOTIC_FROM {
                Ok(small[n as usize - 1])
            } else {
                Ok(t_n_asymptotic(n)?.value)
            }
        })
        .collect()
}

/// Σ_k B_2k/(2k) n^(−2k−1) scaled by `scale`, with the next Bernoulli term
/// as omitted part: the large-n model of (γ + log n − H_n + 1/(2n)) · scale/n.
fn digamma_gap_model(scale: f64) -> TailModel {
    let h = harmonic_model();
    let mut expansion = LogPowerSum::new();
    for k in 1..=4 {
        expansion.push(scale * bernoulli_even(k) / (2.0 * k as f64), 2.0 * k as f64 + 1.0, 0);
    }
    TailModel {
        expansion,
        omitted: h.omitted.shift_power(1.0).scale(scale.abs()),
    }
}

/// x lnΓ(x), coefficients as in the closed form with T_n.
pub fn xlgamma_series(n_terms: usize) -> Result<FourierSeries> {
    let c = constants();
    let t = t_values(n_terms)?;
    let h = harmonic_prefix(n_terms);
    let pi2 = PI * PI;

    let rest = t_n_rest_model(T_MODEL_TERMS);
    let mut ta = LogPowerSum::single(-c.c_const / pi2, 2.0, 0);
    ta.push(-1.0 / (4.0 * pi2), 2.0, 1);
    let ta = ta.plus(&rest.expansion.scale(-1.0 / pi2));
    let tail_a = TailModel {
        expansion: ta,
        omitted: rest.omitted.scale(1.0 / pi2),
    };
    let gap = digamma_gap_model(1.0 / (2.0 * PI));
    let tail_b = TailModel {
        expansion: LogPowerSum::single(1.0 / (4.0 * PI), 2.0, 0).plus(&gap.expansion),
        omitted: gap.omitted,
    };

    Ok(build(
        "xlgamma",
        Convention::Standard,
        0.5 * (c.log_2pi - 4.0 * c.log_glaisher),
        n_terms,
        |n| {
            let nf = n as f64;
            let n2 = nf * nf;
            let a = 0.25 / nf - c.c_const / (pi2 * n2) - nf.ln() / (4.0 * pi2 * n2) - t[n - 1] / pi2;
            let b = (c.euler_gamma + nf.ln() - h[n]) / (2.0 * PI * nf) + 1.0 / (2.0 * PI * n2);
            (a, b)
        },
        tail_a,
        tail_b,
    ))
}

/// ln G(x); the printed a₀ is the constant term.
pub fn logbarnes_series(n_terms: usize) -> Result<FourierSeries> {
    let c = constants();
    let t = t_values(n_terms)?;
    let h = harmonic_prefix(n_terms);
    let pi2 = PI * PI;

    let rest = t_n_rest_model(T_MODEL_TERMS);
    let mut ta = LogPowerSum::single(-0.5, 1.0, 0);
    ta.push(1.0 / (4.0 * pi2), 2.0, 1);
    ta.push(-(c.c_const + 1.0) / (2.0 * pi2), 2.0, 0);
    let ta = ta.plus(&rest.expansion.scale(-1.0 / pi2));
    let tail_a = TailModel {
        expansion: ta,
        omitted: rest.omitted.scale(1.0 / pi2),
    };
    // b_n = (1/(2πn)) (1/(2n) − γ − log 4π² − log n − H_n)
    //     = −(log n)/(πn) − (γ + log 2π)/(πn) + (1/(2πn)) (γ + log n − H_n + 1/(2n))
    let gap = digamma_gap_model(1.0 / (2.0 * PI));
    let mut tb = LogPowerSum::single(-1.0 / PI, 1.0, 1);
    tb.push(-c.c_const / PI, 1.0, 0);
    let tail_b = TailModel {
        expansion: tb.plus(&gap.expansion),
        omitted: gap.omitted,
    };

    Ok(build(
        "logbarnes",
        Convention::ConstantTerm,
        1.0 / 12.0 - 2.0 * c.log_glaisher - 0.25 * c.log_2pi,
        n_terms,
        |n| {
            let nf = n as f64;
            let n2 = nf * nf;
            let a = (0.5 * nf.ln() - c.c_const - 1.0) / (2.0 * pi2 * n2) - 0.25 / nf - t[n - 1] / pi2;
            let b = (0.5 / nf - c.euler_gamma - (4.0 * pi2 * nf).ln() - h[n]) / (2.0 * PI * nf);
            (a, b)
        },
        tail_a,
        tail_b,
    ))
}

/// ln sin(πx), from the printed a₀ = −log 2, a_n = −1/(2n), which are half
/// the stored values.
pub fn logsin_series(n_terms: usize) -> FourierSeries {
    build(
        "logsin",
        Convention::HalfScale,
        -(2f64.ln()),
        n_terms,
        |n| (-0.5 / n as f64, 0.0),
        TailModel::exact(LogPowerSum::single(-1.0, 1.0, 0)),
        TailModel::default(),
    )
}

/// x Cl₂(2πx): a₀ = −ζ(3)/π, a_n = (H_n/n² − 3/(2n³))/π, b_n = 1/(2n²).
pub fn xclausen_series(n_terms: usize) -> FourierSeries {
    let h = harmonic_prefix(n_terms);
    let hm = harmonic_model();
    let weight = LogPowerSum::single(1.0 / PI, 2.0, 0);
    let tail_a = TailModel {
        expansion: hm
            .expansion
            .times(&weight)
            .plus(&LogPowerSum::single(-1.5 / PI, 3.0, 0)),
        omitted: hm.omitted.times(&weight),
    };
    build(
        "xclausen",
        Convention::Standard,
        -constants().zeta3 / PI,
        n_terms,
        |n| {
            let nf = n as f64;
            ((h[n] / (nf * nf) - 1.5 / nf.powi(3)) / PI, 0.5 / (nf * nf))
        },
        tail_a,
        TailModel::exact(LogPowerSum::single(0.5, 2.0, 0)),
    )
}

/// B₂(x) = (1/π²) Σ cos(2nπx)/n².
pub fn b2_series(n_terms: usize) -> FourierSeries {
    let pi2 = PI * PI;
    build(
        "b2",
        Convention::ConstantTerm,
        0.0,
        n_terms,
        |n| (1.0 / (pi2 * (n * n) as f64), 0.0),
        TailModel::exact(LogPowerSum::single(1.0 / pi2, 2.0, 0)),
        TailModel::default(),
    )
}

/// Cl₂(2πx) = Σ sin(2nπx)/n².
pub fn clausen_series(n_terms: usize) -> FourierSeries {
    build(
        "clausen",
        Convention::Standard,
        0.0,
        n_terms,
        |n| (0.0, 1.0 / (n * n) as f64),
        TailModel::default(),
        TailModel::exact(LogPowerSum::single(1.0, 2.0, 0)),
    )
}

/// Coefficients (α_{n,m}, β_{n,m}) of x·cos(2nπx); β is 0 for m = 0.
pub fn x_cos_coeffs(n: u64, m: u64) -> (f64, f64) {
    let alpha = match (n, m) {
        (0, 0) => 1.0,
        _ if n == m => 0.5,
        _ => 0.0,
    };
    let beta = if m == 0 {
        0.0
    } else if n == m {
        -1.0 / (4.0 * PI * m as f64)
    } else {
        let (nf, mf) = (n as f64, m as f64);
        mf / (PI * (nf - mf) * (nf + mf))
    };
    (alpha, beta)
}

/// Coefficients (α_{n,m}, β_{n,m}) of x·sin(2nπx), n ≥ 1.
pub fn x_sin_coeffs(n: u64, m: u64) -> (f64, f64) {
    let nf = n as f64;
    let alpha = if m == 0 {
        -1.0 / (PI * nf)
    } else if n == m {
        -1.0 / (4.0 * PI * nf)
    } else {
        let mf = m as f64;
        -nf / (PI * (nf - mf) * (nf + mf))
    };
    let beta = if n == m { 0.5 } else { 0.0 };
    (alpha, beta)
}

/// −scale · Σ_j n^{2j} m^(−2j−extra) for m ≥ first, the expansion of
/// scale·m^(2−extra)/(n² − m²), with a geometric bound on the remainder.
fn inverse_quadratic_model(n: u64, first: u64, extra: f64, scale: f64) -> TailModel {
    let n2 = (n * n) as f64;
    let ratio = n2 / (first as f64).powi(2);
    let mut expansion = LogPowerSum::new();
    let mut q = 1.0;
    let mut j = 0;
    while j == 0 || ratio.powi(j) > 1e-20 {
        expansion.push(-scale * q, 2.0 * j as f64 + extra, 0);
        q *= n2;
        j += 1;
        if j > 40 {
            break;
        }
    }
    let omitted = LogPowerSum::single(scale.abs() * q / (1.0 - ratio), 2.0 * j as f64 + extra, 0);
    TailModel { expansion, omitted }
}

/// The series of x·cos(2nπx) (`Cosine`) or x·sin(2nπx) (`Sine`) to
/// `n_terms`, which must be at least 4n so the tail models converge fast.
pub fn x_trig_series(kind: TrigKind, n: u64, n_terms: usize) -> Result<FourierSeries> {
    if kind == TrigKind::Sine && n == 0 {
        return Err(Error::Argument("x sin(0) has no expansion to build".into()));
    }
    if (n_terms as u64) < (4 * n).max(1) {
        return Err(Error::Argument(format!(
            "x-trig series for n = {n} needs at least {} terms",
            4 * n
        )));
    }
    let first = n_terms as u64 + 1;
    let (label, coeffs, tail_a, tail_b): (String, fn(u64, u64) -> (f64, f64), TailModel, TailModel) = match kind {
        TrigKind::Cosine => (
            format!("x cos(2*{n}*pi*x)"),
            x_cos_coeffs,
            TailModel::default(),
            // β = m/(π(n² − m²)) = −(1/π) Σ n^{2j} m^(−2j−1)
            inverse_quadratic_model(n, first, 1.0, 1.0 / PI),
        ),
        TrigKind::Sine => (
            format!("x sin(2*{n}*pi*x)"),
            x_sin_coeffs,
            // α = −n/(π(n² − m²)) = (n/π) Σ n^{2j} m^(−2j−2)
            inverse_quadratic_model(n, first, 2.0, -(n as f64) / PI),
            TailModel::default(),
        ),
    };
    let (a0, _) = coeffs(n, 0);
    let (a, b) = (1..=n_terms as u64).map(|m| coeffs(n, m)).unzip();
    Ok(FourierSeries {
        a0,
        a,
        b,
        label,
        tail_a,
        tail_b,
    })
}

fn product_model(x: &TailModel, y: &TailModel) -> TailModel {
    let expansion = x.expansion.times(&y.expansion);
    let omitted = x
        .expansion
        .abs()
        .times(&y.omitted)
        .plus(&x.omitted.times(&y.expansion.abs()))
        .plus(&x.omitted.times(&y.omitted));
    TailModel { expansion, omitted }
}

/// ∫₀¹ f g = ½ [½ a₀α₀ + Σ_{n≤N} (a_n α_n + b_n β_n)] plus the
/// Euler–Maclaurin tail of the coefficient products beyond N.
pub fn parseval_pair(f: &FourierSeries, g: &FourierSeries, n_terms: usize) -> Result<ApproxValue> {
    if n_terms > f.len() || n_terms > g.len() {
        return Err(Error::Argument(format!(
            "Parseval pairing to {n_terms} terms needs both series that long ({} and {})",
            f.len(),
            g.len()
        )));
    }
    let mut acc = Accumulator::new();
    acc.add(0.5 * (f.a0 * g.a0));
    for i in 0..n_terms {
        acc.add(f.a[i] * g.a[i]);
        acc.add(f.b[i] * g.b[i]);
    }
    let ta = product_model(&f.tail_a, &g.tail_a);
    let tb = product_model(&f.tail_b, &g.tail_b);
    let model = TailModel {
        expansion: ta.expansion.plus(&tb.expansion),
        omitted: ta.omitted.plus(&tb.omitted),
    };
    let tail = em_tail(&model, n_terms as u64 + 1, PARSEVAL_CORRECTIONS)?;
    let head = ApproxValue::new(acc.value(), 4.0 * f64::EPSILON * acc.abs_sum());
    Ok((head + tail) * 0.5)
}

/// Right-hand side of the Fourier-like expansion
/// ln G(x) = ζ′(−1) − (1/4π) Σ sin(2nπx)/n² + (C − 3/2)/(2π²) Σ cos(2nπx)/n²
///         + (1/2π²) Σ log n cos(2nπx)/n² + B₂(x)/4 + (x − 1) lnΓ(x),
/// truncated at N. The error estimate bounds each truncated sum by Abel
/// summation: |Σ_{n>N} c_n e^{2πinx}| ≤ c_{N+1} / sin(πx) for decreasing c_n.
pub fn connon_assemble(x: f64, n_terms: usize) -> Result<ApproxValue> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain("connon_assemble", x));
    }
    let c = constants();
    let cx = 1.0 - x;
    let (mut s_sin, mut s_cos, mut s_log) = (Accumulator::new(), Accumulator::new(), Accumulator::new());
    for n in 1..=n_terms {
        let nf = n as f64;
        let inv = 1.0 / (nf * nf);
        let cos = trig_xc(TrigKind::Cosine, n as u64, x, cx);
        s_sin.add(inv * trig_xc(TrigKind::Sine, n as u64, x, cx));
        s_cos.add(inv * cos);
        s_log.add(nf.ln() * inv * cos);
    }
    let pi2 = PI * PI;
    let k_cos = (c.c_const - 1.5) / (2.0 * pi2);
    let mut acc = Accumulator::new();
    acc.add(c.zeta_p_m1);
    acc.add(-s_sin.value() / (4.0 * PI));
    acc.add(k_cos * s_cos.value());
    acc.add(s_log.value() / (2.0 * pi2));
    acc.add(0.25 * bernoulli2(x));
    acc.add(-cx * ln_gamma(x)?);

    let next = n_terms as f64 + 1.0;
    let sin_half = (PI * x.min(cx)).sin();
    let abel = |c_next: f64| c_next / sin_half;
    let trunc = abel(1.0 / (next * next)) * (1.0 / (4.0 * PI) + k_cos.abs())
        + abel(next.ln() / (next * next)) / (2.0 * pi2);
    let rounding = 4.0 * f64::EPSILON * (acc.abs_sum() + s_sin.abs_sum() + s_cos.abs_sum() + s_log.abs_sum());
    Ok(ApproxValue::new(acc.value(), trunc + rounding))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{fourier_coeff_numeric, DEFAULT_MAX_LEVELS};
    use crate::special::barnes::ln_barnes_g;

    fn numeric(kind: SeriesKind, n: u64, trig: TrigKind) -> f64 {
        fourier_coeff_numeric(&kind.function(), n, trig, 1e-12, DEFAULT_MAX_LEVELS)
            .unwrap()
            .value
    }

    #[test]
    fn normalize_conventions() {
        let (a0, a, b) = normalize(Convention::Standard, 1.0, vec![2.0], vec![3.0]);
        assert_eq!((a0, a, b), (1.0, vec![2.0], vec![3.0]));
        let (a0, a, b) = normalize(Convention::ConstantTerm, 1.0, vec![2.0], vec![3.0]);
        assert_eq!((a0, a, b), (2.0, vec![2.0], vec![3.0]));
        let (a0, a, b) = normalize(Convention::HalfScale, 1.0, vec![2.0], vec![3.0]);
        assert_eq!((a0, a, b), (2.0, vec![4.0], vec![6.0]));
    }

    // One normalization check per series: the stored a₀ and first
    // coefficients against quadrature of 2∫f·trig.
    #[test]
    fn stored_convention_per_series() {
        for kind in SeriesKind::ALL {
            let s = kind.generate(3).unwrap();
            let a0 = numeric(kind, 0, TrigKind::Cosine);
            assert!((s.a0 - a0).abs() < 1e-9, "{kind}: a0 {} vs {a0}", s.a0);
            for n in 1..=3u64 {
                let an = numeric(kind, n, TrigKind::Cosine);
                let bn = numeric(kind, n, TrigKind::Sine);
                assert!((s.a_n(n as usize) - an).abs() < 1e-9, "{kind}: a{n} {} vs {an}", s.a_n(n as usize));
                assert!((s.b_n(n as usize) - bn).abs() < 1e-9, "{kind}: b{n} {} vs {bn}", s.b_n(n as usize));
            }
        }
    }

    #[test]
    fn printed_values() {
        let c = constants();
        let k = kummer_series(3);
        assert!((k.constant_term() - 0.5 * c.log_2pi).abs() < 1e-15);
        assert!((k.b_n(1) - c.c_const / PI).abs() < 1e-15);
        let x = xlgamma_series(1).unwrap();
        assert!((x.a0 - 0.5 * (c.log_2pi - 4.0 * c.log_glaisher)).abs() < 1e-15);
        assert!((x.b_n(1) - c.euler_gamma / (2.0 * PI)).abs() < 1e-15);
        let g = logbarnes_series(1).unwrap();
        let g1 = 1.0 / 12.0 - 0.25 * c.log_2pi - 2.0 * c.log_glaisher;
        assert!((g.constant_term() - g1).abs() < 1e-15);
        let b1 = (0.5 - c.euler_gamma - (4.0 * PI * PI).ln() - 1.0) / (2.0 * PI);
        assert!((g.b_n(1) - b1).abs() < 1e-15);
        assert!((b2_series(2).a_n(2) - 1.0 / (4.0 * PI * PI)).abs() < 1e-17);
        assert!((xclausen_series(2).a_n(2) - (0.375 - 0.1875) / PI).abs() < 1e-16);
        assert!((x_cos_coeffs(2, 1).1 - 1.0 / (3.0 * PI)).abs() < 1e-16);
        assert_eq!(x_cos_coeffs(0, 0).0, 1.0);
        assert_eq!(x_cos_coeffs(3, 3), (0.5, -1.0 / (12.0 * PI)));
        assert_eq!(x_sin_coeffs(3, 3), (-1.0 / (12.0 * PI), 0.5));
    }

    #[test]
    fn mpmath_coefficients() {
        // 2∫ x lnΓ(x) trig, 2∫ ln G(x) trig at 25 digits.
        let x = xlgamma_series(3).unwrap();
        let g = logbarnes_series(3).unwrap();
        let xa = [-0.098_365_680_934_417_44, -0.033_829_730_424_214_95, -0.017_361_595_129_874_375];
        let xb = [0.091_866_726_299_153_99, 0.021_514_791_641_792_226, 0.009_327_962_648_113_625];
        let ga = [-0.526_676_245_684_374, -0.257_128_560_015_118_7, -0.169_878_730_243_654_5];
        let gb = [-0.756_458_637_673_659_5, -0.493_071_322_534_453_4, -0.372_329_660_299_078];
        for n in 1..=3 {
            assert!((x.a_n(n) - xa[n - 1]).abs() < 1e-13);
            assert!((x.b_n(n) - xb[n - 1]).abs() < 1e-15);
            assert!((g.a_n(n) - ga[n - 1]).abs() < 1e-13);
            assert!((g.b_n(n) - gb[n - 1]).abs() < 1e-15);
        }
        assert!((g.a0 + 1.747_289_774_673_143).abs() < 1e-14);
    }

    #[test]
    fn tail_models_track_coefficients() {
        // The models only serve beyond the stored range, so compare there.
        // Closed forms with a 1/(4n) term cancel down to O(1/n²), leaving
        // rounding at the level of ε/n.
        for kind in SeriesKind::ALL {
            let s = kind.generate(4000).unwrap();
            for n in [1000usize, 4000] {
                let nf = n as f64;
                for (coef, model) in [(s.a_n(n), &s.tail_a), (s.b_n(n), &s.tail_b)] {
                    let m = model.expansion.eval(nf);
                    let bound = model.omitted.majorant(nf) + 1e-12 * coef.abs() + 1e-14 / nf;
                    assert!((coef - m).abs() <= bound, "{kind} n={n}: {coef} vs {m}");
                }
            }
        }
    }

    #[test]
    fn partial_sums_converge() {
        let kinds = [
            SeriesKind::Kummer,
            SeriesKind::Xlgamma,
            SeriesKind::Logbarnes,
            SeriesKind::Logsin,
            SeriesKind::Xclausen,
            SeriesKind::B2,
        ];
        for kind in kinds {
            let s = kind.generate(100_000).unwrap();
            for x in [0.1, 0.25, 0.5, 0.7, 0.9] {
                let f = kind.evaluate(x).unwrap();
                let e4 = (s.partial_sum(x, 10_000).unwrap() - f).abs();
                let e5 = (s.partial_sum(x, 100_000).unwrap() - f).abs();
                assert!(e4 < 5e-3, "{kind} x={x}: {e4}");
                assert!(e5 < e4, "{kind} x={x}: {e5} !< {e4}");
            }
        }
    }

    #[test]
    fn partial_sums_at_half() {
        let k = kummer_series(10_000);
        assert!((k.partial_sum(0.5, 10_000).unwrap() - 0.5 * PI.ln()).abs() < 5e-4);
        let g = logbarnes_series(10_000).unwrap();
        assert!((g.partial_sum(0.5, 10_000).unwrap() - ln_barnes_g(0.5).unwrap()).abs() < 5e-4);
    }

    #[test]
    fn coefficients_decay() {
        for kind in SeriesKind::ALL {
            let s = kind.generate(1000).unwrap();
            for n in [100usize, 1000] {
                assert!(s.a_n(n).abs() <= 10.0 * s.a_n(n / 10).abs() + 1e-300);
                assert!(s.b_n(n).abs() <= 10.0 * s.b_n(n / 10).abs() + 1e-300);
            }
            assert!(s.a.iter().chain(&s.b).all(|v| v.is_finite()));
        }
    }

    #[test]
    fn parseval_examples() {
        let n = 100_000;
        let ls = logsin_series(n);
        let v = parseval_pair(&ls, &ls, n).unwrap();
        let expected = PI * PI / 12.0 + 2f64.ln().powi(2);
        assert!((v.value - expected).abs() < 1e-12, "{v:?}");
        let k = kummer_series(n);
        let v = parseval_pair(&k, &ls, n).unwrap();
        let expected = -0.5 * 2f64.ln() * constants().log_2pi - PI * PI / 24.0;
        assert!((v.value - expected).abs() < 1e-12, "{v:?}");
        let cl = clausen_series(n);
        let v = parseval_pair(&cl, &cl, n).unwrap();
        assert!((v.value / (4.0 * PI * PI) - PI * PI / 720.0).abs() < 1e-14);
        assert!(v.abs_err < 1e-12);
    }

    #[test]
    fn parseval_is_symmetric() {
        let n = 5000;
        let all: Vec<_> = SeriesKind::ALL.iter().map(|k| k.generate(n).unwrap()).collect();
        for f in &all {
            for g in &all {
                assert_eq!(parseval_pair(f, g, n).unwrap(), parseval_pair(g, f, n).unwrap());
            }
        }
    }

    #[test]
    fn parseval_kummer_square() {
        // 2∫ ln²Γ from the Kummer coefficients.
        let n = 100_000;
        let k = kummer_series(n);
        let v = parseval_pair(&k, &k, n).unwrap();
        assert!((v.value - 1.866_317_083_793_562_1).abs() < 1e-12, "{v:?}");
    }

    #[test]
    fn xlgamma_from_kummer_via_tables() {
        let k = kummer_series(20_000);
        let x = xlgamma_series(8).unwrap();
        for n in 1..=8u64 {
            let cos = x_trig_series(TrigKind::Cosine, n, 20_000).unwrap();
            let a = 2.0 * parseval_pair(&k, &cos, 20_000).unwrap().value;
            assert!((a - x.a_n(n as usize)).abs() < 1e-10, "a{n}: {a} vs {}", x.a_n(n as usize));
            let sin = x_trig_series(TrigKind::Sine, n, 20_000).unwrap();
            let b = 2.0 * parseval_pair(&k, &sin, 20_000).unwrap().value;
            assert!((b - x.b_n(n as usize)).abs() < 1e-10, "b{n}: {b} vs {}", x.b_n(n as usize));
        }
        let x0 = x_trig_series(TrigKind::Cosine, 0, 20_000).unwrap();
        let a0 = 2.0 * parseval_pair(&k, &x0, 20_000).unwrap().value;
        assert!((a0 - x.a0).abs() < 1e-10);
    }

    #[test]
    fn connon_matches_barnes() {
        for (x, tol) in [(0.5, 1e-6), (0.25, 1e-5), (0.75, 1e-5)] {
            let v = connon_assemble(x, 100_000).unwrap();
            let g = ln_barnes_g(x).unwrap();
            assert!((v.value - g).abs() < tol, "x={x}: {v:?} vs {g}");
            assert!((v.value - g).abs() <= v.abs_err + 1e-13);
        }
        assert!(connon_assemble(0.0, 10).is_err());
        assert!(connon_assemble(1.0, 10).is_err());
    }

    #[test]
    fn parse_labels() {
        for kind in SeriesKind::ALL {
            assert_eq!(kind.label().parse::<SeriesKind>().unwrap(), kind);
        }
        assert!("nope".parse::<SeriesKind>().is_err());
    }
}
