//! The verification catalog.
//!
//! Every identity is evaluated by two separate routes: the left side by
//! quadrature or direct summation, the right side from closed forms, table
//! constants and accelerated series. Neither side reuses the other's path.
//!
//! Printed formulas with more than one plausible reading are adjudication
//! cases: each reading is evaluated against one independently computed
//! value, and a verdict is given only when one reading is clearly best.

use std::f64::consts::{E, PI};
use std::sync::OnceLock;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::fourier::{clausen_2pi_xc, connon_assemble, kummer_series, parseval_pair, SeriesKind};
use crate::quadrature::{
    fourier_coeff_numeric, integrate, moment_e, moment_g, moment_l, u_integral, IntegrandSpec, TrigKind,
    DEFAULT_MAX_LEVELS, MAX_LEVELS,
};
use crate::series::{
    harmonic_zeta, harmonic_zeta_prime2, log_rational_sum, reciprocal_cubic_diff_sum, reciprocal_square_diff_sum,
    t_n, v_sum, x2z_moment, z_with_complement, TailPolicy,
};
use crate::special::barnes::{ln_barnes_g, ln_barnes_g_pos};
use crate::special::digamma::digamma_complex;
use crate::special::gamma::{ln_gamma, ln_gamma_pos, ln_gamma_with_complement};
use crate::special::harmonic::harmonic;
use crate::special::zeta::zeta;
use crate::sum::Accumulator;
use crate::{constants, ApproxValue, Error, Result};

/// Published value of ζ_H′(2), to its printed precision.
pub const PRINTED_ZETA_H_PRIME2: f64 = 2.623865966;
pub const PRINTED_U: f64 = 0.4785935;
pub const PRINTED_V: f64 = 0.055645894;

/// Number of Kummer coefficients in the Parseval evaluation of L₂.
pub const PARSEVAL_TERMS: usize = 100_000;
/// Largest Fourier index checked in the coefficient tables.
pub const COEFF_MAX_INDEX: u64 = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuitePolicy {
    pub tail: TailPolicy,
    pub max_levels: usize,
    /// Absolute error target for the quadrature sides.
    pub quad_target: f64,
    /// Multiplier applied to every identity tolerance.
    pub tol_scale: f64,
}

impl Default for SuitePolicy {
    fn default() -> Self {
        Self {
            tail: TailPolicy::default(),
            max_levels: DEFAULT_MAX_LEVELS,
            quad_target: 1e-12,
            tol_scale: 1.0,
        }
    }
}

impl SuitePolicy {
    pub fn validate(&self) -> Result<()> {
        self.tail.validate()?;
        if self.max_levels == 0 || self.max_levels > MAX_LEVELS {
            return Err(Error::Argument(format!(
                "max_levels = {} is outside 1..={MAX_LEVELS}",
                self.max_levels
            )));
        }
        if !(self.tol_scale > 0.0 && self.tol_scale.is_finite()) {
            return Err(Error::Argument(format!("tol_scale = {} must be positive", self.tol_scale)));
        }
        Ok(())
    }
}

type Cell = OnceLock<Result<ApproxValue>>;

/// Evaluation context: the policy plus values shared by several identities,
/// each computed at most once.
#[derive(Debug, Default)]
pub struct Context {
    policy: SuitePolicy,
    zeta_h_prime2: Cell,
    u: Cell,
    v: Cell,
    l2_quad: Cell,
    g2_quad: Cell,
    gperg_quad: Cell,
    gg_quad: Cell,
    i4_quad: Cell,
    exp_quad: Cell,
}

impl Context {
    pub fn new(policy: SuitePolicy) -> Result<Self> {
        policy.validate()?;
        Ok(Self {
            policy,
            ..Self::default()
        })
    }

    pub fn policy(&self) -> &SuitePolicy {
        &self.policy
    }

    fn cached(cell: &Cell, f: impl FnOnce() -> Result<ApproxValue>) -> Result<ApproxValue> {
        cell.get_or_init(f).clone()
    }

    fn quad(&self, spec: IntegrandSpec) -> Result<ApproxValue> {
        Ok(integrate(&spec, self.policy.quad_target, self.policy.max_levels)?.approx())
    }

    /// Σ_{n≥2} H_n ln n / n² by the series engine.
    pub fn zeta_h_prime2(&self) -> Result<ApproxValue> {
        Self::cached(&self.zeta_h_prime2, || harmonic_zeta_prime2(&self.policy.tail))
    }

    /// U = ∫₀¹ Z².
    pub fn u(&self) -> Result<ApproxValue> {
        Self::cached(&self.u, || u_integral(self.policy.max_levels))
    }

    /// V = Σ ζ(2n+1) E_{2n+2}/(n+1), with E_n from quadrature.
    pub fn v(&self) -> Result<ApproxValue> {
        let levels = self.policy.max_levels;
        Self::cached(&self.v, || v_sum(&|m| moment_e(m as u32, levels)))
    }

    fn l2_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.l2_quad, || moment_l(2, self.policy.max_levels))
    }

    fn g2_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.g2_quad, || moment_g(2, self.policy.max_levels))
    }

    /// ∫ log²(G(x)/G(1−x)).
    fn gperg_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.gperg_quad, || {
            self.quad(
                IntegrandSpec::new("log^2(G(x)/G(1-x))", |x, cx| {
                    (ln_barnes_g_pos(x) - ln_barnes_g_pos(cx)).powi(2)
                })
                .singular_left()
                .singular_right(),
            )
        })
    }

    /// ∫ log²(G(x)G(1−x)).
    fn gg_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.gg_quad, || {
            self.quad(
                IntegrandSpec::new("log^2(G(x)G(1-x))", |x, cx| {
                    (ln_barnes_g_pos(x) + ln_barnes_g_pos(cx)).powi(2)
                })
                .singular_left()
                .singular_right(),
            )
        })
    }

    /// 2∫ x lnΓ(x) log(sin(πx)/π).
    fn i4_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.i4_quad, || {
            Ok(self.quad(
                IntegrandSpec::new("x lnGamma(x) log(sin(pi x)/pi)", |x, cx| {
                    x * ln_gamma_with_complement(x, cx) * (log_sin_xc(x, cx) - PI.ln())
                })
                .singular_left()
                .singular_right(),
            )? * 2.0)
        })
    }

    /// (2/(e−1)) ∫ eˣ lnΓ(x).
    fn exp_quad(&self) -> Result<ApproxValue> {
        Self::cached(&self.exp_quad, || {
            Ok(self.quad(
                IntegrandSpec::new("exp(x) lnGamma(x)", |x, cx| x.exp() * ln_gamma_with_complement(x, cx))
                    .singular_left(),
            )? * (2.0 / (E - 1.0)))
        })
    }
}

fn log_sin_xc(x: f64, cx: f64) -> f64 {
    (PI * x.min(cx)).sin().ln()
}

/// A closed form given as a list of terms, summed with compensation; the
/// error allows a few ulps per term.
fn cf(terms: &[f64]) -> ApproxValue {
    let mut acc = Accumulator::new();
    for &t in terms {
        acc.add(t);
    }
    ApproxValue::new(acc.value(), 16.0 * f64::EPSILON * acc.abs_sum())
}

/// Closed forms built from the constants table. Each function takes the
/// series-valued quantities it needs as arguments.
pub mod closed {
    use super::*;

    fn pi2() -> f64 {
        PI * PI
    }

    /// ∫₀¹ lnΓ(x + t) dx = ½ log 2π + t log t − t.
    pub fn raabe(t: f64) -> ApproxValue {
        let l = constants().log_2pi;
        if t == 0.0 {
            cf(&[0.5 * l])
        } else {
            cf(&[0.5 * l, t * t.ln(), -t])
        }
    }

    /// L₂ with `pi_sq_term` as the π² term (π²/48 is the verified one).
    pub fn l2(pi_sq_term: f64) -> ApproxValue {
        let c = constants();
        let g = c.euler_gamma;
        let l = c.log_2pi;
        cf(&[
            g * g / 12.0,
            pi_sq_term,
            g * l / 6.0,
            l * l / 3.0,
            -c.c_const * c.zeta_p_2 / pi2(),
            c.zeta_pp_2 / (2.0 * pi2()),
        ])
    }

    pub fn g1() -> ApproxValue {
        let c = constants();
        cf(&[1.0 / 12.0, -0.25 * c.log_2pi, -2.0 * c.log_glaisher])
    }

    /// E₁ = ∫ x lnΓ.
    pub fn e1() -> ApproxValue {
        let c = constants();
        cf(&[c.zeta_p_2 / (2.0 * pi2()), c.log_2pi / 6.0, -c.euler_gamma / 12.0])
    }

    /// E₂ = ∫ x² lnΓ, from the Kummer series paired with x².
    pub fn e2() -> ApproxValue {
        let c = constants();
        cf(&[
            c.log_2pi / 12.0,
            -c.euler_gamma / 12.0,
            c.zeta3 / (4.0 * pi2()),
            c.zeta_p_2 / (2.0 * pi2()),
        ])
    }

    pub fn x2_log2sin() -> ApproxValue {
        let c = constants();
        let l2 = 2f64.ln();
        cf(&[13.0 * pi2() / 360.0, l2 * l2 / 3.0, l2 * c.zeta3 / pi2()])
    }

    pub fn x2_logsin() -> ApproxValue {
        cf(&[-2f64.ln() / 3.0, -constants().zeta3 / (2.0 * pi2())])
    }

    pub fn i2() -> ApproxValue {
        let c = constants();
        let l = c.log_2pi;
        cf(&[13.0 * pi2() / 360.0, l * l / 3.0, l * c.zeta3 / pi2()])
    }

    pub fn i3() -> ApproxValue {
        cf(&[pi2() / 720.0])
    }

    /// ∫ x lnΓ(x) log sin(πx), given ζ_H′(2).
    pub fn xlgamma_logsin(zeta_h_prime2: ApproxValue) -> ApproxValue {
        let c = constants();
        cf(&[
            -0.25 * 2f64.ln() * (c.log_2pi - 4.0 * c.log_glaisher),
            -pi2() / 48.0,
            c.c_const * c.zeta3 / (2.0 * pi2()),
            c.zeta_p_3 / (2.0 * pi2()),
        ]) + zeta_h_prime2 * (1.0 / (2.0 * pi2()))
    }

    pub fn lgamma_logsin() -> ApproxValue {
        let c = constants();
        cf(&[-0.5 * 2f64.ln() * c.log_2pi, -pi2() / 24.0])
    }

    /// Everything in I₄ except the ζ_H′(2)/π² term.
    fn i4_rest() -> ApproxValue {
        let c = constants();
        let l = c.log_2pi;
        cf(&[
            -pi2() / 24.0,
            -0.5 * l * (l - 4.0 * c.log_glaisher),
            c.euler_gamma * c.zeta3 / pi2(),
            c.zeta3 * l / pi2(),
            c.zeta_p_3 / pi2(),
        ])
    }

    pub fn i4(zeta_h_prime2: ApproxValue) -> ApproxValue {
        i4_rest() + zeta_h_prime2 * (1.0 / pi2())
    }

    /// ζ_H′(2) solved from a value of I₄.
    pub fn zeta_h_prime2_from_i4(i4: ApproxValue) -> ApproxValue {
        (i4 - i4_rest()) * pi2()
    }

    pub fn i5() -> ApproxValue {
        let c = constants();
        cf(&[c.c_const * c.zeta3 / (2.0 * pi2()), -c.zeta_p_3 / (2.0 * pi2())])
    }

    pub fn i6() -> ApproxValue {
        let c = constants();
        cf(&[c.zeta3 * c.log_2pi / (2.0 * pi2()), pi2() / 720.0])
    }

    /// ∫ log²(G(x)/G(1−x)) with `lead` multiplying (γ + 2 log 2π) and the
    /// trailing term −(γ/6)(log 2 + `pi_sign`·log π).
    pub fn gperg(lead: f64, pi_sign: f64, zeta_h_prime2: ApproxValue) -> ApproxValue {
        let c = constants();
        let g = c.euler_gamma;
        cf(&[
            lead * (g + 2.0 * c.log_2pi),
            c.zeta_pp_2 / (2.0 * pi2()),
            c.zeta_p_3 / (2.0 * pi2()),
            3.0 * c.zeta3 / pi2() * (0.5 * g + c.log_2pi),
            13.0 * pi2() / 720.0,
            -g * g / 12.0,
            -g / 6.0 * (2f64.ln() + pi_sign * PI.ln()),
        ]) + zeta_h_prime2 * (1.0 / pi2())
    }

    /// The reading of the G/G(1−x) integral confirmed by quadrature.
    pub fn gperg_adjudicated(zeta_h_prime2: ApproxValue) -> ApproxValue {
        gperg(2.0 * constants().log_glaisher, 1.0, zeta_h_prime2)
    }

    /// (1/540)(1440 log A − 1440 `zeta_prime` − 108γ − 157).
    pub fn x2z(zeta_prime: f64) -> ApproxValue {
        let c = constants();
        cf(&[
            1440.0 * c.log_glaisher / 540.0,
            -1440.0 * zeta_prime / 540.0,
            -108.0 * c.euler_gamma / 540.0,
            -157.0 / 540.0,
        ])
    }

    /// ∫ log²(G(x)G(1−x)) with `uv` in place of the U + V term.
    pub fn gg1mx(uv: ApproxValue) -> ApproxValue {
        let c = constants();
        let g1 = c.euler_gamma + 1.0;
        l2(pi2() / 48.0) + cf(&[g1 * g1 / 5.0]) + e2() * (2.0 * g1) + x2z(c.zeta_p_m3) * (2.0 * g1) + uv
    }

    /// G₂ from the master formula with `uv` in place of U + V.
    pub fn g2_master(uv: ApproxValue, zeta_h_prime2: ApproxValue) -> ApproxValue {
        let c = constants();
        let g = c.euler_gamma;
        let l = c.log_2pi;
        let four_g2 = cf(&[
            c.log_glaisher * (10.0 / 3.0 + 22.0 / 3.0 * g + 6.0 * l),
            c.zeta_pp_2 / pi2(),
            -16.0 / 3.0 * c.zeta_p_m3 * (1.0 + g),
            c.zeta_p_3 / (2.0 * pi2()),
            c.zeta3 / pi2() * (2.0 * g + 0.5 + 3.0 * PI.ln() + 3.0 * 2f64.ln()),
            7.0 * pi2() / 180.0,
            -11.0 * g * g / 30.0,
            -157.0 * g / 270.0,
            -103.0 / 270.0,
            l * l / 6.0,
            l / 3.0,
        ]) + uv
            + zeta_h_prime2 * (1.0 / pi2());
        four_g2 * 0.25
    }

    /// ζ_H′(2) expressed through ∫ x ln²Γ.
    pub fn zeta_h_prime2_expression(x_lgamma_sq: ApproxValue) -> ApproxValue {
        let c = constants();
        let g = c.euler_gamma;
        let l = c.log_2pi;
        cf(&[
            pi2() / 6.0 * (pi2() / 8.0 - g * g / 2.0 + l * l),
            pi2() * g * (2.0 * c.log_glaisher - l / 6.0),
            -c.c_const * c.zeta3,
            -c.zeta_p_3,
            0.5 * c.zeta_pp_2,
        ]) - x_lgamma_sq * (2.0 * pi2())
    }

    pub fn xlgamma_sin() -> ApproxValue {
        cf(&[constants().euler_gamma / (4.0 * PI)])
    }

    /// ∫ x lnΓ cos 2πx given Σ_{n≥2} ln n/(n² − 1).
    pub fn xlgamma_cos(log_sum: ApproxValue) -> ApproxValue {
        cf(&[0.125, -constants().c_const / (2.0 * pi2())]) - log_sum * (1.0 / (2.0 * pi2()))
    }

    /// Re ψ(i/2π).
    pub fn re_digamma_i_over_2pi() -> Result<ApproxValue> {
        let psi = digamma_complex(Complex64::new(0.0, 1.0 / (2.0 * PI)))?;
        Ok(ApproxValue::new(psi.re, 64.0 * f64::EPSILON * psi.norm()))
    }

    /// `prefactor` + Re ψ(i/2π) − 4 Σ ln n/(1 + 4π²n²).
    pub fn exp_lgamma(prefactor: f64, log_sum: ApproxValue) -> Result<ApproxValue> {
        Ok(cf(&[prefactor]) + re_digamma_i_over_2pi()? - log_sum * 4.0)
    }

    pub fn coth_half() -> f64 {
        1.0 / 0.5f64.tanh()
    }
}

/// One numeric comparison inside an identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparison {
    pub lhs: ApproxValue,
    pub rhs: ApproxValue,
}

impl Comparison {
    pub fn residual(&self) -> f64 {
        (self.lhs.value - self.rhs.value).abs()
    }
}

type Entries = Vec<(String, Comparison)>;

pub struct Identity {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub description: &'static str,
    /// Pass threshold on the largest residual, before `tol_scale`.
    pub tolerance: f64,
    evaluate: fn(&Context) -> Result<Entries>,
}

impl std::fmt::Debug for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl Identity {
    pub fn matches(&self, filter: &str) -> bool {
        self.id == filter || self.tags.contains(&filter)
    }

    /// Evaluates both sides of every comparison in the identity.
    pub fn comparisons(&self, ctx: &Context) -> Result<Vec<(String, Comparison)>> {
        (self.evaluate)(ctx)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub description: String,
    /// Sides of the comparison with the largest residual.
    pub lhs: f64,
    pub rhs: f64,
    pub lhs_err: f64,
    pub rhs_err: f64,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Number of comparisons; tables hold more than one.
    pub comparisons: usize,
    /// Label of the worst comparison in a table.
    pub worst: Option<String>,
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: std::time::Duration,
}

impl IdentityReport {
    /// Combined error estimate of both sides at the worst comparison.
    pub fn error_budget(&self) -> f64 {
        self.lhs_err + self.rhs_err
    }
}

fn single(lhs: ApproxValue, rhs: ApproxValue) -> Result<Entries> {
    Ok(vec![(String::new(), Comparison { lhs, rhs })])
}

fn table<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<(String, Comparison)> + Sync + Send,
) -> Result<Entries> {
    items.par_iter().map(f).collect()
}

fn coeff_table(ctx: &Context, kind: SeriesKind) -> Result<Entries> {
    let series = kind.generate(COEFF_MAX_INDEX as usize)?;
    let function = kind.function();
    let mut jobs = vec![(TrigKind::Cosine, 0u64)];
    for n in 1..=COEFF_MAX_INDEX {
        jobs.push((TrigKind::Cosine, n));
        jobs.push((TrigKind::Sine, n));
    }
    table(&jobs, |&(trig, n)| {
        let lhs = fourier_coeff_numeric(&function, n, trig, ctx.policy.quad_target, ctx.policy.max_levels)?;
        let (label, closed) = match trig {
            TrigKind::Cosine => (format!("a{n}"), series.a_n(n as usize)),
            TrigKind::Sine => (format!("b{n}"), series.b_n(n as usize)),
        };
        let rhs = ApproxValue::new(closed, 64.0 * f64::EPSILON * closed.abs().max(1e-3));
        Ok((label, Comparison { lhs, rhs }))
    })
}

/// 500 log-spaced points in [0.05, 50], snapped to multiples of 2⁻⁴⁰ so
/// that x + 1 is exact.
pub fn functional_equation_grid() -> Vec<f64> {
    let (lo, hi) = (0.05f64.ln(), 50f64.ln());
    let scale = 2f64.powi(40);
    (0..500)
        .map(|i| ((lo + (hi - lo) * i as f64 / 499.0).exp() * scale).round() / scale)
        .collect()
}

fn eval_raabe(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("lnGamma(x)", |x, cx| ln_gamma_with_complement(x, cx)).singular_left(),
    )?;
    single(lhs, closed::raabe(0.0))
}

fn eval_raabe_shifted(ctx: &Context) -> Result<Entries> {
    table(&[0.5, 1.0, 2.0], |&t| {
        let lhs = ctx.quad(IntegrandSpec::from_fn("lnGamma(x+t)", move |x| ln_gamma_pos(x + t)))?;
        Ok((format!("t={t}"), Comparison { lhs, rhs: closed::raabe(t) }))
    })
}

fn eval_functional_equation(_: &Context) -> Result<Entries> {
    table(&functional_equation_grid(), |&x| {
        let lhs = ln_barnes_g(x + 1.0)?;
        let rhs = ln_gamma(x)? + ln_barnes_g(x)?;
        // One unit in the last place: at x near 50 the values are near 3000,
        // where the spacing of doubles is already 4.5e-13.
        let err = (f64::from_bits(lhs.abs().to_bits() + 1) - lhs.abs()).max(f64::MIN_POSITIVE);
        Ok((
            format!("x={x}"),
            Comparison {
                lhs: ApproxValue::new(lhs, err),
                rhs: ApproxValue::new(rhs, err),
            },
        ))
    })
}

fn eval_l2(ctx: &Context) -> Result<Entries> {
    single(ctx.l2_quad()?, closed::l2(PI * PI / 48.0))
}

fn eval_l2_parseval(ctx: &Context) -> Result<Entries> {
    let k = kummer_series(PARSEVAL_TERMS);
    single(ctx.l2_quad()?, parseval_pair(&k, &k, PARSEVAL_TERMS)?)
}

fn eval_g1(ctx: &Context) -> Result<Entries> {
    single(moment_g(1, ctx.policy.max_levels)?, closed::g1())
}

fn eval_e1(ctx: &Context) -> Result<Entries> {
    single(moment_e(1, ctx.policy.max_levels)?, closed::e1())
}

fn eval_e2(ctx: &Context) -> Result<Entries> {
    single(moment_e(2, ctx.policy.max_levels)?, closed::e2())
}

fn eval_i2(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("x^2 log^2(sin(pi x)/pi)", |x, cx| {
            x * x * (log_sin_xc(x, cx) - PI.ln()).powi(2)
        })
        .singular_left()
        .singular_right(),
    )?;
    single(lhs, closed::i2())
}

fn eval_x2_log2sin(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("x^2 log^2 sin(pi x)", |x, cx| x * x * log_sin_xc(x, cx).powi(2))
            .singular_left()
            .singular_right(),
    )?;
    single(lhs, closed::x2_log2sin())
}

fn eval_x2_logsin(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("x^2 log sin(pi x)", |x, cx| x * x * log_sin_xc(x, cx))
            .singular_left()
            .singular_right(),
    )?;
    single(lhs, closed::x2_logsin())
}

fn eval_i3(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("Cl2(2 pi x)^2", |x, cx| clausen_2pi_xc(x, cx).powi(2))
            .singular_left()
            .singular_right(),
    )? * (1.0 / (4.0 * PI * PI));
    single(lhs, closed::i3())
}

fn eval_i4(ctx: &Context) -> Result<Entries> {
    single(ctx.i4_quad()?, closed::i4(ctx.zeta_h_prime2()?))
}

fn eval_xlgamma_logsin(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("x lnGamma(x) log sin(pi x)", |x, cx| {
            x * ln_gamma_with_complement(x, cx) * log_sin_xc(x, cx)
        })
        .singular_left()
        .singular_right(),
    )?;
    single(lhs, closed::xlgamma_logsin(ctx.zeta_h_prime2()?))
}

fn eval_lgamma_logsin(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("lnGamma(x) log sin(pi x)", |x, cx| {
            ln_gamma_with_complement(x, cx) * log_sin_xc(x, cx)
        })
        .singular_left()
        .singular_right(),
    )?;
    single(lhs, closed::lgamma_logsin())
}

fn eval_i5(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("lnGamma(x) Cl2(2 pi x)", |x, cx| {
            ln_gamma_with_complement(x, cx) * clausen_2pi_xc(x, cx)
        })
        .singular_left()
        .singular_right(),
    )? * (1.0 / PI);
    single(lhs, closed::i5())
}

fn eval_i6(ctx: &Context) -> Result<Entries> {
    let lhs = ctx.quad(
        IntegrandSpec::new("x log(sin(pi x)/pi) Cl2(2 pi x)", |x, cx| {
            x * (log_sin_xc(x, cx) - PI.ln()) * clausen_2pi_xc(x, cx)
        })
        .singular_left()
        .singular_right(),
    )? * (1.0 / PI);
    single(lhs, closed::i6())
}

fn eval_gperg(ctx: &Context) -> Result<Entries> {
    single(ctx.gperg_quad()?, closed::gperg_adjudicated(ctx.zeta_h_prime2()?))
}

fn eval_gg1mx(ctx: &Context) -> Result<Entries> {
    single(ctx.gg_quad()?, closed::gg1mx(ctx.u()? + ctx.v()? * 2.0))
}

fn eval_g2_master(ctx: &Context) -> Result<Entries> {
    single(ctx.g2_quad()?, closed::g2_master(ctx.u()? + ctx.v()? * 2.0, ctx.zeta_h_prime2()?))
}

fn eval_g2_split(ctx: &Context) -> Result<Entries> {
    single(ctx.g2_quad()?, (ctx.gperg_quad()? + ctx.gg_quad()?) * 0.25)
}

fn x2z_quad(ctx: &Context) -> Result<ApproxValue> {
    ctx.quad(
        IntegrandSpec::new("t^2 Z(t)", |t, ct| t * t * z_with_complement(t, ct).value).singular_right(),
    )
}

fn eval_x2z(ctx: &Context) -> Result<Entries> {
    single(x2z_quad(ctx)?, x2z_moment()?)
}

fn x_lgamma_sq_quad(ctx: &Context) -> Result<ApproxValue> {
    ctx.quad(
        IntegrandSpec::new("x lnGamma(x)^2", |x, cx| x * ln_gamma_with_complement(x, cx).powi(2)).singular_left(),
    )
}

fn eval_zeta_h_expression(ctx: &Context) -> Result<Entries> {
    single(ctx.zeta_h_prime2()?, closed::zeta_h_prime2_expression(x_lgamma_sq_quad(ctx)?))
}

fn eval_zeta_h_from_i4(ctx: &Context) -> Result<Entries> {
    single(ctx.zeta_h_prime2()?, closed::zeta_h_prime2_from_i4(ctx.i4_quad()?))
}

fn eval_zeta_h_euler(ctx: &Context) -> Result<Entries> {
    single(harmonic_zeta(2.0, &ctx.policy.tail)?, cf(&[2.0 * zeta(3.0)?]))
}

fn eval_printed_zeta_h(ctx: &Context) -> Result<Entries> {
    single(ctx.zeta_h_prime2()?, ApproxValue::new(PRINTED_ZETA_H_PRIME2, 5e-10))
}

fn eval_printed_u(ctx: &Context) -> Result<Entries> {
    single(ctx.u()?, ApproxValue::new(PRINTED_U, 5e-8))
}

fn trig_moment(ctx: &Context, kind: TrigKind) -> Result<ApproxValue> {
    Ok(fourier_coeff_numeric(
        &SeriesKind::Xlgamma.function(),
        1,
        kind,
        ctx.policy.quad_target,
        ctx.policy.max_levels,
    )? * 0.5)
}

fn eval_xlgamma_sin(ctx: &Context) -> Result<Entries> {
    single(trig_moment(ctx, TrigKind::Sine)?, closed::xlgamma_sin())
}

fn eval_xlgamma_cos(ctx: &Context) -> Result<Entries> {
    // The n = 1 term of Σ ln n/(n² − 1) is 0/0 and is left out; the rest is T₁.
    single(trig_moment(ctx, TrigKind::Cosine)?, closed::xlgamma_cos(t_n(1, &ctx.policy.tail)?))
}

fn eval_exp_lgamma(ctx: &Context) -> Result<Entries> {
    let c = constants().c_const;
    let rhs = closed::exp_lgamma(c * (3.0 - closed::coth_half()), log_rational_sum(&ctx.policy.tail)?)?;
    single(ctx.exp_quad()?, rhs)
}

fn eval_partial_fraction_a(_: &Context) -> Result<Entries> {
    let ns: Vec<u64> = (1..=20).collect();
    table(&ns, |&n| {
        let nf = n as f64;
        let lhs = reciprocal_square_diff_sum(n)?;
        Ok((format!("n={n}"), Comparison { lhs, rhs: cf(&[0.75 / (nf * nf)]) }))
    })
}

fn eval_partial_fraction_b(_: &Context) -> Result<Entries> {
    let ns: Vec<u64> = (1..=20).collect();
    table(&ns, |&n| {
        let nf = n as f64;
        let lhs = reciprocal_cubic_diff_sum(n)?;
        let rhs = cf(&[1.25 / (nf * nf * nf), -harmonic(n)? / (nf * nf)]);
        Ok((format!("n={n}"), Comparison { lhs, rhs }))
    })
}

fn eval_connon(_: &Context) -> Result<Entries> {
    table(&[0.25, 0.5, 0.75], |&x| {
        let lhs = ln_barnes_g(x)?;
        Ok((
            format!("x={x}"),
            Comparison {
                lhs: ApproxValue::exact(lhs),
                rhs: connon_assemble(x, PARSEVAL_TERMS)?,
            },
        ))
    })
}

const CATALOG: &[Identity] = &[
    Identity {
        id: "raabe",
        tags: &["raabe", "moments"],
        description: "∫ lnΓ = ½ log 2π",
        tolerance: 1e-10,
        evaluate: eval_raabe,
    },
    Identity {
        id: "raabe-shifted",
        tags: &["moments"],
        description: "∫ lnΓ(x + t) dx = ½ log 2π + t log t − t for t = 0.5, 1, 2",
        tolerance: 1e-10,
        evaluate: eval_raabe_shifted,
    },
    Identity {
        id: "functional-equation",
        tags: &["special"],
        description: "ln G(x + 1) = lnΓ(x) + ln G(x) on 500 points in [0.05, 50]",
        tolerance: 1e-12,
        evaluate: eval_functional_equation,
    },
    Identity {
        id: "L2-espinosa-moll",
        tags: &["moments", "L2"],
        description: "∫ ln²Γ in closed form (π²/48 term)",
        tolerance: 1e-9,
        evaluate: eval_l2,
    },
    Identity {
        id: "L2-parseval",
        tags: &["fourier", "L2"],
        description: "∫ ln²Γ from Kummer coefficients paired with themselves, N = 10⁵ plus tail",
        tolerance: 1e-6,
        evaluate: eval_l2_parseval,
    },
    Identity {
        id: "G1-barnes",
        tags: &["moments"],
        description: "∫ ln G = 1/12 − ¼ log 2π − 2 log A",
        tolerance: 1e-9,
        evaluate: eval_g1,
    },
    Identity {
        id: "E1",
        tags: &["moments"],
        description: "∫ x lnΓ = ζ′(2)/(2π²) + (log 2π)/6 − γ/12",
        tolerance: 1e-10,
        evaluate: eval_e1,
    },
    Identity {
        id: "E2",
        tags: &["moments"],
        description: "∫ x² lnΓ = (log 2π − γ)/12 + ζ(3)/(4π²) + ζ′(2)/(2π²)",
        tolerance: 1e-10,
        evaluate: eval_e2,
    },
    Identity {
        id: "I2-x2-log2sin",
        tags: &["I2", "integrals"],
        description: "∫ x² log² sin πx = 13π²/360 + (log² 2)/3 + log 2 ζ(3)/π²",
        tolerance: 1e-8,
        evaluate: eval_x2_log2sin,
    },
    Identity {
        id: "I2-x2-logsin",
        tags: &["I2", "integrals"],
        description: "∫ x² log sin πx = −(log 2)/3 − ζ(3)/(2π²)",
        tolerance: 1e-8,
        evaluate: eval_x2_logsin,
    },
    Identity {
        id: "I2",
        tags: &["I2", "integrals", "gperg-parts"],
        description: "∫ x² log²(sin(πx)/π)",
        tolerance: 1e-8,
        evaluate: eval_i2,
    },
    Identity {
        id: "I3",
        tags: &["integrals", "gperg-parts"],
        description: "(1/4π²) ∫ Cl₂²(2πx) = π²/720",
        tolerance: 1e-9,
        evaluate: eval_i3,
    },
    Identity {
        id: "lgamma-logsin",
        tags: &["integrals"],
        description: "∫ lnΓ log sin πx = −½ log 2 log 2π − π²/24",
        tolerance: 1e-9,
        evaluate: eval_lgamma_logsin,
    },
    Identity {
        id: "xlgamma-logsin",
        tags: &["integrals", "zetaH"],
        description: "∫ x lnΓ log sin πx via the generalized Parseval identity",
        tolerance: 1e-8,
        evaluate: eval_xlgamma_logsin,
    },
    Identity {
        id: "I4",
        tags: &["integrals", "gperg-parts", "zetaH"],
        description: "2 ∫ x lnΓ log(sin(πx)/π)",
        tolerance: 1e-8,
        evaluate: eval_i4,
    },
    Identity {
        id: "I5",
        tags: &["integrals", "gperg-parts"],
        description: "(1/π) ∫ lnΓ Cl₂(2πx) = (Cζ(3) − ζ′(3))/(2π²)",
        tolerance: 1e-8,
        evaluate: eval_i5,
    },
    Identity {
        id: "I6",
        tags: &["integrals", "gperg-parts"],
        description: "(1/π) ∫ x log(sin(πx)/π) Cl₂(2πx) = ζ(3) log 2π/(2π²) + π²/720",
        tolerance: 1e-8,
        evaluate: eval_i6,
    },
    Identity {
        id: "GperG-total",
        tags: &["G2"],
        description: "∫ log²(G(x)/G(1−x)), adjudicated reading",
        tolerance: 1e-6,
        evaluate: eval_gperg,
    },
    Identity {
        id: "x2z-moment",
        tags: &["G2", "series"],
        description: "∫ x² Z(x) = Σ ζ(2n+1)/((n+1)(2n+5))",
        tolerance: 1e-9,
        evaluate: eval_x2z,
    },
    Identity {
        id: "GG1mx-total",
        tags: &["G2"],
        description: "∫ log²(G(x)G(1−x)) with U + 2V",
        tolerance: 1e-6,
        evaluate: eval_gg1mx,
    },
    Identity {
        id: "G2-master",
        tags: &["G2"],
        description: "∫ log² G from the closed form with U + 2V",
        tolerance: 1e-6,
        evaluate: eval_g2_master,
    },
    Identity {
        id: "G2-split",
        tags: &["G2"],
        description: "∫ log² G = ¼ [∫ log²(G·G(1−x)) + ∫ log²(G/G(1−x))]",
        tolerance: 1e-6,
        evaluate: eval_g2_split,
    },
    Identity {
        id: "zetaH-euler",
        tags: &["zetaH", "series"],
        description: "Σ H_n/n² = 2ζ(3)",
        tolerance: 1e-10,
        evaluate: eval_zeta_h_euler,
    },
    Identity {
        id: "zetaH-expression",
        tags: &["zetaH"],
        description: "Σ H_n log n/n² through ∫ x ln²Γ",
        tolerance: 1e-6,
        evaluate: eval_zeta_h_expression,
    },
    Identity {
        id: "zetaH-from-I4",
        tags: &["zetaH"],
        description: "Σ H_n log n/n² solved from the quadrature value of I₄",
        tolerance: 1e-6,
        evaluate: eval_zeta_h_from_i4,
    },
    Identity {
        id: "zetaH-prime2-printed",
        tags: &["printed"],
        description: "Σ H_n log n/n² ≈ 2.623865966",
        tolerance: 5e-8,
        evaluate: eval_printed_zeta_h,
    },
    Identity {
        id: "U-printed",
        tags: &["printed"],
        description: "∫ Z² ≈ 0.4785935",
        tolerance: 5e-7,
        evaluate: eval_printed_u,
    },
    Identity {
        id: "xlgamma-sin",
        tags: &["fourier"],
        description: "∫ x lnΓ sin 2πx = γ/(4π)",
        tolerance: 1e-9,
        evaluate: eval_xlgamma_sin,
    },
    Identity {
        id: "xlgamma-cos",
        tags: &["fourier"],
        description: "∫ x lnΓ cos 2πx = 1/8 − C/(2π²) − (1/2π²) Σ_{n≥2} log n/(n² − 1)",
        tolerance: 1e-9,
        evaluate: eval_xlgamma_cos,
    },
    Identity {
        id: "exp-lgamma",
        tags: &["fourier"],
        description: "(2/(e−1)) ∫ eˣ lnΓ = C(3 − coth ½) + Re ψ(i/2π) − 4 Σ log n/(1 + 4n²π²)",
        tolerance: 1e-7,
        evaluate: eval_exp_lgamma,
    },
    Identity {
        id: "kummer-coeffs",
        tags: &["coeffs"],
        description: "lnΓ Fourier coefficients, closed form vs quadrature, n ≤ 16",
        tolerance: 1e-8,
        evaluate: |ctx| coeff_table(ctx, SeriesKind::Kummer),
    },
    Identity {
        id: "xlgamma-coeffs",
        tags: &["coeffs"],
        description: "x lnΓ Fourier coefficients, closed form vs quadrature, n ≤ 16",
        tolerance: 1e-8,
        evaluate: |ctx| coeff_table(ctx, SeriesKind::Xlgamma),
    },
    Identity {
        id: "logbarnes-coeffs",
        tags: &["coeffs"],
        description: "ln G Fourier coefficients, closed form vs quadrature, n ≤ 16",
        tolerance: 1e-8,
        evaluate: |ctx| coeff_table(ctx, SeriesKind::Logbarnes),
    },
    Identity {
        id: "xclausen-coeffs",
        tags: &["coeffs"],
        description: "x Cl₂(2πx) Fourier coefficients, closed form vs quadrature, n ≤ 16",
        tolerance: 1e-8,
        evaluate: |ctx| coeff_table(ctx, SeriesKind::Xclausen),
    },
    Identity {
        id: "partial-fraction-a",
        tags: &["series"],
        description: "Σ_{m≠n} 1/(m² − n²) = 3/(4n²) for n ≤ 20",
        tolerance: 1e-10,
        evaluate: eval_partial_fraction_a,
    },
    Identity {
        id: "partial-fraction-b",
        tags: &["series"],
        description: "Σ_{m≠n} 1/(m(m² − n²)) = 5/(4n³) − H_n/n² for n ≤ 20",
        tolerance: 1e-10,
        evaluate: eval_partial_fraction_b,
    },
    Identity {
        id: "connon-expansion",
        tags: &["fourier"],
        description: "ln G from the Fourier-like expansion, N = 10⁵, at x = ¼, ½, ¾",
        tolerance: 1e-5,
        evaluate: eval_connon,
    },
];

pub fn catalog() -> &'static [Identity] {
    CATALOG
}

pub fn find(id: &str) -> Result<&'static Identity> {
    CATALOG
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::Catalog(id.to_string()))
}

pub fn run(identity: &Identity, ctx: &Context) -> IdentityReport {
    let start = Instant::now();
    let tolerance = identity.tolerance * ctx.policy.tol_scale;
    let mut report = IdentityReport {
        id: identity.id.to_string(),
        description: identity.description.to_string(),
        lhs: f64::NAN,
        rhs: f64::NAN,
        lhs_err: f64::NAN,
        rhs_err: f64::NAN,
        residual: f64::NAN,
        tolerance,
        pass: false,
        comparisons: 0,
        worst: None,
        error: None,
        elapsed: Default::default(),
    };
    match identity.comparisons(ctx) {
        Ok(entries) => {
            report.comparisons = entries.len();
            // NaN residuals rank as worst.
            let worst = entries.iter().max_by(|a, b| {
                let (ra, rb) = (a.1.residual(), b.1.residual());
                ra.is_nan().cmp(&rb.is_nan()).then(ra.total_cmp(&rb))
            });
            if let Some((label, cmp)) = worst {
                report.lhs = cmp.lhs.value;
                report.rhs = cmp.rhs.value;
                report.lhs_err = cmp.lhs.abs_err;
                report.rhs_err = cmp.rhs.abs_err;
                report.residual = cmp.residual();
                report.pass = report.residual <= tolerance;
                if entries.len() > 1 {
                    report.worst = Some(label.clone());
                }
            } else {
                report.error = Some("identity produced no comparisons".into());
            }
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report.elapsed = start.elapsed();
    report
}

pub fn run_identity(id: &str, ctx: &Context) -> Result<IdentityReport> {
    Ok(run(find(id)?, ctx))
}

/// Runs every identity matching `filter` (by id or tag), concurrently,
/// returning reports in catalog order.
pub fn run_all(filter: Option<&str>, ctx: &Context) -> Result<Vec<IdentityReport>> {
    let selected: Vec<&Identity> = CATALOG
        .iter()
        .filter(|i| filter.map_or(true, |f| i.matches(f)))
        .collect();
    if selected.is_empty() {
        return Err(Error::Catalog(filter.unwrap_or_default().to_string()));
    }
    Ok(selected.par_iter().map(|i| run(i, ctx)).collect())
}

/// The three values of ζ_H′(2): series engine, the ∫ x ln²Γ expression, and
/// the value implied by the quadrature of I₄.
pub fn zeta_h_triangle(ctx: &Context) -> Result<[ApproxValue; 3]> {
    Ok([
        ctx.zeta_h_prime2()?,
        closed::zeta_h_prime2_expression(x_lgamma_sq_quad(ctx)?),
        closed::zeta_h_prime2_from_i4(ctx.i4_quad()?),
    ])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reading {
    pub description: String,
    pub value: f64,
    pub abs_err: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjudicationCase {
    pub id: String,
    pub description: String,
    /// The independently computed value every reading is tested against.
    pub lhs: f64,
    pub lhs_err: f64,
    pub readings: Vec<Reading>,
    pub tolerance: f64,
    /// Index of the winning reading, if one is clearly best.
    pub verdict: Option<usize>,
    pub error: Option<String>,
}

impl AdjudicationCase {
    /// Picks the reading with the smallest residual when it is within
    /// `tolerance` and at least ten times smaller than every other one.
    pub fn decide(
        id: &str,
        description: &str,
        lhs: ApproxValue,
        readings: Vec<(String, ApproxValue)>,
        tolerance: f64,
    ) -> Self {
        let readings: Vec<Reading> = readings
            .into_iter()
            .map(|(description, v)| Reading {
                description,
                value: v.value,
                abs_err: v.abs_err,
                residual: (v.value - lhs.value).abs(),
            })
            .collect();
        let mut order: Vec<usize> = (0..readings.len()).collect();
        order.sort_by(|&a, &b| readings[a].residual.total_cmp(&readings[b].residual));
        let verdict = match order.as_slice() {
            [] => None,
            [best, rest @ ..] => {
                let r = readings[*best].residual;
                let separated = rest.first().map_or(true, |&next| {
                    let r2 = readings[next].residual;
                    r2 > 0.0 && r2 >= 10.0 * r
                });
                (r <= tolerance && separated).then_some(*best)
            }
        };
        AdjudicationCase {
            id: id.to_string(),
            description: description.to_string(),
            lhs: lhs.value,
            lhs_err: lhs.abs_err,
            readings,
            tolerance,
            verdict,
            error: None,
        }
    }

    pub fn verdict_reading(&self) -> Option<&Reading> {
        self.verdict.map(|i| &self.readings[i])
    }
}

type CaseEval = fn(&Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)>;

pub struct CaseDef {
    pub id: &'static str,
    pub description: &'static str,
    pub tolerance: f64,
    evaluate: CaseEval,
}

fn readings(list: Vec<(&str, ApproxValue)>) -> Vec<(String, ApproxValue)> {
    list.into_iter().map(|(d, v)| (d.to_string(), v)).collect()
}

fn numeric_coeff(ctx: &Context, kind: SeriesKind, n: u64) -> Result<ApproxValue> {
    fourier_coeff_numeric(&kind.function(), n, TrigKind::Cosine, ctx.policy.quad_target, ctx.policy.max_levels)
}

fn case_gperg(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let zh = ctx.zeta_h_prime2()?;
    let c = constants();
    Ok((
        ctx.gperg_quad()?,
        readings(vec![
            ("2 log C (γ + 2 log 2π), trailing −(γ/6)(log 2 − log π)", closed::gperg(2.0 * c.c_const.ln(), -1.0, zh)),
            ("2C (γ + 2 log 2π), trailing −(γ/6)(log 2 − log π)", closed::gperg(2.0 * c.c_const, -1.0, zh)),
            ("2 log A (γ + 2 log 2π), trailing −(γ/6)(log 2 − log π)", closed::gperg(2.0 * c.log_glaisher, -1.0, zh)),
            ("2 log A (γ + 2 log 2π), trailing −(γ/6)(log 2 + log π)", closed::gperg(2.0 * c.log_glaisher, 1.0, zh)),
        ]),
    ))
}

fn case_x2z(_: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let c = constants();
    Ok((
        x2z_moment()?,
        readings(vec![
            ("(1440 log A − 1440 ζ′(−3) − 108γ − 157)/540", closed::x2z(c.zeta_p_m3)),
            ("(1440 log A − 1440 ζ′(3) − 108γ − 157)/540", closed::x2z(c.zeta_p_3)),
        ]),
    ))
}

fn case_l2(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let pi2 = PI * PI;
    Ok((
        ctx.l2_quad()?,
        readings(vec![
            ("closed form with π²/18", closed::l2(pi2 / 18.0)),
            ("closed form with π²/48", closed::l2(pi2 / 48.0)),
            ("log √(2π)", closed::raabe(0.0)),
        ]),
    ))
}

fn case_logsin_a0(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let l2 = 2f64.ln();
    Ok((
        numeric_coeff(ctx, SeriesKind::Logsin, 0)?,
        readings(vec![
            ("printed −log 2 is 2∫f", cf(&[-l2])),
            ("printed −log 2 is the constant term (2∫f = −2 log 2)", cf(&[-2.0 * l2])),
        ]),
    ))
}

fn case_logsin_an(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    Ok((
        numeric_coeff(ctx, SeriesKind::Logsin, 1)?,
        readings(vec![
            ("printed −1/(2n) is 2∫f cos", cf(&[-0.5])),
            ("printed −1/(2n) is ∫f cos (2∫f cos = −1/n)", cf(&[-1.0])),
        ]),
    ))
}

fn case_xclausen_a0(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let z = constants().zeta3 / PI;
    Ok((
        numeric_coeff(ctx, SeriesKind::Xclausen, 0)?,
        readings(vec![
            ("printed −ζ(3)/π is 2∫f", cf(&[-z])),
            ("printed −ζ(3)/π is the constant term (2∫f = −2ζ(3)/π)", cf(&[-2.0 * z])),
        ]),
    ))
}

fn case_xclausen_an(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let a2 = (0.375 - 0.1875) / PI;
    Ok((
        numeric_coeff(ctx, SeriesKind::Xclausen, 2)?,
        readings(vec![
            ("printed a₂ is 2∫f cos", cf(&[a2])),
            ("printed a₂ is ∫f cos", cf(&[2.0 * a2])),
        ]),
    ))
}

fn case_kummer_an(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    Ok((
        numeric_coeff(ctx, SeriesKind::Kummer, 1)?,
        readings(vec![
            ("2∫f cos = 1/(2n), the displayed coefficient", cf(&[0.5])),
            ("2∫f cos = 1/n", cf(&[1.0])),
        ]),
    ))
}

fn case_logbarnes_a0(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let g1 = closed::g1();
    Ok((
        numeric_coeff(ctx, SeriesKind::Logbarnes, 0)?,
        readings(vec![
            ("displayed a₀ is the constant term (2∫f = 2a₀)", g1 * 2.0),
            ("displayed a₀ is 2∫f", g1),
        ]),
    ))
}

fn case_gg_v(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let (u, v) = (ctx.u()?, ctx.v()?);
    Ok((
        ctx.gg_quad()?,
        readings(vec![("U + V as printed", closed::gg1mx(u + v)), ("U + 2V", closed::gg1mx(u + v * 2.0))]),
    ))
}

fn case_master_v(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let (u, v, zh) = (ctx.u()?, ctx.v()?, ctx.zeta_h_prime2()?);
    Ok((
        ctx.g2_quad()?,
        readings(vec![
            ("U + V as printed", closed::g2_master(u + v, zh)),
            ("U + 2V", closed::g2_master(u + v * 2.0, zh)),
        ]),
    ))
}

fn case_exp(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let c = constants().c_const;
    let coth = closed::coth_half();
    let s = log_rational_sum(&ctx.policy.tail)?;
    Ok((
        ctx.exp_quad()?,
        readings(vec![
            ("C (3 − coth ½)", closed::exp_lgamma(c * (3.0 - coth), s)?),
            ("3C − coth ½", closed::exp_lgamma(3.0 * c - coth, s)?),
        ]),
    ))
}

fn case_v_printed(ctx: &Context) -> Result<(ApproxValue, Vec<(String, ApproxValue)>)> {
    let v = ctx.v()?;
    Ok((
        ApproxValue::new(PRINTED_V, 5e-10),
        readings(vec![("V = Σ ζ(2n+1) E_{2n+2}/(n+1)", v), ("2V", v * 2.0)]),
    ))
}

const CASES: &[CaseDef] = &[
    CaseDef {
        id: "gperg-leading-term",
        description: "leading and trailing terms of the ∫ log²(G(x)/G(1−x)) closed form",
        tolerance: 1e-6,
        evaluate: case_gperg,
    },
    CaseDef {
        id: "x2z-zeta-derivative",
        description: "ζ′(−3) or ζ′(3) in the closed form of ∫ x² Z",
        tolerance: 1e-8,
        evaluate: case_x2z,
    },
    CaseDef {
        id: "l2-display",
        description: "which expression in the L₂ display equals ∫ ln²Γ",
        tolerance: 1e-9,
        evaluate: case_l2,
    },
    CaseDef {
        id: "convention-logsin-a0",
        description: "scale of the printed constant coefficient of log sin πx",
        tolerance: 1e-8,
        evaluate: case_logsin_a0,
    },
    CaseDef {
        id: "convention-logsin-an",
        description: "scale of the printed cosine coefficients of log sin πx (n = 1)",
        tolerance: 1e-8,
        evaluate: case_logsin_an,
    },
    CaseDef {
        id: "convention-xclausen-a0",
        description: "scale of the printed a₀ of x Cl₂(2πx)",
        tolerance: 1e-8,
        evaluate: case_xclausen_a0,
    },
    CaseDef {
        id: "convention-xclausen-an",
        description: "scale of the printed cosine coefficients of x Cl₂(2πx) (n = 2)",
        tolerance: 1e-8,
        evaluate: case_xclausen_an,
    },
    CaseDef {
        id: "convention-kummer-an",
        description: "stored cosine coefficient of lnΓ (n = 1)",
        tolerance: 1e-8,
        evaluate: case_kummer_an,
    },
    CaseDef {
        id: "convention-logbarnes-a0",
        description: "meaning of the displayed a₀ in the ln G expansion",
        tolerance: 1e-8,
        evaluate: case_logbarnes_a0,
    },
    CaseDef {
        id: "gg1mx-v-multiplicity",
        description: "multiplicity of V in ∫ log²(G(x)G(1−x))",
        tolerance: 1e-6,
        evaluate: case_gg_v,
    },
    CaseDef {
        id: "g2-master-v-multiplicity",
        description: "multiplicity of V in the closed form of G₂",
        tolerance: 1e-6,
        evaluate: case_master_v,
    },
    CaseDef {
        id: "exp-lgamma-bracketing",
        description: "bracketing of the coth ½ term in the eˣ lnΓ integral",
        tolerance: 1e-7,
        evaluate: case_exp,
    },
    CaseDef {
        id: "v-printed-value",
        description: "which computed quantity matches the printed V ≈ 0.055645894",
        tolerance: 5e-8,
        evaluate: case_v_printed,
    },
];

pub fn adjudication_cases() -> &'static [CaseDef] {
    CASES
}

fn run_case(def: &CaseDef, ctx: &Context) -> AdjudicationCase {
    let tolerance = def.tolerance * ctx.policy.tol_scale;
    match (def.evaluate)(ctx) {
        Ok((lhs, list)) => AdjudicationCase::decide(def.id, def.description, lhs, list, tolerance),
        Err(e) => AdjudicationCase {
            id: def.id.to_string(),
            description: def.description.to_string(),
            lhs: f64::NAN,
            lhs_err: f64::NAN,
            readings: Vec::new(),
            tolerance,
            verdict: None,
            error: Some(e.to_string()),
        },
    }
}

pub fn adjudicate(case_id: &str, ctx: &Context) -> Result<AdjudicationCase> {
    let def = CASES
        .iter()
        .find(|c| c.id == case_id)
        .ok_or_else(|| Error::Catalog(case_id.to_string()))?;
    Ok(run_case(def, ctx))
}

pub fn adjudicate_all(ctx: &Context) -> Vec<AdjudicationCase> {
    CASES.par_iter().map(|c| run_case(c, ctx)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnRow {
    pub n: u32,
    pub value: f64,
    pub abs_err: f64,
    /// (−1)ⁿ G_n / n!
    pub ratio: f64,
    pub error: Option<String>,
}

/// G_n and (−1)ⁿ G_n/n! for n = 2..=n_max. A row whose quadrature fails
/// carries the error and NaN values; the other rows are still computed.
pub fn gn_asymptotics(n_max: u32, max_levels: usize) -> Result<Vec<GnRow>> {
    if !(2..=12).contains(&n_max) {
        return Err(Error::Argument(format!("n_max must be in 2..=12, got {n_max}")));
    }
    let ns: Vec<u32> = (2..=n_max).collect();
    Ok(ns
        .par_iter()
        .map(|&n| {
            let fact = crate::special::bernoulli::factorial(n as usize);
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            match moment_g(n, max_levels) {
                Ok(g) => GnRow {
                    n,
                    value: g.value,
                    abs_err: g.abs_err,
                    ratio: sign * g.value / fact,
                    error: None,
                },
                Err(e) => GnRow {
                    n,
                    value: f64::NAN,
                    abs_err: f64::NAN,
                    ratio: f64::NAN,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect())
}

/// Whether sign(G_n) = (−1)ⁿ on every row.
pub fn gn_signs_alternate(rows: &[GnRow]) -> bool {
    rows.iter().all(|r| r.error.is_none() && r.ratio > 0.0)
}

/// Whether |r_n − 1| strictly decreases over the rows with n ≥ 4.
pub fn gn_ratio_trend(rows: &[GnRow]) -> bool {
    let gaps: Vec<f64> = rows.iter().filter(|r| r.n >= 4).map(|r| (r.ratio - 1.0).abs()).collect();
    gaps.windows(2).all(|w| w[1] < w[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Context {
        Context::new(SuitePolicy::default()).unwrap()
    }

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids: Vec<_> = catalog().iter().map(|i| i.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), catalog().len());
        let mut cases: Vec<_> = adjudication_cases().iter().map(|c| c.id).collect();
        cases.sort();
        cases.dedup();
        assert_eq!(cases.len(), adjudication_cases().len());
    }

    #[test]
    fn unknown_ids_are_catalog_errors() {
        let c = ctx();
        assert!(matches!(run_identity("nope", &c), Err(Error::Catalog(_))));
        assert!(matches!(run_all(Some("nope"), &c), Err(Error::Catalog(_))));
        assert!(matches!(adjudicate("nope", &c), Err(Error::Catalog(_))));
    }

    #[test]
    fn filter_selects_by_id_or_tag() {
        let c = ctx();
        let r = run_all(Some("raabe"), &c).unwrap();
        assert_eq!(r.len(), 1);
        assert!(r[0].pass, "{r:?}");
        assert!(r[0].residual < 1e-10);
        let parts = run_all(Some("gperg-parts"), &c).unwrap();
        let ids: Vec<_> = parts.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["I2", "I3", "I4", "I5", "I6"]);
    }

    #[test]
    fn closed_forms_against_high_precision_values() {
        // Reference values at 25 digits.
        assert!((closed::l2(PI * PI / 48.0).value - 1.866_317_083_793_562).abs() < 1e-14);
        assert!((closed::e2().value - 0.088_006_824_426_166_59).abs() < 1e-15);
        assert!((closed::i2().value - 1.706_175_168_635_606).abs() < 1e-14);
        assert!((closed::i5().value - 0.157_108_887_362_605).abs() < 1e-15);
        assert!((closed::i6().value - 0.125_628_825_760_743_4).abs() < 1e-15);
        assert!((closed::x2z(constants().zeta_p_m3).value - 0.242_818_528_081_645_9).abs() < 1e-14);
        let zh = ApproxValue::exact(2.623_865_966_290_199_2);
        assert!((closed::i4(zh).value + 0.645_847_066_045_667_5).abs() < 1e-14);
        assert!((closed::gperg_adjudicated(zh).value - 3.223_090_683_397_251).abs() < 1e-13);
        let uv = ApproxValue::exact(0.478_593_508_169_066_1 + 2.0 * 0.028_000_953_092_537_12);
        assert!((closed::gg1mx(uv).value - 3.942_000_205_513_646).abs() < 1e-13);
        assert!((closed::g2_master(uv, zh).value - 1.791_272_722_227_724).abs() < 1e-13);
        let s = ApproxValue::exact(0.023_704_367_290_373_84);
        let c = constants().c_const;
        let e = closed::exp_lgamma(c * (3.0 - closed::coth_half()), s).unwrap();
        assert!((e.value - 1.376_896_024_778_879_5).abs() < 1e-13);
    }

    #[test]
    fn decide_requires_clear_separation() {
        let lhs = ApproxValue::exact(1.0);
        let r = |v: f64| ApproxValue::exact(v);
        let clear = AdjudicationCase::decide("t", "", lhs, vec![("a".into(), r(1.0 + 1e-12)), ("b".into(), r(2.0))], 1e-9);
        assert_eq!(clear.verdict, Some(0));
        let close = AdjudicationCase::decide(
            "t",
            "",
            lhs,
            vec![("a".into(), r(1.0 + 1e-10)), ("b".into(), r(1.0 + 5e-10))],
            1e-9,
        );
        assert_eq!(close.verdict, None);
        let far = AdjudicationCase::decide("t", "", lhs, vec![("a".into(), r(3.0)), ("b".into(), r(5.0))], 1e-9);
        assert_eq!(far.verdict, None);
        let empty = AdjudicationCase::decide("t", "", lhs, vec![], 1e-9);
        assert_eq!(empty.verdict, None);
    }

    #[test]
    fn identical_readings_have_no_verdict() {
        let lhs = ApproxValue::exact(1.0);
        let same = vec![("x".to_string(), ApproxValue::exact(1.0)), ("x".to_string(), ApproxValue::exact(1.0))];
        assert_eq!(AdjudicationCase::decide("t", "", lhs, same, 1e-9).verdict, None);
    }

    #[test]
    fn convention_cases() {
        let c = ctx();
        let expect = [
            ("convention-logsin-a0", 1),
            ("convention-logsin-an", 1),
            ("convention-xclausen-a0", 0),
            ("convention-xclausen-an", 0),
            ("convention-kummer-an", 0),
            ("convention-logbarnes-a0", 0),
            ("x2z-zeta-derivative", 0),
            ("l2-display", 1),
        ];
        for (id, verdict) in expect {
            let case = adjudicate(id, &c).unwrap();
            assert_eq!(case.verdict, Some(verdict), "{case:?}");
        }
    }

    #[test]
    fn fast_identities_pass() {
        let c = ctx();
        for id in [
            "raabe-shifted",
            "functional-equation",
            "G1-barnes",
            "E1",
            "E2",
            "I2",
            "I3",
            "I5",
            "I6",
            "lgamma-logsin",
            "xlgamma-sin",
            "xlgamma-cos",
            "partial-fraction-a",
            "partial-fraction-b",
            "x2z-moment",
            "zetaH-euler",
        ] {
            let r = run_identity(id, &c).unwrap();
            assert!(r.pass, "{r:?}");
            assert!(r.error_budget() <= r.tolerance, "{r:?}");
        }
    }

    #[test]
    fn policy_validation() {
        let bad = SuitePolicy {
            tol_scale: 0.0,
            ..SuitePolicy::default()
        };
        assert!(Context::new(bad).is_err());
        let bad = SuitePolicy {
            max_levels: 0,
            ..SuitePolicy::default()
        };
        assert!(Context::new(bad).is_err());
    }

    #[test]
    fn gn_argument_range() {
        assert!(gn_asymptotics(1, DEFAULT_MAX_LEVELS).is_err());
        assert!(gn_asymptotics(13, DEFAULT_MAX_LEVELS).is_err());
        let rows = gn_asymptotics(4, DEFAULT_MAX_LEVELS).unwrap();
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), [2, 3, 4]);
        assert!(gn_signs_alternate(&rows));
        assert!(rows[0].ratio > 0.0 && rows[0].ratio < 2.0);
    }
}
