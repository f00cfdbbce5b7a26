//! Tanh-sinh quadrature on (0, 1) and the moment integrals built on it.
//!
//! Integrands receive both `x` and `1 − x`, each computed without
//! cancellation, so that functions with a logarithmic singularity at 1 can
//! be evaluated accurately at nodes that round to 1 in binary64.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::special::barnes::ln_barnes_g_pos;
use crate::special::bernoulli::factorial;
use crate::special::gamma::ln_gamma_with_complement;
use crate::series::z_with_complement;
use crate::sum::Accumulator;
use crate::{ApproxValue, Error, Result};

/// Deepest refinement level with a precomputed node table.
pub const MAX_LEVELS: usize = 14;
pub const DEFAULT_MAX_LEVELS: usize = 12;
/// Smallest accepted target error.
pub const MIN_TARGET: f64 = 1e-13;
/// Levels always computed before the convergence test is trusted.
const MIN_LEVELS: usize = 4;
/// Node cut-off next to a singular endpoint (distance to the endpoint).
const SINGULAR_CUTOFF: f64 = 1e-300;
/// Node cut-off next to a regular endpoint.
const REGULAR_CUTOFF: f64 = 1e-20;

pub type Evaluator<'a> = dyn Fn(f64, f64) -> f64 + Send + Sync + 'a;

/// A function on (0, 1) together with what is known about its endpoints.
pub struct IntegrandSpec<'a> {
    /// Called as `f(x, 1 − x)`.
    pub evaluator: Box<Evaluator<'a>>,
    pub singular_left: bool,
    pub singular_right: bool,
    pub description: String,
}

impl<'a> IntegrandSpec<'a> {
    pub fn new(description: impl Into<String>, f: impl Fn(f64, f64) -> f64 + Send + Sync + 'a) -> Self {
        Self {
            evaluator: Box::new(f),
            singular_left: false,
            singular_right: false,
            description: description.into(),
        }
    }

    /// Convenience for integrands that do not need the complement.
    pub fn from_fn(description: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'a) -> Self {
        Self::new(description, move |x, _| f(x))
    }

    pub fn singular_left(mut self) -> Self {
        self.singular_left = true;
        self
    }

    pub fn singular_right(mut self) -> Self {
        self.singular_right = true;
        self
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.evaluator)(x, 1.0 - x)
    }
}

impl std::fmt::Debug for IntegrandSpec<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IntegrandSpec")
            .field("description", &self.description)
            .field("singular_left", &self.singular_left)
            .field("singular_right", &self.singular_right)
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err: f64,
    pub levels_used: usize,
    pub evaluations: usize,
}

impl QuadratureResult {
    pub fn approx(&self) -> ApproxValue {
        ApproxValue::new(self.value, self.abs_err)
    }
}

/// A node at parameter t ≥ 0: `s` is its distance to the nearer endpoint
/// of (0, 1) and `w` the weight π cosh t · s · (1 − s) before scaling by
/// the step.
#[derive(Debug, Clone, Copy)]
struct Node {
    s: f64,
    w: f64,
    center: bool,
}

fn node_tables() -> &'static [Vec<Node>] {
    static TABLES: OnceLock<Vec<Vec<Node>>> = OnceLock::new();
    TABLES.get_or_init(|| {
        (0..MAX_LEVELS)
            .map(|level| {
                let h = 0.5f64.powi(level as i32);
                let (first, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
                let mut nodes = Vec::new();
                let mut k = first;
                loop {
                    let t = k as f64 * h;
                    let u = 0.5 * PI * t.sinh();
                    let e = (-2.0 * u).exp();
                    let c = 1.0 / (1.0 + e);
                    let s = e / (1.0 + e);
                    if s < SINGULAR_CUTOFF {
                        break;
                    }
                    let w = PI * t.cosh() * s * c;
                    nodes.push(Node {
                        s,
                        w,
                        center: k == 0,
                    });
                    k += stride;
                }
                nodes
            })
            .collect()
    })
}

fn check_args(target: f64, max_levels: usize) -> Result<()> {
    if !(target >= MIN_TARGET) {
        return Err(Error::Argument(format!(
            "target error {target:e} is below the supported minimum {MIN_TARGET:e}"
        )));
    }
    if max_levels == 0 || max_levels > MAX_LEVELS {
        return Err(Error::Argument(format!(
            "max_levels = {max_levels} is outside 1..={MAX_LEVELS}"
        )));
    }
    Ok(())
}

/// ∫₀¹ f by tanh-sinh, doubling the node density per level until the
/// estimate is within `target_abs_err`.
///
/// The error estimate is twice the difference of the last two levels plus
/// a rounding allowance proportional to Σ|f·w|.
pub fn integrate(spec: &IntegrandSpec, target_abs_err: f64, max_levels: usize) -> Result<QuadratureResult> {
    check_args(target_abs_err, max_levels)?;
    integrate_panel(spec, 0.0, 1.0, target_abs_err, max_levels)
}

/// ∫_a^b f for 0 ≤ a < b ≤ 1, with x and 1 − x passed to `f` accurately.
/// Endpoint singularity flags apply only at 0 and 1.
pub fn integrate_panel(
    spec: &IntegrandSpec,
    a: f64,
    b: f64,
    target_abs_err: f64,
    max_levels: usize,
) -> Result<QuadratureResult> {
    check_args(target_abs_err, max_levels)?;
    if !(0.0 <= a && a < b && b <= 1.0) {
        return Err(Error::Argument(format!("panel [{a}, {b}] is not inside [0, 1]")));
    }
    let width = b - a;
    let left_cut = if spec.singular_left && a == 0.0 {
        SINGULAR_CUTOFF
    } else {
        REGULAR_CUTOFF
    };
    let right_cut = if spec.singular_right && b == 1.0 {
        SINGULAR_CUTOFF
    } else {
        REGULAR_CUTOFF
    };
    let f = &spec.evaluator;
    let eval = |x: f64, cx: f64| -> Result<f64> {
        let v = f(x, cx);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Integrand {
                description: spec.description.clone(),
                x,
            })
        }
    };

    let tables = node_tables();
    let mut acc = Accumulator::new();
    let mut evaluations = 0usize;
    let mut previous: Option<f64> = None;
    let mut last = (f64::NAN, f64::INFINITY);
    for (level, nodes) in tables.iter().enumerate().take(max_levels) {
        for node in nodes {
            if node.s >= left_cut {
                let x = a + width * node.s;
                let cx = (1.0 - a) - width * node.s;
                acc.add(eval(x, cx)? * node.w);
                evaluations += 1;
            }
            if !node.center && node.s >= right_cut {
                let x = b - width * node.s;
                let cx = (1.0 - b) + width * node.s;
                acc.add(eval(x, cx)? * node.w);
                evaluations += 1;
            }
        }
        let h = 0.5f64.powi(level as i32) * width;
        let estimate = acc.value() * h;
        let rounding = 4.0 * f64::EPSILON * acc.abs_sum() * h;
        if let Some(prev) = previous {
            let diff = (estimate - prev).abs();
            let abs_err = 2.0 * diff + rounding;
            last = (estimate, abs_err);
            let enough = level + 1 >= MIN_LEVELS.min(max_levels);
            if enough && (abs_err <= target_abs_err || diff <= rounding) {
                return Ok(QuadratureResult {
                    value: estimate,
                    abs_err,
                    levels_used: level + 1,
                    evaluations,
                });
            }
        }
        previous = Some(estimate);
    }
    Err(Error::Convergence {
        best: last.0,
        abs_err: last.1,
        levels: max_levels,
    })
}

/// Integrates over consecutive panels given by `breaks` (0 = b₀ < … < b_k = 1),
/// splitting the target evenly.
pub fn integrate_panels(
    spec: &IntegrandSpec,
    breaks: &[f64],
    target_abs_err: f64,
    max_levels: usize,
) -> Result<QuadratureResult> {
    let panels = breaks.len().saturating_sub(1).max(1);
    let per_panel = (target_abs_err / panels as f64).max(MIN_TARGET);
    let mut acc = Accumulator::new();
    let mut abs_err = 0.0;
    let mut levels_used = 0;
    let mut evaluations = 0;
    for w in breaks.windows(2) {
        let r = integrate_panel(spec, w[0], w[1], per_panel, max_levels)?;
        acc.add(r.value);
        abs_err += r.abs_err;
        levels_used = levels_used.max(r.levels_used);
        evaluations += r.evaluations;
    }
    Ok(QuadratureResult {
        value: acc.value(),
        abs_err: abs_err + 2.0 * f64::EPSILON * acc.abs_sum(),
        levels_used,
        evaluations,
    })
}

/// Target for the n-th power moments: they grow like n!, so the absolute
/// target grows with them.
fn moment_target(n: u32) -> f64 {
    (1e-15 * factorial(n as usize)).max(MIN_TARGET)
}

/// L_n = ∫₀¹ lnⁿΓ(x) dx.
pub fn moment_l(n: u32, max_levels: usize) -> Result<ApproxValue> {
    if !(1..=20).contains(&n) {
        return Err(Error::Argument(format!("L_n is supported for 1 <= n <= 20, got {n}")));
    }
    let spec = IntegrandSpec::new(format!("lnGamma(x)^{n}"), move |x, cx| {
        ln_gamma_with_complement(x, cx).powi(n as i32)
    })
    .singular_left();
    Ok(integrate(&spec, moment_target(n), max_levels)?.approx())
}

/// ln G(x) given x and 1 − x.
pub(crate) fn ln_barnes_g_xc(x: f64, _cx: f64) -> f64 {
    ln_barnes_g_pos(x)
}

/// G_n = ∫₀¹ lnⁿG(x) dx.
pub fn moment_g(n: u32, max_levels: usize) -> Result<ApproxValue> {
    if !(1..=12).contains(&n) {
        return Err(Error::Argument(format!("G_n is supported for 1 <= n <= 12, got {n}")));
    }
    let spec = IntegrandSpec::new(format!("lnG(x)^{n}"), move |x, cx| {
        ln_barnes_g_xc(x, cx).powi(n as i32)
    })
    .singular_left();
    Ok(integrate(&spec, moment_target(n), max_levels)?.approx())
}

/// xⁿ given x and 1 − x, accurate when x is close to 1.
fn power_xc(x: f64, cx: f64, n: u32) -> f64 {
    if cx < 0.5 {
        (n as f64 * (-cx).ln_1p()).exp()
    } else {
        x.powi(n as i32)
    }
}

/// E_n = ∫₀¹ xⁿ lnΓ(x) dx.
///
/// For n > 50 the mass sits within a few multiples of 1/n of x = 1, so the
/// interval is split there before integrating.
pub fn moment_e(n: u32, max_levels: usize) -> Result<ApproxValue> {
    if n > 2000 {
        return Err(Error::Argument(format!("E_n is supported for n <= 2000, got {n}")));
    }
    let spec = IntegrandSpec::new(format!("x^{n} lnGamma(x)"), move |x, cx| {
        power_xc(x, cx, n) * ln_gamma_with_complement(x, cx)
    })
    .singular_left();
    let target = MIN_TARGET;
    let r = if n > 50 {
        let nf = n as f64;
        integrate_panels(&spec, &[0.0, 0.5, 1.0 - 16.0 / nf, 1.0 - 2.0 / nf, 1.0], target, max_levels)?
    } else {
        integrate(&spec, target, max_levels)?
    };
    Ok(r.approx())
}

/// U = ∫₀¹ Z(t)² dt.
pub fn u_integral(max_levels: usize) -> Result<ApproxValue> {
    let spec = IntegrandSpec::new("Z(t)^2", |t, ct| z_with_complement(t, ct).value.powi(2)).singular_right();
    Ok(integrate(&spec, 1e-12, max_levels)?.approx())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigKind {
    Cosine,
    Sine,
}

/// cos(2nπx) or sin(2nπx), reduced through whichever of x, 1 − x is
/// smaller so that the argument carries no rounding from 1 − x.
pub(crate) fn trig_xc(kind: TrigKind, n: u64, x: f64, cx: f64) -> f64 {
    let (arg, flip) = if x <= 0.5 { (x, 1.0) } else { (cx, -1.0) };
    // n·arg is reduced modulo 1 before multiplying by 2π.
    let r = (n as f64 * arg).fract();
    let theta = 2.0 * PI * r;
    match kind {
        TrigKind::Cosine => theta.cos(),
        TrigKind::Sine => flip * theta.sin(),
    }
}

/// 2∫₀¹ f(x) trig(2nπx) dx, integrated panel by panel between the zeros of
/// the trigonometric factor.
pub fn fourier_coeff_numeric(
    f: &IntegrandSpec,
    n: u64,
    kind: TrigKind,
    target_abs_err: f64,
    max_levels: usize,
) -> Result<ApproxValue> {
    if kind == TrigKind::Sine && n == 0 {
        return Err(Error::Argument("sine coefficients start at n = 1".into()));
    }
    let breaks: Vec<f64> = if n == 0 {
        vec![0.0, 1.0]
    } else {
        let nf = n as f64;
        let mut v = vec![0.0];
        match kind {
            TrigKind::Cosine => {
                for j in 0..2 * n {
                    v.push((2 * j + 1) as f64 / (4.0 * nf));
                }
            }
            TrigKind::Sine => {
                for j in 1..2 * n {
                    v.push(j as f64 / (2.0 * nf));
                }
            }
        }
        v.push(1.0);
        v
    };
    let product = IntegrandSpec {
        evaluator: Box::new(move |x, cx| (f.evaluator)(x, cx) * trig_xc(kind, n, x, cx)),
        singular_left: f.singular_left,
        singular_right: f.singular_right,
        description: format!("{} * {:?}(2*{n}*pi*x)", f.description, kind),
    };
    let r = integrate_panels(&product, &breaks, target_abs_err / 2.0, max_levels)?;
    Ok(r.approx() * 2.0)
}
