use std::f64::consts::PI;

use crate::special::zeta::zeta_minus_one_table;

/// Clausen's function Cl₂(θ) = Σ_{n≥1} sin(nθ)/n².
///
/// θ is reduced to (−π, π] and the series
/// Cl₂(θ) = θ − θ ln θ + Σ_{k≥1} ζ(2k) θ^(2k+1) / ((2π)^(2k) k (2k+1))
/// is summed for 0 < θ ≤ π.
pub fn clausen2(theta: f64) -> f64 {
    if !theta.is_finite() {
        return f64::NAN;
    }
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t < 0.0 {
        -clausen_reduced(-t)
    } else {
        clausen_reduced(t)
    }
}

/// Cl₂ on [0, π].
fn clausen_reduced(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let table = zeta_minus_one_table();
    let r2 = (t / (2.0 * PI)).powi(2);
    let mut sum = 0.0;
    let mut p = 1.0;
    let mut terms = Vec::with_capacity(31);
    for k in 1..=31 {
        p *= r2;
        let kf = k as f64;
        terms.push((1.0 + table[2 * k]) * p / (kf * (2.0 * kf + 1.0)));
    }
    for term in terms.iter().rev() {
        sum += term;
    }
    t - t * t.ln() + t * sum
}
