use std::f64::consts::PI;

use num_complex::Complex64;

use crate::special::bernoulli::bernoulli_even;
use crate::{Error, Result};

const SHIFT_TARGET: f64 = 10.0;

/// Complex digamma ψ(z) = Γ′(z)/Γ(z).
///
/// Reflects into Re z ≥ 1/2, shifts with ψ(z) = ψ(z+1) − 1/z until Re z ≥ 10,
/// then sums the asymptotic series.
pub fn digamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain("digamma", z));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::domain("digamma", z));
    }
    if z.re < 0.5 {
        // ψ(z) = ψ(1 − z) − π cot(πz)
        let w = z * PI;
        let cot = if w.im.abs() > 20.0 {
            Complex64::new(0.0, -w.im.signum())
        } else {
            w.cos() / w.sin()
        };
        return Ok(shifted_asymptotic(Complex64::new(1.0, 0.0) - z) - cot * PI);
    }
    Ok(shifted_asymptotic(z))
}

fn shifted_asymptotic(mut z: Complex64) -> Complex64 {
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_TARGET {
        shift += z.inv();
        z += 1.0;
    }
    let inv2 = (z * z).inv();
    let mut p = inv2;
    let mut series = Complex64::new(0.0, 0.0);
    for k in 1..=10 {
        series += p * (bernoulli_even(k) / (2.0 * k as f64));
        p *= inv2;
    }
    z.ln() - z.inv() * 0.5 - series - shift
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::constants::constants;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn real_points() {
        let g = constants().euler_gamma;
        assert!((digamma_complex(c(1.0, 0.0)).unwrap() - c(-g, 0.0)).norm() < 1e-14);
        assert!((digamma_complex(c(2.0, 0.0)).unwrap() - c(1.0 - g, 0.0)).norm() < 1e-14);
        // ψ(1/2) = −γ − 2 ln 2
        let half = digamma_complex(c(0.5, 0.0)).unwrap();
        assert!((half.re + g + 2.0 * 2f64.ln()).abs() < 1e-14);
        // ψ(−1/2) = ψ(1/2) + 2
        let mhalf = digamma_complex(c(-0.5, 0.0)).unwrap();
        assert!((mhalf.re - half.re - 2.0).abs() < 1e-13);
    }

    #[test]
    fn poles() {
        assert!(digamma_complex(c(0.0, 0.0)).is_err());
        assert!(digamma_complex(c(-3.0, 0.0)).is_err());
        assert!(digamma_complex(c(-3.0, 1e-3)).is_ok());
    }

    #[test]
    fn against_partial_fraction_series() {
        // ψ(z) = −γ + Σ_{n≥0} (1/(n+1) − 1/(n+z)); the tail from N is
        // (z − 1) Σ 1/((n+1)(n+z)) ≈ (z − 1)(1/N − z/(2N²)).
        let z = c(0.0, 1.0 / (2.0 * PI));
        let n = 1_000_000;
        let mut s = c(0.0, 0.0);
        for k in (0..n).rev() {
            let kf = k as f64;
            s += c(1.0 / (kf + 1.0), 0.0) - (z + kf).inv();
        }
        let nf = n as f64;
        let tail = (z - 1.0) * (c(1.0 / nf, 0.0) - z / (2.0 * nf * nf));
        let oracle = s + tail - constants().euler_gamma;
        let got = digamma_complex(z).unwrap();
        assert!((got.re - oracle.re).abs() < 1e-11, "{got} vs {oracle}");
        assert!((got.im - oracle.im).abs() < 1e-11, "{got} vs {oracle}");
        assert!((got.re + 0.547_416_539_576_677_9).abs() < 1e-13);
        assert!((got.im - 6.540_722_727_245_746).abs() < 1e-12);
    }

    #[test]
    fn recurrence_off_axis() {
        for z in [c(0.3, 2.0), c(-4.2, 0.7), c(15.0, -3.0), c(0.01, 40.0), c(-2.0, 300.0)] {
            let lhs = digamma_complex(z + 1.0).unwrap();
            let rhs = digamma_complex(z).unwrap() + z.inv();
            assert!((lhs - rhs).norm() < 1e-12, "{z}");
        }
    }
}
