//! Fundamental constants, computed once on first use.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::special::bernoulli::bernoulli_even;
use crate::special::zeta::{reflected_zeta_derivative, zeta, zeta_derivative};
use crate::sum::Accumulator;

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ConstantsTable {
    /// Euler's constant γ.
    pub euler_gamma: f64,
    pub log_2pi: f64,
    /// C = log 2π + γ.
    pub c_const: f64,
    /// log A for the Glaisher–Kinkelin constant A.
    pub log_glaisher: f64,
    pub zeta3: f64,
    pub zeta_p_2: f64,
    pub zeta_pp_2: f64,
    pub zeta_p_3: f64,
    pub zeta_p_m1: f64,
    pub zeta_p_m3: f64,
}

pub fn constants() -> &'static ConstantsTable {
    static TABLE: OnceLock<ConstantsTable> = OnceLock::new();
    TABLE.get_or_init(ConstantsTable::compute)
}

impl ConstantsTable {
    fn compute() -> Self {
        let euler_gamma = euler_gamma();
        let log_2pi = (2.0 * PI).ln();
        let zeta_p_m1 = reflected_zeta_derivative(1, euler_gamma);
        ConstantsTable {
            euler_gamma,
            log_2pi,
            c_const: log_2pi + euler_gamma,
            log_glaisher: 1.0 / 12.0 - zeta_p_m1,
            zeta3: zeta(3.0).expect("s = 3"),
            zeta_p_2: zeta_derivative(2.0, 1).expect("s = 2").value,
            zeta_pp_2: zeta_derivative(2.0, 2).expect("s = 2").value,
            zeta_p_3: zeta_derivative(3.0, 1).expect("s = 3").value,
            zeta_p_m1,
            zeta_p_m3: reflected_zeta_derivative(3, euler_gamma),
        }
    }
}

/// γ = H_{N−1} − ln N + 1/(2N) + Σ B_2j / (2j N^2j).
fn euler_gamma() -> f64 {
    const N: u32 = 20;
    let n = N as f64;
    let mut acc: Accumulator = (1..N).rev().map(|k| 1.0 / k as f64).collect();
    acc.add(-n.ln());
    acc.add(0.5 / n);
    for j in 1..=10 {
        acc.add(bernoulli_even(j) / (2.0 * j as f64 * n.powi(2 * j as i32)));
    }
    acc.value()
}
