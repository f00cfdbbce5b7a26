/// Even-index Bernoulli numbers B₂, B₄, …, B₃₀ as exact ratios.
const BERNOULLI_EVEN: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// Largest `j` accepted by [`bernoulli_even`].
pub const MAX_BERNOULLI_INDEX: usize = BERNOULLI_EVEN.len();

/// B_{2j} for `1 <= j <= 15`.
pub fn bernoulli_even(j: usize) -> f64 {
    assert!(
        (1..=MAX_BERNOULLI_INDEX).contains(&j),
        "B_{} is outside the tabulated range",
        2 * j
    );
    let (num, den) = BERNOULLI_EVEN[j - 1];
    num / den
}

pub fn factorial(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// The second Bernoulli polynomial x² − x + 1/6.
pub fn bernoulli2(x: f64) -> f64 {
    x * x - x + 1.0 / 6.0
}
