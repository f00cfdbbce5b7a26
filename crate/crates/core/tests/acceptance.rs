//! Acceptance suite. One test per criterion; every test prints a single
//! `PASS` or `FAIL` line with the measured numbers before asserting.

use std::time::{Duration, Instant};

use specfn::fourier::connon_assemble;
use specfn::identities::{
    self, adjudicate, gn_asymptotics, run_identity, zeta_h_triangle, AdjudicationCase, Context, IdentityReport,
    SuitePolicy, PARSEVAL_TERMS, PRINTED_U, PRINTED_V, PRINTED_ZETA_H_PRIME2,
};
use specfn::special::ln_barnes_g;

fn ctx() -> Context {
    Context::new(SuitePolicy::default()).expect("default policy is valid")
}

fn verdict(criterion: u32, title: &str, ok: bool, details: &[String]) {
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status} criterion {criterion:>2}: {title}");
    for d in details {
        println!("    {d}");
    }
    assert!(ok, "criterion {criterion} failed: {}", details.join("; "));
}

/// Runs an identity and checks its worst residual against `limit`.
fn within(ctx: &Context, id: &str, limit: f64, details: &mut Vec<String>) -> (bool, IdentityReport) {
    let r = run_identity(id, ctx).expect("identity exists");
    let ok = r.error.is_none() && r.residual < limit;
    let worst = r.worst.as_deref().map(|w| format!(" at {w}")).unwrap_or_default();
    details.push(format!(
        "{id}: residual {:.3e}{worst} (limit {limit:.0e}, {} comparisons){}",
        r.residual,
        r.comparisons,
        r.error.as_deref().map(|e| format!(" error: {e}")).unwrap_or_default()
    ));
    (ok, r)
}

fn timed(limit: Duration, start: Instant, details: &mut Vec<String>) -> bool {
    let elapsed = start.elapsed();
    details.push(format!("runtime {:.3} s (limit {} s)", elapsed.as_secs_f64(), limit.as_secs()));
    elapsed < limit
}

#[test]
fn criterion_01_raabe() {
    let start = Instant::now();
    let c = ctx();
    let mut d = Vec::new();
    let (a, _) = within(&c, "raabe", 1e-10, &mut d);
    let (b, r) = within(&c, "raabe-shifted", 1e-10, &mut d);
    let fast = timed(Duration::from_secs(1), start, &mut d);
    verdict(1, "Raabe integral, plain and shifted", a && b && r.comparisons == 3 && fast, &d);
}

#[test]
fn criterion_02_functional_equation() {
    let start = Instant::now();
    let c = ctx();
    let mut d = Vec::new();
    let (ok, r) = within(&c, "functional-equation", 1e-12, &mut d);
    let fast = timed(Duration::from_secs(1), start, &mut d);
    verdict(2, "ln G(x+1) = lnΓ(x) + ln G(x) on 500 points", ok && r.comparisons == 500 && fast, &d);
}

#[test]
fn criterion_03_partial_fractions() {
    let c = ctx();
    let mut d = Vec::new();
    let (a, ra) = within(&c, "partial-fraction-a", 1e-10, &mut d);
    let (b, rb) = within(&c, "partial-fraction-b", 1e-10, &mut d);
    let counts = ra.comparisons == 20 && rb.comparisons == 20;
    verdict(3, "partial-fraction sums for n = 1..20", a && b && counts, &d);
}

#[test]
fn criterion_04_coefficient_oracles() {
    let start = Instant::now();
    let c = ctx();
    let mut d = Vec::new();
    let mut ok = true;
    for id in ["kummer-coeffs", "xlgamma-coeffs", "logbarnes-coeffs"] {
        let (pass, r) = within(&c, id, 1e-8, &mut d);
        // a_0..a_16 and b_1..b_16
        ok &= pass && r.comparisons == 33;
    }
    let fast = timed(Duration::from_secs(60), start, &mut d);
    verdict(4, "closed-form coefficients against quadrature, n = 0..16", ok && fast, &d);
}

#[test]
fn criterion_05_connon_assembly() {
    let mut d = Vec::new();
    let mut ok = true;
    for x in [0.25, 0.5, 0.75] {
        let assembled = connon_assemble(x, PARSEVAL_TERMS).expect("assembly");
        let direct = ln_barnes_g(x).expect("in domain");
        let residual = (assembled.value - direct).abs();
        ok &= residual < 1e-5;
        d.push(format!(
            "x = {x}: assembled {:.12} (±{:.1e}), ln G {direct:.12}, residual {residual:.3e}",
            assembled.value, assembled.abs_err
        ));
    }
    verdict(5, "Fourier-like assembly of ln G with 1e5 terms", ok, &d);
}

#[test]
fn criterion_06_printed_constants() {
    let c = ctx();
    let mut d = Vec::new();
    let mut ok = true;
    let checks = [
        ("ζ_H'(2)", c.zeta_h_prime2(), PRINTED_ZETA_H_PRIME2, 5e-8),
        ("U", c.u(), PRINTED_U, 5e-7),
        ("V", c.v(), PRINTED_V, 5e-8),
    ];
    for (name, value, printed, limit) in checks {
        let v = value.expect("constant computes");
        let residual = (v.value - printed).abs();
        let pass = residual < limit;
        ok &= pass;
        d.push(format!(
            "{name}: computed {:.10} (±{:.1e}), printed {printed}, residual {residual:.3e} (limit {limit:.0e}){}",
            v.value,
            v.abs_err,
            if pass { "" } else { "  <-- mismatch" }
        ));
    }
    verdict(6, "printed constants ζ_H'(2), U, V", ok, &d);
}

#[test]
fn criterion_07_g1_and_l2() {
    let c = ctx();
    let mut d = Vec::new();
    let (a, _) = within(&c, "G1-barnes", 1e-9, &mut d);
    let (b, _) = within(&c, "L2-espinosa-moll", 1e-9, &mut d);
    verdict(7, "G_1 and L_2 closed forms", a && b, &d);
}

#[test]
fn criterion_08_log_barnes_integrals() {
    let c = ctx();
    let mut d = Vec::new();
    let mut ok = true;
    for id in ["I2", "I3", "I4", "I5", "I6"] {
        ok &= within(&c, id, 1e-8, &mut d).0;
    }
    for id in ["GperG-total", "GG1mx-total", "G2-master"] {
        ok &= within(&c, id, 1e-6, &mut d).0;
    }
    verdict(8, "I_2..I_6, G(x)/G(1-x), G(x)G(1-x) and the ∫ln²G formula", ok, &d);
}

#[test]
fn criterion_09_applications() {
    let c = ctx();
    let mut d = Vec::new();
    let (a, _) = within(&c, "xlgamma-sin", 1e-9, &mut d);
    let (b, _) = within(&c, "exp-lgamma", 1e-7, &mut d);
    let routes = zeta_h_triangle(&c).expect("all three routes compute");
    let mut spread: f64 = 0.0;
    for i in 0..3 {
        for j in i + 1..3 {
            spread = spread.max((routes[i].value - routes[j].value).abs());
        }
    }
    d.push(format!(
        "ζ_H'(2) routes: {:.12}, {:.12}, {:.12}; max pairwise gap {spread:.3e} (limit 1e-6)",
        routes[0].value, routes[1].value, routes[2].value
    ));
    verdict(9, "∫x lnΓ sin 2πx, ∫exp-weighted lnΓ, ζ_H'(2) triangle", a && b && spread < 1e-6, &d);
}

#[test]
fn criterion_10_gn_asymptotics() {
    let start = Instant::now();
    let rows = gn_asymptotics(10, SuitePolicy::default().max_levels).expect("valid range");
    let mut d: Vec<String> = rows
        .iter()
        .map(|r| format!("n = {:>2}: G_n = {:+.6e}, r_n = {:.6}", r.n, r.value, r.ratio))
        .collect();
    let signs = rows.iter().all(|r| {
        let expected = if r.n % 2 == 0 { 1.0 } else { -1.0 };
        r.error.is_none() && r.value.signum() == expected
    });
    let gap = |n: u32| rows.iter().find(|r| r.n == n).map(|r| (r.ratio - 1.0).abs()).unwrap();
    let trend = gap(10) < gap(4);
    d.push(format!("signs alternate: {signs}; |r_10 - 1| = {:.3e} < |r_4 - 1| = {:.3e}: {trend}", gap(10), gap(4)));
    let fast = timed(Duration::from_secs(300), start, &mut d);
    verdict(10, "sign and ratio trend of G_n = ∫ln^n G", signs && trend && rows.len() == 9 && fast, &d);
}

const CASE_A: &str = "gperg-leading-term";
const CASE_B: &str = "x2z-zeta-derivative";
const CASE_C: &str = "l2-display";
const CASES_D: [&str; 5] = [
    "convention-logsin-a0",
    "convention-logsin-an",
    "convention-xclausen-a0",
    "convention-xclausen-an",
    "convention-kummer-an",
];

fn describe(c: &AdjudicationCase) -> String {
    let winner = c.verdict_reading().map_or("none".to_string(), |r| r.description.clone());
    let residuals: Vec<String> = c.readings.iter().map(|r| format!("{:.2e}", r.residual)).collect();
    format!("{}: verdict {winner} [residuals {}]", c.id, residuals.join(", "))
}

#[test]
fn criterion_11_adjudication_determinism() {
    let ids: Vec<&str> = [CASE_A, CASE_B, CASE_C].into_iter().chain(CASES_D).collect();
    let first: Vec<AdjudicationCase> = ids.iter().map(|id| adjudicate(id, &ctx()).unwrap()).collect();
    let second: Vec<AdjudicationCase> = ids.iter().map(|id| adjudicate(id, &ctx()).unwrap()).collect();
    let mut d: Vec<String> = first.iter().map(describe).collect();
    let stable = first.iter().zip(&second).all(|(a, b)| a.verdict == b.verdict && a.error.is_none());
    let definite = first
        .iter()
        .filter(|c| c.id == CASE_B || CASES_D.contains(&c.id.as_str()))
        .all(|c| c.verdict.is_some());
    d.push(format!("verdicts stable across two runs: {stable}; (b) and (d) definite: {definite}"));
    verdict(11, "adjudication verdicts", stable && definite, &d);
}

#[test]
fn criterion_12_parseval_closure() {
    let c = ctx();
    let mut d = Vec::new();
    let (ok, _) = within(&c, "L2-parseval", 1e-6, &mut d);
    verdict(12, "2L_2 from Kummer coefficients by Parseval", ok, &d);
}

#[test]
fn full_catalog_is_deterministic() {
    let strip = |mut v: Vec<IdentityReport>| {
        v.iter_mut().for_each(|r| r.elapsed = Duration::ZERO);
        v
    };
    let a = strip(identities::run_all(None, &ctx()).unwrap());
    let b = strip(identities::run_all(None, &ctx()).unwrap());
    assert_eq!(a, b);
    let ids: Vec<&str> = a.iter().map(|r| r.id.as_str()).collect();
    let expected: Vec<&str> = identities::catalog().iter().map(|i| i.id).collect();
    assert_eq!(ids, expected);
}
