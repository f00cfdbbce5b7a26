//! `specfn`: evaluate functions, print coefficient tables and run the
//! verification catalog.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! domain errors.

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use specfn::fourier::SeriesKind;
use specfn::identities::{self, Context, SuitePolicy};
use specfn::quadrature::{fourier_coeff_numeric, TrigKind};
use specfn::series::{z_function, TailPolicy};
use specfn::special::{clausen2, ln_barnes_g, ln_gamma};
use specfn::{ApproxValue, Error};

use output::{Format, Table};

const ENV_DIRECT_TERMS: &str = "SPECFN_DIRECT_TERMS";
const ENV_MAX_LEVELS: &str = "SPECFN_MAX_LEVELS";

#[derive(Parser, Debug)]
#[command(name = "specfn", version, about = "Log-gamma and log-Barnes-G functions, Fourier tables and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a special function at x.
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[arg(allow_negative_numbers = true)]
        x: f64,
    },
    /// Print closed-form Fourier coefficients up to n_max.
    Coeffs {
        #[arg(value_parser = parse_series)]
        series: SeriesKind,
        n_max: usize,
        /// Also measure every coefficient by quadrature and report the residual.
        #[arg(long)]
        check: bool,
    },
    /// Run the identity catalog and the adjudication cases.
    Verify {
        /// Restrict to an identity id, a tag, or an adjudication case id.
        #[arg(long)]
        filter: Option<String>,
        /// Multiply every tolerance by this factor.
        #[arg(long, default_value_t = 1.0)]
        tol_scale: f64,
    },
    /// Tabulate G_n and (−1)ⁿ G_n / n! for n = 2..=n_max.
    Asymptotics { n_max: u32 },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Function {
    Lngamma,
    Lnbarnesg,
    Clausen2,
    Zfunc,
}

fn parse_series(s: &str) -> Result<SeriesKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = SeriesKind::ALL.iter().map(|k| k.label()).collect();
        format!("unknown series '{s}' (expected one of {})", names.join(", "))
    })
}

/// Failure classes mapped onto exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("specfn: {msg}");
            ExitCode::from(2)
        }
    }
}

fn env_parse<T: std::str::FromStr>(name: &str) -> Result<Option<T>, Failure> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("{name}={v} is not a valid value"))),
        Err(_) => Ok(None),
    }
}

fn policy_from_env(tol_scale: f64) -> Result<SuitePolicy, Failure> {
    let mut policy = SuitePolicy {
        tol_scale,
        ..SuitePolicy::default()
    };
    if let Some(direct) = env_parse::<u64>(ENV_DIRECT_TERMS)? {
        policy.tail = TailPolicy::new(direct, policy.tail.em_corrections)?;
    }
    if let Some(levels) = env_parse::<usize>(ENV_MAX_LEVELS)? {
        policy.max_levels = levels;
    }
    policy.validate()?;
    Ok(policy)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { function, x } => cmd_eval(function, x, cli.format),
        Command::Coeffs { series, n_max, check } => cmd_coeffs(series, n_max, check, cli.format),
        Command::Verify { filter, tol_scale } => cmd_verify(filter.as_deref(), tol_scale, cli.format),
        Command::Asymptotics { n_max } => cmd_asymptotics(n_max, cli.format),
    }
}

fn scalar(v: f64) -> ApproxValue {
    ApproxValue::new(v, 8.0 * f64::EPSILON * v.abs().max(1.0))
}

fn cmd_eval(function: Function, x: f64, format: Format) -> Result<(), Failure> {
    if !x.is_finite() {
        return Err(Failure::Usage(format!("domain error: x = {x} is not finite")));
    }
    let (name, value) = match function {
        Function::Lngamma => ("lngamma", scalar(ln_gamma(x)?)),
        Function::Lnbarnesg => ("lnbarnesg", scalar(ln_barnes_g(x)?)),
        Function::Clausen2 => ("clausen2", scalar(clausen2(x))),
        Function::Zfunc => ("zfunc", z_function(x)?),
    };
    let mut table = Table::new(&["function", "x", "value", "abs_err"]);
    table.row(vec![name.into(), x.into(), value.value.into(), value.abs_err.into()]);
    match format {
        Format::Human => println!("{name}({x}) = {value}"),
        _ => table.print(format),
    }
    Ok(())
}

fn cmd_coeffs(kind: SeriesKind, n_max: usize, check: bool, format: Format) -> Result<(), Failure> {
    if n_max < 1 {
        return Err(Failure::Usage("n_max must be at least 1".into()));
    }
    let series = kind.generate(n_max)?;
    let mut columns = vec!["n", "a_n", "b_n"];
    if check {
        columns.extend(["a_quad", "b_quad", "residual"]);
    }
    let mut table = Table::new(&columns);
    let policy = policy_from_env(1.0)?;
    let function = kind.function();
    for n in 0..=n_max {
        let a = series.a_n(n);
        let b = if n == 0 { 0.0 } else { series.b_n(n) };
        let mut row = vec![n.into(), a.into(), b.into()];
        if check {
            let measure = |trig| fourier_coeff_numeric(&function, n as u64, trig, policy.quad_target, policy.max_levels);
            let aq = measure(TrigKind::Cosine)?.value;
            let bq = if n == 0 { 0.0 } else { measure(TrigKind::Sine)?.value };
            let residual = (a - aq).abs().max((b - bq).abs());
            row.extend([aq.into(), bq.into(), residual.into()]);
        }
        table.row(row);
    }
    if format == Format::Human {
        println!(
            "# {}: a_n = 2∫f cos(2nπx), b_n = 2∫f sin(2nπx); constant term a_0/2 = {}",
            kind.label(),
            output::fmt_num(series.constant_term())
        );
    }
    table.print(format);
    Ok(())
}

fn cmd_verify(filter: Option<&str>, tol_scale: f64, format: Format) -> Result<(), Failure> {
    let ctx = Context::new(policy_from_env(tol_scale)?)?;
    let has_identities = filter.map_or(true, |f| identities::catalog().iter().any(|i| i.matches(f)));
    let case_ids: Vec<&str> = identities::adjudication_cases()
        .iter()
        .map(|c| c.id)
        .filter(|id| filter.map_or(true, |f| *id == f))
        .collect();
    if !has_identities && case_ids.is_empty() {
        return Err(Failure::Usage(format!(
            "no identity, tag or adjudication case matches '{}'",
            filter.unwrap_or_default()
        )));
    }
    let reports = if has_identities {
        identities::run_all(filter, &ctx)?
    } else {
        Vec::new()
    };
    let cases = if filter.is_none() {
        identities::adjudicate_all(&ctx)
    } else {
        case_ids
            .iter()
            .map(|id| identities::adjudicate(id, &ctx))
            .collect::<Result<Vec<_>, _>>()?
    };
    let passed = reports.iter().filter(|r| r.pass).count();
    let failed = reports.len() - passed;
    output::print_verify(&reports, &cases, passed, failed, format);
    if failed > 0 {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn cmd_asymptotics(n_max: u32, format: Format) -> Result<(), Failure> {
    let policy = policy_from_env(1.0)?;
    let rows = identities::gn_asymptotics(n_max, policy.max_levels)?;
    let mut table = Table::new(&["n", "G_n", "abs_err", "r_n"]);
    for r in &rows {
        table.row(vec![r.n.into(), r.value.into(), r.abs_err.into(), r.ratio.into()]);
        if let Some(e) = &r.error {
            eprintln!("specfn: n = {}: {e}", r.n);
        }
    }
    table.print(format);
    if format == Format::Human {
        println!(
            "signs alternate: {}; |r_n - 1| decreasing from n = 4: {}",
            identities::gn_signs_alternate(&rows),
            identities::gn_ratio_trend(&rows)
        );
    }
    if rows.iter().any(|r| r.error.is_some()) {
        return Err(Failure::Verification);
    }
    Ok(())
}
