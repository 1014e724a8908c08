use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use torus_skein::daha::{apply_expr, build_rep, q_elements, qtilde, w_element, Expr, LaurentPoly, WMode};
use torus_skein::ehall::{theta_series, Vec2};
use torus_skein::verify::{self, Format, Suite, VerifyConfig};
use torus_skein::words::Element;

#[derive(Parser)]
#[command(name = "torus-skein", version, about = "Exact checks for the torus braid skein algebra")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Print a named element, or its image on a polynomial.
    Element(ElementArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// daha-relations, presentation-iso, theta4, power-sum-central,
    /// pw-comparison, hall-transport, hecke, theta-series, negative-control
    /// or all.
    #[arg(long, env = "TORUS_SKEIN_SUITE", default_value = "all")]
    suite: String,
    #[arg(long, env = "TORUS_SKEIN_N", default_value_t = 2)]
    n: usize,
    #[arg(long = "m-max", env = "TORUS_SKEIN_M_MAX", default_value_t = 2)]
    m_max: u32,
    /// Radius of the monomial box.
    #[arg(long = "box", env = "TORUS_SKEIN_BOX", default_value_t = 2)]
    box_radius: u32,
    #[arg(long, env = "TORUS_SKEIN_PRIME", default_value_t = 2_147_483_647)]
    prime: u64,
    /// Modular specializations tried before the exact pass.
    #[arg(long, env = "TORUS_SKEIN_TRIALS", default_value_t = 3)]
    trials: u32,
    #[arg(long, env = "TORUS_SKEIN_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "TORUS_SKEIN_FORMAT", default_value = "json")]
    format: String,
    /// Record wall time per check. Reports stop being reproducible.
    #[arg(long, env = "TORUS_SKEIN_TIMINGS")]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Qtilde,
    Q,
    W,
    Theta,
}

#[derive(Args)]
struct ElementArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Lattice vector, e.g. "(1,0)" or "1,0".
    #[arg(allow_hyphen_values = true)]
    x: String,
    #[arg(long, env = "TORUS_SKEIN_N", default_value_t = 2)]
    n: usize,
    /// Truncation order of the theta series.
    #[arg(long, default_value_t = 2)]
    order: usize,
    /// Build W from power sums instead of the general formula.
    #[arg(long)]
    axis: bool,
    /// Polynomial in X1..Xn to apply the element to, e.g. "1" or "X1 X2^-1".
    #[arg(long = "apply-to")]
    apply_to: Option<String>,
}

/// Usage errors exit with 2, failed checks with 1.
enum Failure {
    Usage(String),
    Checks,
}

fn parse_vec(text: &str) -> Result<Vec2, String> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let a = a.parse::<i64>().map_err(|e| format!("bad vector `{text}`: {e}"))?;
            let b = b.parse::<i64>().map_err(|e| format!("bad vector `{text}`: {e}"))?;
            Ok(Vec2::new(a, b))
        }
        _ => Err(format!("bad vector `{text}`: expected two integers")),
    }
}

fn verify_cmd(a: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = a.suite.parse().map_err(|e: verify::VerifyError| Failure::Usage(e.to_string()))?;
    let format: Format = a.format.parse().map_err(|e: verify::VerifyError| Failure::Usage(e.to_string()))?;
    let cfg = VerifyConfig {
        suite,
        n: a.n,
        m_max: a.m_max,
        box_radius: a.box_radius,
        prime: a.prime,
        modular_trials: a.trials,
        seed: a.seed,
        format,
        timings: a.timings,
    };
    let report = verify::run(&cfg).map_err(|e| match e {
        verify::VerifyError::Daha(d) => {
            eprintln!("error: {d}");
            Failure::Checks
        }
        other => Failure::Usage(other.to_string()),
    })?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    let s = &report.summary;
    eprintln!("{}: {} checks, {} failed", cfg.suite, s.total, s.failed);
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn element_cmd(a: ElementArgs) -> Result<(), Failure> {
    let usage = |e: String| Failure::Usage(e);
    let x = parse_vec(&a.x).map_err(usage)?;
    let n = a.n;
    if let Kind::Theta = a.kind {
        let th = theta_series(x, a.order).map_err(|e| usage(e.to_string()))?;
        for (i, t) in th.iter().enumerate() {
            println!("theta_{i}: {t}");
        }
        return Ok(());
    }
    let x = x.tuple();
    let el: Element = match a.kind {
        Kind::Qtilde => qtilde(x, n).map_err(|e| usage(e.to_string()))?,
        Kind::Q => q_elements(x, n).map_err(|e| usage(e.to_string()))?.1,
        Kind::W => {
            let mode = if a.axis { WMode::Axis } else { WMode::General };
            w_element(x, n, mode).map_err(|e| usage(e.to_string()))?
        }
        Kind::Theta => unreachable!(),
    };
    match a.apply_to {
        None => println!("{el}"),
        Some(text) => {
            let f = LaurentPoly::parse(&text, n).map_err(|e| usage(e.to_string()))?;
            let conv = build_rep(n).map_err(|e| usage(e.to_string()))?;
            let img = apply_expr(&Expr::from_element(&el), conv, &f).map_err(|e| usage(e.to_string()))?;
            println!("{img}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = match cli.cmd {
        Cmd::Verify(a) => verify_cmd(a),
        Cmd::Element(a) => element_cmd(a),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `torus-skein --help` for usage");
            ExitCode::from(2)
        }
    }
}
