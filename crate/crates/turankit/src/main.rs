//! Command-line front end: evaluation tables, Turán scans, theorem
//! verification and density estimates, emitting CSV/JSON reports.
//!
//! Exit codes for `verify`: 0 = pass, 1 = bound violated, 2 = hypotheses
//! not satisfied (inapplicable), 3 = usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use turankit::bounds::{
    density_estimate, detect_nonmonotonicity, lb_infimum_scan, verify_prop29,
    verify_thm2_lower, verify_thm2a_upper, verify_thm41, Verdict,
};
use turankit::grid::{interior_grid, unit_grid, Spacing};
use turankit::polyeval::{eval_orthonormal, eval_p, eval_q, eval_qtilde};
use turankit::report::{csv_table, fmt_float};
use turankit::reference::check_cor12;
use turankit::schemes::FamilyDescriptor;
use turankit::turan::{check_fundamental, check_prop21, check_turanturan, TuranScan};

#[derive(Parser)]
#[command(name = "turankit", version, about = "Turán determinant scans and inequality verification for symmetric orthogonal polynomial recurrences")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    P,
    #[value(name = "orthonormal", alias = "big-p")]
    Orthonormal,
    Q,
    Qtilde,
}

#[derive(Args)]
struct CommonOpts {
    /// Family descriptor: JSON or shorthand (jacobi:0, qultra:0.5,0.25,
    /// remark28:0.05, remark36:0.6)
    #[arg(long)]
    family: String,
    /// Largest determinant/polynomial order scanned
    #[arg(long, default_value_t = 50)]
    n_max: usize,
    /// Number of grid points
    #[arg(long, default_value_t = 201)]
    grid: usize,
    #[arg(long, default_value = "uniform")]
    spacing: Spacing,
    /// Tolerance override (meaning depends on the check)
    #[arg(long)]
    tol: Option<f64>,
    /// Output file; stdout when absent
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a value table of one polynomial sequence
    Eval {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, value_enum, default_value = "p")]
        kind: EvalKind,
        /// Abscissae (repeatable or comma-separated)
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
        /// Highest order to evaluate
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Turán determinant values at chosen abscissae
    Turan {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
    },
    /// Verify a theorem on a family; exit code carries the verdict
    Verify {
        /// thm2 | thm2a | prop29 | prop21 | fund | turanturan | lb | thm41 |
        /// cor12 | nonmono
        theorem: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Batch Turán scan to CSV/JSON
    Scan {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Spectral density estimate via the Máté–Nevai limit
    Density {
        #[command(flatten)]
        common: CommonOpts,
    },
    /// List built-in family descriptors
    Families,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("TURANKIT_THREADS") {
        if let Ok(t) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(3);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> turankit::Result<u8> {
    match cli.cmd {
        Cmd::Families => {
            println!(r#"jacobi:<a>        {{"family":"jacobi","alpha":0.0}}"#);
            println!(r#"qultra:<q>,<b>    {{"family":"q_ultra","q":0.5,"beta":0.25}}"#);
            println!(r#"remark28:<eps>    {{"family":"remark28","epsilon":0.05}}"#);
            println!(r#"remark36:<l0>     {{"family":"remark36","lambda0":0.6}}"#);
            println!(r#"(JSON only)       {{"family":"custom_table","alphas":[0.0,0.4,0.45]}}"#);
            Ok(0)
        }
        Cmd::Eval { common, kind, x, n } => cmd_eval(common, kind, x, n),
        Cmd::Turan { common, x } => cmd_turan(common, x),
        Cmd::Scan { common } => cmd_scan(common),
        Cmd::Density { common } => cmd_density(common),
        Cmd::Verify { theorem, common } => cmd_verify(&theorem, common),
    }
}

fn emit(common: &CommonOpts, text: &str) -> turankit::Result<()> {
    match &common.out {
        Some(path) => std::io::Write::write_all(
            &mut std::fs::File::create(path).map_err(io_err)?,
            text.as_bytes(),
        )
        .map_err(io_err),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn io_err(e: std::io::Error) -> turankit::Error {
    turankit::Error::InvalidParameter(format!("io: {e}"))
}

fn cmd_eval(common: CommonOpts, kind: EvalKind, xs: Vec<f64>, n: usize) -> turankit::Result<u8> {
    let desc = FamilyDescriptor::parse(&common.family)?;
    let mut rows = vec![];
    for &x in &xs {
        let seq = match kind {
            EvalKind::P => eval_p(&desc.build(n + 2)?, n, x)?,
            EvalKind::Q => eval_q(&desc.build(n + 2)?, n, x)?,
            EvalKind::Qtilde => eval_qtilde(&desc.build(n + 2)?, n, x)?,
            EvalKind::Orthonormal => eval_orthonormal(&desc.build_orthonormal(n + 2)?, n, x)?,
        };
        for (k, v) in seq.values.iter().enumerate() {
            rows.push(vec![k.to_string(), fmt_float(x), fmt_float(*v)]);
        }
    }
    let text = match common.format {
        Format::Csv => csv_table(&["n", "x", "value"], &rows),
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n": r[0].parse::<usize>().unwrap(),
                        "x": r[1].parse::<f64>().unwrap(),
                        "value": r[2].parse::<f64>().unwrap(),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&items).unwrap())
        }
    };
    emit(&common, &text)?;
    Ok(0)
}

fn cmd_turan(common: CommonOpts, xs: Vec<f64>) -> turankit::Result<u8> {
    let desc = FamilyDescriptor::parse(&common.family)?;
    let s = desc.build(common.n_max + 4)?;
    let mut rows = vec![];
    for &x in &xs {
        for n in 1..=common.n_max {
            let f = turankit::turan::normalized_turan(&s, n, x)?;
            let d = f * (1.0 - x * x);
            rows.push(vec![n.to_string(), fmt_float(x), fmt_float(d), fmt_float(f)]);
        }
    }
    let text = csv_table(&["n", "x", "delta", "normalized"], &rows);
    emit(&common, &text)?;
    Ok(0)
}

fn cmd_scan(common: CommonOpts) -> turankit::Result<u8> {
    let desc = FamilyDescriptor::parse(&common.family)?;
    let s = desc.build(common.n_max + 4)?;
    let grid = interior_grid(common.grid, common.spacing);
    let scan = TuranScan::run(&s, common.n_max, &grid)?;
    let text = match common.format {
        Format::Csv => scan.to_csv(),
        Format::Json => format!("{}\n", scan.to_json()),
    };
    emit(&common, &text)?;
    Ok(0)
}

fn cmd_density(common: CommonOpts) -> turankit::Result<u8> {
    let desc = FamilyDescriptor::parse(&common.family)?;
    let l = desc.build_orthonormal(2 * common.n_max + 2)?;
    let grid = interior_grid(common.grid, common.spacing);
    let est = density_estimate(&l, common.n_max.max(2), &grid)?;
    let text = match common.format {
        Format::Csv => est.to_csv(),
        Format::Json => format!("{}\n", est.to_json()),
    };
    emit(&common, &text)?;
    Ok(0)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Inapplicable => 2,
    }
}

fn cmd_verify(theorem: &str, common: CommonOpts) -> turankit::Result<u8> {
    let desc = FamilyDescriptor::parse(&common.family)?;
    let grid = interior_grid(common.grid, common.spacing);
    let n_max = common.n_max;
    match theorem {
        "thm2" => {
            let s = desc.build(n_max + 4)?;
            let cert = verify_thm2_lower(&s, n_max, &grid, common.tol.unwrap_or(1e-10))?;
            emit(&common, &format!("{}\n", cert.to_json()))?;
            Ok(verdict_code(cert.verdict))
        }
        "thm2a" => {
            let s = desc.build(n_max + 4)?;
            let cert = verify_thm2a_upper(&s, n_max, &grid, common.tol.unwrap_or(1e-10))?;
            emit(&common, &format!("{}\n", cert.to_json()))?;
            Ok(verdict_code(cert.verdict))
        }
        "prop29" => {
            let s = desc.build(n_max + 4)?;
            let cert = verify_prop29(&s, n_max, &grid, common.tol.unwrap_or(1e-11))?;
            emit(&common, &format!("{}\n", cert.to_json()))?;
            Ok(verdict_code(cert.verdict))
        }
        "prop21" | "fund" | "turanturan" => {
            let s = desc.build(n_max + 4)?;
            let base = common.tol.unwrap_or(1e-10);
            let rep = match theorem {
                "prop21" => check_prop21(&s, (2, n_max), &grid, base)?,
                "fund" => check_fundamental(&s, (1, n_max), &grid, base)?,
                _ => check_turanturan(&s, (1, n_max), &grid, base)?,
            };
            emit(&common, &format!("{}\n", serde_json::to_string_pretty(&rep).unwrap()))?;
            Ok(if rep.pass { 0 } else { 1 })
        }
        "lb" => {
            let l = desc.build_orthonormal(n_max + 2)?;
            let scan = lb_infimum_scan(&l, n_max, common.grid)?;
            emit(&common, &format!("{}\n", serde_json::to_string_pretty(&scan).unwrap()))?;
            Ok(verdict_code(scan.verdict))
        }
        "thm41" => match desc {
            FamilyDescriptor::QUltra { q, beta } => {
                let cert = verify_thm41(q, beta, n_max, &grid, common.tol.unwrap_or(1e-9))?;
                emit(&common, &format!("{}\n", cert.to_json()))?;
                Ok(verdict_code(cert.verdict))
            }
            _ => Err(turankit::Error::InvalidParameter(
                "thm41 needs a qultra family".into(),
            )),
        },
        "cor12" => match desc {
            FamilyDescriptor::Jacobi { alpha } => {
                let rep = check_cor12(alpha, n_max, &grid)?;
                emit(
                    &common,
                    &format!(
                        "{{\"a\": {}, \"reversed\": {}, \"min_margin\": {}, \"pass\": {}}}\n",
                        fmt_float(rep.a),
                        rep.reversed,
                        fmt_float(rep.min_margin),
                        rep.pass
                    ),
                )?;
                Ok(if rep.pass { 0 } else { 1 })
            }
            _ => Err(turankit::Error::InvalidParameter(
                "cor12 needs a jacobi family".into(),
            )),
        },
        "nonmono" => {
            let s = desc.build(n_max + 4)?;
            let g = unit_grid(common.grid, common.spacing);
            let scan = detect_nonmonotonicity(&s, n_max, &g)?;
            emit(&common, &format!("{}\n", serde_json::to_string_pretty(&scan).unwrap()))?;
            Ok(0)
        }
        other => Err(turankit::Error::InvalidParameter(format!(
            "unknown theorem tag `{other}`"
        ))),
    }
}
