use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use skewalg::algebraicity::Subring;

use skewalg_cli::commands::{self, Settings};
use skewalg_cli::report::{Report, SCHEMA_VERSION};
use skewalg_cli::{parse_expr, parse_quat, parse_rational};

#[derive(Parser, Debug)]
#[command(name = "skewalg", version, about = "Exact algebraicity checks in skew Laurent series and quaternion algebras")]
struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    /// Known terms for series inverses and verification windows.
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,
    /// Write the JSON report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Sample count for sampled checks (each command has its own default).
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Claims about the example field and its subgroups.
    #[command(subcommand)]
    Verify(Verify),
    /// Left minimal polynomial of an element over K, F or Q.
    Minpoly {
        #[arg(long)]
        element: String,
        #[arg(long, default_value = "K")]
        over: Subring,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Quaternion algebra computations.
    #[command(subcommand)]
    Quat(QuatCommand),
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Left degree <= 2 over K, the right-side kernels and the monomial witness.
    Example {
        #[arg(long, default_value_t = 3)]
        right_degree: usize,
        #[arg(long, default_value_t = 4)]
        window: usize,
    },
    /// degmin additivity and inversion.
    Degmin,
    /// Closure and normality of N = {degmin 0}.
    NormalSubgroup,
    /// Central scalars commute with N; non-central elements have witnesses.
    Centralizer,
    /// The commutator identity and the inverse-span reconstruction.
    Thm23,
    /// Independence of shifted inverses over Q and dependence over K.
    Lemma22,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Parameter a in i^2 = a.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    a: String,
    /// Parameter b in j^2 = b.
    #[arg(long, default_value = "-1", allow_hyphen_values = true)]
    b: String,
}

#[derive(Subcommand, Debug)]
enum QuatCommand {
    /// Operator, invariant factors, cyclic vector and maximal-subfield generator for x.
    Pipeline {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        d: usize,
    },
    /// Minimal polynomial over the center.
    Minpoly {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

fn rational(flag: &str, src: &str) -> Result<BigRational, String> {
    parse_rational(src).map_err(|e| format!("--{flag} {src:?}: {e}"))
}

fn build(cli: &Cli, settings: &Settings) -> Result<Report, String> {
    let name = match &cli.command {
        Command::Verify(v) => match v {
            Verify::Example { .. } => "verify example",
            Verify::Degmin => "verify degmin",
            Verify::NormalSubgroup => "verify normal-subgroup",
            Verify::Centralizer => "verify centralizer",
            Verify::Thm23 => "verify thm23",
            Verify::Lemma22 => "verify lemma22",
        },
        Command::Minpoly { .. } => "minpoly",
        Command::Quat(QuatCommand::Pipeline { .. }) => "quat pipeline",
        Command::Quat(QuatCommand::Minpoly { .. }) => "quat minpoly",
    };
    let mut r = Report::new(name, cli.seed);
    r.param("schema_version", SCHEMA_VERSION).param("precision", cli.precision);
    if let Some(n) = cli.samples {
        r.param("samples", n);
    }
    match &cli.command {
        Command::Verify(Verify::Example { right_degree, window }) => {
            commands::verify_example(settings, *right_degree, *window, &mut r)
        }
        Command::Verify(Verify::Degmin) => commands::verify_degmin(settings, &mut r),
        Command::Verify(Verify::NormalSubgroup) => commands::verify_normal_subgroup(settings, &mut r),
        Command::Verify(Verify::Centralizer) => commands::verify_centralizer(settings, &mut r),
        Command::Verify(Verify::Thm23) => commands::verify_thm23(settings, &mut r),
        Command::Verify(Verify::Lemma22) => commands::verify_lemma22(&mut r),
        Command::Minpoly { element, over, bound } => {
            let ast = parse_expr(element).map_err(|e| format!("--element {element:?}: {e}"))?;
            let value = ast.eval(cli.precision).map_err(|e| format!("--element {element:?}: {e}"))?;
            commands::minpoly(settings, &value, *over, *bound, &mut r);
        }
        Command::Quat(QuatCommand::Pipeline { algebra, x, d }) => {
            let alg = commands::algebra(rational("a", &algebra.a)?, rational("b", &algebra.b)?)
                .map_err(|e| e.to_string())?;
            let x = parse_quat(x, &alg).map_err(|e| format!("--x {x:?}: {e}"))?;
            commands::quat_pipeline(settings, &x, *d, &mut r);
        }
        Command::Quat(QuatCommand::Minpoly { algebra, q }) => {
            let alg = commands::algebra(rational("a", &algebra.a)?, rational("b", &algebra.b)?)
                .map_err(|e| e.to_string())?;
            let q = parse_quat(q, &alg).map_err(|e| format!("--q {q:?}: {e}"))?;
            commands::quat_minpoly(&q, &mut r);
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let settings = Settings {
        seed: cli.seed,
        precision: cli.precision,
        samples: cli.samples,
    };
    let mut report = match build(&cli, &settings) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    report.finish(started);
    println!("{report}");
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let failed = report.failures();
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed checks: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
