//! `orbk`: compute rational equivariant K-homology ranks of 3-orbifold
//! quotients from orbit-complex files, with both the fast combinatorial path
//! and the chain-complex oracle.
//!
//! Exit codes: 0 success, 1 validation failure (including unreadable or
//! malformed input), 2 internal inconsistency (fast/oracle mismatch or a
//! chain complex whose differentials do not compose to zero), 3 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use orbk_core::group::DEFAULT_ORDER_CAP;
use orbk_core::{bredon, builders, doc, ktheory};
use orbk_core::{ComplexError, KTheoryReport, OrbitComplex};

mod report;

const EXIT_VALIDATION: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "orbk",
    about = "Rational equivariant K-homology ranks of 3-orbifold quotients",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every structural invariant of an orbit-complex file.
    Validate { file: PathBuf },
    /// Run the fast combinatorial computation on a file.
    Compute {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the chain-complex oracle on a file (any number of 3-cells).
    Oracle {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run both routes and report whether they agree.
    Compare {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a bundled family and run the fast computation on it.
    Builtin {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build a bundled family and write it to an orbit-complex file.
    Export {
        #[command(flatten)]
        family: FamilyArgs,
        /// Output path.
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct FamilyArgs {
    /// One of: lambda, gamma, heisenberg, crystallographic, mapping-torus.
    name: String,
    /// Family parameter for `lambda` (n >= 5) and `gamma` (n >= 2).
    #[arg(long)]
    n: Option<usize>,
    /// Gluing matrix for `mapping-torus` as `a,b,c,d` (row major,
    /// determinant +-1). Defaults to the identity.
    #[arg(long, value_name = "a,b,c,d", allow_hyphen_values = true)]
    alpha: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are successes, anything else is a
            // usage error.
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<ComplexError> for Failure {
    fn from(err: ComplexError) -> Self {
        let code = match err {
            ComplexError::NonzeroComposition(..) | ComplexError::OrientabilityMismatch(..) => {
                EXIT_INCONSISTENT
            }
            _ => EXIT_VALIDATION,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<doc::DocError> for Failure {
    fn from(err: doc::DocError) -> Self {
        match err {
            doc::DocError::Complex(e) => e.into(),
            other => Failure::validation(other.to_string()),
        }
    }
}

fn order_cap() -> Result<usize, Failure> {
    match std::env::var("ORBK_GROUP_ORDER_CAP") {
        Ok(text) => text.parse::<usize>().map_err(|_| {
            Failure::usage(format!(
                "ORBK_GROUP_ORDER_CAP must be a positive integer, got `{text}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_ORDER_CAP),
    }
}

fn load(file: &std::path::Path) -> Result<OrbitComplex, Failure> {
    let complex = doc::parse(file, order_cap()?)?;
    Ok(complex)
}

fn ensure_valid(complex: &OrbitComplex) -> Result<(), Failure> {
    let report = complex.validate();
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::validation(format!(
            "complex failed validation:\n{}",
            report.issues.join("\n")
        )))
    }
}

fn build_family(family: &FamilyArgs) -> Result<(String, OrbitComplex), Failure> {
    let need_n = |what: &str| {
        family
            .n
            .ok_or_else(|| Failure::usage(format!("family `{what}` needs --n <N>")))
    };
    match family.name.as_str() {
        "lambda" => {
            let n = need_n("lambda")?;
            Ok((format!("lambda_{n}"), builders::lambda_n(n)?))
        }
        "gamma" => {
            let n = need_n("gamma")?;
            Ok((format!("gamma_{n}"), builders::gamma_n(n)?))
        }
        "heisenberg" => Ok(("heisenberg_z4".into(), builders::heisenberg_z4()?)),
        "crystallographic" => Ok(("crystallographic_sym".into(), builders::crystallographic_sym()?)),
        "mapping-torus" => {
            let alpha = parse_alpha(family.alpha.as_deref())?;
            let tag = alpha
                .iter()
                .flatten()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            Ok((format!("mapping_torus_{tag}"), builders::mapping_torus(alpha)?))
        }
        other => Err(Failure::usage(format!(
            "unknown family `{other}` (expected lambda, gamma, heisenberg, crystallographic or mapping-torus)"
        ))),
    }
}

fn parse_alpha(text: Option<&str>) -> Result<[[i64; 2]; 2], Failure> {
    let Some(text) = text else {
        return Ok([[1, 0], [0, 1]]);
    };
    let parts: Vec<i64> = text
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            Failure::usage(format!(
                "--alpha expects four integers `a,b,c,d`, got `{text}`"
            ))
        })?;
    if parts.len() != 4 {
        return Err(Failure::usage(format!(
            "--alpha expects four integers `a,b,c,d`, got `{text}`"
        )));
    }
    Ok([[parts[0], parts[1]], [parts[2], parts[3]]])
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Validate { file } => {
            let complex = load(&file)?;
            let report = complex.validate();
            println!("{}", report::validation(&complex, &report));
            if report.is_valid() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VALIDATION))
            }
        }
        Command::Compute { file, json } => {
            let complex = load(&file)?;
            ensure_valid(&complex)?;
            let k = ktheory::compute(&complex)?;
            print_report(&complex, &k, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file, json } => {
            let complex = load(&file)?;
            ensure_valid(&complex)?;
            let chain = bredon::assemble(&complex)?;
            let betas = bredon::homology_ranks(&chain);
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "beta0": betas[0],
                        "beta1": betas[1],
                        "beta2": betas[2],
                        "beta3": betas[3],
                        "dims": chain.dims,
                    })
                );
            } else {
                println!("{}", report::oracle(&chain, betas));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare { file, json } => {
            let complex = load(&file)?;
            ensure_valid(&complex)?;
            let fast = ktheory::compute(&complex)?;
            let chain = bredon::assemble(&complex)?;
            let oracle = bredon::homology_ranks(&chain);
            let matches = fast.betas() == oracle;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "fast": fast,
                        "oracle": {
                            "beta0": oracle[0],
                            "beta1": oracle[1],
                            "beta2": oracle[2],
                            "beta3": oracle[3],
                        },
                        "match": matches,
                    })
                );
            } else {
                println!("fast   betas: {:?}", fast.betas());
                println!("oracle betas: {oracle:?}");
                println!("{}", if matches { "PASS" } else { "FAIL" });
            }
            if matches {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(Failure {
                    code: EXIT_INCONSISTENT,
                    message: "fast path and oracle disagree".into(),
                })
            }
        }
        Command::Builtin { family, json } => {
            let (_, complex) = build_family(&family)?;
            ensure_valid(&complex)?;
            let k = ktheory::compute(&complex)?;
            print_report(&complex, &k, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { family, output } => {
            let (name, complex) = build_family(&family)?;
            ensure_valid(&complex)?;
            let text = doc::export(&name, &complex);
            std::fs::write(&output, text).map_err(|err| {
                Failure::validation(format!("cannot write `{}`: {err}", output.display()))
            })?;
            println!("wrote {}", output.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn print_report(complex: &OrbitComplex, k: &KTheoryReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(k).expect("report serializes"));
    } else {
        println!("{}", report::fast(complex, k));
    }
}
