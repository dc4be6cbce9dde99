//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the process exit code: 0 on success, 1 on domain
//! errors (reported as a JSON object on standard output), 2 on usage errors.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bipoint::{outer_bipoint, MetricComponents, MetricKind};
use crate::error::{Error, Result};
use crate::function_space::{l11_membership, transform_bl_pl, Bifunction};
use crate::harness::{run_conformance, HarnessBackend, StructureKind, StructureSpec};
use crate::hopf::{
    build_group_bisemialgebra, hopf_axiom_check, star_involution_check, FiniteGroup,
};
use crate::linalg::{vector_from_json, vector_to_json, Matrix};
use crate::matrix::{decomposition_to_json, SplitRule};
use crate::scalar::{parse_rational, Complex64, Rational, Scalar};
use crate::tensor::{
    inner_product, mixed_product, project_p, riesz_b, InnerProductSpec, PairingMode,
    SemimoduleVector, Side, Stage,
};

pub const SEED_ENV: &str = "BISEMIKIT_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "bisemikit",
    version,
    about = "Bisemistructure computations with JSON I/O"
)]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gauss LDU factors and the bilinear split of a square matrix.
    Decompose {
        /// JSON array of rows, or CSV (one row per line).
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = RuleArg::DeltaLeft)]
        rule: RuleArg,
        #[command(flatten)]
        backend: BackendArg,
    },
    /// Outer-product bipoint of a right tuple and a left tuple.
    Bipoint {
        right: PathBuf,
        left: PathBuf,
        #[command(flatten)]
        backend: BackendArg,
    },
    /// Pairs a right vector with a left vector at the chosen stage.
    Inner {
        /// JSON object `{"right": [...], "left": [...], "metric": [[...]]?}`.
        /// Without `right`, the involution of `left` is used.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Diag)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = StageArg::Mixed)]
        stage: StageArg,
        #[command(flatten)]
        backend: BackendArg,
    },
    /// Axiom report for the group bisemialgebra of a finite group.
    Hopf {
        /// z<n>, z2xz2, s3, or table:<file> with a Cayley table.
        #[arg(long)]
        group: String,
        /// Also check the star involution (complex backend only).
        #[arg(long)]
        star: bool,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[command(flatten)]
        backend: BackendArg,
    },
    /// Conformance report for a structure kind over a carrier.
    Check {
        #[arg(long, value_parser = parse_kind)]
        structure: StructureKind,
        #[arg(long, value_parser = parse_harness_backend, default_value = "integer")]
        backend: HarnessBackend,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Defaults to $BISEMIKIT_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// L1 product and squared transform of a sampled bifunction.
    Transform {
        /// JSON object `{"samples_R", "samples_L", "weights"?}`.
        input: PathBuf,
        /// Bound reported against in `l11_within_bound`.
        #[arg(long, default_value_t = f64::INFINITY)]
        bound: f64,
    },
}

#[derive(Debug, Args)]
struct BackendArg {
    #[arg(long, value_enum, default_value_t = ScalarBackend::Rational)]
    backend: ScalarBackend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScalarBackend {
    Rational,
    Complex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RuleArg {
    DeltaLeft,
    DeltaSqrt,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Diag,
    Ext,
    Offdiag,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StageArg {
    Mixed,
    External,
    Internal,
}

fn parse_kind(s: &str) -> std::result::Result<StructureKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_harness_backend(s: &str) -> std::result::Result<HarnessBackend, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let seed = match env_seed() {
        Ok(seed) => seed,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    if let Command::Hopf {
        star: true,
        backend,
        ..
    } = &cli.command
    {
        if backend.backend != ScalarBackend::Complex {
            eprintln!("error: --star needs --backend complex");
            return 2;
        }
    }
    let (value, code) = match execute(&cli.command, seed) {
        Ok(v) => (v, 0),
        Err(e) => (error_json(&e), 1),
    };
    let text = serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n";
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                print!(
                    "{}",
                    serde_json::to_string_pretty(&error_json(&e.into())).unwrap() + "\n"
                );
                return 1;
            }
        }
        None => print!("{text}"),
    }
    code
}

fn env_seed() -> std::result::Result<Option<u64>, String> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{SEED_ENV}=`{v}` is not an unsigned integer")),
        Err(_) => Ok(None),
    }
}

/// The JSON object printed for a domain error.
pub fn error_json(e: &Error) -> Value {
    json!({
        "error": e.name(),
        "detail": e.to_string(),
        "location": e.location(),
    })
}

fn execute(cmd: &Command, env_seed: Option<u64>) -> Result<Value> {
    match cmd {
        Command::Decompose {
            input,
            rule,
            backend,
        } => {
            let rule = match rule {
                RuleArg::DeltaLeft => SplitRule::DeltaLeft,
                RuleArg::DeltaSqrt => SplitRule::DeltaSqrt,
            };
            match backend.backend {
                ScalarBackend::Rational => {
                    decomposition_to_json(&read_matrix::<Rational>(input)?, rule)
                }
                ScalarBackend::Complex => {
                    decomposition_to_json(&read_matrix::<Complex64>(input)?, rule)
                }
            }
        }
        Command::Bipoint {
            right,
            left,
            backend,
        } => match backend.backend {
            ScalarBackend::Rational => bipoint::<Rational>(right, left),
            ScalarBackend::Complex => bipoint::<Complex64>(right, left),
        },
        Command::Inner {
            input,
            mode,
            stage,
            backend,
        } => {
            let spec = InnerProductSpec::new(
                match mode {
                    ModeArg::Diag => PairingMode::Diagonal,
                    ModeArg::Ext => PairingMode::Extended,
                    ModeArg::Offdiag => PairingMode::OffDiagonal,
                },
                match stage {
                    StageArg::Mixed => Stage::Mixed,
                    StageArg::External => Stage::External,
                    StageArg::Internal => Stage::Internal,
                },
            );
            let v = read_json(input)?;
            match backend.backend {
                ScalarBackend::Rational => inner::<Rational>(&v, spec),
                ScalarBackend::Complex => inner::<Complex64>(&v, spec),
            }
        }
        Command::Hopf {
            group,
            star,
            samples,
            backend,
        } => {
            let group = match group.strip_prefix("table:") {
                Some(path) => FiniteGroup::from_json(&read_json(Path::new(path))?)?,
                None => FiniteGroup::named(group)?,
            };
            match backend.backend {
                ScalarBackend::Rational => Ok(hopf_report::<Rational>(&group)),
                ScalarBackend::Complex => {
                    let mut out = hopf_report::<Complex64>(&group);
                    if *star {
                        let h = build_group_bisemialgebra::<Complex64>(&group);
                        out["star"] =
                            json!(star_involution_check(&h, *samples, env_seed.unwrap_or(0)));
                    }
                    Ok(out)
                }
            }
        }
        Command::Check {
            structure,
            backend,
            samples,
            seed,
        } => {
            let seed = seed.or(env_seed).unwrap_or(0);
            let report = run_conformance(
                &StructureSpec::standard(*structure, *backend),
                *samples as usize,
                seed,
            )?;
            Ok(report.to_json())
        }
        Command::Transform { input, bound } => {
            let bf = Bifunction::from_json(&read_json(input)?)?;
            let l11 = l11_membership(&bf, *bound);
            let t = transform_bl_pl(&bf);
            Ok(json!({
                "l11": l11.value,
                "l11_within_bound": l11.within_bound,
                "l2": t.l2_value,
                "squared_samples": t.squared.to_json(),
            }))
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Scalars that can be read from a bare CSV cell.
trait CsvCell: Sized {
    fn parse_cell(cell: &str) -> Result<Self>;
}

impl CsvCell for Rational {
    fn parse_cell(cell: &str) -> Result<Self> {
        parse_rational(cell)
    }
}

impl CsvCell for Complex64 {
    fn parse_cell(cell: &str) -> Result<Self> {
        parse_rational(cell).map(|r| r.to_complex()).or_else(|_| {
            cell.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not a complex number: `{cell}`")))
        })
    }
}

fn read_matrix<S: Scalar + CsvCell>(path: &Path) -> Result<Matrix<S>> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('[') {
        let v: Value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        return Matrix::from_json(&v);
    }
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(S::parse_cell).collect::<Result<Vec<S>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

fn bipoint<S: Scalar>(right: &Path, left: &Path) -> Result<Value> {
    let r: Vec<S> = vector_from_json(&read_json(right)?)?;
    let l: Vec<S> = vector_from_json(&read_json(left)?)?;
    Ok(outer_bipoint(&r, &l)?.to_json())
}

/// Carries the right vector through `p_L` (and `B_L` at the internal stage)
/// and pairs it with the left vector.
fn inner<S: Scalar>(v: &Value, spec: InnerProductSpec) -> Result<Value> {
    let left: Vec<S> = vector_from_json(v.get("left").unwrap_or(&Value::Null))?;
    let x_l = SemimoduleVector::left(left)?;
    let x_r = match v.get("right") {
        Some(r) => SemimoduleVector::right(vector_from_json(r)?)?,
        None => x_l.involuted(),
    };
    let mut trace = Vec::new();
    let value = match spec.stage {
        Stage::Mixed => mixed_product(&x_r, &x_l, spec)?,
        Stage::External => {
            let x_bar = project_p(&x_r, Side::Left)?;
            trace.push("p_L");
            inner_product(&x_bar, &x_l, spec)?
        }
        Stage::Internal => {
            let metric = match v.get("metric") {
                Some(g) => MetricComponents::new(MetricKind::Covariant, Matrix::from_json(g)?)?,
                None => MetricComponents::identity(x_l.dim()),
            };
            let x_bar = riesz_b(&project_p(&x_r, Side::Left)?, &metric)?;
            trace.extend(["p_L", "B_L"]);
            inner_product(&x_bar, &x_l, spec)?
        }
    };
    Ok(json!({
        "value": value.to_json(),
        "stage": spec.stage.name(),
        "trace": trace,
        "x_R": vector_to_json(x_r.coords()),
        "x_L": vector_to_json(x_l.coords()),
    }))
}

fn hopf_report<S: Scalar>(group: &FiniteGroup) -> Value {
    let h = build_group_bisemialgebra::<S>(group);
    let report = hopf_axiom_check(&h);
    json!({
        "group": group.name(),
        "order": group.order(),
        "all_pass": report.all_pass(),
        "axioms": report,
    })
}
