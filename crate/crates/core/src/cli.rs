//! The `specht` command line: one verb per invocation, one JSON document out.
//!
//! Exit status is 0 when everything checked out, 1 when a mathematical
//! assertion failed, and 2 for usage, I/O or input errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::garnir::{relation_space, RelationFamily, Straightener};
use crate::json::{emit_bracket_vector, emit_vector, parse_bracket_vector, parse_str, parse_vector, to_string};
use crate::lanke::{
    appendix_identity_check, catalanke_verify, lanke_ambient, lanke_shape, psi_phi_vanishes, standard_brackets,
    BracketStraightener,
};
use crate::linalg::{format_rational, subspace_equal, Ambient};
use crate::partition::{catalan, syt_count, syt_enumerate, Partition};
use crate::spectrum::eta_spectrum;
use crate::tabloid::column_basis;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the worker-thread count.
pub const THREADS_ENV: &str = "SPECHT_THREADS";

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Specht modules, dual Garnir relations and comb brackets")]
struct Cli {
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Refuse modules whose basis is larger than this.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_basis: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ShapeArg {
    /// Partition, e.g. `2,2,1`.
    #[arg(long)]
    shape: Partition,
}

#[derive(Args, Debug)]
struct NArg {
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of the column-tabloid module, the Specht module and the row-tabloid module.
    Dims(ShapeArg),
    /// Ordered column tabloids and standard tableaux of a shape.
    Modbasis(ShapeArg),
    /// Relation subspace of one family, or a comparison of all three.
    Relations {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value = "full")]
        family: RelationFamily,
        /// `all` compares every family against each other.
        #[arg(long)]
        compare: Option<String>,
    },
    /// Standard-tableau expansion of a column-tabloid vector.
    Straighten {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value = "full")]
        family: RelationFamily,
        /// JSON vector file; standard input when absent or `-`.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Eigenvalues of η on the two-column shape with columns of length n and m.
    EtaSpectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Quotient dimension, im η = im φ and the standard-bracket basis.
    LankeVerify(NArg),
    /// Standard-bracket expansion of a bracket vector modulo im φ.
    LankeStraighten {
        #[command(flatten)]
        n: NArg,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// The standard brackets for n.
    LankeBasis(NArg),
    /// The polytabloid Jacobi identity and Ψ̃∘φ = 0.
    AppendixCheck(NArg),
}

enum Outcome {
    Ok(Value),
    Failed(Value),
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Math(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) | Error::Attribution(_) => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn guard(ambient: &Ambient, cap: usize) -> Result<(), CliError> {
    let dim = ambient.dim();
    if dim > cap {
        return Err(CliError::Usage(format!(
            "{ambient} has {dim} basis elements, above --max-basis {cap}"
        )));
    }
    Ok(())
}

fn guard_shape(shape: &Partition, cap: usize) -> Result<(), CliError> {
    guard(&Ambient::Column(shape.clone()), cap)?;
    guard(&Ambient::Row(shape.clone()), cap)
}

fn read_input(path: &Option<PathBuf>) -> Result<Value, CliError> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    Ok(parse_str(&text)?)
}

fn relations(shape: &Partition, family: RelationFamily, compare: Option<&str>) -> Result<Outcome, CliError> {
    match compare {
        None => {
            let space = relation_space(shape, family)?;
            Ok(Outcome::Ok(json!({
                "family": family.name(),
                "dim": space.dim(),
                "codim": space.codim(),
                "basis": space.rows().iter().map(emit_vector).collect::<Vec<_>>(),
            })))
        }
        Some("all") => {
            let spaces = RelationFamily::ALL
                .iter()
                .map(|&f| relation_space(shape, f))
                .collect::<crate::Result<Vec<_>>>()?;
            let mut all_equal = true;
            for s in &spaces[1..] {
                all_equal &= subspace_equal(&spaces[0], s)?;
            }
            let mut dims = serde_json::Map::new();
            for (f, s) in RelationFamily::ALL.iter().zip(&spaces) {
                dims.insert(f.name().into(), s.dim().into());
            }
            let out = json!({"dims": dims, "all_equal": all_equal});
            Ok(if all_equal { Outcome::Ok(out) } else { Outcome::Failed(out) })
        }
        Some(other) => Err(CliError::Usage(format!("--compare takes `all`, got {other:?}"))),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = cli.max_basis;
    match &cli.command {
        Command::Dims(ShapeArg { shape }) => Ok(Outcome::Ok(json!({
            "m_tilde": Ambient::Column(shape.clone()).dim(),
            "specht": syt_count(shape),
            "row_module": Ambient::Row(shape.clone()).dim(),
        }))),
        Command::Modbasis(ShapeArg { shape }) => {
            guard(&Ambient::Column(shape.clone()), cap)?;
            Ok(Outcome::Ok(json!({
                "shape": shape,
                "column_tabloids": column_basis(shape),
                "standard_tableaux": syt_enumerate(shape),
            })))
        }
        Command::Relations { shape, family, compare } => {
            guard(&Ambient::Column(shape.shape.clone()), cap)?;
            relations(&shape.shape, *family, compare.as_deref())
        }
        Command::Straighten { shape, family, input } => {
            let shape = &shape.shape;
            guard(&Ambient::Column(shape.clone()), cap)?;
            let v = parse_vector(&read_input(input)?, &Ambient::Column(shape.clone()))?;
            let st = Straightener::new(shape, *family)?;
            let terms = st.straighten(&v)?;
            let defect_ok = st.relations().contains(&st.defect(&v, &terms))?;
            let out = json!({
                "terms": terms
                    .iter()
                    .map(|(t, c)| json!({"tableau": t, "coeff": format_rational(c)}))
                    .collect::<Vec<_>>(),
                "defect_in_relations": defect_ok,
            });
            Ok(if defect_ok { Outcome::Ok(out) } else { Outcome::Failed(out) })
        }
        Command::EtaSpectrum { n, m } => {
            guard(&Ambient::Column(Partition::two_column(*n, *m)?), cap)?;
            let report = eta_spectrum(*n, *m)?;
            let failures = report.failures();
            let mut out = serde_json::to_value(&report).expect("report serializes");
            if failures.is_empty() {
                Ok(Outcome::Ok(out))
            } else {
                out["failures"] = json!(failures);
                Ok(Outcome::Failed(out))
            }
        }
        Command::LankeVerify(NArg { n }) => {
            guard(&lanke_ambient(*n)?, cap)?;
            let r = catalanke_verify(*n)?;
            let mut out = json!({
                "ambient": r.ambient,
                "quotient": r.quotient,
                "catalan": r.catalan,
                "im_eta_eq_im_phi": r.im_eta_eq_im_phi,
                "standard_basis_ok": r.standard_basis_ok,
            });
            if r.ok() {
                return Ok(Outcome::Ok(out));
            }
            let witnesses = r
                .witnesses
                .iter()
                .map(|w| {
                    let vector = w.vector.as_ref().map(emit_bracket_vector).transpose()?;
                    Ok(json!({"assertion": w.assertion, "vector": vector}))
                })
                .collect::<crate::Result<Vec<_>>>()?;
            out["witnesses"] = json!(witnesses);
            Ok(Outcome::Failed(out))
        }
        Command::LankeStraighten { n: NArg { n }, input } => {
            guard(&lanke_ambient(*n)?, cap)?;
            let v = parse_bracket_vector(&read_input(input)?, *n)?;
            let terms = BracketStraightener::new(*n)?.straighten(&v)?;
            Ok(Outcome::Ok(json!({
                "terms": terms
                    .iter()
                    .map(|(b, c)| json!({"bracket": b, "coeff": format_rational(c)}))
                    .collect::<Vec<_>>(),
            })))
        }
        Command::LankeBasis(NArg { n }) => {
            guard(&lanke_ambient(*n)?, cap)?;
            let std = standard_brackets(*n)?;
            let out = json!({"n": n, "count": std.len(), "catalan": catalan(*n), "standard": std});
            Ok(if std.len() as u128 == catalan(*n) { Outcome::Ok(out) } else { Outcome::Failed(out) })
        }
        Command::AppendixCheck(NArg { n }) => {
            guard_shape(&lanke_shape(*n)?, cap)?;
            let identity = appendix_identity_check(*n)?;
            let psi_phi = psi_phi_vanishes(*n)?;
            let out = json!({"n": n, "appendix_identity": identity, "psi_phi_zero": psi_phi});
            Ok(if identity && psi_phi { Outcome::Ok(out) } else { Outcome::Failed(out) })
        }
    }
}

fn emit(cli: &Cli, value: &Value, stdout: &mut dyn Write) -> Result<(), String> {
    let text = to_string(value);
    match &cli.output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => writeln!(stdout, "{text}").map_err(|e| format!("cannot write output: {e}")),
    }
}

/// Parses `argv` (program name first), runs the verb and returns the exit status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let (value, code) = match execute(&cli) {
        Ok(Outcome::Ok(v)) => (v, EXIT_OK),
        Ok(Outcome::Failed(v)) => (v, EXIT_FAILED),
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(CliError::Math(msg)) => (json!({"error": msg}), EXIT_FAILED),
    };
    if let Err(msg) = emit(&cli, &value, stdout) {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_USAGE;
    }
    code
}

/// Reads the worker count from the environment, if set.
pub fn threads_from_env() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got {s:?}")),
        },
    }
}
