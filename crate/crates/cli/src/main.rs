//! Machine-facing command line for the exact face-vector toolkit.
//!
//! Exit codes: 0 when the command succeeds (and, for `check`, the property
//! holds); 1 when a checked property is violated (the JSON payload carries a
//! witness); 2 on usage errors. JSON output wraps every payload in an
//! envelope `{kind, payload, meta: {version, command}}`, with all
//! arbitrary-precision values rendered as decimal strings so nothing is
//! truncated in transport.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bjorner_core::genfun::{
    closed_form_check, identity1_check, identity2_check, ode_residual_f, ode_residual_g,
    IdentityReport, OdeVariant,
};
use bjorner_core::matrices::{
    build_a, build_cap_gamma_factor, build_g_factor, build_g_from_gamma, build_m_g, build_m_gamma,
    verify_factorization, FactorizationEquation, Parity,
};
use bjorner_core::tnn::{all_minors_nonnegative, all_minors_nonnegative_parallel, TnnVerdict};
use bjorner_core::vectors::{
    check_dehn_somerville, cube, f_from_g, f_from_gamma, g_from_gamma, g_from_h, h_from_g,
    polygon, simplex, CatalogueEntry, CatalogueShape, FaceData,
};
use bjorner_core::{ExactMatrix, Integer, Rational};

#[derive(Parser)]
#[command(name = "bjorner", version, about = "Exact face-vector matrices, conversions, and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a matrix window for a given dimension
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Convert between face-number sequences
    Convert {
        #[arg(long, value_enum)]
        from: SequenceKind,
        #[arg(long, value_enum)]
        to: SequenceKind,
        #[arg(long)]
        dim: usize,
        /// Comma-separated integers, e.g. `1,2`
        #[arg(long)]
        values: String,
    },
    /// Check a property; exits 0 when it holds, 1 with a witness otherwise
    #[command(subcommand)]
    Check(CheckCommand),
    /// Emit a ground-truth catalogue entry
    #[command(subcommand)]
    Catalogue(CatalogueCommand),
}

#[derive(Subcommand)]
enum CheckCommand {
    /// All three factorization equalities for one dimension
    Factorization {
        #[arg(long)]
        dim: usize,
    },
    /// Total non-negativity of a matrix window by exact minor enumeration
    Tnn {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long)]
        dim: usize,
        /// Cap on the enumerated minor order (default: unbounded)
        #[arg(long)]
        max_order: Option<usize>,
        /// Partition the enumeration across worker threads
        #[arg(long)]
        parallel: bool,
    },
    /// Even-parity entrywise identity over its full index range
    Identity1 {
        #[arg(long)]
        n: u64,
    },
    /// Odd-parity entrywise identity over its full index range
    Identity2 {
        #[arg(long)]
        n: u64,
    },
    /// Closed form and differential-equation residuals at one index
    Genfun {
        #[arg(long)]
        a: u64,
    },
    /// Dehn-Somerville consistency of a face vector
    DehnSomerville {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        values: String,
    },
}

#[derive(Subcommand)]
enum CatalogueCommand {
    Simplex {
        #[arg(long)]
        dim: usize,
    },
    Cube {
        #[arg(long)]
        dim: usize,
    },
    Polygon {
        #[arg(long)]
        vertices: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    /// g-vector to face vector, (d+1) x (n+1)
    G,
    /// γ-vector to face vector, (d+1) x (n+1)
    Gamma,
    /// A factor window with the even-parity sign, (d+1) x (n+1)
    #[value(name = "a+")]
    APlus,
    /// A factor window with the odd-parity sign, (d+1) x (n+1)
    #[value(name = "a-")]
    AMinus,
    /// Reversed G+ factor window, (n+1) x (n+1)
    #[value(name = "g+")]
    GPlus,
    /// Reversed G- factor window, (n+1) x (n+1)
    #[value(name = "g-")]
    GMinus,
    /// Reversed Γ factor window, (n+1) x (n+1)
    CapGamma,
    /// γ-vector to g-vector bridge, (n+1) x (n+1)
    GFromGamma,
}

impl MatrixKind {
    fn label(self) -> &'static str {
        match self {
            MatrixKind::G => "g",
            MatrixKind::Gamma => "gamma",
            MatrixKind::APlus => "a+",
            MatrixKind::AMinus => "a-",
            MatrixKind::GPlus => "g+",
            MatrixKind::GMinus => "g-",
            MatrixKind::CapGamma => "cap-gamma",
            MatrixKind::GFromGamma => "g-from-gamma",
        }
    }

    fn build(self, dim: usize) -> ExactMatrix {
        let n = dim / 2;
        match self {
            MatrixKind::G => build_m_g(dim),
            MatrixKind::Gamma => build_m_gamma(dim),
            MatrixKind::APlus => build_a(Parity::Plus, dim + 1, n + 1),
            MatrixKind::AMinus => build_a(Parity::Minus, dim + 1, n + 1),
            MatrixKind::GPlus => build_g_factor(Parity::Plus, n),
            MatrixKind::GMinus => build_g_factor(Parity::Minus, n),
            MatrixKind::CapGamma => build_cap_gamma_factor(n),
            MatrixKind::GFromGamma => build_g_from_gamma(dim),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceKind {
    F,
    G,
    H,
    Gamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Matrix { kind, dim, format } => {
            let matrix = kind.build(dim);
            match format {
                Format::Json => {
                    let payload = json!({
                        "name": kind.label(),
                        "dim": dim,
                        "rows": matrix.rows(),
                        "cols": matrix.cols(),
                        "entries": matrix_entries(&matrix),
                    });
                    emit("matrix", payload);
                }
                Format::Csv => {
                    for i in 0..matrix.rows() {
                        let row: Vec<String> =
                            (0..matrix.cols()).map(|j| rational_string(matrix.get(i, j))).collect();
                        println!("{}", row.join(","));
                    }
                }
                Format::Plain => println!("{matrix}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { from, to, dim, values } => {
            let input = parse_integers(&values)?;
            let output = convert(from, to, dim, &input)?;
            let mut data = FaceData::new(dim);
            assign(&mut data, from, input);
            assign(&mut data, to, output);
            data.validate().map_err(|e| e.to_string())?;
            let payload = json!({
                "dim": data.dim,
                "f": optional_sequence(&data.f),
                "g": optional_sequence(&data.g),
                "h": optional_sequence(&data.h),
                "gamma": optional_sequence(&data.gamma),
            });
            emit("vector", payload);
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(check) => run_check(check),
        Command::Catalogue(catalogue) => {
            let entry = match catalogue {
                CatalogueCommand::Simplex { dim } => simplex(dim),
                CatalogueCommand::Cube { dim } => cube(dim),
                CatalogueCommand::Polygon { vertices } => {
                    polygon(vertices).map_err(|e| e.to_string())?
                }
            };
            emit("report", catalogue_payload(&entry));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_check(check: CheckCommand) -> Result<ExitCode, String> {
    match check {
        CheckCommand::Factorization { dim } => {
            let report = verify_factorization(dim);
            let mismatch = report.mismatch.as_ref().map(|m| {
                json!({
                    "equation": match m.equation {
                        FactorizationEquation::GFactorization => "g-factorization",
                        FactorizationEquation::GammaFactorization => "gamma-factorization",
                        FactorizationEquation::GammaBridge => "gamma-to-g",
                    },
                    "row": m.row,
                    "col": m.col,
                    "expected": rational_string(&m.expected),
                    "actual": rational_string(&m.actual),
                })
            });
            let holds = report.holds();
            emit(
                "report",
                json!({
                    "dim": report.dim,
                    "g_factorization": report.g_factorization,
                    "gamma_factorization": report.gamma_factorization,
                    "gamma_to_g": report.gamma_bridge,
                    "holds": holds,
                    "mismatch": mismatch,
                }),
            );
            Ok(exit_by(holds))
        }
        CheckCommand::Tnn { kind, dim, max_order, parallel } => {
            let matrix = kind.build(dim);
            let verdict = if parallel {
                all_minors_nonnegative_parallel(&matrix, max_order)
            } else {
                all_minors_nonnegative(&matrix, max_order)
            };
            let holds = verdict.holds;
            emit("verdict", verdict_payload(&verdict));
            Ok(exit_by(holds))
        }
        CheckCommand::Identity1 { n } => {
            let report = identity1_check(n);
            let holds = report.holds();
            emit("report", identity_payload(&report));
            Ok(exit_by(holds))
        }
        CheckCommand::Identity2 { n } => {
            let report = identity2_check(n);
            let holds = report.holds();
            emit("report", identity_payload(&report));
            Ok(exit_by(holds))
        }
        CheckCommand::Genfun { a } => {
            let closed_form = closed_form_check(a);
            let g_residual_zero = ode_residual_g(a).is_zero();
            let corrected_zero = ode_residual_f(a, OdeVariant::Corrected).is_zero();
            let printed_zero = ode_residual_f(a, OdeVariant::Printed).is_zero();
            let holds = closed_form && g_residual_zero && corrected_zero;
            emit(
                "report",
                json!({
                    "a": a,
                    "closed_form": closed_form,
                    "ode_g_residual_is_zero": g_residual_zero,
                    "ode_f_corrected_residual_is_zero": corrected_zero,
                    "ode_f_printed_residual_is_zero": printed_zero,
                    "holds": holds,
                }),
            );
            Ok(exit_by(holds))
        }
        CheckCommand::DehnSomerville { dim, values } => {
            let f = parse_integers(&values)?;
            let consistent = check_dehn_somerville(dim, &f).map_err(|e| e.to_string())?;
            emit(
                "report",
                json!({
                    "dim": dim,
                    "f": sequence(&f),
                    "consistent": consistent,
                    "holds": consistent,
                }),
            );
            Ok(exit_by(consistent))
        }
    }
}

fn convert(
    from: SequenceKind,
    to: SequenceKind,
    dim: usize,
    values: &[Integer],
) -> Result<Vec<Integer>, String> {
    use SequenceKind::*;
    let result = match (from, to) {
        (G, F) => f_from_g(dim, values),
        (G, H) => h_from_g(dim, values),
        (Gamma, F) => f_from_gamma(dim, values),
        (Gamma, G) => g_from_gamma(dim, values),
        (Gamma, H) => g_from_gamma(dim, values).and_then(|g| h_from_g(dim, &g)),
        (H, G) => g_from_h(dim, values),
        (H, F) => g_from_h(dim, values).and_then(|g| f_from_g(dim, &g)),
        (from, to) => {
            return Err(format!(
                "unsupported conversion: {} -> {}",
                kind_label(from),
                kind_label(to)
            ))
        }
    };
    result.map_err(|e| e.to_string())
}

fn assign(data: &mut FaceData, kind: SequenceKind, values: Vec<Integer>) {
    match kind {
        SequenceKind::F => data.f = Some(values),
        SequenceKind::G => data.g = Some(values),
        SequenceKind::H => data.h = Some(values),
        SequenceKind::Gamma => data.gamma = Some(values),
    }
}

fn kind_label(kind: SequenceKind) -> &'static str {
    match kind {
        SequenceKind::F => "f",
        SequenceKind::G => "g",
        SequenceKind::H => "h",
        SequenceKind::Gamma => "gamma",
    }
}

fn parse_integers(values: &str) -> Result<Vec<Integer>, String> {
    values
        .split(',')
        .map(|part| {
            let part = part.trim();
            Integer::from_str(part).map_err(|_| format!("not an integer: {part:?}"))
        })
        .collect()
}

fn exit_by(holds: bool) -> ExitCode {
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn rational_string(value: &Rational) -> String {
    value.to_string()
}

fn sequence(values: &[Integer]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(v.to_string())).collect())
}

fn optional_sequence(values: &Option<Vec<Integer>>) -> Value {
    values.as_ref().map_or(Value::Null, |v| sequence(v))
}

fn matrix_entries(matrix: &ExactMatrix) -> Value {
    Value::Array(
        (0..matrix.rows())
            .map(|i| {
                Value::Array(
                    (0..matrix.cols())
                        .map(|j| Value::String(rational_string(matrix.get(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn verdict_payload(verdict: &TnnVerdict) -> Value {
    let witness = verdict.witness.as_ref().map(|w| {
        json!({
            "rows": w.rows,
            "cols": w.cols,
            "value": rational_string(&w.value),
        })
    });
    json!({
        "holds": verdict.holds,
        "checked_minors": verdict.checked_minors,
        "witness": witness,
    })
}

fn identity_payload(report: &IdentityReport) -> Value {
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "i": f.i,
                "k": f.k,
                "lhs": f.lhs.to_string(),
                "rhs": rational_string(&f.rhs),
            })
        })
        .collect();
    json!({
        "n": report.n,
        "holds": report.holds(),
        "failures": failures,
    })
}

fn catalogue_payload(entry: &CatalogueEntry) -> Value {
    let parameter = match entry.shape {
        CatalogueShape::Simplex { dim } | CatalogueShape::Cube { dim } => json!({ "dim": dim }),
        CatalogueShape::Polygon { vertices } => json!({ "vertices": vertices }),
    };
    json!({
        "name": entry.shape.name(),
        "parameters": parameter,
        "dim": entry.dim,
        "g": sequence(&entry.g),
        "gamma": optional_sequence(&entry.gamma),
        "f": sequence(&entry.f),
        "note": entry.note,
    })
}

fn emit(kind: &str, payload: Value) {
    let command: Vec<String> = std::env::args().skip(1).collect();
    let envelope = json!({
        "kind": kind,
        "payload": payload,
        "meta": {
            "version": env!("CARGO_PKG_VERSION"),
            "command": command.join(" "),
        },
    });
    println!("{envelope}");
}
