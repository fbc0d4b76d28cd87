//! Command-line surface: build ensembles, solve transforms, and emit
//! figure data and reports as JSON or CSV.
//!
//! Reports are deterministic for identical configurations: JSON objects are
//! emitted with sorted keys and every float is rounded to 12 significant
//! digits before serialization. CSV output (figure data) uses the header
//! `alpha,curve_name,value` with one row per grid point and curve.
//!
//! The environment variable `SYMTRANS_SEED` is reserved for future
//! randomized commands; the current commands are deterministic and ignore
//! it.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::coherent2qubit::{
    beamsplit_plan, constructive_solution, odd_n_probability, optimal_probability,
    probability_vector,
};
use crate::error::Error;
use crate::info::{entropy_bound, report as entropy_report};
use crate::linalg::{eigenvalues_of_circulant, CirculantGram, Spectrum};
use crate::scissors::{alpha_grid, evaluate, figure1_data, figure6_data, overall_with_splits, FigureTable};
use crate::solver::{diagnose, optimize_uniform, uds_probability, uniform_witness, verify_general};
use crate::states::{coherent_gram_row, qubit_gram_row, CoherentEnsemble, QubitEnsemble};
use crate::DEFAULT_TOL;

/// Parsed invocation of the `symtrans` binary.
#[derive(Debug, Parser)]
#[command(
    name = "symtrans",
    about = "Optimal probabilistic transforms between symmetric sets of quantum states",
    version
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for the optimal uniform transform between two symmetric ensembles.
    Optimize {
        /// Source ensemble.
        #[arg(long, value_enum)]
        source: SourceKind,
        /// Source amplitude (required for a coherent source).
        #[arg(long)]
        alpha: Option<f64>,
        /// Target ensemble.
        #[arg(long, value_enum)]
        target: TargetKind,
        /// Target amplitude (required for a coherent target).
        #[arg(long)]
        target_alpha: Option<f64>,
        /// Number of states in each ensemble.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Unambiguous-discrimination probability of a symmetric ensemble.
    Uds {
        #[arg(long, value_enum)]
        source: SourceKind,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Constructive coherent-to-qubit transform and its leak.
    C2q {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Quantum-scissors realization figures of merit.
    Scissors {
        #[arg(long)]
        alpha: f64,
        /// Number of beams for the beamsplit-assisted strategy.
        #[arg(long, default_value_t = 1)]
        splits: u64,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Curve families comparing strategies over an amplitude grid.
    Figures {
        #[arg(long, value_enum)]
        which: FigureKind,
        #[arg(long)]
        alpha_min: Option<f64>,
        #[arg(long)]
        alpha_max: Option<f64>,
        #[arg(long)]
        alpha_step: Option<f64>,
        /// State counts for the discrimination curves (fig1).
        #[arg(long, value_delimiter = ',')]
        ns: Option<Vec<usize>>,
        /// Beam counts for the scissors curves (fig6).
        #[arg(long, value_delimiter = ',')]
        ms: Option<Vec<u64>>,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Entropy bound on the information carried by a symmetric ensemble.
    Entropy {
        #[arg(long, value_enum)]
        source: SourceKind,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOptions,
    },
    /// Re-verify an optimal solution through its dense witness.
    Verify {
        #[arg(long, value_enum)]
        source: SourceKind,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum)]
        target: TargetKind,
        #[arg(long)]
        target_alpha: Option<f64>,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputOptions,
    },
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct OutputOptions {
    /// Report format; figures default to csv, everything else to json.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to this path instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Feasibility tolerance override (default 1e-9).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceKind {
    Coherent,
    QubitXy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetKind {
    Coherent,
    QubitXy,
    Orthogonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    Fig1,
    Fig6,
}

/// Failure modes of a CLI run, mapped to exit codes by the binary.
#[derive(Debug)]
pub enum CliError {
    /// Bad or missing flag value; exit code 2.
    Validation { flag: String, message: String },
    /// Numeric failure from the library; exit code 3.
    Numeric(Error),
    /// Filesystem failure; exit code 1.
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation { flag, message } => {
                write!(f, "invalid {flag}: {message}")
            }
            CliError::Numeric(err) => write!(f, "{}: {err}", err.name()),
            CliError::Io(message) => write!(f, "io error: {message}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Numeric(err)
    }
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation { .. } => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

/// Renders the report for a configuration without touching the filesystem.
pub fn render(config: &RunConfig) -> Result<String, CliError> {
    match &config.command {
        Command::Optimize {
            source,
            alpha,
            target,
            target_alpha,
            n,
            output,
        } => {
            let tol = resolve_tol(output)?;
            require_json(output, "optimize")?;
            let n = validate_n(*n)?;
            let (lambda_a, source_echo) = source_spectrum(*source, *alpha, n, "--alpha")?;
            let (lambda_b, target_echo) =
                target_spectrum(*target, *target_alpha, n, "--target-alpha")?;
            let sol = diagnose(optimize_uniform(&lambda_a, &lambda_b)?, tol.max(crate::DIAG_TOL));
            let bits = entropy_report(&sol);
            let residual = sol.feasibility_residual(&lambda_a, &lambda_b);
            let report = report_skeleton(
                "optimize",
                merge(vec![
                    ("source".into(), source_echo),
                    ("target".into(), target_echo),
                    ("n".into(), json!(n)),
                ]),
                json!({
                    "p_success": num(sol.p_success),
                    "leak_spectrum": num_slice(sol.leak_spectrum.values()),
                    "redundancy_spectrum": num_slice(sol.redundancy_spectrum.values()),
                }),
                json!({
                    "leakless": sol.leakless,
                    "redundancy_free": sol.redundancy_free,
                    "leak_lin_dependent": sol.leak_lin_dependent,
                    "redundancy_lin_dependent": sol.redundancy_lin_dependent,
                    "leak_bits": num(bits.leak_bits),
                    "redundancy_bits": num(bits.redundancy_bits),
                    "feasibility_residual": num(residual),
                }),
                tol,
            );
            Ok(to_json_text(&report))
        }
        Command::Uds {
            source,
            alpha,
            n,
            output,
        } => {
            let tol = resolve_tol(output)?;
            require_json(output, "uds")?;
            let n = validate_n(*n)?;
            let (lambda, source_echo) = source_spectrum(*source, *alpha, n, "--alpha")?;
            let p = uds_probability(&lambda);
            let report = report_skeleton(
                "uds",
                merge(vec![("source".into(), source_echo), ("n".into(), json!(n))]),
                json!({
                    "p_success": num(p),
                    "source_spectrum": num_slice(lambda.values()),
                }),
                json!({
                    "linearly_independent": p > tol,
                }),
                tol,
            );
            Ok(to_json_text(&report))
        }
        Command::C2q { alpha, n, output } => {
            let tol = resolve_tol(output)?;
            require_json(output, "c2q")?;
            let n = validate_n(*n)?;
            let alpha = validate_alpha(*alpha, "--alpha")?;
            let report = if n % 2 == 1 {
                let (p, conjectural) = odd_n_probability(alpha, n);
                report_skeleton(
                    "c2q",
                    merge(vec![
                        ("alpha".into(), num(alpha)),
                        ("n".into(), json!(n)),
                    ]),
                    json!({
                        "p_success": num(p),
                        "conjectural": conjectural,
                    }),
                    json!({
                        "note": "odd state count: value reached by interlacing into the even case; optimality unproven",
                    }),
                    tol,
                )
            } else if alpha > 1.0 + 1e-12 {
                let (beta, splits) = beamsplit_plan(alpha);
                report_skeleton(
                    "c2q",
                    merge(vec![
                        ("alpha".into(), num(alpha)),
                        ("n".into(), json!(n)),
                    ]),
                    json!({
                        "p_success": num(optimal_probability(alpha)),
                        "conjectural": false,
                        "beamsplit": {
                            "beta": num(beta),
                            "splits": splits,
                            "p_per_beam": num(optimal_probability(beta)),
                        },
                    }),
                    json!({
                        "note": "amplitude above 1: realized by beamsplitting into unit-range beams",
                    }),
                    tol,
                )
            } else {
                let pv = probability_vector(alpha, n)?;
                let sol = constructive_solution(alpha, n)?;
                let bits = entropy_report(&sol);
                report_skeleton(
                    "c2q",
                    merge(vec![
                        ("alpha".into(), num(alpha)),
                        ("n".into(), json!(n)),
                    ]),
                    json!({
                        "p_success": num(sol.p_success),
                        "conjectural": false,
                        "p_failure": num(pv.failure()),
                        "probability_vector": num_slice(pv.probs()),
                        "leak_spectrum": num_slice(sol.leak_spectrum.values()),
                    }),
                    json!({
                        "leakless": sol.leakless,
                        "redundancy_free": sol.redundancy_free,
                        "leak_bits": num(bits.leak_bits),
                        "redundancy_bits": num(bits.redundancy_bits),
                    }),
                    tol,
                )
            };
            Ok(to_json_text(&report))
        }
        Command::Scissors {
            alpha,
            splits,
            output,
        } => {
            let tol = resolve_tol(output)?;
            require_json(output, "scissors")?;
            let alpha = validate_alpha(*alpha, "--alpha")?;
            if *splits < 1 {
                return Err(CliError::Validation {
                    flag: "--splits".into(),
                    message: "must be at least 1".into(),
                });
            }
            let per_beam = alpha / (*splits as f64).sqrt();
            if per_beam > 1.0 + 1e-12 {
                return Err(CliError::Validation {
                    flag: "--splits".into(),
                    message: format!(
                        "per-beam amplitude {per_beam} exceeds 1; increase --splits"
                    ),
                });
            }
            let eval = evaluate(per_beam)?;
            let with_splits = overall_with_splits(alpha, *splits)?;
            let optimal = optimal_probability(alpha);
            let report = report_skeleton(
                "scissors",
                merge(vec![
                    ("alpha".into(), num(alpha)),
                    ("splits".into(), json!(splits)),
                ]),
                json!({
                    "p_ost_per_beam": num(eval.p_ost),
                    "p_umbrella_per_beam": num(eval.p_umbrella),
                    "gamma_per_beam": num(eval.gamma),
                    "p_overall": num(with_splits),
                    "p_optimal": num(optimal),
                    "shortfall": num(optimal - with_splits),
                }),
                json!({
                    "per_beam_amplitude": num(per_beam),
                }),
                tol,
            );
            Ok(to_json_text(&report))
        }
        Command::Figures {
            which,
            alpha_min,
            alpha_max,
            alpha_step,
            ns,
            ms,
            output,
        } => {
            let tol = resolve_tol(output)?;
            let format = output.format.unwrap_or(OutputFormat::Csv);
            let defaults = match which {
                FigureKind::Fig1 => (0.01, 1.5, 0.01),
                FigureKind::Fig6 => (0.01, 1.0, 0.01),
            };
            let lo = alpha_min.unwrap_or(defaults.0);
            let hi = alpha_max.unwrap_or(defaults.1);
            let step = alpha_step.unwrap_or(defaults.2);
            if lo.is_nan() || lo <= 0.0 {
                return Err(CliError::Validation {
                    flag: "--alpha-min".into(),
                    message: "must be positive".into(),
                });
            }
            if hi < lo {
                return Err(CliError::Validation {
                    flag: "--alpha-max".into(),
                    message: "must be at least --alpha-min".into(),
                });
            }
            if step.is_nan() || step <= 0.0 {
                return Err(CliError::Validation {
                    flag: "--alpha-step".into(),
                    message: "must be positive".into(),
                });
            }
            let grid = alpha_grid(lo, hi, step);
            let table = match which {
                FigureKind::Fig1 => {
                    let ns = ns.clone().unwrap_or_else(|| vec![4, 8]);
                    for &n in &ns {
                        validate_n(n)?;
                    }
                    figure1_data(&grid, &ns)
                }
                FigureKind::Fig6 => {
                    let ms = ms
                        .clone()
                        .unwrap_or_else(|| (1..=10).collect::<Vec<u64>>());
                    let min_m = *ms.iter().min().ok_or_else(|| CliError::Validation {
                        flag: "--ms".into(),
                        message: "needs at least one beam count".into(),
                    })?;
                    if hi > (min_m as f64).sqrt() + 1e-12 {
                        return Err(CliError::Validation {
                            flag: "--alpha-max".into(),
                            message: format!(
                                "grid reaches {hi}, above sqrt(min splits) = {}",
                                (min_m as f64).sqrt()
                            ),
                        });
                    }
                    figure6_data(&grid, &ms)?
                }
            };
            match format {
                OutputFormat::Csv => Ok(to_csv_text(&table)),
                OutputFormat::Json => {
                    let curves: Map<String, Value> = table
                        .curves
                        .iter()
                        .map(|c| (c.name.clone(), num_slice(&c.values)))
                        .collect();
                    let report = report_skeleton(
                        "figures",
                        merge(vec![
                            (
                                "which".into(),
                                json!(match which {
                                    FigureKind::Fig1 => "fig1",
                                    FigureKind::Fig6 => "fig6",
                                }),
                            ),
                            ("alpha_min".into(), num(lo)),
                            ("alpha_max".into(), num(hi)),
                            ("alpha_step".into(), num(step)),
                        ]),
                        json!({
                            "alphas": num_slice(&table.alphas),
                            "curves": Value::Object(curves),
                        }),
                        json!({}),
                        tol,
                    );
                    Ok(to_json_text(&report))
                }
            }
        }
        Command::Entropy {
            source,
            alpha,
            n,
            output,
        } => {
            let tol = resolve_tol(output)?;
            require_json(output, "entropy")?;
            let n = validate_n(*n)?;
            let (lambda, source_echo) = source_spectrum(*source, *alpha, n, "--alpha")?;
            let bits = entropy_bound(&lambda);
            let report = report_skeleton(
                "entropy",
                merge(vec![("source".into(), source_echo), ("n".into(), json!(n))]),
                json!({
                    "holevo_bits": num(bits),
                    "max_bits": num((n as f64).log2()),
                    "spectrum": num_slice(lambda.values()),
                }),
                json!({}),
                tol,
            );
            Ok(to_json_text(&report))
        }
        Command::Verify {
            source,
            alpha,
            target,
            target_alpha,
            n,
            output,
        } => {
            let tol = resolve_tol(output)?;
            require_json(output, "verify")?;
            let n = validate_n(*n)?;
            let (lambda_a, source_echo) = source_spectrum(*source, *alpha, n, "--alpha")?;
            let (lambda_b, target_echo) =
                target_spectrum(*target, *target_alpha, n, "--target-alpha")?;
            let sol = optimize_uniform(&lambda_a, &lambda_b)?;
            let witness = uniform_witness(&sol)?;
            let g_a = CirculantGram::from_spectrum(&lambda_a)?.expand();
            let g_b = CirculantGram::from_spectrum(&lambda_b)?.expand();
            let valid = verify_general(&g_a, &g_b, &witness, tol.max(1e-8))?;
            let report = report_skeleton(
                "verify",
                merge(vec![
                    ("source".into(), source_echo),
                    ("target".into(), target_echo),
                    ("n".into(), json!(n)),
                ]),
                json!({
                    "valid": valid,
                    "p_success": num(sol.p_success),
                }),
                json!({
                    "feasibility_residual": num(sol.feasibility_residual(&lambda_a, &lambda_b)),
                }),
                tol,
            );
            Ok(to_json_text(&report))
        }
    }
}

/// Renders the report and writes it to `--out` when given; returns the text
/// either way.
pub fn run(config: &RunConfig) -> Result<String, CliError> {
    let text = render(config)?;
    if let Some(path) = output_path(&config.command) {
        fs::write(path, text.as_bytes())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    let output = match command {
        Command::Optimize { output, .. }
        | Command::Uds { output, .. }
        | Command::C2q { output, .. }
        | Command::Scissors { output, .. }
        | Command::Figures { output, .. }
        | Command::Entropy { output, .. }
        | Command::Verify { output, .. } => output,
    };
    output.out.as_ref()
}

fn resolve_tol(output: &OutputOptions) -> Result<f64, CliError> {
    match output.tol {
        None => Ok(DEFAULT_TOL),
        Some(t) if t > 0.0 && t.is_finite() => Ok(t),
        Some(t) => Err(CliError::Validation {
            flag: "--tol".into(),
            message: format!("{t} is not a positive tolerance"),
        }),
    }
}

fn require_json(output: &OutputOptions, command: &str) -> Result<(), CliError> {
    if output.format == Some(OutputFormat::Csv) {
        return Err(CliError::Validation {
            flag: "--format".into(),
            message: format!("csv is only available for figure data, not `{command}`"),
        });
    }
    Ok(())
}

fn validate_n(n: usize) -> Result<usize, CliError> {
    if n < 2 {
        return Err(CliError::Validation {
            flag: "--n".into(),
            message: "needs at least 2 states".into(),
        });
    }
    Ok(n)
}

fn validate_alpha(alpha: f64, flag: &str) -> Result<f64, CliError> {
    if alpha <= 0.0 || !alpha.is_finite() {
        return Err(CliError::Validation {
            flag: flag.into(),
            message: format!("{alpha} is not a positive amplitude"),
        });
    }
    Ok(alpha)
}

fn source_spectrum(
    kind: SourceKind,
    alpha: Option<f64>,
    n: usize,
    alpha_flag: &str,
) -> Result<(Spectrum, Value), CliError> {
    match kind {
        SourceKind::Coherent => {
            let alpha = alpha.ok_or_else(|| CliError::Validation {
                flag: alpha_flag.into(),
                message: "required for a coherent ensemble".into(),
            })?;
            let alpha = validate_alpha(alpha, alpha_flag)?;
            let ensemble = CoherentEnsemble::new(alpha, n)?;
            let spectrum = eigenvalues_of_circulant(&coherent_gram_row(&ensemble))?;
            Ok((
                spectrum,
                json!({ "kind": "coherent", "alpha": num(alpha) }),
            ))
        }
        SourceKind::QubitXy => {
            let spectrum = eigenvalues_of_circulant(&qubit_gram_row(&QubitEnsemble::new(n)?))?;
            Ok((spectrum, json!({ "kind": "qubit-xy" })))
        }
    }
}

fn target_spectrum(
    kind: TargetKind,
    alpha: Option<f64>,
    n: usize,
    alpha_flag: &str,
) -> Result<(Spectrum, Value), CliError> {
    match kind {
        TargetKind::Coherent => source_spectrum(SourceKind::Coherent, alpha, n, alpha_flag),
        TargetKind::QubitXy => source_spectrum(SourceKind::QubitXy, alpha, n, alpha_flag),
        TargetKind::Orthogonal => Ok((
            Spectrum::orthonormal(n),
            json!({ "kind": "orthogonal" }),
        )),
    }
}

fn report_skeleton(
    command: &str,
    inputs: Value,
    result: Value,
    diagnostics: Value,
    tol: f64,
) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "diagnostics": diagnostics,
        "meta": {
            "tol": num(tol),
            "diag_tol": num(crate::DIAG_TOL),
        },
    })
}

fn merge(fields: Vec<(String, Value)>) -> Value {
    let mut map = Map::new();
    for (key, value) in fields {
        map.insert(key, value);
    }
    Value::Object(map)
}

fn to_json_text(report: &Value) -> String {
    serde_json::to_string_pretty(report).expect("report serialization is infallible")
}

fn to_csv_text(table: &FigureTable) -> String {
    let mut text = String::from("alpha,curve_name,value\r\n");
    for (row, &alpha) in table.alphas.iter().enumerate() {
        for curve in &table.curves {
            text.push_str(&format!(
                "{},{},{}\r\n",
                format_float(alpha),
                curve.name,
                format_float(curve.values[row])
            ));
        }
    }
    text
}

/// Rounds to 12 significant digits so that reports diff cleanly and
/// round-trip through JSON byte-identically.
fn round12(x: f64) -> f64 {
    assert!(x.is_finite(), "report fields must be finite");
    if x == 0.0 {
        return 0.0;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn format_float(x: f64) -> String {
    format!("{}", round12(x))
}

fn num(x: f64) -> Value {
    json!(round12(x))
}

fn num_slice(values: &[f64]) -> Value {
    Value::Array(values.iter().map(|&v| num(v)).collect())
}
