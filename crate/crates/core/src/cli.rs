//! Command-line front end.
//!
//! Exit codes: `0` success, `1` input error (unreadable/invalid input, bad
//! flags), `2` internal invariant violation (a predicted spectrum disagreeing
//! with the numeric one beyond tolerance, or a hypothesis-satisfied bound
//! failing).  All JSON output is deterministic: floats carry 12 significant
//! digits and field order is fixed.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{bounds_report, kab_edge_deletion};
use crate::eigen::{jacobi_eigenvalues, Spectrum};
use crate::error::{Error, Result};
use crate::families::{
    closed_form_spectrum, printed_energy, printed_energy_matches, FamilySpec,
};
use crate::graph::Graph;
use crate::ops::{construct, predict, OpKind, PredictedSpectrum};
use crate::scan::{scan_catalog, scan_csv, ScanOptions};
use crate::seidel::{
    ds_matrix, ds_row_abs_sums, round_sig12, spectral_summary, wiener_identity_check,
    SpectralSummary, WienerCheck, DEFAULT_TOL,
};

/// Tolerance for predicted-vs-numeric spectrum agreement before the exit code
/// reports an internal invariant violation.
const PREDICTION_TOL: f64 = 1e-6;

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 1;
const EXIT_INVARIANT: i32 = 2;

#[derive(Parser)]
#[command(
    name = "dseidel",
    version,
    about = "Distance Seidel spectra, energies, bounds, and catalog scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edges,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct GraphInput {
    /// Input file, or `-` for standard input
    #[arg(long, default_value = "-")]
    input: String,
    /// Input encoding
    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Args)]
struct OutputArgs {
    /// Output rendering
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Eigenvalue grouping / sign tolerance
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, energy, spectral radius, and exact characteristic polynomial
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Spectrum plus invariant diagnostics and the Wiener-index identity
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate every spectral-radius and energy bound on one graph
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Apply a graph operation to input graphs, optionally predicting the spectrum
    Construct {
        /// Operation name: join, join-union, double, prism, lex-k2, edc
        #[arg(long)]
        op: String,
        /// Input graph files (one per operand)
        #[arg(long, num_args = 1.., required = true)]
        inputs: Vec<String>,
        /// Compare the closed-form predicted spectrum with the numeric one
        #[arg(long)]
        predict: bool,
        #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
        format: InputFormat,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Construct a named family and compare closed-form against numeric spectra
    Family {
        /// Family name: kn, kn-e, kab, kab-e, star, cycle, wheel, split,
        /// friendship, multipartite, cocktail
        #[arg(long)]
        name: String,
        /// Family parameters (sizes)
        #[arg(long, num_args = 1.., required = true)]
        params: Vec<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Scan a graph6 catalog for cospectral classes, integral graphs, and violations
    Scan {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        out: OutputArgs,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Restrict searches: cospectral, integral (default: both)
        #[arg(long, value_delimiter = ',')]
        find: Option<Vec<String>>,
        /// Restrict verification: kn-characterization,
        /// multipartite-characterization, bounds (default: all)
        #[arg(long, value_delimiter = ',')]
        verify: Option<Vec<String>>,
    },
    /// Compare complete bipartite energy before and after deleting one edge
    EdgeDeletion {
        /// First side size (at least 2)
        #[arg(long)]
        a: usize,
        /// Second side size (at least 2)
        #[arg(long)]
        b: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                EXIT_OK
            } else {
                eprint!("{e}");
                EXIT_INPUT
            };
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn read_source(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn parse_graph(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| Error::InvalidGraph6("empty input".into()))?;
            Graph::from_graph6(line)
        }
        InputFormat::Edges => Graph::from_edge_list_text(text),
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    parse_graph(&read_source(&input.input)?, input.format)
}

fn json_line<T: Serialize>(value: &T) -> Result<String> {
    Ok(format!(
        "{}\n",
        serde_json::to_string(value).map_err(|e| Error::InvalidParameter(e.to_string()))?
    ))
}

fn require_not_csv(out: &OutputArgs, what: &str) -> Result<()> {
    if out.output == OutputFormat::Csv {
        return Err(Error::UnsupportedOutput(format!(
            "csv output is only available for scan, not {what}"
        )));
    }
    Ok(())
}

fn spectrum_lines(s: &Spectrum) -> String {
    s.entries
        .iter()
        .map(|e| format!("{} x{}", e.value, e.mult))
        .collect::<Vec<_>>()
        .join(", ")
}

fn summary_text(s: &SpectralSummary) -> String {
    let mut t = String::new();
    t.push_str(&format!("n {}\nm {}\n", s.n, s.m));
    t.push_str(&format!("spectrum {}\n", spectrum_lines(&s.spectrum)));
    t.push_str(&format!("energy {}\nradius {}\n", s.energy, s.radius));
    t.push_str(&format!("aPlus {}\naMinus {}\n", s.a_plus, s.a_minus));
    t.push_str(&format!("charPoly {}\n", s.char_poly.join(" ")));
    t.push_str(&format!("integral {}\n", s.integral));
    t
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeInvariants {
    trace_residual: f64,
    row_abs_sums: Vec<i64>,
    row_sums_positive: bool,
    diameter: i64,
    transmission_regular: bool,
    energy_at_least_twice_radius: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeOutput {
    summary: SpectralSummary,
    invariants: AnalyzeInvariants,
    wiener: WienerCheck,
}

fn analyze_graph(g: &Graph, tol: f64) -> Result<(AnalyzeOutput, bool)> {
    let summary = spectral_summary(g, tol)?;
    let eigs = jacobi_eigenvalues(&ds_matrix(g)?.to_f64());
    let trace_residual = round_sig12(eigs.iter().sum::<f64>());
    let rows = ds_row_abs_sums(g)?;
    let row_sums_positive = g.n() < 2 || rows.iter().all(|&r| r > 0);
    let wiener = wiener_identity_check(g)?;
    let energy_ok = summary.energy + tol >= 2.0 * summary.radius;
    let ok = trace_residual.abs() <= tol * (1.0 + g.n() as f64)
        && row_sums_positive
        && wiener.residual == 0
        && (g.n() < 2 || energy_ok);
    let out = AnalyzeOutput {
        summary,
        invariants: AnalyzeInvariants {
            trace_residual,
            row_abs_sums: rows,
            row_sums_positive,
            diameter: g.diameter()?,
            transmission_regular: g.transmission_degree()?.is_some(),
            energy_at_least_twice_radius: energy_ok,
        },
        wiener,
    };
    Ok((out, ok))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ConstructPrediction {
    predicted: PredictedSpectrum,
    numeric: Vec<f64>,
    max_abs_diff: f64,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ConstructOutput {
    op: &'static str,
    graph6: String,
    n: usize,
    m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    prediction: Option<ConstructPrediction>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct FamilyOutput {
    family: &'static str,
    graph6: String,
    n: usize,
    closed_form: Spectrum,
    numeric: Spectrum,
    max_abs_diff: f64,
    energy: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    printed_energy: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    printed_energy_matches: Option<bool>,
}

fn rounded_spectrum(s: &Spectrum) -> Spectrum {
    Spectrum {
        entries: s
            .entries
            .iter()
            .map(|e| crate::eigen::SpectrumEntry {
                value: round_sig12(e.value),
                mult: e.mult,
            })
            .collect(),
    }
}

fn parse_scan_options(
    find: Option<Vec<String>>,
    verify: Option<Vec<String>>,
    tol: f64,
    jobs: usize,
) -> Result<ScanOptions> {
    let mut opts = ScanOptions {
        tol,
        jobs,
        ..ScanOptions::default()
    };
    if let Some(tokens) = find {
        opts.find_cospectral = false;
        opts.find_integral = false;
        for t in tokens {
            match t.as_str() {
                "cospectral" => opts.find_cospectral = true,
                "integral" => opts.find_integral = true,
                other => {
                    return Err(Error::UnknownName {
                        kind: "find target",
                        name: other.to_string(),
                    })
                }
            }
        }
    }
    if let Some(tokens) = verify {
        opts.verify_complete = false;
        opts.verify_multipartite = false;
        opts.verify_bounds = false;
        for t in tokens {
            match t.as_str() {
                "kn-characterization" => opts.verify_complete = true,
                "multipartite-characterization" => opts.verify_multipartite = true,
                "bounds" => opts.verify_bounds = true,
                other => {
                    return Err(Error::UnknownName {
                        kind: "verify target",
                        name: other.to_string(),
                    })
                }
            }
        }
    }
    Ok(opts)
}

fn dispatch(cmd: Command) -> Result<(String, i32)> {
    match cmd {
        Command::Spectrum { input, out } => {
            require_not_csv(&out, "spectrum")?;
            let g = load_graph(&input)?;
            let summary = spectral_summary(&g, out.tol)?;
            let text = match out.output {
                OutputFormat::Json => json_line(&summary)?,
                _ => summary_text(&summary),
            };
            Ok((text, EXIT_OK))
        }
        Command::Analyze { input, out } => {
            require_not_csv(&out, "analyze")?;
            let g = load_graph(&input)?;
            let (analysis, ok) = analyze_graph(&g, out.tol)?;
            let text = match out.output {
                OutputFormat::Json => json_line(&analysis)?,
                _ => {
                    let mut t = summary_text(&analysis.summary);
                    t.push_str(&format!(
                        "traceResidual {}\nrowAbsSums {:?}\ndiameter {}\n",
                        analysis.invariants.trace_residual,
                        analysis.invariants.row_abs_sums,
                        analysis.invariants.diameter
                    ));
                    t.push_str(&format!(
                        "transmissionRegular {}\n",
                        analysis.invariants.transmission_regular
                    ));
                    t.push_str(&format!(
                        "wiener {} residual {}\n",
                        analysis.wiener.lhs, analysis.wiener.residual
                    ));
                    t
                }
            };
            Ok((text, if ok { EXIT_OK } else { EXIT_INVARIANT }))
        }
        Command::Bounds { input, out } => {
            require_not_csv(&out, "bounds")?;
            let g = load_graph(&input)?;
            let report = bounds_report(&g, out.tol)?;
            let violated = report
                .bounds
                .iter()
                .any(|r| r.hypothesis_ok && !r.satisfied);
            let text = match out.output {
                OutputFormat::Json => json_line(&report)?,
                _ => {
                    let mut t = String::new();
                    for r in &report.bounds {
                        let lo = r.lower.map_or("-".into(), |v| v.to_string());
                        let hi = r.upper.map_or("-".into(), |v| v.to_string());
                        t.push_str(&format!(
                            "{} lower {} upper {} observed {} satisfied {} equality {} hypothesisOk {}\n",
                            r.name, lo, hi, r.observed, r.satisfied, r.equality, r.hypothesis_ok
                        ));
                    }
                    t.push_str(&format!(
                        "T {} aPlus {} aMinus {} distanceEnergy {} detAbs {}\n",
                        report.scalars.t,
                        report.scalars.a_plus,
                        report.scalars.a_minus,
                        report.scalars.distance_energy,
                        report.scalars.det_abs
                    ));
                    t
                }
            };
            Ok((text, if violated { EXIT_INVARIANT } else { EXIT_OK }))
        }
        Command::Construct {
            op,
            inputs,
            predict: want_prediction,
            format,
            out,
        } => {
            require_not_csv(&out, "construct")?;
            let kind = OpKind::from_cli(&op)?;
            let graphs = inputs
                .iter()
                .map(|p| parse_graph(&read_source(p)?, format))
                .collect::<Result<Vec<Graph>>>()?;
            let result = construct(kind, &graphs)?;
            let mut exit = EXIT_OK;
            let prediction = if want_prediction {
                let mut predicted = predict(kind, &graphs)?;
                let numeric = Spectrum::from_sorted(
                    &jacobi_eigenvalues(&ds_matrix(&result)?.to_f64()),
                    out.tol,
                );
                let diff = predicted
                    .max_abs_diff(&numeric)
                    .expect("operation outputs match in order");
                if diff > PREDICTION_TOL {
                    exit = EXIT_INVARIANT;
                }
                for v in &mut predicted.values {
                    v.value = round_sig12(v.value);
                }
                Some(ConstructPrediction {
                    predicted,
                    numeric: numeric
                        .expanded()
                        .into_iter()
                        .map(round_sig12)
                        .collect(),
                    max_abs_diff: round_sig12(diff),
                })
            } else {
                None
            };
            let output = ConstructOutput {
                op: kind.name(),
                graph6: result.to_graph6(),
                n: result.n(),
                m: result.edge_count(),
                prediction,
            };
            let text = match out.output {
                OutputFormat::Json => json_line(&output)?,
                _ => {
                    let mut t = format!(
                        "op {}\ngraph6 {}\nn {}\nm {}\n",
                        output.op, output.graph6, output.n, output.m
                    );
                    if let Some(p) = &output.prediction {
                        t.push_str(&format!(
                            "hypothesisOk {}\nmaxAbsDiff {}\n",
                            p.predicted.hypothesis_ok, p.max_abs_diff
                        ));
                    }
                    t
                }
            };
            Ok((text, exit))
        }
        Command::Family { name, params, out } => {
            require_not_csv(&out, "family")?;
            let spec = FamilySpec::from_cli(&name, &params)?;
            let closed = closed_form_spectrum(&spec)?;
            let g = spec.construct()?;
            let numeric =
                Spectrum::from_sorted(&jacobi_eigenvalues(&ds_matrix(&g)?.to_f64()), out.tol);
            let diff = closed
                .max_abs_diff(&numeric)
                .ok_or_else(|| Error::InvalidParameter("spectrum order mismatch".into()))?;
            let exit = if diff > out.tol.max(PREDICTION_TOL) {
                EXIT_INVARIANT
            } else {
                EXIT_OK
            };
            let output = FamilyOutput {
                family: spec.name(),
                graph6: g.to_graph6(),
                n: g.n(),
                closed_form: rounded_spectrum(&closed),
                numeric: rounded_spectrum(&numeric),
                max_abs_diff: round_sig12(diff),
                energy: round_sig12(closed.energy()),
                printed_energy: printed_energy(&spec).map(round_sig12),
                printed_energy_matches: printed_energy_matches(&spec),
            };
            let text = match out.output {
                OutputFormat::Json => json_line(&output)?,
                _ => format!(
                    "family {}\ngraph6 {}\nn {}\nclosedForm {}\nnumeric {}\nmaxAbsDiff {}\nenergy {}\n",
                    output.family,
                    output.graph6,
                    output.n,
                    spectrum_lines(&output.closed_form),
                    spectrum_lines(&output.numeric),
                    output.max_abs_diff,
                    output.energy
                ),
            };
            Ok((text, exit))
        }
        Command::Scan {
            input,
            out,
            jobs,
            find,
            verify,
        } => {
            let opts = parse_scan_options(find, verify, out.tol, jobs)?;
            let source = read_source(&input.input)?;
            if input.format == InputFormat::Edges {
                return Err(Error::UnsupportedOutput(
                    "scan reads graph6 catalogs only".into(),
                ));
            }
            let outcome = scan_catalog(source.lines(), &opts);
            let violated = !outcome.report.characterization_failures.is_empty()
                || !outcome.report.bound_violations.is_empty();
            let text = match out.output {
                OutputFormat::Json => json_line(&outcome.report)?,
                OutputFormat::Csv => scan_csv(&outcome.rows),
                OutputFormat::Text => {
                    let r = &outcome.report;
                    let mut t = format!(
                        "total {}\nconnected {}\nparseErrors {}\ncospectralClasses {}\nintegralGraphs {}\n",
                        r.total,
                        r.connected,
                        r.parse_errors.len(),
                        r.cospectral_classes.len(),
                        r.integral_graphs.len()
                    );
                    for c in &r.cospectral_classes {
                        t.push_str(&format!("class {}\n", c.join(" ")));
                    }
                    for s in &r.integral_graphs {
                        t.push_str(&format!("integral {s}\n"));
                    }
                    for s in &r.characterization_failures {
                        t.push_str(&format!("characterizationFailure {s}\n"));
                    }
                    for s in &r.bound_violations {
                        t.push_str(&format!("boundViolation {s}\n"));
                    }
                    t
                }
            };
            Ok((text, if violated { EXIT_INVARIANT } else { EXIT_OK }))
        }
        Command::EdgeDeletion { a, b, out } => {
            require_not_csv(&out, "edge-deletion")?;
            let record = kab_edge_deletion(a, b)?;
            let text = match out.output {
                OutputFormat::Json => json_line(&record)?,
                _ => format!(
                    "a {}\nb {}\nenergyBefore {}\nenergyAfter {}\nincreased {}\n",
                    record.a, record.b, record.energy_before, record.energy_after, record.increased
                ),
            };
            Ok((text, EXIT_OK))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(cmd: Command) -> (String, i32) {
        let (text, code) = dispatch(cmd).unwrap();
        (text, code)
    }

    fn graph_input(path: &str) -> GraphInput {
        GraphInput {
            input: path.to_string(),
            format: InputFormat::Graph6,
        }
    }

    fn json_out() -> OutputArgs {
        OutputArgs {
            output: OutputFormat::Json,
            tol: DEFAULT_TOL,
        }
    }

    #[test]
    fn spectrum_of_k4_fixture() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k4.g6");
        std::fs::write(&path, "C~\n").unwrap();
        let (text, code) = run_capture(Command::Spectrum {
            input: graph_input(path.to_str().unwrap()),
            out: json_out(),
        });
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("\"spectrum\":[{\"value\":1.0,\"mult\":3},{\"value\":-3.0,\"mult\":1}]"));
        assert!(text.contains("\"energy\":6.0"));
    }

    #[test]
    fn family_star_reports_printed_energy() {
        let (text, code) = run_capture(Command::Family {
            name: "star".into(),
            params: vec![10],
            out: json_out(),
        });
        assert_eq!(code, EXIT_OK);
        // E(S_10) = 24 + sqrt(612)
        let expect = 24.0 + 612.0_f64.sqrt();
        let parsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        let energy = parsed["energy"].as_f64().unwrap();
        assert!((energy - expect).abs() < 1e-9);
        assert!(parsed["maxAbsDiff"].as_f64().unwrap() < 1e-7);
        assert_eq!(parsed["printedEnergyMatches"], serde_json::Value::Bool(true));
    }

    #[test]
    fn construct_double_of_k2_is_c4_with_zero_diff() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k2.g6");
        std::fs::write(&path, "A_\n").unwrap();
        let (text, code) = run_capture(Command::Construct {
            op: "double".into(),
            inputs: vec![path.to_str().unwrap().to_string()],
            predict: true,
            format: InputFormat::Graph6,
            out: json_out(),
        });
        assert_eq!(code, EXIT_OK);
        let parsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(parsed["n"], 4);
        assert_eq!(parsed["m"], 4);
        let g = Graph::from_graph6(parsed["graph6"].as_str().unwrap()).unwrap();
        assert_eq!(g.degrees(), vec![2, 2, 2, 2]);
        assert!(parsed["prediction"]["maxAbsDiff"].as_f64().unwrap() < 1e-9);
    }

    #[test]
    fn edge_deletion_record() {
        let (text, code) = run_capture(Command::EdgeDeletion {
            a: 2,
            b: 2,
            out: json_out(),
        });
        assert_eq!(code, EXIT_OK);
        let parsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(parsed["energyBefore"].as_f64().unwrap(), 12.0);
        assert_eq!(parsed["increased"], serde_json::Value::Bool(true));
    }

    #[test]
    fn scan_options_tokens() {
        let opts = parse_scan_options(
            Some(vec!["integral".into()]),
            Some(vec!["bounds".into()]),
            DEFAULT_TOL,
            2,
        )
        .unwrap();
        assert!(!opts.find_cospectral && opts.find_integral);
        assert!(!opts.verify_complete && !opts.verify_multipartite && opts.verify_bounds);
        assert!(parse_scan_options(Some(vec!["spectral".into()]), None, DEFAULT_TOL, 1).is_err());
    }

    #[test]
    fn csv_rejected_outside_scan() {
        let err = dispatch(Command::EdgeDeletion {
            a: 2,
            b: 2,
            out: OutputArgs {
                output: OutputFormat::Csv,
                tol: DEFAULT_TOL,
            },
        });
        assert!(err.is_err());
    }

    #[test]
    fn run_maps_bad_flags_to_input_error() {
        assert_eq!(run(["dseidel", "spectrum", "--no-such-flag"]), EXIT_INPUT);
        assert_eq!(run(["dseidel", "--help"]), EXIT_OK);
    }
}
