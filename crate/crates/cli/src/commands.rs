//! Command-line driver: thin wrappers around the kernel operations.
//!
//! Exit codes: 0 for pass/constructed, 1 for an axiom violation or
//! counterexample (a report is still emitted), 2 for input or schema errors.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use bicat_core::adjunctions::{check_adjunction, mate_left, mate_right, Adjunction};
use bicat_core::cell::CellId;
use bicat_core::fixtures;
use bicat_core::functors::{validate_lax_functor, validate_lax_transformation, validate_modification};
use bicat_core::quillen::{
    check_certificate, check_preserves_inc, find_inc_lax_terminal, inc_lax_terminal_candidates,
    quillen_a, terminal_assignment_by_search, whitehead, QuillenError, SliceTerminal,
    TerminalAssignment, WhiteheadOutcome,
};
use bicat_core::slice::{change_of_slice, lax_slice};
use bicat_core::validate::validate_bicategory;

use crate::schema::*;

#[derive(Parser, Debug)]
#[command(
    name = "bicat",
    about = "Finite bicategory kernel: validate coherence axioms, build lax slices, detect inc-lax terminal objects, and certify biequivalences",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MateDirection {
    Right,
    Left,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a bicategory, functor, transformation, or modification document.
    Validate {
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Generate fixture bicategories.
    Gen {
        #[command(subcommand)]
        target: GenTarget,
    },
    /// Build the lax slice of a functor over a target object.
    Slice {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build the change-of-slice strict functor along a target 1-cell.
    ChangeOfSlice {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long = "one-cell")]
        one_cell: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search a bicategory for an inc-lax terminal object.
    Terminal {
        #[arg(long)]
        bicategory: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check that a change-of-slice functor preserves initial components.
    PreservesInc {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long = "one-cell")]
        one_cell: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Construct the reverse lax functor with unit and counit from terminal
    /// data (supplied, or searched for constructively).
    QuillenA {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long = "terminal-data")]
        terminal_data: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Certify a pseudofunctor as a biequivalence or report a counterexample.
    Whitehead {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Independently re-check a certificate against its functor.
    CheckCert {
        #[arg(long)]
        functor: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute the mate of a 2-cell along a pair of adjunctions.
    Mate {
        #[arg(long)]
        bicategory: PathBuf,
        #[arg(long)]
        direction: MateDirection,
        #[arg(long = "adj0-left")]
        adj0_left: String,
        #[arg(long = "adj0-right")]
        adj0_right: String,
        #[arg(long = "adj0-unit")]
        adj0_unit: String,
        #[arg(long = "adj0-counit")]
        adj0_counit: String,
        #[arg(long = "adj1-left")]
        adj1_left: String,
        #[arg(long = "adj1-right")]
        adj1_right: String,
        #[arg(long = "adj1-unit")]
        adj1_unit: String,
        #[arg(long = "adj1-counit")]
        adj1_counit: String,
        #[arg(long = "along-a")]
        along_a: String,
        #[arg(long = "along-b")]
        along_b: String,
        #[arg(long = "two-cell")]
        two_cell: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the triangle identities for an adjunction candidate.
    AdjunctionCheck {
        #[arg(long)]
        bicategory: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        unit: String,
        #[arg(long)]
        counit: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenTarget {
    /// Chaotic bicategory: every hom-category is terminal.
    Chaotic {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Delooping of a monoid, optionally with a thin hom-order.
    Deloop {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Two-group with a prescribed associator cocycle.
    TwoGroup {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn read_document(path: &Path) -> Result<Document, CliError> {
    let text = read_file(path)?;
    Document::parse_str(&text, &path.display().to_string())
}

fn emit(doc: &Document, output: Option<&Path>) -> Result<(), CliError> {
    let text = doc.to_canonical_string();
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            println!("wrote {} document to {}", doc.kind, path.display());
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn quillen_exit(e: QuillenError) -> Result<i32, CliError> {
    // Findings about the hypotheses are verdicts, not usage errors.
    match e {
        QuillenError::NoUniqueSolution { .. }
        | QuillenError::WitnessSearchFailed { .. }
        | QuillenError::HypothesisNotSatisfied { .. } => {
            println!("failed: {e}");
            Ok(1)
        }
        other => Err(CliError::Input(other.to_string())),
    }
}

fn parse_functor(path: &Path) -> Result<bicat_core::functors::LaxFunctor, CliError> {
    let doc = read_document(path)?;
    if doc.kind != "functor" {
        return Err(schema_error(
            path.display().to_string(),
            format!("expected a functor document, found kind {}", doc.kind),
        ));
    }
    let payload: FunctorPayload = doc.payload_as(&path.display().to_string())?;
    payload.to_core()
}

fn parse_bicategory(path: &Path) -> Result<bicat_core::FiniteBicategory, CliError> {
    let doc = read_document(path)?;
    if doc.kind != "bicategory" {
        return Err(schema_error(
            path.display().to_string(),
            format!("expected a bicategory document, found kind {}", doc.kind),
        ));
    }
    let payload: BicategoryPayload = doc.payload_as(&path.display().to_string())?;
    payload.to_core()
}

fn report_doc(report: &bicat_core::ValidationReport) -> Document {
    Document::new(
        "report",
        ReportDocPayload::Validation {
            report: ReportPayload::from_core(report),
            classification: None,
            strong: None,
            invertible: None,
        },
    )
}

fn input_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Validate { input, output } => cmd_validate(&input, output.as_deref()),
        Command::Gen { target } => cmd_gen(target),
        Command::Slice {
            functor,
            object,
            output,
        } => cmd_slice(&functor, &object, output.as_deref()),
        Command::ChangeOfSlice {
            functor,
            one_cell,
            output,
        } => cmd_change_of_slice(&functor, &one_cell, output.as_deref()),
        Command::Terminal { bicategory, output } => cmd_terminal(&bicategory, output.as_deref()),
        Command::PreservesInc {
            functor,
            one_cell,
            output,
        } => cmd_preserves_inc(&functor, &one_cell, output.as_deref()),
        Command::QuillenA {
            functor,
            terminal_data,
            output,
        } => cmd_quillen_a(&functor, terminal_data.as_deref(), output.as_deref()),
        Command::Whitehead { functor, output } => cmd_whitehead(&functor, output.as_deref()),
        Command::CheckCert {
            functor,
            certificate,
            output,
        } => cmd_check_cert(&functor, &certificate, output.as_deref()),
        Command::Mate {
            bicategory,
            direction,
            adj0_left,
            adj0_right,
            adj0_unit,
            adj0_counit,
            adj1_left,
            adj1_right,
            adj1_unit,
            adj1_counit,
            along_a,
            along_b,
            two_cell,
            output,
        } => {
            let b = parse_bicategory(&bicategory)?;
            let adj0 = Adjunction {
                left: CellId::new(&adj0_left),
                right: CellId::new(&adj0_right),
                unit: CellId::new(&adj0_unit),
                counit: CellId::new(&adj0_counit),
            };
            let adj1 = Adjunction {
                left: CellId::new(&adj1_left),
                right: CellId::new(&adj1_right),
                unit: CellId::new(&adj1_unit),
                counit: CellId::new(&adj1_counit),
            };
            for adj in [&adj0, &adj1] {
                let rep = check_adjunction(&b, adj).map_err(input_err)?;
                if !rep.report.passed() {
                    return Err(CliError::Input(format!(
                        "adjunction ({}, {}) fails the triangle identities",
                        adj.left, adj.right
                    )));
                }
            }
            let a = CellId::new(&along_a);
            let b_cell = CellId::new(&along_b);
            let omega = CellId::new(&two_cell);
            let (result, dir_name) = match direction {
                MateDirection::Right => (
                    mate_right(&b, &adj0, &adj1, &a, &b_cell, &omega).map_err(input_err)?,
                    "right",
                ),
                MateDirection::Left => (
                    mate_left(&b, &adj0, &adj1, &a, &b_cell, &omega).map_err(input_err)?,
                    "left",
                ),
            };
            println!("mate: {result}");
            let doc = Document::new(
                "report",
                ReportDocPayload::Mate {
                    direction: dir_name.to_string(),
                    result: result.to_string(),
                },
            );
            emit(&doc, output.as_deref())?;
            Ok(0)
        }
        Command::AdjunctionCheck {
            bicategory,
            left,
            right,
            unit,
            counit,
            output,
        } => {
            let b = parse_bicategory(&bicategory)?;
            let adj = Adjunction {
                left: CellId::new(&left),
                right: CellId::new(&right),
                unit: CellId::new(&unit),
                counit: CellId::new(&counit),
            };
            let rep = check_adjunction(&b, &adj).map_err(input_err)?;
            println!(
                "adjunction check: {} (adjoint equivalence: {})",
                rep.report.status, rep.adjoint_equivalence
            );
            emit(&report_doc(&rep.report), output.as_deref())?;
            Ok(if rep.report.passed() { 0 } else { 1 })
        }
    }
}

fn cmd_validate(input: &Path, output: Option<&Path>) -> Result<i32, CliError> {
    let doc = read_document(input)?;
    let origin = input.display().to_string();
    let (report, classification, strong, invertible) = match doc.kind.as_str() {
        "bicategory" => {
            let payload: BicategoryPayload = doc.payload_as(&origin)?;
            let b = payload.to_core()?;
            let report = validate_bicategory(&b).map_err(input_err)?;
            (report, None, None, None)
        }
        "functor" => {
            let payload: FunctorPayload = doc.payload_as(&origin)?;
            let f = payload.to_core()?;
            let rep = validate_lax_functor(&f).map_err(input_err)?;
            (
                rep.report,
                Some(ClassificationPayload::from_core(&rep.classification)),
                None,
                None,
            )
        }
        "transformation" => {
            let payload: TransformationPayload = doc.payload_as(&origin)?;
            let t = payload.to_core()?;
            let rep = validate_lax_transformation(&t).map_err(input_err)?;
            (rep.report, None, Some(rep.strong), None)
        }
        "modification" => {
            let payload: ModificationPayload = doc.payload_as(&origin)?;
            let m = payload.to_core()?;
            let rep = validate_modification(&m).map_err(input_err)?;
            (rep.report, None, None, Some(rep.invertible))
        }
        other => {
            return Err(schema_error(
                origin,
                format!("cannot validate documents of kind {other}"),
            ))
        }
    };
    let mut line = format!("validation: {}", report.status);
    if let Some(c) = &classification {
        line.push_str(&format!(" (classification: {})", c.to_core()));
    }
    if let Some(s) = strong {
        line.push_str(&format!(" (strong: {s})"));
    }
    if let Some(i) = invertible {
        line.push_str(&format!(" (invertible: {i})"));
    }
    println!("{line}");
    let out_doc = Document::new(
        "report",
        ReportDocPayload::Validation {
            report: ReportPayload::from_core(&report),
            classification,
            strong,
            invertible,
        },
    );
    emit(&out_doc, output)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_gen(target: GenTarget) -> Result<i32, CliError> {
    let (b, output) = match target {
        GenTarget::Chaotic { size, output } => {
            (fixtures::chaotic(size).map_err(input_err)?, output)
        }
        GenTarget::Deloop { spec, output } => {
            let text = read_file(&spec)?;
            let spec: MonoidSpec = serde_json::from_str(&text).map_err(|e| {
                schema_error(format!("{}:{}:{}", spec.display(), e.line(), e.column()), e.to_string())
            })?;
            let table = spec.to_core();
            let b = match &spec.leq {
                Some(pairs) => {
                    let leq: BTreeSet<(CellId, CellId)> = pairs
                        .iter()
                        .map(|(a, b)| (CellId::new(a), CellId::new(b)))
                        .collect();
                    fixtures::deloop_ordered_monoid(&table, &leq).map_err(input_err)?
                }
                None => fixtures::deloop_monoid(&table).map_err(input_err)?,
            };
            (b, output)
        }
        GenTarget::TwoGroup { spec, output } => {
            let text = read_file(&spec)?;
            let spec: TwoGroupSpec = serde_json::from_str(&text).map_err(|e| {
                schema_error(format!("{}:{}:{}", spec.display(), e.line(), e.column()), e.to_string())
            })?;
            let b = fixtures::two_group(&spec.to_core()).map_err(input_err)?;
            (b, output)
        }
    };
    let doc = Document::new("bicategory", BicategoryPayload::from_core(&b)?);
    emit(&doc, output.as_deref())?;
    Ok(0)
}

fn cmd_slice(functor: &Path, object: &str, output: Option<&Path>) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let s = lax_slice(&f, &CellId::new(object)).map_err(input_err)?;
    println!(
        "slice over {object}: {} objects, {} one-cells, {} two-cells",
        s.bicategory.objects.len(),
        s.bicategory.all_one_cells().count(),
        s.bicategory.all_two_cells().count()
    );
    let doc = Document::new("bicategory", BicategoryPayload::from_slice(&s)?);
    emit(&doc, output)?;
    Ok(0)
}

fn cmd_change_of_slice(
    functor: &Path,
    one_cell: &str,
    output: Option<&Path>,
) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let change = change_of_slice(&f, &CellId::new(one_cell)).map_err(input_err)?;
    println!(
        "change-of-slice along {one_cell}: {} -> {}",
        change.source.base_object, change.target.base_object
    );
    let doc = Document::new("functor", FunctorPayload::from_core(&change.functor)?);
    emit(&doc, output)?;
    Ok(0)
}

fn cmd_terminal(bicategory: &Path, output: Option<&Path>) -> Result<i32, CliError> {
    let doc = read_document(bicategory)?;
    let origin = bicategory.display().to_string();
    if doc.kind != "bicategory" {
        return Err(schema_error(origin, "expected a bicategory document"));
    }
    let payload: BicategoryPayload = doc.payload_as(&origin)?;
    let slice = payload.to_slice()?;
    let b = match &slice {
        Some(s) => s.bicategory.clone(),
        None => payload.to_core()?,
    };
    let qualifying = inc_lax_terminal_candidates(&b).map_err(input_err)?;
    match find_inc_lax_terminal(&b).map_err(input_err)? {
        Some(data) => {
            println!(
                "inc-lax terminal object: {} ({} qualifying)",
                data.terminal,
                qualifying.len()
            );
            let entry = TerminalEntry::from_core(
                slice.as_ref().map(|s| &s.base_object),
                &data,
                Some(&qualifying),
            );
            let doc = Document::new(
                "terminal-data",
                TerminalDataPayload {
                    entries: vec![entry],
                },
            );
            emit(&doc, output)?;
            Ok(0)
        }
        None => {
            println!("no inc-lax terminal object");
            let doc = Document::new(
                "report",
                ReportDocPayload::TerminalSearch {
                    found: false,
                    object: slice.map(|s| s.base_object.to_string()),
                    qualifying: qualifying.iter().map(|c| c.to_string()).collect(),
                },
            );
            emit(&doc, output)?;
            Ok(1)
        }
    }
}

fn cmd_preserves_inc(functor: &Path, one_cell: &str, output: Option<&Path>) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let change = change_of_slice(&f, &CellId::new(one_cell)).map_err(input_err)?;
    let kx = find_inc_lax_terminal(&change.source.bicategory)
        .map_err(input_err)?
        .ok_or_else(|| {
            CliError::Input(format!(
                "the slice over {} has no inc-lax terminal object",
                change.source.base_object
            ))
        })?;
    let ky = find_inc_lax_terminal(&change.target.bicategory)
        .map_err(input_err)?
        .ok_or_else(|| {
            CliError::Input(format!(
                "the slice over {} has no inc-lax terminal object",
                change.target.base_object
            ))
        })?;
    let report = check_preserves_inc(&change.functor, &kx, &ky).map_err(input_err)?;
    println!("preserves initial components: {}", report.status);
    emit(&report_doc(&report), output)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn assignment_from_document(
    f: &bicat_core::functors::LaxFunctor,
    path: &Path,
) -> Result<TerminalAssignment, CliError> {
    let doc = read_document(path)?;
    let origin = path.display().to_string();
    if doc.kind != "terminal-data" {
        return Err(schema_error(origin, "expected a terminal-data document"));
    }
    let payload: TerminalDataPayload = doc.payload_as(&origin)?;
    let mut out = TerminalAssignment::new();
    for (i, entry) in payload.entries.iter().enumerate() {
        let object = entry.object.as_ref().ok_or_else(|| {
            schema_error(
                format!("{origin}: entries[{i}]"),
                "terminal data for the reverse construction must name its object",
            )
        })?;
        let x = CellId::new(object);
        if !f.tgt.objects.contains(&x) {
            return Err(schema_error(
                format!("{origin}: entries[{i}]"),
                format!("unknown target object {object}"),
            ));
        }
        let slice = lax_slice(f, &x).map_err(input_err)?;
        let data = entry.to_core();
        if !slice.bicategory.objects.contains(&data.terminal) {
            return Err(schema_error(
                format!("{origin}: entries[{i}]"),
                format!("{} is not an object of the slice over {object}", data.terminal),
            ));
        }
        out.insert(x, SliceTerminal { slice, data });
    }
    Ok(out)
}

fn cmd_quillen_a(
    functor: &Path,
    terminal_data: Option<&Path>,
    output: Option<&Path>,
) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let assignment = match terminal_data {
        Some(path) => assignment_from_document(&f, path)?,
        None => match terminal_assignment_by_search(&f).map_err(input_err)? {
            Ok(a) => a,
            Err(x) => {
                println!("failed: the slice over {x} has no inc-lax terminal object");
                return Ok(1);
            }
        },
    };
    let qa = match quillen_a(&f, &assignment) {
        Ok(qa) => qa,
        Err(e) => return quillen_exit(e),
    };
    let ok = qa.g_report.report.passed()
        && qa.eta_report.report.passed()
        && qa.eps_report.report.passed();
    println!(
        "reverse functor: {} ({}); eta strong: {}; eps strong: {}",
        qa.g_report.report.status,
        qa.g_report.classification,
        qa.eta_report.strong,
        qa.eps_report.strong
    );
    let mut reports = std::collections::BTreeMap::new();
    reports.insert(
        "functor-g".to_string(),
        ReportPayload::from_core(&qa.g_report.report),
    );
    reports.insert(
        "transformation-eta".to_string(),
        ReportPayload::from_core(&qa.eta_report.report),
    );
    reports.insert(
        "transformation-eps".to_string(),
        ReportPayload::from_core(&qa.eps_report.report),
    );
    reports.insert(
        "preservation".to_string(),
        ReportPayload::from_core(&qa.preservation),
    );
    let payload = CertificatePayload {
        g: FunctorPayload::from_core(&qa.g)?,
        eta: TransformationPayload::from_core(&qa.eta)?,
        eps: TransformationPayload::from_core(&qa.eps)?,
        eta_inv: None,
        eps_inv: None,
        eta_unit: None,
        eta_counit: None,
        eps_unit: None,
        eps_counit: None,
        evidence: EvidencePayload {
            reports,
            g_classification: ClassificationPayload::from_core(&qa.g_report.classification),
            eta_strong: qa.eta_report.strong,
            eps_strong: qa.eps_report.strong,
        },
    };
    emit(&Document::new("certificate", payload), output)?;
    Ok(if ok { 0 } else { 1 })
}

fn cmd_whitehead(functor: &Path, output: Option<&Path>) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let outcome = match whitehead(&f) {
        Ok(o) => o,
        Err(e) => return quillen_exit(e),
    };
    match outcome {
        WhiteheadOutcome::Certificate(cert) => {
            println!(
                "biequivalence certificate constructed (reverse functor: {})",
                cert.evidence.g_classification
            );
            let payload = CertificatePayload::from_core(&cert)?;
            emit(&Document::new("certificate", payload), output)?;
            Ok(0)
        }
        WhiteheadOutcome::Counterexample(e) => {
            let rep = e.to_report();
            for v in &rep.violations {
                let witness: Vec<String> = v.witness.iter().map(|c| c.to_string()).collect();
                println!("counterexample: {} at ({})", v.axiom, witness.join(", "));
            }
            emit(&Document::new("report", ReportDocPayload::local(&e)), output)?;
            Ok(1)
        }
    }
}

fn cmd_check_cert(functor: &Path, certificate: &Path, output: Option<&Path>) -> Result<i32, CliError> {
    let f = parse_functor(functor)?;
    let doc = read_document(certificate)?;
    let origin = certificate.display().to_string();
    if doc.kind != "certificate" {
        return Err(schema_error(origin, "expected a certificate document"));
    }
    let payload: CertificatePayload = doc.payload_as(&origin)?;
    let report = if payload.is_complete() {
        let cert = payload.to_core()?;
        check_certificate(&f, &cert).map_err(input_err)?
    } else {
        // Constructive-route certificate: validate the pieces directly.
        let g = payload.g.to_core()?;
        let eta = payload.eta.to_core()?;
        let eps = payload.eps.to_core()?;
        let mut report = validate_lax_functor(&g).map_err(input_err)?.report;
        report.absorb(validate_lax_transformation(&eta).map_err(input_err)?.report);
        report.absorb(validate_lax_transformation(&eps).map_err(input_err)?.report);
        report
    };
    println!("certificate check: {}", report.status);
    emit(&report_doc(&report), output)?;
    Ok(if report.passed() { 0 } else { 1 })
}
