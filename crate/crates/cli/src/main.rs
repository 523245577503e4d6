use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rrcurve::{
    classify, classify_form, cyclic_reduce, equivalence_sweep, fiber_types, free_reduce, homology_check,
    oracle_verdict, parse_word, realize_word, validate, CmzClass, CurveClass, DiagramError, DiagramForm, OracleClass,
    OracleVerdict, ParseError, SeifertMFiber, SweepSummary, ValidForm, Verdict, Word, WordError,
};
use serde::Serialize;
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "rrcurve", version, about = "Classify curves on the genus-two handlebody boundary")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Equivalence,
}

#[derive(Subcommand)]
enum Command {
    /// Decide primitive / proper power / neither by exponent-pattern descent.
    Classify { word: String },
    /// Same question answered by Whitehead length reduction.
    Oracle { word: String },
    /// Free and cyclic reduction.
    Reduce { word: String },
    /// Curve class of a diagram family (inline JSON or a path to a JSON file).
    ClassifyForm { form: String },
    /// Word realized by a diagram family.
    Realize { form: String },
    /// Exceptional fiber types of a BRZ family.
    FiberTypes { form: String },
    /// First homology after attaching 2-handles along both words.
    Homology { alpha: String, beta: String },
    /// Compare the recognizer with the oracle on every cyclic word up to a length.
    Sweep {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=20))]
        max_len: u64,
        #[arg(long, value_enum, default_value_t = Mode::Equivalence)]
        mode: Mode,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Oracle { .. } => "oracle",
            Command::Reduce { .. } => "reduce",
            Command::ClassifyForm { .. } => "classify-form",
            Command::Realize { .. } => "realize",
            Command::FiberTypes { .. } => "fiber-types",
            Command::Homology { .. } => "homology",
            Command::Sweep { .. } => "sweep",
        }
    }
}

struct Failure {
    kind: &'static str,
    message: String,
    detail: Value,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure {
            kind: "parse_error",
            message: e.to_string(),
            detail: json!({ "offset": e.offset, "expected": e.expected }),
        }
    }
}

impl From<WordError> for Failure {
    fn from(e: WordError) -> Failure {
        let kind = match e {
            WordError::EmptyWord => "empty_word",
            WordError::InvalidCounts { .. } => "invalid_counts",
            WordError::NotCoprime { .. } => "not_coprime",
            WordError::Overflow => "overflow",
        };
        Failure { kind, message: e.to_string(), detail: Value::Null }
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Failure {
        let (kind, detail) = match &e {
            DiagramError::RangeViolation { field, constraint, value } => {
                ("range_violation", json!({ "field": field, "constraint": constraint, "value": value.to_string() }))
            }
            DiagramError::GcdViolation { fields, gcd } => ("gcd_violation", json!({ "fields": fields, "gcd": gcd })),
            DiagramError::LinearRelationViolation { relation } => {
                ("linear_relation_violation", json!({ "relation": relation }))
            }
            DiagramError::NoWordRealization { family } => ("no_word_realization", json!({ "family": family })),
            DiagramError::NotApplicable { operation, family } => {
                ("not_applicable", json!({ "operation": operation, "family": family }))
            }
            DiagramError::NormalizesToRect { rect } => ("normalizes_to_rect", json!({ "rect": rect })),
            DiagramError::PreconditionViolation(_) => ("precondition_violation", Value::Null),
            DiagramError::WordTooLong { len } => ("word_too_long", json!({ "len": len.to_string() })),
            DiagramError::Overflow => ("overflow", Value::Null),
            DiagramError::Word(inner) => return Failure::from(inner.clone()),
            DiagramError::Linalg(_) => ("linalg_error", Value::Null),
        };
        Failure { kind, message: e.to_string(), detail }
    }
}

/// Result of one command: the JSON payload, its text rendering, and the exit code.
struct Outcome {
    input: Value,
    result: Value,
    text: String,
    exit: u8,
}

impl Outcome {
    fn ok(input: Value, result: impl Serialize, text: String) -> Outcome {
        Outcome { input, result: serde_json::to_value(result).expect("serializable"), text, exit: 0 }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    command: &'a str,
    input: &'a Value,
    #[serde(flatten)]
    result: &'a Value,
    elapsed_ms: f64,
}

fn word_arg(text: &str) -> Result<(Word, Value), Failure> {
    let w = parse_word(text)?;
    let echo = json!({ "word": text, "parsed": w.to_string() });
    Ok((w, echo))
}

fn form_arg(arg: &str) -> Result<(ValidForm, Value), Failure> {
    let source = if arg.trim_start().starts_with('{') {
        arg.to_owned()
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| Failure {
            kind: "io_error",
            message: format!("cannot read {arg}: {e}"),
            detail: json!({ "path": arg }),
        })?
    };
    let form: DiagramForm = serde_json::from_str(&source).map_err(|e| Failure {
        kind: "invalid_json",
        message: e.to_string(),
        detail: json!({ "line": e.line(), "column": e.column() }),
    })?;
    let echo = serde_json::to_value(&form).expect("serializable");
    Ok((validate(&form)?, echo))
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Primitive => "primitive".into(),
        Verdict::ProperPower { exponent } => format!("proper power, exponent {exponent}"),
        Verdict::Neither => "neither".into(),
    }
}

fn classify_text(c: &CmzClass) -> String {
    let mut out = verdict_text(c.verdict);
    for (i, step) in c.trace.iter().enumerate() {
        write!(out, "\n  {}. A -> {}, B -> {}: {} => {}", i + 1, step.image_a, step.image_b, step.before, step.after)
            .unwrap();
    }
    out
}

fn oracle_text(v: &OracleVerdict) -> String {
    let mut out = verdict_text(v.class.verdict());
    if let OracleClass::ProperPower { root, .. } = &v.class {
        write!(out, "\nroot: {root}").unwrap();
    }
    write!(out, "\nminimal word: {} ({} moves)", v.minimal_word, v.move_trace.len()).unwrap();
    out
}

fn curve_class_text(c: &CurveClass) -> String {
    match c {
        CurveClass::Primitive => "primitive".into(),
        CurveClass::ProperPower { root: Some(root), exponent: Some(k) } => {
            format!("proper power of {root}, exponent {k}")
        }
        CurveClass::ProperPower { .. } => "proper power".into(),
        CurveClass::SeifertD { indexes: [i, j] } => {
            format!("Seifert over the disk, exceptional fibers of index {i} and {j}")
        }
        CurveClass::SeifertM { fiber: SeifertMFiber::Index(s), .. } => {
            format!("Seifert over the Mobius band, exceptional fiber of index {s}")
        }
        CurveClass::SeifertM { fiber: SeifertMFiber::NoExceptionalFiber, alternative_disk_base } => {
            let mut out = "Seifert over the Mobius band, no exceptional fiber".to_owned();
            if let Some([i, j]) = alternative_disk_base {
                write!(out, "\nalso Seifert over the disk with indexes {i} and {j}").unwrap();
            }
            out
        }
        CurveClass::Neither => "neither".into(),
    }
}

fn homology_text((d1, d2): (u64, u64)) -> String {
    let parts: Vec<String> = [d1, d2]
        .into_iter()
        .filter(|&d| d != 1)
        .map(|d| if d == 0 { "Z".to_owned() } else { format!("Z/{d}") })
        .collect();
    if parts.is_empty() {
        "H1 = 0".into()
    } else {
        format!("H1 = {}", parts.join(" + "))
    }
}

fn sweep_text(s: &SweepSummary) -> String {
    let mut out = format!(
        "checked {} words up to length {}: {} primitive, {} proper powers, {} neither; {} mismatches",
        s.checked, s.max_len, s.primitive, s.proper_power, s.neither, s.mismatches
    );
    if let Some(m) = &s.counterexample {
        write!(out, "\nfirst mismatch: {} (recognizer {:?}, oracle {:?})", m.word, m.recognizer, m.oracle).unwrap();
    }
    out
}

fn run(cmd: &Command) -> Result<Outcome, Failure> {
    Ok(match cmd {
        Command::Classify { word } => {
            let (w, input) = word_arg(word)?;
            let class = classify(&w)?;
            let text = classify_text(&class);
            Outcome::ok(input, class, text)
        }
        Command::Oracle { word } => {
            let (w, input) = word_arg(word)?;
            let verdict = oracle_verdict(&w)?;
            let text = oracle_text(&verdict);
            Outcome::ok(input, verdict, text)
        }
        Command::Reduce { word } => {
            let (w, input) = word_arg(word)?;
            let reduced = free_reduce(&w);
            let cyclic = cyclic_reduce(&reduced).ok();
            let length = cyclic.as_ref().map_or(0, |c| c.len());
            let text = match &cyclic {
                Some(c) => format!("reduced: {reduced}\ncyclic: {c}"),
                None => "reduced: (identity)".into(),
            };
            Outcome::ok(input, json!({ "reduced": reduced, "cyclic": cyclic, "cyclic_length": length }), text)
        }
        Command::ClassifyForm { form } => {
            let (f, input) = form_arg(form)?;
            let class = classify_form(&f)?;
            let text = curve_class_text(&class);
            Outcome::ok(input, class, text)
        }
        Command::Realize { form } => {
            let (f, input) = form_arg(form)?;
            let word = realize_word(&f)?;
            let text = word.to_string();
            Outcome::ok(input, json!({ "word": word, "length": word.len() }), text)
        }
        Command::FiberTypes { form } => {
            let (f, input) = form_arg(form)?;
            let (first, second) = fiber_types(&f)?;
            Outcome::ok(input, json!({ "fiber_types": [first, second] }), format!("{first} {second}"))
        }
        Command::Homology { alpha, beta } => {
            let (a, a_echo) = word_arg(alpha)?;
            let (b, b_echo) = word_arg(beta)?;
            let h1 = homology_check(&a, &b)?;
            let input = json!({ "alpha": a_echo, "beta": b_echo });
            Outcome::ok(input, json!({ "h1": [h1.0, h1.1] }), homology_text(h1))
        }
        Command::Sweep { max_len, mode: Mode::Equivalence } => {
            let summary = equivalence_sweep(*max_len as usize);
            let exit = if summary.mismatches == 0 { 0 } else { 3 };
            let text = sweep_text(&summary);
            let mut outcome = Outcome::ok(json!({ "max_len": max_len, "mode": "equivalence" }), summary, text);
            outcome.exit = exit;
            outcome
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let start = Instant::now();
    match run(&cli.command) {
        Ok(outcome) => {
            match cli.output {
                Output::Json => {
                    let report = Report {
                        schema_version: SCHEMA_VERSION,
                        command: cli.command.name(),
                        input: &outcome.input,
                        result: &outcome.result,
                        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
                    };
                    println!("{}", serde_json::to_string(&report).expect("serializable"));
                }
                Output::Text => println!("{}", outcome.text),
            }
            ExitCode::from(outcome.exit)
        }
        Err(f) => {
            match cli.output {
                Output::Json => {
                    let body = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": cli.command.name(),
                        "error": { "kind": f.kind, "message": f.message, "detail": f.detail },
                    });
                    eprintln!("{body}");
                }
                Output::Text => eprintln!("error: {}", f.message),
            }
            ExitCode::from(2)
        }
    }
}
