//! The `procco` command-line tool.
//!
//! Exit codes: 0 clean, 1 error findings, 2 unreadable or unparsable input,
//! 3 usage error.

mod schema_dump;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use procco_core::graph::{export_canonical, InstanceGraph};
use procco_core::parser::{self, SourceDocument};
use procco_core::query::{self, AxiomReading};
use procco_core::refinement;
use procco_core::schema::{AxiomId, PartitionSet, Relation};
use procco_core::text::quote;
use procco_core::validator::{self, Mode, ValidationOptions};

pub use schema_dump::SCHEMA_HEADER;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Clean = 0,
    Findings = 1,
    ParseFailure = 2,
    Usage = 3,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "procco",
    version,
    about = "Validate process models against the ProcessCO v1.3 ontology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Canonical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Canonical,
    Dsl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum QueryOp {
    Descendants,
    Closure,
    Witness,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Model files (`.pco`); `-` reads standard input.
    #[arg(required = true)]
    files: Vec<String>,
    /// Generalization-set overrides, one `Parent = disjoint|overlapping, complete|incomplete` or `Parent = none` per line.
    #[arg(long, value_name = "CFG")]
    partitions: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Let axiom witnesses be parts at any depth rather than direct parts.
    #[arg(long)]
    transitive: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check models and report findings.
    Validate {
        #[command(flatten)]
        check: CheckArgs,
        /// Enforce lower-bound multiplicities and composition rules as errors.
        #[arg(long)]
        strict: bool,
    },
    /// Like `validate` in lenient mode, but findings never fail the run.
    Lint {
        #[command(flatten)]
        check: CheckArgs,
    },
    /// Closure and witness queries.
    Query {
        file: String,
        #[arg(long, value_enum)]
        op: QueryOp,
        /// Entity for `descendants` and `closure`.
        #[arg(long)]
        id: Option<String>,
        /// Relationship for `closure`: consumes, produces or involves.
        #[arg(long)]
        rel: Option<String>,
        /// Axiom for `witness`, e.g. A5.
        #[arg(long)]
        axiom: Option<String>,
        /// Comma-separated binding for `witness`, e.g. `wp1,r1`.
        #[arg(long)]
        subjects: Option<String>,
        /// Full closure for `descendants`; transitive reading for `witness`.
        #[arg(long)]
        transitive: bool,
    },
    /// Print the ProcessCO / ThingFO relationship verification matrix.
    Matrix {
        /// Append the refinement-consistency check.
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Print the built-in ontology schema.
    Schema {
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Re-emit a model in canonical form or as formatted DSL.
    Export {
        file: String,
        #[arg(long, value_enum, default_value = "canonical")]
        format: ExportFormat,
    },
    /// Entity and edge counts per kind.
    Stats { file: String },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                ExitCode::Usage
            } else {
                let _ = out.write_all(text.as_bytes());
                ExitCode::Clean
            };
        }
    };
    let mut io = Io { stdin, out, err };
    let code = match cli.command {
        Command::Validate { check, strict } => check_files(
            &mut io,
            &check,
            if strict { Mode::Strict } else { Mode::Lenient },
            false,
        ),
        Command::Lint { check } => check_files(&mut io, &check, Mode::Lenient, true),
        Command::Query {
            file,
            op,
            id,
            rel,
            axiom,
            subjects,
            transitive,
        } => run_query(&mut io, &file, op, id, rel, axiom, subjects, transitive),
        Command::Matrix { check, format } => {
            let _ = io.out.write_all(matrix_output(check, format).as_bytes());
            ExitCode::Clean
        }
        Command::Schema { format } => {
            let text = match format {
                ReportFormat::Text => schema_dump::text(),
                ReportFormat::Canonical => schema_dump::canonical(),
            };
            let _ = io.out.write_all(text.as_bytes());
            ExitCode::Clean
        }
        Command::Export { file, format } => match load_one(&mut io, &file) {
            Ok(g) => {
                let text = match format {
                    ExportFormat::Canonical => export_canonical(&g),
                    ExportFormat::Dsl => parser::format(&g),
                };
                let _ = io.out.write_all(text.as_bytes());
                ExitCode::Clean
            }
            Err(code) => code,
        },
        Command::Stats { file } => match load_one(&mut io, &file) {
            Ok(g) => {
                let _ = io.out.write_all(stats(&g).as_bytes());
                ExitCode::Clean
            }
            Err(code) => code,
        },
    };
    let _ = io.out.flush();
    code
}

fn read_input(io: &mut Io, path: &str) -> Result<SourceDocument, String> {
    let mut bytes = Vec::new();
    let (origin, result) = if path == "-" {
        ("<stdin>".to_string(), io.stdin.read_to_end(&mut bytes).map(|_| ()))
    } else {
        (path.to_string(), std::fs::read(path).map(|b| bytes = b))
    };
    result.map_err(|e| format!("{origin}: cannot read: {e}"))?;
    SourceDocument::from_bytes(&bytes, origin.clone()).map_err(|d| d.render(&origin))
}

/// Parsed graph, or the diagnostics text and failure code.
fn parse_document(doc: &SourceDocument) -> (Option<InstanceGraph>, String) {
    let outcome = parser::parse(doc);
    let diagnostics: String = outcome
        .diagnostics
        .iter()
        .map(|d| d.render(&doc.origin) + "\n")
        .collect();
    (outcome.graph, diagnostics)
}

fn load_one(io: &mut Io, path: &str) -> Result<InstanceGraph, ExitCode> {
    let doc = read_input(io, path).map_err(|msg| {
        let _ = writeln!(io.err, "{msg}");
        ExitCode::ParseFailure
    })?;
    let (graph, diagnostics) = parse_document(&doc);
    let _ = io.err.write_all(diagnostics.as_bytes());
    graph.ok_or(ExitCode::ParseFailure)
}

struct FileResult {
    out: String,
    err: String,
    parse_failed: bool,
    has_errors: bool,
}

fn check_files(io: &mut Io, args: &CheckArgs, mode: Mode, lint: bool) -> ExitCode {
    let partitions = match &args.partitions {
        None => PartitionSet::defaults(),
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|t| PartitionSet::from_config(&t).map_err(|e| e.to_string()))
        {
            Ok(p) => p,
            Err(msg) => {
                let _ = writeln!(io.err, "{}: {msg}", path.display());
                return ExitCode::Usage;
            }
        },
    };
    let options = ValidationOptions {
        mode,
        reading: if args.transitive {
            AxiomReading::Transitive
        } else {
            AxiomReading::Direct
        },
        partitions,
    };

    // Reading happens up front (standard input can only be read once);
    // parsing and validation run one thread per file.
    let inputs: Vec<Result<SourceDocument, String>> = args.files.iter().map(|f| read_input(io, f)).collect();
    let results: Vec<FileResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .iter()
            .map(|input| scope.spawn(|| check_one(input, &options, args.format)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("validation thread panicked"))
            .collect()
    });

    let multi = args.files.len() > 1;
    let mut code = ExitCode::Clean;
    for (path, r) in args.files.iter().zip(&results) {
        let _ = io.err.write_all(r.err.as_bytes());
        if multi {
            let heading = match args.format {
                ReportFormat::Text => format!("# {path}\n"),
                ReportFormat::Canonical => format!("file {}\n", quote(path)),
            };
            let _ = io.out.write_all(heading.as_bytes());
        }
        let _ = io.out.write_all(r.out.as_bytes());
        if r.parse_failed {
            code = ExitCode::ParseFailure;
        } else if r.has_errors && !lint && code == ExitCode::Clean {
            code = ExitCode::Findings;
        }
    }
    code
}

fn check_one(input: &Result<SourceDocument, String>, options: &ValidationOptions, format: ReportFormat) -> FileResult {
    let doc = match input {
        Ok(doc) => doc,
        Err(msg) => {
            return FileResult {
                out: String::new(),
                err: format!("{msg}\n"),
                parse_failed: true,
                has_errors: false,
            }
        }
    };
    let (graph, err) = parse_document(doc);
    let Some(graph) = graph else {
        return FileResult {
            out: String::new(),
            err,
            parse_failed: true,
            has_errors: false,
        };
    };
    let report = validator::validate_with(&graph.freeze(), options);
    let out = match format {
        ReportFormat::Text => validator::render_text(&report),
        ReportFormat::Canonical => validator::render_canonical(&report),
    };
    FileResult {
        out,
        err,
        parse_failed: false,
        has_errors: report.has_errors(),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_query(
    io: &mut Io,
    file: &str,
    op: QueryOp,
    id: Option<String>,
    rel: Option<String>,
    axiom: Option<String>,
    subjects: Option<String>,
    transitive: bool,
) -> ExitCode {
    let usage = |io: &mut Io, msg: &str| {
        let _ = writeln!(io.err, "procco query: {msg}");
        ExitCode::Usage
    };
    let graph = match load_one(io, file) {
        Ok(g) => g.freeze(),
        Err(code) => return code,
    };
    let lines: Vec<String> = match op {
        QueryOp::Descendants => {
            let Some(id) = id else {
                return usage(io, "--op descendants needs --id");
            };
            match query::descendants(&graph, &id, transitive) {
                Ok(ids) => ids.iter().map(|i| i.to_string()).collect(),
                Err(e) => return usage(io, &e.to_string()),
            }
        }
        QueryOp::Closure => {
            let (Some(id), Some(rel)) = (id, rel) else {
                return usage(io, "--op closure needs --id and --rel");
            };
            let rel = match Relation::from_name(&rel) {
                Ok(r) => r,
                Err(e) => return usage(io, &e.to_string()),
            };
            match query::closure(&graph, &id, rel) {
                Ok(ids) => ids.iter().map(|i| i.to_string()).collect(),
                Err(e) => return usage(io, &e.to_string()),
            }
        }
        QueryOp::Witness => {
            let (Some(axiom), Some(subjects)) = (axiom, subjects) else {
                return usage(io, "--op witness needs --axiom and --subjects");
            };
            let axiom: AxiomId = match axiom.parse() {
                Ok(a) => a,
                Err(e) => return usage(io, &format!("{e}")),
            };
            let subjects: Vec<&str> = subjects.split(',').filter(|s| !s.is_empty()).collect();
            let reading = if transitive {
                AxiomReading::Transitive
            } else {
                AxiomReading::Direct
            };
            match query::axiom_witness_with(&graph, axiom, &subjects, reading) {
                Ok(w) => vec![match w.witness {
                    Some(id) => format!("satisfied {id}"),
                    None => "unsatisfied".to_string(),
                }],
                Err(e) => return usage(io, &e.to_string()),
            }
        }
    };
    for l in lines {
        let _ = writeln!(io.out, "{l}");
    }
    ExitCode::Clean
}

fn matrix_output(check: bool, format: ReportFormat) -> String {
    let mut out = match format {
        ReportFormat::Text => refinement::render_matrix_text(),
        ReportFormat::Canonical => refinement::render_matrix_canonical(),
    };
    if check {
        let checks = refinement::classify_matrix();
        let findings = refinement::check_schema_refinement();
        match format {
            ReportFormat::Text => {
                out.push('\n');
                out.push_str(&refinement::render_check_text(&checks));
                for f in &findings {
                    out.push_str(&format!("{f}\n"));
                }
            }
            ReportFormat::Canonical => {
                out.push_str(&refinement::render_check_canonical(&checks));
                for f in &findings {
                    out.push_str(&format!(
                        "finding {} {} {} {}\n",
                        f.code,
                        f.severity,
                        f.subject_list(),
                        quote(&f.message)
                    ));
                }
            }
        }
    }
    out
}

fn stats(g: &InstanceGraph) -> String {
    let mut kinds: BTreeMap<&str, usize> = BTreeMap::new();
    for e in g.entities() {
        *kinds.entry(e.kind.name()).or_default() += 1;
    }
    let mut rels: BTreeMap<String, usize> = BTreeMap::new();
    for r in g.relations() {
        *rels.entry(r.rel.ident()).or_default() += 1;
    }
    let mut flavors: BTreeMap<&str, usize> = BTreeMap::new();
    for c in g.composition() {
        *flavors.entry(c.flavor.name()).or_default() += 1;
    }
    let mut out = format!(
        "entities {}\nrelations {}\ncomposition {}\n",
        g.entity_count(),
        g.relations().count(),
        g.composition().count()
    );
    for (k, n) in kinds {
        out.push_str(&format!("kind {k} {n}\n"));
    }
    for (r, n) in rels {
        out.push_str(&format!("rel {r} {n}\n"));
    }
    for (f, n) in flavors {
        out.push_str(&format!("comp {f} {n}\n"));
    }
    out
}
