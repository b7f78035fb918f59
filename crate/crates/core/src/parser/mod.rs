//! The `.pco` DSL: parsing with recoverable diagnostics, and formatting.
//!
//! ```text
//! # comment
//! entity wp1 : WorkProcess { name = "Build" start_date = 2024-03-01 }
//! entity a1 : Activity {}
//! entity pe1 : Artifact {}
//! rel consumes wp1 -> pe1
//! comp wp1 contains a1
//! ```
//!
//! The full grammar is in `docs/dsl.md`. Each statement sits on one line,
//! except that an entity's `{ ... }` block may span lines. Statements may
//! appear in any order; references are resolved after the whole document has
//! been read.
//!
//! | code | severity | meaning |
//! |------|----------|---------|
//! | `P000` | error | input is not UTF-8 (fatal) |
//! | `P001` | error | unknown statement keyword |
//! | `P002` | error | unknown term kind |
//! | `P003` | error | duplicate entity id |
//! | `P004` | error | unknown relationship |
//! | `P005` | error | reference to an undeclared entity |
//! | `P006` | error / warning | malformed or repeated attribute (error); value of the wrong type (warning) |
//! | `P007` | error | composition the endpoint kinds forbid, or a cycle |
//! | `P008` | error | other syntax error |
//!
//! Lines and columns are 1-based; columns count Unicode scalar values.

mod format;
mod lexer;

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Attributes, GraphError, InstanceGraph, Scalar};
use crate::schema::{builtin_schema, Relation, TermKind};
use crate::validator::Severity;

pub use format::format;
use lexer::Cursor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl Diagnostic {
    fn at(pos: Pos, severity: Severity, code: &'static str, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            severity,
            code,
            message: message.into(),
            line: pos.line,
            column: pos.column,
        }
    }

    fn error(pos: Pos, code: &'static str, message: impl Into<String>) -> Diagnostic {
        Diagnostic::at(pos, Severity::Error, code, message)
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    /// `origin:line:column: severity CODE: message`
    pub fn render(&self, origin: &str) -> String {
        format!("{origin}:{self}")
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {} {}: {}",
            self.line, self.column, self.severity, self.code, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDocument {
    pub text: String,
    pub origin: String,
}

impl SourceDocument {
    pub fn new(text: impl Into<String>, origin: impl Into<String>) -> SourceDocument {
        SourceDocument {
            text: text.into(),
            origin: origin.into(),
        }
    }

    /// Decodes `bytes` as UTF-8. On failure the diagnostic points at the
    /// first invalid byte.
    pub fn from_bytes(bytes: &[u8], origin: impl Into<String>) -> Result<SourceDocument, Diagnostic> {
        match std::str::from_utf8(bytes) {
            Ok(text) => Ok(SourceDocument::new(text, origin)),
            Err(e) => {
                let valid = std::str::from_utf8(&bytes[..e.valid_up_to()]).expect("valid prefix");
                let line = valid.matches('\n').count() + 1;
                let column = valid.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
                Err(Diagnostic::error(
                    Pos { line, column },
                    "P000",
                    format!("invalid UTF-8 at byte offset {}", e.valid_up_to()),
                ))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseOutcome {
    /// Present iff no diagnostic is an error.
    pub graph: Option<InstanceGraph>,
    /// Sorted by (line, column).
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseOutcome {
    pub fn is_ok(&self) -> bool {
        self.graph.is_some()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.is_error())
    }
}

type Spanned = (String, Pos);

enum RawValue {
    Quoted(String),
    Bare(String),
}

enum Stmt {
    Entity {
        id: Spanned,
        kind: Spanned,
        attrs: Vec<(Spanned, RawValue, Pos)>,
    },
    Rel {
        name: Spanned,
        source: Spanned,
        target: Spanned,
    },
    Comp {
        parent: Spanned,
        child: Spanned,
    },
}

pub fn parse(source: &SourceDocument) -> ParseOutcome {
    parse_str(&source.text)
}

/// Decodes and parses raw bytes; invalid UTF-8 yields a lone `P000`.
pub fn parse_bytes(bytes: &[u8]) -> ParseOutcome {
    match SourceDocument::from_bytes(bytes, "") {
        Ok(doc) => parse(&doc),
        Err(d) => ParseOutcome {
            graph: None,
            diagnostics: vec![d],
        },
    }
}

pub fn parse_str(text: &str) -> ParseOutcome {
    let mut diagnostics = Vec::new();
    let statements = read_statements(text, &mut diagnostics);
    let graph = build(statements, &mut diagnostics);
    diagnostics.sort_by(|a, b| (a.line, a.column, a.code).cmp(&(b.line, b.column, b.code)));
    let failed = diagnostics.iter().any(Diagnostic::is_error);
    ParseOutcome {
        graph: (!failed).then_some(graph),
        diagnostics,
    }
}

fn read_statements(text: &str, diagnostics: &mut Vec<Diagnostic>) -> Vec<Stmt> {
    let mut cur = Cursor::new(text);
    let mut out = Vec::new();
    loop {
        cur.skip_trivia();
        if cur.at_eof() {
            return out;
        }
        match statement(&mut cur) {
            Ok(s) => out.push(s),
            Err(d) => {
                diagnostics.push(d);
                cur.recover();
            }
        }
    }
}

fn statement(cur: &mut Cursor) -> Result<Stmt, Diagnostic> {
    let Some((kw, pos)) = cur.ident() else {
        let c = cur.peek().unwrap_or(' ');
        return Err(Diagnostic::error(
            cur.pos(),
            "P008",
            format!("unexpected `{c}`, expected a statement"),
        ));
    };
    match kw.as_str() {
        "entity" => {
            let id = expect_ident(cur, "an entity id")?;
            expect_char(cur, ':')?;
            let kind = expect_ident(cur, "a term kind")?;
            expect_char(cur, '{')?;
            let open = cur.pos();
            let mut attrs = Vec::new();
            loop {
                cur.skip_trivia();
                match cur.peek() {
                    Some('}') => {
                        cur.bump();
                        break;
                    }
                    None => {
                        let brace = Pos {
                            column: open.column - 1,
                            ..open
                        };
                        return Err(Diagnostic::error(brace, "P008", "unclosed `{`"));
                    }
                    _ => {}
                }
                let key = expect_ident(cur, "an attribute name or `}`")?;
                expect_char(cur, '=')?;
                cur.skip_inline();
                let vpos = cur.pos();
                let value = if cur.peek() == Some('"') {
                    let (s, _) = cur.quoted().map_err(|(p, m)| Diagnostic::error(p, "P008", m))?;
                    RawValue::Quoted(s)
                } else {
                    let (s, _) = cur.bare_literal();
                    if s.is_empty() {
                        return Err(Diagnostic::error(
                            vpos,
                            "P006",
                            format!("attribute `{}` has no value", key.0),
                        ));
                    }
                    RawValue::Bare(s)
                };
                attrs.push((key, value, vpos));
            }
            Ok(Stmt::Entity { id, kind, attrs })
        }
        "rel" => {
            let name = expect_ident(cur, "a relationship name")?;
            let source = expect_ident(cur, "a source id")?;
            cur.skip_inline();
            if !cur.at_arrow() {
                return Err(unexpected(cur, "`->`"));
            }
            cur.bump();
            cur.bump();
            let target = expect_ident(cur, "a target id")?;
            Ok(Stmt::Rel { name, source, target })
        }
        "comp" => {
            let parent = expect_ident(cur, "a parent id")?;
            let kw = expect_ident(cur, "`contains`")?;
            if kw.0 != "contains" {
                return Err(Diagnostic::error(
                    kw.1,
                    "P008",
                    format!("expected `contains`, found `{}`", kw.0),
                ));
            }
            let child = expect_ident(cur, "a child id")?;
            Ok(Stmt::Comp { parent, child })
        }
        _ => Err(Diagnostic::error(
            pos,
            "P001",
            format!("unknown keyword `{kw}`, expected `entity`, `rel` or `comp`"),
        )),
    }
}

fn unexpected(cur: &Cursor, expected: &str) -> Diagnostic {
    let msg = match cur.peek() {
        Some('\n' | '\r') => format!("expected {expected}, found end of line"),
        Some(c) => format!("expected {expected}, found `{c}`"),
        None => format!("expected {expected}, found end of input"),
    };
    let mut pos = cur.pos();
    if cur.at_eof() && pos.column > 1 {
        pos.column -= 1;
    }
    Diagnostic::error(pos, "P008", msg)
}

fn expect_ident(cur: &mut Cursor, what: &str) -> Result<Spanned, Diagnostic> {
    cur.skip_inline();
    cur.ident().ok_or_else(|| unexpected(cur, what))
}

fn expect_char(cur: &mut Cursor, c: char) -> Result<(), Diagnostic> {
    cur.skip_inline();
    if cur.peek() == Some(c) {
        cur.bump();
        Ok(())
    } else {
        Err(unexpected(cur, &format!("`{c}`")))
    }
}

fn build(statements: Vec<Stmt>, diagnostics: &mut Vec<Diagnostic>) -> InstanceGraph {
    let schema = builtin_schema();
    let mut graph = InstanceGraph::new();
    // Ids declared with an unknown kind: referencing them is not a second error.
    let mut unresolved: BTreeSet<String> = BTreeSet::new();

    for stmt in &statements {
        let Stmt::Entity { id, kind, attrs } = stmt else {
            continue;
        };
        if graph.contains(&id.0) || unresolved.contains(&id.0) {
            diagnostics.push(Diagnostic::error(
                id.1,
                "P003",
                format!("duplicate entity id `{}`", id.0),
            ));
            continue;
        }
        let Ok(kind_val) = kind.0.parse::<TermKind>() else {
            diagnostics.push(Diagnostic::error(kind.1, "P002", format!("unknown term `{}`", kind.0)));
            unresolved.insert(id.0.clone());
            continue;
        };
        let mut attributes = Attributes::new();
        for ((key, kpos), raw, vpos) in attrs {
            if attributes.contains_key(key) {
                diagnostics.push(Diagnostic::error(
                    *kpos,
                    "P006",
                    format!("attribute `{key}` given twice"),
                ));
                continue;
            }
            let value = match raw {
                RawValue::Quoted(s) => Scalar::Text(s.clone()),
                RawValue::Bare(s) => match Scalar::parse_literal(s) {
                    Some(v) => v,
                    None => {
                        diagnostics.push(Diagnostic::error(
                            *vpos,
                            "P006",
                            format!("malformed value `{s}` for `{key}`: expected a quoted string, an ISO-8601 date or a number"),
                        ));
                        continue;
                    }
                },
            };
            if let Some(a) = schema.attribute(kind_val, key) {
                if !value.conforms_to(a.value_type) {
                    diagnostics.push(Diagnostic::at(
                        *vpos,
                        Severity::Warning,
                        "P006",
                        format!(
                            "`{key}` of {kind_val} expects {}, got {}",
                            a.value_type.name(),
                            value.type_name()
                        ),
                    ));
                }
            }
            attributes.insert(key.clone(), value);
        }
        if let Err(e) = graph.add_entity(&id.0, kind_val, attributes) {
            diagnostics.push(Diagnostic::error(id.1, "P008", e.to_string()));
        }
    }

    let resolve = |graph: &InstanceGraph, (id, pos): &Spanned, diagnostics: &mut Vec<Diagnostic>| {
        if graph.contains(id) {
            true
        } else {
            if !unresolved.contains(id) {
                diagnostics.push(Diagnostic::error(*pos, "P005", format!("undeclared entity `{id}`")));
            }
            false
        }
    };

    for stmt in &statements {
        match stmt {
            Stmt::Entity { .. } => {}
            Stmt::Rel { name, source, target } => {
                let rel = Relation::ALL.into_iter().find(|r| r.ident() == name.0);
                if rel.is_none() {
                    diagnostics.push(Diagnostic::error(
                        name.1,
                        "P004",
                        format!("unknown relationship `{}`", name.0),
                    ));
                }
                let ok_s = resolve(&graph, source, diagnostics);
                let ok_t = resolve(&graph, target, diagnostics);
                if let (Some(rel), true, true) = (rel, ok_s, ok_t) {
                    if let Err(e) = graph.add_relation(rel, &source.0, &target.0) {
                        diagnostics.push(Diagnostic::error(name.1, "P008", e.to_string()));
                    }
                }
            }
            Stmt::Comp { parent, child } => {
                let ok_p = resolve(&graph, parent, diagnostics);
                let ok_c = resolve(&graph, child, diagnostics);
                if ok_p && ok_c {
                    match graph.add_composition(&parent.0, &child.0) {
                        Ok(_) => {}
                        Err(e @ (GraphError::InvalidComposition { .. } | GraphError::CompositionCycle { .. })) => {
                            diagnostics.push(Diagnostic::error(child.1, "P007", e.to_string()));
                        }
                        Err(e) => diagnostics.push(Diagnostic::error(child.1, "P008", e.to_string())),
                    }
                }
            }
        }
    }
    graph
}
