//! Canonical structured-text form of an instance graph.
//!
//! ```text
//! procco-graph 1
//! entity t1 Task
//!   attr name text "Review design"
//!   attr start_date date "2024-03-01"
//! rel performs agent1 t1
//! comp a1 t1 taskPartOf
//! ```
//!
//! UTF-8, LF line endings, single spaces between fields. Entities come first
//! in id order, each followed by its indented `attr` lines in key order; then
//! `rel` lines ordered by (relation, source, target); then `comp` lines
//! ordered by (parent, child). Attribute values are always quoted.

use thiserror::Error;

use super::{Attributes, Flavor, GraphError, InstanceGraph, IsoDate, Number, Scalar};
use crate::schema::{Relation, TermKind};
use crate::text::{quote, tokenize_record, Field};

pub const CANONICAL_HEADER: &str = "procco-graph 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct CanonicalError {
    pub line: usize,
    pub message: String,
}

pub fn export_canonical(graph: &InstanceGraph) -> String {
    let mut out = String::new();
    out.push_str(CANONICAL_HEADER);
    out.push('\n');
    for e in graph.entities() {
        out.push_str(&format!("entity {} {}\n", e.id, e.kind));
        for (key, value) in &e.attributes {
            let (tag, text) = match value {
                Scalar::Text(s) => ("text", s.clone()),
                Scalar::Date(d) => ("date", d.as_str().to_string()),
                Scalar::Number(n) => ("number", n.to_string()),
            };
            out.push_str(&format!("  attr {key} {tag} {}\n", quote(&text)));
        }
    }
    for r in graph.relations() {
        out.push_str(&format!("rel {} {} {}\n", r.rel.ident(), r.source, r.target));
    }
    for c in graph.composition() {
        out.push_str(&format!("comp {} {} {}\n", c.parent, c.child, c.flavor));
    }
    out
}

pub fn import_canonical(text: &str) -> Result<InstanceGraph, CanonicalError> {
    let mut graph = InstanceGraph::new();
    let mut lines = text.split('\n').enumerate().map(|(i, l)| (i + 1, l)).peekable();

    match lines.next() {
        Some((_, CANONICAL_HEADER)) => {}
        _ => return Err(err(1, format!("expected header `{CANONICAL_HEADER}`"))),
    }

    // Entity being accumulated: (line, id, kind, attributes).
    let mut pending: Option<(usize, String, TermKind, Attributes)> = None;
    let mut section = 0u8;
    let mut last_rel: Option<(Relation, String, String)> = None;

    while let Some((line, raw)) = lines.next() {
        if raw.is_empty() {
            if lines.peek().is_none() {
                break;
            }
            return Err(err(line, "empty line"));
        }
        if raw.ends_with('\r') {
            return Err(err(line, "CR line ending"));
        }
        let (indent, fields) = tokenize_record(raw).map_err(|m| err(line, m))?;
        let strs: Vec<&str> = fields.iter().map(Field::as_str).collect();

        if indent == 2 && strs.first() == Some(&"attr") {
            let Some((_, _, _, attrs)) = pending.as_mut() else {
                return Err(err(line, "`attr` outside an entity group"));
            };
            let [Field::Bare(_), Field::Bare(key), Field::Bare(tag), Field::Quoted(value)] = fields.as_slice() else {
                return Err(err(line, "expected `  attr <key> <text|date|number> \"<value>\"`"));
            };
            let scalar = match tag.as_str() {
                "text" => Scalar::Text(value.clone()),
                "date" => {
                    Scalar::Date(IsoDate::parse(value).ok_or_else(|| err(line, format!("invalid date `{value}`")))?)
                }
                "number" => {
                    Scalar::Number(Number::parse(value).ok_or_else(|| err(line, format!("invalid number `{value}`")))?)
                }
                other => return Err(err(line, format!("unknown value type `{other}`"))),
            };
            if let Some(prev_key) = attrs.keys().next_back() {
                if prev_key.as_str() >= key.as_str() {
                    return Err(err(line, format!("attribute `{key}` out of order or repeated")));
                }
            }
            attrs.insert(key.clone(), scalar);
            continue;
        }
        if indent != 0 {
            return Err(err(line, "unexpected indentation"));
        }
        flush(&mut graph, &mut pending)?;

        let all_bare = fields.iter().all(|f| matches!(f, Field::Bare(_)));
        match strs.as_slice() {
            ["entity", id, kind] if all_bare => {
                if section > 0 {
                    return Err(err(line, "`entity` after edge records"));
                }
                if let Some(last) = graph.entities().last() {
                    if last.id.as_str() >= *id {
                        return Err(err(line, format!("entity `{id}` out of order or repeated")));
                    }
                }
                let kind: TermKind = kind.parse().map_err(|e| err(line, format!("{e}")))?;
                pending = Some((line, id.to_string(), kind, Attributes::new()));
            }
            ["rel", rel, source, target] if all_bare => {
                if section > 1 {
                    return Err(err(line, "`rel` after `comp` records"));
                }
                section = 1;
                let rel = Relation::ALL
                    .into_iter()
                    .find(|r| r.ident() == *rel)
                    .ok_or_else(|| err(line, format!("unknown relationship `{rel}`")))?;
                let key = (rel, source.to_string(), target.to_string());
                if last_rel.as_ref().is_some_and(|prev| *prev >= key) {
                    return Err(err(line, "`rel` record out of order or repeated"));
                }
                graph
                    .add_relation(rel, source, target)
                    .map_err(|e| graph_err(line, e))?;
                last_rel = Some(key);
            }
            ["comp", parent, child, flavor] if all_bare => {
                section = 2;
                let flavor =
                    Flavor::from_name(flavor).ok_or_else(|| err(line, format!("unknown flavor `{flavor}`")))?;
                if let Some(last) = graph.composition().last() {
                    if (last.parent.as_str(), last.child.as_str()) >= (*parent, *child) {
                        return Err(err(line, "`comp` record out of order or repeated"));
                    }
                }
                let inferred = graph.add_composition(parent, child).map_err(|e| graph_err(line, e))?;
                if inferred != flavor {
                    return Err(err(
                        line,
                        format!("flavor `{flavor}` does not match endpoint kinds (expected `{inferred}`)"),
                    ));
                }
            }
            _ => return Err(err(line, format!("malformed record `{raw}`"))),
        }
    }
    flush(&mut graph, &mut pending)?;
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(err(text.split('\n').count(), "missing final newline"));
    }
    Ok(graph)
}

fn flush(
    graph: &mut InstanceGraph,
    pending: &mut Option<(usize, String, TermKind, Attributes)>,
) -> Result<(), CanonicalError> {
    if let Some((line, id, kind, attrs)) = pending.take() {
        graph.add_entity(&id, kind, attrs).map_err(|e| graph_err(line, e))?;
    }
    Ok(())
}

fn err(line: usize, message: impl Into<String>) -> CanonicalError {
    CanonicalError {
        line,
        message: message.into(),
    }
}

fn graph_err(line: usize, e: GraphError) -> CanonicalError {
    err(line, e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> InstanceGraph {
        let mut g = InstanceGraph::new();
        let mut a = Attributes::new();
        a.insert("name".into(), Scalar::text("Build \"it\"\nnow"));
        a.insert(
            "start_date".into(),
            Scalar::parse_literal("2024-03-01T09:30:00Z").unwrap(),
        );
        g.add_entity("wp1", TermKind::WorkProcess, a).unwrap();
        g.add_entity("a1", TermKind::Activity, Attributes::new()).unwrap();
        g.add_entity("t1", TermKind::Task, Attributes::new()).unwrap();
        let mut o = Attributes::new();
        o.insert("value".into(), Scalar::parse_literal("-12.5").unwrap());
        g.add_entity("out1", TermKind::Outcome, o).unwrap();
        g.add_entity("ag1", TermKind::HumanAgent, Attributes::new()).unwrap();
        g.add_composition("wp1", "a1").unwrap();
        g.add_composition("a1", "t1").unwrap();
        g.add_relation(Relation::Produces, "t1", "out1").unwrap();
        g.add_relation(Relation::Performs, "ag1", "t1").unwrap();
        g
    }

    #[test]
    fn empty_graph() {
        let g = InstanceGraph::new();
        assert_eq!(export_canonical(&g), "procco-graph 1\n");
        assert_eq!(import_canonical("procco-graph 1\n").unwrap(), g);
    }

    #[test]
    fn round_trip_and_determinism() {
        let g = fixture();
        let text = export_canonical(&g);
        assert_eq!(text, export_canonical(&g));
        assert_eq!(import_canonical(&text).unwrap(), g);
        assert_eq!(
            text,
            "procco-graph 1\n\
             entity a1 Activity\n\
             entity ag1 HumanAgent\n\
             entity out1 Outcome\n\
             \x20 attr value number \"-12.5\"\n\
             entity t1 Task\n\
             entity wp1 WorkProcess\n\
             \x20 attr name text \"Build \\\"it\\\"\\nnow\"\n\
             \x20 attr start_date date \"2024-03-01T09:30:00Z\"\n\
             rel performs ag1 t1\n\
             rel produces t1 out1\n\
             comp a1 t1 taskPartOf\n\
             comp wp1 a1 activityPartOf\n"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("procco-graph 2\n", 1),
            ("procco-graph 1\nentity t1 Tsak\n", 2),
            ("procco-graph 1\nentity t1 Task\n  attr name text bare\n", 3),
            ("procco-graph 1\n  attr name text \"x\"\n", 2),
            ("procco-graph 1\nentity b Task\nentity a Task\n", 3),
            ("procco-graph 1\nentity a Task\nrel performs a ghost\n", 3),
            (
                "procco-graph 1\nentity a Task\nentity b Activity\ncomp b a subActivityOf\n",
                4,
            ),
            (
                "procco-graph 1\nentity a Task\nentity b Activity\ncomp a b taskPartOf\n",
                4,
            ),
            ("procco-graph 1\nentity a Task\n\nentity b Task\n", 3),
            ("procco-graph 1\nentity a Task", 2),
            (
                "procco-graph 1\nentity a Task\n  attr start_date date \"tomorrow\"\n",
                3,
            ),
            (
                "procco-graph 1\nentity a Task\n  attr name text \"x\"\n  attr name text \"y\"\n",
                4,
            ),
        ];
        for (text, line) in cases {
            let e = import_canonical(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }
}
