use crate::graph::FrozenGraph;
use crate::schema::{builtin_schema, Multiplicity, PartitionSet, Relation, TermKind};

use super::{Finding, Mode, Severity};

/// One `T001` per relationship edge whose endpoints fall outside the
/// relationship's domain or range.
pub fn check_types(graph: &FrozenGraph) -> Vec<Finding> {
    let mut out = Vec::new();
    for edge in graph.relations() {
        let schema = edge.rel.schema();
        let kind = |id: &str| graph.kind_of(id).expect("edges reference existing entities");
        let (sk, tk) = (kind(edge.source.as_str()), kind(edge.target.as_str()));
        let mut problems = Vec::new();
        if !sk.is_subkind_of(schema.source_kind) {
            problems.push(format!(
                "source {} is a {sk}, not a {}",
                edge.source, schema.source_kind
            ));
        }
        if !tk.is_subkind_of(schema.target_kind) {
            problems.push(format!(
                "target {} is a {tk}, not a {}",
                edge.target, schema.target_kind
            ));
        }
        if !problems.is_empty() {
            out.push(Finding::new(
                "T001",
                Severity::Error,
                vec![edge.source.clone(), edge.target.clone()],
                format!("`{}` edge: {}", edge.rel, problems.join("; ")),
            ));
        }
    }
    out
}

/// `T002` for attributes the entity's kind does not define, `T003` for
/// values of the wrong type.
pub fn check_attributes(graph: &FrozenGraph) -> Vec<Finding> {
    let schema = builtin_schema();
    let mut out = Vec::new();
    for e in graph.entities() {
        for (key, value) in &e.attributes {
            match schema.attribute(e.kind, key) {
                None => out.push(Finding::new(
                    "T002",
                    Severity::Warning,
                    vec![e.id.clone()],
                    format!("attribute `{key}` is not defined for {}", e.kind),
                )),
                Some(attr) if !value.conforms_to(attr.value_type) => out.push(Finding::new(
                    "T003",
                    Severity::Warning,
                    vec![e.id.clone()],
                    format!(
                        "attribute `{key}` expects {}, found {}",
                        attr.value_type.name(),
                        value.type_name()
                    ),
                )),
                Some(_) => {}
            }
        }
    }
    out
}

/// Target multiplicity as enforced in `mode`. In lenient mode "is required
/// by" follows its definition (a Tool is required by none or several
/// Methods) instead of the matrix card `1..*`.
pub(crate) fn effective_target_mult(rel: Relation, mode: Mode) -> Multiplicity {
    match (rel, mode) {
        (Relation::IsRequiredBy, Mode::Lenient) => Multiplicity::ANY,
        _ => rel.schema().target_mult,
    }
}

/// Counts conforming partners at both ends of every relationship. Only
/// edges whose endpoints conform are counted; the rest are `T001`s.
pub fn check_multiplicities(graph: &FrozenGraph, mode: Mode) -> Vec<Finding> {
    let mut out = Vec::new();
    let lower_sev = Severity::for_lower_bound(mode);
    for rel in Relation::ALL {
        let schema = rel.schema();
        let conforms = |id: &crate::graph::EntityId, kind: TermKind| {
            graph.kind_of(id.as_str()).is_some_and(|k| k.is_subkind_of(kind))
        };
        let target_mult = effective_target_mult(rel, mode);
        for e in graph.entities().filter(|e| e.kind.is_subkind_of(schema.source_kind)) {
            let n = graph
                .targets(rel, &e.id)
                .filter(|t| conforms(t, schema.target_kind))
                .count() as u32;
            if let Some(f) = bound_finding(&e.id, rel, n, target_mult, "target", lower_sev, ("M001", "M002")) {
                out.push(f);
            }
        }
        for e in graph.entities().filter(|e| e.kind.is_subkind_of(schema.target_kind)) {
            let n = graph
                .sources(rel, &e.id)
                .filter(|s| conforms(s, schema.source_kind))
                .count() as u32;
            if let Some(f) = bound_finding(&e.id, rel, n, schema.source_mult, "source", lower_sev, ("M003", "M004")) {
                out.push(f);
            }
        }
    }
    out
}

fn bound_finding(
    id: &crate::graph::EntityId,
    rel: Relation,
    n: u32,
    mult: Multiplicity,
    end: &str,
    lower_sev: Severity,
    (upper_code, lower_code): (&'static str, &'static str),
) -> Option<Finding> {
    let plural = if n == 1 { "" } else { "s" };
    if mult.upper.is_some_and(|u| n > u) {
        Some(Finding::new(
            upper_code,
            Severity::Error,
            vec![id.clone()],
            format!(
                "{id} has {n} `{rel}` {end}{plural}; at most {} allowed ({mult})",
                mult.upper.unwrap_or_default()
            ),
        ))
    } else if n < mult.lower {
        Some(Finding::new(
            lower_code,
            lower_sev,
            vec![id.clone()],
            format!(
                "{id} has {n} `{rel}` {end}{plural}; at least {} required ({mult})",
                mult.lower
            ),
        ))
    } else {
        None
    }
}

/// `P001` for every instance whose kind heads a complete partition.
///
/// Disjointness needs no instance check: every entity has exactly one kind
/// and the taxonomy is a forest, so it lies under at most one child of any
/// partition.
pub fn check_partitions(graph: &FrozenGraph, partitions: &PartitionSet) -> Vec<Finding> {
    let mut out = Vec::new();
    for e in graph.entities() {
        if partitions.is_abstract(e.kind) {
            let p = partitions.get(e.kind).expect("abstract kinds head a partition");
            let children: Vec<&str> = p.children.iter().map(|c| c.name()).collect();
            out.push(Finding::new(
                "P001",
                Severity::Error,
                vec![e.id.clone()],
                format!(
                    "{} is {}: instantiate one of {}",
                    e.kind,
                    p.labels(),
                    children.join(", ")
                ),
            ));
        }
        for p in partitions.iter().filter(|p| p.disjoint) {
            debug_assert!(p.children.iter().filter(|c| e.kind.is_subkind_of(**c)).count() <= 1);
        }
    }
    out
}

/// `C001` for composites without parts, `C002` (strict only) for parts with
/// more than one container.
pub fn check_composition(graph: &FrozenGraph, mode: Mode) -> Vec<Finding> {
    let mut out = Vec::new();
    for e in graph.entities() {
        let children = graph.children(e.id.as_str());
        debug_assert!(children
            .iter()
            .all(|(c, f)| crate::graph::Flavor::infer(e.kind, graph.kind_of(c.as_str()).unwrap()) == Some(*f)));
        let needs_parts = match e.kind {
            TermKind::WorkProcess => Some("sub-processes or Activities"),
            TermKind::Activity => Some("sub-activities or Tasks"),
            _ => None,
        };
        if let (Some(parts), true) = (needs_parts, children.is_empty()) {
            out.push(Finding::new(
                "C001",
                Severity::for_lower_bound(mode),
                vec![e.id.clone()],
                format!("{} {} has no {parts}", e.kind, e.id),
            ));
        }
        let parents = graph.parents(e.id.as_str());
        if mode == Mode::Strict && parents.len() > 1 {
            let names: Vec<&str> = parents.iter().map(|(p, _)| p.as_str()).collect();
            out.push(Finding::new(
                "C002",
                Severity::Warning,
                vec![e.id.clone()],
                format!(
                    "{} is a part of {} containers: {}",
                    e.id,
                    parents.len(),
                    names.join(", ")
                ),
            ));
        }
    }
    out
}
