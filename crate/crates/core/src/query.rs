//! Read-only closure and witness queries over frozen graphs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{EntityId, FrozenGraph};
use crate::schema::{AxiomId, Relation, TermKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("missing entity `{0}`")]
    MissingEntity(String),
    #[error("entity `{id}` is a {kind}, expected a {expected}")]
    WrongKind {
        id: String,
        kind: TermKind,
        expected: TermKind,
    },
    #[error("closure is defined for consumes, produces and involves, not `{0}`")]
    UnsupportedRelation(Relation),
    #[error("axiom {axiom} binds 2 subjects, got {got}")]
    Arity { axiom: AxiomId, got: usize },
}

/// How the axioms' sub-process / part-of literals are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AxiomReading {
    /// One composition step.
    #[default]
    Direct,
    /// Any number of composition steps.
    Transitive,
}

/// Outcome of searching for the part that discharges an axiom's existential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub satisfied: bool,
    pub witness: Option<EntityId>,
}

impl WitnessResult {
    fn from(witness: Option<EntityId>) -> WitnessResult {
        WitnessResult {
            satisfied: witness.is_some(),
            witness,
        }
    }
}

fn record_kind(graph: &FrozenGraph, id: &str) -> Result<TermKind, QueryError> {
    graph
        .kind_of(id)
        .ok_or_else(|| QueryError::MissingEntity(id.to_string()))
}

/// Parts of `id` in id order, either the direct layer or the full transitive
/// closure. The entity itself is never included.
pub fn descendants(graph: &FrozenGraph, id: &str, transitive: bool) -> Result<Vec<EntityId>, QueryError> {
    record_kind(graph, id)?;
    Ok(descendant_set(graph, id, transitive).into_iter().collect())
}

pub(crate) fn descendant_set(graph: &FrozenGraph, id: &str, transitive: bool) -> BTreeSet<EntityId> {
    let mut found = BTreeSet::new();
    let mut frontier: Vec<&EntityId> = graph.children(id).iter().map(|(c, _)| c).collect();
    while let Some(next) = frontier.pop() {
        if found.insert(next.clone()) && transitive {
            frontier.extend(graph.children(next.as_str()).iter().map(|(c, _)| c));
        }
    }
    found
}

/// Targets of `rel` on `id` and on all of its transitive parts.
pub fn closure(graph: &FrozenGraph, id: &str, rel: Relation) -> Result<BTreeSet<EntityId>, QueryError> {
    if !matches!(rel, Relation::Consumes | Relation::Produces | Relation::Involves) {
        return Err(QueryError::UnsupportedRelation(rel));
    }
    let kind = record_kind(graph, id)?;
    if !kind.is_subkind_of(TermKind::WorkEntity) {
        return Err(QueryError::WrongKind {
            id: id.to_string(),
            kind,
            expected: TermKind::WorkEntity,
        });
    }
    let root = graph.entity(id).map(|e| e.id.clone()).expect("checked above");
    let mut out: BTreeSet<EntityId> = graph.targets(rel, &root).cloned().collect();
    for d in descendant_set(graph, id, true) {
        out.extend(graph.targets(rel, &d).cloned());
    }
    Ok(out)
}

/// Direct-reading [`axiom_witness_with`].
pub fn axiom_witness<S: AsRef<str>>(
    graph: &FrozenGraph,
    axiom: AxiomId,
    subjects: &[S],
) -> Result<WitnessResult, QueryError> {
    axiom_witness_with(graph, axiom, subjects, AxiomReading::Direct)
}

/// Looks for the part of `subjects[0]` that carries the same edge to
/// `subjects[1]`. Ties go to the smallest id.
///
/// Only the existential is evaluated; whether `rel(subjects[0],
/// subjects[1])` itself holds is not checked here.
pub fn axiom_witness_with<S: AsRef<str>>(
    graph: &FrozenGraph,
    axiom: AxiomId,
    subjects: &[S],
    reading: AxiomReading,
) -> Result<WitnessResult, QueryError> {
    let [composite, object] = subjects else {
        return Err(QueryError::Arity {
            axiom,
            got: subjects.len(),
        });
    };
    let (composite, object) = (composite.as_ref(), object.as_ref());
    for (id, expected) in [(composite, axiom.composite()), (object, axiom.object())] {
        let kind = record_kind(graph, id)?;
        if !kind.is_subkind_of(expected) {
            return Err(QueryError::WrongKind {
                id: id.to_string(),
                kind,
                expected,
            });
        }
    }
    let object = &graph.entity(object).expect("checked above").id;
    Ok(WitnessResult::from(find_witness(
        graph, axiom, composite, object, reading,
    )))
}

/// Unchecked witness search shared with the axiom checker.
pub(crate) fn find_witness(
    graph: &FrozenGraph,
    axiom: AxiomId,
    composite: &str,
    object: &EntityId,
    reading: AxiomReading,
) -> Option<EntityId> {
    let eligible = |id: &EntityId| {
        graph
            .kind_of(id.as_str())
            .is_some_and(|k| k.is_subkind_of(axiom.composite()) || k.is_subkind_of(axiom.part()))
    };
    let carries = |id: &EntityId| graph.has_edge(axiom.relation(), id, object);
    match reading {
        AxiomReading::Direct => graph
            .children(composite)
            .iter()
            .map(|(c, _)| c)
            .find(|c| eligible(c) && carries(c))
            .cloned(),
        AxiomReading::Transitive => descendant_set(graph, composite, true)
            .into_iter()
            .find(|c| eligible(c) && carries(c)),
    }
}
