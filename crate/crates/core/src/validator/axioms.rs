use crate::graph::FrozenGraph;
use crate::query::{find_witness, AxiomReading};
use crate::schema::AxiomId;

use super::{Finding, Severity};

/// Direct-reading [`check_axiom_with`].
pub fn check_axiom(graph: &FrozenGraph, axiom: AxiomId) -> Vec<Finding> {
    check_axiom_with(graph, axiom, AxiomReading::Direct)
}

/// One finding per binding `(x, y)` with `rel(x, y)` that no part of `x`
/// echoes. Walks the edge index instead of enumerating bindings.
pub fn check_axiom_with(graph: &FrozenGraph, axiom: AxiomId, reading: AxiomReading) -> Vec<Finding> {
    let rel = axiom.relation();
    let mut out = Vec::new();
    for x in graph.entities().filter(|e| e.kind.is_subkind_of(axiom.composite())) {
        for y in graph.targets(rel, &x.id) {
            let object_ok = graph
                .kind_of(y.as_str())
                .is_some_and(|k| k.is_subkind_of(axiom.object()));
            if object_ok && find_witness(graph, axiom, x.id.as_str(), y, reading).is_none() {
                out.push(axiom_finding(axiom, &x.id, y));
            }
        }
    }
    out
}

pub(super) fn axiom_finding(axiom: AxiomId, x: &crate::graph::EntityId, y: &crate::graph::EntityId) -> Finding {
    let rel = axiom.relation();
    Finding::new(
        axiom.name(),
        Severity::Error,
        vec![x.clone(), y.clone()],
        format!("{x} {rel} {y} but none of its parts does ({})", axiom.description()),
    )
}
