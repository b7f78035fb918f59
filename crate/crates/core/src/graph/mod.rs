//! Concrete process-model instances: entities with attribute values,
//! relationship edges and the work-breakdown composition hierarchy.
//!
//! [`InstanceGraph`] is the mutable builder. Referential integrity and
//! composition acyclicity are enforced on every insertion; endpoint-kind
//! conformance of relationship edges is left to the validator so that one
//! run can report every problem. [`FrozenGraph`] is the read-only form that
//! validation and queries operate on.

mod canonical;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

use crate::schema::{Relation, SchemaError, TermKind, ValueType};
use crate::text::is_identifier;

pub use canonical::{export_canonical, import_canonical, CanonicalError, CANONICAL_HEADER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid entity id `{0}`: ids must match [A-Za-z_][A-Za-z0-9_.-]*")]
    InvalidEntityId(String),
    #[error("invalid attribute key `{0}`: keys must match [A-Za-z_][A-Za-z0-9_.-]*")]
    InvalidAttributeKey(String),
    #[error("duplicate entity `{0}`")]
    DuplicateEntity(EntityId),
    #[error("missing entity `{0}`")]
    MissingEntity(String),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error("invalid composition: {parent} ({parent_kind}) cannot contain {child} ({child_kind}); {reason}")]
    InvalidComposition {
        parent: EntityId,
        parent_kind: TermKind,
        child: EntityId,
        child_kind: TermKind,
        reason: &'static str,
    },
    #[error("composition cycle: {child} already contains {parent}")]
    CompositionCycle { parent: EntityId, child: EntityId },
}

/// Identifier of an entity, unique within a graph. Case-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityId(String);

impl EntityId {
    pub fn new(id: impl Into<String>) -> Result<EntityId, GraphError> {
        let id = id.into();
        if is_identifier(&id) {
            Ok(EntityId(id))
        } else {
            Err(GraphError::InvalidEntityId(id))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for EntityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::borrow::Borrow<str> for EntityId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for EntityId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// An ISO-8601 date (`2024-03-01`) or date-time (`2024-03-01T09:30:00Z`),
/// kept verbatim.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoDate(String);

impl IsoDate {
    pub fn parse(s: &str) -> Option<IsoDate> {
        use chrono::{DateTime, NaiveDate, NaiveDateTime};
        let ok = NaiveDate::parse_from_str(s, "%Y-%m-%d").is_ok()
            || DateTime::parse_from_rfc3339(s).is_ok()
            || NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S%.f").is_ok()
            || NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M").is_ok();
        // chrono accepts some non-ISO shapes (e.g. one-digit months).
        let shaped = s.len() >= 10 && s.as_bytes()[4] == b'-' && s.as_bytes()[7] == b'-';
        (ok && shaped).then(|| IsoDate(s.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// A finite decimal number.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Number(f64);

impl Number {
    pub fn new(value: f64) -> Option<Number> {
        value.is_finite().then_some(Number(value))
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Parses `-?digits(.digits)?([eE][+-]?digits)?`.
    pub fn parse(s: &str) -> Option<Number> {
        let b = s.as_bytes();
        let mut i = usize::from(b.first() == Some(&b'-'));
        let digits = |i: &mut usize| {
            let start = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            *i > start
        };
        if !digits(&mut i) {
            return None;
        }
        if b.get(i) == Some(&b'.') {
            i += 1;
            if !digits(&mut i) {
                return None;
            }
        }
        if matches!(b.get(i), Some(b'e' | b'E')) {
            i += 1;
            if matches!(b.get(i), Some(b'+' | b'-')) {
                i += 1;
            }
            if !digits(&mut i) {
                return None;
            }
        }
        if i != b.len() {
            return None;
        }
        s.parse::<f64>().ok().and_then(Number::new)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Rust's float Display is the shortest string that round-trips.
        write!(f, "{}", self.0)
    }
}

/// An attribute value.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Text(String),
    Date(IsoDate),
    Number(Number),
}

impl Scalar {
    pub fn text(s: impl Into<String>) -> Scalar {
        Scalar::Text(s.into())
    }

    /// Classifies an unquoted literal: date first, then number.
    pub fn parse_literal(s: &str) -> Option<Scalar> {
        IsoDate::parse(s)
            .map(Scalar::Date)
            .or_else(|| Number::parse(s).map(Scalar::Number))
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Scalar::Text(_) => "text",
            Scalar::Date(_) => "date",
            Scalar::Number(_) => "number",
        }
    }

    pub fn conforms_to(&self, ty: ValueType) -> bool {
        matches!(
            (self, ty),
            (Scalar::Text(_), ValueType::Text | ValueType::NumberOrText)
                | (Scalar::Number(_), ValueType::NumberOrText)
                | (Scalar::Date(_), ValueType::Date)
        )
    }
}

pub type Attributes = BTreeMap<String, Scalar>;

#[derive(Debug, Clone, PartialEq)]
pub struct EntityRecord {
    pub id: EntityId,
    pub kind: TermKind,
    pub attributes: Attributes,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationEdge {
    pub rel: Relation,
    pub source: EntityId,
    pub target: EntityId,
}

/// How a composition edge reads in the axioms; fixed by the endpoint kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    SubProcessOf,
    ActivityPartOf,
    SubActivityOf,
    TaskPartOf,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [
        Flavor::SubProcessOf,
        Flavor::ActivityPartOf,
        Flavor::SubActivityOf,
        Flavor::TaskPartOf,
    ];

    pub fn infer(parent: TermKind, child: TermKind) -> Option<Flavor> {
        use TermKind::*;
        match (parent, child) {
            (WorkProcess, WorkProcess) => Some(Flavor::SubProcessOf),
            (WorkProcess, Activity) => Some(Flavor::ActivityPartOf),
            (Activity, Activity) => Some(Flavor::SubActivityOf),
            (Activity, Task) => Some(Flavor::TaskPartOf),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::SubProcessOf => "subProcessOf",
            Flavor::ActivityPartOf => "activityPartOf",
            Flavor::SubActivityOf => "subActivityOf",
            Flavor::TaskPartOf => "taskPartOf",
        }
    }

    pub fn from_name(s: &str) -> Option<Flavor> {
        Flavor::ALL.into_iter().find(|f| f.name() == s)
    }

    /// True for the `partOf` flavors (a part one granularity level down).
    pub fn is_part_of(self) -> bool {
        matches!(self, Flavor::ActivityPartOf | Flavor::TaskPartOf)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompositionEdge {
    pub parent: EntityId,
    pub child: EntityId,
    pub flavor: Flavor,
}

/// A mutable process-model instance.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct InstanceGraph {
    entities: BTreeMap<EntityId, EntityRecord>,
    relations: BTreeSet<RelationEdge>,
    composition: BTreeSet<CompositionEdge>,
}

impl InstanceGraph {
    pub fn new() -> InstanceGraph {
        InstanceGraph::default()
    }

    pub fn add_entity(
        &mut self,
        id: &str,
        kind: TermKind,
        attributes: Attributes,
    ) -> Result<&EntityRecord, GraphError> {
        let id = EntityId::new(id)?;
        if let Some(bad) = attributes.keys().find(|k| !is_identifier(k)) {
            return Err(GraphError::InvalidAttributeKey(bad.clone()));
        }
        if self.entities.contains_key(&id) {
            return Err(GraphError::DuplicateEntity(id));
        }
        let record = EntityRecord {
            id: id.clone(),
            kind,
            attributes,
        };
        Ok(self.entities.entry(id).or_insert(record))
    }

    /// Like [`Self::add_entity`] with the kind given by name.
    pub fn add_entity_named(
        &mut self,
        id: &str,
        kind: &str,
        attributes: Attributes,
    ) -> Result<&EntityRecord, GraphError> {
        let kind: TermKind = kind.parse()?;
        self.add_entity(id, kind, attributes)
    }

    /// Adds `rel(source, target)`. Returns `false` if the identical edge was
    /// already present.
    pub fn add_relation(&mut self, rel: Relation, source: &str, target: &str) -> Result<bool, GraphError> {
        let source = self.resolve(source)?;
        let target = self.resolve(target)?;
        Ok(self.relations.insert(RelationEdge { rel, source, target }))
    }

    pub fn add_relation_named(&mut self, rel: &str, source: &str, target: &str) -> Result<bool, GraphError> {
        let rel = Relation::from_name(rel)?;
        self.add_relation(rel, source, target)
    }

    /// Makes `child` a direct part of `parent`, inferring the edge flavor.
    pub fn add_composition(&mut self, parent: &str, child: &str) -> Result<Flavor, GraphError> {
        let parent_rec = self
            .entities
            .get(parent)
            .ok_or_else(|| GraphError::MissingEntity(parent.to_string()))?;
        let child_rec = self
            .entities
            .get(child)
            .ok_or_else(|| GraphError::MissingEntity(child.to_string()))?;
        let flavor = Flavor::infer(parent_rec.kind, child_rec.kind).ok_or_else(|| {
            let reason = match parent_rec.kind {
                TermKind::Task => "a Task is atomic and cannot be decomposed",
                TermKind::WorkProcess => "a Work Process contains only sub-processes and Activities",
                TermKind::Activity => "an Activity contains only sub-activities and Tasks",
                _ => "only Work Processes and Activities have parts",
            };
            GraphError::InvalidComposition {
                parent: parent_rec.id.clone(),
                parent_kind: parent_rec.kind,
                child: child_rec.id.clone(),
                child_kind: child_rec.kind,
                reason,
            }
        })?;
        let (parent, child) = (parent_rec.id.clone(), child_rec.id.clone());
        if self.reaches(&child, &parent) {
            return Err(GraphError::CompositionCycle { parent, child });
        }
        self.composition.insert(CompositionEdge { parent, child, flavor });
        Ok(flavor)
    }

    fn resolve(&self, id: &str) -> Result<EntityId, GraphError> {
        self.entities
            .get_key_value(id)
            .map(|(k, _)| k.clone())
            .ok_or_else(|| GraphError::MissingEntity(id.to_string()))
    }

    /// True iff `to` is `from` or a transitive part of it.
    fn reaches(&self, from: &EntityId, to: &EntityId) -> bool {
        let mut stack = vec![from];
        let mut seen = BTreeSet::new();
        while let Some(cur) = stack.pop() {
            if cur == to {
                return true;
            }
            if seen.insert(cur) {
                stack.extend(self.direct_children(cur));
            }
        }
        false
    }

    fn direct_children<'a>(&'a self, parent: &'a EntityId) -> impl Iterator<Item = &'a EntityId> + 'a {
        self.composition
            .iter()
            .skip_while(move |e| &e.parent < parent)
            .take_while(move |e| &e.parent == parent)
            .map(|e| &e.child)
    }

    pub fn entity(&self, id: &str) -> Option<&EntityRecord> {
        self.entities.get(id)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.entities.contains_key(id)
    }

    /// Entities in id order.
    pub fn entities(&self) -> impl ExactSizeIterator<Item = &EntityRecord> {
        self.entities.values()
    }

    /// Relationship edges in (relation, source, target) order.
    pub fn relations(&self) -> impl ExactSizeIterator<Item = &RelationEdge> {
        self.relations.iter()
    }

    /// Composition edges in (parent, child) order.
    pub fn composition(&self) -> impl ExactSizeIterator<Item = &CompositionEdge> {
        self.composition.iter()
    }

    pub fn entity_count(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    pub fn freeze(self) -> FrozenGraph {
        FrozenGraph::new(self)
    }
}

#[derive(Debug, Default)]
struct Indexes {
    out: BTreeMap<(Relation, EntityId), BTreeSet<EntityId>>,
    incoming: BTreeMap<(Relation, EntityId), BTreeSet<EntityId>>,
    children: BTreeMap<EntityId, Vec<(EntityId, Flavor)>>,
    parents: BTreeMap<EntityId, Vec<(EntityId, Flavor)>>,
}

/// Read-only, cheaply clonable view of a graph with lookup indexes. Safe to
/// share across threads.
#[derive(Debug, Clone)]
pub struct FrozenGraph {
    inner: Arc<(InstanceGraph, Indexes)>,
}

impl FrozenGraph {
    pub fn new(graph: InstanceGraph) -> FrozenGraph {
        let mut idx = Indexes::default();
        for e in &graph.relations {
            idx.out
                .entry((e.rel, e.source.clone()))
                .or_default()
                .insert(e.target.clone());
            idx.incoming
                .entry((e.rel, e.target.clone()))
                .or_default()
                .insert(e.source.clone());
        }
        for c in &graph.composition {
            idx.children
                .entry(c.parent.clone())
                .or_default()
                .push((c.child.clone(), c.flavor));
            idx.parents
                .entry(c.child.clone())
                .or_default()
                .push((c.parent.clone(), c.flavor));
        }
        FrozenGraph {
            inner: Arc::new((graph, idx)),
        }
    }

    pub fn graph(&self) -> &InstanceGraph {
        &self.inner.0
    }

    fn idx(&self) -> &Indexes {
        &self.inner.1
    }

    pub fn kind_of(&self, id: &str) -> Option<TermKind> {
        self.entity(id).map(|e| e.kind)
    }

    /// Targets of `rel` edges leaving `source`, in id order.
    pub fn targets(&self, rel: Relation, source: &EntityId) -> impl Iterator<Item = &EntityId> {
        self.idx().out.get(&(rel, source.clone())).into_iter().flatten()
    }

    /// Sources of `rel` edges entering `target`, in id order.
    pub fn sources(&self, rel: Relation, target: &EntityId) -> impl Iterator<Item = &EntityId> {
        self.idx().incoming.get(&(rel, target.clone())).into_iter().flatten()
    }

    pub fn has_edge(&self, rel: Relation, source: &EntityId, target: &EntityId) -> bool {
        self.idx()
            .out
            .get(&(rel, source.clone()))
            .is_some_and(|t| t.contains(target))
    }

    /// Direct parts of `parent` with their flavors, in child-id order.
    pub fn children(&self, parent: &str) -> &[(EntityId, Flavor)] {
        self.idx().children.get(parent).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Direct containers of `child`, in parent-id order.
    pub fn parents(&self, child: &str) -> &[(EntityId, Flavor)] {
        self.idx().parents.get(child).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn into_graph(self) -> InstanceGraph {
        match Arc::try_unwrap(self.inner) {
            Ok((g, _)) => g,
            Err(shared) => shared.0.clone(),
        }
    }
}

impl Deref for FrozenGraph {
    type Target = InstanceGraph;

    fn deref(&self) -> &InstanceGraph {
        self.graph()
    }
}

impl PartialEq for FrozenGraph {
    fn eq(&self, other: &Self) -> bool {
        self.graph() == other.graph()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn attrs(pairs: &[(&str, &str)]) -> Attributes {
        pairs.iter().map(|(k, v)| (k.to_string(), Scalar::text(*v))).collect()
    }

    #[test]
    fn add_entity_examples() {
        let mut g = InstanceGraph::new();
        g.add_entity("t1", TermKind::Task, attrs(&[("name", "Review design")]))
            .unwrap();
        assert_eq!(g.entity_count(), 1);
        assert_eq!(
            g.add_entity("t1", TermKind::Task, Attributes::new()).unwrap_err(),
            GraphError::DuplicateEntity(EntityId::new("t1").unwrap())
        );
        assert_eq!(
            g.add_entity_named("x", "Workflow", Attributes::new()).unwrap_err(),
            GraphError::Schema(SchemaError::InvalidTerm("Workflow".into()))
        );
        assert!(matches!(
            g.add_entity(" x", TermKind::Task, Attributes::new()),
            Err(GraphError::InvalidEntityId(_))
        ));
        assert!(matches!(
            g.add_entity("y", TermKind::Task, attrs(&[("start date", "x")])),
            Err(GraphError::InvalidAttributeKey(_))
        ));
    }

    #[test]
    fn unknown_attributes_are_stored() {
        let mut g = InstanceGraph::new();
        g.add_entity("t1", TermKind::Task, attrs(&[("colour", "red")])).unwrap();
        assert!(g.entity("t1").unwrap().attributes.contains_key("colour"));
    }

    #[test]
    fn add_relation_examples() {
        let mut g = InstanceGraph::new();
        g.add_entity("agent1", TermKind::HumanAgent, Attributes::new()).unwrap();
        g.add_entity("t1", TermKind::Task, Attributes::new()).unwrap();
        g.add_entity("wp1", TermKind::WorkProcess, Attributes::new()).unwrap();
        assert!(g.add_relation_named("performs", "agent1", "t1").unwrap());
        assert!(!g.add_relation_named("performs", "agent1", "t1").unwrap());
        assert_eq!(g.relations().len(), 1);
        assert!(matches!(
            g.add_relation_named("perform", "agent1", "t1"),
            Err(GraphError::Schema(SchemaError::InvalidRelationship { .. }))
        ));
        assert_eq!(
            g.add_relation_named("consumes", "wp1", "ghost").unwrap_err(),
            GraphError::MissingEntity("ghost".into())
        );
        // Kind conformance is the validator's job.
        assert!(g.add_relation(Relation::Performs, "t1", "wp1").unwrap());
    }

    #[test]
    fn add_composition_examples() {
        let mut g = InstanceGraph::new();
        g.add_entity("wp1", TermKind::WorkProcess, Attributes::new()).unwrap();
        g.add_entity("a1", TermKind::Activity, Attributes::new()).unwrap();
        g.add_entity("t1", TermKind::Task, Attributes::new()).unwrap();
        assert_eq!(g.add_composition("wp1", "a1").unwrap(), Flavor::ActivityPartOf);
        match g.add_composition("t1", "a1").unwrap_err() {
            GraphError::InvalidComposition { reason, .. } => assert!(reason.contains("cannot be decomposed")),
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            g.add_composition("wp1", "wp1"),
            Err(GraphError::CompositionCycle { .. })
        ));
        assert!(matches!(
            g.add_composition("wp1", "t1"),
            Err(GraphError::InvalidComposition { .. })
        ));
        assert_eq!(
            g.add_composition("ghost", "a1").unwrap_err(),
            GraphError::MissingEntity("ghost".into())
        );
    }

    #[test]
    fn longer_cycles_are_rejected() {
        let mut g = InstanceGraph::new();
        for id in ["a", "b", "c"] {
            g.add_entity(id, TermKind::Activity, Attributes::new()).unwrap();
        }
        g.add_composition("a", "b").unwrap();
        g.add_composition("b", "c").unwrap();
        assert!(matches!(
            g.add_composition("c", "a"),
            Err(GraphError::CompositionCycle { .. })
        ));
        // Shared parts are allowed: the hierarchy is a DAG.
        g.add_composition("a", "c").unwrap();
    }

    #[test]
    fn flavor_inference_is_total_on_legal_pairs_only() {
        let legal = [
            (TermKind::WorkProcess, TermKind::WorkProcess, Flavor::SubProcessOf),
            (TermKind::WorkProcess, TermKind::Activity, Flavor::ActivityPartOf),
            (TermKind::Activity, TermKind::Activity, Flavor::SubActivityOf),
            (TermKind::Activity, TermKind::Task, Flavor::TaskPartOf),
        ];
        for p in TermKind::ALL {
            for c in TermKind::ALL {
                let expected = legal.iter().find(|(lp, lc, _)| *lp == p && *lc == c).map(|l| l.2);
                assert_eq!(Flavor::infer(p, c), expected, "{p} {c}");
            }
        }
    }

    #[test]
    fn literals() {
        assert!(matches!(Scalar::parse_literal("2024-03-01"), Some(Scalar::Date(_))));
        assert!(matches!(
            Scalar::parse_literal("2024-03-01T09:30:00Z"),
            Some(Scalar::Date(_))
        ));
        assert!(matches!(
            Scalar::parse_literal("2024-03-01T09:30:00+02:00"),
            Some(Scalar::Date(_))
        ));
        assert!(matches!(
            Scalar::parse_literal("2024-03-01T09:30:00"),
            Some(Scalar::Date(_))
        ));
        assert!(Scalar::parse_literal("2024-13-01").is_none());
        assert!(Scalar::parse_literal("2024-3-1").is_none());
        assert!(matches!(Scalar::parse_literal("42"), Some(Scalar::Number(_))));
        assert!(matches!(Scalar::parse_literal("-0.5e3"), Some(Scalar::Number(_))));
        for bad in ["inf", "NaN", "1.", ".5", "+1", "1e", "12abc", "1e999"] {
            assert!(Scalar::parse_literal(bad).is_none(), "{bad}");
        }
    }

    #[test]
    fn frozen_indexes() {
        let mut g = InstanceGraph::new();
        g.add_entity("wp1", TermKind::WorkProcess, Attributes::new()).unwrap();
        g.add_entity("a1", TermKind::Activity, Attributes::new()).unwrap();
        g.add_entity("pe1", TermKind::Artifact, Attributes::new()).unwrap();
        g.add_composition("wp1", "a1").unwrap();
        g.add_relation(Relation::Consumes, "wp1", "pe1").unwrap();
        let f = g.freeze();
        let wp1 = EntityId::new("wp1").unwrap();
        let pe1 = EntityId::new("pe1").unwrap();
        assert!(f.has_edge(Relation::Consumes, &wp1, &pe1));
        assert_eq!(f.sources(Relation::Consumes, &pe1).collect::<Vec<_>>(), [&wp1]);
        assert_eq!(f.children("wp1").len(), 1);
        assert_eq!(f.parents("a1")[0].0, wp1);
        assert!(f.children("a1").is_empty());
    }
}
