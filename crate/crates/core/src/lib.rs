//! Executable form of the ProcessCO v1.3 core ontology for work processes.
//!
//! The crate embeds the ontology as an immutable schema ([`schema`]), stores
//! concrete process models as instance graphs ([`graph`]), reads and writes
//! them in the `.pco` DSL ([`parser`]), and checks them against the schema's
//! types, multiplicities, generalization sets, composition rules and the six
//! axioms ([`validator`]). [`refinement`] carries the ProcessCO to ThingFO
//! verification matrix and [`query`] the closure and witness queries used by
//! the CLI and by axiom diagnostics.

pub mod graph;
pub mod parser;
pub mod query;
pub mod refinement;
pub mod schema;
pub mod text;
pub mod validator;

pub use graph::{EntityId, FrozenGraph, GraphError, InstanceGraph, Scalar};
pub use schema::{builtin_schema, AxiomId, Multiplicity, OntologySchema, Relation, TermKind};
