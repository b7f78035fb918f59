use std::fmt;
use std::str::FromStr;

use super::{Relation, SchemaError, TermKind};

/// Identifier of one of the six ProcessCO axioms.
///
/// Every axiom has the same shape: for a composite work entity `x` and an
/// object `y` with `rel(x, y)`, some direct part `z` of `x` (a nested
/// composite of the same kind, or a part of the next granularity level)
/// also has `rel(z, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
}

impl AxiomId {
    pub const ALL: [AxiomId; 6] = [
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
        AxiomId::A6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::A1 => "A1",
            AxiomId::A2 => "A2",
            AxiomId::A3 => "A3",
            AxiomId::A4 => "A4",
            AxiomId::A5 => "A5",
            AxiomId::A6 => "A6",
        }
    }

    /// Kind of the first universally quantified variable.
    pub fn composite(self) -> TermKind {
        match self {
            AxiomId::A1 | AxiomId::A3 | AxiomId::A5 => TermKind::WorkProcess,
            AxiomId::A2 | AxiomId::A4 | AxiomId::A6 => TermKind::Activity,
        }
    }

    /// Kind of the second universally quantified variable.
    pub fn object(self) -> TermKind {
        match self {
            AxiomId::A1 | AxiomId::A2 => TermKind::ProductEntity,
            AxiomId::A3 | AxiomId::A4 => TermKind::WorkProduct,
            AxiomId::A5 | AxiomId::A6 => TermKind::Role,
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            AxiomId::A1 | AxiomId::A2 => Relation::Consumes,
            AxiomId::A3 | AxiomId::A4 => Relation::Produces,
            AxiomId::A5 | AxiomId::A6 => Relation::Involves,
        }
    }

    /// Kind of the part one granularity level down: Activity under a Work
    /// Process, Task under an Activity.
    pub fn part(self) -> TermKind {
        match self.composite() {
            TermKind::WorkProcess => TermKind::Activity,
            _ => TermKind::Task,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            AxiomId::A1 => "a Work Process consuming a Product Entity has a sub-process or Activity consuming it",
            AxiomId::A2 => "an Activity consuming a Product Entity has a sub-activity or Task consuming it",
            AxiomId::A3 => "a Work Process producing a Work Product has a sub-process or Activity producing it",
            AxiomId::A4 => "an Activity producing a Work Product has a sub-activity or Task producing it",
            AxiomId::A5 => "a Work Process involving a Role has a sub-process or Activity involving it",
            AxiomId::A6 => "an Activity involving a Role has a sub-activity or Task involving it",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = SchemaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .iter()
            .copied()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| SchemaError::InvalidAxiom(s.to_string()))
    }
}
