//! The ProcessCO v1.3 ontology as compiled-in, immutable data.
//!
//! Everything in this module is static: the 30 term kinds and their
//! taxonomy, the 30 own attributes, the 18 non-taxonomic relationships with
//! their multiplicities and ThingFO parents, the default generalization-set
//! constraints and the six axiom identifiers. [`builtin_schema`] hands out a
//! shared reference that is built and self-checked once per process.

mod axioms;
mod data;
mod partition;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

pub use axioms::AxiomId;
pub use partition::{ConfigError, Partition, PartitionSet};

/// Errors raised by name lookups against the built-in schema.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("invalid term `{0}`: not one of the 30 ProcessCO term kinds")]
    InvalidTerm(String),
    #[error("invalid relationship `{name}`; valid relationships are: {}", valid.join(", "))]
    InvalidRelationship { name: String, valid: Vec<&'static str> },
    #[error("invalid axiom `{0}`: expected one of A1..A6")]
    InvalidAxiom(String),
}

macro_rules! term_kinds {
    ($($variant:ident),* $(,)?) => {
        /// One of the 30 ProcessCO term kinds.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TermKind {
            $($variant),*
        }

        impl TermKind {
            /// All term kinds, in the order of the published terms table.
            pub const ALL: [TermKind; 30] = [$(TermKind::$variant),*];

            /// Canonical identifier, e.g. `WorkProcess`.
            pub fn name(self) -> &'static str {
                match self {
                    $(TermKind::$variant => stringify!($variant)),*
                }
            }
        }
    };
}

term_kinds!(
    Allocation,
    AllocationModel,
    Activity,
    Agent,
    Artifact,
    AutomatedAgent,
    Condition,
    HumanAgent,
    Method,
    Money,
    NaturalProduct,
    Outcome,
    ProcessCategory,
    ProcessModel,
    ProcessPerspective,
    ProductCategory,
    ProductEntity,
    ResourceCategory,
    ResourceEntity,
    Role,
    Service,
    Strategy,
    Task,
    Time,
    Tool,
    WorkEntity,
    WorkEntitySubCategory,
    WorkProcess,
    WorkProduct,
    WorkResource,
);

impl TermKind {
    pub fn def(self) -> &'static TermDef {
        &data::TERMS[self as usize]
    }

    /// Human-readable label, e.g. `Work Process`.
    pub fn label(self) -> &'static str {
        self.def().label
    }

    pub fn parent(self) -> Option<TermKind> {
        self.def().parent
    }

    /// Ancestors from the immediate parent up to the root.
    pub fn ancestors(self) -> impl Iterator<Item = TermKind> {
        std::iter::successors(self.parent(), |k| k.parent())
    }

    /// True iff `self == ancestor` or `self` is a transitive descendant of it.
    pub fn is_subkind_of(self, ancestor: TermKind) -> bool {
        self == ancestor || self.ancestors().any(|k| k == ancestor)
    }
}

impl fmt::Display for TermKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermKind {
    type Err = SchemaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TermKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| SchemaError::InvalidTerm(s.to_string()))
    }
}

/// ThingFO term a ProcessCO term is enriched with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stereotype {
    Thing,
    ThingCategory,
    Assertion,
    AssertionOnParticulars,
}

impl Stereotype {
    pub fn label(self) -> &'static str {
        match self {
            Stereotype::Thing => "Thing",
            Stereotype::ThingCategory => "Thing Category",
            Stereotype::Assertion => "Assertion",
            Stereotype::AssertionOnParticulars => "Assertion on Particulars",
        }
    }
}

/// Static description of one term kind.
#[derive(Debug, PartialEq, Eq)]
pub struct TermDef {
    pub kind: TermKind,
    pub label: &'static str,
    pub parent: Option<TermKind>,
    pub tfo_stereotype: Stereotype,
    pub stereotype_detail: &'static str,
    pub synonyms: &'static [&'static str],
    pub definition: &'static str,
    pub notes: &'static [&'static str],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueType {
    Text,
    /// ISO-8601 date or date-time.
    Date,
    NumberOrText,
}

impl ValueType {
    pub fn name(self) -> &'static str {
        match self {
            ValueType::Text => "text",
            ValueType::Date => "date",
            ValueType::NumberOrText => "number_or_text",
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct AttributeSchema {
    pub owner: TermKind,
    /// Name as it appears in the ontology, e.g. `start date`.
    pub name: &'static str,
    pub value_type: ValueType,
    pub definition: &'static str,
    /// Set when the owner differs from the row the attribute is listed beside
    /// in the published attributes table.
    pub placement_note: Option<&'static str>,
}

impl AttributeSchema {
    /// Identifier form used as the key in instance graphs: spaces become `_`.
    pub fn key(&self) -> String {
        ident_form(self.name)
    }

    pub fn matches_key(&self, key: &str) -> bool {
        matches_ident(self.name, key)
    }
}

/// Allowed number of link partners at one end of a relationship.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiplicity {
    pub lower: u32,
    /// `None` means unbounded.
    pub upper: Option<u32>,
}

impl Multiplicity {
    /// `*`
    pub const ANY: Multiplicity = Multiplicity { lower: 0, upper: None };
    /// `1..*`
    pub const ONE_OR_MORE: Multiplicity = Multiplicity { lower: 1, upper: None };
    /// `1`
    pub const EXACTLY_ONE: Multiplicity = Multiplicity {
        lower: 1,
        upper: Some(1),
    };

    pub fn new(lower: u32, upper: Option<u32>) -> Option<Multiplicity> {
        match upper {
            Some(u) if u == 0 || u < lower => None,
            _ => Some(Multiplicity { lower, upper }),
        }
    }

    pub fn admits(self, count: u32) -> bool {
        count >= self.lower && self.upper.is_none_or(|u| count <= u)
    }

    /// True iff every count admitted by `self` is admitted by `other`.
    pub fn within(self, other: Multiplicity) -> bool {
        let upper_ok = match (self.upper, other.upper) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(a), Some(b)) => a <= b,
        };
        self.lower >= other.lower && upper_ok
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.lower, self.upper) {
            (0, None) => f.write_str("*"),
            (l, None) => write!(f, "{l}..*"),
            (l, Some(u)) if l == u => write!(f, "{l}"),
            (l, Some(u)) => write!(f, "{l}..{u}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed multiplicity `{0}`")]
pub struct MultiplicityParseError(pub String);

impl FromStr for Multiplicity {
    type Err = MultiplicityParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || MultiplicityParseError(s.to_string());
        let bound = |t: &str| -> Result<Option<u32>, MultiplicityParseError> {
            if t == "*" {
                Ok(None)
            } else {
                t.parse::<u32>().map(Some).map_err(|_| err())
            }
        };
        let (lower, upper) = match s.split_once("..") {
            Some((l, u)) => (l.parse::<u32>().map_err(|_| err())?, bound(u)?),
            None => match bound(s)? {
                None => (0, None),
                Some(n) => (n, Some(n)),
            },
        };
        Multiplicity::new(lower, upper).ok_or_else(err)
    }
}

macro_rules! relations {
    ($($variant:ident => $name:literal),* $(,)?) => {
        /// One of the 18 ProcessCO non-taxonomic relationships.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Relation {
            $($variant),*
        }

        impl Relation {
            /// All relationships, in verification-matrix order.
            pub const ALL: [Relation; 18] = [$(Relation::$variant),*];

            /// Name as printed in the ontology, e.g. `deals with work entity`.
            pub fn name(self) -> &'static str {
                match self {
                    $(Relation::$variant => $name),*
                }
            }
        }
    };
}

relations!(
    Consumes => "consumes",
    DealsWith => "deals with",
    DealsWithWorkEntity => "deals with work entity",
    Involves => "involves",
    IsApplicable => "is applicable",
    IsAssignedTo => "is assigned to",
    IsPlayedBy => "is played by",
    IsRelatedWith => "is related with",
    IsRequiredBy => "is required by",
    Performs => "performs",
    PertainsToCategory => "pertains to category",
    PertainsToProductCategory => "pertains to product category",
    PertainsToResourceCategory => "pertains to resource category",
    Produces => "produces",
    Relates => "relates",
    SetsPostcondition => "sets postcondition",
    SetsPrecondition => "sets precondition",
    Uses => "uses",
);

impl Relation {
    pub fn schema(self) -> &'static RelationshipSchema {
        &data::RELATIONSHIPS[self as usize]
    }

    /// Identifier form used by the DSL and canonical formats, e.g.
    /// `deals_with_work_entity`.
    pub fn ident(self) -> String {
        ident_form(self.name())
    }

    /// Accepts either the printed name or its identifier form.
    pub fn from_name(name: &str) -> Result<Relation, SchemaError> {
        Relation::ALL
            .iter()
            .copied()
            .find(|r| matches_ident(r.name(), name))
            .ok_or_else(|| SchemaError::InvalidRelationship {
                name: name.to_string(),
                valid: Relation::ALL.iter().map(|r| r.name()).collect(),
            })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = SchemaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Relation::from_name(s)
    }
}

/// The five ThingFO relationships ProcessCO relationships are refined from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TfoRelationName {
    InteractsWithOther,
    DealsWithParticulars,
    Defines,
    RelatesWith,
    BelongsTo,
}

impl TfoRelationName {
    pub const ALL: [TfoRelationName; 5] = [
        TfoRelationName::InteractsWithOther,
        TfoRelationName::DealsWithParticulars,
        TfoRelationName::Defines,
        TfoRelationName::RelatesWith,
        TfoRelationName::BelongsTo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TfoRelationName::InteractsWithOther => "interacts with other",
            TfoRelationName::DealsWithParticulars => "deals with particulars",
            TfoRelationName::Defines => "defines",
            TfoRelationName::RelatesWith => "relates with",
            TfoRelationName::BelongsTo => "belongs to",
        }
    }

    pub fn ident(self) -> String {
        ident_form(self.name())
    }
}

impl fmt::Display for TfoRelationName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A ThingFO relationship as it appears on the right-hand side of a
/// verification-matrix row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThingFoRelation {
    pub name: TfoRelationName,
    /// Printed term text; `(Power of) Thing` carries no extra semantics.
    pub source_term: &'static str,
    pub source_card: Multiplicity,
    pub target_card: Multiplicity,
    pub target_term: &'static str,
}

/// One of the 18 non-taxonomic relationships.
///
/// `source_mult` bounds how many sources may link to one target and
/// `target_mult` bounds how many targets each source links to.
#[derive(Debug, PartialEq, Eq)]
pub struct RelationshipSchema {
    pub relation: Relation,
    pub source_kind: TermKind,
    pub target_kind: TermKind,
    pub source_mult: Multiplicity,
    pub target_mult: Multiplicity,
    pub definition: &'static str,
    pub tfo_parent: ThingFoRelation,
}

impl RelationshipSchema {
    pub fn name(&self) -> &'static str {
        self.relation.name()
    }
}

/// The complete, immutable ProcessCO v1.3 schema.
#[derive(Debug, PartialEq)]
pub struct OntologySchema {
    pub terms: Vec<&'static TermDef>,
    pub attributes: Vec<&'static AttributeSchema>,
    pub relationships: Vec<&'static RelationshipSchema>,
    pub partitions: PartitionSet,
    pub axiom_ids: Vec<AxiomId>,
}

/// Returns the built-in schema. The first call runs the internal consistency
/// self-check and panics if the compiled-in tables are inconsistent.
pub fn builtin_schema() -> &'static OntologySchema {
    static SCHEMA: OnceLock<OntologySchema> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let schema = OntologySchema {
            terms: data::TERMS.iter().collect(),
            attributes: data::ATTRIBUTES.iter().collect(),
            relationships: data::RELATIONSHIPS.iter().collect(),
            partitions: PartitionSet::defaults(),
            axiom_ids: AxiomId::ALL.to_vec(),
        };
        if let Err(msg) = schema.self_check() {
            panic!("procco schema initialization failed: {msg}");
        }
        schema
    })
}

impl OntologySchema {
    pub fn term(&self, name: &str) -> Result<TermKind, SchemaError> {
        name.parse()
    }

    pub fn is_subkind(&self, kind: TermKind, ancestor: TermKind) -> bool {
        kind.is_subkind_of(ancestor)
    }

    /// Name-based variant of [`Self::is_subkind`].
    pub fn is_subkind_by_name(&self, kind: &str, ancestor: &str) -> Result<bool, SchemaError> {
        Ok(self.term(kind)?.is_subkind_of(self.term(ancestor)?))
    }

    pub fn own_attributes(&self, kind: TermKind) -> impl Iterator<Item = &'static AttributeSchema> + '_ {
        self.attributes.iter().copied().filter(move |a| a.owner == kind)
    }

    /// Own plus inherited attributes, root ancestor first, each level in
    /// declaration order.
    pub fn attributes_for(&self, kind: TermKind) -> Vec<&'static AttributeSchema> {
        let mut chain: Vec<TermKind> = kind.ancestors().collect();
        chain.reverse();
        chain.push(kind);
        chain.into_iter().flat_map(|k| self.own_attributes(k)).collect()
    }

    /// Resolves an attribute key (printed or identifier form) on `kind`. When
    /// a descendant redeclares an inherited name the most specific one wins.
    pub fn attribute(&self, kind: TermKind, key: &str) -> Option<&'static AttributeSchema> {
        self.attributes_for(kind).into_iter().rev().find(|a| a.matches_key(key))
    }

    pub fn relationship_schema(&self, name: &str) -> Result<&'static RelationshipSchema, SchemaError> {
        Relation::from_name(name).map(Relation::schema)
    }

    /// Terms without a taxonomic parent.
    pub fn roots(&self) -> Vec<TermKind> {
        self.terms
            .iter()
            .filter(|t| t.parent.is_none())
            .map(|t| t.kind)
            .collect()
    }

    pub fn children(&self, kind: TermKind) -> Vec<TermKind> {
        self.terms
            .iter()
            .filter(|t| t.parent == Some(kind))
            .map(|t| t.kind)
            .collect()
    }

    fn self_check(&self) -> Result<(), String> {
        if self.terms.len() != 30 {
            return Err(format!("expected 30 terms, found {}", self.terms.len()));
        }
        for (i, t) in self.terms.iter().enumerate() {
            if t.kind as usize != i {
                return Err(format!("term table out of order at {}", t.kind));
            }
            if t.kind.ancestors().take(31).count() > 30 {
                return Err(format!("taxonomy cycle through {}", t.kind));
            }
        }
        if self.attributes.len() != 30 {
            return Err(format!("expected 30 attributes, found {}", self.attributes.len()));
        }
        for (i, a) in self.attributes.iter().enumerate() {
            if self.attributes[..i]
                .iter()
                .any(|b| b.owner == a.owner && b.name == a.name)
            {
                return Err(format!("duplicate attribute {}.{}", a.owner, a.name));
            }
        }
        if self.relationships.len() != 18 {
            return Err(format!("expected 18 relationships, found {}", self.relationships.len()));
        }
        for (i, r) in self.relationships.iter().enumerate() {
            if r.relation as usize != i {
                return Err(format!("relationship table out of order at {}", r.relation));
            }
        }
        for p in self.partitions.iter() {
            p.check()?;
        }
        if self.axiom_ids.len() != 6 {
            return Err(format!("expected 6 axioms, found {}", self.axiom_ids.len()));
        }
        Ok(())
    }
}

pub(crate) fn ident_form(name: &str) -> String {
    name.replace(' ', "_")
}

fn matches_ident(printed: &str, candidate: &str) -> bool {
    printed.len() == candidate.len()
        && printed
            .bytes()
            .zip(candidate.bytes())
            .all(|(p, c)| p == c || (p == b' ' && c == b'_'))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_published_tables() {
        let s = builtin_schema();
        assert_eq!(s.terms.len(), 30);
        assert_eq!(s.attributes.len(), 30);
        assert_eq!(s.relationships.len(), 18);
        assert_eq!(s.axiom_ids.len(), 6);
    }

    #[test]
    fn repeated_calls_are_identical() {
        assert!(std::ptr::eq(builtin_schema(), builtin_schema()));
    }

    #[test]
    fn task_is_a_work_entity() {
        assert_eq!(TermKind::Task.parent(), Some(TermKind::WorkEntity));
    }

    #[test]
    fn subkind_examples() {
        let s = builtin_schema();
        assert!(s.is_subkind(TermKind::HumanAgent, TermKind::WorkResource));
        assert!(s.is_subkind(TermKind::Task, TermKind::Task));
        assert!(!s.is_subkind(TermKind::NaturalProduct, TermKind::WorkEntity));
        assert_eq!(
            s.is_subkind_by_name("Workflow", "Task"),
            Err(SchemaError::InvalidTerm("Workflow".into()))
        );
    }

    #[test]
    fn roots_are_the_ten_top_level_terms() {
        use TermKind::*;
        let mut roots = builtin_schema().roots();
        roots.sort();
        let mut expected = vec![
            WorkEntity,
            ProductEntity,
            ResourceEntity,
            Condition,
            Role,
            Allocation,
            ProcessPerspective,
            ProcessCategory,
            ProductCategory,
            ResourceCategory,
        ];
        expected.sort();
        assert_eq!(roots, expected);
    }

    #[test]
    fn taxonomy_depth_is_bounded() {
        for k in TermKind::ALL {
            assert!(k.ancestors().count() <= 5, "{k}");
        }
        assert_eq!(TermKind::HumanAgent.ancestors().count(), 3);
    }

    #[test]
    fn own_attribute_count_sums_to_thirty() {
        let s = builtin_schema();
        let total: usize = TermKind::ALL.iter().map(|&k| s.own_attributes(k).count()).sum();
        assert_eq!(total, 30);
    }

    #[test]
    fn attributes_for_work_entity_and_task() {
        let s = builtin_schema();
        let names = |k| s.attributes_for(k).iter().map(|a| a.name).collect::<Vec<_>>();
        assert_eq!(
            names(TermKind::WorkEntity),
            ["name", "objective", "description", "status", "start date", "end date"]
        );
        let task = names(TermKind::Task);
        assert_eq!(task.len(), 7);
        assert_eq!(task[6], "steps specification");
    }

    #[test]
    fn money_inherits_from_two_levels() {
        // ResourceEntity {name, description} then WorkResource {level}.
        let s = builtin_schema();
        let attrs: Vec<_> = s
            .attributes_for(TermKind::Money)
            .iter()
            .map(|a| (a.owner, a.name))
            .collect();
        assert_eq!(
            attrs,
            [
                (TermKind::ResourceEntity, "name"),
                (TermKind::ResourceEntity, "description"),
                (TermKind::WorkResource, "level"),
            ]
        );
    }

    #[test]
    fn attribute_lookup_prefers_most_specific() {
        let s = builtin_schema();
        let a = s.attribute(TermKind::Tool, "description").unwrap();
        assert_eq!(a.owner, TermKind::Tool);
        let a = s.attribute(TermKind::Task, "start_date").unwrap();
        assert_eq!(a.value_type, ValueType::Date);
        assert!(s.attribute(TermKind::Task, "start-date").is_none());
    }

    #[test]
    fn relationship_lookup() {
        let s = builtin_schema();
        let inv = s.relationship_schema("involves").unwrap();
        assert_eq!(inv.source_kind, TermKind::WorkEntity);
        assert_eq!(inv.target_kind, TermKind::Role);
        assert_eq!(inv.source_mult, Multiplicity::ONE_OR_MORE);
        assert_eq!(inv.target_mult, Multiplicity::ONE_OR_MORE);

        let app = s.relationship_schema("is applicable").unwrap();
        assert_eq!(app.source_kind, TermKind::Method);
        assert_eq!(app.target_kind, TermKind::Task);
        assert_eq!(app.target_mult, Multiplicity::EXACTLY_ONE);
        assert_eq!(s.relationship_schema("is_applicable").unwrap(), app);

        match s.relationship_schema("consume") {
            Err(SchemaError::InvalidRelationship { valid, .. }) => assert_eq!(valid.len(), 18),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relationship_endpoints_are_valid_and_names_unique() {
        let mut names: Vec<_> = Relation::ALL.iter().map(|r| r.name()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 18);
        for r in Relation::ALL {
            assert_eq!(r.schema().relation, r);
        }
    }

    #[test]
    fn multiplicity_display_and_parse() {
        for (s, m) in [
            ("*", Multiplicity::ANY),
            ("1..*", Multiplicity::ONE_OR_MORE),
            ("1", Multiplicity::EXACTLY_ONE),
            (
                "2..5",
                Multiplicity {
                    lower: 2,
                    upper: Some(5),
                },
            ),
        ] {
            assert_eq!(m.to_string(), s);
            assert_eq!(s.parse::<Multiplicity>().unwrap(), m);
        }
        assert!("3..1".parse::<Multiplicity>().is_err());
        assert!("0".parse::<Multiplicity>().is_err());
        assert!("x".parse::<Multiplicity>().is_err());
    }

    #[test]
    fn multiplicity_containment() {
        assert!(Multiplicity::EXACTLY_ONE.within(Multiplicity::ONE_OR_MORE));
        assert!(Multiplicity::ONE_OR_MORE.within(Multiplicity::ANY));
        assert!(!Multiplicity::ANY.within(Multiplicity::ONE_OR_MORE));
        assert!(!Multiplicity::ONE_OR_MORE.within(Multiplicity::EXACTLY_ONE));
    }

    #[test]
    fn only_three_multiplicity_forms_are_used() {
        let forms = [Multiplicity::ANY, Multiplicity::ONE_OR_MORE, Multiplicity::EXACTLY_ONE];
        for r in Relation::ALL {
            let s = r.schema();
            for m in [
                s.source_mult,
                s.target_mult,
                s.tfo_parent.source_card,
                s.tfo_parent.target_card,
            ] {
                assert!(forms.contains(&m), "{r}: {m}");
            }
        }
    }
}
