use super::{
    AttributeSchema, Multiplicity, Relation, RelationshipSchema, Stereotype, TermDef, TermKind, TfoRelationName,
    ThingFoRelation, ValueType,
};

use Multiplicity as M;
use TermKind::*;

const PARTICULAR: &str = "Thing (a particular)";
const UNIVERSAL: &str = "Thing Category (a universal)";

#[allow(clippy::too_many_arguments)]
const fn term(
    kind: TermKind,
    label: &'static str,
    parent: Option<TermKind>,
    tfo_stereotype: Stereotype,
    stereotype_detail: &'static str,
    synonyms: &'static [&'static str],
    definition: &'static str,
    notes: &'static [&'static str],
) -> TermDef {
    TermDef {
        kind,
        label,
        parent,
        tfo_stereotype,
        stereotype_detail,
        synonyms,
        definition,
        notes,
    }
}

// Indexed by `TermKind as usize`; the self-check verifies the order.
pub(super) static TERMS: [TermDef; 30] = [
    term(
        Allocation,
        "Allocation",
        None,
        Stereotype::AssertionOnParticulars,
        "Allotment-related Assertion",
        &["Allotment"],
        "Assertion on Particulars that specifies the assignment of a Work Resource to a Work Entity.",
        &[],
    ),
    term(
        AllocationModel,
        "Allocation Model",
        Some(Artifact),
        Stereotype::Thing,
        PARTICULAR,
        &["Allotment Model"],
        "Artifact that specifies and models none or more Allocations of Work Resources.",
        &[],
    ),
    term(
        Activity,
        "Activity",
        Some(WorkEntity),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Entity formed by an interrelated set of sub-activities and Tasks.",
        &["A sub-activity is an Activity at a lower granularity level."],
    ),
    term(
        Agent,
        "Agent",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Resource assigned to a Work Entity to perform a Task in compliance with a Role.",
        &[],
    ),
    term(
        Artifact,
        "Artifact",
        Some(WorkProduct),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Tangible or intangible, versionable Work Product which can be delivered.",
        &[],
    ),
    term(
        AutomatedAgent,
        "Automated Agent",
        Some(Agent),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Non-human Agent assigned to a Work Entity, which performs a Task in fulfillment of a Role.",
        &[],
    ),
    term(
        Condition,
        "Condition",
        None,
        Stereotype::Assertion,
        "Constraint-related Assertion",
        &[],
        "Restrictions that must hold at the beginning (pre-condition) or ending (post-condition) of a Work Entity realization.",
        &[],
    ),
    term(
        HumanAgent,
        "Human Agent",
        Some(Agent),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Human Agent assigned to a Work Entity, which performs a Task in fulfillment of a Role.",
        &[],
    ),
    term(
        Method,
        "Method",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Resource encompassing the specific way to perform the steps specified in a Work Entity description.",
        &[],
    ),
    term(
        Money,
        "Money",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Resource representing a medium of exchange for goods, services and obligations.",
        &[],
    ),
    term(
        NaturalProduct,
        "Natural Product",
        Some(ProductEntity),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Product Entity produced by natural processes.",
        &["Not produced by a Work Entity, but may be consumed by one."],
    ),
    term(
        Outcome,
        "Outcome",
        Some(WorkProduct),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Intangible, storable and processable Work Product.",
        &[],
    ),
    term(
        ProcessCategory,
        "Process Category",
        None,
        Stereotype::ThingCategory,
        UNIVERSAL,
        &[],
        "Thing Category which has a Work Entity sub-Category.",
        &[],
    ),
    term(
        ProcessModel,
        "Process Model",
        Some(Artifact),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Artifact that specifies and models one or more related Process Perspectives.",
        &[],
    ),
    term(
        ProcessPerspective,
        "Process Perspective",
        None,
        Stereotype::AssertionOnParticulars,
        "Assertion on Particulars",
        &["Process View"],
        "Functional, behavioral, informational, methodological or organizational view for Work Entities.",
        &[],
    ),
    term(
        ProductCategory,
        "Product Category",
        None,
        Stereotype::ThingCategory,
        UNIVERSAL,
        &[],
        "Thing Category to which concrete Product Entities belong.",
        &[],
    ),
    term(
        ProductEntity,
        "Product Entity",
        None,
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Thing produced naturally or yielded artificially as a result of a Work Entity.",
        &[],
    ),
    term(
        ResourceCategory,
        "Resource Category",
        None,
        Stereotype::ThingCategory,
        UNIVERSAL,
        &[],
        "Thing Category to which concrete Resource Entities belong.",
        &[],
    ),
    term(
        ResourceEntity,
        "Resource Entity",
        None,
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Thing representing an available asset that can be used for or allocated to something.",
        &[],
    ),
    term(
        Role,
        "Role",
        None,
        Stereotype::Assertion,
        "Behavior-related Assertion",
        &[],
        "Set of skills an Agent must possess in order to perform a Work Entity.",
        &[],
    ),
    term(
        Service,
        "Service",
        Some(WorkProduct),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Intangible, non-storable and deliverable Work Product.",
        &[],
    ),
    term(
        Strategy,
        "Strategy",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Resource encompassing principles and integrated capabilities for achieving a project's goal purpose.",
        &[],
    ),
    term(
        Task,
        "Task",
        Some(WorkEntity),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Atomic, fine-grained Work Entity that cannot be decomposed.",
        &[],
    ),
    term(
        Time,
        "Time",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Work Resource representing a finite, perishable non-spatial continuum assigned to Work Entities.",
        &[],
    ),
    term(
        Tool,
        "Tool",
        Some(WorkResource),
        Stereotype::Thing,
        PARTICULAR,
        &["Instrument"],
        "Work Resource representing an instrument that automates Method procedures and rules.",
        &[],
    ),
    term(
        WorkEntity,
        "Work Entity",
        None,
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Thing describing work by means of consumed and produced Work Products, Conditions and involved Roles.",
        &["Represents a Work Process, an Activity or a Task."],
    ),
    term(
        WorkEntitySubCategory,
        "Work Entity sub-Category",
        Some(ProcessCategory),
        Stereotype::ThingCategory,
        UNIVERSAL,
        &[],
        "Process sub-category to which concrete Work Entities belong.",
        &[],
    ),
    term(
        WorkProcess,
        "Work Process",
        Some(WorkEntity),
        Stereotype::Thing,
        PARTICULAR,
        &["Process"],
        "Coarse-grained Work Entity composed of an interrelated set of sub-processes and activities.",
        &["A sub-process is a Work Process at a lower granularity level."],
    ),
    term(
        WorkProduct,
        "Work Product",
        Some(ProductEntity),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Product Entity consumed or produced by a Work Entity.",
        &[],
    ),
    term(
        WorkResource,
        "Work Resource",
        Some(ResourceEntity),
        Stereotype::Thing,
        PARTICULAR,
        &[],
        "Resource Entity that can be allotted and assigned to Work Entities.",
        &["Useful Work Resources include Agents, Methods, Tools, Strategies, Time and Money."],
    ),
];

const fn attr(owner: TermKind, name: &'static str, definition: &'static str) -> AttributeSchema {
    AttributeSchema {
        owner,
        name,
        value_type: ValueType::Text,
        definition,
        placement_note: None,
    }
}

const fn typed(mut a: AttributeSchema, value_type: ValueType) -> AttributeSchema {
    a.value_type = value_type;
    a
}

const fn moved(mut a: AttributeSchema, note: &'static str) -> AttributeSchema {
    a.placement_note = Some(note);
    a
}

pub(super) static ATTRIBUTES: [AttributeSchema; 30] = [
    attr(
        Allocation,
        "name",
        "Label or name that identifies the Allocation of Work Resources.",
    ),
    attr(
        Allocation,
        "statement",
        "Textual statement describing the Allocation of Work Resources.",
    ),
    attr(
        AllocationModel,
        "specification",
        "Explicit representation of the Allocation in a given language.",
    ),
    attr(Agent, "capabilities", "Set of abilities the Agent has as a performer."),
    moved(
        attr(Artifact, "state", "State in which the Artifact is."),
        "listed beside Agent in the attributes table; its definition describes the Artifact",
    ),
    attr(
        Artifact,
        "version",
        "Identifier indicating the level of evolution of the Artifact.",
    ),
    attr(
        Condition,
        "specification",
        "Unambiguous specification of constraints that must be satisfied.",
    ),
    attr(
        Method,
        "procedure",
        "Arranged set of instructions specifying how Task steps are performed.",
    ),
    attr(
        Method,
        "rules",
        "Principles, conditions and heuristics associated with the procedure.",
    ),
    attr(
        Method,
        "references",
        "Bibliographical or URL resources about the Method.",
    ),
    typed(
        attr(Outcome, "value", "Numerical or categorical result."),
        ValueType::NumberOrText,
    ),
    attr(
        ProcessModel,
        "specification",
        "Explicit representation of the Work Entity perspective in a given language.",
    ),
    attr(
        ProcessPerspective,
        "name",
        "Label or name that identifies the Process Perspective.",
    ),
    attr(
        ProcessPerspective,
        "statement",
        "Textual statement describing the Process Perspective.",
    ),
    attr(
        ProductEntity,
        "name",
        "Label or name that identifies the Product Entity.",
    ),
    attr(
        ProductEntity,
        "description",
        "Textual statement describing the Product Entity.",
    ),
    attr(
        ResourceEntity,
        "name",
        "Label or name that identifies the Resource Entity.",
    ),
    attr(
        ResourceEntity,
        "description",
        "Textual statement describing the Resource Entity.",
    ),
    attr(Role, "name", "Label or name that identifies the Role."),
    attr(
        Role,
        "skills",
        "Capabilities, competencies and responsibilities of the Role.",
    ),
    attr(
        Task,
        "steps specification",
        "Steps to be followed in order to achieve the Task objective.",
    ),
    moved(
        attr(Tool, "description", "Textual statement describing the Tool."),
        "listed beside Task in the attributes table; its definition describes the Tool",
    ),
    moved(
        attr(Tool, "references", "Bibliographical or URL resources about the Tool."),
        "listed beside Task in the attributes table; its definition describes the Tool",
    ),
    attr(WorkEntity, "name", "Label or name that identifies the Work Entity."),
    attr(WorkEntity, "objective", "Aim or end to be reached."),
    attr(
        WorkEntity,
        "description",
        "What should be done to achieve the objective of the Work Entity.",
    ),
    attr(WorkEntity, "status", "State in which the Work Entity is."),
    typed(
        attr(WorkEntity, "start date", "Date or instant when the Work Entity starts."),
        ValueType::Date,
    ),
    typed(
        attr(WorkEntity, "end date", "Date or instant when the Work Entity ends."),
        ValueType::Date,
    ),
    moved(
        attr(WorkResource, "level", "Level to which the Work Resource is assigned."),
        "listed beside Work Entity in the attributes table; its definition describes the Work Resource",
    ),
];

const POWER_OF_THING: &str = "(Power of) Thing";
const THING: &str = "Thing";
const AOP: &str = "Assertion on Particulars";

const fn tfo(
    name: TfoRelationName,
    source_term: &'static str,
    source_card: Multiplicity,
    target_card: Multiplicity,
    target_term: &'static str,
) -> ThingFoRelation {
    ThingFoRelation {
        name,
        source_term,
        source_card,
        target_card,
        target_term,
    }
}

const INTERACTS: ThingFoRelation = tfo(
    TfoRelationName::InteractsWithOther,
    POWER_OF_THING,
    M::ONE_OR_MORE,
    M::ONE_OR_MORE,
    THING,
);
const DEALS: ThingFoRelation = tfo(
    TfoRelationName::DealsWithParticulars,
    AOP,
    M::ONE_OR_MORE,
    M::ONE_OR_MORE,
    THING,
);
const DEFINES: ThingFoRelation = tfo(TfoRelationName::Defines, THING, M::ANY, M::ANY, "Assertion");
const RELATES_WITH: ThingFoRelation = tfo(
    TfoRelationName::RelatesWith,
    THING,
    M::ONE_OR_MORE,
    M::ONE_OR_MORE,
    THING,
);
const BELONGS: ThingFoRelation = tfo(
    TfoRelationName::BelongsTo,
    THING,
    M::ONE_OR_MORE,
    M::ANY,
    "Thing Category",
);

const fn rel(
    relation: Relation,
    source_mult: Multiplicity,
    source_kind: TermKind,
    target_mult: Multiplicity,
    target_kind: TermKind,
    tfo_parent: ThingFoRelation,
    definition: &'static str,
) -> RelationshipSchema {
    RelationshipSchema {
        relation,
        source_kind,
        target_kind,
        source_mult,
        target_mult,
        definition,
        tfo_parent,
    }
}

// Indexed by `Relation as usize`, in verification-matrix row order.
pub(super) static RELATIONSHIPS: [RelationshipSchema; 18] = [
    rel(
        Relation::Consumes,
        M::ANY,
        WorkEntity,
        M::ONE_OR_MORE,
        ProductEntity,
        INTERACTS,
        "A Work Entity consumes one or more Product Entities to achieve its objective.",
    ),
    rel(
        Relation::DealsWith,
        M::ONE_OR_MORE,
        Allocation,
        M::ONE_OR_MORE,
        WorkResource,
        DEALS,
        "An Allocation deals with one or more Work Resources.",
    ),
    rel(
        Relation::DealsWithWorkEntity,
        M::ONE_OR_MORE,
        ProcessPerspective,
        M::ONE_OR_MORE,
        WorkEntity,
        DEALS,
        "A Process Perspective deals with one or more Work Entities.",
    ),
    rel(
        Relation::Involves,
        M::ONE_OR_MORE,
        WorkEntity,
        M::ONE_OR_MORE,
        Role,
        DEFINES,
        "A Work Entity involves one or more Roles; a Role participates in one or more Work Entities.",
    ),
    rel(
        Relation::IsApplicable,
        M::ONE_OR_MORE,
        Method,
        M::EXACTLY_ONE,
        Task,
        RELATES_WITH,
        "A Method is applicable to the description of a Task; one or several Methods apply to a Task.",
    ),
    rel(
        Relation::IsAssignedTo,
        M::ONE_OR_MORE,
        Allocation,
        M::ANY,
        WorkEntity,
        DEALS,
        "A scheduled Allocation of Work Resources is assigned to Work Entities for their enactment.",
    ),
    rel(
        Relation::IsPlayedBy,
        M::ONE_OR_MORE,
        Role,
        M::ONE_OR_MORE,
        Agent,
        DEALS,
        "A Role is played by one or several Agents; an Agent plays one or more Roles.",
    ),
    rel(
        Relation::IsRelatedWith,
        M::ONE_OR_MORE,
        ProductEntity,
        M::ANY,
        ProductEntity,
        RELATES_WITH,
        "A Product Entity is related with none or several Product Entities.",
    ),
    rel(
        Relation::IsRequiredBy,
        M::ANY,
        Tool,
        M::ONE_OR_MORE,
        Method,
        INTERACTS,
        "A Tool is required by none or several Methods.",
    ),
    rel(
        Relation::Performs,
        M::ONE_OR_MORE,
        Agent,
        M::ONE_OR_MORE,
        Task,
        INTERACTS,
        "An Agent performs one or more assigned Tasks; a Task is performed by one or more Agents.",
    ),
    rel(
        Relation::PertainsToCategory,
        M::ONE_OR_MORE,
        WorkEntity,
        M::EXACTLY_ONE,
        WorkEntitySubCategory,
        BELONGS,
        "Work Entities pertain to a Work Entity sub-Category.",
    ),
    rel(
        Relation::PertainsToProductCategory,
        M::ONE_OR_MORE,
        ProductEntity,
        M::EXACTLY_ONE,
        ProductCategory,
        BELONGS,
        "Product Entities pertain to a Product Category.",
    ),
    rel(
        Relation::PertainsToResourceCategory,
        M::ONE_OR_MORE,
        ResourceEntity,
        M::EXACTLY_ONE,
        ResourceCategory,
        BELONGS,
        "Resource Entities pertain to a Resource Category.",
    ),
    rel(
        Relation::Produces,
        M::ONE_OR_MORE,
        WorkEntity,
        M::ONE_OR_MORE,
        WorkProduct,
        INTERACTS,
        "A Work Entity produces (modifies, creates) one or more Work Products.",
    ),
    rel(
        Relation::Relates,
        M::ANY,
        ProcessPerspective,
        M::ANY,
        ProcessPerspective,
        tfo(TfoRelationName::RelatesWith, AOP, M::ANY, M::ANY, AOP),
        "A Process Perspective relates none or several Process Perspectives.",
    ),
    rel(
        Relation::SetsPostcondition,
        M::ONE_OR_MORE,
        WorkEntity,
        M::ANY,
        Condition,
        DEFINES,
        "A Work Entity may have Conditions that must hold at the end of its realization.",
    ),
    rel(
        Relation::SetsPrecondition,
        M::ONE_OR_MORE,
        WorkEntity,
        M::ANY,
        Condition,
        DEFINES,
        "A Work Entity may have Conditions that must hold before its initiation.",
    ),
    rel(
        Relation::Uses,
        M::ONE_OR_MORE,
        Agent,
        M::ONE_OR_MORE,
        WorkResource,
        INTERACTS,
        "An Agent uses one or more Work Resources to perform a Task.",
    ),
];
