//! The ProcessCO to ThingFO non-taxonomic relationship verification matrix.
//!
//! The matrix is kept as its printed table and parsed on first use; every
//! parsed row is cross-checked against the relationship schema, so the two
//! transcriptions cannot drift apart silently.

use std::fmt;
use std::sync::OnceLock;

use crate::graph::{EntityId, InstanceGraph};
use crate::schema::{Multiplicity, Relation, RelationshipSchema, TermKind, TfoRelationName, ThingFoRelation};
use crate::text::quote;
use crate::validator::{Finding, Severity};

pub const MATRIX_HEADER: &str = "procco-matrix 1";

/// Column headings, left to right.
pub const COLUMNS: [&str; 10] = [
    "card",
    "Term 1",
    "relationship name",
    "card",
    "Term 2",
    "card",
    "Term 1",
    "relationship name",
    "card",
    "Term 2",
];

const PRINTED: &str = "\
*\tWork Entity\tconsumes\t1..*\tProduct Entity\t1..*\t(Power of) Thing\tinteracts with other\t1..*\tThing
1..*\tAllocation\tdeals with\t1..*\tWork Resource\t1..*\tAssertion on Particulars\tdeals with particulars\t1..*\tThing
1..*\tProcess Perspective\tdeals with work entity\t1..*\tWork Entity\t1..*\tAssertion on Particulars\tdeals with particulars\t1..*\tThing
1..*\tWork Entity\tinvolves\t1..*\tRole\t*\tThing\tdefines\t*\tAssertion
1..*\tMethod\tis applicable\t1\tTask\t1..*\tThing\trelates with\t1..*\tThing
1..*\tAllocation\tis assigned to\t*\tWork Entity\t1..*\tAssertion on Particulars\tdeals with particulars\t1..*\tThing
1..*\tRole\tis played by\t1..*\tAgent\t1..*\tAssertion on Particulars\tdeals with particulars\t1..*\tThing
1..*\tProduct Entity\tis related with\t*\tProduct Entity\t1..*\tThing\trelates with\t1..*\tThing
*\tTool\tis required by\t1..*\tMethod\t1..*\t(Power of) Thing\tinteracts with other\t1..*\tThing
1..*\tAgent\tperforms\t1..*\tTask\t1..*\t(Power of) Thing\tinteracts with other\t1..*\tThing
1..*\tWork Entity\tpertains to category\t1\tWork Entity sub-Category\t1..*\tThing\tbelongs to\t*\tThing Category
1..*\tProduct Entity\tpertains to product category\t1\tProduct Category\t1..*\tThing\tbelongs to\t*\tThing Category
1..*\tResource Entity\tpertains to resource category\t1\tResource Entity Category\t1..*\tThing\tbelongs to\t*\tThing Category
1..*\tWork Entity\tproduces\t1..*\tWork Product\t1..*\t(Power of) Thing\tinteracts with other\t1..*\tThing
*\tProcess Perspective\trelates\t*\tProcess Perspective\t*\tAssertion on Particulars\trelates with\t*\tAssertion on Particulars
1..*\tWork Entity\tsets postcondition\t*\tCondition\t*\tThing\tdefines\t*\tAssertion
1..*\tWork Entity\tsets precondition\t*\tCondition\t*\tThing\tdefines\t*\tAssertion
1..*\tAgent\tuses\t1..*\tWork Resource\t1..*\t(Power of) Thing\tinteracts with other\t1..*\tThing
";

/// Term texts in the table that differ from the term's label.
const PRINTED_ALIASES: [(&str, TermKind); 1] = [("Resource Entity Category", TermKind::ResourceCategory)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementRow {
    pub pco: &'static RelationshipSchema,
    pub tfo: ThingFoRelation,
    pub pco_source_card: Multiplicity,
    pub pco_target_card: Multiplicity,
    /// Term texts as printed in the table.
    pub pco_source_term: &'static str,
    pub pco_target_term: &'static str,
}

impl RefinementRow {
    pub fn relation(&self) -> Relation {
        self.pco.relation
    }

    pub fn cells(&self) -> [String; 10] {
        [
            self.pco_source_card.to_string(),
            self.pco_source_term.to_string(),
            self.pco.name().to_string(),
            self.pco_target_card.to_string(),
            self.pco_target_term.to_string(),
            self.tfo.source_card.to_string(),
            self.tfo.source_term.to_string(),
            self.tfo.name.name().to_string(),
            self.tfo.target_card.to_string(),
            self.tfo.target_term.to_string(),
        ]
    }
}

fn printed_kind(text: &str) -> Option<TermKind> {
    PRINTED_ALIASES
        .iter()
        .find(|(t, _)| *t == text)
        .map(|(_, k)| *k)
        .or_else(|| TermKind::ALL.into_iter().find(|k| k.label() == text))
}

fn parse_row(line: &'static str) -> Result<RefinementRow, String> {
    let cells: Vec<&'static str> = line.split('\t').collect();
    let [src_card, src_term, name, tgt_card, tgt_term, tfo_src_card, tfo_src_term, tfo_name, tfo_tgt_card, tfo_tgt_term] =
        cells[..]
    else {
        return Err(format!("expected 10 cells, got {}", cells.len()));
    };
    let card = |s: &str| s.parse::<Multiplicity>().map_err(|e| e.to_string());
    let rel = Relation::from_name(name).map_err(|e| e.to_string())?;
    let tfo_name = TfoRelationName::ALL
        .into_iter()
        .find(|t| t.name() == tfo_name)
        .ok_or_else(|| format!("unknown ThingFO relationship `{tfo_name}`"))?;
    let row = RefinementRow {
        pco: rel.schema(),
        tfo: ThingFoRelation {
            name: tfo_name,
            source_term: tfo_src_term,
            source_card: card(tfo_src_card)?,
            target_card: card(tfo_tgt_card)?,
            target_term: tfo_tgt_term,
        },
        pco_source_card: card(src_card)?,
        pco_target_card: card(tgt_card)?,
        pco_source_term: src_term,
        pco_target_term: tgt_term,
    };

    let s = row.pco;
    let mismatch = |what: &str| Err(format!("`{name}`: {what} disagrees with the relationship schema"));
    if printed_kind(src_term) != Some(s.source_kind) {
        return mismatch("source term");
    }
    if printed_kind(tgt_term) != Some(s.target_kind) {
        return mismatch("target term");
    }
    if row.pco_source_card != s.source_mult || row.pco_target_card != s.target_mult {
        return mismatch("cardinality");
    }
    if row.tfo != s.tfo_parent {
        return mismatch("ThingFO parent");
    }
    Ok(row)
}

/// All 18 rows in table order.
pub fn builtin_matrix() -> &'static [RefinementRow] {
    static MATRIX: OnceLock<Vec<RefinementRow>> = OnceLock::new();
    MATRIX.get_or_init(|| {
        let rows: Vec<RefinementRow> = PRINTED
            .lines()
            .map(|l| parse_row(l).unwrap_or_else(|e| panic!("procco matrix initialization failed: {e}")))
            .collect();
        assert!(
            rows.iter().map(|r| r.relation()).eq(Relation::ALL),
            "procco matrix initialization failed: rows do not cover every relationship once, in order"
        );
        rows
    })
}

pub fn row(rel: Relation) -> &'static RefinementRow {
    &builtin_matrix()[rel as usize]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refinement {
    Equal,
    /// The child's interval lies strictly inside the parent's.
    Narrowing,
    /// The child admits a count the parent forbids.
    Widening,
}

impl Refinement {
    pub fn classify(child: Multiplicity, parent: Multiplicity) -> Refinement {
        if child == parent {
            Refinement::Equal
        } else if child.within(parent) {
            Refinement::Narrowing
        } else {
            Refinement::Widening
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Refinement::Equal => "equal",
            Refinement::Narrowing => "narrowing",
            Refinement::Widening => "widening",
        }
    }
}

impl fmt::Display for Refinement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Classification of both ends of one row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowCheck {
    pub relation: Relation,
    pub source: Refinement,
    pub target: Refinement,
}

pub fn classify_matrix() -> Vec<RowCheck> {
    builtin_matrix()
        .iter()
        .map(|r| RowCheck {
            relation: r.relation(),
            source: Refinement::classify(r.pco_source_card, r.tfo.source_card),
            target: Refinement::classify(r.pco_target_card, r.tfo.target_card),
        })
        .collect()
}

/// Smallest count the child admits and the parent forbids.
fn first_excess(child: Multiplicity, parent: Multiplicity) -> Option<u32> {
    if child.lower < parent.lower {
        return Some(child.lower);
    }
    match (child.upper, parent.upper) {
        (None, Some(p)) => Some(p + 1),
        (Some(c), Some(p)) if c > p => Some(p + 1),
        _ => None,
    }
}

/// One `R001` warning per widened row end, in table order.
pub fn check_schema_refinement() -> Vec<Finding> {
    let mut out = Vec::new();
    for (row, check) in builtin_matrix().iter().zip(classify_matrix()) {
        let ends = [
            ("source", check.source, row.pco_source_card, row.tfo.source_card),
            ("target", check.target, row.pco_target_card, row.tfo.target_card),
        ];
        for (end, class, child, parent) in ends {
            if class != Refinement::Widening {
                continue;
            }
            let n = first_excess(child, parent).expect("widening has an excess count");
            out.push(Finding::new(
                "R001",
                Severity::Warning,
                Vec::new(),
                format!(
                    "{} {end} card {child} widens {} {end} card {parent} (admits {n})",
                    row.pco.name(),
                    row.tfo.name
                ),
            ));
        }
    }
    out
}

/// Maps every relation edge to its ThingFO parent relationship, in edge order.
/// Composition edges are not lifted.
pub fn lift(graph: &InstanceGraph) -> Vec<(TfoRelationName, EntityId, EntityId)> {
    graph
        .relations()
        .map(|e| (row(e.rel).tfo.name, e.source.clone(), e.target.clone()))
        .collect()
}

/// Tab-separated table with a heading line, columns as printed.
pub fn render_matrix_text() -> String {
    let mut out = COLUMNS.join("\t");
    out.push('\n');
    for r in builtin_matrix() {
        out.push_str(&r.cells().join("\t"));
        out.push('\n');
    }
    out
}

/// ```text
/// procco-matrix 1
/// row consumes * WorkEntity 1..* ProductEntity interacts_with_other 1..* "(Power of) Thing" 1..* "Thing"
/// ```
pub fn render_matrix_canonical() -> String {
    let mut out = format!("{MATRIX_HEADER}\n");
    for r in builtin_matrix() {
        out.push_str(&format!(
            "row {} {} {} {} {} {} {} {} {} {}\n",
            r.relation().ident(),
            r.pco_source_card,
            r.pco.source_kind,
            r.pco_target_card,
            r.pco.target_kind,
            r.tfo.name.ident(),
            r.tfo.source_card,
            quote(r.tfo.source_term),
            r.tfo.target_card,
            quote(r.tfo.target_term),
        ));
    }
    out
}

/// One line per row: `name: source <class>, target <class>`.
pub fn render_check_text(checks: &[RowCheck]) -> String {
    checks
        .iter()
        .map(|c| format!("{}: source {}, target {}\n", c.relation, c.source, c.target))
        .collect()
}

/// One `check <ident> <source class> <target class>` line per row.
pub fn render_check_canonical(checks: &[RowCheck]) -> String {
    checks
        .iter()
        .map(|c| format!("check {} {} {}\n", c.relation.ident(), c.source, c.target))
        .collect()
}
