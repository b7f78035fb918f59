//! Static checks over a frozen instance graph.
//!
//! Finding codes are part of the public contract:
//!
//! | code | severity | meaning |
//! |------|----------|---------|
//! | `T001` | error | relationship edge whose source or target kind is outside the relationship's domain or range |
//! | `T002` | warning | attribute not defined for the entity's kind |
//! | `T003` | warning | attribute value of the wrong type |
//! | `M001` | error | more targets than the target multiplicity allows |
//! | `M002` | warning (lenient) / error (strict) | fewer targets than required |
//! | `M003` | error | more sources than the source multiplicity allows |
//! | `M004` | warning (lenient) / error (strict) | fewer sources than required |
//! | `P001` | error | instance of a kind that heads a complete generalization set |
//! | `C001` | warning (lenient) / error (strict) | Work Process or Activity without parts |
//! | `C002` | warning, strict only | part shared by several containers |
//! | `A1`..`A6` | error | axiom violation; subjects are the violating binding |
//! | `R001` | warning | refinement row widens its ThingFO parent's cardinality |

mod axioms;
mod checks;
mod oracle;
mod report;

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{EntityId, FrozenGraph};
use crate::schema::{AxiomId, PartitionSet};

pub use crate::query::AxiomReading;
pub use axioms::{check_axiom, check_axiom_with};
pub use checks::{check_attributes, check_composition, check_multiplicities, check_partitions, check_types};
pub use oracle::{naive_axiom_oracle, naive_axiom_oracle_with};
pub use report::{render_canonical, render_text, REPORT_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Mode {
    #[default]
    Lenient,
    Strict,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Lenient => "lenient",
            Mode::Strict => "strict",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Warning,
    Error,
}

impl Severity {
    pub fn name(self) -> &'static str {
        match self {
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }

    /// Error in strict mode, warning otherwise.
    pub(crate) fn for_lower_bound(mode: Mode) -> Severity {
        match mode {
            Mode::Lenient => Severity::Warning,
            Mode::Strict => Severity::Error,
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One coded diagnostic about a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Finding {
    pub code: &'static str,
    pub subjects: Vec<EntityId>,
    pub message: String,
    pub severity: Severity,
}

impl Finding {
    pub fn new(code: &'static str, severity: Severity, subjects: Vec<EntityId>, message: impl Into<String>) -> Finding {
        Finding {
            code,
            subjects,
            message: message.into(),
            severity,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }

    pub fn subject_list(&self) -> String {
        if self.subjects.is_empty() {
            "-".to_string()
        } else {
            self.subjects.iter().map(EntityId::as_str).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}: {}",
            self.code,
            self.severity,
            self.subject_list(),
            self.message
        )
    }
}

/// Sorts findings into the canonical order: code, subjects, message.
pub fn sort_findings(findings: &mut [Finding]) {
    findings.sort();
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationOptions {
    pub mode: Mode,
    pub reading: AxiomReading,
    pub partitions: PartitionSet,
}

impl ValidationOptions {
    pub fn new(mode: Mode) -> ValidationOptions {
        ValidationOptions {
            mode,
            ..ValidationOptions::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub mode: Mode,
    pub findings: Vec<Finding>,
    pub counts: BTreeMap<&'static str, usize>,
}

impl ValidationReport {
    pub fn from_findings(mode: Mode, mut findings: Vec<Finding>) -> ValidationReport {
        sort_findings(&mut findings);
        findings.dedup();
        let mut counts = BTreeMap::new();
        for f in &findings {
            *counts.entry(f.code).or_insert(0) += 1;
        }
        ValidationReport { mode, findings, counts }
    }

    pub fn is_clean(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn has_errors(&self) -> bool {
        self.findings.iter().any(Finding::is_error)
    }

    pub fn count(&self, code: &str) -> usize {
        self.counts.get(code).copied().unwrap_or(0)
    }

    pub fn with_code<'a>(&'a self, code: &'a str) -> impl Iterator<Item = &'a Finding> + 'a {
        self.findings.iter().filter(move |f| f.code == code)
    }
}

/// Runs every check with default partitions and the direct axiom reading.
pub fn validate(graph: &FrozenGraph, mode: Mode) -> ValidationReport {
    validate_with(graph, &ValidationOptions::new(mode))
}

pub fn validate_with(graph: &FrozenGraph, options: &ValidationOptions) -> ValidationReport {
    let mode = options.mode;
    let mut findings = check_types(graph);
    findings.extend(check_attributes(graph));
    findings.extend(check_multiplicities(graph, mode));
    findings.extend(check_partitions(graph, &options.partitions));
    findings.extend(check_composition(graph, mode));
    for axiom in AxiomId::ALL {
        findings.extend(check_axiom_with(graph, axiom, options.reading));
    }
    ValidationReport::from_findings(mode, findings)
}
