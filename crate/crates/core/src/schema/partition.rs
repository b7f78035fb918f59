//! Generalization-set constraints and the plain-text override file.
//!
//! Override file syntax, one entry per line:
//!
//! ```text
//! # parent term = disjoint|overlapping, complete|incomplete
//! WorkResource = disjoint, complete
//! Artifact = overlapping incomplete
//! Agent = none
//! ```
//!
//! The two flags may be separated by commas, `+` or whitespace. `none`
//! removes the parent's partition. Entries not mentioned keep their default.

use std::collections::BTreeMap;

use thiserror::Error;

use super::TermKind;

/// A generalization set over all direct taxonomic children of `parent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub parent: TermKind,
    pub children: Vec<TermKind>,
    pub disjoint: bool,
    pub complete: bool,
}

impl Partition {
    /// Builds the partition over every direct child of `parent`; `None` when
    /// `parent` has no children.
    pub fn over(parent: TermKind, disjoint: bool, complete: bool) -> Option<Partition> {
        let children: Vec<TermKind> = TermKind::ALL
            .iter()
            .copied()
            .filter(|k| k.parent() == Some(parent))
            .collect();
        (!children.is_empty()).then_some(Partition {
            parent,
            children,
            disjoint,
            complete,
        })
    }

    pub fn labels(&self) -> String {
        format!(
            "{{{}, {}}}",
            if self.disjoint { "disjoint" } else { "overlapping" },
            if self.complete { "complete" } else { "incomplete" }
        )
    }

    pub(super) fn check(&self) -> Result<(), String> {
        if self.children.is_empty() {
            return Err(format!("partition over {} has no children", self.parent));
        }
        match self.children.iter().find(|c| c.parent() != Some(self.parent)) {
            Some(c) => Err(format!("{c} is not a direct child of {}", self.parent)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("partition config line {line}: {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

/// The active set of partitions, keyed by parent term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSet {
    by_parent: BTreeMap<TermKind, Partition>,
}

impl Default for PartitionSet {
    fn default() -> Self {
        PartitionSet::defaults()
    }
}

impl PartitionSet {
    pub fn defaults() -> PartitionSet {
        use TermKind::*;
        let mut set = PartitionSet {
            by_parent: BTreeMap::new(),
        };
        for (parent, disjoint, complete) in [
            (WorkEntity, true, true),
            (ProductEntity, true, true),
            (Agent, true, true),
            (WorkResource, true, false),
            (WorkProduct, true, false),
        ] {
            let p = Partition::over(parent, disjoint, complete).expect("default partition parents have children");
            set.by_parent.insert(parent, p);
        }
        set
    }

    pub fn iter(&self) -> impl Iterator<Item = &Partition> {
        self.by_parent.values()
    }

    pub fn get(&self, parent: TermKind) -> Option<&Partition> {
        self.by_parent.get(&parent)
    }

    pub fn len(&self) -> usize {
        self.by_parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_parent.is_empty()
    }

    /// True when instances whose kind is exactly `kind` are forbidden because
    /// `kind` heads a complete partition.
    pub fn is_abstract(&self, kind: TermKind) -> bool {
        self.get(kind).is_some_and(|p| p.complete)
    }

    /// Applies an override file on top of the defaults.
    pub fn from_config(text: &str) -> Result<PartitionSet, ConfigError> {
        let mut set = PartitionSet::defaults();
        let mut seen = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| ConfigError { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err("expected `<Term> = <flags>`".to_string()))?;
            let parent: TermKind = key.trim().parse().map_err(|e| err(format!("{e}")))?;
            if let Some(prev) = seen.insert(parent, line) {
                return Err(err(format!("{parent} already configured on line {prev}")));
            }
            let flags: Vec<&str> = value
                .split(|c: char| c == ',' || c == '+' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            if flags == ["none"] {
                set.by_parent.remove(&parent);
                continue;
            }
            let (mut disjoint, mut complete) = (None, None);
            for flag in flags {
                let slot = match flag {
                    "disjoint" | "overlapping" => &mut disjoint,
                    "complete" | "incomplete" => &mut complete,
                    other => return Err(err(format!("unknown flag `{other}`"))),
                };
                if slot.replace(flag == "disjoint" || flag == "complete").is_some() {
                    return Err(err(format!("conflicting or repeated flag `{flag}`")));
                }
            }
            let (Some(disjoint), Some(complete)) = (disjoint, complete) else {
                return Err(err(
                    "expected one of disjoint|overlapping and one of complete|incomplete".to_string(),
                ));
            };
            let partition = Partition::over(parent, disjoint, complete)
                .ok_or_else(|| err(format!("{parent} has no taxonomic children")))?;
            set.by_parent.insert(parent, partition);
        }
        Ok(set)
    }
}
