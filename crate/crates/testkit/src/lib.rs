//! Seeded random instance graphs and helpers shared by procco's test suites.

use procco_core::graph::{Attributes, InstanceGraph, Scalar};
use procco_core::schema::{builtin_schema, AxiomId, Relation, TermKind};
use procco_core::validator::naive_axiom_oracle;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use rand_chacha::ChaCha8Rng as TestRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Builds a graph from literal tables, panicking on any rejected insertion.
pub fn graph_from(
    entities: &[(&str, TermKind)],
    comps: &[(&str, &str)],
    rels: &[(Relation, &str, &str)],
) -> InstanceGraph {
    let mut g = InstanceGraph::new();
    for (id, kind) in entities {
        g.add_entity(id, *kind, Attributes::new()).unwrap();
    }
    for (p, c) in comps {
        g.add_composition(p, c).unwrap();
    }
    for (r, s, t) in rels {
        g.add_relation(*r, s, t).unwrap();
    }
    g
}

#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub max_entities: usize,
    /// Chance that an attribute is written at all, per candidate.
    pub attribute_rate: f64,
    /// Chance that a relation edge ignores the relationship's endpoint kinds.
    pub off_domain_rate: f64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_entities: 12,
            attribute_rate: 0.3,
            off_domain_rate: 0.1,
        }
    }
}

const ID_PREFIXES: [&str; 6] = ["e", "x.", "a-", "_", "Wp_", "n.o-"];

const TEXTS: [&str; 10] = [
    "",
    "plain",
    "with \"quotes\"",
    "back\\slash",
    "line\nbreak",
    "tab\there",
    "# not a comment",
    "ünïcødé ✓",
    "ctrl \u{1}\u{7f}",
    "} = rel entity",
];

const DATES: [&str; 5] = [
    "2024-03-01",
    "1999-12-31T23:59:59Z",
    "2024-02-29T09:30:00+01:00",
    "2024-03-01T09:30:00.125",
    "2030-01-01T00:00",
];

/// Kinds the axioms and multiplicity checks care about get extra weight.
const HOT_KINDS: [TermKind; 8] = [
    TermKind::WorkProcess,
    TermKind::WorkProcess,
    TermKind::Activity,
    TermKind::Activity,
    TermKind::Task,
    TermKind::Artifact,
    TermKind::Outcome,
    TermKind::Role,
];

fn random_kind(rng: &mut impl Rng) -> TermKind {
    if rng.gen_bool(0.6) {
        *HOT_KINDS.choose(rng).unwrap()
    } else {
        *TermKind::ALL.choose(rng).unwrap()
    }
}

fn random_scalar(rng: &mut impl Rng) -> Scalar {
    match rng.gen_range(0..3) {
        0 => Scalar::text(*TEXTS.choose(rng).unwrap()),
        1 => Scalar::parse_literal(DATES.choose(rng).unwrap()).unwrap(),
        _ => {
            let v: f64 = match rng.gen_range(0..4) {
                0 => rng.gen_range(-1000..1000) as f64,
                1 => rng.gen::<f64>() * 1e-6,
                2 => rng.gen_range(-1e12..1e12),
                _ => -0.0,
            };
            Scalar::Number(procco_core::graph::Number::new(v).unwrap())
        }
    }
}

fn random_attributes(rng: &mut impl Rng, kind: TermKind, config: &GenConfig) -> Attributes {
    let mut keys: Vec<String> = builtin_schema().attributes_for(kind).iter().map(|a| a.key()).collect();
    keys.push("colour".into());
    let mut attrs = Attributes::new();
    for key in keys {
        if rng.gen_bool(config.attribute_rate) {
            attrs.insert(key, random_scalar(rng));
        }
    }
    attrs
}

pub fn random_graph(seed: u64) -> InstanceGraph {
    random_graph_with(&mut rng(seed), &GenConfig::default())
}

pub fn random_graph_with(rng: &mut impl Rng, config: &GenConfig) -> InstanceGraph {
    let mut g = InstanceGraph::new();
    let n = rng.gen_range(0..=config.max_entities);
    for i in 0..n {
        let kind = random_kind(rng);
        let id = format!("{}{i}", ID_PREFIXES.choose(rng).unwrap());
        let attrs = random_attributes(rng, kind, config);
        g.add_entity(&id, kind, attrs).unwrap();
    }
    let ids: Vec<(String, TermKind)> = g.entities().map(|e| (e.id.to_string(), e.kind)).collect();
    if ids.is_empty() {
        return g;
    }
    let of_kind = |pred: &dyn Fn(TermKind) -> bool| -> Vec<&str> {
        ids.iter()
            .filter(|(_, k)| pred(*k))
            .map(|(id, _)| id.as_str())
            .collect()
    };
    let containers = of_kind(&|k| matches!(k, TermKind::WorkProcess | TermKind::Activity));
    let work = of_kind(&|k| k.is_subkind_of(TermKind::WorkEntity));

    // Composition: mostly well-kinded attempts; rejected ones are skipped.
    if !containers.is_empty() && !work.is_empty() {
        for _ in 0..rng.gen_range(0..=n) {
            let p = containers.choose(rng).unwrap();
            let c = work.choose(rng).unwrap();
            let _ = g.add_composition(p, c);
        }
    }

    for _ in 0..rng.gen_range(0..=2 * n) {
        let rel = if rng.gen_bool(0.6) {
            *[Relation::Consumes, Relation::Produces, Relation::Involves]
                .choose(rng)
                .unwrap()
        } else {
            *Relation::ALL.choose(rng).unwrap()
        };
        let schema = rel.schema();
        let pick = |rng: &mut dyn rand::RngCore, kind: TermKind| -> Option<String> {
            let pool: Vec<&str> = ids
                .iter()
                .filter(|(_, k)| k.is_subkind_of(kind))
                .map(|(id, _)| id.as_str())
                .collect();
            pool.choose(rng).map(|s| s.to_string())
        };
        let (s, t) = if rng.gen_bool(config.off_domain_rate) {
            (ids.choose(rng).unwrap().0.clone(), ids.choose(rng).unwrap().0.clone())
        } else {
            match (pick(rng, schema.source_kind), pick(rng, schema.target_kind)) {
                (Some(s), Some(t)) => (s, t),
                _ => continue,
            }
        };
        g.add_relation(rel, &s, &t).unwrap();
    }
    g
}

/// Adds edges (and, where a composite has no suitable part, fresh parts)
/// until the oracle reports no axiom violation under the direct reading.
pub fn repair_axioms(mut g: InstanceGraph) -> InstanceGraph {
    let mut fresh = 0usize;
    loop {
        let frozen = g.clone().freeze();
        let violations: Vec<_> = AxiomId::ALL
            .into_iter()
            .flat_map(|a| naive_axiom_oracle(&frozen, a).into_iter().map(move |f| (a, f)))
            .collect();
        if violations.is_empty() {
            return g;
        }
        for (axiom, finding) in violations {
            let [x, y] = &finding.subjects[..] else {
                unreachable!("axiom findings bind two subjects")
            };
            let part = frozen
                .children(x.as_str())
                .iter()
                .map(|(c, _)| c)
                .find(|c| {
                    let k = frozen.kind_of(c.as_str()).unwrap();
                    k.is_subkind_of(axiom.composite()) || k.is_subkind_of(axiom.part())
                })
                .map(|c| c.to_string());
            let part = match part {
                Some(p) => p,
                None => {
                    let id = loop {
                        let id = format!("fix{fresh}");
                        fresh += 1;
                        if !g.contains(&id) {
                            break id;
                        }
                    };
                    g.add_entity(&id, axiom.part(), Attributes::new()).unwrap();
                    g.add_composition(x.as_str(), &id).unwrap();
                    id
                }
            };
            g.add_relation(axiom.relation(), &part, y.as_str()).unwrap();
        }
    }
}
