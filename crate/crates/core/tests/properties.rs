use std::collections::BTreeSet;

use procco_core::graph::{export_canonical, import_canonical, InstanceGraph};
use procco_core::parser::{format, parse_str};
use procco_core::query::{axiom_witness_with, descendants, AxiomReading};
use procco_core::refinement::lift;
use procco_core::schema::{AxiomId, TermKind};
use procco_core::validator::{
    check_attributes, check_axiom_with, naive_axiom_oracle_with, validate, validate_with, Finding, Mode, Severity,
    ValidationOptions,
};
use procco_testkit::{random_graph, repair_axioms};
use proptest::prelude::*;

fn keys(findings: &[Finding]) -> BTreeSet<(&'static str, Vec<String>, String)> {
    findings
        .iter()
        .map(|f| {
            (
                f.code,
                f.subjects.iter().map(|s| s.to_string()).collect(),
                f.message.clone(),
            )
        })
        .collect()
}

fn sorted(mut v: Vec<Finding>) -> Vec<Finding> {
    v.sort();
    v
}

fn endpoints_exist(g: &InstanceGraph) -> bool {
    g.relations()
        .all(|r| g.contains(r.source.as_str()) && g.contains(r.target.as_str()))
        && g.composition()
            .all(|c| g.contains(c.parent.as_str()) && g.contains(c.child.as_str()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn referential_integrity(seed in any::<u64>()) {
        let g = random_graph(seed);
        prop_assert!(endpoints_exist(&g));
        prop_assert!(g.entity_count() <= 12);
    }

    #[test]
    fn canonical_round_trip(seed in any::<u64>()) {
        let g = random_graph(seed);
        let text = export_canonical(&g);
        prop_assert_eq!(&text, &export_canonical(&g));
        let back = import_canonical(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(export_canonical(&back), text);
    }

    #[test]
    fn dsl_round_trip(seed in any::<u64>()) {
        let g = random_graph(seed);
        let text = format(&g);
        prop_assert_eq!(&text, &format(&g));
        let o = parse_str(&text);
        prop_assert!(o.errors().next().is_none(), "{:?}", o.diagnostics);
        // The only diagnostics on formatted output are type-mismatch
        // warnings, exactly one per T003 the validator reports.
        let t003 = check_attributes(&g.clone().freeze()).iter().filter(|f| f.code == "T003").count();
        prop_assert!(o.diagnostics.iter().all(|d| d.code == "P006" && d.severity == Severity::Warning));
        prop_assert_eq!(o.diagnostics.len(), t003);
        prop_assert_eq!(o.graph.unwrap(), g);
    }

    #[test]
    fn oracle_equivalence(seed in any::<u64>()) {
        let g = random_graph(seed).freeze();
        for reading in [AxiomReading::Direct, AxiomReading::Transitive] {
            for a in AxiomId::ALL {
                prop_assert_eq!(
                    sorted(check_axiom_with(&g, a, reading)),
                    sorted(naive_axiom_oracle_with(&g, a, reading)),
                    "{} {:?}", a, reading
                );
            }
        }
    }

    #[test]
    fn strict_is_a_superset_of_lenient(seed in any::<u64>()) {
        let g = random_graph(seed).freeze();
        let lenient = validate(&g, Mode::Lenient);
        let strict = validate(&g, Mode::Strict);
        prop_assert!(keys(&lenient.findings).is_subset(&keys(&strict.findings)));
        for f in &lenient.findings {
            let upgraded = strict.findings.iter().find(|s| s.code == f.code && s.subjects == f.subjects && s.message == f.message).unwrap();
            prop_assert!(upgraded.severity >= f.severity);
        }
    }

    #[test]
    fn validation_is_deterministic(seed in any::<u64>()) {
        let g = random_graph(seed);
        let opts = ValidationOptions::new(Mode::Strict);
        prop_assert_eq!(validate_with(&g.clone().freeze(), &opts), validate_with(&g.freeze(), &opts));
    }

    #[test]
    fn witness_agrees_with_checker(seed in any::<u64>()) {
        let g = random_graph(seed).freeze();
        for reading in [AxiomReading::Direct, AxiomReading::Transitive] {
            for a in AxiomId::ALL {
                let violated: BTreeSet<(String, String)> = check_axiom_with(&g, a, reading)
                    .into_iter()
                    .map(|f| (f.subjects[0].to_string(), f.subjects[1].to_string()))
                    .collect();
                for e in g.relations().filter(|e| e.rel == a.relation()) {
                    let (x, y) = (e.source.as_str(), e.target.as_str());
                    let conforms = g.kind_of(x).unwrap().is_subkind_of(a.composite()) && g.kind_of(y).unwrap().is_subkind_of(a.object());
                    if !conforms {
                        continue;
                    }
                    let w = axiom_witness_with(&g, a, &[x, y], reading).unwrap();
                    prop_assert_eq!(w.satisfied, !violated.contains(&(x.to_string(), y.to_string())));
                    prop_assert_eq!(w.satisfied, w.witness.is_some());
                }
            }
        }
    }

    #[test]
    fn grounding(seed in any::<u64>()) {
        let g = repair_axioms(random_graph(seed)).freeze();
        for a in AxiomId::ALL {
            prop_assert!(check_axiom_with(&g, a, AxiomReading::Direct).is_empty());
        }
        for a in AxiomId::ALL {
            for e in g.relations().filter(|e| e.rel == a.relation()) {
                let (x, y) = (&e.source, &e.target);
                let xk = g.kind_of(x.as_str()).unwrap();
                if !(xk.is_subkind_of(a.composite()) && g.kind_of(y.as_str()).unwrap().is_subkind_of(a.object())) {
                    continue;
                }
                let grounded = descendants(&g, x.as_str(), true)
                    .unwrap()
                    .iter()
                    .any(|t| g.kind_of(t.as_str()) == Some(TermKind::Task) && g.has_edge(a.relation(), t, y));
                prop_assert!(grounded, "{} {} {} not grounded", x, a.relation(), y);
            }
        }
    }

    #[test]
    fn lifting_preserves_edges(seed in any::<u64>()) {
        let g = random_graph(seed);
        prop_assert_eq!(lift(&g).len(), g.relations().count());
    }
}

// Guards against the properties above passing vacuously.
#[test]
fn generator_exercises_every_axiom() {
    let mut hits = [0usize; 6];
    let mut reading_differs = 0;
    for seed in 0..500 {
        let g = random_graph(seed).freeze();
        for (i, a) in AxiomId::ALL.into_iter().enumerate() {
            let direct = check_axiom_with(&g, a, AxiomReading::Direct);
            if !direct.is_empty() {
                hits[i] += 1;
            }
            if direct != check_axiom_with(&g, a, AxiomReading::Transitive) {
                reading_differs += 1;
            }
        }
    }
    println!("violating graphs per axiom: {hits:?}; reading differs: {reading_differs}");
    assert!(hits.iter().all(|&h| h >= 10), "{hits:?}");
    assert!(reading_differs > 0);
}
