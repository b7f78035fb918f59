use crate::graph::{InstanceGraph, Scalar};
use crate::text::quote;

/// Deterministic DSL text for `graph`: entities in id order, then `rel`
/// statements, then `comp` statements, sections separated by a blank line.
/// The empty graph formats to the empty string.
pub fn format(graph: &InstanceGraph) -> String {
    let mut sections: Vec<String> = Vec::new();

    let mut entities = String::new();
    for e in graph.entities() {
        if e.attributes.is_empty() {
            entities.push_str(&format!("entity {} : {} {{}}\n", e.id, e.kind));
            continue;
        }
        entities.push_str(&format!("entity {} : {} {{\n", e.id, e.kind));
        for (key, value) in &e.attributes {
            let literal = match value {
                Scalar::Text(s) => quote(s),
                Scalar::Date(d) => d.as_str().to_string(),
                Scalar::Number(n) => n.to_string(),
            };
            entities.push_str(&format!("  {key} = {literal}\n"));
        }
        entities.push_str("}\n");
    }
    sections.push(entities);

    sections.push(
        graph
            .relations()
            .map(|r| format!("rel {} {} -> {}\n", r.rel.ident(), r.source, r.target))
            .collect(),
    );
    sections.push(
        graph
            .composition()
            .map(|c| format!("comp {} contains {}\n", c.parent, c.child))
            .collect(),
    );

    sections.retain(|s| !s.is_empty());
    sections.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Attributes;
    use crate::parser::parse_str;
    use crate::schema::{Relation, TermKind};

    #[test]
    fn empty_graph_is_empty_text() {
        assert_eq!(format(&InstanceGraph::new()), "");
    }

    fn fixture() -> InstanceGraph {
        use TermKind::*;
        let mut g = InstanceGraph::new();
        let mut a = Attributes::new();
        a.insert("name".into(), Scalar::text("Build \"it\"\n\ttoday #1 \u{1}"));
        a.insert(
            "start_date".into(),
            Scalar::parse_literal("2024-03-01T09:30:00+01:00").unwrap(),
        );
        g.add_entity("wp1", WorkProcess, a).unwrap();
        for (id, kind) in [
            ("a1", Activity),
            ("a2", Activity),
            ("t1", Task),
            ("t2", Task),
            ("pe1", Artifact),
            ("r1", Role),
            ("ag1", HumanAgent),
            ("m-1.x", Method),
        ] {
            g.add_entity(id, kind, Attributes::new()).unwrap();
        }
        let mut o = Attributes::new();
        o.insert("value".into(), Scalar::parse_literal("-1e-7").unwrap());
        g.add_entity("out_1", Outcome, o).unwrap();
        for (p, c) in [("wp1", "a1"), ("wp1", "a2"), ("a1", "t1"), ("a2", "t2")] {
            g.add_composition(p, c).unwrap();
        }
        g.add_relation(Relation::Consumes, "wp1", "pe1").unwrap();
        g.add_relation(Relation::Involves, "a1", "r1").unwrap();
        g.add_relation(Relation::IsApplicable, "m-1.x", "t1").unwrap();
        g.add_relation(Relation::Produces, "t2", "out_1").unwrap();
        g
    }

    #[test]
    fn ten_entity_round_trip() {
        let g = fixture();
        assert_eq!(g.entity_count(), 10);
        let text = format(&g);
        assert_eq!(text, format(&g));
        let o = parse_str(&text);
        assert!(o.diagnostics.is_empty(), "{:?}", o.diagnostics);
        assert_eq!(o.graph.unwrap(), g);
    }

    #[test]
    fn layout() {
        let mut g = InstanceGraph::new();
        let mut a = Attributes::new();
        a.insert("name".into(), Scalar::text("T"));
        g.add_entity("t", TermKind::Task, a).unwrap();
        g.add_entity("ag", TermKind::HumanAgent, Attributes::new()).unwrap();
        g.add_relation(Relation::Performs, "ag", "t").unwrap();
        assert_eq!(
            format(&g),
            "entity ag : HumanAgent {}\nentity t : Task {\n  name = \"T\"\n}\n\nrel performs ag -> t\n"
        );
    }
}
