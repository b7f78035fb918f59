use procco_core::schema::{builtin_schema, AxiomId};
use procco_core::text::quote;

pub const SCHEMA_HEADER: &str = "procco-schema 1";

pub fn text() -> String {
    let s = builtin_schema();
    let mut out = format!(
        "terms {}\nattributes {}\nrelationships {}\naxioms {}\n",
        s.terms.len(),
        s.attributes.len(),
        s.relationships.len(),
        s.axiom_ids.len()
    );

    out.push_str("\n# terms\n");
    for t in &s.terms {
        let parent = t.kind.parent().map_or("-", |p| p.name());
        out.push_str(&format!(
            "{} ({}) is-a {parent} <<{}>>\n",
            t.kind,
            t.label,
            t.tfo_stereotype.label()
        ));
        for a in s.own_attributes(t.kind) {
            out.push_str(&format!("  {}: {}\n", a.name, a.value_type.name()));
        }
    }

    out.push_str("\n# relationships\n");
    for r in &s.relationships {
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            r.source_mult,
            r.source_kind,
            r.name(),
            r.target_mult,
            r.target_kind
        ));
    }

    out.push_str("\n# partitions\n");
    for p in s.partitions.iter() {
        let children: Vec<&str> = p.children.iter().map(|c| c.name()).collect();
        out.push_str(&format!("{} {} = {}\n", p.parent, p.labels(), children.join(" | ")));
    }

    out.push_str("\n# axioms\n");
    for a in AxiomId::ALL {
        out.push_str(&format!("{a}: {}\n", a.description()));
    }
    out
}

/// ```text
/// procco-schema 1
/// term Activity WorkEntity "Activity" Thing
/// attr WorkEntity name text
/// rel consumes * WorkEntity 1..* ProductEntity
/// partition WorkEntity disjoint complete Activity Task WorkProcess
/// axiom A1 WorkProcess consumes ProductEntity Activity
/// ```
pub fn canonical() -> String {
    let s = builtin_schema();
    let mut out = format!("{SCHEMA_HEADER}\n");
    for t in &s.terms {
        let parent = t.kind.parent().map_or("-", |p| p.name());
        out.push_str(&format!(
            "term {} {parent} {} {}\n",
            t.kind,
            quote(t.label),
            t.tfo_stereotype.label().replace(' ', "_")
        ));
    }
    for a in &s.attributes {
        out.push_str(&format!("attr {} {} {}\n", a.owner, a.key(), a.value_type.name()));
    }
    for r in &s.relationships {
        out.push_str(&format!(
            "rel {} {} {} {} {}\n",
            r.relation.ident(),
            r.source_mult,
            r.source_kind,
            r.target_mult,
            r.target_kind
        ));
    }
    for p in s.partitions.iter() {
        let children: Vec<&str> = p.children.iter().map(|c| c.name()).collect();
        out.push_str(&format!(
            "partition {} {} {} {}\n",
            p.parent,
            if p.disjoint { "disjoint" } else { "overlapping" },
            if p.complete { "complete" } else { "incomplete" },
            children.join(" ")
        ));
    }
    for a in AxiomId::ALL {
        out.push_str(&format!(
            "axiom {a} {} {} {} {}\n",
            a.composite(),
            a.relation().ident(),
            a.object(),
            a.part()
        ));
    }
    out
}
