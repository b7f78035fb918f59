//! Ground-truth axiom evaluation by exhaustive enumeration.
//!
//! Each axiom is written out as a first-order formula and evaluated over the
//! finite domain of all entities. Predicates are answered by scanning the
//! graph's raw edge lists; nothing here uses the frozen-graph indexes or the
//! witness search, so this path stays independent of [`super::check_axiom`].
//! Cost grows with the product of domain sizes: small graphs only.

use crate::graph::{EntityId, FrozenGraph, InstanceGraph};
use crate::query::AxiomReading;
use crate::schema::{AxiomId, Relation, TermKind};

use super::axioms::axiom_finding;
use super::Finding;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Var(usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[allow(clippy::enum_variant_names)]
enum CompPred {
    SubProcessOf,
    SubActivityOf,
    PartOf,
}

#[derive(Debug, Clone)]
enum Formula {
    Is(TermKind, Var),
    Rel(Relation, Var, Var),
    /// `pred(part, whole)`
    Comp(CompPred, Var, Var),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

use Formula::*;

fn and(fs: impl IntoIterator<Item = Formula>) -> Formula {
    And(fs.into_iter().collect())
}

fn exists(v: Var, body: Formula) -> Formula {
    Exists(v, Box::new(body))
}

/// `∀x ∀y: composite(x) ∧ object(y) ∧ rel(x, y) →
///     [∃z: same(z) ∧ rel(z, y) ∧ nested(z, x)] ∨ [∃w: part(w) ∧ rel(w, y) ∧ partOf(w, x)]`
fn cascade(composite: TermKind, object: TermKind, rel: Relation, nested: CompPred, part: TermKind) -> Formula {
    let (x, y, z, w) = (Var(0), Var(1), Var(2), Var(3));
    let antecedent = and([Is(composite, x), Is(object, y), Rel(rel, x, y)]);
    let consequent = Or(vec![
        exists(z, and([Is(composite, z), Rel(rel, z, y), Comp(nested, z, x)])),
        exists(w, and([Is(part, w), Rel(rel, w, y), Comp(CompPred::PartOf, w, x)])),
    ]);
    Forall(
        x,
        Box::new(Forall(y, Box::new(Implies(Box::new(antecedent), Box::new(consequent))))),
    )
}

fn formula(axiom: AxiomId) -> Formula {
    use CompPred::*;
    use Relation::*;
    use TermKind::*;
    match axiom {
        AxiomId::A1 => cascade(WorkProcess, ProductEntity, Consumes, SubProcessOf, Activity),
        AxiomId::A2 => cascade(Activity, ProductEntity, Consumes, SubActivityOf, Task),
        AxiomId::A3 => cascade(WorkProcess, WorkProduct, Produces, SubProcessOf, Activity),
        AxiomId::A4 => cascade(Activity, WorkProduct, Produces, SubActivityOf, Task),
        AxiomId::A5 => cascade(WorkProcess, Role, Involves, SubProcessOf, Activity),
        AxiomId::A6 => cascade(Activity, Role, Involves, SubActivityOf, Task),
    }
}

struct Model<'g> {
    domain: Vec<(&'g EntityId, TermKind)>,
    relations: Vec<(Relation, &'g EntityId, &'g EntityId)>,
    /// (whole, part, predicate) triples that hold.
    composition: Vec<(&'g EntityId, &'g EntityId, CompPred)>,
}

impl<'g> Model<'g> {
    fn new(graph: &'g InstanceGraph, reading: AxiomReading) -> Model<'g> {
        let domain = graph.entities().map(|e| (&e.id, e.kind)).collect();
        let relations = graph.relations().map(|r| (r.rel, &r.source, &r.target)).collect();
        let kind_of = |id: &EntityId| graph.entity(id.as_str()).map(|e| e.kind);
        let direct: Vec<(&EntityId, &EntityId)> = graph.composition().map(|c| (&c.parent, &c.child)).collect();
        let pairs = match reading {
            AxiomReading::Direct => direct,
            AxiomReading::Transitive => transitive_closure(direct),
        };
        // Direct edges are labelled by endpoint kinds exactly as their
        // flavors are; transitive pairs make every predicate "is a part, at
        // any depth, of".
        let mut composition = Vec::new();
        for (whole, part) in pairs {
            let labels: &[CompPred] = match (reading, kind_of(whole), kind_of(part)) {
                (AxiomReading::Transitive, _, _) => {
                    &[CompPred::SubProcessOf, CompPred::SubActivityOf, CompPred::PartOf]
                }
                (_, Some(TermKind::WorkProcess), Some(TermKind::WorkProcess)) => &[CompPred::SubProcessOf],
                (_, Some(TermKind::Activity), Some(TermKind::Activity)) => &[CompPred::SubActivityOf],
                _ => &[CompPred::PartOf],
            };
            composition.extend(labels.iter().map(|&l| (whole, part, l)));
        }
        Model {
            domain,
            relations,
            composition,
        }
    }

    fn eval(&self, f: &Formula, env: &mut [usize; 4]) -> bool {
        match f {
            Is(kind, v) => self.domain[env[v.0]].1.is_subkind_of(*kind),
            Rel(rel, a, b) => {
                let (a, b) = (self.domain[env[a.0]].0, self.domain[env[b.0]].0);
                self.relations.iter().any(|(r, s, t)| r == rel && *s == a && *t == b)
            }
            Comp(pred, part, whole) => {
                let (part, whole) = (self.domain[env[part.0]].0, self.domain[env[whole.0]].0);
                self.composition
                    .iter()
                    .any(|(w, p, l)| l == pred && *w == whole && *p == part)
            }
            And(fs) => fs.iter().all(|f| self.eval(f, env)),
            Or(fs) => fs.iter().any(|f| self.eval(f, env)),
            Implies(a, b) => !self.eval(a, env) || self.eval(b, env),
            Forall(v, body) => (0..self.domain.len()).all(|i| {
                env[v.0] = i;
                self.eval(body, env)
            }),
            Exists(v, body) => (0..self.domain.len()).any(|i| {
                env[v.0] = i;
                self.eval(body, env)
            }),
        }
    }

    /// Bindings of the two outer universals under which the body is false.
    fn counterexamples(&self, f: &Formula) -> Vec<(usize, usize)> {
        let Forall(x, inner) = f else {
            unreachable!("axioms start with two universals")
        };
        let Forall(y, body) = inner.as_ref() else {
            unreachable!("axioms start with two universals")
        };
        let mut out = Vec::new();
        let mut env = [0usize; 4];
        for i in 0..self.domain.len() {
            for j in 0..self.domain.len() {
                env[x.0] = i;
                env[y.0] = j;
                if !self.eval(body, &mut env) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn transitive_closure<'g>(mut pairs: Vec<(&'g EntityId, &'g EntityId)>) -> Vec<(&'g EntityId, &'g EntityId)> {
    loop {
        let mut added = Vec::new();
        for &(a, b) in &pairs {
            for &(c, d) in &pairs {
                if b == c && !pairs.contains(&(a, d)) && !added.contains(&(a, d)) {
                    added.push((a, d));
                }
            }
        }
        if added.is_empty() {
            return pairs;
        }
        pairs.extend(added);
    }
}

/// Direct-reading [`naive_axiom_oracle_with`].
pub fn naive_axiom_oracle(graph: &FrozenGraph, axiom: AxiomId) -> Vec<Finding> {
    naive_axiom_oracle_with(graph, axiom, AxiomReading::Direct)
}

pub fn naive_axiom_oracle_with(graph: &FrozenGraph, axiom: AxiomId, reading: AxiomReading) -> Vec<Finding> {
    let model = Model::new(graph.graph(), reading);
    model
        .counterexamples(&formula(axiom))
        .into_iter()
        .map(|(i, j)| axiom_finding(axiom, model.domain[i].0, model.domain[j].0))
        .collect()
}
