//! JSON views of the domain objects, shared by the CLI and tests.
//!
//! Every top-level CLI object carries a `schema` field; graphs use the
//! same `{vertices, edges}` shape the structured parser accepts, so
//! output can be fed back in.

use serde_json::{json, Value};

use crate::classify::{Classification, CoverageItem, Obstruction};
use crate::cuts::{CrossingClasses, Cut, Join, Suspension};
use crate::fidl::{EdgeTag, FidlConstruction, Lambda};
use crate::graph::{GateReport, Graph, VertexId};
use crate::jsj::{CylinderClass, GocTarget, GraphOfCylinders};
use crate::squares::{CfsReport, DiagonalGraph, Pair, Square};

fn names(g: &Graph, set: &[VertexId]) -> Value {
    Value::Array(set.iter().map(|&v| Value::String(g.name(v).into())).collect())
}

fn pair_json(g: &Graph, p: Pair) -> Value {
    names(g, &[p.0, p.1])
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.names(),
        "edges": g
            .edges()
            .iter()
            .map(|&(u, v)| json!([g.name(u), g.name(v)]))
            .collect::<Vec<_>>(),
    })
}

pub fn gate_json(g: &Graph, gate: &GateReport) -> Value {
    json!({
        "triangle_free": gate.triangle_free,
        "incomplete": gate.incomplete,
        "connected": gate.connected,
        "separating_cliques": gate
            .separating_cliques
            .iter()
            .map(|c| names(g, c))
            .collect::<Vec<_>>(),
        "is_cycle_graph": gate.is_cycle_graph,
        "passes": gate.passes(),
        "reasons": gate.failure_reasons(g),
    })
}

pub fn square_json(g: &Graph, sq: &Square) -> Value {
    json!([pair_json(g, sq.diagonals[0]), pair_json(g, sq.diagonals[1])])
}

pub fn diagonal_graph_json(g: &Graph, dg: &DiagonalGraph) -> Value {
    json!({
        "vertices": dg.vertices.iter().map(|&p| pair_json(g, p)).collect::<Vec<_>>(),
        "edges": dg
            .edges
            .iter()
            .map(|&(a, b, _)| json!([pair_json(g, dg.vertices[a]), pair_json(g, dg.vertices[b])]))
            .collect::<Vec<_>>(),
    })
}

pub fn cfs_json(g: &Graph, rep: &CfsReport) -> Value {
    json!({
        "cfs": rep.cfs,
        "witness_component": rep
            .witness_component
            .as_ref()
            .map(|comp| comp.iter().map(|&p| pair_json(g, p)).collect::<Vec<_>>()),
    })
}

pub fn cut_json(g: &Graph, cut: &Cut) -> Value {
    json!({
        "kind": if cut.is_pair() { "pair" } else { "two_path" },
        "vertices": names(g, &cut.cut_vertices()),
        "pole": pair_json(g, cut.pole),
        "witness": cut.witness.map(|w| g.name(w).to_string()),
        "components": cut.components.iter().map(|c| names(g, c)).collect::<Vec<_>>(),
    })
}

pub fn crossing_json(g: &Graph, classes: &CrossingClasses) -> Value {
    json!({
        "uncrossed": classes.uncrossed.iter().map(|c| cut_json(g, c)).collect::<Vec<_>>(),
        "hanging_collections": classes
            .hanging_collections
            .iter()
            .map(|coll| coll.iter().map(|c| cut_json(g, c)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn join_json(g: &Graph, join: &Join) -> Value {
    json!([names(g, &join.sides.0), names(g, &join.sides.1)])
}

pub fn suspension_json(g: &Graph, s: &Suspension) -> Value {
    json!({
        "pole": pair_json(g, s.pole),
        "suspended": names(g, &s.suspended),
        "maximal_thick_join": s.maximal_thick_join,
        "square": s.square,
    })
}

pub fn goc_json(g: &Graph, goc: &GraphOfCylinders) -> Value {
    let cylinders: Vec<Value> = goc
        .cylinders
        .iter()
        .map(|c| {
            json!({
                "suspension": suspension_json(g, &c.suspension),
                "cuts": c.cuts.iter().map(|cut| cut_json(g, cut)).collect::<Vec<_>>(),
                "annotation": c.annotation.map(|a| match a {
                    CylinderClass::VirtuallyZ2 => "virtually_z2",
                    CylinderClass::VirtuallyFreeTimesZ => "virtually_f_times_z",
                }),
                "pole_pattern_forest": c.pole_pattern_forest,
            })
        })
        .collect();
    let rigids: Vec<Value> = goc
        .rigids
        .iter()
        .map(|r| json!({"vertices": names(g, &r.vertices), "square": r.square}))
        .collect();
    let hangings: Vec<Value> = goc
        .hangings
        .iter()
        .map(|coll| Value::Array(coll.iter().map(|c| cut_json(g, c)).collect()))
        .collect();
    let edges: Vec<Value> = goc
        .edges
        .iter()
        .map(|&(c, t)| match t {
            GocTarget::Rigid(r) => json!({"cylinder": c, "rigid": r}),
            GocTarget::Hanging(h) => json!({"cylinder": c, "hanging": h}),
        })
        .collect();
    json!({
        "cylinders": cylinders,
        "rigids": rigids,
        "hangings": hangings,
        "edges": edges,
        "empty": goc.is_empty(),
    })
}

pub fn lambda_json(g: &Graph, lambda: &Lambda) -> Value {
    let tree = |i: usize| {
        json!({
            "vertices": names(g, &lambda.trees[i].vertices),
            "edges": lambda.trees[i]
                .edges
                .iter()
                .map(|&e| pair_json(g, e))
                .collect::<Vec<_>>(),
        })
    };
    json!({"lambda0": tree(0), "lambda1": tree(1)})
}

pub fn construction_json(g: &Graph, c: &FidlConstruction) -> Value {
    let per_pole: Vec<Value> = c
        .lambda_per_pole
        .iter()
        .map(|t| {
            json!({
                "pole": pair_json(g, t.pole),
                "vertices": names(g, &t.vertices),
                "edges": t
                    .edges
                    .iter()
                    .map(|&(e, tag)| {
                        json!({
                            "edge": pair_json(g, e),
                            "tag": match tag {
                                EdgeTag::Mandatory => "mandatory",
                                EdgeTag::Discretionary => "discretionary",
                            },
                        })
                    })
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let gamma: Vec<Value> = g
        .vertices()
        .map(|v| json!({"vertex": g.name(v), "color": c.coloring.gamma[v]}))
        .collect();
    json!({
        "graph": graph_json(g),
        "diagonal_graph": diagonal_graph_json(g, &c.suspension_tree.diagonal),
        "t_poles": c.suspension_tree.poles.iter().map(|&p| pair_json(g, p)).collect::<Vec<_>>(),
        "t_edges": c
            .suspension_tree
            .edges
            .iter()
            .map(|&(p, q)| json!([pair_json(g, p), pair_json(g, q)]))
            .collect::<Vec<_>>(),
        "coloring": gamma,
        "lambda_per_pole": per_pole,
        "lambda": lambda_json(g, &c.lambda),
        "delta": graph_json(&c.delta),
        "generator_map": c
            .delta_support
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                json!({
                    "generator": c.delta.name(i),
                    "word": [g.name(a), g.name(b)],
                })
            })
            .collect::<Vec<_>>(),
        "discretionary": c.discretionary.iter().map(|&e| pair_json(g, e)).collect::<Vec<_>>(),
    })
}

pub fn obstruction_json(g: &Graph, o: &Obstruction) -> Value {
    let witness = match o {
        Obstruction::NonSuspensionThickJoin(j) | Obstruction::SquareMaximalThickJoin(j) => {
            join_json(g, j)
        }
        Obstruction::UncoveredVertexOrEdge(CoverageItem::Vertex(v)) => {
            json!({"vertex": g.name(*v)})
        }
        Obstruction::UncoveredVertexOrEdge(CoverageItem::Edge((u, v))) => {
            json!({"edge": [g.name(*u), g.name(*v)]})
        }
        Obstruction::PoleWithoutCut(p) => pair_json(g, *p),
        Obstruction::CutNotFromPole(c) => cut_json(g, c),
        Obstruction::RigidNotSquare(set) => names(g, set),
        Obstruction::RigidDiagonalNotPole(set, d) => {
            json!({"set": names(g, set), "diagonal": pair_json(g, *d)})
        }
        Obstruction::SuspensionCycle { pole, cycle } => {
            json!({"pole": pair_json(g, *pole), "cycle": names(g, cycle)})
        }
        Obstruction::TooFewSuspensions => Value::Null,
    };
    json!({
        "kind": o.tag(),
        "witness": witness,
        "description": o.describe(g),
    })
}

pub fn classification_json(g: &Graph, c: &Classification) -> Value {
    match c {
        Classification::Yes(construction) => json!({
            "verdict": "yes",
            "construction": construction_json(g, construction),
        }),
        Classification::No(o) => json!({
            "verdict": "no",
            "obstruction": obstruction_json(g, o),
        }),
        Classification::GateFail(reasons) => json!({
            "verdict": "gate_fail",
            "reasons": reasons,
        }),
    }
}
