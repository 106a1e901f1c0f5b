//! Exhaustive census: on every connected triangle-free gate-passing graph
//! with at most 7 vertices, the classifier's verdict must coincide with a
//! first-principles check of the structural conditions, and every positive
//! instance must satisfy the construction-shape assertions.

mod common;

use common::*;
use treeraag::classify::{
    self, classify, Classification, Obstruction,
};
use treeraag::cuts;
use treeraag::graph::Graph;
use treeraag::jsj;

fn labeled_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0u32..1 << m).map(move |mask| {
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

fn gate_passes(a: &AdjList) -> bool {
    if !a.connected() || !a.triangle_free() {
        return false;
    }
    let complete = (0..a.n).all(|v| a.adj[v].len() == a.n - 1);
    if complete {
        return false;
    }
    // separating vertices and edges
    for v in 0..a.n {
        if a.components_without(&[v]).len() >= 2 {
            return false;
        }
    }
    for u in 0..a.n {
        for &v in &a.adj[u] {
            if v > u && a.components_without(&[u, v]).len() >= 2 {
                return false;
            }
        }
    }
    true
}

#[test]
fn census_agrees_with_first_principles_conditions() {
    let mut checked = 0usize;
    let mut yes_found = 0usize;
    let mut obstruction_kinds: std::collections::BTreeMap<&'static str, usize> =
        std::collections::BTreeMap::new();
    for n in 4..=7 {
        for edges in labeled_graphs(n) {
            let a = AdjList::from_edges(n, &edges);
            if a.adj.iter().any(|l| l.is_empty()) {
                continue; // disconnected for sure; cheap pre-filter
            }
            if !gate_passes(&a) {
                continue;
            }
            let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
            let g = Graph::new(names, &edges).unwrap();
            let verdict = classify(&g).unwrap();
            let expected = oracle_conditions_hold(&a);
            assert_eq!(
                verdict.is_yes(),
                expected,
                "disagreement on n={n} edges {edges:?}"
            );
            match verdict {
                Classification::Yes(construction) => {
                    yes_found += 1;
                    if let Err(msg) = assert_construction_shape(&g, &construction) {
                        panic!("{msg} on n={n} edges {edges:?}");
                    }
                    assert_positive_decomposition(&g, n, &edges);
                }
                Classification::No(obstruction) => {
                    *obstruction_kinds.entry(obstruction.tag()).or_default() += 1;
                    assert_obstruction_reproduces(&g, &obstruction, n, &edges);
                }
                Classification::GateFail(_) => {
                    panic!("gate-passing graph reported a gate failure: n={n} {edges:?}")
                }
            }
            checked += 1;
        }
    }
    println!("census: {checked} gate-passing graphs checked, {yes_found} positive");
    for (kind, count) in &obstruction_kinds {
        println!("  obstruction {kind}: {count}");
    }
    assert!(checked > 100, "census unexpectedly small: {checked}");
    assert!(yes_found > 0, "census found no positive instance");
}

/// Re-runs the checker that produced an obstruction and demands the same
/// witness back.
fn assert_obstruction_reproduces(g: &Graph, obstruction: &Obstruction, n: usize, edges: &[(usize, usize)]) {
    let reproduced = match obstruction {
        Obstruction::NonSuspensionThickJoin(_)
        | Obstruction::SquareMaximalThickJoin(_)
        | Obstruction::UncoveredVertexOrEdge(_)
        | Obstruction::PoleWithoutCut(_)
        | Obstruction::CutNotFromPole(_) => classify::check_suspension_structure(g).unwrap(),
        Obstruction::SuspensionCycle { .. } => classify::check_no_suspension_cycles(g).unwrap(),
        Obstruction::RigidNotSquare(_) | Obstruction::RigidDiagonalNotPole(_, _) => {
            classify::check_rigid_sets_are_squares(g).unwrap()
        }
        Obstruction::TooFewSuspensions => {
            let count = cuts::maximal_suspensions(g).unwrap().len();
            assert!(count < 2, "guard obstruction with {count} suspensions on n={n} {edges:?}");
            return;
        }
    };
    assert_eq!(
        reproduced.as_ref(),
        Some(obstruction),
        "obstruction does not reproduce on n={n} edges {edges:?}"
    );
}

/// On a positive instance the annotated decomposition must show the
/// expected vertex types: no hangings, every cylinder with an acyclic
/// pole pattern, every rigid a square incident to exactly two cylinders.
fn assert_positive_decomposition(g: &Graph, n: usize, edges: &[(usize, usize)]) {
    let goc = jsj::annotate(g, jsj::graph_of_cylinders(g).unwrap()).unwrap();
    assert!(goc.hangings.is_empty(), "hangings on n={n} edges {edges:?}");
    for cyl in &goc.cylinders {
        assert_eq!(
            cyl.pole_pattern_forest,
            Some(true),
            "pole pattern not a forest on n={n} edges {edges:?}"
        );
    }
    for (ri, rigid) in goc.rigids.iter().enumerate() {
        assert_eq!(
            rigid.square,
            Some(true),
            "non-square rigid on n={n} edges {edges:?}"
        );
        let incident = goc.cylinders_of_rigid(ri);
        assert_eq!(
            incident.len(),
            2,
            "rigid {ri} has {incident:?} incident cylinders on n={n} edges {edges:?}"
        );
    }
}
