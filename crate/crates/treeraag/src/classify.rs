//! The decision procedure: structural checks on suspensions, rigid sets
//! and pole patterns, with a certificate on success and a re-checkable
//! witness on failure.

use crate::cuts::{self, Cut, Join};
use crate::fidl::{self, FidlConstruction};
use crate::graph::{Graph, VertexId};
use crate::jsj;
use crate::squares::{pair, Pair};
use crate::Result;

/// Why a graph fails the decision procedure. Every variant carries a
/// witness that the producing checker re-validates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// A maximal thick join with both sides of size at least 3.
    NonSuspensionThickJoin(Join),
    /// A maximal thick join with both sides of size exactly 2.
    SquareMaximalThickJoin(Join),
    /// A vertex or edge lying in no maximal suspension.
    UncoveredVertexOrEdge(CoverageItem),
    /// A maximal-suspension pole admitting no cut.
    PoleWithoutCut(Pair),
    /// A cut whose pole is not the pole of a maximal suspension.
    CutNotFromPole(Cut),
    /// A maximal inseparable set of at least four essential vertices that
    /// is not an induced square.
    RigidNotSquare(Vec<VertexId>),
    /// A rigid square with a diagonal that is not a maximal-suspension pole.
    RigidDiagonalNotPole(Vec<VertexId>, Pair),
    /// A cycle of poles inside one suspended set.
    SuspensionCycle { pole: Pair, cycle: Vec<VertexId> },
    /// Fewer than two maximal suspensions.
    TooFewSuspensions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverageItem {
    Vertex(VertexId),
    Edge(Pair),
}

impl Obstruction {
    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Obstruction::NonSuspensionThickJoin(j) => {
                format!("maximal thick join {} is not a suspension", j.label(g))
            }
            Obstruction::SquareMaximalThickJoin(j) => {
                format!("maximal thick join {} is a square suspension", j.label(g))
            }
            Obstruction::UncoveredVertexOrEdge(CoverageItem::Vertex(v)) => {
                format!("vertex {} lies in no maximal suspension", g.name(*v))
            }
            Obstruction::UncoveredVertexOrEdge(CoverageItem::Edge((u, v))) => {
                format!("edge {}-{} lies in no maximal suspension", g.name(*u), g.name(*v))
            }
            Obstruction::PoleWithoutCut((a, b)) => {
                format!("pole {{{},{}}} gives no cut", g.name(*a), g.name(*b))
            }
            Obstruction::CutNotFromPole(c) => {
                format!("cut {} does not come from a maximal-suspension pole", c.label(g))
            }
            Obstruction::RigidNotSquare(set) => {
                format!("inseparable essential set {} is not a square", g.set_label(set))
            }
            Obstruction::RigidDiagonalNotPole(set, (a, b)) => format!(
                "rigid square {} has non-pole diagonal {{{},{}}}",
                g.set_label(set),
                g.name(*a),
                g.name(*b)
            ),
            Obstruction::SuspensionCycle { pole, cycle } => {
                let pairs: Vec<String> = cycle
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let w = cycle[(i + 1) % cycle.len()];
                        format!("{{{},{}}}", g.name(v.min(w)), g.name(v.max(w)))
                    })
                    .collect();
                format!(
                    "suspended set of pole {{{},{}}} carries the pole cycle {}",
                    g.name(pole.0),
                    g.name(pole.1),
                    pairs.join(" ")
                )
            }
            Obstruction::TooFewSuspensions => "fewer than two maximal suspensions".into(),
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Obstruction::NonSuspensionThickJoin(_) => "NonSuspensionThickJoin",
            Obstruction::SquareMaximalThickJoin(_) => "SquareMaximalThickJoin",
            Obstruction::UncoveredVertexOrEdge(_) => "UncoveredVertexOrEdge",
            Obstruction::PoleWithoutCut(_) => "PoleWithoutCut",
            Obstruction::CutNotFromPole(_) => "CutNotFromPole",
            Obstruction::RigidNotSquare(_) => "RigidNotSquare",
            Obstruction::RigidDiagonalNotPole(_, _) => "RigidDiagonalNotPole",
            Obstruction::SuspensionCycle { .. } => "SuspensionCycle",
            Obstruction::TooFewSuspensions => "TooFewSuspensions",
        }
    }
}

/// Outcome of [`classify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Yes(Box<FidlConstruction>),
    No(Obstruction),
    GateFail(Vec<String>),
}

impl Classification {
    pub fn is_yes(&self) -> bool {
        matches!(self, Classification::Yes(_))
    }
}

/// Suspension-structure check: maximal thick joins are non-square
/// suspensions, maximal suspensions cover every vertex and edge, each
/// pole gives a cut, and every cut comes from a pole. First failure wins,
/// in that order.
pub fn check_suspension_structure(g: &Graph) -> Result<Option<Obstruction>> {
    let joins = cuts::maximal_thick_joins(g)?;
    for j in &joins {
        let (a, b) = (&j.sides.0, &j.sides.1);
        if a.len() != 2 && b.len() != 2 {
            return Ok(Some(Obstruction::NonSuspensionThickJoin(j.clone())));
        }
        if a.len() == 2 && b.len() == 2 {
            return Ok(Some(Obstruction::SquareMaximalThickJoin(j.clone())));
        }
    }

    let suspensions = cuts::maximal_suspensions(g)?;
    let mut covered_vertices = vec![false; g.vertex_count()];
    let mut covered_edges: Vec<Pair> = Vec::new();
    for s in &suspensions {
        for &v in s.vertex_set().iter() {
            covered_vertices[v] = true;
        }
        for p in [s.pole.0, s.pole.1] {
            for &c in &s.suspended {
                covered_edges.push(pair(p, c));
            }
        }
    }
    for v in g.vertices() {
        if !covered_vertices[v] {
            return Ok(Some(Obstruction::UncoveredVertexOrEdge(CoverageItem::Vertex(v))));
        }
    }
    for (u, v) in g.edges() {
        if !covered_edges.contains(&(u, v)) {
            return Ok(Some(Obstruction::UncoveredVertexOrEdge(CoverageItem::Edge((u, v)))));
        }
    }

    let all_cuts = cuts::all_cuts(g)?;
    for s in &suspensions {
        let has_cut = all_cuts.iter().any(|c| c.pole == s.pole);
        if !has_cut {
            return Ok(Some(Obstruction::PoleWithoutCut(s.pole)));
        }
    }
    for c in &all_cuts {
        let from_pole = suspensions.iter().any(|s| s.pole == c.pole);
        if !from_pole {
            return Ok(Some(Obstruction::CutNotFromPole(c.clone())));
        }
    }
    Ok(None)
}

/// Rigid-set check: every maximal clique of the inseparability graph with
/// at least four vertices must be an induced square whose diagonals are
/// both poles of maximal non-square suspensions.
pub fn check_rigid_sets_are_squares(g: &Graph) -> Result<Option<Obstruction>> {
    let insep = cuts::inseparability_graph(g)?;
    let suspensions = cuts::maximal_suspensions(g)?;
    let poles: Vec<Pair> = suspensions
        .iter()
        .filter(|s| !s.square)
        .map(|s| s.pole)
        .collect();
    for clique in maximal_cliques_of(&insep) {
        if clique.len() < 4 {
            continue;
        }
        let set: Vec<VertexId> = clique
            .iter()
            .map(|&v| g.vertex(insep.name(v)).expect("essential vertex"))
            .collect();
        let square = match jsj::rigid_square(g, &set) {
            Some(sq) => sq,
            None => return Ok(Some(Obstruction::RigidNotSquare(set))),
        };
        for d in square.diagonals {
            if !poles.contains(&d) {
                return Ok(Some(Obstruction::RigidDiagonalNotPole(set, d)));
            }
        }
    }
    Ok(None)
}

fn maximal_cliques_of(g: &Graph) -> Vec<Vec<VertexId>> {
    fn expand(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<Vec<VertexId>>) {
        if p == 0 && x == 0 {
            if r != 0 {
                out.push(crate::graph::mask_iter(r).collect());
            }
            return;
        }
        while p != 0 {
            let v = p.trailing_zeros() as usize;
            let bit = 1u64 << v;
            expand(g, r | bit, p & g.adj_mask(v), x & g.adj_mask(v), out);
            p &= !bit;
            x |= bit;
        }
    }
    let mut out = Vec::new();
    expand(g, 0, g.full_mask(), 0, &mut out);
    out.sort();
    out
}

/// Pole-cycle check: no suspended set may contain a cycle of pairs that
/// are themselves poles of maximal suspensions.
pub fn check_no_suspension_cycles(g: &Graph) -> Result<Option<Obstruction>> {
    let suspensions = cuts::maximal_suspensions(g)?;
    for s in &suspensions {
        let edges = jsj::pole_graph_edges(g, &s.suspended)?;
        if let Some(cycle) = find_cycle(&s.suspended, &edges) {
            return Ok(Some(Obstruction::SuspensionCycle {
                pole: s.pole,
                cycle,
            }));
        }
    }
    Ok(None)
}

/// A cycle in a small graph given by its edge list, canonicalized to start
/// at its least vertex and run toward its smaller neighbor; `None` for
/// forests.
fn find_cycle(vertices: &[VertexId], edges: &[Pair]) -> Option<Vec<VertexId>> {
    use std::collections::BTreeMap;
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
        vertices.iter().map(|&v| (v, Vec::new())).collect();
    for &(a, b) in edges {
        adj.get_mut(&a)?.push(b);
        adj.get_mut(&b)?.push(a);
    }
    // DFS retaining parent; first back edge closes a cycle
    let mut parent: BTreeMap<VertexId, Option<VertexId>> = BTreeMap::new();
    for &start in vertices {
        if parent.contains_key(&start) {
            continue;
        }
        parent.insert(start, None);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if Some(w) == parent[&v] {
                    continue;
                }
                if parent.contains_key(&w) {
                    // walk both ancestries to extract the cycle
                    let mut path_v = vec![v];
                    let mut cur = v;
                    while let Some(p) = parent[&cur] {
                        path_v.push(p);
                        cur = p;
                    }
                    let mut path_w = vec![w];
                    cur = w;
                    while let Some(p) = parent[&cur] {
                        path_w.push(p);
                        cur = p;
                    }
                    let common: Vec<VertexId> = path_v
                        .iter()
                        .copied()
                        .filter(|v| path_w.contains(v))
                        .collect();
                    let meet = common[0];
                    let mut cycle: Vec<VertexId> =
                        path_v.iter().copied().take_while(|&x| x != meet).collect();
                    cycle.push(meet);
                    let tail: Vec<VertexId> =
                        path_w.iter().copied().take_while(|&x| x != meet).collect();
                    cycle.extend(tail.into_iter().rev());
                    return Some(canonical_cycle(cycle));
                }
                parent.insert(w, Some(v));
                stack.push(w);
            }
        }
    }
    None
}

fn canonical_cycle(cycle: Vec<VertexId>) -> Vec<VertexId> {
    let k = cycle.len();
    let min_pos = (0..k).min_by_key(|&i| cycle[i]).expect("nonempty cycle");
    let forward: Vec<VertexId> = (0..k).map(|i| cycle[(min_pos + i) % k]).collect();
    let backward: Vec<VertexId> = (0..k).map(|i| cycle[(min_pos + k - i) % k]).collect();
    if forward[1..] <= backward[1..] {
        forward
    } else {
        backward
    }
}

/// Number of maximal suspensions, used by the nontriviality guard.
fn suspension_count(g: &Graph) -> Result<usize> {
    Ok(cuts::maximal_suspensions(g)?.len())
}

/// Full decision: gate, the three structural checks, the nontriviality
/// guard, then the construction. On success the construction is attached
/// and its verification conditions are asserted.
pub fn classify(g: &Graph) -> Result<Classification> {
    let gate = g.precondition_gate();
    if !gate.passes() {
        return Ok(Classification::GateFail(gate.failure_reasons(g)));
    }
    if let Some(o) = check_suspension_structure(g)? {
        return Ok(Classification::No(o));
    }
    if let Some(o) = check_no_suspension_cycles(g)? {
        return Ok(Classification::No(o));
    }
    if let Some(o) = check_rigid_sets_are_squares(g)? {
        return Ok(Classification::No(o));
    }
    if suspension_count(g)? < 2 {
        return Ok(Classification::No(Obstruction::TooFewSuspensions));
    }
    let construction = fidl::assemble_fidl(g)?;
    if let Some(sq) = fidl::verify_r3(g, &construction.lambda)? {
        return Err(crate::Error::Internal(format!(
            "construction violates the square hull-join condition at {}",
            sq.label(g)
        )));
    }
    if let Some((cycle, edge)) = fidl::verify_r4(g, &construction.lambda, g.vertex_count())? {
        return Err(crate::Error::Internal(format!(
            "construction violates the cycle condition at edge {}-{} of cycle {:?}",
            g.name(edge.0),
            g.name(edge.1),
            cycle
        )));
    }
    Ok(Classification::Yes(Box::new(construction)))
}
