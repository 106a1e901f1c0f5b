//! The visual graph of cylinders and its annotations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cuts::{self, Cut, Suspension};
use crate::graph::{mask_iter, Graph, VertexId};
use crate::squares::{pair, Pair, Square};
use crate::{Error, Result};

/// How a cylinder's group sits up to finite index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CylinderClass {
    VirtuallyZ2,
    VirtuallyFreeTimesZ,
}

/// A cylinder: the suspension over the pole of one or more uncrossed cuts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cylinder {
    pub suspension: Suspension,
    /// The uncrossed cuts generating this cylinder (same pole).
    pub cuts: Vec<Cut>,
    pub annotation: Option<CylinderClass>,
    /// Whether the pole graph on the suspended set is a forest. Filled by
    /// [`annotate`].
    pub pole_pattern_forest: Option<bool>,
}

/// A rigid vertex: a maximal clique of the inseparability graph with at
/// least four vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rigid {
    pub vertices: Vec<VertexId>,
    /// Whether the set spans an induced square. Filled by [`annotate`].
    pub square: Option<bool>,
}

/// Incidence target of a cylinder edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GocTarget {
    Rigid(usize),
    Hanging(usize),
}

/// Bipartite decomposition summary: cylinders on one side, rigid and
/// hanging vertices on the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphOfCylinders {
    pub cylinders: Vec<Cylinder>,
    pub rigids: Vec<Rigid>,
    pub hangings: Vec<Vec<Cut>>,
    /// Incidence edges (cylinder index, target), sorted.
    pub edges: Vec<(usize, GocTarget)>,
}

impl GraphOfCylinders {
    pub fn is_empty(&self) -> bool {
        self.cylinders.is_empty() && self.rigids.is_empty() && self.hangings.is_empty()
    }

    /// Cylinder indices incident to the given rigid vertex.
    pub fn cylinders_of_rigid(&self, rigid: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(c, t)| (t == GocTarget::Rigid(rigid)).then_some(c))
            .collect()
    }
}

/// Assembles the graph of cylinders. Requires a gate-passing graph that is
/// not a cycle graph; a graph without cuts yields an empty decomposition
/// rather than an error.
pub fn graph_of_cylinders(g: &Graph) -> Result<GraphOfCylinders> {
    let gate = g.precondition_gate();
    if !gate.passes() {
        return Err(Error::GateFailure(gate.failure_reasons(g)));
    }
    if gate.is_cycle_graph {
        return Err(Error::CycleGraph)
    }
    let classes = cuts::crossing_classes(g)?;
    if classes.uncrossed.is_empty() && classes.hanging_collections.is_empty() {
        return Ok(GraphOfCylinders {
            cylinders: Vec::new(),
            rigids: Vec::new(),
            hangings: Vec::new(),
            edges: Vec::new(),
        });
    }

    // one cylinder per pole of an uncrossed cut
    let mut by_pole: BTreeMap<Pair, Vec<Cut>> = BTreeMap::new();
    for c in &classes.uncrossed {
        by_pole.entry(c.pole).or_default().push(c.clone());
    }
    let mut cylinders = Vec::new();
    for (pole, pole_cuts) in &by_pole {
        let suspended: Vec<VertexId> =
            mask_iter(g.adj_mask(pole.0) & g.adj_mask(pole.1)).collect();
        let suspension = match cuts::maximal_suspension_for_pole(g, pole.0, pole.1)? {
            Some(s) => s,
            None => Suspension {
                pole: *pole,
                square: suspended.len() == 2,
                suspended,
                maximal_thick_join: false,
            },
        };
        cylinders.push(Cylinder {
            suspension,
            cuts: pole_cuts.clone(),
            annotation: None,
            pole_pattern_forest: None,
        });
    }

    // rigid vertices: maximal inseparability cliques with at least 4 vertices
    let insep = cuts::inseparability_graph(g)?;
    let rigids: Vec<Rigid> = maximal_cliques(&insep)
        .into_iter()
        .filter(|clique| clique.len() >= 4)
        .map(|clique| Rigid {
            vertices: clique
                .into_iter()
                .map(|v| g.vertex(insep.name(v)).expect("essential vertex"))
                .collect(),
            square: None,
        })
        .collect();

    let hangings = classes.hanging_collections;

    let mut edges = Vec::new();
    for (ci, cyl) in cylinders.iter().enumerate() {
        for (ri, rigid) in rigids.iter().enumerate() {
            let contains_cut = cyl.cuts.iter().any(|c| {
                c.cut_vertices()
                    .iter()
                    .all(|v| rigid.vertices.contains(v))
            });
            if contains_cut {
                edges.push((ci, GocTarget::Rigid(ri)));
            }
        }
        for (hi, coll) in hangings.iter().enumerate() {
            if coll.iter().any(|c| c.pole == cyl.suspension.pole) {
                edges.push((ci, GocTarget::Hanging(hi)));
            }
        }
    }
    edges.sort();

    Ok(GraphOfCylinders {
        cylinders,
        rigids,
        hangings,
        edges,
    })
}

/// Maximal cliques of a small graph, sorted.
fn maximal_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    fn expand(
        g: &Graph,
        r: u64,
        mut p: u64,
        mut x: u64,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if p == 0 && x == 0 {
            if r != 0 {
                out.push(mask_iter(r).collect());
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

/// Pole graph on a suspended set: an edge for each pair of suspended
/// vertices that is itself the pole of a maximal suspension.
pub fn pole_graph_edges(g: &Graph, suspended: &[VertexId]) -> Result<Vec<Pair>> {
    let poles: Vec<Pair> = cuts::maximal_suspensions(g)?
        .into_iter()
        .map(|s| s.pole)
        .collect();
    let mut edges = Vec::new();
    for (i, &a) in suspended.iter().enumerate() {
        for &b in &suspended[i + 1..] {
            if poles.contains(&pair(a, b)) {
                edges.push(pair(a, b));
            }
        }
    }
    Ok(edges)
}

/// Whether the pole graph on `suspended` is acyclic.
pub fn pole_pattern_is_forest(g: &Graph, suspended: &[VertexId]) -> Result<bool> {
    let edges = pole_graph_edges(g, suspended)?;
    // union-find over the suspended set
    let mut parent: BTreeMap<VertexId, VertexId> = suspended.iter().map(|&v| (v, v)).collect();
    fn find(parent: &mut BTreeMap<VertexId, VertexId>, v: VertexId) -> VertexId {
        let p = parent[&v];
        if p == v {
            v
        } else {
            let root = find(parent, p);
            parent.insert(v, root);
            root
        }
    }
    for (a, b) in edges {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra == rb {
            return Ok(false);
        }
        parent.insert(ra, rb);
    }
    Ok(true)
}

/// Fills in vertex-type annotations: cylinder groups by suspended-set size,
/// rigid sets by the induced-square test, and the pole-pattern forest flag.
pub fn annotate(g: &Graph, mut goc: GraphOfCylinders) -> Result<GraphOfCylinders> {
    for cyl in &mut goc.cylinders {
        cyl.annotation = Some(if cyl.suspension.suspended.len() >= 3 {
            CylinderClass::VirtuallyFreeTimesZ
        } else {
            CylinderClass::VirtuallyZ2
        });
        cyl.pole_pattern_forest = Some(pole_pattern_is_forest(g, &cyl.suspension.suspended)?);
    }
    for rigid in &mut goc.rigids {
        rigid.square = Some(is_induced_square(g, &rigid.vertices));
    }
    Ok(goc)
}

/// Whether a 4-vertex set spans an induced square.
pub fn is_induced_square(g: &Graph, set: &[VertexId]) -> bool {
    if set.len() != 4 {
        return false;
    }
    let [a, b, c, d] = [set[0], set[1], set[2], set[3]];
    // try the three pairings into two diagonals
    for (d1, d2) in [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))] {
        let diag_ok = !g.adjacent(d1.0, d1.1) && !g.adjacent(d2.0, d2.1);
        let sides_ok = g.adjacent(d1.0, d2.0)
            && g.adjacent(d1.0, d2.1)
            && g.adjacent(d1.1, d2.0)
            && g.adjacent(d1.1, d2.1);
        if diag_ok && sides_ok {
            return true;
        }
    }
    false
}

/// The square spanned by a rigid 4-set, if any.
pub fn rigid_square(g: &Graph, set: &[VertexId]) -> Option<Square> {
    if set.len() != 4 {
        return None;
    }
    let [a, b, c, d] = [set[0], set[1], set[2], set[3]];
    for (d1, d2) in [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))] {
        let diag_ok = !g.adjacent(d1.0, d1.1) && !g.adjacent(d2.0, d2.1);
        let sides_ok = g.adjacent(d1.0, d2.0)
            && g.adjacent(d1.0, d2.1)
            && g.adjacent(d1.1, d2.0)
            && g.adjacent(d1.1, d2.1);
        if diag_ok && sides_ok {
            return Some(Square::new(pair(d1.0, d1.1), pair(d2.0, d2.1)));
        }
    }
    None
}

/// Output flavors for [`export_goc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GocFormat {
    Text,
    Dot,
}

/// Deterministic rendering; cylinders are labeled `W_{pole} x W_{suspended}`.
pub fn export_goc(g: &Graph, goc: &GraphOfCylinders, format: GocFormat) -> String {
    let cyl_label = |c: &Cylinder| c.suspension.label(g);
    match format {
        GocFormat::Text => {
            let mut s = String::new();
            for (i, c) in goc.cylinders.iter().enumerate() {
                let mut line = format!("cylinder {i}: {}", cyl_label(c));
                if let Some(ann) = c.annotation {
                    let tag = match ann {
                        CylinderClass::VirtuallyZ2 => "virtually Z^2",
                        CylinderClass::VirtuallyFreeTimesZ => "virtually F x Z",
                    };
                    let _ = write!(line, " [{tag}]");
                }
                if let Some(forest) = c.pole_pattern_forest {
                    let _ = write!(line, " [pole pattern forest: {forest}]");
                }
                let _ = writeln!(s, "{line}");
            }
            for (i, r) in goc.rigids.iter().enumerate() {
                let mut line = format!("rigid {i}: {}", g.set_label(&r.vertices));
                if let Some(square) = r.square {
                    let _ = write!(line, " [{}]", if square { "square" } else { "non-square" });
                }
                let _ = writeln!(s, "{line}");
            }
            for (i, coll) in goc.hangings.iter().enumerate() {
                let cuts: Vec<String> = coll.iter().map(|c| c.label(g)).collect();
                let _ = writeln!(s, "hanging {i}: {}", cuts.join(" "));
            }
            for (c, t) in &goc.edges {
                let target = match t {
                    GocTarget::Rigid(r) => format!("rigid {r}"),
                    GocTarget::Hanging(h) => format!("hanging {h}"),
                };
                let _ = writeln!(s, "edge: cylinder {c} -- {target}");
            }
            if goc.is_empty() {
                s.push_str("empty decomposition (no cuts)\n");
            }
            s
        }
        GocFormat::Dot => {
            let mut s = String::from("graph {\n");
            for (i, c) in goc.cylinders.iter().enumerate() {
                let _ = writeln!(s, "  c{i} [shape=box, label=\"{}\"];", cyl_label(c));
            }
            for (i, r) in goc.rigids.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "  r{i} [shape=ellipse, label=\"W_{}\"];",
                    g.set_label(&r.vertices)
                );
            }
            for (i, coll) in goc.hangings.iter().enumerate() {
                let cuts: Vec<String> = coll.iter().map(|c| c.label(g)).collect();
                let _ = writeln!(s, "  h{i} [shape=diamond, label=\"{}\"];", cuts.join(" "));
            }
            for (c, t) in &goc.edges {
                let target = match t {
                    GocTarget::Rigid(r) => format!("r{r}"),
                    GocTarget::Hanging(h) => format!("h{h}"),
                };
                let _ = writeln!(s, "  c{c} -- {target};");
            }
            s.push_str("}\n");
            s
        }
    }
}
