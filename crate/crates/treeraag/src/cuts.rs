//! Cut pairs, cut 2-paths, the crossing relation, and maximal thick joins.

use std::collections::BTreeSet;

use crate::graph::{mask_iter, Graph, VertexId};
use crate::squares::{pair, Pair};
use crate::{Error, Result};

/// A separating pair or separating 2-path, with its component certificate.
///
/// A cut pair is a non-adjacent pair whose removal disconnects the graph. A
/// cut 2-path `a-c-b` requires `{a,b}` non-adjacent and *not* a cut pair,
/// `c` a common neighbor, and removal of all three vertices disconnecting
/// the graph. One `Cut` is recorded per witness `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    pub pole: Pair,
    /// `None` for a cut pair, `Some(c)` for the 2-path `pole.0-c-pole.1`.
    pub witness: Option<VertexId>,
    /// Connected components of the graph minus [`Cut::cut_vertices`].
    pub components: Vec<Vec<VertexId>>,
}

impl Cut {
    pub fn is_pair(&self) -> bool {
        self.witness.is_none()
    }

    /// The 2- or 3-element separating set.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        let mut v = vec![self.pole.0, self.pole.1];
        if let Some(c) = self.witness {
            v.push(c);
        }
        v.sort_unstable();
        v
    }

    pub(crate) fn cut_mask(&self) -> u64 {
        let mut m = 1u64 << self.pole.0 | 1u64 << self.pole.1;
        if let Some(c) = self.witness {
            m |= 1 << c;
        }
        m
    }

    pub fn label(&self, g: &Graph) -> String {
        match self.witness {
            None => format!("{{{},{}}}", g.name(self.pole.0), g.name(self.pole.1)),
            Some(c) => format!(
                "{}-{}-{}",
                g.name(self.pole.0),
                g.name(c),
                g.name(self.pole.1)
            ),
        }
    }

    /// Recomputes the component partition and compares it with the stored
    /// certificate.
    pub fn revalidate(&self, g: &Graph) -> bool {
        components_without(g, self.cut_mask()) == self.components
    }
}

fn components_without(g: &Graph, removed: u64) -> Vec<Vec<VertexId>> {
    g.components_within(g.full_mask() & !removed)
        .into_iter()
        .map(|m| mask_iter(m).collect())
        .collect()
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 || !g.is_connected_within(g.full_mask()) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// All cut pairs, sorted by pole.
pub fn cut_pairs(g: &Graph) -> Result<Vec<Cut>> {
    require_connected(g)?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            let comps = components_without(g, 1 << a | 1 << b);
            if comps.len() >= 2 {
                out.push(Cut {
                    pole: (a, b),
                    witness: None,
                    components: comps,
                });
            }
        }
    }
    Ok(out)
}

/// All cut 2-paths, one record per witness, sorted by (pole, witness).
pub fn cut_two_paths(g: &Graph) -> Result<Vec<Cut>> {
    require_connected(g)?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            // pairs that already cut are recorded as cut pairs only
            if components_without(g, 1 << a | 1 << b).len() >= 2 {
                continue;
            }
            for c in mask_iter(g.adj_mask(a) & g.adj_mask(b)) {
                let comps = components_without(g, 1 << a | 1 << b | 1 << c);
                if comps.len() >= 2 {
                    out.push(Cut {
                        pole: (a, b),
                        witness: Some(c),
                        components: comps,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Cut pairs and cut 2-paths together, in canonical order.
pub fn all_cuts(g: &Graph) -> Result<Vec<Cut>> {
    let mut cuts = cut_pairs(g)?;
    cuts.extend(cut_two_paths(g)?);
    cuts.sort();
    Ok(cuts)
}

fn check_cut_valid(g: &Graph, c: &Cut) -> Result<()> {
    let n = g.vertex_count();
    if c.pole.0 >= n || c.pole.1 >= n || c.witness.is_some_and(|w| w >= n) || !c.revalidate(g) {
        return Err(Error::InvalidCut(format!("{c:?}")));
    }
    Ok(())
}

/// Whether two cuts cross: each has vertices in at least two different
/// components of the graph minus the other.
///
/// Panics if the crossing test ever succeeds for cuts of different kinds; a
/// pair and a 2-path can never cross each other, so that would indicate a
/// bug in the cut enumeration.
pub fn crosses(g: &Graph, c1: &Cut, c2: &Cut) -> Result<bool> {
    if c1 == c2 {
        return Err(Error::InvalidCut("crosses() needs two distinct cuts".into()));
    }
    check_cut_valid(g, c1)?;
    check_cut_valid(g, c2)?;
    let result = meets_two_components(g, c1, c2) && meets_two_components(g, c2, c1);
    assert!(
        !(result && c1.is_pair() != c2.is_pair()),
        "cut pair crossing a cut 2-path: {} vs {}",
        c1.label(g),
        c2.label(g)
    );
    Ok(result)
}

fn meets_two_components(g: &Graph, c1: &Cut, c2: &Cut) -> bool {
    let comps = g.components_within(g.full_mask() & !c2.cut_mask());
    let m1 = c1.cut_mask();
    comps.iter().filter(|&&comp| comp & m1 != 0).count() >= 2
}

/// Uncrossed cuts and the maximal pairwise-crossing collections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingClasses {
    pub uncrossed: Vec<Cut>,
    /// Maximal cliques of the crossing relation restricted to crossed cuts.
    /// Pairs and 2-paths never mix.
    pub hanging_collections: Vec<Vec<Cut>>,
}

pub fn crossing_classes(g: &Graph) -> Result<CrossingClasses> {
    let cuts = all_cuts(g)?;
    let n = cuts.len();
    let mut cross = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if cuts[i].is_pair() != cuts[j].is_pair() {
                continue; // kinds are separated up front; the law is asserted below
            }
            if crosses(g, &cuts[i], &cuts[j])? {
                cross[i][j] = true;
                cross[j][i] = true;
            }
        }
    }
    // assert the parity law on mixed-kind pairs
    for i in 0..n {
        for j in i + 1..n {
            if cuts[i].is_pair() != cuts[j].is_pair() {
                crosses(g, &cuts[i], &cuts[j])?;
            }
        }
    }
    let crossed: Vec<usize> = (0..n).filter(|&i| cross[i].iter().any(|&b| b)).collect();
    let uncrossed = (0..n)
        .filter(|i| !crossed.contains(i))
        .map(|i| cuts[i].clone())
        .collect();

    let mut cliques = Vec::new();
    bron_kerbosch(&cross, Vec::new(), crossed.clone(), Vec::new(), &mut cliques);
    let mut hanging: Vec<Vec<Cut>> = cliques
        .into_iter()
        .map(|clique| clique.into_iter().map(|i| cuts[i].clone()).collect())
        .collect();
    hanging.sort();
    Ok(CrossingClasses {
        uncrossed,
        hanging_collections: hanging,
    })
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let mut p = p;
    let mut x = x;
    while let Some(&v) = p.first() {
        let mut r2 = r.clone();
        r2.push(v);
        let p2: Vec<usize> = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let x2: Vec<usize> = x.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, r2, p2, x2, out);
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Graph on the essential vertices: an edge `u ~ v` means no cut avoiding
/// both places them in different components of its complement.
pub fn inseparability_graph(g: &Graph) -> Result<Graph> {
    require_connected(g)?;
    let cuts = all_cuts(g)?;
    let essentials: Vec<VertexId> = g.vertices().filter(|&v| g.degree(v) >= 3).collect();
    let names: Vec<String> = essentials.iter().map(|&v| g.name(v).to_string()).collect();
    let mut edges = Vec::new();
    for (i, &u) in essentials.iter().enumerate() {
        for (j, &v) in essentials.iter().enumerate().skip(i + 1) {
            if !separated_by_some_cut(g, &cuts, u, v) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(names, &edges)
}

fn separated_by_some_cut(g: &Graph, cuts: &[Cut], u: VertexId, v: VertexId) -> bool {
    cuts.iter().any(|c| {
        let m = c.cut_mask();
        if m >> u & 1 == 1 || m >> v & 1 == 1 {
            return false;
        }
        let comps = g.components_within(g.full_mask() & !m);
        let cu = comps.iter().position(|&comp| comp >> u & 1 == 1);
        let cv = comps.iter().position(|&comp| comp >> v & 1 == 1);
        cu != cv
    })
}

/// Whether any cut separates two members of `set` lying outside it.
pub fn set_separated_by_some_cut(g: &Graph, cuts: &[Cut], set: &[VertexId]) -> bool {
    cuts.iter().any(|c| {
        let m = c.cut_mask();
        let comps = g.components_within(g.full_mask() & !m);
        let hit = comps
            .iter()
            .filter(|&&comp| set.iter().any(|&v| comp >> v & 1 == 1))
            .count();
        hit >= 2
    })
}

/// A complete bipartite subgraph on two anticliques, sides canonical
/// (lexicographically smaller side first).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Join {
    pub sides: (Vec<VertexId>, Vec<VertexId>),
}

impl Join {
    fn new(a: Vec<VertexId>, b: Vec<VertexId>) -> Join {
        if a <= b {
            Join { sides: (a, b) }
        } else {
            Join { sides: (b, a) }
        }
    }

    /// The side of size 2 when the other side is larger, if any.
    pub fn pole_side(&self) -> Option<Pair> {
        let (a, b) = (&self.sides.0, &self.sides.1);
        match (a.len(), b.len()) {
            (2, m) if m > 2 => Some((a[0], a[1])),
            (m, 2) if m > 2 => Some((b[0], b[1])),
            (2, 2) => Some((a[0], a[1])),
            _ => None,
        }
    }

    pub fn label(&self, g: &Graph) -> String {
        format!("{}*{}", g.set_label(&self.sides.0), g.set_label(&self.sides.1))
    }
}

/// All inclusion-maximal thick joins (complete bipartite subgraphs with
/// both sides of size at least 2). Requires a triangle-free graph, which
/// makes every side an anticlique automatically.
///
/// Works through the closure `A -> common-neighbors(A)`: every maximal
/// join has both sides closed, and every closed set is an intersection of
/// vertex links, so the intersection-closed family generated by the links
/// finds them all.
pub fn maximal_thick_joins(g: &Graph) -> Result<Vec<Join>> {
    if let Some(t) = g.triangle() {
        return Err(Error::TriangleFound(
            t.iter().map(|&v| g.name(v).to_string()).collect(),
        ));
    }
    let mut family: BTreeSet<u64> = g.vertices().map(|v| g.adj_mask(v)).collect();
    loop {
        let mut grew = false;
        let snapshot: Vec<u64> = family.iter().copied().collect();
        for &s in &snapshot {
            for v in g.vertices() {
                let t = s & g.adj_mask(v);
                if t != 0 && family.insert(t) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut joins = BTreeSet::new();
    for &b0 in &family {
        if b0.count_ones() < 2 {
            continue;
        }
        let a = g.common_neighbors_mask(b0);
        if a.count_ones() < 2 {
            continue;
        }
        let b = g.common_neighbors_mask(a);
        if b.count_ones() < 2 {
            continue;
        }
        joins.insert(Join::new(mask_iter(a).collect(), mask_iter(b).collect()));
    }
    Ok(joins.into_iter().collect())
}

/// A suspension: a non-adjacent pole plus its common link.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Suspension {
    pub pole: Pair,
    pub suspended: Vec<VertexId>,
    /// Whether the suspension equals a maximal thick join.
    pub maximal_thick_join: bool,
    /// Exactly two suspended vertices.
    pub square: bool,
}

impl Suspension {
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut v = self.suspended.clone();
        v.push(self.pole.0);
        v.push(self.pole.1);
        v.sort_unstable();
        v
    }

    pub fn label(&self, g: &Graph) -> String {
        format!(
            "W_{{{},{}}} x W_{}",
            g.name(self.pole.0),
            g.name(self.pole.1),
            g.set_label(&self.suspended)
        )
    }
}

/// The suspension over a non-adjacent pole, or `None` when the pole has no
/// common neighbor at all.
pub fn maximal_suspension_for_pole(g: &Graph, a: VertexId, b: VertexId) -> Result<Option<Suspension>> {
    if a >= g.vertex_count() || b >= g.vertex_count() || a == b {
        return Err(Error::UnknownVertex(format!("pole ({a}, {b})")));
    }
    if g.adjacent(a, b) {
        return Err(Error::AdjacentPole(
            g.name(a).to_string(),
            g.name(b).to_string(),
        ));
    }
    let suspended: Vec<VertexId> = mask_iter(g.adj_mask(a) & g.adj_mask(b)).collect();
    if suspended.is_empty() {
        return Ok(None);
    }
    let pole = pair(a, b);
    let joins = maximal_thick_joins(g)?;
    let pole_vec = vec![pole.0, pole.1];
    let maximal = joins
        .iter()
        .any(|j| (j.sides.0 == pole_vec && j.sides.1 == suspended) || (j.sides.1 == pole_vec && j.sides.0 == suspended));
    Ok(Some(Suspension {
        pole,
        square: suspended.len() == 2,
        suspended,
        maximal_thick_join: maximal,
    }))
}

/// Poles of the maximal suspensions: maximal thick joins with a side of
/// exactly two vertices (the non-square ones have the other side larger).
pub fn maximal_suspensions(g: &Graph) -> Result<Vec<Suspension>> {
    let joins = maximal_thick_joins(g)?;
    let mut out = Vec::new();
    for j in &joins {
        let (a, b) = (&j.sides.0, &j.sides.1);
        let (pole, suspended) = if a.len() == 2 {
            ((a[0], a[1]), b.clone())
        } else if b.len() == 2 {
            ((b[0], b[1]), a.clone())
        } else {
            continue;
        };
        out.push(Suspension {
            pole,
            square: suspended.len() == 2,
            suspended,
            maximal_thick_join: true,
        });
    }
    out.sort();
    Ok(out)
}
