//! The visible-subgroup construction: suspension tree, 2-coloring, the
//! spanning forest pair, the commuting graph, and its verification.
//!
//! Structural invariants from the underlying construction are asserted as
//! the pieces are built; a violation returns [`Error::Internal`] since it
//! means the decision checks accepted a graph they should not have.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::cuts::{self, Suspension};
use crate::graph::{mask_iter, Graph, VertexId};
use crate::squares::{self, pair, DiagonalGraph, Pair, Square};
use crate::{Error, Result};

/// Edge provenance in a per-pole tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeTag {
    /// Forced: the pair is itself a suspension-tree pole.
    Mandatory,
    /// Added by the lexicographic spanning rule.
    Discretionary,
}

/// Tree on the suspended set of one pole, edges tagged by provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedTree {
    pub pole: Pair,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(Pair, EdgeTag)>,
}

/// A tree on a subset of the graph's vertices, all edges non-adjacent
/// pairs of the ambient graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTree {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Pair>,
}

impl LambdaTree {
    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn adjacency(&self) -> BTreeMap<VertexId, Vec<VertexId>> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&a).expect("edge endpoint").push(b);
            adj.get_mut(&b).expect("edge endpoint").push(a);
        }
        adj
    }

    pub fn is_tree(&self) -> bool {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([self.vertices[0]]);
        let mut stack = vec![self.vertices[0]];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Vertices on the unique tree path between `u` and `v`, inclusive.
    fn path(&self, u: VertexId, v: VertexId) -> Vec<VertexId> {
        let adj = self.adjacency();
        let mut parent: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut queue = VecDeque::from([u]);
        parent.insert(u, u);
        while let Some(w) = queue.pop_front() {
            if w == v {
                break;
            }
            for &x in &adj[&w] {
                if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(x) {
                    e.insert(w);
                    queue.push_back(x);
                }
            }
        }
        let mut path = vec![v];
        let mut cur = v;
        while cur != u {
            cur = parent[&cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// The disjoint pair of trees in the complement graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lambda {
    pub trees: [LambdaTree; 2],
}

impl Lambda {
    /// Index of the tree containing `v`, if any.
    pub fn tree_of(&self, v: VertexId) -> Option<usize> {
        (0..2).find(|&i| self.trees[i].contains_vertex(v))
    }

    /// All edges of both trees, sorted.
    pub fn edges(&self) -> Vec<Pair> {
        let mut out: Vec<Pair> = self
            .trees
            .iter()
            .flat_map(|t| t.edges.iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks the standing hypotheses: two vertex-disjoint trees in the
    /// complement graph, jointly spanning, with no two same-tree vertices
    /// adjacent in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (i, tree) in self.trees.iter().enumerate() {
            if !tree.is_tree() {
                return Err(Error::Internal(format!("lambda{i} is not a tree")));
            }
            for &(a, b) in &tree.edges {
                if !tree.contains_vertex(a) || !tree.contains_vertex(b) {
                    return Err(Error::Internal(format!(
                        "lambda{i} edge outside its vertex set"
                    )));
                }
            }
            for (k, &a) in tree.vertices.iter().enumerate() {
                for &b in &tree.vertices[k + 1..] {
                    if g.adjacent(a, b) {
                        return Err(Error::Internal(format!(
                            "lambda{i} vertices {} and {} are adjacent",
                            g.name(a),
                            g.name(b)
                        )));
                    }
                }
            }
        }
        let v0: BTreeSet<VertexId> = self.trees[0].vertices.iter().copied().collect();
        let v1: BTreeSet<VertexId> = self.trees[1].vertices.iter().copied().collect();
        if !v0.is_disjoint(&v1) {
            return Err(Error::Internal("lambda trees share a vertex".into()));
        }
        if v0.len() + v1.len() != g.vertex_count() {
            return Err(Error::Internal("lambda does not span the graph".into()));
        }
        Ok(())
    }
}

/// The convex hull of `v_set` inside one tree: the union of the vertices
/// on the pairwise tree paths.
pub fn hull(tree: &LambdaTree, v_set: &[VertexId]) -> Result<Vec<VertexId>> {
    for &v in v_set {
        if !tree.contains_vertex(v) {
            return Err(Error::NotInTree(format!("vertex #{v}")));
        }
    }
    let mut out: BTreeSet<VertexId> = v_set.iter().copied().collect();
    for (i, &u) in v_set.iter().enumerate() {
        for &v in &v_set[i + 1..] {
            out.extend(tree.path(u, v));
        }
    }
    Ok(out.into_iter().collect())
}

/// Hull of an arbitrary vertex set, taken tree by tree.
pub fn hull_lambda(lambda: &Lambda, v_set: &[VertexId]) -> Result<Vec<VertexId>> {
    let mut parts: [Vec<VertexId>; 2] = [Vec::new(), Vec::new()];
    for &v in v_set {
        match lambda.tree_of(v) {
            Some(i) => parts[i].push(v),
            None => return Err(Error::NotInTree(format!("vertex #{v} in neither tree"))),
        }
    }
    let mut out = BTreeSet::new();
    for (tree, part) in lambda.trees.iter().zip(&parts) {
        if !part.is_empty() {
            out.extend(hull(tree, part)?);
        }
    }
    Ok(out.into_iter().collect())
}

/// The commuting graph: one vertex per lambda edge, an edge whenever the
/// two supports are disjoint and span an induced square.
pub fn commuting_graph(lambda: &Lambda, g: &Graph) -> (Graph, Vec<Pair>) {
    let edges = lambda.edges();
    let mut names: Vec<(String, Pair)> = edges
        .iter()
        .map(|&(a, b)| (format!("{}_{}", g.name(a), g.name(b)), (a, b)))
        .collect();
    names.sort();
    let support: Vec<Pair> = names.iter().map(|(_, p)| *p).collect();
    let name_list: Vec<String> = names.iter().map(|(n, _)| n.clone()).collect();
    let mut delta_edges = Vec::new();
    for i in 0..support.len() {
        for j in i + 1..support.len() {
            let (a, b) = support[i];
            let (c, d) = support[j];
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let sides = g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) && g.adjacent(b, d);
            if sides && !g.adjacent(a, b) && !g.adjacent(c, d) {
                delta_edges.push((i, j));
            }
        }
    }
    let delta = Graph::new(name_list, &delta_edges).expect("commuting graph");
    (delta, support)
}

/// The suspension tree: poles of the maximal non-square suspensions inside
/// the diagonal graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuspensionTree {
    pub diagonal: DiagonalGraph,
    /// Poles of the maximal non-square suspensions, sorted.
    pub poles: Vec<Pair>,
    /// Edges between poles whose union spans an induced square.
    pub edges: Vec<(Pair, Pair)>,
}

impl SuspensionTree {
    pub fn contains_pole(&self, p: Pair) -> bool {
        self.poles.binary_search(&p).is_ok()
    }
}

/// Builds the suspension tree and asserts its structure: the diagonal
/// graph is a tree, the poles are exactly its non-leaves, and every pole
/// has at least three diagonal-graph neighbors.
pub fn build_t(g: &Graph) -> Result<SuspensionTree> {
    let diagonal = squares::diagonal_graph(g);
    let suspensions: Vec<Suspension> = cuts::maximal_suspensions(g)?
        .into_iter()
        .filter(|s| s.suspended.len() >= 3)
        .collect();
    let poles: Vec<Pair> = suspensions.iter().map(|s| s.pole).collect();

    for sq in squares::induced_squares(g) {
        if !poles.contains(&sq.diagonals[0]) && !poles.contains(&sq.diagonals[1]) {
            return Err(Error::Internal(format!(
                "square {} has no pole diagonal",
                sq.label(g)
            )));
        }
    }
    if !diagonal.is_tree() {
        return Err(Error::Internal("diagonal graph is not a tree".into()));
    }
    let leaves: BTreeSet<usize> = diagonal.leaves().into_iter().collect();
    let non_leaves: Vec<Pair> = (0..diagonal.vertices.len())
        .filter(|i| !leaves.contains(i))
        .map(|i| diagonal.support(i))
        .collect();
    if non_leaves != poles {
        return Err(Error::Internal(
            "suspension poles differ from the diagonal tree's non-leaves".into(),
        ));
    }
    for &p in &poles {
        let idx = diagonal.vertex_index(p).expect("pole is a diagonal vertex");
        if diagonal.degree(idx) < 3 {
            return Err(Error::Internal(format!(
                "pole {{{},{}}} has fewer than three diagonal neighbors",
                g.name(p.0),
                g.name(p.1)
            )));
        }
    }

    let mut edges = Vec::new();
    for (i, &p) in poles.iter().enumerate() {
        for &q in &poles[i + 1..] {
            let all = [p.0, p.1, q.0, q.1];
            let distinct: BTreeSet<VertexId> = all.iter().copied().collect();
            if distinct.len() == 4 && crate::jsj::is_induced_square(g, &distinct.into_iter().collect::<Vec<_>>()) {
                edges.push((p, q));
            }
        }
    }
    Ok(SuspensionTree {
        diagonal,
        poles,
        edges,
    })
}

/// Proper 2-coloring of the diagonal tree plus the induced coloring of the
/// graph's vertices. The lexicographically least non-leaf is colored 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub diag: BTreeMap<Pair, u8>,
    /// Color per graph vertex; `None` for vertices never occurring in a
    /// diagonal pair.
    pub gamma: Vec<Option<u8>>,
}

pub fn two_color(g: &Graph, dg: &DiagonalGraph) -> Result<Coloring> {
    if !dg.is_tree() {
        return Err(Error::Internal("coloring requires a diagonal tree".into()));
    }
    let leaves: BTreeSet<usize> = dg.leaves().into_iter().collect();
    let root = (0..dg.vertices.len())
        .find(|i| !leaves.contains(i))
        .unwrap_or(0);

    let mut color: Vec<Option<u8>> = vec![None; dg.vertices.len()];
    color[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for w in dg.neighbors(v) {
            let next = 1 - color[v].expect("colored");
            match color[w] {
                None => {
                    color[w] = Some(next);
                    queue.push_back(w);
                }
                Some(c) if c != next => {
                    return Err(Error::Internal("diagonal tree coloring conflict".into()))
                }
                _ => {}
            }
        }
    }

    let diag: BTreeMap<Pair, u8> = dg
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, color[i].expect("tree is connected")))
        .collect();

    let mut gamma: Vec<Option<u8>> = vec![None; g.vertex_count()];
    for (&(a, b), &c) in &diag {
        for v in [a, b] {
            match gamma[v] {
                None => gamma[v] = Some(c),
                Some(existing) if existing != c => {
                    return Err(Error::Internal(format!(
                        "vertex {} is supported by diagonal vertices of both colors",
                        g.name(v)
                    )))
                }
                _ => {}
            }
        }
    }
    Ok(Coloring { diag, gamma })
}

/// Builds the tree on one pole's suspended set: mandatory edges are the
/// suspended pairs that are themselves poles, and discretionary edges are
/// added in lexicographic order until the tree spans.
pub fn build_lambda_for_pole(g: &Graph, t: &SuspensionTree, pole: Pair) -> Result<TaggedTree> {
    if !t.contains_pole(pole) {
        return Err(Error::Internal(format!(
            "{{{},{}}} is not a suspension-tree pole",
            g.name(pole.0),
            g.name(pole.1)
        )));
    }
    let suspended: Vec<VertexId> =
        mask_iter(g.adj_mask(pole.0) & g.adj_mask(pole.1)).collect();

    let mut parent: BTreeMap<VertexId, VertexId> =
        suspended.iter().map(|&v| (v, v)).collect();
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

    let mut edges = Vec::new();
    for (i, &a) in suspended.iter().enumerate() {
        for &b in &suspended[i + 1..] {
            if t.contains_pole(pair(a, b)) {
                let ra = find(&mut parent, a);
                let rb = find(&mut parent, b);
                if ra == rb {
                    return Err(Error::Internal(format!(
                        "mandatory edges of pole {{{},{}}} contain a cycle",
                        g.name(pole.0),
                        g.name(pole.1)
                    )));
                }
                parent.insert(ra, rb);
                edges.push((pair(a, b), EdgeTag::Mandatory));
            }
        }
    }
    for (i, &a) in suspended.iter().enumerate() {
        for &b in &suspended[i + 1..] {
            if g.adjacent(a, b) {
                return Err(Error::Internal(format!(
                    "suspended vertices {} and {} are adjacent",
                    g.name(a),
                    g.name(b)
                )));
            }
            let ra = find(&mut parent, a);
            let rb = find(&mut parent, b);
            if ra != rb {
                parent.insert(ra, rb);
                edges.push((pair(a, b), EdgeTag::Discretionary));
            }
        }
    }
    edges.sort();
    Ok(TaggedTree {
        pole,
        vertices: suspended,
        edges,
    })
}

/// The assembled construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FidlConstruction {
    pub suspension_tree: SuspensionTree,
    pub coloring: Coloring,
    /// Per-pole tagged trees, sorted by pole.
    pub lambda_per_pole: Vec<TaggedTree>,
    pub lambda: Lambda,
    /// The commuting graph; vertex `i` is the lambda edge `delta_support[i]`.
    pub delta: Graph,
    pub delta_support: Vec<Pair>,
    /// Distinct discretionary edges across all poles, sorted.
    pub discretionary: Vec<Pair>,
}

impl FidlConstruction {
    /// Delta vertex index of a lambda edge.
    pub fn delta_vertex(&self, e: Pair) -> Option<usize> {
        self.delta_support.iter().position(|&p| p == e)
    }

    /// Lines `x_{a,b} = a b`, one per commuting-graph generator.
    pub fn generator_map_lines(&self, g: &Graph) -> Vec<String> {
        self.delta_support
            .iter()
            .map(|&(a, b)| format!("x_{{{},{}}} = {} {}", g.name(a), g.name(b), g.name(a), g.name(b)))
            .collect()
    }
}

/// Runs the whole construction, asserting the structural invariants along
/// the way. The caller is responsible for having verified the decision
/// conditions first.
pub fn assemble_fidl(g: &Graph) -> Result<FidlConstruction> {
    let t = build_t(g)?;
    let coloring = two_color(g, &t.diagonal)?;

    let mut lambda_per_pole = Vec::new();
    for &pole in &t.poles {
        lambda_per_pole.push(build_lambda_for_pole(g, &t, pole)?);
    }

    // union the per-pole trees by the color of the opposite side
    let mut tree_sets: [BTreeSet<VertexId>; 2] = [BTreeSet::new(), BTreeSet::new()];
    let mut tree_edges: [BTreeSet<Pair>; 2] = [BTreeSet::new(), BTreeSet::new()];
    for tagged in &lambda_per_pole {
        let pole_color = coloring.diag[&tagged.pole];
        let side = (1 - pole_color) as usize;
        tree_sets[side].extend(tagged.vertices.iter().copied());
        tree_edges[side].extend(tagged.edges.iter().map(|&(e, _)| e));
    }
    let lambda = Lambda {
        trees: [0, 1].map(|i| LambdaTree {
            vertices: tree_sets[i].iter().copied().collect(),
            edges: tree_edges[i].iter().copied().collect(),
        }),
    };
    lambda.validate(g)?;
    for (i, tree) in lambda.trees.iter().enumerate() {
        for &v in &tree.vertices {
            if coloring.gamma[v] != Some(i as u8) {
                return Err(Error::Internal(format!(
                    "lambda{i} contains vertex {} of the wrong color",
                    g.name(v)
                )));
            }
        }
    }

    let (delta, delta_support) = commuting_graph(&lambda, g);

    let mut discretionary: Vec<Pair> = lambda_per_pole
        .iter()
        .flat_map(|t| {
            t.edges
                .iter()
                .filter(|(_, tag)| *tag == EdgeTag::Discretionary)
                .map(|&(e, _)| e)
        })
        .collect();
    discretionary.sort_unstable();
    let disc_count = discretionary.len();
    discretionary.dedup();
    if discretionary.len() != disc_count {
        return Err(Error::Internal(
            "a discretionary edge occurs in two per-pole trees".into(),
        ));
    }

    // the commuting graph is the suspension tree plus one leaf per
    // discretionary edge
    if delta.vertex_count() != t.poles.len() + discretionary.len() {
        return Err(Error::Internal(
            "commuting graph size differs from poles plus discretionary edges".into(),
        ));
    }
    let construction = FidlConstruction {
        suspension_tree: t,
        coloring,
        lambda_per_pole,
        lambda,
        delta,
        delta_support,
        discretionary,
    };
    check_delta_shape(g, &construction)?;
    Ok(construction)
}

fn check_delta_shape(g: &Graph, c: &FidlConstruction) -> Result<()> {
    let delta = &c.delta;
    let n = delta.vertex_count();
    let connectivity = delta.connectivity_suite();
    if connectivity.components.len() != 1 || delta.edge_count() != n.saturating_sub(1) {
        return Err(Error::Internal("commuting graph is not a tree".into()));
    }
    if delta_diameter(delta) < 3 {
        return Err(Error::Internal(
            "commuting graph has diameter less than three".into(),
        ));
    }
    // every discretionary vertex is a leaf hanging off its pole
    for tagged in &c.lambda_per_pole {
        for &(e, tag) in &tagged.edges {
            if tag != EdgeTag::Discretionary {
                continue;
            }
            let ev = c
                .delta_vertex(e)
                .ok_or_else(|| Error::Internal("discretionary edge missing from delta".into()))?;
            let pv = c
                .delta_vertex(tagged.pole)
                .ok_or_else(|| Error::Internal("pole missing from delta".into()))?;
            let nbrs = delta.link(ev);
            if nbrs != vec![pv] {
                return Err(Error::Internal(format!(
                    "discretionary vertex {} is not a leaf at its pole",
                    delta.name(ev)
                )));
            }
        }
    }
    // restricted to poles, delta edges are exactly the suspension-tree edges
    for (i, &p) in c.suspension_tree.poles.iter().enumerate() {
        let _ = i;
        let pv = c.delta_vertex(p).expect("pole in delta");
        for &q in &c.suspension_tree.poles {
            if p >= q {
                continue;
            }
            let qv = c.delta_vertex(q).expect("pole in delta");
            let t_edge = c.suspension_tree.edges.contains(&(p, q))
                || c.suspension_tree.edges.contains(&(q, p));
            if delta.adjacent(pv, qv) != t_edge {
                return Err(Error::Internal(
                    "delta restricted to poles differs from the suspension tree".into(),
                ));
            }
        }
    }
    let _ = g;
    Ok(())
}

/// Diameter of a connected graph via BFS from every vertex.
pub fn delta_diameter(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in g.link(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(dist.iter().copied().filter(|&d| d != usize::MAX).max().unwrap_or(0));
    }
    best
}

/// First square whose hull join is not present in the graph, if any.
///
/// For every induced square, the join of the hulls of its two diagonals
/// must again lie in the graph.
pub fn verify_r3(g: &Graph, lambda: &Lambda) -> Result<Option<Square>> {
    for sq in squares::induced_squares(g) {
        let [d1, d2] = sq.diagonals;
        let h1 = hull_lambda(lambda, &[d1.0, d1.1])?;
        let h2 = hull_lambda(lambda, &[d2.0, d2.1])?;
        for &x in &h1 {
            for &y in &h2 {
                if x == y || !g.adjacent(x, y) {
                    return Ok(Some(sq));
                }
            }
        }
    }
    Ok(None)
}

/// All chordless cycles (length at least 4; length-3 cycles cannot occur
/// in the triangle-free graphs this library targets, but are reported too),
/// each rotated to start at its least vertex, sorted by length then
/// vertex sequence.
pub fn chordless_cycles(g: &Graph) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let n = g.vertex_count();
    for s in 0..n {
        let mut path = vec![s];
        extend_chordless(g, s, &mut path, &mut out);
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

fn extend_chordless(g: &Graph, s: VertexId, path: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
    let last = *path.last().expect("nonempty path");
    for y in g.link(last) {
        if y <= s || path.contains(&y) {
            continue;
        }
        // y must see nothing of the path except `last` (and possibly `s`)
        let mut sees_s = false;
        let mut chord = false;
        for &p in path[..path.len() - 1].iter() {
            if g.adjacent(y, p) {
                if p == s {
                    sees_s = true;
                } else {
                    chord = true;
                    break;
                }
            }
        }
        if chord {
            continue;
        }
        if sees_s {
            if path.len() >= 2 && path[1] < y {
                let mut cycle = path.clone();
                cycle.push(y);
                out.push(cycle);
            }
            // extending past y would reuse the chord y-s
            continue;
        }
        path.push(y);
        extend_chordless(g, s, path, out);
        path.pop();
    }
}

/// First violation of the cycle condition: an edge of a chordless cycle
/// with no square through it spanned inside the cycle's hull.
///
/// Checking chordless cycles suffices: a shortest offending cycle can
/// always be surgered along a chord into a shorter one. Errs when a
/// chordless cycle exceeds `max_cycle_len`.
pub fn verify_r4(
    g: &Graph,
    lambda: &Lambda,
    max_cycle_len: usize,
) -> Result<Option<(Vec<VertexId>, Pair)>> {
    let cycles = chordless_cycles(g);
    for cycle in &cycles {
        if cycle.len() > max_cycle_len {
            return Err(Error::BoundExceeded(max_cycle_len));
        }
    }
    for cycle in &cycles {
        let hullset = hull_lambda(lambda, cycle)?;
        let mut edges: Vec<Pair> = cycle
            .iter()
            .enumerate()
            .map(|(i, &v)| pair(v, cycle[(i + 1) % cycle.len()]))
            .collect();
        edges.sort_unstable();
        for &(a, b) in &edges {
            if !edge_in_square_with_hull(g, a, b, &hullset) {
                return Ok(Some((cycle.clone(), (a, b))));
            }
        }
    }
    Ok(None)
}

fn edge_in_square_with_hull(g: &Graph, a: VertexId, b: VertexId, hullset: &[VertexId]) -> bool {
    for &a2 in hullset {
        if a2 == a || a2 == b || !g.adjacent(a2, b) || g.adjacent(a2, a) {
            continue;
        }
        for &b2 in hullset {
            if b2 == a || b2 == b || b2 == a2 {
                continue;
            }
            if g.adjacent(b2, a) && g.adjacent(b2, a2) && !g.adjacent(b2, b) {
                return true;
            }
        }
    }
    false
}
