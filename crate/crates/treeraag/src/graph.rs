//! Finite simple graphs with named vertices.
//!
//! `Graph` is the shared value type for presentation graphs and everything
//! derived from them (complements, inseparability graphs, commuting graphs).
//! Vertices are identified by name; internally a vertex is an index into the
//! sorted name table and adjacency is kept as one bitmask per vertex, which
//! caps the library at 64 vertices. All operations are pure and every
//! returned collection is sorted, so output is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::{Error, Result};

/// Index into a graph's sorted vertex-name table.
pub type VertexId = usize;

/// Hard limit imposed by the bitmask representation.
pub const MAX_VERTICES: usize = 64;

/// Input/output encodings understood by [`Graph::parse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// Line-oriented `u v` edge declarations, `vertex u` for isolated
    /// vertices, `#` comments.
    EdgeList,
    /// JSON object `{"vertices": [...], "edges": [["u","v"], ...]}` with
    /// `vertices` optional.
    Structured,
}

/// An immutable simple graph. No self-loops, adjacency symmetric, vertex
/// names distinct and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<u64>,
}

/// Link/star data for a single vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexProfile {
    pub link: Vec<VertexId>,
    pub star: Vec<VertexId>,
    /// Valence at least 3.
    pub essential: bool,
    /// Adjacent to every other vertex.
    pub cone: bool,
}

/// Components, biconnectivity and articulation vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub components: Vec<Vec<VertexId>>,
    pub is_biconnected: bool,
    pub articulation_vertices: Vec<VertexId>,
}

/// Result of the hypothesis gate run before the decision pipeline.
///
/// The gate passes when the graph is triangle-free, incomplete, connected
/// and has no separating clique. `is_cycle_graph` is informational: cycle
/// graphs pass the gate but are refused by the graph-of-cylinders builder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateReport {
    pub triangle_free: bool,
    pub incomplete: bool,
    pub connected: bool,
    pub separating_cliques: Vec<Vec<VertexId>>,
    pub is_cycle_graph: bool,
}

impl GateReport {
    pub fn passes(&self) -> bool {
        self.triangle_free && self.incomplete && self.connected && self.separating_cliques.is_empty()
    }

    /// Human-readable reasons for a failing gate, empty when it passes.
    pub fn failure_reasons(&self, g: &Graph) -> Vec<String> {
        let mut reasons = Vec::new();
        if !self.connected {
            reasons.push("disconnected".to_string());
        }
        if !self.triangle_free {
            reasons.push("contains a triangle".to_string());
        }
        if !self.incomplete {
            reasons.push("complete graph".to_string());
        }
        for clique in &self.separating_cliques {
            reasons.push(format!("separating clique {}", g.set_label(clique)));
        }
        reasons
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = VertexId> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Builds a graph from pre-sorted distinct names and index edges.
    pub fn new(names: Vec<String>, edges: &[(VertexId, VertexId)]) -> Result<Graph> {
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(names.len()));
        }
        for w in names.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::Invalid(format!(
                    "vertex names must be sorted and distinct, got {:?} before {:?}",
                    w[0], w[1]
                )));
            }
        }
        for name in &names {
            if !valid_name(name) {
                return Err(Error::Invalid(format!("invalid vertex name {name:?}")));
            }
        }
        let mut adj = vec![0u64; names.len()];
        for &(u, v) in edges {
            if u >= names.len() || v >= names.len() {
                return Err(Error::Invalid(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { names, adj })
    }

    /// Convenience constructor from name pairs; vertex set is the union of
    /// endpoint names plus `isolated`.
    pub fn from_named_edges(edges: &[(&str, &str)], isolated: &[&str]) -> Result<Graph> {
        let mut names: Vec<String> = edges
            .iter()
            .flat_map(|&(u, v)| [u.to_string(), v.to_string()])
            .chain(isolated.iter().map(|s| s.to_string()))
            .collect();
        names.sort();
        names.dedup();
        let index: BTreeMap<&str, usize> = names.iter().map(|n| n.as_str()).zip(0..).collect();
        let idx_edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (index[u], index[v])).collect();
        Graph::new(names, &idx_edges)
    }

    pub fn parse(text: &str, format: GraphFormat) -> Result<Graph> {
        match format {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Structured => parse_structured(text),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.names.len()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub(crate) fn adj_mask(&self, v: VertexId) -> u64 {
        self.adj[v]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as sorted index pairs, lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in self.vertices() {
            for v in mask_iter(self.adj[u]) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn link(&self, v: VertexId) -> Vec<VertexId> {
        mask_iter(self.adj[v]).collect()
    }

    /// Common neighbors of all vertices in `set` (the full vertex set when
    /// `set` is empty).
    pub(crate) fn common_neighbors_mask(&self, set: u64) -> u64 {
        let mut out = self.full_mask();
        for v in mask_iter(set) {
            out &= self.adj[v];
        }
        out
    }

    pub fn common_neighbors(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        mask_iter(self.common_neighbors_mask(mask)).collect()
    }

    /// Renders a vertex set as `{a,b,c}` using names.
    pub fn set_label(&self, set: &[VertexId]) -> String {
        let mut s = String::from("{");
        for (i, &v) in set.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&self.names[v]);
        }
        s.push('}');
        s
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = self
            .vertices()
            .map(|v| full & !self.adj[v] & !(1 << v))
            .collect();
        Graph {
            names: self.names.clone(),
            adj,
        }
    }

    pub fn vertex_profile(&self, v: VertexId) -> Result<VertexProfile> {
        if v >= self.names.len() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let link = self.link(v);
        let mut star = link.clone();
        star.push(v);
        star.sort_unstable();
        let essential = link.len() >= 3;
        let cone = link.len() == self.names.len() - 1 && self.names.len() > 1;
        Ok(VertexProfile {
            link,
            star,
            essential,
            cone,
        })
    }

    /// Connected components of the graph restricted to `keep`, each a mask,
    /// sorted by lowest vertex.
    pub(crate) fn components_within(&self, keep: u64) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in mask_iter(keep) {
            if seen >> v & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << v;
            let mut frontier = 1u64 << v;
            while frontier != 0 {
                let mut next = 0u64;
                for u in mask_iter(frontier) {
                    next |= self.adj[u] & keep & !comp;
                }
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub(crate) fn is_connected_within(&self, keep: u64) -> bool {
        self.components_within(keep).len() <= 1
    }

    pub fn connectivity_suite(&self) -> ConnectivityReport {
        let full = self.full_mask();
        let components: Vec<Vec<VertexId>> = self
            .components_within(full)
            .into_iter()
            .map(|m| mask_iter(m).collect())
            .collect();
        let connected = components.len() <= 1;
        let mut articulation = Vec::new();
        for v in self.vertices() {
            let rest = full & !(1 << v);
            if rest != 0 && self.components_within(rest).len() > components.len().max(1) {
                articulation.push(v);
            }
        }
        ConnectivityReport {
            is_biconnected: connected && articulation.is_empty(),
            articulation_vertices: articulation,
            components,
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.triangle().is_none()
    }

    /// Some triangle, if one exists.
    pub fn triangle(&self) -> Option<[VertexId; 3]> {
        for u in self.vertices() {
            for v in mask_iter(self.adj[u]) {
                if v <= u {
                    continue;
                }
                let common = self.adj[u] & self.adj[v] & !((1u64 << (v + 1)) - 1);
                if let Some(w) = mask_iter(common).next() {
                    return Some([u, v, w]);
                }
            }
        }
        None
    }

    pub fn is_complete(&self) -> bool {
        self.vertices()
            .all(|v| self.degree(v) == self.names.len().saturating_sub(1))
    }

    /// Runs the hypothesis gate: triangle-free, incomplete, connected, no
    /// separating clique. In the triangle-free case only vertices and edges
    /// can be cliques; otherwise all cliques are scanned.
    pub fn precondition_gate(&self) -> GateReport {
        let full = self.full_mask();
        let triangle_free = self.is_triangle_free();
        let connected = self.is_connected_within(full);
        let incomplete = !self.is_complete();
        let is_cycle_graph =
            connected && self.names.len() >= 3 && self.vertices().all(|v| self.degree(v) == 2);

        let mut separating = Vec::new();
        if connected {
            for clique in self.cliques(triangle_free) {
                let rest = full & !clique;
                if rest != 0 && self.components_within(rest).len() >= 2 {
                    separating.push(mask_iter(clique).collect());
                }
            }
        }
        GateReport {
            triangle_free,
            incomplete,
            connected,
            separating_cliques: separating,
            is_cycle_graph,
        }
    }

    /// Nonempty cliques in canonical order. When `only_small` is set
    /// (triangle-free case) this is just vertices and edges.
    fn cliques(&self, only_small: bool) -> Vec<u64> {
        let mut out: Vec<u64> = self.vertices().map(|v| 1u64 << v).collect();
        let mut layer: Vec<u64> = out.clone();
        loop {
            let mut next = Vec::new();
            for &clique in &layer {
                let top = 63 - clique.leading_zeros() as usize;
                let ext = self.common_neighbors_mask(clique) & !((1u64 << (top + 1)) - 1);
                for v in mask_iter(ext) {
                    next.push(clique | 1 << v);
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(&next);
            if only_small && next[0].count_ones() >= 2 {
                break;
            }
            layer = next;
        }
        out.sort_by_key(|m| (m.count_ones(), mask_iter(*m).collect::<Vec<_>>()));
        out
    }

    /// Deterministic DOT rendering; vertices and edges in name order.
    pub fn export_dot(&self, decorations: Option<&DotDecorations>) -> String {
        let mut s = String::from("graph {\n");
        if let Some(d) = decorations {
            if let Some(label) = &d.graph_label {
                let _ = writeln!(s, "  label=\"{label}\";");
            }
        }
        for v in self.vertices() {
            let attrs = decorations
                .and_then(|d| d.node_attrs.get(self.name(v)))
                .map(|a| format!(" [{a}]"))
                .unwrap_or_default();
            let _ = writeln!(s, "  \"{}\"{};", self.name(v), attrs);
        }
        for (u, v) in self.edges() {
            let attrs = decorations
                .and_then(|d| d.edge_attrs.get(&(self.name(u).to_string(), self.name(v).to_string())))
                .map(|a| format!(" [{a}]"))
                .unwrap_or_default();
            let _ = writeln!(s, "  \"{}\" -- \"{}\"{};", self.name(u), self.name(v), attrs);
        }
        s.push_str("}\n");
        s
    }

    /// Edge-list serialization that `parse` round-trips.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        let mut covered = 0u64;
        for (u, v) in self.edges() {
            covered |= 1 << u | 1 << v;
            let _ = writeln!(s, "{} {}", self.name(u), self.name(v));
        }
        for v in self.vertices() {
            if covered >> v & 1 == 0 {
                let _ = writeln!(s, "vertex {}", self.name(v));
            }
        }
        s
    }
}

/// Styling overrides for [`Graph::export_dot`].
#[derive(Clone, Debug, Default)]
pub struct DotDecorations {
    pub graph_label: Option<String>,
    pub node_attrs: BTreeMap<String, String>,
    pub edge_attrs: BTreeMap<(String, String), String>,
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    struct Decl {
        line: usize,
        kind: DeclKind,
    }
    enum DeclKind {
        Edge(String, String),
        Vertex(String),
    }

    let mut decls = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut col = 1;
        for tok in content.split_whitespace() {
            col = raw.find(tok).map(|b| b + 1).unwrap_or(col);
            tokens.push((tok, col));
        }
        match tokens.as_slice() {
            [] => {}
            [("vertex", _), (name, col)] => {
                if !valid_name(name) {
                    return Err(Error::Parse {
                        line,
                        col: *col,
                        msg: format!("invalid vertex name {name:?}"),
                    });
                }
                decls.push(Decl {
                    line,
                    kind: DeclKind::Vertex(name.to_string()),
                });
            }
            [(u, ucol), (v, vcol)] => {
                for (name, col) in [(u, ucol), (v, vcol)] {
                    if !valid_name(name) {
                        return Err(Error::Parse {
                            line,
                            col: *col,
                            msg: format!("invalid vertex name {name:?}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        col: *vcol,
                        msg: format!("self-loop at vertex {u:?}"),
                    });
                }
                decls.push(Decl {
                    line,
                    kind: DeclKind::Edge(u.to_string(), v.to_string()),
                });
            }
            other => {
                let (tok, col) = other[other.len().min(3) - 1];
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("expected `u v` or `vertex u`, found extra token {tok:?}"),
                });
            }
        }
    }

    let mut names = Vec::new();
    let mut declared = Vec::new();
    for d in &decls {
        match &d.kind {
            DeclKind::Edge(u, v) => {
                names.push(u.clone());
                names.push(v.clone());
            }
            DeclKind::Vertex(n) => {
                if declared.contains(n) {
                    return Err(Error::Parse {
                        line: d.line,
                        col: 1,
                        msg: format!("duplicate vertex declaration {n:?}"),
                    });
                }
                declared.push(n.clone());
                names.push(n.clone());
            }
        }
    }
    names.sort();
    names.dedup();
    if names.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(names.len()));
    }
    let index: BTreeMap<&str, usize> = names.iter().map(|n| n.as_str()).zip(0..).collect();
    let mut edges = Vec::new();
    for d in &decls {
        if let DeclKind::Edge(u, v) = &d.kind {
            edges.push((index[u.as_str()], index[v.as_str()]));
        }
    }
    Graph::new(names, &edges)
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct StructuredGraph {
    #[serde(default)]
    vertices: Option<Vec<String>>,
    edges: Vec<(String, String)>,
}

fn parse_structured(text: &str) -> Result<Graph> {
    let parsed: StructuredGraph =
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            col: e.column(),
            msg: e.to_string(),
        })?;
    let mut names = Vec::new();
    if let Some(declared) = &parsed.vertices {
        let mut sorted = declared.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(Error::Invalid(format!("duplicate vertex declaration {:?}", w[0])));
            }
        }
        names = sorted;
    }
    for (u, v) in &parsed.edges {
        if u == v {
            return Err(Error::SelfLoop(u.clone()));
        }
        names.push(u.clone());
        names.push(v.clone());
    }
    names.sort();
    names.dedup();
    if names.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(names.len()));
    }
    for name in &names {
        if !valid_name(name) {
            return Err(Error::Invalid(format!("invalid vertex name {name:?}")));
        }
    }
    let index: BTreeMap<&str, usize> = names.iter().map(|n| n.as_str()).zip(0..).collect();
    let edges: Vec<(usize, usize)> = parsed
        .edges
        .iter()
        .map(|(u, v)| (index[u.as_str()], index[v.as_str()]))
        .collect();
    Graph::new(names, &edges)
}
