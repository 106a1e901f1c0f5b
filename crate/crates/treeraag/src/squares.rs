//! Induced squares, the diagonal graph, and the CFS diagnostic.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{mask_iter, Graph, VertexId};

/// An unordered pair of vertices, kept sorted.
pub type Pair = (VertexId, VertexId);

pub fn pair(a: VertexId, b: VertexId) -> Pair {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// An induced square identified by its two diagonals, canonically ordered.
///
/// The four vertices span a 4-cycle; both diagonals are non-edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Square {
    pub diagonals: [Pair; 2],
}

impl Square {
    pub fn new(d1: Pair, d2: Pair) -> Square {
        let mut diagonals = [d1, d2];
        diagonals.sort_unstable();
        Square { diagonals }
    }

    pub fn vertices(&self) -> [VertexId; 4] {
        let [(a, b), (c, d)] = self.diagonals;
        let mut v = [a, b, c, d];
        v.sort_unstable();
        v
    }

    pub fn label(&self, g: &Graph) -> String {
        let [(a, b), (c, d)] = self.diagonals;
        format!(
            "{{{},{}}}*{{{},{}}}",
            g.name(a),
            g.name(b),
            g.name(c),
            g.name(d)
        )
    }
}

/// Exhaustive induced-square inventory, canonically sorted.
pub fn induced_squares(g: &Graph) -> Vec<Square> {
    let mut out = BTreeSet::new();
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            let common: Vec<VertexId> = mask_iter(g.adj_mask(a) & g.adj_mask(b)).collect();
            for (i, &c) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if !g.adjacent(c, d) {
                        out.insert(Square::new((a, b), (c, d)));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// The diagonal graph: one vertex per diagonal pair occurring in an induced
/// square, one edge per induced square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalGraph {
    /// Diagonal pairs in canonical order; the support of vertex `i` is
    /// `vertices[i]` itself.
    pub vertices: Vec<Pair>,
    /// Edges as index pairs into `vertices`, labeled by their square.
    pub edges: Vec<(usize, usize, Square)>,
}

impl DiagonalGraph {
    pub fn vertex_index(&self, p: Pair) -> Option<usize> {
        self.vertices.binary_search(&p).ok()
    }

    pub fn support(&self, idx: usize) -> Pair {
        self.vertices[idx]
    }

    pub fn degree(&self, idx: usize) -> usize {
        self.edges
            .iter()
            .filter(|(a, b, _)| *a == idx || *b == idx)
            .count()
    }

    pub fn neighbors(&self, idx: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|(a, b, _)| {
                if *a == idx {
                    Some(*b)
                } else if *b == idx {
                    Some(*a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Connected components as sorted index sets, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for (a, b, _) in &self.edges {
            adj[*a].push(*b);
            adj[*b].push(*a);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_tree(&self) -> bool {
        !self.vertices.is_empty()
            && self.components().len() == 1
            && self.edges.len() == self.vertices.len() - 1
    }

    /// Indices of vertices with exactly one incident edge.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.degree(i) == 1)
            .collect()
    }

    /// Distance matrix via BFS; `usize::MAX` marks unreachable pairs.
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut dist = vec![vec![usize::MAX; n]; n];
        for (start, row) in dist.iter_mut().enumerate() {
            row[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if row[w] == usize::MAX {
                        row[w] = row[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        dist
    }

    /// Renders the diagonal graph as a plain graph (vertex names `a,b`)
    /// so DOT export can reuse the graph styling.
    pub fn to_graph(&self, g: &Graph) -> Graph {
        let names: Vec<String> = self
            .vertices
            .iter()
            .map(|&(a, b)| format!("{}_{}", g.name(a), g.name(b)))
            .collect();
        let mut sorted = names.clone();
        sorted.sort();
        let index: BTreeMap<&str, usize> = sorted.iter().map(|n| n.as_str()).zip(0..).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|(a, b, _)| (index[names[*a].as_str()], index[names[*b].as_str()]))
            .collect();
        Graph::new(sorted, &edges).expect("diagonal graph rendering")
    }
}

/// Builds the diagonal graph from the square inventory.
pub fn diagonal_graph(g: &Graph) -> DiagonalGraph {
    let squares = induced_squares(g);
    let mut verts = BTreeSet::new();
    for sq in &squares {
        verts.insert(sq.diagonals[0]);
        verts.insert(sq.diagonals[1]);
    }
    let vertices: Vec<Pair> = verts.into_iter().collect();
    let edges = squares
        .iter()
        .map(|sq| {
            let a = vertices.binary_search(&sq.diagonals[0]).unwrap();
            let b = vertices.binary_search(&sq.diagonals[1]).unwrap();
            (a.min(b), a.max(b), *sq)
        })
        .collect();
    DiagonalGraph { vertices, edges }
}

/// CFS verdict with the witness component when the flag holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfsReport {
    pub cfs: bool,
    /// Diagonal vertices of a component whose support is every non-cone
    /// vertex; ties broken by the lexicographically least vertex list.
    pub witness_component: Option<Vec<Pair>>,
}

/// A graph is CFS when some component of its diagonal graph has support
/// equal to the set of non-cone vertices.
pub fn is_cfs(g: &Graph) -> CfsReport {
    let dg = diagonal_graph(g);
    let non_cone: BTreeSet<VertexId> = g
        .vertices()
        .filter(|&v| !g.vertex_profile(v).expect("vertex").cone)
        .collect();
    let mut qualifying: Vec<Vec<Pair>> = Vec::new();
    for comp in dg.components() {
        let support: BTreeSet<VertexId> = comp
            .iter()
            .flat_map(|&i| {
                let (a, b) = dg.support(i);
                [a, b]
            })
            .collect();
        if support == non_cone {
            qualifying.push(comp.iter().map(|&i| dg.support(i)).collect());
        }
    }
    qualifying.sort();
    CfsReport {
        cfs: !qualifying.is_empty(),
        witness_component: qualifying.into_iter().next(),
    }
}
