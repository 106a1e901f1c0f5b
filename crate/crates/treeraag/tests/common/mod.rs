//! Shared test support: definition-driven brute-force oracles kept
//! independent of the library's code paths (adjacency lists and explicit
//! subset scans instead of bitmask closures), random graph generation,
//! and the structural checks run on every positively classified graph.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use treeraag::fidl;
use treeraag::graph::{Graph, VertexId};

/// Plain adjacency-list view used by all the oracles.
pub struct AdjList {
    pub n: usize,
    pub adj: Vec<Vec<usize>>,
}

impl AdjList {
    pub fn of(g: &Graph) -> AdjList {
        AdjList {
            n: g.vertex_count(),
            adj: g.vertices().map(|v| g.link(v)).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> AdjList {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        AdjList { n, adj }
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Components of the graph with `removed` vertices deleted.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: Vec<bool> = (0..self.n).map(|v| removed.contains(&v)).collect();
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn connected(&self) -> bool {
        self.n == 0 || self.components_without(&[]).len() == 1
    }

    pub fn triangle_free(&self) -> bool {
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v <= u {
                    continue;
                }
                for &w in &self.adj[v] {
                    if w > v && self.adjacent(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Oracle: all cut pairs as sorted pole pairs.
pub fn oracle_cut_pairs(a: &AdjList) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..a.n {
        for v in u + 1..a.n {
            if !a.adjacent(u, v) && a.components_without(&[u, v]).len() >= 2 {
                out.push((u, v));
            }
        }
    }
    out
}

/// Oracle: all cut 2-paths as (pole.0, witness, pole.1) with pole sorted.
pub fn oracle_cut_two_paths(a: &AdjList) -> Vec<(usize, usize, usize)> {
    let pairs = oracle_cut_pairs(a);
    let mut out = Vec::new();
    for u in 0..a.n {
        for v in u + 1..a.n {
            if a.adjacent(u, v) || pairs.contains(&(u, v)) {
                continue;
            }
            for c in 0..a.n {
                if c != u
                    && c != v
                    && a.adjacent(u, c)
                    && a.adjacent(v, c)
                    && a.components_without(&[u, v, c]).len() >= 2
                {
                    out.push((u, c, v));
                }
            }
        }
    }
    out
}

/// Oracle: all induced squares as sorted 4-sets with their diagonal split.
pub fn oracle_induced_squares(a: &AdjList) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for p in 0..a.n {
        for q in p + 1..a.n {
            for r in q + 1..a.n {
                for s in r + 1..a.n {
                    let set = [p, q, r, s];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if a.adjacent(set[i], set[j]) {
                                edges += 1;
                            }
                        }
                    }
                    if edges != 4 {
                        continue;
                    }
                    // a 4-cycle: every vertex must have degree exactly 2 inside
                    let ok = set.iter().all(|&x| {
                        set.iter().filter(|&&y| y != x && a.adjacent(x, y)).count() == 2
                    });
                    if ok {
                        out.push(set);
                    }
                }
            }
        }
    }
    out
}

/// Oracle: all inclusion-maximal thick joins as canonical side pairs.
pub fn oracle_maximal_thick_joins(a: &AdjList) -> Vec<(Vec<usize>, Vec<usize>)> {
    assert!(a.n <= 16, "oracle join scan is exponential");
    let is_anticlique = |set: &[usize]| {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !a.adjacent(u, v)))
    };
    let subsets: Vec<Vec<usize>> = (1u32..1 << a.n)
        .map(|mask| (0..a.n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>())
        .filter(|s| s.len() >= 2 && is_anticlique(s))
        .collect();
    let mut joins: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for s1 in &subsets {
        for s2 in &subsets {
            if s1 >= s2 || s1.iter().any(|v| s2.contains(v)) {
                continue;
            }
            let complete = s1
                .iter()
                .all(|&u| s2.iter().all(|&v| a.adjacent(u, v)));
            if complete {
                joins.push((s1.clone(), s2.clone()));
            }
        }
    }
    let contains = |big: &(Vec<usize>, Vec<usize>), small: &(Vec<usize>, Vec<usize>)| {
        let sub = |x: &Vec<usize>, y: &Vec<usize>| x.iter().all(|v| y.contains(v));
        (sub(&small.0, &big.0) && sub(&small.1, &big.1))
            || (sub(&small.0, &big.1) && sub(&small.1, &big.0))
    };
    let mut maximal: Vec<(Vec<usize>, Vec<usize>)> = joins
        .iter()
        .filter(|j| {
            !joins
                .iter()
                .any(|other| other != *j && contains(other, j) && !contains(j, other))
        })
        .cloned()
        .collect();
    for j in &mut maximal {
        if j.0 > j.1 {
            std::mem::swap(&mut j.0, &mut j.1);
        }
    }
    maximal.sort();
    maximal.dedup();
    maximal
}

/// Oracle: edges of the inseparability relation on essential vertices.
pub fn oracle_inseparability_edges(a: &AdjList) -> (Vec<usize>, Vec<(usize, usize)>) {
    let essentials: Vec<usize> = (0..a.n).filter(|&v| a.adj[v].len() >= 3).collect();
    let mut cut_sets: Vec<Vec<usize>> = oracle_cut_pairs(a)
        .into_iter()
        .map(|(u, v)| vec![u, v])
        .collect();
    cut_sets.extend(
        oracle_cut_two_paths(a)
            .into_iter()
            .map(|(u, c, v)| {
                let mut s = vec![u, c, v];
                s.sort_unstable();
                s
            }),
    );
    let mut edges = Vec::new();
    for (i, &u) in essentials.iter().enumerate() {
        for &v in &essentials[i + 1..] {
            let separated = cut_sets.iter().any(|set| {
                if set.contains(&u) || set.contains(&v) {
                    return false;
                }
                let comps = a.components_without(set);
                let cu = comps.iter().position(|c| c.contains(&u));
                let cv = comps.iter().position(|c| c.contains(&v));
                cu != cv
            });
            if !separated {
                edges.push((u, v));
            }
        }
    }
    (essentials, edges)
}

/// Maximal cliques of an abstract edge set on the given vertices.
pub fn oracle_maximal_cliques(vertices: &[usize], edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adjacent = |u: usize, v: usize| edges.contains(&(u.min(v), u.max(v)));
    let k = vertices.len();
    assert!(k <= 20);
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..1 << k {
        let set: Vec<usize> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| vertices[i])
            .collect();
        let is_clique = set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| adjacent(u, v)));
        if is_clique {
            cliques.push(set);
        }
    }
    let maximal: Vec<Vec<usize>> = cliques
        .iter()
        .filter(|c| {
            !cliques
                .iter()
                .any(|other| other.len() > c.len() && c.iter().all(|v| other.contains(v)))
        })
        .cloned()
        .collect();
    maximal
}

/// BFS rewriting oracle for the Coxeter word problem: explore all words
/// reachable by swapping adjacent commuting letters and deleting adjacent
/// equal letters, then take the lexicographically least of minimum length.
pub fn oracle_racg_normal_form(a: &AdjList, word: &[usize]) -> Vec<usize> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    let mut best = word.to_vec();
    while let Some(w) = queue.pop_front() {
        if w.len() < best.len() || (w.len() == best.len() && w < best) {
            best = w.clone();
        }
        for i in 0..w.len().saturating_sub(1) {
            if w[i] == w[i + 1] {
                let mut next = w.clone();
                next.drain(i..=i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            } else if a.adjacent(w[i], w[i + 1]) {
                let mut next = w.clone();
                next.swap(i, i + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    best
}

/// First-principles check of the structural decision conditions, using
/// only the oracles above. Returns the same yes/no verdict the library's
/// classifier must produce on gate-passing graphs.
pub fn oracle_conditions_hold(a: &AdjList) -> bool {
    let joins = oracle_maximal_thick_joins(a);
    // every maximal thick join is a suspension with at least 3 suspended
    for (s1, s2) in &joins {
        let sizes = (s1.len(), s2.len());
        let ok = (sizes.0 == 2 && sizes.1 >= 3) || (sizes.1 == 2 && sizes.0 >= 3);
        if !ok {
            return false;
        }
    }
    let suspensions: Vec<(Vec<usize>, Vec<usize>)> = joins
        .iter()
        .map(|(s1, s2)| {
            if s1.len() == 2 {
                (s1.clone(), s2.clone())
            } else {
                (s2.clone(), s1.clone())
            }
        })
        .collect();
    // coverage of vertices and edges
    for v in 0..a.n {
        if !suspensions
            .iter()
            .any(|(p, c)| p.contains(&v) || c.contains(&v))
        {
            return false;
        }
    }
    for u in 0..a.n {
        for &v in &a.adj[u] {
            if v <= u {
                continue;
            }
            let covered = suspensions.iter().any(|(p, c)| {
                (p.contains(&u) && c.contains(&v)) || (p.contains(&v) && c.contains(&u))
            });
            if !covered {
                return false;
            }
        }
    }
    // poles give cuts, cuts come from poles
    let cut_pairs = oracle_cut_pairs(a);
    let two_paths = oracle_cut_two_paths(a);
    for (p, _) in &suspensions {
        let pair = (p[0], p[1]);
        let has_cut = cut_pairs.contains(&pair)
            || two_paths.iter().any(|&(u, _, v)| (u, v) == pair);
        if !has_cut {
            return false;
        }
    }
    let poles: Vec<(usize, usize)> = suspensions.iter().map(|(p, _)| (p[0], p[1])).collect();
    for &(u, v) in &cut_pairs {
        if !poles.contains(&(u, v)) {
            return false;
        }
    }
    for &(u, _, v) in &two_paths {
        if !poles.contains(&(u, v)) {
            return false;
        }
    }
    // every inseparable essential set of size >= 4 is a square with pole diagonals
    let (essentials, insep_edges) = oracle_inseparability_edges(a);
    let k = essentials.len();
    if k <= 20 {
        for mask in 1u32..1 << k {
            let set: Vec<usize> = (0..k)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| essentials[i])
                .collect();
            if set.len() < 4 {
                continue;
            }
            let inseparable = set.iter().enumerate().all(|(i, &u)| {
                set[i + 1..]
                    .iter()
                    .all(|&v| insep_edges.contains(&(u.min(v), u.max(v))))
            });
            if !inseparable {
                continue;
            }
            if set.len() > 4 {
                return false;
            }
            // must be an induced square with both diagonals poles
            let sq = oracle_induced_squares(a)
                .into_iter()
                .find(|s| s.to_vec() == set);
            let sq = match sq {
                Some(s) => s,
                None => return false,
            };
            let mut diags = Vec::new();
            for i in 1..4 {
                if !a.adjacent(sq[0], sq[i]) {
                    diags.push((sq[0], sq[i]));
                    let rest: Vec<usize> =
                        (1..4).filter(|&j| j != i).map(|j| sq[j]).collect();
                    diags.push((rest[0].min(rest[1]), rest[0].max(rest[1])));
                }
            }
            diags.dedup();
            for d in diags {
                let is_pole = suspensions
                    .iter()
                    .any(|(p, c)| (p[0], p[1]) == d && c.len() >= 3);
                if !is_pole {
                    return false;
                }
            }
        }
    }
    // no cycle of poles inside a suspended set
    for (_, c) in &suspensions {
        let mut pole_edges = Vec::new();
        for (i, &x) in c.iter().enumerate() {
            for &y in &c[i + 1..] {
                if poles.contains(&(x.min(y), x.max(y))) {
                    pole_edges.push((x.min(y), x.max(y)));
                }
            }
        }
        // forest check: acyclic iff every component has |E| = |V| - 1
        let verts: Vec<usize> = c.clone();
        let sub = AdjList::from_edges(
            verts.iter().copied().max().map_or(0, |m| m + 1),
            &pole_edges,
        );
        let comps = sub.components_without(&[]);
        let mut edge_total = 0;
        for comp in &comps {
            let inside = pole_edges
                .iter()
                .filter(|(x, y)| comp.contains(x) && comp.contains(y))
                .count();
            if inside + 1 > comp.len() {
                return false;
            }
            edge_total += inside;
        }
        assert_eq!(edge_total, pole_edges.len());
    }
    // nontriviality: at least two maximal suspensions
    suspensions.len() >= 2
}

/// Deterministic random connected triangle-free graph on up to `max_n`
/// vertices, names "0".."9".
pub fn random_triangle_free(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let target = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
        let mut pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        pairs.shuffle(rng);
        let mut adj = vec![vec![false; n]; n];
        let mut edges = Vec::new();
        for (u, v) in pairs {
            if edges.len() >= target {
                break;
            }
            let triangle = (0..n).any(|w| adj[u][w] && adj[v][w]);
            if !triangle {
                adj[u][v] = true;
                adj[v][u] = true;
                edges.push((u, v));
            }
        }
        let a = AdjList::from_edges(n, &edges);
        if !a.connected() {
            continue;
        }
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        return Graph::new(names, &edges).expect("random graph");
    }
}

/// The structural assertions run on every positively classified graph:
/// the diagonal graph is a tree whose non-leaves are the poles, the
/// coloring is well-defined with even distances, the forest pair spans by
/// color inside the complement, and the commuting graph is a tree of
/// diameter at least 3 sized by the discretionary count.
pub fn assert_construction_shape(g: &Graph, c: &fidl::FidlConstruction) -> Result<(), String> {
    let dg = &c.suspension_tree.diagonal;
    if !dg.is_tree() {
        return Err("diagonal graph is not a tree".into());
    }
    let leaves: BTreeSet<usize> = dg.leaves().into_iter().collect();
    let stripped: Vec<(VertexId, VertexId)> = (0..dg.vertices.len())
        .filter(|i| !leaves.contains(i))
        .map(|i| dg.support(i))
        .collect();
    if stripped != c.suspension_tree.poles {
        return Err("poles differ from the diagonal tree's non-leaves".into());
    }
    // same-support diagonal vertices sit at even distance
    let dist = dg.distances();
    for i in 0..dg.vertices.len() {
        for j in i + 1..dg.vertices.len() {
            let (a, b) = dg.support(i);
            let (x, y) = dg.support(j);
            if (a == x || a == y || b == x || b == y) && !dist[i][j].is_multiple_of(2) {
                return Err(format!(
                    "odd distance between overlapping diagonal vertices {:?} and {:?}",
                    dg.support(i),
                    dg.support(j)
                ));
            }
        }
    }
    // colors are total and the trees are monochromatic, disjoint, spanning
    let mut seen: BTreeMap<VertexId, usize> = BTreeMap::new();
    for (i, tree) in c.lambda.trees.iter().enumerate() {
        if !tree.is_tree() {
            return Err(format!("forest component {i} is not a tree"));
        }
        for &v in &tree.vertices {
            if c.coloring.gamma[v] != Some(i as u8) {
                return Err(format!("vertex {} has the wrong color", g.name(v)));
            }
            if seen.insert(v, i).is_some() {
                return Err(format!("vertex {} lies in both trees", g.name(v)));
            }
        }
        for &(x, y) in &tree.edges {
            if g.adjacent(x, y) {
                return Err(format!(
                    "tree edge {}-{} is not in the complement",
                    g.name(x),
                    g.name(y)
                ));
            }
        }
    }
    if seen.len() != g.vertex_count() {
        return Err("forest pair does not span the graph".into());
    }
    // commuting graph shape
    let delta = &c.delta;
    if delta.connectivity_suite().components.len() != 1
        || delta.edge_count() + 1 != delta.vertex_count()
    {
        return Err("commuting graph is not a tree".into());
    }
    if fidl::delta_diameter(delta) < 3 {
        return Err("commuting graph diameter below 3".into());
    }
    if delta.vertex_count() != c.suspension_tree.poles.len() + c.discretionary.len() {
        return Err("commuting graph size mismatch".into());
    }
    Ok(())
}
