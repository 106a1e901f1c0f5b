//! Bundled test graphs, addressable by name from the CLI and tests.

use crate::graph::Graph;

/// FIG4: nonplanar triangle-free graph whose Coxeter group contains a
/// visible index-4 tree RAAG subgroup. 9 vertices, 14 edges.
pub const FIG4_EDGES: &str = "0 3\n0 4\n0 5\n1 3\n1 4\n1 6\n2 3\n2 4\n2 7\n3 8\n4 8\n5 8\n6 8\n7 8\n";

/// FIG2: nonplanar triangle-free graph that fails the decision procedure.
/// 9 vertices, 14 edges.
pub const FIG2_EDGES: &str = "0 3\n0 4\n0 5\n0 7\n1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 6\n2 7\n3 8\n4 8\n";

fn cycle(n: usize) -> Graph {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(names, &edges).expect("cycle fixture")
}

fn path(n: usize) -> Graph {
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::new(names, &edges).expect("path fixture")
}

/// Known fixture names in canonical order.
pub fn names() -> &'static [&'static str] {
    &[
        "C4", "C6", "C8", "FIG2", "FIG4", "K23", "K33", "P4", "PETERSEN", "TWOSUS",
    ]
}

/// Looks up a bundled fixture by (case-insensitive) name.
pub fn by_name(name: &str) -> Option<Graph> {
    let g = match name.to_ascii_uppercase().as_str() {
        "FIG4" => Graph::parse(FIG4_EDGES, crate::graph::GraphFormat::EdgeList).expect("FIG4"),
        "FIG2" => Graph::parse(FIG2_EDGES, crate::graph::GraphFormat::EdgeList).expect("FIG2"),
        "C4" => cycle(4),
        "C6" => cycle(6),
        "C8" => cycle(8),
        "P4" => path(4),
        "K33" => Graph::from_named_edges(
            &[
                ("0", "3"), ("0", "4"), ("0", "5"),
                ("1", "3"), ("1", "4"), ("1", "5"),
                ("2", "3"), ("2", "4"), ("2", "5"),
            ],
            &[],
        )
        .expect("K33"),
        "K23" => Graph::from_named_edges(
            &[
                ("0", "2"), ("0", "3"), ("0", "4"),
                ("1", "2"), ("1", "3"), ("1", "4"),
            ],
            &[],
        )
        .expect("K23"),
        "TWOSUS" => Graph::from_named_edges(
            &[
                ("a", "c"), ("a", "d"), ("a", "e"),
                ("b", "c"), ("b", "d"), ("b", "e"),
                ("c", "f"), ("d", "f"),
            ],
            &[],
        )
        .expect("TWOSUS"),
        "PETERSEN" => Graph::from_named_edges(
            &[
                ("0", "1"), ("1", "2"), ("2", "3"), ("3", "4"), ("0", "4"),
                ("0", "5"), ("1", "6"), ("2", "7"), ("3", "8"), ("4", "9"),
                ("5", "7"), ("7", "9"), ("6", "9"), ("6", "8"), ("5", "8"),
            ],
            &[],
        )
        .expect("PETERSEN"),
        _ => return None,
    };
    Some(g)
}
