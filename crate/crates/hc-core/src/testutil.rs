//! Small graph builders shared by unit tests across modules.

use crate::graph::LabeledGraph;

/// Path 1-2-...-n.
pub fn path(n: usize) -> LabeledGraph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// Cycle 1-2-...-n-1.
pub fn cycle(n: usize) -> LabeledGraph {
    assert!(n >= 3);
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
    edges.push((n as u32, 1));
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> LabeledGraph {
    let mut edges = Vec::new();
    for a in 1..=n as u32 {
        for b in (a + 1)..=n as u32 {
            edges.push((a, b));
        }
    }
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// The wheel W5: rim cycle 1-2-3-4-5 with hub 6 adjacent to all.
pub fn wheel5() -> LabeledGraph {
    LabeledGraph::from_edges(
        6,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (1, 6),
            (2, 6),
            (3, 6),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap()
}
