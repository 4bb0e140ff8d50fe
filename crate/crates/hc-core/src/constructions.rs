//! Derived graph constructions: the F_k family, joins, dom(H), and I-cores.

use crate::error::Error;
use crate::graph::{extension_order_masks, LabeledGraph};

/// The tree T1: a 5-path 1-2-3-4-5 with a pendant vertex 6 at the middle.
pub fn make_t1() -> LabeledGraph {
    LabeledGraph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]).unwrap()
}

/// F_0 = K1, F_1 = two non-adjacent vertices, F_2 = P4, F_3 = complement of T1.
pub fn make_fk(k: u32) -> Result<LabeledGraph, Error> {
    match k {
        0 => Ok(LabeledGraph::from_edges(1, &[]).unwrap()),
        1 => Ok(LabeledGraph::empty(2)),
        2 => Ok(LabeledGraph::from_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap()),
        3 => Ok(make_t1().complement()),
        _ => Err(Error::FkOutOfRange(k)),
    }
}

/// The join G ∨ H: disjoint union plus all cross edges. Vertices of `g` keep
/// their labels; vertices of `h` get the next |V(h)| labels in h's own order.
pub fn join(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    let ng = g.vertex_count() as u32;
    let nh = h.vertex_count() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().iter().map(|e| (e.lo, e.hi)).collect();
    for e in h.edges() {
        edges.push((e.lo + ng, e.hi + ng));
    }
    for a in 1..=ng {
        for b in 1..=nh {
            edges.push((a, b + ng));
        }
    }
    LabeledGraph::from_edges((ng + nh) as usize, &edges).unwrap()
}

/// dom(H): every one-vertex extension of `h` (over the full power set of
/// V(h), in extension order) that has at least one dominating edge.
pub fn dom_set(h: &LabeledGraph) -> Vec<LabeledGraph> {
    extension_order_masks(h.vertex_mask())
        .into_iter()
        .map(|mask| h.extend_with_mask(mask))
        .filter(|g| g.choose_dominating_edge().is_some())
        .collect()
}

/// The I-core of `g`: the subgraph induced by the union of the vertex sets
/// of all induced copies of `i` in `g`.
pub fn core_of(g: &LabeledGraph, i: &LabeledGraph) -> LabeledGraph {
    g.induced_subgraph(g.induced_copies_union(i))
}

/// 2K2, the pattern defining the cores used by the feasibility pre-check.
pub fn two_k2() -> LabeledGraph {
    LabeledGraph::from_edges(4, &[(1, 2), (3, 4)]).unwrap()
}

/// Necessary condition for a search from `h` to prove `target`: the 2K2-core
/// of `target` must embed in the 2K2-core of `h`.
pub fn core_feasibility(h: &LabeledGraph, target: &LabeledGraph) -> bool {
    let pat = two_k2();
    core_of(h, &pat).contains_induced(&core_of(target, &pat))
}
