//! Randomized property checks over small graphs.

use proptest::prelude::*;

use hc_core::graph::{
    class_enumeration_masks, extension_cmp, extension_order_masks, EdgeKey, LabeledGraph,
    MatchClassification, NeighborhoodSet,
};
use hc_core::graph6::{encode_graph6, parse_graph6};

/// A graph on 1..=8 labeled vertices drawn from a random edge bitmask.
fn small_graph() -> impl Strategy<Value = LabeledGraph> {
    (1usize..=8, any::<u32>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut idx = 0;
        for a in 1..=n as u32 {
            for b in (a + 1)..=n as u32 {
                if bits >> (idx % 32) & 1 == 1 {
                    edges.push((a, b));
                }
                idx += 7; // stride co-prime to 32 spreads reused bits
            }
        }
        LabeledGraph::from_edges(n, &edges).unwrap()
    })
}

fn brute_has_stable_triple(g: &LabeledGraph) -> bool {
    let labels: Vec<u32> = g.labels().collect();
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate().skip(i + 1) {
            for &c in labels.iter().skip(j + 1) {
                if !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c) {
                    return true;
                }
            }
        }
    }
    false
}

fn brute_dominating_edges(g: &LabeledGraph) -> Vec<EdgeKey> {
    let all = g.vertex_mask();
    g.edges()
        .into_iter()
        .filter(|e| {
            let closed =
                g.neighbors(e.lo) | g.neighbors(e.hi) | 1 << (e.lo - 1) | 1 << (e.hi - 1);
            closed & all == all
        })
        .collect()
}

/// Induced-subgraph containment by brute force over all injections of
/// sorted pattern labels into host subsets (host graphs stay tiny here).
fn brute_contains_induced(host: &LabeledGraph, pattern: &LabeledGraph) -> bool {
    let hl: Vec<u32> = host.labels().collect();
    let pl: Vec<u32> = pattern.labels().collect();
    if pl.len() > hl.len() {
        return false;
    }
    fn rec(
        host: &LabeledGraph,
        pattern: &LabeledGraph,
        pl: &[u32],
        hl: &[u32],
        used: &mut Vec<Option<u32>>,
    ) -> bool {
        let k = used.iter().filter(|u| u.is_some()).count();
        if k == pl.len() {
            return true;
        }
        'outer: for &h in hl {
            if used.iter().flatten().any(|&u| u == h) {
                continue;
            }
            for (i, prev) in used.iter().enumerate() {
                if let Some(ph) = prev {
                    if pattern.adjacent(pl[i], pl[k]) != host.adjacent(*ph, h) {
                        continue 'outer;
                    }
                }
            }
            used[k] = Some(h);
            if rec(host, pattern, pl, hl, used) {
                return true;
            }
            used[k] = None;
        }
        false
    }
    let mut used = vec![None; pl.len()];
    rec(host, pattern, &pl, &hl, &mut used)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(g in small_graph()) {
        let cc = g.complement().complement();
        prop_assert_eq!(g.vertex_count(), cc.vertex_count());
        prop_assert_eq!(g.edges(), cc.edges());
    }

    #[test]
    fn stable_triple_matches_brute_force(g in small_graph()) {
        prop_assert_eq!(g.has_stable_triple(), brute_has_stable_triple(&g));
    }

    #[test]
    fn stable_triple_is_complement_triangle(g in small_graph()) {
        let k3 = LabeledGraph::from_edges(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        prop_assert_eq!(g.has_stable_triple(), g.complement().contains_induced(&k3));
    }

    #[test]
    fn dominating_edges_match_brute_force(g in small_graph()) {
        let got = g.dominating_edges();
        prop_assert_eq!(got.clone(), brute_dominating_edges(&g));
        // The chosen edge is the minimum under the (max, min) label order.
        let want = got
            .iter()
            .min_by_key(|e| (e.hi, e.lo))
            .copied();
        prop_assert_eq!(g.choose_dominating_edge(), want);
    }

    #[test]
    fn contains_induced_matches_brute_force(
        host in small_graph(),
        pattern in (1usize..=8, any::<u32>()).prop_map(|(n, bits)| {
            let n = n.min(4);
            let mut edges = Vec::new();
            let mut idx = 0;
            for a in 1..=n as u32 {
                for b in (a + 1)..=n as u32 {
                    if bits >> idx & 1 == 1 {
                        edges.push((a, b));
                    }
                    idx += 1;
                }
            }
            LabeledGraph::from_edges(n, &edges).unwrap()
        }),
    ) {
        prop_assert_eq!(
            host.contains_induced(&pattern),
            brute_contains_induced(&host, &pattern)
        );
    }

    #[test]
    fn induced_subgraphs_are_contained(g in small_graph(), mask_bits in any::<u64>()) {
        let mask = mask_bits & g.vertex_mask();
        prop_assume!(mask != 0);
        let sub = g.induced_subgraph(mask);
        prop_assert!(g.contains_induced(&sub));
    }

    #[test]
    fn extensions_preserve_containment(g in small_graph(), mask_bits in any::<u64>()) {
        let ext = g.extend_with_mask(mask_bits & g.vertex_mask());
        prop_assert_eq!(ext.vertex_count(), g.vertex_count() + 1);
        prop_assert!(ext.contains_induced(&g));
    }

    #[test]
    fn extension_order_is_sorted_and_complete(ground_bits in any::<u16>()) {
        let ground = ground_bits as u64;
        let masks = extension_order_masks(ground);
        prop_assert_eq!(masks.len(), 1usize << ground.count_ones());
        prop_assert_eq!(masks.first(), Some(&0));
        for m in &masks {
            prop_assert_eq!(m & !ground, 0);
        }
        for w in masks.windows(2) {
            let a = NeighborhoodSet::from_mask(w[0]);
            let b = NeighborhoodSet::from_mask(w[1]);
            prop_assert_eq!(
                extension_cmp(a.members(), b.members()),
                std::cmp::Ordering::Less
            );
        }
        // Class enumeration is the exact reverse of extension order.
        let mut rev = masks.clone();
        rev.reverse();
        prop_assert_eq!(rev, class_enumeration_masks(ground));
    }

    #[test]
    fn extension_cmp_prefix_precedes(tuple in proptest::collection::vec(1u32..=20, 0..6)) {
        let mut sorted: Vec<u32> = tuple.clone();
        sorted.sort_unstable();
        sorted.dedup();
        for cut in 0..sorted.len() {
            prop_assert_eq!(
                extension_cmp(&sorted[..cut], &sorted),
                std::cmp::Ordering::Less
            );
        }
        prop_assert_eq!(extension_cmp(&sorted, &sorted), std::cmp::Ordering::Equal);
    }

    #[test]
    fn graph6_roundtrips(g in small_graph()) {
        let line = encode_graph6(&g).unwrap();
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(g.vertex_count(), back.vertex_count());
        prop_assert_eq!(g.edges(), back.edges());
    }

    #[test]
    fn classification_is_consistent(g in small_graph()) {
        match g.classify_matching() {
            MatchClassification::DominatingEdge(e) => {
                prop_assert_eq!(Some(e), g.choose_dominating_edge());
            }
            MatchClassification::TwoEdgeMatching(e1, e2) => {
                prop_assert!(g.dominating_edges().is_empty());
                // Disjoint edges joined by a cross edge; every outside
                // vertex sees both edges.
                let ends = [e1.lo, e1.hi, e2.lo, e2.hi];
                prop_assert!(!ends[..2].contains(&ends[2]) && !ends[..2].contains(&ends[3]));
                prop_assert!(
                    ends[..2]
                        .iter()
                        .any(|&a| ends[2..].iter().any(|&b| g.adjacent(a, b)))
                );
                let cov1 = g.neighbors(e1.lo) | g.neighbors(e1.hi);
                let cov2 = g.neighbors(e2.lo) | g.neighbors(e2.hi);
                let ends_mask: u64 = ends.iter().map(|&v| 1u64 << (v - 1)).sum();
                let outside = g.vertex_mask() & !ends_mask;
                prop_assert_eq!(outside & !cov1, 0);
                prop_assert_eq!(outside & !cov2, 0);
            }
            MatchClassification::Neither => {
                prop_assert!(g.dominating_edges().is_empty());
            }
        }
    }

    #[test]
    fn is_set_free_matches_containment(g in small_graph(), h in small_graph()) {
        prop_assert_eq!(g.is_set_free(std::slice::from_ref(&h)), !g.contains_induced(&h));
        prop_assert!(g.is_set_free(&[]));
    }
}
