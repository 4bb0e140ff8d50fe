//! Labeled simple graphs on at most 63 vertices, stored as adjacency bitsets.
//!
//! Vertices carry persistent positive integer labels. Every graph built by
//! this crate has labels exactly `1..=n`, so label `L` lives at bitset index
//! `L - 1`. All operations are pure; graphs are immutable values.

use crate::error::Error;

/// Hard cap on vertex count so a neighborhood fits in a `u64`.
pub const MAX_VERTICES: usize = 63;

/// A simple undirected graph with vertex labels `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    /// `adj[i]` is the neighbor set of the vertex labeled `i + 1`.
    adj: Vec<u64>,
}

/// An edge identified as `(hi, lo)` with `hi > lo`, ordered lexicographically.
///
/// The minimum edge under this order is the one whose larger endpoint is as
/// small as possible, which is exactly the dominating-edge choice rule.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct EdgeKey {
    pub hi: u32,
    pub lo: u32,
}

impl EdgeKey {
    pub fn new(a: u32, b: u32) -> Self {
        assert!(a != b, "self-loop edge key");
        EdgeKey {
            hi: a.max(b),
            lo: a.min(b),
        }
    }
}

/// A set of vertex labels, kept strictly increasing.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct NeighborhoodSet {
    members: Vec<u32>,
}

impl NeighborhoodSet {
    pub fn new(mut members: Vec<u32>) -> Self {
        members.sort_unstable();
        members.dedup();
        NeighborhoodSet { members }
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros();
            members.push(i + 1);
            m &= m - 1;
        }
        NeighborhoodSet { members }
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().map(|&l| 1u64 << (l - 1)).sum()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Result of the dominating-edge / two-edge-matching classification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatchClassification {
    DominatingEdge(EdgeKey),
    TwoEdgeMatching(EdgeKey, EdgeKey),
    Neither,
}

impl LabeledGraph {
    /// The empty graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph too large");
        LabeledGraph { adj: vec![0; n] }
    }

    /// Builds a graph from a list of label pairs.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, Error> {
        let mut g = LabeledGraph::empty(n);
        for &(a, b) in edges {
            g.add_edge_checked(a, b)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, a: u32, b: u32) -> Result<(), Error> {
        let n = self.vertex_count() as u32;
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::LabelOutOfRange {
                label: a.max(b),
                vertex_count: n,
            });
        }
        if a == b {
            return Err(Error::SelfLoop { label: a });
        }
        self.adj[(a - 1) as usize] |= 1 << (b - 1);
        self.adj[(b - 1) as usize] |= 1 << (a - 1);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Bitmask with one bit per vertex.
    pub fn vertex_mask(&self) -> u64 {
        if self.adj.is_empty() {
            0
        } else {
            (1u64 << self.adj.len()) - 1
        }
    }

    /// Neighbor mask of the vertex labeled `label`.
    pub fn neighbors(&self, label: u32) -> u64 {
        self.adj[(label - 1) as usize]
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.adj[(a - 1) as usize] >> (b - 1) & 1 == 1
    }

    /// All labels, `1..=n`.
    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        1..=self.vertex_count() as u32
    }

    /// Edges in ascending `EdgeKey` order.
    pub fn edges(&self) -> Vec<EdgeKey> {
        let mut out = Vec::new();
        for hi in 2..=self.vertex_count() as u32 {
            for lo in 1..hi {
                if self.adjacent(hi, lo) {
                    out.push(EdgeKey { hi, lo });
                }
            }
        }
        out
    }

    /// True iff three pairwise non-adjacent vertices exist.
    ///
    /// Graphs with fewer than three vertices have no stable triple.
    pub fn has_stable_triple(&self) -> bool {
        let n = self.vertex_count();
        let all = self.vertex_mask();
        for u in 0..n {
            let non_u = all & !self.adj[u] & !(1u64 << u);
            let mut rest = non_u & !((1u64 << (u + 1)) - 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if non_u & !self.adj[v] & !(1u64 << v) & !((1u64 << (v + 1)) - 1) != 0 {
                    return true;
                }
            }
        }
        false
    }

    /// All dominating edges, sorted ascending by `EdgeKey`.
    pub fn dominating_edges(&self) -> Vec<EdgeKey> {
        let all = self.vertex_mask();
        self.edges()
            .into_iter()
            .filter(|e| {
                let covered = self.neighbors(e.hi)
                    | self.neighbors(e.lo)
                    | 1 << (e.hi - 1)
                    | 1 << (e.lo - 1);
                covered & all == all
            })
            .collect()
    }

    /// The dominating edge that minimizes the larger label, then the smaller.
    pub fn choose_dominating_edge(&self) -> Option<EdgeKey> {
        // edges() is already in ascending EdgeKey order.
        let all = self.vertex_mask();
        self.edges().into_iter().find(|e| {
            let covered =
                self.neighbors(e.hi) | self.neighbors(e.lo) | 1 << (e.hi - 1) | 1 << (e.lo - 1);
            covered & all == all
        })
    }

    /// Returns this graph plus one vertex labeled `n + 1` adjacent exactly
    /// to the labels in `nbrs`.
    pub fn extend_with_vertex(&self, nbrs: &NeighborhoodSet) -> Result<LabeledGraph, Error> {
        let n = self.vertex_count() as u32;
        if let Some(&bad) = nbrs.members().iter().find(|&&l| l == 0 || l > n) {
            return Err(Error::LabelOutOfRange {
                label: bad,
                vertex_count: n,
            });
        }
        Ok(self.extend_with_mask(nbrs.mask()))
    }

    /// Mask-based variant of [`extend_with_vertex`]; `mask` must lie within
    /// the current vertex mask.
    pub fn extend_with_mask(&self, mask: u64) -> LabeledGraph {
        debug_assert_eq!(mask & !self.vertex_mask(), 0);
        let n = self.vertex_count();
        assert!(n < MAX_VERTICES, "graph too large");
        let mut adj = Vec::with_capacity(n + 1);
        let new_bit = 1u64 << n;
        for (i, &row) in self.adj.iter().enumerate() {
            adj.push(if mask >> i & 1 == 1 { row | new_bit } else { row });
        }
        adj.push(mask);
        LabeledGraph { adj }
    }

    /// Same labels, complemented adjacency.
    pub fn complement(&self) -> LabeledGraph {
        let all = self.vertex_mask();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &row)| !row & all & !(1u64 << i))
            .collect();
        LabeledGraph { adj }
    }

    /// Subgraph induced by the vertices of `mask`, relabeled densely `1..=k`
    /// in ascending label order.
    pub fn induced_subgraph(&self, mask: u64) -> LabeledGraph {
        let mut verts = Vec::new();
        let mut m = mask;
        while m != 0 {
            verts.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        LabeledGraph { adj }
    }

    /// Decides induced-subgraph containment: does some vertex subset of
    /// `self` induce a graph isomorphic to `pattern`?
    pub fn contains_induced(&self, pattern: &LabeledGraph) -> bool {
        induced_search(self, pattern, &mut |_| false)
    }

    /// Union of the vertex sets of all induced copies of `pattern`, as a mask.
    pub fn induced_copies_union(&self, pattern: &LabeledGraph) -> u64 {
        let mut union = 0u64;
        induced_search(self, pattern, &mut |copy| {
            union |= copy;
            false // keep enumerating
        });
        union
    }

    /// True iff `self` contains none of `forbidden` as an induced subgraph.
    pub fn is_set_free(&self, forbidden: &[LabeledGraph]) -> bool {
        forbidden.iter().all(|f| !self.contains_induced(f))
    }

    /// Classifies by dominating edge, then by connected dominating matching
    /// of two edges, iterating edge pairs in ascending `(EdgeKey, EdgeKey)`
    /// order for a reproducible witness.
    pub fn classify_matching(&self) -> MatchClassification {
        if let Some(e) = self.choose_dominating_edge() {
            return MatchClassification::DominatingEdge(e);
        }
        let edges = self.edges();
        let all = self.vertex_mask();
        for (i, &e1) in edges.iter().enumerate() {
            let m1 = 1u64 << (e1.hi - 1) | 1 << (e1.lo - 1);
            let cov1 = self.neighbors(e1.hi) | self.neighbors(e1.lo);
            for &e2 in &edges[i + 1..] {
                let m2 = 1u64 << (e2.hi - 1) | 1 << (e2.lo - 1);
                if m1 & m2 != 0 {
                    continue;
                }
                // The two edges must be joined by at least one cross edge.
                if cov1 & m2 == 0 {
                    continue;
                }
                let cov2 = self.neighbors(e2.hi) | self.neighbors(e2.lo);
                let outside = all & !m1 & !m2;
                if outside & !cov1 == 0 && outside & !cov2 == 0 {
                    return MatchClassification::TwoEdgeMatching(e1, e2);
                }
            }
        }
        MatchClassification::Neither
    }
}

/// Compares two sorted label tuples in the order candidate extensions are
/// considered: plain ascending lexicographic order, with a proper prefix
/// before any of its extensions. Equivalently, of two distinct sets the one
/// containing the smallest element of their symmetric difference comes
/// first. The empty set is therefore first.
pub fn extension_cmp(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    a.cmp(b)
}

/// All subsets of `ground`, in the order candidate extensions are considered
/// (the [`extension_cmp`] order).
pub fn extension_order(ground: &NeighborhoodSet) -> Vec<NeighborhoodSet> {
    extension_order_masks(ground.mask())
        .into_iter()
        .map(NeighborhoodSet::from_mask)
        .collect()
}

fn all_submasks(ground: u64) -> Vec<Vec<u32>> {
    let mut subs: Vec<Vec<u32>> = Vec::with_capacity(1 << ground.count_ones());
    let mut sub = ground;
    loop {
        subs.push(NeighborhoodSet::from_mask(sub).members.clone());
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & ground;
    }
    subs
}

/// Mask-based variant of [`extension_order`].
pub fn extension_order_masks(ground: u64) -> Vec<u64> {
    let mut subs = all_submasks(ground);
    subs.sort_unstable_by(|a, b| extension_cmp(a, b));
    subs.into_iter()
        .map(|m| NeighborhoodSet { members: m }.mask())
        .collect()
}

/// All subsets of `ground` sorted descending by member tuple (proper prefix
/// smaller) — the order neighborhood classes are enumerated and listed in.
pub fn class_enumeration_masks(ground: u64) -> Vec<u64> {
    let mut subs = all_submasks(ground);
    subs.sort_unstable_by(|a, b| b.cmp(a));
    subs.into_iter()
        .map(|m| NeighborhoodSet { members: m }.mask())
        .collect()
}

impl std::fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LabeledGraph(n={}, edges=[", self.vertex_count())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}", e.lo, e.hi)?;
        }
        write!(f, "])")
    }
}

/// Backtracking search for induced embeddings of `pattern` into `host`.
///
/// Calls `on_copy` with the host vertex mask of each embedding found;
/// returning `true` stops the search. The overall return value is `true`
/// iff at least one embedding exists.
fn induced_search(
    host: &LabeledGraph,
    pattern: &LabeledGraph,
    on_copy: &mut dyn FnMut(u64) -> bool,
) -> bool {
    let np = pattern.vertex_count();
    let nh = host.vertex_count();
    if np == 0 {
        on_copy(0);
        return true;
    }
    if np > nh {
        return false;
    }

    // Static vertex order: most-connected-to-previous first, ties by degree.
    let order = pattern_order(pattern);
    let pdeg: Vec<u32> = (0..np).map(|i| pattern.adj_row(i).count_ones()).collect();
    let hdeg: Vec<u32> = (0..nh).map(|i| host.adj_row(i).count_ones()).collect();

    let mut image = vec![0u32; np]; // host index per pattern position
    let mut used = 0u64;
    let mut found = false;

    // Iterative backtracking over `order`.
    let mut cand_stack: Vec<u64> = vec![0; np];
    let mut depth = 0usize;
    cand_stack[0] = candidates(host, pattern, &order, &image, used, 0, &pdeg, &hdeg);
    loop {
        if cand_stack[depth] == 0 {
            if depth == 0 {
                return found;
            }
            depth -= 1;
            used &= !(1u64 << image[depth]);
            continue;
        }
        let v = cand_stack[depth].trailing_zeros();
        cand_stack[depth] &= cand_stack[depth] - 1;
        image[depth] = v;
        if depth + 1 == np {
            found = true;
            let copy = used | 1u64 << v;
            if on_copy(copy) {
                return true;
            }
            // stay at this depth, try remaining candidates
        } else {
            used |= 1u64 << v;
            depth += 1;
            cand_stack[depth] =
                candidates(host, pattern, &order, &image, used, depth, &pdeg, &hdeg);
        }
    }
}

impl LabeledGraph {
    #[inline]
    fn adj_row(&self, i: usize) -> u64 {
        self.adj[i]
    }
}

fn pattern_order(pattern: &LabeledGraph) -> Vec<usize> {
    let np = pattern.vertex_count();
    let mut order = Vec::with_capacity(np);
    let mut placed = 0u64;
    for _ in 0..np {
        let mut best: Option<(u32, u32, usize)> = None;
        for i in 0..np {
            if placed >> i & 1 == 1 {
                continue;
            }
            let conn = (pattern.adj_row(i) & placed).count_ones();
            let deg = pattern.adj_row(i).count_ones();
            let key = (conn, deg, np - i); // prefer low index on ties
            if best.is_none_or(|b| key > (b.0, b.1, b.2)) {
                best = Some((conn, deg, np - i));
            }
        }
        let (conn, deg, rev) = best.unwrap();
        let idx = np - rev;
        let _ = (conn, deg);
        order.push(idx);
        placed |= 1 << idx;
    }
    order
}

#[allow(clippy::too_many_arguments)]
#[inline]
fn candidates(
    host: &LabeledGraph,
    pattern: &LabeledGraph,
    order: &[usize],
    image: &[u32],
    used: u64,
    depth: usize,
    pdeg: &[u32],
    hdeg: &[u32],
) -> u64 {
    let q = order[depth];
    let mut cand = host.vertex_mask() & !used;
    for d in 0..depth {
        let p = order[d];
        let h = image[d] as usize;
        if pattern.adj_row(q) >> p & 1 == 1 {
            cand &= host.adj_row(h);
        } else {
            cand &= !host.adj_row(h);
        }
        if cand == 0 {
            return 0;
        }
    }
    // Degree filter: an image vertex needs at least the pattern degree.
    let need = pdeg[q];
    if need > 0 {
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if hdeg[v] < need {
                cand &= !(1u64 << v);
            }
        }
    }
    cand
}
