//! Four-clique covers with H-surplus: the neighborhood-class auxiliary graph
//! and the SAT-decided cover criterion (Algorithms 2 and 3).

use std::collections::BTreeSet;

use varisat::{ExtendFormula, Lit, Solver};

use crate::error::Error;
use crate::graph::{class_enumeration_masks, LabeledGraph, NeighborhoodSet};
use crate::search::PropertySpec;

/// The sets A, B, C of Algorithms 2/3, computed once per (H, P) and shared
/// across the k-sweep.
#[derive(Clone, Debug)]
pub struct NeighborhoodCatalog {
    /// A: admissible proper neighborhoods, in extension order.
    pub classes: Vec<NeighborhoodSet>,
    /// B: unordered class-index pairs stored as (i, j) with i > j.
    pub pairs: BTreeSet<(usize, usize)>,
    /// C: class indices whose clique must be complete to full-neighborhood
    /// vertices.
    pub apex_links: BTreeSet<usize>,
}

/// The graph G assembled at the end of Algorithm 3, with its three-part
/// vertex layout: indices 0..h_size are V(H) (label L at index L-1), then
/// one vertex per class, then the k apex vertices.
#[derive(Clone, Debug)]
pub struct AuxiliaryCliqueGraph {
    pub h_size: usize,
    pub class_count: usize,
    pub apex_count: usize,
    adj: Vec<Vec<u64>>,
}

impl AuxiliaryCliqueGraph {
    fn new(n: usize) -> Self {
        let blocks = n.div_ceil(64);
        AuxiliaryCliqueGraph {
            h_size: 0,
            class_count: 0,
            apex_count: 0,
            adj: vec![vec![0u64; blocks]; n],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        debug_assert_ne!(a, b);
        self.adj[a][b / 64] |= 1 << (b % 64);
        self.adj[b][a / 64] |= 1 << (a % 64);
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b / 64] >> (b % 64) & 1 == 1
    }
}

/// The four vertex sets (by auxiliary-graph index) witnessing a cover.
#[derive(Clone, Debug)]
pub struct CoverCertificate {
    pub cliques: [Vec<usize>; 4],
}

impl CoverCertificate {
    /// Surplus Σ |Q_i ∩ V(H)|, counting a vertex once per containing clique.
    pub fn surplus(&self, h_size: usize) -> usize {
        self.cliques
            .iter()
            .map(|q| q.iter().filter(|&&v| v < h_size).count())
            .sum()
    }
}

/// All proper subsets N of V(H), in descending tuple order, whose one-vertex
/// extension passes the shared attachment filters: stable-triple-free, fails
/// P, and A-free against the live set. (A counterexample whose attachment
/// contains a live member of A is handled by that member's own subtree, so
/// such neighborhoods can be ruled out here.)
pub fn build_neighborhood_classes(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
) -> Vec<NeighborhoodSet> {
    let full = h.vertex_mask();
    class_enumeration_masks(full)
        .into_iter()
        .filter(|&m| m != full)
        .filter(|&m| {
            let g = h.extend_with_mask(m);
            !g.has_stable_triple() && !p.satisfied(&g) && g.is_set_free(live)
        })
        .map(NeighborhoodSet::from_mask)
        .collect()
}

/// Second loop: pairs of classes whose joint (non-adjacent) extension fails
/// an attachment filter — those cliques must be complete to each other in
/// any counterexample still under consideration.
pub fn build_completion_pairs(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
    classes: &[NeighborhoodSet],
) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 1..classes.len() {
        let gi = h.extend_with_mask(classes[i].mask());
        for (j, nj) in classes.iter().enumerate().take(i) {
            // u (neighborhood N_i) and v (neighborhood N_j), u ≁ v.
            let g = gi.extend_with_mask(nj.mask());
            if g.has_stable_triple() || p.satisfied(&g) || !g.is_set_free(live) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// Third loop of Algorithm 3: classes whose extension alongside a
/// full-neighborhood vertex fails an attachment filter; those cliques must
/// be complete to the vertices complete to H.
pub fn build_apex_links(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
    classes: &[NeighborhoodSet],
) -> BTreeSet<usize> {
    let full = h.vertex_mask();
    classes
        .iter()
        .enumerate()
        .filter(|(_, n)| {
            let g = h.extend_with_mask(n.mask()).extend_with_mask(full);
            g.has_stable_triple() || p.satisfied(&g) || !g.is_set_free(live)
        })
        .map(|(i, _)| i)
        .collect()
}

/// Computes A, B, C for (h, p) under the live set; independent of k.
pub fn build_catalog(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
) -> NeighborhoodCatalog {
    let classes = build_neighborhood_classes(h, p, live);
    let pairs = build_completion_pairs(h, p, live, &classes);
    let apex_links = build_apex_links(h, p, live, &classes);
    NeighborhoodCatalog {
        classes,
        pairs,
        apex_links,
    }
}

/// Assembles the auxiliary graph: H, plus one vertex per class adjacent to
/// its neighborhood in H and to paired classes, plus k pairwise non-adjacent
/// apex vertices complete to H and linked to classes in C.
pub fn assemble_auxiliary(
    h: &LabeledGraph,
    catalog: &NeighborhoodCatalog,
    k: usize,
) -> AuxiliaryCliqueGraph {
    let hs = h.vertex_count();
    let m = catalog.classes.len();
    let mut aux = AuxiliaryCliqueGraph::new(hs + m + k);
    aux.h_size = hs;
    aux.class_count = m;
    aux.apex_count = k;
    for e in h.edges() {
        aux.add_edge((e.lo - 1) as usize, (e.hi - 1) as usize);
    }
    for (i, n) in catalog.classes.iter().enumerate() {
        for &l in n.members() {
            aux.add_edge(hs + i, (l - 1) as usize);
        }
    }
    for &(i, j) in &catalog.pairs {
        aux.add_edge(hs + i, hs + j);
    }
    for a in 0..k {
        for v in 0..hs {
            aux.add_edge(hs + m + a, v);
        }
        for &i in &catalog.apex_links {
            aux.add_edge(hs + m + a, hs + i);
        }
    }
    aux
}

/// SAT variable (DIMACS-style, 1-based) for "vertex v is in clique i".
fn var_of(v: usize, i: usize) -> isize {
    (4 * v + i + 1) as isize
}

/// Builds the CNF clauses for the cover decision. Returns (clauses,
/// variable count). Auxiliary cardinality variables are numbered after the
/// 4·n vertex variables.
fn encode(aux: &AuxiliaryCliqueGraph) -> (Vec<Vec<isize>>, usize) {
    let n = aux.vertex_count();
    let mut clauses: Vec<Vec<isize>> = Vec::new();
    // Coverage.
    for v in 0..n {
        clauses.push((0..4).map(|i| var_of(v, i)).collect());
    }
    // Anti-clique: non-adjacent vertices never share a clique.
    for u in 0..n {
        for v in (u + 1)..n {
            if !aux.adjacent(u, v) {
                for i in 0..4 {
                    clauses.push(vec![-var_of(u, i), -var_of(v, i)]);
                }
            }
        }
    }
    // Cardinality: at least |H|+2 of the 4·|H| H-part variables are true,
    // encoded as at-most-(4·|H| − (|H|+2)) over their negations with a
    // sequential counter.
    let h_lits: Vec<isize> = (0..aux.h_size)
        .flat_map(|v| (0..4).map(move |i| var_of(v, i)))
        .collect();
    let need = aux.h_size + 2;
    let mut next_var = 4 * n;
    if need > h_lits.len() {
        clauses.push(vec![]); // unsatisfiable
    } else if need > 0 {
        let bound = h_lits.len() - need;
        let negs: Vec<isize> = h_lits.iter().map(|&l| -l).collect();
        at_most(&negs, bound, &mut clauses, &mut next_var);
    }
    (clauses, next_var)
}

/// Sinz sequential-counter encoding of "at most `bound` of `lits` are true".
fn at_most(lits: &[isize], bound: usize, clauses: &mut Vec<Vec<isize>>, next_var: &mut usize) {
    let n = lits.len();
    if bound >= n {
        return;
    }
    if bound == 0 {
        for &l in lits {
            clauses.push(vec![-l]);
        }
        return;
    }
    // s[i][j] ⇔ "at least j+1 of the first i+1 literals are true", allocated
    // for i in 0..n-1, j in 0..bound.
    let mut fresh = || {
        *next_var += 1;
        *next_var as isize
    };
    let s: Vec<Vec<isize>> = (0..n - 1)
        .map(|_| (0..bound).map(|_| fresh()).collect())
        .collect();
    clauses.push(vec![-lits[0], s[0][0]]);
    for &sj in &s[0][1..bound] {
        clauses.push(vec![-sj]);
    }
    for i in 1..n - 1 {
        clauses.push(vec![-lits[i], s[i][0]]);
        clauses.push(vec![-s[i - 1][0], s[i][0]]);
        for j in 1..bound {
            clauses.push(vec![-lits[i], -s[i - 1][j - 1], s[i][j]]);
            clauses.push(vec![-s[i - 1][j], s[i][j]]);
        }
        clauses.push(vec![-lits[i], -s[i - 1][bound - 1]]);
    }
    clauses.push(vec![-lits[n - 1], -s[n - 2][bound - 1]]);
}

/// Independently checks a certificate against the auxiliary graph.
pub fn validate_certificate(aux: &AuxiliaryCliqueGraph, cert: &CoverCertificate) -> bool {
    let n = aux.vertex_count();
    let mut covered = vec![false; n];
    for q in &cert.cliques {
        for (a, &u) in q.iter().enumerate() {
            if u >= n {
                return false;
            }
            covered[u] = true;
            for &v in &q[a + 1..] {
                if u == v || !aux.adjacent(u, v) {
                    return false;
                }
            }
        }
    }
    covered.iter().all(|&c| c) && cert.surplus(aux.h_size) >= aux.h_size + 2
}

/// Decides the four-clique-cover criterion via SAT; a returned certificate
/// has already passed independent validation.
pub fn cover_exists(aux: &AuxiliaryCliqueGraph) -> Result<Option<CoverCertificate>, Error> {
    let (clauses, _) = encode(aux);
    let mut solver = Solver::new();
    for c in &clauses {
        let lits: Vec<Lit> = c.iter().map(|&l| Lit::from_dimacs(l)).collect();
        solver.add_clause(&lits);
    }
    let sat = solver
        .solve()
        .map_err(|e| Error::Solver(format!("{e:?}")))?;
    if !sat {
        return Ok(None);
    }
    let model = solver
        .model()
        .ok_or_else(|| Error::Solver("satisfiable but no model produced".into()))?;
    let mut truth = vec![false; 4 * aux.vertex_count() + 1];
    for lit in &model {
        let d = lit.to_dimacs();
        let v = d.unsigned_abs();
        if v < truth.len() {
            truth[v] = d > 0;
        }
    }
    let mut cliques: [Vec<usize>; 4] = Default::default();
    for v in 0..aux.vertex_count() {
        for (i, q) in cliques.iter_mut().enumerate() {
            if truth[var_of(v, i) as usize] {
                q.push(v);
            }
        }
    }
    let cert = CoverCertificate { cliques };
    if !validate_certificate(aux, &cert) {
        return Err(Error::Solver(
            "model failed independent certificate validation".into(),
        ));
    }
    Ok(Some(cert))
}

/// DIMACS CNF text of the cover decision instance, for external audit.
pub fn to_dimacs(aux: &AuxiliaryCliqueGraph) -> String {
    let (clauses, nvars) = encode(aux);
    let mut out = String::new();
    out.push_str(&format!("p cnf {} {}\n", nvars, clauses.len()));
    for c in &clauses {
        for l in c {
            out.push_str(&format!("{l} "));
        }
        out.push_str("0\n");
    }
    out
}

/// Algorithm 3: does every counterexample with an induced `h` either satisfy
/// `p` or contain h ∨ F_k?
pub fn algorithm3(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
    k: usize,
) -> Result<bool, Error> {
    if k > 3 {
        return Err(Error::FkOutOfRange(k as u32));
    }
    let catalog = build_catalog(h, p, live);
    algorithm3_with_catalog(h, &catalog, k)
}

/// Algorithm 3 reusing a precomputed catalog (the k-sweep cache).
pub fn algorithm3_with_catalog(
    h: &LabeledGraph,
    catalog: &NeighborhoodCatalog,
    k: usize,
) -> Result<bool, Error> {
    let aux = assemble_auxiliary(h, catalog, k);
    Ok(cover_exists(&aux)?.is_some())
}

/// Algorithm 2 is the k = 0 instance of Algorithm 3.
pub fn algorithm2(
    h: &LabeledGraph,
    p: &PropertySpec,
    live: &[LabeledGraph],
) -> Result<bool, Error> {
    algorithm3(h, p, live, 0)
}
