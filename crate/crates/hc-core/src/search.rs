//! The deterministic DFS over one-vertex graph extensions, with count/weight
//! accounting and a line-oriented trace. [`run_basic`] expands dominating
//! edges only; [`run_full`] adds the cover-based rules for stuck graphs.

use std::fmt::Write as _;

use crate::constructions::{dom_set, join, make_fk};
use crate::cover::{algorithm2, algorithm3_with_catalog, build_catalog};
use crate::error::Error;
use crate::graph::{extension_order_masks, LabeledGraph};

/// A monotone property: "contains some member of `targets` as an induced
/// subgraph". An empty target list is never satisfied.
#[derive(Clone, Debug)]
pub struct PropertySpec {
    targets: Vec<LabeledGraph>,
}

impl PropertySpec {
    pub fn new(targets: Vec<LabeledGraph>) -> Self {
        PropertySpec { targets }
    }

    pub fn targets(&self) -> &[LabeledGraph] {
        &self.targets
    }

    pub fn satisfied(&self, g: &LabeledGraph) -> bool {
        self.targets.iter().any(|t| g.contains_induced(t))
    }

    /// The property "self or contains some member of `more`" — used for the
    /// dom-fallback of the full search.
    pub fn or_contains(&self, more: Vec<LabeledGraph>) -> PropertySpec {
        let mut targets = self.targets.clone();
        targets.extend(more);
        PropertySpec { targets }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Success,
    Failure,
    AbortedUnimplementedBranch,
    BudgetExhausted,
}

/// Live state of one search run. `stack` is the set A in insertion order;
/// pop always takes the most recently pushed graph.
pub struct SearchState {
    pub stack: Vec<LabeledGraph>,
    pub added_count: u64,
    pub weight: u64,
    pub budget: Option<u64>,
    pub trace: String,
    pub status: Option<Status>,
}

/// Final report of a run.
#[derive(Debug)]
pub struct SearchOutcome {
    pub status: Status,
    pub added_count: u64,
    pub weight: u64,
    pub trace: String,
}

impl SearchState {
    /// Performs the initial P-check and, unless it fires, pushes the root.
    pub fn new(h: LabeledGraph, p: &PropertySpec, budget: Option<u64>) -> SearchState {
        let mut state = SearchState {
            stack: Vec::new(),
            added_count: 0,
            weight: 0,
            budget,
            trace: String::new(),
            status: None,
        };
        if p.satisfied(&h) {
            state.trace.push_str("initial-check satisfied\n");
            state.finish(Status::Success);
        } else {
            let cost = 1u64 << h.vertex_count();
            if state.budget.is_some_and(|b| cost > b) {
                let _ = writeln!(state.trace, "budget n={} w=0", h.vertex_count());
                state.finish(Status::BudgetExhausted);
            } else {
                state.added_count = 1;
                state.weight = cost;
                let _ = writeln!(state.trace, "root n={} w={}", h.vertex_count(), state.weight);
                state.stack.push(h);
            }
        }
        state
    }

    fn finish(&mut self, status: Status) {
        let _ = writeln!(
            self.trace,
            "done {} count={} weight={}",
            match status {
                Status::Success => "success",
                Status::Failure => "failure",
                Status::AbortedUnimplementedBranch => "aborted",
                Status::BudgetExhausted => "budget-exhausted",
            },
            self.added_count,
            self.weight
        );
        self.status = Some(status);
    }

    /// The three filters every candidate must pass: stable-triple-free,
    /// fails P, and A-free against the live set (including batch mates
    /// already accepted this iteration).
    fn admissible(&self, g: &LabeledGraph, p: &PropertySpec, batch: &[LabeledGraph]) -> bool {
        !g.has_stable_triple()
            && !p.satisfied(g)
            && g.is_set_free(&self.stack)
            && g.is_set_free(batch)
    }

    /// Filters `candidates` in consideration order, accounting each accepted
    /// graph, then places the batch on the stack in reverse so that the
    /// depth-first pops process siblings in consideration order. Returns
    /// false when the budget ran out.
    fn add_batch<I>(&mut self, candidates: I, p: &PropertySpec) -> bool
    where
        I: IntoIterator<Item = LabeledGraph>,
    {
        self.add_batch_ordered(candidates, p, false)
    }

    /// Like [`Self::add_batch`], but with `keep_order` the accepted batch is
    /// appended as considered, so pops process it in reverse consideration
    /// order.
    fn add_batch_ordered<I>(
        &mut self,
        candidates: I,
        p: &PropertySpec,
        keep_order: bool,
    ) -> bool
    where
        I: IntoIterator<Item = LabeledGraph>,
    {
        let mut batch: Vec<LabeledGraph> = Vec::new();
        for g in candidates {
            if !self.admissible(&g, p, &batch) {
                continue;
            }
            let cost = 1u64 << g.vertex_count();
            if let Some(b) = self.budget {
                if self.weight + cost > b {
                    let _ = writeln!(self.trace, "budget n={} w={}", g.vertex_count(), self.weight);
                    self.finish(Status::BudgetExhausted);
                    return false;
                }
            }
            self.added_count += 1;
            self.weight += cost;
            let _ = writeln!(self.trace, "push n={} w={}", g.vertex_count(), self.weight);
            batch.push(g);
        }
        if !keep_order {
            batch.reverse();
        }
        self.stack.append(&mut batch);
        true
    }

    /// One while-iteration of the full search. Precondition: status is unset
    /// (which implies a nonempty stack).
    pub fn step(&mut self, p: &PropertySpec) -> Result<(), Error> {
        assert!(self.status.is_none(), "step on a finished search");
        let h = self.stack.pop().expect("unfinished search has a nonempty stack");
        let _ = writeln!(self.trace, "pop n={}", h.vertex_count());

        if let Some(e) = h.choose_dominating_edge() {
            let _ = writeln!(self.trace, "edge {} {}", e.lo, e.hi);
            if !self.push_extensions(&h, e.lo, e.hi, p) {
                return Ok(());
            }
        } else {
            let catalog = build_catalog(&h, p, &self.stack);
            let mut unstuck = false;
            for k in [3usize, 2, 1, 0] {
                if algorithm3_with_catalog(&h, &catalog, k)? {
                    let _ = writeln!(self.trace, "fk k={}", k);
                    let g = join(&h, &make_fk(k as u32).expect("k in range"));
                    if !self.add_batch([g], p) {
                        return Ok(());
                    }
                    unstuck = true;
                    break;
                }
            }
            if !unstuck {
                let dom = dom_set(&h);
                let p_prime = p.or_contains(dom.clone());
                if algorithm2(&h, &p_prime, &self.stack)? {
                    let _ = writeln!(self.trace, "dom-fallback m={}", dom.len());
                    // dom(H') is filtered in descending enumeration order and
                    // appended as-is, so its surviving members are expanded in
                    // ascending order, mirroring the extension batches.
                    let mut dom = dom;
                    dom.reverse();
                    if !self.add_batch_ordered(dom, p, true) {
                        return Ok(());
                    }
                } else {
                    let _ = writeln!(self.trace, "abort unimplemented-branch");
                    self.finish(Status::AbortedUnimplementedBranch);
                    return Ok(());
                }
            }
        }
        if self.status.is_none() && self.stack.is_empty() {
            self.finish(Status::Success);
        }
        Ok(())
    }

    /// The dominating-edge expansion shared by both search modes. Returns
    /// false when the budget ran out.
    fn push_extensions(&mut self, h: &LabeledGraph, u: u32, v: u32, p: &PropertySpec) -> bool {
        let ground = h.vertex_mask() & !(1 << (u - 1)) & !(1 << (v - 1));
        let candidates = extension_order_masks(ground)
            .into_iter()
            .map(|mask| h.extend_with_mask(mask));
        self.add_batch(candidates, p)
    }

    fn into_outcome(self) -> SearchOutcome {
        SearchOutcome {
            status: self.status.expect("finished"),
            added_count: self.added_count,
            weight: self.weight,
            trace: self.trace,
        }
    }
}

/// The full search run to completion: dominating-edge expansion, with the
/// F_k-join and dom-fallback rules unsticking graphs that lack a dominating
/// edge.
pub fn run_full(h: &LabeledGraph, p: &PropertySpec, budget: Option<u64>) -> Result<SearchOutcome, Error> {
    assert!(!h.has_stable_triple(), "search root must have no stable triple");
    let mut state = SearchState::new(h.clone(), p, budget);
    while state.status.is_none() {
        state.step(p)?;
    }
    Ok(state.into_outcome())
}

/// The basic search: dominating-edge expansion only; Failure as soon as a graph
/// without a dominating edge is popped.
pub fn run_basic(h: &LabeledGraph, p: &PropertySpec, budget: Option<u64>) -> Result<SearchOutcome, Error> {
    assert!(!h.has_stable_triple(), "search root must have no stable triple");
    let mut state = SearchState::new(h.clone(), p, budget);
    while state.status.is_none() {
        let h2 = state.stack.pop().expect("unfinished search has a nonempty stack");
        let _ = writeln!(state.trace, "pop n={}", h2.vertex_count());
        match h2.choose_dominating_edge() {
            None => {
                let _ = writeln!(state.trace, "no-dominating-edge");
                state.finish(Status::Failure);
            }
            Some(e) => {
                let _ = writeln!(state.trace, "edge {} {}", e.lo, e.hi);
                state.push_extensions(&h2, e.lo, e.hi, p);
                if state.status.is_none() && state.stack.is_empty() {
                    state.finish(Status::Success);
                }
            }
        }
    }
    Ok(state.into_outcome())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{complete, cycle};

    #[test]
    fn reflexive_run_is_free() {
        let c5 = cycle(5);
        let out = run_full(&c5, &PropertySpec::new(vec![c5.clone()]), None).unwrap();
        assert_eq!(out.status, Status::Success);
        assert_eq!(out.added_count, 0);
        assert_eq!(out.weight, 0);
        let out = run_basic(&c5, &PropertySpec::new(vec![c5.clone()]), None).unwrap();
        assert_eq!((out.added_count, out.weight), (0, 0));
    }

    #[test]
    fn tiny_budget_exhausts() {
        let out = run_full(&cycle(5), &PropertySpec::new(vec![complete(7)]), Some(16)).unwrap();
        assert_eq!(out.status, Status::BudgetExhausted);
        let out = run_basic(&cycle(5), &PropertySpec::new(vec![complete(7)]), Some(16)).unwrap();
        assert_eq!(out.status, Status::BudgetExhausted);
    }

    #[test]
    fn basic_fails_without_dominating_edge() {
        // C5 has no dominating edge; the basic search gives up immediately.
        let out = run_basic(&cycle(5), &PropertySpec::new(vec![complete(7)]), None).unwrap();
        assert_eq!(out.status, Status::Failure);
        assert_eq!(out.added_count, 1); // the root was pushed
        assert_eq!(out.weight, 32);
    }

    #[test]
    fn determinism() {
        let p = PropertySpec::new(vec![complete(4)]);
        let a = run_full(&complete(3), &p, Some(4096)).unwrap();
        let b = run_full(&complete(3), &p, Some(4096)).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!((a.added_count, a.weight), (b.added_count, b.weight));
    }
}
