//! Canonical-augmentation search over generator sets.
//!
//! The search space is the family of sets of distinct degree-`e` monomials in
//! `r` variables. Sets are listed in ascending exponent-vector order, and a
//! partial set is extended only when the extension is the canonical
//! representative of its orbit under variable permutation (up to the engine's
//! exact-support cap; see [`ENGINE_CANONICAL_CAP`]). Canonical representatives
//! are closed under taking sorted prefixes, so depth-first extension visits
//! every canonical set exactly once.
//!
//! Parallelism is organized so that verdicts, node counts, and witnesses are
//! byte-identical at any thread count: each smallest-first-generator branch
//! runs with the full node budget, and the per-branch outcomes are folded
//! sequentially in branch order, replaying exactly what a single-threaded
//! budgeted scan would have seen.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::binom::binomial_u64;
use crate::monomials::is_canonical_set;
use crate::sequences::IntSeq;

use super::repr::PackedMono;
use super::repr::{degree_stratum, support_mask, MonoKey, PACKED_MAX_DEGREE, PACKED_MAX_VARS};

/// The engine checks canonicality exactly for supports up to this size and
/// accepts everything larger. Accepting beyond the cap preserves completeness
/// (every orbit still appears at least once, through its canonical
/// representative, whose prefixes all stay canonical) and only relaxes
/// deduplication in high-support strata.
pub(crate) const ENGINE_CANONICAL_CAP: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum CollectMode {
    /// Record nothing (decision searches).
    None,
    /// Record the h-vector of every set whose support is exactly `r`.
    SupportExact,
    /// Record only full-size sets (`exact_type` members) with support `r`.
    SupportExactLeaves,
}

pub(crate) struct SearchSpec<'a> {
    pub r: usize,
    pub e: u32,
    /// Decision mode: prune against this h-vector (length `e + 1`) and stop
    /// at the first exact match. Requires `exact_type`.
    pub target_h: Option<&'a [u64]>,
    /// Require exactly this many generators.
    pub exact_type: Option<usize>,
    pub collect: CollectMode,
    pub max_nodes: u64,
    pub parallel: bool,
}

pub(crate) enum SearchOutcome {
    /// Decision search hit an exact match.
    Found { nodes: u64, witness: Vec<Vec<u16>> },
    /// The whole space was explored within budget.
    Exhausted {
        nodes: u64,
        collected: BTreeSet<IntSeq>,
    },
    /// The node budget ran out; `collected` holds the fully folded prefix.
    OutOfBudget {
        nodes: u64,
        collected: BTreeSet<IntSeq>,
    },
}

/// Entry point: picks the packed or general key representation and runs the
/// branch-parallel search.
pub(crate) fn search(spec: &SearchSpec<'_>) -> SearchOutcome {
    if spec.r <= PACKED_MAX_VARS && spec.e <= PACKED_MAX_DEGREE {
        run_with::<PackedMono>(spec)
    } else {
        run_with::<Vec<u16>>(spec)
    }
}

struct Ctx<'a, M> {
    r: usize,
    e: usize,
    pool_keys: Vec<M>,
    pool_exps: Vec<Vec<u16>>,
    pool_masks: Vec<u128>,
    target_h: Option<&'a [u64]>,
    exact_type: Option<usize>,
    collect: CollectMode,
    /// `C(e, d)`: the most degree-`d` divisors a single degree-`e` monomial
    /// can have (attained by squarefree monomials), saturating.
    max_divisors: Vec<u64>,
}

fn run_with<M: MonoKey>(spec: &SearchSpec<'_>) -> SearchOutcome {
    let pool_exps = degree_stratum(spec.r, spec.e);
    let pool_keys: Vec<M> = pool_exps.iter().map(|e| M::from_exps(e)).collect();
    let pool_masks: Vec<u128> = pool_exps.iter().map(|e| support_mask(e)).collect();
    let e = spec.e as usize;
    let max_divisors: Vec<u64> = (0..=e)
        .map(|d| binomial_u64(spec.e as u64, d as u64).unwrap_or(u64::MAX))
        .collect();
    let ctx = Ctx {
        r: spec.r,
        e,
        pool_keys,
        pool_exps,
        pool_masks,
        target_h: spec.target_h,
        exact_type: spec.exact_type,
        collect: spec.collect,
        max_divisors,
    };
    run_search(&ctx, spec.max_nodes, spec.parallel)
}

struct BranchOutcome {
    nodes: u64,
    finished: bool,
    /// `(node index within the branch, chosen pool indices)`.
    witness: Option<(u64, Vec<usize>)>,
    collected: BTreeSet<IntSeq>,
}

fn run_search<M: MonoKey>(ctx: &Ctx<'_, M>, max_nodes: u64, parallel: bool) -> SearchOutcome {
    let roots = ctx.pool_keys.len();
    if parallel {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            // Branches whose index exceeds the lowest witness-bearing branch
            // can never influence the fold; let them abort early.
            let cancel = AtomicUsize::new(usize::MAX);
            let want_cancel = ctx.target_h.is_some();
            let outcomes: Vec<BranchOutcome> = (0..roots)
                .into_par_iter()
                .map(|root| {
                    run_branch(
                        ctx,
                        root,
                        max_nodes,
                        root,
                        if want_cancel { Some(&cancel) } else { None },
                    )
                })
                .collect();
            return fold_outcomes(ctx, max_nodes, outcomes.into_iter());
        }
    }
    // Sequential: identical fold, with each branch capped by the budget left
    // over from the branches before it.
    let mut acc = FoldAcc::new();
    for root in 0..roots {
        let rem = max_nodes - acc.cum;
        let outcome = run_branch(ctx, root, rem, root, None);
        match acc.step(ctx, max_nodes, outcome) {
            Some(done) => return done,
            None => continue,
        }
    }
    acc.finish()
}

#[cfg(feature = "parallel")]
fn fold_outcomes<M: MonoKey>(
    ctx: &Ctx<'_, M>,
    max_nodes: u64,
    outcomes: impl Iterator<Item = BranchOutcome>,
) -> SearchOutcome {
    let mut acc = FoldAcc::new();
    for outcome in outcomes {
        if let Some(done) = acc.step(ctx, max_nodes, outcome) {
            return done;
        }
    }
    acc.finish()
}

struct FoldAcc {
    cum: u64,
    collected: BTreeSet<IntSeq>,
}

impl FoldAcc {
    fn new() -> Self {
        FoldAcc {
            cum: 0,
            collected: BTreeSet::new(),
        }
    }

    fn step<M: MonoKey>(
        &mut self,
        ctx: &Ctx<'_, M>,
        max_nodes: u64,
        mut outcome: BranchOutcome,
    ) -> Option<SearchOutcome> {
        let rem = max_nodes - self.cum;
        if let Some((w, chosen)) = outcome.witness {
            return Some(if w <= rem {
                let witness = chosen.iter().map(|&i| ctx.pool_exps[i].clone()).collect();
                SearchOutcome::Found {
                    nodes: self.cum + w,
                    witness,
                }
            } else {
                SearchOutcome::OutOfBudget {
                    nodes: max_nodes,
                    collected: std::mem::take(&mut self.collected),
                }
            });
        }
        if outcome.finished && outcome.nodes <= rem {
            self.cum += outcome.nodes;
            self.collected.append(&mut outcome.collected);
            None
        } else {
            Some(SearchOutcome::OutOfBudget {
                nodes: max_nodes,
                collected: std::mem::take(&mut self.collected),
            })
        }
    }

    fn finish(self) -> SearchOutcome {
        SearchOutcome::Exhausted {
            nodes: self.cum,
            collected: self.collected,
        }
    }
}

fn run_branch<M: MonoKey>(
    ctx: &Ctx<'_, M>,
    root: usize,
    cap: u64,
    branch_idx: usize,
    cancel: Option<&AtomicUsize>,
) -> BranchOutcome {
    let mut dfs = Dfs {
        ctx,
        chosen: Vec::new(),
        rows: Vec::new(),
        closure: HashSet::new(),
        counts: vec![0u64; ctx.e + 1],
        support: 0,
        log: Vec::new(),
        stack: Vec::new(),
        nodes: 0,
        cap,
        exhausted: false,
        witness: None,
        collected: BTreeSet::new(),
        branch_idx,
        cancel,
        cancelled: false,
    };
    dfs.try_extend(root);
    BranchOutcome {
        nodes: dfs.nodes,
        finished: !dfs.exhausted && !dfs.cancelled,
        witness: dfs.witness,
        collected: dfs.collected,
    }
}

struct Dfs<'c, 'a, M: MonoKey> {
    ctx: &'c Ctx<'a, M>,
    chosen: Vec<usize>,
    /// Exponent rows of the chosen generators; ascending because pool order
    /// is ascending and extensions only use higher pool indices.
    rows: Vec<&'c [u16]>,
    closure: HashSet<M>,
    counts: Vec<u64>,
    support: u128,
    log: Vec<(M, u32)>,
    stack: Vec<(M, u32)>,
    nodes: u64,
    cap: u64,
    exhausted: bool,
    witness: Option<(u64, Vec<usize>)>,
    collected: BTreeSet<IntSeq>,
    branch_idx: usize,
    cancel: Option<&'c AtomicUsize>,
    cancelled: bool,
}

impl<M: MonoKey> Dfs<'_, '_, M> {
    fn stopped(&self) -> bool {
        self.exhausted || self.witness.is_some() || self.cancelled
    }

    /// Attempts to extend the current set with pool entry `idx`. A node is
    /// counted exactly when the extension passes the canonicality test and
    /// its closure gets computed.
    fn try_extend(&mut self, idx: usize) {
        if self.stopped() {
            return;
        }
        if let Some(cancel) = self.cancel {
            if cancel.load(Ordering::Relaxed) < self.branch_idx {
                self.cancelled = true;
                return;
            }
        }
        let k = self.chosen.len();
        if let Some(t) = self.ctx.exact_type {
            debug_assert!(k < t, "child loop must not overfill");
            // Each further generator covers at most e new variables.
            let new_support = self.support | self.ctx.pool_masks[idx];
            let missing = (self.ctx.r as u64).saturating_sub(u64::from(new_support.count_ones()));
            if missing > ((t - k - 1) as u64).saturating_mul(self.ctx.e as u64) {
                return;
            }
        }
        self.rows.push(&self.ctx.pool_exps[idx]);
        if !is_canonical_set(&self.rows, self.ctx.r, ENGINE_CANONICAL_CAP) {
            self.rows.pop();
            return;
        }
        if self.nodes == self.cap {
            // Work remains but the budget does not.
            self.exhausted = true;
            self.rows.pop();
            return;
        }
        self.nodes += 1;

        let mark = self.log.len();
        let saved_support = self.support;
        self.support |= self.ctx.pool_masks[idx];
        self.add_closure(idx);
        self.chosen.push(idx);

        let size = self.chosen.len();
        let mut dead = false;
        if let Some(h) = self.ctx.target_h {
            let t = self.ctx.exact_type.expect("decision mode sets exact_type");
            let rem = (t - size) as u64;
            let degrees = self.counts.iter().zip(h).zip(&self.ctx.max_divisors);
            for ((&count, &target), &max_div) in degrees.take(self.ctx.e + 1) {
                if count > target || target - count > rem.saturating_mul(max_div) {
                    dead = true;
                    break;
                }
            }
            // With rem = 0 the bounds above force equality in every degree,
            // so a live full-size set is exactly a witness.
            if !dead && size == t {
                self.witness = Some((self.nodes, self.chosen.clone()));
                if let Some(cancel) = self.cancel {
                    cancel.fetch_min(self.branch_idx, Ordering::Relaxed);
                }
            }
        }

        if !dead && self.witness.is_none() {
            match self.ctx.collect {
                CollectMode::None => {}
                CollectMode::SupportExact => {
                    if self.support.count_ones() as usize == self.ctx.r {
                        self.collected.insert(IntSeq::new(self.counts.clone()));
                    }
                }
                CollectMode::SupportExactLeaves => {
                    if Some(size) == self.ctx.exact_type
                        && self.support.count_ones() as usize == self.ctx.r
                    {
                        self.collected.insert(IntSeq::new(self.counts.clone()));
                    }
                }
            }
            let may_grow = self.ctx.exact_type.map_or(true, |t| size < t);
            if may_grow {
                for next in idx + 1..self.ctx.pool_keys.len() {
                    self.try_extend(next);
                    if self.stopped() {
                        break;
                    }
                }
            }
        }

        self.chosen.pop();
        self.rows.pop();
        self.support = saved_support;
        self.undo_closure(mark);
    }

    /// Adds the divisor closure of pool entry `idx`, logging insertions for
    /// exact rollback.
    fn add_closure(&mut self, idx: usize) {
        debug_assert!(self.stack.is_empty());
        self.stack
            .push((self.ctx.pool_keys[idx].clone(), self.ctx.e as u32));
        while let Some((m, d)) = self.stack.pop() {
            if self.closure.contains(&m) {
                continue;
            }
            self.closure.insert(m.clone());
            self.counts[d as usize] += 1;
            if d > 0 {
                for var in 0..self.ctx.r {
                    if let Some(child) = m.try_decrement(var) {
                        if !self.closure.contains(&child) {
                            self.stack.push((child, d - 1));
                        }
                    }
                }
            }
            self.log.push((m, d));
        }
    }

    fn undo_closure(&mut self, mark: usize) {
        for (m, d) in self.log.drain(mark..) {
            self.closure.remove(&m);
            self.counts[d as usize] -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decide_spec<'a>(h: &'a [u64], r: usize, parallel: bool) -> SearchSpec<'a> {
        SearchSpec {
            r,
            e: (h.len() - 1) as u32,
            target_h: Some(h),
            exact_type: Some(h[h.len() - 1] as usize),
            collect: CollectMode::None,
            max_nodes: u64::MAX,
            parallel,
        }
    }

    #[test]
    fn finds_single_chain_witness() {
        let h = [1u64, 1, 1, 1];
        match search(&decide_spec(&h, 1, false)) {
            SearchOutcome::Found { nodes, witness } => {
                assert_eq!(nodes, 1);
                assert_eq!(witness, vec![vec![3u16]]);
            }
            _ => panic!("expected a witness"),
        }
    }

    #[test]
    fn finds_complete_intersection_witness() {
        let h = [1u64, 2, 1];
        match search(&decide_spec(&h, 2, false)) {
            SearchOutcome::Found { nodes, witness } => {
                assert_eq!(witness, vec![vec![1u16, 1]]);
                // {x2^2} is pruned before closure (it cannot reach support 2
                // with no picks left), so the match is the first node.
                assert_eq!(nodes, 1);
            }
            _ => panic!("expected a witness"),
        }
    }

    #[test]
    fn exhausts_on_unrealizable_target() {
        // One variable has a single degree-2 monomial, so no set reaches
        // type 2; the search space is exhausted without a match.
        let h = [1u64, 1, 2];
        match search(&decide_spec(&h, 1, false)) {
            SearchOutcome::Exhausted { collected, .. } => assert!(collected.is_empty()),
            _ => panic!("expected exhaustion"),
        }
    }

    #[test]
    fn budget_zero_is_out_of_budget() {
        let h = [1u64, 1, 1, 1];
        let mut spec = decide_spec(&h, 1, false);
        spec.max_nodes = 0;
        match search(&spec) {
            SearchOutcome::OutOfBudget { nodes, .. } => assert_eq!(nodes, 0),
            _ => panic!("expected budget exhaustion"),
        }
    }

    #[test]
    fn enumeration_collects_support_exact_h_vectors() {
        // Frozen: the socle-degree-1 pure h-vectors in 2 variables.
        let spec = SearchSpec {
            r: 2,
            e: 1,
            target_h: None,
            exact_type: None,
            collect: CollectMode::SupportExact,
            max_nodes: u64::MAX,
            parallel: false,
        };
        match search(&spec) {
            SearchOutcome::Exhausted { collected, .. } => {
                let got: Vec<Vec<u64>> = collected.iter().map(|s| s.as_slice().to_vec()).collect();
                assert_eq!(got, vec![vec![1, 2]]);
            }
            _ => panic!("expected exhaustion"),
        }
    }

    #[test]
    fn parallel_and_sequential_agree_exactly() {
        let h = [1u64, 3, 5, 5, 4, 4];
        let seq = search(&decide_spec(&h, 3, false));
        let par = search(&decide_spec(&h, 3, true));
        match (seq, par) {
            (
                SearchOutcome::Exhausted { nodes: a, .. },
                SearchOutcome::Exhausted { nodes: b, .. },
            ) => assert_eq!(a, b),
            _ => panic!("expected both to exhaust"),
        }
    }
}
