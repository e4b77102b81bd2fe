//! Exact computation of maximum free subsets.
//!
//! Two engines with the same contract: a 2^n brute-force sweep that serves
//! as the independent oracle, and a branch-and-bound search that must agree
//! with it wherever both run. Both certify optimality and tie-break equal
//! optima to the lexicographically smallest vertex set.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{creates_copy_through, is_free_mode, CopyMode, PatternSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMode {
    BruteForce,
    BranchAndBound,
}

/// Search size caps. These are configuration, not constants; the CLI can
/// override them from flags or environment variables.
#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Cap for branch-and-bound searches.
    pub exact_cap: usize,
    /// Cap for the 2^n brute-force oracle.
    pub brute_cap: usize,
    /// Cap for the chromatic-number search.
    pub chi_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            exact_cap: 20,
            brute_cap: 16,
            chi_cap: 12,
        }
    }
}

/// A certified solution to a maximum free subset instance.
#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    pub best: VertexSet,
    pub size: usize,
    pub nodes_explored: u64,
    pub mode: SolveMode,
    pub certified_optimal: bool,
}

/// Maximum subset of the vertices of `g` inducing a pattern-free subgraph.
pub fn max_free_subset(
    g: &Graph,
    p: &PatternSpec,
    mode: SolveMode,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    max_free_subset_with(g, p, mode, CopyMode::Subgraph, cfg)
}

/// As [`max_free_subset`], with an explicit copy-matching mode.
pub fn max_free_subset_with(
    g: &Graph,
    p: &PatternSpec,
    mode: SolveMode,
    copy_mode: CopyMode,
    cfg: &SolverConfig,
) -> Result<SolveResult> {
    match mode {
        SolveMode::BruteForce => {
            if g.n() > cfg.brute_cap {
                return Err(Error::OverCap {
                    n: g.n(),
                    cap: cfg.brute_cap,
                    what: "brute-force",
                });
            }
            Ok(brute_force(g, p, copy_mode))
        }
        SolveMode::BranchAndBound => {
            if g.n() > cfg.exact_cap {
                return Err(Error::OverCap {
                    n: g.n(),
                    cap: cfg.exact_cap,
                    what: "exact-search",
                });
            }
            Ok(branch_and_bound(g, p, copy_mode))
        }
    }
}

/// alpha(H): maximum independent set, the K2-free case.
pub fn independence_number(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    max_free_subset(g, &PatternSpec::k2(), SolveMode::BranchAndBound, cfg)
}

/// f(H): maximum induced forest, the cycle-free case. The decycling number
/// is `n - size`.
pub fn forest_number(g: &Graph, cfg: &SolverConfig) -> Result<SolveResult> {
    max_free_subset(g, &PatternSpec::Cycles, SolveMode::BranchAndBound, cfg)
}

fn brute_force(g: &Graph, p: &PatternSpec, copy_mode: CopyMode) -> SolveResult {
    let n = g.n();
    let total: u64 = 1u64 << n;
    let mut best = VertexSet::EMPTY;
    let mut nodes = 0u64;
    for mask in 0..total {
        nodes += 1;
        let s = VertexSet::from_mask(mask);
        let better =
            s.len() > best.len() || (s.len() == best.len() && s.lex_cmp(best).is_lt());
        if better && is_free_mode(g, s, p, copy_mode) {
            best = s;
        }
    }
    SolveResult {
        best,
        size: best.len(),
        nodes_explored: nodes,
        mode: SolveMode::BruteForce,
        certified_optimal: true,
    }
}

fn branch_and_bound(g: &Graph, p: &PatternSpec, copy_mode: CopyMode) -> SolveResult {
    struct Search<'a> {
        g: &'a Graph,
        p: &'a PatternSpec,
        copy_mode: CopyMode,
        n: usize,
        best: VertexSet,
        nodes: u64,
    }
    impl Search<'_> {
        fn dfs(&mut self, idx: usize, cur: VertexSet) {
            self.nodes += 1;
            if idx == self.n {
                if cur.len() > self.best.len()
                    || (cur.len() == self.best.len() && cur.lex_cmp(self.best).is_lt())
                {
                    self.best = cur;
                }
                return;
            }
            // Even taking every remaining vertex cannot beat the incumbent.
            if cur.len() + (self.n - idx) <= self.best.len() {
                return;
            }
            // Include idx first: leaves are then visited in lexicographic
            // order, so the first optimum found is the lex-smallest one.
            if !creates_copy_through(self.g, cur, idx, self.p, self.copy_mode) {
                self.dfs(idx + 1, cur.with(idx));
            }
            self.dfs(idx + 1, cur);
        }
    }
    let mut search = Search {
        g,
        p,
        copy_mode,
        n: g.n(),
        best: VertexSet::EMPTY,
        nodes: 0,
    };
    search.dfs(0, VertexSet::EMPTY);
    SolveResult {
        best: search.best,
        size: search.best.len(),
        nodes_explored: search.nodes,
        mode: SolveMode::BranchAndBound,
        certified_optimal: true,
    }
}

/// Which shortcut determined a quick exact answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QuickCase {
    /// The host is already free: the whole vertex set is the optimum.
    HostFree,
    /// Host isomorphic to the pattern, or the pattern spans the host.
    SpanningCopy,
    /// Complete host: any m-1 vertices avoid an m-vertex pattern.
    CompleteHost,
    /// Pattern on n-1 vertices embedding into every vertex-deleted host.
    OneVertexSmaller,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct QuickExactAnswer {
    pub value: usize,
    pub case: QuickCase,
    /// True when the spanning-copy case fired without the host being
    /// isomorphic to the pattern; the two criteria coincide otherwise.
    pub readings_diverge: bool,
}

/// Closed-form optimum for the handful of host/pattern shapes where no
/// search is needed. Returns `None` when no shortcut applies.
pub fn quick_exact(g: &Graph, p: &PatternSpec) -> Option<QuickExactAnswer> {
    use crate::pattern::{are_isomorphic, find_embedding, is_free};
    let pat = p.as_single()?;
    let n = g.n();
    let m = pat.n();

    if is_free(g, g.vertices(), p) {
        return Some(QuickExactAnswer {
            value: n,
            case: QuickCase::HostFree,
            readings_diverge: false,
        });
    }
    let iso = are_isomorphic(g, pat);
    let spanning =
        m == n && find_embedding(pat, g, g.vertices(), CopyMode::Subgraph).is_some();
    if iso || spanning {
        return Some(QuickExactAnswer {
            value: n - 1,
            case: QuickCase::SpanningCopy,
            readings_diverge: spanning && !iso,
        });
    }
    if g.edge_count() == n * (n - 1) / 2 && m <= n {
        return Some(QuickExactAnswer {
            value: m - 1,
            case: QuickCase::CompleteHost,
            readings_diverge: false,
        });
    }
    if m + 1 == n
        && (0..n).all(|v| {
            find_embedding(pat, g, g.vertices().without(v), CopyMode::Subgraph).is_some()
        })
    {
        return Some(QuickExactAnswer {
            value: n - 2,
            case: QuickCase::OneVertexSmaller,
            readings_diverge: false,
        });
    }
    None
}
