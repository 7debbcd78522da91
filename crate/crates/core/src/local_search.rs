//! (1,k)-swap local search for maximum clique.
//!
//! The state is the current clique `q` plus one candidate set per vertex:
//!
//! * for `v` outside `q`, `cand[v] = q \ N(v)`, the members of `q` that `v`
//!   is not adjacent to. `|cand[v]|` is the tightness of `v`.
//! * for `u` in `q`, `cand[u]` lists the 1-tight vertices whose only
//!   non-neighbour in `q` is `u`.
//!
//! Any clique of size `k >= 2` inside `cand[u]` can replace `u`, growing the
//! solution by `k - 1`. The search looks for the largest such clique over
//! all `u` with the lookup-table solver, applies it, updates the candidate
//! sets incrementally and repeats until no member of `q` admits a swap.

use log::warn;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::heuristics::HeuristicKind;
use crate::micro::{fvs_qe, MicroTable};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalSearchError {
    #[error("the seed solution is not a clique")]
    NotAClique,
    #[error("the seed solution is not contained in the search subgraph")]
    NotSubset,
    #[error("an improvement must insert at least two vertices, got {0}")]
    ImprovementTooSmall(usize),
    #[error("vertex {0} cannot be swapped for the proposed vertices")]
    InvalidImprovement(usize),
    #[error("candidate set of vertex {vertex} is {found:?}, recomputation gives {expected:?}")]
    StateMismatch {
        vertex: usize,
        expected: Vec<usize>,
        found: Vec<usize>,
    },
}

/// Current clique and candidate sets of one local-search run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateState {
    q: VertexSet,
    sg: VertexSet,
    cand: Vec<VertexSet>,
}

/// Remove `removed` from the clique and insert `inserted`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Improvement {
    pub removed: usize,
    pub inserted: VertexSet,
}

impl Improvement {
    /// Net growth of the clique.
    pub fn gain(&self) -> usize {
        self.inserted.count() - 1
    }
}

impl CandidateState {
    pub fn solution(&self) -> &VertexSet {
        &self.q
    }

    pub fn subgraph(&self) -> &VertexSet {
        &self.sg
    }

    /// `cand[v]`; its meaning depends on whether `v` is in the solution.
    pub fn candidates(&self, v: usize) -> &VertexSet {
        &self.cand[v]
    }

    /// Number of solution members `v` is not adjacent to, for `v ∈ sg \ q`.
    pub fn tightness(&self, v: usize) -> Option<usize> {
        (self.sg.contains(v) && !self.q.contains(v)).then(|| self.cand[v].count())
    }

    /// All 1-tight vertices.
    pub fn one_tight(&self) -> VertexSet {
        let mut t = VertexSet::new(self.q.universe());
        for u in &self.q {
            t.union_with(&self.cand[u]);
        }
        t
    }

    /// Outside vertices adjacent to the whole solution.
    pub fn free_vertices(&self) -> VertexSet {
        let mut free = self.sg.difference(&self.q);
        for v in free.clone().iter() {
            if !self.cand[v].is_empty() {
                free.remove(v);
            }
        }
        free
    }

    /// Compares every candidate set against a from-scratch rebuild.
    pub fn verify(&self, g: &Graph) -> Result<(), LocalSearchError> {
        let fresh = build_candidates(g, &self.sg, &self.q)?;
        for (v, (found, expected)) in self.cand.iter().zip(&fresh.cand).enumerate() {
            if found != expected {
                return Err(LocalSearchError::StateMismatch {
                    vertex: v,
                    expected: expected.to_vec(),
                    found: found.to_vec(),
                });
            }
        }
        Ok(())
    }
}

/// Builds the candidate sets for clique `q` inside `sg`.
pub fn build_candidates(g: &Graph, sg: &VertexSet, q: &VertexSet) -> Result<CandidateState, LocalSearchError> {
    if !q.is_subset(sg) {
        return Err(LocalSearchError::NotSubset);
    }
    if !g.is_clique(q) {
        return Err(LocalSearchError::NotAClique);
    }
    let n = g.order();
    let mut cand = vec![VertexSet::new(n); n];
    for v in sg.difference(q).iter() {
        let mut c = q.clone();
        c.difference_with(g.neighbors(v));
        if let Some(u) = c.single() {
            cand[u].insert(v);
        }
        cand[v] = c;
    }
    Ok(CandidateState {
        q: q.clone(),
        sg: sg.clone(),
        cand,
    })
}

/// Best (1,k)-swap available, `k >= 2`, or `None` at a local optimum.
///
/// Members of `q` are scanned in ascending order; a candidate set is only
/// solved when it is larger than the best clique found so far, and a later
/// member replaces the incumbent only on strictly larger cliques.
pub fn exists_improvement(table: &MicroTable, g: &Graph, st: &CandidateState) -> Option<Improvement> {
    let mut best: Option<Improvement> = None;
    let mut best_len = 0;
    for u in &st.q {
        let c = &st.cand[u];
        let size = c.count();
        if size > 1 && size > best_len {
            let local = fvs_qe(table, g, c);
            let k = local.count();
            if k > 1 && k > best_len {
                best_len = k;
                best = Some(Improvement {
                    removed: u,
                    inserted: local,
                });
            }
        }
    }
    best
}

/// Performs the swap and updates every affected candidate set.
pub fn apply_improvement(g: &Graph, st: &mut CandidateState, imp: &Improvement) -> Result<(), LocalSearchError> {
    let u = imp.removed;
    let inserted = &imp.inserted;
    let k = inserted.count();
    if k < 2 {
        return Err(LocalSearchError::ImprovementTooSmall(k));
    }
    // Pinned to u and pairwise adjacent: then each inserted vertex misses
    // only u in q and the swap yields a clique.
    if !st.q.contains(u) || !inserted.is_subset(&st.cand[u]) || !g.is_clique(inserted) {
        return Err(LocalSearchError::InvalidImprovement(u));
    }

    // Outside vertices adjacent to u and to every inserted vertex keep
    // their candidate set; everything else outside needs an update.
    let mut unchanged = g.neighbors(u).clone();
    for w in inserted {
        unchanged.intersect_with(g.neighbors(w));
    }
    let mut affected = st.sg.difference(&st.q);
    affected.difference_with(inserted);
    affected.remove(u);
    affected.difference_with(&unchanged);

    st.q.remove(u);
    st.q.union_with(inserted);
    for w in inserted {
        st.cand[w].clear();
    }

    let mut free = Vec::new();
    for v in &affected {
        if let Some(p) = st.cand[v].single() {
            st.cand[p].remove(v);
        }
        st.cand[v].remove(u);
        for w in inserted {
            if !g.is_adjacent(v, w) {
                st.cand[v].insert(w);
            }
        }
        match st.cand[v].count() {
            0 => free.push(v),
            1 => {
                let p = st.cand[v].first().expect("singleton");
                st.cand[p].insert(v);
            }
            _ => {}
        }
    }
    // u misses exactly the inserted vertices.
    st.cand[u] = inserted.clone();

    // A vertex freed here would have extended the local clique, which
    // the quasi-exact solver returns maximal.
    debug_assert!(free.is_empty(), "swap produced free vertices {free:?}");
    if !free.is_empty() {
        warn!("swap out of {u} left free vertices {free:?}; re-plunging");
        plunge(g, &st.sg, &mut st.q);
        *st = build_candidates(g, &st.sg, &st.q)?;
    }
    Ok(())
}

/// Adds free vertices (lowest index first) until `q` is maximal in `sg`.
/// Returns how many were added.
pub fn plunge(g: &Graph, sg: &VertexSet, q: &mut VertexSet) -> usize {
    let mut allowed = g.common_neighbors(q, sg);
    let mut added = 0;
    while let Some(v) = allowed.first() {
        q.insert(v);
        allowed.intersect_with(g.neighbors(v));
        added += 1;
    }
    added
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LsOptions {
    /// Rebuild the candidate sets from scratch after every step and fail on
    /// any difference from the incremental state.
    pub check_invariants: bool,
}

#[derive(Clone, Debug)]
pub struct LsOutcome {
    pub clique: VertexSet,
    pub seed_size: usize,
    /// Vertices added by the initial plunge.
    pub plunged: usize,
    /// Number of inserted vertices per applied swap.
    pub swaps: Vec<usize>,
}

impl LsOutcome {
    pub fn iterations(&self) -> usize {
        self.swaps.len()
    }
}

/// Local search from an explicit seed clique.
pub fn ls_1_k_from(
    table: &MicroTable,
    g: &Graph,
    sg: &VertexSet,
    seed: VertexSet,
    opts: LsOptions,
) -> Result<LsOutcome, LocalSearchError> {
    let seed_size = seed.count();
    let mut q = seed;
    if !q.is_subset(sg) {
        return Err(LocalSearchError::NotSubset);
    }
    if !g.is_clique(&q) {
        return Err(LocalSearchError::NotAClique);
    }
    let plunged = plunge(g, sg, &mut q);
    let mut st = build_candidates(g, sg, &q)?;
    if opts.check_invariants {
        st.verify(g)?;
    }
    let mut swaps = Vec::new();
    while let Some(imp) = exists_improvement(table, g, &st) {
        apply_improvement(g, &mut st, &imp)?;
        swaps.push(imp.inserted.count());
        if opts.check_invariants {
            st.verify(g)?;
        }
    }
    Ok(LsOutcome {
        clique: st.q,
        seed_size,
        plunged,
        swaps,
    })
}

/// Seeds with `seed` and runs the local search.
pub fn ls_1_k_with(
    table: &MicroTable,
    g: &Graph,
    sg: &VertexSet,
    seed: HeuristicKind,
    opts: LsOptions,
) -> Result<LsOutcome, LocalSearchError> {
    ls_1_k_from(table, g, sg, seed.run(g, sg), opts)
}

/// Seeds with `seed` and returns the locally optimal clique.
pub fn ls_1_k(table: &MicroTable, g: &Graph, sg: &VertexSet, seed: HeuristicKind) -> VertexSet {
    ls_1_k_with(table, g, sg, seed, LsOptions::default())
        .expect("heuristic seeds are cliques inside sg")
        .clique
}
