//! Budgeted exhaustive search over single-assignment covers.
//!
//! Every face of the requested codimension is assigned, in canonical order,
//! to exactly one of `n_sets` sets. A placement is rejected when the face
//! would form an antipodal `forbid_k`-pair with a member of the receiving
//! set. Sets are opened in order: face `j` may go to set `i` only if sets
//! `0..i` are already in use.
//!
//! Restricting to single assignments loses nothing: removing faces from a
//! set never raises its self-antipodality, so any multi-assignment cover
//! that avoids the forbidden pairs contains a single-assignment one.
//!
//! Node accounting: every consistent partial assignment visited (the root
//! included) is one expanded node. The search stops with
//! [`Outcome::BudgetExhausted`] when it would expand node `budget + 1`, so
//! `nodes_expanded <= budget` always holds. Parallel runs split the tree at
//! a shallow depth and merge subtree results in sequential order, so the
//! outcome and node count never depend on the thread count.

use serde::{Serialize, Serializer};

use rayon::prelude::*;
use smallvec::SmallVec;

use crate::cover::{Cover, CoverSet};
use crate::error::{Error, Result};
use crate::face::{binomial, faces_of_codim, Face};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchProblem {
    pub d: u32,
    pub n_sets: u32,
    pub codim: u32,
    /// No set may contain a pair of antipodal `forbid_k`-faces.
    pub forbid_k: i32,
}

impl SearchProblem {
    pub fn new(d: u32, n_sets: u32, codim: u32, forbid_k: i32) -> Result<Self> {
        let p = SearchProblem {
            d,
            n_sets,
            codim,
            forbid_k,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 || self.d > crate::face::MAX_DIM {
            return Err(Error::UnsupportedDimension(self.d));
        }
        if self.codim == 0 || self.codim > self.d {
            return Err(Error::InvalidProblem(format!(
                "codim {} must lie in 1..={}",
                self.codim, self.d
            )));
        }
        let top = (self.d - self.codim) as i32;
        if self.forbid_k < 0 || self.forbid_k > top {
            return Err(Error::InvalidProblem(format!(
                "forbid_k {} must lie in 0..={top}",
                self.forbid_k
            )));
        }
        if self.n_sets == 0 {
            return Err(Error::InvalidProblem("n_sets must be at least 1".into()));
        }
        if self.n_sets > u16::MAX as u32 {
            return Err(Error::InvalidProblem(format!(
                "n_sets {} is too large",
                self.n_sets
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of expanded nodes.
    pub budget: u64,
    /// Worker threads; 1 runs the plain sequential search.
    pub threads: usize,
}

impl SearchOptions {
    pub fn new(budget: u64) -> Self {
        SearchOptions { budget, threads: 1 }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Unsat,
    Witness(Cover),
    BudgetExhausted,
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Unsat => "UNSAT",
            Outcome::Witness(_) => "WITNESS",
            Outcome::BudgetExhausted => "BUDGET_EXHAUSTED",
        }
    }

    pub fn witness(&self) -> Option<&Cover> {
        match self {
            Outcome::Witness(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub problem: SearchProblem,
    pub outcome: Outcome,
    pub nodes_expanded: u64,
    pub budget: u64,
}

impl Serialize for SearchResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            problem: &'a SearchProblem,
            outcome: &'static str,
            nodes_expanded: u64,
            budget: u64,
            witness: Option<String>,
        }
        Repr {
            problem: &self.problem,
            outcome: self.outcome.label(),
            nodes_expanded: self.nodes_expanded,
            budget: self.budget,
            witness: self.outcome.witness().map(Cover::to_text),
        }
        .serialize(s)
    }
}

/// Pairwise conflict table over the faces of one codimension, as bitsets.
struct ConflictTable {
    faces: Vec<Face>,
    words: usize,
    rows: Vec<u64>,
    self_conflict: Vec<bool>,
}

impl ConflictTable {
    fn build(d: u32, codim: u32, forbid_k: i32) -> Result<Self> {
        let faces = faces_of_codim(d, codim)?;
        let n = faces.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        let mut self_conflict = vec![false; n];
        for (i, a) in faces.iter().enumerate() {
            for (j, b) in faces.iter().enumerate() {
                if a.degree_unchecked(b) >= forbid_k {
                    if i == j {
                        self_conflict[i] = true;
                    } else {
                        rows[i * words + j / 64] |= 1 << (j % 64);
                    }
                }
            }
        }
        Ok(ConflictTable {
            faces,
            words,
            rows,
            self_conflict,
        })
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn conflicts_with(&self, i: usize, members: &[u64]) -> bool {
        self.row(i).iter().zip(members).any(|(a, b)| a & b != 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Continue,
    Found,
    Exhausted,
}

#[derive(Clone)]
struct State {
    members: Vec<u64>,
    assign: Vec<u16>,
    used: usize,
}

struct Engine {
    table: ConflictTable,
    n_sets: usize,
}

enum Event {
    Node,
    Subtree(State),
}

struct SubtreeRun {
    nodes: u64,
    flow: Flow,
    assign: Vec<u16>,
}

impl Engine {
    fn new(p: &SearchProblem) -> Result<Self> {
        p.validate()?;
        Ok(Engine {
            table: ConflictTable::build(p.d, p.codim, p.forbid_k)?,
            n_sets: p.n_sets as usize,
        })
    }

    fn n_faces(&self) -> usize {
        self.table.faces.len()
    }

    fn fresh_state(&self) -> State {
        State {
            members: vec![0; self.n_sets * self.table.words],
            assign: Vec::with_capacity(self.n_faces()),
            used: 0,
        }
    }

    #[inline]
    fn set_words<'a>(&self, st: &'a State, s: usize) -> &'a [u64] {
        let w = self.table.words;
        &st.members[s * w..(s + 1) * w]
    }

    #[inline]
    fn toggle(&self, st: &mut State, s: usize, face: usize) {
        st.members[s * self.table.words + face / 64] ^= 1 << (face % 64);
    }

    /// Target sets open to the face at `depth`, in branching order.
    #[inline]
    fn candidates<'a>(&'a self, st: &'a State, depth: usize) -> impl Iterator<Item = usize> + 'a {
        let blocked = self.table.self_conflict[depth];
        let limit = if blocked {
            0
        } else {
            (st.used + 1).min(self.n_sets)
        };
        (0..limit).filter(move |&s| !self.table.conflicts_with(depth, self.set_words(st, s)))
    }

    fn place(&self, st: &mut State, depth: usize, s: usize) -> bool {
        self.toggle(st, s, depth);
        st.assign.push(s as u16);
        let opened = s == st.used;
        if opened {
            st.used += 1;
        }
        opened
    }

    fn unplace(&self, st: &mut State, depth: usize, s: usize, opened: bool) {
        self.toggle(st, s, depth);
        st.assign.pop();
        if opened {
            st.used -= 1;
        }
    }

    fn dfs(&self, st: &mut State, nodes: &mut u64, cap: u64) -> Flow {
        if *nodes >= cap {
            return Flow::Exhausted;
        }
        *nodes += 1;
        let depth = st.assign.len();
        if depth == self.n_faces() {
            return Flow::Found;
        }
        let targets: SmallVec<[usize; 16]> = self.candidates(st, depth).collect();
        for s in targets {
            let opened = self.place(st, depth, s);
            match self.dfs(st, nodes, cap) {
                Flow::Continue => self.unplace(st, depth, s, opened),
                other => return other,
            }
        }
        Flow::Continue
    }

    /// Preorder walk down to `split` assigned faces, recording shallow nodes
    /// and frontier states in sequential visiting order.
    fn frontier(&self, st: &mut State, split: usize, events: &mut Vec<Event>) {
        let depth = st.assign.len();
        if depth == split {
            events.push(Event::Subtree(st.clone()));
            return;
        }
        events.push(Event::Node);
        let targets: SmallVec<[usize; 16]> = self.candidates(st, depth).collect();
        for s in targets {
            let opened = self.place(st, depth, s);
            self.frontier(st, split, events);
            self.unplace(st, depth, s, opened);
        }
    }

    fn witness(&self, p: &SearchProblem, assign: &[u16]) -> Result<Cover> {
        let mut buckets: Vec<Vec<Face>> = vec![Vec::new(); self.n_sets];
        for (face, &s) in self.table.faces.iter().zip(assign) {
            buckets[s as usize].push(*face);
        }
        let sets = buckets
            .into_iter()
            .map(|b| CoverSet::new(p.d, p.codim, b))
            .collect::<Result<Vec<_>>>()?;
        Cover::new(p.d, p.codim, sets)
    }

    fn run_sequential(&self, budget: u64) -> (Flow, u64, Vec<u16>) {
        let mut st = self.fresh_state();
        let mut nodes = 0;
        let flow = self.dfs(&mut st, &mut nodes, budget);
        (flow, nodes, st.assign)
    }

    fn run_parallel(&self, budget: u64, threads: usize) -> (Flow, u64, Vec<u16>) {
        let target = threads * 16;
        let mut split = 1.min(self.n_faces());
        let events = loop {
            let mut events = Vec::new();
            self.frontier(&mut self.fresh_state(), split, &mut events);
            let subtrees = events
                .iter()
                .filter(|e| matches!(e, Event::Subtree(_)))
                .count();
            if subtrees >= target || split == self.n_faces() || events.len() > 1 << 20 {
                break events;
            }
            split += 1;
        };

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        let batch = threads * 4;
        let mut consumed = 0u64;
        let mut idx = 0;
        while idx < events.len() {
            // Gather the next batch: events up to and including `batch` subtrees.
            let mut end = idx;
            let mut roots = Vec::new();
            while end < events.len() && roots.len() < batch {
                if let Event::Subtree(st) = &events[end] {
                    roots.push(st);
                }
                end += 1;
            }
            let cap = budget - consumed;
            let runs: Vec<SubtreeRun> = pool.install(|| {
                roots
                    .par_iter()
                    .map(|root| {
                        let mut st = (*root).clone();
                        let mut nodes = 0;
                        let flow = self.dfs(&mut st, &mut nodes, cap);
                        SubtreeRun {
                            nodes,
                            flow,
                            assign: st.assign,
                        }
                    })
                    .collect()
            });
            let mut runs = runs.into_iter();
            for ev in &events[idx..end] {
                let remaining = budget - consumed;
                match ev {
                    Event::Node => {
                        if remaining == 0 {
                            return (Flow::Exhausted, budget, Vec::new());
                        }
                        consumed += 1;
                    }
                    Event::Subtree(_) => {
                        let run = runs.next().expect("one run per subtree");
                        if run.flow == Flow::Exhausted || run.nodes > remaining {
                            return (Flow::Exhausted, budget, Vec::new());
                        }
                        consumed += run.nodes;
                        if run.flow == Flow::Found {
                            return (Flow::Found, consumed, run.assign);
                        }
                    }
                }
            }
            idx = end;
        }
        (Flow::Continue, consumed, Vec::new())
    }
}

/// Decides whether a single-assignment cover avoiding antipodal
/// `forbid_k`-pairs exists, within `opts.budget` node expansions.
pub fn exists_cover(problem: &SearchProblem, opts: SearchOptions) -> Result<SearchResult> {
    let engine = Engine::new(problem)?;
    let (flow, nodes, assign) = if opts.threads <= 1 {
        engine.run_sequential(opts.budget)
    } else {
        engine.run_parallel(opts.budget, opts.threads)
    };
    let outcome = match flow {
        Flow::Continue => Outcome::Unsat,
        Flow::Exhausted => Outcome::BudgetExhausted,
        Flow::Found => Outcome::Witness(engine.witness(problem, &assign)?),
    };
    Ok(SearchResult {
        problem: *problem,
        outcome,
        nodes_expanded: nodes,
        budget: opts.budget,
    })
}

/// Runs the open five-dimensional case: five sets, ridges, no antipodal
/// 2-faces in any set.
pub fn probe_d5(opts: SearchOptions) -> Result<SearchResult> {
    exists_cover(&SearchProblem::new(5, 5, 2, 2)?, opts)
}

/// Upper bound on `C(faces, size)` accepted by
/// [`enumerate_antipode_free_sets`].
pub const ENUMERATION_LIMIT: u128 = 1_000_000_000;

/// All `size`-element sets of codim-`codim` faces with no antipodal
/// `forbid_k`-pair, in lexicographic order of canonical face indices.
pub fn enumerate_antipode_free_sets(
    d: u32,
    codim: u32,
    forbid_k: i32,
    size: usize,
) -> Result<Vec<CoverSet>> {
    SearchProblem::new(d, 1, codim, forbid_k)?;
    let table = ConflictTable::build(d, codim, forbid_k)?;
    let n = table.faces.len();
    let candidates = binomial(n as u64, size as u64) as u128;
    if candidates > ENUMERATION_LIMIT {
        return Err(Error::TooLarge(candidates));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    let mut members = vec![0u64; table.words];
    extend_free_sets(
        &table,
        0,
        size,
        &mut chosen,
        &mut members,
        &mut out,
        d,
        codim,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_free_sets(
    table: &ConflictTable,
    start: usize,
    size: usize,
    chosen: &mut Vec<usize>,
    members: &mut [u64],
    out: &mut Vec<CoverSet>,
    d: u32,
    codim: u32,
) {
    if chosen.len() == size {
        let faces = chosen.iter().map(|&i| table.faces[i]).collect();
        out.push(CoverSet::from_sorted(d, codim, faces));
        return;
    }
    let n = table.faces.len();
    let need = size - chosen.len();
    for i in start..=n.saturating_sub(need) {
        if i >= n || table.self_conflict[i] || table.conflicts_with(i, members) {
            continue;
        }
        members[i / 64] |= 1 << (i % 64);
        chosen.push(i);
        extend_free_sets(table, i + 1, size, chosen, members, out, d, codim);
        chosen.pop();
        members[i / 64] &= !(1 << (i % 64));
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeLemmaScan {
    pub subsets_scanned: u64,
    /// Edge sets of size >= 4 with no antipodal vertex pair.
    pub antipode_free_large: Vec<CoverSet>,
    pub all_bound_a_two_face: bool,
    pub every_boundary_antipode_free: bool,
}

/// Scans all 2^12 edge subsets of the 3-cube for antipode-free sets of at
/// least four edges and checks that each one bounds a 2-face.
pub fn c3_edge_lemma_scan() -> EdgeLemmaScan {
    let edges = faces_of_codim(3, 2).expect("3-cube edges");
    let boundaries: Vec<Vec<Face>> = faces_of_codim(3, 1)
        .expect("3-cube facets")
        .iter()
        .map(|f| f.subfaces(1).expect("edges of a square"))
        .collect();
    let mut found = Vec::new();
    for mask in 0u32..1 << edges.len() {
        if mask.count_ones() < 4 {
            continue;
        }
        let subset: Vec<Face> = (0..edges.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| edges[i])
            .collect();
        let antipodal = subset
            .iter()
            .any(|a| subset.iter().any(|b| a.degree_unchecked(b) >= 0));
        if !antipodal {
            found.push(CoverSet::from_sorted(3, 2, subset));
        }
    }
    let all_bound = found
        .iter()
        .all(|s| boundaries.iter().any(|b| b.as_slice() == s.faces()));
    let every_free = boundaries.iter().all(|b| {
        CoverSet::new(3, 2, b.clone())
            .map(|s| s.self_antipodality().0 < 0)
            .unwrap_or(false)
    });
    EdgeLemmaScan {
        subsets_scanned: 1 << edges.len(),
        antipode_free_large: found,
        all_bound_a_two_face: all_bound,
        every_boundary_antipode_free: every_free,
    }
}

pub fn verify_c3_edge_lemma() -> bool {
    let scan = c3_edge_lemma_scan();
    scan.all_bound_a_two_face && scan.every_boundary_antipode_free
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointScan {
    pub special_sets: usize,
    pub combinations: u64,
    /// Quadruples of pairwise-disjoint special sets covering all 24 ridges.
    pub disjoint_covers: u64,
}

/// Checks every quadruple of the antipodal-edge-free six-ridge sets of the
/// 4-cube for a disjoint cover of all ridges.
pub fn disjoint_special_sets_scan() -> Result<DisjointScan> {
    let ridges = faces_of_codim(4, 2)?;
    let index = |f: &Face| ridges.binary_search(f).expect("ridge of the 4-cube");
    let special = enumerate_antipode_free_sets(4, 2, 1, 6)?;
    let masks: Vec<u32> = special
        .iter()
        .map(|s| s.faces().iter().fold(0u32, |m, f| m | 1 << index(f)))
        .collect();
    let all = (1u32 << ridges.len()) - 1;
    let n = masks.len();
    let mut combinations = 0;
    let mut disjoint_covers = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for e in c + 1..n {
                    combinations += 1;
                    let (ma, mb, mc, me) = (masks[a], masks[b], masks[c], masks[e]);
                    let pairwise = ma & mb == 0
                        && ma & mc == 0
                        && ma & me == 0
                        && mb & mc == 0
                        && mb & me == 0
                        && mc & me == 0;
                    if pairwise && ma | mb | mc | me == all {
                        disjoint_covers += 1;
                    }
                }
            }
        }
    }
    Ok(DisjointScan {
        special_sets: n,
        combinations,
        disjoint_covers,
    })
}

pub fn verify_no_four_disjoint_special_sets() -> bool {
    disjoint_special_sets_scan()
        .map(|s| s.disjoint_covers == 0)
        .unwrap_or(false)
}
