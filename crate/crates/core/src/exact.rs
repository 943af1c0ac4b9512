//! Exact ℓ-facial chromatic index by DSATUR branch and bound on the
//! ℓ-medial graph of all edges.

use alloc::vec;
use alloc::vec::Vec;

use crate::color::Color;
use crate::embed::PlaneGraph;
use crate::facial::{build_medial, Coloring};

/// Largest palette the search supports.
pub const MAX_K: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Fix a greedy clique to colors `1..=q` and open new colors in
    /// increasing order only.
    pub symmetry_breaking: bool,
    /// Abort after this many search nodes.
    pub node_budget: Option<u64>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { symmetry_breaking: true, node_budget: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Colorable(Coloring),
    NotColorable,
    /// The node budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub chi: usize,
    pub witness: Coloring,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("no ℓ-facial edge coloring with at most {kmax} colors")]
    AboveBound { kmax: usize, nodes: u64 },
    #[error("node budget exhausted while deciding {k} colors")]
    BudgetExhausted { k: usize, nodes: u64 },
}

/// `3ℓ + 3`, two above the conjectured bound.
pub fn default_kmax(l: usize) -> usize {
    3 * l + 3
}

/// An ℓ-facial edge coloring with at most `k` colors, if one exists.
pub fn is_k_colorable(g: &PlaneGraph, l: usize, k: usize) -> Option<Coloring> {
    match KSearch::new(g, l, k, SearchOptions::default()).run().outcome {
        Outcome::Colorable(c) => Some(c),
        _ => None,
    }
}

pub fn is_k_colorable_with(g: &PlaneGraph, l: usize, k: usize, opts: SearchOptions) -> SearchResult {
    KSearch::new(g, l, k, opts).run()
}

/// The least `k ≤ kmax` admitting an ℓ-facial edge coloring.
pub fn min_colors(g: &PlaneGraph, l: usize, kmax: usize) -> Result<SolveReport, SolveError> {
    min_colors_with(g, l, kmax, SearchOptions::default())
}

pub fn min_colors_with(g: &PlaneGraph, l: usize, kmax: usize, opts: SearchOptions) -> Result<SolveReport, SolveError> {
    let adj = medial_adjacency(g, l);
    min_colors_by(&adj, kmax, opts, |search| search.run())
}

/// Runs the minimization with a caller-supplied decision procedure, for
/// instance one that explores [`KSearch::branches`] in parallel.
pub fn min_colors_by(
    adj: &[Vec<usize>],
    kmax: usize,
    opts: SearchOptions,
    mut decide: impl FnMut(&KSearch) -> SearchResult,
) -> Result<SolveReport, SolveError> {
    if adj.is_empty() {
        return Ok(SolveReport { chi: 0, witness: Coloring::empty(0, 0), nodes_explored: 0 });
    }
    let lower = greedy_clique(adj).len();
    let mut nodes = 0;
    for k in lower..=kmax.min(MAX_K) {
        let search = KSearch::from_adjacency(adj.to_vec(), k, opts);
        let result = decide(&search);
        nodes += result.nodes;
        match result.outcome {
            Outcome::Colorable(witness) => return Ok(SolveReport { chi: k, witness, nodes_explored: nodes }),
            Outcome::NotColorable => {}
            Outcome::Unknown => return Err(SolveError::BudgetExhausted { k, nodes }),
        }
    }
    Err(SolveError::AboveBound { kmax, nodes })
}

/// Adjacency of the ℓ-medial graph on all edges; vertex `i` is edge `i`.
pub fn medial_adjacency(g: &PlaneGraph, l: usize) -> Vec<Vec<usize>> {
    let all: Vec<_> = g.edges().collect();
    build_medial(g, &all, l).expect("edges of g").adjacency
}

/// Greedy clique: repeatedly add the highest-degree vertex adjacent to all
/// chosen ones, lowest id on ties.
pub fn greedy_clique(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(adj[v].len()), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| adj[v].binary_search(&u).is_ok()) {
            clique.push(v);
        }
    }
    clique
}

/// A partial assignment `(vertex, color)` from which a branch starts.
pub type Branch = Vec<(usize, Color)>;

/// Decision search for one palette size.
#[derive(Debug, Clone)]
pub struct KSearch {
    adj: Vec<Vec<usize>>,
    k: usize,
    opts: SearchOptions,
}

enum Step {
    Found,
    Exhausted,
    Budget,
}

struct State<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    colors: Vec<Color>,
    blocked: Vec<u16>,
    sat: Vec<usize>,
    max_used: Color,
    nodes: u64,
    budget: Option<u64>,
    symmetry: bool,
}

impl State<'_> {
    fn blocked(&self, v: usize, c: Color) -> bool {
        self.blocked[v * (self.k + 1) + c as usize] > 0
    }

    /// Colors `v` and reports whether some uncolored neighbor lost its last
    /// color.
    fn assign(&mut self, v: usize, c: Color) -> bool {
        self.colors[v] = c;
        let mut dead = false;
        let adj = self.adj;
        for &w in &adj[v] {
            let slot = &mut self.blocked[w * (self.k + 1) + c as usize];
            *slot += 1;
            if *slot == 1 {
                self.sat[w] += 1;
                dead |= self.colors[w] == 0 && self.sat[w] == self.k;
            }
        }
        dead
    }

    fn unassign(&mut self, v: usize, c: Color) {
        self.colors[v] = 0;
        let adj = self.adj;
        for &w in &adj[v] {
            let slot = &mut self.blocked[w * (self.k + 1) + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.adj.len()).filter(|&v| self.colors[v] == 0).max_by_key(|&v| {
            let free_degree = self.adj[v].iter().filter(|&&w| self.colors[w] == 0).count();
            (self.sat[v], free_degree, core::cmp::Reverse(v))
        })
    }

    fn candidates(&self, v: usize) -> impl Iterator<Item = Color> + '_ {
        let limit = if self.symmetry { (self.max_used as usize + 1).min(self.k) } else { self.k };
        (1..=limit as Color).filter(move |&c| !self.blocked(v, c))
    }

    fn run(&mut self) -> Step {
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            return Step::Budget;
        }
        let Some(v) = self.pick() else { return Step::Found };
        let options: Vec<Color> = self.candidates(v).collect();
        for c in options {
            let prev = self.max_used;
            self.max_used = self.max_used.max(c);
            let dead = self.assign(v, c);
            if !dead {
                match self.run() {
                    Step::Found => return Step::Found,
                    Step::Budget => return Step::Budget,
                    Step::Exhausted => {}
                }
            }
            self.unassign(v, c);
            self.max_used = prev;
        }
        Step::Exhausted
    }
}

impl KSearch {
    pub fn new(g: &PlaneGraph, l: usize, k: usize, opts: SearchOptions) -> KSearch {
        KSearch::from_adjacency(medial_adjacency(g, l), k, opts)
    }

    pub fn from_adjacency(adj: Vec<Vec<usize>>, k: usize, opts: SearchOptions) -> KSearch {
        assert!(k <= MAX_K, "palette of {k} colors is too large");
        KSearch { adj, k, opts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn state(&self) -> State<'_> {
        let n = self.adj.len();
        State {
            adj: &self.adj,
            k: self.k,
            colors: vec![0; n],
            blocked: vec![0; n * (self.k + 1)],
            sat: vec![0; n],
            max_used: 0,
            nodes: 0,
            budget: self.opts.node_budget,
            symmetry: self.opts.symmetry_breaking,
        }
    }

    /// Assignments forced by symmetry breaking; `None` if they already
    /// conflict (the clique is larger than the palette).
    fn fixed(&self) -> Option<Branch> {
        if !self.opts.symmetry_breaking {
            return Some(Vec::new());
        }
        let clique = greedy_clique(&self.adj);
        if clique.len() > self.k {
            return None;
        }
        Some(clique.into_iter().enumerate().map(|(i, v)| (v, i as Color + 1)).collect())
    }

    /// Disjoint subproblems covering the whole search: the fixed clique plus
    /// each admissible color of the first branching vertex.
    pub fn branches(&self) -> Vec<Branch> {
        let Some(fixed) = self.fixed() else { return Vec::new() };
        let mut st = self.state();
        for &(v, c) in &fixed {
            st.max_used = st.max_used.max(c);
            if st.assign(v, c) {
                return Vec::new();
            }
        }
        let Some(v) = st.pick() else { return vec![fixed] };
        st.candidates(v)
            .map(|c| {
                let mut b = fixed.clone();
                b.push((v, c));
                b
            })
            .collect()
    }

    /// Searches below a branch with its own node budget.
    pub fn run_branch(&self, branch: &Branch) -> SearchResult {
        let mut st = self.state();
        for &(v, c) in branch {
            if st.colors[v] != 0 || st.blocked(v, c) || c as usize > self.k {
                return SearchResult { outcome: Outcome::NotColorable, nodes: 0 };
            }
            st.max_used = st.max_used.max(c);
            st.assign(v, c);
        }
        if (0..self.adj.len()).any(|v| st.colors[v] == 0 && st.sat[v] == self.k) {
            return SearchResult { outcome: Outcome::NotColorable, nodes: 1 };
        }
        let step = st.run();
        let outcome = match step {
            Step::Found => {
                Outcome::Colorable(Coloring { k: self.k, colors: st.colors.iter().map(|&c| Some(c)).collect() })
            }
            Step::Exhausted => Outcome::NotColorable,
            Step::Budget => Outcome::Unknown,
        };
        SearchResult { outcome, nodes: st.nodes }
    }

    pub fn run(&self) -> SearchResult {
        match self.fixed() {
            Some(fixed) => self.run_branch(&fixed),
            None => SearchResult { outcome: Outcome::NotColorable, nodes: 0 },
        }
    }

    /// Runs the branches in order and merges the results.
    pub fn run_branches(&self, branches: &[Branch]) -> SearchResult {
        merge(branches.iter().map(|b| self.run_branch(b)))
    }
}

/// Combines branch results: any coloring wins, otherwise any unknown makes
/// the whole unknown.
pub fn merge(results: impl IntoIterator<Item = SearchResult>) -> SearchResult {
    let mut nodes = 0;
    let mut unknown = false;
    for r in results {
        nodes += r.nodes;
        match r.outcome {
            Outcome::Colorable(c) => return SearchResult { outcome: Outcome::Colorable(c), nodes },
            Outcome::Unknown => unknown = true,
            Outcome::NotColorable => {}
        }
    }
    SearchResult { outcome: if unknown { Outcome::Unknown } else { Outcome::NotColorable }, nodes }
}
