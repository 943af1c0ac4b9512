//! Exact chromatic index with the search split across threads.

use std::thread;

use lfec_core::exact::{self, merge, KSearch, SearchOptions, SearchResult, SolveError, SolveReport};
use lfec_core::PlaneGraph;

/// [`exact::min_colors`] with each decision split into the disjoint
/// branches of [`KSearch::branches`], dealt round-robin to `jobs` threads.
pub fn min_colors_parallel(g: &PlaneGraph, l: usize, kmax: usize, jobs: usize) -> Result<SolveReport, SolveError> {
    if jobs <= 1 {
        return exact::min_colors(g, l, kmax);
    }
    let adj = exact::medial_adjacency(g, l);
    exact::min_colors_by(&adj, kmax, SearchOptions::default(), |search| decide(search, jobs))
}

fn decide(search: &KSearch, jobs: usize) -> SearchResult {
    let branches = search.branches();
    if branches.len() <= 1 {
        return search.run_branches(&branches);
    }
    let results: Vec<SearchResult> = thread::scope(|s| {
        let handles: Vec<_> = (0..jobs.min(branches.len()))
            .map(|j| {
                let mine: Vec<_> = branches.iter().skip(j).step_by(jobs).cloned().collect();
                s.spawn(move || search.run_branches(&mine))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("search thread panicked")).collect()
    });
    merge(results)
}
