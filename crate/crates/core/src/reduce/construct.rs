//! The recursive 7-coloring engine.

use alloc::vec::Vec;
use core::fmt;

use super::extend::Shortfall;
use super::{apply, detect, extend, Configuration, ReduceError, K, L};
use crate::embed::PlaneGraph;
use crate::exact::{is_k_colorable, is_k_colorable_with, Outcome, SearchOptions};
use crate::facial::Coloring;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructOptions {
    /// Graphs with at most this many edges are colored by exact search.
    pub base_edges: usize,
    /// Node budget of the exact search used when no configuration is found
    /// above the base case. `None` searches to completion.
    pub fallback_budget: Option<u64>,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions { base_edges: 12, fallback_budget: Some(5_000_000) }
    }
}

/// One event of a construction, in the order the recursion met it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceLine {
    Step {
        n: usize,
        config: Configuration,
        vertices: usize,
        edges: usize,
    },
    /// No configuration was found on a graph above the base case.
    DetectGap {
        vertices: usize,
        edges: usize,
    },
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceLine::Step { n, config, vertices, edges } => {
                write!(f, "step {n} kind={} witness={} |V|={vertices} |E|={edges}", config.kind, config.witness)
            }
            TraceLine::DetectGap { vertices, edges } => write!(f, "anomaly DetectGap |V|={vertices} |E|={edges}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub coloring: Coloring,
    pub trace: Vec<TraceLine>,
    pub steps: usize,
    pub detect_gaps: usize,
    pub shortfalls: Vec<Shortfall>,
}

pub fn construct_7_coloring(g: &PlaneGraph) -> Result<Construction, ReduceError> {
    construct_with(g, ConstructOptions::default())
}

pub fn construct_with(g: &PlaneGraph, opts: ConstructOptions) -> Result<Construction, ReduceError> {
    let mut run = Run::new(opts);
    let coloring = run.color(g, None)?;
    Ok(Construction {
        coloring,
        trace: run.trace,
        steps: run.steps,
        detect_gaps: run.detect_gaps,
        shortfalls: run.shortfalls,
    })
}

pub(crate) struct Run {
    opts: ConstructOptions,
    trace: Vec<TraceLine>,
    steps: usize,
    detect_gaps: usize,
    shortfalls: Vec<Shortfall>,
}

impl Run {
    pub(crate) fn new(opts: ConstructOptions) -> Run {
        Run { opts, trace: Vec::new(), steps: 0, detect_gaps: 0, shortfalls: Vec::new() }
    }

    pub(crate) fn color(&mut self, g: &PlaneGraph, forced: Option<&Configuration>) -> Result<Coloring, ReduceError> {
        let m = g.num_edges();
        if m == 0 {
            return Ok(Coloring::empty(K, 0));
        }
        if !g.is_connected() {
            let mut out = Coloring::empty(K, m);
            for (part, map) in g.split_components() {
                let phi = self.color(&part, None)?;
                for e in g.edges() {
                    if let Some(c) = map.edge(e).and_then(|e2| phi.get(e2)) {
                        out.set(e, c);
                    }
                }
            }
            return Ok(out);
        }
        let step = match forced.map(|c| apply(g, c)) {
            Some(Ok(step)) => Some(step),
            _ if m <= self.opts.base_edges => {
                return is_k_colorable(g, L, K).ok_or(ReduceError::BaseCaseFailed { edges: m });
            }
            _ => detect(g).map(|c| apply(g, &c)).transpose()?,
        };
        let Some(step) = step else {
            self.detect_gaps += 1;
            self.trace.push(TraceLine::DetectGap { vertices: g.num_vertices(), edges: m });
            let opts = SearchOptions { node_budget: self.opts.fallback_budget, ..SearchOptions::default() };
            return match is_k_colorable_with(g, L, K, opts).outcome {
                Outcome::Colorable(c) => Ok(c),
                Outcome::NotColorable => Err(ReduceError::BaseCaseFailed { edges: m }),
                Outcome::Unknown => Err(ReduceError::FallbackExhausted { edges: m }),
            };
        };
        self.steps += 1;
        self.trace.push(TraceLine::Step {
            n: self.steps,
            config: step.config.clone(),
            vertices: g.num_vertices(),
            edges: m,
        });
        let mut colorings = Vec::with_capacity(step.parts.len());
        for part in &step.parts {
            colorings.push(self.color(&part.graph, part.forced.as_ref())?);
        }
        let ext = extend(g, &step, &colorings)?;
        self.shortfalls.extend(ext.shortfalls);
        Ok(ext.coloring)
    }
}
