//! List coloring of small simple graphs: free-vertex cores, Gallai trees and
//! an exact L-coloring solver.

use alloc::vec;
use alloc::vec::Vec;

use crate::color::{Color, ColorSet};
use crate::facial::{ListAssignment, MedialSubgraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ListError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{lists} lists for {vertices} vertices")]
    ListCount { vertices: usize, lists: usize },
}

/// A simple graph with a color list on every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ListGraph {
    /// Sorted, duplicate-free neighbor lists.
    pub adj: Vec<Vec<usize>>,
    pub lists: Vec<ColorSet>,
}

impl ListGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)], lists: Vec<ColorSet>) -> Result<ListGraph, ListError> {
        if lists.len() != n {
            return Err(ListError::ListCount { vertices: n, lists: lists.len() });
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(ListError::VertexOutOfRange(a));
            }
            if b >= n {
                return Err(ListError::VertexOutOfRange(b));
            }
            if a == b {
                return Err(ListError::SelfLoop(a));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        Ok(ListGraph { adj, lists })
    }

    pub fn from_medial(m: &MedialSubgraph, lists: &ListAssignment) -> ListGraph {
        ListGraph { adj: m.adjacency.clone(), lists: lists.lists.clone() }
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    /// The null graph.
    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Subgraph induced by `keep` (ascending), renumbered in that order.
    pub fn induced(&self, keep: &[usize]) -> ListGraph {
        let mut index = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        ListGraph { adj, lists: keep.iter().map(|&v| self.lists[v]).collect() }
    }

    /// Vertex sets of the connected components, ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.adj)
    }
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Which free vertex the core reduction removes next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RemovalOrder {
    #[default]
    LowestFirst,
    HighestFirst,
}

/// Result of the free-vertex reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    /// The core, on the vertices of `kept` in ascending order.
    pub graph: ListGraph,
    pub kept: Vec<usize>,
    /// Free vertices in the order they were removed.
    pub removed: Vec<usize>,
}

/// Repeatedly removes a vertex whose list is longer than its current degree,
/// lowest id first.
pub fn core(g: &ListGraph) -> Core {
    core_with(g, RemovalOrder::LowestFirst)
}

pub fn core_with(g: &ListGraph, order: RemovalOrder) -> Core {
    let n = g.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = Vec::new();
    loop {
        let is_free = |v: usize| alive[v] && g.lists[v].len() > degree[v];
        let pick = match order {
            RemovalOrder::LowestFirst => (0..n).find(|&v| is_free(v)),
            RemovalOrder::HighestFirst => (0..n).rev().find(|&v| is_free(v)),
        };
        let Some(v) = pick else { break };
        alive[v] = false;
        for &w in &g.adj[v] {
            degree[w] -= 1;
        }
        removed.push(v);
    }
    let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Core { graph: g.induced(&kept), kept, removed }
}

/// Whether every block of the connected graph is complete or an odd cycle.
pub fn is_gallai_tree(adj: &[Vec<usize>]) -> Result<bool, ListError> {
    if components(adj).len() > 1 {
        return Err(ListError::Disconnected);
    }
    for block in blocks(adj) {
        let k = block.vertices.len();
        let complete = block.edges == k * (k - 1) / 2;
        let odd_cycle = k >= 3 && k % 2 == 1 && block.edges == k;
        if !complete && !odd_cycle {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Block {
    vertices: Vec<usize>,
    edges: usize,
}

fn blocks(adj: &[Vec<usize>]) -> Vec<Block> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if adj[root].is_empty() {
            disc[root] = timer;
            timer += 1;
            out.push(Block { vertices: vec![root], edges: 0 });
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&(v, parent, idx)) = stack.last() {
            if idx < adj[v].len() {
                stack.last_mut().expect("non-empty").2 += 1;
                let w = adj[v][idx];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut vertices = Vec::new();
                        let mut edges = 0;
                        while let Some((a, b)) = edge_stack.pop() {
                            edges += 1;
                            vertices.push(a);
                            vertices.push(b);
                            if (a, b) == (parent, v) {
                                break;
                            }
                        }
                        vertices.sort_unstable();
                        vertices.dedup();
                        out.push(Block { vertices, edges });
                    }
                }
            }
        }
    }
    out
}

/// Degree-choosability condition: every list is at least as long as the
/// degree, and in every component some list is longer or the component is
/// not a Gallai tree. The null graph qualifies.
pub fn theorem_applies(g: &ListGraph) -> bool {
    if (0..g.len()).any(|v| g.lists[v].len() < g.degree(v)) {
        return false;
    }
    g.components().into_iter().all(|comp| {
        if comp.iter().any(|&v| g.lists[v].len() > g.degree(v)) {
            return true;
        }
        let sub = g.induced(&comp);
        !is_gallai_tree(&sub.adj).expect("component is connected")
    })
}

/// Whether `colors` is a proper coloring drawn from the lists.
pub fn is_l_coloring(g: &ListGraph, colors: &[Color]) -> bool {
    colors.len() == g.len()
        && (0..g.len()).all(|v| g.lists[v].contains(colors[v]) && g.adj[v].iter().all(|&w| colors[w] != colors[v]))
}

/// Finds an L-coloring, or `None` if none exists. Free vertices are peeled
/// off first and colored last; the core is solved by backtracking on the
/// vertex with fewest remaining colors.
pub fn l_color(g: &ListGraph) -> Option<Vec<Color>> {
    let reduced = core(g);
    let mut colors: Vec<Option<Color>> = vec![None; g.len()];
    let core_colors = solve(&reduced.graph)?;
    for (i, &v) in reduced.kept.iter().enumerate() {
        colors[v] = Some(core_colors[i]);
    }
    for &v in reduced.removed.iter().rev() {
        let used: ColorSet = g.adj[v].iter().filter_map(|&w| colors[w]).collect();
        let c = g.lists[v].difference(used).first().expect("a free vertex always has a spare color");
        colors[v] = Some(c);
    }
    Some(colors.into_iter().map(|c| c.expect("all colored")).collect())
}

fn solve(g: &ListGraph) -> Option<Vec<Color>> {
    let mut domains = g.lists.clone();
    let mut colors = vec![0; g.len()];
    let mut done = vec![false; g.len()];
    if backtrack(g, &mut domains, &mut colors, &mut done, g.len()) {
        Some(colors)
    } else {
        None
    }
}

fn backtrack(g: &ListGraph, domains: &mut [ColorSet], colors: &mut [Color], done: &mut [bool], left: usize) -> bool {
    if left == 0 {
        return true;
    }
    let v = (0..g.len())
        .filter(|&v| !done[v])
        .min_by_key(|&v| (domains[v].len(), core::cmp::Reverse(g.degree(v)), v))
        .expect("an uncolored vertex remains");
    let options = domains[v];
    if options.is_empty() {
        return false;
    }
    done[v] = true;
    for c in options {
        colors[v] = c;
        let mut touched = Vec::new();
        let mut dead = false;
        for &w in &g.adj[v] {
            if !done[w] && domains[w].contains(c) {
                domains[w].remove(c);
                touched.push(w);
                dead |= domains[w].is_empty();
            }
        }
        if !dead && backtrack(g, domains, colors, done, left - 1) {
            return true;
        }
        for w in touched {
            domains[w].insert(c);
        }
    }
    done[v] = false;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn uniform(n: usize, edges: &[(usize, usize)], colors: &[Color]) -> ListGraph {
        let list: ColorSet = colors.iter().copied().collect();
        ListGraph::from_edges(n, edges, vec![list; n]).unwrap()
    }

    fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
        (0..n).map(|i| (i, (i + 1) % n)).collect()
    }

    /// Every list-respecting assignment, tried in turn.
    fn brute_colorable(g: &ListGraph) -> bool {
        fn go(g: &ListGraph, v: usize, colors: &mut Vec<Color>) -> bool {
            if v == g.len() {
                return is_l_coloring(g, colors);
            }
            for c in g.lists[v] {
                colors.push(c);
                if go(g, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
            false
        }
        go(g, 0, &mut Vec::new())
    }

    #[test]
    fn core_examples() {
        let path = uniform(3, &[(0, 1), (1, 2)], &[1, 2, 3]);
        let c = core(&path);
        assert!(c.graph.is_empty());
        assert_eq!(c.removed, vec![0, 1, 2]);

        let c4 = uniform(4, &cycle_edges(4), &[1, 2]);
        assert_eq!(core(&c4).graph, c4);
    }

    #[test]
    fn seven_face_case_three_core_is_null() {
        // uncolored edges at walk positions 0, 1, 2, 4, 5 of a 7-face, joined
        // when within two steps; the first two keep three colors
        let lists: Vec<ColorSet> = [&[1, 2, 3][..], &[1, 2, 3], &[1, 2], &[1, 2], &[1, 2]]
            .iter()
            .map(|l| l.iter().copied().collect())
            .collect();
        let edges = [(0, 1), (0, 2), (0, 4), (1, 2), (2, 3), (3, 4)];
        let g = ListGraph::from_edges(5, &edges, lists).unwrap();
        let c = core(&g);
        assert!(c.graph.is_empty());
        assert_eq!(c.removed, vec![1, 0, 2, 3, 4]);
        assert!(is_l_coloring(&g, &l_color(&g).unwrap()));
    }

    #[test]
    fn gallai_tree_examples() {
        let k4 = uniform(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], &[1]);
        assert_eq!(is_gallai_tree(&k4.adj), Ok(true));
        let c4 = uniform(4, &cycle_edges(4), &[1]);
        assert_eq!(is_gallai_tree(&c4.adj), Ok(false));
        let bowtie = uniform(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)], &[1]);
        assert_eq!(is_gallai_tree(&bowtie.adj), Ok(true));
        let c5 = uniform(5, &cycle_edges(5), &[1]);
        assert_eq!(is_gallai_tree(&c5.adj), Ok(true));
        let split = uniform(2, &[], &[1]);
        assert_eq!(is_gallai_tree(&split.adj), Err(ListError::Disconnected));
    }

    #[test]
    fn theorem_examples() {
        assert!(theorem_applies(&uniform(4, &cycle_edges(4), &[1, 2])));
        assert!(!theorem_applies(&uniform(3, &cycle_edges(3), &[1, 2])));
        let lists = vec![ColorSet::single(1), [1, 2].into_iter().collect(), ColorSet::single(2)];
        let p3 = ListGraph::from_edges(3, &[(0, 1), (1, 2)], lists).unwrap();
        assert!(!theorem_applies(&p3));
    }

    #[test]
    fn solver_examples() {
        let c4 = uniform(4, &cycle_edges(4), &[1, 2]);
        let col = l_color(&c4).unwrap();
        assert!(is_l_coloring(&c4, &col));
        assert_eq!(l_color(&uniform(3, &cycle_edges(3), &[1, 2])), None);
        assert_eq!(l_color(&ListGraph::default()), Some(vec![]));
        let empty_list = ListGraph::from_edges(1, &[], vec![ColorSet::EMPTY]).unwrap();
        assert_eq!(l_color(&empty_list), None);
    }

    #[test]
    fn bad_input_is_rejected() {
        assert_eq!(ListGraph::from_edges(2, &[(0, 0)], vec![ColorSet::EMPTY; 2]), Err(ListError::SelfLoop(0)));
        assert_eq!(ListGraph::from_edges(2, &[(0, 5)], vec![ColorSet::EMPTY; 2]), Err(ListError::VertexOutOfRange(5)));
        assert!(matches!(ListGraph::from_edges(2, &[], vec![]), Err(ListError::ListCount { .. })));
    }

    pub(crate) fn arb_list_graph(max_n: usize, max_color: u32) -> impl Strategy<Value = ListGraph> {
        (0..=max_n).prop_flat_map(move |n| {
            let pairs = n * n.saturating_sub(1) / 2;
            (proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(0u64..(1 << max_color), n))
                .prop_map(move |(bits, masks)| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for a in 0..n {
                        for b in a + 1..n {
                            if bits[k] {
                                edges.push((a, b));
                            }
                            k += 1;
                        }
                    }
                    let lists = masks.into_iter().map(|m| ColorSet::from_bits(m << 1)).collect();
                    ListGraph::from_edges(n, &edges, lists).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn solver_matches_brute_force(g in arb_list_graph(8, 4)) {
            let got = l_color(&g);
            prop_assert_eq!(got.is_some(), brute_colorable(&g));
            if let Some(c) = got {
                prop_assert!(is_l_coloring(&g, &c));
            }
        }

        #[test]
        fn core_preserves_colorability(g in arb_list_graph(8, 4)) {
            let c = core(&g);
            prop_assert_eq!(brute_colorable(&c.graph), brute_colorable(&g));
            let other = core_with(&g, RemovalOrder::HighestFirst);
            prop_assert_eq!(brute_colorable(&other.graph), brute_colorable(&c.graph));
            prop_assert!((0..c.graph.len()).all(|v| c.graph.lists[v].len() <= c.graph.degree(v)));
        }

        #[test]
        fn theorem_guarantees_a_coloring(g in arb_list_graph(10, 5)) {
            if theorem_applies(&g) {
                prop_assert!(l_color(&g).is_some());
            }
        }
    }
}
