//! Cut vertices and blocks of the underlying multigraph.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{EdgeId, PlaneGraph, VertexId};

/// Block decomposition. Each block is a sorted edge list; a loop forms a
/// block of its own, as does an isolated vertex (with no edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blocks {
    pub blocks: Vec<Vec<EdgeId>>,
    pub cut_vertices: Vec<VertexId>,
}

impl PlaneGraph {
    /// Vertices lying in more than one block: those whose removal increases
    /// the number of components, and those carrying a loop besides other
    /// edges.
    pub fn cut_vertices(&self) -> Vec<VertexId> {
        self.blocks().cut_vertices
    }

    /// Connected, at least three vertices and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.num_vertices() >= 3 && self.is_connected() && self.cut_vertices().is_empty()
    }

    pub fn blocks(&self) -> Blocks {
        let n = self.num_vertices();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = BTreeSet::new();
        let mut blocks: Vec<Vec<EdgeId>> = Vec::new();
        let mut timer = 0;
        let mut edge_stack: Vec<EdgeId> = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut root_children = 0;
            // frame: (vertex, edge used to enter, next rotation index)
            let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
            while let Some(&(v, via, idx)) = stack.last() {
                let rot = &self.rotations[v];
                if idx < rot.len() {
                    let d = rot[idx];
                    stack.last_mut().expect("non-empty").2 += 1;
                    let e = self.edge_of(d);
                    if Some(e) == via || self.is_loop(e) {
                        continue;
                    }
                    let w = self.head(d).0;
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, Some(e), 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(parent, _, _)) = stack.last() {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            if parent != root {
                                cut.insert(parent);
                            }
                            let entry = via.expect("non-root frame has an entry edge");
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(e);
                                if e == entry {
                                    break;
                                }
                            }
                            block.sort();
                            block.dedup();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                cut.insert(root);
            }
            if self.rotations[root].is_empty() {
                blocks.push(Vec::new());
            }
        }
        for e in self.edges() {
            if self.is_loop(e) {
                blocks.push(vec![e]);
                let x = self.tail(self.edge_darts(e)[0]);
                if self.rotation(x).len() > 2 {
                    cut.insert(x.0);
                }
            }
        }
        blocks.sort();
        Blocks { blocks, cut_vertices: cut.into_iter().map(VertexId).collect() }
    }
}
