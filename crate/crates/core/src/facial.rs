//! ℓ-facial adjacency: colorings, verification, available colors and the
//! medial subgraph induced by an edge subset.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::color::{Color, ColorSet, MAX_COLOR};
use crate::embed::{EdgeId, EmbedError, FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FacialError {
    #[error("edge {0} is uncolored")]
    Uncolored(EdgeId),
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("edge {edge} has color {color} outside 1..={k}")]
    ColorOutOfRange { edge: EdgeId, color: Color, k: usize },
    #[error("coloring covers {found} edges but the graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("palette size {0} exceeds the supported maximum")]
    PaletteTooLarge(usize),
    #[error(transparent)]
    Embed(#[from] EmbedError),
}

/// A partial map from edges to colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub k: usize,
    pub colors: Vec<Option<Color>>,
}

impl Coloring {
    /// The empty coloring of `edges` edges.
    pub fn empty(k: usize, edges: usize) -> Coloring {
        Coloring { k, colors: vec![None; edges] }
    }

    pub fn total(k: usize, colors: &[Color]) -> Coloring {
        Coloring { k, colors: colors.iter().map(|&c| Some(c)).collect() }
    }

    pub fn num_edges(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors.get(e.0).copied().flatten()
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e.0] = Some(c);
    }

    pub fn unset(&mut self, e: EdgeId) {
        self.colors[e.0] = None;
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn uncolored(&self) -> Vec<EdgeId> {
        (0..self.colors.len()).filter(|&i| self.colors[i].is_none()).map(EdgeId).collect()
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().copied().collect::<ColorSet>().len()
    }

    /// Checks sizes and color ranges against `g`.
    pub fn check(&self, g: &PlaneGraph) -> Result<(), FacialError> {
        if self.colors.len() != g.num_edges() {
            return Err(FacialError::SizeMismatch { expected: g.num_edges(), found: self.colors.len() });
        }
        if self.k > MAX_COLOR as usize {
            return Err(FacialError::PaletteTooLarge(self.k));
        }
        for (i, c) in self.colors.iter().enumerate() {
            if let Some(c) = *c {
                if c == 0 || c as usize > self.k {
                    return Err(FacialError::ColorOutOfRange { edge: EdgeId(i), color: c, k: self.k });
                }
            }
        }
        Ok(())
    }
}

/// Two equally colored edges within facial distance ℓ, witnessed on `face`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub e: EdgeId,
    pub f: EdgeId,
    pub face: FaceId,
    pub distance: usize,
}

/// All unordered pairs of distinct edges at facial distance at most `l`,
/// with the distance and the first face realizing it.
pub fn facial_pairs(g: &PlaneGraph, l: usize) -> BTreeMap<(EdgeId, EdgeId), (usize, FaceId)> {
    let mut best: BTreeMap<(EdgeId, EdgeId), (usize, FaceId)> = BTreeMap::new();
    for walk in g.faces() {
        let len = walk.len();
        for i in 0..len {
            for step in 1..=l.min(len / 2) {
                let a = g.edge_of(walk.darts[i]);
                let b = g.edge_of(walk.darts[(i + step) % len]);
                if a == b {
                    continue;
                }
                let key = (a.min(b), a.max(b));
                let entry = best.entry(key).or_insert((step, walk.face));
                if step < entry.0 {
                    *entry = (step, walk.face);
                }
            }
        }
    }
    best
}

/// Every pair of equally colored edges at facial distance at most `l`.
/// The coloring must be total.
pub fn verify(g: &PlaneGraph, l: usize, phi: &Coloring) -> Result<Vec<Violation>, FacialError> {
    phi.check(g)?;
    if let Some(e) = phi.uncolored().first() {
        return Err(FacialError::Uncolored(*e));
    }
    Ok(facial_pairs(g, l)
        .into_iter()
        .filter(|((e, f), _)| phi.get(*e) == phi.get(*f))
        .map(|((e, f), (distance, face))| Violation { e, f, face, distance })
        .collect())
}

/// Whether a total coloring is an ℓ-facial edge coloring.
pub fn is_valid(g: &PlaneGraph, l: usize, phi: &Coloring) -> bool {
    matches!(verify(g, l, phi), Ok(v) if v.is_empty())
}

/// Colors of `1..=phi.k` not used on any ℓ-facial neighbor of the
/// uncolored edge `e`.
pub fn available_colors(g: &PlaneGraph, l: usize, phi: &Coloring, e: EdgeId) -> Result<ColorSet, FacialError> {
    phi.check(g)?;
    if phi.get(e).is_some() {
        return Err(FacialError::AlreadyColored(e));
    }
    let mut free = ColorSet::palette(phi.k);
    for f in g.facial_neighborhood(e, l)? {
        if let Some(c) = phi.get(f) {
            free.remove(c);
        }
    }
    Ok(free)
}

/// The ℓ-medial graph of an edge subset: one vertex per edge of the subset,
/// adjacent when the edges are ℓ-facial neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MedialSubgraph {
    pub vertices: Vec<EdgeId>,
    /// Sorted neighbor indices into `vertices`.
    pub adjacency: Vec<Vec<usize>>,
}

impl MedialSubgraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn index_of(&self, e: EdgeId) -> Option<usize> {
        self.vertices.iter().position(|&x| x == e)
    }
}

/// Builds the ℓ-medial graph of `h` in `g`. Duplicates in `h` are ignored.
pub fn build_medial(g: &PlaneGraph, h: &[EdgeId], l: usize) -> Result<MedialSubgraph, FacialError> {
    let mut vertices: Vec<EdgeId> = Vec::new();
    for &e in h {
        if e.0 >= g.num_edges() {
            return Err(EmbedError::UnknownEdge(e).into());
        }
        if !vertices.contains(&e) {
            vertices.push(e);
        }
    }
    let index: BTreeMap<EdgeId, usize> = vertices.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut adjacency = vec![Vec::new(); vertices.len()];
    for (i, &e) in vertices.iter().enumerate() {
        for f in g.facial_neighborhood(e, l)? {
            if let Some(&j) = index.get(&f) {
                adjacency[i].push(j);
            }
        }
        adjacency[i].sort_unstable();
    }
    Ok(MedialSubgraph { vertices, adjacency })
}

/// The 2-medial graph of `h` in `g`.
pub fn build_2medial(g: &PlaneGraph, h: &[EdgeId]) -> Result<MedialSubgraph, FacialError> {
    build_medial(g, h, 2)
}

/// Available colors per vertex of a [`MedialSubgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    pub lists: Vec<ColorSet>,
}

/// The medial graph of the uncolored edges `h` together with their
/// available colors under `phi`.
pub fn lists_from_partial(
    g: &PlaneGraph,
    l: usize,
    phi: &Coloring,
    h: &[EdgeId],
) -> Result<(MedialSubgraph, ListAssignment), FacialError> {
    let medial = build_medial(g, h, l)?;
    let lists = medial.vertices.iter().map(|&e| available_colors(g, l, phi, e)).collect::<Result<Vec<_>, _>>()?;
    Ok((medial, ListAssignment { lists }))
}

/// Unordered pairs of distinct vertices within cyclic distance `l` on some
/// facial walk. Reading a vertex coloring of a plane graph against these
/// pairs gives its ℓ-facial vertex coloring condition.
pub fn facial_vertex_pairs(g: &PlaneGraph, l: usize) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for walk in g.faces() {
        let len = walk.len();
        for i in 0..len {
            for step in 1..=l.min(len / 2) {
                let a = g.tail(walk.darts[i]);
                let b = g.tail(walk.darts[(i + step) % len]);
                if a != b {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
