//! Plane multigraphs as rotation systems.
//!
//! A [`PlaneGraph`] is a set of darts with two permutations: `twin`, a
//! fixed-point-free involution pairing the two darts of every edge, and
//! `sigma`, which maps a dart to the next dart leaving the same vertex in the
//! cyclic order of the embedding. Vertices are the orbits of `sigma`, edges
//! the orbits of `twin`, and faces the orbits of `phi = sigma ∘ twin`, that is
//! `phi(d) = sigma(twin(d))`. A facial walk therefore enters a vertex along
//! `d` and leaves it along the dart following `twin(d)` in the rotation.
//!
//! Loops and parallel edges are allowed. Vertices without darts are allowed
//! as well (isolated vertices); they lie on no facial walk.
//!
//! Graphs are immutable: every surgery builds a new graph and reports how old
//! edge and vertex ids map onto the new ones.

mod blocks;
mod cycles;
mod draft;
mod medial;
mod surgery;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use blocks::Blocks;
pub use cycles::Cycle;
pub(crate) use draft::Draft;
pub use surgery::SurgeryMap;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident, $prefix:literal) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub usize);

        impl $name {
            pub fn index(self) -> usize {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }
    };
}

id_type!(
    /// A half-edge. Every edge owns exactly two darts.
    Dart,
    "d"
);
id_type!(EdgeId, "e");
id_type!(VertexId, "v");
id_type!(FaceId, "f");

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbedError {
    #[error("dart {0} is paired with itself")]
    SelfPaired(Dart),
    #[error("dart {0} appears more than once")]
    DuplicateDart(Dart),
    #[error("dart {0} belongs to no vertex rotation")]
    DanglingDart(Dart),
    #[error("dart {dart} is out of range for {count} darts")]
    DartOutOfRange { dart: Dart, count: usize },
    #[error("rotation system is not plane: V - E + F = {found}, expected {expected}")]
    NotPlanar { found: isize, expected: isize },
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("edges {0} and {1} do not have four distinct endpoints")]
    SharedEndpoint(EdgeId, EdgeId),
    #[error("edges {0} and {1} do not lie on a common face")]
    EdgesNotCofacial(EdgeId, EdgeId),
    #[error("endpoint mapping of {0} onto {1} matches no common face")]
    OrientationMismatch(EdgeId, EdgeId),
    #[error("vertices {0} and {1} do not lie on a common face")]
    VerticesNotCofacial(VertexId, VertexId),
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentVertices(VertexId, VertexId),
    #[error("cannot identify vertex {0} with itself")]
    SameVertex(VertexId),
    #[error("face {face} has length {len}, expected {expected}")]
    FaceLength { face: FaceId, len: usize, expected: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("face {0} is not bounded by a cycle")]
    DegenerateFace(FaceId),
}

/// Input for [`PlaneGraph::from_rotation`]: the dart pairs of every edge and
/// the cyclic rotation at every vertex. Darts are numbered `0..2m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RotationSpec {
    pub edges: Vec<[Dart; 2]>,
    pub rotations: Vec<Vec<Dart>>,
}

/// Boundary walk of a face, as the cyclic sequence of its darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceWalk {
    pub face: FaceId,
    pub darts: Vec<Dart>,
}

impl FaceWalk {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    twin: Vec<Dart>,
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    vertex_of: Vec<VertexId>,
    edge_of: Vec<EdgeId>,
    edge_darts: Vec<[Dart; 2]>,
    rotations: Vec<Vec<Dart>>,
    faces: Vec<FaceWalk>,
    face_of: Vec<FaceId>,
    face_pos: Vec<usize>,
}

impl PlaneGraph {
    /// Validates a rotation system and builds the graph with its faces.
    pub fn from_rotation(spec: RotationSpec) -> Result<PlaneGraph, EmbedError> {
        let RotationSpec { edges, rotations } = spec;
        let count = 2 * edges.len();
        let mut twin = vec![None; count];
        let mut edge_of = vec![EdgeId(0); count];
        for (e, &[a, b]) in edges.iter().enumerate() {
            for d in [a, b] {
                if d.0 >= count {
                    return Err(EmbedError::DartOutOfRange { dart: d, count });
                }
            }
            if a == b {
                return Err(EmbedError::SelfPaired(a));
            }
            for (d, t) in [(a, b), (b, a)] {
                if twin[d.0].is_some() {
                    return Err(EmbedError::DuplicateDart(d));
                }
                twin[d.0] = Some(t);
                edge_of[d.0] = EdgeId(e);
            }
        }
        let twin: Vec<Dart> = twin.into_iter().map(|t| t.expect("all darts paired")).collect();

        let mut vertex_of = vec![None; count];
        let mut sigma = vec![Dart(0); count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d.0 >= count {
                    return Err(EmbedError::DartOutOfRange { dart: d, count });
                }
                if vertex_of[d.0].is_some() {
                    return Err(EmbedError::DuplicateDart(d));
                }
                vertex_of[d.0] = Some(VertexId(v));
                sigma[d.0] = rot[(i + 1) % rot.len()];
            }
        }
        let mut vo = Vec::with_capacity(count);
        for (d, v) in vertex_of.into_iter().enumerate() {
            vo.push(v.ok_or(EmbedError::DanglingDart(Dart(d)))?);
        }
        let mut sigma_inv = vec![Dart(0); count];
        for d in 0..count {
            sigma_inv[sigma[d].0] = Dart(d);
        }

        let mut g = PlaneGraph {
            twin,
            sigma,
            sigma_inv,
            vertex_of: vo,
            edge_of,
            edge_darts: edges,
            rotations,
            faces: Vec::new(),
            face_of: vec![FaceId(0); count],
            face_pos: vec![0; count],
        };
        g.trace_faces();
        let (found, expected) = g.euler_balance();
        if found != expected {
            return Err(EmbedError::NotPlanar { found, expected });
        }
        Ok(g)
    }

    fn trace_faces(&mut self) {
        let count = self.twin.len();
        let mut seen = vec![false; count];
        for start in 0..count {
            if seen[start] {
                continue;
            }
            let face = FaceId(self.faces.len());
            let mut darts = Vec::new();
            let mut d = Dart(start);
            while !seen[d.0] {
                seen[d.0] = true;
                self.face_of[d.0] = face;
                self.face_pos[d.0] = darts.len();
                darts.push(d);
                d = self.phi(d);
            }
            self.faces.push(FaceWalk { face, darts });
        }
    }

    /// `(V - E + F, 2·(components with edges) + isolated vertices)`.
    fn euler_balance(&self) -> (isize, isize) {
        let found = self.num_vertices() as isize - self.num_edges() as isize + self.num_faces() as isize;
        let mut expected = 0;
        for comp in self.components() {
            expected += if comp.len() == 1 && self.degree(comp[0]) == 0 { 1 } else { 2 };
        }
        (found, expected)
    }

    /// The rotation spec this graph was built from (rotations as stored).
    pub fn to_rotation_spec(&self) -> RotationSpec {
        RotationSpec { edges: self.edge_darts.clone(), rotations: self.rotations.clone() }
    }

    pub fn num_vertices(&self) -> usize {
        self.rotations.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn num_darts(&self) -> usize {
        self.twin.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.num_vertices()).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.num_edges()).map(EdgeId)
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.num_darts()).map(Dart)
    }

    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d.0]
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d.0]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d.0]
    }

    /// Successor of `d` on its facial walk.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.twin[d.0].0]
    }

    /// Predecessor of `d` on its facial walk.
    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.twin[self.sigma_inv[d.0].0]
    }

    /// Vertex the dart leaves.
    pub fn tail(&self, d: Dart) -> VertexId {
        self.vertex_of[d.0]
    }

    /// Vertex the dart enters.
    pub fn head(&self, d: Dart) -> VertexId {
        self.vertex_of[self.twin[d.0].0]
    }

    pub fn edge_of(&self, d: Dart) -> EdgeId {
        self.edge_of[d.0]
    }

    pub fn edge_darts(&self, e: EdgeId) -> [Dart; 2] {
        self.edge_darts[e.0]
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let [a, _] = self.edge_darts[e.0];
        (self.tail(a), self.head(a))
    }

    /// The endpoint of `e` other than `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.endpoints(e);
        a == b
    }

    pub fn rotation(&self, v: VertexId) -> &[Dart] {
        &self.rotations[v.0]
    }

    /// Number of darts at `v`; a loop counts twice.
    pub fn degree(&self, v: VertexId) -> usize {
        self.rotations[v.0].len()
    }

    pub fn faces(&self) -> &[FaceWalk] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &FaceWalk {
        &self.faces[f.0]
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d.0]
    }

    /// Position of `d` within its facial walk.
    pub fn face_position(&self, d: Dart) -> usize {
        self.face_pos[d.0]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.faces[f.0].darts.len()
    }

    /// Vertices of a face in walk order (tails of its darts).
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f.0].darts.iter().map(|&d| self.tail(d)).collect()
    }

    pub fn face_edges(&self, f: FaceId) -> Vec<EdgeId> {
        self.faces[f.0].darts.iter().map(|&d| self.edge_of(d)).collect()
    }

    /// Whether the facial walk of `f` visits every vertex at most once.
    pub fn face_is_cycle(&self, f: FaceId) -> bool {
        let vs = self.face_vertices(f);
        let set: BTreeSet<_> = vs.iter().collect();
        set.len() == vs.len()
    }

    /// Walk of face `f` rotated to begin with dart `start`.
    pub fn walk_from(&self, start: Dart) -> Vec<Dart> {
        let walk = &self.faces[self.face_of(start).0].darts;
        let p = self.face_pos[start.0];
        walk[p..].iter().chain(walk[..p].iter()).copied().collect()
    }

    /// Faces incident to `v`, one entry per corner (so with multiplicity).
    pub fn incident_faces(&self, v: VertexId) -> Vec<FaceId> {
        self.rotations[v.0].iter().map(|&d| self.face_of(d)).collect()
    }

    /// Neighbours of `v` along each dart, with multiplicity.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.rotations[v.0].iter().map(|&d| self.head(d)).collect()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.rotations[u.0].iter().any(|&d| self.head(d) == v)
    }

    /// Edges joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> =
            self.rotations[u.0].iter().filter(|&&d| self.head(d) == v).map(|&d| self.edge_of(d)).collect();
        out.sort();
        out.dedup();
        out
    }

    fn check_edge(&self, e: EdgeId) -> Result<(), EmbedError> {
        if e.0 < self.num_edges() {
            Ok(())
        } else {
            Err(EmbedError::UnknownEdge(e))
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), EmbedError> {
        if v.0 < self.num_vertices() {
            Ok(())
        } else {
            Err(EmbedError::UnknownVertex(v))
        }
    }

    /// Least cyclic step distance between an occurrence of `e` and an
    /// occurrence of `f` on a common facial walk; `None` if no walk contains
    /// both. Consecutive edges are at distance 1.
    pub fn facial_distance(&self, e: EdgeId, f: EdgeId) -> Result<Option<usize>, EmbedError> {
        self.check_edge(e)?;
        self.check_edge(f)?;
        if e == f {
            return Ok(Some(0));
        }
        let mut best: Option<usize> = None;
        for a in self.edge_darts[e.0] {
            for b in self.edge_darts[f.0] {
                if self.face_of(a) != self.face_of(b) {
                    continue;
                }
                let len = self.face_len(self.face_of(a));
                let diff = self.face_pos[a.0].abs_diff(self.face_pos[b.0]);
                let dist = diff.min(len - diff);
                best = Some(best.map_or(dist, |b| b.min(dist)));
            }
        }
        Ok(best)
    }

    /// Edges other than `e` within facial distance `l` of `e`.
    pub fn facial_neighborhood(&self, e: EdgeId, l: usize) -> Result<BTreeSet<EdgeId>, EmbedError> {
        self.check_edge(e)?;
        let mut out = BTreeSet::new();
        for d in self.edge_darts[e.0] {
            let walk = &self.faces[self.face_of(d).0].darts;
            let len = walk.len();
            let p = self.face_pos[d.0];
            for step in 1..=l.min(len) {
                for q in [(p + step) % len, (p + len - step) % len] {
                    let other = self.edge_of(walk[q]);
                    if other != e {
                        out.insert(other);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let n = self.num_vertices();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![VertexId(s)];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &d in &self.rotations[v.0] {
                    let w = self.head(d);
                    if comp[w.0] == usize::MAX {
                        comp[w.0] = id;
                        members.push(w);
                    }
                }
            }
            members.sort();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// `V - E + F` equals 2 for every connected plane graph with an edge.
    pub fn euler_characteristic(&self) -> isize {
        self.num_vertices() as isize - self.num_edges() as isize + self.num_faces() as isize
    }
}
