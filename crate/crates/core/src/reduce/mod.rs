//! Reducible configurations for 2-facial edge coloring with seven colors:
//! detection, graph surgery, extension of colorings back to the original
//! graph, and the recursive coloring engine built from them.

mod apply;
mod construct;
mod detect;
mod extend;

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::color::ColorSet;
use crate::embed::{Dart, EdgeId, EmbedError, FaceId, PlaneGraph, SurgeryMap, VertexId};

use crate::facial::Coloring;

pub use apply::apply;
pub use construct::{construct_7_coloring, construct_with, ConstructOptions, Construction, TraceLine};
pub use detect::{detect, detect_all, witness_holds};
pub use extend::{extend, Extension, Shortfall};

/// Facial distance at which edges conflict.
pub const L: usize = 2;
/// Palette size the engine colors with.
pub const K: usize = 7;

/// The four situations of a 2-vertex on a short face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SmallFaceCase {
    /// The face has length 4.
    Four,
    /// Length 5 and the other face at the 2-vertex also has length 5.
    FiveBesideFive,
    /// Length 5 and the other face at the 2-vertex has length at least 7.
    FiveBesideLong,
    /// The face has length 7.
    Seven,
}

impl SmallFaceCase {
    pub fn face_length(self) -> usize {
        match self {
            SmallFaceCase::Four => 4,
            SmallFaceCase::FiveBesideFive | SmallFaceCase::FiveBesideLong => 5,
            SmallFaceCase::Seven => 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Cutvertex,
    DegreeLE1,
    AdjacentTwoVertices,
    FaceLE3,
    SeparatingCycleLE5,
    SixFace,
    SmallFaceWithTwoVertex(SmallFaceCase),
    /// Two 2-vertices at facial distance 2 or 3.
    TwoVerticesClose(u8),
    EightFaceTwoTwoVertices,
    AdjacentFourFaces,
    FourFiveLowDegree,
    FiveFiveLowDegree,
    FourFaceAllThrees,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Cutvertex => f.write_str("Cutvertex"),
            Kind::DegreeLE1 => f.write_str("DegreeLE1"),
            Kind::AdjacentTwoVertices => f.write_str("AdjacentTwoVertices"),
            Kind::FaceLE3 => f.write_str("FaceLE3"),
            Kind::SeparatingCycleLE5 => f.write_str("SeparatingCycleLE5"),
            Kind::SixFace => f.write_str("SixFace"),
            Kind::SmallFaceWithTwoVertex(c) => write!(f, "SmallFaceWithTwoVertex({})", c.face_length()),
            Kind::TwoVerticesClose(d) => write!(f, "TwoVerticesClose({d})"),
            Kind::EightFaceTwoTwoVertices => f.write_str("EightFaceTwoTwoVertices"),
            Kind::AdjacentFourFaces => f.write_str("AdjacentFourFaces"),
            Kind::FourFiveLowDegree => f.write_str("FourFiveLowDegree"),
            Kind::FiveFiveLowDegree => f.write_str("FiveFiveLowDegree"),
            Kind::FourFaceAllThrees => f.write_str("FourFaceAllThrees"),
        }
    }
}

/// The elements a configuration is located by. `darts` fixes the local
/// labelling; its meaning depends on the kind.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
    pub faces: Vec<FaceId>,
    pub darts: Vec<Dart>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut item = |f: &mut fmt::Formatter<'_>, s: &dyn fmt::Display| -> fmt::Result {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{s}")
        };
        for v in &self.vertices {
            item(f, v)?;
        }
        for e in &self.edges {
            item(f, e)?;
        }
        for x in &self.faces {
            item(f, x)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub kind: Kind,
    pub witness: Witness,
}

/// One graph the reduction hands to the recursion, with the map from the
/// original graph's ids. `forced` asks the recursion to reduce this part by
/// the given configuration instead of running detection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPart {
    pub graph: PlaneGraph,
    pub map: SurgeryMap,
    pub forced: Option<Configuration>,
}

/// A configuration's surgery: the smaller graphs to color and the edges of
/// the original graph whose color is chosen afresh during extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub config: Configuration,
    pub parts: Vec<ReducedPart>,
    pub to_color: Vec<EdgeId>,
    /// Least list size the configuration's argument promises for each edge
    /// of `to_color` (0 where it promises nothing).
    pub min_lists: Vec<usize>,
}

/// The residual instance an extension could not finish.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionFailure {
    pub config: Configuration,
    pub graph: PlaneGraph,
    pub partial: Coloring,
    pub residual: Vec<EdgeId>,
    pub lists: Vec<ColorSet>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("{kind} precondition failed: {reason}")]
    SideCondition { kind: Kind, reason: &'static str },
    #[error("extension failed for {}: {}", .0.config.kind, .0.reason)]
    ExtensionFailed(Box<ExtensionFailure>),
    #[error("no 7-coloring found for a base graph with {edges} edges")]
    BaseCaseFailed { edges: usize },
    #[error("exact fallback gave no answer within its node budget on {edges} edges")]
    FallbackExhausted { edges: usize },
    #[error("coloring count {found} does not match the {expected} reduced parts")]
    PartCount { expected: usize, found: usize },
    #[error(transparent)]
    Embed(#[from] EmbedError),
}
