//! Charges on vertices and faces and their redistribution by the rules
//! R1–R4, in exact rational arithmetic.
//!
//! Initial charges are `5d(v) - 14` on vertices and `2l(α) - 14` on faces;
//! for a connected plane multigraph they sum to −28. Every rule reads the
//! initial charges only, so the rules fire simultaneously. Incidences are
//! counted per corner, which matters only when a vertex meets a face more
//! than once.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::embed::{Dart, FaceId, PlaneGraph, VertexId};
use crate::reduce::{detect, Configuration};

/// Exact charge.
pub type Charge = Ratio<i64>;

/// A vertex or a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(VertexId),
    Face(FaceId),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Vertex(v) => write!(f, "{v}"),
            Element::Face(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    R1,
    R2,
    R3i,
    R3ii,
    R3iii,
    R4,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3i => "R3i",
            Rule::R3ii => "R3ii",
            Rule::R3iii => "R3iii",
            Rule::R4 => "R4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeMap {
    pub vertex_charge: Vec<Charge>,
    pub face_charge: Vec<Charge>,
}

impl ChargeMap {
    pub fn get(&self, x: Element) -> Charge {
        match x {
            Element::Vertex(v) => self.vertex_charge[v.0],
            Element::Face(f) => self.face_charge[f.0],
        }
    }

    fn add(&mut self, x: Element, amount: Charge) {
        match x {
            Element::Vertex(v) => self.vertex_charge[v.0] += amount,
            Element::Face(f) => self.face_charge[f.0] += amount,
        }
    }

    pub fn total(&self) -> Charge {
        self.vertex_charge.iter().chain(&self.face_charge).fold(Charge::zero(), |a, &b| a + b)
    }

    /// Elements with negative charge, vertices first.
    pub fn negative(&self) -> Vec<(Element, Charge)> {
        let vs = self.vertex_charge.iter().enumerate().map(|(i, &c)| (Element::Vertex(VertexId(i)), c));
        let fs = self.face_charge.iter().enumerate().map(|(i, &c)| (Element::Face(FaceId(i)), c));
        vs.chain(fs).filter(|(_, c)| c.is_negative()).collect()
    }
}

/// One movement of charge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transfer {
    pub from: Element,
    pub to: Element,
    pub rule: Rule,
    pub amount: Charge,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TransferLog {
    pub transfers: Vec<Transfer>,
}

impl TransferLog {
    /// Applies every transfer to a copy of `initial`.
    pub fn replay(&self, initial: &ChargeMap) -> ChargeMap {
        let mut out = initial.clone();
        for t in &self.transfers {
            out.add(t.from, -t.amount);
            out.add(t.to, t.amount);
        }
        out
    }
}

pub fn initial_charges(g: &PlaneGraph) -> ChargeMap {
    ChargeMap {
        vertex_charge: g.vertices().map(|v| Charge::from(5 * g.degree(v) as i64 - 14)).collect(),
        face_charge: (0..g.num_faces()).map(|f| Charge::from(2 * g.face_len(FaceId(f)) as i64 - 14)).collect(),
    }
}

/// Final charges after R1–R4 and the transfers that produced them.
pub fn apply_rules(g: &PlaneGraph) -> (ChargeMap, TransferLog) {
    let initial = initial_charges(g);
    let mut log = TransferLog::default();
    let len = |d: Dart| g.face_len(g.face_of(d));
    let mut send = |from: Element, to: Element, rule: Rule, amount: Charge| {
        log.transfers.push(Transfer { from, to, rule, amount });
    };

    for v in g.vertices() {
        let rot = g.rotation(v);
        let deg = rot.len();
        let ch = initial.vertex_charge[v.0];
        let from = Element::Vertex(v);
        // one corner per outgoing dart: the corner of face(d) just before d
        if deg >= 4 {
            let share = ch / Charge::from(deg as i64);
            for (i, &d) in rot.iter().enumerate() {
                if len(d) > 5 {
                    continue;
                }
                let to = Element::Face(g.face_of(d));
                send(from, to, Rule::R1, share);
                let before = rot[(i + deg - 1) % deg];
                // the corner's two edges, seen from their other sides
                for other in [g.twin(d), before] {
                    if len(other) >= 7 {
                        send(from, to, Rule::R2, share / 2);
                    }
                }
            }
        } else if deg == 3 {
            let long = rot.iter().filter(|&&d| len(d) >= 7).count();
            for &d in rot {
                let to = Element::Face(g.face_of(d));
                match (long, len(d)) {
                    (2, l) if l <= 5 => send(from, to, Rule::R3i, Charge::from(1)),
                    (1, 5) => send(from, to, Rule::R3ii, Charge::new(1, 2)),
                    (0, 5) if rot.iter().all(|&x| len(x) == 5) => send(from, to, Rule::R3iii, Charge::new(1, 3)),
                    _ => {}
                }
            }
        }
    }

    for w in g.faces() {
        if w.len() < 8 {
            continue;
        }
        let corners: Vec<VertexId> = w.darts.iter().map(|&d| g.tail(d)).filter(|&v| g.degree(v) == 2).collect();
        if corners.is_empty() {
            continue;
        }
        let share = initial.face_charge[w.face.0] / Charge::from(corners.len() as i64);
        for v in corners {
            send(Element::Face(w.face), Element::Vertex(v), Rule::R4, share);
        }
    }

    let fin = log.replay(&initial);
    (fin, log)
}

/// The outcome of running the rules on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub initial_total: Charge,
    pub final_total: Charge,
    /// Elements whose final charge is negative.
    pub negative: Vec<(Element, Charge)>,
    /// The configuration `detect` reports, whose presence is what allows
    /// negative charge.
    pub detected: Option<Configuration>,
    /// R4 transfers below 2.
    pub small_r4: Vec<Transfer>,
}

impl Audit {
    /// Negative charge with no configuration to account for it.
    pub fn is_unexplained(&self) -> bool {
        !self.negative.is_empty() && self.detected.is_none()
    }
}

pub fn audit(g: &PlaneGraph) -> Audit {
    let initial = initial_charges(g);
    let (fin, log) = apply_rules(g);
    let two = Charge::from(2);
    Audit {
        initial_total: initial.total(),
        final_total: fin.total(),
        negative: fin.negative(),
        detected: detect(g),
        small_r4: log.transfers.iter().filter(|t| t.rule == Rule::R4 && t.amount < two).copied().collect(),
    }
}

#[cfg(test)]
mod tests;
