//! Lifting colorings of reduced graphs back to the original graph.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ExtensionFailure, Kind, ReduceError, ReductionStep, K, L};
use crate::color::{Color, ColorSet};
use crate::embed::{EdgeId, PlaneGraph};
use crate::facial::{available_colors, facial_pairs, is_valid, lists_from_partial, Coloring};
use crate::listcolor::{l_color, ListGraph};

/// A residual edge that started with fewer available colors than the
/// configuration's argument counts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shortfall {
    pub kind: Kind,
    pub edge: EdgeId,
    pub expected: usize,
    pub found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub coloring: Coloring,
    pub shortfalls: Vec<Shortfall>,
}

/// Extends colorings of the reduced parts (one per part, in order) to a
/// 2-facial 7-coloring of `g`.
pub fn extend(g: &PlaneGraph, step: &ReductionStep, colorings: &[Coloring]) -> Result<Extension, ReduceError> {
    if colorings.len() != step.parts.len() {
        return Err(ReduceError::PartCount { expected: step.parts.len(), found: colorings.len() });
    }
    let fail = |partial: &Coloring, residual: &[EdgeId], reason: String| {
        let lists = residual.iter().map(|&e| available_colors(g, L, partial, e).unwrap_or(ColorSet::EMPTY)).collect();
        ReduceError::ExtensionFailed(Box::new(ExtensionFailure {
            config: step.config.clone(),
            graph: g.clone(),
            partial: partial.clone(),
            residual: residual.to_vec(),
            lists,
            reason,
        }))
    };
    let residual = step.to_color.clone();
    let partial = match step.config.kind {
        Kind::Cutvertex => glue_by_permutation(g, step, colorings),
        Kind::SeparatingCycleLE5 => glue_along_cycle(g, step, colorings),
        _ => transport(g, step, &colorings[0]),
    }
    .map_err(|reason| fail(&Coloring::empty(K, g.num_edges()), &residual, reason))?;

    for ((e, f), _) in facial_pairs(g, L) {
        if let (Some(a), Some(b)) = (partial.get(e), partial.get(f)) {
            if a == b {
                return Err(fail(&partial, &residual, format!("colored edges {e} and {f} share color {a}")));
            }
        }
    }

    let mut shortfalls = Vec::new();
    for (&e, &expected) in step.to_color.iter().zip(&step.min_lists) {
        let found = available_colors(g, L, &partial, e).map(ColorSet::len).unwrap_or(0);
        if found < expected {
            shortfalls.push(Shortfall { kind: step.config.kind, edge: e, expected, found });
        }
    }

    let mut attempts: Vec<Option<Coloring>> = Vec::new();
    if step.config.kind == Kind::TwoVerticesClose(3) {
        attempts.push(borrow_middle_color(g, step, &partial));
    }
    attempts.push(solve_residual(g, &partial, &residual));
    let done = attempts.into_iter().flatten().next().or_else(|| {
        if step.config.kind == Kind::TwoVerticesClose(3) {
            let wz = step.config.witness.edges[2];
            let mut p = partial.clone();
            p.unset(wz);
            let mut wider = residual.clone();
            wider.push(wz);
            solve_residual(g, &p, &wider)
        } else {
            None
        }
    });
    let coloring =
        done.ok_or_else(|| fail(&partial, &residual, String::from("residual list coloring has no solution")))?;
    if !is_valid(g, L, &coloring) {
        return Err(fail(&partial, &residual, String::from("extended coloring is not a 2-facial coloring")));
    }
    Ok(Extension { coloring, shortfalls })
}

/// Colors the uncolored edges `residual` from their available lists.
fn solve_residual(g: &PlaneGraph, partial: &Coloring, residual: &[EdgeId]) -> Option<Coloring> {
    let (medial, lists) = lists_from_partial(g, L, partial, residual).ok()?;
    let colors = l_color(&ListGraph::from_medial(&medial, &lists))?;
    let mut out = partial.clone();
    for (&e, &c) in medial.vertices.iter().zip(&colors) {
        out.set(e, c);
    }
    Some(out)
}

/// Two 2-vertices at facial distance 3 on `x u w z v y`: uncolor `wz`, give
/// its color to `ux` and `vz`, then color `uw`, `vy` and `wz`.
fn borrow_middle_color(g: &PlaneGraph, step: &ReductionStep, partial: &Coloring) -> Option<Coloring> {
    let es = &step.config.witness.edges;
    let (ux, uw, wz, vz, vy) = (es[0], es[1], es[2], es[3], es[4]);
    let c = partial.get(wz)?;
    let mut p = partial.clone();
    p.unset(wz);
    for e in [ux, vz] {
        if !available_colors(g, L, &p, e).ok()?.contains(c) {
            return None;
        }
        p.set(e, c);
    }
    solve_residual(g, &p, &[uw, vy, wz])
}

fn transport(g: &PlaneGraph, step: &ReductionStep, phi: &Coloring) -> Result<Coloring, String> {
    let map = &step.parts[0].map;
    let mut out = Coloring::empty(K, g.num_edges());
    for e in g.edges() {
        if step.to_color.contains(&e) {
            continue;
        }
        let e2 = map.edge(e).ok_or_else(|| format!("edge {e} has no image and is not residual"))?;
        let c = phi.get(e2).ok_or_else(|| format!("image of edge {e} is uncolored"))?;
        out.set(e, c);
    }
    Ok(out)
}

/// Colors of both parts read on `g`; `None` where a part does not own the
/// edge.
fn lift(g: &PlaneGraph, step: &ReductionStep, colorings: &[Coloring], i: usize) -> Vec<Option<Color>> {
    let map = &step.parts[i].map;
    g.edges().map(|e| map.edge(e).and_then(|e2| colorings[i].get(e2))).collect()
}

fn glue_by_permutation(g: &PlaneGraph, step: &ReductionStep, colorings: &[Coloring]) -> Result<Coloring, String> {
    let first = lift(g, step, colorings, 0);
    let second = lift(g, step, colorings, 1);
    // colors of the second part that sit next to the first part, with the
    // first-part colors they must avoid
    let mut forbidden = [ColorSet::EMPTY; 64];
    let mut touching = ColorSet::EMPTY;
    for ((e, f), _) in facial_pairs(g, L) {
        for (a, b) in [(e, f), (f, e)] {
            if let (Some(c1), None, Some(c2)) = (first[a.0], first[b.0], second[b.0]) {
                forbidden[c2 as usize].insert(c1);
                touching.insert(c2);
            }
        }
    }
    let domain: Vec<Color> = touching.iter().collect();
    let mut perm = [0 as Color; 64];
    let mut used = ColorSet::EMPTY;
    if !assign(&domain, 0, &forbidden, &mut perm, &mut used) {
        return Err(String::from("no color permutation of the second part avoids the first"));
    }
    let rest: Vec<Color> = ColorSet::palette(K).difference(used).iter().collect();
    let mut rest = rest.into_iter();
    for c in ColorSet::palette(K).difference(touching).iter() {
        perm[c as usize] = rest.next().expect("bijection");
    }
    let mut out = Coloring::empty(K, g.num_edges());
    for e in g.edges() {
        match (first[e.0], second[e.0]) {
            (Some(c), _) => out.set(e, c),
            (None, Some(c)) => out.set(e, perm[c as usize]),
            (None, None) => return Err(format!("edge {e} belongs to neither part")),
        }
    }
    Ok(out)
}

/// Injective choice of images for `domain`, trying the identity first.
fn assign(domain: &[Color], i: usize, forbidden: &[ColorSet; 64], perm: &mut [Color; 64], used: &mut ColorSet) -> bool {
    let Some(&a) = domain.get(i) else {
        return true;
    };
    let allowed = ColorSet::palette(K).difference(*used).difference(forbidden[a as usize]);
    let order = core::iter::once(a).filter(|&c| allowed.contains(c)).chain(allowed.iter().filter(|&c| c != a));
    for c in order {
        perm[a as usize] = c;
        used.insert(c);
        if assign(domain, i + 1, forbidden, perm, used) {
            return true;
        }
        used.remove(c);
    }
    false
}

fn glue_along_cycle(g: &PlaneGraph, step: &ReductionStep, colorings: &[Coloring]) -> Result<Coloring, String> {
    let first = lift(g, step, colorings, 0);
    let second = lift(g, step, colorings, 1);
    let mut perm = [0 as Color; 64];
    let mut used = ColorSet::EMPTY;
    let mut moved = ColorSet::EMPTY;
    for &e in &step.config.witness.edges {
        let (Some(to), Some(from)) = (first[e.0], second[e.0]) else {
            return Err(format!("cycle edge {e} is uncolored in a part"));
        };
        if moved.contains(from) || used.contains(to) {
            if perm[from as usize] != to {
                return Err(String::from("cycle colors cannot be aligned"));
            }
            continue;
        }
        perm[from as usize] = to;
        moved.insert(from);
        used.insert(to);
    }
    let mut rest = ColorSet::palette(K).difference(used).iter();
    for c in ColorSet::palette(K).difference(moved).iter() {
        perm[c as usize] = rest.next().expect("bijection");
    }
    let mut out = Coloring::empty(K, g.num_edges());
    for e in g.edges() {
        match (first[e.0], second[e.0]) {
            (Some(c), _) => out.set(e, c),
            (None, Some(c)) => out.set(e, perm[c as usize]),
            (None, None) => return Err(format!("edge {e} belongs to neither part")),
        }
    }
    Ok(out)
}
