//! Acceptance suite. Every criterion prints one `PASS` or `FAIL` line; the
//! process exits non-zero if any fails. All checks are exact.

use std::process::ExitCode;
use std::time::Instant;

use lfec_core::discharge::{apply_rules, initial_charges, Charge};
use lfec_core::exact::min_colors;
use lfec_core::facial::{facial_vertex_pairs, is_valid, Coloring};
use lfec_core::generate::{
    cycle, dodecahedron, from_faces, octahedron, prism, random_planar, subdivided_k4, tight_family, wheel,
};
use lfec_core::listcolor::{core, is_l_coloring, l_color, theorem_applies, ListGraph};
use lfec_core::reduce::construct_7_coloring;
use lfec_core::{Color, ColorSet, Dart, EdgeId, FaceId, PlaneGraph, VertexId};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("lower-bound family", lower_bound_family),
        ("seven colors at desk scale", seven_colors_suffice),
        ("constructive engine", constructive_engine),
        ("discharging conservation", discharging_conservation),
        ("4-face spot check", four_face_spot_check),
        ("list coloring theorem", list_coloring_theorem),
        ("core soundness", core_soundness),
        ("oracle equivalences", oracle_equivalences),
        ("medial correspondence", medial_correspondence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Connected random plane multigraphs with at most `max_edges` edges, drawn
/// from consecutive seeds until `count` are found.
fn random_graphs(count: usize, max_edges: usize, sizes: std::ops::RangeInclusive<usize>, salt: u64) -> Vec<PlaneGraph> {
    let mut out = Vec::new();
    let span = (sizes.end() - sizes.start() + 1) as u64;
    let mut seed = salt;
    while out.len() < count {
        let n = sizes.start() + (seed % span) as usize;
        let g = random_planar(n, seed).unwrap();
        if g.num_edges() <= max_edges {
            out.push(g);
        }
        seed += 1;
    }
    out
}

fn families() -> Vec<(String, PlaneGraph)> {
    let mut out = Vec::new();
    for n in 3..=12 {
        out.push((format!("cycle({n})"), cycle(n).unwrap()));
    }
    for n in 3..=10 {
        out.push((format!("wheel({n})"), wheel(n).unwrap()));
        out.push((format!("prism({n})"), prism(n).unwrap()));
    }
    out.push(("dodecahedron".into(), dodecahedron().unwrap()));
    out.push(("octahedron".into(), octahedron().unwrap()));
    for l in 1..=4 {
        out.push((format!("tight_family({l})"), tight_family(l).unwrap()));
        out.push((format!("subdivided_k4({l})"), subdivided_k4(l).unwrap()));
    }
    out
}

/// Named families, random graphs, subdivided duals and medial graphs, all
/// connected with at most 60 edges.
fn corpus() -> Vec<(String, PlaneGraph)> {
    let mut out = families();
    for (i, g) in random_graphs(220, 60, 4..=30, 0).into_iter().enumerate() {
        out.push((format!("random#{i}"), g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    for seed in 0..60u64 {
        let mut g = random_planar(4 + (seed % 18) as usize, 5000 + seed).unwrap().dual().unwrap();
        for _ in 0..rng.gen_range(0..6) {
            let e = EdgeId(rng.gen_range(0..g.num_edges()));
            g = g.subdivide_edge(e).unwrap().0;
        }
        if g.num_edges() <= 60 {
            out.push((format!("dual#{seed}"), g));
        }
        let m = random_planar(4 + (seed % 8) as usize, 7000 + seed).unwrap().medial_graph().unwrap();
        if m.num_edges() <= 60 {
            out.push((format!("medial#{seed}"), m));
        }
    }
    out
}

fn lower_bound_family() -> Verdict {
    let mut parts = Vec::new();
    for l in 1..=2 {
        let g = tight_family(l).map_err(|e| e.to_string())?;
        let report = min_colors(&g, l, 3 * l + 3).map_err(|e| e.to_string())?;
        ensure(report.chi == 3 * l + 1, || format!("l={l}: chi={} expected {}", report.chi, 3 * l + 1))?;
        ensure(is_valid(&g, l, &report.witness), || format!("l={l}: witness fails verification"))?;
        parts.push(format!("l={l} chi={}", report.chi));
    }
    Ok(parts.join(", "))
}

fn seven_colors_suffice() -> Verdict {
    let graphs = random_graphs(500, 16, 3..=10, 1_000_000);
    let mut worst = 0;
    for (i, g) in graphs.iter().enumerate() {
        let report = min_colors(g, 2, 7).map_err(|e| format!("graph #{i} ({} edges): {e}", g.num_edges()))?;
        worst = worst.max(report.chi);
    }
    Ok(format!("{} graphs, largest chi={worst}", graphs.len()))
}

fn constructive_engine() -> Verdict {
    let corpus = corpus();
    let random = corpus.iter().filter(|(n, _)| n.starts_with("random")).count();
    ensure(random >= 200, || format!("only {random} random graphs"))?;
    let (mut steps, mut gaps, mut most) = (0, 0, 0);
    for (name, g) in &corpus {
        let out = construct_7_coloring(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(out.coloring.k <= 7 && is_valid(g, 2, &out.coloring), || format!("{name}: invalid coloring"))?;
        steps += out.steps;
        gaps += out.detect_gaps;
        most = most.max(out.coloring.colors_used());
    }
    ensure(gaps == 0, || format!("{gaps} detect gaps"))?;
    Ok(format!(
        "{} graphs ({random} random), {steps} reductions, 0 failures, 0 gaps, at most {most} colors",
        corpus.len()
    ))
}

fn discharging_conservation() -> Verdict {
    let corpus = corpus();
    let minus_28 = Charge::from(-28);
    let mut transfers = 0;
    for (name, g) in &corpus {
        let initial = initial_charges(g);
        let (fin, log) = apply_rules(g);
        ensure(initial.total() == minus_28, || format!("{name}: initial total {}", initial.total()))?;
        ensure(fin.total() == minus_28, || format!("{name}: final total {}", fin.total()))?;
        ensure(log.replay(&initial) == fin, || format!("{name}: replay differs"))?;
        transfers += log.transfers.len();
    }
    Ok(format!("{} graphs, {transfers} transfers, totals -28 before and after, replay exact", corpus.len()))
}

fn four_face_spot_check() -> Verdict {
    // 4-face 0123 with one 3-vertex (0) between two 7-faces; 1, 2, 3 have
    // degree 4 and the faces across 12 and 23 are triangles
    let faces = [
        vec![0, 1, 2, 3],
        vec![2, 1, 5],
        vec![3, 2, 6],
        vec![2, 5, 6],
        vec![1, 7, 5],
        vec![1, 0, 4, 8, 9, 10, 7],
        vec![0, 3, 11, 12, 13, 14, 4],
        vec![3, 6, 11],
        vec![6, 5, 7, 10, 9, 8, 4, 14, 13, 12, 11],
    ];
    let g = from_faces(15, &faces).map_err(|e| e.to_string())?;
    let alpha = (0..g.num_faces()).map(FaceId).find(|&f| g.face_len(f) == 4).ok_or("patch has no 4-face")?;
    let degrees: Vec<usize> = g.face_vertices(alpha).iter().map(|&v| g.degree(v)).collect();
    ensure(degrees.iter().filter(|&&d| d == 3).count() == 1, || format!("degrees {degrees:?}"))?;
    let (fin, _) = apply_rules(&g);
    let ch = fin.face_charge[alpha.0];
    ensure(ch == Charge::from(1), || format!("final charge {ch}"))?;
    Ok(format!("final charge {ch}"))
}

fn random_list_graph(rng: &mut ChaCha8Rng, max_n: usize, palette: Color, hypotheses: bool) -> ListGraph {
    let n = rng.gen_range(1..=max_n);
    let p = rng.gen_range(0.2..0.9);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    let mut degree = vec![0; n];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let lists = (0..n)
        .map(|v| {
            let size = if hypotheses {
                degree[v] + usize::from(rng.gen_bool(0.15))
            } else {
                rng.gen_range(1..=palette as usize)
            };
            let top = (palette as usize).max(size);
            let mut colors: Vec<Color> = (1..=top as Color).collect();
            colors.shuffle(rng);
            colors[..size].iter().copied().collect::<ColorSet>()
        })
        .collect();
    ListGraph::from_edges(n, &edges, lists).unwrap()
}

/// Plain depth-first enumeration in vertex order.
fn brute_colorable(g: &ListGraph) -> bool {
    fn go(g: &ListGraph, v: usize, colors: &mut Vec<Color>) -> bool {
        if v == g.len() {
            return true;
        }
        for c in g.lists[v].iter() {
            if g.adj[v].iter().all(|&w| w >= v || colors[w] != c) {
                colors.push(c);
                if go(g, v + 1, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    go(g, 0, &mut Vec::new())
}

fn list_coloring_theorem() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x714);
    let (mut found, mut tight, mut compared) = (0, 0, 0);
    while found < 10_000 {
        let g = random_list_graph(&mut rng, 10, 6, true);
        if !theorem_applies(&g) {
            continue;
        }
        found += 1;
        tight += usize::from((0..g.len()).all(|v| g.lists[v].len() == g.degree(v)));
        let colors = l_color(&g).ok_or_else(|| format!("no coloring for {g:?}"))?;
        ensure(independent_l_coloring(&g, &colors), || format!("bad coloring for {g:?}"))?;
        if g.len() <= 8 {
            compared += 1;
            ensure(brute_colorable(&g), || format!("brute force disagrees on {g:?}"))?;
        }
    }
    let (mut yes, mut no) = (0, 0);
    for _ in 0..5_000 {
        let g = random_list_graph(&mut rng, 8, 4, false);
        let ours = l_color(&g);
        ensure(ours.is_some() == brute_colorable(&g), || format!("verdict differs on {g:?}"))?;
        if let Some(colors) = ours {
            ensure(independent_l_coloring(&g, &colors), || format!("bad coloring for {g:?}"))?;
            yes += 1;
        } else {
            no += 1;
        }
        compared += 1;
    }
    ensure(yes > 0 && no > 0, || "unrestricted instances are one-sided".into())?;
    Ok(format!(
        "{found} hypothesis instances ({tight} with |L(v)|=d(v) everywhere) all colored; {compared} verdicts match brute force ({yes} colorable, {no} not)"
    ))
}

fn independent_l_coloring(g: &ListGraph, colors: &[Color]) -> bool {
    colors.len() == g.len()
        && (0..g.len()).all(|v| g.lists[v].contains(colors[v]))
        && (0..g.len()).all(|v| g.adj[v].iter().all(|&w| colors[v] != colors[w]))
        && is_l_coloring(g, colors)
}

fn core_soundness() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0e);
    let (mut shrunk, mut yes) = (0, 0);
    for i in 0..1_000 {
        let g = random_list_graph(&mut rng, 8, 4, i % 2 == 0);
        let c = core(&g);
        let full = brute_colorable(&g);
        ensure(full == brute_colorable(&c.graph), || format!("core changes colorability of {g:?}"))?;
        shrunk += usize::from(c.graph.len() < g.len());
        yes += usize::from(full);
    }
    Ok(format!("1000 instances, {shrunk} with a proper core, {yes} colorable"))
}

/// Facial walks traced directly from rotations: the successor of dart `d`
/// leaves the head of `d` right after its twin.
fn walks(g: &PlaneGraph) -> Vec<Vec<EdgeId>> {
    let darts = 2 * g.num_edges();
    let mut at = vec![(VertexId(0), 0); darts];
    for v in g.vertices() {
        for (i, d) in g.rotation(v).iter().enumerate() {
            at[d.0] = (v, i);
        }
    }
    let twin = |d: Dart| {
        let [a, b] = g.edge_darts(g.edge_of(d));
        if a == d {
            b
        } else {
            a
        }
    };
    let next = |d: Dart| {
        let t = twin(d);
        let (v, i) = at[t.0];
        let rot = g.rotation(v);
        rot[(i + 1) % rot.len()]
    };
    let mut seen = vec![false; darts];
    let mut out = Vec::new();
    for start in 0..darts {
        let mut d = Dart(start);
        let mut walk = Vec::new();
        while !seen[d.0] {
            seen[d.0] = true;
            walk.push(g.edge_of(d));
            d = next(d);
        }
        if !walk.is_empty() {
            out.push(walk);
        }
    }
    out
}

fn brute_distance(walks: &[Vec<EdgeId>], e: EdgeId, f: EdgeId) -> Option<usize> {
    let mut best = None;
    for w in walks {
        let len = w.len();
        for i in (0..len).filter(|&i| w[i] == e) {
            for j in (0..len).filter(|&j| w[j] == f) {
                let d = i.abs_diff(j).min(len - i.abs_diff(j));
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
        }
    }
    best
}

/// Least `k` with an assignment respecting every conflicting pair, found by
/// trying colors edge by edge in id order.
fn naive_min_colors(m: usize, conflicts: &[Vec<usize>]) -> usize {
    fn fits(m: usize, conflicts: &[Vec<usize>], k: Color, colors: &mut Vec<Color>) -> bool {
        let e = colors.len();
        if e == m {
            return true;
        }
        for c in 1..=k {
            if conflicts[e].iter().all(|&f| f >= e || colors[f] != c) {
                colors.push(c);
                if fits(m, conflicts, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (0..).find(|&k| fits(m, conflicts, k as Color, &mut Vec::new())).unwrap()
}

fn small_corpus(max_edges: usize) -> Vec<(String, PlaneGraph)> {
    let mut out: Vec<(String, PlaneGraph)> =
        families().into_iter().filter(|(_, g)| g.num_edges() <= max_edges).collect();
    for (i, g) in random_graphs(150, max_edges, 3..=8, 2_000_000).into_iter().enumerate() {
        out.push((format!("random#{i}"), g));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a11);
    for seed in 0..120u64 {
        let mut g = random_planar(3 + (seed % 5) as usize, 3_000_000 + seed).unwrap();
        if seed % 2 == 0 {
            g = g.dual().unwrap();
        }
        for _ in 0..rng.gen_range(0..3) {
            let e = EdgeId(rng.gen_range(0..g.num_edges()));
            g = g.subdivide_edge(e).unwrap().0;
        }
        if g.num_edges() <= max_edges {
            out.push((format!("mixed#{seed}"), g));
        }
    }
    out
}

fn oracle_equivalences() -> Verdict {
    let corpus = small_corpus(8);
    let (mut pairs, mut solves) = (0, 0);
    for (name, g) in &corpus {
        let w = walks(g);
        for e in g.edges() {
            for f in g.edges() {
                let ours = g.facial_distance(e, f).map_err(|x| x.to_string())?;
                ensure(ours == brute_distance(&w, e, f), || format!("{name}: distance {e} {f}"))?;
                pairs += 1;
            }
        }
        for l in 1..=3 {
            let m = g.num_edges();
            let conflicts: Vec<Vec<usize>> = (0..m)
                .map(|e| {
                    (0..m)
                        .filter(|&f| f != e && brute_distance(&w, EdgeId(e), EdgeId(f)).is_some_and(|d| d <= l))
                        .collect()
                })
                .collect();
            let chi = min_colors(g, l, 20).map_err(|x| format!("{name}: {x}"))?.chi;
            let naive = naive_min_colors(m, &conflicts);
            ensure(chi == naive, || format!("{name} l={l}: chi={chi} naive={naive}"))?;
            solves += 1;
        }
    }
    Ok(format!("{} graphs, {pairs} distances and {solves} indices agree", corpus.len()))
}

fn vertex_coloring_valid(pairs: &[(VertexId, VertexId)], phi: &Coloring) -> bool {
    pairs.iter().all(|&(a, b)| phi.colors[a.0] != phi.colors[b.0])
}

fn medial_correspondence() -> Verdict {
    let corpus = small_corpus(12);
    let mut rng = ChaCha8Rng::seed_from_u64(0x3ed);
    let (mut valid, mut invalid, mut one_way) = (0, 0, 0);
    for (name, g) in &corpus {
        let medial = g.medial_graph().map_err(|e| format!("{name}: {e}"))?;
        let m = g.num_edges();
        let base = min_colors(g, 1, 20).map_err(|e| e.to_string())?;
        for s in 0..100 {
            let phi = if s % 2 == 0 {
                let k = rng.gen_range(2..=base.chi.max(2) + 2) as Color;
                Coloring::total(k as usize, &(0..m).map(|_| rng.gen_range(1..=k)).collect::<Vec<_>>())
            } else {
                let mut phi = base.witness.clone();
                if s % 4 == 1 {
                    let e = EdgeId(rng.gen_range(0..m));
                    phi.set(e, rng.gen_range(1..=phi.k as Color));
                }
                phi
            };
            let edge_ok = is_valid(g, 1, &phi);
            let vertex_ok = vertex_coloring_valid(&facial_vertex_pairs(&medial, 1), &phi);
            ensure(edge_ok == vertex_ok, || format!("{name}: l=1 disagree on {:?}", phi.colors))?;
            if edge_ok {
                valid += 1;
            } else {
                invalid += 1;
            }
            for l in 2..=3 {
                if vertex_coloring_valid(&facial_vertex_pairs(&medial, l), &phi) {
                    ensure(is_valid(g, l, &phi), || format!("{name}: l={l} medial-valid but not facial"))?;
                    one_way += 1;
                }
            }
        }
    }
    ensure(valid > 0 && invalid > 0, || "samples are one-sided".into())?;
    Ok(format!(
        "{} graphs x 100 colorings: l=1 equivalence on {valid} valid and {invalid} invalid samples; l=2,3 medial-valid implies facial-valid ({one_way} cases)",
        corpus.len()
    ))
}
