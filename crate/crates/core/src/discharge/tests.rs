use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::generate::{cycle, dodecahedron, from_faces, prism, random_planar, wheel};
use crate::reduce::Kind;

fn c(p: i64, q: i64) -> Charge {
    Charge::new(p, q)
}

/// A 4-face `(0,1,2,3)` whose only 3-vertex is 0; the other two faces at 0
/// are 7-faces, vertices 1, 2 and 3 have degree 4, and the faces across
/// the edges 12 and 23 are triangles.
fn four_face_one_three() -> PlaneGraph {
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
    from_faces(15, &faces).unwrap()
}

#[test]
fn initial_charge_examples() {
    let c5 = cycle(5).unwrap();
    let ch = initial_charges(&c5);
    assert!(ch.vertex_charge.iter().all(|&x| x == Charge::from(-4)));
    assert_eq!(ch.face_charge, vec![Charge::from(-4); 2]);
    assert_eq!(ch.total(), Charge::from(-28));

    let cube = prism(4).unwrap();
    let ch = initial_charges(&cube);
    assert!(ch.vertex_charge.iter().all(|&x| x == Charge::from(1)));
    assert!(ch.face_charge.iter().all(|&x| x == Charge::from(-6)));
    assert_eq!(ch.total(), Charge::from(-28));

    let patch = four_face_one_three();
    let ch = initial_charges(&patch);
    let sevens: Vec<Charge> =
        (0..patch.num_faces()).filter(|&f| patch.face_len(FaceId(f)) == 7).map(|f| ch.face_charge[f]).collect();
    assert_eq!(sevens, vec![Charge::zero(); 2]);
}

#[test]
fn wheel_hub_sends_its_share() {
    let g = wheel(5).unwrap();
    let hub = VertexId(5);
    let (_, log) = apply_rules(&g);
    let from_hub: Vec<&Transfer> = log.transfers.iter().filter(|t| t.from == Element::Vertex(hub)).collect();
    assert_eq!(from_hub.len(), 5);
    assert!(from_hub.iter().all(|t| t.rule == Rule::R1 && t.amount == c(11, 5)));
}

#[test]
fn four_face_with_one_three_vertex() {
    let g = four_face_one_three();
    let alpha = FaceId(0);
    assert_eq!(g.face_vertices(alpha), vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
    let (fin, log) = apply_rules(&g);
    assert_eq!(fin.face_charge[alpha.0], Charge::from(1));

    let into_alpha = |rule: Rule| -> Vec<(Element, Charge)> {
        log.transfers
            .iter()
            .filter(|t| t.to == Element::Face(alpha) && t.rule == rule)
            .map(|t| (t.from, t.amount))
            .collect()
    };
    assert_eq!(into_alpha(Rule::R3i), vec![(Element::Vertex(VertexId(0)), Charge::from(1))]);
    assert_eq!(into_alpha(Rule::R1).len(), 3);
    assert!(into_alpha(Rule::R1).iter().all(|&(_, a)| a == c(3, 2)));
    let mut r2: Vec<Element> = into_alpha(Rule::R2)
        .iter()
        .map(|&(x, a)| {
            assert_eq!(a, c(3, 4));
            x
        })
        .collect();
    r2.sort();
    assert_eq!(r2, vec![Element::Vertex(VertexId(1)), Element::Vertex(VertexId(3))]);
}

#[test]
fn dodecahedron_thirds() {
    let g = dodecahedron().unwrap();
    let (fin, log) = apply_rules(&g);
    assert_eq!(log.transfers.len(), 60);
    assert!(log.transfers.iter().all(|t| t.rule == Rule::R3iii && t.amount == c(1, 3)));
    assert!(fin.face_charge.iter().all(|&x| x == c(-7, 3)));
    assert!(fin.vertex_charge.iter().all(|x| x.is_zero()));
    assert_eq!(fin.total(), Charge::from(-28));

    let a = audit(&g);
    assert_eq!(a.negative.len(), 12);
    assert!(!a.is_unexplained());
    assert_eq!(a.detected.map(|c| c.kind), Some(Kind::FiveFiveLowDegree));
}

#[test]
fn cycle_audit() {
    let a = audit(&cycle(5).unwrap());
    assert_eq!((a.initial_total, a.final_total), (Charge::from(-28), Charge::from(-28)));
    assert_eq!(a.negative.len(), 7);
    assert!(a.negative[..5].iter().all(|&(x, ch)| matches!(x, Element::Vertex(_)) && ch == Charge::from(-4)));
    assert_eq!(a.detected.map(|c| c.kind), Some(Kind::AdjacentTwoVertices));
}

#[test]
fn long_face_feeds_its_two_vertices() {
    // C8 has two 8-faces of charge 2, each split among eight 2-vertices
    let g = cycle(8).unwrap();
    let (fin, log) = apply_rules(&g);
    assert_eq!(log.transfers.len(), 16);
    assert!(log.transfers.iter().all(|t| t.rule == Rule::R4 && t.amount == c(1, 4)));
    assert!(fin.vertex_charge.iter().all(|&x| x == c(-7, 2)));
    assert_eq!(audit(&g).small_r4.len(), 16);
}

#[test]
fn display() {
    assert_eq!(alloc::format!("{} {}", Element::Vertex(VertexId(2)), Element::Face(FaceId(7))), "v2 f7");
    assert_eq!(alloc::format!("{}", Rule::R3iii), "R3iii");
    assert_eq!(alloc::format!("{}", c(-7, 3)), "-7/3");
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn charge_is_conserved(n in 3usize..40, seed in any::<u64>()) {
        let g = random_planar(n, seed).unwrap();
        let initial = initial_charges(&g);
        let (fin, log) = apply_rules(&g);
        prop_assert_eq!(initial.total(), Charge::from(-28));
        prop_assert_eq!(fin.total(), Charge::from(-28));
        prop_assert_eq!(log.replay(&initial), fin);
        prop_assert!(log.transfers.iter().all(|t| t.amount.is_positive()));
    }
}
