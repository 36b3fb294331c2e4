mod common;

use std::sync::Arc;

use common::*;
use rand::Rng;
use rt_morph::morph::{adjust, respects_order};
use rt_morph::plane_graph::fixtures::{k4, octahedron, stacked_five};
use rt_morph::rt::construct::canonical_labeling;
use rt_morph::rt::{
    canonical_frame, construct_rt, contacts, extract_wood_set, is_linear_morph, labeling_from_rep, q, ratio,
    validate_adt, validate_rt, Corner, Labeling, RTRepresentation, RightTriangle, Side, Touch,
};
use rt_morph::schnyder::{flip, initial_wood, oriented_triangles, Scope, SchnyderWood};
use rt_morph::{Error, PlaneTriangulation, Triangle3};

fn wood(g: PlaneTriangulation) -> SchnyderWood {
    initial_wood(&Arc::new(g), 0).unwrap()
}

fn canonical_rep(t: &SchnyderWood) -> RTRepresentation {
    let tau = canonical_labeling(t).unwrap();
    construct_rt(t, &tau, &canonical_frame(t.n())).unwrap()
}

#[test]
fn k4_contacts_are_the_three_corner_contacts() {
    let r = canonical_rep(&wood(k4()));
    let cm = contacts(&r).unwrap();
    assert!(cm.degenerate_points.is_empty());
    let touch = |u: usize, v: usize| cm.contacts[&(u.min(v), u.max(v))].touch;
    let on = |corner: Corner, side_owner: usize, side: Side| Touch::CornerOnSide { corner_owner: 3, corner, side_owner, side };
    assert_eq!(touch(3, 1), on(Corner::Left, 1, Side::Vertical));
    assert_eq!(touch(3, 2), on(Corner::Right, 2, Side::Diagonal));
    assert_eq!(touch(3, 0), on(Corner::Top, 0, Side::Horizontal));
    assert_eq!(cm.contacts[&(0, 3)].point, (q(1), q(2)));
    assert_eq!(cm.contacts[&(1, 3)].point, (q(0), q(1)));
    assert_eq!(cm.contacts[&(2, 3)].point, (q(1), q(1)));
}

#[test]
fn overlapping_triangles_are_reported() {
    let r = canonical_rep(&wood(k4()));
    let mut tris = r.triangles().to_vec();
    tris[3] = RightTriangle::from_ints(0, 2, 1, 2);
    let bad = r.with_triangles(tris);
    assert!(matches!(contacts(&bad), Err(Error::Overlap(2, 3))));
    assert!(validate_rt(&bad).iter().any(|m| m.contains("overlap")));
}

#[test]
fn k4_extraction_and_labeling() {
    let t = wood(k4());
    let r = canonical_rep(&t);
    let set = extract_wood_set(&r).unwrap();
    assert_eq!(set.base, t);
    assert!(set.degenerate_faces.is_empty());
    assert_eq!(labeling_from_rep(&r, &t).unwrap(), Labeling(vec![q(2), q(0), q(0), q(1)]));
}

#[test]
fn construction_round_trips_for_random_strict_labelings() {
    let mut rng = rng(21);
    for round in 0..500 {
        let n = 4 + round % 17;
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 3 * n, Scope::AllTriangles, &mut rng);
        let tau = random_strict_labeling(&t, &mut rng);
        let frame = random_frame(&tau, &t, &mut rng);
        let r = construct_rt(&t, &tau, &frame).unwrap();
        assert!(validate_rt(&r).is_empty(), "{:?}", validate_rt(&r));
        let set = extract_wood_set(&r).unwrap();
        assert_eq!(set.base, t);
        assert!(set.degenerate_faces.is_empty());
        assert_eq!(labeling_from_rep(&r, &t).unwrap(), tau);
        assert_eq!(construct_rt(&t, &tau, &frame).unwrap(), r);
    }
}

#[test]
fn strict_topological_labeling_is_admissible() {
    let mut rng = rng(3);
    for n in 4..30 {
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 2 * n, Scope::AllTriangles, &mut rng);
        assert!(validate_adt(&canonical_labeling(&t).unwrap(), &t).is_empty());
    }
}

#[test]
fn equal_neighbors_on_both_sides_violate_condition_three() {
    let t = wood(stacked_five());
    let d = validate_adt(&Labeling(vec![q(4), q(0), q(0), q(0), q(0)]), &t);
    assert!(d.iter().any(|m| m.starts_with("condition 3") && m.contains("vertex 3")), "{d:?}");
}

#[test]
fn perturbed_and_swapped_triangles_are_rejected() {
    let t = wood(octahedron());
    let r = canonical_rep(&t);
    for v in 3..6 {
        let mut tris = r.triangles().to_vec();
        tris[v].yb = &tris[v].yb + ratio(1, 1000);
        tris[v].yt = &tris[v].yt + ratio(1, 1000);
        let d = validate_rt(&r.with_triangles(tris));
        assert!(d.iter().any(|m| m.contains("do not touch") || m.contains("overlap")), "{d:?}");
    }
    let mut tris = r.triangles().to_vec();
    tris.swap(3, 5);
    assert!(validate_rt(&r.with_triangles(tris)).len() > 1);
}

#[test]
fn moving_the_only_inner_triangle_of_k4_is_linear() {
    let t = wood(k4());
    let r = canonical_rep(&t);
    let c = is_linear_morph(&r, &r).unwrap();
    assert!(c.linear, "{:?}", c.failure);
    let mut tau = r.tau();
    tau.set(3, ratio(1, 2));
    let moved = construct_rt(&t, &tau, &canonical_frame(4)).unwrap();
    assert_eq!(*moved.triangle(3), RightTriangle::new(q(0), ratio(1, 2), ratio(1, 2), q(2)));
    assert_eq!(moved.triangle(2), r.triangle(2));
    let c = is_linear_morph(&r, &moved).unwrap();
    assert!(c.linear, "{:?}", c.failure);
    assert_eq!(c.wood, Some(t));
}

#[test]
fn representations_of_flipped_octahedron_woods_are_not_linear() {
    let t = wood(octahedron());
    let face = Triangle3::new(3, 4, 5);
    assert!(oriented_triangles(&t, Scope::FacesOnly).iter().any(|(c, _)| *c == face));
    let tc = flip(&t, face).unwrap();
    let (ra, rb) = (canonical_rep(&t), canonical_rep(&tc));
    assert!(extract_wood_set(&ra).unwrap().degenerate_faces.is_empty());
    assert!(extract_wood_set(&rb).unwrap().degenerate_faces.is_empty());
    let c = is_linear_morph(&ra, &rb).unwrap();
    assert!(!c.linear);
}

#[test]
fn wood_sets_expand_to_valid_woods() {
    let mut rng = rng(5);
    let mut seen_degenerate = 0;
    for round in 0..80 {
        let n = 5 + round % 12;
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 3 * n, Scope::FacesOnly, &mut rng);
        let opts = RepOptions { degenerate_moves: 1 + round % 4, disturb: false };
        let r = random_rep(&t, &opts, &mut rng);
        let set = extract_wood_set(&r).unwrap();
        let k = set.degenerate_faces.len();
        assert!(k <= 10);
        seen_degenerate += (k > 0) as usize;
        assert_eq!(set.len(), 1 << k);
        assert_eq!(contacts(&r).unwrap().degenerate_points.len(), k);
        for bits in 0..(1u64 << k) {
            let m = set.member(bits).unwrap();
            assert!(rt_morph::schnyder::validate_wood(&m).is_empty());
            assert!(set.contains(&m));
        }
    }
    assert!(seen_degenerate > 20);
}

#[test]
fn interpolations_of_linear_morphs_stay_valid() {
    let mut rng = rng(9);
    let mut checked = 0;
    for round in 0..60 {
        let n = 4 + round % 10;
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 3 * n, Scope::FacesOnly, &mut rng);
        let opts = RepOptions { degenerate_moves: round % 3, disturb: false };
        let a = random_rep(&t, &opts, &mut rng);
        let tau = a.tau();
        let x = rng.gen_range(3..n);
        let y = tau.get(x) + ratio(rng.gen_range(-4..5), 7);
        if !respects_order(&tau, &t, x, &y) {
            continue;
        }
        let Ok(moved) = adjust(&tau, &t, x, &y) else { continue };
        let b = construct_rt(&t, &moved, &a.frame()).unwrap();
        let c = is_linear_morph(&a, &b).unwrap();
        assert!(c.linear, "{:?}", c.failure);
        let shared = c.wood.unwrap();
        for s in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
            let m = a.interpolate(&b, &s);
            assert!(validate_rt(&m).is_empty());
            assert!(extract_wood_set(&m).unwrap().contains(&shared));
        }
        checked += 1;
    }
    assert!(checked > 15, "{checked}");
}
