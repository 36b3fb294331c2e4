mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rt_morph::lattice::{facial_flip_sequence, join, meet, Lattice, TieBreak};
use rt_morph::morph::{decide, full_morph};
use rt_morph::plane_graph::fixtures::random_stacked;
use rt_morph::rt::extract::common_wood;
use rt_morph::rt::{construct_rt, extract_wood_set, ratio, validate_rt, RTRepresentation, RightTriangle, Q};
use rt_morph::schnyder::{derived_dag, flip, initial_wood, oriented_triangles, validate_wood, Color, Scope};
use rt_morph::{build_triangulation, PlaneTriangulation, Triangle3};

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, ..ProptestConfig::default() }
}

fn all_three_cycles(g: &PlaneTriangulation) -> BTreeSet<Triangle3> {
    let n = g.n();
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    out.insert(Triangle3::new(a, b, c));
                }
            }
        }
    }
    out
}

/// Closed right triangles meet iff no axis among x, y and the two
/// hypotenuse normals separates their corner projections.
fn closed_triangles_meet(s: &RightTriangle, t: &RightTriangle) -> bool {
    let axes = [(Q::from_integer(1.into()), Q::from_integer(0.into())), (Q::from_integer(0.into()), Q::from_integer(1.into())), (s.height(), -s.width()), (t.height(), -t.width())];
    !axes.iter().any(|(ax, ay)| {
        let proj = |r: &RightTriangle| {
            let v: Vec<Q> = r.corners().iter().map(|(x, y)| x * ax + y * ay).collect();
            (v.iter().min().unwrap().clone(), v.iter().max().unwrap().clone())
        };
        let ((lo1, hi1), (lo2, hi2)) = (proj(s), proj(t));
        hi1 < lo2 || hi2 < lo1
    })
}

fn random_pair(seed: u64, n: usize) -> (RTRepresentation, RTRepresentation) {
    let mut rng = rng(seed);
    let g = random_graph(n, &mut rng);
    let opts = |k: usize| RepOptions { degenerate_moves: k, disturb: k % 2 == 1 };
    let t1 = random_wood(&g, 2 * n, Scope::FacesOnly, &mut rng);
    let t2 = random_wood(&g, 2 * n, Scope::FacesOnly, &mut rng);
    let a = random_rep(&t1, &opts(seed as usize % 3), &mut rng);
    let b = random_rep(&t2, &opts(seed as usize / 3 % 3), &mut rng);
    (a, b)
}

proptest! {
    #![proptest_config(cases(64))]

    #[test]
    fn faces_and_three_cycles(seed in any::<u64>(), n in 4usize..13) {
        let mut rng = rng(seed);
        let g = if seed % 2 == 0 { random_stacked(n, &mut rng) } else { (*random_graph(n, &mut rng)).clone() };
        prop_assert_eq!(g.face_count(), 2 * n - 4);
        let mut faces: BTreeSet<Triangle3> = g.inner_faces().iter().map(|&[a, b, c]| Triangle3::new(a, b, c)).collect();
        let [a, b, c] = g.outer();
        faces.insert(Triangle3::new(a, b, c));
        let union: BTreeSet<Triangle3> = faces.union(&g.separating_triangles()).copied().collect();
        prop_assert!(faces.is_disjoint(&g.separating_triangles()));
        prop_assert_eq!(union, all_three_cycles(&g));
        let again = build_triangulation(g.spec().clone()).unwrap();
        prop_assert_eq!(format!("{again:?}"), format!("{g:?}"));
    }

    #[test]
    fn wood_operations_stay_valid(seed in any::<u64>(), n in 4usize..60) {
        let mut rng = rng(seed);
        let g = Arc::new(random_stacked(n, &mut rng));
        let t0 = initial_wood(&g, g.outer()[seed as usize % 3]).unwrap();
        prop_assert!(validate_wood(&t0).is_empty());
        let t1 = random_wood(&g, n, Scope::AllTriangles, &mut rng);
        let t2 = random_wood(&g, 2 * n, Scope::AllTriangles, &mut rng);
        for t in [&t1, &t2, &meet(&t1, &t2).unwrap(), &join(&t1, &t2).unwrap()] {
            prop_assert!(validate_wood(t).is_empty());
            prop_assert!(derived_dag(t, Color::Red).unwrap().topological_order().is_ok());
            prop_assert!(derived_dag(t, Color::Blue).unwrap().topological_order().is_ok());
        }
        if let Some(&(c, _)) = oriented_triangles(&t1, Scope::AllTriangles).choose(&mut rng) {
            let f = flip(&t1, c).unwrap();
            prop_assert!(validate_wood(&f).is_empty());
            prop_assert_eq!(flip(&f, c).unwrap(), t1.clone());
        }
    }

    #[test]
    fn potentials_ignore_the_tie_break(seed in any::<u64>(), n in 8usize..40) {
        let mut rng = rng(seed);
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 3 * n, Scope::AllTriangles, &mut rng);
        let l = Lattice::new(&g);
        prop_assert_eq!(l.potential_with(&t, TieBreak::Smallest).unwrap(), l.potential_with(&t, TieBreak::Largest).unwrap());
    }

    #[test]
    fn facial_flips_replay_to_the_target(seed in any::<u64>(), n in 4usize..40) {
        let mut rng = rng(seed);
        let g = random_graph(n, &mut rng);
        let t1 = random_wood(&g, 2 * n, Scope::FacesOnly, &mut rng);
        let t2 = random_wood(&g, 2 * n, Scope::FacesOnly, &mut rng);
        let seq = facial_flip_sequence(&t1, &t2).unwrap();
        prop_assert!(seq.iter().all(|&c| g.is_face(c)));
        prop_assert!(seq.len() <= 8 * n * n);
        let end = seq.iter().fold(t1, |t, &c| flip(&t, c).unwrap());
        prop_assert_eq!(end, t2);
    }

    #[test]
    fn construction_is_deterministic(seed in any::<u64>(), n in 4usize..30) {
        let mut rng = rng(seed);
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, n, Scope::AllTriangles, &mut rng);
        let tau = random_strict_labeling(&t, &mut rng);
        let frame = random_frame(&tau, &t, &mut rng);
        prop_assert_eq!(construct_rt(&t, &tau, &frame).unwrap(), construct_rt(&t, &tau, &frame).unwrap());
    }

    /// Non-adjacent vertices have disjoint triangles, and every point where
    /// exactly three corners meet is a degenerate face.
    #[test]
    fn contact_structure_of_valid_representations(seed in any::<u64>(), n in 4usize..16) {
        let mut rng = rng(seed);
        let g = random_graph(n, &mut rng);
        let t = random_wood(&g, 2 * n, Scope::FacesOnly, &mut rng);
        let r = random_rep(&t, &RepOptions { degenerate_moves: 1 + seed as usize % 4, disturb: seed % 2 == 0 }, &mut rng);
        prop_assert!(validate_rt(&r).is_empty());
        for u in 0..n {
            for w in u + 1..n {
                let meet = closed_triangles_meet(r.triangle(u), r.triangle(w));
                prop_assert_eq!(meet, g.has_edge(u, w), "{} {}", u, w);
            }
        }
        let mut corners: HashMap<(Q, Q), usize> = HashMap::new();
        for tri in r.triangles() {
            for p in tri.corners() {
                *corners.entry(p).or_default() += 1;
            }
        }
        let triple = corners.values().filter(|&&k| k == 3).count();
        prop_assert_eq!(triple, extract_wood_set(&r).unwrap().degenerate_faces.len());
    }
}

proptest! {
    #![proptest_config(cases(24))]

    #[test]
    fn decide_is_symmetric(seed in any::<u64>(), n in 4usize..20) {
        let (a, b) = random_pair(seed, n);
        let (d1, d2) = (decide(&a, &b).unwrap(), decide(&b, &a).unwrap());
        prop_assert_eq!(d1.possible, d2.possible);
        prop_assert_eq!(d1.flip_count, d2.flip_count);
        prop_assert_eq!(d1.reason, d2.reason);
    }

    /// Every keyframe pair of a plan is a linear morph whose sampled
    /// interpolations are valid and keep a wood shared by both ends.
    #[test]
    fn plan_interpolations_are_valid(seed in any::<u64>(), n in 4usize..11) {
        let (a, b) = random_pair(seed, n);
        let plan = full_morph(&a, &b).unwrap();
        prop_assert!(plan.steps() <= 2 * n + 2 * decide(&a, &b).unwrap().flip_count.unwrap() + 6);
        for w in plan.keyframes.windows(2) {
            let shared = common_wood(&extract_wood_set(&w[0]).unwrap(), &extract_wood_set(&w[1]).unwrap()).unwrap();
            let shared = shared.expect("consecutive keyframes share a wood");
            for k in 1..4 {
                let mid = w[0].interpolate(&w[1], &ratio(k, 4));
                prop_assert!(validate_rt(&mid).is_empty());
                prop_assert!(extract_wood_set(&mid).unwrap().contains(&shared));
            }
        }
    }
}
