//! Generators shared by the integration tests.
#![allow(dead_code)]

pub mod enumerate;

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rt_morph::morph::{adjust, respects_order};
use rt_morph::plane_graph::fixtures::random_triangulation;
use rt_morph::rt::{construct_rt, q, ratio, Labeling, OuterFrame, RTRepresentation, RightTriangle, Q};
use rt_morph::schnyder::{derived_dag, directed_cycle, flip, initial_wood, oriented_triangles, Color, Scope, SchnyderWood};
use rt_morph::PlaneTriangulation;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> Arc<PlaneTriangulation> {
    Arc::new(random_triangulation(n, n % 3, rng))
}

/// Random walk in the flip graph, starting from the canonical-order wood.
pub fn random_wood<R: Rng>(g: &Arc<PlaneTriangulation>, steps: usize, scope: Scope, rng: &mut R) -> SchnyderWood {
    let mut t = initial_wood(g, g.outer()[0]).unwrap();
    for _ in 0..steps {
        let cands = oriented_triangles(&t, scope);
        if let Some((tri, _)) = cands.choose(rng) {
            t = flip(&t, *tri).unwrap();
        }
    }
    t
}

/// Strict labeling from a random topological order of the red DAG with
/// random positive gaps.
pub fn random_strict_labeling<R: Rng>(t: &SchnyderWood, rng: &mut R) -> Labeling {
    let d = derived_dag(t, Color::Red).unwrap();
    let n = d.n();
    let mut indeg = vec![0usize; n];
    for (_, v) in d.edges() {
        indeg[v] += 1;
    }
    let mut avail: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let r = t.roots();
    let mut tau = vec![q(0); n];
    let mut y = q(0);
    while !avail.is_empty() {
        let i = rng.gen_range(0..avail.len());
        let u = avail.swap_remove(i);
        if u != r.blue && u != r.green {
            y += ratio(rng.gen_range(1..6), rng.gen_range(1..4));
            tau[u] = y.clone();
        }
        for &v in &d.succ[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                avail.push(v);
            }
        }
    }
    Labeling(tau)
}

/// Corner-touching frame for a labeling with `tau(X_b) = tau(X_g) = 0`.
pub fn random_frame<R: Rng>(tau: &Labeling, t: &SchnyderWood, rng: &mut R) -> OuterFrame {
    let r = t.roots();
    let top = tau.get(r.red).clone();
    let a = ratio(rng.gen_range(1..5), rng.gen_range(1..3));
    let s = &top * ratio(rng.gen_range(1..5), rng.gen_range(1..4));
    let h = ratio(rng.gen_range(1..5), rng.gen_range(1..3));
    OuterFrame {
        blue: RightTriangle::new(-a, q(0), q(0), top.clone()),
        green: RightTriangle::new(q(0), s.clone(), q(0), top.clone()),
        red: RightTriangle::new(q(0), s, top.clone(), top + h),
    }
}

/// Collapse random oriented faces to triple-corner points by moving the
/// vertex with the green cycle edge down to the vertex with the blue one.
pub fn degenerate<R: Rng>(tau: &Labeling, t: &SchnyderWood, moves: usize, rng: &mut R) -> Labeling {
    let mut tau = tau.clone();
    for _ in 0..moves {
        let faces = oriented_triangles(t, Scope::FacesOnly);
        let Some(&(tri, _)) = faces.choose(rng) else { break };
        let cycle = directed_cycle(t, tri).unwrap();
        let by = |c: Color| {
            (0..3).map(|i| cycle[i]).find(|&v| t.edge(v, cycle[(cycle.iter().position(|&x| x == v).unwrap() + 1) % 3]).unwrap().1 == c).unwrap()
        };
        let (cg, cb) = (by(Color::Green), by(Color::Blue));
        let y = tau.get(cb).clone();
        if respects_order(&tau, t, cg, &y) {
            if let Ok(next) = adjust(&tau, t, cg, &y) {
                tau = next;
            }
        }
    }
    tau
}

/// Move the outer triangles off their shared corners without changing any
/// contact with an inner triangle, then apply a random positive affinity.
pub fn disturb_frame<R: Rng>(r: &RTRepresentation, rng: &mut R) -> RTRepresentation {
    let roots = r.roots();
    let mut tris = r.triangles().to_vec();
    if rng.gen_bool(0.5) {
        let b = &mut tris[roots.blue];
        b.yb = &b.yb - ratio(rng.gen_range(1..4), 2);
    }
    if rng.gen_bool(0.5) {
        let x = &mut tris[roots.red];
        x.xl = &x.xl - ratio(rng.gen_range(1..4), 2);
    }
    if rng.gen_bool(0.5) {
        let gt = &mut tris[roots.green];
        let k: Q = ratio(rng.gen_range(1..4), 3);
        let dx = gt.width() * &k;
        let dy = gt.height() * &k;
        gt.xr = &gt.xr + dx;
        gt.yt = &gt.yt + dy;
    }
    let sx = ratio(rng.gen_range(1..7), rng.gen_range(1..4));
    let sy = ratio(rng.gen_range(1..7), rng.gen_range(1..4));
    let tx = ratio(rng.gen_range(-5..6), rng.gen_range(1..3));
    let ty = ratio(rng.gen_range(-5..6), rng.gen_range(1..3));
    r.with_triangles(tris.iter().map(|t| t.map(&sx, &tx, &sy, &ty)).collect())
}

pub struct RepOptions {
    pub degenerate_moves: usize,
    pub disturb: bool,
}

pub fn random_rep<R: Rng>(t: &SchnyderWood, opts: &RepOptions, rng: &mut R) -> RTRepresentation {
    let tau = random_strict_labeling(t, rng);
    let tau = degenerate(&tau, t, opts.degenerate_moves, rng);
    let frame = random_frame(&tau, t, rng);
    let r = construct_rt(t, &tau, &frame).unwrap();
    if opts.disturb {
        disturb_frame(&r, rng)
    } else {
        r
    }
}
