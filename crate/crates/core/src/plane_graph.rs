//! Plane triangulations given as combinatorial embeddings.
//!
//! Rotations list neighbors counter-clockwise. Faces are obtained by the
//! usual face walk: the face to the left of the half-edge `u -> v` continues
//! with `v -> w`, where `w` precedes `u` in the rotation of `v`. Inner faces
//! come out counter-clockwise; the outer face comes out reversed.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::hash::BuildHasherDefault;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Raw embedding data, exactly as stored in graph JSON files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSpec {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    pub outer: [usize; 3],
}

/// A vertex triple forming a 3-cycle, stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle3(pub [usize; 3]);

impl Triangle3 {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        Triangle3(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// The three edges as sorted pairs.
    pub fn edges(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }
}

impl fmt::Display for Triangle3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Hasher with fixed keys, so equal graphs iterate their maps in the same order.
type Fixed = BuildHasherDefault<DefaultHasher>;
type FixedMap<K, V> = HashMap<K, V, Fixed>;

#[derive(Debug, Clone)]
pub struct PlaneTriangulation {
    spec: GraphSpec,
    /// `pos[&(u, v)]` is the index of `v` in the rotation of `u`.
    pos: FixedMap<(usize, usize), usize>,
    edges: Vec<(usize, usize)>,
    edge_index: FixedMap<(usize, usize), usize>,
    inner_faces: Vec<[usize; 3]>,
    face_set: HashSet<Triangle3, Fixed>,
}

impl PartialEq for PlaneTriangulation {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for PlaneTriangulation {}

fn sorted(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Rotate a cyclic triple so that its smallest element comes first.
pub(crate) fn normalize_cycle(t: [usize; 3]) -> [usize; 3] {
    let i = (0..3).min_by_key(|&i| t[i]).unwrap();
    [t[i], t[(i + 1) % 3], t[(i + 2) % 3]]
}

impl PlaneTriangulation {
    /// Validate an embedding. Each rotation is stored starting at its
    /// smallest neighbor, so embeddings equal up to cyclic shifts compare equal.
    pub fn build(mut spec: GraphSpec) -> Result<Self> {
        for rot in spec.rotations.iter_mut() {
            if let Some(i) = (0..rot.len()).min_by_key(|&i| rot[i]) {
                rot.rotate_left(i);
            }
        }
        let n = spec.n;
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        if spec.rotations.len() != n {
            return Err(Error::BadEmbedding(format!(
                "expected {n} rotations, got {}",
                spec.rotations.len()
            )));
        }
        let mut pos = FixedMap::default();
        for (u, rot) in spec.rotations.iter().enumerate() {
            for (i, &v) in rot.iter().enumerate() {
                if v >= n {
                    return Err(Error::BadEmbedding(format!("vertex {u} lists unknown neighbor {v}")));
                }
                if v == u {
                    return Err(Error::BadEmbedding(format!("loop at vertex {u}")));
                }
                if pos.insert((u, v), i).is_some() {
                    return Err(Error::BadEmbedding(format!("parallel edge {u}-{v}")));
                }
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in pos.keys() {
            if !pos.contains_key(&(v, u)) {
                return Err(Error::BadEmbedding(format!("edge {u}-{v} listed only at {u}")));
            }
            if u < v {
                edges.push((u, v));
            }
        }
        edges.sort_unstable();
        if edges.len() != 3 * n - 6 {
            return Err(Error::NotTriangulation(format!(
                "{} edges, a triangulation on {n} vertices has {}",
                edges.len(),
                3 * n - 6
            )));
        }
        let edge_index: FixedMap<_, _> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &spec.rotations[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::BadEmbedding(format!("vertex {v} is disconnected")));
        }

        let pred = |v: usize, u: usize| -> usize {
            let rot = &spec.rotations[v];
            let i = pos[&(v, u)];
            rot[(i + rot.len() - 1) % rot.len()]
        };
        let mut visited: HashSet<(usize, usize)> = HashSet::new();
        let mut faces = Vec::new();
        let mut half_edges: Vec<(usize, usize)> = pos.keys().copied().collect();
        half_edges.sort_unstable();
        for &(u0, v0) in &half_edges {
            if visited.contains(&(u0, v0)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut v) = (u0, v0);
            loop {
                visited.insert((u, v));
                walk.push(u);
                let w = pred(v, u);
                u = v;
                v = w;
                if (u, v) == (u0, v0) || walk.len() > half_edges.len() {
                    break;
                }
            }
            if walk.len() != 3 {
                return Err(Error::NotTriangulation(format!(
                    "face of length {} through {:?}",
                    walk.len(),
                    &walk[..walk.len().min(6)]
                )));
            }
            faces.push(normalize_cycle([walk[0], walk[1], walk[2]]));
        }
        if faces.len() != 2 * n - 4 {
            return Err(Error::BadEmbedding(format!(
                "{} faces, a plane triangulation has {}",
                faces.len(),
                2 * n - 4
            )));
        }
        let [a, b, c] = spec.outer;
        if [a, b, c].iter().any(|&x| x >= n) || a == b || b == c || a == c {
            return Err(Error::BadOuterFace(spec.outer));
        }
        let outer_walk = normalize_cycle([a, c, b]);
        let Some(outer_at) = faces.iter().position(|f| *f == outer_walk) else {
            return Err(Error::BadOuterFace(spec.outer));
        };
        let face_set: HashSet<Triangle3, Fixed> = faces.iter().map(|f| Triangle3::new(f[0], f[1], f[2])).collect();
        if face_set.len() != faces.len() {
            // two faces on the same triple only happens for n = 3
            if n != 3 {
                return Err(Error::BadEmbedding("repeated face".into()));
            }
        }
        faces.remove(outer_at);
        faces.sort_unstable();
        Ok(PlaneTriangulation { spec, pos, edges, edge_index, inner_faces: faces, face_set })
    }

    pub fn spec(&self) -> &GraphSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.spec.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.spec.rotations[v].len()
    }

    /// Outer vertices, counter-clockwise.
    pub fn outer(&self) -> [usize; 3] {
        self.spec.outer
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.spec.outer.contains(&v)
    }

    pub fn inner_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| !self.is_outer(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.pos.contains_key(&(u, v))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&sorted(u, v)).copied()
    }

    /// Edges with at least one inner endpoint.
    pub fn is_inner_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && !(self.is_outer(u) && self.is_outer(v))
    }

    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.pos.get(&(v, u)).copied()
    }

    /// Neighbor following `u` counter-clockwise around `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let rot = self.rotation(v);
        rot[(self.pos[&(v, u)] + 1) % rot.len()]
    }

    /// Neighbor preceding `u` counter-clockwise around `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let rot = self.rotation(v);
        rot[(self.pos[&(v, u)] + rot.len() - 1) % rot.len()]
    }

    /// Third vertex of the face to the left of `u -> v`.
    pub fn left_third(&self, u: usize, v: usize) -> usize {
        self.pred(v, u)
    }

    /// Neighbors of `v` strictly counter-clockwise after `from` and before `to`.
    pub fn wedge(&self, v: usize, from: usize, to: usize) -> Vec<usize> {
        let rot = self.rotation(v);
        let k = rot.len();
        let start = self.pos[&(v, from)];
        (1..k).map(|i| rot[(start + i) % k]).take_while(|&w| w != to).collect()
    }

    /// Inner faces, each listed counter-clockwise starting at its smallest vertex.
    pub fn inner_faces(&self) -> &[[usize; 3]] {
        &self.inner_faces
    }

    pub fn face_count(&self) -> usize {
        self.inner_faces.len() + 1
    }

    pub fn is_face(&self, t: Triangle3) -> bool {
        self.face_set.contains(&t)
    }

    /// All 3-cycles, sorted.
    pub fn triangles(&self) -> Vec<Triangle3> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            for &w in self.rotation(u) {
                if w > v && self.has_edge(v, w) {
                    out.push(Triangle3([u, v, w]));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// 3-cycles that are not faces.
    pub fn separating_triangles(&self) -> BTreeSet<Triangle3> {
        self.triangles().into_iter().filter(|t| !self.is_face(*t)).collect()
    }

    pub fn is_four_connected(&self) -> Result<bool> {
        if self.n() < 5 {
            return Err(Error::TooSmall { n: self.n(), min: 5 });
        }
        Ok(self.separating_triangles().is_empty())
    }

    /// Whether the cycle `a -> b -> c -> a` runs counter-clockwise.
    ///
    /// Faces are decided from the face walk. For separating triangles the
    /// region to the left of the cycle is flooded; it is the exterior iff it
    /// reaches an outer vertex.
    pub fn cycle_is_ccw(&self, a: usize, b: usize, c: usize) -> bool {
        let t = Triangle3::new(a, b, c);
        if self.is_face(t) {
            let [x, y, z] = self.spec.outer;
            if t == Triangle3::new(x, y, z) {
                return normalize_cycle([a, b, c]) == normalize_cycle([x, y, z]);
            }
            return self.left_third(a, b) == c;
        }
        let on_cycle = |v: usize| v == a || v == b || v == c;
        let mut seen: HashSet<usize> = HashSet::new();
        let mut queue = VecDeque::new();
        for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
            // left side of p -> q -> r at q
            for w in self.wedge(q, r, p) {
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        while let Some(u) = queue.pop_front() {
            if self.is_outer(u) {
                return false;
            }
            for &w in self.rotation(u) {
                if !on_cycle(w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        true
    }
}

pub fn build_triangulation(spec: GraphSpec) -> Result<PlaneTriangulation> {
    PlaneTriangulation::build(spec)
}

pub mod fixtures {
    //! Small named triangulations and random generators used by tests,
    //! examples and benchmarks.

    use super::*;
    use rand::seq::SliceRandom;
    use rand::Rng;

    /// Build a spec from a straight-line drawing by sorting neighbors by angle.
    pub fn from_drawing(points: &[(f64, f64)], edges: &[(usize, usize)], outer: [usize; 3]) -> GraphSpec {
        let n = points.len();
        let mut rotations = vec![Vec::new(); n];
        for &(u, v) in edges {
            rotations[u].push(v);
            rotations[v].push(u);
        }
        for (u, rot) in rotations.iter_mut().enumerate() {
            let (x0, y0) = points[u];
            rot.sort_by(|&p, &q| {
                let a = (points[p].1 - y0).atan2(points[p].0 - x0);
                let b = (points[q].1 - y0).atan2(points[q].0 - x0);
                a.partial_cmp(&b).unwrap()
            });
        }
        GraphSpec { n, rotations, outer }
    }

    /// Outer 0 (top), 1 (bottom left), 2 (bottom right); vertex 3 inside.
    pub fn k4() -> PlaneTriangulation {
        let pts = [(0.0, 10.0), (-10.0, -6.0), (10.0, -6.0), (0.0, 0.0)];
        let edges = [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2)];
        build_triangulation(from_drawing(&pts, &edges, [0, 1, 2])).unwrap()
    }

    const OCTA_POINTS: [(f64, f64); 6] =
        [(0.0, 10.0), (-10.0, -6.0), (10.0, -6.0), (-3.0, 1.0), (0.0, -3.0), (3.0, 1.0)];
    const OCTA_EDGES: [(usize, usize); 12] = [
        (0, 1),
        (1, 2),
        (0, 2),
        (3, 4),
        (4, 5),
        (3, 5),
        (3, 0),
        (3, 1),
        (4, 1),
        (4, 2),
        (5, 2),
        (5, 0),
    ];

    /// Outer triangle (0,1,2), inner triangle (3,4,5).
    pub fn octahedron() -> PlaneTriangulation {
        build_triangulation(from_drawing(&OCTA_POINTS, &OCTA_EDGES, [0, 1, 2])).unwrap()
    }

    /// Octahedron with vertex 6 stacked into face (3,4,5).
    pub fn stacked_octahedron() -> PlaneTriangulation {
        let mut pts = OCTA_POINTS.to_vec();
        pts.push((0.0, -0.3));
        let mut edges = OCTA_EDGES.to_vec();
        edges.extend([(6, 3), (6, 4), (6, 5)]);
        build_triangulation(from_drawing(&pts, &edges, [0, 1, 2])).unwrap()
    }

    /// 5-vertex stack: K4 with vertex 4 inside face (3,1,2).
    pub fn stacked_five() -> PlaneTriangulation {
        let pts = [(0.0, 10.0), (-10.0, -6.0), (10.0, -6.0), (0.0, 0.0), (0.0, -3.0)];
        let edges = [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 2), (4, 3), (4, 1), (4, 2)];
        build_triangulation(from_drawing(&pts, &edges, [0, 1, 2])).unwrap()
    }

    /// Rotation system of a convex polyhedron, counter-clockwise seen from outside.
    pub fn from_polyhedron(points: &[[f64; 3]], edges: &[(usize, usize)]) -> GraphSpec {
        let n = points.len();
        let mut rotations = vec![Vec::new(); n];
        for &(u, v) in edges {
            rotations[u].push(v);
            rotations[v].push(u);
        }
        let sub = |a: [f64; 3], b: [f64; 3]| [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
        let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
        let cross = |a: [f64; 3], b: [f64; 3]| {
            [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
        };
        for (u, rot) in rotations.iter_mut().enumerate() {
            let normal = points[u];
            let e1 = sub(points[rot[0]], points[u]);
            let e2 = cross(normal, e1);
            rot.sort_by(|&p, &q| {
                let dp = sub(points[p], points[u]);
                let dq = sub(points[q], points[u]);
                let a = dot(dp, e2).atan2(dot(dp, e1));
                let b = dot(dq, e2).atan2(dot(dq, e1));
                a.partial_cmp(&b).unwrap()
            });
        }
        // pick the face to the right of edge (0, first neighbor) as outer
        let v = rotations[0][0];
        let i = rotations[v].iter().position(|&x| x == 0).unwrap();
        let k = rotations[v].len();
        let w = rotations[v][(i + k - 1) % k];
        // left face walk is (0, v, w); the outer triple lists it reversed
        GraphSpec { n, rotations, outer: [0, w, v] }
    }

    pub fn icosahedron() -> PlaneTriangulation {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut pts = Vec::new();
        for s1 in [-1.0, 1.0] {
            for s2 in [-1.0, 1.0] {
                pts.push([0.0, s1, s2 * phi]);
                pts.push([s1, s2 * phi, 0.0]);
                pts.push([s2 * phi, 0.0, s1]);
            }
        }
        let mut edges = Vec::new();
        for i in 0..12 {
            for j in i + 1..12 {
                let d: f64 = (0..3).map(|k| (pts[i][k] - pts[j][k]).powi(2)).sum();
                if (d - 4.0).abs() < 1e-9 {
                    edges.push((i, j));
                }
            }
        }
        build_triangulation(from_polyhedron(&pts, &edges)).unwrap()
    }

    /// Random stacked triangulation (repeated insertion into inner faces).
    pub fn random_stacked<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PlaneTriangulation {
        assert!(n >= 3);
        let mut rot: Vec<Vec<usize>> = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2]];
        for v in 3..n {
            let fi = rng.gen_range(0..faces.len());
            let [a, b, c] = faces[fi];
            for (x, after) in [(a, b), (b, c), (c, a)] {
                let i = rot[x].iter().position(|&y| y == after).unwrap();
                rot[x].insert(i + 1, v);
            }
            rot.push(vec![a, b, c]);
            faces[fi] = [a, b, v];
            faces.push([b, c, v]);
            faces.push([c, a, v]);
        }
        build_triangulation(GraphSpec { n, rotations: rot, outer: [0, 1, 2] }).unwrap()
    }

    /// Flip the inner edge `a`-`b` to the other diagonal of its two faces.
    /// Returns `None` if the flip is not allowed.
    pub fn flip_edge(g: &PlaneTriangulation, a: usize, b: usize) -> Option<PlaneTriangulation> {
        if !g.has_edge(a, b) || (g.is_outer(a) && g.is_outer(b)) {
            return None;
        }
        let c = g.left_third(a, b);
        let d = g.left_third(b, a);
        if g.has_edge(c, d) || g.degree(a) < 4 || g.degree(b) < 4 {
            return None;
        }
        let mut rot = g.spec().rotations.clone();
        rot[a].retain(|&x| x != b);
        rot[b].retain(|&x| x != a);
        let i = rot[c].iter().position(|&x| x == a).unwrap();
        rot[c].insert(i + 1, d);
        let j = rot[d].iter().position(|&x| x == b).unwrap();
        rot[d].insert(j + 1, c);
        build_triangulation(GraphSpec { n: g.n(), rotations: rot, outer: g.outer() }).ok()
    }

    /// Random triangulation grown from K4 by placing each new vertex on a
    /// random inner edge and joining it to both opposite vertices, then
    /// mixed by random edge flips.
    pub fn random_triangulation<R: Rng + ?Sized>(n: usize, flips: usize, rng: &mut R) -> PlaneTriangulation {
        assert!(n >= 4);
        let mut g = k4();
        for v in 4..n {
            let inner: Vec<(usize, usize)> = g.edges().iter().copied().filter(|&(a, b)| g.is_inner_edge(a, b)).collect();
            let &(a, b) = inner.choose(rng).unwrap();
            let (c, d) = (g.left_third(a, b), g.left_third(b, a));
            let mut rot = g.spec().rotations.clone();
            let replace = |r: &mut Vec<usize>, old: usize, new: usize| {
                let i = r.iter().position(|&x| x == old).unwrap();
                r[i] = new;
            };
            replace(&mut rot[a], b, v);
            replace(&mut rot[b], a, v);
            let i = rot[c].iter().position(|&x| x == a).unwrap();
            rot[c].insert(i + 1, v);
            let j = rot[d].iter().position(|&x| x == b).unwrap();
            rot[d].insert(j + 1, v);
            rot.push(vec![a, d, b, c]);
            g = build_triangulation(GraphSpec { n: v + 1, rotations: rot, outer: g.outer() }).unwrap();
        }
        for _ in 0..flips {
            let &(a, b) = g.edges().choose(rng).unwrap();
            if let Some(h) = flip_edge(&g, a, b) {
                g = h;
            }
        }
        g
    }
}
