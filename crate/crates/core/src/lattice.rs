//! The distributive lattice of 3-orientations with fixed roots.
//!
//! A wood is located in the lattice by its potential: how often each
//! triangle is flipped on a counter-clockwise descent to the minimum
//! orientation, the unique one without counter-clockwise cycles.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane_graph::{PlaneTriangulation, Triangle3};
use crate::schnyder::{color_orientation, Roots, SchnyderWood};

/// One direction bit per edge id: `true` means smaller endpoint to larger.
pub type Orientation = Vec<bool>;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PotentialVector {
    /// Non-zero entries only.
    pub values: BTreeMap<Triangle3, u64>,
}

impl PotentialVector {
    pub fn get(&self, t: Triangle3) -> u64 {
        self.values.get(&t).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.values.values().sum()
    }
}

#[derive(Debug, Clone)]
struct TriInfo {
    tri: Triangle3,
    /// Counter-clockwise vertex order.
    ccw: [usize; 3],
    /// Edge ids of `ccw[0]->ccw[1]`, `ccw[1]->ccw[2]`, `ccw[2]->ccw[0]` and
    /// whether that traversal runs from smaller to larger endpoint.
    edges: [(usize, bool); 3],
    face: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    Smallest,
    Largest,
}

/// All triangles of a graph that can be oriented, with their rotational
/// sense precomputed.
#[derive(Debug, Clone)]
pub struct Lattice {
    graph: Arc<PlaneTriangulation>,
    tris: Vec<TriInfo>,
    by_edge: Vec<Vec<usize>>,
    lookup: BTreeMap<Triangle3, usize>,
}

enum Mode<'a> {
    ToMinimum,
    Down { target: &'a [u64], faces_only: bool },
    Up { target: &'a [u64] },
}

impl Lattice {
    pub fn new(graph: &Arc<PlaneTriangulation>) -> Lattice {
        let g = graph.as_ref();
        let mut tris = Vec::new();
        let mut by_edge = vec![Vec::new(); g.edges().len()];
        for tri in g.triangles() {
            let [a, b, c] = tri.0;
            if tri.edges().iter().any(|&(u, v)| !g.is_inner_edge(u, v)) {
                continue;
            }
            let ccw = if g.cycle_is_ccw(a, b, c) { [a, b, c] } else { [a, c, b] };
            let edges = [0, 1, 2].map(|i| {
                let (x, y) = (ccw[i], ccw[(i + 1) % 3]);
                (g.edge_id(x, y).unwrap(), x < y)
            });
            let idx = tris.len();
            for &(e, _) in &edges {
                by_edge[e].push(idx);
            }
            tris.push(TriInfo { tri, ccw, edges, face: g.is_face(tri) });
        }
        let lookup = tris.iter().enumerate().map(|(i, t)| (t.tri, i)).collect();
        Lattice { graph: graph.clone(), tris, by_edge, lookup }
    }

    pub fn graph(&self) -> &Arc<PlaneTriangulation> {
        &self.graph
    }

    pub fn triangles(&self) -> impl Iterator<Item = Triangle3> + '_ {
        self.tris.iter().map(|t| t.tri)
    }

    pub fn orientation(&self, t: &SchnyderWood) -> Orientation {
        let g = self.graph.as_ref();
        let mut o = vec![false; g.edges().len()];
        for (v, out) in t.out_lists().iter().enumerate() {
            for &p in out {
                o[g.edge_id(v, p).unwrap()] = v < p;
            }
        }
        o
    }

    pub fn wood(&self, o: &Orientation, roots: Roots) -> Result<SchnyderWood> {
        let g = self.graph.as_ref();
        let mut out = vec![Vec::new(); g.n()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if g.is_inner_edge(a, b) {
                if o[e] {
                    out[a].push(b);
                } else {
                    out[b].push(a);
                }
            }
        }
        color_orientation(&self.graph, roots, &out)
    }

    fn is_ccw(&self, o: &Orientation, i: usize) -> bool {
        self.tris[i].edges.iter().all(|&(e, d)| o[e] == d)
    }

    fn is_cw(&self, o: &Orientation, i: usize) -> bool {
        self.tris[i].edges.iter().all(|&(e, d)| o[e] != d)
    }

    fn flip_in_place(&self, o: &mut Orientation, i: usize) {
        for &(e, _) in &self.tris[i].edges {
            o[e] = !o[e];
        }
    }

    fn ceiling(&self) -> usize {
        let n = self.graph.n();
        8 * n * n
    }

    /// Repeatedly flip candidate triangles, updating `cur` and recording the
    /// flipped indices.
    fn run(&self, o: &mut Orientation, cur: &mut [u64], mode: Mode, tie: TieBreak) -> Result<Vec<usize>> {
        let candidate = |o: &Orientation, cur: &[u64], i: usize| -> bool {
            match mode {
                Mode::ToMinimum => self.is_ccw(o, i),
                Mode::Down { target, faces_only } => {
                    (!faces_only || self.tris[i].face) && cur[i] > target[i] && self.is_ccw(o, i)
                }
                Mode::Up { target } => cur[i] < target[i] && self.is_cw(o, i),
            }
        };
        let mut set: BTreeSet<usize> = (0..self.tris.len()).filter(|&i| candidate(o, cur, i)).collect();
        let mut seq = Vec::new();
        let ceiling = self.ceiling();
        loop {
            let next = match tie {
                TieBreak::Smallest => set.pop_first(),
                TieBreak::Largest => set.pop_last(),
            };
            let Some(i) = next else { break };
            if seq.len() >= ceiling {
                return Err(Error::InternalInvariant(format!("flip sequence exceeds {ceiling} flips")));
            }
            self.flip_in_place(o, i);
            match mode {
                Mode::ToMinimum | Mode::Up { .. } => cur[i] += 1,
                Mode::Down { .. } => cur[i] -= 1,
            }
            seq.push(i);
            for &(e, _) in &self.tris[i].edges {
                for &j in &self.by_edge[e] {
                    if candidate(o, cur, j) {
                        set.insert(j);
                    } else {
                        set.remove(&j);
                    }
                }
            }
        }
        Ok(seq)
    }

    fn raw_potential(&self, t: &SchnyderWood, tie: TieBreak) -> Result<Vec<u64>> {
        let mut o = self.orientation(t);
        let mut counts = vec![0; self.tris.len()];
        self.run(&mut o, &mut counts, Mode::ToMinimum, tie)?;
        Ok(counts)
    }

    fn to_vector(&self, raw: &[u64]) -> PotentialVector {
        PotentialVector {
            values: raw.iter().enumerate().filter(|(_, &v)| v > 0).map(|(i, &v)| (self.tris[i].tri, v)).collect(),
        }
    }

    fn raw_vector(&self, p: &PotentialVector) -> Vec<u64> {
        let mut raw = vec![0; self.tris.len()];
        for (t, &v) in &p.values {
            if let Some(&i) = self.lookup.get(t) {
                raw[i] = v;
            }
        }
        raw
    }

    pub fn potential(&self, t: &SchnyderWood) -> Result<PotentialVector> {
        self.potential_with(t, TieBreak::Smallest)
    }

    pub fn potential_with(&self, t: &SchnyderWood, tie: TieBreak) -> Result<PotentialVector> {
        Ok(self.to_vector(&self.raw_potential(t, tie)?))
    }

    /// The lattice minimum: the orientation without counter-clockwise triangles.
    pub fn minimum(&self, roots: Roots) -> Result<SchnyderWood> {
        let t = crate::schnyder::initial_wood(&self.graph, roots.red)?;
        let mut o = self.orientation(&t);
        let mut counts = vec![0; self.tris.len()];
        self.run(&mut o, &mut counts, Mode::ToMinimum, TieBreak::Smallest)?;
        self.wood(&o, roots)
    }

    fn check_pair(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<()> {
        let same_graph = |t: &SchnyderWood| Arc::ptr_eq(t.graph(), &self.graph) || **t.graph() == *self.graph;
        if !same_graph(t1) || !same_graph(t2) || t1.roots() != t2.roots() {
            return Err(Error::RootMismatch);
        }
        Ok(())
    }

    fn stalled(&self, cur: &[u64], target: &[u64]) -> Option<Triangle3> {
        (0..self.tris.len()).find(|&i| cur[i] != target[i]).map(|i| self.tris[i].tri)
    }

    pub fn meet(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<SchnyderWood> {
        self.check_pair(t1, t2)?;
        let p1 = self.raw_potential(t1, TieBreak::Smallest)?;
        let p2 = self.raw_potential(t2, TieBreak::Smallest)?;
        let target: Vec<u64> = p1.iter().zip(&p2).map(|(a, b)| *a.min(b)).collect();
        let mut o = self.orientation(t1);
        let mut cur = p1;
        self.run(&mut o, &mut cur, Mode::Down { target: &target, faces_only: false }, TieBreak::Smallest)?;
        if let Some(t) = self.stalled(&cur, &target) {
            return Err(Error::InternalInvariant(format!("descent to the meet stalled at {t}")));
        }
        self.wood(&o, t1.roots())
    }

    pub fn join(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<SchnyderWood> {
        self.check_pair(t1, t2)?;
        let p1 = self.raw_potential(t1, TieBreak::Smallest)?;
        let p2 = self.raw_potential(t2, TieBreak::Smallest)?;
        let target: Vec<u64> = p1.iter().zip(&p2).map(|(a, b)| *a.max(b)).collect();
        let mut o = self.orientation(t1);
        let mut cur = p1;
        self.run(&mut o, &mut cur, Mode::Up { target: &target }, TieBreak::Smallest)?;
        if let Some(t) = self.stalled(&cur, &target) {
            return Err(Error::InternalInvariant(format!("ascent to the join stalled at {t}")));
        }
        self.wood(&o, t1.roots())
    }

    /// First separating triangle on which the potentials differ.
    pub fn separating_difference(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<Option<Triangle3>> {
        self.check_pair(t1, t2)?;
        let p1 = self.raw_potential(t1, TieBreak::Smallest)?;
        let p2 = self.raw_potential(t2, TieBreak::Smallest)?;
        Ok((0..self.tris.len()).find(|&i| !self.tris[i].face && p1[i] != p2[i]).map(|i| self.tris[i].tri))
    }

    pub fn can_morph_woods(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<bool> {
        Ok(self.separating_difference(t1, t2)?.is_none())
    }

    /// Faces to flip, in order, to turn `t1` into `t2`: counter-clockwise
    /// flips down to the meet followed by clockwise flips up to `t2`.
    pub fn facial_flip_sequence(&self, t1: &SchnyderWood, t2: &SchnyderWood) -> Result<Vec<Triangle3>> {
        if let Some(t) = self.separating_difference(t1, t2)? {
            return Err(Error::NotMorphable(format!("potentials differ on separating triangle {t}")));
        }
        let p1 = self.raw_potential(t1, TieBreak::Smallest)?;
        let p2 = self.raw_potential(t2, TieBreak::Smallest)?;
        let target: Vec<u64> = p1.iter().zip(&p2).map(|(a, b)| *a.min(b)).collect();
        let mut halves = Vec::new();
        for (t, p) in [(t1, p1), (t2, p2)] {
            let mut o = self.orientation(t);
            let mut cur = p;
            let seq = self.run(&mut o, &mut cur, Mode::Down { target: &target, faces_only: true }, TieBreak::Smallest)?;
            if let Some(t) = self.stalled(&cur, &target) {
                return Err(Error::InternalInvariant(format!("facial descent to the meet stalled at {t}")));
            }
            halves.push(seq);
        }
        let back = halves.pop().unwrap();
        let mut seq = halves.pop().unwrap();
        seq.extend(back.into_iter().rev());
        Ok(seq.into_iter().map(|i| self.tris[i].tri).collect())
    }

    pub fn potential_from_values(&self, p: &PotentialVector) -> Vec<u64> {
        self.raw_vector(p)
    }

    /// Counter-clockwise order of an indexed triangle.
    pub fn ccw_order(&self, t: Triangle3) -> Option<[usize; 3]> {
        self.lookup.get(&t).map(|&i| self.tris[i].ccw)
    }
}

pub fn potential(t: &SchnyderWood) -> Result<PotentialVector> {
    Lattice::new(t.graph()).potential(t)
}

pub fn meet(t1: &SchnyderWood, t2: &SchnyderWood) -> Result<SchnyderWood> {
    Lattice::new(t1.graph()).meet(t1, t2)
}

pub fn join(t1: &SchnyderWood, t2: &SchnyderWood) -> Result<SchnyderWood> {
    Lattice::new(t1.graph()).join(t1, t2)
}

pub fn can_morph_woods(t1: &SchnyderWood, t2: &SchnyderWood) -> Result<bool> {
    Lattice::new(t1.graph()).can_morph_woods(t1, t2)
}

pub fn facial_flip_sequence(t1: &SchnyderWood, t2: &SchnyderWood) -> Result<Vec<Triangle3>> {
    Lattice::new(t1.graph()).facial_flip_sequence(t1, t2)
}
