//! Schnyder woods read off a representation.

use std::collections::BTreeMap;

use super::contacts::{contacts, ContactMap, Corner, Touch};
use super::{Labeling, RTRepresentation};
use crate::error::{Error, Result};
use crate::plane_graph::Triangle3;
use crate::schnyder::{flip, Color, SchnyderWood, WoodEdge, WoodSpec};

/// All woods of a representation: a base wood plus the faces at
/// triple-corner points, each of which may be flipped independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WoodSet {
    pub base: SchnyderWood,
    pub degenerate_faces: Vec<Triangle3>,
}

type EdgeState = (usize, Color);
type EdgeStates = BTreeMap<(usize, usize), EdgeState>;

fn edge_states(t: &SchnyderWood) -> EdgeStates {
    let mut m = BTreeMap::new();
    for v in t.graph().inner_vertices() {
        for c in Color::ALL {
            let p = t.parent(v, c);
            m.insert((v.min(p), v.max(p)), (v, c));
        }
    }
    m
}

fn corner_color(c: Corner) -> Color {
    match c {
        Corner::Left => Color::Blue,
        Corner::Right => Color::Green,
        Corner::Top => Color::Red,
    }
}

impl WoodSet {
    pub fn len(&self) -> usize {
        1 << self.degenerate_faces.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Member obtained by flipping the faces selected by `bits`.
    pub fn member(&self, bits: u64) -> Result<SchnyderWood> {
        let mut t = self.base.clone();
        for (i, f) in self.degenerate_faces.iter().enumerate() {
            if bits >> i & 1 == 1 {
                t = flip(&t, *f)?;
            }
        }
        Ok(t)
    }

    /// States of the edges of each degenerate face in the base and flipped option.
    fn options(&self) -> Result<Vec<[EdgeStates; 2]>> {
        let base = edge_states(&self.base);
        let mut out = Vec::new();
        for f in &self.degenerate_faces {
            let flipped = edge_states(&flip(&self.base, *f)?);
            let mut o = [BTreeMap::new(), BTreeMap::new()];
            for key in f.edges() {
                o[0].insert(key, base[&key]);
                o[1].insert(key, flipped[&key]);
            }
            out.push(o);
        }
        Ok(out)
    }

    pub fn contains(&self, t: &SchnyderWood) -> bool {
        if t.roots() != self.base.roots() || t.graph() != self.base.graph() {
            return false;
        }
        let (Ok(opts), states) = (self.options(), edge_states(t)) else { return false };
        let base = edge_states(&self.base);
        let mut in_face = BTreeMap::new();
        for (i, f) in self.degenerate_faces.iter().enumerate() {
            for key in f.edges() {
                in_face.insert(key, i);
            }
        }
        for o in &opts {
            let matches = |k: usize| o[k].iter().all(|(key, s)| states.get(key) == Some(s));
            if !matches(0) && !matches(1) {
                return false;
            }
        }
        base.iter().all(|(key, s)| in_face.contains_key(key) || states.get(key) == Some(s))
    }
}

/// Union-find with parity for xor constraints between face flip bits.
struct Parity {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Parity { parent: (0..n).collect(), parity: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        if self.parent[x] == x {
            return (x, 0);
        }
        let (r, p) = self.find(self.parent[x]);
        self.parent[x] = r;
        self.parity[x] ^= p;
        (r, self.parity[x])
    }

    fn union(&mut self, a: usize, b: usize, p: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == p;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ p;
        true
    }
}

/// A wood belonging to both sets, if any.
pub fn common_wood(a: &WoodSet, b: &WoodSet) -> Result<Option<SchnyderWood>> {
    if a.base.roots() != b.base.roots() || a.base.graph() != b.base.graph() {
        return Ok(None);
    }
    let (oa, ob) = (a.options()?, b.options()?);
    let (ba, bb) = (edge_states(&a.base), edge_states(&b.base));
    let face_of = |set: &WoodSet| {
        let mut m = BTreeMap::new();
        for (i, f) in set.degenerate_faces.iter().enumerate() {
            for key in f.edges() {
                m.insert(key, i);
            }
        }
        m
    };
    let (fa, fb) = (face_of(a), face_of(b));
    let ka = a.degenerate_faces.len();
    let ground = ka + b.degenerate_faces.len();
    let mut uf = Parity::new(ground + 1);
    for (key, sa0) in &ba {
        let states_a: Vec<EdgeState> = match fa.get(key) {
            Some(&i) => vec![oa[i][0][key], oa[i][1][key]],
            None => vec![*sa0],
        };
        let states_b: Vec<EdgeState> = match fb.get(key) {
            Some(&j) => vec![ob[j][0][key], ob[j][1][key]],
            None => vec![bb[key]],
        };
        let var_a = fa.get(key).copied().unwrap_or(ground);
        let var_b = fb.get(key).map(|j| ka + j).unwrap_or(ground);
        let mut relations = Vec::new();
        for (x, sa) in states_a.iter().enumerate() {
            for (y, sb) in states_b.iter().enumerate() {
                if sa == sb {
                    relations.push((x ^ y) as u8);
                }
            }
        }
        relations.dedup();
        match relations.as_slice() {
            [] => return Ok(None),
            [p] => {
                if !uf.union(var_a, var_b, *p) {
                    return Ok(None);
                }
            }
            _ => return Err(Error::InternalInvariant("edge with ambiguous state".into())),
        }
    }
    let mut bits = 0u64;
    let (rg, pg) = uf.find(ground);
    for i in 0..ka {
        let (r, p) = uf.find(i);
        let value = if r == rg { p ^ pg } else { p };
        if value == 1 {
            bits |= 1 << i;
        }
    }
    Ok(Some(a.member(bits)?))
}

/// Corner contacts give colors: left corner blue, right corner green, top
/// corner red, oriented from the corner owner to the side owner. Where
/// three corners meet, the option orienting that face counter-clockwise is
/// taken.
pub fn extract_wood_set(r: &RTRepresentation) -> Result<WoodSet> {
    wood_set_from(r, &contacts(r)?)
}

pub(crate) fn wood_set_from(r: &RTRepresentation, cm: &ContactMap) -> Result<WoodSet> {
    let g = r.graph();
    let mut edges = Vec::new();
    for (&(u, v), c) in &cm.contacts {
        if !g.is_inner_edge(u, v) {
            continue;
        }
        if let Touch::CornerOnSide { corner_owner, corner, side_owner, .. } = c.touch {
            edges.push(WoodEdge { tail: corner_owner, head: side_owner, color: corner_color(corner) });
        }
    }
    let mut faces = Vec::new();
    for p in &cm.degenerate_points {
        edges.push(WoodEdge { tail: p.top, head: p.left, color: Color::Red });
        edges.push(WoodEdge { tail: p.left, head: p.right, color: Color::Blue });
        edges.push(WoodEdge { tail: p.right, head: p.top, color: Color::Green });
        faces.push(Triangle3::new(p.top, p.left, p.right));
    }
    faces.sort_unstable();
    let spec = WoodSpec { roots: r.roots(), edges };
    let base = SchnyderWood::from_spec(g.clone(), &spec).map_err(|e| match e {
        Error::InvalidWood(d) => Error::InvalidRepresentation(d),
        e => e,
    })?;
    Ok(WoodSet { base, degenerate_faces: faces })
}

pub fn labeling_from_rep(r: &RTRepresentation, t: &SchnyderWood) -> Result<Labeling> {
    if !extract_wood_set(r)?.contains(t) {
        return Err(Error::WoodMismatch);
    }
    Ok(r.tau())
}
