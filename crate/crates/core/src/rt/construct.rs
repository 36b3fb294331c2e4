//! ADT-labelings and the unique representation they determine.

use super::{q, OuterFrame, RTRepresentation, RightTriangle, Q};
use crate::error::{Error, Result};
use crate::schnyder::{derived_dag, Color, SchnyderWood};

/// y-coordinate of the horizontal side of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling(pub Vec<Q>);

impl Labeling {
    pub fn get(&self, v: usize) -> &Q {
        &self.0[v]
    }

    pub fn set(&mut self, v: usize, y: Q) {
        self.0[v] = y;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Whether `tail -> head` lies on a directed facial cycle of the given
/// rotational sense.
fn in_oriented_face(t: &SchnyderWood, tail: usize, head: usize, clockwise: bool) -> bool {
    let g = t.graph();
    let third = if clockwise { g.left_third(head, tail) } else { g.left_third(tail, head) };
    let forward = |u: usize, v: usize| t.edge(u, v).is_some_and(|(tl, _)| tl == u);
    forward(head, third) && forward(third, tail)
}

/// Conditions of an ADT-labeling of `DAG_r(t)`; one entry per violation.
pub fn validate_adt(tau: &Labeling, t: &SchnyderWood) -> Vec<String> {
    let g = t.graph();
    let mut d = Vec::new();
    if tau.len() != g.n() {
        return vec![format!("labeling has {} values for {} vertices", tau.len(), g.n())];
    }
    for v in g.inner_vertices() {
        for c in Color::ALL {
            let p = t.parent(v, c);
            // direction in DAG_r: red keeps v -> p, green and blue become p -> v
            let (lo, hi) = if c == Color::Red { (v, p) } else { (p, v) };
            let (a, b) = (tau.get(lo), tau.get(hi));
            if a > b {
                d.push(format!("condition 1: tau({lo}) > tau({hi}) on {c} edge {v} -> {p}"));
            } else if a == b {
                let allowed = match c {
                    Color::Red => false,
                    Color::Green => in_oriented_face(t, v, p, true),
                    Color::Blue => in_oriented_face(t, v, p, false),
                };
                if !allowed {
                    d.push(format!("condition 2: tau({lo}) = tau({hi}) on {c} edge {v} -> {p}"));
                }
            }
        }
        let (vb, vg) = (t.blue(v), t.green(v));
        if tau.get(vb) == tau.get(v) && tau.get(v) == tau.get(vg) {
            // <v, v_g, u1> clockwise, <v, v_b, u2> counter-clockwise
            let u1 = g.left_third(vg, v);
            let u2 = g.left_third(v, vb);
            if u1 == u2 {
                d.push(format!("condition 3: vertex {v} has equal neighbors {u1} on both sides"));
            }
        }
    }
    d
}

/// Outer triangles in the standard position: corners at `(0,0)`,
/// `(0,n-2)`, `(n-2,n-2)` and unit free sides.
pub fn canonical_frame(n: usize) -> OuterFrame {
    let m = n as i64 - 2;
    OuterFrame {
        blue: RightTriangle::from_ints(-1, 0, 0, m),
        green: RightTriangle::from_ints(0, m, 0, m),
        red: RightTriangle::from_ints(0, m, m, m + 1),
    }
}

/// Strict labeling from the smallest topological order of `DAG_r(t)`,
/// with the outer vertices at `0, 0, n-2`.
pub fn canonical_labeling(t: &SchnyderWood) -> Result<Labeling> {
    let g = t.graph();
    let order = derived_dag(t, Color::Red)?.topological_order()?;
    let mut tau = vec![q(0); g.n()];
    let mut k = 1;
    for v in order {
        if !g.is_outer(v) {
            tau[v] = q(k);
            k += 1;
        }
    }
    tau[t.roots().red] = q(g.n() as i64 - 2);
    Ok(Labeling(tau))
}

/// The unique representation of `t` with horizontal sides at `tau` and the
/// given outer triangles.
pub fn construct_rt(t: &SchnyderWood, tau: &Labeling, frame: &OuterFrame) -> Result<RTRepresentation> {
    let d = validate_adt(tau, t);
    if !d.is_empty() {
        return Err(Error::BadLabeling(d));
    }
    construct_unchecked(t, tau, frame)
}

/// Construction without re-validating the labeling.
pub(crate) fn construct_unchecked(t: &SchnyderWood, tau: &Labeling, frame: &OuterFrame) -> Result<RTRepresentation> {
    let g = t.graph();
    let roots = t.roots();
    let mut fd = Vec::new();
    for (name, tri, v) in [("X_r", &frame.red, roots.red), ("X_g", &frame.green, roots.green), ("X_b", &frame.blue, roots.blue)] {
        if tri.yb != *tau.get(v) {
            fd.push(format!("horizontal side of {name} is not at tau({v})"));
        }
        if !tri.is_proper() {
            fd.push(format!("{name} has a side of non-positive length"));
        }
    }
    if !fd.is_empty() {
        return Err(Error::BadFrame(fd.join("; ")));
    }
    let mut tris: Vec<Option<RightTriangle>> = vec![None; g.n()];
    tris[roots.red] = Some(frame.red.clone());
    tris[roots.green] = Some(frame.green.clone());
    tris[roots.blue] = Some(frame.blue.clone());
    for v in derived_dag(t, Color::Red)?.topological_order()? {
        if g.is_outer(v) {
            continue;
        }
        let (vb, vg) = (t.blue(v), t.green(v));
        let missing = || Error::InternalInvariant(format!("parent of {v} not placed before it"));
        let xl = tris[vb].as_ref().ok_or_else(missing)?.xr.clone();
        let dg = tris[vg].as_ref().ok_or_else(missing)?;
        let xr = dg.diagonal_x(tau.get(v));
        let tri = RightTriangle::new(xl, xr, tau.get(v).clone(), tau.get(t.red(v)).clone());
        if !tri.is_proper() {
            return Err(Error::InternalInvariant(format!("triangle {v} has a side of non-positive length")));
        }
        tris[v] = Some(tri);
    }
    RTRepresentation::new(g.clone(), roots, tris.into_iter().map(Option::unwrap).collect())
}
