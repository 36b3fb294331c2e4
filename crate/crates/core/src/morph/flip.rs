//! A facial flip realized by two linear morphs.

use super::adjust::{adjust_in, respects_order_in};
use crate::error::{Error, Result};
use crate::plane_graph::Triangle3;
use crate::rt::construct::construct_unchecked;
use crate::rt::{extract_wood_set, validate_adt, Labeling, RTRepresentation, Q};
use crate::schnyder::{directed_cycle, flip, Color, SchnyderWood};

#[derive(Debug, Clone)]
pub struct FlipMorph {
    /// Degenerate representation whose wood set holds both woods.
    pub middle: RTRepresentation,
    /// Non-degenerate representation of the flipped wood.
    pub end: RTRepresentation,
    pub wood: SchnyderWood,
}

fn checked(t: &SchnyderWood, tau: &Labeling, r: &RTRepresentation) -> Result<RTRepresentation> {
    let d = validate_adt(tau, t);
    if !d.is_empty() {
        return Err(Error::InternalInvariant(format!("flip produced a labeling that is not ADT: {}", d.join("; "))));
    }
    construct_unchecked(t, tau, &r.frame())
}

fn guarded_adjust(tau: &Labeling, t: &SchnyderWood, x: usize, y: &Q, top_g: &Q) -> Result<Labeling> {
    if !respects_order_in(tau, t, x, y, top_g) {
        return Err(Error::InternalInvariant(format!("moving {x} to {y} during a flip breaks the order on its diagonal")));
    }
    adjust_in(tau, t, x, y, top_g)
}

pub fn flip_morph(r: &RTRepresentation, t: &SchnyderWood, c: Triangle3) -> Result<FlipMorph> {
    let g = t.graph();
    if !g.is_face(c) {
        return Err(Error::NotOrientedFace(c));
    }
    let cycle = directed_cycle(t, c).ok_or(Error::NotOrientedFace(c))?;
    let set = extract_wood_set(r)?;
    if !set.contains(t) {
        return Err(Error::WoodMismatch);
    }
    if !set.degenerate_faces.is_empty() {
        return Err(Error::Degenerate);
    }
    let mut by_color = [0usize; 3];
    for i in 0..3 {
        let (v, next) = (cycle[i], cycle[(i + 1) % 3]);
        let (_, col) = t.edge(v, next).expect("cycle edges exist");
        by_color[col.index()] = v;
    }
    let [cr, cg, cb] = [Color::Red, Color::Green, Color::Blue].map(|col| by_color[col.index()]);
    let clockwise = !g.cycle_is_ccw(cycle[0], cycle[1], cycle[2]);
    let top_g = r.frame().green.yt;
    let tau1 = r.tau();
    let tau2 = guarded_adjust(&tau1, t, cg, tau1.get(cb), &top_g)?;
    let tc = flip(t, c)?;
    let bound = if clockwise {
        std::iter::once(cr).chain(t.children(cr, Color::Green)).map(|u| tau2.get(u).clone()).max()
    } else {
        std::iter::once(t.red(cb)).chain(t.children(cb, Color::Green)).map(|u| tau2.get(u).clone()).min()
    }
    .expect("set is non-empty");
    let y = (tau2.get(cg) + bound) / Q::from_integer(2.into());
    let tau3 = guarded_adjust(&tau2, &tc, cg, &y, &top_g)?;
    let middle = checked(t, &tau2, r)?;
    let end = checked(&tc, &tau3, r)?;
    Ok(FlipMorph { middle, end, wood: tc })
}
