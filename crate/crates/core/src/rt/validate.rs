//! Validity of a representation against its graph, and the graph induced by
//! a set of triangles.

use super::contacts::{boundary_order, checked_contacts, scan, Problem, Scan};
use super::extract::wood_set_from;
use super::{RTRepresentation, RightTriangle, Q};
use crate::error::{Error, Result};
use crate::plane_graph::{build_triangulation, GraphSpec, PlaneTriangulation};
use crate::schnyder::Roots;

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        Some(s) => (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]),
        None => false,
    }
}

/// The single candidate with the smallest (or largest) key.
fn unique_extreme(what: &str, cands: Vec<usize>, key: impl Fn(usize) -> Q, largest: bool) -> Result<usize> {
    let keys: Vec<Q> = cands.iter().map(|&v| key(v)).collect();
    let best = if largest { keys.iter().max() } else { keys.iter().min() };
    let hits: Vec<usize> = cands.iter().zip(&keys).filter(|(_, k)| Some(*k) == best).map(|(&v, _)| v).collect();
    match hits.as_slice() {
        [v] => Ok(*v),
        _ => Err(Error::InvalidRepresentation(vec![format!("{what} is attained by triangles {hits:?}")])),
    }
}

/// Outer triangles as `[red, blue, green]`: the unique one with the highest
/// horizontal side, then among the rest the unique leftmost and the unique
/// rightmost.
fn outer_by_geometry(tris: &[RightTriangle]) -> Result<[usize; 3]> {
    let all: Vec<usize> = (0..tris.len()).collect();
    let red = unique_extreme("highest horizontal side", all.clone(), |v| tris[v].yb.clone(), true)?;
    let rest: Vec<usize> = all.into_iter().filter(|&v| v != red).collect();
    let blue = unique_extreme("smallest left x-coordinate", rest.clone(), |v| tris[v].xl.clone(), false)?;
    let green = unique_extreme("largest right x-coordinate", rest, |v| tris[v].xr.clone(), true)?;
    if blue == green {
        return Err(Error::InvalidRepresentation(vec![format!("triangle {blue} is both leftmost and rightmost")]));
    }
    Ok([red, blue, green])
}

fn scan_error(s: &Scan) -> Option<Error> {
    for p in &s.problems {
        if let Problem::Overlap(u, v) = p {
            return Some(Error::Overlap(*u, *v));
        }
    }
    if s.problems.is_empty() {
        None
    } else {
        Some(Error::InvalidRepresentation(s.problems.iter().map(Problem::describe).collect()))
    }
}

/// The plane triangulation whose rotations follow the contacts along each
/// triangle boundary, with roots read from the outer triangles.
pub fn derive_graph(tris: &[RightTriangle]) -> Result<(PlaneTriangulation, Roots)> {
    let n = tris.len();
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let s = scan(tris);
    if let Some(e) = scan_error(&s) {
        return Err(e);
    }
    let rotations = (0..n).map(|u| boundary_order(tris, &s.contacts, u)).collect();
    let outer = outer_by_geometry(tris)?;
    let g = build_triangulation(GraphSpec { n, rotations, outer })?;
    let roots = Roots::from_red(&g, outer[0])?;
    Ok((g, roots))
}

/// Every way in which `r` fails to be a representation of its graph.
pub fn validate_rt(r: &RTRepresentation) -> Vec<String> {
    let g = r.graph();
    let tris = r.triangles();
    let s = scan(tris);
    let mut d: Vec<String> = s.problems.iter().map(Problem::describe).collect();
    if !d.is_empty() {
        return d;
    }
    for &(u, v) in s.contacts.keys() {
        if !g.has_edge(u, v) {
            d.push(format!("triangles {u} and {v} touch but are not adjacent"));
        }
    }
    for &(u, v) in g.edges() {
        if !s.contacts.contains_key(&(u, v)) {
            d.push(format!("adjacent triangles {u} and {v} do not touch"));
        }
    }
    for &(u, v) in &s.corner_pairs {
        if g.is_inner_edge(u, v) {
            d.push(format!("corners of {u} and {v} coincide without a third corner"));
        }
    }
    if !d.is_empty() {
        return d;
    }
    for u in 0..g.n() {
        if !same_cycle(&boundary_order(tris, &s.contacts, u), g.rotation(u)) {
            d.push(format!("contacts around {u} are not in rotation order"));
        }
    }
    match outer_by_geometry(tris) {
        Ok(o) => {
            let roots = r.roots();
            if o != [roots.red, roots.blue, roots.green] {
                d.push(format!(
                    "outer triangles are {o:?} as [red, blue, green], roots say [{}, {}, {}]",
                    roots.red, roots.blue, roots.green
                ));
            }
        }
        Err(Error::InvalidRepresentation(m)) => d.extend(m),
        Err(e) => d.push(e.to_string()),
    }
    if !d.is_empty() {
        return d;
    }
    match checked_contacts(r, s).and_then(|cm| wood_set_from(r, &cm)) {
        Ok(_) => {}
        Err(Error::InvalidRepresentation(m)) => d.extend(m),
        Err(e) => d.push(e.to_string()),
    }
    d
}
