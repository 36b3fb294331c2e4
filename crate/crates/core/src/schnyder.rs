//! Schnyder woods: computation, validation, derived DAGs and flips.
//!
//! Around an inner vertex the edges appear counter-clockwise as
//! outgoing red, incoming green*, outgoing blue, incoming red*,
//! outgoing green, incoming blue*. Outer vertex `X_c` only receives edges
//! of color `c`. The outer vertices listed counter-clockwise are
//! `X_r, X_b, X_g`.

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane_graph::{PlaneTriangulation, Triangle3};

pub const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Next outgoing color counter-clockwise around an inner vertex.
    pub fn ccw_next(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Green,
            Color::Green => Color::Red,
        }
    }

    /// Outgoing color directly clockwise of an incoming edge of this color.
    fn out_before_in(self) -> Color {
        match self {
            Color::Green => Color::Red,
            Color::Red => Color::Blue,
            Color::Blue => Color::Green,
        }
    }

    /// Color of the incoming edges directly counter-clockwise of this outgoing color.
    fn in_after_out(self) -> Color {
        match self {
            Color::Red => Color::Green,
            Color::Blue => Color::Red,
            Color::Green => Color::Blue,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Roots {
    pub red: usize,
    pub green: usize,
    pub blue: usize,
}

impl Roots {
    /// Roles forced by the red root and the counter-clockwise outer triple.
    pub fn from_red(g: &PlaneTriangulation, red: usize) -> Result<Roots> {
        let outer = g.outer();
        let i = outer.iter().position(|&v| v == red).ok_or(Error::BadRoot(red))?;
        Ok(Roots { red, blue: outer[(i + 1) % 3], green: outer[(i + 2) % 3] })
    }

    pub fn get(&self, c: Color) -> usize {
        match c {
            Color::Red => self.red,
            Color::Green => self.green,
            Color::Blue => self.blue,
        }
    }

    pub fn role(&self, v: usize) -> Option<Color> {
        Color::ALL.into_iter().find(|&c| self.get(c) == v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WoodEdge {
    pub tail: usize,
    pub head: usize,
    pub color: Color,
}

/// Raw wood data as stored in wood JSON files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WoodSpec {
    pub roots: Roots,
    pub edges: Vec<WoodEdge>,
}

#[derive(Debug, Clone)]
pub struct SchnyderWood {
    graph: Arc<PlaneTriangulation>,
    roots: Roots,
    /// Out-neighbors of inner vertices indexed by `Color::index`; `NONE` for outer vertices.
    parents: Vec<[usize; 3]>,
}

impl PartialEq for SchnyderWood {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
            && self.roots == other.roots
            && self.parents == other.parents
    }
}

impl Eq for SchnyderWood {}

impl SchnyderWood {
    pub fn graph(&self) -> &Arc<PlaneTriangulation> {
        &self.graph
    }

    pub fn roots(&self) -> Roots {
        self.roots
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Head of the outgoing `c` edge of inner vertex `v`.
    pub fn parent(&self, v: usize, c: Color) -> usize {
        self.parents[v][c.index()]
    }

    pub fn red(&self, v: usize) -> usize {
        self.parent(v, Color::Red)
    }

    pub fn green(&self, v: usize) -> usize {
        self.parent(v, Color::Green)
    }

    pub fn blue(&self, v: usize) -> usize {
        self.parent(v, Color::Blue)
    }

    pub fn is_inner(&self, v: usize) -> bool {
        !self.graph.is_outer(v)
    }

    /// Tail and color of the inner edge `u`-`v`, if it is one.
    pub fn edge(&self, u: usize, v: usize) -> Option<(usize, Color)> {
        for (tail, head) in [(u, v), (v, u)] {
            if self.is_inner(tail) {
                if let Some(c) = Color::ALL.into_iter().find(|&c| self.parent(tail, c) == head) {
                    return Some((tail, c));
                }
            }
        }
        None
    }

    /// Tails of the incoming `c` edges of `v`, counter-clockwise.
    pub fn children(&self, v: usize, c: Color) -> Vec<usize> {
        self.graph
            .rotation(v)
            .iter()
            .copied()
            .filter(|&u| self.is_inner(u) && self.parent(u, c) == v)
            .collect()
    }

    pub fn to_spec(&self) -> WoodSpec {
        let mut edges = Vec::new();
        for v in self.graph.inner_vertices() {
            for c in Color::ALL {
                edges.push(WoodEdge { tail: v, head: self.parent(v, c), color: c });
            }
        }
        WoodSpec { roots: self.roots, edges }
    }

    pub fn from_spec(graph: Arc<PlaneTriangulation>, spec: &WoodSpec) -> Result<SchnyderWood> {
        let diags = validate_wood_spec(&graph, spec);
        if !diags.is_empty() {
            return Err(Error::InvalidWood(diags));
        }
        let mut parents = vec![[NONE; 3]; graph.n()];
        for e in &spec.edges {
            parents[e.tail][e.color.index()] = e.head;
        }
        Ok(SchnyderWood { graph, roots: spec.roots, parents })
    }

    /// Out-neighbor lists of every vertex, ignoring colors.
    pub fn out_lists(&self) -> Vec<Vec<usize>> {
        self.parents
            .iter()
            .map(|p| if p[0] == NONE { Vec::new() } else { p.to_vec() })
            .collect()
    }
}

/// Check every wood invariant on raw edge data.
pub fn validate_wood_spec(g: &PlaneTriangulation, spec: &WoodSpec) -> Vec<String> {
    let mut diags = Vec::new();
    let n = g.n();
    let r = spec.roots;
    match Roots::from_red(g, r.red) {
        Ok(expected) if expected == r => {}
        _ => diags.push(format!(
            "roots red={}, green={}, blue={} are not the outer face in counter-clockwise order red, blue, green",
            r.red, r.green, r.blue
        )),
    }
    let mut out: Vec<[Option<usize>; 3]> = vec![[None; 3]; n];
    let mut covered = std::collections::HashSet::new();
    let mut out_degree = vec![0usize; n];
    let mut color_clash = vec![false; n];
    let mut color_diags = Vec::new();
    for e in &spec.edges {
        if e.tail >= n || e.head >= n || !g.has_edge(e.tail, e.head) {
            diags.push(format!("{} -> {} is not an edge", e.tail, e.head));
            continue;
        }
        if !g.is_inner_edge(e.tail, e.head) {
            diags.push(format!("outer edge {}-{} must not be oriented", e.tail, e.head));
            continue;
        }
        if !covered.insert((e.tail.min(e.head), e.tail.max(e.head))) {
            diags.push(format!("edge {}-{} listed twice", e.tail, e.head));
            continue;
        }
        out_degree[e.tail] += 1;
        let slot = &mut out[e.tail][e.color.index()];
        if slot.is_some() {
            color_clash[e.tail] = true;
            color_diags.push(format!("vertex {} has two outgoing {} edges", e.tail, e.color));
        }
        *slot = Some(e.head);
    }
    for &(u, v) in g.edges() {
        if g.is_inner_edge(u, v) && !covered.contains(&(u, v)) {
            diags.push(format!("inner edge {u}-{v} is not oriented"));
        }
    }
    if !diags.is_empty() {
        return diags;
    }
    diags = color_diags;
    let color_of = |tail: usize, head: usize| -> Option<Color> {
        Color::ALL.into_iter().find(|c| out[tail][c.index()] == Some(head))
    };
    for v in 0..n {
        if g.is_outer(v) {
            if out_degree[v] != 0 {
                diags.push(format!("outer vertex {v} has out-degree {}", out_degree[v]));
            }
            if let Some(c) = r.role(v) {
                for &u in g.rotation(v) {
                    if let Some(cu) = color_of(u, v) {
                        if cu != c {
                            diags.push(format!("edge {u} -> {v} into the {c} root is {cu}"));
                        }
                    }
                }
            }
            continue;
        }
        if out_degree[v] != 3 {
            diags.push(format!("inner vertex {v} has out-degree {}", out_degree[v]));
            continue;
        }
        if color_clash[v] {
            continue;
        }
        // expected cyclic pattern starting at the red out-edge
        let rot = g.rotation(v);
        let k = rot.len();
        let start = rot.iter().position(|&u| out[v][0] == Some(u)).unwrap();
        let mut expected_out = Color::Blue;
        let mut expected_in = Color::Green;
        let mut ok = true;
        for i in 1..k {
            let u = rot[(start + i) % k];
            if let Some(c) = color_of(v, u) {
                ok &= c == expected_out;
                expected_in = c.in_after_out();
                expected_out = c.ccw_next();
            } else {
                ok &= color_of(u, v) == Some(expected_in);
            }
        }
        if !ok || expected_out != Color::Red {
            diags.push(format!(
                "edges around vertex {v} do not follow the cyclic pattern out-red, in-green, out-blue, in-red, out-green, in-blue"
            ));
        }
    }
    diags
}

pub fn validate_wood(t: &SchnyderWood) -> Vec<String> {
    validate_wood_spec(&t.graph, &t.to_spec())
}

/// Schnyder wood obtained from a canonical ordering peeled from the red root.
pub fn initial_wood(g: &Arc<PlaneTriangulation>, red_root: usize) -> Result<SchnyderWood> {
    let n = g.n();
    if !g.is_outer(red_root) {
        return Err(Error::BadRoot(red_root));
    }
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let roots = Roots::from_red(g, red_root)?;
    let mut parents = vec![[NONE; 3]; n];
    let mut contour = vec![roots.blue, roots.red, roots.green];
    let mut on_contour = vec![false; n];
    for &v in &contour {
        on_contour[v] = true;
    }
    let mut exposed_by = vec![NONE; n];
    let (xb, xg) = (roots.blue, roots.green);
    for _ in 0..n - 2 {
        let mut index = vec![NONE; n];
        for (i, &v) in contour.iter().enumerate() {
            index[v] = i;
        }
        let has_chord = |v: usize| {
            let i = index[v];
            g.rotation(v).iter().any(|&w| {
                on_contour[w] && index[w].abs_diff(i) > 1 && !((v == xb || v == xg) && (w == xb || w == xg))
            })
        };
        let pick = contour[1..contour.len() - 1]
            .iter()
            .copied()
            .filter(|&v| !has_chord(v))
            .min()
            .ok_or_else(|| Error::InternalInvariant("canonical ordering stalled".into()))?;
        let i = index[pick];
        let (p, s) = (contour[i - 1], contour[i + 1]);
        let exposed = g.wedge(pick, p, s);
        if pick != roots.red {
            parents[pick][Color::Red.index()] = exposed_by[pick];
            parents[pick][Color::Blue.index()] = p;
            parents[pick][Color::Green.index()] = s;
        }
        for &u in &exposed {
            if on_contour[u] {
                return Err(Error::InternalInvariant(format!("vertex {u} exposed twice")));
            }
            on_contour[u] = true;
            exposed_by[u] = pick;
        }
        on_contour[pick] = false;
        contour.splice(i..=i, exposed);
    }
    let t = SchnyderWood { graph: g.clone(), roots, parents };
    let diags = validate_wood(&t);
    if !diags.is_empty() {
        return Err(Error::InternalInvariant(format!("initial wood invalid: {}", diags.join("; "))));
    }
    Ok(t)
}

/// The unique coloring of a 3-orientation, found by propagating colors
/// from the edges into the outer vertices.
pub fn color_orientation(g: &Arc<PlaneTriangulation>, roots: Roots, out: &[Vec<usize>]) -> Result<SchnyderWood> {
    let n = g.n();
    let mut parents = vec![[NONE; 3]; n];
    let mut done = vec![false; n];
    let mut queue = VecDeque::new();
    let bad = |msg: String| Error::InvalidWood(vec![msg]);
    for (v, o) in out.iter().enumerate().take(n) {
        if g.is_outer(v) {
            if !o.is_empty() {
                return Err(bad(format!("outer vertex {v} has outgoing edges")));
            }
        } else if o.len() != 3 {
            return Err(bad(format!("inner vertex {v} has out-degree {}", o.len())));
        }
    }
    // `v` has out-edge `to` of color `c`; assign the rest counter-clockwise
    let assign = |parents: &mut Vec<[usize; 3]>, v: usize, to: usize, c: Color| {
        let rot = g.rotation(v);
        let k = rot.len();
        let start = g.position(v, to).unwrap();
        let mut color = c;
        for i in 0..k {
            let u = rot[(start + i) % k];
            if out[v].contains(&u) {
                parents[v][color.index()] = u;
                color = color.ccw_next();
            }
        }
    };
    for v in g.inner_vertices() {
        if let Some(&h) = out[v].iter().find(|&&h| g.is_outer(h)) {
            let c = roots.role(h).unwrap();
            assign(&mut parents, v, h, c);
            done[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        // colored out-edges determine the neighbor's coloring from its side
        for c in Color::ALL {
            let w = parents[v][c.index()];
            if g.is_outer(w) || done[w] {
                continue;
            }
            // nearest out-edge of w clockwise from the incoming edge
            let mut u = g.pred(w, v);
            while !out[w].contains(&u) {
                u = g.pred(w, u);
            }
            assign(&mut parents, w, u, c.out_before_in());
            done[w] = true;
            queue.push_back(w);
        }
        // incoming edges of v determine their tails
        for &u in g.rotation(v) {
            if done[u] || g.is_outer(u) || !out[u].contains(&v) {
                continue;
            }
            // the edge u -> v is incoming at v; its color is fixed by the
            // nearest outgoing edge of v clockwise
            let mut y = g.pred(v, u);
            while !parents[v].contains(&y) {
                y = g.pred(v, y);
            }
            let cy = Color::ALL.into_iter().find(|&c| parents[v][c.index()] == y).unwrap();
            let cin = cy.in_after_out();
            assign(&mut parents, u, v, cin);
            done[u] = true;
            queue.push_back(u);
        }
    }
    if let Some(v) = g.inner_vertices().find(|&v| !done[v]) {
        return Err(bad(format!("vertex {v} could not be colored")));
    }
    let t = SchnyderWood { graph: g.clone(), roots, parents };
    let diags = validate_wood(&t);
    if !diags.is_empty() {
        return Err(Error::InvalidWood(diags));
    }
    Ok(t)
}

/// Directed graph on all vertices; used for the acyclic orientations
/// derived from a wood.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    pub succ: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ.iter().enumerate().flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    /// Lexicographically smallest topological order.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for (_, v) in self.edges() {
            indeg[v] += 1;
        }
        let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(u)) = heap.pop() {
            order.push(u);
            for &v in &self.succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
        if order.len() != n {
            return Err(Error::InternalInvariant("derived digraph has a cycle".into()));
        }
        Ok(order)
    }
}

/// Keep the edges of color `kept` and reverse the other two classes.
/// Only inner edges take part.
pub fn derived_dag(t: &SchnyderWood, kept: Color) -> Result<Digraph> {
    if kept == Color::Green {
        return Err(Error::InternalInvariant("derived DAGs keep red or blue".into()));
    }
    let n = t.n();
    let mut succ = vec![Vec::new(); n];
    for v in t.graph.inner_vertices() {
        for c in Color::ALL {
            let p = t.parent(v, c);
            if c == kept {
                succ[v].push(p);
            } else {
                succ[p].push(v);
            }
        }
    }
    for s in succ.iter_mut() {
        s.sort_unstable();
    }
    let d = Digraph { succ };
    d.topological_order()?;
    Ok(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Cw,
    Ccw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    FacesOnly,
    AllTriangles,
}

/// The cycle `a -> b -> c -> a` if the triangle is a directed cycle in `t`.
pub fn directed_cycle(t: &SchnyderWood, tri: Triangle3) -> Option<[usize; 3]> {
    let [a, b, c] = tri.0;
    let dir = |u: usize, v: usize| t.edge(u, v).map(|(tail, _)| tail == u);
    match (dir(a, b)?, dir(b, c)?, dir(c, a)?) {
        (true, true, true) => Some([a, b, c]),
        (false, false, false) => Some([a, c, b]),
        _ => None,
    }
}

pub fn oriented_triangles(t: &SchnyderWood, scope: Scope) -> Vec<(Triangle3, Direction)> {
    let g = &t.graph;
    g.triangles()
        .into_iter()
        .filter(|&tri| scope == Scope::AllTriangles || g.is_face(tri))
        .filter_map(|tri| {
            let [a, b, c] = directed_cycle(t, tri)?;
            let d = if g.cycle_is_ccw(a, b, c) { Direction::Ccw } else { Direction::Cw };
            Some((tri, d))
        })
        .collect()
}

/// Reverse an oriented triangle. Facial flips recolor locally: every
/// vertex of the cycle keeps the color of the out-edge it loses on its new
/// out-edge. Separating flips recolor the whole new 3-orientation.
pub fn flip(t: &SchnyderWood, tri: Triangle3) -> Result<SchnyderWood> {
    let cycle = directed_cycle(t, tri).ok_or(Error::NotOriented(tri))?;
    if t.graph.is_face(tri) {
        let mut parents = t.parents.clone();
        for i in 0..3 {
            let (prev, v, next) = (cycle[(i + 2) % 3], cycle[i], cycle[(i + 1) % 3]);
            let c = Color::ALL.into_iter().find(|&c| t.parent(v, c) == next).unwrap();
            parents[v][c.index()] = prev;
        }
        return Ok(SchnyderWood { graph: t.graph.clone(), roots: t.roots, parents });
    }
    let mut out = t.out_lists();
    for i in 0..3 {
        let (prev, v, next) = (cycle[(i + 2) % 3], cycle[i], cycle[(i + 1) % 3]);
        for h in out[v].iter_mut() {
            if *h == next {
                *h = prev;
            }
        }
    }
    color_orientation(&t.graph, t.roots, &out)
        .map_err(|e| Error::InternalInvariant(format!("recoloring after flip of {tri} failed: {e}")))
}
