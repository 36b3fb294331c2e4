//! Exact contact detection between right triangles.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{Point, RTRepresentation, RightTriangle, Q};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Corner {
    Left,
    Right,
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Corner {
    /// The side a corner of another triangle may rest on.
    pub fn compatible_side(self) -> Side {
        match self {
            Corner::Left => Side::Vertical,
            Corner::Right => Side::Diagonal,
            Corner::Top => Side::Horizontal,
        }
    }

    /// The two sides ending in this corner.
    pub fn sides(self) -> [Side; 2] {
        match self {
            Corner::Left => [Side::Horizontal, Side::Diagonal],
            Corner::Right => [Side::Horizontal, Side::Vertical],
            Corner::Top => [Side::Vertical, Side::Diagonal],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Touch {
    CornerOnSide { corner_owner: usize, corner: Corner, side_owner: usize, side: Side },
    Corners { a: usize, ca: Corner, b: usize, cb: Corner },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contact {
    pub point: Point,
    pub touch: Touch,
}

/// A point where the top corner, the left corner and the right corner of
/// three triangles coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneratePoint {
    pub point: Point,
    pub top: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactMap {
    /// Keyed by sorted vertex pair.
    pub contacts: BTreeMap<(usize, usize), Contact>,
    pub degenerate_points: Vec<DegeneratePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Problem {
    Improper(usize),
    Overlap(usize, usize),
    Incompatible(usize, usize),
    /// Corners of these triangles meet in a point without forming a
    /// top/left/right triple.
    CornerCluster(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct Scan {
    pub contacts: BTreeMap<(usize, usize), Contact>,
    pub degenerate_points: Vec<DegeneratePoint>,
    /// Pairs whose corners coincide with no third corner present.
    pub corner_pairs: Vec<(usize, usize)>,
    pub problems: Vec<Problem>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Loc {
    Corner(Corner),
    Side(Side),
    Inside,
    Outside,
}

fn cross(o: &Point, a: &Point, b: &Point) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

pub fn locate(t: &RightTriangle, p: &Point) -> Loc {
    for c in [Corner::Left, Corner::Right, Corner::Top] {
        if t.corner(c) == *p {
            return Loc::Corner(c);
        }
    }
    let (x, y) = p;
    if *x > t.xr || *y < t.yb {
        return Loc::Outside;
    }
    let d = cross(&t.corner(Corner::Left), &t.corner(Corner::Top), p);
    if d > Q::from_integer(0.into()) {
        return Loc::Outside;
    }
    let zero = Q::from_integer(0.into());
    if *y == t.yb {
        Loc::Side(Side::Horizontal)
    } else if *x == t.xr {
        Loc::Side(Side::Vertical)
    } else if d == zero {
        Loc::Side(Side::Diagonal)
    } else {
        Loc::Inside
    }
}

/// Some edge line of `a` has all of `b` strictly outside.
fn separated(a: &[Point; 3], b: &[Point; 3]) -> bool {
    let zero = Q::from_integer(0.into());
    (0..3).any(|i| {
        let (p, q) = (&a[i], &a[(i + 1) % 3]);
        b.iter().all(|r| cross(p, q, r) < zero)
    })
}

/// Intersection polygon of two closed triangles, with repeated points removed.
fn clip(a: &RightTriangle, b: &RightTriangle) -> Vec<Point> {
    let zero = Q::from_integer(0.into());
    let mut poly: Vec<Point> = a.corners().to_vec();
    let bc = b.corners();
    for i in 0..3 {
        if poly.is_empty() {
            break;
        }
        let (p0, p1) = (&bc[i], &bc[(i + 1) % 3]);
        let mut out = Vec::new();
        for k in 0..poly.len() {
            let cur = &poly[k];
            let prev = &poly[(k + poly.len() - 1) % poly.len()];
            let dc = cross(p0, p1, cur);
            let dp = cross(p0, p1, prev);
            let cut = || {
                let t = &dp / (&dp - &dc);
                (&prev.0 + (&cur.0 - &prev.0) * &t, &prev.1 + (&cur.1 - &prev.1) * &t)
            };
            if dc >= zero {
                if dp < zero {
                    out.push(cut());
                }
                out.push(cur.clone());
            } else if dp > zero {
                out.push(cut());
            }
        }
        poly = out;
    }
    let mut distinct: Vec<Point> = Vec::new();
    for p in poly {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    distinct
}

#[derive(Debug, PartialEq)]
enum Meeting {
    Point(Point),
    Overlap,
}

/// Signed distance-like value of `p` outside each side of `t`: horizontal,
/// vertical, diagonal. Non-negative means on the side line or beyond it.
fn outside(t: &RightTriangle, p: &Point) -> [Q; 3] {
    let d = (&p.1 - &t.yb) * t.width() - (&p.0 - &t.xl) * t.height();
    [&t.yb - &p.1, &p.0 - &t.xr, d]
}

/// Intersection of two closed proper triangles through a separating side.
fn meet_proper(a: &RightTriangle, b: &RightTriangle) -> Option<Meeting> {
    let zero = Q::from_integer(0.into());
    for (s, o) in [(a, b), (b, a)] {
        let vals: Vec<[Q; 3]> = o.corners().iter().map(|p| outside(s, p)).collect();
        for side in 0..3 {
            if vals.iter().all(|v| v[side] >= zero) {
                if vals.iter().all(|v| v[side] > zero) {
                    return None;
                }
                let on_o: Vec<Point> =
                    o.corners().into_iter().zip(&vals).filter(|(_, v)| v[side] == zero).map(|(p, _)| p).collect();
                let sc = s.corners();
                let on_s: Vec<Point> = match side {
                    0 => vec![sc[0].clone(), sc[1].clone()],
                    1 => vec![sc[1].clone(), sc[2].clone()],
                    _ => vec![sc[0].clone(), sc[2].clone()],
                };
                let lo = on_o.iter().min().unwrap().max(on_s.iter().min().unwrap());
                let hi = on_o.iter().max().unwrap().min(on_s.iter().max().unwrap());
                return match lo.cmp(hi) {
                    Ordering::Greater => None,
                    Ordering::Equal => Some(Meeting::Point(lo.clone())),
                    Ordering::Less => Some(Meeting::Overlap),
                };
            }
        }
    }
    Some(Meeting::Overlap)
}

fn meet(a: &RightTriangle, b: &RightTriangle) -> Option<Meeting> {
    if a.is_proper() && b.is_proper() {
        meet_proper(a, b)
    } else {
        meet_by_clipping(a, b)
    }
}

fn meet_by_clipping(a: &RightTriangle, b: &RightTriangle) -> Option<Meeting> {
    let (ca, cb) = (a.corners(), b.corners());
    if separated(&ca, &cb) || separated(&cb, &ca) {
        return None;
    }
    let pts = clip(a, b);
    match pts.len() {
        0 => None,
        1 => Some(Meeting::Point(pts.into_iter().next().unwrap())),
        _ => Some(Meeting::Overlap),
    }
}

/// Floating-point corners of a triangle, used only to skip pairs that are
/// far apart.
#[derive(Clone, Copy)]
struct Approx {
    c: [(f64, f64); 3],
    mag: f64,
}

impl Approx {
    fn of(t: &RightTriangle) -> Option<Approx> {
        use num::ToPrimitive;
        let f = |x: &Q| x.to_f64().filter(|v| v.is_finite());
        let (xl, xr, yb, yt) = (f(&t.xl)?, f(&t.xr)?, f(&t.yb)?, f(&t.yt)?);
        let mag = [xl, xr, yb, yt].iter().fold(0f64, |m, v| m.max(v.abs()));
        if mag > 1e150 {
            return None;
        }
        Some(Approx { c: [(xl, yb), (xr, yb), (xr, yt)], mag })
    }

    /// True only if some edge line of `self` has all of `b` outside by a
    /// margin far above the rounding error.
    fn clearly_apart(&self, b: &Approx) -> bool {
        let m = self.mag.max(b.mag).max(f64::MIN_POSITIVE);
        let tol = 1e-9 * m * m;
        let sep = |a: &[(f64, f64); 3], b: &[(f64, f64); 3]| {
            (0..3).any(|i| {
                let (p, q) = (a[i], a[(i + 1) % 3]);
                b.iter().all(|r| (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0) < -tol)
            })
        };
        sep(&self.c, &b.c) || sep(&b.c, &self.c)
    }
}

/// The single point shared by two touching triangles.
pub fn contact_point(a: &RightTriangle, b: &RightTriangle) -> Option<Point> {
    match meet(a, b) {
        Some(Meeting::Point(p)) => Some(p),
        _ => None,
    }
}

/// Classify every touching pair of triangles.
pub fn scan(tris: &[RightTriangle]) -> Scan {
    let n = tris.len();
    let mut problems = Vec::new();
    for (v, t) in tris.iter().enumerate() {
        if !t.is_proper() {
            problems.push(Problem::Improper(v));
        }
    }
    let approx: Vec<Option<Approx>> = tris.iter().map(Approx::of).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| tris[a].xl.cmp(&tris[b].xl));
    let mut contacts = BTreeMap::new();
    let mut corner_points: BTreeMap<Point, BTreeSet<(usize, Corner)>> = BTreeMap::new();
    for (k, &u) in order.iter().enumerate() {
        let a = &tris[u];
        for &v in &order[k + 1..] {
            let b = &tris[v];
            if let (Some(fa), Some(fb)) = (&approx[u], &approx[v]) {
                if fb.c[0].0 > fa.c[1].0 + 1e-9 * fa.mag.max(fb.mag) {
                    break;
                }
                if fa.clearly_apart(fb) {
                    continue;
                }
            }
            if b.xl > a.xr {
                break;
            }
            if b.yb > a.yt || a.yb > b.yt {
                continue;
            }
            let key = (u.min(v), u.max(v));
            let p = match meet(a, b) {
                None => continue,
                Some(Meeting::Overlap) => {
                    problems.push(Problem::Overlap(key.0, key.1));
                    continue;
                }
                Some(Meeting::Point(p)) => p,
            };
            let touch = match (locate(a, &p), locate(b, &p)) {
                (Loc::Corner(ca), Loc::Corner(cb)) => {
                    corner_points.entry(p.clone()).or_default().insert((u, ca));
                    corner_points.entry(p.clone()).or_default().insert((v, cb));
                    Touch::Corners { a: u, ca, b: v, cb }
                }
                (Loc::Corner(c), Loc::Side(s)) if c.compatible_side() == s => {
                    Touch::CornerOnSide { corner_owner: u, corner: c, side_owner: v, side: s }
                }
                (Loc::Side(s), Loc::Corner(c)) if c.compatible_side() == s => {
                    Touch::CornerOnSide { corner_owner: v, corner: c, side_owner: u, side: s }
                }
                _ => {
                    problems.push(Problem::Incompatible(key.0, key.1));
                    continue;
                }
            };
            contacts.insert(key, Contact { point: p, touch });
        }
    }
    let mut degenerate_points = Vec::new();
    let mut corner_pairs = Vec::new();
    for (point, members) in corner_points {
        let vertices: BTreeSet<usize> = members.iter().map(|m| m.0).collect();
        let find = |c: Corner| members.iter().find(|m| m.1 == c).map(|m| m.0);
        if vertices.len() == 2 && members.len() == 2 {
            let mut it = vertices.into_iter();
            corner_pairs.push((it.next().unwrap(), it.next().unwrap()));
        } else if let (3, 3, Some(top), Some(left), Some(right)) =
            (vertices.len(), members.len(), find(Corner::Top), find(Corner::Left), find(Corner::Right))
        {
            degenerate_points.push(DegeneratePoint { point, top, left, right });
        } else {
            problems.push(Problem::CornerCluster(vertices.into_iter().collect()));
        }
    }
    Scan { contacts, degenerate_points, corner_pairs, problems }
}

impl Problem {
    pub fn describe(&self) -> String {
        match self {
            Problem::Improper(v) => format!("triangle {v} has a side of non-positive length"),
            Problem::Overlap(u, v) => format!("triangles {u} and {v} overlap"),
            Problem::Incompatible(u, v) => format!("triangles {u} and {v} touch in an incompatible corner/side pair"),
            Problem::CornerCluster(vs) => format!("corners of {vs:?} meet without forming a top/left/right triple"),
        }
    }
}

/// Position of `p` along the counter-clockwise boundary of `t`, in `[0, 3)`.
fn boundary_param(t: &RightTriangle, p: &Point) -> Q {
    let one = Q::from_integer(1.into());
    let two = Q::from_integer(2.into());
    match locate(t, p) {
        Loc::Corner(Corner::Left) => Q::from_integer(0.into()),
        Loc::Corner(Corner::Right) => one,
        Loc::Corner(Corner::Top) => two,
        Loc::Side(Side::Horizontal) => (&p.0 - &t.xl) / t.width(),
        Loc::Side(Side::Vertical) => one + (&p.1 - &t.yb) / t.height(),
        _ => two + (&t.xr - &p.0) / t.width(),
    }
}

/// Direction pointing back along the boundary from `p`.
fn incoming_direction(t: &RightTriangle, p: &Point) -> Point {
    let zero = Q::from_integer(0.into());
    let one = Q::from_integer(1.into());
    match locate(t, p) {
        Loc::Corner(Corner::Right) | Loc::Side(Side::Horizontal) => (-one, zero),
        Loc::Corner(Corner::Top) | Loc::Side(Side::Vertical) => (zero, -one),
        _ => (t.width(), t.height()),
    }
}

fn angle_cmp(d0: &Point, a: &Point, b: &Point) -> Ordering {
    let zero = Q::from_integer(0.into());
    let origin = (zero.clone(), zero.clone());
    let half = |v: &Point| {
        let c = cross(&origin, d0, v);
        let dot = &d0.0 * &v.0 + &d0.1 * &v.1;
        if c > zero || (c == zero && dot > zero) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(&origin, a, b);
        if c > zero {
            Ordering::Less
        } else if c < zero {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Neighbors of `u` in counter-clockwise order of their contact points
/// along the boundary of `u`.
pub fn boundary_order(tris: &[RightTriangle], contacts: &BTreeMap<(usize, usize), Contact>, u: usize) -> Vec<usize> {
    let t = &tris[u];
    let mut items: Vec<(Q, Point, Point, usize)> = Vec::new();
    for (&(a, b), c) in contacts.range((u, 0)..=(u, usize::MAX)).chain(contacts.iter().filter(|(k, _)| k.1 == u)) {
        let v = if a == u { b } else { a };
        let s = boundary_param(t, &c.point);
        let cen = tris[v].centroid();
        let dir = (&cen.0 - &c.point.0, &cen.1 - &c.point.1);
        items.push((s, incoming_direction(t, &c.point), dir, v));
    }
    items.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| angle_cmp(&x.1, &x.2, &y.2)));
    items.into_iter().map(|x| x.3).collect()
}

/// Contacts of a representation, checked against its graph.
pub fn contacts(r: &RTRepresentation) -> Result<ContactMap> {
    checked_contacts(r, scan(r.triangles()))
}

pub(crate) fn checked_contacts(r: &RTRepresentation, s: Scan) -> Result<ContactMap> {
    let g = r.graph();
    for p in &s.problems {
        if let Problem::Overlap(u, v) = p {
            return Err(Error::Overlap(*u, *v));
        }
    }
    if !s.problems.is_empty() {
        return Err(Error::InvalidRepresentation(s.problems.iter().map(Problem::describe).collect()));
    }
    for &(u, v) in s.contacts.keys() {
        if !g.has_edge(u, v) {
            return Err(Error::StrayContact(u, v));
        }
    }
    for &(u, v) in g.edges() {
        if !s.contacts.contains_key(&(u, v)) {
            return Err(Error::MissingContact(u, v));
        }
    }
    for &(u, v) in &s.corner_pairs {
        if g.is_inner_edge(u, v) {
            return Err(Error::InvalidRepresentation(vec![format!(
                "corners of {u} and {v} coincide without a third corner"
            )]));
        }
    }
    Ok(ContactMap { contacts: s.contacts, degenerate_points: s.degenerate_points })
}
