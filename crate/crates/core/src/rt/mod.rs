//! Right-triangle contact representations with exact rational coordinates.
//!
//! Each vertex is the lower-right half of an axis-parallel rectangle with
//! corners `left = (xl, yb)`, `right = (xr, yb)` and `top = (xr, yt)`. The
//! horizontal side joins left and right, the vertical side right and top,
//! the diagonal left and top.

use std::sync::Arc;

use num::{BigInt, BigRational};

use crate::error::{Error, Result};
use crate::plane_graph::PlaneTriangulation;
use crate::schnyder::Roots;

pub mod construct;
pub mod contacts;
pub mod extract;
pub mod linear;
pub mod validate;

pub use construct::{canonical_frame, construct_rt, validate_adt, Labeling};
pub use contacts::{contacts, Contact, ContactMap, Corner, DegeneratePoint, Side, Touch};
pub use extract::{extract_wood_set, labeling_from_rep, WoodSet};
pub use linear::{is_linear_morph, LinearMorphCertificate, MorphCase};
pub use validate::{derive_graph, validate_rt};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub type Point = (Q, Q);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightTriangle {
    pub xl: Q,
    pub xr: Q,
    pub yb: Q,
    pub yt: Q,
}

impl RightTriangle {
    pub fn new(xl: Q, xr: Q, yb: Q, yt: Q) -> Self {
        RightTriangle { xl, xr, yb, yt }
    }

    pub fn from_ints(xl: i64, xr: i64, yb: i64, yt: i64) -> Self {
        RightTriangle::new(q(xl), q(xr), q(yb), q(yt))
    }

    pub fn is_proper(&self) -> bool {
        self.xl < self.xr && self.yb < self.yt
    }

    pub fn corner(&self, c: Corner) -> Point {
        match c {
            Corner::Left => (self.xl.clone(), self.yb.clone()),
            Corner::Right => (self.xr.clone(), self.yb.clone()),
            Corner::Top => (self.xr.clone(), self.yt.clone()),
        }
    }

    /// Corners counter-clockwise.
    pub fn corners(&self) -> [Point; 3] {
        [self.corner(Corner::Left), self.corner(Corner::Right), self.corner(Corner::Top)]
    }

    pub fn width(&self) -> Q {
        &self.xr - &self.xl
    }

    pub fn height(&self) -> Q {
        &self.yt - &self.yb
    }

    /// Fraction of the height at which `y` lies.
    pub fn diagonal_ratio_at_y(&self, y: &Q) -> Q {
        (y - &self.yb) / self.height()
    }

    /// x-coordinate of the diagonal at height `y`.
    pub fn diagonal_x(&self, y: &Q) -> Q {
        &self.xl + self.diagonal_ratio_at_y(y) * self.width()
    }

    pub fn slope(&self) -> Q {
        self.height() / self.width()
    }

    pub fn centroid(&self) -> Point {
        let three = q(3);
        ((&self.xl + &self.xr + &self.xr) / &three, (&self.yb + &self.yb + &self.yt) / &three)
    }

    pub fn lerp(&self, other: &RightTriangle, t: &Q) -> RightTriangle {
        let f = |a: &Q, b: &Q| a + (b - a) * t;
        RightTriangle::new(f(&self.xl, &other.xl), f(&self.xr, &other.xr), f(&self.yb, &other.yb), f(&self.yt, &other.yt))
    }

    pub fn map(&self, sx: &Q, tx: &Q, sy: &Q, ty: &Q) -> RightTriangle {
        RightTriangle::new(&self.xl * sx + tx, &self.xr * sx + tx, &self.yb * sy + ty, &self.yt * sy + ty)
    }
}

/// The three outer triangles, indexed by role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterFrame {
    pub red: RightTriangle,
    pub green: RightTriangle,
    pub blue: RightTriangle,
}

impl OuterFrame {
    /// The corner-touching conditions, as diagnostics.
    pub fn check_corners(&self) -> Vec<String> {
        let mut d = Vec::new();
        if self.blue.corner(Corner::Right) != self.green.corner(Corner::Left) {
            d.push("right corner of X_b differs from left corner of X_g".to_string());
        }
        if self.blue.corner(Corner::Top) != self.red.corner(Corner::Left) {
            d.push("top corner of X_b differs from left corner of X_r".to_string());
        }
        if self.green.corner(Corner::Top) != self.red.corner(Corner::Right) {
            d.push("top corner of X_g differs from right corner of X_r".to_string());
        }
        for (name, t) in [("X_r", &self.red), ("X_g", &self.green), ("X_b", &self.blue)] {
            if !t.is_proper() {
                d.push(format!("{name} has a side of non-positive length"));
            }
        }
        d
    }

    pub fn is_corner_touching(&self) -> bool {
        self.check_corners().is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct RTRepresentation {
    graph: Arc<PlaneTriangulation>,
    roots: Roots,
    tris: Vec<RightTriangle>,
}

impl PartialEq for RTRepresentation {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
            && self.roots == other.roots
            && self.tris == other.tris
    }
}

impl Eq for RTRepresentation {}

impl RTRepresentation {
    /// Pair triangles with a graph without checking validity.
    pub fn new(graph: Arc<PlaneTriangulation>, roots: Roots, tris: Vec<RightTriangle>) -> Result<Self> {
        if tris.len() != graph.n() {
            return Err(Error::SizeMismatch(tris.len(), graph.n()));
        }
        Ok(RTRepresentation { graph, roots, tris })
    }

    /// Derive the graph from the contacts and validate.
    pub fn from_triangles(tris: Vec<RightTriangle>) -> Result<Self> {
        let (graph, roots) = derive_graph(&tris)?;
        let r = RTRepresentation { graph: Arc::new(graph), roots, tris };
        let d = validate_rt(&r);
        if !d.is_empty() {
            return Err(Error::InvalidRepresentation(d));
        }
        Ok(r)
    }

    /// Reuse `graph` when the contacts induce exactly that embedding.
    pub fn from_triangles_on(graph: &Arc<PlaneTriangulation>, tris: Vec<RightTriangle>) -> Result<Self> {
        let r = Self::from_triangles(tris)?;
        if *r.graph != **graph {
            return Err(Error::GraphMismatch);
        }
        Ok(RTRepresentation { graph: graph.clone(), roots: r.roots, tris: r.tris })
    }

    pub fn graph(&self) -> &Arc<PlaneTriangulation> {
        &self.graph
    }

    pub fn roots(&self) -> Roots {
        self.roots
    }

    pub fn n(&self) -> usize {
        self.tris.len()
    }

    pub fn triangle(&self, v: usize) -> &RightTriangle {
        &self.tris[v]
    }

    pub fn triangles(&self) -> &[RightTriangle] {
        &self.tris
    }

    pub fn frame(&self) -> OuterFrame {
        OuterFrame {
            red: self.tris[self.roots.red].clone(),
            green: self.tris[self.roots.green].clone(),
            blue: self.tris[self.roots.blue].clone(),
        }
    }

    /// y-coordinates of the horizontal sides.
    pub fn tau(&self) -> Labeling {
        Labeling(self.tris.iter().map(|t| t.yb.clone()).collect())
    }

    /// Vertex whose horizontal side is highest; unique for valid input with n >= 4.
    pub fn topmost(&self) -> usize {
        (0..self.n()).max_by(|&a, &b| self.tris[a].yb.cmp(&self.tris[b].yb)).unwrap()
    }

    /// Pointwise interpolation `(1 - t) self + t other`.
    pub fn interpolate(&self, other: &RTRepresentation, t: &Q) -> RTRepresentation {
        let tris = self.tris.iter().zip(&other.tris).map(|(a, b)| a.lerp(b, t)).collect();
        RTRepresentation { graph: self.graph.clone(), roots: self.roots, tris }
    }

    pub fn with_triangles(&self, tris: Vec<RightTriangle>) -> RTRepresentation {
        RTRepresentation { graph: self.graph.clone(), roots: self.roots, tris }
    }

    pub fn same_graph(&self, other: &RTRepresentation) -> bool {
        (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph) && self.roots == other.roots
    }
}
