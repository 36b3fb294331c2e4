//! Whether interpolating two representations corner by corner stays valid.
//!
//! Given a wood shared by both representations, every contact of a corner
//! with a side must either keep the side's direction or keep the ratio at
//! which the corner cuts the side. Horizontal and vertical sides never
//! change direction.

use serde::Serialize;

use super::contacts::{contact_point, locate, Corner, Loc, Side};
use super::extract::{common_wood, extract_wood_set};
use super::{Point, RTRepresentation, RightTriangle, Q};
use crate::error::{Error, Result};
use crate::schnyder::{Color, SchnyderWood};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphCase {
    /// The side keeps its direction.
    Parallel,
    /// The corner cuts the side at the same ratio.
    SameRatio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContactCertificate {
    pub corner_owner: usize,
    pub side_owner: usize,
    pub side: Side,
    pub case: MorphCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMorphCertificate {
    pub linear: bool,
    pub wood: Option<SchnyderWood>,
    pub contacts: Vec<ContactCertificate>,
    pub failure: Option<String>,
}

impl LinearMorphCertificate {
    fn fail(wood: Option<SchnyderWood>, contacts: Vec<ContactCertificate>, why: String) -> Self {
        LinearMorphCertificate { linear: false, wood, contacts, failure: Some(why) }
    }
}

fn diagonal_case(sa: &RightTriangle, sb: &RightTriangle, ya: &Q, yb: &Q) -> Option<MorphCase> {
    if sa.slope() == sb.slope() {
        Some(MorphCase::Parallel)
    } else if sa.diagonal_ratio_at_y(ya) == sb.diagonal_ratio_at_y(yb) {
        Some(MorphCase::SameRatio)
    } else {
        None
    }
}

/// Interpretations of a contact point as a corner of `o` on a side of `s`.
fn interpretations(tris: &[RightTriangle], o: usize, s: usize, p: &Point) -> Vec<(Corner, Side)> {
    let mut out = Vec::new();
    if let Loc::Corner(c) = locate(&tris[o], p) {
        let side = c.compatible_side();
        match locate(&tris[s], p) {
            Loc::Side(x) if x == side => out.push((c, side)),
            Loc::Corner(cs) if cs.sides().contains(&side) => out.push((c, side)),
            _ => {}
        }
    }
    out
}

pub fn is_linear_morph(ra: &RTRepresentation, rb: &RTRepresentation) -> Result<LinearMorphCertificate> {
    if !ra.same_graph(rb) {
        return Err(Error::GraphMismatch);
    }
    let (wa, wb) = (extract_wood_set(ra)?, extract_wood_set(rb)?);
    let Some(t) = common_wood(&wa, &wb)? else {
        return Ok(LinearMorphCertificate::fail(None, Vec::new(), "wood sets are disjoint".into()));
    };
    let g = ra.graph();
    let (ta, tb) = (ra.triangles(), rb.triangles());
    let mut certs = Vec::new();
    for v in g.inner_vertices() {
        for c in Color::ALL {
            let u = t.parent(v, c);
            let (side, case) = match c {
                Color::Red => (Side::Horizontal, Some(MorphCase::Parallel)),
                Color::Blue => (Side::Vertical, Some(MorphCase::Parallel)),
                Color::Green => (Side::Diagonal, diagonal_case(&ta[u], &tb[u], &ta[v].yb, &tb[v].yb)),
            };
            let Some(case) = case else {
                return Ok(LinearMorphCertificate::fail(
                    Some(t),
                    certs,
                    format!("right corner of {v} cuts the diagonal of {u} at different ratios"),
                ));
            };
            certs.push(ContactCertificate { corner_owner: v, side_owner: u, side, case });
        }
    }
    // outer edges carry no color; any reading shared by both sides will do
    let o = g.outer();
    for (x, y) in [(o[0], o[1]), (o[1], o[2]), (o[2], o[0])] {
        let (Some(pa), Some(pb)) = (contact_point(&ta[x], &ta[y]), contact_point(&tb[x], &tb[y])) else {
            return Err(Error::MissingContact(x.min(y), x.max(y)));
        };
        let mut found = None;
        'search: for (owner, other) in [(x, y), (y, x)] {
            let ia = interpretations(ta, owner, other, &pa);
            let ib = interpretations(tb, owner, other, &pb);
            for (corner, side) in ia {
                if !ib.contains(&(corner, side)) {
                    continue;
                }
                let case = match side {
                    Side::Diagonal => diagonal_case(&ta[other], &tb[other], &pa.1, &pb.1),
                    _ => Some(MorphCase::Parallel),
                };
                if let Some(case) = case {
                    found = Some(ContactCertificate { corner_owner: owner, side_owner: other, side, case });
                    break 'search;
                }
            }
        }
        match found {
            Some(cert) => certs.push(cert),
            None => {
                return Ok(LinearMorphCertificate::fail(
                    Some(t),
                    certs,
                    format!("outer contact {x}-{y} has no reading valid in both"),
                ))
            }
        }
    }
    Ok(LinearMorphCertificate { linear: true, wood: Some(t), contacts: certs, failure: None })
}
