//! Whether two representations are joined by a piecewise linear morph, and
//! the morph itself.

use serde::{Deserialize, Serialize};

use super::flip::flip_morph;
use super::same_wood::{same_wood_morph, to_canonical};
use super::{MorphEvent, MorphPlan};
use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::plane_graph::Triangle3;
use crate::rt::extract::common_wood;
use crate::rt::{extract_wood_set, RTRepresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecisionReason {
    Ok,
    GraphMismatch,
    TooSmall,
    TopmostDiffers,
    SeparatingPotentialDiffers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Topmost vertex of each representation.
    Topmost { first: usize, second: usize },
    /// Separating triangle whose potentials differ.
    Triangle(Triangle3),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphDecision {
    pub possible: bool,
    pub reason: DecisionReason,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flip_count: Option<usize>,
}

impl MorphDecision {
    fn refuse(reason: DecisionReason, witness: Option<Witness>) -> Self {
        MorphDecision { possible: false, reason, witness, flip_count: None }
    }
}

/// Facial flips leading from a wood of `a` to a wood of `b`, empty when the
/// wood sets share a member.
fn flip_route(a: &RTRepresentation, b: &RTRepresentation) -> Result<std::result::Result<Vec<Triangle3>, Triangle3>> {
    let (sa, sb) = (extract_wood_set(a)?, extract_wood_set(b)?);
    if common_wood(&sa, &sb)?.is_some() {
        return Ok(Ok(Vec::new()));
    }
    let lattice = Lattice::new(a.graph());
    if let Some(tri) = lattice.separating_difference(&sa.base, &sb.base)? {
        return Ok(Err(tri));
    }
    Ok(Ok(lattice.facial_flip_sequence(&sa.base, &sb.base)?))
}

pub fn decide(a: &RTRepresentation, b: &RTRepresentation) -> Result<MorphDecision> {
    if !a.same_graph(b) {
        return Ok(MorphDecision::refuse(DecisionReason::GraphMismatch, None));
    }
    if a.n() < 4 {
        return Ok(MorphDecision::refuse(DecisionReason::TooSmall, None));
    }
    let (ta, tb) = (a.topmost(), b.topmost());
    if ta != tb {
        return Ok(MorphDecision::refuse(
            DecisionReason::TopmostDiffers,
            Some(Witness::Topmost { first: ta, second: tb }),
        ));
    }
    Ok(match flip_route(a, b)? {
        Ok(seq) => MorphDecision { possible: true, reason: DecisionReason::Ok, witness: None, flip_count: Some(seq.len()) },
        Err(tri) => MorphDecision::refuse(DecisionReason::SeparatingPotentialDiffers, Some(Witness::Triangle(tri))),
    })
}

/// A piecewise linear morph from `a` to `b` of at most `2n + 2l` steps for
/// `l` facial flips, with the direct same-wood route available at the end.
pub fn full_morph(a: &RTRepresentation, b: &RTRepresentation) -> Result<MorphPlan> {
    let d = decide(a, b)?;
    if !d.possible {
        return Err(Error::NotMorphable(format!("{:?}", d.reason)));
    }
    let (sa, sb) = (extract_wood_set(a)?, extract_wood_set(b)?);
    if let Some(t) = common_wood(&sa, &sb)? {
        return same_wood_morph(a, b, &t);
    }
    let Ok(seq) = flip_route(a, b)? else {
        return Err(Error::InternalInvariant("flip route vanished after a positive decision".into()));
    };
    let mut t = sa.base.clone();
    let mut plan = to_canonical(a, &t)?;
    for face in seq {
        let f = flip_morph(plan.last(), &t, face)?;
        plan.push(MorphEvent::FlipStep { face, phase: 1 }, f.middle);
        plan.push(MorphEvent::FlipStep { face, phase: 2 }, f.end);
        t = f.wood;
    }
    if !sb.contains(&t) {
        return Err(Error::InternalInvariant("flips did not reach a wood of the target".into()));
    }
    let tail = same_wood_morph(plan.last(), b, &t)?;
    plan.extend(tail);
    Ok(plan)
}
