//! Piecewise linear morphs between representations of one triangulation.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::plane_graph::Triangle3;
use crate::rt::{is_linear_morph, RTRepresentation};

pub mod adjust;
pub mod decide;
pub mod flip;
pub mod normalize;
pub mod same_wood;

pub use adjust::{adjust, diagonal_occupants, lambda_ratio, respects_order};
pub use decide::{decide, full_morph, DecisionReason, MorphDecision, Witness};
pub use flip::{flip_morph, FlipMorph};
pub use normalize::{is_canonical_frame, normalize_outer};
pub use same_wood::{next_movable_index, same_wood_morph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MorphEvent {
    OuterNormalization,
    RatioMove { vertex: usize },
    FlipStep { face: Triangle3, phase: u8 },
}

/// Keyframes joined by linear morphs; `events[i]` labels the step from
/// `keyframes[i]` to `keyframes[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphPlan {
    pub keyframes: Vec<RTRepresentation>,
    pub events: Vec<MorphEvent>,
}

impl MorphPlan {
    pub fn start(r: RTRepresentation) -> Self {
        MorphPlan { keyframes: vec![r], events: Vec::new() }
    }

    pub fn first(&self) -> &RTRepresentation {
        &self.keyframes[0]
    }

    pub fn last(&self) -> &RTRepresentation {
        self.keyframes.last().expect("plans are never empty")
    }

    /// Number of linear morphs.
    pub fn steps(&self) -> usize {
        self.events.len()
    }

    /// Append a keyframe unless it equals the current last one.
    pub fn push(&mut self, event: MorphEvent, r: RTRepresentation) {
        if *self.last() != r {
            self.keyframes.push(r);
            self.events.push(event);
        }
    }

    /// Append `other`, whose first keyframe must equal the current last one.
    pub fn extend(&mut self, other: MorphPlan) {
        debug_assert!(self.last() == other.first());
        for (e, k) in other.events.into_iter().zip(other.keyframes.into_iter().skip(1)) {
            self.push(e, k);
        }
    }

    /// The same morph run backwards.
    pub fn reversed(mut self) -> MorphPlan {
        self.keyframes.reverse();
        self.events.reverse();
        self
    }

    /// Steps that fail the linear morph check, as diagnostics.
    pub fn check(&self) -> Result<Vec<String>> {
        let mut d = Vec::new();
        if self.keyframes.len() != self.events.len() + 1 {
            d.push(format!("{} keyframes but {} events", self.keyframes.len(), self.events.len()));
        }
        for (i, w) in self.keyframes.windows(2).enumerate() {
            let c = is_linear_morph(&w[0], &w[1])?;
            if !c.linear {
                d.push(format!("step {i}: {}", c.failure.unwrap_or_default()));
            }
        }
        Ok(d)
    }
}
