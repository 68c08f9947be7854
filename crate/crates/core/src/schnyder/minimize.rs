use crate::error::{Error, Result};
use crate::suspension::Suspension;

use super::completion::Completion;
use super::wood::{check_wood, SchnyderWood};

/// The minimal Schnyder wood: its completion has no clockwise directed
/// cycle.
///
/// Each round computes face potentials of the completion (the least number
/// of arcs crossed left to right from the apex) and reverses every arc whose
/// right face lies one level above its left face. These arcs bound the level
/// sets, so each round reverses edge-disjoint directed cycles and keeps all
/// outdegrees. The wood is recolored and checked after every round.
pub fn minimize(s: &Suspension, wood: &SchnyderWood) -> Result<SchnyderWood> {
    let mut c = Completion::new(s, wood)?;
    let limit = c.graph().num_faces() + 1;
    let mut current = wood.clone();
    for round in 0.. {
        if c.reverse_level_boundaries() == 0 {
            break;
        }
        if round >= limit {
            return Err(Error::FlipDidNotConverge(round));
        }
        c.recolor()?;
        current = c.primal_wood();
        if let Some(v) = check_wood(s, &current).first() {
            return Err(Error::InvalidWood(format!("after reversal round {round}: {v}")));
        }
    }
    Ok(current)
}
