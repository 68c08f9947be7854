use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{twin, EdgeId};
use crate::suspension::{SuspendedDual, Suspension};

use super::wood::{check_wood, EdgeLabel, SchnyderWood};

/// Label of edge `e` of the apex-augmented graph: the wood label for edges of
/// `G`, the `i`-colored ray from `r_i` for the apex edges.
pub(crate) fn apexed_label(wood: &SchnyderWood, m: usize, e: EdgeId) -> EdgeLabel {
    if e < m {
        wood.label(e)
    } else {
        EdgeLabel::Uni { dart: 2 * e, color: Color::ALL[e - m] }
    }
}

/// The dual label of one edge. Dual dart `d` crosses primal dart `d` from
/// its right side to its left side.
///
/// A unidirected `c`-colored edge becomes bidirected with the `(c+1)`-colored
/// direction having the primal direction on its right. A bidirected edge
/// missing color `c` becomes unidirected and `c`-colored, pointing to the
/// right of its `(c+1)`-colored direction.
pub fn dual_label(e: EdgeId, label: EdgeLabel) -> EdgeLabel {
    match label {
        EdgeLabel::Uni { dart, color } => {
            let (along, against) = (color.next(), color.prev());
            if dart % 2 == 0 {
                EdgeLabel::Bi { forward: along, backward: against }
            } else {
                EdgeLabel::Bi { forward: against, backward: along }
            }
        }
        EdgeLabel::Bi { forward, backward } => {
            // the dart whose color is followed cyclically by its twin's
            let (d, c) = if backward == forward.next() { (2 * e, forward) } else { (2 * e + 1, backward) };
            EdgeLabel::Uni { dart: twin(d), color: c.prev() }
        }
    }
}

/// The dual wood on the suspended dual; edge `e < m` carries the dual of
/// primal edge `e` and edges `m..m+3` the outer triangle.
pub fn dual_wood(s: &Suspension, wood: &SchnyderWood) -> Result<(SuspendedDual, SchnyderWood)> {
    let sd = s.suspended_dual();
    let m = s.graph().m();
    let labels = (0..m + 3).map(|e| dual_label(e, apexed_label(wood, m, e))).collect();
    let dual = SchnyderWood::new(labels);
    let violations = check_wood(&sd.suspension, &dual);
    if let Some(v) = violations.first() {
        return Err(Error::InvalidWood(format!("dual wood: {v}")));
    }
    Ok((sd, dual))
}
