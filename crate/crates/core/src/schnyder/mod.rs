//! Schnyder woods: representation, validation, the dual wood, the
//! completion and minimization.

mod completion;
mod dual;
mod minimize;
mod seed;
mod wood;

pub use completion::{Completion, Node};
pub use dual::{dual_label, dual_wood};
pub use minimize::minimize;
pub use seed::compute_wood;
pub use wood::{check_no_oriented_cycle, check_wood, trees, Arm, EdgeLabel, Location, SchnyderWood, Violation};

/// Some clockwise directed cycle of the completion of `wood`, as completion
/// darts.
pub fn find_clockwise_cycle(
    s: &crate::Suspension,
    wood: &SchnyderWood,
) -> crate::Result<Option<Vec<crate::plane_graph::Dart>>> {
    Ok(Completion::new(s, wood)?.find_clockwise_cycle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::Color::{self, Green};
    use crate::plane_graph::PlaneGraph;
    use crate::Suspension;

    fn k4() -> Suspension {
        let g = PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]], 0).unwrap();
        Suspension::new(g, [0, 1, 2]).unwrap()
    }

    /// Inner vertex points to every root; outer edges point both ways, the
    /// direction towards `r_i` colored `i`.
    pub(crate) fn k4_wood(s: &Suspension) -> SchnyderWood {
        let g = s.graph();
        let labels = (0..g.m())
            .map(|e| {
                let (u, v) = g.endpoints(e);
                match (s.root_color(u), s.root_color(v)) {
                    (Some(cu), Some(cv)) => EdgeLabel::Bi { forward: cv, backward: cu },
                    (None, Some(cv)) => EdgeLabel::Uni { dart: 2 * e, color: cv },
                    (Some(cu), None) => EdgeLabel::Uni { dart: 2 * e + 1, color: cu },
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        SchnyderWood::new(labels)
    }

    #[test]
    fn k4_wood_is_valid() {
        let s = k4();
        let w = k4_wood(&s);
        assert_eq!(check_wood(&s, &w), vec![]);
        for c in Color::ALL {
            let t = trees(&s, &w, c).unwrap();
            assert_eq!(t.len(), 3);
            assert!(t.iter().all(|&d| w.color_along(d) == Some(c)));
        }
        assert!(check_no_oriented_cycle(&s, &w).unwrap());
    }

    #[test]
    fn duplicate_outgoing_color_is_reported() {
        let s = k4();
        let mut w = k4_wood(&s);
        let e = s.graph().find_edge(3, 0).unwrap();
        let d = s.graph().find_dart(3, 0).unwrap();
        w.set_label(e, EdgeLabel::Uni { dart: d, color: Green });
        let v = check_wood(&s, &w);
        assert!(v.iter().any(|x| x.condition == 3 && x.at == Location::Vertex(3)), "{v:?}");
    }

    #[test]
    fn k4_dual_wood() {
        let s = k4();
        let w = k4_wood(&s);
        let (sd, dw) = dual_wood(&s, &w).unwrap();
        // the three inner edges are unidirected, so their duals are bidirected
        for e in 0..6 {
            let (u, v) = s.graph().endpoints(e);
            assert_eq!(dw.is_bidirected(e), u == 3 || v == 3);
        }
        assert!(check_wood(&sd.suspension, &dw).is_empty());
        // applying the rule twice gives back the primal labels
        let (_, ddw) = dual_wood(&sd.suspension, &dw).unwrap();
        for e in 0..6 {
            assert_eq!(ddw.label(e), flip(w.label(e)));
        }
    }

    /// The double dual identifies primal dart `d` with dart `d ^ 1`.
    fn flip(l: EdgeLabel) -> EdgeLabel {
        match l {
            EdgeLabel::Uni { dart, color } => EdgeLabel::Uni { dart: dart ^ 1, color },
            EdgeLabel::Bi { forward, backward } => EdgeLabel::Bi { forward: backward, backward: forward },
        }
    }

    #[test]
    fn k4_completion() {
        let s = k4();
        let w = k4_wood(&s);
        let c = Completion::new(&s, &w).unwrap();
        // 4 primal, apex, 3 inner faces + 3 outer pieces, 9 crossings
        assert_eq!(c.graph().n(), 4 + 1 + 6 + 9);
        assert_eq!(c.graph().m(), 4 * 9 + 3);
        assert!(c.crossing_violations().is_empty(), "{:?}", c.crossing_violations());
        assert!(c.alpha_violations().is_empty());
        assert_eq!(c.primal_wood(), w);
        assert_eq!(c.find_clockwise_cycle(), None);
    }

    #[test]
    fn k4_seed_and_minimize() {
        let s = k4();
        let w = compute_wood(&s).unwrap();
        assert_eq!(w, k4_wood(&s));
        assert_eq!(minimize(&s, &w).unwrap(), w);
    }

    #[test]
    fn example_wood_is_valid_but_not_minimal() {
        let g = crate::gen::example().unwrap();
        let s = Suspension::new(g, [0, 1, 2]).unwrap();
        let w = crate::format::parse_wood(s.graph(), crate::gen::EXAMPLE_WOOD).unwrap();
        assert_eq!(check_wood(&s, &w), vec![]);
        let bidirected = (0..s.graph().m()).filter(|&e| w.is_bidirected(e)).count();
        assert_eq!(bidirected, 12);
        let cycle = find_clockwise_cycle(&s, &w).unwrap();
        assert!(cycle.is_some());
        let min = minimize(&s, &w).unwrap();
        assert_eq!(check_wood(&s, &min), vec![]);
        assert_eq!(find_clockwise_cycle(&s, &min).unwrap(), None);
        assert_ne!(min, w);
    }
}
