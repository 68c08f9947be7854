#![allow(dead_code)]

use cotree::gen::{corpus, Instance, Profile};
use cotree::opp::{check_compatible, check_extensions, check_opp, compatible_opp, last_vertex_violations};
use cotree::schnyder::{check_no_oriented_cycle, check_wood, dual_wood, Completion, EdgeLabel, SchnyderWood};
use cotree::{Color, Suspension};

pub fn small_and_medium() -> Vec<Instance> {
    let mut v = corpus(Profile::Small).unwrap();
    v.extend(corpus(Profile::Medium).unwrap());
    v
}

pub fn suspend(inst: &Instance) -> Suspension {
    Suspension::new_trusted(inst.graph.clone(), inst.roots).unwrap()
}

/// The double dual swaps the two darts of every edge.
pub fn flip(l: EdgeLabel) -> EdgeLabel {
    match l {
        EdgeLabel::Uni { dart, color } => EdgeLabel::Uni { dart: dart ^ 1, color },
        EdgeLabel::Bi { forward, backward } => EdgeLabel::Bi { forward: backward, backward: forward },
    }
}

/// Everything that must hold for any valid wood, described as strings.
pub fn structural_problems(s: &Suspension, wood: &SchnyderWood) -> Vec<String> {
    let mut out: Vec<String> = check_wood(s, wood).iter().map(|v| format!("wood: {v}")).collect();
    if !out.is_empty() {
        return out;
    }
    if !check_no_oriented_cycle(s, wood).unwrap() {
        out.push("oriented cycle in T_i + reversed T_(i-1), T_(i+1)".into());
    }
    let c = Completion::new(s, wood).unwrap();
    out.extend(c.crossing_violations().into_iter().map(|v| format!("crossing: {v}")));
    out.extend(c.alpha_violations().into_iter().map(|x| format!("outdegree at completion vertex {x}")));
    let (sd, dw) = dual_wood(s, wood).unwrap();
    out.extend(check_wood(&sd.suspension, &dw).iter().map(|v| format!("dual wood: {v}")));
    let (_, ddw) = dual_wood(&sd.suspension, &dw).unwrap();
    for e in 0..s.graph().m() {
        if ddw.label(e) != flip(wood.label(e)) {
            out.push(format!("double dual differs on edge {e}"));
        }
    }
    for j in Color::ALL {
        let opp = compatible_opp(s, wood, j).unwrap();
        let v = check_opp(s, &opp)
            .into_iter()
            .chain(check_compatible(s, wood, &opp))
            .chain(check_extensions(s, wood, &opp));
        out.extend(v.map(|v| format!("color {j}: {v}")));
    }
    out
}

/// Violations of the "edges into the last path vertex" property in all
/// three colors.
pub fn last_vertex_problems(s: &Suspension, wood: &SchnyderWood) -> Vec<String> {
    let mut out = Vec::new();
    for j in Color::ALL {
        let opp = compatible_opp(s, wood, j).unwrap();
        out.extend(last_vertex_violations(s, wood, &opp).into_iter().map(|v| format!("color {j}: {v}")));
    }
    out
}
