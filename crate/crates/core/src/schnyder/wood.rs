use std::collections::HashMap;
use std::fmt;

use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{edge_of, twin, Dart, EdgeId, FaceId, Vertex};
use crate::suspension::Suspension;
use crate::util::{is_acyclic, Dsu};

/// Orientation and coloring of one edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// A single direction along `dart`, colored `color`.
    Uni { dart: Dart, color: Color },
    /// Both directions: `forward` colors the canonical dart `2e`,
    /// `backward` its twin.
    Bi { forward: Color, backward: Color },
}

impl EdgeLabel {
    /// Color of the direction along dart `d`, if the edge is oriented that way.
    pub fn color_along(&self, d: Dart) -> Option<Color> {
        match *self {
            EdgeLabel::Uni { dart, color } => (dart == d).then_some(color),
            EdgeLabel::Bi { forward, backward } => Some(if d.is_multiple_of(2) { forward } else { backward }),
        }
    }

    pub fn is_bidirected(&self) -> bool {
        matches!(self, EdgeLabel::Bi { .. })
    }

    /// Whether the edge carries a direction of color `c`.
    pub fn has_color(&self, c: Color) -> bool {
        match *self {
            EdgeLabel::Uni { color, .. } => color == c,
            EdgeLabel::Bi { forward, backward } => forward == c || backward == c,
        }
    }
}

/// A Schnyder wood: one label per edge of the suspension's graph. The three
/// half-edges are implicit: the half-edge at `r_i` is outgoing and `i`-colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderWood {
    labels: Vec<EdgeLabel>,
}

/// What a vertex sees along one slot of its rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arm {
    /// `None` for the half-edge.
    pub dart: Option<Dart>,
    pub outgoing: Option<Color>,
    pub incoming: Option<Color>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Vertex(Vertex),
    Face(FaceId),
    Edge(EdgeId),
}

/// A failed condition of the Schnyder wood definition (numbered 1 to 4).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub at: Location,
    pub edges: Vec<EdgeId>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} at {:?} (edges {:?}): {}", self.condition, self.at, self.edges, self.message)
    }
}

impl SchnyderWood {
    pub fn new(labels: Vec<EdgeLabel>) -> SchnyderWood {
        SchnyderWood { labels }
    }

    pub fn labels(&self) -> &[EdgeLabel] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> EdgeLabel {
        self.labels[e]
    }

    pub fn set_label(&mut self, e: EdgeId, label: EdgeLabel) {
        self.labels[e] = label;
    }

    pub fn color_along(&self, d: Dart) -> Option<Color> {
        self.labels[edge_of(d)].color_along(d)
    }

    pub fn is_bidirected(&self, e: EdgeId) -> bool {
        self.labels[e].is_bidirected()
    }

    /// The arms of `v` in clockwise order, half-edge included.
    pub fn arms(&self, s: &Suspension, v: Vertex) -> Vec<Arm> {
        s.rotation_with_half_edge(v)
            .into_iter()
            .map(|slot| match slot {
                Some(d) => Arm { dart: Some(d), outgoing: self.color_along(d), incoming: self.color_along(twin(d)) },
                None => Arm { dart: None, outgoing: s.root_color(v), incoming: None },
            })
            .collect()
    }

    /// The dart leaving `v` with color `c`, `None` for the half-edge at a
    /// root or when the wood is broken at `v`.
    pub fn outgoing(&self, s: &Suspension, v: Vertex, c: Color) -> Option<Dart> {
        s.graph().rotation(v).iter().copied().find(|&d| self.color_along(d) == Some(c))
    }
}

/// All violations of the four defining conditions. Empty iff `wood` is a
/// Schnyder wood of the suspension.
pub fn check_wood(s: &Suspension, wood: &SchnyderWood) -> Vec<Violation> {
    let g = s.graph();
    let mut out = Vec::new();
    if wood.labels.len() != g.m() {
        out.push(Violation {
            condition: 1,
            at: Location::Edge(wood.labels.len().min(g.m())),
            edges: vec![],
            message: format!("{} labels for {} edges", wood.labels.len(), g.m()),
        });
        return out;
    }
    for (e, l) in wood.labels.iter().enumerate() {
        match *l {
            EdgeLabel::Bi { forward, backward } if forward == backward => out.push(Violation {
                condition: 1,
                at: Location::Edge(e),
                edges: vec![e],
                message: format!("bidirected edge uses color {forward} twice"),
            }),
            EdgeLabel::Uni { dart, .. } if edge_of(dart) != e => out.push(Violation {
                condition: 1,
                at: Location::Edge(e),
                edges: vec![e],
                message: format!("direction dart {dart} does not belong to the edge"),
            }),
            _ => {}
        }
    }
    for v in 0..g.n() {
        check_vertex(s, wood, v, &mut out);
    }
    for f in 0..g.num_faces() {
        if f == g.outer_face() {
            continue;
        }
        let boundary = g.face_boundary(f);
        for c in Color::ALL {
            let along = boundary.iter().all(|&d| wood.color_along(d) == Some(c));
            let against = boundary.iter().all(|&d| wood.color_along(twin(d)) == Some(c));
            if along || against {
                out.push(Violation {
                    condition: 4,
                    at: Location::Face(f),
                    edges: boundary.iter().map(|&d| edge_of(d)).collect(),
                    message: format!("face boundary is a directed cycle of color {c}"),
                });
            }
        }
    }
    out
}

fn check_vertex(s: &Suspension, wood: &SchnyderWood, v: Vertex, out: &mut Vec<Violation>) {
    let arms = wood.arms(s, v);
    let k = arms.len();
    let edge_ids = |pred: &dyn Fn(&Arm) -> bool| -> Vec<EdgeId> {
        arms.iter().filter(|a| pred(a)).filter_map(|a| a.dart.map(edge_of)).collect()
    };
    let mut pos = [usize::MAX; 3];
    for c in Color::ALL {
        let hits: Vec<usize> = (0..k).filter(|&i| arms[i].outgoing == Some(c)).collect();
        if hits.len() != 1 {
            out.push(Violation {
                condition: 3,
                at: Location::Vertex(v),
                edges: edge_ids(&|a| a.outgoing == Some(c)),
                message: format!("{} outgoing edges of color {c}", hits.len()),
            });
            return;
        }
        pos[c.index() - 1] = hits[0];
    }
    let gap = |from: usize, to: usize| (to + k - from) % k;
    if gap(pos[0], pos[1]) > gap(pos[0], pos[2]) {
        out.push(Violation {
            condition: 3,
            at: Location::Vertex(v),
            edges: edge_ids(&|a| a.outgoing.is_some()),
            message: "outgoing edges are not in clockwise order red, green, blue".into(),
        });
        return;
    }
    for (q, arm) in arms.iter().enumerate() {
        let Some(c) = arm.incoming else { continue };
        // incoming c lies in the clockwise sector from e_{c+1} to e_{c-1}
        let from = pos[c.next().index() - 1];
        let to = pos[c.prev().index() - 1];
        if gap(from, q) > gap(from, to) {
            out.push(Violation {
                condition: 3,
                at: Location::Vertex(v),
                edges: arm.dart.map(edge_of).into_iter().collect(),
                message: format!("incoming edge of color {c} lies outside its sector"),
            });
        }
    }
}

/// The arcs of color `c`: one dart per vertex other than `r_c`, validated to
/// form a spanning tree oriented towards `r_c`.
pub fn trees(s: &Suspension, wood: &SchnyderWood, c: Color) -> Result<Vec<Dart>> {
    let g = s.graph();
    let root = s.root(c);
    let mut parent = vec![None; g.n()];
    for v in 0..g.n() {
        let outs: Vec<Dart> = g.rotation(v).iter().copied().filter(|&d| wood.color_along(d) == Some(c)).collect();
        match (v == root, outs.len()) {
            (true, 0) => {}
            (false, 1) => parent[v] = Some(outs[0]),
            _ => return Err(Error::InvalidWood(format!("vertex {v} has {} outgoing {} edges", outs.len(), c.name()))),
        }
    }
    // every vertex must reach the root
    let mut state = vec![0u8; g.n()];
    state[root] = 2;
    for v in 0..g.n() {
        let mut path = Vec::new();
        let mut x = v;
        while state[x] == 0 {
            state[x] = 1;
            path.push(x);
            x = g.head(parent[x].expect("non-root has parent"));
        }
        if state[x] == 1 {
            return Err(Error::InvalidWood(format!("{} edges contain a cycle through {x}", c.name())));
        }
        for p in path {
            state[p] = 2;
        }
    }
    Ok(parent.into_iter().flatten().collect())
}

/// Whether `T_i ∪ T_{i-1}^{-1} ∪ T_{i+1}^{-1}` has no oriented cycle for
/// every color `i`. A cycle may use each edge once, so an edge colored
/// `i-1` and `i+1` is usable in both directions but does not form a cycle on
/// its own.
pub fn check_no_oriented_cycle(s: &Suspension, wood: &SchnyderWood) -> Result<bool> {
    let g = s.graph();
    for c in Color::ALL {
        let mut arcs: Vec<(Vertex, Vertex, EdgeId)> = Vec::new();
        for &d in &trees(s, wood, c)? {
            arcs.push((g.tail(d), g.head(d), edge_of(d)));
        }
        for other in [c.prev(), c.next()] {
            for &d in &trees(s, wood, other)? {
                arcs.push((g.head(d), g.tail(d), edge_of(d)));
            }
        }
        if has_mixed_cycle(g.n(), &arcs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cycle detection in a mixed graph: an edge listed in both directions is
/// undirected. Contracts the undirected components, which must be trees,
/// and checks the remaining arcs for a directed cycle.
fn has_mixed_cycle(n: usize, arcs: &[(Vertex, Vertex, EdgeId)]) -> bool {
    let mut dirs: HashMap<EdgeId, Vec<(Vertex, Vertex)>> = HashMap::new();
    for &(u, v, e) in arcs {
        let list = dirs.entry(e).or_default();
        if !list.contains(&(u, v)) {
            list.push((u, v));
        }
    }
    let mut dsu = Dsu::new(n);
    let mut directed = Vec::new();
    for list in dirs.values() {
        match list.as_slice() {
            [(u, v), _] => {
                if !dsu.union(*u, *v) {
                    return true;
                }
            }
            [(u, v)] => directed.push((*u, *v)),
            _ => unreachable!("an edge has two directions"),
        }
    }
    let mut contracted = Vec::new();
    for (u, v) in directed {
        let (a, b) = (dsu.find(u), dsu.find(v));
        if a == b {
            return true;
        }
        contracted.push((a, b));
    }
    !is_acyclic(n, &contracted)
}
