//! Suspensions, the apex-augmented graph and the suspended dual.

use crate::color::Color;
use crate::error::{Error, Result};
use crate::plane_graph::{edge_of, is_3_connected, twin, Dart, EdgeId, FaceId, PlaneGraph, Vertex};

/// A plane graph with three roots on its outer face, listed clockwise.
/// Each root carries a half-edge pointing into the outer face; the half-edge
/// at `r_i` sits in the outer-face corner of `r_i`.
#[derive(Debug, Clone)]
pub struct Suspension {
    graph: PlaneGraph,
    roots: [Vertex; 3],
}

/// `G` plus an apex vertex joined to the three roots. The apex edges play
/// the part of the half-edges: edge `m + i` joins root `i` (0-based) to the
/// apex and its canonical dart points from the root to the apex.
#[derive(Debug, Clone)]
pub struct Apexed {
    pub graph: PlaneGraph,
    pub apex: Vertex,
    /// Number of edges of the underlying graph; apex edges follow.
    pub base_edges: usize,
}

/// The suspended dual: the dual of the apex-augmented graph, with the three
/// outer pieces `b1, b2, b3` as roots. Dual edge ids coincide with edge ids
/// of the apex-augmented graph, so edge `e < m` is the dual of primal edge
/// `e` and edge `m + i` is the outer triangle edge crossed by the half-edge
/// at root `i`.
#[derive(Debug, Clone)]
pub struct SuspendedDual {
    pub suspension: Suspension,
    pub apexed: Apexed,
    /// Primal edge count `m`.
    pub base_edges: usize,
}

fn validate_roots(g: &PlaneGraph, roots: [Vertex; 3]) -> Result<()> {
    let outer = g.outer_boundary();
    let mut pos = [0usize; 3];
    for (i, &r) in roots.iter().enumerate() {
        pos[i] = outer.iter().position(|&v| v == r).ok_or(Error::RootsNotOnOuterFace)?;
    }
    if pos[0] == pos[1] || pos[1] == pos[2] || pos[0] == pos[2] {
        return Err(Error::RootsNotOnOuterFace);
    }
    let len = outer.len();
    let d1 = (pos[1] + len - pos[0]) % len;
    let d2 = (pos[2] + len - pos[0]) % len;
    if d1 > d2 {
        return Err(Error::RootsNotClockwise);
    }
    Ok(())
}

/// Whether `g` plus an apex adjacent to the three roots is 3-connected.
pub fn is_sigma_internally_3_connected(g: &PlaneGraph, roots: [Vertex; 3]) -> Result<bool> {
    validate_roots(g, roots)?;
    Ok(is_3_connected(&apex_graph(g, roots).graph))
}

fn apex_graph(g: &PlaneGraph, roots: [Vertex; 3]) -> Apexed {
    let n = g.n();
    let m = g.m();
    let apex = n;
    let mut head: Vec<Vertex> = (0..g.num_darts()).map(|d| g.head(d)).collect();
    let mut rotation: Vec<Vec<Dart>> = (0..n).map(|v| g.rotation(v).to_vec()).collect();
    let outer = g.outer_face();
    for (i, &r) in roots.iter().enumerate() {
        let to_apex = 2 * (m + i);
        head.push(apex);
        head.push(r);
        // The outer face enters r along some dart; the corner lies just
        // clockwise after the twin of that dart.
        let into = g.face_boundary(outer).iter().copied().find(|&d| g.head(d) == r).expect("root on outer face");
        let at = g.position(twin(into));
        rotation[r].insert(at + 1, to_apex);
    }
    rotation.push(vec![2 * m + 1, 2 * (m + 2) + 1, 2 * (m + 1) + 1]);
    let mut graph = PlaneGraph::from_parts(head, rotation).expect("apex stays planar");
    let f = graph.left_face(2 * m + 1);
    graph.set_outer_face(f);
    Apexed { graph, apex, base_edges: m }
}

impl Suspension {
    /// Checks the roots and σ-internal 3-connectivity.
    pub fn new(graph: PlaneGraph, roots: [Vertex; 3]) -> Result<Suspension> {
        if !is_sigma_internally_3_connected(&graph, roots)? {
            return Err(Error::NotInternally3Connected);
        }
        Ok(Suspension { graph, roots })
    }

    /// Checks the roots only. For generated families that are 3-connected by
    /// construction and too large for the quadratic connectivity test.
    pub fn new_trusted(graph: PlaneGraph, roots: [Vertex; 3]) -> Result<Suspension> {
        validate_roots(&graph, roots)?;
        Ok(Suspension { graph, roots })
    }

    pub fn graph(&self) -> &PlaneGraph {
        &self.graph
    }

    pub fn roots(&self) -> [Vertex; 3] {
        self.roots
    }

    pub fn root(&self, c: Color) -> Vertex {
        self.roots[c.index() - 1]
    }

    /// The color whose root is `v`, if any.
    pub fn root_color(&self, v: Vertex) -> Option<Color> {
        self.roots.iter().position(|&r| r == v).map(|i| Color::ALL[i])
    }

    pub fn apexed(&self) -> Apexed {
        apex_graph(&self.graph, self.roots)
    }

    /// Rotation of `v` with the half-edge included, as a sequence of
    /// `Some(dart)` and `None` for the half-edge.
    pub fn rotation_with_half_edge(&self, v: Vertex) -> Vec<Option<Dart>> {
        let mut rot: Vec<Option<Dart>> = self.graph.rotation(v).iter().map(|&d| Some(d)).collect();
        if self.root_color(v).is_some() {
            let outer = self.graph.outer_face();
            let into = self
                .graph
                .face_boundary(outer)
                .iter()
                .copied()
                .find(|&d| self.graph.head(d) == v)
                .expect("root on outer face");
            let at = self.graph.position(twin(into));
            rot.insert(at + 1, None);
        }
        rot
    }

    pub fn suspended_dual(&self) -> SuspendedDual {
        let apexed = self.apexed();
        let m = apexed.base_edges;
        let mut dual = apexed.graph.dual().dual_graph;
        let around_apex = PlaneGraph::dual_face_of_vertex(&dual, &apexed.graph, apexed.apex);
        dual.set_outer_face(around_apex);
        // b_i is the outer piece not incident to r_i: the face left of the
        // apex dart towards r_{i+1}.
        let b = |i: usize| apexed.graph.left_face(2 * (m + (i + 1) % 3) + 1);
        let roots = [b(0), b(1), b(2)];
        let suspension = Suspension::new_trusted(dual, roots).expect("outer pieces lie clockwise");
        SuspendedDual { suspension, apexed, base_edges: m }
    }
}

impl SuspendedDual {
    /// The primal edge crossed by dual edge `e`, or `None` for the outer
    /// triangle edges.
    pub fn primal_edge(&self, e: EdgeId) -> Option<EdgeId> {
        (e < self.base_edges).then_some(e)
    }

    /// Whether `e` is one of the three outer triangle edges `b_i b_j`.
    pub fn is_outer_triangle_edge(&self, e: EdgeId) -> bool {
        e >= self.base_edges
    }

    /// Dual vertex of the inner face of `G` that contains dart `d` on its
    /// left, or the outer piece `b_i` for outer-face darts.
    pub fn face_vertex_of_dart(&self, d: Dart) -> FaceId {
        self.apexed.graph.left_face(d)
    }

    pub fn dual_edge(&self, primal: EdgeId) -> EdgeId {
        debug_assert_eq!(edge_of(2 * primal), primal);
        primal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]], 0).unwrap()
    }

    #[test]
    fn k4_root_triples() {
        let g = k4();
        assert!(is_sigma_internally_3_connected(&g, [0, 1, 2]).unwrap());
        assert!(is_sigma_internally_3_connected(&g, [1, 2, 0]).unwrap());
        assert_eq!(is_sigma_internally_3_connected(&g, [0, 2, 1]), Err(Error::RootsNotClockwise));
        assert_eq!(is_sigma_internally_3_connected(&g, [0, 1, 3]), Err(Error::RootsNotOnOuterFace));
        assert_eq!(is_sigma_internally_3_connected(&g, [0, 1, 1]), Err(Error::RootsNotOnOuterFace));
    }

    #[test]
    fn apex_graph_shape() {
        let s = Suspension::new(k4(), [0, 1, 2]).unwrap();
        let a = s.apexed();
        assert_eq!((a.graph.n(), a.graph.m()), (5, 9));
        assert_eq!(a.graph.degree(a.apex), 3);
        // K4 plus an apex on the outer triangle is K5 minus the edge apex-3.
        assert!(is_3_connected(&a.graph));
    }

    #[test]
    fn suspended_dual_of_k4() {
        let s = Suspension::new(k4(), [0, 1, 2]).unwrap();
        let sd = s.suspended_dual();
        let d = sd.suspension.graph();
        // three inner faces plus b1, b2, b3
        assert_eq!(d.n(), 6);
        assert_eq!(d.m(), 9);
        assert_eq!(d.outer_boundary().len(), 3);
        // b_i is not incident to r_i: the outer triangle edge crossed by
        // the half-edge at r_i joins the other two outer pieces.
        for i in 0..3 {
            let (x, y) = d.endpoints(6 + i);
            let r = sd.suspension.roots();
            assert!(x != r[i] && y != r[i]);
        }
    }

    #[test]
    fn half_edge_sits_in_outer_corner() {
        let s = Suspension::new(k4(), [0, 1, 2]).unwrap();
        let rot = s.rotation_with_half_edge(0);
        assert_eq!(rot.len(), 4);
        assert_eq!(rot.iter().filter(|x| x.is_none()).count(), 1);
        assert_eq!(s.rotation_with_half_edge(3).len(), 3);
    }
}
