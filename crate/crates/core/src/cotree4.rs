//! A spanning tree of maximum degree four whose co-tree also has maximum
//! degree four.
//!
//! Start from the minimal Schnyder wood. Its bidirected edges form the
//! candidate graph `H`. Every cycle of `H` contains a whole path of the
//! green/blue path partition together with that path's extension. For each
//! such path one extension edge goes into the deletion set `D`. The dual
//! wood yields `D'` the same way, and the tree is `H - D + D'*`.

use std::fmt;

use crate::color::{Color, Green};
use crate::error::{Error, Result};
use crate::opp::{compatible_opp, OrderedPathPartition};
use crate::plane_graph::{edge_of, EdgeId, PlaneGraph, Vertex};
use crate::schnyder::{compute_wood, dual_wood, find_clockwise_cycle, minimize, SchnyderWood};
use crate::suspension::Suspension;
use crate::util::Dsu;

/// Which part of the selection procedure chose a deleted edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// The outgoing `j`-colored edge of the top root, cutting the outer cycle.
    OuterFace,
    /// The covering path is not itself index maximal.
    Case1,
    /// The covering path is index maximal and its deleted edge is its left
    /// edge or one of its own edges.
    Case21,
    /// The covering path is index maximal and its deleted edge is its right
    /// edge.
    Case22,
}

/// Which edge of a covered path's extension was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    /// An edge of the path itself covered by the covering path.
    CoveredPathEdge,
    /// The extension edge at the covering path's attachment vertex.
    SharedEnd,
    /// The right extension edge (the left one under [`Rule::Case22`]).
    Neighbor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Deletion {
    pub edge: EdgeId,
    /// The index maximal path whose extension contains the edge.
    pub path: usize,
    pub rule: Rule,
    pub choice: Option<Choice>,
    /// The minimal-covering path being processed, if any.
    pub covering: Option<usize>,
}

impl fmt::Display for Deletion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "edge {} path {} {:?}", self.edge, self.path, self.rule)?;
        if let Some(c) = self.choice {
            write!(f, " {c:?}")?;
        }
        if let Some(c) = self.covering {
            write!(f, " covered-by {c}")?;
        }
        Ok(())
    }
}

/// One side of the construction: the candidate graph of a minimal wood and
/// its deletion set.
#[derive(Debug, Clone)]
pub struct Side {
    pub opp: OrderedPathPartition,
    /// Membership in `H`, per edge of the host graph.
    pub candidate: Vec<bool>,
    pub index_maximal: Vec<usize>,
    /// `(P, L)`: path `L` is the minimal-covering path of `P`.
    pub covering: Vec<(usize, usize)>,
    pub deletions: Vec<Deletion>,
}

impl Side {
    pub fn deleted(&self) -> Vec<bool> {
        let mut out = vec![false; self.candidate.len()];
        for d in &self.deletions {
            out[d.edge] = true;
        }
        out
    }
}

/// The bidirected edges of `wood`. Errors if some vertex has more than three.
pub fn candidate(s: &Suspension, wood: &SchnyderWood) -> Result<Vec<bool>> {
    let g = s.graph();
    let h: Vec<bool> = (0..g.m()).map(|e| wood.is_bidirected(e)).collect();
    for v in 0..g.n() {
        let deg = g.rotation(v).iter().filter(|&&d| h[edge_of(d)]).count();
        if deg > 3 {
            return Err(Error::PostconditionFailure(format!("vertex {v} has {deg} bidirected edges")));
        }
    }
    Ok(h)
}

/// Paths `P_i` whose edges and extension edges all lie in `h` and whose
/// attachment vertices are joined by `h` inside `G[V_{i-1}]`. These are the
/// highest paths of the cycles of `h`.
pub fn index_maximal_subpaths(g: &PlaneGraph, h: &[bool], opp: &OrderedPathPartition) -> Vec<usize> {
    let mut dsu = Dsu::new(g.n());
    let mut out = Vec::new();
    for (i, path) in opp.paths.iter().enumerate() {
        if i > 0 {
            let in_h = opp.extension_edges(g, i).is_some_and(|es| es.iter().all(|&e| h[e]));
            let (v0, vk1) = opp.neighbors[i].expect("attachments for later paths");
            if in_h && dsu.find(v0) == dsu.find(vk1) {
                out.push(i);
            }
        }
        for &v in path {
            for &d in g.rotation(v) {
                if h[edge_of(d)] && opp.path_of[g.head(d)] <= i {
                    dsu.union(v, g.head(d));
                }
            }
        }
    }
    out
}

/// For every index maximal path but the last, the earliest path covering an
/// edge of its extension.
pub fn minimal_covering_paths(
    g: &PlaneGraph,
    opp: &OrderedPathPartition,
    index_maximal: &[usize],
) -> Result<Vec<(usize, usize)>> {
    let last = opp.len() - 1;
    let mut out = Vec::new();
    for &p in index_maximal.iter().filter(|&&p| p != last) {
        let edges = opp.extension_edges(g, p).ok_or(Error::NoCoveringPath(p))?;
        let l = edges.iter().filter_map(|&e| opp.edge_covered_by[e]).min().ok_or(Error::NoCoveringPath(p))?;
        if l <= p {
            return Err(Error::PostconditionFailure(format!("path {p} is covered by earlier path {l}")));
        }
        out.push((p, l));
    }
    Ok(out)
}

/// Chooses one extension edge of every index maximal path.
pub fn select_deletions(
    s: &Suspension,
    wood: &SchnyderWood,
    opp: &OrderedPathPartition,
    index_maximal: &[usize],
    covering: &[(usize, usize)],
) -> Result<Vec<Deletion>> {
    let g = s.graph();
    let j = opp.color;
    let last = opp.len() - 1;
    let mut deleted = vec![false; g.m()];
    let mut out = Vec::new();
    let top = s.root(j.prev());
    let outer = wood
        .outgoing(s, top, j)
        .ok_or_else(|| Error::PostconditionFailure(format!("root {top} has no outgoing {j}-colored edge")))?;
    let outer = edge_of(outer);
    deleted[outer] = true;
    out.push(Deletion { edge: outer, path: last, rule: Rule::OuterFace, choice: None, covering: None });

    let is_max = {
        let mut v = vec![false; opp.len()];
        for &p in index_maximal {
            v[p] = true;
        }
        v
    };
    let mut by_cover: Vec<Vec<usize>> = vec![Vec::new(); opp.len()];
    for &(p, l) in covering {
        by_cover[l].push(p);
    }
    for c in (1..opp.len()).rev() {
        if by_cover[c].is_empty() {
            continue;
        }
        let ext_c = opp.extension_edges(g, c).expect("extension of a later path");
        let rule = if !is_max[c] {
            Rule::Case1
        } else if ext_c[..ext_c.len() - 1].iter().any(|&e| deleted[e]) {
            Rule::Case21
        } else if deleted[ext_c[ext_c.len() - 1]] {
            Rule::Case22
        } else {
            return Err(Error::CaseExhaustion(c));
        };
        let (v0, vk1) = opp.neighbors[c].expect("attachments");
        let vk = *opp.paths[c].last().expect("non-empty");
        // order the covered paths along the contour
        let mut pos = vec![usize::MAX; g.m()];
        for (k, &e) in opp.covered_edges[c].iter().enumerate() {
            pos[e] = k;
        }
        let mut covered: Vec<(usize, usize)> = by_cover[c]
            .iter()
            .map(|&p| {
                let first =
                    opp.extension_edges(g, p).expect("extension").iter().map(|&e| pos[e]).min().unwrap_or(usize::MAX);
                (first, p)
            })
            .collect();
        covered.sort_unstable();
        let l = covered.len();
        for (idx, &(_, p)) in covered.iter().enumerate() {
            let path = &opp.paths[p];
            let ext = opp.extension_edges(g, p).expect("extension");
            let (left_edge, right_edge) = (ext[0], ext[ext.len() - 1]);
            let own = &ext[1..ext.len() - 1];
            let (u1, ut) = (path[0], *path.last().expect("non-empty"));
            let (edge, choice) = if let Some(&e) = own.iter().find(|&&e| opp.edge_covered_by[e] == Some(c)) {
                (e, Choice::CoveredPathEdge)
            } else if rule != Rule::Case22 && idx == l - 1 && u1 == vk1 {
                let right_c = g.find_dart(vk, vk1).expect("right edge");
                let colors = (wood.color_along(right_c), wood.color_along(right_c ^ 1));
                if colors != (Some(j), Some(j.prev())) {
                    return Err(Error::PostconditionFailure(format!(
                        "right edge {vk}-{vk1} of path {c} is not {}-{}-colored",
                        j.prev(),
                        j
                    )));
                }
                (left_edge, Choice::SharedEnd)
            } else if rule == Rule::Case22 && idx == 0 && ut == v0 {
                (right_edge, Choice::SharedEnd)
            } else if rule == Rule::Case22 {
                (left_edge, Choice::Neighbor)
            } else {
                (right_edge, Choice::Neighbor)
            };
            deleted[edge] = true;
            out.push(Deletion { edge, path: p, rule, choice: Some(choice), covering: Some(c) });
        }
    }
    Ok(out)
}

/// Candidate graph, index maximal paths, covering paths and deletions for a
/// minimal wood, partitioned by color `j`.
pub fn process_side(s: &Suspension, wood: &SchnyderWood, j: Color) -> Result<Side> {
    let g = s.graph();
    let opp = compatible_opp(s, wood, j)?;
    let candidate = candidate(s, wood)?;
    let index_maximal = index_maximal_subpaths(g, &candidate, &opp);
    let covering = minimal_covering_paths(g, &opp, &index_maximal)?;
    let deletions = select_deletions(s, wood, &opp, &index_maximal, &covering)?;
    let side = Side { opp, candidate, index_maximal, covering, deletions };
    check_side(g, &side)?;
    Ok(side)
}

/// `H - D` is a forest and every index maximal extension lost exactly one
/// edge.
fn check_side(g: &PlaneGraph, side: &Side) -> Result<()> {
    let deleted = side.deleted();
    let mut dsu = Dsu::new(g.n());
    for e in 0..g.m() {
        if side.candidate[e] && !deleted[e] {
            let (u, v) = g.endpoints(e);
            if !dsu.union(u, v) {
                return Err(Error::PostconditionFailure(format!("H - D still contains a cycle through {u}-{v}")));
            }
        }
    }
    for &p in &side.index_maximal {
        let hit = side.opp.extension_edges(g, p).expect("extension").iter().filter(|&&e| deleted[e]).count();
        if hit != 1 {
            return Err(Error::PostconditionFailure(format!("extension of path {p} lost {hit} edges")));
        }
    }
    Ok(())
}

/// A spanning tree and its co-tree, both as primal edge ids; co-tree edge
/// `e` stands for the dual edge crossing `e`.
#[derive(Debug, Clone)]
pub struct TreePair {
    pub tree: Vec<EdgeId>,
    pub co_tree: Vec<EdgeId>,
    pub tree_max_degree: usize,
    pub co_tree_max_degree: usize,
    pub wood: SchnyderWood,
    pub primal: Side,
    /// Computed on the suspended dual; edges `>= m` are the outer triangle.
    pub dual: Side,
}

/// Degree of every vertex in the edge set.
pub fn degrees(g: &PlaneGraph, edges: &[EdgeId]) -> Vec<usize> {
    let mut deg = vec![0; g.n()];
    for &e in edges {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    deg
}

/// Degree of every face when the duals of `edges` are taken as dual edges.
pub fn dual_degrees(g: &PlaneGraph, edges: &[EdgeId]) -> Vec<usize> {
    let mut deg = vec![0; g.num_faces()];
    for &e in edges {
        deg[g.left_face(2 * e)] += 1;
        deg[g.right_face(2 * e)] += 1;
    }
    deg
}

fn is_spanning_tree(n: usize, endpoints: impl Iterator<Item = (Vertex, Vertex)>, count: usize) -> bool {
    if count + 1 != n {
        return false;
    }
    let mut dsu = Dsu::new(n);
    for (u, v) in endpoints {
        if !dsu.union(u, v) {
            return false;
        }
    }
    true
}

/// The full construction: seed wood, minimization, both sides, assembly and
/// verification of the result.
pub fn build_tree_pair(s: &Suspension) -> Result<TreePair> {
    let wood = minimize(s, &compute_wood(s)?)?;
    build_tree_pair_from(s, wood)
}

/// [`build_tree_pair`] starting from a wood already known to be minimal.
pub fn build_tree_pair_from(s: &Suspension, wood: SchnyderWood) -> Result<TreePair> {
    let g = s.graph();
    let m = g.m();
    let primal = process_side(s, &wood, Green)?;
    let (sd, dw) = dual_wood(s, &wood)?;
    if find_clockwise_cycle(&sd.suspension, &dw)?.is_some() {
        return Err(Error::PostconditionFailure("dual of the minimal wood is not minimal".into()));
    }
    let dual = process_side(&sd.suspension, &dw, Green)?;
    let d = primal.deleted();
    let d_dual = dual.deleted();
    let tree: Vec<EdgeId> = (0..m).filter(|&e| (primal.candidate[e] && !d[e]) || d_dual[e]).collect();
    let co_tree: Vec<EdgeId> = (0..m).filter(|&e| (dual.candidate[e] && !d_dual[e]) || d[e]).collect();
    let tree_deg = degrees(g, &tree);
    let co_deg = dual_degrees(g, &co_tree);
    let pair = TreePair {
        tree_max_degree: tree_deg.iter().copied().max().unwrap_or(0),
        co_tree_max_degree: co_deg.iter().copied().max().unwrap_or(0),
        tree,
        co_tree,
        wood,
        primal,
        dual,
    };
    let mut problems = Vec::new();
    let mut in_tree = vec![false; m];
    for &e in &pair.tree {
        in_tree[e] = true;
    }
    let mut in_co = vec![false; m];
    for &e in &pair.co_tree {
        in_co[e] = true;
    }
    if let Some(e) = (0..m).find(|&e| in_tree[e] == in_co[e]) {
        problems.push(format!("edge {e} is in both or neither of tree and co-tree"));
    }
    if !is_spanning_tree(g.n(), pair.tree.iter().map(|&e| g.endpoints(e)), pair.tree.len()) {
        problems.push("tree is not a spanning tree".into());
    }
    let dual_ends = pair.co_tree.iter().map(|&e| (g.left_face(2 * e), g.right_face(2 * e)));
    if !is_spanning_tree(g.num_faces(), dual_ends, pair.co_tree.len()) {
        problems.push("co-tree is not a spanning tree of the dual".into());
    }
    if pair.tree_max_degree > 4 {
        problems.push(format!("tree has maximum degree {}", pair.tree_max_degree));
    }
    if pair.co_tree_max_degree > 4 {
        problems.push(format!("co-tree has maximum degree {}", pair.co_tree_max_degree));
    }
    if !problems.is_empty() {
        return Err(Error::PostconditionFailure(format!("{}; {}", problems.join("; "), certificate(g, &pair))));
    }
    Ok(pair)
}

/// Degrees and deletion provenance, one item per line.
pub fn certificate(g: &PlaneGraph, pair: &TreePair) -> String {
    let mut out = String::new();
    out.push_str(&format!("tree-max-degree {}\n", pair.tree_max_degree));
    out.push_str(&format!("co-tree-max-degree {}\n", pair.co_tree_max_degree));
    for d in &pair.primal.deletions {
        let (u, v) = g.endpoints(d.edge);
        out.push_str(&format!("D {u}-{v} {d}\n"));
    }
    let m = g.m();
    for d in &pair.dual.deletions {
        if d.edge < m {
            let (u, v) = g.endpoints(d.edge);
            out.push_str(&format!("D' dual-of {u}-{v} {d}\n"));
        } else {
            out.push_str(&format!("D' outer-triangle {} {d}\n", d.edge - m));
        }
    }
    out
}
