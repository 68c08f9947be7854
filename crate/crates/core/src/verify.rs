//! Independent checks of tree pairs and exhaustive oracles for small graphs.

use std::fmt;

use crate::color::Color;
use crate::cotree4::{degrees, dual_degrees, TreePair};
use crate::error::{Error, Result};
use crate::plane_graph::{EdgeId, PlaneGraph, Vertex};
use crate::suspension::Suspension;
use crate::util::Dsu;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    SpanningTree,
    CoTreeDuality,
    DegreeBound,
    RootDegrees,
    CutCycle,
    Oracle,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::SpanningTree => "spanning-tree",
            Kind::CoTreeDuality => "co-tree-duality",
            Kind::DegreeBound => "degree-bound",
            Kind::RootDegrees => "root-degrees",
            Kind::CutCycle => "cut-cycle",
            Kind::Oracle => "oracle",
        }
    }
}

/// Outcome of one check. A failure always names at least one offending
/// vertex, face or edge in `witness`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: Kind,
    pub pass: bool,
    pub witness: Vec<usize>,
    pub detail: String,
}

impl Certificate {
    fn pass(kind: Kind, detail: impl Into<String>) -> Certificate {
        Certificate { kind, pass: true, witness: Vec::new(), detail: detail.into() }
    }

    fn fail(kind: Kind, witness: Vec<usize>, detail: impl Into<String>) -> Certificate {
        debug_assert!(!witness.is_empty());
        Certificate { kind, pass: false, witness, detail: detail.into() }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", if self.pass { "PASS" } else { "FAIL" }, self.kind.name())?;
        for w in &self.witness {
            write!(f, " {w}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " # {}", self.detail)?;
        }
        Ok(())
    }
}

/// Spanning tree check on an arbitrary edge list over `n` vertices.
/// On failure the witness is the first edge closing a cycle, or the
/// vertices missed.
fn check_tree(kind: Kind, n: usize, ends: &[(usize, usize)]) -> Certificate {
    let mut dsu = Dsu::new(n);
    for (i, &(u, v)) in ends.iter().enumerate() {
        if !dsu.union(u, v) {
            return Certificate::fail(kind, vec![i], format!("edge {u}-{v} closes a cycle"));
        }
    }
    if ends.len() + 1 != n {
        let root = dsu.find(0);
        let missed: Vec<usize> = (0..n).filter(|&v| dsu.find(v) != root).collect();
        return Certificate::fail(
            kind,
            missed,
            format!("{} edges for {n} vertices; listed vertices unreached", ends.len()),
        );
    }
    Certificate::pass(kind, format!("{} edges", ends.len()))
}

/// Whether `edges` form a spanning tree of `g`. The witness is edge ids or
/// unreached vertices.
pub fn is_spanning_tree(g: &PlaneGraph, edges: &[EdgeId]) -> Certificate {
    let ends: Vec<(usize, usize)> = edges.iter().map(|&e| g.endpoints(e)).collect();
    let mut c = check_tree(Kind::SpanningTree, g.n(), &ends);
    if !c.pass && c.detail.contains("cycle") {
        c.witness = vec![edges[c.witness[0]]];
    }
    c
}

/// Whether the duals of `edges` form a spanning tree of the dual of `g`.
pub fn is_dual_spanning_tree(g: &PlaneGraph, edges: &[EdgeId]) -> Certificate {
    let ends: Vec<(usize, usize)> = edges.iter().map(|&e| (g.left_face(2 * e), g.right_face(2 * e))).collect();
    let mut c = check_tree(Kind::CoTreeDuality, g.num_faces(), &ends);
    if !c.pass && c.detail.contains("cycle") {
        c.witness = vec![edges[c.witness[0]]];
    }
    c
}

/// The edges not in `tree`; their duals form the co-tree.
pub fn co_tree_of(g: &PlaneGraph, tree: &[EdgeId]) -> Result<Vec<EdgeId>> {
    if !is_spanning_tree(g, tree).pass {
        return Err(Error::NotATree);
    }
    let mut in_tree = vec![false; g.m()];
    for &e in tree {
        in_tree[e] = true;
    }
    Ok((0..g.m()).filter(|&e| !in_tree[e]).collect())
}

fn components(n: usize, ends: impl Iterator<Item = (usize, usize)>) -> Dsu {
    let mut dsu = Dsu::new(n);
    for (u, v) in ends {
        dsu.union(u, v);
    }
    dsu
}

/// Whether `edges` is a cycle of `g`: non-empty, connected, every touched
/// vertex of degree two.
pub fn is_cycle(g: &PlaneGraph, edges: &[EdgeId]) -> bool {
    if edges.is_empty() {
        return false;
    }
    let deg = degrees(g, edges);
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let mut dsu = components(g.n(), edges.iter().map(|&e| g.endpoints(e)));
    let (u, _) = g.endpoints(edges[0]);
    let r = dsu.find(u);
    (0..g.n()).filter(|&v| deg[v] > 0).all(|v| dsu.find(v) == r)
}

/// Whether the duals of `edges` form a minimal cut of the dual: removing
/// them leaves exactly two components and every removed edge joins both.
pub fn is_dual_minimal_cut(g: &PlaneGraph, edges: &[EdgeId]) -> bool {
    let mut gone = vec![false; g.m()];
    for &e in edges {
        gone[e] = true;
    }
    let face_ends = |e: EdgeId| (g.left_face(2 * e), g.right_face(2 * e));
    let mut dsu = components(g.num_faces(), (0..g.m()).filter(|&e| !gone[e]).map(face_ends));
    let mut roots: Vec<usize> = (0..g.num_faces()).map(|f| dsu.find(f)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.len() == 2
        && !edges.is_empty()
        && edges.iter().all(|&e| {
            let (a, b) = face_ends(e);
            dsu.find(a) != dsu.find(b)
        })
}

/// `edges` is a cycle exactly when its dual is a minimal cut.
pub fn check_cut_cycle(g: &PlaneGraph, edges: &[EdgeId]) -> Certificate {
    let cycle = is_cycle(g, edges);
    let cut = is_dual_minimal_cut(g, edges);
    let detail = format!("cycle={cycle} dual-minimal-cut={cut}");
    if cycle == cut {
        Certificate::pass(Kind::CutCycle, detail)
    } else {
        Certificate::fail(Kind::CutCycle, edges.to_vec(), detail)
    }
}

/// Both sides of the pair have maximum degree at most `bound`.
pub fn check_degrees(g: &PlaneGraph, tree: &[EdgeId], co_tree: &[EdgeId], bound: usize) -> Certificate {
    let mut witness: Vec<usize> =
        degrees(g, tree).iter().enumerate().filter(|(_, &d)| d > bound).map(|(v, _)| v).collect();
    let faces: Vec<usize> =
        dual_degrees(g, co_tree).iter().enumerate().filter(|(_, &d)| d > bound).map(|(f, _)| f).collect();
    let detail = format!(
        "tree {} co-tree {}",
        degrees(g, tree).into_iter().max().unwrap_or(0),
        dual_degrees(g, co_tree).into_iter().max().unwrap_or(0)
    );
    if witness.is_empty() && faces.is_empty() {
        return Certificate::pass(Kind::DegreeBound, detail);
    }
    witness.extend(faces.iter().map(|&f| g.n() + f));
    Certificate::fail(Kind::DegreeBound, witness, format!("{detail}; faces listed as n + face"))
}

/// Degree properties at the roots of a constructed pair: `r_1` is a leaf,
/// every outer edge except the outgoing green edge of `r_1` is in the tree,
/// `r_3` has degree two, `r_2` degree at most three and the outer face is a
/// leaf of the co-tree.
pub fn check_root_degrees(s: &Suspension, pair: &TreePair) -> Certificate {
    let g = s.graph();
    let [r1, r2, r3] = s.roots();
    let deg = degrees(g, &pair.tree);
    let mut in_tree = vec![false; g.m()];
    for &e in &pair.tree {
        in_tree[e] = true;
    }
    let skip = pair.wood.outgoing(s, r1, Color::Green).map(|d| d / 2);
    let mut problems = Vec::new();
    let mut witness = Vec::new();
    if deg[r1] != 1 {
        problems.push(format!("r1 has degree {}", deg[r1]));
        witness.push(r1);
    }
    if deg[r3] != 2 {
        problems.push(format!("r3 has degree {}", deg[r3]));
        witness.push(r3);
    }
    if deg[r2] > 3 {
        problems.push(format!("r2 has degree {}", deg[r2]));
        witness.push(r2);
    }
    for &d in g.face_boundary(g.outer_face()) {
        let e = d / 2;
        if Some(e) != skip && !in_tree[e] {
            let (u, v) = g.endpoints(e);
            problems.push(format!("outer edge {u}-{v} missing"));
            witness.extend([u, v]);
        }
    }
    let outer_deg = dual_degrees(g, &pair.co_tree)[g.outer_face()];
    if outer_deg != 1 {
        problems.push(format!("outer face has co-tree degree {outer_deg}"));
        witness.push(g.n() + g.outer_face());
    }
    if problems.is_empty() {
        Certificate::pass(Kind::RootDegrees, format!("r1 1, r2 {}, r3 2", deg[r2]))
    } else {
        Certificate::fail(Kind::RootDegrees, witness, problems.join("; "))
    }
}

/// All certificates for a tree given as edge ids: spanning tree, co-tree
/// duality and the degree bound `bound`.
pub fn certify_tree(g: &PlaneGraph, tree: &[EdgeId], bound: usize) -> Vec<Certificate> {
    let mut out = vec![is_spanning_tree(g, tree)];
    let mut in_tree = vec![false; g.m()];
    for &e in tree {
        in_tree[e] = true;
    }
    let co: Vec<EdgeId> = (0..g.m()).filter(|&e| !in_tree[e]).collect();
    out.push(is_dual_spanning_tree(g, &co));
    out.push(check_degrees(g, tree, &co, bound));
    out
}

/// Number of spanning trees by the matrix-tree theorem (fraction-free
/// elimination). Saturates at `u128::MAX` on overflow.
pub fn count_spanning_trees(n: usize, edges: &[(usize, usize)]) -> u128 {
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for &(u, v) in edges {
        if u == v {
            continue;
        }
        if u < k {
            a[u][u] += 1;
        }
        if v < k {
            a[v][v] += 1;
        }
        if u < k && v < k {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    let mut prev = 1i128;
    let mut sign = 1i128;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(r) = (i + 1..k).find(|&r| a[r][i] != 0) else { return 0 };
            a.swap(i, r);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let x = a[r][c].checked_mul(a[i][i]).zip(a[r][i].checked_mul(a[i][c]));
                let Some((p, q)) = x else { return u128::MAX };
                let Some(diff) = p.checked_sub(q) else { return u128::MAX };
                a[r][c] = diff / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    (sign * a[k - 1][k - 1]).unsigned_abs()
}

/// Calls `visit` with the edge mask of every spanning tree. Edges are given
/// as endpoint pairs (parallel edges allowed), at most 64 of them. Fails
/// without enumerating when the matrix-tree count exceeds `limit`.
pub fn spanning_trees(n: usize, edges: &[(usize, usize)], limit: u128, mut visit: impl FnMut(u64)) -> Result<u128> {
    if edges.len() > 64 || n > 64 {
        return Err(Error::BadParameters(format!(
            "enumeration supports 64 vertices and edges, got {n} and {}",
            edges.len()
        )));
    }
    let total = count_spanning_trees(n, edges);
    if total > limit {
        return Err(Error::TooManyTrees(total, limit));
    }
    if n == 0 {
        return Ok(0);
    }
    let m = edges.len();
    // suffix[e][v]: neighbors of v through edges e..m
    let mut suffix = vec![vec![0u64; n]; m + 1];
    for e in (0..m).rev() {
        suffix[e] = suffix[e + 1].clone();
        let (u, v) = edges[e];
        suffix[e][u] |= 1 << v;
        suffix[e][v] |= 1 << u;
    }
    let mut st = Enum { n, edges, suffix, comp: (0..n).map(|v| 1u64 << v).collect(), rep: (0..n).collect(), count: 0 };
    st.go(0, 0, 0, &mut visit);
    Ok(st.count)
}

struct Enum<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    suffix: Vec<Vec<u64>>,
    /// Vertex mask of the component represented by each representative.
    comp: Vec<u64>,
    rep: Vec<usize>,
    count: u128,
}

impl Enum<'_> {
    /// Whether `u` and `v` are joined using chosen edges and edges `from..`.
    fn joined_later(&self, u: usize, v: usize, from: usize) -> bool {
        let target = 1u64 << v;
        let mut reach = self.comp[self.rep[u]];
        let mut done = 0u64;
        while reach & target == 0 {
            let todo = reach & !done;
            if todo == 0 {
                return false;
            }
            let mut bits = todo;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let nb = self.suffix[from][x];
                let mut nbits = nb & !reach;
                while nbits != 0 {
                    let y = nbits.trailing_zeros() as usize;
                    nbits &= nbits - 1;
                    reach |= self.comp[self.rep[y]];
                }
            }
            done |= todo;
        }
        true
    }

    fn go(&mut self, e: usize, chosen: usize, mask: u64, visit: &mut impl FnMut(u64)) {
        if chosen + 1 == self.n {
            self.count += 1;
            visit(mask);
            return;
        }
        if e == self.edges.len() {
            return;
        }
        let (u, v) = self.edges[e];
        let (ru, rv) = (self.rep[u], self.rep[v]);
        let can_include = ru != rv;
        let can_exclude = !can_include || self.joined_later(u, v, e + 1);
        if can_include {
            // merge rv into ru, remembering the members to restore
            let moved = self.comp[rv];
            let mut bits = moved;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.rep[x] = ru;
            }
            self.comp[ru] |= moved;
            self.go(e + 1, chosen + 1, mask | (1 << e), visit);
            self.comp[ru] &= !moved;
            let mut bits = moved;
            while bits != 0 {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                self.rep[x] = rv;
            }
        }
        if can_exclude {
            self.go(e + 1, chosen, mask, visit);
        }
    }
}

/// Exhaustive search over spanning trees of a plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub trees: u128,
    /// Minimum over spanning trees `T` of `max(maxdeg T, maxdeg co-tree)`.
    pub optimum: usize,
    pub witness: Vec<EdgeId>,
    /// Number of trees with both maximum degrees at most four.
    pub pairs_within_4: u128,
    /// Whether some tree has both maximum degrees at most three.
    pub has_3_3: bool,
    /// Degrees of the queried tree, if it was enumerated.
    pub query: Option<(usize, usize)>,
}

/// Enumerates all spanning trees of `g` and their co-trees. `query`, if
/// given, is looked up among the enumerated trees.
pub fn oracle_best_pair(g: &PlaneGraph, limit: u128, query: Option<&[EdgeId]>) -> Result<OracleReport> {
    let ends: Vec<(usize, usize)> = (0..g.m()).map(|e| g.endpoints(e)).collect();
    let face_ends: Vec<(usize, usize)> = (0..g.m()).map(|e| (g.left_face(2 * e), g.right_face(2 * e))).collect();
    let query_mask = query.map(|q| q.iter().fold(0u64, |acc, &e| acc | (1 << e)));
    let mut best = (usize::MAX, 0u64);
    let mut within = 0u128;
    let mut has_3_3 = false;
    let mut found = None;
    let mut deg = vec![0usize; g.n()];
    let mut fdeg = vec![0usize; g.num_faces()];
    let trees = spanning_trees(g.n(), &ends, limit, |mask| {
        deg.iter_mut().for_each(|d| *d = 0);
        fdeg.iter_mut().for_each(|d| *d = 0);
        for (e, (&(u, v), &(a, b))) in ends.iter().zip(&face_ends).enumerate() {
            if mask >> e & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            } else {
                fdeg[a] += 1;
                fdeg[b] += 1;
            }
        }
        let t = deg.iter().copied().max().unwrap_or(0);
        let c = fdeg.iter().copied().max().unwrap_or(0);
        let worst = t.max(c);
        if worst < best.0 {
            best = (worst, mask);
        }
        if worst <= 4 {
            within += 1;
        }
        if worst <= 3 {
            has_3_3 = true;
        }
        if Some(mask) == query_mask {
            found = Some((t, c));
        }
    })?;
    let witness = (0..g.m()).filter(|&e| best.1 >> e & 1 == 1).collect();
    Ok(OracleReport { trees, optimum: best.0, witness, pairs_within_4: within, has_3_3, query: found })
}

/// Minimum maximum degree over all spanning trees of the multigraph, with a
/// witness edge mask.
pub fn min_max_degree(n: usize, edges: &[(usize, usize)], limit: u128) -> Result<(usize, u64)> {
    let mut best = (usize::MAX, 0u64);
    let mut deg = vec![0usize; n];
    spanning_trees(n, edges, limit, |mask| {
        deg.iter_mut().for_each(|d| *d = 0);
        for (e, &(u, v)) in edges.iter().enumerate() {
            if mask >> e & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let worst = deg.iter().copied().max().unwrap_or(0);
        if worst < best.0 {
            best = (worst, mask);
        }
    })?;
    Ok(best)
}

/// Edge list of the dual of `g` as pairs of face ids.
pub fn dual_edge_list(g: &PlaneGraph) -> Vec<(Vertex, Vertex)> {
    (0..g.m()).map(|e| (g.left_face(2 * e), g.right_face(2 * e))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{platonic, Platonic};

    fn k4() -> PlaneGraph {
        PlaneGraph::from_faces(4, &[vec![0, 1, 2], vec![0, 3, 1], vec![1, 3, 2], vec![2, 3, 0]], 0).unwrap()
    }

    #[test]
    fn tree_certificates() {
        let g = k4();
        let e = |u, v| g.find_edge(u, v).unwrap();
        assert!(is_spanning_tree(&g, &[e(1, 2), e(2, 0), e(3, 0)]).pass);
        let tri = is_spanning_tree(&g, &[e(0, 1), e(1, 2), e(2, 0)]);
        assert!(!tri.pass && !tri.witness.is_empty());
        assert!(!is_spanning_tree(&g, &[e(0, 1), e(1, 2)]).pass);
        let co = co_tree_of(&g, &[e(1, 2), e(2, 0), e(3, 0)]).unwrap();
        assert!(is_dual_spanning_tree(&g, &co).pass);
        assert_eq!(co_tree_of(&g, &[e(0, 1)]), Err(Error::NotATree));
    }

    #[test]
    fn cut_cycle_duality() {
        let g = k4();
        let e = |u, v| g.find_edge(u, v).unwrap();
        let tri = [e(0, 1), e(1, 2), e(2, 0)];
        assert!(is_cycle(&g, &tri) && is_dual_minimal_cut(&g, &tri));
        assert!(check_cut_cycle(&g, &[e(0, 1)]).pass);
        for f in 0..g.num_faces() {
            let edges: Vec<EdgeId> = g.face_boundary(f).iter().map(|d| d / 2).collect();
            let c = check_cut_cycle(&g, &edges);
            assert!(c.pass && is_cycle(&g, &edges), "{c}");
        }
    }

    #[test]
    fn tree_counts() {
        let g = k4();
        let ends: Vec<_> = g.edges().collect();
        assert_eq!(count_spanning_trees(4, &ends), 16);
        assert_eq!(spanning_trees(4, &ends, 100, |_| {}).unwrap(), 16);
        let oct = platonic(Platonic::Octahedron).unwrap();
        let ends: Vec<_> = oct.edges().collect();
        assert_eq!(count_spanning_trees(6, &ends), 384);
        assert_eq!(spanning_trees(6, &ends, 1000, |_| {}).unwrap(), 384);
        assert!(matches!(spanning_trees(6, &ends, 10, |_| {}), Err(Error::TooManyTrees(384, 10))));
        // a triangle with one doubled edge
        assert_eq!(spanning_trees(3, &[(0, 1), (0, 1), (1, 2), (2, 0)], 100, |_| {}).unwrap(), 5);
    }

    #[test]
    fn k4_oracle() {
        let r = oracle_best_pair(&k4(), 100, None).unwrap();
        assert_eq!(r.trees, 16);
        // the path 1-2-0-3 has the path of faces 012, 031, 132, 230 as co-tree
        assert_eq!(r.optimum, 2);
        assert!(r.has_3_3);
        assert_eq!(r.pairs_within_4, 16);
    }
}
