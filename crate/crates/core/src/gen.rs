//! Graph families: named solids, wheels, prisms, the worked example with
//! ten vertices, the `G_k` family and seeded random triangulations.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::plane_graph::{is_3_connected, PlaneGraph, Vertex};
use crate::suspension::is_sigma_internally_3_connected;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Platonic {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Platonic {
    pub const ALL: [Platonic; 5] =
        [Platonic::Tetrahedron, Platonic::Cube, Platonic::Octahedron, Platonic::Dodecahedron, Platonic::Icosahedron];
}

/// Which graph to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Cycle of `k` vertices plus a hub.
    Wheel(usize),
    /// Two concentric `k`-cycles joined by a matching.
    Prism(usize),
    Platonic(Platonic),
    /// The ten-vertex example graph with its drawn Schnyder wood.
    Example,
    /// Cycle `w_0..w_{k-1}` with an outer vertex `p_i` on each edge `w_i w_{i+1}`.
    Gk(usize),
    RandomTriangulation {
        n: usize,
        seed: u64,
    },
    /// Planar dual of a random triangulation: a cubic 3-connected graph.
    RandomCubic {
        faces: usize,
        seed: u64,
    },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Wheel(k) => write!(f, "wheel-{k}"),
            GeneratorSpec::Prism(k) => write!(f, "prism-{k}"),
            GeneratorSpec::Platonic(p) => write!(f, "{}", format!("{p:?}").to_lowercase()),
            GeneratorSpec::Example => write!(f, "example"),
            GeneratorSpec::Gk(k) => write!(f, "g-{k}"),
            GeneratorSpec::RandomTriangulation { n, seed } => write!(f, "triangulation-{n}-s{seed}"),
            GeneratorSpec::RandomCubic { faces, seed } => write!(f, "cubic-{faces}-s{seed}"),
        }
    }
}

/// Parses the names produced by `Display`, e.g. `wheel-6`, `cube`,
/// `triangulation-100-s3`.
impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GeneratorSpec> {
        let bad = || Error::BadParameters(format!("unknown graph family `{s}`"));
        let num = |w: &str| w.parse::<usize>().map_err(|_| bad());
        let seed = |w: &str| w.strip_prefix('s').and_then(|x| x.parse::<u64>().ok()).ok_or_else(bad);
        if let Some(p) = Platonic::ALL.into_iter().find(|p| format!("{p:?}").eq_ignore_ascii_case(s)) {
            return Ok(GeneratorSpec::Platonic(p));
        }
        let parts: Vec<&str> = s.split('-').collect();
        Ok(match parts[..] {
            ["example"] => GeneratorSpec::Example,
            ["wheel", k] => GeneratorSpec::Wheel(num(k)?),
            ["prism", k] => GeneratorSpec::Prism(num(k)?),
            ["g", k] => GeneratorSpec::Gk(num(k)?),
            ["triangulation", n, s] => GeneratorSpec::RandomTriangulation { n: num(n)?, seed: seed(s)? },
            ["cubic", f, s] => GeneratorSpec::RandomCubic { faces: num(f)?, seed: seed(s)? },
            _ => return Err(bad()),
        })
    }
}

/// A generated graph with its outer face and default roots.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: PlaneGraph,
    pub roots: [Vertex; 3],
}

/// The smallest vertex of the outer face and the next two clockwise.
pub fn default_roots(g: &PlaneGraph) -> [Vertex; 3] {
    let outer = g.outer_boundary();
    let i = (0..outer.len()).min_by_key(|&i| outer[i]).expect("outer face is nonempty");
    let len = outer.len();
    [outer[i], outer[(i + 1) % len], outer[(i + 2) % len]]
}

/// Builds an embedding from a straight-line drawing: neighbors are sorted
/// clockwise by angle. `outer` lists the outer face clockwise.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(Vertex, Vertex)], outer: &[Vertex]) -> Result<PlaneGraph> {
    let n = points.len();
    let mut nbrs: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for (v, list) in nbrs.iter_mut().enumerate() {
        let (x, y) = points[v];
        let angle = |u: &Vertex| (points[*u].1 - y).atan2(points[*u].0 - x);
        // decreasing angle is clockwise
        list.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
    }
    PlaneGraph::from_rotation(&nbrs, outer)
}

fn polar(r: f64, degrees: f64) -> (f64, f64) {
    let t = degrees.to_radians();
    (r * t.cos(), r * t.sin())
}

pub fn wheel(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::BadParameters(format!("wheel needs k >= 3, got {k}")));
    }
    let mut pts: Vec<(f64, f64)> = (0..k).map(|i| polar(10.0, 90.0 - 360.0 * i as f64 / k as f64)).collect();
    pts.push((0.0, 0.0));
    let mut edges: Vec<(Vertex, Vertex)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    from_drawing(&pts, &edges, &(0..k).collect::<Vec<_>>())
}

pub fn prism(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::BadParameters(format!("prism needs k >= 3, got {k}")));
    }
    let angle = |i: usize| 90.0 - 360.0 * i as f64 / k as f64;
    let mut pts: Vec<(f64, f64)> = (0..k).map(|i| polar(10.0, angle(i))).collect();
    pts.extend((0..k).map(|i| polar(5.0, angle(i))));
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    from_drawing(&pts, &edges, &(0..k).collect::<Vec<_>>())
}

pub fn platonic(p: Platonic) -> Result<PlaneGraph> {
    match p {
        Platonic::Tetrahedron => wheel(3),
        Platonic::Cube => prism(4),
        Platonic::Octahedron => {
            let mut pts: Vec<(f64, f64)> = (0..3).map(|i| polar(10.0, 90.0 - 120.0 * i as f64)).collect();
            pts.extend((0..3).map(|i| polar(3.0, 30.0 - 120.0 * i as f64)));
            let mut edges = Vec::new();
            for i in 0..3 {
                edges.push((i, (i + 1) % 3));
                edges.push((3 + i, 3 + (i + 1) % 3));
                // inner vertex 3+i sits between outer i and i+1
                edges.push((3 + i, i));
                edges.push((3 + i, (i + 1) % 3));
            }
            from_drawing(&pts, &edges, &[0, 1, 2])
        }
        Platonic::Icosahedron => {
            // outer triangle, a ring of six, an inner triangle
            let mut pts: Vec<(f64, f64)> = (0..3).map(|i| polar(10.0, 90.0 - 120.0 * i as f64)).collect();
            pts.extend((0..6).map(|i| polar(4.0, 90.0 - 60.0 * i as f64)));
            pts.extend((0..3).map(|i| polar(2.0, 30.0 - 120.0 * i as f64)));
            let ring = |i: usize| 3 + i % 6;
            let mut edges = Vec::new();
            for i in 0..3 {
                edges.push((i, (i + 1) % 3));
                edges.push((9 + i, 9 + (i + 1) % 3));
                for t in [5, 0, 1] {
                    edges.push((i, ring(2 * i + t)));
                }
                for t in [0, 1, 2] {
                    edges.push((9 + i, ring(2 * i + t)));
                }
            }
            edges.extend((0..6).map(|i| (ring(i), ring(i + 1))));
            from_drawing(&pts, &edges, &[0, 1, 2])
        }
        Platonic::Dodecahedron => {
            let mut pts = Vec::new();
            for (r, shift) in [(10.0, 0.0), (7.0, 0.0), (5.0, 36.0), (3.0, 36.0)] {
                pts.extend((0..5).map(|i| polar(r, 90.0 - 72.0 * i as f64 - shift)));
            }
            let mut edges = Vec::new();
            for i in 0..5 {
                let j = (i + 1) % 5;
                edges.push((i, j));
                edges.push((i, 5 + i));
                edges.push((5 + i, 10 + i));
                edges.push((10 + i, 5 + j));
                edges.push((10 + i, 15 + i));
                edges.push((15 + i, 15 + j));
            }
            from_drawing(&pts, &edges, &[0, 1, 2, 3, 4])
        }
    }
}

/// Vertex ids of the example graph: the roots are 0, 1, 2.
pub const EXAMPLE_POINTS: [(f64, f64); 10] = [
    (0.0, 10.0),
    (6.0, 0.0),
    (-6.0, 0.0),
    (-2.0, 0.0),
    (2.0, 0.0),
    (-1.5, 2.0),
    (1.5, 2.0),
    (-2.0, 3.5),
    (2.0, 3.5),
    (0.0, 7.0),
];

pub const EXAMPLE_EDGES: [(Vertex, Vertex); 15] = [
    (2, 3),
    (3, 4),
    (4, 1),
    (3, 5),
    (4, 6),
    (5, 7),
    (6, 8),
    (5, 6),
    (2, 7),
    (1, 8),
    (2, 0),
    (1, 0),
    (9, 7),
    (9, 8),
    (0, 9),
];

pub fn example() -> Result<PlaneGraph> {
    from_drawing(&EXAMPLE_POINTS, &EXAMPLE_EDGES, &[0, 1, 4, 3, 2])
}

/// A Schnyder wood of the example graph with roots 0, 1, 2 that is not
/// minimal. Format as read by [`crate::format::parse_wood`].
pub const EXAMPLE_WOOD: &str = "\
2 3 bi 3 2
3 4 bi 3 2
4 1 bi 3 2
3 5 bi 3 1
4 6 bi 2 1
5 7 bi 2 1
6 8 bi 3 1
5 6 bi 3 2
7 2 uni 2 3
8 1 uni 1 2
2 0 bi 3 1
1 0 bi 2 1
7 9 bi 3 1
8 9 bi 2 1
9 0 uni 0 1
";

/// `w_i = i`, `p_i = k + i`; the outer face is `w_0 p_0 w_1 p_1 ...`.
pub fn gk(k: usize) -> Result<PlaneGraph> {
    if k < 3 {
        return Err(Error::BadParameters(format!("G_k needs k >= 3, got {k}")));
    }
    let angle = |t: f64| 90.0 - 360.0 * t / k as f64;
    let mut pts: Vec<(f64, f64)> = (0..k).map(|i| polar(5.0, angle(i as f64))).collect();
    pts.extend((0..k).map(|i| polar(8.0, angle(i as f64 + 0.5))));
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, i));
        edges.push((k + i, (i + 1) % k));
    }
    let outer: Vec<Vertex> = (0..k).flat_map(|i| [i, k + i]).collect();
    from_drawing(&pts, &edges, &outer)
}

/// Triangles given counterclockwise; the outer face is `0, 2, 1`.
fn random_triangles(n: usize, seed: u64) -> Vec<[Vertex; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tris: Vec<[Vertex; 3]> = vec![[0, 1, 2]];
    for v in 3..n {
        let t = rng.gen_range(0..tris.len());
        let [a, b, c] = tris[t];
        tris[t] = [a, b, v];
        tris.push([b, c, v]);
        tris.push([c, a, v]);
    }
    // random flips of inner edges
    let mut side: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for k in 0..3 {
            side.insert((t[k], t[(k + 1) % 3]), i);
        }
    }
    for _ in 0..2 * n {
        let t1 = rng.gen_range(0..tris.len());
        let k = rng.gen_range(0..3);
        let (a, b, c) = (tris[t1][k], tris[t1][(k + 1) % 3], tris[t1][(k + 2) % 3]);
        let Some(&t2) = side.get(&(b, a)) else { continue };
        let d = *tris[t2].iter().find(|&&x| x != a && x != b).expect("triangle");
        if side.contains_key(&(c, d)) || side.contains_key(&(d, c)) {
            continue;
        }
        for t in [t1, t2] {
            for k in 0..3 {
                side.remove(&(tris[t][k], tris[t][(k + 1) % 3]));
            }
        }
        tris[t1] = [a, d, c];
        tris[t2] = [d, b, c];
        for t in [t1, t2] {
            for k in 0..3 {
                side.insert((tris[t][k], tris[t][(k + 1) % 3]), t);
            }
        }
    }
    tris
}

/// A maximal planar graph on `n` vertices: random insertions into faces
/// followed by random flips of inner edges.
pub fn random_triangulation(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 4 {
        return Err(Error::BadParameters(format!("triangulation needs n >= 4, got {n}")));
    }
    let mut faces: Vec<Vec<Vertex>> = vec![vec![0, 2, 1]];
    faces.extend(random_triangles(n, seed).into_iter().map(|t| t.to_vec()));
    PlaneGraph::from_faces(n, &faces, 0)
}

/// The dual of a random triangulation with `faces` faces (`faces` even,
/// at least 4), as a simple graph with `faces` vertices.
pub fn random_cubic(faces: usize, seed: u64) -> Result<PlaneGraph> {
    if faces < 4 || faces % 2 == 1 {
        return Err(Error::BadParameters(format!("cubic graph needs an even vertex count >= 4, got {faces}")));
    }
    let t = random_triangulation(faces / 2 + 2, seed)?;
    let dual = t.dual().dual_graph;
    PlaneGraph::from_rotation(&dual.rotation_lists(), &dual.outer_boundary())
}

pub fn generate(spec: GeneratorSpec) -> Result<Instance> {
    let graph = match spec {
        GeneratorSpec::Wheel(k) => wheel(k)?,
        GeneratorSpec::Prism(k) => prism(k)?,
        GeneratorSpec::Platonic(p) => platonic(p)?,
        GeneratorSpec::Example => example()?,
        GeneratorSpec::Gk(k) => gk(k)?,
        GeneratorSpec::RandomTriangulation { n, seed } => random_triangulation(n, seed)?,
        GeneratorSpec::RandomCubic { faces, seed } => random_cubic(faces, seed)?,
    };
    // the example's stored wood is drawn for these roots
    let roots = if spec == GeneratorSpec::Example { [0, 1, 2] } else { default_roots(&graph) };
    Ok(Instance { name: spec.to_string(), graph, roots })
}

/// Removes random inner edges of `g` while the graph stays 3-connected with
/// the given roots on the outer face. Meant for small graphs: every removal
/// runs the quadratic connectivity test.
pub fn thin(g: &PlaneGraph, roots: [Vertex; 3], removals: usize, seed: u64) -> Result<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = g.clone();
    let mut order: Vec<(Vertex, Vertex)> = current.edges().collect();
    order.shuffle(&mut rng);
    let outer: HashSet<Vertex> = current.outer_boundary().into_iter().collect();
    let mut removed = 0;
    for (u, v) in order {
        if removed == removals {
            break;
        }
        if outer.contains(&u) && outer.contains(&v) {
            continue;
        }
        let mut rot = current.rotation_lists();
        rot[u].retain(|&x| x != v);
        rot[v].retain(|&x| x != u);
        let Ok(candidate) = PlaneGraph::from_rotation(&rot, &current.outer_boundary()) else { continue };
        if is_3_connected(&candidate) && is_sigma_internally_3_connected(&candidate, roots)? {
            current = candidate;
            removed += 1;
        }
    }
    Ok(current)
}

/// Corpus profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    /// Named fixtures and graphs small enough for exhaustive oracles.
    Small,
    /// Random graphs up to 500 vertices.
    Medium,
    /// Random triangulations of 1250 to 20000 vertices.
    Bench,
    /// `G_k` for k = 4..7; never σ-internally 3-connected.
    Negative,
}

pub const BENCH_SIZES: [usize; 5] = [1250, 2500, 5000, 10000, 20000];

pub fn corpus_specs(profile: Profile) -> Vec<GeneratorSpec> {
    use GeneratorSpec::*;
    match profile {
        Profile::Small => {
            let mut v = vec![Example];
            v.extend(self::Platonic::ALL.map(GeneratorSpec::Platonic));
            v.extend((4..=8).map(Wheel));
            v.extend((3..=6).map(Prism));
            for n in 5..=12 {
                v.extend((0..3).map(|seed| RandomTriangulation { n, seed }));
            }
            for faces in [6, 8, 10, 12, 14] {
                v.extend((0..2).map(|seed| RandomCubic { faces, seed }));
            }
            v
        }
        Profile::Medium => {
            let mut v = Vec::new();
            for (i, n) in (15..=500).step_by(5).enumerate() {
                v.push(RandomTriangulation { n, seed: 100 + i as u64 });
            }
            for (i, faces) in (16..=400).step_by(8).enumerate() {
                v.push(RandomCubic { faces, seed: 200 + i as u64 });
            }
            v
        }
        Profile::Bench => BENCH_SIZES.iter().map(|&n| RandomTriangulation { n, seed: n as u64 }).collect(),
        Profile::Negative => (4..=7).map(Gk).collect(),
    }
}

/// Generated instances of a profile. The small and medium profiles also
/// contain thinned triangulations with mixed face sizes.
pub fn corpus(profile: Profile) -> Result<Vec<Instance>> {
    let mut out: Vec<Instance> = corpus_specs(profile).into_iter().map(generate).collect::<Result<_>>()?;
    let thinned: &[(usize, usize)] = match profile {
        Profile::Small => &[(8, 3), (10, 5), (12, 6)],
        Profile::Medium => &[(20, 10), (30, 15), (40, 20), (50, 25), (60, 30)],
        _ => &[],
    };
    for (i, &(n, k)) in thinned.iter().enumerate() {
        let seed = 300 + i as u64;
        let base = random_triangulation(n, seed)?;
        let roots = default_roots(&base);
        let graph = thin(&base, roots, k, seed)?;
        out.push(Instance { name: format!("thinned-{n}-{k}-s{seed}"), graph, roots });
    }
    Ok(out)
}
