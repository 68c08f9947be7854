//! Wall-clock timing of the full construction on random triangulations.

use std::time::Instant;

use crate::cotree4::build_tree_pair;
use crate::error::Result;
use crate::gen::{generate, GeneratorSpec};
use crate::suspension::Suspension;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Timing {
    pub n: usize,
    pub seconds: f64,
}

/// Times [`build_tree_pair`] on a random triangulation of each size. Graph
/// generation is not timed.
pub fn run(sizes: &[usize], seed: u64) -> Result<Vec<Timing>> {
    sizes
        .iter()
        .map(|&n| {
            let inst = generate(GeneratorSpec::RandomTriangulation { n, seed: seed.wrapping_add(n as u64) })?;
            let s = Suspension::new_trusted(inst.graph, inst.roots)?;
            let start = Instant::now();
            build_tree_pair(&s)?;
            Ok(Timing { n, seconds: start.elapsed().as_secs_f64() })
        })
        .collect()
}

/// Least squares slope of `log seconds` against `log n`. NaN for fewer than
/// two distinct sizes.
pub fn log_log_slope(timings: &[Timing]) -> f64 {
    let pts: Vec<(f64, f64)> = timings.iter().map(|t| ((t.n as f64).ln(), t.seconds.max(1e-9).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}
