use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distance::distance_flat;
use super::search::{flat_adjoint, Enumeration};
use super::{CompileError, TargetGate};
use crate::tl::RepMatrices;

/// Covering statistics of words up to a fixed length against Haar-random targets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeStatistics {
    pub depth: usize,
    pub sample_count: usize,
    pub seed: u64,
    pub min: f64,
    pub median: f64,
    pub max: f64,
    /// Best distance per target, in sampling order.
    pub distances: Vec<f64>,
    pub images_enumerated: u64,
}

/// For `sample_count` seeded Haar targets in `SU(2)`, the best projective
/// distance reachable with words of length at most `depth`.
pub fn density_probe(
    rm: &RepMatrices,
    sample_count: usize,
    depth: usize,
    seed: u64,
) -> Result<ProbeStatistics, CompileError> {
    if rm.dimension() != 2 {
        return Err(CompileError::ProbeDimension(rm.dimension()));
    }
    if !rm.is_unitary() {
        return Err(CompileError::NonUnitaryRep);
    }
    if sample_count == 0 {
        return Err(CompileError::BadConfig("sample count must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let targets: Vec<TargetGate> = (0..sample_count).map(|_| TargetGate::haar_su2(&mut rng)).collect();

    let mut en = Enumeration::new(rm, true);
    for _ in 0..depth {
        en.expand(None);
    }
    let distances: Vec<f64> = targets
        .par_iter()
        .map(|t| {
            let t_adj = flat_adjoint(t);
            (0..en.len())
                .map(|i| distance_flat(&t_adj, en.matrix(i), 2))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();

    let mut sorted = distances.clone();
    sorted.sort_by(f64::total_cmp);
    let mid = sample_count / 2;
    let median = if sample_count % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    };
    Ok(ProbeStatistics {
        depth,
        sample_count,
        seed,
        min: sorted[0],
        median,
        max: sorted[sample_count - 1],
        distances,
        images_enumerated: en.len() as u64,
    })
}
