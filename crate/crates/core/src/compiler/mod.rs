//! Approximating target unitaries by images of braid words.
//!
//! Distances are projective: `min_φ ‖U − e^{iφ}V‖` in operator norm, since a
//! global phase carries no physical meaning. The search enumerates freely
//! reduced words level by level, merging projectively equal images, so the
//! best distance can only improve as the depth budget grows.

mod distance;
mod probe;
mod search;

pub use distance::projective_distance;
pub use probe::{density_probe, ProbeStatistics};
pub use search::{closure_words, compile_gate};

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::tl::{self, TlError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CompileError {
    #[error("dimension mismatch: target is {target}×{target}, representation is {rep}×{rep}")]
    DimensionMismatch { target: usize, rep: usize },
    #[error("target is not unitary (residual {0:.3e})")]
    NotUnitary(f64),
    #[error("representation must be unitarized before compiling")]
    NonUnitaryRep,
    #[error("invalid search configuration: {0}")]
    BadConfig(String),
    #[error("probe restricted to d=2, representation has dimension {0}")]
    ProbeDimension(usize),
    #[error("unknown gate {0:?}")]
    UnknownGate(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Tl(#[from] TlError),
}

/// A unitary to approximate.
#[derive(Clone, Debug, PartialEq)]
pub struct TargetGate {
    matrix: DMatrix<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct GateFile {
    dimension: usize,
    entries: Vec<[f64; 2]>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl TargetGate {
    /// Accepts a square matrix unitary to `1e−10`.
    pub fn new(matrix: DMatrix<Complex64>) -> Result<Self, CompileError> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(CompileError::Parse("target must be a nonempty square matrix".into()));
        }
        let d = matrix.nrows();
        let residual = tl::op_norm(&(matrix.adjoint() * &matrix - DMatrix::identity(d, d)));
        if residual.is_nan() || residual > 1e-10 {
            return Err(CompileError::NotUnitary(residual));
        }
        Ok(TargetGate { matrix })
    }

    pub fn identity(d: usize) -> Self {
        TargetGate {
            matrix: DMatrix::identity(d, d),
        }
    }

    /// Named gates: `i`, `x`, `y`, `z`, `h`, `s`, `t` on one qubit and `cnot` on two.
    pub fn named(name: &str) -> Result<Self, CompileError> {
        let h = FRAC_1_SQRT_2;
        let (d, entries): (usize, Vec<Complex64>) = match name.to_ascii_lowercase().as_str() {
            "i" | "id" | "identity" => return Ok(Self::identity(2)),
            "x" => (2, vec![c(0., 0.), c(1., 0.), c(1., 0.), c(0., 0.)]),
            "y" => (2, vec![c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]),
            "z" => (2, vec![c(1., 0.), c(0., 0.), c(0., 0.), c(-1., 0.)]),
            "h" => (2, vec![c(h, 0.), c(h, 0.), c(h, 0.), c(-h, 0.)]),
            "s" => (2, vec![c(1., 0.), c(0., 0.), c(0., 0.), c(0., 1.)]),
            "t" => (2, vec![c(1., 0.), c(0., 0.), c(0., 0.), c(h, h)]),
            "cnot" => {
                let mut m = DMatrix::<Complex64>::zeros(4, 4);
                for (r, col) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
                    m[(r, col)] = c(1., 0.);
                }
                return Ok(TargetGate { matrix: m });
            }
            _ => return Err(CompileError::UnknownGate(name.to_string())),
        };
        Ok(TargetGate {
            matrix: DMatrix::from_row_slice(d, d, &entries),
        })
    }

    /// A Haar-random element of `SU(2)` from a unit quaternion with Gaussian
    /// coordinates.
    pub fn haar_su2<R: rand::Rng + ?Sized>(rng: &mut R) -> Self {
        let mut q = [0.0f64; 4];
        let norm = loop {
            for x in q.iter_mut() {
                *x = StandardNormal.sample(rng);
            }
            let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-12 {
                break n;
            }
        };
        let [a, b, cc, d] = q.map(|x| x / norm);
        TargetGate {
            matrix: DMatrix::from_row_slice(2, 2, &[c(a, b), c(cc, d), c(-cc, d), c(a, -b)]),
        }
    }

    /// The first Haar sample drawn from a generator seeded with `seed`.
    pub fn haar_su2_seeded(seed: u64) -> Self {
        Self::haar_su2(&mut ChaCha8Rng::seed_from_u64(seed))
    }

    /// Reads `{"dimension": d, "entries": [[re, im], …]}` with row-major entries.
    pub fn from_json(text: &str) -> Result<Self, CompileError> {
        let file: GateFile = serde_json::from_str(text).map_err(|e| CompileError::Parse(e.to_string()))?;
        Self::new(tl::matrix_from_json(file.dimension, &file.entries)?)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let entries: Vec<[f64; 2]> = self.matrix.transpose().iter().map(|z| [z.re, z.im]).collect();
        serde_json::json!({ "dimension": self.dimension(), "entries": entries })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Exhaustive,
    /// Pair up words of half the depth; exact over the pair space, one-qubit only.
    MeetInMiddle,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_depth: usize,
    pub tolerance: f64,
    /// Keep only this many closest nodes per level; `None` is unbounded.
    pub beam_width: Option<usize>,
    pub strategy: Strategy,
    /// Merge words whose images agree up to phase on a `1e−8` grid.
    pub dedup: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_depth: 12,
            tolerance: 1e-10,
            beam_width: None,
            strategy: Strategy::Exhaustive,
            dedup: true,
        }
    }
}

impl SearchConfig {
    pub fn with_depth(max_depth: usize) -> Self {
        SearchConfig {
            max_depth,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), CompileError> {
        if self.max_depth < 1 {
            return Err(CompileError::BadConfig("max_depth must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(CompileError::BadConfig("tolerance must be positive".into()));
        }
        if self.beam_width == Some(0) {
            return Err(CompileError::BadConfig("beam width must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompilationResult {
    pub word: BraidWord,
    pub achieved_distance: f64,
    pub nodes_explored: u64,
    pub depth_reached: usize,
}
