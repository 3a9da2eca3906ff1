//! Braided surfaces as branched-cover monodromy data.
//!
//! A braided surface of degree `m` over a disc with `n` simple branch points
//! is recorded by its braid system `(β_1, …, β_n)`, each `β_k` a conjugate of
//! an Artin generator of `B_m` or of its inverse. `B_n` acts on braid systems
//! by Hurwitz moves, which preserve the boundary braid `β_1⋯β_n`.

mod cover;
mod orbit;

pub use cover::{monodromy_report, CoverReport, RelationStatus};
pub use orbit::{hurwitz_orbit, orbit_size_formula, OrbitKey, OrbitResult};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::{BraidError, BraidWord, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("a braided surface needs degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("Hurwitz move {index} is out of range for {entries} entries")]
    MoveOutOfRange { index: i32, entries: usize },
    #[error("loop letter {letter} does not name one of {entries} entries")]
    LoopOutOfRange { letter: i32, entries: usize },
    #[error("entry has {found} strands, system has degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("sign must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("multisection needs ℓ ≥ 1 and ν ≥ 2, got ℓ = {sections}, ν = {cone_order}")]
    Multisection { sections: u64, cone_order: u64 },
    #[error("orbit cap must be positive")]
    ZeroCap,
    #[error("{0}")]
    Parse(String),
}

/// `w σ_i^{±1} w⁻¹`, stored structurally so every entry of a braid system is
/// a band generator by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandGenerator {
    pub conjugator: BraidWord,
    pub index: usize,
    pub positive: bool,
}

impl BandGenerator {
    pub fn new(conjugator: BraidWord, index: usize, positive: bool) -> Result<Self, SurfaceError> {
        BraidWord::generator(conjugator.strands(), index, positive)?;
        Ok(BandGenerator {
            conjugator,
            index,
            positive,
        })
    }

    pub fn standard(strands: usize, index: usize, positive: bool) -> Result<Self, SurfaceError> {
        Self::new(BraidWord::identity(strands), index, positive)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn sign(&self) -> i32 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// `conjugator · σ_i^{±1} · conjugator⁻¹`.
    pub fn as_word(&self) -> BraidWord {
        let c = self.conjugator.letters();
        let mut letters = Vec::with_capacity(2 * c.len() + 1);
        letters.extend_from_slice(c);
        letters.push(self.sign() * self.index as i32);
        letters.extend(c.iter().rev().map(|l| -l));
        BraidWord::new(self.strands(), letters).expect("band letters are in range")
    }

    pub fn inverse(&self) -> BandGenerator {
        BandGenerator {
            conjugator: self.conjugator.clone(),
            index: self.index,
            positive: !self.positive,
        }
    }

    /// `w · self · w⁻¹`, with the new conjugator freely reduced.
    pub fn conjugated_by(&self, w: &BraidWord) -> BandGenerator {
        let conjugator = w
            .compose(&self.conjugator)
            .expect("band generators of one system share a strand count")
            .free_reduce();
        BandGenerator {
            conjugator,
            index: self.index,
            positive: self.positive,
        }
    }

    /// Image in `S_m`: a transposition.
    pub fn permutation(&self) -> Permutation {
        let c = self.conjugator.underlying_permutation();
        c.compose(&Permutation::transposition(self.strands(), self.index))
            .compose(&c.inverse())
    }
}

impl fmt::Display for BandGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let conj = if self.conjugator.is_empty() {
            String::new()
        } else {
            self.conjugator.to_string()
        };
        write!(f, "{} | {} {}", conj, self.index, if self.positive { "+1" } else { "-1" })
    }
}

/// `(β_1, …, β_n)` with all entries in `B_degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidSystem {
    degree: usize,
    entries: Vec<BandGenerator>,
}

impl BraidSystem {
    pub fn new(degree: usize, entries: Vec<BandGenerator>) -> Result<Self, SurfaceError> {
        if degree < 2 {
            return Err(SurfaceError::DegreeTooSmall(degree));
        }
        for e in &entries {
            if e.strands() != degree {
                return Err(SurfaceError::DegreeMismatch {
                    expected: degree,
                    found: e.strands(),
                });
            }
        }
        Ok(BraidSystem { degree, entries })
    }

    /// `(σ_1, …, σ_{m−1})` in `B_m`: the standard braided surface of degree
    /// `m` with `m − 1` branch points.
    pub fn standard(degree: usize) -> Result<Self, SurfaceError> {
        if degree < 2 {
            return Err(SurfaceError::DegreeTooSmall(degree));
        }
        let entries = (1..degree)
            .map(|i| BandGenerator::standard(degree, i, true))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degree, entries)
    }

    /// Reads the text format: `degree m` on the first line, then one
    /// `conjugator-word | index sign` line per entry.
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| SurfaceError::Parse("empty braid-system file".into()))?;
        let degree = header
            .strip_prefix("degree")
            .and_then(|rest| rest.trim().parse::<usize>().ok())
            .ok_or_else(|| SurfaceError::Parse(format!("expected `degree m`, found {header:?}")))?;
        if degree < 2 {
            return Err(SurfaceError::DegreeTooSmall(degree));
        }
        let entries = lines
            .map(|line| {
                let (conj, gen) = line
                    .split_once('|')
                    .ok_or_else(|| SurfaceError::Parse(format!("missing `|` in {line:?}")))?;
                let conjugator = BraidWord::parse(degree, conj)?;
                let fields: Vec<&str> = gen.split_whitespace().collect();
                let [index, sign] = fields.as_slice() else {
                    return Err(SurfaceError::Parse(format!("expected `index sign` in {line:?}")));
                };
                let index: usize = index
                    .parse()
                    .map_err(|_| SurfaceError::Parse(format!("bad index {index:?}")))?;
                let positive = match *sign {
                    "1" | "+1" | "+" => true,
                    "-1" | "-" => false,
                    s => {
                        let v = s.parse::<i64>().map_err(|_| SurfaceError::Parse(format!("bad sign {s:?}")))?;
                        return Err(SurfaceError::BadSign(v));
                    }
                };
                BandGenerator::new(conjugator, index, positive)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degree, entries)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[BandGenerator] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_1 ⋯ β_n`.
    pub fn boundary_braid(&self) -> BraidWord {
        let letters = self
            .entries
            .iter()
            .flat_map(|e| e.as_word().letters().to_vec())
            .collect();
        BraidWord::new(self.degree, letters).expect("entries share the system degree")
    }

    fn check_move(&self, i: usize) -> Result<(), SurfaceError> {
        if i == 0 || i >= self.entries.len() {
            return Err(SurfaceError::MoveOutOfRange {
                index: i as i32,
                entries: self.entries.len(),
            });
        }
        Ok(())
    }

    /// `σ_i : (…, β_i, β_{i+1}, …) ↦ (…, β_i β_{i+1} β_i⁻¹, β_i, …)`.
    pub fn hurwitz_act(&self, i: usize) -> Result<BraidSystem, SurfaceError> {
        self.check_move(i)?;
        let mut entries = self.entries.clone();
        let (bi, bj) = (&self.entries[i - 1], &self.entries[i]);
        entries[i - 1] = bj.conjugated_by(&bi.as_word());
        entries[i] = bi.clone();
        Ok(BraidSystem {
            degree: self.degree,
            entries,
        })
    }

    /// `σ_i⁻¹ : (…, β_i, β_{i+1}, …) ↦ (…, β_{i+1}, β_{i+1}⁻¹ β_i β_{i+1}, …)`.
    pub fn hurwitz_act_inverse(&self, i: usize) -> Result<BraidSystem, SurfaceError> {
        self.check_move(i)?;
        let mut entries = self.entries.clone();
        let (bi, bj) = (&self.entries[i - 1], &self.entries[i]);
        entries[i - 1] = bj.clone();
        entries[i] = bi.conjugated_by(&bj.as_word().invert());
        Ok(BraidSystem {
            degree: self.degree,
            entries,
        })
    }

    /// Applies signed moves left to right: `k > 0` is `σ_k`, `k < 0` is `σ_{|k|}⁻¹`.
    pub fn apply_moves(&self, moves: &[i32]) -> Result<BraidSystem, SurfaceError> {
        let mut bs = self.clone();
        for &m in moves {
            if m == 0 {
                return Err(SurfaceError::MoveOutOfRange {
                    index: 0,
                    entries: self.entries.len(),
                });
            }
            let i = m.unsigned_abs() as usize;
            bs = if m > 0 { bs.hurwitz_act(i)? } else { bs.hurwitz_act_inverse(i)? };
        }
        Ok(bs)
    }

    /// `ρ_S` on a loop `γ_{k_1}^{±1} ⋯`: `γ_k ↦ β_k`, extended multiplicatively.
    pub fn braid_representation(&self, loop_word: &[i32]) -> Result<BraidWord, SurfaceError> {
        let mut letters = Vec::new();
        for &l in loop_word {
            let k = l.unsigned_abs() as usize;
            if l == 0 || k > self.entries.len() {
                return Err(SurfaceError::LoopOutOfRange {
                    letter: l,
                    entries: self.entries.len(),
                });
            }
            let w = self.entries[k - 1].as_word();
            if l > 0 {
                letters.extend_from_slice(w.letters());
            } else {
                letters.extend(w.invert().letters());
            }
        }
        Ok(BraidWord::new(self.degree, letters)?)
    }

    /// Canonical key: normal forms of the expanded entries.
    pub fn key(&self) -> OrbitKey {
        OrbitKey(self.entries.iter().map(|e| e.as_word().normal_form()).collect())
    }

    /// Permutation images of the entries in `S_m`.
    pub fn permutations(&self) -> Vec<Permutation> {
        self.entries.iter().map(BandGenerator::permutation).collect()
    }
}

impl fmt::Display for BraidSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree {}", self.degree)?;
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// An `ℓ`-multisection of the normal bundle of a surface with cone order `ν`,
/// an `ℓν`-fold branched cover of the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisectionSpec {
    sections: u64,
    cone_order: u64,
}

impl MultisectionSpec {
    pub fn new(sections: u64, cone_order: u64) -> Result<Self, SurfaceError> {
        if sections < 1 || cone_order < 2 {
            return Err(SurfaceError::Multisection {
                sections,
                cone_order,
            });
        }
        Ok(MultisectionSpec {
            sections,
            cone_order,
        })
    }

    pub fn degree(&self) -> u64 {
        self.sections * self.cone_order
    }

    /// The standard braided surface of degree `ℓν`.
    pub fn standard_system(&self) -> Result<BraidSystem, SurfaceError> {
        BraidSystem::standard(self.degree() as usize)
    }
}

pub fn standard_braid_system(m: usize) -> Result<BraidSystem, SurfaceError> {
    BraidSystem::standard(m)
}

pub fn boundary_braid(bs: &BraidSystem) -> BraidWord {
    bs.boundary_braid()
}

pub fn hurwitz_act(i: usize, bs: &BraidSystem) -> Result<BraidSystem, SurfaceError> {
    bs.hurwitz_act(i)
}

pub fn braid_representation(bs: &BraidSystem, loop_word: &[i32]) -> Result<BraidWord, SurfaceError> {
    bs.braid_representation(loop_word)
}

pub fn multisection_degree(sections: u64, cone_order: u64) -> Result<u64, SurfaceError> {
    Ok(MultisectionSpec::new(sections, cone_order)?.degree())
}
