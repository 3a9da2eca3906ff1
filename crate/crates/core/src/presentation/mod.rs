//! Finite group presentations.
//!
//! Words are lists of signed one-based generator indices, the same letter
//! convention as braid words: `2` is `x_2` and `-2` is `x_2⁻¹`.

mod smith;
mod wreath;

pub use wreath::{configuration_braid_group, wreath_multiply, BaseGroup, WreathElement, WreathGroupSpec};

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("letter {letter} does not name one of {generators} generators")]
    LetterOutOfRange { letter: i32, generators: usize },
    #[error("{loops} loops but {exponents} exponents")]
    LengthMismatch { loops: usize, exponents: usize },
    #[error("orbifold exponent must be at least 2, got {0}")]
    ExponentTooSmall(u64),
    #[error("torsion coefficient {0} does not fit in 64 bits")]
    Overflow(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("wreath element does not match the group: {0}")]
    ShapeMismatch(String),
    #[error("{0}")]
    Parse(String),
}

/// `⟨x_1, …, x_n | R_1, …, R_m⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPresentation")]
pub struct GroupPresentation {
    generator_count: usize,
    relators: Vec<Vec<i32>>,
}

#[derive(Deserialize)]
struct RawPresentation {
    generator_count: usize,
    relators: Vec<Vec<i32>>,
}

impl TryFrom<RawPresentation> for GroupPresentation {
    type Error = PresentationError;

    fn try_from(raw: RawPresentation) -> Result<Self, Self::Error> {
        GroupPresentation::new(raw.generator_count, raw.relators)
    }
}

/// `ℤ^r ⊕ ℤ/d_1 ⊕ ⋯ ⊕ ℤ/d_k` with `d_1 | d_2 | ⋯ | d_k`, each `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianizationResult {
    pub free_rank: usize,
    pub torsion_coefficients: Vec<u64>,
}

impl AbelianizationResult {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_coefficients.is_empty()
    }
}

impl fmt::Display for AbelianizationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion_coefficients.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Vec<i32>>) -> Result<Self, PresentationError> {
        for r in &relators {
            check_word(generator_count, r)?;
        }
        Ok(GroupPresentation {
            generator_count,
            relators,
        })
    }

    /// Reads the text format: the first line is the generator count, each
    /// following line one relator as signed indices. Blank lines and `#`
    /// comments are skipped.
    pub fn parse(text: &str) -> Result<Self, PresentationError> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let first = lines
            .next()
            .ok_or_else(|| PresentationError::Parse("empty presentation".into()))?;
        let generator_count = first
            .parse::<usize>()
            .map_err(|_| PresentationError::Parse(format!("bad generator count {first:?}")))?;
        let relators = lines.map(parse_word).collect::<Result<Vec<_>, _>>()?;
        Self::new(generator_count, relators)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Vec<i32>] {
        &self.relators
    }

    /// True iff every relator reads `x_a x_b x_a⁻¹ x_c⁻¹`.
    pub fn is_c_group(&self) -> bool {
        self.relators.iter().all(|r| {
            matches!(r.as_slice(), &[a, b, na, nc] if a > 0 && b > 0 && na == -a && nc < 0)
        })
    }

    /// Exponent-sum matrix: one row per relator, one column per generator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generator_count];
                for &l in r {
                    row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
                }
                row
            })
            .collect()
    }

    pub fn abelianization(&self) -> Result<AbelianizationResult, PresentationError> {
        let factors = smith::invariant_factors(&self.relation_matrix(), self.generator_count);
        let rank = factors.iter().filter(|d| !d.is_zero()).count();
        let torsion_coefficients = factors
            .iter()
            .filter(|d| !d.is_zero() && !smith::is_unit(d))
            .map(|d| d.to_u64().ok_or_else(|| PresentationError::Overflow(d.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AbelianizationResult {
            free_rank: self.generator_count - rank,
            torsion_coefficients,
        })
    }

    /// Adds `γ_j^{ν_j}` for every loop, presenting `π_1` modulo the normal
    /// closure of those powers.
    pub fn orbifold_quotient(
        &self,
        loops: &[Vec<i32>],
        exponents: &[u64],
    ) -> Result<GroupPresentation, PresentationError> {
        if loops.len() != exponents.len() {
            return Err(PresentationError::LengthMismatch {
                loops: loops.len(),
                exponents: exponents.len(),
            });
        }
        let mut relators = self.relators.clone();
        for (lp, &nu) in loops.iter().zip(exponents) {
            check_word(self.generator_count, lp)?;
            if nu < 2 {
                return Err(PresentationError::ExponentTooSmall(nu));
            }
            let mut r = Vec::with_capacity(lp.len() * nu as usize);
            for _ in 0..nu {
                r.extend_from_slice(lp);
            }
            relators.push(r);
        }
        Ok(GroupPresentation {
            generator_count: self.generator_count,
            relators,
        })
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generator_count)?;
        for r in &self.relators {
            let s: Vec<String> = r.iter().map(i32::to_string).collect();
            writeln!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

fn check_word(generators: usize, word: &[i32]) -> Result<(), PresentationError> {
    for &l in word {
        if l == 0 || l.unsigned_abs() as usize > generators {
            return Err(PresentationError::LetterOutOfRange {
                letter: l,
                generators,
            });
        }
    }
    Ok(())
}

/// Parses a word of signed generator indices separated by whitespace or commas.
pub fn parse_word(text: &str) -> Result<Vec<i32>, PresentationError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| PresentationError::Parse(format!("not a signed generator index: {t:?}")))
        })
        .collect()
}

pub fn validate_c_group(p: &GroupPresentation) -> bool {
    p.is_c_group()
}

pub fn abelianization(p: &GroupPresentation) -> Result<AbelianizationResult, PresentationError> {
    p.abelianization()
}

pub fn orbifold_quotient(
    p: &GroupPresentation,
    loops: &[Vec<i32>],
    exponents: &[u64],
) -> Result<GroupPresentation, PresentationError> {
    p.orbifold_quotient(loops, exponents)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(n: usize, rels: &[&[i32]]) -> GroupPresentation {
        GroupPresentation::new(n, rels.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn c_group_shapes() {
        assert!(pres(3, &[]).is_c_group());
        assert!(pres(3, &[&[1, 2, -1, -3]]).is_c_group());
        assert!(!pres(1, &[&[1, 1]]).is_c_group());
        assert!(!pres(3, &[&[1, 2, -2, -3]]).is_c_group());
        assert!(!pres(3, &[&[1, 2, -1, 3]]).is_c_group());
    }

    #[test]
    fn free_group_abelianizes_freely() {
        let a = pres(1, &[]).abelianization().unwrap();
        assert_eq!(a.free_rank, 1);
        assert!(a.torsion_coefficients.is_empty());
    }

    #[test]
    fn trefoil_abelianizes_to_z() {
        let a = pres(2, &[&[1, 2, 1, -2, -1, -2]]).abelianization().unwrap();
        assert_eq!(a.to_string(), "Z^1");
    }

    #[test]
    fn two_component_c_group() {
        // x1, x2 conjugate; x3, x4 conjugate; linked through the conjugators.
        let p = pres(4, &[&[3, 1, -3, -2], &[1, 3, -1, -4]]);
        assert!(p.is_c_group());
        let a = p.abelianization().unwrap();
        assert_eq!(a.free_rank, 2);
        assert!(a.torsion_coefficients.is_empty());
    }

    #[test]
    fn orbifold_quotient_examples() {
        let p = pres(1, &[]);
        let q = p.orbifold_quotient(&[vec![1]], &[2]).unwrap();
        assert_eq!(q.relators(), &[vec![1, 1]]);
        assert_eq!(q.abelianization().unwrap().torsion_coefficients, vec![2]);
        for nu in 2..9 {
            let q = p.orbifold_quotient(&[vec![1]], &[nu]).unwrap();
            let a = q.abelianization().unwrap();
            assert_eq!(a.free_rank, 0);
            assert_eq!(a.torsion_coefficients, vec![nu]);
        }
        assert_eq!(p.orbifold_quotient(&[], &[]).unwrap(), p);
    }

    #[test]
    fn orbifold_quotient_errors() {
        let p = pres(1, &[]);
        assert!(matches!(
            p.orbifold_quotient(&[vec![1]], &[]),
            Err(PresentationError::LengthMismatch { .. })
        ));
        assert!(matches!(
            p.orbifold_quotient(&[vec![2]], &[2]),
            Err(PresentationError::LetterOutOfRange { .. })
        ));
        assert!(p.orbifold_quotient(&[vec![1]], &[1]).is_err());
    }

    #[test]
    fn parse_text_format() {
        let p = GroupPresentation::parse("2\n# trefoil\n1 2 1 -2 -1 -2\n").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert_eq!(p.relators().len(), 1);
        assert!(GroupPresentation::parse("").is_err());
        assert!(GroupPresentation::parse("2\n3").is_err());
        assert_eq!(GroupPresentation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn display_abelianization() {
        let a = AbelianizationResult {
            free_rank: 2,
            torsion_coefficients: vec![2, 6],
        };
        assert_eq!(a.to_string(), "Z^2 + Z/2 + Z/6");
        let t = AbelianizationResult {
            free_rank: 0,
            torsion_coefficients: vec![],
        };
        assert_eq!(t.to_string(), "0");
    }
}
