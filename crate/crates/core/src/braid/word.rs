use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidError, GarsideForm, Permutation};

/// A word in the Artin generators `σ_1, …, σ_{n−1}` of the disc braid group `B_n`.
///
/// Letters are signed one-based generator indices: `2` is `σ_2`, `-2` is `σ_2⁻¹`.
/// The empty word is the identity braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Deserialize)]
struct RawWord {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawWord> for BraidWord {
    type Error = BraidError;

    fn try_from(raw: RawWord) -> Result<Self, Self::Error> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            check_letter(strands, l)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `σ_i^{sign}`.
    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self, BraidError> {
        let l = if positive { index as i32 } else { -(index as i32) };
        Self::new(strands, vec![l])
    }

    /// The positive half twist `Δ` written as `(σ_1⋯σ_{n−1})(σ_1⋯σ_{n−2})⋯σ_1`.
    pub fn half_twist(strands: usize) -> Self {
        let mut letters = Vec::new();
        for top in (1..strands).rev() {
            letters.extend(1..=top as i32);
        }
        BraidWord { strands, letters }
    }

    /// Parses whitespace-separated signed indices such as `"1 2 -1"`.
    ///
    /// `"e"` and the empty string both denote the identity.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Self::new(strands, Vec::new());
        }
        let letters = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| BraidError::Parse(format!("not a signed generator index: {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        self.check_same(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self^k` for `k ≥ 0`, and `invert(self)^{|k|}` otherwise.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Removes adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Image in `S_n`, with `σ_i ↦ (i, i+1)`.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p.swap_positions(l.unsigned_abs() as usize - 1);
        }
        p
    }

    pub fn normal_form(&self) -> GarsideForm {
        GarsideForm::of_word(self)
    }

    pub fn equals(&self, other: &BraidWord) -> Result<bool, BraidError> {
        self.check_same(other)?;
        Ok(self.normal_form() == other.normal_form())
    }

    /// Exponent sum, the image under the abelianization `B_n → ℤ`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    fn check_same(&self, other: &BraidWord) -> Result<(), BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

fn check_letter(strands: usize, l: i32) -> Result<(), BraidError> {
    let i = l.unsigned_abs() as usize;
    if l == 0 || i >= strands {
        return Err(BraidError::GeneratorOutOfRange {
            letter: l,
            strands,
        });
    }
    Ok(())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Product of two words in `B_n`.
pub fn compose(w1: &BraidWord, w2: &BraidWord) -> Result<BraidWord, BraidError> {
    w1.compose(w2)
}

pub fn invert(w: &BraidWord) -> BraidWord {
    w.invert()
}

pub fn underlying_permutation(w: &BraidWord) -> Permutation {
    w.underlying_permutation()
}

/// Decides equality in `B_n` by comparing normal forms.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    w1.equals(w2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn parse_rejects_bad_letters() {
        assert!(BraidWord::parse(3, "1 0").is_err());
        assert!(BraidWord::parse(3, "3").is_err());
        assert!(BraidWord::parse(3, "-3").is_err());
        assert!(BraidWord::parse(3, "1 x").is_err());
        assert!(BraidWord::parse(0, "").is_err());
        assert_eq!(w(3, "e"), BraidWord::identity(3));
        assert_eq!(w(3, "1, -2").letters(), &[1, -2]);
    }

    #[test]
    fn compose_examples() {
        let id = BraidWord::identity(3);
        let x = w(3, "1 -2 2");
        assert_eq!(compose(&id, &x).unwrap(), x);
        let c = compose(&w(2, "1"), &w(2, "-1")).unwrap();
        assert!(words_equal(&c, &BraidWord::identity(2)).unwrap());
        let c = compose(&w(3, "1 2"), &w(3, "1")).unwrap();
        assert_eq!(c, w(3, "1 2 1"));
        assert!(words_equal(&c, &w(3, "2 1 2")).unwrap());
        assert!(compose(&w(3, "1"), &w(4, "1")).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&BraidWord::identity(3)), BraidWord::identity(3));
        assert_eq!(invert(&w(2, "1")), w(2, "-1"));
        assert_eq!(invert(&w(3, "1 -2")), w(3, "2 -1"));
    }

    #[test]
    fn permutation_examples() {
        assert!(underlying_permutation(&BraidWord::identity(4)).is_identity());
        assert_eq!(underlying_permutation(&w(2, "1")).images_one_based(), vec![2, 1]);
        // 1→2→3→1
        assert_eq!(underlying_permutation(&w(3, "1 2")).images_one_based(), vec![2, 3, 1]);
    }

    #[test]
    fn words_equal_examples() {
        let x = w(4, "1 3 -2");
        assert!(words_equal(&x, &x).unwrap());
        assert!(words_equal(&w(3, "1 2 1"), &w(3, "2 1 2")).unwrap());
        assert!(!words_equal(&w(3, "1 2"), &w(3, "2 1")).unwrap());
        assert!(words_equal(&w(3, "1"), &w(4, "1")).is_err());
    }

    #[test]
    fn free_reduce_cancels_nested_pairs() {
        assert_eq!(w(4, "1 2 -2 -1 3").free_reduce(), w(4, "3"));
    }

    #[test]
    fn half_twist_permutation_is_longest() {
        for n in 1..7 {
            assert_eq!(
                BraidWord::half_twist(n).underlying_permutation(),
                Permutation::longest(n)
            );
        }
    }

    #[test]
    fn serde_validates() {
        let ok: BraidWord = serde_json::from_str(r#"{"strands":3,"letters":[1,-2]}"#).unwrap();
        assert_eq!(ok, w(3, "1 -2"));
        assert!(serde_json::from_str::<BraidWord>(r#"{"strands":3,"letters":[3]}"#).is_err());
    }
}
