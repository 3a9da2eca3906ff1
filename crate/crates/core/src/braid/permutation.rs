use std::fmt;

use serde::{Deserialize, Serialize};

use super::BraidError;

/// A permutation of `{1, …, n}`.
///
/// Images are stored zero-based; the serialized and displayed forms are
/// one-based. Composition follows the function convention
/// `(p ∘ q)(x) = p(q(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The order-reversing permutation `x ↦ n + 1 − x`, image of the half twist.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (0..n).rev().collect(),
        }
    }

    /// The transposition `(i, i+1)` for a one-based generator index `i`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BraidError::InvalidPermutation(images.to_vec()));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of a zero-based point.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Number of inverted pairs; the crossing count of the permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[i] > self.images[j]).count())
            .sum()
    }

    /// `self ∘ τ_i` in place (zero-based position `i`).
    #[inline]
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// `τ_i ∘ self` in place (zero-based value `i`).
    pub(crate) fn swap_values(&mut self, i: usize) {
        for x in self.images.iter_mut() {
            if *x == i {
                *x = i + 1;
            } else if *x == i + 1 {
                *x = i;
            }
        }
    }

    /// Zero-based `i` with `p(i) > p(i+1)`: the generators a permutation braid can end with.
    pub fn is_right_descent(&self, i: usize) -> bool {
        self.images[i] > self.images[i + 1]
    }

    /// Conjugation by the longest element, `x ↦ n−1−x` on both sides.
    pub(crate) fn flipped(&self) -> Permutation {
        let n = self.len();
        Permutation {
            images: self.images.iter().rev().map(|&x| n - 1 - x).collect(),
        }
    }

    /// Cycle count, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        cycles
    }

    /// Signed one-based letters of the positive permutation braid of `self`.
    pub fn positive_word(&self) -> Vec<i32> {
        let mut p = self.clone();
        let mut letters = Vec::with_capacity(p.inversions());
        while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p.is_right_descent(i)) {
            letters.push(i as i32 + 1);
            p.swap_positions(i);
        }
        letters.reverse();
        letters
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images_one_based()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = BraidError;

    fn try_from(images: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::from_images(&images)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.len()];
        let mut wrote = false;
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
