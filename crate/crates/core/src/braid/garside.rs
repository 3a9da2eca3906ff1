//! Left-greedy normal form `Δ^k · s_1 ⋯ s_r` of a braid.
//!
//! Simple braids are the positive braids in which any two strands cross at
//! most once; they are in bijection with permutations, which is how they are
//! stored. A pair `(a, b)` of simple factors is left-weighted when every
//! generator `b` can start with is already a generator `a` can end with.

use serde::{Deserialize, Serialize};

use super::{BraidWord, Permutation};

/// Canonical form of a braid: two words give the same braid iff their forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GarsideForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideForm {
    pub fn identity(strands: usize) -> Self {
        GarsideForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn of_word(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut acc = Accumulator::new(n);
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize;
            if l > 0 {
                acc.push(Permutation::transposition(n, i));
            } else {
                acc.push_inverse_generator(i);
            }
        }
        acc.finish()
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Number of Artin letters in `word()`.
    pub fn word_length(&self) -> usize {
        let n = self.strands;
        self.delta_power.unsigned_abs() as usize * (n * n.saturating_sub(1) / 2)
            + self.factors.iter().map(Permutation::inversions).sum::<usize>()
    }

    /// A word representing the braid: the half-twist power followed by the
    /// positive words of the simple factors.
    pub fn word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = BraidWord::half_twist(n).pow(self.delta_power).letters().to_vec();
        for f in &self.factors {
            letters.extend(f.positive_word());
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }
}

/// Running product `Δ^k · F` with `F` kept left-weighted after every push.
struct Accumulator {
    n: usize,
    delta: Permutation,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator {
            n,
            delta: Permutation::longest(n),
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    /// `σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹)`, and `F · Δ⁻¹ = Δ⁻¹ · τ(F)` where `τ` flips
    /// generator indices `i ↦ n − i`.
    fn push_inverse_generator(&mut self, i: usize) {
        self.delta_power -= 1;
        for f in self.factors.iter_mut() {
            *f = f.flipped();
        }
        let complement = self.delta.compose(&Permutation::transposition(self.n, i));
        self.push(complement);
    }

    fn push(&mut self, s: Permutation) {
        if s.is_identity() {
            return;
        }
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !make_left_weighted(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| **f == self.delta).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.delta_power += leading as i64;
        }
        while self.factors.last().is_some_and(Permutation::is_identity) {
            self.factors.pop();
        }
    }

    fn finish(self) -> GarsideForm {
        GarsideForm {
            strands: self.n,
            delta_power: self.delta_power,
            factors: self.factors,
        }
    }
}

/// Moves generators from the front of `b` to the back of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let b_inv = b.inverse();
        let movable = (0..n.saturating_sub(1))
            .find(|&i| b_inv.is_right_descent(i) && !a.is_right_descent(i));
        match movable {
            Some(i) => {
                a.swap_positions(i);
                b.swap_values(i);
                changed = true;
            }
            None => return changed,
        }
    }
}

/// Left-greedy normal form of a word.
pub fn garside_normal_form(w: &BraidWord) -> GarsideForm {
    GarsideForm::of_word(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, s: &str) -> GarsideForm {
        GarsideForm::of_word(&BraidWord::parse(n, s).unwrap())
    }

    #[test]
    fn artin_relation_same_form() {
        assert_eq!(nf(3, "1 2 1"), nf(3, "2 1 2"));
        assert_eq!(nf(3, "1 2 1").delta_power(), 1);
    }

    #[test]
    fn cancellation_is_identity() {
        let f = nf(3, "1 -1");
        assert_eq!(f.delta_power(), 0);
        assert!(f.factors().is_empty());
        assert!(nf(5, "2 4 -3 3 -4 -2").is_identity());
    }

    #[test]
    fn full_twist() {
        let f = nf(3, "1 2 1 1 2 1");
        assert_eq!(f.delta_power(), 2);
        assert!(f.factors().is_empty());
        assert_eq!(nf(3, "1 2 1 2 1 2"), f);
    }

    #[test]
    fn negative_letters() {
        let f = nf(3, "-1");
        assert_eq!(f.delta_power(), -1);
        assert_eq!(f.factors().len(), 1);
        assert_eq!(nf(3, "-1 -2 -1"), nf(3, "-2 -1 -2"));
        assert_eq!(nf(3, "-1 -2 -1").delta_power(), -1);
        assert!(nf(3, "-1 -2 -1").factors().is_empty());
    }

    #[test]
    fn far_commutation() {
        assert_eq!(nf(4, "1 3"), nf(4, "3 1"));
        assert_eq!(nf(5, "-1 3 -4"), nf(5, "3 -4 -1"));
        assert_ne!(nf(3, "1 2"), nf(3, "2 1"));
    }

    #[test]
    fn word_round_trip_is_idempotent() {
        for s in ["1 -2 1 2 -1", "-1 -1 2", "1 2 1 2", "2 -1 -2 1 1"] {
            let f = nf(3, s);
            assert_eq!(GarsideForm::of_word(&f.word()), f);
            assert_eq!(f.word().len(), f.word_length());
        }
    }

    #[test]
    fn single_strand() {
        assert!(nf(1, "").is_identity());
    }
}
