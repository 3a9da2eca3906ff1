//! Shared inputs for the criterion benchmarks.

use braidforge::tl::{rep_matrices, unitarize, RepMatrices, TLParams};
use braidforge::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded random word of the given length in `B_n`.
pub fn random_word(strands: usize, len: usize, seed: u64) -> BraidWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = (0..len)
        .map(|_| {
            let i = rng.random_range(1..strands as i32);
            if rng.random_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters are in range")
}

/// The unitary two-dimensional Jones representation of `B_3` at `A = e^{2πi/5}`.
pub fn jones_b3() -> RepMatrices {
    let rm = rep_matrices(3, 1, &TLParams::default()).expect("valid module");
    unitarize(&rm).expect("positive definite at the default parameter")
}
