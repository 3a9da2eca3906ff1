//! Breadth-first enumeration of Hurwitz orbits.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::{BraidSystem, SurfaceError};
use crate::braid::GarsideForm;

/// Normal forms of the expanded entries of a braid system. Two systems with
/// the same key are the same point of `B_m^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitKey(pub Vec<GarsideForm>);

#[derive(Debug, Clone, Serialize)]
pub struct OrbitResult {
    /// Keys in discovery order.
    pub keys: Vec<OrbitKey>,
    pub size: usize,
    /// Set when the cap stopped the search before the orbit closed.
    pub truncated: bool,
}

/// Closes `bs` under all Hurwitz moves `σ_i^{±1}`, storing at most `cap` systems.
///
/// Frontier expansion runs in parallel; neighbours are merged in frontier
/// order so the result does not depend on the thread count.
pub fn hurwitz_orbit(bs: &BraidSystem, cap: usize) -> Result<OrbitResult, SurfaceError> {
    if cap == 0 {
        return Err(SurfaceError::ZeroCap);
    }
    let n = bs.len();
    let mut seen: HashSet<OrbitKey> = HashSet::new();
    let mut keys = Vec::new();
    let start = bs.key();
    seen.insert(start.clone());
    keys.push(start);
    let mut frontier = vec![bs.clone()];
    let mut truncated = false;

    'bfs: while !frontier.is_empty() {
        let expanded: Vec<Vec<(OrbitKey, BraidSystem)>> = frontier
            .par_iter()
            .map(|s| {
                (1..n)
                    .flat_map(|i| [s.hurwitz_act(i), s.hurwitz_act_inverse(i)])
                    .map(|t| {
                        let t = t.expect("move index is in range");
                        (t.key(), t)
                    })
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for (key, system) in expanded.into_iter().flatten() {
            if seen.contains(&key) {
                continue;
            }
            if seen.len() >= cap {
                truncated = true;
                break 'bfs;
            }
            seen.insert(key.clone());
            keys.push(key);
            next.push(system);
        }
        frontier = next;
    }
    Ok(OrbitResult {
        size: keys.len(),
        keys,
        truncated,
    })
}

/// `(n+1)^{n−1}`, the orbit size of the standard system with `n` entries.
pub fn orbit_size_formula(n: u32) -> BigUint {
    assert!(n >= 1, "orbit formula needs n ≥ 1");
    BigUint::from(n + 1).pow(n - 1)
}
