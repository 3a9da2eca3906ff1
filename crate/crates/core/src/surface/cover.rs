//! Riemann–Hurwitz accounting for the branched cover a braid system defines.

use serde::{Deserialize, Serialize};

use super::BraidSystem;

/// Status of the global monodromy relation on the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationStatus {
    /// Disc base: the boundary braid is free.
    Boundary,
    /// Sphere base: `β_1⋯β_n` is trivial.
    Holds,
    /// Sphere base: `β_1⋯β_n` is not trivial, so the data do not close up.
    Violated,
    /// Higher genus or unrecognised base: not checked.
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub degree: usize,
    pub base_euler: i64,
    pub branch_count: usize,
    pub cover_euler: i64,
    /// Whether the monodromy acts transitively, i.e. the cover is connected.
    pub transitive: bool,
    pub relation: RelationStatus,
}

/// Every entry is a band generator, so every branch point is simple and
/// `χ(S) = m·χ(Σ) − n`.
pub fn monodromy_report(bs: &BraidSystem, base_euler: i64) -> CoverReport {
    let m = bs.degree();
    let n = bs.len();
    let relation = match base_euler {
        1 => RelationStatus::Boundary,
        2 if bs.boundary_braid().normal_form().is_identity() => RelationStatus::Holds,
        2 => RelationStatus::Violated,
        _ => RelationStatus::Unchecked,
    };
    CoverReport {
        degree: m,
        base_euler,
        branch_count: n,
        cover_euler: m as i64 * base_euler - n as i64,
        transitive: is_transitive(m, bs),
        relation,
    }
}

fn is_transitive(m: usize, bs: &BraidSystem) -> bool {
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for p in bs.permutations() {
        for x in 0..m {
            let (a, b) = (find(&mut parent, x), find(&mut parent, p.apply(x)));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let root = find(&mut parent, 0);
    (0..m).all(|x| find(&mut parent, x) == root)
}
