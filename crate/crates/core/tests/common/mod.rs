//! Independent reference implementations used by the integration and
//! acceptance tests. None of these call into the algorithms they check.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use num_complex::Complex64;
use rand::Rng;

// ---------------------------------------------------------------------------
// Braids: the Artin action on the free group.

/// Freely reduced word in `x_1, …, x_n` as signed one-based letters.
pub type FreeWord = Vec<i32>;

fn push_reduced(out: &mut FreeWord, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

fn invert_free(w: &[i32]) -> FreeWord {
    w.iter().rev().map(|l| -l).collect()
}

/// Image of `x_j^{±1}` under the automorphism of one braid letter.
fn letter_image(letter: i32, x: i32) -> FreeWord {
    let i = letter.abs();
    let j = x.abs();
    let base: FreeWord = if letter > 0 {
        // σ_i: x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
        if j == i {
            vec![i, i + 1, -i]
        } else if j == i + 1 {
            vec![i]
        } else {
            vec![j]
        }
    } else {
        // σ_i⁻¹: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
        if j == i {
            vec![i + 1]
        } else if j == i + 1 {
            vec![-(i + 1), i, i + 1]
        } else {
            vec![j]
        }
    };
    if x > 0 {
        base
    } else {
        invert_free(&base)
    }
}

/// Images of the free generators under the braid's automorphism. The action
/// of `B_n` on `F_n` is faithful, so equal images mean equal braids.
pub fn free_group_action(strands: usize, letters: &[i32]) -> Vec<FreeWord> {
    let mut images: Vec<FreeWord> = (1..=strands as i32).map(|j| vec![j]).collect();
    for &l in letters {
        for img in images.iter_mut() {
            let mut out = Vec::with_capacity(img.len() * 2);
            for &x in img.iter() {
                for y in letter_image(l, x) {
                    push_reduced(&mut out, y);
                }
            }
            *img = out;
        }
    }
    images
}

pub fn oracle_braids_equal(strands: usize, a: &[i32], b: &[i32]) -> bool {
    free_group_action(strands, a) == free_group_action(strands, b)
}

/// Underlying permutation as one-based images, tracking strand positions.
pub fn oracle_permutation(strands: usize, letters: &[i32]) -> Vec<usize> {
    // position[s] = where strand starting at s currently is
    let mut at: Vec<usize> = (0..strands).collect();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1;
        for p in at.iter_mut() {
            if *p == i {
                *p = i + 1;
            } else if *p == i + 1 {
                *p = i;
            }
        }
    }
    at
}

pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let i = rng.random_range(1..strands as i32);
            if rng.random_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// One random application of a defining relation of `B_n` (or a free
/// insertion/cancellation). Returns the word unchanged when the chosen
/// move has no site.
pub fn random_artin_move<R: Rng>(rng: &mut R, strands: usize, w: &[i32]) -> Vec<i32> {
    let mut w = w.to_vec();
    match rng.random_range(0..4) {
        0 => {
            // insert x x⁻¹
            let pos = rng.random_range(0..=w.len());
            let i = rng.random_range(1..strands as i32);
            let x = if rng.random_bool(0.5) { i } else { -i };
            w.splice(pos..pos, [x, -x]);
        }
        1 => {
            let sites: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&k| w[k] == -w[k + 1]).collect();
            if !sites.is_empty() {
                let k = sites[rng.random_range(0..sites.len())];
                w.drain(k..k + 2);
            }
        }
        2 => {
            let sites: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&k| (w[k].abs() - w[k + 1].abs()).abs() >= 2)
                .collect();
            if !sites.is_empty() {
                let k = sites[rng.random_range(0..sites.len())];
                w.swap(k, k + 1);
            }
        }
        _ => {
            // a b a ↔ b a b with |a − b| = 1, all letters of one sign
            let sites: Vec<usize> = (0..w.len().saturating_sub(2))
                .filter(|&k| {
                    let (a, b, c) = (w[k], w[k + 1], w[k + 2]);
                    a == c && (a > 0) == (b > 0) && (a.abs() - b.abs()).abs() == 1
                })
                .collect();
            if !sites.is_empty() {
                let k = sites[rng.random_range(0..sites.len())];
                let (a, b) = (w[k], w[k + 1]);
                w[k] = b;
                w[k + 1] = a;
                w[k + 2] = b;
            }
        }
    }
    w
}

pub fn artin_rewrite<R: Rng>(rng: &mut R, strands: usize, w: &[i32], moves: usize) -> Vec<i32> {
    let mut w = w.to_vec();
    for _ in 0..moves {
        w = random_artin_move(rng, strands, &w);
    }
    w
}

/// All words equal to `start` reachable by positive Artin relations, used
/// to confirm small identities such as `Δ² ` being central.
pub fn positive_rewrite_class(strands: usize, start: &[i32]) -> BTreeSet<Vec<i32>> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        for k in 0..w.len() {
            if k + 1 < w.len() && (w[k] - w[k + 1]).abs() >= 2 {
                let mut v = w.clone();
                v.swap(k, k + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            if k + 2 < w.len() && w[k] == w[k + 2] && (w[k] - w[k + 1]).abs() == 1 {
                let mut v = w.clone();
                v[k] = w[k + 1];
                v[k + 1] = w[k];
                v[k + 2] = w[k + 1];
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    let _ = strands;
    seen
}

// ---------------------------------------------------------------------------
// Integer matrices: determinantal divisors.

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn det(m: &[Vec<i128>]) -> i128 {
    // Bareiss fraction-free elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Invariant factors from gcds of `k × k` minors: `s_k = d_k / d_{k−1}`.
pub fn determinantal_invariant_factors(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                    .collect();
                g = gcd(g, det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// `(free rank, torsion > 1)` of `ℤ^cols / rowspace(m)`.
pub fn oracle_abelianization(m: &[Vec<i64>], cols: usize) -> (usize, Vec<u64>) {
    let factors = determinantal_invariant_factors(m, cols);
    let torsion = factors.iter().filter(|&&s| s > 1).map(|&s| s as u64).collect();
    (cols - factors.len(), torsion)
}

/// Exponent-sum matrix of relators, computed directly.
pub fn exponent_matrix(gens: usize, relators: &[Vec<i32>]) -> Vec<Vec<i64>> {
    relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; gens];
            for &l in r {
                row[l.unsigned_abs() as usize - 1] += l.signum() as i64;
            }
            row
        })
        .collect()
}

/// Connected components of the graph joining `b` and `c` in every C-group
/// relator `b⁻¹ c b a⁻¹` style pattern `[b, c, -b, -a]`.
pub fn components(gens: usize, edges: &[(usize, usize)]) -> usize {
    let mut adj = vec![Vec::new(); gens];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; gens];
    let mut count = 0;
    for s in 0..gens {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

// ---------------------------------------------------------------------------
// Branched covers: Euler characteristic from a lifted cell structure.

/// Number of orbits of a permutation given by zero-based images.
pub fn orbit_count(images: &[usize]) -> usize {
    let mut seen = vec![false; images.len()];
    let mut count = 0;
    for s in 0..images.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = images[x];
        }
    }
    count
}

/// Local monodromy of `c σ_i^{±1} c⁻¹` on sheets: the transposition of the
/// strands that end up at positions `i, i+1` after `c`.
pub fn band_monodromy(strands: usize, conjugator: &[i32], index: usize) -> Vec<usize> {
    let at = oracle_permutation(strands, conjugator);
    let a = at.iter().position(|&p| p == index - 1).unwrap();
    let b = at.iter().position(|&p| p == index).unwrap();
    let mut images: Vec<usize> = (0..strands).collect();
    images.swap(a, b);
    images
}

/// `χ` of the `m`-sheeted cover of a disc (`base_euler = 1`) or sphere
/// (`base_euler = 2`) branched over `n` points with the given local
/// monodromies.
///
/// Base cells: a basepoint, the branch points, one edge from the basepoint
/// to each branch point, on the disc one boundary loop, and a single 2-cell.
/// Over the basepoint and each edge lie `m` cells, over a branch point one
/// vertex per orbit of its monodromy, and the simply connected 2-cell lifts
/// to `m` copies. Returns `None` on the sphere when the monodromies do not
/// multiply to the identity (no cover exists).
pub fn gluing_euler(m: usize, base_euler: i64, monodromies: &[Vec<usize>]) -> Option<i64> {
    let n = monodromies.len() as i64;
    let m_i = m as i64;
    let branch_vertices: i64 = monodromies.iter().map(|p| orbit_count(p) as i64).sum();
    match base_euler {
        1 => Some(m_i + branch_vertices - m_i * (n + 1) + m_i),
        2 => {
            let mut prod: Vec<usize> = (0..m).collect();
            for p in monodromies {
                prod = prod.iter().map(|&x| p[x]).collect();
            }
            if prod.iter().enumerate().any(|(i, &x)| i != x) {
                return None;
            }
            Some(m_i + branch_vertices - m_i * n + m_i)
        }
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Matrices.

/// `min_φ ‖U − e^{iφ}V‖` by brute force over a phase grid, refined by
/// golden-section search.
pub fn brute_projective_distance(u: &[Vec<Complex64>], v: &[Vec<Complex64>]) -> f64 {
    let d = u.len();
    let norm_at = |phi: f64| {
        let ph = Complex64::from_polar(1.0, phi);
        let diff: Vec<Vec<Complex64>> = (0..d)
            .map(|r| (0..d).map(|c| u[r][c] - ph * v[r][c]).collect())
            .collect();
        operator_norm(&diff)
    };
    let steps = 720;
    let mut best = (0usize, f64::INFINITY);
    for k in 0..steps {
        let val = norm_at(k as f64 * std::f64::consts::TAU / steps as f64);
        if val < best.1 {
            best = (k, val);
        }
    }
    let h = std::f64::consts::TAU / steps as f64;
    let (mut lo, mut hi) = ((best.0 as f64 - 1.0) * h, (best.0 as f64 + 1.0) * h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let a = hi - g * (hi - lo);
        let b = lo + g * (hi - lo);
        if norm_at(a) < norm_at(b) {
            hi = b;
        } else {
            lo = a;
        }
    }
    norm_at((lo + hi) / 2.0).min(best.1)
}

/// Largest singular value: the top eigenvalue of `A†A`, taken through its
/// real symmetric embedding `[[Re, −Im], [Im, Re]]` (each eigenvalue doubled).
pub fn operator_norm(a: &[Vec<Complex64>]) -> f64 {
    let d = a.len();
    let mut ata = vec![vec![Complex64::new(0.0, 0.0); d]; d];
    for r in 0..d {
        for c in 0..d {
            ata[r][c] = a.iter().map(|row| row[r].conj() * row[c]).sum();
        }
    }
    let real = nalgebra::DMatrix::from_fn(2 * d, 2 * d, |r, c| {
        let z = ata[r % d][c % d];
        match (r < d, c < d) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let top = nalgebra::SymmetricEigen::new(real).eigenvalues.max();
    top.max(0.0).sqrt()
}

pub fn to_rows(m: &nalgebra::DMatrix<Complex64>) -> Vec<Vec<Complex64>> {
    (0..m.nrows()).map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect()).collect()
}
