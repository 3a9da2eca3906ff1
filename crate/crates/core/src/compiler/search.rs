use std::collections::{HashMap, HashSet};

use num_complex::Complex64;
use rayon::prelude::*;

use super::distance::{distance_flat, mul_flat};
use super::{projective_distance, CompilationResult, CompileError, SearchConfig, Strategy, TargetGate};
use crate::braid::BraidWord;
use crate::tl::{rep_of_word, RepMatrices};

/// Generator letter, flat image, dedup key.
type Child = (u8, Vec<Complex64>, Option<Vec<i64>>);

const ROOT: u8 = u8::MAX;
/// Grid spacing for merging projectively equal images.
const DEDUP_SCALE: f64 = 1e8;

/// Level-by-level enumeration of freely reduced words and their images.
///
/// Letters are ordered `σ_1, σ_1⁻¹, σ_2, σ_2⁻¹, …`, and nodes within a level
/// appear in lexicographic order of their words, so scanning a level front
/// to back and keeping strict improvements breaks ties towards the
/// lexicographically smallest word.
pub(crate) struct Enumeration {
    pub(crate) dim: usize,
    strands: usize,
    letters: Vec<i32>,
    letter_mats: Vec<Vec<Complex64>>,
    parent: Vec<u32>,
    letter: Vec<u8>,
    mats: Vec<Complex64>,
    level_start: Vec<usize>,
    seen: Option<HashSet<Vec<i64>>>,
}

impl Enumeration {
    pub(crate) fn new(rm: &RepMatrices, dedup: bool) -> Self {
        let dim = rm.dimension();
        let letters: Vec<i32> = (1..rm.strands() as i32).flat_map(|i| [i, -i]).collect();
        let letter_mats = letters
            .iter()
            .map(|&l| rm.letter(l).transpose().iter().copied().collect())
            .collect();
        let mut mats = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            mats[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        let mut e = Enumeration {
            dim,
            strands: rm.strands(),
            letters,
            letter_mats,
            parent: vec![0],
            letter: vec![ROOT],
            mats,
            level_start: vec![0, 1],
            seen: dedup.then(HashSet::new),
        };
        if let Some(seen) = e.seen.as_mut() {
            seen.insert(projective_key(&e.mats[..dim * dim]));
        }
        e
    }

    pub(crate) fn len(&self) -> usize {
        self.parent.len()
    }

    pub(crate) fn depth(&self) -> usize {
        self.level_start.len() - 2
    }

    pub(crate) fn level(&self, k: usize) -> std::ops::Range<usize> {
        self.level_start[k]..self.level_start[k + 1]
    }

    pub(crate) fn matrix(&self, node: usize) -> &[Complex64] {
        let s = self.dim * self.dim;
        &self.mats[node * s..(node + 1) * s]
    }

    /// Appends the next level, expanding only `parents` (all of the last level
    /// when `None`). Returns the new level's node range.
    pub(crate) fn expand(&mut self, parents: Option<&[usize]>) -> std::ops::Range<usize> {
        let last = self.level(self.depth());
        let owned: Vec<usize>;
        let parents = match parents {
            Some(p) => p,
            None => {
                owned = last.collect();
                &owned
            }
        };
        let dim = self.dim;
        let size = dim * dim;
        let dedup = self.seen.is_some();
        // children of each parent, computed in parallel and merged in order
        let children: Vec<Vec<Child>> = parents
            .par_iter()
            .map(|&p| {
                let pm = &self.mats[p * size..(p + 1) * size];
                let pl = self.letter[p];
                (0..self.letters.len() as u8)
                    .filter(|&l| pl == ROOT || l != pl ^ 1)
                    .map(|l| {
                        let mut m = vec![Complex64::new(0.0, 0.0); size];
                        mul_flat(pm, &self.letter_mats[l as usize], &mut m, dim);
                        let key = dedup.then(|| projective_key(&m));
                        (l, m, key)
                    })
                    .collect()
            })
            .collect();
        let start = self.len();
        for (&p, kids) in parents.iter().zip(children) {
            for (l, m, key) in kids {
                if let (Some(seen), Some(key)) = (self.seen.as_mut(), key) {
                    if !seen.insert(key) {
                        continue;
                    }
                }
                self.parent.push(p as u32);
                self.letter.push(l);
                self.mats.extend_from_slice(&m);
            }
        }
        let end = self.len();
        self.level_start.push(end);
        start..end
    }

    pub(crate) fn word(&self, mut node: usize) -> BraidWord {
        let mut letters = Vec::new();
        while self.letter[node] != ROOT {
            letters.push(self.letters[self.letter[node] as usize]);
            node = self.parent[node] as usize;
        }
        letters.reverse();
        BraidWord::new(self.strands, letters).expect("letters come from the representation")
    }
}

/// Rounded entries after rotating the largest entry onto the positive reals.
fn projective_key(m: &[Complex64]) -> Vec<i64> {
    let max = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let pivot = m
        .iter()
        .find(|z| z.norm() >= max * (1.0 - 1e-9))
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    let rot = pivot.conj() / pivot.norm();
    m.iter()
        .flat_map(|&z| {
            let w = z * rot;
            [(w.re * DEDUP_SCALE).round() as i64, (w.im * DEDUP_SCALE).round() as i64]
        })
        .collect()
}

fn check_inputs(target: &TargetGate, rm: &RepMatrices) -> Result<(), CompileError> {
    if !rm.is_unitary() {
        return Err(CompileError::NonUnitaryRep);
    }
    if rm.dimension() != target.dimension() {
        return Err(CompileError::DimensionMismatch {
            target: target.dimension(),
            rep: rm.dimension(),
        });
    }
    Ok(())
}

pub(crate) fn flat_adjoint(target: &TargetGate) -> Vec<Complex64> {
    target.matrix().adjoint().transpose().iter().copied().collect()
}

/// Best braid word of length at most `cfg.max_depth` approximating `target`
/// under `rm`, up to global phase.
pub fn compile_gate(
    target: &TargetGate,
    rm: &RepMatrices,
    cfg: &SearchConfig,
) -> Result<CompilationResult, CompileError> {
    cfg.validate()?;
    check_inputs(target, rm)?;
    match cfg.strategy {
        Strategy::Exhaustive => exhaustive(target, rm, cfg),
        Strategy::MeetInMiddle => meet_in_middle(target, rm, cfg),
    }
}

fn finish(
    word: BraidWord,
    target: &TargetGate,
    rm: &RepMatrices,
    nodes: u64,
    depth: usize,
) -> Result<CompilationResult, CompileError> {
    let achieved = projective_distance(&rep_of_word(&word, rm)?, target.matrix())?;
    Ok(CompilationResult {
        word,
        achieved_distance: achieved,
        nodes_explored: nodes,
        depth_reached: depth,
    })
}

fn exhaustive(target: &TargetGate, rm: &RepMatrices, cfg: &SearchConfig) -> Result<CompilationResult, CompileError> {
    let t_adj = flat_adjoint(target);
    let mut en = Enumeration::new(rm, cfg.dedup);
    let dim = en.dim;
    let mut best = (0usize, distance_flat(&t_adj, en.matrix(0), dim));
    let mut nodes = 1u64;
    let mut depth = 0;
    let mut frontier: Option<Vec<usize>> = None;
    while best.1 > cfg.tolerance && depth < cfg.max_depth {
        let range = en.expand(frontier.as_deref());
        depth += 1;
        nodes += range.len() as u64;
        let dists: Vec<f64> = range
            .clone()
            .into_par_iter()
            .map(|i| distance_flat(&t_adj, en.matrix(i), dim))
            .collect();
        for (i, &d) in range.clone().zip(&dists) {
            if d < best.1 {
                best = (i, d);
            }
        }
        if range.is_empty() {
            break;
        }
        frontier = cfg.beam_width.filter(|&w| w < range.len()).map(|w| {
            let mut order: Vec<usize> = (0..dists.len()).collect();
            order.sort_by(|&a, &b| dists[a].total_cmp(&dists[b]).then(a.cmp(&b)));
            order.truncate(w);
            order.sort_unstable();
            order.into_iter().map(|k| range.start + k).collect()
        });
    }
    finish(en.word(best.0), target, rm, nodes, depth)
}

/// Unit quaternion `(a, b, c, d)` of `M / sqrt(det M)`, written
/// `[[a + ib, c + id], [−c + id, a − ib]]`. Defined up to sign.
fn quaternion(m: &[Complex64]) -> [f64; 4] {
    let det = m[0] * m[3] - m[1] * m[2];
    let s = det.sqrt();
    let (x, y) = (m[0] / s, m[1] / s);
    [x.re, x.im, y.re, y.im]
}

/// Quaternion of `p̄ q`, the product `P†Q` in `SU(2)`.
fn quat_adj_mul(p: [f64; 4], q: [f64; 4]) -> [f64; 4] {
    // P = [[α, β], [−β̄, ᾱ]] with α = p0 + i p1, β = p2 + i p3
    let (a1, b1) = (Complex64::new(p[0], p[1]), Complex64::new(p[2], p[3]));
    let (a2, b2) = (Complex64::new(q[0], q[1]), Complex64::new(q[2], q[3]));
    // (P†Q)_{00} = ᾱ1 α2 + β1 β̄2, (P†Q)_{01} = ᾱ1 β2 − β1 ᾱ2
    let x = a1.conj() * a2 + b1 * b2.conj();
    let y = a1.conj() * b2 - b1 * a2.conj();
    [x.re, x.im, y.re, y.im]
}

fn quat_dist(p: &[f64; 4], q: &[f64; 4], sign: f64) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - sign * b).powi(2))
        .sum::<f64>()
        .sqrt()
}

fn cell(q: &[f64; 4], size: f64) -> [i64; 4] {
    q.map(|x| (x / size).floor() as i64)
}

fn meet_in_middle(target: &TargetGate, rm: &RepMatrices, cfg: &SearchConfig) -> Result<CompilationResult, CompileError> {
    if rm.dimension() != 2 {
        return Err(CompileError::BadConfig(
            "meet-in-the-middle search needs a two-dimensional representation".into(),
        ));
    }
    let t_adj = flat_adjoint(target);
    let half = cfg.max_depth.div_ceil(2);
    let rest = cfg.max_depth - half;
    let mut en = Enumeration::new(rm, cfg.dedup);
    for _ in 0..half {
        en.expand(None);
    }
    let mut nodes = en.len() as u64;

    // the exhaustive optimum over the half-depth words
    let mut best_single = (0usize, f64::INFINITY);
    for i in 0..en.len() {
        let d = distance_flat(&t_adj, en.matrix(i), 2);
        if d < best_single.1 {
            best_single = (i, d);
        }
    }
    if best_single.1 <= cfg.tolerance {
        return finish(en.word(best_single.0), target, rm, nodes, half);
    }

    // pairs (u, v) with M_u M_v ≈ T, i.e. q_v ≈ ±q_u⁻¹ q_T; only distances
    // below the half-depth optimum matter, so a grid of that spacing suffices
    let radius = best_single.1;
    let quats: Vec<[f64; 4]> = (0..en.len()).map(|i| quaternion(en.matrix(i))).collect();
    let v_end = en.level(rest).end;
    let mut grid: HashMap<[i64; 4], Vec<usize>> = HashMap::new();
    for (v, q) in quats.iter().enumerate().take(v_end) {
        grid.entry(cell(q, radius)).or_default().push(v);
    }
    let t_quat = quaternion(target.matrix().transpose().as_slice());
    let offsets: Vec<[i64; 4]> = (0..81)
        .map(|k| [k % 3 - 1, k / 3 % 3 - 1, k / 9 % 3 - 1, k / 27 - 1])
        .collect();

    let per_u: Vec<Option<(usize, f64)>> = quats
        .par_iter()
        .map(|qu| {
            let x = quat_adj_mul(*qu, t_quat);
            let mut found: Option<(usize, f64)> = None;
            for sign in [1.0, -1.0] {
                let xs = x.map(|c| sign * c);
                let base = cell(&xs, radius);
                for off in &offsets {
                    let key = [base[0] + off[0], base[1] + off[1], base[2] + off[2], base[3] + off[3]];
                    for &v in grid.get(&key).into_iter().flatten() {
                        let d = quat_dist(&quats[v], &x, sign);
                        if d < found.map_or(radius, |f| f.1) {
                            found = Some((v, d));
                        }
                    }
                }
            }
            found
        })
        .collect();
    nodes += quats.len() as u64;

    let mut best: Option<(usize, usize, f64)> = None;
    for (u, f) in per_u.into_iter().enumerate() {
        if let Some((v, d)) = f {
            if d < best.map_or(radius, |b| b.2) {
                best = Some((u, v, d));
            }
        }
    }
    let word = match best {
        Some((u, v, _)) => en
            .word(u)
            .compose(&en.word(v))
            .expect("same strand count")
            .free_reduce(),
        None => en.word(best_single.0),
    };
    finish(word, target, rm, nodes, cfg.max_depth)
}

/// Nonempty words of length at most `max_depth` whose image is within
/// `tolerance` of the identity up to phase, in enumeration order.
///
/// With `dedup` off every freely reduced word is visited, so relations such
/// as `σ_1^10 = 1` at a fifth root of unity show up explicitly.
pub fn closure_words(
    rm: &RepMatrices,
    max_depth: usize,
    tolerance: f64,
    dedup: bool,
) -> Result<Vec<BraidWord>, CompileError> {
    let id = TargetGate::identity(rm.dimension());
    check_inputs(&id, rm)?;
    let t_adj = flat_adjoint(&id);
    let mut en = Enumeration::new(rm, dedup);
    let mut out = Vec::new();
    for _ in 0..max_depth {
        let range = en.expand(None);
        for i in range {
            if distance_flat(&t_adj, en.matrix(i), en.dim) <= tolerance {
                out.push(en.word(i));
            }
        }
    }
    Ok(out)
}
