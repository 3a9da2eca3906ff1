//! Smith normal form over ℤ, used for abelianizing presentations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Diagonal of the Smith normal form of `matrix` (rows × cols), as
/// non-negative invariant factors `d_1 | d_2 | … | d_r`, zeros dropped.
pub fn invariant_factors(matrix: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = m.len();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&m, t, cols) else {
            break;
        };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            reduce_pivot(&mut m, t, cols);
            // Pivot must divide the remaining block; otherwise fold the offending row in.
            let p = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let row = m[i][t..cols].to_vec();
                    for (dst, v) in m[t][t..cols].iter_mut().zip(row) {
                        *dst += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

/// Clears row `t` and column `t` outside the pivot, shrinking the pivot by
/// Euclidean steps whenever a remainder survives.
fn reduce_pivot(m: &mut [Vec<BigInt>], t: usize, cols: usize) {
    let rows = m.len();
    loop {
        let mut done = true;
        for i in t + 1..rows {
            if m[i][t].is_zero() {
                continue;
            }
            let q = m[i][t].div_floor(&m[t][t]);
            let (head, tail) = m.split_at_mut(i);
            for (dst, v) in tail[0][t..cols].iter_mut().zip(&head[t][t..cols]) {
                *dst -= &q * v;
            }
            if !m[i][t].is_zero() {
                m.swap(t, i);
                done = false;
            }
        }
        for j in t + 1..cols {
            if m[t][j].is_zero() {
                continue;
            }
            let q = m[t][j].div_floor(&m[t][t]);
            for row in m.iter_mut().skip(t) {
                let v = &q * &row[t];
                row[j] -= v;
            }
            if !m[t][j].is_zero() {
                for row in m.iter_mut() {
                    row.swap(t, j);
                }
                done = false;
            }
        }
        if done {
            return;
        }
    }
}

fn smallest_nonzero(m: &[Vec<BigInt>], t: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().take(cols).skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub(crate) fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(m: &[Vec<i64>], cols: usize) -> Vec<i64> {
        invariant_factors(m, cols)
            .into_iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    #[test]
    fn diagonal_already() {
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
    }

    #[test]
    fn classic_example() {
        let m = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        assert_eq!(factors(&m, 3), vec![2, 6, 12]);
    }

    #[test]
    fn rank_deficient() {
        assert_eq!(factors(&[vec![1, -1]], 2), vec![1]);
        assert_eq!(factors(&[vec![0, 0]], 2), Vec::<i64>::new());
        assert_eq!(factors(&[vec![2, 4], vec![1, 2]], 2), vec![1]);
    }
}
