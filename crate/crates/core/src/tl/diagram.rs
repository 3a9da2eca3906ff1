use serde::{Deserialize, Serialize};

use super::TlError;

/// A Temperley–Lieb diagram on `n` strands: a noncrossing perfect matching
/// of `2n` boundary points.
///
/// Points `0..n` are the top row left to right and `n..2n` the bottom row,
/// bottom point `n + j` sitting under top point `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanarDiagram {
    strands: usize,
    partner: Vec<usize>,
}

impl PlanarDiagram {
    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect();
        PlanarDiagram { strands: n, partner }
    }

    /// The generator `e_i` (one-based `i`): cups joining `i, i+1` on both rows.
    pub fn generator(n: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= n {
            return Err(TlError::IndexOutOfRange { index: i, strands: n });
        }
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[n + a] = n + b;
        d.partner[n + b] = n + a;
        Ok(d)
    }

    /// Validates an explicit pairing of `2n` points.
    pub fn from_partner(n: usize, partner: Vec<usize>) -> Result<Self, TlError> {
        let ok_shape = partner.len() == 2 * n
            && partner
                .iter()
                .enumerate()
                .all(|(x, &y)| y < 2 * n && y != x && partner[y] == x);
        if !ok_shape {
            return Err(TlError::BadDiagram("not a perfect matching".into()));
        }
        let d = PlanarDiagram { strands: n, partner };
        if !d.is_planar() {
            return Err(TlError::BadDiagram("pairing has crossing arcs".into()));
        }
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn partner(&self, x: usize) -> usize {
        self.partner[x]
    }

    /// Position of a point when walking the boundary clockwise from the top left.
    fn boundary_position(&self, x: usize) -> usize {
        let n = self.strands;
        if x < n {
            x
        } else {
            3 * n - 1 - x
        }
    }

    pub fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..2 * self.strands)
            .filter(|&x| x < self.partner[x])
            .map(|x| {
                let (p, q) = (self.boundary_position(x), self.boundary_position(self.partner[x]));
                (p.min(q), p.max(q))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// Number of strands joining the top row to the bottom row.
    pub fn through_strands(&self) -> usize {
        (0..self.strands).filter(|&x| self.partner[x] >= self.strands).count()
    }

    /// Stacks `self` on top of `other` and returns the resulting diagram with
    /// the number of closed loops formed in the middle.
    pub fn stack(&self, other: &PlanarDiagram) -> (PlanarDiagram, usize) {
        assert_eq!(self.strands, other.strands, "diagram sizes differ");
        let n = self.strands;
        let mut middle_seen = vec![false; n];
        let mut partner = vec![usize::MAX; 2 * n];

        // (on_top, point) → walk until leaving through an outer boundary point
        let walk = |mut on_top: bool, mut p: usize, seen: &mut [bool]| -> usize {
            loop {
                if on_top {
                    let q = self.partner[p];
                    if q < n {
                        return q;
                    }
                    seen[q - n] = true;
                    on_top = false;
                    p = q - n;
                } else {
                    let q = other.partner[p];
                    if q >= n {
                        return q;
                    }
                    seen[q] = true;
                    on_top = true;
                    p = n + q;
                }
            }
        };
        for x in 0..2 * n {
            if partner[x] != usize::MAX {
                continue;
            }
            let y = if x < n {
                walk(true, x, &mut middle_seen)
            } else {
                walk(false, x, &mut middle_seen)
            };
            partner[x] = y;
            partner[y] = x;
        }
        let mut loops = 0;
        for j in 0..n {
            if middle_seen[j] {
                continue;
            }
            loops += 1;
            let mut k = j;
            loop {
                middle_seen[k] = true;
                // middle point k: go down through `other`, then up through `self`
                let down = other.partner[k];
                middle_seen[down] = true;
                k = self.partner[n + down] - n;
                if k == j {
                    break;
                }
            }
        }
        (PlanarDiagram { strands: n, partner }, loops)
    }

    /// All `Catalan(n)` diagrams on `n` strands.
    pub fn all(n: usize) -> Vec<PlanarDiagram> {
        // noncrossing perfect matchings of boundary positions 0..2n
        fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
            if lo >= hi {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            let mut k = lo + 1;
            while k < hi {
                for inner in rec(lo + 1, k) {
                    for outer in rec(k + 1, hi) {
                        let mut m = vec![(lo, k)];
                        m.extend(inner.iter().copied());
                        m.extend(outer.iter().copied());
                        out.push(m);
                    }
                }
                k += 2;
            }
            out
        }
        let to_point = |pos: usize| if pos < n { pos } else { 3 * n - 1 - pos };
        rec(0, 2 * n)
            .into_iter()
            .map(|m| {
                let mut partner = vec![0; 2 * n];
                for (a, b) in m {
                    let (x, y) = (to_point(a), to_point(b));
                    partner[x] = y;
                    partner[y] = x;
                }
                PlanarDiagram { strands: n, partner }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..7).map(|n| PlanarDiagram::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
        assert!(PlanarDiagram::all(5).iter().all(PlanarDiagram::is_planar));
    }

    #[test]
    fn generator_relations() {
        let n = 4;
        let id = PlanarDiagram::identity(n);
        let e1 = PlanarDiagram::generator(n, 1).unwrap();
        let e2 = PlanarDiagram::generator(n, 2).unwrap();
        assert_eq!(id.stack(&e1), (e1.clone(), 0));
        assert_eq!(e1.stack(&e1), (e1.clone(), 1));
        let (e12, l1) = e1.stack(&e2);
        assert_eq!(e12.stack(&e1), (e1.clone(), 0));
        assert_eq!(l1, 0);
        assert_eq!(e1.through_strands(), 2);
    }

    #[test]
    fn rejects_crossings() {
        // top 0 ↔ bottom 3 and top 1 ↔ bottom 2 cross
        assert!(PlanarDiagram::from_partner(2, vec![3, 2, 1, 0]).is_err());
        assert!(PlanarDiagram::from_partner(2, vec![2, 3, 0, 1]).is_ok());
        assert!(PlanarDiagram::from_partner(2, vec![0, 3, 2, 1]).is_err());
        assert!(PlanarDiagram::generator(3, 3).is_err());
    }
}
