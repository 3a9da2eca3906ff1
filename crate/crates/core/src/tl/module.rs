use nalgebra::DMatrix;

use super::{PlanarDiagram, TlError};

/// A cup diagram on `n` points: noncrossing cups plus through-strands
/// (defects) that are never nested inside a cup.
///
/// `partner[j]` is the other end of the cup at `j`, or `None` for a defect.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    partner: Vec<Option<usize>>,
}

impl LinkPattern {
    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, j: usize) -> Option<usize> {
        self.partner[j]
    }

    pub fn defects(&self) -> usize {
        self.partner.iter().filter(|p| p.is_none()).count()
    }

    /// Glues the bottom of `d` onto this pattern. Returns the resulting pattern
    /// and the number of closed loops, or `None` when two defects get joined
    /// (the image is zero in the module).
    pub fn act(&self, d: &PlanarDiagram) -> Option<(LinkPattern, usize)> {
        let n = self.points();
        assert_eq!(d.strands(), n, "diagram and pattern sizes differ");
        let mut out: Vec<Option<usize>> = vec![None; n];
        let mut done = vec![false; n];
        let mut middle_seen = vec![false; n];

        for x in 0..n {
            if done[x] {
                continue;
            }
            done[x] = true;
            let mut q = d.partner(x);
            // follow the strand down through alternating diagram arcs and cups
            let end = loop {
                if q < n {
                    break Some(q);
                }
                let j = q - n;
                middle_seen[j] = true;
                match self.partner[j] {
                    None => break None,
                    Some(k) => {
                        middle_seen[k] = true;
                        q = d.partner(n + k);
                    }
                }
            };
            match end {
                Some(y) => {
                    done[y] = true;
                    out[x] = Some(y);
                    out[y] = Some(x);
                }
                None => out[x] = None,
            }
        }

        // two pattern defects joined through a cap of `d`
        let defects_in = self.defects();
        let defects_out = out.iter().filter(|p| p.is_none()).count();
        if defects_out != defects_in {
            return None;
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
                let c = self.partner[k].expect("unvisited middle points lie on closed cups");
                middle_seen[c] = true;
                k = d.partner(n + c) - n;
                if k == j {
                    break;
                }
            }
        }
        Some((LinkPattern { partner: out }, loops))
    }
}

/// Basis of the standard module with `p` through-strands on `n` points,
/// in a fixed left-to-right order.
pub fn link_pattern_module(n: usize, p: usize) -> Result<Vec<LinkPattern>, TlError> {
    if p > n || !(n - p).is_multiple_of(2) {
        return Err(TlError::InvalidModule { n, p });
    }
    let cups = (n - p) / 2;
    let mut out = Vec::new();
    let mut partner = vec![None; n];
    let mut open = Vec::new();
    build(0, n, cups, 0, &mut open, &mut partner, &mut out);
    Ok(out)
}

fn build(
    j: usize,
    n: usize,
    cups: usize,
    opened: usize,
    open: &mut Vec<usize>,
    partner: &mut Vec<Option<usize>>,
    out: &mut Vec<LinkPattern>,
) {
    if j == n {
        if open.is_empty() && opened == cups {
            out.push(LinkPattern {
                partner: partner.clone(),
            });
        }
        return;
    }
    // remaining points must be able to close every open cup
    if open.len() > n - j {
        return;
    }
    if opened < cups {
        open.push(j);
        build(j + 1, n, cups, opened + 1, open, partner, out);
        open.pop();
    }
    if let Some(i) = open.pop() {
        partner[i] = Some(j);
        partner[j] = Some(i);
        build(j + 1, n, cups, opened, open, partner, out);
        partner[i] = None;
        partner[j] = None;
        open.push(i);
    }
    if open.is_empty() {
        build(j + 1, n, cups, opened, open, partner, out);
    }
}

/// The pairing of two patterns: reflect `v`, glue it onto `w`, and count
/// closed loops. `None` when some defect is capped off (pairing zero).
pub fn bilinear_form(v: &LinkPattern, w: &LinkPattern) -> Option<usize> {
    let n = v.points();
    assert_eq!(w.points(), n, "pattern sizes differ");
    let mut seen = vec![false; n];
    // every path starting at a defect of `v` must end at a defect of `w`
    for start in 0..n {
        if v.partner[start].is_some() || seen[start] {
            continue;
        }
        let mut j = start;
        loop {
            seen[j] = true;
            match w.partner[j] {
                None => break,
                Some(k) => {
                    seen[k] = true;
                    j = v.partner[k]?;
                }
            }
        }
    }
    let mut loops = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // a path from a `w` defect that never met a `v` defect
        w.partner[start]?;
        loops += 1;
        let mut j = start;
        loop {
            seen[j] = true;
            let k = w.partner[j].expect("closed loop");
            seen[k] = true;
            j = v.partner[k].expect("closed loop");
            if j == start {
                break;
            }
        }
    }
    Some(loops)
}

/// Gram matrix of the pairing on `basis` with loop value `delta`.
pub fn gram_matrix(basis: &[LinkPattern], delta: f64) -> DMatrix<f64> {
    let d = basis.len();
    DMatrix::from_fn(d, d, |r, c| match bilinear_form(&basis[r], &basis[c]) {
        Some(loops) => delta.powi(loops as i32),
        None => 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn dimensions() {
        for n in 0..=8 {
            for p in (n % 2..=n).step_by(2) {
                let k = (n - p) / 2;
                let expected = binom(n, k) - if k > 0 { binom(n, k - 1) } else { 0 };
                assert_eq!(link_pattern_module(n, p).unwrap().len(), expected, "n={n} p={p}");
            }
        }
        assert!(link_pattern_module(3, 0).is_err());
        assert!(link_pattern_module(2, 3).is_err());
    }

    #[test]
    fn three_point_basis_and_gram() {
        let b = link_pattern_module(3, 1).unwrap();
        assert_eq!(b[0].partner, vec![Some(1), Some(0), None]);
        assert_eq!(b[1].partner, vec![None, Some(2), Some(1)]);
        let g = gram_matrix(&b, 2.0);
        assert_eq!(g, DMatrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]));
    }

    #[test]
    fn generator_action() {
        let b = link_pattern_module(3, 1).unwrap();
        let e1 = PlanarDiagram::generator(3, 1).unwrap();
        assert_eq!(b[0].act(&e1), Some((b[0].clone(), 1)));
        assert_eq!(b[1].act(&e1), Some((b[0].clone(), 0)));
        let e2 = PlanarDiagram::generator(3, 2).unwrap();
        assert_eq!(b[0].act(&e2), Some((b[1].clone(), 0)));

        // capping the two defects of the p = 2 module kills the vector
        let v = &link_pattern_module(2, 2).unwrap()[0];
        assert_eq!(v.act(&PlanarDiagram::generator(2, 1).unwrap()), None);
    }
}
