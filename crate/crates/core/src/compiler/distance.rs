use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::CompileError;
use crate::tl;

/// `min_φ ‖U − e^{iφ}V‖` in operator norm.
///
/// With `W = V†U`, the minimum is `2 sin(L/4)` where `L` is the shortest arc
/// of the unit circle holding every eigenvalue of `W`.
pub fn projective_distance(u: &DMatrix<Complex64>, v: &DMatrix<Complex64>) -> Result<f64, CompileError> {
    if u.shape() != v.shape() || !u.is_square() {
        return Err(CompileError::DimensionMismatch {
            target: v.nrows(),
            rep: u.nrows(),
        });
    }
    let d = u.nrows();
    let v_adj: Vec<Complex64> = v.adjoint().transpose().iter().copied().collect();
    let u_flat: Vec<Complex64> = u.transpose().iter().copied().collect();
    Ok(distance_flat(&v_adj, &u_flat, d))
}

/// Row-major `out = a·b` for `d×d` matrices.
#[inline]
pub(crate) fn mul_flat(a: &[Complex64], b: &[Complex64], out: &mut [Complex64], d: usize) {
    if d == 2 {
        out[0] = a[0] * b[0] + a[1] * b[2];
        out[1] = a[0] * b[1] + a[1] * b[3];
        out[2] = a[2] * b[0] + a[3] * b[2];
        out[3] = a[2] * b[1] + a[3] * b[3];
        return;
    }
    for r in 0..d {
        for col in 0..d {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 0..d {
                s += a[r * d + k] * b[k * d + col];
            }
            out[r * d + col] = s;
        }
    }
}

/// Projective distance between `m` and a target whose adjoint is `t_adj`,
/// both flat row-major.
pub(crate) fn distance_flat(t_adj: &[Complex64], m: &[Complex64], d: usize) -> f64 {
    match d {
        0 | 1 => 0.0,
        2 => {
            let mut w = [Complex64::new(0.0, 0.0); 4];
            mul_flat(t_adj, m, &mut w, 2);
            // eigenvalues m ± r without cancellation when W is close to scalar
            let mean = (w[0] + w[3]) * 0.5;
            let half = (w[0] - w[3]) * 0.5;
            let r = (half * half + w[1] * w[2]).sqrt();
            let spread = ((mean + r) * (mean - r).conj()).arg().abs();
            2.0 * (spread / 4.0).sin()
        }
        _ => {
            let mut w = vec![Complex64::new(0.0, 0.0); d * d];
            mul_flat(t_adj, m, &mut w, d);
            let mut angles: Vec<f64> = tl::eigenvalues(&DMatrix::from_row_slice(d, d, &w))
                .iter()
                .map(|z| z.arg())
                .collect();
            angles.sort_by(f64::total_cmp);
            let wrap = angles[0] + TAU - angles[d - 1];
            let gap = angles.windows(2).map(|p| p[1] - p[0]).fold(wrap, f64::max);
            2.0 * ((TAU - gap).max(0.0) / 4.0).sin()
        }
    }
}
