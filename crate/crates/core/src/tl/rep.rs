use std::collections::HashMap;
use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::module::{gram_matrix, link_pattern_module, LinkPattern};
use super::{PlanarDiagram, TlError};
use crate::braid::BraidWord;

type CMatrix = DMatrix<Complex64>;

/// The bracket parameter `A` on the unit circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TLParams {
    a: Complex64,
}

impl TLParams {
    pub fn new(a: Complex64) -> Result<Self, TlError> {
        if !a.re.is_finite() || !a.im.is_finite() || (a.norm() - 1.0).abs() > 1e-12 {
            return Err(TlError::BadParameter(format!("|A| must be 1, got |{a}| = {}", a.norm())));
        }
        Ok(TLParams { a })
    }

    /// `A = e^{iθ}`.
    pub fn from_angle(theta: f64) -> Result<Self, TlError> {
        if !theta.is_finite() {
            return Err(TlError::BadParameter(format!("angle {theta} is not finite")));
        }
        Ok(TLParams {
            a: Complex64::from_polar(1.0, theta),
        })
    }

    pub fn a_value(&self) -> Complex64 {
        self.a
    }

    /// `δ = −A² − A⁻² = −2 cos 2θ`.
    pub fn loop_value(&self) -> f64 {
        -2.0 * (2.0 * self.a.arg()).cos()
    }

    /// The Hecke parameter `q = A⁻⁴`.
    pub fn q(&self) -> Complex64 {
        self.a.powi(-4)
    }
}

impl Default for TLParams {
    /// `A = e^{2πi/5}`, where `δ` is the golden ratio.
    fn default() -> Self {
        TLParams {
            a: Complex64::from_polar(1.0, 2.0 * PI / 5.0),
        }
    }
}

/// Parses an angle in radians: `2pi/5`, `-pi/5`, `2*pi/5`, `pi` or a plain number.
pub fn parse_angle(text: &str) -> Result<f64, TlError> {
    let bad = || TlError::BadParameter(format!("cannot parse angle {text:?}"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_lowercase();
    if let Ok(x) = s.parse::<f64>() {
        return x.is_finite().then_some(x).ok_or_else(bad);
    }
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.to_string(), b.parse::<f64>().map_err(|_| bad())?),
        None => (s.clone(), 1.0),
    };
    let head = num
        .strip_suffix("pi")
        .or_else(|| num.strip_suffix('π'))
        .ok_or_else(bad)?;
    let head = head.strip_suffix('*').unwrap_or(head);
    let factor = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h.parse::<f64>().map_err(|_| bad())?,
    };
    if den == 0.0 {
        return Err(bad());
    }
    let value = factor * PI / den;
    value.is_finite().then_some(value).ok_or_else(bad)
}

/// Matrices of a Jones representation on the link-pattern module `(n, p)`.
#[derive(Clone, Debug)]
pub struct RepMatrices {
    strands: usize,
    through_strands: usize,
    params: TLParams,
    sigma: Vec<CMatrix>,
    sigma_inv: Vec<CMatrix>,
    e: Vec<CMatrix>,
    gram: DMatrix<f64>,
    unitary: bool,
}

impl RepMatrices {
    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn through_strands(&self) -> usize {
        self.through_strands
    }

    pub fn dimension(&self) -> usize {
        self.gram.nrows()
    }

    pub fn params(&self) -> TLParams {
        self.params
    }

    /// Images of `σ_1, …, σ_{n−1}`.
    pub fn sigma_images(&self) -> &[CMatrix] {
        &self.sigma
    }

    pub fn sigma_inverse_images(&self) -> &[CMatrix] {
        &self.sigma_inv
    }

    pub fn e_images(&self) -> &[CMatrix] {
        &self.e
    }

    /// The pairing of the link-pattern basis.
    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn is_unitary(&self) -> bool {
        self.unitary
    }

    /// Image of a signed generator letter.
    pub fn letter(&self, l: i32) -> &CMatrix {
        let i = l.unsigned_abs() as usize - 1;
        if l > 0 {
            &self.sigma[i]
        } else {
            &self.sigma_inv[i]
        }
    }
}

fn act_matrix(d: &PlanarDiagram, basis: &[LinkPattern], index: &HashMap<&LinkPattern, usize>, delta: f64) -> CMatrix {
    let dim = basis.len();
    let mut m = CMatrix::zeros(dim, dim);
    for (c, v) in basis.iter().enumerate() {
        if let Some((w, loops)) = v.act(d) {
            let r = index[&w];
            m[(r, c)] += Complex64::new(delta.powi(loops as i32), 0.0);
        }
    }
    m
}

pub fn rep_matrices(n: usize, p: usize, params: &TLParams) -> Result<RepMatrices, TlError> {
    let basis = link_pattern_module(n, p)?;
    let index: HashMap<&LinkPattern, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let delta = params.loop_value();
    let dim = basis.len();
    let id = CMatrix::identity(dim, dim);
    let a = params.a_value();
    let a_inv = a.conj();
    let mut sigma = Vec::new();
    let mut sigma_inv = Vec::new();
    let mut e = Vec::new();
    for i in 1..n {
        let ei = act_matrix(&PlanarDiagram::generator(n, i)?, &basis, &index, delta);
        sigma.push(&id * a + &ei * a_inv);
        sigma_inv.push(&id * a_inv + &ei * a);
        e.push(ei);
    }
    Ok(RepMatrices {
        strands: n,
        through_strands: p,
        params: *params,
        sigma,
        sigma_inv,
        e,
        gram: gram_matrix(&basis, delta),
        unitary: false,
    })
}

/// Conjugates by the square root of the Gram matrix, making every image
/// unitary. Fails when the pairing is not positive definite at this `A`.
pub fn unitarize(rm: &RepMatrices) -> Result<RepMatrices, TlError> {
    if rm.unitary {
        return Ok(rm.clone());
    }
    let dim = rm.dimension();
    if dim == 0 {
        return Ok(RepMatrices {
            unitary: true,
            ..rm.clone()
        });
    }
    let eig = SymmetricEigen::new(rm.gram.clone());
    let max = eig.eigenvalues.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let min = eig.eigenvalues.min();
    if min <= 1e-10 * max.max(1.0) {
        return Err(TlError::NotUnitarizable(format!(
            "Gram matrix has smallest eigenvalue {min:.3e}"
        )));
    }
    let v = eig.eigenvectors.map(|x| Complex64::new(x, 0.0));
    let sqrt = CMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(x.sqrt(), 0.0)));
    let inv_sqrt = CMatrix::from_diagonal(&eig.eigenvalues.map(|x| Complex64::new(1.0 / x.sqrt(), 0.0)));
    let s = &v * sqrt * v.transpose();
    let s_inv = &v * inv_sqrt * v.transpose();
    let conj = |m: &CMatrix| &s * m * &s_inv;
    Ok(RepMatrices {
        sigma: rm.sigma.iter().map(conj).collect(),
        sigma_inv: rm.sigma_inv.iter().map(conj).collect(),
        e: rm.e.iter().map(conj).collect(),
        unitary: true,
        ..rm.clone()
    })
}

/// Ordered product of generator images along the word.
pub fn rep_of_word(w: &BraidWord, rm: &RepMatrices) -> Result<CMatrix, TlError> {
    if w.strands() != rm.strands {
        return Err(TlError::StrandMismatch {
            left: w.strands(),
            right: rm.strands,
        });
    }
    let dim = rm.dimension();
    Ok(w
        .letters()
        .iter()
        .fold(CMatrix::identity(dim, dim), |acc, &l| acc * rm.letter(l)))
}

/// Spectral norm.
pub fn op_norm(m: &CMatrix) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.clone().singular_values().max()
}

/// Largest violation of the Artin relations and of `σ_i σ_i⁻¹ = 1`.
pub fn braid_relation_residual(rm: &RepMatrices) -> f64 {
    let s = &rm.sigma;
    let dim = rm.dimension();
    let id = CMatrix::identity(dim, dim);
    let mut worst = 0.0f64;
    for i in 0..s.len() {
        worst = worst.max(op_norm(&(&s[i] * &rm.sigma_inv[i] - &id)));
        for j in i + 1..s.len() {
            let r = if j == i + 1 {
                &s[i] * &s[j] * &s[i] - &s[j] * &s[i] * &s[j]
            } else {
                &s[i] * &s[j] - &s[j] * &s[i]
            };
            worst = worst.max(op_norm(&r));
        }
    }
    worst
}

/// Largest `‖U†U − I‖` over the generator images.
pub fn unitarity_residual(rm: &RepMatrices) -> f64 {
    let dim = rm.dimension();
    let id = CMatrix::identity(dim, dim);
    rm.sigma
        .iter()
        .map(|u| op_norm(&(u.adjoint() * u - &id)))
        .fold(0.0, f64::max)
}

/// Eigenvalues of a square complex matrix, sorted by argument.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = match m.nrows() {
        0 => Vec::new(),
        1 => vec![m[(0, 0)]],
        2 => {
            let (a, b, c, d) = (m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
            let mean = (a + d) / 2.0;
            let half = (a - d) / 2.0;
            let root = (half * half + b * c).sqrt();
            vec![mean + root, mean - root]
        }
        _ => {
            let (_, t) = m.clone().schur().unpack();
            t.diagonal().iter().copied().collect()
        }
    };
    out.sort_by(|x, y| x.arg().total_cmp(&y.arg()).then(x.norm().total_cmp(&y.norm())));
    out
}

/// Row-major `[re, im]` pairs.
pub fn matrix_to_json(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

/// Reads a square matrix from `dimension` and row-major `[re, im]` entries.
pub fn matrix_from_json(dimension: usize, entries: &[[f64; 2]]) -> Result<CMatrix, TlError> {
    if entries.len() != dimension * dimension {
        return Err(TlError::BadParameter(format!(
            "expected {} entries for dimension {dimension}, got {}",
            dimension * dimension,
            entries.len()
        )));
    }
    Ok(CMatrix::from_row_iterator(
        dimension,
        dimension,
        entries.iter().map(|&[re, im]| Complex64::new(re, im)),
    ))
}
