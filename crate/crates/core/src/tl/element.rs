use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::{LaurentPoly, PlanarDiagram, TLParams, TlError};

/// Coefficient ring for Temperley–Lieb elements.
pub trait Coefficient: Clone + PartialEq + Zero + One + Add<Output = Self> + Mul<Output = Self> {}

impl<T> Coefficient for T where T: Clone + PartialEq + Zero + One + Add<Output = T> + Mul<Output = T> {}

/// The Kauffman bracket data `(A, A⁻¹, δ)` over some coefficient ring.
pub trait Bracket {
    type Coeff: Coefficient;

    fn a(&self) -> Self::Coeff;
    fn a_inv(&self) -> Self::Coeff;
    /// Value of a closed loop, `−A² − A⁻²`.
    fn delta(&self) -> Self::Coeff;
}

impl Bracket for TLParams {
    type Coeff = Complex64;

    fn a(&self) -> Complex64 {
        self.a_value()
    }

    fn a_inv(&self) -> Complex64 {
        self.a_value().conj()
    }

    fn delta(&self) -> Complex64 {
        Complex64::new(self.loop_value(), 0.0)
    }
}

/// `A` kept as an indeterminate: exact integer Laurent coefficients.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymbolicBracket;

impl Bracket for SymbolicBracket {
    type Coeff = LaurentPoly;

    fn a(&self) -> LaurentPoly {
        LaurentPoly::a()
    }

    fn a_inv(&self) -> LaurentPoly {
        LaurentPoly::a_inv()
    }

    fn delta(&self) -> LaurentPoly {
        let a2 = LaurentPoly::monomial(-1, 2);
        let am2 = LaurentPoly::monomial(-1, -2);
        a2 + am2
    }
}

/// A linear combination of diagrams in `TL_n`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct TLElement<R> {
    strands: usize,
    terms: BTreeMap<PlanarDiagram, R>,
}

impl<R: Coefficient> TLElement<R> {
    pub fn zero(strands: usize) -> Self {
        TLElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(strands: usize) -> Self {
        Self::from_diagram(PlanarDiagram::identity(strands), R::one())
    }

    pub fn from_diagram(d: PlanarDiagram, coeff: R) -> Self {
        let mut e = Self::zero(d.strands());
        e.add_term(d, coeff);
        e
    }

    /// The generator `e_i`.
    pub fn generator(strands: usize, i: usize) -> Result<Self, TlError> {
        Ok(Self::from_diagram(PlanarDiagram::generator(strands, i)?, R::one()))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> &BTreeMap<PlanarDiagram, R> {
        &self.terms
    }

    pub fn coeff(&self, d: &PlanarDiagram) -> R {
        self.terms.get(d).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: PlanarDiagram, coeff: R) {
        let sum = match self.terms.remove(&d) {
            Some(c) => c + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(d, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero(self.strands);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), s.clone() * c.clone());
        }
        out
    }

    /// Diagrammatic product: `self` stacked on top of `other`, each closed
    /// loop replaced by `delta`.
    pub fn multiply(&self, other: &Self, delta: &R) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = Self::zero(self.strands);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = d1.stack(d2);
                let mut c = c1.clone() * c2.clone();
                for _ in 0..loops {
                    c = c * delta.clone();
                }
                out.add_term(d, c);
            }
        }
        Ok(out)
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.strands != other.strands {
            return Err(TlError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }
}

impl TLElement<Complex64> {
    /// Coefficientwise comparison within `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.strands == other.strands
            && self
                .terms
                .keys()
                .chain(other.terms.keys())
                .all(|d| (self.coeff(d) - other.coeff(d)).norm() <= tol)
    }
}

pub fn tl_multiply<B: Bracket>(
    x: &TLElement<B::Coeff>,
    y: &TLElement<B::Coeff>,
    params: &B,
) -> Result<TLElement<B::Coeff>, TlError> {
    x.multiply(y, &params.delta())
}

/// Kauffman-bracket image of `σ_i^{±1}`: `A·1 + A⁻¹·e_i`, or `A⁻¹·1 + A·e_i`
/// for the inverse.
pub fn kauffman_sigma<B: Bracket>(
    i: usize,
    n: usize,
    params: &B,
    positive: bool,
) -> Result<TLElement<B::Coeff>, TlError> {
    let e = PlanarDiagram::generator(n, i)?;
    let (id_coeff, e_coeff) = if positive {
        (params.a(), params.a_inv())
    } else {
        (params.a_inv(), params.a())
    };
    let mut out = TLElement::from_diagram(PlanarDiagram::identity(n), id_coeff);
    out.add_term(e, e_coeff);
    Ok(out)
}

/// Kauffman image of a braid word, as a product of generator images.
pub fn kauffman_word<B: Bracket>(
    letters: &[i32],
    n: usize,
    params: &B,
) -> Result<TLElement<B::Coeff>, TlError> {
    let mut acc = TLElement::identity(n);
    for &l in letters {
        let s = kauffman_sigma(l.unsigned_abs() as usize, n, params, l > 0)?;
        acc = tl_multiply(&acc, &s, params)?;
    }
    Ok(acc)
}
