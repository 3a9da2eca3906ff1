//! Temperley–Lieb algebra, Kauffman-bracket images of braids and the Jones
//! representations on link-pattern modules.
//!
//! The loop value is `δ = −A² − A⁻²`, the convention under which
//! `σ_i ↦ A·1 + A⁻¹·e_i` is a homomorphism from the braid group.

mod diagram;
mod element;
mod laurent;
mod module;
mod rep;

pub use diagram::PlanarDiagram;
pub use element::{kauffman_sigma, kauffman_word, tl_multiply, Bracket, Coefficient, SymbolicBracket, TLElement};
pub use laurent::LaurentPoly;
pub use module::{bilinear_form, gram_matrix, link_pattern_module, LinkPattern};
pub use rep::{
    braid_relation_residual, eigenvalues, matrix_from_json, matrix_to_json, op_norm, parse_angle,
    rep_matrices, rep_of_word, unitarity_residual, unitarize, RepMatrices, TLParams,
};

use thiserror::Error;

use crate::braid::BraidError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TlError {
    #[error("generator index {index} is out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("invalid diagram: {0}")]
    BadDiagram(String),
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("no link-pattern module with n = {n} and p = {p} through-strands (need p ≤ n, n − p even)")]
    InvalidModule { n: usize, p: usize },
    #[error("not unitarizable at this parameter: {0}")]
    NotUnitarizable(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
}
