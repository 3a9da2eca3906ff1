//! Computational algebra for orbifold braid data.
//!
//! The crate covers the chain from four-dimensional orbifold data to braid
//! group representations:
//!
//! * [`braid`]: disc braid words and a normal form deciding the word problem.
//! * [`presentation`]: finite presentations, C-groups, abelianization and the
//!   wreath-product braid groups of higher-dimensional spaces.
//! * [`invariants`]: exact orbifold characteristic numbers and obstruction checks.
//! * [`surface`]: braid systems of braided surfaces, the Hurwitz action and
//!   branched-cover accounting.
//! * [`tl`]: the Temperley–Lieb algebra, Kauffman-bracket images and unitary
//!   Jones representations.
//! * [`compiler`]: approximating gates by images of braid words.

pub mod braid;
pub mod compiler;
pub mod invariants;
pub mod presentation;
pub mod surface;
pub mod tl;

pub use braid::{BraidError, BraidWord, GarsideForm, Permutation};
pub use compiler::{CompilationResult, SearchConfig, TargetGate};
pub use invariants::{InvariantReport, OrbifoldGeometry};
pub use presentation::{AbelianizationResult, GroupPresentation, WreathElement, WreathGroupSpec};
pub use surface::{BandGenerator, BraidSystem, CoverReport, MultisectionSpec};
pub use tl::{RepMatrices, TLElement, TLParams};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "braidforge/1";
