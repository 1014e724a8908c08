//! Words in the punctured-torus braid generators `σ_i`, `x_1`, `y_1` and
//! their ℚ(s, c)-linear combinations.
//!
//! Only free cancellation happens at this level. Equality modulo the braid
//! and skein relations is decided by [`crate::daha`].

mod element;
mod named;
pub(crate) mod parse;
mod word;

pub use element::{Element, Substitution};
pub use named::{beta, commutator_x1y1, delta, gen_xy, named_word, p_word, Axis, Named};
pub use word::{free_reduce, Gen, Letter, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("no image given for generator {0:?}")]
    MissingImage(Letter),
    #[error("parse error: {0}")]
    Parse(String),
}

