//! The DAHA equality oracle and the elements built on it.
//!
//! Skein elements are translated to operators on Laurent polynomials in
//! `X_1..X_n` (polynomial representation of the double affine Hecke
//! algebra). The sign and direction conventions of that representation are
//! not assumed: [`gate`] searches a small space of variants and keeps the
//! one satisfying every defining relation.
//!
//! Equality verdicts are certified on a finite box of monomials only.

mod auto;
mod elements;
mod expr;
pub mod gate;
mod oracle;
mod poly;
mod relations;
mod rep;

pub use auto::{
    apply_path, gcd, mat_apply, mat_mul, path_matrix, sl2_path, tau_apply, theta_power, Mat2, Tau, IDENTITY, THETA,
};
pub use elements::{
    power_sum, q_elements, q_expr, q_m_minus_one, qtilde, qtilde_via, sandwich, symmetrizer_element, w_element, WMode,
};
pub use expr::{Compiled, Expr};
pub use gate::{build_rep, selection, Selection, VariantReport};
pub use oracle::{apply_expr, box_monomials, check_zero, exprs_equal, oracle_equal, OracleConfig, Tier, Verdict, Witness};
pub use poly::LaurentPoly;
pub use relations::{conjugation_identity, daha_relations, derived_relations, skein_relations, Relation, SkeinRelation};
pub use rep::{gen_prims, Convention, DahaGen, Exps, Prim};

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::words::WordError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DahaError {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("rank {0} too small")]
    BadRank(usize),
    #[error("zero vector")]
    ZeroVector,
    #[error("{0:?} is not on a coordinate axis")]
    OffAxis((i64, i64)),
    #[error("no convention satisfies the relations: {0}")]
    NoConvention(String),
    #[error("several conventions satisfy the relations: {0}")]
    AmbiguousConvention(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
