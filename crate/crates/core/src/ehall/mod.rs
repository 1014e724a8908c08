//! The elliptic Hall algebra side: the constants `α_i`, the θ series, the
//! defining brackets, and the map `φ_n` into the spherical DAHA.
//!
//! There is no normal form for elliptic Hall elements. Identities are
//! checked after transport through `φ_n`, where the DAHA oracle decides.

mod element;
mod relations;
mod theta;
mod transport;
mod vec2;

pub use element::EhaElement;
pub use relations::{epsilon, hall_bracket, interior_points, interior_points_by_enumeration, triangle_check};
pub use theta::{alpha, theta, theta_series, theta_series_recursive};
pub use transport::{phi_generator, phi_n};
pub use vec2::Vec2;

use thiserror::Error;

use crate::coeff::CoeffError;
use crate::daha::DahaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EhallError {
    #[error("index {0} must be at least 1")]
    BadIndex(i32),
    #[error("zero vector")]
    ZeroVector,
    #[error("{0} is not primitive")]
    NotPrimitive(Vec2),
    #[error("{0} and {1} are collinear")]
    Collinear(Vec2, Vec2),
    #[error("no bracket relation for x = {0}, y = {1}")]
    Hypotheses(Vec2, Vec2),
    #[error("rank {0} too small")]
    BadRank(usize),
    #[error(transparent)]
    Daha(#[from] DahaError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}
