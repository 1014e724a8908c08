use std::fmt;
use std::ops::{Add, Neg};

use serde::Serialize;

/// A lattice vector indexing the generator `u_x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vec2 {
    pub a: i64,
    pub b: i64,
}

impl Vec2 {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// `gcd(|a|, |b|)`, zero only for the zero vector.
    pub fn d(self) -> i64 {
        num_integer::Integer::gcd(&self.a, &self.b)
    }

    pub fn is_primitive(self) -> bool {
        self.d() == 1
    }

    /// The primitive vector `x / d(x)`.
    pub fn primitive(self) -> Self {
        let d = self.d();
        Self::new(self.a / d, self.b / d)
    }

    pub fn scale(self, k: i64) -> Self {
        Self::new(k * self.a, k * self.b)
    }

    /// `det(x y)` with `x`, `y` as columns.
    pub fn det(self, y: Vec2) -> i64 {
        self.a * y.b - self.b * y.a
    }

    pub fn collinear(self, y: Vec2) -> bool {
        self.det(y) == 0
    }

    pub fn tuple(self) -> (i64, i64) {
        (self.a, self.b)
    }
}

impl From<(i64, i64)> for Vec2 {
    fn from((a, b): (i64, i64)) -> Self {
        Self::new(a, b)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.a + o.a, self.b + o.b)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.a, -self.b)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}
