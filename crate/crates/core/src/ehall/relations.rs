use super::{theta, alpha, EhaElement, EhallError, Vec2};

/// Interior lattice points of the triangle `(0, x, x + y)` by Pick's
/// theorem: `I = A - B/2 + 1`.
pub fn interior_points(x: Vec2, y: Vec2) -> Result<i64, EhallError> {
    if x.collinear(y) {
        return Err(EhallError::Collinear(x, y));
    }
    let twice_area = x.det(y).abs();
    let boundary = x.d() + y.d() + (x + y).d();
    Ok((twice_area - boundary + 2) / 2)
}

/// The same count by scanning the bounding box.
pub fn interior_points_by_enumeration(x: Vec2, y: Vec2) -> Result<i64, EhallError> {
    if x.collinear(y) {
        return Err(EhallError::Collinear(x, y));
    }
    let z = x + y;
    let pts = [Vec2::new(0, 0), x, z];
    let lo_a = pts.iter().map(|p| p.a).min().unwrap_or(0);
    let hi_a = pts.iter().map(|p| p.a).max().unwrap_or(0);
    let lo_b = pts.iter().map(|p| p.b).min().unwrap_or(0);
    let hi_b = pts.iter().map(|p| p.b).max().unwrap_or(0);
    // strict side of each edge, oriented by the triangle's sign
    let orient = x.det(z).signum();
    let side = |p: Vec2, q: Vec2, r: Vec2| Vec2::new(q.a - p.a, q.b - p.b).det(Vec2::new(r.a - p.a, r.b - p.b));
    let mut count = 0;
    for a in lo_a..=hi_a {
        for b in lo_b..=hi_b {
            let r = Vec2::new(a, b);
            if (0..3).all(|k| side(pts[k], pts[(k + 1) % 3], r) * orient > 0) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Hypotheses of the triangle relation: `x` primitive and the triangle
/// `(0, x, x + y)` free of interior lattice points.
pub fn triangle_check(x: Vec2, y: Vec2) -> Result<bool, EhallError> {
    let interior = interior_points(x, y)?;
    if x.det(y).abs() <= 20 {
        debug_assert_eq!(interior, interior_points_by_enumeration(x, y)?);
    }
    Ok(x.is_primitive() && interior == 0)
}

/// `ε_{x,y} = sign(det(x y))`
pub fn epsilon(x: Vec2, y: Vec2) -> i64 {
    x.det(y).signum()
}

/// `[u_y, u_x]` as given by the defining relations: zero for collinear
/// vectors, `ε_{x,y} θ_{x+y} / α_1` under the triangle hypotheses.
pub fn hall_bracket(y: Vec2, x: Vec2) -> Result<EhaElement, EhallError> {
    if x.is_zero() || y.is_zero() {
        return Err(EhallError::ZeroVector);
    }
    if x.collinear(y) {
        return Ok(EhaElement::zero());
    }
    if !triangle_check(x, y)? {
        return Err(EhallError::Hypotheses(x, y));
    }
    let k = alpha(1)?.inv()?.scale_int(epsilon(x, y));
    Ok(theta(x + y)?.scale(&k))
}
