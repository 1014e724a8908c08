use crate::daha::{q_expr, q_m_minus_one, symmetrizer_element, Expr};

use super::{EhaElement, EhallError, Vec2};

/// Image of `u_x`: `Q_x / (q^{d(x)} - 1)`.
pub fn phi_generator(x: Vec2, n: usize) -> Result<Expr, EhallError> {
    if x.is_zero() {
        return Err(EhallError::ZeroVector);
    }
    let k = q_m_minus_one(x.d() as i32).inv()?;
    Ok(q_expr(x.tuple(), n)?.scale(&k))
}

/// The map into the spherical DAHA at rank `n`, word by word. The unit goes
/// to `e_n`, the unit of the spherical subalgebra.
pub fn phi_n(e: &EhaElement, n: usize) -> Result<Expr, EhallError> {
    if n < 2 {
        return Err(EhallError::BadRank(n));
    }
    let mut out = Vec::new();
    for (w, c) in e.terms() {
        let image = if w.is_empty() {
            Expr::from_element(&symmetrizer_element(n))
        } else {
            Expr::prod(w.iter().map(|&x| phi_generator(x, n)).collect::<Result<Vec<_>, _>>()?)
        };
        out.push((c.clone(), image));
    }
    Ok(Expr::Sum(out))
}
