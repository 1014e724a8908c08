use torus_skein::coeff::{Param, RatFunc};
use torus_skein::daha::{exprs_equal, selection, Expr, OracleConfig};
use torus_skein::ehall::*;

fn v(a: i64, b: i64) -> Vec2 {
    Vec2::new(a, b)
}

fn u(a: i64, b: i64) -> EhaElement {
    EhaElement::u(v(a, b))
}

fn half() -> RatFunc {
    RatFunc::one().div(&RatFunc::from_int(2)).unwrap()
}

fn vanishes_at(e: &EhaElement, n: usize) -> bool {
    let conv = selection().unwrap().convention;
    let img = phi_n(e, n).unwrap();
    exprs_equal(&img, &Expr::zero(), conv, n, &OracleConfig::default()).unwrap().is_equal()
}

#[test]
fn alpha_one_expanded_by_hand() {
    // σ = c^2, σ̄ = s^-2, so (σσ̄)^-1 = s^2 c^-2
    let one = RatFunc::one();
    let hand = one
        .sub(&RatFunc::monomial(0, 2))
        .mul(&one.sub(&RatFunc::monomial(-2, 0)))
        .mul(&one.sub(&RatFunc::monomial(2, -2)));
    assert_eq!(alpha(1).unwrap(), hand);
}

#[test]
fn alpha_two_carries_one_half() {
    let one = RatFunc::one();
    let hand = one
        .sub(&RatFunc::monomial(0, 4))
        .mul(&one.sub(&RatFunc::monomial(-4, 0)))
        .mul(&one.sub(&RatFunc::monomial(4, -4)))
        .mul(&half());
    assert_eq!(alpha(2).unwrap(), hand);
    assert!(matches!(alpha(0), Err(EhallError::BadIndex(0))));
}

#[test]
fn alpha_vanishes_when_sigma_is_one() {
    // σ = 1 at c = 1; evaluate at s = 3, c = 1 modulo a prime
    for i in 1..=3 {
        assert_eq!(alpha(i).unwrap().eval_mod((3, 1), 1_000_003).unwrap(), 0);
    }
}

#[test]
fn theta_low_orders() {
    let x0 = v(1, 0);
    let th = theta_series(x0, 2).unwrap();
    assert_eq!(th[0], EhaElement::one());
    assert_eq!(th[1], u(1, 0).scale(&alpha(1).unwrap()));
    let a1 = alpha(1).unwrap();
    let expected = u(2, 0)
        .scale(&alpha(2).unwrap())
        .add(&u(1, 0).mul(&u(1, 0)).scale(&a1.mul(&a1).mul(&half())));
    assert_eq!(th[2], expected);
}

#[test]
fn theta_routes_agree() {
    for x0 in [v(1, 0), v(0, 1), v(2, -3)] {
        assert_eq!(theta_series(x0, 5).unwrap(), theta_series_recursive(x0, 5).unwrap());
    }
    assert!(matches!(theta_series(v(2, 2), 1), Err(EhallError::NotPrimitive(_))));
}

#[test]
fn theta_display() {
    let th = theta(v(1, 1)).unwrap();
    assert!(th.to_string().ends_with("u(1,1)"), "{th}");
}

#[test]
fn triangle_examples() {
    assert!(triangle_check(v(0, 1), v(1, 0)).unwrap());
    assert!(triangle_check(v(1, 1), v(1, -1)).unwrap());
    assert!(!triangle_check(v(0, 1), v(3, 1)).unwrap());
    assert_eq!(interior_points(v(0, 1), v(3, 1)).unwrap(), 1);
    assert!(matches!(triangle_check(v(1, 1), v(2, 2)), Err(EhallError::Collinear(..))));
}

#[test]
fn pick_matches_enumeration() {
    for a in -4..=4 {
        for b in -4..=4 {
            for c in -4..=4 {
                for d in -4..=4 {
                    let (x, y) = (v(a, b), v(c, d));
                    if x.is_zero() || y.is_zero() || x.collinear(y) || x.det(y).abs() > 20 {
                        continue;
                    }
                    assert_eq!(interior_points(x, y).unwrap(), interior_points_by_enumeration(x, y).unwrap());
                }
            }
        }
    }
}

#[test]
fn brackets() {
    assert!(hall_bracket(v(2, 0), v(1, 0)).unwrap().is_zero());
    for m in 1..=3 {
        assert_eq!(hall_bracket(v(m, 0), v(0, 1)).unwrap(), u(m, 1).scale(&RatFunc::from_int(-1)));
    }
    assert_eq!(hall_bracket(v(0, 1), v(1, 0)).unwrap(), u(1, 1));
    // x + y non-primitive: θ_{(2,2)} / α_1
    let b = hall_bracket(v(1, 2), v(1, 0)).unwrap();
    let th = theta(v(2, 2)).unwrap().scale(&alpha(1).unwrap().inv().unwrap());
    assert_eq!(b, th);
    assert!(matches!(hall_bracket(v(3, 1), v(0, 1)), Err(EhallError::Hypotheses(..))));
}

#[test]
fn bracket_is_antisymmetric() {
    for (x, y) in [(v(1, 0), v(0, 1)), (v(1, 1), v(1, -1)), (v(2, 1), v(1, 1))] {
        let (a, b) = (hall_bracket(y, x), hall_bracket(x, y));
        if let (Ok(a), Ok(b)) = (a, b) {
            assert_eq!(a, b.neg());
        }
    }
}

#[test]
fn phi_of_generator() {
    let conv = selection().unwrap().convention;
    let q = RatFunc::param(Param::Q);
    let img = phi_n(&u(0, 1), 2).unwrap().scale(&q.sub(&RatFunc::one()));
    let direct = torus_skein::daha::q_expr((0, 1), 2).unwrap();
    assert!(exprs_equal(&img, &direct, conv, 2, &OracleConfig::default()).unwrap().is_equal());
}

#[test]
fn collinear_commutator_transports_to_zero() {
    let e = EhaElement::commutator(&u(1, 0), &u(2, 0));
    assert!(vanishes_at(&e, 2));
}

#[test]
fn triangle_relation_transports() {
    let lhs = EhaElement::commutator(&u(0, 1), &u(1, 0));
    let rhs = hall_bracket(v(0, 1), v(1, 0)).unwrap();
    assert!(vanishes_at(&lhs.sub(&rhs), 2));
}

#[test]
fn wrong_sign_does_not_transport() {
    let lhs = EhaElement::commutator(&u(0, 1), &u(1, 0));
    let rhs = hall_bracket(v(0, 1), v(1, 0)).unwrap();
    assert!(!vanishes_at(&lhs.add(&rhs), 2));
}
