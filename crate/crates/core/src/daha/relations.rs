use crate::coeff::{Param, RatFunc};
use crate::words::{beta, gen_xy, p_word, Axis, Element, Word};

use super::expr::Expr;
use super::rep::DahaGen;

/// An identity `lhs = rhs` between DAHA expressions.
#[derive(Clone, Debug)]
pub struct Relation {
    pub id: String,
    /// Which of the nine defining families it belongs to (1-based).
    pub family: u8,
    pub statement: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
}

/// An identity between skein elements.
#[derive(Clone, Debug)]
pub struct SkeinRelation {
    pub id: String,
    pub statement: &'static str,
    pub lhs: Element,
    pub rhs: Element,
}

fn t(i: usize) -> Expr {
    Expr::gen(DahaGen::T(i as u16, false))
}
fn t_inv(i: usize) -> Expr {
    Expr::gen(DahaGen::T(i as u16, true))
}
fn x(j: usize) -> Expr {
    Expr::gen(DahaGen::X(j as u16, false))
}
fn y(j: usize) -> Expr {
    Expr::gen(DahaGen::Y(j as u16, false))
}

fn word(gs: &[DahaGen]) -> Expr {
    Expr::Word(gs.to_vec())
}

/// The nine defining relation families of the DAHA at rank `n`, with
/// `t^{1/2} = s` and `q = c^-2`.
pub fn daha_relations(n: usize) -> Vec<Relation> {
    let s = RatFunc::s();
    let s_inv = RatFunc::monomial(-1, 0);
    let q = RatFunc::param(Param::Q);
    let mut out = Vec::new();
    let mut push = |id: String, family: u8, statement: &'static str, lhs: Expr, rhs: Expr| {
        out.push(Relation { id, family, statement, lhs, rhs })
    };
    for i in 1..n {
        let a = t(i).add(Expr::scalar(s.clone()));
        let b = t(i).sub(Expr::scalar(s_inv.clone()));
        push(format!("quadratic[{i}]"), 1, "(T_i + t^1/2)(T_i - t^-1/2) = 0", a.mul(b), Expr::zero());
    }
    for i in 1..n.saturating_sub(1) {
        push(
            format!("braid[{i}]"),
            2,
            "T_i T_i+1 T_i = T_i+1 T_i T_i+1",
            Expr::prod([t(i), t(i + 1), t(i)]),
            Expr::prod([t(i + 1), t(i), t(i + 1)]),
        );
    }
    for i in 1..n {
        for j in i + 2..n {
            push(format!("far[{i},{j}]"), 3, "[T_i, T_j] = 0, |i-j| > 1", t(i).mul(t(j)), t(j).mul(t(i)));
        }
    }
    for i in 1..n {
        for j in (1..=n).filter(|&j| j != i && j != i + 1) {
            push(format!("tx[{i},{j}]"), 4, "[T_i, X_j] = 0, j != i, i+1", t(i).mul(x(j)), x(j).mul(t(i)));
            push(format!("ty[{i},{j}]"), 4, "[T_i, Y_j] = 0, j != i, i+1", t(i).mul(y(j)), y(j).mul(t(i)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            push(format!("xx[{i},{j}]"), 5, "[X_i, X_j] = 0", x(i).mul(x(j)), x(j).mul(x(i)));
            push(format!("yy[{i},{j}]"), 5, "[Y_i, Y_j] = 0", y(i).mul(y(j)), y(j).mul(y(i)));
        }
    }
    for i in 1..n {
        push(format!("xshift[{i}]"), 6, "X_i+1 = T_i X_i T_i", x(i + 1), Expr::prod([t(i), x(i), t(i)]));
        push(
            format!("yshift[{i}]"),
            7,
            "Y_i+1 = T_i^-1 Y_i T_i^-1",
            y(i + 1),
            Expr::prod([t_inv(i), y(i), t_inv(i)]),
        );
    }
    if n >= 2 {
        let x1i = DahaGen::X(1, true);
        let y2 = DahaGen::Y(2, false);
        let t1i = DahaGen::T(1, true);
        push(
            "x1inv-y2".into(),
            8,
            "X_1^-1 Y_2 = Y_2 X_1^-1 T_1^-2",
            word(&[x1i, y2]),
            word(&[y2, x1i, t1i, t1i]),
        );
    }
    let xs: Vec<DahaGen> = (1..=n).map(|j| DahaGen::X(j as u16, false)).collect();
    let y1 = DahaGen::Y(1, false);
    let lhs = word(&[&[y1][..], &xs].concat());
    let rhs = word(&[&xs[..], &[y1]].concat()).scale(&q);
    push("cyclic".into(), 9, "Y_1 X_1 ... X_n = q X_1 ... X_n Y_1", lhs, rhs);
    out
}

/// `q X_1 Y_1 X_1^-1 = (X_2 ⋯ X_n)^-1 Y_1 X_2 ⋯ X_n`, the identity that
/// carries the commutator relation across the isomorphism.
pub fn conjugation_identity(n: usize) -> Relation {
    let q = RatFunc::param(Param::Q);
    let rest: Vec<DahaGen> = (2..=n).map(|j| DahaGen::X(j as u16, false)).collect();
    let rest_inv: Vec<DahaGen> = rest.iter().rev().map(|g| g.inv()).collect();
    let y1 = DahaGen::Y(1, false);
    Relation {
        id: "conjugation".into(),
        family: 9,
        statement: "q X_1 Y_1 X_1^-1 = (X_2 ... X_n)^-1 Y_1 X_2 ... X_n",
        lhs: word(&[DahaGen::X(1, false), y1, DahaGen::X(1, true)]).scale(&q),
        rhs: word(&[&rest_inv[..], &[y1], &rest[..]].concat()),
    }
}

fn el(text: &str, n: usize) -> Element {
    Element::parse(text, n).expect("well-formed relation text")
}

fn from_word(w: Word) -> Element {
    Element::from_word(w)
}

/// The defining relations of the braid skein algebra, plus the base-circle
/// relation `P = c^2` and the Hecke relation `σ_1 - σ_1^-1 = s - s^-1`.
pub fn skein_relations(n: usize) -> Vec<SkeinRelation> {
    let mut out = Vec::new();
    let mut push = |id: String, statement: &'static str, lhs: Element, rhs: Element| {
        out.push(SkeinRelation { id, statement, lhs, rhs })
    };
    for i in 1..n {
        for j in i + 2..n {
            push(
                format!("far[{i},{j}]"),
                "s_i s_j = s_j s_i, |i-j| > 1",
                el(&format!("s{i} s{j}"), n),
                el(&format!("s{j} s{i}"), n),
            );
        }
    }
    for i in 1..n.saturating_sub(1) {
        let j = i + 1;
        push(
            format!("braid[{i}]"),
            "s_i s_i+1 s_i = s_i+1 s_i s_i+1",
            el(&format!("s{i} s{j} s{i}"), n),
            el(&format!("s{j} s{i} s{j}"), n),
        );
    }
    for i in 2..n {
        push(format!("sx[{i}]"), "s_i x_1 = x_1 s_i, i > 1", el(&format!("s{i} x1"), n), el(&format!("x1 s{i}"), n));
        push(format!("sy[{i}]"), "s_i y_1 = y_1 s_i, i > 1", el(&format!("s{i} y1"), n), el(&format!("y1 s{i}"), n));
    }
    if n >= 2 {
        push(
            "xsxs".into(),
            "x_1 s_1^-1 x_1 s_1^-1 = s_1^-1 x_1 s_1^-1 x_1",
            el("x1 s1^-1 x1 s1^-1", n),
            el("s1^-1 x1 s1^-1 x1", n),
        );
        push("ysys".into(), "y_1 s_1 y_1 s_1 = s_1 y_1 s_1 y_1", el("y1 s1 y1 s1", n), el("s1 y1 s1 y1", n));
        push(
            "xsys".into(),
            "x_1^-1 s_1 y_1 s_1^-1 = s_1 y_1 s_1 x_1^-1",
            el("x1^-1 s1 y1 s1^-1", n),
            el("s1 y1 s1 x1^-1", n),
        );
        let s = RatFunc::s();
        let s_inv = RatFunc::monomial(-1, 0);
        let a = el("s1", n).sub(&Element::scalar(s.clone(), n)).unwrap();
        let b = el("s1", n).add(&Element::scalar(s_inv.clone(), n)).unwrap();
        push("quadratic".into(), "(s_1 - s)(s_1 + s^-1) = 0", a.mul(&b).unwrap(), Element::zero(n));
        push(
            "hecke".into(),
            "s_1 - s_1^-1 = s - s^-1",
            el("s1 - s1^-1", n),
            Element::scalar(s.sub(&s_inv), n),
        );
    }
    let c2 = RatFunc::param(Param::Sigma);
    push(
        "commutator".into(),
        "x_1 y_1 x_1^-1 y_1^-1 = c^2 s_1 ... s_n-1 s_n-1 ... s_1",
        el("x1 y1 x1^-1 y1^-1", n),
        Element::term(c2.clone(), beta(n).unwrap()),
    );
    push("base-circle".into(), "P = c^2", from_word(p_word(n).unwrap()), Element::scalar(c2, n));
    out
}

/// Identities among the derived generators `x_i`, `y_i`.
pub fn derived_relations(n: usize) -> Vec<SkeinRelation> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let x = |i| from_word(gen_xy(i, Axis::X, n).unwrap());
    let y = |i| from_word(gen_xy(i, Axis::Y, n).unwrap());
    out.push(SkeinRelation {
        id: "x1x2".into(),
        statement: "x_1 x_2 = x_2 x_1",
        lhs: x(1).mul(&x(2)).unwrap(),
        rhs: x(2).mul(&x(1)).unwrap(),
    });
    out.push(SkeinRelation {
        id: "y1y2".into(),
        statement: "y_1 y_2 = y_2 y_1",
        lhs: y(1).mul(&y(2)).unwrap(),
        rhs: y(2).mul(&y(1)).unwrap(),
    });
    out.push(SkeinRelation {
        id: "y2x1".into(),
        statement: "y_2 x_1^-1 = x_1^-1 y_2 s_1^-2",
        lhs: y(2).mul(&el("x1^-1", n)).unwrap(),
        rhs: el("x1^-1", n).mul(&y(2)).unwrap().mul(&el("s1^-1 s1^-1", n)).unwrap(),
    });
    let up: String = (1..n).map(|i| format!("s{i} ")).collect();
    let down: String = (1..n).rev().map(|i| format!(" s{i}")).collect();
    let p = p_word(n).unwrap();
    out.push(SkeinRelation {
        id: "commutator-via-p".into(),
        statement: "x_1 y_1 x_1^-1 y_1^-1 = s_1 ... s_n-1 P s_n-1 ... s_1",
        lhs: el("x1 y1 x1^-1 y1^-1", n),
        rhs: el(up.trim(), n).mul(&from_word(p)).unwrap().mul(&el(down.trim(), n)).unwrap(),
    });
    out
}
