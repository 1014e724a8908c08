use proptest::prelude::*;

use torus_skein::words::*;
use torus_skein::coeff::RatFunc;

fn w(text: &str, n: usize) -> Word {
    Word::parse(text, n).unwrap()
}

fn e(text: &str, n: usize) -> Element {
    Element::parse(text, n).unwrap()
}

#[test]
fn free_reduce_examples() {
    assert!(free_reduce(&[Gen::X, Gen::X_INV]).is_empty());
    assert_eq!(
        free_reduce(&[Gen::sigma(1), Gen::X, Gen::X_INV, Gen::sigma(1)]),
        vec![Gen::sigma(1), Gen::sigma(1)]
    );
    let keep = [Gen::sigma(1), Gen::Y, Gen::sigma(2)];
    assert_eq!(free_reduce(&keep), keep.to_vec());
}

#[test]
fn gen_xy_examples() {
    assert_eq!(gen_xy(2, Axis::X, 3).unwrap(), w("s1^-1 x1 s1^-1", 3));
    assert_eq!(gen_xy(2, Axis::Y, 3).unwrap(), w("s1 y1 s1", 3));
    assert_eq!(gen_xy(1, Axis::X, 3).unwrap(), w("x1", 3));
    assert_eq!(gen_xy(3, Axis::Y, 3).unwrap(), w("s2 s1 y1 s1 s2", 3));
    assert!(gen_xy(4, Axis::X, 3).is_err());
    assert!(gen_xy(0, Axis::Y, 3).is_err());
}

#[test]
fn named_word_examples() {
    assert_eq!(p_word(2).unwrap(), w("s1^-1 x1 y1 x1^-1 y1^-1 s1^-1", 2));
    assert_eq!(beta(3).unwrap(), w("s1 s2 s2 s1", 3));
    assert!(delta(1, 3).unwrap().is_empty());
    assert_eq!(delta(3, 3).unwrap(), w("s2 s1 s1 s2", 3));
    assert!(delta(4, 3).is_err());
    assert_eq!(named_word(Named::CommutatorX1Y1, 2).unwrap(), w("x1 y1 x1^-1 y1^-1", 2));
}

#[test]
fn sigma_index_checked_against_strands() {
    assert!(Word::parse("s2", 2).is_err());
    assert!(Word::parse("s0", 3).is_err());
    assert!(Word::parse("s2", 3).is_ok());
}

#[test]
fn elem_mul_examples() {
    let n = 2;
    let a = e("x1 + y1", n);
    assert_eq!(a.mul(&Element::one(n)).unwrap(), a);
    assert_eq!(e("x1", n).mul(&e("x1^-1", n)).unwrap(), Element::one(n));
    let (p, q) = (e("x1", n), e("y1", n));
    let lhs = p.add(&q).unwrap().mul(&p.sub(&q).unwrap()).unwrap();
    assert_eq!(lhs, e("x1 x1 - x1 y1 + y1 x1 - y1 y1", n));
}

#[test]
fn strand_mismatch_is_an_error() {
    let a = e("x1", 2);
    let b = e("x1", 3);
    assert_eq!(a.mul(&b), Err(WordError::StrandMismatch(2, 3)));
    assert!(a.add(&b).is_err());
}

#[test]
fn substitute_examples() {
    let n = 2;
    let mut tau1 = Substitution::new();
    tau1.insert(Letter::X, w("x1", n));
    tau1.insert(Letter::Y, w("y1 x1", n));
    tau1.insert(Letter::Sigma(1), w("s1", n));
    assert_eq!(e("y1", n).substitute(&tau1).unwrap(), e("y1 x1", n));

    let mut tau2_inv = tau1.clone();
    tau2_inv.insert(Letter::X, w("x1 y1^-1", n));
    tau2_inv.insert(Letter::Y, w("y1", n));
    assert_eq!(e("x1", n).substitute(&tau2_inv).unwrap(), e("x1 y1^-1", n));

    let id: Substitution =
        [(Letter::X, w("x1", n)), (Letter::Y, w("y1", n)), (Letter::Sigma(1), w("s1", n))].into();
    let any = e("(s - 1)/(c) * s1 y1^-1 x1 + 3 * y1", n);
    assert_eq!(any.substitute(&id).unwrap(), any);
}

#[test]
fn substitute_reports_missing_image() {
    let n = 2;
    let partial: Substitution = [(Letter::X, w("x1", n))].into();
    assert_eq!(e("y1", n).substitute(&partial), Err(WordError::MissingImage(Letter::Y)));
}

#[test]
fn display_matches_documented_format() {
    let n = 2;
    let y2 = gen_xy(2, Axis::Y, n).unwrap();
    let sum = Element::from_word(w("y1", n).pow(2)).add(&Element::from_word(y2.pow(2))).unwrap();
    assert_eq!(sum.to_string(), "y1 y1 + s1 y1 s1 s1 y1 s1");
    let x = Element::term(RatFunc::monomial(-1, 0), w("x1", n));
    assert_eq!(x.to_string(), "(1)/(s) * x1");
    let z = e("(s^2 - 1) * x1 - 2 * y1 + c^2", n);
    assert_eq!(z.to_string(), "c^2 + (s^2 - 1) * x1 - 2 * y1");
    assert_eq!(Element::zero(n).to_string(), "0");
    assert_eq!(e("- x1", n).to_string(), "- x1");
}

// ---- property tests -------------------------------------------------------

fn arb_gen(n: usize) -> impl Strategy<Value = Gen> {
    let sig = (1..n as u16).prop_map(Letter::Sigma);
    prop_oneof![Just(Letter::X), Just(Letter::Y), sig]
        .prop_flat_map(|l| any::<bool>().prop_map(move |inv| Gen { letter: l, inverse: inv }))
}

fn arb_raw(n: usize) -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(arb_gen(n), 0..14)
}

fn arb_element(n: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((arb_raw(n), -3i64..4), 0..4).prop_map(move |terms| {
        let mut acc = Element::zero(n);
        for (raw, k) in terms {
            let t = Element::term(RatFunc::from_int(k), Word::new(&raw, n).unwrap());
            acc = acc.add(&t).unwrap();
        }
        acc
    })
}

/// Cancels inverse pairs in a pseudo-random order, independent of the stack
/// algorithm in `free_reduce`.
fn reduce_in_order(mut v: Vec<Gen>, picks: &[usize]) -> Vec<Gen> {
    let mut k = 0;
    loop {
        let spots: Vec<usize> = (0..v.len().saturating_sub(1)).filter(|&i| v[i].inv() == v[i + 1]).collect();
        if spots.is_empty() {
            return v;
        }
        let i = spots[picks.get(k).copied().unwrap_or(0) % spots.len()];
        k += 1;
        v.drain(i..i + 2);
    }
}

proptest! {
    #[test]
    fn free_reduction_is_confluent(raw in arb_raw(3), picks in prop::collection::vec(0usize..100, 0..20)) {
        prop_assert_eq!(reduce_in_order(raw.clone(), &picks), free_reduce(&raw));
    }

    #[test]
    fn word_inverse_cancels(raw in arb_raw(3)) {
        let w = Word::new(&raw, 3).unwrap();
        prop_assert!(w.inverse().concat(&w).unwrap().is_empty());
        prop_assert!(w.concat(&w.inverse()).unwrap().is_empty());
    }

    #[test]
    fn multiplication_is_associative_and_unital(a in arb_element(3), b in arb_element(3), c in arb_element(3)) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.mul(&Element::one(3)).unwrap(), a.clone());
        prop_assert_eq!(Element::one(3).mul(&a).unwrap(), a);
    }

    #[test]
    fn substitution_is_multiplicative(a in arb_element(3), b in arb_element(3),
                                      ix in arb_raw(3), iy in arb_raw(3)) {
        let images: Substitution = [
            (Letter::X, Word::new(&ix, 3).unwrap()),
            (Letter::Y, Word::new(&iy, 3).unwrap()),
            (Letter::Sigma(1), Word::parse("s1", 3).unwrap()),
            (Letter::Sigma(2), Word::parse("s2 x1", 3).unwrap()),
        ].into();
        let lhs = a.mul(&b).unwrap().substitute(&images).unwrap();
        let rhs = a.substitute(&images).unwrap().mul(&b.substitute(&images).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        // inverse letters go to inverse images
        for g in [Gen::X, Gen::Y, Gen::sigma(2)] {
            let img = Element::gen(g, 3).unwrap().substitute(&images).unwrap();
            let img_inv = Element::gen(g.inv(), 3).unwrap().substitute(&images).unwrap();
            prop_assert_eq!(img.mul(&img_inv).unwrap(), Element::one(3));
        }
    }

    #[test]
    fn element_text_round_trips(a in arb_element(3)) {
        let text = a.to_string();
        prop_assert_eq!(Element::parse(&text, 3).unwrap(), a);
    }
}
