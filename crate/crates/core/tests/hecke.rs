use proptest::prelude::*;
use torus_skein::coeff::RatFunc;
use torus_skein::hecke::*;
use torus_skein::words::{Gen, Word};

fn s() -> RatFunc {
    RatFunc::s()
}

fn perm(v: &[u8]) -> Perm {
    Perm::new(v.to_vec()).unwrap()
}

/// Permutation of a positive braid word, computed letter by letter.
fn word_perm(letters: &[usize], n: usize) -> Perm {
    letters.iter().fold(Perm::identity(n), |p, &i| p.compose(&Perm::simple(i, n).unwrap()))
}

/// `Π_{k=1}^{n} (1 + s² + ⋯ + s^{2(k-1)})`
fn poincare(n: usize) -> RatFunc {
    let mut r = RatFunc::one();
    for k in 1..=n {
        let mut f = RatFunc::zero();
        for j in 0..k {
            f = f.add(&RatFunc::monomial(2 * j as i32, 0));
        }
        r = r.mul(&f);
    }
    r
}

#[test]
fn perm_basics() {
    assert!(Perm::new(vec![1, 1, 2]).is_err());
    assert!(Perm::new(vec![0, 1]).is_err());
    assert_eq!(Perm::all(3).len(), 6);
    assert_eq!(Perm::all(4).len(), 24);
    assert_eq!(Perm::longest(4).length(), 6);
    for p in Perm::all(4) {
        assert_eq!(p.compose(&p.inverse()), Perm::identity(4));
        assert_eq!(word_perm(&p.reduced_word(), 4), p);
        assert_eq!(p.reduced_word().len(), p.length());
    }
}

#[test]
fn perm_braid_examples() {
    assert!(perm_braid(&Perm::identity(3)).is_empty());
    assert_eq!(perm_braid(&perm(&[2, 1])), Word::parse("s1", 2).unwrap());
    assert_eq!(perm_braid(&Perm::longest(3)), Word::parse("s1 s2 s1", 3).unwrap());
}

#[test]
fn longest_word_is_reduced_by_enumeration() {
    // no positive word of length < 3 realizes w0, and σ1σ2σ1 is among those of length 3
    let w0 = Perm::longest(3);
    let mut shortest = None;
    'outer: for len in 0..=3usize {
        for code in 0..(1usize << len) {
            let letters: Vec<usize> = (0..len).map(|b| 1 + ((code >> b) & 1)).collect();
            if word_perm(&letters, 3) == w0 {
                shortest = Some(len);
                break 'outer;
            }
        }
    }
    assert_eq!(shortest, Some(3));
    assert_eq!(word_perm(&[1, 2, 1], 3), w0);
}

#[test]
fn hecke_mul_examples() {
    let s1 = HeckeElement::sigma(1, 2).unwrap();
    let k = s().sub(&RatFunc::monomial(-1, 0));
    let expect = s1.scale(&k).add(&HeckeElement::one(2)).unwrap();
    assert_eq!(s1.mul(&s1).unwrap(), expect);

    let a = HeckeElement::sigma(1, 3).unwrap();
    let b = HeckeElement::sigma(2, 3).unwrap();
    let ab = a.mul(&b).unwrap();
    let p = word_perm(&[1, 2], 3);
    assert_eq!(p.length(), 2);
    assert_eq!(ab, HeckeElement::basis(p));

    let one = HeckeElement::one(3);
    assert_eq!(ab.mul(&one).unwrap(), ab);
    assert!(a.mul(&HeckeElement::one(2)).is_err());
}

#[test]
fn quadratic_relation_holds() {
    for n in 2..=4 {
        for i in 1..n {
            let g = HeckeElement::sigma(i, n).unwrap();
            let left = g.sub(&HeckeElement::one(n).scale(&s())).unwrap();
            let right = g.add(&HeckeElement::one(n).scale(&RatFunc::monomial(-1, 0))).unwrap();
            assert!(left.mul(&right).unwrap().is_zero());
        }
    }
}

#[test]
fn braid_relation_holds() {
    let n = 4;
    let g = |i| HeckeElement::sigma(i, n).unwrap();
    for i in 1..n - 1 {
        let l = g(i).mul(&g(i + 1)).unwrap().mul(&g(i)).unwrap();
        let r = g(i + 1).mul(&g(i)).unwrap().mul(&g(i + 1)).unwrap();
        assert_eq!(l, r);
    }
    assert_eq!(g(1).mul(&g(3)).unwrap(), g(3).mul(&g(1)).unwrap());
}

#[test]
fn symmetrizer_rank_two() {
    let sym = symmetrizer(2);
    let a2 = HeckeElement::one(2).add(&HeckeElement::sigma(1, 2).unwrap().scale(&s())).unwrap();
    assert_eq!(sym.a, a2);
    assert_eq!(sym.alpha, "1 + s^2".parse().unwrap());
}

#[test]
fn alpha_matches_poincare_polynomial() {
    for n in 1..=4 {
        assert_eq!(symmetrizer(n).alpha, poincare(n), "n = {n}");
    }
}

#[test]
fn symmetrizer_identities() {
    for n in 1..=4 {
        let sym = symmetrizer(n);
        assert_eq!(sym.a.mul(&sym.a).unwrap(), sym.a.scale(&sym.alpha));
        assert_eq!(sym.e.mul(&sym.e).unwrap(), sym.e);
        for i in 1..n {
            let g = HeckeElement::sigma(i, n).unwrap();
            assert_eq!(g.mul(&sym.e).unwrap(), sym.e.scale(&s()));
            assert_eq!(sym.e.mul(&g).unwrap(), sym.e.scale(&s()));
        }
        for p in Perm::all(n) {
            let w = HeckeElement::basis(p.clone());
            let expect = sym.a.scale(&RatFunc::monomial(p.length() as i32, 0));
            assert_eq!(w.mul(&sym.a).unwrap(), expect);
            assert_eq!(sym.a.mul(&w).unwrap(), expect);
        }
    }
}

#[test]
fn full_twist_examples() {
    assert!(full_twist(1).is_empty());
    assert_eq!(full_twist(2), Word::parse("s1 s1", 2).unwrap());
    assert_eq!(full_twist(3), Word::parse("s2 s2 s1 s2 s2 s1", 3).unwrap());
    assert_eq!(full_twist(4).len(), 12);
}

#[test]
fn full_twist_is_central_in_hecke() {
    for n in 2..=4 {
        let mut d = HeckeElement::one(n);
        for g in full_twist(n).letters() {
            let Gen { letter: torus_skein::words::Letter::Sigma(i), .. } = *g else { unreachable!() };
            d = d.right_mul_generator(i as usize);
        }
        for i in 1..n {
            let g = HeckeElement::sigma(i, n).unwrap();
            assert_eq!(g.mul(&d).unwrap(), d.mul(&g).unwrap());
        }
    }
}

#[test]
fn display_format() {
    let a2 = &symmetrizer(2).a;
    assert_eq!(a2.to_string(), "w[1 2] + s * w[2 1]");
    assert_eq!(a2.to_element().to_string(), "1 + s * s1");
}

fn arb_hecke(n: usize) -> impl Strategy<Value = HeckeElement> {
    let perms = Perm::all(n);
    prop::collection::vec((0..perms.len(), -2i64..3, -1i32..2), 0..5).prop_map(move |ts| {
        let mut acc = HeckeElement::zero(n);
        for (k, c, e) in ts {
            let t = HeckeElement::term(RatFunc::monomial(e, 0).scale_int(c), perms[k].clone());
            acc = acc.add(&t).unwrap();
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn left_and_right_straightening_agree(a in arb_hecke(4), b in arb_hecke(4)) {
        prop_assert_eq!(a.mul(&b).unwrap(), a.mul_right(&b).unwrap());
    }

    #[test]
    fn hecke_mul_is_associative(a in arb_hecke(3), b in arb_hecke(3), c in arb_hecke(3)) {
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }
}
