use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{CoeffRing, LaurentRing, ModRing, RatFunc, RatFuncRing};
use crate::words::Element;

use super::expr::{eval_node, Compiled, Expr};
use super::poly::LaurentPoly;
use super::rep::{poly_add_term, Convention, Exps, Poly, RepEval};
use super::DahaError;

/// Parameters of a box check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub box_radius: u32,
    pub trials: u32,
    pub prime: u64,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { box_radius: 2, trials: 3, prime: 2_147_483_647, seed: 0 }
    }
}

/// Which tier produced a refutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Modular,
    Exact,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Exps,
    /// Exact image of the difference on the witness monomial.
    pub image: LaurentPoly,
    pub tier: Tier,
}

/// Outcome of a box check. `EqualOnBox` certifies equality of the operators
/// restricted to `{-R..R}^n`, nothing more.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    EqualOnBox,
    Distinct(Witness),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::EqualOnBox)
    }
}

/// `{-R..R}^n` in lexicographic order.
pub fn box_monomials(n: usize, r: u32) -> Vec<Exps> {
    let r = r as i32;
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Exps| {
                (-r..=r).map(move |k| {
                    let mut m = e.clone();
                    m.push(k);
                    m
                })
            })
            .collect();
    }
    out
}

fn first_nonzero<R: CoeffRing>(ring: &R, conv: Convention, c: &Compiled, mons: &[Exps]) -> Option<(usize, Poly<R::Elem>)> {
    let node = c.for_ring(ring);
    let ev = RepEval::new(ring, conv);
    let hits: Vec<Option<Poly<R::Elem>>> = mons
        .par_iter()
        .map(|m| {
            let mut f = Poly::new();
            poly_add_term(ring, &mut f, m.clone(), ring.one());
            let img = eval_node(&ev, &node, &f);
            (!img.is_empty()).then_some(img)
        })
        .collect();
    hits.into_iter().enumerate().find_map(|(k, h)| h.map(|p| (k, p)))
}

fn sample_ring(rng: &mut ChaCha8Rng, p: u64) -> ModRing {
    loop {
        let s = rng.gen_range(2..p);
        let c = rng.gen_range(2..p);
        if let Ok(r) = ModRing::new(p, (s, c)) {
            return r;
        }
    }
}

fn exact_image(conv: Convention, c: &Compiled, m: &Exps) -> LaurentPoly {
    let ring = LaurentRing;
    let ev = RepEval::new(&ring, conv);
    let mut f = Poly::new();
    poly_add_term(&ring, &mut f, m.clone(), ring.one());
    let img = eval_node(&ev, &c.for_ring(&ring), &f);
    let inv_den = RatFunc::from_poly(c.den().clone()).inv().expect("nonzero denominator");
    LaurentPoly::from_terms(m.len(), img.into_iter().map(|(e, a)| (e, a.to_ratfunc().mul(&inv_den))))
}

/// Decides whether `e` acts as zero on the monomial box: a few modular
/// specializations first, then the exact pass.
pub fn check_zero(e: &Expr, conv: Convention, n: usize, cfg: &OracleConfig) -> Result<Verdict, DahaError> {
    if e.max_index() > n {
        return Err(DahaError::RankMismatch { expected: n, found: e.max_index() });
    }
    let compiled = Compiled::new(e, conv, n);
    let mons = box_monomials(n, cfg.box_radius);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.trials {
        let ring = sample_ring(&mut rng, cfg.prime);
        if let Some((k, _)) = first_nonzero(&ring, conv, &compiled, &mons) {
            let image = exact_image(conv, &compiled, &mons[k]);
            debug_assert!(!image.is_zero());
            return Ok(Verdict::Distinct(Witness { monomial: mons[k].clone(), image, tier: Tier::Modular }));
        }
    }
    match first_nonzero(&LaurentRing, conv, &compiled, &mons) {
        None => Ok(Verdict::EqualOnBox),
        Some((k, _)) => {
            let image = exact_image(conv, &compiled, &mons[k]);
            Ok(Verdict::Distinct(Witness { monomial: mons[k].clone(), image, tier: Tier::Exact }))
        }
    }
}

/// Modular-only refutation; `true` means no difference was seen.
pub(crate) fn modular_agrees(e: &Expr, conv: Convention, n: usize, cfg: &OracleConfig) -> bool {
    let compiled = Compiled::new(e, conv, n);
    let mons = box_monomials(n, cfg.box_radius);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials.max(1)).all(|_| {
        let ring = sample_ring(&mut rng, cfg.prime);
        first_nonzero(&ring, conv, &compiled, &mons).is_none()
    })
}

/// Compares two skein elements through the representation.
pub fn oracle_equal(a: &Element, b: &Element, conv: Convention, cfg: &OracleConfig) -> Result<Verdict, DahaError> {
    if a.strands() != b.strands() {
        return Err(DahaError::RankMismatch { expected: a.strands(), found: b.strands() });
    }
    let diff = Expr::from_element(a).sub(Expr::from_element(b));
    check_zero(&diff, conv, a.strands(), cfg)
}

/// Same as [`check_zero`] for `lhs - rhs`.
pub fn exprs_equal(lhs: &Expr, rhs: &Expr, conv: Convention, n: usize, cfg: &OracleConfig) -> Result<Verdict, DahaError> {
    check_zero(&lhs.clone().sub(rhs.clone()), conv, n, cfg)
}

/// Image of `f` under `e`, with exact ℚ(s, c) coefficients.
pub fn apply_expr(e: &Expr, conv: Convention, f: &LaurentPoly) -> Result<LaurentPoly, DahaError> {
    let n = f.rank();
    if e.max_index() > n {
        return Err(DahaError::RankMismatch { expected: n, found: e.max_index() });
    }
    let compiled = Compiled::new(e, conv, n);
    let ring = RatFuncRing;
    let ev = RepEval::new(&ring, conv);
    let mut g = Poly::new();
    for (m, c) in f.terms() {
        poly_add_term(&ring, &mut g, m.clone(), c.clone());
    }
    let img = eval_node(&ev, &compiled.for_ring(&ring), &g);
    let inv_den = RatFunc::from_poly(compiled.den().clone()).inv().expect("nonzero denominator");
    Ok(LaurentPoly::from_terms(n, img.into_iter().map(|(e, a)| (e, a.mul(&inv_den)))))
}
