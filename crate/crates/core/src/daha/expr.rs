use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::coeff::{BiPoly, CoeffRing, Laurent, RatFunc};
use crate::words::{Element, Letter};

use super::rep::{gen_prims, poly_add_term, reduce_prims, Convention, DahaGen, Poly, Prim, RepEval};

/// A DAHA element kept in factored form: sums and products of words in
/// `T_i`, `X_j`, `Y_j`.
///
/// Products are never expanded; the oracle applies factors one after the
/// other, which keeps sandwiches such as `e_n Z e_n` cheap.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Word(Vec<DahaGen>),
    Sum(Vec<(RatFunc, Expr)>),
    Prod(Vec<Expr>),
}

impl Expr {
    pub fn zero() -> Self {
        Expr::Sum(Vec::new())
    }

    pub fn one() -> Self {
        Expr::Word(Vec::new())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Expr::Sum(vec![(c, Expr::one())])
    }

    pub fn gen(g: DahaGen) -> Self {
        Expr::Word(vec![g])
    }

    pub fn scale(self, c: &RatFunc) -> Self {
        Expr::Sum(vec![(c.clone(), self)])
    }

    pub fn neg(self) -> Self {
        self.scale(&RatFunc::from_int(-1))
    }

    pub fn add(self, o: Expr) -> Self {
        Expr::Sum(vec![(RatFunc::one(), self), (RatFunc::one(), o)])
    }

    pub fn sub(self, o: Expr) -> Self {
        Expr::Sum(vec![(RatFunc::one(), self), (RatFunc::from_int(-1), o)])
    }

    pub fn mul(self, o: Expr) -> Self {
        Expr::Prod(vec![self, o])
    }

    pub fn prod<I: IntoIterator<Item = Expr>>(it: I) -> Self {
        Expr::Prod(it.into_iter().collect())
    }

    pub fn commutator(a: &Expr, b: &Expr) -> Self {
        a.clone().mul(b.clone()).sub(b.clone().mul(a.clone()))
    }

    /// Skein-to-DAHA translation `x_1 ↦ X_1`, `y_1 ↦ Y_1`, `σ_i ↦ T_i^-1`.
    pub fn from_element(e: &Element) -> Self {
        Expr::Sum(
            e.terms()
                .map(|(w, c)| {
                    let gens = w
                        .letters()
                        .iter()
                        .map(|g| match g.letter {
                            Letter::Sigma(i) => DahaGen::T(i, !g.inverse),
                            Letter::X => DahaGen::X(1, g.inverse),
                            Letter::Y => DahaGen::Y(1, g.inverse),
                        })
                        .collect();
                    (c.clone(), Expr::Word(gens))
                })
                .collect(),
        )
    }

    /// Smallest rank on which every generator appearing exists.
    pub fn max_index(&self) -> usize {
        match self {
            Expr::Word(w) => w.iter().map(|g| g.strands_needed()).max().unwrap_or(0),
            Expr::Sum(ts) => ts.iter().map(|(_, e)| e.max_index()).max().unwrap_or(0),
            Expr::Prod(fs) => fs.iter().map(Expr::max_index).max().unwrap_or(0),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Word(w) if w.is_empty() => write!(f, "1"),
            Expr::Word(w) => {
                let parts: Vec<String> = w.iter().map(|g| g.to_string()).collect();
                write!(f, "{}", parts.join(" "))
            }
            Expr::Sum(ts) if ts.is_empty() => write!(f, "0"),
            Expr::Sum(ts) => {
                let parts: Vec<String> = ts.iter().map(|(c, e)| format!("{} * ({e})", c.fmt_factor())).collect();
                write!(f, "{}", parts.join(" + "))
            }
            Expr::Prod(fs) => {
                let parts: Vec<String> = fs.iter().map(|e| format!("({e})")).collect();
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

/// Scaled numerator, denominator, and either a compiled child or a word.
type Part = (BiPoly, BiPoly, Option<Node<Laurent>>, Option<Vec<Prim>>);

/// Prefix tree of primitive words, read from the rightmost operator, so
/// words sharing a right factor share its evaluation.
#[derive(Clone, Debug)]
pub(crate) struct Trie<C> {
    nodes: Vec<TrieNode<C>>,
}

#[derive(Clone, Debug)]
pub(crate) struct TrieNode<C> {
    children: Vec<(Prim, usize)>,
    end: Option<C>,
}

impl<C: Clone> Trie<C> {
    fn new() -> Self {
        Self { nodes: vec![TrieNode { children: Vec::new(), end: None }] }
    }

    fn insert(&mut self, ops: &[Prim], c: C, add: impl Fn(&C, &C) -> C) {
        let mut at = 0;
        for &op in ops.iter().rev() {
            let next = self.nodes[at].children.iter().find(|(p, _)| *p == op).map(|&(_, k)| k);
            at = match next {
                Some(k) => k,
                None => {
                    self.nodes.push(TrieNode { children: Vec::new(), end: None });
                    let k = self.nodes.len() - 1;
                    self.nodes[at].children.push((op, k));
                    k
                }
            };
        }
        let end = &mut self.nodes[at].end;
        *end = Some(match end.take() {
            Some(old) => add(&old, &c),
            None => c,
        });
    }

    fn map<D>(&self, f: &impl Fn(&C) -> D) -> Trie<D> {
        Trie {
            nodes: self
                .nodes
                .iter()
                .map(|n| TrieNode { children: n.children.clone(), end: n.end.as_ref().map(f) })
                .collect(),
        }
    }
}

/// Integral form of an [`Expr`]: every scalar is an integer Laurent
/// polynomial, and the whole node stands for `value / den`.
#[derive(Clone, Debug)]
pub(crate) enum Node<C> {
    Sum { words: Trie<C>, others: Vec<(C, Node<C>)> },
    Prod(Vec<Node<C>>),
}

impl<C: Clone> Node<C> {
    fn map<D: Clone>(&self, f: &impl Fn(&C) -> D) -> Node<D> {
        match self {
            Node::Sum { words, others } => Node::Sum {
                words: words.map(f),
                others: others.iter().map(|(c, n)| (f(c), n.map(f))).collect(),
            },
            Node::Prod(fs) => Node::Prod(fs.iter().map(|n| n.map(f)).collect()),
        }
    }
}

/// An [`Expr`] compiled for one convention and rank.
#[derive(Clone, Debug)]
pub struct Compiled {
    node: Node<Laurent>,
    den: BiPoly,
}

fn poly_lcm(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let g = a.gcd(b);
    a.mul(&b.div_exact(&g).expect("gcd divides"))
}

fn laurent_of(p: &BiPoly) -> Laurent {
    Laurent::from_bipoly(p)
}

fn compile_node(conv: Convention, n: usize, e: &Expr) -> (Node<Laurent>, BiPoly) {
    match e {
        Expr::Word(_) => compile_node(conv, n, &Expr::Sum(vec![(RatFunc::one(), e.clone())])),
        Expr::Prod(fs) => {
            let mut den = BiPoly::one();
            let mut nodes = Vec::with_capacity(fs.len());
            for f in fs {
                let (nd, d) = compile_node(conv, n, f);
                den = den.mul(&d);
                nodes.push(nd);
            }
            (Node::Prod(nodes), den)
        }
        Expr::Sum(ts) => {
            // (numerator, denominator, child) with the child's own denominator folded in
            let mut parts: Vec<Part> = Vec::new();
            for (c, child) in ts {
                if c.is_zero() {
                    continue;
                }
                let (num, den) = c.integral_parts();
                match child {
                    Expr::Word(w) => {
                        let raw: Vec<Prim> = w.iter().flat_map(|&g| gen_prims(conv, n, g)).collect();
                        parts.push((num, den, None, Some(reduce_prims(&raw))));
                    }
                    _ => {
                        let (nd, d) = compile_node(conv, n, child);
                        parts.push((num, den.mul(&d), Some(nd), None));
                    }
                }
            }
            let mut den = BiPoly::one();
            for (_, d, _, _) in &parts {
                den = poly_lcm(&den, d);
            }
            let mut mults: Vec<BiPoly> =
                parts.iter().map(|(nm, d, _, _)| nm.mul(&den.div_exact(d).expect("lcm divides"))).collect();
            // clear rational coefficients
            let mut k = den.denominator_lcm();
            for m in &mults {
                k = k.lcm(&m.denominator_lcm());
            }
            let kq = BigRational::from_integer(k);
            if !kq.is_one() {
                den = den.scale(&kq);
                for m in &mut mults {
                    *m = m.scale(&kq);
                }
            }
            let mut words = Trie::new();
            let mut others = Vec::new();
            for ((_, _, node, ops), m) in parts.into_iter().zip(mults) {
                let c = laurent_of(&m);
                if let Some(ops) = ops {
                    words.insert(&ops, c, |a, b| a.add(b));
                } else if let Some(nd) = node {
                    others.push((c, nd));
                }
            }
            (Node::Sum { words, others }, den)
        }
    }
}

impl Compiled {
    pub fn new(e: &Expr, conv: Convention, n: usize) -> Self {
        let (node, den) = compile_node(conv, n, e);
        Self { node, den }
    }

    /// The overall denominator: the expression equals `integral / den`.
    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub(crate) fn for_ring<R: CoeffRing>(&self, ring: &R) -> Node<R::Elem> {
        self.node.map(&|c| ring.embed_laurent(c))
    }
}

/// Evaluates an integral node on `f`.
pub(crate) fn eval_node<R: CoeffRing>(ev: &RepEval<'_, R>, node: &Node<R::Elem>, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    let r = ev.ring();
    match node {
        Node::Prod(fs) => {
            let mut cur = f.clone();
            for nd in fs.iter().rev() {
                if cur.is_empty() {
                    break;
                }
                cur = eval_node(ev, nd, &cur);
            }
            cur
        }
        Node::Sum { words, others } => {
            let mut out = Poly::new();
            eval_trie(ev, words, 0, f, &mut out);
            for (c, nd) in others {
                for (e, a) in eval_node(ev, nd, f) {
                    poly_add_term(r, &mut out, e, r.mul(c, &a));
                }
            }
            out
        }
    }
}

fn eval_trie<R: CoeffRing>(
    ev: &RepEval<'_, R>,
    t: &Trie<R::Elem>,
    at: usize,
    cur: &Poly<R::Elem>,
    out: &mut Poly<R::Elem>,
) {
    let r = ev.ring();
    let node = &t.nodes[at];
    if let Some(c) = &node.end {
        for (e, a) in cur {
            poly_add_term(r, out, e.clone(), r.mul(c, a));
        }
    }
    for &(op, k) in &node.children {
        let next = ev.apply(op, cur);
        if !next.is_empty() {
            eval_trie(ev, t, k, &next, out);
        }
    }
}
