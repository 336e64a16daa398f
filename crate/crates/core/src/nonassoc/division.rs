//! Division of bracketed polynomials by `x − a`.

use num_traits::{One, Zero};

use super::{BracketChain, BracketPolynomial, BracketTree};
use crate::algebra::{Algebra, Element, Rational};
use crate::{Error, Result};

/// Peels the rightmost `Var` of every top-degree term into the divisor slot
/// until only constants remain.
pub fn bdivide_monic(r: &BracketPolynomial, a: &Element) -> Result<BracketChain> {
    let algebra = r.algebra().clone();
    algebra.check_same(a.algebra())?;
    let slot = BracketTree::Slot(0);
    let value = BracketTree::Const(a.clone());
    let mut work: Vec<(Rational, BracketTree)> = r.terms().to_vec();
    let mut parts = Vec::new();
    let mut peel_degrees = Vec::new();
    while let Some(d) = work
        .iter()
        .map(|(_, t)| t.degree())
        .max()
        .filter(|&d| d > 0)
    {
        let mut next = Vec::with_capacity(work.len());
        for (c, t) in work {
            if t.degree() != d {
                next.push((c, t));
                continue;
            }
            // t = q ∘ x = q ∘ (x − a) + q ∘ a
            let q = t.replace_rightmost_var(&slot).expect("degree is positive");
            next.push((c.clone(), q.substitute_slot(0, &value)));
            parts.push((c, q));
        }
        peel_degrees.push(d);
        work = next;
    }
    let zero = algebra.zero();
    let mut remainder = algebra.zero();
    for (c, t) in &work {
        remainder = &remainder + &t.eval(&zero, &[])?.scale(c);
    }
    let mut chain = BracketChain::new(remainder, parts, vec![a.clone()])?;
    chain.peel_degrees = peel_degrees;
    Ok(chain)
}

/// `s0 + Σ c·t` with each slot `t` replaced by `x − roots[t]`.
pub fn bchain_apply(c: &BracketChain, roots: &[Element]) -> Result<BracketPolynomial> {
    let slots = c
        .parts
        .iter()
        .flat_map(|(_, t)| t.slots())
        .max()
        .map_or(0, |m| m + 1);
    if roots.len() < slots {
        return Err(Error::MissingSlot(roots.len()));
    }
    let mut terms = vec![(Rational::one(), BracketTree::Const(c.remainder.clone()))];
    for (coef, tree) in &c.parts {
        let mut expanded = vec![(coef.clone(), tree.clone())];
        for (idx, root) in roots.iter().enumerate() {
            let with_var = BracketTree::Var;
            let with_root = BracketTree::Const(-root);
            expanded = expanded
                .into_iter()
                .flat_map(|(k, t)| {
                    if t.slots().contains(&idx) {
                        vec![
                            (k.clone(), t.substitute_slot(idx, &with_var)),
                            (k, t.substitute_slot(idx, &with_root)),
                        ]
                    } else {
                        vec![(k, t)]
                    }
                })
                .collect();
        }
        terms.extend(expanded);
    }
    terms.retain(|(_, t)| !matches!(t, BracketTree::Const(e) if e.is_zero()));
    BracketPolynomial::new(&c.algebra, terms)
}

/// A tree with the node holding the divisor slot cut out.
#[derive(Clone, PartialEq, Eq, Debug)]
enum Context {
    Hole,
    Left(Box<Context>, BracketTree),
    Right(BracketTree, Box<Context>),
}

impl Context {
    fn fill(&self, with: BracketTree) -> BracketTree {
        match self {
            Context::Hole => with,
            Context::Left(c, r) => BracketTree::Mul(Box::new(c.fill(with)), Box::new(r.clone())),
            Context::Right(l, c) => BracketTree::Mul(Box::new(l.clone()), Box::new(c.fill(with))),
        }
    }

    /// Writes every constant leaf in the basis; returns scaled basis contexts.
    fn expand(&self, algebra: &Algebra) -> Vec<(Rational, Context)> {
        match self {
            Context::Hole => vec![(Rational::one(), Context::Hole)],
            Context::Left(c, r) => {
                let mut out = Vec::new();
                for (a, c2) in c.expand(algebra) {
                    for (b, r2) in expand_tree(r, algebra) {
                        out.push((&a * &b, Context::Left(Box::new(c2.clone()), r2)));
                    }
                }
                out
            }
            Context::Right(l, c) => {
                let mut out = Vec::new();
                for (a, l2) in expand_tree(l, algebra) {
                    for (b, c2) in c.expand(algebra) {
                        out.push((&a * &b, Context::Right(l2.clone(), Box::new(c2))));
                    }
                }
                out
            }
        }
    }
}

fn expand_tree(t: &BracketTree, algebra: &Algebra) -> Vec<(Rational, BracketTree)> {
    match t {
        BracketTree::Const(e) => (0..algebra.dim())
            .filter(|&b| !e.coord(b).is_zero())
            .map(|b| {
                (
                    e.coord(b).clone(),
                    BracketTree::Const(Element::basis(algebra, b)),
                )
            })
            .collect(),
        BracketTree::Mul(l, r) => {
            let mut out = Vec::new();
            for (a, l2) in expand_tree(l, algebra) {
                for (b, r2) in expand_tree(r, algebra) {
                    out.push((
                        &a * &b,
                        BracketTree::Mul(Box::new(l2.clone()), Box::new(r2)),
                    ));
                }
            }
            out
        }
        other => vec![(Rational::one(), other.clone())],
    }
}

/// Splits `t = K[P · slot]`, taking `P` as the left sibling of the slot, or
/// `P = 1` when the slot is not a right child.
fn split_at_slot(t: &BracketTree, slot: usize, one: &Element) -> Option<(Context, BracketTree)> {
    match t {
        BracketTree::Slot(i) if *i == slot => {
            Some((Context::Hole, BracketTree::Const(one.clone())))
        }
        BracketTree::Mul(l, r) => {
            if **r == BracketTree::Slot(slot) {
                return Some((Context::Hole, (**l).clone()));
            }
            if let Some((c, p)) = split_at_slot(l, slot, one) {
                return Some((Context::Left(Box::new(c), (**r).clone()), p));
            }
            split_at_slot(r, slot, one)
                .map(|(c, p)| (Context::Right((**l).clone(), Box::new(c)), p))
        }
        _ => None,
    }
}

/// Two-stage division: by `x − a2`, then the coefficient polynomials of
/// the quotient by `x − a1`. Slot `⊗₁` stands for `x − a1`, `⊗₂` for `x − a2`.
pub fn bfactor_chain(r: &BracketPolynomial, roots: &[Element]) -> Result<BracketChain> {
    let [a1, a2] = roots else {
        return Err(Error::ArityMismatch {
            expected: 2,
            actual: roots.len(),
        });
    };
    let algebra = r.algebra().clone();
    let first = bdivide_monic(r, a2)?;
    let one = algebra.one();

    let mut groups: Vec<(Context, Vec<(Rational, BracketTree)>)> = Vec::new();
    for (c, t) in &first.parts {
        let (context, p) = split_at_slot(t, 0, &one).expect("every part has its slot");
        for (scale, ctx) in context.expand(&algebra) {
            let term = (c * &scale, p.clone());
            match groups.iter_mut().find(|(k, _)| *k == ctx) {
                Some((_, terms)) => terms.push(term),
                None => groups.push((ctx, vec![term])),
            }
        }
    }

    let mut parts = Vec::new();
    for (ctx, terms) in groups {
        let p = BracketPolynomial::new(&algebra, terms)?;
        let q = bdivide_monic(&p, a1)?;
        if !q.remainder.is_zero() {
            return Err(Error::BracketResidual {
                residual: q.remainder.clone(),
                root: a1.clone(),
                partial: Box::new(first),
            });
        }
        for (c, qt) in &q.parts {
            let inner = BracketTree::Mul(Box::new(qt.clone()), Box::new(BracketTree::Slot(1)));
            parts.push((c.clone(), ctx.fill(inner)));
        }
    }
    let mut chain =
        BracketChain::new(first.remainder.clone(), parts, vec![a1.clone(), a2.clone()])?;
    chain.peel_degrees = first.peel_degrees.clone();
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, octonions};

    fn cubic() -> (BracketPolynomial, Algebra) {
        let o = octonions();
        let r = BracketPolynomial::linear(&o.e("j"))
            .bracket_mul(&BracketPolynomial::linear(&o.e("k")))
            .unwrap()
            .bracket_mul(&BracketPolynomial::linear(&o.e("jl")))
            .unwrap();
        (r, o)
    }

    #[test]
    fn divides_cubic_exactly() {
        let (r, o) = cubic();
        let chain = bdivide_monic(&r, &o.e("k")).unwrap();
        assert!(chain.remainder().is_zero());
        assert_eq!(chain.peel_degrees(), &[3, 2, 1]);
        assert!(chain.to_polynomial().unwrap().equals_as_map(&r).unwrap());
        let x = Element::from_ints(&o, &[1, 0, -2, 1, 3, 0, 1, -1]).unwrap();
        assert_eq!(chain.evaluate(&x).unwrap(), r.evaluate(&x).unwrap());
    }

    #[test]
    fn remainder_is_value_at_root() {
        let (r, o) = cubic();
        let a = &o.e("il") + &o.one();
        let chain = bdivide_monic(&r, &a).unwrap();
        assert_eq!(chain.remainder(), &r.evaluate(&a).unwrap());
        assert!(chain.to_polynomial().unwrap().equals_as_map(&r).unwrap());
    }

    #[test]
    fn linear_dividend() {
        let o = octonions();
        let a = o.e("kl");
        let chain = bdivide_monic(&BracketPolynomial::linear(&a), &a).unwrap();
        assert!(chain.remainder().is_zero());
        assert_eq!(chain.parts(), &[(Rational::one(), BracketTree::Slot(0))]);
    }

    #[test]
    fn empty_chain_is_constant() {
        let o = octonions();
        let chain = bdivide_monic(&BracketPolynomial::constant(o.e("l")), &o.e("i")).unwrap();
        let back = bchain_apply(&chain, &[o.e("i")]).unwrap();
        assert!(back
            .equals_as_map(&BracketPolynomial::constant(o.e("l")))
            .unwrap());
    }

    #[test]
    fn two_stage_chain() {
        let (r, o) = cubic();
        let chain = bfactor_chain(&r, &[o.e("j"), o.e("k")]).unwrap();
        assert!(chain.remainder().is_zero());
        assert!(chain.to_polynomial().unwrap().equals_as_map(&r).unwrap());
    }

    #[test]
    fn real_roots_factor() {
        let o = octonions();
        let (two, three) = (o.one().scale(&int(2)), o.one().scale(&int(3)));
        let r = BracketPolynomial::linear(&two)
            .bracket_mul(&BracketPolynomial::linear(&three))
            .unwrap();
        let chain = bfactor_chain(&r, &[two.clone(), three.clone()]).unwrap();
        let expected = BracketChain::new(
            o.zero(),
            vec![(
                Rational::one(),
                BracketTree::Mul(
                    Box::new(BracketTree::Slot(0)),
                    Box::new(BracketTree::Slot(1)),
                ),
            )],
            vec![two, three],
        )
        .unwrap();
        assert!(chain.equals_as_map(&expected).unwrap());
    }

    #[test]
    fn residual_is_reported() {
        let o = octonions();
        let r = BracketPolynomial::linear(&o.e("i"))
            .bracket_mul(&BracketPolynomial::linear(&o.e("j")))
            .unwrap();
        assert!(matches!(
            bfactor_chain(&r, &[o.e("k"), o.e("j")]),
            Err(Error::BracketResidual { .. })
        ));
    }
}
