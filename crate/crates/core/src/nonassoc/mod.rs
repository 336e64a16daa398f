//! Bracketed polynomials for non-associative algebras.
//!
//! Without associativity a product of several factors depends on where the
//! brackets go, so each monomial is kept as an explicit binary tree.

mod division;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{is_negative, Algebra, Element, Rational};
use crate::poly::{join_signed, with_coefficient, CanonicalForm, FormBuilder, DEFAULT_DEGREE_CAP};
use crate::{Error, Result};

pub use division::{bchain_apply, bdivide_monic, bfactor_chain};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketTree {
    Const(Element),
    Var,
    /// A hole for the value of the divisor with the given index.
    Slot(usize),
    Mul(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    /// Product node; two constants fold into one.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(left: BracketTree, right: BracketTree) -> BracketTree {
        match (left, right) {
            (BracketTree::Const(a), BracketTree::Const(b)) => BracketTree::Const(&a * &b),
            (l, r) => BracketTree::Mul(Box::new(l), Box::new(r)),
        }
    }

    /// Left-associated product of the leaves.
    pub fn product(leaves: impl IntoIterator<Item = BracketTree>) -> Option<BracketTree> {
        leaves.into_iter().reduce(BracketTree::mul)
    }

    /// Number of `Var` leaves.
    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Var => 1,
            BracketTree::Mul(l, r) => l.degree() + r.degree(),
            _ => 0,
        }
    }

    /// Slot indices in leaf order.
    pub fn slots(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit_slots(&mut out);
        out
    }

    fn visit_slots(&self, out: &mut Vec<usize>) {
        match self {
            BracketTree::Slot(i) => out.push(*i),
            BracketTree::Mul(l, r) => {
                l.visit_slots(out);
                r.visit_slots(out);
            }
            _ => {}
        }
    }

    pub fn has_slots(&self) -> bool {
        match self {
            BracketTree::Slot(_) => true,
            BracketTree::Mul(l, r) => l.has_slots() || r.has_slots(),
            _ => false,
        }
    }

    pub(crate) fn check_algebra(&self, algebra: &Algebra) -> Result<()> {
        match self {
            BracketTree::Const(e) => algebra.check_same(e.algebra()),
            BracketTree::Mul(l, r) => {
                l.check_algebra(algebra)?;
                r.check_algebra(algebra)
            }
            _ => Ok(()),
        }
    }

    /// Evaluates in exactly the order given by the tree.
    pub fn eval(&self, x: &Element, slot_values: &[Element]) -> Result<Element> {
        self.check_algebra(x.algebra())?;
        for v in slot_values {
            x.algebra().check_same(v.algebra())?;
        }
        self.eval_args(&mut std::iter::repeat(x), slot_values)
    }

    /// Evaluation where successive `Var` leaves take successive values.
    pub(crate) fn eval_args<'a>(
        &self,
        vars: &mut impl Iterator<Item = &'a Element>,
        slot_values: &[Element],
    ) -> Result<Element> {
        match self {
            BracketTree::Const(e) => Ok(e.clone()),
            BracketTree::Var => Ok(vars.next().expect("enough variable values").clone()),
            BracketTree::Slot(i) => slot_values.get(*i).cloned().ok_or(Error::MissingSlot(*i)),
            BracketTree::Mul(l, r) => {
                let a = l.eval_args(vars, slot_values)?;
                let b = r.eval_args(vars, slot_values)?;
                Ok(&a * &b)
            }
        }
    }

    /// Replaces the rightmost `Var` leaf; `None` when there is none.
    pub fn replace_rightmost_var(&self, with: &BracketTree) -> Option<BracketTree> {
        match self {
            BracketTree::Var => Some(with.clone()),
            BracketTree::Mul(l, r) => match r.replace_rightmost_var(with) {
                Some(r2) => Some(BracketTree::Mul(l.clone(), Box::new(r2))),
                None => l
                    .replace_rightmost_var(with)
                    .map(|l2| BracketTree::Mul(Box::new(l2), r.clone())),
            },
            _ => None,
        }
    }

    /// Replaces every `Slot(index)` leaf, folding constant products.
    pub fn substitute_slot(&self, index: usize, with: &BracketTree) -> BracketTree {
        match self {
            BracketTree::Slot(i) if *i == index => with.clone(),
            BracketTree::Mul(l, r) => BracketTree::mul(
                l.substitute_slot(index, with),
                r.substitute_slot(index, with),
            ),
            other => other.clone(),
        }
    }

    /// Text with slots written `⊗`, or `⊗₁`, `⊗₂`, … when `numbered`.
    pub fn render(&self, numbered: bool) -> String {
        self.render_inner(numbered, false)
    }

    fn render_inner(&self, numbered: bool, nested: bool) -> String {
        match self {
            BracketTree::Const(e) => {
                let negative = e
                    .coords()
                    .iter()
                    .find(|c| !c.is_zero())
                    .is_some_and(is_negative);
                if nested && negative && e.as_monomial().is_some() {
                    format!("({e})")
                } else {
                    e.display_factor(nested)
                }
            }
            BracketTree::Var => "x".into(),
            BracketTree::Slot(i) => slot_symbol(*i, numbered),
            BracketTree::Mul(l, r) => {
                let body = if **l == BracketTree::Var && **r == BracketTree::Var {
                    "x^2".to_string()
                } else {
                    format!(
                        "{}{}",
                        l.render_inner(numbered, true),
                        r.render_inner(numbered, true)
                    )
                };
                if nested {
                    format!("({body})")
                } else {
                    body
                }
            }
        }
    }
}

fn slot_symbol(i: usize, numbered: bool) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    if !numbered && i == 0 {
        return "⊗".into();
    }
    let digits: String = (i + 1)
        .to_string()
        .chars()
        .map(|c| SUB[c.to_digit(10).expect("digit") as usize])
        .collect();
    format!("⊗{digits}")
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

fn render_terms(terms: &[(Rational, BracketTree)], numbered: bool) -> String {
    join_signed(terms.iter().map(|(c, t)| {
        if let BracketTree::Const(e) = t {
            return e.scale(c).display_factor(true);
        }
        with_coefficient(c, &t.render(numbered))
    }))
}

/// Adds the coefficients of identical trees, keeping first-occurrence order.
fn merge_terms(terms: Vec<(Rational, BracketTree)>) -> Vec<(Rational, BracketTree)> {
    let mut out: Vec<(Rational, BracketTree)> = Vec::with_capacity(terms.len());
    for (c, t) in terms {
        match out.iter_mut().find(|(_, u)| *u == t) {
            Some((d, _)) => *d += c,
            None => out.push((c, t)),
        }
    }
    out.retain(|(c, _)| !c.is_zero());
    out
}

/// Canonical form of `Σ c·t` as a function of the variable occurrences and slots.
fn terms_form(
    algebra: &Algebra,
    terms: &[(Rational, BracketTree)],
    slots: usize,
) -> Result<CanonicalForm> {
    let mut blocks: BTreeMap<usize, Vec<&(Rational, BracketTree)>> = BTreeMap::new();
    for term in terms {
        blocks.entry(term.1.degree()).or_default().push(term);
    }
    let mut b = FormBuilder::new(algebra, DEFAULT_DEGREE_CAP);
    for (d, group) in blocks {
        let mut failure = None;
        b.add_block(d, slots, |args| {
            let (vars, slot_values) = args.split_at(d);
            let mut acc = algebra.zero();
            for (c, t) in &group {
                match t.eval_args(&mut vars.iter(), slot_values) {
                    Ok(v) => acc = &acc + &v.scale(c),
                    Err(e) => failure = Some(e),
                }
            }
            acc
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(b.finish())
}

/// `Σ c_s · t_s` over trees without slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketPolynomial {
    algebra: Algebra,
    terms: Vec<(Rational, BracketTree)>,
}

impl BracketPolynomial {
    pub fn new(algebra: &Algebra, terms: Vec<(Rational, BracketTree)>) -> Result<Self> {
        for (_, t) in &terms {
            t.check_algebra(algebra)?;
            if let Some(&i) = t.slots().first() {
                return Err(Error::ChainShape(format!(
                    "polynomial term {t} contains slot {i}"
                )));
            }
        }
        Ok(BracketPolynomial {
            algebra: algebra.clone(),
            terms: merge_terms(terms),
        })
    }

    pub fn constant(c: Element) -> Self {
        let algebra = c.algebra().clone();
        BracketPolynomial {
            algebra,
            terms: if c.is_zero() {
                Vec::new()
            } else {
                vec![(Rational::one(), BracketTree::Const(c))]
            },
        }
    }

    /// `x − a` as a tree sum.
    pub fn linear(a: &Element) -> Self {
        BracketPolynomial {
            algebra: a.algebra().clone(),
            terms: vec![
                (Rational::one(), BracketTree::Var),
                (-Rational::one(), BracketTree::Const(a.clone())),
            ],
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn terms(&self) -> &[(Rational, BracketTree)] {
        &self.terms
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.iter().map(|(_, t)| t.degree()).max()
    }

    /// Distributes the product of two sums, keeping each pair's brackets.
    pub fn bracket_mul(&self, other: &BracketPolynomial) -> Result<BracketPolynomial> {
        self.algebra.check_same(&other.algebra)?;
        let mut terms = Vec::new();
        for (a, s) in &self.terms {
            for (b, t) in &other.terms {
                terms.push((a * b, BracketTree::mul(s.clone(), t.clone())));
            }
        }
        BracketPolynomial::new(&self.algebra, terms)
    }

    pub fn checked_add(&self, other: &BracketPolynomial) -> Result<BracketPolynomial> {
        self.algebra.check_same(&other.algebra)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        BracketPolynomial::new(&self.algebra, terms)
    }

    pub fn neg(&self) -> BracketPolynomial {
        BracketPolynomial {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(c, t)| (-c, t.clone())).collect(),
        }
    }

    pub fn evaluate(&self, x: &Element) -> Result<Element> {
        let mut acc = self.algebra.zero();
        for (c, t) in &self.terms {
            acc = &acc + &t.eval(x, &[])?.scale(c);
        }
        Ok(acc)
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        terms_form(&self.algebra, &self.terms, 0)
    }

    pub fn equals_as_map(&self, other: &BracketPolynomial) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.canonical_form()? == other.canonical_form()?)
    }
}

impl fmt::Display for BracketPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_terms(&self.terms, false))
    }
}

/// `s0 + Σ c_s · t_s ∘ (x − a1, …, x − am)` where slot `t` stands for `x − a_{t+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketChain {
    algebra: Algebra,
    remainder: Element,
    parts: Vec<(Rational, BracketTree)>,
    roots: Vec<Element>,
    peel_degrees: Vec<usize>,
}

impl BracketChain {
    pub fn new(
        remainder: Element,
        parts: Vec<(Rational, BracketTree)>,
        roots: Vec<Element>,
    ) -> Result<Self> {
        let algebra = remainder.algebra().clone();
        for r in &roots {
            algebra.check_same(r.algebra())?;
        }
        for (_, t) in &parts {
            t.check_algebra(&algebra)?;
            if let Some(&i) = t.slots().iter().find(|&&i| i >= roots.len()) {
                return Err(Error::MissingSlot(i));
            }
        }
        Ok(BracketChain {
            algebra,
            remainder,
            parts: merge_terms(parts),
            roots,
            peel_degrees: Vec::new(),
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn remainder(&self) -> &Element {
        &self.remainder
    }

    pub fn parts(&self) -> &[(Rational, BracketTree)] {
        &self.parts
    }

    pub fn roots(&self) -> &[Element] {
        &self.roots
    }

    pub fn peel_degrees(&self) -> &[usize] {
        &self.peel_degrees
    }

    /// `Σ c_s t_s` with explicit slot values.
    pub fn apply_quotient(&self, x: &Element, slot_values: &[Element]) -> Result<Element> {
        let mut acc = self.algebra.zero();
        for (c, t) in &self.parts {
            acc = &acc + &t.eval(x, slot_values)?.scale(c);
        }
        Ok(acc)
    }

    pub fn evaluate(&self, x: &Element) -> Result<Element> {
        let ys: Vec<Element> = self.roots.iter().map(|a| x - a).collect();
        Ok(&self.remainder + &self.apply_quotient(x, &ys)?)
    }

    pub fn quotient_form(&self) -> Result<CanonicalForm> {
        terms_form(&self.algebra, &self.parts, self.roots.len())
    }

    /// Same roots and remainder, and the same quotient as a function of `x` and the slots.
    pub fn equals_as_map(&self, other: &BracketChain) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.roots == other.roots
            && self.remainder == other.remainder
            && self.quotient_form()? == other.quotient_form()?)
    }

    /// Expands every slot into `x − a`.
    pub fn to_polynomial(&self) -> Result<BracketPolynomial> {
        bchain_apply(self, &self.roots)
    }
}

impl fmt::Display for BracketChain {
    /// `s0 + (q) ∘ (x - a)`; two-slot chains use `⊗₁`, `⊗₂`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "{}", self.remainder);
        }
        let numbered = self.roots.len() > 1;
        let divisors: Vec<String> = self
            .roots
            .iter()
            .map(|a| BracketPolynomial::linear(a).to_string())
            .collect();
        if !self.remainder.is_zero() {
            write!(f, "{} + ", self.remainder.display_factor(true))?;
        }
        write!(
            f,
            "({}) ∘ ({})",
            render_terms(&self.parts, numbered),
            divisors.join(", ")
        )
    }
}

/// `(ab)c − a(bc)`.
pub fn associator(a: &Element, b: &Element, c: &Element) -> Element {
    &(&(a * b) * c) - &(a * &(b * c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::octonions;

    fn c(e: Element) -> BracketTree {
        BracketTree::Const(e)
    }

    #[test]
    fn bracket_order_matters() {
        let o = octonions();
        let (i, j, jl) = (o.e("i"), o.e("j"), o.e("jl"));
        let left = BracketTree::mul(
            BracketTree::mul(c(i.clone()), BracketTree::Var),
            c(jl.clone()),
        );
        let right = BracketTree::mul(
            c(i.clone()),
            BracketTree::mul(BracketTree::Var, c(jl.clone())),
        );
        assert_ne!(left.eval(&j, &[]).unwrap(), right.eval(&j, &[]).unwrap());
        assert!(!associator(&i, &j, &o.e("l")).is_zero());
    }

    #[test]
    fn factored_cubic_vanishes_at_left_root() {
        let o = octonions();
        let (j, k, jl) = (o.e("j"), o.e("k"), o.e("jl"));
        let r = BracketPolynomial::linear(&j)
            .bracket_mul(&BracketPolynomial::linear(&k))
            .unwrap()
            .bracket_mul(&BracketPolynomial::linear(&jl))
            .unwrap();
        assert_eq!(r.degree(), Some(3));
        assert!(r.evaluate(&j).unwrap().is_zero());
        assert!(r.evaluate(&jl).unwrap().is_zero());
    }

    #[test]
    fn monomials_vanish_at_zero() {
        let o = octonions();
        let t = BracketTree::mul(
            BracketTree::Var,
            BracketTree::mul(c(o.e("kl")), BracketTree::Var),
        );
        assert!(t.eval(&o.zero(), &[]).unwrap().is_zero());
    }

    #[test]
    fn missing_slot_value() {
        let o = octonions();
        let t = BracketTree::mul(BracketTree::Var, BracketTree::Slot(1));
        assert!(matches!(
            t.eval(&o.e("i"), &[o.one()]),
            Err(Error::MissingSlot(1))
        ));
    }

    #[test]
    fn rightmost_var_replacement() {
        let t = BracketTree::mul(
            BracketTree::mul(BracketTree::Var, BracketTree::Var),
            BracketTree::Var,
        );
        let q = t.replace_rightmost_var(&BracketTree::Slot(0)).unwrap();
        assert_eq!(q.to_string(), "(x^2)⊗");
        assert_eq!(q.degree(), 2);
        let o = octonions();
        let lowered = q.substitute_slot(0, &c(o.e("k")));
        assert_eq!(lowered.to_string(), "(x^2)k");
    }

    #[test]
    fn rendering() {
        let o = octonions();
        let t = BracketTree::mul(
            BracketTree::mul(BracketTree::Var, BracketTree::Slot(0)),
            c(&o.e("k") - &o.e("jl")),
        );
        assert_eq!(t.render(false), "(x⊗)(k - jl)");
        assert_eq!(t.render(true), "(x⊗₁)(k - jl)");
        let n = BracketTree::mul(BracketTree::Var, c(-o.e("j")));
        assert_eq!(n.to_string(), "x(-j)");
    }

    #[test]
    fn rejects_slots_in_polynomials() {
        let o = octonions();
        assert!(BracketPolynomial::new(&o, vec![(Rational::one(), BracketTree::Slot(0))]).is_err());
    }
}
