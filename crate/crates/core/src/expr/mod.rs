//! The expression language.
//!
//! Over an associative algebra an expression lowers to an element, a tensor
//! (`a @ b`, also written `a ⊗ b`) or a polynomial in `x`. Over a
//! non-associative algebra it lowers to a sum of bracket trees: user
//! parentheses fix the order of multiplication, unbracketed products
//! associate to the left, and `⊗`, `⊗₁`, `⊗₂` (or `_`, `_1`, `_2`) mark divisor
//! slots.
//!
//! ```
//! use ncpoly::{expr, quaternions};
//!
//! let h = quaternions();
//! let p = expr::parse_value("(x - j)(x - i)", &h).unwrap().into_polynomial().unwrap();
//! assert_eq!(p.simplified().to_string(), "x^2 - jx - xi - k");
//! ```

mod parser;

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{fmt_rational, Algebra, Element, Rational};
use crate::nonassoc::{BracketPolynomial, BracketTree};
use crate::poly::Polynomial;
use crate::tensor::{PureTensor, TensorSum};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    /// Non-negative rational literal.
    Num(Rational),
    Basis(String),
    Var,
    /// Divisor slot, numbered from 0.
    Slot(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Paren(Box<Expr>),
}

impl fmt::Display for Expr {
    /// Prints with explicit `*`, so the output parses back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(v) => write!(f, "{}", fmt_rational(v)),
            Expr::Basis(name) => write!(f, "{name}"),
            Expr::Var => write!(f, "x"),
            Expr::Slot(i) => write!(f, "_{}", i + 1),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) => write!(f, "{a} - {b}"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Tensor(a, b) => write!(f, "{a} @ {b}"),
            Expr::Pow(a, n) => write!(f, "{a}^{n}"),
            Expr::Paren(e) => write!(f, "({e})"),
        }
    }
}

/// A parsed expression and the warnings raised while parsing it.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub expr: Expr,
    /// Notes about unbracketed products in a non-associative algebra.
    pub warnings: Vec<String>,
}

pub fn parse(src: &str, algebra: &Algebra) -> Result<Parsed> {
    let mut p = parser::Parser::new(src, algebra)?;
    let expr = p.parse_all()?;
    Ok(Parsed {
        expr,
        warnings: p.warnings,
    })
}

/// The value of an expression.
#[derive(Clone, Debug)]
pub enum Value {
    Element(Element),
    Tensor(TensorSum),
    Poly(Polynomial),
    /// `Σ c·t` over bracket trees, possibly with slots.
    Bracket(Algebra, Vec<(Rational, BracketTree)>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Element(_) => "element",
            Value::Tensor(_) => "tensor",
            Value::Poly(_) => "polynomial",
            Value::Bracket(..) => "bracket polynomial",
        }
    }

    pub fn into_element(self) -> Result<Element> {
        match self {
            Value::Element(e) => Ok(e),
            Value::Poly(p) if p.formal_degree().unwrap_or(0) == 0 => Ok(p.constant_term()),
            Value::Bracket(algebra, terms) => {
                let mut acc = algebra.zero();
                for (c, t) in &terms {
                    let BracketTree::Const(e) = t else {
                        return Err(expected("an algebra element", "bracket polynomial"));
                    };
                    acc = &acc + &e.scale(c);
                }
                Ok(acc)
            }
            other => Err(expected("an algebra element", other.kind())),
        }
    }

    pub fn into_polynomial(self) -> Result<Polynomial> {
        match self {
            Value::Poly(p) => Ok(p),
            Value::Element(e) => Ok(Polynomial::constant(e)),
            other => Err(expected("a polynomial", other.kind())),
        }
    }

    /// Elements count as rank-1 tensors.
    pub fn into_tensor(self) -> Result<TensorSum> {
        match self {
            Value::Tensor(t) => Ok(t),
            Value::Element(e) => TensorSum::pure(vec![e]),
            other => Err(expected("a tensor", other.kind())),
        }
    }

    pub fn into_bracket_polynomial(self) -> Result<BracketPolynomial> {
        match self {
            Value::Bracket(algebra, terms) => BracketPolynomial::new(&algebra, terms),
            Value::Element(e) => Ok(BracketPolynomial::constant(e)),
            other => Err(expected("a bracket polynomial", other.kind())),
        }
    }

    /// Terms of a bracket expression, slots allowed.
    pub fn into_bracket_terms(self) -> Result<Vec<(Rational, BracketTree)>> {
        match self {
            Value::Bracket(_, terms) => Ok(terms),
            other => Err(expected("a bracket expression", other.kind())),
        }
    }
}

fn expected(what: &str, found: &str) -> Error {
    Error::InvalidExpression(format!("expected {what}, found {found}"))
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(e) => write!(f, "{e}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Bracket(algebra, terms) => {
                match BracketPolynomial::new(algebra, terms.clone()) {
                    Ok(p) => write!(f, "{p}"),
                    Err(_) => {
                        let parts: Vec<String> = terms
                            .iter()
                            .map(|(c, t)| format!("{}·{}", fmt_rational(c), t.render(true)))
                            .collect();
                        write!(f, "{}", parts.join(" + "))
                    }
                }
            }
        }
    }
}

/// Parses and lowers in one step; returns the value and the parser warnings.
pub fn parse_value(src: &str, algebra: &Algebra) -> Result<Value> {
    Ok(parse_with_warnings(src, algebra)?.0)
}

pub fn parse_with_warnings(src: &str, algebra: &Algebra) -> Result<(Value, Vec<String>)> {
    let parsed = parse(src, algebra)?;
    Ok((lower(&parsed.expr, algebra)?, parsed.warnings))
}

pub fn lower(expr: &Expr, algebra: &Algebra) -> Result<Value> {
    if algebra.is_associative() {
        lower_assoc(expr, algebra)
    } else {
        Ok(Value::Bracket(
            algebra.clone(),
            lower_bracket(expr, algebra)?,
        ))
    }
}

fn basis_element(name: &str, algebra: &Algebra) -> Result<Element> {
    algebra
        .basis_index(name)
        .map(|i| Element::basis(algebra, i))
        .ok_or_else(|| Error::InvalidExpression(format!("unknown basis symbol '{name}'")))
}

fn lower_assoc(expr: &Expr, algebra: &Algebra) -> Result<Value> {
    use Value::*;
    Ok(match expr {
        Expr::Num(v) => Element(crate::Element::scalar(algebra, v.clone())),
        Expr::Basis(name) => Element(basis_element(name, algebra)?),
        Expr::Var => Poly(Polynomial::x(algebra)),
        Expr::Slot(_) => {
            return Err(Error::InvalidExpression(
                "slots need a non-associative algebra".into(),
            ))
        }
        Expr::Paren(e) => lower_assoc(e, algebra)?,
        Expr::Neg(e) => match lower_assoc(e, algebra)? {
            Element(a) => Element(-a),
            Tensor(t) => Tensor(t.neg()),
            Poly(p) => Poly(p.neg()),
            Bracket(..) => unreachable!("associative lowering"),
        },
        Expr::Add(a, b) => add(lower_assoc(a, algebra)?, lower_assoc(b, algebra)?)?,
        Expr::Sub(a, b) => {
            let rhs = lower_assoc(&Expr::Neg(b.clone()), algebra)?;
            add(lower_assoc(a, algebra)?, rhs)?
        }
        Expr::Mul(a, b) => mul(lower_assoc(a, algebra)?, lower_assoc(b, algebra)?)?,
        Expr::Tensor(a, b) => tensor(lower_assoc(a, algebra)?, lower_assoc(b, algebra)?)?,
        Expr::Pow(a, n) => match lower_assoc(a, algebra)? {
            Element(e) => {
                let mut acc = algebra.one();
                for _ in 0..*n {
                    acc = &acc * &e;
                }
                Element(acc)
            }
            Poly(p) => Poly(p.pow(*n)?),
            other => return Err(expected("an element or polynomial base", other.kind())),
        },
    })
}

fn add(a: Value, b: Value) -> Result<Value> {
    use Value::*;
    Ok(match (a, b) {
        (Element(x), Element(y)) => Element(x.checked_add(&y)?),
        (Tensor(s), Tensor(t)) => Tensor(s.checked_add(&t)?),
        (Element(x), Poly(p)) | (Poly(p), Element(x)) => {
            Poly(p.checked_add(&Polynomial::constant(x))?)
        }
        (Poly(p), Poly(q)) => Poly(p.checked_add(&q)?),
        (x, y) => {
            return Err(Error::InvalidExpression(format!(
                "cannot add {} and {}",
                x.kind(),
                y.kind()
            )))
        }
    })
}

fn mul(a: Value, b: Value) -> Result<Value> {
    use Value::*;
    Ok(match (a, b) {
        (Element(x), Element(y)) => Element(x.checked_mul(&y)?),
        (Element(x), Poly(p)) => Poly(Polynomial::constant(x).checked_mul(&p)?),
        (Poly(p), Element(y)) => Poly(p.checked_mul(&Polynomial::constant(y))?),
        (Poly(p), Poly(q)) => Poly(p.checked_mul(&q)?),
        (Element(x), Tensor(t)) | (Tensor(t), Element(x)) if x.is_real() => {
            Tensor(t.scale(&x.re()))
        }
        (x, y) => {
            return Err(Error::InvalidExpression(format!(
                "cannot multiply {} by {}",
                x.kind(),
                y.kind()
            )))
        }
    })
}

fn tensor(a: Value, b: Value) -> Result<Value> {
    let (s, t) = (a.into_tensor()?, b.into_tensor()?);
    s.algebra().check_same(t.algebra())?;
    let mut out = TensorSum::zero(s.algebra(), s.rank() + t.rank());
    for u in s.terms() {
        for v in t.terms() {
            let mut factors = u.factors().to_vec();
            factors.extend_from_slice(v.factors());
            out.push(PureTensor::new(factors)?)?;
        }
    }
    Ok(Value::Tensor(out))
}

type Terms = Vec<(Rational, BracketTree)>;

/// Lowers to bracket terms; real constants move into the coefficient and a
/// sum's constant terms fold into one leaf.
fn lower_bracket(expr: &Expr, algebra: &Algebra) -> Result<Terms> {
    let one = Rational::one();
    Ok(match expr {
        Expr::Num(v) => const_term(Element::scalar(algebra, v.clone())),
        Expr::Basis(name) => const_term(basis_element(name, algebra)?),
        Expr::Var => vec![(one, BracketTree::Var)],
        Expr::Slot(i) => vec![(one, BracketTree::Slot(*i))],
        Expr::Paren(e) => lower_bracket(e, algebra)?,
        Expr::Neg(e) => negate(lower_bracket(e, algebra)?),
        Expr::Add(a, b) => {
            let mut terms = lower_bracket(a, algebra)?;
            terms.extend(lower_bracket(b, algebra)?);
            fold_consts(terms, algebra)
        }
        Expr::Sub(a, b) => {
            let mut terms = lower_bracket(a, algebra)?;
            terms.extend(negate(lower_bracket(b, algebra)?));
            fold_consts(terms, algebra)
        }
        Expr::Mul(a, b) => bracket_mul(&lower_bracket(a, algebra)?, &lower_bracket(b, algebra)?),
        Expr::Pow(a, n) => {
            let base = lower_bracket(a, algebra)?;
            let mut acc = const_term(algebra.one());
            for _ in 0..*n {
                acc = bracket_mul(&acc, &base);
            }
            acc
        }
        Expr::Tensor(..) => {
            return Err(Error::InvalidExpression(
                "'@' is not available for non-associative algebras".into(),
            ))
        }
    })
}

fn const_term(e: Element) -> Terms {
    if e.is_zero() {
        Vec::new()
    } else if let Some((c, b)) = e.as_monomial() {
        vec![(c, BracketTree::Const(Element::basis(e.algebra(), b)))]
    } else {
        vec![(Rational::one(), BracketTree::Const(e))]
    }
}

fn negate(terms: Terms) -> Terms {
    terms.into_iter().map(|(c, t)| (-c, t)).collect()
}

fn fold_consts(terms: Terms, algebra: &Algebra) -> Terms {
    let mut constant = algebra.zero();
    let mut out = Vec::new();
    let mut seen_const = false;
    for (c, t) in terms {
        match t {
            BracketTree::Const(e) => {
                constant = &constant + &e.scale(&c);
                seen_const = true;
            }
            other => out.push((c, other)),
        }
    }
    if seen_const {
        out.extend(const_term(constant));
    }
    out
}

fn bracket_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Vec::new();
    for (c, s) in a {
        for (d, t) in b {
            let coef = c * d;
            if coef.is_zero() {
                continue;
            }
            let tree = match (s, t) {
                (BracketTree::Const(e), other) | (other, BracketTree::Const(e)) if e.is_one() => {
                    other.clone()
                }
                _ => BracketTree::mul(s.clone(), t.clone()),
            };
            out.push((coef, tree));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, octonions, quaternions, rat};
    use crate::linalg::Matrix;

    fn reparse(src: &str, algebra: &Algebra) {
        let first = parse(src, algebra).unwrap().expr;
        let printed = first.to_string();
        let second = parse(&printed, algebra).unwrap().expr;
        assert_eq!(first, second, "{src} printed as {printed}");
    }

    #[test]
    fn round_trip() {
        let h = quaternions();
        for src in [
            "x",
            "(x - j)(x - i)",
            "i@1 - 1@i",
            "2i + 1/2 j",
            "-x*-i",
            "x^2 - jx - xi - k",
            "((x))",
            "3/4(x-k)^3",
            "i ⊗ j ⊗ k",
        ] {
            reparse(src, &h);
        }
        let o = octonions();
        for src in [
            "((x - j)(x - k))(x - jl)",
            "(x⊗)(k - jl) + (x^2 - jx)(⊗1)",
            "(1⊗₁)(j - k)⊗₂",
            "il*kl - _2",
        ] {
            reparse(src, &o);
        }
    }

    #[test]
    fn polynomial_product() {
        let h = quaternions();
        let p = parse_value("(x - j)(x - i)", &h)
            .unwrap()
            .into_polynomial()
            .unwrap();
        let q = parse_value("x^2 - jx - xi - k", &h)
            .unwrap()
            .into_polynomial()
            .unwrap();
        assert!(p.equals_as_map(&q).unwrap());
        let x = parse_value("x", &h).unwrap().into_polynomial().unwrap();
        assert!(x.equals_as_map(&Polynomial::x(&h)).unwrap());
    }

    #[test]
    fn tensor_literal() {
        let h = quaternions();
        let t = parse_value("i@1 - 1@i", &h).unwrap().into_tensor().unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected.set(2, 3, int(-2));
        expected.set(3, 2, int(2));
        assert_eq!(t.matrix_of().unwrap(), expected);
        assert_eq!(
            parse_value("i ⊗ j ⊗ k", &h)
                .unwrap()
                .into_tensor()
                .unwrap()
                .rank(),
            3
        );
    }

    #[test]
    fn literals() {
        let h = quaternions();
        let e = parse_value("1/2 j - 3", &h)
            .unwrap()
            .into_element()
            .unwrap();
        assert_eq!(e.coords(), &[int(-3), int(0), rat(1, 2), int(0)]);
        assert_eq!(
            parse_value("k^2", &h).unwrap().into_element().unwrap(),
            -h.one()
        );
    }

    #[test]
    fn errors_carry_positions() {
        let h = quaternions();
        match parse("x + l", &h) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("x +\n (i", &h) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse("", &h), Err(Error::Parse { .. })));
        assert!(matches!(parse("1/0", &h), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_value("i@1 + i", &h),
            Err(Error::InvalidExpression(_))
        ));
    }

    #[test]
    fn octonion_mode() {
        let o = octonions();
        assert!(matches!(parse("i@j", &o), Err(Error::Parse { .. })));
        assert!(parse("(xj)k", &o).unwrap().warnings.is_empty());
        assert_eq!(parse("xjk", &o).unwrap().warnings.len(), 1);
        assert_eq!(parse("x^3", &o).unwrap().warnings.len(), 1);

        let r = parse_value("((x - j)(x - k))(x - jl)", &o)
            .unwrap()
            .into_bracket_polynomial()
            .unwrap();
        let expected = BracketPolynomial::linear(&o.e("j"))
            .bracket_mul(&BracketPolynomial::linear(&o.e("k")))
            .unwrap()
            .bracket_mul(&BracketPolynomial::linear(&o.e("jl")))
            .unwrap();
        assert!(r.equals_as_map(&expected).unwrap());

        // brackets change the map
        let left = parse_value("(ix)jl", &o)
            .unwrap()
            .into_bracket_polynomial()
            .unwrap();
        let right = parse_value("i(x jl)", &o)
            .unwrap()
            .into_bracket_polynomial()
            .unwrap();
        assert!(!left.equals_as_map(&right).unwrap());
    }

    #[test]
    fn slots_and_constants() {
        let o = octonions();
        let terms = parse_value("(x⊗)(k - jl)", &o)
            .unwrap()
            .into_bracket_terms()
            .unwrap();
        let expected = BracketTree::Mul(
            Box::new(BracketTree::Mul(
                Box::new(BracketTree::Var),
                Box::new(BracketTree::Slot(0)),
            )),
            Box::new(BracketTree::Const(&o.e("k") - &o.e("jl"))),
        );
        assert_eq!(terms, vec![(Rational::one(), expected)]);
        let terms = parse_value("2(⊗₂)", &o)
            .unwrap()
            .into_bracket_terms()
            .unwrap();
        assert_eq!(terms, vec![(int(2), BracketTree::Slot(1))]);
        assert!(matches!(
            parse("_", &quaternions()),
            Err(Error::Parse { .. })
        ));
    }
}
