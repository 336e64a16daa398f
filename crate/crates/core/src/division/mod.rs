//! Division with remainder by linear divisors.
//!
//! Dividing `r(x)` by `x − a` produces a [`QuotientChain`]:
//! `r(x) = s0 + (q0 + q1(x) + … + q_{k−1}(x)) ∘ (x − a)` where each `q_i` is a
//! tensor of rank `i + 2`. A pure tensor `t0 ⊗ … ⊗ t_i ⊗ c` in `q_i` acts on
//! the divisor value `y` as `(t0·x·…·x·t_i)·y·c`.

mod factor;

use std::fmt;

use crate::algebra::{Algebra, Element, Rational};
use crate::linalg::Matrix;
use crate::poly::{
    join_signed, monomial_text, CanonicalForm, FormBuilder, Polynomial, DEFAULT_DEGREE_CAP,
};
use crate::tensor::{PureTensor, TensorSum};
use crate::{Error, Result};

pub use factor::{factor_chain, FactorChain};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientChain {
    algebra: Algebra,
    remainder: Element,
    parts: Vec<TensorSum>,
    divisor: Option<Polynomial>,
    peel_degrees: Vec<usize>,
}

impl QuotientChain {
    /// Builds a chain from terms `P(x) ⊗ c`, each acting as `P(x)·y·c`.
    pub fn from_terms(
        remainder: Element,
        terms: impl IntoIterator<Item = (Polynomial, Element)>,
    ) -> Result<Self> {
        let algebra = remainder.algebra().clone();
        let mut chain = QuotientChain {
            algebra: algebra.clone(),
            remainder,
            parts: Vec::new(),
            divisor: None,
            peel_degrees: Vec::new(),
        };
        for (p, c) in terms {
            algebra.check_same(p.algebra())?;
            algebra.check_same(c.algebra())?;
            for t in p.terms() {
                let mut factors = t.factors().to_vec();
                factors.push(c.clone());
                chain.push_part(PureTensor::new(factors)?);
            }
        }
        Ok(chain)
    }

    /// Attaches the divisor the chain reconstructs against.
    pub fn with_divisor(mut self, divisor: Polynomial) -> Result<Self> {
        self.algebra.check_same(divisor.algebra())?;
        require_linear(&divisor)?;
        self.divisor = Some(divisor);
        Ok(self)
    }

    fn push_part(&mut self, term: PureTensor) {
        let i = term.rank() - 2;
        while self.parts.len() <= i {
            let rank = self.parts.len() + 2;
            self.parts.push(TensorSum::zero(&self.algebra, rank));
        }
        self.parts[i].push(term).expect("rank matches part index");
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn remainder(&self) -> &Element {
        &self.remainder
    }

    /// `parts()[i]` is `q_i`, of rank `i + 2`.
    pub fn parts(&self) -> &[TensorSum] {
        &self.parts
    }

    pub fn divisor(&self) -> Option<&Polynomial> {
        self.divisor.as_ref()
    }

    /// Degrees of the successive peel steps of the division that produced this chain.
    pub fn peel_degrees(&self) -> &[usize] {
        &self.peel_degrees
    }

    /// `Σ q_i(x) ∘ y`.
    pub fn apply_quotient(&self, x: &Element, y: &Element) -> Result<Element> {
        self.algebra.check_same(x.algebra())?;
        self.algebra.check_same(y.algebra())?;
        Ok(self
            .quotient_at(x)
            .apply_args(None, std::slice::from_ref(y)))
    }

    /// The linear map `y ↦ Σ q_i(x) ∘ y` at a fixed `x`, as a rank-2 tensor.
    pub fn quotient_at(&self, x: &Element) -> TensorSum {
        let mut out = TensorSum::zero(&self.algebra, 2);
        for part in &self.parts {
            for t in part.terms() {
                let f = t.factors();
                let (head, tail) = f.split_at(f.len() - 1);
                let args = vec![x.clone(); head.len() - 1];
                let left = PureTensor::new(head.to_vec())
                    .expect("non-empty")
                    .apply_unchecked(None, &args);
                out.push(PureTensor::new(vec![left, tail[0].clone()]).expect("same algebra"))
                    .expect("rank 2");
            }
        }
        out
    }

    /// `s0 + q(x) ∘ p(x)` for the attached divisor `p`.
    pub fn evaluate(&self, x: &Element) -> Result<Element> {
        let p = self
            .divisor
            .as_ref()
            .ok_or_else(|| Error::ChainShape("chain has no divisor attached".into()))?;
        let y = p.evaluate(x)?;
        Ok(&self.remainder + &self.apply_quotient(x, &y)?)
    }

    /// Canonical form of `(x, y) ↦ Σ q_i(x) ∘ y`.
    pub fn quotient_form(&self) -> Result<CanonicalForm> {
        let mut b = FormBuilder::new(&self.algebra, DEFAULT_DEGREE_CAP);
        for (i, part) in self.parts.iter().enumerate() {
            b.add_block(i, 1, |args| part.apply_args(None, args))?;
        }
        Ok(b.finish())
    }

    /// Same remainder and the same quotient as a map of `(x, y)`.
    pub fn equals_as_map(&self, other: &QuotientChain) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.remainder == other.remainder && self.quotient_form()? == other.quotient_form()?)
    }

    /// Whether `chain_apply(self, divisor) ≡ r`.
    pub fn reconstructs(&self, r: &Polynomial) -> Result<bool> {
        let p = self
            .divisor
            .as_ref()
            .ok_or_else(|| Error::ChainShape("chain has no divisor attached".into()))?;
        chain_apply(self, p)?.equals_as_map(r)
    }

    /// Matrix of `y ↦ q(x) ∘ y` and its determinant. When `r = q ∘ (x − a)`,
    /// any root `x ≠ a` of `r` makes this map singular.
    pub fn kernel_condition_matrix(&self, x: &Element) -> Result<(Matrix, Rational)> {
        kernel_condition_matrix(self, x)
    }
}

fn require_linear(p: &Polynomial) -> Result<()> {
    match p.formal_degree() {
        Some(d) if d > 1 => Err(Error::NotLinear(d)),
        _ => Ok(()),
    }
}

/// `x − a`.
pub fn monic_divisor(a: &Element) -> Polynomial {
    Polynomial::x(a.algebra())
        .checked_sub(&Polynomial::constant(a.clone()))
        .expect("same algebra")
}

/// Divides `r` by `x − a`, peeling the rightmost variable of each top-degree term.
pub fn divide_monic(r: &Polynomial, a: &Element) -> Result<QuotientChain> {
    let algebra = r.algebra().clone();
    algebra.check_same(a.algebra())?;
    algebra.require_associative()?;
    let mut chain = QuotientChain::from_terms(algebra.zero(), [])?;
    let mut work = r.clone();
    while let Some(k) = work.formal_degree().filter(|&k| k > 0) {
        let top = work.component(k).expect("present").clone();
        let mut rest = Polynomial::zero(&algebra);
        for (&n, comp) in work.components() {
            if n != k {
                for t in comp.terms() {
                    rest.push_term(t.clone());
                }
            }
        }
        for t in top.terms() {
            // t = (t0 x … x t_{k−1}) x t_k  becomes  q ∘ (x − a) + (t0 x … x t_{k−1}) a t_k
            chain.push_part(t.clone());
            let f = t.factors();
            let mut lowered = f[..k - 1].to_vec();
            lowered.push(&(&f[k - 1] * a) * &f[k]);
            rest.push_term(PureTensor::new(lowered)?);
        }
        chain.peel_degrees.push(k);
        work = rest;
    }
    chain.remainder = work.constant_term();
    chain.divisor = Some(monic_divisor(a));
    Ok(chain)
}

/// `s0 + Σ q_i(x) ∘ p(x)`, expanded into a polynomial. `p` must be linear.
pub fn chain_apply(c: &QuotientChain, p: &Polynomial) -> Result<Polynomial> {
    c.algebra.check_same(p.algebra())?;
    require_linear(p)?;
    let p0 = p.constant_term();
    let linear: Vec<&PureTensor> = p
        .component(1)
        .map(|t| t.terms().iter().collect())
        .unwrap_or_default();
    let mut out = Polynomial::constant(c.remainder.clone());
    for part in &c.parts {
        for t in part.terms() {
            let f = t.factors();
            let n = f.len();
            let (ti, cs) = (&f[n - 2], &f[n - 1]);
            for uv in &linear {
                let mut g = f[..n - 2].to_vec();
                g.push(ti * uv.factor(0));
                g.push(uv.factor(1) * cs);
                out.push_term(PureTensor::new(g)?);
            }
            let mut g = f[..n - 2].to_vec();
            g.push(&(ti * &p0) * cs);
            out.push_term(PureTensor::new(g)?);
        }
    }
    Ok(out)
}

/// Divides `r` by `p(x) = p1 ∘ x + p0` for a nonsingular `p1`.
///
/// Since `p(x) = p1 ∘ (x + c)` with `c = p1⁻¹ ∘ p0`, this divides by `x + c`
/// and folds `p1⁻¹` into the quotient.
pub fn divide_linear(r: &Polynomial, p1: &TensorSum, p0: &Element) -> Result<QuotientChain> {
    p1.require_rank(2)?;
    r.algebra().check_same(p1.algebra())?;
    r.algebra().check_same(p0.algebra())?;
    let inv = p1.inverse_tensor().map_err(|e| match e {
        Error::SingularTensor(t) => Error::SingularDivisor(t),
        other => other,
    })?;
    let c = inv.apply_linear(p0)?;
    let monic = divide_monic(r, &-&c)?;
    let mut chain = QuotientChain {
        algebra: monic.algebra.clone(),
        remainder: monic.remainder.clone(),
        parts: Vec::new(),
        divisor: None,
        peel_degrees: monic.peel_degrees.clone(),
    };
    for part in &monic.parts {
        for t in part.terms() {
            let f = t.factors();
            let n = f.len();
            for uv in inv.terms() {
                let mut g = f[..n - 2].to_vec();
                g.push(&f[n - 2] * uv.factor(0));
                g.push(uv.factor(1) * &f[n - 1]);
                chain.push_part(PureTensor::new(g)?);
            }
        }
    }
    let divisor =
        Polynomial::homogeneous(p1.clone()).checked_add(&Polynomial::constant(p0.clone()))?;
    chain.with_divisor(divisor)
}

/// Matrix and determinant of `y ↦ q(x) ∘ y` for a chain with zero remainder.
pub fn kernel_condition_matrix(chain: &QuotientChain, x: &Element) -> Result<(Matrix, Rational)> {
    if !chain.remainder.is_zero() {
        return Err(Error::ChainShape(format!(
            "remainder {} is not zero",
            chain.remainder
        )));
    }
    chain.algebra.check_same(x.algebra())?;
    let m = chain.quotient_at(x).matrix_of()?;
    let det = m.determinant();
    Ok((m, det))
}

/// Renders terms `P(x) ⊗ d1 ⊗ … ⊗ dm`, gathering terms with equal tails.
pub(crate) fn render_slotted<'a>(
    algebra: &Algebra,
    terms: impl IntoIterator<Item = (&'a [Element], &'a [Element])>,
) -> String {
    let mut groups: Vec<(Vec<Element>, Polynomial)> = Vec::new();
    for (head, tail) in terms {
        // move real multiples out of the tail into the head
        let mut head = head.to_vec();
        let mut tail = tail.to_vec();
        for d in tail.iter_mut() {
            if let Some((c, b)) = d.as_monomial() {
                head[0] = head[0].scale(&c);
                *d = Element::basis(algebra, b);
            }
        }
        let term = PureTensor::new(head).expect("non-empty");
        match groups.iter_mut().find(|(t, _)| *t == tail) {
            Some((_, p)) => p.push_term(term),
            None => {
                let mut p = Polynomial::zero(algebra);
                p.push_term(term);
                groups.push((tail, p));
            }
        }
    }
    let parts = groups.into_iter().filter_map(|(tail, p)| {
        let p = p.simplified();
        let count = p.terms().count();
        if count == 0 {
            return None;
        }
        let head = if count == 1 {
            let t = p.terms().next().expect("one term");
            if t.rank() == 1 {
                t.factor(0).display_factor(true)
            } else {
                monomial_text(t.factors())
            }
        } else {
            format!("({p})")
        };
        let tails: Vec<String> = tail.iter().map(|d| d.display_factor(true)).collect();
        Some(format!("{head}⊗{}", tails.join("⊗")))
    });
    join_signed(parts)
}

impl fmt::Display for QuotientChain {
    /// `s0 + (Q) ∘ (p(x))`, e.g. `-2k + (1⊗j + (x - i - j)⊗1) ∘ (x - j)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(&[Element], &[Element])> = self
            .parts
            .iter()
            .flat_map(|p| p.terms())
            .map(|t| {
                let f = t.factors();
                f.split_at(f.len() - 1)
            })
            .collect();
        let divisor = self
            .divisor
            .as_ref()
            .map_or_else(|| "y".to_string(), Polynomial::to_string);
        if terms.is_empty() {
            return write!(f, "{}", self.remainder);
        }
        let q = render_slotted(&self.algebra, terms);
        if self.remainder.is_zero() {
            write!(f, "({q}) ∘ ({divisor})")
        } else {
            write!(
                f,
                "{} + ({q}) ∘ ({divisor})",
                self.remainder.display_factor(true)
            )
        }
    }
}
