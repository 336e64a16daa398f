//! Polynomials `p(x) = p0 + p1 ∘ x + … + pn ∘ xⁿ` with `pn ∈ A^{(n+1)⊗}`.

mod canonical;
mod roots;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

pub(crate) use canonical::FormBuilder;
pub use canonical::{CanonicalForm, FormKey, DEFAULT_DEGREE_CAP};
pub use roots::{given_roots_pair, solve_map_combination};

use crate::algebra::{fmt_rational, Algebra, Element, Rational};
use crate::tensor::{PureTensor, TensorSum};
use crate::{Error, Result};

/// A polynomial over an algebra, stored as its homogeneous components.
///
/// Component `n` is a tensor of rank `n + 1`; the constant term is kept as a
/// single rank-1 tensor. Representations are not unique, so use
/// [`Polynomial::equals_as_map`] to compare polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    algebra: Algebra,
    components: BTreeMap<usize, TensorSum>,
}

impl Polynomial {
    pub fn zero(algebra: &Algebra) -> Self {
        Polynomial {
            algebra: algebra.clone(),
            components: BTreeMap::new(),
        }
    }

    pub fn constant(c: Element) -> Self {
        let mut p = Self::zero(c.algebra());
        p.push_term(PureTensor::new(vec![c]).expect("single factor"));
        p
    }

    /// The identity polynomial `x`.
    pub fn x(algebra: &Algebra) -> Self {
        Self::monomial(vec![algebra.one(), algebra.one()]).expect("non-empty")
    }

    /// `a0·x·a1·x·…·x·ak`.
    pub fn monomial(coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        let term = PureTensor::new(coeffs)?;
        let mut p = Self::zero(term.algebra());
        p.push_term(term);
        Ok(p)
    }

    /// Polynomial with a single homogeneous component.
    pub fn homogeneous(t: TensorSum) -> Self {
        let mut p = Self::zero(t.algebra());
        for term in t.terms() {
            p.push_term(term.clone());
        }
        p
    }

    pub fn from_terms(
        algebra: &Algebra,
        terms: impl IntoIterator<Item = PureTensor>,
    ) -> Result<Self> {
        let mut p = Self::zero(algebra);
        for t in terms {
            algebra.check_same(t.algebra())?;
            p.push_term(t);
        }
        Ok(p)
    }

    /// Adds a pure tensor of rank `n + 1` to the degree-`n` component.
    pub(crate) fn push_term(&mut self, term: PureTensor) {
        if term.is_zero() {
            return;
        }
        let degree = term.rank() - 1;
        let comp = self
            .components
            .entry(degree)
            .or_insert_with(|| TensorSum::zero(&self.algebra, degree + 1));
        if degree == 0 {
            // constants collapse into one term
            let total = comp
                .terms()
                .iter()
                .fold(term.factor(0).clone(), |acc, t| &acc + t.factor(0));
            *comp = TensorSum::zero(&self.algebra, 1);
            if !total.is_zero() {
                comp.push(PureTensor::new(vec![total]).expect("single factor"))
                    .expect("rank 1");
            }
        } else {
            comp.push(term).expect("rank matches degree");
        }
        if comp.is_empty() {
            self.components.remove(&degree);
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Stored components, keyed by degree.
    pub fn components(&self) -> &BTreeMap<usize, TensorSum> {
        &self.components
    }

    pub fn component(&self, degree: usize) -> Option<&TensorSum> {
        self.components.get(&degree)
    }

    pub fn terms(&self) -> impl Iterator<Item = &PureTensor> {
        self.components.values().flat_map(|c| c.terms().iter())
    }

    pub fn constant_term(&self) -> Element {
        self.components
            .get(&0)
            .and_then(|c| c.terms().first())
            .map(|t| t.factor(0).clone())
            .unwrap_or_else(|| self.algebra.zero())
    }

    /// Highest stored degree, whether or not that component vanishes as a map.
    pub fn formal_degree(&self) -> Option<usize> {
        self.components.keys().next_back().copied()
    }

    /// Highest degree whose component is non-zero as a map; `None` for the zero map.
    pub fn degree(&self) -> Result<Option<usize>> {
        for (&n, comp) in self.components.iter().rev() {
            let mut b = FormBuilder::new(&self.algebra, DEFAULT_DEGREE_CAP);
            b.add_block(n, 0, |args| comp.apply_args(None, args))?;
            if !b.finish().is_zero() {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    pub fn evaluate(&self, x: &Element) -> Result<Element> {
        self.algebra.check_same(x.algebra())?;
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &Element) -> Element {
        let mut acc = self.algebra.zero();
        for (&n, comp) in &self.components {
            let args = vec![x.clone(); n];
            acc = &acc + &comp.apply_args(None, &args);
        }
        acc
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.algebra.check_same(&other.algebra)?;
        let mut out = self.clone();
        for t in other.terms() {
            out.push_term(t.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Self::zero(&self.algebra);
        for t in self.terms() {
            out.push_term(t.neg());
        }
        out
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        let mut out = Self::zero(&self.algebra);
        for t in self.terms() {
            out.push_term(t.scale(c));
        }
        out
    }

    /// Product through the star splice of components; needs associativity.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.algebra.check_same(&other.algebra)?;
        self.algebra.require_associative()?;
        let mut out = Self::zero(&self.algebra);
        for a in self.terms() {
            for b in other.terms() {
                out.push_term(a.star(b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut out = Polynomial::constant(self.algebra.one());
        for _ in 0..n {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// `a ∘ p(x)`: each term `u⊗v` of `a` wraps every pure tensor,
    /// `t0⊗…⊗tn ↦ (u·t0)⊗…⊗(tn·v)`.
    pub fn map_compose(a: &TensorSum, p: &Polynomial) -> Result<Polynomial> {
        a.require_rank(2)?;
        a.algebra().check_same(&p.algebra)?;
        p.algebra.require_associative()?;
        let mut out = Self::zero(&p.algebra);
        for uv in a.terms() {
            let (u, v) = (uv.factor(0), uv.factor(1));
            for t in p.terms() {
                let mut factors = t.factors().to_vec();
                let last = factors.len() - 1;
                factors[0] = u * &factors[0];
                factors[last] = &factors[last] * v;
                out.push_term(PureTensor::new(factors)?);
            }
        }
        Ok(out)
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        self.canonical_form_with_cap(DEFAULT_DEGREE_CAP)
    }

    pub fn canonical_form_with_cap(&self, cap: usize) -> Result<CanonicalForm> {
        let mut b = FormBuilder::new(&self.algebra, cap);
        for (&n, comp) in &self.components {
            b.add_block(n, 0, |args| comp.apply_args(None, args))?;
        }
        Ok(b.finish())
    }

    /// Whether the two polynomials define the same map `A → A`.
    pub fn equals_as_map(&self, other: &Polynomial) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.checked_sub(other)?.canonical_form()?.is_zero())
    }

    /// Merges terms that agree in every factor except the first. The result is
    /// the same map with a (usually) shorter representation.
    pub fn simplified(&self) -> Polynomial {
        let mut out = Self::zero(&self.algebra);
        for comp in self.components.values() {
            let mut merged: Vec<PureTensor> = Vec::new();
            for t in comp.terms() {
                if let Some(slot) = merged
                    .iter_mut()
                    .find(|m| m.factors()[1..] == t.factors()[1..])
                {
                    let mut f = slot.factors().to_vec();
                    f[0] = &f[0] + t.factor(0);
                    *slot = PureTensor::new(f).expect("same algebra");
                } else {
                    merged.push(t.clone());
                }
            }
            for t in merged {
                out.push_term(t);
            }
        }
        out
    }
}

/// Renders `a0 x a1 x … an` with real scalars gathered into one coefficient.
pub(crate) fn monomial_text(factors: &[Element]) -> String {
    let mut coef = Rational::one();
    let mut items: Vec<String> = Vec::new();
    let mut pending_x = 0usize;
    let flush_x = |items: &mut Vec<String>, n: &mut usize| {
        match *n {
            0 => {}
            1 => items.push("x".into()),
            k => items.push(format!("x^{k}")),
        }
        *n = 0;
    };
    for (idx, f) in factors.iter().enumerate() {
        if idx > 0 {
            pending_x += 1;
        }
        if f.is_real() {
            coef *= f.re();
            continue;
        }
        flush_x(&mut items, &mut pending_x);
        match f.as_monomial() {
            Some((c, b)) => {
                coef *= c;
                items.push(f.algebra().basis()[b].clone());
            }
            None => {
                // pull a leading minus sign out of the parentheses
                let lead_negative = f
                    .coords()
                    .iter()
                    .find(|c| !c.is_zero())
                    .is_some_and(crate::algebra::is_negative);
                if lead_negative {
                    coef = -coef;
                    items.push(format!("({})", -f));
                } else {
                    items.push(format!("({f})"));
                }
            }
        }
    }
    flush_x(&mut items, &mut pending_x);
    with_coefficient(&coef, &items.concat())
}

pub(crate) fn with_coefficient(coef: &Rational, body: &str) -> String {
    if body.is_empty() {
        return fmt_rational(coef);
    }
    if coef.is_one() {
        body.to_string()
    } else if (-coef).is_one() {
        format!("-{body}")
    } else if coef.is_integer() {
        format!("{}{body}", coef.numer())
    } else {
        format!("{} {body}", fmt_rational(coef))
    }
}

pub(crate) fn join_signed(parts: impl IntoIterator<Item = String>) -> String {
    let mut out = String::new();
    for (idx, s) in parts.into_iter().enumerate() {
        match (idx, s.strip_prefix('-')) {
            (0, _) => out.push_str(&s),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&s);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Terms from highest to lowest degree, e.g. `x^2 - jx - xi - k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self
            .components
            .values()
            .rev()
            .flat_map(|c| c.terms().iter())
            .filter(|t| !(t.rank() == 1 && t.factor(0).is_zero()))
            .map(|t| {
                if t.rank() == 1 {
                    // the constant comes last, so it needs no brackets
                    t.factor(0).to_string()
                } else {
                    monomial_text(t.factors())
                }
            });
        write!(f, "{}", join_signed(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, quaternions};

    fn lin(a: &Element) -> Polynomial {
        Polynomial::x(a.algebra())
            .checked_sub(&Polynomial::constant(a.clone()))
            .unwrap()
    }

    #[test]
    fn product_expansions() {
        let h = quaternions();
        let (i, j, k) = (h.e("i"), h.e("j"), h.e("k"));
        let p = lin(&i).checked_mul(&lin(&j)).unwrap();
        // x^2 - ix - xj + k
        let expected = Polynomial::from_terms(
            &h,
            [
                PureTensor::new(vec![h.one(), h.one(), h.one()]).unwrap(),
                PureTensor::new(vec![-&i, h.one()]).unwrap(),
                PureTensor::new(vec![h.one(), -&j]).unwrap(),
                PureTensor::new(vec![k.clone()]).unwrap(),
            ],
        )
        .unwrap();
        assert!(p.equals_as_map(&expected).unwrap());
        let q = lin(&j).checked_mul(&lin(&i)).unwrap();
        assert!(!p.equals_as_map(&q).unwrap());
        assert_eq!(q.to_string(), "x^2 - jx - xi - k");
        let one = Polynomial::constant(h.one());
        assert!(one.checked_mul(&p).unwrap().equals_as_map(&p).unwrap());
    }

    #[test]
    fn evaluation() {
        let h = quaternions();
        let (i, j, k) = (h.e("i"), h.e("j"), h.e("k"));
        // x^2 - ix - jx - k
        let r = Polynomial::from_terms(
            &h,
            [
                PureTensor::new(vec![h.one(), h.one(), h.one()]).unwrap(),
                PureTensor::new(vec![-&i, h.one()]).unwrap(),
                PureTensor::new(vec![-&j, h.one()]).unwrap(),
                PureTensor::new(vec![-&k]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(r.evaluate(&j).unwrap(), k.scale(&int(-2)));
        assert!(r.evaluate(&i).unwrap().is_zero());
        let c = Polynomial::constant(k.clone());
        assert_eq!(c.evaluate(&i).unwrap(), k);
    }

    #[test]
    fn zero_sum_and_degree() {
        let h = quaternions();
        let j = h.e("j");
        let x = Polynomial::x(&h);
        let diff = x.checked_sub(&x).unwrap();
        assert!(diff.canonical_form().unwrap().is_zero());
        assert_eq!(diff.degree().unwrap(), None);
        // (x^2 - jx) + (-x^2 + jx + 5) is the constant 5
        let a = x
            .pow(2)
            .unwrap()
            .checked_sub(&Polynomial::constant(j.clone()).checked_mul(&x).unwrap())
            .unwrap();
        let five = Polynomial::constant(h.one().scale(&int(5)));
        let b = a.neg().checked_add(&five).unwrap();
        assert!(a.checked_add(&b).unwrap().equals_as_map(&five).unwrap());
        assert_eq!(a.checked_add(&b).unwrap().degree().unwrap(), Some(0));
        assert_eq!(a.checked_add(&b).unwrap().formal_degree(), Some(2));
    }

    #[test]
    fn left_and_right_coefficients_differ() {
        let h = quaternions();
        let ix = Polynomial::monomial(vec![h.e("i"), h.one()]).unwrap();
        let xi = Polynomial::monomial(vec![h.one(), h.e("i")]).unwrap();
        assert_ne!(ix.canonical_form().unwrap(), xi.canonical_form().unwrap());
        let zero_term = Polynomial::homogeneous(TensorSum::zero(&h, 3));
        assert_eq!(
            ix.checked_add(&zero_term)
                .unwrap()
                .canonical_form()
                .unwrap(),
            ix.canonical_form().unwrap()
        );
    }

    #[test]
    fn monomials() {
        let h = quaternions();
        assert!(matches!(Polynomial::monomial(vec![]), Err(Error::Empty)));
        let c = Polynomial::monomial(vec![h.e("k")]).unwrap();
        assert_eq!(c.constant_term(), h.e("k"));
        let x = Polynomial::monomial(vec![h.one(), h.one()]).unwrap();
        let v = Element::from_ints(&h, &[1, 2, 3, 4]).unwrap();
        assert_eq!(x.evaluate(&v).unwrap(), v);
        let m = Polynomial::monomial(vec![h.e("i"), h.e("j"), h.e("k")]).unwrap();
        assert_eq!(
            m.evaluate(&h.e("i")).unwrap(),
            &(&(&(&h.e("i") * &h.e("i")) * &h.e("j")) * &h.e("i")) * &h.e("k")
        );
    }

    #[test]
    fn map_compose_identity_and_constants() {
        let h = quaternions();
        let p = lin(&h.e("i")).checked_mul(&lin(&h.e("j"))).unwrap();
        let id = TensorSum::identity(&h);
        assert!(Polynomial::map_compose(&id, &p)
            .unwrap()
            .equals_as_map(&p)
            .unwrap());
        let left_i = TensorSum::pure(vec![h.e("i"), h.one()]).unwrap();
        let c = Polynomial::map_compose(&left_i, &Polynomial::constant(h.one())).unwrap();
        assert!(c.equals_as_map(&Polynomial::constant(h.e("i"))).unwrap());
    }

    #[test]
    fn degree_cap() {
        let h = quaternions();
        let p = Polynomial::x(&h).pow(7).unwrap();
        assert!(matches!(
            p.canonical_form(),
            Err(Error::DegreeCapExceeded { degree: 7, cap: 6 })
        ));
    }

    #[test]
    fn display_gathers_scalars() {
        let h = quaternions();
        let t = PureTensor::new(vec![h.one().scale(&int(-2)), h.e("j"), h.one()]).unwrap();
        let p = Polynomial::from_terms(&h, [t]).unwrap();
        assert_eq!(p.to_string(), "-2xjx");
        let sq = Polynomial::x(&h).pow(2).unwrap();
        assert_eq!(sq.to_string(), "x^2");
        assert_eq!(Polynomial::zero(&h).to_string(), "0");
    }
}
