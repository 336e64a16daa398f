//! Left-sided polynomials `p(x) = Σ p_i x^i`.
//!
//! Every coefficient is written to the left of the power of `x`. The product
//! multiplies coefficients as if `x` commuted with the algebra, so it is not
//! compatible with evaluation: a root of the right factor need not be a root
//! of the product.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::poly::{join_signed, monomial_text, Polynomial};
use crate::tensor::{PureTensor, SolutionSet};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeftPolynomial {
    algebra: Algebra,
    coeffs: Vec<Element>,
}

impl LeftPolynomial {
    /// Coefficients from the constant term up; trailing zeros are dropped.
    pub fn new(algebra: &Algebra, coeffs: Vec<Element>) -> Result<Self> {
        for c in &coeffs {
            algebra.check_same(c.algebra())?;
        }
        let mut p = LeftPolynomial {
            algebra: algebra.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    /// `x − a`.
    pub fn monic_linear(a: &Element) -> Self {
        LeftPolynomial::new(a.algebra(), vec![-a, a.algebra().one()]).expect("same algebra")
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Element::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Index of the last non-zero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn left_eval(&self, x: &Element) -> Result<Element> {
        self.algebra.check_same(x.algebra())?;
        let mut acc = self.algebra.zero();
        let mut power = self.algebra.one();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                power = &power * x;
            }
            acc = &acc + &(c * &power);
        }
        Ok(acc)
    }

    pub fn checked_add(&self, other: &LeftPolynomial) -> Result<LeftPolynomial> {
        self.algebra.check_same(&other.algebra)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.algebra.zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        LeftPolynomial::new(&self.algebra, coeffs)
    }

    /// Coefficient `j` of the product is `Σ_{i ≤ j} p_i r_{j−i}`.
    pub fn left_mul(&self, other: &LeftPolynomial) -> Result<LeftPolynomial> {
        self.algebra.check_same(&other.algebra)?;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return LeftPolynomial::new(&self.algebra, Vec::new());
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![self.algebra.zero(); n];
        for (i, p) in self.coeffs.iter().enumerate() {
            for (j, r) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(p * r);
            }
        }
        LeftPolynomial::new(&self.algebra, coeffs)
    }

    /// Reads a tensor polynomial whose every component acts as `c x^i`.
    pub fn from_polynomial(p: &Polynomial) -> Result<LeftPolynomial> {
        let algebra = p.algebra();
        let top = p.formal_degree().unwrap_or(0);
        let mut coeffs = vec![algebra.zero(); top + 1];
        for t in p.terms() {
            let value = t.factors().iter().fold(algebra.one(), |acc, f| &acc * f);
            let d = t.rank() - 1;
            coeffs[d] = &coeffs[d] + &value;
        }
        let left = LeftPolynomial::new(algebra, coeffs)?;
        if !left.to_polynomial().equals_as_map(p)? {
            return Err(Error::NotLeftSided(p.to_string()));
        }
        Ok(left)
    }

    /// The same map as a tensor polynomial: `p_i x^i` becomes `p_i ⊗ 1 ⊗ … ⊗ 1`.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero(&self.algebra);
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut factors = vec![c.clone()];
            factors.extend(std::iter::repeat_n(self.algebra.one(), i));
            out.push_term(PureTensor::new(factors).expect("non-empty"));
        }
        out
    }
}

impl fmt::Display for LeftPolynomial {
    /// Highest power first, e.g. `x^2 - (i + j)x + k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = self.algebra.one();
        let parts = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                if i == 0 {
                    return c.display_factor(true);
                }
                let mut factors = vec![c.clone()];
                factors.extend(std::iter::repeat_n(one.clone(), i));
                monomial_text(&factors)
            });
        write!(f, "{}", join_signed(parts))
    }
}

/// Solves `a1 x + a0 = 0` for the left-sided linear polynomial.
pub fn solve_left_linear(a1: &Element, a0: &Element) -> Result<SolutionSet> {
    a1.algebra().check_same(a0.algebra())?;
    linear_cases(a1, a0, || Ok(&a1.inverse()? * &-a0))
}

/// Solves `x a1 + a0 = 0`, the right-sided mirror of [`solve_left_linear`].
pub fn solve_right_linear(a1: &Element, a0: &Element) -> Result<SolutionSet> {
    a1.algebra().check_same(a0.algebra())?;
    linear_cases(a1, a0, || Ok(&-a0 * &a1.inverse()?))
}

fn linear_cases(
    a1: &Element,
    a0: &Element,
    unique: impl FnOnce() -> Result<Element>,
) -> Result<SolutionSet> {
    let algebra = a1.algebra();
    if !a1.is_zero() {
        return Ok(SolutionSet::Unique(unique()?));
    }
    if !a0.is_zero() {
        return Ok(SolutionSet::Empty);
    }
    Ok(SolutionSet::Affine {
        particular: algebra.zero(),
        kernel: (0..algebra.dim())
            .map(|i| Element::basis(algebra, i))
            .collect(),
    })
}

/// Outcome of testing the factorisation `P(x) = L(h x h⁻¹) R(x)` at one point.
#[derive(Clone, Debug)]
pub struct WeierstrassReport {
    pub left: LeftPolynomial,
    pub right: LeftPolynomial,
    pub product: LeftPolynomial,
    /// `h = R(i)`.
    pub h: Element,
    /// The claimed factorisation as a tensor polynomial.
    pub claimed: Polynomial,
    pub point: Element,
    pub product_value: Element,
    pub claimed_value: Element,
    pub differs: bool,
}

/// Builds `L = x − i`, `R = x − j`, `P = L ∗ R`, and compares `P` with
/// `(h x h⁻¹ − i)(x − j)` at `x = i + j`, where `h = R(i)`.
pub fn weierstrass_step_check() -> Result<WeierstrassReport> {
    let h_alg = crate::algebra::quaternions();
    let (i, j) = (h_alg.e("i"), h_alg.e("j"));
    let left = LeftPolynomial::monic_linear(&i);
    let right = LeftPolynomial::monic_linear(&j);
    let product = left.left_mul(&right)?;
    let h = right.left_eval(&i)?;
    let h_inv = h.inverse()?;
    let twisted = Polynomial::monomial(vec![h.clone(), h_inv.clone()])?
        .checked_sub(&Polynomial::constant(i.clone()))?;
    let claimed = twisted.checked_mul(&crate::division::monic_divisor(&j))?;
    let point = &i + &j;
    let product_value = product.left_eval(&point)?;
    // L(h x h⁻¹) · R(x), computed factor by factor
    let x_tilde = &(&h * &point) * &h_inv;
    let claimed_value = &left.left_eval(&x_tilde)? * &right.left_eval(&point)?;
    debug_assert_eq!(claimed_value, claimed.evaluate(&point)?);
    Ok(WeierstrassReport {
        differs: product_value != claimed_value,
        left,
        right,
        product,
        h,
        claimed,
        point,
        product_value,
        claimed_value,
    })
}
