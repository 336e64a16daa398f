use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_rational, is_negative, Algebra, Rational};
use crate::linalg::{LinearSolution, Matrix};
use crate::{Error, Result};

/// An element `x = x^i e_i` of an [`Algebra`].
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    algebra: Algebra,
    coords: Vec<Rational>,
}

impl Element {
    pub fn new(algebra: &Algebra, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} coordinates, got {}",
                algebra.dim(),
                coords.len()
            )));
        }
        Ok(Element {
            algebra: algebra.clone(),
            coords,
        })
    }

    pub fn from_ints(algebra: &Algebra, coords: &[i64]) -> Result<Self> {
        Self::new(algebra, coords.iter().map(|&c| super::int(c)).collect())
    }

    pub fn zero(algebra: &Algebra) -> Self {
        Element {
            algebra: algebra.clone(),
            coords: vec![Rational::zero(); algebra.dim()],
        }
    }

    pub fn one(algebra: &Algebra) -> Self {
        Self::scalar(algebra, Rational::one())
    }

    pub fn scalar(algebra: &Algebra, value: Rational) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[0] = value;
        e
    }

    pub fn basis(algebra: &Algebra, index: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.coords[index] = Rational::one();
        e
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, index: usize) -> &Rational {
        &self.coords[index]
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// True when every coordinate except the unit coordinate vanishes.
    pub fn is_real(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    /// Real part `x^0`.
    pub fn re(&self) -> Rational {
        self.coords[0].clone()
    }

    /// Imaginary part `x − x^0`.
    pub fn im(&self) -> Element {
        let mut e = self.clone();
        e.coords[0] = Rational::zero();
        e
    }

    /// Conjugate: the unit coordinate is kept, the others change sign.
    pub fn conj(&self) -> Element {
        let mut e = -self;
        e.coords[0] = self.coords[0].clone();
        e
    }

    /// Sum of squared coordinates.
    pub fn norm_sq(&self) -> Rational {
        self.coords
            .iter()
            .fold(Rational::zero(), |acc, c| acc + c * c)
    }

    pub fn scale(&self, factor: &Rational) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.add_unchecked(&-other))
    }

    /// Product through the structure constants, `(xy)^k = x^i y^j C_{ij}^k`.
    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Element) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn mul_unchecked(&self, other: &Element) -> Element {
        let dim = self.algebra.dim();
        let mut coords = vec![Rational::zero(); dim];
        for (i, xi) in self.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in other.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in self.algebra.product(i, j) {
                    coords[*k] += &xy * c;
                }
            }
        }
        Element {
            algebra: self.algebra.clone(),
            coords,
        }
    }

    /// Two-sided inverse. In composition algebras this is `x̄ / |x|²`; other
    /// algebras fall back to solving `x · y = 1` exactly.
    pub fn inverse(&self) -> Result<Element> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let candidate = self.conj().scale(&n.recip());
        let one = Element::one(&self.algebra);
        if &candidate * self == one && self * &candidate == one {
            return Ok(candidate);
        }
        let dim = self.algebra.dim();
        let left = Matrix::from_fn(dim, dim, |row, col| {
            (self * &Element::basis(&self.algebra, col)).coords[row].clone()
        });
        match left.solve(one.coords()) {
            LinearSolution::Unique(y) => {
                let y = Element::new(&self.algebra, y)?;
                if &y * self == one {
                    Ok(y)
                } else {
                    Err(Error::NotInvertible(self.to_string()))
                }
            }
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Formats the element; multi-term elements are wrapped in parentheses
    /// when `wrap` is set.
    pub fn display_factor(&self, wrap: bool) -> String {
        let s = self.to_string();
        let nonzero = self.coords.iter().filter(|c| !c.is_zero()).count();
        if wrap && nonzero > 1 {
            format!("({s})")
        } else {
            s
        }
    }

    /// `Some((coefficient, basis index))` when the element is a multiple of a single basis element.
    pub(crate) fn as_monomial(&self) -> Option<(Rational, usize)> {
        let mut found = None;
        for (idx, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((c.clone(), idx));
            }
        }
        found
    }
}

fn coefficient_text(c: &Rational, name: &str) -> String {
    if name == "1" {
        return fmt_rational(c);
    }
    if c.is_one() {
        name.to_string()
    } else if (-c).is_one() {
        format!("-{name}")
    } else if c.is_integer() {
        format!("{}{name}", c.numer())
    } else {
        format!("{} {name}", fmt_rational(c))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coords.iter().zip(self.algebra.basis()) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", coefficient_text(c, name))?;
                first = false;
            } else if is_negative(c) {
                write!(f, " - {}", coefficient_text(&-c, name))?;
            } else {
                write!(f, " + {}", coefficient_text(c, name))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.algebra.name(), self)
    }
}

// Operator impls panic when the operands live in different algebras; the
// `checked_*` methods report that case as an error instead.

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("algebra mismatch")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("algebra mismatch")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("algebra mismatch")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            algebra: self.algebra.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $method(self, rhs: &Element) -> Element {
                (&self).$method(rhs)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
