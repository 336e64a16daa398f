//! Floating-point elements, used only for square roots.

use std::fmt;

use num_traits::Signed;

use super::{rational_to_f64, Algebra, Element, Rational};
use crate::{Error, Result};

/// Absolute per-coordinate tolerance for comparing [`FloatElement`]s.
pub const FLOAT_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct FloatElement {
    algebra: Algebra,
    coords: Vec<f64>,
}

impl FloatElement {
    pub fn new(algebra: &Algebra, coords: Vec<f64>) -> Self {
        assert_eq!(coords.len(), algebra.dim(), "coordinate count");
        FloatElement {
            algebra: algebra.clone(),
            coords,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn mul(&self, other: &FloatElement) -> FloatElement {
        assert_eq!(self.algebra, other.algebra, "algebra mismatch");
        let dim = self.algebra.dim();
        let mut coords = vec![0.0; dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in self.algebra.product(i, j) {
                    coords[*k] += self.coords[i] * other.coords[j] * rational_to_f64(c);
                }
            }
        }
        FloatElement::new(&self.algebra, coords)
    }

    pub fn neg(&self) -> FloatElement {
        FloatElement::new(&self.algebra, self.coords.iter().map(|c| -c).collect())
    }

    /// Largest coordinate difference.
    pub fn max_abs_diff(&self, other: &FloatElement) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &FloatElement) -> bool {
        self.algebra == other.algebra && self.max_abs_diff(other) < FLOAT_TOLERANCE
    }
}

impl From<&Element> for FloatElement {
    fn from(e: &Element) -> Self {
        FloatElement::new(
            e.algebra(),
            e.coords().iter().map(rational_to_f64).collect(),
        )
    }
}

impl fmt::Display for FloatElement {
    /// Coordinates printed with 12 significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coords.iter().zip(self.algebra.basis()) {
            if *c == 0.0 {
                continue;
            }
            let mag = format_sig(c.abs());
            let term = if name == "1" {
                mag
            } else {
                format!("{mag}{name}")
            };
            if first {
                if *c < 0.0 {
                    write!(f, "-")?;
                }
                write!(f, "{term}")?;
                first = false;
            } else {
                write!(f, " {} {term}", if *c < 0.0 { '-' } else { '+' })?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn format_sig(v: f64) -> String {
    let s = format!("{:.*e}", 11, v);
    // normalise through f64 parsing to drop trailing zeros of the mantissa
    let parsed: f64 = s.parse().unwrap_or(v);
    let plain = format!("{parsed}");
    if plain.len() <= 20 {
        plain
    } else {
        s
    }
}

/// Solutions of `x² = a` in the quaternions.
#[derive(Clone, Debug, PartialEq)]
pub enum SquareRoots {
    /// Two roots `x` and `−x`; occurs whenever the root has non-zero real part.
    Pair(FloatElement, FloatElement),
    /// `a = 0`: the single root `0` with multiplicity two.
    DoubleZero,
    /// `a` real and negative: every purely imaginary `x` with `|x|² = −a`.
    Sphere { radius_sq: Rational },
}

impl SquareRoots {
    pub fn roots(&self) -> Vec<FloatElement> {
        match self {
            SquareRoots::Pair(a, b) => vec![a.clone(), b.clone()],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for SquareRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareRoots::Pair(a, b) => write!(f, "x = {a}\nx = {b}"),
            SquareRoots::DoubleZero => write!(f, "x = 0 (multiplicity 2)"),
            SquareRoots::Sphere { radius_sq } => write!(
                f,
                "x in Im H with |x| = {} (|x|^2 = {})",
                format_sig(rational_to_f64(radius_sq).sqrt()),
                super::fmt_rational(radius_sq)
            ),
        }
    }
}

/// Square roots of a quaternion.
///
/// For a root with non-zero real part the closed form is
/// `x0 = √((|a| + Re a)/2)`, `x = ±(x0 + Im a / (2 x0))`.
pub fn sqrt(a: &Element) -> Result<SquareRoots> {
    let h = a.algebra();
    if h.dim() != 4 || h.basis() != ["1", "i", "j", "k"] || !h.is_associative() {
        return Err(Error::WrongAlgebra {
            required: "the quaternions",
            algebra: h.name().to_string(),
        });
    }
    if a.is_zero() {
        return Ok(SquareRoots::DoubleZero);
    }
    let re = a.re();
    if a.is_real() && re.is_negative() {
        return Ok(SquareRoots::Sphere { radius_sq: -re });
    }
    let f = FloatElement::from(a);
    let norm = a.norm_sq();
    let modulus = rational_to_f64(&norm).sqrt();
    let x0 = ((modulus + rational_to_f64(&re)) / 2.0).sqrt();
    let mut coords = vec![x0];
    coords.extend(f.coords()[1..].iter().map(|c| c / (2.0 * x0)));
    let root = FloatElement::new(h, coords);
    let other = root.neg();
    Ok(SquareRoots::Pair(root, other))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, octonions, quaternions};

    #[test]
    fn sqrt_of_i() {
        let h = quaternions();
        let roots = sqrt(&h.e("i")).unwrap().roots();
        let s = 1.0 / 2f64.sqrt();
        let expected = FloatElement::new(&h, vec![s, s, 0.0, 0.0]);
        assert!(roots[0].approx_eq(&expected));
        assert!(roots[1].approx_eq(&expected.neg()));
    }

    #[test]
    fn sqrt_of_zero_and_negative() {
        let h = quaternions();
        assert_eq!(sqrt(&h.zero()).unwrap(), SquareRoots::DoubleZero);
        assert_eq!(
            sqrt(&-h.one()).unwrap(),
            SquareRoots::Sphere { radius_sq: int(1) }
        );
    }

    #[test]
    fn sqrt_of_positive_real() {
        let h = quaternions();
        let roots = sqrt(&h.one().scale(&int(4))).unwrap().roots();
        assert!(roots[0].approx_eq(&FloatElement::new(&h, vec![2.0, 0.0, 0.0, 0.0])));
    }

    #[test]
    fn sqrt_rejects_octonions() {
        assert!(matches!(
            sqrt(&octonions().e("i")),
            Err(Error::WrongAlgebra { .. })
        ));
    }

    #[test]
    fn twelve_digit_display() {
        let h = quaternions();
        let s = 1.0 / 2f64.sqrt();
        let e = FloatElement::new(&h, vec![s, -s, 0.0, 0.0]);
        assert_eq!(e.to_string(), "0.707106781187 - 0.707106781187i");
    }
}
