//! Structure-constant algebras over the rationals.
//!
//! An [`Algebra`] of dimension `n` is fixed by a basis `e_0, …, e_{n-1}` with
//! `e_0 = 1` and the constants `C_{ij}^k` in `e_i e_j = C_{ij}^k e_k`. Values are
//! cheap to clone and are shared between every [`Element`] of the algebra.

mod element;
mod float;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use element::Element;
pub use float::{sqrt, FloatElement, SquareRoots, FLOAT_TOLERANCE};

use crate::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

struct AlgebraData {
    name: String,
    basis: Vec<String>,
    /// Sparse products: `table[i * dim + j]` lists `(k, C_{ij}^k)` with non-zero constants.
    table: Vec<Vec<(usize, Rational)>>,
    associative: bool,
}

/// A finite-dimensional algebra with a two-sided unit `e_0`.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

impl Algebra {
    /// Builds an algebra from a dense `dim × dim × dim` array of structure
    /// constants indexed `[i][j][k]`.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        constants: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self> {
        let name = name.into();
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("empty basis".into()));
        }
        if basis[0] != "1" {
            return Err(Error::InvalidAlgebra(format!(
                "first basis element must be named \"1\", got {:?}",
                basis[0]
            )));
        }
        let shape_ok = constants.len() == dim
            && constants
                .iter()
                .all(|row| row.len() == dim && row.iter().all(|c| c.len() == dim));
        if !shape_ok {
            return Err(Error::InvalidAlgebra(format!(
                "structure constants must be a {dim}x{dim}x{dim} array"
            )));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for row in &constants {
            for products in row {
                table.push(
                    products
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k, c.clone()))
                        .collect(),
                );
            }
        }
        // e_0 must be a two-sided unit.
        for j in 0..dim {
            for k in 0..dim {
                let delta = if j == k {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                if constants[0][j][k] != delta || constants[j][0][k] != delta {
                    return Err(Error::InvalidAlgebra(format!(
                        "e_0 is not a two-sided unit (fails at e_{j}, component {k})"
                    )));
                }
            }
        }
        let mut data = AlgebraData {
            name,
            basis,
            table,
            associative: true,
        };
        data.associative = check_associative(&data);
        Ok(Algebra(Arc::new(data)))
    }

    /// Builds an algebra from a table of signed basis products,
    /// `products[i][j] = (sign, k)` meaning `e_i e_j = sign · e_k`.
    pub fn from_signed_table(
        name: impl Into<String>,
        basis: Vec<String>,
        products: &[Vec<(i64, usize)>],
    ) -> Result<Self> {
        let dim = basis.len();
        let mut constants = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for (i, row) in products.iter().enumerate() {
            for (j, &(sign, k)) in row.iter().enumerate() {
                if i >= dim || j >= dim || k >= dim {
                    return Err(Error::InvalidAlgebra("product table out of range".into()));
                }
                constants[i][j][k] = int(sign);
            }
        }
        Self::new(name, basis, constants)
    }

    /// Doubles an algebra with the Cayley–Dickson rule
    /// `(a, b)(c, d) = (ac − d̄b, da + bc̄)`, where the new unit is `(0, 1)`.
    ///
    /// The basis of the result is `e_0, …, e_{n-1}` followed by the products
    /// `e_i · u` of the old basis with the new unit `u`; those are named by
    /// appending `new_unit` to the old name (`"1"` becomes `new_unit` itself).
    pub fn cayley_dickson(&self, name: impl Into<String>, new_unit: &str) -> Result<Self> {
        let n = self.dim();
        let mut basis: Vec<String> = self.basis().to_vec();
        for b in self.basis() {
            basis.push(if b == "1" {
                new_unit.to_string()
            } else {
                format!("{b}{new_unit}")
            });
        }
        let half = |idx: usize| -> (Element, Element) {
            let zero = Element::zero(self);
            if idx < n {
                (Element::basis(self, idx), zero)
            } else {
                (zero, Element::basis(self, idx - n))
            }
        };
        let dim = 2 * n;
        let mut constants = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for p in 0..dim {
            for q in 0..dim {
                let (a, b) = half(p);
                let (c, d) = half(q);
                let first = &(&a * &c) - &(&d.conj() * &b);
                let second = &(&d * &a) + &(&b * &c.conj());
                for k in 0..n {
                    constants[p][q][k] = first.coord(k).clone();
                    constants[p][q][n + k] = second.coord(k).clone();
                }
            }
        }
        Self::new(name, basis, constants)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.0.basis
    }

    /// Index of a basis element by name.
    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.0.basis.iter().position(|b| b == name)
    }

    /// Non-zero structure constants `(k, C_{ij}^k)` of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.0.table[i * self.dim() + j]
    }

    /// `C_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.product(i, j)
            .iter()
            .find(|(kk, _)| *kk == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Whether `(e_i e_j) e_k = e_i (e_j e_k)` for every basis triple.
    pub fn is_associative(&self) -> bool {
        self.0.associative
    }

    pub(crate) fn require_associative(&self) -> Result<()> {
        if self.is_associative() {
            Ok(())
        } else {
            Err(Error::NonAssociative(self.name().to_string()))
        }
    }

    pub(crate) fn check_same(&self, other: &Algebra) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch {
                left: self.name().to_string(),
                right: other.name().to_string(),
            })
        }
    }

    pub fn one(&self) -> Element {
        Element::one(self)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self)
    }

    /// Basis element by name; panics on an unknown name.
    pub fn e(&self, name: &str) -> Element {
        let idx = self
            .basis_index(name)
            .unwrap_or_else(|| panic!("unknown basis element {name:?} in {}", self.name()));
        Element::basis(self, idx)
    }
}

fn check_associative(data: &AlgebraData) -> bool {
    let dim = data.basis.len();
    let prod = |i: usize, j: usize| &data.table[i * dim + j];
    for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let mut left = vec![Rational::zero(); dim];
                for (p, cab) in prod(a, b) {
                    for (k, cpc) in prod(*p, c) {
                        left[*k] += cab * cpc;
                    }
                }
                let mut right = vec![Rational::zero(); dim];
                for (q, cbc) in prod(b, c) {
                    for (k, caq) in prod(a, *q) {
                        right[*k] += cbc * caq;
                    }
                }
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.basis == other.0.basis && self.0.table == other.0.table)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({})", self.0.name)
    }
}

/// The real numbers as a one-dimensional algebra.
pub fn reals() -> Algebra {
    static CELL: OnceLock<Algebra> = OnceLock::new();
    CELL.get_or_init(|| {
        Algebra::from_signed_table("R", vec!["1".into()], &[vec![(1, 0)]]).expect("valid table")
    })
    .clone()
}

/// The complex numbers, obtained by doubling the reals.
pub fn complex() -> Algebra {
    static CELL: OnceLock<Algebra> = OnceLock::new();
    CELL.get_or_init(|| reals().cayley_dickson("C", "i").expect("valid doubling"))
        .clone()
}

/// The quaternions with basis `(1, i, j, k)`, `i² = j² = k² = −1` and
/// `ij = k`, `jk = i`, `ki = j`.
pub fn quaternions() -> Algebra {
    static CELL: OnceLock<Algebra> = OnceLock::new();
    CELL.get_or_init(|| {
        let basis = ["1", "i", "j", "k"].map(String::from).to_vec();
        let table = vec![
            vec![(1, 0), (1, 1), (1, 2), (1, 3)],
            vec![(1, 1), (-1, 0), (1, 3), (-1, 2)],
            vec![(1, 2), (-1, 3), (-1, 0), (1, 1)],
            vec![(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        Algebra::from_signed_table("H", basis, &table).expect("valid table")
    })
    .clone()
}

/// The octonions with basis `(1, i, j, k, l, il, jl, kl)`: the Cayley–Dickson
/// double of the quaternions with new unit `l`. In this table `i(jl) = −kl`.
pub fn octonions() -> Algebra {
    static CELL: OnceLock<Algebra> = OnceLock::new();
    CELL.get_or_init(|| {
        quaternions()
            .cayley_dickson("O", "l")
            .expect("valid doubling")
    })
    .clone()
}

/// Looks up a preset by its short name (`R`, `C`, `H`, `O`).
pub fn preset(name: &str) -> Option<Algebra> {
    match name {
        "R" => Some(reals()),
        "C" => Some(complex()),
        "H" => Some(quaternions()),
        "O" => Some(octonions()),
        _ => None,
    }
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_products() {
        let h = quaternions();
        assert_eq!(&h.e("i") * &h.e("j"), h.e("k"));
        assert_eq!(&h.e("j") * &h.e("k"), h.e("i"));
        assert_eq!(&h.e("k") * &h.e("j"), -h.e("i"));
        assert!(h.is_associative());
    }

    #[test]
    fn doubled_complex_is_quaternions() {
        let doubled = complex().cayley_dickson("H2", "j").unwrap();
        // basis (1, i, j, ij) with ij playing the role of k
        assert_eq!(doubled.basis(), &["1", "i", "j", "ij"]);
        let h = quaternions();
        for a in 0..4 {
            for b in 0..4 {
                for k in 0..4 {
                    assert_eq!(
                        doubled.structure_constant(a, b, k),
                        h.structure_constant(a, b, k)
                    );
                }
            }
        }
    }

    #[test]
    fn octonion_table() {
        let o = octonions();
        assert_eq!(o.basis(), &["1", "i", "j", "k", "l", "il", "jl", "kl"]);
        assert_eq!(&o.e("i") * &o.e("jl"), -o.e("kl"));
        assert_eq!(&o.e("j") * &o.e("j"), -o.one());
        assert_eq!(&o.e("1") * &o.e("il"), o.e("il"));
        assert_eq!(&o.e("i") * &o.e("l"), o.e("il"));
        assert!(!o.is_associative());
    }

    #[test]
    fn rejects_missing_unit() {
        let basis = vec!["1".to_string(), "e".to_string()];
        let err =
            Algebra::from_signed_table("bad", basis, &[vec![(1, 0), (1, 0)], vec![(1, 1), (1, 0)]]);
        assert!(matches!(err, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn rejects_misnamed_unit() {
        let err = Algebra::from_signed_table("bad", vec!["e".into()], &[vec![(1, 0)]]);
        assert!(matches!(err, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rational(&rat(1, 2)), "1/2");
        assert_eq!(fmt_rational(&rat(-4, 2)), "-2");
    }
}
