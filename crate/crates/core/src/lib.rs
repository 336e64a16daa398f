//! Exact polynomials over non-commutative finite-dimensional algebras.
//!
//! A polynomial of degree `n` over an algebra `A` is stored as a sum of
//! homogeneous components, each of which is a tensor in `A^{(n+1)⊗}`. The pure
//! tensor `a0 ⊗ a1 ⊗ … ⊗ an` evaluates to `a0·x·a1·x·…·x·an`, so coefficients
//! may sit anywhere between the occurrences of the variable.
//!
//! The crate provides:
//!
//! * [`algebra`]: exact rationals, structure-constant algebras, quaternion and
//!   octonion presets, and quaternion square roots.
//! * [`tensor`]: tensors as (poly)linear maps, their matrices, and a complete
//!   classification of the solutions of `a ∘ x = b`.
//! * [`poly`]: polynomial arithmetic, functional equality, and polynomials with
//!   prescribed roots.
//! * [`division`]: division with remainder by linear divisors and chains of
//!   linear factors.
//! * [`ore`]: left-sided polynomials with coefficients written on the left.
//! * [`nonassoc`]: bracketed polynomials and their division over octonions.
//! * [`expr`] and [`cli`]: the expression language and the command-line front end.
//!
//! ```
//! use ncpoly::division::divide_monic;
//! use ncpoly::expr::parse_value;
//! use ncpoly::quaternions;
//!
//! let h = quaternions();
//! let r = parse_value("x^2 - ix - jx - k", &h)?.into_polynomial()?;
//! let chain = divide_monic(&r, &h.e("j"))?;
//! assert_eq!(chain.remainder().to_string(), "-2k");
//! # Ok::<(), ncpoly::Error>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod division;
mod error;
pub mod expr;
pub mod linalg;
pub mod nonassoc;
pub mod ore;
pub mod poly;
pub mod tensor;

pub use algebra::{octonions, quaternions, Algebra, Element, Rational};
pub use error::{Error, Result};
pub use poly::Polynomial;
pub use tensor::{PureTensor, SolutionSet, TensorSum};
