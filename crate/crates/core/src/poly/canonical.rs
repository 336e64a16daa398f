//! Functional normal forms for polynomial maps.
//!
//! A homogeneous polynomial of degree `n` is the diagonal of an `n`-linear
//! map. Over a field of characteristic zero the diagonal determines the
//! symmetrisation of that map, so two polynomials agree as maps exactly when
//! their symmetrised coefficient arrays agree. The arrays are computed by
//! evaluating on every tuple of basis elements and averaging each entry over
//! the rearrangements of its index tuple.
//!
//! Extra *slots* (linear arguments that are not symmetrised) let the same
//! machinery compare quotient tensors such as `q(x) ∘ y`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Algebra, Element, Rational};
use crate::{Error, Result};

/// Highest degree accepted by default when building canonical forms.
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// Index of one symmetrised entry: degree, sorted variable indices, slot indices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FormKey {
    pub degree: usize,
    pub vars: Vec<usize>,
    pub slots: Vec<usize>,
}

/// Symmetrised coefficient arrays of a polynomial map, one output vector of
/// length `dim` per [`FormKey`]. All-zero entries are omitted, so equality of
/// forms is equality of maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalForm {
    dim: usize,
    entries: BTreeMap<FormKey, Vec<Rational>>,
}

impl CanonicalForm {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&FormKey, &Vec<Rational>)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry for a variable index tuple in any order.
    pub fn get(&self, degree: usize, vars: &[usize], slots: &[usize]) -> Option<&[Rational]> {
        let mut sorted = vars.to_vec();
        sorted.sort_unstable();
        self.entries
            .get(&FormKey {
                degree,
                vars: sorted,
                slots: slots.to_vec(),
            })
            .map(Vec::as_slice)
    }

    /// Highest degree with a non-zero entry.
    pub fn degree(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.degree).max()
    }
}

pub(crate) struct FormBuilder {
    basis: Vec<Element>,
    cap: usize,
    entries: BTreeMap<FormKey, Vec<Rational>>,
}

impl FormBuilder {
    pub fn new(algebra: &Algebra, cap: usize) -> Self {
        FormBuilder {
            basis: (0..algebra.dim())
                .map(|i| Element::basis(algebra, i))
                .collect(),
            cap,
            entries: BTreeMap::new(),
        }
    }

    /// Adds a block that is homogeneous of `degree` in the variable and
    /// linear in each of `slots` extra arguments. `eval` receives basis
    /// elements for the variable occurrences followed by the slots.
    pub fn add_block(
        &mut self,
        degree: usize,
        slots: usize,
        mut eval: impl FnMut(&[Element]) -> Element,
    ) -> Result<()> {
        if degree > self.cap {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: self.cap,
            });
        }
        let dim = self.basis.len();
        let width = degree + slots;
        let mut buckets: BTreeMap<FormKey, (Vec<Rational>, usize)> = BTreeMap::new();
        let mut idx = vec![0usize; width];
        let mut args: Vec<Element> = vec![self.basis[0].clone(); width];
        loop {
            for (a, &i) in args.iter_mut().zip(&idx) {
                *a = self.basis[i].clone();
            }
            let value = eval(&args);
            let mut vars = idx[..degree].to_vec();
            vars.sort_unstable();
            let key = FormKey {
                degree,
                vars,
                slots: idx[degree..].to_vec(),
            };
            let bucket = buckets
                .entry(key)
                .or_insert_with(|| (vec![Rational::zero(); dim], 0));
            for (acc, c) in bucket.0.iter_mut().zip(value.coords()) {
                *acc += c;
            }
            bucket.1 += 1;
            // odometer increment
            let mut pos = width;
            loop {
                if pos == 0 {
                    return self.merge(buckets);
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < dim {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn merge(&mut self, buckets: BTreeMap<FormKey, (Vec<Rational>, usize)>) -> Result<()> {
        let dim = self.basis.len();
        for (key, (sum, count)) in buckets {
            let n = Rational::from_integer(count.into());
            let entry = self
                .entries
                .entry(key)
                .or_insert_with(|| vec![Rational::zero(); dim]);
            for (acc, c) in entry.iter_mut().zip(sum) {
                *acc += c / &n;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> CanonicalForm {
        CanonicalForm {
            dim: self.basis.len(),
            entries: self
                .entries
                .into_iter()
                .filter(|(_, v)| v.iter().any(|c| !c.is_zero()))
                .collect(),
        }
    }
}
