//! Chains of linear factors: `r(x) = s0 + K ∘ (x − a1, …, x − am)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{divide_monic, render_slotted, QuotientChain};
use crate::algebra::{Algebra, Element, Rational};
use crate::poly::{CanonicalForm, FormBuilder, Polynomial, DEFAULT_DEGREE_CAP};
use crate::tensor::PureTensor;
use crate::{Error, Result};

/// A core tensor applied to several linear divisor values.
///
/// A core term `u0 ⊗ … ⊗ u_h ⊗ d1 ⊗ … ⊗ dm` acts as
/// `(u0·x·…·x·u_h)·y1·d1·y2·d2·…·ym·dm` with `yt = x − at`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorChain {
    algebra: Algebra,
    remainders: Vec<Element>,
    roots: Vec<Element>,
    core: Vec<PureTensor>,
}

impl FactorChain {
    /// Builds a chain from core terms; each term has rank `h + 1 + roots.len()`.
    pub fn from_core(
        remainders: Vec<Element>,
        roots: Vec<Element>,
        core: Vec<PureTensor>,
    ) -> Result<Self> {
        let algebra = roots.first().ok_or(Error::Empty)?.algebra().clone();
        for e in remainders.iter().chain(&roots) {
            algebra.check_same(e.algebra())?;
        }
        for t in &core {
            algebra.check_same(t.algebra())?;
            if t.rank() < roots.len() + 1 {
                return Err(Error::RankMismatch {
                    expected: roots.len() + 1,
                    actual: t.rank(),
                });
            }
        }
        Ok(FactorChain {
            algebra,
            remainders,
            roots,
            core: core.into_iter().filter(|t| !t.is_zero()).collect(),
        })
    }

    pub(crate) fn from_quotient(chain: &QuotientChain, root: &Element) -> Self {
        FactorChain {
            algebra: chain.algebra().clone(),
            remainders: vec![chain.remainder().clone()],
            roots: vec![root.clone()],
            core: chain
                .parts()
                .iter()
                .flat_map(|p| p.terms().iter().cloned())
                .collect(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// Remainder of each division stage, first stage first.
    pub fn remainders(&self) -> &[Element] {
        &self.remainders
    }

    /// The roots `a1, …, am` in slot order.
    pub fn roots(&self) -> &[Element] {
        &self.roots
    }

    pub fn core(&self) -> &[PureTensor] {
        &self.core
    }

    /// The linear factors `x − at` in slot order.
    pub fn factors(&self) -> Vec<Polynomial> {
        self.roots.iter().map(super::monic_divisor).collect()
    }

    fn total_remainder(&self) -> Element {
        self.remainders
            .iter()
            .fold(self.algebra.zero(), |acc, r| &acc + r)
    }

    /// `K ∘ (y1, …, ym)` at a given `x`.
    pub fn apply_core(&self, x: &Element, ys: &[Element]) -> Result<Element> {
        if ys.len() != self.roots.len() {
            return Err(Error::ArityMismatch {
                expected: self.roots.len(),
                actual: ys.len(),
            });
        }
        let m = self.roots.len();
        let mut acc = self.algebra.zero();
        for t in &self.core {
            let h = t.rank() - 1 - m;
            let mut args = vec![x.clone(); h];
            args.extend_from_slice(ys);
            acc = &acc + &t.apply_unchecked(None, &args);
        }
        Ok(acc)
    }

    /// `Σ remainders + K ∘ (x − a1, …, x − am)`.
    pub fn evaluate(&self, x: &Element) -> Result<Element> {
        self.algebra.check_same(x.algebra())?;
        let ys: Vec<Element> = self.roots.iter().map(|a| x - a).collect();
        Ok(&self.total_remainder() + &self.apply_core(x, &ys)?)
    }

    /// Expands every divisor slot into `x − at`.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        let m = self.roots.len();
        let mut out = Polynomial::constant(self.total_remainder());
        for t in &self.core {
            let f = t.factors();
            let h = f.len() - 1 - m;
            for choice in 0..(1usize << m) {
                let mut g = f[..=h].to_vec();
                for (s, root) in self.roots.iter().enumerate() {
                    let d = &f[h + 1 + s];
                    if choice & (1 << s) == 0 {
                        g.push(d.clone());
                    } else {
                        let last = g.pop().expect("non-empty");
                        g.push(&(&last * &-root) * d);
                    }
                }
                out.push_term(PureTensor::new(g)?);
            }
        }
        Ok(out)
    }

    /// Canonical form of `(x, y1, …, ym) ↦ K ∘ (y1, …, ym)`.
    pub fn core_form(&self) -> Result<CanonicalForm> {
        let m = self.roots.len();
        let mut blocks: BTreeMap<usize, Vec<&PureTensor>> = BTreeMap::new();
        for t in &self.core {
            blocks.entry(t.rank() - 1 - m).or_default().push(t);
        }
        let mut b = FormBuilder::new(&self.algebra, DEFAULT_DEGREE_CAP);
        for (h, terms) in blocks {
            b.add_block(h, m, |args| {
                terms.iter().fold(self.algebra.zero(), |acc, t| {
                    &acc + &t.apply_unchecked(None, args)
                })
            })?;
        }
        Ok(b.finish())
    }

    /// Same roots, same total remainder, and the same core as a map.
    pub fn equals_as_map(&self, other: &FactorChain) -> Result<bool> {
        self.algebra.check_same(&other.algebra)?;
        Ok(self.roots == other.roots
            && self.total_remainder() == other.total_remainder()
            && self.core_form()? == other.core_form()?)
    }
}

impl fmt::Display for FactorChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.roots.len();
        let terms: Vec<(&[Element], &[Element])> = self
            .core
            .iter()
            .map(|t| t.factors().split_at(t.rank() - m))
            .collect();
        let core = render_slotted(&self.algebra, terms);
        let factors: Vec<String> = self.factors().iter().map(Polynomial::to_string).collect();
        let rem = self.total_remainder();
        if !rem.is_zero() {
            write!(f, "{} + ", rem.display_factor(true))?;
        }
        write!(f, "({core}) ∘ ({})", factors.join(", "))
    }
}

/// Divides by `x − am`, then re-divides the coefficient polynomials of the
/// quotient by `x − a_{m−1}`, and so on leftwards.
///
/// Core terms are grouped by their divisor-side factors; each group's
/// polynomial in `x` must divide exactly, otherwise [`Error::FactorResidual`]
/// carries the chain built so far.
pub fn factor_chain(r: &Polynomial, roots: &[Element]) -> Result<FactorChain> {
    let (last, rest) = roots.split_last().ok_or(Error::Empty)?;
    let first = divide_monic(r, last)?;
    let mut chain = FactorChain::from_quotient(&first, last);
    for (stage, root) in rest.iter().rev().enumerate() {
        chain = match refactor(&chain, root, false) {
            Ok(next) => next,
            Err(_) => refactor(&chain, root, true).map_err(|residual| Error::FactorResidual {
                stage: stage + 2,
                residual,
                partial: Box::new(chain.clone()),
            })?,
        };
    }
    Ok(chain)
}

/// One re-division stage. With `by_basis`, divisor-side factors are expanded
/// in the basis before grouping, which separates every independent tail.
fn refactor(chain: &FactorChain, root: &Element, by_basis: bool) -> Result<FactorChain, Element> {
    let algebra = &chain.algebra;
    let m = chain.roots.len();
    let mut groups: Vec<(Vec<Element>, Polynomial)> = Vec::new();
    let mut add =
        |tail: Vec<Element>, head: PureTensor| match groups.iter_mut().find(|(t, _)| *t == tail) {
            Some((_, p)) => p.push_term(head),
            None => {
                let mut p = Polynomial::zero(algebra);
                p.push_term(head);
                groups.push((tail, p));
            }
        };
    for t in &chain.core {
        let f = t.factors();
        let (head, tail) = f.split_at(f.len() - m);
        if !by_basis {
            add(
                tail.to_vec(),
                PureTensor::new(head.to_vec()).expect("non-empty"),
            );
            continue;
        }
        for (coeff, idx) in expand_tail(algebra, tail) {
            let mut h = head.to_vec();
            h[0] = h[0].scale(&coeff);
            add(
                idx.iter().map(|&b| Element::basis(algebra, b)).collect(),
                PureTensor::new(h).expect("non-empty"),
            );
        }
    }
    let mut core = Vec::new();
    for (tail, p) in groups {
        let q = divide_monic(&p, root).map_err(|_| algebra.zero())?;
        if !q.remainder().is_zero() {
            return Err(q.remainder().clone());
        }
        for part in q.parts() {
            for t in part.terms() {
                let mut g = t.factors().to_vec();
                g.extend(tail.iter().cloned());
                core.push(PureTensor::new(g).expect("same algebra"));
            }
        }
    }
    let mut roots = vec![root.clone()];
    roots.extend(chain.roots.iter().cloned());
    let mut remainders = chain.remainders.clone();
    remainders.push(algebra.zero());
    Ok(FactorChain {
        algebra: algebra.clone(),
        remainders,
        roots,
        core: core.into_iter().filter(|t| !t.is_zero()).collect(),
    })
}

/// Multilinear expansion of a tail `d1 ⊗ … ⊗ dm` into scaled basis tuples.
fn expand_tail(algebra: &Algebra, tail: &[Element]) -> Vec<(Rational, Vec<usize>)> {
    let mut acc: Vec<(Rational, Vec<usize>)> = vec![(Rational::one(), Vec::new())];
    for d in tail {
        let mut next = Vec::new();
        for (c, idx) in &acc {
            for b in 0..algebra.dim() {
                let coord = d.coord(b);
                if coord.is_zero() {
                    continue;
                }
                let mut idx = idx.clone();
                idx.push(b);
                next.push((c * coord, idx));
            }
        }
        acc = next;
    }
    acc
}
