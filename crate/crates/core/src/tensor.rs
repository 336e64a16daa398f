//! Tensors over an algebra acting as (poly)linear maps.
//!
//! The pure tensor `a0 ⊗ a1 ⊗ … ⊗ an` acts on `n` arguments as
//! `a0·f1·a1·…·fn·an`. Products are always evaluated left to right, which is
//! the only reading that matters in associative algebras and a fixed
//! convention in non-associative ones.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, Element, Rational};
use crate::linalg::{LinearSolution, Matrix};
use crate::{Error, Result};

/// `a0 ⊗ … ⊗ a_{r-1}` with `r ≥ 1` factors from a single algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PureTensor {
    factors: Vec<Element>,
}

impl PureTensor {
    pub fn new(factors: Vec<Element>) -> Result<Self> {
        let Some(first) = factors.first() else {
            return Err(Error::RankMismatch {
                expected: 1,
                actual: 0,
            });
        };
        for f in &factors[1..] {
            first.algebra().check_same(f.algebra())?;
        }
        Ok(PureTensor { factors })
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Element] {
        &self.factors
    }

    pub fn factor(&self, idx: usize) -> &Element {
        &self.factors[idx]
    }

    pub fn algebra(&self) -> &Algebra {
        self.factors[0].algebra()
    }

    pub fn into_factors(self) -> Vec<Element> {
        self.factors
    }

    pub fn is_zero(&self) -> bool {
        self.factors.iter().any(Element::is_zero)
    }

    /// Negates the tensor through its first factor.
    pub fn neg(&self) -> PureTensor {
        let mut factors = self.factors.clone();
        factors[0] = -&factors[0];
        PureTensor { factors }
    }

    pub fn scale(&self, c: &Rational) -> PureTensor {
        let mut factors = self.factors.clone();
        factors[0] = factors[0].scale(c);
        PureTensor { factors }
    }

    /// `a0·args[perm[0]]·a1·…·args[perm[n-1]]·an`, evaluated left to right.
    /// Callers guarantee `args.len() + 1 == rank` and that `perm` is a permutation.
    pub(crate) fn apply_unchecked(&self, perm: Option<&[usize]>, args: &[Element]) -> Element {
        let mut acc = self.factors[0].clone();
        for (slot, factor) in self.factors[1..].iter().enumerate() {
            let arg = match perm {
                Some(p) => &args[p[slot]],
                None => &args[slot],
            };
            acc = &acc * arg;
            if !factor.is_one() {
                acc = &acc * factor;
            }
        }
        acc
    }

    /// Middle-multiplication splice `a1 ⊗ … ⊗ a_{n-1} ⊗ a_n b_1 ⊗ b_2 ⊗ … ⊗ b_m`.
    pub fn star(&self, other: &PureTensor) -> PureTensor {
        let n = self.factors.len();
        let mut factors = Vec::with_capacity(n + other.factors.len() - 1);
        factors.extend_from_slice(&self.factors[..n - 1]);
        factors.push(&self.factors[n - 1] * &other.factors[0]);
        factors.extend_from_slice(&other.factors[1..]);
        PureTensor { factors }
    }
}

impl fmt::Display for PureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|e| e.display_factor(true))
            .collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// A finite sum of pure tensors of a common rank; the empty sum is zero.
///
/// Representations are not unique and terms are never merged implicitly;
/// compare tensors as maps with [`TensorSum::equals_as_map`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorSum {
    algebra: Algebra,
    rank: usize,
    terms: Vec<PureTensor>,
}

impl TensorSum {
    pub fn zero(algebra: &Algebra, rank: usize) -> Self {
        assert!(rank >= 1, "tensor rank must be positive");
        TensorSum {
            algebra: algebra.clone(),
            rank,
            terms: Vec::new(),
        }
    }

    pub fn from_terms(algebra: &Algebra, rank: usize, terms: Vec<PureTensor>) -> Result<Self> {
        let mut t = Self::zero(algebra, rank);
        for term in terms {
            t.push(term)?;
        }
        Ok(t)
    }

    /// A single pure tensor.
    pub fn pure(factors: Vec<Element>) -> Result<Self> {
        let p = PureTensor::new(factors)?;
        Ok(TensorSum {
            algebra: p.algebra().clone(),
            rank: p.rank(),
            terms: vec![p],
        })
    }

    /// `1 ⊗ 1`, the identity map.
    pub fn identity(algebra: &Algebra) -> Self {
        Self::pure(vec![algebra.one(), algebra.one()]).expect("identity tensor")
    }

    pub fn push(&mut self, term: PureTensor) -> Result<()> {
        if term.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                actual: term.rank(),
            });
        }
        self.algebra.check_same(term.algebra())?;
        if !term.is_zero() {
            self.terms.push(term);
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &[PureTensor] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &TensorSum) -> Result<TensorSum> {
        self.algebra.check_same(&other.algebra)?;
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                actual: other.rank,
            });
        }
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out)
    }

    pub fn neg(&self) -> TensorSum {
        TensorSum {
            algebra: self.algebra.clone(),
            rank: self.rank,
            terms: self.terms.iter().map(PureTensor::neg).collect(),
        }
    }

    pub fn checked_sub(&self, other: &TensorSum) -> Result<TensorSum> {
        self.checked_add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> TensorSum {
        let mut out = TensorSum::zero(&self.algebra, self.rank);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|t| t.scale(c)).collect();
        }
        out
    }

    /// Evaluates `Σ_s a_{s,0}·args[perm(1)]·a_{s,1}·…·args[perm(n)]·a_{s,n}`.
    pub fn apply_polylinear(&self, perm: &[usize], args: &[Element]) -> Result<Element> {
        let n = self.rank - 1;
        if args.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                actual: args.len(),
            });
        }
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidPermutation(perm.to_vec()));
        }
        for a in args {
            self.algebra.check_same(a.algebra())?;
        }
        Ok(self.apply_args(Some(perm), args))
    }

    /// Evaluates the tensor with every argument slot filled in order.
    pub(crate) fn apply_args(&self, perm: Option<&[usize]>, args: &[Element]) -> Element {
        self.terms
            .iter()
            .fold(Element::zero(&self.algebra), |acc, t| {
                &acc + &t.apply_unchecked(perm, args)
            })
    }

    /// `Σ_s a_s·x·b_s` for a rank-2 tensor.
    pub fn apply_linear(&self, x: &Element) -> Result<Element> {
        self.require_rank(2)?;
        self.algebra.check_same(x.algebra())?;
        Ok(self.apply_args(None, std::slice::from_ref(x)))
    }

    pub(crate) fn require_rank(&self, rank: usize) -> Result<()> {
        if self.rank == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: rank,
                actual: self.rank,
            })
        }
    }

    /// Composition of linear maps, `(p0 ⊗ p1) ∘ (q0 ⊗ q1) = (p0 q0) ⊗ (q1 p1)`.
    pub fn compose_rank2(&self, other: &TensorSum) -> Result<TensorSum> {
        self.require_rank(2)?;
        other.require_rank(2)?;
        self.algebra.check_same(&other.algebra)?;
        self.algebra.require_associative()?;
        let mut out = TensorSum::zero(&self.algebra, 2);
        for p in &self.terms {
            for q in &other.terms {
                out.push(PureTensor {
                    factors: vec![p.factor(0) * q.factor(0), q.factor(1) * p.factor(1)],
                })?;
            }
        }
        Ok(out)
    }

    /// Bilinear splice of two tensors; realises the product of homogeneous polynomials.
    pub fn star(&self, other: &TensorSum) -> Result<TensorSum> {
        self.algebra.check_same(&other.algebra)?;
        let mut out = TensorSum::zero(&self.algebra, self.rank + other.rank - 1);
        for a in &self.terms {
            for b in &other.terms {
                out.push(a.star(b))?;
            }
        }
        Ok(out)
    }

    /// Matrix `a_i^j = a^{kr} C_{ki}^p C_{pr}^j` of a rank-2 tensor, where
    /// `a^{kr} = a_{s,0}^k a_{s,1}^r`; rows index output coordinates.
    pub fn matrix_of(&self) -> Result<Matrix> {
        self.require_rank(2)?;
        let dim = self.algebra.dim();
        let mut standard = vec![Rational::zero(); dim * dim];
        for t in &self.terms {
            for (k, ak) in t.factor(0).coords().iter().enumerate() {
                if ak.is_zero() {
                    continue;
                }
                for (r, ar) in t.factor(1).coords().iter().enumerate() {
                    if !ar.is_zero() {
                        standard[k * dim + r] += ak * ar;
                    }
                }
            }
        }
        let mut m = Matrix::zeros(dim, dim);
        for k in 0..dim {
            for r in 0..dim {
                let akr = &standard[k * dim + r];
                if akr.is_zero() {
                    continue;
                }
                for i in 0..dim {
                    for (p, c1) in self.algebra.product(k, i) {
                        for (j, c2) in self.algebra.product(*p, r) {
                            let v = m.get(*j, i) + akr * c1 * c2;
                            m.set(*j, i, v);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Exact determinant of the induced linear map.
    pub fn det(&self) -> Result<Rational> {
        Ok(self.matrix_of()?.determinant())
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(!self.det()?.is_zero())
    }

    /// The tensor whose map inverts this one.
    pub fn inverse_tensor(&self) -> Result<TensorSum> {
        let m = self.matrix_of()?;
        let inv = m
            .inverse()
            .ok_or_else(|| Error::SingularTensor(self.to_string()))?;
        tensor_of(&self.algebra, &inv)
    }

    /// Classifies the solutions of `self ∘ x = b`.
    pub fn solve(&self, b: &Element) -> Result<SolutionSet> {
        self.algebra.check_same(b.algebra())?;
        let m = self.matrix_of()?;
        let alg = &self.algebra;
        let to_el = |v: Vec<Rational>| Element::new(alg, v);
        Ok(match m.solve(b.coords()) {
            LinearSolution::Unique(x) => SolutionSet::Unique(to_el(x)?),
            LinearSolution::Inconsistent => SolutionSet::Empty,
            LinearSolution::Affine { particular, kernel } => SolutionSet::Affine {
                particular: to_el(particular)?,
                kernel: kernel.into_iter().map(to_el).collect::<Result<_>>()?,
            },
        })
    }

    /// Equality of the rank-2 maps, decided through their matrices.
    pub fn equals_as_map(&self, other: &TensorSum) -> Result<bool> {
        Ok(self.matrix_of()? == other.matrix_of()?)
    }
}

/// Finds `c^{pq}` with `Σ c^{pq} e_p x e_q` equal to the map of `m`.
pub fn tensor_of(algebra: &Algebra, m: &Matrix) -> Result<TensorSum> {
    let dim = algebra.dim();
    if m.rows() != dim || m.cols() != dim {
        return Err(Error::NotRepresentable(format!(
            "{} ({}x{} matrix)",
            algebra.name(),
            m.rows(),
            m.cols()
        )));
    }
    // row (j, i): coordinate j of e_p e_i e_q; column (p, q)
    let mut system = Matrix::zeros(dim * dim, dim * dim);
    for p in 0..dim {
        for i in 0..dim {
            for (s, c1) in algebra.product(p, i) {
                for q in 0..dim {
                    for (j, c2) in algebra.product(*s, q) {
                        let (row, col) = (j * dim + i, p * dim + q);
                        let v = system.get(row, col) + c1 * c2;
                        system.set(row, col, v);
                    }
                }
            }
        }
    }
    let rhs: Vec<Rational> = (0..dim * dim)
        .map(|idx| m.get(idx / dim, idx % dim).clone())
        .collect();
    let coeffs = match system.solve(&rhs) {
        LinearSolution::Unique(c) => c,
        LinearSolution::Affine { particular, .. } => particular,
        LinearSolution::Inconsistent => {
            return Err(Error::NotRepresentable(algebra.name().to_string()))
        }
    };
    let mut out = TensorSum::zero(algebra, 2);
    for (idx, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let left = Element::basis(algebra, idx / dim).scale(c);
        out.push(PureTensor::new(vec![
            left,
            Element::basis(algebra, idx % dim),
        ])?)?;
    }
    Ok(out)
}

impl fmt::Display for TensorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let s = t.to_string();
            match (idx, s.strip_prefix('-')) {
                (0, _) => write!(f, "{s}")?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {s}")?,
            }
        }
        Ok(())
    }
}

/// Solutions of a linear equation `a ∘ x = b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolutionSet {
    Unique(Element),
    Empty,
    /// `particular + C1 v1 + C2 v2 + …` for arbitrary real `C`; the kernel
    /// basis is linearly independent and ordered by free coordinate.
    Affine {
        particular: Element,
        kernel: Vec<Element>,
    },
}

impl SolutionSet {
    pub fn kind(&self) -> &'static str {
        match self {
            SolutionSet::Unique(_) => "unique",
            SolutionSet::Empty => "none",
            SolutionSet::Affine { .. } => "affine",
        }
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::Unique(x) => write!(f, "x = {x}"),
            SolutionSet::Empty => write!(f, "no solution"),
            SolutionSet::Affine { particular, kernel } => {
                let mut parts: Vec<String> = kernel
                    .iter()
                    .enumerate()
                    .map(|(n, v)| {
                        let c = format!("C{}", n + 1);
                        match v.as_monomial() {
                            Some((coef, 0)) if coef == num_traits::One::one() => c,
                            Some((coef, idx)) if coef == num_traits::One::one() => {
                                format!("{c} {}", v.algebra().basis()[idx])
                            }
                            _ => format!("{c} ({v})"),
                        }
                    })
                    .collect();
                if !particular.is_zero() {
                    parts.push(particular.to_string());
                }
                let mut out = String::from("x = ");
                for (idx, p) in parts.iter().enumerate() {
                    match (idx, p.strip_prefix('-')) {
                        (0, _) => out.push_str(p),
                        (_, Some(rest)) if !p.contains(" + ") && !p.contains(" - ") => {
                            out.push_str(" - ");
                            out.push_str(rest);
                        }
                        _ => {
                            out.push_str(" + ");
                            out.push_str(p);
                        }
                    }
                }
                write!(f, "{out}")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, quaternions, rat};

    fn t2(a: Element, b: Element) -> TensorSum {
        TensorSum::pure(vec![a, b]).unwrap()
    }

    /// `i⊗1 − 1⊗i`
    fn commutator() -> TensorSum {
        let h = quaternions();
        t2(h.e("i"), h.one())
            .checked_sub(&t2(h.one(), h.e("i")))
            .unwrap()
    }

    #[test]
    fn commutator_action() {
        let h = quaternions();
        let half_j = h.e("j").scale(&rat(1, 2));
        assert_eq!(commutator().apply_linear(&half_j).unwrap(), h.e("k"));
        assert_eq!(
            commutator().apply_linear(&h.e("j")).unwrap(),
            h.e("k").scale(&int(2))
        );
        let x = Element::from_ints(&h, &[3, -1, 2, 5]).unwrap();
        assert_eq!(TensorSum::identity(&h).apply_linear(&x).unwrap(), x);
    }

    #[test]
    fn apply_linear_rejects_rank_three() {
        let h = quaternions();
        let t = TensorSum::pure(vec![h.one(), h.one(), h.one()]).unwrap();
        assert!(matches!(
            t.apply_linear(&h.one()),
            Err(Error::RankMismatch {
                expected: 2,
                actual: 3
            })
        ));
    }

    #[test]
    fn polylinear_evaluation() {
        let h = quaternions();
        let ones = TensorSum::pure(vec![h.one(), h.one(), h.one()]).unwrap();
        let (x, y) = (h.e("i"), h.e("j"));
        assert_eq!(
            ones.apply_polylinear(&[0, 1], &[x.clone(), y.clone()])
                .unwrap(),
            h.e("k")
        );
        assert_eq!(ones.apply_polylinear(&[1, 0], &[x, y]).unwrap(), -h.e("k"));
        // (j i) k = (-k) k = 1
        let mid = TensorSum::pure(vec![h.one(), h.e("i"), h.one()]).unwrap();
        assert_eq!(
            mid.apply_polylinear(&[0, 1], &[h.e("j"), h.e("k")])
                .unwrap(),
            h.one()
        );
        assert!(matches!(
            mid.apply_polylinear(&[0, 0], &[h.e("j"), h.e("k")]),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            mid.apply_polylinear(&[0], &[h.e("j")]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn star_splices_middle_factors() {
        let h = quaternions();
        let a = t2(h.one(), h.e("i"));
        let b = t2(h.e("j"), h.one());
        let s = a.star(&b).unwrap();
        assert_eq!(s.rank(), 3);
        assert_eq!(s.terms()[0].factors(), &[h.one(), h.e("k"), h.one()]);
    }

    #[test]
    fn commutator_matrix() {
        let m = commutator().matrix_of().unwrap();
        let mut expected = Matrix::zeros(4, 4);
        expected.set(2, 3, int(-2));
        expected.set(3, 2, int(2));
        assert_eq!(m, expected);
        assert_eq!(m.determinant(), int(0));
        assert!(!commutator().is_nonsingular().unwrap());
    }

    #[test]
    fn left_multiplication_matrix() {
        let h = quaternions();
        let m = t2(h.e("i"), h.one()).matrix_of().unwrap();
        let expected = Matrix::from_rows(
            [[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]
                .iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        );
        assert_eq!(m, expected);
    }

    #[test]
    fn identity_and_scalar_determinants() {
        let h = quaternions();
        assert_eq!(
            TensorSum::identity(&h).matrix_of().unwrap(),
            Matrix::identity(4)
        );
        assert_eq!(TensorSum::identity(&h).det().unwrap(), int(1));
        assert_eq!(t2(h.one().scale(&int(2)), h.one()).det().unwrap(), int(16));
    }

    #[test]
    fn compose_is_self_inverse_for_sandwich() {
        let h = quaternions();
        let t = t2(h.e("i"), h.e("j"));
        let sq = t.compose_rank2(&t).unwrap();
        assert!(sq.equals_as_map(&TensorSum::identity(&h)).unwrap());
        let inv = t.inverse_tensor().unwrap();
        assert!(inv.equals_as_map(&t).unwrap());
        let inv_id = TensorSum::identity(&h).inverse_tensor().unwrap();
        assert!(inv_id.equals_as_map(&TensorSum::identity(&h)).unwrap());
    }

    #[test]
    fn compose_right_slots_one() {
        let h = quaternions();
        let (a, c) = (h.e("i"), h.e("j") + h.e("k"));
        let lhs = t2(a.clone(), h.one())
            .compose_rank2(&t2(c.clone(), h.one()))
            .unwrap();
        assert!(lhs.equals_as_map(&t2(&a * &c, h.one())).unwrap());
    }

    #[test]
    fn singular_inverse_fails() {
        assert!(matches!(
            commutator().inverse_tensor(),
            Err(Error::SingularTensor(_))
        ));
    }

    #[test]
    fn compose_requires_associativity() {
        let o = crate::algebra::octonions();
        let t = t2(o.e("i"), o.e("l"));
        assert!(matches!(t.compose_rank2(&t), Err(Error::NonAssociative(_))));
    }

    #[test]
    fn solve_classification() {
        let h = quaternions();
        assert_eq!(commutator().solve(&h.one()).unwrap(), SolutionSet::Empty);
        let sol = commutator().solve(&h.e("k")).unwrap();
        assert_eq!(
            sol,
            SolutionSet::Affine {
                particular: h.e("j").scale(&rat(1, 2)),
                kernel: vec![h.one(), h.e("i")],
            }
        );
        assert_eq!(sol.to_string(), "x = C1 + C2 i + 1/2 j");
        let b = Element::from_ints(&h, &[1, 2, 3, 4]).unwrap();
        assert_eq!(
            TensorSum::identity(&h).solve(&b).unwrap(),
            SolutionSet::Unique(b)
        );
    }

    #[test]
    fn tensor_of_round_trips() {
        let h = quaternions();
        let t = t2(h.e("i"), h.e("j"));
        let back = tensor_of(&h, &t.matrix_of().unwrap()).unwrap();
        assert!(back.equals_as_map(&t).unwrap());
        let id = tensor_of(&h, &Matrix::identity(4)).unwrap();
        assert!(id.equals_as_map(&TensorSum::identity(&h)).unwrap());
        let c = tensor_of(&h, &commutator().matrix_of().unwrap()).unwrap();
        assert_eq!(c.matrix_of().unwrap(), commutator().matrix_of().unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(commutator().to_string(), "i⊗1 - 1⊗i");
    }
}
