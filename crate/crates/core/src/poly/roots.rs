//! Polynomials with prescribed roots.

use num_traits::Zero;

use super::{CanonicalForm, FormKey, Polynomial};
use crate::algebra::{Element, Rational};
use crate::linalg::{LinearSolution, Matrix};
use crate::tensor::{PureTensor, TensorSum};
use crate::Result;

fn linear(a: &Element) -> Polynomial {
    Polynomial::x(a.algebra())
        .checked_sub(&Polynomial::constant(a.clone()))
        .expect("same algebra")
}

/// `((x − x1)(x − x2), (x − x2)(x − x1))`. Both vanish at `x1` and `x2`;
/// they differ as maps when `x1 x2 ≠ x2 x1`.
pub fn given_roots_pair(x1: &Element, x2: &Element) -> Result<(Polynomial, Polynomial)> {
    x1.algebra().check_same(x2.algebra())?;
    let (l1, l2) = (linear(x1), linear(x2));
    Ok((l1.checked_mul(&l2)?, l2.checked_mul(&l1)?))
}

/// Finds rank-2 tensors `a_s` with `Σ a_s ∘ g_s ≡ f`, or `None` when no
/// such tensors exist.
///
/// Each `a_s` is written as `Σ c^{pq} e_p ⊗ e_q`; the canonical form of the
/// left side is linear in the `c^{pq}`, which gives an exact linear system.
pub fn solve_map_combination(gs: &[Polynomial], f: &Polynomial) -> Result<Option<Vec<TensorSum>>> {
    let algebra = f.algebra().clone();
    algebra.require_associative()?;
    let dim = algebra.dim();
    let basis: Vec<Element> = (0..dim).map(|i| Element::basis(&algebra, i)).collect();

    let target = f.canonical_form()?;
    let mut columns = Vec::with_capacity(gs.len() * dim * dim);
    for g in gs {
        algebra.check_same(g.algebra())?;
        for p in 0..dim {
            for q in 0..dim {
                let a = TensorSum::pure(vec![basis[p].clone(), basis[q].clone()])?;
                columns.push(Polynomial::map_compose(&a, g)?.canonical_form()?);
            }
        }
    }

    // one row per (key, output coordinate) appearing anywhere
    let mut keys: Vec<&FormKey> = target.entries().map(|(k, _)| k).collect();
    for c in &columns {
        keys.extend(c.entries().map(|(k, _)| k));
    }
    keys.sort();
    keys.dedup();
    let rows = keys.len() * dim;
    let lookup = |form: &CanonicalForm, row: usize| -> Rational {
        let key = keys[row / dim];
        form.get(key.degree, &key.vars, &key.slots)
            .map(|v| v[row % dim].clone())
            .unwrap_or_else(Rational::zero)
    };
    let m = Matrix::from_fn(rows, columns.len(), |r, c| lookup(&columns[c], r));
    let b: Vec<Rational> = (0..rows).map(|r| lookup(&target, r)).collect();
    let coeffs = match m.solve(&b) {
        LinearSolution::Inconsistent => return Ok(None),
        LinearSolution::Unique(v) => v,
        LinearSolution::Affine { particular, .. } => particular,
    };
    let tensors = coeffs
        .chunks(dim * dim)
        .map(|chunk| {
            let mut t = TensorSum::zero(&algebra, 2);
            for (idx, c) in chunk.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term =
                    PureTensor::new(vec![basis[idx / dim].scale(c), basis[idx % dim].clone()])?;
                t.push(term)?;
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(tensors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, quaternions};

    #[test]
    fn given_roots_differ_for_non_commuting_roots() {
        let h = quaternions();
        let (i, j, k) = (h.e("i"), h.e("j"), h.e("k"));
        let (p12, p21) = given_roots_pair(&i, &j).unwrap();
        let s = &i + &j;
        assert_eq!(p12.evaluate(&s).unwrap(), -&k);
        assert_eq!(p21.evaluate(&s).unwrap(), k);
        assert!(p12.evaluate(&j).unwrap().is_zero());
        assert!(p21.evaluate(&i).unwrap().is_zero());
        assert!(!p12.equals_as_map(&p21).unwrap());
        let (c12, c21) = given_roots_pair(&h.one(), &h.one().scale(&int(2))).unwrap();
        assert!(c12.equals_as_map(&c21).unwrap());
    }

    #[test]
    fn map_combination_feasibility() {
        let h = quaternions();
        let (p12, p21) = given_roots_pair(&h.e("i"), &h.e("j")).unwrap();
        let gs = [p12.clone(), p21.clone()];
        let target = Polynomial::x(&h)
            .pow(2)
            .unwrap()
            .checked_add(&Polynomial::constant(h.one()))
            .unwrap();
        assert!(solve_map_combination(&gs, &target).unwrap().is_none());

        let sum = p12.checked_add(&p21).unwrap();
        let sol = solve_map_combination(&gs, &sum).unwrap().unwrap();
        let rebuilt = Polynomial::map_compose(&sol[0], &p12)
            .unwrap()
            .checked_add(&Polynomial::map_compose(&sol[1], &p21).unwrap())
            .unwrap();
        assert!(rebuilt.equals_as_map(&sum).unwrap());

        let single = solve_map_combination(std::slice::from_ref(&p12), &p12)
            .unwrap()
            .unwrap();
        assert!(single[0].equals_as_map(&TensorSum::identity(&h)).unwrap());
    }
}
