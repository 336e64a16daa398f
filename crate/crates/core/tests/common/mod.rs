//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use ncpoly::algebra::{int, rat};
use ncpoly::linalg::Matrix;
use ncpoly::nonassoc::{BracketPolynomial, BracketTree};
use ncpoly::{Algebra, Element, Polynomial, PureTensor};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn element(rng: &mut ChaCha8Rng, algebra: &Algebra) -> Element {
    let coords = (0..algebra.dim())
        .map(|_| rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)))
        .collect();
    Element::new(algebra, coords).unwrap()
}

/// A sparse element with a few small integer coordinates.
pub fn small_element(rng: &mut ChaCha8Rng, algebra: &Algebra) -> Element {
    let mut coords = vec![int(0); algebra.dim()];
    for _ in 0..rng.gen_range(1..=2) {
        coords[rng.gen_range(0..algebra.dim())] = int(rng.gen_range(-3..=3));
    }
    Element::new(algebra, coords).unwrap()
}

/// Sum of up to five pure tensors of degree at most `max_degree`.
pub fn polynomial(rng: &mut ChaCha8Rng, algebra: &Algebra, max_degree: usize) -> Polynomial {
    let terms: Vec<PureTensor> = (0..rng.gen_range(1..=5))
        .map(|_| {
            let degree = rng.gen_range(0..=max_degree);
            PureTensor::new((0..=degree).map(|_| small_element(rng, algebra)).collect()).unwrap()
        })
        .collect();
    Polynomial::from_terms(algebra, terms).unwrap()
}

pub fn matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| {
        rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
    })
}

/// A random bracketing of `leaves` trees.
fn tree(rng: &mut ChaCha8Rng, leaves: Vec<BracketTree>) -> BracketTree {
    if leaves.len() == 1 {
        return leaves.into_iter().next().unwrap();
    }
    let split = rng.gen_range(1..leaves.len());
    let mut left = leaves;
    let right = left.split_off(split);
    BracketTree::mul(tree(rng, left), tree(rng, right))
}

/// Sum of up to four bracketed monomials of degree at most three.
pub fn bracket_polynomial(rng: &mut ChaCha8Rng, algebra: &Algebra) -> BracketPolynomial {
    let terms = (0..rng.gen_range(1..=4))
        .map(|_| {
            let degree = rng.gen_range(0..=3);
            let mut leaves = vec![BracketTree::Var; degree];
            for _ in 0..rng.gen_range(0..=2) {
                let at = rng.gen_range(0..=leaves.len());
                leaves.insert(at, BracketTree::Const(small_element(rng, algebra)));
            }
            if leaves.is_empty() {
                leaves.push(BracketTree::Const(small_element(rng, algebra)));
            }
            (
                rat(rng.gen_range(-4..=4), rng.gen_range(1..=2)),
                tree(rng, leaves),
            )
        })
        .collect();
    BracketPolynomial::new(algebra, terms).unwrap()
}
