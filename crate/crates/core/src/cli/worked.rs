//! Worked examples with stored expected output.
//!
//! Each example recomputes a published calculation and attaches checks that
//! compare the result with the published values. The rendered text is kept
//! under `expected/` and compared byte for byte by `paper-example`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_line, Check};
use crate::algebra::{
    fmt_rational, octonions, quaternions, sqrt, Algebra, Element, FloatElement, SquareRoots,
};
use crate::division::{divide_monic, factor_chain, monic_divisor, FactorChain, QuotientChain};
use crate::expr::parse_value;
use crate::linalg::Matrix;
use crate::nonassoc::{associator, bdivide_monic, bfactor_chain, BracketChain, BracketPolynomial};
use crate::ore::weierstrass_step_check;
use crate::poly::{given_roots_pair, solve_map_combination, Polynomial};
use crate::tensor::{PureTensor, SolutionSet, TensorSum};
use crate::{Error, Result};

pub const IDS: [&str; 13] = [
    "4.5", "5.2", "6.3", "7.7", "9.1", "9.2", "9.3", "9.5", "10.1", "10.3", "10.4", "11.2", "11.3",
];

/// Stored output for `id`.
pub fn expected(id: &str) -> Option<&'static str> {
    Some(match id {
        "4.5" => include_str!("../../expected/4.5.txt"),
        "5.2" => include_str!("../../expected/5.2.txt"),
        "6.3" => include_str!("../../expected/6.3.txt"),
        "7.7" => include_str!("../../expected/7.7.txt"),
        "9.1" => include_str!("../../expected/9.1.txt"),
        "9.2" => include_str!("../../expected/9.2.txt"),
        "9.3" => include_str!("../../expected/9.3.txt"),
        "9.5" => include_str!("../../expected/9.5.txt"),
        "10.1" => include_str!("../../expected/10.1.txt"),
        "10.3" => include_str!("../../expected/10.3.txt"),
        "10.4" => include_str!("../../expected/10.4.txt"),
        "11.2" => include_str!("../../expected/11.2.txt"),
        "11.3" => include_str!("../../expected/11.3.txt"),
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct Worked {
    pub id: &'static str,
    pub title: &'static str,
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
}

impl Worked {
    fn new(id: &'static str, title: &'static str) -> Self {
        Worked {
            id,
            title,
            lines: vec![format!("example {id}: {title}")],
            checks: Vec::new(),
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The lines followed by one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in self
            .lines
            .iter()
            .cloned()
            .chain(self.checks.iter().map(check_line))
        {
            out.push_str(&l);
            out.push('\n');
        }
        out
    }
}

pub fn run(id: &str) -> Result<Worked> {
    match id {
        "4.5" => tensor_equation(),
        "5.2" => left_sided_product(),
        "6.3" => square_roots(),
        "7.7" => given_roots(),
        "9.1" => divide_example(
            "9.1",
            "division of (x - j)(x - i) by x - i",
            "(x - j)(x - i)",
            "i",
        ),
        "9.2" => divide_example(
            "9.2",
            "division of (x - i)(x - j) by x - i",
            "(x - i)(x - j)",
            "i",
        ),
        "9.3" => divide_example(
            "9.3",
            "division of x^2 - ix - jx - k by x - i",
            "x^2 - ix - jx - k",
            "i",
        ),
        "9.5" => divide_example(
            "9.5",
            "division of x^2 - ix - jx - k by x - j",
            "x^2 - ix - jx - k",
            "j",
        ),
        "10.1" => cubic_division(),
        "10.3" => quotient_redivision(),
        "10.4" => two_factor_chain(),
        "11.2" => octonion_division(),
        "11.3" => octonion_factor_chain(),
        _ => Err(Error::InvalidExpression(format!("unknown example '{id}'"))),
    }
}

fn poly(src: &str) -> Result<Polynomial> {
    parse_value(src, &quaternions())?.into_polynomial()
}

fn elem(src: &str, algebra: &Algebra) -> Result<Element> {
    parse_value(src, algebra)?.into_element()
}

fn tensor(src: &str) -> Result<TensorSum> {
    parse_value(src, &quaternions())?.into_tensor()
}

/// A chain `s0 + Σ P(x) ⊗ c` from polynomial and element sources.
fn quotient(remainder: &str, terms: &[(&str, &str)]) -> Result<QuotientChain> {
    let h = quaternions();
    let parts = terms
        .iter()
        .map(|(p, c)| Ok((poly(p)?, elem(c, &h)?)))
        .collect::<Result<Vec<_>>>()?;
    QuotientChain::from_terms(elem(remainder, &h)?, parts)
}

/// Deterministic sample points with small rational coordinates.
pub fn sample_points(algebra: &Algebra, n: usize, seed: u64) -> Vec<Element> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let coords = (0..algebra.dim())
                .map(|_| crate::algebra::rat(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
                .collect();
            Element::new(algebra, coords).expect("dimension matches")
        })
        .collect()
}

fn tensor_equation() -> Result<Worked> {
    let mut w = Worked::new("4.5", "the tensor i⊗1 - 1⊗i");
    let h = quaternions();
    let t = tensor("i@1 - 1@i")?;
    let m = t.matrix_of()?;
    w.line(format!("tensor: {t}"));
    w.line("matrix:");
    for row in m.to_string().lines() {
        w.line(format!("  {row}"));
    }
    w.line(format!("det = {}", fmt_rational(&m.determinant())));
    let none = t.solve(&h.one())?;
    let some = t.solve(&h.e("k"))?;
    w.line(format!("ix - xi - 1 = 0: {none}"));
    w.line(format!("ix - xi - k = 0: {some}"));

    let published = Matrix::from_rows(
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -2], [0, 0, 2, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| crate::algebra::int(v)).collect())
            .collect(),
    );
    w.check(
        "matrix",
        m == published,
        "difference of left and right multiplication by i",
    );
    w.check(
        "no root for right side 1",
        none == SolutionSet::Empty,
        none.to_string(),
    );
    let family = match &some {
        SolutionSet::Affine { particular, kernel } => {
            let in_span = |e: &Element| e.coord(2).is_zero() && e.coord(3).is_zero();
            kernel.len() == 2
                && kernel.iter().all(in_span)
                && in_span(&(particular - &h.e("j").scale(&crate::algebra::rat(1, 2))))
        }
        _ => false,
    };
    w.check("roots for right side k", family, "x = C1 + C2 i + 1/2 j");
    Ok(w)
}

fn left_sided_product() -> Result<Worked> {
    let mut w = Worked::new("5.2", "left-sided product of x - i and x - j");
    let h = quaternions();
    let r = weierstrass_step_check()?;
    w.line(format!("L(x) = {}", r.left));
    w.line(format!("R(x) = {}", r.right));
    w.line(format!("P(x) = (L * R)(x) = {}", r.product));
    w.line(format!("h = R(i) = {}", r.h));
    w.line(format!(
        "P1(x) = L(h x h^-1) R(x) = {}",
        r.claimed.simplified()
    ));
    w.line(format!("P({}) = {}", r.point, r.product_value));
    w.line(format!("P1({}) = {}", r.point, r.claimed_value));

    w.check(
        "product",
        r.product.to_string() == "x^2 - (i + j)x + k",
        r.product.to_string(),
    );
    w.check("h", r.h == elem("i - j", &h)?, r.h.to_string());
    w.check(
        "P(i + j) = k",
        r.product_value == h.e("k"),
        r.product_value.to_string(),
    );
    let hand = elem("(k(j - i) - i)i", &h)?;
    w.check(
        "P1(i + j) agrees with the hand computation (k(j - i) - i)i",
        r.claimed_value == hand,
        hand.to_string(),
    );
    w.check(
        "P1 differs from P at i + j",
        r.differs,
        "the claimed factorisation fails",
    );
    Ok(w)
}

fn square_roots() -> Result<Worked> {
    let mut w = Worked::new("6.3", "square roots of roots of x^2 + 1");
    let h = quaternions();
    let s = 1.0 / 2f64.sqrt();
    for src in ["i", "j", "k", "3/5 i + 4/5 j"] {
        let a = elem(src, &h)?;
        let roots = sqrt(&a)?;
        w.line(format!("sqrt({a}):"));
        for l in roots.to_string().lines() {
            w.line(format!("  {l}"));
        }
        let square_plus_one = &(&a * &a) + &h.one();
        let closed = FloatElement::from(&(&h.one() + &a));
        let closed = FloatElement::new(&h, closed.coords().iter().map(|c| c * s).collect());
        let matches = match &roots {
            SquareRoots::Pair(p, q) => {
                let err = p.max_abs_diff(&closed).max(q.max_abs_diff(&closed.neg()));
                let sq = p.mul(p).max_abs_diff(&FloatElement::from(&a));
                err < 1e-10 && sq < 1e-10
            }
            _ => false,
        };
        w.check(
            &format!("sqrt({a}) = ±(1 + a)/√2"),
            square_plus_one.is_zero() && matches,
            "a^2 + 1 = 0 exactly; roots within 1e-10",
        );
    }
    let minus_one = sqrt(&-h.one())?;
    w.line(format!("sqrt(-1): {minus_one}"));
    w.check(
        "sqrt(-1) is a sphere",
        minus_one
            == SquareRoots::Sphere {
                radius_sq: crate::algebra::int(1),
            },
        "every unit imaginary quaternion",
    );
    Ok(w)
}

fn given_roots() -> Result<Worked> {
    let mut w = Worked::new(
        "7.7",
        "x^2 + 1 is not a combination of the products with roots i, j",
    );
    let h = quaternions();
    let (i, j) = (h.e("i"), h.e("j"));
    let (p12, p21) = given_roots_pair(&i, &j)?;
    let target = poly("x^2 + 1")?;
    w.line(format!("(x - i)(x - j) = {}", p12.simplified()));
    w.line(format!("(x - j)(x - i) = {}", p21.simplified()));
    let pair = [p12.clone(), p21.clone()];
    let infeasible = solve_map_combination(&pair, &target)?;
    w.line(format!(
        "a1 ∘ (x - i)(x - j) + a2 ∘ (x - j)(x - i) = x^2 + 1: {}",
        if infeasible.is_some() {
            "solvable"
        } else {
            "no tensors a1, a2"
        }
    ));

    w.check(
        "first product",
        p12.equals_as_map(&poly("x^2 - ix - xj + k")?)?,
        p12.simplified().to_string(),
    );
    w.check(
        "second product",
        p21.equals_as_map(&poly("x^2 - jx - xi - k")?)?,
        p21.simplified().to_string(),
    );
    let vanish = [&p12, &p21, &target].iter().all(|p| {
        p.evaluate(&i).is_ok_and(|v| v.is_zero()) && p.evaluate(&j).is_ok_and(|v| v.is_zero())
    });
    w.check("all three vanish at i and j", vanish, "");
    w.check(
        "x^2 + 1 is infeasible",
        infeasible.is_none(),
        "no exact solution of the linear system",
    );
    for (name, f) in [
        ("(x - i)(x - j)", p12.clone()),
        ("sum of both products", p12.checked_add(&p21)?),
    ] {
        let feasible = match solve_map_combination(&pair, &f)? {
            Some(a) => Polynomial::map_compose(&a[0], &p12)?
                .checked_add(&Polynomial::map_compose(&a[1], &p21)?)?
                .equals_as_map(&f)?,
            None => false,
        };
        w.check(
            &format!("{name} is feasible"),
            feasible,
            "verified by substitution",
        );
    }
    Ok(w)
}

/// Name, remainder and `(polynomial, element)` terms of a published quotient.
type Published = (
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str)],
);

fn divide_example(
    id: &'static str,
    title: &'static str,
    r_src: &str,
    root: &str,
) -> Result<Worked> {
    let mut w = Worked::new(id, title);
    let h = quaternions();
    let r = poly(r_src)?;
    let a = elem(root, &h)?;
    let chain = divide_monic(&r, &a)?;
    w.line(format!("r(x) = {}", r.simplified()));
    w.line(format!("p(x) = {}", monic_divisor(&a)));
    w.line(format!("r(x) = {chain}"));
    w.line(format!("remainder: {}", chain.remainder()));
    w.line(format!("peel degrees: {:?}", chain.peel_degrees()));
    w.check(
        "reconstruction",
        chain.reconstructs(&r)?,
        "remainder + q ∘ (x - a) = r",
    );
    let ra = r.evaluate(&a)?;
    w.check(
        "remainder equals r(a)",
        &ra == chain.remainder(),
        ra.to_string(),
    );

    let published: &[Published] = match id {
        "9.1" => &[("quotient (x - j)⊗1", "0", &[("x - j", "1")])],
        "9.2" => &[(
            "quotient -i⊗1 - 1⊗j + 1⊗i + x⊗1",
            "0",
            &[("-i", "1"), ("1", "-j"), ("1", "i"), ("x", "1")],
        )],
        "9.3" => &[
            (
                "quotient -i⊗1 - j⊗1 + 1⊗i + x⊗1",
                "0",
                &[("-i", "1"), ("-j", "1"), ("1", "i"), ("x", "1")],
            ),
            (
                "quotient 1⊗i + (x - i - j)⊗1",
                "0",
                &[("1", "i"), ("x - i - j", "1")],
            ),
        ],
        _ => &[
            (
                "-2k + (-i⊗1 - j⊗1 + 1⊗j + x⊗1) ∘ (x - j)",
                "-2k",
                &[("-i", "1"), ("-j", "1"), ("1", "j"), ("x", "1")],
            ),
            (
                "-2k + (1⊗j + (x - i - j)⊗1) ∘ (x - j)",
                "-2k",
                &[("1", "j"), ("x - i - j", "1")],
            ),
        ],
    };
    for (name, rem, terms) in published {
        let expected = quotient(rem, terms)?;
        w.check(name, chain.equals_as_map(&expected)?, "equal as maps");
    }
    match id {
        "9.1" => w.check(
            "r(x) = x^2 - jx - xi - k",
            r.simplified().to_string() == "x^2 - jx - xi - k",
            "",
        ),
        "9.2" => w.check(
            "r(x) = x^2 - ix - xj + k",
            r.equals_as_map(&poly("x^2 - ix - xj + k")?)?,
            "",
        ),
        "9.3" => {
            let (m, det) = chain.kernel_condition_matrix(&a)?;
            w.line("matrix of y ↦ q(i) ∘ y:");
            for row in m.to_string().lines() {
                w.line(format!("  {row}"));
            }
            w.line(format!("det = {}", fmt_rational(&det)));
            let direct = tensor("1@i - j@1")?.matrix_of()?;
            w.check(
                "q(i) = 1⊗i - j⊗1",
                m == direct,
                "matrix of the substituted quotient",
            );
        }
        _ => {}
    }
    Ok(w)
}

fn cubic() -> Result<Polynomial> {
    poly("(x - j)(x - k)(x - j - k)")
}

fn cubic_quotient() -> Result<QuotientChain> {
    quotient(
        "0",
        &[
            ("j", "j"),
            ("i", "1"),
            ("-x", "j"),
            ("-jx", "1"),
            ("-xk", "1"),
            ("x^2", "1"),
        ],
    )
}

fn cubic_division() -> Result<Worked> {
    let mut w = Worked::new("10.1", "division of (x - j)(x - k)(x - j - k) by x - k");
    let h = quaternions();
    let r = cubic()?;
    let k = h.e("k");
    let chain = divide_monic(&r, &k)?;
    w.line(format!("r(x) = {}", r.simplified()));
    w.line(format!("r(x) = {chain}"));
    w.line(format!("remainder: {}", chain.remainder()));
    w.line(format!("peel degrees: {:?}", chain.peel_degrees()));
    let q_at_j = chain.quotient_at(&h.e("j"));
    w.line(format!(
        "q(j) = {}",
        if q_at_j
            .matrix_of()?
            .to_rows()
            .iter()
            .flatten()
            .all(|c| c.is_zero())
        {
            "0"
        } else {
            "non-zero"
        }
    ));

    let expanded = poly("x^3 - x^2 j - x^2 k - j x^2 - xkx + jxj + jxk - xi - x + ix - k + j")?;
    w.check(
        "expansion",
        r.equals_as_map(&expanded)?,
        "coefficients by degree",
    );
    w.check("remainder 0", chain.remainder().is_zero(), "");
    w.check("reconstruction", chain.reconstructs(&r)?, "");
    w.check(
        "quotient j⊗j + i⊗1 - x⊗j - jx⊗1 - xk⊗1 + x^2⊗1",
        chain.equals_as_map(&cubic_quotient()?)?,
        "equal as maps",
    );
    w.check(
        "q(j) = 0",
        q_at_j
            .matrix_of()?
            .to_rows()
            .iter()
            .flatten()
            .all(|c| c.is_zero()),
        "the quotient has the factor x - j",
    );
    Ok(w)
}

fn quotient_redivision() -> Result<Worked> {
    let mut w = Worked::new("10.3", "dividing the quotient's coefficient by x - j");
    let h = quaternions();
    let j = h.e("j");
    let r1 = poly("i - jx - xk + x^2")?;
    let chain = divide_monic(&r1, &j)?;
    w.line(format!("r1(x) = {}", r1.simplified()));
    w.line(format!("r1(x) = {chain}"));
    w.line(format!("remainder: {}", chain.remainder()));
    w.check("remainder 0", chain.remainder().is_zero(), "");
    let published = quotient("0", &[("-j", "1"), ("1", "-k"), ("1", "j"), ("x", "1")])?;
    w.check(
        "quotient -j⊗1 - 1⊗k + 1⊗j + x⊗1",
        chain.equals_as_map(&published)?,
        "equal as maps",
    );

    let q = cubic_quotient()?;
    let split = quotient(
        "0",
        &[
            ("-(x - j)", "j"),
            ("-j(x - j) - (x - j)k + (x - j)j + x(x - j)", "1"),
        ],
    )?;
    let merged = quotient("0", &[("-j(x - j) - (x - j)k + x(x - j)", "1")])?;
    let split_ok = q.equals_as_map(&split)?;
    let merged_ok = q.equals_as_map(&merged)?;
    w.line(format!(
        "q(x) = -(x - j)⊗j + ((-j⊗1 - 1⊗k + 1⊗j + x⊗1) ∘ (x - j))⊗1: {}",
        if split_ok { "holds" } else { "fails" }
    ));
    w.line(format!(
        "q(x) = ((-j⊗1 - 1⊗k + x⊗1) ∘ (x - j))⊗1: {}",
        if merged_ok { "holds" } else { "fails" }
    ));
    w.check(
        "split form of the cubic's quotient",
        split_ok,
        "equal as maps",
    );
    w.check(
        "merged form differs",
        !merged_ok,
        "moving -(x - j)⊗j inside the bracket changes the map",
    );
    Ok(w)
}

fn published_core(with_missing_term: bool) -> Result<FactorChain> {
    let h = quaternions();
    let e = |s: &str| elem(s, &h);
    let mut core = vec![
        PureTensor::new(vec![e("-j")?, e("1")?, e("1")?])?,
        PureTensor::new(vec![e("-1")?, e("k")?, e("1")?])?,
        PureTensor::new(vec![e("1")?, e("j")?, e("1")?])?,
        PureTensor::new(vec![e("1")?, e("1")?, e("1")?, e("1")?])?,
    ];
    if with_missing_term {
        core.push(PureTensor::new(vec![e("-1")?, e("1")?, e("j")?])?);
    }
    FactorChain::from_core(vec![h.zero()], vec![e("j")?, e("k")?], core)
}

fn agrees_at(chain: &FactorChain, r: &Polynomial, points: &[Element]) -> Result<bool> {
    for x in points {
        if chain.evaluate(x)? != r.evaluate(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn two_factor_chain() -> Result<Worked> {
    let mut w = Worked::new("10.4", "the cubic as a bilinear map of x - j and x - k");
    let h = quaternions();
    let r = cubic()?;
    let chain = factor_chain(&r, &[h.e("j"), h.e("k")])?;
    w.line(format!("r(x) = {}", r.simplified()));
    w.line(format!("r(x) = {chain}"));
    let points = sample_points(&h, 20, 104);
    w.check(
        "chain agrees with r at 20 sample points",
        agrees_at(&chain, &r, &points)?,
        "exact",
    );
    w.check(
        "chain equals r as a map",
        chain.to_polynomial()?.equals_as_map(&r)?,
        "",
    );
    let printed = published_core(false)?;
    let corrected = published_core(true)?;
    w.line(format!("printed core: {printed}"));
    w.line(format!("corrected core: {corrected}"));
    w.check(
        "corrected core agrees with r at 20 sample points",
        agrees_at(&corrected, &r, &points)?,
        "printed core plus -1⊗1⊗j",
    );
    w.check(
        "chain equals the corrected core",
        chain.equals_as_map(&corrected)?,
        "equal as maps",
    );
    w.check(
        "printed core misses -1⊗1⊗j",
        !agrees_at(&printed, &r, &points)?,
        "without it the core does not reconstruct r",
    );
    Ok(w)
}

fn octonion_cubic() -> Result<BracketPolynomial> {
    parse_value("((x - j)(x - k))(x - jl)", &octonions())?.into_bracket_polynomial()
}

fn bracket_chain(src: &str, roots: &[&str], remainder: &str) -> Result<BracketChain> {
    let o = octonions();
    let parts = parse_value(src, &o)?.into_bracket_terms()?;
    let roots = roots
        .iter()
        .map(|s| elem(s, &o))
        .collect::<Result<Vec<_>>>()?;
    BracketChain::new(elem(remainder, &o)?, parts, roots)
}

fn bracket_agrees_at(
    chain: &BracketChain,
    r: &BracketPolynomial,
    points: &[Element],
) -> Result<bool> {
    for x in points {
        if chain.evaluate(x)? != r.evaluate(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn octonion_division() -> Result<Worked> {
    let mut w = Worked::new(
        "11.2",
        "octonion division of ((x - j)(x - k))(x - jl) by x - k",
    );
    let o = octonions();
    let r = octonion_cubic()?;
    let k = o.e("k");
    let chain = bdivide_monic(&r, &k)?;
    w.line(format!("r(x) = {r}"));
    w.line(format!("r(x) = {chain}"));
    w.line(format!("remainder: {}", chain.remainder()));
    w.line(format!("peel degrees: {:?}", chain.peel_degrees()));

    w.check("remainder 0", chain.remainder().is_zero(), "");
    w.check(
        "peel degrees",
        chain.peel_degrees() == [3, 2, 1],
        "one peel per degree",
    );
    w.check(
        "reconstruction",
        chain.to_polynomial()?.equals_as_map(&r)?,
        "",
    );
    let expanded = bracket_chain(
        "(j⊗)(jl - k) + i(⊗1) + (x⊗)k - (x⊗)jl - (jx)(⊗1) - (xk)(⊗1) + (x^2)(⊗1)",
        &["k"],
        "0",
    )?;
    w.check(
        "quotient term by term",
        chain.equals_as_map(&expanded)?,
        "equal as maps",
    );
    let factored = bracket_chain("((x - j)⊗)(k - jl) + (x^2 - jx - xk + i)(⊗1)", &["k"], "0")?;
    w.check(
        "quotient ((x - j)⊗)(k - jl) + (x^2 - jx - xk + i)(⊗1)",
        chain.equals_as_map(&factored)?,
        "equal as maps",
    );
    let cancel = elem("kl + i(jl) - ik - j", &o)?;
    w.check(
        "kl + i(jl) - ik - j = 0",
        cancel.is_zero(),
        cancel.to_string(),
    );
    let ijl = elem("i(jl)", &o)?;
    w.check("i(jl) = -kl", ijl == -o.e("kl"), ijl.to_string());
    let assoc = associator(&o.e("i"), &o.e("j"), &o.e("l"));
    w.check(
        "(ij)l differs from i(jl)",
        !assoc.is_zero(),
        format!("associator {assoc}"),
    );
    Ok(w)
}

fn octonion_factor_chain() -> Result<Worked> {
    let mut w = Worked::new("11.3", "the octonion cubic through x - j and x - k");
    let o = octonions();
    let r = octonion_cubic()?;
    let r1 = parse_value("x^2 - jx - xk + i", &o)?.into_bracket_polynomial()?;
    let inner = bdivide_monic(&r1, &o.e("j"))?;
    w.line(format!("r1(x) = {inner}"));
    let chain = bfactor_chain(&r, &[o.e("j"), o.e("k")])?;
    w.line(format!("r(x) = {chain}"));

    let published_inner = bracket_chain("(1⊗)(j - k) + (x - j)(⊗1)", &["j"], "0")?;
    w.check(
        "inner quotient (1⊗)(j - k) + (x - j)(⊗1)",
        inner.equals_as_map(&published_inner)?,
        "equal as maps",
    );
    let published = bracket_chain(
        "((1⊗₁)1⊗₂)(k - jl) + ((1⊗₁)(j - k))(⊗₂1) + ((x - j)(⊗₁1))(⊗₂1)",
        &["j", "k"],
        "0",
    )?;
    w.check(
        "two-slot form",
        chain.equals_as_map(&published)?,
        "equal as maps",
    );
    let points = sample_points(&o, 20, 113);
    w.check(
        "chain agrees with r at 20 sample points",
        bracket_agrees_at(&chain, &r, &points)?,
        "exact",
    );
    w.check(
        "published form agrees with r at 20 sample points",
        bracket_agrees_at(&published, &r, &points)?,
        "exact",
    );
    Ok(w)
}
