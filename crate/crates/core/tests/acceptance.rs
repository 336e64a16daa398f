//! Acceptance run: one pass/fail line per criterion.

mod common;

use std::process::Command;

use ncpoly::algebra::{int, rat, sqrt, FloatElement, SquareRoots};
use ncpoly::division::{
    chain_apply, divide_monic, factor_chain, monic_divisor, FactorChain, QuotientChain,
};
use ncpoly::expr::{parse, parse_value};
use ncpoly::linalg::Matrix;
use ncpoly::nonassoc::{
    bchain_apply, bdivide_monic, bfactor_chain, BracketChain, BracketPolynomial,
};
use ncpoly::ore::weierstrass_step_check;
use ncpoly::poly::{given_roots_pair, solve_map_combination};
use ncpoly::tensor::tensor_of;
use ncpoly::{
    octonions, quaternions, Algebra, Element, Polynomial, PureTensor, SolutionSet, TensorSum,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

/// Dividend, root, remainder, name and published quotient terms.
type DivisionCase = (
    &'static str,
    &'static str,
    &'static str,
    &'static str,
    &'static [(&'static str, &'static str)],
);

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn lib<T>(r: ncpoly::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn h_poly(src: &str) -> Result<Polynomial, String> {
    lib(parse_value(src, &quaternions()).and_then(|v| v.into_polynomial()))
}

fn elem(src: &str, algebra: &Algebra) -> Result<Element, String> {
    lib(parse_value(src, algebra).and_then(|v| v.into_element()))
}

fn h_tensor(src: &str) -> Result<TensorSum, String> {
    lib(parse_value(src, &quaternions()).and_then(|v| v.into_tensor()))
}

fn o_poly(src: &str) -> Result<BracketPolynomial, String> {
    lib(parse_value(src, &octonions()).and_then(|v| v.into_bracket_polynomial()))
}

fn o_chain(src: &str, roots: &[&str]) -> Result<BracketChain, String> {
    let o = octonions();
    let parts = lib(parse_value(src, &o).and_then(|v| v.into_bracket_terms()))?;
    let roots = roots
        .iter()
        .map(|r| elem(r, &o))
        .collect::<Result<Vec<_>, _>>()?;
    lib(BracketChain::new(o.zero(), parts, roots))
}

/// `remainder + Σ P(x) ⊗ c` from sources.
fn h_chain(remainder: &str, terms: &[(&str, &str)]) -> Result<QuotientChain, String> {
    let h = quaternions();
    let parts = terms
        .iter()
        .map(|(p, c)| Ok((h_poly(p)?, elem(c, &h)?)))
        .collect::<Result<Vec<_>, String>>()?;
    lib(QuotientChain::from_terms(elem(remainder, &h)?, parts))
}

fn criterion_1() -> Outcome {
    let h = quaternions();
    let t = h_tensor("i@1 - 1@i")?;
    let published = Matrix::from_rows(
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, -2], [0, 0, 2, 0]]
            .iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect(),
    );
    ensure(
        lib(t.matrix_of())? == published,
        "matrix differs from the published one",
    )?;
    let k = lib(t.solve(&h.e("k")))?;
    let expected = SolutionSet::Affine {
        particular: h.e("j").scale(&rat(1, 2)),
        kernel: vec![h.one(), h.e("i")],
    };
    ensure(k == expected, &format!("solve(k) gave {k}"))?;
    let one = lib(t.solve(&h.one()))?;
    ensure(one == SolutionSet::Empty, &format!("solve(1) gave {one}"))?;
    Ok(format!(
        "matrix exact; solve(k): {k}; solve(1): {}",
        one.kind()
    ))
}

fn criterion_2() -> Outcome {
    let h = quaternions();
    let cases: [DivisionCase; 6] = [
        (
            "(x - j)(x - i)",
            "i",
            "0",
            "quotient (x - j)⊗1",
            &[("x - j", "1")],
        ),
        (
            "(x - i)(x - j)",
            "i",
            "0",
            "quotient -i⊗1 - 1⊗j + 1⊗i + x⊗1",
            &[("-i", "1"), ("1", "-j"), ("1", "i"), ("x", "1")],
        ),
        (
            "x^2 - ix - jx - k",
            "i",
            "0",
            "quotient 1⊗i + (x - i - j)⊗1",
            &[("1", "i"), ("x - i - j", "1")],
        ),
        (
            "x^2 - ix - jx - k",
            "j",
            "-2k",
            "quotient 1⊗j + (x - i - j)⊗1",
            &[("1", "j"), ("x - i - j", "1")],
        ),
        (
            "(x - j)(x - k)(x - j - k)",
            "k",
            "0",
            "cubic quotient",
            &[
                ("j", "j"),
                ("i", "1"),
                ("-x", "j"),
                ("-jx", "1"),
                ("-xk", "1"),
                ("x^2", "1"),
            ],
        ),
        (
            "x^2 - ix - xj + k",
            "i",
            "0",
            "expanded (x - i)(x - j)",
            &[("-i", "1"), ("1", "-j"), ("1", "i"), ("x", "1")],
        ),
    ];
    for (r_src, root, rem, name, terms) in cases {
        let r = h_poly(r_src)?;
        let a = elem(root, &h)?;
        let chain = lib(divide_monic(&r, &a))?;
        ensure(
            chain.remainder() == &elem(rem, &h)?,
            &format!("{r_src}: remainder {}", chain.remainder()),
        )?;
        ensure(
            lib(chain.reconstructs(&r))?,
            &format!("{r_src}: no reconstruction"),
        )?;
        let published = h_chain(rem, terms)?;
        ensure(
            lib(chain.equals_as_map(&published))?,
            &format!("{r_src}: {name} differs"),
        )?;
    }
    Ok("5 published divisions and 1 expansion reproduced; remainders 0, 0, 0, -2k, 0, 0".into())
}

fn criterion_3() -> Outcome {
    let h = quaternions();
    let r = h_poly("(x - j)(x - k)(x - j - k)")?;
    let chain = lib(factor_chain(&r, &[h.e("j"), h.e("k")]))?;
    let e = |s: &str| elem(s, &h);
    let core = |extra: bool| -> Result<FactorChain, String> {
        let mut core = vec![
            lib(PureTensor::new(vec![e("-j")?, e("1")?, e("1")?]))?,
            lib(PureTensor::new(vec![e("-1")?, e("k")?, e("1")?]))?,
            lib(PureTensor::new(vec![e("1")?, e("j")?, e("1")?]))?,
            lib(PureTensor::new(vec![e("1")?, e("1")?, e("1")?, e("1")?]))?,
        ];
        if extra {
            core.push(lib(PureTensor::new(vec![e("-1")?, e("1")?, e("j")?]))?);
        }
        lib(FactorChain::from_core(
            vec![h.zero()],
            vec![e("j")?, e("k")?],
            core,
        ))
    };
    let printed = core(false)?;
    let corrected = core(true)?;
    let points = ncpoly::cli::worked::sample_points(&h, 20, 3);
    let mut printed_ok = true;
    for x in &points {
        let rx = lib(r.evaluate(x))?;
        ensure(
            lib(chain.evaluate(x))? == rx,
            "computed chain disagrees with r",
        )?;
        ensure(
            lib(corrected.evaluate(x))? == rx,
            "corrected published core disagrees with r",
        )?;
        printed_ok &= lib(printed.evaluate(x))? == rx;
    }
    ensure(
        lib(chain.equals_as_map(&corrected))?,
        "chain differs from the corrected core",
    )?;

    let r1 = h_poly("i - jx - xk + x^2")?;
    let inner = lib(divide_monic(&r1, &h.e("j")))?;
    let published_inner = h_chain("0", &[("-j", "1"), ("1", "-k"), ("1", "j"), ("x", "1")])?;
    ensure(inner.remainder().is_zero(), "inner remainder non-zero")?;
    ensure(
        lib(inner.equals_as_map(&published_inner))?,
        "inner quotient differs",
    )?;
    Ok(format!(
        "two-factor form agrees with r at 20 points; inner division reproduced; printed core as typeset {}",
        if printed_ok { "also agrees" } else { "lacks the term -1⊗1⊗j (erratum)" }
    ))
}

fn criterion_4() -> Outcome {
    let h = quaternions();
    let (p12, p21) = lib(given_roots_pair(&h.e("i"), &h.e("j")))?;
    let pair = [p12.clone(), p21.clone()];
    let target = h_poly("x^2 + 1")?;
    ensure(
        lib(solve_map_combination(&pair, &target))?.is_none(),
        "x^2 + 1 reported feasible",
    )?;
    for f in [p12.clone(), lib(p12.checked_add(&p21))?] {
        let a =
            lib(solve_map_combination(&pair, &f))?.ok_or("sanity target reported infeasible")?;
        let combo = lib(Polynomial::map_compose(&a[0], &p12)
            .and_then(|u| Polynomial::map_compose(&a[1], &p21).and_then(|v| u.checked_add(&v))))?;
        ensure(
            lib(combo.equals_as_map(&f))?,
            "returned tensors do not reproduce the target",
        )?;
    }
    Ok("x^2 + 1 infeasible; p12 and p12 + p21 feasible and verified".into())
}

fn criterion_5() -> Outcome {
    let h = quaternions();
    let r = lib(weierstrass_step_check())?;
    ensure(
        r.point == elem("i + j", &h)?,
        "evaluation point is not i + j",
    )?;
    ensure(
        r.product_value == h.e("k"),
        &format!("P(i + j) = {}", r.product_value),
    )?;
    ensure(r.claimed_value != h.e("k") && r.differs, "P1(i + j) = k")?;
    let direct = lib(r.claimed.evaluate(&r.point))?;
    ensure(
        direct == r.claimed_value,
        "reported P1 value is not the evaluation",
    )?;
    Ok(format!(
        "P(i + j) = {}, P1(i + j) = {}",
        r.product_value, r.claimed_value
    ))
}

fn criterion_6() -> Outcome {
    let h = quaternions();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match lib(sqrt(&h.e("i")))? {
        SquareRoots::Pair(p, q) => {
            let want = FloatElement::new(&h, vec![s, s, 0.0, 0.0]);
            let close = |a: &FloatElement, b: &FloatElement| a.max_abs_diff(b) < 1e-10;
            ensure(
                (close(&p, &want) && close(&q, &want.neg()))
                    || (close(&q, &want) && close(&p, &want.neg())),
                "sqrt(i) is not ±(1 + i)/√2",
            )?;
        }
        other => return Err(format!("sqrt(i) gave {other}")),
    }
    let sphere = lib(sqrt(&-h.one()))?;
    ensure(
        sphere == SquareRoots::Sphere { radius_sq: int(1) },
        &format!("sqrt(-1) gave {sphere}"),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut tested = 0;
    while tested < 100 {
        let a = common::element(&mut rng, &h);
        // Re √a = 0 exactly when a is real and non-positive
        if a.is_real() && a.re() <= int(0) {
            continue;
        }
        let roots = lib(sqrt(&a))?.roots();
        ensure(
            roots.len() == 2,
            &format!("sqrt({a}) did not give two roots"),
        )?;
        let target = FloatElement::from(&a);
        for r in roots {
            let err = r.mul(&r).max_abs_diff(&target);
            ensure(err < 1e-10, &format!("|r^2 - a| = {err:e} for a = {a}"))?;
        }
        tested += 1;
    }
    Ok(format!(
        "sqrt(i) within 1e-10; sqrt(-1): {sphere}; {tested} random roots squared within 1e-10"
    ))
}

fn criterion_7() -> Outcome {
    let o = octonions();
    let ijl = elem("i(jl)", &o)?;
    ensure(ijl == -o.e("kl"), &format!("i(jl) = {ijl}"))?;
    let r = o_poly("((x - j)(x - k))(x - jl)")?;
    let chain = lib(bdivide_monic(&r, &o.e("k")))?;
    ensure(
        chain.remainder().is_zero(),
        &format!("remainder {}", chain.remainder()),
    )?;
    ensure(
        lib(chain.to_polynomial().and_then(|p| p.equals_as_map(&r)))?,
        "no reconstruction",
    )?;
    let published = o_chain("((x - j)⊗)(k - jl) + (x^2 - jx - xk + i)(⊗1)", &["k"])?;
    ensure(
        lib(chain.equals_as_map(&published))?,
        "quotient differs from the published one",
    )?;
    let cancel = elem("kl + i(jl) - ik - j", &o)?;
    ensure(
        cancel.is_zero(),
        &format!("final cancellation gives {cancel}"),
    )?;
    let two = lib(bfactor_chain(&r, &[o.e("j"), o.e("k")]))?;
    let published_two = o_chain(
        "((1⊗₁)1⊗₂)(k - jl) + ((1⊗₁)(j - k))(⊗₂1) + ((x - j)(⊗₁1))(⊗₂1)",
        &["j", "k"],
    )?;
    ensure(
        lib(two.equals_as_map(&published_two))?,
        "two-slot form differs",
    )?;
    ensure(
        lib(bchain_apply(&two, two.roots()).and_then(|p| p.equals_as_map(&r)))?,
        "two-slot chain does not expand to r",
    )?;
    Ok(
        "remainder 0; quotient and two-slot form reproduced; kl + i(jl) - ik - j = 0; i(jl) = -kl"
            .into(),
    )
}

fn criterion_8() -> Outcome {
    let h = quaternions();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut nontrivial = 0;
    for n in 0..100 {
        let r = common::polynomial(&mut rng, &h, 3);
        if r.formal_degree().unwrap_or(0) >= 2 {
            nontrivial += 1;
        }
        let a = common::small_element(&mut rng, &h);
        let chain = lib(divide_monic(&r, &a))?;
        let back = lib(chain_apply(&chain, &monic_divisor(&a)))?;
        ensure(
            lib(back.equals_as_map(&r))?,
            &format!("(a) case {n}: chain_apply differs from {r}"),
        )?;
        ensure(
            chain.remainder() == &lib(r.evaluate(&a))?,
            &format!("(b) case {n}: remainder is not r(a)"),
        )?;
    }
    ensure(
        nontrivial >= 50,
        &format!("(a) only {nontrivial} cases of degree at least 2"),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(83);
    for n in 0..100 {
        let p = common::polynomial(&mut rng, &h, 2);
        let q = common::polynomial(&mut rng, &h, 2);
        let x = common::element(&mut rng, &h);
        let pq = lib(p.checked_mul(&q))?;
        let lhs = lib(pq.evaluate(&x))?;
        let rhs = &lib(p.evaluate(&x))? * &lib(q.evaluate(&x))?;
        ensure(
            lhs == rhs,
            &format!("(c) case {n}: (pq)(x) differs from p(x)q(x)"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(84);
    for n in 0..100 {
        let m = common::matrix(&mut rng, 4);
        let t = lib(tensor_of(&h, &m))?;
        ensure(
            lib(t.matrix_of())? == m,
            &format!("(d) case {n}: matrix round trip failed"),
        )?;
    }
    let o = octonions();
    let mut rng = ChaCha8Rng::seed_from_u64(85);
    let mut nontrivial = 0;
    for n in 0..50 {
        let r = common::bracket_polynomial(&mut rng, &o);
        let a = common::small_element(&mut rng, &o);
        let chain = lib(bdivide_monic(&r, &a))?;
        if r.degree().unwrap_or(0) >= 2 && !chain.remainder().is_zero() {
            nontrivial += 1;
        }
        let back = lib(bchain_apply(&chain, std::slice::from_ref(&a)))?;
        ensure(
            lib(back.equals_as_map(&r))?,
            &format!("(e) case {n}: {r} not reconstructed"),
        )?;
        ensure(
            chain.remainder() == &lib(r.evaluate(&a))?,
            &format!("(e) case {n}: remainder is not r(a)"),
        )?;
    }
    ensure(
        nontrivial >= 20,
        &format!("(e) only {nontrivial} cases of degree at least 2"),
    )?;
    Ok("(a) 100, (b) 100, (c) 100, (d) 100, (e) 50 cases exact".into())
}

const ROUND_TRIP_H: [&str; 30] = [
    "x",
    "1",
    "-1",
    "3/4",
    "i",
    "2i",
    "-k",
    "x - i",
    "(x - j)(x - i)",
    "(x - i)(x - j)(x - k)",
    "x^2 + 1",
    "x*x + 1",
    "ix - xi",
    "i x j + k x 1/2",
    "x^3 - jx^2 - xkx",
    "-(x - j)",
    "- -x",
    "(x)",
    "((x))",
    "2(x - 1/3 k)^2",
    "i@1 - 1@i",
    "1@i - j@1",
    "i ⊗ j + k ⊗ k",
    "(1 + i)@(1 - i)",
    "x@1@1 - 1@k@1",
    "-i@j",
    "1/2 i - 1/2 j",
    "x - 5",
    "(k(j - i) - i)i",
    "x^2 - (i + j)x + k",
];

const ROUND_TRIP_O: [&str; 20] = [
    "x",
    "l",
    "il + jl - kl",
    "i(jl)",
    "(ij)l",
    "((x - j)(x - k))(x - jl)",
    "(x - j)((x - k)(x - jl))",
    "x^2 - jx - xk + i",
    "(x⊗)k",
    "(j⊗)(jl - k)",
    "((x - j)⊗)(k - jl)",
    "(x^2 - jx - xk + i)(⊗1)",
    "((1⊗₁)1⊗₂)(k - jl)",
    "((x - j)(⊗₁1))(⊗₂1)",
    "_1 + _2",
    "(x _1) l",
    "x x x",
    "x^3",
    "-(kl) + 2/3",
    "(x(xl))x",
];

fn criterion_9() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_ncpoly");
    let mut failed = Vec::new();
    for id in ncpoly::cli::worked::IDS {
        let status = Command::new(bin)
            .args(["paper-example", id])
            .output()
            .map_err(|e| e.to_string())?
            .status;
        if status.code() != Some(0) {
            failed.push(format!("{id} exited {status}"));
        }
    }
    ensure(failed.is_empty(), &failed.join(", "))?;
    let mut count = 0;
    for (algebra, corpus) in [
        (quaternions(), &ROUND_TRIP_H[..]),
        (octonions(), &ROUND_TRIP_O[..]),
    ] {
        for src in corpus {
            let first = lib(parse(src, &algebra))?.expr;
            let printed = first.to_string();
            let second = lib(parse(&printed, &algebra))
                .map_err(|e| format!("{src} printed as {printed}: {e}"))?
                .expr;
            ensure(
                first == second,
                &format!("{src} printed as {printed} reparses differently"),
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "{} worked examples exit 0; {count} expressions round-trip",
        ncpoly::cli::worked::IDS.len()
    ))
}

fn main() {
    let criteria: [(&str, Criterion); 9] = [
        ("tensor equation ix - xi = b", criterion_1),
        ("monic division", criterion_2),
        ("factor chain", criterion_3),
        ("polynomials with given roots", criterion_4),
        ("left-sided product", criterion_5),
        ("square roots", criterion_6),
        ("octonion division", criterion_7),
        ("property suites", criterion_8),
        ("command line", criterion_9),
    ];
    let mut failures = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", n + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {} FAIL {name}: {detail}", n + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
