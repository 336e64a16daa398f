use serde_json::{json, Value as Json};

use super::{worked, Check, Command, Context, Failure, Outcome};
use crate::algebra::{fmt_rational, sqrt, Element, SquareRoots};
use crate::division::{divide_linear, divide_monic, factor_chain, QuotientChain};
use crate::expr::{parse_with_warnings, Value};
use crate::nonassoc::{bdivide_monic, bfactor_chain, BracketChain, BracketPolynomial};
use crate::ore::LeftPolynomial;
use crate::poly::Polynomial;
use crate::tensor::{SolutionSet, TensorSum};
use crate::Error;

type Run = Result<Outcome, Failure>;

pub(super) fn dispatch(cmd: &Command, ctx: &mut Context) -> Run {
    match cmd {
        Command::Eval { poly, at } => {
            let src = ctx.primary("poly", poly.clone())?;
            ctx.record("at", at);
            eval(ctx, &src, at)
        }
        Command::Mul { args } => {
            let (p, q) = ctx.pair(["p", "q"], args.clone())?;
            mul(ctx, &p, &q)
        }
        Command::Solve { args } => {
            let (a, b) = ctx.pair(["tensor", "b"], args.clone())?;
            solve(ctx, &a, &b)
        }
        Command::Matrix { tensor } => {
            let src = ctx.primary("tensor", tensor.clone())?;
            matrix(ctx, &src)
        }
        Command::Sqrt { value } => {
            let src = ctx.primary("quaternion", value.clone())?;
            square_root(ctx, &src)
        }
        Command::Divide { poly, by, general } => {
            let src = ctx.primary("poly", poly.clone())?;
            match (by, general) {
                (_, Some(g)) => {
                    ctx.record("p1", &g[0]);
                    ctx.record("p0", &g[1]);
                    divide_general(ctx, &src, &g[0], &g[1])
                }
                (Some(by), None) => {
                    ctx.record("by", by);
                    if ctx.algebra.is_associative() {
                        divide(ctx, &src, by)
                    } else {
                        odivide(ctx, &src, by)
                    }
                }
                (None, None) => Err(Failure::Usage("missing --by or --general".into())),
            }
        }
        Command::FactorChain { poly, roots } => {
            let src = ctx.primary("poly", poly.clone())?;
            ctx.record("roots", &roots.join(","));
            if ctx.algebra.is_associative() {
                factor(ctx, &src, roots)
            } else {
                ofactor(ctx, &src, roots)
            }
        }
        Command::OreMul { args } => {
            let (p, q) = ctx.pair(["p", "q"], args.clone())?;
            ore_mul(ctx, &p, &q)
        }
        Command::OreCheck => ore_check(),
        Command::Odivide { poly, by, roots } => {
            let src = ctx.primary("poly", poly.clone())?;
            match (by, roots) {
                (Some(by), _) => {
                    ctx.record("by", by);
                    odivide(ctx, &src, by)
                }
                (None, Some(roots)) => {
                    ctx.record("roots", &roots.join(","));
                    ofactor(ctx, &src, roots)
                }
                (None, None) => Err(Failure::Usage("missing --by or --roots".into())),
            }
        }
        Command::PaperExample { id } => {
            ctx.record("id", id);
            paper_example(id)
        }
    }
}

fn value(ctx: &mut Context, src: &str) -> Result<Value, Failure> {
    let (v, warnings) = parse_with_warnings(src, &ctx.algebra)?;
    ctx.warnings.extend(warnings);
    Ok(v)
}

fn element(ctx: &mut Context, src: &str) -> Result<Element, Failure> {
    Ok(value(ctx, src)?.into_element()?)
}

pub(crate) fn element_json(e: &Element) -> Json {
    json!({
        "text": e.to_string(),
        "coords": e.coords().iter().map(fmt_rational).collect::<Vec<_>>(),
    })
}

fn solution_json(s: &SolutionSet) -> Json {
    let mut out = json!({ "kind": "solution_set", "type": s.kind(), "text": s.to_string() });
    match s {
        SolutionSet::Unique(x) => out["value"] = element_json(x),
        SolutionSet::Empty => {}
        SolutionSet::Affine { particular, kernel } => {
            out["particular"] = element_json(particular);
            out["kernel"] = kernel.iter().map(element_json).collect();
        }
    }
    out
}

fn simple(kind: &str, text: String) -> Outcome {
    Outcome {
        result: json!({ "kind": kind, "text": text }),
        text: vec![text],
        ..Outcome::default()
    }
}

fn eval(ctx: &mut Context, src: &str, at: &str) -> Run {
    let x = element(ctx, at)?;
    let v = if ctx.algebra.is_associative() {
        value(ctx, src)?.into_polynomial()?.evaluate(&x)?
    } else {
        value(ctx, src)?.into_bracket_polynomial()?.evaluate(&x)?
    };
    let mut out = simple("element", v.to_string());
    out.result["value"] = element_json(&v);
    Ok(out)
}

fn mul(ctx: &mut Context, p: &str, q: &str) -> Run {
    if ctx.algebra.is_associative() {
        let prod = value(ctx, p)?
            .into_polynomial()?
            .checked_mul(&value(ctx, q)?.into_polynomial()?)?
            .simplified();
        let mut out = simple("polynomial", prod.to_string());
        out.result["degree"] = json!(prod.degree()?);
        Ok(out)
    } else {
        let prod = value(ctx, p)?
            .into_bracket_polynomial()?
            .bracket_mul(&value(ctx, q)?.into_bracket_polynomial()?)?;
        Ok(simple("bracket_polynomial", prod.to_string()))
    }
}

fn solve(ctx: &mut Context, a: &str, b: &str) -> Run {
    let t = value(ctx, a)?.into_tensor()?;
    let b = element(ctx, b)?;
    let s = t.solve(&b)?;
    let mut checks = Vec::new();
    match &s {
        SolutionSet::Unique(x) | SolutionSet::Affine { particular: x, .. } => {
            checks.push(Check::new(
                "substitution",
                t.apply_linear(x)? == b,
                "a ∘ x = b",
            ));
        }
        SolutionSet::Empty => {}
    }
    Ok(Outcome {
        text: vec![s.to_string()],
        result: solution_json(&s),
        checks,
        notes: Vec::new(),
    })
}

fn matrix(ctx: &mut Context, src: &str) -> Run {
    let t = value(ctx, src)?.into_tensor()?;
    let m = t.matrix_of()?;
    let det = m.determinant();
    let mut text: Vec<String> = m.to_string().lines().map(str::to_string).collect();
    text.push(format!("det = {}", fmt_rational(&det)));
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(fmt_rational).collect())
        .collect();
    Ok(Outcome {
        result: json!({
            "kind": "matrix",
            "text": text.join("\n"),
            "rows": rows,
            "determinant": fmt_rational(&det),
        }),
        text,
        ..Outcome::default()
    })
}

fn square_root(ctx: &mut Context, src: &str) -> Run {
    let a = element(ctx, src)?;
    let roots = sqrt(&a)?;
    let text = roots.to_string();
    let mut result = json!({ "kind": "square_roots", "text": text });
    let mut checks = Vec::new();
    match &roots {
        SquareRoots::Pair(..) => {
            result["type"] = json!("pair");
            result["roots"] = roots
                .roots()
                .iter()
                .map(|r| json!({ "text": r.to_string(), "coords": r.coords() }))
                .collect();
            let target = crate::algebra::FloatElement::from(&a);
            for (n, r) in roots.roots().iter().enumerate() {
                let err = r.mul(r).max_abs_diff(&target);
                checks.push(Check::new(
                    format!("root {} squared", n + 1),
                    err < 1e-10,
                    format!("|x^2 - a| = {err:.1e}"),
                ));
            }
        }
        SquareRoots::DoubleZero => result["type"] = json!("double_zero"),
        SquareRoots::Sphere { radius_sq } => {
            result["type"] = json!("sphere");
            result["radius_sq"] = json!(fmt_rational(radius_sq));
        }
    }
    Ok(Outcome {
        text: text.lines().map(str::to_string).collect(),
        result,
        checks,
        notes: Vec::new(),
    })
}

fn chain_outcome(chain: &QuotientChain, r: &Polynomial, root: Option<&Element>) -> Run {
    let mut checks = vec![Check::new(
        "reconstruction",
        chain.reconstructs(r)?,
        "remainder + q ∘ p equals the dividend as a map",
    )];
    if let Some(a) = root {
        let ra = r.evaluate(a)?;
        checks.push(Check::new(
            "remainder equals r(root)",
            &ra == chain.remainder(),
            format!("r({a}) = {ra}"),
        ));
    }
    let text = vec![
        format!("r(x) = {chain}"),
        format!("remainder: {}", chain.remainder()),
    ];
    Ok(Outcome {
        result: json!({
            "kind": "quotient_chain",
            "text": chain.to_string(),
            "remainder": element_json(chain.remainder()),
            "peel_degrees": chain.peel_degrees(),
        }),
        text,
        checks,
        notes: Vec::new(),
    })
}

fn divide(ctx: &mut Context, src: &str, by: &str) -> Run {
    let r = value(ctx, src)?.into_polynomial()?;
    let d = value(ctx, by)?.into_polynomial()?;
    if d.degree()? != Some(1) || d.formal_degree() != Some(1) {
        return Err(Error::NotLinear(d.formal_degree().unwrap_or(0)).into());
    }
    let p1 = d.component(1).expect("degree one").clone();
    let p0 = d.constant_term();
    if p1.equals_as_map(&TensorSum::identity(&ctx.algebra))? {
        let a = -p0;
        let chain = divide_monic(&r, &a)?;
        chain_outcome(&chain, &r, Some(&a))
    } else {
        general(&r, &p1, &p0)
    }
}

fn divide_general(ctx: &mut Context, src: &str, p1: &str, p0: &str) -> Run {
    let r = value(ctx, src)?.into_polynomial()?;
    let p1 = value(ctx, p1)?.into_tensor()?;
    let p0 = element(ctx, p0)?;
    general(&r, &p1, &p0)
}

fn general(r: &Polynomial, p1: &TensorSum, p0: &Element) -> Run {
    let chain = divide_linear(r, p1, p0)?;
    let root = p1.inverse_tensor()?.apply_linear(&-p0)?;
    chain_outcome(&chain, r, Some(&root))
}

fn roots(ctx: &mut Context, srcs: &[String]) -> Result<Vec<Element>, Failure> {
    srcs.iter().map(|s| element(ctx, s)).collect()
}

fn factor(ctx: &mut Context, src: &str, root_srcs: &[String]) -> Run {
    let r = value(ctx, src)?.into_polynomial()?;
    let roots = roots(ctx, root_srcs)?;
    let chain = factor_chain(&r, &roots)?;
    let back = chain.to_polynomial()?;
    let checks = vec![Check::new(
        "reconstruction",
        back.equals_as_map(&r)?,
        "expanded chain equals the dividend as a map",
    )];
    let rem = chain
        .remainders()
        .iter()
        .fold(ctx.algebra.zero(), |acc, e| &acc + e);
    Ok(Outcome {
        text: vec![format!("r(x) = {chain}"), format!("remainder: {rem}")],
        result: json!({
            "kind": "factor_chain",
            "text": chain.to_string(),
            "remainder": element_json(&rem),
        }),
        checks,
        notes: Vec::new(),
    })
}

/// Reads `x - a` and returns `a`.
fn bracket_root(p: &BracketPolynomial) -> Result<Element, Failure> {
    let a = -p.evaluate(&p.algebra().zero())?;
    if !p.equals_as_map(&BracketPolynomial::linear(&a))? {
        return Err(
            Error::InvalidExpression(format!("divisor {p} is not of the form x - a")).into(),
        );
    }
    Ok(a)
}

fn bracket_outcome(chain: &BracketChain, r: &BracketPolynomial, root: Option<&Element>) -> Run {
    let mut checks = vec![Check::new(
        "reconstruction",
        chain.to_polynomial()?.equals_as_map(r)?,
        "remainder + q ∘ p equals the dividend as a map",
    )];
    if let Some(a) = root {
        let ra = r.evaluate(a)?;
        checks.push(Check::new(
            "remainder equals r(root)",
            &ra == chain.remainder(),
            format!("r({a}) = {ra}"),
        ));
    }
    Ok(Outcome {
        text: vec![
            format!("r(x) = {chain}"),
            format!("remainder: {}", chain.remainder()),
        ],
        result: json!({
            "kind": "bracket_chain",
            "text": chain.to_string(),
            "remainder": element_json(chain.remainder()),
            "peel_degrees": chain.peel_degrees(),
        }),
        checks,
        notes: Vec::new(),
    })
}

fn odivide(ctx: &mut Context, src: &str, by: &str) -> Run {
    let r = value(ctx, src)?.into_bracket_polynomial()?;
    let a = bracket_root(&value(ctx, by)?.into_bracket_polynomial()?)?;
    let chain = bdivide_monic(&r, &a)?;
    bracket_outcome(&chain, &r, Some(&a))
}

fn ofactor(ctx: &mut Context, src: &str, root_srcs: &[String]) -> Run {
    let r = value(ctx, src)?.into_bracket_polynomial()?;
    let roots = roots(ctx, root_srcs)?;
    let chain = bfactor_chain(&r, &roots)?;
    bracket_outcome(&chain, &r, None)
}

fn left(ctx: &mut Context, src: &str) -> Result<LeftPolynomial, Failure> {
    Ok(LeftPolynomial::from_polynomial(
        &value(ctx, src)?.into_polynomial()?,
    )?)
}

fn ore_mul(ctx: &mut Context, p: &str, q: &str) -> Run {
    let (p, q) = (left(ctx, p)?, left(ctx, q)?);
    let prod = p.left_mul(&q)?;
    let mut out = simple("left_polynomial", prod.to_string());
    out.result["coeffs"] = prod.coeffs().iter().map(element_json).collect();
    Ok(out)
}

fn ore_check() -> Run {
    let r = crate::ore::weierstrass_step_check()?;
    let text = vec![
        format!("L(x) = {}", r.left),
        format!("R(x) = {}", r.right),
        format!("P(x) = (L * R)(x) = {}", r.product),
        format!("h = R(i) = {}", r.h),
        format!("P1(x) = L(h x h^-1) R(x) = {}", r.claimed.simplified()),
        format!("P({}) = {}", r.point, r.product_value),
        format!("P1({}) = {}", r.point, r.claimed_value),
    ];
    let verdict = if r.differs {
        "P1 differs from P"
    } else {
        "P1 agrees with P"
    };
    Ok(Outcome {
        result: json!({
            "kind": "weierstrass_check",
            "text": text.join("\n"),
            "point": element_json(&r.point),
            "product_value": element_json(&r.product_value),
            "claimed_value": element_json(&r.claimed_value),
            "differs": r.differs,
        }),
        text,
        checks: vec![Check::new("evaluation", true, verdict)],
        notes: Vec::new(),
    })
}

fn paper_example(id: &str) -> Run {
    let expected = worked::expected(id).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown example '{id}'; available: {}",
            worked::IDS.join(", ")
        ))
    })?;
    let w = worked::run(id)?;
    let rendered = w.render();
    let diff = first_difference(expected, &rendered);
    let mut checks = w.checks.clone();
    checks.push(Check::new(
        "matches stored output",
        diff.is_none(),
        diff.clone().unwrap_or_default(),
    ));
    let mut notes = Vec::new();
    if diff.is_some() {
        notes.push(format!("--- expected\n{expected}--- actual\n{rendered}"));
    }
    Ok(Outcome {
        text: w.lines.clone(),
        result: json!({ "kind": "worked_example", "id": id, "title": w.title, "text": w.lines.join("\n") }),
        checks,
        notes,
    })
}

fn first_difference(expected: &str, actual: &str) -> Option<String> {
    let (e, a): (Vec<&str>, Vec<&str>) = (expected.lines().collect(), actual.lines().collect());
    (0..e.len().max(a.len()))
        .find(|&n| e.get(n) != a.get(n))
        .map(|n| {
            format!(
                "line {}: expected {:?}, got {:?}",
                n + 1,
                e.get(n).copied().unwrap_or("<end>"),
                a.get(n).copied().unwrap_or("<end>")
            )
        })
}
