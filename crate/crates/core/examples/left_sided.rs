// Left-sided polynomials and their product.

use ncpoly::ore::{weierstrass_step_check, LeftPolynomial};
use ncpoly::{quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let l = LeftPolynomial::monic_linear(&h.e("i"));
    let r = LeftPolynomial::monic_linear(&h.e("j"));
    let p = l.left_mul(&r)?;
    println!("({l}) * ({r}) = {p}");
    println!("P(i) = {}", p.left_eval(&h.e("i"))?);

    let report = weierstrass_step_check()?;
    println!("h = {}", report.h);
    println!(
        "P({0}) = {1}, P1({0}) = {2}",
        report.point, report.product_value, report.claimed_value
    );
    println!("factorisation fails: {}", report.differs);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
