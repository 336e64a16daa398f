// Products of polynomials and comparison as maps.

use ncpoly::expr::parse_value;
use ncpoly::poly::{given_roots_pair, solve_map_combination};
use ncpoly::{quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let p = parse_value("x - j", &h)?.into_polynomial()?;
    let q = parse_value("x - i", &h)?.into_polynomial()?;
    let pq = p.checked_mul(&q)?;
    println!("(x - j)(x - i) = {}", pq.simplified());
    let expanded = parse_value("x^2 - jx - xi - k", &h)?.into_polynomial()?;
    println!(
        "equal to x^2 - jx - xi - k as maps: {}",
        pq.equals_as_map(&expanded)?
    );
    println!("value at i: {}", pq.evaluate(&h.e("i"))?);

    let (p12, p21) = given_roots_pair(&h.e("i"), &h.e("j"))?;
    let target = parse_value("x^2 + 1", &h)?.into_polynomial()?;
    let found = solve_map_combination(&[p12, p21], &target)?;
    println!(
        "x^2 + 1 from (x - i)(x - j) and (x - j)(x - i): {}",
        if found.is_some() { "yes" } else { "no" }
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
