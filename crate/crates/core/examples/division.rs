// Division by linear polynomials.

use ncpoly::division::{divide_linear, divide_monic};
use ncpoly::expr::parse_value;
use ncpoly::{quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let r = parse_value("x^2 - ix - jx - k", &h)?.into_polynomial()?;
    for root in ["i", "j"] {
        let a = parse_value(root, &h)?.into_element()?;
        let chain = divide_monic(&r, &a)?;
        println!("r(x) = {chain}");
        println!(
            "  remainder {} = r({a}) = {}",
            chain.remainder(),
            r.evaluate(&a)?
        );
    }

    let p1 = parse_value("2 @ 1 + i @ j", &h)?.into_tensor()?;
    let p0 = h.e("k");
    let chain = divide_linear(&r, &p1, &p0)?;
    println!("dividing by ({p1}) ∘ x + k leaves {}", chain.remainder());
    println!("  reconstructs r: {}", chain.reconstructs(&r)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
