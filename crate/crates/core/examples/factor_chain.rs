// A cubic written through two linear factors.

use ncpoly::division::factor_chain;
use ncpoly::expr::parse_value;
use ncpoly::{quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let r = parse_value("(x - j)(x - k)(x - j - k)", &h)?.into_polynomial()?;
    let chain = factor_chain(&r, &[h.e("j"), h.e("k")])?;
    println!("r(x) = {}", r.simplified());
    println!("r(x) = {chain}");
    println!(
        "remainders: {:?}",
        chain
            .remainders()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    println!(
        "expands to r: {}",
        chain.to_polynomial()?.equals_as_map(&r)?
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
