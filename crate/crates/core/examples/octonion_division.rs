// Division of a bracketed octonion polynomial.

use ncpoly::expr::parse_value;
use ncpoly::nonassoc::{bdivide_monic, bfactor_chain};
use ncpoly::{octonions, Result};

fn run() -> Result<()> {
    let o = octonions();
    let r = parse_value("((x - j)(x - k))(x - jl)", &o)?.into_bracket_polynomial()?;
    println!("r(x) = {r}");
    let chain = bdivide_monic(&r, &o.e("k"))?;
    println!("r(x) = {chain}");
    println!("remainder: {}", chain.remainder());
    let two = bfactor_chain(&r, &[o.e("j"), o.e("k")])?;
    println!("r(x) = {two}");
    println!(
        "value at l: {} = {}",
        r.evaluate(&o.e("l"))?,
        two.evaluate(&o.e("l"))?
    );
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
