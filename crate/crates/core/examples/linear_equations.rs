// Solving a ∘ x = b for the map x ↦ ix − xi.

use ncpoly::expr::parse_value;
use ncpoly::{quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let a = parse_value("i@1 - 1@i", &h)?.into_tensor()?;
    println!("a = {a}");
    println!("matrix:\n{}", a.matrix_of()?);
    for b in ["1", "k", "j + k"] {
        let b = parse_value(b, &h)?.into_element()?;
        println!("a ∘ x = {b}: {}", a.solve(&b)?);
    }
    let invertible = parse_value("2@1 + i@j", &h)?.into_tensor()?;
    println!("det of {invertible} = {}", invertible.det()?);
    println!("inverse: {}", invertible.inverse_tensor()?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
