// Exact quaternion and octonion arithmetic.

use ncpoly::algebra::{rat, sqrt};
use ncpoly::nonassoc::associator;
use ncpoly::{octonions, quaternions, Element, Result};

fn run() -> Result<()> {
    let h = quaternions();
    let (i, j, k) = (h.e("i"), h.e("j"), h.e("k"));
    println!("ij = {}, ji = {}", &i * &j, &j * &i);
    let a = Element::new(&h, vec![rat(1, 2), rat(-1, 3), rat(0, 1), rat(2, 1)])?;
    println!("a = {a}, |a|^2 = {}", a.norm_sq());
    println!("a^-1 = {}", a.inverse()?);
    println!("sqrt(k) =\n{}", sqrt(&k)?);
    println!("sqrt(-4) = {}", sqrt(&h.e("1").scale(&rat(-4, 1)))?);

    let o = octonions();
    let (i, j, l) = (o.e("i"), o.e("j"), o.e("l"));
    println!("(ij)l = {}, i(jl) = {}", &(&i * &j) * &l, &i * &(&j * &l));
    println!("associator(i, j, l) = {}", associator(&i, &j, &l));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
