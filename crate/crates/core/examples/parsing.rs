// The expression language.

use ncpoly::expr::{parse, parse_with_warnings};
use ncpoly::{octonions, quaternions, Result};

fn run() -> Result<()> {
    let h = quaternions();
    for src in ["(x - j)(x - i)", "i@1 - 1@i", "1/2 i x j + 3", "x^3"] {
        let parsed = parse(src, &h)?;
        let value = ncpoly::expr::lower(&parsed.expr, &h)?;
        println!("{src:>16}  →  {} {value}", value.kind());
    }
    let o = octonions();
    let (value, warnings) = parse_with_warnings("x jl x", &o)?;
    println!("x jl x  →  {value}");
    for w in warnings {
        println!("  warning: {w}");
    }
    match parse("x + q", &h) {
        Err(e) => println!("x + q  →  {e}"),
        Ok(p) => println!("x + q  →  {}", p.expr),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
