//! Writes a cocycle of `M_6` as a coboundary, constructively and by linear solve.

use sullivan::models::{build_mk, coboundary_by_factorization};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = build_mk(6)?;
    let alg = &m.algebra;
    let c = alg.apply(&alg.parse("x1^2*x2*y1*y3")?);
    println!("c = {c}");
    let f = coboundary_by_factorization(&m, &c)?;
    println!("factorization: w = {}", f.preimage);
    println!("d(w) = c: {}", alg.apply(&f.preimage) == c);
    if let Some(w) = alg.coboundary_preimage(&c)? {
        println!("linear solve:  w = {w}");
    }
    Ok(())
}
