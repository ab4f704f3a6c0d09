//! Builds `M_k` and prints its generators, differential and formal dimension.
//!
//!     cargo run --example build_model -- 8

use sullivan::models::build_mk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let m = build_mk(k)?;
    let alg = &m.algebra;
    for (i, g) in alg.space().generators().iter().enumerate() {
        println!("{:>3}  degree {:<5} d = {}", g.name(), g.degree(), alg.d_generator(i));
    }
    println!("d^2 = 0: {}", alg.check_d_squared());
    println!("formal dimension {}", alg.formal_dimension());
    Ok(())
}
