//! Homotopy classes of self-maps of `M_k` with their derivations.

use sullivan::endo::solve_rigid;
use sullivan::models::build_mk;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k: i64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(6);
    let r = solve_rigid(&build_mk(k)?)?;
    for d in &r.derivations {
        println!("{}:", d.class);
        for s in &d.steps {
            println!("  [{}] {}", s.rule, s.statement);
        }
    }
    println!("composition {:?}", r.composition);
    Ok(())
}
