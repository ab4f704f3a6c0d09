//! Divisibility tables and the diophantine lemma over a parameter range.

use sullivan::arithmetic::{dioph_no_solution_check, sweep_mk, sweep_mng, DegreeScheme};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mk = sweep_mk(200)?;
    let mng = sweep_mng(100)?;
    println!("M_k tables, k <= 200: {}", if mk.passed { "hold" } else { "FAIL" });
    println!("M_n(G) tables, n <= 100: {}", if mng.passed { "hold" } else { "FAIL" });

    let s = DegreeScheme::mng(1)?;
    println!("n = 1: |x1| = {}, |x2| = {}, |x_v| = {}, |z| = {}", s.x1, s.x2, s.xv.unwrap_or(0), s.z);
    for c in dioph_no_solution_check(1)?.checks {
        println!("  {:<22} {:>6}  {}", c.name, c.value, c.verdict);
    }
    Ok(())
}
