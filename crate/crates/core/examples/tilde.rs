//! Odd-dimensional extension of `M_1(P_k)`.

use sullivan::graphs::builtin;
use sullivan::models::{build_mng, chirality_dimension_closed_form, monomial_cocycle, tilde};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 2..=4usize {
        let m = build_mng(1, &builtin::path(k))?;
        let fd = m.algebra.formal_dimension();
        let x = monomial_cocycle(&m.algebra, fd)?.ok_or("no monomial cocycle in top degree")?;
        let t = tilde(&m.algebra, &x, fd)?;
        println!(
            "|V| = {k}: dim {fd} -> {} (closed form {}, mod 4 = {}), killing {x}",
            t.formal_dimension(),
            chirality_dimension_closed_form(1, k as i64),
            t.formal_dimension() % 4
        );
    }
    Ok(())
}
