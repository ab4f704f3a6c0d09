//! Automorphism group of a builtin graph.
//!
//!     cargo run --example automorphisms -- petersen

use sullivan::graphs::{automorphisms, builtin};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C5".into());
    let g = builtin::by_name(&name).ok_or("unknown graph")?;
    let aut = automorphisms(&g)?;
    println!("{name}: {} vertices, {} edges, |Aut| = {}", g.len(), g.edge_count(), aut.order());
    for p in aut.elements.iter().take(12) {
        println!("  {}", p.cycle_string(g.labels()));
    }
    if aut.order() > 12 {
        println!("  ...");
    }
    Ok(())
}
