//! Self-map monoid of `M_1(G)` for a named graph.
//!
//!     cargo run --example self_maps -- cycle4

use sullivan::endo::solve_graph;
use sullivan::graphs::builtin;
use sullivan::models::build_mng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "path3".into());
    let g = builtin::by_name(&name).ok_or("unknown graph")?;
    let report = solve_graph(&build_mng(1, &g)?)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
