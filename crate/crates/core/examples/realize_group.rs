//! Realizes a finite group as the self-equivalences of a graph model.
//!
//!     cargo run --example realize_group -- S3

use sullivan::graphs::FiniteGroup;
use sullivan::run::cmd_realize;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "Z3".into());
    let spec = FiniteGroup::preset(&name)?.spec(None);
    let report = cmd_realize(&spec, 1)?;
    for line in report.summary_lines() {
        println!("{line}");
    }
    Ok(())
}
