//! Ellipticity certificate of `M_1(K3)`.

use sullivan::graphs::builtin;
use sullivan::models::{build_mng, ellipticity_certificates};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = build_mng(1, &builtin::complete(3))?;
    let cert = ellipticity_certificates(&m)?;
    for id in &cert.identities {
        println!("d({}) = {}: {}", id.element, id.expected, id.holds);
    }
    for n in &cert.nilpotency {
        println!("{} nilpotent with exponent {:?} ({})", n.generator, n.exponent, n.method);
    }
    println!("elliptic: {}", cert.passed);
    Ok(())
}
