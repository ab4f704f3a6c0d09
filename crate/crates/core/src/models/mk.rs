use crate::arithmetic::DegreeScheme;
use crate::cdga::{Cdga, GeneratorSpace, Polynomial};
use crate::graphs::SimpleGraph;
use crate::Result;

use super::{deg, GenIndex, SullivanModel};

/// The rigid algebra on `x1, x2, y1, y2, y3, z`.
#[derive(Clone, Debug)]
pub struct ModelMk {
    pub k: i64,
    pub scheme: DegreeScheme,
    pub algebra: Cdga,
    pub index: GenIndex,
}

pub fn build_mk(k: i64) -> Result<ModelMk> {
    let scheme = DegreeScheme::mk(k)?;
    let algebra = rigid_algebra(&scheme, &[])?;
    let index = GenIndex::locate(&algebra, &[])?;
    Ok(ModelMk { k, scheme, algebra, index })
}

pub(crate) fn rigid_generators(s: &DegreeScheme) -> Vec<(String, u32)> {
    [("x1", s.x1), ("x2", s.x2), ("y1", s.y1), ("y2", s.y2), ("y3", s.y3), ("z", s.z)]
        .into_iter()
        .map(|(n, d)| (n.to_string(), deg(d)))
        .collect()
}

/// Differential of the rigid generators, over `space`.
pub(crate) fn rigid_differential(s: &DegreeScheme, space: &std::sync::Arc<GeneratorSpace>) -> Result<Vec<(String, Polynomial)>> {
    // exponents: x1^{3k-12} prefix, x1^{3k-1}, x2^{(5k-2)/2} with k = (|x1| + 2) / 5
    let k = (s.x1 + 2) / 5;
    let dz = format!(
        "x1^{}*(x1^2*y2*y3 - x1*x2*y1*y3 + x2^2*y1*y2) + x1^{} + x2^{}",
        3 * k - 12,
        3 * k - 1,
        (5 * k - 2) / 2
    );
    let p = |src: &str| Polynomial::parse(space, src);
    Ok(vec![
        ("y1".into(), p("x1^3*x2")?),
        ("y2".into(), p("x1^2*x2^2")?),
        ("y3".into(), p("x1*x2^3")?),
        ("z".into(), p(&dz)?),
    ])
}

pub(crate) fn rigid_algebra(s: &DegreeScheme, extra: &[(String, u32)]) -> Result<Cdga> {
    let mut gens = rigid_generators(s);
    gens.extend_from_slice(extra);
    let space = GeneratorSpace::from_pairs(&gens)?;
    let d = rigid_differential(s, &space)?;
    Cdga::new(space, d)
}

impl SullivanModel for ModelMk {
    fn algebra(&self) -> &Cdga {
        &self.algebra
    }
    fn scheme(&self) -> &DegreeScheme {
        &self.scheme
    }
    fn index(&self) -> &GenIndex {
        &self.index
    }
    fn graph(&self) -> Option<&SimpleGraph> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees_and_shape() {
        let m = build_mk(6).unwrap();
        let degs: Vec<u32> = m.algebra.space().generators().iter().map(|g| g.degree()).collect();
        assert_eq!(degs, [28, 34, 117, 123, 129, 475]);
        assert!(m.algebra.check_d_squared());
        assert!(m.algebra.is_minimal());
        assert_eq!(m.algebra.connectivity(), 27);
        assert_eq!(m.algebra.formal_dimension(), 784);
        let dz = m.algebra.d_of("z").unwrap();
        assert_eq!(dz, &m.algebra.parse("x1^6*(x1^2*y2*y3 - x1*x2*y1*y3 + x2^2*y1*y2) + x1^17 + x2^14").unwrap());
        assert_eq!(build_mk(8).unwrap().scheme.z, 873);
        assert!(build_mk(5).is_err());
    }
}
