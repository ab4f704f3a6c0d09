use crate::arithmetic::DegreeScheme;
use crate::cdga::{Cdga, Polynomial};
use crate::graphs::SimpleGraph;
use crate::Result;

use super::mk::{rigid_differential, rigid_generators};
use super::{deg, vertex_x, vertex_z, GenIndex, SullivanModel};

/// The graph algebra: the rigid part tensored with `x[v], z[v]` for every vertex.
#[derive(Clone, Debug)]
pub struct ModelMnG {
    pub n: i64,
    pub graph: SimpleGraph,
    pub scheme: DegreeScheme,
    pub algebra: Cdga,
    pub index: GenIndex,
}

pub fn build_mng(n: i64, graph: &SimpleGraph) -> Result<ModelMnG> {
    let scheme = DegreeScheme::mng(n)?;
    let xv = deg(scheme.xv.expect("graph family"));
    let mut gens = rigid_generators(&scheme);
    for l in graph.labels() {
        gens.push((vertex_x(l), xv));
        gens.push((vertex_z(l), deg(scheme.z)));
    }
    let space = crate::cdga::GeneratorSpace::from_pairs(&gens)?;
    let mut d = rigid_differential(&scheme, &space)?;
    let x2_pow = Polynomial::named(&space, "x2")?.pow((5 * n + 3) as u32);
    for v in 0..graph.len() {
        let x = |w: usize| Polynomial::named(&space, &vertex_x(graph.label(w)));
        let mut dzv = x(v)?.pow(3);
        for &w in graph.neighbors(v) {
            dzv = &dzv + &(&(&x(v)? * &x(w)?) * &x2_pow);
        }
        d.push((vertex_z(graph.label(v)), dzv));
    }
    let algebra = Cdga::new(space, d)?;
    let index = GenIndex::locate(&algebra, graph.labels())?;
    Ok(ModelMnG { n, graph: graph.clone(), scheme, algebra, index })
}

/// `540n² + 984n + 396 + |V|(360n² + 436n + 132)`.
pub fn formal_dimension_closed_form(n: i64, vertices: i64) -> i64 {
    540 * n * n + 984 * n + 396 + vertices * (360 * n * n + 436 * n + 132)
}

impl SullivanModel for ModelMnG {
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
        Some(&self.graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::builtin;
    use crate::models::build_mk;

    #[test]
    fn path_model() {
        let m = build_mng(1, &builtin::path(3)).unwrap();
        assert!(m.algebra.check_d_squared());
        assert!(m.algebra.is_minimal());
        assert_eq!(m.algebra.connectivity(), 47);
        let za = m.algebra.d_of("z[a]").unwrap();
        let zb = m.algebra.d_of("z[b]").unwrap();
        assert_eq!(za.len(), 2);
        assert_eq!(zb.len(), 3);
        assert_eq!(zb, &m.algebra.parse("x[b]^3 + x[a]*x[b]*x2^8 + x[b]*x[c]*x2^8").unwrap());
        assert_eq!(m.algebra.formal_dimension(), 4704);
        assert_eq!(formal_dimension_closed_form(1, 3), 4704);
    }

    #[test]
    fn rigid_part_is_mk() {
        let m = build_mng(1, &builtin::complete(3)).unwrap();
        let r = build_mk(10).unwrap();
        for g in r.algebra.space().generators() {
            let i = m.algebra.space().index_of(g.name()).unwrap();
            assert_eq!(m.algebra.space().degree(i), g.degree());
            let d = m.algebra.transport(r.algebra.d_of(g.name()).unwrap()).unwrap();
            assert_eq!(&d, m.algebra.d_generator(i));
        }
    }
}
