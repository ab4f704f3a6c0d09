use super::{builtin, automorphisms, FiniteGroup, GroupSpec, SimpleGraph};
use crate::{Error, Result};

/// Graph whose automorphism group is isomorphic to `group`.
///
/// Each arc `g -> g·s_i` of the Cayley digraph becomes a path `g - p - q - g·s_i`
/// with a pendant path of length `2i + 1` hung on `p` and `2i + 2` on `q`, so
/// arc colour and direction are both rigid. The trivial group is sent to the
/// 6-vertex asymmetric graph.
pub fn frucht_graph(group: &FiniteGroup, generators: &[usize]) -> Result<SimpleGraph> {
    if !group.generates(generators) {
        return Err(Error::InvalidGroup(format!("{generators:?} does not generate the group")));
    }
    let mut gens: Vec<usize> = Vec::new();
    for &s in generators {
        if s != group.identity() && !gens.contains(&s) {
            gens.push(s);
        }
    }
    if gens.is_empty() {
        return Ok(builtin::asymmetric6());
    }
    let mut count = group.order();
    let mut edges = Vec::new();
    for g in 0..group.order() {
        for (i, &s) in gens.iter().enumerate() {
            let h = group.mul(g, s);
            let p = count;
            let q = count + 1;
            count += 2;
            edges.extend([(g, p), (p, q), (q, h)]);
            for (anchor, len) in [(p, 2 * i + 1), (q, 2 * i + 2)] {
                let mut prev = anchor;
                for _ in 0..len {
                    edges.push((prev, count));
                    prev = count;
                    count += 1;
                }
            }
        }
    }
    let labels = (0..count).map(|i| format!("v{i}")).collect();
    SimpleGraph::from_indices(labels, &edges)
}

/// Result of realizing a group as a graph automorphism group.
#[derive(Clone, Debug)]
pub struct Realization {
    pub graph: SimpleGraph,
    pub source: &'static str,
    /// `phi[i]` is the automorphism index corresponding to group element `i`.
    pub isomorphism: Vec<usize>,
}

/// Picks a small graph with `Aut ≅ group` from the catalog when one matches,
/// otherwise the gadget construction, and verifies the isomorphism post hoc.
pub fn realize_group(spec: &GroupSpec) -> Result<Realization> {
    let (group, gens) = spec.resolve()?;
    let catalog: [(&'static str, SimpleGraph); 5] = [
        ("asym6", builtin::asymmetric6()),
        ("P3", builtin::path(3)),
        ("z3_nine", builtin::z3_nine()),
        ("K3", builtin::complete(3)),
        ("C4", builtin::cycle(4)),
    ];
    for (name, graph) in catalog {
        let aut = automorphisms(&graph)?;
        if let Some(iso) = group.isomorphism_to(&aut.group) {
            return Ok(Realization { graph, source: name, isomorphism: iso });
        }
    }
    let graph = frucht_graph(&group, &gens)?;
    let aut = automorphisms(&graph)?;
    let iso = group
        .isomorphism_to(&aut.group)
        .ok_or_else(|| Error::Verification("gadget graph has the wrong automorphism group".into()))?;
    Ok(Realization { graph, source: "frucht", isomorphism: iso })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three() {
        let g = FiniteGroup::cyclic(3);
        let graph = frucht_graph(&g, &[1]).unwrap();
        let aut = automorphisms(&graph).unwrap();
        assert_eq!(aut.order(), 3);
        assert!(g.isomorphism_to(&aut.group).is_some());
    }

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::symmetric(3);
        let gens = g.small_generating_set();
        assert_eq!(gens.len(), 2);
        let aut = automorphisms(&frucht_graph(&g, &gens).unwrap()).unwrap();
        assert!(g.isomorphism_to(&aut.group).is_some());
    }

    #[test]
    fn trivial_and_bad_generators() {
        let g = FiniteGroup::trivial();
        assert_eq!(frucht_graph(&g, &[]).unwrap(), builtin::asymmetric6());
        assert!(frucht_graph(&FiniteGroup::cyclic(4), &[2]).is_err());
    }
}
