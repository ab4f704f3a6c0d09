use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::{FiniteGroup, Permutation, SimpleGraph};
use crate::Result;

/// `Aut(G)` with elements in lexicographic order of their image vectors;
/// the identity is element 0 and `group.mul(i, j)` is `elements[i] ∘ elements[j]`.
#[derive(Clone, Debug, Serialize)]
pub struct AutomorphismGroup {
    pub elements: Vec<Permutation>,
    pub group: FiniteGroup,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }
}

/// Stable colouring by iterated neighbourhood refinement, starting from degrees.
pub fn refine_colours(g: &SimpleGraph) -> Vec<usize> {
    let n = g.len();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = 0;
    loop {
        let mut signatures = BTreeMap::new();
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        for k in &keys {
            let next = signatures.len();
            signatures.entry(k.clone()).or_insert(next);
        }
        // BTreeMap order makes the relabelling canonical
        let rank: BTreeMap<_, usize> = signatures.keys().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        colour = keys.iter().map(|k| rank[k]).collect();
        if rank.len() == classes {
            return colour;
        }
        classes = rank.len();
    }
}

/// Every automorphism of `g`, by backtracking along a BFS order.
///
/// A vertex may only go to a vertex of the same refined colour that is
/// adjacent to the image of its BFS parent and consistent with all earlier
/// assignments. These filters only discard non-automorphisms, so the search
/// is exhaustive.
pub fn automorphisms(g: &SimpleGraph) -> Result<AutomorphismGroup> {
    let n = g.len();
    let colour = refine_colours(g);
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();
    search(g, &colour, &order, &parent, 0, &mut image, &mut used, &mut found);
    found.sort();
    let group = FiniteGroup::from_permutations(&found)?;
    Ok(AutomorphismGroup { elements: found, group })
}

#[allow(clippy::too_many_arguments)]
fn search(
    g: &SimpleGraph,
    colour: &[usize],
    order: &[usize],
    parent: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<Permutation>,
) {
    if depth == order.len() {
        found.push(Permutation::from_images(image.to_vec()).expect("bijective by construction"));
        return;
    }
    let v = order[depth];
    let candidates: Vec<usize> = if parent[v] == usize::MAX {
        (0..g.len()).collect()
    } else {
        g.neighbors(image[parent[v]]).to_vec()
    };
    for w in candidates {
        if used[w] || colour[w] != colour[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g.adjacent(u, v) == g.adjacent(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        search(g, colour, order, parent, depth + 1, image, used, found);
        used[w] = false;
        image[v] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::builtin;

    #[test]
    fn small_orders() {
        assert_eq!(automorphisms(&builtin::path(3)).unwrap().order(), 2);
        assert_eq!(automorphisms(&builtin::complete(3)).unwrap().order(), 6);
        assert_eq!(automorphisms(&builtin::cycle(4)).unwrap().order(), 8);
        assert_eq!(automorphisms(&builtin::asymmetric6()).unwrap().order(), 1);
        assert_eq!(automorphisms(&builtin::z3_nine()).unwrap().order(), 3);
        assert_eq!(automorphisms(&builtin::petersen()).unwrap().order(), 120);
    }

    #[test]
    fn identity_first_and_group_valid() {
        let a = automorphisms(&builtin::complete(4)).unwrap();
        assert!(a.elements[0].is_identity());
        assert_eq!(a.group.identity(), 0);
        assert_eq!(a.order(), 24);
    }
}
