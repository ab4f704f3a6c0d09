use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::{Error, Result};

/// Finite group given by its multiplication table: `table[i][j] = e_i · e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    #[serde(skip)]
    identity: usize,
}

/// On-disk group description: a table and optionally a generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub generators: Option<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroup("table is not square over its index set".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        for i in 0..n {
            if !(0..n).any(|j| table[i][j] == identity && table[j][i] == identity) {
                return Err(Error::InvalidGroup(format!("element {i} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity })
    }

    /// Group of the given permutations under `p ∘ q`, elements in the given order.
    pub fn from_permutations(perms: &[Permutation]) -> Result<Self> {
        let index = |p: &Permutation| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(perms.len());
        for p in perms {
            let row = perms
                .iter()
                .map(|q| index(&p.compose(q)).ok_or_else(|| Error::InvalidGroup("permutations not closed".into())))
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Self::from_table(table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::from_table(table).expect("cyclic table is a group")
    }

    /// Symmetric group on `m` letters, elements in lexicographic order.
    pub fn symmetric(m: usize) -> Self {
        let mut perms = Vec::new();
        let mut cur: Vec<usize> = (0..m).collect();
        loop {
            perms.push(Permutation::from_images(cur.clone()).expect("valid"));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        Self::from_permutations(&perms).expect("symmetric group")
    }

    /// Dihedral group of order `2m` as symmetries of an `m`-gon.
    pub fn dihedral(m: usize) -> Self {
        let rot = Permutation::from_images((0..m).map(|i| (i + 1) % m).collect()).expect("valid");
        let refl = Permutation::from_images((0..m).map(|i| (m - i) % m).collect()).expect("valid");
        let mut perms = vec![Permutation::identity(m)];
        let mut queue = VecDeque::from([Permutation::identity(m)]);
        while let Some(p) = queue.pop_front() {
            for g in [&rot, &refl] {
                let q = p.compose(g);
                if !perms.contains(&q) {
                    perms.push(q.clone());
                    queue.push_back(q);
                }
            }
        }
        perms.sort();
        Self::from_permutations(&perms).expect("dihedral group")
    }

    /// Parses names such as `trivial`, `Z3`, `C4`, `S3`, `D4`.
    pub fn preset(name: &str) -> Result<Self> {
        let lower = name.trim().to_ascii_lowercase().replace(['/', '_'], "");
        if lower == "trivial" || lower == "1" {
            return Ok(Self::trivial());
        }
        let (head, tail) = lower.split_at(lower.find(|c: char| c.is_ascii_digit()).unwrap_or(lower.len()));
        let m: usize = tail
            .parse()
            .map_err(|_| Error::InvalidGroup(format!("unknown group preset {name:?}")))?;
        match head {
            "z" | "c" | "cyclic" if m >= 1 => Ok(Self::cyclic(m)),
            "s" | "sym" if (1..=5).contains(&m) => Ok(Self::symmetric(m)),
            "d" | "dihedral" if m >= 3 => Ok(Self::dihedral(m)),
            _ => Err(Error::InvalidGroup(format!("unknown group preset {name:?}"))),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("validated")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn generates(&self, gens: &[usize]) -> bool {
        gens.iter().all(|&g| g < self.order()) && self.closure(gens).into_iter().all(|s| s)
    }

    /// Greedy generating set: repeatedly add the least element of largest
    /// order not yet in the generated subgroup.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        loop {
            let mask = self.closure(&gens);
            let best = (0..self.order()).filter(|&x| !mask[x]).max_by_key(|&x| (self.element_order(x), std::cmp::Reverse(x)));
            match best {
                Some(x) => gens.push(x),
                None => return gens,
            }
        }
    }

    /// An isomorphism `self → other` as an index map, if one exists.
    ///
    /// Generators are sent to elements of equal order in every possible way;
    /// each assignment is extended along words and checked on the full table.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.order() != other.order() {
            return None;
        }
        let mut self_orders: Vec<usize> = (0..self.order()).map(|a| self.element_order(a)).collect();
        let mut other_orders: Vec<usize> = (0..other.order()).map(|a| other.element_order(a)).collect();
        let gens = self.small_generating_set();
        let candidates: Vec<Vec<usize>> = gens
            .iter()
            .map(|&g| (0..other.order()).filter(|&h| other_orders[h] == self_orders[g]).collect())
            .collect();
        self_orders.sort_unstable();
        other_orders.sort_unstable();
        if self_orders != other_orders {
            return None;
        }
        let mut choice = vec![0usize; gens.len()];
        loop {
            if candidates.iter().any(Vec::is_empty) {
                return None;
            }
            let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&i, c)| c[i]).collect();
            if let Some(phi) = self.extend_homomorphism(other, &gens, &images) {
                return Some(phi);
            }
            let mut pos = 0;
            loop {
                if pos == gens.len() {
                    return None;
                }
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    fn extend_homomorphism(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let n = self.order();
        let mut phi = vec![usize::MAX; n];
        phi[self.identity] = other.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&g, &h) in gens.iter().zip(images) {
                let y = self.table[x][g];
                let img = other.table[phi[x]][h];
                if phi[y] == usize::MAX {
                    phi[y] = img;
                    queue.push_back(y);
                } else if phi[y] != img {
                    return None;
                }
            }
        }
        if phi.contains(&usize::MAX) || !is_bijection(&phi) {
            return None;
        }
        self.is_isomorphism(other, &phi).then_some(phi)
    }

    /// Checks that `phi` is a bijection preserving the multiplication table.
    pub fn is_isomorphism(&self, other: &FiniteGroup, phi: &[usize]) -> bool {
        phi.len() == self.order()
            && self.order() == other.order()
            && is_bijection(phi)
            && (0..self.order())
                .all(|a| (0..self.order()).all(|b| phi[self.table[a][b]] == other.table[phi[a]][phi[b]]))
    }

    pub fn spec(&self, generators: Option<Vec<usize>>) -> GroupSpec {
        GroupSpec { table: self.table.clone(), generators }
    }
}

impl GroupSpec {
    /// Validated group plus a generating set (the given one, or a computed one).
    pub fn resolve(&self) -> Result<(FiniteGroup, Vec<usize>)> {
        let g = FiniteGroup::from_table(self.table.clone())?;
        let gens = match &self.generators {
            Some(gens) => {
                if !g.generates(gens) {
                    return Err(Error::InvalidGroup(format!("{gens:?} does not generate the group")));
                }
                gens.clone()
            }
            None => g.small_generating_set(),
        };
        Ok((g, gens))
    }
}

fn is_bijection(phi: &[usize]) -> bool {
    let mut seen = vec![false; phi.len()];
    for &x in phi {
        if x >= phi.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Advances to the next permutation in lexicographic order.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        assert_eq!(FiniteGroup::preset("trivial").unwrap().order(), 1);
        assert_eq!(FiniteGroup::preset("Z/3").unwrap().order(), 3);
        assert_eq!(FiniteGroup::preset("S3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::preset("D4").unwrap().order(), 8);
        assert!(FiniteGroup::preset("Q8").is_err());
    }

    #[test]
    fn invalid_tables() {
        assert!(FiniteGroup::from_table(vec![]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn isomorphisms() {
        let s3 = FiniteGroup::symmetric(3);
        let d3 = FiniteGroup::dihedral(3);
        let phi = s3.isomorphism_to(&d3).unwrap();
        assert!(s3.is_isomorphism(&d3, &phi));
        assert!(s3.isomorphism_to(&FiniteGroup::cyclic(6)).is_none());
        assert!(FiniteGroup::cyclic(4).isomorphism_to(&FiniteGroup::dihedral(4)).is_none());
        let z2z2 = FiniteGroup::from_table(vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert!(z2z2.isomorphism_to(&FiniteGroup::cyclic(4)).is_none());
        assert_eq!(z2z2.small_generating_set().len(), 2);
    }

    #[test]
    fn spec_generators_checked() {
        let spec = FiniteGroup::cyclic(4).spec(Some(vec![2]));
        assert!(spec.resolve().is_err());
        let spec = FiniteGroup::cyclic(4).spec(Some(vec![3]));
        assert_eq!(spec.resolve().unwrap().1, vec![3]);
    }
}
