//! Sparse exact linear algebra over ℚ.
//!
//! Vectors are sparse maps from column index to a nonzero rational. The
//! echelon form keeps each stored row normalised with leading coefficient 1 at
//! its pivot and no entries left of the pivot.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::Q;

pub type SparseVec = BTreeMap<usize, Q>;

pub fn axpy(target: &mut SparseVec, factor: &Q, source: &SparseVec) {
    for (k, v) in source {
        let entry = target.entry(*k).or_insert_with(Q::zero);
        *entry += factor * v;
        if entry.is_zero() {
            target.remove(k);
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    /// Expression of `vec` in terms of the inserted input vectors.
    combo: SparseVec,
}

/// Incremental row echelon form with optional provenance tracking.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_row: HashMap<usize, usize>,
    inserted: usize,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows; returns the remainder and the
    /// combination of inputs that was subtracted.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        let mut cursor = 0usize;
        loop {
            let next = rem.range(cursor..).find(|(k, _)| self.pivot_row.contains_key(k)).map(|(k, c)| (*k, c.clone()));
            let Some((col, coeff)) = next else { break };
            let row = &self.rows[self.pivot_row[&col]];
            let f = -coeff;
            axpy(&mut rem, &f, &row.vec);
            axpy(&mut combo, &f, &row.combo);
            cursor = col + 1;
        }
        (rem, combo)
    }

    /// Inserts `v` (input number `self.inserted`); returns true when it was
    /// independent of what is already stored.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (mut rem, mut combo) = self.reduce(v);
        combo.insert(id, Q::one());
        let Some((&pivot, lead)) = rem.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for c in rem.values_mut() {
            *c *= &inv;
        }
        for c in combo.values_mut() {
            *c *= &inv;
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(Row { vec: rem, combo });
        true
    }

    /// Coefficients `λ` over the inserted inputs with `Σ λ_i input_i = target`,
    /// when the target lies in their span.
    pub fn express(&self, target: &SparseVec) -> Option<SparseVec> {
        let (rem, combo) = self.reduce(target);
        if !rem.is_empty() {
            return None;
        }
        Some(combo.into_iter().map(|(k, v)| (k, -v)).collect())
    }

    pub fn contains(&self, target: &SparseVec) -> bool {
        self.reduce(target).0.is_empty()
    }
}

/// Basis of `{x : A x = 0}` for the given rows of `A` over `ncols` unknowns.
pub fn kernel_basis(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    // back-substitute to reduced row echelon form
    let mut order: Vec<usize> = (0..ech.rows.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(*ech.rows[i].vec.keys().next().unwrap()));
    let mut reduced: Vec<SparseVec> = ech.rows.iter().map(|r| r.vec.clone()).collect();
    let pivots: Vec<usize> = reduced.iter().map(|r| *r.keys().next().unwrap()).collect();
    let pivot_of: HashMap<usize, usize> = pivots.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    for &i in &order {
        let row_i = reduced[i].clone();
        let p = pivots[i];
        for j in 0..reduced.len() {
            if j != i {
                if let Some(c) = reduced[j].get(&p).cloned() {
                    axpy(&mut reduced[j], &-c, &row_i);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_of.contains_key(c)) {
        let mut v = SparseVec::new();
        v.insert(free, Q::one());
        for (i, r) in reduced.iter().enumerate() {
            if let Some(c) = r.get(&free) {
                v.insert(pivots[i], -c.clone());
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, v)| (k, qi(v))).collect()
    }

    fn apply(rows: &[SparseVec], x: &SparseVec) -> Vec<Q> {
        rows.iter()
            .map(|r| r.iter().map(|(k, v)| v * x.get(k).cloned().unwrap_or_else(Q::zero)).sum())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one_system() {
        let rows = vec![sv(&[(0, 1), (1, 2), (2, 3)]), sv(&[(0, 2), (1, 4), (2, 6)])];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&rows, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn express_recovers_combination() {
        let mut e = Echelon::new();
        let a = sv(&[(0, 1), (2, 1)]);
        let b = sv(&[(1, 1), (2, -1)]);
        e.insert(&a);
        e.insert(&b);
        let target = sv(&[(0, 2), (1, 3), (2, -1)]);
        let lam = e.express(&target).unwrap();
        assert_eq!(lam, sv(&[(0, 2), (1, 3)]));
        assert!(e.express(&sv(&[(2, 1)])).is_none());
    }

    #[test]
    fn dependent_insert_reports_false() {
        let mut e = Echelon::new();
        assert!(e.insert(&sv(&[(3, 2)])));
        assert!(!e.insert(&sv(&[(3, -5)])));
        assert_eq!(e.rank(), 1);
    }
}
