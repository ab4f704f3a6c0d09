//! Binomial systems `∏ u_i^{r_ki} = κ_k` over nonzero rationals, solved by
//! diagonalising the integer exponent matrix.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Q;

/// Integer matrices with `U · R · V = D`, `D` diagonal.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub u: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
    pub d: Vec<i128>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Diagonalises `r` by unimodular row and column operations.
pub fn diagonalize(r: &[Vec<i64>], ncols: usize) -> Diagonal {
    let m = r.len();
    let mut a: Vec<Vec<i128>> = r.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
    let mut u = identity(m);
    let mut v = identity(ncols);
    let mut d = Vec::new();
    for t in 0..m.min(ncols) {
        loop {
            let pivot = (t..m)
                .flat_map(|i| (t..ncols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].abs());
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in 0..ncols {
                        a[i][j] -= q * a[t][j];
                    }
                    for j in 0..m {
                        u[i][j] -= q * u[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..ncols {
                let q = a[t][j] / p;
                if q != 0 {
                    for i in 0..m {
                        a[i][j] -= q * a[i][t];
                    }
                    for row in v.iter_mut() {
                        row[j] -= q * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        if t < m && t < ncols && a[t][t] != 0 {
            if a[t][t] < 0 {
                for j in 0..ncols {
                    a[t][j] = -a[t][j];
                }
                for j in 0..m {
                    u[t][j] = -u[t][j];
                }
            }
            d.push(a[t][t]);
        } else {
            break;
        }
    }
    Diagonal { u, v, d }
}

fn qpow(x: &Q, e: i128) -> Q {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// All rational `w` with `w^d = q`.
pub fn rational_roots(q: &Q, d: u32) -> Vec<Q> {
    if q.is_zero() {
        return vec![Q::zero()];
    }
    let root_of = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(d);
        (num_traits::pow(r.clone(), d as usize) == *n).then_some(r)
    };
    let abs = q.abs();
    let (Some(n), Some(m)) = (root_of(abs.numer()), root_of(abs.denom())) else { return Vec::new() };
    let w = Q::new(n, m);
    match (q.is_negative(), d % 2 == 0) {
        (true, true) => Vec::new(),
        (true, false) => vec![-w],
        (false, false) => vec![w],
        (false, true) => vec![w.clone(), -w],
    }
}

/// Solutions in nonzero rationals of `∏_i u_i^{rows[k][i]} = kappa[k]`.
///
/// `None` when the exponent lattice has rank below the number of unknowns
/// (the solution set is then infinite or needs more equations).
pub fn solve_binomial(rows: &[Vec<i64>], kappa: &[Q], nvars: usize) -> Option<Vec<Vec<Q>>> {
    let diag = diagonalize(rows, nvars);
    if diag.d.len() < nvars {
        return None;
    }
    let transformed: Vec<Q> = diag
        .u
        .iter()
        .map(|urow| urow.iter().zip(kappa).fold(Q::one(), |acc, (&e, k)| acc * qpow(k, e)))
        .collect();
    if transformed[nvars..].iter().any(|k| !k.is_one()) {
        return Some(Vec::new());
    }
    let mut ws: Vec<Vec<Q>> = vec![Vec::new()];
    for (k, &dk) in diag.d.iter().enumerate() {
        let roots = rational_roots(&transformed[k], dk as u32);
        ws = ws.into_iter().flat_map(|w| roots.iter().map(move |r| [w.clone(), vec![r.clone()]].concat())).collect();
    }
    Some(
        ws.into_iter()
            .map(|w| {
                (0..nvars)
                    .map(|i| diag.v[i].iter().zip(&w).fold(Q::one(), |acc, (&e, wj)| acc * qpow(wj, e)))
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    #[test]
    fn rigid_exponents_are_unimodular() {
        // a1^6 a2^-5 = 1, a1^29 a2^-24 = 1
        let sols = solve_binomial(&[vec![6, -5], vec![29, -24]], &[qi(1), qi(1)], 2).unwrap();
        assert_eq!(sols, vec![vec![qi(1), qi(1)]]);
    }

    #[test]
    fn even_and_odd_roots() {
        assert_eq!(solve_binomial(&[vec![2]], &[qi(4)], 1).unwrap().len(), 2);
        assert_eq!(solve_binomial(&[vec![3]], &[qi(-8)], 1).unwrap(), vec![vec![qi(-2)]]);
        assert!(solve_binomial(&[vec![2]], &[qi(2)], 1).unwrap().is_empty());
        assert!(solve_binomial(&[vec![1, -1]], &[qi(1)], 2).is_none());
        // edge relations a^2 = b, b^2 = a
        assert_eq!(solve_binomial(&[vec![2, -1], vec![-1, 2]], &[qi(1), qi(1)], 2).unwrap(), vec![vec![qi(1), qi(1)]]);
    }
}
