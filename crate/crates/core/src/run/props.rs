//! Seeded randomized checks of the algebra laws and of the constructive
//! coboundary factorization.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cdga::linalg::{kernel_basis, SparseVec};
use crate::cdga::{Cdga, GeneratorSpace, Monomial, Polynomial};
use crate::models::{coboundary_by_factorization, cocycle_to_coboundary, SullivanModel};
use crate::{q, Result};

/// Degrees up to which homogeneous samples draw extra terms from the basis.
const SMALL_DEGREE: u32 = 400;

fn random_coefficient(rng: &mut impl Rng) -> crate::Q {
    let num = loop {
        let x = rng.gen_range(-9..=9);
        if x != 0 {
            break x;
        }
    };
    q(num, rng.gen_range(1..=3))
}

fn random_monomial(space: &GeneratorSpace, rng: &mut impl Rng) -> Monomial {
    let mut e = vec![0u32; space.len()];
    for _ in 0..rng.gen_range(0..=3) {
        let i = rng.gen_range(0..space.len());
        if space.is_odd(i) {
            e[i] = 1;
        } else {
            e[i] += 1;
        }
    }
    Monomial::from_exponents(e)
}

/// Up to `max_terms` random terms of mixed degree.
pub fn random_polynomial(space: &std::sync::Arc<GeneratorSpace>, rng: &mut impl Rng, max_terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(space);
    for _ in 0..rng.gen_range(1..=max_terms) {
        p.add_term(random_monomial(space, rng), &random_coefficient(rng));
    }
    p
}

/// Homogeneous sampler; low degrees are filled from the monomial basis.
pub struct HomogeneousSampler<'a> {
    alg: &'a Cdga,
    bases: HashMap<u32, Vec<Monomial>>,
}

impl<'a> HomogeneousSampler<'a> {
    pub fn new(alg: &'a Cdga) -> Self {
        HomogeneousSampler { alg, bases: HashMap::new() }
    }

    pub fn sample(&mut self, rng: &mut impl Rng, max_terms: usize) -> Polynomial {
        let space = self.alg.space();
        let lead = random_monomial(space, rng);
        let deg = lead.degree(space);
        let mut p = Polynomial::term(space, lead, random_coefficient(rng));
        if deg <= SMALL_DEGREE {
            let basis = self.bases.entry(deg).or_insert_with(|| self.alg.basis_of_degree(deg));
            for _ in 1..rng.gen_range(1..=max_terms) {
                let m = basis[rng.gen_range(0..basis.len())].clone();
                p.add_term(m, &random_coefficient(rng));
            }
        }
        p
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct LawReport {
    pub model: String,
    pub cases: usize,
    pub commutativity_failures: usize,
    pub associativity_failures: usize,
    pub distributivity_failures: usize,
    pub leibniz_failures: usize,
    pub d_squared_failures: usize,
    pub passed: bool,
}

fn sign(p: &Polynomial) -> i64 {
    match p.homogeneous_degree() {
        Some(d) if d % 2 == 1 => -1,
        _ => 1,
    }
}

/// Graded commutativity, associativity, distributivity, Leibniz and `d² = 0`
/// on `cases` random triples.
pub fn algebra_laws(name: &str, alg: &Cdga, cases: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hs = HomogeneousSampler::new(alg);
    let space = alg.space();
    let mut r = LawReport { model: name.to_string(), cases, ..LawReport::default() };
    for _ in 0..cases {
        let a = hs.sample(&mut rng, 3);
        let b = hs.sample(&mut rng, 3);
        let c = random_polynomial(space, &mut rng, 4);
        let (da, db) = (a.homogeneous_degree().unwrap_or(0), b.homogeneous_degree().unwrap_or(0));
        let koszul = if da % 2 == 1 && db % 2 == 1 { q(-1, 1) } else { q(1, 1) };
        if &a * &b != (&b * &a).scale(&koszul) {
            r.commutativity_failures += 1;
        }
        if &(&a * &b) * &c != &a * &(&b * &c) {
            r.associativity_failures += 1;
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            r.distributivity_failures += 1;
        }
        let lhs = alg.apply(&(&a * &c));
        let rhs = &(&alg.apply(&a) * &c) + &(&a * &alg.apply(&c)).scale(&q(sign(&a), 1));
        if lhs != rhs {
            r.leibniz_failures += 1;
        }
        if !alg.apply(&alg.apply(&c)).is_zero() {
            r.d_squared_failures += 1;
        }
    }
    r.passed = r.commutativity_failures
        + r.associativity_failures
        + r.distributivity_failures
        + r.leibniz_failures
        + r.d_squared_failures
        == 0;
    r
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CoboundaryReport {
    pub model: String,
    /// Constructed cocycles `d(x1^p x2^q y_i y_j · prefix)` with `1 ≤ p, q ≤ 3`.
    pub constructed: usize,
    pub round_trip_failures: usize,
    /// Cases where the factorization and the linear-solve preimage differ by
    /// more than a cocycle, or the oracle finds nothing.
    pub oracle_disagreements: usize,
    /// Dimension of the cocycles `Σ y_i A_i` in each admissible degree.
    pub admissible_cocycle_dims: Vec<(i64, usize)>,
    pub admissible_round_trips: usize,
    pub passed: bool,
}

fn y_cocycle_space<M: SullivanModel + ?Sized>(m: &M, degree: i64) -> Vec<Polynomial> {
    let alg = m.algebra();
    let space = alg.space();
    let ix = m.index();
    let mut allowed = vec![false; space.len()];
    for &i in [ix.x1, ix.x2].iter().chain(&ix.y).chain(&ix.xv) {
        allowed[i] = true;
    }
    let candidates: Vec<Monomial> = space
        .basis_of_degree_in(degree as u32, &allowed)
        .into_iter()
        .filter(|mono| ix.y.iter().map(|&y| mono.exponent(y)).sum::<u32>() == 1)
        .collect();
    let mut rows: HashMap<Monomial, SparseVec> = HashMap::new();
    for (j, mono) in candidates.iter().enumerate() {
        for (t, c) in alg.d_monomial(mono).terms() {
            rows.entry(t.clone()).or_default().insert(j, c.clone());
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    kernel_basis(&rows, candidates.len())
        .into_iter()
        .map(|v| Polynomial::from_terms(space, v.into_iter().map(|(j, c)| (candidates[j].clone(), c))))
        .collect()
}

/// Round trips of the factorization against `d` and against the generic
/// linear solve.
pub fn coboundary_round_trips<M: SullivanModel + ?Sized>(name: &str, m: &M) -> Result<CoboundaryReport> {
    let alg = m.algebra();
    let space = alg.space();
    let ix = m.index();
    let mut r = CoboundaryReport { model: name.to_string(), ..CoboundaryReport::default() };

    let mut prefixes = vec![Polynomial::one(space)];
    if let (Some(g), Some(&v0)) = (m.graph(), ix.xv.first()) {
        prefixes.push(Polynomial::generator(space, v0));
        if let Some(&(a, b)) = g.edges().first() {
            prefixes.push(&Polynomial::generator(space, ix.xv[a]) * &Polynomial::generator(space, ix.xv[b]));
        }
    }
    let mut cocycles = Vec::new();
    for prefix in &prefixes {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let yy = &Polynomial::generator(space, ix.y[i]) * &Polynomial::generator(space, ix.y[j]);
            for p in 1..=3u32 {
                for qq in 1..=3u32 {
                    let x = &Polynomial::generator(space, ix.x1).pow(p) * &Polynomial::generator(space, ix.x2).pow(qq);
                    let c = alg.apply(&(&(&x * &yy) * prefix));
                    cocycles.push(c);
                }
            }
        }
    }
    for c in &cocycles {
        r.constructed += 1;
        let w = match coboundary_by_factorization(m, c) {
            Ok(f) => f.preimage,
            Err(_) => {
                r.round_trip_failures += 1;
                continue;
            }
        };
        if alg.apply(&w) != *c {
            r.round_trip_failures += 1;
        }
        match alg.coboundary_preimage(c)? {
            Some(o) if alg.is_cocycle(&(&w - &o)) => {}
            _ => r.oracle_disagreements += 1,
        }
    }

    let s = m.scheme();
    let mut degrees = vec![s.z];
    if let Some(xv) = s.xv {
        degrees.extend([s.z - xv, s.z - 2 * xv]);
    }
    for d in degrees {
        let basis = y_cocycle_space(m, d);
        r.admissible_cocycle_dims.push((d, basis.len()));
        for c in basis.iter().chain(std::iter::once(&Polynomial::zero(space))) {
            match cocycle_to_coboundary(m, c) {
                Ok(w) if alg.apply(&w) == *c => r.admissible_round_trips += 1,
                _ => r.round_trip_failures += 1,
            }
        }
    }
    r.passed = r.round_trip_failures == 0 && r.oracle_disagreements == 0;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::builtin;
    use crate::models::{build_mk, build_mng};

    #[test]
    fn laws_hold_on_small_samples() {
        let m = build_mk(6).unwrap();
        let r = algebra_laws("M_6", &m.algebra, 50, 7);
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn coboundaries_round_trip() {
        let m = build_mng(1, &builtin::path(3)).unwrap();
        let r = coboundary_round_trips("M_1(P3)", &m).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.constructed > 0);
    }
}
