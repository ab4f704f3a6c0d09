use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::cdga::linalg::{Echelon, SparseVec};
use crate::cdga::{Coefficient, GeneratorSpace, GradedPoly, Monomial, Polynomial};
use crate::{Error, Result, Q};

/// A free graded-commutative algebra with a degree +1 derivation.
#[derive(Clone, Debug, PartialEq)]
pub struct Cdga {
    space: Arc<GeneratorSpace>,
    differential: Vec<Polynomial>,
}

impl Cdga {
    /// Validates degrees and `d∘d = 0` on generators.
    pub fn new(space: Arc<GeneratorSpace>, differential: Vec<(String, Polynomial)>) -> Result<Self> {
        let a = Self::from_parts(space, differential)?;
        if let Some(g) = a.d_squared_failure() {
            return Err(Error::DSquaredNonzero(g));
        }
        Ok(a)
    }

    /// Validates degrees only; `d∘d` may be nonzero.
    pub fn from_parts(space: Arc<GeneratorSpace>, differential: Vec<(String, Polynomial)>) -> Result<Self> {
        let mut d = vec![Polynomial::zero(&space); space.len()];
        for (name, p) in differential {
            let i = space.index_of(&name)?;
            if !GeneratorSpace::same_universe(&space, p.space()) {
                return Err(Error::UniverseMismatch);
            }
            let expected = space.degree(i) + 1;
            if !p.is_zero() && p.homogeneous_degree() != Some(expected) {
                return Err(Error::DifferentialDegree {
                    generator: name,
                    expected,
                    found: p.homogeneous_degree(),
                });
            }
            // keep the caller's universe object so identity comparisons stay cheap
            d[i] = GradedPoly::from_terms(&space, p.terms().map(|(m, c)| (m.clone(), c.clone())));
        }
        Ok(Cdga { space, differential: d })
    }

    /// Convenience constructor: `gens` are `(name, degree)`, `diffs` are
    /// `(name, expression)` parsed with [`Polynomial::parse`].
    pub fn from_strings(gens: &[(&str, u32)], diffs: &[(&str, &str)]) -> Result<Self> {
        let space = GeneratorSpace::from_pairs(gens)?;
        let d = diffs
            .iter()
            .map(|(n, e)| Ok((n.to_string(), Polynomial::parse(&space, e)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, d)
    }

    pub fn space(&self) -> &Arc<GeneratorSpace> {
        &self.space
    }

    pub fn d_generator(&self, i: usize) -> &Polynomial {
        &self.differential[i]
    }

    pub fn d_of(&self, name: &str) -> Result<&Polynomial> {
        Ok(&self.differential[self.space.index_of(name)?])
    }

    pub fn gen(&self, name: &str) -> Result<Polynomial> {
        Polynomial::named(&self.space, name)
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.space, src)
    }

    /// `d` of a single monomial by the graded Leibniz rule.
    pub fn d_monomial(&self, m: &Monomial) -> Polynomial {
        let n = self.space.len();
        let mut out = Polynomial::zero(&self.space);
        let mut prefix = Monomial::one(n);
        let mut prefix_odd = false;
        for i in 0..n {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            if !self.differential[i].is_zero() {
                let mut rest = m.exponents().to_vec();
                for (j, r) in rest.iter_mut().enumerate() {
                    if j < i {
                        *r = 0;
                    }
                }
                rest[i] -= 1;
                let suffix = Polynomial::term(&self.space, Monomial::from_exponents(rest), Q::from_integer(e.into()));
                let left = Polynomial::term(&self.space, prefix.clone(), Q::from_integer(if prefix_odd { -1 } else { 1 }.into()));
                let piece = &(&left * &self.differential[i]) * &suffix;
                out = &out + &piece;
            }
            let mut p = prefix.exponents().to_vec();
            p[i] = e;
            prefix = Monomial::from_exponents(p);
            if self.space.is_odd(i) && e % 2 == 1 {
                prefix_odd = !prefix_odd;
            }
        }
        out
    }

    /// Extends `d` linearly; works for rational or symbolic coefficients.
    pub fn apply<C: Coefficient>(&self, p: &GradedPoly<C>) -> GradedPoly<C> {
        let mut out = GradedPoly::zero(&self.space);
        for (m, c) in p.terms() {
            for (dm, dc) in self.d_monomial(m).terms() {
                out.add_term(dm.clone(), &c.scale(dc));
            }
        }
        out
    }

    pub fn apply_differential(&self, p: &Polynomial) -> Result<Polynomial> {
        if !GeneratorSpace::same_universe(&self.space, p.space()) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.apply(p))
    }

    fn d_squared_failure(&self) -> Option<String> {
        (0..self.space.len())
            .find(|&i| !self.apply(&self.differential[i]).is_zero())
            .map(|i| self.space.generator(i).name().to_string())
    }

    /// True iff `d(d(g)) = 0` for every generator.
    pub fn check_d_squared(&self) -> bool {
        self.d_squared_failure().is_none()
    }

    /// No differential image has a linear term.
    pub fn is_minimal(&self) -> bool {
        self.differential
            .iter()
            .all(|p| p.terms().all(|(m, _)| m.word_length() >= 2))
    }

    pub fn is_cocycle(&self, p: &Polynomial) -> bool {
        self.apply(p).is_zero()
    }

    pub fn basis_of_degree(&self, d: u32) -> Vec<Monomial> {
        self.space.basis_of_degree(d)
    }

    /// Some `m` with `d(m) = c`, or `None` when `c` is not a coboundary.
    pub fn coboundary_preimage(&self, c: &Polynomial) -> Result<Option<Polynomial>> {
        if !GeneratorSpace::same_universe(&self.space, c.space()) {
            return Err(Error::UniverseMismatch);
        }
        if c.is_zero() {
            return Ok(Some(Polynomial::zero(&self.space)));
        }
        let deg = c.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if deg == 0 {
            return Ok(None);
        }
        let source = self.basis_of_degree(deg - 1);
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut to_vec = |p: &Polynomial| -> SparseVec {
            p.terms()
                .map(|(m, c)| {
                    let next = index.len();
                    (*index.entry(m.clone()).or_insert(next), c.clone())
                })
                .collect()
        };
        let mut ech = Echelon::new();
        for b in &source {
            let img = self.d_monomial(b);
            ech.insert(&to_vec(&img));
        }
        let target = to_vec(c);
        Ok(ech.express(&target).map(|lam| {
            Polynomial::from_terms(
                &self.space,
                lam.into_iter().filter(|(_, v)| !Zero::is_zero(v)).map(|(i, v)| (source[i].clone(), v)),
            )
        }))
    }

    /// Dimensions of cocycles and coboundaries in degree `deg`.
    pub fn cocycle_and_coboundary_ranks(&self, deg: u32) -> (usize, usize) {
        let basis = self.basis_of_degree(deg);
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut d_rank = Echelon::new();
        for b in &basis {
            let v: SparseVec = self
                .d_monomial(b)
                .terms()
                .map(|(m, c)| {
                    let next = index.len();
                    (*index.entry(m.clone()).or_insert(next), c.clone())
                })
                .collect();
            d_rank.insert(&v);
        }
        let cocycles = basis.len() - d_rank.rank();
        let boundaries = if deg == 0 {
            0
        } else {
            let mut e = Echelon::new();
            let mut idx: HashMap<Monomial, usize> = HashMap::new();
            for b in self.basis_of_degree(deg - 1) {
                let v: SparseVec = self
                    .d_monomial(&b)
                    .terms()
                    .map(|(m, c)| {
                        let next = idx.len();
                        (*idx.entry(m.clone()).or_insert(next), c.clone())
                    })
                    .collect();
                e.insert(&v);
            }
            e.rank()
        };
        (cocycles, boundaries)
    }

    /// Sum of odd generator degrees minus the sum of (even degree − 1).
    pub fn formal_dimension(&self) -> i64 {
        self.space
            .generators()
            .iter()
            .map(|g| if g.is_odd() { g.degree() as i64 } else { -(g.degree() as i64 - 1) })
            .sum()
    }

    /// The associated pure algebra: `d = 0` on even generators, and on odd
    /// generators the part of `d` lying in the even subalgebra.
    pub fn associated_pure(&self) -> Cdga {
        let space = self.space.clone();
        let differential = (0..space.len())
            .map(|i| {
                if !space.is_odd(i) {
                    Polynomial::zero(&space)
                } else {
                    self.differential[i].filter(|m| !m.is_odd(&space) && m.exponents().iter().enumerate().all(|(j, &e)| e == 0 || !space.is_odd(j)))
                }
            })
            .collect();
        Cdga { space, differential }
    }

    pub fn is_pure(&self) -> bool {
        let s = &self.space;
        (0..s.len()).all(|i| {
            let d = &self.differential[i];
            if s.is_odd(i) {
                d.terms().all(|(m, _)| (0..s.len()).all(|j| m.exponent(j) == 0 || !s.is_odd(j)))
            } else {
                d.is_zero()
            }
        })
    }

    /// Lowest generator degree minus one (the algebra is that many times connected).
    pub fn connectivity(&self) -> u32 {
        self.space.generators().iter().map(|g| g.degree()).min().map_or(u32::MAX, |d| d - 1)
    }

    /// Adds one generator with the given differential image.
    pub fn extend(&self, name: &str, degree: u32, d_image: &Polynomial) -> Result<Cdga> {
        let mut gens = self.space.generators().to_vec();
        gens.push(crate::cdga::Generator::new(name, degree)?);
        let space = GeneratorSpace::new(gens)?;
        let transport = |p: &Polynomial| -> Result<Polynomial> { transport(p, &space) };
        let mut diffs = Vec::new();
        for (i, g) in self.space.generators().iter().enumerate() {
            diffs.push((g.name().to_string(), transport(&self.differential[i])?));
        }
        diffs.push((name.to_string(), transport(d_image)?));
        Cdga::new(space, diffs)
    }
}

/// Re-expresses `p` over a space containing all of its generators.
pub fn transport(p: &Polynomial, target: &Arc<GeneratorSpace>) -> Result<Polynomial> {
    let src = p.space();
    let map: Vec<usize> = src
        .generators()
        .iter()
        .map(|g| target.index_of(g.name()))
        .collect::<Result<_>>()?;
    let mut out = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut term = Polynomial::constant(target, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                term = &term * &Polynomial::generator(target, map[i]).pow(e);
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

impl Cdga {
    /// Same as [`transport`], exposed for callers holding a `Cdga`.
    pub fn transport(&self, p: &Polynomial) -> Result<Polynomial> {
        transport(p, &self.space)
    }
}
