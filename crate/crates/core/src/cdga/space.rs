use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::cdga::Monomial;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
}

impl Generator {
    /// Generators live in degree ≥ 2 (simply connected algebras).
    pub fn new(name: impl Into<String>, degree: u32) -> Result<Self> {
        let name = name.into();
        if degree < 2 {
            return Err(Error::InvalidGenerator(format!(
                "`{name}` has degree {degree}; degrees must be at least 2"
            )));
        }
        if name.is_empty() || !name.chars().all(is_name_char) || name.starts_with(|c: char| c.is_ascii_digit()) {
            return Err(Error::InvalidGenerator(format!("bad generator name `{name}`")));
        }
        Ok(Generator { name, degree })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Odd generators are exterior, even ones polynomial.
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

pub(crate) fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '[' | ']' | '\'' | '~')
}

/// The ordered generator set of a free graded-commutative algebra.
#[derive(Debug)]
pub struct GeneratorSpace {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for GeneratorSpace {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for GeneratorSpace {}

impl GeneratorSpace {
    pub fn new(mut gens: Vec<Generator>) -> Result<Arc<Self>> {
        gens.sort_by(|a, b| (a.degree, &a.name).cmp(&(b.degree, &b.name)));
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::InvalidGenerator(format!("duplicate generator `{}`", g.name)));
            }
        }
        Ok(Arc::new(GeneratorSpace { gens, index }))
    }

    pub fn from_pairs<S: AsRef<str>>(pairs: &[(S, u32)]) -> Result<Arc<Self>> {
        let gens = pairs
            .iter()
            .map(|(n, d)| Generator::new(n.as_ref(), *d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(gens)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.gens[i].degree
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].is_odd()
    }

    pub fn same_universe(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    /// All monomials of total degree `d`, sorted.
    pub fn basis_of_degree(&self, d: u32) -> Vec<Monomial> {
        self.basis_of_degree_in(d, &vec![true; self.len()])
    }

    /// Monomials of degree `d` using only generators with `allowed[i]`.
    ///
    /// Exponents of even generators are bounded by `d / degree`, odd ones by 1;
    /// a reachability table prunes branches that cannot hit `d` exactly.
    pub fn basis_of_degree_in(&self, d: u32, allowed: &[bool]) -> Vec<Monomial> {
        let n = self.len();
        let d = d as usize;
        // reach[i][r]: generators i.. can realise degree r exactly
        let mut reach = vec![vec![false; d + 1]; n + 1];
        reach[n][0] = true;
        for i in (0..n).rev() {
            let deg = self.gens[i].degree as usize;
            let max_e = if !allowed[i] {
                0
            } else if self.gens[i].is_odd() {
                1
            } else {
                d / deg
            };
            for r in 0..=d {
                let mut ok = false;
                for e in 0..=max_e {
                    if e * deg > r {
                        break;
                    }
                    if reach[i + 1][r - e * deg] {
                        ok = true;
                        break;
                    }
                }
                reach[i][r] = ok;
            }
        }
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        self.enumerate(0, d, allowed, &reach, &mut exps, &mut out);
        out.sort();
        out
    }

    fn enumerate(
        &self,
        i: usize,
        rem: usize,
        allowed: &[bool],
        reach: &[Vec<bool>],
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if !reach[i][rem] {
            return;
        }
        if i == self.len() {
            out.push(Monomial::from_exponents(exps.clone()));
            return;
        }
        let deg = self.gens[i].degree as usize;
        let max_e = if !allowed[i] {
            0
        } else if self.gens[i].is_odd() {
            usize::from(rem >= deg)
        } else {
            rem / deg
        };
        for e in 0..=max_e {
            exps[i] = e as u32;
            self.enumerate(i + 1, rem - e * deg, allowed, reach, exps, out);
        }
        exps[i] = 0;
    }

    pub(crate) fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.gens[i].name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        struct Show<'a>(&'a GeneratorSpace, &'a Monomial);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_monomial(self.1, f)
            }
        }
        Show(self, m).to_string()
    }
}
