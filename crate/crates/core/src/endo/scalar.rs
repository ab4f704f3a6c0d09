use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::Q;

/// Index of a scalar unknown.
pub type Var = u32;

/// Monomial in the unknowns: sorted `(var, exponent)` pairs, exponents positive.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SMono(Vec<(Var, u32)>);

impl SMono {
    pub fn one() -> Self {
        SMono(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        SMono(vec![(v, 1)])
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &SMono) -> SMono {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SMono(out)
    }

    /// Removes `v` entirely, returning its exponent.
    fn split(&self, v: Var) -> (u32, SMono) {
        let e = self.exponent(v);
        (e, SMono(self.0.iter().copied().filter(|(w, _)| *w != v).collect()))
    }
}

/// Polynomial over ℚ in the scalar unknowns of an ansatz.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarPoly {
    terms: BTreeMap<SMono, Q>,
}

impl ScalarPoly {
    pub fn constant(q: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(SMono::one(), q);
        }
        ScalarPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        ScalarPoly { terms: BTreeMap::from([(SMono::var(v), Q::one())]) }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (SMono, Q)>) -> Self {
        let mut p = ScalarPoly::default();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SMono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: SMono, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
        }
    }

    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&SMono::one()).cloned(),
            _ => None,
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(&SMono, &Q)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|(v, _)| *v)).collect()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// `self = coef · v + rest` when `self` has degree one in `v`.
    pub fn linear_split(&self, v: Var) -> Option<(ScalarPoly, ScalarPoly)> {
        if self.degree_in(v) != 1 {
            return None;
        }
        let mut coef = ScalarPoly::default();
        let mut rest = ScalarPoly::default();
        for (m, c) in &self.terms {
            let (e, other) = m.split(v);
            if e == 1 {
                coef.add_term(other, c);
            } else {
                rest.add_term(m.clone(), c);
            }
        }
        Some((coef, rest))
    }

    pub fn pow(&self, e: u32) -> ScalarPoly {
        let mut acc = ScalarPoly::constant(Q::one());
        for _ in 0..e {
            acc = crate::cdga::Coefficient::mul(&acc, self);
        }
        acc
    }

    /// Replaces `v` by `value`.
    pub fn substitute(&self, v: Var, value: &ScalarPoly) -> ScalarPoly {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        let mut powers: Vec<ScalarPoly> = vec![ScalarPoly::constant(Q::one())];
        let mut out = ScalarPoly::default();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            while powers.len() <= e as usize {
                let next = crate::cdga::Coefficient::mul(powers.last().expect("nonempty"), value);
                powers.push(next);
            }
            for (pm, pc) in &powers[e as usize].terms {
                out.add_term(rest.mul(pm), &(c * pc));
            }
        }
        out
    }

    /// Evaluates with every unknown not in `values` set to zero.
    pub fn evaluate(&self, values: &BTreeMap<Var, Q>) -> Q {
        let mut total = Q::zero();
        'terms: for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in &m.0 {
                match values.get(&v) {
                    Some(x) => t *= num_traits::pow(x.clone(), e as usize),
                    None => continue 'terms,
                }
            }
            total += t;
        }
        total
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        Shown { p: self, names }
    }
}

struct Shown<'a> {
    p: &'a ScalarPoly,
    names: &'a [String],
}

impl fmt::Display for Shown<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let unit = abs.is_one();
            if !unit || m.is_one() {
                write!(f, "{abs}")?;
            }
            for (j, (v, e)) in m.0.iter().enumerate() {
                if j > 0 || !unit {
                    write!(f, "*")?;
                }
                let name = self.names.get(*v as usize).map_or("?", String::as_str);
                if *e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl crate::cdga::Coefficient for ScalarPoly {
    fn zero() -> Self {
        ScalarPoly::default()
    }
    fn one() -> Self {
        ScalarPoly::constant(<Q as One>::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = ScalarPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        ScalarPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn scale(&self, q: &Q) -> Self {
        if Zero::is_zero(q) {
            return ScalarPoly::default();
        }
        ScalarPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect() }
    }
    fn from_rational(q: &Q) -> Self {
        ScalarPoly::constant(q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::Coefficient;
    use crate::qi;

    #[test]
    fn substitution_and_split() {
        let a = ScalarPoly::var(0);
        let b = ScalarPoly::var(1);
        // b - a^3
        let mut p = b.clone();
        p.add_assign(&a.pow(3).neg());
        let (coef, rest) = p.linear_split(1).unwrap();
        assert_eq!(coef.as_constant(), Some(qi(1)));
        assert_eq!(rest, a.pow(3).neg());
        let two = ScalarPoly::constant(qi(2));
        assert_eq!(p.substitute(0, &two).substitute(1, &ScalarPoly::constant(qi(8))).as_constant(), Some(qi(0)));
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(p.display(&names).to_string(), "b - a^3");
        assert_eq!(p.evaluate(&BTreeMap::from([(0, qi(1)), (1, qi(3))])), qi(2));
    }
}
