use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::cdga::{GeneratorSpace, Monomial};
use crate::{Error, Result, Q};

/// Coefficient ring for [`GradedPoly`]: exact rationals, or polynomials in
/// unknowns when a self-map is written as an ansatz.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Q) -> Self;
    fn from_rational(q: &Q) -> Self;
}

impl Coefficient for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Q) -> Self {
        self * q
    }
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }
}

/// Sparse element of a free graded-commutative algebra with coefficients in `C`.
#[derive(Clone, Debug)]
pub struct GradedPoly<C> {
    space: Arc<GeneratorSpace>,
    terms: BTreeMap<Monomial, C>,
}

/// Element of the algebra with rational coefficients.
pub type Polynomial = GradedPoly<Q>;

impl<C: Coefficient> PartialEq for GradedPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        GeneratorSpace::same_universe(&self.space, &other.space) && self.terms == other.terms
    }
}

impl<C: Coefficient> GradedPoly<C> {
    pub fn zero(space: &Arc<GeneratorSpace>) -> Self {
        GradedPoly { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<GeneratorSpace>) -> Self {
        Self::term(space, Monomial::one(space.len()), C::one())
    }

    pub fn constant(space: &Arc<GeneratorSpace>, c: C) -> Self {
        Self::term(space, Monomial::one(space.len()), c)
    }

    pub fn term(space: &Arc<GeneratorSpace>, m: Monomial, c: C) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn generator(space: &Arc<GeneratorSpace>, i: usize) -> Self {
        Self::term(space, Monomial::generator(space.len(), i), C::one())
    }

    pub fn named(space: &Arc<GeneratorSpace>, name: &str) -> Result<Self> {
        Ok(Self::generator(space, space.index_of(name)?))
    }

    /// Builds a polynomial from already canonical terms; repeated monomials are summed.
    pub fn from_terms(space: &Arc<GeneratorSpace>, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn space(&self) -> &Arc<GeneratorSpace> {
        &self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                e.add_assign(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Degree shared by all terms, or `None` for mixed degrees; zero has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree(&self.space));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_universe(&self, other: &Self) -> Result<()> {
        if GeneratorSpace::same_universe(&self.space, &other.space) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    /// Product with Koszul signs.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_universe(other)?;
        let mut out = Self::zero(&self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((neg, m)) = ma.mul(mb, &self.space) {
                    let c = ca.mul(cb);
                    out.add_term(m, &if neg { c.neg() } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        GradedPoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, q: &Q) -> Self {
        if Zero::is_zero(q) {
            return Self::zero(&self.space);
        }
        GradedPoly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.scale(q))).collect(),
        }
    }

    /// Multiplies every coefficient by `c` (which must not be a zero divisor).
    pub fn scale_by(&self, c: &C) -> Self {
        Self::from_terms(&self.space, self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.space);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> GradedPoly<D> {
        GradedPoly::from_terms(&self.space, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        GradedPoly {
            space: self.space.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }
}

impl Polynomial {
    pub fn from_rational_terms(space: &Arc<GeneratorSpace>, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        Self::from_terms(space, terms)
    }

    pub fn lift<C: Coefficient>(&self) -> GradedPoly<C> {
        self.map_coefficients(C::from_rational)
    }

    /// Parses expressions such as `x1^3*x2 - 2/3*y1*y2 + 1`.
    ///
    /// Factors are multiplied in the written order, so `y2*y1` parses to `-y1*y2`
    /// when both are odd.
    pub fn parse(space: &Arc<GeneratorSpace>, src: &str) -> Result<Self> {
        super::parse::parse_polynomial(space, src)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, C: Coefficient> std::ops::$tr<&'a GradedPoly<C>> for &'a GradedPoly<C> {
            type Output = GradedPoly<C>;
            /// Panics when the operands live in different generator universes;
            /// use the `checked_*` variant to get an error instead.
            fn $method(self, rhs: &'a GradedPoly<C>) -> GradedPoly<C> {
                self.$checked(rhs).expect("polynomials over different generator universes")
            }
        }
        impl<C: Coefficient> std::ops::$tr for GradedPoly<C> {
            type Output = GradedPoly<C>;
            fn $method(self, rhs: GradedPoly<C>) -> GradedPoly<C> {
                (&self).$checked(&rhs).expect("polynomials over different generator universes")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> std::ops::Neg for &GradedPoly<C> {
    type Output = GradedPoly<C>;
    fn neg(self) -> GradedPoly<C> {
        GradedPoly::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // print in increasing degree, then canonical order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.degree(&self.space), std::cmp::Reverse((*m).clone())));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                self.space.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}
