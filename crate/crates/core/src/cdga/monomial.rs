use crate::cdga::GeneratorSpace;

/// Exponent vector over the canonical generator order of a [`GeneratorSpace`].
///
/// Odd generators carry exponent 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn generator(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::from_exponents(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Number of generator factors counted with multiplicity.
    pub fn word_length(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self, space: &GeneratorSpace) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| e * space.degree(i))
            .sum()
    }

    /// Parity of the number of odd factors, i.e. of the degree.
    pub fn is_odd(&self, space: &GeneratorSpace) -> bool {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &e)| e > 0 && space.is_odd(*i))
            .count()
            % 2
            == 1
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(
            other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect(),
        ))
    }

    /// Product `self · other` in the graded-commutative algebra.
    ///
    /// Returns `None` when an odd generator would be squared; otherwise the
    /// Koszul sign (±1) of moving every odd factor of `other` past the odd
    /// factors of `self` that sit later in canonical order.
    pub fn mul(&self, other: &Monomial, space: &GeneratorSpace) -> Option<(bool, Monomial)> {
        let n = self.0.len();
        let mut exps = Vec::with_capacity(n);
        let mut negative = false;
        // odd factors of self strictly after position i
        let mut odd_after = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, &e)| e > 0 && space.is_odd(*i))
            .count();
        for i in 0..n {
            let (a, b) = (self.0[i], other.0[i]);
            if space.is_odd(i) {
                if a > 0 {
                    odd_after -= 1;
                }
                if a > 0 && b > 0 {
                    return None;
                }
                if b > 0 && odd_after % 2 == 1 {
                    negative = !negative;
                }
            }
            exps.push(a + b);
        }
        Some((negative, Monomial::from_exponents(exps)))
    }
}
