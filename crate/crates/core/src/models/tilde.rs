
use crate::arithmetic::dioph_solve;
use crate::cdga::{Cdga, Monomial, Polynomial};
use crate::{Error, Result};

/// Name of the odd generator added by [`tilde`].
pub const TILDE_GENERATOR: &str = "z~";

/// `A ⊗ Λ(z~)` with `d z~ = x` for a cocycle `x` in the formal dimension of `A`.
#[derive(Clone, Debug)]
pub struct TildeModel {
    pub base: Cdga,
    pub fundamental: Polynomial,
    pub algebra: Cdga,
}

impl TildeModel {
    pub fn formal_dimension(&self) -> i64 {
        self.algebra.formal_dimension()
    }
}

/// Extends `a` by an odd generator of degree `dim2m - 1` killing `x`.
///
/// `x` is taken as given: it must be a cocycle of degree `dim2m`, and
/// `dim2m` must be the (even) formal dimension of `a`.
pub fn tilde(a: &Cdga, x: &Polynomial, dim2m: i64) -> Result<TildeModel> {
    if dim2m <= 0 || dim2m % 2 != 0 {
        return Err(Error::InvalidParameter(format!("formal dimension {dim2m} must be positive and even")));
    }
    if a.formal_dimension() != dim2m {
        return Err(Error::Inadmissible(format!(
            "formal dimension of the base is {}, not {dim2m}",
            a.formal_dimension()
        )));
    }
    if x.is_zero() || x.homogeneous_degree() != Some(dim2m as u32) {
        return Err(Error::Inadmissible(format!("representative must be nonzero and homogeneous of degree {dim2m}")));
    }
    if !a.apply_differential(x)?.is_zero() {
        return Err(Error::NotCocycle);
    }
    let algebra = a.extend(TILDE_GENERATOR, (dim2m - 1) as u32, x)?;
    Ok(TildeModel { base: a.clone(), fundamental: x.clone(), algebra })
}

/// `(1080+720k)n² + (1968+872k)n + 264k + 791` for a graph on `k` vertices.
pub fn chirality_dimension_closed_form(n: i64, k: i64) -> i64 {
    (1080 + 720 * k) * n * n + (1968 + 872 * k) * n + 264 * k + 791
}

/// A cocycle `x1^α x2^β` of the requested degree, if one exists.
///
/// Closed and of the right degree, so it is accepted by [`tilde`]; it is not
/// certified to represent the fundamental class.
pub fn monomial_cocycle(a: &Cdga, degree: i64) -> Result<Option<Polynomial>> {
    let s = a.space();
    let (i1, i2) = (s.index_of("x1")?, s.index_of("x2")?);
    let (d1, d2) = (s.degree(i1) as i64, s.degree(i2) as i64);
    let Some(sol) = dioph_solve(d1, d2, degree)? else { return Ok(None) };
    let Some((alpha, beta)) = sol.find_with_lower_bound(d1, degree, 0) else { return Ok(None) };
    let mut e = vec![0; s.len()];
    e[i1] = alpha as u32;
    e[i2] = beta as u32;
    Ok(Some(Polynomial::term(s, Monomial::from_exponents(e), crate::qi(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::builtin;
    use crate::models::build_mng;

    #[test]
    fn dimension_and_errors() {
        let m = build_mng(1, &builtin::path(3)).unwrap();
        let fd = m.algebra.formal_dimension();
        let x = monomial_cocycle(&m.algebra, fd).unwrap().unwrap();
        let t = tilde(&m.algebra, &x, fd).unwrap();
        assert_eq!(t.formal_dimension(), 9407);
        assert_eq!(t.formal_dimension(), chirality_dimension_closed_form(1, 3));
        assert_eq!(t.formal_dimension() % 4, 3);
        assert!(t.algebra.check_d_squared());
        let not_closed = m.algebra.parse("x1^97*y1").unwrap();
        assert!(tilde(&m.algebra, &not_closed, fd).is_err());
        let y = m.algebra.parse(&format!("x1^{}*x2^{}*y1", 1, 1)).unwrap();
        assert!(tilde(&m.algebra, &y, fd).is_err());
        assert!(tilde(&m.algebra, &x, fd + 2).is_err());
    }
}
