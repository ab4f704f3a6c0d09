use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cdga::{Monomial, Polynomial};
use crate::{Error, Result, Q};

use super::SullivanModel;

/// Pieces of the factorization `A_i = (x1 x2)² C_i`, `C1 = x2 C̄1`,
/// `C3 = x1 C̄3`, `C2 = −x1 C̄1 − x2 C̄3`, grouped by vertex-monomial prefix.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// `(prefix, C̄1, C̄3)` per prefix monomial in the `x[v]`.
    pub blocks: Vec<(Monomial, Polynomial, Polynomial)>,
    pub preimage: Polynomial,
}

/// Preimage of an admissible cocycle `Σ y_i A_i` under `d`.
///
/// The degree must be `|z|`, `|z| − |x_v|` or `|z| − 2|x_v|` (only `|z|` for
/// the rigid family); in those degrees the divisibility lemmas guarantee the
/// factorization exists.
pub fn cocycle_to_coboundary<M: SullivanModel + ?Sized>(m: &M, c: &Polynomial) -> Result<Polynomial> {
    let alg = m.algebra();
    if !alg.is_cocycle(c) {
        return Err(Error::NotCocycle);
    }
    if c.is_zero() {
        return Ok(Polynomial::zero(alg.space()));
    }
    let d = c.homogeneous_degree().ok_or(Error::NotHomogeneous)? as i64;
    let s = m.scheme();
    let mut admissible = vec![s.z];
    if m.graph().is_some() {
        let xv = s.xv.expect("graph family");
        admissible.extend([s.z - xv, s.z - 2 * xv]);
    }
    if !admissible.contains(&d) {
        return Err(Error::Inadmissible(format!("degree {d} is not one of {admissible:?}")));
    }
    Ok(coboundary_by_factorization(m, c)?.preimage)
}

/// The same factorization without the degree restriction; fails with
/// `Inadmissible` when some `A_i` is not divisible as required.
pub fn coboundary_by_factorization<M: SullivanModel + ?Sized>(m: &M, c: &Polynomial) -> Result<Factorization> {
    let alg = m.algebra();
    let space = alg.space();
    let ix = m.index();
    if !alg.is_cocycle(c) {
        return Err(Error::NotCocycle);
    }
    let n = space.len();
    let is_vertex = |i: usize| ix.xv.contains(&i);

    // prefix -> [A1, A2, A3] as exponent maps over (x1, x2)
    let mut groups: BTreeMap<Monomial, [BTreeMap<(u32, u32), Q>; 3]> = BTreeMap::new();
    for (mono, coeff) in c.terms() {
        let mut which = None;
        let mut prefix = vec![0u32; n];
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 || i == ix.x1 || i == ix.x2 {
                continue;
            }
            if let Some(j) = ix.y.iter().position(|&y| y == i) {
                if which.replace(j).is_some() {
                    return Err(Error::Inadmissible("term with more than one y".into()));
                }
            } else if is_vertex(i) {
                prefix[i] = e;
            } else {
                return Err(Error::Inadmissible(format!(
                    "term {} is not of the form y_i·A_i",
                    space.monomial_to_string(mono)
                )));
            }
        }
        let j = which.ok_or_else(|| Error::Inadmissible("term without a y factor".into()))?;
        let key = (mono.exponent(ix.x1), mono.exponent(ix.x2));
        groups.entry(Monomial::from_exponents(prefix)).or_default()[j].insert(key, coeff.clone());
    }

    let mono = |a: u32, b: u32, prefix: &Monomial| {
        let mut e = prefix.exponents().to_vec();
        e[ix.x1] += a;
        e[ix.x2] += b;
        Monomial::from_exponents(e)
    };
    let y = |j: usize| Polynomial::generator(space, ix.y[j]);
    let x = |i: usize| Polynomial::generator(space, i);

    let mut blocks = Vec::new();
    let mut w = Polynomial::zero(space);
    for (prefix, [a1, a2, a3]) in groups {
        // C_i = A_i / (x1 x2)^2, then C̄1 = C1 / x2, C̄3 = C3 / x1
        let divide = |a: &BTreeMap<(u32, u32), Q>, p: u32, q: u32, what: &str| -> Result<BTreeMap<(u32, u32), Q>> {
            a.iter()
                .map(|(&(e1, e2), c)| {
                    if e1 < p || e2 < q {
                        Err(Error::Inadmissible(format!("{what} is not divisible by x1^{p} x2^{q}")))
                    } else {
                        Ok(((e1 - p, e2 - q), c.clone()))
                    }
                })
                .collect()
        };
        let c1bar = divide(&a1, 2, 3, "A1")?;
        let c3bar = divide(&a3, 3, 2, "A3")?;
        let c2 = divide(&a2, 2, 2, "A2")?;
        // check C2 = −x1 C̄1 − x2 C̄3
        let mut expect: BTreeMap<(u32, u32), Q> = BTreeMap::new();
        for (&(e1, e2), c) in &c1bar {
            *expect.entry((e1 + 1, e2)).or_insert_with(Q::zero) -= c;
        }
        for (&(e1, e2), c) in &c3bar {
            *expect.entry((e1, e2 + 1)).or_insert_with(Q::zero) -= c;
        }
        expect.retain(|_, c| !c.is_zero());
        if expect != c2 {
            return Err(Error::Verification("C2 differs from −x1·C̄1 − x2·C̄3".into()));
        }
        let to_poly = |m: &BTreeMap<(u32, u32), Q>| {
            Polynomial::from_terms(space, m.iter().map(|(&(a, b), c)| (mono(a, b, &prefix), c.clone())))
        };
        let c1p = to_poly(&c1bar);
        let c3p = to_poly(&c3bar);
        // w += C̄1 x2 y2 y1 + C̄3 x1 y2 y3
        let piece = &(&(&c1p * &x(ix.x2)) * &(&y(1) * &y(0))) + &(&(&c3p * &x(ix.x1)) * &(&y(1) * &y(2)));
        w = &w + &piece;
        blocks.push((prefix, c1p, c3p));
    }
    if alg.apply(&w) != *c {
        return Err(Error::Verification("d(w) differs from the input cocycle".into()));
    }
    Ok(Factorization { blocks, preimage: w })
}
