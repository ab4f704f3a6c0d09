//! Degree schemes of the two model families and the integer lemmas behind
//! their rigidity: the divisibility tables and the linear diophantine lemma.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    /// Rigid algebra `M_k`, `k` even and greater than 4.
    Mk { k: i64 },
    /// Graph-indexed algebra `M_n(G)`, `n ≥ 1`.
    Mng { n: i64 },
}

/// Generator degrees of one model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeScheme {
    pub family: Family,
    pub x1: i64,
    pub x2: i64,
    pub y1: i64,
    pub y2: i64,
    pub y3: i64,
    /// Degree of the vertex generators `x_v` (graph family only).
    pub xv: Option<i64>,
    pub z: i64,
}

impl DegreeScheme {
    pub fn mk(k: i64) -> Result<Self> {
        if k <= 4 || k % 2 != 0 {
            return Err(Error::InvalidParameter(format!("k = {k}: k must be an even integer greater than 4")));
        }
        Ok(DegreeScheme {
            family: Family::Mk { k },
            x1: 5 * k - 2,
            x2: 6 * k - 2,
            y1: 21 * k - 9,
            y2: 22 * k - 9,
            y3: 23 * k - 9,
            xv: None,
            z: 15 * k * k - 11 * k + 1,
        })
    }

    pub fn mng(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter(format!("n = {n}: n must be at least 1")));
        }
        Ok(DegreeScheme {
            family: Family::Mng { n },
            x1: 30 * n + 18,
            x2: 36 * n + 22,
            y1: 126 * n + 75,
            y2: 132 * n + 79,
            y3: 138 * n + 83,
            xv: Some(180 * n * n + 218 * n + 66),
            z: 540 * n * n + 654 * n + 197,
        })
    }

    /// Degrees `(x1, x2, y1, y2, y3, z)` of the rigid generators.
    pub fn rigid_degrees(&self) -> [i64; 6] {
        [self.x1, self.x2, self.y1, self.y2, self.y3, self.z]
    }

    pub fn ys(&self) -> [i64; 3] {
        [self.y1, self.y2, self.y3]
    }
}

/// One named integer of a table together with its divisibility verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithCheck {
    pub name: String,
    pub value: i64,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithReport {
    pub parameter: i64,
    pub checks: Vec<ArithCheck>,
}

impl ArithReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict)
    }
}

fn not_divisible(name: String, value: i64, s: &DegreeScheme) -> ArithCheck {
    let passed = value % s.x1 != 0 && value % s.x2 != 0;
    ArithCheck { name, value, verdict: passed }
}

/// Rows of the first divisibility table for a scheme:
/// `|z| - |y_i|` and `|z| - |y_i| - |x1| - |x2|`.
pub fn table1_values(s: &DegreeScheme) -> Vec<(String, i64)> {
    let mut out = Vec::new();
    for (i, y) in s.ys().iter().enumerate() {
        out.push((format!("|z|-|y{}|", i + 1), s.z - y));
    }
    for (i, y) in s.ys().iter().enumerate() {
        out.push((format!("|z|-|y{}|-|x1|-|x2|", i + 1), s.z - y - s.x1 - s.x2));
    }
    out
}

/// Rows of the second table: `r_i`, `r_i - |x1| - |x2|`, then the same
/// shifted by `|x_v|` and `2|x_v|`.
pub fn table2_values(s: &DegreeScheme) -> Result<Vec<(String, i64)>> {
    let xv = s
        .xv
        .ok_or_else(|| Error::InvalidParameter("second table needs the graph family".into()))?;
    let mut out = Vec::new();
    for (shift, label) in [(0, ""), (xv, "-|xv|"), (2 * xv, "-2|xv|")] {
        for (i, y) in s.ys().iter().enumerate() {
            out.push((format!("r{}{label}", i + 1), s.z - y - shift));
        }
        for (i, y) in s.ys().iter().enumerate() {
            out.push((format!("r{}{label}-|x1|-|x2|", i + 1), s.z - y - shift - s.x1 - s.x2));
        }
    }
    Ok(out)
}

/// None of the six first-table integers is divisible by `|x1|` or `|x2|`.
pub fn table1_check(k: i64) -> Result<ArithReport> {
    let s = DegreeScheme::mk(k)?;
    Ok(table_report(k, &s, table1_values(&s)))
}

/// None of the eighteen second-table integers is divisible by `|x1|` or `|x2|`.
pub fn table2_check(n: i64) -> Result<ArithReport> {
    let s = DegreeScheme::mng(n)?;
    Ok(table_report(n, &s, table2_values(&s)?))
}

/// Table verdicts for an arbitrary (possibly manufactured) scheme.
pub fn table_report(parameter: i64, s: &DegreeScheme, values: Vec<(String, i64)>) -> ArithReport {
    ArithReport {
        parameter,
        checks: values.into_iter().map(|(n, v)| not_divisible(n, v, s)).collect(),
    }
}

/// General integer solution of `a·α + b·β = m`: `(α₀ + t·step_alpha, β₀ − t·step_beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiophSolution {
    pub particular: (i64, i64),
    pub step_alpha: i64,
    pub step_beta: i64,
}

impl DiophSolution {
    pub fn at(&self, t: i64) -> (i64, i64) {
        (self.particular.0 + t * self.step_alpha, self.particular.1 - t * self.step_beta)
    }

    pub fn contains(&self, (alpha, beta): (i64, i64)) -> bool {
        let da = alpha - self.particular.0;
        if da % self.step_alpha != 0 {
            return false;
        }
        self.at(da / self.step_alpha) == (alpha, beta)
    }

    /// A solution with both coordinates `≥ lower`, found by scanning the
    /// finitely many `t` whose first coordinate lies in `[lower, m / a]`.
    pub fn find_with_lower_bound(&self, a: i64, m: i64, lower: i64) -> Option<(i64, i64)> {
        if m < 0 {
            return None;
        }
        let t_min = Integer::div_ceil(&(lower - self.particular.0), &self.step_alpha);
        let t_max = Integer::div_floor(&(m / a - self.particular.0), &self.step_alpha);
        (t_min..=t_max).map(|t| self.at(t)).find(|&(x, y)| x >= lower && y >= lower)
    }
}

/// Extended Euclid: `(g, u, v)` with `a·u + b·v = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Solves `a·α + b·β = m` over the integers for positive `a`, `b`.
///
/// The particular solution is normalised to the least non-negative `α`.
pub fn dioph_solve(a: i64, b: i64, m: i64) -> Result<Option<DiophSolution>> {
    if a <= 0 || b <= 0 {
        return Err(Error::InvalidParameter(format!("coefficients must be positive, got ({a}, {b})")));
    }
    let (g, u, _) = extended_gcd(a, b);
    if m % g != 0 {
        return Ok(None);
    }
    let step_alpha = b / g;
    let step_beta = a / g;
    let alpha = ((u as i128 * (m / g) as i128).rem_euclid(step_alpha as i128)) as i64;
    let beta = (m - a * alpha) / b;
    Ok(Some(DiophSolution { particular: (alpha, beta), step_alpha, step_beta }))
}

/// Whether `a·α + b·β = m` has a solution with both coordinates `≥ lower`.
pub fn has_bounded_solution(a: i64, b: i64, m: i64, lower: i64) -> Result<Option<(i64, i64)>> {
    Ok(dioph_solve(a, b, m)?.and_then(|s| s.find_with_lower_bound(a, m, lower)))
}

/// Verdicts of the diophantine lemma at one `n`: no positive pair for
/// `m = |x_v|`, no non-negative pair for the three `|z|`-derived targets.
pub fn dioph_no_solution_check(n: i64) -> Result<ArithReport> {
    let s = DegreeScheme::mng(n)?;
    let xv = s.xv.expect("graph family");
    let y123 = s.y1 + s.y2 + s.y3;
    let cases = [
        ("|xv| (positive)".to_string(), xv, 1),
        ("|z|-|y1y2y3|".to_string(), s.z - y123, 0),
        ("|z|-|xv y1y2y3|".to_string(), s.z - xv - y123, 0),
        ("|z|-|xv^2 y1y2y3|".to_string(), s.z - 2 * xv - y123, 0),
    ];
    let mut checks = Vec::new();
    for (name, m, lower) in cases {
        let found = has_bounded_solution(s.x1, s.x2, m, lower)?;
        checks.push(ArithCheck { name, value: m, verdict: found.is_none() });
    }
    let (g, u, v) = extended_gcd(s.x1, s.x2);
    checks.push(ArithCheck {
        name: "-6|x1|+5|x2|".into(),
        value: -6 * s.x1 + 5 * s.x2,
        verdict: -6 * s.x1 + 5 * s.x2 == 2 && g == 2 && u * s.x1 + v * s.x2 == 2,
    });
    Ok(ArithReport { parameter: n, checks })
}

/// Degree-isolation chain `|x1| < |x2| < |y1| < |y2| < |y3| < |x1 y1| < |x2 y3| < |z|`.
pub fn isolation_chain(s: &DegreeScheme) -> [i64; 8] {
    [s.x1, s.x2, s.y1, s.y2, s.y3, s.x1 + s.y1, s.x2 + s.y3, s.z]
}

pub fn isolation_holds(s: &DegreeScheme) -> bool {
    isolation_chain(s).windows(2).all(|w| w[0] < w[1])
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepReport {
    pub family: String,
    pub reports: Vec<ArithReport>,
    pub passed: bool,
}

/// The first divisibility table plus the isolation chain for every even `k` in `(4, k_max]`.
pub fn sweep_mk(k_max: i64) -> Result<SweepReport> {
    let mut reports = Vec::new();
    for k in (6..=k_max).step_by(2) {
        let mut r = table1_check(k)?;
        let s = DegreeScheme::mk(k)?;
        r.checks.push(ArithCheck { name: "isolation".into(), value: s.z, verdict: isolation_holds(&s) });
        reports.push(r);
    }
    let passed = reports.iter().all(ArithReport::passed);
    Ok(SweepReport { family: "mk".into(), reports, passed })
}

/// The second divisibility table and the diophantine lemma for every `n` in `[1, n_max]`.
pub fn sweep_mng(n_max: i64) -> Result<SweepReport> {
    let mut reports = Vec::new();
    for n in 1..=n_max {
        let mut r = table2_check(n)?;
        r.checks.extend(dioph_no_solution_check(n)?.checks);
        reports.push(r);
    }
    let passed = reports.iter().all(ArithReport::passed);
    Ok(SweepReport { family: "mng".into(), reports, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mk_scheme_at_six() {
        let s = DegreeScheme::mk(6).unwrap();
        assert_eq!(s.rigid_degrees(), [28, 34, 117, 123, 129, 475]);
        assert_eq!(DegreeScheme::mk(8).unwrap().z, 873);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(DegreeScheme::mk(4).is_err());
        assert!(DegreeScheme::mk(7).is_err());
        assert!(DegreeScheme::mng(0).is_err());
        assert!(table1_check(5).is_err());
        assert!(table2_check(0).is_err());
    }

    #[test]
    fn table1_at_six_sample_value() {
        let r = table1_check(6).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[0].value, 358);
        assert_eq!(358 % 28, 22);
        assert_eq!(358 % 34, 18);
    }

    #[test]
    fn mng_scheme_at_one() {
        let s = DegreeScheme::mng(1).unwrap();
        assert_eq!(s.rigid_degrees(), [48, 58, 201, 211, 221, 1391]);
        assert_eq!(s.xv, Some(464));
        assert!(table2_check(1).unwrap().passed());
    }

    #[test]
    fn manufactured_scheme_fails() {
        let mut s = DegreeScheme::mng(1).unwrap();
        s.z += s.x1;
        let r = table_report(1, &s, table2_values(&s).unwrap());
        assert!(!r.passed());
        let failing: Vec<_> = r.checks.iter().filter(|c| !c.verdict).map(|c| c.value).collect();
        assert_eq!(failing, vec![1218, 754, 290]);
        assert!(failing.iter().all(|v| v % 58 == 0));
    }

    #[test]
    fn dioph_examples() {
        let sol = dioph_solve(48, 58, 464).unwrap().unwrap();
        assert_eq!(sol.particular, (0, 8));
        assert_eq!((sol.step_alpha, sol.step_beta), (29, 24));
        assert!(dioph_solve(48, 58, 1).unwrap().is_none());
        assert_eq!(-6 * 48 + 5 * 58, 2);
        let sol = dioph_solve(48, 58, 758).unwrap().unwrap();
        assert!(sol.contains((-12, 23)));
        assert_eq!(has_bounded_solution(2, 3, 5, 1).unwrap(), Some((1, 1)));
        assert!(has_bounded_solution(48, 58, 464, 1).unwrap().is_none());
        assert_eq!(has_bounded_solution(48, 58, 464, 0).unwrap(), Some((0, 8)));
    }
}
