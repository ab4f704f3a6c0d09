//! Polynomial systems in the scalar unknowns of an ansatz.
//!
//! The solver is a depth-first search over zero/nonzero decisions. Between
//! decisions it applies, to a fixed point:
//!  - zero: a one-term equation with a single undecided unknown forces it to 0;
//!  - define: an equation linear in `u` with constant coefficient eliminates `u`;
//!  - nonzero: a two-term equation with one side known nonzero makes the other
//!    side nonzero;
//!  - block: the linear part of an invertible map must have a perfect matching
//!    on its possibly nonzero entries, and entries used by every matching are
//!    nonzero;
//!  - binomial: once a component of two-term equations in nonzero unknowns
//!    has full exponent rank it is solved exactly over ℚ.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use super::scalar::{SMono, ScalarPoly, Var};
use super::snf::solve_binomial;
use crate::cdga::Coefficient;
use crate::{Error, Result, Q};

#[derive(Clone, Debug)]
pub struct Equation {
    pub poly: ScalarPoly,
    pub origin: String,
}

/// One logged inference.
#[derive(Clone, Debug, Serialize)]
pub struct Step {
    pub rule: &'static str,
    pub statement: String,
    pub origin: String,
}

#[derive(Clone, Debug, Default)]
pub struct Problem {
    pub names: Vec<String>,
    pub equations: Vec<Equation>,
    /// Square blocks of unknowns whose determinant must not vanish.
    pub blocks: Vec<Vec<Vec<Var>>>,
    /// Decision order; unknowns not listed come after, by index.
    pub priority: Vec<Var>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    /// Eliminated unknowns, expressed in the free ones.
    pub defs: BTreeMap<Var, ScalarPoly>,
    pub free: Vec<Var>,
    pub log: Vec<Step>,
}

impl Solution {
    pub fn value(&self, v: Var) -> ScalarPoly {
        self.defs.get(&v).cloned().unwrap_or_else(|| ScalarPoly::var(v))
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes: usize,
    pub dead_ends: usize,
}

const NODE_LIMIT: usize = 2_000_000;

#[derive(Clone)]
struct State {
    eqs: Vec<Equation>,
    defs: BTreeMap<Var, ScalarPoly>,
    nonzero: BTreeSet<Var>,
    log: Vec<Step>,
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Status {
    Zero,
    NonZero,
    Unknown,
}

impl State {
    fn status(&self, v: Var) -> Status {
        if self.nonzero.contains(&v) {
            return Status::NonZero;
        }
        match self.defs.get(&v) {
            Some(p) if p.is_empty() => Status::Zero,
            Some(p) => match p.as_term() {
                Some((m, _)) if m.factors().iter().all(|(w, _)| self.nonzero.contains(w)) => Status::NonZero,
                _ => Status::Unknown,
            },
            None => Status::Unknown,
        }
    }

    fn mono_nonzero(&self, m: &SMono) -> bool {
        m.factors().iter().all(|(w, _)| self.nonzero.contains(w))
    }

    fn define(&mut self, v: Var, value: ScalarPoly, rule: &'static str, origin: String, names: &[String]) -> bool {
        if self.nonzero.contains(&v) {
            match value.as_term() {
                None => return false,
                Some((m, _)) => {
                    let vars: Vec<Var> = m.factors().iter().map(|(w, _)| *w).collect();
                    self.nonzero.extend(vars);
                }
            }
        }
        self.log.push(Step { rule, statement: format!("{} = {}", names[v as usize], value.display(names)), origin });
        for eq in &mut self.eqs {
            eq.poly = eq.poly.substitute(v, &value);
        }
        for d in self.defs.values_mut() {
            *d = d.substitute(v, &value);
        }
        self.defs.insert(v, value);
        true
    }
}

enum Propagated {
    Consistent,
    Inconsistent,
}

pub struct Solver<'a> {
    problem: &'a Problem,
    rank: BTreeMap<Var, usize>,
    pub stats: SearchStats,
    solutions: Vec<Solution>,
}

/// Solves `problem`, returning every branch that survives, in decision order.
pub fn solve(problem: &Problem) -> Result<(Vec<Solution>, SearchStats)> {
    let rank = problem.priority.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut solver = Solver { problem, rank, stats: SearchStats::default(), solutions: Vec::new() };
    let state = State { eqs: problem.equations.clone(), defs: BTreeMap::new(), nonzero: BTreeSet::new(), log: Vec::new() };
    solver.search(state)?;
    Ok((solver.solutions, solver.stats))
}

impl Solver<'_> {
    fn names(&self) -> &[String] {
        &self.problem.names
    }

    fn search(&mut self, mut state: State) -> Result<()> {
        self.stats.nodes += 1;
        if self.stats.nodes > NODE_LIMIT {
            return Err(Error::Hypothesis(format!("search exceeded {NODE_LIMIT} nodes")));
        }
        if let Propagated::Inconsistent = self.propagate(&mut state) {
            self.stats.dead_ends += 1;
            return Ok(());
        }
        if let Some((vars, origins, sols)) = self.binomial(&state) {
            for sol in sols {
                let mut child = state.clone();
                let origin = origins.join("; ");
                let mut ok = true;
                for (v, x) in vars.iter().zip(sol) {
                    ok &= child.define(*v, ScalarPoly::constant(x), "binomial", origin.clone(), self.names());
                }
                if ok {
                    self.search(child)?;
                } else {
                    self.stats.dead_ends += 1;
                }
            }
            return Ok(());
        }
        if state.eqs.is_empty() {
            self.finish(state);
            return Ok(());
        }
        let candidates: BTreeSet<Var> =
            state.eqs.iter().flat_map(|e| e.poly.vars()).filter(|v| !state.nonzero.contains(v)).collect();
        let Some(&v) = candidates.iter().min_by_key(|&&v| (self.rank.get(&v).copied().unwrap_or(usize::MAX), v)) else {
            let open: Vec<String> = state.eqs.iter().take(3).map(|e| format!("{} = 0", e.poly.display(self.names()))).collect();
            return Err(Error::Hypothesis(format!("system not resolved by the elimination rules: {}", open.join(", "))));
        };
        let name = self.names()[v as usize].clone();
        let mut nz = state.clone();
        nz.nonzero.insert(v);
        nz.log.push(Step { rule: "branch", statement: format!("{name} ≠ 0"), origin: "case split".into() });
        self.search(nz)?;
        let mut z = state;
        if z.define(v, ScalarPoly::default(), "branch", "case split".into(), self.names()) {
            self.search(z)?;
        }
        Ok(())
    }

    fn finish(&mut self, state: State) {
        let all = self.problem.names.len() as Var;
        let free = (0..all).filter(|v| !state.defs.contains_key(v)).collect();
        self.solutions.push(Solution { defs: state.defs, free, log: state.log });
    }

    fn propagate(&self, st: &mut State) -> Propagated {
        let names = self.names();
        'outer: loop {
            st.eqs.retain(|e| !e.poly.is_empty());
            for e in &st.eqs {
                if e.poly.as_constant().is_some() {
                    st.log.push(Step { rule: "contradiction", statement: format!("{} = 0", e.poly.display(names)), origin: e.origin.clone() });
                    return Propagated::Inconsistent;
                }
            }
            // zero
            for i in 0..st.eqs.len() {
                if let Some((m, _)) = st.eqs[i].poly.as_term() {
                    let open: Vec<Var> = m.factors().iter().map(|(v, _)| *v).filter(|v| !st.nonzero.contains(v)).collect();
                    match open.len() {
                        0 => {
                            let e = &st.eqs[i];
                            st.log.push(Step {
                                rule: "contradiction",
                                statement: format!("{} = 0 with every factor nonzero", e.poly.display(names)),
                                origin: e.origin.clone(),
                            });
                            return Propagated::Inconsistent;
                        }
                        1 => {
                            let origin = st.eqs[i].origin.clone();
                            if !st.define(open[0], ScalarPoly::default(), "zero", origin, names) {
                                return Propagated::Inconsistent;
                            }
                            continue 'outer;
                        }
                        _ => {}
                    }
                }
            }
            // define
            for i in 0..st.eqs.len() {
                let poly = &st.eqs[i].poly;
                for &v in poly.vars().iter().rev() {
                    let Some((coef, rest)) = poly.linear_split(v) else { continue };
                    let Some(c) = coef.as_constant() else { continue };
                    if Zero::is_zero(&c) {
                        continue;
                    }
                    let value = rest.scale(&(-c.recip()));
                    if st.nonzero.contains(&v) && value.as_term().is_none() {
                        continue;
                    }
                    let origin = st.eqs[i].origin.clone();
                    if !st.define(v, value, "define", origin, names) {
                        return Propagated::Inconsistent;
                    }
                    continue 'outer;
                }
            }
            // nonzero
            for e in &st.eqs {
                if e.poly.len() != 2 {
                    continue;
                }
                let ms: Vec<&SMono> = e.poly.terms().map(|(m, _)| m).collect();
                for (a, b) in [(0, 1), (1, 0)] {
                    if st.mono_nonzero(ms[a]) && !st.mono_nonzero(ms[b]) {
                        let new: Vec<Var> = ms[b].factors().iter().map(|(v, _)| *v).filter(|v| !st.nonzero.contains(v)).collect();
                        let listed: Vec<&str> = new.iter().map(|&v| names[v as usize].as_str()).collect();
                        st.log.push(Step { rule: "nonzero", statement: format!("{} ≠ 0", listed.join(", ")), origin: e.origin.clone() });
                        st.nonzero.extend(new);
                        continue 'outer;
                    }
                }
            }
            // block
            for block in &self.problem.blocks {
                let status: Vec<Vec<Status>> = block.iter().map(|row| row.iter().map(|&v| st.status(v)).collect()).collect();
                let allowed = |skip: Option<(usize, usize)>| {
                    status
                        .iter()
                        .enumerate()
                        .map(|(i, row)| {
                            row.iter()
                                .enumerate()
                                .map(|(j, s)| *s != Status::Zero && Some((i, j)) != skip)
                                .collect::<Vec<bool>>()
                        })
                        .collect::<Vec<_>>()
                };
                if !has_perfect_matching(&allowed(None)) {
                    st.log.push(Step {
                        rule: "block",
                        statement: "linear part on indecomposables is singular".into(),
                        origin: format!("block of {}", names[block[0][0] as usize]),
                    });
                    return Propagated::Inconsistent;
                }
                for (i, row) in status.iter().enumerate() {
                    for (j, s) in row.iter().enumerate() {
                        if *s == Status::Unknown && !has_perfect_matching(&allowed(Some((i, j)))) {
                            let v = block[i][j];
                            let forced: Vec<Var> = match st.defs.get(&v) {
                                None => vec![v],
                                Some(p) => match p.as_term() {
                                    Some((m, _)) => m.factors().iter().map(|(w, _)| *w).collect(),
                                    None => continue,
                                },
                            };
                            st.log.push(Step {
                                rule: "block",
                                statement: format!("{} ≠ 0", names[v as usize]),
                                origin: "every perfect matching of the linear part uses it".into(),
                            });
                            st.nonzero.extend(forced);
                            continue 'outer;
                        }
                    }
                }
            }
            return Propagated::Consistent;
        }
    }

    /// First full-rank component of two-term equations in nonzero unknowns.
    #[allow(clippy::type_complexity)]
    fn binomial(&self, st: &State) -> Option<(Vec<Var>, Vec<String>, Vec<Vec<Q>>)> {
        let eqs: Vec<&Equation> = st
            .eqs
            .iter()
            .filter(|e| e.poly.len() == 2 && e.poly.terms().all(|(m, _)| st.mono_nonzero(m)))
            .collect();
        if eqs.is_empty() {
            return None;
        }
        // connected components by shared unknowns
        let mut comp: Vec<usize> = (0..eqs.len()).collect();
        fn root(c: &mut [usize], i: usize) -> usize {
            if c[i] == i {
                i
            } else {
                let r = root(c, c[i]);
                c[i] = r;
                r
            }
        }
        let mut owner: BTreeMap<Var, usize> = BTreeMap::new();
        for (i, e) in eqs.iter().enumerate() {
            for v in e.poly.vars() {
                if let Some(&j) = owner.get(&v) {
                    let (a, b) = (root(&mut comp, i), root(&mut comp, j));
                    comp[a] = b;
                } else {
                    owner.insert(v, i);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..eqs.len() {
            let r = root(&mut comp, i);
            groups.entry(r).or_default().push(i);
        }
        for members in groups.values() {
            let vars: Vec<Var> = members.iter().flat_map(|&i| eqs[i].poly.vars()).collect::<BTreeSet<_>>().into_iter().collect();
            let col: BTreeMap<Var, usize> = vars.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let mut rows = Vec::new();
            let mut kappa = Vec::new();
            for &i in members {
                let t: Vec<(&SMono, &Q)> = eqs[i].poly.terms().collect();
                let mut row = vec![0i64; vars.len()];
                for &(v, e) in t[0].0.factors() {
                    row[col[&v]] += e as i64;
                }
                for &(v, e) in t[1].0.factors() {
                    row[col[&v]] -= e as i64;
                }
                rows.push(row);
                kappa.push(-(t[1].1 / t[0].1));
            }
            if let Some(sols) = solve_binomial(&rows, &kappa, vars.len()) {
                let origins = members.iter().map(|&i| eqs[i].origin.clone()).collect();
                return Some((vars, origins, sols));
            }
        }
        None
    }
}

/// Kuhn's augmenting-path matching on a square boolean matrix.
pub fn has_perfect_matching(allowed: &[Vec<bool>]) -> bool {
    let n = allowed.len();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    fn augment(i: usize, allowed: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for j in 0..allowed[i].len() {
            if allowed[i][j] && !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, allowed, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..n).all(|i| augment(i, allowed, &mut vec![false; n], &mut owner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qi;

    fn v(i: Var) -> ScalarPoly {
        ScalarPoly::var(i)
    }

    fn sub(a: ScalarPoly, b: ScalarPoly) -> ScalarPoly {
        let mut a = a;
        a.add_assign(&b.neg());
        a
    }

    #[test]
    fn matching() {
        assert!(has_perfect_matching(&[vec![true, false], vec![false, true]]));
        assert!(!has_perfect_matching(&[vec![true, false], vec![true, false]]));
    }

    #[test]
    fn small_system_two_branches() {
        // b = a^2, a^2 = a
        let names = vec!["a".to_string(), "b".to_string()];
        let eqs = vec![
            Equation { poly: sub(v(1), v(0).pow(2)), origin: "e1".into() },
            Equation { poly: sub(v(0).pow(2), v(0)), origin: "e2".into() },
        ];
        let p = Problem { names, equations: eqs, ..Default::default() };
        let (sols, _) = solve(&p).unwrap();
        let vals: Vec<(Q, Q)> = sols.iter().map(|s| (s.value(0).as_constant().unwrap(), s.value(1).as_constant().unwrap())).collect();
        assert_eq!(vals, vec![(qi(1), qi(1)), (qi(0), qi(0))]);
    }

    #[test]
    fn block_forces_nonzero() {
        let names = vec!["a".to_string()];
        let eqs = vec![Equation { poly: v(0).pow(3), origin: "e".into() }];
        let p = Problem { names, equations: eqs, blocks: vec![vec![vec![0]]], priority: vec![] };
        let (sols, stats) = solve(&p).unwrap();
        assert!(sols.is_empty());
        assert_eq!(stats.dead_ends, 1);
    }
}
