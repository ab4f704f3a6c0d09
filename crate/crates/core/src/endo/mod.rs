//! Homotopy classes of self-maps.
//!
//! A self-map is written as the most general degree-preserving assignment of
//! generators, one unknown scalar per basis monomial of the target degree.
//! Comparing `f(dg)` with `d f(g)` coefficient by coefficient gives a
//! polynomial system in those unknowns, solved by [`system::solve`]. Each
//! surviving branch is reduced to a normal form (zero, identity, or the map
//! induced by a graph automorphism); any remaining freedom must consist of
//! exact terms on the `z`-type generators.

mod ansatz;
mod scalar;
mod snf;
mod system;

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

pub use ansatz::{apply_morphism, build_ansatz, chain_map_equations, compose, linear_blocks, problem, Ansatz, AnsatzRecord};
pub use scalar::{SMono, ScalarPoly, Var};
pub use snf::{diagonalize, rational_roots, solve_binomial, Diagonal};
pub use system::{has_perfect_matching, solve, Equation, Problem, SearchStats, Solution, Step};

use ansatz::kinds;
use crate::arithmetic::DegreeScheme;
use crate::cdga::{Cdga, Coefficient, Polynomial};
use crate::graphs::{automorphisms, FiniteGroup, Permutation};
use crate::models::{build_mk, cocycle_to_coboundary, ModelMk, ModelMnG, SullivanModel};
use crate::{Error, Result, Q};

/// Why `deg(f_σ)` is reported as 1.
pub const DEGREE_JUSTIFICATION: &str = "f_sigma is invertible of finite order, so its degree is a rational root of unity, \
     hence +1 or -1; the realization statement and the degree dichotomy for the odd-dimensional extension fix +1. \
     The fundamental class is not computed.";

/// The degree-zero part is represented by the zero map alone.
pub const SINGLE_CLASS_NOTE: &str = "maps of degree 0 are reported as the single class of the zero map; \
     non-invertible branches are not enumerated";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Zero,
    Identity,
    GraphAut(Permutation),
}

impl Kind {
    /// `self ∘ other`.
    pub fn compose(&self, other: &Kind) -> Kind {
        match (self, other) {
            (Kind::Zero, _) | (_, Kind::Zero) => Kind::Zero,
            (Kind::Identity, k) | (k, Kind::Identity) => k.clone(),
            (Kind::GraphAut(s), Kind::GraphAut(t)) => {
                let st = s.compose(t);
                if st.is_identity() {
                    Kind::Identity
                } else {
                    Kind::GraphAut(st)
                }
            }
        }
    }

    fn from_permutation(p: Permutation) -> Kind {
        if p.is_identity() {
            Kind::Identity
        } else {
            Kind::GraphAut(p)
        }
    }

    fn permutation(&self, n: usize) -> Option<Permutation> {
        match self {
            Kind::Zero => None,
            Kind::Identity => Some(Permutation::identity(n)),
            Kind::GraphAut(p) => Some(p.clone()),
        }
    }
}

/// Normal form of a homotopy class, plus optional exact perturbations:
/// the represented map sends a `z`-type generator `g` to its normal image
/// plus `d(witnesses[g])`.
#[derive(Clone, Debug, PartialEq)]
pub struct EndoClass {
    pub kind: Kind,
    pub witnesses: BTreeMap<String, Polynomial>,
}

impl EndoClass {
    pub fn new(kind: Kind) -> Self {
        EndoClass { kind, witnesses: BTreeMap::new() }
    }

    pub fn zero() -> Self {
        EndoClass::new(Kind::Zero)
    }

    pub fn identity() -> Self {
        EndoClass::new(Kind::Identity)
    }

    pub fn graph_aut(sigma: Permutation) -> Self {
        EndoClass::new(Kind::from_permutation(sigma))
    }

    pub fn with_witness(mut self, generator: &str, m: Polynomial) -> Self {
        self.witnesses.insert(generator.to_string(), m);
        self
    }

    pub fn name(&self, labels: &[String]) -> String {
        match &self.kind {
            Kind::Zero => "zero".into(),
            Kind::Identity => "identity".into(),
            Kind::GraphAut(p) => format!("f_sigma {}", p.cycle_string(labels)),
        }
    }
}

fn labels<M: SullivanModel + ?Sized>(m: &M) -> Vec<String> {
    m.graph().map(|g| g.labels().to_vec()).unwrap_or_default()
}

/// Generator images of the normal form of `kind`.
fn normal_images<M: SullivanModel + ?Sized>(m: &M, kind: &Kind) -> Result<Vec<Polynomial>> {
    let space = m.algebra().space();
    let n = space.len();
    let gen = |i: usize| Polynomial::generator(space, i);
    Ok(match kind {
        Kind::Zero => vec![Polynomial::zero(space); n],
        Kind::Identity => (0..n).map(gen).collect(),
        Kind::GraphAut(sigma) => {
            let ix = m.index();
            if m.graph().map(|g| g.len()) != Some(sigma.len()) {
                return Err(Error::Inadmissible("graph automorphism class on a model without that graph".into()));
            }
            let mut out: Vec<Polynomial> = (0..n).map(gen).collect();
            for v in 0..sigma.len() {
                out[ix.xv[v]] = gen(ix.xv[sigma.apply(v)]);
                out[ix.zv[v]] = gen(ix.zv[sigma.apply(v)]);
            }
            out
        }
    })
}

fn is_chain_map(alg: &Cdga, images: &[Polynomial]) -> Option<String> {
    let space = alg.space();
    (0..space.len())
        .find(|&g| apply_morphism(images, alg.d_generator(g)) != alg.apply(&images[g]))
        .map(|g| space.generator(g).name().to_string())
}

/// Explicit generator images of the map represented by `e`, checked to
/// commute with the differential.
pub fn induced_map<M: SullivanModel + ?Sized>(m: &M, e: &EndoClass) -> Result<Vec<(String, Polynomial)>> {
    let alg = m.algebra();
    let space = alg.space();
    let mut images = normal_images(m, &e.kind)?;
    let kinds = kinds(m);
    for (name, w) in &e.witnesses {
        let g = space.index_of(name)?;
        if !kinds[g].is_z_type() {
            return Err(Error::Inadmissible(format!("witness on {name}, which is not a z-type generator")));
        }
        let w = alg.transport(w)?;
        if w.homogeneous_degree().is_some_and(|d| d + 1 != space.degree(g)) {
            return Err(Error::Inadmissible(format!("witness for {name} has the wrong degree")));
        }
        images[g] = &images[g] + &alg.apply(&w);
    }
    if let Some(bad) = is_chain_map(alg, &images) {
        return Err(Error::Verification(format!("induced map does not commute with d on {bad}")));
    }
    Ok(space.generators().iter().map(|g| g.name().to_string()).zip(images).collect())
}

/// Scalar by which the class acts on the fundamental class.
pub fn degree_of(e: &EndoClass) -> Q {
    match e.kind {
        Kind::Zero => <Q as Zero>::zero(),
        Kind::Identity | Kind::GraphAut(_) => <Q as One>::one(),
    }
}

/// Degree of the induced self-map of the odd-dimensional extension: the
/// square of the base degree.
pub fn tilde_degree(e: &EndoClass) -> Q {
    let d = degree_of(e);
    &d * &d
}

#[derive(Clone, Debug, Serialize)]
pub struct Distinctness {
    pub distinct: bool,
    pub reason: String,
}

/// Compares two classes through the linear parts of their generator images;
/// `z`-type images that differ by a coboundary are identified.
pub fn distinct_homotopy_classes<M: SullivanModel + ?Sized>(m: &M, e1: &EndoClass, e2: &EndoClass) -> Result<Distinctness> {
    let alg = m.algebra();
    let f1 = induced_map(m, e1)?;
    let f2 = induced_map(m, e2)?;
    let kinds = kinds(m);
    for (g, ((name, p1), (_, p2))) in f1.iter().zip(&f2).enumerate() {
        let linear = |p: &Polynomial| p.filter(|mono| mono.word_length() == 1);
        if !kinds[g].is_z_type() && linear(p1) != linear(p2) {
            return Ok(Distinctness {
                distinct: true,
                reason: format!("{name} maps to {} and to {} modulo decomposables", linear(p1), linear(p2)),
            });
        }
    }
    for (g, ((name, p1), (_, p2))) in f1.iter().zip(&f2).enumerate() {
        let diff = p1 - p2;
        let same = if kinds[g].is_z_type() { diff.is_zero() || alg.coboundary_preimage(&diff)?.is_some() } else { diff.is_zero() };
        if !same {
            return Ok(Distinctness { distinct: true, reason: format!("images of {name} differ by a non-exact element") });
        }
    }
    Ok(Distinctness { distinct: false, reason: "images agree up to exact terms on z-type generators".into() })
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub name: String,
    pub kind: &'static str,
    /// `σ(v)` for every vertex `v`, by label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<BTreeMap<String, String>>,
    pub degree: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AutPair {
    pub element: usize,
    pub automorphism: usize,
    pub sigma: String,
}

/// Isomorphism from the invertible classes onto `Aut(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct AutIso {
    pub group_order: usize,
    pub pairs: Vec<AutPair>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Derivation {
    pub class: String,
    /// Dimension of the family of exact perturbations found in this branch.
    pub exact_directions: usize,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonoidReport {
    pub model: String,
    pub elements: Vec<ClassSummary>,
    /// `composition[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub composition: Vec<Vec<usize>>,
    pub invertible_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub aut_iso: Option<AutIso>,
    pub degrees: BTreeMap<String, String>,
    pub degree_justification: String,
    pub assumptions: Vec<String>,
    pub stages: Vec<String>,
    pub ansatz: Vec<AnsatzRecord>,
    pub derivations: Vec<Derivation>,
    pub search: SearchStats,
    pub laws_hold: bool,
    #[serde(skip)]
    pub classes: Vec<EndoClass>,
}

impl MonoidReport {
    pub fn invertible_indices(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&i| self.classes[i].kind != Kind::Zero).collect()
    }

    /// Associativity, absorbing zero and neutral identity on the table.
    pub fn check_laws(&self) -> bool {
        let t = &self.composition;
        let n = t.len();
        let zero = self.classes.iter().position(|c| c.kind == Kind::Zero);
        let one = self.classes.iter().position(|c| c.kind == Kind::Identity);
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
        let absorbs = zero.is_none_or(|z| (0..n).all(|a| t[z][a] == z && t[a][z] == z));
        let neutral = one.is_some_and(|e| (0..n).all(|a| t[e][a] == a && t[a][e] == a));
        assoc && absorbs && neutral
    }
}

/// One surviving branch, reduced to a normal form.
fn classify_solution<M: SullivanModel + ?Sized>(m: &M, ans: &Ansatz, sol: &Solution) -> Result<(EndoClass, usize)> {
    let alg = m.algebra();
    let space = alg.space();
    let kinds = kinds(m);
    let none = BTreeMap::new();
    let mut images = Vec::with_capacity(space.len());
    let mut directions: BTreeMap<Var, Vec<Polynomial>> = BTreeMap::new();
    for (g, slot) in ans.slots.iter().enumerate() {
        let mut img = Polynomial::zero(space);
        for (mono, v) in slot {
            let value = sol.value(*v);
            img.add_term(mono.clone(), &value.evaluate(&none));
            for (sm, c) in value.terms() {
                match sm.factors() {
                    [] => {}
                    [(u, 1)] => {
                        let dir = directions.entry(*u).or_insert_with(|| vec![Polynomial::zero(space); space.len()]);
                        dir[g].add_term(mono.clone(), c);
                    }
                    _ => {
                        return Err(Error::Hypothesis(format!(
                            "surviving family is not linear: {} = {}",
                            ans.names[*v as usize],
                            value.display(&ans.names)
                        )))
                    }
                }
            }
        }
        images.push(img);
    }
    for (u, dir) in &directions {
        for (g, p) in dir.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let name = space.generator(g).name();
            if !kinds[g].is_z_type() {
                return Err(Error::Hypothesis(format!("free unknown {} moves the image of {name}", ans.names[*u as usize])));
            }
            let exact = match cocycle_to_coboundary(m, p) {
                Ok(_) => true,
                Err(Error::Inadmissible(_)) => alg.coboundary_preimage(p)?.is_some(),
                Err(e) => return Err(e),
            };
            if !exact {
                return Err(Error::Hypothesis(format!("free unknown {} adds a non-exact term to f({name})", ans.names[*u as usize])));
            }
        }
    }
    if let Some(bad) = is_chain_map(alg, &images) {
        return Err(Error::Verification(format!("normal form does not commute with d on {bad}")));
    }
    let kind = normal_kind(m, &images)?;
    Ok((EndoClass::new(kind), directions.len()))
}

fn normal_kind<M: SullivanModel + ?Sized>(m: &M, images: &[Polynomial]) -> Result<Kind> {
    if images.iter().all(|p| p.is_zero()) {
        return Ok(Kind::Zero);
    }
    let space = m.algebra().space();
    let ix = m.index();
    let gen = |i: usize| Polynomial::generator(space, i);
    let outside = || Error::Hypothesis("surviving map is not of normal form".into());
    if ix.rigid().iter().any(|&g| images[g] != gen(g)) {
        return Err(outside());
    }
    let mut sigma = Vec::with_capacity(ix.xv.len());
    for v in 0..ix.xv.len() {
        let w = (0..ix.xv.len()).find(|&w| images[ix.xv[v]] == gen(ix.xv[w])).ok_or_else(outside)?;
        if images[ix.zv[v]] != gen(ix.zv[w]) {
            return Err(outside());
        }
        sigma.push(w);
    }
    Ok(Kind::from_permutation(Permutation::from_images(sigma).map_err(|_| outside())?))
}

fn summary<M: SullivanModel + ?Sized>(m: &M, e: &EndoClass) -> ClassSummary {
    let labels = labels(m);
    let sigma = e.kind.permutation(labels.len()).filter(|_| !labels.is_empty()).map(|p| {
        (0..labels.len()).map(|v| (labels[v].clone(), labels[p.apply(v)].clone())).collect()
    });
    ClassSummary {
        name: e.name(&labels),
        kind: match e.kind {
            Kind::Zero => "zero",
            Kind::Identity => "identity",
            Kind::GraphAut(_) => "graph_aut",
        },
        sigma,
        degree: degree_of(e).to_string(),
    }
}

/// Finds `f` among `classes` by comparing maps up to exact `z`-type terms.
fn locate<M: SullivanModel + ?Sized>(m: &M, normal: &[Vec<Polynomial>], f: &[Polynomial]) -> Result<usize> {
    let alg = m.algebra();
    let kinds = kinds(m);
    for (i, n) in normal.iter().enumerate() {
        let mut same = true;
        for (g, (a, b)) in n.iter().zip(f).enumerate() {
            let diff = a - b;
            if diff.is_zero() {
                continue;
            }
            if !(kinds[g].is_z_type() && alg.coboundary_preimage(&diff)?.is_some()) {
                same = false;
                break;
            }
        }
        if same {
            return Ok(i);
        }
    }
    Err(Error::Verification("composite is not one of the listed classes".into()))
}

struct Assembly {
    classes: Vec<EndoClass>,
    derivations: Vec<Derivation>,
    records: Vec<AnsatzRecord>,
    search: SearchStats,
}

fn solve_model<M: SullivanModel + ?Sized>(m: &M, invertible: bool) -> Result<Assembly> {
    let ans = build_ansatz(m)?;
    let prob = problem(m, &ans, invertible);
    let (sols, search) = solve(&prob)?;
    let labels = labels(m);
    let mut classes: Vec<EndoClass> = Vec::new();
    let mut derivations = Vec::new();
    for sol in &sols {
        let (class, dirs) = classify_solution(m, &ans, sol)?;
        if classes.contains(&class) {
            continue;
        }
        derivations.push(Derivation { class: class.name(&labels), exact_directions: dirs, steps: sol.log.clone() });
        classes.push(class);
    }
    Ok(Assembly { classes, derivations, records: ans.records, search })
}

fn assemble<M: SullivanModel + ?Sized>(m: &M, model: String, mut asm: Assembly, stages: Vec<String>) -> Result<MonoidReport> {
    let labels = labels(m);
    let key = |e: &EndoClass| match &e.kind {
        Kind::Zero => (0, Vec::new()),
        Kind::Identity => (1, Vec::new()),
        Kind::GraphAut(p) => (2, p.images().to_vec()),
    };
    asm.classes.sort_by_key(key);
    let normal: Vec<Vec<Polynomial>> = asm.classes.iter().map(|c| normal_images(m, &c.kind)).collect::<Result<_>>()?;
    let n = asm.classes.len();
    let mut composition = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let k = locate(m, &normal, &compose(&normal[i], &normal[j]))?;
            if asm.classes[k].kind != asm.classes[i].kind.compose(&asm.classes[j].kind) {
                return Err(Error::Verification("composition of maps disagrees with the composition of kinds".into()));
            }
            composition[i][j] = k;
        }
    }
    let degrees = asm.classes.iter().map(|c| (c.name(&labels), degree_of(c).to_string())).collect();
    let mut report = MonoidReport {
        model,
        elements: asm.classes.iter().map(|c| summary(m, c)).collect(),
        composition,
        invertible_count: asm.classes.iter().filter(|c| c.kind != Kind::Zero).count(),
        aut_iso: None,
        degrees,
        degree_justification: DEGREE_JUSTIFICATION.into(),
        assumptions: Vec::new(),
        stages,
        ansatz: asm.records,
        derivations: asm.derivations,
        search: asm.search,
        laws_hold: false,
        classes: asm.classes,
    };
    report.laws_hold = report.check_laws();
    Ok(report)
}

/// All homotopy classes of self-maps of `M_k`.
pub fn solve_rigid(m: &ModelMk) -> Result<MonoidReport> {
    let asm = solve_model(m, false)?;
    if asm.classes.iter().any(|c| matches!(c.kind, Kind::GraphAut(_))) {
        return Err(Error::Verification("graph automorphism class on the rigid family".into()));
    }
    let stages = vec![
        "ansatz: every basis monomial in the degree of each generator has an allowed shape".to_string(),
        format!("chain-map system solved over all endomorphisms: {} branch(es) survive", asm.classes.len()),
    ];
    assemble(m, format!("M_{}", m.k), asm, stages)
}

/// Homotopy classes of self-equivalences of `M_n(G)`, together with the zero class.
pub fn solve_graph(m: &ModelMnG) -> Result<MonoidReport> {
    let rigid = solve_rigid(&build_mk(6 * m.n + 4)?)?;
    let rigid_kinds: Vec<&Kind> = rigid.classes.iter().map(|c| &c.kind).collect();
    if rigid_kinds != [&Kind::Zero, &Kind::Identity] {
        return Err(Error::Verification("rigid part does not have exactly the zero and identity classes".into()));
    }
    let mut asm = solve_model(m, true)?;
    for c in &asm.classes {
        if let Kind::GraphAut(p) = &c.kind {
            if !m.graph.is_automorphism(p) {
                return Err(Error::Verification(format!("pattern {} is not a graph automorphism", p.cycle_string(m.graph.labels()))));
            }
        }
    }
    let found = asm.classes.len();
    asm.classes.insert(0, EndoClass::zero());
    let stages = vec![
        format!("rigid part M_{} has exactly the classes zero and identity", 6 * m.n + 4),
        "ansatz: every basis monomial in the degree of each generator has an allowed shape".to_string(),
        format!("chain-map system solved over maps with invertible linear part: {found} class(es)"),
    ];
    let mut report = assemble(m, format!("M_{}(G), |V| = {}", m.n, m.graph.len()), asm, stages)?;
    report.assumptions.push(SINGLE_CLASS_NOTE.into());
    report.aut_iso = Some(aut_isomorphism(m, &report)?);
    Ok(report)
}

fn aut_isomorphism(m: &ModelMnG, report: &MonoidReport) -> Result<AutIso> {
    let aut = automorphisms(&m.graph)?;
    let inv = report.invertible_indices();
    let pos: BTreeMap<usize, usize> = inv.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let table: Vec<Vec<usize>> =
        inv.iter().map(|&i| inv.iter().map(|&j| pos.get(&report.composition[i][j]).copied()).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Verification("invertible classes are not closed under composition".into()))?;
    let group = FiniteGroup::from_table(table)?;
    let mut phi = Vec::with_capacity(inv.len());
    let mut pairs = Vec::new();
    for (k, &i) in inv.iter().enumerate() {
        let p = report.classes[i].kind.permutation(m.graph.len()).expect("invertible");
        let a = aut.index_of(&p).ok_or_else(|| Error::Verification("class outside Aut(G)".into()))?;
        phi.push(a);
        pairs.push(AutPair { element: i, automorphism: a, sigma: p.cycle_string(m.graph.labels()) });
        let _ = k;
    }
    let verified = inv.len() == aut.order() && group.is_isomorphism(&aut.group, &phi);
    if !verified {
        return Err(Error::Verification("invertible classes are not isomorphic to Aut(G)".into()));
    }
    Ok(AutIso { group_order: aut.order(), pairs, verified })
}

/// The scalar system relating `a1, a2, b1, b2, b3, c` for `M_k`, written
/// directly from the exponents.
pub fn rigid_scalar_problem(k: i64) -> Result<Problem> {
    DegreeScheme::mk(k)?;
    let names: Vec<String> = ["a1", "a2", "b1", "b2", "b3", "c"].iter().map(|s| s.to_string()).collect();
    let v = |i: Var| ScalarPoly::var(i);
    let mono = |f: &[(Var, u32)]| f.iter().fold(ScalarPoly::one(), |acc, &(x, e)| Coefficient::mul(&acc, &v(x).pow(e)));
    let e = |p: ScalarPoly, q: ScalarPoly, origin: &str| {
        let mut p = p;
        p.add_assign(&q.neg());
        Equation { poly: p, origin: origin.into() }
    };
    let k = k as u32;
    let equations = vec![
        e(v(2), mono(&[(0, 3), (1, 1)]), "y1"),
        e(v(3), mono(&[(0, 2), (1, 2)]), "y2"),
        e(v(4), mono(&[(0, 1), (1, 3)]), "y3"),
        e(v(5), mono(&[(0, 3 * k - 10), (3, 1), (4, 1)]), "x1^{3k-10} y2 y3"),
        e(v(5), mono(&[(0, 3 * k - 11), (1, 1), (2, 1), (4, 1)]), "x1^{3k-11} x2 y1 y3"),
        e(v(5), mono(&[(0, 3 * k - 12), (1, 2), (2, 1), (3, 1)]), "x1^{3k-12} x2^2 y1 y2"),
        e(v(5), mono(&[(0, 3 * k - 1)]), "x1^{3k-1}"),
        e(v(5), mono(&[(1, (5 * k - 2) / 2)]), "x2^{(5k-2)/2}"),
    ];
    Ok(Problem { names, equations, blocks: Vec::new(), priority: vec![0] })
}

/// Rational solutions `(a1, a2, b1, b2, b3, c)` of the scalar system.
pub fn solve_rigid_scalars(k: i64) -> Result<Vec<[Q; 6]>> {
    let (sols, _) = solve(&rigid_scalar_problem(k)?)?;
    sols.iter()
        .map(|s| {
            let vals: Vec<Q> = (0..6)
                .map(|i| s.value(i).as_constant().ok_or_else(|| Error::Hypothesis("scalar system left a free unknown".into())))
                .collect::<Result<_>>()?;
            Ok(vals.try_into().expect("six values"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::builtin;
    use crate::models::build_mng;
    use crate::qi;

    #[test]
    fn rigid_six() {
        let r = solve_rigid(&build_mk(6).unwrap()).unwrap();
        let kinds: Vec<&str> = r.elements.iter().map(|e| e.kind).collect();
        assert_eq!(kinds, ["zero", "identity"]);
        assert_eq!(r.composition, vec![vec![0, 0], vec![0, 1]]);
        assert!(r.laws_hold);
    }

    #[test]
    fn scalar_system_small_k() {
        let sols = solve_rigid_scalars(6).unwrap();
        let one = [qi(1), qi(1), qi(1), qi(1), qi(1), qi(1)];
        let zero = [qi(0), qi(0), qi(0), qi(0), qi(0), qi(0)];
        assert_eq!(sols, vec![one, zero]);
    }

    #[test]
    fn path_graph() {
        let m = build_mng(1, &builtin::path(3)).unwrap();
        let r = solve_graph(&m).unwrap();
        assert_eq!(r.invertible_count, 2);
        assert!(r.aut_iso.as_ref().unwrap().verified);
        assert!(r.laws_hold);
    }
}
