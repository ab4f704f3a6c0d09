use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::scalar::{ScalarPoly, Var};
use super::system::{Equation, Problem};
use crate::arithmetic::has_bounded_solution;
use crate::cdga::{Coefficient, GradedPoly, Monomial, Polynomial};
use crate::models::SullivanModel;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum GenKind {
    X1,
    X2,
    Y(usize),
    Z,
    Xv(usize),
    Zv(usize),
}

impl GenKind {
    pub(crate) fn is_z_type(self) -> bool {
        matches!(self, GenKind::Z | GenKind::Zv(_))
    }
}

pub(crate) fn kinds<M: SullivanModel + ?Sized>(m: &M) -> Vec<GenKind> {
    let ix = m.index();
    let n = m.algebra().space().len();
    (0..n)
        .map(|i| {
            if i == ix.x1 {
                GenKind::X1
            } else if i == ix.x2 {
                GenKind::X2
            } else if i == ix.z {
                GenKind::Z
            } else if let Some(j) = ix.y.iter().position(|&y| y == i) {
                GenKind::Y(j)
            } else if let Some(v) = ix.xv.iter().position(|&x| x == i) {
                GenKind::Xv(v)
            } else {
                GenKind::Zv(ix.zv.iter().position(|&z| z == i).expect("every generator is classified"))
            }
        })
        .collect()
}

/// Shape counts of the general image of one generator.
#[derive(Clone, Debug, Serialize)]
pub struct AnsatzRecord {
    pub generator: String,
    pub degree: u32,
    pub unknowns: usize,
    /// Number of basis monomials of each shape, including the shapes the
    /// classification allows but that turn out empty in this degree.
    pub shapes: BTreeMap<String, usize>,
}

/// The most general degree-preserving map, one unknown per basis monomial.
#[derive(Clone, Debug)]
pub struct Ansatz {
    pub names: Vec<String>,
    pub slots: Vec<Vec<(Monomial, Var)>>,
    pub images: Vec<GradedPoly<ScalarPoly>>,
    pub records: Vec<AnsatzRecord>,
}

const GENERATOR: &str = "generator";
const X2_POWER: &str = "x2 power";
const X1_POWER: &str = "x1 power";
const MIXED: &str = "x1^a x2^b, a,b > 0";
const Y_PURE: &str = "y_i·Q[x1,x2]";
const Y_XV: &str = "x_v·y_i·Q[x1,x2]";
const Y_XVXW: &str = "x_v x_w·y_i·Q[x1,x2]";
const YY: &str = "y_i y_j·Q[x1,x2]";
const YYY: &str = "y1 y2 y3·Q[x1,x2]";
const YYY_XV: &str = "x_v^e·y1 y2 y3·Q[x1,x2], e > 0";

fn shape<M: SullivanModel + ?Sized>(m: &M, kinds: &[GenKind], mono: &Monomial) -> String {
    let space = m.algebra().space();
    if mono.word_length() == 1 {
        return GENERATOR.into();
    }
    let mut ys = 0;
    let mut other_odd = false;
    let mut xv = 0;
    let (mut a, mut b) = (0, 0);
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        match kinds[i] {
            GenKind::X1 => a = e,
            GenKind::X2 => b = e,
            GenKind::Y(_) => ys += 1,
            GenKind::Xv(_) => xv += e,
            GenKind::Z | GenKind::Zv(_) => other_odd = true,
        }
    }
    let label = match (other_odd, ys, xv) {
        (false, 0, 0) if a == 0 => X2_POWER,
        (false, 0, 0) if b == 0 => X1_POWER,
        (false, 0, 0) => MIXED,
        (false, 1, 0) => Y_PURE,
        (false, 1, 1) => Y_XV,
        (false, 1, 2) => Y_XVXW,
        (false, 2, 0) => YY,
        (false, 3, 0) => YYY,
        (false, 3, _) => YYY_XV,
        _ => return format!("other: {}", space.monomial_to_string(mono)),
    };
    label.into()
}

fn allowed(kind: GenKind, graph: bool) -> &'static [&'static str] {
    match kind {
        GenKind::X1 | GenKind::X2 | GenKind::Y(_) => &[GENERATOR],
        GenKind::Xv(_) => &[GENERATOR, X2_POWER, YY],
        GenKind::Z | GenKind::Zv(_) if graph => &[GENERATOR, Y_PURE, Y_XV, Y_XVXW],
        GenKind::Z | GenKind::Zv(_) => &[GENERATOR, Y_PURE, YYY],
    }
}

fn unknown_name<M: SullivanModel + ?Sized>(m: &M, kinds: &[GenKind], g: usize, mono: &Monomial) -> String {
    let space = m.algebra().space();
    let label = |v: usize| m.graph().map_or(String::new(), |gr| gr.label(v).to_string());
    if mono.word_length() == 1 {
        let h = mono.exponents().iter().position(|&e| e > 0).expect("word length one");
        let name = match (kinds[g], kinds[h]) {
            (GenKind::X1, GenKind::X1) => Some("a1".to_string()),
            (GenKind::X2, GenKind::X2) => Some("a2".to_string()),
            (GenKind::Y(i), GenKind::Y(j)) if i == j => Some(format!("b{}", i + 1)),
            (GenKind::Z, GenKind::Z) => Some("c".to_string()),
            (GenKind::Z, GenKind::Zv(w)) => Some(format!("c({})", label(w))),
            (GenKind::Xv(v), GenKind::Xv(w)) => Some(format!("a({},{})", label(v), label(w))),
            (GenKind::Zv(v), GenKind::Z) => Some(format!("e({})", label(v))),
            (GenKind::Zv(v), GenKind::Zv(w)) => Some(format!("c({},{})", label(v), label(w))),
            _ => None,
        };
        if let Some(name) = name {
            return name;
        }
    }
    if let (GenKind::Xv(v), true) = (kinds[g], shape(m, kinds, mono) == X2_POWER) {
        return format!("a2({})", label(v));
    }
    format!("<{}:{}>", space.generator(g).name(), space.monomial_to_string(mono))
}

/// Builds the general ansatz and checks every basis monomial against the
/// shapes the classification allows.
pub fn build_ansatz<M: SullivanModel + ?Sized>(m: &M) -> Result<Ansatz> {
    let alg = m.algebra();
    let space = alg.space();
    let kinds = kinds(m);
    let graph = m.graph().is_some();
    let mut names = Vec::new();
    let mut slots = Vec::new();
    let mut images = Vec::new();
    let mut records = Vec::new();
    for g in 0..space.len() {
        let degree = space.degree(g);
        let basis = alg.basis_of_degree(degree);
        let ok = allowed(kinds[g], graph);
        let mut shapes: BTreeMap<String, usize> = ok.iter().map(|s| (s.to_string(), 0)).collect();
        let mut slot = Vec::new();
        for mono in basis {
            let sh = shape(m, &kinds, &mono);
            if !ok.contains(&sh.as_str()) {
                return Err(Error::Hypothesis(format!(
                    "degree {degree} of {} contains {} ({sh})",
                    space.generator(g).name(),
                    space.monomial_to_string(&mono)
                )));
            }
            if matches!(kinds[g], GenKind::X1 | GenKind::X2 | GenKind::Y(_)) && mono.exponent(g) != 1 {
                return Err(Error::Hypothesis(format!(
                    "degree {degree} of {} contains the generator {}",
                    space.generator(g).name(),
                    space.monomial_to_string(&mono)
                )));
            }
            *shapes.entry(sh).or_default() += 1;
            let v = names.len() as Var;
            names.push(unknown_name(m, &kinds, g, &mono));
            slot.push((mono, v));
        }
        if let GenKind::Xv(_) = kinds[g] {
            cross_check_vertex_degree(m, &shapes)?;
        }
        let image = GradedPoly::from_terms(space, slot.iter().map(|(mono, v)| (mono.clone(), ScalarPoly::var(*v))));
        records.push(AnsatzRecord { generator: space.generator(g).name().to_string(), degree, unknowns: slot.len(), shapes });
        slots.push(slot);
        images.push(image);
    }
    Ok(Ansatz { names, slots, images, records })
}

/// The enumeration found no pure `x1` power and no mixed `x1^a x2^b` in
/// degree `|x_v|`; the integer lemmas must say the same.
fn cross_check_vertex_degree<M: SullivanModel + ?Sized>(m: &M, shapes: &BTreeMap<String, usize>) -> Result<()> {
    let s = m.scheme();
    let xv = s.xv.expect("graph family");
    let mixed = has_bounded_solution(s.x1, s.x2, xv, 1)?.is_some();
    let pure = xv % s.x1 == 0;
    let found_mixed = shapes.get(MIXED).copied().unwrap_or(0) > 0;
    let found_pure = shapes.get(X1_POWER).copied().unwrap_or(0) > 0;
    if mixed != found_mixed || pure != found_pure {
        return Err(Error::Verification("basis enumeration and the diophantine lemma disagree in degree |x_v|".into()));
    }
    Ok(())
}

/// Applies the algebra map with generator images `images` to `p`.
pub fn apply_morphism<C: Coefficient>(images: &[GradedPoly<C>], p: &Polynomial) -> GradedPoly<C> {
    let space = p.space();
    let mut powers: HashMap<(usize, u32), GradedPoly<C>> = HashMap::new();
    let mut out = GradedPoly::zero(space);
    for (mono, c) in p.terms() {
        let mut t = GradedPoly::constant(space, C::from_rational(c));
        for (i, &e) in mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
            t = &t * pw;
            if t.is_zero() {
                break;
            }
        }
        for (m, c) in t.terms() {
            out.add_term(m.clone(), c);
        }
    }
    out
}

/// Composition `f ∘ g` of two maps given by generator images.
pub fn compose(f: &[Polynomial], g: &[Polynomial]) -> Vec<Polynomial> {
    g.iter().map(|p| apply_morphism(f, p)).collect()
}

/// Equations `f(dg) − d f(g) = 0`, coefficient by coefficient, generators in order.
pub fn chain_map_equations<M: SullivanModel + ?Sized>(m: &M, ansatz: &Ansatz) -> Vec<Equation> {
    let alg = m.algebra();
    let space = alg.space();
    let mut out = Vec::new();
    for g in 0..space.len() {
        let lhs = apply_morphism(&ansatz.images, alg.d_generator(g));
        let rhs = alg.apply(&ansatz.images[g]);
        let diff = &lhs - &rhs;
        let name = space.generator(g).name();
        for (mono, coef) in diff.terms() {
            out.push(Equation {
                poly: coef.clone(),
                origin: format!("{} in f(d{name}) - d f({name})", space.monomial_to_string(mono)),
            });
        }
    }
    out
}

/// Square blocks of generator-to-generator coefficients, one per degree.
pub fn linear_blocks<M: SullivanModel + ?Sized>(m: &M, ansatz: &Ansatz) -> Vec<Vec<Vec<Var>>> {
    let space = m.algebra().space();
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for g in 0..space.len() {
        by_degree.entry(space.degree(g)).or_default().push(g);
    }
    by_degree
        .values()
        .map(|gens| {
            gens.iter()
                .map(|&g| {
                    gens.iter()
                        .map(|&h| {
                            let target = Monomial::generator(space.len(), h);
                            ansatz.slots[g].iter().find(|(mono, _)| *mono == target).expect("generator in its own degree").1
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

/// The ansatz as a solver problem; `invertible` adds the linear-part blocks.
pub fn problem<M: SullivanModel + ?Sized>(m: &M, ansatz: &Ansatz, invertible: bool) -> Problem {
    let blocks = if invertible { linear_blocks(m, ansatz) } else { Vec::new() };
    // vertex coefficients first, row by row in graph order, so patterns come
    // out in lexicographic order
    let ix = m.index();
    let n = m.algebra().space().len();
    let mut priority = Vec::new();
    for &g in &ix.xv {
        for &h in &ix.xv {
            let target = Monomial::generator(n, h);
            priority.extend(ansatz.slots[g].iter().filter(|(mono, _)| *mono == target).map(|(_, v)| *v));
        }
    }
    Problem { names: ansatz.names.clone(), equations: chain_map_equations(m, ansatz), blocks, priority }
}
