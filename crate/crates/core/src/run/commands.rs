use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use super::config::{Check, RunConfig, DESK_MAX_REALIZE_VERTICES};
use super::props::{algebra_laws, coboundary_round_trips};
use super::{Report, RunError, Section};
use crate::arithmetic::{isolation_holds, sweep_mk, sweep_mng, DegreeScheme, SweepReport};
use crate::endo::{solve_graph, solve_rigid, tilde_degree, MonoidReport};
use crate::graphs::{automorphisms, builtin, realize_group, FiniteGroup, GroupSpec, SimpleGraph};
use crate::models::{
    build_mk, build_mng, chirality_dimension_closed_form, ellipticity_certificates, formal_dimension_closed_form,
    monomial_cocycle, tilde, Model, SullivanModel,
};

/// A builtin graph name or a path to a graph JSON file.
pub fn resolve_graph(spec: &str) -> Result<SimpleGraph, RunError> {
    if let Some(g) = builtin::by_name(spec) {
        return Ok(g);
    }
    let text = std::fs::read_to_string(spec).map_err(|e| RunError::Io(format!("graph {spec}: {e}")))?;
    SimpleGraph::from_json_str(&text).map_err(|e| RunError::Io(format!("graph {spec}: {e}")))
}

pub fn load_model(path: &Path) -> Result<Model, RunError> {
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))?;
    Model::from_json_str(&text).map_err(|e| RunError::Io(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report detail serializes")
}

#[derive(Clone, Debug)]
pub enum BuildTarget {
    Mk { k: i64 },
    Mng { n: i64, graph: SimpleGraph },
}

pub fn cmd_build(target: &BuildTarget) -> Result<Model, RunError> {
    Ok(match target {
        BuildTarget::Mk { k } => Model::Mk(build_mk(*k)?),
        BuildTarget::Mng { n, graph } => Model::Mng(build_mng(*n, graph)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyzeCheck {
    DSquared,
    Minimal,
    Dimension,
    Isolation,
    Connectivity,
    Elliptic,
}

impl AnalyzeCheck {
    pub fn parse_list(s: &str) -> Result<Vec<AnalyzeCheck>, RunError> {
        s.split(',')
            .map(|t| match t.trim() {
                "d2" => Ok(AnalyzeCheck::DSquared),
                "minimal" => Ok(AnalyzeCheck::Minimal),
                "dim" => Ok(AnalyzeCheck::Dimension),
                "isolation" => Ok(AnalyzeCheck::Isolation),
                "connectivity" => Ok(AnalyzeCheck::Connectivity),
                "elliptic" => Ok(AnalyzeCheck::Elliptic),
                other => Err(RunError::Config(format!("unknown check {other:?}"))),
            })
            .collect()
    }
}

fn model_name(m: &Model) -> String {
    match m {
        Model::Mk(m) => format!("M_{}", m.k),
        Model::Mng(m) => format!("M_{}(G), |V| = {}", m.n, m.graph.len()),
    }
}

fn dimension_section(m: &Model) -> Section {
    let fd = m.algebra().formal_dimension();
    let (expected, formula) = match m {
        Model::Mk(m) => (15 * m.k * m.k + 44 * m.k - 20, "15k^2 + 44k - 20"),
        Model::Mng(m) => (formal_dimension_closed_form(m.n, m.graph.len() as i64), "closed form in n and |V|"),
    };
    Section::new(
        "dimension",
        fd == expected,
        format!("formal dimension {fd}, {formula} gives {expected}"),
        json!({ "formal_dimension": fd, "closed_form": expected }),
    )
}

pub fn cmd_analyze(model: &Model, checks: &[AnalyzeCheck]) -> Result<Report, RunError> {
    let alg = model.algebra();
    let name = model_name(model);
    let mut sections = Vec::new();
    for c in checks {
        sections.push(match c {
            AnalyzeCheck::DSquared => {
                let ok = alg.check_d_squared();
                Section::new("d_squared", ok, format!("d∘d on every generator of {name}"), Value::Null)
            }
            AnalyzeCheck::Minimal => Section::new("minimal", alg.is_minimal(), "no linear part in d", Value::Null),
            AnalyzeCheck::Dimension => dimension_section(model),
            AnalyzeCheck::Isolation => {
                let s = model.scheme();
                Section::new("isolation", isolation_holds(s), "degree chain of the rigid generators", to_value(s))
            }
            AnalyzeCheck::Connectivity => {
                let s = model.scheme();
                let conn = alg.connectivity() as i64;
                Section::new(
                    "connectivity",
                    conn == s.x1 - 1,
                    format!("{conn}-connected"),
                    json!({ "connectivity": conn }),
                )
            }
            AnalyzeCheck::Elliptic => match model {
                Model::Mng(m) => match ellipticity_certificates(m) {
                    Ok(cert) => Section::new("elliptic", cert.passed, "pure-model certificates", to_value(&cert)),
                    Err(e) => Section::failed("elliptic", &e),
                },
                Model::Mk(_) => {
                    return Err(RunError::Config("ellipticity certificates are defined for the graph family".into()))
                }
            },
        });
    }
    Ok(Report::new(format!("analyze {name}"), sections))
}

fn sweep_section(name: &str, sweep: &SweepReport) -> Section {
    let failures: Vec<Value> = sweep
        .reports
        .iter()
        .flat_map(|r| r.checks.iter().filter(|c| !c.verdict).map(move |c| json!({ "parameter": r.parameter, "check": c.name, "value": c.value })))
        .collect();
    let checks: usize = sweep.reports.iter().map(|r| r.checks.len()).sum();
    Section::new(
        name,
        sweep.passed,
        format!("{checks} checks over {} parameter values, {} failing", sweep.reports.len(), failures.len()),
        json!({ "family": sweep.family, "parameters": sweep.reports.len(), "checks": checks, "failures": failures }),
    )
}

fn gcd_identity_section(n_max: i64) -> Result<Section, RunError> {
    let mut bad = Vec::new();
    for n in 1..=n_max {
        let s = DegreeScheme::mng(n)?;
        if -6 * s.x1 + 5 * s.x2 != 2 {
            bad.push(n);
        }
    }
    Ok(Section::new(
        "gcd_identity",
        bad.is_empty(),
        format!("-6|x1| + 5|x2| = 2 for n in [1, {n_max}]"),
        json!({ "failures": bad }),
    ))
}

/// Divisibility tables and the diophantine lemma.
pub fn cmd_verify_arith(family: &str, max: i64) -> Result<Report, RunError> {
    let sections = match family {
        "mk" => {
            if max < 6 {
                return Err(RunError::Config(format!("k-max = {max} leaves no admissible k")));
            }
            vec![sweep_section("table1", &sweep_mk(max)?)]
        }
        "mng" => {
            if max < 1 {
                return Err(RunError::Config(format!("n-max = {max} must be at least 1")));
            }
            vec![sweep_section("table2_dioph", &sweep_mng(max)?), gcd_identity_section(max)?]
        }
        other => return Err(RunError::Config(format!("unknown family {other:?}"))),
    };
    Ok(Report::new(format!("verify-arith {family}"), sections))
}

pub fn cmd_aut(graph: &SimpleGraph) -> Result<Report, RunError> {
    let aut = automorphisms(graph)?;
    let elements: Vec<String> = aut.elements.iter().map(|p| p.cycle_string(graph.labels())).collect();
    let preserves = aut.elements.iter().all(|p| graph.is_automorphism(p));
    let section = Section::new(
        "automorphisms",
        preserves,
        format!("|Aut(G)| = {}", aut.order()),
        json!({ "order": aut.order(), "elements": elements, "table": aut.group.table() }),
    );
    Ok(Report::new("aut", vec![section]))
}

fn monoid_section(name: &str, r: &MonoidReport, expected_invertibles: Option<usize>) -> Section {
    let count_ok = expected_invertibles.is_none_or(|e| e == r.invertible_count);
    let iso_ok = r.aut_iso.as_ref().is_none_or(|a| a.verified);
    let summary = match expected_invertibles {
        Some(e) => format!("{}: {} invertible classes, |Aut(G)| = {e}", r.model, r.invertible_count),
        None => format!(
            "{}: {} classes ({})",
            r.model,
            r.elements.len(),
            r.elements.iter().map(|e| e.name.as_str()).collect::<Vec<_>>().join(", ")
        ),
    };
    Section::new(name, r.laws_hold && count_ok && iso_ok, summary, to_value(r))
}

pub fn cmd_endos(model: &Model) -> Result<(Report, MonoidReport), RunError> {
    let (section, r) = match model {
        Model::Mk(m) => {
            let r = solve_rigid(m)?;
            let kinds: Vec<&str> = r.elements.iter().map(|e| e.kind).collect();
            let mut s = monoid_section("endos", &r, None);
            s.passed &= kinds == ["zero", "identity"];
            (s, r)
        }
        Model::Mng(m) => {
            let r = solve_graph(m)?;
            let order = automorphisms(&m.graph)?.order();
            (monoid_section("endos", &r, Some(order)), r)
        }
    };
    Ok((Report::new(format!("endos {}", model_name(model)), vec![section]), r))
}

#[derive(Clone, Debug, Serialize)]
struct RealizeDetail {
    group_order: usize,
    graph_source: &'static str,
    vertices: usize,
    edges: usize,
    /// `phi[i]` is the index in `monoid.elements` of the class realizing group element `i`.
    phi: Vec<usize>,
    verified: bool,
    monoid: MonoidReport,
}

/// Graph with the prescribed automorphism group, its model, the self-map
/// monoid, and an explicit isomorphism from the group onto the invertibles.
pub fn cmd_realize(spec: &GroupSpec, n: i64) -> Result<Report, RunError> {
    let (group, _) = spec.resolve()?;
    let real = realize_group(spec)?;
    if real.graph.len() > DESK_MAX_REALIZE_VERTICES {
        return Err(RunError::Config(format!(
            "realizing graph has {} vertices, above the desk limit {DESK_MAX_REALIZE_VERTICES}",
            real.graph.len()
        )));
    }
    let m = build_mng(n, &real.graph)?;
    let monoid = solve_graph(&m)?;
    let iso = monoid.aut_iso.as_ref().ok_or_else(|| RunError::Math("missing automorphism witness".into()))?;
    let by_aut: BTreeMap<usize, usize> = iso.pairs.iter().map(|p| (p.automorphism, p.element)).collect();
    let phi: Vec<usize> = real.isomorphism.iter().map(|a| by_aut.get(a).copied()).collect::<Option<_>>().ok_or_else(|| {
        RunError::Math("a group element has no matching self-equivalence".into())
    })?;
    let homomorphism = (0..group.order())
        .all(|a| (0..group.order()).all(|b| phi[group.mul(a, b)] == monoid.composition[phi[a]][phi[b]]));
    let mut seen = phi.clone();
    seen.sort_unstable();
    seen.dedup();
    let verified = homomorphism && seen.len() == group.order() && monoid.invertible_count == group.order();
    let detail = RealizeDetail {
        group_order: group.order(),
        graph_source: real.source,
        vertices: real.graph.len(),
        edges: real.graph.edge_count(),
        phi,
        verified,
        monoid,
    };
    let section = Section::new(
        "realize",
        verified && detail.monoid.laws_hold,
        format!(
            "group of order {} realized on {} vertices ({}), invertible classes {}",
            detail.group_order, detail.vertices, detail.graph_source, detail.monoid.invertible_count
        ),
        to_value(&detail),
    );
    Ok(Report::new(format!("realize n={n}"), vec![section]))
}

fn guarded(name: &str, f: impl FnOnce() -> Result<Section, RunError>) -> Result<Section, RunError> {
    match f() {
        Ok(s) => Ok(s),
        Err(RunError::Math(msg)) => Ok(Section::failed(name, &msg)),
        Err(e) => Err(e),
    }
}

fn all_pass(name: &str, parts: Vec<(String, bool, Value)>) -> Section {
    let failing: Vec<&str> = parts.iter().filter(|p| !p.1).map(|p| p.0.as_str()).collect();
    let summary = if failing.is_empty() {
        format!("{} case(s) pass", parts.len())
    } else {
        format!("failing: {}", failing.join(", "))
    };
    let detail = parts.iter().map(|(k, ok, v)| json!({ "case": k, "passed": ok, "detail": v })).collect();
    Section::new(name, failing.is_empty(), summary, Value::Array(detail))
}

/// Every configured check, one section each.
pub fn cmd_verify_all(cfg: &RunConfig) -> Result<Report, RunError> {
    cfg.validate()?;
    let load = |names: &[String]| -> Result<Vec<(String, SimpleGraph)>, RunError> {
        names
            .iter()
            .map(|n| {
                let g = resolve_graph(n)?;
                cfg.check_graph_size(n, g.len())?;
                Ok((n.clone(), g))
            })
            .collect()
    };
    let graphs = load(&cfg.graphs)?;
    let endo_graphs = load(&cfg.endo_graphs)?;
    let elliptic_graphs = load(&cfg.elliptic_graphs)?;
    let models: Vec<(String, Model)> =
        cfg.models.iter().map(|p| Ok((p.display().to_string(), load_model(p)?))).collect::<Result<_, RunError>>()?;
    let groups: Vec<(String, GroupSpec)> = cfg
        .realize
        .iter()
        .map(|n| Ok((n.clone(), FiniteGroup::preset(n).map_err(|e| RunError::Config(e.to_string()))?.spec(None))))
        .collect::<Result<_, RunError>>()?;

    let mut sections = Vec::new();
    if cfg.enabled(Check::DSquared) {
        sections.push(guarded("d_squared", || {
            let mut parts = Vec::new();
            for &k in &cfg.mk_values {
                parts.push((format!("M_{k}"), build_mk(k)?.algebra.check_d_squared(), Value::Null));
            }
            for &n in &cfg.n_values {
                for (name, g) in &graphs {
                    parts.push((format!("M_{n}({name})"), build_mng(n, g)?.algebra.check_d_squared(), Value::Null));
                }
            }
            Ok(all_pass("d_squared", parts))
        })?);
    }
    if cfg.enabled(Check::Arithmetic) {
        sections.push(guarded("arithmetic", || {
            let mk = sweep_section("table1", &sweep_mk(cfg.k_max)?);
            let mng = sweep_section("table2_dioph", &sweep_mng(cfg.n_max)?);
            let gcd = gcd_identity_section(cfg.n_max)?;
            let parts = [mk, mng, gcd].into_iter().map(|s| (s.summary.clone(), s.passed, s.detail)).collect();
            Ok(all_pass("arithmetic", parts))
        })?);
    }
    if cfg.enabled(Check::Dimension) {
        sections.push(guarded("dimension", || {
            let mut parts = Vec::new();
            let p3 = build_mng(1, &builtin::path(3))?;
            let fd = p3.algebra.formal_dimension();
            parts.push(("M_1(|V| = 3) = 4704".to_string(), fd == 4704, json!(fd)));
            let mut mismatches = Vec::new();
            for n in 1..=cfg.dim_n_max {
                for v in 2..=cfg.dim_v_max {
                    let fd = build_mng(n, &builtin::path(v))?.algebra.formal_dimension();
                    if fd != formal_dimension_closed_form(n, v as i64) {
                        mismatches.push((n, v));
                    }
                }
            }
            parts.push((format!("closed form, n <= {}, |V| <= {}", cfg.dim_n_max, cfg.dim_v_max), mismatches.is_empty(), json!(mismatches)));
            for &k in &cfg.mk_values {
                let s = dimension_section(&Model::Mk(build_mk(k)?));
                parts.push((format!("M_{k}"), s.passed, s.detail));
            }
            Ok(all_pass("dimension", parts))
        })?);
    }
    if cfg.enabled(Check::RigidEndos) {
        sections.push(guarded("rigid_endos", || {
            let mut parts = Vec::new();
            for &k in &cfg.rigid_solve {
                let (report, _) = cmd_endos(&Model::Mk(build_mk(k)?))?;
                let s = &report.sections[0];
                parts.push((s.summary.clone(), s.passed, Value::Null));
            }
            Ok(all_pass("rigid_endos", parts))
        })?);
    }
    if cfg.enabled(Check::GraphEndos) {
        sections.push(guarded("graph_endos", || {
            let mut parts = Vec::new();
            for &n in &cfg.n_values {
                for (_, g) in &endo_graphs {
                    let (report, _) = cmd_endos(&Model::Mng(build_mng(n, g)?))?;
                    let s = &report.sections[0];
                    parts.push((s.summary.clone(), s.passed, Value::Null));
                }
            }
            Ok(all_pass("graph_endos", parts))
        })?);
    }
    if cfg.enabled(Check::Elliptic) {
        sections.push(guarded("elliptic", || {
            let mut parts = Vec::new();
            for &n in &cfg.n_values {
                for (name, g) in &elliptic_graphs {
                    let cert = ellipticity_certificates(&build_mng(n, g)?)?;
                    parts.push((format!("M_{n}({name})"), cert.passed, to_value(&cert)));
                }
            }
            Ok(all_pass("elliptic", parts))
        })?);
    }
    if cfg.enabled(Check::Tilde) {
        sections.push(guarded("tilde", || {
            let mut parts = Vec::new();
            for &n in &cfg.n_values {
                for &v in &cfg.tilde_vertices {
                    parts.push(tilde_case(n, v)?);
                }
            }
            Ok(all_pass("tilde", parts))
        })?);
    }
    if cfg.enabled(Check::Properties) {
        sections.push(guarded("properties", || {
            let mut parts = Vec::new();
            let mut seed = cfg.seed;
            let mut run = |name: String, m: &dyn SullivanModel| -> Result<(), RunError> {
                let laws = algebra_laws(&name, m.algebra(), cfg.property_cases, seed);
                seed = seed.wrapping_add(1);
                parts.push((format!("laws on {name}"), laws.passed, to_value(&laws)));
                let cob = coboundary_round_trips(&name, m)?;
                parts.push((format!("coboundaries on {name}"), cob.passed, to_value(&cob)));
                Ok(())
            };
            for &k in &cfg.mk_values {
                run(format!("M_{k}"), &build_mk(k)?)?;
            }
            for &n in &cfg.n_values {
                for (name, g) in &graphs {
                    run(format!("M_{n}({name})"), &build_mng(n, g)?)?;
                }
            }
            Ok(all_pass("properties", parts))
        })?);
    }
    if cfg.enabled(Check::Realize) {
        sections.push(guarded("realize", || {
            let mut parts = Vec::new();
            for (name, spec) in &groups {
                let s = cmd_realize(spec, 1)?.sections.remove(0);
                parts.push((format!("{name}: {}", s.summary), s.passed, Value::Null));
            }
            Ok(all_pass("realize", parts))
        })?);
    }
    if cfg.enabled(Check::Models) && !models.is_empty() {
        sections.push(guarded("models", || {
            let mut parts = Vec::new();
            for (path, m) in &models {
                let r = cmd_analyze(m, &[AnalyzeCheck::DSquared, AnalyzeCheck::Dimension, AnalyzeCheck::Isolation])?;
                parts.push((path.clone(), r.passed, to_value(&r.sections)));
            }
            Ok(all_pass("models", parts))
        })?);
    }
    Ok(Report::new("verify-all", sections))
}

/// Formal dimension and degree certificate of the odd-dimensional extension
/// of `M_n(P_v)`.
fn tilde_case(n: i64, v: usize) -> Result<(String, bool, Value), RunError> {
    let g = builtin::path(v);
    let m = build_mng(n, &g)?;
    let fd = m.algebra.formal_dimension();
    let x = monomial_cocycle(&m.algebra, fd)?
        .ok_or_else(|| RunError::Math(format!("no monomial cocycle in degree {fd}")))?;
    let t = tilde(&m.algebra, &x, fd)?;
    let dim = t.formal_dimension();
    let closed = chirality_dimension_closed_form(n, v as i64);
    let monoid = solve_graph(&m)?;
    let degrees: Vec<String> = monoid.classes.iter().map(|c| tilde_degree(c).to_string()).collect();
    let degrees_ok = degrees.iter().all(|d| d == "0" || d == "1");
    let ok = dim == closed && dim % 4 != 0 && degrees_ok && t.algebra.check_d_squared();
    let detail = json!({
        "representative": x.to_string(),
        "formal_dimension": dim,
        "closed_form": closed,
        "mod_4": dim.rem_euclid(4),
        "tilde_degrees": degrees,
        "note": "the representative is a cocycle of the right degree; it is not certified to be the fundamental class",
    });
    Ok((format!("M_{n}(P_{v})~: dimension {dim}"), ok, detail))
}
