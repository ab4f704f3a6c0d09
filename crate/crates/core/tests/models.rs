use sullivan::cdga::GeneratorSpace;
use sullivan::graphs::builtin;
use sullivan::models::*;

/// `Σ|odd| - Σ(|even| - 1)`, read straight off the generator list.
fn dimension_from_degrees(space: &GeneratorSpace) -> i64 {
    space
        .generators()
        .iter()
        .map(|g| if g.is_odd() { g.degree() as i64 } else { -(g.degree() as i64 - 1) })
        .sum()
}

#[test]
fn mk_formal_dimension() {
    for k in (6..=60).step_by(2) {
        let m = build_mk(k).unwrap();
        let fd = m.algebra.formal_dimension();
        assert_eq!(fd, 15 * k * k + 44 * k - 20, "k = {k}");
        assert_eq!(fd, dimension_from_degrees(m.algebra.space()));
    }
    assert_eq!(build_mk(6).unwrap().algebra.formal_dimension(), 784);
}

#[test]
fn mng_formal_dimension() {
    let graphs = [builtin::path(2), builtin::path(3), builtin::complete(3), builtin::cycle(4), builtin::asymmetric6()];
    for g in &graphs {
        for n in 1..=4 {
            let m = build_mng(n, g).unwrap();
            let fd = m.algebra.formal_dimension();
            assert_eq!(fd, formal_dimension_closed_form(n, g.len() as i64));
            assert_eq!(fd, dimension_from_degrees(m.algebra.space()));
        }
    }
}

#[test]
fn models_are_minimal_and_closed() {
    for k in [6, 8, 10, 12] {
        let m = build_mk(k).unwrap();
        assert!(m.algebra.check_d_squared());
        assert!(m.algebra.is_minimal());
    }
    for g in [builtin::path(3), builtin::complete(3), builtin::asymmetric6()] {
        let m = build_mng(1, &g).unwrap();
        assert!(m.algebra.check_d_squared());
        assert!(m.algebra.is_minimal());
        assert_eq!(m.algebra.space().len(), 6 + 2 * g.len());
    }
}

#[test]
fn invalid_parameters() {
    assert!(build_mk(4).is_err());
    assert!(build_mk(9).is_err());
    assert!(build_mng(0, &builtin::path(3)).is_err());
}

#[test]
fn edges_enter_the_differential() {
    let p3 = build_mng(1, &builtin::path(3)).unwrap();
    let k3 = build_mng(1, &builtin::complete(3)).unwrap();
    assert_ne!(p3.algebra.to_json_string(), k3.algebra.to_json_string());
}

#[test]
fn model_file_round_trip() {
    let models: Vec<Model> = vec![build_mk(8).unwrap().into(), build_mng(1, &builtin::cycle(4)).unwrap().into()];
    for m in models {
        let s = m.to_json_string();
        let back = Model::from_json_str(&s).unwrap();
        assert_eq!(back.to_json_string(), s);
        assert_eq!(back.family(), m.family());
    }
    let tampered = build_mk(6).unwrap();
    let s = Model::from(tampered).to_json_string().replacen("\"k\": 6", "\"k\": 8", 1);
    assert!(Model::from_json_str(&s).is_err());
}

#[test]
fn elliptic_on_small_graphs() {
    for g in [builtin::path(3), builtin::complete(3)] {
        let m = build_mng(1, &g).unwrap();
        let cert = ellipticity_certificates(&m).unwrap();
        assert!(cert.passed, "{:?}", cert.failure);
        assert!(cert.identities.iter().all(|i| i.holds));
        assert!(cert.nilpotency.iter().all(|n| n.exponent.is_some()));
    }
}

#[test]
fn tilde_dimension() {
    for (g, n) in [(builtin::path(3), 1), (builtin::complete(3), 1), (builtin::path(2), 2)] {
        let m = build_mng(n, &g).unwrap();
        let fd = m.algebra.formal_dimension();
        let x = monomial_cocycle(&m.algebra, fd).unwrap().expect("monomial cocycle in top degree");
        let t = tilde(&m.algebra, &x, fd).unwrap();
        assert!(t.algebra.check_d_squared());
        assert_eq!(t.formal_dimension(), 2 * fd - 1);
        assert_eq!(t.formal_dimension(), chirality_dimension_closed_form(n, g.len() as i64));
    }
    let m = build_mng(1, &builtin::path(3)).unwrap();
    let fd = m.algebra.formal_dimension();
    let x = monomial_cocycle(&m.algebra, fd).unwrap().unwrap();
    assert_eq!(tilde(&m.algebra, &x, fd).unwrap().formal_dimension(), 9407);
    assert!(tilde(&m.algebra, &x, fd + 2).is_err());
    assert!(tilde(&m.algebra, &m.algebra.parse("y1").unwrap().pow(1), fd).is_err());
}

#[test]
fn factorization_on_constructed_coboundaries() {
    for m in [Model::from(build_mk(6).unwrap()), Model::from(build_mng(1, &builtin::path(3)).unwrap())] {
        let r = sullivan::run::props::coboundary_round_trips("m", &m).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.admissible_cocycle_dims.iter().all(|&(_, d)| d == 0));
    }
}
