use std::sync::Arc;

use proptest::prelude::*;
use sullivan::cdga::{Cdga, GeneratorSpace, Monomial, Polynomial};
use sullivan::graphs::builtin;
use sullivan::models::{build_mk, build_mng};
use sullivan::{q, qi};

fn m6() -> Cdga {
    build_mk(6).unwrap().algebra
}

#[test]
fn koszul_signs() {
    let a = m6();
    let p = |s: &str| a.parse(s).unwrap();
    assert_eq!(&p("y1") * &p("y2"), p("y1*y2"));
    assert_eq!(&p("y2") * &p("y1"), p("y1*y2").neg());
    assert_eq!(&p("x1") * &p("x1"), p("x1^2"));
    assert!((&p("y1") * &p("y1")).is_zero());
    assert_eq!(&p("y1*x1") * &p("y2"), p("x1*y1*y2"));
}

#[test]
fn differential_examples() {
    let a = m6();
    let p = |s: &str| a.parse(s).unwrap();
    let dy1 = a.apply_differential(&p("y1")).unwrap();
    assert_eq!(dy1, p("x1^3*x2"));
    assert_eq!(dy1.homogeneous_degree(), Some(118));
    // expanded by hand: d(y1 y2) = d(y1) y2 - y1 d(y2)
    assert_eq!(a.apply_differential(&p("y1*y2")).unwrap(), p("x1^3*x2*y2 - x1^2*x2^2*y1"));
    assert!(a.apply_differential(&p("1")).unwrap().is_zero());
}

#[test]
fn d_squared_examples() {
    assert!(m6().check_d_squared());
    assert!(build_mng(1, &builtin::complete(3)).unwrap().algebra.check_d_squared());
    let space = GeneratorSpace::from_pairs(&[("x1", 28), ("x2", 34), ("y1", 117), ("z", 144)]).unwrap();
    let d = vec![
        ("y1".to_string(), Polynomial::parse(&space, "x1^3*x2").unwrap()),
        ("z".to_string(), Polynomial::parse(&space, "x1*y1").unwrap()),
    ];
    let bad = Cdga::from_parts(space, d).unwrap();
    assert!(!bad.check_d_squared());
    let checked = Cdga::from_strings(&[("x1", 28), ("x2", 34), ("y1", 117), ("z", 144)], &[("y1", "x1^3*x2"), ("z", "x1*y1")]);
    assert!(checked.is_err());
}

#[test]
fn basis_examples() {
    let a = m6();
    let n = a.space().len();
    assert_eq!(a.basis_of_degree(28), vec![Monomial::generator(n, 0)]);
    assert_eq!(a.basis_of_degree(0), vec![Monomial::one(n)]);
    assert!(a.basis_of_degree(1).is_empty());
}

#[test]
fn coboundary_preimage_examples() {
    let a = m6();
    let p = |s: &str| a.parse(s).unwrap();
    let c = a.apply(&p("y1*y2"));
    let m = a.coboundary_preimage(&c).unwrap().unwrap();
    assert_eq!(a.apply(&m), c);
    assert_eq!(a.coboundary_preimage(&p("x1")).unwrap(), None);
    let m = a.coboundary_preimage(&p("x1^3*x2")).unwrap().unwrap();
    assert!(a.is_cocycle(&(&m - &p("y1"))));
    assert!(a.coboundary_preimage(&p("x1 + x2")).is_err());
}

#[test]
fn universes_do_not_mix() {
    let a = m6();
    let b = build_mk(8).unwrap().algebra;
    let x = a.parse("x1").unwrap();
    let y = b.parse("x1").unwrap();
    assert!(x.checked_mul(&y).is_err());
    assert!(b.apply_differential(&x).is_err());
}

#[test]
fn json_round_trip_is_bit_exact() {
    for a in [m6(), build_mng(1, &builtin::path(3)).unwrap().algebra] {
        let s = a.to_json_string();
        let back = Cdga::from_json_str(&s).unwrap();
        assert_eq!(back.to_json_string(), s);
    }
    let a = Cdga::from_strings(&[("u", 2), ("v", 3)], &[("v", "-3/7*u^2")]).unwrap();
    let s = a.to_json_string();
    assert!(s.contains("\"-3/7\""));
    assert_eq!(Cdga::from_json_str(&s).unwrap().to_json_string(), s);
}

/// Coefficient of `t^d` in `Π_even 1/(1 - t^deg) · Π_odd (1 + t^deg)`.
fn hilbert(space: &GeneratorSpace, d: usize) -> usize {
    let mut series = vec![0usize; d + 1];
    series[0] = 1;
    for g in space.generators() {
        let k = g.degree() as usize;
        if g.is_odd() {
            for i in (k..=d).rev() {
                series[i] += series[i - k];
            }
        } else {
            for i in k..=d {
                series[i] += series[i - k];
            }
        }
    }
    series[d]
}

/// Every exponent vector up to the degree bound, filtered by degree.
fn brute_force(space: &GeneratorSpace, d: u32) -> usize {
    let degs: Vec<u32> = space.generators().iter().map(|g| g.degree()).collect();
    let caps: Vec<u32> = space.generators().iter().map(|g| if g.is_odd() { 1 } else { d / g.degree() }).collect();
    let mut e = vec![0u32; degs.len()];
    let mut count = 0;
    loop {
        if e.iter().zip(&degs).map(|(a, b)| a * b).sum::<u32>() == d {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == e.len() {
                return count;
            }
            if e[i] < caps[i] {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn basis_matches_hilbert_series() {
    let small = GeneratorSpace::from_pairs(&[("a", 2), ("b", 3), ("c", 3), ("e", 4), ("f", 5), ("g", 7)]).unwrap();
    let spaces: Vec<Arc<GeneratorSpace>> = vec![small, m6().space().clone(), build_mng(1, &builtin::path(3)).unwrap().algebra.space().clone()];
    for s in &spaces {
        for d in 0..=60u32 {
            let n = s.basis_of_degree(d).len();
            assert_eq!(n, hilbert(s, d as usize), "degree {d}");
            assert_eq!(n, brute_force(s, d), "degree {d}");
        }
    }
    // a degree where M_6 has several monomials
    let a = m6();
    assert_eq!(a.basis_of_degree(475).len(), hilbert(a.space(), 475));
}

fn poly_from(space: &Arc<GeneratorSpace>, terms: &[(Vec<usize>, i64, i64)]) -> Polynomial {
    let mut p = Polynomial::zero(space);
    for (gens, num, den) in terms {
        let mut t = Polynomial::constant(space, q(*num, *den));
        for &g in gens {
            t = &t * &Polynomial::generator(space, g % space.len());
        }
        p = &p + &t;
    }
    p
}

fn terms() -> impl Strategy<Value = Vec<(Vec<usize>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..64, 0..4), -9i64..=9, 1i64..=4), 1..5)
}

/// A single homogeneous term.
fn term() -> impl Strategy<Value = (Vec<usize>, i64, i64)> {
    (prop::collection::vec(0usize..64, 0..4), -9i64..=9, 1i64..=4)
}

fn sign_of(p: &Polynomial) -> i64 {
    if p.homogeneous_degree().is_some_and(|d| d % 2 == 1) {
        -1
    } else {
        1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graded_commutativity(a in term(), b in term(), which in 0usize..2) {
        let alg = if which == 0 { m6() } else { build_mng(1, &builtin::path(3)).unwrap().algebra };
        let s = alg.space();
        let (p, r) = (poly_from(s, &[a]), poly_from(s, &[b]));
        let (dp, dr) = (p.homogeneous_degree().unwrap_or(0), r.homogeneous_degree().unwrap_or(0));
        let sign = if dp % 2 == 1 && dr % 2 == 1 { qi(-1) } else { qi(1) };
        prop_assert_eq!(&p * &r, (&r * &p).scale(&sign));
    }

    #[test]
    fn associativity_and_distributivity(a in terms(), b in terms(), c in terms()) {
        let alg = build_mng(1, &builtin::complete(3)).unwrap().algebra;
        let s = alg.space();
        let (x, y, z) = (poly_from(s, &a), poly_from(s, &b), poly_from(s, &c));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn leibniz(a in term(), b in terms()) {
        let alg = m6();
        let s = alg.space();
        let (x, y) = (poly_from(s, &[a]), poly_from(s, &b));
        let lhs = alg.apply(&(&x * &y));
        let rhs = &(&alg.apply(&x) * &y) + &(&x * &alg.apply(&y)).scale(&qi(sign_of(&x)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_squared_on_random_polynomials(a in terms(), which in 0usize..3) {
        let alg = match which {
            0 => m6(),
            1 => build_mk(10).unwrap().algebra,
            _ => build_mng(1, &builtin::cycle(4)).unwrap().algebra,
        };
        let x = poly_from(alg.space(), &a);
        prop_assert!(alg.apply(&alg.apply(&x)).is_zero());
    }

    #[test]
    fn preimage_round_trip(a in term()) {
        let alg = m6();
        let x = poly_from(alg.space(), &[a]);
        let c = alg.apply(&x);
        let m = alg.coboundary_preimage(&c).unwrap();
        prop_assert!(m.is_some());
        prop_assert_eq!(alg.apply(&m.unwrap()), c);
    }
}
