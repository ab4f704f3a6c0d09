use proptest::prelude::*;
use sullivan::arithmetic::*;

/// Brute-force search for `a·α + b·β = m` with `α, β ≥ lower`.
fn brute(a: i64, b: i64, m: i64, lower: i64) -> Option<(i64, i64)> {
    if m < 0 {
        return None;
    }
    (lower..=m / a).find_map(|alpha| {
        let rest = m - a * alpha;
        (rest >= 0 && rest % b == 0 && rest / b >= lower).then_some((alpha, rest / b))
    })
}

#[test]
fn mk_degrees_at_small_k() {
    assert_eq!(DegreeScheme::mk(6).unwrap().rigid_degrees(), [28, 34, 117, 123, 129, 475]);
    assert_eq!(DegreeScheme::mk(8).unwrap().rigid_degrees(), [38, 46, 159, 167, 175, 873]);
}

#[test]
fn mng_degrees_at_n_one() {
    let s = DegreeScheme::mng(1).unwrap();
    assert_eq!(s.rigid_degrees(), [48, 58, 201, 211, 221, 1391]);
    assert_eq!(s.xv, Some(464));
}

#[test]
fn mng_rigid_part_is_mk_at_6n_plus_4() {
    for n in 1..=50 {
        let a = DegreeScheme::mng(n).unwrap();
        let b = DegreeScheme::mk(6 * n + 4).unwrap();
        assert_eq!(a.rigid_degrees(), b.rigid_degrees(), "n = {n}");
    }
}

#[test]
fn table_one_against_direct_residues() {
    for k in (6..=200).step_by(2) {
        let s = DegreeScheme::mk(k).unwrap();
        let r = table1_check(k).unwrap();
        assert_eq!(r.checks.len(), 6);
        for c in &r.checks {
            let direct = c.value.rem_euclid(s.x1) != 0 && c.value.rem_euclid(s.x2) != 0;
            assert_eq!(c.verdict, direct);
            assert!(c.verdict, "k = {k}, {}", c.name);
        }
    }
}

#[test]
fn table_two_against_direct_residues() {
    for n in 1..=100 {
        let s = DegreeScheme::mng(n).unwrap();
        let r = table2_check(n).unwrap();
        assert_eq!(r.checks.len(), 18);
        for c in &r.checks {
            assert!(c.value % s.x1 != 0 && c.value % s.x2 != 0, "n = {n}, {}", c.name);
        }
    }
}

#[test]
fn dioph_lemma_against_brute_force() {
    for n in 1..=100 {
        let s = DegreeScheme::mng(n).unwrap();
        let xv = s.xv.unwrap();
        let y = s.y1 + s.y2 + s.y3;
        assert_eq!(brute(s.x1, s.x2, xv, 1), None, "n = {n}");
        for m in [s.z - y, s.z - xv - y, s.z - 2 * xv - y] {
            assert_eq!(brute(s.x1, s.x2, m, 0), None, "n = {n}");
        }
        assert_eq!(-6 * s.x1 + 5 * s.x2, 2);
        assert!(dioph_no_solution_check(n).unwrap().passed());
    }
}

#[test]
fn the_cited_identity_at_n_one() {
    let s = DegreeScheme::mng(1).unwrap();
    assert_eq!(-6 * s.x1 + 5 * s.x2, 2);
    assert_eq!(-6 * 48 + 5 * 58, 2);
}

#[test]
fn sweeps_pass() {
    assert!(sweep_mk(200).unwrap().passed);
    assert!(sweep_mng(100).unwrap().passed);
}

#[test]
fn isolation_chain_increases() {
    for k in (6..=200).step_by(2) {
        assert!(isolation_holds(&DegreeScheme::mk(k).unwrap()));
    }
}

#[test]
fn manufactured_scheme_fails_table() {
    let mut s = DegreeScheme::mk(6).unwrap();
    // z - y1 becomes a multiple of |x1|
    s.z = s.y1 + 10 * s.x1;
    assert!(!table_report(6, &s, table1_values(&s)).passed());
}

proptest! {
    #[test]
    fn dioph_solve_matches_brute_force(a in 1i64..60, b in 1i64..60, m in 0i64..2000, lower in 0i64..3) {
        let fast = has_bounded_solution(a, b, m, lower).unwrap();
        let slow = brute(a, b, m, lower);
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some((x, y)) = fast {
            prop_assert_eq!(a * x + b * y, m);
            prop_assert!(x >= lower && y >= lower);
        }
    }

    #[test]
    fn general_solution_is_complete(a in 1i64..60, b in 1i64..60, m in -500i64..500, t in -20i64..20) {
        match dioph_solve(a, b, m).unwrap() {
            None => prop_assert!(m % num_integer::gcd(a, b) != 0),
            Some(sol) => {
                let (x, y) = sol.at(t);
                prop_assert_eq!(a * x + b * y, m);
                prop_assert!(sol.contains((x, y)));
            }
        }
    }

    #[test]
    fn extended_gcd_bezout(a in 1i64..10_000, b in 1i64..10_000) {
        let (g, u, v) = extended_gcd(a, b);
        prop_assert_eq!(g, num_integer::gcd(a, b));
        prop_assert_eq!(a * u + b * v, g);
    }
}
