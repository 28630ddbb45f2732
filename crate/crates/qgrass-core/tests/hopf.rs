use qgrass_core::hopf::{build, divided_power_coproduct_check, rule_diff, Depth, Dim, HopfFamily, HopfReport, SignedPow};
use qgrass_core::qarith::Mode;

fn root(d: u32) -> Mode {
    Mode::root_of_unity(d).unwrap()
}

fn failures(rep: &HopfReport) -> Vec<String> {
    rep.checks.iter().filter(|c| !c.holds).map(|c| format!("{} {:?}", c.name, c.detail)).collect()
}

#[test]
fn taft_1_0_exhaustive() {
    let p = build(&HopfFamily::TaftQ { m: 1, n: 0 }, &root(3)).unwrap();
    assert_eq!(p.pbw_dim(), Dim::Finite(9));
    let rep = p.verify_hopf(Depth::Exhaustive).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    assert!(rep.consistent());
}

#[test]
fn taft_1_1_dimension_and_diagnostic() {
    let p = build(&HopfFamily::TaftQ { m: 1, n: 1 }, &root(3)).unwrap();
    assert_eq!(p.pbw_dim(), Dim::Finite(36));
    let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    let bad: Vec<_> = rep.diagnostics.iter().filter(|c| !c.holds).collect();
    assert_eq!(bad.len(), 1, "{bad:#?}");
    assert!(bad[0].name.contains("K2^2"));
}

#[test]
fn taft_mu_2_3() {
    let mode = root(6);
    let mu = vec![vec![SignedPow::q(3), SignedPow::ONE], vec![SignedPow::ONE, SignedPow::q(2)]];
    let p = build(&HopfFamily::TaftMu { mu, ells: vec![2, 3], ords: None }, &mode).unwrap();
    assert_eq!(p.pbw_dim(), Dim::Finite(36));
    let rep = p.verify_hopf(Depth::Exhaustive).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    assert!(rep.consistent());
}

#[test]
fn taft_mu_rejects_bad_matrix() {
    let mu = vec![vec![SignedPow::q(3), SignedPow::q(1)], vec![SignedPow::q(1), SignedPow::q(2)]];
    assert!(build(&HopfFamily::TaftMu { mu, ells: vec![2, 3], ords: None }, &root(6)).is_err());
}

#[test]
fn dq_generic_generators() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for minus in [false, true] {
            let p = build(&HopfFamily::Dq { m, n, restricted: false, minus }, &Mode::Generic).unwrap();
            let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
            assert!(rep.axioms_hold(), "{m}|{n} {:#?}", failures(&rep));
            assert!(rep.consistent(), "{:#?}", rep.diagnostics);
        }
    }
}

#[test]
fn dq_restricted() {
    let p = build(&HopfFamily::Dq { m: 2, n: 0, restricted: true, minus: false }, &root(3)).unwrap();
    let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    assert!(rep.consistent());
    // ∂-part of dimension ℓ^m·2^n = 9 times the order of the finite group.
    assert!(matches!(p.pbw_dim(), Dim::Finite(d) if d % 9 == 0), "{:?}", p.pbw_dim());
    let p = build(&HopfFamily::Dq { m: 1, n: 1, restricted: true, minus: false }, &root(3)).unwrap();
    let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    let p = build(&HopfFamily::Dq { m: 1, n: 1, restricted: true, minus: false }, &root(6)).unwrap();
    let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    assert!(rep.consistent(), "{:#?}", rep.diagnostics);
}

#[test]
fn aq_and_gq() {
    let p = build(&HopfFamily::Aq { m: 1, n: 1, k_ell: false }, &Mode::Generic).unwrap();
    assert_eq!(p.pbw_dim(), Dim::Infinite);
    let rep = p.verify_hopf(Depth::GeneratorsOnly).unwrap();
    assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    for (m, n) in [(1, 1), (2, 1)] {
        let g = build(&HopfFamily::Gq { m, n, restricted: true, k_ell: true }, &root(3)).unwrap();
        let rep = g.verify_hopf(Depth::GeneratorsOnly).unwrap();
        assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
        let g = build(&HopfFamily::Gq { m, n, restricted: false, k_ell: false }, &root(3)).unwrap();
        let rep = g.verify_hopf(Depth::GeneratorsOnly).unwrap();
        assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
        let g = build(&HopfFamily::Gq { m, n, restricted: false, k_ell: false }, &Mode::Generic).unwrap();
        let rep = g.verify_hopf(Depth::GeneratorsOnly).unwrap();
        assert!(rep.axioms_hold(), "{:#?}", failures(&rep));
    }
}

#[test]
fn divided_powers() {
    for mode in [Mode::Generic, root(3), root(5)] {
        let rep = divided_power_coproduct_check(2, 1, 1, 5, &mode).unwrap();
        let bad: Vec<_> = rep.iter().filter(|c| !c.holds).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}

#[test]
fn taft_vs_grassmann_rules() {
    let t = build(&HopfFamily::TaftQ { m: 2, n: 1 }, &root(3)).unwrap();
    let g = build(&HopfFamily::Gq { m: 2, n: 1, restricted: true, k_ell: true }, &root(3)).unwrap();
    assert_eq!(t.pbw_dim(), g.pbw_dim());
    let (a, b) = rule_diff(&t, &g);
    assert_eq!(a.len(), 2);
    assert_eq!(b.len(), 2);
}

#[test]
fn partial_powers_primitive() {
    use qgrass_core::hopf::partial_power_primitivity;
    for (m, n) in [(1, 0), (2, 0), (1, 1), (2, 1)] {
        let rep = partial_power_primitivity(m, n, &root(3)).unwrap();
        assert_eq!(rep.len(), m);
        assert!(rep.iter().all(|c| c.holds), "{rep:#?}");
    }
}
