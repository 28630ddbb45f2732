//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use qgrass_core::hopf::{build, divided_power_coproduct_check, partial_power_primitivity, Depth, Dim, HopfFamily, SignedPow};
use qgrass_core::indices::MultiIndex;
use qgrass_core::qarith::{binomial, char_of, q_binom, q_binom_laurent, LaurentPoly, Mode, Parity};
use qgrass_core::superspaces::{Family, SpaceSpec};
use qgrass_core::uqrep::{
    component_report, dim_enum, dim_formula, verify_module_algebra, verify_uq_relations, Algebra, UqReport, Verdict,
};
use qgrass_core::weyl::manin::manin_comparison;
use qgrass_core::weyl::{verify_relation_suite, Suite};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigRational::from_integer(c.into()))))
}

fn root(d: u32) -> Mode {
    Mode::root_of_unity(d).unwrap()
}

fn omega(family: Family, m: usize, n: usize, mode: Mode) -> SpaceSpec {
    SpaceSpec::new(family, m, n, mode).unwrap()
}

fn criterion1() -> Outcome {
    // [s over r] by q-Pascal from the row above, computed here from scratch.
    let hand = lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]);
    ensure(q_binom_laurent(4, 2) == hand, || "q_binom(4,2) differs from v^4+v^2+2+v^-2+v^-4".into())?;
    let mut checked = 0usize;
    for d in [3u32, 5, 6, 8] {
        let mode = root(d);
        let prof = char_of(&mode).map_err(|e| e.to_string())?;
        let l = prof.ell as i64;
        let even = prof.parity == Parity::EvenRoot;
        let sign = |e: i64| if even && e.rem_euclid(2) == 1 { -mode.one() } else { mode.one() };
        for s in 0..=3 * l {
            for r in 0..=s {
                let val = q_binom(s, r, &mode);
                if r >= 1 && s >= 1 {
                    let pascal = &mode.q_pow(s - r) * &q_binom(s - 1, r - 1, &mode)
                        + &mode.q_pow(-r) * &q_binom(s - 1, r, &mode);
                    ensure(val == pascal, || format!("Pascal fails d={d} s={s} r={r}"))?;
                }
                let (s0, s1, r0, r1) = (s % l, s / l, r % l, r / l);
                let e = (s1 + 1) * r1 * l + s0 * r1 - r0 * s1;
                let ord = mode.int(binomial(s1, r1) as i64);
                let rhs = &(&sign(e) * &q_binom(s0, r0, &mode)) * &ord;
                ensure(val == rhs, || format!("Lucas factorization fails d={d} s={s} r={r}"))?;
                checked += 1;
            }
        }
        for s in -3 * l..=3 * l {
            let (s0, s1) = (s.rem_euclid(l), s.div_euclid(l));
            let rhs = &sign((s1 + 1) * l + s0) * &mode.int(s1);
            ensure(q_binom(s, l, &mode) == rhs, || format!("[s over l] closed form fails d={d} s={s}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} identities at d in {{3,5,6,8}}"))
}

fn criterion2() -> Outcome {
    let mut count = 0usize;
    let mut run = |suite: Suite, sp: &SpaceSpec, t: i64| -> Result<(), String> {
        let rep = verify_relation_suite(suite, sp, t).map_err(|e| e.to_string())?;
        count += rep.relations.len();
        match rep.relations.iter().find(|r| !r.holds) {
            None => Ok(()),
            Some(bad) => Err(format!(
                "{} on {}({}|{}): {} fails at {:?}",
                suite.name(),
                sp.family.name(),
                sp.m(),
                sp.n(),
                bad.name,
                bad.witness
            )),
        }
    };
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let sp = omega(Family::Omega, m, n, Mode::Generic);
        run(Suite::DqSuper, &sp, 6)?;
        run(Suite::DqHopfAlg, &sp, 6)?;
        run(Suite::WeylGeneric, &sp, 6)?;
        run(Suite::TwistedLeibniz, &sp, 5)?;
        let rsp = omega(Family::OmegaRestricted, m, n, root(3));
        run(Suite::DqSuper, &rsp, 6)?;
        run(Suite::TwistedLeibniz, &rsp, 5)?;
    }
    run(Suite::WeylOddRoot, &omega(Family::Omega, 2, 1, root(3)), 6)?;
    run(Suite::WeylEvenRoot, &omega(Family::Omega, 2, 1, root(8)), 6)?;
    Ok(format!("{count} relations"))
}

fn first_failure(rep: &UqReport, sp: &SpaceSpec) -> Result<usize, String> {
    match rep.relations.iter().find(|r| !r.holds) {
        None => Ok(rep.relations.len()),
        Some(bad) => Err(format!("{} on {}({}|{}): {} fails at {:?}", rep.suite, sp.family.name(), sp.m(), sp.n(), bad.name, bad.witness)),
    }
}

fn criterion3() -> Outcome {
    let mut count = 0;
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for f in [Family::Omega, Family::Dual] {
            let sp = omega(f, m, n, Mode::Generic);
            count += first_failure(&verify_uq_relations(&sp, Algebra::Gl, 6).map_err(|e| e.to_string())?, &sp)?;
        }
    }
    for (m, n) in [(1, 1), (2, 1)] {
        let sp = omega(Family::OmegaRestricted, m, n, root(3));
        let rep = verify_uq_relations(&sp, Algebra::Gl, 6).map_err(|e| e.to_string())?;
        count += first_failure(&rep, &sp)?;
        let names: Vec<&str> = rep.relations.iter().map(|r| r.name.as_str()).collect();
        for j in 1..m + n {
            let want: Vec<String> = if j == m {
                vec![format!("restricted E{j}^2 = 0"), format!("restricted F{j}^2 = 0")]
            } else {
                vec![format!("restricted E{j}^3 = 0"), format!("restricted F{j}^3 = 0")]
            };
            for w in want {
                ensure(names.contains(&w.as_str()), || format!("restricted suite lacks {w}"))?;
            }
        }
        for i in 1..=m + n {
            let w = format!("restricted K{i}^6 = 1");
            ensure(names.contains(&w.as_str()), || format!("restricted suite lacks {w}"))?;
        }
    }
    Ok(format!("{count} relation instances"))
}

fn criterion4() -> Outcome {
    let mut count = 0;
    let mut spaces = Vec::new();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        spaces.push(omega(Family::Omega, m, n, Mode::Generic));
        spaces.push(omega(Family::Dual, m, n, Mode::Generic));
        spaces.push(omega(Family::OmegaRestricted, m, n, root(3)));
        spaces.push(omega(Family::DualRestricted, m, n, root(3)));
    }
    for sp in &spaces {
        count += first_failure(&verify_module_algebra(sp, Algebra::Gl, 5).map_err(|e| e.to_string())?, sp)?;
    }
    Ok(format!("{count} Leibniz laws on {} spaces", spaces.len()))
}

fn criterion5() -> Outcome {
    let mut count = 0;
    let mut check = |sp: &SpaceSpec, t: i64| -> Result<(), String> {
        let f = dim_formula(sp, t).map_err(|e| e.to_string())?;
        let e = dim_enum(sp, t);
        count += 1;
        ensure(f == e, || format!("{}({}|{}) t={t}: formula {f}, enumeration {e}", sp.family.name(), sp.m(), sp.n()))
    };
    for m in 0..=3 {
        for n in 0..=3 {
            for f in [Family::Omega, Family::Dual] {
                let sp = omega(f, m, n, Mode::Generic);
                for t in 0..=8 {
                    check(&sp, t)?;
                }
            }
            for d in [3, 5] {
                for f in [Family::OmegaRestricted, Family::DualRestricted] {
                    let sp = omega(f, m, n, root(d));
                    for t in 0..=sp.top_degree().expect("restricted spaces are finite") {
                        check(&sp, t)?;
                    }
                }
            }
        }
    }
    let spots = [
        (omega(Family::Omega, 2, 1, Mode::Generic), 2, 5u128),
        (omega(Family::OmegaRestricted, 1, 1, root(3)), 2, 2),
        (omega(Family::Dual, 2, 1, Mode::Generic), 1, 3),
    ];
    for (sp, t, want) in spots {
        let got = dim_formula(&sp, t).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{}({}|{}) t={t}: {got}, expected {want}", sp.family.name(), sp.m(), sp.n()))?;
    }
    Ok(format!("{count} degrees plus 3 spot values"))
}

fn criterion6() -> Outcome {
    let mut cases = Vec::new();
    for t in 0..=4 {
        cases.push((omega(Family::Omega, 2, 1, Mode::Generic), t));
    }
    for t in 0..=5 {
        cases.push((omega(Family::OmegaRestricted, 2, 1, root(3)), t));
    }
    for t in 0..=3 {
        cases.push((omega(Family::Dual, 2, 1, Mode::Generic), t));
    }
    for (sp, t) in &cases {
        let rep = component_report(sp, Algebra::Gl, *t).map_err(|e| e.to_string())?;
        let at = || format!("{}(2|1) t={t}", sp.family.name());
        ensure(rep.hw_basis.len() == 1, || format!("{}: highest-weight space of dimension {}", at(), rep.hw_basis.len()))?;
        ensure(rep.claim_matches == Some(true), || format!("{}: highest weight differs from the claim {:?}", at(), rep.claimed))?;
        ensure(rep.simple == Verdict::Simple, || format!("{}: simplicity {}", at(), rep.simple.name()))?;
        if sp.family == Family::Omega {
            let key = MultiIndex::new(vec![*t, 0], vec![0]);
            let hw = &rep.hw_basis[0];
            ensure(hw.len() == 1 && hw.contains_key(&key), || format!("{}: highest-weight vector is not x^({t},0)", at()))?;
            let w = rep.hw_weights[0].as_ref().map(|w| w.lambda.clone());
            ensure(w == Some(vec![*t, 0, 0]), || format!("{}: weight {w:?}, expected t w1", at()))?;
        }
    }
    Ok(format!("{} components", cases.len()))
}

fn criterion7() -> Outcome {
    let err = |e: qgrass_core::error::Error| e.to_string();
    let t10 = build(&HopfFamily::TaftQ { m: 1, n: 0 }, &root(3)).map_err(err)?;
    ensure(t10.pbw_dim() == Dim::Finite(9), || format!("TH_q(1|0) dimension {:?}", t10.pbw_dim()))?;
    let rep = t10.verify_hopf(Depth::Exhaustive).map_err(err)?;
    ensure(rep.axioms_hold(), || "TH_q(1|0) fails exhaustive verification".into())?;
    let t11 = build(&HopfFamily::TaftQ { m: 1, n: 1 }, &root(3)).map_err(err)?;
    ensure(t11.pbw_dim() == Dim::Finite(36), || format!("TH_q(1|1) dimension {:?}", t11.pbw_dim()))?;
    let mu = vec![vec![SignedPow::q(3), SignedPow::ONE], vec![SignedPow::ONE, SignedPow::q(2)]];
    let tmu = build(&HopfFamily::TaftMu { mu, ells: vec![2, 3], ords: None }, &root(6)).map_err(err)?;
    ensure(tmu.pbw_dim() == Dim::Finite(36), || format!("TH_mu(2,3) dimension {:?}", tmu.pbw_dim()))?;
    for fam in [HopfFamily::Dq { m: 1, n: 1, restricted: false, minus: false }, HopfFamily::Aq { m: 1, n: 1, k_ell: false }] {
        let p = build(&fam, &Mode::Generic).map_err(err)?;
        let rep = p.verify_hopf(Depth::GeneratorsOnly).map_err(err)?;
        if let Some(bad) = rep.checks.iter().find(|c| !c.holds) {
            return Err(format!("{}: {} fails", rep.label, bad.name));
        }
    }
    let mut prim = partial_power_primitivity(1, 1, &root(3)).map_err(err)?;
    prim.extend(divided_power_coproduct_check(1, 1, 1, 3, &root(3)).map_err(err)?);
    ensure(prim.iter().any(|c| c.name.contains("G_q") && c.name.contains("primitive")), || "no divided-power primitivity check".into())?;
    if let Some(bad) = prim.iter().find(|c| !c.holds) {
        return Err(format!("{} fails", bad.name));
    }
    Ok("dims 9, 36, 36; D_q, A_q generator checks; primitivity at l = 3".into())
}

fn criterion8() -> Outcome {
    let rep = manin_comparison(2, 2, &Mode::Generic, 4).map_err(|e| e.to_string())?;
    if let Some(bad) = rep.relations.iter().find(|r| !(r.holds_affine && r.holds_partial)) {
        return Err(format!("{} / {} fails", bad.affine, bad.partial));
    }
    if let Some(bad) = rep.dims.iter().find(|d| d.pbw != d.affine_words || d.pbw != d.partial_words) {
        return Err(format!("degree {} dimensions {:?}", bad.t, bad));
    }
    let dims: Vec<String> = rep.dims.iter().map(|d| d.pbw.to_string()).collect();
    Ok(format!("{} relations, graded dims {}", rep.relations.len(), dims.join(",")))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (1, "q-combinatorics", criterion1),
        (2, "differential and Weyl relations", criterion2),
        (3, "U_q relations", criterion3),
        (4, "module-algebra law", criterion4),
        (5, "dimension formulas", criterion5),
        (6, "highest weights and simplicity", criterion6),
        (7, "Hopf certification", criterion7),
        (8, "affine superspace and partial derivatives", criterion8),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("PASS criterion {n}: {name} ({detail}; {secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {n}: {name} ({why}; {secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
