//! One function per subcommand.

use std::collections::BTreeMap;

use qgrass_core::hopf::{
    build, divided_power_coproduct_check, partial_power_primitivity, AxiomCheck, Depth, Dim, HopfFamily, SignedPow,
};
use qgrass_core::qarith::{char_of, lucas_binom, lucas_binom_ell, q_binom, Mode};
use qgrass_core::superspaces::SpaceSpec;
use qgrass_core::uqrep::{
    component_report, dim_enum, dim_formula, generator_word, module_algebra_relations, uq_relations, Algebra,
    GeneratorSymbol, Verdict,
};
use qgrass_core::weyl::suites::{check_relation, relation_sides, suite_relations, Input, Relation};
use qgrass_core::weyl::{render_terms, Atom, OpSum, Suite};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{ActArgs, AlgebraArgs, Format, HopfArgs, QtestArgs, SimpleArgs, SpaceArgs, SuiteArgs};
use crate::config::RunConfig;
use crate::report::{
    csv_table, json, render_suites, status, terms_json, Header, Output, RelationJson, SuiteJson, TermJson, WitnessJson,
};
use crate::CliError;

fn core(e: qgrass_core::Error) -> CliError {
    CliError::from(e)
}

fn algebra(name: &str) -> Result<Algebra, CliError> {
    Algebra::parse(name).map_err(|e| CliError::Usage(e.to_string()))
}

fn params(cfg: &RunConfig, space: &SpaceSpec, t_max: i64) -> BTreeMap<String, String> {
    let mut p = BTreeMap::from([
        ("family".to_string(), space.family.name().to_string()),
        ("m".to_string(), space.m().to_string()),
        ("n".to_string(), space.n().to_string()),
        ("q".to_string(), cfg.q.clone()),
        ("t_max".to_string(), t_max.to_string()),
    ]);
    if let Some(d) = cfg.d {
        p.insert("d".into(), d.to_string());
    }
    p
}

/// Replay arguments for a failing relation input.
fn replay(cfg: &RunConfig, suite: &str, name: &str, input: &str) -> Vec<String> {
    let mut v = vec!["act".to_string()];
    v.extend(cfg.space_flags());
    v.extend(["--suite".into(), suite.into(), "--relation".into(), name.into(), "--input".into(), input.into()]);
    v
}

/// Checks relations in parallel and assembles the suite report in order.
fn run_suite(
    cfg: &RunConfig,
    space: &SpaceSpec,
    suite: &str,
    rels: &[Relation],
    info: &[Relation],
    t_max: i64,
) -> Result<SuiteJson, CliError> {
    let check = |rs: &[Relation]| -> Result<Vec<RelationJson>, CliError> {
        let outcomes = rs.par_iter().map(|r| check_relation(space, r, t_max)).collect::<Result<Vec<_>, _>>().map_err(core)?;
        Ok(outcomes.iter().map(|o| RelationJson::from_outcome(o, |n, i| replay(cfg, suite, n, i))).collect())
    };
    Ok(SuiteJson {
        suite: suite.into(),
        params: params(cfg, space, t_max),
        relations: check(rels)?,
        informational: check(info)?,
    })
}

#[derive(Serialize)]
struct DimRow {
    t: i64,
    dim_formula: String,
    dim_enum: String,
    equal: bool,
}

#[derive(Serialize)]
struct DimsReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    pass: bool,
    rows: Vec<DimRow>,
}

pub fn dims(a: &SpaceArgs) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new("dims", Some(&a.family), &a.common, Format::Csv)?;
    let space = cfg.space()?;
    let top = space.top_degree();
    let t_max = match (cfg.t_max, top, space.family.is_restricted()) {
        (Some(t), Some(top), true) => t.min(top),
        (Some(t), _, _) => t,
        (None, Some(top), true) => top,
        (None, _, _) => 8,
    };
    cfg.t_max = Some(t_max);
    let rows = (0..=t_max)
        .into_par_iter()
        .map(|t| {
            let f = dim_formula(&space, t)?;
            let e = dim_enum(&space, t);
            Ok(DimRow { t, dim_formula: f.to_string(), dim_enum: e.to_string(), equal: f == e })
        })
        .collect::<Result<Vec<_>, qgrass_core::Error>>()
        .map_err(core)?;
    let pass = rows.iter().all(|r| r.equal);
    let text = match cfg.format() {
        Format::Json => json(&DimsReport { header: Header::new(&cfg), pass, rows })?,
        Format::Csv => csv_table(
            &cfg,
            &["t", "dim_formula", "dim_enum", "equal"],
            rows.into_iter().map(|r| vec![r.t.to_string(), r.dim_formula, r.dim_enum, r.equal.to_string()]).collect(),
        )?,
    };
    Ok(Output { text, pass })
}

/// Letters are generator symbols (`E1`, `K2^-1`, `sigma`) or atoms (`d1`, `x2`, `s1^-1`).
fn parse_word(space: &SpaceSpec, word: &str) -> Result<OpSum, CliError> {
    let mut op = OpSum::identity(&space.mode);
    for tok in word.split_whitespace() {
        let letter = match GeneratorSymbol::parse(tok) {
            Ok(g) => generator_word(g, space).map_err(core)?,
            Err(_) => {
                let atom = Atom::parse(tok).map_err(|e| CliError::Usage(e.to_string()))?;
                OpSum::atom(&space.mode, atom)
            }
        };
        op = op.then(&letter);
    }
    op.validate(space).map_err(core)?;
    Ok(op)
}

/// The relations a suite name refers to, informational ones included.
fn suite_by_name(space: &SpaceSpec, name: &str) -> Result<Vec<Relation>, CliError> {
    if let Some(alg) = name.strip_prefix("uq-") {
        let (mut rels, info) = uq_relations(space, algebra(alg)?).map_err(core)?;
        rels.extend(info);
        return Ok(rels);
    }
    if let Some(alg) = name.strip_prefix("module-algebra-") {
        return module_algebra_relations(space, algebra(alg)?).map_err(core);
    }
    let suite = Suite::parse(name).map_err(|e| CliError::Usage(e.to_string()))?;
    suite_relations(suite, space).map_err(core)
}

#[derive(Serialize)]
struct ActReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    operator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<Vec<TermJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal: Option<bool>,
    rendered: String,
}

pub fn act(a: &ActArgs) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new("act", Some(&a.space.family), &a.space.common, Format::Json)?;
    let space = cfg.space()?;
    let input = Input::parse(&a.input).map_err(|e| CliError::Usage(e.to_string()))?;
    let keys = match &input {
        Input::Single(k) => vec![k],
        Input::Pair(u, v) => vec![u, v],
    };
    for k in keys {
        if !space.is_valid_key(k) {
            return Err(CliError::Usage(format!("{} is not a basis monomial of this space", k.render())));
        }
    }
    cfg.options.insert("input".into(), a.input.clone());
    let mut rows = Vec::new();
    let report = match (&a.word, &a.relation) {
        (Some(w), None) => {
            cfg.options.insert("word".into(), w.clone());
            let Input::Single(k) = &input else {
                return Err(CliError::Usage("--word takes a single monomial".into()));
            };
            let op = parse_word(&space, w)?;
            let img = op.apply_key(&space, k);
            rows.extend(img.iter().map(|(k, c)| vec!["image".into(), k.render(), c.render()]));
            ActReport {
                header: Header::new(&cfg),
                input: k.render(),
                operator: Some(op.render()),
                relation: None,
                image: Some(terms_json(&img)),
                lhs: None,
                rhs: None,
                equal: None,
                rendered: render_terms(&img),
            }
        }
        (None, Some(name)) => {
            let suite = a.suite.as_deref().expect("clap enforces --suite");
            cfg.options.insert("suite".into(), suite.into());
            cfg.options.insert("relation".into(), name.clone());
            let rels = suite_by_name(&space, suite)?;
            let rel = rels
                .iter()
                .find(|r| &r.name == name)
                .ok_or_else(|| CliError::Usage(format!("suite {suite} has no relation {name:?}")))?;
            let (l, r) = relation_sides(&space, rel, &input).map_err(|e| CliError::Usage(e.to_string()))?;
            rows.extend(l.iter().map(|(k, c)| vec!["lhs".into(), k.render(), c.render()]));
            rows.extend(r.iter().map(|(k, c)| vec!["rhs".into(), k.render(), c.render()]));
            ActReport {
                header: Header::new(&cfg),
                input: input.render(),
                operator: None,
                relation: Some(name.clone()),
                image: None,
                lhs: Some(terms_json(&l)),
                rhs: Some(terms_json(&r)),
                equal: Some(l == r),
                rendered: format!("{} = {}", render_terms(&l), render_terms(&r)),
            }
        }
        _ => return Err(CliError::Usage("act needs exactly one of --word or --relation".into())),
    };
    let text = match cfg.format() {
        Format::Json => json(&report)?,
        Format::Csv => csv_table(&cfg, &["side", "key", "coefficient"], rows)?,
    };
    Ok(Output { text, pass: true })
}

pub fn check_uq(a: &AlgebraArgs) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new("check-uq", Some(&a.space.family), &a.space.common, Format::Json)?;
    let space = cfg.space()?;
    let alg = algebra(&a.algebra)?;
    let t_max = cfg.t_max.unwrap_or(6);
    cfg.t_max = Some(t_max);
    cfg.options.insert("algebra".into(), alg.name().into());
    let (rels, info) = uq_relations(&space, alg).map_err(core)?;
    let rep = run_suite(&cfg, &space, &format!("uq-{}", alg.name()), &rels, &info, t_max)?;
    render_suites(&cfg, vec![rep])
}

pub fn check_leibniz(a: &AlgebraArgs) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new("check-leibniz", Some(&a.space.family), &a.space.common, Format::Json)?;
    let space = cfg.space()?;
    let alg = algebra(&a.algebra)?;
    let t_max = cfg.t_max.unwrap_or(5);
    cfg.t_max = Some(t_max);
    cfg.options.insert("algebra".into(), alg.name().into());
    let rels = module_algebra_relations(&space, alg).map_err(core)?;
    let rep = run_suite(&cfg, &space, &format!("module-algebra-{}", alg.name()), &rels, &[], t_max)?;
    render_suites(&cfg, vec![rep])
}

fn check_suites(command: &str, a: &SuiteArgs, default: impl Fn(&Mode) -> Vec<Suite>) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new(command, Some(&a.space.family), &a.space.common, Format::Json)?;
    let space = cfg.space()?;
    let t_max = cfg.t_max.unwrap_or(6);
    cfg.t_max = Some(t_max);
    let suites = match &a.suite {
        Some(names) => names
            .iter()
            .map(|s| Suite::parse(s).map_err(|e| CliError::Usage(e.to_string())))
            .collect::<Result<Vec<_>, _>>()?,
        None => default(cfg.mode()),
    };
    cfg.options.insert("suites".into(), suites.iter().map(Suite::name).collect::<Vec<_>>().join(","));
    let mut reports = Vec::new();
    for s in suites {
        let rels = suite_relations(s, &space).map_err(core)?;
        reports.push(run_suite(&cfg, &space, s.name(), &rels, &[], t_max)?);
    }
    render_suites(&cfg, reports)
}

pub fn check_weyl(a: &SuiteArgs) -> Result<Output, CliError> {
    check_suites("check-weyl", a, |mode| {
        let mut v = vec![Suite::WeylGeneric];
        match char_of(mode).map(|p| p.parity) {
            Ok(qgrass_core::qarith::Parity::OddRoot) => v.push(Suite::WeylOddRoot),
            Ok(qgrass_core::qarith::Parity::EvenRoot) => v.push(Suite::WeylEvenRoot),
            _ => {}
        }
        v
    })
}

pub fn check_dq(a: &SuiteArgs) -> Result<Output, CliError> {
    check_suites("check-dq", a, |_| vec![Suite::DqSuper, Suite::DqHopfAlg, Suite::TwistedLeibniz])
}

/// Parses `q3`, `-q^2`, `1`, `-1`.
fn signed_pow(tok: &str) -> Result<SignedPow, CliError> {
    let bad = || CliError::Usage(format!("cannot parse matrix entry {tok:?}"));
    let (neg, rest) = match tok.trim().strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, tok.trim()),
    };
    let e = if rest == "1" {
        0
    } else {
        let r = rest.strip_prefix('q').ok_or_else(bad)?;
        let r = r.strip_prefix('^').unwrap_or(r);
        if r.is_empty() {
            1
        } else {
            r.parse::<i64>().map_err(|_| bad())?
        }
    };
    Ok(SignedPow::signed(neg, e))
}

fn hopf_family(a: &HopfArgs, cfg: &RunConfig) -> Result<HopfFamily, CliError> {
    let (m, n) = (cfg.m, cfg.n);
    let fam = match a.family.as_str() {
        "taft-mn" => HopfFamily::TaftQ { m, n },
        "taft-mu" => {
            let mu = a.mu.as_deref().ok_or_else(|| CliError::Usage("taft-mu needs --mu".into()))?;
            let mu = mu
                .split(';')
                .map(|row| row.split(',').map(signed_pow).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let ells = a.ells.clone().ok_or_else(|| CliError::Usage("taft-mu needs --ells".into()))?;
            HopfFamily::TaftMu { mu, ells, ords: a.ords.clone() }
        }
        "dq" => HopfFamily::Dq { m, n, restricted: a.restricted, minus: a.minus },
        "aq" => HopfFamily::Aq { m, n, k_ell: a.k_ell },
        "gq" => HopfFamily::Gq { m, n, restricted: a.restricted, k_ell: a.k_ell },
        f => return Err(CliError::Usage(format!("unknown Hopf family {f:?}; expected taft-mn, taft-mu, dq, aq or gq"))),
    };
    let needs_root = a.restricted || a.k_ell || a.family.starts_with("taft");
    if needs_root {
        cfg.require_restricted(&a.family)?;
    }
    Ok(fam)
}

#[derive(Serialize)]
struct CheckJson {
    name: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn checks_json(cs: &[AxiomCheck]) -> Vec<CheckJson> {
    cs.iter().map(|c| CheckJson { name: c.name.clone(), status: status(c.holds), detail: c.detail.clone() }).collect()
}

#[derive(Serialize)]
struct HopfJson<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    label: String,
    params: BTreeMap<String, String>,
    /// A number, or `"infinite"`.
    dim: serde_json::Value,
    depth: &'static str,
    pass: bool,
    consistent: bool,
    checks: Vec<CheckJson>,
    /// Consistency of the stated group relations with the characters; informational.
    diagnostics: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    primitivity: Vec<CheckJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

pub fn hopf(a: &HopfArgs) -> Result<Output, CliError> {
    let mut cfg = RunConfig::new("hopf", Some(&a.family), &a.common, Format::Json)?;
    let fam = hopf_family(a, &cfg)?;
    for (flag, on) in [
        ("restricted", a.restricted),
        ("minus", a.minus),
        ("k_ell", a.k_ell),
        ("exhaustive", a.exhaustive),
        ("primitivity", a.primitivity),
    ] {
        if on {
            cfg.options.insert(flag.into(), "true".into());
        }
    }
    if let Some(mu) = &a.mu {
        cfg.options.insert("mu".into(), mu.clone());
    }
    let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    if let Some(v) = &a.ells {
        cfg.options.insert("ells".into(), list(v));
    }
    if let Some(v) = &a.ords {
        cfg.options.insert("ords".into(), list(v));
    }
    let p = build(&fam, cfg.mode()).map_err(|e| CliError::Usage(e.to_string()))?;
    let depth = if a.exhaustive { Depth::Exhaustive } else { Depth::GeneratorsOnly };
    let rep = p.verify_hopf(depth).map_err(core)?;
    let mut prim = Vec::new();
    if a.primitivity {
        cfg.require_restricted("--primitivity")?;
        prim.extend(partial_power_primitivity(cfg.m, cfg.n, cfg.mode()).map_err(core)?);
        let ell = cfg.ell.expect("checked above");
        for i in 1..=cfg.m {
            prim.extend(divided_power_coproduct_check(cfg.m, cfg.n, i, ell, cfg.mode()).map_err(core)?);
        }
    }
    let pass = rep.axioms_hold() && prim.iter().all(|c| c.holds);
    let dim = match p.pbw_dim() {
        Dim::Finite(d) => serde_json::Value::from(u64::try_from(d).map_err(|_| CliError::Internal("dimension overflow".into()))?),
        Dim::Infinite => serde_json::Value::from("infinite"),
    };
    let depth_name = if a.exhaustive { "exhaustive" } else { "generators-only" };
    let text = match cfg.format() {
        Format::Json => json(&HopfJson {
            header: Header::new(&cfg),
            label: rep.label.clone(),
            params: p.params.iter().cloned().collect(),
            dim: dim.clone(),
            depth: depth_name,
            pass,
            consistent: rep.consistent(),
            checks: checks_json(&rep.checks),
            diagnostics: checks_json(&rep.diagnostics),
            primitivity: checks_json(&prim),
            notes: p.notes.clone(),
        })?,
        Format::Csv => {
            let mut rows = vec![vec!["dimension".into(), dim.to_string().trim_matches('"').to_string(), String::new(), String::new()]];
            for (kind, cs) in [("axiom", &rep.checks), ("diagnostic", &rep.diagnostics), ("primitivity", &prim)] {
                for c in cs.iter() {
                    rows.push(vec![kind.into(), c.name.clone(), status(c.holds).into(), c.detail.clone().unwrap_or_default()]);
                }
            }
            csv_table(&cfg, &["kind", "name", "status", "detail"], rows)?
        }
    };
    Ok(Output { text, pass })
}

#[derive(Serialize)]
struct ComponentJson {
    space: String,
    t: i64,
    dim: usize,
    hw_basis: Vec<String>,
    hw_weight: Vec<Option<String>>,
    simple: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    claimed_weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    claim_matches: Option<bool>,
    witnesses: Vec<String>,
}

#[derive(Serialize)]
struct SimpleReport<'a> {
    #[serde(flatten)]
    header: Header<'a>,
    pass: bool,
    components: Vec<ComponentJson>,
}

pub fn simple(a: &SimpleArgs) -> Result<Output, CliError> {
    let sa = &a.algebra.space;
    let mut cfg = RunConfig::new("simple", Some(&sa.family), &sa.common, Format::Json)?;
    let space = cfg.space()?;
    let alg = algebra(&a.algebra.algebra)?;
    let t_max = match (cfg.t_max, space.top_degree(), space.family.is_restricted()) {
        (Some(t), Some(top), true) => t.min(top),
        (Some(t), _, _) => t,
        (None, Some(top), true) => top,
        (None, _, _) => 4,
    };
    if a.t_min < 0 {
        return Err(CliError::Usage("--t-min must be non-negative".into()));
    }
    cfg.t_max = Some(t_max);
    cfg.options.insert("algebra".into(), alg.name().into());
    cfg.options.insert("t_min".into(), a.t_min.to_string());
    let reps = (a.t_min..=t_max)
        .into_par_iter()
        .map(|t| component_report(&space, alg, t))
        .collect::<Result<Vec<_>, _>>()
        .map_err(core)?;
    let pass = reps.iter().all(|r| r.simple != Verdict::NotSimple && r.claim_matches != Some(false));
    let comps: Vec<ComponentJson> = reps
        .into_iter()
        .map(|r| ComponentJson {
            space: r.space,
            t: r.t,
            dim: r.dim,
            hw_basis: r.hw_basis.iter().map(render_terms).collect(),
            hw_weight: r.hw_weights.iter().map(|w| w.as_ref().map(|w| w.render())).collect(),
            simple: r.simple.name(),
            claimed_weight: r.claimed.as_ref().map(|c| c.label.clone()),
            claim_matches: r.claim_matches,
            witnesses: r.witnesses,
        })
        .collect();
    let text = match cfg.format() {
        Format::Json => json(&SimpleReport { header: Header::new(&cfg), pass, components: comps })?,
        Format::Csv => csv_table(
            &cfg,
            &["t", "dim", "hw_basis", "hw_weight", "simple", "claim_matches"],
            comps
                .into_iter()
                .map(|c| {
                    let w: Vec<String> = c.hw_weight.into_iter().map(|w| w.unwrap_or_else(|| "?".into())).collect();
                    vec![
                        c.t.to_string(),
                        c.dim.to_string(),
                        c.hw_basis.join(" ; "),
                        w.join(" ; "),
                        c.simple.into(),
                        c.claim_matches.map_or_else(String::new, |b| b.to_string()),
                    ]
                })
                .collect(),
        )?,
    };
    Ok(Output { text, pass })
}

/// First counterexample of one identity family.
struct Sweep {
    name: String,
    checked: usize,
    witness: Option<(String, String, String)>,
}

impl Sweep {
    fn new(name: String) -> Self {
        Self { name, checked: 0, witness: None }
    }

    fn check(&mut self, input: impl FnOnce() -> String, lhs: &qgrass_core::qarith::ScalarQ, rhs: &qgrass_core::qarith::ScalarQ) {
        if self.witness.is_some() {
            return;
        }
        self.checked += 1;
        if lhs != rhs {
            self.witness = Some((input(), lhs.render(), rhs.render()));
        }
    }

    fn json(self, replay: &[String]) -> RelationJson {
        RelationJson {
            name: self.name,
            status: status(self.witness.is_none()),
            checked: self.checked,
            witness: self.witness.map(|(input, lhs, rhs)| WitnessJson { input, lhs, rhs, replay: replay.to_vec() }),
        }
    }
}

fn qarith_sweep(mode: &Mode, label: &str, span: i64) -> Result<Vec<Sweep>, CliError> {
    let ell = match mode {
        Mode::Generic => None,
        _ => Some(char_of(mode).map_err(|e| CliError::Usage(e.to_string()))?.ell as i64),
    };
    let s_max = span * ell.unwrap_or(4);
    let mut pascal = Sweep::new(format!("q-Pascal rule {label}"));
    let mut sym = Sweep::new(format!("binomial symmetry {label}"));
    for s in 1..=s_max {
        for r in 1..=s {
            let val = q_binom(s, r, mode);
            let rhs = &mode.q_pow(s - r) * &q_binom(s - 1, r - 1, mode) + &mode.q_pow(-r) * &q_binom(s - 1, r, mode);
            pascal.check(|| format!("s={s} r={r}"), &val, &rhs);
            sym.check(|| format!("s={s} r={r}"), &val, &q_binom(s, s - r, mode));
        }
    }
    let mut out = vec![pascal, sym];
    if let Some(l) = ell.filter(|&l| l >= 3) {
        let mut lucas = Sweep::new(format!("Lucas factorization {label}"));
        for s in 0..=s_max {
            for r in 0..=s {
                let rhs = lucas_binom(s, r, mode).map_err(core)?;
                lucas.check(|| format!("s={s} r={r}"), &q_binom(s, r, mode), &rhs);
            }
        }
        let mut top = Sweep::new(format!("[s over ell] for negative and positive s {label}"));
        for s in -s_max..=s_max {
            let rhs = lucas_binom_ell(s, mode).map_err(core)?;
            top.check(|| format!("s={s} r={l}"), &q_binom(s, l, mode), &rhs);
        }
        out.extend([lucas, top]);
    }
    Ok(out)
}

pub fn qtest(a: &QtestArgs) -> Result<Output, CliError> {
    let mut common = a.common.clone();
    let orders = match common.d.take() {
        Some(d) => vec![d],
        None => a.orders.clone(),
    };
    common.q = None;
    let mut cfg = RunConfig::new("qtest", None, &common, Format::Json)?;
    cfg.options.insert("orders".into(), orders.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    cfg.options.insert("span".into(), a.span.to_string());
    if a.span < 1 {
        return Err(CliError::Usage("--span must be positive".into()));
    }
    let mut modes = vec![(None, Mode::Generic)];
    for &d in &orders {
        let mode = Mode::root_of_unity(d).map_err(|e| CliError::Usage(e.to_string()))?;
        char_of(&mode).map_err(|e| CliError::Usage(e.to_string()))?;
        modes.push((Some(d), mode));
    }
    let reports = modes
        .par_iter()
        .map(|(d, mode)| -> Result<SuiteJson, CliError> {
            let label = d.map_or_else(|| "generic".to_string(), |d| format!("d={d}"));
            let mut replay = vec!["qtest".to_string(), "--span".into(), a.span.to_string()];
            let mut params = BTreeMap::from([("span".to_string(), a.span.to_string())]);
            match d {
                Some(d) => {
                    replay.extend(["--d".into(), d.to_string()]);
                    params.insert("d".into(), d.to_string());
                }
                None => {
                    params.insert("q".into(), "generic".into());
                }
            }
            let sweeps = qarith_sweep(mode, &label, a.span)?;
            Ok(SuiteJson {
                suite: format!("qarith {label}"),
                params,
                relations: sweeps.into_iter().map(|s| s.json(&replay)).collect(),
                informational: Vec::new(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    render_suites(&cfg, reports)
}
