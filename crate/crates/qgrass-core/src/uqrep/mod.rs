//! The bosonized quantum general and special linear superalgebras acting on
//! the quantum Grassmann superalgebra and its Manin dual: generator words,
//! relation and module-algebra checks, weights, simplicity and dimensions.

pub mod dims;
pub mod weights;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::qarith::ScalarQ;
use crate::superspaces::SpaceSpec;
use crate::weyl::suites::{check_relation, Check, Relation, RelationOutcome};
use crate::weyl::{Atom, OpSum};

pub use dims::{dim_enum, dim_formula, divided_power_dim};
pub use weights::{claimed_highest_weight, component_report, cyclic_span, monomial_weight, span_rank, Claim, ComponentReport, Verdict, WeightVector};

/// A generator of the bosonized algebra. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorSymbol {
    E(usize),
    F(usize),
    K(usize),
    Kinv(usize),
    /// `𝒦_j`.
    ScriptK(usize),
    /// `𝒦_j^{-1}`.
    ScriptKinv(usize),
    /// The parity group-like `σ`.
    Sigma,
}

impl GeneratorSymbol {
    pub fn render(&self) -> String {
        match self {
            GeneratorSymbol::E(j) => format!("E{j}"),
            GeneratorSymbol::F(j) => format!("F{j}"),
            GeneratorSymbol::K(i) => format!("K{i}"),
            GeneratorSymbol::Kinv(i) => format!("K{i}^-1"),
            GeneratorSymbol::ScriptK(j) => format!("KK{j}"),
            GeneratorSymbol::ScriptKinv(j) => format!("KK{j}^-1"),
            GeneratorSymbol::Sigma => "sigma".into(),
        }
    }

    /// Parses the [`GeneratorSymbol::render`] form.
    pub fn parse(tok: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse generator {tok:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if tok == "sigma" {
            return Ok(GeneratorSymbol::Sigma);
        }
        let (body, inv) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok, false),
        };
        if let Some(r) = body.strip_prefix("KK") {
            let j = num(r)?;
            return Ok(if inv { GeneratorSymbol::ScriptKinv(j) } else { GeneratorSymbol::ScriptK(j) });
        }
        if let Some(r) = body.strip_prefix('K') {
            let i = num(r)?;
            return Ok(if inv { GeneratorSymbol::Kinv(i) } else { GeneratorSymbol::K(i) });
        }
        if inv {
            return Err(bad());
        }
        if let Some(r) = body.strip_prefix('E') {
            return Ok(GeneratorSymbol::E(num(r)?));
        }
        if let Some(r) = body.strip_prefix('F') {
            return Ok(GeneratorSymbol::F(num(r)?));
        }
        Err(bad())
    }

    /// Parity: `E_m` and `F_m` are odd, everything else is even.
    pub fn parity(&self, m: usize) -> i64 {
        match self {
            GeneratorSymbol::E(j) | GeneratorSymbol::F(j) => i64::from(*j == m),
            _ => 0,
        }
    }
}

/// Which algebra is checked: `gl` uses every `K_i`, `sl` only the `𝒦_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Gl,
    Sl,
}

impl Algebra {
    pub fn name(&self) -> &'static str {
        match self {
            Algebra::Gl => "gl",
            Algebra::Sl => "sl",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Algebra::Gl),
            "sl" => Ok(Algebra::Sl),
            _ => Err(Error::InvalidParameter(format!("unknown algebra {s:?}"))),
        }
    }
}

fn check_family(space: &SpaceSpec) -> Result<()> {
    if space.family.is_omega() || space.family.is_dual() {
        Ok(())
    } else {
        Err(Error::SpaceMismatch(format!("no quantum group action on {}", space.family.name())))
    }
}

fn rank(space: &SpaceSpec) -> usize {
    space.m() + space.n()
}

/// Sign `s_i` with `q_i = q^{s_i}`: `+1` on `I₀`, `−1` on `I₁`.
pub fn q_sign(space: &SpaceSpec, i: usize) -> i64 {
    if i <= space.m() {
        1
    } else {
        -1
    }
}

/// Every generator valid on the space for the chosen algebra, in a fixed order.
pub fn generators(space: &SpaceSpec, algebra: Algebra) -> Vec<GeneratorSymbol> {
    let len = rank(space);
    let js = 1..len;
    let mut out: Vec<GeneratorSymbol> = js.clone().map(GeneratorSymbol::E).collect();
    out.extend(js.clone().map(GeneratorSymbol::F));
    if algebra == Algebra::Gl {
        out.extend((1..=len).map(GeneratorSymbol::K));
        out.extend((1..=len).map(GeneratorSymbol::Kinv));
    }
    out.extend(js.clone().map(GeneratorSymbol::ScriptK));
    out.extend(js.map(GeneratorSymbol::ScriptKinv));
    out.push(GeneratorSymbol::Sigma);
    out
}

/// The operator word realizing a generator on `Ω_q` or `Ω_q^!`.
pub fn generator_word(g: GeneratorSymbol, space: &SpaceSpec) -> Result<OpSum> {
    check_family(space)?;
    let (m, len) = (space.m(), rank(space));
    let mode = &space.mode;
    let dual = space.family.is_dual();
    let bad = || Error::InvalidParameter(format!("{} is not a generator for ({}|{})", g.render(), m, space.n()));
    let in_j = |j: usize| j >= 1 && j < len;
    let in_i = |i: usize| i >= 1 && i <= len;
    use Atom::{MultX, Partial, Sigma as S, Tau};
    let atoms = match g {
        GeneratorSymbol::E(j) if in_j(j) => vec![MultX(j), Partial(j + 1), S(j, 1)],
        GeneratorSymbol::F(j) if in_j(j) => vec![S(j, -1), MultX(j + 1), Partial(j)],
        GeneratorSymbol::K(i) if in_i(i) => {
            if dual || i <= m {
                vec![S(i, 1)]
            } else {
                vec![Tau(i), S(i, -1)]
            }
        }
        GeneratorSymbol::Kinv(i) if in_i(i) => {
            if dual || i <= m {
                vec![S(i, -1)]
            } else {
                vec![Tau(i), S(i, 1)]
            }
        }
        GeneratorSymbol::ScriptK(j) if in_j(j) => script_k(dual, m, j, 1),
        GeneratorSymbol::ScriptKinv(j) if in_j(j) => script_k(dual, m, j, -1),
        GeneratorSymbol::Sigma => vec![Atom::Parity],
        _ => return Err(bad()),
    };
    let op = OpSum::word(mode, atoms);
    op.validate(space)?;
    Ok(op)
}

/// `𝒦_j^{e}` in the closed forms: `σ_jσ_{j+1}^{-1}` below `m` and on the
/// dual, `σ_mσ_{m+1}τ_{m+1}` at `m`, `σ_j^{-1}σ_{j+1}τ_jτ_{j+1}` above `m`.
fn script_k(dual: bool, m: usize, j: usize, e: i64) -> Vec<Atom> {
    use Atom::{Sigma as S, Tau};
    if dual || j < m {
        vec![S(j, e), S(j + 1, -e)]
    } else if j == m {
        vec![S(j, e), S(j + 1, e), Tau(j + 1)]
    } else {
        vec![S(j, -e), S(j + 1, e), Tau(j), Tau(j + 1)]
    }
}

/// Outcome of a relation family; `informational` entries do not affect the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UqReport {
    pub suite: String,
    pub relations: Vec<RelationOutcome>,
    pub informational: Vec<RelationOutcome>,
}

impl UqReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

struct Gen<'a> {
    space: &'a SpaceSpec,
}

impl Gen<'_> {
    fn g(&self, g: GeneratorSymbol) -> OpSum {
        generator_word(g, self.space).expect("index checked by caller")
    }
    fn e(&self, j: usize) -> OpSum {
        self.g(GeneratorSymbol::E(j))
    }
    fn f(&self, j: usize) -> OpSum {
        self.g(GeneratorSymbol::F(j))
    }
    fn id(&self) -> OpSum {
        OpSum::identity(&self.space.mode)
    }
    fn zero(&self) -> OpSum {
        OpSum::zero(&self.space.mode)
    }
    fn qp(&self, e: i64) -> ScalarQ {
        self.space.mode.q_pow(e)
    }
    /// Composite `a₁ ∘ a₂ ∘ ⋯`.
    fn prod(&self, ops: &[&OpSum]) -> OpSum {
        ops.iter().fold(self.id(), |acc, o| acc.then(o))
    }
}

fn eq(name: String, lhs: OpSum, rhs: OpSum) -> Relation {
    Relation { name, check: Check::Equal { lhs, rhs } }
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Exponent `a` with `K_i E_j K_i^{-1} = q^{a} E_j`, i.e. `s_i(δ_ij − δ_{i,j+1})`.
fn k_e_exponent(space: &SpaceSpec, i: usize, j: usize) -> i64 {
    q_sign(space, i) * (delta(i, j) - delta(i, j + 1))
}

/// Toral elements used for the chosen algebra: `(symbol, inverse)`.
fn toral(space: &SpaceSpec, algebra: Algebra) -> Vec<(GeneratorSymbol, GeneratorSymbol)> {
    let len = rank(space);
    match algebra {
        Algebra::Gl => (1..=len).map(|i| (GeneratorSymbol::K(i), GeneratorSymbol::Kinv(i))).collect(),
        Algebra::Sl => (1..len).map(|j| (GeneratorSymbol::ScriptK(j), GeneratorSymbol::ScriptKinv(j))).collect(),
    }
}

/// Exponent of the conjugation of `E_j` by a toral element.
fn toral_exponent(space: &SpaceSpec, t: GeneratorSymbol, j: usize) -> i64 {
    match t {
        GeneratorSymbol::K(i) => k_e_exponent(space, i, j),
        GeneratorSymbol::ScriptK(i) => k_e_exponent(space, i, j) - k_e_exponent(space, i + 1, j),
        _ => unreachable!("toral symbols only"),
    }
}

/// Defining relations of the quantum group, the `σ` relations and, on
/// restricted spaces, the nilpotency and torsion relations of the small
/// quotient. The second list holds informational checks: the variants of the
/// weight and commutator relations replaced in the first list, and `K^ℓ = 1`.
pub fn uq_relations(space: &SpaceSpec, algebra: Algebra) -> Result<(Vec<Relation>, Vec<Relation>)> {
    check_family(space)?;
    let (m, len) = (space.m(), rank(space));
    let gen = Gen { space };
    let mode = &space.mode;
    let mut out = Vec::new();
    let mut info = Vec::new();
    let js: Vec<usize> = (1..len).collect();
    let tor = toral(space, algebra);
    let sigma = gen.g(GeneratorSymbol::Sigma);

    // Toral relations and σ.
    for (a, (t, ti)) in tor.iter().enumerate() {
        let (ot, oti) = (gen.g(*t), gen.g(*ti));
        out.push(eq(format!("toral {} {} = 1", t.render(), ti.render()), ot.then(&oti), gen.id()));
        out.push(eq(format!("toral {} {} = 1", ti.render(), t.render()), oti.then(&ot), gen.id()));
        for (s, _) in &tor[a + 1..] {
            let os = gen.g(*s);
            out.push(eq(format!("toral {} {} = {} {}", t.render(), s.render(), s.render(), t.render()), ot.then(&os), os.then(&ot)));
        }
        out.push(eq(format!("sigma {} = {} sigma", t.render(), t.render()), sigma.then(&ot), ot.then(&sigma)));
    }
    if algebra == Algebra::Gl {
        for &j in &js {
            let kk = gen.g(GeneratorSymbol::ScriptK(j));
            let def = gen.prod(&[&gen.g(GeneratorSymbol::K(j)), &gen.g(GeneratorSymbol::Kinv(j + 1))]);
            out.push(eq(format!("KK{j} = K{j} K{}^-1", j + 1), kk, def));
        }
    }
    out.push(eq("sigma sigma = 1".into(), sigma.then(&sigma), gen.id()));
    for &j in &js {
        let sign = if j == m { -mode.one() } else { mode.one() };
        for (name, x) in [("E", gen.e(j)), ("F", gen.f(j))] {
            let lhs = gen.prod(&[&sigma, &x, &sigma]);
            out.push(eq(format!("sigma {name}{j} sigma = (-1)^p {name}{j}"), lhs, x.clone().scaled(&sign)));
        }
    }

    // Weight relations in the form realized by the action.
    for (t, ti) in &tor {
        let (ot, oti) = (gen.g(*t), gen.g(*ti));
        for &j in &js {
            let a = toral_exponent(space, *t, j);
            let lhs = gen.prod(&[&ot, &gen.e(j), &oti]);
            out.push(eq(format!("weight {} E{j} {} = q^{a} E{j}", t.render(), ti.render()), lhs, gen.e(j).scaled(&gen.qp(a))));
            let lhs = gen.prod(&[&ot, &gen.f(j), &oti]);
            out.push(eq(format!("weight {} F{j} {} = q^{} F{j}", t.render(), ti.render(), -a), lhs, gen.f(j).scaled(&gen.qp(-a))));
        }
    }
    // Weight variant K_i E_j = q_i^{δ_ij} E_j K_i.
    if algebra == Algebra::Gl {
        for i in 1..=len {
            let (ot, oti) = (gen.g(GeneratorSymbol::K(i)), gen.g(GeneratorSymbol::Kinv(i)));
            for &j in &js {
                let a = q_sign(space, i) * delta(i, j);
                let lhs = gen.prod(&[&ot, &gen.e(j), &oti]);
                info.push(eq(format!("weight variant K{i} E{j} K{i}^-1 = q^{a} E{j}"), lhs, gen.e(j).scaled(&gen.qp(a))));
            }
        }
    }

    // Commutators with the sign (−1)^{p(E_i)p(F_j)}, and the variant sign (−1)^{p(E_i)p(F_i)}.
    for &i in &js {
        for &j in &js {
            let ef = gen.prod(&[&gen.e(i), &gen.f(j)]);
            let fe = gen.prod(&[&gen.f(j), &gen.e(i)]);
            let rhs = if i == j {
                let qi = gen.qp(q_sign(space, i));
                let den = &qi - &qi.inv().expect("q invertible");
                let inv = den.inv().ok_or_else(|| Error::InvalidParameter("q_i - q_i^-1 vanishes".into()))?;
                gen.g(GeneratorSymbol::ScriptK(i)).minus(gen.g(GeneratorSymbol::ScriptKinv(i))).scaled(&inv)
            } else {
                gen.zero()
            };
            let sign = |odd: bool| if odd { -mode.one() } else { mode.one() };
            let s_used = sign(i == m && j == m);
            out.push(eq(
                format!("commutator E{i} F{j} - (-1)^(p(E{i})p(F{j})) F{j} E{i} = delta (KK{i} - KK{i}^-1)/(q_i - q_i^-1)"),
                ef.clone().minus(fe.clone().scaled(&s_used)),
                rhs.clone(),
            ));
            if i == m && j != m {
                info.push(eq(
                    format!("commutator variant E{i} F{j} - (-1)^(p(E{i})p(F{i})) F{j} E{i} = 0"),
                    ef.minus(fe.scaled(&sign(true))),
                    rhs,
                ));
            }
        }
    }

    // Distant commutation and the Serre relations.
    for &i in &js {
        for &j in &js {
            if i < j && j - i > 1 {
                for (name, a, b) in [("E", gen.e(i), gen.e(j)), ("F", gen.f(i), gen.f(j))] {
                    out.push(eq(format!("distant {name}{i} {name}{j} = {name}{j} {name}{i}"), a.then(&b), b.then(&a)));
                }
            }
            if i != m && i.abs_diff(j) == 1 {
                let qi = gen.qp(q_sign(space, i));
                let c = -(&qi + &qi.inv().expect("q invertible"));
                for (name, a, b) in [("E", gen.e(i), gen.e(j)), ("F", gen.f(i), gen.f(j))] {
                    let lhs = gen
                        .prod(&[&a, &a, &b])
                        .plus(gen.prod(&[&a, &b, &a]).scaled(&c))
                        .plus(gen.prod(&[&b, &a, &a]));
                    out.push(eq(format!("serre {name}{i}^2 {name}{j} - [2] {name}{i} {name}{j} {name}{i} + {name}{j} {name}{i}^2 = 0"), lhs, gen.zero()));
                }
            }
        }
    }

    // Odd square and quartic relations.
    if m >= 1 && m < len {
        for (name, x) in [("E", gen.e(m)), ("F", gen.f(m))] {
            out.push(eq(format!("odd square {name}{m}^2 = 0"), x.then(&x), gen.zero()));
        }
    }
    if m >= 2 && m + 1 < len {
        let c = -(&gen.qp(1) + &gen.qp(-1));
        for (name, a, b, d) in [
            ("E", gen.e(m - 1), gen.e(m), gen.e(m + 1)),
            ("F", gen.f(m - 1), gen.f(m), gen.f(m + 1)),
        ] {
            let lhs = gen
                .prod(&[&a, &b, &d, &b])
                .plus(gen.prod(&[&b, &a, &b, &d]))
                .plus(gen.prod(&[&d, &b, &a, &b]))
                .plus(gen.prod(&[&b, &d, &b, &a]))
                .plus(gen.prod(&[&b, &a, &d, &b]).scaled(&c));
            out.push(eq(format!("quartic {name}{m}"), lhs, gen.zero()));
        }
    }

    // The small quotient on restricted spaces.
    if let Some(l) = space.ell() {
        for &j in &js {
            let p = if j == m { 2 } else { l };
            for (name, x) in [("E", gen.e(j)), ("F", gen.f(j))] {
                out.push(eq(format!("restricted {name}{j}^{p} = 0"), x.power(p), gen.zero()));
            }
        }
        for (t, _) in &tor {
            let ot = gen.g(*t);
            out.push(eq(format!("restricted {}^{} = 1", t.render(), 2 * l), ot.power(2 * l), gen.id()));
            info.push(eq(format!("{}^{} = 1", t.render(), l), ot.power(l), gen.id()));
        }
    }
    Ok((out, info))
}

/// Checks every relation instance on all basis monomials of degree `≤ t_max`.
pub fn verify_uq_relations(space: &SpaceSpec, algebra: Algebra, t_max: i64) -> Result<UqReport> {
    let (rels, info) = uq_relations(space, algebra)?;
    let run = |rs: &[Relation]| rs.iter().map(|r| check_relation(space, r, t_max)).collect::<Result<Vec<_>>>();
    Ok(UqReport { suite: format!("uq-{}", algebra.name()), relations: run(&rels)?, informational: run(&info)? })
}

/// The twisted Leibniz law `g(uv) = Σ g₍₁₎(u) g₍₂₎(v)` for every generator:
/// `Δ(E_j) = E_j⊗𝒦_j + σ^{p(j)}⊗E_j`, `Δ(F_j) = F_j⊗1 + σ^{p(j)}𝒦_j^{-1}⊗F_j`,
/// and `Δ(g) = g⊗g` for the group-likes.
pub fn module_algebra_relations(space: &SpaceSpec, algebra: Algebra) -> Result<Vec<Relation>> {
    check_family(space)?;
    let m = space.m();
    let gen = Gen { space };
    let sigma = gen.g(GeneratorSymbol::Sigma);
    let mut out = Vec::new();
    for g in generators(space, algebra) {
        let op = gen.g(g);
        let pairs = match g {
            GeneratorSymbol::E(j) => {
                let s = if j == m { sigma.clone() } else { gen.id() };
                vec![(op.clone(), gen.g(GeneratorSymbol::ScriptK(j))), (s, op.clone())]
            }
            GeneratorSymbol::F(j) => {
                let s = if j == m { sigma.clone() } else { gen.id() };
                vec![(op.clone(), gen.id()), (s.then(&gen.g(GeneratorSymbol::ScriptKinv(j))), op.clone())]
            }
            _ => vec![(op.clone(), op.clone())],
        };
        out.push(Relation { name: format!("{} module algebra", g.render()), check: Check::Leibniz { op, pairs } });
    }
    Ok(out)
}

/// Checks the module-algebra law on all monomial pairs of degree sum `≤ t_max`.
pub fn verify_module_algebra(space: &SpaceSpec, algebra: Algebra, t_max: i64) -> Result<UqReport> {
    let rels = module_algebra_relations(space, algebra)?;
    let relations = rels.iter().map(|r| check_relation(space, r, t_max)).collect::<Result<Vec<_>>>()?;
    Ok(UqReport { suite: format!("module-algebra-{}", algebra.name()), relations, informational: Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::MultiIndex;
    use crate::qarith::{q_int, Mode};
    use crate::superspaces::{Family, Terms};
    use crate::weyl::operators_equal;

    fn sp(f: Family, m: usize, n: usize, mode: Mode) -> SpaceSpec {
        SpaceSpec::new(f, m, n, mode).unwrap()
    }

    #[test]
    fn symbols_round_trip() {
        for g in generators(&sp(Family::Omega, 2, 2, Mode::Generic), Algebra::Gl) {
            assert_eq!(GeneratorSymbol::parse(&g.render()).unwrap(), g);
        }
        assert!(GeneratorSymbol::parse("E1^-1").is_err());
    }

    #[test]
    fn e1_on_omega_1_1() {
        let s = sp(Family::Omega, 1, 1, Mode::Generic);
        let e = generator_word(GeneratorSymbol::E(1), &s).unwrap();
        let img = e.apply_key(&s, &MultiIndex::new(vec![2], vec![1]));
        assert_eq!(img, Terms::from([(MultiIndex::new(vec![3], vec![0]), q_int(3, &s.mode))]));
    }

    #[test]
    fn f_m_kills_filled_first_odd_slot() {
        let s = sp(Family::Omega, 2, 2, Mode::Generic);
        let f = generator_word(GeneratorSymbol::F(2), &s).unwrap();
        for key in s.basis_up_to(4).into_iter().filter(|k| k.get(3) == 1) {
            assert!(f.apply_key(&s, &key).is_empty());
        }
    }

    #[test]
    fn dual_e_m() {
        let s = sp(Family::Dual, 2, 2, Mode::Generic);
        let e = generator_word(GeneratorSymbol::E(2), &s).unwrap();
        for key in s.basis_up_to(4) {
            let img = e.apply_key(&s, &key);
            if key.get(2) == 0 && key.get(3) >= 1 {
                let out = key.bumped(2, 1).bumped(3, -1);
                assert_eq!(img, Terms::from([(out, s.mode.one())]), "{}", key.render());
            } else {
                assert!(img.is_empty());
            }
        }
    }

    #[test]
    fn anticommutator_eigenvalue() {
        let s = sp(Family::Omega, 2, 2, Mode::Generic);
        let (e, f) = (generator_word(GeneratorSymbol::E(2), &s).unwrap(), generator_word(GeneratorSymbol::F(2), &s).unwrap());
        let op = e.then(&f).plus(f.then(&e));
        for key in s.basis_up_to(5) {
            let c = q_int(key.get(2) + key.get(3), &s.mode);
            let want = if c.is_zero() { Terms::new() } else { Terms::from([(key.clone(), c)]) };
            assert_eq!(op.apply_key(&s, &key), want);
        }
    }

    #[test]
    fn script_k_is_k_ratio() {
        for f in [Family::Omega, Family::Dual] {
            let s = sp(f, 2, 2, Mode::Generic);
            for j in 1..4 {
                let kk = generator_word(GeneratorSymbol::ScriptK(j), &s).unwrap();
                let ratio = generator_word(GeneratorSymbol::K(j), &s)
                    .unwrap()
                    .then(&generator_word(GeneratorSymbol::Kinv(j + 1), &s).unwrap());
                assert!(operators_equal(&s, &kk, &ratio, 4).unwrap().equal);
            }
        }
    }

    #[test]
    fn tau_based_k_rejected_on_dual_and_bad_indices() {
        let s = sp(Family::Dual, 1, 1, Mode::Generic);
        assert!(generator_word(GeneratorSymbol::E(2), &s).is_err());
        assert!(generator_word(GeneratorSymbol::K(3), &s).is_err());
        let a = sp(Family::Affine, 1, 1, Mode::Generic);
        assert!(generator_word(GeneratorSymbol::K(1), &a).is_err());
    }

    #[test]
    fn vacuous_when_rank_one() {
        let s = sp(Family::Omega, 0, 1, Mode::Generic);
        let r = verify_uq_relations(&s, Algebra::Gl, 3).unwrap();
        assert!(r.all_pass());
        assert!(r.relations.iter().all(|x| !x.name.starts_with("commutator")));
    }

    #[test]
    fn relations_small() {
        for f in [Family::Omega, Family::Dual] {
            for alg in [Algebra::Gl, Algebra::Sl] {
                let s = sp(f, 2, 1, Mode::Generic);
                let r = verify_uq_relations(&s, alg, 4).unwrap();
                let bad: Vec<_> = r.relations.iter().filter(|x| !x.holds).collect();
                assert!(bad.is_empty(), "{:?} {:?}: {:?}", f, alg, bad);
                let r = verify_module_algebra(&s, alg, 3).unwrap();
                let bad: Vec<_> = r.relations.iter().filter(|x| !x.holds).collect();
                assert!(bad.is_empty(), "{:?} {:?}: {:?}", f, alg, bad);
            }
        }
    }
}
