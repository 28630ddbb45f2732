//! Relation systems of the quantum differential Hopf algebra and the
//! quantum Weyl superalgebra, realized as operator identities on `Ω`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{cap_degree, multiply_terms, render_terms, Atom, OpSum, Witness};
use crate::error::{Error, Result};
use crate::indices::{theta, theta_eps, MultiIndex};
use crate::qarith::{char_of, Mode, Parity, ScalarQ};
use crate::superspaces::{SpaceSpec, Terms};

/// The relation systems that can be checked on an `Ω`-side space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// `∂_i∂_j = θ(ε_i,ε_j)∂_j∂_i`, `∂_j² = 0`, and `∂_i^ℓ = 0` when restricted.
    DqSuper,
    /// Group-like relations and their conjugation action on the `∂_i`.
    DqHopfAlg,
    /// Cross relations between `x_i` and the differential generators.
    WeylGeneric,
    /// Extra relations for `x_j^{(ℓ)}` when `ℓ` is odd.
    WeylOddRoot,
    /// Extra relations for `x_j^{(ℓ)}` when `q^ℓ = −1`.
    WeylEvenRoot,
    /// Twisted Leibniz laws, `Θ` identities, conjugation table and super-commutation.
    TwistedLeibniz,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::DqSuper => "dq-super",
            Suite::DqHopfAlg => "dq-hopf-alg",
            Suite::WeylGeneric => "weyl-generic",
            Suite::WeylOddRoot => "weyl-odd-root",
            Suite::WeylEvenRoot => "weyl-even-root",
            Suite::TwistedLeibniz => "twisted-leibniz",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [Suite::DqSuper, Suite::DqHopfAlg, Suite::WeylGeneric, Suite::WeylOddRoot, Suite::WeylEvenRoot, Suite::TwistedLeibniz]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// What a relation asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// `lhs = rhs` as operators.
    Equal { lhs: OpSum, rhs: OpSum },
    /// `op(u·v) = Σ A(u)·B(v)` over the listed `(A, B)` pairs.
    Leibniz { op: OpSum, pairs: Vec<(OpSum, OpSum)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub check: Check,
}

/// One input of a relation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Single(MultiIndex),
    Pair(MultiIndex, MultiIndex),
}

impl Input {
    pub fn render(&self) -> String {
        match self {
            Input::Single(k) => k.render(),
            Input::Pair(a, b) => format!("{} * {}", a.render(), b.render()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationOutcome {
    pub name: String,
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub relations: Vec<RelationOutcome>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.holds)
    }
}

/// Inputs on which a relation is evaluated for the given degree bound.
///
/// Operator identities use every basis monomial of degree `≤ t_max`;
/// Leibniz laws use every pair whose degrees sum to `≤ t_max`.
pub fn relation_inputs(space: &SpaceSpec, rel: &Relation, t_max: i64) -> Vec<Input> {
    let t = cap_degree(space, t_max);
    match rel.check {
        Check::Equal { .. } => space.basis_up_to(t).into_iter().map(Input::Single).collect(),
        Check::Leibniz { .. } => {
            let mut out = Vec::new();
            for a in 0..=t {
                let left = space.basis_of_degree(a);
                for b in 0..=(t - a) {
                    let right = space.basis_of_degree(b);
                    for u in &left {
                        for v in &right {
                            out.push(Input::Pair(u.clone(), v.clone()));
                        }
                    }
                }
            }
            out
        }
    }
}

impl Input {
    /// Parses the [`Input::render`] form.
    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once('*') {
            Some((a, b)) => Ok(Input::Pair(MultiIndex::parse(a)?, MultiIndex::parse(b)?)),
            None => Ok(Input::Single(MultiIndex::parse(s)?)),
        }
    }
}

/// Both sides of a relation at one input.
pub fn relation_sides(space: &SpaceSpec, rel: &Relation, input: &Input) -> Result<(Terms, Terms)> {
    match (&rel.check, input) {
        (Check::Equal { lhs, rhs }, Input::Single(k)) => Ok((lhs.apply_key(space, k), rhs.apply_key(space, k))),
        (Check::Leibniz { op, pairs }, Input::Pair(u, v)) => {
            let one = space.mode.one();
            let uv = match space.multiply_unchecked(u, v) {
                Some((c, k)) => Terms::from([(k, c)]),
                None => Terms::new(),
            };
            let lhs = op.apply_terms(space, &uv);
            let tu = Terms::from([(u.clone(), one.clone())]);
            let tv = Terms::from([(v.clone(), one)]);
            let mut rhs = Terms::new();
            for (a, b) in pairs {
                let prod = multiply_terms(space, &a.apply_terms(space, &tu), &b.apply_terms(space, &tv));
                for (k, c) in prod {
                    crate::superspaces::add_term(&mut rhs, k, c);
                }
            }
            Ok((lhs, rhs))
        }
        (Check::Equal { .. }, _) => Err(Error::InvalidParameter(format!("{} takes a single monomial", rel.name))),
        (Check::Leibniz { .. }, _) => Err(Error::InvalidParameter(format!("{} takes a pair u * v", rel.name))),
    }
}

/// Evaluates a relation at one input; `Some` is a counterexample.
pub fn check_input(space: &SpaceSpec, rel: &Relation, input: &Input) -> Option<Witness> {
    match relation_sides(space, rel, input) {
        Ok((a, b)) => (a != b).then(|| Witness { input: input.render(), lhs: render_terms(&a), rhs: render_terms(&b) }),
        Err(e) => Some(Witness { input: input.render(), lhs: e.to_string(), rhs: String::new() }),
    }
}

fn validate_relation(space: &SpaceSpec, rel: &Relation) -> Result<()> {
    match &rel.check {
        Check::Equal { lhs, rhs } => {
            lhs.validate(space)?;
            rhs.validate(space)
        }
        Check::Leibniz { op, pairs } => {
            op.validate(space)?;
            for (a, b) in pairs {
                a.validate(space)?;
                b.validate(space)?;
            }
            Ok(())
        }
    }
}

/// Checks one relation on all inputs up to `t_max`, stopping at the first failure.
pub fn check_relation(space: &SpaceSpec, rel: &Relation, t_max: i64) -> Result<RelationOutcome> {
    validate_relation(space, rel)?;
    let mut checked = 0;
    for input in relation_inputs(space, rel, t_max) {
        checked += 1;
        if let Some(w) = check_input(space, rel, &input) {
            return Ok(RelationOutcome { name: rel.name.clone(), holds: false, checked, witness: Some(w) });
        }
    }
    Ok(RelationOutcome { name: rel.name.clone(), holds: true, checked, witness: None })
}

/// Sequential suite verification; relations are reported in suite order.
pub fn verify_relation_suite(suite: Suite, space: &SpaceSpec, t_max: i64) -> Result<SuiteReport> {
    let rels = suite_relations(suite, space)?;
    let relations = rels.iter().map(|r| check_relation(space, r, t_max)).collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport { suite: suite.name().into(), relations })
}

struct Builder<'a> {
    m: usize,
    n: usize,
    mode: &'a Mode,
    out: Vec<Relation>,
}

impl<'a> Builder<'a> {
    fn w(&self, atoms: Vec<Atom>) -> OpSum {
        OpSum::word(self.mode, atoms)
    }

    fn eq(&mut self, name: String, lhs: OpSum, rhs: OpSum) {
        self.out.push(Relation { name, check: Check::Equal { lhs, rhs } });
    }

    fn eps(&self, i: usize) -> MultiIndex {
        MultiIndex::eps(self.m, self.n, i)
    }

    fn th(&self, i: usize, j: usize) -> ScalarQ {
        theta_eps(self.m, self.n, i, j, self.mode)
    }

    fn odd(&self, i: usize) -> bool {
        i > self.m
    }

    fn sign(&self, s: bool) -> ScalarQ {
        if s {
            -self.mode.one()
        } else {
            self.mode.one()
        }
    }

    fn len(&self) -> usize {
        self.m + self.n
    }
}

use Atom::{MultX as X, MultXDivPow as XP, Partial as D, Parity as Tau, Sigma as S, Tau as T, Theta as Th};

fn add_dq_super(b: &mut Builder, ell: Option<u32>) {
    let len = b.len();
    for i in 1..=len {
        for j in 1..=len {
            if i != j {
                let (l, r) = (b.w(vec![D(i), D(j)]), b.w(vec![D(j), D(i)]).scaled(&b.th(i, j)));
                b.eq(format!("d{i} d{j} = theta(e{i},e{j}) d{j} d{i}"), l, r);
            }
        }
    }
    for j in b.m + 1..=len {
        let l = b.w(vec![D(j), D(j)]);
        b.eq(format!("d{j}^2 = 0"), l, OpSum::zero(b.mode));
    }
    if let Some(l) = ell {
        for i in 1..=b.m {
            let lhs = OpSum::atom(b.mode, D(i)).power(l);
            b.eq(format!("d{i}^{l} = 0"), lhs, OpSum::zero(b.mode));
        }
    }
}

fn add_group(b: &mut Builder) {
    let (m, len) = (b.m, b.len());
    let id = OpSum::identity(b.mode);
    for i in 1..=len {
        let l = b.w(vec![S(i, 1), S(i, -1)]);
        b.eq(format!("s{i} s{i}^-1 = 1"), l, id.clone());
        for j in i + 1..=len {
            let (l, r) = (b.w(vec![S(i, 1), S(j, 1)]), b.w(vec![S(j, 1), S(i, 1)]));
            b.eq(format!("s{i} s{j} = s{j} s{i}"), l, r);
        }
    }
    for j in m + 1..=len {
        let l = b.w(vec![T(j), T(j)]);
        b.eq(format!("t{j}^2 = 1"), l, id.clone());
        for k in j + 1..=len {
            let (l, r) = (b.w(vec![T(j), T(k)]), b.w(vec![T(k), T(j)]));
            b.eq(format!("t{j} t{k} = t{k} t{j}"), l, r);
        }
        for i in 1..=len {
            let (l, r) = (b.w(vec![S(i, 1), T(j)]), b.w(vec![T(j), S(i, 1)]));
            b.eq(format!("s{i} t{j} = t{j} s{i}"), l, r);
            let (l, r) = (b.w(vec![T(j), Th(b.eps(i))]), b.w(vec![Th(b.eps(i)), T(j)]));
            b.eq(format!("t{j} Th(e{i}) = Th(e{i}) t{j}"), l, r);
        }
    }
    let l = b.w(vec![Tau, Tau]);
    b.eq("tau^2 = 1".into(), l, id.clone());
    for i in 1..=len {
        let (ei, mi) = (b.eps(i), b.eps(i).scaled(-1));
        let l = b.w(vec![Th(ei.clone()), Th(mi.clone())]);
        b.eq(format!("Th(e{i}) Th(-e{i}) = 1"), l, id.clone());
        for j in 1..=len {
            let ej = b.eps(j);
            let (l, r) = (b.w(vec![Th(ei.clone()), Th(ej.clone())]), b.w(vec![Th(ei.add(&ej))]));
            b.eq(format!("Th(e{i}) Th(e{j}) = Th(e{i}+e{j})"), l, r);
            let (l, r) = (b.w(vec![S(j, 1), Th(ei.clone())]), b.w(vec![Th(ei.clone()), S(j, 1)]));
            b.eq(format!("s{j} Th(e{i}) = Th(e{i}) s{j}"), l, r);
        }
    }
    let l = b.w(vec![Th(MultiIndex::zero(b.m, b.n))]);
    b.eq("Th(0) = 1".into(), l, id);
    for i in 1..len {
        let lam = b.eps(i + 1).sub(&b.eps(i));
        if i == m {
            let (l, r) = (b.w(vec![Th(lam)]), b.w(vec![Tau, S(m, 1), S(m + 1, 1)]));
            b.eq(format!("Th(-e{m}+e{}) = tau s{m} s{}", m + 1, m + 1), l, r);
        } else {
            let (l, r) = (b.w(vec![Th(lam)]), b.w(vec![S(i, 1), S(i + 1, 1)]));
            b.eq(format!("Th(-e{i}+e{}) = s{i} s{}", i + 1, i + 1), l, r);
        }
    }
}

fn add_conjugation(b: &mut Builder) {
    let len = b.len();
    for i in 1..=len {
        for j in 1..=len {
            let (ej, mj) = (b.eps(j), b.eps(j).scaled(-1));
            let l = b.w(vec![Th(ej), D(i), Th(mj)]);
            let r = b.w(vec![D(i)]).scaled(&b.th(i, j));
            b.eq(format!("Th(e{j}) d{i} Th(-e{j}) = theta(e{i},e{j}) d{i}"), l, r);
            let c = if i == j { &b.sign(b.odd(i)) * &b.mode.q_pow(-1) } else { b.mode.one() };
            let (l, r) = (b.w(vec![S(j, 1), D(i), S(j, -1)]), b.w(vec![D(i)]).scaled(&c));
            b.eq(format!("s{j} d{i} s{j}^-1 = c d{i}"), l, r);
            if b.odd(j) {
                let l = b.w(vec![T(j), D(i)]);
                let r = b.w(vec![D(i), T(j)]).scaled(&b.sign(i == j));
                b.eq(format!("t{j} d{i} = (-1)^delta d{i} t{j}"), l, r);
            }
        }
        let l = b.w(vec![Tau, D(i), Tau]);
        let r = b.w(vec![D(i)]).scaled(&b.sign(b.odd(i)));
        b.eq(format!("tau d{i} tau = (-1)^|d{i}| d{i}"), l, r);
    }
}

fn add_weyl_cross(b: &mut Builder) {
    let len = b.len();
    let q = b.mode.q();
    for i in 1..=len {
        for j in 1..=len {
            if i != j {
                let (l, r) = (b.w(vec![X(i), X(j)]), b.w(vec![X(j), X(i)]).scaled(&b.th(i, j)));
                b.eq(format!("x{i} x{j} = theta(e{i},e{j}) x{j} x{i}"), l, r);
                let (l, r) = (b.w(vec![D(i), X(j)]), b.w(vec![X(j), D(i)]).scaled(&b.th(j, i)));
                b.eq(format!("d{i} x{j} = theta(e{j},e{i}) x{j} d{i}"), l, r);
            }
            let (ei, mi) = (b.eps(i), b.eps(i).scaled(-1));
            let l = b.w(vec![Th(ei), X(j), Th(mi)]);
            let r = b.w(vec![X(j)]).scaled(&b.th(i, j));
            b.eq(format!("Th(e{i}) x{j} Th(-e{i}) = theta(e{i},e{j}) x{j}"), l, r);
            // σ_i acts on an odd x_i by −q, so the factor is (−q)^{δ_ij} there.
            let c = if i != j {
                b.mode.one()
            } else if b.odd(i) {
                -q.clone()
            } else {
                q.clone()
            };
            let (l, r) = (b.w(vec![S(i, 1), X(j), S(i, -1)]), b.w(vec![X(j)]).scaled(&c));
            b.eq(format!("s{i} x{j} s{i}^-1 = c x{j}"), l, r);
            if b.odd(i) {
                let l = b.w(vec![T(i), X(j), T(i)]);
                let r = b.w(vec![X(j)]).scaled(&b.sign(i == j));
                b.eq(format!("t{i} x{j} t{i} = (-1)^delta x{j}"), l, r);
            }
        }
        if b.odd(i) {
            let l = b.w(vec![X(i), X(i)]);
            b.eq(format!("x{i}^2 = 0"), l, OpSum::zero(b.mode));
            let l = b.w(vec![D(i), X(i)]).plus(b.w(vec![X(i), D(i)]));
            b.eq(format!("d{i} x{i} + x{i} d{i} = 1"), l, OpSum::identity(b.mode));
        } else {
            let l = b.w(vec![D(i), X(i)]).minus(b.w(vec![X(i), D(i)]).scaled(&q));
            let r = b.w(vec![S(i, -1)]);
            b.eq(format!("d{i} x{i} - q x{i} d{i} = s{i}^-1"), l, r);
        }
    }
}

fn add_weyl_root(b: &mut Builder, ell: u32, even: bool) {
    let len = b.len();
    let neg = -b.mode.one();
    let flip = |same: bool| if same { b.mode.one() } else { neg.clone() };
    for j in 1..=b.m {
        let xl = XP(j, ell);
        for i in 1..=len {
            let ei = b.eps(i);
            // Even branch: Θ(ε_i) anticommutes with x_j^{(ℓ)} for i ≠ j.
            let c = if even { flip(i == j) } else { b.mode.one() };
            let (l, r) = (b.w(vec![Th(ei), xl.clone()]), b.w(vec![xl.clone(), Th(b.eps(i))]).scaled(&c));
            b.eq(format!("Th(e{i}) x{j}^(l) = c x{j}^(l) Th(e{i})"), l, r);
            let c = if even { flip(i != j) } else { b.mode.one() };
            let (l, r) = (b.w(vec![S(i, 1), xl.clone()]), b.w(vec![xl.clone(), S(i, 1)]).scaled(&c));
            b.eq(format!("s{i} x{j}^(l) = c x{j}^(l) s{i}"), l, r);
            if b.odd(i) {
                let (l, r) = (b.w(vec![T(i), xl.clone()]), b.w(vec![xl.clone(), T(i)]));
                b.eq(format!("t{i} x{j}^(l) = x{j}^(l) t{i}"), l, r);
            }
            if i != j {
                let c = if even { neg.clone() } else { b.mode.one() };
                let (l, r) = (b.w(vec![D(i), xl.clone()]), b.w(vec![xl.clone(), D(i)]).scaled(&c));
                b.eq(format!("d{i} x{j}^(l) = c x{j}^(l) d{i}"), l, r);
            }
            // Even branch: x_i x_j^{(ℓ)} = −(−1)^{δ_ij} x_j^{(ℓ)} x_i.
            let c = if even { flip(i == j) } else { b.mode.one() };
            let (l, r) = (b.w(vec![X(i), xl.clone()]), b.w(vec![xl.clone(), X(i)]).scaled(&c));
            b.eq(format!("x{i} x{j}^(l) = c x{j}^(l) x{i}"), l, r);
        }
        let commutator = if even {
            b.w(vec![D(j), xl.clone()]).plus(b.w(vec![xl.clone(), D(j)]))
        } else {
            b.w(vec![D(j), xl.clone()]).minus(b.w(vec![xl.clone(), D(j)]))
        };
        let r = b.w(vec![XP(j, ell - 1), S(j, -1)]);
        let op = if even { "+" } else { "-" };
        b.eq(format!("d{j} x{j}^(l) {op} x{j}^(l) d{j} = x{j}^(l-1) s{j}^-1"), commutator, r);
    }
}

fn leibniz(b: &mut Builder, name: String, op: OpSum, pairs: Vec<(OpSum, OpSum)>) {
    b.out.push(Relation { name, check: Check::Leibniz { op, pairs } });
}

fn add_twisted_leibniz(b: &mut Builder, space: &SpaceSpec) {
    let (m, len) = (b.m, b.len());
    let id = OpSum::identity(b.mode);
    // (1) twisted Leibniz laws for each ∂_i, both sign pairings on I₀.
    for i in 1..=len {
        let mi = b.eps(i).scaled(-1);
        if i <= m {
            for (tag, s) in [("upper", 1i64), ("lower", -1i64)] {
                let pairs = vec![
                    (b.w(vec![D(i)]), b.w(vec![S(i, -s)])),
                    (b.w(vec![Th(mi.clone()), S(i, s)]), b.w(vec![D(i)])),
                ];
                leibniz(b, format!("d{i}(uv) = d{i}(u) s{i}^{} (v) + Th(-e{i}) s{i}^{s} (u) d{i}(v) [{tag}]", -s), b.w(vec![D(i)]), pairs);
            }
        } else {
            let pairs = vec![(b.w(vec![D(i)]), id.clone()), (b.w(vec![Th(mi), T(i)]), b.w(vec![D(i)]))];
            leibniz(b, format!("d{i}(uv) = d{i}(u) v + Th(-e{i}) t{i}(u) d{i}(v)"), b.w(vec![D(i)]), pairs);
        }
    }
    // (2) and (3): Θ identities and the conjugation table.
    add_group(b);
    add_conjugation(b);
    // (4) super-commutation and associativity of left multiplications.
    let small: Vec<MultiIndex> =
        space.basis_up_to(2.min(space.top_degree().unwrap_or(2))).into_iter().filter(|k| !k.is_zero()).collect();
    for (x, u) in small.iter().enumerate() {
        for v in &small[x..] {
            let c = theta(u, v, b.mode).expect("same shape");
            let l = b.w(vec![Atom::LeftMul(u.clone()), Atom::LeftMul(v.clone())]);
            let r = b.w(vec![Atom::LeftMul(v.clone()), Atom::LeftMul(u.clone())]).scaled(&c);
            b.eq(format!("L{} L{} = theta L{} L{}", u, v, v, u), l, r);
            let l = b.w(vec![Atom::LeftMul(u.clone()), Atom::LeftMul(v.clone())]);
            let r = match space.multiply_unchecked(u, v) {
                Some((c, k)) => b.w(vec![Atom::LeftMul(k)]).scaled(&c),
                None => OpSum::zero(b.mode),
            };
            b.eq(format!("L{} L{} = L({}*{})", u, v, u, v), l, r);
        }
    }
    // (5) (x^{(α)}⊗x^μ)∂_i is a twisted derivation for i ∈ I₀.
    let gens: Vec<MultiIndex> = space.basis_of_degree(1).into_iter().chain(space.basis_of_degree(2)).collect();
    for a in &gens {
        for i in 1..=m {
            let lam = a.sub(&b.eps(i));
            let dd = b.w(vec![Atom::LeftMul(a.clone()), D(i)]);
            for (tag, s) in [("upper", 1i64), ("lower", -1i64)] {
                let pairs =
                    vec![(dd.clone(), b.w(vec![S(i, -s)])), (b.w(vec![Th(lam.clone()), S(i, s)]), dd.clone())];
                leibniz(b, format!("L{} d{i} twisted derivation [{tag}]", a), dd.clone(), pairs);
            }
        }
    }
}

/// Instantiates a suite on a space after checking mode and family compatibility.
pub fn suite_relations(suite: Suite, space: &SpaceSpec) -> Result<Vec<Relation>> {
    if !space.family.is_omega() {
        return Err(Error::InvalidParameter(format!(
            "suite {} acts on omega or omega-restricted, got {}",
            suite.name(),
            space.family.name()
        )));
    }
    let prof = char_of(&space.mode)?;
    let mut b = Builder { m: space.m(), n: space.n(), mode: &space.mode, out: Vec::new() };
    match suite {
        Suite::DqSuper => add_dq_super(&mut b, space.ell()),
        Suite::DqHopfAlg => {
            add_group(&mut b);
            add_conjugation(&mut b);
            add_dq_super(&mut b, space.ell());
        }
        Suite::WeylGeneric => {
            add_group(&mut b);
            add_conjugation(&mut b);
            add_dq_super(&mut b, space.ell());
            add_weyl_cross(&mut b);
        }
        Suite::WeylOddRoot | Suite::WeylEvenRoot => {
            let want = if suite == Suite::WeylOddRoot { Parity::OddRoot } else { Parity::EvenRoot };
            if prof.parity != want || space.family.is_restricted() {
                return Err(Error::InvalidParameter(format!(
                    "suite {} needs unrestricted omega with {:?} q, got {} with {:?}",
                    suite.name(),
                    want,
                    space.family.name(),
                    prof.parity
                )));
            }
            add_group(&mut b);
            add_conjugation(&mut b);
            add_dq_super(&mut b, None);
            add_weyl_cross(&mut b);
            add_weyl_root(&mut b, prof.ell, suite == Suite::WeylEvenRoot);
        }
        Suite::TwistedLeibniz => add_twisted_leibniz(&mut b, space),
    }
    Ok(b.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspaces::Family;

    fn run(suite: Suite, family: Family, m: usize, n: usize, mode: Mode, t: i64) -> SuiteReport {
        let sp = SpaceSpec::new(family, m, n, mode).unwrap();
        verify_relation_suite(suite, &sp, t).unwrap()
    }

    fn failures(r: &SuiteReport) -> Vec<String> {
        r.relations.iter().filter(|x| !x.holds).map(|x| format!("{} @ {:?}", x.name, x.witness)).collect()
    }

    #[test]
    fn weyl_generic_small() {
        let r = run(Suite::WeylGeneric, Family::Omega, 1, 1, Mode::Generic, 4);
        assert!(r.all_pass(), "{:?}", failures(&r));
    }

    #[test]
    fn twisted_leibniz_small() {
        let r = run(Suite::TwistedLeibniz, Family::Omega, 1, 1, Mode::Generic, 4);
        assert!(r.all_pass(), "{:?}", failures(&r));
    }

    #[test]
    fn odd_root_suite() {
        let r = run(Suite::WeylOddRoot, Family::Omega, 1, 1, Mode::root_of_unity(3).unwrap(), 5);
        assert!(r.all_pass(), "{:?}", failures(&r));
    }

    #[test]
    fn mismatched_branch_rejected() {
        let sp = SpaceSpec::new(Family::Omega, 1, 1, Mode::root_of_unity(3).unwrap()).unwrap();
        assert!(suite_relations(Suite::WeylEvenRoot, &sp).is_err());
        let g = SpaceSpec::new(Family::Omega, 1, 1, Mode::Generic).unwrap();
        assert!(suite_relations(Suite::WeylOddRoot, &g).is_err());
    }

    #[test]
    fn empty_j_is_vacuous() {
        let r = run(Suite::DqHopfAlg, Family::Omega, 1, 0, Mode::Generic, 3);
        assert!(r.all_pass());
    }
}
