//! Quantum differential operators on the superspaces: atoms, operator
//! words, exhaustive equality testing and the relation suites of the
//! quantum Weyl superalgebra.

pub mod manin;
pub mod smash;
pub mod suites;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::indices::{star_flat, theta, MultiIndex};
use crate::qarith::{Mode, ScalarQ};
use crate::superspaces::{add_term, Family, SpaceSpec, Terms};

pub use suites::{relation_inputs, suite_relations, verify_relation_suite, Suite};

/// One elementary operator. Positions are 1-based over `I = I₀ ∪ I₁`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `∂_i`.
    Partial(usize),
    /// Left multiplication by `x_i`.
    MultX(usize),
    /// Left multiplication by the divided power `x_i^{(p)}`.
    MultXDivPow(usize, u32),
    /// `σ_i^k`.
    Sigma(usize, i64),
    /// `τ_i`, `i ∈ I₁` on the `Ω` side.
    Tau(usize),
    /// The parity automorphism: `τ` on `Ω`, `τ′` on the dual.
    Parity,
    /// `Θ(λ)` on the `Ω` side.
    Theta(MultiIndex),
    /// Left multiplication by a basis monomial.
    LeftMul(MultiIndex),
}

impl Atom {
    /// Net degree shift of the atom.
    pub fn degree_shift(&self) -> i64 {
        match self {
            Atom::Partial(_) => -1,
            Atom::MultX(_) => 1,
            Atom::MultXDivPow(_, p) => *p as i64,
            Atom::LeftMul(k) => k.degree(),
            _ => 0,
        }
    }

    pub fn render(&self) -> String {
        match self {
            Atom::Partial(i) => format!("d{i}"),
            Atom::MultX(i) => format!("x{i}"),
            Atom::MultXDivPow(i, p) => format!("x{i}^({p})"),
            Atom::Sigma(i, 1) => format!("s{i}"),
            Atom::Sigma(i, k) => format!("s{i}^{k}"),
            Atom::Tau(i) => format!("t{i}"),
            Atom::Parity => "tau".into(),
            Atom::Theta(l) => format!("Th{}", compact(l)),
            Atom::LeftMul(k) => format!("L{}", compact(k)),
        }
    }

    /// Parses the [`Atom::render`] form.
    pub fn parse(tok: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse atom {tok:?}"));
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        if tok == "tau" {
            return Ok(Atom::Parity);
        }
        if let Some(rest) = tok.strip_prefix("Th") {
            return Ok(Atom::Theta(MultiIndex::parse(rest)?));
        }
        if let Some(rest) = tok.strip_prefix('L') {
            return Ok(Atom::LeftMul(MultiIndex::parse(rest)?));
        }
        if let Some(rest) = tok.strip_prefix('d') {
            return Ok(Atom::Partial(num(rest)?));
        }
        if let Some(rest) = tok.strip_prefix('t') {
            return Ok(Atom::Tau(num(rest)?));
        }
        if let Some(rest) = tok.strip_prefix('x') {
            return Ok(match rest.split_once("^(") {
                Some((i, p)) => {
                    let p = p.strip_suffix(')').ok_or_else(bad)?;
                    Atom::MultXDivPow(num(i)?, p.parse().map_err(|_| bad())?)
                }
                None => Atom::MultX(num(rest)?),
            });
        }
        if let Some(rest) = tok.strip_prefix('s') {
            return Ok(match rest.split_once('^') {
                Some((i, k)) => Atom::Sigma(num(i)?, k.parse().map_err(|_| bad())?),
                None => Atom::Sigma(num(rest)?, 1),
            });
        }
        Err(bad())
    }
}

fn compact(k: &MultiIndex) -> String {
    let join = |v: &[i64]| v.iter().map(|a| format!("{a}")).collect::<Vec<_>>().join(",");
    format!("({}|{})", join(&k.bos), join(&k.fer))
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn invalid(space: &SpaceSpec, atom: &Atom) -> Error {
    Error::InvalidAtom(format!("{} is not defined on {}({}|{})", atom.render(), space.family.name(), space.m(), space.n()))
}

fn sign_pow(mode: &Mode, sign: i64, e: i64) -> ScalarQ {
    let v = mode.q_pow(e);
    if sign.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}

/// Checks that an atom is defined on the space.
pub fn validate_atom(space: &SpaceSpec, atom: &Atom) -> Result<()> {
    let (m, n) = (space.m(), space.n());
    let pos_ok = |i: usize| i >= 1 && i <= m + n;
    let fam = space.family;
    let ok = match atom {
        Atom::Partial(i) | Atom::Sigma(i, _) => pos_ok(*i) && fam != Family::Affine,
        Atom::MultX(i) => pos_ok(*i),
        Atom::MultXDivPow(i, p) => {
            let slot_ok = if fam.is_omega() {
                *i >= 1 && *i <= m
            } else if fam.is_dual() {
                *i > m && *i <= m + n
            } else {
                false
            };
            let mut key = MultiIndex::zero(m, n);
            if slot_ok {
                key.set(*i, *p as i64);
            }
            slot_ok && space.is_valid_key(&key)
        }
        Atom::Tau(i) => fam.is_omega() && *i > m && *i <= m + n,
        Atom::Parity => true,
        Atom::Theta(l) => fam.is_omega() && l.m() == m && l.n() == n,
        Atom::LeftMul(k) => space.is_valid_key(k),
    };
    if ok {
        Ok(())
    } else {
        Err(invalid(space, atom))
    }
}

/// Image of one basis monomial under one atom; `None` means zero.
///
/// The atom must already have passed [`validate_atom`].
pub fn apply_atom_key(space: &SpaceSpec, atom: &Atom, key: &MultiIndex) -> Option<(ScalarQ, MultiIndex)> {
    let m = space.m();
    let mode = &space.mode;
    let dual = space.family.is_dual();
    match atom {
        Atom::MultX(i) => {
            let e = MultiIndex::eps(m, space.n(), *i);
            space.multiply_unchecked(&e, key)
        }
        Atom::MultXDivPow(i, p) => {
            let mut e = MultiIndex::zero(m, space.n());
            e.set(*i, *p as i64);
            space.multiply_unchecked(&e, key)
        }
        Atom::LeftMul(k) => space.multiply_unchecked(k, key),
        Atom::Parity => Some((sign_pow(mode, space.parity_of(key), 0), key.clone())),
        Atom::Tau(i) => Some((sign_pow(mode, key.get(*i), 0), key.clone())),
        Atom::Theta(l) => Some((theta(l, key, mode).expect("validated shape"), key.clone())),
        Atom::Sigma(i, k) => {
            let a = key.get(*i);
            let c = match (dual, *i <= m) {
                (false, true) => mode.q_pow(k * a),
                (false, false) => sign_pow(mode, k * a, k * a),
                (true, true) => mode.q_pow(k * a),
                (true, false) => mode.q_pow(-k * a),
            };
            Some((c, key.clone()))
        }
        Atom::Partial(i) => {
            let i = *i;
            if key.get(i) == 0 {
                return None;
            }
            let out = key.bumped(i, -1);
            let c = if !dual {
                if i <= m {
                    // q^{−ε_i∗β}
                    mode.q_pow(-key.bos[..i - 1].iter().sum::<i64>())
                } else {
                    // q^{−|β|} (−q)^{−ε_j∗μ}
                    let j = i - m;
                    let s = key.fer[..j - 1].iter().sum::<i64>();
                    sign_pow(mode, s, -key.bos_degree() - s)
                }
            } else if i <= m {
                // (−q)^{ε_j∗ν}
                let s = key.bos[..i - 1].iter().sum::<i64>();
                sign_pow(mode, s, s)
            } else {
                // (−q)^{|ν|} q^{ε_j∗α}
                let j = i - m;
                let nu = key.bos_degree();
                sign_pow(mode, nu, nu + key.fer[..j - 1].iter().sum::<i64>())
            };
            if space.is_valid_key(&out) {
                Some((c, out))
            } else {
                None
            }
        }
    }
}

/// `scalar · A₁ ∘ A₂ ∘ ⋯ ∘ A_k`; the last atom acts first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorWord {
    pub scalar: ScalarQ,
    pub atoms: Vec<Atom>,
}

impl OperatorWord {
    pub fn new(scalar: ScalarQ, atoms: Vec<Atom>) -> Self {
        Self { scalar, atoms }
    }

    pub fn degree_shift(&self) -> i64 {
        self.atoms.iter().map(Atom::degree_shift).sum()
    }

    pub fn render(&self) -> String {
        let body = if self.atoms.is_empty() {
            "1".into()
        } else {
            self.atoms.iter().map(Atom::render).collect::<Vec<_>>().join(" ")
        };
        if self.scalar.is_one() {
            body
        } else {
            format!("({})*{}", self.scalar.render(), body)
        }
    }
}

/// A finite sum of operator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpSum {
    pub mode: Mode,
    pub words: Vec<OperatorWord>,
}

impl OpSum {
    pub fn zero(mode: &Mode) -> Self {
        Self { mode: mode.clone(), words: Vec::new() }
    }

    pub fn identity(mode: &Mode) -> Self {
        Self::word(mode, vec![])
    }

    pub fn word(mode: &Mode, atoms: Vec<Atom>) -> Self {
        Self { mode: mode.clone(), words: vec![OperatorWord::new(mode.one(), atoms)] }
    }

    pub fn atom(mode: &Mode, a: Atom) -> Self {
        Self::word(mode, vec![a])
    }

    pub fn scaled(mut self, c: &ScalarQ) -> Self {
        for w in &mut self.words {
            w.scalar = &w.scalar * c;
        }
        self
    }

    pub fn plus(mut self, other: OpSum) -> Self {
        self.words.extend(other.words);
        self
    }

    pub fn minus(self, other: OpSum) -> Self {
        let neg = -self.mode.one();
        self.plus(other.scaled(&neg))
    }

    /// `self ∘ other`.
    pub fn then(&self, other: &OpSum) -> Self {
        let mut words = Vec::new();
        for a in &self.words {
            for b in &other.words {
                let mut atoms = a.atoms.clone();
                atoms.extend(b.atoms.iter().cloned());
                words.push(OperatorWord::new(&a.scalar * &b.scalar, atoms));
            }
        }
        Self { mode: self.mode.clone(), words }
    }

    /// `self^k` under composition.
    pub fn power(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(&self.mode), |acc, _| acc.then(self))
    }

    pub fn render(&self) -> String {
        if self.words.is_empty() {
            return "0".into();
        }
        self.words.iter().map(OperatorWord::render).collect::<Vec<_>>().join(" + ")
    }

    pub fn validate(&self, space: &SpaceSpec) -> Result<()> {
        for w in &self.words {
            for a in &w.atoms {
                validate_atom(space, a)?;
            }
        }
        Ok(())
    }

    /// Image of one basis monomial.
    pub fn apply_key(&self, space: &SpaceSpec, key: &MultiIndex) -> Terms {
        let mut out = Terms::new();
        for w in &self.words {
            let mut cur: Vec<(ScalarQ, MultiIndex)> = vec![(w.scalar.clone(), key.clone())];
            for a in w.atoms.iter().rev() {
                cur = cur
                    .into_iter()
                    .filter_map(|(c, k)| apply_atom_key(space, a, &k).map(|(c2, k2)| (&c * &c2, k2)))
                    .collect();
                if cur.is_empty() {
                    break;
                }
            }
            for (c, k) in cur {
                add_term(&mut out, k, c);
            }
        }
        out
    }

    /// Linear extension of [`OpSum::apply_key`].
    pub fn apply_terms(&self, space: &SpaceSpec, terms: &Terms) -> Terms {
        let mut out = Terms::new();
        for (k, c) in terms {
            for (k2, c2) in self.apply_key(space, k) {
                add_term(&mut out, k2, c * &c2);
            }
        }
        out
    }
}

/// Applies an operator to a vector of the same space.
pub fn apply(op: &OpSum, u: &crate::superspaces::SuperVector) -> Result<crate::superspaces::SuperVector> {
    op.validate(&u.space)?;
    let terms = op.apply_terms(&u.space, &u.terms);
    Ok(crate::superspaces::SuperVector { space: u.space.clone(), terms })
}

pub fn render_terms(terms: &Terms) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(k, c)| format!("({})*{}", c.render(), k.render())).collect::<Vec<_>>().join(" + ")
}

/// Counterexample to an operator identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of an exhaustive comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub equal: bool,
    pub checked: usize,
    pub witness: Option<Witness>,
}

/// Effective degree bound: `t_max` capped at the top degree.
pub fn cap_degree(space: &SpaceSpec, t_max: i64) -> i64 {
    space.top_degree().map_or(t_max, |top| t_max.min(top))
}

/// Whether two operators agree on every basis monomial of degree `≤ t_max`.
pub fn operators_equal(space: &SpaceSpec, a: &OpSum, b: &OpSum, t_max: i64) -> Result<EqualityReport> {
    a.validate(space)?;
    b.validate(space)?;
    let mut checked = 0;
    for key in space.basis_up_to(cap_degree(space, t_max)) {
        checked += 1;
        let (la, lb) = (a.apply_key(space, &key), b.apply_key(space, &key));
        if la != lb {
            let witness = Witness { input: key.render(), lhs: render_terms(&la), rhs: render_terms(&lb) };
            return Ok(EqualityReport { equal: false, checked, witness: Some(witness) });
        }
    }
    Ok(EqualityReport { equal: true, checked, witness: None })
}

/// Product `u·v` of two term maps.
pub fn multiply_terms(space: &SpaceSpec, u: &Terms, v: &Terms) -> Terms {
    let mut out = Terms::new();
    for (a, ca) in u {
        for (b, cb) in v {
            if let Some((c, k)) = space.multiply_unchecked(a, b) {
                add_term(&mut out, k, &(ca * cb) * &c);
            }
        }
    }
    out
}

/// Net degree of a word-sum if all its words agree.
pub fn net_degree(op: &OpSum) -> Option<i64> {
    let mut it = op.words.iter().map(OperatorWord::degree_shift);
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

/// `Σ_{s<i} key_s` over flat positions.
pub fn eps_star(key: &MultiIndex, i: usize) -> i64 {
    let f = key.flat();
    let e: Vec<i64> = (1..=f.len()).map(|p| i64::from(p == i)).collect();
    star_flat(&e, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superspaces::SuperVector;
    use alloc::sync::Arc;

    fn omega(m: usize, n: usize) -> SpaceSpec {
        SpaceSpec::new(Family::Omega, m, n, Mode::Generic).unwrap()
    }

    #[test]
    fn partial_on_first_slot_has_unit_prefactor() {
        let s = omega(2, 1);
        let key = MultiIndex::new(vec![2, 3], vec![1]);
        let img = OpSum::atom(&s.mode, Atom::Partial(1)).apply_key(&s, &key);
        assert_eq!(img.len(), 1);
        assert!(img[&MultiIndex::new(vec![1, 3], vec![1])].is_one());
    }

    #[test]
    fn sigma_eigenvalue() {
        let s = omega(2, 1);
        let key = MultiIndex::new(vec![2, 3], vec![0]);
        let img = OpSum::atom(&s.mode, Atom::Sigma(2, 1)).apply_key(&s, &key);
        assert_eq!(img[&key], s.mode.q_pow(3));
    }

    #[test]
    fn weyl_commutator_i0() {
        let s = omega(2, 1);
        let g = &s.mode;
        for i in 1..=2 {
            let lhs = OpSum::word(g, vec![Atom::Partial(i), Atom::MultX(i)])
                .minus(OpSum::word(g, vec![Atom::MultX(i), Atom::Partial(i)]).scaled(&g.q()));
            let rhs = OpSum::atom(g, Atom::Sigma(i, -1));
            assert!(operators_equal(&s, &lhs, &rhs, 5).unwrap().equal);
        }
    }

    #[test]
    fn weyl_anticommutator_i1() {
        let s = omega(1, 2);
        let g = &s.mode;
        for i in 2..=3 {
            let lhs = OpSum::word(g, vec![Atom::Partial(i), Atom::MultX(i)])
                .plus(OpSum::word(g, vec![Atom::MultX(i), Atom::Partial(i)]));
            assert!(operators_equal(&s, &lhs, &OpSum::identity(g), 5).unwrap().equal);
        }
    }

    #[test]
    fn witness_reported() {
        let s = omega(1, 1);
        let g = &s.mode;
        let r = operators_equal(&s, &OpSum::atom(g, Atom::Sigma(1, 1)), &OpSum::identity(g), 3).unwrap();
        assert!(!r.equal);
        assert_eq!(r.witness.unwrap().input, "(1 | 0)");
    }

    #[test]
    fn tau_rejected_on_dual() {
        let s = SpaceSpec::new(Family::Dual, 1, 1, Mode::Generic).unwrap();
        let v = SuperVector::one(Arc::new(s.clone()));
        assert!(apply(&OpSum::atom(&s.mode, Atom::Tau(2)), &v).is_err());
        assert!(apply(&OpSum::atom(&s.mode, Atom::Theta(MultiIndex::zero(1, 1))), &v).is_err());
    }

    #[test]
    fn atom_parse_roundtrip() {
        for a in [
            Atom::Partial(3),
            Atom::MultX(1),
            Atom::MultXDivPow(2, 3),
            Atom::Sigma(1, -1),
            Atom::Sigma(2, 1),
            Atom::Tau(3),
            Atom::Parity,
            Atom::Theta(MultiIndex::new(vec![-1, 0], vec![1])),
            Atom::LeftMul(MultiIndex::new(vec![2], vec![])),
        ] {
            assert_eq!(Atom::parse(&a.render()).unwrap(), a);
        }
    }
}
