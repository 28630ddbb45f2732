//! Normal forms in the smash product `Ω_q # 𝔇_q`: every word in `x`-letters,
//! group letters and `∂`-letters is rewritten as a combination of
//! `(x-monomial)·(group element)·(∂-monomial)`.
//!
//! The group part lives in the free abelian cover generated by the `σ_i`,
//! `τ_j` (`τ_j² = 1`) and `Θ(λ)`; relations among these are not imposed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{apply_atom_key, Atom, OpSum, OperatorWord};
use crate::error::{Error, Result};
use crate::indices::MultiIndex;
use crate::qarith::ScalarQ;
use crate::superspaces::{Family, SpaceSpec};

/// Exponents of `σ_1..σ_{m+n}`, of `τ_{m+1}..τ_{m+n}` (mod 2) and the `Θ` argument.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupPart {
    pub sigma: Vec<i64>,
    pub tau: Vec<i64>,
    pub theta: MultiIndex,
}

impl GroupPart {
    pub fn identity(m: usize, n: usize) -> Self {
        Self { sigma: vec![0; m + n], tau: vec![0; n], theta: MultiIndex::zero(m, n) }
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            sigma: self.sigma.iter().zip(&other.sigma).map(|(a, b)| a + b).collect(),
            tau: self.tau.iter().zip(&other.tau).map(|(a, b)| (a + b).rem_euclid(2)).collect(),
            theta: self.theta.add(&other.theta),
        }
    }

    /// The group letters, in a fixed order.
    pub fn atoms(&self) -> Vec<Atom> {
        let m = self.sigma.len() - self.tau.len();
        let mut out: Vec<Atom> =
            self.sigma.iter().enumerate().filter(|(_, e)| **e != 0).map(|(i, e)| Atom::Sigma(i + 1, *e)).collect();
        out.extend(self.tau.iter().enumerate().filter(|(_, e)| **e != 0).map(|(j, _)| Atom::Tau(m + j + 1)));
        if !self.theta.is_zero() {
            out.push(Atom::Theta(self.theta.clone()));
        }
        out
    }
}

/// One normal-form monomial `x^{key} · g · ∂^{d}`, where `∂^{d} = ∂_1^{d_1} ⋯ ∂_{m+n}^{d_{m+n}}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmashKey {
    pub x: MultiIndex,
    pub group: GroupPart,
    pub d: MultiIndex,
}

impl SmashKey {
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        if !self.x.is_zero() {
            out.push(Atom::LeftMul(self.x.clone()));
        }
        out.extend(self.group.atoms());
        for (i, &e) in self.d.flat().iter().enumerate() {
            out.extend((0..e).map(|_| Atom::Partial(i + 1)));
        }
        out
    }

    pub fn render(&self) -> String {
        let atoms = self.atoms();
        if atoms.is_empty() {
            return "1".into();
        }
        atoms.iter().map(Atom::render).collect::<Vec<_>>().join(" ")
    }
}

pub type NormalForm = BTreeMap<SmashKey, ScalarQ>;

fn add(nf: &mut NormalForm, k: SmashKey, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match nf.get_mut(&k) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                nf.remove(&k);
            }
        }
        None => {
            nf.insert(k, c);
        }
    }
}

fn check_space(space: &SpaceSpec) -> Result<()> {
    if space.family.is_omega() {
        Ok(())
    } else {
        Err(Error::SpaceMismatch(format!("smash product is defined over Omega, not {}", space.family.name())))
    }
}

/// Eigenvalue of a group element on a monomial.
fn eigen(space: &SpaceSpec, g: &GroupPart, key: &MultiIndex) -> ScalarQ {
    g.atoms().iter().fold(space.mode.one(), |acc, a| {
        let (c, _) = apply_atom_key(space, a, key).expect("group letters are diagonal");
        &acc * &c
    })
}

fn letter_group(space: &SpaceSpec, atom: &Atom) -> Option<GroupPart> {
    let (m, n) = (space.m(), space.n());
    let mut g = GroupPart::identity(m, n);
    match atom {
        Atom::Sigma(i, k) => g.sigma[i - 1] = *k,
        Atom::Tau(j) => g.tau[j - m - 1] = 1,
        Atom::Parity => g.tau.iter_mut().for_each(|t| *t = 1),
        Atom::Theta(l) => g.theta = l.clone(),
        _ => return None,
    }
    Some(g)
}

/// `∂`-monomial product `∂_i · ∂^{d}` through the quadratic relations.
fn partial_times(space: &SpaceSpec, i: usize, d: &MultiIndex) -> Option<(ScalarQ, MultiIndex)> {
    let (m, n) = (space.m(), space.n());
    let aff = SpaceSpec::new(Family::Affine, m, n, space.mode.clone()).expect("shape already valid");
    let (c, k) = aff.multiply_monomials(&MultiIndex::eps(m, n, i), d).expect("valid keys")?;
    // ∂_i^ℓ = 0 on the restricted space.
    match space.ell() {
        Some(l) if k.bos.iter().any(|&e| e >= l as i64) => None,
        _ => Some((c, k)),
    }
}

/// Left multiplication of a normal form by one letter.
fn left_letter(space: &SpaceSpec, atom: &Atom, nf: &NormalForm) -> NormalForm {
    let (m, n) = (space.m(), space.n());
    let mut out = NormalForm::new();
    let x_letter = match atom {
        Atom::MultX(i) => Some(MultiIndex::eps(m, n, *i)),
        Atom::MultXDivPow(i, p) => {
            let mut k = MultiIndex::zero(m, n);
            k.set(*i, *p as i64);
            Some(k)
        }
        Atom::LeftMul(k) => Some(k.clone()),
        _ => None,
    };
    if let Some(u) = x_letter {
        for (t, c) in nf {
            if let Some((c2, x)) = space.multiply_unchecked(&u, &t.x) {
                add(&mut out, SmashKey { x, ..t.clone() }, c * &c2);
            }
        }
        return out;
    }
    if let Some(h) = letter_group(space, atom) {
        for (t, c) in nf {
            let c2 = eigen(space, &h, &t.x);
            add(&mut out, SmashKey { group: h.mul(&t.group), ..t.clone() }, c * &c2);
        }
        return out;
    }
    let Atom::Partial(i) = atom else { unreachable!("all atom kinds handled") };
    let i = *i;
    // ∂_i ∘ L_u = L_{h(u)} ∘ ∂_i + L_{∂_i(u)} ∘ g′, with h = Θ(−ε_i)σ_i, g′ = σ_i^{-1}
    // on I₀ and h = Θ(−ε_i)τ_i, g′ = 1 on I₁.
    let mut h = GroupPart::identity(m, n);
    h.theta = MultiIndex::eps(m, n, i).scaled(-1);
    let mut gp = GroupPart::identity(m, n);
    if i <= m {
        h.sigma[i - 1] = 1;
        gp.sigma[i - 1] = -1;
    } else {
        h.tau[i - m - 1] = 1;
    }
    let e_i = MultiIndex::eps(m, n, i);
    for (t, c) in nf {
        if let Some((c3, d)) = partial_times(space, i, &t.d) {
            let c1 = &(&eigen(space, &h, &t.x) * &eigen(space, &t.group, &e_i)) * &c3;
            add(&mut out, SmashKey { d, ..t.clone() }, c * &c1);
        }
        if let Some((c4, x)) = apply_atom_key(space, &Atom::Partial(i), &t.x) {
            add(&mut out, SmashKey { x, group: gp.mul(&t.group), d: t.d.clone() }, c * &c4);
        }
    }
    out
}

/// The unit normal form.
pub fn unit(space: &SpaceSpec) -> NormalForm {
    let (m, n) = (space.m(), space.n());
    let k = SmashKey { x: MultiIndex::zero(m, n), group: GroupPart::identity(m, n), d: MultiIndex::zero(m, n) };
    NormalForm::from([(k, space.mode.one())])
}

/// Rewrites a word to `(x-monomial)·(group element)·(∂-monomial)` order.
pub fn smash_normal_form(space: &SpaceSpec, word: &OperatorWord) -> Result<NormalForm> {
    check_space(space)?;
    for a in &word.atoms {
        super::validate_atom(space, a)?;
    }
    let mut nf = unit(space);
    for a in word.atoms.iter().rev() {
        nf = left_letter(space, a, &nf);
    }
    Ok(nf.into_iter().map(|(k, c)| (k, &c * &word.scalar)).filter(|(_, c)| !c.is_zero()).collect())
}

/// Product of two normal forms.
pub fn smash_product(space: &SpaceSpec, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    check_space(space)?;
    let mut out = NormalForm::new();
    for (k, c) in a {
        let mut nf = b.clone();
        for atom in k.atoms().iter().rev() {
            nf = left_letter(space, atom, &nf);
        }
        for (k2, c2) in nf {
            add(&mut out, k2, c * &c2);
        }
    }
    Ok(out)
}

/// The operator a normal form denotes.
pub fn normal_form_op(space: &SpaceSpec, nf: &NormalForm) -> OpSum {
    let words = nf.iter().map(|(k, c)| OperatorWord::new(c.clone(), k.atoms())).collect();
    OpSum { mode: space.mode.clone(), words }
}

pub fn render_normal_form(nf: &NormalForm) -> String {
    if nf.is_empty() {
        return "0".into();
    }
    nf.iter().map(|(k, c)| format!("({})*{}", c.render(), k.render())).collect::<Vec<_>>().join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::Mode;
    use crate::weyl::operators_equal;

    fn omega(m: usize, n: usize, mode: Mode) -> SpaceSpec {
        SpaceSpec::new(Family::Omega, m, n, mode).unwrap()
    }

    fn nf(s: &SpaceSpec, atoms: Vec<Atom>) -> NormalForm {
        smash_normal_form(s, &OperatorWord::new(s.mode.one(), atoms)).unwrap()
    }

    #[test]
    fn partial_past_x() {
        let s = omega(1, 1, Mode::Generic);
        let got = nf(&s, vec![Atom::Partial(1), Atom::MultX(1)]);
        let mut want = nf(&s, vec![Atom::Sigma(1, -1)]);
        for (k, c) in nf(&s, vec![Atom::MultX(1), Atom::Partial(1)]) {
            add(&mut want, k, &c * &s.mode.q());
        }
        assert_eq!(got, want, "{}", render_normal_form(&got));
    }

    #[test]
    fn sigma_past_x_and_group_commutes() {
        let s = omega(2, 1, Mode::Generic);
        let got = nf(&s, vec![Atom::Sigma(1, 1), Atom::MultX(1)]);
        let want: NormalForm =
            nf(&s, vec![Atom::MultX(1), Atom::Sigma(1, 1)]).into_iter().map(|(k, c)| (k, &c * &s.mode.q())).collect();
        assert_eq!(got, want);
        let th = Atom::Theta(MultiIndex::eps(2, 1, 1));
        assert_eq!(nf(&s, vec![th.clone(), Atom::Sigma(2, 1)]), nf(&s, vec![Atom::Sigma(2, 1), th]));
    }

    #[test]
    fn normal_forms_agree_with_action() {
        for mode in [Mode::Generic, Mode::root_of_unity(3).unwrap()] {
            let fam = if mode.is_generic() { Family::Omega } else { Family::OmegaRestricted };
            let s = SpaceSpec::new(fam, 2, 1, mode).unwrap();
            let letters = [
                Atom::Partial(1),
                Atom::Partial(3),
                Atom::MultX(2),
                Atom::MultX(3),
                Atom::Sigma(3, 1),
                Atom::Tau(3),
                Atom::Partial(2),
                Atom::MultX(1),
                Atom::Theta(MultiIndex::new(vec![1, -1], vec![1])),
                Atom::Sigma(1, -1),
            ];
            for a in 0..letters.len() {
                for b in 0..letters.len() {
                    let c = (a * 7 + b * 3) % letters.len();
                    let w = OperatorWord::new(s.mode.one(), vec![letters[a].clone(), letters[b].clone(), letters[c].clone()]);
                    let form = smash_normal_form(&s, &w).unwrap();
                    let op = OpSum { mode: s.mode.clone(), words: vec![w.clone()] };
                    let r = operators_equal(&s, &op, &normal_form_op(&s, &form), 5).unwrap();
                    assert!(r.equal, "{} -> {}: {:?}", w.render(), render_normal_form(&form), r.witness);
                }
            }
        }
    }

    #[test]
    fn product_is_associative() {
        let s = omega(1, 2, Mode::Generic);
        let pieces: Vec<NormalForm> = [
            vec![Atom::Partial(1), Atom::MultX(2)],
            vec![Atom::MultX(1), Atom::Partial(3)],
            vec![Atom::Partial(2), Atom::Sigma(2, 1)],
            vec![Atom::MultX(3), Atom::Tau(2), Atom::Partial(1)],
        ]
        .into_iter()
        .map(|w| nf(&s, w))
        .collect();
        for a in &pieces {
            for b in &pieces {
                for c in &pieces {
                    let l = smash_product(&s, &smash_product(&s, a, b).unwrap(), c).unwrap();
                    let r = smash_product(&s, a, &smash_product(&s, b, c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn dual_rejected() {
        let s = SpaceSpec::new(Family::Dual, 1, 1, Mode::Generic).unwrap();
        assert!(smash_normal_form(&s, &OperatorWord::new(s.mode.one(), vec![])).is_err());
    }
}
