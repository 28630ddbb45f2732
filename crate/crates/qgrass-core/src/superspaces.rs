//! The quantum superspaces: affine `A_q^{m|n}`, the Grassmann superalgebra
//! `Ω_q(m|n) = A_q(m) ⊗ Λ_{q^{-1}}(n)` with its restricted quotient, and the
//! dual `Ω_q^!(m|n) = Λ_q(m) ⊗ A_{q^{-1}}(n)` with its restricted quotient.
//!
//! Keys are position-based. In `Ω` the `bos` slots hold divided-power
//! exponents and the `fer` slots hold exterior exponents in `{0,1}`. In the
//! dual the roles swap: `bos` slots are exterior, `fer` slots divided powers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::indices::{star_flat, MultiIndex, Shape};
use crate::qarith::{char_of, q_binom_laurent, LaurentPoly, Mode, ScalarQ};

/// Which superspace a [`SpaceSpec`] describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Affine,
    Omega,
    OmegaRestricted,
    Dual,
    DualRestricted,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Affine => "affine",
            Family::Omega => "omega",
            Family::OmegaRestricted => "omega-restricted",
            Family::Dual => "dual",
            Family::DualRestricted => "dual-restricted",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "affine" => Family::Affine,
            "omega" => Family::Omega,
            "omega-restricted" => Family::OmegaRestricted,
            "dual" => Family::Dual,
            "dual-restricted" => Family::DualRestricted,
            _ => return Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        })
    }

    pub fn is_restricted(&self) -> bool {
        matches!(self, Family::OmegaRestricted | Family::DualRestricted)
    }

    /// `Ω` side (carries σ_i, τ_i, Θ and ∂_i atoms).
    pub fn is_omega(&self) -> bool {
        matches!(self, Family::Omega | Family::OmegaRestricted)
    }

    pub fn is_dual(&self) -> bool {
        matches!(self, Family::Dual | Family::DualRestricted)
    }
}

const BINOM_TABLE: usize = 24;

/// A validated superspace: family, shape and coefficient mode.
#[derive(Clone, Debug)]
pub struct SpaceSpec {
    pub family: Family,
    pub shape: Shape,
    pub mode: Mode,
    /// `binoms[s][r] = [s over r]` for `s < BINOM_TABLE`.
    binoms: Arc<Vec<Vec<ScalarQ>>>,
}

impl PartialEq for SpaceSpec {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.shape == other.shape && self.mode == other.mode
    }
}

impl Eq for SpaceSpec {}

impl SpaceSpec {
    /// Builds a space; restricted families need `char(q) = ℓ ≥ 3`.
    pub fn new(family: Family, m: usize, n: usize, mode: Mode) -> Result<Self> {
        let shape = if family.is_restricted() {
            let prof = char_of(&mode)?;
            if prof.ell < 3 {
                return Err(Error::InvalidParameter(format!(
                    "{} needs char(q) = l >= 3 (q is {})",
                    family.name(),
                    if prof.ell == 0 { "generic".into() } else { format!("of char {}", prof.ell) }
                )));
            }
            Shape::restricted(m, n, prof.ell)
        } else {
            if let Mode::RootOfUnity(_) = mode {
                char_of(&mode)?;
            }
            Shape::new(m, n)
        };
        let binoms = pascal_rows(BINOM_TABLE)
            .iter()
            .map(|row| row.iter().map(|p| mode.laurent(p)).collect())
            .collect();
        Ok(Self { family, shape, mode, binoms: Arc::new(binoms) })
    }

    pub fn m(&self) -> usize {
        self.shape.m
    }

    pub fn n(&self) -> usize {
        self.shape.n
    }

    /// `ℓ` for the restricted families.
    pub fn ell(&self) -> Option<u32> {
        self.shape.restricted_ell
    }

    /// Balanced `[s over r]` for `0 ≤ r ≤ s`.
    pub fn binom(&self, s: i64, r: i64) -> ScalarQ {
        if r < 0 || r > s {
            return self.mode.zero();
        }
        match self.binoms.get(s as usize) {
            Some(row) => row[r as usize].clone(),
            None => self.mode.laurent(&q_binom_laurent(s, r)),
        }
    }

    /// Per-position exponent caps (inclusive); `None` means unbounded.
    pub fn slot_caps(&self) -> Vec<Option<i64>> {
        let (m, n) = (self.m(), self.n());
        let ell = self.ell().map(|l| l as i64 - 1);
        let (bos, fer) = match self.family {
            Family::Affine => (None, Some(1)),
            Family::Omega | Family::OmegaRestricted => (ell, Some(1)),
            Family::Dual | Family::DualRestricted => (Some(1), ell),
        };
        let mut caps = vec![bos; m];
        caps.extend(vec![fer; n]);
        caps
    }

    /// Whether `key` is a basis monomial of this space.
    pub fn is_valid_key(&self, key: &MultiIndex) -> bool {
        key.m() == self.m()
            && key.n() == self.n()
            && key
                .flat()
                .iter()
                .zip(self.slot_caps())
                .all(|(&a, cap)| a >= 0 && cap.is_none_or(|c| a <= c))
    }

    pub fn check_key(&self, key: &MultiIndex) -> Result<()> {
        if key.m() != self.m() || key.n() != self.n() {
            return Err(Error::ShapeMismatch(format!(
                "key {} does not have shape ({}|{})",
                key.render(),
                self.m(),
                self.n()
            )));
        }
        if !self.is_valid_key(key) {
            return Err(Error::OutOfRange(format!("{} is not a basis key of {}", key.render(), self.family.name())));
        }
        Ok(())
    }

    /// Highest nonzero degree, or `None` when the space is infinite.
    pub fn top_degree(&self) -> Option<i64> {
        let caps = self.slot_caps();
        caps.iter().try_fold(0i64, |acc, c| c.map(|c| acc + c))
    }

    /// Sorted basis monomials of degree `t`.
    pub fn basis_of_degree(&self, t: i64) -> Vec<MultiIndex> {
        let caps = self.slot_caps();
        let mut out = Vec::new();
        if t < 0 {
            return out;
        }
        let mut cur = vec![0i64; caps.len()];
        compositions(&caps, 0, t, &mut cur, &mut |v| out.push(MultiIndex::from_flat(self.m(), v)));
        out.sort();
        out
    }

    /// Basis monomials of degree `0..=t_max`, grouped by degree.
    pub fn basis_up_to(&self, t_max: i64) -> Vec<MultiIndex> {
        (0..=t_max).flat_map(|t| self.basis_of_degree(t)).collect()
    }

    pub fn unit_key(&self) -> MultiIndex {
        MultiIndex::zero(self.m(), self.n())
    }

    /// Parity of a basis monomial: the degree of its odd part mod 2.
    ///
    /// The odd part sits in the `fer` slots for every family.
    pub fn parity_of(&self, key: &MultiIndex) -> i64 {
        key.fer_degree().rem_euclid(2)
    }

    /// `q^e (−1)^s` as a scalar.
    pub fn signed_q_pow(&self, sign: i64, e: i64) -> ScalarQ {
        let v = self.mode.q_pow(e);
        if sign.rem_euclid(2) == 1 {
            -v
        } else {
            v
        }
    }

    /// Product of two basis monomials: `Some((c, key))` or `None` for zero.
    pub fn multiply_monomials(&self, a: &MultiIndex, b: &MultiIndex) -> Result<Option<(ScalarQ, MultiIndex)>> {
        self.check_key(a)?;
        self.check_key(b)?;
        Ok(self.multiply_unchecked(a, b))
    }

    pub(crate) fn multiply_unchecked(&self, a: &MultiIndex, b: &MultiIndex) -> Option<(ScalarQ, MultiIndex)> {
        let sum = a.add(b);
        if !self.is_valid_key(&sum) {
            return None;
        }
        let (mut sign, mut e) = (0i64, 0i64);
        let divided_slots: Option<(&[i64], &[i64])> = match self.family {
            Family::Affine => {
                sign += star_flat(&a.fer, &b.fer);
                e += star_flat(&a.flat(), &b.flat());
                None
            }
            Family::Omega | Family::OmegaRestricted => {
                // q^{|μ||β|} · q^{α∗β}[α+β over α] · (−q)^{μ∗ν}
                let mn = star_flat(&a.fer, &b.fer);
                e += a.fer_degree() * b.bos_degree() + star_flat(&a.bos, &b.bos) + mn;
                sign += mn;
                Some((&a.bos, &b.bos))
            }
            Family::Dual | Family::DualRestricted => {
                // (−q)^{−|α||ν|} · (−q)^{−μ∗ν} · q^{−α∗β}[α+β over α]
                let cross = a.fer_degree() * b.bos_degree();
                let mn = star_flat(&a.bos, &b.bos);
                e -= cross + mn + star_flat(&a.fer, &b.fer);
                sign += cross + mn;
                Some((&a.fer, &b.fer))
            }
        };
        let mut c = self.signed_q_pow(sign, e);
        if let Some((x, y)) = divided_slots {
            for (&xi, &yi) in x.iter().zip(y) {
                if xi > 0 && yi > 0 {
                    c = &c * &self.binom(xi + yi, xi);
                }
            }
        }
        if c.is_zero() {
            None
        } else {
            Some((c, sum))
        }
    }
}

/// Rows `0..rows` of balanced binomials via `[s over r] = v^{s−r}[s−1 over r−1] + v^{-r}[s−1 over r]`.
fn pascal_rows(rows: usize) -> Vec<Vec<LaurentPoly>> {
    let mut out: Vec<Vec<LaurentPoly>> = Vec::with_capacity(rows);
    for s in 0..rows {
        let mut row = vec![LaurentPoly::one(); s + 1];
        for r in 1..s {
            let prev = &out[s - 1];
            row[r] = &prev[r - 1].shift((s - r) as i64) + &prev[r].shift(-(r as i64));
        }
        out.push(row);
    }
    out
}

fn compositions(caps: &[Option<i64>], pos: usize, left: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if pos == caps.len() {
        if left == 0 {
            f(cur);
        }
        return;
    }
    let rest_cap: Option<i64> = caps[pos + 1..].iter().try_fold(0i64, |acc, c| c.map(|c| acc + c));
    let hi = caps[pos].map_or(left, |c| c.min(left));
    for a in 0..=hi {
        if rest_cap.is_some_and(|r| left - a > r) {
            continue;
        }
        cur[pos] = a;
        compositions(caps, pos + 1, left - a, cur, f);
    }
    cur[pos] = 0;
}

/// Sparse coefficient map; zero coefficients are never stored.
pub type Terms = BTreeMap<MultiIndex, ScalarQ>;

/// Adds `c · key` into `terms`, dropping the entry if it cancels.
pub fn add_term(terms: &mut Terms, key: MultiIndex, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(&key) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                terms.remove(&key);
            }
        }
        None => {
            terms.insert(key, c);
        }
    }
}

/// An element of a superspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperVector {
    pub space: Arc<SpaceSpec>,
    pub terms: Terms,
}

impl SuperVector {
    pub fn zero(space: Arc<SpaceSpec>) -> Self {
        Self { space, terms: Terms::new() }
    }

    pub fn monomial(space: Arc<SpaceSpec>, key: MultiIndex, c: ScalarQ) -> Result<Self> {
        space.check_key(&key)?;
        let mut v = Self::zero(space);
        add_term(&mut v.terms, key, c);
        Ok(v)
    }

    pub fn basis(space: Arc<SpaceSpec>, key: MultiIndex) -> Result<Self> {
        let one = space.mode.one();
        Self::monomial(space, key, one)
    }

    pub fn one(space: Arc<SpaceSpec>) -> Self {
        let key = space.unit_key();
        Self::basis(space, key).expect("unit is a basis key")
    }

    pub fn from_terms(space: Arc<SpaceSpec>, terms: impl IntoIterator<Item = (MultiIndex, ScalarQ)>) -> Result<Self> {
        let mut v = Self::zero(space);
        for (k, c) in terms {
            v.space.check_key(&k)?;
            add_term(&mut v.terms, k, c);
        }
        Ok(v)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch(format!(
                "{}({}|{}) vs {}({}|{})",
                self.space.family.name(),
                self.space.m(),
                self.space.n(),
                other.space.family.name(),
                other.space.m(),
                other.space.n()
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-&self.space.mode.one()))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut out = Self::zero(self.space.clone());
        for (k, v) in &self.terms {
            add_term(&mut out.terms, k.clone(), v * c);
        }
        out
    }

    /// Homogeneous component of degree `t`.
    pub fn degree_part(&self, t: i64) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| k.degree() == t).map(|(k, c)| (k.clone(), c.clone()));
        Self { space: self.space.clone(), terms: terms.collect() }
    }

    /// `(key, coefficient)` pairs in canonical text form.
    pub fn render_terms(&self) -> Vec<(String, String)> {
        self.terms.iter().map(|(k, c)| (k.render(), c.render())).collect()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(k, c)| format!("({})*x{}", c.render(), k.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear extension of the monomial product.
pub fn multiply(u: &SuperVector, v: &SuperVector) -> Result<SuperVector> {
    u.same_space(v)?;
    let sp = &u.space;
    let mut out = SuperVector::zero(sp.clone());
    for (a, ca) in &u.terms {
        for (b, cb) in &v.terms {
            if let Some((c, k)) = sp.multiply_unchecked(a, b) {
                add_term(&mut out.terms, k, &(ca * cb) * &c);
            }
        }
    }
    Ok(out)
}

/// The parity operator: `τ` on `Ω`, `τ′` on the dual, `(−1)^{|μ|}` on `A_q^{m|n}`.
pub fn parity_map(u: &SuperVector) -> SuperVector {
    let mut out = SuperVector::zero(u.space.clone());
    for (k, c) in &u.terms {
        let c = if u.space.parity_of(k) == 1 { -c } else { c.clone() };
        add_term(&mut out.terms, k.clone(), c);
    }
    out
}

/// Basis of the degree-`t` component.
pub fn basis_of_degree(space: &SpaceSpec, t: i64) -> Vec<MultiIndex> {
    space.basis_of_degree(t)
}

/// The set of degrees with nonzero components, up to `t_max`.
pub fn nonzero_degrees(space: &SpaceSpec, t_max: i64) -> BTreeSet<i64> {
    (0..=t_max).filter(|&t| !space.basis_of_degree(t).is_empty()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(f: Family, m: usize, n: usize) -> Arc<SpaceSpec> {
        Arc::new(SpaceSpec::new(f, m, n, Mode::Generic).unwrap())
    }

    fn mi(b: &[i64], f: &[i64]) -> MultiIndex {
        MultiIndex::new(b.to_vec(), f.to_vec())
    }

    #[test]
    fn omega_divided_powers() {
        let s = sp(Family::Omega, 1, 0);
        let (c, k) = s.multiply_monomials(&mi(&[1], &[]), &mi(&[1], &[])).unwrap().unwrap();
        assert_eq!(k, mi(&[2], &[]));
        assert_eq!(c, s.binom(2, 1));
    }

    #[test]
    fn omega_exterior_relations() {
        let s = sp(Family::Omega, 0, 2);
        let x1 = mi(&[], &[1, 0]);
        let x2 = mi(&[], &[0, 1]);
        assert!(s.multiply_monomials(&x1, &x1).unwrap().is_none());
        let (c12, _) = s.multiply_monomials(&x1, &x2).unwrap().unwrap();
        let (c21, _) = s.multiply_monomials(&x2, &x1).unwrap().unwrap();
        // x_2 x_1 = −q x_1 x_2
        assert_eq!(c21, &c12 * &s.mode.neg_q_pow(1));
    }

    #[test]
    fn restricted_needs_root() {
        assert!(SpaceSpec::new(Family::OmegaRestricted, 1, 1, Mode::Generic).is_err());
        let m = Mode::root_of_unity(3).unwrap();
        let s = SpaceSpec::new(Family::OmegaRestricted, 2, 1, m).unwrap();
        assert_eq!(s.top_degree(), Some(5));
        assert_eq!(s.basis_of_degree(5), vec![mi(&[2, 2], &[1])]);
    }

    #[test]
    fn affine_relations() {
        let s = sp(Family::Affine, 1, 2);
        let v = |i| MultiIndex::eps(1, 2, i);
        let q = s.mode.q();
        let prod = |a: &MultiIndex, b: &MultiIndex| s.multiply_monomials(a, b).unwrap();
        // v_j v_i = q v_i v_j for i ∈ I₀
        let (c21, _) = prod(&v(2), &v(1)).unwrap();
        let (c12, _) = prod(&v(1), &v(2)).unwrap();
        assert_eq!(c21, &q * &c12);
        // v_j v_i = −q v_i v_j for odd i < j
        let (c32, _) = prod(&v(3), &v(2)).unwrap();
        let (c23, _) = prod(&v(2), &v(3)).unwrap();
        assert_eq!(c32, &s.mode.neg_q_pow(1) * &c23);
        assert!(prod(&v(3), &v(3)).is_none());
    }

    #[test]
    fn pascal_matches_product_formula() {
        let rows = pascal_rows(12);
        for (s, row) in rows.iter().enumerate() {
            for (r, p) in row.iter().enumerate() {
                assert_eq!(*p, q_binom_laurent(s as i64, r as i64));
            }
        }
    }

    #[test]
    fn dual_degrees() {
        let s = sp(Family::Dual, 2, 1);
        assert_eq!(s.basis_of_degree(3).len(), 4);
        assert!(s.top_degree().is_none());
        assert!(!s.is_valid_key(&mi(&[2, 0], &[0])));
    }
}
