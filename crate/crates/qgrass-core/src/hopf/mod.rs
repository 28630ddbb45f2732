//! Pointed Hopf algebras given by bosonization: a nilpotent part (a
//! quantum linear space or a quantum Grassmann superalgebra) smashed with
//! the group algebra of a finitely generated abelian group.
//!
//! Elements are kept in the normal form `x^a · g` (nilpotent part first).
//! Tensor powers use the componentwise product without super-signs.

#![allow(clippy::needless_range_loop)]

pub mod families;
pub mod group;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::indices::MultiIndex;
use crate::qarith::{Mode, ScalarQ};
use crate::superspaces::SpaceSpec;

pub use families::{build, divided_power_coproduct_check, partial_power_primitivity, rule_diff, HopfFamily};
pub use group::AbelianGroup;

/// `(−1)^neg · q^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedPow {
    pub neg: bool,
    pub exp: i64,
}

impl SignedPow {
    pub const ONE: SignedPow = SignedPow { neg: false, exp: 0 };

    pub fn q(exp: i64) -> Self {
        Self { neg: false, exp }
    }

    /// `(−q)^exp`.
    pub fn neg_q(exp: i64) -> Self {
        Self { neg: exp.rem_euclid(2) == 1, exp }
    }

    pub fn signed(neg: bool, exp: i64) -> Self {
        Self { neg, exp }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, o: Self) -> Self {
        Self { neg: self.neg ^ o.neg, exp: self.exp + o.exp }
    }

    pub fn pow(self, k: i64) -> Self {
        Self { neg: self.neg && k.rem_euclid(2) == 1, exp: self.exp * k }
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn eval(self, mode: &Mode) -> ScalarQ {
        let v = mode.q_pow(self.exp);
        if self.neg {
            -v
        } else {
            v
        }
    }

    pub fn render(self) -> String {
        let s = if self.neg { "-" } else { "" };
        match self.exp {
            0 => format!("{s}1"),
            1 => format!("{s}q"),
            e => format!("{s}q^{e}"),
        }
    }
}

/// The nilpotent (Nichols) part.
#[derive(Clone, Debug)]
pub enum NilPart {
    /// Quantum linear space: `y_k y_l = comm[k][l] y_l y_k`, `y_k^{cap_k} = 0`.
    Quantum { comm: Vec<Vec<SignedPow>>, caps: Vec<Option<i64>> },
    /// A quantum Grassmann superalgebra with its divided-power basis.
    Grassmann(Arc<SpaceSpec>),
}

impl NilPart {
    pub fn slots(&self) -> usize {
        match self {
            NilPart::Quantum { caps, .. } => caps.len(),
            NilPart::Grassmann(sp) => sp.m() + sp.n(),
        }
    }

    fn mul(&self, mode: &Mode, a: &[i64], b: &[i64]) -> Option<(ScalarQ, Vec<i64>)> {
        match self {
            NilPart::Quantum { comm, caps } => {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if sum.iter().zip(caps).any(|(s, c)| c.is_some_and(|c| *s >= c)) {
                    return None;
                }
                let mut c = SignedPow::ONE;
                for k in 0..b.len() {
                    if b[k] == 0 {
                        continue;
                    }
                    for l in k + 1..a.len() {
                        if a[l] != 0 {
                            c = c.mul(comm[l][k].pow(a[l] * b[k]));
                        }
                    }
                }
                Some((c.eval(mode), sum))
            }
            NilPart::Grassmann(sp) => {
                let m = sp.m();
                let (c, k) = sp.multiply_unchecked(&MultiIndex::from_flat(m, a), &MultiIndex::from_flat(m, b))?;
                Some((c, k.flat()))
            }
        }
    }

    /// Every basis exponent vector, or `None` for an infinite part.
    pub fn basis(&self) -> Option<Vec<Vec<i64>>> {
        match self {
            NilPart::Quantum { caps, .. } => {
                let mut out = vec![Vec::new()];
                for c in caps {
                    let c = (*c)?;
                    out = out
                        .into_iter()
                        .flat_map(|v: Vec<i64>| {
                            (0..c).map(move |e| {
                                let mut w = v.clone();
                                w.push(e);
                                w
                            })
                        })
                        .collect();
                }
                Some(out)
            }
            NilPart::Grassmann(sp) => {
                let top = sp.top_degree()?;
                Some(sp.basis_up_to(top).into_iter().map(|k| k.flat()).collect())
            }
        }
    }
}

/// A basis monomial `y^nil · g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub nil: Vec<i64>,
    pub group: Vec<i64>,
}

pub type Elem = BTreeMap<Key, ScalarQ>;
/// Elements of a tensor power, keyed by one [`Key`] per factor.
pub type Tensor = BTreeMap<Vec<Key>, ScalarQ>;

fn add_into<K: Ord>(map: &mut BTreeMap<K, ScalarQ>, k: K, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&k) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                map.remove(&k);
            }
        }
        None => {
            map.insert(k, c);
        }
    }
}

fn scaled<K: Ord + Clone>(map: &BTreeMap<K, ScalarQ>, c: &ScalarQ) -> BTreeMap<K, ScalarQ> {
    let mut out = BTreeMap::new();
    for (k, v) in map {
        add_into(&mut out, k.clone(), c * v);
    }
    out
}

fn combine<K: Ord + Clone>(a: &BTreeMap<K, ScalarQ>, b: &BTreeMap<K, ScalarQ>, sign: &ScalarQ) -> BTreeMap<K, ScalarQ> {
    let mut out = a.clone();
    for (k, v) in b {
        add_into(&mut out, k.clone(), sign * v);
    }
    out
}

/// One letter of a generator word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// Power of a nilpotent generator.
    Nil(usize, u32),
    /// Power of a group generator.
    Group(usize, i64),
}

pub type Word = Vec<Letter>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// `Δ(y) = y ⊗ a + b ⊗ y` for group-likes rendered in the label.
    SkewPrimitive(String),
    /// A central primitive divided power.
    DividedPowerPrimitive,
}

#[derive(Clone, Debug)]
pub struct NilGen {
    pub name: String,
    pub kind: GenKind,
    /// Exponent vector of the generator in the nilpotent part.
    pub key: Vec<i64>,
    pub delta: Vec<(ScalarQ, Word, Word)>,
    pub antipode: Vec<(ScalarQ, Word)>,
}

/// `Σ c·word = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(ScalarQ, Word)>,
}

/// A relation `Π g_j^{r_j} = 1` among the group generators.
#[derive(Clone, Debug)]
pub struct GroupRelation {
    pub name: String,
    pub exponents: Vec<i64>,
}

/// Number of PBW monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dim {
    Finite(u128),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub label: String,
    pub params: Vec<(String, String)>,
    pub mode: Mode,
    pub group_relations: Vec<GroupRelation>,
    /// The group used for normal forms: relations whose characters are trivial on every nilpotent generator.
    pub group: AbelianGroup,
    /// The group with every stated relation imposed.
    pub presented_group: AbelianGroup,
    pub nil: NilPart,
    pub nil_gens: Vec<NilGen>,
    /// `g_j y_k g_j^{-1} = chi[k][j] y_k` for the degree-one generator in slot `k`.
    pub chi: Vec<Vec<SignedPow>>,
    pub relations: Vec<Relation>,
    /// Informational identities verified alongside the axioms.
    pub notes: Vec<String>,
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub holds: bool,
    pub detail: Option<String>,
}

impl AxiomCheck {
    pub fn new(name: impl Into<String>, holds: bool, detail: Option<String>) -> Self {
        Self { name: name.into(), holds, detail }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    GeneratorsOnly,
    Exhaustive,
}

#[derive(Clone, Debug)]
pub struct HopfReport {
    pub label: String,
    pub depth: Depth,
    /// Hopf axioms and relation compatibility.
    pub checks: Vec<AxiomCheck>,
    /// Consistency of the presentation itself (characters against group relations).
    pub diagnostics: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn axioms_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn consistent(&self) -> bool {
        self.diagnostics.iter().all(|c| c.holds)
    }
}

impl HopfPresentation {
    /// Assembles a presentation, splitting group relations into those
    /// compatible with the characters and those that are not.
    #[allow(clippy::too_many_arguments)]
    pub fn assemble(
        label: String,
        params: Vec<(String, String)>,
        mode: Mode,
        group_names: Vec<String>,
        group_relations: Vec<GroupRelation>,
        nil: NilPart,
        nil_gens: Vec<NilGen>,
        chi: Vec<Vec<SignedPow>>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let k = group_names.len();
        if chi.len() != nil.slots() || chi.iter().any(|r| r.len() != k) {
            return Err(Error::ShapeMismatch("character table".into()));
        }
        let all: Vec<Vec<i64>> = group_relations.iter().map(|r| r.exponents.clone()).collect();
        let presented_group = AbelianGroup::new(group_names.clone(), &all);
        let mut pres = Self {
            label,
            params,
            mode,
            group_relations,
            group: presented_group.clone(),
            presented_group,
            nil,
            nil_gens,
            chi,
            relations,
            notes: Vec::new(),
        };
        let good: Vec<Vec<i64>> =
            pres.group_relations.iter().filter(|r| pres.character_trivial(&r.exponents)).map(|r| r.exponents.clone()).collect();
        pres.group = AbelianGroup::new(group_names, &good);
        Ok(pres)
    }

    /// Whether every slot character is trivial on the group element `g`.
    pub fn character_trivial(&self, g: &[i64]) -> bool {
        (0..self.chi.len()).all(|k| {
            let mut w = vec![0; self.chi.len()];
            w[k] = 1;
            self.chi_weight(&w, g).eval(&self.mode).is_one()
        })
    }

    /// `g · y^w · g^{-1} = chi_weight(w, g) · y^w`.
    pub fn chi_weight(&self, w: &[i64], g: &[i64]) -> SignedPow {
        let mut c = SignedPow::ONE;
        for (k, &wk) in w.iter().enumerate() {
            if wk == 0 {
                continue;
            }
            for (j, &gj) in g.iter().enumerate() {
                if gj != 0 {
                    c = c.mul(self.chi[k][j].pow(wk * gj));
                }
            }
        }
        c
    }

    pub fn one(&self) -> Elem {
        let mut e = Elem::new();
        e.insert(self.unit_key(), self.mode.one());
        e
    }

    pub fn unit_key(&self) -> Key {
        Key { nil: vec![0; self.nil.slots()], group: self.group.identity() }
    }

    pub fn mul_keys(&self, x: &Key, y: &Key) -> Option<(ScalarQ, Key)> {
        let (c, nil) = self.nil.mul(&self.mode, &x.nil, &y.nil)?;
        let chi = self.chi_weight(&y.nil, &x.group).eval(&self.mode);
        Some((&c * &chi, Key { nil, group: self.group.add(&x.group, &y.group) }))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::new();
        for (x, cx) in a {
            for (y, cy) in b {
                if let Some((c, k)) = self.mul_keys(x, y) {
                    add_into(&mut out, k, &(cx * cy) * &c);
                }
            }
        }
        out
    }

    /// Componentwise product in a tensor power.
    pub fn tmul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (xs, cx) in a {
            'inner: for (ys, cy) in b {
                let mut c = cx * cy;
                let mut ks = Vec::with_capacity(xs.len());
                for (x, y) in xs.iter().zip(ys) {
                    match self.mul_keys(x, y) {
                        Some((s, k)) => {
                            c = &c * &s;
                            ks.push(k);
                        }
                        None => continue 'inner,
                    }
                }
                add_into(&mut out, ks, c);
            }
        }
        out
    }

    fn tensor_one(&self, arity: usize) -> Tensor {
        let mut t = Tensor::new();
        t.insert(vec![self.unit_key(); arity], self.mode.one());
        t
    }

    fn gen_key(&self, k: usize) -> Key {
        Key { nil: self.nil_gens[k].key.clone(), group: self.group.identity() }
    }

    fn group_key(&self, j: usize, p: i64) -> Key {
        Key { nil: vec![0; self.nil.slots()], group: self.group.generator(j, p) }
    }

    fn elem_of(&self, key: Key) -> Elem {
        let mut e = Elem::new();
        e.insert(key, self.mode.one());
        e
    }

    pub fn letter(&self, l: &Letter) -> Elem {
        match *l {
            Letter::Group(j, p) => self.elem_of(self.group_key(j, p)),
            Letter::Nil(k, p) => {
                let g = self.elem_of(self.gen_key(k));
                let mut acc = self.one();
                for _ in 0..p {
                    acc = self.mul(&acc, &g);
                }
                acc
            }
        }
    }

    pub fn eval_word(&self, w: &[Letter]) -> Elem {
        w.iter().fold(self.one(), |acc, l| self.mul(&acc, &self.letter(l)))
    }

    pub fn eval_terms(&self, terms: &[(ScalarQ, Word)]) -> Elem {
        let mut out = Elem::new();
        for (c, w) in terms {
            out = combine(&out, &self.eval_word(w), c);
        }
        out
    }

    fn delta_letter(&self, l: &Letter) -> Tensor {
        match *l {
            Letter::Group(j, p) => {
                let k = self.group_key(j, p);
                let mut t = Tensor::new();
                t.insert(vec![k.clone(), k], self.mode.one());
                t
            }
            Letter::Nil(k, p) => {
                let mut d = Tensor::new();
                for (c, a, b) in &self.nil_gens[k].delta {
                    for (ka, ca) in self.eval_word(a) {
                        for (kb, cb) in self.eval_word(b) {
                            add_into(&mut d, vec![ka.clone(), kb], &(c * &ca) * &cb);
                        }
                    }
                }
                let mut acc = self.tensor_one(2);
                for _ in 0..p {
                    acc = self.tmul(&acc, &d);
                }
                acc
            }
        }
    }

    pub fn delta_word(&self, w: &[Letter]) -> Tensor {
        w.iter().fold(self.tensor_one(2), |acc, l| self.tmul(&acc, &self.delta_letter(l)))
    }

    fn antipode_letter(&self, l: &Letter) -> Elem {
        match *l {
            Letter::Group(j, p) => self.elem_of(self.group_key(j, -p)),
            Letter::Nil(k, p) => {
                let s = self.eval_terms(&self.nil_gens[k].antipode);
                let mut acc = self.one();
                for _ in 0..p {
                    acc = self.mul(&acc, &s);
                }
                acc
            }
        }
    }

    /// `S` extended anti-multiplicatively.
    pub fn antipode_word(&self, w: &[Letter]) -> Elem {
        w.iter().rev().fold(self.one(), |acc, l| self.mul(&acc, &self.antipode_letter(l)))
    }

    pub fn counit_word(&self, w: &[Letter]) -> ScalarQ {
        if w.iter().any(|l| matches!(l, Letter::Nil(_, p) if *p > 0)) {
            self.mode.zero()
        } else {
            self.mode.one()
        }
    }

    /// Writes a basis key as `coeff · word` in the generators.
    pub fn factor(&self, key: &Key) -> Result<(ScalarQ, Word)> {
        let mut word = Word::new();
        for (s, &a) in key.nil.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let deg1 = self.slot_generator(s, 1);
            let big = (2..=a).rev().find_map(|e| self.slot_generator(s, e).map(|k| (k, e)));
            match (deg1, big) {
                (_, Some((kb, e))) if a >= e => {
                    let d1 = deg1.ok_or_else(|| Error::Internal(format!("no degree-one generator in slot {s}")))?;
                    word.push(Letter::Nil(d1, (a % e) as u32));
                    word.push(Letter::Nil(kb, (a / e) as u32));
                }
                (Some(d1), _) => word.push(Letter::Nil(d1, a as u32)),
                (None, _) => return Err(Error::Internal(format!("no generator in slot {s}"))),
            }
        }
        for (j, &g) in key.group.iter().enumerate() {
            if g != 0 {
                word.push(Letter::Group(j, g));
            }
        }
        let val = self.eval_word(&word);
        let c = match (val.len(), val.get(key)) {
            (1, Some(c)) => c.clone(),
            _ => return Err(Error::Internal(format!("factorization failed for {:?}", key))),
        };
        let inv = c.inv().ok_or_else(|| Error::Internal("zero coefficient".into()))?;
        Ok((inv, word))
    }

    fn slot_generator(&self, s: usize, e: i64) -> Option<usize> {
        self.nil_gens.iter().position(|g| g.key.iter().enumerate().all(|(i, &x)| if i == s { x == e } else { x == 0 }))
    }

    pub fn delta_key(&self, key: &Key) -> Result<Tensor> {
        let (c, w) = self.factor(key)?;
        Ok(scaled(&self.delta_word(&w), &c))
    }

    pub fn antipode_key(&self, key: &Key) -> Result<Elem> {
        let (c, w) = self.factor(key)?;
        Ok(scaled(&self.antipode_word(&w), &c))
    }

    pub fn counit_key(&self, key: &Key) -> ScalarQ {
        if key.nil.iter().all(|&x| x == 0) {
            self.mode.one()
        } else {
            self.mode.zero()
        }
    }

    pub fn delta(&self, e: &Elem) -> Result<Tensor> {
        let mut out = Tensor::new();
        for (k, c) in e {
            out = combine(&out, &self.delta_key(k)?, c);
        }
        Ok(out)
    }

    pub fn antipode(&self, e: &Elem) -> Result<Elem> {
        let mut out = Elem::new();
        for (k, c) in e {
            out = combine(&out, &self.antipode_key(k)?, c);
        }
        Ok(out)
    }

    /// PBW basis of the normal-form algebra, `None` when infinite.
    pub fn basis(&self) -> Option<Vec<Key>> {
        let nil = self.nil.basis()?;
        let grp = self.group.elements()?;
        let mut out = Vec::new();
        for a in &nil {
            for g in &grp {
                out.push(Key { nil: a.clone(), group: g.clone() });
            }
        }
        Some(out)
    }

    /// Number of PBW monomials for the presented group.
    pub fn pbw_dim(&self) -> Dim {
        let nil = match &self.nil {
            NilPart::Quantum { caps, .. } => caps.iter().try_fold(1u128, |acc, c| c.map(|c| acc * c as u128)),
            NilPart::Grassmann(_) => self.nil.basis().map(|b| b.len() as u128),
        };
        match (nil, self.presented_group.order()) {
            (Some(a), Some(b)) => Dim::Finite(a * b),
            _ => Dim::Infinite,
        }
    }

    pub fn render_key(&self, k: &Key) -> String {
        let mut parts: Vec<String> = Vec::new();
        if k.nil.iter().any(|&x| x != 0) {
            parts.push(format!("y{:?}", k.nil));
        }
        for (j, &g) in k.group.iter().enumerate() {
            match g {
                0 => {}
                1 => parts.push(self.group.names[j].clone()),
                _ => parts.push(format!("{}^{}", self.group.names[j], g)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn render_elem(&self, e: &Elem) -> String {
        if e.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = e.iter().map(|(k, c)| format!("({})*{}", c.render(), self.render_key(k))).collect();
        parts.join(" + ")
    }

    pub fn render_tensor(&self, t: &Tensor) -> String {
        if t.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = t
            .iter()
            .map(|(ks, c)| {
                let fs: Vec<String> = ks.iter().map(|k| self.render_key(k)).collect();
                format!("({})*{}", c.render(), fs.join("(x)"))
            })
            .collect();
        parts.join(" + ")
    }

    pub fn render_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .iter()
            .map(|l| match *l {
                Letter::Nil(k, 1) => self.nil_gens[k].name.clone(),
                Letter::Nil(k, p) => format!("{}^{}", self.nil_gens[k].name, p),
                Letter::Group(j, 1) => self.group.names[j].clone(),
                Letter::Group(j, p) => format!("{}^{}", self.group.names[j], p),
            })
            .collect();
        parts.join(" ")
    }

    pub fn render_relation(&self, r: &Relation) -> String {
        let parts: Vec<String> = r.terms.iter().map(|(c, w)| format!("({})*{}", c.render(), self.render_word(w))).collect();
        format!("{} = 0", parts.join(" + "))
    }

    /// Extends `Δ` on the first (`first = true`) or last factor of a 2-tensor.
    fn delta_on_factor(&self, t: &Tensor, first: bool) -> Result<Tensor> {
        let mut out = Tensor::new();
        for (ks, c) in t {
            let (split, keep) = if first { (&ks[0], &ks[1]) } else { (&ks[1], &ks[0]) };
            for (pair, d) in self.delta_key(split)? {
                let key = if first {
                    vec![pair[0].clone(), pair[1].clone(), keep.clone()]
                } else {
                    vec![keep.clone(), pair[0].clone(), pair[1].clone()]
                };
                add_into(&mut out, key, c * &d);
            }
        }
        Ok(out)
    }

    /// Checks the axioms on one basis element.
    pub fn verify_element(&self, key: &Key) -> Result<Vec<AxiomCheck>> {
        let name = self.render_key(key);
        let x = self.elem_of(key.clone());
        let d = self.delta_key(key)?;
        let mut out = Vec::new();
        let lhs = self.delta_on_factor(&d, true)?;
        let rhs = self.delta_on_factor(&d, false)?;
        out.push(AxiomCheck::new(format!("coassociativity on {name}"), lhs == rhs, None));
        let mut left = Elem::new();
        let mut right = Elem::new();
        let mut sl = Elem::new();
        let mut sr = Elem::new();
        for (ks, c) in &d {
            add_into(&mut left, ks[1].clone(), c * &self.counit_key(&ks[0]));
            add_into(&mut right, ks[0].clone(), c * &self.counit_key(&ks[1]));
            let a = self.elem_of(ks[0].clone());
            let b = self.elem_of(ks[1].clone());
            sl = combine(&sl, &self.mul(&self.antipode_key(&ks[0])?, &b), c);
            sr = combine(&sr, &self.mul(&a, &self.antipode_key(&ks[1])?), c);
        }
        out.push(AxiomCheck::new(format!("counit on {name}"), left == x && right == x, None));
        let eps = scaled(&self.one(), &self.counit_key(key));
        out.push(AxiomCheck::new(
            format!("antipode on {name}"),
            sl == eps && sr == eps,
            if sl == eps && sr == eps { None } else { Some(format!("m(S⊗1)Δ = {}", self.render_elem(&sl))) },
        ));
        Ok(out)
    }

    /// Checks `Δ(xy) = Δ(x)Δ(y)` and `S(xy) = S(y)S(x)` on a pair of basis elements.
    pub fn verify_pair(&self, x: &Key, y: &Key) -> Result<AxiomCheck> {
        let prod = self.mul(&self.elem_of(x.clone()), &self.elem_of(y.clone()));
        let dx = self.delta_key(x)?;
        let dy = self.delta_key(y)?;
        let ok_d = self.delta(&prod)? == self.tmul(&dx, &dy);
        let ok_s = self.antipode(&prod)? == self.mul(&self.antipode_key(y)?, &self.antipode_key(x)?);
        Ok(AxiomCheck::new(
            format!("multiplicativity on ({}, {})", self.render_key(x), self.render_key(y)),
            ok_d && ok_s,
            None,
        ))
    }

    /// Relation compatibility: each relation holds in normal form and is
    /// annihilated by `Δ`, `ε` and `S`.
    pub fn verify_relations(&self) -> Vec<AxiomCheck> {
        let mut out = Vec::new();
        for r in &self.relations {
            let val = self.eval_terms(&r.terms);
            out.push(AxiomCheck::new(
                format!("{} holds", r.name),
                val.is_empty(),
                (!val.is_empty()).then(|| self.render_elem(&val)),
            ));
            let mut d = Tensor::new();
            let mut e = self.mode.zero();
            let mut s = Elem::new();
            for (c, w) in &r.terms {
                d = combine(&d, &self.delta_word(w), c);
                e = &e + &(c * &self.counit_word(w));
                s = combine(&s, &self.antipode_word(w), c);
            }
            out.push(AxiomCheck::new(
                format!("Δ respects {}", r.name),
                d.is_empty(),
                (!d.is_empty()).then(|| self.render_tensor(&d)),
            ));
            out.push(AxiomCheck::new(format!("ε respects {}", r.name), e.is_zero(), None));
            out.push(AxiomCheck::new(
                format!("S respects {}", r.name),
                s.is_empty(),
                (!s.is_empty()).then(|| self.render_elem(&s)),
            ));
        }
        out
    }

    /// Presentation consistency: group relations against characters and
    /// `c_kl c_lk = 1` for the nilpotent commutation scalars.
    pub fn diagnostics(&self) -> Vec<AxiomCheck> {
        let mut out = Vec::new();
        for r in &self.group_relations {
            let mut bad = Vec::new();
            for k in 0..self.chi.len() {
                let mut w = vec![0; self.chi.len()];
                w[k] = 1;
                let c = self.chi_weight(&w, &r.exponents);
                if !c.eval(&self.mode).is_one() {
                    bad.push(format!("acts on slot {} by {}", k + 1, c.render()));
                }
            }
            out.push(AxiomCheck::new(
                format!("group relation {} compatible with characters", r.name),
                bad.is_empty(),
                (!bad.is_empty()).then(|| bad.join("; ")),
            ));
        }
        if let NilPart::Quantum { comm, .. } = &self.nil {
            for k in 0..comm.len() {
                for l in k + 1..comm.len() {
                    let ok = comm[k][l].mul(comm[l][k]).eval(&self.mode).is_one();
                    out.push(AxiomCheck::new(format!("c_{}{} c_{}{} = 1", k + 1, l + 1, l + 1, k + 1), ok, None));
                }
            }
        }
        out
    }

    pub fn generator_keys(&self) -> Vec<Key> {
        let mut out: Vec<Key> = (0..self.nil_gens.len()).map(|k| self.gen_key(k)).collect();
        for j in 0..self.group.rank() {
            out.push(self.group_key(j, 1));
            out.push(self.group_key(j, -1));
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn verify_hopf(&self, depth: Depth) -> Result<HopfReport> {
        let mut checks = self.verify_relations();
        let keys = match depth {
            Depth::GeneratorsOnly => self.generator_keys(),
            Depth::Exhaustive => self
                .basis()
                .ok_or_else(|| Error::InvalidParameter(format!("{} is infinite; use generators-only", self.label)))?,
        };
        for k in &keys {
            checks.extend(self.verify_element(k)?);
        }
        if depth == Depth::Exhaustive {
            for x in &keys {
                for y in &keys {
                    checks.push(self.verify_pair(x, y)?);
                }
            }
        }
        Ok(HopfReport { label: self.label.clone(), depth, checks, diagnostics: self.diagnostics() })
    }
}
