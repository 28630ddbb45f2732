//! Weights, highest-weight vectors and simplicity of graded components.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{generator_word, q_sign, Algebra, GeneratorSymbol};
use crate::error::{Error, Result};
use crate::indices::MultiIndex;
use crate::linalg::{nullspace, Echelon, SparseVec};
use crate::qarith::ScalarQ;
use crate::superspaces::{SpaceSpec, SuperVector, Terms};
use crate::weyl::OpSum;

/// A weight `λ` with `K_i` acting by `q_i^{λ_i}`, and the `σ` sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector {
    pub lambda: Vec<i64>,
    /// `0` for `σ = +1`, `1` for `σ = −1`.
    pub parity: i64,
}

impl WeightVector {
    pub fn render(&self) -> String {
        let body = self.lambda.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(",");
        format!("({body}){}", if self.parity == 1 { "-" } else { "+" })
    }
}

/// Weight of a basis monomial. On `Ω_q`: `λ = (α, μ)`; on the dual:
/// `λ = (ν, α)`, i.e. the key itself, since `K_i` scales by `q_i^{key_i}`.
pub fn monomial_weight(space: &SpaceSpec, key: &MultiIndex) -> WeightVector {
    WeightVector { lambda: key.flat(), parity: space.parity_of(key) }
}

/// The highest-weight vector and weight asserted for a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub key: MultiIndex,
    pub weight: Vec<i64>,
    /// The label in fundamental weights `w_k = ε_1 + ⋯ + ε_k`.
    pub label: String,
}

/// Splits `t = (i−1)(ℓ−1) + t_i` with `0 ≤ t_i ≤ ℓ−1` and `1 ≤ i ≤ slots`,
/// preferring `t_i = ℓ−1` only at the top.
fn split_steps(t: i64, ell: i64, slots: usize) -> (usize, i64) {
    let step = ell - 1;
    let i = (t / step) as usize + 1;
    if i > slots {
        (slots, step)
    } else {
        (i, t % step)
    }
}

fn fill(len: usize, i: usize, step: i64, ti: i64) -> Vec<i64> {
    let mut v = vec![0i64; len];
    for x in v.iter_mut().take(i - 1) {
        *x = step;
    }
    if i >= 1 && i <= len {
        v[i - 1] = ti;
    }
    v
}

/// Highest-weight data asserted for the degree-`t` component, when the
/// component is nonzero and a statement covers it.
pub fn claimed_highest_weight(space: &SpaceSpec, t: i64) -> Option<Claim> {
    let (m, n) = (space.m(), space.n());
    if t < 0 || space.basis_of_degree(t).is_empty() {
        return None;
    }
    let key = |bos: Vec<i64>, fer: Vec<i64>| MultiIndex::new(bos, fer);
    let ones = |len: usize, k: usize| (0..len).map(|x| i64::from(x < k)).collect::<Vec<_>>();
    let (k, label) = if space.family.is_omega() {
        match space.ell() {
            None => (key(fill(m, 1, 0, t), vec![0; n]), format!("{t}w1")),
            Some(l) => {
                let (l, big_n) = (l as i64, (m as i64) * (l as i64 - 1));
                if m >= 1 && t <= big_n {
                    let (i, ti) = split_steps(t, l, m);
                    (key(fill(m, i, l - 1, ti), vec![0; n]), format!("{}w{} + {}w{}", l - 1 - ti, i - 1, ti, i))
                } else {
                    let p = (t - big_n) as usize;
                    (key(vec![l - 1; m], ones(n, p)), format!("{}w{} + w{}", l - 2, m, m + p))
                }
            }
        }
    } else if t <= m as i64 {
        (key(ones(m, t as usize), vec![0; n]), format!("w{t}"))
    } else {
        let r = t - m as i64;
        match space.ell() {
            None => (key(vec![1; m], fill(n, 1, 0, r)), format!("w{m} + {r}e{}", m + 1)),
            Some(l) => {
                let (i, ti) = split_steps(r, l as i64, n);
                let fer = fill(n, i, l as i64 - 1, ti);
                let mut label = format!("w{m}");
                for (x, v) in fer.iter().enumerate().filter(|(_, v)| **v > 0) {
                    label.push_str(&format!(" + {v}e{}", m + 1 + x));
                }
                (key(vec![1; m], fer), label)
            }
        }
    };
    let weight = k.flat();
    Some(Claim { key: k, weight, label })
}

/// Simplicity verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Simple,
    NotSimple,
    /// The weight spaces are not all one-dimensional, so the criterion does not apply.
    Inconclusive,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Simple => "true",
            Verdict::NotSimple => "false",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Analysis of one graded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub space: String,
    pub t: i64,
    pub dim: usize,
    /// Basis of the joint kernel of all `E_j`.
    pub hw_basis: Vec<Terms>,
    /// Weight of each kernel vector, `None` if it mixes weights.
    pub hw_weights: Vec<Option<WeightVector>>,
    pub claimed: Option<Claim>,
    /// Whether the kernel is exactly the line of the claimed vector with the claimed weight.
    pub claim_matches: Option<bool>,
    /// Whether the toral eigenvalue tuples separate the monomials.
    pub separated: bool,
    pub simple: Verdict,
    pub witnesses: Vec<String>,
}

fn space_label(space: &SpaceSpec) -> String {
    let mode = match space.mode.order() {
        None => String::from("generic"),
        Some(d) => format!("d={d}"),
    };
    format!("{}({}|{}) {}", space.family.name(), space.m(), space.n(), mode)
}

/// Eigenvalue of a diagonal operator on a monomial.
fn eigenvalue(space: &SpaceSpec, op: &OpSum, key: &MultiIndex) -> Result<ScalarQ> {
    let img = op.apply_key(space, key);
    match img.len() {
        0 => Ok(space.mode.zero()),
        1 if img.contains_key(key) => Ok(img[key].clone()),
        _ => Err(Error::Internal(format!("toral element is not diagonal on {}", key.render()))),
    }
}

/// Closure of `seed` under the given operators; returns an echelon basis of the span.
pub fn cyclic_span(space: &SpaceSpec, ops: &[OpSum], seed: Terms) -> Echelon<MultiIndex> {
    let mut span = Echelon::new();
    let mut queue = vec![seed];
    while let Some(v) = queue.pop() {
        if !span.insert(v.clone()) {
            continue;
        }
        for op in ops {
            let img = op.apply_terms(space, &v);
            if !img.is_empty() {
                queue.push(img);
            }
        }
    }
    span
}

/// Rank and an echelon basis of the span of vectors of one degree.
pub fn span_rank(vectors: &[SuperVector]) -> Result<(usize, Vec<Terms>)> {
    let mut degree = None;
    let mut e = Echelon::new();
    for v in vectors {
        for k in v.terms.keys() {
            match degree {
                None => degree = Some(k.degree()),
                Some(d) if d != k.degree() => {
                    return Err(Error::InvalidParameter("vectors of mixed degrees".into()));
                }
                _ => {}
            }
        }
        if let Some(w) = vectors.first() {
            if w.space.family != v.space.family || w.space.m() != v.space.m() || w.space.n() != v.space.n() {
                return Err(Error::SpaceMismatch("vectors from different spaces".into()));
            }
        }
        e.insert(v.terms.clone());
    }
    Ok((e.rank(), e.basis()))
}

/// Highest weights and simplicity of the degree-`t` component.
pub fn component_report(space: &SpaceSpec, algebra: Algebra, t: i64) -> Result<ComponentReport> {
    super::check_family(space)?;
    if t < 0 || (space.family.is_restricted() && space.top_degree().is_some_and(|d| t > d)) {
        return Err(Error::OutOfRange(format!("degree {t} outside the range of {}", space.family.name())));
    }
    let len = space.m() + space.n();
    let basis = space.basis_of_degree(t);
    let dim = basis.len();
    let es: Vec<OpSum> = (1..len).map(|j| generator_word(GeneratorSymbol::E(j), space)).collect::<Result<_>>()?;
    let fs: Vec<OpSum> = (1..len).map(|j| generator_word(GeneratorSymbol::F(j), space)).collect::<Result<_>>()?;
    let mut witnesses = Vec::new();

    // Joint kernel of the E_j: rows indexed by (j, target monomial).
    let col: alloc::collections::BTreeMap<&MultiIndex, usize> = basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut rows: alloc::collections::BTreeMap<(usize, MultiIndex), Vec<ScalarQ>> = Default::default();
    for (j, e) in es.iter().enumerate() {
        for k in &basis {
            for (tk, c) in e.apply_key(space, k) {
                rows.entry((j, tk)).or_insert_with(|| vec![space.mode.zero(); dim])[col[k]] = c;
            }
        }
    }
    let matrix: Vec<Vec<ScalarQ>> = rows.into_values().collect();
    let kernel = nullspace(&space.mode, &matrix, dim);
    let hw_basis: Vec<Terms> = kernel
        .iter()
        .map(|v| basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())).collect())
        .collect();
    let hw_weights: Vec<Option<WeightVector>> = hw_basis
        .iter()
        .map(|v| {
            let mut ws = v.keys().map(|k| monomial_weight(space, k));
            let first = ws.next()?;
            ws.all(|w| w == first).then_some(first)
        })
        .collect();

    // Toral eigenvalue tuples: distinct across the component or the verdict is inconclusive.
    let mut toral: Vec<OpSum> = match algebra {
        Algebra::Gl => (1..=len).map(|i| generator_word(GeneratorSymbol::K(i), space)).collect::<Result<_>>()?,
        Algebra::Sl => (1..len).map(|j| generator_word(GeneratorSymbol::ScriptK(j), space)).collect::<Result<_>>()?,
    };
    toral.push(generator_word(GeneratorSymbol::Sigma, space)?);
    let mut tuples: Vec<(Vec<ScalarQ>, &MultiIndex)> = Vec::with_capacity(dim);
    for k in &basis {
        let tuple = toral.iter().map(|op| eigenvalue(space, op, k)).collect::<Result<Vec<_>>>()?;
        if algebra == Algebra::Gl {
            let w = monomial_weight(space, k);
            for (i, c) in tuple.iter().take(len).enumerate() {
                if *c != space.mode.q_pow(q_sign(space, i + 1) * w.lambda[i]) {
                    return Err(Error::Internal(format!("weight of {} disagrees with K{}", k.render(), i + 1)));
                }
            }
        }
        tuples.push((tuple, k));
    }
    let clash = (0..tuples.len()).flat_map(|a| (a + 1..tuples.len()).map(move |b| (a, b))).find(|&(a, b)| tuples[a].0 == tuples[b].0);
    let separated = clash.is_none();
    if let Some((a, b)) = clash {
        witnesses.push(format!("monomials {} and {} share a weight", tuples[a].1.render(), tuples[b].1.render()));
    }

    let simple = if !separated {
        Verdict::Inconclusive
    } else {
        let ops: Vec<OpSum> = es.iter().chain(&fs).cloned().collect();
        let mut verdict = Verdict::Simple;
        for k in &basis {
            let r = cyclic_span(space, &ops, SparseVec::from([(k.clone(), space.mode.one())])).rank();
            if r < dim {
                witnesses.push(format!("seed {} generates a subspace of dimension {r} < {dim}", k.render()));
                verdict = Verdict::NotSimple;
                break;
            }
        }
        verdict
    };

    let claimed = claimed_highest_weight(space, t);
    let claim_matches = claimed.as_ref().map(|c| {
        hw_basis.len() == 1
            && hw_basis[0].len() == 1
            && hw_basis[0].contains_key(&c.key)
            && hw_weights[0].as_ref().is_some_and(|w| w.lambda == c.weight)
    });
    if claim_matches == Some(false) {
        witnesses.push(format!("highest-weight space has dimension {}", hw_basis.len()));
    }
    Ok(ComponentReport {
        space: space_label(space),
        t,
        dim,
        hw_basis,
        hw_weights,
        claimed,
        claim_matches,
        separated,
        simple,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::Mode;
    use crate::superspaces::Family;

    #[test]
    fn generic_omega_highest_weight() {
        let s = SpaceSpec::new(Family::Omega, 2, 1, Mode::Generic).unwrap();
        for t in 0..=3 {
            let r = component_report(&s, Algebra::Gl, t).unwrap();
            assert_eq!(r.claim_matches, Some(true), "{r:?}");
            assert_eq!(r.simple, Verdict::Simple);
            assert_eq!(r.dim as u128, super::super::dim_formula(&s, t).unwrap());
        }
    }

    #[test]
    fn restricted_top_claim() {
        let s = SpaceSpec::new(Family::OmegaRestricted, 2, 1, Mode::root_of_unity(3).unwrap()).unwrap();
        let c = claimed_highest_weight(&s, 5).unwrap();
        assert_eq!(c.key, MultiIndex::new(vec![2, 2], vec![1]));
        assert_eq!(c.label, "1w2 + w3");
        // The overlap t = N: both readings give (ℓ−1)w_m.
        let c = claimed_highest_weight(&s, 4).unwrap();
        assert_eq!(c.key, MultiIndex::new(vec![2, 2], vec![0]));
    }

    #[test]
    fn span_rank_rejects_mixed_degrees() {
        let s = alloc::sync::Arc::new(SpaceSpec::new(Family::Omega, 1, 1, Mode::Generic).unwrap());
        let a = SuperVector::basis(s.clone(), MultiIndex::new(vec![1], vec![0])).unwrap();
        let b = SuperVector::basis(s.clone(), MultiIndex::new(vec![2], vec![0])).unwrap();
        assert!(span_rank(&[a.clone(), b]).is_err());
        let c = a.scale(&s.mode.q());
        assert_eq!(span_rank(&[a, c]).unwrap().0, 1);
    }
}
