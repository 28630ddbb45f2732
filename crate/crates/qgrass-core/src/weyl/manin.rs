//! The quadratic presentation of the quantum affine superspace `A_q^{m|n}`
//! compared with the algebra generated by the `∂_i` on `Ω_q(m|n)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{operators_equal, Atom, OpSum, Witness};
use crate::error::Result;
use crate::indices::MultiIndex;
use crate::linalg::{exact_rank, SparseVec};
use crate::qarith::{Mode, ScalarQ};
use crate::superspaces::{Family, SpaceSpec};

/// One defining relation of `A_q^{m|n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadraticRelation {
    /// `v_j v_i = c · v_i v_j` for `i < j`.
    Commute { i: usize, j: usize, c: ScalarQ },
    /// `v_i² = 0` for `i ∈ I₁`.
    Square { i: usize },
}

impl QuadraticRelation {
    pub fn render(&self, letter: &str) -> String {
        match self {
            QuadraticRelation::Commute { i, j, c } => format!("{letter}{j} {letter}{i} = ({}) {letter}{i} {letter}{j}", c.render()),
            QuadraticRelation::Square { i } => format!("{letter}{i}^2 = 0"),
        }
    }
}

/// The generating relations: `v_jv_i = q v_iv_j` for `i ∈ I₀`, `j > i`;
/// `v_i² = 0` and `v_jv_i = −q v_iv_j` for `i, j ∈ I₁`, `j > i`.
pub fn affine_relations(m: usize, n: usize, mode: &Mode) -> Vec<QuadraticRelation> {
    let len = m + n;
    let mut out = Vec::new();
    for i in 1..=len {
        if i > m {
            out.push(QuadraticRelation::Square { i });
        }
        for j in i + 1..=len {
            let c = if i <= m { mode.q() } else { -mode.q() };
            out.push(QuadraticRelation::Commute { i, j, c });
        }
    }
    out
}

/// One relation checked in both algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationPair {
    pub affine: String,
    pub partial: String,
    pub holds_affine: bool,
    pub holds_partial: bool,
    pub witness: Option<Witness>,
}

/// Graded dimensions in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDims {
    pub t: i64,
    /// Ordered monomials `v^α v^μ` of degree `t`.
    pub pbw: usize,
    /// Rank of all generator words of length `t` in `A_q^{m|n}`.
    pub affine_words: usize,
    /// Rank of all `∂`-words of length `t` as operators on `Ω_q`.
    pub partial_words: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManinReport {
    pub relations: Vec<RelationPair>,
    pub dims: Vec<DegreeDims>,
}

impl ManinReport {
    pub fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.holds_affine && r.holds_partial)
            && self.dims.iter().all(|d| d.pbw == d.affine_words && d.pbw == d.partial_words)
    }
}

fn words(len: usize, t: i64) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..t {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=len).map(move |g| {
                    let mut w2 = w.clone();
                    w2.push(g);
                    w2
                })
            })
            .collect();
    }
    out
}

/// Product of generator letters in `A_q^{m|n}`, left to right.
fn affine_word(sp: &SpaceSpec, w: &[usize]) -> Option<(ScalarQ, MultiIndex)> {
    let (m, n) = (sp.m(), sp.n());
    let mut acc = (sp.mode.one(), MultiIndex::zero(m, n));
    for &g in w {
        let (c, k) = sp.multiply_unchecked(&acc.1, &MultiIndex::eps(m, n, g))?;
        acc = (&acc.0 * &c, k);
    }
    Some(acc)
}

/// Checks each relation of `A_q^{m|n}` in the algebra itself and, under
/// `v_i ↦ ∂_i`, as an operator identity on `Ω_q(m|n)` up to degree `t_max`;
/// then compares graded dimensions for degrees `0..=t_max`.
pub fn manin_comparison(m: usize, n: usize, mode: &Mode, t_max: i64) -> Result<ManinReport> {
    let aff = SpaceSpec::new(Family::Affine, m, n, mode.clone())?;
    let om = SpaceSpec::new(Family::Omega, m, n, mode.clone())?;
    let len = m + n;
    let d = |i: usize| Atom::Partial(i);
    let mut relations = Vec::new();
    for rel in affine_relations(m, n, mode) {
        let (holds_affine, lhs, rhs) = match &rel {
            QuadraticRelation::Commute { i, j, c } => {
                let l = affine_word(&aff, &[*j, *i]);
                let r = affine_word(&aff, &[*i, *j]).map(|(x, k)| (&x * c, k));
                let ok = l == r;
                (ok, OpSum::word(mode, vec![d(*j), d(*i)]), OpSum::word(mode, vec![d(*i), d(*j)]).scaled(c))
            }
            QuadraticRelation::Square { i } => {
                (affine_word(&aff, &[*i, *i]).is_none(), OpSum::word(mode, vec![d(*i), d(*i)]), OpSum::zero(mode))
            }
        };
        let eq = operators_equal(&om, &lhs, &rhs, t_max)?;
        relations.push(RelationPair {
            affine: rel.render("v"),
            partial: rel.render("d"),
            holds_affine,
            holds_partial: eq.equal,
            witness: eq.witness,
        });
    }
    let mut dims = Vec::new();
    for t in 0..=t_max {
        let ws = words(len, t);
        let affine_words = exact_rank(ws.iter().map(|w| -> SparseVec<MultiIndex> {
            affine_word(&aff, w).map(|(c, k)| BTreeMap::from([(k, c)])).unwrap_or_default()
        }));
        // Each ∂-word as a matrix on the degree t and t+1 parts of Ω_q.
        let sources: Vec<MultiIndex> = om.basis_of_degree(t).into_iter().chain(om.basis_of_degree(t + 1)).collect();
        let partial_words = exact_rank(ws.iter().map(|w| -> SparseVec<(MultiIndex, MultiIndex)> {
            let op = OpSum::word(mode, w.iter().map(|&g| d(g)).collect());
            let mut v = SparseVec::new();
            for s in &sources {
                for (k, c) in op.apply_key(&om, s) {
                    v.insert((s.clone(), k), c);
                }
            }
            v
        }));
        dims.push(DegreeDims { t, pbw: aff.basis_of_degree(t).len(), affine_words, partial_words });
    }
    Ok(ManinReport { relations, dims })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_case() {
        let r = manin_comparison(1, 1, &Mode::Generic, 3).unwrap();
        assert!(r.all_pass(), "{r:?}");
        assert_eq!(r.relations.len(), 2);
        assert_eq!(r.dims.iter().map(|d| d.pbw).collect::<Vec<_>>(), vec![1, 2, 2, 2]);
    }

    #[test]
    fn wrong_coefficient_detected() {
        let om = SpaceSpec::new(Family::Omega, 2, 0, Mode::Generic).unwrap();
        let l = OpSum::word(&om.mode, vec![Atom::Partial(2), Atom::Partial(1)]);
        let r = OpSum::word(&om.mode, vec![Atom::Partial(1), Atom::Partial(2)]).scaled(&om.mode.q_pow(-1));
        assert!(!operators_equal(&om, &l, &r, 3).unwrap().equal);
    }
}
