//! Multi-index bookkeeping: the star product, degrees and the bicharacter θ.
//!
//! Positions are numbered `1..=m+n` in the public API. Positions `1..=m`
//! form `I₀` and live in [`MultiIndex::bos`]; positions `m+1..=m+n` form
//! `I₁` and live in [`MultiIndex::fer`].

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::qarith::{Mode, ScalarQ};

/// Ranks `(m|n)` and an optional restriction `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub m: usize,
    pub n: usize,
    pub restricted_ell: Option<u32>,
}

impl Shape {
    pub fn new(m: usize, n: usize) -> Self {
        Self { m, n, restricted_ell: None }
    }

    pub fn restricted(m: usize, n: usize, ell: u32) -> Self {
        Self { m, n, restricted_ell: Some(ell) }
    }

    /// `|I| = m + n`.
    pub fn len(&self) -> usize {
        self.m + self.n
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether the 1-based position `i` lies in `I₀`.
    pub fn is_even(&self, i: usize) -> bool {
        i >= 1 && i <= self.m
    }

    /// Whether the 1-based position `i` lies in `I₁`.
    pub fn is_odd(&self, i: usize) -> bool {
        i > self.m && i <= self.m + self.n
    }

    /// `J = {1, …, m+n−1}`.
    pub fn j_range(&self) -> core::ops::RangeInclusive<usize> {
        1..=self.len().saturating_sub(1)
    }

    pub fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::OutOfRange(format!("position {i} outside 1..={}", self.len())));
        }
        Ok(())
    }
}

/// An `(m|n)`-shaped integer tuple; a basis key or a general Θ-label.
///
/// The derived order compares `bos` first, then `fer`, lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex {
    pub bos: Vec<i64>,
    pub fer: Vec<i64>,
}

impl MultiIndex {
    pub fn new(bos: Vec<i64>, fer: Vec<i64>) -> Self {
        Self { bos, fer }
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Self { bos: vec![0; m], fer: vec![0; n] }
    }

    /// The unit vector `ε_i` for a 1-based position `i`.
    pub fn eps(m: usize, n: usize, i: usize) -> Self {
        let mut z = Self::zero(m, n);
        z.set(i, 1);
        z
    }

    /// Splits a flat `(m+n)`-tuple.
    pub fn from_flat(m: usize, flat: &[i64]) -> Self {
        Self { bos: flat[..m].to_vec(), fer: flat[m..].to_vec() }
    }

    pub fn m(&self) -> usize {
        self.bos.len()
    }

    pub fn n(&self) -> usize {
        self.fer.len()
    }

    pub fn flat(&self) -> Vec<i64> {
        let mut v = self.bos.clone();
        v.extend_from_slice(&self.fer);
        v
    }

    /// Entry at a 1-based position.
    pub fn get(&self, i: usize) -> i64 {
        let m = self.m();
        if i <= m {
            self.bos[i - 1]
        } else {
            self.fer[i - m - 1]
        }
    }

    pub fn set(&mut self, i: usize, val: i64) {
        let m = self.m();
        if i <= m {
            self.bos[i - 1] = val;
        } else {
            self.fer[i - m - 1] = val;
        }
    }

    /// Copy with `delta` added at position `i`.
    pub fn bumped(&self, i: usize, delta: i64) -> Self {
        let mut c = self.clone();
        c.set(i, c.get(i) + delta);
        c
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.m() == other.m() && self.n() == other.n()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            bos: self.bos.iter().zip(&other.bos).map(|(a, b)| a + b).collect(),
            fer: self.fer.iter().zip(&other.fer).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Self {
        Self {
            bos: self.bos.iter().map(|a| a * k).collect(),
            fer: self.fer.iter().map(|a| a * k).collect(),
        }
    }

    pub fn bos_degree(&self) -> i64 {
        self.bos.iter().sum()
    }

    pub fn fer_degree(&self) -> i64 {
        self.fer.iter().sum()
    }

    /// `|⟨α,μ⟩| = Σα_i + Σμ_j`.
    pub fn degree(&self) -> i64 {
        self.bos_degree() + self.fer_degree()
    }

    pub fn is_zero(&self) -> bool {
        self.bos.iter().chain(&self.fer).all(|&a| a == 0)
    }

    /// Renders as `(a1,...,am | f1,...,fn)`.
    pub fn render(&self) -> String {
        let join = |v: &[i64]| v.iter().map(|a| format!("{a}")).collect::<Vec<_>>().join(",");
        format!("({} | {})", join(&self.bos), join(&self.fer))
    }

    /// Parses the [`MultiIndex::render`] form.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse multi-index {s:?}"));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (b, f) = inner.split_once('|').ok_or_else(bad)?;
        let nums = |part: &str| -> Result<Vec<i64>> {
            let part = part.trim();
            if part.is_empty() {
                return Ok(Vec::new());
            }
            part.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| bad())).collect()
        };
        Ok(Self { bos: nums(b)?, fer: nums(f)? })
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn shape_check(a: &MultiIndex, b: &MultiIndex) -> Result<()> {
    if a.same_shape(b) {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("{} vs {}", a.render(), b.render())))
    }
}

/// `Σ_{j<i} a_i b_j` over a pair of flat tuples.
pub fn star_flat(a: &[i64], b: &[i64]) -> i64 {
    let mut acc = 0;
    let mut prefix = 0;
    for (ai, bi) in a.iter().zip(b) {
        acc += ai * prefix;
        prefix += bi;
    }
    acc
}

/// The star product over all `m+n` positions.
pub fn star(a: &MultiIndex, b: &MultiIndex) -> Result<i64> {
    shape_check(a, b)?;
    Ok(star_flat(&a.flat(), &b.flat()))
}

/// `θ(a,b) = (−1)^s q^e`, returned as `(s, e)`.
pub fn theta_exponents(a: &MultiIndex, b: &MultiIndex) -> Result<(i64, i64)> {
    shape_check(a, b)?;
    let (fa, fb) = (a.flat(), b.flat());
    let e = star_flat(&fa, &fb) - star_flat(&fb, &fa);
    let s = star_flat(&a.fer, &b.fer) - star_flat(&b.fer, &a.fer);
    Ok((s, e))
}

/// The bicharacter `θ` on `Z^m × Z^n`.
pub fn theta(a: &MultiIndex, b: &MultiIndex, mode: &Mode) -> Result<ScalarQ> {
    let (s, e) = theta_exponents(a, b)?;
    let v = mode.q_pow(e);
    Ok(if s.rem_euclid(2) == 1 { -v } else { v })
}

/// `θ(ε_i, ε_j)` for 1-based positions.
pub fn theta_eps(m: usize, n: usize, i: usize, j: usize, mode: &Mode) -> ScalarQ {
    theta(&MultiIndex::eps(m, n, i), &MultiIndex::eps(m, n, j), mode).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(b: &[i64], f: &[i64]) -> MultiIndex {
        MultiIndex::new(b.to_vec(), f.to_vec())
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&mi(&[1, 2], &[]), &mi(&[3, 1], &[])).unwrap(), 6);
        let beta = mi(&[4, 5, 7], &[]);
        assert_eq!(star(&MultiIndex::eps(3, 0, 2), &beta).unwrap(), 4);
        assert_eq!(star(&MultiIndex::zero(3, 0), &beta).unwrap(), 0);
        assert!(star(&mi(&[1], &[]), &mi(&[1, 2], &[])).is_err());
    }

    #[test]
    fn extended_star_splits() {
        // ⟨α,μ⟩∗⟨β,ν⟩ = α∗β + μ∗ν + |μ||β|
        let a = mi(&[1, 2], &[1, 0, 1]);
        let b = mi(&[3, 1], &[0, 1, 1]);
        let lhs = star(&a, &b).unwrap();
        let rhs = star_flat(&a.bos, &b.bos) + star_flat(&a.fer, &b.fer) + a.fer_degree() * b.bos_degree();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_examples() {
        let g = Mode::Generic;
        for i in 1..=4 {
            assert!(theta_eps(2, 2, i, i, &g).is_one());
        }
        assert_eq!(theta_eps(2, 2, 1, 2, &g), g.q_pow(-1));
        assert_eq!(theta_eps(2, 2, 3, 4, &g), g.neg_q_pow(-1));
    }

    #[test]
    fn render_roundtrip() {
        let a = mi(&[1, -2], &[0, 1]);
        assert_eq!(a.render(), "(1,-2 | 0,1)");
        assert_eq!(MultiIndex::parse(&a.render()).unwrap(), a);
        let e = mi(&[], &[1]);
        assert_eq!(MultiIndex::parse(&e.render()).unwrap(), e);
    }
}
