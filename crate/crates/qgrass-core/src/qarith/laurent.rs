//! Sparse Laurent polynomials in `v` with rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::Q;

/// A Laurent polynomial `Σ c_k v^k`. No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    coefficients: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Q::one(), 0)
    }

    /// `c·v^k`.
    pub fn monomial(c: Q, k: i64) -> Self {
        let mut coefficients = BTreeMap::new();
        if !c.is_zero() {
            coefficients.insert(k, c);
        }
        Self { coefficients }
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Q::from_integer(c.into()))
    }

    /// Builds from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// The variable `v`.
    pub fn v() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coefficients.len() == 1 && self.coefficients.get(&0).is_some_and(One::is_one)
    }

    pub fn coefficients(&self) -> &BTreeMap<i64, Q> {
        &self.coefficients
    }

    pub fn coeff(&self, k: i64) -> Q {
        self.coefficients.get(&k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coefficients.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coefficients.keys().next_back().copied()
    }

    /// Leading coefficient (highest exponent).
    pub fn lead(&self) -> Option<&Q> {
        self.coefficients.values().next_back()
    }

    /// If `self = c·v^k`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(&Q, i64)> {
        if self.coefficients.len() == 1 {
            self.coefficients.iter().next().map(|(k, c)| (c, *k))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, k: i64, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(k).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&k);
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coefficients: self.coefficients.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            coefficients: self.coefficients.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Splits into `(v^s, p)` with `p` an ordinary polynomial with `p(0) ≠ 0`.
    pub fn to_dense(&self) -> (i64, Dense) {
        let Some(lo) = self.min_exp() else {
            return (0, Dense::new());
        };
        let hi = self.max_exp().unwrap_or(lo);
        let mut d: Dense = alloc::vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.coefficients {
            d[(e - lo) as usize] = c.clone();
        }
        (lo, d)
    }

    pub fn from_dense(shift: i64, d: &[Q]) -> Self {
        Self::from_terms(d.iter().enumerate().map(|(i, c)| (i as i64 + shift, c.clone())))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (sa, pa) = self.to_dense();
        let (sd, pd) = d.to_dense();
        let (qt, r) = poly::divrem(&pa, &pd);
        if r.is_empty() {
            Some(Self::from_dense(sa - sd, &qt))
        } else {
            None
        }
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for (e, c) in &self.coefficients {
            let p = if *e >= 0 {
                num_traits::pow(x.clone(), *e as usize)
            } else {
                num_traits::pow(x.recip(), (-*e) as usize)
            };
            acc += c * p;
        }
        acc
    }

    /// Renders as `v^2 + 1 + v^-2` with exponents descending.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coefficients.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            match (*e, unit) {
                (0, _) => {
                    let _ = write!(out, "{a}");
                }
                (1, true) => out.push('v'),
                (1, false) => {
                    let _ = write!(out, "{a}*v");
                }
                (k, true) => {
                    let _ = write!(out, "v^{k}");
                }
                (k, false) => {
                    let _ = write!(out, "{a}*v^{k}");
                }
            }
        }
        out
    }

    pub fn terms(&self) -> Vec<(i64, Q)> {
        self.coefficients.iter().map(|(e, c)| (*e, c.clone())).collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coefficients {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coefficients {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coefficients: self.coefficients.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if let Some((c, k)) = rhs.as_monomial() {
            return self.shift(k).scale(c);
        }
        if let Some((c, k)) = self.as_monomial() {
            return rhs.shift(k).scale(c);
        }
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coefficients {
            for (eb, cb) in &rhs.coefficients {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_descending() {
        let p = LaurentPoly::from_terms([(2, Q::one()), (0, Q::one()), (-2, Q::one())]);
        assert_eq!(p.render(), "v^2 + 1 + v^-2");
        assert_eq!((-&LaurentPoly::v()).render(), "-v");
    }

    #[test]
    fn zero_has_no_terms() {
        let p = &LaurentPoly::v() - &LaurentPoly::v();
        assert!(p.is_zero());
        assert!(p.coefficients().is_empty());
    }

    #[test]
    fn exact_division() {
        let v = LaurentPoly::v();
        let vi = LaurentPoly::monomial(Q::one(), -1);
        let num = &v.pow(2) - &vi.pow(2);
        let den = &v - &vi;
        assert_eq!(num.div_exact(&den), Some(&v + &vi));
        assert_eq!(v.div_exact(&(&v + &LaurentPoly::one())), None);
    }
}
