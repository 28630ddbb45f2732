//! Residues modulo the cyclotomic polynomial `Φ_d`, i.e. the field `Q(ζ_d)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Signed, Zero};

use super::poly::{self, Dense};
use super::Q;

/// The cyclotomic field `Q[x]/Φ_d` with `q` the class of `x`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct CycloField {
    d: u32,
    phi: Dense,
    /// Residue of `x^k` for `k` in `0..d`.
    powers: Vec<Vec<Q>>,
}

/// `d`-th cyclotomic polynomial, monic with integer coefficients.
pub fn cyclotomic_poly(d: u32) -> Dense {
    assert!(d >= 1, "cyclotomic index must be positive");
    let mut num: Dense = vec![Q::zero(); d as usize + 1];
    num[0] = -Q::one();
    num[d as usize] = Q::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (qt, r) = poly::divrem(&num, &cyclotomic_poly(e));
            debug_assert!(r.is_empty());
            num = qt;
        }
    }
    num
}

impl CycloField {
    pub fn new(d: u32) -> Arc<Self> {
        let phi = cyclotomic_poly(d);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(d as usize);
        for k in 0..d as usize {
            let mut x: Dense = vec![Q::zero(); k + 1];
            x[k] = Q::one();
            let (_, r) = poly::divrem(&x, &phi);
            powers.push(pad(r, deg));
        }
        Arc::new(Self { d, phi, powers })
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    /// Degree of `Φ_d`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self) -> &[Q] {
        &self.phi
    }

    /// Residue of `q^k`.
    pub fn q_pow(&self, k: i64) -> &[Q] {
        &self.powers[k.rem_euclid(self.d as i64) as usize]
    }

    pub fn reduce(&self, p: &[Q]) -> Vec<Q> {
        let (_, r) = poly::divrem(p, &self.phi);
        pad(r, self.degree())
    }

    pub fn mul(&self, a: &[Q], b: &[Q]) -> Vec<Q> {
        self.reduce(&poly::mul(&strip(a), &strip(b)))
    }

    pub fn inv(&self, a: &[Q]) -> Option<Vec<Q>> {
        let a = strip(a);
        if a.is_empty() {
            return None;
        }
        let (g, s) = poly::ext_gcd_inverse_part(&a, &self.phi);
        debug_assert_eq!(g.len(), 1, "Φ_d is irreducible");
        Some(self.reduce(&s))
    }

    /// Renders as a polynomial in `z = ζ_d`, powers descending: `2*z^2 - z + 1`.
    pub fn render(a: &[Q]) -> String {
        let terms: Vec<(usize, &Q)> = a.iter().enumerate().filter(|(_, c)| !c.is_zero()).rev().collect();
        if terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let _ = match (e, a.is_one()) {
                (0, _) => write!(out, "{a}"),
                (1, true) => write!(out, "z"),
                (1, false) => write!(out, "{a}*z"),
                (k, true) => write!(out, "z^{k}"),
                (k, false) => write!(out, "{a}*z^{k}"),
            };
        }
        out
    }
}

fn pad(mut r: Dense, deg: usize) -> Vec<Q> {
    r.resize(deg, Q::zero());
    r
}

fn strip(a: &[Q]) -> Dense {
    let mut v = a.to_vec();
    poly::trim(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(p: &[Q]) -> Vec<i64> {
        p.iter().map(|c| i64::try_from(c.to_integer()).unwrap()).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(ints(&cyclotomic_poly(1)), vec![-1, 1]);
        assert_eq!(ints(&cyclotomic_poly(3)), vec![1, 1, 1]);
        assert_eq!(ints(&cyclotomic_poly(6)), vec![1, -1, 1]);
        assert_eq!(ints(&cyclotomic_poly(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(ints(&cyclotomic_poly(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn powers_wrap() {
        let f = CycloField::new(8);
        assert_eq!(f.q_pow(4), f.reduce(&[-Q::one()]).as_slice());
        assert_eq!(f.q_pow(8), f.q_pow(0));
        assert_eq!(f.q_pow(-1), f.q_pow(7));
    }
}
