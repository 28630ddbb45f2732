//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored low degree first. The zero polynomial is the
//! empty vector; every other value has a nonzero last coefficient.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use super::Q;

/// Dense polynomial in one variable with rational coefficients.
pub type Dense = Vec<Q>;

/// Drops trailing zero coefficients.
pub fn trim(p: &mut Dense) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Degree of `p`, or `None` for the zero polynomial.
pub fn degree(p: &[Q]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn add(a: &[Q], b: &[Q]) -> Dense {
    let mut out: Dense = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[Q], b: &[Q]) -> Dense {
    let mut out: Dense = vec![Q::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[Q], b: &[Q]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: Dense = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[Q], c: &Q) -> Dense {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Quotient and remainder of `a` by the nonzero polynomial `b`.
pub fn divrem(a: &[Q], b: &[Q]) -> (Dense, Dense) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut rem: Dense = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut quot: Dense = vec![Q::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Rescales to a monic polynomial; zero stays zero.
pub fn monic(a: &[Q]) -> Dense {
    match a.last() {
        None => Vec::new(),
        Some(l) => {
            let inv = l.recip();
            a.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &[Q], b: &[Q]) -> Dense {
    let mut x: Dense = a.to_vec();
    let mut y: Dense = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Returns `(g, s)` with `g = gcd(a, m)` monic and `s·a ≡ g (mod m)`.
pub fn ext_gcd_inverse_part(a: &[Q], m: &[Q]) -> (Dense, Dense) {
    let mut r0: Dense = m.to_vec();
    let mut r1: Dense = a.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0: Dense = Vec::new();
    let mut s1: Dense = vec![Q::one()];
    while !r1.is_empty() {
        let (qt, r2) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&qt, &s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    match r0.last().cloned() {
        None => (Vec::new(), Vec::new()),
        Some(l) => {
            let inv = l.recip();
            (scale(&r0, &inv), scale(&s0, &inv))
        }
    }
}

/// Evaluates `p` at `x` by Horner's rule.
pub fn eval(p: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Q {
        Q::from_integer(BigInt::from(n))
    }

    #[test]
    fn divrem_reconstructs() {
        let a = vec![q(1), q(0), q(3), q(2)];
        let b = vec![q(-1), q(1)];
        let (qq, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&qq, &b), &r), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = vec![q(-1), q(1)];
        let a = mul(&f, &[q(2), q(1)]);
        let b = mul(&f, &[q(3), q(0), q(1)]);
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn inverse_modulo() {
        // x^2 + x + 1
        let m = vec![q(1), q(1), q(1)];
        let a = vec![q(0), q(1)];
        let (g, s) = ext_gcd_inverse_part(&a, &m);
        assert_eq!(g, vec![q(1)]);
        let (_, r) = divrem(&mul(&s, &a), &m);
        assert_eq!(r, vec![q(1)]);
    }
}
