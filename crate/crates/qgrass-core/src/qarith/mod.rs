//! Exact coefficient arithmetic and q-combinatorics.
//!
//! Balanced quantities use `[n] = (v^n − v^{-n})/(v − v^{-1})`; the
//! unbalanced ones use `(r)_q = (q^r − 1)/(q − 1)`. Everything is first
//! computed as a Laurent polynomial and then specialized into the requested
//! [`Mode`], so no division by a vanishing quantity ever happens at a root
//! of unity.

pub mod cyclo;
pub mod laurent;
pub mod poly;
pub mod ratfunc;
pub mod scalar;

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

pub use cyclo::{cyclotomic_poly, CycloField};
pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;
pub use scalar::{Cyclo, Mode, ScalarQ};

use crate::error::Error;

/// Rational numbers.
pub type Q = BigRational;

/// Whether `q` is generic or which kind of root of unity it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    GenericQ,
    /// `q` is a primitive `ℓ`-th root of unity with `ℓ` odd.
    OddRoot,
    /// `q` is a primitive `2ℓ`-th root of unity, so `q^ℓ = −1`.
    EvenRoot,
}

/// `char(q)`: the least `ℓ ≥ 1` with `[ℓ] = 0`, or 0 when there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharProfile {
    pub ell: u32,
    pub parity: Parity,
}

/// `[n]` as a Laurent polynomial.
pub fn q_int_laurent(n: i64) -> LaurentPoly {
    if n < 0 {
        return -q_int_laurent(-n);
    }
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, Q::one())))
}

/// Balanced q-integer `[n]` in the given mode.
pub fn q_int(n: i64, mode: &Mode) -> ScalarQ {
    mode.laurent(&q_int_laurent(n))
}

/// `[n]! = [1][2]⋯[n]` for `n ≥ 0`.
pub fn q_factorial_laurent(n: u32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_int_laurent(k))
}

pub fn q_factorial(n: u32, mode: &Mode) -> ScalarQ {
    mode.laurent(&q_factorial_laurent(n))
}

/// `[s over r]` by the product formula, as a Laurent polynomial.
pub fn q_binom_laurent(s: i64, r: i64) -> LaurentPoly {
    if r < 0 {
        return LaurentPoly::zero();
    }
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for i in 1..=r {
        let a = s - i + 1;
        num = &num * &(&LaurentPoly::monomial(Q::one(), a) - &LaurentPoly::monomial(Q::one(), -a));
        if num.is_zero() {
            return num;
        }
        den = &den * &(&LaurentPoly::monomial(Q::one(), i) - &LaurentPoly::monomial(Q::one(), -i));
    }
    num.div_exact(&den).expect("Gaussian binomials are Laurent polynomials")
}

/// Balanced Gaussian binomial `[s over r]`; zero for `r < 0`.
pub fn q_binom(s: i64, r: i64, mode: &Mode) -> ScalarQ {
    mode.laurent(&q_binom_laurent(s, r))
}

/// Unbalanced `(p choose r)_q` as a polynomial in `q`, by q-Pascal.
pub fn q_binom_unbalanced_laurent(p: u32, r: u32) -> Result<LaurentPoly, Error> {
    if r > p {
        return Err(Error::InvalidParameter(alloc::format!(
            "unbalanced binomial needs r <= p, got p = {p}, r = {r}"
        )));
    }
    // row[k] = (i choose k)_q for the current i.
    let mut row: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    for i in 1..=p {
        let mut next = vec![LaurentPoly::one(); i as usize + 1];
        for k in 1..i as usize {
            next[k] = &row[k - 1] + &row[k].shift(k as i64);
        }
        row = next;
    }
    Ok(row[r as usize].clone())
}

/// Unbalanced `(p choose r)_q = (p)_q! / ((p−r)_q! (r)_q!)`.
pub fn q_binom_unbalanced(p: u32, r: u32, mode: &Mode) -> Result<ScalarQ, Error> {
    Ok(mode.laurent(&q_binom_unbalanced_laurent(p, r)?))
}

/// `(r)_q = 1 + q + ⋯ + q^{r−1}`.
pub fn q_int_unbalanced(r: u32, mode: &Mode) -> ScalarQ {
    mode.laurent(&LaurentPoly::from_terms((0..r as i64).map(|k| (k, Q::one()))))
}

/// Characteristic profile of `q`; orders 1 and 2 (`q = ±1`) are rejected.
pub fn char_of(mode: &Mode) -> Result<CharProfile, Error> {
    let d = match mode {
        Mode::Generic => return Ok(CharProfile { ell: 0, parity: Parity::GenericQ }),
        Mode::RootOfUnity(f) => f.order(),
    };
    if d <= 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "root-of-unity order {d} gives q = ±1, which is excluded"
        )));
    }
    let (ell, parity) = if d % 2 == 1 { (d, Parity::OddRoot) } else { (d / 2, Parity::EvenRoot) };
    let scanned = (1..=d).find(|&k| q_int(k as i64, mode).is_zero());
    if scanned != Some(ell) {
        return Err(Error::Internal(alloc::format!(
            "char scan for d = {d} found {scanned:?}, expected {ell}"
        )));
    }
    Ok(CharProfile { ell, parity })
}

/// Ordinary binomial coefficient `C(n, k)` for `n ≥ 0`; zero outside `0..=n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Right-hand side of the Lucas-type factorization of `[s over r]` at
/// `char(q) = ℓ ≥ 3`, for `0 ≤ r ≤ s`.
pub fn lucas_binom(s: i64, r: i64, mode: &Mode) -> Result<ScalarQ, Error> {
    let prof = char_of(mode)?;
    let l = prof.ell as i64;
    if l < 3 || r < 0 || s < r {
        return Err(Error::InvalidParameter("needs char(q) >= 3 and 0 <= r <= s".into()));
    }
    let (s0, s1) = (s.rem_euclid(l), s.div_euclid(l));
    let (r0, r1) = (r.rem_euclid(l), r.div_euclid(l));
    let small = q_binom(s0, r0, mode);
    let ord = binomial(s1, r1);
    let mut val = &small * &mode.rational(Q::from_integer(ord.into()));
    if prof.parity == Parity::EvenRoot {
        let e = (s1 + 1) * r1 * l + s0 * r1 - r0 * s1;
        if e.rem_euclid(2) == 1 {
            val = -val;
        }
    }
    Ok(val)
}

/// Predicted value of `[s over ℓ]` at `char(q) = ℓ ≥ 3`, any integer `s`.
pub fn lucas_binom_ell(s: i64, mode: &Mode) -> Result<ScalarQ, Error> {
    let prof = char_of(mode)?;
    let l = prof.ell as i64;
    if l < 3 {
        return Err(Error::InvalidParameter("needs char(q) >= 3".into()));
    }
    let (s0, s1) = (s.rem_euclid(l), s.div_euclid(l));
    let mut val = mode.int(s1);
    if prof.parity == Parity::EvenRoot && ((s1 + 1) * l + s0).rem_euclid(2) == 1 {
        val = -val;
    }
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, Q::from_integer(c.into()))))
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0, &Mode::Generic).is_zero());
        assert_eq!(q_int_laurent(2), lp(&[(1, 1), (-1, 1)]));
        assert_eq!(q_int_laurent(-3), -q_int_laurent(3));
        let m3 = Mode::root_of_unity(3).unwrap();
        assert!(q_int(3, &m3).is_zero());
    }

    #[test]
    fn q_binom_examples() {
        assert_eq!(q_binom_laurent(4, 2), lp(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert!(q_binom_laurent(3, 5).is_zero());
        assert!(q_binom_laurent(7, 0).is_one());
        assert!(q_binom_laurent(5, 5).is_one());
        assert!(q_binom_laurent(5, -1).is_zero());
    }

    #[test]
    fn unbalanced_examples() {
        assert_eq!(q_binom_unbalanced_laurent(2, 1).unwrap(), lp(&[(0, 1), (1, 1)]));
        assert!(q_binom_unbalanced_laurent(6, 0).unwrap().is_one());
        let m3 = Mode::root_of_unity(3).unwrap();
        assert!(q_binom_unbalanced(3, 1, &m3).unwrap().is_zero());
        assert!(q_binom_unbalanced(1, 2, &m3).is_err());
    }

    #[test]
    fn unbalanced_matches_factorial_quotient() {
        // (p choose r)_q · (r)_q! · (p−r)_q! = (p)_q!
        let fact = |n: u32| {
            (1..=n).fold(LaurentPoly::one(), |acc, k| {
                &acc * &LaurentPoly::from_terms((0..k as i64).map(|e| (e, Q::one())))
            })
        };
        for p in 0..8 {
            for r in 0..=p {
                let b = q_binom_unbalanced_laurent(p, r).unwrap();
                assert_eq!(&(&b * &fact(r)) * &fact(p - r), fact(p));
            }
        }
    }

    #[test]
    fn char_profiles() {
        assert_eq!(char_of(&Mode::Generic).unwrap(), CharProfile { ell: 0, parity: Parity::GenericQ });
        let p3 = char_of(&Mode::root_of_unity(3).unwrap()).unwrap();
        assert_eq!(p3, CharProfile { ell: 3, parity: Parity::OddRoot });
        let p8 = char_of(&Mode::root_of_unity(8).unwrap()).unwrap();
        assert_eq!(p8, CharProfile { ell: 4, parity: Parity::EvenRoot });
        assert!(char_of(&Mode::root_of_unity(1).unwrap()).is_err());
        assert!(char_of(&Mode::root_of_unity(2).unwrap()).is_err());
    }

    #[test]
    fn bar_symmetry() {
        for s in 0..10 {
            for r in 0..=s {
                let b = q_binom_laurent(s, r);
                assert_eq!(b.bar(), b);
            }
        }
    }

    #[test]
    fn ordinary_binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn lucas_factorization_small_orders() {
        for d in [3u32, 5, 6, 8] {
            let mode = Mode::root_of_unity(d).unwrap();
            let l = char_of(&mode).unwrap().ell as i64;
            for s in 0..=3 * l {
                for r in 0..=s {
                    assert_eq!(q_binom(s, r, &mode), lucas_binom(s, r, &mode).unwrap(), "d={d} s={s} r={r}");
                }
                assert_eq!(q_binom(s, l, &mode), lucas_binom_ell(s, &mode).unwrap(), "d={d} s={s}");
            }
        }
    }
}
