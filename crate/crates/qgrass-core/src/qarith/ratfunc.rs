//! Reduced rational functions in `v`.

use alloc::format;
use alloc::string::String;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly;
use super::Q;

/// A fraction `num/den` of Laurent polynomials in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term,
/// integer coefficients of content 1 and positive leading coefficient, and
/// it is coprime to the numerator. Equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// Builds `num/den`; `None` when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (sd, mut pd) = den.to_dense();
        let num = num.shift(-sd);
        if pd.len() == 1 {
            let inv = pd[0].recip();
            return Self { num: num.scale(&inv), den: LaurentPoly::one() };
        }
        let (sn, mut pn) = num.to_dense();
        let g = poly::gcd(&pn, &pd);
        if g.len() > 1 {
            pn = poly::divrem(&pn, &g).0;
            pd = poly::divrem(&pd, &g).0;
        }
        // Scale so the denominator is primitive over Z with positive lead.
        let mut l = BigInt::one();
        for c in &pd {
            l = l.lcm(c.denom());
        }
        let mut gnum = BigInt::zero();
        for c in &pd {
            gnum = gnum.gcd(&(c.numer() * (&l / c.denom())));
        }
        let mut f = Q::new(l, gnum);
        if pd.last().is_some_and(|c| c.is_negative()) {
            f = -f;
        }
        let pd = poly::scale(&pd, &f);
        let pn = poly::scale(&pn, &f);
        let den = LaurentPoly::from_dense(0, &pd);
        let num = LaurentPoly::from_dense(sn, &pn);
        Self { num, den }
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Multiplies by `c·v^k` without renormalizing.
    pub fn mul_monomial(&self, c: &Q, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.shift(k).scale(c), den: self.den.clone() }
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_laurent(&self.num + &rhs.num);
            }
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_common_factor() {
        let v = LaurentPoly::v();
        let one = LaurentPoly::one();
        let num = &v.pow(2) - &one;
        let den = &v - &one;
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r, RatFunc::from_laurent(&v + &one));
    }

    #[test]
    fn denominator_is_primitive_positive() {
        let v = LaurentPoly::v();
        let den = (&v * &LaurentPoly::from_int(-4)) + LaurentPoly::from_int(2);
        let r = RatFunc::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(r.denom(), &(&(&v * &LaurentPoly::from_int(2)) - &LaurentPoly::one()));
        assert_eq!(r.numer(), &LaurentPoly::from_int(-1).scale(&Q::new(1.into(), 2.into())));
    }

    #[test]
    fn inverse_roundtrip() {
        let v = LaurentPoly::v();
        let x = RatFunc::new(&v + &LaurentPoly::from_int(3), &v.pow(2) + &LaurentPoly::one()).unwrap();
        assert!((&x * &x.inv().unwrap()).is_one());
    }
}
