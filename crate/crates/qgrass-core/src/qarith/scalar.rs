//! The coefficient field: generic `Q(v)` or a cyclotomic specialization.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclo::CycloField;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::Q;
use crate::error::Error;

/// Which field the scalars live in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `Q(v)` with `q = v` transcendental.
    Generic,
    /// `Q(ζ_d)` with `q = ζ_d` a primitive `d`-th root of unity.
    RootOfUnity(Arc<CycloField>),
}

impl Mode {
    pub fn generic() -> Self {
        Mode::Generic
    }

    /// Root-of-unity mode of order `d ≥ 1`. Use [`crate::qarith::char_of`]
    /// to reject the degenerate orders 1 and 2.
    pub fn root_of_unity(d: u32) -> Result<Self, Error> {
        if d == 0 {
            return Err(Error::InvalidParameter("root-of-unity order must be positive".into()));
        }
        Ok(Mode::RootOfUnity(CycloField::new(d)))
    }

    pub fn order(&self) -> Option<u32> {
        match self {
            Mode::Generic => None,
            Mode::RootOfUnity(f) => Some(f.order()),
        }
    }

    pub fn zero(&self) -> ScalarQ {
        match self {
            Mode::Generic => ScalarQ::Generic(RatFunc::zero()),
            Mode::RootOfUnity(f) => {
                ScalarQ::Root(Cyclo { field: f.clone(), coeffs: alloc::vec![Q::zero(); f.degree()] })
            }
        }
    }

    pub fn one(&self) -> ScalarQ {
        self.rational(Q::one())
    }

    pub fn int(&self, n: i64) -> ScalarQ {
        self.rational(Q::from_integer(n.into()))
    }

    pub fn rational(&self, c: Q) -> ScalarQ {
        self.laurent(&LaurentPoly::constant(c))
    }

    /// `q^k`.
    pub fn q_pow(&self, k: i64) -> ScalarQ {
        match self {
            Mode::Generic => ScalarQ::Generic(RatFunc::from_laurent(LaurentPoly::monomial(Q::one(), k))),
            Mode::RootOfUnity(f) => ScalarQ::Root(Cyclo { field: f.clone(), coeffs: f.q_pow(k).to_vec() }),
        }
    }

    /// `(-q)^k`.
    pub fn neg_q_pow(&self, k: i64) -> ScalarQ {
        let p = self.q_pow(k);
        if k.rem_euclid(2) == 1 {
            -&p
        } else {
            p
        }
    }

    pub fn q(&self) -> ScalarQ {
        self.q_pow(1)
    }

    /// Specializes a Laurent polynomial at `v = q`.
    pub fn laurent(&self, p: &LaurentPoly) -> ScalarQ {
        match self {
            Mode::Generic => ScalarQ::Generic(RatFunc::from_laurent(p.clone())),
            Mode::RootOfUnity(f) => {
                let mut acc = alloc::vec![Q::zero(); f.degree()];
                for (e, c) in p.coefficients() {
                    for (a, b) in acc.iter_mut().zip(f.q_pow(*e)) {
                        *a += c * b;
                    }
                }
                ScalarQ::Root(Cyclo { field: f.clone(), coeffs: acc })
            }
        }
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, Mode::Generic)
    }
}

/// A residue class in `Q(ζ_d)`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    field: Arc<CycloField>,
    coeffs: Vec<Q>,
}

impl Cyclo {
    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Coefficients in the basis `1, ζ, …, ζ^{deg Φ_d − 1}`.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclo {}

/// An exact scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarQ {
    Generic(RatFunc),
    Root(Cyclo),
}

impl ScalarQ {
    pub fn mode(&self) -> Mode {
        match self {
            ScalarQ::Generic(_) => Mode::Generic,
            ScalarQ::Root(c) => Mode::RootOfUnity(c.field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ScalarQ::Generic(r) => r.is_zero(),
            ScalarQ::Root(c) => c.coeffs.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            ScalarQ::Generic(r) => r.is_one(),
            ScalarQ::Root(c) => {
                c.coeffs.first().is_some_and(One::is_one) && c.coeffs[1..].iter().all(Zero::is_zero)
            }
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<ScalarQ> {
        match self {
            ScalarQ::Generic(r) => r.inv().map(ScalarQ::Generic),
            ScalarQ::Root(c) => c
                .field
                .inv(&c.coeffs)
                .map(|coeffs| ScalarQ::Root(Cyclo { field: c.field.clone(), coeffs })),
        }
    }

    /// `self / rhs`; `None` when `rhs` is zero.
    pub fn div(&self, rhs: &ScalarQ) -> Option<ScalarQ> {
        rhs.inv().map(|i| self * &i)
    }

    /// Multiplies by `q^k` (cheap in both modes).
    pub fn mul_q_pow(&self, k: i64) -> ScalarQ {
        if k == 0 {
            return self.clone();
        }
        match self {
            ScalarQ::Generic(r) => ScalarQ::Generic(r.mul_monomial(&Q::one(), k)),
            ScalarQ::Root(c) => {
                let coeffs = c.field.mul(&c.coeffs, c.field.q_pow(k));
                ScalarQ::Root(Cyclo { field: c.field.clone(), coeffs })
            }
        }
    }

    /// Multiplies by `(-q)^k`.
    pub fn mul_neg_q_pow(&self, k: i64) -> ScalarQ {
        let p = self.mul_q_pow(k);
        if k.rem_euclid(2) == 1 {
            -&p
        } else {
            p
        }
    }

    pub fn pow(&self, e: i64) -> Option<ScalarQ> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = match self {
            ScalarQ::Generic(_) => Mode::Generic.one(),
            ScalarQ::Root(c) => Mode::RootOfUnity(c.field.clone()).one(),
        };
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }

    /// Evaluates a generic scalar at the rational point `q0`.
    pub fn eval_generic_at(&self, q0: &Q) -> Option<Q> {
        match self {
            ScalarQ::Generic(r) => r.eval(q0),
            ScalarQ::Root(_) => None,
        }
    }

    /// Canonical text: Laurent form for generic values, residue tuple otherwise.
    pub fn render(&self) -> String {
        match self {
            ScalarQ::Generic(r) => r.render(),
            ScalarQ::Root(c) => CycloField::render(&c.coeffs),
        }
    }

    /// The value as a Laurent polynomial, if generic with denominator 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        match self {
            ScalarQ::Generic(r) => r.as_laurent(),
            ScalarQ::Root(_) => None,
        }
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn mismatch() -> ! {
    panic!("scalar mode mismatch")
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        match (self, rhs) {
            (ScalarQ::Generic(a), ScalarQ::Generic(b)) => ScalarQ::Generic(a + b),
            (ScalarQ::Root(a), ScalarQ::Root(b)) => {
                if a.field.order() != b.field.order() {
                    mismatch()
                }
                let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                ScalarQ::Root(Cyclo { field: a.field.clone(), coeffs })
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        match self {
            ScalarQ::Generic(a) => ScalarQ::Generic(-a),
            ScalarQ::Root(a) => {
                ScalarQ::Root(Cyclo { field: a.field.clone(), coeffs: a.coeffs.iter().map(|x| -x).collect() })
            }
        }
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        match (self, rhs) {
            (ScalarQ::Generic(a), ScalarQ::Generic(b)) => ScalarQ::Generic(a * b),
            (ScalarQ::Root(a), ScalarQ::Root(b)) => {
                if a.field.order() != b.field.order() {
                    mismatch()
                }
                ScalarQ::Root(Cyclo { field: a.field.clone(), coeffs: a.field.mul(&a.coeffs, &b.coeffs) })
            }
            _ => mismatch(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for ScalarQ {
            type Output = ScalarQ;
            fn $m(self, rhs: ScalarQ) -> ScalarQ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl AddAssign<&ScalarQ> for ScalarQ {
    fn add_assign(&mut self, rhs: &ScalarQ) {
        *self = &*self + rhs;
    }
}
