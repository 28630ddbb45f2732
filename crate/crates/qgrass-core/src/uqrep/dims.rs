//! Closed-form dimensions of the graded components.

use alloc::format;

use crate::error::{Error, Result};
use crate::superspaces::SpaceSpec;

/// Binomial `C(a, b)` as the falling-factorial quotient; zero for `b < 0`.
fn binom(a: i64, b: i64) -> i128 {
    if b < 0 {
        return 0;
    }
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// `dim A^{(s)}(k; 1)`: the inclusion-exclusion count of exponent vectors in
/// `[0, ℓ−1]^k` with sum `s`. For `k = 0` this is `δ_{s,0}`.
pub fn divided_power_dim(k: usize, s: i64, ell: u32) -> i128 {
    if s < 0 {
        return 0;
    }
    let (k, l) = (k as i64, ell as i64);
    if k == 0 {
        return i128::from(s == 0);
    }
    (0..=s / l).map(|i| if i % 2 == 0 { 1 } else { -1 } * binom(k, i) * binom(k + s - i * l - 1, k - 1)).sum()
}

/// Top degree of the finite spaces; `None` for the generic ones.
fn top(space: &SpaceSpec) -> Option<i64> {
    space.top_degree()
}

/// Dimension of the degree-`t` component by the closed-form sums.
pub fn dim_formula(space: &SpaceSpec, t: i64) -> Result<u128> {
    if !(space.family.is_omega() || space.family.is_dual()) {
        return Err(Error::SpaceMismatch(format!("no dimension formula for {}", space.family.name())));
    }
    if t < 0 || (space.family.is_restricted() && top(space).is_some_and(|d| t > d)) {
        return Err(Error::OutOfRange(format!("degree {t} outside the range of {}", space.family.name())));
    }
    let (m, n) = (space.m() as i64, space.n() as i64);
    // The exterior factor has `e` generators, the divided-power factor `d`.
    let (e, d) = if space.family.is_omega() { (n, m) } else { (m, n) };
    let v: i128 = match space.ell() {
        None => (0..=t.min(e)).map(|s| binom(d + t - s - 1, t - s) * binom(e, s)).sum(),
        Some(l) => (0..=t.min(e)).map(|s| binom(e, s) * divided_power_dim(d as usize, t - s, l)).sum(),
    };
    u128::try_from(v).map_err(|_| Error::Internal(format!("negative dimension {v}")))
}

/// Dimension of the degree-`t` component by enumeration of the basis.
pub fn dim_enum(space: &SpaceSpec, t: i64) -> u128 {
    space.basis_of_degree(t).len() as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::Mode;
    use crate::superspaces::Family;

    #[test]
    fn spot_values() {
        let g = Mode::Generic;
        let r3 = Mode::root_of_unity(3).unwrap();
        assert_eq!(dim_formula(&SpaceSpec::new(Family::Omega, 2, 1, g.clone()).unwrap(), 2).unwrap(), 5);
        assert_eq!(dim_formula(&SpaceSpec::new(Family::OmegaRestricted, 1, 1, r3).unwrap(), 2).unwrap(), 2);
        assert_eq!(dim_formula(&SpaceSpec::new(Family::Dual, 2, 1, g).unwrap(), 1).unwrap(), 3);
    }

    #[test]
    fn matches_enumeration() {
        for f in [Family::Omega, Family::Dual] {
            for m in 0..=3 {
                for n in 0..=3 {
                    let s = SpaceSpec::new(f, m, n, Mode::Generic).unwrap();
                    for t in 0..=6 {
                        assert_eq!(dim_formula(&s, t).unwrap(), dim_enum(&s, t), "{f:?} {m} {n} {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn out_of_range() {
        let s = SpaceSpec::new(Family::OmegaRestricted, 1, 1, Mode::root_of_unity(3).unwrap()).unwrap();
        assert!(dim_formula(&s, 4).is_err());
        assert!(dim_formula(&s, -1).is_err());
    }
}
