//! Minimal polynomials of `2cos(πr)` and `2sin(πr)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{BigInt, IntPolynomial, Rational};
use crate::cyclotomic::{coefficient, cyclotomic_poly};
use crate::error::{Error, Result};
use crate::ntheory::{prime_power_base, totient};

const MAX_DENOMINATOR: u64 = 1 << 40;

/// A rational angle `r = k/N` in lowest terms, with `0 <= k < 2N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawAngle")]
pub struct ReducedAngle {
    k: u64,
    n: u64,
}

#[derive(Deserialize)]
struct RawAngle {
    k: u64,
    n: u64,
}

impl TryFrom<RawAngle> for ReducedAngle {
    type Error = Error;

    fn try_from(raw: RawAngle) -> Result<Self> {
        let a = i64::try_from(raw.k)
            .map_err(|_| Error::InvalidInput("angle numerator is too large".into()))
            .and_then(|k| ReducedAngle::new(k, raw.n))?;
        if (a.k, a.n) != (raw.k, raw.n) {
            return Err(Error::InvalidInput(format!("{}/{} is not a reduced angle in [0, 2)", raw.k, raw.n)));
        }
        Ok(a)
    }
}

impl ReducedAngle {
    /// Reduces `k/n` and moves it into `[0, 2)`.
    pub fn new(k: i64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("angle denominator is zero".into()));
        }
        if n > MAX_DENOMINATOR {
            return Err(Error::InvalidInput(format!("angle denominator {n} is too large")));
        }
        let g = (k.unsigned_abs()).gcd(&n).max(1);
        let (k, n) = (k / g as i64, n / g);
        Ok(ReducedAngle {
            k: (k as i128).rem_euclid(2 * n as i128) as u64,
            n,
        })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// `N(r)`
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn as_rational(&self) -> Rational {
        Rational::new(self.k.into(), self.n.into())
    }

    /// Parses `k/N` (or an integer) and reduces it.
    pub fn parse(text: &str) -> Result<Self> {
        reduce_angle(&crate::arith::parse_rational(text)?)
    }

    /// `π·r` written out, e.g. `3π/8`, `π`, `0`.
    pub fn pi_string(&self) -> String {
        let num = match self.k {
            0 => return "0".into(),
            1 => "π".to_string(),
            k => format!("{k}π"),
        };
        if self.n == 1 {
            num
        } else {
            format!("{num}/{}", self.n)
        }
    }
}

impl fmt::Display for ReducedAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.k, self.n)
    }
}

pub fn reduce_angle(r: &Rational) -> Result<ReducedAngle> {
    let n = r
        .denom()
        .to_u64()
        .ok_or_else(|| Error::InvalidInput(format!("denominator of {r} is too large")))?;
    if n > MAX_DENOMINATOR {
        return Err(Error::InvalidInput(format!("denominator of {r} is too large")));
    }
    let k = r.numer().mod_floor(&BigInt::from(2 * n));
    Ok(ReducedAngle {
        k: k.to_u64().expect("residue fits"),
        n,
    })
}

/// `R_n` with `R_0 = 2`, `R_1 = z`, `R_n = z R_{n−1} − R_{n−2}`.
pub fn chebyshev_like(n: usize) -> IntPolynomial {
    let z = IntPolynomial::monomial(1, 1);
    let mut prev = IntPolynomial::constant(2);
    if n == 0 {
        return prev;
    }
    let mut cur = z.clone();
    for _ in 1..n {
        let next = &(&z * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `Σ c_i (z² + 1)^i z^{h−i}`, i.e. `z^h p(z + 1/z)` for `deg p <= h`.
pub fn palindromic_lift(p: &IntPolynomial, h: usize) -> IntPolynomial {
    let z2p1 = IntPolynomial::from_i64(&[1, 0, 1]);
    let mut power = IntPolynomial::constant(1);
    let mut out = IntPolynomial::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        assert!(i <= h, "degree exceeds the lift height");
        if !c.is_zero() {
            let term = &power * &IntPolynomial::monomial(c.clone(), h - i);
            out = &out + &term;
        }
        power = &power * &z2p1;
    }
    out
}

type Cache = RwLock<HashMap<u64, Arc<IntPolynomial>>>;

fn cos_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn build_cos_min_poly(n: u64) -> IntPolynomial {
    if n == 1 {
        return IntPolynomial::from_i64(&[2, 1]);
    }
    let h = totient(2 * n) / 2;
    let mut p = IntPolynomial::constant(coefficient(2 * n, h));
    for j in 0..h {
        let a = coefficient(2 * n, j);
        if a != 0 {
            p = &p + &chebyshev_like((h - j) as usize).scale(&a.into());
        }
    }
    let lifted = palindromic_lift(&p, h as usize);
    assert_eq!(
        lifted,
        *cyclotomic_poly(2 * n),
        "z^h P_{n}(z + 1/z) must reproduce Φ_{}",
        2 * n
    );
    p
}

/// `P_N`, the minimal polynomial of `2(−1)^{1+k} cos(πk/N)`.
pub fn cos_min_poly(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1);
    if let Some(p) = cos_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let p = Arc::new(build_cos_min_poly(n));
    cos_cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(p)
        .clone()
}

/// `Q_N`, the minimal polynomial of `2(−1)^{k_r} sin(πk/N)`.
pub fn sin_min_poly(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1);
    if n % 2 == 1 {
        cos_min_poly(2 * n)
    } else if n % 4 == 0 {
        cos_min_poly(n)
    } else {
        cos_min_poly(n / 2)
    }
}

/// `p_N`
pub fn degree_of_cos(n: u64) -> u64 {
    match n {
        1 => 1,
        n if n % 2 == 0 => totient(n),
        n => totient(n) / 2,
    }
}

/// `q_N`
pub fn degree_of_sin(n: u64) -> u64 {
    match n {
        2 => 1,
        n if n % 4 == 2 => totient(n) / 2,
        n => totient(n),
    }
}

/// `|P_N(0)|` from the closed-form table.
pub fn cos_constant_term_table(n: u64) -> u64 {
    match n {
        1 => 2,
        2 => 0,
        n if n % 2 == 0 => prime_power_base(n / 2).unwrap_or(1),
        _ => 1,
    }
}

/// `k_r` for `r = k/N`, using `k` as given (any representative).
pub fn sin_sign_exponent(k: i64, n: u64) -> i64 {
    if n % 4 == 2 {
        1 + (2 * k - n as i64).abs() / 4
    } else {
        0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigKind {
    Cos,
    Sin,
}

impl fmt::Display for TrigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TrigKind::Cos => "cos",
            TrigKind::Sin => "sin",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinPolyInfo {
    pub kind: TrigKind,
    pub angle: ReducedAngle,
    pub poly: Arc<IntPolynomial>,
    pub degree: u64,
    /// The number annihilated is `2(−1)^sign_exponent` times cos or sin.
    pub sign_exponent: i64,
}

impl MinPolyInfo {
    pub fn sign_is_positive(&self) -> bool {
        self.sign_exponent.rem_euclid(2) == 0
    }
}

fn checked_degree(kind: TrigKind, angle: ReducedAngle, poly: &IntPolynomial, expected: u64) -> Result<u64> {
    let d = poly.degree().unwrap_or(0) as u64;
    if d != expected {
        return Err(Error::Verification(format!(
            "{kind} minimal polynomial for {angle} has degree {d}, table says {expected}"
        )));
    }
    Ok(d)
}

pub fn canonical_cos(angle: ReducedAngle) -> Result<MinPolyInfo> {
    let poly = cos_min_poly(angle.n());
    let degree = checked_degree(TrigKind::Cos, angle, &poly, degree_of_cos(angle.n()))?;
    Ok(MinPolyInfo {
        kind: TrigKind::Cos,
        angle,
        poly,
        degree,
        sign_exponent: 1 + angle.k() as i64,
    })
}

pub fn canonical_sin(angle: ReducedAngle) -> Result<MinPolyInfo> {
    let poly = sin_min_poly(angle.n());
    let degree = checked_degree(TrigKind::Sin, angle, &poly, degree_of_sin(angle.n()))?;
    Ok(MinPolyInfo {
        kind: TrigKind::Sin,
        angle,
        poly,
        degree,
        sign_exponent: sin_sign_exponent(angle.k() as i64, angle.n()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn reduction_examples() {
        let a = reduce_angle(&rat(2, 10)).unwrap();
        assert_eq!((a.k(), a.n()), (1, 5));
        let a = reduce_angle(&rat(7, 3)).unwrap();
        assert_eq!((a.k(), a.n()), (1, 3));
        let a = reduce_angle(&rat(3, 1)).unwrap();
        assert_eq!((a.k(), a.n()), (1, 1));
        let a = reduce_angle(&rat(-1, 4)).unwrap();
        assert_eq!((a.k(), a.n()), (7, 4));
        assert_eq!(ReducedAngle::new(6, 16).unwrap(), ReducedAngle::new(3, 8).unwrap());
    }

    #[test]
    fn pi_strings() {
        assert_eq!(ReducedAngle::new(1, 5).unwrap().pi_string(), "π/5");
        assert_eq!(ReducedAngle::new(3, 8).unwrap().pi_string(), "3π/8");
        assert_eq!(ReducedAngle::new(1, 1).unwrap().pi_string(), "π");
        assert_eq!(ReducedAngle::new(0, 1).unwrap().pi_string(), "0");
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(chebyshev_like(0), p(&[2]));
        assert_eq!(chebyshev_like(1), p(&[0, 1]));
        assert_eq!(chebyshev_like(2), p(&[-2, 0, 1]));
        for n in 3..=10 {
            let c = chebyshev_like(n).coeff(0);
            assert!([-2, 0, 2].iter().any(|&v| c == v.into()), "R_{n}(0) = {c}");
        }
    }

    #[test]
    fn chebyshev_is_power_sum() {
        for n in 1..=50 {
            let expected = &IntPolynomial::monomial(1, 2 * n) + &IntPolynomial::constant(1);
            assert_eq!(palindromic_lift(&chebyshev_like(n), n), expected, "n = {n}");
        }
    }

    #[test]
    fn first_cos_min_polys() {
        assert_eq!(*cos_min_poly(1), p(&[2, 1]));
        assert_eq!(*cos_min_poly(2), p(&[0, 1]));
        assert_eq!(*cos_min_poly(3), p(&[-1, 1]));
        assert_eq!(*cos_min_poly(4), p(&[-2, 0, 1]));
        assert_eq!(*cos_min_poly(5), p(&[-1, -1, 1]));
    }

    #[test]
    fn constant_terms() {
        assert_eq!(cos_min_poly(6).coeff(0).abs(), 3.into());
        assert_eq!(cos_min_poly(10).coeff(0).abs(), 5.into());
        for n in 1..=200 {
            assert_eq!(
                cos_min_poly(n).coeff(0).abs(),
                cos_constant_term_table(n).into(),
                "N = {n}"
            );
        }
    }

    #[test]
    fn sin_min_polys() {
        assert_eq!(*sin_min_poly(5), p(&[5, 0, -5, 0, 1]));
        assert_eq!(*sin_min_poly(12), p(&[1, 0, -4, 0, 1]));
        assert_eq!(*sin_min_poly(2), p(&[2, 1]));
        assert_eq!(*sin_min_poly(1), p(&[0, 1]));
        assert_eq!(*sin_min_poly(6), p(&[-1, 1]));
    }

    #[test]
    fn degree_tables() {
        assert_eq!(degree_of_cos(3), 1);
        assert_eq!(degree_of_cos(7), 3);
        assert_eq!(degree_of_cos(30), 8);
        for n in 1..=200 {
            assert_eq!(cos_min_poly(n).degree(), Some(degree_of_cos(n) as usize));
            assert_eq!(sin_min_poly(n).degree(), Some(degree_of_sin(n) as usize));
        }
        let ones: Vec<u64> = (1..=100).filter(|&n| degree_of_cos(n) == 1).collect();
        assert_eq!(ones, [1, 2, 3]);
    }

    #[test]
    fn leading_structure() {
        // R_n − zⁿ + n z^{n−2} has degree < n − 2.
        for n in 3..=50usize {
            let r = chebyshev_like(n);
            let head = &IntPolynomial::monomial(1, n) - &IntPolynomial::monomial(n as i64, n - 2);
            let rest = &r - &head;
            assert!(rest.degree().map_or(true, |d| d < n - 2), "n = {n}");
        }
    }

    #[test]
    fn canonical_infos() {
        let info = canonical_cos(ReducedAngle::new(1, 5).unwrap()).unwrap();
        assert_eq!(*info.poly, p(&[-1, -1, 1]));
        assert!(info.sign_is_positive());
        // 2(−1)^{1+1} cos(π) = −2
        let info = canonical_cos(ReducedAngle::new(1, 1).unwrap()).unwrap();
        assert_eq!(*info.poly, p(&[2, 1]));
        assert!(info.sign_is_positive());
        let info = canonical_sin(ReducedAngle::new(1, 2).unwrap()).unwrap();
        assert_eq!(info.degree, 1);
        assert!(!info.sign_is_positive());
    }

    proptest! {
        #[test]
        fn sin_sign_parity_ignores_representative(t in 0u64..50, k in 0i64..400, shift in -3i64..4) {
            let n = 4 * t + 2;
            prop_assume!(k.gcd(&(n as i64)) == 1);
            let a = sin_sign_exponent(k, n);
            let b = sin_sign_exponent(k + 2 * n as i64 * shift, n);
            prop_assert_eq!(a.rem_euclid(2), b.rem_euclid(2));
        }
    }
}
