//! Exact scalars, dense polynomials and Gaussian integers.
//!
//! Everything here is unbounded: cyclotomic coefficients and elimination
//! pivots routinely leave the range of machine words.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Canonical unbounded rational (always reduced, positive denominator).
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `k/N`, `-k/N` or a bare integer.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::InvalidInput(format!("not a fraction: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let ok = |s: &str| {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        !digits.is_empty() && digits.len() <= 4096 && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !ok(num) || !ok(den) || den.starts_with(['-', '+']) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// Dense polynomial with integer coefficients, ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c · z^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    /// `z^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder by a monic divisor.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(Self, Self)> {
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        // Sparse view of the divisor below its leading term.
        let tail: Vec<(usize, &BigInt)> = divisor.coeffs[..dd]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            let shift = i - dd;
            for &(t, a) in &tail {
                rem[shift + t] -= &c * a;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient by a monic divisor that divides `self` over the integers.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<Self> {
        let (q, r) = self.div_rem_monic(divisor)?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation in `Z[i]`.
    pub fn eval_gaussian(&self, x: &GaussianInt) -> GaussianInt {
        self.coeffs.iter().rev().fold(GaussianInt::zero(), |acc, c| {
            &(&acc * x) + &GaussianInt::new(c.clone(), BigInt::zero())
        })
    }

    /// True iff the coefficient list equals its reversal.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `p(z^k)`
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `p(-z)`
    pub fn substitute_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(q(z))`
    pub fn compose(&self, inner: &IntPolynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.leading().is_some_and(|c| c.is_negative()) {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn to_rat(&self) -> RatPolynomial {
        RatPolynomial::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(out)
    }
}

fn write_poly<C, F>(f: &mut fmt::Formatter<'_>, coeffs: &[C], sign_abs: F) -> fmt::Result
where
    F: Fn(&C) -> Option<(bool, String)>,
{
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        let Some((negative, abs)) = sign_abs(c) else {
            continue;
        };
        match (first, negative) {
            (true, true) => f.write_str("−")?,
            (true, false) => {}
            (false, true) => f.write_str(" − ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit = abs == "1";
        if i == 0 {
            f.write_str(&abs)?;
            continue;
        }
        if !unit {
            f.write_str(&abs)?;
        }
        f.write_str("z")?;
        if i > 1 {
            f.write_str(&superscript(i))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, |c| {
            (!c.is_zero()).then(|| (c.is_negative(), c.abs().to_string()))
        })
    }
}

/// Dense polynomial with rational coefficients, ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(lead) => self.scale(&lead.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division over Q.
    pub fn div_rem(&self, divisor: &RatPolynomial) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InvalidInput("division by the zero polynomial".into()));
        };
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[i]) * &lead_inv;
            if c.is_zero() {
                continue;
            }
            let shift = i - dd;
            for (t, a) in divisor.coeffs[..dd].iter().enumerate() {
                if !a.is_zero() {
                    rem[shift + t] -= &c * a;
                }
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Inverse of `self` modulo `modulus`, if the two are coprime.
    pub fn inverse_mod(&self, modulus: &RatPolynomial) -> Option<RatPolynomial> {
        // Extended Euclid tracking only the coefficient of `self`.
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus).ok()?.1);
        let (mut s0, mut s1) = (RatPolynomial::zero(), RatPolynomial::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).ok()?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let c = r0.coeffs[0].recip();
        Some(s0.scale(&c).div_rem(modulus).ok()?.1)
    }

    /// Clears denominators: a primitive integer polynomial with positive
    /// leading coefficient and the same roots.
    pub fn primitive_int(&self) -> IntPolynomial {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;
    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPolynomial::new(out)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, |c| {
            (!c.is_zero()).then(|| (c.is_negative(), c.abs().to_string()))
        })
    }
}

/// An element `re + im·i` of `Z[i]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// `|x|²`
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let minus = |v: &BigInt| if v.is_negative() { "−" } else { "" };
        let im_part = |v: &BigInt| {
            if v.abs().is_one() {
                "i".to_string()
            } else {
                format!("{}i", v.abs())
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}{}", minus(&self.re), self.re.abs()),
            (true, false) => write!(f, "{}{}", minus(&self.im), im_part(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "−" } else { "+" };
                write!(f, "{}{}{}{}", minus(&self.re), self.re.abs(), sign, im_part(&self.im))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn product_of_first_cyclotomics_is_z4_minus_1() {
        let prod = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[1, 0, 1]);
        assert_eq!(prod, p(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn multiplication_by_zero() {
        assert!((&p(&[3, 4, 5]) * &IntPolynomial::zero()).is_zero());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(
            p(&[-1, 0, 0, 0, 1]).div_exact(&p(&[1, 0, 1])).unwrap(),
            p(&[-1, 0, 1])
        );
        let divisor = &(&p(&[-1, 1]) * &p(&[1, 1])) * &p(&[1, 1, 1]);
        assert_eq!(
            IntPolynomial::x_pow_minus_one(6).div_exact(&divisor).unwrap(),
            p(&[1, -1, 1])
        );
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 0, 1])).unwrap(), p(&[1]));
    }

    #[test]
    fn inexact_division_is_reported() {
        assert_eq!(
            p(&[1, 0, 0, 1]).div_exact(&p(&[1, 0, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(p(&[1, 1]).div_exact(&p(&[1, 2])), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn gaussian_evaluation() {
        let i = GaussianInt::i();
        assert!(p(&[1, 0, 1]).eval_gaussian(&i).is_zero());
        assert_eq!(p(&[-1, 1]).eval_gaussian(&i), GaussianInt::new(-1, 1));
        assert_eq!(p(&[7]).eval_gaussian(&i), GaussianInt::new(7, 0));
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 1, 1]).is_palindromic());
        assert!(!p(&[-1, 1]).is_palindromic());
        assert!(p(&[1]).is_palindromic());
    }

    #[test]
    fn display_uses_descending_terms() {
        assert_eq!(p(&[1, 0, -1, 0, 1]).to_string(), "z⁴ − z² + 1");
        assert_eq!(p(&[-1, -1, 1]).to_string(), "z² − z − 1");
        assert_eq!(p(&[2, 1]).to_string(), "z + 2");
        assert_eq!(p(&[0, -3]).to_string(), "−3z");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(p(&[0; 12]).to_string(), "0");
        assert_eq!(p(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).to_string(), "z¹¹");
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(GaussianInt::new(-1, 1).to_string(), "−1+i");
        assert_eq!(GaussianInt::new(0, -1).to_string(), "−i");
        assert_eq!(GaussianInt::new(3, 0).to_string(), "3");
        assert_eq!(GaussianInt::zero().to_string(), "0");
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("2/10").unwrap(), rat(1, 5));
        assert_eq!(parse_rational("-7/3").unwrap(), rat(-7, 3));
        assert_eq!(parse_rational("3").unwrap(), rat(3, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn inverse_mod_cyclotomic() {
        // (1 + z) · inverse ≡ 1 mod z² + z + 1
        let m = p(&[1, 1, 1]).to_rat();
        let a = p(&[1, 1]).to_rat();
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!((&a * &inv).div_rem(&m).unwrap().1, RatPolynomial::one());
        assert!(p(&[1, -1]).to_rat().inverse_mod(&p(&[-1, 0, 1]).to_rat()).is_none());
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| IntPolynomial::from_i64(&c))
    }

    fn monic_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..6).prop_map(|mut c| {
            c.push(1);
            IntPolynomial::from_i64(&c)
        })
    }

    proptest! {
        #[test]
        fn mul_then_divide_roundtrips(a in small_poly(), b in monic_poly()) {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn rational_addition_is_exact(p in -1000i64..1000, q in 1i64..1000, r in -1000i64..1000, s in 1i64..1000) {
            let x = rat(p, q);
            let y = rat(r, s);
            prop_assert_eq!(&(&x + &y) - &y, x);
        }

        #[test]
        fn gaussian_norm_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000, d in -1000i64..1000) {
            let x = GaussianInt::new(a, b);
            let y = GaussianInt::new(c, d);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }
    }
}
