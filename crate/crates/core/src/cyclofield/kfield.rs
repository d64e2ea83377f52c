use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{sqrt_element, CycloElement};
use crate::arith::{parse_rational, BigInt, Rational};
use crate::error::{Error, Result};
use crate::ntheory::{is_squarefree, quadratic_conductor};

/// `Σ q_d √d` over squarefree `d`, with `d = 1` the rational part.
///
/// Serialized as a map from `d` to the coefficient written `p/q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "BTreeMap<i64, String>", try_from = "BTreeMap<String, String>")]
pub struct KElement {
    terms: BTreeMap<i64, Rational>,
}

impl KElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn rational(q: Rational) -> Self {
        Self::term(1, q)
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Rational::from_integer(n.into()))
    }

    /// `q·√d`
    pub fn term(d: i64, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(d, q);
        }
        KElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut out = KElement::zero();
        for (d, q) in terms {
            out = &out + &KElement::term(d, q);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    /// The value inside `Q(ζ_m)`.
    pub fn to_element(&self, m: u64) -> Result<CycloElement> {
        let mut acc = CycloElement::zero(m);
        for (&d, q) in &self.terms {
            let base = if d == 1 {
                CycloElement::one(m)
            } else {
                sqrt_element(d, m)?
            };
            acc = &acc + &base.scale(q);
        }
        Ok(acc)
    }

    /// Smallest conductor containing every radical that occurs.
    pub fn conductor(&self) -> u64 {
        self.terms
            .keys()
            .filter(|&&d| d != 1)
            .fold(1, |m, &d| m.lcm(&quadratic_conductor(d)))
    }

    fn leading_negative(&self) -> bool {
        self.terms.values().next().is_some_and(|q| q.is_negative())
    }

    fn body(&self) -> (String, bool) {
        let den = self.terms.values().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        let mut s = String::new();
        for (i, (&d, q)) in self.terms.iter().enumerate() {
            let n = (q * Rational::from_integer(den.clone())).to_integer();
            let sign = if n.is_negative() { "−" } else { "+" };
            if i == 0 {
                if n.is_negative() {
                    s.push('−');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            let a = n.abs();
            match (d, a.is_one()) {
                (1, _) => s.push_str(&a.to_string()),
                (_, true) => s.push_str(&format!("√{}", radicand(d))),
                (_, false) => s.push_str(&format!("{a}√{}", radicand(d))),
            }
        }
        if den.is_one() {
            (s, self.terms.len() > 1)
        } else if self.terms.len() > 1 {
            (format!("({s})/{den}"), false)
        } else {
            (format!("{s}/{den}"), false)
        }
    }
}

impl From<KElement> for BTreeMap<i64, String> {
    fn from(k: KElement) -> Self {
        k.terms.into_iter().map(|(d, q)| (d, q.to_string())).collect()
    }
}

// Keys arrive as strings: integer map keys do not survive serde's
// buffering of internally tagged enums.
impl TryFrom<BTreeMap<String, String>> for KElement {
    type Error = Error;

    fn try_from(map: BTreeMap<String, String>) -> Result<Self> {
        let mut terms = Vec::new();
        for (key, text) in map {
            let d: i64 = key
                .parse()
                .ok()
                .filter(|d: &i64| d.to_string() == key)
                .ok_or_else(|| Error::InvalidInput(format!("bad radicand {key:?}")))?;
            if d != 1 && (d == 0 || !is_squarefree(d.unsigned_abs())) {
                return Err(Error::NotSquarefree(d.unsigned_abs()));
            }
            terms.push((d, parse_rational(&text)?));
        }
        Ok(KElement::from_terms(terms))
    }
}

fn radicand(d: i64) -> String {
    if d < 0 {
        format!("({d})")
    } else {
        d.to_string()
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.body().0)
    }
}

impl Add for &KElement {
    type Output = KElement;
    fn add(self, rhs: &KElement) -> KElement {
        let mut terms = self.terms.clone();
        for (&d, q) in &rhs.terms {
            let slot = terms.entry(d).or_insert_with(Rational::zero);
            *slot += q;
        }
        terms.retain(|_, q| !q.is_zero());
        KElement { terms }
    }
}

impl Neg for &KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        KElement {
            terms: self.terms.iter().map(|(&d, q)| (d, -q)).collect(),
        }
    }
}

impl Sub for &KElement {
    type Output = KElement;
    fn sub(self, rhs: &KElement) -> KElement {
        self + &(-rhs)
    }
}

impl Mul for &KElement {
    type Output = KElement;
    fn mul(self, rhs: &KElement) -> KElement {
        let mut out = KElement::zero();
        for (&a, p) in &self.terms {
            for (&b, q) in &rhs.terms {
                // √a √b = g √(ab/g²), with an extra −1 when both are negative
                let g = a.unsigned_abs().gcd(&b.unsigned_abs()) as i64;
                let mut c = p * q * Rational::from_integer(g.into());
                if a < 0 && b < 0 {
                    c = -c;
                }
                out = &out + &KElement::term(a / g * (b / g), c);
            }
        }
        out
    }
}

/// A positive number `(a + b√d)/c`, written as in side-ratio tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RadicalExpr {
    pub a: i64,
    pub b: i64,
    pub d: u64,
    pub c: u64,
}

impl RadicalExpr {
    /// Normalizes: `d = 1` folds `b` into `a`, and `gcd(a, b, c) = 1`.
    pub fn new(a: i64, b: i64, d: u64, c: u64) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidInput("radical denominator is zero".into()));
        }
        if d == 0 || !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        let (mut a, mut b, mut d) = (a, b, d);
        if d == 1 || b == 0 {
            a += b;
            b = 0;
            d = 1;
        }
        let g = (a.unsigned_abs().gcd(&b.unsigned_abs())).gcd(&c).max(1);
        Ok(RadicalExpr {
            a: a / g as i64,
            b: b / g as i64,
            d,
            c: c / g,
        })
    }

    pub fn to_kelement(&self) -> KElement {
        let c = self.c as i64;
        KElement::from_terms([
            (1, Rational::new(self.a.into(), c.into())),
            (self.d as i64, Rational::new(self.b.into(), c.into())),
        ])
    }

    pub fn to_element(&self, m: u64) -> Result<CycloElement> {
        self.to_kelement().to_element(m)
    }

    /// Discriminant of the field the value lives in (1 when rational).
    pub fn conductor(&self) -> u64 {
        if self.d == 1 {
            1
        } else {
            quadratic_conductor(self.d as i64)
        }
    }

    /// Sign of the value, decided exactly.
    pub fn is_positive(&self) -> bool {
        let (a, b, d) = (self.a as i128, self.b as i128, self.d as i128);
        match (a.signum(), b.signum()) {
            (_, 0) => a > 0,
            (1, 1) | (0, 1) => true,
            (-1, -1) | (0, -1) => false,
            // opposite signs: compare a² with b²d
            (1, -1) => a * a > b * b * d,
            _ => b * b * d > a * a,
        }
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.b != 0 {
            if self.b < 0 {
                s.push('−');
            }
            if self.b.abs() != 1 {
                s.push_str(&self.b.abs().to_string());
            }
            s.push_str(&format!("√{}", self.d));
            if self.a != 0 {
                let sign = if self.a < 0 { '−' } else { '+' };
                s.push_str(&format!(" {sign} {}", self.a.abs()));
            }
        } else {
            if self.a < 0 {
                s.push('−');
            }
            s.push_str(&self.a.abs().to_string());
        }
        if self.c == 1 {
            f.write_str(&s)
        } else if self.b != 0 && self.a != 0 {
            write!(f, "({s})/{}", self.c)
        } else {
            write!(f, "{s}/{}", self.c)
        }
    }
}

/// Splits a coefficient into its sign and its display text.
pub(crate) fn coefficient_parts(k: &KElement) -> (bool, String, bool) {
    let neg = k.leading_negative();
    let body = if neg { (-k).body() } else { k.body() };
    (neg, body.0, body.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn multiplication_of_radicals() {
        let s2 = KElement::term(2, rat(1, 1));
        let s3 = KElement::term(3, rat(1, 1));
        let s6 = KElement::term(6, rat(1, 1));
        assert_eq!(&s2 * &s2, KElement::integer(2));
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s6 * &s3, KElement::term(2, rat(3, 1)));
        let i = KElement::term(-1, rat(1, 1));
        assert_eq!(&i * &i, KElement::integer(-1));
    }

    #[test]
    fn display_forms() {
        let x = KElement::from_terms([(1, rat(5, 2)), (5, rat(1, 2))]);
        assert_eq!(x.to_string(), "(5 + √5)/2");
        assert_eq!(KElement::from_terms([(1, rat(-2, 1)), (2, rat(1, 1))]).to_string(), "−2 + √2");
        assert_eq!(KElement::term(2, rat(-3, 1)).to_string(), "−3√2");
        assert_eq!(KElement::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let x = KElement::from_terms([(1, rat(-3, 2)), (2, rat(1, 1)), (6, rat(5, 7))]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"1":"-3/2","2":"1","6":"5/7"}"#);
        assert_eq!(serde_json::from_str::<KElement>(&text).unwrap(), x);
        assert!(serde_json::from_str::<KElement>(r#"{"4":"1"}"#).is_err());
    }

    #[test]
    fn element_values() {
        let x = KElement::from_terms([(1, rat(1, 2)), (5, rat(1, 2))]);
        let (re, _) = x.to_element(5).unwrap().approx();
        assert!((re - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(x.conductor(), 5);
    }

    #[test]
    fn radical_normalization() {
        let r = RadicalExpr::new(2, 2, 5, 4).unwrap();
        assert_eq!((r.a, r.b, r.d, r.c), (1, 1, 5, 2));
        let r = RadicalExpr::new(1, 3, 1, 2).unwrap();
        assert_eq!((r.a, r.b, r.d, r.c), (2, 0, 1, 1));
        assert!(RadicalExpr::new(1, 1, 4, 1).is_err());
        assert!(RadicalExpr::new(1, 1, 2, 0).is_err());
    }

    #[test]
    fn radical_display_and_sign() {
        assert_eq!(RadicalExpr::new(1, 1, 5, 1).unwrap().to_string(), "√5 + 1");
        assert_eq!(RadicalExpr::new(-1, 1, 3, 1).unwrap().to_string(), "√3 − 1");
        assert_eq!(RadicalExpr::new(0, 2, 2, 1).unwrap().to_string(), "2√2");
        assert_eq!(RadicalExpr::new(1, 1, 5, 2).unwrap().to_string(), "(√5 + 1)/2");
        assert!(RadicalExpr::new(-1, 1, 3, 1).unwrap().is_positive());
        assert!(!RadicalExpr::new(-2, 1, 3, 1).unwrap().is_positive());
        assert!(RadicalExpr::new(3, -1, 5, 1).unwrap().is_positive());
    }
}
