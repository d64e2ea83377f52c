//! JSON shapes for command output.
//!
//! Integers are JSON numbers when they fit in 64 bits and decimal strings
//! otherwise. Polynomials are ascending coefficient arrays, field elements
//! are `{conductor, numerators, denominator}` over the power basis.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::arith::{BigInt, GaussianInt, IntPolynomial, Rational};
use crate::cyclofield::{BiquadDescriptor, CycloElement, KPolynomial};
use crate::cyclotomic::CyclotomicRecord;
use crate::error::{Error, Result};
use crate::independence::{Criterion, Verdict};
use crate::minpoly::{MinPolyInfo, ReducedAngle, TrigKind};
use crate::ntheory::totient;
use crate::triangles::{Classified, HighSchoolVerdict};

/// Largest conductor accepted when decoding field elements.
pub const MAX_JSON_CONDUCTOR: u64 = 1 << 16;

/// Unbounded integer with a JSON-number encoding when possible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
        let digits = v.strip_prefix('-').unwrap_or(v);
        if digits.is_empty() || digits.len() > 4096 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(E::custom(format!("not an integer: {v:?}")));
        }
        v.parse().map(JsonInt).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs().len()))?;
        for c in self.coeffs() {
            seq.serialize_element(&JsonInt(c.clone()))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = IntPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<IntPolynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(JsonInt(c)) = seq.next_element()? {
                    coeffs.push(c);
                }
                Ok(IntPolynomial::new(coeffs))
            }
        }
        d.deserialize_seq(V)
    }
}

#[derive(Serialize, Deserialize)]
struct GaussianJson {
    re: JsonInt,
    im: JsonInt,
}

impl Serialize for GaussianInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianJson {
            re: JsonInt(self.re.clone()),
            im: JsonInt(self.im.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = GaussianJson::deserialize(d)?;
        Ok(GaussianInt::new(g.re.0, g.im.0))
    }
}

/// A cyclotomic field element: `Σ numerators[i] ζ^i / denominator` with
/// `0 ≤ i < φ(conductor)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub conductor: u64,
    pub numerators: Vec<JsonInt>,
    pub denominator: JsonInt,
}

impl From<&CycloElement> for ElementJson {
    fn from(x: &CycloElement) -> Self {
        let coords = x.power_basis();
        let den = coords.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scale = Rational::from_integer(den.clone());
        ElementJson {
            conductor: x.conductor(),
            numerators: coords.iter().map(|c| JsonInt((c * &scale).to_integer())).collect(),
            denominator: JsonInt(den),
        }
    }
}

impl TryFrom<&ElementJson> for CycloElement {
    type Error = Error;

    fn try_from(e: &ElementJson) -> Result<Self> {
        if e.conductor == 0 || e.conductor > MAX_JSON_CONDUCTOR {
            return Err(Error::InvalidInput(format!("conductor {} out of range", e.conductor)));
        }
        if e.numerators.len() as u64 != totient(e.conductor) {
            return Err(Error::InvalidInput(format!(
                "conductor {} needs {} numerators, got {}",
                e.conductor,
                totient(e.conductor),
                e.numerators.len()
            )));
        }
        if !e.denominator.0.is_positive() {
            return Err(Error::InvalidInput("denominator must be positive".into()));
        }
        let coords: Vec<Rational> = e
            .numerators
            .iter()
            .map(|n| Rational::new(n.0.clone(), e.denominator.0.clone()))
            .collect();
        Ok(CycloElement::from_power_basis(e.conductor, &coords))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloReport {
    pub n: u64,
    pub poly: IntPolynomial,
    pub phi_n: u64,
    pub squarefree: bool,
    pub moebius: i64,
    pub triple: [i64; 3],
}

impl CycloReport {
    pub fn new(rec: &CyclotomicRecord, triple: [i64; 3]) -> Self {
        CycloReport {
            n: rec.n,
            poly: (*rec.poly).clone(),
            phi_n: rec.phi_n,
            squarefree: rec.squarefree,
            moebius: rec.moebius,
            triple,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiAtIReport {
    pub n: u64,
    pub value: GaussianInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinPolyReport {
    pub kind: TrigKind,
    pub angle: ReducedAngle,
    pub poly: IntPolynomial,
    pub degree: u64,
    pub sign_exponent: i64,
    /// `2(−1)^sign_exponent` times the cosine or sine, a root of `poly`.
    pub root: ElementJson,
}

impl MinPolyReport {
    pub fn new(info: &MinPolyInfo, root: &CycloElement) -> Self {
        MinPolyReport {
            kind: info.kind,
            angle: info.angle,
            poly: (*info.poly).clone(),
            degree: info.degree,
            sign_exponent: info.sign_exponent,
            root: root.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndepReport {
    pub criterion: Criterion,
    pub oracle: Option<Verdict>,
}

impl IndepReport {
    /// The oracle's answer when it ran, else the criterion's.
    pub fn verdict(&self) -> Option<&Verdict> {
        match (&self.oracle, &self.criterion) {
            (Some(v), _) | (None, Criterion::Decided(v)) => Some(v),
            (None, Criterion::Inapplicable) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorReport {
    pub n: u64,
    pub field: BiquadDescriptor,
    pub conductor: u64,
    pub factors: Vec<KPolynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub max_n: u64,
    pub isosceles: usize,
    pub right: usize,
    pub neither: usize,
    pub triangles: Vec<Classified>,
}

impl ClassifyReport {
    /// The isosceles and right counts overlap at `π(1,1,2)/4`.
    pub fn new(max_n: u64, triangles: Vec<Classified>) -> Self {
        let count = |f: fn(&Classified) -> bool| triangles.iter().filter(|c| f(c)).count();
        ClassifyReport {
            max_n,
            isosceles: count(|c| c.shape.is_isosceles()),
            right: count(|c| c.shape.is_right()),
            neither: count(|c| !c.shape.is_isosceles() && !c.shape.is_right()),
            triangles,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub fast: bool,
    pub verified: HighSchoolVerdict,
}

/// One named check inside a verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckOutcome>) -> Self {
        SuiteReport {
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {}: {}", c.name, c.detail)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "suite {}: {} checks, {} failed",
            self.suite,
            self.checks.len(),
            failed
        )
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
