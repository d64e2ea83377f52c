//! Linear (in)dependence of `1, cos(πr₁), cos(πr₂)` over `Q` and over real
//! quadratic fields.
//!
//! Each question has two answers: the closed-form criterion, and a rank
//! computation on exact embeddings in a cyclotomic field. Dependent
//! verdicts carry a relation, and every relation is checked by substitution.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{BigInt, RatPolynomial, Rational};
use crate::cyclofield::kfield_parts as coefficient_parts;
use crate::cyclofield::{cos_conductor, embed_cos, nullspace_over_q, sqrt_element, CycloElement, KElement};
use crate::error::{Error, Result};
use crate::linalg::normalize_int;
use crate::minpoly::{cos_min_poly, ReducedAngle};
use crate::ntheory::{is_squarefree, lcm, moebius, quadratic_conductor};

/// Why a verdict came out the way it did.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// `r₁ − r₂` or `r₁ + r₂` is an integer.
    AngleSumOrDiffInteger,
    /// Some `N(r_j) ≤ 3`, so that cosine is rational.
    SmallDenominator,
    FiveFivePair,
    CriterionIndependent,
    OracleRank,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub angles: Vec<ReducedAngle>,
    /// `d` when the question is asked over `Q(√d)`, `None` over `Q`.
    pub field: Option<i64>,
    pub independent: bool,
    pub reason: Reason,
    /// Coefficients of `1, cos(πr₁), cos(πr₂), …`; present iff dependent.
    pub relation: Option<Vec<KElement>>,
}

/// Result of a criterion that may not cover the input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Criterion {
    Decided(Verdict),
    Inapplicable,
}

impl Verdict {
    fn independent(angles: Vec<ReducedAngle>, field: Option<i64>, reason: Reason) -> Self {
        Verdict {
            angles,
            field,
            independent: true,
            reason,
            relation: None,
        }
    }

    fn dependent(angles: Vec<ReducedAngle>, field: Option<i64>, reason: Reason, relation: Vec<KElement>) -> Result<Self> {
        let v = Verdict {
            angles,
            field,
            independent: false,
            reason,
            relation: Some(relation),
        };
        v.check_relation()?;
        Ok(v)
    }

    /// Substitutes the relation into exact embeddings; `Ok` when it
    /// vanishes, or when there is no relation to check.
    pub fn check_relation(&self) -> Result<()> {
        let Some(relation) = &self.relation else {
            return Ok(());
        };
        if relation.len() != self.angles.len() + 1 || relation.iter().all(KElement::is_zero) {
            return Err(Error::Verification("relation has the wrong shape".into()));
        }
        let mut m = cos_conductor(&self.angles);
        for c in relation {
            m = lcm(m, c.conductor());
        }
        let mut acc = relation[0].to_element(m)?;
        for (c, a) in relation[1..].iter().zip(&self.angles) {
            acc = &acc + &(&c.to_element(m)? * &embed_cos(a, m)?);
        }
        if !acc.is_zero() {
            return Err(Error::Verification(format!("relation {} does not vanish", self.relation_text())));
        }
        Ok(())
    }

    /// The relation as an equation, e.g. `2cos(π/5) − 2cos(2π/5) = 1`.
    pub fn relation_text(&self) -> String {
        match &self.relation {
            None => String::new(),
            Some(rel) => format_relation(rel, &self.angles),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.independent { "independent" } else { "dependent" })?;
        if let Some(d) = self.field {
            write!(f, " over Q(√{d})")?;
        }
        if !self.independent {
            write!(f, ": {}", self.relation_text())?;
        }
        Ok(())
    }
}

fn cos_text(a: &ReducedAngle) -> String {
    format!("cos({})", a.pi_string())
}

fn push_term(out: &mut String, coeff: &BigInt, text: &str) {
    if coeff.is_zero() {
        return;
    }
    let neg = coeff.is_negative();
    if out.is_empty() {
        if neg {
            out.push('−');
        }
    } else {
        out.push_str(if neg { " − " } else { " + " });
    }
    let a = coeff.abs();
    if text.is_empty() {
        out.push_str(&a.to_string());
    } else if a.is_one() {
        out.push_str(text);
    } else {
        out.push_str(&format!("{a}{text}"));
    }
}

fn format_relation(rel: &[KElement], angles: &[ReducedAngle]) -> String {
    let rational: Option<Vec<Rational>> = rel.iter().map(KElement::as_rational).collect();
    if let Some(q) = rational {
        // Σ c_j cos(πr_j) = −c_0 with integers and a positive leading term
        let mut ints = crate::linalg::normalize_rational(&q);
        if ints[1..].iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        let mut lhs = String::new();
        for (c, a) in ints[1..].iter().zip(angles) {
            push_term(&mut lhs, c, &cos_text(a));
        }
        let mut rhs = String::new();
        push_term(&mut rhs, &-&ints[0], "");
        if rhs.is_empty() {
            rhs.push('0');
        }
        return format!("{lhs} = {rhs}");
    }
    // The last nonzero coefficient is −1: solve for that cosine.
    let last = rel.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    let mut rhs = String::new();
    for (j, c) in rel.iter().enumerate().take(last) {
        if c.is_zero() {
            continue;
        }
        let term = if j == 0 {
            c.to_string()
        } else {
            let cos = cos_text(&angles[j - 1]);
            let (neg, body, _) = coefficient_parts(c);
            let sign = if neg { "−" } else { "" };
            let text = c.to_string();
            if c.terms().len() > 1 {
                if text.starts_with('(') {
                    format!("{text}·{cos}")
                } else {
                    format!("({text}){cos}")
                }
            } else if body == "1" {
                format!("{sign}{cos}")
            } else if body.chars().all(|ch| ch.is_ascii_digit()) {
                format!("{sign}{body}{cos}")
            } else {
                format!("{sign}({body}){cos}")
            }
        };
        match (rhs.is_empty(), term.strip_prefix('−')) {
            (true, _) => rhs.push_str(&term),
            (false, Some(rest)) => rhs.push_str(&format!(" − {rest}")),
            (false, None) => rhs.push_str(&format!(" + {term}")),
        }
    }
    let lhs = if last == 0 { "0".to_string() } else { cos_text(&angles[last - 1]) };
    if rhs.is_empty() {
        rhs.push('0');
    }
    format!("{lhs} = {rhs}")
}

fn int_relation(v: Vec<BigInt>) -> Vec<KElement> {
    normalize_int(v)
        .into_iter()
        .map(|c| KElement::rational(Rational::from_integer(c)))
        .collect()
}

fn check_radicand(d: i64) -> Result<()> {
    if d < 2 || !is_squarefree(d as u64) {
        return Err(Error::NotSquarefree(d.unsigned_abs()));
    }
    Ok(())
}

/// `2cos(πr)` when it is rational, i.e. when `N(r) ≤ 3`.
pub fn niven_check(r: &ReducedAngle) -> Option<Rational> {
    let (k, n) = (r.k(), r.n());
    let v = match (n, k) {
        (1, 0) => 2,
        (1, _) => -2,
        (2, _) => 0,
        (3, 1 | 5) => 1,
        (3, _) => -1,
        _ => return None,
    };
    Some(Rational::from_integer(v.into()))
}

/// `(−1)^q` when `r₁ − r₂ = q` or `r₁ + r₂ = q` is an integer.
fn integer_sum_or_difference(r1: &ReducedAngle, r2: &ReducedAngle) -> Option<i64> {
    if r1.n() != r2.n() {
        return None;
    }
    let n = r1.n() as i64;
    let (k1, k2) = (r1.k() as i64, r2.k() as i64);
    [k1 - k2, k1 + k2]
        .into_iter()
        .find(|s| s % n == 0)
        .map(|s| if (s / n) % 2 == 0 { 1 } else { -1 })
}

/// `cos(πk/5) = ε·cos(tπ/5)` with `t ∈ {1, 2}`.
fn five_class(r: &ReducedAngle) -> (i64, usize) {
    match r.k() % 10 {
        1 | 9 => (1, 1),
        4 | 6 => (-1, 1),
        2 | 8 => (1, 2),
        _ => (-1, 2),
    }
}

fn criterion(r1: &ReducedAngle, r2: &ReducedAngle, field: Option<i64>) -> Result<Verdict> {
    let angles = vec![*r1, *r2];
    let zero = BigInt::zero;
    if let Some(sign) = integer_sum_or_difference(r1, r2) {
        // cos(πr₁) = ±cos(πr₂)
        let v = vec![zero(), BigInt::one(), BigInt::from(-sign)];
        return Verdict::dependent(angles, field, Reason::AngleSumOrDiffInteger, int_relation(v));
    }
    for (j, r) in [r1, r2].into_iter().enumerate() {
        if let Some(value) = niven_check(r) {
            let mut v = vec![value.to_integer(), zero(), zero()];
            v[j + 1] = BigInt::from(-2);
            return Verdict::dependent(angles, field, Reason::SmallDenominator, int_relation(v));
        }
    }
    if r1.n() == 5 && r2.n() == 5 {
        // 2cos(π/5) − 2cos(2π/5) = 1, rewritten in terms of the given cosines
        let (e1, t1) = five_class(r1);
        let (e2, t2) = five_class(r2);
        if t1 == t2 {
            return Err(Error::Verification(format!("{r1} and {r2} share a cosine up to sign")));
        }
        let mut v = vec![BigInt::from(-1), zero(), zero()];
        for (j, e, t) in [(1, e1, t1), (2, e2, t2)] {
            v[j] = BigInt::from(if t == 1 { 2 * e } else { -2 * e });
        }
        return Verdict::dependent(angles, field, Reason::FiveFivePair, int_relation(v));
    }
    Ok(Verdict::independent(angles, field, Reason::CriterionIndependent))
}

/// `Q`-(in)dependence of `1, cos(πr₁), cos(πr₂)` from the closed-form
/// criterion.
pub fn theorem2_verdict(r1: &ReducedAngle, r2: &ReducedAngle) -> Result<Verdict> {
    criterion(r1, r2, None)
}

/// The criterion, cross-checked against the rank oracle.
pub fn theorem2_verdict_checked(r1: &ReducedAngle, r2: &ReducedAngle) -> Result<Verdict> {
    let v = theorem2_verdict(r1, r2)?;
    let o = oracle_q(&[*r1, *r2])?;
    if v.independent != o.independent {
        return Err(Error::Verification(format!(
            "criterion says {} but rank says {} for ({r1}, {r2})",
            v.independent, o.independent
        )));
    }
    Ok(v)
}

/// `Q(√d)`-(in)dependence by the criterion, which needs `gcd(d, N(r_j)) = 1`.
pub fn theorem33_verdict(r1: &ReducedAngle, r2: &ReducedAngle, d: i64) -> Result<Criterion> {
    check_radicand(d)?;
    let coprime = |r: &ReducedAngle| (d as u64).gcd(&r.n()) == 1;
    if !(coprime(r1) && coprime(r2)) {
        return Ok(Criterion::Inapplicable);
    }
    Ok(Criterion::Decided(criterion(r1, r2, Some(d))?))
}

/// Rank of `1, cos(πr₁), …, cos(πr_k)` over `Q`, with the first nullspace
/// vector as relation.
pub fn oracle_q(rs: &[ReducedAngle]) -> Result<Verdict> {
    if rs.is_empty() {
        return Err(Error::InvalidInput("no angles given".into()));
    }
    let m = cos_conductor(rs);
    let mut xs = vec![CycloElement::one(m)];
    for r in rs {
        xs.push(embed_cos(r, m)?);
    }
    let angles = rs.to_vec();
    match nullspace_over_q(&xs)?.into_iter().next() {
        None => Ok(Verdict::independent(angles, None, Reason::OracleRank)),
        Some(v) => Verdict::dependent(angles, None, Reason::OracleRank, int_relation(v)),
    }
}

/// Rank test over `Q(√d)`: the three numbers are dependent over `Q(√d)`
/// exactly when `1, √d, z₁, √d z₁, z₂, √d z₂` are dependent over `Q`.
pub fn oracle_quadratic(r1: &ReducedAngle, r2: &ReducedAngle, d: i64) -> Result<Verdict> {
    check_radicand(d)?;
    let angles = vec![*r1, *r2];
    let m = lcm(cos_conductor(&angles), quadratic_conductor(d));
    let s = sqrt_element(d, m)?;
    let mut xs = Vec::with_capacity(6);
    for z in [CycloElement::one(m), embed_cos(r1, m)?, embed_cos(r2, m)?] {
        xs.push(&s * &z);
        xs.push(z);
    }
    // reorder to 1, √d, z₁, √d z₁, z₂, √d z₂
    for pair in xs.chunks_mut(2) {
        pair.swap(0, 1);
    }
    let Some(v) = nullspace_over_q(&xs)?.into_iter().next() else {
        return Ok(Verdict::independent(angles, Some(d), Reason::OracleRank));
    };
    let coeffs: Vec<KElement> = v
        .chunks(2)
        .map(|ab| {
            KElement::from_terms([
                (1, Rational::from_integer(ab[0].clone())),
                (d, Rational::from_integer(ab[1].clone())),
            ])
        })
        .collect();
    Verdict::dependent(angles, Some(d), Reason::OracleRank, normalize_k_relation(coeffs)?)
}

/// Rational relations become coprime integers with a positive leading
/// entry; others are scaled so the last nonzero coefficient is −1.
fn normalize_k_relation(coeffs: Vec<KElement>) -> Result<Vec<KElement>> {
    let last = coeffs
        .iter()
        .rposition(|c| !c.is_zero())
        .ok_or_else(|| Error::Verification("empty relation".into()))?;
    let scaled = match coeffs[last].as_rational() {
        Some(q) => {
            let s = KElement::rational(-q.recip());
            coeffs.iter().map(|c| c * &s).collect()
        }
        None => {
            // 1/(a + b√d) = (a − b√d)/(a² − b²d)
            let c = &coeffs[last];
            let a = c.terms().get(&1).cloned().unwrap_or_default();
            let (&d, b) = c.terms().iter().find(|(&d, _)| d != 1).expect("irrational coefficient");
            let norm = &a * &a - b * b * Rational::from_integer(d.into());
            let inv = KElement::from_terms([(1, -&a / &norm), (d, b / &norm)]);
            coeffs.iter().map(|x| x * &inv).collect::<Vec<_>>()
        }
    };
    let rational: Option<Vec<Rational>> = scaled.iter().map(KElement::as_rational).collect();
    Ok(match rational {
        Some(q) => int_relation(crate::linalg::normalize_rational(&q)),
        None => scaled,
    })
}

/// Checks `2 Σ (−1)^j cos(πj/n) = μ(n)`, the sum over `1 ≤ j < n/2` coprime
/// to `n`, and returns `μ(n)`.
pub fn moebius_cos_identity(n: u64) -> Result<i64> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidInput(format!("{n} is not an odd integer ≥ 3")));
    }
    let m = 2 * n;
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for j in (1..=(n - 1) / 2).filter(|j| j.gcd(&n) == 1) {
        let sign = BigInt::from(if j % 2 == 0 { 1 } else { -1 });
        terms.push((j as i64, sign.clone()));
        terms.push((-(j as i64), sign));
    }
    let lhs = CycloElement::from_terms(m, terms);
    let mu = moebius(n);
    if lhs != CycloElement::from_integer(m, mu) {
        return Err(Error::Verification(format!("Möbius cosine sum fails at n = {n}")));
    }
    Ok(mu)
}

/// `s⁻ⁿ P_N(sz + t)` where `n = deg P_N`.
pub fn shifted_cos_min_poly(n: u64, s: &Rational, t: &Rational) -> Result<RatPolynomial> {
    if s.is_zero() {
        return Err(Error::InvalidInput("shift scale is zero".into()));
    }
    let p = cos_min_poly(n);
    let inner = RatPolynomial::new(vec![t.clone(), s.clone()]);
    let mut acc = RatPolynomial::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &inner) + &RatPolynomial::new(vec![Rational::from_integer(c.clone())]);
    }
    let deg = p.degree().unwrap_or(0) as i32;
    Ok(acc.scale(&s.pow(-deg)))
}

/// Whether `s⁻ⁿ P_N(sz + t) = P_N`.
pub fn shift_fixes_min_poly(n: u64, s: &Rational, t: &Rational) -> Result<bool> {
    Ok(shifted_cos_min_poly(n, s, t)? == cos_min_poly(n).to_rat())
}

/// Representatives `k/N` with `0 ≤ k/N ≤ 1`, which cover every value of
/// `cos(πr)`.
pub fn half_turn_angles(n: u64) -> Vec<ReducedAngle> {
    (0..=n)
        .filter(|&k| k.gcd(&n) == 1)
        .map(|k| ReducedAngle::new(k as i64, n).expect("positive denominator"))
        .collect()
}

/// A pair of angles with `r₁ ± r₂ ∉ Z`.
pub fn generic_pair(r1: &ReducedAngle, r2: &ReducedAngle) -> bool {
    integer_sum_or_difference(r1, r2).is_none()
}

/// Squarefree `d ≥ 2` whose square root lives in the field of the cosines.
pub fn relevant_radicands(r1: &ReducedAngle, r2: &ReducedAngle) -> Vec<i64> {
    let m = cos_conductor([r1, r2]);
    (2..=m as i64)
        .filter(|&d| is_squarefree(d as u64) && m % quadratic_conductor(d) == 0)
        .collect()
}

/// Generic pairs with `N(r_j) ≥ 7`, both at most `max_n`, that are
/// dependent over some real quadratic field.
///
/// Over `Q(√d)` with `√d` outside the cosines' field, dependence reduces to
/// dependence over `Q`, so only radicands inside that field are tried.
pub fn quadratic_dependence_sweep(max_n: u64) -> Result<Vec<Verdict>> {
    let mut found = Vec::new();
    for n1 in 7..=max_n {
        for n2 in n1..=max_n {
            for r1 in half_turn_angles(n1) {
                for r2 in half_turn_angles(n2) {
                    if (n1 == n2 && r2 <= r1) || !generic_pair(&r1, &r2) {
                        continue;
                    }
                    for d in relevant_radicands(&r1, &r2) {
                        let v = oracle_quadratic(&r1, &r2, d)?;
                        if !v.independent {
                            found.push(v);
                        }
                    }
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::cyclofield::two_cos;

    fn a(k: i64, n: u64) -> ReducedAngle {
        ReducedAngle::new(k, n).unwrap()
    }

    fn ints(v: &Verdict) -> Vec<i64> {
        v.relation
            .as_ref()
            .unwrap()
            .iter()
            .map(|c| c.as_rational().unwrap().to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn niven_matches_embeddings() {
        for n in 1..=12u64 {
            for k in 0..2 * n as i64 {
                let r = a(k, n);
                let exact = two_cos(&r, 2 * r.n()).unwrap().as_rational();
                assert_eq!(niven_check(&r), exact.filter(|_| r.n() <= 3), "{r}");
            }
        }
        assert_eq!(niven_check(&a(1, 3)), Some(rat(1, 1)));
        assert_eq!(niven_check(&a(0, 1)), Some(rat(2, 1)));
        assert_eq!(niven_check(&a(1, 4)), None);
    }

    #[test]
    fn golden_pair() {
        let v = theorem2_verdict(&a(1, 5), &a(2, 5)).unwrap();
        assert!(!v.independent);
        assert_eq!(v.reason, Reason::FiveFivePair);
        assert_eq!(ints(&v), vec![1, -2, 2]);
        assert_eq!(v.to_string(), "dependent: 2cos(π/5) − 2cos(2π/5) = 1");
        let o = oracle_q(&[a(1, 5), a(2, 5)]).unwrap();
        assert_eq!(o.relation, v.relation);
    }

    #[test]
    fn q_criterion_examples() {
        let v = theorem2_verdict(&a(1, 7), &a(2, 7)).unwrap();
        assert!(v.independent);
        assert_eq!(v.to_string(), "independent");
        let v = theorem2_verdict(&a(1, 4), &a(3, 4)).unwrap();
        assert_eq!(v.reason, Reason::AngleSumOrDiffInteger);
        assert_eq!(v.relation_text(), "cos(π/4) + cos(3π/4) = 0");
        let v = theorem2_verdict(&a(1, 3), &a(2, 7)).unwrap();
        assert_eq!(v.relation_text(), "2cos(π/3) = 1");
    }

    #[test]
    fn every_five_five_pair_has_a_verified_relation() {
        let reps = half_turn_angles(5);
        for r1 in &reps {
            for r2 in &reps {
                if generic_pair(r1, r2) {
                    let v = theorem2_verdict(r1, r2).unwrap();
                    assert_eq!(v.reason, Reason::FiveFivePair);
                    v.check_relation().unwrap();
                }
            }
        }
    }

    #[test]
    fn criterion_agrees_with_oracle_small() {
        for n1 in 1..=12 {
            for n2 in 1..=12 {
                for r1 in half_turn_angles(n1) {
                    for r2 in half_turn_angles(n2) {
                        theorem2_verdict_checked(&r1, &r2).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn seven_term_identity() {
        let v = oracle_q(&[a(1, 7), a(2, 7), a(3, 7)]).unwrap();
        assert_eq!(ints(&v), vec![1, -2, 2, -2]);
        assert_eq!(v.relation_text(), "2cos(π/7) − 2cos(2π/7) + 2cos(3π/7) = 1");
        assert!(!oracle_q(&[a(1, 3)]).unwrap().independent);
        assert!(oracle_q(&[a(1, 7), a(2, 7)]).unwrap().independent);
    }

    #[test]
    fn quadratic_examples() {
        let v = oracle_quadratic(&a(1, 8), &a(3, 8), 2).unwrap();
        assert!(!v.independent);
        let rel = v.relation.clone().unwrap();
        assert_eq!(rel[0], KElement::zero());
        assert_eq!(rel[1], KElement::from_terms([(1, rat(-1, 1)), (2, rat(1, 1))]));
        assert_eq!(rel[2], KElement::integer(-1));
        assert_eq!(v.relation_text(), "cos(3π/8) = (−1 + √2)cos(π/8)");
        assert!(oracle_quadratic(&a(1, 16), &a(7, 16), 2).unwrap().independent);
        let v = oracle_quadratic(&a(1, 5), &a(2, 5), 3).unwrap();
        assert_eq!(ints(&v), vec![1, -2, 2]);
        assert!(oracle_quadratic(&a(1, 5), &a(2, 5), 4).is_err());
    }

    #[test]
    fn quadratic_criterion_examples() {
        match theorem33_verdict(&a(1, 7), &a(2, 7), 5).unwrap() {
            Criterion::Decided(v) => assert!(v.independent),
            Criterion::Inapplicable => panic!("criterion applies"),
        }
        assert_eq!(theorem33_verdict(&a(1, 8), &a(3, 8), 2).unwrap(), Criterion::Inapplicable);
        assert_eq!(theorem33_verdict(&a(1, 16), &a(7, 16), 2).unwrap(), Criterion::Inapplicable);
        assert!(theorem33_verdict(&a(1, 7), &a(2, 7), 12).is_err());
    }

    #[test]
    fn moebius_sums() {
        assert_eq!(moebius_cos_identity(5).unwrap(), -1);
        assert_eq!(moebius_cos_identity(7).unwrap(), -1);
        assert_eq!(moebius_cos_identity(9).unwrap(), 0);
        assert_eq!(moebius_cos_identity(15).unwrap(), 1);
        assert!(moebius_cos_identity(8).is_err());
        assert!(moebius_cos_identity(1).is_err());
    }

    #[test]
    fn golden_shift() {
        assert!(shift_fixes_min_poly(5, &rat(-1, 1), &rat(1, 1)).unwrap());
        assert!(!shift_fixes_min_poly(5, &rat(1, 1), &rat(1, 1)).unwrap());
        // s⁻²P₅(sz + t) = z² + (2t − 1)/s·z + (t² − t − 1)/s²
        let (s, t) = (rat(2, 3), rat(-1, 2));
        let p = shifted_cos_min_poly(5, &s, &t).unwrap();
        let expected = RatPolynomial::new(vec![
            (&t * &t - &t - rat(1, 1)) / (&s * &s),
            (rat(2, 1) * &t - rat(1, 1)) / &s,
            rat(1, 1),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn verdict_json_round_trip() {
        let v = oracle_quadratic(&a(1, 8), &a(3, 8), 2).unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
    }
}
