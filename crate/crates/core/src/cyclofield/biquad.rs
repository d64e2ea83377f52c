use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use serde::{Deserialize, Serialize};

use super::{min_poly_bounded, rank_over_q, sqrt_element, CycloElement, CycloField, UnitGroup};
use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::ntheory::{divisors, is_squarefree, quadratic_conductor};

/// `Q`, `Q(√d1)` or `Q(√d1, √d2)`.
///
/// Real radicands come first in ascending order, then imaginary ones by
/// absolute value; only non-real inputs produce negative entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiquadDescriptor {
    pub d1: Option<i64>,
    pub d2: Option<i64>,
}

fn order_key(d: i64) -> (bool, u64) {
    (d < 0, d.unsigned_abs())
}

/// Squarefree part of `a·b` for squarefree `a`, `b`.
pub(crate) fn radical_product(a: i64, b: i64) -> i64 {
    let g = num_integer::gcd(a.unsigned_abs(), b.unsigned_abs()) as i64;
    (a / g) * (b / g)
}

impl BiquadDescriptor {
    pub fn rationals() -> Self {
        Self::default()
    }

    pub fn quadratic(d: i64) -> Result<Self> {
        check_radicand(d)?;
        Ok(BiquadDescriptor {
            d1: Some(d),
            d2: None,
        })
    }

    pub fn biquadratic(a: i64, b: i64) -> Result<Self> {
        check_radicand(a)?;
        check_radicand(b)?;
        if a == b {
            return Err(Error::InvalidInput(format!("repeated radicand {a}")));
        }
        let (d1, d2) = if order_key(a) <= order_key(b) { (a, b) } else { (b, a) };
        Ok(BiquadDescriptor {
            d1: Some(d1),
            d2: Some(d2),
        })
    }

    /// From up to two optional radicands.
    pub fn from_parts(a: Option<i64>, b: Option<i64>) -> Result<Self> {
        match (a, b) {
            (None, None) => Ok(Self::rationals()),
            (Some(d), None) | (None, Some(d)) => Self::quadratic(d),
            (Some(a), Some(b)) => Self::biquadratic(a, b),
        }
    }

    pub fn degree(&self) -> u64 {
        1 << self.generators().len()
    }

    pub fn generators(&self) -> Vec<i64> {
        self.d1.into_iter().chain(self.d2).collect()
    }

    /// Every `d ≠ 1` with `√d` in the field.
    pub fn radicands(&self) -> Vec<i64> {
        let mut out = self.generators();
        if let (Some(a), Some(b)) = (self.d1, self.d2) {
            out.push(radical_product(a, b));
        }
        out.sort_by_key(|&d| order_key(d));
        out
    }

    /// Smallest conductor containing the field.
    pub fn conductor(&self) -> u64 {
        self.generators()
            .into_iter()
            .fold(1, |m, d| num_integer::lcm(m, quadratic_conductor(d)))
    }

    pub fn contains_sqrt(&self, d: i64) -> bool {
        d == 1 || self.radicands().contains(&d)
    }
}

fn check_radicand(d: i64) -> Result<()> {
    if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs()) {
        return Err(Error::NotSquarefree(d.unsigned_abs()));
    }
    Ok(())
}

impl fmt::Display for BiquadDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.d1, self.d2) {
            (None, _) => f.write_str("Q"),
            (Some(a), None) => write!(f, "Q(√{a})"),
            (Some(a), Some(b)) => write!(f, "Q(√{a}, √{b})"),
        }
    }
}

/// `x = num / den` with `den ≠ 0`, both given as group-ring terms
/// `Σ c ζ_m^e`. `σ_a` fixes `x` iff `σ_a(num)·den − num·σ_a(den)` vanishes,
/// which is tested without forming either product in the basis.
struct Ratio<'a> {
    field: Arc<CycloField>,
    num: &'a [(u64, BigInt)],
    den: &'a [(u64, BigInt)],
}

impl Ratio<'_> {
    fn conductor(&self) -> u64 {
        self.field.conductor()
    }

    fn fixed_by(&self, a: u64) -> bool {
        let m = self.conductor();
        let act = |e: u64| (e as u128 * a as u128 % m as u128) as u64;
        let mut acc = BTreeMap::new();
        for (e1, c1) in self.num {
            for (e2, c2) in self.den {
                let c = c1 * c2;
                self.field.accumulate(&mut acc, (act(*e1) + e2) % m, &c);
                self.field.accumulate(&mut acc, (e1 + act(*e2)) % m, &-c);
            }
        }
        acc.values().all(Zero::is_zero)
    }
}

fn terms_of(x: &CycloElement) -> Vec<(u64, BigInt)> {
    x.numerators().iter().map(|(&e, c)| (e, c.clone())).collect()
}

/// Degree of `Q(x)` when `x` lies in a multiquadratic field of degree at
/// most four, `None` otherwise.
fn degree_and_stabilizer(x: &Ratio<'_>) -> Option<(u64, Vec<u64>)> {
    let g = UnitGroup::get(x.conductor());
    if !g.square_generators().into_iter().all(|s| x.fixed_by(s)) {
        return None;
    }
    let classes = g.square_classes();
    let fixing: Vec<u64> = classes.iter().copied().filter(|&a| x.fixed_by(a)).collect();
    let degree = (classes.len() / fixing.len()) as u64;
    (degree <= 4).then_some((degree, fixing))
}

/// Degree of `Q(num/den)` over `Q` if it is 1, 2 or 4 and the field is
/// multiquadratic; `None` otherwise.
pub fn biquadratic_degree(num: &CycloElement, den: &CycloElement) -> Result<Option<u64>> {
    check_ratio(num, den)?;
    let (n, d) = (terms_of(num), terms_of(den));
    Ok(biquadratic_degree_terms(num.conductor(), &n, &d))
}

/// [`biquadratic_degree`] for `num/den` given as group-ring terms in
/// `Q(ζ_m)`; `den` must be nonzero.
pub fn biquadratic_degree_terms(m: u64, num: &[(u64, BigInt)], den: &[(u64, BigInt)]) -> Option<u64> {
    let ratio = Ratio {
        field: CycloField::get(m),
        num,
        den,
    };
    degree_and_stabilizer(&ratio).map(|(d, _)| d)
}

fn check_ratio(num: &CycloElement, den: &CycloElement) -> Result<()> {
    if num.conductor() != den.conductor() {
        return Err(Error::MixedConductors(num.conductor(), den.conductor()));
    }
    if den.is_zero() {
        return Err(Error::ZeroInverse);
    }
    Ok(())
}

/// Radicands `d` (squarefree, `d ≠ 1`) whose field sits inside `Q(ζ_m)`.
fn candidate_radicands(m: u64) -> Vec<i64> {
    let mut out: Vec<i64> = divisors(m)
        .into_iter()
        .filter(|&s| is_squarefree(s))
        .flat_map(|s| [s as i64, -(s as i64)])
        .filter(|&d| d != 1 && m % quadratic_conductor(d) == 0)
        .collect();
    out.sort_by_key(|&d| order_key(d));
    out
}

/// The multiquadratic field generated by `num/den`, if it has degree at
/// most four.
pub fn in_biquadratic_ratio(num: &CycloElement, den: &CycloElement) -> Result<Option<BiquadDescriptor>> {
    check_ratio(num, den)?;
    let (n, d) = (terms_of(num), terms_of(den));
    let ratio = Ratio {
        field: num.field().clone(),
        num: &n,
        den: &d,
    };
    let Some((degree, fixing)) = degree_and_stabilizer(&ratio) else {
        return Ok(None);
    };
    let m = num.conductor();
    let mut found = Vec::new();
    for d in candidate_radicands(m) {
        let s = sqrt_element(d, m)?;
        if fixing.iter().all(|&a| s.galois_unchecked(a) == s) {
            found.push(d);
        }
    }
    let expected = match degree {
        1 => 0,
        2 => 1,
        _ => 3,
    };
    if found.len() != expected {
        return Err(Error::Verification(format!(
            "field of degree {degree} has {} quadratic subfields",
            found.len()
        )));
    }
    let descriptor = match found.as_slice() {
        [] => BiquadDescriptor::rationals(),
        [d] => BiquadDescriptor::quadratic(*d)?,
        [a, b, ..] => BiquadDescriptor::biquadratic(*a, *b)?,
    };
    Ok(Some(descriptor))
}

pub fn in_biquadratic(x: &CycloElement) -> Result<Option<BiquadDescriptor>> {
    in_biquadratic_ratio(x, &CycloElement::one(x.conductor()))
}

/// Independent route: degree of the minimal polynomial plus the
/// exponent-two test, with radicands located by rank tests against the
/// powers of `x`.
pub fn in_biquadratic_via_minpoly(x: &CycloElement) -> Result<Option<BiquadDescriptor>> {
    let Some(mp) = min_poly_bounded(x, 4) else {
        return Ok(None);
    };
    let degree = mp.degree().unwrap_or(0) as u64;
    if degree == 3 {
        return Ok(None);
    }
    let m = x.conductor();
    let g = UnitGroup::get(m);
    let squares_fix = g
        .square_generators()
        .into_iter()
        .all(|s| x.galois_unchecked(s) == *x);
    if !squares_fix {
        return Ok(None);
    }
    let powers: Vec<CycloElement> = (0..degree as u32).map(|k| x.pow(k)).collect();
    let mut found = Vec::new();
    for d in candidate_radicands(m) {
        let mut cols = powers.clone();
        cols.push(sqrt_element(d, m)?);
        if rank_over_q(&cols)? == powers.len() {
            found.push(d);
        }
    }
    let descriptor = match found.as_slice() {
        [] => BiquadDescriptor::rationals(),
        [d] => BiquadDescriptor::quadratic(*d)?,
        [a, b, ..] => BiquadDescriptor::biquadratic(*a, *b)?,
    };
    Ok(Some(descriptor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::{embed_cos, two_sin};
    use crate::minpoly::ReducedAngle;

    fn angle(k: i64, n: u64) -> ReducedAngle {
        ReducedAngle::new(k, n).unwrap()
    }

    #[test]
    fn spec_examples() {
        let x = two_sin(&angle(1, 12), 48).unwrap();
        assert_eq!(
            in_biquadratic(&x).unwrap(),
            Some(BiquadDescriptor::biquadratic(2, 3).unwrap())
        );
        let c = embed_cos(&angle(1, 7), 14).unwrap();
        assert_eq!(in_biquadratic(&c).unwrap(), None);
        let five = CycloElement::from_integer(9, 5);
        assert_eq!(in_biquadratic(&five).unwrap(), Some(BiquadDescriptor::rationals()));
    }

    #[test]
    fn routes_agree_on_small_conductors() {
        for n in 1..=24u64 {
            for k in 0..2 * n as i64 {
                let x = two_sin(&angle(k, n), 4 * angle(k, n).n()).unwrap();
                assert_eq!(
                    in_biquadratic(&x).unwrap(),
                    in_biquadratic_via_minpoly(&x).unwrap(),
                    "2sin({k}π/{n})"
                );
            }
        }
    }

    #[test]
    fn non_real_fields() {
        let i = CycloElement::root(4, 1);
        assert_eq!(in_biquadratic(&i).unwrap(), Some(BiquadDescriptor::quadratic(-1).unwrap()));
        let z8 = CycloElement::root(8, 1);
        assert_eq!(
            in_biquadratic(&z8).unwrap(),
            Some(BiquadDescriptor::biquadratic(2, -1).unwrap())
        );
    }

    #[test]
    fn descriptor_basics() {
        let k = BiquadDescriptor::biquadratic(3, 2).unwrap();
        assert_eq!((k.d1, k.d2), (Some(2), Some(3)));
        assert_eq!(k.radicands(), vec![2, 3, 6]);
        assert_eq!(k.conductor(), 24);
        assert_eq!(k.to_string(), "Q(√2, √3)");
        assert!(BiquadDescriptor::biquadratic(2, 2).is_err());
        assert!(BiquadDescriptor::quadratic(8).is_err());
        assert_eq!(radical_product(6, 10), 15);
    }
}
