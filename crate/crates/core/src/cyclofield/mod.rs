//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`.
//!
//! This is the criterion-free oracle: trigonometric numbers are
//! embedded exactly, and questions about them become linear algebra or
//! Galois-group computations.

mod biquad;
mod element;
mod factor;
mod galois;
mod kfield;
mod sqrt;

use std::collections::BTreeSet;

use num_traits::{One, Zero};

pub use biquad::{biquadratic_degree, biquadratic_degree_terms, in_biquadratic, in_biquadratic_ratio, in_biquadratic_via_minpoly, BiquadDescriptor};
pub use element::{CycloElement, CycloField};
pub use factor::{factor_over_biquadratic, KPolynomial};
pub use galois::UnitGroup;
pub use kfield::{KElement, RadicalExpr};
pub(crate) use kfield::coefficient_parts as kfield_parts;
pub use sqrt::sqrt_element;

use crate::arith::{BigInt, IntPolynomial, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::minpoly::ReducedAngle;
use crate::ntheory::lcm;

/// Smallest conductor holding `cos(πr)` for every angle given.
pub fn cos_conductor<'a>(angles: impl IntoIterator<Item = &'a ReducedAngle>) -> u64 {
    angles.into_iter().fold(1, |m, a| lcm(m, 2 * a.n()))
}

/// Smallest conductor holding `sin(πr)` for every angle given.
pub fn sin_conductor<'a>(angles: impl IntoIterator<Item = &'a ReducedAngle>) -> u64 {
    angles.into_iter().fold(1, |m, a| lcm(m, 4 * a.n()))
}

fn require(m: u64, required: u64) -> Result<()> {
    if m % required != 0 {
        return Err(Error::ConductorMismatch {
            conductor: m,
            required,
        });
    }
    Ok(())
}

/// `ζ_m^k`
pub fn embed_root(m: u64, k: i64) -> CycloElement {
    CycloElement::root(m, k)
}

/// `2cos(πk/N) = ζ_{2N}^k + ζ_{2N}^{−k}` in `Q(ζ_m)`.
pub fn two_cos(angle: &ReducedAngle, m: u64) -> Result<CycloElement> {
    require(m, 2 * angle.n())?;
    let a = (angle.k() * (m / (2 * angle.n()))) as i64;
    Ok(CycloElement::from_terms(
        m,
        [(a, BigInt::one()), (-a, BigInt::one())],
    ))
}

/// `cos(πk/N)` in `Q(ζ_m)`; needs `2N | m`.
pub fn embed_cos(angle: &ReducedAngle, m: u64) -> Result<CycloElement> {
    Ok(two_cos(angle, m)?.scale(&Rational::new(1.into(), 2.into())))
}

/// `ζ_{2N}^k − ζ_{2N}^{−k} = 2i·sin(πk/N)`; needs only `2N | m`.
pub fn sin_numerator(angle: &ReducedAngle, m: u64) -> Result<CycloElement> {
    require(m, 2 * angle.n())?;
    let a = (angle.k() * (m / (2 * angle.n()))) as i64;
    Ok(CycloElement::from_terms(
        m,
        [(a, BigInt::one()), (-a, -BigInt::one())],
    ))
}

/// `2sin(πk/N)` in `Q(ζ_m)`; needs `4N | m`.
pub fn two_sin(angle: &ReducedAngle, m: u64) -> Result<CycloElement> {
    require(m, 4 * angle.n())?;
    // 2 sin(x) = −i (e^{ix} − e^{−ix}), and −i = ζ_m^{3m/4}
    let a = (angle.k() * (m / (2 * angle.n()))) as i64;
    let mi = (3 * m / 4) as i64;
    Ok(CycloElement::from_terms(
        m,
        [(a + mi, BigInt::one()), (mi - a, -BigInt::one())],
    ))
}

/// `sin(πk/N)` in `Q(ζ_m)`; needs `4N | m`.
pub fn embed_sin(angle: &ReducedAngle, m: u64) -> Result<CycloElement> {
    Ok(two_sin(angle, m)?.scale(&Rational::new(1.into(), 2.into())))
}

fn common_conductor(xs: &[CycloElement]) -> Result<()> {
    if let Some(first) = xs.first() {
        for x in xs {
            if x.conductor() != first.conductor() {
                return Err(Error::MixedConductors(first.conductor(), x.conductor()));
            }
        }
    }
    Ok(())
}

/// Columns are the elements' numerator vectors over the union of their supports.
fn coordinate_matrix(xs: &[CycloElement]) -> Vec<Vec<BigInt>> {
    let keys: BTreeSet<u64> = xs.iter().flat_map(|x| x.numerators().keys().copied()).collect();
    keys.into_iter()
        .map(|e| {
            xs.iter()
                .map(|x| x.numerators().get(&e).cloned().unwrap_or_default())
                .collect()
        })
        .collect()
}

/// Dimension of the `Q`-span of the elements.
pub fn rank_over_q(xs: &[CycloElement]) -> Result<usize> {
    common_conductor(xs)?;
    Ok(linalg::rank(&coordinate_matrix(xs)))
}

/// Basis of `{c ∈ Qⁿ : Σ c_j x_j = 0}`, as coprime integer vectors with a
/// positive first nonzero entry.
pub fn nullspace_over_q(xs: &[CycloElement]) -> Result<Vec<Vec<BigInt>>> {
    common_conductor(xs)?;
    if xs.is_empty() {
        return Ok(Vec::new());
    }
    let ns = if xs.iter().all(CycloElement::is_zero) {
        (0..xs.len())
            .map(|i| {
                let mut v = vec![BigInt::zero(); xs.len()];
                v[i] = BigInt::one();
                v
            })
            .collect()
    } else {
        linalg::nullspace(&coordinate_matrix(xs))
    };
    // The matrix used numerators only; undo the per-column denominators.
    Ok(ns
        .into_iter()
        .map(|v| {
            linalg::normalize_int(
                v.iter()
                    .zip(xs)
                    .map(|(c, x)| c * x.denominator())
                    .collect(),
            )
        })
        .collect())
}

/// `Σ c_j x_j`
pub fn linear_combination(coeffs: &[BigInt], xs: &[CycloElement]) -> Result<CycloElement> {
    common_conductor(xs)?;
    let m = xs.first().map_or(1, CycloElement::conductor);
    let mut acc = CycloElement::zero(m);
    for (c, x) in coeffs.iter().zip(xs) {
        if !c.is_zero() {
            acc = acc.try_add(&x.scale(&Rational::from_integer(c.clone())))?;
        }
    }
    Ok(acc)
}

/// `p(x)` by Horner's rule.
pub fn eval_poly(p: &IntPolynomial, x: &CycloElement) -> CycloElement {
    let m = x.conductor();
    p.coeffs().iter().rev().fold(CycloElement::zero(m), |acc, c| {
        &(&acc * x) + &CycloElement::from_integer(m, c.clone())
    })
}

/// Minimal polynomial over `Q`, as a primitive integer polynomial with
/// positive leading coefficient, provided its degree is at most `bound`.
pub fn min_poly_bounded(x: &CycloElement, bound: u64) -> Option<IntPolynomial> {
    let m = x.conductor();
    let mut powers = vec![CycloElement::one(m)];
    for _ in 0..bound {
        let next = powers.last().unwrap() * x;
        powers.push(next);
        let ns = nullspace_over_q(&powers).expect("same conductor");
        if let Some(v) = ns.into_iter().next() {
            return Some(IntPolynomial::new(v).primitive());
        }
    }
    None
}

/// Minimal polynomial over `Q` (primitive, positive leading coefficient).
pub fn min_poly(x: &CycloElement) -> IntPolynomial {
    min_poly_bounded(x, x.field().degree()).expect("degree is at most φ(m)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn angle(k: i64, n: u64) -> ReducedAngle {
        ReducedAngle::new(k, n).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embed_root(4, 1).power_basis(), vec![rat(0, 1), rat(1, 1)]);
        assert_eq!(
            embed_cos(&angle(1, 3), 6).unwrap().as_rational(),
            Some(rat(1, 2))
        );
        assert_eq!(
            embed_cos(&angle(1, 3), 42).unwrap().as_rational(),
            Some(rat(1, 2))
        );
        assert!(embed_cos(&angle(1, 2), 4).unwrap().is_zero());
        assert_eq!(
            embed_sin(&angle(1, 6), 24).unwrap().as_rational(),
            Some(rat(1, 2))
        );
        assert!(embed_sin(&angle(1, 6), 12).is_err());
        assert_eq!(
            embed_cos(&angle(1, 5), 5),
            Err(Error::ConductorMismatch {
                conductor: 5,
                required: 10
            })
        );
    }

    #[test]
    fn embeddings_match_floating_point() {
        for n in 1..=24u64 {
            for k in 0..2 * n as i64 {
                let a = angle(k, n);
                let x = std::f64::consts::PI * a.k() as f64 / a.n() as f64;
                let m = 4 * a.n() * 3;
                let (c, ci) = embed_cos(&a, m).unwrap().approx();
                let (s, si) = embed_sin(&a, m).unwrap().approx();
                assert!((c - x.cos()).abs() < 1e-9 && ci.abs() < 1e-9);
                assert!((s - x.sin()).abs() < 1e-9 && si.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&embed_root(4, 1)), p(&[1, 0, 1]));
        assert_eq!(min_poly(&two_cos(&angle(1, 5), 10).unwrap()), p(&[-1, -1, 1]));
        assert_eq!(min_poly(&CycloElement::from_integer(7, 3)), p(&[-3, 1]));
        assert_eq!(min_poly(&two_sin(&angle(1, 4), 16).unwrap()), p(&[-2, 0, 1]));
        assert_eq!(
            min_poly(&two_sin(&angle(1, 12), 48).unwrap()),
            p(&[1, 0, -4, 0, 1])
        );
        // 2cos(π/5) / 2 = cos(π/5) is not an algebraic integer
        assert_eq!(min_poly(&embed_cos(&angle(1, 5), 10).unwrap()), p(&[-1, -2, 4]));
    }

    #[test]
    fn rank_examples() {
        let m = 10;
        let xs = [
            CycloElement::one(m),
            embed_cos(&angle(1, 5), m).unwrap(),
            embed_cos(&angle(2, 5), m).unwrap(),
        ];
        assert_eq!(rank_over_q(&xs).unwrap(), 2);
        assert_eq!(
            nullspace_over_q(&xs).unwrap(),
            vec![vec![BigInt::from(1), BigInt::from(-2), BigInt::from(2)]]
        );
        assert_eq!(rank_over_q(&[CycloElement::one(3)]).unwrap(), 1);
        let m = 14;
        let xs = [
            CycloElement::one(m),
            embed_cos(&angle(1, 7), m).unwrap(),
            embed_cos(&angle(2, 7), m).unwrap(),
        ];
        assert_eq!(rank_over_q(&xs).unwrap(), 3);
        assert!(nullspace_over_q(&xs).unwrap().is_empty());
    }

    #[test]
    fn zero_columns_in_nullspace() {
        let xs = [CycloElement::zero(5), CycloElement::one(5)];
        assert_eq!(
            nullspace_over_q(&xs).unwrap(),
            vec![vec![BigInt::from(1), BigInt::from(0)]]
        );
    }
}
