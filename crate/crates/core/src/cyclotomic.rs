//! Cyclotomic polynomials and the structure of their coefficients.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::ToPrimitive;

use crate::arith::{GaussianInt, IntPolynomial};
use crate::error::{Error, Result};
use crate::ntheory::{divisors, is_squarefree, moebius, prime_power_base, quadratic_conductor, totient};

/// Possible `(a(1,n), a(2,n), a(3,n))` for squarefree `n`.
pub const SQUAREFREE_TRIPLES: [[i64; 3]; 8] = [
    [1, 1, 1],
    [1, 1, 0],
    [1, 0, 0],
    [1, 0, -1],
    [-1, 1, 0],
    [-1, 1, -1],
    [-1, 0, 1],
    [-1, 0, 0],
];

/// Possible `(a(1,n), a(2,n), a(3,n))` for non-squarefree `n`.
pub const NON_SQUAREFREE_TRIPLES: [[i64; 3]; 5] =
    [[0, 1, 0], [0, 0, 1], [0, 0, 0], [0, 0, -1], [0, -1, 0]];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicRecord {
    pub n: u64,
    pub poly: Arc<IntPolynomial>,
    pub phi_n: u64,
    pub squarefree: bool,
    pub moebius: i64,
}

type Cache = RwLock<HashMap<u64, Arc<IntPolynomial>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Φ_n`, computed as `(zⁿ − 1) / ∏_{d | n, d < n} Φ_d` and memoized.
pub fn cyclotomic_poly(n: u64) -> Arc<IntPolynomial> {
    assert!(n >= 1, "cyclotomic polynomial of index 0");
    if let Some(p) = cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut poly = IntPolynomial::x_pow_minus_one(n as usize);
    for d in divisors(n) {
        if d < n {
            poly = poly
                .div_exact(&cyclotomic_poly(d))
                .expect("Φ_d divides zⁿ − 1 for d | n");
        }
    }
    debug_assert_eq!(poly.degree(), Some(totient(n) as usize));
    let poly = Arc::new(poly);
    // Concurrent writers compute the same value; keep whichever landed first.
    cache()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(poly)
        .clone()
}

pub fn cyclotomic(n: u64) -> CyclotomicRecord {
    CyclotomicRecord {
        n,
        poly: cyclotomic_poly(n),
        phi_n: totient(n),
        squarefree: is_squarefree(n),
        moebius: moebius(n),
    }
}

/// `a(j,n)`: the coefficient of `z^{φ(n)−j}` in `Φ_n`, zero for `j > φ(n)`.
pub fn coefficient(n: u64, j: u64) -> i64 {
    let phi = totient(n);
    if j > phi {
        return 0;
    }
    cyclotomic_poly(n)
        .coeff((phi - j) as usize)
        .to_i64()
        .expect("coefficient out of i64 range")
}

/// `(a(1,n), a(2,n), a(3,n))`, checked against the admissible triple lists.
pub fn leading_triple(n: u64) -> Result<[i64; 3]> {
    let t = [coefficient(n, 1), coefficient(n, 2), coefficient(n, 3)];
    let allowed: &[[i64; 3]] = if is_squarefree(n) {
        &SQUAREFREE_TRIPLES
    } else {
        &NON_SQUAREFREE_TRIPLES
    };
    if !allowed.contains(&t) {
        return Err(Error::Verification(format!(
            "leading triple {t:?} of Φ_{n} is not in the admissible list"
        )));
    }
    Ok(t)
}

/// The value `Φ_n(i)` predicted by the closed-form table, when the table
/// pins it down (it only bounds the value when `4 ∤ n`).
fn phi_at_i_table(n: u64) -> Option<GaussianInt> {
    if n % 4 != 0 {
        return None;
    }
    if n == 4 {
        return Some(GaussianInt::zero());
    }
    match prime_power_base(n / 4) {
        Some(p) => Some(GaussianInt::new(p, 0)),
        None => Some(GaussianInt::new(1, 0)),
    }
}

/// The six values allowed when `4 ∤ n`.
pub fn phi_at_i_unit_values() -> [GaussianInt; 6] {
    [
        GaussianInt::new(-1, 0),
        GaussianInt::new(-1, 1),
        GaussianInt::new(0, -1),
        GaussianInt::new(0, 1),
        GaussianInt::new(1, 0),
        GaussianInt::new(1, 1),
    ]
}

/// `Φ_n(i)` by exact evaluation, checked against the case table.
pub fn phi_at_i(n: u64) -> Result<GaussianInt> {
    let v = cyclotomic_poly(n).eval_gaussian(&GaussianInt::i());
    let ok = match phi_at_i_table(n) {
        Some(expected) => v == expected,
        None => phi_at_i_unit_values().contains(&v),
    };
    if !ok {
        return Err(Error::Verification(format!(
            "Φ_{n}(i) = {v} violates the case table"
        )));
    }
    Ok(v)
}

/// A real quadratic field `Q(√d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: u64,
    d_hat: u64,
}

impl QuadField {
    pub fn new(d: u64) -> Result<Self> {
        if d < 2 || !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        Ok(QuadField {
            d,
            d_hat: quadratic_conductor(d as i64),
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Discriminant: `d` if `d ≡ 1 (mod 4)`, else `4d`.
    pub fn d_hat(&self) -> u64 {
        self.d_hat
    }
}

/// Whether `Φ_n` stays irreducible over `Q(√d)`.
pub fn irreducible_over_quadratic(n: u64, d: u64) -> Result<bool> {
    let k = QuadField::new(d)?;
    Ok(n % k.d_hat() != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn first_cyclotomics() {
        assert_eq!(*cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), p(&[1, 1]));
        assert_eq!(*cyclotomic_poly(3), p(&[1, 1, 1]));
        assert_eq!(*cyclotomic_poly(4), p(&[1, 0, 1]));
        assert_eq!(*cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(9), p(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12).to_string(), "z⁴ − z² + 1");
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let poly = cyclotomic_poly(105);
        assert!(poly.coeffs().iter().any(|c| *c == (-2).into()));
    }

    #[test]
    fn record_fields() {
        let r = cyclotomic(12);
        assert_eq!(r.phi_n, 4);
        assert!(!r.squarefree);
        assert_eq!(r.moebius, 0);
        assert_eq!(r.poly.degree(), Some(4));
    }

    #[test]
    fn reversed_labelling() {
        assert_eq!(coefficient(5, 0), 1);
        assert_eq!(coefficient(4, 5), 0);
        // Φ_6 = z² − z + 1
        assert_eq!(coefficient(6, 1), -1);
        assert_eq!(coefficient(6, 2), 1);
    }

    #[test]
    fn triples_examples() {
        assert_eq!(leading_triple(2).unwrap(), [1, 0, 0]);
        assert_eq!(leading_triple(15).unwrap(), [-1, 0, 1]);
        assert_eq!(leading_triple(9).unwrap(), [0, 0, 1]);
        assert_eq!(leading_triple(12).unwrap(), [0, -1, 0]);
    }

    #[test]
    fn all_patterns_occur_by_30() {
        let seen: HashSet<[i64; 3]> = (1..=30).map(|n| leading_triple(n).unwrap()).collect();
        assert_eq!(seen.len(), 13);
    }

    #[test]
    fn first_coefficient_is_minus_moebius() {
        for n in 1..=300 {
            assert_eq!(coefficient(n, 1), -moebius(n), "n = {n}");
        }
    }

    #[test]
    fn phi_at_i_examples() {
        assert_eq!(phi_at_i(4).unwrap(), GaussianInt::zero());
        assert_eq!(phi_at_i(12).unwrap(), GaussianInt::new(3, 0));
        assert_eq!(phi_at_i(3).unwrap(), GaussianInt::new(0, 1));
        assert_eq!(phi_at_i(1).unwrap(), GaussianInt::new(-1, 1));
        assert_eq!(phi_at_i(2).unwrap(), GaussianInt::new(1, 1));
        assert_eq!(phi_at_i(8).unwrap(), GaussianInt::new(2, 0));
        assert_eq!(phi_at_i(24).unwrap(), GaussianInt::new(1, 0));
    }

    #[test]
    fn product_over_divisors() {
        for n in 1..=120u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPolynomial::constant(1), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n as usize));
        }
    }

    #[test]
    fn palindromic_beyond_one() {
        assert!(!cyclotomic_poly(1).is_palindromic());
        for n in 2..=120 {
            assert!(cyclotomic_poly(n).is_palindromic(), "n = {n}");
        }
    }

    #[test]
    fn quadratic_irreducibility() {
        assert!(!irreducible_over_quadratic(8, 2).unwrap());
        assert!(!irreducible_over_quadratic(5, 5).unwrap());
        assert!(irreducible_over_quadratic(7, 2).unwrap());
        assert_eq!(irreducible_over_quadratic(7, 4), Err(Error::NotSquarefree(4)));
        assert_eq!(QuadField::new(3).unwrap().d_hat(), 12);
        assert_eq!(QuadField::new(13).unwrap().d_hat(), 13);
    }

    #[test]
    fn concurrent_cache_agrees() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| cyclotomic_poly(210)))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(results[0].degree(), Some(48));
    }
}
