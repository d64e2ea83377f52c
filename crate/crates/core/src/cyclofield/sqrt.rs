use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::One;

use super::CycloElement;
use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::ntheory::{factorize, is_squarefree, quadratic_conductor};

type Cache = RwLock<HashMap<(i64, u64), CycloElement>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// `Σ_a (a|p) ζ_p^a`, which squares to `(−1)^{(p−1)/2} p`.
fn gauss_sum(p: u64, m: u64) -> CycloElement {
    let step = (m / p) as i64;
    CycloElement::from_terms(
        m,
        (1..p).map(|a| (a as i64 * step, BigInt::from(legendre(a, p)))),
    )
}

/// `√d` inside `Q(ζ_m)` for squarefree `d ∉ {0, 1}`: the positive root
/// when `d > 0`, and `i·√|d|` when `d < 0`. Needs the discriminant of
/// `Q(√d)` to divide `m`.
pub fn sqrt_element(d: i64, m: u64) -> Result<CycloElement> {
    if d == 0 || d == 1 || !is_squarefree(d.unsigned_abs()) {
        return Err(Error::NotSquarefree(d.unsigned_abs()));
    }
    let required = quadratic_conductor(d);
    if m % required != 0 {
        return Err(Error::ConductorMismatch {
            conductor: m,
            required,
        });
    }
    if let Some(x) = cache().read().unwrap().get(&(d, m)) {
        return Ok(x.clone());
    }

    // G = ∏ g_p = i^c √|d_odd| with c the number of primes ≡ 3 (mod 4).
    let mut g = CycloElement::one(m);
    let mut c = 0i64;
    let mut star: i64 = 1;
    for (p, _) in factorize(d.unsigned_abs()) {
        if p == 2 {
            continue;
        }
        g = &g * &gauss_sum(p, m);
        if p % 4 == 3 {
            c += 1;
            star *= -(p as i64);
        } else {
            star *= p as i64;
        }
    }
    // Remaining factor has square d / star ∈ {±1, ±2}.
    let rest = d / star;
    let (fix, e) = match rest {
        1 => (CycloElement::one(m), 0),
        -1 => (CycloElement::root(m, (m / 4) as i64), 1),
        2 => {
            let s = (m / 8) as i64;
            (
                CycloElement::from_terms(m, [(s, BigInt::one()), (-s, BigInt::one())]),
                0,
            )
        }
        -2 => {
            let s = (m / 8) as i64;
            (
                CycloElement::from_terms(m, [(s, BigInt::one()), (3 * s, BigInt::one())]),
                1,
            )
        }
        _ => unreachable!("d / star is ±1 or ±2 for squarefree d"),
    };
    let mut y = &g * &fix;
    // y = i^{c+e} √|d|; the wanted phase is i^{[d<0]}, an even power away.
    let target = i64::from(d < 0);
    if (target - c - e).rem_euclid(4) == 2 {
        y = -&y;
    }
    let square = &y * &y;
    if square != CycloElement::from_integer(m, d) {
        return Err(Error::Verification(format!(
            "constructed square root of {d} squares to {square:?}"
        )));
    }
    cache().write().unwrap().insert((d, m), y.clone());
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_signs() {
        for d in [2i64, 3, 5, 6, 7, 10, 11, 13, 15, 17, 21, 30, 33, 105, -1, -2, -3, -5, -7, -15] {
            let m = quadratic_conductor(d) * 3;
            let y = sqrt_element(d, m).unwrap();
            assert_eq!(&y * &y, CycloElement::from_integer(m, d));
            let (re, im) = y.approx();
            let root = (d.unsigned_abs() as f64).sqrt();
            if d > 0 {
                assert!((re - root).abs() < 1e-9 && im.abs() < 1e-9, "d = {d}");
            } else {
                assert!(re.abs() < 1e-9 && (im - root).abs() < 1e-9, "d = {d}");
            }
        }
    }

    #[test]
    fn minimal_conductors() {
        assert!(sqrt_element(5, 5).is_ok());
        assert!(sqrt_element(2, 8).is_ok());
        assert!(sqrt_element(3, 12).is_ok());
        assert_eq!(
            sqrt_element(3, 6),
            Err(Error::ConductorMismatch {
                conductor: 6,
                required: 12
            })
        );
        assert_eq!(sqrt_element(12, 48), Err(Error::NotSquarefree(12)));
    }
}
