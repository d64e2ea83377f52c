//! Small-integer number theory: factorization, totient, Möbius.

use num_integer::Integer;

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize(0)");
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn totient(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn moebius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && factorize(n).iter().all(|&(_, e)| e == 1)
}

/// `p^j` with `p` prime and `j >= 1`, returning `p`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Least nonnegative residue of `a` modulo `m`.
pub fn modulo(a: i64, m: u64) -> u64 {
    (a as i128).rem_euclid(m as i128) as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i128) as u64)
}

/// The discriminant of `Q(√d)` for squarefree `d ≠ 1`, returned as its
/// absolute value (the conductor).
pub fn quadratic_conductor(d: i64) -> u64 {
    let a = d.unsigned_abs();
    if d.rem_euclid(4) == 1 {
        a
    } else {
        4 * a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_totient(n: u64) -> u64 {
        (1..=n).filter(|&j| gcd(j, n) == 1).count() as u64
    }

    #[test]
    fn totient_matches_gcd_count() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        for n in 1..=300 {
            assert_eq!(totient(n), brute_totient(n), "n = {n}");
        }
    }

    #[test]
    fn totient_of_twice_odd() {
        for n in (1..=100).step_by(2) {
            assert_eq!(totient(2 * n), totient(n));
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(105), -1);
        assert_eq!(moebius(9), 0);
        assert_eq!(moebius(6), 1);
    }

    #[test]
    fn moebius_sums_vanish() {
        for n in 2..=200 {
            let s: i64 = divisors(n).into_iter().map(moebius).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(inv_mod(3, 8), Some(3));
        assert_eq!(inv_mod(2, 8), None);
        assert_eq!(inv_mod(5, 1), Some(0));
        assert_eq!(modulo(-3, 8), 5);
    }

    #[test]
    fn conductors() {
        assert_eq!(quadratic_conductor(5), 5);
        assert_eq!(quadratic_conductor(2), 8);
        assert_eq!(quadratic_conductor(3), 12);
        assert_eq!(quadratic_conductor(-1), 4);
        assert_eq!(quadratic_conductor(-3), 3);
    }
}
