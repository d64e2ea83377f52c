//! Fraction-free elimination over the integers.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{BigInt, Rational};

/// Row echelon form produced by Bareiss elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
}

fn echelon(matrix: &[Vec<BigInt>]) -> Echelon {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon {
        rows: a,
        pivots,
        cols,
    }
}

/// Rank of an integer matrix (rows of equal length).
pub fn rank(matrix: &[Vec<BigInt>]) -> usize {
    echelon(matrix).pivots.len()
}

/// Basis of the right nullspace `{x : M x = 0}`.
///
/// Each vector has coprime integer entries and a positive first nonzero
/// entry. One vector per free column, in column order.
pub fn nullspace(matrix: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let ech = echelon(matrix);
    let free: Vec<usize> = (0..ech.cols).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ech.cols];
            x[f] = Rational::one();
            for (i, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[i];
                let s: Rational = (pc + 1..ech.cols)
                    .filter(|&j| !row[j].is_zero() && !x[j].is_zero())
                    .map(|j| &x[j] * Rational::from_integer(row[j].clone()))
                    .sum();
                x[pc] = -s / Rational::from_integer(row[pc].clone());
            }
            normalize_rational(&x)
        })
        .collect()
}

/// Scales a nonzero rational vector to coprime integers with a positive
/// first nonzero entry.
pub fn normalize_rational(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    normalize_int(ints)
}

pub fn normalize_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let negative = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    let g = if negative { -g } else { g };
    for x in &mut v {
        *x = &*x / &g;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&m(&[&[0, 0, 3], &[0, 0, 6], &[1, 0, 0]])), 2);
    }

    #[test]
    fn nullspace_with_skipped_column() {
        let ns = nullspace(&m(&[&[0, 1, 1], &[0, 2, 2]]));
        assert_eq!(ns, vec![v(&[1, 0, 0]), v(&[0, 1, -1])]);
    }

    #[test]
    fn nullspace_normalization() {
        let ns = nullspace(&m(&[&[2, 4, -6]]));
        assert_eq!(ns, vec![v(&[2, -1, 0]), v(&[3, 0, 1])]);
        assert!(nullspace(&m(&[&[1, 0], &[0, 1]])).is_empty());
    }

    fn matrix() -> impl Strategy<Value = Vec<Vec<BigInt>>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-4i64..5, c), r)
                .prop_map(|rows| rows.into_iter().map(|r| v(&r)).collect())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in matrix()) {
            let cols = a[0].len();
            let ns = nullspace(&a);
            prop_assert_eq!(rank(&a) + ns.len(), cols);
            for x in &ns {
                for row in &a {
                    let dot: BigInt = row.iter().zip(x).map(|(p, q)| p * q).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}
