use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::kfield::coefficient_parts;
use super::{nullspace_over_q, sqrt_element, BiquadDescriptor, CycloElement, KElement, UnitGroup};
use crate::arith::{superscript, BigInt, IntPolynomial, Rational};
use crate::error::{Error, Result};
use crate::minpoly::palindromic_lift;
use crate::ntheory::quadratic_conductor;

/// Monic polynomial with coefficients in a multiquadratic field, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<KElement>", into = "Vec<KElement>")]
pub struct KPolynomial {
    coeffs: Vec<KElement>,
}

impl KPolynomial {
    pub fn new(mut coeffs: Vec<KElement>) -> Self {
        while coeffs.last().is_some_and(KElement::is_zero) {
            coeffs.pop();
        }
        KPolynomial { coeffs }
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| KElement::rational(Rational::from_integer(c.clone())))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[KElement] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The polynomial itself, when every coefficient is rational and integral.
    pub fn to_int(&self) -> Option<IntPolynomial> {
        self.coeffs
            .iter()
            .map(|c| c.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPolynomial::new)
    }

    pub fn mul(&self, other: &KPolynomial) -> KPolynomial {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return KPolynomial::new(Vec::new());
        }
        let mut out = vec![KElement::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPolynomial::new(out)
    }
}

impl fmt::Display for KPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body, compound) = coefficient_parts(c);
            if i == 0 && compound {
                // written out flat so each term keeps its own sign
                let text = c.to_string().replace(" − ", " + −");
                for term in text.split(" + ") {
                    let (neg, term) = match term.strip_prefix('−') {
                        Some(rest) => (true, rest),
                        None => (false, term),
                    };
                    write_sign(f, first, neg)?;
                    first = false;
                    f.write_str(term)?;
                }
                continue;
            }
            write_sign(f, first, neg)?;
            first = false;
            if i == 0 {
                f.write_str(&body)?;
                continue;
            }
            let z = if i == 1 {
                "z".to_string()
            } else {
                format!("z{}", superscript(i))
            };
            if body == "1" {
                f.write_str(&z)?;
            } else if compound {
                write!(f, "({body}){z}")?;
            } else if body.contains(['√', '/']) {
                write!(f, "{body}·{z}")?;
            } else {
                write!(f, "{body}{z}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, first: bool, neg: bool) -> fmt::Result {
    match (first, neg) {
        (true, true) => f.write_str("−"),
        (true, false) => Ok(()),
        (false, true) => f.write_str(" − "),
        (false, false) => f.write_str(" + "),
    }
}

impl From<Vec<KElement>> for KPolynomial {
    fn from(coeffs: Vec<KElement>) -> Self {
        KPolynomial::new(coeffs)
    }
}

impl From<KPolynomial> for Vec<KElement> {
    fn from(p: KPolynomial) -> Self {
        p.coeffs
    }
}

/// A root written as a power of `ζ_m` or as `ζ_m^j + ζ_m^{−j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Root {
    Power(u64),
    TwoCos(u64),
}

impl Root {
    fn canonical(self, m: u64) -> Self {
        match self {
            Root::Power(j) => Root::Power(j % m),
            Root::TwoCos(j) => {
                let j = j % m;
                Root::TwoCos(j.min((m - j) % m))
            }
        }
    }

    fn act(self, a: u64, m: u64) -> Self {
        let scale = |j: u64| (j as u128 * a as u128 % m as u128) as u64;
        match self {
            Root::Power(j) => Root::Power(scale(j)),
            Root::TwoCos(j) => Root::TwoCos(scale(j)),
        }
        .canonical(m)
    }

    fn value(self, m: u64) -> CycloElement {
        match self {
            Root::Power(j) => CycloElement::root(m, j as i64),
            Root::TwoCos(j) => CycloElement::from_terms(
                m,
                [(j as i64, BigInt::one()), (-(j as i64), BigInt::one())],
            ),
        }
    }
}

fn evaluate_at_power(p: &IntPolynomial, j: u64, m: u64) -> CycloElement {
    CycloElement::from_terms(
        m,
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((i as u128 * j as u128 % m as u128) as i64, c.clone())),
    )
}

/// All roots of `p` in `Q(ζ_m)` among roots of unity and `2cos` values.
fn find_roots(p: &IntPolynomial, m: u64) -> Result<Vec<Root>> {
    let deg = p.degree().unwrap_or(0);
    let lifted = palindromic_lift(p, deg);
    let units = UnitGroup::get(m);
    let mut roots: Vec<Root> = Vec::new();
    let mut seen: HashSet<Root> = HashSet::new();
    let mut values: Vec<CycloElement> = Vec::new();
    for j in 0..m {
        if roots.len() >= deg {
            break;
        }
        for candidate in [Root::Power(j), Root::TwoCos(j)] {
            let candidate = candidate.canonical(m);
            if seen.contains(&candidate) {
                continue;
            }
            let is_root = match candidate {
                Root::Power(j) => evaluate_at_power(p, j, m).is_zero(),
                Root::TwoCos(j) => evaluate_at_power(&lifted, j, m).is_zero(),
            };
            if !is_root {
                continue;
            }
            for &a in units.units() {
                let r = candidate.act(a, m);
                if !seen.insert(r) {
                    continue;
                }
                let v = r.value(m);
                // ±1 has both shapes; keep one copy of each value
                if v.as_rational().is_some() && values.contains(&v) {
                    continue;
                }
                values.push(v);
                roots.push(r);
            }
        }
    }
    if roots.len() != deg {
        return Err(Error::RootNotInField(m));
    }
    Ok(roots)
}

/// `∏ (z − root)` with coefficients in the dense group ring `Z[C_m]`.
fn orbit_product(roots: &[Root], m: u64) -> Vec<CycloElement> {
    let len = m as usize;
    let mut poly: Vec<Vec<BigInt>> = vec![{
        let mut one = vec![BigInt::zero(); len];
        one[0] = BigInt::one();
        one
    }];
    for &r in roots {
        let exps: Vec<u64> = match r {
            Root::Power(j) => vec![j],
            Root::TwoCos(j) => vec![j, (m - j) % m],
        };
        // new[i] = old[i−1] − root·old[i]
        let mut next = vec![vec![BigInt::zero(); len]; poly.len() + 1];
        for (i, coeff) in poly.iter().enumerate() {
            for (e, c) in coeff.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                next[i + 1][e] += c;
                for &s in &exps {
                    next[i][(e + s as usize) % len] -= c;
                }
            }
        }
        poly = next;
    }
    poly.into_iter()
        .map(|coeff| {
            CycloElement::from_terms(
                m,
                coeff
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e as i64, c)),
            )
        })
        .collect()
}

/// Writes `x` in the basis `√d` (`d` in `basis`, `1` for the rationals).
fn express_in_k(x: &CycloElement, basis: &[(i64, CycloElement)]) -> Result<KElement> {
    if let Some(q) = x.as_rational() {
        return Ok(KElement::rational(q));
    }
    let mut cols = vec![x.clone()];
    cols.extend(basis.iter().map(|(_, e)| e.clone()));
    let ns = nullspace_over_q(&cols)?;
    let rel = ns
        .into_iter()
        .find(|v| !v[0].is_zero())
        .ok_or_else(|| Error::Verification("factor coefficient does not lie in K".into()))?;
    let lead = Rational::from_integer(rel[0].clone());
    Ok(KElement::from_terms(
        basis
            .iter()
            .zip(&rel[1..])
            .map(|((d, _), c)| (*d, -Rational::from_integer(c.clone()) / &lead)),
    ))
}

/// Irreducible factors over `K` of a monic, squarefree `p` whose roots lie
/// in `Q(ζ_m)`.
///
/// Roots are grouped into orbits of the automorphisms fixing `K`; each orbit
/// product is one factor. Factors are returned sorted.
pub fn factor_over_biquadratic(p: &IntPolynomial, k: &BiquadDescriptor, m: u64) -> Result<Vec<KPolynomial>> {
    if !p.is_monic() || p.degree() == Some(0) {
        return Err(Error::InvalidInput(format!("{p} is not a monic polynomial of positive degree")));
    }
    if k.generators().iter().any(|&d| d < 0) {
        return Err(Error::InvalidInput("only real fields are supported".into()));
    }
    let required = k.conductor();
    if m % required != 0 {
        return Err(Error::ConductorMismatch {
            conductor: m,
            required,
        });
    }
    let roots = find_roots(p, m)?;

    let radicals = k.radicands();
    let mut basis = vec![(1i64, CycloElement::one(m))];
    for &d in &radicals {
        debug_assert_eq!(m % quadratic_conductor(d), 0);
        basis.push((d, sqrt_element(d, m)?));
    }
    let gens: Vec<CycloElement> = basis[1..].iter().map(|(_, e)| e.clone()).collect();
    let units = UnitGroup::get(m);
    let fixing: Vec<u64> = units
        .units()
        .iter()
        .copied()
        .filter(|&a| gens.iter().all(|s| s.galois_unchecked(a) == *s))
        .collect();

    let mut remaining: BTreeMap<usize, Root> = roots.iter().copied().enumerate().collect();
    let index: std::collections::HashMap<Root, usize> =
        roots.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let mut factors = Vec::new();
    while let Some((_, r)) = remaining.pop_first() {
        let mut orbit = vec![r];
        for &a in &fixing {
            let s = r.act(a, m);
            if let Some(i) = index.get(&s) {
                if remaining.remove(i).is_some() {
                    orbit.push(s);
                }
            }
        }
        let coeffs = orbit_product(&orbit, m)
            .iter()
            .map(|c| express_in_k(c, &basis))
            .collect::<Result<Vec<_>>>()?;
        factors.push(KPolynomial::new(coeffs));
    }
    factors.sort();

    let product = factors
        .iter()
        .fold(KPolynomial::new(vec![KElement::integer(1)]), |acc, f| acc.mul(f));
    if product != KPolynomial::from_int(p) {
        return Err(Error::Verification(format!(
            "factors of {p} over {k} do not multiply back"
        )));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::cyclotomic::cyclotomic_poly;
    use crate::minpoly::sin_min_poly;

    fn k(terms: &[(i64, i64, i64)]) -> KElement {
        KElement::from_terms(terms.iter().map(|&(d, n, den)| (d, rat(n, den))))
    }

    #[test]
    fn q8_over_sqrt2() {
        let f = factor_over_biquadratic(&sin_min_poly(8), &BiquadDescriptor::quadratic(2).unwrap(), 32).unwrap();
        let expected: Vec<KPolynomial> = vec![
            KPolynomial::new(vec![k(&[(1, -2, 1), (2, -1, 1)]), KElement::zero(), KElement::integer(1)]),
            KPolynomial::new(vec![k(&[(1, -2, 1), (2, 1, 1)]), KElement::zero(), KElement::integer(1)]),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(f, expected);
        assert_eq!(f[0].to_string(), "z² − 2 − √2");
        assert_eq!(f[1].to_string(), "z² − 2 + √2");
        let c = KPolynomial::new(vec![k(&[(1, 1, 2), (5, 1, 2)]), k(&[(1, -1, 1), (2, 1, 1)]), KElement::integer(1)]);
        assert_eq!(c.to_string(), "z² − (1 − √2)z + (1 + √5)/2");
    }

    #[test]
    fn q5_stays_irreducible_without_sqrt5() {
        let q5 = sin_min_poly(5);
        let f = factor_over_biquadratic(&q5, &BiquadDescriptor::quadratic(2).unwrap(), 40).unwrap();
        assert_eq!(f, vec![KPolynomial::from_int(&q5)]);
    }

    #[test]
    fn cyclotomic_over_rationals() {
        for n in 1..=30u64 {
            let f = factor_over_biquadratic(&cyclotomic_poly(n), &BiquadDescriptor::rationals(), n).unwrap();
            assert_eq!(f.len(), 1, "n = {n}");
        }
    }

    #[test]
    fn roots_outside_the_field() {
        let p = IntPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(
            factor_over_biquadratic(&p, &BiquadDescriptor::rationals(), 12),
            Err(Error::RootNotInField(12))
        );
        let q = IntPolynomial::from_i64(&[1, 2]);
        assert!(factor_over_biquadratic(&q, &BiquadDescriptor::rationals(), 4).is_err());
    }

    #[test]
    fn rational_roots_are_not_double_counted() {
        // z² − 1 at a conductor where ±1 are also 2cos values
        let p = IntPolynomial::from_i64(&[-1, 0, 1]);
        let f = factor_over_biquadratic(&p, &BiquadDescriptor::rationals(), 6).unwrap();
        assert_eq!(f.len(), 2);
    }
}
