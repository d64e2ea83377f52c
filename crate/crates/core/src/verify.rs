//! Verification suites: each check recomputes a published table, identity
//! or classification from scratch and compares.
//!
//! A check returns `Ok(detail)` on success and `Err(Error::Verification)`
//! with the falsifying case otherwise.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::arith::{parse_rational, rat, GaussianInt, IntPolynomial, Rational};
use crate::cyclofield::{
    eval_poly, factor_over_biquadratic, in_biquadratic, in_biquadratic_via_minpoly, min_poly, two_cos,
    two_sin, BiquadDescriptor, KElement, KPolynomial,
};
use crate::cyclotomic::{
    coefficient, cyclotomic_poly, irreducible_over_quadratic, leading_triple, phi_at_i, NON_SQUAREFREE_TRIPLES,
    SQUAREFREE_TRIPLES,
};
use crate::error::{Error, Result};
use crate::independence::{
    generic_pair, half_turn_angles, moebius_cos_identity, oracle_q, oracle_quadratic, quadratic_dependence_sweep,
    shift_fixes_min_poly, theorem2_verdict, theorem33_verdict, Criterion,
};
use crate::minpoly::{
    chebyshev_like, cos_constant_term_table, cos_min_poly, degree_of_cos, palindromic_lift, sin_min_poly,
    sin_sign_exponent, ReducedAngle,
};
use crate::ntheory::{divisors, lcm, moebius, quadratic_conductor, totient};
use crate::report::{CheckOutcome, SuiteReport};
use crate::triangles::{
    allowed_n_values, classify_all, enumerate_shapes, figure3_table, is_high_school, isosceles_parity_check,
    open_unit_angles, sin_ratio_squared_is, PairTable, verified_verdict, verify_ratio, witnesses, Evidence, Mode, TriangleShape,
    ALLOWED_DENOMINATORS,
};

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Verification(msg.into()))
}

fn angle(k: i64, n: u64) -> ReducedAngle {
    ReducedAngle::new(k, n).expect("positive denominator")
}

/// All `k/N` in lowest terms with `0 ≤ k < 2N`.
fn full_turn_angles(n: u64) -> Vec<ReducedAngle> {
    (0..2 * n as i64)
        .map(|k| angle(k, n))
        .filter(|a| a.n() == n)
        .collect()
}

// -------------------------------------------------------- polynomial tables

/// Leading triples of `Φ_n` lie in the admissible lists, `n ≤ max_n`.
pub fn leading_triples(max_n: u64) -> Result<String> {
    let (mut sf, mut nsf) = (0, 0);
    for n in 1..=max_n {
        let t = leading_triple(n)?;
        if t[0] == 0 {
            nsf += 1;
        } else {
            sf += 1;
        }
    }
    Ok(format!("n ≤ {max_n}: {sf} squarefree and {nsf} non-squarefree triples admissible"))
}

/// Every one of the 13 admissible triples already occurs for `n ≤ max_n`.
pub fn triple_patterns(max_n: u64) -> Result<String> {
    let seen: BTreeSet<[i64; 3]> = (1..=max_n).map(leading_triple).collect::<Result<_>>()?;
    let all: BTreeSet<[i64; 3]> = SQUAREFREE_TRIPLES.iter().chain(&NON_SQUAREFREE_TRIPLES).copied().collect();
    let missing: Vec<_> = all.difference(&seen).collect();
    if !missing.is_empty() {
        return fail(format!("triples {missing:?} do not occur for n ≤ {max_n}"));
    }
    Ok(format!("all {} patterns occur for n ≤ {max_n}", all.len()))
}

/// `a(1,n) = −μ(n)`.
pub fn first_coefficient_is_moebius(max_n: u64) -> Result<String> {
    for n in 1..=max_n {
        if coefficient(n, 1) != -moebius(n) {
            return fail(format!("a(1,{n}) = {} but μ({n}) = {}", coefficient(n, 1), moebius(n)));
        }
    }
    Ok(format!("a(1,n) = −μ(n) for n ≤ {max_n}"))
}

/// `Φ_n(i)` follows the case table; `−1+i` and `1+i` occur only at `n = 1, 2`
/// and the four other unit values all occur by `n = 21`.
pub fn phi_at_i_values(max_n: u64) -> Result<String> {
    let mut seen: BTreeMap<(i64, i64), Vec<u64>> = BTreeMap::new();
    for n in 1..=max_n {
        let v = phi_at_i(n)?;
        if n % 4 != 0 {
            let key = (v.re.try_into().unwrap_or(i64::MAX), v.im.try_into().unwrap_or(i64::MAX));
            seen.entry(key).or_default().push(n);
        }
    }
    if seen.get(&(-1, 1)).map(Vec::as_slice) != Some(&[1]) {
        return fail("−1 + i does not occur exactly at n = 1");
    }
    if seen.get(&(1, 1)).map(Vec::as_slice) != Some(&[2]) {
        return fail("1 + i does not occur exactly at n = 2");
    }
    let mut firsts = Vec::new();
    for (re, im) in [(-1, 0), (0, -1), (0, 1), (1, 0)] {
        let ns = seen.get(&(re, im)).cloned().unwrap_or_default();
        let value = GaussianInt::new(re, im);
        match ns.first() {
            Some(&first) if first <= 21 && ns.len() > 1 => firsts.push(format!("{value} at n = {first} (×{})", ns.len())),
            _ => return fail(format!("{value} does not occur by n = 21 and again later: {ns:?}")),
        }
    }
    Ok(format!("table holds for n ≤ {max_n}; first occurrences {}", firsts.join(", ")))
}

/// `∏_{d | n} Φ_d = zⁿ − 1`.
pub fn product_formula(max_n: u64) -> Result<String> {
    for n in 1..=max_n {
        let prod = divisors(n)
            .into_iter()
            .fold(IntPolynomial::constant(1), |acc, d| &acc * &*cyclotomic_poly(d));
        if prod != IntPolynomial::x_pow_minus_one(n as usize) {
            return fail(format!("divisor product differs from z^{n} − 1"));
        }
    }
    Ok(format!("n ≤ {max_n}"))
}

pub fn palindromes(max_n: u64) -> Result<String> {
    for n in 2..=max_n {
        if !cyclotomic_poly(n).is_palindromic() {
            return fail(format!("Φ_{n} is not palindromic"));
        }
    }
    Ok(format!("2 ≤ n ≤ {max_n}"))
}

/// `Φ_{mn}(z) = Φ_n(z^m)` when every prime of `m` divides `n`.
pub fn substitution_law(max_mn: u64) -> Result<String> {
    let mut count = 0;
    for n in 1..=max_mn {
        for m in 2..=max_mn / n {
            let rad_divides = crate::ntheory::factorize(m).iter().all(|&(p, _)| n % p == 0);
            if !rad_divides {
                continue;
            }
            if *cyclotomic_poly(m * n) != cyclotomic_poly(n).substitute_power(m as usize) {
                return fail(format!("Φ_{} ≠ Φ_{n}(z^{m})", m * n));
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs with mn ≤ {max_mn}"))
}

/// `zⁿ R_n(z + 1/z) = z^{2n} + 1`, and `R_n − zⁿ + n z^{n−2}` has degree
/// below `n − 2`.
pub fn chebyshev_identities(max_n: usize) -> Result<String> {
    for n in 1..=max_n {
        let r = chebyshev_like(n);
        let lifted = palindromic_lift(&r, n);
        let expected = &IntPolynomial::monomial(1, 2 * n) + &IntPolynomial::constant(1);
        if lifted != expected {
            return fail(format!("R_{n}(z + 1/z) zⁿ ≠ z^{} + 1", 2 * n));
        }
        if n >= 2 {
            let rest = &(&r - &IntPolynomial::monomial(1, n)) + &IntPolynomial::monomial(n as i64, n - 2);
            if rest.degree().is_some_and(|d| d + 2 >= n) {
                return fail(format!("R_{n} − zⁿ + {n}z^{} has degree {:?}", n - 2, rest.degree()));
            }
        }
    }
    Ok(format!("n ≤ {max_n}"))
}

/// `z^{φ(2N)/2} P_N(z + 1/z) = Φ_{2N}(z)`.
pub fn cos_min_poly_identity(max_n: u64) -> Result<String> {
    for n in 2..=max_n {
        let h = totient(2 * n) / 2;
        if palindromic_lift(&cos_min_poly(n), h as usize) != *cyclotomic_poly(2 * n) {
            return fail(format!("lift of P_{n} differs from Φ_{}", 2 * n));
        }
    }
    Ok(format!("2 ≤ N ≤ {max_n}"))
}

/// `|P_N(0)|` against the closed-form table.
pub fn cos_constant_terms(max_n: u64) -> Result<String> {
    for n in 1..=max_n {
        let c = cos_min_poly(n).coeff(0).magnitude().clone();
        if c != cos_constant_term_table(n).into() {
            return fail(format!("|P_{n}(0)| = {c}, table says {}", cos_constant_term_table(n)));
        }
    }
    Ok(format!("N ≤ {max_n}"))
}

/// `2(−1)^{1+k} cos(πk/N)` is a root of `P_N` and `2(−1)^{k_r} sin(πk/N)`
/// one of `Q_N`, for every reduced `k/N`.
pub fn min_poly_roots(max_n: u64) -> Result<String> {
    let mut count = 0;
    for n in 1..=max_n {
        let p = cos_min_poly(n);
        let q = sin_min_poly(n);
        for a in full_turn_angles(n) {
            let sign = |e: i64| Rational::from_integer(if e % 2 == 0 { 1 } else { -1 }.into());
            let c = two_cos(&a, 2 * n)?.scale(&sign(1 + a.k() as i64));
            if !eval_poly(&p, &c).is_zero() {
                return fail(format!("2(−1)^(1+k)cos({}) is not a root of P_{n}", a.pi_string()));
            }
            let s = two_sin(&a, 4 * n)?.scale(&sign(sin_sign_exponent(a.k() as i64, n)));
            if !eval_poly(&q, &s).is_zero() {
                return fail(format!("2(−1)^k_r sin({}) is not a root of Q_{n}", a.pi_string()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} angles with N ≤ {max_n}"))
}

/// The rank-based minimal polynomial of the embedded cosine is `P_N`, of
/// degree `p_N`.
pub fn min_poly_degree_agreement(max_n: u64) -> Result<String> {
    let mut count = 0;
    for n in 1..=max_n {
        let p = cos_min_poly(n);
        for a in full_turn_angles(n) {
            let x = two_cos(&a, 2 * n)?;
            let x = if a.k() % 2 == 0 { -&x } else { x };
            let found = min_poly(&x);
            if found != *p || found.degree() != Some(degree_of_cos(n) as usize) {
                return fail(format!("minimal polynomial of ±2cos({}) is {found}, expected {p}", a.pi_string()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} angles with N ≤ {max_n}"))
}

// --------------------------------------------------------------- identities

pub fn golden_relation() -> Result<String> {
    let v = oracle_q(&[angle(1, 5), angle(2, 5)])?;
    let text = v.relation_text();
    if text != "2cos(π/5) − 2cos(2π/5) = 1" {
        return fail(format!("found {text}"));
    }
    Ok(text)
}

pub fn seven_relation() -> Result<String> {
    let v = oracle_q(&[angle(1, 7), angle(2, 7), angle(3, 7)])?;
    let text = v.relation_text();
    if text != "2cos(π/7) − 2cos(2π/7) + 2cos(3π/7) = 1" {
        return fail(format!("found {text}"));
    }
    Ok(text)
}

pub fn moebius_sums(max_n: u64) -> Result<String> {
    let mut tally = BTreeMap::new();
    for n in (3..=max_n).step_by(2) {
        *tally.entry(moebius_cos_identity(n)?).or_insert(0) += 1;
    }
    Ok(format!("odd 3 ≤ n ≤ {max_n}; μ values {tally:?}"))
}

/// `s⁻²P_5(sz + t) = P_5` at `(s, t) = (−1, 1)`.
pub fn golden_shift() -> Result<String> {
    if !shift_fixes_min_poly(5, &rat(-1, 1), &rat(1, 1))? {
        return fail("P_5(1 − z) ≠ P_5(z)");
    }
    Ok("P_5(1 − z) = P_5(z)".into())
}

// ----------------------------------------------------------- classification

fn counts(ts: &[TriangleShape]) -> (usize, usize, usize) {
    let iso = ts.iter().filter(|t| t.is_isosceles()).count();
    let right = ts.iter().filter(|t| t.is_right()).count();
    let neither = ts.iter().filter(|t| !t.is_isosceles() && !t.is_right()).count();
    (iso, right, neither)
}

/// `classify_all(max_n)` returns exactly the 14 reference triangles, each
/// ratio triple verified by cross-multiplication.
pub fn classification(max_n: u64) -> Result<String> {
    let found = classify_all(max_n)?;
    let shapes: Vec<TriangleShape> = found.iter().map(|c| c.shape).collect();
    let mut reference: Vec<TriangleShape> = witnesses()?.iter().map(|(t, _)| *t).collect();
    reference.sort();
    if max_n >= 12 && shapes != reference {
        return fail(format!("found {} shapes, expected the 14 reference shapes", shapes.len()));
    }
    for c in &found {
        if !verify_ratio(&c.shape, &c.ratios)? {
            return fail(format!("ratio {} fails for {}", c.ratios, c.shape));
        }
    }
    let (iso, right, neither) = counts(&shapes);
    if max_n >= 12 && (iso, right, neither) != (7, 3, 5) {
        return fail(format!("counts {iso}/{right}/{neither}, expected 7/3/5"));
    }
    Ok(format!(
        "N ≤ {max_n}: {} triangles, {iso} isosceles, {right} right, {neither} neither",
        shapes.len()
    ))
}

pub fn small_classification() -> Result<String> {
    let found: Vec<String> = classify_all(5)?.iter().map(|c| c.shape.to_string()).collect();
    let expected = ["π(1,1,1)/3", "π(1,1,2)/4", "π(1,1,3)/5", "π(1,2,2)/5"];
    if found != expected {
        return fail(format!("N ≤ 5 gives {found:?}"));
    }
    Ok(found.join(", "))
}

/// Fast and verified modes agree; negative verdicts name an obstruction.
pub fn modes_agree(max_n: u64) -> Result<String> {
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for t in enumerate_shapes(max_n) {
        is_high_school(&t, Mode::Verified)?;
        let kind = match verified_verdict(&t)?.evidence {
            Evidence::Witness { .. } => "witness",
            Evidence::DegreeFilter { .. } => "degree filter",
            Evidence::PairTable { .. } => "pair table",
            Evidence::Parity => "parity",
        };
        *tally.entry(kind).or_default() += 1;
    }
    Ok(format!("N ≤ {max_n}: {tally:?}"))
}

pub fn denominators_are_lcms(max_n: u64) -> Result<String> {
    for t in enumerate_shapes(max_n) {
        if t.lcm_denominator() != t.denominator() {
            return fail(format!("{t}: lcm of angle denominators is {}", t.lcm_denominator()));
        }
    }
    Ok(format!("N ≤ {max_n}"))
}

// -------------------------------------------------------- quadratic factors

/// Parses a factor written as descending coefficients separated by `,`;
/// each coefficient is a space-separated sum of `p/q` or `p/q√d` terms.
fn parse_factor(text: &str) -> Result<KPolynomial> {
    let mut coeffs = Vec::new();
    for c in text.split(',') {
        let mut terms = Vec::new();
        for t in c.split_whitespace() {
            let (q, d) = match t.split_once('√') {
                Some((q, d)) => (q, d.parse().map_err(|_| Error::InvalidInput(t.into()))?),
                None => (t, 1),
            };
            terms.push((d, parse_rational(q)?));
        }
        coeffs.push(KElement::from_terms(terms));
    }
    coeffs.reverse();
    Ok(KPolynomial::new(coeffs))
}

/// `(N, generators of K, factors of Q_N over K)`.
const FACTOR_ROWS: &[(u64, &[i64], &[&str])] = &[
    (2, &[5], &["1,2"]),
    (3, &[2], &["1,0,-3"]),
    (3, &[3], &["1,1√3", "1,-1√3"]),
    (4, &[3], &["1,0,-2"]),
    (4, &[2], &["1,1√2", "1,-1√2"]),
    (5, &[2], &["1,0,-5,0,5"]),
    (5, &[5], &["1,0,-5/2 -1/2√5", "1,0,-5/2 1/2√5"]),
    (6, &[2, 3], &["1,-1"]),
    (8, &[3], &["1,0,-4,0,2"]),
    (8, &[2], &["1,0,-2 1√2", "1,0,-2 -1√2"]),
    (10, &[2], &["1,-1,-1"]),
    (10, &[5], &["1,-1/2 -1/2√5", "1,-1/2 1/2√5"]),
    (12, &[5], &["1,0,-4,0,1"]),
    (12, &[2], &["1,1√2,-1", "1,-1√2,-1"]),
    (12, &[3], &["1,0,-2 1√3", "1,0,-2 -1√3"]),
    (12, &[6], &["1,1√6,1", "1,-1√6,1"]),
    (
        12,
        &[2, 3],
        &["1,-1/2√6 -1/2√2", "1,1/2√6 1/2√2", "1,-1/2√6 1/2√2", "1,1/2√6 -1/2√2"],
    ),
    (15, &[2], &["1,0,-7,0,14,0,-8,0,1"]),
    (15, &[3], &["1,1√3,-2,-2√3,-1", "1,-1√3,-2,2√3,-1"]),
    (15, &[5], &["1,0,-7/2 -1/2√5,0,3/2 1/2√5", "1,0,-7/2 1/2√5,0,3/2 -1/2√5"]),
    (15, &[15], &["1,1√15,4,0,-1", "1,-1√15,4,0,-1"]),
    (
        15,
        &[3, 5],
        &[
            "1,1/2√15 1/2√3,1/2 1/2√5",
            "1,-1/2√15 -1/2√3,1/2 1/2√5",
            "1,1/2√15 -1/2√3,1/2 -1/2√5",
            "1,-1/2√15 1/2√3,1/2 -1/2√5",
        ],
    ),
    (16, &[3], &["1,0,-8,0,20,0,-16,0,2"]),
    (16, &[2], &["1,0,-4,0,2 1√2", "1,0,-4,0,2 -1√2"]),
    (17, &[2], &["1,0,-17,0,119,0,-442,0,935,0,-1122,0,714,0,-204,0,17"]),
    (
        17,
        &[17],
        &[
            "1,0,-17/2 -1/2√17,0,51/2 7/2√17,0,-34 -7√17,0,17 4√17",
            "1,0,-17/2 1/2√17,0,51/2 -7/2√17,0,-34 7√17,0,17 -4√17",
        ],
    ),
    (20, &[3], &["1,0,-8,0,19,0,-12,0,1"]),
    (20, &[2], &["1,1√2,-3,-3√2,-1", "1,-1√2,-3,3√2,-1"]),
    (20, &[5], &["1,0,-4,0,3/2 1/2√5", "1,0,-4,0,3/2 -1/2√5"]),
    (20, &[10], &["1,1√10,1,-1√10,-1", "1,-1√10,1,1√10,-1"]),
    (
        20,
        &[2, 5],
        &[
            "1,1/2√10 1/2√2,-1/2 1/2√5",
            "1,-1/2√10 -1/2√2,-1/2 1/2√5",
            "1,1/2√10 -1/2√2,-1/2 -1/2√5",
            "1,-1/2√10 1/2√2,-1/2 -1/2√5",
        ],
    ),
    (24, &[5], &["1,0,-8,0,20,0,-16,0,1"]),
    (24, &[2], &["1,0,-4 -1√2,0,3 2√2", "1,0,-4 1√2,0,3 -2√2"]),
    (24, &[3], &["1,0,-4,0,2 1√3", "1,0,-4,0,2 -1√3"]),
    (24, &[6], &["1,0,-4 -1√6,0,5 2√6", "1,0,-4 1√6,0,5 -2√6"]),
    (
        24,
        &[2, 3],
        &[
            "1,0,-2 -1/2√6 -1/2√2",
            "1,0,-2 1/2√6 1/2√2",
            "1,0,-2 -1/2√6 1/2√2",
            "1,0,-2 1/2√6 -1/2√2",
        ],
    ),
    (30, &[2], &["1,1,-4,-4,1"]),
    (30, &[5], &["1,1/2 1/2√5,-3/2 1/2√5", "1,1/2 -1/2√5,-3/2 -1/2√5"]),
];

/// Factors of `Q_N` over the fields of the reference rows, compared as
/// sorted lists of canonical polynomials.
pub fn factor_rows(ns: &[u64]) -> Result<String> {
    let mut rows = 0;
    for &(n, gens, factors) in FACTOR_ROWS.iter().filter(|r| ns.contains(&r.0)) {
        let k = BiquadDescriptor::from_parts(gens.first().copied(), gens.get(1).copied())?;
        let m = lcm(4 * n, k.conductor());
        let found = factor_over_biquadratic(&sin_min_poly(n), &k, m)?;
        let mut expected = factors.iter().map(|f| parse_factor(f)).collect::<Result<Vec<_>>>()?;
        expected.sort();
        if found != expected {
            let shown: Vec<String> = found.iter().map(ToString::to_string).collect();
            return fail(format!("Q_{n} over {k}: found {}", shown.join(", ")));
        }
        rows += 1;
    }
    Ok(format!("{rows} rows for N ∈ {ns:?}"))
}

/// `Φ_n` splits over `Q(√d)` exactly when `d̂ | n`, checked by factoring.
pub fn quadratic_irreducibility(max_n: u64, radicands: &[i64]) -> Result<String> {
    let mut split = 0;
    for &d in radicands {
        let k = BiquadDescriptor::quadratic(d)?;
        for n in 1..=max_n {
            let m = lcm(n, quadratic_conductor(d));
            let count = factor_over_biquadratic(&cyclotomic_poly(n), &k, m)?.len();
            let irreducible = irreducible_over_quadratic(n, d as u64)?;
            if (count == 1) != irreducible || count > 2 {
                return fail(format!("Φ_{n} over Q(√{d}) has {count} factors"));
            }
            split += (count == 2) as usize;
        }
    }
    Ok(format!("n ≤ {max_n}, d ∈ {radicands:?}: {split} splittings, all predicted"))
}

/// Both biquadratic membership routes agree on every root of every `Q_N`.
pub fn biquadratic_routes() -> Result<String> {
    let mut count = 0;
    for n in ALLOWED_DENOMINATORS {
        for a in full_turn_angles(n) {
            let x = two_sin(&a, 4 * n)?;
            let (fast, slow) = (in_biquadratic(&x)?, in_biquadratic_via_minpoly(&x)?);
            if fast != slow {
                return fail(format!("2sin({}): {fast:?} vs {slow:?}", a.pi_string()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} elements"))
}

/// The worked examples over `Q(√2)` and `Q(√3)`.
pub fn quadratic_examples() -> Result<String> {
    let v = oracle_quadratic(&angle(1, 8), &angle(3, 8), 2)?;
    if v.independent || v.relation_text() != "cos(3π/8) = (−1 + √2)cos(π/8)" {
        return fail(format!("(1/8, 3/8) over Q(√2): {v}"));
    }
    if theorem33_verdict(&angle(1, 8), &angle(3, 8), 2)? != Criterion::Inapplicable {
        return fail("criterion claims to cover (1/8, 3/8) over Q(√2)");
    }
    let w = oracle_quadratic(&angle(1, 16), &angle(7, 16), 2)?;
    if !w.independent {
        return fail(format!("(1/16, 7/16) over Q(√2): {w}"));
    }
    let u = oracle_quadratic(&angle(1, 5), &angle(2, 5), 3)?;
    if u.independent {
        return fail("(1/5, 2/5) independent over Q(√3)");
    }
    match theorem33_verdict(&angle(1, 7), &angle(2, 7), 5)? {
        Criterion::Decided(c) if c.independent => {}
        other => return fail(format!("(1/7, 2/7) over Q(√5): {other:?}")),
    }
    Ok(format!("{}; (1/16, 7/16) {w}", v.relation_text()))
}

// --------------------------------------------------------------- pair table

pub fn allowed_denominators() -> Result<String> {
    let v = allowed_n_values()?;
    if v != ALLOWED_DENOMINATORS {
        return fail(format!("degree filter gives {v:?}"));
    }
    Ok(format!("{v:?}"))
}

/// Recomputes the table from scratch and compares with the cached copy.
pub fn pair_table_recompute() -> Result<String> {
    let fresh = PairTable::compute()?;
    if &fresh != figure3_table()? {
        return fail("recomputed table differs");
    }
    Ok(format!("{} denominators, every representative pair agrees", fresh.values.len()))
}

pub fn pair_table_rows() -> Result<String> {
    let t = figure3_table()?;
    let expect = [(2, vec![2, 3, 4, 6, 10, 12]), (5, vec![5]), (8, vec![8, 24])];
    for (n, row) in expect {
        if t.row(n) != row {
            return fail(format!("row {n} is {:?}, expected {row:?}", t.row(n)));
        }
    }
    if t.get(5, 10).is_none_or(|c| c.admissible) || t.get(5, 8).is_none_or(|c| c.admissible) {
        return fail("(5, 8) or (5, 10) admissible");
    }
    Ok("rows 2, 5, 8 match".into())
}

pub fn pair_table_symmetric() -> Result<String> {
    let t = figure3_table()?;
    if !t.is_symmetric() {
        return fail("table is not symmetric");
    }
    let cells = t.unordered_cells();
    let admissible = cells.iter().filter(|c| c.occurs && c.admissible).count();
    Ok(format!("{} unordered pairs, {admissible} admissible", cells.len()))
}

/// Every angle pair of every classified triangle is admissible.
pub fn pair_table_consistent(max_n: u64) -> Result<String> {
    let t = figure3_table()?;
    let mut pairs = 0;
    for c in classify_all(max_n)? {
        let angles = c.shape.angles();
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (angles[i], angles[j]);
                if !generic_pair(&a, &b) {
                    continue;
                }
                if !t.get(a.n(), b.n()).is_some_and(|cell| cell.admissible) {
                    return fail(format!("{}: pair ({}, {}) not admissible", c.shape, a.n(), b.n()));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} angle pairs admissible"))
}

pub fn parity_argument() -> Result<String> {
    let checked = isosceles_parity_check()?;
    Ok(format!("{} isosceles candidates excluded", checked.len()))
}

/// `(sin(π/5)/sin(2π/5))⁻² = ((1+√5)/2)²` and
/// `(sin(3π/8)/sin(π/8))² = (1+√2)²`.
pub fn golden_squares() -> Result<String> {
    let golden = KElement::from_terms([(1, rat(1, 2)), (5, rat(1, 2))]);
    let silver = KElement::from_terms([(1, rat(1, 1)), (2, rat(1, 1))]);
    if !sin_ratio_squared_is(&angle(2, 5), &angle(1, 5), &golden)? {
        return fail("(5, 5) ratio is not the golden ratio");
    }
    if !sin_ratio_squared_is(&angle(3, 8), &angle(1, 8), &silver)? {
        return fail("(8, 8) ratio is not 1 + √2");
    }
    let mut n = 0;
    for (n_, x) in [(5, &golden), (8, &silver)] {
        for a in open_unit_angles(n_) {
            for b in open_unit_angles(n_) {
                if generic_pair(&a, &b) {
                    if !(sin_ratio_squared_is(&a, &b, x)? || sin_ratio_squared_is(&b, &a, x)?) {
                        return fail(format!("sin({})/sin({}) squared is not {x}^±2", a.pi_string(), b.pi_string()));
                    }
                    n += 1;
                }
            }
        }
    }
    Ok(format!("{n} pairs at (5,5) and (8,8)"))
}

// ------------------------------------------------------------- independence

/// The closed-form criterion matches the rank oracle on every generic pair
/// of reduced angles with denominators up to `max_n`.
pub fn criterion_matches_oracle(max_n: u64) -> Result<String> {
    let reps: Vec<Vec<ReducedAngle>> = (0..=max_n).map(|n| if n == 0 { vec![] } else { full_turn_angles(n) }).collect();
    let (mut pairs, mut dependent) = (0, 0);
    for n1 in 1..=max_n {
        for n2 in 1..=max_n {
            for r1 in &reps[n1 as usize] {
                for r2 in &reps[n2 as usize] {
                    if !generic_pair(r1, r2) {
                        continue;
                    }
                    let v = theorem2_verdict(r1, r2)?;
                    let o = oracle_q(&[*r1, *r2])?;
                    if v.independent != o.independent {
                        return fail(format!("({r1}, {r2}): criterion {} oracle {}", v, o));
                    }
                    v.check_relation()?;
                    pairs += 1;
                    dependent += !v.independent as usize;
                }
            }
        }
    }
    Ok(format!("{pairs} pairs, {dependent} dependent, all agree"))
}

/// Where the quadratic-field criterion applies it matches the oracle.
pub fn quadratic_criterion_matches_oracle(max_n: u64, radicands: &[i64]) -> Result<String> {
    let (mut decided, mut silent) = (0, 0);
    for n1 in 1..=max_n {
        for n2 in n1..=max_n {
            for r1 in half_turn_angles(n1) {
                for r2 in half_turn_angles(n2) {
                    if !generic_pair(&r1, &r2) {
                        continue;
                    }
                    for &d in radicands {
                        match theorem33_verdict(&r1, &r2, d)? {
                            Criterion::Inapplicable => silent += 1,
                            Criterion::Decided(v) => {
                                let o = oracle_quadratic(&r1, &r2, d)?;
                                if v.independent != o.independent {
                                    return fail(format!("({r1}, {r2}) over Q(√{d}): criterion {v}, oracle {o}"));
                                }
                                decided += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{decided} decided cases agree, {silent} outside the gcd hypothesis"))
}

/// Dependence over real quadratic fields for `N(r_j) ≥ 7`. Reported only;
/// pairs at `(8,8)`, `(10,10)`, `(12,12)` are the expected ones.
pub fn quadratic_sweep_report(max_n: u64) -> Result<String> {
    let found = quadratic_dependence_sweep(max_n)?;
    let mut groups: BTreeMap<(u64, u64, i64), usize> = BTreeMap::new();
    for v in &found {
        let key = (v.angles[0].n(), v.angles[1].n(), v.field.unwrap_or(1));
        *groups.entry(key).or_default() += 1;
    }
    let expected = |n1: u64, n2: u64| n1 == n2 && [8, 10, 12].contains(&n1);
    let show = |keep: bool| {
        groups
            .iter()
            .filter(|((a, b, _), _)| expected(*a, *b) == keep)
            .map(|((a, b, d), c)| format!("({a},{b}) over Q(√{d}): {c}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let others = show(false);
    let mut out = format!("N ≤ {max_n}: {}", show(true));
    if !others.is_empty() {
        out.push_str(&format!("; other dependent pairs: {others}"));
        if let Some(v) = found.iter().find(|v| !expected(v.angles[0].n(), v.angles[1].n())) {
            out.push_str(&format!(" (e.g. {})", v.relation_text()));
        }
    }
    Ok(out)
}

// ------------------------------------------------------------------- suites

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemmas,
    Identities,
    Figure1,
    Figure2,
    Figure3,
    Theorem2,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Lemmas,
        Suite::Identities,
        Suite::Figure1,
        Suite::Figure2,
        Suite::Figure3,
        Suite::Theorem2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemmas => "lemmas",
            Suite::Identities => "identities",
            Suite::Figure1 => "figure1",
            Suite::Figure2 => "figure2",
            Suite::Figure3 => "figure3",
            Suite::Theorem2 => "theorem2",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

type Check = (&'static str, Box<dyn Fn() -> Result<String>>);

fn checks(suite: Suite) -> Vec<Check> {
    fn c(name: &'static str, f: impl Fn() -> Result<String> + 'static) -> Check {
        (name, Box::new(f))
    }
    match suite {
        Suite::Lemmas => vec![
            c("leading triples, n ≤ 1000", || leading_triples(1000)),
            c("13 triple patterns by n = 30", || triple_patterns(30)),
            c("a(1,n) = −μ(n), n ≤ 1000", || first_coefficient_is_moebius(1000)),
            c("Φ_n(i) table, n ≤ 1000", || phi_at_i_values(1000)),
            c("divisor product, n ≤ 300", || product_formula(300)),
            c("palindromic Φ_n, n ≤ 300", || palindromes(300)),
            c("Φ_mn(z) = Φ_n(z^m), mn ≤ 300", || substitution_law(300)),
            c("R_n identities, n ≤ 50", || chebyshev_identities(50)),
            c("P_N lifts to Φ_2N, N ≤ 100", || cos_min_poly_identity(100)),
            c("|P_N(0)| table, N ≤ 500", || cos_constant_terms(500)),
            c("P_N and Q_N roots, N ≤ 60", || min_poly_roots(60)),
            c("rank minimal polynomial = P_N, N ≤ 40", || min_poly_degree_agreement(40)),
        ],
        Suite::Identities => vec![
            c("golden relation", golden_relation),
            c("seven-term relation", seven_relation),
            c("Möbius cosine sums, odd n ≤ 99", || moebius_sums(99)),
            c("P_5 shift invariance", golden_shift),
        ],
        Suite::Figure1 => vec![
            c("classification, N ≤ 12", || classification(12)),
            c("classification, N ≤ 5", small_classification),
            c("classification, N ≤ 120", || classification(120)),
            c("fast and verified modes, N ≤ 60", || modes_agree(60)),
            c("N(Δ) is the lcm of angle denominators, N ≤ 120", || denominators_are_lcms(120)),
        ],
        Suite::Figure2 => vec![
            c("factor rows", || factor_rows(&ALLOWED_DENOMINATORS)),
            c("Φ_n over Q(√d), n ≤ 60", || quadratic_irreducibility(60, &[2, 3, 5, 6, 7, 10, 11, 13])),
            c("biquadratic membership routes", biquadratic_routes),
            c("quadratic-field examples", quadratic_examples),
        ],
        Suite::Figure3 => vec![
            c("degree filter", allowed_denominators),
            c("pair table well-posed", pair_table_recompute),
            c("rows 2, 5, 8", pair_table_rows),
            c("symmetry", pair_table_symmetric),
            c("consistency with the classification", || pair_table_consistent(12)),
            c("isosceles parity argument", parity_argument),
            c("golden and silver squares", golden_squares),
        ],
        Suite::Theorem2 => vec![
            c("criterion vs oracle, N ≤ 30", || criterion_matches_oracle(30)),
            c("quadratic criterion vs oracle, N ≤ 20", || {
                quadratic_criterion_matches_oracle(20, &[2, 3, 5, 7])
            }),
            c("quadratic dependence sweep, N ≤ 30, findings only", || quadratic_sweep_report(30)),
        ],
        Suite::All => Suite::EACH.into_iter().flat_map(checks).collect(),
    }
}

/// Names of the checks a suite runs, in order.
pub fn check_names(suite: Suite) -> Vec<&'static str> {
    checks(suite).into_iter().map(|(n, _)| n).collect()
}

/// Runs a suite, calling `progress` after each check.
pub fn run_suite_with(suite: Suite, mut progress: impl FnMut(&CheckOutcome)) -> SuiteReport {
    let outcomes = checks(suite)
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            let o = CheckOutcome {
                name: name.into(),
                passed,
                detail,
            };
            progress(&o);
            o
        })
        .collect();
    SuiteReport::new(suite.name(), outcomes)
}

pub fn run_suite(suite: Suite) -> SuiteReport {
    run_suite_with(suite, |_| {})
}
