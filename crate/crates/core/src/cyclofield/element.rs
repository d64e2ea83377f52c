use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{BigInt, IntPolynomial, RatPolynomial, Rational};
use crate::cyclotomic::cyclotomic_poly;
use crate::error::{Error, Result};
use crate::ntheory::{factorize, gcd, inv_mod, modulo, totient};

/// One prime-power factor `q = p^e` of the conductor.
#[derive(Debug)]
struct Component {
    q: u64,
    p: u64,
    /// `p^{e−1}`
    step: u64,
    phi_q: u64,
    /// `m / q`
    cofactor: u64,
    /// `(m / q)^{−1} mod q`
    inv: u64,
}

/// The cyclotomic field `Q(ζ_m)`.
///
/// Elements are stored in the basis of products `∏_q ζ_q^{i_q}` with
/// `0 <= i_q < φ(q)` over the prime powers `q ‖ m`, where `ζ_q = ζ_m^{m/q}`.
/// Each basis vector is itself a power of `ζ_m`, so a coordinate vector is
/// a sparse map from exponents to integers.
#[derive(Debug)]
pub struct CycloField {
    m: u64,
    phi: u64,
    comps: Vec<Component>,
}

type FieldCache = RwLock<HashMap<u64, Arc<CycloField>>>;

fn field_cache() -> &'static FieldCache {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl CycloField {
    /// The (shared) field of conductor `m`.
    pub fn get(m: u64) -> Arc<CycloField> {
        assert!(m >= 1, "conductor must be positive");
        if let Some(f) = field_cache().read().unwrap().get(&m) {
            return f.clone();
        }
        let comps = factorize(m)
            .into_iter()
            .map(|(p, e)| {
                let q = p.pow(e);
                let cofactor = m / q;
                Component {
                    q,
                    p,
                    step: q / p,
                    phi_q: q - q / p,
                    cofactor,
                    inv: inv_mod(cofactor % q, q).expect("coprime cofactor"),
                }
            })
            .collect();
        let f = Arc::new(CycloField {
            m,
            phi: totient(m),
            comps,
        });
        field_cache()
            .write()
            .unwrap()
            .entry(m)
            .or_insert(f)
            .clone()
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> u64 {
        self.phi
    }

    /// Whether `ζ_m^e` is one of the basis vectors.
    pub fn is_basis_exponent(&self, e: u64) -> bool {
        self.comps
            .iter()
            .all(|c| (e % c.q) * c.inv % c.q < c.phi_q)
    }

    /// Writes `ζ_m^e` in the basis: a list of `(exponent, ±1)`.
    pub fn reduce_monomial(&self, e: u64) -> Vec<(u64, bool)> {
        let m = self.m;
        let mut terms: Vec<(u64, bool)> = vec![(0, false)];
        for c in &self.comps {
            let j = ((e % c.q) as u128 * c.inv as u128 % c.q as u128) as u64;
            if j < c.phi_q {
                let shift = j * c.cofactor;
                for t in &mut terms {
                    t.0 = (t.0 + shift) % m;
                }
            } else {
                // ζ_q^{(p−1)p^{e−1}+u} = −Σ_{t<p−1} ζ_q^{t p^{e−1} + u}
                let u = j - c.phi_q;
                let mut next = Vec::with_capacity(terms.len() * (c.p as usize - 1));
                for &(base, neg) in &terms {
                    for t in 0..c.p - 1 {
                        let shift = (t * c.step + u) * c.cofactor;
                        next.push(((base + shift) % m, !neg));
                    }
                }
                terms = next;
            }
        }
        terms
    }

    /// Adds `coeff · ζ_m^e` (any integer `e`) into a coordinate map.
    pub(crate) fn accumulate(&self, acc: &mut BTreeMap<u64, BigInt>, e: u64, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        for (b, neg) in self.reduce_monomial(e % self.m) {
            let slot = acc.entry(b).or_default();
            if neg {
                *slot -= coeff;
            } else {
                *slot += coeff;
            }
        }
    }
}

/// An element of `Q(ζ_m)`: integer coordinates over a common denominator.
#[derive(Clone)]
pub struct CycloElement {
    field: Arc<CycloField>,
    nums: BTreeMap<u64, BigInt>,
    den: BigInt,
}

impl PartialEq for CycloElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.m == other.field.m && self.den == other.den && self.nums == other.nums
    }
}

impl Eq for CycloElement {}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloElement(m={}, {:?}/{})", self.field.m, self.nums, self.den)
    }
}

impl CycloElement {
    fn build(field: Arc<CycloField>, mut nums: BTreeMap<u64, BigInt>, den: BigInt) -> Self {
        nums.retain(|_, c| !c.is_zero());
        let mut den = den;
        if den.is_negative() {
            den = -den;
            for c in nums.values_mut() {
                *c = -&*c;
            }
        }
        let g = nums.values().fold(den.clone(), |g, c| g.gcd(c));
        if nums.is_empty() {
            den = BigInt::one();
        } else if !g.is_one() {
            den = &den / &g;
            for c in nums.values_mut() {
                *c = &*c / &g;
            }
        }
        CycloElement { field, nums, den }
    }

    /// `Σ c_j ζ_m^{e_j}` for arbitrary integer exponents.
    pub fn from_terms<I>(m: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let field = CycloField::get(m);
        let mut acc = BTreeMap::new();
        for (e, c) in terms {
            field.accumulate(&mut acc, modulo(e, m), &c);
        }
        Self::build(field, acc, BigInt::one())
    }

    pub fn zero(m: u64) -> Self {
        Self::build(CycloField::get(m), BTreeMap::new(), BigInt::one())
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, &Rational::one())
    }

    pub fn from_integer(m: u64, n: impl Into<BigInt>) -> Self {
        Self::from_terms(m, [(0, n.into())])
    }

    pub fn from_rational(m: u64, r: &Rational) -> Self {
        let mut nums = BTreeMap::new();
        nums.insert(0, r.numer().clone());
        Self::build(CycloField::get(m), nums, r.denom().clone())
    }

    /// `ζ_m^k`
    pub fn root(m: u64, k: i64) -> Self {
        Self::from_terms(m, [(k, BigInt::one())])
    }

    pub fn conductor(&self) -> u64 {
        self.field.m
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.nums.len() == 1 && self.nums.get(&0).is_some_and(|c| c.is_one())
    }

    /// Integer coordinates in the basis, keyed by exponent of `ζ_m`.
    pub fn numerators(&self) -> &BTreeMap<u64, BigInt> {
        &self.nums
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.nums.len() {
            0 => Some(Rational::zero()),
            1 => self
                .nums
                .get(&0)
                .map(|c| Rational::new(c.clone(), self.den.clone())),
            _ => None,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.field.m != other.field.m {
            return Err(Error::MixedConductors(self.field.m, other.field.m));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.check_same(other)?;
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        let mut nums: BTreeMap<u64, BigInt> =
            self.nums.iter().map(|(&e, c)| (e, c * &fa)).collect();
        for (&e, c) in &other.nums {
            let slot = nums.entry(e).or_default();
            let v = c * &fb;
            if negate {
                *slot -= v;
            } else {
                *slot += v;
            }
        }
        Ok(Self::build(self.field.clone(), nums, l))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let m = self.field.m;
        let mut acc = BTreeMap::new();
        for (&e1, c1) in &self.nums {
            for (&e2, c2) in &other.nums {
                self.field.accumulate(&mut acc, (e1 + e2) % m, &(c1 * c2));
            }
        }
        Ok(Self::build(self.field.clone(), acc, &self.den * &other.den))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let nums = self.nums.iter().map(|(&e, c)| (e, c * r.numer())).collect();
        Self::build(self.field.clone(), nums, &self.den * r.denom())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.conductor());
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// `σ_a`, the automorphism `ζ_m ↦ ζ_m^a`.
    pub fn galois(&self, a: i64) -> Result<Self> {
        let m = self.field.m;
        let a = modulo(a, m);
        if gcd(a, m) != 1 {
            return Err(Error::NotAUnit {
                exponent: a as i64,
                conductor: m,
            });
        }
        Ok(self.galois_unchecked(a))
    }

    pub(crate) fn galois_unchecked(&self, a: u64) -> Self {
        let m = self.field.m;
        let mut acc = BTreeMap::new();
        for (&e, c) in &self.nums {
            let ae = (e as u128 * a as u128 % m as u128) as u64;
            self.field.accumulate(&mut acc, ae, c);
        }
        Self::build(self.field.clone(), acc, self.den.clone())
    }

    /// The same number viewed in `Q(ζ_{m'})` for a multiple `m'` of `m`.
    pub fn lift(&self, target: u64) -> Result<Self> {
        let m = self.field.m;
        if target % m != 0 {
            return Err(Error::ConductorMismatch {
                conductor: target,
                required: m,
            });
        }
        let field = CycloField::get(target);
        let f = target / m;
        let mut acc = BTreeMap::new();
        for (&e, c) in &self.nums {
            field.accumulate(&mut acc, e * f, c);
        }
        Ok(Self::build(field, acc, self.den.clone()))
    }

    /// Coordinates in the power basis `1, ζ, …, ζ^{φ(m)−1}`.
    pub fn power_basis(&self) -> Vec<Rational> {
        let phi = self.field.phi as usize;
        let poly = self.group_ring_poly();
        let (_, rem) = poly
            .div_rem_monic(&cyclotomic_poly(self.field.m))
            .expect("cyclotomic polynomials are monic");
        (0..phi)
            .map(|i| Rational::new(rem.coeff(i), self.den.clone()))
            .collect()
    }

    /// Alias of [`power_basis`](Self::power_basis).
    pub fn coeffs(&self) -> Vec<Rational> {
        self.power_basis()
    }

    fn group_ring_poly(&self) -> IntPolynomial {
        let len = self.nums.keys().next_back().map_or(0, |&e| e as usize + 1);
        let mut coeffs = vec![BigInt::zero(); len];
        for (&e, c) in &self.nums {
            coeffs[e as usize] = c.clone();
        }
        IntPolynomial::new(coeffs)
    }

    /// Inverse of a power-basis coordinate vector.
    pub fn from_power_basis(m: u64, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let terms = coeffs.iter().enumerate().map(|(i, c)| {
            (
                i as i64,
                (c * Rational::from_integer(den.clone())).to_integer(),
            )
        });
        let e = Self::from_terms(m, terms);
        Self::build(e.field.clone(), e.nums, den)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor(), &r.recip()));
        }
        let modulus = cyclotomic_poly(self.field.m).to_rat();
        let a = RatPolynomial::new(self.power_basis());
        let inv = a
            .inverse_mod(&modulus)
            .expect("nonzero elements of a field are invertible");
        let mut coeffs = inv.coeffs().to_vec();
        coeffs.resize(self.field.phi as usize, Rational::zero());
        Ok(Self::from_power_basis(self.field.m, &coeffs))
    }

    /// Complex value in double precision (for diagnostics).
    pub fn approx(&self) -> (f64, f64) {
        let m = self.field.m as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (&e, c) in &self.nums {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * e as f64 / m;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re / den, im / den)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for &CycloElement {
            type Output = CycloElement;
            fn $method(self, rhs: &CycloElement) -> CycloElement {
                self.$inner(rhs).expect("operands share a conductor")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(m: u64, n: i64) -> CycloElement {
        CycloElement::from_integer(m, n)
    }

    #[test]
    fn basis_size_is_totient() {
        for m in 1..=120u64 {
            let f = CycloField::get(m);
            let count = (0..m).filter(|&e| f.is_basis_exponent(e)).count() as u64;
            assert_eq!(count, totient(m), "m = {m}");
        }
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycloElement::root(4, 2), int(4, -1));
        assert_eq!(CycloElement::root(5, 5), int(5, 1));
        assert_eq!(CycloElement::root(6, 3), int(6, -1));
        let i = CycloElement::root(4, 1);
        assert_eq!(i.power_basis(), vec![Rational::zero(), Rational::one()]);
    }

    #[test]
    fn sum_of_primitive_roots_is_moebius() {
        for m in 1..=60u64 {
            let s = CycloElement::from_terms(
                m,
                (0..m as i64)
                    .filter(|&j| gcd(j as u64, m) == 1)
                    .map(|j| (j, BigInt::one())),
            );
            assert_eq!(s, int(m, crate::ntheory::moebius(m)), "m = {m}");
        }
    }

    #[test]
    fn products_and_inverses() {
        let z = CycloElement::root(5, 1);
        assert!((&z * &CycloElement::root(5, 4)).is_one());
        let i = CycloElement::root(4, 1);
        let one = int(4, 1);
        assert_eq!(&(&one + &i) * &(&one - &i), int(4, 2));
        let c = &CycloElement::root(10, 1) + &CycloElement::root(10, -1);
        assert!((&c * &c.inverse().unwrap()).is_one());
        assert_eq!(int(7, 0).inverse(), Err(Error::ZeroInverse));
    }

    #[test]
    fn galois_composition() {
        let z = CycloElement::root(8, 1);
        let s3 = z.galois(3).unwrap();
        assert_eq!(s3.galois(3).unwrap(), z);
        assert!(z.galois(2).is_err());
        let r = CycloElement::from_rational(8, &crate::arith::rat(3, 7));
        assert_eq!(r.galois(5).unwrap(), r);
    }

    #[test]
    fn lift_preserves_value() {
        let c = &CycloElement::root(10, 1) + &CycloElement::root(10, -1);
        let up = c.lift(30).unwrap();
        let (a, b) = c.approx();
        let (x, y) = up.approx();
        assert!((a - x).abs() < 1e-12 && (b - y).abs() < 1e-12);
        assert!(c.lift(25).is_err());
        assert_eq!(c.try_add(&up), Err(Error::MixedConductors(10, 30)));
    }

    #[test]
    fn power_basis_round_trip() {
        for m in [1u64, 2, 3, 4, 12, 15, 36, 60] {
            for k in 0..m as i64 {
                let z = &CycloElement::root(m, k) + &CycloElement::from_rational(m, &crate::arith::rat(1, 3));
                let back = CycloElement::from_power_basis(m, &z.power_basis());
                assert_eq!(back, z, "m = {m}, k = {k}");
            }
        }
    }

    fn element(m: u64) -> impl Strategy<Value = CycloElement> {
        (prop::collection::vec((0i64..m as i64, -5i64..6), 0..5), 1i64..4).prop_map(move |(terms, den)| {
            CycloElement::from_terms(m, terms.into_iter().map(|(e, c)| (e, BigInt::from(c))))
                .scale(&crate::arith::rat(1, den))
        })
    }

    fn conductor_and_elements() -> impl Strategy<Value = (u64, CycloElement, CycloElement, CycloElement)> {
        (1u64..=60).prop_flat_map(|m| (Just(m), element(m), element(m), element(m)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms((_m, a, b, c) in conductor_and_elements()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert!((&a * &inv).is_one());
                prop_assert!((&inv * &a).is_one());
            }
        }

        #[test]
        fn galois_is_a_homomorphism((m, a, b, _c) in conductor_and_elements(), s in 1u64..200, t in 1u64..200) {
            prop_assume!(gcd(s, m) == 1 && gcd(t, m) == 1);
            let (s, t) = (s as i64, t as i64);
            prop_assert_eq!((&a * &b).galois(s).unwrap(), &a.galois(s).unwrap() * &b.galois(s).unwrap());
            prop_assert_eq!((&a + &b).galois(s).unwrap(), &a.galois(s).unwrap() + &b.galois(s).unwrap());
            prop_assert_eq!(a.galois(t).unwrap().galois(s).unwrap(), a.galois(s * t).unwrap());
        }
    }
}
