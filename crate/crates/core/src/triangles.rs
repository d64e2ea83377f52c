//! Rational triangles whose sides can be scaled to need at most one square
//! root each ("high school" triangles).

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::BigInt;
use crate::cyclofield::{biquadratic_degree_terms, sin_numerator, KElement, RadicalExpr};
use crate::error::{Error, Result};
use crate::minpoly::{degree_of_cos, ReducedAngle};
use crate::ntheory::lcm;

/// Denominators `N(r)` for which `cos(πr)` has degree 1, 2, 4 or 8.
pub const ALLOWED_DENOMINATORS: [u64; 14] = [2, 3, 4, 5, 6, 8, 10, 12, 15, 16, 17, 20, 24, 30];

/// `N(Δ)` values of the high school triangles.
pub const HIGH_SCHOOL_DENOMINATORS: [u64; 5] = [3, 4, 5, 6, 12];

/// `π(n₁, n₂, n₃)/N` with `n₁ ≤ n₂ ≤ n₃`, `n₁ + n₂ + n₃ = N` and
/// `gcd(n₁, n₂, n₃) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawShape")]
pub struct TriangleShape {
    #[serde(rename = "N")]
    n: u64,
    n1: u64,
    n2: u64,
    n3: u64,
}

#[derive(Deserialize)]
struct RawShape {
    #[serde(rename = "N")]
    n: u64,
    n1: u64,
    n2: u64,
    n3: u64,
}

impl TryFrom<RawShape> for TriangleShape {
    type Error = Error;

    fn try_from(r: RawShape) -> Result<Self> {
        TriangleShape::new(r.n1, r.n2, r.n3, r.n)
    }
}

impl TriangleShape {
    /// The parts may come in any order; they are sorted.
    pub fn new(a: u64, b: u64, c: u64, n: u64) -> Result<Self> {
        let mut parts = [a, b, c];
        parts.sort_unstable();
        let [n1, n2, n3] = parts;
        if n1 == 0 {
            return Err(Error::InvalidInput("angles must be positive".into()));
        }
        if n1.checked_add(n2).and_then(|s| s.checked_add(n3)) != Some(n) {
            return Err(Error::InvalidInput(format!("{a} + {b} + {c} ≠ {n}")));
        }
        if n1.gcd(&n2).gcd(&n3) != 1 {
            return Err(Error::InvalidInput(format!("{a}, {b}, {c} share a factor")));
        }
        Ok(TriangleShape { n, n1, n2, n3 })
    }

    pub fn parts(&self) -> [u64; 3] {
        [self.n1, self.n2, self.n3]
    }

    /// `N(Δ)`
    pub fn denominator(&self) -> u64 {
        self.n
    }

    /// `r_j = n_j / N`, reduced.
    pub fn angles(&self) -> [ReducedAngle; 3] {
        self.parts()
            .map(|k| ReducedAngle::new(k as i64, self.n).expect("N is positive"))
    }

    /// `N(r_j)` for each angle.
    pub fn angle_denominators(&self) -> [u64; 3] {
        self.angles().map(|a| a.n())
    }

    /// `lcm N(r_j)`, which equals `N` for a valid shape.
    pub fn lcm_denominator(&self) -> u64 {
        self.angle_denominators().into_iter().fold(1, lcm)
    }

    pub fn is_isosceles(&self) -> bool {
        self.n1 == self.n2 || self.n2 == self.n3
    }

    pub fn is_right(&self) -> bool {
        self.parts().iter().any(|&k| 2 * k == self.n)
    }
}

impl fmt::Display for TriangleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "π({},{},{})/{}", self.n1, self.n2, self.n3, self.n)
    }
}

/// Side lengths up to a common factor, opposite the angles in order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SideRatios {
    pub x1: RadicalExpr,
    pub x2: RadicalExpr,
    pub x3: RadicalExpr,
}

impl SideRatios {
    pub fn sides(&self) -> [RadicalExpr; 3] {
        [self.x1, self.x2, self.x3]
    }
}

impl fmt::Display for SideRatios {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} : {}", self.x1, self.x2, self.x3)
    }
}

/// All shapes with `3 ≤ N ≤ max_n`, sorted by `(N, n₁, n₂)`.
pub fn enumerate_shapes(max_n: u64) -> Vec<TriangleShape> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        for n1 in 1..=n / 3 {
            for n2 in n1..=(n - n1) / 2 {
                if let Ok(t) = TriangleShape::new(n1, n2, n - n1 - n2, n) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// `N ≥ 2` with `deg cos(π/N) ∈ {1, 2, 4, 8}`, found by scanning up to 1000
/// and checked against [`ALLOWED_DENOMINATORS`].
pub fn allowed_n_values() -> Result<Vec<u64>> {
    let found: Vec<u64> = (2..=1000)
        .filter(|&n| matches!(degree_of_cos(n), 1 | 2 | 4 | 8))
        .collect();
    if found != ALLOWED_DENOMINATORS {
        return Err(Error::Verification(format!(
            "degree filter gives {found:?}, expected {ALLOWED_DENOMINATORS:?}"
        )));
    }
    Ok(found)
}

/// `ζ^a − ζ^{−a} = 2i·sin(πk/N)` in `Q(ζ_m)` as group-ring terms.
fn sin_terms(angle: &ReducedAngle, m: u64) -> Vec<(u64, BigInt)> {
    let a = angle.k() * (m / (2 * angle.n()));
    vec![(a % m, BigInt::one()), ((m - a % m) % m, -BigInt::one())]
}

/// `k/N` with `0 < k/N < 1` in lowest terms.
pub fn open_unit_angles(n: u64) -> Vec<ReducedAngle> {
    (1..n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| ReducedAngle::new(k as i64, n).expect("positive denominator"))
        .collect()
}

/// One entry of the table of denominator pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairCell {
    pub n1: u64,
    pub n2: u64,
    /// Whether some `r₁, r₂` in `(0, 1)` with these denominators have
    /// `r₁ ± r₂ ∉ Z`.
    pub occurs: bool,
    /// Whether `sin(πr₁)/sin(πr₂)` lies in a field `Q(√d₁, √d₂)`. When the
    /// pair does not occur this is taken over all representatives.
    pub admissible: bool,
}

/// Decides the sine-ratio question for one pair of denominators, checking
/// that every pair of representatives gives the same answer.
pub fn sin_ratio_cell(n1: u64, n2: u64) -> Result<PairCell> {
    for n in [n1, n2] {
        if !ALLOWED_DENOMINATORS.contains(&n) {
            return Err(Error::InvalidInput(format!("{n} is not an allowed denominator")));
        }
    }
    // 2i cancels in the ratio, so 2N₁ and 2N₂ suffice
    let m = lcm(2 * n1, 2 * n2);
    let (reps1, reps2) = (open_unit_angles(n1), open_unit_angles(n2));
    let mut generic = Vec::new();
    let mut degenerate = Vec::new();
    for r1 in &reps1 {
        let t1 = sin_terms(r1, m);
        for r2 in &reps2 {
            let t2 = sin_terms(r2, m);
            let inside = biquadratic_degree_terms(m, &t1, &t2).is_some();
            let same = r1 == r2 || r1.k() * r2.n() + r2.k() * r1.n() == r1.n() * r2.n();
            if same {
                degenerate.push(inside);
            } else {
                generic.push((inside, *r1, *r2));
            }
        }
    }
    let occurs = !generic.is_empty();
    let admissible = if occurs {
        let first = generic[0].0;
        if let Some((_, r1, r2)) = generic.iter().find(|g| g.0 != first) {
            return Err(Error::Verification(format!(
                "representatives disagree for ({n1}, {n2}): ({}, {}) and ({r1}, {r2})",
                generic[0].1, generic[0].2
            )));
        }
        first
    } else {
        if degenerate.iter().any(|&b| b != degenerate[0]) {
            return Err(Error::Verification(format!("representatives disagree for ({n1}, {n2})")));
        }
        degenerate[0]
    };
    Ok(PairCell {
        n1,
        n2,
        occurs,
        admissible,
    })
}

/// Whether `sin(πr₁)/sin(πr₂)` lies in a field `Q(√d₁, √d₂)` for
/// `N(r_j) = N_j`.
pub fn sin_ratio_biquadratic(n1: u64, n2: u64) -> Result<bool> {
    Ok(sin_ratio_cell(n1, n2)?.admissible)
}

/// The full table over [`ALLOWED_DENOMINATORS`], both orders computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTable {
    pub values: Vec<u64>,
    /// `cells[i][j]` is the cell for `(values[i], values[j])`.
    pub cells: Vec<Vec<PairCell>>,
}

impl PairTable {
    pub fn compute() -> Result<Self> {
        let values = allowed_n_values()?;
        let mut cells = Vec::with_capacity(values.len());
        for &a in &values {
            let mut row = Vec::with_capacity(values.len());
            for &b in &values {
                row.push(sin_ratio_cell(a, b)?);
            }
            cells.push(row);
        }
        Ok(PairTable { values, cells })
    }

    pub fn get(&self, n1: u64, n2: u64) -> Option<&PairCell> {
        let i = self.values.iter().position(|&v| v == n1)?;
        let j = self.values.iter().position(|&v| v == n2)?;
        Some(&self.cells[i][j])
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (a, b) = (&self.cells[i][j], &self.cells[j][i]);
                (a.occurs, a.admissible) == (b.occurs, b.admissible)
            })
        })
    }

    /// Denominators `N₂` with `(n1, N₂)` admissible.
    pub fn row(&self, n1: u64) -> Vec<u64> {
        self.values
            .iter()
            .copied()
            .filter(|&n2| self.get(n1, n2).is_some_and(|c| c.admissible))
            .collect()
    }

    /// Unordered pairs `(N₁ ≤ N₂)`, 105 of them.
    pub fn unordered_cells(&self) -> Vec<PairCell> {
        let n = self.values.len();
        (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .map(|(i, j)| self.cells[i][j])
            .collect()
    }
}

impl fmt::Display for PairTable {
    /// `#` admissible, `.` not admissible, `x` the pair does not occur.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:>4}", "")?;
        for v in &self.values {
            write!(f, "{v:>3}")?;
        }
        writeln!(f)?;
        for (v, row) in self.values.iter().zip(&self.cells) {
            write!(f, "{v:>4}")?;
            for c in row {
                let mark = match (c.occurs, c.admissible) {
                    (false, _) => 'x',
                    (true, true) => '#',
                    (true, false) => '.',
                };
                write!(f, "{mark:>3}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// The pair table, computed once per process.
pub fn figure3_table() -> Result<&'static PairTable> {
    static TABLE: OnceLock<Result<PairTable>> = OnceLock::new();
    TABLE.get_or_init(PairTable::compute).as_ref().map_err(Clone::clone)
}

/// Parses the witness format: `n1 n2 n3 N | a b d c | a b d c | a b d c`.
pub fn parse_fixtures(text: &str) -> Result<Vec<(TriangleShape, SideRatios)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 4 {
            return Err(err(format!("expected 4 '|'-separated fields, found {}", fields.len())));
        }
        let ints = |s: &str, count: usize| -> Result<Vec<i64>> {
            let v = s
                .split_whitespace()
                .map(|w| w.parse::<i64>().map_err(|e| err(format!("{w:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            if v.len() != count {
                return Err(err(format!("expected {count} integers in {s:?}")));
            }
            Ok(v)
        };
        let head = ints(fields[0], 4)?;
        if head.iter().any(|&x| x <= 0) {
            return Err(err("angle data must be positive".into()));
        }
        let parts = [head[0] as u64, head[1] as u64, head[2] as u64];
        let mut sorted = parts;
        sorted.sort_unstable();
        if sorted != parts {
            return Err(err("angles must be listed in increasing order".into()));
        }
        let shape = TriangleShape::new(parts[0], parts[1], parts[2], head[3] as u64).map_err(|e| err(e.to_string()))?;
        let mut sides = Vec::with_capacity(3);
        for f in &fields[1..] {
            let v = ints(f, 4)?;
            if v[2] <= 0 || v[3] <= 0 {
                return Err(err("radicand and denominator must be positive".into()));
            }
            let x = RadicalExpr::new(v[0], v[1], v[2] as u64, v[3] as u64).map_err(|e| err(e.to_string()))?;
            if !x.is_positive() {
                return Err(err(format!("side {x} is not positive")));
            }
            sides.push(x);
        }
        out.push((
            shape,
            SideRatios {
                x1: sides[0],
                x2: sides[1],
                x3: sides[2],
            },
        ));
    }
    Ok(out)
}

const WITNESS_TEXT: &str = include_str!("../data/high_school_triangles.txt");

/// The shipped side-ratio witnesses, unverified.
pub fn witnesses() -> Result<&'static [(TriangleShape, SideRatios)]> {
    static W: OnceLock<Result<Vec<(TriangleShape, SideRatios)>>> = OnceLock::new();
    W.get_or_init(|| parse_fixtures(WITNESS_TEXT))
        .as_deref()
        .map_err(Clone::clone)
}

fn witness_for(t: &TriangleShape) -> Result<Option<SideRatios>> {
    static INDEX: OnceLock<HashMap<TriangleShape, SideRatios>> = OnceLock::new();
    let w = witnesses()?;
    Ok(INDEX.get_or_init(|| w.iter().copied().collect()).get(t).copied())
}

/// Whether `sin(πn_j/N)·x_k = sin(πn_k/N)·x_j` for `(j, k) = (1, 2), (2, 3)`,
/// decided exactly.
pub fn verify_ratio(t: &TriangleShape, x: &SideRatios) -> Result<bool> {
    if let Some(bad) = x.sides().iter().find(|s| !s.is_positive()) {
        return Err(Error::InvalidInput(format!("side {bad} is not positive")));
    }
    let m = x.sides().iter().fold(2 * t.denominator(), |m, s| lcm(m, s.conductor()));
    let sines = t
        .angles()
        .iter()
        .map(|a| sin_numerator(a, m))
        .collect::<Result<Vec<_>>>()?;
    let sides = x
        .sides()
        .iter()
        .map(|s| s.to_element(m))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..2).all(|j| &sines[j] * &sides[j + 1] == &sines[j + 1] * &sides[j]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Fast,
    Verified,
}

/// What settled a verified verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// A side-ratio triple checked exactly.
    Witness { ratios: SideRatios },
    /// `N(r_j)` (1-based `index`) is outside the allowed denominators.
    DegreeFilter { index: usize, denominator: u64 },
    /// Two distinct angles whose sine ratio is in no biquadratic field.
    PairTable { indices: [usize; 2], denominators: [u64; 2] },
    /// All three `N(r_j)` in `{8, 24}`, impossible for angles summing to 1.
    Parity,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Witness { ratios } => write!(f, "sides {ratios}"),
            Evidence::DegreeFilter { index, denominator } => {
                write!(f, "N(r{index}) = {denominator} fails the degree filter")
            }
            Evidence::PairTable { indices, denominators } => write!(
                f,
                "sin(πr{})/sin(πr{}) with denominators ({}, {}) lies in no biquadratic field",
                indices[0], indices[1], denominators[0], denominators[1]
            ),
            Evidence::Parity => f.write_str("all denominators in {8, 24} contradict r1 + r2 + r3 = 1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighSchoolVerdict {
    pub shape: TriangleShape,
    pub high_school: bool,
    pub evidence: Evidence,
}

/// Decides the shape from scratch: an obstruction for a negative answer,
/// an exactly verified witness for a positive one.
pub fn verified_verdict(t: &TriangleShape) -> Result<HighSchoolVerdict> {
    let dens = t.angle_denominators();
    let negative = |evidence| HighSchoolVerdict {
        shape: *t,
        high_school: false,
        evidence,
    };
    for (j, &d) in dens.iter().enumerate() {
        if !ALLOWED_DENOMINATORS.contains(&d) {
            return Ok(negative(Evidence::DegreeFilter {
                index: j + 1,
                denominator: d,
            }));
        }
    }
    let table = figure3_table()?;
    let parts = t.parts();
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        if parts[j] == parts[k] {
            continue;
        }
        let cell = table.get(dens[j], dens[k]).expect("allowed denominators");
        if !cell.admissible {
            return Ok(negative(Evidence::PairTable {
                indices: [j + 1, k + 1],
                denominators: [dens[j], dens[k]],
            }));
        }
    }
    if dens.iter().all(|d| [8, 24].contains(d)) {
        return Ok(negative(Evidence::Parity));
    }
    let Some(ratios) = witness_for(t)? else {
        return Err(Error::Verification(format!("{t} has no obstruction and no witness")));
    };
    if !verify_ratio(t, &ratios)? {
        return Err(Error::Verification(format!("witness {ratios} for {t} is wrong")));
    }
    Ok(HighSchoolVerdict {
        shape: *t,
        high_school: true,
        evidence: Evidence::Witness { ratios },
    })
}

/// Fast mode reads off `N(Δ)`; verified mode also derives the answer from
/// scratch and fails if the two differ.
pub fn is_high_school(t: &TriangleShape, mode: Mode) -> Result<bool> {
    let fast = HIGH_SCHOOL_DENOMINATORS.contains(&t.denominator());
    if mode == Mode::Fast {
        return Ok(fast);
    }
    let v = verified_verdict(t)?;
    if v.high_school != fast {
        return Err(Error::Verification(format!(
            "{t}: denominator test says {fast}, derivation says {} ({})",
            v.high_school, v.evidence
        )));
    }
    Ok(fast)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classified {
    pub shape: TriangleShape,
    pub ratios: SideRatios,
}

/// Every high school shape with `N ≤ max_n`, in verified mode.
pub fn classify_all(max_n: u64) -> Result<Vec<Classified>> {
    if max_n < 3 {
        return Err(Error::InvalidInput("the largest denominator must be at least 3".into()));
    }
    let mut out = Vec::new();
    for t in enumerate_shapes(max_n) {
        if !is_high_school(&t, Mode::Verified)? {
            continue;
        }
        match verified_verdict(&t)?.evidence {
            Evidence::Witness { ratios } => out.push(Classified { shape: t, ratios }),
            other => unreachable!("positive verdict with evidence {other}"),
        }
    }
    Ok(out)
}

/// `(sin(πr₁)/sin(πr₂))² = x²`, decided exactly.
pub fn sin_ratio_squared_is(r1: &ReducedAngle, r2: &ReducedAngle, x: &KElement) -> Result<bool> {
    let m = lcm(lcm(2 * r1.n(), 2 * r2.n()), x.conductor());
    let (s1, s2) = (sin_numerator(r1, m)?, sin_numerator(r2, m)?);
    let xe = x.to_element(m)?;
    Ok(&s1 * &s1 == &(&xe * &xe) * &(&s2 * &s2))
}

/// For isosceles candidates `(r, r, 1 − 2r)` with `N(r) ∈ {8, 10, 24}` and
/// `0 < r < 1/3`: checks `N(1 − 2r) | N(r)/2` and that the pair is not
/// admissible. Returns the `(r, N(1 − 2r))` checked.
pub fn isosceles_parity_check() -> Result<Vec<(ReducedAngle, u64)>> {
    let table = figure3_table()?;
    let mut checked = Vec::new();
    for n in [8u64, 10, 24] {
        for r in open_unit_angles(n).into_iter().filter(|r| 3 * r.k() < n) {
            let apex = ReducedAngle::new(n as i64 - 2 * r.k() as i64, n)?;
            let na = apex.n();
            if (n / 2) % na != 0 {
                return Err(Error::Verification(format!("N(1 − 2·{r}) = {na} does not divide {}", n / 2)));
            }
            let admissible = table.get(n, na).is_some_and(|c| c.admissible);
            if admissible {
                return Err(Error::Verification(format!("pair ({n}, {na}) from {r} is admissible")));
            }
            checked.push((r, na));
        }
    }
    Ok(checked)
}
