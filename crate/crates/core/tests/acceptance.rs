//! Acceptance criteria, each run at full scale against its time budget.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use niven::verify::*;
use niven::Result;

type Step = fn() -> Result<String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    steps: &'static [Step],
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "classification up to N = 12: 14 triangles, 7/3/5, ratios verified",
        budget: secs(60),
        steps: &[|| classification(12)],
    },
    Criterion {
        id: 2,
        title: "classification up to N = 120 adds nothing",
        budget: secs(600),
        steps: &[|| classification(120)],
    },
    Criterion {
        id: 3,
        title: "sine-ratio pair table: rows 2/5/8, symmetry, consistency",
        budget: secs(600),
        steps: &[
            pair_table_recompute,
            pair_table_rows,
            pair_table_symmetric,
            || pair_table_consistent(12),
            parity_argument,
            golden_squares,
        ],
    },
    Criterion {
        id: 4,
        title: "Q-independence criterion equals rank oracle, N ≤ 30",
        budget: secs(300),
        steps: &[|| criterion_matches_oracle(30)],
    },
    Criterion {
        id: 5,
        title: "cyclotomic coefficient and Φ_n(i) tables",
        budget: secs(120),
        steps: &[
            || leading_triples(1000),
            || triple_patterns(30),
            || first_coefficient_is_moebius(1000),
            || phi_at_i_values(1000),
            || product_formula(300),
            || palindromes(300),
        ],
    },
    Criterion {
        id: 6,
        title: "minimal polynomials of 2cos and 2sin",
        budget: secs(300),
        steps: &[
            || cos_min_poly_identity(100),
            || cos_constant_terms(500),
            || min_poly_roots(60),
            || min_poly_degree_agreement(40),
        ],
    },
    Criterion {
        id: 7,
        title: "explicit relations and Möbius cosine sums",
        budget: secs(60),
        steps: &[golden_relation, seven_relation, || moebius_sums(99)],
    },
    Criterion {
        id: 8,
        title: "quadratic-field examples, factor rows, irreducibility over Q(√d)",
        budget: secs(300),
        steps: &[
            quadratic_examples,
            || factor_rows(&[4, 5, 8, 12, 16, 24, 30]),
            || quadratic_irreducibility(60, &[2, 3, 5, 6, 7, 10, 11, 13]),
        ],
    },
    Criterion {
        id: 9,
        title: "admissible denominators from the degree filter",
        budget: secs(1),
        steps: &[allowed_denominators],
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let mut problems = Vec::new();
        for step in c.steps {
            if let Err(e) = step() {
                problems.push(e.to_string());
            }
        }
        let elapsed = start.elapsed();
        if elapsed > c.budget {
            problems.push(format!("took {elapsed:.2?}, budget {:?}", c.budget));
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status} ({elapsed:.2?}) {}", c.id, c.title);
        for p in &problems {
            println!("    {p}");
        }
        failed += !problems.is_empty() as usize;
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
