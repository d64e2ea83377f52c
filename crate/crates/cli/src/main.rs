use std::io::Write;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use niven::arith::rat_int;
use niven::cyclofield::{eval_poly, factor_over_biquadratic, two_cos, two_sin, BiquadDescriptor};
use niven::cyclotomic::{cyclotomic, leading_triple, phi_at_i};
use niven::independence::{oracle_q, oracle_quadratic, theorem2_verdict, theorem33_verdict, Criterion};
use niven::minpoly::{canonical_cos, canonical_sin, sin_min_poly, ReducedAngle, TrigKind};
use niven::ntheory::lcm;
use niven::report::{
    CheckReport, ClassifyReport, CycloReport, FactorReport, IndepReport, MinPolyReport, PhiAtIReport,
};
use niven::triangles::{classify_all, figure3_table, is_high_school, verified_verdict, Mode, TriangleShape};
use niven::verify::{run_suite_with, Suite};
use niven::Error;

#[derive(Parser)]
#[command(name = "niven", version, about = "Exact computations with cyclotomic fields and trigonometric numbers")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print only the main result line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The cyclotomic polynomial Φ_n and its leading coefficient triple.
    Cyclo { n: u64 },
    /// Φ_n(i) as a Gaussian integer.
    PhiI { n: u64 },
    /// Minimal polynomial of ±2cos(πr) or ±2sin(πr).
    Minpoly {
        kind: Kind,
        #[arg(allow_hyphen_values = true, value_parser = parse_angle)]
        angle: ReducedAngle,
    },
    /// Linear (in)dependence of 1, cos(πr1), cos(πr2) over Q or Q(√d).
    Indep {
        #[arg(allow_hyphen_values = true, value_parser = parse_angle)]
        r1: ReducedAngle,
        #[arg(allow_hyphen_values = true, value_parser = parse_angle)]
        r2: ReducedAngle,
        /// Ask over Q(√d) instead of Q.
        #[arg(long, value_name = "d", allow_negative_numbers = true)]
        field: Option<i64>,
        /// Cross-check with the rank oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Rank test for 1, cos(πr1), ..., cos(πrk) over Q.
    Oracle {
        #[arg(required = true, allow_hyphen_values = true, value_parser = parse_angle)]
        angles: Vec<ReducedAngle>,
    },
    /// Factors of the sine minimal polynomial Q_N over Q(√d1, √d2).
    FactorQ {
        n: u64,
        #[arg(long, value_name = "D", allow_negative_numbers = true)]
        d1: Option<i64>,
        #[arg(long, value_name = "D", allow_negative_numbers = true)]
        d2: Option<i64>,
    },
    /// Rational triangles whose sides fit in real quadratic fields.
    Triangles {
        #[command(subcommand)]
        command: TriangleCommand,
    },
    /// Which denominator pairs give a sine ratio in a biquadratic field.
    Figure3,
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(SUITES))]
        suite: String,
    },
}

const SUITES: [&str; 7] = ["lemmas", "identities", "figure1", "figure2", "figure3", "theorem2", "all"];

#[derive(Subcommand)]
enum TriangleCommand {
    /// All high school triangles with N ≤ max-n.
    Classify {
        #[arg(long)]
        max_n: u64,
    },
    /// Decide one triangle π(n1,n2,n3)/N.
    Check { n1: u64, n2: u64, n3: u64, n: u64 },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Cos,
    Sin,
}

fn parse_angle(s: &str) -> Result<ReducedAngle, String> {
    ReducedAngle::parse(s).map_err(|e| e.to_string())
}

/// Output plus whether every verification in it passed.
struct Outcome {
    text: Vec<String>,
    json: serde_json::Value,
    ok: bool,
}

impl Outcome {
    fn new(text: Vec<String>, json: impl Serialize) -> Result<Self, Error> {
        let json = serde_json::to_value(json).map_err(|e| Error::InvalidInput(e.to_string()))?;
        Ok(Outcome { text, json, ok: true })
    }
}

fn triple_text(t: [i64; 3]) -> String {
    let s: Vec<String> = t.iter().map(|v| v.to_string().replace('-', "−")).collect();
    format!("({})", s.join(", "))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Cyclo { n } => {
            let n = positive(*n)?;
            let rec = cyclotomic(n);
            let triple = leading_triple(n)?;
            let text = vec![
                format!("Φ_{n}(z) = {}", rec.poly),
                format!("triple {}", triple_text(triple)),
                format!("φ({n}) = {}, μ({n}) = {}, squarefree: {}", rec.phi_n, rec.moebius, rec.squarefree),
            ];
            Outcome::new(text, CycloReport::new(&rec, triple))
        }
        Command::PhiI { n } => {
            let n = positive(*n)?;
            let value = phi_at_i(n)?;
            Outcome::new(vec![format!("Φ_{n}(i) = {value}")], PhiAtIReport { n, value })
        }
        Command::Minpoly { kind, angle } => {
            let (info, x) = match kind {
                Kind::Cos => (canonical_cos(*angle)?, two_cos(angle, 2 * angle.n())?),
                Kind::Sin => (canonical_sin(*angle)?, two_sin(angle, 4 * angle.n())?),
            };
            let sign = if info.sign_is_positive() { 1 } else { -1 };
            let root = x.scale(&rat_int(sign));
            if !eval_poly(&info.poly, &root).is_zero() {
                return Err(Error::Verification(format!("{} does not vanish at the embedded number", info.poly)));
            }
            let name = match info.kind {
                TrigKind::Cos => "P",
                TrigKind::Sin => "Q",
            };
            let sign_text = if sign < 0 { "−" } else { "" };
            let text = vec![
                format!("{} = {name}_{}(z)", info.poly, angle.n()),
                format!(
                    "root {sign_text}2{}({}), degree {}",
                    info.kind,
                    angle.pi_string(),
                    info.degree
                ),
            ];
            Outcome::new(text, MinPolyReport::new(&info, &root))
        }
        Command::Indep { r1, r2, field, oracle } => indep(r1, r2, *field, *oracle),
        Command::Oracle { angles } => {
            let v = oracle_q(angles)?;
            Outcome::new(vec![v.to_string()], &v)
        }
        Command::FactorQ { n, d1, d2 } => {
            let n = positive(*n)?;
            let field = BiquadDescriptor::from_parts(*d1, *d2)?;
            let conductor = lcm(4 * n, field.conductor());
            let q = sin_min_poly(n);
            let factors = factor_over_biquadratic(&q, &field, conductor)?;
            let mut text = vec![format!("Q_{n}(z) = {q} over {field}:")];
            text.extend(factors.iter().map(|f| format!("  {f}")));
            Outcome::new(
                text,
                FactorReport {
                    n,
                    field,
                    conductor,
                    factors,
                },
            )
        }
        Command::Triangles { command } => match command {
            TriangleCommand::Classify { max_n } => {
                let report = ClassifyReport::new(*max_n, classify_all(*max_n)?);
                let mut text = vec![format!(
                    "{} triangles: {} isosceles, {} right, {} neither",
                    report.triangles.len(),
                    report.isosceles,
                    report.right,
                    report.neither
                )];
                text.extend(report.triangles.iter().map(|c| format!("  {:<12} {}", c.shape.to_string(), c.ratios)));
                Outcome::new(text, report)
            }
            TriangleCommand::Check { n1, n2, n3, n } => {
                let t = TriangleShape::new(*n1, *n2, *n3, *n)?;
                let fast = is_high_school(&t, Mode::Fast)?;
                is_high_school(&t, Mode::Verified)?;
                let verified = verified_verdict(&t)?;
                let verdict = if verified.high_school {
                    "high school triangle"
                } else {
                    "not a high school triangle"
                };
                let text = vec![format!("{t}: {verdict}"), format!("  {}", verified.evidence)];
                Outcome::new(text, CheckReport { fast, verified })
            }
        },
        Command::Figure3 => {
            let table = figure3_table()?;
            let mut text = vec!["# ratio in a biquadratic field, . not, x pair does not occur".to_string()];
            text.extend(table.to_string().lines().map(String::from));
            Outcome::new(text, table)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let stream = !cli.json && !cli.quiet;
            let report = run_suite_with(suite, |o| {
                if stream {
                    let mark = if o.passed { "ok  " } else { "FAIL" };
                    println!("{mark} {}: {}", o.name, o.detail);
                    let _ = std::io::stdout().flush();
                }
            });
            let failed = report.failures().count();
            let text = vec![format!(
                "suite {}: {} checks, {failed} failed",
                report.suite,
                report.checks.len()
            )];
            let mut out = Outcome::new(text, &report)?;
            out.ok = report.passed;
            Ok(out)
        }
    }
}

fn indep(r1: &ReducedAngle, r2: &ReducedAngle, field: Option<i64>, oracle: bool) -> Result<Outcome, Error> {
    let (criterion, checked) = match field {
        None => {
            let v = theorem2_verdict(r1, r2)?;
            let o = if oracle { Some(oracle_q(&[*r1, *r2])?) } else { None };
            (Criterion::Decided(v), o)
        }
        Some(d) => {
            let c = theorem33_verdict(r1, r2, d)?;
            let run_oracle = oracle || c == Criterion::Inapplicable;
            let o = if run_oracle { Some(oracle_quadratic(r1, r2, d)?) } else { None };
            (c, o)
        }
    };
    let report = IndepReport { criterion, oracle: checked };
    let verdict = report.verdict().expect("oracle runs whenever the criterion is silent");
    let mut text = vec![verdict.to_string()];
    match (&report.criterion, &report.oracle) {
        (Criterion::Decided(c), Some(o)) => {
            if c.independent != o.independent {
                return Err(Error::Verification(format!("criterion says \"{c}\" but the rank oracle says \"{o}\"")));
            }
            text.push("criterion and rank oracle agree".into());
        }
        (Criterion::Inapplicable, Some(_)) => {
            text.push("criterion does not apply since gcd(d, N(r)) > 1; answer from the rank oracle".into());
        }
        _ => {}
    }
    Outcome::new(text, report)
}

fn positive(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    Ok(n)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::NotSquarefree(_) | Error::Parse { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("values serialize"));
            } else if cli.quiet {
                println!("{}", out.text.first().map_or("", String::as_str));
            } else {
                for line in &out.text {
                    println!("{line}");
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
