//! Command-line surface: p-th powers, p-divisors, invariance checks, Newton
//! polytopes, family verification, and the non-algebraicity certificate.
//!
//! Exit codes: 0 computed, 1 verification mismatch, 2 input error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pdivisor::families::{self, FamilySpec};
use pdivisor::foliation::PlaneVectorField;
use pdivisor::newton::{self, Backend};
use pdivisor::parse::parse_poly;
use pdivisor::ring::Ring;
use pdivisor::{certificate, Error};

#[derive(Parser)]
#[command(name = "pdivisor", version, about = "p-divisors of plane foliations in characteristic p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Args)]
struct FieldArgs {
    /// Polynomial for the dx component
    #[arg(long = "A")]
    a: String,
    /// Polynomial for the dy component
    #[arg(long = "B")]
    b: String,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the p-th power v^p of v = A dx + B dy
    Pcampo {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        field: FieldArgs,
        /// Coefficient ring (default: the prime field F_p)
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputMode,
    },
    /// Compute the p-divisor A v^p(y) - B v^p(x) and its degree report
    Pdiv {
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputMode,
    },
    /// Run the non-algebraicity certificate for an integer vector field
    Certify {
        /// Jouanolou family degree
        #[arg(long, conflicts_with_all = ["claudia", "family_f", "family_g", "a"])]
        jouanolou: Option<u32>,
        /// Claudia family parameters d,a,b,c
        #[arg(long, conflicts_with_all = ["family_f", "family_g", "a"])]
        claudia: Option<String>,
        /// F-family parameters e,a,b,c
        #[arg(long = "family-f", conflicts_with_all = ["family_g", "a"])]
        family_f: Option<String>,
        /// G-family parameters d,u,a,b,c
        #[arg(long = "family-g", conflicts_with = "a")]
        family_g: Option<String>,
        /// Raw dx component over Z
        #[arg(long = "A", requires = "b")]
        a: Option<String>,
        /// Raw dy component over Z
        #[arg(long = "B", requires = "a")]
        b: Option<String>,
        /// Treat nondicriticality as a hypothesis instead of collecting
        /// finite-field jet evidence
        #[arg(long)]
        assert_nondicritical: bool,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputMode,
    },
    /// Verify family theorems: closed-form divisor, polytope, irreducibility
    FamilyVerify {
        /// "default" or a ';'-separated list like "claudia:3,1,1,1;family-g:5,1,1,1,1"
        #[arg(long, default_value = "default")]
        grid: String,
        /// Parallel workers for the grid
        #[arg(long, default_value = "1")]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputMode,
    },
    /// Newton polytope of a polynomial, optionally with an irreducibility verdict
    Newton {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "F2")]
        ring: String,
        /// Also certify irreducibility (polytope backend plus factor search)
        #[arg(long)]
        certify: bool,
        /// Factor search bound
        #[arg(long, default_value = "4")]
        bound: u32,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputMode,
    },
    /// Check whether {F = 0} is invariant under v = A dx + B dy
    Invariance {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "F")]
        f: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, value_enum, default_value = "text")]
        output: OutputMode,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_field(args: &FieldArgs, ring: &Ring) -> Result<PlaneVectorField, Error> {
    let a = parse_poly(&args.a, ring)?;
    let b = parse_poly(&args.b, ring)?;
    PlaneVectorField::new(a, b)
}

fn ring_for_p(ring: &Option<String>, p: u64) -> Result<Ring, Error> {
    match ring {
        Some(tag) => Ring::parse(tag),
        None => Ring::parse(&format!("F{p}")),
    }
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Pcampo {
            p,
            field,
            ring,
            output,
        } => {
            let ring = ring_for_p(&ring, p)?;
            let v = parse_field(&field, &ring)?;
            let vp = v.p_power(p)?;
            match output {
                OutputMode::Text => {
                    println!("v^{p}(x) = {}", vp.a());
                    println!("v^{p}(y) = {}", vp.b());
                }
                OutputMode::Json => {
                    let j = serde_json::json!({
                        "schema": 1,
                        "p": p,
                        "ring": ring.tag(),
                        "vp_x": vp.a().to_string(),
                        "vp_y": vp.b().to_string(),
                    });
                    println!("{}", serde_json::to_string_pretty(&j).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pdiv {
            p,
            field,
            ring,
            output,
        } => {
            let ring = ring_for_p(&ring, p)?;
            let v = parse_field(&field, &ring)?;
            let res = v.p_divisor(p)?;
            match output {
                OutputMode::Text => {
                    println!("divisor = {}", res.divisor);
                    println!("degree = {}", res.divisor.total_degree());
                    println!("p_closed = {}", res.p_closed);
                    println!("foliation_degree = {}", res.degree_report.foliation_degree);
                    println!("linf_invariant = {}", res.degree_report.linf_invariant);
                    println!(
                        "expected_projective_degree = {}",
                        res.expected_projective_degree
                    );
                    match res.z_multiplicity {
                        Some(z) => println!("z_multiplicity = {z}"),
                        None => println!("z_multiplicity = none"),
                    }
                }
                OutputMode::Json => {
                    println!("{}", serde_json::to_string_pretty(&res.to_json()).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            jouanolou,
            claudia,
            family_f,
            family_g,
            a,
            b,
            assert_nondicritical,
            output,
        } => {
            let zr = Ring::Int;
            let mut family: Option<FamilySpec> = None;
            let v = if let Some(d) = jouanolou {
                let spec = FamilySpec::Jouanolou { d };
                let v = families::make_field(&spec, &zr)?;
                family = Some(spec);
                v
            } else if let Some(params) = claudia {
                let spec = FamilySpec::parse(&format!("claudia:{params}"))?;
                let v = families::make_field(&spec, &zr)?;
                family = Some(spec);
                v
            } else if let Some(params) = family_f {
                let spec = FamilySpec::parse(&format!("family-f:{params}"))?;
                let v = families::make_field(&spec, &zr)?;
                family = Some(spec);
                v
            } else if let Some(params) = family_g {
                let spec = FamilySpec::parse(&format!("family-g:{params}"))?;
                let v = families::make_field(&spec, &zr)?;
                family = Some(spec);
                v
            } else if let (Some(a), Some(b)) = (a, b) {
                parse_field(&FieldArgs { a, b }, &zr)?
            } else {
                return Err(Error::ConstraintViolation(
                    "pass a family shortcut or raw --A/--B components".into(),
                ));
            };

            let report = certificate::theorem_main_certificate(&v, assert_nondicritical)?;

            // family shortcuts carry a closed-form divisor; cross-check it
            let mut mismatch = false;
            if let Some(spec) = &family {
                if !matches!(spec, FamilySpec::Jouanolou { .. }) {
                    let verification = families::verify_family_theorem(spec)?;
                    if !verification.divisor_matches {
                        eprintln!(
                            "internal verification mismatch: computed 2-divisor differs from the closed form for {spec}"
                        );
                        mismatch = true;
                    }
                }
            }

            match output {
                OutputMode::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report.to_json()).unwrap()
                    );
                }
                OutputMode::Text => {
                    for h in &report.hypotheses {
                        println!(
                            "hypothesis {} ({}): {} - {}",
                            h.id,
                            h.name,
                            match h.status {
                                certificate::HypStatus::Proved => "proved",
                                certificate::HypStatus::Evidence => "evidence",
                                certificate::HypStatus::Failed => "failed",
                                certificate::HypStatus::Assumed => "assumed",
                            },
                            h.detail
                        );
                    }
                    println!(
                        "degrees: foliation {}, carnicer bound {}, candidate {:?}, strict inequality {}",
                        report.degrees.foliation_degree,
                        report.degrees.carnicer_bound,
                        report.degrees.candidate_degree,
                        report.degrees.inequality_strict
                    );
                    println!("conclusion = {}", report.conclusion.as_str());
                }
            }
            if mismatch {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::FamilyVerify { grid, jobs, output } => {
            let specs: Vec<FamilySpec> = if grid == "default" {
                families::default_grid()
            } else {
                grid.split(';')
                    .map(|s| FamilySpec::parse(s.trim()))
                    .collect::<Result<_, _>>()?
            };
            let jobs = jobs.max(1);
            let mut results: Vec<Option<families::FamilyVerification>> =
                (0..specs.len()).map(|_| None).collect();
            std::thread::scope(|scope| {
                let chunks: Vec<Vec<usize>> = (0..jobs)
                    .map(|w| (w..specs.len()).step_by(jobs).collect())
                    .collect();
                let mut handles = Vec::new();
                for chunk in chunks {
                    let specs = &specs;
                    handles.push(scope.spawn(move || {
                        chunk
                            .into_iter()
                            .map(|i| (i, families::verify_family_theorem(&specs[i])))
                            .collect::<Vec<_>>()
                    }));
                }
                for h in handles {
                    for (i, r) in h.join().expect("worker panicked") {
                        results[i] = Some(r.expect("family verification failed"));
                    }
                }
            });
            let results: Vec<families::FamilyVerification> =
                results.into_iter().map(|r| r.unwrap()).collect();
            let all_passed = results.iter().all(|r| r.passed);
            match output {
                OutputMode::Text => {
                    for r in &results {
                        println!(
                            "{}: divisor {} | hull {} | {} | {}",
                            r.spec,
                            if r.divisor_matches { "matches" } else { "MISMATCH" },
                            match r.hull_matches {
                                Some(true) => "matches",
                                Some(false) => "MISMATCH",
                                None => "n/a",
                            },
                            match &r.verdict.status {
                                newton::IrrStatus::IrreducibleByPolytope =>
                                    "irreducible (polytope)".to_string(),
                                newton::IrrStatus::IrreducibleByFactorSearch { bound } =>
                                    format!("irreducible (factor search to {bound})"),
                                newton::IrrStatus::Reducible { witness } =>
                                    format!("REDUCIBLE ({witness})"),
                                newton::IrrStatus::Inconclusive { reason } =>
                                    format!("inconclusive ({reason})"),
                            },
                            if r.passed { "ok" } else { "FAILED" }
                        );
                    }
                    println!("all_passed = {all_passed}");
                }
                OutputMode::Json => {
                    let j = serde_json::json!({
                        "schema": 1,
                        "results": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                        "all_passed": all_passed,
                    });
                    println!("{}", serde_json::to_string_pretty(&j).unwrap());
                }
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Newton {
            poly,
            ring,
            certify,
            bound,
            output,
        } => {
            let ring = Ring::parse(&ring)?;
            let f = parse_poly(&poly, &ring)?;
            if f.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            let hull = newton::newton_polytope(&f)?;
            let edges = hull.primitive_edges();
            let indecomposable = if hull.is_point() {
                None
            } else {
                Some(hull.is_indecomposable()?)
            };
            let verdict = if certify {
                Some(newton::certify_irreducible(&f, Backend::Both { bound })?)
            } else {
                None
            };
            match output {
                OutputMode::Text => {
                    println!("vertices = {:?}", hull.vertices());
                    println!("primitive_edges = {edges:?}");
                    println!(
                        "indecomposable = {}",
                        match indecomposable {
                            Some(b) => b.to_string(),
                            None => "n/a (point)".to_string(),
                        }
                    );
                    if let Some(v) = &verdict {
                        println!("verdict = {:?}", v.status);
                        println!("stripped_monomial = {}", v.stripped_monomial);
                    }
                }
                OutputMode::Json => {
                    let j = serde_json::json!({
                        "schema": 1,
                        "vertices": hull.to_json(),
                        "primitive_edges": edges.iter()
                            .map(|((x, y), m)| serde_json::json!([[x, y], m]))
                            .collect::<Vec<_>>(),
                        "indecomposable": indecomposable,
                        "verdict": verdict.as_ref().map(|v| v.to_json()),
                    });
                    println!("{}", serde_json::to_string_pretty(&j).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariance {
            field,
            f,
            ring,
            output,
        } => {
            let ring = Ring::parse(&ring)?;
            let v = parse_field(&field, &ring)?;
            let fp = parse_poly(&f, &ring)?;
            let invariant = v.is_invariant_curve(&fp)?;
            match output {
                OutputMode::Text => println!("invariant = {invariant}"),
                OutputMode::Json => {
                    let j = serde_json::json!({
                        "schema": 1,
                        "ring": ring.tag(),
                        "invariant": invariant,
                    });
                    println!("{}", serde_json::to_string_pretty(&j).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
