//! Command-line front end.
//!
//! Exit codes: 0 = verified/true, 1 = refuted/false with certificate,
//! 2 = unknown/budget exhausted, 3 = usage or parse error. With `--json`
//! every command emits one JSON object per certificate with the fields
//! `command`, `verdict`, `certificate`, and `budgets`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::automorphism::{check_coordinate_system, check_rigidity_pair, exp, in_gamma_d,
    rank_upper_bound, CoordCheck, GammaCheck, RigidityVerdict};
use crate::derivation::{LndCheck, DEFAULT_NILPOTENCY_CAP};
use crate::error::Error;
use crate::groebner::{gcd, GbLimits, SubalgebraTester, DEFAULT_STEP_BUDGET};
use crate::kernel::{
    kernel_basis_up_to_degree, kernel_generator_rounds, RoundsOptions, RoundsOutcome,
    DEFAULT_DIMENSION_BUDGET, DEFAULT_ORACLE_DEGREE, DEFAULT_ROUNDS, DEFAULT_SLICE_DEGREE_CAP,
};
use crate::rigidity::{run_corpus, CorpusBudgets};
use crate::specfile::SpecFile;

/// One emitted certificate object.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    pub certificate: Value,
    pub budgets: BTreeMap<String, u64>,
}

#[derive(Parser)]
#[command(
    name = "lnd",
    version,
    about = "Exact certificates for locally nilpotent derivations of polynomial rings over Q"
)]
struct Cli {
    /// Emit one JSON object per certificate instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a derivation to a polynomial and print the image.
    Apply {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        /// Polynomial expression or bound name.
        #[arg(long)]
        poly: String,
    },
    /// Certify local nilpotency by per-variable witnesses.
    LndCheck {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        /// Iteration cap for witness search.
        #[arg(long, default_value_t = DEFAULT_NILPOTENCY_CAP)]
        cap: usize,
    },
    /// Exponential automorphism exp(f*D) for a kernel element f.
    Exp {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_NILPOTENCY_CAP)]
        cap: usize,
    },
    /// Check that a tuple is a coordinate system and print its inverse.
    CoordsCheck {
        file: PathBuf,
        #[arg(long)]
        tuple: String,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Check Gamma_D membership of a tuple at a rank.
    GammaCheck {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long)]
        tuple: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Compare the kernel prefixes of two Gamma_D tuples.
    RigidPair {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        /// Tuple name; pass exactly twice.
        #[arg(long = "tuple")]
        tuples: Vec<String>,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Rank upper bound certified by a coordinate tuple.
    RankBound {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long)]
        tuple: String,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Irreducibility via the gcd of the variable images.
    Irreducible {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Basis of the kernel intersected with a bounded-degree space.
    KernelBasis {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long)]
        degree: u64,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_BUDGET)]
        dim_budget: usize,
    },
    /// Bounded kernel-generator search with an oracle cross-check.
    KernelRounds {
        file: PathBuf,
        #[arg(long)]
        der: Option<String>,
        #[arg(long, default_value_t = DEFAULT_ROUNDS)]
        rounds: usize,
        #[arg(long, default_value_t = DEFAULT_ORACLE_DEGREE)]
        oracle_degree: u64,
        #[arg(long, default_value_t = DEFAULT_SLICE_DEGREE_CAP)]
        slice_cap: u64,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_BUDGET)]
        dim_budget: usize,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
        #[arg(long, default_value_t = DEFAULT_NILPOTENCY_CAP)]
        cap: usize,
    },
    /// Gcd of two polynomials via ideal intersection.
    Gcd {
        file: PathBuf,
        /// Polynomial expression or bound name; pass exactly twice.
        #[arg(long = "poly")]
        polys: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Subalgebra membership with preimage extraction.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        /// Subalgebra generator; repeatable.
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
    },
    /// Run every expectation of a corpus directory.
    VerifyCorpus {
        dir: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STEP_BUDGET)]
        gb_steps: u64,
        #[arg(long, default_value_t = DEFAULT_DIMENSION_BUDGET)]
        dim_budget: usize,
        #[arg(long, default_value_t = DEFAULT_SLICE_DEGREE_CAP)]
        slice_cap: u64,
    },
}

struct Outcome {
    exit: i32,
    text: String,
    reports: Vec<Report>,
}

impl Outcome {
    fn single(exit: i32, text: String, report: Report) -> Outcome {
        Outcome {
            exit,
            text,
            reports: vec![report],
        }
    }
}

fn exit_code_for(error: &Error) -> i32 {
    match error {
        Error::StepBudgetExceeded { .. }
        | Error::DimensionBudgetExceeded { .. }
        | Error::SliceNotFound { .. } => 2,
        _ => 3,
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok(outcome) => {
            if json {
                for report in &outcome.reports {
                    println!("{}", serde_json::to_string(report).expect("serializable"));
                }
            } else {
                println!("{}", outcome.text);
            }
            outcome.exit
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn budget_map(entries: &[(&str, u64)]) -> BTreeMap<String, u64> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), *v))
        .collect()
}

fn execute(command: Command) -> crate::error::Result<Outcome> {
    match command {
        Command::Apply { file, der, poly } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let f = file.resolve_poly(&poly)?;
            let image = d.apply(&f)?;
            let report = Report {
                command: "apply".into(),
                verdict: "computed".into(),
                certificate: json!({
                    "input": f.to_string(),
                    "image": image.to_string(),
                }),
                budgets: BTreeMap::new(),
            };
            Ok(Outcome::single(0, image.to_string(), report))
        }
        Command::LndCheck { file, der, cap } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let budgets = budget_map(&[("cap", cap as u64)]);
            match d.certify_lnd(cap) {
                LndCheck::Certified(cert) => {
                    let lines: Vec<String> = cert
                        .witnesses()
                        .iter()
                        .map(|(v, s)| format!("{v}: {s}"))
                        .collect();
                    let report = Report {
                        command: "lnd-check".into(),
                        verdict: "certified".into(),
                        certificate: json!({ "witnesses": cert.witnesses() }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        0,
                        format!("locally nilpotent; witnesses:\n{}", lines.join("\n")),
                        report,
                    ))
                }
                LndCheck::Unknown { missing, cap, .. } => {
                    let report = Report {
                        command: "lnd-check".into(),
                        verdict: "unknown".into(),
                        certificate: json!({ "missing": missing, "cap": cap }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        2,
                        format!(
                            "unknown at cap {cap}; no witness for: {}",
                            missing.join(", ")
                        ),
                        report,
                    ))
                }
            }
        }
        Command::Exp {
            file,
            der,
            poly,
            cap,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let f = file.resolve_poly(&poly)?;
            let budgets = budget_map(&[("cap", cap as u64)]);
            let cert = match d.certify_lnd(cap) {
                LndCheck::Certified(cert) => cert,
                LndCheck::Unknown { missing, .. } => {
                    let report = Report {
                        command: "exp".into(),
                        verdict: "unknown".into(),
                        certificate: json!({ "missing": missing, "cap": cap }),
                        budgets,
                    };
                    return Ok(Outcome::single(
                        2,
                        format!("not certified locally nilpotent at cap {cap}"),
                        report,
                    ));
                }
            };
            match exp(&cert, &f) {
                Ok(endo) => {
                    let images: BTreeMap<String, String> = endo
                        .images()
                        .map(|(n, p)| (n.to_string(), p.to_string()))
                        .collect();
                    let lines: Vec<String> = endo
                        .images()
                        .map(|(n, p)| format!("{n} -> {p}"))
                        .collect();
                    let report = Report {
                        command: "exp".into(),
                        verdict: "automorphism".into(),
                        certificate: json!({ "images": images }),
                        budgets,
                    };
                    Ok(Outcome::single(0, lines.join("\n"), report))
                }
                Err(Error::NotInKernel { image }) => {
                    let report = Report {
                        command: "exp".into(),
                        verdict: "refuted".into(),
                        certificate: json!({
                            "reason": "multiplier is not in the kernel",
                            "image": image,
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!("refuted: D(f) = {image} is nonzero"),
                        report,
                    ))
                }
                Err(e) => Err(e),
            }
        }
        Command::CoordsCheck {
            file,
            tuple,
            gb_steps,
        } => {
            let file = SpecFile::load(&file)?;
            let coords = file.tuple(&tuple)?;
            let limits = GbLimits::with_steps(gb_steps);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            match check_coordinate_system(coords, file.ring(), limits)? {
                CoordCheck::Certificate(cert) => {
                    let inverse: BTreeMap<String, String> = cert
                        .inverse
                        .images()
                        .map(|(n, p)| (n.to_string(), p.to_string()))
                        .collect();
                    let lines: Vec<String> = cert
                        .inverse
                        .images()
                        .map(|(n, p)| format!("  {n} -> {p}"))
                        .collect();
                    let report = Report {
                        command: "coords-check".into(),
                        verdict: "coordinate-system".into(),
                        certificate: json!({
                            "jacobian_det": cert.jacobian_det.to_string(),
                            "inverse": inverse,
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        0,
                        format!(
                            "coordinate system; jacobian determinant {}\ninverse:\n{}",
                            cert.jacobian_det,
                            lines.join("\n")
                        ),
                        report,
                    ))
                }
                CoordCheck::NotCoordinateSystem(reason) => {
                    let report = Report {
                        command: "coords-check".into(),
                        verdict: "refuted".into(),
                        certificate: json!({ "reason": reason.to_string() }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!("not a coordinate system: {reason}"),
                        report,
                    ))
                }
            }
        }
        Command::GammaCheck {
            file,
            der,
            tuple,
            rank,
            gb_steps,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let coords = file.tuple(&tuple)?;
            let limits = GbLimits::with_steps(gb_steps);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            match in_gamma_d(d, coords, rank, limits)? {
                GammaCheck::Member { .. } => {
                    let report = Report {
                        command: "gamma-check".into(),
                        verdict: "member".into(),
                        certificate: json!({ "tuple": tuple, "rank": rank }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        0,
                        format!("{tuple} is in Gamma_D at rank {rank}"),
                        report,
                    ))
                }
                GammaCheck::NotMember { reason } => {
                    let report = Report {
                        command: "gamma-check".into(),
                        verdict: "refuted".into(),
                        certificate: json!({
                            "tuple": tuple,
                            "rank": rank,
                            "reason": reason.to_string(),
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!("{tuple} is not in Gamma_D at rank {rank}: {reason}"),
                        report,
                    ))
                }
            }
        }
        Command::RigidPair {
            file,
            der,
            tuples,
            rank,
            gb_steps,
        } => {
            if tuples.len() != 2 {
                return Err(Error::Usage("pass --tuple exactly twice".into()));
            }
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let t1 = file.tuple(&tuples[0])?;
            let t2 = file.tuple(&tuples[1])?;
            let limits = GbLimits::with_steps(gb_steps);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            match check_rigidity_pair(d, t1, t2, rank, limits) {
                Ok(RigidityVerdict::Consistent) => {
                    let report = Report {
                        command: "rigid-pair".into(),
                        verdict: "consistent".into(),
                        certificate: json!({ "rank": rank }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        0,
                        format!("consistent: both prefixes generate the same subalgebra at rank {rank}"),
                        report,
                    ))
                }
                Ok(RigidityVerdict::NonRigidity(cert)) => {
                    let n = d.spec().var_count();
                    let report = Report {
                        command: "rigid-pair".into(),
                        verdict: "refuted".into(),
                        certificate: json!({
                            "kind": "non-rigidity",
                            "element": cert.element.to_string(),
                            "from_tuple": cert.from_tuple,
                            "not_in_prefix_of": cert.not_in_prefix_of,
                            "prefix_length": n - rank,
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!(
                            "non-rigidity certificate: element {} of tuple {} is not in the subalgebra generated by the prefix of tuple {}",
                            cert.element, cert.from_tuple, cert.not_in_prefix_of
                        ),
                        report,
                    ))
                }
                Err(Error::GammaMembershipFailed {
                    tuple,
                    rank,
                    reason,
                }) => {
                    let report = Report {
                        command: "rigid-pair".into(),
                        verdict: "refuted".into(),
                        certificate: json!({
                            "kind": "gamma-membership-failed",
                            "tuple": tuple,
                            "rank": rank,
                            "reason": reason,
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!("tuple {tuple} is not in Gamma_D at rank {rank}: {reason}"),
                        report,
                    ))
                }
                Err(e) => Err(e),
            }
        }
        Command::RankBound {
            file,
            der,
            tuple,
            gb_steps,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let coords = file.tuple(&tuple)?;
            let limits = GbLimits::with_steps(gb_steps);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            match check_coordinate_system(coords, file.ring(), limits)? {
                CoordCheck::Certificate(cert) => {
                    let bound = rank_upper_bound(d, &cert)?;
                    let report = Report {
                        command: "rank-bound".into(),
                        verdict: "computed".into(),
                        certificate: json!({ "tuple": tuple, "rank_upper_bound": bound }),
                        budgets,
                    };
                    Ok(Outcome::single(0, format!("rank upper bound: {bound}"), report))
                }
                CoordCheck::NotCoordinateSystem(reason) => {
                    let report = Report {
                        command: "rank-bound".into(),
                        verdict: "refuted".into(),
                        certificate: json!({ "reason": reason.to_string() }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        1,
                        format!("not a coordinate system: {reason}"),
                        report,
                    ))
                }
            }
        }
        Command::Irreducible {
            file,
            der,
            gb_steps,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let limits = GbLimits::with_steps(gb_steps);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            let cert = d.is_irreducible(limits)?;
            let report = Report {
                command: "irreducible".into(),
                verdict: if cert.irreducible {
                    "irreducible".into()
                } else {
                    "reducible".into()
                },
                certificate: json!({ "gcd": cert.gcd.to_string() }),
                budgets,
            };
            let exit = if cert.irreducible { 0 } else { 1 };
            let text = if cert.irreducible {
                format!("irreducible: the images have unit gcd {}", cert.gcd)
            } else {
                format!("reducible: the images share the factor {}", cert.gcd)
            };
            Ok(Outcome::single(exit, text, report))
        }
        Command::KernelBasis {
            file,
            der,
            degree,
            dim_budget,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let basis = kernel_basis_up_to_degree(d, degree, dim_budget)?;
            let elements: Vec<String> = basis.basis.iter().map(|p| p.to_string()).collect();
            let report = Report {
                command: "kernel-basis".into(),
                verdict: "computed".into(),
                certificate: json!({
                    "degree": degree,
                    "dimension": basis.dimension(),
                    "basis": elements,
                }),
                budgets: budget_map(&[("dim_budget", dim_budget as u64)]),
            };
            Ok(Outcome::single(
                0,
                format!(
                    "kernel basis up to degree {degree} (dimension {}):\n{}",
                    basis.dimension(),
                    elements.join("\n")
                ),
                report,
            ))
        }
        Command::KernelRounds {
            file,
            der,
            rounds,
            oracle_degree,
            slice_cap,
            dim_budget,
            gb_steps,
            cap,
        } => {
            let file = SpecFile::load(&file)?;
            let d = file.select_derivation(der.as_deref())?;
            let budgets = budget_map(&[
                ("rounds", rounds as u64),
                ("oracle_degree", oracle_degree),
                ("slice_cap", slice_cap),
                ("dim_budget", dim_budget as u64),
                ("gb_steps", gb_steps),
                ("cap", cap as u64),
            ]);
            let cert = match d.certify_lnd(cap) {
                LndCheck::Certified(cert) => cert,
                LndCheck::Unknown { missing, .. } => {
                    let report = Report {
                        command: "kernel-rounds".into(),
                        verdict: "unknown".into(),
                        certificate: json!({ "missing": missing, "cap": cap }),
                        budgets,
                    };
                    return Ok(Outcome::single(
                        2,
                        format!("not certified locally nilpotent at cap {cap}"),
                        report,
                    ));
                }
            };
            let options = RoundsOptions {
                slice_degree_cap: slice_cap,
                dimension_budget: dim_budget,
                gb_limits: GbLimits::with_steps(gb_steps),
            };
            match kernel_generator_rounds(&cert, rounds, oracle_degree, options)? {
                RoundsOutcome::Stabilized {
                    generators,
                    rounds_run,
                } => {
                    let gens: Vec<String> = generators.iter().map(|p| p.to_string()).collect();
                    let report = Report {
                        command: "kernel-rounds".into(),
                        verdict: "stabilized".into(),
                        certificate: json!({
                            "rounds_run": rounds_run,
                            "generators": gens,
                        }),
                        budgets,
                    };
                    Ok(Outcome::single(
                        0,
                        format!(
                            "stabilized after round {rounds_run}; generators:\n{}",
                            gens.join("\n")
                        ),
                        report,
                    ))
                }
                RoundsOutcome::NonStabilized {
                    generators,
                    rounds_run,
                    missing_kernel_element,
                } => {
                    let gens: Vec<String> = generators.iter().map(|p| p.to_string()).collect();
                    let report = Report {
                        command: "kernel-rounds".into(),
                        verdict: "non-stabilized".into(),
                        certificate: json!({
                            "rounds_run": rounds_run,
                            "generators_so_far": gens,
                            "missing_kernel_element":
                                missing_kernel_element.as_ref().map(|p| p.to_string()),
                        }),
                        budgets,
                    };
                    let text = match &missing_kernel_element {
                        Some(w) => format!(
                            "non-stabilized at round {rounds_run}: kernel element {w} is outside the candidate subalgebra"
                        ),
                        None => format!("non-stabilized after {rounds_run} rounds"),
                    };
                    Ok(Outcome::single(2, text, report))
                }
            }
        }
        Command::Gcd {
            file,
            polys,
            gb_steps,
        } => {
            if polys.len() != 2 {
                return Err(Error::Usage("pass --poly exactly twice".into()));
            }
            let file = SpecFile::load(&file)?;
            let f = file.resolve_poly(&polys[0])?;
            let g = file.resolve_poly(&polys[1])?;
            let limits = GbLimits::with_steps(gb_steps);
            let result = gcd(&f, &g, limits)?;
            let report = Report {
                command: "gcd".into(),
                verdict: "computed".into(),
                certificate: json!({
                    "f": f.to_string(),
                    "g": g.to_string(),
                    "gcd": result.to_string(),
                }),
                budgets: budget_map(&[("gb_steps", gb_steps)]),
            };
            Ok(Outcome::single(0, result.to_string(), report))
        }
        Command::Member {
            file,
            poly,
            gens,
            gb_steps,
        } => {
            if gens.is_empty() {
                return Err(Error::Usage("pass --gen at least once".into()));
            }
            let file = SpecFile::load(&file)?;
            let f = file.resolve_poly(&poly)?;
            let generators = gens
                .iter()
                .map(|g| file.resolve_poly(g))
                .collect::<crate::error::Result<Vec<_>>>()?;
            let limits = GbLimits::with_steps(gb_steps);
            let tester = SubalgebraTester::new(&generators, file.ring(), limits)?;
            let cert = tester.membership(&f);
            let budgets = budget_map(&[("gb_steps", gb_steps)]);
            if cert.member {
                let preimage = cert.preimage.unwrap();
                let report = Report {
                    command: "member".into(),
                    verdict: "member".into(),
                    certificate: json!({ "preimage": preimage.to_string() }),
                    budgets,
                };
                Ok(Outcome::single(
                    0,
                    format!("member; preimage: {preimage}"),
                    report,
                ))
            } else {
                let report = Report {
                    command: "member".into(),
                    verdict: "refuted".into(),
                    certificate: json!({ "element": f.to_string() }),
                    budgets,
                };
                Ok(Outcome::single(
                    1,
                    format!("{f} is not in the generated subalgebra"),
                    report,
                ))
            }
        }
        Command::VerifyCorpus {
            dir,
            gb_steps,
            dim_budget,
            slice_cap,
        } => {
            let budgets = CorpusBudgets {
                gb_limits: GbLimits::with_steps(gb_steps),
                dimension_budget: dim_budget,
                slice_degree_cap: slice_cap,
            };
            let report = run_corpus(&dir, budgets)?;
            let budget_fields = budget_map(&[
                ("gb_steps", gb_steps),
                ("dim_budget", dim_budget as u64),
                ("slice_cap", slice_cap),
            ]);
            let reports: Vec<Report> = report
                .results
                .iter()
                .map(|r| Report {
                    command: "verify-corpus".into(),
                    verdict: if r.passed { "pass".into() } else { "fail".into() },
                    certificate: json!({
                        "item": r.item,
                        "check": r.kind,
                        "basis": r.basis,
                        "detail": r.detail,
                    }),
                    budgets: budget_fields.clone(),
                })
                .collect();
            let exit = if report.all_passed() { 0 } else { 1 };
            Ok(Outcome {
                exit,
                text: report.to_string(),
                reports,
            })
        }
    }
}

