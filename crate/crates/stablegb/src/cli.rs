//! Command-line interface: one subcommand per capability, JSON as the
//! machine-readable contract. Exit codes: 0 success, 1 check failure,
//! 2 usage error, 3 resource-cap or retry abort.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bounds::{compare_bounds, BoundParams, DEFAULT_BIT_CAP};
use crate::error::{Error, Result};
use crate::fset::{f_set, f_tilde_set};
use crate::groebner::{buchberger, truncated_gb, BuchbergerOptions, BuchbergerTrace, GroebnerBasis};
use crate::harness::{
    run_fixtures, transform_to_position, verify_corpus, verify_theorems, CorpusSpec,
    TargetPosition, TransformOptions,
};
use crate::invariants::{gin, hilbert_series, quasi_stable_pommaret_basis, GinOptions};
use crate::pommaret::{pommaret_completion, CompletionResult};
use crate::ring::{format_polynomial, format_term, parse_ideal, Polynomial, RingContext};

#[derive(Parser)]
#[command(name = "stablegb", version, about = "Gröbner and Pommaret bases, stability positions, ideal invariants and exact degree bounds over Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis (degrevlex) of a homogeneous ideal
    Gb {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Treat S-polynomials only up to this degree and certify the result
        #[arg(long)]
        truncate: Option<u32>,
        /// Stop once the leading ideal is strongly stable and a degree stays quiet
        #[arg(long)]
        early_stop: bool,
        #[arg(long, default_value_t = 64)]
        degree_cap: u32,
    },
    /// Pommaret basis with class data, regularity and depth
    Pommaret {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Stability predicates, Noether position, dimension and variable degrees
    Position {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Dimension, depth, regularity and Hilbert data
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generic initial ideal by agreeing seeded random coordinate changes
    Gin {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        trials: u32,
        #[arg(long)]
        json: bool,
    },
    /// The combinatorial F and F~ sets with their level data
    Fset {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate and compare all applicable degree bounds
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long = "dim")]
        dim: usize,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<u32>>,
        #[arg(long)]
        json: bool,
    },
    /// Random verified change of coordinates into a stability position
    Transform {
        file: PathBuf,
        /// quasi-stable or strongly-stable
        #[arg(long, default_value = "quasi-stable")]
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check every applicable theorem on one ideal or a random corpus
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        corpus: bool,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "n-max", default_value_t = 4)]
        n_max: usize,
        #[arg(long = "d-max", default_value_t = 4)]
        d_max: u32,
        #[arg(long = "k-max", default_value_t = 4)]
        k_max: usize,
        /// quasi-stable, strongly-stable or both
        #[arg(long, default_value = "both")]
        target: String,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the worked examples end to end
    Fixtures {
        #[arg(long)]
        json: bool,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeCapExceeded { .. }
        | Error::GinInconclusive { .. }
        | Error::TransformFailed { .. } => 3,
        _ => 2,
    }
}

fn bit_cap() -> u64 {
    std::env::var("STABLEGB_BIT_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_BIT_CAP)
}

fn load(path: &Path) -> Result<(RingContext, Vec<Polynomial>)> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
    })?;
    let (ctx, gens) = parse_ideal(&text)?;
    crate::ring::validate_proper(&gens)?;
    Ok((ctx, gens))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serialization"));
}

fn polys_to_text(ctx: &RingContext, polys: &[Polynomial]) -> Vec<String> {
    polys.iter().map(|p| format_polynomial(ctx, p)).collect()
}

#[derive(Serialize)]
struct GbReport {
    generators: Vec<String>,
    lt_ideal: Vec<String>,
    max_degree: u32,
    trace: BuchbergerTrace,
}

#[derive(Serialize)]
struct TruncatedReport {
    generators: Vec<String>,
    lt_ideal: Vec<String>,
    max_degree: u32,
    truncated_to: u32,
    certified: bool,
}

fn lt_strings(ctx: &RingContext, gb: &GroebnerBasis) -> Vec<String> {
    gb.leading_ideal()
        .generators()
        .iter()
        .map(|t| format_term(ctx, t))
        .collect()
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gb { file, json, truncate, early_stop, degree_cap } => {
            let (ctx, gens) = load(&file)?;
            if let Some(t) = truncate {
                let result = truncated_gb(&gens, t)?;
                let lt: Vec<String> = result
                    .elements
                    .iter()
                    .map(|g| format_term(&ctx, g.leading_term().unwrap()))
                    .collect();
                let report = TruncatedReport {
                    generators: polys_to_text(&ctx, &result.elements),
                    lt_ideal: lt,
                    max_degree: result.elements.iter().filter_map(Polynomial::degree).max().unwrap_or(0),
                    truncated_to: t,
                    certified: result.certified,
                };
                if json {
                    print_json(&report);
                } else {
                    println!("truncated basis at degree {t} (certified: {})", report.certified);
                    for g in &report.generators {
                        println!("  {g}");
                    }
                }
                return Ok(0);
            }
            let options = BuchbergerOptions {
                early_stop_if_stable: early_stop,
                degree_cap,
            };
            let (gb, trace) = buchberger(&gens, &options)?;
            let report = GbReport {
                generators: polys_to_text(&ctx, gb.generators()),
                lt_ideal: lt_strings(&ctx, &gb),
                max_degree: gb.max_degree(),
                trace,
            };
            if json {
                print_json(&report);
            } else {
                println!("reduced Gröbner basis (deg(I,<) = {}):", report.max_degree);
                for g in &report.generators {
                    println!("  {g}");
                }
                println!("leading ideal: {}", report.lt_ideal.join(", "));
                if let Some(s) = report.trace.early_stop_degree {
                    println!("early stop at degree {s}");
                }
            }
            Ok(0)
        }
        Command::Pommaret { file, json } => {
            let (ctx, gens) = load(&file)?;
            let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
            #[derive(Serialize)]
            struct Element {
                polynomial: String,
                class: usize,
                multiplicative: Vec<String>,
            }
            #[derive(Serialize)]
            #[serde(untagged)]
            enum Report {
                Basis {
                    elements: Vec<Element>,
                    max_degree: u32,
                    regularity: u32,
                    depth: usize,
                },
                NotQuasiStable {
                    not_quasi_stable: String,
                },
            }
            let report = match pommaret_completion(&gb, 256)? {
                CompletionResult::Complete(basis) => Report::Basis {
                    elements: basis
                        .elements()
                        .iter()
                        .map(|e| Element {
                            polynomial: format_polynomial(&ctx, &e.polynomial),
                            class: e.class + 1,
                            multiplicative: e
                                .multiplicative(basis.nvars())
                                .into_iter()
                                .map(|v| ctx.name(v).to_string())
                                .collect(),
                        })
                        .collect(),
                    max_degree: basis.max_degree(),
                    regularity: basis.regularity(),
                    depth: basis.depth(),
                },
                CompletionResult::NotQuasiStable { generator, removed_var, blocked_var } => {
                    Report::NotQuasiStable {
                        not_quasi_stable: format!(
                            "generator {} admits no power of {} replacing {}",
                            format_term(&ctx, &generator),
                            ctx.name(blocked_var),
                            ctx.name(removed_var),
                        ),
                    }
                }
            };
            if json {
                print_json(&report);
            } else {
                match &report {
                    Report::Basis { elements, regularity, depth, .. } => {
                        println!("Pommaret basis (regularity {regularity}, depth {depth}):");
                        for e in elements {
                            println!("  [cls {}] {}  (multiplicative: {})", e.class, e.polynomial, e.multiplicative.join(", "));
                        }
                    }
                    Report::NotQuasiStable { not_quasi_stable } => {
                        println!("no finite Pommaret basis: {not_quasi_stable}");
                    }
                }
            }
            Ok(0)
        }
        Command::Position { file, json } => {
            let (ctx, gens) = load(&file)?;
            let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
            let lt = gb.leading_ideal();
            #[derive(Serialize)]
            struct Report {
                quasi_stable: bool,
                stable: bool,
                strongly_stable: bool,
                noether: bool,
                dimension: usize,
                variable_degrees: Vec<VarDegree>,
            }
            #[derive(Serialize)]
            struct VarDegree {
                variable: String,
                degree: u32,
            }
            let report = Report {
                quasi_stable: lt.is_quasi_stable(),
                stable: lt.is_stable(),
                strongly_stable: lt.is_strongly_stable(),
                noether: lt.is_noether_position(),
                dimension: lt.dimension(),
                variable_degrees: (0..ctx.nvars())
                    .map(|v| VarDegree {
                        variable: ctx.name(v).to_string(),
                        degree: lt.variable_degree(v),
                    })
                    .collect(),
            };
            if json {
                print_json(&report);
            } else {
                println!("quasi stable:    {}", report.quasi_stable);
                println!("stable:          {}", report.stable);
                println!("strongly stable: {}", report.strongly_stable);
                println!("Noether:         {}", report.noether);
                println!("dimension:       {}", report.dimension);
                for vd in &report.variable_degrees {
                    println!("deg_{}: {}", vd.variable, vd.degree);
                }
            }
            Ok(0)
        }
        Command::Invariants { file, json, seed } => {
            let (_, gens) = load(&file)?;
            let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
            let lt = gb.leading_ideal();
            let hilbert = hilbert_series(&lt)?;
            let basis = quasi_stable_pommaret_basis(&gens, seed)?;
            #[derive(Serialize)]
            struct Report {
                dimension: usize,
                depth: usize,
                reg: u32,
                hilb: u32,
                hs_numerator: Vec<String>,
                hs_pole_order: usize,
                hf_table: Vec<String>,
            }
            let report = Report {
                dimension: lt.dimension(),
                depth: basis.depth(),
                reg: basis.regularity(),
                hilb: hilbert.hilb(),
                hs_numerator: hilbert.numerator().iter().map(|c| c.to_string()).collect(),
                hs_pole_order: hilbert.pole_order(),
                hf_table: hilbert.hf_table().iter().map(|c| c.to_string()).collect(),
            };
            if json {
                print_json(&report);
            } else {
                println!("dimension: {}", report.dimension);
                println!("depth:     {}", report.depth);
                println!("reg:       {}", report.reg);
                println!("hilb:      {}", report.hilb);
                println!("HS numerator: [{}], pole order {}", report.hs_numerator.join(", "), report.hs_pole_order);
                println!("HF table: [{}]", report.hf_table.join(", "));
            }
            Ok(0)
        }
        Command::Gin { file, seed, trials, json } => {
            let (ctx, gens) = load(&file)?;
            let options = GinOptions { trials, ..Default::default() };
            let result = gin(&gens, seed, &options)?;
            #[derive(Serialize)]
            struct Report {
                generators: Vec<String>,
                strongly_stable: bool,
                seed: u64,
                trials: u32,
            }
            let report = Report {
                generators: result.generators().iter().map(|t| format_term(&ctx, t)).collect(),
                strongly_stable: result.is_strongly_stable(),
                seed,
                trials,
            };
            if json {
                print_json(&report);
            } else {
                println!("gin = <{}>", report.generators.join(", "));
                println!("strongly stable: {}", report.strongly_stable);
            }
            Ok(0)
        }
        Command::Fset { file, json } => {
            let (ctx, gens) = load(&file)?;
            let (gb, _) = buchberger(&gens, &BuchbergerOptions::default())?;
            let report = f_set(&gb)?;
            let tilde = f_tilde_set(&gb);
            #[derive(Serialize)]
            struct Level {
                nvars: usize,
                dimension: usize,
                max_gb_degree: u32,
                f_size: usize,
            }
            #[derive(Serialize)]
            struct Report {
                f: Vec<String>,
                f_size: usize,
                tilde_f: Vec<String>,
                tilde_f_size: usize,
                tilde_f_warning: String,
                levels: Vec<Level>,
            }
            let out = Report {
                f: report.f.iter().map(|t| format_term(&ctx, t)).collect(),
                f_size: report.f_size(),
                tilde_f: tilde.iter().map(|t| format_term(&ctx, t)).collect(),
                tilde_f_size: tilde.len(),
                tilde_f_warning: "the F~ variant exists to reproduce a refuted inequality; use F".into(),
                levels: report
                    .levels
                    .iter()
                    .map(|l| Level {
                        nvars: l.nvars,
                        dimension: l.dimension,
                        max_gb_degree: l.max_gb_degree,
                        f_size: l.f_size,
                    })
                    .collect(),
            };
            if json {
                print_json(&out);
            } else {
                println!("#F = {}  (#F~ = {})", out.f_size, out.tilde_f_size);
                println!("F = {{{}}}", out.f.join(", "));
                for (i, l) in out.levels.iter().enumerate() {
                    println!(
                        "level {i}: {} vars, dim {}, deg(I,<) = {}, #F = {}",
                        l.nvars, l.dimension, l.max_gb_degree, l.f_size
                    );
                }
            }
            Ok(0)
        }
        Command::Bounds { n, d, dim, depth, degrees, json } => {
            let cap = bit_cap();
            let params = BoundParams {
                n,
                d,
                dim: Some(dim),
                depth,
                degrees,
            };
            let table = compare_bounds(&params, cap);
            if table.is_empty() {
                return Err(Error::InvalidParameter("no bound applies to these parameters".into()));
            }
            #[derive(Serialize)]
            struct Row {
                formula: String,
                value: String,
                approx_log2: f64,
            }
            let rows: Vec<Row> = table
                .iter()
                .map(|b| Row {
                    formula: b.formula.id().to_string(),
                    value: b.display(),
                    approx_log2: b.magnitude.log2(),
                })
                .collect();
            if json {
                print_json(&rows);
            } else {
                println!("bounds for n={n} d={d} D={dim}{}:", match depth {
                    Some(l) => format!(" depth={l}"),
                    None => String::new(),
                });
                for row in &rows {
                    println!("  {:<16} {}", row.formula, row.value);
                }
            }
            Ok(0)
        }
        Command::Transform { file, target, seed, json } => {
            let (ctx, gens) = load(&file)?;
            let target = parse_target(&target)?;
            let (change, transformed) =
                transform_to_position(&gens, target, seed, &TransformOptions::default())?;
            #[derive(Serialize)]
            struct Report {
                target: String,
                matrix: Vec<Vec<String>>,
                generators: Vec<String>,
                retries: u32,
            }
            let report = Report {
                target: target.name().into(),
                matrix: change
                    .matrix()
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect(),
                generators: polys_to_text(&ctx, &transformed.generators),
                retries: transformed.retries,
            };
            if json {
                print_json(&report);
            } else {
                println!("transformed to {} position after {} retries", report.target, report.retries);
                for g in &report.generators {
                    println!("  {g}");
                }
            }
            Ok(0)
        }
        Command::Verify { file, corpus, count, seed, n_max, d_max, k_max, target, json } => {
            if corpus {
                let mut summaries = Vec::new();
                let targets: Vec<TargetPosition> = match target.as_str() {
                    "both" => vec![TargetPosition::QuasiStable, TargetPosition::StronglyStable],
                    other => vec![parse_target(other)?],
                };
                let per_target = count / targets.len();
                for (i, t) in targets.iter().enumerate() {
                    let spec = CorpusSpec {
                        count: per_target,
                        max_vars: n_max,
                        max_degree: d_max,
                        max_generators: k_max,
                        seed: seed.wrapping_add(i as u64),
                        target: *t,
                    };
                    summaries.push(verify_corpus(&spec)?);
                }
                let all_passed = summaries.iter().all(|s| s.all_passed());
                if json {
                    print_json(&summaries);
                } else {
                    for s in &summaries {
                        println!(
                            "target {}: {} members, {} failures; dimensions exercised: {:?}",
                            s.spec.target.name(),
                            s.members,
                            s.failures.len(),
                            s.dimensions_exercised
                        );
                        for f in &s.failures {
                            println!("  FAIL {f}");
                        }
                    }
                }
                Ok(if all_passed { 0 } else { 1 })
            } else {
                let Some(file) = file else {
                    return Err(Error::InvalidParameter(
                        "verify needs an ideal file or --corpus".into(),
                    ));
                };
                let (_, gens) = load(&file)?;
                let name = crate::harness::ideal_label(Some(&file));
                let report = verify_theorems(&gens, &name, seed)?;
                if json {
                    print_json(&report);
                } else {
                    println!(
                        "{}: deg(I,<) = {}, dim = {}, hilb = {}",
                        report.ideal, report.max_gb_degree, report.dimension, report.hilb
                    );
                    for c in &report.checks {
                        match (c.applicable, c.holds) {
                            (false, _) => println!(
                                "  skip {:<22} ({})",
                                c.id,
                                c.reason.as_deref().unwrap_or("")
                            ),
                            (true, Some(true)) => println!(
                                "  pass {:<22} {} vs {}",
                                c.id,
                                c.lhs.as_deref().unwrap_or(""),
                                c.rhs.as_deref().unwrap_or("")
                            ),
                            _ => println!(
                                "  FAIL {:<22} {} vs {}",
                                c.id,
                                c.lhs.as_deref().unwrap_or(""),
                                c.rhs.as_deref().unwrap_or("")
                            ),
                        }
                    }
                }
                Ok(if report.all_applicable_hold() { 0 } else { 1 })
            }
        }
        Command::Fixtures { json } => {
            let summary = run_fixtures()?;
            if json {
                print_json(&summary);
            } else {
                for c in &summary.checks {
                    println!(
                        "{} {:<22} {:<28} {}",
                        if c.passed { "pass" } else { "FAIL" },
                        c.fixture,
                        c.name,
                        c.detail
                    );
                }
            }
            Ok(if summary.all_passed() { 0 } else { 1 })
        }
    }
}

fn parse_target(s: &str) -> Result<TargetPosition> {
    match s {
        "quasi-stable" | "quasi" => Ok(TargetPosition::QuasiStable),
        "strongly-stable" | "strong" => Ok(TargetPosition::StronglyStable),
        other => Err(Error::InvalidParameter(format!(
            "unknown target position `{other}` (use quasi-stable or strongly-stable)"
        ))),
    }
}
