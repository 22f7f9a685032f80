use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hilbert_mnc::io::{vector_to_data, InstanceFile, ResolvedInstance, SamplingData, VectorData};
use hilbert_mnc::suite::fmt_sig;
use hilbert_mnc::{
    discrete_witness, lambda_profile, op_mnc, random_seminorm, run_suite, seminorm_mnc_bounds,
    star_aggregate, BoundParams, BoundedSet, Error, EvalParams, MeasureKind, MncEstimate,
    OpMncResult, OperatorMeasure, Selection, StarParams, SuiteConfig, TailProfile, Validity,
    WitnessParams,
};

/// Noncompactness measures on truncated standard Hilbert C*-modules.
#[derive(Parser)]
#[command(name = "hmnc", version, about)]
struct Cli {
    /// Instance file (JSON, schema "hmnc-instance/1")
    #[arg(long, global = true)]
    file: Option<PathBuf>,
    /// Master seed; overrides the instance seed and HMNC_SEED
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format for computation results
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Alpha,
    Chi,
    Istratescu,
}

impl From<MeasureArg> for MeasureKind {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::Alpha => MeasureKind::Alpha,
            MeasureArg::Chi => MeasureKind::Chi,
            MeasureArg::Istratescu => MeasureKind::Istratescu,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OpMeasureArg {
    Lambda0,
    Alpha0,
    Chi0,
    I0,
}

impl From<OpMeasureArg> for OperatorMeasure {
    fn from(m: OpMeasureArg) -> Self {
        match m {
            OpMeasureArg::Lambda0 => OperatorMeasure::Lambda0,
            OpMeasureArg::Alpha0 => OperatorMeasure::Alpha0,
            OpMeasureArg::Chi0 => OperatorMeasure::Chi0,
            OpMeasureArg::I0 => OperatorMeasure::I0,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Tail profile of a named set up to a horizon
    Lambda {
        set: String,
        /// Horizon (defaults to N − 1)
        #[arg(long)]
        nmax: Option<usize>,
    },
    /// Covering/packing bounds for one measure of a named set
    Bounds {
        set: String,
        #[arg(long, value_enum)]
        measure: MeasureArg,
        /// Aggregate over sampled semi-norms instead of a single one
        #[arg(long)]
        star: bool,
        /// Semi-norm budget for --star
        #[arg(long)]
        seminorms: Option<usize>,
    },
    /// Operator norm of a named operator
    Opnorm { operator: String },
    /// Measure of noncompactness of a named operator
    Opmnc {
        operator: String,
        #[arg(long, value_enum)]
        measure: OpMeasureArg,
    },
    /// Separated discrete sequence witnessing a lower Istrăţescu bound
    Witness {
        set: String,
        #[arg(long)]
        eps: f64,
        /// Right-multiply points by random unitaries
        #[arg(long)]
        twist: bool,
        #[arg(long)]
        max_points: Option<usize>,
    },
    /// Run the property suite; exit status 0 exactly on pass
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Run the property suite and emit the report in a machine format
    Report {
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Instance(_)
        | Error::InvalidSet(_)
        | Error::ShapeMismatch(_)
        | Error::InvalidParam(_)
        | Error::IndexOutOfRange { .. }
        | Error::EmptySet(_) => 2,
        Error::Precompact { .. }
        | Error::WitnessSearch(_)
        | Error::NotInvertible { .. }
        | Error::NotUnitary { .. }
        | Error::DegenerateSeminorm => 3,
    }
}

struct Ctx {
    instance: ResolvedInstance,
    seed: u64,
    format: Format,
    file: PathBuf,
}

impl Ctx {
    fn sampling(&self) -> SamplingData {
        self.instance.sampling
    }

    fn eval(&self) -> EvalParams {
        self.sampling().eval_params(self.seed)
    }

    fn bound_params(&self) -> BoundParams {
        let s = self.sampling();
        BoundParams {
            samples: s.samples,
            max_centers: s.max_centers,
            min_pack: s.min_pack,
            grid_lo_frac: s.grid_lo_frac,
            grid_hi_frac: s.grid_hi_frac,
            grid_ratio: s.grid_ratio,
            seed: self.seed,
            eval: self.eval(),
        }
    }

    fn set(&self, name: &str) -> Result<&BoundedSet, Error> {
        self.instance.sets.get(name).ok_or_else(|| {
            Error::Instance(format!("unknown set '{name}' in {}", self.file.display()))
        })
    }

    fn operator(&self, name: &str) -> Result<&hilbert_mnc::ModuleOperator, Error> {
        self.instance.operators.get(name).ok_or_else(|| {
            Error::Instance(format!("unknown operator '{name}' in {}", self.file.display()))
        })
    }
}

#[derive(Serialize)]
struct ProfileOut {
    target: String,
    n_max: usize,
    profile: Vec<ProfileEntry>,
    estimate_lo: f64,
    estimate_hi: f64,
}

#[derive(Serialize)]
struct ProfileEntry {
    n: usize,
    lo: f64,
    hi: f64,
}

fn profile_out(target: &str, p: &TailProfile) -> ProfileOut {
    ProfileOut {
        target: target.to_string(),
        n_max: p.n_max(),
        profile: (0..=p.n_max())
            .map(|n| ProfileEntry { n, lo: p.value(n).lo, hi: p.value(n).hi })
            .collect(),
        estimate_lo: p.estimate().lo,
        estimate_hi: p.estimate().hi,
    }
}

fn print_profile(out: &ProfileOut, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(out).expect("serializable")),
        Format::Text => {
            println!("tail profile of '{}':", out.target);
            for e in &out.profile {
                println!("  n={:<3} lo={} hi={}", e.n, fmt_sig(e.lo), fmt_sig(e.hi));
            }
            println!("estimate: lo={} hi={}", fmt_sig(out.estimate_lo), fmt_sig(out.estimate_hi));
        }
    }
}

#[derive(Serialize)]
struct EstimateOut {
    target: String,
    measure: MeasureKind,
    star: bool,
    lower: f64,
    upper: f64,
    validity: Validity,
}

fn estimate_out(target: &str, est: &MncEstimate, star: bool) -> EstimateOut {
    EstimateOut {
        target: target.to_string(),
        measure: est.kind,
        star,
        lower: est.lower,
        upper: est.upper,
        validity: est.validity,
    }
}

fn print_estimate(out: &EstimateOut, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(out).expect("serializable")),
        Format::Text => {
            let v = match out.validity {
                Validity::Certified => "certified",
                Validity::Sampled => "sampled",
            };
            println!(
                "{}{:?} of '{}': lower={} upper={} [{}]",
                if out.star { "star " } else { "" },
                out.measure,
                out.target,
                fmt_sig(out.lower),
                fmt_sig(out.upper),
                v
            );
        }
    }
}

#[derive(Serialize)]
struct WitnessOut {
    target: String,
    eps: f64,
    delta: f64,
    c1: f64,
    c2: f64,
    cut_indices: Vec<usize>,
    separation: f64,
    separation_target: f64,
    points: Vec<VectorData>,
}

fn run(cli: Cli) -> Result<i32, (Error, String)> {
    // verify/report need no instance file
    match &cli.cmd {
        Cmd::Verify { suite } | Cmd::Report { suite, .. } => {
            let selection = Selection::from_str(suite).map_err(|e| (e, "verify".to_string()))?;
            let seed = cli
                .seed
                .or_else(|| std::env::var("HMNC_SEED").ok().and_then(|s| s.parse().ok()))
                .unwrap_or(7);
            let config = SuiteConfig { seed, ..SuiteConfig::default() };
            let report = run_suite(&config, selection).map_err(|e| (e, "verify".to_string()))?;
            match &cli.cmd {
                Cmd::Verify { .. } => match cli.format {
                    Format::Json => println!("{}", report.to_json()),
                    Format::Text => print!("{}", report.render_table()),
                },
                Cmd::Report { format, .. } => match format {
                    ReportFormat::Json => println!("{}", report.to_json()),
                    ReportFormat::Csv => print!("{}", report.to_csv()),
                },
                _ => unreachable!(),
            }
            return Ok(i32::from(!report.passed()));
        }
        _ => {}
    }

    let file = cli.file.clone().ok_or_else(|| {
        (Error::Instance("an instance file is required (--file <path>)".into()), "load".into())
    })?;
    let text = std::fs::read_to_string(&file).map_err(|e| {
        (Error::Instance(format!("cannot read {}: {e}", file.display())), "load".into())
    })?;
    let parsed = InstanceFile::from_json(&text).map_err(|e| (e, "load".into()))?;
    let instance = parsed.resolve().map_err(|e| (e, "load".into()))?;
    let seed = cli
        .seed
        .or(instance.seed)
        .or_else(|| std::env::var("HMNC_SEED").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(7);
    let ctx = Ctx { instance, seed, format: cli.format, file };

    match cli.cmd {
        Cmd::Lambda { set, nmax } => {
            let target = ctx.set(&set).map_err(|e| (e, format!("lambda {set}")))?;
            let n_max = nmax.unwrap_or(target.len().saturating_sub(1));
            let profile = lambda_profile(target, n_max, &ctx.eval())
                .map_err(|e| (e, format!("lambda {set}")))?;
            print_profile(&profile_out(&set, &profile), ctx.format);
            Ok(0)
        }
        Cmd::Bounds { set, measure, star, seminorms } => {
            let target = ctx.set(&set).map_err(|e| (e, format!("bounds {set}")))?;
            let kind = MeasureKind::from(measure);
            let est = if star {
                let params = StarParams {
                    bound: ctx.bound_params(),
                    seminorms: seminorms.unwrap_or(ctx.sampling().seminorms),
                    n_max: None,
                };
                star_aggregate(target, kind, &params).map_err(|e| (e, format!("bounds {set}")))?
            } else {
                // a single seed-derived semi-norm
                let mut rng = hilbert_mnc::rng::stream(ctx.seed, &[0x5e1f]);
                let p = random_seminorm(target.desc(), target.len(), &mut rng);
                seminorm_mnc_bounds(target, &p, kind, &ctx.bound_params())
                    .map_err(|e| (e, format!("bounds {set}")))?
            };
            print_estimate(&estimate_out(&set, &est, star), ctx.format);
            Ok(0)
        }
        Cmd::Opnorm { operator } => {
            let t = ctx.operator(&operator).map_err(|e| (e, format!("opnorm {operator}")))?;
            let norm = t.norm();
            match ctx.format {
                Format::Json => {
                    println!("{}", serde_json::json!({ "target": operator, "norm": norm }))
                }
                Format::Text => println!("operator norm of '{operator}': {}", fmt_sig(norm)),
            }
            Ok(0)
        }
        Cmd::Opmnc { operator, measure } => {
            let t = ctx.operator(&operator).map_err(|e| (e, format!("opmnc {operator}")))?;
            let params = StarParams {
                bound: ctx.bound_params(),
                seminorms: ctx.sampling().seminorms,
                n_max: None,
            };
            let result = op_mnc(t, OperatorMeasure::from(measure), &params)
                .map_err(|e| (e, format!("opmnc {operator}")))?;
            match result {
                OpMncResult::Profile(p) => print_profile(&profile_out(&operator, &p), ctx.format),
                OpMncResult::Estimate(est) => {
                    print_estimate(&estimate_out(&operator, &est, true), ctx.format)
                }
            }
            Ok(0)
        }
        Cmd::Witness { set, eps, twist, max_points } => {
            let target = ctx.set(&set).map_err(|e| (e, format!("witness {set}")))?;
            let s = ctx.sampling();
            let params = WitnessParams {
                max_points: max_points.unwrap_or(s.max_points),
                max_tries: s.max_tries,
                seed: ctx.seed,
                unitary_twist: twist,
                n_max: None,
                eval: ctx.eval(),
            };
            let w = discrete_witness(target, eps, &params)
                .map_err(|e| (e, format!("witness {set}")))?;
            let out = WitnessOut {
                target: set.clone(),
                eps,
                delta: w.trace.delta,
                c1: w.trace.c1,
                c2: w.trace.c2,
                cut_indices: w.trace.cut_indices.clone(),
                separation: w.separation,
                separation_target: w.target,
                points: w.points.iter().map(vector_to_data).collect(),
            };
            match ctx.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&out).expect("serializable"))
                }
                Format::Text => {
                    println!("witness for '{set}' (eps={}):", fmt_sig(eps));
                    println!("  points:     {}", out.points.len());
                    println!("  delta:      {}", fmt_sig(out.delta));
                    println!("  separation: {}", fmt_sig(out.separation));
                    println!("  target:     {}", fmt_sig(out.separation_target));
                    println!("  cuts:       {:?}", out.cut_indices);
                }
            }
            Ok(0)
        }
        Cmd::Verify { .. } | Cmd::Report { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed_echo = cli.seed;
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err((err, context)) => {
            eprintln!("error: {err}");
            let code = exit_code_for(&err);
            if code == 3 {
                let seed = seed_echo
                    .or_else(|| std::env::var("HMNC_SEED").ok().and_then(|s| s.parse().ok()))
                    .unwrap_or(7);
                eprintln!("replay: seed={seed} context={context}");
            }
            ExitCode::from(code)
        }
    }
}
