mod input;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cubic_iso::report::IntervalRecord;
use cubic_iso::sweep::{Anomaly, PhysicalStatus, Sample, VerificationSummary};
use cubic_iso::{
    analyze, sweep_with, AffineFamily, Analysis, Boundary, BoundsMode, CubicReport, Execution,
    HarnessMode, IsolateOptions, SweepConfig, SweepReport, Tolerance,
};

use input::{Input, SweepSettings};

#[derive(Parser, Debug)]
#[command(name = "cubic-iso", version, about = "Closed-form real-root isolation for cubic equations")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Relative comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol_rel: f64,
    /// Absolute tolerance floor.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol_abs: f64,
    /// Root-harness refinement of three-root intervals.
    #[arg(long, global = true, value_enum, default_value_t = HarnessArg::Min)]
    harness: HarnessArg,
    /// Source of the outer bounds B_L, B_U.
    #[arg(long, global = true, value_enum, default_value_t = BoundsArg::Figure)]
    bounds: BoundsArg,
    /// Process batches and sweeps on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HarnessArg {
    Min,
    Off,
    Demo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundsArg {
    Figure,
    Generic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regime, figure case, root count and sign pattern.
    Classify(CubicArgs),
    /// Isolation intervals with endpoint provenance.
    Isolate(CubicArgs),
    /// Isolate and check every claim against the Sturm oracle.
    Verify(CubicArgs),
    /// Sweep an affine one-parameter family and locate classification boundaries.
    Sweep(SweepArgs),
    /// Rayleigh-wave sweep with admissibility annotation and two worked cases.
    DemoRayleigh(DemoArgs),
}

#[derive(Args, Debug)]
struct CubicArgs {
    /// Read one cubic per line from this file.
    #[arg(long, conflicts_with = "coefficients")]
    batch: Option<PathBuf>,
    /// `a b c` of x³ + ax² + bx + c, or `A B C D` of Ax³ + Bx² + Cx + D.
    #[arg(allow_hyphen_values = true, num_args = 0..)]
    coefficients: Vec<String>,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// `key = value` file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Use the Rayleigh family x³ − 8x² + 8(3 − 2q)x − 16(1 − q).
    #[arg(long)]
    rayleigh: bool,
    /// `a0,a1` for a(t) = a0 + a1·t.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_lo: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    t_hi: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    /// Bracket width at which boundary bisection stops.
    #[arg(long)]
    refine_tol: Option<f64>,
    /// Annotate intervals with Rayleigh admissibility (t read as q).
    #[arg(long)]
    physical: bool,
    /// Write a CSV series (t, endpoints, roots) to this path.
    #[arg(long)]
    series: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DemoArgs {
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Write a CSV series (t, endpoints, roots) to this path.
    #[arg(long)]
    series: Option<PathBuf>,
}

/// Input problems map to exit code 2, failed verification to 1.
enum Outcome {
    Ok,
    Failed,
}

struct Ctx {
    json: bool,
    tol: Tolerance,
    opts: IsolateOptions,
    exec: Execution,
}

#[derive(Clone, Copy, PartialEq)]
enum Mode {
    Classify,
    Isolate,
    Verify,
}

fn print_json<T: Serialize>(doc: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(doc)?);
    Ok(())
}

fn render(mode: Mode, rep: &CubicReport, a: &Analysis) -> String {
    match mode {
        Mode::Classify => render::classification(rep),
        Mode::Isolate => render::isolation(rep),
        Mode::Verify => render::verification(rep, &a.verification),
    }
}

fn inputs(args: &CubicArgs) -> Result<Vec<Input>> {
    match &args.batch {
        Some(path) => input::batch_file(path),
        None if args.coefficients.is_empty() => bail!("no coefficients given (use `-- a b c` or --batch FILE)"),
        None => Ok(vec![input::coefficients(&args.coefficients)?]),
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum BatchItem {
    Report(Box<CubicReport>),
    Error { index: usize, error: String },
}

fn cmd_cubic(ctx: &Ctx, mode: Mode, args: &CubicArgs) -> Result<Outcome> {
    let items = inputs(args)?;
    let single = args.batch.is_none();
    let results = ctx.exec.map(&items, |i| analyze(&i.cubic, &ctx.tol, ctx.opts));
    let mut failed = false;
    let mut docs = Vec::with_capacity(items.len());
    let mut text = String::new();
    for (idx, (inp, res)) in items.iter().zip(results).enumerate() {
        match res {
            Ok(a) => {
                failed |= mode == Mode::Verify && !a.verification.pass;
                let rep = CubicReport::new(&a, inp.general, mode == Mode::Verify);
                if !single {
                    text.push_str(&format!("== cubic {} ==\n", idx + 1));
                }
                text.push_str(&render(mode, &rep, &a));
                docs.push(BatchItem::Report(Box::new(rep)));
            }
            Err(e) => {
                failed = true;
                text.push_str(&format!("== cubic {} ==\nerror       {e}\n", idx + 1));
                docs.push(BatchItem::Error {
                    index: idx,
                    error: e.to_string(),
                });
            }
        }
    }
    if ctx.json {
        match (single, docs.pop()) {
            (true, Some(doc)) => print_json(&doc)?,
            (_, last) => {
                docs.extend(last);
                print_json(&docs)?
            }
        }
    } else {
        print!("{text}");
    }
    Ok(if failed { Outcome::Failed } else { Outcome::Ok })
}

#[derive(Serialize)]
struct SampleDoc {
    t: f64,
    a: f64,
    b: f64,
    c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    figure: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<String>,
    intervals: Vec<IntervalRecord>,
    roots: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    physical: Option<Vec<PhysicalStatus>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    config: &'a SweepConfig,
    boundaries: &'a [Boundary],
    anomalies: &'a [Anomaly],
    verification: VerificationSummary,
    samples: Vec<SampleDoc>,
}

fn sample_doc(s: &Sample) -> SampleDoc {
    let rep = s.analysis.as_ref().map(|a| CubicReport::new(a, None, false));
    SampleDoc {
        t: s.t,
        a: s.cubic.a,
        b: s.cubic.b,
        c: s.cubic.c,
        figure: s.signature.as_ref().map(|g| g.figure),
        case: s.signature.as_ref().map(|g| g.case),
        count: s.signature.as_ref().map(|g| g.count.clone()),
        intervals: rep.map(|r| r.intervals).unwrap_or_default(),
        roots: s.analysis.as_ref().map(|a| a.verification.roots.values()).unwrap_or_default(),
        physical: s.physical.clone(),
        verified: s.analysis.as_ref().map(|a| a.verification.pass),
        error: s.error.clone(),
    }
}

fn sweep_doc(rep: &SweepReport) -> SweepDoc<'_> {
    SweepDoc {
        config: &rep.config,
        boundaries: &rep.boundaries,
        anomalies: &rep.anomalies,
        verification: rep.verification,
        samples: rep.samples.iter().map(sample_doc).collect(),
    }
}

#[derive(Serialize)]
struct SeriesRow<'a> {
    t: f64,
    figure: u8,
    case: usize,
    count: &'a str,
    interval: usize,
    lo: f64,
    hi: f64,
    lo_closed: bool,
    hi_closed: bool,
    lo_tag: String,
    hi_tag: String,
    root: Option<f64>,
    physical: Option<&'static str>,
}

fn physical_label(s: &PhysicalStatus) -> &'static str {
    match s {
        PhysicalStatus::Physical => "physical",
        PhysicalStatus::Unphysical => "unphysical",
        PhysicalStatus::Ambiguous { resolved: Some(true) } => "ambiguous_physical",
        PhysicalStatus::Ambiguous { resolved: Some(false) } => "ambiguous_unphysical",
        PhysicalStatus::Ambiguous { resolved: None } => "ambiguous",
    }
}

fn write_series(path: &Path, rep: &SweepReport) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for s in &rep.samples {
        let (Some(a), Some(sig)) = (&s.analysis, &s.signature) else {
            continue;
        };
        let roots = a.verification.roots.values();
        for (i, iv) in a.isolation.intervals.iter().enumerate() {
            let root = roots.iter().copied().find(|&r| iv.contains(r, 1e-9 * r.abs().max(1.0)));
            w.serialize(SeriesRow {
                t: s.t,
                figure: sig.figure,
                case: sig.case,
                count: &sig.count,
                interval: i + 1,
                lo: iv.lo.value,
                hi: iv.hi.value,
                lo_closed: iv.lo.closed,
                hi_closed: iv.hi.closed,
                lo_tag: iv.lo.tag.to_string(),
                hi_tag: iv.hi.tag.to_string(),
                root,
                physical: s.physical.as_ref().and_then(|p| p.get(i)).map(physical_label),
            })?;
        }
    }
    w.flush()?;
    Ok(())
}

fn settings_from_flags(args: &SweepArgs, base: &SweepSettings) -> Result<SweepSettings> {
    let mut family = if args.rayleigh { Some(AffineFamily::RAYLEIGH) } else { None };
    if args.a.is_some() || args.b.is_some() || args.c.is_some() {
        let start = family.or(base.family).unwrap_or(AffineFamily {
            a: [0.0; 2],
            b: [0.0; 2],
            c: [0.0; 2],
        });
        let pick = |s: &Option<String>, d: [f64; 2]| s.as_deref().map_or(Ok(d), input::pair);
        family = Some(AffineFamily {
            a: pick(&args.a, start.a).context("--a")?,
            b: pick(&args.b, start.b).context("--b")?,
            c: pick(&args.c, start.c).context("--c")?,
        });
    }
    Ok(SweepSettings {
        family,
        t_lo: args.t_lo,
        t_hi: args.t_hi,
        samples: args.samples,
        refine_tol: args.refine_tol,
        physical: args.physical.then_some(true),
    })
}

fn run_sweep(ctx: &Ctx, s: SweepSettings, series: Option<&Path>) -> Result<SweepReport> {
    let Some(family) = s.family else {
        bail!("no coefficient family (use --rayleigh, --a/--b/--c or a config file)");
    };
    let physical = s.physical.unwrap_or(false);
    if physical && family != AffineFamily::RAYLEIGH {
        bail!("--physical applies to the Rayleigh family only");
    }
    let mut cfg = SweepConfig::new(
        family,
        s.t_lo.unwrap_or(0.0),
        s.t_hi.unwrap_or(1.0),
        s.samples.unwrap_or(200),
    );
    if let Some(r) = s.refine_tol {
        cfg.refine_tol = r;
    }
    cfg.tolerance = ctx.tol;
    cfg.options = ctx.opts;
    let rep = sweep_with(&cfg, ctx.exec, physical)?;
    if let Some(path) = series {
        write_series(path, &rep)?;
    }
    Ok(rep)
}

fn sweep_outcome(rep: &SweepReport) -> Outcome {
    let v = &rep.verification;
    if v.errors == 0 && v.passed == v.checked {
        Outcome::Ok
    } else {
        Outcome::Failed
    }
}

fn cmd_sweep(ctx: &Ctx, args: &SweepArgs) -> Result<Outcome> {
    let file = match &args.config {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            input::sweep_config(&text).with_context(|| p.display().to_string())?
        }
        None => SweepSettings::default(),
    };
    let flags = settings_from_flags(args, &file)?;
    let rep = run_sweep(ctx, file.overlay(flags), args.series.as_deref())?;
    if ctx.json {
        print_json(&sweep_doc(&rep))?;
    } else {
        print!("{}", render::sweep(&rep));
    }
    Ok(sweep_outcome(&rep))
}

#[derive(Serialize)]
struct DemoDoc<'a> {
    sweep: SweepDoc<'a>,
    examples: Vec<CubicReport>,
}

fn cmd_demo(ctx: &Ctx, args: &DemoArgs) -> Result<Outcome> {
    let settings = SweepSettings {
        family: Some(AffineFamily::RAYLEIGH),
        t_lo: Some(0.0),
        t_hi: Some(0.75),
        samples: Some(args.samples),
        refine_tol: None,
        physical: Some(true),
    };
    let rep = run_sweep(ctx, settings, args.series.as_deref())?;
    let mut failed = matches!(sweep_outcome(&rep), Outcome::Failed);
    let mut examples = Vec::new();
    let mut text = render::sweep(&rep);
    for q in [0.1, 0.65] {
        let cubic = AffineFamily::RAYLEIGH.at(q)?;
        let a = analyze(&cubic, &ctx.tol, ctx.opts)?;
        failed |= !a.verification.pass;
        let r = CubicReport::new(&a, None, true);
        text.push_str(&format!("\n== q = {q} ==\n"));
        text.push_str(&render::verification(&r, &a.verification));
        examples.push(r);
    }
    if ctx.json {
        print_json(&DemoDoc {
            sweep: sweep_doc(&rep),
            examples,
        })?;
    } else {
        print!("{text}");
    }
    Ok(if failed { Outcome::Failed } else { Outcome::Ok })
}

fn run(cli: Cli) -> Result<Outcome> {
    let c = &cli.common;
    let tol = Tolerance::new(c.tol_rel, c.tol_abs)?;
    let opts = IsolateOptions {
        harness: match c.harness {
            HarnessArg::Min => HarnessMode::Min,
            HarnessArg::Off => HarnessMode::Off,
            HarnessArg::Demo => HarnessMode::Demo,
        },
        bounds: match c.bounds {
            BoundsArg::Figure => BoundsMode::Figure,
            BoundsArg::Generic => BoundsMode::Generic,
        },
    };
    let exec = if c.sequential { Execution::Sequential } else { Execution::default() };
    let ctx = Ctx {
        json: c.json,
        tol,
        opts,
        exec,
    };
    match &cli.command {
        Command::Classify(a) => cmd_cubic(&ctx, Mode::Classify, a),
        Command::Isolate(a) => cmd_cubic(&ctx, Mode::Isolate, a),
        Command::Verify(a) => cmd_cubic(&ctx, Mode::Verify, a),
        Command::Sweep(a) => cmd_sweep(&ctx, a),
        Command::DemoRayleigh(a) => cmd_demo(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
