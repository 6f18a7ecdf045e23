//! Command-line front end. Lengths on the command line and in config files
//! are micrometers (1 µm = 1e-6 m); CSV output is SI.

pub mod config;
pub mod output;
pub mod validate;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::capacitance::Face;
use crate::error::Error;
use crate::model::{FeedbackMode, PlanarProfile, Variant};
use crate::oracles::{quad_capacitance, QuadratureSpec};
use crate::sweep::{self, ArcMode, SweepResult};
use crate::transduction::net_sensitivity;

use config::{ConfigError, RunConfig};
use output::{sci, write_gain_csv, write_sweep_csv, write_table, Chart, Series};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "curvedcomb",
    version,
    about = "Capacitance, gain and sensitivity of comb accelerometers with curved electrodes",
    after_help = "Lengths are in micrometers (1 µm = 1e-6 m); CSV output is SI.\n\
                  Exit codes: 0 ok, 1 usage, 2 domain or validation error, 3 verification failure."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Capacitance of a single electrode face.
    Capacitance(CapacitanceArgs),
    /// Output voltage against acceleration, one series per variant.
    GainCurve(CurveArgs),
    /// Sensitivity at rest against arc length, one series per variant.
    SensitivitySweep(SweepCmdArgs),
    /// Rank variants by sensitivity at the configured geometry.
    Compare(CurveArgs),
    /// Arc length that maximises sensitivity, per variant.
    Optimize(CurveArgs),
    /// Check closed forms against quadrature, finite differences and symmetry identities.
    Validate(ValidateArgs),
    /// Print the default configuration as JSON.
    PrintConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Convex,
    Concave,
    Flat,
}

#[derive(Debug, Default, Args)]
pub struct ModelArgs {
    /// JSON configuration; flags override its values.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Arc radius [µm].
    #[arg(long)]
    pub r_um: Option<f64>,
    /// Angular extent of the arc [rad].
    #[arg(long, conflicts_with = "arc_um")]
    pub phi: Option<f64>,
    /// Arc length [µm]; sets φ = arc/R.
    #[arg(long)]
    pub arc_um: Option<f64>,
    /// Electrode thickness [µm].
    #[arg(long)]
    pub h_um: Option<f64>,
    /// Nominal gap [µm].
    #[arg(long)]
    pub gap_um: Option<f64>,
    /// Proof mass [kg].
    #[arg(long)]
    pub m_kg: Option<f64>,
    /// Suspension stiffness [N/m].
    #[arg(long)]
    pub k: Option<f64>,
    /// Number of sense combs.
    #[arg(long)]
    pub combs: Option<u32>,
    /// Excitation amplitude [V].
    #[arg(long)]
    pub v_in: Option<f64>,
    /// Feedback capacitance: matched-sum or nominal.
    #[arg(long)]
    pub feedback: Option<FeedbackMode>,
    /// Permittivity [F/m].
    #[arg(long)]
    pub permittivity: Option<f64>,
}

#[derive(Debug, Default, Args)]
pub struct RangeArgs {
    /// Comma-separated variants, e.g. planar,biconvex.
    #[arg(long, value_delimiter = ',')]
    pub variants: Option<Vec<Variant>>,
    /// vary-phi-fixed-r or vary-r-fixed-arc.
    #[arg(long)]
    pub arc_mode: Option<ArcMode>,
    #[arg(long)]
    pub arc_min_um: Option<f64>,
    #[arg(long)]
    pub arc_max_um: Option<f64>,
    #[arg(long)]
    pub arc_points: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub accel_min_g: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub accel_max_g: Option<f64>,
    #[arg(long)]
    pub accel_points: Option<usize>,
}

#[derive(Debug, Default, Args)]
pub struct OutputArgs {
    /// CSV destination; standard output when neither this nor the config sets one.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// SVG chart destination.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CapacitanceArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Flat-face length [µm].
    #[arg(long)]
    pub b_um: Option<f64>,
    /// Also integrate numerically and compare.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub model: ModelArgs,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub range: RangeArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepCmdArgs {
    /// Add a finite-difference column and fail on disagreement.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub curve: CurveArgs,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Print the summary as JSON.
    #[arg(long)]
    pub json: bool,
    /// Perturb closed-form capacitances by this relative amount.
    #[arg(long, hide = true, default_missing_value = "1e-6", num_args = 0..=1)]
    pub inject_fault: Option<f64>,
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub range: RangeArgs,
}

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Verify(_) => EXIT_VERIFY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(m) | CliError::Verify(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(format!("i/o error: {e}"))
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        let color =
            std::env::var_os("CURVEDCOMB_NO_COLOR").is_none() && std::io::stdout().is_terminal();
        Self { color }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn bold(&self, text: &str) -> String {
        self.paint("1", text)
    }

    fn verdict(&self, passed: bool) -> String {
        if passed {
            self.paint("32", "PASS")
        } else {
            self.paint("31", "FAIL")
        }
    }
}

impl ModelArgs {
    fn apply(&self, cfg: &mut RunConfig) {
        let g = &mut cfg.geometry;
        if let Some(v) = self.r_um {
            g.r_um = v;
        }
        if let Some(v) = self.phi {
            g.phi_rad = Some(v);
            g.arc_um = None;
        }
        if let Some(v) = self.arc_um {
            g.arc_um = Some(v);
            g.phi_rad = None;
        }
        if let Some(v) = self.h_um {
            g.h_um = v;
        }
        if let Some(v) = self.gap_um {
            cfg.gap_um = v;
        }
        if let Some(v) = self.m_kg {
            cfg.mech.m_kg = v;
        }
        if let Some(v) = self.k {
            cfg.mech.k_n_per_m = v;
        }
        if let Some(v) = self.combs {
            cfg.mech.combs = v;
        }
        if let Some(v) = self.v_in {
            cfg.drive.v_in_v = v;
        }
        if let Some(v) = self.feedback {
            cfg.drive.feedback_mode = v;
        }
        if let Some(v) = self.permittivity {
            cfg.drive.permittivity = v;
        }
    }

    /// Defaults, then the config file, then flags.
    fn resolve(
        &self,
        range: Option<&RangeArgs>,
        output: Option<&OutputArgs>,
    ) -> CliResult<RunConfig> {
        let mut cfg = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        self.apply(&mut cfg);
        if let Some(r) = range {
            r.apply(&mut cfg);
        }
        if let Some(o) = output {
            if o.out.is_some() {
                cfg.output.csv = o.out.clone();
            }
            if o.svg.is_some() {
                cfg.output.svg = o.svg.clone();
            }
        }
        Ok(cfg)
    }
}

impl RangeArgs {
    fn apply(&self, cfg: &mut RunConfig) {
        let s = &mut cfg.sweep;
        if let Some(v) = &self.variants {
            s.variants = v.clone();
        }
        if let Some(v) = self.arc_mode {
            s.arc_mode = v;
        }
        let pairs = [
            (self.arc_min_um, &mut s.arc_um.min),
            (self.arc_max_um, &mut s.arc_um.max),
            (self.accel_min_g, &mut s.accel_g.min),
            (self.accel_max_g, &mut s.accel_g.max),
        ];
        for (flag, slot) in pairs {
            if let Some(v) = flag {
                *slot = v;
            }
        }
        if let Some(n) = self.arc_points {
            s.arc_um.points = n;
        }
        if let Some(n) = self.accel_points {
            s.accel_g.points = n;
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let style = Style::detect();
    match command {
        Command::Capacitance(a) => cmd_capacitance(a, out, &style),
        Command::GainCurve(a) => cmd_gain_curve(a, out, err, &style),
        Command::SensitivitySweep(a) => cmd_sensitivity_sweep(a, out, err, &style),
        Command::Compare(a) => cmd_compare(a, out, err, &style),
        Command::Optimize(a) => cmd_optimize(a, out, &style),
        Command::Validate(a) => cmd_validate(a, out, &style),
        Command::PrintConfig => {
            writeln!(out, "{}", RunConfig::default().to_json_pretty())?;
            Ok(())
        }
    }
}

fn cmd_capacitance(args: &CapacitanceArgs, out: &mut dyn Write, style: &Style) -> CliResult {
    let mut cfg = args.model.resolve(None, None)?;
    if let Some(b) = args.b_um {
        cfg.geometry.b_um = Some(b);
    }
    let h = config::um(cfg.geometry.h_um);
    let face = match args.kind {
        KindArg::Convex => Face::Convex(cfg.profile()?),
        KindArg::Concave => Face::Concave(cfg.profile()?),
        KindArg::Flat => {
            let b = match cfg.geometry.b_um {
                Some(b) => config::um(b),
                None => cfg.profile()?.arc_length(),
            };
            Face::Flat(PlanarProfile::new(b, h)?)
        }
    };
    let (gap, eps) = (cfg.gap_m(), cfg.drive.permittivity);
    let c = face.capacitance(gap, eps)?;
    writeln!(out, "{:<12}{:?}", "face", face.kind())?;
    writeln!(out, "{:<12}{} m", "gap", sci(gap))?;
    writeln!(out, "{:<12}{} F", style.bold("C"), sci(c))?;
    if args.verify {
        let q = quad_capacitance(&face, gap, eps, &QuadratureSpec::default())?;
        let rel = ((c - q.value) / q.value).abs();
        let passed = rel < validate::QUADRATURE_TOL;
        writeln!(out, "{:<12}{} F", "quadrature", sci(q.value))?;
        writeln!(
            out,
            "{:<12}{rel:.3e} (tolerance {:e}) {}",
            "rel error",
            validate::QUADRATURE_TOL,
            style.verdict(passed)
        )?;
        if !passed {
            return Err(CliError::Verify(format!(
                "closed form and quadrature differ by {rel:e} relative"
            )));
        }
    }
    Ok(())
}

/// CSV goes to the configured file, or to `out` when none is set.
fn emit_csv(
    path: Option<&Path>,
    out: &mut dyn Write,
    write: impl FnOnce(&mut dyn Write) -> std::io::Result<()>,
) -> CliResult<bool> {
    match path {
        Some(p) => {
            let mut file = BufWriter::new(
                File::create(p).map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?,
            );
            write(&mut file)?;
            file.flush()?;
            Ok(true)
        }
        None => {
            write(out)?;
            Ok(false)
        }
    }
}

fn emit_svg(path: Option<&Path>, chart: impl FnOnce() -> Chart<'static>) -> CliResult {
    if let Some(p) = path {
        std::fs::write(p, output::render_svg(&chart()))
            .map_err(|e| CliError::Domain(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn report_skipped(result: &SweepResult, err: &mut dyn Write) -> std::io::Result<()> {
    for s in &result.metadata.skipped {
        writeln!(
            err,
            "warning: skipped {} at arc {:e} m, {} g: {}",
            s.variant, s.arc_length_m, s.accel_g, s.reason
        )?;
    }
    Ok(())
}

fn series_by_variant(
    result: &SweepResult,
    point: impl Fn(&sweep::SweepRow) -> (f64, f64),
) -> Vec<Series> {
    let mut variants: Vec<Variant> = result.rows.iter().map(|r| r.variant).collect();
    variants.dedup();
    variants
        .into_iter()
        .map(|v| Series {
            name: v.to_string(),
            points: result.rows_for(v).map(&point).collect(),
        })
        .collect()
}

fn cmd_gain_curve(
    args: &CurveArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
    style: &Style,
) -> CliResult {
    let cfg = args.model.resolve(Some(&args.range), Some(&args.output))?;
    let result = sweep::gain_curve(&cfg.plan()?)?;
    report_skipped(&result, err)?;
    let to_file = emit_csv(cfg.output.csv.as_deref(), out, |w| {
        write_gain_csv(w, &result)
    })?;
    emit_svg(cfg.output.svg.as_deref(), || Chart {
        title: "Output voltage vs acceleration",
        x_label: "acceleration [g]",
        y_label: "V_out [V]",
        series: series_by_variant(&result, |r| (r.accel_g, r.v_out_v)),
    })?;
    if to_file {
        writeln!(
            out,
            "{:<18}{:>26}{:>26}",
            style.bold("variant"),
            "lsq slope [mV/g]",
            "S at rest [mV/g]"
        )?;
        for f in &result.metadata.fits {
            writeln!(
                out,
                "{:<18}{:>26}{:>26}",
                f.variant,
                sci(f.slope_mv_per_g),
                sci(f.sensitivity_at_rest_mv_per_g)
            )?;
        }
    }
    Ok(())
}

fn cmd_sensitivity_sweep(
    args: &SweepCmdArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
    _style: &Style,
) -> CliResult {
    let a = &args.curve;
    let cfg = a.model.resolve(Some(&a.range), Some(&a.output))?;
    let plan = cfg.plan()?;
    let mut result = sweep::sensitivity_sweep(&plan)?;
    report_skipped(&result, err)?;
    let mut worst: Option<(f64, String)> = None;
    if args.verify {
        sweep::attach_fd_sensitivity(&plan, &mut result)?;
        for r in &result.rows {
            let fd = r.fd_s_mv_per_g.unwrap_or(f64::NAN);
            let rel = ((r.s_mv_per_g - fd) / fd).abs();
            let rel = if rel.is_nan() { f64::INFINITY } else { rel };
            if worst.as_ref().is_none_or(|w| rel > w.0) {
                worst = Some((rel, format!("{} at arc {:e} m", r.variant, r.arc_length_m)));
            }
        }
    }
    emit_csv(cfg.output.csv.as_deref(), out, |w| {
        write_sweep_csv(w, &result)
    })?;
    emit_svg(cfg.output.svg.as_deref(), || Chart {
        title: "Sensitivity vs arc length",
        x_label: "arc length [µm]",
        y_label: "S [mV/g]",
        series: series_by_variant(&result, |r| (r.arc_length_m * 1e6, r.s_mv_per_g)),
    })?;
    if let Some((rel, case)) = worst {
        if rel >= validate::DERIVATIVE_TOL {
            return Err(CliError::Verify(format!(
                "analytic and finite-difference sensitivity differ by {rel:e} relative ({case})"
            )));
        }
    }
    Ok(())
}

fn cmd_compare(
    args: &CurveArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
    style: &Style,
) -> CliResult {
    let cfg = args.model.resolve(Some(&args.range), Some(&args.output))?;
    let plan = cfg.plan()?;
    let curves = sweep::gain_curve(&plan)?;
    report_skipped(&curves, err)?;
    let mut ranked: Vec<_> = curves.metadata.fits.clone();
    ranked.sort_by(|a, b| {
        b.sensitivity_at_rest_mv_per_g
            .total_cmp(&a.sensitivity_at_rest_mv_per_g)
            .then(a.variant.cmp(&b.variant))
    });
    let combs = plan.shared.mech.comb_count() as f64;
    let profile = plan.shared.base_profile;
    writeln!(
        out,
        "R = {:e} m, phi = {} rad, arc = {:e} m, gap = {:e} m",
        profile.radius_m(),
        profile.angular_extent_rad(),
        profile.arc_length(),
        plan.shared.gap_m
    )?;
    writeln!(
        out,
        "{:<6}{:<18}{:>26}{:>26}{:>26}",
        style.bold("rank"),
        "variant",
        "S [mV/g]",
        "S_net [mV/g]",
        "lsq slope [mV/g]"
    )?;
    let mut rows = Vec::new();
    for (i, f) in ranked.iter().enumerate() {
        let s = f.sensitivity_at_rest_mv_per_g;
        writeln!(
            out,
            "{:<6}{:<18}{:>26}{:>26}{:>26}",
            i + 1,
            f.variant,
            sci(s),
            sci(s * combs),
            sci(f.slope_mv_per_g)
        )?;
        rows.push(vec![
            (i + 1).to_string(),
            f.variant.to_string(),
            sci(s),
            sci(s * combs),
            sci(f.slope_mv_per_g),
        ]);
    }
    if let Some(p) = cfg.output.csv.as_deref() {
        let header = [
            "rank",
            "variant",
            "s_mv_per_g",
            "s_net_mv_per_g",
            "lsq_slope_mv_per_g",
        ];
        emit_csv(Some(p), out, |w| write_table(w, &header, &rows))?;
    }
    Ok(())
}

fn cmd_optimize(args: &CurveArgs, out: &mut dyn Write, style: &Style) -> CliResult {
    let cfg = args.model.resolve(Some(&args.range), Some(&args.output))?;
    let plan = cfg.plan()?;
    let bounds = (plan.arc_range_m.min, plan.arc_range_m.max);
    let mut variants = plan.variants.clone();
    variants.sort();
    variants.dedup();
    writeln!(
        out,
        "{:<18}{:>26}{:>26}{:>10}",
        style.bold("variant"),
        "arc [m]",
        "S [mV/g]",
        "where"
    )?;
    let mut rows = Vec::new();
    for v in variants {
        let opt = match sweep::maximize_sensitivity(v, bounds, &plan.shared) {
            Ok(o) => o,
            Err(e) => {
                writeln!(out, "{:<18}{e}", v)?;
                continue;
            }
        };
        let place = if opt.arc_length_m == bounds.0 {
            "lower"
        } else if opt.arc_length_m == bounds.1 {
            "upper"
        } else {
            "interior"
        };
        let s = opt.sensitivity.mv_per_g();
        writeln!(
            out,
            "{:<18}{:>26}{:>26}{:>10}",
            v,
            sci(opt.arc_length_m),
            sci(s),
            place
        )?;
        rows.push(vec![
            v.to_string(),
            sci(opt.arc_length_m),
            sci(opt.radius_m),
            sci(opt.phi_rad),
            sci(s),
            sci(net_sensitivity(opt.sensitivity, &plan.shared.mech).mv_per_g()),
            place.to_string(),
        ]);
    }
    if let Some(p) = cfg.output.csv.as_deref() {
        let header = [
            "variant",
            "arc_length_m",
            "radius_m",
            "phi_rad",
            "s_mv_per_g",
            "s_net_mv_per_g",
            "location",
        ];
        emit_csv(Some(p), out, |w| write_table(w, &header, &rows))?;
    }
    Ok(())
}

fn cmd_validate(args: &ValidateArgs, out: &mut dyn Write, style: &Style) -> CliResult {
    let cfg = args.model.resolve(Some(&args.range), None)?;
    let shared = cfg.shared()?;
    let accel = (cfg.sweep.accel_g.min, cfg.sweep.accel_g.max);
    let report = validate::run_suite(
        &shared,
        &cfg.sweep.variants,
        accel,
        args.inject_fault.unwrap_or(0.0),
    )?;
    if args.json {
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        )?;
    } else {
        writeln!(
            out,
            "{:<24}{:>7}{:>14}{:>12}  result",
            style.bold("suite"),
            "cases",
            "max rel err",
            "tolerance",
        )?;
        for s in &report.suites {
            writeln!(
                out,
                "{:<24}{:>7}{:>14.3e}{:>12.0e}  {}",
                s.name,
                s.cases,
                s.max_rel_error,
                s.tolerance,
                style.verdict(s.passed)
            )?;
            if !s.passed {
                writeln!(out, "  worst case: {}", s.worst_case)?;
            }
        }
    }
    if report.passed {
        Ok(())
    } else {
        let failed: Vec<&str> = report
            .suites
            .iter()
            .filter(|s| !s.passed)
            .map(|s| s.name)
            .collect();
        Err(CliError::Verify(format!(
            "failed suites: {}",
            failed.join(", ")
        )))
    }
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(args, &mut out, &mut stderr.lock());
    let _ = out.flush();
    code
}
