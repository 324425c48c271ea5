//! `selfaffine` — classify, probe, and draw planar self-affine sets
//! `T(A, Dv)` for expanding integer quadratics `x² + bx + c`.
//!
//! Exit codes: 0 success (a Disconnected verdict is a success), 2 invalid
//! or non-expanding parameters, 3 resource cap exceeded, 4 I/O failure.

use clap::{Args, Parser, Subcommand};
use selfaffine::algebra::{LatticePoint, Quadratic};
use selfaffine::criteria::{
    classify_consecutive, classify_nonconsecutive, conjecture_verdict, CollinearDigitSet,
    CriteriaError, Status, Verdict,
};
use selfaffine::neighbors::{hata_connected, state_box, survivor_set, OracleError};
use selfaffine::render::{
    rasterize, write_image, PanelSpec, RasterConfig, RenderError, FIGURE_PANELS,
};
use selfaffine::series::SeriesError;
use selfaffine::sweep::{theorem_oracle_sweep, SweepRange, CSV_HEADER};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "selfaffine",
    version,
    about = "Connectedness analysis and rendering for planar self-affine sets \
             with collinear digit sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify T(A, {0,...,m}v) by the proven criteria
    Classify(ClassifyArgs),
    /// Classify the gap family f(x) = (x-p)(x-q), D = {0,...,|pq|-2, |pq|-1+s}
    ClassifyGap(ClassifyGapArgs),
    /// Exact lattice oracle: translate membership or connectedness
    Oracle(OracleArgs),
    /// List all surviving lattice translates, one "gamma delta" per line
    Neighbors(NeighborsArgs),
    /// Rasterize the attractor to a PGM image
    Render(RenderArgs),
    /// Write all 18 figure panels plus a manifest line per panel
    Figures(FiguresArgs),
    /// Theorem-oracle agreement sweep as CSV on standard output
    Sweep(SweepArgs),
}

/// Digit set given either as an explicit list or as {0,...,m}.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct DigitSpec {
    /// Comma-separated digit list, e.g. "0,1,2,5"
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    digits: Option<Vec<i64>>,
    /// Consecutive digits {0, 1, ..., m}
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
}

impl DigitSpec {
    fn digit_set(&self) -> Result<CollinearDigitSet, AppError> {
        match (&self.digits, self.m) {
            (Some(list), None) => Ok(CollinearDigitSet::from_digits(list)?),
            (None, Some(m)) => Ok(CollinearDigitSet::consecutive(m)?),
            _ => unreachable!("clap enforces exactly one of --digits/--m"),
        }
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Also report the conjectured verdict when no theorem applies
    #[arg(long)]
    conjecture: bool,
}

#[derive(Args)]
struct ClassifyGapArgs {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    #[arg(long, allow_negative_numbers = true)]
    s: i64,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[command(flatten)]
    digits: DigitSpec,
    /// Translate to test: gamma coordinate (requires --delta)
    #[arg(
        long,
        allow_negative_numbers = true,
        requires = "delta",
        conflicts_with = "connected"
    )]
    gamma: Option<i64>,
    /// Translate to test: delta coordinate (requires --gamma)
    #[arg(
        long,
        allow_negative_numbers = true,
        requires = "gamma",
        conflicts_with = "connected"
    )]
    delta: Option<i64>,
    /// Decide connectedness of T via the digit contact graph
    #[arg(long)]
    connected: bool,
}

#[derive(Args)]
struct NeighborsArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[command(flatten)]
    digits: DigitSpec,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, allow_negative_numbers = true)]
    b: i64,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
    #[command(flatten)]
    digits: DigitSpec,
    /// Image side length in pixels
    #[arg(long, default_value_t = 512)]
    size: usize,
    /// Expansion depth (default: auto — one cell per pixel, capped)
    #[arg(long)]
    depth: Option<usize>,
    /// Output path for the PGM image
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct FiguresArgs {
    /// Directory receiving fig1a.pgm ... fig9b.pgm
    #[arg(long)]
    outdir: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, allow_negative_numbers = true)]
    b_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    b_max: i64,
    #[arg(long, allow_negative_numbers = true)]
    c_min: i64,
    #[arg(long, allow_negative_numbers = true)]
    c_max: i64,
    /// Clamp tested m values from above
    #[arg(long)]
    m_max: Option<i64>,
}

/// Failure cases mapped to the documented exit codes.
enum AppError {
    Invalid(String),
    Resource(String),
    Io(String),
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Invalid(_) => 2,
            AppError::Resource(_) => 3,
            AppError::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Invalid(m) | AppError::Resource(m) | AppError::Io(m) => m,
        }
    }
}

impl From<CriteriaError> for AppError {
    fn from(e: CriteriaError) -> Self {
        AppError::Invalid(e.to_string())
    }
}

impl From<SeriesError> for AppError {
    fn from(e: SeriesError) -> Self {
        AppError::Invalid(e.to_string())
    }
}

impl From<OracleError> for AppError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::StateBoxTooLarge { .. } => AppError::Resource(e.to_string()),
            _ => AppError::Invalid(e.to_string()),
        }
    }
}

impl From<RenderError> for AppError {
    fn from(e: RenderError) -> Self {
        match e {
            RenderError::PointCapExceeded { .. } => AppError::Resource(e.to_string()),
            RenderError::Io { .. } => AppError::Io(e.to_string()),
            _ => AppError::Invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Classify(args) => classify(args),
        Command::ClassifyGap(args) => classify_gap(args),
        Command::Oracle(args) => oracle(args),
        Command::Neighbors(args) => neighbors(args),
        Command::Render(args) => render(args),
        Command::Figures(args) => figures(args),
        Command::Sweep(args) => sweep(args),
    }
}

fn print_verdict(v: &Verdict) {
    match v.status {
        Status::Unknown => {
            println!("Unknown (no theorem applies; see --conjecture or oracle)");
        }
        _ => println!(
            "{} ({}, threshold {})",
            v.status,
            v.source,
            v.threshold.expect("decided verdicts carry their threshold")
        ),
    }
}

fn classify(args: ClassifyArgs) -> Result<(), AppError> {
    let quad = Quadratic::new(args.b, args.c);
    let verdict = classify_consecutive(quad, args.m)?;
    print_verdict(&verdict);
    if verdict.status == Status::Unknown && args.conjecture {
        let cv = conjecture_verdict(quad, args.m)?;
        println!(
            "{} (conjectured threshold {}; unproven)",
            cv.status,
            cv.threshold.expect("conjecture always has a threshold")
        );
    }
    Ok(())
}

fn classify_gap(args: ClassifyGapArgs) -> Result<(), AppError> {
    let verdict = classify_nonconsecutive(args.p, args.q, args.s)?;
    print_verdict(&verdict);
    Ok(())
}

fn oracle(args: OracleArgs) -> Result<(), AppError> {
    if !args.connected && args.gamma.is_none() {
        return Err(AppError::Invalid(
            "pass either --gamma G --delta D or --connected".into(),
        ));
    }
    let quad = Quadratic::new(args.b, args.c);
    let digits = args.digits.digit_set()?;
    let diffs = digits.difference_set();
    let sbox = state_box(quad, &diffs)?;
    let survivors = survivor_set(quad, &diffs)?;
    println!(
        "state box: |gamma| <= {}, |delta| <= {}",
        sbox.gamma_max, sbox.delta_max
    );
    println!("survivors: {}", survivors.len());
    if args.connected {
        let connected = hata_connected(quad, digits.digits())?;
        println!("connected: {connected}");
    } else {
        let l = LatticePoint {
            gamma: args.gamma.expect("checked above"),
            delta: args.delta.expect("clap ties --delta to --gamma"),
        };
        println!(
            "member (gamma={}, delta={}): {}",
            l.gamma,
            l.delta,
            survivors.contains(l)
        );
    }
    Ok(())
}

fn neighbors(args: NeighborsArgs) -> Result<(), AppError> {
    let quad = Quadratic::new(args.b, args.c);
    let digits = args.digits.digit_set()?;
    let survivors = survivor_set(quad, &digits.difference_set())?;
    let mut points = survivors.points().to_vec();
    points.sort();
    for p in points {
        println!("{} {}", p.gamma, p.delta);
    }
    Ok(())
}

fn render(args: RenderArgs) -> Result<(), AppError> {
    let quad = Quadratic::new(args.b, args.c);
    let digits = args.digits.digit_set()?;
    let config = RasterConfig {
        size: args.size,
        depth: args.depth,
        ..RasterConfig::default()
    };
    let result = rasterize(quad, &digits, &config)?;
    write_image(&result, &args.out)?;
    println!("wrote {}", args.out.display());
    println!("depth: {}", result.depth);
    println!("components: {}", result.component_count);
    Ok(())
}

fn figures(args: FiguresArgs) -> Result<(), AppError> {
    std::fs::create_dir_all(&args.outdir)
        .map_err(|e| AppError::Io(format!("failed creating {}: {e}", args.outdir.display())))?;
    let config = RasterConfig::default();
    for panel in &FIGURE_PANELS {
        let result = rasterize(panel.quadratic(), &panel.digit_set(), &config)?;
        let path = args.outdir.join(format!("{}.pgm", panel.name));
        write_image(&result, &path)?;
        let params = match panel.spec {
            PanelSpec::Consecutive { b, c, m } => format!("b={b} c={c} m={m}"),
            PanelSpec::Gap { p, q, s } => format!("p={p} q={q} s={s}"),
        };
        println!(
            "{}: {} {} components={}",
            panel.name,
            params,
            panel.verdict().status,
            result.component_count
        );
    }
    Ok(())
}

fn sweep(args: SweepArgs) -> Result<(), AppError> {
    if args.b_min > args.b_max || args.c_min > args.c_max {
        return Err(AppError::Invalid(
            "empty range: require b-min <= b-max and c-min <= c-max".into(),
        ));
    }
    let range = SweepRange {
        b_min: args.b_min,
        b_max: args.b_max,
        c_min: args.c_min,
        c_max: args.c_max,
        m_max: args.m_max,
    };
    println!("{CSV_HEADER}");
    for row in theorem_oracle_sweep(&range) {
        println!("{}", row.csv());
    }
    Ok(())
}
