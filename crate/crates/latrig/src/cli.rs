//! The `latrig` command line.
//!
//! Exit status is 0 on success, 2 when a search finds no rigid framework and
//! 1 for every other failure, including usage errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use latrig_core::graph::girth_by_edge_removal;
use latrig_core::rigidity::{motion_space_dim, DEFAULT_TOLERANCE};
use latrig_core::{
    analyze, knight_2d, knight_lattice, AnalysisReport, AnalyzeOptions, BuildConfig, BuildResult,
    Framework, Girth, RankMode, Verdict,
};

use crate::figures::{adjacency_image, draw_svg};
use crate::formats::{
    read_canonical, read_framefile_rect, write_canonical, write_framefile, write_sparsematrix,
};
use crate::parallel::{default_workers, search_parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_FOUND: i32 = 2;

const SVG_SCALE: u32 = 40;

#[derive(Debug, Parser)]
#[command(
    name = "latrig",
    version,
    about = "Rigidity of bar-joint frameworks on integer lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a knight, leaper or lattice framework.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Board size for knight2d and leaper, e.g. `5x6`.
        #[arg(long, value_parser = parse_board)]
        board: Option<(usize, usize)>,
        /// Lattice side.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Decide infinitesimal rigidity of a framework file.
    Analyze {
        path: PathBuf,
        #[command(flatten)]
        rank: RankArgs,
    },
    /// Randomised search for rigid high-girth unit-bar frameworks.
    Search {
        /// Grid side.
        #[arg(long)]
        n: usize,
        /// Squared bar length.
        #[arg(long)]
        m: u64,
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to the number of logical cores.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        rank: RankArgs,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Check the structural invariants of a framework file.
    Verify {
        path: PathBuf,
        /// Minimum girth to require.
        #[arg(long)]
        girth: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Knight2d,
    Lattice,
    Leaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
    /// Exact for moderate sizes, numeric for very large frameworks.
    Auto,
}

#[derive(Debug, clap::Args)]
struct RankArgs {
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    mode: Mode,
    /// Relative tolerance for numeric rank.
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
}

impl RankArgs {
    fn options(&self) -> Result<AnalyzeOptions> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            bail!("--tol must be a positive number");
        }
        let mut options = AnalyzeOptions::default();
        options.mode = match self.mode {
            Mode::Exact => RankMode::Exact,
            Mode::Numeric => RankMode::Numeric { tol: self.tol },
            Mode::Auto => match options.mode {
                RankMode::Auto {
                    exact_joint_limit, ..
                } => RankMode::Auto {
                    exact_joint_limit,
                    tol: self.tol,
                },
                other => other,
            },
        };
        Ok(options)
    }
}

fn parse_board(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected MxN, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("`{t}` is not a board side"))
    };
    Ok((parse(m)?, parse(n)?))
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_FAILURE
            } else {
                EXIT_OK
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Generate {
            kind,
            board,
            n,
            dim,
            a,
            b,
            out_dir,
        } => cmd_generate(kind, board, n, dim, a, b, out_dir.as_deref(), out),
        Command::Analyze { path, rank } => cmd_analyze(&path, &rank.options()?, out),
        Command::Search {
            n,
            m,
            girth,
            trials,
            seed,
            workers,
            rank,
            out_dir,
        } => {
            let config = BuildConfig::new(n, m, girth)
                .with_seed(seed)
                .with_trials(trials);
            let workers = workers.unwrap_or_else(default_workers);
            if workers == 0 {
                bail!("--workers must be at least 1");
            }
            cmd_search(&config, &rank.options()?, workers, out_dir.as_deref(), out)
        }
        Command::Verify { path, girth } => cmd_verify(&path, girth, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    kind: Kind,
    board: Option<(usize, usize)>,
    n: Option<usize>,
    dim: usize,
    a: Option<u32>,
    b: Option<u32>,
    out_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let (framework, width) = match kind {
        Kind::Knight2d | Kind::Leaper => {
            let (m, n) = board.context("--board MxN is required for this kind")?;
            let (a, b) = match (kind, a, b) {
                (Kind::Leaper, Some(a), Some(b)) => (a, b),
                (Kind::Leaper, _, _) => bail!("--a and --b are required for a leaper"),
                _ => (a.unwrap_or(1), b.unwrap_or(2)),
            };
            (knight_2d(m, n, a, b), m)
        }
        Kind::Lattice => {
            let n = n.context("--n is required for a lattice")?;
            if dim == 0 {
                bail!("--dim must be at least 1");
            }
            (knight_lattice(n, dim, a.unwrap_or(1), b.unwrap_or(2)), n)
        }
    };
    writeln!(
        out,
        "{} {}, {} {}",
        framework.num_joints(),
        plural(framework.num_joints(), "joint"),
        framework.num_bars(),
        plural(framework.num_bars(), "bar")
    )?;
    writeln!(
        out,
        "joints={} bars={} dim={}",
        framework.num_joints(),
        framework.num_bars(),
        framework.dim()
    )?;
    if let Some(dir) = out_dir {
        write_outputs(dir, &framework, width)?;
    }
    Ok(EXIT_OK)
}

fn plural(count: usize, word: &str) -> String {
    if count == 1 {
        word.to_string()
    } else {
        format!("{word}s")
    }
}

/// Canonical file, plus framefile, sparse matrix, SVG and adjacency image for
/// planar frameworks.
fn write_outputs(dir: &Path, framework: &Framework, width: usize) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let put = |name: &str, text: String| {
        let path = dir.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
    };
    put("framework.txt", write_canonical(framework))?;
    if framework.dim() == 2 {
        put("framefile.txt", write_framefile(framework, width)?)?;
        put("sparsematrix.txt", write_sparsematrix(framework)?)?;
        put("framework.svg", draw_svg(framework, SVG_SCALE)?)?;
    }
    put("adjacency.pgm", adjacency_image(framework, 1).to_pgm())?;
    Ok(())
}

fn load(path: &Path) -> Result<Framework> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_canonical(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_analyze(path: &Path, options: &AnalyzeOptions, out: &mut dyn Write) -> Result<i32> {
    let framework = load(path)?;
    let report = analyze(&framework, options);
    let rank = report.rank.unwrap_or_else(|| {
        framework.dim() * framework.num_joints() - motion_space_dim(&framework, options)
    });
    writeln!(out, "Required rank for rigidity:")?;
    writeln!(out, "{}", report.required_rank)?;
    writeln!(out, "Rank of rigidity matrix:")?;
    writeln!(out, "{rank}")?;
    let label = match report.verdict {
        Verdict::Rigid => "RIGID",
        Verdict::Flexible | Verdict::TriviallyFlexible => "FLEXIBLE",
        Verdict::DegenerateSpan => "NO VERDICT",
    };
    writeln!(
        out,
        "rank {rank} / required {} / {label}",
        report.required_rank
    )?;
    match report.verdict {
        Verdict::TriviallyFlexible => writeln!(
            out,
            "trivially flexible: {} bars cannot reach the required rank",
            report.bars
        )?,
        Verdict::DegenerateSpan => writeln!(
            out,
            "degenerate span: the joints do not affinely span R^{}, so the rank test does not apply",
            report.dim
        )?,
        _ => {}
    }
    if report.budget_fallback {
        writeln!(
            out,
            "note: exact elimination exceeded its bit budget; numeric rank used"
        )?;
    }
    writeln!(out, "{}", summary_line(&report, rank))?;
    Ok(EXIT_OK)
}

fn summary_line(report: &AnalysisReport, rank: usize) -> String {
    let arithmetic = report
        .arithmetic
        .map_or_else(|| "none".to_string(), |a| a.to_string());
    format!(
        "joints={} bars={} dim={} rank={} required={} nullity={} verdict={} arithmetic={} budget_fallback={}",
        report.joints,
        report.bars,
        report.dim,
        rank,
        report.required_rank,
        report.dim * report.joints - rank,
        report.verdict,
        arithmetic,
        report.budget_fallback
    )
}

fn cmd_search(
    config: &BuildConfig,
    options: &AnalyzeOptions,
    workers: usize,
    out_dir: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let outcome = search_parallel(config, options, workers)?;
    writeln!(
        out,
        "{:>6} {:>4} {:>6} {:>7} {:>7} {:>7}",
        "girth", "n", "m", "joints", "bars", "trials"
    )?;
    let shown = outcome.result();
    let (joints, bars, girth) = shown.map_or((0, 0, Girth::Infinite), |r| {
        (r.joints(), r.bars(), r.girth_achieved)
    });
    writeln!(
        out,
        "{:>6} {:>4} {:>6} {:>7} {:>7} {:>7}",
        girth.to_string(),
        config.n,
        config.m,
        joints,
        bars,
        outcome.trials_run
    )?;
    let status = if outcome.found() {
        "rigid"
    } else {
        "not-found"
    };
    let trial = shown.map_or_else(
        || "-".to_string(),
        |r: &BuildResult| r.trial_index.to_string(),
    );
    writeln!(
        out,
        "status={status} girth={girth} n={} m={} joints={joints} bars={bars} trials={} rigid_found={} trial={trial} seed={}",
        config.n, config.m, outcome.trials_run, outcome.rigid_found, config.seed
    )?;
    if let (Some(dir), Some(result)) = (out_dir, shown) {
        write_outputs(dir, &result.framework, config.n)?;
    }
    if outcome.found() {
        Ok(EXIT_OK)
    } else {
        writeln!(out, "no rigid framework found")?;
        Ok(EXIT_NOT_FOUND)
    }
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// Runs every structural check on `framework`.
fn verify_checks(framework: &Framework, min_girth: Option<usize>) -> Vec<Check> {
    let mut checks = Vec::new();

    let lengths = framework.squared_bar_lengths();
    let unit = framework.is_unit_bar();
    let detail = match (lengths.first(), unit) {
        (None, _) => "no bars".to_string(),
        (Some(l), true) => format!("all squared lengths {l}"),
        (Some(_), false) => {
            let (min, max) = (lengths.iter().min().unwrap(), lengths.iter().max().unwrap());
            format!("squared lengths range over {min}..={max}")
        }
    };
    checks.push(check("unit-bar", unit, detail));

    let bipartite = framework.bipartition().is_some();
    checks.push(check(
        "bipartite",
        bipartite,
        if bipartite {
            "2-colourable"
        } else {
            "odd cycle present"
        },
    ));

    let bfs = framework.girth();
    let by_removal = girth_by_edge_removal(&framework.adjacency());
    checks.push(check(
        "girth",
        bfs == by_removal,
        format!("girth {bfs} (cross-check {by_removal})"),
    ));
    if let Some(g) = min_girth {
        checks.push(check(
            "min-girth",
            bfs.at_least(g),
            format!("girth {bfs}, required {g}"),
        ));
    }

    let min_degree = framework.degrees().into_iter().min();
    let degree_ok = min_degree.is_none_or(|d| d >= 3);
    let detail = min_degree.map_or_else(
        || "no joints".to_string(),
        |d| format!("minimum degree {d}"),
    );
    checks.push(check("degree", degree_ok, detail));

    checks.push(round_trip_check(framework));
    checks
}

fn round_trip_check(framework: &Framework) -> Check {
    let canonical = read_canonical(&write_canonical(framework)).ok();
    if canonical.as_ref() != Some(framework) {
        return check(
            "round-trip",
            false,
            "canonical format did not reproduce the framework",
        );
    }
    if framework.dim() != 2
        || framework
            .joints()
            .iter()
            .any(|j| j.coords().iter().any(|&c| c < 0))
    {
        return check("round-trip", true, "canonical");
    }
    let width = framework
        .joints()
        .iter()
        .map(|j| j.coords()[0] as usize + 1)
        .max()
        .unwrap_or(1);
    let height = framework
        .joints()
        .iter()
        .map(|j| j.coords()[1] as usize + 1)
        .max()
        .unwrap_or(1);
    let bars_by_position = |f: &Framework| {
        let mut v: Vec<_> = f
            .bars()
            .iter()
            .map(|b| (f.joint(b.lo()).clone(), f.joint(b.hi()).clone()))
            .map(|(p, q)| if p <= q { (p, q) } else { (q, p) })
            .collect();
        v.sort();
        v
    };
    let ok = write_framefile(framework, width)
        .ok()
        .and_then(|text| read_framefile_rect(&text, width, height).ok())
        .is_some_and(|back| bars_by_position(&back) == bars_by_position(framework));
    check(
        "round-trip",
        ok,
        if ok {
            "canonical and framefile"
        } else {
            "framefile did not reproduce the bars"
        },
    )
}

fn cmd_verify(path: &Path, min_girth: Option<usize>, out: &mut dyn Write) -> Result<i32> {
    let framework = load(path)?;
    writeln!(
        out,
        "{:<10} ok    {} joints, {} bars, dimension {}",
        "parse",
        framework.num_joints(),
        framework.num_bars(),
        framework.dim()
    )?;
    let checks = verify_checks(&framework, min_girth);
    for c in &checks {
        writeln!(
            out,
            "{:<10} {:<5} {}",
            c.name,
            if c.passed { "ok" } else { "FAIL" },
            c.detail
        )?;
    }
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.name)
        .collect();
    if failed.is_empty() {
        writeln!(out, "verify=pass")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "verify=fail failed={}", failed.join(","))?;
        Ok(EXIT_FAILURE)
    }
}
