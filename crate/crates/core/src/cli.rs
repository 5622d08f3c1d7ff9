//! Command-line front end. Results go to stdout as JSON; errors go to stderr.
//!
//! Exit codes: 0 success (or all checks passed), 1 a verification found a
//! counterexample, 2 bad usage or input.

use std::ffi::OsString;
use std::io::Write;
use std::ops::ControlFlow;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::boundary::{full_report, inner_boundary_variants};
use crate::cycle_space::CycleGen;
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::graph::VertexSet;
use crate::harness::{
    check_budget, check_dp_hypotheses, check_k_hypotheses, for_each_connected_subset,
    run_verification, Mode, Theorem, TrialConfig, XPolicy,
};
use crate::json::{pair_from_str, parse_set_str, parse_vertex, report_value, set_value};
use crate::lattice::{box_pair, face_cycles, oe_map, with_apex, BoxSpec, Flavor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "boundarykit",
    version,
    about = "Exterior boundary connectedness on graph pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Boundary, visible and outer-visible sets of one vertex set.
    Boundary(BoundaryArgs),
    /// Run a verification campaign and print its report.
    Verify(VerifyArgs),
    /// Check the theorem premises on a lattice box.
    Hypotheses {
        /// Box as z<d>:<n>.
        #[arg(long = "box")]
        box_spec: BoxSpec,
    },
    /// Print every connected subset of a box, one JSON array per line.
    Enumerate {
        /// Box as z<d>:<n>[:plain|star|plus].
        #[arg(long = "box")]
        box_spec: BoxSpec,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

#[derive(Args, Debug)]
struct BoundaryArgs {
    /// Box as z<d>:<n>[:flavor]; the flavor gives the path graph.
    #[arg(
        long = "box",
        conflicts_with = "pair",
        required_unless_present = "pair"
    )]
    box_spec: Option<BoxSpec>,
    /// Graph pair JSON file.
    #[arg(long)]
    pair: Option<std::path::PathBuf>,
    /// Vertex set as a JSON array of ids or coordinates.
    #[arg(long)]
    set: String,
    /// Observer: "apex" (boxes only), an id, or a JSON coordinate.
    #[arg(long)]
    x: String,
    /// Adjacency graph: a flavor for boxes, g or g-plus for pairs.
    #[arg(long)]
    adj: Option<String>,
    /// Graph in which visible components are counted (same forms as --adj).
    #[arg(long)]
    probe: Option<String>,
    /// Report the inner variants instead.
    #[arg(long)]
    inner: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TheoremArg {
    Dp,
    K,
    Lemma,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    theorem: TheoremArg,
    /// Box as z<d>:<n>.
    #[arg(long = "box")]
    box_spec: BoxSpec,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: ModeArg,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    margin: usize,
    /// "apex", "all", an id, or a JSON coordinate.
    #[arg(long, default_value = "apex")]
    x: String,
    #[arg(long, default_value = "plus")]
    probe: Flavor,
    #[arg(long, default_value = "star")]
    adj: Flavor,
    #[arg(long)]
    skip_hypotheses: bool,
    /// Omit the elapsed time so that reports are byte-identical across runs.
    #[arg(long)]
    no_elapsed: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Input(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("value serializes")
    )
    .map_err(io_err)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Boundary(args) => boundary(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Hypotheses { box_spec } => hypotheses(box_spec, out),
        Command::Enumerate { box_spec, max_size } => enumerate(box_spec, max_size, out),
    }
}

fn parse_x(g: &Graph, text: &str) -> Result<usize> {
    let value: Value =
        serde_json::from_str(text).map_err(|_| Error::Input(format!("bad vertex '{text}'")))?;
    parse_vertex(g, &value)
}

fn boundary(args: BoundaryArgs, out: &mut dyn Write) -> Result<i32> {
    let (g, g_prime, probe) = match (&args.box_spec, &args.pair) {
        (Some(spec), _) => {
            let flavor_of = |arg: &Option<String>, default: Flavor| -> Result<Flavor> {
                arg.as_deref().map_or(Ok(default), str::parse)
            };
            let adj = flavor_of(&args.adj, spec.flavor)?;
            let probe = flavor_of(&args.probe, Flavor::Plus.max_for(spec))?;
            let adjacency = box_pair(spec.dim, spec.side, spec.flavor, adj.join(spec.flavor))?;
            let probing = box_pair(spec.dim, spec.side, spec.flavor, probe.join(spec.flavor))?;
            if args.x == "apex" {
                let a = with_apex(&adjacency)?;
                let p = with_apex(&probing)?;
                (
                    a.pair().g().clone(),
                    a.pair().g_plus().clone(),
                    p.pair().g_plus().clone(),
                )
            } else {
                (
                    adjacency.g().clone(),
                    adjacency.g_plus().clone(),
                    probing.g_plus().clone(),
                )
            }
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
            let pair = pair_from_str(&text)?;
            let pick = |arg: &Option<String>, default: &str| -> Result<Graph> {
                match arg.as_deref().unwrap_or(default) {
                    "g" => Ok(pair.g().clone()),
                    "g-plus" => Ok(pair.g_plus().clone()),
                    other => input(format!("expected g or g-plus, got '{other}'")),
                }
            };
            if args.x == "apex" {
                return input("the apex observer needs --box");
            }
            (
                pair.g().clone(),
                pick(&args.adj, "g")?,
                pick(&args.probe, "g-plus")?,
            )
        }
        (None, None) => return input("give --box or --pair"),
    };
    let c = parse_set_str(&g, &args.set)?;
    let x = if args.x == "apex" {
        g.vertex_count() - 1
    } else {
        parse_x(&g, &args.x)?
    };
    let report = if args.inner {
        inner_boundary_variants(&g, &g_prime, &c, x)?
    } else {
        full_report(&g, &g_prime, &probe, &c, x)?
    };
    emit(out, &report_value(&g, &report))?;
    Ok(EXIT_OK)
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let theorem = match args.theorem {
        TheoremArg::Dp => Theorem::Dp,
        TheoremArg::K => Theorem::K,
        TheoremArg::Lemma => Theorem::Lemma,
    };
    let mut cfg = TrialConfig::new(theorem, args.box_spec);
    cfg.mode = match args.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Random => Mode::Random,
    };
    cfg.max_size = args.max_size;
    cfg.trials = args.trials;
    cfg.seed = args.seed;
    cfg.margin = args.margin;
    cfg.probe = args.probe;
    cfg.adjacency = args.adj;
    cfg.skip_hypotheses = args.skip_hypotheses;
    cfg.x_policy = match args.x.as_str() {
        "apex" => XPolicy::Apex,
        "all" => XPolicy::AllOutside,
        other => {
            let g = crate::lattice::build_box(&cfg.box_spec)?;
            XPolicy::Fixed(parse_x(&g, other)?)
        }
    };
    let report = run_verification(&cfg)?;
    writeln!(out, "{}", report.to_json(!args.no_elapsed)).map_err(io_err)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn hypotheses(spec: BoxSpec, out: &mut dyn Write) -> Result<i32> {
    let mut rows = serde_json::Map::new();
    for (name, plus) in [
        ("plus", Flavor::Plus),
        ("star", Flavor::Star),
        ("plain", Flavor::Plain),
    ] {
        let pair = box_pair(spec.dim, spec.side, Flavor::Plain, plus)?;
        let faces = CycleGen::new(pair.g(), face_cycles(pair.g())?)?;
        let dp = check_dp_hypotheses(&pair, &faces)?;
        let k = match oe_map(&pair) {
            Ok(map) => check_k_hypotheses(&pair, &faces, &map)?,
            Err(_) => false,
        };
        let apex = with_apex(&pair)?;
        let apex_gen = apex.generators()?;
        let apex_dp = check_dp_hypotheses(apex.pair(), &apex_gen)?;
        let apex_k = match oe_map(apex.pair()) {
            Ok(map) => check_k_hypotheses(apex.pair(), &apex_gen, &map)?,
            Err(_) => false,
        };
        rows.insert(
            name.to_string(),
            json!({
                "rank": faces.rank(),
                "generating": faces.is_generating(pair.g())?,
                "dp": dp,
                "k": k,
                "apex": { "dp": apex_dp, "k": apex_k },
            }),
        );
    }
    emit(
        out,
        &json!({ "box": format!("z{}:{}", spec.dim, spec.side), "g_plus": rows }),
    )?;
    Ok(EXIT_OK)
}

fn enumerate(spec: BoxSpec, max_size: usize, out: &mut dyn Write) -> Result<i32> {
    let g = crate::lattice::build_box(&spec)?;
    check_budget(g.vertex_count(), max_size)?;
    let mut failure = None;
    let _ = for_each_connected_subset(
        &g,
        &VertexSet::full(g.vertex_count()),
        max_size,
        |members| {
            let mut ids = members.to_vec();
            ids.sort_unstable();
            let set = VertexSet::from_ids(g.vertex_count(), ids).expect("ids in range");
            match writeln!(out, "{}", set_value(&g, &set)) {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    failure = Some(io_err(e));
                    ControlFlow::Break(())
                }
            }
        },
    )?;
    match failure {
        Some(e) => Err(e),
        None => Ok(EXIT_OK),
    }
}

impl Flavor {
    /// The probe used when none is given: plus where it exists, else plain.
    fn max_for(self, spec: &BoxSpec) -> Flavor {
        if spec.dim >= 2 {
            self
        } else {
            Flavor::Plain
        }
    }

    /// The smallest flavor containing both.
    fn join(self, other: Flavor) -> Flavor {
        match (self, other) {
            (Flavor::Star, _) | (_, Flavor::Star) => Flavor::Star,
            (Flavor::Plus, _) | (_, Flavor::Plus) => Flavor::Plus,
            _ => Flavor::Plain,
        }
    }
}
