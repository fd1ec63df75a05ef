//! The `injcolor` command line.
//!
//! Exit codes: 0 success, 1 negative verification (or a failed acceptance
//! run), 2 usage or input errors, 3 budget exhaustion or internal failure.
//! Data goes to stdout or the `-o` file; diagnostics go to stderr.

pub mod acceptance;

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use injcolor_core::coloring::{chi, verify, ColoringMode};
use injcolor_core::error::Error;
use injcolor_core::formulas::{
    chi_i_direct_cycles, corona_value_set, direct_product_bounds, lexicographic_bounds, sylvester,
    FormulaResult, FormulaValue,
};
use injcolor_core::graph::{build_named, Graph, GraphFamily};
use injcolor_core::io::{
    coloring_from_json, coloring_to_json, graph_from_edge_list, graph_from_json,
    graph_to_edge_list, graph_to_json, grid_to_json, to_dot, Codec,
};
use injcolor_core::packing::{max_packing, min_partition, PackingMode};
use injcolor_core::patterns::{
    builtin, direct_cycle_coloring, five_coloring_strong, BuiltinPattern,
};
use injcolor_core::products::{product, ProductKind};
use injcolor_core::transforms::{neighborhood_graph, TransformMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "injcolor",
    version,
    about = "Injective colorings of graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Build a graph product.
    Product {
        #[arg(long, value_enum)]
        kind: KindArg,
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Two-step, closed-neighborhood or square graph.
    Transform {
        #[arg(long, value_enum)]
        mode: TransformArg,
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact chromatic number in a coloring mode.
    Chromatic {
        #[arg(long, value_enum)]
        mode: ModeArg,
        graph: PathBuf,
        /// Seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Check a coloring; exit 1 when it is invalid.
    Verify {
        #[arg(long, value_enum)]
        mode: ModeArg,
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Maximum packings and minimum packing partitions.
    Packing {
        #[arg(long, value_enum)]
        mode: PackingArg,
        #[arg(long, value_enum)]
        op: PackingOp,
        graph: PathBuf,
    },
    /// Closed forms and bounds.
    Formula {
        #[command(subcommand)]
        formula: FormulaCommand,
    },
    /// Built-in and composed coloring grids.
    Pattern(PatternArgs),
    /// Run the acceptance suite.
    Acceptance {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Restrict to these criterion numbers.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Fault injection: corrupt one cell of pattern A.
        #[arg(long)]
        corrupt_pattern_a: bool,
        /// Per-instance budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
    /// Graphviz export.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: usize,
    /// Edge probability for `random-gnp`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum FormulaCommand {
    /// χᵢ(C_m × C_n) with its derivation.
    DirectCycles {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Whether t is a nonnegative combination of r and s.
    Sylvester {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        t: u64,
    },
    /// Candidate values of χᵢ(G ⊙ H).
    Corona(PairArgs),
    /// Bounds on χᵢ(G ∘ H).
    Lexico(PairArgs),
    /// Bounds on χᵢ(G × H).
    DirectBounds(PairArgs),
}

#[derive(Args, Debug)]
struct PairArgs {
    left: PathBuf,
    right: PathBuf,
    #[arg(long, default_value_t = 60.0)]
    budget: f64,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct PatternArgs {
    /// A, B, C, D, PAT11(k), PAT44(s,t) or CE.
    #[arg(long)]
    name: Option<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<PatternCommand>,
}

#[derive(Subcommand, Debug)]
enum PatternCommand {
    /// Composed 5-coloring of C_2k ⊠ C_n.
    Five {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Injective coloring of C_m × C_n with the optimal number of colors.
    DirectCycles {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Coloring JSON output.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Graph JSON output.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    RandomTree,
    RandomGnp,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    EdgeList,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    Corona,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TransformArg {
    TwoStep,
    ClosedNeighborhood,
    Square,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Proper,
    Injective,
    TwoDistance,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PackingArg {
    Open,
    Closed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PackingOp {
    Max,
    Partition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

impl From<KindArg> for ProductKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cartesian => ProductKind::Cartesian,
            KindArg::Direct => ProductKind::Direct,
            KindArg::Strong => ProductKind::Strong,
            KindArg::Lexicographic => ProductKind::Lexicographic,
            KindArg::Corona => ProductKind::Corona,
        }
    }
}

impl From<TransformArg> for TransformMode {
    fn from(t: TransformArg) -> Self {
        match t {
            TransformArg::TwoStep => TransformMode::TwoStep,
            TransformArg::ClosedNeighborhood => TransformMode::ClosedNeighborhood,
            TransformArg::Square => TransformMode::Square,
        }
    }
}

impl From<ModeArg> for ColoringMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Proper => ColoringMode::Proper,
            ModeArg::Injective => ColoringMode::Injective,
            ModeArg::TwoDistance => ColoringMode::TwoDistance,
        }
    }
}

impl From<PackingArg> for PackingMode {
    fn from(m: PackingArg) -> Self {
        match m {
            PackingArg::Open => PackingMode::Open,
            PackingArg::Closed => PackingMode::Closed,
        }
    }
}

/// A failed command with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } | Error::CompositionFailure(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn budget(seconds: f64) -> std::result::Result<Option<Duration>, Failure> {
    if !seconds.is_finite() || seconds < 0.0 {
        return Err(usage(format!(
            "budget must be a nonnegative number of seconds, got {seconds}"
        )));
    }
    Ok(Some(Duration::from_secs_f64(seconds)))
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Graph JSON when the file starts with `{`, edge-list text otherwise.
fn read_graph(path: &Path) -> std::result::Result<Graph, Failure> {
    let text = read_text(path)?;
    let parsed = if text.trim_start().starts_with('{') {
        graph_from_json(&text)
    } else {
        graph_from_edge_list(&text)
    };
    parsed.map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_INTERNAL,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            let newline = if text.ends_with('\n') { "" } else { "\n" };
            match write!(out, "{text}{newline}") {
                // A closed reader (`| head`) is not an error.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                r => r.map_err(|e| Failure {
                    code: EXIT_INTERNAL,
                    message: e.to_string(),
                }),
            }
        }
    }
}

fn describe(value: &FormulaValue) -> String {
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(", ");
    match value {
        FormulaValue::Exact { value } => value.to_string(),
        FormulaValue::Interval { lower, upper } => format!("[{lower}, {upper}]"),
        FormulaValue::Candidates { values } => format!("{{{}}}", join(values)),
    }
}

fn print_formula(result: &FormulaResult) -> CmdResult {
    let mut text = describe(&result.value);
    for line in &result.trace {
        text.push_str("\n  ");
        text.push_str(line);
    }
    emit(None, &text)?;
    Ok(EXIT_OK)
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Gen(args) => {
            let family = match args.family {
                FamilyArg::Path => GraphFamily::Path { n: args.n },
                FamilyArg::Cycle => GraphFamily::Cycle { n: args.n },
                FamilyArg::Complete => GraphFamily::Complete { n: args.n },
                FamilyArg::Star => GraphFamily::Star { n: args.n },
                FamilyArg::Empty => GraphFamily::Empty { n: args.n },
                FamilyArg::RandomTree => GraphFamily::RandomTree {
                    n: args.n,
                    seed: args.seed,
                },
                FamilyArg::RandomGnp => GraphFamily::RandomGnp {
                    n: args.n,
                    p: args.p,
                    seed: args.seed,
                },
            };
            let g = build_named(&family)?;
            let text = match args.format {
                FormatArg::Json => graph_to_json(&g, None),
                FormatArg::EdgeList => graph_to_edge_list(&g),
            };
            emit(args.output.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Product {
            kind,
            left,
            right,
            output,
        } => {
            let (g, h) = (read_graph(&left)?, read_graph(&right)?);
            let kind = ProductKind::from(kind);
            let p = product(kind, &g, &h)?;
            let codec = Codec {
                kind,
                orders: [g.n(), h.n()],
            };
            emit(output.as_deref(), &graph_to_json(&p, Some(codec)))?;
            Ok(EXIT_OK)
        }
        Command::Transform {
            mode,
            graph,
            output,
        } => {
            let g = read_graph(&graph)?;
            emit(
                output.as_deref(),
                &graph_to_json(&neighborhood_graph(mode.into(), &g), None),
            )?;
            Ok(EXIT_OK)
        }
        Command::Chromatic {
            mode,
            graph,
            budget: seconds,
            witness,
        } => {
            let g = read_graph(&graph)?;
            let (value, coloring) = chi(mode.into(), &g, budget(seconds)?)?;
            emit(None, &value.to_string())?;
            if let Some(path) = witness {
                emit(Some(&path), &coloring_to_json(&coloring))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            mode,
            graph,
            coloring,
        } => {
            let g = read_graph(&graph)?;
            let c = coloring_from_json(&read_text(&coloring)?)
                .map_err(|e| usage(format!("{}: {e}", coloring.display())))?;
            match verify(mode.into(), &g, &c)? {
                None => {
                    emit(None, "valid")?;
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    emit(None, &format!("invalid: {v}"))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Packing { mode, op, graph } => {
            let g = read_graph(&graph)?;
            let text = match op {
                PackingOp::Max => {
                    let (size, witness) = max_packing(mode.into(), &g)?;
                    serde_json::json!({ "size": size, "witness": witness }).to_string()
                }
                PackingOp::Partition => {
                    let cert = min_partition(mode.into(), &g)?;
                    serde_json::json!({ "size": cert.size(), "classes": cert.classes }).to_string()
                }
            };
            emit(None, &text)?;
            Ok(EXIT_OK)
        }
        Command::Formula { formula } => match formula {
            FormulaCommand::DirectCycles { m, n } => print_formula(&chi_i_direct_cycles(m, n)?),
            FormulaCommand::Sylvester { r, s, t } => {
                let result = sylvester(r, s, t);
                let mut text = result.member.to_string();
                if let Some((a, b)) = result.witness {
                    text.push_str(&format!("\n  {t} = {a}·{r} + {b}·{s}"));
                }
                emit(None, &text)?;
                Ok(EXIT_OK)
            }
            FormulaCommand::Corona(p) => {
                let (g, h) = (read_graph(&p.left)?, read_graph(&p.right)?);
                print_formula(&corona_value_set(&g, &h, budget(p.budget)?)?)
            }
            FormulaCommand::Lexico(p) => {
                let (g, h) = (read_graph(&p.left)?, read_graph(&p.right)?);
                print_formula(&lexicographic_bounds(&g, &h, budget(p.budget)?)?)
            }
            FormulaCommand::DirectBounds(p) => {
                let (g, h) = (read_graph(&p.left)?, read_graph(&p.right)?);
                print_formula(&direct_product_bounds(&g, &h, budget(p.budget)?)?)
            }
        },
        Command::Pattern(args) => pattern(args),
        Command::Acceptance {
            level,
            json,
            only,
            corrupt_pattern_a,
            budget: seconds,
        } => {
            let level = match level {
                LevelArg::Quick => acceptance::Level::Quick,
                LevelArg::Full => acceptance::Level::Full,
            };
            let options = acceptance::Options {
                corrupt_pattern_a,
                only,
                budget: budget(seconds)?,
            };
            let report = acceptance::run_acceptance(level, &options);
            emit(json.as_deref(), &report.to_json())?;
            eprint!("{}", report.table());
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::ExportDot {
            graph,
            coloring,
            output,
        } => {
            let g = read_graph(&graph)?;
            let c = match coloring {
                Some(path) => Some(
                    coloring_from_json(&read_text(&path)?)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            emit(output.as_deref(), &to_dot(&g, c.as_ref())?)?;
            Ok(EXIT_OK)
        }
    }
}

fn pattern(args: PatternArgs) -> CmdResult {
    match (args.command, args.name) {
        (Some(PatternCommand::Five { k, n, output }), _) => {
            emit(
                output.as_deref(),
                &grid_to_json(&five_coloring_strong(k, n)?),
            )?;
        }
        (
            Some(PatternCommand::DirectCycles {
                m,
                n,
                emit: path,
                graph,
            }),
            _,
        ) => {
            let (g, c) = direct_cycle_coloring(m, n)?;
            emit(None, &c.color_count().to_string())?;
            if let Some(path) = path {
                emit(Some(&path), &coloring_to_json(&c))?;
            }
            if let Some(path) = graph {
                emit(Some(&path), &graph_to_json(&g, None))?;
            }
        }
        (None, Some(name)) => {
            let name: BuiltinPattern = name.parse()?;
            emit(args.output.as_deref(), &grid_to_json(&builtin(name)?))?;
        }
        (None, None) => return Err(usage("pattern needs --name or a subcommand")),
    }
    Ok(EXIT_OK)
}
