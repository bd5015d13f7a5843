//! The `tsr` command line: solving, canonicalizing, validating, brute-force
//! checking, generating instances and emitting benchmark tables.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything written to stdout and stderr, so the commands can be tested
//! in process. Exit codes: 0 on completion (including NO answers), 2 for usage
//! or input errors, 3 when an internal invariant check fails.

pub mod format;

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use tsr_core::generators::{gen_hardness, gen_lower_bound, random_instance, Digraph, RandomModel};
use tsr_core::oracle::{AbstractGraph, IntervalView, OracleError, State, StateSearch, DEFAULT_STATE_CAP};
use tsr_core::solver::iteration_bound;
use tsr_core::{
    canonicalize, decide_and_construct, length_bound, validate_sequence, Canonical, Decision, IntervalGraph,
    SolveError,
};

use format::{
    format_sequence, parse_instance, parse_sequence, resolve_sequence, write_abstract_instance,
    write_interval_instance, AbstractInstance, InstanceFile, IntervalInstance,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tsr",
    about = "Token sliding reconfiguration of independent sets in interval graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether I reconfigures into J and print a sequence if so.
    Solve {
        file: PathBuf,
        /// Write a JSON run report to stderr.
        #[arg(long)]
        report: bool,
    },
    /// Print the canonical set of I's component and the sequence reaching it.
    Canon { file: PathBuf },
    /// Check a sequence file against an instance, ending at J if present.
    Validate { file: PathBuf, sequence: PathBuf },
    /// Exhaustive search: reconfigurability and shortest distance.
    Oracle {
        file: PathBuf,
        /// Maximum number of states to explore.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Generate an instance file.
    #[command(subcommand)]
    Gen(Generator),
    /// Emit a CSV table of solver lengths on an instance family.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
enum Generator {
    /// The lower-bound family with I = (v_1..v_k) and J = (b_1..b_k).
    LowerBound {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A seeded random interval graph with two random configurations.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Model::Uniform)]
        model: Model,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The incomparability graph of the word poset of a digraph.
    Hardness {
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required = true)]
        vertices: Vec<String>,
        /// Comma-separated arcs `x>y`; loops are written `x>x`.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        /// Comma-separated letters of the initial word.
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<String>,
        /// Comma-separated letters of the target word.
        #[arg(long, value_delimiter = ',', required = true)]
        b: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Model {
    Uniform,
    Short,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    LowerBound,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    m_range: RangeInclusive<usize>,
    /// Inclusive range `a..b`.
    #[arg(long, value_parser = parse_range)]
    k_range: RangeInclusive<usize>,
    /// Add the oracle's shortest distance as a `bfs_len` column.
    #[arg(long)]
    bfs: bool,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |x: &str| x.parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    let (a, b) = (parse(a)?, parse(b)?);
    if a == 0 || a > b {
        return Err(format!("range `{s}` must satisfy 1 <= a <= b"));
    }
    Ok(a..=b)
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// A failed command: exit code plus message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn input(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.to_string(),
    }
}

fn invariant(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVARIANT,
        message: message.to_string(),
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Config(_) | SolveError::Size { .. } | SolveError::TooFewTokens { .. } => input(e),
            SolveError::Push(_) | SolveError::Invariant(_) => invariant(e),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        input(e)
    }
}

/// Bound checks attached to a solver run.
#[derive(Clone, Debug, Serialize)]
pub struct BoundChecks {
    pub n: usize,
    pub k: usize,
    pub length_bound: usize,
    pub iteration_bound: usize,
    pub initial_length: usize,
    pub target_length: usize,
    pub initial_iterations: usize,
    pub target_iterations: usize,
    pub within_bounds: bool,
}

impl BoundChecks {
    fn new(g: &IntervalGraph, k: usize, d: &Decision) -> Self {
        let n = g.representation_len();
        let (ci, cj) = (&d.canonical_initial, &d.canonical_target);
        let length = length_bound(n, k);
        let iterations = iteration_bound(n, k);
        BoundChecks {
            n,
            k,
            length_bound: length,
            iteration_bound: iterations,
            initial_length: ci.sequence.len(),
            target_length: cj.sequence.len(),
            initial_iterations: ci.iterations,
            target_iterations: cj.iterations,
            within_bounds: [ci, cj]
                .iter()
                .all(|c| c.sequence.len() <= length && c.iterations <= iterations),
        }
    }
}

/// Machine-readable summary of a `solve` run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub reconfigurable: bool,
    pub sequence_length: Option<usize>,
    pub sequence: Option<Vec<(String, String)>>,
    pub elapsed_ms: f64,
    pub bounds: BoundChecks,
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<InstanceFile, Failure> {
    parse_instance(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_interval(path: &Path) -> Result<IntervalInstance, Failure> {
    match load(path)? {
        InstanceFile::Interval(inst) => Ok(inst),
        InstanceFile::Abstract(_) => Err(input(format!(
            "{}: this command needs an interval instance",
            path.display()
        ))),
    }
}

fn emit(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn solve(path: &Path, report: bool) -> Result<Outcome, Failure> {
    let inst = load_interval(path)?;
    let target = inst
        .target
        .as_ref()
        .ok_or_else(|| input(format!("{}: solve needs a J line", path.display())))?;
    let started = Instant::now();
    let d = decide_and_construct(&inst.graph, inst.k, &inst.initial, target)?;
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    let stdout = match &d.sequence {
        Some(s) => format!("YES\n{}", format_sequence(&inst.graph, s)),
        None => "NO\n".to_owned(),
    };
    let mut out = Outcome::ok(stdout);
    let bounds = BoundChecks::new(&inst.graph, inst.k, &d);
    if !bounds.within_bounds {
        return Err(invariant(format!("solver exceeded its bounds: {bounds:?}")));
    }
    if report {
        let r = RunReport {
            reconfigurable: d.reconfigurable,
            sequence_length: d.sequence.as_ref().map(|s| s.len()),
            sequence: d.sequence.as_ref().map(|s| {
                s.id_pairs(&inst.graph)
                    .into_iter()
                    .map(|(a, b)| (a.to_owned(), b.to_owned()))
                    .collect()
            }),
            elapsed_ms,
            bounds,
        };
        out.stderr = serde_json::to_string_pretty(&r).expect("report serializes") + "\n";
    }
    Ok(out)
}

fn canon(path: &Path) -> Result<Outcome, Failure> {
    let inst = load_interval(path)?;
    let Canonical {
        extreme, sequence, ..
    } = canonicalize(&inst.graph, &inst.initial)?;
    let report = validate_sequence(&inst.graph, &inst.initial, &sequence, Some(&extreme));
    if !report.is_valid() {
        return Err(invariant(format!(
            "canonicalizing sequence does not validate: {report:?}"
        )));
    }
    Ok(Outcome::ok(format!(
        "{}\n{}",
        extreme.ids(&inst.graph).join(" "),
        format_sequence(&inst.graph, &sequence)
    )))
}

fn validate(path: &Path, seq_path: &Path) -> Result<Outcome, Failure> {
    let inst = load_interval(path)?;
    let pairs =
        parse_sequence(&read(seq_path)?).map_err(|e| input(format!("{}: {e}", seq_path.display())))?;
    let s = match resolve_sequence(&inst.graph, &pairs) {
        Ok(s) => s,
        Err(e) => return Ok(Outcome::ok(format!("INVALID\n{e}\n"))),
    };
    let report = validate_sequence(&inst.graph, &inst.initial, &s, inst.target.as_ref());
    let stdout = match (&report.failure, report.end_matches) {
        (None, Some(false)) => format!(
            "INVALID\nsequence ends at {} instead of J\n",
            report.end.ids(&inst.graph).join(" ")
        ),
        (None, _) => "VALID\n".to_owned(),
        (Some(e), _) => {
            let mv = s.moves()[e.step - 1];
            format!(
                "INVALID\nstep {} ({} {}): {}\n",
                e.step,
                inst.graph.id(mv.from),
                inst.graph.id(mv.to),
                e.error
            )
        }
    };
    Ok(Outcome::ok(stdout))
}

fn oracle_answer(graph: &AbstractGraph, from: &State, to: &State, cap: usize) -> Result<String, Failure> {
    let (flag, dist) = StateSearch::new(graph).with_cap(cap).reconfigurable(from, to)?;
    Ok(match dist {
        Some(d) if flag => format!("YES\n{d}\n"),
        _ => "NO\n".to_owned(),
    })
}

fn oracle(path: &Path, cap: usize) -> Result<Outcome, Failure> {
    let missing = || input(format!("{}: oracle needs a J line", path.display()));
    let stdout = match load(path)? {
        InstanceFile::Interval(inst) => {
            let target = inst.target.as_ref().ok_or_else(missing)?;
            let view = IntervalView::new(&inst.graph);
            oracle_answer(&view.graph, &view.state(&inst.initial), &view.state(target), cap)?
        }
        InstanceFile::Abstract(inst) => {
            let target = inst.target.as_ref().ok_or_else(missing)?;
            oracle_answer(&inst.graph, &inst.initial, target, cap)?
        }
    };
    Ok(Outcome::ok(stdout))
}

fn generate(g: Generator) -> Result<Outcome, Failure> {
    let (text, output) = match g {
        Generator::LowerBound { m, k, output } => {
            if m == 0 || k == 0 {
                return Err(input("--m and --k must be at least 1"));
            }
            let inst = gen_lower_bound(m, k);
            let text = write_interval_instance(&IntervalInstance {
                graph: inst.graph,
                k,
                initial: inst.initial,
                target: Some(inst.target),
            });
            (format!("# lower-bound family m={m} k={k}\n{text}"), output)
        }
        Generator::Random {
            n,
            seed,
            k,
            model,
            output,
        } => {
            if n == 0 || k == 0 {
                return Err(input("--n and --k must be at least 1"));
            }
            let model = match model {
                Model::Uniform => RandomModel::UniformEndpoints,
                Model::Short => RandomModel::ShortIntervals,
            };
            let (graph, initial, target) = random_instance(n, k, seed, model).ok_or_else(|| {
                input(format!(
                    "random graph n={n} seed={seed} has no {k} independent intervals"
                ))
            })?;
            let text = write_interval_instance(&IntervalInstance {
                graph,
                k,
                initial,
                target: Some(target),
            });
            (format!("# random n={n} seed={seed}\n{text}"), output)
        }
        Generator::Hardness {
            vertices,
            edges,
            a,
            b,
            output,
        } => {
            let arcs = edges
                .iter()
                .filter(|e| !e.is_empty())
                .map(|e| {
                    e.split_once('>')
                        .map(|(x, y)| (x.to_owned(), y.to_owned()))
                        .ok_or_else(|| input(format!("arc `{e}` must be written `x>y`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let h = Digraph::new(vertices, arcs).map_err(input)?;
            let a = h.word(&a).map_err(input)?;
            let b = h.word(&b).map_err(input)?;
            let inst = gen_hardness(&h, &a, &b).map_err(input)?;
            let text = write_abstract_instance(&AbstractInstance {
                k: inst.n,
                graph: inst.graph,
                initial: inst.initial,
                target: Some(inst.target),
            });
            (
                format!("# word poset, width bound {}\n{text}", inst.width_bound),
                output,
            )
        }
    };
    Ok(Outcome::ok(emit(text, output.as_deref())?))
}

struct BenchRow {
    m: usize,
    k: usize,
    n: usize,
    solver_len: usize,
    bound: usize,
    bfs_len: Option<usize>,
}

fn bench_row(m: usize, k: usize, bfs: bool) -> Result<BenchRow, Failure> {
    let inst = gen_lower_bound(m, k);
    let g = &inst.graph;
    let d = decide_and_construct(g, k, &inst.initial, &inst.target)?;
    let s = d
        .sequence
        .ok_or_else(|| invariant(format!("lower-bound instance m={m} k={k} reported unreachable")))?;
    let bfs_len = if bfs {
        let view = IntervalView::new(g);
        let (_, dist) = StateSearch::new(&view.graph)
            .reconfigurable(&view.state(&inst.initial), &view.state(&inst.target))?;
        Some(dist.ok_or_else(|| invariant(format!("oracle finds m={m} k={k} unreachable")))?)
    } else {
        None
    };
    Ok(BenchRow {
        m,
        k,
        n: g.len(),
        solver_len: s.len(),
        bound: length_bound(g.len(), k),
        bfs_len,
    })
}

fn bench(args: BenchArgs) -> Result<Outcome, Failure> {
    let Family::LowerBound = args.family;
    let cells: Vec<(usize, usize)> = args
        .m_range
        .clone()
        .flat_map(|m| args.k_range.clone().map(move |k| (m, k)))
        .collect();
    let mut rows = cells
        .into_par_iter()
        .map(|(m, k)| bench_row(m, k, args.bfs))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by_key(|r| (r.m, r.k));
    let mut out = String::from("m,k,n,solver_len,bound_8kn2_2kn");
    out.push_str(if args.bfs { ",bfs_len\n" } else { "\n" });
    for r in rows {
        out.push_str(&format!("{},{},{},{},{}", r.m, r.k, r.n, r.solver_len, r.bound));
        match r.bfs_len {
            Some(d) => out.push_str(&format!(",{d}\n")),
            None => out.push('\n'),
        }
    }
    Ok(Outcome::ok(out))
}

/// Runs one command line (`argv[0]` is the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Solve { file, report } => solve(&file, report),
        Command::Canon { file } => canon(&file),
        Command::Validate { file, sequence } => validate(&file, &sequence),
        Command::Oracle { file, cap } => oracle(&file, cap),
        Command::Gen(g) => generate(g),
        Command::Bench(args) => bench(args),
    };
    result.unwrap_or_else(|f| Outcome {
        code: f.code,
        stdout: String::new(),
        stderr: format!("error: {}\n", f.message),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3").unwrap(), 1..=3);
        assert_eq!(parse_range("2..=2").unwrap(), 2..=2);
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("0..1").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["tsr", "frobnicate"]).code, EXIT_INPUT);
        assert_eq!(run(["tsr", "solve"]).code, EXIT_INPUT);
        let help = run(["tsr", "--help"]);
        assert_eq!(help.code, EXIT_OK);
        assert!(help.stdout.contains("solve"));
    }
}
