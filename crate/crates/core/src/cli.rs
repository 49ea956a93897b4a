//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails or a search that
//! must succeed comes back empty, 2 on usage and input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{build_representation, BuildConfig, KRule};
use crate::error::{Error, Result};
use crate::exact::{exact_dimension_with_limit, CoverResult, DEFAULT_BUDGET, DEFAULT_VERTEX_LIMIT};
use crate::graph::{components, generate, load_edge_list, to_edge_list, Graph, Model, Representation};
use crate::homogenize::{
    adversarial_instance, force_homogeneous, refute_homogeneous_rep, AdversarialConfig,
    ForceHomoConfig, HomogeneityCertificate,
};
use crate::seed::DEFAULT_SEED;
use crate::separation::{is_separating, is_strongly_separating};

#[derive(Debug, Parser)]
#[command(name = "sepdim", version, about = "Separating vertex-ordering representations of graphs")]
pub struct Cli {
    /// Print machine-readable JSON on stdout.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel stages (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a strongly separating representation.
    Construct(ConstructArgs),
    /// Check a representation against a graph.
    Verify(VerifyArgs),
    /// Exact (strong) separation dimension of a small graph.
    Exact(ExactArgs),
    /// Reduce to a consistent homogeneous representation.
    Homogenize(HomogenizeArgs),
    /// Find an unseparated pair in a consistent homogeneous 3-ordering representation.
    Refute(RefuteArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Basic graph statistics.
    Stats(StatsArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 1 << 17)]
    pub recursion_threshold: usize,
    /// `fourth-root` or a fixed even integer.
    #[arg(long, default_value = "fourth-root", value_parser = parse_k_rule)]
    pub k_rule: KRule,
    #[arg(long, default_value_t = 10_000)]
    pub max_attempts: usize,
    #[arg(long, default_value_t = 8)]
    pub max_depth: usize,
    /// Write the representation here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub rep: PathBuf,
    #[arg(long)]
    pub strong: bool,
}

#[derive(Debug, Args)]
pub struct ExactArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub strong: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = DEFAULT_VERTEX_LIMIT)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct HomogenizeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub rep: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub t: usize,
    /// Override the degree of the first peel.
    #[arg(long)]
    pub core_degree: Option<usize>,
    /// Skip the average-degree precondition.
    #[arg(long)]
    pub no_degree_check: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RefuteArgs {
    /// JSON object with `graph`, `representation` and `certificate`.
    #[arg(long, conflicts_with = "adversarial", required_unless_present = "adversarial")]
    pub instance: Option<PathBuf>,
    /// Generate the instance by local search instead.
    #[arg(long)]
    pub adversarial: bool,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub side_size: usize,
    #[arg(long, default_value_t = 600)]
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModelName {
    Cycle,
    Path,
    Complete,
    Star,
    RandomRegular,
    Gnp,
    RandomBipartite,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: ModelName,
    /// Vertex count (star: leaf count).
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    /// Right side of a random bipartite graph; the left side is `n`.
    #[arg(long, default_value_t = 0)]
    pub right: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub input: PathBuf,
}

fn parse_k_rule(s: &str) -> std::result::Result<KRule, String> {
    if s == "fourth-root" {
        return Ok(KRule::FourthRoot);
    }
    let k: usize = s.parse().map_err(|_| format!("expected `fourth-root` or an integer, got `{s}`"))?;
    KRule::Fixed(k).parts_for(0).map(|_| KRule::Fixed(k)).map_err(|e| e.to_string())
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)?)
}

enum Failure {
    Usage(String),
    Check(String, Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(w) => {
                let witness = serde_json::to_value(&w).unwrap_or(Value::Null);
                Failure::Check(format!("verification failed: {w}"), witness)
            }
            Error::Contradiction(msg) => Failure::Check(format!("no witness found: {msg}"), Value::Null),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn require_file(p: &Path) -> std::result::Result<(), Failure> {
    if p.is_file() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{}: no such file", p.display())))
    }
}

fn require_out(p: &Option<PathBuf>) -> std::result::Result<(), Failure> {
    let Some(p) = p else { return Ok(()) };
    let parent = p.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    if parent.is_dir() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{}: directory does not exist", parent.display())))
    }
}

fn read_graph(p: &Path) -> Result<Graph> {
    load_edge_list(BufReader::new(File::open(p)?))
}

fn read_json<T: serde::de::DeserializeOwned>(p: &Path) -> Result<T> {
    Ok(serde_json::from_reader(BufReader::new(File::open(p)?))?)
}

/// Buffered stdout, so that commands can run inside a worker pool.
struct Output {
    json: bool,
    stdout: Vec<u8>,
}

impl Output {
    /// Emits `value` as JSON under `--json`, otherwise the `text` line.
    fn emit(&mut self, value: &Value, text: &str) -> Result<()> {
        if self.json {
            writeln!(self.stdout, "{}", canonical_json(value)?)?;
        } else {
            writeln!(self.stdout, "{text}")?;
        }
        Ok(())
    }
}

fn write_or_print(out: &mut Output, path: &Option<PathBuf>, body: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, format!("{body}\n"))?,
        None if !out.json => writeln!(out.stdout, "{body}")?,
        None => {}
    }
    Ok(())
}

type Step = std::result::Result<(), Failure>;

fn construct(a: &ConstructArgs, out: &mut Output) -> Step {
    require_file(&a.input)?;
    require_out(&a.out)?;
    let g = read_graph(&a.input)?;
    let config = BuildConfig {
        recursion_threshold: a.recursion_threshold,
        k_rule: a.k_rule,
        seed: a.seed,
        max_attempts: a.max_attempts,
        max_depth: a.max_depth,
    };
    let (rep, report) = build_representation(&g, &config)?;
    let rep_json = canonical_json(&rep)?;
    write_or_print(out, &a.out, &rep_json)?;
    let mut value = json!({ "report": report });
    if a.out.is_none() {
        value["representation"] = serde_json::to_value(&rep).map_err(Error::from)?;
    }
    let summary = format!(
        "strongly separating representation with {} orderings (max degree {}, depth {})",
        report.ordering_count, report.delta, report.recursion_depth
    );
    if out.json || a.out.is_some() {
        out.emit(&value, &summary)?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs, out: &mut Output) -> Step {
    require_file(&a.input)?;
    require_file(&a.rep)?;
    let g = read_graph(&a.input)?;
    let rep: Representation = read_json(&a.rep)?;
    if rep.n() != g.n() {
        return Err(Failure::Usage(format!(
            "representation is on {} vertices, graph on {}",
            rep.n(),
            g.n()
        )));
    }
    let result = if a.strong {
        is_strongly_separating(&g, &rep)
    } else {
        is_separating(&g, &rep)
    };
    let what = if a.strong { "strongly separating" } else { "separating" };
    match result {
        Ok(()) => {
            let value = json!({ "valid": true, "strong": a.strong, "orderings": rep.len() });
            out.emit(&value, &format!("ok: {what} with {} orderings", rep.len()))?;
            Ok(())
        }
        Err(w) => {
            let value = json!({ "valid": false, "strong": a.strong, "witness": w });
            out.emit(&value, &format!("not {what}: {w}"))?;
            Err(Error::Verification(w).into())
        }
    }
}

fn exact(a: &ExactArgs, out: &mut Output) -> Step {
    require_file(&a.input)?;
    let g = read_graph(&a.input)?;
    let result = exact_dimension_with_limit(&g, a.strong, a.budget, a.limit)?;
    let witness: Vec<&[usize]> = result.witness().orderings().iter().map(|o| o.as_slice()).collect();
    let (value, text) = match &result {
        CoverResult::Exact { size, .. } => (
            json!({ "dimension": size, "strong": a.strong, "witness": witness }),
            format!("dimension {size}"),
        ),
        CoverResult::ExceedsBudget { budget, lower, upper, .. } => (
            json!({
                "dimension": Value::Null,
                "strong": a.strong,
                "budget": budget,
                "lower": lower,
                "upper": upper,
                "witness": witness,
            }),
            format!("dimension exceeds budget {budget}: between {lower} and {upper}"),
        ),
    };
    out.emit(&value, &text)?;
    Ok(())
}

fn homogenize(a: &HomogenizeArgs, out: &mut Output) -> Step {
    require_file(&a.input)?;
    require_file(&a.rep)?;
    require_out(&a.out)?;
    let g = read_graph(&a.input)?;
    let rep: Representation = read_json(&a.rep)?;
    let config = ForceHomoConfig {
        t: a.t,
        enforce_average_degree: !a.no_degree_check,
        core_degree: a.core_degree,
        seed: a.seed,
    };
    let outcome = force_homogeneous(&g, &rep, &config)?;
    let body = canonical_json(&outcome)?;
    write_or_print(out, &a.out, &body)?;
    if out.json && a.out.is_none() {
        writeln!(out.stdout, "{body}").map_err(Error::from)?;
    } else if a.out.is_some() {
        let value = json!({
            "vertices": outcome.graph.n(),
            "edges": outcome.graph.edge_count(),
            "side": outcome.certificate.side,
            "signs": outcome.certificate.signs,
        });
        let text = format!(
            "{} vertices, {} edges, homogeneous on side {:?}",
            outcome.graph.n(),
            outcome.graph.edge_count(),
            outcome.certificate.side
        );
        out.emit(&value, &text)?;
    }
    Ok(())
}

#[derive(serde::Deserialize)]
struct RefuteInstance {
    graph: Graph,
    representation: Representation,
    certificate: HomogeneityCertificate,
}

fn refute(a: &RefuteArgs, out: &mut Output) -> Step {
    let (g, r, cert) = match &a.instance {
        Some(p) => {
            require_file(p)?;
            let inst: RefuteInstance = read_json(p)?;
            (inst.graph, inst.representation, inst.certificate)
        }
        None => {
            let config = AdversarialConfig {
                side_size: a.side_size,
                iterations: a.iterations,
                ..AdversarialConfig::default()
            };
            let inst = adversarial_instance(a.seed, &config)?;
            (inst.graph, inst.representation, inst.certificate)
        }
    };
    let found = refute_homogeneous_rep(&g, &r, &cert)?;
    let value = json!({ "case": found.case, "witness": found.witness });
    out.emit(&value, &format!("{:?}: {}", found.case, found.witness))?;
    Ok(())
}

fn gen(a: &GenArgs, out: &mut Output) -> Step {
    require_out(&a.out)?;
    let model = match a.model {
        ModelName::Cycle => Model::Cycle { n: a.n },
        ModelName::Path => Model::Path { n: a.n },
        ModelName::Complete => Model::Complete { n: a.n },
        ModelName::Star => Model::Star { leaves: a.n },
        ModelName::RandomRegular => Model::RandomRegular { n: a.n, degree: a.degree },
        ModelName::Gnp => Model::Gnp { n: a.n, p: a.p },
        ModelName::RandomBipartite => Model::RandomBipartite {
            left: a.n,
            right: a.right,
            p: a.p,
        },
    };
    let g = generate(model, a.seed)?;
    let text = to_edge_list(&g);
    match &a.out {
        Some(p) => std::fs::write(p, &text).map_err(Error::from)?,
        None if !out.json => write!(out.stdout, "{text}").map_err(Error::from)?,
        None => {}
    }
    if out.json {
        let value = json!({ "model": model, "seed": a.seed, "n": g.n(), "edges": g.edge_count() });
        out.emit(&value, "")?;
    }
    Ok(())
}

fn stats(a: &StatsArgs, out: &mut Output) -> Step {
    require_file(&a.input)?;
    let g = read_graph(&a.input)?;
    let value = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "average_degree": g.average_degree(),
        "components": components(&g).len(),
        "bipartition_recorded": g.bipartition().is_some(),
    });
    let text = format!(
        "n {} edges {} max degree {} min degree {} average degree {:.3} components {}",
        g.n(),
        g.edge_count(),
        g.max_degree(),
        g.min_degree(),
        g.average_degree(),
        components(&g).len()
    );
    out.emit(&value, &text)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut Output) -> Step {
    match &cli.command {
        Command::Construct(a) => construct(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Exact(a) => exact(a, out),
        Command::Homogenize(a) => homogenize(a, out),
        Command::Refute(a) => refute(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Stats(a) => stats(a, out),
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut out = Output {
        json: cli.json,
        stdout: Vec::new(),
    };
    let result = match cli.jobs {
        Some(0) => Err(Failure::Usage("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, &mut out)),
            Err(e) => Err(Failure::Usage(e.to_string())),
        },
        None => dispatch(&cli, &mut out),
    };
    if stdout.write_all(&out.stdout).and_then(|_| stdout.flush()).is_err() {
        return 2;
    }
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Check(msg, witness)) => {
            let _ = writeln!(stderr, "{msg}");
            if !witness.is_null() {
                let _ = writeln!(stderr, "witness: {witness}");
            }
            1
        }
    }
}
