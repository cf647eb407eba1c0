//! The `tbeer` command line.
//!
//! [`run`] takes the arguments and the two output streams explicitly so the
//! whole front end can be driven from tests.

use std::ffi::OsString;
use std::hint::black_box;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::beerpath::{eabp, fbp, ldbp, mseap_adjlist, mseap_stream, sbp, Variant};
use crate::index::{fbp_on_dag, parse_activation, sbp_on_dag, NondomIndex, Query, TransformedGraph};
use crate::nondom::{dist_nondom_paths, inv_dist_nondom_paths, nondom_paths};
use crate::oracle::verify::{run_all, Corpus};
use crate::oracle::{gen_instance, InstanceSpec};
use crate::tgraph::{
    format_time, parse_beer_config, parse_edge_stream, write_beer_config, write_edge_stream, BeerConfig,
    TemporalGraph, Time, TimeWindow, VertexId, INF,
};
use crate::Error;

const FORMATS: &str = "\
File formats:
  graph  first line `n M`, then M lines `u v t lambda` in any order
         (vertex ids 0..n, t >= 0, lambda >= 1)
  beer   first line `k`, then k lines `b c t_1 .. t_c` with the open
         instants strictly increasing
Blank lines and lines starting with `#` are ignored. Unreachable values print
as `inf` (minimised objectives) or `-inf` (maximised ones).";

#[derive(Parser, Debug)]
#[command(name = "tbeer", version, about = "Beer paths on temporal graphs", after_help = FORMATS)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one objective, or dump a frontier, on a graph file.
    Query(QueryArgs),
    /// Precompute the non-dominated path index and save it.
    IndexBuild(IndexBuildArgs),
    /// Answer an EABP/LDBP query from a saved index.
    IndexQuery(IndexQueryArgs),
    /// Write the DAG form of a graph, optionally running a query on it.
    Transform(TransformArgs),
    /// Write a seeded random instance.
    Gen(GenArgs),
    /// Cross-check all algorithms against brute force on random instances.
    Check(CheckArgs),
    /// Time the main algorithms on growing random graphs.
    Bench(BenchArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Objective {
    Eabp,
    Ldbp,
    Fbp,
    Sbp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FrontierKind {
    /// (start, arrival) pairs from --source
    Sa,
    /// (distance, arrival) pairs from --source
    Da,
    /// (distance, start) pairs into --target
    Ds,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum IndexObjective {
    Eabp,
    Ldbp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DagObjective {
    Fbp,
    Sbp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum DagFormat {
    Text,
    Dot,
}

#[derive(Args, Debug)]
struct WindowArgs {
    #[arg(long, allow_negative_numbers = true)]
    t_alpha: Time,
    #[arg(long, allow_negative_numbers = true)]
    t_omega: Time,
}

impl WindowArgs {
    fn window(&self) -> crate::Result<TimeWindow> {
        TimeWindow::new(self.t_alpha, self.t_omega)
    }
}

#[derive(Args, Debug)]
struct QueryArgs {
    #[arg(long, value_enum, required_unless_present = "dump_frontier")]
    objective: Option<Objective>,
    /// Print a frontier instead of an objective.
    #[arg(long, value_enum, conflicts_with = "objective")]
    dump_frontier: Option<FrontierKind>,
    #[arg(long)]
    graph: PathBuf,
    /// Beer file; without it there are no beer vertices.
    #[arg(long)]
    beer: Option<PathBuf>,
    #[arg(long)]
    source: Option<VertexId>,
    #[arg(long)]
    target: Option<VertexId>,
    #[command(flatten)]
    window: WindowArgs,
    /// `stream` works on any graph; `adjlist` removes dominated edges first.
    #[arg(long, default_value_t = Variant::Stream)]
    variant: Variant,
}

#[derive(Args, Debug)]
struct IndexBuildArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    beer: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct IndexQueryArgs {
    #[arg(long)]
    index: PathBuf,
    #[arg(long)]
    source: VertexId,
    #[arg(long)]
    target: VertexId,
    #[command(flatten)]
    window: WindowArgs,
    /// One 0/1 entry per beer vertex, comma separated, in beer file order.
    #[arg(long, default_value = "")]
    active: String,
    #[arg(long, value_enum)]
    objective: IndexObjective,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Where to write the DAG; stdout if omitted and no query is run.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = DagFormat::Text)]
    format: DagFormat,
    /// Run a one-to-all query on the DAG and print it.
    #[arg(long, value_enum, requires_all = ["beer", "source", "t_alpha", "t_omega"])]
    dag_objective: Option<DagObjective>,
    #[arg(long)]
    beer: Option<PathBuf>,
    #[arg(long)]
    source: Option<VertexId>,
    #[arg(long, allow_negative_numbers = true)]
    t_alpha: Option<Time>,
    #[arg(long, allow_negative_numbers = true)]
    t_omega: Option<Time>,
    /// Activation mask; all beer vertices are active if omitted.
    #[arg(long)]
    active: Option<String>,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    vertices: usize,
    #[arg(long, default_value_t = 30)]
    edges: usize,
    #[arg(long, default_value_t = 30)]
    max_time: Time,
    #[arg(long, default_value_t = 5)]
    max_lambda: Time,
    #[arg(long, default_value_t = 3)]
    beer_vertices: usize,
    #[arg(long, default_value_t = 4)]
    max_active: usize,
    /// Use exactly --vertices and --edges instead of drawing up to them.
    #[arg(long)]
    exact: bool,
    /// Remove dominated edges.
    #[arg(long)]
    prune: bool,
    /// Graph file to write; stdout if omitted.
    #[arg(long)]
    graph_out: Option<PathBuf>,
    #[arg(long)]
    beer_out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Seed range `S..E` (end exclusive).
    #[arg(long, default_value = "1..50", value_parser = parse_seed_range)]
    seeds: std::ops::Range<u64>,
    #[arg(long, default_value_t = 1)]
    instances_per_seed: usize,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Edge counts, comma separated.
    #[arg(long, default_value = "10000,20000,40000", value_delimiter = ',')]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1000)]
    vertices: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Timings are the median over this many runs.
    #[arg(long, default_value_t = 5)]
    repeats: usize,
}

fn parse_seed_range(s: &str) -> Result<std::ops::Range<u64>, String> {
    let (a, b) = s.split_once("..").ok_or("expected S..E")?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad seed `{a}`"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad seed `{b}`"))?;
    if a >= b {
        return Err("empty seed range".into());
    }
    Ok(a..b)
}

/// Failure categories, mapped to exit codes 2 and 1.
enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs the command line. Returns the process exit code: 0 on success, 2 on
/// bad usage or unreadable input, 1 when a check finds a violation.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Query(a) => query(a, out, err),
        Command::IndexBuild(a) => index_build(a),
        Command::IndexQuery(a) => index_query(a, out),
        Command::Transform(a) => transform(a, out),
        Command::Gen(a) => gen(a, out),
        Command::Check(a) => check(a, out),
        Command::Bench(a) => bench(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<TemporalGraph, Failure> {
    parse_edge_stream(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_beer(path: Option<&Path>, n: usize) -> Result<BeerConfig, Failure> {
    match path {
        None => Ok(BeerConfig::empty(n)),
        Some(p) => {
            parse_beer_config(&read(p)?, n).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
        }
    }
}

fn vertex(v: Option<VertexId>, flag: &str, n: usize) -> Result<VertexId, Failure> {
    let v = v.ok_or_else(|| Failure::Usage(format!("{flag} is required here")))?;
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n }.into());
    }
    Ok(v)
}

fn rows(out: &mut dyn Write, values: &[Time], only: Option<VertexId>) -> std::io::Result<()> {
    for (v, &t) in values.iter().enumerate() {
        if only.is_none_or(|o| o == v) {
            writeln!(out, "{v}\t{}", format_time(t))?;
        }
    }
    Ok(())
}

fn query(a: QueryArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut g = load_graph(&a.graph)?;
    let n = g.num_vertices();
    let bc = load_beer(a.beer.as_deref(), n)?;
    let w = a.window.window()?;
    if let Some(v) = a.source.into_iter().chain(a.target).find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n }.into());
    }

    if let Some(kind) = a.dump_frontier {
        let text = match kind {
            FrontierKind::Sa => nondom_paths(&g, vertex(a.source, "--source", n)?, w).to_string(),
            FrontierKind::Da => dist_nondom_paths(&g, vertex(a.source, "--source", n)?, w).to_string(),
            FrontierKind::Ds => inv_dist_nondom_paths(&g, vertex(a.target, "--target", n)?, w).to_string(),
        };
        out.write_all(text.as_bytes())?;
        return Ok(());
    }

    if a.variant == Variant::Adjlist && !g.is_dominance_free() {
        let before = g.num_edges();
        g = g.remove_dominated_edges();
        writeln!(
            err,
            "note: removed {} dominated edges for the adjlist variant",
            before - g.num_edges()
        )?;
    }
    match a.objective.expect("clap enforces --objective") {
        Objective::Eabp => {
            let x = vertex(a.source, "--source", n)?;
            rows(out, &eabp(&g, x, w, &bc, a.variant)?, a.target)?;
        }
        Objective::Ldbp => {
            let y = vertex(a.target, "--target", n)?;
            rows(out, &ldbp(&g, y, w, &bc, a.variant)?, a.source)?;
        }
        Objective::Fbp => {
            let x = vertex(a.source, "--source", n)?;
            rows(out, &fbp(&g, x, w, &bc), a.target)?;
        }
        Objective::Sbp => {
            let x = vertex(a.source, "--source", n)?;
            let y = vertex(a.target, "--target", n)?;
            writeln!(out, "{}", format_time(sbp(&g, x, y, w, &bc)))?;
        }
    }
    Ok(())
}

fn index_build(a: IndexBuildArgs) -> Outcome {
    let g = load_graph(&a.graph)?;
    let bc = load_beer(Some(&a.beer), g.num_vertices())?;
    std::fs::write(&a.out, NondomIndex::build(&g, &bc).save())?;
    Ok(())
}

fn index_query(a: IndexQueryArgs, out: &mut dyn Write) -> Outcome {
    let ix = NondomIndex::load(&read(&a.index)?)?;
    let q = Query::new(
        a.source,
        a.target,
        a.window.window()?,
        parse_activation(&a.active)?,
    );
    let value = match a.objective {
        IndexObjective::Eabp => ix.query_eabp(&q)?,
        IndexObjective::Ldbp => ix.query_ldbp(&q)?,
    };
    writeln!(out, "{}", format_time(value))?;
    Ok(())
}

fn transform(a: TransformArgs, out: &mut dyn Write) -> Outcome {
    let g = load_graph(&a.graph)?;
    let tg = TransformedGraph::build(&g);
    tg.validate(&g).map_err(Failure::Violation)?;
    let text = match a.format {
        DagFormat::Text => tg.to_text(),
        DagFormat::Dot => tg.to_dot(),
    };
    match (&a.out, a.dag_objective) {
        (Some(path), _) => std::fs::write(path, text)?,
        (None, None) => out.write_all(text.as_bytes())?,
        (None, Some(_)) => {}
    }

    let Some(objective) = a.dag_objective else {
        return Ok(());
    };
    let n = g.num_vertices();
    let bc = load_beer(a.beer.as_deref(), n)?;
    let w = TimeWindow::new(a.t_alpha.unwrap(), a.t_omega.unwrap())?;
    let x = vertex(a.source, "--source", n)?;
    let mask = match &a.active {
        Some(m) => parse_activation(m)?,
        None => vec![true; bc.len()],
    };
    let q = Query::new(x, x, w, mask);
    let values = match objective {
        DagObjective::Fbp => fbp_on_dag(&tg, &bc, &q)?,
        DagObjective::Sbp => sbp_on_dag(&tg, &bc, &q)?,
    };
    rows(out, &values, None)?;
    Ok(())
}

fn gen(a: GenArgs, out: &mut dyn Write) -> Outcome {
    let spec = InstanceSpec {
        seed: a.seed,
        vertices: a.vertices,
        edges: a.edges,
        max_time: a.max_time,
        max_lambda: a.max_lambda,
        beer: a.beer_vertices,
        max_active: a.max_active,
        prune: a.prune,
        exact: a.exact,
    };
    if a.max_time < 0 || a.max_lambda < 1 {
        return Err(Failure::Usage(
            "--max-time must be >= 0 and --max-lambda >= 1".into(),
        ));
    }
    let inst = gen_instance(&spec);
    let graph = write_edge_stream(&inst.graph);
    match &a.graph_out {
        Some(p) => std::fs::write(p, graph)?,
        None => out.write_all(graph.as_bytes())?,
    }
    if let Some(p) = &a.beer_out {
        std::fs::write(p, write_beer_config(&inst.beer))?;
    }
    Ok(())
}

fn check(a: CheckArgs, out: &mut dyn Write) -> Outcome {
    let corpus = Corpus::small(a.seeds, a.instances_per_seed);
    let reports = run_all(&corpus);
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if failed > 0 {
        return Err(Failure::Violation(format!("{failed} properties failed")));
    }
    Ok(())
}

fn median_ms(repeats: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..repeats.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn bench(a: BenchArgs, out: &mut dyn Write) -> Outcome {
    writeln!(out, "algorithm\tedges\tms")?;
    let mut stream_times = Vec::new();
    for &m in &a.sizes {
        let spec = InstanceSpec {
            seed: a.seed,
            vertices: a.vertices,
            edges: m,
            max_time: m as Time,
            max_lambda: 10,
            beer: 10,
            max_active: 50,
            prune: false,
            exact: true,
        };
        let inst = gen_instance(&spec);
        let (g, bc) = (&inst.graph, &inst.beer);
        let pruned = g.remove_dominated_edges();
        let w = TimeWindow::new(0, g.horizon_end()).unwrap();
        let mut init = vec![INF; g.num_vertices()];
        init[0] = 0;

        let t = median_ms(a.repeats, || {
            black_box(mseap_stream(g, w, &init));
        });
        stream_times.push(t);
        let timings = [
            ("mseap_stream", t),
            (
                "mseap_adjlist",
                median_ms(a.repeats, || {
                    black_box(mseap_adjlist(&pruned, w, &init).ok());
                }),
            ),
            (
                "eabp",
                median_ms(a.repeats, || {
                    black_box(eabp(g, 0, w, bc, Variant::Stream).ok());
                }),
            ),
            (
                "fbp",
                median_ms(a.repeats, || {
                    black_box(fbp(g, 0, w, bc));
                }),
            ),
            (
                "sbp",
                median_ms(a.repeats, || {
                    black_box(sbp(g, 0, 1, w, bc));
                }),
            ),
            (
                "nondom_paths",
                median_ms(a.repeats, || {
                    black_box(nondom_paths(g, 0, w));
                }),
            ),
        ];
        for (name, ms) in timings {
            writeln!(out, "{name}\t{m}\t{ms:.3}")?;
        }
    }
    for (p, s) in a.sizes.windows(2).zip(stream_times.windows(2)) {
        writeln!(
            out,
            "# mseap_stream growth {} -> {}: {:.2}x",
            p[0],
            p[1],
            s[1] / s[0].max(1e-9)
        )?;
    }
    Ok(())
}
