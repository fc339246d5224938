use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use oriented_forcing::bounds::{self, RootPolicy};
use oriented_forcing::constructions;
use oriented_forcing::families::{self, FamilySpec, Generated, OrientationPreset};
use oriented_forcing::io::{self, GraphFile};
use oriented_forcing::solver::{self, InvariantWitness, TreeCover};
use oriented_forcing::verify::{self, ScanProblem, VerifyConfig};
use oriented_forcing::{forcing, Error, Graph, OrientedGraph, VertexSet};

#[derive(Parser)]
#[command(name = "ofk", version, about = "Oriented k-forcing: simulate, solve, bound, construct, verify")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a family member as .ug, or as .dg when oriented.
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Family parameters, e.g. `6` for path, `2 3` for kbip, `8 0.5 7` for gnp.
        params: Vec<String>,
        #[arg(long, value_enum)]
        orient: Option<Orient>,
        /// Seed for `--orient random`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute an exact parameter.
    Solve {
        #[arg(value_enum)]
        problem: Problem,
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run the color change rule from a set.
    Force {
        file: PathBuf,
        /// Comma-separated vertices, e.g. `0,3,5`.
        #[arg(long, value_parser = parse_set)]
        set: VertexSet,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Print every round.
        #[arg(long)]
        trace: bool,
    },
    /// Greedy forcing sets and bound reports.
    Bound {
        #[arg(value_enum)]
        kind: BoundKind,
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// first | min-out-degree | reaching-set | auto | a root vertex.
        #[arg(long, default_value = "auto")]
        policy: String,
    },
    /// Build an orientation.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Independent set for `away-from` (default: a maximum one).
        #[arg(long, value_parser = parse_set)]
        set: Option<VertexSet>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the check catalog.
    Verify {
        /// `all` or ids such as `C1,C6`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 9)]
        tree_nmax: usize,
        #[arg(long, default_value_t = 10)]
        random_nmax: usize,
        #[arg(long, default_value_t = 60)]
        random_per_order: usize,
    },
    /// Search small graphs for counterexamples to an open lower bound.
    Scan {
        #[arg(long)]
        problem: ScanProblem,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Star,
    Kbip,
    Complete,
    GreedyTree,
    Gp,
    Gnp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Orient {
    Forward,
    Backward,
    Alternating,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Fk,
    #[value(name = "mof")]
    MinOriented,
    #[value(name = "MOF")]
    MaxOriented,
    Alpha,
    Rho,
    Treecover,
    Itcover,
    Matching,
    Mim,
    Clique,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Greedy,
    Report,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    Balanced,
    AwayFrom,
    TreeCover,
}

fn parse_set(s: &str) -> Result<VertexSet, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
    /// A must-hold check failed.
    violated: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, violated: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.cmd) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.violated { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let verification = matches!(e.downcast_ref::<Error>(), Some(Error::Verification(_)));
            ExitCode::from(if verification { 1 } else { 2 })
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<Output> {
    match cmd {
        Cmd::Gen { family, params, orient, seed, output } => gen(family, &params, orient, seed, output),
        Cmd::Solve { problem, file, k } => solve(problem, &file, k),
        Cmd::Force { file, set, k, trace } => force(&file, &set, k, trace),
        Cmd::Bound { kind, file, k, policy } => bound(kind, &file, k, &policy),
        Cmd::Construct { kind, file, k, set, output } => construct(kind, &file, k, set, output),
        Cmd::Verify { suite, nmax, seed, tree_nmax, random_nmax, random_per_order } => {
            let cfg = VerifyConfig { nmax, tree_nmax, random_nmax, random_per_order, seed };
            let report = verify::run_suite(&verify::parse_suite(&suite)?, cfg)?;
            Ok(Output {
                text: report.to_text(),
                violated: !report.passed(),
                json: serde_json::to_value(&report)?,
            })
        }
        Cmd::Scan { problem, nmax } => {
            let cfg = VerifyConfig { nmax, ..VerifyConfig::default() };
            let report = verify::scan(problem, &verify::Universe::new(cfg)?)?;
            let mut text = format!(
                "{} [{}]\nuniverse: {}\nexamined {}, satisfied {}, counterexamples {}\n",
                report.problem, report.anchor, report.universe, report.total, report.satisfied, report.counterexample_count
            );
            for r in &report.counterexamples {
                text.push_str(&format!("counterexample k={} value={} threshold={}/{}\n{}", r.k, r.value, r.threshold.num, r.threshold.den, r.graph));
            }
            text.push_str(&format!("extremal records: {}\n", report.extremal.len()));
            for r in &report.extremal {
                let edges = io::parse_ug(&r.graph)?.edges().to_vec();
                text.push_str(&format!(
                    "  n={} k={} value={} threshold={}/{} edges={:?}\n",
                    r.n, r.k, r.value, r.threshold.num, r.threshold.den, edges
                ));
            }
            text.push_str(&format!("verdict: {}\n", report.verdict));
            Ok(Output::ok(text, serde_json::to_value(&report)?))
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, name: &str) -> anyhow::Result<T>
where
    T::Err: std::fmt::Display,
{
    let raw = params.get(i).ok_or_else(|| Error::Parameter(format!("missing parameter {name}")))?;
    raw.parse::<T>()
        .map_err(|e| Error::Parameter(format!("{name} = {raw:?}: {e}")).into())
}

fn gen(family: Family, p: &[String], orient: Option<Orient>, seed: u64, output: Option<PathBuf>) -> anyhow::Result<Output> {
    let spec = match family {
        Family::Path => FamilySpec::Path { n: param(p, 0, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: param(p, 0, "n")? },
        Family::Star => FamilySpec::Star { leaves: param(p, 0, "leaves")? },
        Family::Kbip => FamilySpec::CompleteBipartite { x: param(p, 0, "x")?, y: param(p, 1, "y")? },
        Family::Complete => FamilySpec::Complete { n: param(p, 0, "n")? },
        Family::GreedyTree => FamilySpec::GreedyTree { out_degree: param(p, 0, "out_degree")?, layers: param(p, 1, "layers")? },
        Family::Gp => FamilySpec::GpGraph { p: param(p, 0, "p")? },
        Family::Gnp => FamilySpec::Gnp { n: param(p, 0, "n")?, p: param(p, 1, "p")?, seed: param(p, 2, "seed")? },
    };
    let generated = families::generate(&spec)?;
    let oriented = match (orient, generated) {
        (None, Generated::Undirected(g)) => return emit_graph(GraphFile::Undirected(g), output, json!({ "spec": spec })),
        (None, Generated::Oriented(d)) => d,
        (Some(o), gen) => {
            let g = gen.graph().clone();
            match o {
                Orient::Forward => families::orient_preset(&g, OrientationPreset::Forward),
                Orient::Backward => families::orient_preset(&g, OrientationPreset::Backward),
                Orient::Alternating => families::orient_preset(&g, OrientationPreset::Alternating),
                Orient::Random => families::random_orientation(&g, seed),
            }
        }
    };
    emit_graph(GraphFile::Oriented(oriented), output, json!({ "spec": spec }))
}

/// Writes to `output` (extension must match) or returns the text.
fn emit_graph(file: GraphFile, output: Option<PathBuf>, mut meta: Value) -> anyhow::Result<Output> {
    let (text, ext) = match &file {
        GraphFile::Undirected(g) => (io::write_ug(g), "ug"),
        GraphFile::Oriented(d) => (io::write_dg(d), "dg"),
    };
    meta["format"] = json!(ext);
    meta["text"] = json!(text);
    match output {
        None => Ok(Output::ok(text, meta)),
        Some(path) => {
            if path.extension().and_then(|e| e.to_str()) != Some(ext) {
                bail!(Error::Parameter(format!("{}: this output is a .{ext} file", path.display())));
            }
            std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
            meta["written"] = json!(path.display().to_string());
            Ok(Output::ok(format!("wrote {}\n", path.display()), meta))
        }
    }
}

fn read(path: &Path) -> anyhow::Result<GraphFile> {
    Ok(io::read_graph_file(path)?)
}

fn read_dg(path: &Path) -> anyhow::Result<OrientedGraph> {
    match read(path)? {
        GraphFile::Oriented(d) => Ok(d),
        GraphFile::Undirected(_) => bail!(Error::Parameter(format!("{}: an oriented .dg file is required", path.display()))),
    }
}

fn read_ug(path: &Path) -> anyhow::Result<Graph> {
    Ok(read(path)?.graph().clone())
}

fn solve(problem: Problem, file: &Path, k: usize) -> anyhow::Result<Output> {
    let (name, result) = match problem {
        Problem::Fk => ("F_k", serde_json::to_value(solver::min_forcing_number(&read_dg(file)?, k)?)?),
        Problem::MinOriented => ("mof_k", serde_json::to_value(solver::min_oriented_forcing(&read_ug(file)?, k)?)?),
        Problem::MaxOriented => ("MOF_k", serde_json::to_value(solver::max_oriented_forcing(&read_ug(file)?, k)?)?),
        Problem::Alpha => ("alpha", serde_json::to_value(solver::independence_number(&read_ug(file)?)?)?),
        Problem::Rho => ("rho", serde_json::to_value(solver::path_cover_number(&read_ug(file)?)?)?),
        Problem::Treecover => ("T_k", serde_json::to_value(solver::tree_cover_number(&read_ug(file)?, k)?)?),
        Problem::Itcover => ("IT_k", serde_json::to_value(solver::induced_kary_cover_number(&read_dg(file)?, k)?)?),
        Problem::Matching => ("mu", serde_json::to_value(solver::matching_number(&read_ug(file)?)?)?),
        Problem::Mim => ("mim", serde_json::to_value(solver::induced_matching_number(&read_ug(file)?)?)?),
        Problem::Clique => ("omega", serde_json::to_value(solver::clique_number(&read_ug(file)?)?)?),
    };
    let value = &result["value"];
    let value = value.get("int").unwrap_or(value);
    let uses_k = matches!(problem, Problem::Fk | Problem::MinOriented | Problem::MaxOriented | Problem::Treecover | Problem::Itcover);
    let mut text = if uses_k { format!("{name} = {value} (k = {k})\n") } else { format!("{name} = {value}\n") };
    text.push_str(&format!("witness: {}\n", result["witness"]));
    Ok(Output::ok(text, result))
}

fn force(file: &Path, set: &VertexSet, k: usize, trace: bool) -> anyhow::Result<Output> {
    let d = read_dg(file)?;
    let t = forcing::closure(&d, set, k)?;
    let complete = t.final_set.len() == d.n();
    let mut text = format!(
        "{} {}-forcing set: {} of {} vertices colored\n",
        if complete { "is a" } else { "not a" },
        k,
        t.final_set.len(),
        d.n()
    );
    if trace {
        text.push_str(&t.to_text());
    }
    let mut json = serde_json::to_value(&t)?;
    json["forcing"] = json!(complete);
    Ok(Output::ok(text, json))
}

fn parse_policy(s: &str) -> anyhow::Result<RootPolicy> {
    Ok(match s {
        "first" => RootPolicy::First,
        "min-out-degree" => RootPolicy::MinOutDegree,
        "reaching-set" => RootPolicy::ReachingSet,
        "auto" => RootPolicy::Auto,
        root => RootPolicy::Given(root.parse().map_err(|_| {
            Error::Parameter(format!("policy {root:?}: expected first, min-out-degree, reaching-set, auto or a vertex"))
        })?),
    })
}

fn bound(kind: BoundKind, file: &Path, k: usize, policy: &str) -> anyhow::Result<Output> {
    match kind {
        BoundKind::Greedy => {
            let c = bounds::greedy_forcing_set(&read_dg(file)?, k, parse_policy(policy)?)?;
            let text = format!(
                "greedy {}-forcing set {:?} of size {} <= {} = {}/{} (roots {:?}, {} repairs)\n",
                k,
                c.set,
                c.set.len(),
                c.bound_name,
                c.bound.num,
                c.bound.den,
                c.roots,
                c.repairs.len()
            );
            Ok(Output::ok(text, serde_json::to_value(&c)?))
        }
        BoundKind::Report => {
            let report = match read(file)? {
                GraphFile::Oriented(d) => bounds::lower_bound_report(&d, k)?,
                GraphFile::Undirected(g) => bounds::extremal_bound_report(&g, k)?,
            };
            let mut text = String::new();
            for e in &report.entries {
                let value = match (&e.value, e.applicable) {
                    (Some(v), true) if v.den == 1 => v.num.to_string(),
                    (Some(v), true) => format!("{}/{}", v.num, v.den),
                    _ => format!("n/a ({})", e.reason),
                };
                text.push_str(&format!("{:<6} {:?} {:<28} {:<12} {}\n", e.target, e.side, e.name, value, e.anchor));
            }
            Ok(Output::ok(text, serde_json::to_value(&report)?))
        }
    }
}

fn construct(kind: ConstructKind, file: &Path, k: usize, set: Option<VertexSet>, output: Option<PathBuf>) -> anyhow::Result<Output> {
    let g = read_ug(file)?;
    let (d, meta) = match kind {
        ConstructKind::Balanced => {
            let d = constructions::balanced_orientation(&g);
            let r = constructions::min_reaching_set(&d);
            let meta = json!({ "construction": "balanced", "reaching_set": r.roots });
            (d, meta)
        }
        ConstructKind::AwayFrom => {
            let set = match set {
                Some(s) => s,
                None => match solver::independence_number(&g)?.witness {
                    InvariantWitness::Set(s) => s,
                    _ => unreachable!("independence witness is a set"),
                },
            };
            let d = constructions::orient_away_from(&g, &set)?;
            (d, json!({ "construction": "away_from", "set": set }))
        }
        ConstructKind::TreeCover => {
            let InvariantWitness::Trees(parts) = solver::tree_cover_number(&g, k)?.witness else {
                return Err(anyhow!("tree cover witness missing"));
            };
            let built = constructions::tree_cover_orientation(&g, &TreeCover { parts }, k)?;
            let meta = json!({ "construction": "tree_cover", "k": k, "roots": built.roots });
            (built.orientation, meta)
        }
    };
    emit_graph(GraphFile::Oriented(d), output, meta)
}
