use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cwclass::certificate::{check_certificate_with, CheckOptions};
use cwclass::colouring::classify_colouring;
use cwclass::exact::{cliquewidth_with_cap, DEFAULT_VERTEX_CAP};
use cwclass::expr::parse_cwexpr_file;
use cwclass::io::{from_graph6, parse_graph_text, to_edge_list, to_graph6};
use cwclass::names::{describe, parse_name};
use cwclass::pattern::contains_induced;
use cwclass::scan::scan;
use cwclass::witnesses::{generate, FamilyId};
use cwclass::{classify_pair, classify_relation, classify_single, Error, Graph, LayeredPartition, Relation, Verdict};

/// Clique-width classification of forbidden-pattern graph classes.
///
/// Graph arguments are read as a name (`P4`, `2P1+P3`, `co(S_1_2_3)`,
/// `paw`), as graph6 (optionally prefixed `g6:`), or from a file holding an
/// edge list or graph6 (prefix the path with `@` to force file reading).
#[derive(Debug, Parser)]
#[command(name = "cwtool", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bounded/unbounded clique-width of a forbidden-pattern class.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Complexity of colouring on a class of (H1,H2)-free graphs.
    #[command(subcommand)]
    Colouring(ColouringCommand),
    /// Generate a member of a witness family.
    Witness {
        family: Family,
        /// Height or size, plus the subdivision count for `swall`.
        #[arg(required = true)]
        params: Vec<usize>,
        /// Check the induced subgraphs the family is known to avoid.
        #[arg(long)]
        verify_free: bool,
        /// Check the canonical layered partition and print the lower bound.
        #[arg(long)]
        certify: bool,
        /// Write the graph to this file instead of printing its graph6 code.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
        /// Write the canonical layered partition to this file.
        #[arg(long)]
        partition_out: Option<PathBuf>,
    },
    /// Exact clique-width and k-expressions.
    #[command(subcommand)]
    Cw(CwCommand),
    /// Check that a graph contains none of the given induced subgraphs.
    FreeCheck {
        graph: String,
        #[arg(long, num_args = 1.., required = true)]
        patterns: Vec<String>,
    },
    /// Classify every pair of non-isomorphic graphs up to a vertex count.
    Scan {
        #[arg(long, default_value_t = 7)]
        max_vertices: usize,
        /// Worker threads (defaults to one per core).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check a layered partition of a graph and print the lower bound.
    Certify {
        graph: String,
        partition: PathBuf,
        /// Accept a nonempty cell (0,0), noting that no bound follows.
        #[arg(long)]
        allow_corner: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ClassifyCommand {
    /// (H1,H2)-free graphs.
    Pair {
        h1: String,
        h2: String,
        #[arg(long)]
        json: bool,
    },
    /// H-free graphs.
    Single {
        h: String,
        #[arg(long)]
        json: bool,
    },
    /// Graphs with no member of the family as a subgraph, minor or topological minor.
    Family {
        #[arg(long, value_enum)]
        relation: RelationArg,
        #[arg(required = true)]
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ColouringCommand {
    Pair {
        h1: String,
        h2: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CwCommand {
    /// Compute the clique-width of a small graph with a witness expression.
    Exact {
        graph: String,
        /// Largest vertex count to attempt.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_n: usize,
    },
    /// Evaluate a k-expression file.
    Eval { file: PathBuf },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Wall,
    Swall,
    Grid,
    #[value(name = "thm4G")]
    Thm4G,
    #[value(name = "thm4H")]
    Thm4H,
    #[value(name = "thm5G")]
    Thm5G,
}

impl From<Family> for FamilyId {
    fn from(f: Family) -> Self {
        match f {
            Family::Wall => FamilyId::Wall,
            Family::Swall => FamilyId::SubdividedWall,
            Family::Grid => FamilyId::Grid,
            Family::Thm4G => FamilyId::LayeredBipartite,
            Family::Thm4H => FamilyId::LayeredBipartiteComplemented,
            Family::Thm5G => FamilyId::LayeredCliques,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RelationArg {
    Subgraph,
    Minor,
    Topminor,
}

impl From<RelationArg> for Relation {
    fn from(r: RelationArg) -> Self {
        match r {
            RelationArg::Subgraph => Relation::Subgraph,
            RelationArg::Minor => Relation::Minor,
            RelationArg::Topminor => Relation::TopologicalMinor,
        }
    }
}

/// What a successful command printed, and whether its answer was yes.
struct Output {
    text: String,
    positive: bool,
}

impl Output {
    fn yes(text: String) -> Self {
        Output { text, positive: true }
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Parse { .. } | Error::Hypothesis(_) => 2,
        Error::Capacity { .. } => 3,
        Error::Invariant(_) => 4,
    }
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

/// Resolves a graph argument: `@file`, `g6:code`, a name, a file, then bare graph6.
fn resolve_graph(arg: &str) -> CliResult<Graph> {
    if let Some(path) = arg.strip_prefix('@') {
        return Ok(parse_graph_text(&read_file(Path::new(path))?)?);
    }
    if let Some(code) = arg.strip_prefix("g6:") {
        return Ok(from_graph6(code)?);
    }
    let name_error = match parse_name(arg) {
        Ok(expr) => return Ok(expr.realize()),
        Err(e) => e,
    };
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(parse_graph_text(&read_file(path)?)?);
    }
    from_graph6(arg).map_err(|_| Failure::Lib(name_error))
}

fn verdict_output(v: &Verdict, json: bool) -> Output {
    let text = if json {
        serde_json::to_string(v).expect("verdicts serialize") + "\n"
    } else {
        format!("{v}\n")
    };
    Output::yes(text)
}

fn run(command: Command) -> CliResult<Output> {
    match command {
        Command::Classify(ClassifyCommand::Pair { h1, h2, json }) => {
            let v = classify_pair(&resolve_graph(&h1)?, &resolve_graph(&h2)?)?;
            Ok(verdict_output(&v, json))
        }
        Command::Classify(ClassifyCommand::Single { h, json }) => {
            Ok(verdict_output(&classify_single(&resolve_graph(&h)?), json))
        }
        Command::Classify(ClassifyCommand::Family { relation, graphs, json }) => {
            let family = graphs.iter().map(|g| resolve_graph(g)).collect::<CliResult<Vec<_>>>()?;
            Ok(verdict_output(&classify_relation(&family, relation.into())?, json))
        }
        Command::Colouring(ColouringCommand::Pair { h1, h2, json }) => {
            let v = classify_colouring(&resolve_graph(&h1)?, &resolve_graph(&h2)?)?;
            Ok(verdict_output(&v, json))
        }
        Command::Witness {
            family,
            params,
            verify_free,
            certify,
            out,
            format,
            partition_out,
        } => witness(family, &params, verify_free, certify, out.as_deref(), format, partition_out.as_deref()),
        Command::Cw(CwCommand::Exact { graph, max_n }) => {
            let g = resolve_graph(&graph)?;
            let (k, expr) = cliquewidth_with_cap(&g, max_n)?;
            Ok(Output::yes(format!("cliquewidth={k}\n{expr}\n")))
        }
        Command::Cw(CwCommand::Eval { file }) => {
            let expr = parse_cwexpr_file(&read_file(&file)?)?;
            let g = expr.eval().graph;
            Ok(Output::yes(format!(
                "width={}\nvertices={} edges={}\nname={}\ngraph6={}\n",
                expr.width(),
                g.vertex_count(),
                g.edge_count(),
                describe(&g),
                to_graph6(&g)
            )))
        }
        Command::FreeCheck { graph, patterns } => {
            let g = resolve_graph(&graph)?;
            let mut text = String::new();
            let mut free = true;
            for p in &patterns {
                let h = resolve_graph(p)?;
                free &= report_pattern(&mut text, &g, p, &h);
            }
            writeln!(text, "free={free}").unwrap();
            Ok(Output { text, positive: free })
        }
        Command::Scan { max_vertices, jobs, json } => {
            let report = scan(max_vertices, jobs)?;
            let text = if json {
                serde_json::to_string(&report).expect("reports serialize") + "\n"
            } else {
                let mut t = String::new();
                writeln!(t, "max_vertices={} graphs={} pairs={}", report.max_vertices, report.graphs, report.pairs).unwrap();
                for (status, count) in &report.status_counts {
                    writeln!(t, "status {status}={count}").unwrap();
                }
                for (rule, count) in &report.rule_counts {
                    writeln!(t, "rule {rule}={count}").unwrap();
                }
                writeln!(t, "open_pairs={}", report.open_pairs.len()).unwrap();
                for (a, b) in &report.open_pairs {
                    writeln!(t, "open ({a}, {b})").unwrap();
                }
                for v in &report.violations {
                    writeln!(t, "violation {v}").unwrap();
                }
                t
            };
            if report.violations.is_empty() {
                Ok(Output::yes(text))
            } else {
                print!("{text}");
                Err(Error::Invariant(format!("{} pairs violate the rule tables", report.violations.len())).into())
            }
        }
        Command::Certify {
            graph,
            partition,
            allow_corner,
        } => {
            let g = resolve_graph(&graph)?;
            let p = LayeredPartition::from_text(&read_file(&partition)?)?;
            let report = check_certificate_with(&g, &p, CheckOptions { allow_corner })?;
            Ok(Output {
                text: format!("{report}\n"),
                positive: report.bound.is_some(),
            })
        }
    }
}

/// Appends one line about `pattern` in `g`; returns true when it is absent.
fn report_pattern(text: &mut String, g: &Graph, name: &str, pattern: &Graph) -> bool {
    match contains_induced(g, pattern) {
        None => {
            writeln!(text, "free-of {name}: yes").unwrap();
            true
        }
        Some(emb) => {
            let at: Vec<String> = emb.mapping.iter().map(|&v| g.display_vertex(v)).collect();
            writeln!(text, "free-of {name}: no, induced copy on [{}]", at.join(", ")).unwrap();
            false
        }
    }
}

fn witness(
    family: Family,
    params: &[usize],
    verify_free: bool,
    certify: bool,
    out: Option<&Path>,
    format: Format,
    partition_out: Option<&Path>,
) -> CliResult<Output> {
    let w = generate(family.into(), params)?;
    let g = &w.graph;
    let mut text = String::new();
    let mut positive = true;
    writeln!(
        text,
        "family={:?} params={:?} vertices={} edges={} max_degree={}",
        w.family,
        w.params,
        g.vertex_count(),
        g.edge_count(),
        g.max_degree()
    )
    .unwrap();
    let encoded = match format {
        Format::Graph6 => to_graph6(g) + "\n",
        Format::Edges => to_edge_list(g),
    };
    match out {
        Some(path) => write_file(path, &encoded)?,
        None => text.push_str(&encoded),
    }
    if let Some(path) = partition_out {
        let p = w
            .partition
            .as_ref()
            .ok_or_else(|| Error::Input(format!("{:?} has no canonical layered partition", w.family)))?;
        write_file(path, &p.to_text())?;
    }
    if verify_free {
        for (name, pattern) in w.free_of.iter().zip(w.forbidden_patterns()) {
            positive &= report_pattern(&mut text, g, name, &pattern);
        }
    }
    if certify {
        let p = w
            .partition
            .as_ref()
            .ok_or_else(|| Error::Input(format!("{:?} has no canonical layered partition", w.family)))?;
        let report = check_certificate_with(g, p, CheckOptions::default())?;
        positive &= report.bound.is_some();
        writeln!(text, "{report}").unwrap();
    }
    Ok(Output { text, positive })
}
