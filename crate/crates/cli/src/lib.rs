//! `hypercover` command-line front end.
//!
//! Vertex and edge ids are 1-based on the command line and in every
//! output; the library works 0-based.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hypercover::format::{parse_graph, parse_hypergraph, write_graph, write_hypergraph, Parsed};
use hypercover::generators::{gap_family, random_graph, random_hypergraph, random_tree, HypergraphParams};
use hypercover::{
    degeneracy, exact, greedy_cover, greedy_transversal, mighty_degeneracy_bf, neighborhood_equivalence_audit,
    strong_degeneracy, strong_degeneracy_bf, tree_domination, vc_dimension, CheckKind, DuplicatePolicy, ExactProblem,
    Graph, GraphCheck, Hypergraph, Instance, NeighborhoodKind, Seed,
};

#[derive(Debug, Parser)]
#[command(
    name = "hypercover",
    version,
    about = "Hypergraph edge covers, degeneracy peeling and tree domination"
)]
pub struct Cli {
    /// Emit JSON (the default when standard output is not a terminal).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a short human-readable table.
    #[arg(long, global = true)]
    table: bool,
    /// Reject repeated edges in input files instead of merging them.
    #[arg(long, global = true)]
    strict: bool,
    /// Seed for random generators and samplers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Input file, `-` for standard input.
    #[arg(value_name = "FILE")]
    path: Option<String>,
    /// Input file, `-` for standard input (alternative to the positional form).
    #[arg(long = "input", value_name = "FILE", conflicts_with = "path")]
    input: Option<String>,
}

impl InputArgs {
    fn source(&self) -> &str {
        self.input.as_deref().or(self.path.as_deref()).unwrap_or("-")
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance and write it in `.hg` or `.gr` format.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Degeneracy by peeling, or by exhaustive search.
    Degeneracy {
        #[arg(long, value_enum, default_value_t = DegeneracyKind::Strong)]
        kind: DegeneracyKind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Greedy edge cover with independent set certificate.
    Cover {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Greedy transversal with matching certificate (cover of the dual).
    Transversal {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Minimum (total) dominating set and maximum (open) packing of a tree.
    Dominate {
        #[arg(long, value_enum, default_value_t = Kind::Closed)]
        kind: Kind,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exact optimum by exhaustive search.
    Exact {
        #[arg(long, value_parser = parse_problem)]
        problem: ExactProblem,
        #[command(flatten)]
        input: InputArgs,
    },
    /// VC dimension by exhaustive search.
    Vc {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Check a set against a covering or packing definition.
    Verify {
        #[arg(long, value_parser = parse_verify_kind)]
        kind: VerifyKind,
        /// Comma-separated 1-based ids (edge ids for edge-cover and matching).
        #[arg(long, value_parser = parse_id_list, allow_hyphen_values = true)]
        set: IdList,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Dual hypergraph.
    Dual {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Sample subsets and audit neighborhood-hypergraph equivalences.
    Audit {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Subcommand)]
enum GenCommand {
    /// Hypergraph with mighty degeneracy 2 and strong degeneracy n - 2.
    Gap {
        #[arg(long)]
        n: usize,
    },
    /// Uniform random labelled tree.
    Tree {
        #[arg(long)]
        n: usize,
    },
    /// Random hypergraph with distinct edges.
    Hg {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "max-size")]
        max_size: usize,
        /// Do not force every vertex into an edge.
        #[arg(long)]
        no_cover: bool,
    },
    /// Erdős–Rényi random graph.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        p: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DegeneracyKind {
    Strong,
    Plain,
    MightyBf,
    StrongBf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Closed,
    Open,
}

impl From<Kind> for NeighborhoodKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Closed => NeighborhoodKind::Closed,
            Kind::Open => NeighborhoodKind::Open,
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum VerifyKind {
    Hypergraph(CheckKind),
    Graph(GraphCheck),
}

#[derive(Debug, Clone)]
struct IdList(Vec<usize>);

fn parse_problem(s: &str) -> Result<ExactProblem, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = ExactProblem::ALL.iter().map(|p| p.as_str()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_verify_kind(s: &str) -> Result<VerifyKind, String> {
    s.parse::<CheckKind>()
        .map(VerifyKind::Hypergraph)
        .or_else(|_| s.parse::<GraphCheck>().map(VerifyKind::Graph))
        .map_err(|_| {
            "expected edge-cover, independent-set, transversal, matching, dominating, \
             total-dominating, 2-packing or open-2-packing"
                .to_string()
        })
}

fn parse_id_list(s: &str) -> Result<IdList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IdList(Vec::new()));
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) => Err("ids are 1-based".to_string()),
            Ok(v) => Ok(v - 1),
            Err(_) => Err(format!("'{t}' is not an id")),
        })
        .collect::<Result<_, _>>()
        .map(IdList)
}

/// Failure of a command run: domain errors exit 1, usage errors exit 2.
enum Failure {
    Domain(String),
    Io(String),
}

impl From<hypercover::Error> for Failure {
    fn from(e: hypercover::Error) -> Self {
        Failure::Domain(format!("{}: {e}", e.name()))
    }
}

enum Output {
    Json(Value),
    Text(String),
    /// Text unless `--json` is given explicitly.
    TextOrJson(String, Value),
}

struct Context<'a> {
    policy: DuplicatePolicy,
    stdin: &'a mut dyn Read,
    stderr: &'a mut dyn Write,
}

impl Context<'_> {
    fn read(&mut self, input: &InputArgs) -> Result<String, Failure> {
        let source = input.source();
        if source == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Io(format!("cannot read standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(source).map_err(|e| Failure::Io(format!("cannot open {source}: {e}")))
        }
    }

    fn warn<T>(&mut self, parsed: Parsed<T>) -> T {
        for w in &parsed.warnings {
            let _ = writeln!(self.stderr, "warning: {w}");
        }
        parsed.value
    }

    fn hypergraph(&mut self, input: &InputArgs) -> Result<Hypergraph, Failure> {
        let text = self.read(input)?;
        let parsed = parse_hypergraph(&text, self.policy)?;
        Ok(self.warn(parsed))
    }

    fn graph(&mut self, input: &InputArgs) -> Result<Graph, Failure> {
        let text = self.read(input)?;
        let parsed = parse_graph(&text, self.policy)?;
        Ok(self.warn(parsed))
    }
}

fn one_based(ids: &[usize]) -> Vec<usize> {
    ids.iter().map(|v| v + 1).collect()
}

fn execute(command: &Command, seed: Seed, ctx: &mut Context<'_>) -> Result<Output, Failure> {
    Ok(match command {
        Command::Gen { what } => Output::Text(match *what {
            GenCommand::Gap { n } => write_hypergraph(&gap_family(n)?),
            GenCommand::Tree { n } => write_graph(&random_tree(n, seed)?),
            GenCommand::Hg {
                n,
                m,
                max_size,
                no_cover,
            } => {
                let params = HypergraphParams {
                    n,
                    m,
                    max_edge_size: max_size,
                    cover_feasible: !no_cover && max_size > 0 && m >= n.div_ceil(max_size),
                };
                write_hypergraph(&random_hypergraph(params, seed)?)
            }
            GenCommand::Graph { n, p } => write_graph(&random_graph(n, p, seed)?),
        }),
        Command::Degeneracy { kind, input } => {
            let h = ctx.hypergraph(input)?;
            let name = kind
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            Output::Json(match kind {
                DegeneracyKind::Strong | DegeneracyKind::Plain => {
                    let order = if *kind == DegeneracyKind::Strong {
                        strong_degeneracy(&h)
                    } else {
                        degeneracy(&h)
                    };
                    json!({
                        "kind": name,
                        "value": order.value,
                        "order": one_based(&order.order),
                        "step_values": order.step_values,
                    })
                }
                DegeneracyKind::MightyBf | DegeneracyKind::StrongBf => {
                    let value = if *kind == DegeneracyKind::MightyBf {
                        mighty_degeneracy_bf(&h)?
                    } else {
                        strong_degeneracy_bf(&h)?
                    };
                    json!({ "kind": name, "value": value, "order": null, "step_values": null })
                }
            })
        }
        Command::Cover { input } => {
            let h = ctx.hypergraph(input)?;
            let cert = greedy_cover(&h)?;
            Output::Json(json!({
                "cover": one_based(&cert.cover),
                "independent": one_based(&cert.independent),
                "cover_size": cert.cover.len(),
                "independent_size": cert.independent.len(),
                "per_step_edges": cert.per_step_edges,
                "bound_factor": cert.bound_factor,
                "mighty_factor": cert.mighty_factor,
                "checks": cert.checks,
            }))
        }
        Command::Transversal { input } => {
            let h = ctx.hypergraph(input)?;
            let cert = greedy_transversal(&h)?;
            Output::Json(json!({
                "transversal": one_based(&cert.transversal),
                "matching": one_based(&cert.matching),
                "transversal_size": cert.transversal.len(),
                "matching_size": cert.matching.len(),
                "bound_factor": cert.bound_factor,
                "mighty_factor": cert.mighty_factor,
                "checks": cert.checks,
            }))
        }
        Command::Dominate { kind, input } => {
            let g = ctx.graph(input)?;
            let cert = tree_domination(&g, (*kind).into())?;
            Output::Json(json!({
                "kind": cert.kind,
                "dominating": one_based(&cert.dominating),
                "packing": one_based(&cert.packing),
                "dominating_size": cert.dominating.len(),
                "packing_size": cert.packing.len(),
                "equal": cert.equal,
                "checks": cert.checks,
            }))
        }
        Command::Exact { problem, input } => {
            let result = if problem.on_graph() {
                let g = ctx.graph(input)?;
                exact(Instance::Graph(&g), *problem)?
            } else {
                let h = ctx.hypergraph(input)?;
                exact(Instance::Hypergraph(&h), *problem)?
            };
            Output::Json(json!({
                "problem": result.problem,
                "value": result.value,
                "witness": one_based(&result.witness),
                "explored": result.explored,
            }))
        }
        Command::Vc { input } => {
            let h = ctx.hypergraph(input)?;
            let vc = vc_dimension(&h)?;
            Output::Json(json!({
                "dimension": vc.dimension,
                "none_shattered": vc.none_shattered,
                "witness": {
                    "set": one_based(&vc.witness.set),
                    "shattered": vc.witness.shattered,
                    "missing_subset": vc.witness.missing_subset.as_deref().map(one_based),
                },
            }))
        }
        Command::Verify { kind, set, input } => {
            let (name, valid) = match *kind {
                VerifyKind::Hypergraph(k) => {
                    let h = ctx.hypergraph(input)?;
                    (k.as_str(), h.check(k, &set.0)?)
                }
                VerifyKind::Graph(k) => {
                    let g = ctx.graph(input)?;
                    (k.as_str(), hypercover::check_graph(&g, k, &set.0)?)
                }
            };
            Output::Json(json!({ "kind": name, "set": one_based(&set.0), "valid": valid }))
        }
        Command::Dual { input } => {
            let h = ctx.hypergraph(input)?;
            let (dual, generators) = h.dual_with_generators()?;
            Output::TextOrJson(
                write_hypergraph(&dual),
                json!({
                    "n": dual.n(),
                    "edges": dual.edges().iter().map(|e| one_based(e)).collect::<Vec<_>>(),
                    "generators": generators.iter().map(|g| one_based(g)).collect::<Vec<_>>(),
                }),
            )
        }
        Command::Audit { trials, input } => {
            let g = ctx.graph(input)?;
            let report = neighborhood_equivalence_audit(&g, *trials, seed)?;
            Output::Json(json!({
                "passed": report.passed(),
                "report": report,
            }))
        }
    })
}

fn render_table(value: &Value) -> String {
    let mut out = String::new();
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in map {
                let cell = match v {
                    Value::Object(inner) => inner
                        .iter()
                        .map(|(ik, iv)| format!("{ik}={iv}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k:<width$}  {cell}\n"));
            }
        }
        other => {
            out.push_str(&other.to_string());
            out.push('\n');
        }
    }
    out
}

/// Runs the command line `args` (program name first). `interactive`
/// selects the table format when neither `--json` nor `--table` is given.
/// Returns the process exit code.
pub fn run<I, S>(
    args: I,
    interactive: bool,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let rendered = e.render().to_string();
            let reason = rendered.lines().next().unwrap_or("invalid usage").trim();
            let _ = writeln!(stderr, "{reason}");
            return 2;
        }
    };
    let as_json = cli.json || (!cli.table && !interactive);
    let mut ctx = Context {
        policy: if cli.strict {
            DuplicatePolicy::Reject
        } else {
            DuplicatePolicy::Merge
        },
        stdin,
        stderr,
    };
    match execute(&cli.command, Seed(cli.seed), &mut ctx) {
        Ok(Output::Text(text)) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Ok(Output::TextOrJson(text, _)) if !cli.json => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Ok(Output::Json(value)) | Ok(Output::TextOrJson(_, value)) => {
            let rendered = if as_json {
                serde_json::to_string_pretty(&value).expect("JSON values serialize") + "\n"
            } else {
                render_table(&value)
            };
            let _ = stdout.write_all(rendered.as_bytes());
            0
        }
        Err(Failure::Domain(message)) | Err(Failure::Io(message)) => {
            let _ = writeln!(ctx.stderr, "error: {message}");
            1
        }
    }
}
