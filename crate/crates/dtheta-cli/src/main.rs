//! `dtheta`: exact matching-polynomial computations on small graphs.
//!
//! Graphs are given as a graph6 literal, a path to a file whose first
//! non-blank line is graph6, or an inline JSON object
//! `{"n": 4, "edges": [[0,1],[2,3]]}`. Theta values are given as `p/q`
//! (a rational, e.g. `1/1` or `-3/2`) or as
//! `poly:[c0,c1,...];interval:lo,hi` (the root of the integer polynomial
//! with those low-to-high coefficients isolated by the open interval).
//!
//! Exit codes: 0 on success, 1 on domain errors (and on `verify` runs that
//! record at least one failing property), 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dtheta::corpus::CorpusSpec;
use dtheta::graph::Graph;
use dtheta::matching::{matching_polynomial, MatchPolyCache, ThetaCache};
use dtheta::operators::{d_graph, d_r_graph, s_graph, DGraphBundle};
use dtheta::poly::{parse_coeff_list, parse_rational};
use dtheta::tutte::{maximal_nice_sets, nice_matching};
use dtheta::verify::{explore_iterated_d, run_suite, Caps, PropertyReport, Status};
use dtheta::{decomposition, graph6, AlgebraicNumber, VertexSet};

#[derive(Parser)]
#[command(
    name = "dtheta",
    version,
    about = "Exact matching-polynomial multiplicities, vertex decompositions, \
             multiplicity-shift operators, certified set families, and a batch \
             property-verification harness"
)]
struct Cli {
    /// Largest vertex count accepted for any input graph.
    #[arg(long, global = true, env = "DTHETA_MAX_N", default_value_t = 64)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matching polynomial as a low-to-high coefficient list.
    Mu { graph: String },
    /// Print the multiplicity of theta as a root of the matching polynomial.
    Mult {
        graph: String,
        #[arg(long)]
        theta: String,
    },
    /// Print the class (essential, neutral, positive) of every vertex.
    Classify {
        graph: String,
        #[arg(long)]
        theta: String,
    },
    /// Print the vertex decomposition at theta: B/A/N/P and the critical
    /// and root-free components hanging below A.
    Decompose {
        graph: String,
        #[arg(long)]
        theta: String,
    },
    /// Print a pair-deletion shift graph: edges join pairs whose joint
    /// deletion shifts the multiplicity by r (with --r), the full bundle
    /// (with --all), or the union over nonpositive shifts (default).
    Dgraph {
        graph: String,
        #[arg(long)]
        theta: String,
        /// One shift in -2..=2.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all")]
        r: Option<i32>,
        /// Emit every shift graph plus the nonpositive union and its
        /// complement.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Print the supergraph that joins every special vertex to all others.
    Sgraph {
        graph: String,
        #[arg(long)]
        theta: String,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Print every maximal nice set (maximal clique of the +2 shift graph
    /// with more than one vertex) as a JSON list of vertex lists.
    NiceSets {
        graph: String,
        #[arg(long)]
        theta: String,
    },
    /// Build the certified matching for one nice set: pairs, the matched
    /// neighbor set, and per-subset multiplicity certificates.
    NiceMatching {
        graph: String,
        #[arg(long)]
        theta: String,
        /// Comma-separated vertices of the nice set, e.g. 1,3,5.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Run the property suite over a corpus; exits 0 only if no property
    /// instance fails (premise and cap skips are allowed).
    Verify {
        /// graph6 file path, `gen:n=8,p=0.4,seed=7,count=500`, or
        /// `exhaustive:n=6`.
        #[arg(long)]
        corpus: String,
        /// Comma-separated property names (default: all).
        #[arg(long, value_delimiter = ',')]
        props: Vec<String>,
        /// Write the full report array to this file as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Iterate the nonpositive-shift operator three times per (graph,
    /// theta) and report convergence; informational, never fails.
    Explore {
        /// graph6 file path, `gen:...`, or `exhaustive:n=...` as for verify.
        #[arg(long)]
        corpus: String,
        /// Write the full report array to this file as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let max_n = cli.max_n;
    match cli.command {
        Command::Mu { graph } => {
            let g = load_graph(&graph, max_n)?;
            let mu = matching_polynomial(&g.view(), &mut MatchPolyCache::new());
            println!("{mu}");
        }
        Command::Mult { graph, theta } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            println!("{}", cache.mult(&g.view()));
        }
        Command::Classify { graph, theta } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            let d = decomposition(&g, &mut cache);
            let classes: Vec<&str> = (0..g.n())
                .map(|v| match d.class(v) {
                    dtheta::VertexClass::Essential => "essential",
                    dtheta::VertexClass::Neutral => "neutral",
                    dtheta::VertexClass::Positive => "positive",
                })
                .collect();
            print_json(&json!({"classes": classes, "mult": d.base_mult()}));
        }
        Command::Decompose { graph, theta } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            let d = decomposition(&g, &mut cache);
            let sets = |xs: &[VertexSet]| -> Vec<Vec<usize>> {
                xs.iter().map(VertexSet::to_vec).collect()
            };
            print_json(&json!({
                "B": d.essential().to_vec(),
                "A": d.special().to_vec(),
                "N": d.neutral_rest().to_vec(),
                "P": d.positive_rest().to_vec(),
                "criticals": sets(d.criticals()),
                "rootfree": sets(d.rootfree()),
                "mult": d.base_mult(),
            }));
        }
        Command::Dgraph {
            graph,
            theta,
            r,
            all,
            format,
        } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            if all {
                let bundle = DGraphBundle::build(&g.view(), &mut cache);
                let mut out = serde_json::Map::new();
                for r in -2..=2 {
                    out.insert(r.to_string(), graph_value(bundle.by_r(r), format));
                }
                out.insert("d_theta".into(), graph_value(bundle.d_theta(), format));
                out.insert("g_plus".into(), graph_value(bundle.g_plus(), format));
                print_json(&Value::Object(out));
            } else if let Some(r) = r {
                if !(-2..=2).contains(&r) {
                    return Err(format!("--r must lie in -2..=2, got {r}"));
                }
                print_graph(&d_r_graph(&g.view(), &mut cache, r), format);
            } else {
                print_graph(&d_graph(&g.view(), &mut cache), format);
            }
        }
        Command::Sgraph {
            graph,
            theta,
            format,
        } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            let d = decomposition(&g, &mut cache);
            print_graph(&s_graph(&g, &d), format);
        }
        Command::NiceSets { graph, theta } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            let sets: Vec<Vec<usize>> = maximal_nice_sets(&g.view(), &mut cache)
                .iter()
                .map(VertexSet::to_vec)
                .collect();
            print_json(&json!(sets));
        }
        Command::NiceMatching { graph, theta, set } => {
            let g = load_graph(&graph, max_n)?;
            let theta = parse_theta(&theta)?;
            let mut cache = ThetaCache::new(&g, theta);
            for &v in &set {
                if v >= g.n() {
                    return Err(format!("set vertex {v} is out of range for n = {}", g.n()));
                }
            }
            let x = VertexSet::from_vertices(g.n(), &set);
            let result = nice_matching(&g.view(), &mut cache, &x).map_err(|e| e.to_string())?;
            print_json(&result.to_json());
        }
        Command::Verify {
            corpus,
            props,
            json: json_path,
        } => {
            let spec = CorpusSpec::parse(&corpus).map_err(|e| e.to_string())?;
            let selection = if props.is_empty() {
                None
            } else {
                Some(props.as_slice())
            };
            let reports = run_suite(&spec, selection, &Caps::default(), max_n)
                .map_err(|e| e.to_string())?;
            finish_reports(&reports, json_path.as_deref())?;
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Explore {
            corpus,
            json: json_path,
        } => {
            let spec = CorpusSpec::parse(&corpus).map_err(|e| e.to_string())?;
            let reports = explore_iterated_d(&spec, &Caps::default(), max_n)
                .map_err(|e| e.to_string())?;
            finish_reports(&reports, json_path.as_deref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Stdout gets a one-line status summary; the full report array goes to
/// the --json file when one was given.
fn finish_reports(reports: &[PropertyReport], json_path: Option<&Path>) -> Result<(), String> {
    if let Some(path) = json_path {
        let value = dtheta::reports_to_json(reports);
        let mut file = std::fs::File::create(path)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        let text = serde_json::to_string_pretty(&value).expect("reports serialize");
        file.write_all(text.as_bytes())
            .and_then(|_| file.write_all(b"\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    let count = |status: Status| reports.iter().filter(|r| r.status == status).count();
    print_json(&json!({
        "cap_skipped": count(Status::CapSkipped),
        "fail": count(Status::Fail),
        "pass": count(Status::Pass),
        "premise_skipped": count(Status::PremiseSkipped),
        "reports": reports.len(),
    }));
    Ok(())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("values serialize"));
}

fn graph_value(g: &Graph, format: Format) -> Value {
    match format {
        Format::Graph6 => Value::String(graph6::encode(g)),
        Format::Json => {
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
            json!({"edges": edges, "n": g.n()})
        }
    }
}

fn print_graph(g: &Graph, format: Format) {
    match format {
        Format::Graph6 => println!("{}", graph6::encode(g)),
        Format::Json => print_json(&graph_value(g, Format::Json)),
    }
}

/// A graph argument is a readable file (first non-blank line is graph6),
/// an inline JSON object, or a graph6 literal.
fn load_graph(arg: &str, max_n: usize) -> Result<Graph, String> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| format!("cannot read {arg}: {e}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| format!("{arg} holds no graph6 line"))?;
        return graph6::decode(line, max_n).map_err(|e| format!("{arg}: {e}"));
    }
    let trimmed = arg.trim();
    if trimmed.starts_with('{') {
        return graph_from_json(trimmed, max_n);
    }
    graph6::decode(trimmed, max_n).map_err(|e| e.to_string())
}

fn graph_from_json(text: &str, max_n: usize) -> Result<Graph, String> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| format!("bad graph JSON: {e}"))?;
    let n = value
        .get("n")
        .and_then(Value::as_u64)
        .ok_or("graph JSON needs a nonnegative integer field \"n\"")? as usize;
    if n > max_n {
        return Err(format!("graph has {n} vertices, over the cap {max_n}"));
    }
    let edges_value = value
        .get("edges")
        .and_then(Value::as_array)
        .ok_or("graph JSON needs an array field \"edges\"")?;
    let mut edges = Vec::with_capacity(edges_value.len());
    for (i, pair) in edges_value.iter().enumerate() {
        let ends = pair
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| format!("edge {i} is not a two-element array"))?;
        let u = ends[0]
            .as_u64()
            .ok_or_else(|| format!("edge {i} has a bad first endpoint"))? as usize;
        let v = ends[1]
            .as_u64()
            .ok_or_else(|| format!("edge {i} has a bad second endpoint"))? as usize;
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

/// `p/q`, a bare integer, or `poly:[c0,c1,...];interval:lo,hi`.
fn parse_theta(spec: &str) -> Result<AlgebraicNumber, String> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("poly:") {
        let split_at = rest
            .find(';')
            .ok_or_else(|| theta_error(spec, spec.len(), "missing `;interval:lo,hi` part"))?;
        let (poly_text, tail) = rest.split_at(split_at);
        let poly = parse_coeff_list(poly_text)
            .map_err(|e| theta_error(spec, 5, &e))?;
        let interval = tail
            .strip_prefix(";interval:")
            .ok_or_else(|| {
                theta_error(spec, 5 + split_at, "expected `;interval:lo,hi` after the polynomial")
            })?;
        let comma = interval
            .find(',')
            .ok_or_else(|| theta_error(spec, spec.len(), "interval needs two endpoints"))?;
        let lo_text = &interval[..comma];
        let hi_text = &interval[comma + 1..];
        let lo_pos = spec.len() - interval.len();
        let lo = parse_rational(lo_text).map_err(|e| theta_error(spec, lo_pos, &e))?;
        let hi = parse_rational(hi_text)
            .map_err(|e| theta_error(spec, lo_pos + comma + 1, &e))?;
        return AlgebraicNumber::from_defpoly_interval(&poly, lo, hi)
            .map_err(|e| theta_error(spec, 0, &e.to_string()));
    }
    let r = parse_rational(spec).map_err(|e| theta_error(spec, 0, &e))?;
    Ok(AlgebraicNumber::from_rational(r))
}

fn theta_error(spec: &str, position: usize, message: &str) -> String {
    format!("theta spec {spec:?}, at byte {position}: {message}")
}
