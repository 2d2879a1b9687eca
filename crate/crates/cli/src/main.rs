mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use covpoly::atlas::{collide, crosscheck_distinctive_power, free_trees, minimal_pair_scan, simple_graphs, Fingerprint};
use covpoly::forest::{xi_hat, XI_HAT_VARS};
use covpoly::graph::{edgelist, family, graph6, FamilyKind};
use covpoly::invariants::InvariantReport;
use covpoly::specializations::{hypergraph_bivariate_chromatic, specialize, ChromaticMode, Target};
use covpoly::{Engine, EngineConfig, Error, Hypergraph, Multigraph};
use num_rational::BigRational;

const EXIT_USAGE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_NO_COLLISIONS: u8 = 5;

const REPORT_FIELDS: [&str; 14] = [
    "n", "m", "k", "c", "i", "girth", "girth_count", "simple", "min_degree", "min_degree_count", "deg1_count",
    "clique_number", "p3_count", "m1_index",
];

#[derive(Parser)]
#[command(name = "covpoly", version, about = "Covered components and edge elimination polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads for collide and verify.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,
    /// Seed for randomized verification cases.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    /// Largest vertex count whose subproblems are cached by canonical form.
    /// Overrides COVPOLY_CACHE_CAP.
    #[arg(long, global = true)]
    cache_cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// A named family member, e.g. `cycle:5` or `star:3`.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list text: header `n m`, then one edge per line. A literal `\n` also separates lines.
    #[arg(long)]
    edges: Option<String>,
    /// A file of graph6 lines; every graph in it is processed.
    #[arg(long)]
    graph6: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComputeTarget {
    Ccp,
    Eep,
    XiHat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Count,
    Recurrence,
    FromCcp,
}

#[derive(Subcommand)]
enum Command {
    /// Print a polynomial of each input graph.
    Compute {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ComputeTarget::Ccp)]
        target: ComputeTarget,
    },
    /// Evaluate named specializations.
    Specialize {
        #[command(flatten)]
        input: Input,
        /// Comma-separated targets, e.g. `chromatic,sigma`.
        #[arg(long, value_delimiter = ',', required = true)]
        which: Vec<String>,
        /// Edge survival probability for `reliability`, e.g. `1/2`.
        #[arg(long)]
        p: Option<String>,
        /// How hypergraph inputs compute `bivariate_chromatic`.
        #[arg(long, value_enum, default_value_t = Mode::FromCcp)]
        mode: Mode,
    },
    /// Report the invariants readable from the covered components polynomial.
    Invariants {
        #[command(flatten)]
        input: Input,
    },
    /// Group graphs by polynomial and list the collisions.
    Collide {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "ccp")]
        fingerprint: String,
        /// Only keep graphs with at most this many edges.
        #[arg(long)]
        max_m: Option<usize>,
        /// Report only the first collision in (n, m) order.
        #[arg(long)]
        minimal: bool,
        /// List pairs the fingerprint merges but this polynomial separates.
        #[arg(long)]
        against: Option<String>,
    },
    /// Run the cross-checking suites.
    Verify {
        #[arg(value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Swap in a known-wrong formula to see the suite fail.
        #[arg(long, value_enum)]
        mutant: Option<verify::Mutant>,
    },
    /// Write graph6 lines for enumerated graphs.
    Graphs {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_m: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// All unlabeled trees on n vertices.
    #[arg(long)]
    trees: Option<usize>,
    /// All simple graphs on n vertices.
    #[arg(long)]
    simple: Option<usize>,
    #[arg(long)]
    graph6: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedGraph6 { .. } | Error::Parse { .. } => EXIT_PARSE,
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        let mut message = e.to_string();
        if let Error::CapExceeded { what, .. } = &e {
            message.push_str(&format!("\nhint: {}", cap_hint(what)));
        }
        Failure { code, message }
    }
}

fn cap_hint(what: &str) -> &'static str {
    if what.contains("tree") {
        "tree enumeration supports 1..=14 vertices"
    } else if what.contains("generated") {
        "generate larger atlases with an external tool and pass them with --graph6"
    } else {
        "reduce the input size; enumeration oracles are exponential"
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{}: {e}", path.display()),
    })
}

enum Loaded {
    Graphs(Vec<Multigraph>),
    Hypergraph(Hypergraph),
}

fn parse_family(spec: &str) -> Result<Multigraph, Failure> {
    let (kind, n) = spec
        .split_once(':')
        .ok_or_else(|| usage(format!("family must look like kind:n, got {spec:?}")))?;
    let kind: FamilyKind = kind.parse()?;
    let n: usize = n.parse().map_err(|_| usage(format!("bad family size {n:?}")))?;
    Ok(family(kind, n)?)
}

fn load(input: &Input) -> Result<Loaded, Failure> {
    if let Some(spec) = &input.family {
        return Ok(Loaded::Graphs(vec![parse_family(spec)?]));
    }
    if let Some(text) = &input.edges {
        let h = edgelist::parse(&text.replace("\\n", "\n"))?;
        return Ok(match h.to_multigraph() {
            Some(g) => Loaded::Graphs(vec![g]),
            None => Loaded::Hypergraph(h),
        });
    }
    let path = input.graph6.as_ref().expect("clap enforces one input");
    Ok(Loaded::Graphs(graph6::decode_lines(&read(path)?)?))
}

fn load_graphs(input: &Input) -> Result<Vec<Multigraph>, Failure> {
    match load(input)? {
        Loaded::Graphs(g) => Ok(g),
        Loaded::Hypergraph(_) => Err(usage("this command needs a graph; the input has hyperedges")),
    }
}

fn source_graphs(source: &Source, max_m: Option<usize>) -> Result<Vec<Multigraph>, Failure> {
    let mut graphs = if let Some(n) = source.trees {
        free_trees(n)?
    } else if let Some(n) = source.simple {
        simple_graphs(n, max_m.unwrap_or(usize::MAX))?
    } else {
        let path = source.graph6.as_ref().expect("clap enforces one source");
        graph6::decode_lines(&read(path)?)?
    };
    if let Some(m) = max_m {
        graphs.retain(|g| g.m() <= m);
    }
    Ok(graphs)
}

fn emit(out: &mut String, cli: &Cli, json: String, text: String) {
    out.push_str(if cli.format == Format::Json { &json } else { &text });
    out.push('\n');
}

fn engine_config(cli: &Cli) -> EngineConfig {
    let mut cfg = EngineConfig::from_env();
    if let Some(cap) = cli.cache_cap {
        cfg.canonical_cache_cap = cap;
    }
    cfg
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    let cfg = engine_config(cli);
    let mut engine = Engine::new(cfg.clone());
    let mut out = String::new();
    match &cli.command {
        Command::Compute { input, target } => match load(input)? {
            Loaded::Hypergraph(h) => {
                if !matches!(target, ComputeTarget::Ccp) {
                    return Err(usage("hypergraph input supports only --target ccp"));
                }
                let p = engine.ccp_hypergraph(&h);
                emit(&mut out, cli, p.to_json(), p.to_string());
            }
            Loaded::Graphs(graphs) => {
                for g in graphs {
                    let (json, text) = match target {
                        ComputeTarget::Ccp => {
                            let p = engine.ccp(&g);
                            (p.to_json(), p.to_string())
                        }
                        ComputeTarget::Eep => {
                            let p = engine.eep(&g);
                            (p.to_json(), p.to_string())
                        }
                        ComputeTarget::XiHat => {
                            let p = xi_hat(&g)?;
                            (p.to_json_with(&XI_HAT_VARS), p.format_with(&XI_HAT_VARS))
                        }
                    };
                    emit(&mut out, cli, json, text);
                }
            }
        },
        Command::Specialize { input, which, p, mode } => {
            let targets: Vec<Target> = which.iter().map(|w| w.parse()).collect::<Result<_, _>>()?;
            let p: Option<BigRational> = match p {
                Some(s) => Some(s.parse().map_err(|_| usage(format!("bad probability {s:?}, expected a ratio like 1/2")))?),
                None => None,
            };
            match load(input)? {
                Loaded::Hypergraph(h) => {
                    if targets != [Target::BivariateChromatic] {
                        return Err(usage("hypergraph input supports only bivariate_chromatic"));
                    }
                    let mode = match mode {
                        Mode::Count => ChromaticMode::Count,
                        Mode::Recurrence => ChromaticMode::Recurrence,
                        Mode::FromCcp => ChromaticMode::FromCcp,
                    };
                    let value = hypergraph_bivariate_chromatic(&h, mode, &mut engine)?;
                    let json = serde_json::json!({
                        "bivariate_chromatic": {
                            "value": serde_json::from_str::<serde_json::Value>(&value.to_json()).unwrap(),
                            "note": Target::BivariateChromatic.note(),
                        }
                    });
                    emit(&mut out, cli, json.to_string(), format!("bivariate_chromatic: {value}"));
                }
                Loaded::Graphs(graphs) => {
                    for g in graphs {
                        let mut json = serde_json::Map::new();
                        let mut text = Vec::new();
                        for &t in &targets {
                            let r = specialize(t, &g, &mut engine, p.as_ref())?;
                            json.insert(
                                t.name().to_string(),
                                serde_json::json!({ "value": r.value.to_json(), "note": r.note }),
                            );
                            text.push(format!("{}: {}", t.name(), r.value));
                        }
                        emit(&mut out, cli, serde_json::Value::Object(json).to_string(), text.join("\n"));
                    }
                }
            }
        }
        Command::Invariants { input } => {
            for g in load_graphs(input)? {
                let report = InvariantReport::from_polynomial(&engine.ccp(&g))?;
                let value = serde_json::to_value(&report).expect("report serializes");
                let text = REPORT_FIELDS
                    .iter()
                    .map(|k| format!("{k}: {}", value[k]))
                    .collect::<Vec<_>>()
                    .join("\n");
                emit(&mut out, cli, serde_json::to_string(&report).unwrap(), text);
            }
        }
        Command::Collide {
            source,
            fingerprint,
            max_m,
            minimal,
            against,
        } => {
            let fp: Fingerprint = fingerprint.parse()?;
            let graphs = source_graphs(source, *max_m)?;
            if let Some(b) = against {
                let b: Fingerprint = b.parse()?;
                let pairs = crosscheck_distinctive_power(&graphs, fp, b, cli.workers, &cfg)?;
                let text = pairs
                    .iter()
                    .map(|(x, y)| format!("{} {}", label(x), label(y)))
                    .chain([format!("{} pairs", pairs.len())])
                    .collect::<Vec<_>>()
                    .join("\n");
                emit(&mut out, cli, serde_json::to_string_pretty(&pairs).unwrap(), text);
                let code = if pairs.is_empty() { EXIT_NO_COLLISIONS } else { 0 };
                return Ok((out, code));
            }
            if *minimal {
                let found = minimal_pair_scan(&graphs, fp, cli.workers, &cfg)?;
                let text = match &found {
                    Some(p) => format!("n = {}, m = {}: {} {}", p.n, p.m, label(&p.pair.0), label(&p.pair.1)),
                    None => "no collisions".to_string(),
                };
                emit(&mut out, cli, serde_json::to_string_pretty(&found).unwrap(), text);
                let code = if found.is_none() { EXIT_NO_COLLISIONS } else { 0 };
                return Ok((out, code));
            }
            let report = collide(&graphs, fp, cli.workers, &cfg)?;
            let mut text = report.summary_text();
            for b in &report.buckets {
                let names: Vec<String> = b.graphs.iter().map(label).collect();
                text.push_str(&format!("n = {}, m = {}: {}\n", b.n, b.m, names.join(" ")));
            }
            emit(&mut out, cli, report.to_json(), text.trim_end().to_string());
            let code = if report.buckets.is_empty() { EXIT_NO_COLLISIONS } else { 0 };
            return Ok((out, code));
        }
        Command::Verify { suite, mutant } => {
            let outcome = verify::run(*suite, *mutant, cli.seed, cli.workers, &cfg);
            let code = if outcome.passed() { 0 } else { EXIT_VERIFY };
            emit(&mut out, cli, outcome.to_json(), outcome.to_text());
            return Ok((out, code));
        }
        Command::Graphs { source, max_m } => {
            for g in source_graphs(source, *max_m)? {
                out.push_str(&graph6::encode(&g)?);
                out.push('\n');
            }
        }
    }
    Ok((out, 0))
}

fn label(g: &covpoly::atlas::GraphEntry) -> String {
    g.graph6.clone().unwrap_or_else(|| format!("{:?}", g.edges))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
