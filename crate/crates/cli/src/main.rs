//! `gangulate`: decide, count, construct, classify, place, render, census.
//!
//! Every run prints one report (JSON by default, `--plain` for key: value
//! lines), except `render`, whose output is the SVG document itself. Exit
//! codes: 0 success or angulable, 3 blocked, 2 usage or precondition
//! failure, 4 size cap exceeded.

mod census;
mod report;
mod svg;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process;
use std::time::Instant;

use clap::{Parser, Subcommand};
use gangulate_core::angulation_oracle::{count_gangulations, find_gangulation};
use gangulate_core::convex_core::{admissible_params, Instance};
use gangulate_core::decide_construct::{construct_small, decide, Verdict};
use gangulate_core::Error;
use gangulate_core::forbidden_configs::classify_forbidding;
use gangulate_core::placement::{
    place_cubic, place_cycle, place_petersen, place_two_regular, AbstractGraph, Placement,
};

use report::{
    classification_echo, edge_pairs, input_echo, witness_echo, CliReport, PlacementEcho,
};

/// Caps keeping each command at desk scale; `--max-n` or GANGULATE_MAX_N
/// replace the default for the chosen command.
const CAP_COUNT: u32 = 64;
const CAP_WITNESS: u32 = 40;
const CAP_CENSUS: u32 = 16;

#[derive(Parser)]
#[command(name = "gangulate", version, about = "Angulations of convex polygons with forbidden chords")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Replace the face size read from the instance file.
    #[arg(long, global = true, value_name = "G")]
    g_override: Option<u32>,
    /// Replace the size cap on the polygon for this command.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<u32>,
    /// Include a witness where it is optional (decide, render).
    #[arg(long, global = true)]
    witness: bool,
    /// Emit the report as JSON (the default).
    #[arg(long, global = true, conflicts_with = "plain")]
    json: bool,
    /// Emit the report as plain key: value lines.
    #[arg(long, global = true)]
    plain: bool,
    /// Seed for sampled census sweeps.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,
    /// Include wall-clock milliseconds in the report. Off by default so
    /// that identical inputs produce identical bytes.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an angulation avoiding the forbidden set exists.
    Decide { path: PathBuf },
    /// Count the angulations avoiding the forbidden set.
    Count { path: PathBuf },
    /// Build a witness angulation.
    Construct { path: PathBuf },
    /// Recognize the forbidden set within the blocking-family taxonomy.
    Classify { path: PathBuf },
    /// Place an abstract graph on polygon vertices so that the remaining
    /// edges still admit an angulation.
    ///
    /// Kinds and their parameters: `cycle n=<N> g=<G>`,
    /// `two-regular <graph-file> g=<G>`, `petersen n=<N> k=<K> g=<G>`,
    /// `cubic <graph-file>` (face size fixed at 4).
    Place {
        /// cycle | two-regular | petersen | cubic
        kind: String,
        /// `key=value` parameters and graph file paths, per kind.
        args: Vec<String>,
    },
    /// Render the instance (and optionally a witness) as SVG.
    Render {
        path: PathBuf,
        /// Write the SVG here instead of standard output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Sweep chord subsets of the `n`-gon and tabulate oracle verdicts
    /// against taxonomy classes.
    Census {
        n: u32,
        g: u32,
        /// Smallest subset size to visit.
        #[arg(long, default_value_t = 0)]
        min_size: u32,
        /// Largest subset size to visit; default n - 1.
        #[arg(long)]
        max_size: Option<u32>,
        /// Draw this many random subsets per size instead of exhausting.
        #[arg(long, value_name = "K")]
        sample: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    SizeCap(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Self::Usage(_) => 2,
            Self::SizeCap(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::SizeCap(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(code) => process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            process::exit(f.code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let started = Instant::now();
    let (mut rep, code) = match &cli.command {
        Command::Decide { path } => cmd_decide(path, &cli)?,
        Command::Count { path } => cmd_count(path, &cli)?,
        Command::Construct { path } => cmd_construct(path, &cli)?,
        Command::Classify { path } => cmd_classify(path, &cli)?,
        Command::Place { kind, args } => cmd_place(kind, args, &cli)?,
        Command::Render { path, out } => return cmd_render(path, out.as_deref(), &cli),
        Command::Census { n, g, min_size, max_size, sample } => {
            cmd_census(*n, *g, *min_size, *max_size, *sample, &cli)?
        }
    };
    if cli.timing {
        rep.timing_ms = Some(started.elapsed().as_millis());
    }
    let text = if cli.plain { rep.to_plain() } else { rep.to_json() };
    print!("{text}");
    Ok(code)
}

/// Applies the size cap: the override flag wins, then the environment
/// variable, then the per-command default.
fn check_cap(n: u32, default_cap: u32, cli: &Cli) -> Result<(), Failure> {
    let cap = cli
        .max_n
        .or_else(|| std::env::var("GANGULATE_MAX_N").ok()?.parse().ok())
        .unwrap_or(default_cap);
    if n > cap {
        return Err(Failure::SizeCap(format!(
            "n = {n} exceeds the size cap {cap}; raise it with --max-n or GANGULATE_MAX_N"
        )));
    }
    Ok(())
}

fn load_instance(path: &Path, cli: &Cli) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let inst = Instance::parse(&text)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    match cli.g_override {
        None => Ok(inst),
        Some(g) => Instance::new(inst.n(), g, inst.forbidden().iter().copied())
            .map_err(|e| Failure::Usage(format!("--g-override {g}: {e}"))),
    }
}

fn cmd_decide(path: &Path, cli: &Cli) -> Result<(CliReport, i32), Failure> {
    let inst = load_instance(path, cli)?;
    check_cap(inst.n(), CAP_WITNESS, cli)?;
    let decision = decide(&inst).map_err(usage)?;
    let mut rep = CliReport::new("decide");
    rep.input = Some(input_echo(&path.display().to_string(), &inst));
    rep.method = Some(decision.method.to_string());
    match decision.verdict {
        Verdict::Angulable(w) => {
            rep.verdict = Some("angulable".into());
            if cli.witness {
                rep.witness = Some(witness_echo(&w));
            }
            Ok((rep, 0))
        }
        Verdict::Blocked(class) => {
            rep.verdict = Some("blocked".into());
            if let Some(c) = class {
                rep.classification = Some(classification_echo(&c));
            }
            Ok((rep, 3))
        }
    }
}

fn cmd_count(path: &Path, cli: &Cli) -> Result<(CliReport, i32), Failure> {
    let inst = load_instance(path, cli)?;
    check_cap(inst.n(), CAP_COUNT, cli)?;
    let count = count_gangulations(&inst);
    let mut rep = CliReport::new("count");
    rep.input = Some(input_echo(&path.display().to_string(), &inst));
    rep.count = Some(count.to_string());
    Ok((rep, 0))
}

fn cmd_construct(path: &Path, cli: &Cli) -> Result<(CliReport, i32), Failure> {
    let inst = load_instance(path, cli)?;
    check_cap(inst.n(), CAP_WITNESS, cli)?;
    let mut rep = CliReport::new("construct");
    rep.input = Some(input_echo(&path.display().to_string(), &inst));
    let in_budget = inst.forbidden_len() <= inst.n() - inst.g()
        && !inst.has_forbidden_boundary_edge();
    let (witness, method) = if in_budget {
        (Some(construct_small(&inst).map_err(usage)?), "construction")
    } else {
        (find_gangulation(&inst), "oracle-fallback")
    };
    rep.method = Some(method.into());
    match witness {
        Some(w) => {
            rep.verdict = Some("angulable".into());
            rep.witness = Some(witness_echo(&w));
            Ok((rep, 0))
        }
        None => {
            rep.verdict = Some("blocked".into());
            Ok((rep, 3))
        }
    }
}

fn cmd_classify(path: &Path, cli: &Cli) -> Result<(CliReport, i32), Failure> {
    let inst = load_instance(path, cli)?;
    check_cap(inst.n(), CAP_WITNESS, cli)?;
    let c = classify_forbidding(&inst).map_err(usage)?;
    let mut rep = CliReport::new("classify");
    rep.input = Some(input_echo(&path.display().to_string(), &inst));
    rep.classification = Some(classification_echo(&c));
    Ok((rep, 0))
}

/// Splits place arguments into `key=value` pairs and bare file paths.
fn split_place_args(args: &[String]) -> (BTreeMap<String, String>, Vec<String>) {
    let mut kv = BTreeMap::new();
    let mut bare = Vec::new();
    for a in args {
        match a.split_once('=') {
            Some((k, v)) => {
                kv.insert(k.to_string(), v.to_string());
            }
            None => bare.push(a.clone()),
        }
    }
    (kv, bare)
}

fn numeric(kv: &BTreeMap<String, String>, key: &str) -> Result<u32, Failure> {
    let raw = kv
        .get(key)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {key}=<value>")))?;
    raw.parse()
        .map_err(|_| Failure::Usage(format!("parameter {key}={raw} is not a number")))
}

fn expect_keys(kv: &BTreeMap<String, String>, allowed: &[&str]) -> Result<(), Failure> {
    for k in kv.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Failure::Usage(format!("unknown parameter {k}=")));
        }
    }
    Ok(())
}

fn load_graph(bare: &[String]) -> Result<(AbstractGraph, String), Failure> {
    let path = match bare {
        [p] => p,
        [] => return Err(Failure::Usage("missing graph file path".into())),
        _ => return Err(Failure::Usage("more than one graph file path".into())),
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let graph = AbstractGraph::parse(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok((graph, path.clone()))
}

fn cmd_place(kind: &str, args: &[String], cli: &Cli) -> Result<(CliReport, i32), Failure> {
    let (kv, bare) = split_place_args(args);
    let mut params: BTreeMap<String, String> = kv.clone();
    let placed: Result<Placement, Error> = match kind {
        "cycle" => {
            expect_keys(&kv, &["n", "g"])?;
            if !bare.is_empty() {
                return Err(Failure::Usage("cycle takes only n= and g=".into()));
            }
            let n = numeric(&kv, "n")?;
            let g = numeric(&kv, "g")?;
            check_cap(n, CAP_WITNESS, cli)?;
            place_cycle(n, g)
        }
        "two-regular" => {
            expect_keys(&kv, &["g"])?;
            let g = numeric(&kv, "g")?;
            let (graph, path) = load_graph(&bare)?;
            params.insert("path".into(), path);
            check_cap(graph.n(), CAP_WITNESS, cli)?;
            place_two_regular(&graph, g)
        }
        "petersen" => {
            expect_keys(&kv, &["n", "k", "g"])?;
            if !bare.is_empty() {
                return Err(Failure::Usage("petersen takes only n=, k=, g=".into()));
            }
            let n = numeric(&kv, "n")?;
            let k = numeric(&kv, "k")?;
            let g = numeric(&kv, "g")?;
            check_cap(2 * n, CAP_WITNESS, cli)?;
            place_petersen(n, k, g)
        }
        "cubic" => {
            expect_keys(&kv, &["g"])?;
            if let Some(g) = kv.get("g") {
                if g != "4" {
                    return Err(Failure::Usage(
                        "cubic placements support only g=4".into(),
                    ));
                }
            }
            let (graph, path) = load_graph(&bare)?;
            params.insert("path".into(), path);
            check_cap(graph.n(), CAP_WITNESS, cli)?;
            place_cubic(&graph)
        }
        other => {
            return Err(Failure::Usage(format!(
                "unknown placement kind {other}; expected cycle, two-regular, petersen, or cubic"
            )))
        }
    };
    let mut rep = CliReport::new("place");
    match placed {
        Ok(p) => {
            let placed_edges: Vec<_> = p.target.forbidden().iter().copied().collect();
            rep.placement = Some(PlacementEcho {
                kind: kind.to_string(),
                params,
                n: p.target.n(),
                g: p.target.g(),
                map: p.map.clone(),
                placed: edge_pairs(&placed_edges),
            });
            rep.verdict = Some("angulable".into());
            rep.witness = Some(witness_echo(&p.witness));
            Ok((rep, 0))
        }
        Err(Error::NotPotentiallyAngulable(why)) => {
            rep.placement = Some(PlacementEcho {
                kind: kind.to_string(),
                params,
                n: 0,
                g: 0,
                map: Vec::new(),
                placed: Vec::new(),
            });
            rep.verdict = Some("blocked".into());
            rep.message = Some(why);
            Ok((rep, 3))
        }
        Err(e) => Err(usage(e)),
    }
}

fn cmd_render(path: &Path, out: Option<&Path>, cli: &Cli) -> Result<i32, Failure> {
    let inst = load_instance(path, cli)?;
    check_cap(inst.n(), CAP_WITNESS, cli)?;
    let witness = if cli.witness { find_gangulation(&inst) } else { None };
    let svg = svg::render(&inst, witness.as_ref());
    match out {
        Some(target) => fs::write(target, svg)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", target.display())))?,
        None => print!("{svg}"),
    }
    Ok(0)
}

fn cmd_census(
    n: u32,
    g: u32,
    min_size: u32,
    max_size: Option<u32>,
    sample: Option<u64>,
    cli: &Cli,
) -> Result<(CliReport, i32), Failure> {
    check_cap(n, CAP_CENSUS, cli)?;
    if !admissible_params(n, g) {
        return Err(Failure::Usage(format!(
            "no angulation parameters: g - 2 must divide n - g (n={n}, g={g})"
        )));
    }
    let max_size = max_size.unwrap_or(n.saturating_sub(1));
    let echo = census::run_census(n, g, min_size, max_size, sample, cli.seed).map_err(usage)?;
    let mut rep = CliReport::new("census");
    rep.census = Some(echo);
    Ok((rep, 0))
}
