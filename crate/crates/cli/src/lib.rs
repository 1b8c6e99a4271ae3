//! Command-line front end. [`run`] takes the argument list and output
//! streams and returns the process exit code:
//! 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use heawood_core::autgroup::automorphisms;
use heawood_core::certify::certify_heawood;
use heawood_core::cycles::{cycle_census, disjoint_six_cycle_pairs, enumerate_cycles};
use heawood_core::family::{k7_delta_y_descendants, k7_family};
use heawood_core::graph::{complete_graph, cycle_graph, heawood, petersen, Graph};
use heawood_core::iso::are_isomorphic;
use heawood_core::lemmas::{
    check_disjoint_pair_configuration, check_distance_three_pair, check_hamiltonian_chord_pattern,
    check_twelve_cycle_complement, distance_three_pairs, LemmaVerdict,
};
use heawood_core::orbits::{orbit_partition, FamilyKind};
use heawood_core::zeon::zeon_census;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable holding the default worker thread count.
pub const THREADS_ENV: &str = "HEAWOOD_THREADS";

#[derive(Debug, Parser)]
#[command(name = "heawood", version, about = "Cycle structure analysis for small graphs")]
pub struct Cli {
    /// Worker threads (0 = one per core)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Emit JSON instead of text; with a path, write it to that file
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH")]
    json: Option<Option<PathBuf>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cycle counts and listings
    Cycles {
        #[command(subcommand)]
        action: CyclesAction,
    },
    /// Vertex-disjoint cycle pairs
    Pairs {
        #[command(subcommand)]
        action: PairsAction,
    },
    /// Automorphism group order and generators
    Aut {
        #[arg(long, default_value = "heawood")]
        graph: String,
    },
    /// Orbits of the automorphism group on a cycle family
    Orbits {
        #[arg(long, default_value = "heawood")]
        graph: String,
        /// Cycle length (6, 8, ...) or `pairs6`
        #[arg(long)]
        family: String,
    },
    /// Structural verifiers over their full instance families
    Lemmas {
        which: LemmaChoice,
        #[arg(long, default_value = "heawood")]
        graph: String,
    },
    /// Graph families generated by exchanges
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Full certification report
    Verify {
        #[arg(default_value = "heawood")]
        graph: String,
    },
    /// Export a graph for external tools
    Export {
        #[command(subcommand)]
        action: ExportAction,
    },
}

#[derive(Debug, Subcommand)]
enum CyclesAction {
    /// Number of cycles of every length
    Count {
        #[arg(long, default_value = "heawood")]
        graph: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// All cycles of one length in canonical form
    List {
        #[arg(long, default_value = "heawood")]
        graph: String,
        #[arg(long)]
        length: usize,
    },
}

#[derive(Debug, Subcommand)]
enum PairsAction {
    /// Unordered pairs of vertex-disjoint 6-cycles
    Disjoint6 {
        #[arg(long, default_value = "heawood")]
        graph: String,
    },
}

#[derive(Debug, Subcommand)]
enum FamilyAction {
    /// Closure of K7 under delta-wye and wye-delta exchanges
    K7 {
        /// Only follow delta-wye moves
        #[arg(long)]
        delta_y_only: bool,
    },
}

#[derive(Debug, Subcommand)]
enum ExportAction {
    /// Graphviz DOT
    Dot {
        #[arg(long, default_value = "heawood")]
        graph: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Dfs,
    Zeon,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LemmaChoice {
    Chords,
    Complement,
    Distance3,
    Pairconfig,
}

/// Failure modes of a command. `Usage` maps to exit code 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Usage(e.to_string())
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: serde_json::Value) -> Output {
        Output { text, json, code: EXIT_OK }
    }

    fn with_status(mut self, pass: bool) -> Output {
        if !pass {
            self.code = EXIT_CHECK_FAILED;
        }
        self
    }
}

/// Resolve a graph argument: `heawood`, `petersen`, `kN`, `cN`, or `@path`
/// to an edge-list file.
pub fn load_graph(spec: &str) -> Result<Graph, String> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
        return Graph::from_edge_list(&text).map_err(|e| format!("{path}: {e}"));
    }
    let lower = spec.to_ascii_lowercase();
    match lower.as_str() {
        "heawood" => return Ok(heawood()),
        "petersen" => return Ok(petersen()),
        _ => {}
    }
    let sized = |prefix: &str| lower.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok());
    if let Some(n) = sized("k") {
        return complete_graph(n).map_err(|e| e.to_string());
    }
    if let Some(n) = sized("c") {
        return cycle_graph(n).map_err(|e| e.to_string());
    }
    Err(format!(
        "unknown graph {spec:?}; expected heawood, petersen, kN, cN or @path"
    ))
}

fn graph_arg(spec: &str) -> Result<Graph, Failure> {
    load_graph(spec).map_err(Failure::Usage)
}

fn parse_family(family: &str) -> Result<FamilyKind, Failure> {
    if family.eq_ignore_ascii_case("pairs6") {
        return Ok(FamilyKind::DisjointSixCyclePairs);
    }
    family
        .parse::<usize>()
        .map(FamilyKind::Cycles)
        .map_err(|_| Failure::Usage(format!("unknown family {family:?}; expected a cycle length or pairs6")))
}

fn cycles_count(graph: &str, method: Method) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let dfs = matches!(method, Method::Dfs | Method::Both).then(|| cycle_census(&g));
    let zeon = match method {
        Method::Zeon | Method::Both => Some(zeon_census(&g)?),
        Method::Dfs => None,
    };
    let mut lengths: Vec<usize> = dfs.iter().chain(zeon.iter()).flat_map(|m| m.keys().copied()).collect();
    lengths.sort_unstable();
    lengths.dedup();
    let agree = match (&dfs, &zeon) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };

    let mut text = String::new();
    let show = |m: &Option<std::collections::BTreeMap<usize, u64>>, k: usize| {
        m.as_ref().map(|m| m.get(&k).copied().unwrap_or(0))
    };
    let _ = writeln!(text, "{:>6} {:>8} {:>8} {:>6}", "length", "dfs", "zeon", "agree");
    let mut rows = Vec::new();
    for &k in &lengths {
        let (a, b) = (show(&dfs, k), show(&zeon, k));
        let row_agree = match (a, b) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        };
        let cell = |x: Option<u64>| x.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            text,
            "{:>6} {:>8} {:>8} {:>6}",
            k,
            cell(a),
            cell(b),
            row_agree.map_or("-", |x| if x { "yes" } else { "NO" })
        );
        rows.push(json!({ "length": k, "dfs": a, "zeon": b, "agree": row_agree }));
    }
    if let Some(agree) = agree {
        let _ = writeln!(text, "methods agree: {}", if agree { "yes" } else { "no" });
    }
    let json = json!({ "census": rows, "methods_agree": agree });
    Ok(Output::ok(text, json).with_status(agree.unwrap_or(true)))
}

fn cycles_list(graph: &str, length: usize) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let cycles = enumerate_cycles(&g, length)?;
    let mut text = String::new();
    for c in &cycles {
        let _ = writeln!(text, "{c}");
    }
    let _ = writeln!(text, "{} cycles of length {length}", cycles.len());
    let json = json!({ "length": length, "count": cycles.len(), "cycles": cycles });
    Ok(Output::ok(text, json))
}

fn pairs_disjoint6(graph: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let pairs = disjoint_six_cycle_pairs(&g);
    let mut text = String::new();
    for p in &pairs {
        let _ = writeln!(text, "{p}");
    }
    let _ = writeln!(text, "{} disjoint 6-cycle pairs", pairs.len());
    let json = json!({ "count": pairs.len(), "pairs": pairs });
    Ok(Output::ok(text, json))
}

fn aut(graph: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let group = automorphisms(&g);
    let mut text = format!("order {}\ngenerators:\n", group.order());
    for s in group.generators() {
        let _ = writeln!(text, "  {s}");
    }
    Ok(Output::ok(text, serde_json::to_value(group.summary())?))
}

fn orbits(graph: &str, family: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let kind = parse_family(family)?;
    let group = automorphisms(&g);
    let (summary, stabilizers) = match kind {
        FamilyKind::Cycles(k) => {
            let fam = enumerate_cycles(&g, k)?;
            let p = orbit_partition(&group, &fam, kind)?;
            (p.summary(), p.stabilizer_orders())
        }
        FamilyKind::DisjointSixCyclePairs => {
            let fam = disjoint_six_cycle_pairs(&g);
            let p = orbit_partition(&group, &fam, kind)?;
            (p.summary(), p.stabilizer_orders())
        }
    };
    let stab: Vec<String> = stabilizers
        .iter()
        .map(|s| s.map_or("-".into(), |x| x.to_string()))
        .collect();
    let text = format!(
        "family: {}\ngroup order: {}\norbit sizes: {:?}\nstabilizer orders: [{}]\ntransitive: {}\n",
        summary.family_kind,
        summary.group_order,
        summary.orbit_sizes,
        stab.join(", "),
        if summary.transitive { "yes" } else { "no" }
    );
    Ok(Output::ok(text, serde_json::to_value(summary)?))
}

fn lemmas(which: LemmaChoice, graph: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let verdicts: Vec<LemmaVerdict> = match which {
        LemmaChoice::Chords => {
            if g.n() < 3 {
                Vec::new()
            } else {
                enumerate_cycles(&g, g.n())?
                    .iter()
                    .map(|c| check_hamiltonian_chord_pattern(&g, c))
                    .collect::<Result<_, _>>()?
            }
        }
        LemmaChoice::Complement => {
            if g.n() < 14 {
                return Err(Failure::Usage("complement check needs a 14-vertex graph".into()));
            }
            enumerate_cycles(&g, g.n() - 2)?
                .iter()
                .map(|c| check_twelve_cycle_complement(&g, c))
                .collect::<Result<_, _>>()?
        }
        LemmaChoice::Distance3 => distance_three_pairs(&g)
            .into_iter()
            .map(|(u, v)| check_distance_three_pair(&g, u, v))
            .collect::<Result<_, _>>()?,
        LemmaChoice::Pairconfig => {
            if g.n() != 14 {
                return Err(Failure::Usage("pair configuration check needs a 14-vertex graph".into()));
            }
            disjoint_six_cycle_pairs(&g)
                .iter()
                .map(|p| check_disjoint_pair_configuration(&g, p))
                .collect::<Result<_, _>>()?
        }
    };
    let passed = verdicts.iter().filter(|v| v.pass).count();
    let mut text = String::new();
    for v in &verdicts {
        let _ = writeln!(text, "[{}] {}", if v.pass { "pass" } else { "FAIL" }, v.instance);
    }
    let _ = writeln!(text, "{passed}/{} instances pass", verdicts.len());
    let all = passed == verdicts.len() && !verdicts.is_empty();
    let json = json!({
        "instances": verdicts.len(),
        "passed": passed,
        "pass": all,
        "verdicts": verdicts,
    });
    Ok(Output::ok(text, json).with_status(all))
}

fn family(delta_y_only: bool) -> Result<Output, Failure> {
    let members = if delta_y_only { k7_delta_y_descendants() } else { k7_family() };
    let h = heawood();
    let mut text = String::new();
    let mut index = Vec::new();
    for (i, g) in members.iter().enumerate() {
        let id = i + 1;
        let is_heawood = are_isomorphic(g, &h);
        let _ = writeln!(
            text,
            "# member {id}: {} vertices, {} edges{}",
            g.n(),
            g.edge_count(),
            if is_heawood { ", heawood" } else { "" }
        );
        text.push_str(&g.to_edge_list());
        text.push('\n');
        index.push(json!({ "id": id, "n": g.n(), "edges": g.edge_count(), "is_heawood": is_heawood }));
    }
    let json = json!({ "members": index });
    let _ = writeln!(text, "{}", serde_json::to_string(&json)?);
    Ok(Output::ok(text, json))
}

fn verify(graph: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let report = certify_heawood(&g);
    let json = serde_json::to_value(&report)?;
    Ok(Output::ok(report.render_text(), json).with_status(report.pass))
}

fn export_dot(graph: &str) -> Result<Output, Failure> {
    let g = graph_arg(graph)?;
    let dot = g.to_dot();
    Ok(Output::ok(dot.clone(), json!({ "dot": dot })))
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Cycles { action: CyclesAction::Count { graph, method } } => cycles_count(graph, *method),
        Command::Cycles { action: CyclesAction::List { graph, length } } => cycles_list(graph, *length),
        Command::Pairs { action: PairsAction::Disjoint6 { graph } } => pairs_disjoint6(graph),
        Command::Aut { graph } => aut(graph),
        Command::Orbits { graph, family } => orbits(graph, family),
        Command::Lemmas { which, graph } => lemmas(*which, graph),
        Command::Family { action: FamilyAction::K7 { delta_y_only } } => family(*delta_y_only),
        Command::Verify { graph } => verify(graph),
        Command::Export { action: ExportAction::Dot { graph } } => export_dot(graph),
    }
}

fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

/// Parse `args` (including the program name) and execute the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let threads = cli.threads.unwrap_or_else(default_threads);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(&cli.command));
    let output = match result {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.json {
        None => out.write_all(output.text.as_bytes()),
        Some(None) => {
            let body = serde_json::to_string_pretty(&output.json).expect("json value serialises");
            writeln!(out, "{body}")
        }
        Some(Some(path)) => {
            let body = serde_json::to_string_pretty(&output.json).expect("json value serialises");
            if let Err(e) = std::fs::write(path, body + "\n") {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            out.write_all(output.text.as_bytes())
        }
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    output.code
}
