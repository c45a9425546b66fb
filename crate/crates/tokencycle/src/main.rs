//! Command-line front end: generate certified Hamiltonian cycles in token
//! graphs of fans, wheels, and complete graphs; verify cycle files against
//! a host graph; and run the exhaustive search oracle on small instances.
//!
//! Exit codes: 0 success (including a completed verify or search, whatever
//! the answer), 1 failed verification, 2 invalid parameters or unreadable
//! input, 3 instance over the search cap.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tokencycle::fan_cycle::{parse_cycle_text, CycleDocument};
use tokencycle::verify::{brute_force_ham_cycle, certify_lift, validate_cycle};
use tokencycle::{
    adjacency_oracle, binomial, fan_ham_cycle, AnchorPair, Graph, TokenCycle, TokenGraph,
    TokenVertex, DEFAULT_SEARCH_CAP,
};

#[derive(Parser)]
#[command(
    name = "tokencycle",
    version,
    about = "Hamiltonian cycles in token graphs of fans, wheels, and complete graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a certified Hamiltonian cycle of the k-token graph of a
    /// fan, wheel, or complete graph
    Gen(GenArgs),
    /// Check a cycle file against the token adjacency of a host graph
    Verify(VerifyArgs),
    /// Exhaustively search a small token graph for a Hamiltonian cycle
    Oracle(OracleArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Host graph family
    #[arg(long, value_enum)]
    family: GenFamily,
    /// Number of vertices of the host graph
    #[arg(long)]
    n: u32,
    /// Number of tokens
    #[arg(long)]
    k: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Host graph family; omit when --graph is given
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Number of vertices of the host graph
    #[arg(long)]
    n: Option<u32>,
    /// Part size for complete-bipartite (both parts)
    #[arg(long)]
    m: Option<u32>,
    /// Host graph as an edge-list file instead of a family
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Number of tokens; defaults to what the cycle file declares
    #[arg(long)]
    k: Option<u32>,
    /// Cycle file, JSON or text
    #[arg(long)]
    cycle: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    /// Host graph family; omit when --graph is given
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Number of vertices of the host graph
    #[arg(long)]
    n: Option<u32>,
    /// Part size for complete-bipartite (both parts)
    #[arg(long)]
    m: Option<u32>,
    /// Host graph as an edge-list file instead of a family
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Number of tokens
    #[arg(long)]
    k: u32,
    /// Largest token graph (in vertices) the search will accept
    #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    Fan,
    Wheel,
    Complete,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Fan,
    Wheel,
    Complete,
    CompleteBipartite,
    Path,
    Cycle,
    File,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

enum CliError {
    /// Bad parameters or unreadable input; exit 2.
    Usage(String),
    /// Instance too large for the exhaustive search; exit 3.
    OverCap(String),
    /// A cycle this tool generated failed its own certification; exit 1.
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::OverCap(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(msg) | CliError::OverCap(msg) | CliError::Internal(msg) => msg,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, CliError> {
    let (cycle, anchor) =
        fan_ham_cycle(args.n, args.k).map_err(|e| usage(e.to_string()))?;
    let fan = Graph::fan(args.n).map_err(|e| usage(e.to_string()))?;
    let report = validate_cycle(
        adjacency_oracle(&fan),
        binomial(args.n, args.k) as usize,
        cycle.verts(),
        Some(&anchor),
    );
    if !report.ok {
        return Err(CliError::Internal(format!(
            "generated cycle failed validation: {}",
            report.to_json()
        )));
    }
    let (family_name, host) = match args.family {
        GenFamily::Fan => ("fan", None),
        GenFamily::Wheel => (
            "wheel",
            Some(Graph::wheel(args.n).map_err(|e| usage(e.to_string()))?),
        ),
        GenFamily::Complete => (
            "complete",
            Some(Graph::complete(args.n).map_err(|e| usage(e.to_string()))?),
        ),
    };
    if let Some(host) = host {
        let report = certify_lift(&cycle, &host);
        if !report.ok {
            return Err(CliError::Internal(format!(
                "generated cycle failed {family_name} certification: {}",
                report.to_json()
            )));
        }
    }
    match args.format {
        Format::Json => {
            println!(
                "{}",
                CycleDocument::new(family_name, &cycle, Some(&anchor)).to_json()
            );
        }
        Format::Text => print!("{}", cycle.to_text()),
        Format::Dot => print!("{}", cycle_dot(&cycle)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let host = resolve_graph(args.family, args.n, args.m, args.graph.as_ref())?;
    let text = read_file(&args.cycle)?;
    let (verts, doc_k, anchor) = parse_cycle_file(&text)?;
    let k = args
        .k
        .or(doc_k)
        .or_else(|| verts.first().map(|v| v.len() as u32))
        .ok_or_else(|| usage("cannot determine k; pass --k"))?;
    let expected = binomial(host.order(), k) as usize;
    let report = validate_cycle(adjacency_oracle(&host), expected, &verts, anchor.as_ref());
    println!("{}", report.to_json());
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode, CliError> {
    let host = resolve_graph(args.family, args.n, args.m, args.graph.as_ref())?;
    let count = binomial(host.order(), args.k);
    if count > args.cap as u64 {
        return Err(CliError::OverCap(format!(
            "token graph has {count} vertices, above the cap of {}",
            args.cap
        )));
    }
    let tg = TokenGraph::build_with_limit(&host, args.k, args.cap as u64)
        .map_err(|e| usage(e.to_string()))?;
    let outcome = brute_force_ham_cycle(&tg, args.cap).map_err(|e| usage(e.to_string()))?;
    println!(
        "{}",
        serde_json::to_string(&outcome).expect("search outcome serializes")
    );
    Ok(ExitCode::SUCCESS)
}

fn resolve_graph(
    family: Option<Family>,
    n: Option<u32>,
    m: Option<u32>,
    graph_file: Option<&PathBuf>,
) -> Result<Graph, CliError> {
    let from_file = |path: &PathBuf| {
        let text = read_file(path)?;
        Graph::parse_edge_list(&text).map_err(|e| usage(e.to_string()))
    };
    let family = match (family, graph_file) {
        (None, Some(path)) => return from_file(path),
        (Some(Family::File), Some(path)) => return from_file(path),
        (Some(Family::File), None) => return Err(usage("--family file needs --graph FILE")),
        (None, None) => return Err(usage("pass a --family or a --graph FILE")),
        (Some(f), Some(_)) if f != Family::File => {
            return Err(usage("--family and --graph are mutually exclusive"))
        }
        (Some(f), _) => f,
    };
    let need_n = || n.ok_or_else(|| usage("this family needs --n"));
    let built = match family {
        Family::Fan => Graph::fan(need_n()?),
        Family::Wheel => Graph::wheel(need_n()?),
        Family::Complete => Graph::complete(need_n()?),
        Family::Path => Graph::path(need_n()?),
        Family::Cycle => Graph::cycle(need_n()?),
        Family::CompleteBipartite => {
            let m = m.ok_or_else(|| usage("complete-bipartite needs --m"))?;
            Graph::complete_bipartite(m, m)
        }
        Family::File => unreachable!("handled above"),
    };
    built.map_err(|e| usage(e.to_string()))
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Cycle vertices plus whatever metadata the file format carries.
type ParsedCycle = (Vec<TokenVertex>, Option<u32>, Option<AnchorPair>);

fn parse_cycle_file(text: &str) -> Result<ParsedCycle, CliError> {
    if text.trim_start().starts_with('{') {
        let doc = CycleDocument::from_json(text).map_err(|e| usage(e.to_string()))?;
        let anchor = doc.anchor_pair();
        Ok((doc.cycle, Some(doc.k), anchor))
    } else {
        let verts = parse_cycle_text(text).map_err(|e| usage(e.to_string()))?;
        Ok((verts, None, None))
    }
}

fn cycle_dot(cycle: &TokenCycle) -> String {
    let verts = cycle.verts();
    let mut out = String::from("graph G {\n");
    for idx in 0..verts.len() {
        let a = &verts[idx];
        let b = &verts[(idx + 1) % verts.len()];
        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
    }
    out.push_str("}\n");
    out
}
