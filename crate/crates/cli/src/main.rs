//! `matchdeck`: matching polynomials, polynomial decks, reconstruction and
//! counterexample search from the command line.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 bad input, 3 capacity exceeded,
//! 4 perfect-matching count undetermined, 5 inconsistent deck,
//! 6 verification failure.

mod input;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use matchdeck::lab::{self, minimality_report, pair_records, search_counterexamples};
use matchdeck::matching::{memo_cap_from_env, stats};
use matchdeck::reconstruct::{build_deck, PerfectMatchings};
use matchdeck::{graph6, matching_polynomial, reconstruct, BigInt, Error, Hint, PolynomialDeck};
use serde_json::{json, Value};

use input::GraphInput;

#[derive(Debug, Parser)]
#[command(name = "matchdeck", version, about = "Matching polynomials and their vertex-deleted decks")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HintArg {
    None,
    Forest,
    Pendant,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the matching polynomial M(G, x, y)
    Poly(GraphInput),
    /// Print the polynomial deck (JSON by default)
    Deck(GraphInput),
    /// Print matching counts: perfect, near-perfect, total
    Stats(GraphInput),
    /// Recover the matching polynomial from a deck file
    Reconstruct {
        /// Deck JSON file as written by `deck`
        #[arg(long, value_name = "FILE")]
        deck: PathBuf,
        /// What is known about the graph the deck came from
        #[arg(long, value_enum, default_value = "none")]
        hint: HintArg,
        /// Known number of perfect matchings
        #[arg(long, value_name = "COUNT")]
        np: Option<BigInt>,
    },
    /// Check the C_2k versus C_k + C_k pair
    VerifyFamily {
        #[arg(long)]
        k: usize,
        /// Use the complements of both graphs
        #[arg(long)]
        complement: bool,
    },
    /// Search all simple graphs on n vertices for deck-sharing pairs
    Search {
        #[arg(long)]
        n: usize,
        /// Write the JSON report here
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(Error::Domain(_) | Error::Parse { .. }) => 2,
            CliError::Core(Error::Capacity { .. }) => 3,
            CliError::Core(Error::InconsistentDeck(_)) => 5,
            CliError::Core(Error::Verification { .. }) => 6,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

/// What a command produced: text for stdout and the exit code.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn sub_matches<'a>(m: &'a ArgMatches) -> &'a ArgMatches {
    m.subcommand().map(|(_, s)| s).expect("subcommand is required")
}

fn run(cli: Cli, matches: &ArgMatches) -> Result<Outcome, CliError> {
    let sub = sub_matches(matches);
    let format = cli.format;
    match cli.command {
        Command::Poly(input) => {
            let g = input.build(sub)?;
            let p = matching_polynomial(&g);
            Ok(Outcome::ok(match format.unwrap_or(Format::Text) {
                Format::Text => format!("{p}\n"),
                Format::Json => pretty(&json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "polynomial": p,
                })),
            }))
        }
        Command::Deck(input) => {
            let g = input.build(sub)?;
            let deck = build_deck(&g)?;
            Ok(Outcome::ok(match format.unwrap_or(Format::Json) {
                Format::Json => pretty(&serde_json::to_value(&deck).expect("deck serializes")),
                Format::Text => deck.cards().iter().map(|c| format!("{c}\n")).collect(),
            }))
        }
        Command::Stats(input) => {
            let g = input.build(sub)?;
            let s = stats(&g);
            Ok(Outcome::ok(match format.unwrap_or(Format::Text) {
                Format::Text => format!(
                    "vertices: {}\nedges: {}\npolynomial: {}\nperfect matchings: {}\nnear-perfect matchings: {}\nmatchings: {}\n",
                    g.n(),
                    g.edge_count(),
                    s.polynomial,
                    s.num_perfect,
                    s.num_near_perfect,
                    s.total_matchings
                ),
                Format::Json => pretty(&json!({
                    "n": g.n(),
                    "edges": g.edge_count(),
                    "polynomial": s.polynomial,
                    "perfect_matchings": s.num_perfect.to_string(),
                    "near_perfect_matchings": s.num_near_perfect.to_string(),
                    "matchings": s.total_matchings.to_string(),
                })),
            }))
        }
        Command::Reconstruct { deck, hint, np } => {
            let text = fs::read_to_string(&deck)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", deck.display())))?;
            let deck: PolynomialDeck = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("invalid deck file: {e}")))?;
            let hint = match hint {
                HintArg::None => Hint::None,
                HintArg::Forest => Hint::IsForest,
                HintArg::Pendant => Hint::HasPendantEdge,
            };
            if np.as_ref().is_some_and(|v| v.sign() == matchdeck::num_bigint::Sign::Minus) {
                return Err(CliError::Usage("--np must be non-negative".into()));
            }
            let r = reconstruct(&deck, hint, np)?;
            let full = r.polynomial();
            let stdout = match format.unwrap_or(Format::Text) {
                Format::Text => {
                    let mut s = format!("known part: {}\n", r.known_part);
                    match &r.perfect_matchings {
                        PerfectMatchings::Determined(v) => {
                            let _ = writeln!(s, "perfect matchings: {v}");
                        }
                        PerfectMatchings::Unknown => s.push_str("perfect matchings: undetermined\n"),
                    }
                    let _ = writeln!(s, "method: {}", serde_json::to_value(r.method).expect("enum").as_str().unwrap_or("?"));
                    if let Some(p) = &full {
                        let _ = writeln!(s, "polynomial: {p}");
                    }
                    s
                }
                Format::Json => {
                    let mut v = serde_json::to_value(&r).expect("result serializes");
                    v["polynomial"] = full.as_ref().map_or(Value::Null, |p| p.to_json_value());
                    pretty(&v)
                }
            };
            Ok(Outcome {
                stdout,
                code: if full.is_some() { 0 } else { 4 },
            })
        }
        Command::VerifyFamily { k, complement } => {
            let rep = lab::check_family_member(k, complement)?;
            let code = if rep.passed() { 0 } else { 6 };
            let stdout = match format.unwrap_or(Format::Text) {
                Format::Text => {
                    let bar = if complement { "complement of " } else { "" };
                    let mut s = format!(
                        "pair: {bar}C_{} vs {bar}C_{k} + C_{k}\n",
                        2 * k
                    );
                    for c in &rep.clauses {
                        let verdict = if c.passed { "PASS" } else { "FAIL" };
                        if c.detail.is_empty() {
                            let _ = writeln!(s, "{verdict} {}", c.name);
                        } else {
                            let _ = writeln!(s, "{verdict} {} ({})", c.name, c.detail);
                        }
                    }
                    let _ = writeln!(s, "np(C_{}) = {}", 2 * k, rep.cycle_np);
                    let _ = writeln!(s, "np(C_{k} + C_{k}) = {}", rep.union_np);
                    let _ = writeln!(s, "{}", if rep.passed() { "PASS" } else { "FAIL" });
                    s
                }
                Format::Json => pretty(&json!({
                    "k": k,
                    "complemented": complement,
                    "passed": rep.passed(),
                    "clauses": rep.clauses,
                    "np_cycle": rep.cycle_np.to_string(),
                    "np_union": rep.union_np.to_string(),
                    "poly_a": rep.pair.poly_a,
                    "poly_b": rep.pair.poly_b,
                })),
            };
            Ok(Outcome { stdout, code })
        }
        Command::Search { n, out } => {
            let pairs = search_counterexamples(n)?;
            let records = pair_records(&pairs)?;
            let report = pretty(&serde_json::to_value(&records).expect("records serialize"));
            if let Some(path) = &out {
                fs::write(path, &report)
                    .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            }
            let fmt = format.unwrap_or(Format::Text);
            if fmt == Format::Json && out.is_none() {
                return Ok(Outcome::ok(report));
            }
            let mut s = String::new();
            let minimal = minimality_report(&pairs);
            for (p, r) in pairs.iter().zip(&records) {
                let _ = writeln!(
                    s,
                    "{} {}  edges {}/{}  np {}/{}",
                    graph6::encode(&p.graph_a)?,
                    graph6::encode(&p.graph_b)?,
                    r.edges_a,
                    r.edges_b,
                    r.np_a,
                    r.np_b
                );
            }
            if !minimal.minimal.is_empty() {
                let idx: Vec<String> = minimal.minimal.iter().map(|i| i.to_string()).collect();
                let _ = writeln!(
                    s,
                    "minimal pair{}: {}",
                    if minimal.tie { "s (tie)" } else { "" },
                    idx.join(", ")
                );
            }
            let _ = writeln!(s, "{} pairs found", pairs.len());
            Ok(Outcome::ok(s))
        }
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Err(e) = memo_cap_from_env() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli, &matches) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
