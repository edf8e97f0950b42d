//! Command-line front end.

use std::cmp::Ordering;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::generation::{basic_words, generate};
use crate::oracle::{enumerate_by_descents, enumerate_by_tits, staircase_count, DescentCounter, DEFAULT_MAX_WORDS};
use crate::poset::{build_poset, PosetGraph};
use crate::sorting::{sort_to_natural, ChainStep, StepTag};
use crate::text::{parse_permutation, parse_word};
use crate::word::{evaluate, lex_compare, natural_word, tower_decomposition, Permutation, Word};
use crate::wordset::WordSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleChoice {
    Descent,
    Tits,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_words: usize,
    pub output_format: OutputFormat,
    pub show_towers: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { max_words: DEFAULT_MAX_WORDS, output_format: OutputFormat::Text, show_towers: false }
    }
}

#[derive(Parser, Debug)]
#[command(name = "redwords", version, about = "Reduced words of permutations: sorting, generation, directed-braid posets")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Degree of the symmetric group (default: inferred from the input)
    #[arg(long, global = true)]
    degree: Option<usize>,

    /// Abort enumerations that would produce more words than this
    #[arg(long, default_value_t = DEFAULT_MAX_WORDS as u64, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_words: u64,

    /// Print words split into towers with " | "
    #[arg(long, global = true)]
    towers: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Natural word of a permutation
    Natural { permutation: String },
    /// Tower decomposition of a word
    Decompose { word: String },
    /// Chain from a reduced word to the natural word
    Sort { word: String },
    /// Basic words of a permutation
    Basic { permutation: String },
    /// All reduced words via basic words and restricted shuffles
    Generate { permutation: String },
    /// All reduced words via an independent oracle
    Enumerate {
        permutation: String,
        #[arg(long, value_enum, default_value_t = OracleChoice::Descent)]
        oracle: OracleChoice,
    },
    /// Number of reduced words
    Count {
        /// Count for the longest permutation of this degree by the hook-length formula
        #[arg(long, conflicts_with = "permutation")]
        stanley: Option<usize>,
        /// Count for this permutation by the descent recursion
        #[arg(required_unless_present = "stanley")]
        permutation: Option<String>,
    },
    /// Directed-braid poset as DOT or JSON
    Poset {
        permutation: String,
        /// Keep only covering edges
        #[arg(long)]
        hasse: bool,
    },
    /// Cross-check generation, oracles, maximality and sorting
    Verify { permutation: String },
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn config_of(cli: &Cli) -> RunConfig {
    RunConfig { max_words: cli.max_words as usize, output_format: cli.format, show_towers: cli.towers }
}

fn read_permutation(cli: &Cli, s: &str) -> Result<Permutation> {
    let p = parse_permutation(s)?;
    match cli.degree {
        Some(n) if n < p.degree() => Err(Error::InvalidInput(format!(
            "permutation {p} has degree {}, larger than --degree {n}",
            p.degree()
        ))),
        Some(n) => Ok(p.extend_to(n)),
        None => Ok(p),
    }
}

fn read_word(cli: &Cli, s: &str) -> Result<Word> {
    let w = parse_word(s)?;
    if let Some(n) = cli.degree {
        evaluate(&w, n)?;
    }
    Ok(w)
}

fn io<T>(r: std::io::Result<T>) -> Result<T> {
    r.map_err(|e| Error::InvalidInput(format!("write failed: {e}")))
}

fn render(w: &Word, cfg: &RunConfig) -> String {
    if cfg.show_towers {
        w.tower_string()
    } else {
        w.to_string()
    }
}

fn word_json(w: &Word) -> Value {
    json!(w.letters())
}

fn write_words(out: &mut dyn Write, words: &WordSet, cfg: &RunConfig) -> Result<()> {
    match cfg.output_format {
        OutputFormat::Json => {
            let v: Vec<Value> = words.iter().map(word_json).collect();
            io(writeln!(out, "{}", Value::Array(v)))
        }
        _ => {
            for w in words.iter() {
                io(writeln!(out, "{}", render(w, cfg)))?;
            }
            Ok(())
        }
    }
}

fn tag_name(tag: StepTag) -> &'static str {
    match tag {
        StepTag::Initial => "initial",
        StepTag::ShortMove => "short",
        StepTag::LongMove => "long",
    }
}

fn write_chain(out: &mut dyn Write, chain: &[ChainStep], cfg: &RunConfig) -> Result<()> {
    match cfg.output_format {
        OutputFormat::Json => {
            let v: Vec<Value> =
                chain.iter().map(|s| json!({ "tag": tag_name(s.tag), "word": s.word.letters() })).collect();
            io(writeln!(out, "{}", Value::Array(v)))
        }
        _ => {
            for s in chain {
                io(writeln!(out, "{:<5} {}", s.tag.to_string(), s.word.tower_string()))?;
            }
            Ok(())
        }
    }
}

/// DOT digraph: one node per word, one edge per relation with `rel="1"` or `rel="2"`.
pub fn poset_dot(g: &PosetGraph, show_towers: bool) -> String {
    let mut s = String::from("digraph poset {\n");
    for (i, w) in g.vertices().iter().enumerate() {
        let label = if show_towers { w.tower_string() } else { w.to_string() };
        s.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for e in g.edges() {
        s.push_str(&format!("  n{} -> n{} [rel=\"{}\"];\n", e.from, e.to, e.rel.label()));
    }
    s.push_str("}\n");
    s
}

/// `{"vertices": [[..], ..], "edges": [{"from": i, "to": j, "rel": "1"}, ..]}`.
pub fn poset_json(g: &PosetGraph) -> Value {
    let vertices: Vec<Value> = g.vertices().iter().map(word_json).collect();
    let edges: Vec<Value> =
        g.edges().map(|e| json!({ "from": e.from, "to": e.to, "rel": e.rel.label() })).collect();
    json!({ "vertices": vertices, "edges": edges })
}

/// Outcome of one `verify` check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Generation against both oracles, uniqueness of the maximal element, and a
/// sorting round trip from every reduced word.
pub fn verify(p: &Permutation, max_words: usize) -> Result<Vec<Check>> {
    let generated = generate(p, max_words)?;
    let by_descents = enumerate_by_descents(p, max_words)?;
    let eta = natural_word(p);
    let by_tits = enumerate_by_tits(&eta, max_words)?;
    let mut checks = vec![
        Check {
            name: "generate = descent oracle",
            pass: generated == by_descents,
            detail: format!("{} generated, {} enumerated", generated.len(), by_descents.len()),
        },
        Check {
            name: "generate = Tits closure",
            pass: generated == by_tits,
            detail: format!("{} generated, {} in closure", generated.len(), by_tits.len()),
        },
    ];

    let poset = build_poset(p, max_words)?;
    let maximal = poset.maximal_elements();
    checks.push(Check {
        name: "unique maximal element is the natural word",
        pass: maximal.len() == 1 && maximal.contains(&eta),
        detail: format!("maximal {:?}", maximal.iter().map(|w| w.to_string()).collect::<Vec<_>>()),
    });

    let mut failures = 0;
    let mut moves = 0;
    for w in by_descents.iter() {
        let chain = sort_to_natural(w)?;
        moves += chain.len() - 1;
        let ends = chain.last().map(|s| &s.word) == Some(&eta);
        let same = chain.iter().all(|s| evaluate(&s.word, p.degree()).is_ok_and(|q| q == *p));
        let rising = chain.windows(2).all(|c| lex_compare(&c[0].word, &c[1].word) == Ordering::Less);
        if !(ends && same && rising) {
            failures += 1;
        }
    }
    checks.push(Check {
        name: "every reduced word sorts to the natural word",
        pass: failures == 0,
        detail: format!("{} words, {moves} moves, {failures} failures", by_descents.len()),
    });
    Ok(checks)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<bool> {
    let cfg = config_of(cli);
    match &cli.command {
        Command::Natural { permutation } => {
            let eta = natural_word(&read_permutation(cli, permutation)?);
            match cfg.output_format {
                OutputFormat::Json => io(writeln!(out, "{}", word_json(&eta)))?,
                _ => io(writeln!(out, "{}", render(&eta, &cfg)))?,
            }
        }
        Command::Decompose { word } => {
            let d = tower_decomposition(&read_word(cli, word)?);
            match cfg.output_format {
                OutputFormat::Json => {
                    let v: Vec<Value> = d.towers().iter().map(word_json).collect();
                    io(writeln!(out, "{}", Value::Array(v)))?
                }
                _ => io(writeln!(out, "{d}"))?,
            }
        }
        Command::Sort { word } => {
            let chain = sort_to_natural(&read_word(cli, word)?)?;
            write_chain(out, &chain, &cfg)?;
        }
        Command::Basic { permutation } => {
            write_words(out, &basic_words(&read_permutation(cli, permutation)?), &cfg)?;
        }
        Command::Generate { permutation } => {
            write_words(out, &generate(&read_permutation(cli, permutation)?, cfg.max_words)?, &cfg)?;
        }
        Command::Enumerate { permutation, oracle } => {
            let p = read_permutation(cli, permutation)?;
            let words = match oracle {
                OracleChoice::Descent => enumerate_by_descents(&p, cfg.max_words)?,
                OracleChoice::Tits => enumerate_by_tits(&natural_word(&p), cfg.max_words)?,
            };
            write_words(out, &words, &cfg)?;
        }
        Command::Count { stanley, permutation } => {
            let n = match (stanley, permutation) {
                (Some(n), _) => staircase_count(*n)?.to_string(),
                (None, Some(p)) => DescentCounter::new().count(&read_permutation(cli, p)?).to_string(),
                (None, None) => unreachable!("clap requires one of them"),
            };
            io(writeln!(out, "{n}"))?;
        }
        Command::Poset { permutation, hasse } => {
            let mut g = build_poset(&read_permutation(cli, permutation)?, cfg.max_words)?;
            if *hasse {
                g = g.hasse_reduction()?;
            }
            match cfg.output_format {
                OutputFormat::Json => io(writeln!(out, "{}", poset_json(&g)))?,
                _ => io(write!(out, "{}", poset_dot(&g, cfg.show_towers)))?,
            }
        }
        Command::Verify { permutation } => {
            let checks = verify(&read_permutation(cli, permutation)?, cfg.max_words)?;
            let all = checks.iter().all(|c| c.pass);
            match cfg.output_format {
                OutputFormat::Json => {
                    let v: Vec<Value> = checks
                        .iter()
                        .map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail }))
                        .collect();
                    io(writeln!(out, "{}", Value::Array(v)))?
                }
                _ => {
                    for c in &checks {
                        io(writeln!(out, "{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail))?;
                    }
                }
            }
            return Ok(all);
        }
    }
    Ok(true)
}
