//! Command-line front end: one subcommand per library operation.
//!
//! Exit status: 0 on success or membership, 1 on a violation or a negative
//! covering verdict, 2 on usage, file or cap errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graphshift::alphabet::{Alphabets, Label, LabelAlphabet};
use graphshift::cayley::{self, covering_from_cayley, nn_sft, NnConstraint};
use graphshift::config::Caps;
use graphshift::io::{self, GraphDoc};
use graphshift::metric::distance;
use graphshift::sft::{colorings, enumerate, member_finite, member_up_to_radius, MembershipVerdict, SftDefinition};
use graphshift::symmetry::{classify_source, is_covering, quotient, stabilizer, CoveringVerdict};
use graphshift::verify::{run_check, SuiteOptions, CHECKS};
use graphshift::{CanonicalGraph, Error, GraphSource, PathWord, PrefixLanguage};

#[derive(Parser)]
#[command(name = "graphshift", version, about = "Subshifts of finite type on port-labelled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Also write the resulting graph(s) as Graphviz DOT to this path.
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a finite graph.
    Check { sft: PathBuf, graph: PathBuf },
    /// Check an infinite graph up to a radius.
    CheckLazy {
        sft: PathBuf,
        source: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_radius: usize,
    },
    /// List the finite members up to a vertex bound.
    Enumerate {
        sft: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_vertices: usize,
    },
    /// Count the labelings of a graph's support that are members.
    Colorings { sft: PathBuf, graph: PathBuf },
    /// The stabilizer group of a finite graph and its periodicity class.
    Stabilizer { graph: PathBuf },
    /// Quotient a graph by a subgroup of its periods.
    Quotient {
        source: PathBuf,
        /// Period words: a JSON list, or words separated by commas.
        subgroup: String,
    },
    /// Decide whether the first graph covers the second.
    Cover {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_radius: usize,
    },
    /// The ultrametric distance between two graphs.
    Distance {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_radius: usize,
    },
    /// The cut of a graph at a vertex along a prefix-stable language.
    Cut {
        source: PathBuf,
        /// Language words, ε written as an empty string.
        #[arg(required = true, num_args = 1..)]
        words: Vec<String>,
        /// Path to the vertex to cut at.
        #[arg(long, default_value = "")]
        at: String,
    },
    /// Build the Cayley SFT of a presentation, or the Cayley graph of a table.
    Cayley {
        group: PathBuf,
        /// Number of labels 0..n.
        #[arg(long, default_value_t = 1)]
        labels: usize,
        /// Forbid this label pair across every generator edge, as `x,y`.
        #[arg(long)]
        forbid: Vec<String>,
        /// Look for a Cayley cover of this graph.
        #[arg(long)]
        cover: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_radius: usize,
    },
    /// Run the verification suite.
    Verify {
        /// Run only this check.
        #[arg(long)]
        only: Option<usize>,
    },
    /// List the built-in SFTs, or print one as an SFT file.
    Examples { name: Option<String> },
}

/// A command's result: a text report, the same as JSON, and a status.
struct Outcome {
    text: String,
    json: Value,
    status: u8,
    graphs: Vec<(CanonicalGraph, Alphabets)>,
}

impl Outcome {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Outcome { text: text.into(), json, status: 0, graphs: Vec::new() }
    }

    fn status(mut self, status: u8) -> Self {
        self.status = status;
        self
    }

    fn graphs(mut self, graphs: Vec<(CanonicalGraph, Alphabets)>) -> Self {
        self.graphs = graphs;
        self
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run = Result<Outcome, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_sft(path: &Path) -> Result<SftDefinition, Failure> {
    Ok(io::parse_sft(&read(path)?)?)
}

fn load_finite(path: &Path) -> Result<(CanonicalGraph, Alphabets), Failure> {
    Ok(io::parse_graph(&read(path)?)?)
}

fn load_source(path: &Path) -> Result<(GraphSource, Alphabets), Failure> {
    Ok(io::parse_source(&read(path)?)?)
}

fn graph_json(x: &CanonicalGraph, a: &Alphabets) -> Value {
    serde_json::to_value(GraphDoc::from_canonical(x, a)).expect("graph documents serialize")
}

fn verdict(v: &MembershipVerdict, a: &Alphabets) -> Outcome {
    match v {
        MembershipVerdict::Member => Outcome::new("Member", json!({"verdict": "Member"})),
        MembershipVerdict::ConsistentUpToRadius(r) => {
            Outcome::new(format!("ConsistentUpToRadius({r})"), json!({"verdict": "ConsistentUpToRadius", "radius": r}))
        }
        MembershipVerdict::Violation { witness, pattern } => {
            let w = witness.render(&a.ports);
            Outcome::new(
                format!("Violation at {w:?}\n{}", io::graph_to_json(pattern.shape(), a).trim_end()),
                json!({
                    "verdict": "Violation",
                    "witness": w,
                    "pattern": {"language": pattern.window().render(&a.ports), "graph": graph_json(pattern.shape(), a)},
                }),
            )
            .status(1)
        }
    }
}

fn covering(v: &CoveringVerdict, a: &Alphabets) -> Outcome {
    match v {
        CoveringVerdict::Yes(h) => {
            let map = h.vertex_map().map(|m| m.iter().map(|&t| h.target().as_finite().map(|y| y.name(t).render(&a.ports))).collect::<Vec<_>>());
            Outcome::new("Yes", json!({"verdict": "Yes", "map": map}))
        }
        CoveringVerdict::No { witness, reason } => {
            let w = witness.as_ref().map(|w| w.render(&a.ports));
            let text = match &w {
                Some(w) => format!("No: {reason} (witness {w:?})"),
                None => format!("No: {reason}"),
            };
            Outcome::new(text, json!({"verdict": "No", "witness": w, "reason": reason})).status(1)
        }
        CoveringVerdict::UnknownUpToRadius(r) => {
            Outcome::new(format!("UnknownUpToRadius({r})"), json!({"verdict": "UnknownUpToRadius", "radius": r}))
        }
    }
}

fn label_pair(s: &str, labels: &LabelAlphabet) -> Result<(Label, Label), Failure> {
    let (x, y) = s.split_once(',').ok_or_else(|| Failure::Usage(format!("expected a pair `x,y`, got `{s}`")))?;
    Ok((labels.lookup(x.trim())?, labels.lookup(y.trim())?))
}

fn run(cli: &Cli, caps: &Caps) -> Run {
    match &cli.command {
        Command::Check { sft, graph } => {
            let d = load_sft(sft)?;
            let (x, a) = load_finite(graph)?;
            a.ensure_same(d.alphabets())?;
            Ok(verdict(&member_finite(&d, &x)?, &a).graphs(vec![(x, a)]))
        }
        Command::CheckLazy { sft, source, max_radius } => {
            let d = load_sft(sft)?;
            let (s, a) = load_source(source)?;
            a.ensure_same(d.alphabets())?;
            Ok(verdict(&member_up_to_radius(&d, &s, *max_radius)?, &a))
        }
        Command::Enumerate { sft, max_vertices } => {
            let d = load_sft(sft)?;
            let a = d.alphabets().clone();
            let e = enumerate(&d, *max_vertices, caps)?;
            let mut text = format!("{} members, {} shift orbits", e.members.len(), e.orbit_count());
            for x in &e.members {
                text.push('\n');
                text.push_str(&serde_json::to_string(&GraphDoc::from_canonical(x, &a)).expect("serializable"));
            }
            let json = json!({
                "members": e.members.iter().map(|x| graph_json(x, &a)).collect::<Vec<_>>(),
                "orbits": e.orbits,
            });
            Ok(Outcome::new(text, json).graphs(e.members.into_iter().map(|x| (x, a.clone())).collect()))
        }
        Command::Colorings { sft, graph } => {
            let d = load_sft(sft)?;
            let (g, a) = io::parse_based_graph(&read(graph)?)?;
            if a.port_count() != d.alphabets().port_count() {
                return Err(Error::AlphabetMismatch(format!("{} ports vs {}", a.port_count(), d.alphabets().port_count())).into());
            }
            let c = colorings(&d, &g)?;
            let labels = d.alphabets().labels.clone();
            let named: Vec<Value> = c
                .labelings
                .iter()
                .map(|l| {
                    (0..g.graph.vertex_count())
                        .map(|v| (g.graph.name(v).to_string(), Value::from(labels.symbol(l[v]))))
                        .collect::<serde_json::Map<_, _>>()
                        .into()
                })
                .collect();
            Ok(Outcome::new(c.count.to_string(), json!({"count": c.count, "labelings": named})))
        }
        Command::Stabilizer { graph } => {
            let (x, a) = load_finite(graph)?;
            let s = stabilizer(&x);
            let elements: Vec<String> = s.elements().iter().map(|u| u.render(&a.ports)).collect();
            let class = classify_source(&GraphSource::Finite(x.clone()), caps)?;
            let text = format!("order {}\n{class:?}\n{}", s.order(), elements.iter().map(|e| format!("{e:?}")).collect::<Vec<_>>().join("\n"));
            Ok(Outcome::new(text, json!({"order": s.order(), "elements": elements, "periodicity": format!("{class:?}")})))
        }
        Command::Quotient { source, subgroup } => {
            let (s, a) = load_source(source)?;
            let h = io::parse_subgroup(subgroup, &a.ports)?;
            let q = quotient(&s, &h, caps)?;
            Ok(Outcome::new(io::graph_to_json(&q, &a).trim_end(), graph_json(&q, &a)).graphs(vec![(q, a)]))
        }
        Command::Cover { x, y, max_radius } => {
            let (x, a) = load_source(x)?;
            let (y, b) = load_source(y)?;
            a.ensure_same(&b)?;
            Ok(covering(&is_covering(&x, &y, *max_radius), &b))
        }
        Command::Distance { x, y, max_radius } => {
            let (x, _) = load_source(x)?;
            let (y, _) = load_source(y)?;
            let d = distance(&x, &y, *max_radius)?;
            Ok(Outcome::new(d.to_string(), json!({"distance": d.to_string(), "value": d.value()})))
        }
        Command::Cut { source, words, at } => {
            let (s, a) = load_source(source)?;
            let lang = PrefixLanguage::parse(words, &a.ports)?;
            let u = PathWord::parse(at, &a.ports)?;
            let c = s.shift(&u)?.cut(&lang);
            Ok(Outcome::new(io::graph_to_json(&c, &a).trim_end(), graph_json(&c, &a)).graphs(vec![(c, a)]))
        }
        Command::Cayley { group, labels, forbid, cover, max_radius } => {
            let text = read(group)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| Error::Malformed(e.to_string()))?;
            if value.get("elements").is_some() {
                let t = io::parse_table(&text)?;
                let x = t.cayley_graph(|_| Label(0))?;
                let a = Alphabets::new(t.ports(), LabelAlphabet::numeric(1));
                return Ok(Outcome::new(io::graph_to_json(&x, &a).trim_end(), graph_json(&x, &a)).graphs(vec![(x, a)]));
            }
            let p = io::parse_presentation(&text)?;
            if let Some(cover) = cover {
                let (x, a) = load_finite(cover)?;
                return Ok(covering(&covering_from_cayley(&p, &x, *max_radius)?, &a));
            }
            let alphabet = LabelAlphabet::numeric(*labels);
            let pairs = forbid.iter().map(|s| label_pair(s, &alphabet)).collect::<Result<Vec<_>, _>>()?;
            let nn = if pairs.is_empty() { Vec::new() } else { NnConstraint::on_all_letters(&p, &pairs) };
            let d = nn_sft(&p, alphabet, &nn)?;
            let doc = io::sft_to_json(&d);
            let json: Value = serde_json::from_str(&doc).expect("valid JSON");
            Ok(Outcome::new(doc.trim_end(), json))
        }
        Command::Verify { only } => {
            let opts = SuiteOptions { caps: *caps, ..SuiteOptions::default() };
            let ids: Vec<usize> = match only {
                Some(id) if (1..=CHECKS.len()).contains(id) => vec![*id],
                Some(id) => return Err(Failure::Usage(format!("no check {id}; checks are 1..={}", CHECKS.len()))),
                None => (1..=CHECKS.len()).collect(),
            };
            let reports: Vec<_> = ids.into_iter().map(|id| run_check(id, &opts)).collect();
            let failed = reports.iter().filter(|r| !r.passed).count();
            let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
            let json = json!(reports
                .iter()
                .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail, "seconds": r.elapsed.as_secs_f64()}))
                .collect::<Vec<_>>());
            Ok(Outcome::new(text, json).status(u8::from(failed > 0)))
        }
        Command::Examples { name: None } => {
            let entries = cayley::catalog();
            let text = entries.iter().map(|e| format!("{:<20} {}", e.name, e.description)).collect::<Vec<_>>().join("\n");
            let json = json!(entries.iter().map(|e| json!({"name": e.name, "description": e.description})).collect::<Vec<_>>());
            Ok(Outcome::new(text, json))
        }
        Command::Examples { name: Some(name) } => {
            let e = cayley::catalog_entry(name).ok_or_else(|| Failure::Usage(format!("no built-in SFT named `{name}`")))?;
            let doc = io::sft_to_json(&e.sft);
            let json: Value = serde_json::from_str(&doc).expect("valid JSON");
            Ok(Outcome::new(doc.trim_end(), json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: cannot start {n} workers: {e}");
            return ExitCode::from(2);
        }
    }
    let caps = match Caps::from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(&cli, &caps) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text.clone(),
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            // a closed pipe downstream is not an error of ours
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = writeln!(stdout, "{body}").and_then(|()| stdout.flush()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: cannot write output: {e}");
                    return ExitCode::from(2);
                }
            }
            if let Some(path) = &cli.dot {
                let dot: String = out.graphs.iter().map(|(x, a)| io::to_dot(x, a)).collect();
                if let Err(e) = fs::write(path, dot) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(out.status)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
