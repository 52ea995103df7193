use std::collections::BTreeMap;
use std::io::{self, Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use fsystems::conglomerate::{enumerate, SetKind};
use fsystems::format::{parse, serialize};
use fsystems::generate::GeneratorSpec;
use fsystems::grounded::{classify_groundedness, enumerate_fixed_points, FixedPointQuery};
use fsystems::labelling::{classify_sentences, for_each_labelling, Mode, SentenceStatus};
use fsystems::report::{analyze, emit_report, AnalysisOptions};
use fsystems::{Error, FSystem, Limits};

const EXIT_INPUT: u8 = 1;
const EXIT_CEILING: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Analyse systems of sentences that declare each other false.
#[derive(Parser)]
#[command(name = "fsys", version)]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full JSON report.
    Analyze {
        /// `.fsys` file, or `-` for standard input.
        input: PathBuf,
        /// Leave out the fixed-point scan.
        #[arg(long)]
        no_fixed_points: bool,
    },
    /// Print one family as JSON.
    Enumerate {
        input: PathBuf,
        #[arg(long, value_enum)]
        what: Family,
        /// Stop after this many items.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Per-sentence statuses and the groundedness verdict.
    Classify { input: PathBuf },
    /// Print a generated system in `.fsys` form.
    Generate {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Time the solvers on random systems (tab-separated).
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        /// Seeds 0..K.
        #[arg(long)]
        seeds: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Labellings,
    Classical,
    Conglomerates,
    Kernels,
    Local,
    MaximalLocal,
    FixedPoints,
}

enum Failure {
    Input(String),
    Ceiling(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CeilingExceeded { .. } => Failure::Ceiling(e.to_string()),
            Error::InvalidGenerator(_) => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_system(input: &PathBuf) -> Result<FSystem, Failure> {
    let text = if input.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))?
    };
    parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", input.display())))
}

fn json_text(value: &impl Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("plain data");
    text.push('\n');
    text
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    let limits = Limits::from_env();
    match cli.command {
        Command::Analyze { input, no_fixed_points } => {
            let sys = read_system(&input)?;
            let options = AnalysisOptions { limits, fixed_points: !no_fixed_points, jobs: cli.jobs };
            let report = analyze(&sys, &options)?;
            out.push_str(&emit_report(&report));
            if report.hit_ceiling() {
                return Err(Failure::Ceiling("some sections were skipped at a ceiling".into()));
            }
        }
        Command::Enumerate { input, what, limit } => {
            let sys = read_system(&input)?;
            let result = with_pool(cli.jobs, || enumerate_family(&sys, what, limit, &limits))?;
            match result {
                Ok(text) => out.push_str(&text),
                Err(e) => {
                    if e.is_ceiling() {
                        out.push_str(&json_text(&json!({"skipped": true, "reason": e.to_string()})));
                    }
                    return Err(e.into());
                }
            }
        }
        Command::Classify { input } => {
            let sys = read_system(&input)?;
            let (classification, groundedness) =
                with_pool(cli.jobs, || (classify_sentences(&sys), classify_groundedness(&sys, &limits)))?;
            let statuses = classification
                .statuses
                .iter()
                .enumerate()
                .map(|(x, &s)| (sys.name(x).to_string(), s))
                .collect();
            let (verdict, ceiling) = match groundedness {
                Ok(g) => (json!(g.verdict), None),
                Err(e) if e.is_ceiling() => (json!({"skipped": true, "reason": e.to_string()}), Some(e)),
                Err(e) => return Err(e.into()),
            };
            out.push_str(&json_text(&Classification {
                paradoxical: classification.paradoxical_system,
                statuses,
                groundedness: verdict,
            }));
            if let Some(e) = ceiling {
                return Err(e.into());
            }
        }
        Command::Generate { name, n, p, seed } => {
            let sys = GeneratorSpec::from_parts(&name, n, p, seed)?.generate()?;
            out.push_str(&serialize(&sys));
        }
        Command::Bench { n, p, seeds } => {
            with_pool(cli.jobs, || bench(n, p, seeds, &limits, out))??;
        }
    }
    Ok(())
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}"))),
    }
}

#[derive(Serialize)]
struct Listing<T> {
    what: String,
    items: Vec<T>,
    truncated: bool,
}

fn listing<T: Serialize>(what: impl Into<String>, items: Vec<T>, truncated: bool) -> String {
    json_text(&Listing { what: what.into(), items, truncated })
}

#[derive(Serialize)]
struct Classification {
    paradoxical: bool,
    statuses: BTreeMap<String, SentenceStatus>,
    groundedness: Value,
}

fn enumerate_family(sys: &FSystem, what: Family, limit: Option<usize>, limits: &Limits) -> Result<String, Error> {
    let cap = limit.unwrap_or(usize::MAX);
    let sets = |kind: SetKind| -> Result<String, Error> {
        let found = enumerate(sys, kind, limits)?.sets;
        let truncated = found.len() > cap;
        let items: Vec<Vec<String>> = found.iter().take(cap).map(|s| sys.names_of(s)).collect();
        Ok(listing(kind.to_string(), items, truncated))
    };
    match what {
        Family::Labellings | Family::Classical => {
            let mode = if matches!(what, Family::Classical) { Mode::Classical } else { Mode::All };
            let cap = cap.min(limits.labelling_limit);
            let mut found = Vec::new();
            let mut truncated = false;
            for_each_labelling(sys, mode, |l| {
                if found.len() == cap {
                    truncated = true;
                    return ControlFlow::Break(());
                }
                found.push(l.clone());
                ControlFlow::Continue(())
            });
            found.sort();
            let items: Vec<_> = found.iter().map(|l| l.to_named(sys)).collect();
            let name = if mode == Mode::Classical { "classical-labelling" } else { "labelling" };
            Ok(listing(name, items, truncated))
        }
        Family::Conglomerates => sets(SetKind::Conglomerate),
        Family::Kernels => sets(SetKind::Kernel),
        Family::Local => sets(SetKind::LocalConglomerate),
        Family::MaximalLocal => sets(SetKind::MaximalLocalConglomerate),
        Family::FixedPoints => {
            let report = enumerate_fixed_points(sys, FixedPointQuery::default(), limits)?;
            let truncated = report.points.len() > cap;
            let items: Vec<Value> = report
                .points
                .iter()
                .take(cap)
                .map(|e| {
                    json!({
                        "plus": sys.names_of(&e.point.plus),
                        "minus": sys.names_of(&e.point.minus),
                        "complete": e.complete,
                        "consistent": e.consistent,
                        "maximal": e.maximal,
                        "least_for_base": e.least_for_base,
                    })
                })
                .collect();
            Ok(listing("fixed-point", items, truncated))
        }
    }
}

fn bench(n: usize, p: f64, seeds: u64, limits: &Limits, out: &mut String) -> Result<(), Failure> {
    out.push_str("seed\tsentences\tedges\tconglomerates\tlabelling_ms\tconglomerate_ms\tgroundedness_ms\tstructure_ms\n");
    let ms = |start: Instant| start.elapsed().as_secs_f64() * 1000.0;
    for seed in 0..seeds {
        let sys = fsystems::generate::random(n, p, seed)?;
        let t = Instant::now();
        fsystems::labelling::is_paradoxical(&sys);
        let labelling = ms(t);
        let t = Instant::now();
        let count = enumerate(&sys, SetKind::Conglomerate, limits)?.sets.len();
        let conglomerate = ms(t);
        let t = Instant::now();
        classify_groundedness(&sys, limits)?;
        let groundedness = ms(t);
        let t = Instant::now();
        fsystems::structure::analyze_structure(&sys, limits);
        let structure = ms(t);
        out.push_str(&format!(
            "{seed}\t{}\t{}\t{count}\t{labelling:.3}\t{conglomerate:.3}\t{groundedness:.3}\t{structure:.3}\n",
            sys.len(),
            sys.edge_count()
        ));
    }
    Ok(())
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
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = io::stdout().lock();
    if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(EXIT_INPUT);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Ceiling(m) => (EXIT_CEILING, m),
                Failure::Usage(m) => (EXIT_USAGE, m),
            };
            eprintln!("fsys: {message}");
            ExitCode::from(code)
        }
    }
}
