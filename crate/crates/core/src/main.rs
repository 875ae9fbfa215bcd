use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use satlab::construct::{make_split, SplitParams};
use satlab::graph6::{parse_lines, to_graph6_string};
use satlab::verify::{parse_range, render_table, verify_theorem, Theorem};
use satlab::{check_saturation, extremal_count, probe_conjecture, random_saturated, Error, Graph, Mode, MotifSpec, SearchBudget};

const EXIT_PARAM: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_SATURATED: u8 = 3;
const EXIT_OVERFLOW: u8 = 4;
const EXIT_BUDGET: u8 = 5;
const EXIT_VERIFY_FAILED: u8 = 6;

#[derive(Parser)]
#[command(name = "satlab", version, about = "Saturated graphs: construct, check, count and search")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomised subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker shards for exhaustive search. SATLAB_SHARDS takes precedence.
    #[arg(long, global = true)]
    shards: Option<usize>,

    /// Abort exhaustive search after this many seconds.
    #[arg(long, global = true)]
    time_limit: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a graph in graph6.
    Construct(ConstructArgs),
    /// Report K_s-saturation of each input graph.
    Check {
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Count copies of a motif in each input graph.
    Count {
        /// matching:K, clique:R or indepset:L
        #[arg(long)]
        motif: String,
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive extremal search over K_s-saturated graphs on n <= 8 vertices.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        motif: String,
        #[arg(long, default_value = "min")]
        mode: String,
    },
    /// Compare enumerated optima with closed forms over a range of n.
    Verify {
        /// ehm, cliques or main
        #[arg(long)]
        theorem: String,
        /// Inclusive range A..B
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        s: usize,
        /// Matching size for `main`.
        #[arg(long)]
        k: Option<usize>,
        /// Clique order for `cliques`.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Sample random saturated graphs and compare with the split graph.
    Probe {
        #[arg(long)]
        n_range: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Print one random K_s-saturated graph.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ConstructArgs {
    /// Split graph: a Q-clique joined to N-Q independent vertices.
    #[arg(long, num_args = 2, value_names = ["N", "Q"])]
    split: Option<Vec<usize>>,
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    #[arg(long, value_name = "N")]
    empty: Option<usize>,
}

#[derive(Args)]
struct Input {
    /// graph6 file, one graph per line. Reads stdin when absent.
    #[arg(long, short)]
    input: Option<PathBuf>,
}

impl Input {
    fn graphs(&self) -> Result<Vec<Graph>, Failure> {
        let text = match &self.input {
            Some(p) => fs::read_to_string(p).map_err(|e| Failure::io(p.display(), e))?,
            None => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s).map_err(|e| Failure::io("stdin", e))?;
                s
            }
        };
        let graphs = parse_lines(&text)?;
        if graphs.is_empty() {
            return Err(Error::Parse {
                offset: 0,
                message: "no graphs in input".into(),
            }
            .into());
        }
        Ok(graphs)
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn io(what: impl std::fmt::Display, e: io::Error) -> Self {
        Failure {
            code: EXIT_PARAM,
            message: format!("cannot read {what}: {e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parameter(_) | Error::Domain(_) => EXIT_PARAM,
            Error::Parse { .. } => EXIT_PARSE,
            Error::Overflow(_) => EXIT_OVERFLOW,
            Error::Budget(_) => EXIT_BUDGET,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn budget(cli: &Cli) -> Result<SearchBudget, Failure> {
    let mut b = SearchBudget::default();
    let env = std::env::var("SATLAB_SHARDS").ok();
    if let Some(v) = env {
        b.parallel_shards = v
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("SATLAB_SHARDS must be a positive integer, got {v:?}")))?;
    } else if let Some(s) = cli.shards {
        b.parallel_shards = s;
    }
    if let Some(t) = cli.time_limit {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Error::Parameter(format!("time limit must be nonnegative, got {t}")).into());
        }
        b.time_limit = Some(Duration::from_secs_f64(t));
    }
    Ok(b)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialisable")
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let mut code = 0;
    match &cli.cmd {
        Cmd::Construct(a) => {
            let g = match (&a.split, a.complete, a.empty) {
                (Some(v), _, _) => make_split(SplitParams::new(v[0], v[1])?)?,
                (_, Some(n), _) => Graph::complete(n)?,
                (_, _, Some(n)) => Graph::empty(n)?,
                _ => unreachable!("clap enforces one construction"),
            };
            writeln!(out, "{}", to_graph6_string(&g)).ok();
        }
        Cmd::Check { s, input } => {
            for g in input.graphs()? {
                let rep = check_saturation(&g, *s)?;
                if !rep.is_saturated {
                    code = EXIT_NOT_SATURATED;
                }
                match cli.format {
                    Format::Json => writeln!(out, "{}", json(&rep)),
                    Format::Table => writeln!(
                        out,
                        "n={} s={} free={} saturated={} failures={}",
                        rep.n,
                        rep.s,
                        rep.is_free,
                        rep.is_saturated,
                        rep.missing_edge_failures.len()
                    ),
                }
                .ok();
            }
        }
        Cmd::Count { motif, input } => {
            let motif: MotifSpec = motif.parse()?;
            for g in input.graphs()? {
                writeln!(out, "{}", motif.count(&g)?).ok();
            }
        }
        Cmd::Search { n, s, motif, mode } => {
            let motif: MotifSpec = motif.parse()?;
            let mode: Mode = mode.parse()?;
            let res = extremal_count(*n, *s, motif, mode, &budget(cli)?)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", res.to_json()),
                Format::Table => {
                    let hist: Vec<String> = res.histogram.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                    let ext: Vec<&str> = res.extremal_graphs.iter().map(|c| c.as_str()).collect();
                    writeln!(
                        out,
                        "n={} s={} motif={} mode={:?} optimum={} unique={} classes={}\nextremal {}\nhistogram {}",
                        res.n,
                        res.s,
                        res.motif,
                        res.mode,
                        res.optimum,
                        res.unique,
                        res.saturated_class_count,
                        ext.join(" "),
                        hist.join(" ")
                    )
                }
            }
            .ok();
        }
        Cmd::Verify {
            theorem,
            n_range,
            s,
            k,
            r,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let param = match theorem {
                Theorem::Ehm => None,
                Theorem::Cliques => *r,
                Theorem::Main => *k,
            };
            let rows = verify_theorem(theorem, parse_range(n_range)?, *s, param, &budget(cli)?)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&rows)),
                Format::Table => write!(out, "{}", render_table(&rows)),
            }
            .ok();
            if rows.iter().any(|r| !r.passed) {
                eprintln!("verification failed");
                code = EXIT_VERIFY_FAILED;
            }
        }
        Cmd::Probe { n_range, s, k, samples } => {
            let rows = probe_conjecture(parse_range(n_range)?, *s, *k, *samples, cli.seed)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", json(&rows)).ok(),
                Format::Table => {
                    writeln!(out, "{:>3} {:>8} {:>14} {:>14} {:>14} {:>6}", "n", "samples", "sampled_min", "split", "sampled_max", "ok").ok();
                    for r in &rows {
                        writeln!(
                            out,
                            "{:>3} {:>8} {:>14} {:>14} {:>14} {:>6}",
                            r.n,
                            r.samples,
                            r.sampled_min.to_string(),
                            r.split_value.to_string(),
                            r.sampled_max.to_string(),
                            r.min_at_least_split && r.edge_bound_ok
                        )
                        .ok();
                    }
                    Some(())
                }
            };
        }
        Cmd::Sample { n, s } => {
            writeln!(out, "{}", to_graph6_string(&random_saturated(*n, *s, cli.seed)?)).ok();
        }
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARAM } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(&cli, &mut out) {
        Ok(c) => c,
        Err(f) => {
            eprintln!("satlab: {}", f.message);
            f.code
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
