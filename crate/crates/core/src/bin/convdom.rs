use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use convdom::domination::{
    domination_number_bruteforce, gamma_con_bruteforce, gamma_con_hull4, gamma_iso,
    gamma_iso_bruteforce, SolveOptions, SolverResult, DEFAULT_ORACLE_BOUND, DEFAULT_PATH_CAP,
};
use convdom::generators::{Family, GenSpec};
use convdom::graph::parse_edge_list;
use convdom::recognition::{
    dp_bruteforce_counterexample, find_dominating_pair, is_chordal, is_chordal_dp_graph,
    split_partition, DEFAULT_DP_BRUTEFORCE_BOUND,
};
use convdom::record::{ErrorReport, InputDigest, ResultRecord};
use convdom::reduction::{gadget_edge_list, GadgetCheck};
use convdom::{Error, Graph};

/// Convex and isometric domination on dominating pair graphs.
///
/// Each run prints one JSON record on stdout and a short summary on stderr.
/// Exit codes: 0 success, 1 parse error, 2 wrong graph class, 3 size guard or
/// search cap, 4 anything else.
#[derive(Parser, Debug)]
#[command(name = "convdom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args, Debug, Clone)]
struct Flags {
    /// Skip class recognition before the polynomial solver; certificates are marked assumed
    #[arg(long, global = true)]
    trust_class: bool,
    /// Worker threads for candidate sweeps (results do not depend on it)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Node expansions allowed per shortest-path search
    #[arg(long, global = true, default_value_t = DEFAULT_PATH_CAP)]
    path_cap: u64,
    /// Largest vertex count for exhaustive oracles
    #[arg(long, global = true)]
    oracle_bound: Option<usize>,
    /// Seed for random generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

impl Flags {
    fn solve_options(&self) -> SolveOptions {
        SolveOptions {
            jobs: self.jobs.max(1),
            path_cap: self.path_cap,
            oracle_bound: self.oracle_bound.unwrap_or(DEFAULT_ORACLE_BOUND),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Polynomial solver: hull of at most four seeds (convex) or the staged pair algorithm (isometric)
    Solve { kind: SolveKind, input: PathBuf },
    /// Chordality, dominating pair and forbidden-subgraph checks
    Recognize { input: PathBuf },
    /// Exhaustive solver or dominating pair graph test
    Oracle { kind: OracleKind, input: PathBuf },
    /// Split-graph reduction gadget plus the equivalence check for one k
    Gadget {
        input: PathBuf,
        #[arg(long)]
        k: usize,
        /// Gadget file; defaults to `<input stem>.gadget.elist` beside the input
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a fixture in the canonical edge-list format
    Generate {
        #[arg(long)]
        family: Family,
        /// Vertex count, leaf count for stars, or the index of B_n
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Output file; defaults to `<spec stem>.elist` in --out-dir
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SolveKind {
    Convex,
    Isometric,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OracleKind {
    Convex,
    Isometric,
    Dp,
    Plain,
}

enum Failure {
    Lib(Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) => e.exit_code() as u8,
            Failure::Io { .. } => 4,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io { path, source } => format!("{}: {source}", path.display()),
        }
    }

    fn report(&self) -> ErrorReport {
        match self {
            Failure::Lib(e) => e.into(),
            Failure::Io { .. } => ErrorReport {
                kind: "io",
                message: self.message(),
                exit_code: 4,
                detail: None,
            },
        }
    }
}

type Outcome = Result<(Value, String), Failure>;

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse(bytes: &[u8]) -> Result<Graph, Failure> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1 + bytes[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        column: 1 + bytes[..e.valid_up_to()]
            .iter()
            .rev()
            .take_while(|&&b| b != b'\n')
            .count(),
        message: "input is not valid UTF-8".into(),
    })?;
    Ok(parse_edge_list(text)?)
}

fn summarize(r: &SolverResult) -> String {
    let mut s = format!(
        "{:?} {:?}: value {} witness {}",
        r.objective, r.method, r.value, r.witness
    );
    if let Some(seed) = &r.seed {
        s += &format!(" seed {seed}");
    }
    if let (Some(p), Some(stage)) = (&r.pair, r.stage) {
        s += &format!(" pair ({}, {}) stage {stage}", p.x, p.y);
    }
    s
}

fn solve(kind: SolveKind, g: &Graph, flags: &Flags) -> Outcome {
    let opts = flags.solve_options();
    let r = match kind {
        SolveKind::Convex => gamma_con_hull4(g, flags.trust_class, &opts)?,
        SolveKind::Isometric => gamma_iso(g, &opts)?,
    };
    Ok((
        serde_json::to_value(&r).expect("serializable"),
        summarize(&r),
    ))
}

fn recognize(g: &Graph) -> Outcome {
    let chordal = is_chordal(g);
    let connected = g.is_connected();
    let pair = if connected {
        find_dominating_pair(g)?
    } else {
        None
    };
    let chordal_dp = is_chordal_dp_graph(g);
    let split = split_partition(g);
    let summary = format!(
        "chordal {} connected {} dominating pair {} chordal dp {}{}",
        yes(chordal.is_chordal()),
        yes(connected),
        pair.map_or("none".to_string(), |p| format!("({}, {})", p.x, p.y)),
        yes(chordal_dp.is_member()),
        chordal_dp.witness().map_or(String::new(), |w| format!(
            " (induced {} at {:?})",
            w.family, w.embedding
        )),
    );
    let v = json!({
        "chordal": chordal,
        "connected": connected,
        "weak_dp": pair.is_some(),
        "dominating_pair": pair,
        "chordal_dp": chordal_dp,
        "split": split,
    });
    Ok((v, summary))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn oracle(kind: OracleKind, g: &Graph, flags: &Flags) -> Outcome {
    let opts = flags.solve_options();
    let r = match kind {
        OracleKind::Convex => gamma_con_bruteforce(g, &opts)?,
        OracleKind::Isometric => gamma_iso_bruteforce(g, &opts)?,
        OracleKind::Plain => domination_number_bruteforce(g, &opts)?,
        OracleKind::Dp => {
            let bound = flags.oracle_bound.unwrap_or(DEFAULT_DP_BRUTEFORCE_BOUND);
            let bad = dp_bruteforce_counterexample(g, bound)?;
            let summary = match &bad {
                None => "dominating pair graph: yes".to_string(),
                Some(s) => {
                    format!("dominating pair graph: no; induced on {s} has no dominating pair")
                }
            };
            return Ok((
                json!({ "dp_graph": bad.is_none(), "counterexample": bad }),
                summary,
            ));
        }
    };
    Ok((
        serde_json::to_value(&r).expect("serializable"),
        summarize(&r),
    ))
}

fn gadget(input: &Path, g: &Graph, k: usize, output: Option<PathBuf>, flags: &Flags) -> Outcome {
    let check = GadgetCheck::new(g, &flags.solve_options())?;
    let report = check.report(k);
    let text = gadget_edge_list(&check.gadget);
    let path = output.unwrap_or_else(|| {
        let stem = input
            .file_stem()
            .map_or("input".into(), |s| s.to_string_lossy().into_owned());
        input.with_file_name(format!("{stem}.gadget.elist"))
    });
    write(&path, &text)?;
    let summary = format!(
        "gadget {} ({} vertices); gamma_con {} -> {}; k {}: {} <=> {} holds {}",
        path.display(),
        check.gadget.graph.n(),
        report.input_value,
        report.gadget_value,
        k,
        report.input_side,
        report.gadget_side,
        report.holds
    );
    let v = json!({
        "gadget": check.gadget,
        "gadget_file": InputDigest::of(text.as_bytes()),
        "report": report,
    });
    Ok((v, summary))
}

fn generate(spec: &GenSpec, output: Option<PathBuf>, out_dir: &Path) -> Outcome {
    let text = spec.to_edge_list()?;
    let path = output.unwrap_or_else(|| out_dir.join(format!("{}.elist", spec.file_stem())));
    write(&path, &text)?;
    let g = parse_edge_list(&text)?;
    let summary = format!(
        "wrote {} ({} vertices, {} edges)",
        path.display(),
        g.n(),
        g.edge_count()
    );
    let v = json!({
        "spec": spec,
        "file_stem": spec.file_stem(),
        "n": g.n(),
        "m": g.edge_count(),
        "file": InputDigest::of(text.as_bytes()),
    });
    Ok((v, summary))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // keep usage errors off the class/guard codes
            return ExitCode::from(if e.use_stderr() { 4 } else { 0 });
        }
    };
    let flags = &cli.flags;
    // jobs is left out on purpose: records must not depend on it
    let mut options = json!({
        "trust_class": flags.trust_class,
        "path_cap": flags.path_cap,
        "oracle_bound": flags.oracle_bound,
    });

    let start = Instant::now();
    let (name, input_digest, outcome) = match &cli.command {
        Command::Generate {
            family,
            n,
            density,
            output,
            out_dir,
        } => {
            let spec = GenSpec {
                family: *family,
                n: *n,
                seed: flags.seed,
                density: *density,
            };
            options["seed"] = json!(flags.seed);
            (
                "generate".to_string(),
                None,
                generate(&spec, output.clone(), out_dir),
            )
        }
        command => {
            let (name, input) = match command {
                Command::Solve { kind, input } => (format!("solve {}", kind_name(*kind)), input),
                Command::Recognize { input } => ("recognize".to_string(), input),
                Command::Oracle { kind, input } => {
                    (format!("oracle {}", oracle_name(*kind)), input)
                }
                Command::Gadget { input, .. } => ("gadget".to_string(), input),
                Command::Generate { .. } => unreachable!(),
            };
            match read(input) {
                Err(f) => (name, None, Err(f)),
                Ok(bytes) => {
                    let digest = InputDigest::of(&bytes);
                    let outcome = parse(&bytes).and_then(|g| match command {
                        Command::Solve { kind, .. } => solve(*kind, &g, flags),
                        Command::Recognize { .. } => recognize(&g),
                        Command::Oracle { kind, .. } => oracle(*kind, &g, flags),
                        Command::Gadget { input, k, output } => {
                            options["k"] = json!(k);
                            gadget(input, &g, *k, output.clone(), flags)
                        }
                        Command::Generate { .. } => unreachable!(),
                    });
                    (name, Some(digest), outcome)
                }
            }
        }
    };

    let record = ResultRecord::new(name.clone(), input_digest, options);
    let (record, code) = match outcome {
        Ok((value, summary)) => {
            eprintln!("{name}: {summary}");
            (record.with_result(value), 0)
        }
        Err(f) => {
            eprintln!("{name}: error: {}", f.message());
            let mut record = record;
            record.error = Some(f.report());
            (record, f.exit_code())
        }
    };
    println!("{}", record.with_elapsed(start.elapsed()).to_line());
    ExitCode::from(code)
}

fn kind_name(k: SolveKind) -> &'static str {
    match k {
        SolveKind::Convex => "convex",
        SolveKind::Isometric => "isometric",
    }
}

fn oracle_name(k: OracleKind) -> &'static str {
    match k {
        OracleKind::Convex => "convex",
        OracleKind::Isometric => "isometric",
        OracleKind::Dp => "dp",
        OracleKind::Plain => "plain",
    }
}
