use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use orbigreen::checkpoints::{all_checkpoints, run_checkpoint};
use orbigreen::io::{to_dot, DiagramDocument, DotOptions};
use orbigreen::search::{search_mgs, SearchConfig, SearchMode, SearchOutcome};
use orbigreen::verify::{apply_with, render_trace, ApplyOptions, Mode, TraceStyle, VerificationReport};
use orbigreen::{build_diagram, delta, delta_amended, FramedSeed, MutationSequence, OrbifoldParams, VertexLabel};

const EXIT_USAGE: u8 = 1;
const EXIT_UNSUPPORTED: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;
const EXIT_BUDGET: u8 = 4;
const EXIT_NOT_VALID: u8 = 5;

#[derive(Parser)]
#[command(name = "orbigreen", version, about = "Maximal green sequences for orbifold diagrams")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Params {
    /// Genus
    #[arg(short = 'n', long = "genus")]
    n: Option<u32>,
    /// Number of punctures
    #[arg(short = 'p', long = "punctures")]
    p: Option<u32>,
    /// Number of orbifold points
    #[arg(short = 'q', long = "orbifold")]
    q: Option<u32>,
}

impl Params {
    fn get(self) -> Option<OrbifoldParams> {
        Some(OrbifoldParams::new(self.n?, self.p?, self.q?))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Trace {
    Superscript,
    Matrix,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the diagram of (n,p,q)
    Build {
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Include the frozen companions (identity frame)
        #[arg(long)]
        frozen: bool,
    },
    /// Print Δ for (n,p,q), one label per line
    Sequence {
        #[command(flatten)]
        params: Params,
        /// Tag each label with the step it belongs to
        #[arg(long)]
        annotate: bool,
        /// Use the amended genus-0 two-puncture band sequence
        #[arg(long)]
        amended: bool,
    },
    /// Replay a sequence and report whether it is a maximal green sequence
    Verify {
        #[command(flatten)]
        params: Params,
        /// Diagram document to verify on instead of a built diagram
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated labels (default: Δ for the parameters)
        #[arg(long)]
        sequence: Option<String>,
        #[arg(long, value_enum)]
        trace: Option<Trace>,
        /// Also check the intermediate-state checkpoints for this run
        #[arg(long)]
        checkpoints: bool,
        /// Verify every supported point with n ≤ 4, 2 ≤ p ≤ 7, q ≤ 4
        #[arg(long)]
        grid: bool,
        /// Use the amended genus-0 two-puncture band sequence
        #[arg(long)]
        amended: bool,
        /// Keep going past red mutations and list every violation
        #[arg(long)]
        permissive: bool,
        /// Print the full report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Bounded search for a maximal green sequence
    Search {
        #[command(flatten)]
        params: Params,
        /// Diagram document to search on instead of a built diagram
        #[arg(long)]
        input: Option<PathBuf>,
        /// Longest sequence to consider
        #[arg(long, default_value_t = 32)]
        max_depth: usize,
        /// Give up after expanding this many states
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
        /// List every sequence (rank ≤ 4)
        #[arg(long, conflicts_with = "any")]
        all: bool,
        /// Depth-first: return any sequence, not necessarily a shortest one
        #[arg(long)]
        any: bool,
    },
}

/// Failure with an exit code; the message goes to stderr.
struct Fail(u8, String);

type CmdResult = Result<u8, Fail>;

fn usage(msg: impl ToString) -> Fail {
    Fail(EXIT_USAGE, msg.to_string())
}

fn need_params(p: Params) -> Result<OrbifoldParams, Fail> {
    p.get().ok_or_else(|| usage("-n, -p and -q are all required"))
}

fn load(path: &PathBuf) -> Result<DiagramDocument, Fail> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    DiagramDocument::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn pick_delta(pr: OrbifoldParams, amended: bool) -> Result<MutationSequence, Fail> {
    let r = if amended { delta_amended(pr) } else { delta(pr) };
    r.map_err(|e| Fail(EXIT_UNSUPPORTED, e.to_string()))
}

fn build(params: Params, format: Format, frozen: bool) -> CmdResult {
    let pr = need_params(params)?;
    let m = build_diagram(pr).map_err(|e| Fail(EXIT_UNSUPPORTED, e.to_string()))?;
    let seed = FramedSeed::frame(m);
    let out = match format {
        Format::Json if frozen => DiagramDocument::from_seed(&seed, Some(pr)).to_json() + "\n",
        Format::Json => DiagramDocument::from_matrix(seed.base(), Some(pr)).to_json() + "\n",
        Format::Dot => {
            to_dot(&seed, &format!("D{pr}"), DotOptions { colors: frozen, frozen }).map_err(|e| usage(e.to_string()))?
        }
    };
    print!("{out}");
    Ok(0)
}

fn sequence(params: Params, annotate: bool, amended: bool) -> CmdResult {
    let pr = need_params(params)?;
    let seq = pick_delta(pr, amended)?;
    for (i, v) in seq.steps.iter().enumerate() {
        match seq.step_at(i).filter(|_| annotate) {
            Some(seg) => println!("{v}\t{} step {}", seg.sequence, seg.step),
            None => println!("{v}"),
        }
    }
    Ok(0)
}

fn parse_labels(s: &str) -> Result<Vec<VertexLabel>, Fail> {
    s.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<VertexLabel>().map_err(|e| usage(e.to_string())))
        .collect()
}

fn grid_points() -> Vec<OrbifoldParams> {
    let mut out = Vec::new();
    for n in 0..=4 {
        for p in 2..=7 {
            for q in 1..=4 {
                let pr = OrbifoldParams::new(n, p, q);
                // (0,2,2) is left out pending its open question
                if orbigreen::validate_params(pr).is_ok() && !(n == 0 && p == 2 && q == 2) {
                    out.push(pr);
                }
            }
        }
    }
    out
}

fn verify_grid(amended: bool, with_checkpoints: bool) -> CmdResult {
    let results: Vec<(OrbifoldParams, Result<VerificationReport, String>)> = grid_points()
        .into_par_iter()
        .map(|pr| {
            let run = || -> Result<VerificationReport, String> {
                let m = build_diagram(pr).map_err(|e| e.to_string())?;
                let seq = if amended { delta_amended(pr) } else { delta(pr) }.map_err(|e| e.to_string())?;
                apply_with(&FramedSeed::frame(m), &seq.steps, ApplyOptions::default())
                    .map(|(_, r)| r)
                    .map_err(|e| e.to_string())
            };
            (pr, run())
        })
        .collect();
    let mut bad = 0;
    for (pr, r) in &results {
        match r {
            Ok(rep) if rep.is_valid() && rep.final_negative_permutation => println!("{pr} {}", rep.summary()),
            Ok(rep) => {
                bad += 1;
                println!("{pr} {}", rep.summary());
            }
            Err(e) => {
                bad += 1;
                println!("{pr} error: {e}");
            }
        }
    }
    if with_checkpoints {
        bad += report_checkpoints(None);
    }
    println!("{} points, {} failed", results.len(), bad);
    Ok(if bad == 0 { 0 } else { EXIT_NOT_VALID })
}

/// Print checkpoint results (all, or those for one run); returns failures.
fn report_checkpoints(only: Option<OrbifoldParams>) -> usize {
    let mut bad = 0;
    let mut any = false;
    for c in all_checkpoints().iter().filter(|c| only.is_none_or(|p| p == c.params)) {
        any = true;
        let at = c.after_steps.map_or(format!("step {}", c.after_step), |k| format!("{k} mutations"));
        match run_checkpoint(c) {
            Ok(()) => println!("checkpoint {} {} after {at}: ok", c.name, c.params),
            Err(why) => {
                bad += 1;
                println!("checkpoint {} {} after {at}: FAIL", c.name, c.params);
                for w in why {
                    println!("  {w}");
                }
            }
        }
    }
    if !any {
        println!("no checkpoints for this run");
    }
    bad
}

#[allow(clippy::too_many_arguments)]
fn verify(
    params: Params,
    input: Option<PathBuf>,
    sequence: Option<String>,
    trace: Option<Trace>,
    with_checkpoints: bool,
    grid: bool,
    amended: bool,
    permissive: bool,
    json: bool,
) -> CmdResult {
    if grid {
        return verify_grid(amended, with_checkpoints);
    }
    let (seed, pr) = match &input {
        Some(path) => {
            let doc = load(path)?;
            (doc.to_seed().map_err(|e| usage(e.to_string()))?, doc.orbifold_params().or(params.get()))
        }
        None => {
            let pr = need_params(params)?;
            let m = build_diagram(pr).map_err(|e| Fail(EXIT_UNSUPPORTED, e.to_string()))?;
            (FramedSeed::frame(m), Some(pr))
        }
    };
    let steps = match (&sequence, pr) {
        (Some(s), _) => parse_labels(s)?,
        (None, Some(pr)) => pick_delta(pr, amended)?.steps,
        (None, None) => return Err(usage("custom diagrams need --sequence")),
    };
    let mode = if permissive { Mode::Permissive } else { Mode::Strict };
    let opts = ApplyOptions { mode, keep_states: trace.is_some() };
    let (_, rep) = apply_with(&seed, &steps, opts).map_err(|e| usage(e.to_string()))?;
    if json {
        println!("{}", serde_json::to_string_pretty(&rep).expect("reports serialize"));
    } else {
        if let Some(t) = trace {
            let style = match t {
                Trace::Superscript => TraceStyle::Superscript,
                Trace::Matrix => TraceStyle::Matrix,
            };
            print!("{}", render_trace(&rep, style));
        }
        println!("{}", rep.summary());
    }
    let mut bad = 0;
    if with_checkpoints {
        match pr {
            Some(pr) if sequence.is_none() && input.is_none() => bad = report_checkpoints(Some(pr)),
            _ => println!("checkpoints only apply to built diagrams replaying Δ"),
        }
    }
    Ok(if rep.is_valid() && bad == 0 { 0 } else { EXIT_NOT_VALID })
}

fn search(
    params: Params,
    input: Option<PathBuf>,
    max_depth: usize,
    max_states: usize,
    all: bool,
    any: bool,
) -> CmdResult {
    let m = match &input {
        Some(path) => load(path)?.to_matrix().map_err(|e| usage(e.to_string()))?,
        None => build_diagram(need_params(params)?).map_err(|e| Fail(EXIT_UNSUPPORTED, e.to_string()))?,
    };
    let mode = match (all, any) {
        (true, _) => SearchMode::All,
        (_, true) => SearchMode::First,
        _ => SearchMode::Shortest,
    };
    let cfg = SearchConfig { max_depth, max_states, mode, dedup: true };
    let res = search_mgs(&m, cfg).map_err(|e| usage(e.to_string()))?;
    match res.outcome {
        SearchOutcome::Found(seqs) => {
            for s in seqs {
                let names: Vec<String> = s.iter().map(|v| v.to_string()).collect();
                println!("({})", names.join(","));
            }
            Ok(0)
        }
        SearchOutcome::Exhausted => {
            println!("exhausted: no maximal green sequence of length <= {max_depth}");
            Ok(EXIT_EXHAUSTED)
        }
        SearchOutcome::BudgetExceeded => {
            println!("budget exceeded after {max_states} states");
            Ok(EXIT_BUDGET)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let res = match cli.cmd {
        Cmd::Build { params, format, frozen } => build(params, format, frozen),
        Cmd::Sequence { params, annotate, amended } => sequence(params, annotate, amended),
        Cmd::Verify { params, input, sequence, trace, checkpoints, grid, amended, permissive, json } => {
            verify(params, input, sequence, trace, checkpoints, grid, amended, permissive, json)
        }
        Cmd::Search { params, input, max_depth, max_states, all, any } => {
            search(params, input, max_depth, max_states, all, any)
        }
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
