use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use neighborly::report::{self, ComplexJson, GraphReportJson, ReportJson, TraceJson};
use neighborly::sweep::{parse_range, sweep, SweepError};
use neighborly::{read_edge_list, EdgeListError};
use neighborly_core::circulant::seed_pairs;
use neighborly_core::{
    analyze_graph, classify, collapse_core, collapse_core_seeded, neighborhood_complex, verify_params, CirculantParams,
    CollapseStrategy, Graph, Verdict,
};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNREADABLE: u8 = 3;

#[derive(Parser)]
#[command(name = "neighborly", version, about = "Neighborhood complexes of graphs and 4-regular circulants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Topology of one circulant or one edge-list graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Verify every parameter pair for n in a range.
    Sweep {
        /// Inclusive range, e.g. 5..40.
        #[arg(long = "n", value_name = "A..B")]
        range: String,
        #[command(flatten)]
        output: Output,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Write the neighborhood complex as JSON.
    Export {
        #[command(flatten)]
        input: Input,
        /// Write the collapsed core instead of the complex.
        #[arg(long)]
        core: bool,
        /// Include the complex, the collapse pairs and the core.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Circulant parameters `n,s,t`.
    #[arg(long, value_name = "N,S,T")]
    circulant: Option<String>,
    /// Edge-list file.
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<EdgeListError> for Failure {
    fn from(e: EdgeListError) -> Self {
        let code = match e {
            EdgeListError::Io { .. } => EXIT_UNREADABLE,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, output } => analyze(&input, &output),
        Command::Sweep { range, output, workers } => run_sweep(&range, &output, workers),
        Command::Export { input, core, trace, out } => export(&input, core, trace, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("neighborly: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_circulant(text: &str) -> Result<CirculantParams, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let nums: Vec<usize> = parts
        .iter()
        .map(|p| p.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage(format!("--circulant expects n,s,t, got {text:?}")))?;
    let [n, s, t] = nums[..] else {
        return Err(Failure::usage(format!("--circulant expects n,s,t, got {text:?}")));
    };
    CirculantParams::normalize(n, s, t).map_err(|e| Failure::usage(e.to_string()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: EXIT_UNREADABLE,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure {
                code: EXIT_UNREADABLE,
                message: format!("cannot write output: {e}"),
            })
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn exit_for(verdict: &str) -> u8 {
    if verdict == Verdict::Fail.name() {
        EXIT_FAIL
    } else {
        0
    }
}

fn analyze(input: &Input, output: &Output) -> Result<u8, Failure> {
    if let Some(text) = &input.circulant {
        let p = parse_circulant(text)?;
        let r = verify_params(p).map_err(|e| Failure::usage(e.to_string()))?;
        let view = ReportJson::from(&r);
        let text = match output.format {
            Format::Text => report::report_text(&view),
            Format::Json => json(&view),
            Format::Csv => report::reports_to_csv(std::slice::from_ref(&view)),
        };
        emit(&text, output.out.as_deref())?;
        return Ok(exit_for(view.verdict));
    }
    let path = input.graph.as_ref().expect("clap enforces one input");
    let g = read_edge_list(path)?;
    let r = analyze_graph(&g).map_err(|e| Failure::usage(e.to_string()))?;
    let view = GraphReportJson::from(&r);
    let text = match output.format {
        Format::Text => report::graph_report_text(&view),
        Format::Json => json(&view),
        Format::Csv => report::graph_report_to_csv(&view),
    };
    emit(&text, output.out.as_deref())?;
    Ok(exit_for(view.verdict))
}

fn run_sweep(range: &str, output: &Output, workers: Option<usize>) -> Result<u8, Failure> {
    let (min, max) = parse_range(range).ok_or_else(|| Failure::usage(format!("--n expects A..B, got {range:?}")))?;
    let reports = sweep(min, max, workers).map_err(|e| match e {
        SweepError::Range { .. } => Failure::usage(e.to_string()),
        other => Failure {
            code: EXIT_FAIL,
            message: other.to_string(),
        },
    })?;
    let views: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
    let text = match output.format {
        Format::Text => views.iter().map(report::report_text).collect(),
        Format::Json => json(&views),
        Format::Csv => report::reports_to_csv(&views),
    };
    emit(&text, output.out.as_deref())?;
    let (pass, fail, notable) = report::tally(&views);
    eprintln!("{} instances: {pass} pass, {fail} fail, {notable} notable", views.len());
    Ok(if fail > 0 { EXIT_FAIL } else { 0 })
}

fn export(input: &Input, core: bool, trace: bool, out: Option<&Path>) -> Result<u8, Failure> {
    let (k, seeds) = match (&input.circulant, &input.graph) {
        (Some(text), _) => {
            let p = parse_circulant(text)?;
            (neighborhood_complex(&p.graph()), seed_pairs(p, classify(p).tag))
        }
        (None, Some(path)) => {
            let g: Graph = read_edge_list(path)?;
            (neighborhood_complex(&g), Vec::new())
        }
        (None, None) => unreachable!("clap enforces one input"),
    };
    let text = if trace || core {
        let collapsed = if seeds.is_empty() {
            collapse_core(&k, CollapseStrategy::Generic)
        } else {
            collapse_core_seeded(&k, &seeds)
        };
        if trace {
            json(&TraceJson::new(&k, &collapsed))
        } else {
            json(&ComplexJson::from(&collapsed.core))
        }
    } else {
        json(&ComplexJson::from(&k))
    };
    emit(&text, out)?;
    Ok(0)
}
