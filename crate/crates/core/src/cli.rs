//! Command-line front end.
//!
//! Exit codes: 0 success, 1 failed `check`, 2 usage error (bad flags,
//! unknown preset, unreadable or invalid scenario), 3 output I/O failure.

use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::check;
use crate::engine::{self, Trace};
use crate::plot;
use crate::presets;
use crate::stimulus::{Scenario, Terminal};

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gsdsim",
    version,
    about = "Gated-synaptic device transient simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simulate a preset or a scenario file and write the trace as CSV.
    Run(RunArgs),
    /// List the registered presets.
    List,
    /// Write a preset as an editable scenario file.
    Export {
        #[arg(long)]
        preset: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the invariant suite over the model and every preset.
    Check,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepTerminal {
    In,
    Gate,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(
        long,
        conflicts_with = "scenario",
        required_unless_present = "scenario"
    )]
    preset: Option<String>,
    #[arg(long)]
    scenario: Option<PathBuf>,
    /// CSV output path.
    #[arg(long)]
    out: PathBuf,
    /// Optional SVG plot path.
    #[arg(long)]
    plot: Option<PathBuf>,
    /// Step override in seconds.
    #[arg(long, env = "GSDSIM_DT")]
    dt: Option<f64>,
    /// Treat the run as an I-V sweep on this terminal.
    #[arg(long, value_enum)]
    sweep: Option<SweepTerminal>,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl Failure {
    fn exit(self) -> i32 {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                EXIT_USAGE
            }
            Failure::Io(msg) => {
                eprintln!("error: {msg}");
                EXIT_IO
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::List => cmd_list(),
        Command::Export { preset, out } => cmd_export(&preset, out),
        Command::Check => return cmd_check(),
    };
    match result {
        Ok(()) => 0,
        Err(f) => f.exit(),
    }
}

fn load_scenario(args: &RunArgs) -> Result<Scenario, Failure> {
    if let Some(id) = &args.preset {
        return presets::get(id)
            .map(|p| p.scenario.clone())
            .map_err(|e| Failure::Usage(e.to_string()));
    }
    let path = args
        .scenario
        .as_ref()
        .expect("clap requires --preset or --scenario");
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Scenario::from_json(&text)
        .map_err(|e| Failure::Usage(format!("bad scenario file {}: {e}", path.display())))
}

fn cmd_run(args: RunArgs) -> Result<(), Failure> {
    let mut scenario = load_scenario(&args)?;
    if let Some(dt) = args.dt {
        scenario.dt = dt;
    }
    let mut trace: Trace = match args.sweep {
        None => engine::run(&scenario),
        Some(SweepTerminal::In) => engine::ivsweep(&scenario, Terminal::In),
        Some(SweepTerminal::Gate) => engine::ivsweep(&scenario, Terminal::Gate),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    trace.dt_override = args.dt;
    for w in &trace.warnings {
        eprintln!("warning: {w}");
    }

    let io_err =
        |e: std::io::Error| Failure::Io(format!("cannot write {}: {e}", args.out.display()));
    let file = File::create(&args.out).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    trace.write_csv(&mut w).map_err(io_err)?;
    w.flush().map_err(io_err)?;

    if let Some(path) = &args.plot {
        plot::write_svg(&trace, path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_list() -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (id, provenance) in presets::list() {
        match writeln!(out, "{id}\t{provenance}") {
            Ok(()) => {}
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
            Err(e) => return Err(Failure::Io(e.to_string())),
        }
    }
    Ok(())
}

fn cmd_export(id: &str, out: PathBuf) -> Result<(), Failure> {
    let preset = presets::get(id).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut text = preset.scenario.to_json();
    text.push('\n');
    fs::write(&out, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", out.display())))
}

fn cmd_check() -> i32 {
    let results = check::run_all();
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{status}  {:width$}  {}", r.name, r.detail);
    }
    match results.iter().find(|r| !r.passed) {
        None => 0,
        Some(r) => {
            eprintln!("check failed: {} ({})", r.name, r.detail);
            EXIT_CHECK_FAILED
        }
    }
}
