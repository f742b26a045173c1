mod commands;
mod config;

use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;
use serde::Serialize;

use commands::Failure;
use config::{Command, RunConfig};

#[derive(Serialize)]
struct Timing {
    timestamp: u64,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct Report<'a> {
    tool: String,
    config: &'a RunConfig,
    result: serde_json::Value,
    timing: Timing,
}

fn load_replay(path: &std::path::Path) -> Result<RunConfig, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::usage(e.to_string()))?;
    let config = value.get("config").cloned().unwrap_or(value);
    let config: RunConfig = serde_json::from_value(config).map_err(|e| Failure::usage(e.to_string()))?;
    if matches!(config.command, Command::Replay { .. }) {
        return Err(Failure::usage("a replay config cannot itself be a replay".into()));
    }
    Ok(config)
}

fn run(cli: RunConfig) -> Result<u8, Failure> {
    let (config, out) = match &cli.command {
        Command::Replay { config } => (load_replay(config)?, cli.out.clone()),
        _ => (cli.clone(), cli.out.clone()),
    };
    let start = Instant::now();
    let (result, code) = commands::dispatch(&config)?;
    let report = Report {
        tool: format!("walkhde {}", env!("CARGO_PKG_VERSION")),
        config: &config,
        result,
        timing: Timing {
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            elapsed_ms: start.elapsed().as_millis(),
        },
    };
    let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    match out {
        Some(path) => std::fs::write(&path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    if config.verbose > 0 {
        eprintln!("done in {} ms, exit {code}", start.elapsed().as_millis());
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = RunConfig::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
