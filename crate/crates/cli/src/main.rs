//! `cembed`: orbit, modality, smoothness and tangent-space reports for
//! canonical and general affine embeddings of `G/Ru(P)`.

mod report;
mod request;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use serde_json::json;

use report::{Failure, SCHEMA_VERSION};
use request::{Command, Format, Request, PRESETS_ENV};

#[derive(Parser, Debug)]
#[command(name = "cembed", version, about)]
#[command(after_help = "Nodes use Bourbaki numbering, 1-based and counted across components in order.\n\
Presets are read from the JSON file named by CEMBED_PRESETS.")]
struct Cli {
    /// What to compute.
    #[arg(value_enum, required_unless_present = "preset")]
    command: Option<Command>,
    /// Group type, e.g. `E8` or `A3xA1`.
    #[arg(required_unless_present = "preset")]
    group: Option<String>,
    /// Levi nodes: comma list, `empty` or `full`.
    #[arg(long, allow_hyphen_values = true)]
    levi: Option<String>,
    /// Generator in fundamental coordinates, e.g. `1,0,2`; repeatable.
    #[arg(long = "gen", allow_hyphen_values = true)]
    generators: Vec<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Also run the face classification and compare it with the diagram one.
    #[arg(long)]
    crosscheck: bool,
    /// Load the request from the presets file instead.
    #[arg(long, conflicts_with_all = ["command", "group", "levi", "generators", "crosscheck"])]
    preset: Option<String>,
}

fn build_request(cli: Cli) -> Result<Request, Failure> {
    if let Some(name) = &cli.preset {
        let path = std::env::var_os(PRESETS_ENV)
            .map(PathBuf::from)
            .ok_or_else(|| Failure::Input(format!("--preset needs {PRESETS_ENV} to name a presets file")))?;
        let mut req = request::load_preset(&path, name).map_err(Failure::Input)?;
        if let Some(f) = cli.format {
            req.format = f;
        }
        return Ok(req);
    }
    let generators =
        cli.generators.iter().map(|g| request::parse_weight(g)).collect::<Result<_, _>>().map_err(Failure::Input)?;
    Ok(Request {
        command: cli.command.expect("required by clap"),
        group: cli.group.expect("required by clap"),
        levi: cli.levi,
        generators,
        format: cli.format.unwrap_or_default(),
        crosscheck: cli.crosscheck,
    })
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let req = build_request(cli)?;
    let outcome = report::run(&req)?;
    Ok(match req.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "request_echo": serde_json::to_value(&req).expect("requests serialize"),
                "result": outcome.result,
            });
            let mut text = serde_json::to_string_pretty(&doc).expect("values serialize");
            text.push('\n');
            text
        }
        Format::Table => outcome.table,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| execute(cli)) {
        Ok(Ok(text)) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Internal(msg))) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
        Err(_) => {
            eprintln!("internal error: computation panicked");
            ExitCode::from(1)
        }
    }
}
