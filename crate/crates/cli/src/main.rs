use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use logchern_cli::{emit_json, emit_text, CliError, Context, Registry, TextOptions};

#[derive(Parser, Debug)]
#[command(name = "logchern", version, about = "Exact Chern classes of log tangent bundles, strata and blowups")]
struct Args {
    /// One of: blowup, catalog, check-integrality, logchern, strata,
    /// verify-cor15, verify-grr, verify-logpullback, verify-split.
    command: String,
    /// Space reference (`catalog:NAME` or a file) followed by object names.
    args: Vec<String>,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Include the blowup ring presentation and Betti numbers.
    #[arg(long)]
    emit_ring: bool,
    /// Hide class components above this real degree in text output.
    #[arg(long, value_name = "N")]
    max_degree: Option<u32>,
    /// Directory of extra `*.space` files, reachable as `catalog:NAME`.
    #[arg(long, value_name = "PATH", env = "LOGCHERN_CATALOG")]
    catalog_dir: Vec<PathBuf>,
    /// Record the elapsed time in the report (output is then not reproducible).
    #[arg(long)]
    timing: bool,
}

fn error_json(e: &CliError) -> String {
    let mut obj = serde_json::json!({ "error": { "code": e.code().as_str(), "message": e.to_string() } });
    if let Some((line, column)) = e.position() {
        obj["error"]["line"] = line.into();
        obj["error"]["column"] = column.into();
    }
    format!("{}\n", serde_json::to_string_pretty(&obj).expect("json"))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let ctx = Context { emit_ring: args.emit_ring, catalog_dirs: args.catalog_dir.clone() };
    let start = Instant::now();
    match Registry::standard().run(&args.command, &ctx, &args.args) {
        Ok(mut report) => {
            if args.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            if args.json {
                print!("{}", emit_json(&report));
            } else {
                print!("{}", emit_text(&report, TextOptions { max_degree: args.max_degree }));
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            if args.json {
                print!("{}", error_json(&e));
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
