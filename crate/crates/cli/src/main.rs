mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use args::Output;

const EXIT_FAILED_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cfg = match args::parse_args(std::env::args_os()) {
        Ok(cfg) => cfg,
        // clap exits 0 for --help/--version and 2 for usage errors
        Err(e) => e.exit(),
    };
    let sc = match commands::load(&cfg.source) {
        Ok(sc) => sc,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = commands::run(&cfg, &sc);
    let rendered = match cfg.output {
        Output::Json => render::json(&outcome.report),
        Output::Text => render::text(&outcome.report),
    };
    if let Err(e) = std::io::stdout().lock().write_all(rendered.as_bytes()) {
        eprintln!("error: writing report: {e}");
        return ExitCode::FAILURE;
    }
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("one or more checks failed");
        ExitCode::from(EXIT_FAILED_CHECK)
    }
}
