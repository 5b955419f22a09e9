use std::process::ExitCode;

use clap::Parser;

use rackcoh_cli::{init_threads, run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = match init_threads().and_then(|()| run(&config)) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let rendered = outcome.render(config.format);
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::from(outcome.exit_code() as u8)
}
