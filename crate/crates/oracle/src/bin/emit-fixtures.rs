//! Writes the exact fixture tables as JSON.
//!
//! Usage: `emit-fixtures [--seed N] [OUTPUT]` (stdout when OUTPUT is omitted).

use std::process::ExitCode;

use shifted_bezier_oracle::fixtures::{generate, DEFAULT_SEED};

fn main() -> ExitCode {
    let mut seed = DEFAULT_SEED;
    let mut output = None;
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        if arg == "--seed" {
            match args.next().and_then(|s| s.parse().ok()) {
                Some(s) => seed = s,
                None => {
                    eprintln!("emit-fixtures: --seed needs an unsigned integer");
                    return ExitCode::from(2);
                }
            }
        } else {
            output = Some(arg);
        }
    }
    let json = generate(seed).to_json();
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, json) {
                eprintln!("emit-fixtures: cannot write {path}: {e}");
                return ExitCode::FAILURE;
            }
        }
        None => print!("{json}"),
    }
    ExitCode::SUCCESS
}
