mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;
use lieder_core::Error;
use serde_json::json;

use args::Cli;

const PROPERTY_FAILED: u8 = 1;
const INPUT_ERROR: u8 = 2;
const CAP_EXCEEDED: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => CAP_EXCEEDED,
        Error::NotADerivation { .. }
        | Error::WitnessVerificationFailed(_)
        | Error::ExpectedMismatch { .. }
        | Error::InternalInconsistency(_) => PROPERTY_FAILED,
        _ => INPUT_ERROR,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { 0 });
        }
    };
    let result = input::tuple_cap().and_then(|cap| commands::run(&cli.command, cap));
    match result {
        Ok(out) => {
            if cli.json && out.json_lines {
                for row in out.json.as_array().into_iter().flatten() {
                    println!("{row}");
                }
            } else if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { PROPERTY_FAILED })
        }
        Err(e) => {
            let code = exit_code(&e);
            eprintln!("error: {e}");
            if cli.json {
                println!("{}", json!({"error": e.to_string(), "exit_code": code}));
            }
            ExitCode::from(code)
        }
    }
}
