use std::process::ExitCode;

use clap::Parser;
use qta_cli::{execute, Cli, Outcome, Settings};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = Settings::from_env().and_then(|settings| execute(&cli.command, &settings));
    match outcome {
        Ok(Outcome::Text(text)) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(report)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
