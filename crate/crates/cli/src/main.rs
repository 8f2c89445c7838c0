use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use coordring_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return ExitCode::from(code);
        }
    };
    let echo = std::env::args()
        .skip(1)
        .filter(|a| a != "--json")
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, &echo) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.report.to_json());
            } else {
                print!("{}", out.report.to_text());
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
