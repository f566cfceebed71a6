use std::process::ExitCode;

use clap::Parser;
use flagcode_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match flagcode_cli::run(cli) {
        Ok(status) => ExitCode::from(status.code()),
        Err(err) => {
            eprintln!("error: {err:#}");
            let verification_failure = err
                .downcast_ref::<flagcode::Error>()
                .is_some_and(|e| matches!(e, flagcode::Error::ConstructionCheck(_)));
            ExitCode::from(if verification_failure { 1 } else { 2 })
        }
    }
}
