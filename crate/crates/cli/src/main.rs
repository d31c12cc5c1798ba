use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use dqa_cli::{execute, Args};

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    env_logger::Builder::new()
        .parse_filters(&args.log_level)
        .format_timestamp(None)
        .init();

    match std::panic::catch_unwind(|| execute(&args)) {
        Ok(Ok(a)) => {
            log::info!("wrote {} measures to {}", a.measures.len(), args.out.display());
            ExitCode::SUCCESS
        }
        Ok(Err(e)) => {
            eprintln!("dqa: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
        Err(_) => {
            eprintln!("dqa: internal error");
            ExitCode::from(2)
        }
    }
}
