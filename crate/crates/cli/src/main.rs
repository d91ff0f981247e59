use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use floorsq_cli::{run, Cli, Format};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.kind.code());
        }
    };
    let body = match (cli.format, &rendered.csv) {
        (Format::Csv, Some(csv)) => csv.as_str(),
        _ => rendered.json.as_str(),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if let Some(note) = &rendered.note {
        eprintln!("{note}");
    }
    ExitCode::from(rendered.exit.code())
}
