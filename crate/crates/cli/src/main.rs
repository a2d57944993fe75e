use std::process::ExitCode;

use clap::Parser;
use cremona_cli::{run_command, Command, Format, EXIT_USAGE};

/// Exact certificates for Jonquieres subgroups of the plane Cremona group.
///
/// Exit codes: 0 verified, 1 a check failed, 2 malformed input.
#[derive(Parser)]
#[command(name = "cremona", version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run_command(&cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.0);
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
