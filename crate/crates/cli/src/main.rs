mod cli;
mod cmd;
mod error;
mod report;
mod spec;

use clap::Parser;

use cli::{Cli, Command};
use error::CliError;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = dispatch(&cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.exit_code());
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Gen(args) => cmd::gen::run(cli, args),
        Command::Analyze(args) => cmd::analyze::run(cli, args),
        Command::Burn(args) => cmd::burn::run(cli, args),
        Command::Verify(args) => cmd::verify::run(cli, args),
    }
}
