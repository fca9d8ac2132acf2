use clap::Parser;
use primorial_cli::args::Cli;
use primorial_cli::{run, RunConfig};

fn main() {
    let config = RunConfig::from(Cli::parse());
    match run(&config) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            std::process::exit(outcome.status);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.status);
        }
    }
}
