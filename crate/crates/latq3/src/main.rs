use std::process;

use clap::Parser;

use latq3::cli::{exit_code_for, run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(exit_code_for(&err));
        }
    }
}
