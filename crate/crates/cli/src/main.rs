//! `mps`: generate graphs, build and verify multipath spanners, run LOCAL
//! simulations and print benchmark tables.

mod args;
mod bench;
mod build;
mod gen;
mod io;
mod sim;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen::run(&a),
        Command::Build(a) => build::run(&a),
        Command::Verify(a) => verify::run(&a),
        Command::Sim(a) => sim::run(&a),
        Command::Bench(a) => bench::run(&a),
    };
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(io::exit_code_for(&e) as u8)
        }
    }
}
