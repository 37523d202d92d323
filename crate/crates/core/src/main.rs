use clap::Parser;
use krullkit::cli::{render, run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    let out = render(&outcome, cli.global.json);
    if outcome.exit_code >= 2 && !cli.global.json {
        eprintln!("{out}");
    } else {
        println!("{out}");
    }
    std::process::exit(outcome.exit_code);
}
