use clap::Parser;

fn main() {
    let cli = pseudoroot_cli::Cli::parse();
    std::process::exit(pseudoroot_cli::run(&cli));
}
