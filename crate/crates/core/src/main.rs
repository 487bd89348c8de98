use clap::Parser;

fn main() {
    let cli = genvir::cli::Cli::parse();
    std::process::exit(genvir::cli::main_with(cli));
}
