use clap::Parser;

fn main() {
    let args = singlet_cli::Args::parse();
    std::process::exit(singlet_cli::run(args));
}
