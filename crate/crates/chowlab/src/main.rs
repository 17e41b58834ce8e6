use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = chowlab::cli::Cli::parse();
    std::process::ExitCode::from(chowlab::cli::run(cli))
}
