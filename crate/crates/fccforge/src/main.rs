use std::process::ExitCode;

fn main() -> ExitCode {
    fccforge::cli::run()
}
