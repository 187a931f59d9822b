use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(resdom::cli::run(std::env::args_os()))
}
