use std::process::ExitCode;

fn main() -> ExitCode {
    iwahori::cli::run(std::env::args_os())
}
