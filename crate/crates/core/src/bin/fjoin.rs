use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let stdin = io::stdin().lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let status = fjoin::cli::run(&args, stdin, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    ExitCode::from(status)
}
