use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, stdout, stderr) = flagk_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(stdout.as_bytes());
    let _ = std::io::stderr().write_all(stderr.as_bytes());
    ExitCode::from(code as u8)
}
