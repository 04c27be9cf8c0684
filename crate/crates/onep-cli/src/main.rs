//! `onep` binary: forwards to [`onep_cli::run`].

use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = onep_cli::run(std::env::args(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(u8::try_from(code).unwrap_or(u8::MAX))
}
