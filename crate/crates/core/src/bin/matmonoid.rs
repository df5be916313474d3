use std::io;
use std::process::ExitCode;

use matmonoid::cli::{run, ENUM_LIMIT_VAR};

fn main() -> ExitCode {
    let limit = std::env::var(ENUM_LIMIT_VAR).ok();
    let code = run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        limit.as_deref(),
    );
    ExitCode::from(code as u8)
}
