use std::io::{self, IsTerminal};
use std::process::ExitCode;

fn main() -> ExitCode {
    let interactive = io::stdout().is_terminal();
    let code = hypercover_cli::run(
        std::env::args_os(),
        interactive,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
