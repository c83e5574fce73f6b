use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_format = std::env::var("GROSS_FORMAT").ok();
    let code = gross_cli::run(
        std::env::args_os(),
        env_format.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
