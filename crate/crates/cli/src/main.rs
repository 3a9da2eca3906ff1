use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = braidforge_cli::run(std::env::args_os());
    if let Some(msg) = &outcome.diagnostic {
        eprintln!("{msg}");
    }
    let out = outcome.stdout();
    if !out.is_empty() {
        // a closed pipe is not worth a panic
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(outcome.exit_code as u8)
}
