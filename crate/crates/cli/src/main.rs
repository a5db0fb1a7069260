use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;

fn main() -> anyhow::Result<ExitCode> {
    let result = orbicurve_cli::run(std::env::args_os());
    for d in &result.diagnostics {
        eprint!("{d}");
        if !d.ends_with('\n') {
            eprintln!();
        }
    }
    let text = result.render();
    match result.out_path() {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {path}"))?,
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    Ok(ExitCode::from(result.exit_code() as u8))
}
