use std::process::ExitCode;

use specht::cli;

fn main() -> ExitCode {
    match cli::threads_from_env() {
        Ok(Some(k)) => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
                eprintln!("error: cannot start {k} worker threads: {e}");
                return ExitCode::from(cli::EXIT_USAGE as u8);
            }
        }
        Ok(None) => {}
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(cli::EXIT_USAGE as u8);
        }
    }
    let code = cli::run(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
