use clap::Parser;

use nhssh::cli::{run, Cli};

fn main() {
    // NHSSH_THREADS caps the worker pool used by grid sweeps.
    if let Ok(value) = std::env::var("NHSSH_THREADS") {
        match value.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => eprintln!("warning: ignoring invalid NHSSH_THREADS={value}"),
        }
    }
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
