use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = chord_census_cli::main_with_args(std::env::args_os(), &mut out);
    match out.flush() {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("chord-census: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::from(code),
    }
}
