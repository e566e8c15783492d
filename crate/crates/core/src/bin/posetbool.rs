use std::io::{IsTerminal, Read, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let mut stdin = String::new();
    let wants_stdin = argv.iter().skip(2).any(|a| a == "-");
    if wants_stdin && !std::io::stdin().is_terminal() {
        if let Err(e) = std::io::stdin().read_to_string(&mut stdin) {
            eprintln!("error: cannot read stdin: {e}");
            return ExitCode::from(1);
        }
    }
    let out = poset_bool::cli::run_command(&argv, &stdin);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
