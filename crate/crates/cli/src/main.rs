use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Finds `--input`/`-i` without a full parse; `run` validates arguments.
fn input_path(args: &[String]) -> Option<PathBuf> {
    let mut it = args.iter().skip(1);
    while let Some(a) = it.next() {
        if a == "--input" || a == "-i" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--input=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let wants_input = !args.iter().any(|a| a == "--help" || a == "-h" || a == "--version" || a == "-V" || a == "help")
        && args.len() > 1;
    let mut input = Vec::new();
    if wants_input {
        let read = match input_path(&args) {
            Some(p) if p.as_os_str() != "-" => std::fs::read(&p).map(|b| input = b),
            _ => std::io::stdin().read_to_end(&mut input).map(|_| ()),
        };
        if let Err(e) = read {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(2);
        }
    }
    let (code, out, err) = toric_hyper_cli::run(&args, &input);
    let _ = std::io::stdout().write_all(&out);
    let _ = std::io::stderr().write_all(&err);
    ExitCode::from(code as u8)
}
