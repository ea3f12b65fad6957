use std::process::ExitCode;

use bitop_cli::{run_args, EXIT_INVALID};

fn main() -> ExitCode {
    let out = run_args(std::env::args_os());
    if out.code == EXIT_INVALID {
        eprint!("{}", out.stdout);
    } else {
        print!("{}", out.stdout);
    }
    ExitCode::from(out.code as u8)
}
