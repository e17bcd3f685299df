use std::process::ExitCode;

fn main() -> ExitCode {
    catenum::cli::main()
}
