use std::process::ExitCode;

fn main() -> ExitCode {
    qgrass::run(std::env::args_os())
}
